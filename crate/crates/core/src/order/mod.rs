//! The twisted weak order `≤_B`: twisted length, covers, comparisons, chains,
//! intervals, lower bounds and meets.

mod hasse;
mod semilattice;

use std::cell::OnceCell;
use std::collections::BTreeSet;

pub use hasse::{hasse, HasseGraph, HasseNode};
pub use semilattice::{check_meet_semilattice, SemilatticeReport};

use crate::closure::Biclosed;
use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::roots::Root;
use crate::system::CoxeterSystem;
use crate::words::{classify_affine, greedy_inversion_element, Classification, PeriodicWord};

/// A reduced word, finite or infinite, whose inversion set is `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InversionWitness {
    Finite(GroupElement),
    Infinite(PeriodicWord),
}

impl InversionWitness {
    fn letter(&self, i: usize) -> Option<usize> {
        match self {
            InversionWitness::Finite(w) => w.word().get(i).copied(),
            InversionWitness::Infinite(x) => Some(x.letter(i)),
        }
    }
}

/// Up and down covers of an element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Covers {
    pub up: Vec<GroupElement>,
    pub down: Vec<GroupElement>,
}

const LOWER_BOUND_STEPS: usize = 1 << 16;

/// `≤_B` for a fixed biclosed set `B`.
#[derive(Clone, Debug)]
pub struct TwistedOrder {
    sys: CoxeterSystem,
    b: Biclosed,
    witness: OnceCell<std::result::Result<InversionWitness, Error>>,
}

impl TwistedOrder {
    pub fn new(sys: &CoxeterSystem, b: Biclosed) -> Self {
        TwistedOrder { sys: sys.clone(), b, witness: OnceCell::new() }
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.sys
    }

    pub fn biclosed(&self) -> &Biclosed {
        &self.b
    }

    /// The order for `Φ̃⁺ ∖ B`, which is the reverse of this one.
    pub fn dual(&self) -> TwistedOrder {
        TwistedOrder::new(&self.sys, Biclosed::complement(self.b.clone()))
    }

    fn in_b(&self, r: &Root) -> bool {
        self.b.has(&self.sys, r)
    }

    /// `l_B(w) = l(w) − 2|Φ_w ∩ B|`.
    pub fn tlen(&self, w: &GroupElement) -> i64 {
        let hits = self
            .sys
            .inversions_along_word(w)
            .iter()
            .filter(|r| self.in_b(r))
            .count();
        w.length() as i64 - 2 * hits as i64
    }

    /// Whether `ws` is an up-cover of `w`.
    pub fn is_up(&self, w: &GroupElement, s: usize) -> bool {
        let r = self.sys.image_of_simple(w, s);
        if r.is_positive() {
            !self.in_b(&r)
        } else {
            self.in_b(&r.neg())
        }
    }

    pub fn covers(&self, w: &GroupElement) -> Covers {
        let (mut up, mut down) = (Vec::new(), Vec::new());
        for s in 0..self.sys.num_generators() {
            let ws = self.sys.mul_gen(w, s);
            if self.is_up(w, s) {
                up.push(ws);
            } else {
                down.push(ws);
            }
        }
        up.sort();
        down.sort();
        Covers { up, down }
    }

    /// `Φ_x ∖ Φ_y ⊆ B` and `(Φ_y ∖ Φ_x) ∩ B = ∅`.
    pub fn le(&self, x: &GroupElement, y: &GroupElement) -> bool {
        let px = self.sys.inversion_set_btree(x);
        let py = self.sys.inversion_set_btree(y);
        px.difference(&py).all(|r| self.in_b(r)) && py.difference(&px).all(|r| !self.in_b(r))
    }

    fn require_le(&self, x: &GroupElement, y: &GroupElement) -> Result<()> {
        if self.le(x, y) {
            Ok(())
        } else {
            Err(Error::Order(format!(
                "{} is not below {}",
                x.display(&self.sys),
                y.display(&self.sys)
            )))
        }
    }

    /// The cover chain `x · (prefixes of x⁻¹y)`.
    pub fn chain(&self, x: &GroupElement, y: &GroupElement) -> Result<Vec<GroupElement>> {
        self.require_le(x, y)?;
        let d = self.sys.mul(&self.sys.inverse(x)?, y)?;
        let mut out = vec![x.clone()];
        let mut cur = x.clone();
        for &s in d.word() {
            cur = self.sys.mul_gen(&cur, s);
            out.push(cur.clone());
        }
        Ok(out)
    }

    /// `[x, y]_B = x · [e, x⁻¹y]`, sorted by twisted length then ShortLex.
    pub fn interval(&self, x: &GroupElement, y: &GroupElement) -> Result<Vec<GroupElement>> {
        self.require_le(x, y)?;
        let d = self.sys.mul(&self.sys.inverse(x)?, y)?;
        let mut out: Vec<GroupElement> = self
            .sys
            .weak_lower_interval(&d)
            .iter()
            .map(|p| self.sys.mul(x, p).expect("same system"))
            .collect();
        self.sort(&mut out);
        Ok(out)
    }

    pub(crate) fn sort(&self, v: &mut [GroupElement]) {
        v.sort_by_cached_key(|w| (self.tlen(w), w.clone()));
    }

    /// A reduced word with inversion set `B`, if `B` is of inversion type.
    pub fn inversion_witness(&self) -> Result<&InversionWitness> {
        self.witness
            .get_or_init(|| self.find_witness())
            .as_ref()
            .map_err(Clone::clone)
    }

    fn find_witness(&self) -> Result<InversionWitness> {
        let sys = &self.sys;
        match &self.b {
            Biclosed::InvSet(w) => return Ok(InversionWitness::Finite(w.clone())),
            Biclosed::InfWord(x) => return Ok(InversionWitness::Infinite(x.clone())),
            _ => {}
        }
        if sys.is_affine() {
            return match classify_affine(sys, &self.b) {
                Ok(Classification::Finite(x)) => Ok(InversionWitness::Finite(x)),
                Ok(Classification::Infinite(x)) => Ok(InversionWitness::Infinite(x)),
                Ok(Classification::Neither(p, q)) => Err(Error::Unsupported(format!(
                    "B is not an inversion set: it contains {p} and {q}"
                ))),
                Err(e) => Err(Error::Unsupported(format!("B is not an inversion set: {e}"))),
            };
        }
        let x = greedy_inversion_element(sys, &self.b, 0);
        if sys.inversion_set_btree(&x) == self.b.members_up_to(sys, 0) {
            Ok(InversionWitness::Finite(x))
        } else {
            Err(Error::Unsupported("B is not an inversion set".into()))
        }
    }

    /// Shortest prefix `z` of the witness word with `Φ_z ⊇ (Φ_x ∪ Φ_y) ∩ B`.
    pub fn lower_bound(&self, x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
        let w = self.inversion_witness()?;
        let mut target: BTreeSet<Root> = self.sys.inversion_set_btree(x);
        target.extend(self.sys.inversion_set_btree(y));
        target.retain(|r| self.in_b(r));
        let mut z = self.sys.identity();
        let mut i = 0;
        while !target.is_empty() {
            let Some(s) = w.letter(i) else {
                return Err(Error::Inconclusive("witness word ended before covering B".into()));
            };
            target.remove(&self.sys.image_of_simple(&z, s));
            z = self.sys.mul_gen(&z, s);
            i += 1;
            if i > LOWER_BOUND_STEPS {
                return Err(Error::Resource("lower bound search exceeded its step limit".into()));
            }
        }
        Ok(z)
    }

    /// Ordinary weak-order meet by greedy common-prefix growth.
    fn weak_meet(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        let mut m = self.sys.identity();
        'grow: loop {
            for s in 0..self.sys.num_generators() {
                let r = self.sys.image_of_simple(&m, s);
                if r.is_positive() && x.inverts(&r) && y.inverts(&r) {
                    m = self.sys.mul_gen(&m, s);
                    continue 'grow;
                }
            }
            return m;
        }
    }

    /// Greatest lower bound: `z · (z⁻¹x ∧ z⁻¹y)` with `z` the lower bound above,
    /// checked to be a common lower bound none of whose up-covers is one.
    pub fn meet(&self, x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
        if let Some((p, q)) = self.bad_pair_below(x, y) {
            return Err(Error::Order(format!(
                "no common lower bound: every lower bound would invert {p} and {q}"
            )));
        }
        let z = self.lower_bound(x, y)?;
        let zi = self.sys.inverse(&z)?;
        let m = self.weak_meet(&self.sys.mul(&zi, x)?, &self.sys.mul(&zi, y)?);
        let m = self.sys.mul(&z, &m)?;
        self.verify_meet(&m, x, y)?;
        Ok(m)
    }

    /// Least upper bound, as the meet for the complementary set.
    pub fn join(&self, x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
        self.dual().meet(x, y)
    }

    fn verify_meet(&self, m: &GroupElement, x: &GroupElement, y: &GroupElement) -> Result<()> {
        let lower = |v: &GroupElement| self.le(v, x) && self.le(v, y);
        if !lower(m) || self.covers(m).up.iter().any(lower) {
            return Err(Error::Inconclusive("meet candidate failed verification".into()));
        }
        Ok(())
    }

    /// `(α + kδ, −α + tδ) ⊆ (Φ_x ∪ Φ_y) ∩ B`, preferring `k > 0`: a lower bound `v` would contain both
    /// in the finite 2-closed set `Φ_v`, together with `α + (k + j(k+t))δ` for all `j`.
    pub fn bad_pair_below(&self, x: &GroupElement, y: &GroupElement) -> Option<(Root, Root)> {
        self.bad_pair_at(x, y, 1).or_else(|| self.bad_pair_at(x, y, 0))
    }

    pub(crate) fn bad_pair_at(&self, x: &GroupElement, y: &GroupElement, min_level: i64) -> Option<(Root, Root)> {
        if !self.sys.is_affine() {
            return None;
        }
        let mut s: BTreeSet<Root> = self.sys.inversion_set_btree(x);
        s.extend(self.sys.inversion_set_btree(y));
        s.retain(|r| self.in_b(r));
        s.iter().find_map(|p| {
            let fp = p.finite_part();
            if !fp.is_positive() || p.level() < min_level {
                return None;
            }
            s.iter()
                .find(|q| q.finite_part() == fp.neg())
                .map(|q| (p.clone(), q.clone()))
        })
    }

    /// Maximal common lower bounds of `x, y` inside `ball(radius)`.
    pub fn maximal_lower_bounds(&self, x: &GroupElement, y: &GroupElement, radius: usize) -> Vec<GroupElement> {
        let lower: Vec<GroupElement> = self
            .sys
            .ball(radius)
            .into_iter()
            .filter(|v| self.le(v, x) && self.le(v, y))
            .collect();
        let mut out: Vec<GroupElement> = lower
            .iter()
            .filter(|v| !lower.iter().any(|u| u != *v && self.le(v, u)))
            .cloned()
            .collect();
        self.sort(&mut out);
        out
    }

    /// Meet found by exhaustive search in `ball(radius)`; usable for any `B` but
    /// only conclusive when the search bound is known to suffice.
    pub fn bounded_meet(&self, x: &GroupElement, y: &GroupElement, radius: usize) -> Result<GroupElement> {
        let max = self.maximal_lower_bounds(x, y, radius);
        match max.len() {
            0 => Err(Error::NoBound { radius, what: "common lower bound".into() }),
            1 => Ok(max.into_iter().next().expect("one element")),
            k => Err(Error::Inconclusive(format!("{k} maximal common lower bounds within ball({radius})"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(t: &str) -> CoxeterSystem {
        CoxeterSystem::from_type(t).unwrap()
    }

    fn w(s: &CoxeterSystem, word: &[usize]) -> GroupElement {
        s.from_word(word).unwrap()
    }

    #[test]
    fn twisted_lengths() {
        let a1 = sys("A~1");
        let o = TwistedOrder::new(&a1, Biclosed::hat_of_negative(&a1));
        assert_eq!(o.tlen(&w(&a1, &[1])), -1);
        assert_eq!(o.tlen(&w(&a1, &[1, 0])), -2);
        assert_eq!(o.tlen(&w(&a1, &[0, 1, 0])), 3);
        let e = TwistedOrder::new(&a1, Biclosed::empty());
        assert_eq!(e.tlen(&w(&a1, &[0, 1, 0])), 3);
        let a2 = sys("A2");
        let b = Biclosed::explicit(&a2, [Root::finite(vec![1, 0])]).unwrap();
        assert_eq!(TwistedOrder::new(&a2, b).tlen(&w(&a2, &[0])), -1);
    }

    #[test]
    fn cover_examples() {
        let a1 = sys("A~1");
        let o = TwistedOrder::new(&a1, Biclosed::hat_of_negative(&a1));
        let c = o.covers(&a1.identity());
        assert_eq!(c.up, vec![w(&a1, &[0])]);
        assert_eq!(c.down, vec![w(&a1, &[1])]);
        let a2 = sys("A2");
        let b = Biclosed::explicit(&a2, [Root::finite(vec![1, 0])]).unwrap();
        let o = TwistedOrder::new(&a2, b);
        let c = o.covers(&w(&a2, &[0]));
        assert_eq!(c.up, vec![a2.identity(), w(&a2, &[0, 1])]);
        assert!(c.down.is_empty());
    }

    #[test]
    fn comparisons_and_chains() {
        let a1 = sys("A~1");
        let o = TwistedOrder::new(&a1, Biclosed::hat_of_negative(&a1));
        assert!(o.le(&w(&a1, &[1, 0]), &w(&a1, &[0, 1, 0])));
        assert_eq!(
            o.chain(&w(&a1, &[1]), &w(&a1, &[0])).unwrap(),
            vec![w(&a1, &[1]), a1.identity(), w(&a1, &[0])]
        );
        assert_eq!(o.interval(&w(&a1, &[1, 0]), &w(&a1, &[0])).unwrap().len(), 4);
        assert!(o.chain(&w(&a1, &[0]), &w(&a1, &[1])).is_err());

        let a2 = sys("A2");
        let b = Biclosed::explicit(&a2, [Root::finite(vec![1, 0])]).unwrap();
        let o = TwistedOrder::new(&a2, b);
        assert!(!o.le(&a2.identity(), &w(&a2, &[0, 1])));
        assert_eq!(
            o.interval(&w(&a2, &[0]), &w(&a2, &[1])).unwrap(),
            vec![w(&a2, &[0]), a2.identity(), w(&a2, &[1])]
        );
        let e = TwistedOrder::new(&a2, Biclosed::empty());
        assert_eq!(
            e.chain(&a2.identity(), &w(&a2, &[0, 1])).unwrap(),
            vec![a2.identity(), w(&a2, &[0]), w(&a2, &[0, 1])]
        );
    }

    #[test]
    fn lower_bounds_and_meets() {
        let a1 = sys("A~1");
        let o = TwistedOrder::new(&a1, Biclosed::hat_of_negative(&a1));
        assert_eq!(o.lower_bound(&w(&a1, &[0]), &a1.identity()).unwrap(), a1.identity());
        assert_eq!(o.lower_bound(&w(&a1, &[1, 0]), &w(&a1, &[1])).unwrap(), w(&a1, &[1, 0]));
        assert_eq!(o.meet(&w(&a1, &[0]), &w(&a1, &[1])).unwrap(), w(&a1, &[1]));
        assert_eq!(o.join(&w(&a1, &[0]), &w(&a1, &[1])).unwrap(), w(&a1, &[0]));

        let a2 = sys("A2");
        let b = Biclosed::explicit(&a2, [Root::finite(vec![1, 0])]).unwrap();
        let o = TwistedOrder::new(&a2, b);
        assert_eq!(o.lower_bound(&w(&a2, &[1]), &w(&a2, &[0, 1])).unwrap(), w(&a2, &[0]));
        assert_eq!(o.meet(&w(&a2, &[1]), &w(&a2, &[0, 1])).unwrap(), w(&a2, &[0]));
    }

    #[test]
    fn no_meet_for_bad_pairs() {
        let a1 = sys("A~1");
        let o = TwistedOrder::new(&a1, Biclosed::full());
        let x = a1.reflection(&Root::new(vec![1], 1)).unwrap();
        let y = a1.generator(1).unwrap();
        assert!(matches!(o.meet(&x, &y), Err(Error::Order(_))));
        assert!(matches!(o.bounded_meet(&x, &y, 9), Err(Error::NoBound { .. })));
    }
}
