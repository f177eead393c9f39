//! Eventually periodic infinite reduced words `p·c^∞`, straight translations,
//! the finite root set `I_B`, and the affine trichotomy for biclosed sets.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Rational64;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::closure::{psi_contains, weyl_group, Biclosed};
use crate::error::{domain, Error, Result};
use crate::group::{GroupElement, Word};
use crate::roots::Root;
use crate::system::CoxeterSystem;

const MAX_WEYL_ORDER: usize = 1 << 12;

/// A validated infinite reduced word `prefix · period^∞`.
#[derive(Clone, Debug)]
pub struct PeriodicWord {
    prefix: Word,
    period: Word,
    p: GroupElement,
    c: GroupElement,
    weyl_order: usize,
    /// `c^m = t_μ` with `m` the order of the Weyl part of `c`.
    mu: Vec<Rational64>,
}

impl PartialEq for PeriodicWord {
    fn eq(&self, other: &Self) -> bool {
        self.prefix == other.prefix && self.period == other.period
    }
}

impl Eq for PeriodicWord {}

impl PeriodicWord {
    /// Checks `l(prefix·period^k) = l(prefix) + k·l(period)` for `k ≤ 2m`, and
    /// that no inversion of `prefix⁻¹` is ever inverted by the tail.
    pub fn validate(sys: &CoxeterSystem, prefix: &[usize], period: &[usize]) -> Result<Self> {
        if period.is_empty() {
            return domain("an infinite word needs a nonempty period");
        }
        let p = sys.from_word(prefix)?;
        if p.length() != prefix.len() {
            return Err(Error::NotReduced { k: 0 });
        }
        let c = sys.from_word(period)?;
        if c.length() != period.len() {
            return Err(Error::NotReduced { k: 1 });
        }
        let ubar = sys.weyl_part(&c)?;
        let mut m = 1;
        let mut pow = ubar.clone();
        while !pow.is_identity() {
            pow = sys.mul(&pow, &ubar)?;
            m += 1;
            if m > MAX_WEYL_ORDER {
                return Err(Error::Resource("Weyl part order too large".into()));
            }
        }
        let mut x = p.clone();
        let mut cm = sys.identity();
        for k in 1..=2 * m {
            x = sys.mul(&x, &c)?;
            if k <= m {
                cm = sys.mul(&cm, &c)?;
            }
            if x.length() != prefix.len() + k * period.len() {
                return Err(Error::NotReduced { k });
            }
        }
        let mu = sys
            .translation_vector(&cm)
            .ok_or_else(|| Error::NotReduced { k: m })?;
        let word = PeriodicWord {
            prefix: prefix.to_vec(),
            period: period.to_vec(),
            p,
            c,
            weyl_order: m,
            mu,
        };
        let pinv = sys.inverse(&word.p)?;
        if sys
            .inversion_set(&pinv)
            .iter()
            .any(|r| word.tail_contains(sys, r))
        {
            // some later power loses length; report the first one
            let mut x = word.p.clone();
            let mut k = 0;
            while k < MAX_WEYL_ORDER * 64 {
                k += 1;
                x = sys.mul(&x, &word.c)?;
                if x.length() != prefix.len() + k * period.len() {
                    return Err(Error::NotReduced { k });
                }
            }
            return Err(Error::Resource("length defect not located".into()));
        }
        Ok(word)
    }

    pub fn prefix(&self) -> &[usize] {
        &self.prefix
    }

    pub fn period(&self) -> &[usize] {
        &self.period
    }

    pub fn prefix_element(&self) -> &GroupElement {
        &self.p
    }

    pub fn period_element(&self) -> &GroupElement {
        &self.c
    }

    /// Order of the Weyl part of the period.
    pub fn weyl_order(&self) -> usize {
        self.weyl_order
    }

    /// `μ` with `period^m = t_μ`.
    pub fn translation_part(&self) -> &[Rational64] {
        &self.mu
    }

    /// The `i`-th letter of the infinite word.
    pub fn letter(&self, i: usize) -> usize {
        if i < self.prefix.len() {
            self.prefix[i]
        } else {
            self.period[(i - self.prefix.len()) % self.period.len()]
        }
    }

    /// `ρ ∈ Φ_{c^∞} = hat{ζ : (ζ, μ) > 0}`.
    fn tail_contains(&self, sys: &CoxeterSystem, rho: &Root) -> bool {
        sys.pairing(rho, &self.mu) > Rational64::zero()
    }

    /// Membership in `Φ_x = Φ_p ⊎ p(Φ_{c^∞})`.
    pub fn contains(&self, sys: &CoxeterSystem, rho: &Root) -> bool {
        if self.p.inverts(rho) {
            return true;
        }
        let r = sys.act_inverse(&self.p, rho);
        self.tail_contains(sys, &r)
    }

    /// `I = p̄({ζ ∈ Φ : (ζ, μ) > 0})`.
    pub fn infinite_directions(&self, sys: &CoxeterSystem) -> BTreeSet<Root> {
        let pbar = sys.weyl_part(&self.p).expect("affine");
        sys.finite_roots()
            .into_iter()
            .filter(|z| self.tail_contains(sys, z))
            .map(|z| sys.act_unchecked(&pbar, &z))
            .collect()
    }

    /// Levels above this agree with `hat(I)`.
    pub(crate) fn tail_level(&self, sys: &CoxeterSystem) -> i64 {
        sys.level_shift(&self.p) + 1
    }

    /// The element spelled by the first `n` letters.
    pub fn prefix_of_length(&self, sys: &CoxeterSystem, n: usize) -> GroupElement {
        let w: Word = (0..n).map(|i| self.letter(i)).collect();
        sys.from_word(&w).expect("valid letters")
    }
}

impl fmt::Display for PeriodicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", csv(&self.prefix), csv(&self.period))
    }
}

pub(crate) fn csv(w: &[usize]) -> String {
    w.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

/// `t_γ^∞` for a nonzero coroot-lattice vector `γ`, together with the hat form
/// `hat{ζ : (ζ, γ) > 0}` describing its inversion set.
pub fn t_gamma_infinity(sys: &CoxeterSystem, gamma: &[Rational64]) -> Result<(Biclosed, PeriodicWord)> {
    if !sys.is_affine() {
        return domain("translations exist only in affine systems");
    }
    if gamma.iter().all(Zero::is_zero) {
        return domain("γ = 0 gives the empty word, not an infinite word");
    }
    let t = sys.translation(gamma)?;
    let word = PeriodicWord::validate(sys, &[], t.word())?;
    let (u, zeros) = dominant_chamber(sys, gamma);
    Ok((Biclosed::Hat { u, d1: zeros, d2: Vec::new() }, word))
}

/// `u` with `u⁻¹γ` dominant, and the simple roots orthogonal to `u⁻¹γ`.
fn dominant_chamber(sys: &CoxeterSystem, gamma: &[Rational64]) -> (GroupElement, Vec<usize>) {
    let n = sys.rank();
    let mut g = gamma.to_vec();
    let mut word = Vec::new();
    let simple = |i: usize| {
        let mut c = vec![0; n];
        c[i] = 1;
        Root::finite(c)
    };
    while let Some(i) = (0..n).find(|&i| sys.pairing(&simple(i), &g) < Rational64::zero()) {
        let a = simple(i);
        let f = Rational64::from(2) * sys.pairing(&a, &g) / sys.inner_product(&a, &a);
        g[i] -= f;
        word.push(i);
    }
    let zeros = (0..n)
        .filter(|&i| sys.pairing(&simple(i), &g).is_zero())
        .collect();
    (sys.from_word(&word).expect("finite generators"), zeros)
}

/// `I_B = {α ∈ Φ : α̂ ∩ B is infinite}`, sorted.
pub fn i_b(sys: &CoxeterSystem, b: &Biclosed) -> Result<BTreeSet<Root>> {
    if !sys.is_affine() {
        return domain("I_B is defined for affine systems");
    }
    Ok(match b {
        Biclosed::Explicit(_) | Biclosed::InvSet(_) => BTreeSet::new(),
        Biclosed::Hat { u, d1, d2 } => sys
            .finite_roots()
            .into_iter()
            .filter(|r| psi_contains(sys, u, d1, d2, r))
            .collect(),
        Biclosed::Twisted(w, inner) => {
            let wbar = sys.weyl_part(w)?;
            i_b(sys, inner)?
                .iter()
                .map(|r| sys.act_unchecked(&wbar, r))
                .collect()
        }
        Biclosed::InfWord(x) => x.infinite_directions(sys),
        Biclosed::Complement(inner) => {
            let inner = i_b(sys, inner)?;
            sys.finite_roots()
                .into_iter()
                .filter(|r| !inner.contains(r))
                .collect()
        }
    })
}

/// Outcome of the affine trichotomy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    /// `B = Φ_x` for a finite element.
    Finite(GroupElement),
    /// `B = Φ_x` for an infinite reduced word.
    Infinite(PeriodicWord),
    /// `B` contains `α + kδ` and `−α + tδ` with `k, t > 0`.
    Neither(Root, Root),
}

impl Classification {
    pub fn kind(&self) -> &'static str {
        match self {
            Classification::Finite(_) => "finite",
            Classification::Infinite(_) => "infinite",
            Classification::Neither(..) => "neither",
        }
    }

    pub fn to_json(&self) -> Value {
        let witness = match self {
            Classification::Finite(x) => json!(x.word()),
            Classification::Infinite(w) => json!({"prefix": w.prefix(), "period": w.period()}),
            Classification::Neither(a, b) => json!([a.coeff_level(), b.coeff_level()]),
        };
        json!({"kind": self.kind(), "witness": witness})
    }
}

/// Decides whether an affine biclosed set is a finite inversion set, the
/// inversion set of an infinite reduced word, or neither.
pub fn classify_affine(sys: &CoxeterSystem, b: &Biclosed) -> Result<Classification> {
    match b {
        Biclosed::InvSet(w) => return Ok(Classification::Finite(w.clone())),
        Biclosed::InfWord(x) => return Ok(Classification::Infinite(x.clone())),
        _ => {}
    }
    let i = i_b(sys, b)?;
    let tail = b.tail_level(sys);
    if i.iter().any(|r| i.contains(&r.neg())) {
        return bad_pair(sys, b, tail).map(|(p, q)| Classification::Neither(p, q));
    }
    if i.is_empty() {
        let x = greedy_inversion_element(sys, b, tail);
        let lhs = sys.inversion_set_btree(&x);
        let rhs: BTreeSet<Root> = sys
            .positive_roots_up_to(tail.max(0) as usize)
            .into_iter()
            .filter(|r| b.has(sys, r))
            .collect();
        if lhs != rhs {
            return Err(Error::Classification("finite set is not an inversion set, so not biclosed".into()));
        }
        return Ok(Classification::Finite(x));
    }
    infinite_witness(sys, b, &i, tail).map(Classification::Infinite)
}

/// Minimal `(α+kδ, −α+tδ) ⊆ B` with `k, t > 0`, by `k+t`, then `α`, then `k`.
fn bad_pair(sys: &CoxeterSystem, b: &Biclosed, tail: i64) -> Result<(Root, Root)> {
    let pos = sys.positive_roots_at_level(0);
    let max_sum = 2 * (tail.max(0) + 1) + 2;
    for s in 2..=max_sum {
        for a in &pos {
            for k in 1..s {
                let p = Root::new(a.coeffs.clone(), k);
                let q = Root::new(a.neg().coeffs, s - k);
                if b.has(sys, &p) && b.has(sys, &q) {
                    return Ok((p, q));
                }
            }
        }
    }
    Err(Error::Classification(format!("no bad pair up to level sum {max_sum}")))
}

/// Grows `x ↦ xs` while `x(α_s) ∈ B`, smallest generator first.
pub(crate) fn greedy_inversion_element(sys: &CoxeterSystem, b: &Biclosed, tail: i64) -> GroupElement {
    let cap = sys.positive_roots_up_to(tail.max(0) as usize).len();
    let mut x = sys.identity();
    'grow: while x.length() < cap {
        for s in 0..sys.num_generators() {
            let r = sys.image_of_simple(&x, s);
            if r.is_positive() && b.has(sys, &r) {
                x = sys.mul_gen(&x, s);
                continue 'grow;
            }
        }
        break;
    }
    x
}

const WITNESS_RADIUS: usize = 24;

/// For `I ∩ −I = ∅`, writes `I = u(Φ⁺ ∖ R≥0 Δ1)`, takes the straight
/// translation `T` with `Φ_{T^∞} = hat(I)`, finds `x` with `x·hat(I) = B`,
/// and lifts `x·T^j` until the word `x·T^j · T^∞` is reduced.
fn infinite_witness(sys: &CoxeterSystem, b: &Biclosed, i: &BTreeSet<Root>, tail: i64) -> Result<PeriodicWord> {
    let (u, d1) = find_positive_system(sys, i)?;
    let rest: Vec<usize> = (0..sys.rank()).filter(|k| !d1.contains(k)).collect();
    let lam = sys.minimal_dominant_coweight_for(&d1)?;
    debug_assert!(!rest.is_empty());
    let ubar_lam = apply_weyl_rational(sys, &u, &lam);
    let t = sys.translation(&ubar_lam)?;
    let c = Biclosed::Hat { u: u.clone(), d1: d1.clone(), d2: Vec::new() };

    let agrees = |x: &GroupElement| {
        let cand = Biclosed::twist(sys, x, c.clone());
        let level = tail.max(cand.tail_level(sys)).max(0) as usize;
        sys.positive_roots_up_to(level)
            .iter()
            .all(|r| cand.has(sys, r) == b.has(sys, r))
    };
    let x = sys
        .ball(WITNESS_RADIUS)
        .into_iter()
        .find(|x| agrees(x))
        .ok_or_else(|| Error::NoBound {
            radius: WITNESS_RADIUS,
            what: "element carrying hat(I) onto B".into(),
        })?;
    let mut p = x;
    for _ in 0..64 {
        if let Ok(word) = PeriodicWord::validate(sys, p.word(), t.word()) {
            return Ok(word);
        }
        p = sys.mul(&p, &t)?;
    }
    Err(Error::Classification("could not make the witness word reduced".into()))
}

/// `(u, Δ1)` with `I = u(Φ⁺ ∖ R≥0 Δ1)`.
fn find_positive_system(sys: &CoxeterSystem, i: &BTreeSet<Root>) -> Result<(GroupElement, Vec<usize>)> {
    let n = sys.rank();
    for u in weyl_group(sys) {
        let pulled: Vec<Root> = i.iter().map(|r| sys.act_inverse(&u, r)).collect();
        if !pulled.iter().all(Root::is_positive) {
            continue;
        }
        let d1: Vec<usize> = (0..n)
            .filter(|&k| !pulled.iter().any(|r| r.coeffs.iter().enumerate().all(|(j, &c)| c == i64::from(j == k))))
            .collect();
        let expected: BTreeSet<Root> = sys
            .positive_roots_at_level(0)
            .into_iter()
            .filter(|r| r.coeffs.iter().enumerate().any(|(j, &c)| c != 0 && !d1.contains(&j)))
            .collect();
        if expected == pulled.into_iter().collect::<BTreeSet<_>>() {
            return Ok((u, d1));
        }
    }
    Err(Error::Classification("I_B is not of the form u(Φ⁺ ∖ R≥0 Δ1); B is not biclosed".into()))
}

/// Applies the Weyl part of `u` to a rational vector over the simple roots.
fn apply_weyl_rational(sys: &CoxeterSystem, u: &GroupElement, v: &[Rational64]) -> Vec<Rational64> {
    let n = sys.rank();
    let m = u.matrix();
    let d = u.dim();
    (0..n)
        .map(|i| (0..n).map(|j| v[j] * Rational64::from(m[i * d + j])).sum())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn sys(t: &str) -> CoxeterSystem {
        CoxeterSystem::from_type(t).unwrap()
    }

    #[test]
    fn validation() {
        let a1 = sys("A~1");
        let w = PeriodicWord::validate(&a1, &[], &[0, 1]).unwrap();
        assert_eq!(w.weyl_order(), 1);
        assert!(matches!(PeriodicWord::validate(&a1, &[], &[0, 0]), Err(Error::NotReduced { .. })));
        assert!(matches!(PeriodicWord::validate(&sys("A2"), &[], &[0, 1]), Err(Error::NotReduced { .. })));
        // s_α · (s_α s_δ−α)^∞ cancels immediately
        assert!(matches!(PeriodicWord::validate(&a1, &[0], &[0, 1]), Err(Error::NotReduced { k: 1 })));
        let a2 = sys("A~2");
        assert!(PeriodicWord::validate(&a2, &[], &[0, 1, 2]).is_ok());
    }

    #[test]
    fn membership() {
        let a1 = sys("A~1");
        let w = PeriodicWord::validate(&a1, &[], &[0, 1]).unwrap();
        assert!(w.contains(&a1, &Root::new(vec![1], 5)));
        assert!(!w.contains(&a1, &Root::new(vec![-1], 1)));
        assert!(PeriodicWord::validate(&a1, &[1], &[1, 0]).is_err());
        // s_δ−α · (s_α s_δ−α)^∞ has Φ = {δ−α} ⊎ s_δ−α(hat{α}) = hat{−α}
        let v = PeriodicWord::validate(&a1, &[1], &[0, 1]).unwrap();
        assert!(v.contains(&a1, &Root::new(vec![-1], 1)));
        assert!(v.contains(&a1, &Root::new(vec![-1], 4)));
        assert!(!v.contains(&a1, &Root::new(vec![1], 0)));
        assert!(!v.contains(&a1, &Root::new(vec![1], 3)));
    }

    #[test]
    fn straight_translations() {
        let a1 = sys("A~1");
        let (hat, word) = t_gamma_infinity(&a1, &[rat(1)]).unwrap();
        assert_eq!(word.period(), &[0, 1]);
        assert!(hat.has(&a1, &Root::new(vec![1], 3)));
        assert!(!hat.has(&a1, &Root::new(vec![-1], 3)));
        let (hat, _) = t_gamma_infinity(&a1, &[rat(-1)]).unwrap();
        assert!(hat.has(&a1, &Root::new(vec![-1], 1)));
        assert!(t_gamma_infinity(&a1, &[rat(0)]).is_err());
        let a2 = sys("A~2");
        let (hat, _) = t_gamma_infinity(&a2, &[rat(3), rat(3)]).unwrap();
        assert_eq!(
            i_b(&a2, &hat).unwrap(),
            a2.positive_roots_at_level(0).into_iter().collect()
        );
    }

    #[test]
    fn classification_examples() {
        let a1 = sys("A~1");
        let full = Biclosed::Complement(Box::new(Biclosed::empty()));
        assert_eq!(
            classify_affine(&a1, &full).unwrap(),
            Classification::Neither(Root::new(vec![1], 1), Root::new(vec![-1], 1))
        );
        let neg = Biclosed::hat_of_negative(&a1);
        match classify_affine(&a1, &neg).unwrap() {
            Classification::Infinite(w) => {
                for r in a1.positive_roots_up_to(6) {
                    assert_eq!(w.contains(&a1, &r), neg.has(&a1, &r));
                }
            }
            other => panic!("{other:?}"),
        }
        let single = Biclosed::Explicit([Root::new(vec![1], 0)].into_iter().collect());
        assert_eq!(
            classify_affine(&a1, &single).unwrap(),
            Classification::Finite(a1.generator(0).unwrap())
        );
        let bad = Biclosed::Explicit([Root::new(vec![1], 1)].into_iter().collect());
        assert!(matches!(classify_affine(&a1, &bad), Err(Error::Classification(_))));
    }

    #[test]
    fn i_b_examples() {
        let a1 = sys("A~1");
        let neg = Biclosed::hat_of_negative(&a1);
        assert_eq!(i_b(&a1, &neg).unwrap(), [Root::new(vec![-1], 0)].into_iter().collect());
        let full = Biclosed::Complement(Box::new(Biclosed::empty()));
        assert_eq!(i_b(&a1, &full).unwrap().len(), 2);
        let tw = Biclosed::twist(&a1, &a1.generator(0).unwrap(), neg.clone());
        // the finite Weyl part flips the direction
        assert_eq!(i_b(&a1, &tw).unwrap(), [Root::new(vec![1], 0)].into_iter().collect());
        let tw = Biclosed::twist(&a1, &a1.from_word(&[0, 1]).unwrap(), neg);
        assert_eq!(i_b(&a1, &tw).unwrap(), [Root::new(vec![-1], 0)].into_iter().collect());
    }
}
