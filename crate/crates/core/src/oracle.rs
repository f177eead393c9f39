//! Brute-force reference implementations used to cross-check the order module.
//!
//! Nothing here uses `crate::order`: inversion sets are recomputed from the
//! action on roots, covers from literal twisted lengths, comparisons by search
//! in the cover graph of a ball, and meets from reachability in that graph.

use std::cell::RefCell;
use std::collections::{HashMap, VecDeque};

use crate::closure::Biclosed;
use crate::error::Result;
use crate::group::{GroupElement, Word};
use crate::roots::Root;
use crate::system::CoxeterSystem;
use crate::words::t_gamma_infinity;

/// Memoized literal twisted length `l_B(w) = |Φ_w| − 2|Φ_w ∩ B|`.
pub struct Oracle<'a> {
    sys: &'a CoxeterSystem,
    b: &'a Biclosed,
    tlen: RefCell<HashMap<Word, i64>>,
}

impl<'a> Oracle<'a> {
    pub fn new(sys: &'a CoxeterSystem, b: &'a Biclosed) -> Self {
        Oracle { sys, b, tlen: RefCell::new(HashMap::new()) }
    }

    /// `{β > 0 : w⁻¹β < 0}` by scanning every positive root of level below `l(w)`.
    pub fn inversion_set(&self, w: &GroupElement) -> Vec<Root> {
        let winv = self.sys.inverse(w).expect("same system");
        self.sys
            .positive_roots_up_to(w.length())
            .into_iter()
            .filter(|r| !self.sys.act(&winv, r).expect("root of the system").is_positive())
            .collect()
    }

    pub fn tlen(&self, w: &GroupElement) -> i64 {
        if let Some(&t) = self.tlen.borrow().get(w.word()) {
            return t;
        }
        let inv = self.inversion_set(w);
        let hits = inv.iter().filter(|r| self.b.has(self.sys, r)).count();
        let t = inv.len() as i64 - 2 * hits as i64;
        self.tlen.borrow_mut().insert(w.word().to_vec(), t);
        t
    }

    fn up_covers(&self, w: &GroupElement) -> Vec<GroupElement> {
        let t = self.tlen(w);
        (0..self.sys.num_generators())
            .map(|s| self.sys.mul(w, &self.sys.generator(s).expect("generator")).expect("same system"))
            .filter(|u| self.tlen(u) == t + 1)
            .collect()
    }

    /// `x ≤_B y` witnessed by an up-cover path inside `ball(radius)`.
    pub fn le(&self, x: &GroupElement, y: &GroupElement, radius: usize) -> bool {
        let target = self.tlen(y);
        let mut seen = HashMap::from([(x.word().to_vec(), ())]);
        let mut queue = VecDeque::from([x.clone()]);
        while let Some(w) = queue.pop_front() {
            if w == *y {
                return true;
            }
            if self.tlen(&w) >= target {
                continue;
            }
            for u in self.up_covers(&w) {
                if u.length() <= radius && seen.insert(u.word().to_vec(), ()).is_none() {
                    queue.push_back(u);
                }
            }
        }
        false
    }

    /// Maximal common lower bounds of `x` and `y` among elements of `ball(radius)`,
    /// with comparisons by reachability inside the ball.
    pub fn maximal_lower_bounds(&self, x: &GroupElement, y: &GroupElement, radius: usize) -> Vec<GroupElement> {
        let mut ball = self.sys.ball(radius);
        ball.sort_by_cached_key(|w| std::cmp::Reverse(self.tlen(w)));
        let index: HashMap<&[usize], usize> = ball.iter().enumerate().map(|(i, w)| (w.word(), i)).collect();
        let (Some(&xi), Some(&yi)) = (index.get(x.word()), index.get(y.word())) else {
            return Vec::new();
        };
        let words = ball.len().div_ceil(64);
        let mut reach = vec![vec![0u64; words]; ball.len()];
        for i in 0..ball.len() {
            reach[i][i / 64] |= 1 << (i % 64);
            for u in self.up_covers(&ball[i]) {
                if let Some(&j) = index.get(u.word()) {
                    let above = reach[j].clone();
                    for (a, b) in reach[i].iter_mut().zip(above) {
                        *a |= b;
                    }
                }
            }
        }
        let has = |i: usize, j: usize| reach[i][j / 64] >> (j % 64) & 1 == 1;
        let lower: Vec<usize> = (0..ball.len()).filter(|&i| has(i, xi) && has(i, yi)).collect();
        let mut out: Vec<GroupElement> = lower
            .iter()
            .filter(|&&i| !lower.iter().any(|&j| j != i && has(i, j)))
            .map(|&i| ball[i].clone())
            .collect();
        out.sort();
        out
    }
}

pub fn oracle_le(sys: &CoxeterSystem, b: &Biclosed, x: &GroupElement, y: &GroupElement, radius: usize) -> bool {
    Oracle::new(sys, b).le(x, y, radius)
}

/// The unique maximal common lower bound in `ball(radius)`, if there is one.
pub fn oracle_meet(sys: &CoxeterSystem, b: &Biclosed, x: &GroupElement, y: &GroupElement, radius: usize) -> Option<GroupElement> {
    let mut max = Oracle::new(sys, b).maximal_lower_bounds(x, y, radius);
    (max.len() == 1).then(|| max.remove(0))
}

/// Counts of comparisons made and the disagreements found.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleReport {
    pub checked: usize,
    pub mismatches: Vec<String>,
}

impl OracleReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn merge(&mut self, other: OracleReport) {
        self.checked += other.checked;
        self.mismatches.extend(other.mismatches);
    }
}

/// A fixed set of biclosed sets covering every representation: empty, full,
/// five finite inversion sets, a twist of one of them, and in affine systems
/// `hat(Φ⁻)`, `hat(Φ⁺)`, a twist of `hat(Φ⁻)` and an infinite-word set.
pub fn battery(sys: &CoxeterSystem) -> Result<Vec<(String, Biclosed)>> {
    let radius = if sys.is_affine() { 4 } else { sys.finite_positive_roots().len() };
    let ball = sys.ball(radius);
    let rest = &ball[1..];
    let picks: Vec<&GroupElement> = (0..5).map(|k| &rest[k * (rest.len() - 1) / 4]).collect();
    let name = |w: &GroupElement| w.display(sys);
    let mut out = vec![("empty".to_string(), Biclosed::empty()), ("full".to_string(), Biclosed::full())];
    for w in &picks {
        let roots = sys.inversion_set(w);
        out.push((format!("Φ({})", name(w)), Biclosed::explicit(sys, roots)?));
    }
    let inner = Biclosed::explicit(sys, sys.inversion_set(picks[3]))?;
    out.push((
        format!("{}·Φ({})", name(picks[1]), name(picks[3])),
        Biclosed::twist(sys, picks[1], inner),
    ));
    if sys.is_affine() {
        out.push(("hat(Φ⁻)".into(), Biclosed::hat_of_negative(sys)));
        out.push(("hat(Φ⁺)".into(), Biclosed::hat_of_positive(sys)));
        out.push((
            format!("{}·hat(Φ⁻)", name(picks[2])),
            Biclosed::twist(sys, picks[2], Biclosed::hat_of_negative(sys)),
        ));
        let gamma = sys.dominant_coweight_for(&[])?;
        let (_, word) = t_gamma_infinity(sys, &gamma)?;
        out.push((format!("Φ({word})"), Biclosed::InfWord(word)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_inversions() {
        let a1 = CoxeterSystem::from_type("A~1").unwrap();
        let w = a1.from_word(&[1, 0]).unwrap();
        let b = Biclosed::empty();
        let o = Oracle::new(&a1, &b);
        assert_eq!(o.inversion_set(&w), a1.inversion_set(&w));
        assert_eq!(o.tlen(&w), 2);
    }

    #[test]
    fn a1_hat_meets() {
        let a1 = CoxeterSystem::from_type("A~1").unwrap();
        let b = Biclosed::hat_of_negative(&a1);
        let x = a1.from_word(&[0]).unwrap();
        let y = a1.from_word(&[1]).unwrap();
        assert!(oracle_le(&a1, &b, &y, &x, 2));
        assert!(!oracle_le(&a1, &b, &x, &y, 2));
        assert_eq!(oracle_meet(&a1, &b, &x, &y, 3), Some(y));
    }

    #[test]
    fn battery_sizes() {
        let a2 = CoxeterSystem::from_type("A2").unwrap();
        assert_eq!(battery(&a2).unwrap().len(), 8);
        let a2t = CoxeterSystem::from_type("A~2").unwrap();
        assert_eq!(battery(&a2t).unwrap().len(), 12);
    }
}
