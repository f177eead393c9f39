use std::collections::HashSet;

use crate::error::Error;
use crate::group::GroupElement;
use crate::roots::Root;
use crate::words::{classify_affine, Classification};

use super::TwistedOrder;

/// Outcome of checking that every pair in a ball has a meet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SemilatticeReport {
    /// Every pair was checked and has a meet.
    Ok { pairs: usize },
    /// A pair proven to have no meet.
    Counterexample { x: GroupElement, y: GroupElement, bad_pair: Option<(Root, Root)>, reason: String },
    /// No counterexample was proven, but not every pair could be settled.
    Inconclusive { bound: usize, reason: String },
}

impl SemilatticeReport {
    pub fn is_ok(&self) -> bool {
        matches!(self, SemilatticeReport::Ok { .. })
    }
}

/// Checks the meet-semilattice property of `≤_B` on pairs from `ball(radius)`.
///
/// Finite groups are checked exhaustively. In affine groups, inversion sets of
/// (finite or infinite) reduced words are checked pair by pair against the
/// common lower bounds above the witness prefix; other sets are refuted by a
/// pair `(α + kδ, −α + tδ)`, which rules out any common lower bound.
pub fn check_meet_semilattice(order: &TwistedOrder, radius: usize) -> SemilatticeReport {
    let sys = order.system();
    let ball = sys.ball(radius);
    let pairs = || {
        ball.iter()
            .enumerate()
            .flat_map(|(i, x)| ball[i + 1..].iter().map(move |y| (x, y)))
    };

    if !sys.is_affine() {
        let everything = sys.finite_positive_roots().len();
        let mut n = 0;
        for (x, y) in pairs() {
            let max = order.maximal_lower_bounds(x, y, everything);
            if max.len() != 1 {
                let reason = format!("{} maximal common lower bounds", max.len());
                return SemilatticeReport::Counterexample { x: x.clone(), y: y.clone(), bad_pair: None, reason };
            }
            n += 1;
        }
        return SemilatticeReport::Ok { pairs: n };
    }

    if order.inversion_witness().is_ok() {
        let mut n = 0;
        for (x, y) in pairs() {
            match exact_meet(order, x, y) {
                Ok(()) => n += 1,
                Err(reason) => return SemilatticeReport::Inconclusive { bound: radius, reason },
            }
        }
        return SemilatticeReport::Ok { pairs: n };
    }

    if let Ok(Classification::Neither(p, q)) = classify_affine(sys, order.biclosed()) {
        if let (Ok(x), Ok(y)) = (sys.reflection(&p), sys.reflection(&q)) {
            if x.length() <= radius && y.length() <= radius {
                let reason = format!("every common lower bound would invert {p} and {q}");
                return SemilatticeReport::Counterexample { x, y, bad_pair: Some((p, q)), reason };
            }
        }
    }
    for min_level in [1, 0] {
        for (x, y) in pairs() {
            if let Some((p, q)) = order.bad_pair_at(x, y, min_level) {
                let reason = format!("every common lower bound would invert {p} and {q}");
                return SemilatticeReport::Counterexample { x: x.clone(), y: y.clone(), bad_pair: Some((p, q)), reason };
            }
        }
    }
    SemilatticeReport::Inconclusive {
        bound: radius,
        reason: "B is not an inversion set and no refuting pair lies in the ball".into(),
    }
}

/// The meet agrees with the unique maximal element of `[z, x] ∩ [z, y]`.
fn exact_meet(order: &TwistedOrder, x: &GroupElement, y: &GroupElement) -> Result<(), String> {
    let describe = |e: Error| e.to_string();
    let z = order.lower_bound(x, y).map_err(describe)?;
    let above_x: HashSet<GroupElement> = order.interval(&z, x).map_err(describe)?.into_iter().collect();
    let common: Vec<GroupElement> = order
        .interval(&z, y)
        .map_err(describe)?
        .into_iter()
        .filter(|v| above_x.contains(v))
        .collect();
    let max: Vec<&GroupElement> = common
        .iter()
        .filter(|v| !common.iter().any(|u| u != *v && order.le(v, u)))
        .collect();
    let m = order.meet(x, y).map_err(describe)?;
    if max.len() == 1 && *max[0] == m {
        Ok(())
    } else {
        Err(format!(
            "meet of {} and {} disagrees with the interval search",
            x.display(order.system()),
            y.display(order.system())
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::Biclosed;
    use crate::system::CoxeterSystem;

    #[test]
    fn finite_and_hat_sets_are_semilattices() {
        let a2 = CoxeterSystem::from_type("A2").unwrap();
        let b = Biclosed::explicit(&a2, [Root::finite(vec![1, 0])]).unwrap();
        assert_eq!(check_meet_semilattice(&TwistedOrder::new(&a2, b), 3), SemilatticeReport::Ok { pairs: 15 });
        let a1 = CoxeterSystem::from_type("A~1").unwrap();
        let o = TwistedOrder::new(&a1, Biclosed::hat_of_negative(&a1));
        assert!(check_meet_semilattice(&o, 3).is_ok());
    }

    #[test]
    fn full_set_has_counterexample() {
        let a1 = CoxeterSystem::from_type("A~1").unwrap();
        let o = TwistedOrder::new(&a1, Biclosed::full());
        match check_meet_semilattice(&o, 3) {
            SemilatticeReport::Counterexample { bad_pair: Some((p, q)), .. } => {
                assert_eq!(p, Root::new(vec![1], 1));
                assert_eq!(q, Root::new(vec![-1], 1));
            }
            other => panic!("{other:?}"),
        }
    }
}
