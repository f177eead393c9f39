//! Cross-checks of [`TwistedOrder`] against the brute-force [`oracle`](crate::oracle).

use crate::closure::Biclosed;
use crate::error::Result;
use crate::group::GroupElement;
use crate::oracle::{battery, Oracle, OracleReport};
use crate::order::TwistedOrder;
use crate::system::CoxeterSystem;

/// Twisted lengths on `ball(radius)` and `le` on all ordered pairs, the oracle
/// searching `ball(l(x) + l(y))`.
pub fn check_le(sys: &CoxeterSystem, b: &Biclosed, radius: usize) -> OracleReport {
    let order = TwistedOrder::new(sys, b.clone());
    let oracle = Oracle::new(sys, b);
    let ball = sys.ball(radius);
    let mut report = OracleReport::default();
    for x in &ball {
        report.checked += 1;
        if order.tlen(x) != oracle.tlen(x) {
            report.mismatches.push(format!("[{b}] l_B({})", x.display(sys)));
        }
    }
    for x in &ball {
        for y in &ball {
            report.checked += 1;
            let expected = oracle.le(x, y, x.length() + y.length());
            if order.le(x, y) != expected {
                report
                    .mismatches
                    .push(format!("[{b}] {} ≤ {}: oracle says {expected}", x.display(sys), y.display(sys)));
            }
        }
    }
    report
}

/// Meets and joins of all pairs in `ball(radius)` against the maximal common
/// bounds found by the oracle in `ball(l(x) + l(y) + margin)`.
pub fn check_meets(sys: &CoxeterSystem, b: &Biclosed, radius: usize, margin: usize) -> OracleReport {
    let mut report = OracleReport::default();
    for (set, what) in [(b.clone(), "meet"), (Biclosed::complement(b.clone()), "join")] {
        let order = TwistedOrder::new(sys, set.clone());
        let oracle = Oracle::new(sys, &set);
        let ball = sys.ball(radius);
        let big = 2 * radius + margin;
        for (i, x) in ball.iter().enumerate() {
            for y in &ball[i..] {
                report.checked += 1;
                let got = order.meet(x, y);
                let expected = oracle.maximal_lower_bounds(x, y, big);
                let agree = matches!((&got, expected.as_slice()), (Ok(m), [e]) if m == e);
                if !agree {
                    report.mismatches.push(format!(
                        "[{b}] {what} of {} and {}: {:?} vs oracle {:?}",
                        x.display(sys),
                        y.display(sys),
                        got.map(|m| m.display(sys)),
                        expected.iter().map(|e| e.display(sys)).collect::<Vec<_>>()
                    ));
                }
            }
        }
    }
    report
}

/// Runs [`check_le`] over the standard battery.
pub fn selftest(sys: &CoxeterSystem, radius: usize) -> Result<Vec<(String, OracleReport)>> {
    Ok(battery(sys)?
        .into_iter()
        .map(|(name, b)| {
            let r = check_le(sys, &b, radius);
            (name, r)
        })
        .collect())
}

/// `x ≤_B y` pairs for sampling: every `y` above `x` along one up-cover path.
pub fn comparable_pairs(order: &TwistedOrder, radius: usize) -> Vec<(GroupElement, GroupElement)> {
    let ball = order.system().ball(radius);
    let mut out = Vec::new();
    for x in &ball {
        for y in &ball {
            if order.le(x, y) {
                out.push((x.clone(), y.clone()));
            }
        }
    }
    out
}
