//! 2-closure and cone-closure checks, brute-force biclosed enumeration, the
//! finite classification `Ψ⁺_{Δ1,Δ2}`, and truncated separability.

mod biclosed;
mod expr;

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

pub use biclosed::Biclosed;
pub(crate) use biclosed::psi_contains;
pub use expr::parse_biclosed;

use crate::cone::{common_point, cone_contains, strictly_separable};
use crate::error::{domain, Error, Result};
use crate::group::GroupElement;
use crate::roots::Root;
use crate::system::CoxeterSystem;

/// Which closure operator to test against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureMode {
    /// Nonnegative spans of pairs.
    TwoClosure,
    /// Nonnegative spans of arbitrary finite subsets.
    ConeClosure,
}

/// A root of the ambient set outside `Γ` but inside the cone of `generators ⊆ Γ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureWitness {
    pub generators: Vec<Root>,
    pub root: Root,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub closed: bool,
    pub witness: Option<ClosureWitness>,
}

fn vecs(sys: &CoxeterSystem, roots: &[Root]) -> Vec<Vec<i64>> {
    roots.iter().map(|r| r.to_vec(sys.dim())).collect()
}

/// Whether `target` is a nonnegative combination of `generators`.
pub fn cone_contains_roots(sys: &CoxeterSystem, generators: &[Root], target: &Root) -> bool {
    cone_contains(&vecs(sys, generators), &target.to_vec(sys.dim()))
}

/// Tests `Γ` for closedness inside the finite set `ambient`.
pub fn closure_check(sys: &CoxeterSystem, gamma: &[Root], ambient: &[Root], mode: ClosureMode) -> Result<ClosureReport> {
    let amb: HashSet<&Root> = ambient.iter().collect();
    if let Some(r) = gamma.iter().find(|r| !amb.contains(r)) {
        return domain(format!("{r} is not in the ambient set"));
    }
    let inside: HashSet<&Root> = gamma.iter().collect();
    let outside: Vec<&Root> = ambient.iter().filter(|r| !inside.contains(r)).collect();
    let witness = match mode {
        ClosureMode::TwoClosure => {
            let mut found = None;
            'pairs: for (i, a) in gamma.iter().enumerate() {
                for b in &gamma[i + 1..] {
                    let pair = [a.clone(), b.clone()];
                    for r in &outside {
                        if cone_contains_roots(sys, &pair, r) {
                            found = Some(ClosureWitness { generators: pair.to_vec(), root: (*r).clone() });
                            break 'pairs;
                        }
                    }
                }
            }
            found
        }
        ClosureMode::ConeClosure => outside.iter().find_map(|r| {
            let k = crate::cone::cone_solution(&vecs(sys, gamma), &r.to_vec(sys.dim()))?;
            let generators = gamma
                .iter()
                .zip(&k)
                .filter(|(_, c)| **c != 0.into())
                .map(|(g, _)| g.clone())
                .collect();
            Some(ClosureWitness { generators, root: (*r).clone() })
        }),
    };
    Ok(ClosureReport { closed: witness.is_none(), witness })
}

/// `Γ` and `ambient ∖ Γ` are both closed.
pub fn is_biclosed(sys: &CoxeterSystem, gamma: &[Root], ambient: &[Root], mode: ClosureMode) -> Result<bool> {
    if !closure_check(sys, gamma, ambient, mode)?.closed {
        return Ok(false);
    }
    let g: HashSet<&Root> = gamma.iter().collect();
    let rest: Vec<Root> = ambient.iter().filter(|r| !g.contains(r)).cloned().collect();
    Ok(closure_check(sys, &rest, ambient, mode)?.closed)
}

pub const MAX_ENUMERATION: usize = 24;

/// Every subset of `ambient` that is biclosed in it, sorted by size then contents.
pub fn enumerate_biclosed(sys: &CoxeterSystem, ambient: &[Root], mode: ClosureMode) -> Result<Vec<Vec<Root>>> {
    let n = ambient.len();
    if n > MAX_ENUMERATION {
        return Err(Error::Resource(format!(
            "{n} ambient roots exceeds the enumeration limit of {MAX_ENUMERATION}"
        )));
    }
    let mut amb = ambient.to_vec();
    amb.sort();
    amb.dedup();
    let n = amb.len();
    let v = vecs(sys, &amb);
    let closed: Box<dyn Fn(u32) -> bool> = match mode {
        ClosureMode::TwoClosure => {
            // span[i][j]: ambient roots in cone(a_i, a_j)
            let mut span = vec![vec![0u32; n]; n];
            for i in 0..n {
                for j in i + 1..n {
                    let pair = [v[i].clone(), v[j].clone()];
                    let m = (0..n).filter(|&k| cone_contains(&pair, &v[k])).fold(0u32, |m, k| m | 1 << k);
                    span[i][j] = m;
                    span[j][i] = m;
                }
            }
            Box::new(move |set: u32| {
                (0..n).filter(|&i| set >> i & 1 == 1).all(|i| {
                    (i + 1..n)
                        .filter(|&j| set >> j & 1 == 1)
                        .all(|j| span[i][j] & !set == 0)
                })
            })
        }
        ClosureMode::ConeClosure => Box::new(move |set: u32| {
            let gens: Vec<Vec<i64>> = (0..n).filter(|&i| set >> i & 1 == 1).map(|i| v[i].clone()).collect();
            (0..n)
                .filter(|&k| set >> k & 1 == 0)
                .all(|k| !cone_contains(&gens, &v[k]))
        }),
    };
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut out: Vec<Vec<Root>> = (0..=full)
        .filter(|&s| closed(s) && closed(full & !s))
        .map(|s| (0..n).filter(|&i| s >> i & 1 == 1).map(|i| amb[i].clone()).collect())
        .collect();
    out.sort_by(|a: &Vec<Root>, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// The finite Weyl group, generated by the finite simple reflections, in ShortLex order.
pub fn weyl_group(sys: &CoxeterSystem) -> Vec<GroupElement> {
    let n = sys.rank();
    let mut seen: HashSet<GroupElement> = HashSet::from([sys.identity()]);
    let mut out = vec![sys.identity()];
    let mut layer = vec![sys.identity()];
    while !layer.is_empty() {
        let mut next = Vec::new();
        for w in &layer {
            for s in 0..n {
                let x = sys.mul_gen(w, s);
                if seen.insert(x.clone()) {
                    next.push(x);
                }
            }
        }
        next.sort();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out.sort();
    out
}

/// `Ψ⁺_{Δ1,Δ2} = (Ψ⁺ ∖ R≥0Δ1) ∪ (RΔ2 ∩ Φ)` with `Ψ⁺ = u(Φ⁺)`, as level-zero roots.
pub fn psi_set(sys: &CoxeterSystem, u: &GroupElement, d1: &[usize], d2: &[usize]) -> BTreeSet<Root> {
    sys.finite_roots()
        .into_iter()
        .filter(|r| psi_contains(sys, u, d1, d2, r))
        .collect()
}

/// A witness `(u, Δ1, Δ2)` for a biclosed subset of the finite root system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteForm {
    pub u: GroupElement,
    pub d1: Vec<usize>,
    pub d2: Vec<usize>,
}

impl FiniteForm {
    pub fn expand(&self, sys: &CoxeterSystem) -> BTreeSet<Root> {
        psi_set(sys, &self.u, &self.d1, &self.d2)
    }
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
}

/// Searches `u ∈ W` (ShortLex) and orthogonal disjoint `Δ1, Δ2` with `Γ = Ψ⁺_{Δ1,Δ2}`.
pub fn classify_finite_biclosed(sys: &CoxeterSystem, gamma: &[Root]) -> Result<FiniteForm> {
    let target: BTreeSet<Root> = gamma.iter().map(Root::finite_part).collect();
    let n = sys.rank();
    let orth = |a: &[usize], b: &[usize]| a.iter().all(|&i| !b.contains(&i) && b.iter().all(|&j| sys.cartan()[i][j] == 0));
    for u in weyl_group(sys) {
        for d1 in subsets(n) {
            for d2 in subsets(n) {
                if !orth(&d1, &d2) {
                    continue;
                }
                if psi_set(sys, &u, &d1, &d2) == target {
                    return Ok(FiniteForm { u, d1, d2 });
                }
            }
        }
    }
    Err(Error::Classification("no (u, Δ1, Δ2) reproduces the set".into()))
}

/// Truncated separability certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Separability {
    pub separable: bool,
    /// A common nonzero point of both cones, coefficients then level.
    pub witness: Option<Vec<i64>>,
}

/// Tests `cone(B) ∩ cone(Φ̃⁺ ∖ B) = {0}` on positive roots of level at most `level`.
pub fn is_separable(sys: &CoxeterSystem, b: &Biclosed, level: usize) -> Separability {
    let (inside, outside): (Vec<Root>, Vec<Root>) = sys
        .positive_roots_up_to(level)
        .into_iter()
        .partition(|r| b.has(sys, r));
    let (gi, go) = (vecs(sys, &inside), vecs(sys, &outside));
    if strictly_separable(&gi, &go) {
        return Separability { separable: true, witness: None };
    }
    Separability { separable: false, witness: common_point(&gi, &go) }
}
