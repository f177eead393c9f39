//! Roots of finite and affine systems, the invariant form, inversion sets,
//! translations and coweight data.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::group::GroupElement;
use crate::linalg::{det, rat, solve, Mat};
use crate::system::{form, CoxeterSystem};

/// `β + nδ` with `β` written over the finite simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Root {
    pub coeffs: Vec<i64>,
    pub delta: i64,
}

impl Root {
    pub fn new(coeffs: Vec<i64>, delta: i64) -> Self {
        Root { coeffs, delta }
    }

    /// A root of a finite system (level zero).
    pub fn finite(coeffs: Vec<i64>) -> Self {
        Root { coeffs, delta: 0 }
    }

    pub(crate) fn from_vec(v: &[i64], rank: usize) -> Self {
        Root {
            coeffs: v[..rank].to_vec(),
            delta: v.get(rank).copied().unwrap_or(0),
        }
    }

    pub(crate) fn to_vec(&self, dim: usize) -> Vec<i64> {
        let mut v = self.coeffs.clone();
        if dim > v.len() {
            v.push(self.delta);
        }
        v
    }

    /// Finite part `β` as a level-zero root.
    pub fn finite_part(&self) -> Root {
        Root::finite(self.coeffs.clone())
    }

    pub fn level(&self) -> i64 {
        self.delta
    }

    /// Positive iff the level is positive, or the level is zero and `β > 0`.
    pub fn is_positive(&self) -> bool {
        match self.delta.cmp(&0) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => self.coeffs.iter().any(|&x| x > 0),
        }
    }

    pub fn neg(&self) -> Root {
        Root {
            coeffs: self.coeffs.iter().map(|x| -x).collect(),
            delta: -self.delta,
        }
    }

    /// Coefficients followed by the level, the compact form used in JSON witnesses.
    pub fn coeff_level(&self) -> Vec<i64> {
        let mut v = self.coeffs.clone();
        v.push(self.delta);
        v
    }

    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }
}

impl PartialOrd for Root {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Level first, then height, then coefficients in reverse lexicographic order.
impl Ord for Root {
    fn cmp(&self, other: &Self) -> Ordering {
        self.delta
            .cmp(&other.delta)
            .then_with(|| self.height().cmp(&other.height()))
            .then_with(|| other.coeffs.cmp(&self.coeffs))
    }
}

const NAMES: &[&str] = &["a", "b", "c", "d", "e", "f", "g", "h"];

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        let mut term = |c: i64, name: &str| {
            if c == 0 {
                return;
            }
            if c < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if c.abs() != 1 {
                out.push_str(&c.abs().to_string());
            }
            out.push_str(name);
        };
        for (i, &c) in self.coeffs.iter().enumerate() {
            let fallback = format!("a{i}");
            term(c, NAMES.get(i).copied().unwrap_or(&fallback));
        }
        term(self.delta, "δ");
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

/// Fundamental coweights and the connection index of the finite part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoweightData {
    /// `ω_i` in simple-root coordinates, with `(ω_i, α_j) = δ_ij`.
    pub fundamental_coweights: Vec<Vec<Rational64>>,
    pub connection_index: i64,
}

impl CoxeterSystem {
    /// Whether `ρ` is a root of this system (`δ` itself never is).
    pub fn is_root(&self, rho: &Root) -> bool {
        rho.coeffs.len() == self.rank()
            && (self.is_affine() || rho.delta == 0)
            && self.is_finite_root(&rho.coeffs)
    }

    /// Roots of the finite part, positive then negative, each sorted.
    pub fn finite_roots(&self) -> Vec<Root> {
        let pos: Vec<Root> = self
            .finite_positive_roots()
            .iter()
            .map(|c| Root::finite(c.clone()))
            .collect();
        let mut all = pos.clone();
        all.extend(pos.iter().map(Root::neg));
        all.sort();
        all
    }

    /// All roots with `|level| ≤ max_level`; finite systems return all of `Φ`.
    pub fn roots_up_to(&self, max_level: usize) -> Vec<Root> {
        let fin = self.finite_roots();
        if !self.is_affine() {
            return fin;
        }
        let n = max_level as i64;
        let mut out: Vec<Root> = (-n..=n)
            .flat_map(|d| fin.iter().map(move |b| Root::new(b.coeffs.clone(), d)))
            .collect();
        out.sort();
        out
    }

    /// Positive roots with level at most `max_level` (all of `Φ⁺` for finite systems).
    pub fn positive_roots_up_to(&self, max_level: usize) -> Vec<Root> {
        self.roots_up_to(max_level)
            .into_iter()
            .filter(Root::is_positive)
            .collect()
    }

    /// Positive roots with level exactly `level`.
    pub fn positive_roots_at_level(&self, level: i64) -> Vec<Root> {
        if !self.is_affine() {
            return if level == 0 {
                self.positive_roots_up_to(0)
            } else {
                Vec::new()
            };
        }
        let mut out: Vec<Root> = self
            .finite_roots()
            .into_iter()
            .map(|b| Root::new(b.coeffs, level))
            .filter(Root::is_positive)
            .collect();
        out.sort();
        out
    }

    /// The invariant form; `δ` is orthogonal to everything.
    pub fn inner_product(&self, rho: &Root, sigma: &Root) -> Rational64 {
        form(self.gram(), &rho.coeffs, &sigma.coeffs)
    }

    pub(crate) fn pair_vec(&self, x: &[Rational64], coeffs: &[i64]) -> Rational64 {
        let g = self.gram();
        let mut s = Rational64::zero();
        for (i, xi) in x.iter().enumerate() {
            for (j, &c) in coeffs.iter().enumerate() {
                if c != 0 {
                    s += *xi * g[i][j] * rat(c);
                }
            }
        }
        s
    }

    /// `ρ^∨ = 2ρ/(ρ,ρ)`, with the `δ` coefficient retained (last entry for affine systems).
    pub fn coroot(&self, rho: &Root) -> Vec<Rational64> {
        let nn = self.inner_product(rho, rho);
        let f = rat(2) / nn;
        rho.to_vec(self.dim()).into_iter().map(|x| rat(x) * f).collect()
    }

    /// Inversion set `Φ_w` in the order the roots appear along the canonical word.
    pub fn inversions_along_word(&self, w: &GroupElement) -> Vec<Root> {
        let mut out = Vec::with_capacity(w.length());
        let mut prefix = Mat::identity(self.dim());
        for &s in w.word() {
            out.push(Root::from_vec(&prefix.apply(self.simple_vector(s)), self.rank()));
            prefix = prefix.mul(self.generator_matrix(s));
        }
        out
    }

    /// `Φ_w = {α > 0 : w⁻¹(α) < 0}`, sorted.
    pub fn inversion_set(&self, w: &GroupElement) -> Vec<Root> {
        let mut v = self.inversions_along_word(w);
        v.sort();
        v
    }

    pub fn inversion_set_btree(&self, w: &GroupElement) -> BTreeSet<Root> {
        self.inversions_along_word(w).into_iter().collect()
    }

    /// Coordinates of `λ` (given over the simple roots) in the simple coroot basis,
    /// if `λ` lies in the coroot lattice.
    pub fn coroot_coords(&self, lambda: &[Rational64]) -> Option<Vec<i64>> {
        if lambda.len() != self.rank() {
            return None;
        }
        lambda
            .iter()
            .zip(self.symmetrizer())
            .map(|(l, d)| {
                let c = l * d;
                c.is_integer().then(|| c.to_integer())
            })
            .collect()
    }

    /// `Σ c_i α_i^∨` in simple-root coordinates.
    pub fn from_coroot_coords(&self, c: &[i64]) -> Vec<Rational64> {
        c.iter()
            .zip(self.symmetrizer())
            .map(|(&ci, d)| rat(ci) / d)
            .collect()
    }

    /// The translation `t_λ : u ↦ u + (u, λ)δ`.
    pub fn translation(&self, lambda: &[Rational64]) -> Result<GroupElement> {
        if !self.is_affine() {
            return domain("translations exist only in affine systems");
        }
        if self.coroot_coords(lambda).is_none() {
            return domain("vector is not in the coroot lattice");
        }
        let n = self.rank();
        let mut mat = Mat::identity(n + 1);
        let mut inv = Mat::identity(n + 1);
        for j in 0..n {
            let mut e = vec![0; n];
            e[j] = 1;
            let p = self.pair_vec(lambda, &e);
            debug_assert!(p.is_integer());
            mat.set(n, j, p.to_integer());
            inv.set(n, j, -p.to_integer());
        }
        Ok(self.element_from_parts(mat, inv))
    }

    /// `t_λ` for `λ = Σ c_i α_i^∨`.
    pub fn translation_by_coroots(&self, c: &[i64]) -> Result<GroupElement> {
        if c.len() != self.rank() {
            return domain("coroot coordinate vector has wrong length");
        }
        self.translation(&self.from_coroot_coords(c))
    }

    /// Finite Weyl part `ū` of an element: its action on `V` modulo `δ`.
    pub fn weyl_part(&self, w: &GroupElement) -> Result<GroupElement> {
        if !self.is_affine() {
            return Ok(w.clone());
        }
        let n = self.rank();
        let strip = |m: &Mat| {
            let mut out = m.clone();
            for j in 0..n {
                out.set(n, j, 0);
            }
            out
        };
        Ok(self.element_from_parts(strip(&w.mat), strip(&w.inv)))
    }

    /// If `w` is a pure translation `t_μ`, returns `μ` in simple-root coordinates.
    pub fn translation_vector(&self, w: &GroupElement) -> Option<Vec<Rational64>> {
        if !self.is_affine() {
            return None;
        }
        let n = self.rank();
        for i in 0..n {
            for j in 0..n {
                if w.mat.get(i, j) != i64::from(i == j) {
                    return None;
                }
            }
        }
        // (α_j, μ) = entry (n, j); solve gram · μ = that row
        let g = self.gram();
        let rhs: Vec<Rational64> = (0..n).map(|j| rat(w.mat.get(n, j))).collect();
        solve(g, &rhs)
    }

    pub fn coweight_data(&self) -> CoweightData {
        let n = self.rank();
        let g = self.gram();
        let fundamental_coweights = (0..n)
            .map(|i| {
                let mut e = vec![Rational64::zero(); n];
                e[i] = rat(1);
                solve(g, &e).expect("positive definite form")
            })
            .collect();
        let a: Vec<Vec<Rational64>> = self
            .cartan()
            .iter()
            .map(|r| r.iter().map(|&x| rat(x)).collect())
            .collect();
        let connection_index = det(&a).abs().to_integer();
        CoweightData {
            fundamental_coweights,
            connection_index,
        }
    }

    /// `n · Σ_{i∉L} ω_i` with `n` the connection index: vanishes on `L`,
    /// positive on the other simple roots, and lies in the coroot lattice.
    pub fn dominant_coweight_for(&self, subset: &[usize]) -> Result<Vec<Rational64>> {
        let cw = self.coweight_data();
        self.scaled_coweight(subset, cw.connection_index)
    }

    /// Smallest positive multiple of `Σ_{i∉L} ω_i` lying in the coroot lattice.
    pub fn minimal_dominant_coweight_for(&self, subset: &[usize]) -> Result<Vec<Rational64>> {
        let cw = self.coweight_data();
        for k in 1..=cw.connection_index {
            let v = self.scaled_coweight(subset, k)?;
            if self.coroot_coords(&v).is_some() {
                return Ok(v);
            }
        }
        unreachable!("the connection index always clears the coweight lattice")
    }

    fn scaled_coweight(&self, subset: &[usize], k: i64) -> Result<Vec<Rational64>> {
        let n = self.rank();
        if let Some(&bad) = subset.iter().find(|&&i| i >= n) {
            return Err(Error::Domain(format!("simple root index {bad} out of range")));
        }
        let cw = self.coweight_data();
        let mut v = vec![Rational64::zero(); n];
        for i in (0..n).filter(|i| !subset.contains(i)) {
            for (vj, wj) in v.iter_mut().zip(&cw.fundamental_coweights[i]) {
                *vj += *wj * rat(k);
            }
        }
        Ok(v)
    }

    /// Largest `|level change|` that `w⁻¹` can apply to a finite root; every root
    /// of `Φ_w` has level at most this value.
    pub fn level_shift(&self, w: &GroupElement) -> i64 {
        if !self.is_affine() {
            return 0;
        }
        let n = self.rank();
        self.finite_positive_roots()
            .iter()
            .map(|b| (0..n).map(|i| w.inv.get(n, i) * b[i]).sum::<i64>().abs())
            .max()
            .unwrap_or(0)
    }

    /// Parses a root in coefficient/level form, e.g. `[1,0,2]` for `a + 2δ`
    /// (finite systems omit the level).
    pub fn parse_root(&self, text: &str) -> Result<Root> {
        let t = text.trim().trim_start_matches('[').trim_end_matches(']');
        let v: Vec<i64> = t
            .split(',')
            .map(|p| {
                p.trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad root entry {p:?}")))
            })
            .collect::<Result<_>>()?;
        // finite systems also accept an explicit zero level
        let r = match v.len() {
            l if l == self.dim() => Root::from_vec(&v, self.rank()),
            l if l == self.rank() + 1 && v[self.rank()] == 0 => Root::finite(v[..self.rank()].to_vec()),
            _ => return Err(Error::Parse(format!("root {text:?} needs {} entries", self.dim()))),
        };
        if !self.is_root(&r) {
            return Err(Error::Domain(format!("{r} is not a root")));
        }
        Ok(r)
    }

    /// Whether `ρ` is a positive root of this system.
    pub fn is_positive_root(&self, rho: &Root) -> bool {
        self.is_root(rho) && rho.is_positive()
    }

    /// `(β, λ)` for a rational vector `λ` over the simple roots.
    pub fn pairing(&self, rho: &Root, lambda: &[Rational64]) -> Rational64 {
        self.pair_vec(lambda, &rho.coeffs)
    }

    /// The reflection `s_ρ` as a group element.
    pub fn reflection(&self, rho: &Root) -> Result<GroupElement> {
        if !self.is_root(rho) {
            return domain(format!("{rho} is not a root"));
        }
        let dim = self.dim();
        let n = self.rank();
        let nn = self.inner_product(rho, rho);
        let rv = rho.to_vec(dim);
        let mut mat = Mat::identity(dim);
        for j in 0..n {
            let mut e = vec![0; n];
            e[j] = 1;
            let c = rat(2) * form(self.gram(), &e, &rho.coeffs) / nn;
            if !c.is_integer() {
                return domain("non-integral reflection");
            }
            let c = c.to_integer();
            for (i, r) in rv.iter().enumerate() {
                let v = mat.get(i, j) - c * r;
                mat.set(i, j, v);
            }
        }
        Ok(self.element_from_parts(mat.clone(), mat))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(t: &str) -> CoxeterSystem {
        CoxeterSystem::from_type(t).unwrap()
    }

    #[test]
    fn act_examples() {
        let s = sys("A2");
        let sa = s.generator(0).unwrap();
        let b = Root::finite(vec![0, 1]);
        assert_eq!(s.act(&sa, &b).unwrap(), Root::finite(vec![1, 1]));

        let a1 = sys("A~1");
        let s0 = a1.generator(1).unwrap();
        let alpha = Root::new(vec![1], 0);
        assert_eq!(a1.act(&s0, &alpha).unwrap(), Root::new(vec![-1], 2));
        assert!(a1.act(&s0, &Root::new(vec![0], 1)).is_err());
    }

    #[test]
    fn root_counts() {
        assert_eq!(sys("A2").roots_up_to(5).len(), 6);
        let a1 = sys("A~1");
        assert_eq!(a1.roots_up_to(0), vec![Root::new(vec![-1], 0), Root::new(vec![1], 0)]);
    }

    #[test]
    fn inner_products_and_coroots() {
        let s = sys("A2");
        let a = Root::finite(vec![1, 0]);
        let b = Root::finite(vec![0, 1]);
        assert_eq!(s.inner_product(&a, &b), rat(-1));
        assert_eq!(s.coroot(&Root::finite(vec![1, 1])), vec![rat(1), rat(1)]);
        let a1 = sys("A~1");
        let r = Root::new(vec![-1], 1);
        assert_eq!(a1.inner_product(&r, &r), rat(2));
        let b2 = sys("B2");
        let short = Root::finite(vec![0, 1]);
        assert_eq!(b2.coroot(&short), vec![rat(0), rat(1)]);
        let long = Root::finite(vec![1, 0]);
        assert_eq!(b2.coroot(&long), vec![Rational64::new(1, 2), rat(0)]);
    }

    #[test]
    fn inversion_set_examples() {
        let s = sys("A2");
        let ab = s.from_word(&[0, 1]).unwrap();
        assert_eq!(
            s.inversion_set(&ab),
            vec![Root::finite(vec![1, 0]), Root::finite(vec![1, 1])]
        );
        let a1 = sys("A~1");
        let w = a1.from_word(&[1, 0]).unwrap();
        assert_eq!(
            a1.inversion_set(&w),
            vec![Root::new(vec![-1], 1), Root::new(vec![-1], 2)]
        );
        assert!(a1.inversion_set(&a1.identity()).is_empty());
    }

    #[test]
    fn translations() {
        let a1 = sys("A~1");
        let t = a1.translation_by_coroots(&[1]).unwrap();
        assert_eq!(t, a1.from_word(&[0, 1]).unwrap());
        assert_eq!(t.word(), &[0, 1]);
        assert!(a1.translation_by_coroots(&[0]).unwrap().is_identity());
        let a2 = sys("A~2");
        let t = a2.translation_by_coroots(&[1, 1]).unwrap();
        assert_eq!(t.length(), 4);
        assert!(a2.weyl_part(&t).unwrap().is_identity());
        assert!(a2
            .translation(&[Rational64::new(1, 3), Rational64::new(2, 3)])
            .is_err());
        assert!(sys("A2").translation(&[rat(1), rat(0)]).is_err());
    }

    #[test]
    fn coweights() {
        let a2 = sys("A2");
        assert_eq!(a2.coweight_data().connection_index, 3);
        let g = a2.dominant_coweight_for(&[]).unwrap();
        assert_eq!(a2.coroot_coords(&g), Some(vec![3, 3]));
        let a1 = sys("A1");
        assert_eq!(a1.dominant_coweight_for(&[0]).unwrap(), vec![rat(0)]);
        assert_eq!(a2.minimal_dominant_coweight_for(&[]).unwrap(), vec![rat(1), rat(1)]);
    }

    #[test]
    fn reflections_match_words() {
        let a1 = sys("A~1");
        let r = a1.reflection(&Root::new(vec![1], 1)).unwrap();
        assert_eq!(r.word(), &[0, 1, 0]);
    }

    #[test]
    fn display() {
        assert_eq!(Root::new(vec![-1, -1], 1).to_string(), "-a-b+δ");
        assert_eq!(Root::new(vec![2, 1], 0).to_string(), "2a+b");
    }
}
