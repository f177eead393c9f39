//! Group elements as exact integer matrices, canonical words and length balls.

use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{domain, Error, Result};
use crate::linalg::Mat;
use crate::roots::Root;
use crate::system::CoxeterSystem;

/// A word in the generators, as generator indices.
pub type Word = Vec<usize>;

/// An element of `W` (or `W̃`), stored as its matrix and inverse matrix on the
/// basis of simple roots (and `δ`), together with its ShortLex-minimal
/// reduced word.
#[derive(Clone)]
pub struct GroupElement {
    pub(crate) mat: Mat,
    pub(crate) inv: Mat,
    word: Word,
    sys: u64,
    affine: bool,
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.sys == other.sys && self.mat == other.mat
    }
}

impl Eq for GroupElement {}

impl Hash for GroupElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.mat.a.hash(state);
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// ShortLex on canonical words.
impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.word.cmp(&other.word))
            .then_with(|| self.mat.a.cmp(&other.mat.a))
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElement{:?}", self.word)
    }
}

impl GroupElement {
    /// Canonical (ShortLex-minimal) reduced word.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Row-major matrix on the basis `(α_1, …, α_n[, δ])`; column `j` is the image of basis vector `j`.
    pub fn matrix(&self) -> &[i64] {
        &self.mat.a
    }

    pub fn dim(&self) -> usize {
        self.mat.n
    }

    /// Whether `ρ` (a positive root) lies in the inversion set, i.e. `w⁻¹(ρ)` is negative.
    pub fn inverts(&self, rho: &Root) -> bool {
        !sign_positive(&self.inv.apply(&rho.to_vec(self.mat.n)), self.affine)
    }

    /// Formats the canonical word with generator labels, `e` for the identity.
    pub fn display(&self, sys: &CoxeterSystem) -> String {
        format_word(sys, &self.word)
    }
}

/// Renders a word as `s_a s_b …` using the system's labels.
pub fn format_word(sys: &CoxeterSystem, word: &[usize]) -> String {
    if word.is_empty() {
        return "e".into();
    }
    word.iter()
        .map(|&s| {
            let name = &sys.simple_names()[s];
            if name.chars().count() == 1 {
                format!("s_{name}")
            } else {
                format!("s_{{{name}}}")
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Sign of a root vector; affine vectors carry the `δ` coefficient last.
pub(crate) fn sign_positive(v: &[i64], affine: bool) -> bool {
    if affine {
        let (d, fin) = v.split_last().expect("nonempty vector");
        match d {
            d if *d > 0 => true,
            d if *d < 0 => false,
            _ => fin.iter().any(|&x| x > 0),
        }
    } else {
        v.iter().any(|&x| x > 0)
    }
}

impl CoxeterSystem {
    fn is_positive(&self, v: &[i64]) -> bool {
        sign_positive(v, self.is_affine())
    }

    fn check(&self, w: &GroupElement) -> Result<()> {
        if w.sys != self.fingerprint() {
            return domain("element belongs to a different system");
        }
        Ok(())
    }

    /// Builds an element from a matrix/inverse pair, computing its canonical word
    /// by repeatedly peeling the smallest left descent.
    pub(crate) fn element_from_parts(&self, mat: Mat, inv: Mat) -> GroupElement {
        let mut word = Vec::new();
        let mut cur = inv.clone();
        'outer: loop {
            for s in 0..self.num_generators() {
                if !self.is_positive(&cur.apply(self.simple_vector(s))) {
                    word.push(s);
                    cur = cur.mul(self.generator_matrix(s));
                    continue 'outer;
                }
            }
            break;
        }
        GroupElement {
            mat,
            inv,
            word,
            sys: self.fingerprint(),
            affine: self.is_affine(),
        }
    }

    pub fn identity(&self) -> GroupElement {
        let m = Mat::identity(self.dim());
        GroupElement {
            mat: m.clone(),
            inv: m,
            word: Vec::new(),
            sys: self.fingerprint(),
            affine: self.is_affine(),
        }
    }

    pub fn generator(&self, s: usize) -> Result<GroupElement> {
        if s >= self.num_generators() {
            return domain(format!("generator index {s} out of range"));
        }
        let m = self.generator_matrix(s).clone();
        Ok(GroupElement {
            mat: m.clone(),
            inv: m,
            word: vec![s],
            sys: self.fingerprint(),
            affine: self.is_affine(),
        })
    }

    /// The element represented by an arbitrary (not necessarily reduced) word.
    pub fn from_word(&self, word: &[usize]) -> Result<GroupElement> {
        let mut mat = Mat::identity(self.dim());
        let mut inv = Mat::identity(self.dim());
        for &s in word {
            if s >= self.num_generators() {
                return domain(format!("generator index {s} out of range"));
            }
            let g = self.generator_matrix(s);
            mat = mat.mul(g);
            inv = g.mul(&inv);
        }
        Ok(self.element_from_parts(mat, inv))
    }

    pub fn mul(&self, x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.element_from_parts(x.mat.mul(&y.mat), y.inv.mul(&x.inv)))
    }

    pub fn inverse(&self, x: &GroupElement) -> Result<GroupElement> {
        self.check(x)?;
        Ok(self.element_from_parts(x.inv.clone(), x.mat.clone()))
    }

    /// `x · s`, without validation.
    pub(crate) fn mul_gen(&self, x: &GroupElement, s: usize) -> GroupElement {
        let g = self.generator_matrix(s);
        self.element_from_parts(x.mat.mul(g), g.mul(&x.inv))
    }

    /// `w(ρ)`.
    pub fn act(&self, w: &GroupElement, rho: &Root) -> Result<Root> {
        self.check(w)?;
        if !self.is_root(rho) {
            return domain(format!("{rho} is not a root"));
        }
        Ok(self.act_unchecked(w, rho))
    }

    pub(crate) fn act_unchecked(&self, w: &GroupElement, rho: &Root) -> Root {
        Root::from_vec(&w.mat.apply(&rho.to_vec(self.dim())), self.rank())
    }

    /// `w⁻¹(ρ)`.
    pub(crate) fn act_inverse(&self, w: &GroupElement, rho: &Root) -> Root {
        Root::from_vec(&w.inv.apply(&rho.to_vec(self.dim())), self.rank())
    }

    /// The root `w(α_s)`.
    pub(crate) fn image_of_simple(&self, w: &GroupElement, s: usize) -> Root {
        Root::from_vec(&w.mat.apply(self.simple_vector(s)), self.rank())
    }

    pub fn length(&self, w: &GroupElement) -> usize {
        w.length()
    }

    /// `{s : w(α_s) < 0}`.
    pub fn right_descents(&self, w: &GroupElement) -> Vec<usize> {
        (0..self.num_generators())
            .filter(|&s| !self.is_positive(&w.mat.apply(self.simple_vector(s))))
            .collect()
    }

    /// `{s : w⁻¹(α_s) < 0}`.
    pub fn left_descents(&self, w: &GroupElement) -> Vec<usize> {
        (0..self.num_generators())
            .filter(|&s| !self.is_positive(&w.inv.apply(self.simple_vector(s))))
            .collect()
    }

    /// Length together with the right descent set.
    pub fn length_and_descents(&self, w: &GroupElement) -> (usize, Vec<usize>) {
        (w.length(), self.right_descents(w))
    }

    pub fn is_right_descent(&self, w: &GroupElement, s: usize) -> bool {
        !self.is_positive(&w.mat.apply(self.simple_vector(s)))
    }

    /// ShortLex-minimal reduced word.
    pub fn reduced_word(&self, w: &GroupElement) -> Word {
        w.word.clone()
    }

    /// All elements of length at most `radius`, sorted by (length, ShortLex word).
    pub fn ball(&self, radius: usize) -> Vec<GroupElement> {
        let mut out = vec![self.identity()];
        let mut seen: HashSet<Vec<i64>> = HashSet::from([out[0].mat.a.clone()]);
        let mut layer = vec![self.identity()];
        for _ in 0..radius {
            let mut next = Vec::new();
            for w in &layer {
                for s in 0..self.num_generators() {
                    if self.is_right_descent(w, s) {
                        continue;
                    }
                    let g = self.generator_matrix(s);
                    let mat = w.mat.mul(g);
                    if seen.contains(&mat.a) {
                        continue;
                    }
                    seen.insert(mat.a.clone());
                    next.push(self.element_from_parts(mat, g.mul(&w.inv)));
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort();
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    /// Elements `u` with `u ≤ v` in the right weak order (all prefixes of `v`), sorted.
    pub fn weak_lower_interval(&self, v: &GroupElement) -> Vec<GroupElement> {
        let mut seen: HashSet<Vec<i64>> = HashSet::from([v.mat.a.clone()]);
        let mut out = vec![v.clone()];
        let mut frontier = vec![v.clone()];
        while let Some(w) = frontier.pop() {
            for s in self.right_descents(&w) {
                let u = self.mul_gen(&w, s);
                if seen.insert(u.mat.a.clone()) {
                    frontier.push(u.clone());
                    out.push(u);
                }
            }
        }
        out.sort();
        out
    }

    /// Parses a comma separated word such as `0,1,0`; `e` or the empty string is the identity.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let t = text.trim();
        if t.is_empty() || t == "e" {
            return Ok(Vec::new());
        }
        t.split(',')
            .map(|p| {
                let p = p.trim();
                let s: usize = p
                    .parse()
                    .ok()
                    .or_else(|| self.generator_index(p))
                    .ok_or_else(|| Error::Parse(format!("bad generator {p:?}")))?;
                if s >= self.num_generators() {
                    return Err(Error::Parse(format!("generator index {s} out of range")));
                }
                Ok(s)
            })
            .collect()
    }

    pub fn parse_element(&self, text: &str) -> Result<GroupElement> {
        self.from_word(&self.parse_word(text)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(t: &str) -> CoxeterSystem {
        CoxeterSystem::from_type(t).unwrap()
    }

    #[test]
    fn a2_products() {
        let s = sys("A2");
        let a = s.generator(0).unwrap();
        let b = s.generator(1).unwrap();
        assert!(s.mul(&a, &a).unwrap().is_identity());
        let ab = s.mul(&a, &b).unwrap();
        assert_eq!(s.inverse(&ab).unwrap().word(), &[1, 0]);
    }

    #[test]
    fn affine_product_word() {
        let s = sys("A~1");
        let x = s.mul(&s.generator(0).unwrap(), &s.generator(1).unwrap()).unwrap();
        assert_eq!(x.word(), &[0, 1]);
        assert_eq!(x.length(), 2);
        assert_eq!(s.right_descents(&x), vec![1]);
    }

    #[test]
    fn longest_element_a2() {
        let s = sys("A2");
        let w0 = s.from_word(&[1, 0, 1]).unwrap();
        assert_eq!(w0.word(), &[0, 1, 0]);
        assert_eq!(s.length_and_descents(&w0), (3, vec![0, 1]));
        assert_eq!(s.length_and_descents(&s.identity()), (0, vec![]));
    }

    #[test]
    fn ball_sizes() {
        let s = sys("A2");
        let b = s.ball(3);
        let profile: Vec<usize> = (0..=3).map(|k| b.iter().filter(|w| w.length() == k).count()).collect();
        assert_eq!(profile, vec![1, 2, 2, 1]);
        assert_eq!(sys("A~1").ball(3).len(), 7);
        assert_eq!(sys("A~2").ball(0).len(), 1);
    }

    #[test]
    fn mixed_systems_rejected() {
        let a = sys("A2");
        let b = sys("B2");
        let x = a.generator(0).unwrap();
        let y = b.generator(0).unwrap();
        assert!(matches!(a.mul(&x, &y), Err(Error::Domain(_))));
    }

    #[test]
    fn non_reduced_word_reduces() {
        let s = sys("A~2");
        let w = s.from_word(&[0, 1, 1, 2, 0, 0]).unwrap();
        assert_eq!(w.word(), &[0, 2]);
    }

    #[test]
    fn word_parsing() {
        let s = sys("A~1");
        assert_eq!(s.parse_word("e").unwrap(), Vec::<usize>::new());
        assert_eq!(s.parse_word("1,0").unwrap(), vec![1, 0]);
        assert_eq!(s.parse_word("a,δ-a").unwrap(), vec![0, 1]);
        assert!(s.parse_word("2").is_err());
    }
}
