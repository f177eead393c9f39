//! Cartan data for finite crystallographic and untwisted affine Coxeter systems.
//!
//! Vectors are written in the basis `(α_1, …, α_n)` for finite systems and
//! `(α_1, …, α_n, δ)` for affine ones. The extra affine simple root is
//! `α_0 = δ − γ` with `γ` the highest root of the finite part; it is generator
//! index `n`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{det, rat, Mat};

/// Finite Weyl group or its untwisted affine extension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Finite,
    Affine,
}

/// A validated Coxeter system. Cheap to clone.
#[derive(Clone)]
pub struct CoxeterSystem {
    pub(crate) data: Arc<SystemData>,
}

pub(crate) struct SystemData {
    pub label: String,
    pub kind: Kind,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub symmetrizer: Vec<Rational64>,
    /// `(α_i, α_j) = d_i A_ij`.
    pub gram: Vec<Vec<Rational64>>,
    pub names: Vec<String>,
    pub highest_root: Option<Vec<i64>>,
    /// Positive roots of the finite part, sorted by (height, coefficients).
    pub positive_finite: Vec<Vec<i64>>,
    pub finite_roots: HashSet<Vec<i64>>,
    pub generators: Vec<Mat>,
    /// Simple roots as vectors of length `dim`, one per generator.
    pub simple: Vec<Vec<i64>>,
    pub fingerprint: u64,
}

impl fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoxeterSystem")
            .field("label", &self.data.label)
            .field("kind", &self.data.kind)
            .field("cartan", &self.data.cartan)
            .finish()
    }
}

impl PartialEq for CoxeterSystem {
    fn eq(&self, other: &Self) -> bool {
        self.data.fingerprint == other.data.fingerprint
    }
}

impl CoxeterSystem {
    /// Builds a system from a type string such as `A2`, `G2`, `A~1` or `C~2`.
    pub fn from_type(text: &str) -> Result<Self> {
        let s = text.trim();
        let (body, affine) = match s.find('~') {
            Some(p) => {
                let mut b = String::from(&s[..p]);
                b.push_str(&s[p + 1..]);
                (b, true)
            }
            None => (s.to_string(), false),
        };
        let mut chars = body.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::Parse("empty type string".into()))?
            .to_ascii_uppercase();
        let n: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("unknown type string {text:?}")))?;
        let cartan = cartan_of_type(letter, n)
            .ok_or_else(|| Error::Parse(format!("unknown type string {text:?}")))?;
        let label = if affine {
            format!("{letter}~{n}")
        } else {
            format!("{letter}{n}")
        };
        Self::build(label, cartan, None, affine)
    }

    /// Builds a system from an explicit generalized Cartan matrix of finite type.
    pub fn from_cartan(
        cartan: Vec<Vec<i64>>,
        symmetrizer: Option<Vec<Rational64>>,
        affine: bool,
    ) -> Result<Self> {
        Self::build("custom".into(), cartan, symmetrizer, affine)
    }

    /// Parses the plain-text Cartan file format:
    ///
    /// ```text
    /// rank 2 affine
    /// 2 -1
    /// -3 2
    /// symmetrizer 1 3
    /// ```
    pub fn from_cartan_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let head = lines
            .next()
            .ok_or_else(|| Error::Parse("empty Cartan file".into()))?;
        let mut toks = head.split_whitespace();
        if toks.next() != Some("rank") {
            return Err(Error::Parse("first line must be `rank k [affine]`".into()));
        }
        let k: usize = toks
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse("missing rank".into()))?;
        let affine = match toks.next() {
            None => false,
            Some("affine") => true,
            Some(t) => return Err(Error::Parse(format!("unexpected token {t:?}"))),
        };
        let mut cartan = Vec::with_capacity(k);
        for _ in 0..k {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse("too few Cartan rows".into()))?;
            let row: Vec<i64> = line
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad entry {t:?}"))))
                .collect::<Result<_>>()?;
            if row.len() != k {
                return Err(Error::Parse(format!("row {line:?} does not have {k} entries")));
            }
            cartan.push(row);
        }
        let mut symmetrizer = None;
        if let Some(line) = lines.next() {
            let mut toks = line.split_whitespace();
            if toks.next() != Some("symmetrizer") {
                return Err(Error::Parse(format!("unexpected line {line:?}")));
            }
            let d: Vec<Rational64> = toks.map(parse_rational).collect::<Result<_>>()?;
            if d.len() != k {
                return Err(Error::Parse("symmetrizer length mismatch".into()));
            }
            symmetrizer = Some(d);
        }
        if let Some(extra) = lines.next() {
            return Err(Error::Parse(format!("trailing content {extra:?}")));
        }
        Self::build("custom".into(), cartan, symmetrizer, affine)
    }

    fn build(
        label: String,
        cartan: Vec<Vec<i64>>,
        symmetrizer: Option<Vec<Rational64>>,
        affine: bool,
    ) -> Result<Self> {
        let n = cartan.len();
        if n == 0 {
            return Err(Error::Validation("rank must be positive".into()));
        }
        if cartan.iter().any(|r| r.len() != n) {
            return Err(Error::Validation("Cartan matrix must be square".into()));
        }
        for i in 0..n {
            if cartan[i][i] != 2 {
                return Err(Error::Validation(format!("cartan[{i}][{i}] must be 2")));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if cartan[i][j] > 0 {
                    return Err(Error::Validation(format!(
                        "off-diagonal entry cartan[{i}][{j}] must be <= 0"
                    )));
                }
                if (cartan[i][j] == 0) != (cartan[j][i] == 0) {
                    return Err(Error::Validation(format!(
                        "asymmetric zero pattern at ({i},{j})"
                    )));
                }
            }
        }
        let d = match symmetrizer {
            Some(d) => {
                if d.len() != n || d.iter().any(|x| !x.is_positive()) {
                    return Err(Error::Validation(
                        "symmetrizer must have one positive entry per simple root".into(),
                    ));
                }
                d
            }
            None => find_symmetrizer(&cartan)?,
        };
        let gram: Vec<Vec<Rational64>> = (0..n)
            .map(|i| (0..n).map(|j| d[i] * rat(cartan[i][j])).collect())
            .collect();
        for i in 0..n {
            for j in 0..n {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::Validation(
                        "D·A is not symmetric for the given symmetrizer".into(),
                    ));
                }
            }
        }
        for k in 1..=n {
            let minor: Vec<Vec<Rational64>> = gram[..k].iter().map(|r| r[..k].to_vec()).collect();
            if !det(&minor).is_positive() {
                return Err(Error::Validation(
                    "finite part is not positive definite (not of finite type)".into(),
                ));
            }
        }
        let positive_finite = finite_positive_roots(&cartan)?;
        let mut finite_roots = HashSet::new();
        for r in &positive_finite {
            finite_roots.insert(r.clone());
            finite_roots.insert(r.iter().map(|x| -x).collect());
        }

        let components = components(&cartan);
        let dim = if affine { n + 1 } else { n };
        let mut names: Vec<String> = (0..n).map(default_name).collect();
        let mut generators = Vec::new();
        let mut simple = Vec::new();
        for j in 0..n {
            let mut m = Mat::identity(dim);
            for i in 0..n {
                let v = m.get(j, i) - cartan[j][i];
                m.set(j, i, v);
            }
            generators.push(m);
            let mut e = vec![0; dim];
            e[j] = 1;
            simple.push(e);
        }
        let mut highest_root = None;
        let kind = if affine {
            if components != 1 {
                return Err(Error::Validation(
                    "affine extension requires an irreducible finite part".into(),
                ));
            }
            let gamma = positive_finite
                .iter()
                .max_by_key(|r| r.iter().sum::<i64>())
                .cloned()
                .expect("nonempty root system");
            for j in 0..n {
                let mut t = gamma.clone();
                t[j] += 1;
                if finite_roots.contains(&t) {
                    return Err(Error::Validation("highest root is not maximal".into()));
                }
            }
            let gg = form(&gram, &gamma, &gamma);
            let mut m = Mat::identity(dim);
            for j in 0..n {
                let mut ej = vec![0; n];
                ej[j] = 1;
                let c = rat(2) * form(&gram, &gamma, &ej) / gg;
                if !c.is_integer() {
                    return Err(Error::Validation("non-integral affine reflection".into()));
                }
                let c = c.to_integer();
                // s_0(α_j) = α_j + c (δ − γ)
                for (i, g) in gamma.iter().enumerate() {
                    let v = m.get(i, j) - c * g;
                    m.set(i, j, v);
                }
                m.set(n, j, c);
            }
            generators.push(m);
            let mut a0: Vec<i64> = gamma.iter().map(|x| -x).collect();
            a0.push(1);
            simple.push(a0);
            names.push(affine_name(&gamma, &names));
            highest_root = Some(gamma);
            Kind::Affine
        } else {
            Kind::Finite
        };

        let mut h = std::collections::hash_map::DefaultHasher::new();
        kind.hash(&mut h);
        cartan.hash(&mut h);
        for x in &d {
            (x.numer(), x.denom()).hash(&mut h);
        }
        let fingerprint = h.finish();

        Ok(CoxeterSystem {
            data: Arc::new(SystemData {
                label,
                kind,
                rank: n,
                cartan,
                symmetrizer: d,
                gram,
                names,
                highest_root,
                positive_finite,
                finite_roots,
                generators,
                simple,
                fingerprint,
            }),
        })
    }

    /// Returns a copy of this system with different generator labels.
    pub fn with_names(&self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.num_generators() {
            return Err(Error::Validation("one name per generator required".into()));
        }
        let d = &self.data;
        Ok(CoxeterSystem {
            data: Arc::new(SystemData {
                label: d.label.clone(),
                kind: d.kind,
                rank: d.rank,
                cartan: d.cartan.clone(),
                symmetrizer: d.symmetrizer.clone(),
                gram: d.gram.clone(),
                names,
                highest_root: d.highest_root.clone(),
                positive_finite: d.positive_finite.clone(),
                finite_roots: d.finite_roots.clone(),
                generators: d.generators.clone(),
                simple: d.simple.clone(),
                fingerprint: d.fingerprint,
            }),
        })
    }

    pub fn label(&self) -> &str {
        &self.data.label
    }

    pub fn kind(&self) -> Kind {
        self.data.kind
    }

    pub fn is_affine(&self) -> bool {
        self.data.kind == Kind::Affine
    }

    /// Rank of the finite part.
    pub fn rank(&self) -> usize {
        self.data.rank
    }

    /// Dimension of the representation: `rank` or `rank + 1`.
    pub fn dim(&self) -> usize {
        self.data.rank + usize::from(self.is_affine())
    }

    pub fn num_generators(&self) -> usize {
        self.data.generators.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.data.cartan
    }

    pub fn symmetrizer(&self) -> &[Rational64] {
        &self.data.symmetrizer
    }

    pub fn simple_names(&self) -> &[String] {
        &self.data.names
    }

    /// Index of a generator by label.
    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.data.names.iter().position(|n| n == name)
    }

    /// Highest root of the finite part, affine systems only.
    pub fn highest_root(&self) -> Option<&[i64]> {
        self.data.highest_root.as_deref()
    }

    pub(crate) fn fingerprint(&self) -> u64 {
        self.data.fingerprint
    }

    pub(crate) fn gram(&self) -> &[Vec<Rational64>] {
        &self.data.gram
    }

    pub(crate) fn generator_matrix(&self, s: usize) -> &Mat {
        &self.data.generators[s]
    }

    pub(crate) fn simple_vector(&self, s: usize) -> &[i64] {
        &self.data.simple[s]
    }

    /// Positive roots of the finite part as coefficient vectors.
    pub fn finite_positive_roots(&self) -> &[Vec<i64>] {
        &self.data.positive_finite
    }

    pub(crate) fn is_finite_root(&self, coeffs: &[i64]) -> bool {
        self.data.finite_roots.contains(coeffs)
    }

    /// Number of independent irreducible components of the finite part.
    pub fn num_components(&self) -> usize {
        components(&self.data.cartan)
    }
}

pub(crate) fn form(gram: &[Vec<Rational64>], x: &[i64], y: &[i64]) -> Rational64 {
    let mut s = Rational64::zero();
    for (i, &xi) in x.iter().enumerate() {
        if xi == 0 {
            continue;
        }
        for (j, &yj) in y.iter().enumerate() {
            if yj != 0 {
                s += gram[i][j] * rat(xi * yj);
            }
        }
    }
    s
}

fn default_name(i: usize) -> String {
    ((b'a' + i as u8) as char).to_string()
}

fn affine_name(gamma: &[i64], names: &[String]) -> String {
    let mut s = String::from("δ");
    for (c, n) in gamma.iter().zip(names) {
        match c {
            0 => {}
            1 => s.push_str(&format!("-{n}")),
            c => s.push_str(&format!("-{c}{n}")),
        }
    }
    s
}

fn parse_rational(t: &str) -> Result<Rational64> {
    let bad = || Error::Parse(format!("bad rational {t:?}"));
    match t.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.parse().map_err(|_| bad())?;
            let q: i64 = q.parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Rational64::new(p, q))
        }
        None => t.parse::<i64>().map(rat).map_err(|_| bad()),
    }
}

fn components(cartan: &[Vec<i64>]) -> usize {
    let n = cartan.len();
    let mut seen = vec![false; n];
    let mut count = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut q = VecDeque::from([start]);
        seen[start] = true;
        while let Some(i) = q.pop_front() {
            for j in 0..n {
                if !seen[j] && cartan[i][j] != 0 {
                    seen[j] = true;
                    q.push_back(j);
                }
            }
        }
    }
    count
}

/// Propagates `d_i A_ij = d_j A_ji` along the Dynkin graph and clears
/// denominators so the smallest entries are coprime integers.
fn find_symmetrizer(cartan: &[Vec<i64>]) -> Result<Vec<Rational64>> {
    let n = cartan.len();
    let mut d: Vec<Option<Rational64>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(rat(1));
        let mut q = VecDeque::from([start]);
        while let Some(i) = q.pop_front() {
            let di = d[i].unwrap();
            for j in 0..n {
                if i == j || cartan[i][j] == 0 {
                    continue;
                }
                let dj = di * rat(cartan[i][j]) / rat(cartan[j][i]);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        q.push_back(j);
                    }
                    Some(x) if x != dj => {
                        return Err(Error::Validation("Cartan matrix is not symmetrizable".into()))
                    }
                    _ => {}
                }
            }
        }
    }
    let d: Vec<Rational64> = d.into_iter().map(Option::unwrap).collect();
    let l = d.iter().fold(1i64, |acc, x| acc.lcm(x.denom()));
    let ints: Vec<i64> = d.iter().map(|x| (x * rat(l)).to_integer()).collect();
    let g = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    Ok(ints.into_iter().map(|x| rat(x / g)).collect())
}

/// Generates the positive roots of the finite part by repeated simple reflections.
fn finite_positive_roots(cartan: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    const LIMIT: usize = 4096;
    let n = cartan.len();
    let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut q = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone(), ());
        q.push_back(e);
    }
    while let Some(v) = q.pop_front() {
        for j in 0..n {
            let pairing: i64 = (0..n).map(|i| cartan[j][i] * v[i]).sum();
            let mut w = v.clone();
            w[j] -= pairing;
            if w.iter().all(|&x| x >= 0) && w.iter().any(|&x| x > 0) && !seen.contains_key(&w) {
                seen.insert(w.clone(), ());
                q.push_back(w);
                if seen.len() > LIMIT {
                    return Err(Error::Validation("root system is not finite".into()));
                }
            }
        }
    }
    let mut roots: Vec<Vec<i64>> = seen.into_keys().collect();
    roots.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    Ok(roots)
}

/// Bourbaki-numbered Cartan matrices, `A_ij = <α_i^∨, α_j>`.
fn cartan_of_type(letter: char, n: usize) -> Option<Vec<Vec<i64>>> {
    let chain = |n: usize| {
        let mut a = vec![vec![0i64; n]; n];
        for i in 0..n {
            a[i][i] = 2;
            if i + 1 < n {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
        }
        a
    };
    let m = match (letter, n) {
        ('A', n) if n >= 1 => chain(n),
        ('B', n) if n >= 2 => {
            let mut a = chain(n);
            a[n - 1][n - 2] = -2;
            a
        }
        ('C', n) if n >= 2 => {
            let mut a = chain(n);
            a[n - 2][n - 1] = -2;
            a
        }
        ('D', n) if n >= 4 => {
            let mut a = chain(n);
            a[n - 2][n - 1] = 0;
            a[n - 1][n - 2] = 0;
            a[n - 3][n - 1] = -1;
            a[n - 1][n - 3] = -1;
            a
        }
        ('E', n) if (6..=8).contains(&n) => {
            let mut a = vec![vec![0i64; n]; n];
            let mut edges = vec![(0, 2), (2, 3), (3, 4), (1, 3)];
            for k in 4..n - 1 {
                edges.push((k, k + 1));
            }
            for i in 0..n {
                a[i][i] = 2;
            }
            for (i, j) in edges {
                a[i][j] = -1;
                a[j][i] = -1;
            }
            a
        }
        ('F', 4) => {
            let mut a = chain(4);
            a[2][1] = -2;
            a
        }
        ('G', 2) => vec![vec![2, -3], vec![-1, 2]],
        _ => return None,
    };
    Some(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_cartan_and_roots() {
        let s = CoxeterSystem::from_type("A2").unwrap();
        assert_eq!(s.cartan(), &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(s.finite_positive_roots().len(), 3);
        assert_eq!(s.kind(), Kind::Finite);
    }

    #[test]
    fn affine_a1_generators() {
        let s = CoxeterSystem::from_type("A~1").unwrap();
        assert_eq!(s.num_generators(), 2);
        assert_eq!(s.highest_root(), Some(&[1][..]));
        assert_eq!(s.simple_names(), &["a".to_string(), "δ-a".to_string()]);
    }

    #[test]
    fn explicit_g2_orientation() {
        let s = CoxeterSystem::from_cartan(vec![vec![2, -1], vec![-3, 2]], None, false).unwrap();
        assert_eq!(s.finite_positive_roots().len(), 6);
    }

    #[test]
    fn positive_root_counts() {
        for (t, k) in [("B2", 4), ("G2", 6), ("A3", 6), ("B3", 9), ("C3", 9), ("D4", 12), ("F4", 24), ("E6", 36)] {
            let s = CoxeterSystem::from_type(t).unwrap();
            assert_eq!(s.finite_positive_roots().len(), k, "{t}");
        }
    }

    #[test]
    fn rejects_bad_matrices() {
        let e = CoxeterSystem::from_cartan(vec![vec![2, -1], vec![0, 2]], None, false);
        assert!(matches!(e, Err(Error::Validation(m)) if m.contains("zero pattern")));
        let e = CoxeterSystem::from_cartan(vec![vec![2, -2], vec![-2, 2]], None, false);
        assert!(matches!(e, Err(Error::Validation(m)) if m.contains("positive definite")));
        let e = CoxeterSystem::from_cartan(vec![vec![2, 0], vec![0, 2]], None, true);
        assert!(matches!(e, Err(Error::Validation(m)) if m.contains("irreducible")));
        assert!(matches!(CoxeterSystem::from_type("Q3"), Err(Error::Parse(_))));
        assert!(matches!(CoxeterSystem::from_type("B1"), Err(Error::Parse(_))));
    }

    #[test]
    fn reducible_matrix_accepted() {
        let s = CoxeterSystem::from_cartan(vec![vec![2, 0], vec![0, 2]], None, false).unwrap();
        assert_eq!(s.num_components(), 2);
    }

    #[test]
    fn cartan_file() {
        let s = CoxeterSystem::from_cartan_text("rank 2 affine\n2 -1\n-3 2\nsymmetrizer 1 1/3\n").unwrap();
        assert!(s.is_affine());
        assert_eq!(s.symmetrizer(), &[rat(1), Rational64::new(1, 3)]);
        let e = CoxeterSystem::from_cartan_text("rank 2\n2 -1\n-3 2\nsymmetrizer 1 1\n");
        assert!(matches!(e, Err(Error::Validation(_))));
        assert!(matches!(CoxeterSystem::from_cartan_text("rk 2"), Err(Error::Parse(_))));
    }

    #[test]
    fn symmetrizer_b2() {
        let s = CoxeterSystem::from_type("B2").unwrap();
        assert_eq!(s.symmetrizer(), &[rat(2), rat(1)]);
        let c = CoxeterSystem::from_type("C~2").unwrap();
        assert_eq!(c.highest_root(), Some(&[2, 1][..]));
        assert_eq!(c.simple_names()[2], "δ-2a-b");
    }
}
