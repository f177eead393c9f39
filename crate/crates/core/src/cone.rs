//! Exact polyhedral cone queries by Fourier–Motzkin elimination.
//!
//! Membership `t ∈ cone(G)` is decided on the Farkas alternative: either
//! `t = Σ k_i g_i` with `k ≥ 0`, or some `y` has `g_i·y ≥ 0` for all `i`
//! and `t·y ≤ −1`. The second system is eliminated variable by variable.

use std::collections::HashMap;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Zero};

/// `a·y ≥ b`, with the set of original rows it was combined from.
#[derive(Clone)]
struct Ineq {
    a: Vec<i128>,
    b: i128,
    hist: u128,
}

impl Ineq {
    fn normalize(mut self) -> Self {
        let g = self
            .a
            .iter()
            .chain(std::iter::once(&self.b))
            .fold(0i128, |g, x| g.gcd(x));
        if g > 1 {
            self.a.iter_mut().for_each(|x| *x /= g);
            self.b /= g;
        }
        self
    }
}

/// Whether `{y : a_k·y ≥ b_k}` is nonempty.
fn feasible(rows: Vec<Ineq>, dim: usize) -> bool {
    let prune = rows.len() <= 128;
    feasible_with(rows, dim, prune)
}

/// `prune` applies Chernikov's rule: after `k` eliminations a row combined
/// from more than `k + 1` originals is redundant.
fn feasible_with(mut rows: Vec<Ineq>, dim: usize, prune: bool) -> bool {
    let mut remaining: Vec<usize> = (0..dim).collect();
    let mut eliminated = 0u32;
    loop {
        // keep only the strongest bound per direction
        let mut best: HashMap<Vec<i128>, Ineq> = HashMap::new();
        for r in rows {
            let r = r.normalize();
            if r.a.iter().all(|x| *x == 0) {
                if r.b > 0 {
                    return false;
                }
                continue;
            }
            match best.get(&r.a) {
                Some(old) if old.b >= r.b => {}
                _ => {
                    best.insert(r.a.clone(), r);
                }
            }
        }
        rows = best.into_values().collect();
        if rows.is_empty() || remaining.is_empty() {
            return true;
        }
        let (pos_j, _) = remaining
            .iter()
            .enumerate()
            .map(|(k, &j)| {
                let p = rows.iter().filter(|r| r.a[j] > 0).count();
                let n = rows.iter().filter(|r| r.a[j] < 0).count();
                (k, p * n)
            })
            .min_by_key(|&(_, cost)| cost)
            .expect("nonempty");
        let j = remaining.swap_remove(pos_j);
        eliminated += 1;
        let (mut pos, mut neg, mut keep) = (Vec::new(), Vec::new(), Vec::new());
        for r in rows {
            match r.a[j].signum() {
                1 => pos.push(r),
                -1 => neg.push(r),
                _ => keep.push(r),
            }
        }
        for p in &pos {
            for n in &neg {
                let hist = p.hist | n.hist;
                if prune && hist.count_ones() > eliminated + 1 {
                    continue;
                }
                let (fp, fn_) = (-n.a[j], p.a[j]);
                let a = p.a.iter().zip(&n.a).map(|(x, y)| x * fp + y * fn_).collect();
                keep.push(Ineq {
                    a,
                    b: p.b * fp + n.b * fn_,
                    hist,
                });
            }
        }
        rows = keep;
    }
}

fn rows_from(vectors: &[Vec<i64>], sign: i128, b: i128, offset: usize) -> impl Iterator<Item = Ineq> + '_ {
    vectors.iter().enumerate().map(move |(i, v)| Ineq {
        a: v.iter().map(|&x| sign * x as i128).collect(),
        b,
        hist: if offset + i < 128 { 1u128 << (offset + i) } else { 0 },
    })
}

/// Whether `target` is a nonnegative rational combination of `generators`.
pub fn cone_contains(generators: &[Vec<i64>], target: &[i64]) -> bool {
    if target.iter().all(|&x| x == 0) {
        return true;
    }
    if generators.is_empty() {
        return false;
    }
    let dim = target.len();
    let mut rows: Vec<Ineq> = rows_from(generators, 1, 0, 0).collect();
    rows.extend(rows_from(std::slice::from_ref(&target.to_vec()), -1, 1, generators.len()));
    !feasible(rows, dim)
}

/// Nonnegative coefficients `k` with `Σ k_i g_i = target`, supported on a
/// linearly independent subset of the generators.
pub fn cone_solution(generators: &[Vec<i64>], target: &[i64]) -> Option<Vec<Rational64>> {
    if !cone_contains(generators, target) {
        return None;
    }
    let mut active: Vec<usize> = (0..generators.len()).collect();
    let mut i = 0;
    while i < active.len() {
        let mut trial = active.clone();
        trial.remove(i);
        let sub: Vec<Vec<i64>> = trial.iter().map(|&k| generators[k].clone()).collect();
        if cone_contains(&sub, target) {
            active = trial;
        } else {
            i += 1;
        }
    }
    let cols: Vec<Vec<i64>> = active.iter().map(|&k| generators[k].clone()).collect();
    let k = solve_columns(&cols, target)?;
    let mut out = vec![Rational64::zero(); generators.len()];
    for (idx, v) in active.into_iter().zip(k) {
        out[idx] = v;
    }
    Some(out)
}

/// Unique solution of `Σ k_i c_i = t` for linearly independent columns.
fn solve_columns(cols: &[Vec<i64>], t: &[i64]) -> Option<Vec<Rational64>> {
    let m = cols.len();
    let rows = t.len();
    let mut aug: Vec<Vec<Rational64>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rational64> = cols.iter().map(|c| Rational64::from(c[r])).collect();
            row.push(Rational64::from(t[r]));
            row
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::with_capacity(m);
    for c in 0..m {
        let Some(p) = (pivot_row..rows).find(|&r| !aug[r][c].is_zero()) else {
            return None;
        };
        aug.swap(pivot_row, p);
        let inv = Rational64::one() / aug[pivot_row][c];
        aug[pivot_row].iter_mut().for_each(|x| *x *= inv);
        for r in 0..rows {
            if r != pivot_row && !aug[r][c].is_zero() {
                let f = aug[r][c];
                let src = aug[pivot_row].clone();
                aug[r].iter_mut().zip(&src).for_each(|(x, s)| *x -= f * s);
            }
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    if aug[pivot_row..].iter().any(|row| !row[m].is_zero()) {
        return None;
    }
    Some(pivots.into_iter().map(|r| aug[r][m]).collect())
}

/// Whether some `y` has `y·a > 0` on `first` and `y·b < 0` on `second`.
///
/// By Gordan's alternative this fails exactly when a nontrivial nonnegative
/// combination of `first` equals one of `second`; for pointed cones (such as
/// cones of positive roots) that is a nonzero common point.
pub fn strictly_separable(first: &[Vec<i64>], second: &[Vec<i64>]) -> bool {
    let Some(dim) = first.iter().chain(second).map(Vec::len).next() else {
        return true;
    };
    let mut rows: Vec<Ineq> = rows_from(first, 1, 1, 0).collect();
    rows.extend(rows_from(second, -1, 1, first.len()));
    feasible(rows, dim)
}

/// A point `Σ a_i f_i = Σ b_j s_j` with `a, b ≥ 0` and `Σa + Σb = 1`, scaled to a
/// primitive integer vector; `None` when the families are strictly separable.
pub fn common_point(first: &[Vec<i64>], second: &[Vec<i64>]) -> Option<Vec<i64>> {
    let dim = first.iter().chain(second).map(Vec::len).next()?;
    let gens: Vec<Vec<i64>> = first
        .iter()
        .map(|v| v.iter().copied().chain([1]).collect())
        .chain(second.iter().map(|v| v.iter().map(|x| -x).chain([1]).collect()))
        .collect();
    let mut target = vec![0; dim];
    target.push(1);
    let k = cone_solution(&gens, &target)?;
    let mut p = vec![Rational64::zero(); dim];
    for (ki, f) in k.iter().zip(first) {
        for (pj, &x) in p.iter_mut().zip(f) {
            *pj += ki * Rational64::from(x);
        }
    }
    let l = p.iter().fold(1i64, |acc, x| acc.lcm(x.denom()));
    let ints: Vec<i64> = p.iter().map(|x| (x * Rational64::from(l)).to_integer()).collect();
    let g = ints.iter().fold(0i64, |acc, x| acc.gcd(x));
    Some(if g > 1 { ints.iter().map(|x| x / g).collect() } else { ints })
}
