use std::collections::BTreeSet;
use std::fmt;

use crate::error::{domain, Error, Result};
use crate::group::GroupElement;
use crate::roots::Root;
use crate::system::CoxeterSystem;
use crate::words::{csv, PeriodicWord};

/// Exact membership oracle for a (possibly infinite) subset of the positive roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Biclosed {
    /// A finite set of positive roots.
    Explicit(BTreeSet<Root>),
    /// `hat(Ψ⁺_{Δ1,Δ2})` with `Ψ⁺ = u(Φ⁺)`; in a finite system the level-zero
    /// part `Ψ⁺_{Δ1,Δ2} ∩ Φ⁺`.
    Hat { u: GroupElement, d1: Vec<usize>, d2: Vec<usize> },
    /// `w·B = (Φ_w ∖ w(−B)) ∪ (w(B) ∖ −Φ_w)`.
    Twisted(GroupElement, Box<Biclosed>),
    /// `Φ_w` of a finite element.
    InvSet(GroupElement),
    /// `Φ_x` of an infinite reduced word.
    InfWord(PeriodicWord),
    /// Positive roots not in the inner set.
    Complement(Box<Biclosed>),
}

/// `β ∈ Ψ⁺_{Δ1,Δ2}` for the finite part `β` of `ρ`, where `Ψ⁺ = u(Φ⁺)`.
pub(crate) fn psi_contains(sys: &CoxeterSystem, u: &GroupElement, d1: &[usize], d2: &[usize], rho: &Root) -> bool {
    let b = sys.act_inverse(u, &rho.finite_part());
    let support = || b.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, _)| i);
    let in_d1 = support().all(|i| d1.contains(&i));
    let in_d2 = support().all(|i| d2.contains(&i));
    (b.is_positive() && !in_d1) || in_d2
}

impl Biclosed {
    pub fn empty() -> Self {
        Biclosed::Explicit(BTreeSet::new())
    }

    pub fn full() -> Self {
        Biclosed::Complement(Box::new(Biclosed::empty()))
    }

    /// `hat(Φ⁻)`.
    pub fn hat_of_negative(sys: &CoxeterSystem) -> Self {
        let w0 = longest_weyl_element(sys);
        Biclosed::Hat { u: w0, d1: Vec::new(), d2: Vec::new() }
    }

    /// `hat(Φ⁺)`.
    pub fn hat_of_positive(sys: &CoxeterSystem) -> Self {
        Biclosed::Hat { u: sys.identity(), d1: Vec::new(), d2: Vec::new() }
    }

    /// Validated hat form: `u` in the finite Weyl group, `Δ1 ⊥ Δ2` and disjoint.
    pub fn hat(sys: &CoxeterSystem, u: GroupElement, d1: Vec<usize>, d2: Vec<usize>) -> Result<Self> {
        let n = sys.rank();
        if u.word().iter().any(|&s| s >= n) {
            return domain("hat forms need u in the finite Weyl group");
        }
        if d1.iter().chain(&d2).any(|&i| i >= n) {
            return domain("simple root index out of range");
        }
        if d1.iter().any(|i| d2.contains(i)) {
            return Err(Error::Validation("Δ1 and Δ2 must be disjoint".into()));
        }
        if d1.iter().any(|&i| d2.iter().any(|&j| sys.cartan()[i][j] != 0)) {
            return Err(Error::Validation("Δ1 and Δ2 must be orthogonal".into()));
        }
        let mut d1 = d1;
        let mut d2 = d2;
        d1.sort_unstable();
        d1.dedup();
        d2.sort_unstable();
        d2.dedup();
        Ok(Biclosed::Hat { u, d1, d2 })
    }

    /// Validated explicit set of positive roots.
    pub fn explicit(sys: &CoxeterSystem, roots: impl IntoIterator<Item = Root>) -> Result<Self> {
        let set: BTreeSet<Root> = roots.into_iter().collect();
        if let Some(r) = set.iter().find(|r| !sys.is_positive_root(r)) {
            return domain(format!("{r} is not a positive root"));
        }
        Ok(Biclosed::Explicit(set))
    }

    /// `w·B`, collapsing nested twists and dropping the identity.
    pub fn twist(sys: &CoxeterSystem, w: &GroupElement, b: Biclosed) -> Biclosed {
        match b {
            _ if w.is_identity() => b,
            Biclosed::Twisted(v, inner) => {
                let wv = sys.mul(w, &v).expect("same system");
                Biclosed::twist(sys, &wv, *inner)
            }
            other => Biclosed::Twisted(w.clone(), Box::new(other)),
        }
    }

    /// `Φ̃⁺ ∖ B`, cancelling double complements.
    pub fn complement(b: Biclosed) -> Biclosed {
        match b {
            Biclosed::Complement(inner) => *inner,
            other => Biclosed::Complement(Box::new(other)),
        }
    }

    /// Exact membership of a positive root.
    pub fn contains(&self, sys: &CoxeterSystem, rho: &Root) -> Result<bool> {
        if !sys.is_positive_root(rho) {
            return domain(format!("{rho} is not a positive root"));
        }
        Ok(self.has(sys, rho))
    }

    /// Membership without validating `ρ`.
    pub(crate) fn has(&self, sys: &CoxeterSystem, rho: &Root) -> bool {
        match self {
            Biclosed::Explicit(s) => s.contains(rho),
            Biclosed::Hat { u, d1, d2 } => psi_contains(sys, u, d1, d2, rho),
            Biclosed::Twisted(w, inner) => {
                let r = sys.act_inverse(w, rho);
                if r.is_positive() {
                    inner.has(sys, &r)
                } else {
                    !inner.has(sys, &r.neg())
                }
            }
            Biclosed::InvSet(w) => w.inverts(rho),
            Biclosed::InfWord(x) => x.contains(sys, rho),
            Biclosed::Complement(inner) => !inner.has(sys, rho),
        }
    }

    /// A level above which membership of `α + nδ` depends only on `α`.
    pub fn tail_level(&self, sys: &CoxeterSystem) -> i64 {
        match self {
            Biclosed::Explicit(s) => s.iter().map(Root::level).max().unwrap_or(0),
            Biclosed::Hat { .. } => 0,
            Biclosed::Twisted(w, inner) => inner.tail_level(sys) + sys.level_shift(w) + 1,
            Biclosed::InvSet(w) => sys.level_shift(w),
            Biclosed::InfWord(x) => x.tail_level(sys),
            Biclosed::Complement(inner) => inner.tail_level(sys),
        }
    }

    /// Members of level at most `level`, sorted.
    pub fn members_up_to(&self, sys: &CoxeterSystem, level: usize) -> BTreeSet<Root> {
        sys.positive_roots_up_to(level)
            .into_iter()
            .filter(|r| self.has(sys, r))
            .collect()
    }
}

/// Longest element of the finite Weyl group (so `u(Φ⁺) = Φ⁻`).
pub(crate) fn longest_weyl_element(sys: &CoxeterSystem) -> GroupElement {
    let n = sys.rank();
    let mut x = sys.identity();
    'grow: loop {
        for s in 0..n {
            if !sys.is_right_descent(&x, s) {
                x = sys.mul_gen(&x, s);
                continue 'grow;
            }
        }
        return x;
    }
}

impl fmt::Display for Biclosed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Biclosed::Explicit(s) if s.is_empty() => f.write_str("empty"),
            Biclosed::Explicit(s) => {
                let items: Vec<String> = s
                    .iter()
                    .map(|r| format!("[{}]", r.coeff_level().iter().map(i64::to_string).collect::<Vec<_>>().join(",")))
                    .collect();
                write!(f, "explicit [{}]", items.join(","))
            }
            Biclosed::Hat { u, d1, d2 } => write!(f, "hat {}:{}:{}", word_or_e(u.word()), csv(d1), csv(d2)),
            Biclosed::Twisted(w, inner) => write!(f, "twist {} ({inner})", word_or_e(w.word())),
            Biclosed::InvSet(w) => write!(f, "invset {}", word_or_e(w.word())),
            Biclosed::InfWord(x) => write!(f, "word-inf {x}"),
            Biclosed::Complement(inner) if matches!(**inner, Biclosed::Explicit(ref s) if s.is_empty()) => {
                f.write_str("full")
            }
            Biclosed::Complement(inner) => write!(f, "complement ({inner})"),
        }
    }
}

fn word_or_e(w: &[usize]) -> String {
    if w.is_empty() {
        "e".into()
    } else {
        csv(w)
    }
}
