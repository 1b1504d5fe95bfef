//! Simplicity of the shared roots for the family `kappa_bar_kb`.
//!
//! At a simple root of `kappa_1d` the derivative of `kappa_bar_kb` is a
//! nonzero multiple of `(k-1) kappa_1n - kappa_1d' (a1 + b - 1)`, so the root
//! is double for exactly one value `b = (k-1) kappa_1n/kappa_1d' - a1 + 1`.

use super::partition::RootPartition;
use crate::exactalg::{QuadExt, RatFunc, UPoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSimplicity {
    pub factor: UPoly,
    /// The exponent at which the root stops being simple, when it exists.
    pub bad_b: Option<QuadExt>,
    pub simple_at_b1: bool,
    pub simple_for_all_b: bool,
    pub simple_whenever_bj_gt_1: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SimplicityProfile {
    pub classes: Vec<ClassSimplicity>,
}

impl SimplicityProfile {
    /// The hypothesis guarding the degree-based criteria.
    pub fn extra_hypothesis(&self) -> bool {
        self.classes.iter().all(|c| c.simple_whenever_bj_gt_1)
    }

    pub fn some_fails_at_b1(&self) -> bool {
        self.classes.iter().any(|c| !c.simple_at_b1)
    }
}

pub fn simplicity_profile(kappa1: &RatFunc, part: &RootPartition, k: usize) -> SimplicityProfile {
    let km1 = UPoly::constant(QuadExt::from_int(k as i64 - 1));
    let n1 = &km1 * kappa1.num();
    let dd = kappa1.den().derivative();
    let classes = part
        .shared
        .iter()
        .map(|c| {
            let p = &c.factor;
            let bad_b = if c.b1 > 1 {
                None
            } else {
                let inv = dd.inv_mod(p).expect("simple root of kappa_1d");
                let v = (&n1 * &inv).rem(p).expect("nonconstant class");
                v.is_constant()
                    .then(|| &v.coeff(0) - &QuadExt::from_int(c.a1 - 1))
            };
            let simple_at_b1 = bad_b.as_ref().is_none_or(|b| !b.is_one());
            let simple_for_all_b = bad_b.as_ref().is_none_or(|b| !b.is_natural());
            let simple_whenever_bj_gt_1 = bad_b
                .as_ref()
                .is_none_or(|b| !(b.is_natural() && !b.is_one()));
            ClassSimplicity {
                factor: p.clone(),
                bad_b,
                simple_at_b1,
                simple_for_all_b,
                simple_whenever_bj_gt_1,
            }
        })
        .collect();
    SimplicityProfile { classes }
}

/// `kappa_bar_kb` built from its defining sum, with `b[c]` the exponent shared
/// by all roots of shared class `c`.
pub fn kappa_bar_b(kappa1: &RatFunc, part: &RootPartition, k: usize, b: &[u32]) -> UPoly {
    let mut acc = &kappa1.num().scale(&QuadExt::from_int(k as i64 - 1)) * &part.rad1;
    for (c, &bc) in part.shared.iter().zip(b) {
        let others = part.rad1.div_exact(&c.factor).expect("class divides rad1");
        let w = QuadExt::from_int(c.a1 + bc as i64 - 1);
        let term = (kappa1.den() * &c.factor.derivative()) * others;
        acc = &acc - &term.scale(&w);
    }
    acc
}

/// Whether the roots of class `p` are at least double roots of `f`.
pub fn has_double_root(f: &UPoly, p: &UPoly) -> bool {
    (p * p).divides(f)
}
