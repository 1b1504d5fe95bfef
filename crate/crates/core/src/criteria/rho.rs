//! The polynomial `rho_k` and the division of `kappa_kn` by it.

use super::partition::RootPartition;
use crate::error::{Error, Result};
use crate::exactalg::{squarefree_decompose, QuadExt, RatFunc, UPoly};

/// `rho_k = (k-1) kappa_1n radk - kappa_1d sum_new (ak-1) p' radk/p
///          - (kappa_1d/rad1) radk sum_shared a1 p' rad1/p`.
pub fn build_rho(kappa1: &RatFunc, part: &RootPartition, k: usize) -> Result<UPoly> {
    let d1 = kappa1.den();
    let mut rho = &kappa1.num().scale(&QuadExt::from_int(k as i64 - 1)) * &part.radk;
    for c in &part.new {
        let others = part.radk.div_exact(&c.factor).expect("class divides radk");
        let t = &(d1 * &c.factor.derivative()) * &others;
        rho = &rho - &t.scale(&QuadExt::from_int(c.ak as i64 - 1));
    }
    if !part.shared.is_empty() {
        let lead = d1
            .div_exact(&part.rad1)
            .ok_or_else(|| Error::Internal("rad1 does not divide kappa_1d".into()))?;
        let lead = &lead * &part.radk;
        let mut sum = UPoly::zero();
        for c in &part.shared {
            let others = part.rad1.div_exact(&c.factor).expect("class divides rad1");
            let t = &c.factor.derivative() * &others;
            sum = &sum + &t.scale(&QuadExt::from_int(c.a1));
        }
        rho = &rho - &(&lead * &sum);
    }
    Ok(rho)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhoDivision {
    pub rho_bar: UPoly,
    pub rho_tilde: UPoly,
    /// Number of distinct roots of `rho_bar`.
    pub n_bar: usize,
    /// `rho_k` vanished identically; the quotient and remainder are not meaningful.
    pub degenerate: bool,
}

/// `kappa_kn = rho_bar rho + rho_tilde`.
pub fn divide_by_rho(kappakn: &UPoly, rho: &UPoly) -> RhoDivision {
    if rho.is_zero() {
        return RhoDivision {
            rho_bar: UPoly::zero(),
            rho_tilde: kappakn.clone(),
            n_bar: 0,
            degenerate: true,
        };
    }
    let (rho_bar, rho_tilde) = kappakn.divrem(rho).expect("nonzero divisor");
    let n_bar = if rho_bar.is_constant() {
        0
    } else {
        squarefree_decompose(&rho_bar)
            .expect("nonzero")
            .iter()
            .map(|(p, _)| p.deg0())
            .sum()
    };
    RhoDivision {
        rho_bar,
        rho_tilde,
        n_bar,
        degenerate: false,
    }
}
