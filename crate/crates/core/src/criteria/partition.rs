//! Splitting the poles of `kappa_k` against those of `kappa_1`.

use crate::error::{Error, Result};
use crate::exactalg::{factor_irreducible, FieldSpec, RatFunc, UPoly};

/// A root class of `kappa_1d` whose multiplicity changes in `kappa_kd`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharedClass {
    pub factor: UPoly,
    /// Multiplicity in `kappa_1d`.
    pub b1: u32,
    /// Multiplicity in `kappa_kd` minus `b1`; nonzero, at least `-b1`.
    pub a1: i64,
}

/// A root class of `kappa_kd` that is not a root of `kappa_1d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewClass {
    pub factor: UPoly,
    pub ak: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootPartition {
    pub shared: Vec<SharedClass>,
    pub new: Vec<NewClass>,
    /// Root counts, summing class degrees.
    pub n1: usize,
    pub nk: usize,
    pub rad1: UPoly,
    pub radk: UPoly,
}

impl RootPartition {
    /// `kappa_1d * prod shared p^a1 * prod new p^ak`, which must equal `kappa_kd`.
    pub fn reconstruct_kd(&self, kappa1d: &UPoly) -> RatFunc {
        let mut num = kappa1d.clone();
        let mut den = UPoly::one();
        for c in &self.shared {
            let pw = c.factor.pow(c.a1.unsigned_abs() as u32);
            if c.a1 > 0 {
                num = &num * &pw;
            } else {
                den = &den * &pw;
            }
        }
        for c in &self.new {
            num = &num * &c.factor.pow(c.ak);
        }
        RatFunc::new(num, den).expect("nonzero denominator")
    }
}

fn multiplicity(p: &UPoly, f: &UPoly) -> u32 {
    let mut m = 0;
    let mut f = f.clone();
    while let Some(q) = f.div_exact(p) {
        f = q;
        m += 1;
    }
    m
}

/// Partition of the classes of `kappa_kd` relative to `kappa_1d`.
pub fn partition_roots(
    kappa1: &RatFunc,
    kappak: &RatFunc,
    k: usize,
    field: FieldSpec,
) -> Result<RootPartition> {
    if kappak.is_zero() {
        return Err(Error::ZeroKappa(k));
    }
    let d1 = kappa1.den();
    let dk = kappak.den();
    let prod = d1 * dk;
    let classes = if prod.is_constant() {
        Vec::new()
    } else {
        factor_irreducible(&prod, field)?
    };
    let mut shared = Vec::new();
    let mut new = Vec::new();
    for c in classes {
        let b1 = multiplicity(&c.factor, d1);
        let bk = multiplicity(&c.factor, dk);
        let diff = bk as i64 - b1 as i64;
        if diff == 0 {
            continue;
        }
        if b1 > 0 {
            shared.push(SharedClass {
                factor: c.factor,
                b1,
                a1: diff,
            });
        } else {
            new.push(NewClass {
                factor: c.factor,
                ak: bk,
            });
        }
    }
    let rad1 = shared.iter().fold(UPoly::one(), |acc, c| &acc * &c.factor);
    let radk = new.iter().fold(UPoly::one(), |acc, c| &acc * &c.factor);
    Ok(RootPartition {
        n1: shared.iter().map(|c| c.factor.deg0()).sum(),
        nk: new.iter().map(|c| c.factor.deg0()).sum(),
        shared,
        new,
        rad1,
        radk,
    })
}
