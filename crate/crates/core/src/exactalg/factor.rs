//! Squarefree decomposition and irreducible factorization over Q(sqrt d).

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use super::field::{FieldSpec, QuadExt};
use super::upoly::UPoly;
use super::zfactor::{factor_squarefree_z, primitive, ZPoly};
use crate::error::{Error, Result};

/// A monic irreducible factor standing for its whole set of conjugate roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FactorClass {
    pub factor: UPoly,
    pub multiplicity: u32,
}

impl FactorClass {
    pub fn new(factor: UPoly, multiplicity: u32) -> Self {
        FactorClass {
            factor,
            multiplicity,
        }
    }

    /// Number of roots in the class.
    pub fn root_count(&self) -> usize {
        self.factor.deg0()
    }
}

/// Deterministic order: by degree, then coefficients from the constant term up.
pub fn canonical_poly_cmp(a: &UPoly, b: &UPoly) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        a.coeffs()
            .iter()
            .zip(b.coeffs())
            .map(|(x, y)| x.canonical_cmp(y))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    })
}

/// Yun's algorithm: `a = lc * prod p_i^{m_i}`, `p_i` monic squarefree, pairwise coprime.
pub fn squarefree_decompose(a: &UPoly) -> Result<Vec<(UPoly, u32)>> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = a.monic();
    let mut out = Vec::new();
    if f.is_constant() {
        return Ok(out);
    }
    let df = f.derivative();
    let a0 = f.gcd(&df)?;
    let mut b = f.div_exact(&a0).expect("gcd divides");
    let c = df.div_exact(&a0).expect("gcd divides");
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while !b.is_constant() {
        let g = b.gcd(&d)?;
        b = b.div_exact(&g).expect("gcd divides");
        let c = d.div_exact(&g).expect("gcd divides");
        d = &c - &b.derivative();
        if !g.is_constant() {
            out.push((g, i));
        }
        i += 1;
    }
    Ok(out)
}

/// Irreducible factorization of `a` over `field`, classes in canonical order.
pub fn factor_irreducible(a: &UPoly, field: FieldSpec) -> Result<Vec<FactorClass>> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if a.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let mut out = Vec::new();
    for (part, m) in squarefree_decompose(a)? {
        for p in factor_squarefree(&part, field) {
            out.push(FactorClass::new(p, m));
        }
    }
    out.sort_by(|x, y| canonical_poly_cmp(&x.factor, &y.factor));
    Ok(out)
}

/// Monic irreducible factors of a monic squarefree polynomial over `field`.
pub fn factor_squarefree(f: &UPoly, field: FieldSpec) -> Vec<UPoly> {
    if f.deg0() <= 1 {
        return vec![f.monic()];
    }
    if f.has_rational_coeffs() {
        let over_q: Vec<UPoly> = factor_squarefree_z(&to_zpoly(f))
            .iter()
            .map(from_zpoly)
            .collect();
        if field.is_rational() {
            return over_q;
        }
        return over_q.iter().flat_map(|g| trager(g, field)).collect();
    }
    trager(f, field)
}

/// Norm-based splitting over Q(sqrt d).
fn trager(f: &UPoly, field: FieldSpec) -> Vec<UPoly> {
    if f.deg0() <= 1 {
        return vec![f.monic()];
    }
    let rt = field.sqrt_d();
    for s in shifts() {
        let a = &rt * &QuadExt::from_int(s);
        let g = f.shift(&-&a);
        let norm = &g * &g.conj();
        if !norm.is_coprime(&norm.derivative()) {
            continue;
        }
        let mut out = Vec::new();
        for n in factor_squarefree_z(&to_zpoly(&norm)) {
            let h = g.gcd(&from_zpoly(&n)).expect("nonzero");
            if !h.is_constant() {
                out.push(h.shift(&a).monic());
            }
        }
        return out;
    }
    unreachable!("some shift gives a squarefree norm")
}

fn shifts() -> impl Iterator<Item = i64> {
    (0i64..).flat_map(|k| if k == 0 { vec![0] } else { vec![k, -k] })
}

/// Clears denominators of a rational-coefficient polynomial.
fn to_zpoly(f: &UPoly) -> ZPoly {
    let l = f
        .coeffs()
        .iter()
        .map(|c| c.rational_part().denom().clone())
        .fold(BigInt::one(), |acc, d| acc.lcm(&d));
    let z: ZPoly = f
        .coeffs()
        .iter()
        .map(|c| (c.rational_part() * &l).to_integer())
        .collect();
    primitive(&z)
}

fn from_zpoly(z: &ZPoly) -> UPoly {
    UPoly::new(
        z.iter()
            .map(|c| QuadExt::from_rational(BigRational::from_integer(c.clone())))
            .collect(),
    )
    .monic()
}
