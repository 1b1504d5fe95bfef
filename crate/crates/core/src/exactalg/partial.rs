//! Partial fractions over irreducible classes and quotient-ring evaluation.

use super::factor::{factor_irreducible, FactorClass};
use super::field::FieldSpec;
use super::ratfunc::RatFunc;
use super::upoly::UPoly;
use crate::error::{Error, Result};

/// One term `numerator / factor^order` with `deg numerator < deg factor`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialTerm {
    /// The class with its multiplicity in the denominator.
    pub class: FactorClass,
    pub order: u32,
    pub numerator: UPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialFractions {
    pub poly_part: UPoly,
    pub terms: Vec<PartialTerm>,
}

impl PartialFractions {
    /// Sum of all parts as a single rational function.
    pub fn recombine(&self) -> RatFunc {
        let mut acc = RatFunc::from_poly(self.poly_part.clone());
        for t in &self.terms {
            let den = t.class.factor.pow(t.order);
            acc = &acc + &RatFunc::new(t.numerator.clone(), den).expect("nonzero");
        }
        acc
    }
}

/// Canonical representative of `a` in K[x]/(p).
pub fn eval_mod(a: &UPoly, p: &UPoly) -> Result<UPoly> {
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    a.rem(p)
}

/// Decomposes `f` into a polynomial part plus terms over each irreducible class.
///
/// Zero numerators are omitted. Terms are listed per class in canonical class
/// order, increasing order within a class.
pub fn partial_fractions(f: &RatFunc, field: FieldSpec) -> Result<PartialFractions> {
    let (poly_part, r) = f.num().divrem(f.den())?;
    let mut terms = Vec::new();
    if f.den().is_constant() || r.is_zero() {
        return Ok(PartialFractions { poly_part, terms });
    }
    let classes = factor_irreducible(f.den(), field)?;
    for c in &classes {
        let pm = c.factor.pow(c.multiplicity);
        let rest = f
            .den()
            .div_exact(&pm)
            .ok_or_else(|| Error::Internal("class power does not divide denominator".into()))?;
        let inv = rest
            .inv_mod(&pm)
            .ok_or_else(|| Error::Internal("cofactor not invertible".into()))?;
        // numerator over p^m, then its base-p expansion
        let mut a = (&r * &inv).rem(&pm)?;
        let mut digits = Vec::new();
        for _ in 0..c.multiplicity {
            let (q, d) = a.divrem(&c.factor)?;
            digits.push(d);
            a = q;
        }
        for (i, d) in digits.into_iter().enumerate().rev() {
            if !d.is_zero() {
                terms.push(PartialTerm {
                    class: c.clone(),
                    order: c.multiplicity - i as u32,
                    numerator: d,
                });
            }
        }
    }
    Ok(PartialFractions { poly_part, terms })
}
