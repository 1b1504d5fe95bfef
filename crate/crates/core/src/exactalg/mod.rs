//! Exact algebra over Q(sqrt d): field elements, polynomials, rational
//! functions, factorization and partial fractions.

mod bipoly;
mod factor;
mod field;
mod modp;
mod partial;
mod ratfunc;
mod upoly;
mod zfactor;

pub use bipoly::BiPoly;
pub use factor::{
    canonical_poly_cmp, factor_irreducible, factor_squarefree, squarefree_decompose, FactorClass,
};
pub use field::{FieldSpec, QuadExt};
pub use partial::{eval_mod, partial_fractions, PartialFractions, PartialTerm};
pub use ratfunc::RatFunc;
pub use upoly::{Degree, UPoly};

/// `(q, r)` with `a = q*b + r`, `deg r < deg b`.
pub fn poly_divrem(a: &UPoly, b: &UPoly) -> crate::Result<(UPoly, UPoly)> {
    a.divrem(b)
}

/// Monic gcd; error when both are zero.
pub fn poly_gcd(a: &UPoly, b: &UPoly) -> crate::Result<UPoly> {
    a.gcd(b)
}
