//! Dense univariate polynomials over Q(sqrt d).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{FieldSpec, QuadExt};
use crate::error::{Error, Result};

/// Polynomial degree with `-inf` for the zero polynomial.
///
/// `Degree(None)` sorts below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Degree(pub Option<usize>);

impl Degree {
    pub const NEG_INF: Degree = Degree(None);

    pub fn finite(n: usize) -> Self {
        Degree(Some(n))
    }

    pub fn is_neg_inf(self) -> bool {
        self.0.is_none()
    }

    /// Signed value, with `-inf` mapped to `None`.
    pub fn as_i64(self) -> Option<i64> {
        self.0.map(|n| n as i64)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "-inf"),
        }
    }
}

/// Coefficients lowest degree first; no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: Vec<QuadExt>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<QuadExt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&n| QuadExt::from_int(n)).collect())
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(QuadExt::one())
    }

    pub fn constant(c: QuadExt) -> Self {
        Self::new(vec![c])
    }

    /// The variable `xi`.
    pub fn x() -> Self {
        Self::monomial(QuadExt::one(), 1)
    }

    pub fn monomial(c: QuadExt, n: usize) -> Self {
        let mut v = vec![QuadExt::zero(); n];
        v.push(c);
        Self::new(v)
    }

    /// `x - r`.
    pub fn linear_root(r: QuadExt) -> Self {
        Self::new(vec![-r, QuadExt::one()])
    }

    pub fn coeffs(&self) -> &[QuadExt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> QuadExt {
        self.coeffs.get(i).cloned().unwrap_or_else(QuadExt::zero)
    }

    pub fn degree(&self) -> Degree {
        Degree(self.deg())
    }

    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; for counting only.
    pub fn deg0(&self) -> usize {
        self.deg().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for constants, including zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn lc(&self) -> QuadExt {
        self.coeffs.last().cloned().unwrap_or_else(QuadExt::zero)
    }

    /// Smallest field containing all coefficients.
    pub fn field(&self) -> FieldSpec {
        self.coeffs
            .iter()
            .map(|c| c.field())
            .find(|f| !f.is_rational())
            .unwrap_or(FieldSpec::RATIONAL)
    }

    pub fn has_rational_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_rational())
    }

    pub fn eval(&self, x: &QuadExt) -> QuadExt {
        let mut acc = QuadExt::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &QuadExt::from_int(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &QuadExt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divide by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = self.lc().inv().expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.conj()).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = UPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `self(g(x))`.
    pub fn compose(&self, g: &UPoly) -> Self {
        let mut acc = UPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &UPoly::constant(c.clone());
        }
        acc
    }

    /// `self(x + c)`.
    pub fn shift(&self, c: &QuadExt) -> Self {
        self.compose(&UPoly::new(vec![c.clone(), QuadExt::one()]))
    }

    pub fn divrem(&self, b: &UPoly) -> Result<(UPoly, UPoly)> {
        let db = b.deg().ok_or(Error::DivisionByZero)?;
        let mut r = self.coeffs.clone();
        let Some(da) = self.deg() else {
            return Ok((UPoly::zero(), UPoly::zero()));
        };
        if da < db {
            return Ok((UPoly::zero(), self.clone()));
        }
        let inv = b.lc().inv().expect("nonzero leading coefficient");
        let mut q = vec![QuadExt::zero(); da - db + 1];
        for i in (0..=da - db).rev() {
            let c = &r[i + db] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                r[i + j] = &r[i + j] - &(&c * bj);
            }
            q[i] = c;
        }
        r.truncate(db);
        Ok((UPoly::new(q), UPoly::new(r)))
    }

    pub fn rem(&self, b: &UPoly) -> Result<UPoly> {
        Ok(self.divrem(b)?.1)
    }

    /// Quotient when `b` divides `self`, otherwise `None`.
    pub fn div_exact(&self, b: &UPoly) -> Option<UPoly> {
        let (q, r) = self.divrem(b).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &UPoly) -> bool {
        other.rem(self).is_ok_and(|r| r.is_zero())
    }

    /// Monic gcd; error when both inputs are zero.
    pub fn gcd(&self, b: &UPoly) -> Result<UPoly> {
        if self.is_zero() && b.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (mut a, mut b) = (self.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r.monic();
        }
        Ok(a.monic())
    }

    /// `(g, s, t)` with `s*self + t*b = g`, `g` the monic gcd.
    pub fn ext_gcd(&self, b: &UPoly) -> Result<(UPoly, UPoly, UPoly)> {
        if self.is_zero() && b.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (mut r0, mut r1) = (self.clone(), b.clone());
        let (mut s0, mut s1) = (UPoly::one(), UPoly::zero());
        let (mut t0, mut t1) = (UPoly::zero(), UPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = r0.lc().inv().expect("nonzero gcd");
        Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
    }

    pub fn is_coprime(&self, b: &UPoly) -> bool {
        self.gcd(b).is_ok_and(|g| g.is_one())
    }

    /// Inverse of `self` modulo `m`, if it exists.
    pub fn inv_mod(&self, m: &UPoly) -> Option<UPoly> {
        let (g, s, _) = self.rem(m).ok()?.ext_gcd(m).ok()?;
        if !g.is_one() {
            return None;
        }
        s.rem(m).ok()
    }

    /// Prints in the input grammar using `var` as the variable name.
    pub fn write_var(&self, f: &mut impl fmt::Write, var: &str) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, abs) = split_sign(c);
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 {
                write!(f, "{}", paren_if_needed(&abs))?;
            } else if abs.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{}*{}", paren_if_needed(&abs), mono)?;
            }
        }
        Ok(())
    }

    pub fn to_string_var(&self, var: &str) -> String {
        let mut s = String::new();
        self.write_var(&mut s, var).expect("write to string");
        s
    }
}

/// Splits off a leading minus sign when the coefficient is a single negative term.
pub(crate) fn split_sign(c: &QuadExt) -> (bool, QuadExt) {
    use num_traits::Signed;
    if !c.is_single_term() {
        return (false, c.clone());
    }
    let neg = if c.is_rational() {
        c.rational_part().is_negative()
    } else {
        c.surd_part().is_negative()
    };
    if neg {
        (true, -c)
    } else {
        (false, c.clone())
    }
}

pub(crate) fn paren_if_needed(c: &QuadExt) -> String {
    if c.is_single_term() {
        c.to_string()
    } else {
        format!("({c})")
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_var(f, "xi")
    }
}

impl<'a> Add<&'a UPoly> for &'a UPoly {
    type Output = UPoly;
    fn add(self, rhs: &'a UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a UPoly> for &'a UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &'a UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a UPoly> for &'a UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &'a UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![QuadExt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UPoly::new(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<UPoly> for UPoly {
            type Output = UPoly;
            fn $m(self, rhs: UPoly) -> UPoly { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a UPoly> for UPoly {
            type Output = UPoly;
            fn $m(self, rhs: &'a UPoly) -> UPoly { (&self).$m(rhs) }
        }
        impl<'a> $tr<UPoly> for &'a UPoly {
            type Output = UPoly;
            fn $m(self, rhs: UPoly) -> UPoly { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        -(self.clone())
    }
}

impl From<QuadExt> for UPoly {
    fn from(c: QuadExt) -> Self {
        UPoly::constant(c)
    }
}
