//! Exact arithmetic in the quadratic field Q(sqrt d).

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The coefficient field Q(sqrt d). `d = 1` stands for Q itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec {
    d: i64,
}

impl FieldSpec {
    pub const RATIONAL: FieldSpec = FieldSpec { d: 1 };

    pub fn new(d: i64) -> Result<Self> {
        if d == 0 || !is_squarefree(d) {
            return Err(Error::InvalidField(d));
        }
        Ok(FieldSpec { d })
    }

    pub fn d(self) -> i64 {
        self.d
    }

    pub fn is_rational(self) -> bool {
        self.d == 1
    }

    /// The adjoined square root. For `d = 1` this is just 1.
    pub fn sqrt_d(self) -> QuadExt {
        if self.d == 1 {
            QuadExt::one()
        } else {
            QuadExt::new(BigRational::zero(), BigRational::one(), self)
        }
    }

    /// The common field of two elements, if they live in compatible fields.
    pub fn try_combine(self, other: FieldSpec) -> Result<FieldSpec> {
        if self.d == other.d || other.d == 1 {
            Ok(self)
        } else if self.d == 1 {
            Ok(other)
        } else {
            Err(Error::FieldMismatch(self.d, other.d))
        }
    }

    fn combine(self, other: FieldSpec) -> FieldSpec {
        if self.d == other.d || other.d == 1 {
            self
        } else if self.d == 1 {
            other
        } else {
            panic!("{}", Error::FieldMismatch(self.d, other.d))
        }
    }
}

fn is_squarefree(d: i64) -> bool {
    let n = d.unsigned_abs();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

/// An element `a + b*sqrt(d)` of Q(sqrt d).
///
/// Rational elements (`b = 0`) are compatible with every field; mixing two
/// irrational elements from different fields panics.
#[derive(Debug, Clone)]
pub struct QuadExt {
    a: BigRational,
    b: BigRational,
    field: FieldSpec,
}

impl QuadExt {
    pub fn new(rational_part: BigRational, surd_part: BigRational, field: FieldSpec) -> Self {
        if field.is_rational() {
            // sqrt(1) = 1 is not adjoined
            QuadExt {
                a: rational_part + surd_part,
                b: BigRational::zero(),
                field,
            }
        } else {
            QuadExt {
                a: rational_part,
                b: surd_part,
                field,
            }
        }
    }

    pub fn from_rational(q: BigRational) -> Self {
        QuadExt {
            a: q,
            b: BigRational::zero(),
            field: FieldSpec::RATIONAL,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_frac(n: i64, m: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(n), BigInt::from(m)))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn surd_part(&self) -> &BigRational {
        &self.b
    }

    /// The field this element was built in. Rational constants report Q.
    pub fn field(&self) -> FieldSpec {
        if self.b.is_zero() {
            FieldSpec::RATIONAL
        } else {
            self.field
        }
    }

    /// Same value, tagged with `field` (used when embedding rationals).
    pub fn in_field(mut self, field: FieldSpec) -> Self {
        self.field = self.field().combine(field);
        self
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.a)
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|q| q.is_integer())
            .map(|q| q.to_integer())
    }

    pub fn is_integer(&self) -> bool {
        self.as_integer().is_some()
    }

    /// Membership in N = {1, 2, 3, ...}.
    pub fn is_natural(&self) -> bool {
        self.as_integer().is_some_and(|n| n.is_positive())
    }

    pub fn in_z_leq0(&self) -> bool {
        self.as_integer().is_some_and(|n| !n.is_positive())
    }

    pub fn in_z_geq0(&self) -> bool {
        self.as_integer().is_some_and(|n| !n.is_negative())
    }

    /// Galois conjugate `a - b*sqrt(d)`.
    pub fn conj(&self) -> Self {
        QuadExt {
            a: self.a.clone(),
            b: -self.b.clone(),
            field: self.field,
        }
    }

    /// Field norm `a^2 - d b^2`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - self.d_rational() * &self.b * &self.b
    }

    fn d_rational(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(self.field.d))
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(QuadExt {
            a: &self.a / &n,
            b: -&self.b / &n,
            field: self.field,
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = QuadExt::one().in_field(self.field);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// A square root inside the element's own field, if one exists.
    pub fn sqrt(&self) -> Option<Self> {
        self.sqrt_in(self.field)
    }

    /// A square root inside `field`, if one exists.
    pub fn sqrt_in(&self, field: FieldSpec) -> Option<Self> {
        let field = self.field().combine(field);
        let this = self.clone().in_field(field);
        this.sqrt_impl()
    }

    fn sqrt_impl(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.b.is_zero() {
            if let Some(r) = rational_sqrt(&self.a) {
                return Some(QuadExt::from_rational(r).in_field(self.field));
            }
            if self.field.is_rational() {
                return None;
            }
            // a = d * q^2  =>  sqrt(a) = q sqrt(d)
            let q = rational_sqrt(&(&self.a / self.d_rational()))?;
            return Some(QuadExt::new(BigRational::zero(), q, self.field));
        }
        // (p + q sqrt d)^2 = a + b sqrt d  with  p^2 = (a +- sqrt(norm)) / 2
        let s = rational_sqrt(&self.norm())?;
        let two = BigRational::from_integer(BigInt::from(2));
        for cand in [(&self.a + &s) / &two, (&self.a - &s) / &two] {
            if let Some(p) = rational_sqrt(&cand) {
                if p.is_zero() {
                    continue;
                }
                let q = &self.b / (&two * &p);
                let r = QuadExt::new(p, q, self.field);
                if &(&r * &r) == self {
                    return Some(r);
                }
            }
        }
        None
    }

    /// Total order used only for canonical sorting (lexicographic on parts).
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.a.cmp(&other.a).then_with(|| self.b.cmp(&other.b))
    }

    /// Numeric value as (re, im); an imaginary surd when d < 0.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        let a = rational_to_f64(&self.a);
        let b = rational_to_f64(&self.b);
        let d = self.field.d as f64;
        if d >= 0.0 {
            (a + b * d.sqrt(), 0.0)
        } else {
            (a, b * (-d).sqrt())
        }
    }
}

pub(crate) fn rational_to_f64(q: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    match (q.numer().to_f64(), q.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // scale down huge numerators/denominators
            let shift = q.numer().bits().max(q.denom().bits()).saturating_sub(900);
            let n = (q.numer() >> shift).to_f64().unwrap_or(0.0);
            let d = (q.denom() >> shift).to_f64().unwrap_or(1.0);
            n / d
        }
    }
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| BigRational::new(n, d))
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a
            && self.b == other.b
            && (self.b.is_zero() || self.field == other.field)
    }
}

impl Eq for QuadExt {}

impl Hash for QuadExt {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.a.hash(state);
        self.b.hash(state);
    }
}

impl From<i64> for QuadExt {
    fn from(n: i64) -> Self {
        QuadExt::from_int(n)
    }
}

impl From<BigRational> for QuadExt {
    fn from(q: BigRational) -> Self {
        QuadExt::from_rational(q)
    }
}

impl<'a> Add<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: &'a QuadExt) -> QuadExt {
        QuadExt {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            field: self.field().combine(rhs.field()),
        }
    }
}

impl<'a> Sub<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: &'a QuadExt) -> QuadExt {
        QuadExt {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
            field: self.field().combine(rhs.field()),
        }
    }
}

impl<'a> Mul<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &'a QuadExt) -> QuadExt {
        let field = self.field().combine(rhs.field());
        if self.b.is_zero() && rhs.b.is_zero() {
            return QuadExt {
                a: &self.a * &rhs.a,
                b: BigRational::zero(),
                field,
            };
        }
        let d = BigRational::from_integer(BigInt::from(field.d));
        QuadExt {
            a: &self.a * &rhs.a + d * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
            field,
        }
    }
}

impl<'a> Div<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn div(self, rhs: &'a QuadExt) -> QuadExt {
        let inv = rhs.inv().expect("division by zero in Q(sqrt d)");
        self * &inv
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $m(self, rhs: QuadExt) -> QuadExt { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $m(self, rhs: &'a QuadExt) -> QuadExt { (&self).$m(rhs) }
        }
        impl<'a> $tr<QuadExt> for &'a QuadExt {
            type Output = QuadExt;
            fn $m(self, rhs: QuadExt) -> QuadExt { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            a: -self.a,
            b: -self.b,
            field: self.field,
        }
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -(self.clone())
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl QuadExt {
    /// True when the printed form is a single signed term (no `+` inside).
    pub(crate) fn is_single_term(&self) -> bool {
        self.a.is_zero() || self.b.is_zero()
    }
}

/// Printed in the input grammar: `rt` is the surd token.
impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let surd = |b: &BigRational| -> String {
            if b.is_one() {
                "rt".to_string()
            } else if (-b).is_one() {
                "-rt".to_string()
            } else {
                format!("{}*rt", fmt_rational(b))
            }
        };
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rational(&self.a)),
            (true, false) => write!(f, "{}", surd(&self.b)),
            (false, false) => {
                if self.b.is_negative() {
                    write!(f, "{} - {}", fmt_rational(&self.a), surd(&-self.b.clone()))
                } else {
                    write!(f, "{} + {}", fmt_rational(&self.a), surd(&self.b))
                }
            }
        }
    }
}
