//! Reduced univariate rational functions.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::field::QuadExt;
use super::upoly::{Degree, UPoly};
use crate::error::{Error, Result};

/// `num/den` with `gcd(num, den) = 1` and `den` monic. Zero is `0/1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: UPoly,
    den: UPoly,
}

impl RatFunc {
    pub fn new(num: UPoly, den: UPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den)?;
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let den = den.div_exact(&g).expect("gcd divides denominator");
        let lc = den.lc();
        let inv = lc.inv().expect("nonzero leading coefficient");
        Ok(RatFunc {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn from_poly(p: UPoly) -> Self {
        RatFunc {
            num: p,
            den: UPoly::one(),
        }
    }

    pub fn constant(c: QuadExt) -> Self {
        Self::from_poly(UPoly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(UPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(UPoly::one())
    }

    pub fn num(&self) -> &UPoly {
        &self.num
    }

    pub fn den(&self) -> &UPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// `deg num - deg den`, or `None` for zero.
    pub fn order_at_infinity_gap(&self) -> Option<i64> {
        Some(self.num.deg()? as i64 - self.den.deg0() as i64)
    }

    pub fn num_degree(&self) -> Degree {
        self.num.degree()
    }

    /// Value at `x`, or `None` at a pole.
    pub fn eval(&self, x: &QuadExt) -> Option<QuadExt> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RatFunc::new(n, &self.den * &self.den).expect("nonzero denominator")
    }

    pub fn scale(&self, c: &QuadExt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        RatFunc {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn write_var(&self, f: &mut impl fmt::Write, var: &str) -> fmt::Result {
        if self.den.is_one() {
            return self.num.write_var(f, var);
        }
        f.write_str("(")?;
        self.num.write_var(f, var)?;
        f.write_str(")/(")?;
        self.den.write_var(f, var)?;
        f.write_str(")")
    }

    pub fn to_string_var(&self, var: &str) -> String {
        let mut s = String::new();
        self.write_var(&mut s, var).expect("write to string");
        s
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_var(f, "xi")
    }
}

impl From<UPoly> for RatFunc {
    fn from(p: UPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &'a RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero");
        }
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero denominator")
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &'a RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &'a RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &'a RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &'a RatFunc) -> RatFunc { (&self).$m(rhs) }
        }
        impl<'a> $tr<RatFunc> for &'a RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -(self.clone())
    }
}
