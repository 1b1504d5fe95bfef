//! Sparse bivariate polynomials in (xi, eta).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{FieldSpec, QuadExt};
use super::upoly::{paren_if_needed, split_sign, UPoly};

/// Map from `(i, j)` to the coefficient of `xi^i eta^j`. No stored zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), QuadExt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: QuadExt) -> Self {
        Self::term(c, 0, 0)
    }

    pub fn xi() -> Self {
        Self::term(QuadExt::one(), 1, 0)
    }

    pub fn eta() -> Self {
        Self::term(QuadExt::one(), 0, 1)
    }

    pub fn term(c: QuadExt, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(c, i, j);
        p
    }

    pub fn from_terms(it: impl IntoIterator<Item = (QuadExt, u32, u32)>) -> Self {
        let mut p = Self::zero();
        for (c, i, j) in it {
            p.add_term(c, i, j);
        }
        p
    }

    /// Embeds a polynomial in `xi`.
    pub fn from_upoly_xi(p: &UPoly) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (c.clone(), i as u32, 0)),
        )
    }

    pub fn add_term(&mut self, c: QuadExt, i: u32, j: u32) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((i, j)).or_insert_with(QuadExt::zero);
        *e = &*e + &c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &QuadExt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> QuadExt {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(QuadExt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn field(&self) -> FieldSpec {
        self.terms
            .values()
            .map(|c| c.field())
            .find(|f| !f.is_rational())
            .unwrap_or(FieldSpec::RATIONAL)
    }

    pub fn eta_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    /// Coefficients of `eta^0, eta^1, ...` as polynomials in `xi`.
    pub fn eta_coeffs(&self) -> Vec<UPoly> {
        let Some(m) = self.eta_degree() else {
            return Vec::new();
        };
        let mut cols: Vec<Vec<QuadExt>> = vec![Vec::new(); m as usize + 1];
        for (&(i, j), c) in &self.terms {
            let col = &mut cols[j as usize];
            if col.len() <= i as usize {
                col.resize(i as usize + 1, QuadExt::zero());
            }
            col[i as usize] = c.clone();
        }
        cols.into_iter().map(UPoly::new).collect()
    }

    pub fn scale(&self, c: &QuadExt) -> Self {
        Self::from_terms(self.terms.iter().map(|(&(i, j), a)| (a * c, i, j)))
    }

    pub fn d_eta(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(&(_, j), _)| j > 0)
                .map(|(&(i, j), c)| (c * &QuadExt::from_int(j as i64), i, j - 1)),
        )
    }

    pub fn d_xi(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(&(i, _), _)| i > 0)
                .map(|(&(i, j), c)| (c * &QuadExt::from_int(i as i64), i - 1, j)),
        )
    }

    pub fn eval(&self, xi: &QuadExt, eta: &QuadExt) -> QuadExt {
        let mut acc = QuadExt::zero();
        for (&(i, j), c) in &self.terms {
            acc = &acc + &(c * &xi.pow(i) * eta.pow(j));
        }
        acc
    }

    /// `self(xi, eta)` as a polynomial in `eta` with `xi` fixed.
    pub fn at_xi(&self, xi: &QuadExt) -> UPoly {
        let mut acc = UPoly::zero();
        for (j, c) in self.eta_coeffs().iter().enumerate() {
            acc = &acc + &UPoly::monomial(c.eval(xi), j);
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(QuadExt::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // descending total degree, then descending xi power
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(i, j)| std::cmp::Reverse((i + j, i)));
        for (n, (i, j)) in keys.into_iter().enumerate() {
            let (neg, abs) = split_sign(&self.terms[&(i, j)]);
            if n == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mut factors = Vec::new();
            let var = |v: &str, e: u32| match e {
                0 => None,
                1 => Some(v.to_string()),
                _ => Some(format!("{v}^{e}")),
            };
            if !abs.is_one() || (i == 0 && j == 0) {
                factors.push(paren_if_needed(&abs));
            }
            factors.extend(var("xi", i));
            factors.extend(var("eta", j));
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &'a BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(c.clone(), i, j);
        }
        out
    }
}

impl<'a> Sub<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &'a BiPoly) -> BiPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &'a BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &rhs.terms {
                out.add_term(a * b, i + k, j + l);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: &'a BiPoly) -> BiPoly { (&self).$m(rhs) }
        }
        impl<'a> $tr<BiPoly> for &'a BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -(self.clone())
    }
}
