//! Foliation coefficients along an integral curve and the first-order solution.
//!
//! For `R = Q/P` and a curve `eta = phi(xi)`, `kappa_k` is the k-th partial
//! derivative of `R` in `eta` evaluated on the curve. It is computed as
//! `k! [w^k] R(xi, phi + w)` by inverting the denominator as a power series.

use crate::error::{Error, Result};
use crate::exactalg::{
    factor_irreducible, partial_fractions, BiPoly, FactorClass, FieldSpec, QuadExt, RatFunc,
    UPoly,
};

pub const DEFAULT_MAX_ORDER: usize = 9;
pub const MAX_ORDER_CAP: usize = 25;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarSystem {
    pub p: BiPoly,
    pub q: BiPoly,
    pub field: FieldSpec,
    pub label: String,
}

impl PlanarSystem {
    pub fn new(p: BiPoly, q: BiPoly, field: FieldSpec, label: impl Into<String>) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroP);
        }
        for f in [p.field(), q.field()] {
            if !f.is_rational() && f != field {
                return Err(Error::FieldMismatch(field.d(), f.d()));
            }
        }
        Ok(PlanarSystem {
            p,
            q,
            field,
            label: label.into(),
        })
    }
}

/// The curve `eta = phi(xi)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveData {
    pub phi: RatFunc,
}

impl CurveData {
    pub fn new(phi: RatFunc) -> Self {
        CurveData { phi }
    }

    /// The curve `eta = 0`.
    pub fn eta_zero() -> Self {
        CurveData {
            phi: RatFunc::zero(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariationalData {
    /// `kappas[k-1]` is `kappa_k`.
    pub kappas: Vec<RatFunc>,
    pub max_order: usize,
}

impl VariationalData {
    /// `kappa_k` for `1 <= k <= max_order`.
    pub fn kappa(&self, k: usize) -> &RatFunc {
        &self.kappas[k - 1]
    }
}

/// Residue of `kappa_1` over one class, as an element of `K[xi]/(p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueEntry {
    pub class: FactorClass,
    pub residue: UPoly,
}

impl ResidueEntry {
    /// The common value at all conjugate roots, when the residue is constant.
    pub fn constant(&self) -> Option<QuadExt> {
        self.residue.is_constant().then(|| self.residue.coeff(0))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaData {
    /// Rational part `E` of `log Omega`, with zero constant term.
    pub exp_part: RatFunc,
    pub residues: Vec<ResidueEntry>,
    pub regular_at_infinity: bool,
}

impl OmegaData {
    /// `E' + sum_c sum_{roots} r/(xi - root)`; equals `kappa_1` exactly.
    pub fn log_derivative(&self) -> RatFunc {
        let mut acc = self.exp_part.derivative();
        for r in &self.residues {
            let p = &r.class.factor;
            let n = (&r.residue * &p.derivative()).rem(p).expect("nonconstant class");
            acc = &acc + &RatFunc::new(n, p.clone()).expect("nonzero");
        }
        acc
    }
}

/// `N(w)` and `D(w)` with `R(xi, phi + w) = N(w)/D(w)`, truncated at `w^order`.
fn curve_series(sys: &PlanarSystem, curve: &CurveData, order: usize) -> (Vec<UPoly>, Vec<UPoly>) {
    let u = curve.phi.num();
    let v = curve.phi.den();
    let pc = sys.p.eta_coeffs();
    let qc = sys.q.eta_coeffs();
    let m = pc.len().max(qc.len()).saturating_sub(1);
    let upow: Vec<UPoly> = (0..=m).map(|i| u.pow(i as u32)).collect();
    let vpow: Vec<UPoly> = (0..=m).map(|i| v.pow(i as u32)).collect();
    let expand = |cols: &[UPoly]| -> Vec<UPoly> {
        let mut out = vec![UPoly::zero(); order + 1];
        for (j, c) in cols.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // c * (u + v w)^j * v^(m - j)
            let base = c * &vpow[m - j];
            let mut binom = 1u64;
            for (i, slot) in out.iter_mut().enumerate().take(j.min(order) + 1) {
                let term = &(&base * &upow[j - i]) * &vpow[i];
                *slot = &*slot + &term.scale(&QuadExt::from_int(binom as i64));
                binom = binom * (j - i) as u64 / (i + 1) as u64;
            }
        }
        out
    };
    (expand(&qc), expand(&pc))
}

/// True iff `Q(xi, phi) - phi' P(xi, phi)` vanishes identically.
pub fn verify_integral_curve(sys: &PlanarSystem, curve: &CurveData) -> Result<bool> {
    let (n, d) = curve_series(sys, curve, 0);
    if d[0].is_zero() {
        return Err(Error::SingularCurve);
    }
    let r0 = RatFunc::new(n[0].clone(), d[0].clone())?;
    Ok(r0 == curve.phi.derivative())
}

/// `kappa_1 .. kappa_order`, each reduced.
pub fn kappa_coefficients(
    sys: &PlanarSystem,
    curve: &CurveData,
    order: usize,
) -> Result<VariationalData> {
    if !(1..=MAX_ORDER_CAP).contains(&order) {
        return Err(Error::InvalidOrder(order));
    }
    let (n, d) = curve_series(sys, curve, order);
    let d0 = &d[0];
    if d0.is_zero() {
        return Err(Error::SingularCurve);
    }
    if RatFunc::new(n[0].clone(), d0.clone())? != curve.phi.derivative() {
        return Err(Error::NotIntegralCurve);
    }
    // s_k = t_k / d0^(k+1) with t_k = n_k d0^k - sum_{i=1..k} d_i t_{k-i} d0^(i-1)
    let d0pow: Vec<UPoly> = (0..=order + 1).map(|i| d0.pow(i as u32)).collect();
    let mut t: Vec<UPoly> = Vec::with_capacity(order + 1);
    let mut kappas = Vec::with_capacity(order);
    let mut fact = QuadExt::one();
    for k in 0..=order {
        let mut tk = &n[k] * &d0pow[k];
        for i in 1..=k {
            if d[i].is_zero() || t[k - i].is_zero() {
                continue;
            }
            tk = &tk - &(&(&d[i] * &t[k - i]) * &d0pow[i - 1]);
        }
        if k >= 1 {
            fact = &fact * &QuadExt::from_int(k as i64);
            kappas.push(RatFunc::new(tk.scale(&fact), d0pow[k + 1].clone())?);
        }
        t.push(tk);
    }
    Ok(VariationalData {
        kappas,
        max_order: order,
    })
}

/// Splits `int kappa_1` into a rational part and logarithmic residues.
pub fn omega_decompose(kappa1: &RatFunc, field: FieldSpec) -> Result<OmegaData> {
    let regular_at_infinity = kappa1.den().degree() > kappa1.num().degree();
    let pf = partial_fractions(kappa1, field)?;

    // polynomial part integrates termwise
    let mut e = RatFunc::from_poly(UPoly::new(
        std::iter::once(QuadExt::zero())
            .chain(
                pf.poly_part
                    .coeffs()
                    .iter()
                    .enumerate()
                    .map(|(i, c)| c / &QuadExt::from_int(i as i64 + 1)),
            )
            .collect(),
    ));

    let mut residues = Vec::new();
    let classes = if kappa1.den().is_constant() {
        Vec::new()
    } else {
        factor_irreducible(kappa1.den(), field)?
    };
    for class in classes {
        let p = &class.factor;
        let dp = p.derivative();
        let top = class.multiplicity as usize;
        let mut nums = vec![UPoly::zero(); top + 1];
        for t in pf.terms.iter().filter(|t| &t.class.factor == p) {
            nums[t.order as usize] = t.numerator.clone();
        }
        // Hermite step: N/p^m = (s p + t p')/p^m
        let (g, _, b) = p.ext_gcd(&dp)?;
        debug_assert!(g.is_one());
        for m in (2..=top).rev() {
            let nm = std::mem::take(&mut nums[m]);
            if nm.is_zero() {
                continue;
            }
            let tt = (&b * &nm).rem(p)?;
            let s = (&nm - &(&tt * &dp))
                .div_exact(p)
                .ok_or_else(|| Error::Internal("Hermite step not exact".into()))?;
            let mm = QuadExt::from_int(m as i64 - 1);
            let den = p.pow(m as u32 - 1);
            e = &e + &RatFunc::new(-tt.scale(&mm.inv().expect("m > 1")), den)?;
            let carry = &s + &tt.derivative().scale(&mm.inv().expect("m > 1"));
            nums[m - 1] = &nums[m - 1] + &carry;
        }
        let n1 = nums[1].rem(p)?;
        if n1.is_zero() {
            continue;
        }
        let inv = dp
            .inv_mod(p)
            .ok_or_else(|| Error::Internal("irreducible factor not separable".into()))?;
        let residue = (&n1 * &inv).rem(p)?;
        residues.push(ResidueEntry {
            class: class.clone(),
            residue,
        });
    }
    Ok(OmegaData {
        exp_part: e,
        residues,
        regular_at_infinity,
    })
}
