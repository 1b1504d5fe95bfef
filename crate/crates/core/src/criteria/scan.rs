//! The per-order criteria battery.

use std::fmt;

use super::partition::{partition_roots, RootPartition};
use super::polysol::{solution_space, SolutionSpace};
use super::rho::{build_rho, divide_by_rho, RhoDivision};
use super::simplicity::{simplicity_profile, SimplicityProfile};
use crate::error::Result;
use crate::exactalg::{Degree, FieldSpec, QuadExt, RatFunc, UPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CriterionId {
    I,
    II,
    III,
    IV,
    V,
    VI,
}

impl CriterionId {
    pub fn as_str(self) -> &'static str {
        match self {
            CriterionId::I => "i",
            CriterionId::II => "ii",
            CriterionId::III => "iii",
            CriterionId::IV => "iv",
            CriterionId::V => "v",
            CriterionId::VI => "vi",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "i" => CriterionId::I,
            "ii" => CriterionId::II,
            "iii" => CriterionId::III,
            "iv" => CriterionId::IV,
            "v" => CriterionId::V,
            "vi" => CriterionId::VI,
            _ => return None,
        })
    }
}

impl fmt::Display for CriterionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PreconditionFailure {
    Kappa1NumeratorZero,
    KappaKNumeratorZero,
    /// `kappa_kn` vanishes at a shared root; carries the common factor.
    KappaKNumeratorAtSharedRoot(UPoly),
}

impl fmt::Display for PreconditionFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PreconditionFailure::Kappa1NumeratorZero => f.write_str("kappa_1n vanishes"),
            PreconditionFailure::KappaKNumeratorZero => f.write_str("kappa_kn vanishes"),
            PreconditionFailure::KappaKNumeratorAtSharedRoot(g) => {
                write!(f, "kappa_kn shares the factor {g} with rad1")
            }
        }
    }
}

/// Evidence that the obstruction fails at order k: `theta_k / Omega^(k-1)`
/// equals the rational function `z / D` with `D = prod shared p^a1 * prod new p^(ak-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct H2FailureWitness {
    pub k: usize,
    pub polynomial_solution: UPoly,
    /// Whether `z` avoids every root of `rad1 * radk`.
    pub coprime_to_roots: bool,
    /// `(k-1) kappa_1 + z'/z - D'/D`, the log-derivative of `theta_k`.
    pub theta_log_derivative: LogDerivativeForm,
}

/// `rational + sum weight * p'/p`, kept unexpanded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogDerivativeForm {
    pub rational: RatFunc,
    pub log_terms: Vec<(i64, UPoly)>,
}

impl LogDerivativeForm {
    /// The sum as a single normalized rational function.
    pub fn to_ratfunc(&self) -> RatFunc {
        let mut acc = self.rational.clone();
        for (w, p) in &self.log_terms {
            let t = RatFunc::new(p.derivative().scale(&QuadExt::from_int(*w)), p.clone())
                .expect("nonzero");
            acc = &acc + &t;
        }
        acc
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Degrees {
    pub kappa1d: Degree,
    pub kappakn: Degree,
    pub rho: Degree,
    pub rho_bar: Degree,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionOutcome {
    pub k: usize,
    pub fired: Option<CriterionId>,
    pub precondition_failures: Vec<PreconditionFailure>,
    pub partition: RootPartition,
    pub profile: SimplicityProfile,
    /// `None` when the extra simplicity hypothesis was not reached or failed.
    pub extra_hypothesis: Option<bool>,
    pub rho: Option<UPoly>,
    pub division: Option<RhoDivision>,
    pub degrees: Option<Degrees>,
    pub solutions: Option<SolutionSpace>,
    pub h2_failure: Option<H2FailureWitness>,
    pub notes: Vec<String>,
}

impl CriterionOutcome {
    /// Leading coefficient of `rho_k`.
    pub fn rho0(&self) -> Option<QuadExt> {
        self.rho.as_ref().filter(|r| !r.is_zero()).map(|r| r.lc())
    }
}

/// Partition, profile and criteria for order `k`.
pub fn scan_order(
    k: usize,
    kappa1: &RatFunc,
    kappak: &RatFunc,
    field: FieldSpec,
) -> Result<CriterionOutcome> {
    let part = partition_roots(kappa1, kappak, k, field)?;
    let prof = simplicity_profile(kappa1, &part, k);
    criterion_scan(k, kappa1, kappak, part, prof)
}

/// Runs the criteria in order i, ii, then (under the simplicity hypothesis)
/// iv, v, vi and finally iii, which subsumes the degree tests.
pub fn criterion_scan(
    k: usize,
    kappa1: &RatFunc,
    kappak: &RatFunc,
    part: RootPartition,
    prof: SimplicityProfile,
) -> Result<CriterionOutcome> {
    let mut out = CriterionOutcome {
        k,
        fired: None,
        precondition_failures: Vec::new(),
        partition: part,
        profile: prof,
        extra_hypothesis: None,
        rho: None,
        division: None,
        degrees: None,
        solutions: None,
        h2_failure: None,
        notes: Vec::new(),
    };
    let k1n = kappa1.num();
    let k1d = kappa1.den();
    let kkn = kappak.num();
    if k1n.is_zero() {
        out.precondition_failures.push(PreconditionFailure::Kappa1NumeratorZero);
    }
    if kkn.is_zero() {
        out.precondition_failures.push(PreconditionFailure::KappaKNumeratorZero);
    } else {
        let g = kkn.gcd(&out.partition.rad1)?;
        if !g.is_one() {
            out.precondition_failures
                .push(PreconditionFailure::KappaKNumeratorAtSharedRoot(g));
        }
    }
    if !out.precondition_failures.is_empty() {
        return Ok(out);
    }
    let part = &out.partition;

    if part.new.iter().any(|c| c.ak == 1) {
        out.fired = Some(CriterionId::I);
        return Ok(out);
    }
    let extra = out.profile.extra_hypothesis();
    if part.n1 > 0 && extra && out.profile.some_fails_at_b1() {
        out.fired = Some(CriterionId::II);
        return Ok(out);
    }
    out.extra_hypothesis = Some(extra);
    if !extra {
        out.notes
            .push("a shared root is double for some b_j > 1; criteria iii-vi skipped".into());
        return Ok(out);
    }

    let rho = build_rho(kappa1, part, k)?;
    let div = divide_by_rho(kkn, &rho);
    let a = k1d * &part.radk;
    let nk = part.nk as i64;
    let deg1d = k1d.deg0() as i64;
    let degrees = Degrees {
        kappa1d: k1d.degree(),
        kappakn: kkn.degree(),
        rho: rho.degree(),
        rho_bar: div.rho_bar.degree(),
    };
    let sol = solution_space(&a, &rho, kkn);
    if let Some(z) = &sol.particular {
        out.h2_failure = Some(witness(k, kappa1, part, z));
        if !sol.kernel.is_empty() {
            out.notes.push(format!(
                "homogeneous equation has {} polynomial solution(s)",
                sol.kernel.len()
            ));
        }
    }

    let mut fired = None;
    if !div.degenerate {
        let drho = rho.deg0() as i64;
        let rho0 = rho.lc();
        if div.n_bar == 0 {
            let iva = div.rho_bar.is_zero() || !div.rho_tilde.is_zero();
            let ivb = deg1d + nk != drho + 1 || !(-&rho0).is_natural();
            if iva && ivb {
                fired = Some(CriterionId::IV);
            }
        } else {
            let dkn = kkn.deg0() as i64;
            let dbar = div.rho_bar.deg0() as i64;
            if deg1d + nk > dkn.max(drho + 1) {
                fired = Some(CriterionId::V);
            } else if deg1d + nk < drho - dbar + 1 {
                let via = !div.rho_bar.is_coprime(&(&part.rad1 * &part.radk));
                let target = &(k1d * &div.rho_bar.derivative()) * &part.radk;
                let vib = div.rho_tilde != target;
                if via || vib {
                    fired = Some(CriterionId::VI);
                }
            }
        }
    } else {
        out.notes
            .push("rho_k vanishes identically; criteria iv-vi bypassed".into());
    }
    if fired.is_none() && sol.particular.is_none() {
        fired = Some(CriterionId::III);
    }
    if let (Some(c), Some(_)) = (fired, &out.h2_failure) {
        // a polynomial solution refutes the obstruction outright
        out.notes.push(format!(
            "criterion {c} predicate holds but a polynomial solution exists; not fired"
        ));
        fired = None;
    }
    out.fired = fired;
    out.rho = Some(rho);
    out.division = Some(div);
    out.degrees = Some(degrees);
    out.solutions = Some(sol);
    Ok(out)
}

/// `prod shared p^a1 * prod new p^(ak-1)` as a rational function.
pub fn solution_denominator(part: &RootPartition) -> RatFunc {
    let mut num = UPoly::one();
    let mut den = UPoly::one();
    for c in &part.shared {
        let pw = c.factor.pow(c.a1.unsigned_abs() as u32);
        if c.a1 > 0 {
            num = &num * &pw;
        } else {
            den = &den * &pw;
        }
    }
    for c in &part.new {
        num = &num * &c.factor.pow(c.ak - 1);
    }
    RatFunc::new(num, den).expect("nonzero")
}

/// Packages `z`; `D'/D` enters through the class terms of `D`.
fn witness(k: usize, kappa1: &RatFunc, part: &RootPartition, z: &UPoly) -> H2FailureWitness {
    let km1 = QuadExt::from_int(k as i64 - 1);
    let mut log_terms = Vec::new();
    if !z.is_zero() && !z.is_constant() {
        log_terms.push((1, z.clone()));
    }
    for c in &part.shared {
        log_terms.push((-c.a1, c.factor.clone()));
    }
    for c in part.new.iter().filter(|c| c.ak > 1) {
        log_terms.push((1 - c.ak as i64, c.factor.clone()));
    }
    let theta_log_derivative = LogDerivativeForm {
        rational: kappa1.scale(&km1),
        log_terms,
    };
    H2FailureWitness {
        k,
        polynomial_solution: z.clone(),
        coprime_to_roots: z.is_coprime(&(&part.rad1 * &part.radk)),
        theta_log_derivative,
    }
}

/// The witness, when the criteria cannot fire and a polynomial solution exists.
pub fn h2_failure_witness(
    k: usize,
    kappa1: &RatFunc,
    kappak: &RatFunc,
    part: &RootPartition,
    prof: &SimplicityProfile,
) -> Result<Option<H2FailureWitness>> {
    if part.new.iter().any(|c| c.ak < 2) || !prof.extra_hypothesis() {
        return Ok(None);
    }
    if kappa1.num().is_zero() || kappak.num().is_zero() {
        return Ok(None);
    }
    let rho = build_rho(kappa1, part, k)?;
    let a = kappa1.den() * &part.radk;
    match solution_space(&a, &rho, kappak.num()).particular {
        Some(z) => Ok(Some(witness(k, kappa1, part, &z))),
        None => Ok(None),
    }
}
