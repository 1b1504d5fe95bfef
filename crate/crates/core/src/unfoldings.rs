//! Reduced planar systems of the fold-Hopf and double-Hopf unfoldings and the
//! parameter clauses of the associated nonintegrability theorems.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::{BiPoly, FieldSpec, QuadExt};
use crate::varcalc::{CurveData, PlanarSystem};

fn check_s(s: i64) -> Result<()> {
    if s == 1 || s == -1 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("s must be +1 or -1, got {s}")))
    }
}

fn field_of(xs: &[&QuadExt]) -> Result<FieldSpec> {
    let mut f = FieldSpec::RATIONAL;
    for x in xs {
        f = f.try_combine(x.field())?;
    }
    Ok(f)
}

/// Fold-Hopf parameters. `beta` and `omega` only drive the angle equation and
/// never enter the reduced system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldHopfParams {
    pub mu: QuadExt,
    pub nu: QuadExt,
    pub alpha: QuadExt,
    pub s: i64,
    pub beta: QuadExt,
    pub omega: QuadExt,
}

impl FoldHopfParams {
    pub fn new(mu: QuadExt, nu: QuadExt, alpha: QuadExt, s: i64) -> Result<Self> {
        check_s(s)?;
        Ok(FoldHopfParams {
            mu,
            nu,
            alpha,
            s,
            beta: QuadExt::zero(),
            omega: QuadExt::one(),
        })
    }

    pub fn field(&self) -> Result<FieldSpec> {
        field_of(&[&self.mu, &self.nu, &self.alpha])
    }
}

/// Double-Hopf parameters; `omega1`, `omega2` are inert.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleHopfParams {
    pub mu: QuadExt,
    pub nu: QuadExt,
    pub alpha: QuadExt,
    pub beta: QuadExt,
    pub s: i64,
    pub omega1: QuadExt,
    pub omega2: QuadExt,
}

impl DoubleHopfParams {
    pub fn new(mu: QuadExt, nu: QuadExt, alpha: QuadExt, beta: QuadExt, s: i64) -> Result<Self> {
        check_s(s)?;
        Ok(DoubleHopfParams {
            mu,
            nu,
            alpha,
            beta,
            s,
            omega1: QuadExt::one(),
            omega2: QuadExt::one(),
        })
    }

    pub fn field(&self) -> Result<FieldSpec> {
        field_of(&[&self.mu, &self.nu, &self.alpha, &self.beta])
    }

    /// Parameters whose chart-1 system is the chart-2 system of `self`.
    pub fn chart2_swap(&self) -> DoubleHopfParams {
        let bs = if self.s == 1 {
            self.beta.clone()
        } else {
            -&self.beta
        };
        DoubleHopfParams {
            mu: self.nu.clone(),
            nu: self.mu.clone(),
            alpha: -bs,
            beta: self.alpha.clone(),
            s: -1,
            omega1: self.omega2.clone(),
            omega2: self.omega1.clone(),
        }
    }
}

/// `P = xi^2 + s eta^2 + mu`, `Q = eta (alpha xi + nu)` along `eta = 0`.
pub fn fold_hopf_system(p: &FoldHopfParams) -> Result<(PlanarSystem, CurveData)> {
    check_s(p.s)?;
    let field = p.field()?;
    let s = QuadExt::from_int(p.s);
    let pp = BiPoly::from_terms([
        (QuadExt::one(), 2, 0),
        (s, 0, 2),
        (p.mu.clone(), 0, 0),
    ]);
    let qq = BiPoly::from_terms([(p.alpha.clone(), 1, 1), (p.nu.clone(), 0, 1)]);
    let sys = PlanarSystem::new(pp, qq, field, "fold-Hopf")?;
    Ok((sys, CurveData::eta_zero()))
}

/// Chart 1: `P = xi (beta eta^2 - xi^2 + mu)`, `Q = eta (s eta^2 + alpha xi^2 + nu)`.
/// Chart 2 is chart 1 at the swapped parameters.
pub fn double_hopf_system(p: &DoubleHopfParams, chart: u8) -> Result<(PlanarSystem, CurveData)> {
    check_s(p.s)?;
    let q = match chart {
        1 => p.clone(),
        2 => p.chart2_swap(),
        _ => {
            return Err(Error::InvalidParameter(format!(
                "chart must be 1 or 2, got {chart}"
            )))
        }
    };
    let field = q.field()?;
    let pp = BiPoly::from_terms([
        (q.beta.clone(), 1, 2),
        (QuadExt::from_int(-1), 3, 0),
        (q.mu.clone(), 1, 0),
    ]);
    let qq = BiPoly::from_terms([
        (QuadExt::from_int(q.s), 0, 3),
        (q.alpha.clone(), 2, 1),
        (q.nu.clone(), 0, 1),
    ]);
    let label = if chart == 1 {
        "double-Hopf chart 1"
    } else {
        "double-Hopf chart 2"
    };
    let sys = PlanarSystem::new(pp, qq, field, label)?;
    Ok((sys, CurveData::eta_zero()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    FoldHopf,
    DoubleHopfChart1,
    DoubleHopfChart2,
}

impl TheoremId {
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::FoldHopf => "1.3",
            TheoremId::DoubleHopfChart1 => "1.4",
            TheoremId::DoubleHopfChart2 => "1.5",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "1.3" => TheoremId::FoldHopf,
            "1.4" => TheoremId::DoubleHopfChart1,
            "1.5" => TheoremId::DoubleHopfChart2,
            _ => return None,
        })
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseResult {
    pub clause: &'static str,
    pub holds: bool,
    /// Names of the sub-conditions that fail.
    pub failing: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremClauseReport {
    pub theorem: TheoremId,
    pub clauses: Vec<ClauseResult>,
    pub any_clause_holds: bool,
    /// Sub-conditions that could not be decided in the base field. Always empty
    /// over a quadratic field; kept for report completeness.
    pub undecidable_flags: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnfoldingParams {
    FoldHopf(FoldHopfParams),
    DoubleHopf(DoubleHopfParams),
}

struct Clause {
    name: &'static str,
    failing: Vec<String>,
}

impl Clause {
    fn new(name: &'static str) -> Self {
        Clause {
            name,
            failing: Vec::new(),
        }
    }

    fn req(&mut self, ok: bool, what: &str) -> bool {
        if !ok {
            self.failing.push(what.to_string());
        }
        ok
    }

    fn done(self) -> ClauseResult {
        ClauseResult {
            clause: self.name,
            holds: self.failing.is_empty(),
            failing: self.failing,
        }
    }
}

/// Whether the rational-valued `x` is the square of a rational.
fn is_rational_square(x: &QuadExt) -> bool {
    x.is_rational()
        && x
            .sqrt_in(FieldSpec::RATIONAL)
            .is_some_and(|r| r.is_rational())
}

fn report(theorem: TheoremId, clauses: Vec<ClauseResult>) -> TheoremClauseReport {
    TheoremClauseReport {
        theorem,
        any_clause_holds: clauses.iter().any(|c| c.holds),
        clauses,
        undecidable_flags: Vec::new(),
    }
}

fn fold_hopf_clauses(p: &FoldHopfParams) -> TheoremClauseReport {
    let (mu, nu, alpha) = (&p.mu, &p.nu, &p.alpha);
    // 2 alpha - 1 not a nonpositive integer
    let two_a_m1 = &(alpha + alpha) - &QuadExt::one();

    let mut c1 = Clause::new("i");
    c1.req(!mu.is_zero(), "mu != 0");
    c1.req(!alpha.is_rational(), "alpha not rational");
    c1.req(!nu.is_zero(), "nu != 0");

    let mut c2 = Clause::new("ii");
    if c2.req(!mu.is_zero(), "mu != 0") {
        // nu / sqrt(-mu) rational iff nu^2 / (-mu) is a rational square
        let q = &(nu * nu) / &(-mu);
        c2.req(!is_rational_square(&q), "nu/sqrt(-mu) not rational");
    }
    c2.req(!two_a_m1.in_z_leq0(), "2 alpha - 1 not in Z<=0");

    let mut c3 = Clause::new("iii");
    c3.req(mu.is_zero(), "mu = 0");
    c3.req(!nu.is_zero(), "nu != 0");
    c3.req(!two_a_m1.in_z_leq0(), "2 alpha - 1 not in Z<=0");

    report(TheoremId::FoldHopf, vec![c1.done(), c2.done(), c3.done()])
}

fn double_hopf_chart1_clauses(p: &DoubleHopfParams) -> TheoremClauseReport {
    let (mu, nu, alpha, beta) = (&p.mu, &p.nu, &p.alpha, &p.beta);
    let s = QuadExt::from_int(p.s);
    let two = QuadExt::from_int(2);
    let e1 = &(beta * nu) - &(mu * &s);
    let e2 = &(&(&(alpha * mu) + nu) * &s) - &e1;

    let mut c1 = Clause::new("i");
    if c1.req(!mu.is_zero(), "mu != 0") {
        let r = nu / mu;
        c1.req(!r.is_rational(), "nu/mu not rational");
        c1.req(
            !(&(alpha + &r) + &two).in_z_leq0(),
            "alpha + nu/mu + 2 not in Z<=0",
        );
    }
    c1.req(!alpha.in_z_geq0(), "alpha not in Z>=0");
    c1.req(!e1.is_zero(), "beta nu - mu s != 0");
    c1.req(!e2.is_zero(), "(alpha mu + nu) s - (beta nu - mu s) != 0");

    let mut c2 = Clause::new("ii");
    if c2.req(!mu.is_zero(), "mu != 0") {
        c2.req(!(alpha + &(nu / mu)).is_rational(), "alpha + nu/mu not rational");
    }
    c2.req(!alpha.in_z_geq0(), "alpha not in Z>=0");
    c2.req(!e1.is_zero(), "beta nu - mu s != 0");
    c2.req(!e2.is_zero(), "(alpha mu + nu) s - (beta nu - mu s) != 0");

    let mut c3 = Clause::new("iii");
    c3.req(mu.is_zero(), "mu = 0");
    c3.req(!nu.is_zero(), "nu != 0");
    c3.req(!alpha.in_z_geq0(), "alpha not in Z>=0");
    c3.req(*beta != s, "beta != s");

    report(
        TheoremId::DoubleHopfChart1,
        vec![c1.done(), c2.done(), c3.done()],
    )
}

fn double_hopf_chart2_clauses(p: &DoubleHopfParams) -> TheoremClauseReport {
    let (mu, nu, alpha, beta) = (&p.mu, &p.nu, &p.alpha, &p.beta);
    let s = QuadExt::from_int(p.s);
    let bs = beta * &s;
    let two = QuadExt::from_int(2);
    let e1 = &(alpha * mu) + nu;
    let e2 = &(&(&bs * nu) - mu) - &e1;

    let mut c1 = Clause::new("i");
    if c1.req(!nu.is_zero(), "nu != 0") {
        let r = mu / nu;
        c1.req(!r.is_rational(), "mu/nu not rational");
        c1.req(
            !(&(&bs - &r) - &two).in_z_geq0(),
            "beta s - mu/nu - 2 not in Z>=0",
        );
    }
    c1.req(!bs.in_z_leq0(), "beta s not in Z<=0");
    c1.req(!e1.is_zero(), "alpha mu + nu != 0");
    c1.req(!e2.is_zero(), "beta nu s - mu - (alpha mu + nu) != 0");

    let mut c2 = Clause::new("ii");
    if c2.req(!nu.is_zero(), "nu != 0") {
        c2.req(!(&bs - &(mu / nu)).is_rational(), "beta s - mu/nu not rational");
    }
    c2.req(!bs.in_z_leq0(), "beta s not in Z<=0");
    c2.req(!e1.is_zero(), "alpha mu + nu != 0");
    c2.req(!e2.is_zero(), "beta nu s - mu - (alpha mu + nu) != 0");

    let mut c3 = Clause::new("iii");
    c3.req(nu.is_zero(), "nu = 0");
    c3.req(!mu.is_zero(), "mu != 0");
    c3.req(!bs.in_z_leq0(), "beta s not in Z<=0");
    c3.req(*alpha != QuadExt::from_int(-1), "alpha != -1");

    report(
        TheoremId::DoubleHopfChart2,
        vec![c1.done(), c2.done(), c3.done()],
    )
}

/// Evaluates every clause of the theorem for the given family.
pub fn theorem_conditions(params: &UnfoldingParams, theorem: TheoremId) -> Result<TheoremClauseReport> {
    match (params, theorem) {
        (UnfoldingParams::FoldHopf(p), TheoremId::FoldHopf) => Ok(fold_hopf_clauses(p)),
        (UnfoldingParams::DoubleHopf(p), TheoremId::DoubleHopfChart1) => {
            Ok(double_hopf_chart1_clauses(p))
        }
        (UnfoldingParams::DoubleHopf(p), TheoremId::DoubleHopfChart2) => {
            Ok(double_hopf_chart2_clauses(p))
        }
        _ => Err(Error::InvalidParameter(format!(
            "theorem {theorem} does not apply to this family"
        ))),
    }
}
