//! Serializable report documents.
//!
//! Polynomials and field elements are stored as strings in the input grammar,
//! so every value in a report can be fed back to the parser.

use std::collections::BTreeMap;

use nonint_core::criteria::{
    Certificate, CriterionOutcome, H1Reason, H1Verdict, H1Witness, InconclusiveReason, Status,
};
use nonint_core::exactalg::{Degree, UPoly};
use nonint_core::unfoldings::TheoremClauseReport;
use nonint_core::varcalc::{OmegaData, ResidueEntry};
use serde::{Deserialize, Serialize};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    pub firing: Option<Firing>,
    pub h1: H1Report,
    pub omega: OmegaReport,
    pub kappa: Vec<String>,
    pub skipped_orders: Vec<usize>,
    pub orders: Vec<OrderReport>,
    pub trace: Vec<String>,
    pub input_echo: InputEcho,
    pub version: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timing: Option<Timing>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Firing {
    pub k: usize,
    pub criterion: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct H1Report {
    pub holds: bool,
    pub reason: String,
    pub witness: H1WitnessReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum H1WitnessReport {
    ExpPart { exp_part: String },
    IrrationalResidue { residue: ResidueReport },
    RationalResidues { residues: Vec<ResidueReport> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueReport {
    pub factor: String,
    pub multiplicity: u32,
    /// Residue as a polynomial modulo `factor`.
    pub residue: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaReport {
    pub exp_part: String,
    pub residues: Vec<ResidueReport>,
    pub regular_at_infinity: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderReport {
    pub k: usize,
    pub criterion: Option<String>,
    pub preconditions: Vec<String>,
    pub partition: PartitionReport,
    pub extra_hypothesis: Option<bool>,
    pub rho: Option<String>,
    /// Leading coefficient of `rho`.
    pub rho0: Option<String>,
    pub rho_bar: Option<String>,
    pub rho_tilde: Option<String>,
    pub degrees: Option<DegreesReport>,
    pub witness: Option<WitnessReport>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionReport {
    pub shared: Vec<SharedReport>,
    pub new: Vec<NewReport>,
    pub n1: usize,
    pub nk: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SharedReport {
    pub factor: String,
    pub b1: u32,
    pub a1: i64,
    pub bad_b: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NewReport {
    pub factor: String,
    pub ak: u32,
}

/// Degrees; `null` stands for the zero polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreesReport {
    pub kappa1d: Option<usize>,
    pub kappakn: Option<usize>,
    pub rho: Option<usize>,
    pub rho_bar: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub polynomial_solution: String,
    pub coprime_to_roots: bool,
    pub theta_log_derivative: LogDerivativeReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogDerivativeReport {
    pub rational: String,
    pub log_terms: Vec<LogTerm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogTerm {
    pub weight: i64,
    pub factor: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub d: i64,
    pub max_order: usize,
    pub system: SystemEcho,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SystemEcho {
    Inline { p: String, q: String, phi: String },
    Builtin { family: String, chart: u8, params: BTreeMap<String, String>, p: String, q: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub total_us: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseReport {
    pub theorem: String,
    pub clauses: BTreeMap<String, ClauseEntry>,
    pub any_clause_holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseEntry {
    pub holds: bool,
    pub failing: Vec<String>,
}

fn deg(d: Degree) -> Option<usize> {
    d.0
}

fn poly(p: &UPoly) -> String {
    p.to_string()
}

fn residue(r: &ResidueEntry) -> ResidueReport {
    ResidueReport {
        factor: poly(&r.class.factor),
        multiplicity: r.class.multiplicity,
        residue: poly(&r.residue),
    }
}

pub fn status_str(s: Status) -> &'static str {
    s.as_str()
}

fn h1_reason(r: H1Reason) -> &'static str {
    match r {
        H1Reason::NonzeroExpPart => "nonzero-exp-part",
        H1Reason::IrrationalResidue => "irrational-residue",
        H1Reason::AllResiduesRational => "all-residues-rational",
    }
}

impl From<&H1Verdict> for H1Report {
    fn from(v: &H1Verdict) -> Self {
        let witness = match &v.witness {
            H1Witness::ExpPart(e) => H1WitnessReport::ExpPart { exp_part: e.to_string() },
            H1Witness::Residue(r) => H1WitnessReport::IrrationalResidue { residue: residue(r) },
            H1Witness::RationalResidues(rs) => {
                H1WitnessReport::RationalResidues { residues: rs.iter().map(residue).collect() }
            }
        };
        H1Report { holds: v.holds, reason: h1_reason(v.reason).into(), witness }
    }
}

impl From<&OmegaData> for OmegaReport {
    fn from(o: &OmegaData) -> Self {
        OmegaReport {
            exp_part: o.exp_part.to_string(),
            residues: o.residues.iter().map(residue).collect(),
            regular_at_infinity: o.regular_at_infinity,
        }
    }
}

impl From<&CriterionOutcome> for OrderReport {
    fn from(o: &CriterionOutcome) -> Self {
        let shared = o
            .partition
            .shared
            .iter()
            .map(|c| SharedReport {
                factor: poly(&c.factor),
                b1: c.b1,
                a1: c.a1,
                bad_b: o
                    .profile
                    .classes
                    .iter()
                    .find(|s| s.factor == c.factor)
                    .and_then(|s| s.bad_b.as_ref())
                    .map(|b| b.to_string()),
            })
            .collect();
        let new = o
            .partition
            .new
            .iter()
            .map(|c| NewReport { factor: poly(&c.factor), ak: c.ak })
            .collect();
        OrderReport {
            k: o.k,
            criterion: o.fired.map(|c| c.as_str().to_string()),
            preconditions: o.precondition_failures.iter().map(|p| p.to_string()).collect(),
            partition: PartitionReport { shared, new, n1: o.partition.n1, nk: o.partition.nk },
            extra_hypothesis: o.extra_hypothesis,
            rho: o.rho.as_ref().map(poly),
            rho0: o.rho.as_ref().filter(|r| !r.is_zero()).map(|r| r.lc().to_string()),
            rho_bar: o.division.as_ref().map(|d| poly(&d.rho_bar)),
            rho_tilde: o.division.as_ref().map(|d| poly(&d.rho_tilde)),
            degrees: o.degrees.as_ref().map(|d| DegreesReport {
                kappa1d: deg(d.kappa1d),
                kappakn: deg(d.kappakn),
                rho: deg(d.rho),
                rho_bar: deg(d.rho_bar),
            }),
            witness: o.h2_failure.as_ref().map(|w| WitnessReport {
                polynomial_solution: poly(&w.polynomial_solution),
                coprime_to_roots: w.coprime_to_roots,
                theta_log_derivative: LogDerivativeReport {
                    rational: w.theta_log_derivative.rational.to_string(),
                    log_terms: w
                        .theta_log_derivative
                        .log_terms
                        .iter()
                        .map(|(weight, p)| LogTerm { weight: *weight, factor: poly(p) })
                        .collect(),
                },
            }),
            notes: o.notes.clone(),
        }
    }
}

impl From<&TheoremClauseReport> for ClauseReport {
    fn from(r: &TheoremClauseReport) -> Self {
        ClauseReport {
            theorem: r.theorem.to_string(),
            clauses: r
                .clauses
                .iter()
                .map(|c| (c.clause.to_string(), ClauseEntry { holds: c.holds, failing: c.failing.clone() }))
                .collect(),
            any_clause_holds: r.any_clause_holds,
        }
    }
}

fn reason_str(r: InconclusiveReason) -> String {
    r.as_str().to_string()
}

impl ReportDocument {
    pub fn from_certificate(cert: &Certificate, input_echo: InputEcho) -> Self {
        ReportDocument {
            status: status_str(cert.status).into(),
            reason: cert.reason.map(reason_str),
            firing: cert.firing.map(|(k, c)| Firing { k, criterion: c.as_str().into() }),
            h1: (&cert.h1).into(),
            omega: (&cert.omega).into(),
            kappa: cert.variational.kappas.iter().map(|k| k.to_string()).collect(),
            skipped_orders: cert.skipped_orders.clone(),
            orders: cert.orders.iter().map(OrderReport::from).collect(),
            trace: cert.trace.clone(),
            input_echo,
            version: VERSION.into(),
            timing: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}
