//! Run specifications and the TOML configuration format.
//!
//! ```toml
//! [field]
//! d = 2
//!
//! [system]              # inline form
//! p = "xi^2 + eta^2 - 1"
//! q = "eta*(rt*xi + 1)"
//! phi = "0"
//!
//! [system]              # or a builtin family
//! family = "fold-hopf"  # or "double-hopf", with chart = 1 | 2
//! params = { mu = "-1", nu = "1", alpha = "rt", s = 1 }
//!
//! [check]
//! max_order = 9
//!
//! [sweep.grid]
//! alpha = ["rt", "1 + rt", "1/2"]
//! ```

use std::collections::BTreeMap;

use nonint_core::exactalg::{FieldSpec, QuadExt};
use nonint_core::unfoldings::{
    double_hopf_system, fold_hopf_system, DoubleHopfParams, FoldHopfParams, TheoremId,
    UnfoldingParams,
};
use nonint_core::varcalc::{CurveData, PlanarSystem, DEFAULT_MAX_ORDER, MAX_ORDER_CAP};
use serde::Deserialize;

use crate::error::CliError;
use crate::expr::{parse_constant, parse_poly, parse_ratfunc};

pub const MIN_ORDER: usize = 2;
pub const MAX_ORDER_ENV: &str = "NONINT_MAX_ORDER";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    FoldHopf,
    DoubleHopf,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::FoldHopf => "fold-hopf",
            Family::DoubleHopf => "double-hopf",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "fold-hopf" => Some(Family::FoldHopf),
            "double-hopf" => Some(Family::DoubleHopf),
            _ => None,
        }
    }

    fn keys(self) -> (&'static [&'static str], &'static [&'static str]) {
        match self {
            Family::FoldHopf => (&["mu", "nu", "alpha", "s"], &["beta", "omega"]),
            Family::DoubleHopf => (&["mu", "nu", "alpha", "beta", "s"], &["omega1", "omega2"]),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SystemSource {
    Inline { p: String, q: String, phi: String },
    /// Parameter values are kept as source text.
    Builtin { family: Family, chart: u8, params: BTreeMap<String, String> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemSpec {
    pub field: FieldSpec,
    pub source: SystemSource,
    pub max_order: usize,
}

pub fn check_order(k: usize) -> Result<usize, CliError> {
    if (MIN_ORDER..=MAX_ORDER_CAP).contains(&k) {
        Ok(k)
    } else {
        Err(CliError::Usage(format!("max order {k} outside [{MIN_ORDER}, {MAX_ORDER_CAP}]")))
    }
}

/// `NONINT_MAX_ORDER` when set, else the library default.
pub fn default_max_order() -> Result<usize, CliError> {
    match std::env::var(MAX_ORDER_ENV) {
        Ok(v) => {
            let k = v
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("{MAX_ORDER_ENV}={v:?} is not an integer")))?;
            check_order(k)
        }
        Err(_) => Ok(DEFAULT_MAX_ORDER),
    }
}

impl SystemSpec {
    pub fn build(&self) -> Result<(PlanarSystem, CurveData), CliError> {
        match &self.source {
            SystemSource::Inline { p, q, phi } => {
                let pp = parse_poly(p, self.field).map_err(|e| CliError::parse("p", e))?;
                let qq = parse_poly(q, self.field).map_err(|e| CliError::parse("q", e))?;
                let phi = parse_ratfunc(phi, self.field).map_err(|e| CliError::parse("phi", e))?;
                let sys = PlanarSystem::new(pp, qq, self.field, "inline")?;
                Ok((sys, CurveData::new(phi)))
            }
            SystemSource::Builtin { family, chart, .. } => match self.unfolding_params()? {
                UnfoldingParams::FoldHopf(p) => {
                    if *chart != 1 {
                        return Err(CliError::Usage("fold-hopf has a single chart".into()));
                    }
                    Ok(fold_hopf_system(&p)?)
                }
                UnfoldingParams::DoubleHopf(p) => {
                    debug_assert_eq!(*family, Family::DoubleHopf);
                    Ok(double_hopf_system(&p, *chart)?)
                }
            },
        }
    }

    /// The typed parameters of a builtin family.
    pub fn unfolding_params(&self) -> Result<UnfoldingParams, CliError> {
        let SystemSource::Builtin { family, params, .. } = &self.source else {
            return Err(CliError::Usage("not a builtin family".into()));
        };
        let (required, inert) = family.keys();
        for k in params.keys() {
            if !required.contains(&k.as_str()) && !inert.contains(&k.as_str()) {
                return Err(CliError::Usage(format!("unknown {} parameter '{k}'", family.as_str())));
            }
        }
        let get = |k: &str| -> Result<QuadExt, CliError> {
            let text = params
                .get(k)
                .ok_or_else(|| CliError::Usage(format!("missing parameter '{k}'")))?;
            parse_constant(text, self.field).map_err(|e| CliError::parse(k, e))
        };
        let opt = |k: &str| -> Result<Option<QuadExt>, CliError> {
            if params.contains_key(k) {
                get(k).map(Some)
            } else {
                Ok(None)
            }
        };
        let s = get("s")?;
        let s = match s.as_integer().and_then(|n| i64::try_from(n).ok()) {
            Some(n @ (1 | -1)) => n,
            _ => return Err(CliError::Usage(format!("s must be 1 or -1, got {s}"))),
        };
        Ok(match family {
            Family::FoldHopf => {
                let mut p = FoldHopfParams::new(get("mu")?, get("nu")?, get("alpha")?, s)?;
                if let Some(b) = opt("beta")? {
                    p.beta = b;
                }
                if let Some(w) = opt("omega")? {
                    p.omega = w;
                }
                UnfoldingParams::FoldHopf(p)
            }
            Family::DoubleHopf => {
                let mut p =
                    DoubleHopfParams::new(get("mu")?, get("nu")?, get("alpha")?, get("beta")?, s)?;
                if let Some(w) = opt("omega1")? {
                    p.omega1 = w;
                }
                if let Some(w) = opt("omega2")? {
                    p.omega2 = w;
                }
                UnfoldingParams::DoubleHopf(p)
            }
        })
    }

    /// The theorem whose clauses cover this builtin system.
    pub fn theorem(&self) -> Option<TheoremId> {
        match &self.source {
            SystemSource::Builtin { family: Family::FoldHopf, .. } => Some(TheoremId::FoldHopf),
            SystemSource::Builtin { family: Family::DoubleHopf, chart: 1, .. } => {
                Some(TheoremId::DoubleHopfChart1)
            }
            SystemSource::Builtin { family: Family::DoubleHopf, .. } => {
                Some(TheoremId::DoubleHopfChart2)
            }
            SystemSource::Inline { .. } => None,
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    field: Option<RawField>,
    system: RawSystem,
    #[serde(default)]
    check: RawCheck,
    sweep: Option<RawSweep>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawField {
    d: i64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSystem {
    p: Option<String>,
    q: Option<String>,
    phi: Option<String>,
    family: Option<String>,
    chart: Option<u8>,
    #[serde(default)]
    params: BTreeMap<String, ParamValue>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCheck {
    max_order: Option<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSweep {
    #[serde(default)]
    grid: BTreeMap<String, Vec<ParamValue>>,
}

/// Parameters may be written as TOML integers or as expression strings.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum ParamValue {
    Int(i64),
    Text(String),
}

impl ParamValue {
    fn text(self) -> String {
        match self {
            ParamValue::Int(n) => n.to_string(),
            ParamValue::Text(s) => s,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub spec: SystemSpec,
    /// Grid values by parameter name; `None` without a `[sweep]` section.
    pub grid: Option<BTreeMap<String, Vec<String>>>,
}

/// Parses a configuration; `max_order` wins over the config file when given.
pub fn parse_config(text: &str, max_order: Option<usize>) -> Result<Config, CliError> {
    let raw: RawConfig = toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))?;
    let field = FieldSpec::new(raw.field.map_or(1, |f| f.d))?;
    let sys = raw.system;
    let source = match (&sys.family, &sys.p, &sys.q) {
        (None, Some(p), Some(q)) => {
            if sys.chart.is_some() || !sys.params.is_empty() {
                return Err(CliError::Config("chart and params need a builtin family".into()));
            }
            SystemSource::Inline {
                p: p.clone(),
                q: q.clone(),
                phi: sys.phi.clone().unwrap_or_else(|| "0".into()),
            }
        }
        (Some(f), None, None) if sys.phi.is_none() => {
            let family = Family::parse(f)
                .ok_or_else(|| CliError::Config(format!("unknown family '{f}'")))?;
            let chart = sys.chart.unwrap_or(1);
            if chart != 1 && !(family == Family::DoubleHopf && chart == 2) {
                return Err(CliError::Config(format!("invalid chart {chart} for {f}")));
            }
            let params = sys.params.into_iter().map(|(k, v)| (k, v.text())).collect();
            SystemSource::Builtin { family, chart, params }
        }
        _ => {
            return Err(CliError::Config(
                "[system] needs either p and q (and optionally phi) or a family".into(),
            ))
        }
    };
    let max_order = match max_order.or(raw.check.max_order) {
        Some(k) => check_order(k)?,
        None => default_max_order()?,
    };
    let grid = raw.sweep.map(|s| {
        s.grid
            .into_iter()
            .map(|(k, vs)| (k, vs.into_iter().map(ParamValue::text).collect()))
            .collect()
    });
    Ok(Config { spec: SystemSpec { field, source, max_order }, grid })
}
