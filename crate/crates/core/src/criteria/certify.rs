//! End-to-end certificate assembly.

use std::fmt;

use super::h1::{check_h1, H1Verdict};
use super::scan::{scan_order, CriterionId, CriterionOutcome};
use crate::error::{Error, Result};
use crate::varcalc::{
    kappa_coefficients, omega_decompose, verify_integral_curve, CurveData, OmegaData,
    PlanarSystem, VariationalData,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Nonintegrable,
    Inconclusive,
    Inapplicable,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Nonintegrable => "nonintegrable",
            Status::Inconclusive => "inconclusive",
            Status::Inapplicable => "inapplicable",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InconclusiveReason {
    H1Fails,
    NoCriterionFired,
}

impl InconclusiveReason {
    pub fn as_str(self) -> &'static str {
        match self {
            InconclusiveReason::H1Fails => "H1-fails",
            InconclusiveReason::NoCriterionFired => "no-criterion-fired",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub status: Status,
    pub system: PlanarSystem,
    pub curve: CurveData,
    pub max_order: usize,
    pub variational: VariationalData,
    pub omega: OmegaData,
    pub h1: H1Verdict,
    pub orders: Vec<CriterionOutcome>,
    /// Orders skipped because `kappa_k` vanishes.
    pub skipped_orders: Vec<usize>,
    pub firing: Option<(usize, CriterionId)>,
    pub reason: Option<InconclusiveReason>,
    pub trace: Vec<String>,
}

/// Runs the full pipeline up to order `max_order`.
pub fn certify(sys: &PlanarSystem, curve: &CurveData, max_order: usize) -> Result<Certificate> {
    if !verify_integral_curve(sys, curve)? {
        return Err(Error::NotIntegralCurve);
    }
    let variational = kappa_coefficients(sys, curve, max_order)?;
    let kappa1 = variational.kappa(1).clone();
    let omega = omega_decompose(&kappa1, sys.field)?;
    let h1 = check_h1(&omega);
    let mut trace = vec![format!("kappa_1 = {kappa1}")];
    let mut cert = Certificate {
        status: Status::Inconclusive,
        system: sys.clone(),
        curve: curve.clone(),
        max_order,
        variational,
        omega,
        h1,
        orders: Vec::new(),
        skipped_orders: Vec::new(),
        firing: None,
        reason: None,
        trace: Vec::new(),
    };
    if !cert.omega.regular_at_infinity {
        trace.push("deg kappa_1d <= deg kappa_1n: irregular at infinity".into());
        cert.status = Status::Inapplicable;
        cert.trace = trace;
        return Ok(cert);
    }
    if !cert.h1.holds {
        trace.push("all residues of kappa_1 rational and no exponential part: H1 fails".into());
        cert.reason = Some(InconclusiveReason::H1Fails);
        cert.trace = trace;
        return Ok(cert);
    }
    trace.push(format!("H1 holds ({:?})", cert.h1.reason));
    for k in 2..=max_order {
        let kappak = cert.variational.kappa(k).clone();
        if kappak.is_zero() {
            cert.skipped_orders.push(k);
            continue;
        }
        let outcome = scan_order(k, &kappa1, &kappak, sys.field)?;
        trace.push(order_line(&outcome));
        let fired = outcome.fired;
        cert.orders.push(outcome);
        if let Some(c) = fired {
            cert.status = Status::Nonintegrable;
            cert.firing = Some((k, c));
            cert.trace = trace;
            return Ok(cert);
        }
    }
    trace.push(format!("no criterion fired up to order {max_order}"));
    cert.reason = Some(InconclusiveReason::NoCriterionFired);
    cert.trace = trace;
    Ok(cert)
}

fn order_line(o: &CriterionOutcome) -> String {
    let mut s = format!("k = {}: n1 = {}, nk = {}", o.k, o.partition.n1, o.partition.nk);
    if !o.precondition_failures.is_empty() {
        let f: Vec<String> = o.precondition_failures.iter().map(|p| p.to_string()).collect();
        s.push_str(&format!("; preconditions fail ({})", f.join(", ")));
    }
    if let Some(r) = &o.rho {
        s.push_str(&format!("; rho = {r}"));
    }
    if let Some(d) = &o.division {
        s.push_str(&format!(
            "; rho_bar = {}, rho_tilde = {}, n_bar = {}",
            d.rho_bar, d.rho_tilde, d.n_bar
        ));
    }
    if let Some(w) = &o.h2_failure {
        s.push_str(&format!("; polynomial solution z = {}", w.polynomial_solution));
    }
    match o.fired {
        Some(c) => s.push_str(&format!("; criterion {c} fires")),
        None => s.push_str("; nothing fires"),
    }
    s
}
