//! Transcendence of the first-order solution `Omega = exp(int kappa_1)`.

use crate::exactalg::RatFunc;
use crate::varcalc::{OmegaData, ResidueEntry};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum H1Reason {
    NonzeroExpPart,
    IrrationalResidue,
    AllResiduesRational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum H1Witness {
    ExpPart(RatFunc),
    Residue(ResidueEntry),
    /// All residues, each a rational constant.
    RationalResidues(Vec<ResidueEntry>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct H1Verdict {
    pub holds: bool,
    pub reason: H1Reason,
    pub witness: H1Witness,
}

/// `Omega` is transcendental iff `E != 0` or some residue is not rational.
///
/// A residue that is non-constant modulo its class takes distinct conjugate
/// values, none of them rational.
pub fn check_h1(om: &OmegaData) -> H1Verdict {
    if !om.exp_part.is_zero() {
        return H1Verdict {
            holds: true,
            reason: H1Reason::NonzeroExpPart,
            witness: H1Witness::ExpPart(om.exp_part.clone()),
        };
    }
    if let Some(r) = om
        .residues
        .iter()
        .find(|r| r.constant().is_none_or(|c| !c.is_rational()))
    {
        return H1Verdict {
            holds: true,
            reason: H1Reason::IrrationalResidue,
            witness: H1Witness::Residue(r.clone()),
        };
    }
    H1Verdict {
        holds: false,
        reason: H1Reason::AllResiduesRational,
        witness: H1Witness::RationalResidues(om.residues.clone()),
    }
}
