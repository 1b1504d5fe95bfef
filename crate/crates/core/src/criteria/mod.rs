//! Transcendence of `Omega` and the order-by-order obstruction battery.

mod certify;
mod h1;
mod partition;
mod polysol;
mod rho;
mod scan;
mod simplicity;

pub use certify::{certify, Certificate, InconclusiveReason, Status};
pub use h1::{check_h1, H1Reason, H1Verdict, H1Witness};
pub use partition::{partition_roots, NewClass, RootPartition, SharedClass};
pub use polysol::{
    apply_operator, degree_bound, polynomial_solution, solution_space, solve_bounded,
    SolutionSpace,
};
pub use rho::{build_rho, divide_by_rho, RhoDivision};
pub use scan::{
    LogDerivativeForm,
    criterion_scan, h2_failure_witness, scan_order, solution_denominator, CriterionId,
    CriterionOutcome, Degrees, H2FailureWitness, PreconditionFailure,
};
pub use simplicity::{
    has_double_root, kappa_bar_b, simplicity_profile, ClassSimplicity, SimplicityProfile,
};
