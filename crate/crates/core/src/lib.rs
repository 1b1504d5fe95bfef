//! Exact nonintegrability certificates for planar polynomial vector fields
//! along rational integral curves.
//!
//! The pipeline: [`varcalc`] expands the foliation `Q/P` along the curve into
//! the coefficients `kappa_k`, [`criteria`] decides transcendence of the first
//! variational solution and runs the obstruction battery order by order, and
//! [`unfoldings`] supplies the reduced fold-Hopf and double-Hopf families.

pub mod error;
pub mod exactalg;
pub mod criteria;
pub mod varcalc;
pub mod unfoldings;

pub use error::{Error, Result};
