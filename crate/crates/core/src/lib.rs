//! Emergent algebras: Γ-parametrized idempotent right quasigroups, finite
//! quandles and braided sets, and dilation structures on concrete models.
//!
//! Algebraic carriers (Euclidean space over ℚ, the Heisenberg group) are
//! checked with exact rational arithmetic. Limits as the scale goes to zero
//! are extracted either exactly (rational extrapolation of polynomial
//! families) or numerically with a convergence-rate estimate.

pub mod braided;
pub mod emergent;
pub mod error;
pub mod finite;
pub mod limits;
pub mod models;
pub mod pansu;
pub mod rational;

pub use emergent::{
    audit_identities, audit_irq, iterate, rel_difference, rel_inverse, rel_sum, AuditReport,
    CheckResult, IrqFamily, Parity, Scale,
};
pub use error::{Error, Result};
