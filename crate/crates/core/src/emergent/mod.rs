//! Scale-group arithmetic, the Γ-irq interface, its derived operations and
//! the sampled audits of the irq axioms and the derived identities.

mod audit;
mod family;
mod identities;
mod ops;
mod scale;

pub use audit::{run_check, sample_rng, AuditReport, CheckResult, SampleRng};
pub use family::IrqFamily;
pub use identities::{audit_identities, audit_irq, check_distributive, IDENTITY_NAMES};
pub use ops::{bullet_iterate, iterate, rel_difference, rel_inverse, rel_sum};
pub use scale::{Parity, Scale};
