//! Finite binary operations: right quasigroups, racks, quandles, Loos
//! symmetric spaces, and the braided maps they induce.

mod braid;
mod classify;
mod enumerate;
mod irq;
mod quandles;
mod table;

pub use braid::{braid_audit, BraidReport, FiniteBraidMap};
pub use classify::{check_loos, classify, ClassificationFlags, LoosReport};
pub use enumerate::{canonical_form, enumerate_quandles, enumerate_quandles_labeled};
pub use irq::FiniteIrq;
pub use quandles::{
    cyclic_group, dihedral_quandle, make_automorphism_quandle, make_core_quandle,
    trivial_quandle, validate_group, GroupTable,
};
pub use table::{validate_table, OpTable};
