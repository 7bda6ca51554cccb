//! Limits as the scale goes to zero: tangent operations, convergence-rate
//! estimation, and the metric-cone and rescaled-distance checks.

mod estimate;
mod exact;
mod metric;
mod schedule;
mod tangent;

pub use estimate::{estimate_family, estimate_limit, uniformity_check, ConvergenceReport, Rate};
pub use exact::{extrapolate_exact, ExactLimit};
pub use metric::{
    check_a2, check_a2_conjugated, check_a2_group, check_cone, check_nondegenerate, cone_report,
};
pub use schedule::Schedule;
pub use tangent::{
    audit_conical, audit_group_tangent, tangent_difference, tangent_difference_point,
    tangent_inverse, tangent_inverse_point, tangent_sum, tangent_sum_point, TangentCarrier,
};
