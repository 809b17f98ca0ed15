//! Error bounds, the uniqueness (contraction) check, and convergence studies.

mod bounds;
mod contraction;
mod convergence;

pub use bounds::{
    bound_comparison, classical_ab2_bound, phi_at_order_one, phi_factor, phi_grid, remainder_bound, BoundRow, PhiRow,
    PHI_CLAIMED_AT_ORDER_ONE,
};
pub use contraction::{contraction_check, linear_ty_contraction_constant, ContractionReport};
pub use convergence::{convergence_table, max_error_against_tbeta, observed_orders, ConvergenceRow};
