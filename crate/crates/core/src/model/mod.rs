//! The 6×6 linear model of the group: exact membership and adjoint action,
//! the fractional-linear action on the Siegel domain, multipliers and the
//! intertwiner between the two holomorphic models.

mod expm;
mod generators;
mod group;
mod multiplier;
mod sampling;
mod siegel;
pub mod suites;

pub use expm::{exp_algebra, is_member_approx, FMatrix};
pub use generators::{
    adjoint, adjoint_coeffs, adjoint_map, basis_matrices, expand, generator_matrix, verify_model,
    ModelMismatch, MODEL_PAIRS,
};
pub use group::{
    blocks, from_params, is_member, params_of, sl2_det, sl2_identity, sl2_inverse, sl2_mul,
    symplectic_check, GroupElement, GroupParams, Sl2,
};
pub use multiplier::{
    intertwiner_residual, multiplier_m, multiplier_tilde, quotient_phi, BivariatePoly,
    MultiplierParams, QuotientImage,
};
pub use sampling::{random_group_params, random_multiplier, random_siegel_point, sample_rng};
pub use siegel::{act, act_halfplane, act_matrix, in_domain, SiegelPoint, ENTRY_TOL};
