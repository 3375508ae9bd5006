//! Exact Schur-basis arithmetic and induced log-concavity checks for the
//! equivariant invariants of uniform and q-niform matroids.

pub mod battery;
pub mod data;
pub mod error;
pub mod json;
pub mod logconcavity;
pub mod matroid;
pub mod partition;
pub mod schur;
pub mod sweep;

pub use error::{Error, Result};
pub use logconcavity::{
    check_ilc, check_strong_ilc, dimension_poly, is_log_concave, q_dimension_poly, substitute_t_plus_one,
    times_t_plus_one, verify_hook_corollary, verify_lpp_midpoint, verify_lpp_sort, verify_skew_family, CheckReport,
    IntPoly, SchurPoly, Witness,
};
pub use matroid::{
    braid_b7_chp, char_poly, inverse_kl_poly, inverse_kl_recursion_check, kl_defining_recursion_check, kl_poly,
    kl_poly_hook_form, reduced_char_poly, remark_example_poly, z_poly, z_poly_from_definition, SignedSchurPoly,
};
pub use partition::{midpoint_pair, sort_split, star_pair, Partition, SkewShape};
pub use schur::{
    dimension, generic_degree, hook_product_closed_form, hook_product_six_sums, is_schur_positive, jacobi_trudi_expand,
    lr_coefficient, pieri_multiply, schur_product, skew_expand, QPoly, SchurVector,
};
