//! Matrices over `GF(q)`, the witness-element constructors and
//! characteristic shapes.

mod matrix;
mod shape;
mod witness;

pub use matrix::Matrix;
pub use shape::{char_shape, invariant_dims, CharShape};
pub use witness::{
    alpha, element_order, g_lambda, omega_singer, sigma_k, singer_gamma, singer_polynomial, t_j,
    y_10p, GroupKind, GroupSpec, OmegaElement,
};
pub(crate) use witness::check_partition;

#[cfg(test)]
mod tests;
