//! Exact dense linear algebra and univariate polynomials over GF(2^k).

pub mod factor;
pub mod matrix;
pub mod poly;

pub use matrix::{solve_sylvester_like, spin, EchelonBasis, Matrix, MatrixData};
pub use poly::{is_square_poly, Poly};
