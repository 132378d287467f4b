//! Exact computations around the tensor-triangular spectrum of the motivic
//! stable homotopy category over finite fields.
//!
//! The crate is organised bottom-up:
//!
//! - [`finite_field`]: arithmetic in `F_q`, `q` odd, with a fixed generator `ω`;
//! - [`quadratic_forms`]: diagonalization, Witt decomposition, `W(F_q)` and `GW(F_q)`;
//! - [`milnor_witt`]: the graded ring `K^MW_•(F_q)` in canonical coordinates;
//! - [`graded_spectrum`]: homogeneous primes of `K^MW_•(F_q)`;
//! - [`chow_motives`]: Chow rings, correspondences and Tate motives of products
//!   of projective spaces;
//! - [`tt_geometry`]: the rational Tate model, finite spectral spaces and the
//!   comparison maps;
//! - [`verify`]: named invariant suites shared by the CLI and the test suites.

pub mod chow_motives;
pub mod finite_field;
pub mod graded_spectrum;
pub mod linalg;
pub mod milnor_witt;
pub mod quadratic_forms;
pub mod tt_geometry;
pub mod verify;
