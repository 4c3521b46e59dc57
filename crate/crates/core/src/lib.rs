//! Exact Euler cocycles of groups acting on the projective line of an ordered
//! field, Euler numbers of surface-group representations, and certificates that
//! tuples of matrix pairs generate free discrete groups.

pub mod circle;
pub mod cocycle;
pub mod doubling;
pub mod error;
pub mod explore;
pub mod field;
pub mod fmat;
pub mod io;
pub mod matrix;
pub mod projline;
pub mod surfrep;
pub mod twist;
pub mod words;

pub use cocycle::{cocycle_defect, coboundary_difference, ell, BasePoint};
pub use doubling::{certify, classify, double, Certificate, ElementClass, PairTuple, Status};
pub use error::{Error, Result};
pub use field::{FieldElement, FieldKind, Sign};
pub use fmat::{FMat2, FloatRep};
pub use matrix::{commutator, Mat2};
pub use projline::{moebius_apply, pair_det, psi, Orientation, ProjPoint};
pub use surfrep::{euler_number, milnor_wood_check, SurfaceRep, NORM_CONST};

/// Crate version, logged by the command-line tool.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
