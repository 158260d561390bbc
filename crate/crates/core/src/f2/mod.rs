//! Packed linear algebra over F₂.

mod elimination;
mod matrix;
mod vector;

pub use elimination::{
    apply_pair_op, kernel_intersection, simultaneous_strict_lower_triangularize,
    twisted_gaussian_elimination, AffinePair, EliminationOutcome, PairOp, TransformRecord,
};
pub use matrix::F2Matrix;
pub use vector::F2Vector;
