//! Groups, finite fields, Hadamard matrices, difference schemes and the
//! Kronecker-style operations that combine them.

pub mod field;
pub mod group;
pub mod hadamard;
pub mod kron;
pub mod scheme;

pub use field::FiniteField;
pub use group::AbelianGroup;
pub use hadamard::{hadamard01, hadamard01_auto, Hadamard01, HadamardMethod};
pub use scheme::{ds_linear, ds_poly3, is_difference_scheme, DifferenceScheme};
