//! Mixed orthogonal arrays, irredundant designs and the k-uniform quantum
//! states they induce.
//!
//! Every array is checked by exact counting. Constructions return a
//! [`constructions::Construction`] whose certificate records both the
//! distance a lemma predicts and what the oracles measured.
//!
//! ```
//! use oakit::algebra::hadamard::{hadamard01, HadamardMethod};
//! use oakit::array::distance::distance_spectrum;
//!
//! let h = hadamard01(12, HadamardMethod::Paley1).unwrap();
//! let oa = h.scheme(2).unwrap().expand();
//! assert_eq!(oa.runs(), 24);
//! assert_eq!(distance_spectrum(&oa).min_distance, 6);
//! ```

pub mod algebra;
pub mod array;
pub mod catalog;
pub mod constructions;
pub mod error;
pub mod quantum;
pub mod report;
pub mod search;

pub use array::MixedArray;
pub use error::{Error, Result};
