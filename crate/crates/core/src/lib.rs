//! Exact computation of plethysms `s_ν ∘ s_μ` of Schur functions through an
//! explicit polynomial-representation model of `∇^ν(∇^μ E)`.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is pure: values
//! are immutable once built and caches live in explicitly owned structs
//! ([`polytabloid::Straightener`], [`hwv::PlethysmModel`]) so that callers can
//! keep one per worker thread.
//!
//! Module map:
//!
//! * [`partition`]: partitions, compositions, dominance, enumeration.
//! * [`tableau`]: tableaux over any totally ordered alphabet, the column
//!   total order, semistandard enumeration and Kostka numbers.
//! * [`polytabloid`]: GL-tabloids and polytabloids, snake relations and the
//!   straightening algorithm.
//! * [`plethystic`]: plethystic semistandard tableaux, weights, closure and
//!   maximal weights.
//! * [`symfunc`]: Schur/monomial change of basis and plethysm coefficients.
//! * [`linalg`]: fraction-free integer elimination (kernels and ranks).
//! * [`hwv`]: raising operators on the canonical basis of `∇^ν(∇^μ E)` and
//!   highest-weight vector constructions.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod hwv;
pub mod linalg;
pub mod linear;
pub mod partition;
pub mod plethystic;
pub mod polytabloid;
pub mod symfunc;
pub mod tableau;

pub use error::{Error, Result};
pub use hwv::{HwVector, PlethysmModel};
pub use linear::{Coeff, LinComb};
pub use partition::{Composition, Partition};
pub use plethystic::{InnerTableau, Pssyt};
pub use symfunc::{SchurVector, WeightMultiplicityMap};
pub use tableau::{ColumnOrdered, Letter, Tableau};
