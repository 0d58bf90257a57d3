//! Exact Schubert calculus on the Grassmannian `G(n-k, n)` of `(n-k)`-planes
//! in `C^n`.
//!
//! The classical ring is built from the Pieri rule and the Giambelli
//! determinant; the small quantum ring from their quantum counterparts.
//! Gromov-Witten numbers are read off quantum products and cross-checked by
//! a residue sum over roots of unity in [`vafa_intriligator`].

pub mod classical;
pub mod combination;
pub mod error;
pub mod lr;
pub mod presentation;
pub mod quantum;
pub mod shape;
pub mod vafa_intriligator;

pub use classical::{giambelli_leibniz, multiply_classical, pieri_classical, poincare_pairing, SpecialExpansion, SpecialMonomial};
pub use combination::{CohomClass, QuantumClass};
pub use error::{Error, Result};
pub use lr::lr_tableaux_oracle;
pub use quantum::{
    extended_giambelli_direct, extended_giambelli_reduce, giambelli_quantum, gromov_witten, pieri_quantum,
    quantum_multiply,
};
pub use shape::{ExtendedTuple, Partition, Shape};
