//! Computational toolkit for finite involutory quandles.
//!
//! * [`words`] – word algebra (powers, reversal, re-association).
//! * [`winker`] – Cayley-graph enumeration of finitely presented involutory
//!   quandles by tracing and collapsing, plus the [`FiniteQuandle`] table type,
//!   axiom checks and isomorphism search.
//! * [`montesinos`] – presentations, closed-form predictions and the
//!   lattice-quotient model for the links `L(1/2, 1/2, p/q; e)`.
//! * [`analysis`] – geodesics, maximal geodesics and automorphism counting.

pub mod analysis;
pub mod error;
pub mod montesinos;
pub mod winker;
pub mod words;

pub use error::{Error, Result};
pub use montesinos::MontesinosParams;
pub use winker::{
    enumerate, BudgetExceeded, FiniteQuandle, Presentation, Relation, DEFAULT_MAX_VERTICES,
};
pub use words::{Gen, NestedTerm, Word};
