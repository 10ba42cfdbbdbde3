//! Exact arithmetic for curve counts over small finite fields and the trace
//! identities they induce for Siegel modular forms of degree up to three.
//!
//! The pipeline, bottom to top:
//!
//! * [`ff`] — table-driven finite fields F_{p^n} and their towers;
//! * [`census`] — enumeration of elliptic, hyperelliptic and plane-quartic
//!   families with automorphism-weighted masses per Frobenius trace cell;
//! * [`strata`] — assembly of the moduli censuses A_1, A_2, A_3 from the
//!   curve families (Torelli twist, products, symmetrized powers);
//! * [`symplectic`] — exact evaluation of homogenized symplectic characters,
//!   giving traces of Frobenius on local systems by the Lefschetz formula;
//! * [`motives`] — the formal L / S[k] / S[j,k] expression algebra whose
//!   traces are cusp-form Hecke traces;
//! * [`conjectures`] — the degree-3 trace predictor, dimension formulas,
//!   spinor characteristic polynomials and congruence checks;
//! * [`store`] — caching of built censuses, on disk and in memory.
//!
//! The `book/` directory of the repository walks through the same layers
//! with runnable examples; `cargo test` runs those snippets as doctests.

pub mod census;
pub mod conjectures;
pub mod error;
pub mod ff;
pub mod motives;
pub mod oracle;
pub mod poly;
pub mod report;
pub mod store;
pub mod strata;
pub mod symplectic;

mod book;

pub use error::{Error, Result};
