//! Finite abstract simplicial complexes, polyhedral join products, rational
//! ellipticity/hyperbolicity classification, and symbolic loop-space
//! decompositions.
//!
//! The crate is organised around five subsystems:
//!
//! * [`simplicial`] — canonical complexes with ghost vertices and the face-level
//!   operations (link, star, deletion, join, full subcomplexes, minimal missing
//!   faces, join decompositions).
//! * [`polyjoin`] — polyhedral join products `(K,L)^{*M}` built through the
//!   per-face support characterisation, together with their pushout pieces and
//!   full-subcomplex enumeration.
//! * [`classify`] — ellipticity/hyperbolicity verdicts with exponent and
//!   mod-p^r claims, driven by combinatorial criteria plus user-asserted
//!   space metadata.
//! * [`symbolic`] — pointed-space expression trees, a confluent simplifier,
//!   the loop-space decomposition emitters, and the exact rational homotopy
//!   rank series.
//! * [`oracle`] — independent brute-force reference implementations backing
//!   the test suite and the `oracle` CLI subcommand.

pub mod classify;
pub mod error;
pub mod format;
pub mod oracle;
pub mod polyjoin;
pub mod simplicial;
pub mod symbolic;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
