//! Exact and combinatorial machinery for a family of special hyperelliptic
//! curves and the surfaces built from them: rational-arithmetic polynomial
//! algebra, Belyi map construction, branch-set equivalence of curves,
//! permutation monodromy (spherical systems, Hurwitz moves, conjugacy),
//! dessin classification, Beauville structures, fundamental-group
//! presentations via coset tables and Reidemeister–Schreier, and a numeric
//! solver for polynomials with two finite critical values.
//!
//! All algebra over the rationals is exact (arbitrary-precision integers and
//! fractions); floating point appears only in the `twocrit` root search,
//! which is seeded and verified a posteriori.

pub mod beauville;
pub mod belyi;
pub mod curves;
pub mod dessins;
pub mod exact;
pub mod fpgroup;
pub mod perm;
pub mod twocrit;

mod error;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
