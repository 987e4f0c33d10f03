//! Exact-arithmetic toolkit for strongly modular lattices.
//!
//! Everything here is computed over arbitrary-precision integers and
//! rationals; there is no floating point anywhere in the library. The
//! main objects are positive definite integral lattices given by their
//! Gram matrices, their shadows (half the characteristic vectors), and
//! truncated q-expansions of the associated theta series on the q^(1/24)
//! exponent grid.
//!
//! Module overview:
//!
//! * [`exact`] — big-integer/rational matrices, Hermite normal form,
//!   lattice sums and intersections, exact LLL reduction.
//! * [`lattice`] — lattices, duals, partial duals, shadows, strong
//!   modularity, rational equivalence (Hasse invariants), orthogonal
//!   decomposition.
//! * [`enumerate`] — Fincke–Pohst short vector enumeration over lattices
//!   and cosets, theta series by counting, ADE root systems.
//! * [`qseries`] — eta quotients, the modular-form bases `g1`/`g2` and
//!   their shadow counterparts `s1`/`s2`, theta decompositions and the
//!   shadow prediction, closed-form shadow minima.
//! * [`isometry`] — isometry testing and automorphism groups by
//!   short-vector backtracking.
//! * [`genus`] — Kneser p-neighbors and genus enumeration.
//! * [`corpus`], [`verify`] — the lattice corpus shipped with the crate
//!   and the claim verifier driving the CLI.

pub mod corpus;
pub mod enumerate;
pub mod exact;
pub mod genus;
pub mod isometry;
pub mod lattice;
pub mod qseries;
pub mod verify;

/// Exact integer scalar used throughout.
pub type Int = num_bigint::BigInt;
/// Exact rational scalar used throughout.
pub type Rat = num_rational::BigRational;

pub use exact::{IntMat, RatMat};
pub use lattice::{Coset, Lattice, LevelParams, RatLattice, RationalClass};
pub use qseries::QSeries;

/// Library-wide error type.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("gram matrix is not integral")]
    NotIntegral,
    #[error("rank-deficient input: {0}")]
    RankDeficient(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("level {0} is not squarefree with sigma_1 | 24")]
    BadLevel(u64),
    #[error("{0} does not divide the level {1}")]
    BadDivisor(u64, u64),
    #[error("lattice is not {0}-admissible: rescaled partial dual has a non-integral gram")]
    NotAdmissible(u64),
    #[error("enumeration cap exceeded: more than {cap} vectors below norm {bound}")]
    EnumerationCap { cap: u64, bound: Rat },
    #[error("backtrack node cap {0} exceeded; result undecided")]
    Undecided(u64),
    #[error("empty series: precision {prec} is at or below the valuation")]
    EmptySeries { prec: i64 },
    #[error("division by a series with no invertible leading coefficient")]
    NonInvertibleSeries,
    #[error("exponent {0}/24 does not lie on the q^(1/24) grid")]
    OffGrid(String),
    #[error("theta series is not in the decomposition span: residual at grid {0}")]
    NotInSpan(i64),
    #[error("not rationally equivalent to the reference form: {0}")]
    RationalClassMismatch(String),
    #[error("shadow level violation: minimum {min0} is not M({n},m,{k}) for any integer m >= 0")]
    ShadowLevelViolation { n: u64, k: u64, min0: Rat },
    #[error("root component (rank {rank}, {count} roots) matches no ADE system")]
    RootClassification { rank: usize, count: u64 },
    #[error("orthogonal summand counts per divisor are unequal: {0}")]
    UnbalancedSummands(String),
    #[error("no isotropic line mod {0}: lattice has no {0}-neighbors")]
    NoNeighbors(u64),
    #[error("class cap {0} exceeded: genus enumeration incomplete")]
    ClassCap(usize),
    #[error("refusing {0}: {1}")]
    Refused(String, String),
    #[error("invalid input: {0}")]
    BadInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
