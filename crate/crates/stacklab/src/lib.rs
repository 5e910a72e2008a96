//! Exact and numerical laboratory for unimodal sequence enumeration.
//!
//! A unimodal sequence of size `n` is a list of positive integers summing to
//! `n` that rises weakly to a peak and then falls weakly.  This crate counts
//! the classical restricted families (stacks, receding stacks, shifted
//! stacks, strict and semi-strict stacks, with or without a marked summit),
//! and cross-checks the counts three independent ways:
//!
//! * [`series`] — exact truncated power series over `BigInt`, the engine
//!   behind the generating-function routes;
//! * [`genfun`] — the generating functions themselves, a catalog of named
//!   two-sided identities between them, and an exact verifier;
//! * [`combinat`] — direct enumeration of the sequences, partitions,
//!   Frobenius symbols, and the size-preserving bijections between them;
//! * [`asym`] — floating-point asymptotics: main-term growth catalogs, a
//!   saddle-point evaluation of the shifted-stack contour integral, and
//!   log-space numerical evaluation of every generating function near
//!   `q = 1`.
//!
//! Exact routes never touch floating point; numerical routes never feed back
//! into exact ones.

pub mod asym;
pub mod combinat;
pub mod genfun;
pub mod series;

pub use asym::{EpsAsym, LogReal, MainTerm, SaddleData};
pub use combinat::{FrobeniusSymbol, MarkedStack, Partition, StackVariant, UnimodalSequence};
pub use genfun::{IdentityTag, Variant, VerificationReport};
pub use series::{pochhammer, BivariateSeries, PowerSeries, Sign};

/// Errors reported by fallible operations across the crate.
///
/// Programmer errors (mismatched truncation orders, out-of-window access)
/// panic instead; every variant here is reachable from valid user input.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Inversion of a series whose constant term is not a unit of `Z`.
    #[error("cannot invert series: constant term {0} is not +1 or -1")]
    NonUnitConstant(String),
    /// A Pochhammer product with a vanishing constant term, e.g. a factor
    /// `(1 - q^0)`.
    #[error("product has zero constant term (factor 1 - q^0)")]
    ZeroConstant,
    /// Enumeration size above the safety bound and not explicitly forced.
    #[error("size {n} exceeds the enumeration bound {bound}; pass the explicit override to proceed")]
    SizeBound { n: usize, bound: usize },
    /// A combinatorial object that violates its structural invariants.
    #[error("invalid {kind}: {reason}")]
    InvalidObject { kind: &'static str, reason: String },
    /// A numerical routine failed to converge to its tolerance.
    #[error("numerical routine did not converge: {0}")]
    NoConvergence(String),
    /// Input outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
