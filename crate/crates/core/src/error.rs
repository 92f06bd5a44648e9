use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::rat::Rat;

/// Errors surfaced by the engine. Inconclusive outcomes are errors on
/// purpose: the caller must not mistake "could not decide" for a verdict.
#[derive(Clone, PartialEq, Eq)]
pub enum Error {
    /// Associativity failed on the basis triple `(i, j, k)`.
    NotAssociative { i: usize, j: usize, k: usize },
    /// The claimed unit is not a two-sided identity.
    NoUnit,
    /// The relation ideal misses a path that survives at the length cutoff.
    NotAdmissible { detail: String },
    /// A path or relation in a quiver presentation is ill-formed.
    MalformedQuiver { detail: String },
    /// A validated object failed an internal re-check; indicates bad input
    /// data rather than a user mistake.
    InternalInconsistency { detail: String },
    /// The semisimple quotient has a simple factor that is not a full
    /// matrix algebra over the rationals (or splitting stalled).
    NotSplit { detail: String },
    /// The element passed as an idempotent does not square to itself.
    NotIdempotent,
    /// `fAe` does not vanish; the witness is a nonzero element of it.
    ContextNotZero { witness: Vec<Rat> },
    /// Two modules over different algebras were mixed.
    AlgebraMismatch,
    /// A vector or matrix had the wrong dimensions.
    DimensionMismatch { detail: String },
    /// An action table fails multiplicativity or the unit law.
    InvalidModule { detail: String },
    /// Splitting an endomorphism ring stalled; the module cannot be used
    /// further downstream.
    DecompositionInconclusive { detail: String },
    /// No invertible intertwiner was found within the retry budget and the
    /// fallback comparison could not decide either.
    IsoTestInconclusive { detail: String },
    /// A Gorenstein-projective set with unresolved pending members was
    /// passed where a closed one is required.
    NotClosed { detail: String },
    /// Certification of a module ended at the cutoff without a verdict.
    CertificationUnknown { detail: String },
    /// The gendo-Gorenstein hypotheses failed on the given pair.
    NotGendoGorenstein { detail: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotAssociative { i, j, k } => {
                write!(f, "multiplication not associative on basis triple ({i}, {j}, {k})")
            }
            Error::NoUnit => write!(f, "claimed unit is not a two-sided identity"),
            Error::NotAdmissible { detail } => write!(f, "relation ideal not admissible: {detail}"),
            Error::MalformedQuiver { detail } => write!(f, "malformed bound quiver: {detail}"),
            Error::InternalInconsistency { detail } => {
                write!(f, "internal consistency check failed: {detail}")
            }
            Error::NotSplit { detail } => {
                write!(f, "algebra is not split over the rationals: {detail}")
            }
            Error::NotIdempotent => write!(f, "element is not idempotent"),
            Error::ContextNotZero { .. } => {
                write!(f, "fAe is nonzero; the Morita context is not of zero type")
            }
            Error::AlgebraMismatch => write!(f, "modules live over different algebras"),
            Error::DimensionMismatch { detail } => write!(f, "dimension mismatch: {detail}"),
            Error::InvalidModule { detail } => write!(f, "invalid module action: {detail}"),
            Error::DecompositionInconclusive { detail } => {
                write!(f, "indecomposable decomposition inconclusive: {detail}")
            }
            Error::IsoTestInconclusive { detail } => {
                write!(f, "isomorphism test inconclusive: {detail}")
            }
            Error::NotClosed { detail } => {
                write!(f, "Gorenstein-projective set is not closed: {detail}")
            }
            Error::CertificationUnknown { detail } => {
                write!(f, "Gorenstein-projective certification unknown: {detail}")
            }
            Error::NotGendoGorenstein { detail } => {
                write!(f, "gendo-Gorenstein hypotheses failed: {detail}")
            }
        }
    }
}

impl fmt::Debug for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub type Result<T> = core::result::Result<T, Error>;
