use thiserror::Error;

use crate::exact::RatVector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("lattice basis is singular")]
    SingularBasis,
    #[error("zero vector has no primitive form")]
    ZeroVector,
    #[error("lattice is not a sublattice of the reference lattice")]
    NotSublattice,
    #[error("lattice must have zero shift for this operation")]
    ShiftNotZero,
    #[error("point is not in the lattice")]
    PointNotInLattice,
    #[error("empty point set")]
    EmptyPointSet,
    #[error("coordinate does not fit in a machine integer")]
    CoordinateOverflow,
    #[error("simplex vertices are affinely dependent")]
    AffinelyDependent,
    #[error("point lies outside the polytope")]
    PointOutsidePolytope,
    #[error("point is not a vertex of the polytope")]
    NotAVertex,
    #[error("point is not on the boundary of the polytope")]
    PointNotOnBoundary,
    #[error("cone is not pointed")]
    NotPointed,
    #[error("cone must be 3-dimensional, got dimension {0}")]
    DimensionNot3(usize),
    #[error("polytope is not very ample: Hilbert basis element {hilbert:?} of the corner cone at {vertex:?} escapes the polytope")]
    NotVeryAmple { vertex: RatVector, hilbert: Vec<i64> },
    #[error("polytope is not a unimodular pyramid over the given base")]
    NotUnimodularPyramid,
    #[error("matrix is not symmetric positive definite")]
    NotPositiveDefinite,
    #[error("ellipsoid contains no lattice point")]
    EmptyEllipsoid,
    #[error("certificate does not reproduce the point set")]
    CertificateMismatch,
    #[error("point is not extremal for the certificate")]
    NotExtremal,
    #[error("perturbation search exhausted after {0} halvings")]
    SearchExhausted(u32),
    #[error("dimension {0} is too small (need d >= 5)")]
    DimensionTooSmall(usize),
    #[error("dimension {0} must be even and at least 6")]
    DimensionNotEvenAtLeast6(usize),
    #[error("stacking parameter b must satisfy 1/2 < b < 3/2")]
    BOutOfRange,
    #[error("ellipsoid center is not in (1/2)Z^3")]
    CenterNotHalfIntegral,
    #[error("chain polytope with {0} lattice points is not normal")]
    ChainStepNotNormal(usize),
    #[error("cover verification failed: {0}")]
    VerificationFailed(String),
    #[error("arrangement work exceeded the cap of {0}")]
    TooManyCells(usize),
    #[error("precondition not met: {0}")]
    PreconditionUnmet(String),
    #[error("search did not find a unimodular triangulation within {0} nodes")]
    SearchLimit(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
