use thiserror::Error;

use crate::perm::Perm3;

/// Failures of exact scalar arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: cannot combine {0} with {1}")]
    FieldMismatch(&'static str, &'static str),
    #[error("polynomial degree {degree} in `{var}` exceeds the bound {bound}")]
    DegreeOverflow { var: char, degree: u32, bound: u32 },
    #[error("denominator vanishes at a = {a}, b = {b}")]
    PoleAtPoint { a: String, b: String },
    #[error("parse error: {0}")]
    Parse(String),
}

/// Errors raised by the geometric layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("homogeneous triple has all coordinates zero")]
    ZeroTriple,
    #[error("expected a {expected}, got a {found}")]
    RoleMismatch {
        expected: &'static str,
        found: &'static str,
    },
    #[error("inputs are projectively equal: {0}")]
    CoincidentInputs(String),
    #[error("points are not collinear")]
    NotCollinear,
    #[error("auxiliary point lies on the common line")]
    BadAuxiliaryPoint,
    #[error("cross-ratio {0} has no six-element orbit (must differ from 0 and 1)")]
    DegenerateRatio(String),
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("invalid initial data: {0}")]
    InvalidInitialData(String),
    #[error("incompatible labeling: {0}")]
    IncompatibleLabeling(String),
    #[error("C-points for {0} are not collinear")]
    NonCollinearCPoints(Perm3),
    #[error("the {0} dual points are not collinear")]
    TripleNotCollinear(&'static str),
    #[error("returned point {0} lies on neither L_A nor L_B")]
    LandingFailure(String),
    #[error("lines {0} and {1} coincide")]
    DuplicateLines(usize, usize),
    #[error("intersection lattices need specialized (non-symbolic) coordinates")]
    SymbolicLattice,
    #[error("counting identity violated: C(n,2) = {lhs} but sum t_k C(k,2) = {rhs}")]
    CountingIdentity { lhs: usize, rhs: usize },
    #[error("theorem violated: {0}")]
    TheoremViolation(String),
    #[error("S does not lie on L_C,{0}")]
    SNotOnLine(Perm3),
    #[error("operation needs symbolic coordinates")]
    NotSymbolic,
    #[error("all configuration points are at infinity in the chosen chart")]
    AllPointsAtInfinity,
    #[error("point {0} is at infinity in the chosen chart (pass allow_infinite to drop it)")]
    PointAtInfinity(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
