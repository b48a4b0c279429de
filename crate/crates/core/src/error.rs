use thiserror::Error;

/// Errors surfaced by the library.
///
/// Mathematical verification failures (residual above tolerance) are *not*
/// errors; operations report those through their return values so callers
/// can distinguish "could not compute" from "computed and the identity
/// fails".
#[derive(Debug, Error)]
pub enum Error {
    #[error("not a fundamental discriminant: {0}")]
    NotFundamentalDiscriminant(i64),
    #[error("polynomial is not monic with integer coefficients")]
    NotMonicIntegral,
    #[error("polynomial is reducible over the rationals")]
    ReduciblePolynomial,
    #[error("polynomial has complex roots (field not totally real)")]
    ComplexRoots,
    #[error("polynomial discriminant {0} is not squarefree")]
    NonSquarefreeDiscriminant(String),
    #[error("division by zero field element")]
    DivisionByZero,
    #[error("operation requires a real quadratic field (degree 2), got degree {0}")]
    NotQuadratic(usize),
    #[error("unit search budget exhausted ({0})")]
    UnitSearchExhausted(String),
    #[error("no element of trace 1: trace image is {0}Z")]
    NoTraceOneElement(String),
    #[error("(c, a) does not satisfy c*a^2 = inverse different")]
    NotHeckeSquare,
    #[error("theta tail bound unachievable within element budget {0}")]
    ThetaBudget(usize),
    #[error("theta magnitude {0:e} below floor; resample the base point")]
    ThetaTooSmall(f64),
    #[error("point fails genericity: orbit points collide (min separation {0:e})")]
    NotGeneric(f64),
    #[error("consistency product differs from 1 by {0:e}")]
    ConsistencyProduct(f64),
    #[error("key equation (1+4a)(1+4x) = 1 = (1-3b)(1-3y) violated or a*x*b*y = 0")]
    KeyEquation,
    #[error("matrix entry not integral: {0}")]
    NonIntegralEntry(String),
    #[error("sign pattern violates the either-or inequality at embedding {0}")]
    SignPattern(usize),
    #[error("1 + 5*beta is not a unit")]
    NotAUnit,
    #[error("element has no vanishing coordinate (property (I) holds)")]
    NoAxisVector,
    #[error("no lattice point in Minkowski box C_{0}")]
    EmptyMinkowskiBox(usize),
    #[error("series tail bound {got:e} above requested tolerance {want:e}")]
    SeriesTail { got: f64, want: f64 },
    #[error("quadrature did not converge within {0} points")]
    QuadratureBudget(usize),
    #[error("imaginary part {0:e} below the working floor")]
    ImagTooSmall(f64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
