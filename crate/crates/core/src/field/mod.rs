//! Exact scalar fields.
//!
//! Three fields are supported: the rationals (`BigRational`), the field of
//! rational functions in the two parameters `a`, `b` ([`RatFunc`]), and the
//! quadratic extension of the rationals by a root `w` of `x^2 - x + 1`
//! ([`QuadExt`]). [`Scalar`] is the tagged union used at the I/O boundary.
//!
//! Arithmetic goes through the fallible [`Field`] trait so that tag
//! mismatches and the polynomial degree tripwire surface as errors.

mod parse;
mod poly;
mod quadext;
mod ratfunc;
mod rational;
mod scalar;

pub use num_rational::BigRational;
pub use parse::{parse_expr, parse_quadext, parse_ratfunc, parse_rational};
pub use poly::{BiPoly, Monomial, DEFAULT_DEGREE_BOUND};
pub use quadext::{omega_roots, QuadExt};
pub use ratfunc::RatFunc;
pub use rational::{int, rat, rational_to_f64};
pub use scalar::{FieldTag, Scalar};

use std::fmt;

use crate::error::FieldError;

pub type FieldResult<T> = Result<T, FieldError>;

/// An exact field.
///
/// Every arithmetic operation is fallible: `Scalar` rejects mixed tags and
/// `RatFunc` enforces the degree bound. `from_rational` is the canonical
/// embedding of the rationals, which is also where `zero` and `one` come from.
pub trait Field: Clone + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn from_rational(q: BigRational) -> Self;

    fn is_zero(&self) -> bool;

    fn try_add(&self, rhs: &Self) -> FieldResult<Self>;

    fn try_sub(&self, rhs: &Self) -> FieldResult<Self>;

    fn try_mul(&self, rhs: &Self) -> FieldResult<Self>;

    fn negated(&self) -> Self;

    fn try_inv(&self) -> FieldResult<Self>;

    fn try_div(&self, rhs: &Self) -> FieldResult<Self> {
        self.try_mul(&rhs.try_inv()?)
    }

    /// Mathematical equality.
    fn try_eq(&self, rhs: &Self) -> FieldResult<bool> {
        Ok(self.try_sub(rhs)?.is_zero())
    }

    /// True for values that still depend on the indeterminates `a`, `b`.
    fn is_symbolic(&self) -> bool {
        false
    }

    /// Short name of the field, used in mismatch messages.
    fn tag_name(&self) -> &'static str;

    /// Rescale a nonzero triple into the form used for display and hashing.
    ///
    /// The default divides by the first nonzero coordinate, which gives a
    /// unique representative in any field where equality is structural.
    fn canonicalize_triple(t: &[Self; 3]) -> FieldResult<[Self; 3]> {
        let pivot = t
            .iter()
            .find(|c| !c.is_zero())
            .ok_or(FieldError::DivisionByZero)?
            .try_inv()?;
        Ok([t[0].try_mul(&pivot)?, t[1].try_mul(&pivot)?, t[2].try_mul(&pivot)?])
    }

    fn zero() -> Self {
        Self::from_rational(rat(0, 1))
    }

    fn one() -> Self {
        Self::from_rational(rat(1, 1))
    }

    fn from_i64(n: i64) -> Self {
        Self::from_rational(rat(n, 1))
    }
}
