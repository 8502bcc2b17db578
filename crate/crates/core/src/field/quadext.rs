use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed};

use super::{int, Field, FieldResult};
use crate::error::FieldError;

/// `c0 + c1*w` in Q(w), where `w^2 = w - 1`.
///
/// `w` and its conjugate `1 - w` are the two roots of `x^2 - x + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    pub c0: BigRational,
    pub c1: BigRational,
}

impl QuadExt {
    pub fn new(c0: BigRational, c1: BigRational) -> Self {
        QuadExt { c0, c1 }
    }

    pub fn omega() -> Self {
        QuadExt::new(int(0), int(1))
    }

    /// The other root `1 - w`.
    pub fn omega_conjugate() -> Self {
        QuadExt::new(int(1), -int(1))
    }

    /// Galois conjugate: `w -> 1 - w`.
    pub fn conjugate(&self) -> Self {
        QuadExt::new(&self.c0 + &self.c1, -&self.c1)
    }

    /// `x * conj(x) = c0^2 + c0*c1 + c1^2`, always rational.
    pub fn norm(&self) -> BigRational {
        &self.c0 * &self.c0 + &self.c0 * &self.c1 + &self.c1 * &self.c1
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.c1.is_zero().then_some(&self.c0)
    }
}

impl Field for QuadExt {
    fn from_rational(q: BigRational) -> Self {
        QuadExt::new(q, int(0))
    }

    fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero()
    }

    fn try_add(&self, rhs: &Self) -> FieldResult<Self> {
        Ok(QuadExt::new(&self.c0 + &rhs.c0, &self.c1 + &rhs.c1))
    }

    fn try_sub(&self, rhs: &Self) -> FieldResult<Self> {
        Ok(QuadExt::new(&self.c0 - &rhs.c0, &self.c1 - &rhs.c1))
    }

    fn try_mul(&self, rhs: &Self) -> FieldResult<Self> {
        // (x0 + x1 w)(y0 + y1 w) = x0 y0 + (x0 y1 + x1 y0) w + x1 y1 (w - 1)
        let cross = &self.c1 * &rhs.c1;
        Ok(QuadExt::new(
            &self.c0 * &rhs.c0 - &cross,
            &self.c0 * &rhs.c1 + &self.c1 * &rhs.c0 + cross,
        ))
    }

    fn negated(&self) -> Self {
        QuadExt::new(-&self.c0, -&self.c1)
    }

    fn try_inv(&self) -> FieldResult<Self> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conjugate();
        Ok(QuadExt::new(c.c0 / &n, c.c1 / &n))
    }

    fn try_eq(&self, rhs: &Self) -> FieldResult<bool> {
        Ok(self == rhs)
    }

    fn tag_name(&self) -> &'static str {
        "quadext"
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coef = |c: &BigRational| {
            if c.abs().is_one() {
                "w".to_string()
            } else {
                format!("{}*w", c.abs())
            }
        };
        match (self.c0.is_zero(), self.c1.is_zero()) {
            (_, true) => write!(f, "{}", self.c0),
            (true, false) => {
                if self.c1.is_negative() {
                    write!(f, "-")?;
                }
                write!(f, "{}", coef(&self.c1))
            }
            (false, false) => {
                let sign = if self.c1.is_negative() { '-' } else { '+' };
                write!(f, "{} {} {}", self.c0, sign, coef(&self.c1))
            }
        }
    }
}

/// Both roots of `x^2 - x + 1`.
pub fn omega_roots() -> [QuadExt; 2] {
    [QuadExt::omega(), QuadExt::omega_conjugate()]
}
