use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Field, FieldResult};
use crate::error::FieldError;

/// `n / d` as a reduced big rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rational_to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        // Very large numerator/denominator pairs: scale down by bit length.
        let shift = q.numer().bits().max(q.denom().bits()).saturating_sub(1000);
        let n = (q.numer() >> shift).to_f64().unwrap_or(f64::NAN);
        let d = (q.denom() >> shift).to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

impl Field for BigRational {
    fn from_rational(q: BigRational) -> Self {
        q
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn try_add(&self, rhs: &Self) -> FieldResult<Self> {
        Ok(self + rhs)
    }

    fn try_sub(&self, rhs: &Self) -> FieldResult<Self> {
        Ok(self - rhs)
    }

    fn try_mul(&self, rhs: &Self) -> FieldResult<Self> {
        Ok(self * rhs)
    }

    fn negated(&self) -> Self {
        -self
    }

    fn try_inv(&self) -> FieldResult<Self> {
        if Zero::is_zero(self) {
            return Err(FieldError::DivisionByZero);
        }
        Ok(self.recip())
    }

    fn try_eq(&self, rhs: &Self) -> FieldResult<bool> {
        Ok(self == rhs)
    }

    fn tag_name(&self) -> &'static str {
        "rational"
    }

    /// Coprime integers with the first nonzero coordinate positive.
    fn canonicalize_triple(t: &[Self; 3]) -> FieldResult<[Self; 3]> {
        if t.iter().all(Zero::is_zero) {
            return Err(FieldError::DivisionByZero);
        }
        let lcm = t.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = t
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let first = ints.iter().find(|c| !c.is_zero()).expect("nonzero triple");
        if first.is_negative() {
            g = -g;
        }
        Ok([
            BigRational::from_integer(&ints[0] / &g),
            BigRational::from_integer(&ints[1] / &g),
            BigRational::from_integer(&ints[2] / &g),
        ])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_halves_and_thirds() {
        assert_eq!(rat(1, 2).try_add(&rat(1, 3)).unwrap(), rat(5, 6));
    }

    #[test]
    fn stays_reduced() {
        let x = rat(6, 4).try_mul(&rat(2, 3)).unwrap();
        assert_eq!(x.numer(), &BigInt::from(1));
        assert_eq!(x.denom(), &BigInt::from(1));
        let y = rat(3, -6);
        assert!(y.denom().is_positive());
        assert_eq!(y, rat(-1, 2));
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(int(0).try_inv(), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn canonical_triple_is_coprime_with_positive_lead() {
        let t = [rat(0, 1), rat(-3, 2), rat(9, 4)];
        let c = BigRational::canonicalize_triple(&t).unwrap();
        assert_eq!(c, [int(0), int(2), int(-3)]);
    }
}
