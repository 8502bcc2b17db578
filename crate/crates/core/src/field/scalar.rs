use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{parse_quadext, parse_ratfunc, parse_rational, Field, FieldResult, QuadExt, RatFunc};
use crate::error::FieldError;

/// Which field a scene or a scalar lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldTag {
    Rational,
    Symbolic,
    Quadext,
}

impl FieldTag {
    pub fn name(self) -> &'static str {
        match self {
            FieldTag::Rational => "rational",
            FieldTag::Symbolic => "symbolic",
            FieldTag::Quadext => "quadext",
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FieldTag {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rational" | "q" => Ok(FieldTag::Rational),
            "symbolic" | "ratfunc" => Ok(FieldTag::Symbolic),
            "quadext" | "omega" => Ok(FieldTag::Quadext),
            other => Err(FieldError::Parse(format!("unknown field `{other}`"))),
        }
    }
}

/// A scalar of one of the three fields.
///
/// Arithmetic between different tags fails with `FieldMismatch`, except
/// that a `Rational` operand is embedded into the other side's field.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Rational(BigRational),
    RatFunc(RatFunc),
    Quad(QuadExt),
}

enum Pair {
    Q(BigRational, BigRational),
    R(RatFunc, RatFunc),
    W(QuadExt, QuadExt),
}

impl Scalar {
    pub fn tag(&self) -> FieldTag {
        match self {
            Scalar::Rational(_) => FieldTag::Rational,
            Scalar::RatFunc(_) => FieldTag::Symbolic,
            Scalar::Quad(_) => FieldTag::Quadext,
        }
    }

    pub fn parse(tag: FieldTag, text: &str) -> FieldResult<Self> {
        Ok(match tag {
            FieldTag::Rational => Scalar::Rational(parse_rational(text)?),
            FieldTag::Symbolic => Scalar::RatFunc(parse_ratfunc(text)?),
            FieldTag::Quadext => Scalar::Quad(parse_quadext(text)?),
        })
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            _ => None,
        }
    }

    /// Lift into `tag`'s field; only rationals can move.
    pub fn embed(&self, tag: FieldTag) -> FieldResult<Scalar> {
        match (self, tag) {
            (s, t) if s.tag() == t => Ok(s.clone()),
            (Scalar::Rational(q), FieldTag::Symbolic) => Ok(Scalar::RatFunc(RatFunc::from_rational(q.clone()))),
            (Scalar::Rational(q), FieldTag::Quadext) => Ok(Scalar::Quad(QuadExt::from_rational(q.clone()))),
            (s, t) => Err(FieldError::FieldMismatch(s.tag().name(), t.name())),
        }
    }

    fn pair(&self, rhs: &Scalar) -> FieldResult<Pair> {
        use Scalar::*;
        Ok(match (self, rhs) {
            (Rational(x), Rational(y)) => Pair::Q(x.clone(), y.clone()),
            (RatFunc(x), RatFunc(y)) => Pair::R(x.clone(), y.clone()),
            (Quad(x), Quad(y)) => Pair::W(x.clone(), y.clone()),
            (Rational(x), RatFunc(y)) => Pair::R(Field::from_rational(x.clone()), y.clone()),
            (RatFunc(x), Rational(y)) => Pair::R(x.clone(), Field::from_rational(y.clone())),
            (Rational(x), Quad(y)) => Pair::W(Field::from_rational(x.clone()), y.clone()),
            (Quad(x), Rational(y)) => Pair::W(x.clone(), Field::from_rational(y.clone())),
            (x, y) => return Err(FieldError::FieldMismatch(x.tag().name(), y.tag().name())),
        })
    }

    fn binary(
        &self,
        rhs: &Scalar,
        q: fn(&BigRational, &BigRational) -> FieldResult<BigRational>,
        r: fn(&RatFunc, &RatFunc) -> FieldResult<RatFunc>,
        w: fn(&QuadExt, &QuadExt) -> FieldResult<QuadExt>,
    ) -> FieldResult<Scalar> {
        Ok(match self.pair(rhs)? {
            Pair::Q(x, y) => Scalar::Rational(q(&x, &y)?),
            Pair::R(x, y) => Scalar::RatFunc(r(&x, &y)?),
            Pair::W(x, y) => Scalar::Quad(w(&x, &y)?),
        })
    }

    /// Specialize a symbolic scalar at `(a0, b0)`.
    pub fn eval(&self, a0: &BigRational, b0: &BigRational) -> FieldResult<Scalar> {
        match self {
            Scalar::Rational(_) => Ok(self.clone()),
            Scalar::RatFunc(f) => Ok(Scalar::Rational(f.eval(a0, b0)?)),
            Scalar::Quad(_) => Err(FieldError::FieldMismatch("quadext", "rational")),
        }
    }
}

impl Field for Scalar {
    fn from_rational(q: BigRational) -> Self {
        Scalar::Rational(q)
    }

    fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => Field::is_zero(q),
            Scalar::RatFunc(f) => f.is_zero(),
            Scalar::Quad(w) => w.is_zero(),
        }
    }

    fn try_add(&self, rhs: &Self) -> FieldResult<Self> {
        self.binary(rhs, Field::try_add, Field::try_add, Field::try_add)
    }

    fn try_sub(&self, rhs: &Self) -> FieldResult<Self> {
        self.binary(rhs, Field::try_sub, Field::try_sub, Field::try_sub)
    }

    fn try_mul(&self, rhs: &Self) -> FieldResult<Self> {
        self.binary(rhs, Field::try_mul, Field::try_mul, Field::try_mul)
    }

    fn negated(&self) -> Self {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::RatFunc(f) => Scalar::RatFunc(f.negated()),
            Scalar::Quad(w) => Scalar::Quad(w.negated()),
        }
    }

    fn try_inv(&self) -> FieldResult<Self> {
        Ok(match self {
            Scalar::Rational(q) => Scalar::Rational(q.try_inv()?),
            Scalar::RatFunc(f) => Scalar::RatFunc(f.try_inv()?),
            Scalar::Quad(w) => Scalar::Quad(w.try_inv()?),
        })
    }

    fn try_eq(&self, rhs: &Self) -> FieldResult<bool> {
        Ok(match self.pair(rhs)? {
            Pair::Q(x, y) => x == y,
            Pair::R(x, y) => x.try_eq(&y)?,
            Pair::W(x, y) => x == y,
        })
    }

    fn is_symbolic(&self) -> bool {
        matches!(self, Scalar::RatFunc(f) if f.is_symbolic())
    }

    fn tag_name(&self) -> &'static str {
        self.tag().name()
    }

    fn canonicalize_triple(t: &[Self; 3]) -> FieldResult<[Self; 3]> {
        let tag = [FieldTag::Symbolic, FieldTag::Quadext]
            .into_iter()
            .find(|tag| t.iter().any(|c| c.tag() == *tag))
            .unwrap_or(FieldTag::Rational);
        let lifted = [t[0].embed(tag)?, t[1].embed(tag)?, t[2].embed(tag)?];
        Ok(match tag {
            FieldTag::Rational => {
                let q = lifted.map(|s| match s {
                    Scalar::Rational(q) => q,
                    _ => unreachable!(),
                });
                BigRational::canonicalize_triple(&q)?.map(Scalar::Rational)
            }
            FieldTag::Symbolic => {
                let r = lifted.map(|s| match s {
                    Scalar::RatFunc(r) => r,
                    _ => unreachable!(),
                });
                RatFunc::canonicalize_triple(&r)?.map(Scalar::RatFunc)
            }
            FieldTag::Quadext => {
                let w = lifted.map(|s| match s {
                    Scalar::Quad(w) => w,
                    _ => unreachable!(),
                });
                QuadExt::canonicalize_triple(&w)?.map(Scalar::Quad)
            }
        })
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::RatFunc(r) => write!(f, "{r}"),
            Scalar::Quad(w) => write!(f, "{w}"),
        }
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::Rational(q)
    }
}

impl From<RatFunc> for Scalar {
    fn from(r: RatFunc) -> Self {
        Scalar::RatFunc(r)
    }
}

impl From<QuadExt> for Scalar {
    fn from(w: QuadExt) -> Self {
        Scalar::Quad(w)
    }
}
