use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed};

use super::poly::content_of;
use super::{BiPoly, Field, FieldResult, Monomial};
use crate::error::FieldError;

/// Element of Q(a, b), stored as an unreduced fraction of polynomials.
///
/// No gcd is ever taken. Two cheap normalizations are applied on
/// construction: a constant denominator is folded into the numerator, and a
/// monomial dividing both numerator and denominator is cancelled. Equality is
/// decided by cross-multiplication.
#[derive(Debug, Clone)]
pub struct RatFunc {
    num: BiPoly,
    den: BiPoly,
}

impl RatFunc {
    pub fn new(num: BiPoly, den: BiPoly) -> FieldResult<Self> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: BiPoly, den: BiPoly) -> Self {
        if num.is_zero() {
            return RatFunc {
                num,
                den: BiPoly::one(),
            };
        }
        if let Some(c) = den.as_constant() {
            return RatFunc {
                num: num.scale(&c.recip()),
                den: BiPoly::one(),
            };
        }
        let nm = num.monomial_content();
        let dm = den.monomial_content();
        let common = Monomial::new(nm.deg_a.min(dm.deg_a), nm.deg_b.min(dm.deg_b));
        let (num, den) = if common == Monomial::ONE {
            (num, den)
        } else {
            (num.div_monomial(common), den.div_monomial(common))
        };
        if let Some(c) = den.as_constant() {
            return RatFunc {
                num: num.scale(&c.recip()),
                den: BiPoly::one(),
            };
        }
        RatFunc { num, den }
    }

    pub fn from_poly(p: BiPoly) -> Self {
        RatFunc {
            num: p,
            den: BiPoly::one(),
        }
    }

    pub fn var_a() -> Self {
        Self::from_poly(BiPoly::var_a())
    }

    pub fn var_b() -> Self {
        Self::from_poly(BiPoly::var_b())
    }

    pub fn num(&self) -> &BiPoly {
        &self.num
    }

    pub fn den(&self) -> &BiPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Value at `(a0, b0)`; fails if the stored denominator vanishes there.
    pub fn eval(&self, a0: &BigRational, b0: &BigRational) -> FieldResult<BigRational> {
        let d = self.den.eval(a0, b0);
        if d.is_zero() {
            return Err(FieldError::PoleAtPoint {
                a: a0.to_string(),
                b: b0.to_string(),
            });
        }
        Ok(self.num.eval(a0, b0) / d)
    }

    /// Partial specialization of one or both parameters.
    pub fn substitute(&self, a0: Option<&BigRational>, b0: Option<&BigRational>) -> FieldResult<Self> {
        RatFunc::new(self.num.substitute(a0, b0), self.den.substitute(a0, b0))
    }

    /// Evaluate in any field by plugging `a`, `b` into numerator and denominator.
    pub fn eval_in<F: Field>(&self, a: &F, b: &F) -> FieldResult<F> {
        self.num.eval_in(a, b)?.try_div(&self.den.eval_in(a, b)?)
    }

    pub fn depends_on_a(&self) -> bool {
        self.num.depends_on_a() || self.den.depends_on_a()
    }

    pub fn depends_on_b(&self) -> bool {
        self.num.depends_on_b() || self.den.depends_on_b()
    }

    /// Content-stripped form used for display: the denominator is divided by
    /// its rational content and made to have a positive leading coefficient;
    /// the numerator absorbs the factor.
    pub fn display_form(&self) -> (BiPoly, BiPoly) {
        let mut k = self.den.content();
        if self.den.leading_term().is_some_and(|(_, c)| c.is_negative()) {
            k = -k;
        }
        let k = k.recip();
        (self.num.scale(&k), self.den.scale(&k))
    }
}

impl Field for RatFunc {
    fn from_rational(q: BigRational) -> Self {
        Self::from_poly(BiPoly::constant(q))
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn try_add(&self, rhs: &Self) -> FieldResult<Self> {
        if self.den == rhs.den {
            return RatFunc::new(self.num.add(&rhs.num), self.den.clone());
        }
        let num = self.num.mul(&rhs.den)?.add(&rhs.num.mul(&self.den)?);
        RatFunc::new(num, self.den.mul(&rhs.den)?)
    }

    fn try_sub(&self, rhs: &Self) -> FieldResult<Self> {
        self.try_add(&rhs.negated())
    }

    fn try_mul(&self, rhs: &Self) -> FieldResult<Self> {
        RatFunc::new(self.num.mul(&rhs.num)?, self.den.mul(&rhs.den)?)
    }

    fn negated(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn try_inv(&self) -> FieldResult<Self> {
        if self.num.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    fn try_eq(&self, rhs: &Self) -> FieldResult<bool> {
        if self.den == rhs.den {
            return Ok(self.num == rhs.num);
        }
        Ok(self.num.mul(&rhs.den)? == rhs.num.mul(&self.den)?)
    }

    fn is_symbolic(&self) -> bool {
        self.depends_on_a() || self.depends_on_b()
    }

    fn tag_name(&self) -> &'static str {
        "symbolic"
    }

    /// Clears denominators, then divides out the common monomial and the
    /// rational content of all three coordinates; the first nonzero
    /// coordinate ends up with a positive leading coefficient.
    fn canonicalize_triple(t: &[Self; 3]) -> FieldResult<[Self; 3]> {
        if t.iter().all(|c| c.is_zero()) {
            return Err(FieldError::DivisionByZero);
        }
        let mut polys: Vec<BiPoly> = Vec::with_capacity(3);
        for (i, c) in t.iter().enumerate() {
            let mut p = c.num.clone();
            for (j, other) in t.iter().enumerate() {
                if i != j && !other.den.is_one() {
                    p = p.mul(&other.den)?;
                }
            }
            polys.push(p);
        }
        let nonzero: Vec<&BiPoly> = polys.iter().filter(|p| !p.is_zero()).collect();
        let mono = nonzero
            .iter()
            .map(|p| p.monomial_content())
            .reduce(|x, y| Monomial::new(x.deg_a.min(y.deg_a), x.deg_b.min(y.deg_b)))
            .unwrap_or(Monomial::ONE);
        let mut k = content_of(nonzero.iter().flat_map(|p| p.terms().map(|(_, c)| c))).recip();
        let lead = nonzero[0].leading_term().unwrap().1;
        if lead.is_negative() {
            k = -k;
        }
        let out: Vec<RatFunc> = polys
            .iter()
            .map(|p| RatFunc::from_poly(p.div_monomial(mono).scale(&k)))
            .collect();
        Ok([out[0].clone(), out[1].clone(), out[2].clone()])
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        self.try_eq(other).unwrap_or(false)
    }
}

impl From<BiPoly> for RatFunc {
    fn from(p: BiPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (num, den) = self.display_form();
        if den.is_one() {
            return write!(f, "{num}");
        }
        let simple = |p: &BiPoly| p.num_terms() == 1 && p.leading_term().unwrap().1.is_one();
        let n = if num.num_terms() == 1 {
            num.to_string()
        } else {
            format!("({num})")
        };
        if simple(&den) {
            write!(f, "{n}/{den}")
        } else {
            write!(f, "{n}/({den})")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{parse_ratfunc, rat};

    fn p(s: &str) -> RatFunc {
        parse_ratfunc(s).unwrap()
    }

    #[test]
    fn common_factor_cancels_under_cross_multiplication() {
        assert!(p("a*b/b").try_eq(&p("a")).unwrap());
        assert!(p("(a^2 - 1)/(a - 1)").try_eq(&p("a + 1")).unwrap());
    }

    #[test]
    fn nontrivial_condition_is_not_zero() {
        assert!(!p("a*b - 1").try_eq(&RatFunc::zero()).unwrap());
    }

    #[test]
    fn reciprocal() {
        let x = p("a/(a - 1)");
        assert!(x.try_inv().unwrap().try_eq(&p("(a - 1)/a")).unwrap());
        assert_eq!(RatFunc::zero().try_inv().unwrap_err(), FieldError::DivisionByZero);
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p("1 - a").eval(&rat(3, 1), &rat(5, 1)).unwrap(), rat(-2, 1));
        assert_eq!(p("a*b - 1").eval(&rat(1, 2), &rat(2, 1)).unwrap(), rat(0, 1));
        assert_eq!(p("a").eval(&rat(7, 1), &rat(0, 1)).unwrap(), rat(7, 1));
        assert!(matches!(
            p("1/(a - 3)").eval(&rat(3, 1), &rat(0, 1)),
            Err(FieldError::PoleAtPoint { .. })
        ));
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "(b - 1)/b",
            "a*b - a - b",
            "1/(1 - b)",
            "-a^2 - a",
            "b/(b - 1)",
            "3/2*a",
        ] {
            let x = p(s);
            let y = p(&x.to_string());
            assert!(x.try_eq(&y).unwrap(), "{s} -> {x}");
        }
        assert_eq!(p("(b - 1)/b").to_string(), "(b - 1)/b");
        assert_eq!(p("(2*b - 2)/(2*b)").to_string(), "(b - 1)/b");
        assert_eq!(p("1/(1 - b)").to_string(), "-1/(b - 1)");
    }

    #[test]
    fn constant_denominator_folds() {
        let x = p("(2*a + 4)/2");
        assert!(x.is_polynomial());
        assert_eq!(x.num().to_string(), "a + 2");
    }

    #[test]
    fn symbolic_canonical_triple() {
        let t = [p("-a*b"), p("1"), p("a - 1")];
        let c = RatFunc::canonicalize_triple(&t).unwrap();
        assert_eq!(c[0].to_string(), "a*b");
        assert_eq!(c[1].to_string(), "-1");
        assert_eq!(c[2].to_string(), "-a + 1");
        let t2 = [p("2*a*b^2"), p("4*b"), p("0")];
        let c2 = RatFunc::canonicalize_triple(&t2).unwrap();
        assert_eq!(c2[0].to_string(), "a*b");
        assert_eq!(c2[1].to_string(), "2");
    }
}
