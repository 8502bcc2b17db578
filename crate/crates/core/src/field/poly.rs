use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::FieldResult;
use crate::error::FieldError;

/// Per-variable degree tripwire. Nothing in the Pappus computations comes
/// close; hitting it means an expression is blowing up.
pub const DEFAULT_DEGREE_BOUND: u32 = 64;

/// `a^deg_a * b^deg_b`, ordered graded-lexicographically with `a > b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub deg_a: u32,
    pub deg_b: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { deg_a: 0, deg_b: 0 };

    pub fn new(deg_a: u32, deg_b: u32) -> Self {
        Monomial { deg_a, deg_b }
    }

    pub fn total(self) -> u32 {
        self.deg_a + self.deg_b
    }

    fn mul(self, o: Monomial) -> Monomial {
        Monomial::new(self.deg_a + o.deg_a, self.deg_b + o.deg_b)
    }

    fn min(self, o: Monomial) -> Monomial {
        Monomial::new(self.deg_a.min(o.deg_a), self.deg_b.min(o.deg_b))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total().cmp(&other.total()).then(self.deg_a.cmp(&other.deg_a))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in `a`, `b` with rational coefficients.
///
/// Zero coefficients are never stored, so the zero polynomial is the empty
/// map and structural equality is mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        BiPoly::term(c, Monomial::ONE)
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        BiPoly { terms }
    }

    pub fn var_a() -> Self {
        BiPoly::term(BigRational::one(), Monomial::new(1, 0))
    }

    pub fn var_b() -> Self {
        BiPoly::term(BigRational::one(), Monomial::new(0, 1))
    }

    /// Build from `(coefficient, deg_a, deg_b)` triples; like terms are summed.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (BigRational, u32, u32)>,
    {
        let mut p = BiPoly::zero();
        for (c, da, db) in terms {
            p.add_term(Monomial::new(da, db), c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// The value if this is a constant polynomial (zero included).
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: Monomial) -> BigRational {
        self.terms.get(&m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn degree_a(&self) -> u32 {
        self.terms.keys().map(|m| m.deg_a).max().unwrap_or(0)
    }

    pub fn degree_b(&self) -> u32 {
        self.terms.keys().map(|m| m.deg_b).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total()).max().unwrap_or(0)
    }

    /// Leading term in graded-lex order.
    pub fn leading_term(&self) -> Option<(Monomial, &BigRational)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn add(&self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }

    pub fn neg(&self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, k: &BigRational) -> BiPoly {
        if k.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect(),
        }
    }

    pub fn mul(&self, rhs: &BiPoly) -> FieldResult<BiPoly> {
        self.mul_bounded(rhs, DEFAULT_DEGREE_BOUND)
    }

    /// Product, failing with `DegreeOverflow` if either variable's degree
    /// would exceed `bound`.
    pub fn mul_bounded(&self, rhs: &BiPoly, bound: u32) -> FieldResult<BiPoly> {
        if self.is_zero() || rhs.is_zero() {
            return Ok(BiPoly::zero());
        }
        let da = self.degree_a() + rhs.degree_a();
        if da > bound {
            return Err(FieldError::DegreeOverflow {
                var: 'a',
                degree: da,
                bound,
            });
        }
        let db = self.degree_b() + rhs.degree_b();
        if db > bound {
            return Err(FieldError::DegreeOverflow {
                var: 'b',
                degree: db,
                bound,
            });
        }
        let mut out = BiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(*m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> FieldResult<BiPoly> {
        let mut acc = BiPoly::one();
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Evaluate at a point of any field, via the rational embedding of the
    /// coefficients.
    pub fn eval_in<F: super::Field>(&self, a: &F, b: &F) -> FieldResult<F> {
        let mut acc = F::zero();
        let mut pa: Vec<F> = vec![F::one()];
        let mut pb: Vec<F> = vec![F::one()];
        for (m, c) in &self.terms {
            while pa.len() <= m.deg_a as usize {
                let next = pa.last().unwrap().try_mul(a)?;
                pa.push(next);
            }
            while pb.len() <= m.deg_b as usize {
                let next = pb.last().unwrap().try_mul(b)?;
                pb.push(next);
            }
            let t = F::from_rational(c.clone())
                .try_mul(&pa[m.deg_a as usize])?
                .try_mul(&pb[m.deg_b as usize])?;
            acc = acc.try_add(&t)?;
        }
        Ok(acc)
    }

    pub fn eval(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.eval_in(a, b).expect("rational evaluation is infallible")
    }

    /// Substitute a rational value for `a` (if given) and/or `b` (if given).
    pub fn substitute(&self, a: Option<&BigRational>, b: Option<&BigRational>) -> BiPoly {
        let mut out = BiPoly::zero();
        for (m, c) in &self.terms {
            let mut coef = c.clone();
            let mut mono = *m;
            if let Some(a) = a {
                coef *= num_traits::pow(a.clone(), m.deg_a as usize);
                mono.deg_a = 0;
            }
            if let Some(b) = b {
                coef *= num_traits::pow(b.clone(), m.deg_b as usize);
                mono.deg_b = 0;
            }
            out.add_term(mono, coef);
        }
        out
    }

    pub fn depends_on_a(&self) -> bool {
        self.terms.keys().any(|m| m.deg_a > 0)
    }

    pub fn depends_on_b(&self) -> bool {
        self.terms.keys().any(|m| m.deg_b > 0)
    }

    /// Largest monomial dividing every term (`1` for the zero polynomial).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::ONE,
            Some(first) => it.fold(*first, |acc, m| acc.min(*m)),
        }
    }

    /// Exact division by a monomial that divides every term.
    pub fn div_monomial(&self, d: Monomial) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    debug_assert!(m.deg_a >= d.deg_a && m.deg_b >= d.deg_b);
                    (Monomial::new(m.deg_a - d.deg_a, m.deg_b - d.deg_b), c.clone())
                })
                .collect(),
        }
    }

    /// Rational content: the positive rational `c` such that `self / c` has
    /// coprime integer coefficients.
    pub fn content(&self) -> BigRational {
        content_of(self.terms.values())
    }

    /// `self` divided by its content and by its common monomial, with a
    /// positive leading coefficient. Zero stays zero.
    pub fn primitive(&self) -> BiPoly {
        if self.is_zero() {
            return BiPoly::zero();
        }
        let p = self.div_monomial(self.monomial_content());
        let mut k = p.content().recip();
        if p.leading_term().unwrap().1.is_negative() {
            k = -k;
        }
        p.scale(&k)
    }

    /// True if `self = k * other` for some nonzero rational `k`.
    pub fn is_rational_multiple_of(&self, other: &BiPoly) -> bool {
        match (self.leading_term(), other.leading_term()) {
            (None, None) => true,
            (Some((m1, c1)), Some((m2, c2))) if m1 == m2 => {
                let k = c1 / c2;
                *self == other.scale(&k)
            }
            _ => false,
        }
    }
}

/// Positive rational gcd of a set of rationals: gcd of numerators over lcm of
/// denominators. Returns 1 for an empty set.
pub(crate) fn content_of<'a, I>(coeffs: I) -> BigRational
where
    I: IntoIterator<Item = &'a BigRational>,
{
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for c in coeffs {
        num = num.gcd(c.numer());
        den = den.lcm(c.denom());
    }
    if num.is_zero() {
        return BigRational::one();
    }
    BigRational::new(num, den)
}

fn fmt_monomial(m: &Monomial, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    for (var, deg) in [('a', m.deg_a), ('b', m.deg_b)] {
        if deg == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if deg == 1 {
            write!(f, "{var}")?;
        } else {
            write!(f, "{var}^{deg}")?;
        }
    }
    Ok(())
}

impl fmt::Display for BiPoly {
    /// Terms in descending graded-lex order, e.g. `a*b^2 - 3/2*a + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if *m == Monomial::ONE {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                fmt_monomial(m, f)?;
            }
        }
        Ok(())
    }
}
