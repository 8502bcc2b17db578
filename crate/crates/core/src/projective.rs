//! Points and lines of the projective plane over an exact field.

use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{rat, Field, RatFunc};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Point,
    Line,
}

impl Role {
    pub fn name(self) -> &'static str {
        match self {
            Role::Point => "point",
            Role::Line => "line",
        }
    }

    pub fn flipped(self) -> Role {
        match self {
            Role::Point => Role::Line,
            Role::Line => Role::Point,
        }
    }
}

/// Homogeneous coordinates `(x : y : z)` of a point, or the coefficients of
/// the line `x*X + y*Y + z*Z = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct HomTriple<F> {
    coords: [F; 3],
    role: Role,
}

impl<F: Field> HomTriple<F> {
    pub fn new(coords: [F; 3], role: Role) -> Result<Self> {
        if coords.iter().all(Field::is_zero) {
            return Err(Error::ZeroTriple);
        }
        Ok(HomTriple { coords, role })
    }

    pub fn point(x: F, y: F, z: F) -> Result<Self> {
        Self::new([x, y, z], Role::Point)
    }

    pub fn line(x: F, y: F, z: F) -> Result<Self> {
        Self::new([x, y, z], Role::Line)
    }

    /// Integer coordinates; panics on the zero triple.
    pub fn from_ints(role: Role, c: [i64; 3]) -> Self {
        Self::new(c.map(F::from_i64), role).expect("nonzero integer triple")
    }

    pub fn coords(&self) -> &[F; 3] {
        &self.coords
    }

    pub fn x(&self) -> &F {
        &self.coords[0]
    }

    pub fn y(&self) -> &F {
        &self.coords[1]
    }

    pub fn z(&self) -> &F {
        &self.coords[2]
    }

    pub fn role(&self) -> Role {
        self.role
    }

    pub fn is_point(&self) -> bool {
        self.role == Role::Point
    }

    /// Same coordinates with the role flipped: `(A : B : C)` <-> `Ax + By + Cz = 0`.
    pub fn dual(&self) -> Self {
        HomTriple {
            coords: self.coords.clone(),
            role: self.role.flipped(),
        }
    }

    pub fn with_role(&self, role: Role) -> Self {
        HomTriple {
            coords: self.coords.clone(),
            role,
        }
    }

    fn expect_role(&self, role: Role) -> Result<()> {
        if self.role != role {
            return Err(Error::RoleMismatch {
                expected: role.name(),
                found: self.role.name(),
            });
        }
        Ok(())
    }

    pub fn dot(&self, other: &Self) -> Result<F> {
        let [x0, y0, z0] = &self.coords;
        let [x1, y1, z1] = &other.coords;
        Ok(x0.try_mul(x1)?.try_add(&y0.try_mul(y1)?)?.try_add(&z0.try_mul(z1)?)?)
    }

    /// The three 2x2 minors of the matrix with rows `self`, `other`.
    pub fn minors(&self, other: &Self) -> Result<[F; 3]> {
        cross(&self.coords, &other.coords)
    }

    /// Equality up to a nonzero scalar: all 2x2 minors vanish.
    /// Roles are not compared.
    pub fn proj_eq(&self, other: &Self) -> Result<bool> {
        Ok(self.minors(other)?.iter().all(Field::is_zero))
    }

    /// Representative used for display and hashing.
    pub fn canonical(&self) -> Result<[F; 3]> {
        Ok(F::canonicalize_triple(&self.coords)?)
    }

    pub fn canonicalized(&self) -> Result<Self> {
        Ok(HomTriple {
            coords: self.canonical()?,
            role: self.role,
        })
    }

    /// `"(x : y : z)"` in canonical form.
    pub fn display_canonical(&self) -> String {
        let c = self.canonical().unwrap_or_else(|_| self.coords.clone());
        format!("({} : {} : {})", c[0], c[1], c[2])
    }

    /// Line equation such as `"a*b*x - y + (-a + 1)*z = 0"`.
    pub fn equation(&self) -> String {
        let c = self.canonical().unwrap_or_else(|_| self.coords.clone());
        let mut out = String::new();
        for (coef, var) in c.iter().zip(['x', 'y', 'z']) {
            if coef.is_zero() {
                continue;
            }
            let s = coef.to_string();
            let (neg, body) = match s.strip_prefix('-') {
                Some(rest) if !rest.contains([' ', '+']) => (true, rest.to_string()),
                _ => (false, s),
            };
            let term = if body == "1" {
                var.to_string()
            } else if body.contains(' ') {
                format!("({body})*{var}")
            } else {
                format!("{body}*{var}")
            };
            match (out.is_empty(), neg) {
                (true, true) => out.push_str(&format!("-{term}")),
                (true, false) => out.push_str(&term),
                (false, true) => out.push_str(&format!(" - {term}")),
                (false, false) => out.push_str(&format!(" + {term}")),
            }
        }
        out.push_str(" = 0");
        out
    }

    /// Apply `f` to each coordinate; fails if the image is the zero triple.
    pub fn try_map<G: Field>(&self, f: impl Fn(&F) -> Result<G>) -> Result<HomTriple<G>> {
        let [x, y, z] = &self.coords;
        HomTriple::new([f(x)?, f(y)?, f(z)?], self.role)
    }

    pub fn is_symbolic(&self) -> bool {
        self.coords.iter().any(Field::is_symbolic)
    }
}

impl HomTriple<RatFunc> {
    /// Specialize `a`, `b` to values in any field.
    pub fn specialize<G: Field>(&self, a: &G, b: &G) -> Result<HomTriple<G>> {
        self.try_map(|c| Ok(c.eval_in(a, b)?))
    }

    pub fn eval(&self, a0: &BigRational, b0: &BigRational) -> Result<HomTriple<BigRational>> {
        self.try_map(|c| Ok(c.eval(a0, b0)?))
    }
}

impl<F: Field> fmt::Display for HomTriple<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_canonical())
    }
}

/// Standard basis points `(1:0:0)`, `(0:1:0)`, `(0:0:1)`.
pub fn basis_points<F: Field>() -> [HomTriple<F>; 3] {
    [[1, 0, 0], [0, 1, 0], [0, 0, 1]].map(|c| HomTriple::from_ints(Role::Point, c))
}

fn cross<F: Field>(p: &[F; 3], q: &[F; 3]) -> Result<[F; 3]> {
    let m = |i: usize, j: usize| -> Result<F> { Ok(p[i].try_mul(&q[j])?.try_sub(&p[j].try_mul(&q[i])?)?) };
    Ok([m(1, 2)?, m(2, 0)?, m(0, 1)?])
}

/// Determinant of the matrix with columns `p`, `q`, `r`.
pub fn det3<F: Field>(p: &HomTriple<F>, q: &HomTriple<F>, r: &HomTriple<F>) -> Result<F> {
    let c = cross(&q.coords, &r.coords)?;
    let [x, y, z] = &p.coords;
    Ok(x.try_mul(&c[0])?
        .try_add(&y.try_mul(&c[1])?)?
        .try_add(&z.try_mul(&c[2])?)?)
}

fn cross_checked<F: Field>(p: &HomTriple<F>, q: &HomTriple<F>, role: Role) -> Result<HomTriple<F>> {
    let c = cross(&p.coords, &q.coords)?;
    HomTriple::new(c, role).map_err(|_| Error::CoincidentInputs(format!("{p} and {q}")))
}

/// Line through two distinct points.
pub fn join<F: Field>(p: &HomTriple<F>, q: &HomTriple<F>) -> Result<HomTriple<F>> {
    p.expect_role(Role::Point)?;
    q.expect_role(Role::Point)?;
    cross_checked(p, q, Role::Line)
}

/// Intersection point of two distinct lines.
pub fn meet<F: Field>(l: &HomTriple<F>, m: &HomTriple<F>) -> Result<HomTriple<F>> {
    l.expect_role(Role::Line)?;
    m.expect_role(Role::Line)?;
    cross_checked(l, m, Role::Point)
}

pub fn incident<F: Field>(p: &HomTriple<F>, l: &HomTriple<F>) -> Result<bool> {
    p.expect_role(Role::Point)?;
    l.expect_role(Role::Line)?;
    Ok(p.dot(l)?.is_zero())
}

pub fn dual<F: Field>(t: &HomTriple<F>) -> HomTriple<F> {
    t.dual()
}

pub fn collinear<F: Field>(p: &HomTriple<F>, q: &HomTriple<F>, r: &HomTriple<F>) -> Result<bool> {
    Ok(det3(p, q, r)?.is_zero())
}

/// Cross-ratio with a flag for inputs where it is undefined.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossRatioValue<F> {
    pub value: F,
    /// Set when two inputs coincide; `value` is then zero.
    pub degenerate: bool,
}

/// `[A, B; C, D] = [O,A,C][O,B,D] / ([O,A,D][O,B,C])`.
///
/// `o` defaults to the first basis point off the common line. The four
/// points must be pairwise distinct and collinear.
pub fn cross_ratio<F: Field>(
    a: &HomTriple<F>,
    b: &HomTriple<F>,
    c: &HomTriple<F>,
    d: &HomTriple<F>,
    o: Option<&HomTriple<F>>,
) -> Result<CrossRatioValue<F>> {
    let pts = [a, b, c, d];
    for p in pts {
        p.expect_role(Role::Point)?;
    }
    for i in 0..4 {
        for j in i + 1..4 {
            if pts[i].proj_eq(pts[j])? {
                return Err(Error::CoincidentInputs(format!("{} and {}", pts[i], pts[j])));
            }
        }
    }
    for (i, j, k) in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)] {
        if !collinear(pts[i], pts[j], pts[k])? {
            return Err(Error::NotCollinear);
        }
    }
    let line = join(a, b)?;
    let aux = match o {
        Some(o) => {
            if incident(o, &line)? {
                return Err(Error::BadAuxiliaryPoint);
            }
            o.clone()
        }
        None => default_auxiliary(&line)?,
    };
    cross_ratio_raw(a, b, c, d, &aux)
}

fn default_auxiliary<F: Field>(line: &HomTriple<F>) -> Result<HomTriple<F>> {
    for e in basis_points::<F>() {
        if !incident(&e, line)? {
            return Ok(e);
        }
    }
    unreachable!("a line contains at most two basis points")
}

/// The determinantal formula without input validation. Coincident inputs
/// show up as a value in `{0, 1, inf}` and are reported through `degenerate`.
pub fn cross_ratio_raw<F: Field>(
    a: &HomTriple<F>,
    b: &HomTriple<F>,
    c: &HomTriple<F>,
    d: &HomTriple<F>,
    o: &HomTriple<F>,
) -> Result<CrossRatioValue<F>> {
    let num = det3(o, a, c)?.try_mul(&det3(o, b, d)?)?;
    let den = det3(o, a, d)?.try_mul(&det3(o, b, c)?)?;
    if den.is_zero() || num.is_zero() || num.try_eq(&den)? {
        return Ok(CrossRatioValue {
            value: F::zero(),
            degenerate: true,
        });
    }
    Ok(CrossRatioValue {
        value: num.try_div(&den)?,
        degenerate: false,
    })
}

/// The six values `λ, 1/λ, 1-λ, 1/(1-λ), λ/(λ-1), (λ-1)/λ`, duplicates
/// removed, in that order.
pub fn ratio_orbit<F: Field>(lambda: &F) -> Result<Vec<F>> {
    let one = F::one();
    if lambda.is_zero() || lambda.try_eq(&one)? {
        return Err(Error::DegenerateRatio(lambda.to_string()));
    }
    let l = lambda;
    let one_minus = one.try_sub(l)?;
    let l_minus_one = l.try_sub(&one)?;
    let all = [
        l.clone(),
        l.try_inv()?,
        one_minus.clone(),
        one_minus.try_inv()?,
        l.try_div(&l_minus_one)?,
        l_minus_one.try_div(l)?,
    ];
    let mut out: Vec<F> = Vec::with_capacity(6);
    for v in all {
        let mut dup = false;
        for w in &out {
            if w.try_eq(&v)? {
                dup = true;
                break;
            }
        }
        if !dup {
            out.push(v);
        }
    }
    Ok(out)
}

/// The harmonic orbit `{-1, 1/2, 2}`.
pub fn harmonic_values() -> [BigRational; 3] {
    [rat(-1, 1), rat(1, 2), rat(2, 1)]
}

pub fn is_harmonic_value<F: Field>(lambda: &F) -> Result<bool> {
    for h in harmonic_values() {
        if lambda.try_eq(&F::from_rational(h))? {
            return Ok(true);
        }
    }
    Ok(false)
}

pub fn is_harmonic<F: Field>(a: &HomTriple<F>, b: &HomTriple<F>, c: &HomTriple<F>, d: &HomTriple<F>) -> Result<bool> {
    is_harmonic_value(&cross_ratio(a, b, c, d, None)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, parse_ratfunc, QuadExt};

    type Q = BigRational;

    fn pt(c: [i64; 3]) -> HomTriple<Q> {
        HomTriple::from_ints(Role::Point, c)
    }

    fn ln(c: [i64; 3]) -> HomTriple<Q> {
        HomTriple::from_ints(Role::Line, c)
    }

    fn sym(role: Role, c: [&str; 3]) -> HomTriple<RatFunc> {
        HomTriple::new(c.map(|s| parse_ratfunc(s).unwrap()), role).unwrap()
    }

    #[test]
    fn det3_examples() {
        let [e1, e2, e3] = basis_points::<Q>();
        assert_eq!(det3(&e1, &e2, &e3).unwrap(), int(1));
        assert_eq!(det3(&e1, &e1, &e3).unwrap(), int(0));
        // 1*(0 - 24) - 0 + 5*(8 - 3) = -24 + 25
        assert_eq!(det3(&pt([1, 2, 3]), &pt([0, 1, 4]), &pt([5, 6, 0])).unwrap(), int(1));
    }

    #[test]
    fn join_and_meet() {
        let la = join(&pt([1, 0, 0]), &pt([0, 1, 0])).unwrap();
        assert!(la.proj_eq(&ln([0, 0, 1])).unwrap());
        let a1 = sym(Role::Point, ["1", "0", "0"]);
        let b1 = sym(Role::Point, ["1", "1", "b"]);
        let l = join(&a1, &b1).unwrap();
        assert!(l.proj_eq(&sym(Role::Line, ["0", "b", "-1"])).unwrap());
        let p = meet(&ln([1, 0, 0]), &ln([0, 1, 0])).unwrap();
        assert!(p.proj_eq(&pt([0, 0, 1])).unwrap());
    }

    #[test]
    fn coincident_and_role_errors() {
        let p = pt([1, 2, 3]);
        let q = pt([2, 4, 6]);
        assert!(matches!(join(&p, &q), Err(Error::CoincidentInputs(_))));
        assert!(matches!(meet(&p, &q), Err(Error::RoleMismatch { .. })));
        assert_eq!(HomTriple::<Q>::point(int(0), int(0), int(0)), Err(Error::ZeroTriple));
    }

    #[test]
    fn incidence_examples() {
        let la = ln([0, 0, 1]);
        assert!(incident(&pt([1, 1, 0]), &la).unwrap());
        assert!(!incident(&pt([0, 0, 1]), &la).unwrap());
        let c1 = sym(Role::Point, ["0", "1 - a", "1"]);
        assert!(incident(&c1, &sym(Role::Line, ["1", "0", "0"])).unwrap());
    }

    #[test]
    fn duality() {
        let l = sym(Role::Line, ["a*b", "-1", "-(a - 1)"]);
        let p = dual(&l);
        assert_eq!(p.role(), Role::Point);
        assert!(p.proj_eq(&sym(Role::Point, ["a*b", "-1", "1 - a"])).unwrap());
        assert_eq!(dual(&p), l);
        assert_eq!(dual(&pt([1, 1, 0])).equation(), "x + y = 0");
    }

    #[test]
    fn cross_ratio_examples() {
        let a = sym(Role::Point, ["1", "0", "0"]);
        let a2 = sym(Role::Point, ["1", "a", "0"]);
        let a3 = sym(Role::Point, ["0", "1", "0"]);
        let s = sym(Role::Point, ["1", "1", "0"]);
        let v = cross_ratio(&a, &a2, &a3, &s, None).unwrap();
        assert!(!v.degenerate);
        assert!(v.value.try_eq(&parse_ratfunc("1 - a").unwrap()).unwrap());

        let b1 = sym(Role::Point, ["1", "1", "b"]);
        let b2 = sym(Role::Point, ["0", "0", "1"]);
        let b3 = sym(Role::Point, ["1", "1", "1"]);
        let v = cross_ratio(&b1, &b2, &b3, &s, None).unwrap();
        assert!(v.value.try_eq(&parse_ratfunc("(b - 1)/b").unwrap()).unwrap());

        let v = cross_ratio(&pt([1, 0, 0]), &pt([0, 1, 0]), &pt([1, 1, 0]), &pt([1, -1, 0]), None).unwrap();
        assert_eq!(v.value, int(-1));
    }

    #[test]
    fn cross_ratio_errors() {
        let (p, q, r) = (pt([1, 0, 0]), pt([0, 1, 0]), pt([1, 1, 0]));
        assert!(matches!(
            cross_ratio(&p, &q, &r, &pt([0, 0, 1]), None),
            Err(Error::NotCollinear)
        ));
        assert!(matches!(
            cross_ratio(&p, &q, &r, &pt([2, 2, 0]), None),
            Err(Error::CoincidentInputs(_))
        ));
        assert!(matches!(
            cross_ratio(&p, &q, &r, &pt([1, 2, 0]), Some(&pt([3, 1, 0]))),
            Err(Error::BadAuxiliaryPoint)
        ));
        let raw = cross_ratio_raw(&p, &q, &r, &r, &pt([0, 0, 1])).unwrap();
        assert!(raw.degenerate);
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(ratio_orbit(&int(-1)).unwrap(), vec![int(-1), int(2), rat(1, 2)]);
        assert_eq!(
            ratio_orbit(&rat(1, 3)).unwrap(),
            vec![rat(1, 3), int(3), rat(2, 3), rat(3, 2), rat(-1, 2), int(-2)]
        );
        assert_eq!(ratio_orbit(&parse_ratfunc("1 - a").unwrap()).unwrap().len(), 6);
        assert!(matches!(ratio_orbit(&int(1)), Err(Error::DegenerateRatio(_))));
        assert!(matches!(ratio_orbit(&int(0)), Err(Error::DegenerateRatio(_))));
    }

    #[test]
    fn omega_orbit_collapses_to_two() {
        // w is a primitive sixth root of unity; its orbit is {w, 1 - w}.
        let w = QuadExt::omega();
        assert_eq!(ratio_orbit(&w).unwrap().len(), 2);
    }

    #[test]
    fn harmonic_examples() {
        assert!(is_harmonic(&pt([1, 0, 0]), &pt([0, 1, 0]), &pt([1, 1, 0]), &pt([1, -1, 0])).unwrap());
        let quad = |a: i64| (pt([1, 0, 0]), pt([1, a, 0]), pt([0, 1, 0]), pt([1, 1, 0]));
        let (p, q, r, s) = quad(3);
        assert!(!is_harmonic(&p, &q, &r, &s).unwrap());
        let (p, q, r, s) = quad(2);
        assert!(is_harmonic(&p, &q, &r, &s).unwrap());
    }

    #[test]
    fn equation_format() {
        let l = sym(Role::Line, ["a*b", "-1", "-(a - 1)"]);
        assert_eq!(l.equation(), "a*b*x - y + (-a + 1)*z = 0");
        assert_eq!(ln([0, 2, -4]).equation(), "y - 2*z = 0");
    }
}
