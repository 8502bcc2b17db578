//! The Pappus configuration: six initial points, nine joins, eighteen
//! cross points and six Pappus lines.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{BiPoly, Field, RatFunc};
use crate::perm::Perm3;
use crate::projective::{collinear, det3, incident, join, meet, HomTriple};

/// Indices are 1-based throughout: `a_point(1)` is `A1`.
#[derive(Debug, Clone, PartialEq)]
pub struct PappusScene<F> {
    params: Option<(F, F)>,
    a_points: [HomTriple<F>; 3],
    b_points: [HomTriple<F>; 3],
    la: HomTriple<F>,
    lb: HomTriple<F>,
    s: HomTriple<F>,
    joins: [[HomTriple<F>; 3]; 3],
    c_points: BTreeMap<Perm3, [HomTriple<F>; 3]>,
    pappus_lines: BTreeMap<Perm3, HomTriple<F>>,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInitialData(msg.into())
}

fn canon<F: Field>(t: HomTriple<F>) -> Result<HomTriple<F>> {
    t.canonicalized()
}

impl<F: Field> PappusScene<F> {
    /// Build the configuration from arbitrary initial data.
    ///
    /// The A-points and B-points must each be distinct and collinear, on two
    /// different lines, and none of them may be the common point of those
    /// lines.
    pub fn from_points(a_points: [HomTriple<F>; 3], b_points: [HomTriple<F>; 3]) -> Result<Self> {
        Self::construct(a_points, b_points, false)
    }

    /// Like [`from_points`](Self::from_points), but an initial point may sit
    /// at `L_A ∩ L_B`. The construction still goes through there (two of
    /// the C-points for each σ coincide), which the second stage of the
    /// dual round trip relies on at isolated parameter values.
    pub fn from_points_lenient(a_points: [HomTriple<F>; 3], b_points: [HomTriple<F>; 3]) -> Result<Self> {
        Self::construct(a_points, b_points, true)
    }

    fn construct(a_points: [HomTriple<F>; 3], b_points: [HomTriple<F>; 3], allow_on_both: bool) -> Result<Self> {
        for (name, pts) in [("A", &a_points), ("B", &b_points)] {
            for (i, p) in pts.iter().enumerate() {
                if !p.is_point() {
                    return Err(invalid(format!("{name}{} is not a point", i + 1)));
                }
            }
            for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                if pts[i].proj_eq(&pts[j])? {
                    return Err(invalid(format!("{name}{} = {name}{}", i + 1, j + 1)));
                }
            }
            if !collinear(&pts[0], &pts[1], &pts[2])? {
                return Err(invalid(format!("the {name}-points are not collinear")));
            }
        }
        let la = canon(join(&a_points[0], &a_points[1])?)?;
        let lb = canon(join(&b_points[0], &b_points[1])?)?;
        if la.proj_eq(&lb)? {
            return Err(invalid("L_A = L_B"));
        }
        let s = canon(meet(&la, &lb)?)?;
        for (name, pts) in [("A", &a_points), ("B", &b_points)] {
            for (i, p) in pts.iter().enumerate() {
                if !allow_on_both && p.proj_eq(&s)? {
                    return Err(invalid(format!("{name}{} lies on both carrier lines", i + 1)));
                }
            }
        }
        let mut joins_v = Vec::with_capacity(3);
        for ai in &a_points {
            let mut row = Vec::with_capacity(3);
            for bj in &b_points {
                row.push(canon(join(ai, bj)?)?);
            }
            joins_v.push(<[HomTriple<F>; 3]>::try_from(row).expect("three joins"));
        }
        let joins: [[HomTriple<F>; 3]; 3] = joins_v.try_into().expect("three rows");

        let mut c_points = BTreeMap::new();
        let mut pappus_lines = BTreeMap::new();
        for sigma in Perm3::ALL {
            let l = |i: usize, j: usize| &joins[i - 1][sigma.apply(j) - 1];
            let m = |p: &HomTriple<F>, q: &HomTriple<F>| {
                meet(p, q).map_err(|e| match e {
                    Error::CoincidentInputs(_) => invalid(format!("two joins coincide for {sigma}")),
                    other => other,
                })
            };
            let c = [
                canon(m(l(2, 3), l(3, 2))?)?,
                canon(m(l(1, 3), l(3, 1))?)?,
                canon(m(l(1, 2), l(2, 1))?)?,
            ];
            let line = pappus_line_through(&c, sigma)?;
            c_points.insert(sigma, c);
            pappus_lines.insert(sigma, line);
        }
        Ok(PappusScene {
            params: None,
            a_points,
            b_points,
            la,
            lb,
            s,
            joins,
            c_points,
            pappus_lines,
        })
    }

    /// `A1 = (1:0:0)`, `A2 = (1:a:0)`, `A3 = (0:1:0)`,
    /// `B1 = (1:1:b)`, `B2 = (0:0:1)`, `B3 = (1:1:1)`.
    ///
    /// With `strict`, parameters at which two Pappus lines coincide are
    /// rejected as well.
    pub fn canonical(a: F, b: F, strict: bool) -> Result<Self> {
        check_parameters(&a, &b, strict)?;
        let z = F::zero;
        let o = F::one;
        let pt = |x: F, y: F, w: F| HomTriple::point(x, y, w);
        let a_points = [pt(o(), z(), z())?, pt(o(), a.clone(), z())?, pt(z(), o(), z())?];
        let b_points = [pt(o(), o(), b.clone())?, pt(z(), z(), o())?, pt(o(), o(), o())?];
        let mut scene =
            Self::from_points(a_points, b_points).map_err(|e| Error::DegenerateParameters(e.to_string()))?;
        scene.params = Some((a, b));
        Ok(scene)
    }

    pub fn params(&self) -> Option<(&F, &F)> {
        self.params.as_ref().map(|(a, b)| (a, b))
    }

    pub fn a_points(&self) -> &[HomTriple<F>; 3] {
        &self.a_points
    }

    pub fn b_points(&self) -> &[HomTriple<F>; 3] {
        &self.b_points
    }

    pub fn a_point(&self, i: usize) -> &HomTriple<F> {
        &self.a_points[i - 1]
    }

    pub fn b_point(&self, j: usize) -> &HomTriple<F> {
        &self.b_points[j - 1]
    }

    pub fn la(&self) -> &HomTriple<F> {
        &self.la
    }

    pub fn lb(&self) -> &HomTriple<F> {
        &self.lb
    }

    /// `L_A ∩ L_B`.
    pub fn s(&self) -> &HomTriple<F> {
        &self.s
    }

    /// `L(A_i, B_j)`.
    pub fn join(&self, i: usize, j: usize) -> &HomTriple<F> {
        &self.joins[i - 1][j - 1]
    }

    pub fn joins(&self) -> Vec<HomTriple<F>> {
        self.joins.iter().flatten().cloned().collect()
    }

    /// `C_{k,σ}`.
    pub fn c_point(&self, k: usize, sigma: Perm3) -> &HomTriple<F> {
        &self.c_points[&sigma][k - 1]
    }

    pub fn c_points(&self, sigma: Perm3) -> &[HomTriple<F>; 3] {
        &self.c_points[&sigma]
    }

    /// `L_{C,σ}`.
    pub fn pappus_line(&self, sigma: Perm3) -> &HomTriple<F> {
        &self.pappus_lines[&sigma]
    }

    pub fn pappus_lines(&self) -> &BTreeMap<Perm3, HomTriple<F>> {
        &self.pappus_lines
    }

    pub fn point(&self, label: PointLabel) -> &HomTriple<F> {
        let i = label.index();
        match label.family() {
            'A' => self.a_point(i),
            'B' => self.b_point(i),
            _ => self.c_point(i, Perm3::ID),
        }
    }

    /// The nine points in the order `A1..A3, B1..B3, C1..C3` (with `C` for σ).
    pub fn configuration_points(&self, sigma: Perm3) -> Vec<HomTriple<F>> {
        let mut out: Vec<HomTriple<F>> = self.a_points.to_vec();
        out.extend(self.b_points.iter().cloned());
        out.extend(self.c_points(sigma).iter().cloned());
        out
    }

    /// The nine lines of the configuration for σ, in the order
    /// `L_A, L_B, L_C, L(A2,B3), L(A3,B2), L(A1,B3), L(A3,B1), L(A1,B2), L(A2,B1)`
    /// with `B_j` read as `B_σ(j)`.
    pub fn configuration_lines(&self, sigma: Perm3) -> Vec<HomTriple<F>> {
        let l = |i: usize, j: usize| self.join(i, sigma.apply(j)).clone();
        vec![
            self.la.clone(),
            self.lb.clone(),
            self.pappus_line(sigma).clone(),
            l(2, 3),
            l(3, 2),
            l(1, 3),
            l(3, 1),
            l(1, 2),
            l(2, 1),
        ]
    }

    /// `det3(C1σ, C2σ, C3σ) = 0` for every σ.
    pub fn pappus_holds(&self) -> Result<bool> {
        for c in self.c_points.values() {
            if !det3(&c[0], &c[1], &c[2])?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Pairs of σ whose Pappus lines coincide.
    pub fn coinciding_pappus_lines(&self) -> Result<Vec<(Perm3, Perm3)>> {
        let mut out = Vec::new();
        for (i, s) in Perm3::ALL.iter().enumerate() {
            for t in &Perm3::ALL[i + 1..] {
                if self.pappus_line(*s).proj_eq(self.pappus_line(*t))? {
                    out.push((*s, *t));
                }
            }
        }
        Ok(out)
    }

    /// Verify the structural invariants of a scene.
    pub fn check_invariants(&self) -> Result<bool> {
        let mut ok = true;
        for p in &self.a_points {
            ok &= incident(p, &self.la)?;
        }
        for p in &self.b_points {
            ok &= incident(p, &self.lb)?;
        }
        ok &= incident(&self.s, &self.la)? && incident(&self.s, &self.lb)?;
        for i in 1..=3 {
            for j in 1..=3 {
                ok &= incident(self.a_point(i), self.join(i, j))?;
                ok &= incident(self.b_point(j), self.join(i, j))?;
            }
        }
        for sigma in Perm3::ALL {
            let l = self.pappus_line(sigma);
            for c in self.c_points(sigma) {
                ok &= incident(c, l)?;
            }
            ok &= !l.proj_eq(&self.la)? && !l.proj_eq(&self.lb)?;
        }
        Ok(ok)
    }
}

/// Line through three collinear C-points: join the first distinct pair and
/// check the remaining point.
fn pappus_line_through<F: Field>(c: &[HomTriple<F>; 3], sigma: Perm3) -> Result<HomTriple<F>> {
    let (i, j, k) = if !c[0].proj_eq(&c[1])? {
        (0, 1, 2)
    } else if !c[0].proj_eq(&c[2])? {
        (0, 2, 1)
    } else {
        (1, 2, 0)
    };
    let line = join(&c[i], &c[j]).map_err(|_| Error::NonCollinearCPoints(sigma))?;
    if !incident(&c[k], &line)? {
        return Err(Error::NonCollinearCPoints(sigma));
    }
    canon(line)
}

/// Certify Pappus' theorem for explicit initial data.
pub fn verify_pappus<F: Field>(a_points: [HomTriple<F>; 3], b_points: [HomTriple<F>; 3]) -> Result<bool> {
    PappusScene::from_points(a_points, b_points)?.pappus_holds()
}

/// A pair of Pappus lines together with the polynomials whose common zero
/// set is where the two lines coincide.
#[derive(Debug, Clone, PartialEq)]
pub struct CoincidenceCondition {
    pub pair: (Perm3, Perm3),
    /// The three 2x2 minors, with monomial factors and content removed.
    pub minors: [BiPoly; 3],
}

/// Derived once from the symbolic scene.
pub fn coincidence_conditions() -> &'static [CoincidenceCondition] {
    static CONDITIONS: OnceLock<Vec<CoincidenceCondition>> = OnceLock::new();
    CONDITIONS.get_or_init(|| {
        let scene = symbolic_scene();
        let mut out = Vec::new();
        for (i, s) in Perm3::ALL.iter().enumerate() {
            for t in &Perm3::ALL[i + 1..] {
                let m = scene
                    .pappus_line(*s)
                    .minors(scene.pappus_line(*t))
                    .expect("symbolic minors stay within the degree bound");
                let minors = m.map(|f| {
                    assert!(f.is_polynomial(), "Pappus lines are polynomial after canonicalization");
                    let p = f.num().clone();
                    if p.is_zero() {
                        p
                    } else {
                        p.div_monomial(p.monomial_content()).primitive()
                    }
                });
                out.push(CoincidenceCondition { pair: (*s, *t), minors });
            }
        }
        out
    })
}

/// The canonical scene over Q(a, b), built once.
pub fn symbolic_scene() -> &'static PappusScene<RatFunc> {
    static SCENE: OnceLock<PappusScene<RatFunc>> = OnceLock::new();
    SCENE.get_or_init(|| {
        PappusScene::canonical(RatFunc::var_a(), RatFunc::var_b(), false).expect("the generic scene is non-degenerate")
    })
}

/// Reject `a, b ∈ {0, 1}`; with `strict`, also reject parameters at which
/// two Pappus lines coincide.
pub fn check_parameters<F: Field>(a: &F, b: &F, strict: bool) -> Result<()> {
    for (name, v) in [("a", a), ("b", b)] {
        if v.is_zero() {
            return Err(Error::DegenerateParameters(format!("{name} = 0")));
        }
        if v.try_eq(&F::one())? {
            return Err(Error::DegenerateParameters(format!("{name} = 1")));
        }
    }
    if strict {
        if let Some((s, t)) = coinciding_lines_at(a, b)?.first() {
            return Err(Error::DegenerateParameters(format!("L_C,{s} = L_C,{t}")));
        }
    }
    Ok(())
}

/// Pairs of coinciding Pappus lines at `(a, b)`, read off the symbolic
/// coincidence conditions.
pub fn coinciding_lines_at<F: Field>(a: &F, b: &F) -> Result<Vec<(Perm3, Perm3)>> {
    let mut out = Vec::new();
    for cond in coincidence_conditions() {
        let mut all_zero = true;
        for m in &cond.minors {
            if !m.eval_in(a, b)?.is_zero() {
                all_zero = false;
                break;
            }
        }
        if all_zero {
            out.push(cond.pair);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PointLabel {
    A1,
    A2,
    A3,
    B1,
    B2,
    B3,
    C1,
    C2,
    C3,
}

impl PointLabel {
    pub const ALL: [PointLabel; 9] = [
        PointLabel::A1,
        PointLabel::A2,
        PointLabel::A3,
        PointLabel::B1,
        PointLabel::B2,
        PointLabel::B3,
        PointLabel::C1,
        PointLabel::C2,
        PointLabel::C3,
    ];

    pub fn family(self) -> char {
        match self as usize / 3 {
            0 => 'A',
            1 => 'B',
            _ => 'C',
        }
    }

    /// 1, 2 or 3.
    pub fn index(self) -> usize {
        self as usize % 3 + 1
    }

    pub fn from_parts(family: char, index: usize) -> Option<PointLabel> {
        let base = match family {
            'A' => 0,
            'B' => 3,
            'C' => 6,
            _ => return None,
        };
        (1..=3).contains(&index).then(|| PointLabel::ALL[base + index - 1])
    }
}

impl fmt::Display for PointLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family(), self.index())
    }
}

impl FromStr for PointLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.trim().chars();
        let fam = chars.next().map(|c| c.to_ascii_uppercase());
        let idx = chars.as_str().trim_start_matches('_').parse::<usize>().ok();
        fam.zip(idx)
            .and_then(|(f, i)| PointLabel::from_parts(f, i))
            .ok_or_else(|| Error::Parse(format!("unknown point label `{s}`")))
    }
}

/// Which old point takes each of the new roles `A1..A3`, `B1..B3`.
///
/// The new C-points are then determined by the construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Labeling {
    new_a: [PointLabel; 3],
    new_b: [PointLabel; 3],
}

impl Labeling {
    pub fn identity() -> Self {
        use PointLabel::*;
        Labeling {
            new_a: [A1, A2, A3],
            new_b: [B1, B2, B3],
        }
    }

    /// Build from arrows `old -> new`; the targets must be exactly
    /// `A1..A3, B1..B3` and the sources distinct.
    pub fn from_arrows(arrows: &[(PointLabel, PointLabel)]) -> Result<Self> {
        let mut slots: [Option<PointLabel>; 6] = [None; 6];
        let mut sources = Vec::new();
        for (old, new) in arrows {
            if new.family() == 'C' {
                return Err(Error::IncompatibleLabeling(format!(
                    "{new} is determined by the construction"
                )));
            }
            if sources.contains(old) {
                return Err(Error::IncompatibleLabeling(format!("{old} is used twice")));
            }
            sources.push(*old);
            let slot = *new as usize;
            if slots[slot].replace(*old).is_some() {
                return Err(Error::IncompatibleLabeling(format!("{new} is assigned twice")));
            }
        }
        let filled: Vec<PointLabel> = slots
            .iter()
            .map(|s| s.ok_or_else(|| Error::IncompatibleLabeling("all of A1..B3 must be assigned".into())))
            .collect::<Result<_>>()?;
        Ok(Labeling {
            new_a: [filled[0], filled[1], filled[2]],
            new_b: [filled[3], filled[4], filled[5]],
        })
    }

    /// Swap the roles of the A- and C-points.
    pub fn swap_a_and_c() -> Self {
        use PointLabel::*;
        Labeling {
            new_a: [C1, C2, C3],
            new_b: [B1, B2, B3],
        }
    }

    /// New carrier lines `L(B1, A3)` and `L(A2, B3)`.
    pub fn mixed_carriers() -> Self {
        use PointLabel::*;
        Labeling::from_arrows(&[(B1, A1), (C2, A2), (A3, A3), (C1, B1), (A2, B2), (B3, B3)]).expect("valid arrows")
    }

    pub fn new_a(&self) -> [PointLabel; 3] {
        self.new_a
    }

    pub fn new_b(&self) -> [PointLabel; 3] {
        self.new_b
    }
}

/// Rebuild the scene from relabeled initial data.
///
/// The new carrier lines must be lines of the old configuration (for σ = id).
pub fn apply_relabeling<F: Field>(scene: &PappusScene<F>, lbl: &Labeling) -> Result<PappusScene<F>> {
    let pick = |l: PointLabel| scene.point(l).clone();
    let new_a = lbl.new_a.map(pick);
    let new_b = lbl.new_b.map(pick);
    let old_lines = scene.configuration_lines(Perm3::ID);
    for (name, pts) in [("A", &new_a), ("B", &new_b)] {
        if !collinear(&pts[0], &pts[1], &pts[2])? {
            return Err(Error::IncompatibleLabeling(format!(
                "the new {name}-points are not collinear"
            )));
        }
        let carrier = join(&pts[0], &pts[1])
            .map_err(|_| Error::IncompatibleLabeling(format!("two new {name}-points coincide")))?;
        if !contains_line(&old_lines, &carrier)? {
            return Err(Error::IncompatibleLabeling(format!(
                "the new {name}-points do not span a configuration line"
            )));
        }
    }
    let mut out = PappusScene::from_points(new_a, new_b).map_err(|e| match e {
        Error::InvalidInitialData(m) => Error::IncompatibleLabeling(m),
        other => other,
    })?;
    if lbl == &Labeling::identity() {
        out.params = scene.params.clone();
    }
    Ok(out)
}

fn contains_line<F: Field>(lines: &[HomTriple<F>], l: &HomTriple<F>) -> Result<bool> {
    for m in lines {
        if m.proj_eq(l)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Whether two line lists agree as sets up to projective equality.
pub fn same_line_set<F: Field>(xs: &[HomTriple<F>], ys: &[HomTriple<F>]) -> Result<bool> {
    if xs.len() != ys.len() {
        return Ok(false);
    }
    for x in xs {
        if !contains_line(ys, x)? {
            return Ok(false);
        }
    }
    for y in ys {
        if !contains_line(xs, y)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, parse_ratfunc, rat, BigRational};
    use crate::projective::Role;

    type Q = BigRational;

    fn sym(role: Role, c: [&str; 3]) -> HomTriple<RatFunc> {
        HomTriple::new(c.map(|s| parse_ratfunc(s).unwrap()), role).unwrap()
    }

    #[test]
    fn canonical_joins_match_closed_forms() {
        let s = symbolic_scene();
        assert!(s.join(2, 1).proj_eq(&sym(Role::Line, ["a*b", "-b", "1 - a"])).unwrap());
        assert!(s.join(1, 1).proj_eq(&sym(Role::Line, ["0", "b", "-1"])).unwrap());
        assert!(s.join(3, 2).proj_eq(&sym(Role::Line, ["1", "0", "0"])).unwrap());
    }

    #[test]
    fn s_is_the_carrier_intersection() {
        let scene = PappusScene::canonical(int(3), int(5), false).unwrap();
        assert!(scene
            .s()
            .proj_eq(&HomTriple::from_ints(Role::Point, [1, 1, 0]))
            .unwrap());
    }

    #[test]
    fn excluded_parameters() {
        for (a, b) in [(1, 2), (0, 2), (2, 1), (2, 0)] {
            assert!(matches!(
                PappusScene::canonical(int(a), int(b), false),
                Err(Error::DegenerateParameters(_))
            ));
        }
    }

    #[test]
    fn c_points_and_lines() {
        let s = symbolic_scene();
        assert!(s
            .c_point(1, Perm3::ID)
            .proj_eq(&sym(Role::Point, ["0", "1 - a", "1"]))
            .unwrap());
        assert!(s
            .c_point(3, Perm3::T3)
            .proj_eq(&sym(Role::Point, ["a*b - b + 1", "a", "a*b"]))
            .unwrap());
        assert!(s
            .pappus_line(Perm3::ID)
            .proj_eq(&sym(Role::Line, ["a*b", "-1", "-(a - 1)"]))
            .unwrap());
        assert!(s
            .pappus_line(Perm3::T3)
            .proj_eq(&sym(Role::Line, ["a", "b - 1", "-a"]))
            .unwrap());

        let q = PappusScene::canonical(int(3), int(5), false).unwrap();
        let c1 = q.c_point(1, Perm3::ID);
        assert!(c1.proj_eq(&HomTriple::from_ints(Role::Point, [0, -2, 1])).unwrap());
        let l = q.pappus_line(Perm3::ID);
        assert!(l.proj_eq(&HomTriple::from_ints(Role::Line, [15, -1, -2])).unwrap());
        let on_la = meet(l, q.la()).unwrap();
        assert!(on_la.proj_eq(&HomTriple::from_ints(Role::Point, [1, 15, 0])).unwrap());
        assert!(q.check_invariants().unwrap());
    }

    #[test]
    fn verify_pappus_on_explicit_data() {
        let p = |c| HomTriple::<Q>::from_ints(Role::Point, c);
        assert!(verify_pappus(
            [p([1, 0, 0]), p([1, 1, 0]), p([1, 2, 0])],
            [p([0, 0, 1]), p([0, 1, 1]), p([0, 2, 1])]
        )
        .unwrap());
        assert!(matches!(
            verify_pappus(
                [p([1, 0, 0]), p([1, 0, 0]), p([1, 2, 0])],
                [p([0, 0, 1]), p([0, 1, 1]), p([0, 2, 1])]
            ),
            Err(Error::InvalidInitialData(_))
        ));
    }

    #[test]
    fn strict_mode_uses_coincidence_conditions() {
        // Every pair is covered and the zero locus agrees with a direct check.
        assert_eq!(coincidence_conditions().len(), 15);
        for (a, b) in [(3, 5), (2, 2), (-1, -1), (3, 3), (2, -1)] {
            let (a, b) = (int(a), int(b));
            let scene = PappusScene::canonical(a.clone(), b.clone(), false).unwrap();
            assert_eq!(
                scene.coinciding_pappus_lines().unwrap(),
                coinciding_lines_at(&a, &b).unwrap()
            );
        }
        assert!(PappusScene::canonical(int(3), int(5), true).is_ok());
    }

    #[test]
    fn identity_relabeling_is_identity() {
        let scene = PappusScene::canonical(int(3), int(5), false).unwrap();
        assert_eq!(apply_relabeling(&scene, &Labeling::identity()).unwrap(), scene);
    }

    #[test]
    fn relabelings_keep_the_line_set() {
        let scene = PappusScene::canonical(rat(3, 1), rat(5, 1), false).unwrap();
        let old = scene.configuration_lines(Perm3::ID);
        for lbl in [Labeling::swap_a_and_c(), Labeling::mixed_carriers()] {
            let new = apply_relabeling(&scene, &lbl).unwrap();
            assert!(same_line_set(&old, &new.configuration_lines(Perm3::ID)).unwrap());
        }
    }

    #[test]
    fn incompatible_relabeling() {
        use PointLabel::*;
        let scene = PappusScene::canonical(int(3), int(5), false).unwrap();
        let lbl = Labeling::from_arrows(&[(A1, A1), (A2, A2), (B1, A3), (B2, B1), (A3, B2), (B3, B3)]).unwrap();
        assert!(matches!(
            apply_relabeling(&scene, &lbl),
            Err(Error::IncompatibleLabeling(_))
        ));
        assert!(Labeling::from_arrows(&[(A1, A1)]).is_err());
    }

    #[test]
    fn labels_parse() {
        for l in PointLabel::ALL {
            assert_eq!(l.to_string().parse::<PointLabel>().unwrap(), l);
        }
        assert!("D1".parse::<PointLabel>().is_err());
    }
}
