//! Extra incidences with the point `S = L_A ∩ L_B`: glue conditions,
//! cross-ratios on the carrier lines, pairs of Pappus lines through `S`,
//! overlapping Pappus lines and super Pappus arrangements.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::dual::round_trip;
use crate::error::{Error, Result};
use crate::field::{BiPoly, BigRational, Field, QuadExt};
use crate::json::{display, display_map, display_opt};
use crate::perm::Perm3;
use crate::projective::{cross_ratio, harmonic_values, incident, is_harmonic_value};
use crate::scene::{symbolic_scene, PappusScene, PointLabel};

/// `poly(a, b) = 0` exactly when `S` lies on `L_C,σ`.
#[derive(Debug, Clone, PartialEq)]
pub struct GlueCondition {
    pub sigma: Perm3,
    pub poly: BiPoly,
}

/// Substitute `S` into each symbolic Pappus line; keep the primitive part of
/// the numerator.
pub fn glue_conditions() -> &'static [GlueCondition] {
    static GLUE: OnceLock<Vec<GlueCondition>> = OnceLock::new();
    GLUE.get_or_init(|| {
        let scene = symbolic_scene();
        Perm3::ALL
            .iter()
            .map(|s| {
                let v = scene.pappus_line(*s).dot(scene.s()).expect("symbolic dot product");
                GlueCondition {
                    sigma: *s,
                    poly: v.num().primitive(),
                }
            })
            .collect()
    })
}

pub fn glue_condition(sigma: Perm3) -> &'static BiPoly {
    &glue_conditions()
        .iter()
        .find(|g| g.sigma == sigma)
        .expect("six conditions")
        .poly
}

/// The σ whose glue polynomial vanishes at `(a, b)`, in `Perm3::ALL` order.
pub fn vanishing_glue<F: Field>(a: &F, b: &F) -> Result<Vec<Perm3>> {
    let mut out = Vec::new();
    for g in glue_conditions() {
        if g.poly.eval_in(a, b)?.is_zero() {
            out.push(g.sigma);
        }
    }
    Ok(out)
}

fn degenerate_cross_ratio(e: Error) -> Error {
    match e {
        Error::CoincidentInputs(m) => Error::DegenerateParameters(format!("cross-ratio inputs coincide: {m}")),
        other => other,
    }
}

/// `[A1, A2, A3, S]`.
pub fn a_cross_ratio<F: Field>(scene: &PappusScene<F>) -> Result<F> {
    let a = scene.a_points();
    Ok(cross_ratio(&a[0], &a[1], &a[2], scene.s(), None)
        .map_err(degenerate_cross_ratio)?
        .value)
}

/// `[B_σ(1), B_σ(2), B_σ(3), S]`.
pub fn b_cross_ratio<F: Field>(scene: &PappusScene<F>, sigma: Perm3) -> Result<F> {
    let b = |k: usize| scene.b_point(sigma.apply(k));
    Ok(cross_ratio(b(1), b(2), b(3), scene.s(), None)
        .map_err(degenerate_cross_ratio)?
        .value)
}

pub fn cross_ratio_table<F: Field>(scene: &PappusScene<F>) -> Result<BTreeMap<Perm3, F>> {
    Perm3::ALL.iter().map(|s| Ok((*s, b_cross_ratio(scene, *s)?))).collect()
}

/// Whether `S ∈ L_C,σ`, after checking that this agrees with
/// `[A1, A2, A3, S] = [B_σ(1), B_σ(2), B_σ(3), S]`.
pub fn s_incidence_theorem_check<F: Field>(scene: &PappusScene<F>, sigma: Perm3) -> Result<bool> {
    let on_line = incident(scene.s(), scene.pappus_line(sigma))?;
    let equal = a_cross_ratio(scene)?.try_eq(&b_cross_ratio(scene, sigma)?)?;
    if on_line != equal {
        return Err(Error::TheoremViolation(format!(
            "S on L_C,{sigma} is {on_line} but the cross-ratio equality is {equal}"
        )));
    }
    Ok(on_line)
}

/// `[C_1σ, C_2σ, C_3σ, S]`, defined when `S ∈ L_C,σ`.
pub fn c_line_cross_ratio<F: Field>(scene: &PappusScene<F>, sigma: Perm3) -> Result<F> {
    if !incident(scene.s(), scene.pappus_line(sigma))? {
        return Err(Error::SNotOnLine(sigma));
    }
    let c = scene.c_points(sigma);
    Ok(cross_ratio(&c[0], &c[1], &c[2], scene.s(), None)
        .map_err(degenerate_cross_ratio)?
        .value)
}

/// Pairs of Pappus lines through `S` for `a, b ∈ {-1, 1/2, 2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairTable {
    /// Row and column values, in the order `-1, 1/2, 2`.
    pub values: [BigRational; 3],
    /// `cells[row][col]` holds the σ for `b = values[row]`, `a = values[col]`.
    pub cells: [[Vec<Perm3>; 3]; 3],
}

impl PairTable {
    pub fn cell(&self, a: &BigRational, b: &BigRational) -> Option<&[Perm3]> {
        let col = self.values.iter().position(|v| v == a)?;
        let row = self.values.iter().position(|v| v == b)?;
        Some(&self.cells[row][col])
    }
}

pub fn s_pairs_table() -> Result<PairTable> {
    let values = harmonic_values();
    let mut cells: [[Vec<Perm3>; 3]; 3] = Default::default();
    for (row, b) in values.iter().enumerate() {
        for (col, a) in values.iter().enumerate() {
            cells[row][col] = vanishing_glue(a, b)?;
        }
    }
    Ok(PairTable { values, cells })
}

fn same_set(xs: &[Perm3], ys: &[Perm3]) -> bool {
    xs.len() == ys.len() && xs.iter().all(|x| ys.contains(x))
}

/// Moving right multiplies both σ by `τ3²`; moving down multiplies one of
/// them by `τ3²` and the other by `τ3`.
pub fn pairs_table_regularity_check(table: &PairTable) -> bool {
    regularity_failures(table).is_empty()
}

/// Cells `(row, col, direction)` where a step breaks the rule.
pub fn regularity_failures(table: &PairTable) -> Vec<(usize, usize, &'static str)> {
    let mut out = Vec::new();
    for row in 0..3 {
        for col in 0..3 {
            let here = &table.cells[row][col];
            let [s1, s2] = match here.as_slice() {
                [s1, s2] => [*s1, *s2],
                _ => {
                    out.push((row, col, "cell"));
                    continue;
                }
            };
            if col < 2 {
                let right = [s1 * Perm3::T3_SQ, s2 * Perm3::T3_SQ];
                if !same_set(&right, &table.cells[row][col + 1]) {
                    out.push((row, col, "right"));
                }
            }
            if row < 2 {
                let below = &table.cells[row + 1][col];
                let d1 = [s1 * Perm3::T3_SQ, s2 * Perm3::T3];
                let d2 = [s2 * Perm3::T3_SQ, s1 * Perm3::T3];
                if !same_set(&d1, below) && !same_set(&d2, below) {
                    out.push((row, col, "down"));
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Which parity class of Pappus lines collapses to a single line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OverlapReport {
    #[serde(serialize_with = "display")]
    pub a: QuadExt,
    #[serde(serialize_with = "display")]
    pub b: QuadExt,
    pub even_overlap: bool,
    pub odd_overlap: bool,
    pub even_distinct: bool,
    pub odd_distinct: bool,
}

impl OverlapReport {
    /// The overlapping class, when exactly one class overlaps and the other
    /// consists of three distinct lines.
    pub fn overlapping(&self) -> Option<Parity> {
        match (self.even_overlap, self.odd_overlap) {
            (true, false) if self.odd_distinct => Some(Parity::Even),
            (false, true) if self.even_distinct => Some(Parity::Odd),
            _ => None,
        }
    }
}

fn class_status<F: Field>(scene: &PappusScene<F>, class: [Perm3; 3]) -> Result<(bool, bool)> {
    let l = |i: usize| scene.pappus_line(class[i]);
    let e01 = l(0).proj_eq(l(1))?;
    let e02 = l(0).proj_eq(l(2))?;
    let e12 = l(1).proj_eq(l(2))?;
    Ok((e01 && e02, !e01 && !e02 && !e12))
}

/// Compare the Pappus lines within each parity class at `(a, b)`, where `b`
/// is a root of `x^2 - x + 1`.
pub fn overlap_check(a: QuadExt, b: QuadExt) -> Result<OverlapReport> {
    let one = QuadExt::one();
    if !b.try_mul(&b)?.try_sub(&b)?.try_add(&one)?.is_zero() {
        return Err(Error::DegenerateParameters(format!(
            "b = {b} is not a root of x^2 - x + 1"
        )));
    }
    let scene = PappusScene::canonical(a.clone(), b.clone(), false)?;
    let (even_overlap, even_distinct) = class_status(&scene, Perm3::EVEN)?;
    let (odd_overlap, odd_distinct) = class_status(&scene, Perm3::ODD)?;
    Ok(OverlapReport {
        a,
        b,
        even_overlap,
        odd_overlap,
        even_distinct,
        odd_distinct,
    })
}

fn harmonic_class(v: &BigRational) -> Option<BigRational> {
    harmonic_values().into_iter().find(|h| h == v)
}

/// The three clauses of the super Pappus criterion, evaluated independently.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuperReport {
    #[serde(serialize_with = "display")]
    pub a: BigRational,
    #[serde(serialize_with = "display")]
    pub b: BigRational,
    /// Clause i: the returned points are the initial points.
    pub is_super: bool,
    /// Clause ii: two Pappus lines pass through `S`.
    pub s_pair: bool,
    /// Clause iii: all three quadruples through `S` are harmonic.
    pub harmonic: bool,
    #[serde(serialize_with = "display_opt")]
    pub a_class: Option<BigRational>,
    #[serde(serialize_with = "display_opt")]
    pub b_class: Option<BigRational>,
    /// `A_i = M*_σ`, for the A-points that are hit.
    #[serde(serialize_with = "display_map")]
    pub a_matching: BTreeMap<PointLabel, Perm3>,
    #[serde(serialize_with = "display_map")]
    pub b_matching: BTreeMap<PointLabel, Perm3>,
    /// σ with `S ∈ L_C,σ`.
    pub s_lines: Vec<Perm3>,
    /// For `{A1,A2,A3,S}`, `{B1,B2,B3,S}` and `{C1σ,C2σ,C3σ,S}`.
    pub harmonic_verdicts: [bool; 3],
    #[serde(serialize_with = "display")]
    pub a_ratio: BigRational,
    #[serde(serialize_with = "display")]
    pub b_ratio: BigRational,
    /// `[C1σ, C2σ, C3σ, S]` for each σ in `s_lines`.
    #[serde(serialize_with = "display_map")]
    pub c_ratios: BTreeMap<Perm3, BigRational>,
}

impl SuperReport {
    pub fn clauses_agree(&self) -> bool {
        self.is_super == self.s_pair && self.s_pair == self.harmonic
    }
}

fn matching<F: Field>(
    initial: &[crate::projective::HomTriple<F>; 3],
    family: char,
    returned: &BTreeMap<Perm3, crate::projective::HomTriple<F>>,
    candidates: &[Perm3],
) -> Result<BTreeMap<PointLabel, Perm3>> {
    let mut out = BTreeMap::new();
    for (i, p) in initial.iter().enumerate() {
        for s in candidates {
            if returned[s].proj_eq(p)? {
                out.insert(PointLabel::from_parts(family, i + 1).expect("index in 1..=3"), *s);
                break;
            }
        }
    }
    Ok(out)
}

/// Evaluate the three clauses at a rational parameter pair.
pub fn super_report(a0: BigRational, b0: BigRational) -> Result<SuperReport> {
    let scene = PappusScene::canonical(a0.clone(), b0.clone(), true)?;
    let rt = round_trip(&scene)?;
    let a_matching = matching(scene.a_points(), 'A', &rt.returned_points, &rt.landing.on_la)?;
    let b_matching = matching(scene.b_points(), 'B', &rt.returned_points, &rt.landing.on_lb)?;
    let is_super = a_matching.len() == 3 && b_matching.len() == 3;

    let mut s_lines = Vec::new();
    for s in Perm3::ALL {
        if s_incidence_theorem_check(&scene, s)? {
            s_lines.push(s);
        }
    }
    let s_pair = s_lines.len() == 2;

    let a_ratio = a_cross_ratio(&scene)?;
    let b_ratio = b_cross_ratio(&scene, Perm3::ID)?;
    let mut c_ratios = BTreeMap::new();
    for s in &s_lines {
        c_ratios.insert(*s, c_line_cross_ratio(&scene, *s)?);
    }
    let mut c_harmonic = !c_ratios.is_empty();
    for v in c_ratios.values() {
        c_harmonic &= is_harmonic_value(v)?;
    }
    let harmonic_verdicts = [is_harmonic_value(&a_ratio)?, is_harmonic_value(&b_ratio)?, c_harmonic];

    Ok(SuperReport {
        a_class: harmonic_class(&a0),
        b_class: harmonic_class(&b0),
        a: a0,
        b: b0,
        is_super,
        s_pair,
        harmonic: harmonic_verdicts.iter().all(|x| *x),
        a_matching,
        b_matching,
        s_lines,
        harmonic_verdicts,
        a_ratio,
        b_ratio,
        c_ratios,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, parse_ratfunc, rat};

    fn q(a: BigRational, b: BigRational) -> PappusScene<BigRational> {
        PappusScene::canonical(a, b, false).unwrap()
    }

    #[test]
    fn glue_for_identity_and_t3() {
        let id = glue_condition(Perm3::ID);
        assert_eq!(id.to_string(), "a*b - 1");
        assert_eq!(glue_condition(Perm3::T3).to_string(), "a + b - 1");
    }

    #[test]
    fn glue_matches_direct_incidence() {
        for (a, b) in [
            (rat(1, 2), int(2)),
            (int(3), int(-2)),
            (int(3), int(5)),
            (int(-1), int(-1)),
        ] {
            let scene = q(a.clone(), b.clone());
            let on: Vec<_> = Perm3::ALL
                .into_iter()
                .filter(|s| incident(scene.s(), scene.pappus_line(*s)).unwrap())
                .collect();
            assert_eq!(on, vanishing_glue(&a, &b).unwrap());
        }
    }

    #[test]
    fn cross_ratios() {
        let sym = symbolic_scene();
        let one_minus_a = parse_ratfunc("1 - a").unwrap();
        assert!(a_cross_ratio(sym).unwrap().try_eq(&one_minus_a).unwrap());
        let table = cross_ratio_table(sym).unwrap();
        let expect = |s: &str| parse_ratfunc(s).unwrap();
        assert!(table[&Perm3::ID].try_eq(&expect("(b - 1)/b")).unwrap());
        assert!(table[&Perm3::T3].try_eq(&expect("b")).unwrap());
        assert!(table[&Perm3::T3_SQ].try_eq(&expect("1/(1 - b)")).unwrap());
    }

    #[test]
    fn s_incidence_examples() {
        assert!(s_incidence_theorem_check(&q(rat(1, 2), int(2)), Perm3::ID).unwrap());
        assert!(!s_incidence_theorem_check(&q(int(3), int(5)), Perm3::ID).unwrap());
        assert!(s_incidence_theorem_check(&q(int(3), int(-2)), Perm3::T3).unwrap());
    }

    #[test]
    fn lemma_values() {
        assert_eq!(c_line_cross_ratio(&q(int(3), int(-2)), Perm3::T3).unwrap(), int(-2));
        assert_eq!(c_line_cross_ratio(&q(rat(1, 2), int(2)), Perm3::ID).unwrap(), rat(1, 2));
        assert_eq!(
            c_line_cross_ratio(&q(int(3), int(5)), Perm3::ID).unwrap_err(),
            Error::SNotOnLine(Perm3::ID)
        );
    }

    #[test]
    fn pair_table_is_regular() {
        let t = s_pairs_table().unwrap();
        assert!(t.cells.iter().flatten().all(|c| c.len() == 2));
        assert_eq!(t.cell(&int(-1), &int(-1)).unwrap(), &[Perm3::ID, Perm3::T2T3]);
        assert!(pairs_table_regularity_check(&t));
        let mut broken = t.clone();
        broken.cells[0][2] = vec![Perm3::T3, Perm3::T2T3];
        assert!(!pairs_table_regularity_check(&broken));
    }

    #[test]
    fn overlap_needs_the_matching_a() {
        let w = QuadExt::omega();
        let r = overlap_check(w.clone(), w.clone()).unwrap();
        assert_eq!(r.overlapping(), Some(Parity::Even));
        let r = overlap_check(QuadExt::omega_conjugate(), w.clone()).unwrap();
        assert_eq!(r.overlapping(), Some(Parity::Odd));
        let r = overlap_check(QuadExt::from_rational(int(3)), w).unwrap();
        assert_eq!(r.overlapping(), None);
        assert!(r.even_distinct && r.odd_distinct);
        assert!(overlap_check(QuadExt::from_rational(int(3)), QuadExt::from_rational(int(5))).is_err());
    }

    #[test]
    fn super_examples() {
        let r = super_report(int(2), int(2)).unwrap();
        assert!(r.is_super && r.s_pair && r.harmonic);
        assert_eq!(r.a_matching[&PointLabel::A1], Perm3::T2);
        assert_eq!(r.b_matching[&PointLabel::B1], Perm3::T3_SQ);
        let r = super_report(int(3), int(5)).unwrap();
        assert!(!r.is_super && !r.s_pair && !r.harmonic);
        let r = super_report(int(-1), rat(1, 2)).unwrap();
        assert!(r.is_super && r.clauses_agree());
        assert_eq!(r.a_matching[&PointLabel::A1], Perm3::T2T3_SQ);
    }
}
