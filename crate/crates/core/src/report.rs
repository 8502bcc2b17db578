//! Scene files, verification reports and the command implementations behind
//! the `pappus` binary.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::analysis::{a_cross_ratio, c_line_cross_ratio, s_incidence_theorem_check, super_report, vanishing_glue};
use crate::dual::{round_trip, single_parameter_check, DualRoundTrip};
use crate::error::{Error, Result};
use crate::field::{int, BigRational, Field, FieldTag, QuadExt, RatFunc, Scalar};
use crate::lattice::{build_lattice, check_counting_identity, dual_incidence_matrix, incidence_matrix, rule_matrix};
use crate::perm::Perm3;
use crate::projective::{det3, HomTriple, Role};
use crate::render::{render_svg, RenderOptions, Rendered};
use crate::sampling::Sampler;
use crate::scene::{PappusScene, PointLabel};

/// Optional drawing settings stored with a scene.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RenderSettings {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub size: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub carrier_width: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub join_width: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pappus_width: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point_radius: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chart: Option<[i64; 3]>,
}

impl RenderSettings {
    pub fn apply(&self, opts: &mut RenderOptions) {
        let d = opts.clone();
        opts.size = self.size.unwrap_or(d.size);
        opts.carrier_width = self.carrier_width.unwrap_or(d.carrier_width);
        opts.join_width = self.join_width.unwrap_or(d.join_width);
        opts.pappus_width = self.pappus_width.unwrap_or(d.pappus_width);
        opts.point_radius = self.point_radius.unwrap_or(d.point_radius);
        opts.labels = self.labels.unwrap_or(d.labels);
        if self.chart.is_some() {
            opts.chart = self.chart;
        }
    }
}

/// A scene on disk.
///
/// Canonical scenes give `a` and `b`; explicit initial data gives `points`
/// with keys `A1..A3`, `B1..B3` and coordinate strings in the scene's field.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneFile {
    pub field: FieldTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<BTreeMap<PointLabel, [String; 3]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub render: Option<RenderSettings>,
}

impl SceneFile {
    pub fn canonical(field: FieldTag, a: &str, b: &str) -> Self {
        SceneFile {
            field,
            a: Some(a.into()),
            b: Some(b.into()),
            points: None,
            render: None,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("scene file: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scene files serialize")
    }
}

/// A scene in one of the three fields.
#[derive(Debug, Clone)]
pub enum AnyScene {
    Rational(PappusScene<BigRational>),
    Symbolic(PappusScene<RatFunc>),
    Quad(PappusScene<QuadExt>),
}

macro_rules! with_scene {
    ($scene:expr, $s:ident => $body:expr) => {
        match $scene {
            AnyScene::Rational($s) => $body,
            AnyScene::Symbolic($s) => $body,
            AnyScene::Quad($s) => $body,
        }
    };
}

fn parse_in<F: Field + TryFrom<Scalar>>(tag: FieldTag, text: &str) -> Result<F> {
    let s = Scalar::parse(tag, text)?;
    F::try_from(s).map_err(|_| Error::Parse(format!("`{text}` is not in the {tag} field")))
}

fn build<F: Field + TryFrom<Scalar>>(file: &SceneFile, strict: bool) -> Result<PappusScene<F>> {
    let tag = file.field;
    if let Some(points) = &file.points {
        let pick = |family: char| -> Result<[HomTriple<F>; 3]> {
            let mut out = Vec::with_capacity(3);
            for i in 1..=3 {
                let label = PointLabel::from_parts(family, i).expect("index in 1..=3");
                let c = points
                    .get(&label)
                    .ok_or_else(|| Error::Parse(format!("scene file: missing point {label}")))?;
                let coords = [parse_in(tag, &c[0])?, parse_in(tag, &c[1])?, parse_in(tag, &c[2])?];
                out.push(HomTriple::new(coords, Role::Point)?);
            }
            Ok(out.try_into().expect("three points"))
        };
        return PappusScene::from_points(pick('A')?, pick('B')?);
    }
    let default = |v: &Option<String>, name: &str| -> Result<String> {
        match (v, tag) {
            (Some(v), _) => Ok(v.clone()),
            (None, FieldTag::Symbolic) => Ok(name.to_string()),
            (None, _) => Err(Error::Parse(format!("missing value for `{name}`"))),
        }
    };
    let a = parse_in(tag, &default(&file.a, "a")?)?;
    let b = parse_in(tag, &default(&file.b, "b")?)?;
    PappusScene::canonical(a, b, strict)
}

impl AnyScene {
    pub fn from_file(file: &SceneFile, strict: bool) -> Result<Self> {
        Ok(match file.field {
            FieldTag::Rational => AnyScene::Rational(build(file, strict)?),
            FieldTag::Symbolic => AnyScene::Symbolic(build(file, strict)?),
            FieldTag::Quadext => AnyScene::Quad(build(file, strict)?),
        })
    }

    pub fn tag(&self) -> FieldTag {
        match self {
            AnyScene::Rational(_) => FieldTag::Rational,
            AnyScene::Symbolic(_) => FieldTag::Symbolic,
            AnyScene::Quad(_) => FieldTag::Quadext,
        }
    }

    fn params_text(&self) -> Option<(String, String)> {
        with_scene!(self, s => s.params().map(|(a, b)| (a.to_string(), b.to_string())))
    }
}

impl TryFrom<Scalar> for BigRational {
    type Error = Scalar;

    fn try_from(s: Scalar) -> std::result::Result<Self, Scalar> {
        match s {
            Scalar::Rational(q) => Ok(q),
            other => Err(other),
        }
    }
}

impl TryFrom<Scalar> for RatFunc {
    type Error = Scalar;

    fn try_from(s: Scalar) -> std::result::Result<Self, Scalar> {
        match s {
            Scalar::RatFunc(f) => Ok(f),
            Scalar::Rational(q) => Ok(RatFunc::from_rational(q)),
            other => Err(other),
        }
    }
}

impl TryFrom<Scalar> for QuadExt {
    type Error = Scalar;

    fn try_from(s: Scalar) -> std::result::Result<Self, Scalar> {
        match s {
            Scalar::Quad(w) => Ok(w),
            Scalar::Rational(q) => Ok(QuadExt::from_rational(q)),
            other => Err(other),
        }
    }
}

/// Verdicts for one theorem.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremVerdict {
    pub name: String,
    pub pass: bool,
    pub clauses: BTreeMap<String, bool>,
    pub witnesses: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl TheoremVerdict {
    fn new(name: &str) -> Self {
        TheoremVerdict {
            name: name.into(),
            pass: true,
            clauses: BTreeMap::new(),
            witnesses: BTreeMap::new(),
            elapsed_ms: None,
        }
    }

    fn clause(&mut self, name: impl Into<String>, ok: bool) {
        self.pass &= ok;
        self.clauses.insert(name.into(), ok);
    }

    fn witness(&mut self, name: impl Into<String>, value: impl Into<String>) {
        self.witnesses.insert(name.into(), value.into());
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerdictReport {
    pub field: FieldTag,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<String>,
    pub theorems: Vec<TheoremVerdict>,
    pub pass: bool,
}

impl VerdictReport {
    fn new(scene: &AnyScene) -> Self {
        let params = scene.params_text();
        VerdictReport {
            field: scene.tag(),
            a: params.as_ref().map(|p| p.0.clone()),
            b: params.map(|p| p.1),
            theorems: Vec::new(),
            pass: true,
        }
    }

    fn push(&mut self, v: TheoremVerdict) {
        self.pass &= v.pass;
        self.theorems.push(v);
    }

    pub fn to_json(&self) -> String {
        crate::json::to_sorted_pretty(self).expect("reports serialize")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Theorem {
    Pappus,
    Roundtrip,
    Lattice,
    Incidence,
    SIncidence,
    Super,
}

impl Theorem {
    pub const ALL: [Theorem; 6] = [
        Theorem::Pappus,
        Theorem::Roundtrip,
        Theorem::Lattice,
        Theorem::Incidence,
        Theorem::SIncidence,
        Theorem::Super,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Pappus => "pappus",
            Theorem::Roundtrip => "roundtrip",
            Theorem::Lattice => "lattice",
            Theorem::Incidence => "incidence",
            Theorem::SIncidence => "s-incidence",
            Theorem::Super => "super",
        }
    }

    /// Whether the suite makes sense for `scene`.
    pub fn applies_to(self, scene: &AnyScene) -> bool {
        let has_params = scene.params_text().is_some();
        match self {
            Theorem::Lattice => !matches!(scene, AnyScene::Symbolic(_)),
            Theorem::SIncidence => has_params && !matches!(scene, AnyScene::Symbolic(_)),
            Theorem::Super => has_params && matches!(scene, AnyScene::Rational(_)),
            _ => true,
        }
    }
}

pub fn pappus_suite<F: Field>(scene: &PappusScene<F>) -> Result<TheoremVerdict> {
    let mut v = TheoremVerdict::new("pappus");
    for s in Perm3::ALL {
        let c = scene.c_points(s);
        v.clause(
            format!("C-points collinear [{s}]"),
            det3(&c[0], &c[1], &c[2])?.is_zero(),
        );
        v.witness(format!("L_C,{s}"), scene.pappus_line(s).equation());
    }
    v.clause("scene invariants", scene.check_invariants()?);
    Ok(v)
}

fn describe_round_trip<F: Field>(v: &mut TheoremVerdict, rt: &DualRoundTrip<F>) -> Result<()> {
    let mut distinct = true;
    let lines: Vec<_> = rt.second_stage_lines.values().collect();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            distinct &= !lines[i].proj_eq(lines[j])?;
        }
    }
    v.clause("six distinct second-stage lines", lines.len() == 6 && distinct);
    v.clause("three returned points on L_A", rt.landing.on_la.len() == 3);
    v.clause("three returned points on L_B", rt.landing.on_lb.len() == 3);
    let mut split = true;
    for s in Perm3::ALL {
        let p = &rt.dual_points[&s];
        let on = if s.is_even() { &rt.m1 } else { &rt.m2 };
        split &= crate::projective::incident(p, on)?;
    }
    v.clause("even dual points on M1, odd on M2", split);
    v.witness("M1", rt.m1.equation());
    v.witness("M2", rt.m2.equation());
    for (s, p) in &rt.returned_points {
        v.witness(format!("M*_{s}"), p.display_canonical());
    }
    Ok(())
}

pub fn roundtrip_suite<F: Field>(scene: &PappusScene<F>) -> Result<(TheoremVerdict, Option<DualRoundTrip<F>>)> {
    let mut v = TheoremVerdict::new("roundtrip");
    match round_trip(scene) {
        Ok(rt) => {
            describe_round_trip(&mut v, &rt)?;
            Ok((v, Some(rt)))
        }
        Err(e @ (Error::LandingFailure(_) | Error::TripleNotCollinear(_))) => {
            v.clause("round trip completes", false);
            v.witness("error", e.to_string());
            Ok((v, None))
        }
        Err(e) => Err(e),
    }
}

fn lattice_clauses<F: Field>(
    v: &mut TheoremVerdict,
    prefix: &str,
    lines: &[HomTriple<F>],
    expected: Option<(usize, usize)>,
) {
    match build_lattice(lines) {
        Ok(lat) => {
            if let Some((t2, t3)) = expected {
                v.clause(
                    format!("{prefix}: (t2, t3) = ({t2}, {t3})"),
                    lat.t_k(2) == t2 && lat.t_k(3) == t3 && lat.t.len() == 2,
                );
            }
            v.clause(format!("{prefix}: counting identity"), check_counting_identity(&lat));
            let t: Vec<String> = lat.t.iter().map(|(k, n)| format!("t{k} = {n}")).collect();
            v.witness(format!("{prefix}: t-vector"), t.join(", "));
            v.witness(format!("{prefix}: points"), lat.points.len().to_string());
        }
        Err(e) => {
            v.clause(format!("{prefix}: lattice builds"), false);
            v.witness(format!("{prefix}: error"), e.to_string());
        }
    }
}

/// Generic counts when `S` is on no Pappus line. Each Pappus line through
/// `S` makes three joins concurrent, turning three double points of the
/// joins into one triple point.
pub fn lattice_suite<F: Field>(scene: &PappusScene<F>) -> Result<TheoremVerdict> {
    let mut v = TheoremVerdict::new("lattice");
    let mut k = 0;
    for l in scene.pappus_lines().values() {
        k += usize::from(crate::projective::incident(scene.s(), l)?);
    }
    v.witness("Pappus lines through S", k.to_string());
    let joins = (k <= 6).then(|| (18 - 3 * k, 6 + k));
    lattice_clauses(&mut v, "joins", &scene.joins(), joins);
    let configuration = (k == 0).then_some((9, 9));
    lattice_clauses(
        &mut v,
        "configuration",
        &scene.configuration_lines(Perm3::ID),
        configuration,
    );
    Ok(v)
}

pub fn incidence_suite<F: Field>(scene: &PappusScene<F>) -> Result<TheoremVerdict> {
    let mut v = TheoremVerdict::new("incidence");
    let m = incidence_matrix(scene)?;
    v.clause("(9_3) arrangement", m.is_nk_configuration(3));
    v.clause("transpose is (9_3)", m.transpose().is_nk_configuration(3));
    v.clause("matches the labeling rule", m == rule_matrix());
    v.clause(
        "dual arrangement matrix is the transpose",
        dual_incidence_matrix(scene)?.cells == m.transpose().cells,
    );
    v.witness("matrix", m.to_csv());
    Ok(v)
}

pub fn s_incidence_suite<F: Field>(scene: &PappusScene<F>) -> Result<TheoremVerdict> {
    let mut v = TheoremVerdict::new("s-incidence");
    let (a, b) = scene
        .params()
        .ok_or(Error::Parse("s-incidence needs a canonical scene".into()))?;
    let mut s_lines = Vec::new();
    for s in Perm3::ALL {
        match s_incidence_theorem_check(scene, s) {
            Ok(on) => {
                v.clause(format!("S on L_C,{s} iff cross-ratios agree"), true);
                if on {
                    s_lines.push(s);
                }
            }
            Err(e @ Error::TheoremViolation(_)) => {
                v.clause(format!("S on L_C,{s} iff cross-ratios agree"), false);
                v.witness(format!("violation [{s}]"), e.to_string());
            }
            Err(e) => return Err(e),
        }
    }
    v.clause("glue conditions name the same lines", vanishing_glue(a, b)? == s_lines);
    v.clause("at most two Pappus lines through S", s_lines.len() <= 2);
    let one_minus_a = F::one().try_sub(a)?;
    for s in &s_lines {
        let c = c_line_cross_ratio(scene, *s)?;
        v.clause(format!("[C1,C2,C3,S] = 1 - a [{s}]"), c.try_eq(&one_minus_a)?);
    }
    v.witness("[A1,A2,A3,S]", a_cross_ratio(scene)?.to_string());
    let names: Vec<&str> = s_lines.iter().map(|s| s.name()).collect();
    v.witness("lines through S", names.join(" "));
    Ok(v)
}

pub fn super_suite(a: &BigRational, b: &BigRational) -> Result<TheoremVerdict> {
    let mut v = TheoremVerdict::new("super");
    let r = super_report(a.clone(), b.clone())?;
    v.clause("clauses i, ii, iii agree", r.clauses_agree());
    v.witness("i: super", r.is_super.to_string());
    v.witness("ii: pair of lines through S", r.s_pair.to_string());
    v.witness("iii: harmonic", r.harmonic.to_string());
    let fmt_map =
        |m: &BTreeMap<PointLabel, Perm3>| m.iter().map(|(k, s)| format!("{k}={s}")).collect::<Vec<_>>().join(" ");
    v.witness("A matching", fmt_map(&r.a_matching));
    v.witness("B matching", fmt_map(&r.b_matching));
    Ok(v)
}

fn timed<T>(timing: bool, f: impl FnOnce() -> Result<T>) -> Result<(T, Option<f64>)> {
    let start = Instant::now();
    let out = f()?;
    Ok((out, timing.then(|| start.elapsed().as_secs_f64() * 1000.0)))
}

fn run_suite<F: Field>(
    scene: &PappusScene<F>,
    theorem: Theorem,
    symbolic: Option<&PappusScene<RatFunc>>,
) -> Result<TheoremVerdict> {
    match theorem {
        Theorem::Pappus => pappus_suite(scene),
        Theorem::Roundtrip => {
            let (mut v, rt) = roundtrip_suite(scene)?;
            if let (Some(sym), Some(_)) = (symbolic, rt) {
                let rt = round_trip(sym)?;
                v.clause(
                    "returned points depend on one parameter",
                    single_parameter_check(&rt.returned_points, &rt.landing)?,
                );
            }
            Ok(v)
        }
        Theorem::Lattice => lattice_suite(scene),
        Theorem::Incidence => incidence_suite(scene),
        Theorem::SIncidence => s_incidence_suite(scene),
        Theorem::Super => unreachable!("handled by the caller"),
    }
}

/// Run the selected suites; `None` runs every suite that applies.
pub fn cmd_verify(scene: &AnyScene, which: Option<Theorem>, timing: bool) -> Result<VerdictReport> {
    let mut report = VerdictReport::new(scene);
    let selected: Vec<Theorem> = match which {
        Some(t) => {
            if !t.applies_to(scene) {
                return Err(Error::Parse(format!(
                    "theorem `{}` does not apply to a {} scene",
                    t.name(),
                    scene.tag()
                )));
            }
            vec![t]
        }
        None => Theorem::ALL.into_iter().filter(|t| t.applies_to(scene)).collect(),
    };
    for t in selected {
        let (mut v, ms) = timed(timing, || match (t, scene) {
            (Theorem::Super, AnyScene::Rational(s)) => {
                let (a, b) = s.params().expect("applies_to checked the parameters");
                super_suite(a, b)
            }
            (_, AnyScene::Symbolic(s)) => run_suite(s, t, Some(s)),
            (_, AnyScene::Rational(s)) => run_suite(s, t, None),
            (_, AnyScene::Quad(s)) => run_suite(s, t, None),
        })?;
        v.elapsed_ms = ms;
        report.push(v);
    }
    Ok(report)
}

/// Property checks on seeded random parameter pairs.
pub fn sampled_suite(seed: u64, samples: usize) -> Result<TheoremVerdict> {
    let mut v = TheoremVerdict::new("random samples");
    v.witness("seed", seed.to_string());
    v.witness("samples", samples.to_string());
    let mut sampler = Sampler::new(seed);
    let mut pappus = true;
    let mut landing = true;
    let mut agree = true;
    let mut first_failure: Option<String> = None;
    for (a, b) in sampler.generic_pairs(samples) {
        let scene = PappusScene::canonical(a.clone(), b.clone(), true)?;
        let ok_p = scene.pappus_holds()?;
        let ok_l = match round_trip(&scene) {
            Ok(rt) => rt.landing.on_la.len() == 3 && rt.landing.on_lb.len() == 3,
            Err(_) => false,
        };
        let ok_s = super_report(a.clone(), b.clone())?.clauses_agree();
        if !(ok_p && ok_l && ok_s) && first_failure.is_none() {
            first_failure = Some(format!("a = {a}, b = {b}"));
        }
        pappus &= ok_p;
        landing &= ok_l;
        agree &= ok_s;
    }
    let mut glue = true;
    for s in Perm3::ALL {
        let (a, b) = sampler.glue_pair(s);
        let scene = PappusScene::canonical(a.clone(), b.clone(), false)?;
        let ok = s_incidence_theorem_check(&scene, s).unwrap_or(false) && c_line_cross_ratio(&scene, s)? == int(1) - &a;
        if !ok && first_failure.is_none() {
            first_failure = Some(format!("a = {a}, b = {b}, sigma = {s}"));
        }
        glue &= ok;
    }
    v.clause("Pappus holds at every sample", pappus);
    v.clause("landing 3 + 3 at every sample", landing);
    v.clause("super clauses agree at every sample", agree);
    v.clause("S on L_C,s and 1 - a on the glue locus", glue);
    if let Some(f) = first_failure {
        v.witness("first failure", f);
    }
    Ok(v)
}

/// All applicable suites plus seeded sampling.
pub fn cmd_report(scene: &AnyScene, seed: u64, samples: usize, timing: bool) -> Result<VerdictReport> {
    let mut report = cmd_verify(scene, None, timing)?;
    let (mut v, ms) = timed(timing, || sampled_suite(seed, samples))?;
    v.elapsed_ms = ms;
    report.push(v);
    Ok(report)
}

pub fn cmd_render(scene: &AnyScene, opts: &RenderOptions) -> Result<Rendered> {
    match scene {
        AnyScene::Rational(s) => render_svg(s, opts),
        other => Err(Error::Parse(format!(
            "render needs a rational scene, got {}",
            other.tag()
        ))),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DualReport {
    pub field: FieldTag,
    pub dual_points: BTreeMap<String, String>,
    pub m1: String,
    pub m2: String,
    pub second_stage_lines: BTreeMap<String, String>,
    pub returned_points: BTreeMap<String, String>,
    pub on_la: Vec<Perm3>,
    pub on_lb: Vec<Perm3>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub single_parameter: Option<bool>,
}

impl DualReport {
    pub fn to_json(&self) -> String {
        crate::json::to_sorted_pretty(self).expect("reports serialize")
    }
}

fn dual_report<F: Field>(tag: FieldTag, rt: &DualRoundTrip<F>) -> DualReport {
    let pts =
        |m: &BTreeMap<Perm3, HomTriple<F>>| m.iter().map(|(s, p)| (s.to_string(), p.display_canonical())).collect();
    DualReport {
        field: tag,
        dual_points: pts(&rt.dual_points),
        m1: rt.m1.equation(),
        m2: rt.m2.equation(),
        second_stage_lines: rt
            .second_stage_lines
            .iter()
            .map(|(s, l)| (s.to_string(), l.equation()))
            .collect(),
        returned_points: pts(&rt.returned_points),
        on_la: rt.landing.on_la.clone(),
        on_lb: rt.landing.on_lb.clone(),
        single_parameter: None,
    }
}

pub fn cmd_dual(scene: &AnyScene) -> Result<DualReport> {
    Ok(match scene {
        AnyScene::Rational(s) => dual_report(FieldTag::Rational, &round_trip(s)?),
        AnyScene::Quad(s) => dual_report(FieldTag::Quadext, &round_trip(s)?),
        AnyScene::Symbolic(s) => {
            let rt = round_trip(s)?;
            let mut r = dual_report(FieldTag::Symbolic, &rt);
            r.single_parameter = Some(single_parameter_check(&rt.returned_points, &rt.landing)?);
            r
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeChoice {
    Joins,
    Configuration,
}

/// Lattice JSON, or the incidence matrix as CSV when `csv` is set.
pub fn cmd_lattice(scene: &AnyScene, which: LatticeChoice, sigma: Perm3, csv: bool) -> Result<String> {
    fn go<F: Field>(s: &PappusScene<F>, which: LatticeChoice, sigma: Perm3, csv: bool) -> Result<String> {
        if csv {
            return Ok(crate::lattice::incidence_matrix_for(s, sigma)?.to_csv());
        }
        let lines = match which {
            LatticeChoice::Joins => s.joins(),
            LatticeChoice::Configuration => s.configuration_lines(sigma),
        };
        let lat = build_lattice(&lines)?;
        Ok(crate::json::to_sorted_pretty(&lat.report()).expect("reports serialize"))
    }
    with_scene!(scene, s => go(s, which, sigma, csv))
}

/// Parameter values for a scan.
#[derive(Debug, Clone, PartialEq)]
pub enum Grid {
    /// The same values on both axes.
    Values(Vec<BigRational>),
    /// `count` random pairs from a seeded sampler.
    Random { count: usize, seed: u64 },
}

impl Grid {
    pub fn pairs(&self) -> Vec<(BigRational, BigRational)> {
        match self {
            Grid::Values(vs) => vs
                .iter()
                .flat_map(|b| vs.iter().map(move |a| (a.clone(), b.clone())))
                .collect(),
            Grid::Random { count, seed } => {
                let mut s = Sampler::new(*seed);
                (0..*count).map(|_| (s.rational(), s.rational())).collect()
            }
        }
    }
}

/// One CSV row per pair: the σ with `S ∈ L_C,σ`, the super verdict and the
/// `t`-vector of the nine joins.
pub fn cmd_scan(grid: &Grid) -> Result<String> {
    let mut out = String::from("a,b,status,glue,is_super,t2,t3\n");
    for (a, b) in grid.pairs() {
        match scan_row(&a, &b) {
            Ok(row) => writeln!(out, "{a},{b},ok,{row}").unwrap(),
            Err(Error::DegenerateParameters(m)) => writeln!(out, "{a},{b},degenerate ({m}),,,,").unwrap(),
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

fn scan_row(a: &BigRational, b: &BigRational) -> Result<String> {
    let scene = PappusScene::canonical(a.clone(), b.clone(), true)?;
    let glue: Vec<&str> = vanishing_glue(a, b)?.iter().map(|s| s.name()).collect();
    let sup = super_report(a.clone(), b.clone())?;
    let lat = build_lattice(&scene.joins())?;
    Ok(format!(
        "{},{},{},{}",
        glue.join(" "),
        sup.is_super,
        lat.t_k(2),
        lat.t_k(3)
    ))
}
