//! SVG drawings of specialized scenes.
//!
//! Points are mapped to the plane by an affine chart `p -> (x/l(p), y/l(p))`
//! for a linear form `l` with nonzero `z` coefficient. By default `l` is the
//! first form in a fixed list that is nonzero on every drawn point, so the
//! canonical scene (which has `L_A` as the line `z = 0`) is drawn with all
//! points finite.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::field::{int, rational_to_f64, BigRational, Field};
use crate::perm::Perm3;
use crate::projective::{incident, HomTriple};
use crate::scene::PappusScene;

#[derive(Debug, Clone, PartialEq)]
pub struct RenderOptions {
    pub sigma: Perm3,
    /// Fixed chart form; `None` picks one automatically.
    pub chart: Option<[i64; 3]>,
    /// Drop points at infinity with a warning instead of failing.
    pub allow_infinite: bool,
    /// Width of the longer side in pixels.
    pub size: f64,
    pub carrier_width: f64,
    pub join_width: f64,
    pub pappus_width: f64,
    pub point_radius: f64,
    pub labels: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            sigma: Perm3::ID,
            chart: None,
            allow_infinite: false,
            size: 800.0,
            carrier_width: 2.0,
            join_width: 1.0,
            pappus_width: 2.5,
            point_radius: 4.0,
            labels: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Rendered {
    pub svg: String,
    pub warnings: Vec<String>,
    pub chart: [i64; 3],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum LineKind {
    Carrier,
    Join,
    Pappus,
}

impl LineKind {
    fn class(self) -> &'static str {
        match self {
            LineKind::Carrier => "carrier",
            LineKind::Join => "join",
            LineKind::Pappus => "pappus",
        }
    }
}

/// Forms tried by the automatic chart: `z`, then `x + k y + k^2 z`.
fn chart_candidates() -> impl Iterator<Item = [i64; 3]> {
    std::iter::once([0, 0, 1]).chain((1..=500).map(|k| [1, k, k * k]))
}

fn form_value(form: [i64; 3], p: &HomTriple<BigRational>) -> BigRational {
    let c = p.coords();
    int(form[0]) * &c[0] + int(form[1]) * &c[1] + int(form[2]) * &c[2]
}

fn choose_chart(points: &[&HomTriple<BigRational>]) -> Option<[i64; 3]> {
    chart_candidates().find(|f| points.iter().all(|p| !form_value(*f, p).is_zero()))
}

fn project(form: [i64; 3], p: &HomTriple<BigRational>) -> Option<(f64, f64)> {
    let w = form_value(form, p);
    if w.is_zero() {
        return None;
    }
    let c = p.coords();
    Some((rational_to_f64(&(&c[0] / &w)), rational_to_f64(&(&c[1] / &w))))
}

struct DrawLine {
    label: String,
    kind: LineKind,
    ends: ((f64, f64), (f64, f64)),
}

/// Segment through `pts`, extended by 10% of its length on both sides.
fn segment(pts: &[(f64, f64)]) -> Option<((f64, f64), (f64, f64))> {
    let (p0, p1) = pts
        .iter()
        .flat_map(|p| pts.iter().map(move |q| (*p, *q)))
        .max_by(|x, y| dist(x.0, x.1).total_cmp(&dist(y.0, y.1)))?;
    let d = dist(p0, p1);
    if d == 0.0 {
        return None;
    }
    let (dx, dy) = ((p1.0 - p0.0) * 0.1, (p1.1 - p0.1) * 0.1);
    Some(((p0.0 - dx, p0.1 - dy), (p1.0 + dx, p1.1 + dy)))
}

fn dist(p: (f64, f64), q: (f64, f64)) -> f64 {
    ((p.0 - q.0).powi(2) + (p.1 - q.1).powi(2)).sqrt()
}

/// Draw the configuration for `opts.sigma`.
///
/// Carrier lines are solid, joins dashed and the Pappus line highlighted.
/// When some Pappus lines pass through `S`, `S` and those lines are drawn
/// as well.
pub fn render_svg(scene: &PappusScene<BigRational>, opts: &RenderOptions) -> Result<Rendered> {
    let sigma = opts.sigma;
    let mut warnings = Vec::new();

    let names: Vec<String> = ["A1", "A2", "A3", "B1", "B2", "B3", "C1", "C2", "C3"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let points = scene.configuration_points(sigma);
    let mut s_lines = Vec::new();
    for s in Perm3::ALL {
        if incident(scene.s(), scene.pappus_line(s))? {
            s_lines.push(s);
        }
    }
    let show_s = !s_lines.is_empty();

    let chart = match opts.chart {
        Some(f) => {
            if f[2] == 0 {
                return Err(Error::Parse("chart form needs a nonzero z coefficient".into()));
            }
            f
        }
        None => {
            let mut needed: Vec<&HomTriple<BigRational>> = points.iter().collect();
            if show_s {
                needed.push(scene.s());
            }
            match choose_chart(&needed) {
                Some(f) => f,
                None => choose_chart(&points.iter().collect::<Vec<_>>()).unwrap_or([0, 0, 1]),
            }
        }
    };

    // Finite points with their labels.
    let mut drawn: Vec<(String, (f64, f64), bool)> = Vec::new();
    for (name, p) in names.iter().zip(&points) {
        match project(chart, p) {
            Some(xy) => drawn.push((name.clone(), xy, false)),
            None if opts.allow_infinite => warnings.push(format!("{name} is at infinity and was dropped")),
            None => return Err(Error::PointAtInfinity(name.clone())),
        }
    }
    if drawn.is_empty() {
        return Err(Error::AllPointsAtInfinity);
    }
    let s_xy = if show_s {
        let xy = project(chart, scene.s());
        if xy.is_none() {
            warnings.push("S is at infinity and was omitted".into());
        }
        xy
    } else {
        None
    };

    let mut specs: Vec<(String, LineKind, HomTriple<BigRational>, Vec<HomTriple<BigRational>>)> = Vec::new();
    let lines = scene.configuration_lines(sigma);
    let j = |i: usize, k: usize| format!("L(A{i},B{})", sigma.apply(k));
    let labels = [
        "L_A".to_string(),
        "L_B".to_string(),
        format!("L_C,{sigma}"),
        j(2, 3),
        j(3, 2),
        j(1, 3),
        j(3, 1),
        j(1, 2),
        j(2, 1),
    ];
    for (idx, (label, line)) in labels.iter().zip(&lines).enumerate() {
        let kind = match idx {
            0 | 1 => LineKind::Carrier,
            2 => LineKind::Pappus,
            _ => LineKind::Join,
        };
        specs.push((label.clone(), kind, line.clone(), Vec::new()));
    }
    for s in &s_lines {
        if *s != sigma {
            let extra = scene.c_points(*s).to_vec();
            specs.push((
                format!("L_C,{s}"),
                LineKind::Pappus,
                scene.pappus_line(*s).clone(),
                extra,
            ));
        }
    }

    let mut draw_lines = Vec::new();
    for (label, kind, line, extra) in specs {
        let mut on: Vec<(f64, f64)> = Vec::new();
        for (name, p) in names.iter().zip(&points) {
            if incident(p, &line)? {
                if let Some((_, xy, _)) = drawn.iter().find(|d| &d.0 == name) {
                    on.push(*xy);
                }
            }
        }
        if let Some(xy) = s_xy {
            if incident(scene.s(), &line)? {
                on.push(xy);
            }
        }
        for p in &extra {
            if let Some(xy) = project(chart, p) {
                on.push(xy);
            }
        }
        match segment(&on) {
            Some(ends) => draw_lines.push(DrawLine { label, kind, ends }),
            None => warnings.push(format!("{label} has fewer than two finite points and was skipped")),
        }
    }
    if let Some(xy) = s_xy {
        drawn.push(("S".into(), xy, true));
    }

    let svg = emit(opts, sigma, scene, &draw_lines, &drawn);
    Ok(Rendered { svg, warnings, chart })
}

fn emit(
    opts: &RenderOptions,
    sigma: Perm3,
    scene: &PappusScene<BigRational>,
    lines: &[DrawLine],
    points: &[(String, (f64, f64), bool)],
) -> String {
    let mut xs: Vec<f64> = points.iter().map(|p| p.1 .0).collect();
    let mut ys: Vec<f64> = points.iter().map(|p| p.1 .1).collect();
    for l in lines {
        xs.extend([l.ends.0 .0, l.ends.1 .0]);
        ys.extend([l.ends.0 .1, l.ends.1 .1]);
    }
    let (min_x, max_x) = min_max(&xs);
    let (min_y, max_y) = min_max(&ys);
    let span = (max_x - min_x).max(max_y - min_y).max(1e-9);
    let margin = 0.1 * span;
    let (w, h) = (max_x - min_x + 2.0 * margin, max_y - min_y + 2.0 * margin);
    let scale = opts.size / w.max(h);
    let (pw, ph) = (w * scale, h * scale);
    let tx = |x: f64| (x - min_x + margin) * scale;
    let ty = |y: f64| (max_y + margin - y) * scale;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{pw:.2}\" height=\"{ph:.2}\" viewBox=\"0 0 {pw:.2} {ph:.2}\">"
    )
    .unwrap();
    let params = match scene.params() {
        Some((a, b)) => format!("a = {a}, b = {b}, "),
        None => String::new(),
    };
    writeln!(out, "<title>Pappus configuration, {params}sigma = {sigma}</title>").unwrap();
    writeln!(out, "<rect width=\"{pw:.2}\" height=\"{ph:.2}\" fill=\"white\"/>").unwrap();
    out.push_str("<g id=\"lines\" fill=\"none\">\n");
    for l in lines {
        let (stroke, width, dash) = match l.kind {
            LineKind::Carrier => ("#000000", opts.carrier_width, ""),
            LineKind::Join => ("#555555", opts.join_width, " stroke-dasharray=\"6 4\""),
            LineKind::Pappus => ("#c0392b", opts.pappus_width, ""),
        };
        writeln!(
            out,
            "<line class=\"{}\" data-label=\"{}\" x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"{stroke}\" stroke-width=\"{width:.2}\"{dash}/>",
            l.kind.class(),
            l.label,
            tx(l.ends.0 .0),
            ty(l.ends.0 .1),
            tx(l.ends.1 .0),
            ty(l.ends.1 .1),
        )
        .unwrap();
    }
    out.push_str("</g>\n<g id=\"points\">\n");
    for (name, (x, y), is_s) in points {
        let fill = if *is_s { "#c0392b" } else { "#1f4e79" };
        let r = if *is_s {
            opts.point_radius * 1.5
        } else {
            opts.point_radius
        };
        writeln!(
            out,
            "<circle class=\"{}\" data-label=\"{name}\" cx=\"{:.2}\" cy=\"{:.2}\" r=\"{r:.2}\" fill=\"{fill}\"/>",
            if *is_s { "s-marker" } else { "point" },
            tx(*x),
            ty(*y),
        )
        .unwrap();
        if opts.labels {
            writeln!(
                out,
                "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"14\">{name}</text>",
                tx(*x) + 6.0,
                ty(*y) - 6.0,
            )
            .unwrap();
        }
    }
    out.push_str("</g>\n</svg>\n");
    out
}

fn min_max(v: &[f64]) -> (f64, f64) {
    v.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| {
        (lo.min(*x), hi.max(*x))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scene(a: i64, b: i64) -> PappusScene<BigRational> {
        PappusScene::canonical(int(a), int(b), false).unwrap()
    }

    fn count(svg: &str, tag: &str) -> usize {
        svg.matches(tag).count()
    }

    #[test]
    fn generic_scene_counts() {
        let r = render_svg(&scene(3, 5), &RenderOptions::default()).unwrap();
        assert_eq!(count(&r.svg, "<line "), 9);
        assert_eq!(count(&r.svg, "<circle "), 9);
        assert_eq!(count(&r.svg, "class=\"s-marker\""), 0);
        assert!(r.warnings.is_empty());
        assert_ne!(r.chart, [0, 0, 1]);
    }

    #[test]
    fn deterministic() {
        let a = render_svg(&scene(3, 5), &RenderOptions::default()).unwrap();
        let b = render_svg(&scene(3, 5), &RenderOptions::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn two_pappus_lines_through_s() {
        let r = render_svg(&scene(-1, -1), &RenderOptions::default()).unwrap();
        assert_eq!(count(&r.svg, "class=\"pappus\""), 2);
        assert_eq!(count(&r.svg, "class=\"s-marker\""), 1);
    }

    #[test]
    fn z_chart_puts_l_a_at_infinity() {
        let opts = RenderOptions {
            chart: Some([0, 0, 1]),
            ..RenderOptions::default()
        };
        assert_eq!(
            render_svg(&scene(3, 5), &opts).unwrap_err(),
            Error::PointAtInfinity("A1".into())
        );
        let opts = RenderOptions {
            allow_infinite: true,
            ..opts
        };
        let r = render_svg(&scene(3, 5), &opts).unwrap();
        assert!(r.warnings.iter().any(|w| w.starts_with("A1")));
        assert!(r.warnings.iter().any(|w| w.starts_with("L_A")));
    }

    #[test]
    fn s_at_infinity_is_omitted() {
        let opts = RenderOptions {
            chart: Some([1, -1, 1]),
            allow_infinite: true,
            ..RenderOptions::default()
        };
        let r = render_svg(&scene(-1, -1), &opts).unwrap();
        assert!(r.warnings.iter().any(|w| w.starts_with("S is at infinity")));
        assert_eq!(count(&r.svg, "class=\"s-marker\""), 0);
    }
}
