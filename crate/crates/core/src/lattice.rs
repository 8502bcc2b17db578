//! Intersection lattices of line families and the incidence matrix of the
//! configuration.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::perm::Perm3;
use crate::projective::{incident, meet, HomTriple};
use crate::scene::{PappusScene, PointLabel};

/// One intersection point and the indices of the lines through it.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticePoint<F> {
    pub point: HomTriple<F>,
    pub lines: Vec<usize>,
}

impl<F> LatticePoint<F> {
    pub fn multiplicity(&self) -> usize {
        self.lines.len()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IntersectionLattice<F> {
    pub n: usize,
    /// In order of first appearance when scanning pairs `(i, j)`, `i < j`.
    pub points: Vec<LatticePoint<F>>,
    /// `t[k]` is the number of points where exactly `k` lines meet.
    pub t: BTreeMap<usize, usize>,
}

fn choose2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

impl<F: Field> IntersectionLattice<F> {
    pub fn t_k(&self, k: usize) -> usize {
        self.t.get(&k).copied().unwrap_or(0)
    }

    /// Lattice points where at least `k` lines meet.
    pub fn points_of_multiplicity(&self, k: usize) -> impl Iterator<Item = &LatticePoint<F>> {
        self.points.iter().filter(move |p| p.multiplicity() >= k)
    }

    pub fn report(&self) -> LatticeReport {
        LatticeReport {
            n: self.n,
            t: self.t.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            points: self
                .points
                .iter()
                .map(|p| LatticePointReport {
                    point: p.point.display_canonical(),
                    lines: p.lines.clone(),
                })
                .collect(),
        }
    }
}

/// JSON shape of a lattice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeReport {
    pub n: usize,
    pub t: BTreeMap<String, usize>,
    pub points: Vec<LatticePointReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticePointReport {
    pub point: String,
    pub lines: Vec<usize>,
}

/// Meet every pair of lines and group the results by projective equality.
///
/// Lines must be pairwise distinct and have specialized coordinates.
pub fn build_lattice<F: Field>(lines: &[HomTriple<F>]) -> Result<IntersectionLattice<F>> {
    if lines.iter().any(HomTriple::is_symbolic) {
        return Err(Error::SymbolicLattice);
    }
    let n = lines.len();
    let mut points: Vec<LatticePoint<F>> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    for i in 0..n {
        for j in i + 1..n {
            let p = match meet(&lines[i], &lines[j]) {
                Ok(p) => p.canonicalized()?,
                Err(Error::CoincidentInputs(_)) => return Err(Error::DuplicateLines(i, j)),
                Err(e) => return Err(e),
            };
            let key = p.display_canonical();
            let slot = *index.entry(key).or_insert_with(|| {
                points.push(LatticePoint {
                    point: p,
                    lines: Vec::new(),
                });
                points.len() - 1
            });
            let lp = &mut points[slot];
            for k in [i, j] {
                if let Err(pos) = lp.lines.binary_search(&k) {
                    lp.lines.insert(pos, k);
                }
            }
        }
    }
    let mut t = BTreeMap::new();
    for p in &points {
        *t.entry(p.multiplicity()).or_insert(0) += 1;
    }
    let lat = IntersectionLattice { n, points, t };
    let (lhs, rhs) = counting_sides(&lat);
    if lhs != rhs {
        return Err(Error::CountingIdentity { lhs, rhs });
    }
    Ok(lat)
}

fn counting_sides<F>(lat: &IntersectionLattice<F>) -> (usize, usize) {
    let rhs = lat.t.iter().map(|(k, v)| v * choose2(*k)).sum();
    (choose2(lat.n), rhs)
}

/// `C(n, 2) = Σ t_k C(k, 2)`.
pub fn check_counting_identity<F>(lat: &IntersectionLattice<F>) -> bool {
    let (lhs, rhs) = counting_sides(lat);
    lhs == rhs
}

/// Row labels in the order of [`PappusScene::configuration_lines`].
pub const LINE_LABELS: [&str; 9] = [
    "L_A", "L_B", "L_C", "L(A2,B3)", "L(A3,B2)", "L(A1,B3)", "L(A3,B1)", "L(A1,B2)", "L(A2,B1)",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub cells: Vec<Vec<bool>>,
}

impl IncidenceMatrix {
    pub fn get(&self, row: &str, col: &str) -> Option<bool> {
        let r = self.rows.iter().position(|x| x == row)?;
        let c = self.cols.iter().position(|x| x == col)?;
        Some(self.cells[r][c])
    }

    pub fn transpose(&self) -> IncidenceMatrix {
        let cells = (0..self.cols.len())
            .map(|c| self.cells.iter().map(|row| row[c]).collect())
            .collect();
        IncidenceMatrix {
            rows: self.cols.clone(),
            cols: self.rows.clone(),
            cells,
        }
    }

    pub fn row_sums(&self) -> Vec<usize> {
        self.cells.iter().map(|r| r.iter().filter(|x| **x).count()).collect()
    }

    pub fn col_sums(&self) -> Vec<usize> {
        (0..self.cols.len())
            .map(|c| self.cells.iter().filter(|r| r[c]).count())
            .collect()
    }

    /// Square, with exactly `k` marks in every row and column.
    pub fn is_nk_configuration(&self, k: usize) -> bool {
        self.rows.len() == self.cols.len()
            && self.row_sums().iter().all(|s| *s == k)
            && self.col_sums().iter().all(|s| *s == k)
    }

    /// Header row of column labels, then one row per line with `+` marks.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("line");
        for c in &self.cols {
            write!(out, ",{c}").unwrap();
        }
        out.push('\n');
        for (label, row) in self.rows.iter().zip(&self.cells) {
            out.push_str(label);
            for x in row {
                out.push(',');
                if *x {
                    out.push('+');
                }
            }
            out.push('\n');
        }
        out
    }
}

fn matrix_of<F: Field>(
    rows: Vec<String>,
    cols: Vec<String>,
    lines: &[HomTriple<F>],
    points: &[HomTriple<F>],
) -> Result<IncidenceMatrix> {
    let mut cells = Vec::with_capacity(lines.len());
    for l in lines {
        let mut row = Vec::with_capacity(points.len());
        for p in points {
            row.push(incident(p, l)?);
        }
        cells.push(row);
    }
    Ok(IncidenceMatrix { rows, cols, cells })
}

fn point_labels() -> Vec<String> {
    PointLabel::ALL.iter().map(|p| p.to_string()).collect()
}

/// Incidences between the nine lines and nine points of the σ = id
/// configuration, computed from coordinates.
pub fn incidence_matrix<F: Field>(scene: &PappusScene<F>) -> Result<IncidenceMatrix> {
    incidence_matrix_for(scene, Perm3::ID)
}

pub fn incidence_matrix_for<F: Field>(scene: &PappusScene<F>, sigma: Perm3) -> Result<IncidenceMatrix> {
    matrix_of(
        LINE_LABELS.iter().map(|s| s.to_string()).collect(),
        point_labels(),
        &scene.configuration_lines(sigma),
        &scene.configuration_points(sigma),
    )
}

/// The matrix the labeling rule predicts: `A_i`, `B_j`, `C_k` are collinear
/// iff `i + j + k ≡ 0 (mod 3)`, and the three points of each family lie on
/// their own line.
pub fn rule_matrix() -> IncidenceMatrix {
    let rows: Vec<String> = LINE_LABELS.iter().map(|s| s.to_string()).collect();
    let cols = point_labels();
    let joins = [(2, 3), (3, 2), (1, 3), (3, 1), (1, 2), (2, 1)];
    let cells = (0..9)
        .map(|r| {
            PointLabel::ALL
                .iter()
                .map(|p| match r {
                    0 => p.family() == 'A',
                    1 => p.family() == 'B',
                    2 => p.family() == 'C',
                    _ => {
                        let (i, j) = joins[r - 3];
                        let k = (6 - (i + j) % 3) % 3;
                        let k = if k == 0 { 3 } else { k };
                        match p.family() {
                            'A' => p.index() == i,
                            'B' => p.index() == j,
                            _ => p.index() == k,
                        }
                    }
                })
                .collect()
        })
        .collect();
    IncidenceMatrix { rows, cols, cells }
}

/// The incidence matrix of the dual arrangement: the nine points become
/// lines, the nine lines become points, and incidence is recomputed from
/// the dualized coordinates.
pub fn dual_incidence_matrix<F: Field>(scene: &PappusScene<F>) -> Result<IncidenceMatrix> {
    let lines: Vec<_> = scene
        .configuration_points(Perm3::ID)
        .iter()
        .map(HomTriple::dual)
        .collect();
    let points: Vec<_> = scene
        .configuration_lines(Perm3::ID)
        .iter()
        .map(HomTriple::dual)
        .collect();
    matrix_of(
        point_labels().into_iter().map(|p| format!("{p}*")).collect(),
        LINE_LABELS.iter().map(|s| format!("{s}*")).collect(),
        &lines,
        &points,
    )
}
