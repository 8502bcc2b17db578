//! Dualize the six Pappus lines, rerun the construction on the dual data and
//! dualize back.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{int, Field, RatFunc};
use crate::perm::Perm3;
use crate::projective::{incident, join, HomTriple};
use crate::scene::PappusScene;

/// How the six dual points are fed into the second construction, and how
/// the resulting Pappus lines are named.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RoleAssignment {
    /// `a_roles[i]` is the σ whose dual point plays `A'_{i+1}`.
    pub a_roles: [Perm3; 3],
    pub b_roles: [Perm3; 3],
    /// Name the line built with permutation σ in the second stage by σ⁻¹
    /// instead of σ.
    pub inverse_indexing: bool,
}

impl RoleAssignment {
    /// Even dual points as `A'`, odd ones as `B'`, each in `Perm3::ALL` order,
    /// with inverse naming. This is the assignment that reproduces the
    /// printed table of returned points label by label (see
    /// [`search_role_assignments`]).
    pub const DISCOVERED: RoleAssignment = RoleAssignment {
        a_roles: Perm3::EVEN,
        b_roles: Perm3::ODD,
        inverse_indexing: true,
    };

    pub fn label(&self, second_stage_sigma: Perm3) -> Perm3 {
        if self.inverse_indexing {
            second_stage_sigma.inverse()
        } else {
            second_stage_sigma
        }
    }
}

/// Returned points split by the carrier line they land on.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Landing {
    pub on_la: Vec<Perm3>,
    pub on_lb: Vec<Perm3>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DualRoundTrip<F> {
    pub dual_points: BTreeMap<Perm3, HomTriple<F>>,
    pub m1: HomTriple<F>,
    pub m2: HomTriple<F>,
    pub assignment: RoleAssignment,
    /// The second construction, over the dual plane.
    pub second: PappusScene<F>,
    /// `M_{C,σ}` keyed by label.
    pub second_stage_lines: BTreeMap<Perm3, HomTriple<F>>,
    /// `M*_{C,σ}` keyed by label.
    pub returned_points: BTreeMap<Perm3, HomTriple<F>>,
    pub landing: Landing,
}

/// `L*_{C,σ}` for all σ.
pub fn dual_points<F: Field>(scene: &PappusScene<F>) -> Result<BTreeMap<Perm3, HomTriple<F>>> {
    if let Some((s, t)) = scene.coinciding_pappus_lines()?.first() {
        return Err(Error::DegenerateParameters(format!("L_C,{s} = L_C,{t}")));
    }
    Ok(scene.pappus_lines().iter().map(|(s, l)| (*s, l.dual())).collect())
}

fn fit_triple<F: Field>(
    pts: &BTreeMap<Perm3, HomTriple<F>>,
    triple: [Perm3; 3],
    name: &'static str,
) -> Result<HomTriple<F>> {
    let line = join(&pts[&triple[0]], &pts[&triple[1]]).map_err(|_| Error::TripleNotCollinear(name))?;
    if !incident(&pts[&triple[2]], &line)? {
        return Err(Error::TripleNotCollinear(name));
    }
    line.canonicalized()
}

/// `M1` through the even dual points and `M2` through the odd ones.
pub fn fit_m_lines<F: Field>(dual_points: &BTreeMap<Perm3, HomTriple<F>>) -> Result<(HomTriple<F>, HomTriple<F>)> {
    Ok((
        fit_triple(dual_points, Perm3::EVEN, "even")?,
        fit_triple(dual_points, Perm3::ODD, "odd")?,
    ))
}

/// Run the construction on the dual points, with `M1` and `M2` as carriers.
pub fn second_stage<F: Field>(
    dual_points: &BTreeMap<Perm3, HomTriple<F>>,
    assignment: &RoleAssignment,
) -> Result<PappusScene<F>> {
    let pick = |s: Perm3| dual_points[&s].clone();
    PappusScene::from_points_lenient(assignment.a_roles.map(pick), assignment.b_roles.map(pick)).map_err(|e| match e {
        Error::InvalidInitialData(m) => Error::DegenerateParameters(format!("dual data: {m}")),
        other => other,
    })
}

/// Which carrier line each returned point lies on.
pub fn landing_check<F: Field>(returned: &BTreeMap<Perm3, HomTriple<F>>, scene: &PappusScene<F>) -> Result<Landing> {
    let mut landing = Landing::default();
    for (s, p) in returned {
        if incident(p, scene.la())? {
            landing.on_la.push(*s);
        } else if incident(p, scene.lb())? {
            landing.on_lb.push(*s);
        } else {
            return Err(Error::LandingFailure(format!("M*_{s} = {p}")));
        }
    }
    Ok(landing)
}

/// Points on `L_A` do not depend on `b`, points on `L_B` do not depend on `a`.
///
/// A point is tested by specializing the other parameter to a small integer
/// and checking that the result is still projectively equal to the original.
pub fn single_parameter_check(returned: &BTreeMap<Perm3, HomTriple<RatFunc>>, landing: &Landing) -> Result<bool> {
    if !returned.values().any(HomTriple::is_symbolic) {
        return Err(Error::NotSymbolic);
    }
    for s in &landing.on_la {
        if !free_of(&returned[s], 'b')? {
            return Ok(false);
        }
    }
    for s in &landing.on_lb {
        if !free_of(&returned[s], 'a')? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `p` is projectively independent of the variable `var`.
pub fn free_of(p: &HomTriple<RatFunc>, var: char) -> Result<bool> {
    for v in [2, 3, 5, 7, 11, 13] {
        let v = int(v);
        let (a0, b0) = if var == 'a' { (Some(&v), None) } else { (None, Some(&v)) };
        let sub = p.try_map(|c| Ok(c.substitute(a0, b0)?));
        match sub {
            Ok(rep) => return p.proj_eq(&rep),
            Err(Error::ZeroTriple) | Err(Error::Field(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(false)
}

pub fn round_trip_with<F: Field>(scene: &PappusScene<F>, assignment: &RoleAssignment) -> Result<DualRoundTrip<F>> {
    let dual_points = dual_points(scene)?;
    let (m1, m2) = fit_m_lines(&dual_points)?;
    let second = second_stage(&dual_points, assignment)?;
    let mut second_stage_lines = BTreeMap::new();
    let mut returned_points = BTreeMap::new();
    for (s, l) in second.pappus_lines() {
        let label = assignment.label(*s);
        second_stage_lines.insert(label, l.clone());
        returned_points.insert(label, l.dual());
    }
    let landing = landing_check(&returned_points, scene)?;
    Ok(DualRoundTrip {
        dual_points,
        m1,
        m2,
        assignment: *assignment,
        second,
        second_stage_lines,
        returned_points,
        landing,
    })
}

/// Dualize, rebuild with [`RoleAssignment::DISCOVERED`], dualize back.
pub fn round_trip<F: Field>(scene: &PappusScene<F>) -> Result<DualRoundTrip<F>> {
    round_trip_with(scene, &RoleAssignment::DISCOVERED)
}

fn permutations_of(t: [Perm3; 3]) -> [[Perm3; 3]; 6] {
    Perm3::ALL.map(|p| [t[p.apply(1) - 1], t[p.apply(2) - 1], t[p.apply(3) - 1]])
}

/// All role assignments under which the labeled returned points agree with
/// `target` up to projective equality.
///
/// Tries both parity classes in both roles, every ordering within each
/// class, and direct and inverse naming.
pub fn search_role_assignments<F: Field>(
    scene: &PappusScene<F>,
    target: &BTreeMap<Perm3, HomTriple<F>>,
) -> Result<Vec<RoleAssignment>> {
    let dual_points = dual_points(scene)?;
    let mut found = Vec::new();
    for (first, second) in [(Perm3::EVEN, Perm3::ODD), (Perm3::ODD, Perm3::EVEN)] {
        for a_roles in permutations_of(first) {
            for b_roles in permutations_of(second) {
                for inverse_indexing in [false, true] {
                    let asg = RoleAssignment {
                        a_roles,
                        b_roles,
                        inverse_indexing,
                    };
                    let Ok(stage) = second_stage(&dual_points, &asg) else {
                        continue;
                    };
                    let mut all = true;
                    for (s, l) in stage.pappus_lines() {
                        match target.get(&asg.label(*s)) {
                            Some(t) if l.dual().proj_eq(t)? => {}
                            _ => {
                                all = false;
                                break;
                            }
                        }
                    }
                    if all {
                        found.push(asg);
                    }
                }
            }
        }
    }
    Ok(found)
}
