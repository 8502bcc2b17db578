use std::sync::OnceLock;

use proptest::prelude::*;

use pappus::analysis::{
    a_cross_ratio, b_cross_ratio, c_line_cross_ratio, s_incidence_theorem_check, super_report, vanishing_glue,
};
use pappus::dual::{dual_points, round_trip, DualRoundTrip};
use pappus::field::{rat, BiPoly, BigRational, Field, QuadExt, RatFunc};
use pappus::lattice::{build_lattice, check_counting_identity, incidence_matrix};
use pappus::projective::{cross_ratio, dual, incident, is_harmonic_value, join, meet, ratio_orbit, HomTriple, Role};
use pappus::sampling::is_nondegenerate;
use pappus::scene::{symbolic_scene, PappusScene};
use pappus::Perm3;

fn q() -> impl Strategy<Value = BigRational> + Clone {
    (-30i64..=30, 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_q() -> impl Strategy<Value = BigRational> + Clone {
    q().prop_filter("nonzero", |x| !x.is_zero())
}

fn quad() -> impl Strategy<Value = QuadExt> + Clone {
    (q(), q()).prop_map(|(c0, c1)| QuadExt::new(c0, c1))
}

fn poly() -> impl Strategy<Value = BiPoly> + Clone {
    prop::collection::vec((q(), 0u32..=2, 0u32..=2), 0..4).prop_map(|terms| BiPoly::from_terms(terms))
}

fn nonzero_poly() -> impl Strategy<Value = BiPoly> + Clone {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RatFunc> + Clone {
    (poly(), nonzero_poly()).prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

fn param_pair() -> impl Strategy<Value = (BigRational, BigRational)> {
    (q(), q()).prop_filter("non-degenerate", |(a, b)| is_nondegenerate(a, b))
}

fn point<F: Field, S: Strategy<Value = F> + Clone>(s: S) -> impl Strategy<Value = HomTriple<F>> {
    (s.clone(), s.clone(), s).prop_filter_map("zero triple", |(x, y, z)| HomTriple::new([x, y, z], Role::Point).ok())
}

fn symbolic_round_trip() -> &'static DualRoundTrip<RatFunc> {
    static RT: OnceLock<DualRoundTrip<RatFunc>> = OnceLock::new();
    RT.get_or_init(|| round_trip(symbolic_scene()).unwrap())
}

fn field_axioms<F: Field>(x: &F, y: &F, z: &F) -> Result<(), TestCaseError> {
    let eq = |u: F, v: F| u.try_eq(&v).unwrap();
    let add = |u: &F, v: &F| u.try_add(v).unwrap();
    let mul = |u: &F, v: &F| u.try_mul(v).unwrap();
    prop_assert!(eq(add(&add(x, y), z), add(x, &add(y, z))));
    prop_assert!(eq(mul(&mul(x, y), z), mul(x, &mul(y, z))));
    prop_assert!(eq(add(x, y), add(y, x)));
    prop_assert!(eq(mul(x, y), mul(y, x)));
    prop_assert!(eq(mul(x, &add(y, z)), add(&mul(x, y), &mul(x, z))));
    prop_assert!(add(x, &x.negated()).is_zero());
    if !x.is_zero() {
        prop_assert!(eq(mul(x, &x.try_inv().unwrap()), F::one()));
    }
    Ok(())
}

proptest! {
    #[test]
    fn rational_field_axioms(x in q(), y in q(), z in q()) {
        field_axioms(&x, &y, &z)?;
    }

    #[test]
    fn quadext_field_axioms(x in quad(), y in quad(), z in quad()) {
        field_axioms(&x, &y, &z)?;
    }

    #[test]
    fn ratfunc_field_axioms(x in ratfunc(), y in ratfunc(), z in ratfunc()) {
        field_axioms(&x, &y, &z)?;
    }

    #[test]
    fn ratfunc_equality_ignores_common_factors(x in ratfunc(), k in nonzero_poly()) {
        let scaled = RatFunc::new(x.num().mul(&k).unwrap(), x.den().mul(&k).unwrap()).unwrap();
        prop_assert_eq!(&scaled, &x);
        prop_assert_eq!(&x, &scaled);
    }

    #[test]
    fn ratfunc_equality_is_transitive(x in ratfunc(), k in nonzero_poly(), m in nonzero_poly()) {
        let y = RatFunc::new(x.num().mul(&k).unwrap(), x.den().mul(&k).unwrap()).unwrap();
        let z = RatFunc::new(y.num().mul(&m).unwrap(), y.den().mul(&m).unwrap()).unwrap();
        prop_assert!(x == y && y == z && x == z);
    }

    #[test]
    fn eval_is_a_ring_homomorphism(f in ratfunc(), g in ratfunc(), a in q(), b in q()) {
        let (Ok(fa), Ok(ga)) = (f.eval(&a, &b), g.eval(&a, &b)) else {
            return Ok(());
        };
        prop_assert_eq!(f.try_add(&g).unwrap().eval(&a, &b).unwrap(), &fa + &ga);
        prop_assert_eq!(f.try_mul(&g).unwrap().eval(&a, &b).unwrap(), &fa * &ga);
    }

    #[test]
    fn join_and_meet_are_incident(p in point(q()), r in point(q())) {
        prop_assume!(!p.proj_eq(&r).unwrap());
        let l = join(&p, &r).unwrap();
        prop_assert!(incident(&p, &l).unwrap() && incident(&r, &l).unwrap());
        let (lp, lr) = (dual(&p), dual(&r));
        let m = meet(&lp, &lr).unwrap();
        prop_assert!(incident(&m, &lp).unwrap() && incident(&m, &lr).unwrap());
    }

    #[test]
    fn join_and_meet_over_quadext(p in point(quad()), r in point(quad())) {
        prop_assume!(!p.proj_eq(&r).unwrap());
        let l = join(&p, &r).unwrap();
        prop_assert!(incident(&p, &l).unwrap() && incident(&r, &l).unwrap());
        let m = meet(&dual(&p), &dual(&r)).unwrap();
        prop_assert!(incident(&m, &dual(&p)).unwrap());
    }

    #[test]
    fn join_and_meet_over_ratfunc(p in point(ratfunc()), r in point(ratfunc())) {
        prop_assume!(!p.proj_eq(&r).unwrap());
        let l = join(&p, &r).unwrap();
        prop_assert!(incident(&p, &l).unwrap() && incident(&r, &l).unwrap());
    }

    #[test]
    fn duality_is_an_involution_preserving_incidence(p in point(q()), l in point(q())) {
        let l = l.with_role(Role::Line);
        prop_assert!(dual(&dual(&p)).proj_eq(&p).unwrap());
        prop_assert_eq!(incident(&p, &l).unwrap(), incident(&dual(&l), &dual(&p)).unwrap());
    }

    #[test]
    fn projective_equality_is_an_equivalence(p in point(q()), s in nonzero_q(), t in nonzero_q()) {
        let scale = |k: &BigRational, x: &HomTriple<BigRational>| x.try_map(|c| Ok(c * k)).unwrap();
        let ps = scale(&s, &p);
        let pst = scale(&t, &ps);
        prop_assert!(p.proj_eq(&p).unwrap());
        prop_assert!(p.proj_eq(&ps).unwrap() && ps.proj_eq(&p).unwrap());
        prop_assert!(ps.proj_eq(&pst).unwrap() && p.proj_eq(&pst).unwrap());
    }

    #[test]
    fn cross_ratio_ignores_auxiliary_point_and_scaling(
        p in point(q()), r in point(q()),
        s in q(), t in q(), u in q(),
        k in nonzero_q(),
        o1 in point(q()), o2 in point(q()),
    ) {
        prop_assume!(!p.proj_eq(&r).unwrap());
        let l = join(&p, &r).unwrap();
        prop_assume!(!incident(&o1, &l).unwrap() && !incident(&o2, &l).unwrap());
        let comb = |w: &BigRational| {
            let c: [BigRational; 3] = std::array::from_fn(|i| &p.coords()[i] + w * &r.coords()[i]);
            HomTriple::new(c, Role::Point)
        };
        let (Ok(c), Ok(d), Ok(e)) = (comb(&s), comb(&t), comb(&u)) else {
            return Ok(());
        };
        let Ok(v1) = cross_ratio(&p, &c, &d, &e, Some(&o1)) else {
            return Ok(());
        };
        let v2 = cross_ratio(&p, &c, &d, &e, Some(&o2)).unwrap();
        prop_assert_eq!(&v1.value, &v2.value);
        let scaled = c.try_map(|x| Ok(x * &k)).unwrap();
        let v3 = cross_ratio(&p, &scaled, &d, &e, None).unwrap();
        prop_assert_eq!(&v1.value, &v3.value);
    }

    #[test]
    fn ratio_orbit_is_closed(l in q()) {
        prop_assume!(!l.is_zero() && l != rat(1, 1));
        let orbit = ratio_orbit(&l).unwrap();
        for m in &orbit {
            for n in ratio_orbit(m).unwrap() {
                prop_assert!(orbit.contains(&n));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn specialized_scenes_satisfy_the_invariants((a, b) in param_pair()) {
        let scene = PappusScene::canonical(a, b, true).unwrap();
        prop_assert!(scene.check_invariants().unwrap());
        prop_assert!(scene.pappus_holds().unwrap());
        for l in scene.pappus_lines().values() {
            prop_assert!(!l.proj_eq(scene.la()).unwrap() && !l.proj_eq(scene.lb()).unwrap());
        }
    }

    #[test]
    fn glue_and_cross_ratio_agree((a, b) in param_pair()) {
        let scene = PappusScene::canonical(a.clone(), b.clone(), true).unwrap();
        let glue = vanishing_glue(&a, &b).unwrap();
        prop_assert!(glue.len() <= 2);
        let ra = a_cross_ratio(&scene).unwrap();
        for s in Perm3::ALL {
            let on = incident(scene.s(), scene.pappus_line(s)).unwrap();
            prop_assert_eq!(on, glue.contains(&s));
            prop_assert_eq!(on, ra == b_cross_ratio(&scene, s).unwrap());
            prop_assert_eq!(on, s_incidence_theorem_check(&scene, s).unwrap());
            if on {
                prop_assert_eq!(c_line_cross_ratio(&scene, s).unwrap(), rat(1, 1) - &a);
            }
        }
    }

    #[test]
    fn super_clauses_agree((a, b) in param_pair()) {
        let r = super_report(a, b).unwrap();
        prop_assert!(r.clauses_agree());
        if r.is_super {
            prop_assert!(is_harmonic_value(&r.a_ratio).unwrap() && is_harmonic_value(&r.b_ratio).unwrap());
            for v in r.c_ratios.values() {
                prop_assert!(is_harmonic_value(v).unwrap());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn rational_round_trip_matches_the_specialized_symbolic_one((a, b) in param_pair()) {
        let scene = PappusScene::canonical(a.clone(), b.clone(), true).unwrap();
        let rt = round_trip(&scene).unwrap();
        let sym = symbolic_round_trip();
        let pairs = [
            (&rt.m1, &sym.m1),
            (&rt.m2, &sym.m2),
        ];
        for (x, y) in pairs {
            if let Ok(y) = y.eval(&a, &b) {
                prop_assert!(x.proj_eq(&y).unwrap());
            }
        }
        for s in Perm3::ALL {
            if let Ok(y) = sym.returned_points[&s].eval(&a, &b) {
                prop_assert!(rt.returned_points[&s].proj_eq(&y).unwrap(), "{} at a = {}, b = {}", s, a, b);
            }
            if let Ok(y) = sym.dual_points[&s].eval(&a, &b) {
                prop_assert!(rt.dual_points[&s].proj_eq(&y).unwrap());
            }
            let m = if s.is_even() { &rt.m1 } else { &rt.m2 };
            prop_assert!(incident(&rt.dual_points[&s], m).unwrap());
        }
        for l in rt.second_stage_lines.values() {
            prop_assert!(dual(&dual(l)).proj_eq(l).unwrap());
        }
    }

    #[test]
    fn lattice_is_independent_of_line_order((a, b) in param_pair(), rot in 0usize..9, rev in any::<bool>()) {
        let scene = PappusScene::canonical(a, b, true).unwrap();
        let lines = scene.joins();
        let mut shuffled = lines.clone();
        shuffled.rotate_left(rot);
        if rev {
            shuffled.reverse();
        }
        let x = build_lattice(&lines).unwrap();
        let y = build_lattice(&shuffled).unwrap();
        prop_assert!(check_counting_identity(&x) && check_counting_identity(&y));
        prop_assert_eq!(&x.t, &y.t);
        let keys = |l: &pappus::lattice::IntersectionLattice<BigRational>| {
            let mut k: Vec<String> = l.points.iter().map(|p| p.point.display_canonical()).collect();
            k.sort();
            k
        };
        prop_assert_eq!(keys(&x), keys(&y));
        let m = incidence_matrix(&scene).unwrap();
        prop_assert!(m.transpose().is_nk_configuration(3));
    }
}

#[test]
fn generators_span_the_group() {
    let mut seen = vec![Perm3::ID];
    let mut frontier = vec![Perm3::ID];
    while let Some(p) = frontier.pop() {
        for g in [Perm3::T2, Perm3::T3] {
            let n = p * g;
            if !seen.contains(&n) {
                seen.push(n);
                frontier.push(n);
            }
        }
    }
    assert_eq!(seen.len(), 6);
    assert_eq!(Perm3::T2 * Perm3::T2, Perm3::ID);
    assert_eq!(Perm3::T3 * Perm3::T3 * Perm3::T3, Perm3::ID);
}

#[test]
fn omega_is_a_root() {
    let w = QuadExt::omega();
    let v = w
        .try_mul(&w)
        .unwrap()
        .try_sub(&w)
        .unwrap()
        .try_add(&QuadExt::one())
        .unwrap();
    assert!(v.is_zero());
}

#[test]
fn dual_points_split_by_parity_symbolically() {
    let scene = symbolic_scene();
    let dp = dual_points(scene).unwrap();
    let rt = round_trip(scene).unwrap();
    for s in Perm3::ALL {
        let (on, off) = if s.is_even() {
            (&rt.m1, &rt.m2)
        } else {
            (&rt.m2, &rt.m1)
        };
        assert!(incident(&dp[&s], on).unwrap());
        assert!(!incident(&dp[&s], off).unwrap());
    }
}
