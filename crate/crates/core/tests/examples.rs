use std::collections::BTreeMap;

use chhs_core::action::{check_action, Permutation};
use chhs_core::generators::{glued_squares_with_pendant, octahedron, two_edges};
use chhs_core::hhs::{bgi_constants, distance_formula_fit, distance_formula_fit_with, hhs_constants, realize_tuple, Hhs};
use chhs_core::verify::{build_w_from_link_edges, check_thm_a, intersection_decomposition};
use chhs_core::{verify_chhs, Bound, ClassIndex, FlagComplex, Rational, Verdict, VerifyOptions, WRule, XGraph};

fn square() -> FlagComplex {
    FlagComplex::build(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]).unwrap()
}

fn labelled_octahedron() -> FlagComplex {
    let v = ["a", "a'", "b", "b'", "c", "c'"];
    let mut edges = Vec::new();
    for (i, p) in v.iter().enumerate() {
        for q in &v[i + 1..] {
            if p.trim_end_matches('\'') != q.trim_end_matches('\'') {
                edges.push((*p, *q));
            }
        }
    }
    FlagComplex::build(&v, &edges).unwrap()
}

#[test]
fn octahedron_with_complete_w_passes() {
    let x = octahedron(3).unwrap();
    let w = XGraph::from_rule(&x, WRule::Complete);
    let r = verify_chhs(&x, &w, &VerifyOptions::default()).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    assert!(r.delta_star.unwrap().is_finite());
    assert_eq!(r.condition1.complexity, 4);
}

#[test]
fn square_with_complete_w_passes() {
    let x = square();
    let w = XGraph::from_rule(&x, WRule::Complete);
    let r = verify_chhs(&x, &w, &VerifyOptions::default()).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
}

#[test]
fn two_edges_fail_condition_two() {
    let x = two_edges();
    let w = XGraph::from_rule(&x, WRule::None);
    let r = verify_chhs(&x, &w, &VerifyOptions::default()).unwrap();
    assert_eq!(r.verdict, Verdict::Fail);
    assert!(!r.condition2.pass);
    let wit = r.condition2.witness.unwrap();
    assert_eq!(wit.class, "");
    let (p, q) = wit.pair;
    let side = |v: &str| if v == "a" || v == "b" { 0 } else { 1 };
    assert_ne!(side(&p), side(&q));
}

#[test]
fn octahedron_intersection_decomposes() {
    let x = labelled_octahedron();
    let classes = ClassIndex::new(&x).unwrap();
    let a = classes.class_by_key(&x, "a").unwrap();
    let b = classes.class_by_key(&x, "b").unwrap();
    let (pi, pi_prime) = intersection_decomposition(&x, &classes, a, b).unwrap();
    assert_eq!(x.set_labels(pi), ["b"]);
    assert!(pi_prime.is_empty());
}

#[test]
fn glued_squares_fail_the_intersection_condition() {
    let x = glued_squares_with_pendant();
    let r = check_thm_a(&x, &BTreeMap::new(), None, &VerifyOptions::default()).unwrap();
    assert!(!r.intersections_pass);
    assert!(r.intersection_failures.iter().any(|p| p.delta == "a" && p.sigma == "c"));
    assert_eq!(r.verdict, Verdict::Fail);
}

#[test]
fn square_connectivity_exemption() {
    let r = check_thm_a(&square(), &BTreeMap::new(), None, &VerifyOptions::default()).unwrap();
    assert!(r.connectivity_pass);
}

#[test]
fn build_w_on_square() {
    let x = square();
    let classes = ClassIndex::new(&x).unwrap();
    let a = classes.class_by_key(&x, "a").unwrap();
    let (b, d) = (x.vertex("b").unwrap(), x.vertex("d").unwrap());
    let w = build_w_from_link_edges(&x, &BTreeMap::from([(a, vec![(b, d)])]), None).unwrap();
    let mut keys = w.w_edge_keys(&x);
    keys.sort();
    assert_eq!(keys, [("a|b".to_string(), "a|d".to_string()), ("b|c".to_string(), "c|d".to_string())]);
    let empty = build_w_from_link_edges(&x, &BTreeMap::new(), None).unwrap();
    assert!(empty.w_edges().is_empty());
}

#[test]
fn rotation_closes_w_orbit_and_acts_equivariantly() {
    let x = square();
    let classes = ClassIndex::new(&x).unwrap();
    let a = classes.class_by_key(&x, "a").unwrap();
    let (b, d) = (x.vertex("b").unwrap(), x.vertex("d").unwrap());
    let rot = Permutation::from_labels(
        &x,
        &BTreeMap::from([("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")].map(|(p, q)| (p.to_string(), q.to_string()))),
    )
    .unwrap();
    let w = build_w_from_link_edges(&x, &BTreeMap::from([(a, vec![(b, d)])]), Some(std::slice::from_ref(&rot))).unwrap();
    assert_eq!(w.w_edges().len(), 4);
    let report = check_action(&x, &w, &[rot]).unwrap();
    assert!(report.pass());
    assert_eq!(report.vertex_orbits, 1);
    assert_eq!(report.maximal_orbits, 1);
    // [∅] and the single orbit of vertex classes
    assert_eq!(report.class_orbits, 2);
}

#[test]
fn identity_action_counts_raw_objects() {
    let x = square();
    let w = XGraph::from_rule(&x, WRule::Complete);
    let report = check_action(&x, &w, &[Permutation::identity(4)]).unwrap();
    assert!(report.pass());
    assert_eq!((report.vertex_orbits, report.maximal_orbits, report.class_orbits), (4, 4, 3));
}

#[test]
fn complete_w_distance_formula() {
    for x in [square(), octahedron(3).unwrap()] {
        let w = XGraph::from_rule(&x, WRule::Complete);
        let h = Hhs::new(&x, &w).unwrap();
        for fit in distance_formula_fit(&h, &[2, 3, 5]).unwrap() {
            assert_eq!(fit.k, Bound::int(1));
            assert!(fit.c <= Bound::int(1));
            assert_eq!(fit.violations, 0);
        }
        let c = hhs_constants(&h, &[0, 1, 2]);
        assert!(c.theta_u.iter().all(|r| r.theta <= Bound::int(1)));
    }
}

#[test]
fn identity_perturbation_reproduces_fit() {
    let x = octahedron(3).unwrap();
    let w = XGraph::from_rule(&x, WRule::SharedCodim1Face);
    let h = Hhs::new(&x, &w).unwrap();
    let a = distance_formula_fit(&h, &[1, 2]).unwrap();
    let b = distance_formula_fit_with(&h, &[1, 2], &|_, _, _, d| d, Rational::from_integer(1)).unwrap();
    for (p, q) in a.iter().zip(&b) {
        assert_eq!((p.k, p.c), (q.k, q.c));
    }
    let far = distance_formula_fit_with(&h, &[1], &|_, _, _, d| d * 10 + 10, Rational::from_integer(1));
    assert!(far.is_err());
}

#[test]
fn square_bgi_constants_are_small() {
    let x = square();
    let w = XGraph::from_rule(&x, WRule::Complete);
    let h = Hhs::new(&x, &w).unwrap();
    let diam = Bound::from_dist(w.augmented_graph().metric().diameter());
    let b = bgi_constants(&h);
    assert!(b.e <= diam && b.c_super <= diam && b.c_strong <= diam);
}

#[test]
fn true_tuples_realize_themselves() {
    let x = octahedron(3).unwrap();
    let w = XGraph::from_rule(&x, WRule::Complete);
    let h = Hhs::new(&x, &w).unwrap();
    let xi = hhs_constants(&h, &[]).xi;
    for wv in 0..h.w_count() {
        let tuple: Vec<Vec<usize>> = (0..h.class_count()).map(|c| h.pi_vertices(c, wv)).collect();
        let r = realize_tuple(&h, &tuple).unwrap();
        assert!(r.theta <= xi);
    }
}

#[test]
fn theta_real_matches_perturbed_realizations() {
    let x = octahedron(3).unwrap();
    let w = XGraph::from_rule(&x, WRule::SharedCodim1Face);
    let h = Hhs::new(&x, &w).unwrap();
    let c = hhs_constants(&h, &[]);
    assert!(c.theta_real_exhaustive);
    let mut worst = Bound::zero();
    let mut kept = 0;
    for wv in 0..h.w_count() {
        let truth = h.true_tuple(wv);
        for class in 0..h.class_count() {
            for v in h.classes.class(class).link.ones() {
                let mut t: Vec<Vec<usize>> = (0..h.class_count()).map(|u| h.pi_vertices(u, wv)).collect();
                if truth[class].len() == 1 && t[class] == [v] {
                    continue;
                }
                t[class] = vec![v];
                let r = realize_tuple(&h, &t).unwrap();
                if r.consistency <= c.kappa0 {
                    kept += 1;
                    worst = worst.max(r.theta);
                }
            }
        }
    }
    assert_eq!(c.theta_real_tuples, kept);
    assert_eq!(c.theta_real, worst);
}
