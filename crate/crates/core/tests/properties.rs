use std::collections::VecDeque;

use proptest::prelude::*;

use chhs_core::classes::ClassIndex;
use chhs_core::generators::random_flag;
use chhs_core::hhs::{distance_formula_fit, Hhs};
use chhs_core::io::{emit_instance, parse_instance};
use chhs_core::metric::four_point_twice;
use chhs_core::{verify_chhs, Bound, FlagComplex, Rational, RelationTable, VerifyOptions, WRule, XGraph, INF};

fn instance() -> impl Strategy<Value = (FlagComplex, XGraph)> {
    (1usize..11, 0.0f64..1.0, any::<u64>(), 0usize..3).prop_map(|(n, p, seed, rule)| {
        let x = random_flag(n, p, seed).unwrap();
        let w = XGraph::from_rule(&x, WRule::ALL[rule]);
        (x, w)
    })
}

fn adjacency(x: &FlagComplex, w: &XGraph) -> Vec<Vec<bool>> {
    let n = x.vertex_count();
    let mut m = vec![vec![false; n]; n];
    for &(a, b) in x.edges() {
        m[a][b] = true;
        m[b][a] = true;
    }
    let ms = x.maximal_simplices();
    for &(p, q) in w.w_edges() {
        for &a in ms[p].vertices() {
            for &b in ms[q].vertices() {
                if a != b {
                    m[a][b] = true;
                    m[b][a] = true;
                }
            }
        }
    }
    m
}

fn link_of(x: &FlagComplex, set: &[usize]) -> Vec<usize> {
    (0..x.vertex_count()).filter(|&v| !set.contains(&v) && set.iter().all(|&u| x.adjacent(u, v))).collect()
}

fn diameter(m: &[Vec<bool>], vs: &[usize]) -> Bound {
    let mut worst = 0;
    for &s in vs {
        let mut d = vec![INF; m.len()];
        d[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &v in vs {
                if m[u][v] && d[v] == INF {
                    d[v] = d[u] + 1;
                    q.push_back(v);
                }
            }
        }
        for &v in vs {
            if d[v] == INF {
                return Bound::Infinite;
            }
            worst = worst.max(d[v]);
        }
    }
    Bound::from_dist(worst)
}

/// Nested-intersection condition by exhaustive search over all `Π ⊆ Lk(Σ)`.
fn condition3_oracle(x: &FlagComplex, w: &XGraph, t: Bound) -> bool {
    let classes = ClassIndex::new(x).unwrap();
    let m = adjacency(x, w);
    let links: Vec<Vec<usize>> = classes.classes().iter().map(|c| c.link.ones().collect()).collect();
    let sub = |a: &[usize], b: &[usize]| a.iter().all(|v| b.contains(v));
    let qualifying: Vec<usize> = (0..links.len()).filter(|&g| diameter(&m, &links[g]) >= t).collect();
    for d in 0..links.len() {
        for s in 0..links.len() {
            let gammas: Vec<usize> =
                qualifying.iter().copied().filter(|&g| sub(&links[g], &links[d]) && sub(&links[g], &links[s])).collect();
            if gammas.is_empty() {
                continue;
            }
            let sigma = classes.class(s).representative.vertices().to_vec();
            let lk = &links[s];
            let found = (0u32..1 << lk.len()).any(|mask| {
                let pi: Vec<usize> = (0..lk.len()).filter(|i| mask >> i & 1 == 1).map(|i| lk[i]).collect();
                if !x.is_clique(&pi) {
                    return false;
                }
                let mut joined = sigma.clone();
                joined.extend(&pi);
                let l = link_of(x, &joined);
                sub(&l, &links[d]) && gammas.iter().all(|&g| sub(&links[g], &l))
            });
            if !found {
                return false;
            }
        }
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn saturation_and_link_identities((x, _w) in instance()) {
        let classes = ClassIndex::new(&x).unwrap();
        for s in classes.simplices() {
            let lk = link_of(&x, s.vertices());
            let sat: Vec<usize> = x.saturation(s).ones().collect();
            prop_assert_eq!(link_of(&x, &sat), lk.clone());
            prop_assert_eq!(link_of(&x, &link_of(&x, &lk)), lk);
        }
        for c in classes.classes() {
            let members: Vec<usize> = c.members.iter().flat_map(|&i| classes.simplices()[i].vertices().to_vec()).collect();
            let sat: Vec<usize> = c.saturation.ones().collect();
            prop_assert!(sat.iter().all(|v| members.contains(v)) && members.iter().all(|v| sat.contains(v)));
        }
        prop_assert!(x.dimension() + 2 <= classes.complexity() as i64);
        prop_assert!(RelationTable::new(&classes).validate(&classes).is_ok());
    }

    #[test]
    fn four_point_matches_quadruple_scan((_x, w) in instance()) {
        let metric = w.augmented_graph().metric();
        prop_assume!(metric.is_connected());
        let n = metric.len();
        let d = |a: usize, b: usize| metric.d(a, b) as i64;
        let mut naive = 0i64;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for e in 0..n {
                        let mut s = [d(a, b) + d(c, e), d(a, c) + d(b, e), d(a, e) + d(b, c)];
                        s.sort_unstable();
                        naive = naive.max(s[2] - s[1]);
                    }
                }
            }
        }
        prop_assert_eq!(four_point_twice(metric.distances(), n) as i64, naive);
    }

    #[test]
    fn condition3_agrees_with_exhaustive_search((x, w) in instance()) {
        let r = verify_chhs(&x, &w, &VerifyOptions::default()).unwrap();
        for row in &r.condition3.scan {
            prop_assert_eq!(row.pass, condition3_oracle(&x, &w, row.threshold), "threshold {}", row.threshold);
        }
        if let Some(above) = r.condition3.holds_above {
            prop_assert!(above);
        }
    }

    #[test]
    fn thresholded_sum_is_non_increasing((x, w) in instance()) {
        let h = Hhs::new(&x, &w).unwrap();
        let m = h.w_count();
        for a in 0..m {
            for b in a + 1..m {
                let mut last = i64::MAX;
                for s in 0..5u32 {
                    let sum: i64 = (0..h.class_count()).map(|u| h.d_u(u, a, b)).filter(|&v| v != INF && v >= s).map(i64::from).sum();
                    prop_assert!(sum <= last);
                    last = sum;
                }
            }
        }
        if h.w_metric().is_connected() {
            for fit in distance_formula_fit(&h, &[1, 2, 3]).unwrap() {
                prop_assert_eq!(fit.violations, 0);
                if let Bound::Finite(k) = fit.k {
                    prop_assert!(k >= Rational::from_integer(1));
                }
            }
        }
    }

    #[test]
    fn documents_round_trip((x, w) in instance()) {
        let text = emit_instance(&x, &w);
        let back = parse_instance(&text).unwrap();
        prop_assert_eq!(emit_instance(&back.x, &back.w), text);
        prop_assert_eq!(back.x.maximal_simplices(), x.maximal_simplices());
    }

    #[test]
    fn coned_levels_are_monotone((x, w) in instance()) {
        let classes = ClassIndex::new(&x).unwrap();
        let table = RelationTable::new(&classes);
        for c in 0..classes.len() {
            let mut prev: Option<Vec<(usize, usize)>> = None;
            for k in 0..=table.colevel(c) {
                let e = chhs_core::spaces::coned_intermediate(&w, &classes, &table, c, k).unwrap().edges();
                if let Some(p) = &prev {
                    prop_assert!(e.iter().all(|q| p.contains(q)));
                }
                prev = Some(e);
            }
            let over = chhs_core::spaces::coned_intermediate(&w, &classes, &table, c, table.colevel(c) + 1);
            prop_assert!(over.is_err());
        }
    }
}
