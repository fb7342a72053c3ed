//! The four-condition verifier and the link-condition checks.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::action::{group_elements, Permutation};
use crate::classes::ClassIndex;
use crate::complex::{FlagComplex, Simplex, VertexSet};
use crate::error::{Error, Result};
use crate::geometry::ClassGeometry;
use crate::metric::{four_point_twice, gromov_delta, Graph, DELTA_VERTEX_CAP};
use crate::numeric::{Bound, Rational, INF};
use crate::relations::RelationTable;
use crate::spaces::{c0_adjacency, y_space, XGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagnosticsMode {
    /// Only on instances small enough for the extra all-pairs scans.
    Auto,
    Always,
    Never,
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub delta_cap: usize,
    pub diagnostics: DiagnosticsMode,
    /// Maximum number of certificate entries listed in a report.
    pub witness_limit: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { delta_cap: DELTA_VERTEX_CAP, diagnostics: DiagnosticsMode::Auto, witness_limit: 64 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassRow {
    pub class: String,
    pub link_size: usize,
    pub delta: Bound,
    pub lambda: Bound,
    pub diameter: Bound,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairWitness {
    pub class: String,
    pub reason: String,
    pub pair: (String, String),
}

#[derive(Clone, Debug, Serialize)]
pub struct Condition1 {
    pub pass: bool,
    pub complexity: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Condition2 {
    pub pass: bool,
    pub delta2: Bound,
    pub table: Vec<ClassRow>,
    pub witness: Option<PairWitness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ThresholdRow {
    pub threshold: Bound,
    pub qualifying: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PiChoice {
    pub delta: String,
    pub sigma: String,
    pub pi: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Condition3Witness {
    pub threshold: Bound,
    pub delta: String,
    pub sigma: String,
    pub gammas: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Condition3 {
    pub pass: bool,
    pub scan: Vec<ThresholdRow>,
    pub nontrivial_pairs: usize,
    pub choices: Vec<PiChoice>,
    pub witness: Option<Condition3Witness>,
    /// Whether the condition still holds one unit above the chosen threshold.
    pub holds_above: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Condition4Witness {
    pub simplex: String,
    pub pair: (String, String),
}

#[derive(Clone, Debug, Serialize)]
pub struct Condition4 {
    pub pass: bool,
    pub simplices_checked: usize,
    pub witness: Option<Condition4Witness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassValue {
    pub class: String,
    pub value: Bound,
}

#[derive(Clone, Debug, Serialize)]
pub struct Diagnostics {
    pub y_delta: Vec<ClassValue>,
    pub y_connected: bool,
    pub c0_equals_c: bool,
    pub nesting_realized: bool,
    pub super_bgi: Bound,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub verdict: Verdict,
    pub delta_star: Option<Bound>,
    pub vertices: usize,
    pub maximal_simplices: usize,
    pub dimension: i64,
    pub classes: usize,
    pub condition1: Condition1,
    pub condition2: Condition2,
    pub condition3: Condition3,
    pub condition4: Condition4,
    pub diagnostics: Option<Diagnostics>,
}

/// Runs the four conditions on `(X, W)` and, on success, reports the least
/// admissible threshold `δ*`.
pub fn verify_chhs(x: &FlagComplex, w: &XGraph, opts: &VerifyOptions) -> Result<VerificationReport> {
    let classes = ClassIndex::new(x)?;
    let table = RelationTable::new(&classes);
    let geo = ClassGeometry::all(w, &classes);

    let condition1 = Condition1 { pass: true, complexity: classes.complexity() };
    let condition2 = condition2(x, &classes, &geo, opts)?;
    let diam: Vec<Bound> = geo.iter().map(ClassGeometry::diameter).collect();
    let condition3 = condition3_scan(x, &classes, &table, &diam, condition2.delta2, opts);
    let condition4 = condition4(x, w, &classes);

    let delta_star = if condition2.pass && condition3.pass {
        condition3.scan.iter().find(|r| r.pass).map(|r| r.threshold)
    } else {
        None
    };
    let pass = condition1.pass && condition2.pass && condition3.pass && condition4.pass;
    let run_diag = match opts.diagnostics {
        DiagnosticsMode::Always => true,
        DiagnosticsMode::Never => false,
        DiagnosticsMode::Auto => x.vertex_count() <= 60 && classes.len() <= 400,
    };
    let diagnostics = if run_diag {
        Some(diagnostics(x, w, &classes, &table, &diam, delta_star, opts)?)
    } else {
        None
    };
    Ok(VerificationReport {
        verdict: Verdict::from_bool(pass),
        delta_star,
        vertices: x.vertex_count(),
        maximal_simplices: x.maximal_simplices().len(),
        dimension: x.dimension(),
        classes: classes.len(),
        condition1,
        condition2,
        condition3,
        condition4,
        diagnostics,
    })
}

fn condition2(
    x: &FlagComplex,
    classes: &ClassIndex,
    geo: &[ClassGeometry],
    opts: &VerifyOptions,
) -> Result<Condition2> {
    let rows: Vec<(ClassRow, Option<PairWitness>)> = geo
        .par_iter()
        .map(|g| {
            let key = classes.key(x, g.class);
            let pair = |(i, j): (usize, usize)| (x.label(g.link[i]).to_string(), x.label(g.link[j]).to_string());
            let mut witness = None;
            let delta = match g.c.disconnected_pair() {
                Some(p) => {
                    witness =
                        Some(PairWitness { class: key.clone(), reason: "C(Δ) is disconnected".into(), pair: pair(p) });
                    Bound::Infinite
                }
                None => Bound::Finite(gromov_delta(&g.c, opts.delta_cap)?),
            };
            let (lambda, lw) = g.lambda();
            if witness.is_none() && lambda == Bound::Infinite {
                witness = Some(PairWitness {
                    class: key.clone(),
                    reason: "pair separated in Y_Δ".into(),
                    pair: pair(lw.expect("infinite λ has a witness")),
                });
            }
            let row = ClassRow { class: key, link_size: g.link.len(), delta, lambda, diameter: g.diameter() };
            Ok((row, witness))
        })
        .collect::<Result<_>>()?;
    let delta2 = rows.iter().map(|(r, _)| r.delta.max(r.lambda)).max().unwrap_or(Bound::zero());
    let witness = rows.iter().find_map(|(_, w)| w.clone());
    Ok(Condition2 { pass: delta2.is_finite(), delta2, table: rows.into_iter().map(|(r, _)| r).collect(), witness })
}

/// Candidate thresholds: `δ₂`, then just above each finite diameter `≥ δ₂`.
fn thresholds(delta2: Bound, diam: &[Bound]) -> Vec<Bound> {
    let mut out = vec![delta2];
    if let Bound::Finite(d2) = delta2 {
        let mut ds: Vec<Rational> = diam.iter().filter_map(Bound::finite).filter(|d| *d >= d2).collect();
        ds.sort();
        ds.dedup();
        out.extend(ds.into_iter().map(|d| Bound::Finite(d + Rational::new(1, 2))));
    }
    out
}

struct ScanOutcome {
    pass: bool,
    qualifying: usize,
    nontrivial: usize,
    choices: Vec<PiChoice>,
    witness: Option<Condition3Witness>,
}

fn condition3_scan(
    x: &FlagComplex,
    classes: &ClassIndex,
    table: &RelationTable,
    diam: &[Bound],
    delta2: Bound,
    opts: &VerifyOptions,
) -> Condition3 {
    let mut scan = Vec::new();
    let mut chosen: Option<ScanOutcome> = None;
    let mut last: Option<ScanOutcome> = None;
    let mut chosen_threshold = None;
    for t in thresholds(delta2, diam) {
        let out = condition3_at(x, classes, table, diam, t, opts.witness_limit);
        scan.push(ThresholdRow { threshold: t, qualifying: out.qualifying, pass: out.pass });
        if out.pass {
            chosen = Some(out);
            chosen_threshold = Some(t);
            break;
        }
        last = Some(out);
    }
    let holds_above = chosen_threshold.and_then(|t| t.finite()).map(|t| {
        condition3_at(x, classes, table, diam, Bound::Finite(t + Rational::from_integer(1)), 0).pass
    });
    match chosen {
        Some(out) => Condition3 {
            pass: true,
            scan,
            nontrivial_pairs: out.nontrivial,
            choices: out.choices,
            witness: None,
            holds_above,
        },
        None => {
            let out = last.expect("at least one threshold is scanned");
            Condition3 { pass: false, scan, nontrivial_pairs: out.nontrivial, choices: Vec::new(), witness: out.witness, holds_above }
        }
    }
}

fn condition3_at(
    x: &FlagComplex,
    classes: &ClassIndex,
    table: &RelationTable,
    diam: &[Bound],
    threshold: Bound,
    witness_limit: usize,
) -> ScanOutcome {
    let k = classes.len();
    let cs = classes.classes();
    let qualifying: Vec<usize> = (0..k).filter(|&c| diam[c] >= threshold).collect();
    // below[c]: qualifying classes nested in c
    let below: Vec<VertexSet> = (0..k)
        .into_par_iter()
        .map(|c| {
            let mut s = VertexSet::with_capacity(k);
            for &g in &qualifying {
                if table.nested(g, c) {
                    s.insert(g);
                }
            }
            s
        })
        .collect();
    let rows: Vec<(usize, Vec<PiChoice>, Option<Condition3Witness>)> = (0..k)
        .into_par_iter()
        .map(|d| {
            let mut nontrivial = 0;
            let mut choices = Vec::new();
            for s in 0..k {
                if table.nested(s, d) {
                    continue;
                }
                let mut g = below[d].clone();
                g.intersect_with(&below[s]);
                if g.is_clear() {
                    continue;
                }
                nontrivial += 1;
                let (ld, ls) = (&cs[d].link, &cs[s].link);
                let mut inter = ld.clone();
                inter.intersect_with(ls);
                let mut u = x.empty_set();
                for gamma in g.ones() {
                    u.union_with(&cs[gamma].link);
                    if u == inter {
                        break;
                    }
                }
                let mut cand = x.common_neighbors(&u);
                cand.intersect_with(ls);
                let test = |t: &VertexSet| t.is_subset(ld);
                match find_clique(x, &cand, ls, &test) {
                    Some(pi) => {
                        if choices.len() < witness_limit {
                            let pi = first_clique(x, &cand, ls, &test, 100_000).unwrap_or(pi);
                            choices.push(PiChoice {
                                delta: classes.key(x, d),
                                sigma: classes.key(x, s),
                                pi: x.key(&Simplex::new(pi)),
                            });
                        }
                    }
                    None => {
                        let gammas = g.ones().take(16).map(|c| classes.key(x, c)).collect();
                        let witness = Condition3Witness {
                            threshold,
                            delta: classes.key(x, d),
                            sigma: classes.key(x, s),
                            gammas,
                        };
                        return (nontrivial, choices, Some(witness));
                    }
                }
            }
            (nontrivial, choices, None)
        })
        .collect();
    let mut out =
        ScanOutcome { pass: true, qualifying: qualifying.len(), nontrivial: 0, choices: Vec::new(), witness: None };
    for (n, ch, wit) in rows {
        out.nontrivial += n;
        if out.choices.len() < witness_limit {
            out.choices.extend(ch.into_iter().take(witness_limit - out.choices.len()));
        }
        if wit.is_some() && out.witness.is_none() {
            out.pass = false;
            out.witness = wit;
        }
    }
    if !out.pass {
        out.choices.clear();
    }
    out
}

/// Some clique `Π ⊆ cand` with `test(base ∩ Lk(Π))`, for a test that stays
/// true as `Π` grows. Searches maximal cliques with pivoting.
pub(crate) fn find_clique(
    x: &FlagComplex,
    cand: &VertexSet,
    base: &VertexSet,
    test: &dyn Fn(&VertexSet) -> bool,
) -> Option<Vec<usize>> {
    fn rec(
        x: &FlagComplex,
        r: &mut Vec<usize>,
        t: &VertexSet,
        mut p: VertexSet,
        mut xs: VertexSet,
        test: &dyn Fn(&VertexSet) -> bool,
    ) -> bool {
        if test(t) {
            return true;
        }
        if p.is_clear() {
            return false;
        }
        let pivot = p
            .ones()
            .chain(xs.ones())
            .max_by_key(|&u| (p.intersection_count(x.neighbors(u)), std::cmp::Reverse(u)))
            .expect("nonempty");
        let mut branch = p.clone();
        branch.difference_with(x.neighbors(pivot));
        for v in branch.ones() {
            let mut np = p.clone();
            np.intersect_with(x.neighbors(v));
            let mut nx = xs.clone();
            nx.intersect_with(x.neighbors(v));
            let mut nt = t.clone();
            nt.intersect_with(x.neighbors(v));
            r.push(v);
            if rec(x, r, &nt, np, nx, test) {
                return true;
            }
            r.pop();
            p.remove(v);
            xs.insert(v);
        }
        false
    }
    let mut r = Vec::new();
    rec(x, &mut r, base, cand.clone(), x.empty_set(), test).then(|| {
        r.sort_unstable();
        r
    })
}

/// The first clique `Π ⊆ cand`, by size and then lexicographically, with
/// `test(base ∩ Lk(Π))`; gives up after `budget` cliques.
pub(crate) fn first_clique(
    x: &FlagComplex,
    cand: &VertexSet,
    base: &VertexSet,
    test: &dyn Fn(&VertexSet) -> bool,
    budget: usize,
) -> Option<Vec<usize>> {
    let vs: Vec<usize> = cand.ones().collect();
    let mut spent = 0usize;
    #[allow(clippy::too_many_arguments)]
    fn rec(
        x: &FlagComplex,
        vs: &[usize],
        start: usize,
        size: usize,
        r: &mut Vec<usize>,
        t: &VertexSet,
        test: &dyn Fn(&VertexSet) -> bool,
        spent: &mut usize,
        budget: usize,
    ) -> Option<bool> {
        if r.len() == size {
            *spent += 1;
            if *spent > budget {
                return None;
            }
            return Some(test(t));
        }
        for i in start..vs.len() {
            let v = vs[i];
            if r.iter().any(|&u| !x.adjacent(u, v)) {
                continue;
            }
            let mut nt = t.clone();
            nt.intersect_with(x.neighbors(v));
            r.push(v);
            match rec(x, vs, i + 1, size, r, &nt, test, spent, budget) {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
            r.pop();
        }
        Some(false)
    }
    for size in 0..=vs.len() {
        let mut r = Vec::new();
        match rec(x, &vs, 0, size, &mut r, base, test, &mut spent, budget) {
            Some(true) => return Some(r),
            None => return None,
            Some(false) => {}
        }
    }
    None
}

/// Every non-adjacent pair of the link joined through `W` must be joined
/// through maximal simplices containing the simplex.
pub fn condition4(x: &FlagComplex, w: &XGraph, classes: &ClassIndex) -> Condition4 {
    let ids: Vec<usize> = (0..classes.simplices().len()).filter(|&i| classes.class_of_index(i).is_some()).collect();
    let witness = ids.par_iter().find_map_first(|&i| {
        let s = &classes.simplices()[i];
        let link = &classes.class(classes.class_of_index(i).expect("non-maximal")).link;
        let needs = |v: usize| {
            let mut need = w.w_induced_adjacency()[v].clone();
            need.intersect_with(link);
            need.difference_with(x.neighbors(v));
            need
        };
        if link.ones().all(|v| needs(v).is_clear()) {
            return None;
        }
        let c0 = c0_adjacency(x, w, s);
        link.ones().find_map(|v| {
            let mut bad = needs(v);
            bad.difference_with(&c0[v]);
            bad.minimum().map(|u| Condition4Witness {
                simplex: x.key(s),
                pair: (x.label(v).to_string(), x.label(u).to_string()),
            })
        })
    });
    Condition4 { pass: witness.is_none(), simplices_checked: ids.len(), witness }
}

fn diagnostics(
    x: &FlagComplex,
    w: &XGraph,
    classes: &ClassIndex,
    table: &RelationTable,
    diam: &[Bound],
    delta_star: Option<Bound>,
    opts: &VerifyOptions,
) -> Result<Diagnostics> {
    let aug_connected = w.augmented_graph().metric().is_connected();
    let ys: Vec<(ClassValue, bool)> = (0..classes.len())
        .into_par_iter()
        .map(|c| {
            let m = y_space(w, classes, c).metric();
            let value = if !m.is_connected() || m.len() > opts.delta_cap {
                Bound::Infinite
            } else {
                Bound::half(four_point_twice(m.distances(), m.len()) as i64)
            };
            (ClassValue { class: classes.key(x, c), value }, m.is_connected())
        })
        .collect();
    let y_connected = !aug_connected || ys.iter().all(|(_, c)| *c);
    let c0_equals_c = (0..classes.simplices().len()).into_par_iter().all(|i| match classes.class_of_index(i) {
        None => true,
        Some(c) => {
            let s = &classes.simplices()[i];
            let link = &classes.class(c).link;
            let c0 = Graph::induced(&c0_adjacency(x, w, s), link);
            c0 == Graph::induced(w.augmented_adjacency(), link)
        }
    });
    let nesting_realized = match delta_star {
        None => true,
        Some(t) => nesting_realized(x, classes, table, diam, t),
    };
    let super_bgi = crate::hhs::super_bgi_constant(w, classes);
    Ok(Diagnostics { y_delta: ys.into_iter().map(|(v, _)| v).collect(), y_connected, c0_equals_c, nesting_realized, super_bgi })
}

/// For nested `[Σ] ⊏ [Δ]` with `diam C(Σ) ≥ t`, `[Σ] = [Δ⋆Π]` for a simplex `Π` of `Lk(Δ)`.
pub fn nesting_realized(x: &FlagComplex, classes: &ClassIndex, table: &RelationTable, diam: &[Bound], t: Bound) -> bool {
    let k = classes.len();
    (0..k).into_par_iter().all(|d| {
        let ld = &classes.class(d).link;
        (0..k).filter(|&s| table.strictly_nested(s, d) && diam[s] >= t).all(|s| {
            let ls = &classes.class(s).link;
            let mut cand = x.common_neighbors(ls);
            cand.intersect_with(ld);
            find_clique(x, &cand, ld, &|tt: &VertexSet| tt == ls).is_some()
        })
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct LinkConstants {
    pub class: String,
    pub delta: Bound,
    pub lambda: Bound,
}

#[derive(Clone, Debug, Serialize)]
pub struct Decomposition {
    pub delta: String,
    pub sigma: String,
    pub pi: String,
    pub pi_prime: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairKeys {
    pub delta: String,
    pub sigma: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ThmAReport {
    pub verdict: Verdict,
    /// Constants of each augmented link; finite instances only, never asymptotic.
    pub finite_constants: Vec<LinkConstants>,
    pub constants_finite: bool,
    pub intersections_pass: bool,
    pub intersection_pairs: usize,
    pub intersection_failure_count: usize,
    pub intersection_failures: Vec<PairKeys>,
    pub decompositions: Vec<Decomposition>,
    pub connectivity_pass: bool,
    pub connectivity_failures: Vec<String>,
}

/// Checks the link conditions with extra link edges `ℰ` per class (keyed by class id).
pub fn check_thm_a(
    x: &FlagComplex,
    extra: &BTreeMap<usize, Vec<(usize, usize)>>,
    action: Option<&[Permutation]>,
    opts: &VerifyOptions,
) -> Result<ThmAReport> {
    let classes = ClassIndex::new(x)?;
    let k = classes.len();
    for (&c, edges) in extra {
        if c >= k {
            return Err(Error::BadParameters(format!("no class #{c}")));
        }
        let link = &classes.class(c).link;
        for &(a, b) in edges {
            if a == b || !link.contains(a) || !link.contains(b) {
                return Err(Error::EdgeOutsideLink(format!("{{{},{}}}", x.label(a), x.label(b))));
            }
        }
    }
    let group = match action {
        Some(gens) if !gens.is_empty() => Some(group_elements(x, gens, 50_000)?),
        _ => None,
    };

    let n = x.vertex_count();
    let finite_constants: Vec<LinkConstants> = (0..k)
        .into_par_iter()
        .map(|c| {
            let cls = classes.class(c);
            let mut edges: Vec<(usize, usize)> = extra.get(&c).cloned().unwrap_or_default();
            if let Some(group) = &group {
                edges = stabilizer_closure(&cls.link, &edges, group);
            }
            let mut link_adj: Vec<VertexSet> = (0..n)
                .map(|v| {
                    let mut r = x.neighbors(v).clone();
                    r.intersect_with(&cls.link);
                    r
                })
                .collect();
            let mut amb_mask = x.full_set();
            amb_mask.difference_with(&cls.saturation);
            let mut amb_adj: Vec<VertexSet> = (0..n)
                .map(|v| {
                    let mut r = x.neighbors(v).clone();
                    r.intersect_with(&amb_mask);
                    r
                })
                .collect();
            for &(a, b) in &edges {
                for adj in [&mut link_adj, &mut amb_adj] {
                    adj[a].insert(b);
                    adj[b].insert(a);
                }
            }
            let inner = Graph::induced(&link_adj, &cls.link).metric();
            let outer = Graph::induced(&amb_adj, &amb_mask);
            let delta = if inner.is_connected() {
                Bound::Finite(gromov_delta(&inner, opts.delta_cap)?)
            } else {
                Bound::Infinite
            };
            let rows: Vec<Vec<u32>> = inner.ids().iter().map(|&v| outer.bfs(outer.local(v).expect("link avoids Sat"))).collect();
            let mut worst: Option<(u64, u64)> = None;
            let mut lambda = Bound::int(1);
            'pairs: for i in 0..inner.len() {
                for j in i + 1..inner.len() {
                    let da = inner.d(i, j);
                    let db = rows[i][outer.local(inner.ids()[j]).expect("link avoids Sat")];
                    if da == INF || db == INF {
                        lambda = Bound::Infinite;
                        break 'pairs;
                    }
                    let (p, q) = (da as u64, db as u64 + 1);
                    if worst.is_none_or(|(bp, bq)| p * bq > bp * q) {
                        worst = Some((p, q));
                    }
                }
            }
            if lambda.is_finite() {
                if let Some((p, q)) = worst {
                    lambda = Bound::Finite(Rational::new(p as i64, q as i64).max(Rational::from_integer(1)));
                }
            }
            Ok(LinkConstants { class: classes.key(x, c), delta, lambda })
        })
        .collect::<Result<_>>()?;
    let constants_finite = finite_constants.iter().all(|c| c.delta.is_finite() && c.lambda.is_finite());

    let results: Vec<Vec<(usize, Option<(Vec<usize>, Vec<usize>)>)>> = (0..k)
        .into_par_iter()
        .map(|d| (0..k).map(|s| (s, intersection_decomposition(x, &classes, d, s))).collect())
        .collect();
    let mut intersection_failures = Vec::new();
    let mut failure_count = 0;
    let mut decompositions = Vec::new();
    for (d, row) in results.into_iter().enumerate() {
        for (s, found) in row {
            match found {
                None => {
                    failure_count += 1;
                    if intersection_failures.len() < opts.witness_limit {
                        intersection_failures.push(PairKeys { delta: classes.key(x, d), sigma: classes.key(x, s) });
                    }
                }
                Some((pi, pi_prime)) => {
                    if d != s && decompositions.len() < opts.witness_limit {
                        decompositions.push(Decomposition {
                            delta: classes.key(x, d),
                            sigma: classes.key(x, s),
                            pi: x.key(&Simplex::new(pi)),
                            pi_prime: x.key(&Simplex::new(pi_prime)),
                        });
                    }
                }
            }
        }
    }
    let connectivity_failures: Vec<String> = (0..k)
        .filter(|&c| {
            let cls = classes.class(c);
            !cls.almost_maximal && x.subcomplex(cls.link.clone()).components() != 1
        })
        .map(|c| classes.key(x, c))
        .collect();
    let intersections_pass = failure_count == 0;
    let connectivity_pass = connectivity_failures.is_empty();
    Ok(ThmAReport {
        verdict: Verdict::from_bool(constants_finite && intersections_pass && connectivity_pass),
        finite_constants,
        constants_finite,
        intersections_pass,
        intersection_pairs: k * k,
        intersection_failure_count: failure_count,
        intersection_failures,
        decompositions,
        connectivity_pass,
        connectivity_failures,
    })
}

/// `(Π, Π')` with `Lk(Δ) ∩ Lk(Σ) = Lk(Δ⋆Π) ⋆ Π'`, searched with `Π'` among
/// the join factors of the intersection.
pub fn intersection_decomposition(
    x: &FlagComplex,
    classes: &ClassIndex,
    d: usize,
    s: usize,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let ld = &classes.class(d).link;
    let mut inter = ld.clone();
    inter.intersect_with(&classes.class(s).link);
    let factors: Vec<usize> = inter
        .ones()
        .filter(|&v| {
            let mut rest = inter.clone();
            rest.remove(v);
            rest.is_subset(x.neighbors(v))
        })
        .collect();
    // subsets of the factors, by size then lexicographically
    let mut subsets: Vec<Vec<usize>> = (0u64..1 << factors.len().min(20))
        .map(|mask| factors.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect())
        .collect();
    subsets.sort_by(|a: &Vec<usize>, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    for pi_prime in subsets {
        let mut target = inter.clone();
        for &v in &pi_prime {
            target.remove(v);
        }
        let mut cand = x.common_neighbors(&target);
        cand.intersect_with(ld);
        let test = |t: &VertexSet| *t == target;
        if let Some(pi) = find_clique(x, &cand, ld, &test) {
            let pi = first_clique(x, &cand, ld, &test, 10_000).unwrap_or(pi);
            return Some((pi, pi_prime));
        }
    }
    None
}

fn stabilizer_closure(link: &VertexSet, edges: &[(usize, usize)], group: &[Permutation]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for g in group.iter().filter(|g| g.preserves_set(link)) {
        for &(a, b) in edges {
            let (p, q) = (g.apply(a), g.apply(b));
            out.push((p.min(q), p.max(q)));
        }
    }
    out.extend(edges.iter().map(|&(a, b)| (a.min(b), a.max(b))));
    out.sort_unstable();
    out.dedup();
    out
}

/// `W` generated by link edges on almost-maximal classes: for every simplex
/// `Δ'` of an assigned class and edge `{v,w}`, joins `Δ'⋆v` and `Δ'⋆w`.
/// With an action, the result is closed under its generators.
pub fn build_w_from_link_edges(
    x: &FlagComplex,
    assignments: &BTreeMap<usize, Vec<(usize, usize)>>,
    action: Option<&[Permutation]>,
) -> Result<XGraph> {
    let classes = ClassIndex::new(x)?;
    let mut pairs = Vec::new();
    for (&c, edges) in assignments {
        if c >= classes.len() {
            return Err(Error::BadParameters(format!("no class #{c}")));
        }
        let cls = classes.class(c);
        let key = classes.key(x, c);
        if !cls.almost_maximal {
            return Err(Error::NotAlmostMaximal(key));
        }
        for &(a, b) in edges {
            for v in [a, b] {
                if !cls.link.contains(v) {
                    return Err(Error::EndpointOutsideLink { class: key.clone(), vertex: x.label(v).to_string() });
                }
            }
            for &m in &cls.members {
                let base = &classes.simplices()[m];
                let (sa, sb) = (base.with(a), base.with(b));
                let (pa, pb) = match (x.maximal_position(&sa), x.maximal_position(&sb)) {
                    (Some(p), Some(q)) => (p, q),
                    _ => return Err(Error::NotAlmostMaximal(format!("{} with {{{},{}}}", key, x.label(a), x.label(b)))),
                };
                if pa != pb {
                    pairs.push((pa.min(pb), pa.max(pb)));
                }
            }
        }
    }
    if let Some(gens) = action {
        for g in gens {
            g.check_simplicial(x).map_err(Error::ActionNotSimplicial)?;
        }
        let mut frontier = pairs.clone();
        let mut seen: std::collections::HashSet<(usize, usize)> = pairs.iter().copied().collect();
        while let Some((a, b)) = frontier.pop() {
            for g in gens {
                let ga = g.apply_maximal(x, a);
                let gb = g.apply_maximal(x, b);
                let e = (ga.min(gb), ga.max(gb));
                if seen.insert(e) {
                    pairs.push(e);
                    frontier.push(e);
                }
            }
        }
    }
    pairs.sort_unstable();
    pairs.dedup();
    XGraph::new(x, &pairs)
}
