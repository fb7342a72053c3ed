//! Projections to the spaces `C(Δ)` and the measured constants of the
//! resulting hierarchy.

use rayon::prelude::*;
use serde::Serialize;

use crate::classes::ClassIndex;
use crate::complex::{FlagComplex, Simplex};
use crate::error::{Error, Result};
use crate::geometry::ClassGeometry;
use crate::metric::MetricGraph;
use crate::numeric::{Bound, Rational, INF};
use crate::relations::{Relation, RelationTable};
use crate::spaces::{y_space, XGraph};

/// A value of `ρ`: a subset of `C(Δ)`, or a partial map `C(Δ') → C(Δ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rho {
    Set(Vec<usize>),
    /// For each vertex of the source space, its image or `None` where undefined.
    Map(Vec<(usize, Option<Vec<usize>>)>),
}

/// Projection data for `(X, W)`; all sets are local indices of `C(Δ)`
/// unless a method says otherwise.
pub struct Hhs<'a> {
    pub x: &'a FlagComplex,
    pub w: &'a XGraph,
    pub classes: ClassIndex,
    pub table: RelationTable,
    pub geo: Vec<ClassGeometry>,
    /// `proj[c][v]`: projection of vertex `v` to `C(c)`; `None` outside `Y_c` or when unreachable.
    proj: Vec<Vec<Option<Vec<usize>>>>,
    pi: Vec<Vec<Vec<usize>>>,
    rho_sets: Vec<Option<Vec<usize>>>,
    w_metric: MetricGraph,
}

impl<'a> Hhs<'a> {
    pub fn new(x: &'a FlagComplex, w: &'a XGraph) -> Result<Self> {
        let classes = ClassIndex::new(x)?;
        let table = RelationTable::new(&classes);
        let geo = ClassGeometry::all(w, &classes);
        let n = x.vertex_count();
        let m = w.vertex_count();
        let k = classes.len();
        let proj: Vec<Vec<Option<Vec<usize>>>> =
            geo.par_iter().map(|g| (0..n).map(|v| g.project(v)).collect()).collect();
        let union = |c: usize, vs: &mut dyn Iterator<Item = usize>| -> Vec<usize> {
            let mut out: Vec<usize> = vs.filter_map(|v| proj[c][v].clone()).flatten().collect();
            out.sort_unstable();
            out.dedup();
            out
        };
        let pi: Vec<Vec<Vec<usize>>> =
            (0..k).map(|c| (0..m).map(|i| union(c, &mut w.maximal(i).vertices().iter().copied())).collect()).collect();
        let mut rho_sets = vec![None; k * k];
        for src in 0..k {
            for dst in 0..k {
                if matches!(table.relation(src, dst), Relation::Transverse | Relation::NestedIn) {
                    rho_sets[src * k + dst] = Some(union(dst, &mut classes.class(src).saturation.ones()));
                }
            }
        }
        let w_metric = w.w_graph().metric();
        Ok(Hhs { x, w, classes, table, geo, proj, pi, rho_sets, w_metric })
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn w_count(&self) -> usize {
        self.w.vertex_count()
    }

    pub fn w_metric(&self) -> &MetricGraph {
        &self.w_metric
    }

    pub fn key(&self, c: usize) -> String {
        self.classes.key(self.x, c)
    }

    /// `π_c(w)` in local indices of `C(c)`.
    pub fn pi(&self, c: usize, wv: usize) -> &[usize] {
        &self.pi[c][wv]
    }

    /// `π_c(w)` as vertices of `X`.
    pub fn pi_vertices(&self, c: usize, wv: usize) -> Vec<usize> {
        self.pi[c][wv].iter().map(|&i| self.geo[c].link[i]).collect()
    }

    /// Projection of a vertex of `X` to `C(c)`.
    pub fn project(&self, c: usize, v: usize) -> Option<&[usize]> {
        self.proj[c][v].as_deref()
    }

    /// `ρ^{src}_{dst}` as a set, defined for transverse pairs and `src ⊏ dst`.
    pub fn rho_set(&self, src: usize, dst: usize) -> Option<&[usize]> {
        self.rho_sets[src * self.classes.len() + dst].as_deref()
    }

    pub fn rho(&self, src: usize, dst: usize) -> Result<Rho> {
        match self.table.relation(src, dst) {
            Relation::Equal => Err(Error::EqualClasses(self.key(src))),
            Relation::Orthogonal => Err(Error::OrthogonalPair(self.key(src), self.key(dst))),
            Relation::Transverse | Relation::NestedIn => {
                Ok(Rho::Set(self.rho_set(src, dst).expect("defined").to_vec()))
            }
            Relation::Contains => Ok(Rho::Map(
                self.geo[src].link.iter().map(|&z| (z, self.proj[dst][z].clone())).collect(),
            )),
        }
    }

    /// Image under the partial map `ρ^{src}_{dst}` (`dst ⊏ src`) of a set of local vertices of `C(src)`.
    pub fn rho_image(&self, src: usize, dst: usize, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> =
            set.iter().filter_map(|&i| self.proj[dst][self.geo[src].link[i]].clone()).flatten().collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Set distance in `C(c)`.
    pub fn dist(&self, c: usize, a: &[usize], b: &[usize]) -> u32 {
        self.geo[c].c.set_distance(a, b)
    }

    pub fn diam(&self, c: usize, a: &[usize]) -> u32 {
        self.geo[c].c.set_diameter(a)
    }

    /// `d_c(π_c(a), π_c(b))` for W-vertices.
    pub fn d_u(&self, c: usize, a: usize, b: usize) -> u32 {
        self.dist(c, &self.pi[c][a], &self.pi[c][b])
    }

    pub fn d_w(&self, a: usize, b: usize) -> u32 {
        self.w_metric.d(a, b)
    }

    /// `π_U(w)` for every class.
    pub fn true_tuple(&self, wv: usize) -> Vec<Vec<usize>> {
        (0..self.class_count()).map(|c| self.pi[c][wv].clone()).collect()
    }

    /// `[c][a * m + b]` = `d_c(a, b)`.
    fn d_u_table(&self) -> Vec<Vec<u32>> {
        let m = self.w_count();
        (0..self.class_count())
            .into_par_iter()
            .map(|c| {
                let mut t = vec![0; m * m];
                for a in 0..m {
                    for b in a + 1..m {
                        let d = self.d_u(c, a, b);
                        t[a * m + b] = d;
                        t[b * m + a] = d;
                    }
                }
                t
            })
            .collect()
    }
}

fn max_bound(a: Bound, b: Bound) -> Bound {
    a.max(b)
}

fn dist_bound(d: u32) -> Bound {
    Bound::from_dist(d)
}

#[derive(Clone, Debug, Serialize)]
pub struct BgiConstants {
    /// Bounded geodesic image constant.
    pub e: Bound,
    pub c_super: Bound,
    pub c_strong: Bound,
    pub c_strong_vacuous: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ThetaRow {
    pub kappa: u32,
    pub theta: Bound,
}

#[derive(Clone, Debug, Serialize)]
pub struct HhsConstants {
    pub xi: Bound,
    pub kappa0: Bound,
    pub rho_coherence: Bound,
    pub bgi: BgiConstants,
    /// Threshold used for the large-link count.
    pub large_links_e: Bound,
    /// Upper bound from a greedy choice of covering domains.
    pub large_links_lambda: Bound,
    pub alpha: Bound,
    pub alpha_exhaustive: bool,
    pub theta_u: Vec<ThetaRow>,
    /// Largest realization distance over `κ₀`-consistent tuples that differ
    /// from a true tuple in one coordinate; a lower bound for `θ(κ₀)`.
    pub theta_real: Bound,
    pub theta_real_tuples: usize,
    pub theta_real_exhaustive: bool,
}

/// Maximum number of (family, point choice) pairs scanned for `α`.
pub const ALPHA_BUDGET: usize = 200_000;

/// Maximum number of tuples scanned for `θ` realization.
pub const REALIZATION_BUDGET: usize = 4_000;

pub fn hhs_constants(h: &Hhs<'_>, kappa_grid: &[u32]) -> HhsConstants {
    let k = h.class_count();
    let m = h.w_count();
    let t = &h.table;

    // ξ
    let mut xi = Bound::zero();
    for c in 0..k {
        for wv in 0..m {
            xi = max_bound(xi, dist_bound(h.diam(c, h.pi(c, wv))));
        }
        for src in 0..k {
            if let Some(r) = h.rho_set(src, c) {
                xi = max_bound(xi, dist_bound(h.diam(c, r)));
            }
        }
    }

    // κ₀
    let kappa0 = (0..m)
        .into_par_iter()
        .map(|xv| {
            let mut worst = Bound::zero();
            for v in 0..k {
                for wc in 0..k {
                    match t.relation(v, wc) {
                        Relation::Transverse if v < wc => {
                            let a = h.dist(wc, h.pi(wc, xv), h.rho_set(v, wc).unwrap());
                            let b = h.dist(v, h.pi(v, xv), h.rho_set(wc, v).unwrap());
                            worst = worst.max(dist_bound(a.min(b)));
                        }
                        Relation::NestedIn => {
                            let a = h.dist(wc, h.pi(wc, xv), h.rho_set(v, wc).unwrap());
                            let mut union = h.pi(v, xv).to_vec();
                            union.extend(h.rho_image(wc, v, h.pi(wc, xv)));
                            union.sort_unstable();
                            union.dedup();
                            let b = h.diam(v, &union);
                            worst = worst.max(dist_bound(a.min(b)));
                        }
                        _ => {}
                    }
                }
            }
            worst
        })
        .max()
        .unwrap_or(Bound::zero());

    // ρ-coherence: U ⊏ V, and V ⊏ W or V ⋔ W with U not transverse to W
    let rho_coherence = (0..k)
        .into_par_iter()
        .map(|u| {
            let mut worst = Bound::zero();
            for v in (0..k).filter(|&v| t.strictly_nested(u, v)) {
                for wc in 0..k {
                    let vw = t.relation(v, wc);
                    let ok = vw == Relation::NestedIn || (vw == Relation::Transverse && !t.transverse(u, wc));
                    if !ok {
                        continue;
                    }
                    if let (Some(a), Some(b)) = (h.rho_set(u, wc), h.rho_set(v, wc)) {
                        worst = worst.max(dist_bound(h.dist(wc, a, b)));
                    }
                }
            }
            worst
        })
        .max()
        .unwrap_or(Bound::zero());

    let bgi = bgi_constants(h);
    let du = h.d_u_table();

    // large links
    let large_links_e = [bgi.e, xi, kappa0, Bound::int(1)].into_iter().max().unwrap();
    let large_links_lambda = match large_links_e {
        Bound::Infinite => Bound::Infinite,
        Bound::Finite(e) => (0..k)
            .into_par_iter()
            .map(|wc| {
                let below: Vec<usize> = (0..k).filter(|&s| t.strictly_nested(s, wc)).collect();
                let mut worst = Bound::int(1);
                for a in 0..m {
                    for b in a..m {
                        let far: Vec<usize> = below
                            .iter()
                            .copied()
                            .filter(|&s| Rational::from_integer(du[s][a * m + b] as i64) >= e || du[s][a * m + b] == INF)
                            .collect();
                        if far.is_empty() {
                            continue;
                        }
                        let tops: Vec<usize> = far
                            .iter()
                            .copied()
                            .filter(|&s| !far.iter().any(|&r| t.strictly_nested(s, r)))
                            .collect();
                        let d = du[wc][a * m + b];
                        if d == INF {
                            return Bound::Infinite;
                        }
                        let reach = tops
                            .iter()
                            .map(|&s| h.dist(wc, h.pi(wc, a), h.rho_set(s, wc).unwrap()))
                            .max()
                            .unwrap_or(0);
                        if reach == INF {
                            return Bound::Infinite;
                        }
                        let denom = d as i64 + 1;
                        let need = Rational::new(tops.len() as i64, denom).max(Rational::new(reach as i64, denom));
                        worst = worst.max(Bound::Finite(need));
                    }
                }
                worst
            })
            .max()
            .unwrap_or(Bound::int(1)),
    };

    let (alpha, alpha_exhaustive) = partial_realization(h);

    let pair_max: Vec<(u32, u32)> = (0..m)
        .flat_map(|a| (a + 1..m).map(move |b| (a, b)))
        .map(|(a, b)| ((0..k).map(|c| du[c][a * m + b]).max().unwrap_or(0), h.d_w(a, b)))
        .collect();
    let theta_u = kappa_grid
        .iter()
        .map(|&kappa| {
            let theta = pair_max
                .iter()
                .filter(|(mx, _)| *mx <= kappa)
                .map(|&(_, d)| dist_bound(d))
                .max()
                .unwrap_or(Bound::zero());
            ThetaRow { kappa, theta }
        })
        .collect();

    let (theta_real, theta_real_tuples, theta_real_exhaustive) = realization_scan(h, kappa0);

    HhsConstants {
        xi,
        kappa0,
        rho_coherence,
        bgi,
        large_links_e,
        large_links_lambda,
        alpha,
        alpha_exhaustive,
        theta_u,
        theta_real,
        theta_real_tuples,
        theta_real_exhaustive,
    }
}

/// Single-coordinate perturbations of true tuples, kept when their
/// consistency is at most `kappa`.
fn realization_scan(h: &Hhs<'_>, kappa: Bound) -> (Bound, usize, bool) {
    let k = h.class_count();
    let m = h.w_count();
    let candidates: Vec<(usize, usize, usize)> = (0..m)
        .flat_map(|wv| (0..k).flat_map(move |c| (0..h.geo[c].link.len()).map(move |i| (wv, c, i))))
        .filter(|&(wv, c, i)| h.pi(c, wv) != [i])
        .collect();
    let exhaustive = candidates.len() <= REALIZATION_BUDGET;
    let results: Vec<Option<u32>> = candidates[..candidates.len().min(REALIZATION_BUDGET)]
        .par_iter()
        .map(|&(wv, c, i)| {
            let mut local: Vec<Vec<usize>> = (0..k).map(|u| h.pi(u, wv).to_vec()).collect();
            local[c] = vec![i];
            if tuple_consistency(h, &local) > kappa {
                return None;
            }
            (0..m).map(|xv| (0..k).map(|u| h.dist(u, h.pi(u, xv), &local[u])).max().unwrap_or(0)).min()
        })
        .collect();
    let kept: Vec<u32> = results.into_iter().flatten().collect();
    let theta = kept.iter().map(|&d| dist_bound(d)).max().unwrap_or(Bound::zero());
    (theta, kept.len(), exhaustive)
}

/// `θ_u(κ)` at an arbitrary `κ`: the largest `d_W` over pairs with every `d_U ≤ κ`.
pub fn uniqueness_bound(h: &Hhs<'_>, kappa: u32) -> Bound {
    let m = h.w_count();
    let mut worst = Bound::zero();
    for a in 0..m {
        for b in a + 1..m {
            if (0..h.class_count()).all(|c| h.d_u(c, a, b) <= kappa) {
                worst = worst.max(dist_bound(h.d_w(a, b)));
            }
        }
    }
    worst
}

fn partial_realization(h: &Hhs<'_>) -> (Bound, bool) {
    let k = h.class_count();
    let m = h.w_count();
    let t = &h.table;
    // deviation of x from the ρ-sets of V_j, independent of the chosen point
    let fixed: Vec<Vec<u32>> = (0..k)
        .into_par_iter()
        .map(|j| {
            (0..m)
                .map(|xv| {
                    (0..k)
                        .filter(|&v| matches!(t.relation(j, v), Relation::NestedIn | Relation::Transverse))
                        .map(|v| h.dist(v, h.pi(v, xv), h.rho_set(j, v).unwrap()))
                        .max()
                        .unwrap_or(0)
                })
                .collect()
        })
        .collect();
    let mut families: Vec<Vec<usize>> = Vec::new();
    fn extend(t: &RelationTable, k: usize, cur: &mut Vec<usize>, start: usize, out: &mut Vec<Vec<usize>>) {
        for c in start..k {
            if cur.iter().all(|&d| t.orthogonal(c, d)) {
                cur.push(c);
                out.push(cur.clone());
                extend(t, k, cur, c + 1, out);
                cur.pop();
            }
        }
    }
    extend(t, k, &mut Vec::new(), 0, &mut families);

    let mut alpha = Bound::zero();
    let mut spent = 0usize;
    for fam in &families {
        let sizes: Vec<usize> = fam.iter().map(|&c| h.geo[c].link.len()).collect();
        let mut idx = vec![0usize; fam.len()];
        loop {
            spent += 1;
            if spent > ALPHA_BUDGET {
                return (alpha, false);
            }
            let mut cands = fixedbitset::FixedBitSet::with_capacity(m);
            cands.insert_range(..);
            for (j, &c) in fam.iter().enumerate() {
                cands.intersect_with(h.w.containing(h.geo[c].link[idx[j]]));
            }
            let best = cands
                .ones()
                .map(|xv| {
                    fam.iter()
                        .enumerate()
                        .map(|(j, &c)| {
                            let p = [idx[j]];
                            h.dist(c, h.pi(c, xv), &p).max(fixed[c][xv])
                        })
                        .max()
                        .unwrap_or(0)
                })
                .min()
                .unwrap_or(INF);
            alpha = alpha.max(dist_bound(best));
            // next point choice
            let mut j = 0;
            while j < idx.len() {
                idx[j] += 1;
                if idx[j] < sizes[j] {
                    break;
                }
                idx[j] = 0;
                j += 1;
            }
            if j == idx.len() {
                break;
            }
        }
    }
    (alpha, true)
}

/// `E`, `C_super` and `C_strong`; geodesics are handled through the
/// geodesic DAG with a bottleneck recursion, never sampled.
pub fn bgi_constants(h: &Hhs<'_>) -> BgiConstants {
    let k = h.class_count();
    let t = &h.table;
    let pairs: Vec<(usize, usize)> =
        (0..k).flat_map(|v| (0..k).map(move |wc| (v, wc))).filter(|&(v, wc)| t.strictly_nested(v, wc)).collect();
    let e = pairs
        .par_iter()
        .map(|&(v, wc)| bgi_pair(h, v, wc))
        .max()
        .unwrap_or(Bound::zero());
    let (c_super, _) = sat_avoiding_constants(h.w, &h.classes, &h.geo, None);
    let (c_strong, qualifying) = sat_avoiding_constants(h.w, &h.classes, &h.geo, Some(h));
    BgiConstants { e, c_super, c_strong, c_strong_vacuous: qualifying == 0 }
}

fn bgi_pair(h: &Hhs<'_>, v: usize, wc: usize) -> Bound {
    let cw = &h.geo[wc].c;
    let n = cw.len();
    let target = h.rho_set(v, wc).expect("nested pairs have ρ-sets");
    let reach: Vec<u32> = (0..n).map(|z| cw.set_distance(&[z], target)).collect();
    let images: Vec<Vec<usize>> = (0..n).map(|z| h.rho_image(wc, v, &[z])).collect();
    let cv = &h.geo[v].c;
    let pair_diam = |a: usize, b: usize| {
        let mut u = images[a].clone();
        u.extend_from_slice(&images[b]);
        cv.set_diameter(&u)
    };
    let mut worst = Bound::zero();
    for src in 0..n {
        let row = cw.row(src);
        let mut order: Vec<usize> = (0..n).filter(|&z| row[z] != INF).collect();
        order.sort_by_key(|&z| row[z]);
        let mut best = vec![0u32; n];
        for &z in &order {
            best[z] = if z == src {
                reach[z]
            } else {
                let via = cw
                    .graph()
                    .neighbors(z)
                    .iter()
                    .map(|&p| p as usize)
                    .filter(|&p| row[p] != INF && row[p] + 1 == row[z])
                    .map(|p| best[p])
                    .max()
                    .unwrap_or(0);
                via.min(reach[z])
            };
            worst = worst.max(dist_bound(best[z].min(pair_diam(src, z))));
        }
    }
    worst
}

/// Over pairs joined by an `X^{+W}` geodesic avoiding `Sat(Δ)`: the largest
/// distance between their projections to `C(Δ)`. With `strong`, pairs are
/// W-vertices and the projections are `π`. Returns the constant and the
/// number of qualifying pairs.
fn sat_avoiding_constants(
    w: &XGraph,
    classes: &ClassIndex,
    geo: &[ClassGeometry],
    strong: Option<&Hhs<'_>>,
) -> (Bound, usize) {
    let full = w.augmented_graph().metric();
    let results: Vec<(Bound, usize)> = (0..classes.len())
        .into_par_iter()
        .map(|c| {
            let g = &geo[c];
            let y = y_space(w, classes, c);
            let yd: Vec<Vec<u32>> = (0..y.len()).map(|i| y.bfs(i)).collect();
            let avoids = |a: usize, b: usize| {
                let (la, lb) = (y.local(a).unwrap(), y.local(b).unwrap());
                yd[la][lb] != INF && yd[la][lb] == full.d(a, b)
            };
            let mut worst = Bound::zero();
            let mut count = 0;
            match strong {
                None => {
                    let ids = y.ids();
                    for (i, &a) in ids.iter().enumerate() {
                        for &b in &ids[i + 1..] {
                            if !avoids(a, b) {
                                continue;
                            }
                            count += 1;
                            let (pa, pb) = (g.project(a), g.project(b));
                            let d = match (pa, pb) {
                                (Some(pa), Some(pb)) => g.c.set_distance(&pa, &pb),
                                _ => INF,
                            };
                            worst = worst.max(dist_bound(d));
                        }
                    }
                }
                Some(h) => {
                    let m = w.vertex_count();
                    for p in 0..m {
                        for q in p + 1..m {
                            let qualifies = w.maximal(p).vertices().iter().any(|&a| {
                                g.y_mask.contains(a)
                                    && w.maximal(q)
                                        .vertices()
                                        .iter()
                                        .any(|&b| a != b && g.y_mask.contains(b) && avoids(a, b))
                            });
                            if qualifies {
                                count += 1;
                                worst = worst.max(dist_bound(h.d_u(c, p, q)));
                            }
                        }
                    }
                }
            }
            (worst, count)
        })
        .collect();
    let worst = results.iter().map(|r| r.0).max().unwrap_or(Bound::zero());
    (worst, results.iter().map(|r| r.1).sum())
}

/// Standalone `C_super`, used by the verifier diagnostics.
pub fn super_bgi_constant(w: &XGraph, classes: &ClassIndex) -> Bound {
    let geo = ClassGeometry::all(w, classes);
    sat_avoiding_constants(w, classes, &geo, None).0
}

#[derive(Clone, Debug, Serialize)]
pub struct DfFit {
    pub threshold: u32,
    pub k: Bound,
    pub c: Bound,
    pub pairs: usize,
    pub violations: usize,
}

/// Fits `K⁻¹·S − C ≤ d_W ≤ K·S + C` with `S = Σ_U [d_U]_s`.
pub fn distance_formula_fit(h: &Hhs<'_>, thresholds: &[u32]) -> Result<Vec<DfFit>> {
    distance_formula_fit_with(h, thresholds, &|_, _, _, d| d, Rational::from_integer(1))
}

/// As [`distance_formula_fit`], with each `d_U(a, b)` replaced by
/// `perturb(U, a, b, d_U)`, which must be within `(λ, λ)` of it.
pub fn distance_formula_fit_with(
    h: &Hhs<'_>,
    thresholds: &[u32],
    perturb: &(dyn Fn(usize, usize, usize, u32) -> u32 + Sync),
    lambda: Rational,
) -> Result<Vec<DfFit>> {
    let m = h.w_count();
    let k = h.class_count();
    let du = h.d_u_table();
    let mut pairs = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            let d = h.d_w(a, b);
            if d == INF {
                let ms = h.x.maximal_simplices();
                return Err(Error::Disconnected(h.x.key(&ms[a]), h.x.key(&ms[b])));
            }
            let mut hs = Vec::with_capacity(k);
            for c in 0..k {
                let orig = du[c][a * m + b];
                let p = perturb(c, a, b, orig);
                if orig != INF {
                    let (o, q) = (Rational::from_integer(orig as i64), Rational::from_integer(p as i64));
                    if q > lambda * o + lambda || o > lambda * q + lambda {
                        return Err(Error::BadParameters(format!("perturbed value {p} is not within λ of {orig}")));
                    }
                }
                hs.push(if orig == INF { INF } else { p });
            }
            pairs.push((d, hs));
        }
    }
    Ok(thresholds
        .iter()
        .map(|&s| {
            let sums: Vec<(i64, Option<i64>)> = pairs
                .iter()
                .map(|(d, hs)| {
                    let mut total = 0i64;
                    for &v in hs {
                        if v == INF {
                            return (*d as i64, None);
                        }
                        if v >= s {
                            total += v as i64;
                        }
                    }
                    (*d as i64, Some(total))
                })
                .collect();
            if sums.iter().any(|(_, s)| s.is_none()) {
                return DfFit { threshold: s, k: Bound::Infinite, c: Bound::Infinite, pairs: sums.len(), violations: 0 };
            }
            let one = Rational::from_integer(1);
            let mut kk = one;
            for &(d, sum) in &sums {
                let sum = sum.unwrap();
                kk = kk.max(Rational::new(d, sum + 1)).max(Rational::new(sum, d + 1));
            }
            let mut c = Rational::from_integer(0);
            for &(d, sum) in &sums {
                let (d, sum) = (Rational::from_integer(d), Rational::from_integer(sum.unwrap()));
                c = c.max(d - kk * sum).max(sum / kk - d);
            }
            let violations = sums
                .iter()
                .filter(|&&(d, sum)| {
                    let (d, sum) = (Rational::from_integer(d), Rational::from_integer(sum.unwrap()));
                    !(sum / kk - c <= d && d <= kk * sum + c)
                })
                .count();
            DfFit { threshold: s, k: Bound::Finite(kk), c: Bound::Finite(c), pairs: sums.len(), violations }
        })
        .collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct Realization {
    pub vertex: String,
    pub theta: Bound,
    pub consistency: Bound,
}

/// The W-vertex whose projections are closest to the tuple in the worst
/// coordinate. Tuple entries are vertex sets of `X`, one per class.
pub fn realize_tuple(h: &Hhs<'_>, tuple: &[Vec<usize>]) -> Result<Realization> {
    let k = h.class_count();
    if tuple.len() != k {
        return Err(Error::BadParameters(format!("tuple has {} entries, expected {k}", tuple.len())));
    }
    let local: Vec<Vec<usize>> = tuple
        .iter()
        .enumerate()
        .map(|(c, set)| {
            if set.is_empty() {
                return Err(Error::EmptyTarget);
            }
            let mut out = set
                .iter()
                .map(|&v| {
                    h.geo[c].link.binary_search(&v).map_err(|_| {
                        Error::BadParameters(format!("`{}` is not in the link of [{}]", h.x.label(v), h.key(c)))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            out.sort_unstable();
            out.dedup();
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let (best, theta) = (0..h.w_count())
        .map(|xv| (xv, (0..k).map(|c| h.dist(c, h.pi(c, xv), &local[c])).max().unwrap_or(0)))
        .min_by_key(|&(xv, d)| (d, xv))
        .ok_or(Error::EmptyTarget)?;
    Ok(Realization {
        vertex: h.x.key(h.w.maximal(best)),
        theta: dist_bound(theta),
        consistency: tuple_consistency(h, &local),
    })
}

/// Consistency constant of a tuple given in local indices.
pub fn tuple_consistency(h: &Hhs<'_>, b: &[Vec<usize>]) -> Bound {
    let k = h.class_count();
    let mut worst = Bound::zero();
    for c in 0..k {
        worst = worst.max(dist_bound(h.diam(c, &b[c])));
    }
    for v in 0..k {
        for wc in 0..k {
            match h.table.relation(v, wc) {
                Relation::Transverse if v < wc => {
                    let a = h.dist(wc, &b[wc], h.rho_set(v, wc).unwrap());
                    let c = h.dist(v, &b[v], h.rho_set(wc, v).unwrap());
                    worst = worst.max(dist_bound(a.min(c)));
                }
                Relation::NestedIn => {
                    let a = h.dist(wc, &b[wc], h.rho_set(v, wc).unwrap());
                    let mut u = b[v].clone();
                    u.extend(h.rho_image(wc, v, &b[wc]));
                    u.sort_unstable();
                    u.dedup();
                    worst = worst.max(dist_bound(a.min(h.diam(v, &u))));
                }
                _ => {}
            }
        }
    }
    worst
}

#[derive(Clone, Debug, Serialize)]
pub struct ProjectionEntry {
    pub class: String,
    pub w_vertex: String,
    pub image: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RhoEntry {
    pub from: String,
    pub to: String,
    pub relation: Relation,
    pub set: Option<Vec<String>>,
    /// Source vertex, then its image or `None` where the map is undefined.
    pub map: Option<Vec<(String, Option<Vec<String>>)>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProjectionTable {
    pub pi: Vec<ProjectionEntry>,
    pub rho: Vec<RhoEntry>,
}

pub fn projection_table(h: &Hhs<'_>) -> ProjectionTable {
    let x = h.x;
    let labels = |c: usize, set: &[usize]| -> Vec<String> {
        set.iter().map(|&i| x.label(h.geo[c].link[i]).to_string()).collect()
    };
    let mut pi = Vec::new();
    for c in 0..h.class_count() {
        for wv in 0..h.w_count() {
            pi.push(ProjectionEntry { class: h.key(c), w_vertex: x.key(h.w.maximal(wv)), image: labels(c, h.pi(c, wv)) });
        }
    }
    let mut rho = Vec::new();
    for src in 0..h.class_count() {
        for dst in 0..h.class_count() {
            let relation = h.table.relation(src, dst);
            match h.rho(src, dst) {
                Ok(Rho::Set(s)) => rho.push(RhoEntry {
                    from: h.key(src),
                    to: h.key(dst),
                    relation,
                    set: Some(labels(dst, &s)),
                    map: None,
                }),
                Ok(Rho::Map(entries)) => rho.push(RhoEntry {
                    from: h.key(src),
                    to: h.key(dst),
                    relation,
                    set: None,
                    map: Some(
                        entries
                            .into_iter()
                            .map(|(z, img)| (x.label(z).to_string(), img.map(|s| labels(dst, &s))))
                            .collect(),
                    ),
                }),
                Err(_) => {}
            }
        }
    }
    ProjectionTable { pi, rho }
}

/// `π` for a simplex-level query: the class of `delta` and a maximal simplex `w`.
pub fn pi_of(h: &Hhs<'_>, delta: &Simplex, w: &Simplex) -> Result<Vec<usize>> {
    let c = h.classes.class_of(h.x, delta).map_err(|e| match e {
        Error::MaximalSimplex(k) => Error::MaximalClass(k),
        e => e,
    })?;
    let wv = h.x.maximal_position(w).ok_or_else(|| Error::NotMaximal(h.x.key(w)))?;
    Ok(h.pi_vertices(c, wv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::WRule;

    #[test]
    fn transverse_rho_on_path() {
        let x = FlagComplex::build(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d")]).unwrap();
        let w = XGraph::from_keys(&x, &[("a|b", "b|c"), ("b|c", "c|d")]).unwrap();
        let h = Hhs::new(&x, &w).unwrap();
        let b = h.classes.class_by_key(&x, "b").unwrap();
        let c = h.classes.class_by_key(&x, "c").unwrap();
        let Rho::Set(s) = h.rho(c, b).unwrap() else { panic!("expected a set") };
        let got: Vec<&str> = s.iter().map(|&i| x.label(h.geo[b].link[i])).collect();
        assert_eq!(got, ["a", "c"]);
        assert!(matches!(h.rho(b, b), Err(Error::EqualClasses(_))));
    }

    #[test]
    fn projection_in_square_with_complete_w() {
        let x = FlagComplex::build(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]).unwrap();
        let w = XGraph::from_rule(&x, WRule::Complete);
        let h = Hhs::new(&x, &w).unwrap();
        let got = pi_of(&h, &x.simplex(&["b"]).unwrap(), &x.simplex(&["c", "d"]).unwrap()).unwrap();
        assert_eq!(x.set_labels(got), ["a", "c"]);
        let a = h.classes.class_by_key(&x, "a").unwrap();
        let b = h.classes.class_by_key(&x, "b").unwrap();
        assert_eq!(h.rho(a, b).unwrap_err(), Error::OrthogonalPair("a".into(), "b".into()));
        assert!(matches!(
            pi_of(&h, &x.simplex(&["b"]).unwrap(), &x.simplex(&["b"]).unwrap()),
            Err(Error::NotMaximal(_))
        ));
    }
}
