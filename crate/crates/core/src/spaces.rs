//! The graph `W` on maximal simplices, the augmented graph `X^{+W}`, and the
//! spaces `Y_Δ`, `C(Δ)`, `C₀(Δ)` and the coned intermediates built from them.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::classes::ClassIndex;
use crate::complex::{FlagComplex, Simplex, VertexSet};
use crate::error::{Error, Result};
use crate::metric::Graph;
use crate::relations::RelationTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WRule {
    None,
    Complete,
    /// Maximal simplices of equal dimension meeting in a common facet.
    SharedCodim1Face,
}

impl WRule {
    pub const ALL: [WRule; 3] = [WRule::None, WRule::Complete, WRule::SharedCodim1Face];

    pub fn name(self) -> &'static str {
        match self {
            WRule::None => "none",
            WRule::Complete => "complete",
            WRule::SharedCodim1Face => "shared_codim1_face",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(WRule::None),
            "complete" => Ok(WRule::Complete),
            "shared_codim1_face" | "shared-codim1-face" => Ok(WRule::SharedCodim1Face),
            _ => Err(Error::BadParameters(format!("unknown W rule `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeOrigin {
    pub complex: bool,
    pub w: bool,
}

/// A graph on the maximal simplices of a flag complex, with the induced
/// augmentation of the 1-skeleton.
#[derive(Clone, Debug)]
pub struct XGraph {
    maximal: Vec<Simplex>,
    maximal_sets: Vec<VertexSet>,
    w_edges: Vec<(usize, usize)>,
    w_adj: Vec<FixedBitSet>,
    containing: Vec<FixedBitSet>,
    x_adj: Vec<VertexSet>,
    w_induced: Vec<VertexSet>,
    aug: Vec<VertexSet>,
}

impl XGraph {
    /// `edges` index into `x.maximal_simplices()`.
    pub fn new(x: &FlagComplex, edges: &[(usize, usize)]) -> Result<Self> {
        let m = x.maximal_simplices().len();
        let mut pairs = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= m || b >= m {
                return Err(Error::NotMaximalSimplex(format!("#{}", a.max(b))));
            }
            if a == b {
                return Err(Error::LoopEdge(x.key(&x.maximal_simplices()[a])));
            }
            pairs.push((a.min(b), a.max(b)));
        }
        pairs.sort_unstable();
        for w in pairs.windows(2) {
            if w[0] == w[1] {
                let ms = x.maximal_simplices();
                return Err(Error::DuplicateEdge(format!("{{{},{}}}", x.key(&ms[w[0].0]), x.key(&ms[w[0].1]))));
            }
        }
        Ok(Self::from_sorted(x, pairs))
    }

    /// Edges given as pairs of maximal-simplex keys.
    pub fn from_keys<S: AsRef<str>>(x: &FlagComplex, edges: &[(S, S)]) -> Result<Self> {
        let resolve = |k: &str| -> Result<usize> {
            let s = x.simplex_from_key(k).map_err(|_| Error::NotMaximalSimplex(k.to_string()))?;
            x.maximal_position(&s).ok_or_else(|| Error::NotMaximalSimplex(k.to_string()))
        };
        let idx = edges
            .iter()
            .map(|(a, b)| Ok((resolve(a.as_ref())?, resolve(b.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(x, &idx)
    }

    pub fn from_rule(x: &FlagComplex, rule: WRule) -> Self {
        let ms = x.maximal_simplices();
        let m = ms.len();
        let mut pairs = Vec::new();
        match rule {
            WRule::None => {}
            WRule::Complete => {
                for a in 0..m {
                    for b in a + 1..m {
                        pairs.push((a, b));
                    }
                }
            }
            WRule::SharedCodim1Face => {
                let mut by_facet: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
                for (i, s) in ms.iter().enumerate() {
                    for skip in 0..s.len() {
                        let facet: Vec<usize> =
                            s.vertices().iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &v)| v).collect();
                        by_facet.entry(facet).or_default().push(i);
                    }
                }
                for group in by_facet.values() {
                    for (p, &a) in group.iter().enumerate() {
                        for &b in &group[p + 1..] {
                            pairs.push((a.min(b), a.max(b)));
                        }
                    }
                }
                pairs.sort_unstable();
                pairs.dedup();
            }
        }
        Self::from_sorted(x, pairs)
    }

    fn from_sorted(x: &FlagComplex, w_edges: Vec<(usize, usize)>) -> Self {
        let n = x.vertex_count();
        let maximal = x.maximal_simplices().to_vec();
        let m = maximal.len();
        let maximal_sets: Vec<VertexSet> = maximal.iter().map(|s| s.to_set(n)).collect();
        let mut w_adj = vec![FixedBitSet::with_capacity(m); m];
        let mut containing = vec![FixedBitSet::with_capacity(m); n];
        for (i, s) in maximal.iter().enumerate() {
            for &v in s.vertices() {
                containing[v].insert(i);
            }
        }
        let mut w_induced = vec![VertexSet::with_capacity(n); n];
        for &(a, b) in &w_edges {
            w_adj[a].insert(b);
            w_adj[b].insert(a);
            for &v in maximal[a].vertices() {
                w_induced[v].union_with(&maximal_sets[b]);
            }
            for &v in maximal[b].vertices() {
                w_induced[v].union_with(&maximal_sets[a]);
            }
        }
        for (v, row) in w_induced.iter_mut().enumerate() {
            row.remove(v);
        }
        let x_adj = x.adjacency().to_vec();
        let aug = x_adj
            .iter()
            .zip(&w_induced)
            .map(|(a, b)| {
                let mut r = a.clone();
                r.union_with(b);
                r
            })
            .collect();
        XGraph { maximal, maximal_sets, w_edges, w_adj, containing, x_adj, w_induced, aug }
    }

    pub fn vertex_count(&self) -> usize {
        self.maximal.len()
    }

    pub fn maximal(&self, i: usize) -> &Simplex {
        &self.maximal[i]
    }

    pub fn maximal_set(&self, i: usize) -> &VertexSet {
        &self.maximal_sets[i]
    }

    pub fn w_edges(&self) -> &[(usize, usize)] {
        &self.w_edges
    }

    pub fn w_adjacent(&self, a: usize, b: usize) -> bool {
        self.w_adj[a].contains(b)
    }

    pub fn w_neighbors(&self, a: usize) -> &FixedBitSet {
        &self.w_adj[a]
    }

    /// Maximal simplices containing `v`.
    pub fn containing(&self, v: usize) -> &FixedBitSet {
        &self.containing[v]
    }

    /// Maximal simplices containing every vertex of `s`.
    pub fn containing_simplex(&self, s: &Simplex) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.maximal.len());
        out.insert_range(..);
        for &v in s.vertices() {
            out.intersect_with(&self.containing[v]);
        }
        out
    }

    pub fn augmented_adjacency(&self) -> &[VertexSet] {
        &self.aug
    }

    pub fn w_induced_adjacency(&self) -> &[VertexSet] {
        &self.w_induced
    }

    pub fn edge_origin(&self, a: usize, b: usize) -> Option<EdgeOrigin> {
        let o = EdgeOrigin { complex: self.x_adj[a].contains(b), w: self.w_induced[a].contains(b) };
        (o.complex || o.w).then_some(o)
    }

    /// `X^{+W}` on all vertices.
    pub fn augmented_graph(&self) -> Graph {
        let mut all = VertexSet::with_capacity(self.aug.len());
        all.insert_range(..);
        Graph::induced(&self.aug, &all)
    }

    /// `W` itself; ids are maximal-simplex indices.
    pub fn w_graph(&self) -> Graph {
        let m = self.maximal.len();
        let mut all = FixedBitSet::with_capacity(m);
        all.insert_range(..);
        Graph::induced(&self.w_adj, &all)
    }

    pub fn w_edge_keys(&self, x: &FlagComplex) -> Vec<(String, String)> {
        self.w_edges.iter().map(|&(a, b)| (x.key(&self.maximal[a]), x.key(&self.maximal[b]))).collect()
    }
}

/// Which of the two cone-off graphs on `Lk(Δ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CKind {
    /// `Y_Δ` restricted to the link.
    Full,
    /// The link plus edges between W-adjacent maximal simplices containing `Δ`.
    Restricted,
}

/// `X^{+W}` minus the saturation of the class.
pub fn y_space(w: &XGraph, classes: &ClassIndex, class: usize) -> Graph {
    Graph::induced(w.augmented_adjacency(), &y_mask(w, classes, class))
}

pub fn y_mask(w: &XGraph, classes: &ClassIndex, class: usize) -> VertexSet {
    let mut mask = VertexSet::with_capacity(w.augmented_adjacency().len());
    mask.insert_range(..);
    mask.difference_with(&classes.class(class).saturation);
    mask
}

/// `Y_Δ` for a simplex; maximal simplices have no such space.
pub fn y_space_of(x: &FlagComplex, w: &XGraph, classes: &ClassIndex, s: &Simplex) -> Result<Graph> {
    let c = classes.class_of(x, s)?;
    Ok(y_space(w, classes, c))
}

/// `C(Δ)` for a class.
pub fn c_space(w: &XGraph, classes: &ClassIndex, class: usize) -> Graph {
    Graph::induced(w.augmented_adjacency(), &classes.class(class).link)
}

/// `C(Δ)` or `C₀(Δ)` for a simplex.
pub fn c_space_of(x: &FlagComplex, w: &XGraph, classes: &ClassIndex, s: &Simplex, kind: CKind) -> Result<Graph> {
    let c = classes.class_of(x, s)?;
    Ok(match kind {
        CKind::Full => c_space(w, classes, c),
        CKind::Restricted => c0_space(x, w, s),
    })
}

/// Edges of `C₀(Δ)` as a bitset adjacency over all vertices.
pub fn c0_adjacency(x: &FlagComplex, w: &XGraph, s: &Simplex) -> Vec<VertexSet> {
    let n = x.vertex_count();
    let link = x.link_set(s);
    let mut adj: Vec<VertexSet> = (0..n)
        .map(|v| {
            if link.contains(v) {
                let mut r = x.neighbors(v).clone();
                r.intersect_with(&link);
                r
            } else {
                VertexSet::with_capacity(n)
            }
        })
        .collect();
    let star = w.containing_simplex(s);
    let delta = s.to_set(n);
    for a in star.ones() {
        let mut rest_a = w.maximal_set(a).clone();
        rest_a.difference_with(&delta);
        for b in w.w_neighbors(a).intersection(&star) {
            let mut rest_b = w.maximal_set(b).clone();
            rest_b.difference_with(&delta);
            for v in rest_a.ones() {
                adj[v].union_with(&rest_b);
            }
        }
    }
    for (v, row) in adj.iter_mut().enumerate() {
        row.remove(v);
    }
    adj
}

pub fn c0_space(x: &FlagComplex, w: &XGraph, s: &Simplex) -> Graph {
    Graph::induced(&c0_adjacency(x, w, s), &x.link_set(s))
}

/// The link of `Δ` as a flag complex with the graph `W^Δ` on its maximal
/// simplices: `Σ ~ Σ'` iff `Δ⋆Σ` and `Δ⋆Σ'` are W-adjacent.
#[derive(Clone, Debug)]
pub struct LinkXGraph {
    pub complex: FlagComplex,
    pub to_parent: Vec<usize>,
    pub w: XGraph,
}

pub fn induced_link_graph(x: &FlagComplex, w: &XGraph, s: &Simplex) -> Result<LinkXGraph> {
    if x.is_maximal(s) {
        return Err(Error::MaximalSimplex(x.key(s)));
    }
    let (lk, to_parent) = x.link(s).to_complex();
    let lifted: Vec<usize> = lk
        .maximal_simplices()
        .iter()
        .map(|sigma| {
            let up = Simplex::new(sigma.vertices().iter().map(|&v| to_parent[v]).collect()).join(s);
            x.maximal_position(&up).expect("a maximal simplex of the link completes to a maximal simplex")
        })
        .collect();
    let mut edges = Vec::new();
    for i in 0..lifted.len() {
        for j in i + 1..lifted.len() {
            if w.w_adjacent(lifted[i], lifted[j]) {
                edges.push((i, j));
            }
        }
    }
    let lw = XGraph::new(&lk, &edges)?;
    Ok(LinkXGraph { complex: lk, to_parent, w: lw })
}

/// Whether the augmented link, mapped back into `X`, equals `C₀(Δ)`.
pub fn iota_check(x: &FlagComplex, w: &XGraph, s: &Simplex) -> Result<bool> {
    let lg = induced_link_graph(x, w, s)?;
    let mut mapped: Vec<(usize, usize)> = lg
        .w
        .augmented_graph()
        .edges()
        .into_iter()
        .map(|(a, b)| {
            let (p, q) = (lg.to_parent[a], lg.to_parent[b]);
            (p.min(q), p.max(q))
        })
        .collect();
    mapped.sort_unstable();
    Ok(mapped == c0_space(x, w, s).edges())
}

/// `Y^k_Δ`: `Y_Δ` with `Lk(Σ) ∩ Y_Δ` coned off for every `[Σ] ⊒ [Δ]` of co-level above `k`.
pub fn coned_intermediate(
    w: &XGraph,
    classes: &ClassIndex,
    table: &RelationTable,
    class: usize,
    k: usize,
) -> Result<Graph> {
    let colevel = table.colevel(class);
    if k > colevel {
        return Err(Error::BadLevel { level: k, colevel });
    }
    let mask = y_mask(w, classes, class);
    let mut adj: Vec<VertexSet> = w
        .augmented_adjacency()
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.intersect_with(&mask);
            r
        })
        .collect();
    for sigma in 0..classes.len() {
        if table.nested(class, sigma) && table.colevel(sigma) > k {
            let mut cone = classes.class(sigma).link.clone();
            cone.intersect_with(&mask);
            for v in cone.ones() {
                adj[v].union_with(&cone);
            }
        }
    }
    for (v, row) in adj.iter_mut().enumerate() {
        row.remove(v);
    }
    Ok(Graph::induced(&adj, &mask))
}
