//! Flag complexes, links, joins and saturations.
//!
//! Vertices are stored in label order, so a simplex is a sorted list of
//! vertex indices and index order agrees with label order.

use std::collections::HashMap;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

pub type VertexSet = FixedBitSet;

/// Default cap on the number of maximal simplices.
pub const MAX_MAXIMAL_SIMPLICES: usize = 100_000;

/// Sorted vertex indices. The empty simplex is a legitimate value.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(Vec<usize>);

impl Simplex {
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Simplex(vertices)
    }

    pub fn empty() -> Self {
        Simplex(Vec::new())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dimension(&self) -> i64 {
        self.0.len() as i64 - 1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Union with a disjoint simplex; the caller guarantees adjacency.
    pub fn join(&self, other: &Simplex) -> Simplex {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Simplex::new(v)
    }

    pub fn with(&self, v: usize) -> Simplex {
        let mut s = self.0.clone();
        if let Err(pos) = s.binary_search(&v) {
            s.insert(pos, v);
        }
        Simplex(s)
    }

    pub fn to_set(&self, n: usize) -> VertexSet {
        let mut set = VertexSet::with_capacity(n);
        for &v in &self.0 {
            set.insert(v);
        }
        set
    }
}

/// Canonical class-representative order: fewer vertices first, then lexicographic.
pub fn size_lex(a: &Simplex, b: &Simplex) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.0.cmp(&b.0))
}

#[derive(Clone)]
pub struct FlagComplex {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
    maximal: Vec<Simplex>,
    maximal_index: HashMap<Simplex, usize>,
}

impl fmt::Debug for FlagComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FlagComplex")
            .field("vertices", &self.labels.len())
            .field("edges", &self.edges.len())
            .field("maximal", &self.maximal.len())
            .finish()
    }
}

fn check_label(label: &str) -> Result<()> {
    if label.is_empty() || label.contains('|') {
        return Err(Error::InvalidLabel(label.to_string()));
    }
    Ok(())
}

impl FlagComplex {
    /// Builds the flag complex of a simple graph given by labels.
    pub fn build<S: AsRef<str>, T: AsRef<str>>(vertices: &[S], edges: &[(T, T)]) -> Result<Self> {
        Self::build_with_limit(vertices, edges, MAX_MAXIMAL_SIMPLICES)
    }

    pub fn build_with_limit<S: AsRef<str>, T: AsRef<str>>(
        vertices: &[S],
        edges: &[(T, T)],
        max_maximal: usize,
    ) -> Result<Self> {
        let mut labels: Vec<String> = Vec::with_capacity(vertices.len());
        for v in vertices {
            check_label(v.as_ref())?;
            labels.push(v.as_ref().to_string());
        }
        labels.sort();
        for w in labels.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateVertex(w[0].clone()));
            }
        }
        let index: HashMap<String, usize> =
            labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        let lookup = |l: &str| index.get(l).copied().ok_or_else(|| Error::UnknownVertex(l.to_string()));
        let mut pairs = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let (a, b) = (lookup(a.as_ref())?, lookup(b.as_ref())?);
            if a == b {
                return Err(Error::LoopEdge(labels[a].clone()));
            }
            pairs.push((a.min(b), a.max(b)));
        }
        pairs.sort_unstable();
        for w in pairs.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge(format!("{{{},{}}}", labels[w[0].0], labels[w[0].1])));
            }
        }
        Self::from_parts(labels, index, pairs, max_maximal)
    }

    /// Builds from labels already sorted and deduplicated, with index edges.
    pub fn from_indexed(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        for l in &labels {
            check_label(l)?;
        }
        let mut order: Vec<usize> = (0..labels.len()).collect();
        order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
        let mut rank = vec![0; labels.len()];
        for (r, &i) in order.iter().enumerate() {
            rank[i] = r;
        }
        let sorted: Vec<String> = order.iter().map(|&i| labels[i].clone()).collect();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateVertex(w[0].clone()));
            }
        }
        let mut pairs = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= labels.len() || b >= labels.len() {
                return Err(Error::UnknownVertex(format!("#{}", a.max(b))));
            }
            if a == b {
                return Err(Error::LoopEdge(labels[a].clone()));
            }
            let (a, b) = (rank[a], rank[b]);
            pairs.push((a.min(b), a.max(b)));
        }
        pairs.sort_unstable();
        pairs.dedup();
        let index = sorted.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        Self::from_parts(sorted, index, pairs, MAX_MAXIMAL_SIMPLICES)
    }

    fn from_parts(
        labels: Vec<String>,
        index: HashMap<String, usize>,
        edges: Vec<(usize, usize)>,
        max_maximal: usize,
    ) -> Result<Self> {
        let n = labels.len();
        let mut adj = vec![VertexSet::with_capacity(n); n];
        for &(a, b) in &edges {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        let maximal = maximal_cliques(&adj, max_maximal)?;
        let maximal_index = maximal.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        Ok(FlagComplex { labels, index, adj, edges, maximal, maximal_index })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.index.get(label).copied().ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn maximal_simplices(&self) -> &[Simplex] {
        &self.maximal
    }

    pub fn maximal_position(&self, s: &Simplex) -> Option<usize> {
        self.maximal_index.get(s).copied()
    }

    pub fn is_maximal(&self, s: &Simplex) -> bool {
        self.maximal_index.contains_key(s)
    }

    pub fn dimension(&self) -> i64 {
        self.maximal.iter().map(Simplex::dimension).max().unwrap_or(-1)
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::with_capacity(self.vertex_count())
    }

    pub fn full_set(&self) -> VertexSet {
        let mut s = self.empty_set();
        s.insert_range(..);
        s
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &a)| vertices[i + 1..].iter().all(|&b| self.adj[a].contains(b)))
    }

    pub fn simplex(&self, labels: &[&str]) -> Result<Simplex> {
        let vs = labels.iter().map(|l| self.vertex(l)).collect::<Result<Vec<_>>>()?;
        let s = Simplex::new(vs);
        if s.len() != labels.len() || !self.is_clique(s.vertices()) {
            return Err(Error::NotASimplex(labels.join("|")));
        }
        Ok(s)
    }

    /// Key of a simplex: sorted labels joined by `|`; the empty simplex is `""`.
    pub fn key(&self, s: &Simplex) -> String {
        self.set_labels(s.vertices().iter().copied()).join("|")
    }

    pub fn simplex_from_key(&self, key: &str) -> Result<Simplex> {
        if key.is_empty() {
            return Ok(Simplex::empty());
        }
        let parts: Vec<&str> = key.split('|').collect();
        self.simplex(&parts)
    }

    pub fn set_labels(&self, vs: impl IntoIterator<Item = usize>) -> Vec<String> {
        vs.into_iter().map(|v| self.labels[v].clone()).collect()
    }

    /// Vertices outside `set` adjacent to every vertex of `set`; all vertices when `set` is empty.
    pub fn common_neighbors(&self, set: &VertexSet) -> VertexSet {
        let mut out = self.full_set();
        for v in set.ones() {
            out.intersect_with(&self.adj[v]);
        }
        out.difference_with(set);
        out
    }

    pub fn link_set(&self, s: &Simplex) -> VertexSet {
        let mut out = self.full_set();
        for &v in s.vertices() {
            out.intersect_with(&self.adj[v]);
        }
        out
    }

    pub fn link(&self, s: &Simplex) -> Subcomplex<'_> {
        Subcomplex { complex: self, vertices: self.link_set(s) }
    }

    pub fn star(&self, s: &Simplex) -> Subcomplex<'_> {
        let mut v = self.link_set(s);
        for &x in s.vertices() {
            v.insert(x);
        }
        Subcomplex { complex: self, vertices: v }
    }

    pub fn subcomplex(&self, vertices: VertexSet) -> Subcomplex<'_> {
        Subcomplex { complex: self, vertices }
    }

    pub fn simplex_subcomplex(&self, s: &Simplex) -> Subcomplex<'_> {
        Subcomplex { complex: self, vertices: s.to_set(self.vertex_count()) }
    }

    /// Union of all simplices with the same link as `s`, found among the
    /// simplices of `Lk(Lk(s))`.
    pub fn saturation(&self, s: &Simplex) -> VertexSet {
        let link = self.link_set(s);
        let candidates = self.common_neighbors(&link);
        let mut sat = self.empty_set();
        for_each_clique(&self.adj, &candidates, |clique, clique_link| {
            if *clique_link == link {
                for &v in clique {
                    sat.insert(v);
                }
            }
        });
        sat
    }

    /// Maximal cliques of the subgraph induced on `within`, in lexicographic order.
    pub fn maximal_cliques_in(&self, within: &VertexSet) -> Vec<Simplex> {
        let mut adj = self.adj.clone();
        for (v, a) in adj.iter_mut().enumerate() {
            if within.contains(v) {
                a.intersect_with(within);
            } else {
                a.clear();
            }
        }
        let mut out = Vec::new();
        let mut r = Vec::new();
        let _ = bron_kerbosch(&adj, &mut r, within.clone(), self.empty_set(), &mut out, usize::MAX);
        out.sort();
        out
    }
}

/// Calls `f(clique, link)` for every clique of the subgraph induced on
/// `within`, including the empty clique; `link` is taken in the full graph.
pub fn for_each_clique<F: FnMut(&[usize], &VertexSet)>(adj: &[VertexSet], within: &VertexSet, mut f: F) {
    let n = adj.len();
    let mut full = VertexSet::with_capacity(n);
    full.insert_range(..);
    let mut stack = Vec::new();
    fn rec<F: FnMut(&[usize], &VertexSet)>(
        adj: &[VertexSet],
        within: &VertexSet,
        stack: &mut Vec<usize>,
        link: &VertexSet,
        start: usize,
        f: &mut F,
    ) {
        f(stack, link);
        let mut cand = link.clone();
        cand.intersect_with(within);
        for w in cand.ones().filter(|&w| w >= start) {
            let mut next = link.clone();
            next.intersect_with(&adj[w]);
            stack.push(w);
            rec(adj, within, stack, &next, w + 1, f);
            stack.pop();
        }
    }
    rec(adj, within, &mut stack, &full, 0, &mut f);
}

fn maximal_cliques(adj: &[VertexSet], limit: usize) -> Result<Vec<Simplex>> {
    let n = adj.len();
    let mut p = VertexSet::with_capacity(n);
    p.insert_range(..);
    let mut out = Vec::new();
    let mut r = Vec::new();
    bron_kerbosch(adj, &mut r, p, VertexSet::with_capacity(n), &mut out, limit)?;
    out.sort();
    Ok(out)
}

/// Bron–Kerbosch with Tomita pivoting.
fn bron_kerbosch(
    adj: &[VertexSet],
    r: &mut Vec<usize>,
    mut p: VertexSet,
    mut x: VertexSet,
    out: &mut Vec<Simplex>,
    limit: usize,
) -> Result<()> {
    if p.is_clear() {
        if x.is_clear() {
            if out.len() >= limit {
                return Err(Error::TooManyMaximalSimplices { limit });
            }
            out.push(Simplex::new(r.clone()));
        }
        return Ok(());
    }
    let pivot = p
        .ones()
        .chain(x.ones())
        .max_by_key(|&u| (p.intersection_count(&adj[u]), std::cmp::Reverse(u)))
        .expect("p is nonempty");
    let mut cand = p.clone();
    cand.difference_with(&adj[pivot]);
    for v in cand.ones() {
        let mut np = p.clone();
        np.intersect_with(&adj[v]);
        let mut nx = x.clone();
        nx.intersect_with(&adj[v]);
        r.push(v);
        bron_kerbosch(adj, r, np, nx, out, limit)?;
        r.pop();
        p.remove(v);
        x.insert(v);
    }
    Ok(())
}

/// A full subcomplex, identified with its vertex set.
#[derive(Clone)]
pub struct Subcomplex<'a> {
    complex: &'a FlagComplex,
    vertices: VertexSet,
}

impl<'a> Subcomplex<'a> {
    pub fn complex(&self) -> &'a FlagComplex {
        self.complex
    }

    pub fn vertex_set(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.vertices.ones().collect()
    }

    pub fn labels(&self) -> Vec<String> {
        self.complex.set_labels(self.vertices.ones())
    }

    pub fn len(&self) -> usize {
        self.vertices.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_clear()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(v)
    }

    pub fn is_subcomplex_of(&self, other: &Subcomplex<'_>) -> bool {
        self.vertices.is_subset(&other.vertices)
    }

    /// Vertices outside this subcomplex adjacent to all of it.
    pub fn link(&self) -> Subcomplex<'a> {
        Subcomplex { complex: self.complex, vertices: self.complex.common_neighbors(&self.vertices) }
    }

    /// Join with a disjoint, fully adjacent subcomplex; `∅ ⋆ K = K`.
    pub fn join(&self, other: &Subcomplex<'_>) -> Result<Subcomplex<'a>> {
        if !self.vertices.is_disjoint(&other.vertices) {
            return Err(Error::NotJoinable("subcomplexes intersect".into()));
        }
        for a in self.vertices.ones() {
            if !other.vertices.is_subset(&self.complex.adj[a]) {
                return Err(Error::NotJoinable(format!("`{}` is not adjacent to all of the other factor", self.complex.label(a))));
            }
        }
        let mut v = self.vertices.clone();
        v.union_with(&other.vertices);
        Ok(Subcomplex { complex: self.complex, vertices: v })
    }

    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        self.complex.maximal_cliques_in(&self.vertices)
    }

    /// The subcomplex as a standalone flag complex, with its vertex map to the parent.
    pub fn to_complex(&self) -> (FlagComplex, Vec<usize>) {
        let vs = self.vertices();
        let labels: Vec<String> = vs.iter().map(|&v| self.complex.labels[v].clone()).collect();
        let mut edges = Vec::new();
        for (i, &a) in vs.iter().enumerate() {
            for (j, &b) in vs.iter().enumerate().skip(i + 1) {
                if self.complex.adj[a].contains(b) {
                    edges.push((i, j));
                }
            }
        }
        let c = FlagComplex::from_indexed(labels, &edges).expect("labels come from a valid complex");
        (c, vs)
    }

    /// Number of connected components of the 1-skeleton.
    pub fn components(&self) -> usize {
        let mut seen = self.complex.empty_set();
        let mut count = 0;
        for s in self.vertices.ones() {
            if seen.contains(s) {
                continue;
            }
            count += 1;
            let mut stack = vec![s];
            seen.insert(s);
            while let Some(v) = stack.pop() {
                for w in self.complex.adj[v].intersection(&self.vertices) {
                    if !seen.put(w) {
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.vertices.ones().any(|v| self.complex.adj[v].is_disjoint(&self.vertices))
    }
}

impl PartialEq for Subcomplex<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.complex, other.complex) && self.vertices == other.vertices
    }
}

impl fmt::Debug for Subcomplex<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.labels()).finish()
    }
}
