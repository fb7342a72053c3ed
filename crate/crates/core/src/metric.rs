//! Unweighted graph metrics: BFS distances, the exact four-point δ,
//! quasi-isometric embedding constants and coarse closest-point projection.

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::VertexSet;
use crate::error::{Error, Result};
use crate::numeric::{Bound, Rational, INF};

/// Default cap on the number of vertices for a four-point scan.
pub const DELTA_VERTEX_CAP: usize = 400;

/// Simple undirected graph whose local vertices carry caller-defined ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    ids: Vec<usize>,
    adj: Vec<Vec<u32>>,
}

impl Graph {
    /// `ids` must be strictly increasing; edges use local indices.
    pub fn new(ids: Vec<usize>, edges: &[(usize, usize)]) -> Self {
        assert!(ids.windows(2).all(|w| w[0] < w[1]), "graph ids must be strictly increasing");
        let mut adj = vec![Vec::new(); ids.len()];
        for &(a, b) in edges {
            if a != b {
                adj[a].push(b as u32);
                adj[b].push(a as u32);
            }
        }
        for row in &mut adj {
            row.sort_unstable();
            row.dedup();
        }
        Graph { ids, adj }
    }

    /// Subgraph of a bitset adjacency induced on `mask`; ids are the vertex indices.
    pub fn induced(adj: &[VertexSet], mask: &VertexSet) -> Self {
        let ids: Vec<usize> = mask.ones().collect();
        let mut local = vec![u32::MAX; adj.len()];
        for (i, &v) in ids.iter().enumerate() {
            local[v] = i as u32;
        }
        let adj = ids
            .iter()
            .map(|&v| adj[v].intersection(mask).map(|w| local[w]).collect())
            .collect();
        Graph { ids, adj }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[usize] {
        &self.ids
    }

    pub fn id(&self, local: usize) -> usize {
        self.ids[local]
    }

    pub fn local(&self, id: usize) -> Option<usize> {
        self.ids.binary_search(&id).ok()
    }

    pub fn neighbors(&self, local: usize) -> &[u32] {
        &self.adj[local]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&(b as u32)).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as sorted id pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (a, row) in self.adj.iter().enumerate() {
            for &b in row.iter().filter(|&&b| b as usize > a) {
                out.push((self.ids[a], self.ids[b as usize]));
            }
        }
        out
    }

    pub fn bfs(&self, src: usize) -> Vec<u32> {
        let mut dist = vec![INF; self.len()];
        let mut queue = std::collections::VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(v) = queue.pop_front() {
            let d = dist[v] + 1;
            for &w in &self.adj[v] {
                let w = w as usize;
                if dist[w] == INF {
                    dist[w] = d;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn metric(&self) -> MetricGraph {
        let rows: Vec<Vec<u32>> = (0..self.len()).into_par_iter().map(|s| self.bfs(s)).collect();
        MetricGraph { graph: self.clone(), n: self.len(), dist: rows.concat() }
    }
}

/// A graph together with all pairwise distances.
#[derive(Clone, Debug)]
pub struct MetricGraph {
    graph: Graph,
    n: usize,
    dist: Vec<u32>,
}

impl MetricGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn ids(&self) -> &[usize] {
        self.graph.ids()
    }

    pub fn local(&self, id: usize) -> Option<usize> {
        self.graph.local(id)
    }

    pub fn d(&self, a: usize, b: usize) -> u32 {
        self.dist[a * self.n + b]
    }

    pub fn row(&self, a: usize) -> &[u32] {
        &self.dist[a * self.n..(a + 1) * self.n]
    }

    pub fn distances(&self) -> &[u32] {
        &self.dist
    }

    /// First pair (in local order) at infinite distance.
    pub fn disconnected_pair(&self) -> Option<(usize, usize)> {
        (0..self.n).find_map(|a| (a + 1..self.n).find(|&b| self.d(a, b) == INF).map(|b| (a, b)))
    }

    pub fn is_connected(&self) -> bool {
        self.disconnected_pair().is_none()
    }

    /// Largest distance; `INF` when disconnected, 0 when empty.
    pub fn diameter(&self) -> u32 {
        self.dist.iter().copied().max().unwrap_or(0)
    }

    /// Largest distance between two subsets of local vertices; `INF` if a pair is disconnected.
    pub fn set_diameter(&self, set: &[usize]) -> u32 {
        let mut best = 0;
        for (i, &a) in set.iter().enumerate() {
            for &b in &set[i + 1..] {
                best = best.max(self.d(a, b));
            }
        }
        best
    }

    /// Smallest distance between two sets; `INF` when either is empty.
    pub fn set_distance(&self, a: &[usize], b: &[usize]) -> u32 {
        let mut best = INF;
        for &x in a {
            let row = self.row(x);
            for &y in b {
                best = best.min(row[y]);
            }
        }
        best
    }
}

/// Twice the four-point δ of a finite distance matrix: the maximum, over
/// quadruples, of the largest of the three pair sums minus the middle one.
pub fn four_point_twice(dist: &[u32], n: usize) -> u32 {
    assert_eq!(dist.len(), n * n);
    (0..n)
        .into_par_iter()
        .map(|i| {
            let ri = &dist[i * n..(i + 1) * n];
            let mut best = 0u32;
            for j in i + 1..n {
                let rj = &dist[j * n..(j + 1) * n];
                let dij = ri[j];
                for k in j + 1..n {
                    let rk = &dist[k * n..(k + 1) * n];
                    let (dik, djk) = (ri[k], rj[k]);
                    for l in k + 1..n {
                        let a = dij + rk[l];
                        let b = dik + rj[l];
                        let c = ri[l] + djk;
                        let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
                        let gap = if c >= hi {
                            c - hi
                        } else if c >= lo {
                            hi - c
                        } else {
                            hi - lo
                        };
                        best = best.max(gap);
                    }
                }
            }
            best
        })
        .max()
        .unwrap_or(0)
}

/// Exact four-point δ, in halves. Errors if the graph is disconnected or too large.
pub fn gromov_delta(g: &MetricGraph, cap: usize) -> Result<Rational> {
    if g.len() > cap {
        return Err(Error::GraphTooLarge { size: g.len(), cap });
    }
    if let Some((a, b)) = g.disconnected_pair() {
        return Err(Error::Disconnected(format!("#{}", g.ids()[a]), format!("#{}", g.ids()[b])));
    }
    Ok(Rational::new(four_point_twice(g.distances(), g.len()) as i64, 2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct QiReport {
    /// Smallest λ ≥ 1 with `d_A ≤ λ·d_B + λ` on all pairs.
    pub lambda: Bound,
    /// Worst pair, as ids; `None` when A has fewer than two vertices.
    pub witness: Option<(usize, usize)>,
}

/// Constant of the inclusion of `a` into `b`; every id of `a` must be an id of `b`.
pub fn qi_constants(b: &MetricGraph, a: &MetricGraph) -> Result<QiReport> {
    let map = a
        .ids()
        .iter()
        .map(|&id| b.local(id).ok_or_else(|| Error::UnknownVertex(format!("#{id}"))))
        .collect::<Result<Vec<_>>>()?;
    // (d_A, d_B + 1) of the worst pair so far
    let mut best: Option<(u64, u64, usize, usize)> = None;
    for x in 0..a.len() {
        for y in x + 1..a.len() {
            let (da, db) = (a.d(x, y), b.d(map[x], map[y]));
            if da == INF || db == INF {
                return Ok(QiReport { lambda: Bound::Infinite, witness: Some((a.ids()[x], a.ids()[y])) });
            }
            let (p, q) = (da as u64, db as u64 + 1);
            if best.is_none_or(|(bp, bq, _, _)| p * bq > bp * q) {
                best = Some((p, q, x, y));
            }
        }
    }
    Ok(match best {
        None => QiReport { lambda: Bound::int(1), witness: None },
        Some((p, q, x, y)) => {
            let r = Rational::new(p as i64, q as i64).max(Rational::from_integer(1));
            QiReport { lambda: Bound::Finite(r), witness: Some((a.ids()[x], a.ids()[y])) }
        }
    })
}

/// `{y ∈ S : d(x,y) ≤ d(x,S) + 1}` in local indices.
pub fn coarse_projection(g: &MetricGraph, x: usize, target: &[usize]) -> Result<Vec<usize>> {
    project_row(g.row(x), target).ok_or_else(|| {
        if target.is_empty() {
            Error::EmptyTarget
        } else {
            Error::Unreachable(format!("#{}", g.ids()[x]))
        }
    })
}

/// Projection from a row of distances; `None` if the target is empty or unreachable.
pub fn project_row(row: &[u32], target: &[usize]) -> Option<Vec<usize>> {
    let m = target.iter().map(|&t| row[t]).min()?;
    if m == INF {
        return None;
    }
    let mut out: Vec<usize> = target.iter().copied().filter(|&t| row[t] <= m + 1).collect();
    out.sort_unstable();
    Some(out)
}
