//! Per-class metric data: `C(Δ)` with all its distances, and distances in
//! `Y_Δ` from every vertex of the link.

use rayon::prelude::*;

use crate::classes::ClassIndex;
use crate::complex::VertexSet;
use crate::metric::{project_row, Graph, MetricGraph};
use crate::numeric::{Bound, Rational, INF};
use crate::spaces::{c_space, y_mask, y_space, XGraph};

#[derive(Clone, Debug)]
pub struct ClassGeometry {
    pub class: usize,
    /// Vertices of `C(Δ)`, i.e. of the link, in increasing order.
    pub link: Vec<usize>,
    pub c: MetricGraph,
    pub y_mask: VertexSet,
    /// `to_link[i][v]`: distance in `Y_Δ` from `link[i]` to vertex `v`; `INF` outside `Y_Δ`.
    pub to_link: Vec<Vec<u32>>,
}

impl ClassGeometry {
    pub fn new(w: &XGraph, classes: &ClassIndex, class: usize) -> Self {
        let n = w.augmented_adjacency().len();
        let y: Graph = y_space(w, classes, class);
        let link: Vec<usize> = classes.class(class).link.ones().collect();
        let to_link = link
            .iter()
            .map(|&l| {
                let local = y.local(l).expect("the link avoids the saturation");
                let row = y.bfs(local);
                let mut full = vec![INF; n];
                for (i, &d) in row.iter().enumerate() {
                    full[y.id(i)] = d;
                }
                full
            })
            .collect();
        ClassGeometry { class, link, c: c_space(w, classes, class).metric(), y_mask: y_mask(w, classes, class), to_link }
    }

    pub fn all(w: &XGraph, classes: &ClassIndex) -> Vec<ClassGeometry> {
        (0..classes.len()).into_par_iter().map(|c| Self::new(w, classes, c)).collect()
    }

    /// Distance in `Y_Δ` between link vertices `i` and `j` (local indices).
    pub fn y_distance(&self, i: usize, j: usize) -> u32 {
        self.to_link[i][self.link[j]]
    }

    pub fn diameter(&self) -> Bound {
        Bound::from_dist(self.c.diameter())
    }

    /// λ of `C(Δ) ↪ Y_Δ`, with the worst pair as local indices.
    pub fn lambda(&self) -> (Bound, Option<(usize, usize)>) {
        let k = self.link.len();
        let mut best: Option<(u64, u64, usize, usize)> = None;
        for i in 0..k {
            for j in i + 1..k {
                let (da, db) = (self.c.d(i, j), self.y_distance(i, j));
                if da == INF || db == INF {
                    return (Bound::Infinite, Some((i, j)));
                }
                let (p, q) = (da as u64, db as u64 + 1);
                if best.is_none_or(|(bp, bq, _, _)| p * bq > bp * q) {
                    best = Some((p, q, i, j));
                }
            }
        }
        match best {
            None => (Bound::int(1), None),
            Some((p, q, i, j)) => {
                (Bound::Finite(Rational::new(p as i64, q as i64).max(Rational::from_integer(1))), Some((i, j)))
            }
        }
    }

    /// Coarse projection of a vertex of `Y_Δ` to `C(Δ)`, as local indices.
    pub fn project(&self, v: usize) -> Option<Vec<usize>> {
        if !self.y_mask.contains(v) {
            return None;
        }
        let row: Vec<u32> = self.to_link.iter().map(|r| r[v]).collect();
        let all: Vec<usize> = (0..self.link.len()).collect();
        project_row(&row, &all)
    }

    /// Union of the projections of the vertices of `set` lying in `Y_Δ`.
    pub fn project_set(&self, set: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let mut out: Vec<usize> = set.into_iter().filter_map(|v| self.project(v)).flatten().collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}
