//! Vertex permutations acting on a flag complex and on `W`.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::classes::ClassIndex;
use crate::complex::{FlagComplex, Simplex, VertexSet};
use crate::error::{Error, Result};
use crate::spaces::XGraph;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { map: (0..n).collect() }
    }

    pub fn from_vec(map: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; map.len()];
        for &v in &map {
            if v >= map.len() || std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAPermutation(format!("image {v} is repeated or out of range")));
            }
        }
        Ok(Permutation { map })
    }

    /// From a label map; unlisted vertices are fixed.
    pub fn from_labels(x: &FlagComplex, map: &BTreeMap<String, String>) -> Result<Self> {
        let mut out: Vec<usize> = (0..x.vertex_count()).collect();
        for (a, b) in map {
            let (a, b) = (x.vertex(a)?, x.vertex(b)?);
            out[a] = b;
        }
        Self::from_vec(out).map_err(|_| Error::NotAPermutation("label map is not a bijection".into()))
    }

    pub fn to_labels(&self, x: &FlagComplex) -> BTreeMap<String, String> {
        self.map
            .iter()
            .enumerate()
            .filter(|(a, b)| a != *b)
            .map(|(a, &b)| (x.label(a).to_string(), x.label(b).to_string()))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.map[v]
    }

    pub fn apply_simplex(&self, s: &Simplex) -> Simplex {
        Simplex::new(s.vertices().iter().map(|&v| self.map[v]).collect())
    }

    pub fn apply_set(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::with_capacity(s.len());
        for v in s.ones() {
            out.insert(self.map[v]);
        }
        out
    }

    pub fn preserves_set(&self, s: &VertexSet) -> bool {
        s.ones().all(|v| s.contains(self.map[v]))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { map: other.map.iter().map(|&v| self.map[v]).collect() }
    }

    /// Image of the maximal simplex at position `i`; the action must be simplicial.
    pub fn apply_maximal(&self, x: &FlagComplex, i: usize) -> usize {
        x.maximal_position(&self.apply_simplex(&x.maximal_simplices()[i]))
            .expect("a simplicial automorphism permutes maximal simplices")
    }

    /// Edges go to edges and non-edges to non-edges.
    pub fn check_simplicial(&self, x: &FlagComplex) -> std::result::Result<(), String> {
        if self.map.len() != x.vertex_count() {
            return Err("permutation size differs from the vertex count".into());
        }
        for &(a, b) in x.edges() {
            if !x.adjacent(self.map[a], self.map[b]) {
                return Err(format!(
                    "edge {{{},{}}} maps to the non-edge {{{},{}}}",
                    x.label(a),
                    x.label(b),
                    x.label(self.map[a]),
                    x.label(self.map[b])
                ));
            }
        }
        Ok(())
    }
}

/// All elements of the group generated by `gens`, identity first.
pub fn group_elements(x: &FlagComplex, gens: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    let id = Permutation::identity(x.vertex_count());
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut out = vec![id];
    let mut i = 0;
    while i < out.len() {
        for g in gens {
            let h = g.compose(&out[i]);
            if seen.insert(h.clone()) {
                if out.len() >= cap {
                    return Err(Error::BadParameters(format!("group has more than {cap} elements")));
                }
                out.push(h);
            }
        }
        i += 1;
    }
    Ok(out)
}

fn orbit_count(n: usize, images: impl Fn(usize) -> Vec<usize>) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut v: usize) -> usize {
        while p[v] != v {
            p[v] = p[p[v]];
            v = p[v];
        }
        v
    }
    for v in 0..n {
        for u in images(v) {
            let (a, b) = (find(&mut parent, v), find(&mut parent, u));
            parent[a.max(b)] = a.min(b);
        }
    }
    (0..n).filter(|&v| find(&mut parent, v) == v).count()
}

#[derive(Clone, Debug, Serialize)]
pub struct ActionReport {
    pub simplicial: bool,
    pub simplicial_witness: Option<String>,
    pub preserves_w: bool,
    pub w_witness: Option<String>,
    pub vertex_orbits: usize,
    pub maximal_orbits: usize,
    pub class_orbits: usize,
    /// `None` when the action is not simplicial or does not preserve `W`.
    pub projections_equivariant: Option<bool>,
    pub equivariance_witness: Option<String>,
}

impl ActionReport {
    pub fn pass(&self) -> bool {
        self.simplicial && self.preserves_w && self.projections_equivariant.unwrap_or(false)
    }
}

/// Checks that the generators act by simplicial automorphisms preserving `W`,
/// counts orbits, and checks equivariance of the projections.
pub fn check_action(x: &FlagComplex, w: &XGraph, gens: &[Permutation]) -> Result<ActionReport> {
    for g in gens {
        if g.len() != x.vertex_count() {
            return Err(Error::NotAPermutation("permutation size differs from the vertex count".into()));
        }
    }
    let simplicial_witness = gens.iter().find_map(|g| g.check_simplicial(x).err());
    let simplicial = simplicial_witness.is_none();
    let vertex_orbits = orbit_count(x.vertex_count(), |v| gens.iter().map(|g| g.apply(v)).collect());
    let mut report = ActionReport {
        simplicial,
        simplicial_witness,
        preserves_w: false,
        w_witness: None,
        vertex_orbits,
        maximal_orbits: 0,
        class_orbits: 0,
        projections_equivariant: None,
        equivariance_witness: None,
    };
    if !simplicial {
        return Ok(report);
    }
    let m = x.maximal_simplices().len();
    report.maximal_orbits = orbit_count(m, |i| gens.iter().map(|g| g.apply_maximal(x, i)).collect());
    let classes = ClassIndex::new(x)?;
    let class_image = |g: &Permutation, c: usize| {
        classes.class_by_link(&g.apply_set(&classes.class(c).link)).expect("automorphisms permute links")
    };
    report.class_orbits = orbit_count(classes.len(), |c| gens.iter().map(|g| class_image(g, c)).collect());
    report.w_witness = gens.iter().find_map(|g| {
        w.w_edges().iter().find_map(|&(a, b)| {
            let (ga, gb) = (g.apply_maximal(x, a), g.apply_maximal(x, b));
            (!w.w_adjacent(ga, gb)).then(|| {
                let ms = x.maximal_simplices();
                format!("W-edge {{{},{}}} maps to a non-edge", x.key(&ms[a]), x.key(&ms[b]))
            })
        })
    });
    report.preserves_w = report.w_witness.is_none();
    if !report.preserves_w {
        return Ok(report);
    }
    let hhs = crate::hhs::Hhs::new(x, w)?;
    report.equivariance_witness = gens.iter().find_map(|g| {
        (0..classes.len()).find_map(|c| {
            let gc = class_image(g, c);
            (0..m).find_map(|wv| {
                let mut image: Vec<usize> = hhs.pi_vertices(c, wv).into_iter().map(|v| g.apply(v)).collect();
                image.sort_unstable();
                let target = hhs.pi_vertices(gc, g.apply_maximal(x, wv));
                (image != target).then(|| {
                    format!(
                        "projection of `{}` to [{}] is not carried to the projection of its image",
                        x.key(&x.maximal_simplices()[wv]),
                        classes.key(x, c)
                    )
                })
            })
        })
    });
    report.projections_equivariant = Some(report.equivariance_witness.is_none());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transposition_on_path_is_not_simplicial() {
        let x = FlagComplex::build(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        let g = Permutation::from_labels(&x, &BTreeMap::from([("a".into(), "b".into()), ("b".into(), "a".into())])).unwrap();
        let err = g.check_simplicial(&x).unwrap_err();
        assert!(err.contains("{b,c}"), "{err}");
    }

    #[test]
    fn non_bijective_map_is_rejected() {
        let x = FlagComplex::build(&["a", "b", "c"], &[("a", "b")]).unwrap();
        let r = Permutation::from_labels(&x, &BTreeMap::from([("a".into(), "b".into())]));
        assert!(matches!(r, Err(Error::NotAPermutation(_))));
    }

    #[test]
    fn rotation_group_of_square() {
        let x = FlagComplex::build(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]).unwrap();
        let rot = Permutation::from_vec(vec![1, 2, 3, 0]).unwrap();
        assert_eq!(group_elements(&x, &[rot], 100).unwrap().len(), 4);
    }
}
