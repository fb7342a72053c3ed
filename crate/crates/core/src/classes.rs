//! Enumeration of all simplices, grouped into classes of equal link.

use std::collections::HashMap;

use crate::complex::{size_lex, FlagComplex, Simplex, VertexSet};
use crate::error::{Error, Result};

/// Default cap on the total number of simplices enumerated.
pub const MAX_SIMPLICES: usize = 4_000_000;

#[derive(Clone, Debug)]
pub struct SimplexClass {
    pub id: usize,
    /// Fewest vertices, then lexicographically least.
    pub representative: Simplex,
    pub link: VertexSet,
    /// `Lk(Lk(Δ))`.
    pub link_link: VertexSet,
    pub saturation: VertexSet,
    /// Indices into [`ClassIndex::simplices`].
    pub members: Vec<usize>,
    /// Some member is a codimension-1 face of a maximal simplex.
    pub almost_maximal: bool,
    pub link_size: usize,
}

#[derive(Clone, Debug)]
pub struct ClassIndex {
    simplices: Vec<Simplex>,
    simplex_class: Vec<Option<usize>>,
    lookup: HashMap<Simplex, usize>,
    classes: Vec<SimplexClass>,
    by_link: HashMap<VertexSet, usize>,
    complexity: usize,
}

impl ClassIndex {
    pub fn new(x: &FlagComplex) -> Result<Self> {
        Self::with_limit(x, MAX_SIMPLICES)
    }

    pub fn with_limit(x: &FlagComplex, limit: usize) -> Result<Self> {
        let mut found: Vec<(Simplex, VertexSet)> = Vec::new();
        let mut overflow = false;
        let all = x.full_set();
        crate::complex::for_each_clique(x.adjacency(), &all, |clique, link| {
            if found.len() >= limit {
                overflow = true;
                return;
            }
            found.push((Simplex::new(clique.to_vec()), link.clone()));
        });
        if overflow {
            return Err(Error::TooManySimplices { limit });
        }
        found.sort_by(|a, b| size_lex(&a.0, &b.0));

        let mut by_link: HashMap<VertexSet, usize> = HashMap::new();
        let mut classes: Vec<SimplexClass> = Vec::new();
        let mut simplex_class = Vec::with_capacity(found.len());
        let mut simplices = Vec::with_capacity(found.len());
        for (i, (s, link)) in found.into_iter().enumerate() {
            if link.is_clear() {
                simplex_class.push(None);
                simplices.push(s);
                continue;
            }
            let id = match by_link.get(&link) {
                Some(&id) => id,
                None => {
                    let id = classes.len();
                    by_link.insert(link.clone(), id);
                    let link_link = x.common_neighbors(&link);
                    let link_size = link.count_ones(..);
                    classes.push(SimplexClass {
                        id,
                        representative: s.clone(),
                        link,
                        link_link,
                        saturation: x.empty_set(),
                        members: Vec::new(),
                        almost_maximal: false,
                        link_size,
                    });
                    id
                }
            };
            let c = &mut classes[id];
            for &v in s.vertices() {
                c.saturation.insert(v);
            }
            c.members.push(i);
            simplex_class.push(Some(id));
            simplices.push(s);
        }
        for c in &mut classes {
            c.almost_maximal = x.subcomplex(c.link.clone()).has_isolated_vertex();
        }
        let lookup = simplices.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let complexity = longest_chain(&classes);
        Ok(ClassIndex { simplices, simplex_class, lookup, classes, by_link, complexity })
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn classes(&self) -> &[SimplexClass] {
        &self.classes
    }

    pub fn class(&self, id: usize) -> &SimplexClass {
        &self.classes[id]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn simplex_index(&self, s: &Simplex) -> Option<usize> {
        self.lookup.get(s).copied()
    }

    /// Class of the `i`-th simplex; `None` when it is maximal.
    pub fn class_of_index(&self, i: usize) -> Option<usize> {
        self.simplex_class[i]
    }

    pub fn class_of(&self, x: &FlagComplex, s: &Simplex) -> Result<usize> {
        match self.simplex_index(s) {
            Some(i) => self.simplex_class[i].ok_or_else(|| Error::MaximalSimplex(x.key(s))),
            None => Err(Error::NotASimplex(x.key(s))),
        }
    }

    pub fn class_by_link(&self, link: &VertexSet) -> Option<usize> {
        self.by_link.get(link).copied()
    }

    /// Class named by the key of any of its simplices.
    pub fn class_by_key(&self, x: &FlagComplex, key: &str) -> Result<usize> {
        let s = x.simplex_from_key(key)?;
        self.class_of(x, &s)
    }

    pub fn key(&self, x: &FlagComplex, class: usize) -> String {
        x.key(&self.classes[class].representative)
    }

    /// The class of `∅`, when the complex has a non-maximal simplex.
    pub fn empty_class(&self) -> Option<usize> {
        self.classes.first().filter(|c| c.representative.is_empty()).map(|c| c.id)
    }

    /// Length of the longest strictly increasing chain of links, over all
    /// simplices including maximal ones and `∅`.
    pub fn complexity(&self) -> usize {
        self.complexity
    }
}

fn longest_chain(classes: &[SimplexClass]) -> usize {
    if classes.is_empty() {
        return 1;
    }
    // strict inclusion implies strictly smaller size, so size order is topological
    let mut order: Vec<usize> = (0..classes.len()).collect();
    order.sort_by_key(|&i| classes[i].link_size);
    let mut best = vec![0usize; classes.len()];
    for (pos, &i) in order.iter().enumerate() {
        let mut b = 0;
        for &j in &order[..pos] {
            if classes[j].link_size < classes[i].link_size && classes[j].link.is_subset(&classes[i].link) {
                b = b.max(best[j]);
            }
        }
        best[i] = b + 1;
    }
    // the empty link of a maximal simplex sits below everything
    best.into_iter().max().unwrap_or(0) + 1
}
