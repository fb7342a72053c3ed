//! Nesting, orthogonality and transversality between classes, co-levels,
//! and the map from link classes into ambient classes.

use serde::Serialize;

use crate::classes::ClassIndex;
use crate::complex::{FlagComplex, Simplex};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Equal,
    /// Row class strictly nested in the column class.
    NestedIn,
    /// Column class strictly nested in the row class.
    Contains,
    Orthogonal,
    Transverse,
}

impl Relation {
    pub fn mirror(self) -> Relation {
        match self {
            Relation::NestedIn => Relation::Contains,
            Relation::Contains => Relation::NestedIn,
            r => r,
        }
    }
}

#[derive(Clone, Debug)]
pub struct RelationTable {
    k: usize,
    rel: Vec<Relation>,
    colevel: Vec<usize>,
}

impl RelationTable {
    /// Builds the table; panics if a structural invariant fails.
    pub fn new(classes: &ClassIndex) -> Self {
        let t = Self::compute(classes);
        if let Err(e) = t.validate(classes) {
            panic!("relation table invariant violated: {e}");
        }
        t
    }

    fn compute(classes: &ClassIndex) -> Self {
        let k = classes.len();
        let cs = classes.classes();
        let mut rel = vec![Relation::Equal; k * k];
        for a in 0..k {
            for b in 0..k {
                if a == b {
                    continue;
                }
                let (la, lb) = (&cs[a].link, &cs[b].link);
                rel[a * k + b] = if la.is_subset(lb) {
                    Relation::NestedIn
                } else if lb.is_subset(la) {
                    Relation::Contains
                } else if lb.is_subset(&cs[a].link_link) {
                    Relation::Orthogonal
                } else {
                    Relation::Transverse
                };
            }
        }
        // longest strict chain up to [∅]; larger links first
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by_key(|&c| std::cmp::Reverse(cs[c].link_size));
        let mut colevel = vec![0usize; k];
        for (pos, &c) in order.iter().enumerate() {
            colevel[c] = order[..pos]
                .iter()
                .filter(|&&d| rel[c * k + d] == Relation::NestedIn)
                .map(|&d| colevel[d] + 1)
                .max()
                .unwrap_or(0);
        }
        RelationTable { k, rel, colevel }
    }

    pub fn len(&self) -> usize {
        self.k
    }

    pub fn is_empty(&self) -> bool {
        self.k == 0
    }

    pub fn relation(&self, a: usize, b: usize) -> Relation {
        self.rel[a * self.k + b]
    }

    /// `[a] ⊑ [b]`.
    pub fn nested(&self, a: usize, b: usize) -> bool {
        matches!(self.relation(a, b), Relation::Equal | Relation::NestedIn)
    }

    pub fn strictly_nested(&self, a: usize, b: usize) -> bool {
        self.relation(a, b) == Relation::NestedIn
    }

    pub fn orthogonal(&self, a: usize, b: usize) -> bool {
        self.relation(a, b) == Relation::Orthogonal
    }

    pub fn transverse(&self, a: usize, b: usize) -> bool {
        self.relation(a, b) == Relation::Transverse
    }

    pub fn colevel(&self, c: usize) -> usize {
        self.colevel[c]
    }

    pub fn colevels(&self) -> &[usize] {
        &self.colevel
    }

    pub fn counts(&self) -> RelationCounts {
        let mut out = RelationCounts::default();
        for a in 0..self.k {
            for b in a + 1..self.k {
                match self.relation(a, b) {
                    Relation::NestedIn | Relation::Contains => out.nested += 1,
                    Relation::Orthogonal => out.orthogonal += 1,
                    Relation::Transverse => out.transverse += 1,
                    Relation::Equal => {}
                }
            }
        }
        out
    }

    /// Checks the structural theorems about the three relations.
    pub fn validate(&self, classes: &ClassIndex) -> std::result::Result<(), String> {
        let k = self.k;
        if k == 0 {
            return Ok(());
        }
        let top = classes.empty_class().ok_or("no class for the empty simplex")?;
        let words = k.div_ceil(64);
        let mut up = vec![vec![0u64; words]; k];
        let mut orth = vec![vec![0u64; words]; k];
        for a in 0..k {
            for b in 0..k {
                let r = self.relation(a, b);
                if r.mirror() != self.relation(b, a) {
                    return Err(format!("relation of ({a},{b}) is not mirrored"));
                }
                if (a == b) != (r == Relation::Equal) {
                    return Err(format!("equality mismatch at ({a},{b})"));
                }
                if self.nested(a, b) {
                    up[a][b / 64] |= 1 << (b % 64);
                }
                if r == Relation::Orthogonal {
                    orth[a][b / 64] |= 1 << (b % 64);
                }
            }
            if !self.nested(a, top) {
                return Err(format!("class {a} is not nested in [∅]"));
            }
            if self.orthogonal(a, a) {
                return Err(format!("class {a} is orthogonal to itself"));
            }
        }
        let subset = |x: &[u64], y: &[u64]| x.iter().zip(y).all(|(p, q)| p & !q == 0);
        for a in 0..k {
            for b in (0..k).filter(|&b| up[a][b / 64] >> (b % 64) & 1 == 1) {
                if !subset(&up[b], &up[a]) {
                    return Err(format!("nesting is not transitive through ({a},{b})"));
                }
                // V ⊑ W and W ⊥ U imply V ⊥ U
                if !subset(&orth[b], &orth[a]) {
                    return Err(format!("orthogonality is not inherited along ({a},{b})"));
                }
            }
        }
        if (0..k).any(|c| self.colevel[c] == 0 && c != top) || self.colevel[top] != 0 {
            return Err("only [∅] has co-level 0".into());
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RelationCounts {
    pub nested: usize,
    pub orthogonal: usize,
    pub transverse: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct IotaEntry {
    pub link_class: String,
    pub image_class: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct IotaReport {
    pub simplex: String,
    pub map: Vec<IotaEntry>,
    pub injective: bool,
    pub relations_preserved: bool,
    pub link_complexity: usize,
    pub complexity: usize,
    pub complexity_drops: bool,
    pub violations: Vec<String>,
}

impl IotaReport {
    pub fn holds(&self) -> bool {
        self.injective && self.relations_preserved && self.complexity_drops
    }
}

/// Maps each class `[Σ]` of `Lk(Δ)` to `[Σ ⋆ Δ]` and checks that the map is
/// injective and preserves the three relations.
pub fn iota_star(
    x: &FlagComplex,
    classes: &ClassIndex,
    table: &RelationTable,
    delta: &Simplex,
) -> Result<IotaReport> {
    let cls = classes.class_of(x, delta)?;
    let (lk, to_parent) = x.subcomplex(classes.class(cls).link.clone()).to_complex();
    let lk_classes = ClassIndex::new(&lk)?;
    let lk_table = RelationTable::new(&lk_classes);
    let mut map = Vec::with_capacity(lk_classes.len());
    let mut images = Vec::with_capacity(lk_classes.len());
    for c in lk_classes.classes() {
        let lifted = Simplex::new(c.representative.vertices().iter().map(|&v| to_parent[v]).collect()).join(delta);
        let image = classes
            .class_of(x, &lifted)
            .map_err(|_| Error::MaximalSimplex(x.key(&lifted)))?;
        images.push(image);
        map.push(IotaEntry { link_class: lk.key(&c.representative), image_class: classes.key(x, image) });
    }
    let mut violations = Vec::new();
    let mut sorted = images.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let injective = sorted.len() == images.len();
    if !injective {
        violations.push("two link classes share an image".to_string());
    }
    let mut relations_preserved = true;
    for a in 0..images.len() {
        for b in 0..images.len() {
            if lk_table.relation(a, b) != table.relation(images[a], images[b]) {
                relations_preserved = false;
                violations.push(format!(
                    "relation of ({}, {}) changes under the map",
                    map[a].link_class, map[b].link_class
                ));
            }
        }
    }
    let link_complexity = lk_classes.complexity();
    let complexity = classes.complexity();
    let complexity_drops = delta.is_empty() || link_complexity < complexity;
    Ok(IotaReport {
        simplex: x.key(delta),
        map,
        injective,
        relations_preserved,
        link_complexity,
        complexity,
        complexity_drops,
        violations,
    })
}
