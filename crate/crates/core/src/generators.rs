//! Example complexes: amalgam word balls, blow-ups, a small library of
//! standard shapes, and the test corpus.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::FlagComplex;
use crate::error::{Error, Result};
use crate::spaces::{WRule, XGraph};

/// A finite group given by its multiplication table.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        let bad = |m: &str| Error::BadParameters(format!("multiplication table: {m}"));
        if n == 0 || table.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
            return Err(bad("not a square table over its index set"));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| bad("no identity"))?;
        let mut inverse = vec![0; n];
        for a in 0..n {
            inverse[a] = (0..n).find(|&b| table[a][b] == identity).ok_or_else(|| bad("missing inverse"))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(bad("not associative"));
                    }
                }
            }
        }
        Ok(FiniteGroup { table, identity, inverse })
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::from_table(table).expect("cyclic group table")
    }

    /// Permutations of `0..n` in lexicographic order, composed right to left.
    pub fn symmetric(n: usize) -> Self {
        let elements = permutations(n);
        let index: HashMap<Vec<usize>, usize> = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let table = elements
            .iter()
            .map(|p| elements.iter().map(|q| index[&q.iter().map(|&i| p[i]).collect::<Vec<_>>()]).collect())
            .collect();
        FiniteGroup::from_table(table).expect("symmetric group table")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

#[derive(Clone, Debug)]
pub struct AmalgamSpec {
    pub a: FiniteGroup,
    pub b: FiniteGroup,
    pub c: FiniteGroup,
    /// Image in `A` of each element of `C`.
    pub embed_a: Vec<usize>,
    pub embed_b: Vec<usize>,
    pub radius: usize,
}

impl AmalgamSpec {
    /// `S₃ *_{⟨(0 1)⟩} S₃`.
    pub fn s3_over_transposition(radius: usize) -> Self {
        let s3 = FiniteGroup::symmetric(3);
        // [0,1,2] is the identity, [1,0,2] the transposition (0 1)
        let t = permutations(3).iter().position(|p| p == &[1, 0, 2]).unwrap();
        let embed = vec![s3.identity(), t];
        AmalgamSpec { a: s3.clone(), b: s3, c: FiniteGroup::cyclic(2), embed_a: embed.clone(), embed_b: embed, radius }
    }

    /// `Z_m *_{Z_k} Z_n` with `Z_k` embedded as the multiples of `m/k` and `n/k`.
    pub fn cyclic(m: usize, n: usize, k: usize, radius: usize) -> Result<Self> {
        if k == 0 || !m.is_multiple_of(k) || !n.is_multiple_of(k) {
            return Err(Error::InvalidEmbedding(format!("Z{k} does not embed in Z{m} and Z{n}")));
        }
        Ok(AmalgamSpec {
            a: FiniteGroup::cyclic(m),
            b: FiniteGroup::cyclic(n),
            c: FiniteGroup::cyclic(k),
            embed_a: (0..k).map(|i| i * (m / k)).collect(),
            embed_b: (0..k).map(|i| i * (n / k)).collect(),
            radius,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Side {
    A,
    B,
}

/// Normal form `t₁⋯t_k·c`: alternating non-trivial transversal syllables, then an element of `C`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Word {
    syllables: Vec<(Side, usize)>,
    c: usize,
}

struct Factor<'a> {
    group: &'a FiniteGroup,
    embed: &'a [usize],
    /// Left transversal of `C`, identity first.
    reps: Vec<usize>,
    /// For each element: (index into `reps`, element of `C`).
    split: Vec<(usize, usize)>,
}

impl<'a> Factor<'a> {
    fn new(group: &'a FiniteGroup, embed: &'a [usize], c: &FiniteGroup, name: &str) -> Result<Self> {
        let bad = |m: String| Error::InvalidEmbedding(format!("{name}: {m}"));
        if embed.len() != c.order() || embed.iter().any(|&e| e >= group.order()) {
            return Err(bad("embedding size does not match C".into()));
        }
        let distinct: BTreeSet<usize> = embed.iter().copied().collect();
        if distinct.len() != embed.len() {
            return Err(bad("embedding is not injective".into()));
        }
        for x in 0..c.order() {
            for y in 0..c.order() {
                if embed[c.mul(x, y)] != group.mul(embed[x], embed[y]) {
                    return Err(bad("embedding is not a homomorphism".into()));
                }
            }
        }
        let mut reps = vec![group.identity()];
        let mut split = vec![None; group.order()];
        for a in std::iter::once(group.identity()).chain(0..group.order()) {
            if split[a].is_some() {
                continue;
            }
            if a != group.identity() {
                reps.push(a);
            }
            let r = reps.len() - 1;
            for (ci, &e) in embed.iter().enumerate() {
                split[group.mul(a, e)] = Some((r, ci));
            }
        }
        Ok(Factor { group, embed, reps, split: split.into_iter().map(Option::unwrap).collect() })
    }
}

/// A word ball in `A *_C B` and the complex it spans.
#[derive(Clone, Debug)]
pub struct Amalgam {
    pub x: FlagComplex,
    /// The Cayley-graph rule on `(A∖C) ∪ (B∖C) ∪ (C∖{1})`, restricted to the ball.
    pub w: XGraph,
    pub kinds: Vec<AmalgamVertex>,
    /// Elements of length at most `R − 1`, and cosets all of whose elements lie in the ball.
    pub interior: Vec<bool>,
    /// For each group-element vertex: the vertices `v_{gA}` and `v_{gB}`.
    pub cosets: BTreeMap<usize, (usize, usize)>,
    pub group_elements: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AmalgamVertex {
    Element,
    CosetA,
    CosetB,
}

fn word_label(prefix: &str, syllables: &[(Side, usize)], c: Option<usize>) -> String {
    let mut parts: Vec<String> =
        syllables.iter().map(|&(s, t)| format!("{}{t}", if s == Side::A { 'a' } else { 'b' })).collect();
    if let Some(c) = c.filter(|&c| c != 0) {
        parts.push(format!("c{c}"));
    }
    format!("{prefix}[{}]", parts.join("."))
}

pub fn gen_amalgam(spec: &AmalgamSpec) -> Result<Amalgam> {
    if spec.radius == 0 {
        return Err(Error::BadParameters("radius must be at least 1".into()));
    }
    let fa = Factor::new(&spec.a, &spec.embed_a, &spec.c, "A")?;
    let fb = Factor::new(&spec.b, &spec.embed_b, &spec.c, "B")?;
    let c_id = spec.c.identity();
    let factor = |s: Side| if s == Side::A { &fa } else { &fb };

    // right multiplication by an element of A or B
    let mul = |w: &Word, side: Side, x: usize| -> Word {
        let f = factor(side);
        let mut syl = w.syllables.clone();
        let head = match syl.last() {
            Some(&(s, t)) if s == side => {
                syl.pop();
                f.reps[t]
            }
            _ => f.group.identity(),
        };
        let y = f.group.mul(f.group.mul(head, f.embed[w.c]), x);
        let (t, c) = f.split[y];
        if t != 0 {
            syl.push((side, t));
        }
        Word { syllables: syl, c }
    };

    let gens: Vec<(Side, usize)> = [Side::A, Side::B]
        .into_iter()
        .flat_map(|s| (0..factor(s).group.order()).filter(move |&x| x != factor(s).group.identity()).map(move |x| (s, x)))
        .collect();
    let start = Word { syllables: Vec::new(), c: c_id };
    let mut dist: HashMap<Word, usize> = HashMap::from([(start.clone(), 0)]);
    let mut order = vec![start.clone()];
    let mut queue = VecDeque::from([start]);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        if d == spec.radius {
            continue;
        }
        for &(s, x) in &gens {
            let v = mul(&w, s, x);
            if !dist.contains_key(&v) {
                dist.insert(v.clone(), d + 1);
                order.push(v.clone());
                queue.push_back(v);
            }
        }
    }
    order.sort();

    let prefix = |w: &Word, side: Side| -> Vec<(Side, usize)> {
        let mut p = w.syllables.clone();
        if p.last().map(|s| s.0) == Some(side) {
            p.pop();
        }
        p
    };
    let mut labels: Vec<String> = Vec::new();
    let mut kinds = Vec::new();
    let mut interior = Vec::new();
    let mut coset_id: BTreeMap<(Side, Vec<(Side, usize)>), usize> = BTreeMap::new();
    let mut element_id = Vec::with_capacity(order.len());
    for w in &order {
        element_id.push(labels.len());
        labels.push(word_label("g", &w.syllables, Some(w.c)));
        kinds.push(AmalgamVertex::Element);
        interior.push(dist[w] < spec.radius);
    }
    for w in &order {
        for side in [Side::A, Side::B] {
            let p = prefix(w, side);
            if coset_id.contains_key(&(side, p.clone())) {
                continue;
            }
            let base = Word { syllables: p.clone(), c: c_id };
            let f = factor(side);
            let all_in = (0..f.group.order()).all(|x| dist.contains_key(&mul(&base, side, x)));
            coset_id.insert((side, p.clone()), labels.len());
            labels.push(word_label(if side == Side::A { "vA" } else { "vB" }, &p, None));
            kinds.push(if side == Side::A { AmalgamVertex::CosetA } else { AmalgamVertex::CosetB });
            interior.push(all_in);
        }
    }
    let mut edges = Vec::new();
    let mut cosets = BTreeMap::new();
    for (i, w) in order.iter().enumerate() {
        let a = coset_id[&(Side::A, prefix(w, Side::A))];
        let b = coset_id[&(Side::B, prefix(w, Side::B))];
        edges.push((element_id[i], a));
        edges.push((element_id[i], b));
        cosets.insert(element_id[i], (a, b));
    }
    // pA meets qB iff p = q = [], or q = p + [A-syllable], or p = q + [B-syllable]
    for ((sp, p), &pa) in &coset_id {
        if *sp != Side::A {
            continue;
        }
        for ((sq, q), &qb) in &coset_id {
            if *sq != Side::B {
                continue;
            }
            let meets = (p.is_empty() && q.is_empty())
                || (q.len() == p.len() + 1 && q[..p.len()] == p[..] && q[p.len()].0 == Side::A)
                || (p.len() == q.len() + 1 && p[..q.len()] == q[..] && p[q.len()].0 == Side::B);
            if meets {
                edges.push((pa, qb));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();

    let x = FlagComplex::from_indexed(labels.clone(), &edges)?;
    // from_indexed sorts labels; carry the per-vertex data along
    let remap: Vec<usize> = labels.iter().map(|l| x.vertex(l).expect("label kept")).collect();
    let mut kinds_x = vec![AmalgamVertex::Element; labels.len()];
    let mut interior_x = vec![false; labels.len()];
    for (old, &new) in remap.iter().enumerate() {
        kinds_x[new] = kinds[old];
        interior_x[new] = interior[old];
    }
    let cosets: BTreeMap<usize, (usize, usize)> =
        cosets.into_iter().map(|(g, (a, b))| (remap[g], (remap[a], remap[b]))).collect();

    let simplex_of = |w: &Word| -> usize {
        let g = remap[element_id[order.binary_search(w).expect("in ball")]];
        let (a, b) = cosets[&g];
        x.maximal_position(&crate::complex::Simplex::new(vec![g, a, b])).expect("element triples are maximal")
    };
    let mut cayley: Vec<(Side, usize)> = Vec::new();
    for side in [Side::A, Side::B] {
        let f = factor(side);
        let in_c: BTreeSet<usize> = f.embed.iter().copied().collect();
        cayley.extend((0..f.group.order()).filter(|x| !in_c.contains(x)).map(|x| (side, x)));
    }
    cayley.extend((0..spec.c.order()).filter(|&c| c != c_id).map(|c| (Side::A, fa.embed[c])));
    let mut w_edges = BTreeSet::new();
    for w in &order {
        for &(s, g) in &cayley {
            let v = mul(w, s, g);
            if dist.contains_key(&v) && v != *w {
                let (p, q) = (simplex_of(w), simplex_of(&v));
                w_edges.insert((p.min(q), p.max(q)));
            }
        }
    }
    let w = XGraph::new(&x, &w_edges.into_iter().collect::<Vec<_>>())?;
    Ok(Amalgam { x, w, kinds: kinds_x, interior: interior_x, cosets, group_elements: order.len() })
}

#[derive(Clone, Debug)]
pub struct Blowup {
    pub x: FlagComplex,
    /// Vertex of the base each vertex of `x` collapses to.
    pub collapse: Vec<usize>,
}

impl Blowup {
    /// Every edge maps to an edge or collapses to a vertex.
    pub fn collapse_is_morphism(&self, base: &FlagComplex) -> bool {
        self.x.edges().iter().all(|&(a, b)| {
            let (p, q) = (self.collapse[a], self.collapse[b]);
            p == q || base.adjacent(p, q)
        })
    }
}

/// Cones each base vertex `γ` over its blob and joins `B(γ)` to `B(α)` for adjacent `γ, α`.
pub fn gen_blowup(base: &FlagComplex, blobs: &BTreeMap<String, Vec<String>>) -> Result<Blowup> {
    let mut owner: BTreeMap<String, usize> = BTreeMap::new();
    for v in 0..base.vertex_count() {
        owner.insert(base.label(v).to_string(), v);
    }
    for (g, set) in blobs {
        let gi = base.vertex(g)?;
        for l in set {
            if owner.insert(l.clone(), gi).is_some() {
                return Err(Error::OverlappingBlobs(l.clone()));
            }
        }
    }
    let labels: Vec<String> = owner.keys().cloned().collect();
    let collapse: Vec<usize> = owner.values().copied().collect();
    let n = labels.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (p, q) = (collapse[i], collapse[j]);
            let cone = p == q && (labels[i] == base.label(p) || labels[j] == base.label(p));
            if cone || base.adjacent(p, q) {
                edges.push((i, j));
            }
        }
    }
    let x = FlagComplex::from_indexed(labels, &edges)?;
    Ok(Blowup { x, collapse })
}

fn padded(prefix: &str, n: usize) -> Vec<String> {
    let width = n.saturating_sub(1).to_string().len();
    (0..n).map(|i| format!("{prefix}{i:0width$}")).collect()
}

fn from_labels(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<FlagComplex> {
    FlagComplex::from_indexed(labels, edges)
}

pub fn path(n: usize) -> Result<FlagComplex> {
    from_labels(padded("v", n), &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
}

pub fn cycle(n: usize) -> Result<FlagComplex> {
    if n < 3 {
        return Err(Error::BadParameters("a cycle needs at least 3 vertices".into()));
    }
    from_labels(padded("v", n), &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
}

pub fn complete(n: usize) -> Result<FlagComplex> {
    from_labels(padded("k", n), &(0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect::<Vec<_>>())
}

pub fn discrete(n: usize) -> Result<FlagComplex> {
    from_labels(padded("d", n), &[])
}

/// The `k`-fold join of two-point complexes, with vertices `a_i`, `b_i`.
pub fn octahedron(k: usize) -> Result<FlagComplex> {
    let (a, b) = (padded("a", k), padded("b", k));
    let labels: Vec<String> = a.into_iter().chain(b).collect();
    let mut edges = Vec::new();
    for i in 0..2 * k {
        for j in i + 1..2 * k {
            if j != i + k {
                edges.push((i, j));
            }
        }
    }
    from_labels(labels, &edges)
}

/// Erdős–Rényi graph `G(n, p)` from a ChaCha8 stream seeded with `seed`.
pub fn random_flag(n: usize, p: f64, seed: u64) -> Result<FlagComplex> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::BadParameters(format!("edge probability {p} is outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    from_labels(padded("v", n), &edges)
}

pub fn join(a: &FlagComplex, b: &FlagComplex) -> Result<FlagComplex> {
    let na = a.vertex_count();
    let mut labels: Vec<String> = a.labels().to_vec();
    for l in b.labels() {
        if a.vertex(l).is_ok() {
            return Err(Error::BadParameters(format!("vertex `{l}` appears in both factors")));
        }
        labels.push(l.clone());
    }
    let mut edges: Vec<(usize, usize)> = a.edges().to_vec();
    edges.extend(b.edges().iter().map(|&(p, q)| (p + na, q + na)));
    for p in 0..na {
        for q in 0..b.vertex_count() {
            edges.push((p, q + na));
        }
    }
    from_labels(labels, &edges)
}

pub fn relabel(x: &FlagComplex, prefix: &str) -> Result<FlagComplex> {
    from_labels(x.labels().iter().map(|l| format!("{prefix}{l}")).collect(), x.edges())
}

/// Library shapes, written as `path:N`, `cycle:N`, `complete:N`, `discrete:N`,
/// `octahedron:K`, `random:N:P:SEED`, `amalgam:R`, `amalgam-z:M:N:K:R`,
/// `blowup:SIZE:BASE` and `join:LEFT+RIGHT`.
#[derive(Clone, Debug, PartialEq)]
pub enum Library {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Discrete(usize),
    Octahedron(usize),
    RandomFlag { n: usize, p: f64, seed: u64 },
    Amalgam { radius: usize },
    CyclicAmalgam { m: usize, n: usize, k: usize, radius: usize },
    Blowup { size: usize, base: Box<Library> },
    Join(Box<Library>, Box<Library>),
}

impl fmt::Display for Library {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Library::Path(n) => write!(f, "path:{n}"),
            Library::Cycle(n) => write!(f, "cycle:{n}"),
            Library::Complete(n) => write!(f, "complete:{n}"),
            Library::Discrete(n) => write!(f, "discrete:{n}"),
            Library::Octahedron(k) => write!(f, "octahedron:{k}"),
            Library::RandomFlag { n, p, seed } => write!(f, "random:{n}:{p}:{seed}"),
            Library::Amalgam { radius } => write!(f, "amalgam:{radius}"),
            Library::CyclicAmalgam { m, n, k, radius } => write!(f, "amalgam-z:{m}:{n}:{k}:{radius}"),
            Library::Blowup { size, base } => write!(f, "blowup:{size}:{base}"),
            Library::Join(a, b) => write!(f, "join:{a}+{b}"),
        }
    }
}

impl FromStr for Library {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadParameters(format!("unrecognized shape `{s}`"));
        if let Some(rest) = s.strip_prefix("join:") {
            let (a, b) = rest.split_once('+').ok_or_else(bad)?;
            return Ok(Library::Join(Box::new(a.parse()?), Box::new(b.parse()?)));
        }
        if let Some(rest) = s.strip_prefix("blowup:") {
            let (size, base) = rest.split_once(':').ok_or_else(bad)?;
            return Ok(Library::Blowup { size: size.parse().map_err(|_| bad())?, base: Box::new(base.parse()?) });
        }
        let parts: Vec<&str> = s.split(':').collect();
        let num = |i: usize| -> Result<usize> { parts.get(i).ok_or_else(bad)?.parse().map_err(|_| bad()) };
        let arity = |k: usize| if parts.len() == k { Ok(()) } else { Err(bad()) };
        Ok(match parts[0] {
            "path" => {
                arity(2)?;
                Library::Path(num(1)?)
            }
            "cycle" => {
                arity(2)?;
                Library::Cycle(num(1)?)
            }
            "complete" => {
                arity(2)?;
                Library::Complete(num(1)?)
            }
            "discrete" => {
                arity(2)?;
                Library::Discrete(num(1)?)
            }
            "octahedron" => {
                arity(2)?;
                Library::Octahedron(num(1)?)
            }
            "amalgam" => {
                arity(2)?;
                Library::Amalgam { radius: num(1)? }
            }
            "amalgam-z" => {
                arity(5)?;
                Library::CyclicAmalgam { m: num(1)?, n: num(2)?, k: num(3)?, radius: num(4)? }
            }
            "random" => {
                arity(4)?;
                let p: f64 = parts[2].parse().map_err(|_| bad())?;
                Library::RandomFlag { n: num(1)?, p, seed: parts[3].parse().map_err(|_| bad())? }
            }
            _ => return Err(bad()),
        })
    }
}

impl Library {
    pub fn build(&self) -> Result<FlagComplex> {
        match self {
            Library::Path(n) => path(*n),
            Library::Cycle(n) => cycle(*n),
            Library::Complete(n) => complete(*n),
            Library::Discrete(n) => discrete(*n),
            Library::Octahedron(k) => octahedron(*k),
            Library::RandomFlag { n, p, seed } => random_flag(*n, *p, *seed),
            Library::Amalgam { radius } => Ok(gen_amalgam(&AmalgamSpec::s3_over_transposition(*radius))?.x),
            Library::CyclicAmalgam { m, n, k, radius } => Ok(gen_amalgam(&AmalgamSpec::cyclic(*m, *n, *k, *radius)?)?.x),
            Library::Blowup { size, base } => {
                let base = base.build()?;
                let blobs = (0..base.vertex_count())
                    .map(|v| {
                        let l = base.label(v);
                        (l.to_string(), (0..*size).map(|i| format!("{l}.{i}")).collect())
                    })
                    .collect();
                Ok(gen_blowup(&base, &blobs)?.x)
            }
            Library::Join(a, b) => join(&relabel(&a.build()?, "l.")?, &relabel(&b.build()?, "r.")?),
        }
    }

    /// The generator's own `W`, where it has one (the Cayley rule for amalgams).
    pub fn suggested_w(&self, x: &FlagComplex) -> Result<XGraph> {
        match self {
            Library::Amalgam { radius } => Ok(gen_amalgam(&AmalgamSpec::s3_over_transposition(*radius))?.w),
            Library::CyclicAmalgam { m, n, k, radius } => Ok(gen_amalgam(&AmalgamSpec::cyclic(*m, *n, *k, *radius)?)?.w),
            _ => Ok(XGraph::from_rule(x, WRule::SharedCodim1Face)),
        }
    }
}

pub fn gen_library(kind: &Library, rule: WRule) -> Result<(FlagComplex, XGraph)> {
    let x = kind.build()?;
    let w = XGraph::from_rule(&x, rule);
    Ok((x, w))
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub x: FlagComplex,
    pub w: XGraph,
}

/// Two disjoint edges.
pub fn two_edges() -> FlagComplex {
    FlagComplex::build(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")]).unwrap()
}

/// Two 4-cycles sharing the opposite pair `{a, c}`, with a pendant vertex `g` at `a`.
pub fn glued_squares_with_pendant() -> FlagComplex {
    FlagComplex::build(
        &["a", "b", "c", "d", "e", "f", "g"],
        &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("a", "e"), ("e", "c"), ("c", "f"), ("f", "a"), ("g", "a")],
    )
    .unwrap()
}

/// The generated corpus: over two hundred small complexes with their suggested `W`.
pub fn corpus() -> Vec<CorpusEntry> {
    let mut shapes: Vec<Library> = Vec::new();
    shapes.extend((1..=12).map(Library::Path));
    shapes.extend((3..=14).map(Library::Cycle));
    shapes.extend((1..=5).map(Library::Complete));
    shapes.extend((1..=4).map(Library::Discrete));
    shapes.extend((1..=4).map(Library::Octahedron));
    for a in [Library::Path(2), Library::Path(3), Library::Discrete(2), Library::Discrete(3), Library::Cycle(4)] {
        for b in [Library::Path(3), Library::Cycle(4), Library::Cycle(5), Library::Discrete(2)] {
            shapes.push(Library::Join(Box::new(a.clone()), Box::new(b)));
        }
    }
    for size in 1..=2 {
        for base in [Library::Path(2), Library::Path(3), Library::Path(4), Library::Cycle(4), Library::Cycle(5), Library::Complete(3)] {
            shapes.push(Library::Blowup { size, base: Box::new(base) });
        }
    }
    shapes.push(Library::Blowup { size: 3, base: Box::new(Library::Path(2)) });
    shapes.push(Library::Blowup { size: 3, base: Box::new(Library::Discrete(1)) });
    let mut seed = 0;
    for n in (6..=25).step_by(1) {
        for p in [0.15, 0.3, 0.5] {
            for _ in 0..2 {
                seed += 1;
                shapes.push(Library::RandomFlag { n, p, seed });
            }
        }
    }
    shapes.extend((1..=3).map(|radius| Library::Amalgam { radius }));
    shapes.extend((1..=4).map(|radius| Library::CyclicAmalgam { m: 2, n: 2, k: 1, radius }));
    shapes.extend((1..=3).map(|radius| Library::CyclicAmalgam { m: 4, n: 6, k: 2, radius }));

    let mut out: Vec<CorpusEntry> = shapes
        .iter()
        .map(|s| {
            let x = s.build().expect("corpus shapes are valid");
            let w = s.suggested_w(&x).expect("corpus shapes are valid");
            CorpusEntry { name: s.to_string(), x, w }
        })
        .collect();
    let x = two_edges();
    out.push(CorpusEntry { name: "two-edges".into(), w: XGraph::from_rule(&x, WRule::None), x });
    let x = glued_squares_with_pendant();
    out.push(CorpusEntry { name: "glued-squares".into(), w: XGraph::from_rule(&x, WRule::SharedCodim1Face), x });
    out
}
