//! Instance documents and report rendering.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::action::Permutation;
use crate::classes::ClassIndex;
use crate::complex::FlagComplex;
use crate::error::{Error, Result};
use crate::spaces::XGraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<[String; 2]>,
    /// Pairs of maximal-simplex keys.
    #[serde(default)]
    pub w_edges: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<BTreeMap<String, String>>>,
    /// Class key to edges of its link.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub link_edges: Option<BTreeMap<String, Vec<[String; 2]>>>,
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub x: FlagComplex,
    pub w: XGraph,
    pub action: Option<Vec<Permutation>>,
    /// Keyed by class id.
    pub link_edges: Option<BTreeMap<usize, Vec<(usize, usize)>>>,
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    parse_instance_with_cap(text, usize::MAX)
}

/// As [`parse_instance`], refusing documents with more than `vertex_cap` vertices.
pub fn parse_instance_with_cap(text: &str, vertex_cap: usize) -> Result<Instance> {
    let doc: InstanceDocument = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if doc.vertices.len() > vertex_cap {
        return Err(Error::GraphTooLarge { size: doc.vertices.len(), cap: vertex_cap });
    }
    from_document(&doc)
}

pub fn from_document(doc: &InstanceDocument) -> Result<Instance> {
    let edges: Vec<(&str, &str)> = doc.edges.iter().map(|[a, b]| (a.as_str(), b.as_str())).collect();
    let x = FlagComplex::build(&doc.vertices, &edges).map_err(|e| match e {
        Error::DuplicateVertex(v) => Error::Parse(format!("duplicate vertex `{v}`")),
        e => e,
    })?;
    let w_edges: Vec<(&str, &str)> = doc.w_edges.iter().map(|[a, b]| (a.as_str(), b.as_str())).collect();
    let w = XGraph::from_keys(&x, &w_edges)?;
    let action = doc
        .action
        .as_ref()
        .map(|gens| gens.iter().map(|g| Permutation::from_labels(&x, g)).collect::<Result<Vec<_>>>())
        .transpose()?;
    let link_edges = match &doc.link_edges {
        None => None,
        Some(map) => {
            let classes = ClassIndex::new(&x)?;
            let mut out: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
            for (key, edges) in map {
                let c = classes.class_by_key(&x, key)?;
                let entry = out.entry(c).or_default();
                for [a, b] in edges {
                    entry.push((x.vertex(a)?, x.vertex(b)?));
                }
            }
            Some(out)
        }
    };
    Ok(Instance { x, w, action, link_edges })
}

/// Canonical document: labels, edges and keys in sorted order.
pub fn to_document(
    x: &FlagComplex,
    w: &XGraph,
    action: Option<&[Permutation]>,
    link_edges: Option<&BTreeMap<usize, Vec<(usize, usize)>>>,
) -> InstanceDocument {
    let pair = |a: usize, b: usize| [x.label(a.min(b)).to_string(), x.label(a.max(b)).to_string()];
    let link_edges = link_edges.map(|m| {
        let classes = ClassIndex::new(x).expect("a built complex has enumerable classes");
        m.iter()
            .map(|(&c, edges)| {
                let mut e: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
                e.sort_unstable();
                e.dedup();
                (classes.key(x, c), e.into_iter().map(|(a, b)| pair(a, b)).collect())
            })
            .collect()
    });
    InstanceDocument {
        vertices: x.labels().to_vec(),
        edges: x.edges().iter().map(|&(a, b)| pair(a, b)).collect(),
        w_edges: w.w_edge_keys(x).into_iter().map(|(a, b)| [a, b]).collect(),
        action: action.map(|gens| gens.iter().map(|g| g.to_labels(x)).collect()),
        link_edges,
    }
}

pub fn document_json(doc: &InstanceDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

pub fn emit_instance(x: &FlagComplex, w: &XGraph) -> String {
    document_json(&to_document(x, w, None, None))
}

/// Convention choices recorded at the top of every report.
#[derive(Clone, Debug, Serialize)]
pub struct Conventions {
    pub delta: &'static str,
    pub colevel: &'static str,
    pub join: &'static str,
    pub projection: &'static str,
    pub threshold: &'static str,
    pub numbers: &'static str,
}

pub const CONVENTIONS: Conventions = Conventions {
    delta: "four-point: half the largest excess of the largest over the middle pair sum, over all quadruples",
    colevel: "longest strictly increasing nesting chain from the class to [∅]",
    join: "∅⋆K = K",
    projection: "p(x) = link vertices within distance d(x, link) + 1 of x in Y_Δ",
    threshold: "δ* is the least of δ₂ and d + 1/2 over finite link diameters d ≥ δ₂ at which the nested-intersection condition holds",
    numbers: "rationals as p/q strings, unbounded values as inf",
};

#[derive(Serialize)]
struct ReportDocument<'a, T: Serialize> {
    conventions: &'a Conventions,
    command: &'a str,
    result: &'a T,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            _ => Err(Error::Parse(format!("unknown format `{s}`"))),
        }
    }
}

pub fn render_report<T: Serialize>(command: &str, result: &T, format: Format) -> String {
    let doc = ReportDocument { conventions: &CONVENTIONS, command, result };
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&doc).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => {
            let value = serde_json::to_value(&doc).expect("reports serialize");
            let mut out = String::new();
            flatten(&value, String::new(), &mut out);
            out
        }
    }
}

fn flatten(v: &Value, path: String, out: &mut String) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let p = if path.is_empty() { k.clone() } else { format!("{path}.{k}") };
                flatten(x, p, out);
            }
        }
        Value::Array(items) if !items.is_empty() && !items.iter().all(|i| i.is_string() || i.is_number()) => {
            for (i, x) in items.iter().enumerate() {
                flatten(x, format!("{path}[{i}]"), out);
            }
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            out.push_str(&format!("{path} = [{}]\n", parts.join(", ")));
        }
        _ => out.push_str(&format!("{path} = {}\n", scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        v => v.to_string(),
    }
}

/// A tuple document: class key to a list of link vertex labels. Classes not
/// listed take the coordinates of `default`.
pub fn parse_tuple(
    x: &FlagComplex,
    classes: &ClassIndex,
    text: &str,
    default: Vec<Vec<usize>>,
) -> Result<Vec<Vec<usize>>> {
    let map: BTreeMap<String, Vec<String>> = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let mut out = default;
    for (key, labels) in map {
        let c = classes.class_by_key(x, &key)?;
        out[c] = labels.iter().map(|l| x.vertex(l)).collect::<Result<Vec<_>>>()?;
        out[c].sort_unstable();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQUARE: &str = r#"{"vertices":["a","b","c","d"],"edges":[["a","b"],["b","c"],["c","d"],["d","a"]],"w_edges":[["a|b","b|c"]]}"#;

    #[test]
    fn square_parses() {
        let inst = parse_instance(SQUARE).unwrap();
        assert_eq!(inst.w.w_edges().len(), 1);
        let bad = SQUARE.replace("b|c\"]", "a|b|c\"]");
        assert_eq!(parse_instance(&bad).unwrap_err(), Error::NotMaximalSimplex("a|b|c".into()));
    }

    #[test]
    fn missing_w_edges_means_empty_w() {
        let inst = parse_instance(r#"{"vertices":["a","b"],"edges":[["a","b"]]}"#).unwrap();
        assert!(inst.w.w_edges().is_empty());
    }

    #[test]
    fn duplicate_vertex_is_a_parse_error() {
        let r = parse_instance(r#"{"vertices":["a","a"],"edges":[]}"#);
        assert!(matches!(r, Err(Error::Parse(_))));
        let r = parse_instance(r#"{"vertices":["a"],"edges":[["a","z"]]}"#);
        assert_eq!(r.unwrap_err(), Error::UnknownVertex("z".into()));
    }

    #[test]
    fn canonical_round_trip() {
        let inst = parse_instance(SQUARE).unwrap();
        let text = emit_instance(&inst.x, &inst.w);
        let again = parse_instance(&text).unwrap();
        assert_eq!(emit_instance(&again.x, &again.w), text);
    }

    #[test]
    fn vertex_cap() {
        assert!(matches!(parse_instance_with_cap(SQUARE, 3), Err(Error::GraphTooLarge { size: 4, cap: 3 })));
    }

    #[test]
    fn text_report_flattens() {
        #[derive(Serialize)]
        struct R {
            a: u32,
            b: Vec<String>,
        }
        let s = render_report("x", &R { a: 1, b: vec!["p".into()] }, Format::Text);
        assert!(s.contains("result.a = 1\n"));
        assert!(s.contains("result.b = [p]\n"));
        assert!(s.starts_with("command = x\nconventions.colevel = "));
    }
}
