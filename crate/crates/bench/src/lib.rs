//! Fixtures shared by the kernel benchmarks.

use chhs_core::generators::{gen_amalgam, octahedron, random_flag, AmalgamSpec};
use chhs_core::{FlagComplex, WRule, XGraph};

/// A dense random flag complex with the shared-facet `W`.
pub fn random_instance(n: usize, p: f64, seed: u64) -> (FlagComplex, XGraph) {
    let x = random_flag(n, p, seed).expect("valid parameters");
    let w = XGraph::from_rule(&x, WRule::SharedCodim1Face);
    (x, w)
}

pub fn octahedron_instance(k: usize) -> (FlagComplex, XGraph) {
    let x = octahedron(k).expect("valid parameters");
    let w = XGraph::from_rule(&x, WRule::Complete);
    (x, w)
}

/// The S3 amalgam ball with its Cayley `W`.
pub fn amalgam_instance(radius: usize) -> (FlagComplex, XGraph) {
    let a = gen_amalgam(&AmalgamSpec::s3_over_transposition(radius)).expect("valid parameters");
    (a.x, a.w)
}
