//! Inputs shared by the benchmarks.

use std::path::PathBuf;

use orbifold_fatgraph::{Fatgraph, Realization, Word};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

pub fn orbifold(name: &str) -> Realization {
    Realization::parse(&std::fs::read_to_string(fixture_path(name)).unwrap()).unwrap()
}

pub fn fatgraph(name: &str) -> Fatgraph {
    Fatgraph::parse(&std::fs::read_to_string(fixture_path(name)).unwrap()).unwrap()
}

pub fn word(r: &Realization, text: &str) -> Word {
    Word::parse(text, r.alphabet()).unwrap()
}
