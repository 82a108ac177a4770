//! Fixture loading shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;

use frieze_core::frieze::{parse_window_pair, Window};
use frieze_core::polygon::{Arc, Triangulation};
use frieze_core::strings::{module_of_arc, ArcModule};
use serde::Deserialize;

pub fn golden_dir() -> PathBuf {
    std::env::var_os("FRIEZE_SEED_GOLDEN")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden"))
}

pub fn read(name: &str) -> String {
    let path = golden_dir().join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[derive(Deserialize)]
struct RawQuiver {
    vertices: usize,
    arrows: Vec<(usize, usize)>,
}

/// Arrows of a fixture quiver, relabelled to start at 0.
pub fn quiver(name: &str) -> (usize, Vec<(usize, usize)>) {
    let raw: RawQuiver = serde_json::from_str(&read(name)).expect("quiver fixture");
    (
        raw.vertices,
        raw.arrows.iter().map(|&(x, y)| (x - 1, y - 1)).collect(),
    )
}

pub fn triangulation() -> Triangulation {
    serde_json::from_str(&read("triangulation_14.json")).expect("triangulation fixture")
}

/// Diagonal carrying each quiver label.
pub fn labels() -> BTreeMap<usize, Arc> {
    let raw: BTreeMap<String, Arc> =
        serde_json::from_str(&read("labels_14.json")).expect("label fixture");
    raw.into_iter()
        .map(|(k, v)| (k.parse().expect("numeric label"), v))
        .collect()
}

pub fn label(l: usize) -> Arc {
    labels()[&l]
}

pub fn windows(name: &str) -> (Window, Window) {
    parse_window_pair(&read(name), 1).expect("window fixture")
}

/// The unique position whose module has the given support, in quiver labels.
pub fn position_with_support(t: &Triangulation, support: &[usize]) -> Arc {
    let labels = labels();
    let index: BTreeMap<Arc, usize> = labels.iter().map(|(&l, &a)| (a, l)).collect();
    let mut want = support.to_vec();
    want.sort_unstable();
    let found: Vec<Arc> = frieze_core::polygon::all_arcs(t.n())
        .into_iter()
        .filter(|&d| match module_of_arc(t, d).expect("arc in range") {
            ArcModule::Module(m) => {
                let mut s: Vec<usize> =
                    m.walk().iter().map(|&k| index[&t.diagonals()[k]]).collect();
                s.sort_unstable();
                s == want
            }
            _ => false,
        })
        .collect();
    assert_eq!(found.len(), 1, "support {support:?} at {found:?}");
    found[0]
}
