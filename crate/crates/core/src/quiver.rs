//! The quiver with relations of a triangulation, plus an exchange-matrix
//! mutation used as an independent check on flips.

use std::collections::BTreeSet;

use petgraph::algo::isomorphism::subgraph_isomorphisms_iter;
use petgraph::graph::DiGraph;

use crate::polygon::{ccw, Arc, Triangulation};

/// Vertices are the diagonals of a triangulation, indexed by their position
/// in [`Triangulation::diagonals`]. Relations are length-two paths `x -> y -> z`
/// lying on an oriented 3-cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverWithRelations {
    vertices: Vec<Arc>,
    arrows: BTreeSet<(usize, usize)>,
    relations: BTreeSet<(usize, usize, usize)>,
}

/// Arrow `x -> y` whenever `x` and `y` share an endpoint and `y` is the next
/// diagonal reached by turning `x` clockwise about that endpoint.
pub fn quiver_of_triangulation(t: &Triangulation) -> QuiverWithRelations {
    let n = t.n();
    let ds = t.diagonals();
    let mut arrows = BTreeSet::new();
    for v in 1..=n {
        let mut fan: Vec<(usize, usize)> = ds
            .iter()
            .enumerate()
            .filter_map(|(k, d)| d.other(v).map(|w| (ccw(n, v, w), k)))
            .collect();
        // Clockwise about v means decreasing counterclockwise offset.
        fan.sort_unstable_by(|a, b| b.cmp(a));
        for w in fan.windows(2) {
            arrows.insert((w[0].1, w[1].1));
        }
    }
    let mut relations = BTreeSet::new();
    for &(x, y) in &arrows {
        for &(_, z) in arrows.range((y, 0)..(y + 1, 0)) {
            if arrows.contains(&(z, x)) {
                relations.insert((x, y, z));
            }
        }
    }
    QuiverWithRelations {
        vertices: ds.to_vec(),
        arrows,
        relations,
    }
}

impl QuiverWithRelations {
    pub fn vertices(&self) -> &[Arc] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn arrows(&self) -> &BTreeSet<(usize, usize)> {
        &self.arrows
    }

    pub fn relations(&self) -> &BTreeSet<(usize, usize, usize)> {
        &self.relations
    }

    pub fn has_arrow(&self, x: usize, y: usize) -> bool {
        self.arrows.contains(&(x, y))
    }

    /// Whether the path `x -> y -> z` is zero.
    pub fn is_relation(&self, x: usize, y: usize, z: usize) -> bool {
        self.relations.contains(&(x, y, z))
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arrows.iter().filter(|a| a.1 == v).count()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arrows.iter().filter(|a| a.0 == v).count()
    }

    /// Arrows with both ends given as diagonals.
    pub fn arc_arrows(&self) -> Vec<(Arc, Arc)> {
        self.arrows
            .iter()
            .map(|&(x, y)| (self.vertices[x], self.vertices[y]))
            .collect()
    }

    pub fn exchange_matrix(&self) -> ExchangeMatrix {
        let k = self.vertices.len();
        let mut b = vec![vec![0i64; k]; k];
        for &(x, y) in &self.arrows {
            b[x][y] += 1;
            b[y][x] -= 1;
        }
        ExchangeMatrix {
            labels: self.vertices.clone(),
            entries: b,
        }
    }

    fn graph(&self) -> DiGraph<(), ()> {
        let mut g = DiGraph::new();
        let nodes: Vec<_> = (0..self.len()).map(|_| g.add_node(())).collect();
        for &(x, y) in &self.arrows {
            g.add_edge(nodes[x], nodes[y], ());
        }
        g
    }
}

/// All isomorphisms from a quiver given by `arrows` on vertices `0..k` onto
/// `q`, each as the image of every vertex.
pub fn isomorphisms(
    k: usize,
    arrows: &[(usize, usize)],
    q: &QuiverWithRelations,
) -> Vec<Vec<usize>> {
    if k != q.len() || arrows.len() != q.arrows().len() {
        return Vec::new();
    }
    let mut g0 = DiGraph::<(), ()>::new();
    let nodes: Vec<_> = (0..k).map(|_| g0.add_node(())).collect();
    for &(x, y) in arrows {
        g0.add_edge(nodes[x], nodes[y], ());
    }
    let g1 = q.graph();
    let mut nm = |_: &(), _: &()| true;
    let mut em = |_: &(), _: &()| true;
    let (g0, g1) = (&g0, &g1);
    let found: Vec<Vec<usize>> = match subgraph_isomorphisms_iter(&g0, &g1, &mut nm, &mut em) {
        Some(it) => it.collect(),
        None => Vec::new(),
    };
    found
}

/// Skew-symmetric exchange matrix with rows labelled by diagonals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeMatrix {
    labels: Vec<Arc>,
    entries: Vec<Vec<i64>>,
}

impl ExchangeMatrix {
    pub fn labels(&self) -> &[Arc] {
        &self.labels
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    /// Matrix mutation at index `k`.
    pub fn mutate(&self, k: usize) -> ExchangeMatrix {
        let b = &self.entries;
        let size = b.len();
        let mut out = b.clone();
        for i in 0..size {
            for j in 0..size {
                out[i][j] = if i == k || j == k {
                    -b[i][j]
                } else {
                    b[i][j] + (b[i][k].abs() * b[k][j] + b[i][k] * b[k][j].abs()) / 2
                };
            }
        }
        ExchangeMatrix {
            labels: self.labels.clone(),
            entries: out,
        }
    }

    /// Renames row and column `k`.
    pub fn relabel(mut self, k: usize, label: Arc) -> ExchangeMatrix {
        self.labels[k] = label;
        self
    }

    /// Rows and columns permuted into increasing label order.
    pub fn canonical(&self) -> ExchangeMatrix {
        let mut order: Vec<usize> = (0..self.labels.len()).collect();
        order.sort_by_key(|&i| self.labels[i]);
        ExchangeMatrix {
            labels: order.iter().map(|&i| self.labels[i]).collect(),
            entries: order
                .iter()
                .map(|&i| order.iter().map(|&j| self.entries[i][j]).collect())
                .collect(),
        }
    }
}
