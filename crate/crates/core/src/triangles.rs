//! Triangle coefficients, clustering coefficients and the curves derived
//! from them.
//!
//! Triangles are enumerated once each by orienting every link from its
//! lower-ranked endpoint, rank being `(degree, index)`, and intersecting
//! the sorted forward lists of both endpoints. Work per link is bounded by
//! the smaller forward degree, which keeps hub-heavy graphs tractable.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::curve::{mean_by_key, MetricCurve};
use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, NodeId, UndirectedGraph};

/// Forward adjacency: neighbours of higher `(degree, index)` rank.
struct Oriented {
    offsets: Vec<usize>,
    targets: Vec<NodeId>,
}

impl Oriented {
    fn new(g: &UndirectedGraph) -> Self {
        let rank = |v: NodeId| (g.degree(v), v);
        let mut offsets = Vec::with_capacity(g.node_count() + 1);
        let mut targets = Vec::with_capacity(g.link_count());
        offsets.push(0);
        for u in g.nodes() {
            let ru = rank(u);
            targets.extend(g.neighbors(u).iter().copied().filter(|&w| rank(w) > ru));
            offsets.push(targets.len());
        }
        Self { offsets, targets }
    }

    #[inline]
    fn row(&self, v: NodeId) -> &[NodeId] {
        &self.targets[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }
}

/// Calls `f` for every element common to two ascending slices.
#[inline]
fn for_each_common(a: &[NodeId], b: &[NodeId], mut f: impl FnMut(NodeId)) {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                f(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
}

/// Visits every triangle of `g` exactly once, in parallel. The callback
/// receives the three corners in no particular order.
pub fn for_each_triangle<F>(g: &UndirectedGraph, f: F)
where
    F: Fn(NodeId, NodeId, NodeId) + Sync,
{
    let fwd = Oriented::new(g);
    (0..g.node_count() as NodeId).into_par_iter().for_each(|u| {
        let ru = fwd.row(u);
        for &v in ru {
            for_each_common(ru, fwd.row(v), |w| f(u, v, w));
        }
    });
}

fn into_counts(c: Vec<AtomicU64>) -> Vec<u64> {
    c.into_iter().map(AtomicU64::into_inner).collect()
}

fn zeroed(n: usize) -> Vec<AtomicU64> {
    (0..n).map(|_| AtomicU64::new(0)).collect()
}

/// Per-node triangle coefficient Δ together with the node degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleProfile {
    degrees: Vec<usize>,
    triangles: Vec<u64>,
}

impl TriangleProfile {
    pub fn node_count(&self) -> usize {
        self.triangles.len()
    }

    pub fn triangles(&self, v: NodeId) -> u64 {
        self.triangles[v as usize]
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.triangles
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.degrees[v as usize]
    }

    /// Number of distinct triangles in the graph.
    pub fn total_triangles(&self) -> u64 {
        self.triangles.iter().sum::<u64>() / 3
    }

    /// Mean Δ over all nodes, 0 for an empty graph.
    pub fn mean_triangle_coefficient(&self) -> f64 {
        if self.triangles.is_empty() {
            return 0.0;
        }
        self.triangles.iter().sum::<u64>() as f64 / self.triangles.len() as f64
    }

    /// C(v) as an unreduced fraction `Δ / (k(k−1)/2)`; `None` when k < 2.
    pub fn clustering_fraction(&self, v: NodeId) -> Option<(u64, u64)> {
        let k = self.degrees[v as usize] as u64;
        (k >= 2).then(|| (self.triangles[v as usize], k * (k - 1) / 2))
    }

    pub fn clustering(&self, v: NodeId) -> Option<f64> {
        self.clustering_fraction(v)
            .map(|(t, m)| t as f64 / m as f64)
    }

    /// Δ(k): mean triangle coefficient of the nodes of each realized degree.
    pub fn delta_of_k(&self) -> MetricCurve {
        mean_by_key(
            self.degrees
                .iter()
                .zip(&self.triangles)
                .map(|(&k, &t)| (k, t as f64)),
        )
    }

    /// C(k): mean clustering coefficient over nodes of degree k ≥ 2.
    pub fn c_of_k(&self) -> MetricCurve {
        mean_by_key(
            (0..self.node_count() as NodeId)
                .filter_map(|v| self.clustering(v).map(|c| (self.degree(v), c))),
        )
    }

    /// P_c(Δ): fraction of nodes whose triangle coefficient exceeds Δ,
    /// evaluated at 0 and at every realized Δ.
    pub fn ccdf(&self) -> Result<MetricCurve> {
        ccdf_of(&self.triangles)
    }
}

pub(crate) fn ccdf_of(values: &[u64]) -> Result<MetricCurve> {
    let n = values.len();
    if n == 0 {
        return Err(Error::EmptyNetwork);
    }
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    let mut points = Vec::new();
    if sorted[0] > 0 {
        points.push((0.0, 1.0));
    }
    let mut i = 0;
    while i < n {
        let x = sorted[i];
        while i < n && sorted[i] == x {
            i += 1;
        }
        points.push((x as f64, (n - i) as f64 / n as f64));
    }
    Ok(MetricCurve::from_sorted(points))
}

/// Δ(v) for every node: the number of links among v's neighbours.
pub fn triangle_coefficients(g: &UndirectedGraph) -> TriangleProfile {
    let counts = zeroed(g.node_count());
    for_each_triangle(g, |a, b, c| {
        for v in [a, b, c] {
            counts[v as usize].fetch_add(1, Ordering::Relaxed);
        }
    });
    TriangleProfile {
        degrees: g.degrees(),
        triangles: into_counts(counts),
    }
}

/// C(v) = Δ / (k(k−1)/2) for every node, `None` where k < 2.
pub fn clustering_coefficients(g: &UndirectedGraph) -> Vec<Option<f64>> {
    let p = triangle_coefficients(g);
    g.nodes().map(|v| p.clustering(v)).collect()
}

pub fn triangle_ccdf(g: &UndirectedGraph) -> Result<MetricCurve> {
    triangle_coefficients(g).ccdf()
}

pub fn delta_of_k_curve(g: &UndirectedGraph) -> MetricCurve {
    triangle_coefficients(g).delta_of_k()
}

pub fn c_of_k_curve(g: &UndirectedGraph) -> MetricCurve {
    triangle_coefficients(g).c_of_k()
}

/// In- and out-triangle coefficients of a directed graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedTriangleProfile {
    in_degrees: Vec<usize>,
    out_degrees: Vec<usize>,
    in_triangles: Vec<u64>,
    out_triangles: Vec<u64>,
}

impl DirectedTriangleProfile {
    pub fn in_triangles(&self, v: NodeId) -> u64 {
        self.in_triangles[v as usize]
    }

    pub fn out_triangles(&self, v: NodeId) -> u64 {
        self.out_triangles[v as usize]
    }

    pub fn in_slice(&self) -> &[u64] {
        &self.in_triangles
    }

    pub fn out_slice(&self) -> &[u64] {
        &self.out_triangles
    }

    /// Δ_in(k_in): mean in-triangle coefficient per realized in-degree.
    pub fn delta_in_of_k(&self) -> MetricCurve {
        mean_by_key(
            self.in_degrees
                .iter()
                .zip(&self.in_triangles)
                .map(|(&k, &t)| (k, t as f64)),
        )
    }

    /// Δ_out(k_out): mean out-triangle coefficient per realized out-degree.
    pub fn delta_out_of_k(&self) -> MetricCurve {
        mean_by_key(
            self.out_degrees
                .iter()
                .zip(&self.out_triangles)
                .map(|(&k, &t)| (k, t as f64)),
        )
    }
}

/// Δ_in(v) counts unordered pairs of in-neighbours of v joined by an arc in
/// either direction; Δ_out(v) does the same for out-neighbours. A pair
/// joined by two reciprocal arcs counts once.
pub fn directed_triangle_coefficients(g: &DirectedGraph) -> DirectedTriangleProfile {
    let n = g.node_count();
    let und = g.to_undirected();
    let ins = zeroed(n);
    let outs = zeroed(n);
    for_each_triangle(&und, |a, b, c| {
        for (v, x, y) in [(a, b, c), (b, a, c), (c, a, b)] {
            if g.has_arc(x, v) && g.has_arc(y, v) {
                ins[v as usize].fetch_add(1, Ordering::Relaxed);
            }
            if g.has_arc(v, x) && g.has_arc(v, y) {
                outs[v as usize].fetch_add(1, Ordering::Relaxed);
            }
        }
    });
    DirectedTriangleProfile {
        in_degrees: g.nodes().map(|v| g.in_degree(v)).collect(),
        out_degrees: g.nodes().map(|v| g.out_degree(v)).collect(),
        in_triangles: into_counts(ins),
        out_triangles: into_counts(outs),
    }
}
