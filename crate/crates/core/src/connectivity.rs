//! Degree-based metrics: degree distribution, joint degree distribution,
//! nearest-neighbour average degree, assortative coefficient and rich-club
//! connectivity.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::curve::MetricCurve;
use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;
use crate::triangles::{self, TriangleProfile};

/// P(k): fraction of nodes with degree `k`, for every realized `k`.
pub fn degree_distribution(g: &UndirectedGraph) -> Result<MetricCurve> {
    let n = g.node_count();
    if n == 0 {
        return Err(Error::EmptyNetwork);
    }
    let mut counts = vec![0usize; g.max_degree() + 1];
    for v in g.nodes() {
        counts[g.degree(v)] += 1;
    }
    Ok(MetricCurve::from_sorted(
        counts
            .into_iter()
            .enumerate()
            .filter(|&(_, c)| c > 0)
            .map(|(k, c)| (k as f64, c as f64 / n as f64))
            .collect(),
    ))
}

/// Average degree 2L/N.
pub fn average_degree(g: &UndirectedGraph) -> Result<f64> {
    match g.node_count() {
        0 => Err(Error::EmptyNetwork),
        n => Ok(2.0 * g.link_count() as f64 / n as f64),
    }
}

/// P(k, k') over ordered endpoint pairs. Each link `{u, v}` contributes
/// `(k_u, k_v)` and `(k_v, k_u)` with weight `1 / 2L`, so the table is
/// symmetric and sums to one.
#[derive(Debug, Clone, PartialEq)]
pub struct JointDegreeDistribution {
    entries: BTreeMap<(usize, usize), f64>,
}

impl JointDegreeDistribution {
    pub fn get(&self, k: usize, k2: usize) -> f64 {
        self.entries.get(&(k, k2)).copied().unwrap_or(0.0)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), f64)> + '_ {
        self.entries.iter().map(|(&k, &p)| (k, p))
    }

    pub fn total(&self) -> f64 {
        self.entries.values().sum()
    }

    /// Recovers P(k) = (k̄/k) Σ_k' P(k, k') for every k ≥ 1.
    pub fn degree_marginal(&self, average_degree: f64) -> MetricCurve {
        let mut rows: BTreeMap<usize, f64> = BTreeMap::new();
        for (&(k, _), &p) in &self.entries {
            *rows.entry(k).or_default() += p;
        }
        MetricCurve::from_sorted(
            rows.into_iter()
                .map(|(k, s)| (k as f64, average_degree / k as f64 * s))
                .collect(),
        )
    }

    /// k_nn(k) = k̄ Σ_k' k' P(k, k') / (k P(k)), taking P(k) from `pk`.
    pub fn knn_projection(&self, average_degree: f64, pk: &MetricCurve) -> MetricCurve {
        let mut rows: BTreeMap<usize, f64> = BTreeMap::new();
        for (&(k, k2), &p) in &self.entries {
            *rows.entry(k).or_default() += k2 as f64 * p;
        }
        MetricCurve::from_sorted(
            rows.into_iter()
                .filter_map(|(k, s)| {
                    let p = pk.get(k as f64)?;
                    Some((k as f64, average_degree * s / (k as f64 * p)))
                })
                .collect(),
        )
    }
}

pub fn joint_degree_distribution(g: &UndirectedGraph) -> Result<JointDegreeDistribution> {
    let l = g.link_count();
    if l == 0 {
        return Err(Error::NoLinks);
    }
    let mut counts: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for (u, v) in g.links() {
        let (a, b) = (g.degree(u), g.degree(v));
        *counts.entry((a, b)).or_default() += 1;
        *counts.entry((b, a)).or_default() += 1;
    }
    let w = 1.0 / (2 * l) as f64;
    Ok(JointDegreeDistribution {
        entries: counts.into_iter().map(|(k, c)| (k, c as f64 * w)).collect(),
    })
}

/// k_nn(k): mean degree of the neighbours of k-degree nodes, pooled over
/// all their link endpoints. Isolated nodes are skipped.
pub fn knn_curve(g: &UndirectedGraph) -> Result<MetricCurve> {
    if g.node_count() == 0 {
        return Err(Error::EmptyNetwork);
    }
    let mut acc: BTreeMap<usize, (u64, u64)> = BTreeMap::new();
    for v in g.nodes() {
        let k = g.degree(v);
        if k == 0 {
            continue;
        }
        let s: u64 = g.neighbors(v).iter().map(|&w| g.degree(w) as u64).sum();
        let e = acc.entry(k).or_default();
        e.0 += s;
        e.1 += k as u64;
    }
    Ok(MetricCurve::from_sorted(
        acc.into_iter()
            .map(|(k, (s, ends))| (k as f64, s as f64 / ends as f64))
            .collect(),
    ))
}

/// Assortative coefficient over the L links with endpoint degrees
/// `(s_i, d_i)`.
///
/// Sums are accumulated exactly in integers. Returns `None` when the graph
/// has no links or every link endpoint has the same degree (the denominator
/// vanishes), e.g. for regular graphs.
pub fn assortative_coefficient(g: &UndirectedGraph) -> Option<f64> {
    let l = g.link_count() as i128;
    if l == 0 {
        return None;
    }
    let (mut sum, mut prod, mut sq) = (0i128, 0i128, 0i128);
    for (u, v) in g.links() {
        let (s, d) = (g.degree(u) as i128, g.degree(v) as i128);
        sum += s + d;
        prod += s * d;
        sq += s * s + d * d;
    }
    // Numerator and denominator both scaled by 4L².
    let num = 4 * l * prod - sum * sum;
    let den = 2 * l * sq - sum * sum;
    if den == 0 {
        None
    } else {
        Some(num as f64 / den as f64)
    }
}

/// φ(k) = 2 E_{>k} / (N_{>k} (N_{>k} − 1)), evaluated at every realized
/// degree `k` with N_{>k} ≥ 2.
pub fn rich_club_curve(g: &UndirectedGraph) -> MetricCurve {
    let kmax = g.max_degree();
    let mut nodes_at = vec![0u64; kmax + 1];
    for v in g.nodes() {
        nodes_at[g.degree(v)] += 1;
    }
    // A link is inside the club above k iff its lower endpoint degree is > k.
    let mut links_at = vec![0u64; kmax + 1];
    for (u, v) in g.links() {
        links_at[g.degree(u).min(g.degree(v))] += 1;
    }
    let mut points = Vec::new();
    let (mut n_above, mut e_above) = (0u64, 0u64);
    for k in (0..=kmax).rev() {
        if nodes_at[k] > 0 && n_above >= 2 {
            let phi = 2.0 * e_above as f64 / (n_above as f64 * (n_above - 1) as f64);
            points.push((k as f64, phi));
        }
        n_above += nodes_at[k];
        e_above += links_at[k];
    }
    points.reverse();
    MetricCurve::from_sorted(points)
}

/// Scalar profile of one network.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NetworkSummary {
    pub node_count: usize,
    pub link_count: usize,
    pub average_degree: f64,
    /// `None` when undefined (no links, or zero degree variance).
    pub assortative_coefficient: Option<f64>,
    pub mean_triangle_coefficient: f64,
}

pub fn network_summary(g: &UndirectedGraph) -> Result<NetworkSummary> {
    network_summary_with(g, &triangles::triangle_coefficients(g))
}

/// As [`network_summary`], reusing an existing triangle profile of `g`.
pub fn network_summary_with(g: &UndirectedGraph, tri: &TriangleProfile) -> Result<NetworkSummary> {
    Ok(NetworkSummary {
        node_count: g.node_count(),
        link_count: g.link_count(),
        average_degree: average_degree(g)?,
        assortative_coefficient: assortative_coefficient(g),
        mean_triangle_coefficient: tri.mean_triangle_coefficient(),
    })
}
