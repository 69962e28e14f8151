//! Brute-force reference implementations, written directly from the metric
//! definitions over a dense adjacency matrix. Nothing here calls into the
//! library's metric code.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use linktopo::connectivity::{
    assortative_coefficient, degree_distribution, joint_degree_distribution, knn_curve,
    rich_club_curve,
};
use linktopo::triangles::{directed_triangle_coefficients, triangle_coefficients};
use linktopo::{DirectedGraph, MetricCurve, NodeId, UndirectedGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const RATIO_TOL: f64 = 1e-9;

/// Dense symmetric adjacency built from raw pairs; self-loops ignored.
pub struct Dense {
    pub adj: Vec<Vec<bool>>,
}

impl Dense {
    pub fn new(n: usize, pairs: &[(u32, u32)]) -> Self {
        let mut adj = vec![vec![false; n]; n];
        for &(u, v) in pairs {
            if u != v {
                adj[u as usize][v as usize] = true;
                adj[v as usize][u as usize] = true;
            }
        }
        Self { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&b| b).count()
    }

    pub fn links(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn pk(&self) -> BTreeMap<usize, f64> {
        let mut m = BTreeMap::new();
        for v in 0..self.n() {
            *m.entry(self.degree(v)).or_insert(0.0) += 1.0;
        }
        m.values_mut().for_each(|c| *c /= self.n() as f64);
        m
    }

    pub fn jdd(&self) -> BTreeMap<(usize, usize), f64> {
        let mut m = BTreeMap::new();
        let mut total = 0.0;
        for u in 0..self.n() {
            for v in 0..self.n() {
                if self.adj[u][v] {
                    *m.entry((self.degree(u), self.degree(v))).or_insert(0.0) += 1.0;
                    total += 1.0;
                }
            }
        }
        m.values_mut().for_each(|c| *c /= total);
        m
    }

    pub fn knn(&self) -> BTreeMap<usize, f64> {
        let mut acc: BTreeMap<usize, (f64, f64)> = BTreeMap::new();
        for v in 0..self.n() {
            let k = self.degree(v);
            if k == 0 {
                continue;
            }
            for w in 0..self.n() {
                if self.adj[v][w] {
                    let e = acc.entry(k).or_insert((0.0, 0.0));
                    e.0 += self.degree(w) as f64;
                    e.1 += 1.0;
                }
            }
        }
        acc.into_iter().map(|(k, (s, c))| (k, s / c)).collect()
    }

    /// Pearson correlation of degrees over ordered endpoint pairs.
    pub fn pearson(&self) -> Option<f64> {
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for u in 0..self.n() {
            for v in 0..self.n() {
                if self.adj[u][v] {
                    xs.push(self.degree(u) as f64);
                    ys.push(self.degree(v) as f64);
                }
            }
        }
        if xs.is_empty() {
            return None;
        }
        let n = xs.len() as f64;
        let mx = xs.iter().sum::<f64>() / n;
        let my = ys.iter().sum::<f64>() / n;
        let cov: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
        let vx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
        let vy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
        if vx == 0.0 || vy == 0.0 {
            return None;
        }
        Some(cov / (vx * vy).sqrt())
    }

    pub fn phi(&self) -> BTreeMap<usize, f64> {
        let degrees: BTreeSet<usize> = (0..self.n()).map(|v| self.degree(v)).collect();
        let mut m = BTreeMap::new();
        for &k in &degrees {
            let rich: Vec<usize> = (0..self.n()).filter(|&v| self.degree(v) > k).collect();
            if rich.len() < 2 {
                continue;
            }
            let mut e = 0usize;
            for i in 0..rich.len() {
                for j in i + 1..rich.len() {
                    if self.adj[rich[i]][rich[j]] {
                        e += 1;
                    }
                }
            }
            m.insert(k, 2.0 * e as f64 / (rich.len() * (rich.len() - 1)) as f64);
        }
        m
    }

    pub fn triangles(&self) -> Vec<u64> {
        let n = self.n();
        let mut t = vec![0u64; n];
        for a in 0..n {
            for b in a + 1..n {
                if !self.adj[a][b] {
                    continue;
                }
                for c in b + 1..n {
                    if self.adj[a][c] && self.adj[b][c] {
                        t[a] += 1;
                        t[b] += 1;
                        t[c] += 1;
                    }
                }
            }
        }
        t
    }

    pub fn clustering(&self) -> Vec<Option<f64>> {
        let t = self.triangles();
        (0..self.n())
            .map(|v| {
                let k = self.degree(v) as f64;
                (k >= 2.0).then(|| t[v] as f64 / (k * (k - 1.0) / 2.0))
            })
            .collect()
    }

    pub fn ccdf(&self) -> BTreeMap<u64, f64> {
        let t = self.triangles();
        let mut xs: BTreeSet<u64> = t.iter().copied().collect();
        xs.insert(0);
        xs.into_iter()
            .map(|x| {
                (
                    x,
                    t.iter().filter(|&&d| d > x).count() as f64 / self.n() as f64,
                )
            })
            .collect()
    }
}

/// Dense arc matrix for directed checks.
pub struct DenseDirected {
    pub arc: Vec<Vec<bool>>,
}

impl DenseDirected {
    pub fn new(n: usize, arcs: &[(u32, u32)]) -> Self {
        let mut arc = vec![vec![false; n]; n];
        for &(u, v) in arcs {
            if u != v {
                arc[u as usize][v as usize] = true;
            }
        }
        Self { arc }
    }

    /// (Δ_in, Δ_out) per node by pair enumeration.
    pub fn triangles(&self) -> (Vec<u64>, Vec<u64>) {
        let n = self.arc.len();
        let linked = |a: usize, b: usize| self.arc[a][b] || self.arc[b][a];
        let mut tin = vec![0; n];
        let mut tout = vec![0; n];
        for v in 0..n {
            for a in 0..n {
                for b in a + 1..n {
                    if a == v || b == v || !linked(a, b) {
                        continue;
                    }
                    if self.arc[a][v] && self.arc[b][v] {
                        tin[v] += 1;
                    }
                    if self.arc[v][a] && self.arc[v][b] {
                        tout[v] += 1;
                    }
                }
            }
        }
        (tin, tout)
    }
}

/// Raw G(n, p) pairs from nested loops, salted with self-loops and
/// repeated or reversed pairs to exercise cleaning.
pub fn raw_gnp(n: usize, p: f64, seed: u64) -> Vec<(u32, u32)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.gen::<f64>() < p {
                pairs.push((u, v));
                if rng.gen::<f64>() < 0.05 {
                    pairs.push((v, u));
                }
            }
        }
        if rng.gen::<f64>() < 0.02 {
            pairs.push((u, u));
        }
    }
    pairs
}

/// Raw random arcs: each ordered pair independently with probability p.
pub fn raw_arcs(n: usize, p: f64, seed: u64) -> Vec<(u32, u32)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = Vec::new();
    for u in 0..n as u32 {
        for v in 0..n as u32 {
            if u != v && rng.gen::<f64>() < p {
                arcs.push((u, v));
            }
        }
    }
    arcs
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= RATIO_TOL
}

fn curve_matches<K: Copy + Into<f64>>(
    name: &str,
    got: &MetricCurve,
    want: &BTreeMap<K, f64>,
) -> Result<(), String> {
    if got.len() != want.len() {
        return Err(format!(
            "{name}: {} points, oracle has {}",
            got.len(),
            want.len()
        ));
    }
    for (&(x, y), (&k, &w)) in got.points().iter().zip(want) {
        if x != k.into() || !close(y, w) {
            return Err(format!(
                "{name}: got ({x}, {y}), oracle ({}, {w})",
                k.into()
            ));
        }
    }
    Ok(())
}

fn degree_keyed(m: &BTreeMap<usize, f64>) -> BTreeMap<u32, f64> {
    m.iter().map(|(&k, &v)| (k as u32, v)).collect()
}

/// Every undirected metric of `g` against the dense oracle built from the
/// same raw pairs.
pub fn check_undirected(n: usize, raw: &[(u32, u32)]) -> Result<(), String> {
    let g = UndirectedGraph::from_index_edges(n, raw.to_vec());
    let d = Dense::new(n, raw);

    if g.link_count() != d.links() {
        return Err(format!("L = {}, oracle {}", g.link_count(), d.links()));
    }
    for v in 0..n {
        if g.degree(v as NodeId) != d.degree(v) {
            return Err(format!("degree({v})"));
        }
    }
    curve_matches(
        "P(k)",
        &degree_distribution(&g).unwrap(),
        &degree_keyed(&d.pk()),
    )?;

    if g.link_count() > 0 {
        let j = joint_degree_distribution(&g).unwrap();
        let want = d.jdd();
        if j.entries().count() != want.len() {
            return Err("P(k,k') support differs".into());
        }
        for ((k, k2), p) in j.entries() {
            if !close(p, want[&(k, k2)]) {
                return Err(format!("P({k},{k2}) = {p}, oracle {}", want[&(k, k2)]));
            }
        }
    }
    curve_matches("knn", &knn_curve(&g).unwrap(), &degree_keyed(&d.knn()))?;

    match (assortative_coefficient(&g), d.pearson()) {
        (Some(a), Some(b)) if close(a, b) => {}
        (None, None) => {}
        (a, b) => return Err(format!("alpha = {a:?}, oracle {b:?}")),
    }
    curve_matches("phi", &rich_club_curve(&g), &degree_keyed(&d.phi()))?;

    let t = triangle_coefficients(&g);
    let want_t = d.triangles();
    if t.as_slice() != want_t.as_slice() {
        return Err("triangle coefficients differ".into());
    }
    for (v, want) in d.clustering().into_iter().enumerate() {
        match (t.clustering(v as NodeId), want) {
            (Some(a), Some(b)) if close(a, b) => {}
            (None, None) => {}
            (a, b) => return Err(format!("C({v}) = {a:?}, oracle {b:?}")),
        }
    }
    let pc: BTreeMap<u32, f64> = d.ccdf().into_iter().map(|(k, v)| (k as u32, v)).collect();
    curve_matches("P_c", &t.ccdf().unwrap(), &pc)?;
    Ok(())
}

/// Δ_in and Δ_out against pair enumeration.
pub fn check_directed(n: usize, arcs: &[(u32, u32)]) -> Result<(), String> {
    let g = DirectedGraph::from_index_arcs(n, arcs.to_vec());
    let p = directed_triangle_coefficients(&g);
    let (tin, tout) = DenseDirected::new(n, arcs).triangles();
    if p.in_slice() != tin.as_slice() {
        return Err("in-triangle coefficients differ".into());
    }
    if p.out_slice() != tout.as_slice() {
        return Err("out-triangle coefficients differ".into());
    }
    Ok(())
}

/// Normalization and projection identities that must hold on any graph.
pub fn check_identities(g: &UndirectedGraph) -> Result<(), String> {
    use linktopo::connectivity::average_degree;

    const SUM_TOL: f64 = 1e-12;
    let pk = degree_distribution(g).map_err(|e| e.to_string())?;
    let s: f64 = pk.ys().sum();
    if (s - 1.0).abs() > SUM_TOL {
        return Err(format!("sum P(k) = {s}"));
    }
    let t = triangle_coefficients(g);
    if t.as_slice().iter().sum::<u64>() % 3 != 0 {
        return Err("sum of triangle coefficients not divisible by 3".into());
    }
    for v in g.nodes() {
        let k = g.degree(v) as u64;
        if k >= 2 && t.clustering_fraction(v) != Some((t.triangles(v), k * (k - 1) / 2)) {
            return Err(format!("C({v}) inconsistent with Δ"));
        }
        if 2 * t.triangles(v) > k * k.saturating_sub(1) {
            return Err(format!("Δ({v}) exceeds k(k-1)/2"));
        }
    }
    if rich_club_curve(g).ys().any(|y| !(0.0..=1.0).contains(&y)) {
        return Err("phi outside [0, 1]".into());
    }
    if g.link_count() == 0 {
        return Ok(());
    }
    let kbar = average_degree(g).unwrap();
    let j = joint_degree_distribution(g).unwrap();
    if (j.total() - 1.0).abs() > SUM_TOL {
        return Err(format!("sum P(k,k') = {}", j.total()));
    }
    for ((k, k2), p) in j.entries() {
        if p != j.get(k2, k) {
            return Err(format!("P({k},{k2}) not symmetric"));
        }
    }
    let marginal = j.degree_marginal(kbar);
    for &(k, p) in pk.points().iter().filter(|p| p.0 >= 1.0) {
        let m = marginal.get(k).unwrap_or(0.0);
        if (m - p).abs() > SUM_TOL {
            return Err(format!("(k̄/k) Σ P(k,k') = {m} but P({k}) = {p}"));
        }
    }
    let direct = knn_curve(g).unwrap();
    let projected = j.knn_projection(kbar, &pk);
    if direct.len() != projected.len()
        || direct
            .points()
            .iter()
            .zip(projected.points())
            .any(|(a, b)| a.0 != b.0 || (a.1 - b.1).abs() > RATIO_TOL)
    {
        return Err("k_nn differs from its joint-distribution projection".into());
    }
    if let Some(a) = assortative_coefficient(g) {
        if !(-1.0 - RATIO_TOL..=1.0 + RATIO_TOL).contains(&a) {
            return Err(format!("alpha = {a}"));
        }
    }
    Ok(())
}
