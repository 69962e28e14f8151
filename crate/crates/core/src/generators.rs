//! Synthetic baseline graphs: preferential-attachment growth and uniform
//! random graphs. Output is a deterministic function of the parameters.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{NodeId, UndirectedGraph};

/// Parameters of the growth model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BaParams {
    pub n_final: usize,
    /// Links brought by each new node.
    pub m: usize,
    /// Size of the seed ring; must satisfy `m0 >= m`.
    pub m0: usize,
    pub seed: u64,
}

impl BaParams {
    /// Seed ring of `m` nodes.
    pub fn new(n_final: usize, m: usize, seed: u64) -> Self {
        Self {
            n_final,
            m,
            m0: m,
            seed,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.m == 0 || self.m0 < self.m || self.n_final <= self.m0 {
            return Err(Error::InvalidParams(format!(
                "need n_final > m0 >= m >= 1, got n_final={} m0={} m={}",
                self.n_final, self.m0, self.m
            )));
        }
        if self.n_final > NodeId::MAX as usize {
            return Err(Error::InvalidParams("too many nodes".into()));
        }
        Ok(())
    }
}

/// Links of a ring on `n` nodes: none for one node, a single link for two.
fn ring(n: usize) -> Vec<(NodeId, NodeId)> {
    match n {
        0 | 1 => Vec::new(),
        2 => vec![(0, 1)],
        _ => (0..n as NodeId)
            .map(|v| (v, ((v as usize + 1) % n) as NodeId))
            .collect(),
    }
}

/// Grows a graph from a ring of `m0` nodes. Each new node links to `m`
/// distinct existing nodes chosen with probability proportional to their
/// current degree, by drawing from the multiset of link endpoints and
/// rejecting repeats.
///
/// The final link count is `ring(m0) + m·(n_final − m0)`.
pub fn generate_ba(params: BaParams) -> Result<UndirectedGraph> {
    params.validate()?;
    let BaParams {
        n_final,
        m,
        m0,
        seed,
    } = params;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut links = ring(m0);
    links.reserve(m * (n_final - m0));
    let mut endpoints: Vec<NodeId> = Vec::with_capacity(2 * (links.len() + m * (n_final - m0)));
    for &(u, v) in &links {
        endpoints.push(u);
        endpoints.push(v);
    }

    let mut targets: Vec<NodeId> = Vec::with_capacity(m);
    for new in m0..n_final {
        targets.clear();
        while targets.len() < m {
            let t = if endpoints.is_empty() {
                // Only reachable from a single isolated seed node.
                rng.gen_range(0..new) as NodeId
            } else {
                endpoints[rng.gen_range(0..endpoints.len())]
            };
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        let new = new as NodeId;
        for &t in &targets {
            links.push((t, new));
            endpoints.push(t);
            endpoints.push(new);
        }
    }
    Ok(UndirectedGraph::from_index_edges(n_final, links))
}

/// How many links a uniform random graph gets.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ErSize {
    /// Each pair is linked independently with this probability, G(n, p).
    Probability(f64),
    /// Exactly this many distinct pairs, chosen uniformly, G(n, M).
    Links(u64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErParams {
    pub n: usize,
    pub size: ErSize,
    pub seed: u64,
}

impl ErParams {
    pub fn with_probability(n: usize, p: f64, seed: u64) -> Self {
        Self {
            n,
            size: ErSize::Probability(p),
            seed,
        }
    }

    pub fn with_links(n: usize, links: u64, seed: u64) -> Self {
        Self {
            n,
            size: ErSize::Links(links),
            seed,
        }
    }
}

fn pair_count(n: usize) -> u64 {
    let n = n as u64;
    n * n.saturating_sub(1) / 2
}

/// Maps `i` in `[0, n(n−1)/2)` to the pair `(w, v)` with `w < v` in
/// row-major lower-triangular order.
fn decode_pair(i: u64) -> (NodeId, NodeId) {
    let mut v = ((1.0 + (1.0 + 8.0 * i as f64).sqrt()) / 2.0) as u64;
    while v * (v - 1) / 2 > i {
        v -= 1;
    }
    while (v + 1) * v / 2 <= i {
        v += 1;
    }
    let w = i - v * (v - 1) / 2;
    (w as NodeId, v as NodeId)
}

pub fn generate_er(params: ErParams) -> Result<UndirectedGraph> {
    let ErParams { n, size, seed } = params;
    if n > NodeId::MAX as usize {
        return Err(Error::InvalidParams("too many nodes".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let links = match size {
        ErSize::Probability(p) => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidParams(format!("p = {p} outside [0, 1]")));
            }
            gnp_links(n, p, &mut rng)
        }
        ErSize::Links(target) => {
            let total = pair_count(n);
            if target > total {
                return Err(Error::InvalidParams(format!(
                    "{target} links requested but only {total} pairs exist"
                )));
            }
            gnm_links(total, target, &mut rng)
        }
    };
    Ok(UndirectedGraph::from_index_edges(n, links))
}

/// Geometric skipping over the pair sequence, O(n + L) expected.
fn gnp_links(n: usize, p: f64, rng: &mut impl Rng) -> Vec<(NodeId, NodeId)> {
    let mut links = Vec::new();
    if p <= 0.0 || n < 2 {
        return links;
    }
    if p >= 1.0 {
        for v in 1..n as NodeId {
            links.extend((0..v).map(|w| (w, v)));
        }
        return links;
    }
    let log_q = (1.0 - p).ln();
    let (mut v, mut w) = (1i64, -1i64);
    let n = n as i64;
    while v < n {
        let r: f64 = rng.gen();
        w += 1 + ((1.0 - r).ln() / log_q).floor() as i64;
        while w >= v && v < n {
            w -= v;
            v += 1;
        }
        if v < n {
            links.push((w as NodeId, v as NodeId));
        }
    }
    links
}

/// Floyd's sampling of `target` distinct pair indices out of `total`.
fn gnm_links(total: u64, target: u64, rng: &mut impl Rng) -> Vec<(NodeId, NodeId)> {
    let mut chosen = HashSet::with_capacity(target as usize);
    let mut links = Vec::with_capacity(target as usize);
    for j in total - target..total {
        let t = rng.gen_range(0..=j);
        let pick = if chosen.contains(&t) { j } else { t };
        chosen.insert(pick);
        links.push(decode_pair(pick));
    }
    links
}
