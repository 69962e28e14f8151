//! Cleaned simple graphs in compressed sparse row form.
//!
//! Construction drops self-loops and collapses duplicate links. Every
//! neighbor list is sorted ascending so neighbor sets can be intersected by
//! a linear merge. Graphs are immutable once built.

use std::collections::HashMap;
use std::sync::OnceLock;

/// Contiguous node index in `[0, N)`.
pub type NodeId = u32;

/// Bijection between external labels and node indices.
#[derive(Debug, Default)]
pub struct Labels {
    names: Vec<Box<str>>,
    index: OnceLock<HashMap<Box<str>, NodeId>>,
}

impl Labels {
    fn from_names(names: Vec<Box<str>>) -> Self {
        Self {
            names,
            index: OnceLock::new(),
        }
    }

    /// Labels `"0"`, `"1"`, … for graphs built from raw indices.
    fn numeric(n: usize) -> Self {
        Self::from_names((0..n).map(|i| i.to_string().into_boxed_str()).collect())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, v: NodeId) -> &str {
        &self.names[v as usize]
    }

    pub fn id(&self, label: &str) -> Option<NodeId> {
        self.index
            .get_or_init(|| {
                self.names
                    .iter()
                    .enumerate()
                    .map(|(i, s)| (s.clone(), i as NodeId))
                    .collect()
            })
            .get(label)
            .copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(|s| &**s)
    }
}

impl Clone for Labels {
    fn clone(&self) -> Self {
        Self::from_names(self.names.clone())
    }
}

impl PartialEq for Labels {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for Labels {}

/// Sorted, deduplicated adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Csr {
    offsets: Vec<usize>,
    targets: Vec<NodeId>,
}

impl Csr {
    /// `pairs` must be sorted by `(source, target)` without duplicates.
    fn from_sorted_pairs(n: usize, pairs: &[(NodeId, NodeId)]) -> Self {
        let mut offsets = vec![0usize; n + 1];
        for &(u, _) in pairs {
            offsets[u as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let targets = pairs.iter().map(|&(_, v)| v).collect();
        Self { offsets, targets }
    }

    #[inline]
    fn row(&self, v: NodeId) -> &[NodeId] {
        let v = v as usize;
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    fn row_len(&self, v: NodeId) -> usize {
        let v = v as usize;
        self.offsets[v + 1] - self.offsets[v]
    }
}

fn sort_dedup(pairs: &mut Vec<(NodeId, NodeId)>) {
    pairs.sort_unstable();
    pairs.dedup();
}

/// Simple undirected graph: no self-loops, no parallel links.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    labels: Labels,
    adj: Csr,
    link_count: usize,
}

impl UndirectedGraph {
    fn from_parts(labels: Labels, mut links: Vec<(NodeId, NodeId)>) -> Self {
        let n = labels.len();
        for p in links.iter_mut() {
            if p.0 > p.1 {
                *p = (p.1, p.0);
            }
        }
        links.retain(|&(u, v)| u != v);
        sort_dedup(&mut links);
        let link_count = links.len();
        let mut both = Vec::with_capacity(2 * link_count);
        for &(u, v) in &links {
            both.push((u, v));
            both.push((v, u));
        }
        drop(links);
        both.sort_unstable();
        Self {
            labels,
            adj: Csr::from_sorted_pairs(n, &both),
            link_count,
        }
    }

    /// Builds a graph on nodes `0..n` labelled by their index. Self-loops
    /// and duplicates are cleaned as in [`build_undirected`].
    ///
    /// # Panics
    /// If an endpoint is `>= n`.
    pub fn from_index_edges(n: usize, edges: Vec<(NodeId, NodeId)>) -> Self {
        assert!(
            edges
                .iter()
                .all(|&(u, v)| (u as usize) < n && (v as usize) < n),
            "edge endpoint out of range"
        );
        Self::from_parts(Labels::numeric(n), edges)
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn link_count(&self) -> usize {
        self.link_count
    }

    pub fn labels(&self) -> &Labels {
        &self.labels
    }

    #[inline]
    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        self.adj.row(v)
    }

    #[inline]
    pub fn degree(&self, v: NodeId) -> usize {
        self.adj.row_len(v)
    }

    pub fn nodes(&self) -> impl ExactSizeIterator<Item = NodeId> {
        0..self.node_count() as NodeId
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.nodes().map(|v| self.degree(v)).collect()
    }

    pub fn has_link(&self, u: NodeId, v: NodeId) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors(a).binary_search(&b).is_ok()
    }

    /// Every link once, as `(u, v)` with `u < v`, in ascending order.
    pub fn links(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.nodes().flat_map(move |u| {
            let row = self.neighbors(u);
            let start = row.partition_point(|&w| w <= u);
            row[start..].iter().map(move |&v| (u, v))
        })
    }

    /// Largest degree, or 0 for an empty graph.
    pub fn max_degree(&self) -> usize {
        self.nodes().map(|v| self.degree(v)).max().unwrap_or(0)
    }
}

/// Simple directed graph: no self-loops, no duplicate arcs. Reciprocal arcs
/// `u -> v` and `v -> u` are both kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedGraph {
    labels: Labels,
    out_adj: Csr,
    in_adj: Csr,
    arc_count: usize,
}

impl DirectedGraph {
    fn from_parts(labels: Labels, mut arcs: Vec<(NodeId, NodeId)>) -> Self {
        let n = labels.len();
        arcs.retain(|&(u, v)| u != v);
        sort_dedup(&mut arcs);
        let out_adj = Csr::from_sorted_pairs(n, &arcs);
        for p in arcs.iter_mut() {
            *p = (p.1, p.0);
        }
        arcs.sort_unstable();
        let in_adj = Csr::from_sorted_pairs(n, &arcs);
        Self {
            labels,
            out_adj,
            in_adj,
            arc_count: arcs.len(),
        }
    }

    /// Directed counterpart of [`UndirectedGraph::from_index_edges`].
    ///
    /// # Panics
    /// If an endpoint is `>= n`.
    pub fn from_index_arcs(n: usize, arcs: Vec<(NodeId, NodeId)>) -> Self {
        assert!(
            arcs.iter()
                .all(|&(u, v)| (u as usize) < n && (v as usize) < n),
            "arc endpoint out of range"
        );
        Self::from_parts(Labels::numeric(n), arcs)
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn labels(&self) -> &Labels {
        &self.labels
    }

    #[inline]
    pub fn out_neighbors(&self, v: NodeId) -> &[NodeId] {
        self.out_adj.row(v)
    }

    #[inline]
    pub fn in_neighbors(&self, v: NodeId) -> &[NodeId] {
        self.in_adj.row(v)
    }

    #[inline]
    pub fn out_degree(&self, v: NodeId) -> usize {
        self.out_adj.row_len(v)
    }

    #[inline]
    pub fn in_degree(&self, v: NodeId) -> usize {
        self.in_adj.row_len(v)
    }

    pub fn nodes(&self) -> impl ExactSizeIterator<Item = NodeId> {
        0..self.node_count() as NodeId
    }

    #[inline]
    pub fn has_arc(&self, u: NodeId, v: NodeId) -> bool {
        self.out_neighbors(u).binary_search(&v).is_ok()
    }

    /// Every arc in ascending `(source, target)` order.
    pub fn arcs(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.nodes()
            .flat_map(move |u| self.out_neighbors(u).iter().map(move |&v| (u, v)))
    }

    /// Underlying undirected graph: `{u, v}` iff `u -> v` or `v -> u`.
    /// Node indices and labels are preserved.
    pub fn to_undirected(&self) -> UndirectedGraph {
        UndirectedGraph::from_parts(self.labels.clone(), self.arcs().collect())
    }
}

/// Interns labels in first-appearance order and collects raw index pairs.
#[derive(Debug, Default)]
pub struct GraphBuilder {
    ids: HashMap<Box<str>, NodeId>,
    names: Vec<Box<str>>,
    pairs: Vec<(NodeId, NodeId)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registers `label` as a node, returning its index.
    pub fn add_node(&mut self, label: &str) -> NodeId {
        if let Some(&id) = self.ids.get(label) {
            return id;
        }
        let id = NodeId::try_from(self.names.len()).expect("more than u32::MAX nodes");
        let name: Box<str> = label.into();
        self.ids.insert(name.clone(), id);
        self.names.push(name);
        id
    }

    /// Records a link or arc. Both endpoints become nodes even when the
    /// pair is a self-loop, which is discarded at build time.
    pub fn add_edge(&mut self, a: &str, b: &str) {
        let u = self.add_node(a);
        let v = self.add_node(b);
        if u != v {
            self.pairs.push((u, v));
        }
    }

    pub fn extend<I, S>(&mut self, edges: I)
    where
        I: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        for (a, b) in edges {
            self.add_edge(a.as_ref(), b.as_ref());
        }
    }

    fn into_parts(self) -> (Labels, Vec<(NodeId, NodeId)>) {
        drop(self.ids);
        (Labels::from_names(self.names), self.pairs)
    }

    pub fn build_undirected(self) -> UndirectedGraph {
        let (labels, pairs) = self.into_parts();
        UndirectedGraph::from_parts(labels, pairs)
    }

    pub fn build_directed(self) -> DirectedGraph {
        let (labels, pairs) = self.into_parts();
        DirectedGraph::from_parts(labels, pairs)
    }
}

/// Builds a simple undirected graph from labelled pairs, dropping
/// self-loops and collapsing `(u, v)`, `(v, u)` and repeats into one link.
/// Labels are numbered in order of first appearance.
pub fn build_undirected<I, S>(edges: I) -> UndirectedGraph
where
    I: IntoIterator<Item = (S, S)>,
    S: AsRef<str>,
{
    let mut b = GraphBuilder::new();
    b.extend(edges);
    b.build_undirected()
}

/// Builds a simple directed graph from labelled arcs. Direction is kept;
/// self-loops and repeated arcs are dropped.
pub fn build_directed<I, S>(arcs: I) -> DirectedGraph
where
    I: IntoIterator<Item = (S, S)>,
    S: AsRef<str>,
{
    let mut b = GraphBuilder::new();
    b.extend(arcs);
    b.build_directed()
}

/// Rebuilds `g` from its own labels and links. Used to check that
/// construction is idempotent.
pub fn relabel_roundtrip(g: &UndirectedGraph) -> UndirectedGraph {
    let mut b = GraphBuilder::new();
    for name in g.labels().iter() {
        b.add_node(name);
    }
    for (u, v) in g.links() {
        b.add_edge(g.labels().name(u), g.labels().name(v));
    }
    b.build_undirected()
}
