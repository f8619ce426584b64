//! Simple graphs, their orientations, and raw arc sets.
//!
//! Vertices are always `0..n` internally. External labels (1-based by
//! default) live in the [`Graph`] and are only consulted for I/O; the label
//! map is kept strictly increasing so that comparisons on internal indices
//! agree with comparisons on labels.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::vset::{VertexSet, MAX_VERTICES};

/// A simple undirected graph with a fixed, sorted edge order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    labels: Vec<u32>,
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a graph on `0..n` with default labels `1..=n`.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::with_labels((1..=n as u32).collect(), edges)
    }

    /// Builds a graph whose vertex `i` carries `labels[i]`. Labels must be
    /// strictly increasing.
    pub fn with_labels<I>(labels: Vec<u32>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = labels.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        if labels.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::malformed("labels", "labels must be strictly increasing"));
        }
        let mut list = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for (e, &(i, j)) in list.iter().enumerate() {
            adj[i].push((j, e));
            adj[j].push((i, e));
        }
        Ok(Graph {
            n,
            edges: list,
            labels,
            adj,
        })
    }

    pub fn empty(n: usize) -> Self {
        Self::new(n, []).expect("edgeless graph")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        Self::new(n, edges).expect("complete graph")
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`; needs `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle graph")
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i))).expect("path graph")
    }

    /// A graph on the same labelled vertex set with a different edge set.
    pub fn with_edges<I>(&self, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::with_labels(self.labels.clone(), edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges in canonical order, each as `(i, j)` with `i < j`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> u32 {
        self.labels[v]
    }

    pub fn index_of(&self, label: u32) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    pub fn has_default_labels(&self) -> bool {
        self.labels.iter().enumerate().all(|(i, &l)| l as usize == i + 1)
    }

    /// `(neighbour, edge index)` pairs at `v`.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbours(&self, v: usize) -> VertexSet {
        self.adj[v].iter().map(|&(u, _)| u).collect()
    }

    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        self.edges.binary_search(&(a.min(b), a.max(b))).ok()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edge_index(a, b).is_some()
    }

    pub fn same_vertex_set(&self, other: &Graph) -> bool {
        self.labels == other.labels
    }

    /// True when both graphs share a vertex set and every edge of `self`
    /// is an edge of `other`.
    pub fn is_edge_subgraph_of(&self, other: &Graph) -> bool {
        self.same_vertex_set(other) && self.edges.iter().all(|&(a, b)| other.has_edge(a, b))
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = VertexSet::singleton(0);
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for &(u, _) in &self.adj[v] {
                if !seen.contains(u) {
                    seen.insert(u);
                    stack.push(u);
                }
            }
        }
        seen.len() == self.n
    }

    /// Every labelled simple graph on `0..n`, in order of the edge bitmask
    /// over the pairs of `K_n`.
    pub fn all_on(n: usize) -> impl Iterator<Item = Graph> {
        assert!(n <= 11, "too many labelled graphs to enumerate");
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let total = 1u64 << pairs.len();
        (0..total).map(move |mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|&(k, _)| mask >> k & 1 == 1)
                .map(|(_, &p)| p);
            Graph::new(n, edges).expect("subgraph of a complete graph")
        })
    }

    /// Every connected labelled simple graph on `0..n`.
    pub fn all_connected_on(n: usize) -> impl Iterator<Item = Graph> {
        Self::all_on(n).filter(Graph::is_connected)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(a, b)| (self.labels[a], self.labels[b]))
            .collect();
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &edges)
            .finish()
    }
}

/// An orientation of every edge of a [`Graph`]; always acyclic.
///
/// `dirs[e] == false` directs the stored pair `(i, j)`, `i < j`, as `i -> j`;
/// `true` directs it `j -> i`. Orientations order lexicographically by
/// `dirs`.
#[derive(Clone)]
pub struct Orientation {
    graph: Arc<Graph>,
    dirs: Vec<bool>,
}

impl Orientation {
    pub fn new(graph: Arc<Graph>, dirs: Vec<bool>) -> Result<Self> {
        if dirs.len() != graph.edge_count() {
            return Err(Error::DirsLength {
                expected: graph.edge_count(),
                found: dirs.len(),
            });
        }
        let o = Orientation { graph, dirs };
        if !o.to_arc_set().is_acyclic() {
            return Err(Error::Cyclic);
        }
        Ok(o)
    }

    pub(crate) fn new_unchecked(graph: Arc<Graph>, dirs: Vec<bool>) -> Self {
        debug_assert_eq!(dirs.len(), graph.edge_count());
        Orientation { graph, dirs }
    }

    /// Builds the orientation containing exactly the given arcs, one per edge.
    pub fn from_arcs(graph: Arc<Graph>, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut dirs: Vec<Option<bool>> = vec![None; graph.edge_count()];
        for &(a, b) in arcs {
            let e = graph.edge_index(a, b).ok_or(Error::NotAnEdge(a, b))?;
            let d = a > b;
            match dirs[e] {
                Some(prev) if prev != d => return Err(Error::Cyclic),
                _ => dirs[e] = Some(d),
            }
        }
        let dirs = dirs
            .into_iter()
            .enumerate()
            .map(|(e, d)| {
                let (i, j) = graph.edges()[e];
                d.ok_or(Error::MissingArc(i, j))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(graph, dirs)
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn dirs(&self) -> &[bool] {
        &self.dirs
    }

    /// The arc carried by edge `e`, as `(tail, head)`.
    pub fn arc(&self, e: usize) -> (usize, usize) {
        let (i, j) = self.graph.edges()[e];
        if self.dirs[e] {
            (j, i)
        } else {
            (i, j)
        }
    }

    /// Arcs in canonical edge order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.dirs.len()).map(|e| self.arc(e))
    }

    /// Whether the arc `a -> b` is present.
    pub fn has_arc(&self, a: usize, b: usize) -> bool {
        self.graph
            .edge_index(a, b)
            .is_some_and(|e| self.arc(e) == (a, b))
    }

    /// No incoming arcs. Isolated vertices are sources (and sinks).
    pub fn is_source(&self, v: usize) -> bool {
        self.graph
            .incident(v)
            .iter()
            .all(|&(_, e)| self.arc(e).0 == v)
    }

    /// No outgoing arcs.
    pub fn is_sink(&self, v: usize) -> bool {
        self.graph
            .incident(v)
            .iter()
            .all(|&(_, e)| self.arc(e).1 == v)
    }

    pub fn to_arc_set(&self) -> DirectedEdgeSet {
        DirectedEdgeSet::from_arcs(self.graph.n(), self.arcs()).expect("endpoints in range")
    }

    /// Strict descendants of every vertex.
    pub fn descendants(&self) -> Vec<VertexSet> {
        self.to_arc_set().descendants()
    }

    /// The restriction to an edge-subgraph.
    pub fn restrict(&self, sub: &Arc<Graph>) -> Result<Orientation> {
        if !sub.is_edge_subgraph_of(&self.graph) {
            return Err(Error::NotEdgeSubgraph);
        }
        let dirs = sub
            .edges()
            .iter()
            .map(|&(a, b)| self.dirs[self.graph.edge_index(a, b).expect("edge-subgraph")])
            .collect();
        Ok(Orientation::new_unchecked(sub.clone(), dirs))
    }

    /// A linear extension, choosing the smallest available vertex first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let n = self.graph.n();
        let mut indeg = vec![0usize; n];
        for (_, b) in self.arcs() {
            indeg[b] += 1;
        }
        let mut order = Vec::with_capacity(n);
        let mut ready: std::collections::BTreeSet<usize> =
            (0..n).filter(|&v| indeg[v] == 0).collect();
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for &(u, e) in self.graph.incident(v) {
                if self.arc(e).0 == v {
                    indeg[u] -= 1;
                    if indeg[u] == 0 {
                        ready.insert(u);
                    }
                }
            }
        }
        order
    }
}

impl PartialEq for Orientation {
    fn eq(&self, other: &Self) -> bool {
        self.dirs == other.dirs
            && (Arc::ptr_eq(&self.graph, &other.graph) || self.graph == other.graph)
    }
}

impl Eq for Orientation {}

impl Hash for Orientation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.dirs.hash(state);
    }
}

impl PartialOrd for Orientation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Orientation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.dirs.cmp(&other.dirs).then_with(|| {
            if Arc::ptr_eq(&self.graph, &other.graph) {
                Ordering::Equal
            } else {
                self.graph.cmp(&other.graph)
            }
        })
    }
}

impl fmt::Debug for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = &self.graph;
        let arcs: Vec<_> = self.arcs().map(|(a, b)| (g.label(a), g.label(b))).collect();
        f.debug_tuple("Orientation").field(&arcs).finish()
    }
}

/// A set of ordered pairs `(i, j)`, `i != j`, on `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirectedEdgeSet {
    n: usize,
    out: Vec<VertexSet>,
}

impl DirectedEdgeSet {
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        DirectedEdgeSet {
            n,
            out: vec![VertexSet::EMPTY; n],
        }
    }

    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut s = Self::new(n);
        for (a, b) in arcs {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            s.insert(a, b);
        }
        Ok(s)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, a: usize, b: usize) -> bool {
        let fresh = !self.out[a].contains(b);
        self.out[a].insert(b);
        fresh
    }

    pub fn remove(&mut self, a: usize, b: usize) -> bool {
        let had = self.out[a].contains(b);
        self.out[a].remove(b);
        had
    }

    pub fn with(&self, a: usize, b: usize) -> Self {
        let mut s = self.clone();
        s.insert(a, b);
        s
    }

    pub fn without(&self, a: usize, b: usize) -> Self {
        let mut s = self.clone();
        s.remove(a, b);
        s
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.out[a].contains(b)
    }

    pub fn out(&self, a: usize) -> VertexSet {
        self.out[a]
    }

    pub fn len(&self) -> usize {
        self.out.iter().map(|s| s.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.out.iter().all(|s| s.is_empty())
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(a, s)| s.iter().map(move |b| (a, b)))
    }

    pub fn is_subset(&self, other: &DirectedEdgeSet) -> bool {
        self.n == other.n && self.out.iter().zip(&other.out).all(|(a, b)| a.is_subset(*b))
    }

    pub fn union(&self, other: &DirectedEdgeSet) -> DirectedEdgeSet {
        assert_eq!(self.n, other.n);
        DirectedEdgeSet {
            n: self.n,
            out: self.out.iter().zip(&other.out).map(|(a, b)| a.union(*b)).collect(),
        }
    }

    pub fn is_acyclic(&self) -> bool {
        // Kahn's algorithm on bitmasks.
        let mut indeg = vec![0usize; self.n];
        for (_, b) in self.arcs() {
            indeg[b] += 1;
        }
        let mut stack: Vec<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for u in self.out[v].iter() {
                indeg[u] -= 1;
                if indeg[u] == 0 {
                    stack.push(u);
                }
            }
        }
        seen == self.n
    }

    /// Strict descendants of every vertex, i.e. vertices reachable by a
    /// directed path of length at least one.
    pub fn descendants(&self) -> Vec<VertexSet> {
        (0..self.n).map(|v| self.reach_from(v)).collect()
    }

    fn reach_from(&self, v: usize) -> VertexSet {
        let mut seen = VertexSet::EMPTY;
        let mut frontier = self.out[v];
        while !frontier.is_empty() {
            seen = seen.union(frontier);
            let mut next = VertexSet::EMPTY;
            for u in frontier.iter() {
                next = next.union(self.out[u]);
            }
            frontier = next.difference(seen);
        }
        seen
    }

    /// The undirected graph on the labelled vertex set of `template`
    /// carrying one edge per arc. Fails if some pair carries both arcs.
    pub fn underlying_graph(&self, template: &Graph) -> Result<Graph> {
        if template.n() != self.n {
            return Err(Error::VertexSetMismatch);
        }
        if let Some((a, b)) = self.arcs().find(|&(a, b)| a < b && self.contains(b, a)) {
            return Err(Error::DuplicateEdge(a, b));
        }
        template.with_edges(self.arcs())
    }

    /// The orientation of `graph` given by this set, which must hold exactly
    /// one arc per edge of `graph` and nothing else.
    pub fn as_orientation(&self, graph: &Arc<Graph>) -> Result<Orientation> {
        if graph.n() != self.n {
            return Err(Error::VertexSetMismatch);
        }
        let arcs: Vec<_> = self.arcs().collect();
        if arcs.len() != graph.edge_count() {
            if let Some(&(a, b)) = arcs.iter().find(|&&(a, b)| !graph.has_edge(a, b)) {
                return Err(Error::NotAnEdge(a, b));
            }
        }
        Orientation::from_arcs(graph.clone(), &arcs)
    }
}

impl fmt::Debug for DirectedEdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.arcs()).finish()
    }
}

/// True iff the arc set has no directed cycle.
pub fn is_acyclic(arcs: &DirectedEdgeSet) -> bool {
    arcs.is_acyclic()
}

/// Every acyclic orientation of `graph` exactly once, in lexicographic
/// order of the direction vectors.
///
/// Edges are directed one at a time in canonical order, trying `false`
/// before `true`, and a branch is cut as soon as the partial orientation
/// closes a cycle.
pub fn enumerate_acyclic(graph: &Arc<Graph>) -> Vec<Orientation> {
    let mut out = Vec::new();
    let mut partial = DirectedEdgeSet::new(graph.n());
    let mut dirs = Vec::with_capacity(graph.edge_count());
    extend_acyclic(graph, &mut partial, &mut dirs, &mut out);
    out
}

fn extend_acyclic(
    graph: &Arc<Graph>,
    partial: &mut DirectedEdgeSet,
    dirs: &mut Vec<bool>,
    out: &mut Vec<Orientation>,
) {
    let e = dirs.len();
    if e == graph.edge_count() {
        out.push(Orientation::new_unchecked(graph.clone(), dirs.clone()));
        return;
    }
    let (i, j) = graph.edges()[e];
    for (d, (a, b)) in [(false, (i, j)), (true, (j, i))] {
        // a -> b closes a cycle iff b already reaches a.
        if partial.reach_from(b).contains(a) {
            continue;
        }
        partial.insert(a, b);
        dirs.push(d);
        extend_acyclic(graph, partial, dirs, out);
        dirs.pop();
        partial.remove(a, b);
    }
}

/// Directs each edge from the vertex appearing earlier in `order`.
pub fn orientation_from_order(graph: &Arc<Graph>, order: &[usize]) -> Result<Orientation> {
    let n = graph.n();
    let mut pos = vec![usize::MAX; n];
    if order.len() != n {
        return Err(Error::NotAPermutation);
    }
    for (k, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(Error::NotAPermutation);
        }
        pos[v] = k;
    }
    let dirs = graph.edges().iter().map(|&(i, j)| pos[j] < pos[i]).collect();
    Ok(Orientation::new_unchecked(graph.clone(), dirs))
}
