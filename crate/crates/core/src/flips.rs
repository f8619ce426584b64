//! Source-to-sink flips and the toric posets they generate.
//!
//! Two acyclic orientations are flip-equivalent when one can be turned into
//! the other by repeatedly reversing every arc at a source (or sink). A
//! [`ToricPoset`] is one such class, named by its lexicographically least
//! member. Flip classes can be exponentially large; the class is only
//! materialised on demand.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use crate::cyclic::CyclicWord;
use crate::error::{Error, Result};
use crate::graph::{Graph, Orientation};

fn flip_dirs(graph: &Graph, dirs: &mut [bool], v: usize) {
    for &(_, e) in graph.incident(v) {
        dirs[e] = !dirs[e];
    }
}

fn tail(graph: &Graph, dirs: &[bool], e: usize) -> usize {
    let (i, j) = graph.edges()[e];
    if dirs[e] {
        j
    } else {
        i
    }
}

/// Whether every edge at `v` points away from it (`want_source`) or at it.
fn is_extreme(graph: &Graph, dirs: &[bool], v: usize, want_source: bool) -> bool {
    graph
        .incident(v)
        .iter()
        .all(|&(_, e)| (tail(graph, dirs, e) == v) == want_source)
}

/// Reverses every arc at `v` when `v` is a source or a sink.
pub fn flip_at(o: &Orientation, v: usize) -> Option<Orientation> {
    let g = o.graph();
    if !(o.is_source(v) || o.is_sink(v)) {
        return None;
    }
    let mut dirs = o.dirs().to_vec();
    flip_dirs(g, &mut dirs, v);
    Some(Orientation::new_unchecked(g.clone(), dirs))
}

/// One `(vertex, result)` pair per source of `o`, in vertex order. Isolated
/// vertices count as sources and flip to `o` itself.
pub fn flip_sources(o: &Orientation) -> Vec<(usize, Orientation)> {
    (0..o.graph().n())
        .filter(|&v| o.is_source(v))
        .map(|v| (v, flip_at(o, v).expect("source")))
        .collect()
}

/// One `(vertex, result)` pair per sink of `o`.
pub fn flip_sinks(o: &Orientation) -> Vec<(usize, Orientation)> {
    (0..o.graph().n())
        .filter(|&v| o.is_sink(v))
        .map(|v| (v, flip_at(o, v).expect("sink")))
        .collect()
}

fn class_dirs(graph: &Graph, start: &[bool]) -> BTreeSet<Vec<bool>> {
    let mut seen: HashSet<Vec<bool>> = HashSet::new();
    seen.insert(start.to_vec());
    let mut queue = vec![start.to_vec()];
    while let Some(dirs) = queue.pop() {
        for v in 0..graph.n() {
            if graph.degree(v) == 0 {
                continue;
            }
            if is_extreme(graph, &dirs, v, true) || is_extreme(graph, &dirs, v, false) {
                let mut next = dirs.clone();
                flip_dirs(graph, &mut next, v);
                if seen.insert(next.clone()) {
                    queue.push(next);
                }
            }
        }
    }
    seen.into_iter().collect()
}

/// The full flip class of `o`, sorted lexicographically.
pub fn flip_class(o: &Orientation) -> Vec<Orientation> {
    let g = o.graph();
    class_dirs(g, o.dirs())
        .into_iter()
        .map(|d| Orientation::new_unchecked(g.clone(), d))
        .collect()
}

/// A flip class of acyclic orientations of a fixed graph, i.e. a toric
/// chamber of that graph's toric arrangement.
#[derive(Clone)]
pub struct ToricPoset {
    rep: Orientation,
    class: OnceLock<Arc<Vec<Orientation>>>,
}

impl ToricPoset {
    /// The toric poset containing `o`.
    pub fn of(o: &Orientation) -> Self {
        canonical(o)
    }

    pub fn graph(&self) -> &Arc<Graph> {
        self.rep.graph()
    }

    pub fn n(&self) -> usize {
        self.rep.graph().n()
    }

    /// The lexicographically least member of the class.
    pub fn rep(&self) -> &Orientation {
        &self.rep
    }

    /// Every member of the class, sorted.
    pub fn class(&self) -> &[Orientation] {
        self.class.get_or_init(|| Arc::new(flip_class(&self.rep)))
    }

    pub fn class_size(&self) -> usize {
        self.class().len()
    }

    pub fn contains(&self, o: &Orientation) -> bool {
        o.graph() == self.graph() && self.class().binary_search(o).is_ok()
    }
}

impl PartialEq for ToricPoset {
    fn eq(&self, other: &Self) -> bool {
        self.rep == other.rep
    }
}

impl Eq for ToricPoset {}

impl Hash for ToricPoset {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rep.hash(state);
    }
}

impl PartialOrd for ToricPoset {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ToricPoset {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.rep.cmp(&other.rep)
    }
}

impl fmt::Debug for ToricPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ToricPoset")
            .field("graph", self.graph())
            .field("rep", &self.rep)
            .finish()
    }
}

/// The toric poset of `o`, represented by the least member of its class.
pub fn canonical(o: &Orientation) -> ToricPoset {
    let class = flip_class(o);
    let rep = class[0].clone();
    let cell = OnceLock::new();
    let _ = cell.set(Arc::new(class));
    ToricPoset { rep, class: cell }
}

/// Every toric poset of `graph`, in order of representatives.
pub fn toric_posets(graph: &Arc<Graph>) -> Vec<ToricPoset> {
    let mut seen: HashSet<Vec<bool>> = HashSet::new();
    let mut out = Vec::new();
    for o in crate::graph::enumerate_acyclic(graph) {
        if seen.contains(o.dirs()) {
            continue;
        }
        let p = canonical(&o);
        seen.extend(p.class().iter().map(|m| m.dirs().to_vec()));
        out.push(p);
    }
    out.sort();
    out
}

/// A cyclic sequence of at least three vertices whose consecutive pairs
/// (wrapping around) are edges of the graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct DirectedCycle {
    word: CyclicWord,
}

impl DirectedCycle {
    pub fn new(graph: &Graph, vertices: Vec<usize>) -> Result<Self> {
        let m = vertices.len();
        if m < 3 {
            return Err(Error::CycleTooShort(m));
        }
        for &v in &vertices {
            if v >= graph.n() {
                return Err(Error::VertexOutOfRange { vertex: v, n: graph.n() });
            }
        }
        let word = CyclicWord::new(vertices)?;
        let w = word.as_slice();
        for k in 0..m {
            let (a, b) = (w[k], w[(k + 1) % m]);
            if !graph.has_edge(a, b) {
                return Err(Error::NotAnEdge(a, b));
            }
        }
        Ok(DirectedCycle { word })
    }

    pub fn word(&self) -> &CyclicWord {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Consecutive pairs `(i_k, i_{k+1})` around the cycle.
    pub fn steps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let w = self.word.as_slice();
        (0..w.len()).map(move |k| (w[k], w[(k + 1) % w.len()]))
    }
}

/// Coleman's ν: arcs oriented forward around `cycle` minus arcs oriented
/// backward. Invariant under flips.
pub fn nu(o: &Orientation, cycle: &DirectedCycle) -> Result<i64> {
    let mut total = 0;
    for (a, b) in cycle.steps() {
        if !o.graph().has_edge(a, b) {
            return Err(Error::NotAnEdge(a, b));
        }
        total += if o.has_arc(a, b) { 1 } else { -1 };
    }
    Ok(total)
}

/// Fundamental cycles of a BFS spanning forest, one per non-tree edge.
///
/// ν is a signed sum over edges, so it is additive over the integer cycle
/// space; these cycles generate that space.
pub fn fundamental_cycles(graph: &Graph) -> Vec<DirectedCycle> {
    let n = graph.n();
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut depth = vec![usize::MAX; n];
    let mut tree_edge = vec![false; graph.edge_count()];
    for root in 0..n {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &(u, e) in graph.incident(v) {
                if depth[u] == usize::MAX {
                    depth[u] = depth[v] + 1;
                    parent[u] = Some((v, e));
                    tree_edge[e] = true;
                    queue.push_back(u);
                }
            }
        }
    }
    let mut cycles = Vec::new();
    for (e, &(a, b)) in graph.edges().iter().enumerate() {
        if tree_edge[e] {
            continue;
        }
        // tree path a .. lca .. b, closed by the edge b - a
        let (mut x, mut y) = (a, b);
        let mut left = vec![x];
        let mut right = vec![y];
        while x != y {
            if depth[x] >= depth[y] {
                x = parent[x].expect("non-root").0;
                left.push(x);
            } else {
                y = parent[y].expect("non-root").0;
                right.push(y);
            }
        }
        right.pop();
        left.extend(right.into_iter().rev());
        cycles.push(DirectedCycle::new(graph, left).expect("fundamental cycle"));
    }
    cycles
}

/// ν evaluated on each cycle of a fixed basis; equal signatures mean
/// flip-equivalent orientations.
#[derive(Clone, Debug)]
pub struct CycleBasis {
    graph: Arc<Graph>,
    cycles: Vec<DirectedCycle>,
}

impl CycleBasis {
    pub fn new(graph: &Arc<Graph>) -> Self {
        CycleBasis {
            graph: graph.clone(),
            cycles: fundamental_cycles(graph),
        }
    }

    pub fn cycles(&self) -> &[DirectedCycle] {
        &self.cycles
    }

    pub fn signature(&self, o: &Orientation) -> Result<Vec<i64>> {
        if **o.graph() != *self.graph {
            return Err(Error::GraphMismatch);
        }
        self.cycles.iter().map(|c| nu(o, c)).collect()
    }
}

/// Whether `a` and `b` are flip-equivalent, decided by comparing ν on a
/// fundamental cycle basis rather than by exploring the class.
pub fn equivalent(a: &Orientation, b: &Orientation) -> Result<bool> {
    if a.graph() != b.graph() {
        return Err(Error::GraphMismatch);
    }
    let basis = CycleBasis::new(a.graph());
    Ok(basis.signature(a)? == basis.signature(b)?)
}
