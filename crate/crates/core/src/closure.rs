//! Toric transitive closure, its extreme points, and toric Hasse diagrams.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::flips::{canonical, ToricPoset};
use crate::graph::{DirectedEdgeSet, Graph};
use crate::toric::toric_directed_paths;
use crate::vset::VertexSet;

fn require_acyclic(arcs: &DirectedEdgeSet) -> Result<()> {
    if arcs.is_acyclic() {
        Ok(())
    } else {
        Err(Error::Cyclic)
    }
}

fn ancestors(desc: &[VertexSet]) -> Vec<VertexSet> {
    let mut anc = vec![VertexSet::EMPTY; desc.len()];
    for (u, d) in desc.iter().enumerate() {
        for v in d.iter() {
            anc[v].insert(u);
        }
    }
    anc
}

/// One chord-adding pass: for every arc `a -> b`, each pair `u, v` lying
/// in that order on some directed path from `a` to `b` gains the arc
/// `u -> v`.
pub fn toric_closure_step(arcs: &DirectedEdgeSet) -> Result<DirectedEdgeSet> {
    require_acyclic(arcs)?;
    let desc = arcs.descendants();
    let anc = ancestors(&desc);
    let mut out = arcs.clone();
    for (a, b) in arcs.arcs() {
        let span = desc[a].with(a).intersection(anc[b].with(b));
        for u in span.iter() {
            for v in desc[u].intersection(span).iter() {
                out.insert(u, v);
            }
        }
    }
    Ok(out)
}

/// The toric transitive closure, iterated to a fixpoint.
pub fn toric_closure(arcs: &DirectedEdgeSet) -> Result<DirectedEdgeSet> {
    let mut cur = toric_closure_step(arcs)?;
    loop {
        let next = toric_closure_step(&cur)?;
        if next == cur {
            return Ok(cur);
        }
        cur = next;
    }
}

/// Ordinary transitive closure (reachability).
pub fn ordinary_closure(arcs: &DirectedEdgeSet) -> Result<DirectedEdgeSet> {
    require_acyclic(arcs)?;
    let desc = arcs.descendants();
    DirectedEdgeSet::from_arcs(
        arcs.n(),
        desc.iter().enumerate().flat_map(|(u, d)| d.iter().map(move |v| (u, v))),
    )
}

/// Arcs not recovered by closing the rest: `{a in A : a not in closure(A - a)}`.
pub fn extreme_points(arcs: &DirectedEdgeSet) -> Result<DirectedEdgeSet> {
    require_acyclic(arcs)?;
    let mut out = DirectedEdgeSet::new(arcs.n());
    for (a, b) in arcs.arcs() {
        let rest = arcs.without(a, b);
        if !toric_closure(&rest)?.contains(a, b) {
            out.insert(a, b);
        }
    }
    Ok(out)
}

/// Removes every chord of every toric directed path with at least four
/// vertices, keeping the path's short edges and its long edge.
pub fn chord_reduction(arcs: &DirectedEdgeSet, graph: &Arc<Graph>) -> Result<DirectedEdgeSet> {
    let o = arcs.as_orientation(graph)?;
    let mut out = arcs.clone();
    for path in toric_directed_paths(&o) {
        let m = path.len();
        if m < 4 {
            continue;
        }
        for j in 0..m {
            for k in j + 2..m {
                if j == 0 && k == m - 1 {
                    continue;
                }
                out.remove(path[j], path[k]);
            }
        }
    }
    Ok(out)
}

/// The toric poset carried by the closure of `p`'s representative, on the
/// largest graph carrying `p`'s chamber.
pub fn closure_poset(p: &ToricPoset) -> ToricPoset {
    let closed = toric_closure(&p.rep().to_arc_set()).expect("orientations are acyclic");
    poset_of_arcs(&closed, p.graph())
}

/// The toric Hasse diagram of `p`: extreme points of a representative,
/// as a toric poset on their underlying graph.
pub fn toric_hasse(p: &ToricPoset) -> ToricPoset {
    let hasse = extreme_points(&p.rep().to_arc_set()).expect("orientations are acyclic");
    poset_of_arcs(&hasse, p.graph())
}

fn poset_of_arcs(arcs: &DirectedEdgeSet, template: &Graph) -> ToricPoset {
    let g = Arc::new(arcs.underlying_graph(template).expect("acyclic arc set"));
    canonical(&arcs.as_orientation(&g).expect("one arc per edge"))
}

/// `(Hasse graph, closure graph)`: a graph carries `p`'s chamber iff its
/// edge set lies between the two.
pub fn graphs_between(p: &ToricPoset) -> (Graph, Graph) {
    let lo = toric_hasse(p).graph().as_ref().clone();
    let hi = closure_poset(p).graph().as_ref().clone();
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, arcs: &[(usize, usize)]) -> DirectedEdgeSet {
        DirectedEdgeSet::from_arcs(n, arcs.iter().copied()).unwrap()
    }

    #[test]
    fn rejects_cycles() {
        let cyc = set(3, &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(toric_closure(&cyc).unwrap_err(), Error::Cyclic);
        assert_eq!(ordinary_closure(&cyc).unwrap_err(), Error::Cyclic);
        assert_eq!(extreme_points(&cyc).unwrap_err(), Error::Cyclic);
    }

    #[test]
    fn path_without_long_edge_is_closed() {
        let a = set(3, &[(0, 1), (1, 2)]);
        assert_eq!(toric_closure(&a).unwrap(), a);
        assert_eq!(ordinary_closure(&a).unwrap(), a.with(0, 2));
    }

    #[test]
    fn single_arc_is_closed() {
        let a = set(2, &[(0, 1)]);
        assert_eq!(toric_closure(&a).unwrap(), a);
        assert_eq!(ordinary_closure(&a).unwrap(), a);
        assert_eq!(extreme_points(&a).unwrap(), a);
    }

    #[test]
    fn c4_closure_adds_both_chords() {
        let a = set(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let closed = toric_closure(&a).unwrap();
        assert_eq!(closed, a.with(0, 2).with(1, 3));
        assert_eq!(extreme_points(&closed).unwrap(), a);
        let g = Arc::new(closed.underlying_graph(&Graph::complete(4)).unwrap());
        assert_eq!(chord_reduction(&closed, &g).unwrap(), a);
    }

    #[test]
    fn triangle_long_edge_is_extreme() {
        let a = set(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(toric_closure(&a).unwrap(), a);
        assert_eq!(extreme_points(&a).unwrap(), a);
    }

    #[test]
    fn empty_graph_hasse_is_itself() {
        let g = Arc::new(Graph::empty(3));
        let p = canonical(&crate::graph::Orientation::new(g, vec![]).unwrap());
        assert_eq!(toric_hasse(&p), p);
        let (lo, hi) = graphs_between(&p);
        assert_eq!(lo.edge_count(), 0);
        assert_eq!(hi.edge_count(), 0);
    }
}
