//! Toric directed paths, toric chains, toric total extensions and toric
//! extensions between posets.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::sync::Arc;

use crate::cyclic::CyclicWord;
use crate::error::{Error, Result};
use crate::flips::{canonical, ToricPoset};
use crate::graph::{orientation_from_order, Graph, Orientation};
use crate::vset::VertexSet;

/// Every toric directed path of size at least 2 in `o`: a directed path
/// `i_1 -> ... -> i_m` whose endpoints are also joined by the arc
/// `i_1 -> i_m`.
pub fn toric_directed_paths(o: &Orientation) -> BTreeSet<Vec<usize>> {
    let arcs = o.to_arc_set();
    let desc = arcs.descendants();
    let mut out = BTreeSet::new();
    for (a, b) in o.arcs() {
        let mut path = vec![a];
        walk_paths(&arcs, &desc, b, &mut path, &mut out);
    }
    out
}

fn walk_paths(
    arcs: &crate::graph::DirectedEdgeSet,
    desc: &[VertexSet],
    target: usize,
    path: &mut Vec<usize>,
    out: &mut BTreeSet<Vec<usize>>,
) {
    let v = *path.last().expect("non-empty");
    for u in arcs.out(v).iter() {
        if u == target {
            let mut p = path.clone();
            p.push(u);
            out.insert(p);
        } else if desc[u].contains(target) {
            path.push(u);
            walk_paths(arcs, desc, target, path, out);
            path.pop();
        }
    }
}

/// Orders `set` along a toric directed path of `o` if it is a subsequence
/// of one.
///
/// `set` must be a chain `c_1 < ... < c_m` of the reachability order and
/// some arc `a -> b` must have `a` at or below `c_1` and `b` at or above
/// `c_m`; the concatenated path is then simple because `o` is acyclic.
pub(crate) fn chain_along_path(o: &Orientation, desc: &[VertexSet], set: VertexSet) -> Option<Vec<usize>> {
    let order = chain_order(desc, set)?;
    if order.len() <= 1 {
        return Some(order);
    }
    let (first, last) = (order[0], *order.last().expect("non-empty"));
    o.arcs()
        .any(|(a, b)| {
            (a == first || desc[a].contains(first)) && (b == last || desc[last].contains(b))
        })
        .then_some(order)
}

/// The members of `set` in increasing reachability order, if that order is
/// total on `set`.
pub(crate) fn chain_order(desc: &[VertexSet], set: VertexSet) -> Option<Vec<usize>> {
    let mut order: Vec<usize> = set.iter().collect();
    // In a chain the number of members above a vertex fixes its position.
    order.sort_by_key(|&v| std::cmp::Reverse(desc[v].intersection(set).len()));
    order
        .windows(2)
        .all(|w| desc[w[0]].contains(w[1]))
        .then_some(order)
}

fn check_vertices(p: &ToricPoset, set: VertexSet) -> Result<()> {
    match set.difference(p.graph().vertices()).first() {
        Some(v) => Err(Error::VertexOutOfRange { vertex: v, n: p.n() }),
        None => Ok(()),
    }
}

/// The cyclic order `P|_C` when `C` is a toric chain of `p`.
///
/// Searches the class for a member in which `C` lies along a toric directed
/// path. Sets of size 0 and 1 are always toric chains.
pub fn is_toric_chain(p: &ToricPoset, set: VertexSet) -> Result<Option<CyclicWord>> {
    check_vertices(p, set)?;
    if set.len() <= 1 {
        return Ok(Some(CyclicWord::new(set.iter().collect())?));
    }
    for o in p.class() {
        let desc = o.descendants();
        if let Some(order) = chain_along_path(o, &desc, set) {
            return Ok(Some(CyclicWord::new(order)?));
        }
    }
    Ok(None)
}

/// Every toric chain of `p` with its cyclic order, keyed by vertex set.
///
/// Vertex sets of toric directed paths of every class member are collected
/// and then closed under taking subsets.
pub fn all_toric_chains(p: &ToricPoset) -> BTreeMap<VertexSet, CyclicWord> {
    let mut chains: BTreeMap<VertexSet, CyclicWord> = BTreeMap::new();
    for o in p.class() {
        for path in toric_directed_paths(o) {
            let set: VertexSet = path.iter().copied().collect();
            chains
                .entry(set)
                .or_insert_with(|| CyclicWord::new(path).expect("distinct vertices"));
        }
    }
    let mut stack: Vec<(VertexSet, CyclicWord)> =
        chains.iter().map(|(s, w)| (*s, w.clone())).collect();
    while let Some((set, word)) = stack.pop() {
        for v in set.iter() {
            let mut sub = set;
            sub.remove(v);
            if let std::collections::btree_map::Entry::Vacant(slot) = chains.entry(sub) {
                let w = word.restrict(sub).expect("subset");
                slot.insert(w.clone());
                stack.push((sub, w));
            }
        }
    }
    for v in 0..p.n() {
        chains.insert(VertexSet::singleton(v), CyclicWord::new(vec![v]).expect("single"));
    }
    chains.insert(VertexSet::EMPTY, CyclicWord::empty());
    chains
}

/// Calls `f` on one linear representative of every cyclic order of `0..n`
/// (the ones starting with vertex 0).
fn for_each_cyclic_order(n: usize, mut f: impl FnMut(&[usize])) {
    if n == 0 {
        f(&[]);
        return;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 1, &mut f);
}

fn permute(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k + 1 >= perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, f);
        perm.swap(k, i);
    }
}

/// All toric total orders `[w]` whose chamber lies inside the chamber of
/// `p`.
///
/// Rotating a permutation by one step is a source-to-sink flip of the
/// orientation it induces, so testing a single rotation per cyclic class
/// suffices.
pub fn toric_total_extensions(p: &ToricPoset) -> BTreeSet<CyclicWord> {
    let g = p.graph();
    let members: HashSet<&[bool]> = p.class().iter().map(|o| o.dirs()).collect();
    let mut out = BTreeSet::new();
    for_each_cyclic_order(g.n(), |w| {
        let o = orientation_from_order(g, w).expect("permutation");
        if members.contains(o.dirs()) {
            out.insert(CyclicWord::new(w.to_vec()).expect("permutation"));
        }
    });
    out
}

/// Toric chain test through the class members' ordinary posets: `C` must
/// be totally ordered in every member, always in the same cyclic order.
pub fn chain_by_member_orders(p: &ToricPoset, set: VertexSet) -> Result<Option<CyclicWord>> {
    check_vertices(p, set)?;
    let mut found: Option<CyclicWord> = None;
    for o in p.class() {
        let Some(order) = chain_order(&o.descendants(), set) else {
            return Ok(None);
        };
        let w = CyclicWord::new(order)?;
        match &found {
            Some(prev) if *prev != w => return Ok(None),
            Some(_) => {}
            None => found = Some(w),
        }
    }
    Ok(found)
}

/// Toric chain test through total extensions: every toric total extension
/// must restrict to the same cyclic order on `C`. Only meaningful for
/// `|C| != 2`, where it is equivalent to the other tests.
pub fn chain_by_total_extensions(p: &ToricPoset, set: VertexSet) -> Result<Option<CyclicWord>> {
    check_vertices(p, set)?;
    let mut restrictions = toric_total_extensions(p)
        .into_iter()
        .map(|w| w.restrict(set))
        .collect::<Result<BTreeSet<_>>>()?
        .into_iter();
    match (restrictions.next(), restrictions.next()) {
        (Some(w), None) => Ok(Some(w)),
        _ => Ok(None),
    }
}

/// Whether `finer` is a toric extension of `coarser`, i.e. its chamber
/// lies inside the chamber of `coarser`.
///
/// Only the case where `coarser`'s graph is an edge-subgraph of `finer`'s
/// is decided; there, containment holds iff restricting a member of
/// `finer` to the smaller graph lands in `coarser`.
pub fn is_toric_extension(finer: &ToricPoset, coarser: &ToricPoset) -> Result<bool> {
    if !finer.graph().same_vertex_set(coarser.graph()) {
        return Err(Error::VertexSetMismatch);
    }
    if !coarser.graph().is_edge_subgraph_of(finer.graph()) {
        return Err(Error::NotEdgeSubgraph);
    }
    let restricted = finer.rep().restrict(coarser.graph())?;
    Ok(coarser.contains(&restricted))
}

/// The toric poset on `K_n` of the toric total order `word`.
pub fn total_order_poset(labels_from: &Graph, word: &CyclicWord) -> Result<ToricPoset> {
    let n = labels_from.n();
    if word.len() != n {
        return Err(Error::NotAPermutation);
    }
    let complete = labels_from.with_edges((0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))?;
    let o = orientation_from_order(&Arc::new(complete), word.as_slice())?;
    Ok(canonical(&o))
}
