//! Library results against independent brute-force oracles.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use toric_poset::closure::{toric_closure, toric_closure_step};
use toric_poset::flips::{nu, toric_posets, DirectedCycle};
use toric_poset::graph::{enumerate_acyclic, orientation_from_order, Graph};
use toric_poset::toric::{all_toric_chains, is_toric_chain, toric_directed_paths, toric_total_extensions};
use toric_poset::tutte::{tutte, Polynomial2};
use toric_poset::verify::{self, all_acyclic_arc_sets, random_graph};
use toric_poset::{CyclicWord, VertexSet};

/// Rank of an edge subset: vertices minus connected components.
fn rank(n: usize, edges: &[(usize, usize)]) -> i64 {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], v: usize) -> usize {
        let mut v = v;
        while p[v] != v {
            p[v] = p[p[v]];
            v = p[v];
        }
        v
    }
    let mut r = 0;
    for &(a, b) in edges {
        let (x, y) = (find(&mut parent, a), find(&mut parent, b));
        if x != y {
            parent[x] = y;
            r += 1;
        }
    }
    r
}

fn binomial(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Spanning-subgraph expansion
/// `T(x, y) = sum over A of (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A))`,
/// expanded into monomial coefficients.
fn tutte_by_subsets(g: &Graph) -> BTreeMap<(u32, u32), i64> {
    let edges = g.edges();
    let total = rank(g.n(), edges);
    let mut coeffs: BTreeMap<(u32, u32), i64> = BTreeMap::new();
    for mask in 0u32..1 << edges.len() {
        let sub: Vec<_> = (0..edges.len()).filter(|k| mask >> k & 1 == 1).map(|k| edges[k]).collect();
        let r = rank(g.n(), &sub);
        let (p, q) = (total - r, sub.len() as i64 - r);
        // (x-1)^p (y-1)^q
        for i in 0..=p {
            for j in 0..=q {
                let sign = if (p - i + q - j) % 2 == 0 { 1 } else { -1 };
                *coeffs.entry((i as u32, j as u32)).or_insert(0) += sign * binomial(p, i) * binomial(q, j);
            }
        }
    }
    coeffs.retain(|_, c| *c != 0);
    coeffs
}

fn as_signed(p: &Polynomial2) -> BTreeMap<(u32, u32), i64> {
    p.terms().map(|(k, c)| (k, c as i64)).collect()
}

#[test]
fn tutte_matches_subset_expansion_on_all_graphs_up_to_5() {
    for n in 1..=5 {
        for g in Graph::all_on(n) {
            assert_eq!(as_signed(&tutte(&g)), tutte_by_subsets(&g), "{g:?}");
        }
    }
}

#[test]
fn tutte_matches_subset_expansion_on_random_graphs_up_to_10_edges() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checked = 0;
    while checked < 60 {
        let n = 6 + checked % 3;
        let g = random_graph(n, 0.45, &mut rng);
        if g.edge_count() > 10 {
            continue;
        }
        assert_eq!(as_signed(&tutte(&g)), tutte_by_subsets(&g), "{g:?}");
        checked += 1;
    }
}

/// Every vertex set that occurs, in some cyclic shift, as a subsequence of
/// a toric directed path of some class member, with its induced cyclic
/// order.
fn chains_from_paths(p: &toric_poset::ToricPoset) -> BTreeMap<VertexSet, BTreeSet<CyclicWord>> {
    let mut out: BTreeMap<VertexSet, BTreeSet<CyclicWord>> = BTreeMap::new();
    for o in p.class() {
        for path in toric_directed_paths(o) {
            for mask in 1u32..1 << path.len() {
                let sub: Vec<usize> = (0..path.len()).filter(|k| mask >> k & 1 == 1).map(|k| path[k]).collect();
                let set: VertexSet = sub.iter().copied().collect();
                out.entry(set).or_default().insert(CyclicWord::new(sub).unwrap());
            }
        }
    }
    for v in 0..p.n() {
        out.entry(VertexSet::singleton(v))
            .or_default()
            .insert(CyclicWord::new(vec![v]).unwrap());
    }
    out
}

#[test]
fn toric_chains_match_path_subsequences() {
    for g in verify::connected_graphs(5) {
        for p in toric_posets(&g) {
            let oracle = chains_from_paths(&p);
            for words in oracle.values() {
                assert_eq!(words.len(), 1, "{p:?}: a chain with two cyclic orders");
            }
            let mut found = all_toric_chains(&p);
            found.remove(&VertexSet::EMPTY);
            let oracle: BTreeMap<VertexSet, CyclicWord> =
                oracle.into_iter().map(|(s, w)| (s, w.into_iter().next().unwrap())).collect();
            assert_eq!(found, oracle, "{p:?}");
            for set in g.vertices().subsets().filter(|s| !s.is_empty()) {
                assert_eq!(is_toric_chain(&p, set).unwrap(), oracle.get(&set).cloned(), "{p:?} {set:?}");
            }
        }
    }
}

fn for_each_permutation(n: usize, f: &mut impl FnMut(&[usize])) {
    fn go(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == perm.len() {
            f(perm);
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            go(perm, k + 1, f);
            perm.swap(k, i);
        }
    }
    go(&mut (0..n).collect(), 0, f);
}

#[test]
fn total_extensions_match_all_rotations() {
    for g in verify::connected_graphs(5) {
        for p in toric_posets(&g) {
            let mut oracle = BTreeSet::new();
            for_each_permutation(g.n(), &mut |w| {
                let every_rotation = (0..w.len()).all(|k| {
                    let mut r = w.to_vec();
                    r.rotate_left(k);
                    p.contains(&orientation_from_order(&g, &r).unwrap())
                });
                if every_rotation {
                    oracle.insert(CyclicWord::new(w.to_vec()).unwrap());
                }
            });
            assert_eq!(toric_total_extensions(&p), oracle, "{p:?}");
        }
    }
}

/// On a cycle graph, an orientation has a toric directed path through the
/// whole cycle in the cyclic order of `I` iff `nu_I = m - 2`: the `m - 1`
/// path arcs run forward and the long arc runs backward.
#[test]
fn nu_detects_full_toric_paths_on_cycles() {
    for m in 3..=7 {
        let g = Arc::new(Graph::cycle(m));
        let forward = DirectedCycle::new(&g, (0..m).collect()).unwrap();
        for o in enumerate_acyclic(&g) {
            let value = nu(&o, &forward).unwrap();
            let full_path = toric_directed_paths(&o).into_iter().any(|path| {
                path.len() == m && CyclicWord::new(path).unwrap() == CyclicWord::new((0..m).collect()).unwrap()
            });
            assert_eq!(full_path, value == m as i64 - 2, "{o:?}: nu {value}");
        }
    }
}

#[test]
fn one_closure_pass_reaches_the_fixpoint_up_to_6() {
    for n in 1..=6 {
        for a in all_acyclic_arc_sets(n) {
            assert_eq!(toric_closure_step(&a).unwrap(), toric_closure(&a).unwrap(), "{a:?}");
        }
    }
}

#[test]
fn anti_exchange_exhaustive_at_5() {
    let r = verify::anti_exchange(5);
    assert!(r.passed(), "{r}\n{}", r.messages.join("\n"));
}

#[test]
fn equivalence_on_random_graphs_at_7() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut r = verify::Report::new("equivalence at n = 7");
    for _ in 0..20 {
        let g = Arc::new(random_graph(7, 0.5, &mut rng));
        verify::check_equivalence(&g, &mut r);
    }
    assert!(r.passed(), "{r}\n{}", r.messages.join("\n"));
}
