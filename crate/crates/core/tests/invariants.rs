use std::sync::Arc;

use proptest::prelude::*;

use toric_poset::closure::{extreme_points, ordinary_closure, toric_closure};
use toric_poset::flips::{canonical, equivalent, flip_at, flip_class, CycleBasis};
use toric_poset::geometry::{alpha, point_for};
use toric_poset::graph::{enumerate_acyclic, orientation_from_order, DirectedEdgeSet, Graph};
use toric_poset::io::{graph_json, orientation_json, parse_graph, parse_orientation};
use toric_poset::toric::{all_toric_chains, is_toric_chain};

/// A graph on `n` vertices from the low bits of `mask`, one bit per pair.
fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    let edges: Vec<_> = pairs.enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, e)| e).collect();
    Graph::new(n, edges).unwrap()
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, any::<u64>()).prop_map(|(n, mask)| graph_from_mask(n, mask))
}

/// An acyclic arc set: a random vertex order, then each pair absent or
/// oriented along the order.
fn acyclic_strategy(max_n: usize) -> impl Strategy<Value = DirectedEdgeSet> {
    (2..=max_n).prop_flat_map(|n| {
        (Just((0..n).collect::<Vec<_>>()).prop_shuffle(), any::<u64>()).prop_map(move |(order, mask)| {
            let mut d = DirectedEdgeSet::new(n);
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if mask >> k & 1 == 1 {
                        d.insert(order[i], order[j]);
                    }
                    k += 1;
                }
            }
            d
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn flip_classes_are_closed_and_canonical(g in graph_strategy(7), pick in any::<prop::sample::Index>()) {
        let g = Arc::new(g);
        let all = enumerate_acyclic(&g);
        let o = &all[pick.index(all.len())];
        let class = flip_class(o);
        let p = canonical(o);
        prop_assert_eq!(p.class(), &class[..]);
        let basis = CycleBasis::new(&g);
        let sig = basis.signature(o).unwrap();
        for m in &class {
            prop_assert_eq!(&canonical(m), &p);
            prop_assert!(equivalent(m, o).unwrap());
            prop_assert_eq!(&basis.signature(m).unwrap(), &sig);
            for v in 0..g.n() {
                if let Some(f) = flip_at(m, v) {
                    prop_assert!(p.contains(&f));
                }
            }
        }
    }

    #[test]
    fn closure_laws_hold(a in acyclic_strategy(7)) {
        let closed = toric_closure(&a).unwrap();
        prop_assert!(a.is_subset(&closed));
        prop_assert!(closed.is_acyclic());
        prop_assert_eq!(&toric_closure(&closed).unwrap(), &closed);
        prop_assert!(closed.is_subset(&ordinary_closure(&a).unwrap()));
        let hasse = extreme_points(&closed).unwrap();
        prop_assert_eq!(&toric_closure(&hasse).unwrap(), &closed);
        prop_assert!(hasse.is_subset(&a));
    }

    #[test]
    fn chains_are_closed_under_subsets(g in graph_strategy(6), pick in any::<prop::sample::Index>()) {
        let g = Arc::new(g);
        let all = enumerate_acyclic(&g);
        let p = canonical(&all[pick.index(all.len())]);
        let chains = all_toric_chains(&p);
        for (set, word) in &chains {
            prop_assert_eq!(&is_toric_chain(&p, *set).unwrap(), &Some(word.clone()));
            for v in set.iter() {
                let mut sub = *set;
                sub.remove(v);
                prop_assert_eq!(chains.get(&sub), Some(&word.restrict(sub).unwrap()));
            }
        }
    }

    #[test]
    fn geometry_round_trip(g in graph_strategy(8), order in Just((0..8usize).collect::<Vec<_>>()).prop_shuffle()) {
        let g = Arc::new(g);
        let order: Vec<_> = order.into_iter().filter(|&v| v < g.n()).collect();
        let o = orientation_from_order(&g, &order).unwrap();
        prop_assert_eq!(alpha(&g, &point_for(&o)).unwrap(), o);
    }

    #[test]
    fn json_round_trip(g in graph_strategy(8), order in Just((0..8usize).collect::<Vec<_>>()).prop_shuffle()) {
        let g2 = Arc::new(parse_graph(&graph_json(&g).to_string()).unwrap());
        prop_assert_eq!(g2.edges(), g.edges());
        let order: Vec<_> = order.into_iter().filter(|&v| v < g.n()).collect();
        let o = orientation_from_order(&g2, &order).unwrap();
        let back = parse_orientation(&orientation_json(&o).to_string(), &g2).unwrap();
        prop_assert_eq!(back, o);
    }
}
