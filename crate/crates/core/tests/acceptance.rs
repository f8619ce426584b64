//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so every criterion reports even when an earlier one fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use toric_poset::antichains::{max_toric_chain, min_antichain_cover, min_chain_cover, toric_width, AntichainKind};
use toric_poset::closure::{extreme_points, graphs_between, toric_closure};
use toric_poset::flips::{canonical, toric_posets};
use toric_poset::geometry::{alpha, point_for, sample_classes, Rational, TorusPoint};
use toric_poset::graph::{enumerate_acyclic, Graph, Orientation};
use toric_poset::io::{parse_graph, parse_orientation};
use toric_poset::toric::toric_total_extensions;
use toric_poset::tutte::{count_check, tutte, Polynomial2};
use toric_poset::verify::{self, random_graph, Report};
use toric_poset::CyclicWord;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn data(name: &str) -> String {
    let path = format!("{}/../../data/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

fn graph(name: &str) -> Arc<Graph> {
    Arc::new(parse_graph(&data(name)).expect("graph file"))
}

fn orientation(g: &Arc<Graph>, name: &str) -> Orientation {
    parse_orientation(&data(name), g).expect("orientation file")
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn clean(r: &Report) -> Result<(), String> {
    ensure(r.passed(), || format!("{r}; first: {:?}", r.messages.first()))
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:.2?}, limit {limit:?}"))
}

fn labelled_words(g: &Graph, set: &BTreeSet<CyclicWord>) -> Vec<Vec<u32>> {
    set.iter().map(|w| w.labelled(g)).collect()
}

fn c4_ground_truth() -> Outcome {
    let start = Instant::now();
    let g = graph("c4.json");
    let acyc = enumerate_acyclic(&g).len();
    ensure(acyc == 14, || format!("{acyc} acyclic orientations"))?;
    let mut sizes: Vec<_> = toric_posets(&g).iter().map(|p| p.class_size()).collect();
    sizes.sort();
    ensure(sizes == [4, 4, 6], || format!("class sizes {sizes:?}"))?;
    let t = tutte(&g);
    let expected = Polynomial2::from_terms([((3, 0), 1), ((2, 0), 1), ((1, 0), 1), ((0, 1), 1)]);
    ensure(t == expected, || format!("Tutte polynomial {t}"))?;
    ensure(t.eval(2, 0) == 14 && t.eval(1, 0) == 3, || "T(2,0), T(1,0)".into())?;
    within(start, Duration::from_secs(1))?;
    Ok(format!("14 orientations, sizes {sizes:?}, T = {t}, {:.1?}", start.elapsed()))
}

fn c4_total_extensions() -> Outcome {
    let g = graph("c4.json");
    let cases: [(&str, Vec<Vec<u32>>); 3] = [
        ("p1_rep.json", vec![vec![1, 2, 3, 4]]),
        ("p2_rep.json", vec![vec![1, 4, 3, 2]]),
        ("p3_rep.json", vec![vec![1, 2, 4, 3], vec![1, 3, 2, 4], vec![1, 3, 4, 2], vec![1, 4, 2, 3]]),
    ];
    for (file, expected) in cases {
        let p = canonical(&orientation(&g, file));
        let got = labelled_words(&g, &toric_total_extensions(&p));
        ensure(got == expected, || format!("{file}: {got:?}"))?;
    }
    Ok("extensions of P1, P2 and P3 match".into())
}

fn c4_closure_and_hasse() -> Outcome {
    let g = graph("c4.json");
    let w1 = orientation(&g, "p1_rep.json");
    let closed = toric_closure(&w1.to_arc_set()).map_err(|e| e.to_string())?;
    let added: Vec<_> = closed.arcs().filter(|&(a, b)| !w1.has_arc(a, b)).collect();
    let chords = vec![(g.index_of(1).unwrap(), g.index_of(3).unwrap()), (g.index_of(2).unwrap(), g.index_of(4).unwrap())];
    ensure(added == chords, || format!("closure added {added:?}"))?;
    let back = extreme_points(&closed).map_err(|e| e.to_string())?;
    ensure(back == w1.to_arc_set(), || format!("extreme points {back:?}"))?;
    let p1 = canonical(&w1);
    let (lo, hi) = graphs_between(&p1);
    ensure(lo.edges() == g.edges(), || format!("Hasse graph {lo:?}"))?;
    // Which graphs on 4 vertices carry the chamber of P1, decided from
    // sampled points: h carries it iff the P1 points are exactly the
    // points of one class of h.
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let den = 1_000_003;
    let points: Vec<TorusPoint> = (0..4000)
        .map(|_| TorusPoint::new((0..4).map(|_| Rational::new(rng.gen_range(0..den), den)).collect()))
        .collect();
    let in_p1: Vec<bool> = points
        .iter()
        .map(|x| alpha(&g, x).map(|o| p1.contains(&o)).unwrap_or(false))
        .collect();
    let mut carriers = Vec::new();
    for h in Graph::all_on(4).map(Arc::new) {
        let classes: Vec<Option<Vec<bool>>> = points.iter().map(|x| alpha(&h, x).ok().map(|o| canonical(&o).rep().dirs().to_vec())).collect();
        let inside: BTreeSet<_> = classes.iter().zip(&in_p1).filter(|(_, &i)| i).map(|(c, _)| c.clone()).collect();
        let carried = inside.len() == 1
            && classes
                .iter()
                .zip(&in_p1)
                .all(|(c, &i)| i == (c.is_some() && *c == *inside.first().unwrap()));
        if carried {
            carriers.push(h);
        }
    }
    ensure(carriers.len() == 4, || format!("{} carrying graphs", carriers.len()))?;
    for h in &carriers {
        let between = lo.is_edge_subgraph_of(h) && h.is_edge_subgraph_of(&hi);
        ensure(between, || format!("{h:?} carries P1 but is not between {lo:?} and {hi:?}"))?;
    }
    Ok("closure adds 1->3 and 2->4; Hasse returns C4; 4 graphs between".into())
}

fn anti_exchange() -> Outcome {
    let start = Instant::now();
    let exhaustive = verify::anti_exchange(4);
    clean(&exhaustive)?;
    let random = verify::anti_exchange_random(5, 100_000, 2024);
    clean(&random)?;
    within(start, Duration::from_secs(300))?;
    Ok(format!(
        "n<=4 exhaustive {} pairs, n=5 100000 random sets with {} pairs, 0 violations, {:.1?}",
        exhaustive.cases,
        random.cases,
        start.elapsed()
    ))
}

fn chain_conditions() -> Outcome {
    let r = verify::chain_conditions(5);
    clean(&r)?;
    Ok(format!("{} comparisons, 0 violations", r.cases))
}

fn equivalence() -> Outcome {
    let r = verify::equivalence(5);
    clean(&r)?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut random = Report::new("equivalence at n = 7");
    for _ in 0..100 {
        let g = Arc::new(random_graph(7, 0.5, &mut rng));
        verify::check_equivalence(&g, &mut random);
    }
    clean(&random)?;
    Ok(format!("{} exhaustive + {} random comparisons, 0 disagreements", r.cases, random.cases))
}

fn counting() -> Outcome {
    let start = Instant::now();
    let mut graphs = 0;
    for g in verify::connected_graphs(5) {
        let c = count_check(&g);
        ensure(c.passes(), || format!("{g:?}: {c:?}"))?;
        graphs += 1;
    }
    within(start, Duration::from_secs(600))?;
    Ok(format!("{graphs} connected graphs, {:.1?}", start.elapsed()))
}

fn widths() -> Outcome {
    let g6 = graph("c6.json");
    let c6 = canonical(&orientation(&g6, "c6_rep.json"));
    let comb = toric_width(&c6, AntichainKind::Combinatorial).value;
    let geo = toric_width(&c6, AntichainKind::Geometric).value;
    ensure((comb, geo) == (3, 2), || format!("C6 widths {comb}/{geo}"))?;
    let g5 = graph("c5.json");
    let c5 = canonical(&orientation(&g5, "c5_rep.json"));
    let chain = max_toric_chain(&c5).value;
    let chain_cover = min_chain_cover(&c5).value;
    for kind in [AntichainKind::Combinatorial, AntichainKind::Geometric] {
        let width = toric_width(&c5, kind).value;
        let cover = min_antichain_cover(&c5, kind).value;
        ensure((chain, width, chain_cover, cover) == (2, 2, 3, 3), || {
            format!("C5 {kind}: chain {chain}, width {width}, chain cover {chain_cover}, antichain cover {cover}")
        })?;
    }
    Ok("C6 widths 3/2; C5 chain 2, width 2, covers 3/3".into())
}

fn three_vertex_graphs() -> Outcome {
    let mut non_complete = 0;
    for g in Graph::all_on(3).map(Arc::new) {
        let posets = toric_posets(&g);
        if g.edge_count() == 3 {
            ensure(posets.len() == 2, || format!("K3 has {} classes", posets.len()))?;
            continue;
        }
        non_complete += 1;
        ensure(posets.len() == 1, || format!("{g:?}: {} classes", posets.len()))?;
        let ext = labelled_words(&g, &toric_total_extensions(&posets[0]));
        ensure(ext == [vec![1, 2, 3], vec![1, 3, 2]], || format!("{g:?}: {ext:?}"))?;
    }
    ensure(non_complete == 7, || format!("{non_complete} non-complete graphs"))?;
    Ok("7 graphs with one class and both extensions; K3 has 2 classes".into())
}

fn geometry() -> Outcome {
    let mut round_trips = 0;
    for n in 1..=5 {
        for g in Graph::all_on(n).map(Arc::new) {
            for o in enumerate_acyclic(&g) {
                let back = alpha(&g, &point_for(&o)).map_err(|e| e.to_string())?;
                ensure(back == o, || format!("{o:?} round trips to {back:?}"))?;
                round_trips += 1;
            }
        }
    }
    let c4 = graph("c4.json");
    let seen = sample_classes(&c4, 10_000, 1).hits.len();
    ensure(seen == 3, || format!("C4 sampling saw {seen} classes"))?;
    let k3 = graph("k3.json");
    let report = sample_classes(&k3, 10_000, 1);
    ensure(report.hits.len() == 2, || format!("K3 sampling saw {} classes", report.hits.len()))?;
    let freqs: Vec<f64> = report.hits.keys().map(|p| report.frequency(p)).collect();
    ensure(freqs.iter().all(|f| (f - 0.5).abs() <= 0.05), || format!("K3 frequencies {freqs:?}"))?;
    Ok(format!("{round_trips} round trips; C4 3 classes; K3 frequencies {freqs:.3?}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("C4 counts, classes and Tutte polynomial", c4_ground_truth),
        ("C4 toric total extensions", c4_total_extensions),
        ("C4 toric closure, Hasse diagram and graphs between", c4_closure_and_hasse),
        ("anti-exchange of toric closure", anti_exchange),
        ("toric chain conditions agree", chain_conditions),
        ("nu cycle basis matches flip classes", equivalence),
        ("counting identities on connected graphs n<=5", counting),
        ("C6 and C5 widths and covers", widths),
        ("3-vertex graphs", three_vertex_graphs),
        ("geometry round trip and sampling", geometry),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {}: {name}: {detail}", k + 1),
            Err(reason) => {
                failed += 1;
                println!("FAIL {}: {name}: {reason}", k + 1);
            }
        }
    }
    println!("{} of {} acceptance criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
