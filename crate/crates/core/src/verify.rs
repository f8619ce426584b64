//! Exhaustive property suites over all small graphs and arc sets.
//!
//! Each suite returns a [`Report`] with the number of cases checked and the
//! violations found. The suites back the `verify` CLI command and the
//! integration tests.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::antichains::{max_toric_chain, min_antichain_cover, min_chain_cover, toric_width, AntichainKind, AntichainOracle};
use crate::closure::{extreme_points, ordinary_closure, toric_closure, toric_closure_step};
use crate::cyclic::CyclicWord;
use crate::flips::{canonical, equivalent, flip_at, flip_sources, toric_posets, CycleBasis, ToricPoset};
use crate::geometry::{alpha, point_for, source_flip_witness};
use crate::graph::{enumerate_acyclic, Orientation, is_acyclic, orientation_from_order, DirectedEdgeSet, Graph};
use crate::toric::{chain_by_member_orders, is_toric_chain, toric_total_extensions};
use crate::tutte::count_check;
use crate::vset::VertexSet;

/// Violation messages kept per report; the count is always exact.
const KEEP_MESSAGES: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub name: &'static str,
    pub cases: u64,
    pub violations: u64,
    /// The first few violations, human readable.
    pub messages: Vec<String>,
}

impl Report {
    pub fn new(name: &'static str) -> Self {
        Report {
            name,
            cases: 0,
            violations: 0,
            messages: Vec::new(),
        }
    }

    /// Records one case; `ok == false` counts as a violation described by
    /// `msg`.
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.violations += 1;
            if self.messages.len() < KEEP_MESSAGES {
                self.messages.push(msg());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAILED" };
        write!(f, "{}: {} cases, {} violations, {status}", self.name, self.cases, self.violations)
    }
}

/// Connected labeled graphs with `1..=max_n` vertices.
pub fn connected_graphs(max_n: usize) -> impl Iterator<Item = Arc<Graph>> {
    (1..=max_n).flat_map(Graph::all_connected_on).map(Arc::new)
}

/// Every acyclic arc set on `n` vertices (each pair absent or oriented
/// one way).
pub fn all_acyclic_arc_sets(n: usize) -> Vec<DirectedEdgeSet> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    let mut cur = DirectedEdgeSet::new(n);
    fn go(pairs: &[(usize, usize)], k: usize, cur: &mut DirectedEdgeSet, out: &mut Vec<DirectedEdgeSet>) {
        if k == pairs.len() {
            out.push(cur.clone());
            return;
        }
        let (i, j) = pairs[k];
        go(pairs, k + 1, cur, out);
        for (a, b) in [(i, j), (j, i)] {
            cur.insert(a, b);
            if cur.is_acyclic() {
                go(pairs, k + 1, cur, out);
            }
            cur.remove(a, b);
        }
    }
    go(&pairs, 0, &mut cur, &mut out);
    out
}

/// A uniformly random arc set (each pair absent or oriented either way),
/// resampled until acyclic.
pub fn random_acyclic_arc_set(n: usize, rng: &mut impl Rng) -> DirectedEdgeSet {
    loop {
        let mut d = DirectedEdgeSet::new(n);
        for i in 0..n {
            for j in i + 1..n {
                match rng.gen_range(0..3) {
                    0 => {}
                    1 => {
                        d.insert(i, j);
                    }
                    _ => {
                        d.insert(j, i);
                    }
                }
            }
        }
        if d.is_acyclic() {
            return d;
        }
    }
}

/// A random graph on `n` vertices with each edge present with probability
/// `p`.
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(n, edges).expect("valid edges")
}

fn non_arcs(n: usize, closed: &DirectedEdgeSet) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j && !closed.contains(i, j))
        .collect()
}

/// `|Acyc(G)| = T(2,0)` and `|classes| = T(1,0)`, plus sanity of the
/// enumeration itself.
pub fn counting(max_n: usize) -> Report {
    let mut r = Report::new("counting identities");
    for g in connected_graphs(max_n) {
        let c = count_check(&g);
        r.check(c.passes(), || format!("{g:?}: {c:?}"));
        let all = enumerate_acyclic(&g);
        let sorted_unique = all.windows(2).all(|w| w[0].dirs() < w[1].dirs());
        let acyclic = all.iter().all(|o| is_acyclic(&o.to_arc_set()));
        r.check(sorted_unique && acyclic, || format!("{g:?}: enumeration not sorted, unique and acyclic"));
    }
    r
}

/// Cycle-basis `equivalent` agrees with flip-class membership, and every
/// flip preserves the ν signature.
pub fn equivalence(max_n: usize) -> Report {
    let mut r = Report::new("nu equivalence vs flip classes");
    for g in connected_graphs(max_n) {
        check_equivalence(&g, &mut r);
    }
    r
}

/// The equivalence check on one graph: every orientation against every
/// class representative, and ν along every flip.
pub fn check_equivalence(g: &Arc<Graph>, r: &mut Report) {
    let posets = toric_posets(g);
    let basis = CycleBasis::new(g);
    for o in enumerate_acyclic(g) {
        let mine = canonical(&o);
        for p in &posets {
            let same = equivalent(&o, p.rep()).expect("same graph");
            r.check(same == (mine == *p), || format!("{g:?}: {o:?} vs {:?}", p.rep()));
        }
        let sig = basis.signature(&o).expect("same graph");
        for (v, f) in flip_sources(&o) {
            let flipped = basis.signature(&f).expect("same graph");
            r.check(sig == flipped, || format!("{g:?}: flip at {v} changes nu of {o:?}"));
        }
    }
}

/// The three toric chain tests agree: along toric directed paths, through
/// every member's ordinary poset, and through restrictions of the toric
/// total extensions. The last one is skipped for `|C| = 2`, where it does
/// not characterise chains.
pub fn chain_conditions(max_n: usize) -> Report {
    let mut r = Report::new("toric chain conditions");
    for g in connected_graphs(max_n) {
        for p in toric_posets(&g) {
            check_chain_conditions(&p, &mut r);
        }
    }
    r
}

pub fn check_chain_conditions(p: &ToricPoset, r: &mut Report) {
    let extensions = toric_total_extensions(p);
    for set in p.graph().vertices().subsets() {
        let d = is_toric_chain(p, set).expect("in range");
        let b = chain_by_member_orders(p, set).expect("in range");
        r.check(d == b, || format!("{p:?} {set:?}: paths {d:?} vs member orders {b:?}"));
        if set.len() != 2 {
            let restrictions: BTreeSet<CyclicWord> =
                extensions.iter().map(|w| w.restrict(set).expect("subset")).collect();
            let e = if restrictions.len() == 1 {
                restrictions.into_iter().next()
            } else {
                None
            };
            r.check(d == e, || format!("{p:?} {set:?}: paths {d:?} vs extensions {e:?}"));
        }
    }
}

/// Closure laws on every acyclic arc set with `1..=max_n` vertices:
/// extensive, idempotent, monotone under adding an arc, contained in the
/// ordinary closure, acyclic, and reached after a single pass.
pub fn closure_laws(max_n: usize) -> Report {
    let mut r = Report::new("closure operator laws");
    for n in 1..=max_n {
        for a in all_acyclic_arc_sets(n) {
            check_closure_laws(&a, &mut r);
        }
    }
    r
}

pub fn check_closure_laws(a: &DirectedEdgeSet, r: &mut Report) {
    let closed = toric_closure(a).expect("acyclic");
    r.check(a.is_subset(&closed), || format!("{a:?}: not extensive"));
    r.check(closed.is_acyclic(), || format!("{a:?}: closure is cyclic"));
    r.check(toric_closure(&closed).expect("acyclic") == closed, || format!("{a:?}: not idempotent"));
    r.check(
        toric_closure_step(a).expect("acyclic") == closed,
        || format!("{a:?}: one pass does not reach the fixpoint"),
    );
    r.check(
        closed.is_subset(&ordinary_closure(a).expect("acyclic")),
        || format!("{a:?}: exceeds the ordinary closure"),
    );
    for (i, j) in non_arcs(a.n(), a) {
        let bigger = a.with(i, j);
        if !bigger.is_acyclic() {
            continue;
        }
        let big_closed = toric_closure(&bigger).expect("acyclic");
        r.check(closed.is_subset(&big_closed), || format!("{a:?} + ({i},{j}): not monotone"));
    }
}

/// Checks anti-exchange for one arc set over all arc pairs `x != y` outside
/// its closure, one case per pair.
pub fn check_anti_exchange(a: &DirectedEdgeSet, r: &mut Report) {
    let closed = toric_closure(a).expect("acyclic");
    let outside = non_arcs(a.n(), &closed);
    let closures: Vec<Option<DirectedEdgeSet>> = outside
        .iter()
        .map(|&(i, j)| {
            let b = a.with(i, j);
            b.is_acyclic().then(|| toric_closure(&b).expect("acyclic"))
        })
        .collect();
    for (s, &x) in outside.iter().enumerate() {
        for (t, &y) in outside.iter().enumerate() {
            if s == t {
                continue;
            }
            let (Some(with_x), Some(with_y)) = (&closures[s], &closures[t]) else {
                continue;
            };
            let ok = !(with_y.contains(x.0, x.1) && with_x.contains(y.0, y.1));
            r.check(ok, || format!("{a:?}: x={x:?} y={y:?}"));
        }
    }
}

/// Anti-exchange exhaustively over all acyclic arc sets with `1..=max_n`
/// vertices.
pub fn anti_exchange(max_n: usize) -> Report {
    let mut r = Report::new("anti-exchange (exhaustive)");
    for n in 1..=max_n {
        for a in all_acyclic_arc_sets(n) {
            check_anti_exchange(&a, &mut r);
        }
    }
    r
}

/// Anti-exchange on `sets` random acyclic arc sets on `n` vertices.
pub fn anti_exchange_random(n: usize, sets: usize, seed: u64) -> Report {
    let mut r = Report::new("anti-exchange (random)");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..sets {
        let a = random_acyclic_arc_set(n, &mut rng);
        check_anti_exchange(&a, &mut r);
    }
    r
}

/// Closure and extreme points do not depend on the class member used, and
/// closing keeps the chamber: the closed class restricts onto the
/// original class.
pub fn representative_independence(max_n: usize) -> Report {
    let mut r = Report::new("closure and Hasse representative independence");
    for g in connected_graphs(max_n) {
        for p in toric_posets(&g) {
            check_representative_independence(&p, &mut r);
        }
    }
    r
}

pub fn check_representative_independence(p: &ToricPoset, r: &mut Report) {
    let g = p.graph();
    let close = |o: &Orientation| {
        let c = toric_closure(&o.to_arc_set()).expect("acyclic");
        let cg = Arc::new(c.underlying_graph(g).expect("acyclic"));
        canonical(&c.as_orientation(&cg).expect("oriented"))
    };
    let reduce = |o: &Orientation| {
        let e = extreme_points(&o.to_arc_set()).expect("acyclic");
        let eg = Arc::new(e.underlying_graph(g).expect("acyclic"));
        canonical(&e.as_orientation(&eg).expect("oriented"))
    };
    let closed = close(p.rep());
    let hasse = reduce(p.rep());
    for o in p.class().iter().skip(1) {
        let c = close(o);
        r.check(
            c.graph().edges() == closed.graph().edges() && c.rep().dirs() == closed.rep().dirs(),
            || format!("{p:?}: closure of {o:?} differs"),
        );
        let h = reduce(o);
        r.check(
            h.graph().edges() == hasse.graph().edges() && h.rep().dirs() == hasse.rep().dirs(),
            || format!("{p:?}: extreme points of {o:?} differ"),
        );
    }
    let mut hit = BTreeSet::new();
    for m in closed.class() {
        let back = m.restrict(g).expect("edge subgraph");
        let inside = p.contains(&back);
        r.check(inside, || format!("{p:?}: closed member {m:?} leaves the class"));
        hit.insert(back.dirs().to_vec());
    }
    r.check(hit.len() == p.class_size(), || format!("{p:?}: some member has no extension"));
}

/// Geometric antichains are combinatorial, and both weak duality
/// inequalities hold.
pub fn antichain_laws(max_n: usize) -> Report {
    let mut r = Report::new("antichain inclusions and weak duality");
    for g in connected_graphs(max_n) {
        for p in toric_posets(&g) {
            check_antichain_laws(&p, &mut r);
        }
    }
    r
}

pub fn check_antichain_laws(p: &ToricPoset, r: &mut Report) {
    let oracle = AntichainOracle::new(p);
    for set in p.graph().vertices().subsets() {
        let geo = oracle.is_antichain(set, AntichainKind::Geometric).expect("in range");
        let comb = oracle.is_antichain(set, AntichainKind::Combinatorial).expect("in range");
        r.check(!geo || comb, || format!("{p:?} {set:?}: geometric but not combinatorial"));
        if set.len() == 2 {
            let chain = is_toric_chain(p, set).expect("in range").is_some();
            // A non-chain pair is incomparable in some member.
            r.check(chain != geo, || format!("{p:?} {set:?}: pair chain/antichain dichotomy fails"));
        }
    }
    let chain = max_toric_chain(p).value;
    let chain_cover = min_chain_cover(p).value;
    for kind in [AntichainKind::Combinatorial, AntichainKind::Geometric] {
        let width = toric_width(p, kind).value;
        let cover = min_antichain_cover(p, kind).value;
        r.check(width <= chain_cover, || format!("{p:?} {kind}: width {width} > chain cover {chain_cover}"));
        r.check(chain <= cover, || format!("{p:?} {kind}: chain {chain} > antichain cover {cover}"));
    }
}

/// `alpha(point_for(o)) = o` for every acyclic orientation, and the
/// source-flip witness points land on both sides of the flip.
pub fn geometry(max_n: usize) -> Report {
    let mut r = Report::new("geometry round trip and flip witnesses");
    for n in 1..=max_n {
        for g in Graph::all_on(n).map(Arc::new) {
            for o in enumerate_acyclic(&g) {
                check_geometry(&o, &mut r);
            }
        }
    }
    r
}

pub fn check_geometry(o: &Orientation, r: &mut Report) {
    let g = o.graph();
    let back = alpha(g, &point_for(o));
    r.check(back.as_ref() == Ok(o), || format!("{o:?}: round trip gives {back:?}"));
    for (v, flipped) in flip_sources(o) {
        let (x, y) = source_flip_witness(o, v).expect("source");
        let ok = alpha(g, &x).as_ref() == Ok(o) && alpha(g, &y).as_ref() == Ok(&flipped);
        r.check(ok, || format!("{o:?}: flip witness at {v} fails"));
    }
}

/// Rotating a permutation by one step flips its first vertex from source
/// to sink.
pub fn rotation_flips(max_n: usize) -> Report {
    let mut r = Report::new("rotation-flip correspondence");
    for g in connected_graphs(max_n) {
        let n = g.n();
        for_each_permutation(n, |w| {
            let o = orientation_from_order(&g, w).expect("permutation");
            let mut rotated = w[1..].to_vec();
            rotated.push(w[0]);
            let turned = orientation_from_order(&g, &rotated).expect("permutation");
            let flipped = if g.degree(w[0]) == 0 {
                Some(o.clone())
            } else {
                flip_at(&o, w[0])
            };
            r.check(flipped.as_ref() == Some(&turned), || format!("{g:?}: order {w:?}"));
        });
    }
    r
}

fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    fn go(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k >= perm.len() {
            f(perm);
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            go(perm, k + 1, f);
            perm.swap(k, i);
        }
    }
    if n == 0 {
        return;
    }
    go(&mut (0..n).collect(), 0, &mut f);
}

/// On `K_n` the toric total extensions of the classes partition the
/// `(n-1)!` cyclic orders.
pub fn complete_graph_extensions(max_n: usize) -> Report {
    let mut r = Report::new("complete graph extension partition");
    for n in 1..=max_n {
        let g = Arc::new(Graph::complete(n));
        let mut seen = BTreeSet::new();
        let mut total = 0usize;
        for p in toric_posets(&g) {
            let ext = toric_total_extensions(&p);
            r.check(ext.len() == 1, || format!("K{n} {p:?}: {} extensions", ext.len()));
            total += ext.len();
            seen.extend(ext);
        }
        let expected: usize = (1..n).product();
        r.check(total == expected && seen.len() == expected, || {
            format!("K{n}: {total} extensions, {} distinct, expected {expected}", seen.len())
        });
    }
    r
}

/// The 2-element toric chains, as used by the antichain checks.
pub fn toric_pairs(p: &ToricPoset) -> Vec<VertexSet> {
    p.graph()
        .vertices()
        .subsets()
        .filter(|s| s.len() == 2 && is_toric_chain(p, *s).expect("in range").is_some())
        .collect()
}

/// Every suite up to `max_n` vertices. Arc-set suites (closure laws and
/// anti-exchange) are exhaustive up to `min(max_n, 4)`; above that,
/// anti-exchange is also checked on 10^5 random arc sets on `max_n`
/// vertices.
pub fn run_all(max_n: usize) -> Vec<Report> {
    let small = max_n.min(4);
    let mut reports = vec![
        counting(max_n),
        equivalence(max_n),
        chain_conditions(max_n),
        closure_laws(small),
        anti_exchange(small),
    ];
    if max_n > 4 {
        reports.push(anti_exchange_random(max_n, 100_000, 1));
    }
    reports.extend([
        representative_independence(max_n),
        antichain_laws(max_n),
        geometry(max_n),
        rotation_flips(max_n),
        complete_graph_extensions(max_n),
    ]);
    reports
}
