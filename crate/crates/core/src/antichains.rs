//! Combinatorial and geometric toric antichains, toric widths, and exact
//! chain/antichain cover numbers.
//!
//! Everything here is exhaustive over vertex subsets and meant for small
//! vertex counts (roughly `n <= 12`; covers `n <= 8`).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::flips::ToricPoset;
use crate::toric::{all_toric_chains, is_toric_chain};
use crate::vset::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AntichainKind {
    /// No two members lie on a common toric chain.
    Combinatorial,
    /// The diagonal `x_i = x_j` for all members meets the open chamber.
    Geometric,
}

impl AntichainKind {
    pub fn as_str(self) -> &'static str {
        match self {
            AntichainKind::Combinatorial => "combinatorial",
            AntichainKind::Geometric => "geometric",
        }
    }
}

impl fmt::Display for AntichainKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AntichainKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "combinatorial" => Ok(AntichainKind::Combinatorial),
            "geometric" => Ok(AntichainKind::Geometric),
            other => Err(Error::malformed("kind", format!("unknown antichain kind {other:?}"))),
        }
    }
}

/// Precomputed pairwise data for antichain queries on one toric poset.
pub struct AntichainOracle {
    n: usize,
    /// `toric_pairs[i]`: vertices `j` with `{i, j}` a toric chain.
    toric_pairs: Vec<VertexSet>,
    /// For every class member, the comparability sets of its ordinary poset.
    member_comparable: Vec<Vec<VertexSet>>,
}

impl AntichainOracle {
    pub fn new(p: &ToricPoset) -> Self {
        let n = p.n();
        let mut toric_pairs = vec![VertexSet::EMPTY; n];
        for i in 0..n {
            for j in i + 1..n {
                let pair = VertexSet::singleton(i).with(j);
                if is_toric_chain(p, pair).expect("in range").is_some() {
                    toric_pairs[i].insert(j);
                    toric_pairs[j].insert(i);
                }
            }
        }
        let member_comparable = p
            .class()
            .iter()
            .map(|o| {
                let desc = o.descendants();
                let mut cmp = desc.clone();
                for (u, d) in desc.iter().enumerate() {
                    for v in d.iter() {
                        cmp[v].insert(u);
                    }
                }
                cmp
            })
            .collect();
        AntichainOracle {
            n,
            toric_pairs,
            member_comparable,
        }
    }

    fn check(&self, set: VertexSet) -> Result<()> {
        match set.difference(VertexSet::full(self.n)).first() {
            Some(v) => Err(Error::VertexOutOfRange { vertex: v, n: self.n }),
            None => Ok(()),
        }
    }

    fn pairwise_free(rel: &[VertexSet], set: VertexSet) -> bool {
        set.iter().all(|v| !rel[v].intersects(set))
    }

    pub fn is_antichain(&self, set: VertexSet, kind: AntichainKind) -> Result<bool> {
        self.check(set)?;
        Ok(match kind {
            AntichainKind::Combinatorial => Self::pairwise_free(&self.toric_pairs, set),
            AntichainKind::Geometric => self
                .member_comparable
                .iter()
                .any(|cmp| Self::pairwise_free(cmp, set)),
        })
    }

    /// Every antichain of the given kind, in increasing bitmask order.
    pub fn antichains(&self, kind: AntichainKind) -> Vec<VertexSet> {
        VertexSet::full(self.n)
            .subsets()
            .filter(|&s| self.is_antichain(s, kind).expect("in range"))
            .collect()
    }
}

pub fn is_combinatorial_antichain(p: &ToricPoset, set: VertexSet) -> Result<bool> {
    AntichainOracle::new(p).is_antichain(set, AntichainKind::Combinatorial)
}

/// True iff `set` is an antichain of the ordinary poset of some member of
/// the class.
pub fn is_geometric_antichain(p: &ToricPoset, set: VertexSet) -> Result<bool> {
    AntichainOracle::new(p).is_antichain(set, AntichainKind::Geometric)
}

/// An optimum value together with a set realising it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extremum {
    pub value: usize,
    pub witness: VertexSet,
}

/// Size of the largest toric antichain of the given kind.
pub fn toric_width(p: &ToricPoset, kind: AntichainKind) -> Extremum {
    let oracle = AntichainOracle::new(p);
    let mut best = Extremum {
        value: 0,
        witness: VertexSet::EMPTY,
    };
    // Antichains are closed under subsets, so grow only from antichains.
    let mut stack = vec![(VertexSet::EMPTY, 0usize)];
    while let Some((set, next)) = stack.pop() {
        if set.len() > best.value {
            best = Extremum {
                value: set.len(),
                witness: set,
            };
        }
        if set.len() + (p.n() - next) <= best.value {
            continue;
        }
        for v in next..p.n() {
            let bigger = set.with(v);
            if oracle.is_antichain(bigger, kind).expect("in range") {
                stack.push((bigger, v + 1));
            }
        }
    }
    best
}

/// Size of the largest toric chain.
pub fn max_toric_chain(p: &ToricPoset) -> Extremum {
    let chains = all_toric_chains(p);
    let (&witness, _) = chains
        .iter()
        .max_by_key(|(s, _)| (s.len(), std::cmp::Reverse(**s)))
        .expect("the empty chain");
    Extremum {
        value: witness.len(),
        witness,
    }
}

/// A minimum cover together with one optimal family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    pub value: usize,
    pub witness: Vec<VertexSet>,
}

impl Cover {
    /// The witness made disjoint by dropping already-covered vertices.
    pub fn as_partition(&self) -> Vec<VertexSet> {
        let mut covered = VertexSet::EMPTY;
        self.witness
            .iter()
            .map(|&s| {
                let part = s.difference(covered);
                covered = covered.union(s);
                part
            })
            .collect()
    }
}

fn maximal(sets: &[VertexSet]) -> Vec<VertexSet> {
    sets.iter()
        .copied()
        .filter(|&s| !sets.iter().any(|&t| t != s && s.is_subset(t)))
        .collect()
}

/// Exact minimum set cover of `universe` by branch and bound: branch on
/// the uncovered element with the fewest candidate sets.
pub fn min_set_cover(universe: VertexSet, candidates: &[VertexSet]) -> Option<Vec<VertexSet>> {
    fn go(
        uncovered: VertexSet,
        candidates: &[VertexSet],
        chosen: &mut Vec<VertexSet>,
        best: &mut Option<Vec<VertexSet>>,
    ) {
        if uncovered.is_empty() {
            if best.as_ref().is_none_or(|b| chosen.len() < b.len()) {
                *best = Some(chosen.clone());
            }
            return;
        }
        let widest = candidates
            .iter()
            .map(|s| s.intersection(uncovered).len())
            .max()
            .unwrap_or(0);
        if widest == 0 {
            return;
        }
        let lower = chosen.len() + uncovered.len().div_ceil(widest);
        if best.as_ref().is_some_and(|b| lower >= b.len()) {
            return;
        }
        let pivot = uncovered
            .iter()
            .min_by_key(|&v| candidates.iter().filter(|s| s.contains(v)).count())
            .expect("non-empty");
        let mut options: Vec<VertexSet> = candidates.iter().copied().filter(|s| s.contains(pivot)).collect();
        options.sort_by_key(|s| std::cmp::Reverse(s.intersection(uncovered).len()));
        for s in options {
            chosen.push(s);
            go(uncovered.difference(s), candidates, chosen, best);
            chosen.pop();
        }
    }
    let mut best = None;
    go(universe, candidates, &mut Vec::new(), &mut best);
    best
}

/// Fewest toric chains whose union is the whole vertex set.
pub fn min_chain_cover(p: &ToricPoset) -> Cover {
    let chains: Vec<VertexSet> = all_toric_chains(p).into_keys().collect();
    let witness = min_set_cover(p.graph().vertices(), &maximal(&chains)).expect("singletons cover");
    Cover {
        value: witness.len(),
        witness,
    }
}

/// Fewest toric antichains of the given kind whose union is the vertex set.
pub fn min_antichain_cover(p: &ToricPoset, kind: AntichainKind) -> Cover {
    let all = AntichainOracle::new(p).antichains(kind);
    let witness = min_set_cover(p.graph().vertices(), &maximal(&all)).expect("singletons cover");
    Cover {
        value: witness.len(),
        witness,
    }
}
