//! Tutte polynomials by deletion-contraction and the orientation/flip-class
//! counting identities `|Acyc(G)| = T(2,0)` and `|Acyc(G)/≡| = T(1,0)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul};
use std::sync::Arc;

use crate::flips::toric_posets;
use crate::graph::{enumerate_acyclic, Graph};

/// A polynomial in `x, y` with non-negative integer coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Polynomial2 {
    coeffs: BTreeMap<(u32, u32), u64>,
}

impl Polynomial2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn y() -> Self {
        Self::monomial(0, 1, 1)
    }

    pub fn monomial(dx: u32, dy: u32, c: u64) -> Self {
        let mut p = Self::zero();
        if c != 0 {
            p.coeffs.insert((dx, dy), c);
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), u64)>>(terms: I) -> Self {
        terms
            .into_iter()
            .fold(Self::zero(), |acc, ((dx, dy), c)| acc + Self::monomial(dx, dy, c))
    }

    pub fn coeff(&self, dx: u32, dy: u32) -> u64 {
        self.coeffs.get(&(dx, dy)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), u64)> + '_ {
        self.coeffs.iter().map(|(&k, &c)| (k, c))
    }

    pub fn eval(&self, x: i128, y: i128) -> i128 {
        self.terms()
            .map(|((dx, dy), c)| c as i128 * x.pow(dx) * y.pow(dy))
            .sum()
    }

    fn shift(&self, dx: u32, dy: u32) -> Self {
        Polynomial2 {
            coeffs: self.coeffs.iter().map(|(&(a, b), &c)| ((a + dx, b + dy), c)).collect(),
        }
    }
}

impl Add for Polynomial2 {
    type Output = Polynomial2;

    fn add(mut self, rhs: Polynomial2) -> Polynomial2 {
        for (k, c) in rhs.coeffs {
            *self.coeffs.entry(k).or_insert(0) += c;
        }
        self
    }
}

impl Mul for &Polynomial2 {
    type Output = Polynomial2;

    fn mul(self, rhs: &Polynomial2) -> Polynomial2 {
        let mut out = Polynomial2::zero();
        for (&(a, b), &c) in &self.coeffs {
            for (&(d, e), &f) in &rhs.coeffs {
                *out.coeffs.entry((a + d, b + e)).or_insert(0) += c * f;
            }
        }
        out
    }
}

/// Terms in descending total degree, then descending x-degree, e.g.
/// `x^3 + x^2 + x + y`.
impl fmt::Display for Polynomial2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by_key(|&((a, b), _)| std::cmp::Reverse((a + b, a)));
        for (k, ((a, b), c)) in terms.into_iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let mut parts = Vec::new();
            if c != 1 || (a == 0 && b == 0) {
                parts.push(c.to_string());
            }
            for (var, d) in [("x", a), ("y", b)] {
                match d {
                    0 => {}
                    1 => parts.push(var.to_string()),
                    _ => parts.push(format!("{var}^{d}")),
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A loop-permitting multigraph; only used for deletion-contraction minors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    /// Each edge as `(a, b)` with `a <= b`, sorted.
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut edges: Vec<_> = edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        assert!(edges.iter().all(|&(_, b)| b < n), "endpoint out of range");
        edges.sort_unstable();
        Multigraph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    fn without_edge(&self, k: usize) -> Multigraph {
        let mut edges = self.edges.clone();
        edges.remove(k);
        Multigraph { n: self.n, edges }
    }

    /// Merges the endpoints of edge `k` and drops it.
    fn contract_edge(&self, k: usize) -> Multigraph {
        let (keep, gone) = self.edges[k];
        let relabel = |v: usize| if v == gone { keep } else { v };
        let rest = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, &(a, b))| (relabel(a), relabel(b)));
        Multigraph::new(self.n, rest)
    }

    fn connected_without(&self, k: usize, a: usize, b: usize) -> bool {
        let mut seen = vec![false; self.n];
        seen[a] = true;
        let mut stack = vec![a];
        while let Some(v) = stack.pop() {
            if v == b {
                return true;
            }
            for (i, &(p, q)) in self.edges.iter().enumerate() {
                if i == k {
                    continue;
                }
                let u = if p == v {
                    q
                } else if q == v {
                    p
                } else {
                    continue;
                };
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        false
    }

    /// Relabels vertices by (degree, first neighbour-degree profile, old
    /// index) and drops isolated vertices. Equal keys are equal edge lists,
    /// hence isomorphic minors; ties only cost sharing, never correctness.
    fn memo_key(&self) -> Multigraph {
        let mut deg = vec![0usize; self.n];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        let mut profile: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            profile[a].push(deg[b]);
            profile[b].push(deg[a]);
        }
        for p in &mut profile {
            p.sort_unstable();
        }
        let mut order: Vec<usize> = (0..self.n).filter(|&v| deg[v] > 0).collect();
        order.sort_by(|&u, &v| (deg[u], &profile[u], u).cmp(&(deg[v], &profile[v], v)));
        let mut new_index = vec![usize::MAX; self.n];
        for (k, &v) in order.iter().enumerate() {
            new_index[v] = k;
        }
        Multigraph::new(
            order.len(),
            self.edges.iter().map(|&(a, b)| (new_index[a], new_index[b])),
        )
    }
}

impl From<&Graph> for Multigraph {
    fn from(g: &Graph) -> Self {
        Multigraph::new(g.n(), g.edges().iter().copied())
    }
}

fn tutte_rec(g: Multigraph, memo: &mut HashMap<Multigraph, Polynomial2>) -> Polynomial2 {
    let g = g.memo_key();
    if let Some(p) = memo.get(&g) {
        return p.clone();
    }
    // Peel loops and bridges first; then split on the smallest edge.
    let mut loops = 0u32;
    let mut bridges = 0u32;
    let mut cur = g.clone();
    'peel: loop {
        for k in 0..cur.edges.len() {
            let (a, b) = cur.edges[k];
            if a == b {
                loops += 1;
                cur = cur.without_edge(k);
                continue 'peel;
            }
            if !cur.connected_without(k, a, b) {
                bridges += 1;
                cur = cur.contract_edge(k);
                continue 'peel;
            }
        }
        break;
    }
    let core = if cur.edges.is_empty() {
        Polynomial2::one()
    } else {
        tutte_rec(cur.without_edge(0), memo) + tutte_rec(cur.contract_edge(0), memo)
    };
    let result = core.shift(bridges, loops);
    memo.insert(g, result.clone());
    result
}

/// The Tutte polynomial of a multigraph.
pub fn tutte_multigraph(g: &Multigraph) -> Polynomial2 {
    tutte_rec(g.clone(), &mut HashMap::new())
}

/// The Tutte polynomial of `g`.
pub fn tutte(g: &Graph) -> Polynomial2 {
    tutte_multigraph(&Multigraph::from(g))
}

/// Both sides of both counting identities for one graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountCheck {
    pub acyclic: u64,
    pub t_2_0: u64,
    pub classes: u64,
    pub t_1_0: u64,
}

impl CountCheck {
    pub fn passes(&self) -> bool {
        self.acyclic == self.t_2_0 && self.classes == self.t_1_0
    }
}

/// Counts acyclic orientations and flip classes directly and compares them
/// with `T(2,0)` and `T(1,0)`.
pub fn count_check(g: &Arc<Graph>) -> CountCheck {
    let t = tutte(g);
    CountCheck {
        acyclic: enumerate_acyclic(g).len() as u64,
        t_2_0: t.eval(2, 0) as u64,
        classes: toric_posets(g).len() as u64,
        t_1_0: t.eval(1, 0) as u64,
    }
}
