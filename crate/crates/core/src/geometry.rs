//! Points of the torus `R^V / Z^V` with exact rational coordinates and the
//! fractional-part map from points off the toric arrangement to acyclic
//! orientations.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::Ratio;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::flips::{canonical, ToricPoset};
use crate::graph::{Graph, Orientation};

pub type Rational = Ratio<i64>;

/// Denominator used for random sample points (the Mersenne prime 2^31 - 1).
pub const SAMPLE_DENOMINATOR: i64 = 2_147_483_647;

/// A torus point, stored as the fractional parts of its coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TorusPoint {
    coords: Vec<Rational>,
}

impl TorusPoint {
    /// Reduces every coordinate mod 1.
    pub fn new(coords: Vec<Rational>) -> Self {
        let coords = coords.into_iter().map(frac).collect();
        TorusPoint { coords }
    }

    /// Coordinates that must already lie in `[0, 1)`.
    pub fn from_fractional(coords: Vec<Rational>) -> Result<Self> {
        if let Some(i) = coords
            .iter()
            .position(|q| *q < Rational::zero() || *q >= Rational::one())
        {
            return Err(Error::CoordinateRange(i));
        }
        Ok(TorusPoint { coords })
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Whether the point avoids every hyperplane `x_i = x_j mod 1` of `g`.
    pub fn avoids(&self, g: &Graph) -> bool {
        g.edges().iter().all(|&(i, j)| self.coords[i] != self.coords[j])
    }
}

/// The fractional part in `[0, 1)`.
pub fn frac(q: Rational) -> Rational {
    q - q.floor()
}

/// Orients each edge from the smaller to the larger fractional part.
pub fn alpha(g: &Arc<Graph>, x: &TorusPoint) -> Result<Orientation> {
    if x.dim() != g.n() {
        return Err(Error::malformed(
            "coords",
            format!("expected {} coordinates, got {}", g.n(), x.dim()),
        ));
    }
    let dirs = g
        .edges()
        .iter()
        .map(|&(i, j)| match x.coords[i].cmp(&x.coords[j]) {
            std::cmp::Ordering::Less => Ok(false),
            std::cmp::Ordering::Greater => Ok(true),
            std::cmp::Ordering::Equal => Err(Error::OnHyperplane(i, j)),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Orientation::new_unchecked(g.clone(), dirs))
}

/// A point mapping to `o`: the vertex in position `k` (1-based) of a linear
/// extension gets coordinate `k / (n + 1)`.
pub fn point_for(o: &Orientation) -> TorusPoint {
    let n = o.graph().n();
    let mut coords = vec![Rational::zero(); n];
    for (k, v) in o.linear_extension().into_iter().enumerate() {
        coords[v] = Rational::new(k as i64 + 1, n as i64 + 1);
    }
    TorusPoint { coords }
}

/// Points `(x, y)` on one straight segment inside a single toric chamber,
/// with `alpha(x) = o` and `alpha(y)` equal to `o` flipped at the source
/// `v`.
///
/// `x = point_for(o)`; `y` moves coordinate `v` down through 0 to
/// `1 - ε`, where `ε` is half the gap between the largest neighbouring
/// coordinate and 1.
pub fn source_flip_witness(o: &Orientation, v: usize) -> Option<(TorusPoint, TorusPoint)> {
    if !o.is_source(v) {
        return None;
    }
    let x = point_for(o);
    let top = o
        .graph()
        .neighbours(v)
        .iter()
        .map(|u| x.coords[u])
        .max()
        .unwrap_or(x.coords[v]);
    let eps = (Rational::one() - top) / 2;
    let mut y = x.clone();
    y.coords[v] = Rational::one() - eps;
    Some((x, y))
}

/// Flip classes hit by random sample points, with hit counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleReport {
    pub trials: usize,
    /// Points rejected for landing on the arrangement.
    pub rejected: usize,
    pub hits: BTreeMap<ToricPoset, usize>,
}

impl SampleReport {
    pub fn frequency(&self, p: &ToricPoset) -> f64 {
        self.hits.get(p).copied().unwrap_or(0) as f64 / self.trials as f64
    }
}

/// Draws `trials` points with coordinates `k / (2^31 - 1)`, rejecting and
/// redrawing points on the toric arrangement, and tallies the flip class
/// of each.
// Ordering and hashing of `ToricPoset` ignore its lazily filled class.
#[allow(clippy::mutable_key_type)]
pub fn sample_classes(g: &Arc<Graph>, trials: usize, seed: u64) -> SampleReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits: BTreeMap<ToricPoset, usize> = BTreeMap::new();
    // Cache classes by direction vector; members of a seen class resolve
    // without another flip search.
    let mut known: BTreeMap<Vec<bool>, ToricPoset> = BTreeMap::new();
    let mut rejected = 0;
    let mut done = 0;
    while done < trials {
        let coords = (0..g.n())
            .map(|_| Rational::new(rng.gen_range(0..SAMPLE_DENOMINATOR), SAMPLE_DENOMINATOR))
            .collect();
        let x = TorusPoint { coords };
        let Ok(o) = alpha(g, &x) else {
            rejected += 1;
            continue;
        };
        let p = match known.get(o.dirs()) {
            Some(p) => p.clone(),
            None => {
                let p = canonical(&o);
                for m in p.class() {
                    known.insert(m.dirs().to_vec(), p.clone());
                }
                p
            }
        };
        *hits.entry(p).or_insert(0) += 1;
        done += 1;
    }
    SampleReport {
        trials,
        rejected,
        hits,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::orientation_from_order;

    fn r(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn frac_wraps() {
        assert_eq!(frac(r(7, 5)), r(2, 5));
        assert_eq!(frac(r(-1, 10)), r(9, 10));
        let p = TorusPoint::new(vec![r(3, 2), r(-1, 4)]);
        assert_eq!(p.coords(), &[r(1, 2), r(3, 4)]);
        assert_eq!(
            TorusPoint::from_fractional(vec![r(1, 2), r(1, 1)]).unwrap_err(),
            Error::CoordinateRange(1)
        );
    }

    #[test]
    fn alpha_examples() {
        let g = Arc::new(Graph::cycle(4));
        let x = TorusPoint::new(vec![r(1, 10), r(2, 10), r(3, 10), r(4, 10)]);
        assert_eq!(alpha(&g, &x).unwrap(), orientation_from_order(&g, &[0, 1, 2, 3]).unwrap());
        let x = TorusPoint::new(vec![r(9, 10), r(2, 10), r(3, 10), r(4, 10)]);
        let second = Orientation::from_arcs(g.clone(), &[(1, 2), (2, 3), (3, 0), (1, 0)]).unwrap();
        assert_eq!(alpha(&g, &x).unwrap(), second);
        let x = TorusPoint::new(vec![r(1, 10), r(11, 10), r(3, 10), r(4, 10)]);
        assert_eq!(alpha(&g, &x).unwrap_err(), Error::OnHyperplane(0, 1));
    }

    #[test]
    fn point_for_examples() {
        let g = Arc::new(Graph::path(2));
        let o = Orientation::from_arcs(g, &[(0, 1)]).unwrap();
        assert_eq!(point_for(&o).coords(), &[r(1, 3), r(2, 3)]);
        let c4 = Arc::new(Graph::cycle(4));
        let o = orientation_from_order(&c4, &[0, 1, 2, 3]).unwrap();
        assert_eq!(point_for(&o).coords(), &[r(1, 5), r(2, 5), r(3, 5), r(4, 5)]);
    }

    #[test]
    fn tree_samples_one_class() {
        let g = Arc::new(Graph::path(5));
        let rep = sample_classes(&g, 500, 7);
        assert_eq!(rep.hits.len(), 1);
        assert_eq!(rep.hits.values().sum::<usize>(), 500);
    }

    #[test]
    fn sampling_is_deterministic() {
        let g = Arc::new(Graph::cycle(4));
        assert_eq!(sample_classes(&g, 300, 11), sample_classes(&g, 300, 11));
    }
}
