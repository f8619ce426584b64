//! Sequences of distinct vertices up to rotation.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::VertexSet;

/// A sequence of distinct vertices modulo cyclic rotation, stored in the
/// rotation that starts with its smallest vertex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicWord {
    word: Vec<usize>,
}

impl CyclicWord {
    pub fn new(mut word: Vec<usize>) -> Result<Self> {
        let mut seen = VertexSet::EMPTY;
        for &v in &word {
            if v >= 64 || seen.contains(v) {
                return Err(Error::RepeatedVertex(v));
            }
            seen.insert(v);
        }
        if let Some(k) = word.iter().enumerate().min_by_key(|&(_, v)| *v).map(|(k, _)| k) {
            word.rotate_left(k);
        }
        Ok(CyclicWord { word })
    }

    pub fn empty() -> Self {
        CyclicWord { word: Vec::new() }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.word.iter().copied().collect()
    }

    /// All `len()` linear representatives, starting with the stored one.
    pub fn rotations(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.word.len().max(1)).map(move |k| {
            let mut w = self.word.clone();
            if !w.is_empty() {
                w.rotate_left(k);
            }
            w
        })
    }

    /// Whether `seq` is one of the rotations.
    pub fn has_rotation(&self, seq: &[usize]) -> bool {
        CyclicWord::new(seq.to_vec()).is_ok_and(|w| w == *self)
    }

    /// Deletes every entry outside `keep`, preserving cyclic order.
    /// `keep` must be a subset of the entries.
    pub fn restrict(&self, keep: VertexSet) -> Result<CyclicWord> {
        if !keep.is_subset(self.vertex_set()) {
            return Err(Error::NotASubset);
        }
        CyclicWord::new(self.word.iter().copied().filter(|&v| keep.contains(v)).collect())
    }

    /// The entries mapped through the graph's external labels.
    pub fn labelled(&self, graph: &Graph) -> Vec<u32> {
        self.word.iter().map(|&v| graph.label(v)).collect()
    }
}

impl fmt::Debug for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[(")?;
        for (k, v) in self.word.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")]")
    }
}

/// Restriction of a cyclic word to a subset of its entries.
pub fn cyclic_restriction(word: &CyclicWord, keep: VertexSet) -> Result<CyclicWord> {
    word.restrict(keep)
}
