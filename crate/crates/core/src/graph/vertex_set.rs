use fixedbitset::FixedBitSet;

use super::InducedGraph;
use crate::bitstrings::{BitWord, CubeFamily};
use crate::error::{Error, Result};

/// A subset of the vertices of one [`InducedGraph`], stored as a bitmap over dense ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSet {
    family: CubeFamily,
    n: u32,
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn empty(graph: &InducedGraph) -> Self {
        Self {
            family: graph.family(),
            n: graph.n(),
            bits: FixedBitSet::with_capacity(graph.len()),
        }
    }

    pub fn full(graph: &InducedGraph) -> Self {
        let mut s = Self::empty(graph);
        s.bits.insert_range(..);
        s
    }

    /// Looks up every word in `graph`; foreign words are rejected.
    pub fn from_words<'a, I>(graph: &InducedGraph, words: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a BitWord>,
    {
        let mut s = Self::empty(graph);
        for w in words {
            s.insert(graph.require_id(w)?);
        }
        Ok(s)
    }

    pub fn from_ids<I: IntoIterator<Item = u32>>(graph: &InducedGraph, ids: I) -> Result<Self> {
        let mut s = Self::empty(graph);
        for id in ids {
            if id as usize >= graph.len() {
                return Err(Error::InvalidInput(format!(
                    "vertex id {id} out of range for {} vertices",
                    graph.len()
                )));
            }
            s.insert(id);
        }
        Ok(s)
    }

    /// Whether this set was built over `graph`.
    pub fn belongs_to(&self, graph: &InducedGraph) -> bool {
        self.family == graph.family() && self.n == graph.n() && self.bits.len() == graph.len()
    }

    pub(crate) fn check_graph(&self, graph: &InducedGraph) -> Result<()> {
        if !self.belongs_to(graph) {
            return Err(Error::InvalidInput(format!(
                "vertex set over {} at n = {} used with graph {} at n = {}",
                self.family,
                self.n,
                graph.family(),
                graph.n()
            )));
        }
        Ok(())
    }

    #[inline]
    pub fn insert(&mut self, id: u32) {
        self.bits.insert(id as usize);
    }

    #[inline]
    pub fn contains(&self, id: u32) -> bool {
        self.bits.contains(id as usize)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    /// Size of the underlying universe, i.e. `|V|` of the owning graph.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn ids(&self) -> impl Iterator<Item = u32> + '_ {
        self.bits.ones().map(|i| i as u32)
    }

    /// Member words in ascending order.
    pub fn words<'g>(&'g self, graph: &'g InducedGraph) -> impl Iterator<Item = BitWord> + 'g {
        self.ids().map(move |id| graph.vertex(id))
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn union_with(&mut self, other: &Self) {
        self.bits.union_with(&other.bits);
    }

    pub fn is_full(&self) -> bool {
        self.bits.count_ones(..) == self.bits.len()
    }
}
