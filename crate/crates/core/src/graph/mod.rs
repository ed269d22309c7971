//! Subgraphs of `Q_n` induced by a cube family.

mod export;
mod vertex_set;

use std::collections::VecDeque;

pub use export::GraphJson;
pub use vertex_set::VertexSet;

use crate::bitstrings::{enumerate_unchecked, BitWord, CubeFamily};
use crate::error::{Error, Result};

/// Graphs with at most this many vertices keep explicit neighbor lists.
pub const STORED_ADJACENCY_MAX: usize = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphLimits {
    pub max_vertices: u64,
}

impl Default for GraphLimits {
    fn default() -> Self {
        Self {
            max_vertices: 1 << 22,
        }
    }
}

/// Result of a breadth-first distance query.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distance {
    Reachable(u32),
    Unreachable,
}

impl Distance {
    pub fn value(self) -> Option<u32> {
        match self {
            Distance::Reachable(d) => Some(d),
            Distance::Unreachable => None,
        }
    }
}

/// Compressed neighbor lists, indexed by dense vertex id.
#[derive(Clone, Debug)]
struct Adjacency {
    offsets: Vec<u32>,
    targets: Vec<u32>,
}

/// The subgraph of `Q_n` induced by the members of a [`CubeFamily`].
///
/// Vertices carry dense ids equal to their rank in ascending packed order.
/// Two vertices are adjacent iff their words differ in exactly one position.
#[derive(Clone, Debug)]
pub struct InducedGraph {
    n: u32,
    family: CubeFamily,
    vertices: Vec<BitWord>,
    adjacency: Option<Adjacency>,
}

pub fn build_graph(family: CubeFamily, n: u32) -> Result<InducedGraph> {
    InducedGraph::build(family, n)
}

impl InducedGraph {
    pub fn build(family: CubeFamily, n: u32) -> Result<Self> {
        Self::build_with_limits(family, n, GraphLimits::default())
    }

    pub fn build_with_limits(family: CubeFamily, n: u32, limits: GraphLimits) -> Result<Self> {
        family.validate()?;
        Self::build_unchecked(family, n, limits)
    }

    /// Builds without validating the family parameter. Used for the degenerate
    /// `GenLucas(1)` graph, whose only vertex is `0^n`.
    pub(crate) fn build_unchecked(family: CubeFamily, n: u32, limits: GraphLimits) -> Result<Self> {
        let vertices =
            enumerate_unchecked(family, n, limits.max_vertices).map_err(|e| match e {
                Error::ResourceLimit { .. } => Error::ResourceLimit {
                    what: format!("vertex count of {family} at n = {n}"),
                    cap: limits.max_vertices,
                },
                other => other,
            })?;
        let mut graph = Self {
            n,
            family,
            vertices,
            adjacency: None,
        };
        if graph.vertices.len() <= STORED_ADJACENCY_MAX {
            graph.adjacency = Some(graph.probe_adjacency());
        }
        Ok(graph)
    }

    /// The subgraph of `Q_n` induced by an arbitrary set of words. The graph
    /// reports [`CubeFamily::Hypercube`] as its family; duplicates are dropped.
    pub fn from_vertices<I>(n: u32, words: I) -> Result<Self>
    where
        I: IntoIterator<Item = BitWord>,
    {
        let mut vertices: Vec<BitWord> = words.into_iter().collect();
        if let Some(w) = vertices.iter().find(|w| w.len() != n) {
            return Err(Error::LengthMismatch {
                left: n,
                right: w.len(),
            });
        }
        vertices.sort_unstable();
        vertices.dedup();
        let mut graph = Self {
            n,
            family: CubeFamily::Hypercube,
            vertices,
            adjacency: None,
        };
        if graph.vertices.len() <= STORED_ADJACENCY_MAX {
            graph.adjacency = Some(graph.probe_adjacency());
        }
        Ok(graph)
    }

    fn probe_adjacency(&self) -> Adjacency {
        let mut offsets = Vec::with_capacity(self.vertices.len() + 1);
        let mut targets = Vec::new();
        offsets.push(0);
        for w in &self.vertices {
            targets.extend(w.flips().filter_map(|x| self.id_of(&x)));
            offsets.push(targets.len() as u32);
        }
        Adjacency { offsets, targets }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn family(&self) -> CubeFamily {
        self.family
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[BitWord] {
        &self.vertices
    }

    #[inline]
    pub fn vertex(&self, id: u32) -> BitWord {
        self.vertices[id as usize]
    }

    #[inline]
    pub fn id_of(&self, w: &BitWord) -> Option<u32> {
        if w.len() != self.n {
            return None;
        }
        self.vertices.binary_search(w).ok().map(|i| i as u32)
    }

    pub fn require_id(&self, w: &BitWord) -> Result<u32> {
        self.id_of(w)
            .ok_or_else(|| Error::NotInGraph(w.to_string()))
    }

    pub fn neighbors(&self, id: u32) -> Neighbors<'_> {
        match &self.adjacency {
            Some(adj) => {
                let lo = adj.offsets[id as usize] as usize;
                let hi = adj.offsets[id as usize + 1] as usize;
                Neighbors::Stored(adj.targets[lo..hi].iter())
            }
            None => Neighbors::Probe {
                graph: self,
                word: self.vertex(id),
                next_bit: 0,
            },
        }
    }

    pub fn degree(&self, id: u32) -> usize {
        match &self.adjacency {
            Some(adj) => (adj.offsets[id as usize + 1] - adj.offsets[id as usize]) as usize,
            None => self.neighbors(id).count(),
        }
    }

    pub fn edge_count(&self) -> usize {
        (0..self.len() as u32)
            .map(|v| self.degree(v))
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..self.len() as u32).flat_map(move |u| {
            let mut nbrs: Vec<u32> = self.neighbors(u).filter(|&v| v > u).collect();
            nbrs.sort_unstable();
            nbrs.into_iter().map(move |v| (u, v))
        })
    }

    /// `N[v]` as dense ids.
    pub fn closed_neighborhood_ids(&self, id: u32) -> VertexSet {
        let mut s = VertexSet::empty(self);
        s.insert(id);
        for u in self.neighbors(id) {
            s.insert(u);
        }
        s
    }

    pub fn closed_neighborhood(&self, w: &BitWord) -> Result<VertexSet> {
        Ok(self.closed_neighborhood_ids(self.require_id(w)?))
    }

    /// Breadth-first distances from `source` to every vertex.
    pub fn bfs(&self, source: u32) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.len()];
        dist[source as usize] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u as usize].unwrap_or(0);
            for v in self.neighbors(u) {
                if dist[v as usize].is_none() {
                    dist[v as usize] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn graph_distance(&self, u: &BitWord, v: &BitWord) -> Result<Distance> {
        let (iu, iv) = (self.require_id(u)?, self.require_id(v)?);
        Ok(match self.bfs(iu)[iv as usize] {
            Some(d) => Distance::Reachable(d),
            None => Distance::Unreachable,
        })
    }

    pub fn is_connected(&self) -> bool {
        self.is_empty() || self.bfs(0).iter().all(Option::is_some)
    }

    /// For each vertex of weight `k_from`, in id order, how many of its
    /// neighbors have weight `k_to`. Requires `|k_from - k_to| = 1`.
    pub fn level_degree_profile(&self, k_from: u32, k_to: u32) -> Result<Vec<u32>> {
        if k_from.abs_diff(k_to) != 1 || k_from > self.n || k_to > self.n {
            return Err(Error::InvalidInput(format!(
                "level pair ({k_from}, {k_to}) must be adjacent levels within 0..={}",
                self.n
            )));
        }
        Ok((0..self.len() as u32)
            .filter(|&v| self.vertex(v).weight() == k_from)
            .map(|v| {
                self.neighbors(v)
                    .filter(|&u| self.vertex(u).weight() == k_to)
                    .count() as u32
            })
            .collect())
    }
}

pub fn closed_neighborhood(graph: &InducedGraph, w: &BitWord) -> Result<VertexSet> {
    graph.closed_neighborhood(w)
}

pub fn hamming_distance(x: &BitWord, y: &BitWord) -> Result<u32> {
    x.hamming_distance(y)
}

pub fn graph_distance(graph: &InducedGraph, u: &BitWord, v: &BitWord) -> Result<Distance> {
    graph.graph_distance(u, v)
}

pub fn level_degree_profile(graph: &InducedGraph, k_from: u32, k_to: u32) -> Result<Vec<u32>> {
    graph.level_degree_profile(k_from, k_to)
}

pub enum Neighbors<'a> {
    Stored(std::slice::Iter<'a, u32>),
    Probe {
        graph: &'a InducedGraph,
        word: BitWord,
        next_bit: u32,
    },
}

impl Iterator for Neighbors<'_> {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        match self {
            Neighbors::Stored(it) => it.next().copied(),
            Neighbors::Probe {
                graph,
                word,
                next_bit,
            } => {
                while *next_bit < word.len() {
                    *next_bit += 1;
                    if let Some(id) = graph.id_of(&word.flip(*next_bit)) {
                        return Some(id);
                    }
                }
                None
            }
        }
    }
}
