use crate::bitstrings::BitWord;
use crate::error::Result;
use crate::graph::{InducedGraph, VertexSet};

/// A set of vertices of one graph, tested against the code predicates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeSet {
    members: VertexSet,
}

impl CodeSet {
    pub fn new(members: VertexSet) -> Self {
        Self { members }
    }

    pub fn empty(graph: &InducedGraph) -> Self {
        Self::new(VertexSet::empty(graph))
    }

    /// Fails with [`crate::Error::NotInGraph`] on the first word that is not a vertex.
    pub fn from_words<'a, I>(graph: &InducedGraph, words: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a BitWord>,
    {
        Ok(Self::new(VertexSet::from_words(graph, words)?))
    }

    pub fn members(&self) -> &VertexSet {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, id: u32) -> bool {
        self.members.contains(id)
    }

    pub fn words(&self, graph: &InducedGraph) -> Vec<BitWord> {
        self.members.words(graph).collect()
    }
}

/// How many members' closed neighborhoods contain each vertex.
fn coverage(graph: &InducedGraph, code: &CodeSet) -> Result<Vec<u32>> {
    code.members.check_graph(graph)?;
    let mut cover = vec![0u32; graph.len()];
    for c in code.members.ids() {
        cover[c as usize] += 1;
        for u in graph.neighbors(c) {
            cover[u as usize] += 1;
        }
    }
    Ok(cover)
}

/// Closed neighborhoods of distinct members are pairwise disjoint.
pub fn is_code(graph: &InducedGraph, code: &CodeSet) -> Result<bool> {
    code.members.check_graph(graph)?;
    let mut seen = VertexSet::empty(graph);
    for c in code.members.ids() {
        let ball = graph.closed_neighborhood_ids(c);
        if !seen.is_disjoint(&ball) {
            return Ok(false);
        }
        seen.union_with(&ball);
    }
    Ok(true)
}

/// Every vertex lies in the closed neighborhood of some member.
pub fn is_dominating(graph: &InducedGraph, code: &CodeSet) -> Result<bool> {
    code.members.check_graph(graph)?;
    let mut seen = VertexSet::empty(graph);
    for c in code.members.ids() {
        seen.union_with(&graph.closed_neighborhood_ids(c));
    }
    Ok(seen.is_full())
}

/// The closed neighborhoods of the members partition the vertex set.
pub fn is_perfect_code(graph: &InducedGraph, code: &CodeSet) -> Result<bool> {
    let partition = coverage(graph, code)?.iter().all(|&k| k == 1);
    let split = is_code(graph, code)? && is_dominating(graph, code)?;
    assert_eq!(
        partition, split,
        "partition test and code+domination test disagree"
    );
    Ok(partition)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitstrings::CubeFamily;
    use crate::graph::build_graph;

    fn code(g: &InducedGraph, words: &[&str]) -> CodeSet {
        let ws: Vec<BitWord> = words.iter().map(|s| s.parse().unwrap()).collect();
        CodeSet::from_words(g, &ws).unwrap()
    }

    #[test]
    fn code_predicate() {
        let q3 = build_graph(CubeFamily::Hypercube, 3).unwrap();
        assert!(is_code(&q3, &code(&q3, &["000", "111"])).unwrap());
        let l4 = build_graph(CubeFamily::Lucas, 4).unwrap();
        // 0001 is adjacent to both.
        assert!(!is_code(&l4, &code(&l4, &["0000", "0101"])).unwrap());
        assert!(is_code(&l4, &CodeSet::empty(&l4)).unwrap());
    }

    #[test]
    fn domination_predicate() {
        let l3 = build_graph(CubeFamily::Lucas, 3).unwrap();
        assert!(is_dominating(&l3, &code(&l3, &["000"])).unwrap());
        let l4 = build_graph(CubeFamily::Lucas, 4).unwrap();
        assert!(!is_dominating(&l4, &code(&l4, &["0000"])).unwrap());
        let all = CodeSet::new(VertexSet::full(&l4));
        assert!(is_dominating(&l4, &all).unwrap());
    }

    #[test]
    fn perfect_predicate() {
        let l2 = build_graph(CubeFamily::Lucas, 2).unwrap();
        assert!(is_perfect_code(&l2, &code(&l2, &["00"])).unwrap());
        let l4 = build_graph(CubeFamily::Lucas, 4).unwrap();
        for v in l4.vertices() {
            let c = CodeSet::from_words(&l4, [v]).unwrap();
            assert!(!is_perfect_code(&l4, &c).unwrap());
        }
    }

    #[test]
    fn foreign_words_rejected() {
        let l4 = build_graph(CubeFamily::Lucas, 4).unwrap();
        let w: BitWord = "1001".parse().unwrap();
        assert!(CodeSet::from_words(&l4, [&w]).is_err());
        let q3 = build_graph(CubeFamily::Hypercube, 3).unwrap();
        assert!(is_code(&l4, &CodeSet::empty(&q3)).is_err());
    }
}
