//! Perfect-code search and validation on induced subgraphs of `Q_n`.

mod code_set;
mod exact_cover;

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub use code_set::{is_code, is_dominating, is_perfect_code, CodeSet};

use crate::bitstrings::BitWord;
use crate::graph::{InducedGraph, VertexSet};
use exact_cover::{solve, Goal, Limits, Problem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMode {
    /// Stop at the first perfect code.
    First,
    /// Same search as `First`; only a complete search reports `Exhausted`.
    ProveNone,
    /// Count every perfect code.
    Enumerate,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Self {
            max_nodes: Some(max_nodes),
            max_time: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub mode: SearchMode,
    pub budget: Budget,
    /// Seed 0 keeps the natural vertex order; any other value shuffles the
    /// tie-breaking and branch order.
    pub seed: u64,
    pub threads: usize,
    /// Witnesses retained in `Enumerate` mode.
    pub keep_witnesses: usize,
}

impl SearchConfig {
    pub fn new(mode: SearchMode) -> Self {
        Self {
            mode,
            budget: Budget::default(),
            seed: 0,
            threads: 1,
            keep_witnesses: 0,
        }
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }

    pub fn keep_witnesses(mut self, keep: usize) -> Self {
        self.keep_witnesses = keep;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchStatus {
    Found(CodeSet),
    /// The whole search space was covered without finding a perfect code.
    Exhausted,
    Enumerated {
        count: u64,
        witnesses: Vec<CodeSet>,
    },
    /// The node or time budget ran out before the search could conclude.
    BudgetExceeded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed: Duration,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub stats: SearchStats,
}

impl SearchOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self.status, SearchStatus::Found(_))
    }

    pub fn is_exhausted(&self) -> bool {
        self.status == SearchStatus::Exhausted
    }

    pub fn witness(&self) -> Option<&CodeSet> {
        match &self.status {
            SearchStatus::Found(c) => Some(c),
            _ => None,
        }
    }

    pub fn count(&self) -> Option<u64> {
        match &self.status {
            SearchStatus::Enumerated { count, .. } => Some(*count),
            _ => None,
        }
    }

    pub fn status_name(&self) -> &'static str {
        match self.status {
            SearchStatus::Found(_) => "found",
            SearchStatus::Exhausted => "exhausted",
            SearchStatus::Enumerated { .. } => "enumerated",
            SearchStatus::BudgetExceeded => "budget_exceeded",
        }
    }

    /// CLI exit status: 0 found/enumerated, 3 exhausted, 4 budget exceeded.
    pub fn exit_code(&self) -> i32 {
        match self.status {
            SearchStatus::Found(_) | SearchStatus::Enumerated { .. } => 0,
            SearchStatus::Exhausted => 3,
            SearchStatus::BudgetExceeded => 4,
        }
    }

    pub fn to_record(&self, graph: &InducedGraph) -> OutcomeRecord {
        OutcomeRecord {
            status: self.status_name().to_string(),
            witness: self.witness().map(|c| c.words(graph)),
            count: self.count(),
            nodes: self.stats.nodes,
            millis: self.stats.elapsed.as_millis() as u64,
            seed: self.stats.seed,
        }
    }
}

/// JSON form of a [`SearchOutcome`]. Field order is the serialized key order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutcomeRecord {
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<BitWord>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<u64>,
    pub nodes: u64,
    pub millis: u64,
    pub seed: u64,
}

fn search_order(len: usize, seed: u64) -> Vec<u32> {
    let mut order: Vec<u32> = (0..len as u32).collect();
    if seed != 0 {
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    // rank[v] = position of v in the order
    let mut rank = vec![0u32; len];
    for (i, &v) in order.iter().enumerate() {
        rank[v as usize] = i as u32;
    }
    rank
}

/// Exact-cover search for perfect codes of `graph`.
pub fn find_perfect_code(graph: &InducedGraph, config: &SearchConfig) -> SearchOutcome {
    run(graph, vec![true; graph.len()], config)
}

/// Perfect codes of `graph` none of whose codewords satisfy `forbidden`.
pub fn search_constrained<F>(
    graph: &InducedGraph,
    forbidden: F,
    config: &SearchConfig,
) -> SearchOutcome
where
    F: Fn(&BitWord) -> bool,
{
    let allowed = graph.vertices().iter().map(|w| !forbidden(w)).collect();
    run(graph, allowed, config)
}

fn run(graph: &InducedGraph, allowed: Vec<bool>, config: &SearchConfig) -> SearchOutcome {
    let start = Instant::now();
    let problem = Problem::new(graph, allowed, search_order(graph.len(), config.seed));
    let limits = Limits {
        max_nodes: config.budget.max_nodes,
        deadline: config.budget.max_time.map(|t| start + t),
    };
    let goal = match config.mode {
        SearchMode::First | SearchMode::ProveNone => Goal::First,
        SearchMode::Enumerate => Goal::Count {
            keep: config.keep_witnesses,
        },
    };
    let solved = solve(&problem, goal, &limits, config.threads);

    let to_code = |ids: &Vec<u32>| {
        CodeSet::new(VertexSet::from_ids(graph, ids.iter().copied()).expect("ids come from graph"))
    };
    let status = match goal {
        Goal::First => match solved.witnesses.first() {
            Some(ids) => SearchStatus::Found(to_code(ids)),
            None if solved.budget_hit => SearchStatus::BudgetExceeded,
            None => SearchStatus::Exhausted,
        },
        Goal::Count { .. } if solved.budget_hit => SearchStatus::BudgetExceeded,
        Goal::Count { .. } => SearchStatus::Enumerated {
            count: solved.count,
            witnesses: solved.witnesses.iter().map(to_code).collect(),
        },
    };
    if let SearchStatus::Found(code) = &status {
        debug_assert!(is_perfect_code(graph, code).unwrap_or(false));
    }
    SearchOutcome {
        status,
        stats: SearchStats {
            nodes: solved.nodes,
            elapsed: start.elapsed(),
            seed: config.seed,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitstrings::CubeFamily;
    use crate::graph::build_graph;

    /// Perfect codes by checking every subset; only for tiny graphs.
    fn brute_force_count(graph: &InducedGraph) -> u64 {
        let n = graph.len();
        assert!(n <= 20);
        let balls: Vec<u32> = (0..n as u32)
            .map(|v| {
                graph
                    .closed_neighborhood_ids(v)
                    .ids()
                    .fold(0u32, |m, u| m | (1 << u))
            })
            .collect();
        let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        (0u32..=full)
            .filter(|&subset| {
                let mut seen = 0u32;
                for (v, &ball) in balls.iter().enumerate() {
                    if subset >> v & 1 == 1 {
                        if seen & ball != 0 {
                            return false;
                        }
                        seen |= ball;
                    }
                }
                seen == full
            })
            .count() as u64
    }

    fn first() -> SearchConfig {
        SearchConfig::new(SearchMode::First)
    }

    #[test]
    fn lucas_three_has_zero_code() {
        let g = build_graph(CubeFamily::Lucas, 3).unwrap();
        let out = find_perfect_code(&g, &first());
        let code = out.witness().expect("found");
        assert_eq!(code.words(&g), vec!["000".parse::<BitWord>().unwrap()]);
        assert_eq!(out.exit_code(), 0);
    }

    #[test]
    fn lucas_four_and_five_have_none() {
        for n in [4, 5] {
            let g = build_graph(CubeFamily::Lucas, n).unwrap();
            let out = find_perfect_code(&g, &SearchConfig::new(SearchMode::ProveNone));
            assert_eq!(out.status, SearchStatus::Exhausted, "n = {n}");
            assert_eq!(out.exit_code(), 3);
        }
    }

    #[test]
    fn q3_has_four_codes() {
        let g = build_graph(CubeFamily::Hypercube, 3).unwrap();
        let out = find_perfect_code(
            &g,
            &SearchConfig::new(SearchMode::Enumerate).keep_witnesses(10),
        );
        assert_eq!(out.count(), Some(4));
        assert_eq!(brute_force_count(&g), 4);
        let SearchStatus::Enumerated { witnesses, .. } = &out.status else {
            unreachable!()
        };
        for c in witnesses {
            let ws = c.words(&g);
            assert_eq!(ws.len(), 2);
            assert_eq!(ws[0].hamming_distance(&ws[1]).unwrap(), 3);
        }
    }

    #[test]
    fn constrained_q3_has_none() {
        let g = build_graph(CubeFamily::Hypercube, 3).unwrap();
        let out = search_constrained(
            &g,
            |w| w.has_circular_ones_run(2),
            &SearchConfig::new(SearchMode::ProveNone),
        );
        assert_eq!(out.status, SearchStatus::Exhausted);
    }

    #[test]
    fn budget_is_never_reported_as_exhaustion() {
        let g = build_graph(CubeFamily::Lucas, 10).unwrap();
        let out = find_perfect_code(
            &g,
            &SearchConfig::new(SearchMode::ProveNone).with_budget(Budget::nodes(3)),
        );
        assert_eq!(out.status, SearchStatus::BudgetExceeded);
        assert_eq!(out.exit_code(), 4);
        let out = find_perfect_code(
            &g,
            &SearchConfig::new(SearchMode::Enumerate).with_budget(Budget::nodes(3)),
        );
        assert_eq!(out.status, SearchStatus::BudgetExceeded);
    }

    #[test]
    fn matches_brute_force_on_small_families() {
        for family in [
            CubeFamily::Lucas,
            CubeFamily::Fibonacci,
            CubeFamily::Hypercube,
            CubeFamily::GenLucas(3),
            CubeFamily::GenFibonacci(3),
        ] {
            for n in 0..=6 {
                let g = build_graph(family, n).unwrap();
                if g.len() > 20 {
                    continue;
                }
                let out = find_perfect_code(&g, &SearchConfig::new(SearchMode::Enumerate));
                assert_eq!(out.count(), Some(brute_force_count(&g)), "{family} n = {n}");
            }
        }
    }

    #[test]
    fn parallel_counts_match_sequential() {
        let g = build_graph(CubeFamily::Hypercube, 7).unwrap();
        let seq = find_perfect_code(&g, &SearchConfig::new(SearchMode::Enumerate));
        let par = find_perfect_code(
            &g,
            &SearchConfig::new(SearchMode::Enumerate).with_threads(4),
        );
        assert_eq!(seq.count(), par.count());
        let seeded = find_perfect_code(&g, &SearchConfig::new(SearchMode::Enumerate).with_seed(99));
        assert_eq!(seq.count(), seeded.count());
    }

    #[test]
    fn outcome_record_json() {
        let g = build_graph(CubeFamily::Lucas, 3).unwrap();
        let out = find_perfect_code(&g, &first());
        let mut rec = out.to_record(&g);
        rec.millis = 0;
        let json = serde_json::to_string(&rec).unwrap();
        assert_eq!(
            json,
            format!(
                r#"{{"status":"found","witness":["000"],"nodes":{},"millis":0,"seed":0}}"#,
                out.stats.nodes
            )
        );
    }
}
