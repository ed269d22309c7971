//! Exact cover over closed neighborhoods.
//!
//! Items are the vertices of the graph and the option for vertex `v` is the
//! block `N[v]`. A block stays alive while every vertex in it is uncovered and
//! the block's center is an allowed codeword. The search always branches on the
//! uncovered vertex with the fewest live blocks, ties going to the lowest rank.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use crate::graph::InducedGraph;

pub(crate) struct Problem {
    balls: Vec<Vec<u32>>,
    allowed: Vec<bool>,
    rank: Vec<u32>,
}

impl Problem {
    pub fn new(graph: &InducedGraph, allowed: Vec<bool>, rank: Vec<u32>) -> Self {
        let balls = (0..graph.len() as u32)
            .map(|v| {
                let mut ball: Vec<u32> = std::iter::once(v).chain(graph.neighbors(v)).collect();
                ball.sort_unstable();
                ball
            })
            .collect();
        Self {
            balls,
            allowed,
            rank,
        }
    }

    fn len(&self) -> usize {
        self.balls.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Goal {
    First,
    Count { keep: usize },
}

pub(crate) struct Limits {
    pub max_nodes: Option<u64>,
    pub deadline: Option<Instant>,
}

struct Control<'a> {
    limits: &'a Limits,
    nodes: AtomicU64,
    stop: AtomicBool,
    budget_hit: AtomicBool,
}

impl Control<'_> {
    /// Counts one node; false once the search must unwind.
    fn tick(&self) -> bool {
        if self.stop.load(Ordering::Relaxed) {
            return false;
        }
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        let over_nodes = self.limits.max_nodes.is_some_and(|m| n > m);
        let over_time =
            n.is_multiple_of(1024) && self.limits.deadline.is_some_and(|d| Instant::now() >= d);
        if over_nodes || over_time {
            self.budget_hit.store(true, Ordering::Relaxed);
            self.stop.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }
}

#[derive(Default)]
struct Sink {
    count: u64,
    witnesses: Vec<Vec<u32>>,
}

#[derive(Clone)]
struct State<'p> {
    p: &'p Problem,
    alive: Vec<bool>,
    options: Vec<u32>,
    // Sparse set: uncovered[..live] are the uncovered vertices.
    uncovered: Vec<u32>,
    pos: Vec<u32>,
    live: usize,
    killed: Vec<u32>,
    chosen: Vec<u32>,
}

enum Pick {
    Solved,
    DeadEnd,
    Branch(u32),
}

impl<'p> State<'p> {
    fn new(p: &'p Problem) -> Self {
        let n = p.len();
        let alive = p.allowed.clone();
        let options = p
            .balls
            .iter()
            .map(|ball| ball.iter().filter(|&&w| alive[w as usize]).count() as u32)
            .collect();
        Self {
            p,
            alive,
            options,
            uncovered: (0..n as u32).collect(),
            pos: (0..n as u32).collect(),
            live: n,
            killed: Vec::new(),
            chosen: Vec::new(),
        }
    }

    fn remove_uncovered(&mut self, u: u32) {
        let i = self.pos[u as usize] as usize;
        let last = self.live - 1;
        let moved = self.uncovered[last];
        self.uncovered.swap(i, last);
        self.pos[moved as usize] = i as u32;
        self.pos[u as usize] = last as u32;
        self.live = last;
    }

    /// Takes block `N[v]` into the cover; returns the trail mark for [`Self::undo`].
    fn select(&mut self, v: u32) -> usize {
        let p = self.p;
        let mark = self.killed.len();
        for &u in &p.balls[v as usize] {
            self.remove_uncovered(u);
        }
        for &u in &p.balls[v as usize] {
            for &w in &p.balls[u as usize] {
                if self.alive[w as usize] {
                    self.alive[w as usize] = false;
                    self.killed.push(w);
                    for &x in &p.balls[w as usize] {
                        self.options[x as usize] -= 1;
                    }
                }
            }
        }
        self.chosen.push(v);
        mark
    }

    fn undo(&mut self, v: u32, mark: usize) {
        let p = self.p;
        while self.killed.len() > mark {
            let w = self.killed.pop().unwrap();
            self.alive[w as usize] = true;
            for &x in &p.balls[w as usize] {
                self.options[x as usize] += 1;
            }
        }
        // Swap-removal is undone by regrowing the live prefix.
        self.live += p.balls[v as usize].len();
        self.chosen.pop();
    }

    fn pick(&self) -> Pick {
        if self.live == 0 {
            return Pick::Solved;
        }
        let best = self.uncovered[..self.live]
            .iter()
            .copied()
            .min_by_key(|&u| (self.options[u as usize], self.p.rank[u as usize]))
            .unwrap();
        if self.options[best as usize] == 0 {
            Pick::DeadEnd
        } else {
            Pick::Branch(best)
        }
    }

    fn branches(&self, u: u32) -> Vec<u32> {
        let mut blocks: Vec<u32> = self.p.balls[u as usize]
            .iter()
            .copied()
            .filter(|&w| self.alive[w as usize])
            .collect();
        blocks.sort_unstable_by_key(|&w| self.p.rank[w as usize]);
        blocks
    }

    fn record(&self, goal: Goal, ctl: &Control, sink: &mut Sink) -> bool {
        sink.count += 1;
        match goal {
            Goal::First => {
                sink.witnesses.push(self.chosen.clone());
                ctl.stop.store(true, Ordering::Relaxed);
                false
            }
            Goal::Count { keep } => {
                if sink.witnesses.len() < keep {
                    sink.witnesses.push(self.chosen.clone());
                }
                true
            }
        }
    }

    /// Returns false when the search must unwind.
    fn dfs(&mut self, goal: Goal, ctl: &Control, sink: &mut Sink) -> bool {
        if !ctl.tick() {
            return false;
        }
        let u = match self.pick() {
            Pick::Solved => return self.record(goal, ctl, sink),
            Pick::DeadEnd => return true,
            Pick::Branch(u) => u,
        };
        for w in self.branches(u) {
            let mark = self.select(w);
            let go_on = self.dfs(goal, ctl, sink);
            self.undo(w, mark);
            if !go_on {
                return false;
            }
        }
        true
    }
}

pub(crate) struct Solved {
    pub count: u64,
    /// Chosen block centers per solution, in discovery order.
    pub witnesses: Vec<Vec<u32>>,
    pub nodes: u64,
    pub budget_hit: bool,
}

pub(crate) fn solve(problem: &Problem, goal: Goal, limits: &Limits, threads: usize) -> Solved {
    let ctl = Control {
        limits,
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        budget_hit: AtomicBool::new(false),
    };
    let mut root = State::new(problem);
    let sink = if threads <= 1 {
        let mut sink = Sink::default();
        root.dfs(goal, &ctl, &mut sink);
        sink
    } else {
        solve_parallel(&mut root, goal, &ctl, threads)
    };
    let budget_hit = ctl.budget_hit.load(Ordering::Relaxed);
    Solved {
        count: sink.count,
        witnesses: sink.witnesses,
        nodes: ctl.nodes.load(Ordering::Relaxed),
        budget_hit,
    }
}

/// Fans the root's branches out to a worker pool. Counts and witness order
/// match the sequential search; under `Goal::First` the witness may come from
/// any branch that finishes first.
fn solve_parallel(root: &mut State, goal: Goal, ctl: &Control, threads: usize) -> Sink {
    let mut sink = Sink::default();
    if !ctl.tick() {
        return sink;
    }
    let u = match root.pick() {
        Pick::Solved => {
            root.record(goal, ctl, &mut sink);
            return sink;
        }
        Pick::DeadEnd => return sink,
        Pick::Branch(u) => u,
    };
    let branches = root.branches(u);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool");
    let results: Vec<Sink> = pool.install(|| {
        branches
            .par_iter()
            .map(|&w| {
                let mut state = root.clone();
                state.select(w);
                let mut local = Sink::default();
                state.dfs(goal, ctl, &mut local);
                local
            })
            .collect()
    });
    for r in results {
        sink.count += r.count;
        sink.witnesses.extend(r.witnesses);
    }
    match goal {
        Goal::First => sink.witnesses.truncate(1),
        Goal::Count { keep } => sink.witnesses.truncate(keep),
    }
    sink
}
