//! Oracles that share no code with the exact-cover engine.

#![allow(dead_code)]

use perfcode::graph::InducedGraph;

/// Counts perfect codes by testing every subset of vertices. `|V| <= 24`.
pub fn brute_force_perfect_codes(graph: &InducedGraph) -> u64 {
    let n = graph.len();
    assert!(n <= 24, "brute force needs |V| <= 24, got {n}");
    let balls: Vec<u32> = (0..n as u32)
        .map(|v| {
            let w = graph.vertex(v);
            let mut m = 1u32 << v;
            // neighbors recomputed from the words, not from the graph's lists
            for (u, x) in graph.vertices().iter().enumerate() {
                if (w.bits() ^ x.bits()).count_ones() == 1 {
                    m |= 1 << u;
                }
            }
            m
        })
        .collect();
    let full: u32 = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    let mut count = 0;
    'subsets: for subset in 0..=full {
        let mut seen = 0u32;
        let mut rest = subset;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if seen & balls[v] != 0 {
                continue 'subsets;
            }
            seen |= balls[v];
        }
        if seen == full {
            count += 1;
        }
    }
    count
}

/// All perfect codes of `Q_n` for `n <= 7`, as sorted lists of packed words.
///
/// Plain recursion over 128-bit coverage masks: always extend the cover at the
/// lowest uncovered word, trying each word of its closed ball as a codeword.
pub fn hypercube_perfect_codes(n: u32) -> Vec<Vec<u64>> {
    assert!(n <= 7);
    let size = 1u32 << n;
    let ball = |c: u32| -> u128 {
        let mut m = 1u128 << c;
        for b in 0..n {
            m |= 1u128 << (c ^ (1 << b));
        }
        m
    };
    let full: u128 = if size == 128 {
        u128::MAX
    } else {
        (1u128 << size) - 1
    };
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn rec(
        covered: u128,
        full: u128,
        n: u32,
        ball: &dyn Fn(u32) -> u128,
        chosen: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) {
        if covered == full {
            let mut code = chosen.clone();
            code.sort_unstable();
            out.push(code);
            return;
        }
        let u = (!covered).trailing_zeros();
        let mut candidates = vec![u];
        candidates.extend((0..n).map(|b| u ^ (1 << b)));
        for c in candidates {
            let m = ball(c);
            if m & covered == 0 {
                chosen.push(u64::from(c));
                rec(covered | m, full, n, ball, chosen, out);
                chosen.pop();
            }
        }
    }
    rec(0, full, n, &ball, &mut chosen, &mut out);
    out.sort();
    out
}
