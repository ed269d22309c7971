mod common;

use perfcode::bitstrings::{BitWord, CubeFamily};
use perfcode::engine::{
    find_perfect_code, is_code, is_dominating, is_perfect_code, search_constrained, CodeSet,
    SearchConfig, SearchMode, SearchStatus,
};
use perfcode::graph::{build_graph, InducedGraph};

fn enumerate_all(g: &InducedGraph) -> (u64, Vec<CodeSet>) {
    let out = find_perfect_code(
        g,
        &SearchConfig::new(SearchMode::Enumerate).keep_witnesses(usize::MAX),
    );
    match out.status {
        SearchStatus::Enumerated { count, witnesses } => (count, witnesses),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn enumeration_agrees_with_subset_brute_force() {
    let families = [
        CubeFamily::Hypercube,
        CubeFamily::Fibonacci,
        CubeFamily::Lucas,
        CubeFamily::GenFibonacci(3),
        CubeFamily::GenLucas(3),
        CubeFamily::GenLucas(4),
    ];
    for family in families {
        for n in 0..=8 {
            let g = build_graph(family, n).unwrap();
            if g.len() > 20 {
                continue;
            }
            let (count, witnesses) = enumerate_all(&g);
            assert_eq!(
                count,
                common::brute_force_perfect_codes(&g),
                "{family} n={n}"
            );
            assert_eq!(witnesses.len() as u64, count);
            for c in &witnesses {
                assert!(is_perfect_code(&g, c).unwrap());
            }
        }
    }
}

#[test]
fn perfect_code_sizes_partition_the_hypercube() {
    for n in [3u32, 7] {
        let g = build_graph(CubeFamily::Hypercube, n).unwrap();
        let (count, witnesses) = enumerate_all(&g);
        assert!(count > 0);
        for c in &witnesses {
            let covered: usize = c.members().ids().map(|v| g.degree(v) + 1).sum();
            assert_eq!(covered, g.len());
            assert_eq!(c.len() as u64 * u64::from(n + 1), 1u64 << n);
        }
    }
}

#[test]
fn perfect_is_code_and_dominating() {
    let g = build_graph(CubeFamily::GenLucas(3), 6).unwrap();
    // every 1- and 2-subset plus the enumerated witnesses
    let mut sets: Vec<CodeSet> = Vec::new();
    for a in g.vertices() {
        sets.push(CodeSet::from_words(&g, [a]).unwrap());
        for b in g.vertices() {
            sets.push(CodeSet::from_words(&g, [a, b]).unwrap());
        }
    }
    sets.extend(enumerate_all(&g).1);
    for c in sets {
        assert_eq!(
            is_perfect_code(&g, &c).unwrap(),
            is_code(&g, &c).unwrap() && is_dominating(&g, &c).unwrap()
        );
    }
}

#[test]
fn verdicts_do_not_depend_on_search_order() {
    for (family, n) in [
        (CubeFamily::Lucas, 9),
        (CubeFamily::Lucas, 12),
        (CubeFamily::Fibonacci, 10),
        (CubeFamily::GenLucas(3), 7),
        (CubeFamily::Hypercube, 7),
    ] {
        let g = build_graph(family, n).unwrap();
        let base = find_perfect_code(&g, &SearchConfig::new(SearchMode::Enumerate));
        let first = find_perfect_code(&g, &SearchConfig::new(SearchMode::ProveNone));
        for seed in [1, 7, 12345] {
            let e = find_perfect_code(
                &g,
                &SearchConfig::new(SearchMode::Enumerate).with_seed(seed),
            );
            assert_eq!(e.count(), base.count(), "{family} n={n} seed={seed}");
            let f = find_perfect_code(
                &g,
                &SearchConfig::new(SearchMode::ProveNone).with_seed(seed),
            );
            assert_eq!(f.is_exhausted(), first.is_exhausted());
            if let Some(c) = f.witness() {
                assert!(is_perfect_code(&g, c).unwrap());
            }
        }
        for threads in [2, 4] {
            let p = find_perfect_code(
                &g,
                &SearchConfig::new(SearchMode::Enumerate).with_threads(threads),
            );
            assert_eq!(p.count(), base.count());
        }
    }
}

#[test]
fn seeded_first_search_is_reproducible() {
    let g = build_graph(CubeFamily::Hypercube, 7).unwrap();
    let cfg = SearchConfig::new(SearchMode::First).with_seed(42);
    let a = find_perfect_code(&g, &cfg);
    let b = find_perfect_code(&g, &cfg);
    assert_eq!(a.status, b.status);
    assert_eq!(a.stats.nodes, b.stats.nodes);
}

#[test]
fn rotating_a_perfect_code_gives_a_perfect_code() {
    let rotate = |g: &InducedGraph, c: &CodeSet| {
        let words: Vec<BitWord> = c
            .words(g)
            .iter()
            .map(|w| w.circulation(2).unwrap())
            .collect();
        CodeSet::from_words(g, &words).unwrap()
    };
    let mut checked = 0;
    for n in 3..=8 {
        for s in 2..=n {
            let g = build_graph(CubeFamily::GenLucas(s), n).unwrap();
            let (_, witnesses) = enumerate_all(&g);
            for c in witnesses.iter().take(50) {
                assert!(
                    is_perfect_code(&g, &rotate(&g, c)).unwrap(),
                    "lucas1s:{s} n={n}"
                );
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn constrained_search_respects_forbidden_words() {
    let g = build_graph(CubeFamily::Hypercube, 7).unwrap();
    let out = search_constrained(
        &g,
        |w| w.has_circular_ones_run(7),
        &SearchConfig::new(SearchMode::First),
    );
    let code = out.witness().expect("a translated Hamming code qualifies");
    assert!(!code.words(&g).contains(&BitWord::ones(7)));
    assert!(is_perfect_code(&g, code).unwrap());

    let all = find_perfect_code(&g, &SearchConfig::new(SearchMode::Enumerate))
        .count()
        .unwrap();
    let without = search_constrained(
        &g,
        |w| *w == BitWord::ones(7),
        &SearchConfig::new(SearchMode::Enumerate),
    )
    .count()
    .unwrap();
    // 1^7 lies in exactly one of the 8 cosets of each of the 30 linear codes
    assert_eq!(all - without, all / 8);
}
