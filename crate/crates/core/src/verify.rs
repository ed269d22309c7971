//! One runnable check per statement about perfect codes in Lucas-type cubes.
//!
//! Each runner returns a [`ClaimReport`]. Universally quantified statements are
//! checked exhaustively up to the configured bounds only, so a pass is labeled
//! "pass (desk-scale)".

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::bitstrings::{count_weight_level, enumerate_family, BitWord, CubeFamily, LevelFilter};
use crate::engine::{
    find_perfect_code, is_perfect_code, search_constrained, Budget, CodeSet, SearchConfig,
    SearchMode, SearchStatus,
};
use crate::error::{Error, Result};
use crate::graph::{build_graph, InducedGraph};
use crate::hamming::{build_hamming, construct_gen_lucas_code, RunBound};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimId {
    PropCount,
    ThmMain,
    Lemma0n,
    ArithLemma,
    ArithThm,
    PropQnAvoid,
    Prop1n,
    Prop1n12,
    FibNonexist,
}

/// The numbered statements a claim can stand for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Statement {
    /// Weight-level cardinality of the Lucas cube.
    LucasLevelCount,
    /// Lucas cubes have perfect codes exactly for `n <= 3`.
    MainTheorem,
    /// For `n >= 6` a perfect code of `Λ_n` must contain `0^n`.
    ZeroLemma,
    /// No perfect code of `Q_n` avoids circular `1^s`, `2 <= s <= n-1`.
    HypercubeAvoidance,
    /// `Λ_n(1^n)` has a perfect code of order `2^n/(n+1)`.
    FullRunCode,
    /// `Λ_n(1^{n-1})` and `Λ_n(1^{n-2})` have perfect codes of order `2^n/(n+1) - 1`.
    ShortRunCode,
    /// Cited: Fibonacci cubes have no perfect code for `n >= 4`.
    FibonacciNonexistence,
}

impl Statement {
    pub const ALL: [Statement; 7] = [
        Statement::LucasLevelCount,
        Statement::MainTheorem,
        Statement::ZeroLemma,
        Statement::HypercubeAvoidance,
        Statement::FullRunCode,
        Statement::ShortRunCode,
        Statement::FibonacciNonexistence,
    ];
}

impl ClaimId {
    pub const ALL: [ClaimId; 9] = [
        ClaimId::PropCount,
        ClaimId::ThmMain,
        ClaimId::Lemma0n,
        ClaimId::ArithLemma,
        ClaimId::ArithThm,
        ClaimId::PropQnAvoid,
        ClaimId::Prop1n,
        ClaimId::Prop1n12,
        ClaimId::FibNonexist,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::PropCount => "prop-count",
            ClaimId::ThmMain => "thm-main",
            ClaimId::Lemma0n => "lemma-0n",
            ClaimId::ArithLemma => "arith-lemma",
            ClaimId::ArithThm => "arith-thm",
            ClaimId::PropQnAvoid => "prop-qn-avoid",
            ClaimId::Prop1n => "prop-1n",
            ClaimId::Prop1n12 => "prop-1n12",
            ClaimId::FibNonexist => "fib-nonexist",
        }
    }

    pub fn statement(self) -> Statement {
        match self {
            ClaimId::PropCount => Statement::LucasLevelCount,
            ClaimId::ThmMain | ClaimId::ArithThm => Statement::MainTheorem,
            ClaimId::Lemma0n | ClaimId::ArithLemma => Statement::ZeroLemma,
            ClaimId::PropQnAvoid => Statement::HypercubeAvoidance,
            ClaimId::Prop1n => Statement::FullRunCode,
            ClaimId::Prop1n12 => Statement::ShortRunCode,
            ClaimId::FibNonexist => Statement::FibonacciNonexistence,
        }
    }

    pub fn summary(self) -> &'static str {
        match self {
            ClaimId::PropCount => "closed-form weight-level counts of Lucas and Fibonacci cubes",
            ClaimId::ThmMain => "Lucas cube has a perfect code iff n <= 3",
            ClaimId::Lemma0n => "degree facts forcing 0^n into any perfect code for n >= 6",
            ClaimId::ArithLemma => "no odd n has 6 | n^2 + 1",
            ClaimId::ArithThm => "n = 6p + 3 makes |E| odd, so 4 cannot divide it",
            ClaimId::PropQnAvoid => "no perfect code of Q_n avoids circular 1^s, 2 <= s <= n-1",
            ClaimId::Prop1n => "translated Hamming code is perfect in lucas1s:n",
            ClaimId::Prop1n12 => "Hamming code minus 1^n is perfect in lucas1s:n-1 and lucas1s:n-2",
            ClaimId::FibNonexist => "Fibonacci cube has no perfect code for n >= 4",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| {
                let ids: Vec<&str> = ClaimId::ALL.iter().map(|c| c.as_str()).collect();
                Error::Parse(format!(
                    "unknown claim {s:?}; valid ids: {}",
                    ids.join(", ")
                ))
            })
    }
}

impl Serialize for ClaimId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// A search ran out of budget or a size cap was hit.
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClaimReport {
    pub claim: ClaimId,
    pub verdict: Verdict,
    pub params: BTreeMap<String, Value>,
    pub evidence: BTreeMap<String, Value>,
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    pub millis: u64,
}

impl ClaimReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Verdict label as printed in tables.
    pub fn verdict_label(&self) -> String {
        match self.verdict {
            Verdict::Pass => "pass (desk-scale)".to_string(),
            Verdict::Fail => "FAIL".to_string(),
            Verdict::Skipped => "skipped (budget)".to_string(),
        }
    }
}

/// Accumulates sub-checks for one claim.
struct Recorder {
    claim: ClaimId,
    started: Instant,
    params: BTreeMap<String, Value>,
    evidence: BTreeMap<String, Value>,
    failures: Vec<String>,
    skipped: Option<String>,
    checks: u64,
}

impl Recorder {
    fn new(claim: ClaimId) -> Self {
        Self {
            claim,
            started: Instant::now(),
            params: BTreeMap::new(),
            evidence: BTreeMap::new(),
            failures: Vec::new(),
            skipped: None,
            checks: 0,
        }
    }

    fn param(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    fn evidence(&mut self, key: &str, value: impl Into<Value>) {
        self.evidence.insert(key.to_string(), value.into());
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn skip(&mut self, reason: String) {
        if self.skipped.is_none() {
            self.skipped = Some(reason);
        }
    }

    fn finish(mut self) -> ClaimReport {
        self.evidence.insert("checks".into(), json!(self.checks));
        let verdict = if !self.failures.is_empty() {
            Verdict::Fail
        } else if self.skipped.is_some() {
            Verdict::Skipped
        } else {
            Verdict::Pass
        };
        ClaimReport {
            claim: self.claim,
            verdict,
            params: self.params,
            evidence: self.evidence,
            failures: self.failures,
            skipped: self.skipped,
            millis: self.started.elapsed().as_millis() as u64,
        }
    }
}

/// Search settings shared by the claims that run the exact-cover engine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSettings {
    pub budget: Budget,
    pub threads: usize,
}

impl Default for SearchSettings {
    fn default() -> Self {
        Self {
            budget: Budget::unlimited(),
            threads: 1,
        }
    }
}

impl SearchSettings {
    fn config(&self, mode: SearchMode) -> SearchConfig {
        SearchConfig::new(mode)
            .with_budget(self.budget)
            .with_threads(self.threads)
    }
}

fn words_json(words: &[BitWord]) -> Value {
    json!(words.iter().map(ToString::to_string).collect::<Vec<_>>())
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidInput(msg()))
    }
}

// ---------------------------------------------------------------------------
// prop-count

pub const COUNTING_MAX_N: u32 = 20;

/// Closed-form weight-level counts against enumeration for `Λ_{n,k}`,
/// `Γ_{n,k}` and the leading-one part `Λ^1_{n,k}`, all `n <= n_max`.
pub fn verify_counting(n_max: u32) -> Result<ClaimReport> {
    require(n_max <= COUNTING_MAX_N, || {
        format!("n_max {n_max} exceeds {COUNTING_MAX_N}")
    })?;
    let mut rec = Recorder::new(ClaimId::PropCount);
    rec.param("n_max", n_max).param("k", "0..=n");

    let cases = [
        (CubeFamily::Lucas, LevelFilter::All, "lucas"),
        (CubeFamily::Fibonacci, LevelFilter::All, "fib"),
        (
            CubeFamily::Lucas,
            LevelFilter::LeadingOne,
            "lucas-leading-one",
        ),
    ];
    let mut compared = 0u64;
    for n in 0..=n_max {
        let lucas = enumerate_family(CubeFamily::Lucas, n)?;
        let fib = enumerate_family(CubeFamily::Fibonacci, n)?;
        for k in 0..=n {
            for (family, filter, label) in cases {
                let words = if family == CubeFamily::Lucas {
                    &lucas
                } else {
                    &fib
                };
                let enumerated = words
                    .iter()
                    .filter(|w| {
                        w.weight() == k && (filter == LevelFilter::All || (n > 0 && w.bit(1)))
                    })
                    .count() as u64;
                let closed = count_weight_level(family, n, k, filter)?;
                rec.check(closed == enumerated, || {
                    format!("{label} n={n} k={k}: closed form {closed} != enumeration {enumerated}")
                });
                compared += 1;
            }
        }
        rec.check(
            count_weight_level(CubeFamily::Lucas, n, 0, LevelFilter::All)? == 1,
            || format!("|Λ_{{{n},0}}| != 1"),
        );
        if n >= 3 {
            // Luc_n = {0s : s in Fib_{n-1}} ∪ {10s0 : s in Fib_{n-3}}
            let zero = BitWord::zeros(1);
            let ten: BitWord = "10".parse().expect("literal");
            let mut split: Vec<BitWord> = enumerate_family(CubeFamily::Fibonacci, n - 1)?
                .iter()
                .map(|s| zero.concat(s))
                .chain(
                    enumerate_family(CubeFamily::Fibonacci, n - 3)?
                        .iter()
                        .map(|s| ten.concat(s).and_then(|x| x.concat(&zero))),
                )
                .collect::<Result<_>>()?;
            let before = split.len();
            split.sort_unstable();
            split.dedup();
            rec.check(before == split.len() && split == lucas, || {
                format!("Lucas decomposition fails at n={n}")
            });
        }
    }
    for n in 6..=COUNTING_MAX_N {
        let m = u64::from(n);
        let l2 = count_weight_level(CubeFamily::Lucas, n, 2, LevelFilter::All)?;
        let l3 = count_weight_level(CubeFamily::Lucas, n, 3, LevelFilter::All)?;
        let l2_lead = count_weight_level(CubeFamily::Lucas, n, 2, LevelFilter::LeadingOne)?;
        rec.check(l2 == m * (m - 3) / 2, || {
            format!("|Λ_{{{n},2}}| = {l2} != n(n-3)/2")
        });
        rec.check(l3 == m * (m - 4) * (m - 5) / 6, || {
            format!("|Λ_{{{n},3}}| = {l3} != n(n-4)(n-5)/6")
        });
        rec.check(l2_lead == m - 3, || {
            format!("|Λ^1_{{{n},2}}| = {l2_lead} != n-3")
        });
    }
    rec.evidence("level_comparisons", compared);
    rec.evidence("spot_n_range", "6..=20");
    rec.evidence(
        "lucas_5_2",
        count_weight_level(CubeFamily::Lucas, 5, 2, LevelFilter::All)?,
    );
    Ok(rec.finish())
}

// ---------------------------------------------------------------------------
// thm-main and fib-nonexist

pub const THEOREM_DEFAULT_N_MAX: u32 = 16;
pub const FIBONACCI_MAX_N: u32 = 16;

/// Shared runner: a perfect code found for `n <= 3` (and `{0^n}` certified for
/// Lucas cubes), exhaustion for `4..=n_max`.
fn verify_nonexistence(
    claim: ClaimId,
    family: CubeFamily,
    n_max: u32,
    settings: &SearchSettings,
) -> Result<ClaimReport> {
    let mut rec = Recorder::new(claim);
    rec.param("family", family.to_string())
        .param("found_range", format!("0..={}", n_max.min(3)))
        .param("exhausted_range", format!("4..={n_max}"));
    let mut per_n = Vec::new();
    for n in 0..=n_max {
        let graph = build_graph(family, n)?;
        let mode = if n <= 3 {
            SearchMode::First
        } else {
            SearchMode::ProveNone
        };
        let outcome = find_perfect_code(&graph, &settings.config(mode));
        let mut entry = json!({
            "n": n,
            "vertices": graph.len(),
            "status": outcome.status_name(),
            "nodes": outcome.stats.nodes,
        });
        if n <= 3 && family == CubeFamily::Lucas {
            let zero = CodeSet::from_words(&graph, [&BitWord::zeros(n)])?;
            rec.check(is_perfect_code(&graph, &zero)?, || {
                format!("{{0^{n}}} is not a perfect code of {family} n={n}")
            });
        }
        if n <= 3 {
            match &outcome.status {
                SearchStatus::Found(code) => {
                    rec.check(is_perfect_code(&graph, code)?, || {
                        format!("witness at n={n} does not validate")
                    });
                    entry["witness"] = words_json(&code.words(&graph));
                }
                SearchStatus::BudgetExceeded => rec.skip(format!("budget exceeded at n={n}")),
                other => rec.check(false, || {
                    format!("n={n}: expected a perfect code, got {other:?}")
                }),
            }
        } else {
            match &outcome.status {
                SearchStatus::Exhausted => {}
                SearchStatus::BudgetExceeded => rec.skip(format!("budget exceeded at n={n}")),
                SearchStatus::Found(code) => {
                    let ws = code.words(&graph);
                    rec.check(false, || format!("n={n}: perfect code found: {ws:?}"));
                }
                SearchStatus::Enumerated { .. } => unreachable!("first-mode search"),
            }
        }
        per_n.push(entry);
    }
    rec.evidence("per_n", per_n);
    Ok(rec.finish())
}

pub fn verify_theorem_main(n_max: u32, settings: &SearchSettings) -> Result<ClaimReport> {
    verify_nonexistence(ClaimId::ThmMain, CubeFamily::Lucas, n_max, settings)
}

pub fn verify_fibonacci_nonexistence(n_max: u32, settings: &SearchSettings) -> Result<ClaimReport> {
    require(n_max <= FIBONACCI_MAX_N, || {
        format!("n_max {n_max} exceeds {FIBONACCI_MAX_N}")
    })?;
    verify_nonexistence(ClaimId::FibNonexist, CubeFamily::Fibonacci, n_max, settings)
}

// ---------------------------------------------------------------------------
// lemma-0n

pub const LEMMA_MIN_N: u32 = 6;
pub const LEMMA_MAX_N: u32 = 14;

fn neighbor_counts<F>(graph: &InducedGraph, from: F, to: F) -> Vec<u32>
where
    F: Fn(&BitWord) -> bool,
{
    (0..graph.len() as u32)
        .filter(|&v| from(&graph.vertex(v)))
        .map(|v| graph.neighbors(v).filter(|&u| to(&graph.vertex(u))).count() as u32)
        .collect()
}

fn all_equal(values: &[u32], expect: u32) -> bool {
    !values.is_empty() && values.iter().all(|&v| v == expect)
}

/// The structural facts behind the zero-word lemma, per `n`:
/// (a) `Λ_{n,2}` vertices have 2 neighbors in `Λ_{n,1}`;
/// (b) `10^{n-1}` has `n-3` neighbors in `Λ_{n,2}`;
/// (c) `Λ_{n,3}` vertices have 3 neighbors in `Λ_{n,2}`;
/// (d) `Λ_{n,4}` vertices have 4 neighbors in `Λ_{n,3}`;
/// (e) `Λ^1_{n,3}` vertices have 2 neighbors in `Λ^1_{n,2}`;
/// (f) for odd `n`, `|D| = |Λ_{n,2}| - (n-3) - (n-1)/2 = (n^2 - 6n + 7)/2`
///     and 3 does not divide it;
/// (g) rotation by one position is an automorphism of `Λ_n`.
pub fn verify_lemma_structure(n_set: &[u32]) -> Result<ClaimReport> {
    for &n in n_set {
        require((LEMMA_MIN_N..=LEMMA_MAX_N).contains(&n), || {
            format!("lemma check needs {LEMMA_MIN_N} <= n <= {LEMMA_MAX_N}, got {n}")
        })?;
    }
    let mut rec = Recorder::new(ClaimId::Lemma0n);
    rec.param("n_set", n_set.to_vec());
    let mut per_n = Vec::new();
    for &n in n_set {
        let g = build_graph(CubeFamily::Lucas, n)?;
        let lead = |k: u32| move |w: &BitWord| w.weight() == k && w.bit(1);

        let a = g.level_degree_profile(2, 1)?;
        rec.check(all_equal(&a, 2), || format!("(a) n={n}: {a:?}"));

        let e1 = BitWord::zeros(n).flip(1);
        let id = g.require_id(&e1)?;
        let b = g
            .neighbors(id)
            .filter(|&u| g.vertex(u).weight() == 2)
            .count() as u32;
        rec.check(b == n - 3, || {
            format!("(b) n={n}: 10^(n-1) has {b} weight-2 neighbors")
        });

        let c = g.level_degree_profile(3, 2)?;
        rec.check(all_equal(&c, 3), || format!("(c) n={n}: {c:?}"));

        let d = g.level_degree_profile(4, 3)?;
        // Λ_{n,4} is empty below n = 8.
        rec.check(
            d.iter().all(|&x| x == 4) && (n < 8 || !d.is_empty()),
            || format!("(d) n={n}: {d:?}"),
        );

        let e = neighbor_counts(&g, lead(3), lead(2));
        rec.check(all_equal(&e, 2), || format!("(e) n={n}: {e:?}"));

        let level2 = g.vertices().iter().filter(|w| w.weight() == 2).count() as i64;
        let mut entry = json!({
            "n": n,
            "level2": level2,
            "ten_weight2_neighbors": b,
            "level3_vertices": c.len(),
            "level4_vertices": d.len(),
            "leading_one_level3_vertices": e.len(),
        });
        if n % 2 == 1 {
            let ni = i64::from(n);
            let d_size = level2 - (ni - 3) - (ni - 1) / 2;
            let formula = (ni * ni - 6 * ni + 7) / 2;
            rec.check(d_size == formula, || {
                format!("(f) n={n}: |D| = {d_size}, formula {formula}")
            });
            rec.check(d_size % 3 != 0, || {
                format!("(f) n={n}: 3 divides |D| = {d_size}")
            });
            entry["d_size"] = json!(d_size);
        }

        // Rotation is a distance-preserving bijection of Q_n, so mapping V into V suffices.
        let rotation_ok = g
            .vertices()
            .iter()
            .all(|w| g.id_of(&w.circulation(2).expect("n >= 6")).is_some());
        rec.check(rotation_ok, || {
            format!("(g) n={n}: rotation is not an automorphism")
        });
        per_n.push(entry);
    }
    rec.evidence("per_n", per_n);
    Ok(rec.finish())
}

// ---------------------------------------------------------------------------
// arith-lemma and arith-thm

pub const ARITH_MAX_N: u64 = 1_000_000;

/// No odd `n <= n_max` has `6 | n^2 + 1`.
pub fn verify_lemma_arithmetic(n_max: u64) -> Result<ClaimReport> {
    require(n_max <= ARITH_MAX_N, || {
        format!("n_max {n_max} exceeds {ARITH_MAX_N}")
    })?;
    let mut rec = Recorder::new(ClaimId::ArithLemma);
    rec.param("n_max", n_max).param("n", "odd");
    let bad: Vec<u64> = (1..=n_max)
        .step_by(2)
        .filter(|&n| (u128::from(n) * u128::from(n) + 1) % 6 == 0)
        .take(5)
        .collect();
    rec.check(bad.is_empty(), || {
        format!("6 | n^2 + 1 for odd n in {bad:?}")
    });
    rec.evidence("odd_values_checked", n_max.div_ceil(2));
    Ok(rec.finish())
}

/// Arithmetic closing the theorem:
/// `3 | n(n-3)/2` with `n - 3` even holds exactly for `n ≡ 3 (mod 6)`, and for
/// those `n` the count `|E| = n(n^2 - 10n + 23)/6 = (2p+1)(18p^2 - 12p + 1)` is
/// an odd integer. Also `6|Λ_{n,3}| - 2|Λ_{n,2}| = n(n^2 - 10n + 23)` against
/// the closed-form counts for `6 <= n <= 20`.
pub fn verify_theorem_arithmetic(n_max: u64) -> Result<ClaimReport> {
    require(n_max <= ARITH_MAX_N, || {
        format!("n_max {n_max} exceeds {ARITH_MAX_N}")
    })?;
    let mut rec = Recorder::new(ClaimId::ArithThm);
    rec.param("n_max", n_max)
        .param("count_identity_n", "6..=20");

    let mut residue_fail = Vec::new();
    for n in 6..=n_max {
        let third = (n * (n - 3) / 2) % 3 == 0;
        let even = (n - 3) % 2 == 0;
        let mult3 = (n * (n - 3)) % 3 == 0;
        if (third && even) != (n % 6 == 3) || mult3 != (n % 3 == 0) {
            residue_fail.push(n);
        }
    }
    rec.check(residue_fail.is_empty(), || {
        format!(
            "residue analysis fails at {:?}",
            &residue_fail[..residue_fail.len().min(5)]
        )
    });

    let mut odd_fail = Vec::new();
    let mut cases = 0u64;
    let mut p = 0u64;
    loop {
        let n = 6 * p + 3;
        if n > n_max {
            break;
        }
        let (n128, p128) = (i128::from(n), i128::from(p));
        let numer = n128 * (n128 * n128 - 10 * n128 + 23);
        let factored = (2 * p128 + 1) * (18 * p128 * p128 - 12 * p128 + 1);
        let ok = numer % 6 == 0 && numer / 6 == factored && factored.rem_euclid(2) == 1;
        if !ok {
            odd_fail.push(n);
        }
        cases += 1;
        p += 1;
    }
    rec.check(odd_fail.is_empty(), || {
        format!(
            "|E| not an odd integer at {:?}",
            &odd_fail[..odd_fail.len().min(5)]
        )
    });

    for n in 6..=COUNTING_MAX_N {
        let l2 = count_weight_level(CubeFamily::Lucas, n, 2, LevelFilter::All)? as i64;
        let l3 = count_weight_level(CubeFamily::Lucas, n, 3, LevelFilter::All)? as i64;
        let ni = i64::from(n);
        rec.check(6 * l3 - 2 * l2 == ni * (ni * ni - 10 * ni + 23), || {
            format!("|E| identity fails at n={n}")
        });
    }
    rec.evidence("residues_checked", n_max.saturating_sub(5));
    rec.evidence("six_p_plus_three_cases", cases);
    rec.evidence("e_at_9", 9 * (81 - 90 + 23) / 6);
    Ok(rec.finish())
}

/// Both arithmetic claims.
pub fn verify_proof_arithmetic(n_max: u64) -> Result<Vec<ClaimReport>> {
    Ok(vec![
        verify_lemma_arithmetic(n_max)?,
        verify_theorem_arithmetic(n_max)?,
    ])
}

// ---------------------------------------------------------------------------
// prop-qn-avoid

/// For each `2 <= s <= n-1`, no perfect code of `Q_n` has all codewords free
/// of circular `1^s`. Also checks, over every perfect code of `Q_n`, that the
/// codeword covering `1^n` is `1^n` or rotates to `1^{n-1}0`.
pub fn verify_qn_avoidance(n: u32, settings: &SearchSettings) -> Result<ClaimReport> {
    require(n == 3 || n == 7, || {
        format!("avoidance check supports n = 3 or 7, got {n}")
    })?;
    let mut rec = Recorder::new(ClaimId::PropQnAvoid);
    rec.param("n", n).param("s", format!("2..={}", n - 1));
    let q = build_graph(CubeFamily::Hypercube, n)?;

    let mut per_s = Vec::new();
    for s in 2..n {
        let out = search_constrained(
            &q,
            |w| w.has_circular_ones_run(s),
            &settings.config(SearchMode::ProveNone),
        );
        match &out.status {
            SearchStatus::Exhausted => {}
            SearchStatus::BudgetExceeded => rec.skip(format!("budget exceeded at s={s}")),
            other => rec.check(false, || {
                format!("s={s}: expected exhaustion, got {other:?}")
            }),
        }
        per_s.push(json!({"s": s, "status": out.status_name(), "nodes": out.stats.nodes}));
    }
    rec.evidence("per_s", per_s);

    let config = settings
        .config(SearchMode::Enumerate)
        .keep_witnesses(usize::MAX);
    let all = find_perfect_code(&q, &config);
    let all_ones = BitWord::ones(n);
    let long_run: BitWord = BitWord::ones(n).flip(n);
    match &all.status {
        SearchStatus::Enumerated { count, witnesses } => {
            rec.evidence("perfect_codes", *count);
            for code in witnesses {
                let dominator = code
                    .words(&q)
                    .into_iter()
                    .find(|c| c.hamming_distance(&all_ones).expect("same n") <= 1);
                let ok = dominator.is_some_and(|c| {
                    c == all_ones
                        || (c.weight() == n - 1
                            && (1..=n).any(|i| c.circulation(i).expect("in range") == long_run))
                });
                rec.check(ok, || format!("dominator of 1^{n} is {dominator:?}"));
            }
        }
        SearchStatus::BudgetExceeded => rec.skip("budget exceeded enumerating Q_n".into()),
        other => rec.check(false, || format!("unexpected enumeration status {other:?}")),
    }
    Ok(rec.finish())
}

// ---------------------------------------------------------------------------
// prop-1n and prop-1n12

pub const CONSTRUCTION_P: [u32; 3] = [2, 3, 4];

fn check_construction(rec: &mut Recorder, p: u32, bound: RunBound) -> Result<Value> {
    let built = match construct_gen_lucas_code(p, bound) {
        Ok(b) => b,
        Err(Error::ResourceLimit { what, cap }) => {
            rec.skip(format!("p={p} {}: {what} over cap {cap}", bound.label()));
            return Ok(json!({"p": p, "s": bound.label(), "skipped": true}));
        }
        Err(e) => return Err(e),
    };
    let (g, code) = (&built.graph, &built.code);
    let n = g.n();
    let s = bound.run_length(n);
    let full_order = (1u64 << n) / u64::from(n + 1);
    let expect = match bound {
        RunBound::Full => full_order,
        RunBound::MinusOne | RunBound::MinusTwo => full_order - 1,
    };
    let perfect = is_perfect_code(g, code)?;
    rec.check(perfect, || format!("p={p} s={s}: not a perfect code"));
    rec.check(code.len() as u64 == expect, || {
        format!("p={p} s={s}: order {} != {expect}", code.len())
    });

    let all_ones = BitWord::ones(n);
    let hamming = build_hamming(p)?;
    match bound {
        RunBound::Full => {
            // Q_n minus 1^n, and the code is perfect in Q_n without 1^n.
            rec.check(
                g.len() as u64 == (1u64 << n) - 1 && g.id_of(&all_ones).is_none(),
                || format!("p={p}: lucas1s:{n} is not Q_n minus 1^n"),
            );
            let words = code.words(g);
            rec.check(!words.contains(&all_ones), || {
                format!("p={p}: 1^n in translated code")
            });
        }
        RunBound::MinusOne => {
            // Q_n minus N[1^n].
            let expected: Vec<BitWord> = (0..1u64 << n)
                .map(|b| BitWord::new(n, b).expect("fits"))
                .filter(|w| w.hamming_distance(&all_ones).expect("same n") >= 2)
                .collect();
            rec.check(g.vertices() == expected.as_slice(), || {
                format!("p={p}: lucas1s:{s} is not Q_n minus N[1^n]")
            });
        }
        RunBound::MinusTwo => {
            let heavy = hamming
                .codewords()?
                .iter()
                .filter(|w| w.weight() == n - 1 || w.weight() == n - 2)
                .count();
            rec.check(heavy == 0, || {
                format!("p={p}: {heavy} codewords of weight n-1 or n-2")
            });
            let decodes_inside = g.vertices().iter().all(|u| {
                hamming
                    .decode(u)
                    .is_ok_and(|d| d == *u || g.id_of(&d).is_some())
            });
            rec.check(decodes_inside, || {
                format!("p={p}: a vertex decodes outside lucas1s:{s}")
            });
        }
    }
    Ok(json!({
        "p": p,
        "n": n,
        "s": s,
        "vertices": g.len(),
        "order": code.len(),
        "perfect": perfect,
    }))
}

fn verify_construction_claim(
    claim: ClaimId,
    p_set: &[u32],
    bounds: &[RunBound],
) -> Result<ClaimReport> {
    for &p in p_set {
        require(CONSTRUCTION_P.contains(&p), || {
            format!("construction check supports p in {CONSTRUCTION_P:?}, got {p}")
        })?;
    }
    let mut rec = Recorder::new(claim);
    rec.param("p_set", p_set.to_vec())
        .param("s", bounds.iter().map(|b| b.label()).collect::<Vec<_>>());
    let mut cases = Vec::new();
    for &p in p_set {
        for &bound in bounds {
            cases.push(check_construction(&mut rec, p, bound)?);
        }
    }
    rec.evidence("cases", cases);
    Ok(rec.finish())
}

/// `Λ_n(1^n)`: the Hamming code translated by `0^{n-1}1`.
pub fn verify_full_run_construction(p_set: &[u32]) -> Result<ClaimReport> {
    verify_construction_claim(ClaimId::Prop1n, p_set, &[RunBound::Full])
}

/// `Λ_n(1^{n-1})` and `Λ_n(1^{n-2})`: the Hamming code minus `1^n`.
pub fn verify_short_run_constructions(p_set: &[u32]) -> Result<ClaimReport> {
    verify_construction_claim(
        ClaimId::Prop1n12,
        p_set,
        &[RunBound::MinusOne, RunBound::MinusTwo],
    )
}

/// Both construction claims.
pub fn verify_constructions(p_set: &[u32]) -> Result<Vec<ClaimReport>> {
    Ok(vec![
        verify_full_run_construction(p_set)?,
        verify_short_run_constructions(p_set)?,
    ])
}

// ---------------------------------------------------------------------------
// dispatch

/// Parameters for [`run_claim`]; `None` picks each claim's default.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClaimParams {
    /// Upper bound on `n` for claims that sweep `n`.
    pub n_max: Option<u32>,
    /// Hamming parameters for the construction claims.
    pub p: Option<Vec<u32>>,
    /// Lengths for the avoidance claim (3 and/or 7).
    pub n: Option<Vec<u32>>,
    pub search: SearchSettings,
}

pub fn run_claim(claim: ClaimId, params: &ClaimParams) -> Result<ClaimReport> {
    let s = &params.search;
    match claim {
        ClaimId::PropCount => verify_counting(params.n_max.unwrap_or(14)),
        ClaimId::ThmMain => verify_theorem_main(params.n_max.unwrap_or(THEOREM_DEFAULT_N_MAX), s),
        ClaimId::Lemma0n => {
            let hi = params.n_max.unwrap_or(LEMMA_MAX_N);
            let set: Vec<u32> = (LEMMA_MIN_N..=hi).collect();
            verify_lemma_structure(&set)
        }
        ClaimId::ArithLemma => verify_lemma_arithmetic(params.n_max.map_or(ARITH_MAX_N, u64::from)),
        ClaimId::ArithThm => verify_theorem_arithmetic(params.n_max.map_or(ARITH_MAX_N, u64::from)),
        ClaimId::PropQnAvoid => {
            let ns = params.n.clone().unwrap_or_else(|| vec![3, 7]);
            let reports = ns
                .iter()
                .map(|&n| verify_qn_avoidance(n, s))
                .collect::<Result<Vec<_>>>()?;
            Ok(merge(ClaimId::PropQnAvoid, reports))
        }
        ClaimId::Prop1n => {
            verify_full_run_construction(params.p.as_deref().unwrap_or(&CONSTRUCTION_P))
        }
        ClaimId::Prop1n12 => {
            verify_short_run_constructions(params.p.as_deref().unwrap_or(&CONSTRUCTION_P))
        }
        ClaimId::FibNonexist => {
            verify_fibonacci_nonexistence(params.n_max.unwrap_or(FIBONACCI_MAX_N), s)
        }
    }
}

/// Folds several reports of one claim into one, keyed by position.
fn merge(claim: ClaimId, reports: Vec<ClaimReport>) -> ClaimReport {
    if reports.len() == 1 {
        return reports.into_iter().next().unwrap();
    }
    let mut rec = Recorder::new(claim);
    let mut runs = Vec::new();
    for r in reports {
        rec.failures.extend(r.failures);
        if let Some(s) = r.skipped {
            rec.skip(s);
        }
        rec.checks += r
            .evidence
            .get("checks")
            .and_then(Value::as_u64)
            .unwrap_or(0);
        runs.push(json!({"params": r.params, "evidence": r.evidence}));
    }
    rec.evidence("runs", runs);
    rec.finish()
}

/// Runs the selected claims in parallel; reports come back in input order.
pub fn run_claims(claims: &[ClaimId], params: &ClaimParams) -> Result<Vec<ClaimReport>> {
    claims.par_iter().map(|&c| run_claim(c, params)).collect()
}

/// Fixed-width summary table, one row per report.
pub fn render_table(reports: &[ClaimReport]) -> String {
    let mut out = format!(
        "{:<14} {:<18} {:>9}  {}\n",
        "claim", "verdict", "millis", "statement"
    );
    for r in reports {
        out.push_str(&format!(
            "{:<14} {:<18} {:>9}  {}\n",
            r.claim.as_str(),
            r.verdict_label(),
            r.millis,
            r.claim.summary()
        ));
        for f in &r.failures {
            out.push_str(&format!("{:<14}   - {f}\n", ""));
        }
        if let Some(s) = &r.skipped {
            out.push_str(&format!("{:<14}   - skipped: {s}\n", ""));
        }
    }
    out
}
