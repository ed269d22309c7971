//! Binary Hamming codes of length `2^p - 1` and the perfect codes they give
//! in generalized Lucas cubes.
//!
//! Column `j` of the parity-check matrix is the binary expansion of `j`, so the
//! syndrome of a word, read as an integer, is the position of the single error.

use serde::{Deserialize, Serialize};

use crate::bitstrings::{BitWord, CubeFamily};
use crate::engine::CodeSet;
use crate::error::{Error, Result};
use crate::graph::{GraphLimits, InducedGraph};

pub const MIN_P: u32 = 2;
pub const MAX_P: u32 = 5;
/// Largest `p` whose codewords are materialized.
pub const MAX_MATERIALIZED_P: u32 = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HammingCode {
    p: u32,
    n: u32,
    codewords: Option<Vec<BitWord>>,
}

pub fn build_hamming(p: u32) -> Result<HammingCode> {
    HammingCode::new(p)
}

impl HammingCode {
    pub fn new(p: u32) -> Result<Self> {
        if !(MIN_P..=MAX_P).contains(&p) {
            return Err(Error::InvalidInput(format!(
                "Hamming parameter p = {p} out of range {MIN_P}..={MAX_P}"
            )));
        }
        let n = (1u32 << p) - 1;
        let mut code = Self {
            p,
            n,
            codewords: None,
        };
        // Every position index has each of its p bits set in exactly 2^{p-1}
        // columns, so the all-ones word has zero syndrome.
        assert_eq!(
            code.syndrome(&BitWord::ones(n)),
            0,
            "1^n must be a codeword"
        );
        if p <= MAX_MATERIALIZED_P {
            let words: Vec<BitWord> = (0..1u64 << n)
                .map(|b| BitWord::new(n, b).expect("fits"))
                .filter(|w| code.syndrome(w) == 0)
                .collect();
            assert_eq!(words.len() as u64, (1u64 << n) / u64::from(n + 1));
            code.codewords = Some(words);
        }
        Ok(code)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Code length `2^p - 1`.
    pub fn len(&self) -> u32 {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `2^{n-p}`, the number of codewords.
    pub fn size(&self) -> u64 {
        1u64 << (self.n - self.p)
    }

    /// Row `r` (0-based) of `H`: position `j` is set iff bit `r` of `j` is set.
    pub fn parity_check_rows(&self) -> Vec<BitWord> {
        (0..self.p)
            .map(|r| {
                let bits = (1..=self.n)
                    .filter(|j| (j >> r) & 1 == 1)
                    .fold(0u64, |acc, j| acc | (1u64 << (self.n - j)));
                BitWord::new(self.n, bits).expect("fits")
            })
            .collect()
    }

    /// `H u` read as an integer: XOR of the indices of the set positions.
    pub fn syndrome(&self, u: &BitWord) -> u32 {
        debug_assert_eq!(u.len(), self.n);
        let mut bits = u.bits();
        let mut s = 0u32;
        while bits != 0 {
            let low = bits.trailing_zeros();
            // bit `low` of the packed word is position n - low
            s ^= self.n - low;
            bits &= bits - 1;
        }
        s
    }

    fn check_len(&self, u: &BitWord) -> Result<()> {
        if u.len() != self.n {
            return Err(Error::LengthMismatch {
                left: u.len(),
                right: self.n,
            });
        }
        Ok(())
    }

    pub fn contains(&self, u: &BitWord) -> Result<bool> {
        self.check_len(u)?;
        Ok(self.syndrome(u) == 0)
    }

    /// The unique codeword within distance one of `u`.
    pub fn decode(&self, u: &BitWord) -> Result<BitWord> {
        self.check_len(u)?;
        Ok(match self.syndrome(u) {
            0 => *u,
            j => u.flip(j),
        })
    }

    /// Sorted codewords; unavailable above [`MAX_MATERIALIZED_P`].
    pub fn codewords(&self) -> Result<&[BitWord]> {
        self.codewords
            .as_deref()
            .ok_or_else(|| Error::ResourceLimit {
                what: format!("codeword list for p = {}", self.p),
                cap: 1 << ((1u32 << MAX_MATERIALIZED_P) - 1 - MAX_MATERIALIZED_P),
            })
    }

    /// The coset `{d + t}`, sorted.
    pub fn translate(&self, t: &BitWord) -> Result<Vec<BitWord>> {
        self.check_len(t)?;
        let mut out: Vec<BitWord> = self
            .codewords()?
            .iter()
            .map(|d| d.xor(t).expect("same length"))
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Minimum distance over all codeword pairs, by exhaustive comparison.
    pub fn minimum_distance(&self) -> Result<u32> {
        let words = self.codewords()?;
        let mut best = u32::MAX;
        for (i, a) in words.iter().enumerate() {
            for b in &words[i + 1..] {
                best = best.min((a.bits() ^ b.bits()).count_ones());
            }
        }
        Ok(best)
    }
}

/// Which generalized Lucas cube a construction targets, relative to `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RunBound {
    /// `Λ_n(1^n)`.
    Full,
    /// `Λ_n(1^{n-1})`.
    MinusOne,
    /// `Λ_n(1^{n-2})`.
    MinusTwo,
}

impl RunBound {
    pub const ALL: [RunBound; 3] = [RunBound::Full, RunBound::MinusOne, RunBound::MinusTwo];

    pub fn run_length(self, n: u32) -> u32 {
        match self {
            RunBound::Full => n,
            RunBound::MinusOne => n - 1,
            RunBound::MinusTwo => n - 2,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            RunBound::Full => "n",
            RunBound::MinusOne => "n-1",
            RunBound::MinusTwo => "n-2",
        }
    }
}

/// A perfect code of a generalized Lucas cube together with its graph.
#[derive(Clone, Debug)]
pub struct GenLucasCode {
    pub graph: InducedGraph,
    pub code: CodeSet,
}

/// Builds the perfect code of `Λ_n(1^s)`, `n = 2^p - 1`, for `s` in `{n, n-1, n-2}`.
///
/// For `s = n` the code is the Hamming code translated by `0^{n-1}1`, which
/// moves `1^n` out of the code. For `s = n-1` and `s = n-2` it is the Hamming
/// code with `1^n` removed. At `p = 2` the bound `n - 2` is 1 and the graph is
/// the single vertex `0^n`.
pub fn construct_gen_lucas_code(p: u32, bound: RunBound) -> Result<GenLucasCode> {
    construct_gen_lucas_code_with_limits(p, bound, GraphLimits::default())
}

pub fn construct_gen_lucas_code_with_limits(
    p: u32,
    bound: RunBound,
    limits: GraphLimits,
) -> Result<GenLucasCode> {
    let hamming = build_hamming(p)?;
    let n = hamming.len();
    let family = CubeFamily::GenLucas(bound.run_length(n));
    let graph = InducedGraph::build_unchecked(family, n, limits)?;
    let words = match bound {
        RunBound::Full => hamming.translate(&BitWord::unit_last(n))?,
        RunBound::MinusOne | RunBound::MinusTwo => {
            let all_ones = BitWord::ones(n);
            hamming
                .codewords()?
                .iter()
                .copied()
                .filter(|w| *w != all_ones)
                .collect()
        }
    };
    let code = CodeSet::from_words(&graph, &words)?;
    Ok(GenLucasCode { graph, code })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::is_perfect_code;

    fn w(s: &str) -> BitWord {
        s.parse().unwrap()
    }

    #[test]
    fn length_three() {
        let h = build_hamming(2).unwrap();
        assert_eq!(h.codewords().unwrap(), &[w("000"), w("111")]);
        assert_eq!(h.decode(&w("110")).unwrap(), w("111"));
        assert_eq!(h.translate(&w("001")).unwrap(), vec![w("001"), w("110")]);
        assert_eq!(h.parity_check_rows(), vec![w("101"), w("011")]);
    }

    #[test]
    fn length_seven() {
        let h = build_hamming(3).unwrap();
        let words = h.codewords().unwrap();
        assert_eq!(words.len(), 16);
        assert!(words.contains(&BitWord::ones(7)));
        assert_eq!(h.minimum_distance().unwrap(), 3);
        assert_eq!(h.decode(&BitWord::ones(7)).unwrap(), BitWord::ones(7));
        assert_eq!(h.translate(&BitWord::zeros(7)).unwrap(), words.to_vec());
        for b in 0..128 {
            let u = BitWord::new(7, b).unwrap();
            let d = h.decode(&u).unwrap();
            assert!(h.contains(&d).unwrap());
            assert!(u.hamming_distance(&d).unwrap() <= 1);
        }
    }

    #[test]
    fn syndrome_matches_parity_rows() {
        for p in 2..=4 {
            let h = build_hamming(p).unwrap();
            let rows = h.parity_check_rows();
            for b in (0..1u64 << h.len()).step_by(37) {
                let u = BitWord::new(h.len(), b).unwrap();
                let by_rows = rows.iter().enumerate().fold(0u32, |s, (r, row)| {
                    s | (((row.bits() & b).count_ones() & 1) << r)
                });
                assert_eq!(by_rows, h.syndrome(&u));
            }
        }
    }

    #[test]
    fn length_thirty_one_is_predicate_only() {
        let h = build_hamming(5).unwrap();
        assert!(h.codewords().is_err());
        assert!(h.contains(&BitWord::ones(31)).unwrap());
        let u = BitWord::ones(31).flip(9);
        assert_eq!(h.decode(&u).unwrap(), BitWord::ones(31));
    }

    #[test]
    fn parameter_range() {
        assert!(build_hamming(1).is_err());
        assert!(build_hamming(6).is_err());
        let h = build_hamming(2).unwrap();
        assert!(h.decode(&w("0000")).is_err());
        assert!(h.translate(&w("00")).is_err());
    }

    #[test]
    fn constructions_small() {
        let c = construct_gen_lucas_code(2, RunBound::Full).unwrap();
        assert_eq!(c.code.words(&c.graph), vec![w("001"), w("110")]);
        assert!(is_perfect_code(&c.graph, &c.code).unwrap());

        let c = construct_gen_lucas_code(2, RunBound::MinusTwo).unwrap();
        assert_eq!(c.graph.vertices(), &[w("000")]);
        assert!(is_perfect_code(&c.graph, &c.code).unwrap());

        let c = construct_gen_lucas_code(3, RunBound::Full).unwrap();
        assert_eq!(c.code.len(), 16);
        assert!(is_perfect_code(&c.graph, &c.code).unwrap());
        let c = construct_gen_lucas_code(3, RunBound::MinusOne).unwrap();
        assert_eq!(c.code.len(), 15);
        assert!(is_perfect_code(&c.graph, &c.code).unwrap());
    }
}
