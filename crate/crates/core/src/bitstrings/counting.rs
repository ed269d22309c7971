//! Weight-level cardinalities, closed form where one is known.

use super::family::{enumerate_family_capped, CubeFamily, DEFAULT_ENUM_CAP};
use crate::error::{Error, Result};

/// Which part of a weight level to count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum LevelFilter {
    #[default]
    All,
    /// Only words with `b_1 = 1`.
    LeadingOne,
}

/// Binomial coefficient extended to all integers: zero whenever `a < 0`,
/// `b < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> u64 {
    if a < 0 || b < 0 || b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        acc = acc * (a - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Number of weight-`k` members of `family` at length `n`.
///
/// Hypercube, Fibonacci and Lucas use closed forms; the generalized families
/// are counted by enumeration.
pub fn count_weight_level(family: CubeFamily, n: u32, k: u32, filter: LevelFilter) -> Result<u64> {
    family.validate()?;
    if k > n {
        return Err(Error::InvalidInput(format!(
            "weight {k} out of range 0..={n}"
        )));
    }
    let (n, k) = (i64::from(n), i64::from(k));
    let lead = filter == LevelFilter::LeadingOne;
    let count = match family {
        CubeFamily::Hypercube if lead => binomial(n - 1, k - 1),
        CubeFamily::Hypercube => binomial(n, k),
        // b_1 = 1 forces b_2 = 0, leaving a Fibonacci word of length n-2 and weight k-1.
        CubeFamily::Fibonacci if lead => binomial(n - k, k - 1),
        CubeFamily::Fibonacci => binomial(n - k + 1, k),
        // 10 s 0 with s Fibonacci of length n-3; n = 2 ("10") fits the same formula.
        CubeFamily::Lucas if lead => binomial(n - 1 - k, k - 1),
        CubeFamily::Lucas => binomial(n - k, k) + binomial(n - k - 1, k - 1),
        CubeFamily::GenFibonacci(_) | CubeFamily::GenLucas(_) => {
            let words = enumerate_family_capped(family, n as u32, DEFAULT_ENUM_CAP)?;
            words
                .iter()
                .filter(|w| i64::from(w.weight()) == k && (!lead || (n > 0 && w.bit(1))))
                .count() as u64
        }
    };
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(-1, 0), 0);
        assert_eq!(binomial(-3, 2), 0);
        assert_eq!(binomial(3, -1), 0);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(62, 31), 465_428_353_255_261_088);
    }

    #[test]
    fn lucas_spot_values() {
        assert_eq!(
            count_weight_level(CubeFamily::Lucas, 5, 2, LevelFilter::All).unwrap(),
            5
        );
        for n in 6..=20u32 {
            let n64 = u64::from(n);
            assert_eq!(
                count_weight_level(CubeFamily::Lucas, n, 2, LevelFilter::All).unwrap(),
                n64 * (n64 - 3) / 2
            );
            assert_eq!(
                count_weight_level(CubeFamily::Lucas, n, 3, LevelFilter::All).unwrap(),
                n64 * (n64 - 4) * (n64 - 5) / 6
            );
            assert_eq!(
                count_weight_level(CubeFamily::Lucas, n, 2, LevelFilter::LeadingOne).unwrap(),
                n64 - 3
            );
        }
    }

    #[test]
    fn lucas_length_one_has_no_weight_one_vertex() {
        assert_eq!(
            count_weight_level(CubeFamily::Lucas, 1, 1, LevelFilter::All).unwrap(),
            0
        );
        assert_eq!(
            count_weight_level(CubeFamily::Lucas, 1, 0, LevelFilter::All).unwrap(),
            1
        );
    }

    #[test]
    fn rejects_bad_weight() {
        assert!(count_weight_level(CubeFamily::Lucas, 4, 5, LevelFilter::All).is_err());
        assert!(count_weight_level(CubeFamily::GenLucas(1), 4, 1, LevelFilter::All).is_err());
    }
}
