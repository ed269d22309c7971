use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Longest supported string length. Every word fits in one `u64`.
pub const MAX_LEN: u32 = 62;

/// A binary string `b_1 b_2 ... b_n` packed into an integer, `b_1` being the
/// most significant of the `n` used bits.
///
/// The packed order makes `Ord` on words of equal length coincide with the
/// lexicographic order of their 0/1 renderings. Binary sum in `F^n` is
/// [`BitWord::xor`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitWord {
    len: u8,
    bits: u64,
}

#[inline]
pub(crate) fn mask(len: u32) -> u64 {
    if len == 0 {
        0
    } else {
        u64::MAX >> (64 - len)
    }
}

/// True iff `bits` (read over its low `width` bits) contains `s` consecutive ones.
#[inline]
fn has_run_u128(bits: u128, width: u32, s: u32) -> bool {
    if s == 0 {
        return true;
    }
    if s > width {
        return false;
    }
    let mut x = bits;
    // After k steps bit i is set iff bits i..=i+k are all set.
    for _ in 1..s {
        x &= x >> 1;
        if x == 0 {
            return false;
        }
    }
    x != 0
}

impl BitWord {
    pub fn new(len: u32, bits: u64) -> Result<Self> {
        if len > MAX_LEN {
            return Err(Error::InvalidInput(format!(
                "word length {len} exceeds maximum {MAX_LEN}"
            )));
        }
        if bits & !mask(len) != 0 {
            return Err(Error::InvalidInput(format!(
                "bits {bits:#x} do not fit in {len} positions"
            )));
        }
        Ok(Self {
            len: len as u8,
            bits,
        })
    }

    /// Packs without range checks; callers guarantee `len <= MAX_LEN` and `bits < 2^len`.
    #[inline]
    pub(crate) const fn from_raw(len: u32, bits: u64) -> Self {
        Self {
            len: len as u8,
            bits,
        }
    }

    /// `0^len`. Panics if `len > MAX_LEN`.
    pub fn zeros(len: u32) -> Self {
        assert!(len <= MAX_LEN, "word length {len} exceeds {MAX_LEN}");
        Self::from_raw(len, 0)
    }

    /// `1^len`. Panics if `len > MAX_LEN`.
    pub fn ones(len: u32) -> Self {
        assert!(len <= MAX_LEN, "word length {len} exceeds {MAX_LEN}");
        Self::from_raw(len, mask(len))
    }

    /// The word `0^{len-1} 1`. Panics if `len == 0` or `len > MAX_LEN`.
    pub fn unit_last(len: u32) -> Self {
        assert!((1..=MAX_LEN).contains(&len));
        Self::from_raw(len, 1)
    }

    #[inline]
    pub fn len(&self) -> u32 {
        u32::from(self.len)
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    /// Bit `b_i` for `1 <= i <= n`. Panics on out-of-range positions.
    #[inline]
    pub fn bit(&self, i: u32) -> bool {
        assert!(i >= 1 && i <= self.len(), "position {i} out of range");
        (self.bits >> (self.len() - i)) & 1 == 1
    }

    /// The word with position `i` (1-based) flipped. Panics on out-of-range positions.
    #[inline]
    pub fn flip(&self, i: u32) -> Self {
        assert!(i >= 1 && i <= self.len(), "position {i} out of range");
        Self::from_raw(self.len(), self.bits ^ (1u64 << (self.len() - i)))
    }

    /// All `n` words at Hamming distance one, in position order.
    pub fn flips(&self) -> impl Iterator<Item = BitWord> + '_ {
        let len = self.len();
        (0..len).map(move |b| Self::from_raw(len, self.bits ^ (1u64 << b)))
    }

    fn check_same_len(&self, other: &Self) -> Result<()> {
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(())
    }

    /// Binary sum in `F^n`.
    pub fn xor(&self, other: &Self) -> Result<Self> {
        self.check_same_len(other)?;
        Ok(Self::from_raw(self.len(), self.bits ^ other.bits))
    }

    /// `self || other`.
    pub fn concat(&self, other: &Self) -> Result<Self> {
        let len = self.len() + other.len();
        if len > MAX_LEN {
            return Err(Error::InvalidInput(format!(
                "concatenation length {len} exceeds maximum {MAX_LEN}"
            )));
        }
        Ok(Self::from_raw(len, (self.bits << other.len()) | other.bits))
    }

    /// Number of positions where the two words differ; the graph distance in `Q_n`.
    pub fn hamming_distance(&self, other: &Self) -> Result<u32> {
        self.check_same_len(other)?;
        Ok((self.bits ^ other.bits).count_ones())
    }

    /// Whether `1^s` occurs as a contiguous substring.
    pub fn has_ones_run(&self, s: u32) -> bool {
        has_run_u128(u128::from(self.bits), self.len(), s)
    }

    /// Whether the word has no `11` substring.
    pub fn is_fibonacci(&self) -> bool {
        self.bits & (self.bits >> 1) == 0
    }

    /// A Fibonacci word whose first and last bits are not both one. For `n = 1`
    /// this rejects `"1"` since `b_1 * b_1 = 1`.
    pub fn is_lucas(&self) -> bool {
        if !self.is_fibonacci() {
            return false;
        }
        match self.len() {
            0 => true,
            n => !(self.bit(1) && self.bit(n)),
        }
    }

    /// The `i`-th circulation `b_i ... b_n b_1 ... b_{i-1}`, for `1 <= i <= n`.
    pub fn circulation(&self, i: u32) -> Result<Self> {
        let n = self.len();
        if i < 1 || i > n {
            return Err(Error::InvalidInput(format!(
                "circulation index {i} out of range 1..={n}"
            )));
        }
        let r = i - 1;
        if r == 0 {
            return Ok(*self);
        }
        let bits = ((self.bits << r) | (self.bits >> (n - r))) & mask(n);
        Ok(Self::from_raw(n, bits))
    }

    /// Whether some circulation contains `1^s`. Scans `w || w` truncated to
    /// `2n - 1` bits, which holds every circulation as a window. `s > n` is
    /// always false.
    pub fn has_circular_ones_run(&self, s: u32) -> bool {
        let n = self.len();
        if s > n {
            return false;
        }
        if n == 0 {
            return s == 0;
        }
        let doubled = (u128::from(self.bits) << (n - 1)) | u128::from(self.bits >> 1);
        has_run_u128(doubled, 2 * n - 1, s)
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.len() {
            f.write_str(if self.bit(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitWord({self})")
    }
}

impl FromStr for BitWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.len() > MAX_LEN as usize {
            return Err(Error::Parse(format!(
                "word of length {} exceeds maximum {MAX_LEN}",
                s.len()
            )));
        }
        let mut bits = 0u64;
        for c in s.chars() {
            bits <<= 1;
            match c {
                '0' => {}
                '1' => bits |= 1,
                _ => {
                    return Err(Error::Parse(format!(
                        "invalid character {c:?} in word {s:?}"
                    )))
                }
            }
        }
        Ok(Self::from_raw(s.len() as u32, bits))
    }
}

impl Serialize for BitWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BitWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BitWord {
        s.parse().unwrap()
    }

    #[test]
    fn ones_runs() {
        assert!(w("110").has_ones_run(2));
        assert!(!w("0101").has_ones_run(2));
        assert!(!w("000000").has_ones_run(1));
        assert!(!w("111").has_ones_run(4));
        assert!(w("111").has_ones_run(3));
    }

    #[test]
    fn fibonacci_and_lucas() {
        assert!(w("0101").is_fibonacci());
        assert!(!w("0110").is_fibonacci());
        assert!(w("10010").is_fibonacci());
        assert!(w("1010").is_lucas());
        assert!(!w("1001").is_lucas());
        assert!(w("10100").is_lucas());
        assert!(!w("1").is_lucas());
        assert!(w("0").is_lucas());
        assert!(w("").is_lucas());
    }

    #[test]
    fn circulations() {
        assert_eq!(w("0011").circulation(1).unwrap(), w("0011"));
        assert_eq!(w("1101111").circulation(3).unwrap(), w("0111111"));
        assert_eq!(w("100").circulation(2).unwrap(), w("001"));
        assert!(w("100").circulation(0).is_err());
        assert!(w("100").circulation(4).is_err());
    }

    #[test]
    fn dominator_of_all_ones_carries_long_run() {
        // c = 1^i 0 1^{n-1-i}: circulation i+1 starts at the zero, circulation i+2 ends on it.
        let n = 7;
        let leading_zero: BitWord = format!("0{}", "1".repeat(6)).parse().unwrap();
        let trailing_zero: BitWord = format!("{}0", "1".repeat(6)).parse().unwrap();
        for i in 0..n {
            let c = BitWord::ones(n).flip(i + 1);
            assert_eq!(c.circulation(i + 1).unwrap(), leading_zero);
            assert_eq!(c.circulation((i + 1) % n + 1).unwrap(), trailing_zero);
            assert!(c.has_circular_ones_run(n - 1));
        }
    }

    #[test]
    fn circular_runs() {
        assert!(w("1001").has_circular_ones_run(2));
        assert!(!w("101010").has_circular_ones_run(2));
        assert!(w("1111110").has_circular_ones_run(6));
        assert!(!w("1111110").has_circular_ones_run(7));
        assert!(w("1111111").has_circular_ones_run(7));
        assert!(!w("1111111").has_circular_ones_run(8));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("0120".parse::<BitWord>().is_err());
        assert!("1".repeat(63).parse::<BitWord>().is_err());
        assert!(BitWord::new(3, 8).is_err());
        assert!(BitWord::new(63, 0).is_err());
    }

    #[test]
    fn distance_and_xor() {
        assert_eq!(w("000").hamming_distance(&w("111")).unwrap(), 3);
        assert_eq!(w("10100").hamming_distance(&w("00101")).unwrap(), 2);
        assert!(w("00").hamming_distance(&w("000")).is_err());
        assert_eq!(w("001").xor(&w("111")).unwrap(), w("110"));
    }

    #[test]
    fn serde_uses_strings() {
        let json = serde_json::to_string(&w("0101")).unwrap();
        assert_eq!(json, "\"0101\"");
        let back: BitWord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, w("0101"));
    }
}
