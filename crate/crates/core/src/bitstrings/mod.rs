//! Binary strings, the cube families built from them, and weight-level counts.

mod counting;
mod family;
mod word;

pub use counting::{binomial, count_weight_level, LevelFilter};
pub use family::{enumerate_family, enumerate_family_capped, CubeFamily, DEFAULT_ENUM_CAP};
pub use word::{BitWord, MAX_LEN};

pub(crate) use family::enumerate_unchecked;

pub fn has_ones_run(w: &BitWord, s: u32) -> bool {
    w.has_ones_run(s)
}

pub fn has_circular_ones_run(w: &BitWord, s: u32) -> bool {
    w.has_circular_ones_run(s)
}

pub fn is_fibonacci(w: &BitWord) -> bool {
    w.is_fibonacci()
}

pub fn is_lucas(w: &BitWord) -> bool {
    w.is_lucas()
}

pub fn circulation(w: &BitWord, i: u32) -> crate::Result<BitWord> {
    w.circulation(i)
}

pub fn is_member(family: CubeFamily, w: &BitWord) -> crate::Result<bool> {
    family.is_member(w)
}
