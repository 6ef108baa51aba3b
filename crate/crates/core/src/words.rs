//! Fixed-length vectors over E and over F2.
//!
//! An [`EWord`] is stored as two bit planes: bit `i` of `lo` is the
//! a-component of entry `i`, bit `i` of `hi` the b-component, so a = (1, 0),
//! b = (0, 1), c = (1, 1). Addition is XOR of the planes, the reduction map is
//! `lo ^ hi`, and the product `x * y` equals `x` when `tau(y) = 1` and 0
//! otherwise, which turns the inner product into two parities.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ring::RingElement;

/// Longest word the packed representation holds.
pub const MAX_WORD_LEN: usize = 32;

/// Which side a scalar acts from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

#[inline]
fn mask(len: usize) -> u32 {
    if len >= 32 {
        u32::MAX
    } else {
        (1u32 << len) - 1
    }
}

fn check_len(n: usize) -> Result<()> {
    if n > MAX_WORD_LEN {
        return Err(Error::LengthTooLarge {
            n,
            max: MAX_WORD_LEN,
        });
    }
    Ok(())
}

fn same_len(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::LengthMismatch { left, right });
    }
    Ok(())
}

/// A word of length `n` over E. Position 1 is bit 0.
///
/// Words order by length, then lexicographically from position 1 with
/// 0 < a < b < c.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EWord {
    len: u8,
    lo: u32,
    hi: u32,
}

impl Ord for EWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let diff = (self.lo ^ other.lo) | (self.hi ^ other.hi);
        if self.len != other.len || diff == 0 {
            return self.len.cmp(&other.len);
        }
        let i = diff.trailing_zeros();
        let sym = |w: &EWord| ((w.hi >> i) & 1) << 1 | ((w.lo >> i) & 1);
        sym(self).cmp(&sym(other))
    }
}

impl PartialOrd for EWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl EWord {
    pub fn zero(n: usize) -> Result<EWord> {
        check_len(n)?;
        Ok(EWord {
            len: n as u8,
            lo: 0,
            hi: 0,
        })
    }

    pub fn from_elements(entries: &[RingElement]) -> Result<EWord> {
        check_len(entries.len())?;
        let (mut lo, mut hi) = (0u32, 0u32);
        for (i, x) in entries.iter().enumerate() {
            let bits = *x as u32;
            lo |= (bits & 1) << i;
            hi |= (bits >> 1) << i;
        }
        Ok(EWord {
            len: entries.len() as u8,
            lo,
            hi,
        })
    }

    /// Builds a word from its two bit planes; bits beyond `n` are dropped.
    pub fn from_planes(n: usize, lo: u32, hi: u32) -> Result<EWord> {
        check_len(n)?;
        let m = mask(n);
        Ok(EWord {
            len: n as u8,
            lo: lo & m,
            hi: hi & m,
        })
    }

    /// The word with `x` at every position in `support` and 0 elsewhere.
    pub fn lift(x: RingElement, support: BitWord) -> EWord {
        let bits = x as u8;
        let s = support.bits;
        EWord {
            len: support.len,
            lo: if bits & 1 != 0 { s } else { 0 },
            hi: if bits & 2 != 0 { s } else { 0 },
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn planes(&self) -> (u32, u32) {
        (self.lo, self.hi)
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.lo | self.hi == 0
    }

    /// Entry at 0-based position `i`.
    pub fn get(&self, i: usize) -> RingElement {
        assert!(
            i < self.len(),
            "position {i} out of range for length {}",
            self.len
        );
        RingElement::from_bits((((self.lo >> i) & 1) | (((self.hi >> i) & 1) << 1)) as u8)
    }

    pub fn elements(&self) -> impl Iterator<Item = RingElement> + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }

    pub fn to_vec(&self) -> Vec<RingElement> {
        self.elements().collect()
    }

    /// Entrywise sum.
    pub fn add(&self, other: &EWord) -> Result<EWord> {
        same_len(self.len(), other.len())?;
        Ok(self.xor(other))
    }

    /// Entrywise sum without the length check.
    #[inline]
    pub(crate) fn xor(&self, other: &EWord) -> EWord {
        EWord {
            len: self.len,
            lo: self.lo ^ other.lo,
            hi: self.hi ^ other.hi,
        }
    }

    /// `s * u` (left) or `u * s` (right), entrywise.
    pub fn scalar_mul(&self, side: Side, s: RingElement) -> EWord {
        match side {
            // s * u_i = s exactly where tau(u_i) = 1
            Side::Left => EWord::lift(s, self.tau()),
            // u_i * s = u_i when tau(s) = 1, else 0
            Side::Right => {
                if crate::ring::tau(s) == 1 {
                    *self
                } else {
                    EWord {
                        len: self.len,
                        lo: 0,
                        hi: 0,
                    }
                }
            }
        }
    }

    #[inline]
    pub fn weight(&self) -> u32 {
        (self.lo | self.hi).count_ones()
    }

    pub fn distance(&self, other: &EWord) -> Result<u32> {
        same_len(self.len(), other.len())?;
        Ok(self.xor(other).weight())
    }

    /// `<self, other> = sum_i self_i * other_i`.
    pub fn inner_product(&self, other: &EWord) -> Result<RingElement> {
        same_len(self.len(), other.len())?;
        Ok(self.inner_unchecked(other))
    }

    #[inline]
    pub(crate) fn inner_unchecked(&self, other: &EWord) -> RingElement {
        let t = other.lo ^ other.hi;
        let lo = (self.lo & t).count_ones() & 1;
        let hi = (self.hi & t).count_ones() & 1;
        RingElement::from_bits((lo | (hi << 1)) as u8)
    }

    /// Coordinatewise reduction modulo J.
    #[inline]
    pub fn tau(&self) -> BitWord {
        BitWord {
            len: self.len,
            bits: self.lo ^ self.hi,
        }
    }

    /// Counts of (0, a, b, c) entries.
    pub fn symbol_counts(&self) -> [u32; 4] {
        let a = (self.lo & !self.hi).count_ones();
        let b = (!self.lo & self.hi).count_ones();
        let c = (self.lo & self.hi).count_ones();
        [self.len as u32 - a - b - c, a, b, c]
    }
}

impl fmt::Display for EWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in self.elements() {
            write!(f, "{}", x.symbol())?;
        }
        Ok(())
    }
}

impl FromStr for EWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .chars()
            .map(RingElement::from_symbol)
            .collect::<Result<Vec<_>>>()?;
        EWord::from_elements(&entries)
    }
}

impl Serialize for EWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for EWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A binary word of length `n`. Position 1 is bit 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitWord {
    len: u8,
    bits: u32,
}

impl BitWord {
    pub fn zero(n: usize) -> Result<BitWord> {
        check_len(n)?;
        Ok(BitWord {
            len: n as u8,
            bits: 0,
        })
    }

    pub fn from_bits(n: usize, bits: u32) -> Result<BitWord> {
        check_len(n)?;
        Ok(BitWord {
            len: n as u8,
            bits: bits & mask(n),
        })
    }

    pub fn from_slice(bits: &[u8]) -> Result<BitWord> {
        check_len(bits.len())?;
        let packed = bits
            .iter()
            .enumerate()
            .fold(0u32, |acc, (i, &b)| acc | (u32::from(b & 1) << i));
        Ok(BitWord {
            len: bits.len() as u8,
            bits: packed,
        })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn get(&self, i: usize) -> u8 {
        assert!(
            i < self.len(),
            "position {i} out of range for length {}",
            self.len
        );
        ((self.bits >> i) & 1) as u8
    }

    pub fn to_vec(&self) -> Vec<u8> {
        (0..self.len()).map(|i| self.get(i)).collect()
    }

    pub fn xor(&self, other: &BitWord) -> Result<BitWord> {
        same_len(self.len(), other.len())?;
        Ok(BitWord {
            len: self.len,
            bits: self.bits ^ other.bits,
        })
    }

    pub fn dot(&self, other: &BitWord) -> Result<u8> {
        same_len(self.len(), other.len())?;
        Ok(((self.bits & other.bits).count_ones() & 1) as u8)
    }

    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            write!(f, "{}", self.get(i))?;
        }
        Ok(())
    }
}

impl FromStr for BitWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|ch| match ch {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::Parse(format!("'{other}' is not a bit"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        BitWord::from_slice(&bits)
    }
}
