//! Left and right duals, niceness and self-orthogonality.
//!
//! With `<u, v> = sum u_i v_i`, the right dual is `{v : <u, v> = 0 for all u
//! in C}` and the left dual `{v : <v, u> = 0 for all u in C}`. Because the
//! inner product is biadditive it is enough to test a Z2-generating set of
//! C. Candidates are visited fiber by fiber over their reduction `tau(v)`:
//! the right-dual condition only depends on that pattern, so a whole fiber is
//! accepted or rejected for the right side at once.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genmat::Code;
use crate::words::EWord;

/// Largest length for which the 4^n candidate scan is allowed.
pub const MAX_DUAL_LEN: usize = 12;

fn guard(n: usize) -> Result<()> {
    if n > MAX_DUAL_LEN {
        return Err(Error::LengthTooLarge {
            n,
            max: MAX_DUAL_LEN,
        });
    }
    Ok(())
}

#[inline]
fn parity(x: u32) -> bool {
    x.count_ones() & 1 == 1
}

/// Visits every v in E^n with flags (in left dual, in right dual).
fn scan_duals(code: &Code, mut visit: impl FnMut(EWord, bool, bool)) -> Result<()> {
    let n = code.n();
    guard(n)?;
    let gens: Vec<(u32, u32, u32)> = code
        .generators()
        .iter()
        .map(|g| {
            let (lo, hi) = g.planes();
            (lo, hi, lo ^ hi)
        })
        .collect();
    let full = 1u32 << n;
    for pattern in 0..full {
        let right = gens
            .iter()
            .all(|&(lo, hi, _)| !parity(lo & pattern) && !parity(hi & pattern));
        for lift in 0..full {
            // tau(v) = pattern; lift picks b over a on the pattern and c over 0 off it
            let (lo, hi) = (pattern ^ lift, lift);
            let left = gens
                .iter()
                .all(|&(_, _, t)| !parity(lo & t) && !parity(hi & t));
            if left || right {
                visit(EWord::from_planes(n, lo, hi)?, left, right);
            }
        }
    }
    Ok(())
}

/// |C^⊥L|, |C^⊥R| and |C^⊥L ∩ C^⊥R| without materialising the sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualSizes {
    pub left: u64,
    pub right: u64,
    pub intersection: u64,
}

pub fn dual_sizes(code: &Code) -> Result<DualSizes> {
    let mut sizes = DualSizes {
        left: 0,
        right: 0,
        intersection: 0,
    };
    scan_duals(code, |_, left, right| {
        sizes.left += u64::from(left);
        sizes.right += u64::from(right);
        sizes.intersection += u64::from(left && right);
    })?;
    Ok(sizes)
}

/// Both duals of a code and their intersection.
#[derive(Debug, Clone)]
pub struct DualPair {
    pub left: Code,
    pub right: Code,
    pub intersection: Code,
}

pub fn duals(code: &Code) -> Result<DualPair> {
    let (mut left, mut right, mut both) = (Vec::new(), Vec::new(), Vec::new());
    scan_duals(code, |v, l, r| {
        if l {
            left.push(v);
        }
        if r {
            right.push(v);
        }
        if l && r {
            both.push(v);
        }
    })?;
    let n = code.n();
    Ok(DualPair {
        left: Code::from_words(n, &left)?,
        right: Code::from_words(n, &right)?,
        intersection: Code::from_words(n, &both)?,
    })
}

pub fn left_dual(code: &Code) -> Result<Code> {
    Ok(duals(code)?.left)
}

pub fn right_dual(code: &Code) -> Result<Code> {
    Ok(duals(code)?.right)
}

/// Which dual(s) the niceness condition |C| |C^⊥| = 4^n refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NicePolicy {
    Left,
    Right,
    Both,
    Intersection,
}

impl NicePolicy {
    pub const ALL: [NicePolicy; 4] = [
        NicePolicy::Left,
        NicePolicy::Right,
        NicePolicy::Both,
        NicePolicy::Intersection,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NicePolicy::Left => "left",
            NicePolicy::Right => "right",
            NicePolicy::Both => "both",
            NicePolicy::Intersection => "intersection",
        }
    }
}

impl fmt::Display for NicePolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NicePolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NicePolicy::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown nice policy \"{s}\"")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NiceReport {
    pub left_nice: bool,
    pub right_nice: bool,
    pub both_nice: bool,
    pub intersection_nice: bool,
    /// |C|, |C^⊥L|, |C^⊥R|, |C^⊥L ∩ C^⊥R|.
    pub sizes: [u64; 4],
}

impl NiceReport {
    pub fn from_sizes(n: usize, code_size: u64, duals: DualSizes) -> NiceReport {
        let target = 1u128 << (2 * n);
        let nice = |d: u64| u128::from(code_size) * u128::from(d) == target;
        let (left_nice, right_nice) = (nice(duals.left), nice(duals.right));
        NiceReport {
            left_nice,
            right_nice,
            both_nice: left_nice && right_nice,
            intersection_nice: nice(duals.intersection),
            sizes: [code_size, duals.left, duals.right, duals.intersection],
        }
    }

    pub fn is_nice(&self, policy: NicePolicy) -> bool {
        match policy {
            NicePolicy::Left => self.left_nice,
            NicePolicy::Right => self.right_nice,
            NicePolicy::Both => self.both_nice,
            NicePolicy::Intersection => self.intersection_nice,
        }
    }
}

pub fn nice_report(code: &Code) -> Result<NiceReport> {
    Ok(NiceReport::from_sizes(
        code.n(),
        code.len() as u64,
        dual_sizes(code)?,
    ))
}

/// Whether `<u, v> = 0` for every ordered pair of codewords.
pub fn is_self_orthogonal(code: &Code) -> bool {
    let gens = code.generators();
    gens.iter()
        .all(|u| gens.iter().all(|v| u.inner_unchecked(v).is_zero()))
}

/// Self-orthogonal with exactly 2^n codewords.
pub fn is_qsd(code: &Code) -> bool {
    code.n() < 64 && code.len() as u64 == 1u64 << code.n() && is_self_orthogonal(code)
}

/// QSD with every codeword of even weight.
pub fn is_type_iv(code: &Code) -> bool {
    is_qsd(code) && code.words().iter().all(|w| w.weight() % 2 == 0)
}

/// C = C^⊥L = C^⊥R.
pub fn is_self_dual(code: &Code) -> Result<bool> {
    let d = duals(code)?;
    Ok(code.same_words(&d.left) && code.same_words(&d.right))
}
