//! Candidate generator matrices and the codes they span.
//!
//! A code of type {k0, k1} and length n is generated by
//!
//! ```text
//!   a I_k0 | a T | a U
//!   b I_k0 | b T | b U
//!   0      | c I_k1 | c V
//! ```
//!
//! with binary T (k0 x k1), U (k0 x r) and V (k1 x r), r = n - k0 - k1. The
//! code is the Z2-span of those 2 k0 + k1 rows. Every (T, U, V) triple gets a
//! `candidate_index`: T is the most significant digit, then U, then V, each
//! matrix counted as a big-endian binary number over its row-major bits.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ring::RingElement;
use crate::words::{BitWord, EWord, MAX_WORD_LEN};

/// Binary matrix with each row packed into a `u32` (column j = bit j).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> BitMatrix {
        assert!(cols <= 32, "at most 32 columns supported");
        let data = if cols == 0 { Vec::new() } else { vec![0; rows] };
        BitMatrix {
            rows: if cols == 0 { 0 } else { rows },
            cols: if rows == 0 { 0 } else { cols },
            data,
        }
    }

    /// Matrix whose row-major bit string is the `bit_len`-digit binary
    /// expansion of `index`, most significant digit first.
    pub fn from_index(rows: usize, cols: usize, index: u64) -> BitMatrix {
        let mut m = BitMatrix::zeros(rows, cols);
        let len = m.bit_len();
        assert!(
            len < 64,
            "{rows}x{cols} matrix does not fit a 64-bit counter"
        );
        for p in 0..len {
            if (index >> (len - 1 - p)) & 1 == 1 {
                m.data[p / cols] |= 1 << (p % cols);
            }
        }
        m
    }

    /// Parses a row-major bit string such as `"1001"`.
    pub fn from_bit_string(rows: usize, cols: usize, s: &str) -> Result<BitMatrix> {
        let mut m = BitMatrix::zeros(rows, cols);
        if s.len() != m.bit_len() {
            return Err(Error::Parse(format!(
                "expected {} bits for a {rows}x{cols} matrix, got \"{s}\"",
                m.bit_len()
            )));
        }
        for (p, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => m.data[p / cols] |= 1 << (p % cols),
                other => return Err(Error::Parse(format!("'{other}' is not a bit"))),
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn bit_len(&self) -> usize {
        self.rows * self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.bit_len() == 0
    }

    pub fn get(&self, row: usize, col: usize) -> u8 {
        assert!(row < self.rows && col < self.cols);
        ((self.data[row] >> col) & 1) as u8
    }

    /// Row `i` packed with column j at bit j.
    pub fn row_bits(&self, i: usize) -> u32 {
        self.data[i]
    }

    /// Inverse of [`BitMatrix::from_index`].
    pub fn index(&self) -> u64 {
        let mut idx = 0u64;
        for r in 0..self.rows {
            for c in 0..self.cols {
                idx = (idx << 1) | u64::from(self.get(r, c));
            }
        }
        idx
    }

    pub fn bit_string(&self) -> String {
        let mut s = String::with_capacity(self.bit_len());
        for r in 0..self.rows {
            for c in 0..self.cols {
                s.push(if self.get(r, c) == 1 { '1' } else { '0' });
            }
        }
        s
    }
}

/// Every `rows x cols` binary matrix, in binary-counter order.
pub fn enumerate_bit_matrices(rows: usize, cols: usize) -> Result<impl Iterator<Item = BitMatrix>> {
    let len = rows * cols;
    if len >= 64 || cols > 32 {
        return Err(Error::Parse(format!(
            "{rows}x{cols} matrices are too many to enumerate"
        )));
    }
    Ok((0..1u64 << len).map(move |i| BitMatrix::from_index(rows, cols, i)))
}

/// The structural parameters (n, k0, k1) of a code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CodeType {
    n: usize,
    k0: usize,
    k1: usize,
}

impl CodeType {
    pub fn new(n: usize, k0: usize, k1: usize) -> Result<CodeType> {
        if n > MAX_WORD_LEN {
            return Err(Error::LengthTooLarge {
                n,
                max: MAX_WORD_LEN,
            });
        }
        if k0 + k1 >= n {
            return Err(Error::InvalidType { n, k0, k1 });
        }
        Ok(CodeType { n, k0, k1 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k0(&self) -> usize {
        self.k0
    }

    pub fn k1(&self) -> usize {
        self.k1
    }

    /// Columns outside the two identity blocks.
    pub fn redundancy(&self) -> usize {
        self.n - self.k0 - self.k1
    }

    /// Dimension as k0 + k1 / 2.
    pub fn dimension(&self) -> f64 {
        self.k0 as f64 + self.k1 as f64 / 2.0
    }

    /// Number of generator rows, 2 k0 + k1.
    pub fn generator_rows(&self) -> usize {
        2 * self.k0 + self.k1
    }

    /// |C| = 4^k0 2^k1.
    pub fn code_size(&self) -> u64 {
        1u64 << self.generator_rows()
    }

    fn exponents(&self) -> (usize, usize, usize) {
        let r = self.redundancy();
        (self.k0 * self.k1, self.k0 * r, self.k1 * r)
    }

    /// 2^(k0 k1 + k0 r + k1 r).
    pub fn code_count(&self) -> Result<u64> {
        let (t, u, v) = self.exponents();
        let e = t + u + v;
        if e >= 64 {
            return Err(Error::CountOverflow {
                n: self.n,
                k0: self.k0,
                k1: self.k1,
            });
        }
        Ok(1u64 << e)
    }

    pub fn spec_at(&self, index: u64) -> Result<GeneratorSpec> {
        let count = self.code_count()?;
        if index >= count {
            return Err(Error::IndexOutOfRange { index, count });
        }
        let (_, eu, ev) = self.exponents();
        let r = self.redundancy();
        let v_idx = index & ((1u64 << ev) - 1);
        let u_idx = (index >> ev) & ((1u64 << eu) - 1);
        let t_idx = index >> (eu + ev);
        Ok(GeneratorSpec {
            ty: *self,
            t: BitMatrix::from_index(self.k0, self.k1, t_idx),
            u: BitMatrix::from_index(self.k0, r, u_idx),
            v: BitMatrix::from_index(self.k1, r, v_idx),
            candidate_index: index,
        })
    }

    /// The specs with candidate indices in `range`, in order.
    pub fn specs_in(&self, range: Range<u64>) -> Result<impl Iterator<Item = GeneratorSpec>> {
        let count = self.code_count()?;
        if range.end > count {
            return Err(Error::IndexOutOfRange {
                index: range.end,
                count,
            });
        }
        let ty = *self;
        Ok(range.map(move |i| ty.spec_at(i).expect("index checked against count")))
    }

    pub fn specs(&self) -> Result<impl Iterator<Item = GeneratorSpec>> {
        self.specs_in(0..self.code_count()?)
    }
}

impl fmt::Display for CodeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} {{{},{}}}", self.n, self.k0, self.k1)
    }
}

pub fn code_count(n: usize, k0: usize, k1: usize) -> Result<u64> {
    CodeType::new(n, k0, k1)?.code_count()
}

pub fn enumerate_specs(
    n: usize,
    k0: usize,
    k1: usize,
) -> Result<impl Iterator<Item = GeneratorSpec>> {
    CodeType::new(n, k0, k1)?.specs()
}

/// Types of length `n` in table order: k0 descending, then k1 ascending.
/// The zero type {0,0} is left out.
pub fn valid_types(n: usize) -> Vec<CodeType> {
    let mut out = Vec::new();
    for k0 in (0..n).rev() {
        for k1 in 0..n - k0 {
            if k0 == 0 && k1 == 0 {
                continue;
            }
            if let Ok(ty) = CodeType::new(n, k0, k1) {
                out.push(ty);
            }
        }
    }
    out
}

/// Sum of the closed-form counts over [`valid_types`].
pub fn total_codes_closed_form(n: usize) -> Result<u64> {
    valid_types(n).iter().map(|ty| ty.code_count()).sum()
}

/// One candidate (T, U, V) of a given type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorSpec {
    ty: CodeType,
    t: BitMatrix,
    u: BitMatrix,
    v: BitMatrix,
    candidate_index: u64,
}

impl GeneratorSpec {
    pub fn new(ty: CodeType, t: BitMatrix, u: BitMatrix, v: BitMatrix) -> Result<GeneratorSpec> {
        let r = ty.redundancy();
        let dims = [
            (&t, ty.k0, ty.k1, "T"),
            (&u, ty.k0, r, "U"),
            (&v, ty.k1, r, "V"),
        ];
        for (m, rows, cols, name) in dims {
            let expected = BitMatrix::zeros(rows, cols);
            if (m.rows, m.cols) != (expected.rows, expected.cols) {
                return Err(Error::Parse(format!(
                    "{name} must be {rows}x{cols}, got {}x{}",
                    m.rows, m.cols
                )));
            }
        }
        let (_, eu, ev) = ty.exponents();
        let candidate_index = (t.index() << (eu + ev)) | (u.index() << ev) | v.index();
        Ok(GeneratorSpec {
            ty,
            t,
            u,
            v,
            candidate_index,
        })
    }

    pub fn code_type(&self) -> CodeType {
        self.ty
    }

    pub fn t(&self) -> &BitMatrix {
        &self.t
    }

    pub fn u(&self) -> &BitMatrix {
        &self.u
    }

    pub fn v(&self) -> &BitMatrix {
        &self.v
    }

    pub fn candidate_index(&self) -> u64 {
        self.candidate_index
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} k0={} k1={} T={} U={} V={}",
            self.ty.n,
            self.ty.k0,
            self.ty.k1,
            self.t.bit_string(),
            self.u.bit_string(),
            self.v.bit_string()
        )
    }
}

impl FromStr for GeneratorSpec {
    type Err = Error;

    /// Parses `n=4 k0=1 k1=2 T=10 U=1 V=01`. Empty matrices may be omitted.
    fn from_str(s: &str) -> Result<Self> {
        let (mut n, mut k0, mut k1) = (None, None, None);
        let (mut t, mut u, mut v) = (None, None, None);
        for token in s.split_whitespace() {
            let (key, value) = token
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got \"{token}\"")))?;
            let int = |v: &str| {
                v.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("\"{v}\" is not a non-negative integer")))
            };
            match key {
                "n" => n = Some(int(value)?),
                "k0" => k0 = Some(int(value)?),
                "k1" => k1 = Some(int(value)?),
                "T" => t = Some(value.to_string()),
                "U" => u = Some(value.to_string()),
                "V" => v = Some(value.to_string()),
                other => return Err(Error::Parse(format!("unknown key \"{other}\""))),
            }
        }
        let missing = |name: &str| Error::Parse(format!("missing {name}"));
        let ty = CodeType::new(
            n.ok_or_else(|| missing("n"))?,
            k0.ok_or_else(|| missing("k0"))?,
            k1.ok_or_else(|| missing("k1"))?,
        )?;
        let r = ty.redundancy();
        let matrix =
            |text: Option<String>, rows: usize, cols: usize, name: &str| -> Result<BitMatrix> {
                match text {
                    Some(bits) => BitMatrix::from_bit_string(rows, cols, &bits),
                    None if rows * cols == 0 => Ok(BitMatrix::zeros(rows, cols)),
                    None => Err(missing(name)),
                }
            };
        GeneratorSpec::new(
            ty,
            matrix(t, ty.k0, ty.k1, "T")?,
            matrix(u, ty.k0, r, "U")?,
            matrix(v, ty.k1, r, "V")?,
        )
    }
}

/// Generator rows over E.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EMatrix {
    n: usize,
    rows: Vec<EWord>,
}

impl EMatrix {
    pub fn new(n: usize, rows: Vec<EWord>) -> Result<EMatrix> {
        for row in &rows {
            if row.len() != n {
                return Err(Error::LengthMismatch {
                    left: n,
                    right: row.len(),
                });
            }
        }
        Ok(EMatrix { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[EWord] {
        &self.rows
    }
}

/// Lays out the three blocks for `spec`.
pub fn build_generator(spec: &GeneratorSpec) -> EMatrix {
    let ty = spec.ty;
    let (n, k0, k1) = (ty.n, ty.k0, ty.k1);
    let mut rows = Vec::with_capacity(ty.generator_rows());
    let support = |bits: u32| BitWord::from_bits(n, bits).expect("length validated by CodeType");
    let free: Vec<u32> = (0..k0)
        .map(|i| {
            (1 << i)
                | (spec.t.data.get(i).copied().unwrap_or(0) << k0)
                | (spec.u.data.get(i).copied().unwrap_or(0) << (k0 + k1))
        })
        .collect();
    for scalar in [RingElement::A, RingElement::B] {
        rows.extend(free.iter().map(|&bits| EWord::lift(scalar, support(bits))));
    }
    for j in 0..k1 {
        let bits = (1 << (k0 + j)) | (spec.v.data.get(j).copied().unwrap_or(0) << (k0 + k1));
        rows.push(EWord::lift(RingElement::C, support(bits)));
    }
    EMatrix { n, rows }
}

/// All Z2-combinations of the rows of `g`.
///
/// Word `m` of the result is the sum of the rows whose index is a set bit
/// of `m`.
pub fn span(g: &EMatrix) -> Code {
    Code {
        n: g.n,
        words: span_words(g.n, &g.rows),
        generators: g.rows.clone(),
        spec: None,
    }
}

fn span_words(n: usize, rows: &[EWord]) -> Vec<EWord> {
    let mut words = Vec::with_capacity(1 << rows.len());
    words.push(EWord::zero(n).expect("length validated by caller"));
    for row in rows {
        for i in 0..words.len() {
            let w = words[i].xor(row);
            words.push(w);
        }
    }
    words
}

#[inline]
fn pack(w: &EWord) -> u64 {
    let (lo, hi) = w.planes();
    u64::from(lo) | (u64::from(hi) << 32)
}

/// A Z2-basis drawn from `words`, in first-occurrence order.
pub fn z2_basis(words: &[EWord]) -> Vec<EWord> {
    let mut pivots: Vec<u64> = Vec::new();
    let mut basis = Vec::new();
    for w in words {
        let mut x = pack(w);
        for &p in &pivots {
            x = x.min(x ^ p);
        }
        if x != 0 {
            pivots.push(x);
            pivots.sort_unstable_by(|a, b| b.cmp(a));
            basis.push(*w);
        }
    }
    basis
}

/// A linear code over E: a finite Z2-subspace of E^n.
#[derive(Debug, Clone)]
pub struct Code {
    n: usize,
    words: Vec<EWord>,
    generators: Vec<EWord>,
    spec: Option<GeneratorSpec>,
}

impl Code {
    /// The code spanned by the generator matrix of `spec`.
    pub fn from_spec(spec: &GeneratorSpec) -> Code {
        let g = build_generator(spec);
        debug_assert_eq!(
            z2_basis(&g.rows).len(),
            g.rows.len(),
            "generator rows must be Z2-independent"
        );
        let mut code = span(&g);
        code.spec = Some(spec.clone());
        code
    }

    /// Z2-span of arbitrary generators.
    pub fn from_generators(n: usize, generators: &[EWord]) -> Result<Code> {
        EWord::zero(n)?;
        for g in generators {
            if g.len() != n {
                return Err(Error::LengthMismatch {
                    left: n,
                    right: g.len(),
                });
            }
        }
        let basis = z2_basis(generators);
        Ok(Code {
            n,
            words: span_words(n, &basis),
            generators: basis,
            spec: None,
        })
    }

    /// Wraps an explicit word set, which must be closed under addition.
    pub fn from_words(n: usize, words: &[EWord]) -> Result<Code> {
        let mut sorted = words.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for w in &sorted {
            if w.len() != n {
                return Err(Error::LengthMismatch {
                    left: n,
                    right: w.len(),
                });
            }
        }
        let code = Code::from_generators(n, &sorted)?;
        if code.words.len() != sorted.len() {
            return Err(Error::NotLinear(format!(
                "{} words span {} codewords",
                sorted.len(),
                code.words.len()
            )));
        }
        Ok(code)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Codewords in generation order.
    pub fn words(&self) -> &[EWord] {
        &self.words
    }

    /// A Z2-generating set of the code.
    pub fn generators(&self) -> &[EWord] {
        &self.generators
    }

    pub fn spec(&self) -> Option<&GeneratorSpec> {
        self.spec.as_ref()
    }

    pub fn sorted_words(&self) -> Vec<EWord> {
        let mut w = self.words.clone();
        w.sort_unstable();
        w
    }

    pub fn contains(&self, w: &EWord) -> bool {
        self.words.contains(w)
    }

    /// Set equality.
    pub fn same_words(&self, other: &Code) -> bool {
        self.n == other.n
            && self.len() == other.len()
            && self.sorted_words() == other.sorted_words()
    }

    /// Set inclusion `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Code) -> bool {
        let theirs = other.sorted_words();
        self.words.iter().all(|w| theirs.binary_search(w).is_ok())
    }
}
