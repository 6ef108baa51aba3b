//! Arithmetic in the ring E = <2a = 2b = 0, a^2 = a, b^2 = b, ab = a, ba = b>.
//!
//! E has four elements {0, a, b, c} with c = a + b. It has characteristic 2,
//! is not commutative and has no multiplicative identity. The Cayley tables
//! below are the reference for every other encoding in the crate; the packed
//! word arithmetic in [`crate::words`] is checked against them exhaustively.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One element of E.
///
/// The discriminant doubles as a two-bit code (bit 0 = a-component,
/// bit 1 = b-component) under which addition is XOR.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "char", try_from = "char")]
#[repr(u8)]
pub enum RingElement {
    Zero = 0,
    A = 1,
    B = 2,
    C = 3,
}

use RingElement::{Zero as O, A, B, C};

/// Row/column order used by the tables: 0, a, b, c.
pub const ELEMENTS: [RingElement; 4] = [O, A, B, C];

/// Addition table, `ADD_TABLE[x][y] = x + y`.
pub const ADD_TABLE: [[RingElement; 4]; 4] =
    [[O, A, B, C], [A, O, C, B], [B, C, O, A], [C, B, A, O]];

/// Multiplication table, `MUL_TABLE[x][y] = x * y`.
pub const MUL_TABLE: [[RingElement; 4]; 4] =
    [[O, O, O, O], [O, A, A, O], [O, B, B, O], [O, C, C, O]];

/// The maximal ideal J = {0, c}.
pub const IDEAL_J: [RingElement; 2] = [O, C];

/// 2x2 matrix over F2, `m[row][col]`.
pub type BinMat2 = [[u8; 2]; 2];

impl RingElement {
    #[inline]
    pub const fn index(self) -> usize {
        self as usize
    }

    #[inline]
    pub const fn from_bits(bits: u8) -> RingElement {
        match bits & 3 {
            0 => O,
            1 => A,
            2 => B,
            _ => C,
        }
    }

    pub const fn symbol(self) -> char {
        match self {
            O => '0',
            A => 'a',
            B => 'b',
            C => 'c',
        }
    }

    pub fn from_symbol(ch: char) -> Result<RingElement> {
        match ch {
            '0' => Ok(O),
            'a' => Ok(A),
            'b' => Ok(B),
            'c' => Ok(C),
            other => Err(Error::Parse(format!("'{other}' is not an element of E"))),
        }
    }

    pub fn is_zero(self) -> bool {
        self == O
    }

    pub fn in_ideal_j(self) -> bool {
        IDEAL_J.contains(&self)
    }
}

pub fn add(x: RingElement, y: RingElement) -> RingElement {
    ADD_TABLE[x.index()][y.index()]
}

pub fn mul(x: RingElement, y: RingElement) -> RingElement {
    MUL_TABLE[x.index()][y.index()]
}

/// Reduction modulo J: 0, c -> 0 and a, b -> 1.
pub fn tau(x: RingElement) -> u8 {
    match x {
        O | C => 0,
        A | B => 1,
    }
}

/// Hamming weight of a single symbol.
pub fn elem_weight(x: RingElement) -> u32 {
    u32::from(!x.is_zero())
}

/// Image of `x` in the ring of 2x2 binary matrices.
pub fn matrix_model(x: RingElement) -> BinMat2 {
    match x {
        O => [[0, 0], [0, 0]],
        A => [[0, 0], [0, 1]],
        B => [[0, 1], [0, 1]],
        C => [[0, 1], [0, 0]],
    }
}

pub fn bin_mat_add(x: BinMat2, y: BinMat2) -> BinMat2 {
    let mut out = [[0u8; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = x[i][j] ^ y[i][j];
        }
    }
    out
}

pub fn bin_mat_mul(x: BinMat2, y: BinMat2) -> BinMat2 {
    let mut out = [[0u8; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = (x[i][0] & y[0][j]) ^ (x[i][1] & y[1][j]);
        }
    }
    out
}

impl std::ops::Add for RingElement {
    type Output = RingElement;

    fn add(self, rhs: RingElement) -> RingElement {
        add(self, rhs)
    }
}

impl std::ops::Mul for RingElement {
    type Output = RingElement;

    fn mul(self, rhs: RingElement) -> RingElement {
        mul(self, rhs)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl FromStr for RingElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        match (chars.next(), chars.next()) {
            (Some(ch), None) => RingElement::from_symbol(ch),
            _ => Err(Error::Parse(format!("'{s}' is not a single ring symbol"))),
        }
    }
}

impl From<RingElement> for char {
    fn from(x: RingElement) -> char {
        x.symbol()
    }
}

impl TryFrom<char> for RingElement {
    type Error = Error;

    fn try_from(ch: char) -> Result<Self> {
        RingElement::from_symbol(ch)
    }
}

/// Both Cayley tables laid out with header row `0 a b c`.
pub fn format_tables() -> String {
    let mut out = String::new();
    for (name, table) in [("+", &ADD_TABLE), ("x", &MUL_TABLE)] {
        out.push_str(name);
        for y in ELEMENTS {
            out.push(' ');
            out.push(y.symbol());
        }
        out.push('\n');
        for x in ELEMENTS {
            out.push(x.symbol());
            for y in ELEMENTS {
                out.push(' ');
                out.push(table[x.index()][y.index()].symbol());
            }
            out.push('\n');
        }
        out.push('\n');
    }
    out.pop();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_entries() {
        assert_eq!(add(A, B), C);
        assert_eq!(add(C, C), O);
        assert_eq!(add(O, B), B);
        assert_eq!(mul(A, B), A);
        assert_eq!(mul(B, A), B);
        assert_eq!(mul(C, C), O);
        assert_eq!(mul(O, C), O);
        assert_eq!(tau(C), 0);
        assert_eq!(tau(A), 1);
        assert_eq!(tau(O), 0);
        assert_eq!(elem_weight(O), 0);
        assert_eq!(elem_weight(C), 1);
        assert_eq!(elem_weight(A), 1);
    }

    #[test]
    fn matrix_images() {
        assert_eq!(matrix_model(A), [[0, 0], [0, 1]]);
        assert_eq!(matrix_model(B), [[0, 1], [0, 1]]);
        assert_eq!(
            matrix_model(C),
            bin_mat_add(matrix_model(A), matrix_model(B))
        );
        assert_eq!(matrix_model(C), [[0, 1], [0, 0]]);
    }

    #[test]
    fn element_invariants() {
        assert_eq!(C, A + B);
        for x in ELEMENTS {
            assert_eq!(x + x, O);
            assert_eq!(RingElement::from_symbol(x.symbol()).unwrap(), x);
            assert_eq!(x.to_string().parse::<RingElement>().unwrap(), x);
            assert_eq!(RingElement::from_bits(x as u8), x);
        }
        assert!("d".parse::<RingElement>().is_err());
        assert!("ab".parse::<RingElement>().is_err());
    }

    #[test]
    fn xor_encoding_matches_tables() {
        for x in ELEMENTS {
            for y in ELEMENTS {
                assert_eq!(RingElement::from_bits(x as u8 ^ y as u8), add(x, y));
                // x * y = x when y is a unit mod J, else 0
                let fast = if tau(y) == 1 { x } else { O };
                assert_eq!(fast, mul(x, y));
            }
        }
    }

    #[test]
    fn ideal_j() {
        for x in IDEAL_J {
            for y in IDEAL_J {
                assert!(add(x, y).in_ideal_j());
            }
        }
        for x in ELEMENTS {
            for y in ELEMENTS {
                if x.in_ideal_j() || y.in_ideal_j() {
                    assert!(mul(x, y).in_ideal_j(), "{x}*{y}");
                }
            }
        }
    }

    #[test]
    fn tau_is_additive() {
        for x in ELEMENTS {
            for y in ELEMENTS {
                assert_eq!(tau(x + y), tau(x) ^ tau(y));
            }
        }
    }

    #[test]
    fn serde_uses_symbols() {
        let json = serde_json::to_string(&[O, A, B, C]).unwrap();
        assert_eq!(json, r#"["0","a","b","c"]"#);
        let back: Vec<RingElement> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, vec![O, A, B, C]);
    }

    #[test]
    fn table_layout() {
        let text = format_tables();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "+ 0 a b c");
        assert_eq!(lines[2], "a a 0 c b");
        assert_eq!(lines[6], "x 0 a b c");
        assert_eq!(lines[8], "a 0 a a 0");
    }
}
