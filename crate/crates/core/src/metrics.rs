//! Per-code metrics: minimum distance, weight enumerators, residue and
//! torsion codes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genmat::Code;
use crate::words::BitWord;

/// Minimum distance of a linear code, as its least nonzero weight.
pub fn min_distance(code: &Code) -> Result<u32> {
    if code.len() < 2 {
        return Err(Error::TooFewCodewords(code.len()));
    }
    Ok(code
        .words()
        .iter()
        .filter(|w| !w.is_zero())
        .map(|w| w.weight())
        .min()
        .expect("a code with two words has a nonzero word"))
}

/// Weight distribution A_0..A_n.
///
/// Equality is polynomial equality, so trailing zero coefficients are ignored.
#[derive(Debug, Clone)]
pub struct WeightEnumerator {
    coefficients: Vec<u64>,
}

impl PartialEq for WeightEnumerator {
    fn eq(&self, other: &Self) -> bool {
        let len = self.coefficients.len().max(other.coefficients.len());
        (0..len).all(|i| self.coefficient(i) == other.coefficient(i))
    }
}

impl Eq for WeightEnumerator {}

impl WeightEnumerator {
    pub fn from_coefficients(coefficients: Vec<u64>) -> WeightEnumerator {
        WeightEnumerator { coefficients }
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    pub fn coefficient(&self, i: usize) -> u64 {
        self.coefficients.get(i).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.coefficients.iter().sum()
    }

    /// `[i, A_i]` for every nonzero A_i.
    pub fn pairs(&self) -> Vec<[u64; 2]> {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| [i as u64, a])
            .collect()
    }

    pub fn from_pairs(n: usize, pairs: &[[u64; 2]]) -> WeightEnumerator {
        let mut coefficients = vec![0; n + 1];
        for &[i, a] in pairs {
            coefficients[i as usize] = a;
        }
        WeightEnumerator { coefficients }
    }
}

impl fmt::Display for WeightEnumerator {
    /// Compact polynomial such as `1+3z^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for [i, a] in self.pairs() {
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    if i == 1 {
                        f.write_str("z")?;
                    } else {
                        write!(f, "z^{i}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Serialize for WeightEnumerator {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        self.pairs().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for WeightEnumerator {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let pairs = Vec::<[u64; 2]>::deserialize(deserializer)?;
        let n = pairs.iter().map(|p| p[0] as usize).max().unwrap_or(0);
        Ok(WeightEnumerator::from_pairs(n, &pairs))
    }
}

pub fn weight_enumerator(code: &Code) -> WeightEnumerator {
    let mut coefficients = vec![0u64; code.n() + 1];
    for w in code.words() {
        coefficients[w.weight() as usize] += 1;
    }
    WeightEnumerator { coefficients }
}

/// Exponents of X_0, X_a, X_b, X_c in one monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Multidegree {
    pub n0: u32,
    pub na: u32,
    pub nb: u32,
    pub nc: u32,
}

impl Multidegree {
    pub fn degree(&self) -> u32 {
        self.n0 + self.na + self.nb + self.nc
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct CweTerm {
    n0: u32,
    na: u32,
    nb: u32,
    nc: u32,
    count: u64,
}

/// Complete weight enumerator, one count per symbol profile.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CompleteWeightEnumerator {
    terms: BTreeMap<Multidegree, u64>,
}

impl CompleteWeightEnumerator {
    pub fn terms(&self) -> &BTreeMap<Multidegree, u64> {
        &self.terms
    }

    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    /// Whether every monomial has degree `n`.
    pub fn is_homogeneous(&self, n: usize) -> bool {
        self.terms.keys().all(|m| m.degree() as usize == n)
    }

    /// Substitutes X_0 = 1 and X_a = X_b = X_c = z.
    pub fn specialize(&self, n: usize) -> WeightEnumerator {
        let mut coefficients = vec![0; n + 1];
        for (m, &count) in &self.terms {
            coefficients[(m.na + m.nb + m.nc) as usize] += count;
        }
        WeightEnumerator { coefficients }
    }
}

impl fmt::Display for CompleteWeightEnumerator {
    /// Compact polynomial such as `X0^2+Xa^2+Xb^2+Xc^2`, highest X0 power first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (m, &count) in self.terms.iter().rev() {
            if !first {
                f.write_str("+")?;
            }
            first = false;
            if count != 1 || m.degree() == 0 {
                write!(f, "{count}")?;
            }
            for (name, e) in [("X0", m.n0), ("Xa", m.na), ("Xb", m.nb), ("Xc", m.nc)] {
                match e {
                    0 => {}
                    1 => f.write_str(name)?,
                    _ => write!(f, "{name}^{e}")?,
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Serialize for CompleteWeightEnumerator {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<CweTerm> = self
            .terms
            .iter()
            .rev()
            .map(|(m, &count)| CweTerm {
                n0: m.n0,
                na: m.na,
                nb: m.nb,
                nc: m.nc,
                count,
            })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CompleteWeightEnumerator {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<CweTerm>::deserialize(deserializer)?;
        Ok(CompleteWeightEnumerator {
            terms: terms
                .into_iter()
                .map(|t| {
                    (
                        Multidegree {
                            n0: t.n0,
                            na: t.na,
                            nb: t.nb,
                            nc: t.nc,
                        },
                        t.count,
                    )
                })
                .collect(),
        })
    }
}

pub fn complete_weight_enumerator(code: &Code) -> CompleteWeightEnumerator {
    let mut terms = BTreeMap::new();
    for w in code.words() {
        let [n0, na, nb, nc] = w.symbol_counts();
        *terms.entry(Multidegree { n0, na, nb, nc }).or_insert(0) += 1;
    }
    CompleteWeightEnumerator { terms }
}

/// A binary code stored as a sorted word set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryCode {
    n: usize,
    words: Vec<BitWord>,
}

impl BinaryCode {
    pub fn new(n: usize, words: impl IntoIterator<Item = BitWord>) -> BinaryCode {
        let set: BTreeSet<BitWord> = words.into_iter().collect();
        BinaryCode {
            n,
            words: set.into_iter().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> &[BitWord] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &BitWord) -> bool {
        self.words.binary_search(w).is_ok()
    }

    pub fn is_subset_of(&self, other: &BinaryCode) -> bool {
        self.words.iter().all(|w| other.contains(w))
    }
}

/// tau applied to every codeword.
pub fn residue_code(code: &Code) -> BinaryCode {
    BinaryCode::new(code.n(), code.words().iter().map(|w| w.tau()))
}

/// Supports of the codewords lying entirely in {0, c}.
pub fn torsion_code(code: &Code) -> BinaryCode {
    let n = code.n();
    BinaryCode::new(
        n,
        code.words().iter().filter_map(|w| {
            let (lo, hi) = w.planes();
            (lo == hi).then(|| BitWord::from_bits(n, lo).expect("length already validated"))
        }),
    )
}

/// Rank over F2 of a set of binary words.
pub fn f2_rank(words: &[BitWord]) -> usize {
    let mut pivots: Vec<u32> = Vec::new();
    for w in words {
        let mut x = w.bits();
        for &p in &pivots {
            x = x.min(x ^ p);
        }
        if x != 0 {
            pivots.push(x);
            pivots.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    pivots.len()
}

/// Dimension of a binary linear code.
///
/// Computed as log2 |bc| and cross-checked against the F2 rank of its
/// words; a size that is not a power of two, or a rank that disagrees
/// (closure fails), is rejected.
pub fn binary_dimension(bc: &BinaryCode) -> Result<usize> {
    let size = bc.len();
    if size == 0 || !size.is_power_of_two() {
        return Err(Error::NotLinear(format!(
            "{size} words is not a power of two"
        )));
    }
    let log = size.trailing_zeros() as usize;
    let rank = f2_rank(bc.words());
    if rank != log || !bc.contains(&BitWord::zero(bc.n)?) {
        return Err(Error::NotLinear(format!("{size} words have rank {rank}")));
    }
    Ok(log)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::EWord;

    fn code(n: usize, words: &[&str]) -> Code {
        let words: Vec<EWord> = words.iter().map(|s| s.parse().unwrap()).collect();
        Code::from_words(n, &words).unwrap()
    }

    fn bits(n: usize, words: &[&str]) -> BinaryCode {
        BinaryCode::new(n, words.iter().map(|s| s.parse::<BitWord>().unwrap()))
    }

    #[test]
    fn weight_enumerator_json_roundtrip() {
        let we = weight_enumerator(&code(3, &["000", "ccc"]));
        assert_eq!(serde_json::to_string(&we).unwrap(), "[[0,1],[3,1]]");
        let short: WeightEnumerator = serde_json::from_str("[[0,1],[1,3]]").unwrap();
        assert_eq!(short, WeightEnumerator::from_coefficients(vec![1, 3, 0, 0]));
        assert_ne!(short, WeightEnumerator::from_coefficients(vec![1, 3, 1]));
    }

    #[test]
    fn min_distance_examples() {
        assert_eq!(
            min_distance(&code(2, &["00", "aa", "bb", "cc"])).unwrap(),
            2
        );
        assert_eq!(min_distance(&code(2, &["00", "cc"])).unwrap(), 2);
        let spec = "n=3 k0=1 k1=1 T=1 U=1 V=1".parse().unwrap();
        assert_eq!(min_distance(&Code::from_spec(&spec)).unwrap(), 1);
        assert_eq!(
            min_distance(&code(2, &["00"])),
            Err(Error::TooFewCodewords(1))
        );
    }

    #[test]
    fn weight_enumerator_examples() {
        let we = weight_enumerator(&code(2, &["00", "aa", "bb", "cc"]));
        assert_eq!(we.coefficients(), &[1, 0, 3]);
        assert_eq!(we.to_string(), "1+3z^2");
        assert_eq!(
            weight_enumerator(&code(2, &["00", "cc"])).to_string(),
            "1+z^2"
        );
        assert_eq!(
            weight_enumerator(&code(1, &["0", "a", "b", "c"])).to_string(),
            "1+3z"
        );
        assert_eq!(serde_json::to_string(&we).unwrap(), "[[0,1],[2,3]]");
    }

    #[test]
    fn cwe_examples() {
        let c = code(2, &["00", "aa", "bb", "cc"]);
        let cwe = complete_weight_enumerator(&c);
        assert_eq!(cwe.to_string(), "X0^2+Xa^2+Xb^2+Xc^2");
        assert_eq!(cwe.specialize(2), weight_enumerator(&c));
        assert!(cwe.is_homogeneous(2));
        let c1 = code(1, &["0", "a", "b", "c"]);
        assert_eq!(complete_weight_enumerator(&c1).to_string(), "X0+Xa+Xb+Xc");
        let json =
            serde_json::to_string(&complete_weight_enumerator(&code(2, &["00", "cc"]))).unwrap();
        assert_eq!(
            json,
            r#"[{"n0":2,"na":0,"nb":0,"nc":0,"count":1},{"n0":0,"na":0,"nb":0,"nc":2,"count":1}]"#
        );
        let back: CompleteWeightEnumerator = serde_json::from_str(&json).unwrap();
        assert_eq!(back, complete_weight_enumerator(&code(2, &["00", "cc"])));
    }

    #[test]
    fn residue_and_torsion() {
        let c = code(2, &["00", "aa", "bb", "cc"]);
        assert_eq!(residue_code(&c), bits(2, &["00", "11"]));
        assert_eq!(torsion_code(&c), bits(2, &["00", "11"]));
        let c = code(2, &["00", "cc"]);
        assert_eq!(residue_code(&c), bits(2, &["00"]));
        assert_eq!(torsion_code(&c), bits(2, &["00", "11"]));
        let c = code(1, &["0", "a", "b", "c"]);
        assert_eq!(torsion_code(&c), bits(1, &["0", "1"]));
        for spec in crate::genmat::enumerate_specs(4, 1, 2).unwrap() {
            let c = Code::from_spec(&spec);
            assert_eq!(binary_dimension(&residue_code(&c)).unwrap(), 1);
            assert_eq!(binary_dimension(&torsion_code(&c)).unwrap(), 3);
        }
    }

    #[test]
    fn binary_dimension_examples() {
        assert_eq!(binary_dimension(&bits(2, &["00"])).unwrap(), 0);
        assert_eq!(binary_dimension(&bits(2, &["00", "11"])).unwrap(), 1);
        assert_eq!(
            binary_dimension(&bits(2, &["00", "01", "10", "11"])).unwrap(),
            2
        );
        assert!(binary_dimension(&bits(2, &["00", "01", "10"])).is_err());
        assert!(binary_dimension(&bits(3, &["000", "011", "101", "111"])).is_err());
        assert!(binary_dimension(&bits(2, &["01", "10"])).is_err());
    }
}
