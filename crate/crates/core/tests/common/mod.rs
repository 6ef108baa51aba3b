#![allow(dead_code)]

// Reference computations over symbol vectors. Symbols: 0 -> 0, a -> 1, b -> 2, c -> 3.
// Nothing here goes through the packed word representation.

use std::collections::BTreeSet;

use nur4::GeneratorSpec;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const ADD: [[u8; 4]; 4] = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]];
pub const MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 1, 0], [0, 2, 2, 0], [0, 3, 3, 0]];

pub type Word = Vec<u8>;

pub fn parse(s: &str) -> Word {
    s.chars()
        .map(|c| match c {
            '0' => 0,
            'a' => 1,
            'b' => 2,
            'c' => 3,
            _ => panic!("bad symbol {c}"),
        })
        .collect()
}

pub fn show(w: &[u8]) -> String {
    w.iter()
        .map(|&x| ['0', 'a', 'b', 'c'][x as usize])
        .collect()
}

pub fn add(u: &[u8], v: &[u8]) -> Word {
    u.iter()
        .zip(v)
        .map(|(&x, &y)| ADD[x as usize][y as usize])
        .collect()
}

pub fn inner(u: &[u8], v: &[u8]) -> u8 {
    u.iter().zip(v).fold(0, |acc, (&x, &y)| {
        ADD[acc as usize][MUL[x as usize][y as usize] as usize]
    })
}

pub fn weight(u: &[u8]) -> u32 {
    u.iter().filter(|&&x| x != 0).count() as u32
}

pub fn distance(u: &[u8], v: &[u8]) -> u32 {
    u.iter().zip(v).filter(|(x, y)| x != y).count() as u32
}

/// Generator rows a(I|T|U), b(I|T|U), c(0|I|V) built entry by entry.
pub fn generator(spec: &GeneratorSpec) -> Vec<Word> {
    let ty = spec.code_type();
    let (n, k0, k1) = (ty.n(), ty.k0(), ty.k1());
    let r = n - k0 - k1;
    let mut rows = Vec::new();
    for sym in [1u8, 2] {
        for i in 0..k0 {
            let mut row = vec![0u8; n];
            row[i] = sym;
            for j in 0..k1 {
                if spec.t().get(i, j) == 1 {
                    row[k0 + j] = sym;
                }
            }
            for j in 0..r {
                if spec.u().get(i, j) == 1 {
                    row[k0 + k1 + j] = sym;
                }
            }
            rows.push(row);
        }
    }
    for i in 0..k1 {
        let mut row = vec![0u8; n];
        row[k0 + i] = 3;
        for j in 0..r {
            if spec.v().get(i, j) == 1 {
                row[k0 + k1 + j] = 3;
            }
        }
        rows.push(row);
    }
    rows
}

/// Additive closure of the rows.
pub fn closure(n: usize, rows: &[Word]) -> BTreeSet<Word> {
    let mut set = BTreeSet::from([vec![0u8; n]]);
    let mut frontier: Vec<Word> = set.iter().cloned().collect();
    while let Some(w) = frontier.pop() {
        for g in rows {
            let s = add(&w, g);
            if set.insert(s.clone()) {
                frontier.push(s);
            }
        }
    }
    set
}

pub fn code_of(spec: &GeneratorSpec) -> BTreeSet<Word> {
    closure(spec.code_type().n(), &generator(spec))
}

/// Minimum distance over all unordered pairs of distinct codewords.
pub fn pairwise_min_distance(code: &BTreeSet<Word>) -> u32 {
    let words: Vec<(u32, u32)> = code.iter().map(|w| planes(w)).collect();
    let mut best = u32::MAX;
    for i in 0..words.len() {
        let (ul, uh) = words[i];
        for &(vl, vh) in &words[i + 1..] {
            best = best.min(((ul ^ vl) | (uh ^ vh)).count_ones());
        }
    }
    best
}

// Position-indexed symbol bits, used only to speed up the pairwise scan.
fn planes(w: &[u8]) -> (u32, u32) {
    w.iter().enumerate().fold((0, 0), |(l, h), (i, &x)| {
        (l | ((x as u32 & 1) << i), h | ((x as u32 >> 1) << i))
    })
}

pub fn all_words(n: usize) -> impl Iterator<Item = Word> {
    (0..4u64.pow(n as u32)).map(move |mut k| {
        let mut w = vec![0u8; n];
        for x in w.iter_mut() {
            *x = (k % 4) as u8;
            k /= 4;
        }
        w
    })
}

/// {v : <v, x> = 0 for every x in the code}.
pub fn brute_left_dual(n: usize, code: &BTreeSet<Word>) -> BTreeSet<Word> {
    all_words(n)
        .filter(|v| code.iter().all(|x| inner(v, x) == 0))
        .collect()
}

/// {v : <x, v> = 0 for every x in the code}.
pub fn brute_right_dual(n: usize, code: &BTreeSet<Word>) -> BTreeSet<Word> {
    all_words(n)
        .filter(|v| code.iter().all(|x| inner(x, v) == 0))
        .collect()
}

pub fn words_of(code: &nur4::Code) -> BTreeSet<Word> {
    code.words().iter().map(|w| parse(&w.to_string())).collect()
}

/// Up to `samples` distinct candidate indices below `count`; all of them when
/// `count <= samples`.
pub fn sample_indices(rng: &mut ChaCha8Rng, count: u64, samples: usize) -> Vec<u64> {
    if count <= samples as u64 {
        return (0..count).collect();
    }
    let mut picked = BTreeSet::new();
    while picked.len() < samples {
        picked.insert(rng.gen_range(0..count));
    }
    picked.into_iter().collect()
}

/// GF(2) rank of binary vectors.
pub fn rank(mut rows: Vec<u32>) -> usize {
    let mut r = 0;
    for bit in 0..32 {
        let Some(p) = (r..rows.len()).find(|&i| rows[i] >> bit & 1 == 1) else {
            continue;
        };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && rows[i] >> bit & 1 == 1 {
                rows[i] ^= rows[r];
            }
        }
        r += 1;
    }
    r
}
