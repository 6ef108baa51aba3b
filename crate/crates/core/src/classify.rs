//! Exhaustive classification by type and by length.
//!
//! Each type is split into shards of consecutive candidate indices. A shard
//! folds its codes into a [`TypeTally`]; tallies merge by keeping the larger
//! maximum distance and adding counts only when the maxima agree, so the
//! final record does not depend on shard boundaries or scheduling.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::duality::{nice_report, NicePolicy, NiceReport};
use crate::error::{Error, Result};
use crate::genmat::{valid_types, Code, CodeType};
use crate::metrics::min_distance;

/// Candidates per shard.
const SHARD_LEN: u64 = 1024;

/// Default classification length guard.
pub const DEFAULT_MAX_N: usize = 7;

/// Default length guard for niceness.
pub const DEFAULT_NICE_MAX_N: usize = 6;

#[derive(Debug, Clone)]
pub struct ClassifyOptions {
    pub with_nice: bool,
    pub nice_max_n: usize,
    pub max_n: usize,
    pub jobs: usize,
    /// How many optimal candidate indices a record keeps.
    pub optimal_cap: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            with_nice: false,
            nice_max_n: DEFAULT_NICE_MAX_N,
            max_n: DEFAULT_MAX_N,
            jobs: 1,
            optimal_cap: 1_000_000,
        }
    }
}

impl ClassifyOptions {
    pub fn with_nice(mut self, on: bool) -> Self {
        self.with_nice = on;
        self
    }

    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }
}

/// Partial classification of a range of candidates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeTally {
    pub total: u64,
    pub max_dmin: u32,
    pub optimal_count: u64,
    pub optimal_indices: Vec<u64>,
    pub nice: [u64; 4],
    pub nice_optimal: [u64; 4],
}

fn flags(report: &NiceReport) -> [u64; 4] {
    NicePolicy::ALL.map(|p| u64::from(report.is_nice(p)))
}

fn add4(a: [u64; 4], b: [u64; 4]) -> [u64; 4] {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

impl TypeTally {
    pub fn empty() -> TypeTally {
        TypeTally {
            total: 0,
            max_dmin: 0,
            optimal_count: 0,
            optimal_indices: Vec::new(),
            nice: [0; 4],
            nice_optimal: [0; 4],
        }
    }

    /// Tally of a single code.
    pub fn single(index: u64, dmin: u32, nice: Option<&NiceReport>) -> TypeTally {
        let f = nice.map(flags).unwrap_or([0; 4]);
        TypeTally {
            total: 1,
            max_dmin: dmin,
            optimal_count: 1,
            optimal_indices: vec![index],
            nice: f,
            nice_optimal: f,
        }
    }

    /// Associative, commutative merge. Keeps the `cap` smallest optimal indices.
    pub fn merge(self, other: TypeTally, cap: usize) -> TypeTally {
        let total = self.total + other.total;
        let nice = add4(self.nice, other.nice);
        let (max_dmin, optimal_count, nice_optimal, mut indices) =
            if self.total == 0 || other.max_dmin > self.max_dmin && other.total > 0 {
                (
                    other.max_dmin,
                    other.optimal_count,
                    other.nice_optimal,
                    other.optimal_indices,
                )
            } else if other.total == 0 || self.max_dmin > other.max_dmin {
                (
                    self.max_dmin,
                    self.optimal_count,
                    self.nice_optimal,
                    self.optimal_indices,
                )
            } else {
                let mut indices = self.optimal_indices;
                indices.extend(other.optimal_indices);
                (
                    self.max_dmin,
                    self.optimal_count + other.optimal_count,
                    add4(self.nice_optimal, other.nice_optimal),
                    indices,
                )
            };
        indices.sort_unstable();
        indices.truncate(cap);
        TypeTally {
            total,
            max_dmin,
            optimal_count,
            optimal_indices: indices,
            nice,
            nice_optimal,
        }
    }
}

/// Classification of one type {k0, k1} at length n.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TypeRecord {
    pub n: usize,
    pub k0: usize,
    pub k1: usize,
    /// k0 + k1 / 2.
    pub k: f64,
    pub total_codes: u64,
    pub max_dmin: u32,
    pub optimal_count: u64,
    pub nice_counts: Option<BTreeMap<NicePolicy, u64>>,
    pub nice_optimal_counts: Option<BTreeMap<NicePolicy, u64>>,
    pub optimal_indices: Vec<u64>,
    pub optimal_indices_truncated: bool,
}

impl TypeRecord {
    pub fn code_type(&self) -> CodeType {
        CodeType::new(self.n, self.k0, self.k1).expect("records only exist for valid types")
    }

    pub fn nice_count(&self, policy: NicePolicy) -> Option<u64> {
        self.nice_counts.as_ref().map(|m| m[&policy])
    }

    pub fn is_optimal_index(&self, index: u64) -> Option<bool> {
        (!self.optimal_indices_truncated)
            .then(|| self.optimal_indices.binary_search(&index).is_ok())
    }
}

fn classify_range(
    ty: CodeType,
    start: u64,
    end: u64,
    with_nice: bool,
    cap: usize,
) -> Result<TypeTally> {
    let mut tally = TypeTally::empty();
    // indices arrive in increasing order, so the optimal list stays sorted
    for spec in ty.specs_in(start..end)? {
        let code = Code::from_spec(&spec);
        let dmin = min_distance(&code)?;
        let f = if with_nice {
            flags(&nice_report(&code)?)
        } else {
            [0; 4]
        };
        tally.total += 1;
        tally.nice = add4(tally.nice, f);
        if dmin > tally.max_dmin {
            tally.max_dmin = dmin;
            tally.optimal_count = 0;
            tally.optimal_indices.clear();
            tally.nice_optimal = [0; 4];
        }
        if dmin == tally.max_dmin {
            tally.optimal_count += 1;
            tally.nice_optimal = add4(tally.nice_optimal, f);
            if tally.optimal_indices.len() < cap {
                tally.optimal_indices.push(spec.candidate_index());
            }
        }
    }
    Ok(tally)
}

fn run_in_pool<T: Send>(jobs: usize, work: impl FnOnce() -> T + Send) -> T {
    if jobs <= 1 {
        return work();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(work),
        Err(e) => {
            log::warn!("could not start {jobs} workers ({e}); running on the global pool");
            work()
        }
    }
}

pub fn classify_type(
    n: usize,
    k0: usize,
    k1: usize,
    options: &ClassifyOptions,
) -> Result<TypeRecord> {
    let ty = CodeType::new(n, k0, k1)?;
    if options.with_nice && n > options.nice_max_n {
        return Err(Error::LengthTooLarge {
            n,
            max: options.nice_max_n,
        });
    }
    let count = ty.code_count()?;
    let cap = options.optimal_cap;
    let shards: Vec<(u64, u64)> = (0..count.div_ceil(SHARD_LEN))
        .map(|s| (s * SHARD_LEN, ((s + 1) * SHARD_LEN).min(count)))
        .collect();
    let with_nice = options.with_nice;
    let tally = run_in_pool(options.jobs, || {
        if options.jobs <= 1 {
            shards.iter().try_fold(TypeTally::empty(), |acc, &(a, b)| {
                Ok::<_, Error>(acc.merge(classify_range(ty, a, b, with_nice, cap)?, cap))
            })
        } else {
            shards
                .par_iter()
                .map(|&(a, b)| classify_range(ty, a, b, with_nice, cap))
                .try_reduce(TypeTally::empty, |x, y| Ok(x.merge(y, cap)))
        }
    })?;
    debug_assert_eq!(tally.total, count);
    let policy_map = |v: [u64; 4]| {
        NicePolicy::ALL
            .into_iter()
            .zip(v)
            .collect::<BTreeMap<_, _>>()
    };
    Ok(TypeRecord {
        n,
        k0,
        k1,
        k: ty.dimension(),
        total_codes: tally.total,
        max_dmin: tally.max_dmin,
        optimal_count: tally.optimal_count,
        nice_counts: with_nice.then(|| policy_map(tally.nice)),
        nice_optimal_counts: with_nice.then(|| policy_map(tally.nice_optimal)),
        optimal_indices_truncated: (tally.optimal_indices.len() as u64) < tally.optimal_count,
        optimal_indices: tally.optimal_indices,
    })
}

/// All types of one length.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LengthReport {
    pub n: usize,
    pub records: Vec<TypeRecord>,
    pub total_enumerated: u64,
    pub nice_totals: Option<BTreeMap<NicePolicy, u64>>,
}

impl LengthReport {
    pub fn from_records(n: usize, records: Vec<TypeRecord>) -> LengthReport {
        let total_enumerated = records.iter().map(|r| r.total_codes).sum();
        let nice_totals =
            records
                .iter()
                .try_fold(BTreeMap::new(), |mut acc: BTreeMap<NicePolicy, u64>, r| {
                    for (p, c) in r.nice_counts.as_ref()? {
                        *acc.entry(*p).or_insert(0) += c;
                    }
                    Some(acc)
                });
        let nice_totals = if records.is_empty() {
            None
        } else {
            nice_totals
        };
        LengthReport {
            n,
            records,
            total_enumerated,
            nice_totals,
        }
    }

    pub fn record(&self, k0: usize, k1: usize) -> Option<&TypeRecord> {
        self.records.iter().find(|r| r.k0 == k0 && r.k1 == k1)
    }

    /// Types whose mirror {k1, k0} has a different max_dmin or optimal count.
    pub fn symmetry_counterexamples(&self) -> Vec<(usize, usize)> {
        self.records
            .iter()
            .filter(|r| r.k0 != r.k1)
            .filter(|r| match self.record(r.k1, r.k0) {
                Some(m) => m.max_dmin != r.max_dmin || m.optimal_count != r.optimal_count,
                None => false,
            })
            .map(|r| (r.k0, r.k1))
            .collect()
    }
}

pub fn classify_length(n: usize, options: &ClassifyOptions) -> Result<LengthReport> {
    if n > options.max_n {
        return Err(Error::LengthTooLarge {
            n,
            max: options.max_n,
        });
    }
    let records = valid_types(n)
        .into_iter()
        .map(|ty| classify_type(ty.n(), ty.k0(), ty.k1(), options))
        .collect::<Result<Vec<_>>>()?;
    Ok(LengthReport::from_records(n, records))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LengthTotals {
    pub total_enumerated: u64,
    /// Present only for lengths where niceness was computed.
    pub nice_total: Option<u64>,
}

/// Totals per length in `n_min..=n_max`. Niceness is computed up to
/// `options.nice_max_n` when `options.with_nice` is set.
pub fn aggregate_totals(
    n_min: usize,
    n_max: usize,
    policy: NicePolicy,
    options: &ClassifyOptions,
) -> Result<BTreeMap<usize, LengthTotals>> {
    let mut out = BTreeMap::new();
    for n in n_min..=n_max {
        let mut opts = options.clone();
        opts.with_nice = options.with_nice && n <= options.nice_max_n;
        let report = classify_length(n, &opts)?;
        let nice_total = match &report.nice_totals {
            Some(t) => Some(t[&policy]),
            None if opts.with_nice => Some(0),
            None => None,
        };
        out.insert(
            n,
            LengthTotals {
                total_enumerated: report.total_enumerated,
                nice_total,
            },
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_rows() {
        let opts = ClassifyOptions::default();
        let r = classify_type(2, 1, 0, &opts).unwrap();
        assert_eq!((r.max_dmin, r.optimal_count), (2, 1));
        let r = classify_type(4, 1, 2, &opts).unwrap();
        assert_eq!((r.max_dmin, r.optimal_count), (2, 4));
        assert_eq!(r.total_codes, 32);
        assert_eq!(r.k, 2.0);
    }

    #[test]
    fn invalid_type_and_guards() {
        let opts = ClassifyOptions::default();
        assert!(matches!(
            classify_type(2, 2, 0, &opts),
            Err(Error::InvalidType { .. })
        ));
        let nice = ClassifyOptions::default().with_nice(true);
        assert!(matches!(
            classify_type(7, 6, 0, &nice),
            Err(Error::LengthTooLarge { n: 7, max: 6 })
        ));
        assert!(matches!(
            classify_length(8, &opts),
            Err(Error::LengthTooLarge { n: 8, max: 7 })
        ));
    }

    #[test]
    fn length_two_report() {
        let rep = classify_length(2, &ClassifyOptions::default().with_nice(true)).unwrap();
        assert_eq!(rep.total_enumerated, 4);
        let types: Vec<_> = rep.records.iter().map(|r| (r.k0, r.k1)).collect();
        assert_eq!(types, vec![(1, 0), (0, 1)]);
        assert!(rep.nice_totals.is_some());
    }

    #[test]
    fn empty_length() {
        let rep = classify_length(1, &ClassifyOptions::default()).unwrap();
        assert!(rep.records.is_empty());
        assert_eq!(rep.total_enumerated, 0);
        let totals = aggregate_totals(
            1,
            1,
            NicePolicy::Both,
            &ClassifyOptions::default().with_nice(true),
        )
        .unwrap();
        assert_eq!(
            totals[&1],
            LengthTotals {
                total_enumerated: 0,
                nice_total: Some(0)
            }
        );
    }

    #[test]
    fn merge_keeps_larger_maximum() {
        let a = TypeTally::single(3, 2, None);
        let b = TypeTally::single(1, 2, None);
        let c = TypeTally::single(2, 3, None);
        let ab = a.clone().merge(b.clone(), 10);
        assert_eq!(
            (ab.max_dmin, ab.optimal_count, ab.optimal_indices.clone()),
            (2, 2, vec![1, 3])
        );
        let abc = ab.merge(c.clone(), 10);
        assert_eq!(
            (
                abc.total,
                abc.max_dmin,
                abc.optimal_count,
                abc.optimal_indices.clone()
            ),
            (3, 3, 1, vec![2])
        );
        let cba = c.merge(b.merge(a, 10), 10);
        assert_eq!(abc, cba);
        assert_eq!(
            TypeTally::empty().merge(TypeTally::empty(), 1),
            TypeTally::empty()
        );
    }

    #[test]
    fn optimal_cap_truncates() {
        let opts = ClassifyOptions {
            optimal_cap: 2,
            ..ClassifyOptions::default()
        };
        let r = classify_type(4, 1, 1, &opts).unwrap();
        assert_eq!(r.optimal_count, 18);
        assert_eq!(r.optimal_indices.len(), 2);
        assert!(r.optimal_indices_truncated);
        assert_eq!(r.is_optimal_index(0), None);
    }

    #[test]
    fn jobs_do_not_change_records() {
        let one = classify_length(5, &ClassifyOptions::default().with_nice(true)).unwrap();
        let many = classify_length(5, &ClassifyOptions::default().with_nice(true).jobs(4)).unwrap();
        assert_eq!(one, many);
    }
}
