//! Published classification tables, printed layouts and cell-by-cell diffs.
//!
//! The fixture files under `fixtures/` are transcriptions of the published
//! classification values for n <= 6 (with niceness columns) and n = 7.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::classify::LengthReport;
use crate::duality::NicePolicy;
use crate::error::{Error, Result};

const TABLE1_CSV: &str = include_str!("../fixtures/table1.csv");
const TABLE2_CSV: &str = include_str!("../fixtures/table2.csv");

/// One published row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PublishedRow {
    pub n: usize,
    pub k0: usize,
    pub k1: usize,
    pub max_dmin: u32,
    pub optimal_count: u64,
    /// Yes/No column; absent for n = 7.
    pub nice_property: Option<bool>,
    /// N column; `None` where the table shows a dash.
    pub nice_count: Option<u64>,
}

fn parse_fixture(text: &str, with_nice: bool) -> Result<Vec<PublishedRow>> {
    let mut lines = text
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty());
    lines.next();
    lines
        .map(|line| {
            let cells: Vec<&str> = line.split(',').collect();
            let bad = || Error::Parse(format!("bad fixture row \"{line}\""));
            let num = |i: usize| {
                cells
                    .get(i)
                    .ok_or_else(bad)?
                    .parse::<u64>()
                    .map_err(|_| bad())
            };
            let (nice_property, nice_count) = if with_nice {
                let prop = match *cells.get(5).ok_or_else(bad)? {
                    "yes" => true,
                    "no" => false,
                    _ => return Err(bad()),
                };
                let count = match *cells.get(6).ok_or_else(bad)? {
                    "" => None,
                    _ => Some(num(6)?),
                };
                (Some(prop), count)
            } else {
                (None, None)
            };
            Ok(PublishedRow {
                n: num(0)? as usize,
                k0: num(1)? as usize,
                k1: num(2)? as usize,
                max_dmin: num(3)? as u32,
                optimal_count: num(4)?,
                nice_property,
                nice_count,
            })
        })
        .collect()
}

pub fn table1() -> Vec<PublishedRow> {
    parse_fixture(TABLE1_CSV, true).expect("bundled fixture parses")
}

pub fn table2() -> Vec<PublishedRow> {
    parse_fixture(TABLE2_CSV, false).expect("bundled fixture parses")
}

/// Both tables, n = 2..7.
pub fn published_rows() -> Vec<PublishedRow> {
    let mut rows = table1();
    rows.extend(table2());
    rows
}

/// Published N'(n) sums for n = 1..6.
pub const PUBLISHED_NICE_TOTALS: [(usize, u64); 6] =
    [(1, 0), (2, 1), (3, 2), (4, 15), (5, 104), (6, 761)];

/// Published M'(n) values for n = 1..7.
pub const PUBLISHED_M_PRIME: [(usize, u64); 7] = [
    (1, 0),
    (2, 4),
    (3, 24),
    (4, 160),
    (5, 1472),
    (6, 20096),
    (7, 420096),
];

/// Prints reports in the published column layout. With a policy, adds the
/// niceness columns for lengths where they were computed.
pub fn format_table(reports: &[LengthReport], policy: Option<NicePolicy>) -> String {
    let mut out = String::new();
    let _ = write!(
        out,
        "{:>2}  {:<7}  {:>9}  {:>6}",
        "n", "{k0,k1}", "max(dmin)", "M"
    );
    if let Some(p) = policy {
        let _ = write!(
            out,
            "  {:>9}  {:>12}  {:>6}  {:>10}",
            format!("nice({p})"),
            "nice optimal",
            "N",
            "N optimal"
        );
    }
    out.push('\n');
    for report in reports {
        for r in &report.records {
            let _ = write!(
                out,
                "{:>2}  {:<7}  {:>9}  {:>6}",
                r.n,
                format!("{{{},{}}}", r.k0, r.k1),
                r.max_dmin,
                r.optimal_count
            );
            if let Some(p) = policy {
                match (
                    r.nice_count(p),
                    r.nice_optimal_counts.as_ref().map(|m| m[&p]),
                ) {
                    (Some(all), Some(opt)) => {
                        let yes = |c: u64| if c > 0 { "Yes" } else { "No" };
                        let _ = write!(
                            out,
                            "  {:>9}  {:>12}  {:>6}  {:>10}",
                            yes(all),
                            yes(opt),
                            all,
                            opt
                        );
                    }
                    _ => {
                        let _ = write!(out, "  {:>9}  {:>12}  {:>6}  {:>10}", "-", "-", "-", "-");
                    }
                }
            }
            out.push('\n');
        }
        let _ = write!(
            out,
            "   total enumerated for n={}: {}",
            report.n, report.total_enumerated
        );
        if let (Some(p), Some(t)) = (policy, &report.nice_totals) {
            let _ = write!(out, ", nice ({p}): {}", t[&p]);
        }
        out.push('\n');
    }
    out
}

/// A single disagreeing cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellMismatch {
    pub n: usize,
    pub k0: usize,
    pub k1: usize,
    pub column: &'static str,
    pub published: String,
    pub computed: String,
}

/// Comparison of the max(d_min) and M columns.
#[derive(Debug, Clone, Default)]
pub struct TableDiff {
    pub rows_compared: usize,
    pub cells_compared: usize,
    pub mismatches: Vec<CellMismatch>,
    /// Published rows with no computed counterpart.
    pub missing: Vec<(usize, usize, usize)>,
}

impl TableDiff {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty() && self.missing.is_empty()
    }
}

pub fn diff_tables(reports: &[LengthReport], published: &[PublishedRow]) -> TableDiff {
    let mut diff = TableDiff::default();
    for row in published {
        let Some(rec) = reports
            .iter()
            .find(|r| r.n == row.n)
            .and_then(|r| r.record(row.k0, row.k1))
        else {
            if reports.iter().any(|r| r.n == row.n) {
                diff.missing.push((row.n, row.k0, row.k1));
            }
            continue;
        };
        diff.rows_compared += 1;
        let cells = [
            ("max_dmin", row.max_dmin as u64, rec.max_dmin as u64),
            ("M", row.optimal_count, rec.optimal_count),
        ];
        for (column, published, computed) in cells {
            diff.cells_compared += 1;
            if published != computed {
                diff.mismatches.push(CellMismatch {
                    n: row.n,
                    k0: row.k0,
                    k1: row.k1,
                    column,
                    published: published.to_string(),
                    computed: computed.to_string(),
                });
            }
        }
    }
    diff
}

pub fn format_diff(diff: &TableDiff) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "compared {} rows, {} cells: {} mismatching, {} missing",
        diff.rows_compared,
        diff.cells_compared,
        diff.mismatches.len(),
        diff.missing.len()
    );
    for m in &diff.mismatches {
        let _ = writeln!(
            out,
            "  MISMATCH n={} {{{},{}}} {}: published {}, computed {}",
            m.n, m.k0, m.k1, m.column, m.published, m.computed
        );
    }
    for (n, k0, k1) in &diff.missing {
        let _ = writeln!(out, "  MISSING n={n} {{{k0},{k1}}}");
    }
    out
}

/// How one niceness policy lines up with the published N column.
#[derive(Debug, Clone)]
pub struct PolicyReconciliation {
    pub policy: NicePolicy,
    /// Rows where the computed count equals the published N (a dash counts as 0).
    pub matching: Vec<(usize, usize, usize)>,
    /// (n, k0, k1, published, computed).
    pub mismatching: Vec<(usize, usize, usize, u64, u64)>,
    /// Rows whose Yes/No agrees with "some code of the type is nice".
    pub property_any_matches: usize,
    /// Rows whose Yes/No agrees with "some optimal code of the type is nice".
    pub property_optimal_matches: usize,
    pub rows_compared: usize,
    /// n -> (published N'(n), computed sum).
    pub totals: BTreeMap<usize, (u64, u64)>,
}

/// Compares every policy against the published N column. Lengths without
/// niceness data are skipped.
pub fn nice_reconciliation(
    reports: &[LengthReport],
    published: &[PublishedRow],
) -> Vec<PolicyReconciliation> {
    NicePolicy::ALL
        .iter()
        .map(|&policy| {
            let mut rec = PolicyReconciliation {
                policy,
                matching: Vec::new(),
                mismatching: Vec::new(),
                property_any_matches: 0,
                property_optimal_matches: 0,
                rows_compared: 0,
                totals: BTreeMap::new(),
            };
            for row in published {
                let Some(prop) = row.nice_property else {
                    continue;
                };
                let Some(r) = reports
                    .iter()
                    .find(|r| r.n == row.n)
                    .and_then(|r| r.record(row.k0, row.k1))
                else {
                    continue;
                };
                let (Some(all), Some(opt)) = (
                    r.nice_count(policy),
                    r.nice_optimal_counts.as_ref().map(|m| m[&policy]),
                ) else {
                    continue;
                };
                rec.rows_compared += 1;
                let published_n = row.nice_count.unwrap_or(0);
                if published_n == all {
                    rec.matching.push((row.n, row.k0, row.k1));
                } else {
                    rec.mismatching
                        .push((row.n, row.k0, row.k1, published_n, all));
                }
                rec.property_any_matches += usize::from((all > 0) == prop);
                rec.property_optimal_matches += usize::from((opt > 0) == prop);
            }
            for (n, published_total) in PUBLISHED_NICE_TOTALS {
                if let Some(t) = reports
                    .iter()
                    .find(|r| r.n == n)
                    .and_then(|r| r.nice_totals.as_ref())
                {
                    rec.totals.insert(n, (published_total, t[&policy]));
                }
            }
            rec
        })
        .collect()
}

pub fn format_reconciliation(recs: &[PolicyReconciliation]) -> String {
    let mut out = String::new();
    for rec in recs {
        let _ = writeln!(
            out,
            "policy {}: N column matches on {}/{} rows; Yes/No matches {} (any nice) / {} (optimal nice)",
            rec.policy,
            rec.matching.len(),
            rec.rows_compared,
            rec.property_any_matches,
            rec.property_optimal_matches
        );
        let matching: Vec<String> = rec
            .matching
            .iter()
            .map(|(n, k0, k1)| format!("n={n} {{{k0},{k1}}}"))
            .collect();
        let _ = writeln!(
            out,
            "  matching: {}",
            if matching.is_empty() {
                "none".to_string()
            } else {
                matching.join(", ")
            }
        );
        for (n, k0, k1, published, computed) in &rec.mismatching {
            let _ = writeln!(
                out,
                "  mismatch n={n} {{{k0},{k1}}}: published {published}, computed {computed}"
            );
        }
        for (n, (published, computed)) in &rec.totals {
            let _ = writeln!(out, "  N'({n}): published {published}, computed {computed}");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_shapes() {
        let t1 = table1();
        assert_eq!(t1.len(), 50);
        let per_n: Vec<usize> = (2..=6)
            .map(|n| t1.iter().filter(|r| r.n == n).count())
            .collect();
        assert_eq!(per_n, vec![2, 5, 9, 14, 20]);
        assert_eq!(table2().len(), 27);
        let sums: Vec<u64> = (2..=6)
            .map(|n| {
                t1.iter()
                    .filter(|r| r.n == n)
                    .filter_map(|r| r.nice_count)
                    .sum()
            })
            .collect();
        assert_eq!(sums, vec![1, 2, 15, 104, 761]);
    }

    #[test]
    fn fixture_rows_match_table_order() {
        for n in 2..=7 {
            let fixture: Vec<(usize, usize)> = published_rows()
                .iter()
                .filter(|r| r.n == n)
                .map(|r| (r.k0, r.k1))
                .collect();
            let ours: Vec<(usize, usize)> = crate::genmat::valid_types(n)
                .iter()
                .map(|t| (t.k0(), t.k1()))
                .collect();
            assert_eq!(fixture, ours, "n={n}");
        }
    }

    #[test]
    fn rejects_bad_rows() {
        assert!(parse_fixture("h\n2,1,0,2,x\n", false).is_err());
        assert!(parse_fixture("h\n2,1,0,2,1,maybe,\n", true).is_err());
    }
}
