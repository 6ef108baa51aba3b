//! Per-code records and the JSON / CSV files written by `nur4 classify`.
//!
//! Summary files hold one [`LengthReport`]; full runs add one [`CodeRecord`]
//! per candidate, in table order and then candidate-index order. Nothing in
//! the output depends on the worker count.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::{classify_length, classify_type, ClassifyOptions, LengthReport, TypeRecord};
use crate::duality::{
    duals, is_qsd, is_self_orthogonal, is_type_iv, nice_report, NicePolicy, MAX_DUAL_LEN,
};
use crate::error::Error;
use crate::genmat::{build_generator, Code, CodeType, GeneratorSpec};
use crate::metrics::{
    binary_dimension, complete_weight_enumerator, min_distance, residue_code, torsion_code,
    weight_enumerator, CompleteWeightEnumerator, WeightEnumerator,
};
use crate::words::EWord;

/// Fixed column order of per-code CSV files.
pub const CODE_CSV_HEADER: &str = "candidate_index,n,k0,k1,T,U,V,d_min,optimal,we,cwe,res_dim,tor_dim,left_dual_size,right_dual_size,left_nice,right_nice,both_nice,intersection_nice,self_orthogonal,qsd,type_iv";

/// Fixed column order of summary CSV files.
pub const SUMMARY_CSV_HEADER: &str = "n,k0,k1,k,total_codes,max_dmin,optimal_count,nice_left,nice_right,nice_both,nice_intersection,nice_optimal_left,nice_optimal_right,nice_optimal_both,nice_optimal_intersection";

/// Largest length for which `inspect` lists the dual codewords.
pub const INSPECT_DUAL_MAX_N: usize = 8;

/// Largest type `inspect` classifies to decide optimality.
const INSPECT_CLASSIFY_MAX: u64 = 1 << 22;

#[derive(Debug, Error)]
pub enum ExportError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl ExportError {
    /// 2 for invalid parameters, 3 for output failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            ExportError::Core(_) => 2,
            ExportError::Io { .. } | ExportError::Json(_) => 3,
        }
    }
}

/// Everything exported about a single code.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CodeRecord {
    pub candidate_index: u64,
    pub n: usize,
    pub k0: usize,
    pub k1: usize,
    #[serde(rename = "T")]
    pub t: String,
    #[serde(rename = "U")]
    pub u: String,
    #[serde(rename = "V")]
    pub v: String,
    pub generator: Vec<EWord>,
    pub d_min: u32,
    /// `None` when the type maximum is unknown.
    pub optimal: Option<bool>,
    pub weight_enumerator: WeightEnumerator,
    pub complete_weight_enumerator: CompleteWeightEnumerator,
    pub res_dim: usize,
    pub tor_dim: usize,
    pub left_dual_size: Option<u64>,
    pub right_dual_size: Option<u64>,
    pub intersection_dual_size: Option<u64>,
    pub left_nice: Option<bool>,
    pub right_nice: Option<bool>,
    pub both_nice: Option<bool>,
    pub intersection_nice: Option<bool>,
    pub self_orthogonal: bool,
    pub qsd: bool,
    pub type_iv: bool,
}

impl CodeRecord {
    /// Builds the record for `spec`. Dual sizes and niceness are filled in
    /// when `with_duals` is set.
    pub fn build(
        spec: &GeneratorSpec,
        type_max_dmin: Option<u32>,
        with_duals: bool,
    ) -> Result<CodeRecord, Error> {
        let code = Code::from_spec(spec);
        CodeRecord::from_code(spec, &code, type_max_dmin, with_duals)
    }

    fn from_code(
        spec: &GeneratorSpec,
        code: &Code,
        type_max_dmin: Option<u32>,
        with_duals: bool,
    ) -> Result<CodeRecord, Error> {
        let ty = spec.code_type();
        let d_min = min_distance(code)?;
        let nice = if with_duals {
            Some(nice_report(code)?)
        } else {
            None
        };
        Ok(CodeRecord {
            candidate_index: spec.candidate_index(),
            n: ty.n(),
            k0: ty.k0(),
            k1: ty.k1(),
            t: spec.t().bit_string(),
            u: spec.u().bit_string(),
            v: spec.v().bit_string(),
            generator: build_generator(spec).rows().to_vec(),
            d_min,
            optimal: type_max_dmin.map(|m| d_min == m),
            weight_enumerator: weight_enumerator(code),
            complete_weight_enumerator: complete_weight_enumerator(code),
            res_dim: binary_dimension(&residue_code(code))?,
            tor_dim: binary_dimension(&torsion_code(code))?,
            left_dual_size: nice.map(|r| r.sizes[1]),
            right_dual_size: nice.map(|r| r.sizes[2]),
            intersection_dual_size: nice.map(|r| r.sizes[3]),
            left_nice: nice.map(|r| r.left_nice),
            right_nice: nice.map(|r| r.right_nice),
            both_nice: nice.map(|r| r.both_nice),
            intersection_nice: nice.map(|r| r.intersection_nice),
            self_orthogonal: is_self_orthogonal(code),
            qsd: is_qsd(code),
            type_iv: is_type_iv(code),
        })
    }

    /// Reconstructs the generating spec from the stored bit strings.
    pub fn spec(&self) -> Result<GeneratorSpec, Error> {
        format!(
            "n={} k0={} k1={} T={} U={} V={}",
            self.n, self.k0, self.k1, self.t, self.u, self.v
        )
        .parse()
    }

    pub fn is_nice(&self, policy: NicePolicy) -> Option<bool> {
        match policy {
            NicePolicy::Left => self.left_nice,
            NicePolicy::Right => self.right_nice,
            NicePolicy::Both => self.both_nice,
            NicePolicy::Intersection => self.intersection_nice,
        }
    }

    pub fn csv_row(&self) -> String {
        fn opt<T: ToString>(x: Option<T>) -> String {
            x.map(|v| v.to_string()).unwrap_or_default()
        }
        format!(
            "{},{},{},{},{},{},{},{},{},\"{}\",\"{}\",{},{},{},{},{},{},{},{},{},{},{}",
            self.candidate_index,
            self.n,
            self.k0,
            self.k1,
            self.t,
            self.u,
            self.v,
            self.d_min,
            opt(self.optimal),
            self.weight_enumerator,
            self.complete_weight_enumerator,
            self.res_dim,
            self.tor_dim,
            opt(self.left_dual_size),
            opt(self.right_dual_size),
            opt(self.left_nice),
            opt(self.right_nice),
            opt(self.both_nice),
            opt(self.intersection_nice),
            self.self_orthogonal,
            self.qsd,
            self.type_iv,
        )
    }
}

/// Records of every code of a classified type, in candidate order.
pub fn type_code_records(
    record: &TypeRecord,
    with_duals: bool,
    jobs: usize,
) -> Result<Vec<CodeRecord>, Error> {
    let ty = record.code_type();
    let count = ty.code_count()?;
    let build = |i: u64| CodeRecord::build(&ty.spec_at(i)?, Some(record.max_dmin), with_duals);
    if jobs <= 1 {
        return (0..count).map(build).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Parse(format!("cannot start {jobs} workers: {e}")))?;
    pool.install(|| (0..count).into_par_iter().map(build).collect())
}

pub fn summary_json(report: &LengthReport) -> Result<String, serde_json::Error> {
    let mut s = serde_json::to_string_pretty(report)?;
    s.push('\n');
    Ok(s)
}

pub fn summary_csv(report: &LengthReport) -> String {
    let mut out = String::from(SUMMARY_CSV_HEADER);
    out.push('\n');
    for r in &report.records {
        let counts = |m: &Option<std::collections::BTreeMap<NicePolicy, u64>>| -> Vec<String> {
            NicePolicy::ALL
                .iter()
                .map(|p| m.as_ref().map(|m| m[p].to_string()).unwrap_or_default())
                .collect()
        };
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            r.n,
            r.k0,
            r.k1,
            r.k,
            r.total_codes,
            r.max_dmin,
            r.optimal_count,
            counts(&r.nice_counts).join(","),
            counts(&r.nice_optimal_counts).join(","),
        );
    }
    out
}

pub fn records_jsonl(records: &[CodeRecord]) -> Result<String, serde_json::Error> {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(r)?);
        out.push('\n');
    }
    Ok(out)
}

pub fn records_csv(records: &[CodeRecord]) -> String {
    let mut out = String::from(CODE_CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&r.csv_row());
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Emit {
    Summary,
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

/// Settings of one `classify` run.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub n: usize,
    pub k0: Option<usize>,
    pub k1: Option<usize>,
    pub with_nice: bool,
    pub policy: NicePolicy,
    pub emit: Emit,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub options: ClassifyOptions,
}

/// What a run produced.
#[derive(Debug)]
pub struct RunOutput {
    pub report: LengthReport,
    pub files: Vec<PathBuf>,
    pub records: Option<Vec<CodeRecord>>,
}

fn write_file(path: &Path, contents: &str) -> Result<(), ExportError> {
    fs::write(path, contents).map_err(|source| ExportError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn run_classify(config: &RunConfig) -> Result<RunOutput, ExportError> {
    let mut options = config.options.clone();
    options.with_nice = config.with_nice;
    let report = match (config.k0, config.k1) {
        (None, None) => classify_length(config.n, &options)?,
        (k0, k1) => {
            let ty = CodeType::new(config.n, k0.unwrap_or(0), k1.unwrap_or(0))?;
            if config.n > options.max_n {
                return Err(Error::LengthTooLarge {
                    n: config.n,
                    max: options.max_n,
                }
                .into());
            }
            LengthReport::from_records(
                config.n,
                vec![classify_type(ty.n(), ty.k0(), ty.k1(), &options)?],
            )
        }
    };
    let records = match config.emit {
        Emit::Summary => None,
        Emit::Full => {
            let mut all = Vec::new();
            for r in &report.records {
                all.extend(type_code_records(
                    r,
                    config.with_nice && config.n <= MAX_DUAL_LEN,
                    options.jobs,
                )?);
            }
            Some(all)
        }
    };
    let mut files = Vec::new();
    if let Some(dir) = &config.out {
        fs::create_dir_all(dir).map_err(|source| ExportError::Io {
            path: dir.clone(),
            source,
        })?;
        let stem = match (config.k0, config.k1) {
            (None, None) => format!("n{}", config.n),
            (k0, k1) => format!("n{}_k{}_{}", config.n, k0.unwrap_or(0), k1.unwrap_or(0)),
        };
        let (summary_name, summary_text) = match config.format {
            Format::Json => (format!("summary_{stem}.json"), summary_json(&report)?),
            Format::Csv => (format!("summary_{stem}.csv"), summary_csv(&report)),
        };
        let path = dir.join(summary_name);
        write_file(&path, &summary_text)?;
        files.push(path);
        if let Some(records) = &records {
            let (name, text) = match config.format {
                Format::Json => (format!("codes_{stem}.jsonl"), records_jsonl(records)?),
                Format::Csv => (format!("codes_{stem}.csv"), records_csv(records)),
            };
            let path = dir.join(name);
            write_file(&path, &text)?;
            files.push(path);
        }
    }
    Ok(RunOutput {
        report,
        files,
        records,
    })
}

/// Full description of a single code.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InspectReport {
    pub spec: String,
    pub record: CodeRecord,
    pub codewords: Vec<EWord>,
    pub left_dual: Option<Vec<EWord>>,
    pub right_dual: Option<Vec<EWord>>,
}

pub fn inspect(spec_text: &str) -> Result<InspectReport, Error> {
    let spec: GeneratorSpec = spec_text.parse()?;
    let ty = spec.code_type();
    let type_max = if ty.code_count()? <= INSPECT_CLASSIFY_MAX {
        Some(classify_type(ty.n(), ty.k0(), ty.k1(), &ClassifyOptions::default())?.max_dmin)
    } else {
        None
    };
    let code = Code::from_spec(&spec);
    let record = CodeRecord::from_code(&spec, &code, type_max, ty.n() <= MAX_DUAL_LEN)?;
    let (left_dual, right_dual) = if ty.n() <= INSPECT_DUAL_MAX_N {
        let d = duals(&code)?;
        (Some(d.left.sorted_words()), Some(d.right.sorted_words()))
    } else {
        (None, None)
    };
    Ok(InspectReport {
        spec: spec.to_string(),
        record,
        codewords: code.sorted_words(),
        left_dual,
        right_dual,
    })
}
