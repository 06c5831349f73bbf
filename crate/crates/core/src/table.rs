//! Count tables over ranges of `(n, lambda)`.

use std::fmt;
use std::io::Write;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::chromatic::{count_colorings_bruteforce, ChromaticEngine, DEFAULT_NODE_BUDGET};
use crate::error::{Error, Result};
use crate::formulas::{aps_g, riordan_l3, thm3_g};
use crate::graph::build_gn;
use crate::oracle::count_latin;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Formula {
    Riordan,
    Aps,
    Thm3,
    Engine,
    Brute,
    LatinOracle,
}

impl Formula {
    pub const ALL: [Formula; 6] = [
        Formula::Riordan,
        Formula::Aps,
        Formula::Thm3,
        Formula::Engine,
        Formula::Brute,
        Formula::LatinOracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Formula::Riordan => "riordan",
            Formula::Aps => "aps",
            Formula::Thm3 => "thm3",
            Formula::Engine => "engine",
            Formula::Brute => "brute",
            Formula::LatinOracle => "latin-oracle",
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Formula::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown formula {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
    Plain,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "plain" => Ok(Format::Plain),
            _ => Err(Error::invalid(format!("unknown format {s:?}"))),
        }
    }
}

/// Symbol counts either relative to `n` or absolute.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LambdaRange {
    Offset(RangeInclusive<u64>),
    Absolute(RangeInclusive<u64>),
}

impl Default for LambdaRange {
    fn default() -> Self {
        LambdaRange::Offset(0..=0)
    }
}

/// Parses `a..b` (inclusive) or a single value `a`.
pub fn parse_range(s: &str) -> Result<RangeInclusive<u64>> {
    let bad = |e: std::num::ParseIntError| Error::invalid(format!("bad range {s:?}: {e}"));
    let range = match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            a.trim().parse().map_err(bad)?..=b.trim().parse().map_err(bad)?
        }
        None => {
            let v = s.trim().parse().map_err(bad)?;
            v..=v
        }
    };
    if range.is_empty() {
        return Err(Error::invalid(format!("empty range {s:?}")));
    }
    Ok(range)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableSpec {
    pub n_range: RangeInclusive<u64>,
    pub lambda: LambdaRange,
    pub formula: Formula,
    pub format: Format,
    pub node_budget: u64,
    pub engine: ChromaticEngine,
}

impl TableSpec {
    pub fn new(formula: Formula, n_range: RangeInclusive<u64>) -> Self {
        TableSpec {
            n_range,
            lambda: LambdaRange::default(),
            formula,
            format: Format::Csv,
            node_budget: DEFAULT_NODE_BUDGET,
            engine: ChromaticEngine::default(),
        }
    }

    /// All `(n, lambda)` cells in output order, after validation.
    pub fn cells(&self) -> Result<Vec<(u64, u64)>> {
        if self.n_range.is_empty() || *self.n_range.start() == 0 {
            return Err(Error::invalid(
                "n range must be nonempty and start at 1 or more",
            ));
        }
        let mut cells = Vec::new();
        for n in self.n_range.clone() {
            if self.formula == Formula::Riordan {
                cells.push((n, n));
                continue;
            }
            let lambdas = match &self.lambda {
                LambdaRange::Offset(r) => (r.start() + n)..=(r.end() + n),
                LambdaRange::Absolute(r) => r.clone(),
            };
            if lambdas.is_empty() {
                return Err(Error::invalid("lambda range is empty"));
            }
            for lambda in lambdas {
                if lambda < n {
                    return Err(Error::invalid(format!("lambda={lambda} is below n={n}")));
                }
                cells.push((n, lambda));
            }
        }
        Ok(cells)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub n: u64,
    pub lambda: u64,
    pub formula: &'static str,
    /// Exact decimal.
    pub value: String,
}

/// Evaluates every cell. Columns sharing `n` are computed together (the
/// engine builds one polynomial per `n`) and groups run in parallel; rows
/// come back in cell order.
pub fn compute(spec: &TableSpec) -> Result<Vec<Row>> {
    let cells = spec.cells()?;
    let mut groups: Vec<(u64, Vec<u64>)> = Vec::new();
    for (n, lambda) in cells {
        match groups.last_mut() {
            Some((last, lambdas)) if *last == n => lambdas.push(lambda),
            _ => groups.push((n, vec![lambda])),
        }
    }
    let computed: Vec<Result<Vec<Row>>> = groups
        .par_iter()
        .map(|(n, lambdas)| group_rows(spec, *n, lambdas))
        .collect();
    let mut rows = Vec::new();
    for group in computed {
        rows.extend(group?);
    }
    Ok(rows)
}

fn group_rows(spec: &TableSpec, n: u64, lambdas: &[u64]) -> Result<Vec<Row>> {
    let poly = match spec.formula {
        Formula::Engine => Some(spec.engine.chromatic_poly(&build_gn(n as usize))?),
        _ => None,
    };
    lambdas
        .iter()
        .map(|&lambda| {
            let value: BigInt = match spec.formula {
                Formula::Riordan => riordan_l3(n)?,
                Formula::Aps => aps_g(n, lambda)?,
                Formula::Thm3 => thm3_g(n, lambda)?,
                Formula::Engine => poly.as_ref().expect("engine polynomial").eval_u64(lambda),
                Formula::Brute => {
                    count_colorings_bruteforce(&build_gn(n as usize), lambda, spec.node_budget)?
                }
                Formula::LatinOracle => count_latin(n as usize, lambda, false, spec.node_budget)?,
            };
            Ok(Row {
                n,
                lambda,
                formula: spec.formula.name(),
                value: value.to_string(),
            })
        })
        .collect()
}

pub fn render<W: Write>(rows: &[Row], format: Format, mut out: W) -> std::io::Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .has_headers(false)
                .from_writer(out);
            w.write_record(["n", "lambda", "formula", "value"])?;
            for row in rows {
                w.serialize(row)?;
            }
            w.flush()
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, rows)?;
            writeln!(out)
        }
        Format::Plain => {
            let width = rows.iter().map(|r| r.value.len()).max().unwrap_or(0).max(5);
            writeln!(
                out,
                "{:>3} {:>6} {:<12} {:>width$}",
                "n", "lambda", "formula", "value"
            )?;
            for r in rows {
                writeln!(
                    out,
                    "{:>3} {:>6} {:<12} {:>width$}",
                    r.n, r.lambda, r.formula, r.value
                )?;
            }
            Ok(())
        }
    }
}
