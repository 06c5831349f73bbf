//! Cross-checks between the closed forms, the chromatic engine and the
//! enumeration oracles, grouped into lanes so the cheap formula checks can run
//! on their own.

use std::fmt;

use num_bigint::BigInt;

use crate::chromatic::{count_colorings_bruteforce, ChromaticEngine, DEFAULT_NODE_BUDGET};
use crate::combinatorics::{factorial, gen_derangement};
use crate::error::{Error, Result};
use crate::formulas::{aps_g, g_npq_closed, riordan_l3, theorem2_sum, thm3_g};
use crate::graph::{build_gn, build_gnpq, delete_edge, identify, Graph};
use crate::oracle::{count_injections_forbidden, count_latin};

/// Largest `n` the formula-only lane accepts.
pub const FORMULA_N_MAX: u64 = 6;
/// Largest `n` the engine and oracle lanes accept.
pub const ENGINE_N_MAX: u64 = 4;
/// Exhaustive derangement checks stop at this many colors.
pub const DERANGEMENT_LAMBDA_MAX: u64 = 7;
/// Latin enumeration at `n = 4` only runs for `lambda <= 5`.
pub const LATIN_N4_LAMBDA_MAX: u64 = 5;
/// Brute-force colorings of `G(n)` only run for `n <= 3`.
pub const BRUTE_N_MAX: u64 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub n_max: u64,
    pub lambda_offset_max: u64,
    pub engine: bool,
    pub oracle: bool,
    pub node_budget: u64,
    pub engine_settings: ChromaticEngine,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            n_max: 3,
            lambda_offset_max: 3,
            engine: true,
            oracle: true,
            node_budget: DEFAULT_NODE_BUDGET,
            engine_settings: ChromaticEngine::default(),
        }
    }
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_max == 0 {
            return Err(Error::invalid("n-max must be at least 1"));
        }
        if self.n_max > FORMULA_N_MAX {
            return Err(Error::invalid(format!(
                "n-max above {FORMULA_N_MAX} is not supported"
            )));
        }
        if (self.engine || self.oracle) && self.n_max > ENGINE_N_MAX {
            return Err(Error::invalid(format!(
                "engine and oracle lanes need n-max <= {ENGINE_N_MAX}; pass --skip-engine --skip-oracle for larger n"
            )));
        }
        Ok(())
    }

    fn cells(&self, n_max: u64) -> impl Iterator<Item = (u64, u64)> + '_ {
        (1..=n_max)
            .flat_map(move |n| (n..=n + self.lambda_offset_max).map(move |lambda| (n, lambda)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass { cases: usize },
    Fail { counterexample: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub outcome: Outcome,
}

impl Check {
    pub fn passed(&self) -> bool {
        matches!(self.outcome, Outcome::Pass { .. })
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Outcome::Pass { cases } => write!(f, "PASS {} ({cases} cases)", self.name),
            Outcome::Fail { counterexample } => write!(f, "FAIL {}: {counterexample}", self.name),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            writeln!(f, "{check}")?;
        }
        let passed = self.checks.iter().filter(|c| c.passed()).count();
        writeln!(f, "{passed}/{} identities passed", self.checks.len())
    }
}

/// Accumulates cases for one identity and keeps the first mismatch.
struct Tally {
    name: &'static str,
    cases: usize,
    failure: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            cases: 0,
            failure: None,
        }
    }

    fn expect_eq(&mut self, what: impl FnOnce() -> String, left: &BigInt, right: &BigInt) {
        if self.failure.is_some() {
            return;
        }
        self.cases += 1;
        if left != right {
            self.failure = Some(format!("{}: {left} != {right}", what()));
        }
    }

    fn finish(self) -> Check {
        let outcome = match self.failure {
            Some(counterexample) => Outcome::Fail { counterexample },
            None => Outcome::Pass { cases: self.cases },
        };
        Check {
            name: self.name,
            outcome,
        }
    }
}

/// Runs every lane enabled in `config`. Errors are configuration or guard
/// failures; identity mismatches are reported in the [`Report`].
pub fn run(config: &VerifyConfig) -> Result<Report> {
    config.validate()?;
    let mut checks = formula_lane(config)?;
    if config.engine {
        checks.extend(engine_lane(config)?);
    }
    if config.oracle {
        checks.extend(oracle_lane(config)?);
    }
    Ok(Report { checks })
}

pub fn formula_lane(config: &VerifyConfig) -> Result<Vec<Check>> {
    let mut equivalence = Tally::new("formula-equivalence thm3_g = aps_g");
    for (n, lambda) in config.cells(config.n_max) {
        equivalence.expect_eq(
            || format!("n={n} lambda={lambda}"),
            &thm3_g(n, lambda)?,
            &aps_g(n, lambda)?,
        );
    }

    let mut first_row = Tally::new("first-row-reduction n! * riordan_l3 = thm3_g(n, n)");
    for n in 1..=config.n_max {
        first_row.expect_eq(
            || format!("n={n}"),
            &(factorial(n) * riordan_l3(n)?),
            &thm3_g(n, n)?,
        );
    }

    let mut telescoped = Tally::new("theorem2-closed-forms sum at m = n equals thm3_g");
    for (n, lambda) in config.cells(config.n_max) {
        let sum = theorem2_sum(n, n, lambda, |p, lam| {
            g_npq_closed(p.n as u64, p.p as u64, p.q as u64, lam)
        })?;
        telescoped.expect_eq(
            || format!("n={n} lambda={lambda}"),
            &sum,
            &thm3_g(n, lambda)?,
        );
    }

    Ok(vec![
        equivalence.finish(),
        first_row.finish(),
        telescoped.finish(),
    ])
}

fn engine_count(engine: &ChromaticEngine, g: &Graph, lambda: u64) -> Result<BigInt> {
    engine.count(g, lambda)
}

pub fn engine_lane(config: &VerifyConfig) -> Result<Vec<Check>> {
    let engine = &config.engine_settings;

    let mut grounding = Tally::new("engine-grounding P(G(n)) = thm3_g = aps_g");
    for n in 1..=config.n_max {
        let poly = engine.chromatic_poly(&build_gn(n as usize))?;
        for lambda in n..=n + config.lambda_offset_max {
            let value = poly.eval_u64(lambda);
            grounding.expect_eq(
                || format!("thm3_g n={n} lambda={lambda}"),
                &value,
                &thm3_g(n, lambda)?,
            );
            grounding.expect_eq(
                || format!("aps_g n={n} lambda={lambda}"),
                &value,
                &aps_g(n, lambda)?,
            );
        }
    }

    let mut surgery = Tally::new("surgery-grounding g_npq_closed = P(G(n, k, l))");
    for n in 1..=config.n_max {
        for k in 0..=n {
            let l = n - k;
            let poly = engine.chromatic_poly(&build_gnpq(n as usize, k as usize, l as usize)?)?;
            for lambda in n..=n + config.lambda_offset_max {
                surgery.expect_eq(
                    || format!("n={n} k={k} l={l} lambda={lambda}"),
                    &g_npq_closed(n, k, l, lambda)?,
                    &poly.eval_u64(lambda),
                );
            }
        }
    }

    let mut telescoping = Tally::new("theorem2-engine sum is m-invariant and equals P(G(n))");
    for (n, lambda) in config.cells(config.n_max) {
        let target = engine_count(engine, &build_gn(n as usize), lambda)?;
        for m in 1..=n {
            let sum = theorem2_sum(n, m, lambda, |p, lam| {
                engine_count(engine, &build_gnpq(p.n, p.p, p.q)?, lam)
            })?;
            telescoping.expect_eq(|| format!("n={n} m={m} lambda={lambda}"), &sum, &target);
        }
    }

    let mut reduction =
        Tally::new("reduction-identity P(G) = P(G - uv) - P(G_uv) on every edge of G(n)");
    for n in 1..=config.n_max.min(3) {
        let g = build_gn(n as usize);
        let whole = engine.chromatic_poly(&g)?;
        for (u, v) in g.edges() {
            let deleted = engine.chromatic_poly(&delete_edge(&g, u, v)?)?;
            let merged = engine.chromatic_poly(&identify(&g, u, v)?.graph)?;
            let rhs = &deleted - &merged;
            for lambda in 0..=n + config.lambda_offset_max {
                reduction.expect_eq(
                    || format!("n={n} edge=({u},{v}) lambda={lambda}"),
                    &whole.eval_u64(lambda),
                    &rhs.eval_u64(lambda),
                );
            }
        }
    }

    Ok(vec![
        grounding.finish(),
        surgery.finish(),
        telescoping.finish(),
        reduction.finish(),
    ])
}

pub fn oracle_lane(config: &VerifyConfig) -> Result<Vec<Check>> {
    let budget = config.node_budget;

    let mut derangements = Tally::new("derangement-grounding gen_derangement = injection count");
    let lambda_cap = (config.n_max + config.lambda_offset_max).min(DERANGEMENT_LAMBDA_MAX);
    for lambda in 0..=lambda_cap {
        for n in 0..=lambda {
            for t in 0..=n {
                derangements.expect_eq(
                    || format!("lambda={lambda} n={n} t={t}"),
                    &gen_derangement(lambda, n, t)?,
                    &count_injections_forbidden(lambda, n, t, budget)?,
                );
            }
        }
    }

    let mut bridge = Tally::new("latin-bridge count_latin = thm3_g");
    for (n, lambda) in config.cells(config.n_max) {
        if n == 4 && lambda > LATIN_N4_LAMBDA_MAX {
            continue;
        }
        bridge.expect_eq(
            || format!("n={n} lambda={lambda}"),
            &count_latin(n as usize, lambda, false, budget)?,
            &thm3_g(n, lambda)?,
        );
    }

    let mut reduced =
        Tally::new("latin-first-row count_latin(n,n) = n! * reduced = n! * riordan_l3");
    for n in 1..=config.n_max {
        let full = count_latin(n as usize, n, false, budget)?;
        let fixed = count_latin(n as usize, n, true, budget)?;
        reduced.expect_eq(
            || format!("n={n} full vs n! * fixed"),
            &full,
            &(factorial(n) * &fixed),
        );
        reduced.expect_eq(
            || format!("n={n} fixed vs riordan_l3"),
            &fixed,
            &riordan_l3(n)?,
        );
    }

    let mut brute = Tally::new("bruteforce-coloring count = P(G(n))");
    for n in 1..=config.n_max.min(BRUTE_N_MAX) {
        let g = build_gn(n as usize);
        let poly = config.engine_settings.chromatic_poly(&g)?;
        for lambda in n..=n + config.lambda_offset_max {
            brute.expect_eq(
                || format!("n={n} lambda={lambda}"),
                &count_colorings_bruteforce(&g, lambda, budget)?,
                &poly.eval_u64(lambda),
            );
        }
    }

    Ok(vec![
        derangements.finish(),
        bridge.finish(),
        reduced.finish(),
        brute.finish(),
    ])
}
