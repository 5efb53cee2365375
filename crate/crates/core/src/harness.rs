//! Seeded Monte Carlo comparison of CP list sizes against an RS baseline.
//!
//! Every trial draws its randomness from a ChaCha stream selected by
//! `(q, message, trial)`, so results do not depend on scheduling and the two
//! code paths of a trial see the same error pattern.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::channel::ErrorPattern;
use crate::codebook::{cp_encode, rs_encode_dim, CodeParams, FieldCodeword, MessageSpace};
use crate::error::{Error, Result};
use crate::field::is_prime;
use crate::list::{cp_list_decode_with, list_decode, s_zero, t_inf, ListBackend, ListOptions};
use crate::poly::Polynomial;

pub const DEFAULT_SEED: u64 = 20_240_917;

pub const CSV_HEADER: [&str; 11] = [
    "q",
    "k",
    "n",
    "t_inf",
    "trials",
    "avg_list_C",
    "avg_list_Cprime",
    "empty_rate_C",
    "empty_rate_Cprime",
    "causal_rate_C",
    "seed",
];

/// Extra columns written by [`write_csv`] in detailed mode.
pub const CSV_DETAIL_HEADER: [&str; 8] = [
    "avg_list_C_all",
    "avg_list_Cprime_all",
    "causal_rate_Cprime",
    "failures_C",
    "failures_Cprime",
    "s_C",
    "s_Cprime",
    "baseline",
];

/// Which code `C'` the CP code is compared against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Baseline {
    /// CP code with messages of degree at most `k` against RS of dimension
    /// `k + 2`; both decoded at the RS code's limiting radius, which is also
    /// the injected weight.
    #[default]
    AnalysisConsistent,
    /// CP code of dimension `k` at its own limiting radius against RS of
    /// dimension `k + 1` at the RS code's own limiting radius.
    OwnRadius,
    /// CP code of dimension `k` against the GRS code of the same dimension.
    Scaled,
}

impl Baseline {
    pub const ALL: [Baseline; 3] = [Baseline::AnalysisConsistent, Baseline::OwnRadius, Baseline::Scaled];

    pub fn name(self) -> &'static str {
        match self {
            Baseline::AnalysisConsistent => "analysis-consistent",
            Baseline::OwnRadius => "own-radius",
            Baseline::Scaled => "scaled",
        }
    }
}

impl fmt::Display for Baseline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Baseline {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Baseline::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::InvalidParameters(format!("unknown baseline '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub primes: Vec<u32>,
    pub messages_per_q: usize,
    pub trials_per_message: usize,
    pub baseline: Baseline,
    pub backend: ListBackend,
    pub seed: u64,
    /// Worker threads; 0 picks the available parallelism.
    pub threads: usize,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            primes: (6..50).filter(|&q| is_prime(q)).collect(),
            messages_per_q: 5,
            trials_per_message: 200,
            baseline: Baseline::default(),
            backend: ListBackend::default(),
            seed: DEFAULT_SEED,
            threads: 0,
        }
    }
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidParameters(format!("config: {e}")))
    }

    pub fn validate(&self) -> Result<()> {
        if self.messages_per_q == 0 || self.messages_per_q >= 1 << 16 {
            return Err(Error::InvalidParameters("messages_per_q must lie in [1, 65535]".into()));
        }
        if self.trials_per_message == 0 || self.trials_per_message >= 1 << 24 {
            return Err(Error::InvalidParameters("trials_per_message must lie in [1, 2^24)".into()));
        }
        for &q in &self.primes {
            TrialPlan::new(q, self.baseline, self.backend)?;
        }
        Ok(())
    }
}

/// Message label `k = floor(q/2) - 1`.
pub fn k_rule(q: u32) -> usize {
    (q / 2) as usize - 1
}

/// Resolved per-`q` parameters of both code paths.
#[derive(Debug, Clone)]
pub struct TrialPlan {
    pub q: u32,
    /// Label reported in the table.
    pub k: usize,
    pub baseline: Baseline,
    pub backend: ListBackend,
    /// CP code parameters; messages `f` satisfy `X f` in `F_p(cp.k(), q)`.
    pub cp: CodeParams,
    /// Injected error weight.
    pub weight: usize,
    pub c_dim: usize,
    pub c_s: usize,
    pub cprime_dim: usize,
    pub cprime_s: usize,
    /// The baseline word is divided by `alpha_i` before decoding (GRS).
    pub cprime_scaled: bool,
}

impl TrialPlan {
    pub fn new(q: u32, baseline: Baseline, backend: ListBackend) -> Result<Self> {
        if !is_prime(q) || q < 7 {
            return Err(Error::InvalidParameters(format!("q = {q} must be a prime of at least 7")));
        }
        let k = k_rule(q);
        let n = q as usize - 1;
        let (cp_k, c_dim, cprime_dim, cprime_scaled) = match baseline {
            Baseline::AnalysisConsistent => (k + 1, k + 2, k + 2, false),
            Baseline::OwnRadius => (k, k, k + 1, false),
            Baseline::Scaled => (k, k, k, true),
        };
        let cp = CodeParams::new(q, cp_k)?;
        let (cprime_s, cprime_t) = s_zero(n, cprime_dim)?;
        let (c_s, c_t) = s_zero(n, c_dim)?;
        let weight = match baseline {
            Baseline::AnalysisConsistent => cprime_t,
            _ => c_t,
        };
        debug_assert_eq!(t_inf(n, c_dim)?, c_t);
        Ok(TrialPlan { q, k, baseline, backend, cp, weight, c_dim, c_s, cprime_dim, cprime_s, cprime_scaled })
    }

    pub fn n(&self) -> usize {
        self.cp.n()
    }

    /// A uniformly random message `f` with `X f` in the CP message space.
    pub fn sample_message<R: Rng + ?Sized>(&self, rng: &mut R) -> Polynomial {
        let free = MessageSpace::FpPrime.free_exponents(self.cp.p(), self.cp.k());
        let len = free.last().map_or(0, |e| e + 1);
        let mut coeffs = vec![0u32; len];
        for e in free {
            coeffs[e] = rng.gen_range(0..self.q);
        }
        Polynomial::from_coeffs(self.cp.field(), coeffs).expect("coefficients lie in the field")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CodePath {
    C,
    Cprime,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub path: CodePath,
    pub weight: usize,
    /// Zero when decoding failed.
    pub list_size: usize,
    pub causal: bool,
    pub error: Option<String>,
}

fn trial_inner<R: Rng + ?Sized>(
    f: &Polynomial,
    which: CodePath,
    plan: &TrialPlan,
    rng: &mut R,
) -> Result<(usize, bool)> {
    let cp = &plan.cp;
    let xf = f.shift(1);
    if !MessageSpace::Fp.contains(&xf, cp)? {
        return Err(Error::NotInMessageSpace);
    }
    let pattern = ErrorPattern::sample(plan.n(), plan.weight, plan.q, rng)?;
    match which {
        CodePath::C => {
            let received = pattern.apply_complex(&cp_encode(&xf, cp)?, cp)?;
            let opts = ListOptions { backend: plan.backend, ambient_dim: Some(plan.c_dim) };
            let out = cp_list_decode_with(&received, plan.c_s, cp, &opts)?;
            Ok((out.list.len(), out.list.contains(&xf)))
        }
        CodePath::Cprime => {
            let mut y = pattern.apply_field(&rs_encode_dim(&xf, cp, plan.n())?, cp);
            let target = if plan.cprime_scaled {
                let fl = cp.field();
                y = FieldCodeword(y.0.iter().zip(cp.alpha_inverses()).map(|(&c, &ai)| fl.mul(c, ai)).collect());
                f.clone()
            } else {
                xf
            };
            let list = list_decode(&y, plan.cprime_s, cp, plan.cprime_dim, plan.backend)?;
            Ok((list.len(), list.contains(&target)))
        }
    }
}

/// One transmission of `f` over the chosen path. Decoder errors are recorded, never raised.
pub fn run_trial<R: Rng + ?Sized>(f: &Polynomial, which: CodePath, plan: &TrialPlan, rng: &mut R) -> TrialRecord {
    match trial_inner(f, which, plan, rng) {
        Ok((list_size, causal)) => TrialRecord { path: which, weight: plan.weight, list_size, causal, error: None },
        Err(e) => TrialRecord { path: which, weight: plan.weight, list_size: 0, causal: false, error: Some(e.to_string()) },
    }
}

/// Generator for trial `trial` of message `message` at field size `q`.
pub fn trial_rng(seed: u64, q: u32, message: usize, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((q as u64) << 40) | ((message as u64) << 24) | trial as u64);
    rng
}

/// Generator used to draw message `message` at field size `q`.
pub fn message_rng(seed: u64, q: u32, message: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((1 << 63) | ((q as u64) << 40) | ((message as u64) << 24));
    rng
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub q: u32,
    pub k: usize,
    pub n: usize,
    pub t_inf: usize,
    pub trials: usize,
    /// Mean list size over trials with a nonempty list (NaN if there are none).
    pub avg_list_c: f64,
    pub avg_list_cprime: f64,
    pub empty_rate_c: f64,
    pub empty_rate_cprime: f64,
    pub causal_rate_c: f64,
    pub seed: u64,
    /// Mean list size over all trials, empty lists and failures counted as 0.
    pub avg_list_c_all: f64,
    pub avg_list_cprime_all: f64,
    pub causal_rate_cprime: f64,
    pub failures_c: usize,
    pub failures_cprime: usize,
    pub s_c: usize,
    pub s_cprime: usize,
    pub baseline: Baseline,
}

#[derive(Default)]
struct PathSummary {
    nonempty: usize,
    total: usize,
    causal: usize,
    failures: usize,
}

impl PathSummary {
    fn add(&mut self, r: &TrialRecord) {
        if r.list_size > 0 {
            self.nonempty += 1;
        }
        self.total += r.list_size;
        self.causal += r.causal as usize;
        self.failures += r.error.is_some() as usize;
    }

    fn avg_nonempty(&self) -> f64 {
        if self.nonempty == 0 {
            f64::NAN
        } else {
            self.total as f64 / self.nonempty as f64
        }
    }
}

fn worker_count(config: &ExperimentConfig, jobs: usize) -> usize {
    let avail = std::thread::available_parallelism().map_or(1, |n| n.get());
    let t = if config.threads == 0 { avail } else { config.threads };
    t.clamp(1, jobs.max(1))
}

/// Every trial record for one field size, in `(message, trial)` order with the
/// C record before the C' record.
pub fn run_q_records(config: &ExperimentConfig, q: u32) -> Result<(TrialPlan, Vec<TrialRecord>)> {
    let plan = TrialPlan::new(q, config.baseline, config.backend)?;
    let messages: Vec<Polynomial> =
        (0..config.messages_per_q).map(|m| plan.sample_message(&mut message_rng(config.seed, q, m))).collect();
    let jobs = config.messages_per_q * config.trials_per_message;
    let workers = worker_count(config, jobs);
    let chunk = jobs.div_ceil(workers);
    let run_job = |j: usize| {
        let (m, t) = (j / config.trials_per_message, j % config.trials_per_message);
        let f = &messages[m];
        let c = run_trial(f, CodePath::C, &plan, &mut trial_rng(config.seed, q, m, t));
        let cp = run_trial(f, CodePath::Cprime, &plan, &mut trial_rng(config.seed, q, m, t));
        [c, cp]
    };
    let records = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let run_job = &run_job;
                scope.spawn(move || {
                    (w * chunk..((w + 1) * chunk).min(jobs)).flat_map(run_job).collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("trial worker panicked"))
            .collect::<Vec<_>>()
    });
    Ok((plan, records))
}

pub fn summarize(config: &ExperimentConfig, plan: &TrialPlan, records: &[TrialRecord]) -> TableRow {
    let (mut c, mut cp) = (PathSummary::default(), PathSummary::default());
    for r in records {
        match r.path {
            CodePath::C => c.add(r),
            CodePath::Cprime => cp.add(r),
        }
    }
    let trials = config.messages_per_q * config.trials_per_message;
    let tf = trials as f64;
    TableRow {
        q: plan.q,
        k: plan.k,
        n: plan.n(),
        t_inf: plan.weight,
        trials,
        avg_list_c: c.avg_nonempty(),
        avg_list_cprime: cp.avg_nonempty(),
        empty_rate_c: (trials - c.nonempty) as f64 / tf,
        empty_rate_cprime: (trials - cp.nonempty) as f64 / tf,
        causal_rate_c: c.causal as f64 / tf,
        seed: config.seed,
        avg_list_c_all: c.total as f64 / tf,
        avg_list_cprime_all: cp.total as f64 / tf,
        causal_rate_cprime: cp.causal as f64 / tf,
        failures_c: c.failures,
        failures_cprime: cp.failures,
        s_c: plan.c_s,
        s_cprime: plan.cprime_s,
        baseline: plan.baseline,
    }
}

pub fn run_table(config: &ExperimentConfig) -> Result<Vec<TableRow>> {
    config.validate()?;
    config
        .primes
        .iter()
        .map(|&q| {
            let (plan, records) = run_q_records(config, q)?;
            Ok(summarize(config, &plan, &records))
        })
        .collect()
}

/// Writes the table as CSV with a header row; `detailed` appends the extra columns.
pub fn write_csv<W: Write>(rows: &[TableRow], out: W, detailed: bool) -> Result<()> {
    let io = |e: csv::Error| Error::Internal(format!("csv output: {e}"));
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    let mut header: Vec<&str> = CSV_HEADER.to_vec();
    if detailed {
        header.extend(CSV_DETAIL_HEADER);
    }
    w.write_record(&header).map_err(io)?;
    for r in rows {
        let mut rec = vec![
            r.q.to_string(),
            r.k.to_string(),
            r.n.to_string(),
            r.t_inf.to_string(),
            r.trials.to_string(),
            r.avg_list_c.to_string(),
            r.avg_list_cprime.to_string(),
            r.empty_rate_c.to_string(),
            r.empty_rate_cprime.to_string(),
            r.causal_rate_c.to_string(),
            r.seed.to_string(),
        ];
        if detailed {
            rec.extend([
                r.avg_list_c_all.to_string(),
                r.avg_list_cprime_all.to_string(),
                r.causal_rate_cprime.to_string(),
                r.failures_c.to_string(),
                r.failures_cprime.to_string(),
                r.s_c.to_string(),
                r.s_cprime.to_string(),
                r.baseline.to_string(),
            ]);
        }
        w.write_record(&rec).map_err(io)?;
    }
    w.flush().map_err(|e| Error::Internal(format!("csv output: {e}")))
}
