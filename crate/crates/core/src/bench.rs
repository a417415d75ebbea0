//! Instrumented decoder comparison.
//!
//! For each error weight `t` the sweep encodes random messages, adds an
//! error pattern of weight exactly `t`, and runs every selected decoder on
//! the same corrupted word, recording
//!
//! * rank comparisons and determinant evaluations in the error-count search,
//! * field multiplications (see [`gf::mul_count`](crate::gf::mul_count)),
//! * optionally, wall time.
//!
//! Randomness is a ChaCha8 stream seeded per trial with `seed ^ trial_index`,
//! so a report depends only on its configuration. Wall time is the one
//! exception, and is therefore off unless requested.

use std::fmt::Write as _;
use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::code::RsCode;
use crate::decode::Decoder;
use crate::error::{Error, Result};
use crate::gf::{self, Fe};

#[derive(Debug, Clone)]
pub struct TrialConfig {
    pub code: RsCode,
    /// Error weights to sweep, each at most `tau`.
    pub t_values: Vec<usize>,
    pub trials_per_t: usize,
    pub seed: u64,
    pub decoders: Vec<Decoder>,
    pub measure_time: bool,
}

impl TrialConfig {
    /// Every weight `0..=tau` and every decoder, without timing.
    pub fn full_sweep(code: RsCode, trials_per_t: usize, seed: u64) -> TrialConfig {
        TrialConfig {
            t_values: (0..=code.tau()).collect(),
            code,
            trials_per_t,
            seed,
            decoders: Decoder::ALL.to_vec(),
            measure_time: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials_per_t == 0 {
            return Err(Error::ConfigInvalid("trials_per_t must be at least 1".into()));
        }
        let tau = self.code.tau();
        if let Some(&t) = self.t_values.iter().find(|&&t| t > tau) {
            return Err(Error::ConfigInvalid(format!(
                "error weight {t} exceeds the correction capability {tau}"
            )));
        }
        Ok(())
    }
}

/// Aggregated counters for one decoder at one error weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialRow {
    pub decoder: Decoder,
    pub t: usize,
    pub trials: u64,
    pub successes: u64,
    pub failures: u64,
    pub rank_checks: u64,
    pub det_checks: u64,
    pub mul_count: u64,
    /// Total wall time, when measured.
    pub wall_ns: Option<u128>,
}

impl TrialRow {
    pub fn rank_checks_mean(&self) -> f64 {
        self.rank_checks as f64 / self.trials as f64
    }

    pub fn det_checks_mean(&self) -> f64 {
        self.det_checks as f64 / self.trials as f64
    }

    pub fn mul_count_mean(&self) -> f64 {
        self.mul_count as f64 / self.trials as f64
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TrialReport {
    pub rows: Vec<TrialRow>,
}

impl TrialReport {
    pub fn row(&self, decoder: Decoder, t: usize) -> Option<&TrialRow> {
        self.rows.iter().find(|r| r.decoder == decoder && r.t == t)
    }
}

/// `t` distinct positions out of `n`, chosen by a partial Fisher-Yates
/// shuffle, each paired with a uniformly random nonzero value.
pub fn random_error_pattern(rng: &mut impl Rng, n: usize, q: u32, t: usize) -> Vec<(usize, Fe)> {
    assert!(t <= n, "cannot place {t} errors in {n} positions");
    let mut idx: Vec<usize> = (0..n).collect();
    for i in 0..t {
        let j = rng.gen_range(i..n);
        idx.swap(i, j);
    }
    idx.truncate(t);
    idx.into_iter()
        .map(|pos| (pos, Fe(rng.gen_range(1..q))))
        .collect()
}

pub fn run_sweep(cfg: &TrialConfig) -> Result<TrialReport> {
    cfg.validate()?;
    let code = &cfg.code;
    let f = code.field();
    let mut rows: Vec<TrialRow> = cfg
        .decoders
        .iter()
        .flat_map(|&decoder| {
            cfg.t_values.iter().map(move |&t| TrialRow {
                decoder,
                t,
                trials: cfg.trials_per_t as u64,
                successes: 0,
                failures: 0,
                rank_checks: 0,
                det_checks: 0,
                mul_count: 0,
                wall_ns: cfg.measure_time.then_some(0),
            })
        })
        .collect();
    let per_decoder = cfg.t_values.len();

    for (ti, &t) in cfg.t_values.iter().enumerate() {
        for trial in 0..cfg.trials_per_t {
            let index = (ti * cfg.trials_per_t + trial) as u64;
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ index);
            let msg: Vec<Fe> = (0..code.k())
                .map(|_| Fe(rng.gen_range(0..f.order())))
                .collect();
            let sent = code.encode(&msg)?;
            let mut received = sent.clone().into_symbols();
            for (pos, v) in random_error_pattern(&mut rng, code.n(), f.order(), t) {
                received[pos] = f.add(received[pos], v);
            }

            for (di, &decoder) in cfg.decoders.iter().enumerate() {
                let row = &mut rows[di * per_decoder + ti];
                let muls = gf::mul_count();
                let start = Instant::now();
                let (result, trace) = decoder.decode_traced(code, &received);
                let elapsed = start.elapsed().as_nanos();
                row.mul_count += gf::mul_count() - muls;
                row.rank_checks += trace.rank_checks as u64;
                row.det_checks += trace.det_checks as u64;
                if let Some(w) = row.wall_ns.as_mut() {
                    *w += elapsed;
                }
                match result {
                    Ok(out) if out.codeword == sent => row.successes += 1,
                    _ => row.failures += 1,
                }
            }
        }
    }
    Ok(TrialReport { rows })
}

// total / count, rounded half up to six decimals, without floating point.
fn fixed6(total: u128, count: u64) -> String {
    let count = count as u128;
    let scaled = (total * 1_000_000 + count / 2) / count;
    format!("{}.{:06}", scaled / 1_000_000, scaled % 1_000_000)
}

/// One JSON object per row, newline-terminated, keys in a fixed order:
/// `decoder, t, trials, successes, failures, rank_checks_mean,
/// det_checks_mean, mul_count_mean, wall_ns_mean`. Means carry six
/// fractional digits; `wall_ns_mean` is `null` when time was not measured.
pub fn report_to_json(report: &TrialReport) -> String {
    let mut out = String::new();
    for r in &report.rows {
        let wall = match r.wall_ns {
            Some(ns) => fixed6(ns, r.trials),
            None => "null".to_string(),
        };
        writeln!(
            out,
            "{{\"decoder\":\"{}\",\"t\":{},\"trials\":{},\"successes\":{},\"failures\":{},\
             \"rank_checks_mean\":{},\"det_checks_mean\":{},\"mul_count_mean\":{},\"wall_ns_mean\":{}}}",
            r.decoder.name(),
            r.t,
            r.trials,
            r.successes,
            r.failures,
            fixed6(r.rank_checks as u128, r.trials),
            fixed6(r.det_checks as u128, r.trials),
            fixed6(r.mul_count as u128, r.trials),
            wall,
        )
        .expect("writing to a String cannot fail");
    }
    out
}
