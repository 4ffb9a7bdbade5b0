//! Deterministic batch execution of the check suites.
//!
//! Each suite expands a configuration into a grid of independent jobs,
//! sorted by canonical key before running, so the emitted reports are
//! byte-identical for any worker count.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::arith::{primes_in, Integer, Modulus, Residue};
use crate::combinat::{abelian_square_count, abelian_square_oracle, binomial_exact};
use crate::congruences::{
    check_cc, check_harmonic_congruence, check_lemma_congruence, CcId, HarmonicCongruenceId,
    LemmaId,
};
use crate::error::{Error, Result};
use crate::identities::{check_identity, IdentityId};
use crate::report::{params_from, CheckReport, Params, Suite, Value};
use crate::theorems::{
    decomposition_check, decomposition_completeness, explore_open_question, verify_section5_step,
    verify_section6, verify_theorem1, verify_theorem_tt, Section5Id, Section6Id,
    DEFAULT_TERM_BUDGET,
};
use crate::wz::{verify_wz, WzPairId};

/// Report rendering selected on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
}

/// Which suites to expand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteSelection {
    One(Suite),
    All,
}

/// One batch run: suite selection, prime window, size caps, worker
/// count, and output shape.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub suite: SuiteSelection,
    pub prime_lo: u64,
    pub prime_hi: u64,
    pub n_max: u64,
    pub rst_lo: u64,
    pub rst_max: u64,
    pub ij_lo: u64,
    pub ij_max: u64,
    pub jobs: usize,
    pub term_budget: u128,
    pub output: OutputFormat,
    pub fail_fast: bool,
    /// Adds the proof-decomposition grid to the theorem1 suite.
    pub decomposition: bool,
}

impl Default for SuiteConfig {
    fn default() -> SuiteConfig {
        SuiteConfig {
            suite: SuiteSelection::All,
            prime_lo: 3,
            prime_hi: 13,
            n_max: 20,
            rst_lo: 1,
            rst_max: 2,
            ij_lo: 0,
            ij_max: 2,
            jobs: 1,
            term_budget: DEFAULT_TERM_BUDGET,
            output: OutputFormat::Table,
            fail_fast: false,
            decomposition: false,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.prime_lo > self.prime_hi {
            return Err(Error::ParamOutOfRange(format!(
                "prime range {}..{} is empty the wrong way",
                self.prime_lo, self.prime_hi
            )));
        }
        if self.jobs == 0 {
            return Err(Error::ParamOutOfRange("jobs must be at least 1".to_string()));
        }
        if self.rst_lo == 0 || self.rst_lo > self.rst_max {
            return Err(Error::ParamOutOfRange(format!(
                "rst range {}..{} must be increasing and start at 1 or above",
                self.rst_lo, self.rst_max
            )));
        }
        if self.ij_lo > self.ij_max {
            return Err(Error::ParamOutOfRange(format!(
                "ij range {}..{} is empty the wrong way",
                self.ij_lo, self.ij_max
            )));
        }
        Ok(())
    }
}

type JobKey = (Suite, String, Option<u64>, Vec<(String, i64)>);

#[derive(Debug, Clone)]
enum JobKind {
    Identity(IdentityId, Params),
    Harmonic(HarmonicCongruenceId, u64),
    Lemma(LemmaId, u64, Params),
    Cc(CcId, u64, u64, u64, Params),
    Theorem1(u64, u64, u64, u64),
    TheoremTt(u64, u64, u64, u64),
    Decomp(u64, u64, u64, u64),
    DecompSum(u64, u64, u64, u64),
    Section5(Section5Id, u64, Option<u64>),
    Section6(Section6Id, u64, Params),
    Wz(WzPairId, u64),
    AbelianCentral(u64),
    AbelianFixture(u64),
    AbelianOracle(u64, u64),
    AbelianPrimeSum(u64),
    OpenScan(u64, u64),
}

/// One schedulable check, sorted by the canonical key of the reports
/// it will produce.
#[derive(Debug, Clone)]
pub struct Job {
    key: JobKey,
    kind: JobKind,
}

impl Job {
    fn new(suite: Suite, id: &str, prime: Option<u64>, params: &Params, kind: JobKind) -> Job {
        let key = (
            suite,
            id.to_string(),
            prime,
            params.iter().map(|(k, v)| (k.clone(), *v)).collect(),
        );
        Job { key, kind }
    }

    fn run(&self, budget: u128) -> Result<Vec<CheckReport>> {
        match &self.kind {
            JobKind::Identity(id, params) => Ok(vec![check_identity(*id, params)?]),
            JobKind::Harmonic(id, p) => Ok(vec![check_harmonic_congruence(*id, *p)?]),
            JobKind::Lemma(id, p, params) => Ok(vec![check_lemma_congruence(*id, *p, params)?]),
            JobKind::Cc(id, p, i, j, extra) => Ok(vec![check_cc(*id, *p, *i, *j, extra)?]),
            JobKind::Theorem1(p, r, s, t) => Ok(vec![verify_theorem1(*p, *r, *s, *t, budget)?]),
            JobKind::TheoremTt(p, r, s, t) => Ok(vec![verify_theorem_tt(*p, *r, *s, *t, budget)?]),
            JobKind::Decomp(p, i, j, t) => Ok(vec![decomposition_check(*p, *i, *j, *t)?]),
            JobKind::DecompSum(p, r, s, t) => {
                Ok(vec![decomposition_completeness(*p, *r, *s, *t, budget)?])
            }
            JobKind::Section5(id, p, b) => Ok(vec![verify_section5_step(*id, *p, *b)?]),
            JobKind::Section6(id, p, params) => verify_section6(*id, *p, params, budget),
            JobKind::Wz(pair, n_max) => Ok(vec![verify_wz(*pair, *n_max)]),
            JobKind::AbelianCentral(n) => {
                let lhs = abelian_square_count(2, *n);
                let rhs = binomial_exact(2 * n, *n as i64);
                Ok(vec![CheckReport::comparing(
                    Suite::Abelian,
                    "F2_CENTRAL",
                    None,
                    params_from(&[("n", *n as i64)]),
                    None,
                    Value::Exact(lhs.into()),
                    Value::Exact(rhs.into()),
                )])
            }
            JobKind::AbelianFixture(n) => {
                // three-letter counts at lengths 0..4, frozen from the
                // string-enumeration oracle
                const FIXED: [u64; 5] = [1, 3, 15, 93, 639];
                let lhs = abelian_square_count(3, *n);
                let rhs = Integer::from(FIXED[*n as usize]);
                Ok(vec![CheckReport::comparing(
                    Suite::Abelian,
                    "F3_FIX",
                    None,
                    params_from(&[("n", *n as i64)]),
                    None,
                    Value::Exact(lhs.into()),
                    Value::Exact(rhs.into()),
                )])
            }
            JobKind::AbelianOracle(alphabet, n) => {
                let lhs = abelian_square_count(*alphabet, *n);
                let rhs = abelian_square_oracle(*alphabet, *n, budget)?;
                Ok(vec![CheckReport::comparing(
                    Suite::Abelian,
                    "F_ORACLE",
                    None,
                    params_from(&[("k", *alphabet as i64), ("n", *n as i64)]),
                    None,
                    Value::Exact(lhs.into()),
                    Value::Exact(rhs.into()),
                )])
            }
            JobKind::AbelianPrimeSum(p) => {
                // Σ_{n=1}^{p-1} f_3(n) ≡ 0 mod p², the counting face of
                // the truncated squared-sum congruence
                let modulus = Modulus::new(*p, 2);
                let sum: Integer = (1..*p).map(|n| abelian_square_count(3, n)).sum();
                Ok(vec![CheckReport::comparing(
                    Suite::Abelian,
                    "F3_SUM",
                    Some(*p),
                    Params::new(),
                    Some(modulus),
                    Value::Residue(Residue::new(sum, modulus)),
                    Value::Residue(Residue::new(Integer::from(0), modulus)),
                )])
            }
            JobKind::OpenScan(p, n) => {
                let scan = explore_open_question(*p, *n, budget)?;
                Ok(vec![CheckReport::info(
                    Suite::Section6,
                    "OPEN_Q",
                    Some(*p),
                    params_from(&[("n", *n as i64)]),
                    Some(Modulus::new(*p, 1)),
                    Value::Residue(scan.truncated),
                    Value::Residue(scan.full_box),
                )])
            }
        }
    }
}

/// Small representative index set for per-prime parameter sweeps:
/// the low end, the midpoint neighborhood, and the top end of [0, p).
fn boundary_set(p: u64) -> Vec<u64> {
    let half = (p - 1) / 2;
    let mut set = BTreeSet::new();
    for v in [
        0,
        1,
        2,
        3,
        half.saturating_sub(1),
        half,
        half + 1,
        p.saturating_sub(3),
        p.saturating_sub(2),
        p - 1,
    ] {
        if v < p {
            set.insert(v);
        }
    }
    set.into_iter().collect()
}

fn identity_jobs(cfg: &SuiteConfig, jobs: &mut Vec<Job>) {
    let suite = Suite::Identities;
    for id in IdentityId::ALL {
        match id {
            IdentityId::H1
            | IdentityId::H2
            | IdentityId::T1
            | IdentityId::T2
            | IdentityId::T4
            | IdentityId::T4A
            | IdentityId::T4B => {
                for n in 0..=cfg.n_max {
                    let params = params_from(&[("n", n as i64)]);
                    jobs.push(Job::new(suite, id.as_str(), None, &params, JobKind::Identity(id, params.clone())));
                }
            }
            IdentityId::InvBinom => {
                for k in 0..=cfg.n_max {
                    let params = params_from(&[("k", k as i64)]);
                    jobs.push(Job::new(suite, id.as_str(), None, &params, JobKind::Identity(id, params.clone())));
                }
            }
            IdentityId::DoubleBinom => {
                for p in primes_in(cfg.prime_lo, cfg.prime_hi) {
                    let params = params_from(&[("p", p as i64)]);
                    jobs.push(Job::new(suite, id.as_str(), Some(p), &params, JobKind::Identity(id, params.clone())));
                }
            }
            IdentityId::Hockey => {
                for m in 0..=cfg.n_max {
                    for n in 0..=cfg.n_max {
                        let params = params_from(&[("m", m as i64), ("n", n as i64)]);
                        jobs.push(Job::new(suite, id.as_str(), None, &params, JobKind::Identity(id, params.clone())));
                    }
                }
            }
            IdentityId::Vandermonde => {
                for b in 0..=cfg.n_max {
                    let params = params_from(&[("b", b as i64)]);
                    jobs.push(Job::new(suite, id.as_str(), None, &params, JobKind::Identity(id, params.clone())));
                }
            }
        }
    }
}

fn congruence_jobs(cfg: &SuiteConfig, jobs: &mut Vec<Job>) {
    let suite = Suite::Congruences;
    let empty = Params::new();
    for p in primes_in(cfg.prime_lo, cfg.prime_hi) {
        let half = (p - 1) / 2;
        let bset = boundary_set(p);
        if p >= 5 {
            for id in HarmonicCongruenceId::ALL {
                jobs.push(Job::new(suite, id.as_str(), Some(p), &empty, JobKind::Harmonic(id, p)));
            }
        }
        for id in LemmaId::ALL {
            if p < id.min_prime() {
                continue;
            }
            let mut push = |params: Params| {
                jobs.push(Job::new(suite, id.as_str(), Some(p), &params, JobKind::Lemma(id, p, params.clone())));
            };
            match id {
                LemmaId::B1 | LemmaId::B2 | LemmaId::C7 | LemmaId::CentralSum => push(Params::new()),
                LemmaId::BinomPR => {
                    for &r in bset.iter().filter(|&&r| r >= 1) {
                        push(params_from(&[("r", r as i64)]));
                    }
                }
                LemmaId::Wolstenholme => {
                    for a in cfg.ij_lo.max(1)..=cfg.ij_max.max(1) {
                        for b in 1..=a {
                            push(params_from(&[("a", a as i64), ("b", b as i64)]));
                        }
                    }
                }
                LemmaId::LucasStep => {
                    for n1 in cfg.ij_lo..=cfg.ij_max {
                        for k1 in 0..=n1 {
                            for &n0 in &bset {
                                for &k0 in &bset {
                                    push(params_from(&[
                                        ("n1", n1 as i64),
                                        ("n0", n0 as i64),
                                        ("k1", k1 as i64),
                                        ("k0", k0 as i64),
                                    ]));
                                }
                            }
                        }
                    }
                }
                LemmaId::KPlusP => {
                    for &k in &bset {
                        for &m in bset.iter().filter(|&&m| m > k) {
                            push(params_from(&[("k", k as i64), ("m", m as i64)]));
                        }
                    }
                }
                LemmaId::Zhs => {
                    for &a in bset.iter().filter(|&&a| a <= half) {
                        push(params_from(&[("a", a as i64)]));
                    }
                }
                LemmaId::HalfHarmonic => {
                    for part in 1..=2 {
                        push(params_from(&[("part", part)]));
                    }
                }
                LemmaId::BinomPm1 => {
                    for &j in &bset {
                        push(params_from(&[("j", j as i64)]));
                    }
                }
                LemmaId::BinomPSign => {
                    for &r in bset.iter().filter(|&&r| r >= 1) {
                        push(params_from(&[("r", r as i64)]));
                    }
                }
                LemmaId::PowerSum => {
                    let mut is = BTreeSet::new();
                    for i in [1, 2, 3, p - 2, p, p + 1] {
                        if i >= 1 && i % (p - 1) != 0 {
                            is.insert(i);
                        }
                    }
                    for i in is {
                        push(params_from(&[("i", i as i64)]));
                    }
                }
                LemmaId::MidCentral => {
                    for &c in bset.iter().filter(|&&c| c > half && c < p) {
                        push(params_from(&[("c", c as i64)]));
                    }
                }
            }
        }
        for id in CcId::ALL {
            for i in cfg.ij_lo..=cfg.ij_max {
                for j in cfg.ij_lo..=cfg.ij_max {
                    let base = [("i", i as i64), ("j", j as i64)];
                    let mut push = |extra: Params| {
                        let mut shown = extra.clone();
                        shown.extend(base.iter().map(|(k, v)| (k.to_string(), *v)));
                        jobs.push(Job::new(suite, id.as_str(), Some(p), &shown, JobKind::Cc(id, p, i, j, extra)));
                    };
                    match id {
                        CcId::Cc22 => {
                            for &r in bset.iter().filter(|&&r| r >= 1) {
                                push(params_from(&[("r", r as i64)]));
                            }
                        }
                        CcId::Cc2 => push(Params::new()),
                        CcId::Cc1 => {
                            for &k in &bset {
                                for &m in bset.iter().filter(|&&m| m <= k) {
                                    push(params_from(&[("k", k as i64), ("m", m as i64)]));
                                }
                            }
                        }
                        CcId::Cc11 => {
                            for &k in &bset {
                                push(params_from(&[("k", k as i64)]));
                            }
                        }
                    }
                }
            }
        }
    }
}

fn theorem1_jobs(cfg: &SuiteConfig, jobs: &mut Vec<Job>) {
    let suite = Suite::Theorem1;
    for p in primes_in(cfg.prime_lo, cfg.prime_hi) {
        for r in cfg.rst_lo..=cfg.rst_max {
            for s in cfg.rst_lo..=cfg.rst_max {
                for t in cfg.rst_lo..=cfg.rst_max {
                    let params = params_from(&[("r", r as i64), ("s", s as i64), ("t", t as i64)]);
                    jobs.push(Job::new(suite, "SS", Some(p), &params, JobKind::Theorem1(p, r, s, t)));
                }
            }
        }
        if cfg.decomposition {
            for i in cfg.ij_lo..=cfg.ij_max {
                for j in cfg.ij_lo..=cfg.ij_max {
                    for t in cfg.rst_lo..=cfg.rst_max {
                        let params = params_from(&[("i", i as i64), ("j", j as i64), ("t", t as i64)]);
                        jobs.push(Job::new(suite, "DECOMP", Some(p), &params, JobKind::Decomp(p, i, j, t)));
                    }
                }
            }
            for r in cfg.rst_lo..=cfg.rst_max.min(2) {
                for s in cfg.rst_lo..=cfg.rst_max.min(2) {
                    for t in cfg.rst_lo..=cfg.rst_max {
                        let params = params_from(&[("r", r as i64), ("s", s as i64), ("t", t as i64)]);
                        jobs.push(Job::new(suite, "DECOMP_SUM", Some(p), &params, JobKind::DecompSum(p, r, s, t)));
                    }
                }
            }
        }
    }
}

fn theorem_tt_jobs(cfg: &SuiteConfig, jobs: &mut Vec<Job>) {
    for p in primes_in(cfg.prime_lo, cfg.prime_hi) {
        for r in cfg.rst_lo..=cfg.rst_max {
            for s in cfg.rst_lo..=cfg.rst_max {
                for t in cfg.rst_lo..=cfg.rst_max {
                    let params = params_from(&[("r", r as i64), ("s", s as i64), ("t", t as i64)]);
                    jobs.push(Job::new(Suite::TheoremTT, "TT", Some(p), &params, JobKind::TheoremTt(p, r, s, t)));
                }
            }
        }
    }
}

fn section5_jobs(cfg: &SuiteConfig, jobs: &mut Vec<Job>) {
    let suite = Suite::Section5;
    let empty = Params::new();
    for p in primes_in(cfg.prime_lo, cfg.prime_hi) {
        for id in Section5Id::ALL {
            if id == Section5Id::News22 {
                for b in 0..=(p - 1) / 2 {
                    let params = params_from(&[("b", b as i64)]);
                    jobs.push(Job::new(suite, id.as_str(), Some(p), &params, JobKind::Section5(id, p, Some(b))));
                }
            } else {
                jobs.push(Job::new(suite, id.as_str(), Some(p), &empty, JobKind::Section5(id, p, None)));
            }
        }
    }
}

/// Nondecreasing radius tuples over {1..cap}^n; box sums are symmetric
/// under coordinate permutation, so one representative per multiset.
fn radius_multisets(n: u64, cap: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n as usize);
    fn rec(n: u64, cap: u64, lo: u64, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if current.len() == n as usize {
            out.push(current.clone());
            return;
        }
        for r in lo..=cap {
            current.push(r);
            rec(n, cap, r, current, out);
            current.pop();
        }
    }
    rec(n, cap, 1, &mut current, &mut out);
    out
}

fn section6_jobs(cfg: &SuiteConfig, jobs: &mut Vec<Job>) {
    let suite = Suite::Section6;
    let empty = Params::new();
    for p in primes_in(cfg.prime_lo, cfg.prime_hi) {
        for id in [Section6Id::Kernel, Section6Id::CtPiece1, Section6Id::CtPiece2, Section6Id::CtTotal] {
            jobs.push(Job::new(suite, id.as_str(), Some(p), &empty, JobKind::Section6(id, p, Params::new())));
        }
        if p < 5 {
            continue;
        }
        for id in [Section6Id::PlainDouble, Section6Id::Super5] {
            for r in cfg.rst_lo..=cfg.rst_max {
                for s in cfg.rst_lo..=cfg.rst_max {
                    let params = params_from(&[("r", r as i64), ("s", s as i64)]);
                    jobs.push(Job::new(suite, id.as_str(), Some(p), &params, JobKind::Section6(id, p, params.clone())));
                }
            }
        }
        for n in [4u64, 5] {
            for radii in radius_multisets(n, cfg.rst_max.min(2)) {
                let mut params = params_from(&[("n", n as i64)]);
                for (idx, r) in radii.iter().enumerate() {
                    params.insert(format!("r{}", idx + 1), *r as i64);
                }
                jobs.push(Job::new(suite, Section6Id::Prop7.as_str(), Some(p), &params, JobKind::Section6(Section6Id::Prop7, p, params.clone())));
            }
        }
    }
}

fn wz_jobs(cfg: &SuiteConfig, jobs: &mut Vec<Job>) {
    for pair in WzPairId::ALL {
        let n_max = cfg.n_max.max(2);
        let params = params_from(&[("n_max", n_max as i64)]);
        jobs.push(Job::new(Suite::Wz, pair.as_str(), None, &params, JobKind::Wz(pair, n_max)));
    }
}

fn abelian_jobs(cfg: &SuiteConfig, jobs: &mut Vec<Job>) {
    let suite = Suite::Abelian;
    for n in 0..=cfg.n_max {
        let params = params_from(&[("n", n as i64)]);
        jobs.push(Job::new(suite, "F2_CENTRAL", None, &params, JobKind::AbelianCentral(n)));
    }
    for n in 0..=4 {
        let params = params_from(&[("n", n as i64)]);
        jobs.push(Job::new(suite, "F3_FIX", None, &params, JobKind::AbelianFixture(n)));
    }
    for alphabet in 1..=4 {
        for n in 0..=3 {
            let params = params_from(&[("k", alphabet as i64), ("n", n as i64)]);
            jobs.push(Job::new(suite, "F_ORACLE", None, &params, JobKind::AbelianOracle(alphabet, n)));
        }
    }
    for p in primes_in(cfg.prime_lo, cfg.prime_hi) {
        jobs.push(Job::new(suite, "F3_SUM", Some(p), &Params::new(), JobKind::AbelianPrimeSum(p)));
    }
}

/// Expands the configured suites into a canonically ordered job list.
pub fn build_jobs(cfg: &SuiteConfig) -> Result<Vec<Job>> {
    cfg.validate()?;
    let suites: Vec<Suite> = match cfg.suite {
        SuiteSelection::One(s) => vec![s],
        SuiteSelection::All => Suite::ALL.to_vec(),
    };
    let mut jobs = Vec::new();
    for suite in suites {
        match suite {
            Suite::Identities => identity_jobs(cfg, &mut jobs),
            Suite::Congruences => congruence_jobs(cfg, &mut jobs),
            Suite::Theorem1 => theorem1_jobs(cfg, &mut jobs),
            Suite::TheoremTT => theorem_tt_jobs(cfg, &mut jobs),
            Suite::Section5 => section5_jobs(cfg, &mut jobs),
            Suite::Section6 => section6_jobs(cfg, &mut jobs),
            Suite::Wz => wz_jobs(cfg, &mut jobs),
            Suite::Abelian => abelian_jobs(cfg, &mut jobs),
        }
    }
    jobs.sort_by(|a, b| a.key.cmp(&b.key));
    Ok(jobs)
}

fn run_batch(batch: &[Job], jobs: usize, budget: u128) -> Result<Vec<CheckReport>> {
    let results: Vec<Result<Vec<CheckReport>>> = if jobs <= 1 {
        batch.iter().map(|job| job.run(budget)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::ParamOutOfRange(format!("worker pool: {e}")))?;
        pool.install(|| batch.par_iter().map(|job| job.run(budget)).collect())
    };
    let mut reports = Vec::new();
    for r in results {
        reports.extend(r?);
    }
    Ok(reports)
}

/// Runs a job list and presents the reports in canonical order. With
/// fail_fast, stops after the chunk containing the first failure in
/// schedule order and truncates the stream just past it.
pub fn run_jobs(jobs: Vec<Job>, cfg: &SuiteConfig) -> Result<Vec<CheckReport>> {
    let mut reports = Vec::new();
    if cfg.fail_fast {
        let chunk = (cfg.jobs * 4).max(16);
        for batch in jobs.chunks(chunk) {
            let produced = run_batch(batch, cfg.jobs, cfg.term_budget)?;
            reports.extend(produced);
            if let Some(pos) = reports.iter().position(|r| !r.passed()) {
                reports.truncate(pos + 1);
                break;
            }
        }
    } else {
        reports = run_batch(&jobs, cfg.jobs, cfg.term_budget)?;
    }
    // jobs are scheduled in key order, but a multi-report job may tag
    // its parts with params that interleave across neighboring jobs
    reports.sort_by(|a, b| a.canonical_key().cmp(&b.canonical_key()));
    Ok(reports)
}

/// Expands and runs one configuration.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Vec<CheckReport>> {
    run_jobs(build_jobs(cfg)?, cfg)
}

/// Exploratory sweep of the open n-dimensional question; every report
/// is informational.
pub fn run_open_scan(cfg: &SuiteConfig, dims_lo: u64, dims_hi: u64) -> Result<Vec<CheckReport>> {
    cfg.validate()?;
    if dims_lo > dims_hi || dims_lo < 2 {
        return Err(Error::ParamOutOfRange(format!(
            "dimension range {dims_lo}..{dims_hi} must be increasing and start at 2"
        )));
    }
    let mut jobs = Vec::new();
    for p in primes_in(cfg.prime_lo, cfg.prime_hi) {
        for n in dims_lo..=dims_hi {
            let params = params_from(&[("n", n as i64)]);
            jobs.push(Job::new(Suite::Section6, "OPEN_Q", Some(p), &params, JobKind::OpenScan(p, n)));
        }
    }
    jobs.sort_by(|a, b| a.key.cmp(&b.key));
    run_jobs(jobs, cfg)
}

pub fn all_passed(reports: &[CheckReport]) -> bool {
    reports.iter().all(|r| r.passed())
}
