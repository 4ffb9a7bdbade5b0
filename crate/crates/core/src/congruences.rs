//! Congruence catalog: twisted harmonic sums mod p and p², binomial
//! lemmas mod p through p³, and box-binomial expansions at multiples
//! of p.
//!
//! Every left side is evaluated in exact integer or rational
//! arithmetic and reduced once at the end; right sides are small
//! polynomials in the Fermat quotient q_p(2) or explicit rationals.
//! No check borrows an intermediate reduction from another.

use std::str::FromStr;

use num_traits::{One, Zero};

use crate::arith::{
    alt_sign, fermat_quotient_exact, is_prime, legendre, make_residue, Integer, Modulus, Rational,
};
use crate::combinat::binomial_exact;
use crate::error::{Error, Result};
use crate::harmonic::{harmonic_eval_exact, harmonic_prefix, HarmonicSignature};
use crate::report::{get_param, params_from, CheckReport, Params, Suite, Value};

// --- twisted harmonic catalog --------------------------------------------

/// The ten catalogued congruences for H_{p-1}(s; x).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HarmonicCongruenceId {
    C1,
    C2,
    C3,
    C4,
    C44,
    C66,
    C10,
    C55,
    C5,
    C6,
}

impl HarmonicCongruenceId {
    pub fn as_str(&self) -> &'static str {
        match self {
            HarmonicCongruenceId::C1 => "C1",
            HarmonicCongruenceId::C2 => "C2",
            HarmonicCongruenceId::C3 => "C3",
            HarmonicCongruenceId::C4 => "C4",
            HarmonicCongruenceId::C44 => "C44",
            HarmonicCongruenceId::C66 => "C66",
            HarmonicCongruenceId::C10 => "C10",
            HarmonicCongruenceId::C55 => "C55",
            HarmonicCongruenceId::C5 => "C5",
            HarmonicCongruenceId::C6 => "C6",
        }
    }

    pub const ALL: [HarmonicCongruenceId; 10] = [
        HarmonicCongruenceId::C1,
        HarmonicCongruenceId::C2,
        HarmonicCongruenceId::C3,
        HarmonicCongruenceId::C4,
        HarmonicCongruenceId::C44,
        HarmonicCongruenceId::C66,
        HarmonicCongruenceId::C10,
        HarmonicCongruenceId::C55,
        HarmonicCongruenceId::C5,
        HarmonicCongruenceId::C6,
    ];

    /// (signature, modulus exponent, coefficient of q, coefficient of q²).
    fn spec(&self) -> (HarmonicSignature, u32, i64, i64) {
        let half = Rational::new(Integer::one(), Integer::from(2));
        let two = Rational::from_integer(Integer::from(2));
        let minus_one = Rational::from_integer(-Integer::one());
        match self {
            HarmonicCongruenceId::C1 => (HarmonicSignature::plain(vec![1]), 2, 0, 0),
            HarmonicCongruenceId::C2 => (HarmonicSignature::plain(vec![2]), 1, 0, 0),
            HarmonicCongruenceId::C3 => (HarmonicSignature::plain(vec![1, 1]), 1, 0, 0),
            HarmonicCongruenceId::C4 => (HarmonicSignature::new(vec![-1], two), 2, -2, 0),
            HarmonicCongruenceId::C44 => (HarmonicSignature::new(vec![-1], half), 1, 1, 0),
            HarmonicCongruenceId::C66 => (HarmonicSignature::new(vec![-2], minus_one), 1, 0, 0),
            HarmonicCongruenceId::C10 => (HarmonicSignature::new(vec![-2], two), 1, 0, -1),
            HarmonicCongruenceId::C55 => (HarmonicSignature::new(vec![1, -1], minus_one), 1, 0, 1),
            HarmonicCongruenceId::C5 => (HarmonicSignature::new(vec![1, -1], two), 1, 0, 0),
            HarmonicCongruenceId::C6 => (HarmonicSignature::new(vec![-1, 1], half), 1, 0, 0),
        }
    }
}

impl FromStr for HarmonicCongruenceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        HarmonicCongruenceId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

fn ensure_min_prime(p: u64, min: u64, check: &str) -> Result<()> {
    if p < min {
        return Err(Error::PrimeTooSmall { p, min, check: check.to_string() });
    }
    if !is_prime(p) {
        return Err(Error::ParamOutOfRange(format!("{check} needs a prime, got p = {p}")));
    }
    Ok(())
}

fn q_rational(p: u64) -> Rational {
    Rational::from_integer(fermat_quotient_exact(p))
}

/// Evaluates one catalogued congruence H_{p-1}(s; x) ≡ c₁q + c₂q² mod p^k.
pub fn check_harmonic_congruence(id: HarmonicCongruenceId, p: u64) -> Result<CheckReport> {
    ensure_min_prime(p, 5, id.as_str())?;
    let (sig, k, c1, c2) = id.spec();
    let modulus = Modulus::new(p, k);
    let lhs = make_residue(&harmonic_eval_exact(p - 1, &sig), modulus)?;
    let q = q_rational(p);
    let target = Rational::from_integer(Integer::from(c1)) * &q
        + Rational::from_integer(Integer::from(c2)) * &q * &q;
    let rhs = make_residue(&target, modulus)?;
    Ok(CheckReport::comparing(
        Suite::Congruences,
        id.as_str(),
        Some(p),
        Params::new(),
        Some(modulus),
        Value::Residue(lhs),
        Value::Residue(rhs),
    ))
}

// --- standalone lemma congruences -----------------------------------------

/// Standalone lemma congruences, each a parameterized check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LemmaId {
    B1,
    B2,
    C7,
    BinomPR,
    Wolstenholme,
    LucasStep,
    KPlusP,
    Zhs,
    HalfHarmonic,
    BinomPm1,
    BinomPSign,
    PowerSum,
    MidCentral,
    CentralSum,
}

impl LemmaId {
    pub fn as_str(&self) -> &'static str {
        match self {
            LemmaId::B1 => "B1",
            LemmaId::B2 => "B2",
            LemmaId::C7 => "C7",
            LemmaId::BinomPR => "BINOM_P_R",
            LemmaId::Wolstenholme => "WOLSTENHOLME",
            LemmaId::LucasStep => "LUCAS_STEP",
            LemmaId::KPlusP => "K_PLUS_P",
            LemmaId::Zhs => "ZHS",
            LemmaId::HalfHarmonic => "HALF_HARMONIC",
            LemmaId::BinomPm1 => "BINOM_PM1",
            LemmaId::BinomPSign => "BINOM_P_SIGN",
            LemmaId::PowerSum => "POWER_SUM",
            LemmaId::MidCentral => "MID_CENTRAL",
            LemmaId::CentralSum => "CENTRAL_SUM",
        }
    }

    pub const ALL: [LemmaId; 14] = [
        LemmaId::B1,
        LemmaId::B2,
        LemmaId::C7,
        LemmaId::BinomPR,
        LemmaId::Wolstenholme,
        LemmaId::LucasStep,
        LemmaId::KPlusP,
        LemmaId::Zhs,
        LemmaId::HalfHarmonic,
        LemmaId::BinomPm1,
        LemmaId::BinomPSign,
        LemmaId::PowerSum,
        LemmaId::MidCentral,
        LemmaId::CentralSum,
    ];

    /// Smallest prime at which the congruence is true.
    pub fn min_prime(&self) -> u64 {
        match self {
            // the double sum at p = 3 is 1/4, which is 1 mod 3, so the
            // stated hypothesis p > 2 is one prime too generous here
            LemmaId::B1 => 5,
            // binom(6,3) - binom(2,1) = 18 is not divisible by 27; the
            // mod p³ strengthening of the central theorem starts at 5
            LemmaId::Wolstenholme => 5,
            _ => 3,
        }
    }
}

impl FromStr for LemmaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LemmaId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

fn lemma_report(
    id: LemmaId,
    p: u64,
    params: Params,
    modulus: Modulus,
    lhs: &Rational,
    rhs: &Rational,
) -> Result<CheckReport> {
    Ok(CheckReport::comparing(
        Suite::Congruences,
        id.as_str(),
        Some(p),
        params,
        Some(modulus),
        Value::Residue(make_residue(lhs, modulus)?),
        Value::Residue(make_residue(rhs, modulus)?),
    ))
}

fn range_err(msg: String) -> Error {
    Error::ParamOutOfRange(msg)
}

/// Σ_{k=1}^{p-1} (1/(k 2^k)) Σ_{j<k} 2^j/j, exactly.
fn b1_sum(p: u64) -> Rational {
    let mut inner = Rational::zero();
    let mut total = Rational::zero();
    let mut pow = Integer::one();
    for k in 1..p {
        // inner holds Σ_{j=1}^{k-1} 2^j/j before the k-th term is added
        total += Rational::new(Integer::one(), Integer::from(k) * (&pow * 2)) * &inner;
        pow *= 2;
        inner += Rational::new(pow.clone(), Integer::from(k));
    }
    total
}

/// Σ_{k=1}^{p-1} (2^k/k) Σ_{j<k} 1/(j 2^j), exactly.
fn b2_sum(p: u64) -> Rational {
    let mut inner = Rational::zero();
    let mut total = Rational::zero();
    let mut pow = Integer::one();
    for k in 1..p {
        total += Rational::new(&pow * 2, Integer::from(k)) * &inner;
        pow *= 2;
        inner += Rational::new(Integer::one(), Integer::from(k) * &pow);
    }
    total
}

/// Σ_{k=2}^{p-1} (1/k²) Σ_{m=k}^{p-1} (-1)^{m-k}/binom(m,k), exactly.
fn c7_sum(p: u64) -> Rational {
    let mut total = Rational::zero();
    for k in 2..p {
        let mut inner = Rational::zero();
        let mut b = Integer::one();
        for m in k..p {
            // b = binom(m, k), advanced by b *= (m+1)/(m+1-k)
            inner += Rational::new(alt_sign(m - k), b.clone());
            b = b * Integer::from(m + 1) / Integer::from(m + 1 - k);
        }
        total += Rational::new(Integer::one(), Integer::from(k * k)) * inner;
    }
    total
}

/// Evaluates one lemma congruence at prime p with its parameters.
pub fn check_lemma_congruence(id: LemmaId, p: u64, params: &Params) -> Result<CheckReport> {
    ensure_min_prime(p, id.min_prime(), id.as_str())?;
    let q = q_rational(p);
    match id {
        LemmaId::B1 => {
            let modulus = Modulus::new(p, 1);
            lemma_report(id, p, Params::new(), modulus, &b1_sum(p), &Rational::zero())
        }
        LemmaId::B2 => {
            let modulus = Modulus::new(p, 1);
            let rhs = Rational::from_integer(Integer::from(-2)) * &q * &q;
            lemma_report(id, p, Params::new(), modulus, &b2_sum(p), &rhs)
        }
        LemmaId::C7 => {
            let modulus = Modulus::new(p, 1);
            let rhs = Rational::from_integer(Integer::from(-2)) * &q;
            lemma_report(id, p, Params::new(), modulus, &c7_sum(p), &rhs)
        }
        LemmaId::BinomPR => {
            let r = get_param(params, "r")? as u64;
            if !(1..p).contains(&r) {
                return Err(range_err(format!("BINOM_P_R needs 0 < r < p, got r = {r}")));
            }
            let modulus = Modulus::new(p, 3);
            let lhs = Rational::from_integer(binomial_exact(p, r as i64));
            let h = harmonic_prefix(r - 1);
            let rhs = Rational::new(Integer::from(p) * alt_sign(r - 1), Integer::from(r))
                * (Rational::one() - Rational::from_integer(Integer::from(p)) * &h[(r - 1) as usize]);
            lemma_report(id, p, params_from(&[("r", r as i64)]), modulus, &lhs, &rhs)
        }
        LemmaId::Wolstenholme => {
            let a = get_param(params, "a")? as u64;
            let b = get_param(params, "b")? as u64;
            let modulus = Modulus::new(p, 3);
            let lhs = Rational::from_integer(binomial_exact(a * p, (b * p) as i64));
            let rhs = Rational::from_integer(binomial_exact(a, b as i64));
            lemma_report(id, p, params_from(&[("a", a as i64), ("b", b as i64)]), modulus, &lhs, &rhs)
        }
        LemmaId::LucasStep => {
            let n1 = get_param(params, "n1")? as u64;
            let n0 = get_param(params, "n0")? as u64;
            let k1 = get_param(params, "k1")? as u64;
            let k0 = get_param(params, "k0")? as u64;
            if n0 >= p || k0 >= p {
                return Err(range_err(format!("LUCAS_STEP needs n0, k0 < p, got ({n0}, {k0})")));
            }
            let modulus = Modulus::new(p, 1);
            let lhs = Rational::from_integer(binomial_exact(n1 * p + n0, (k1 * p + k0) as i64));
            let rhs = Rational::from_integer(
                binomial_exact(n1, k1 as i64) * binomial_exact(n0, k0 as i64),
            );
            let ps = params_from(&[
                ("n1", n1 as i64),
                ("n0", n0 as i64),
                ("k1", k1 as i64),
                ("k0", k0 as i64),
            ]);
            lemma_report(id, p, ps, modulus, &lhs, &rhs)
        }
        LemmaId::KPlusP => {
            let k = get_param(params, "k")? as u64;
            let m = get_param(params, "m")? as u64;
            if !(k < m && m < p) {
                return Err(range_err(format!("K_PLUS_P needs k < m < p, got ({k}, {m})")));
            }
            let modulus = Modulus::new(p, 2);
            let lhs = Rational::from_integer(binomial_exact(k + p, m as i64));
            let rhs = Rational::new(
                Integer::from(p) * alt_sign(m - k - 1),
                Integer::from(k + 1) * binomial_exact(m, (k + 1) as i64),
            );
            lemma_report(id, p, params_from(&[("k", k as i64), ("m", m as i64)]), modulus, &lhs, &rhs)
        }
        LemmaId::Zhs => {
            let half = (p - 1) / 2;
            let a = get_param(params, "a")? as u64;
            if a > half {
                return Err(range_err(format!("ZHS needs a <= (p-1)/2, got a = {a}")));
            }
            let modulus = Modulus::new(p, 2);
            let lhs = Rational::from_integer(binomial_exact(half + a, half as i64));
            let h = harmonic_prefix(2 * a);
            let correction = Rational::one()
                + Rational::from_integer(Integer::from(p))
                    * (Rational::from_integer(Integer::from(2)) * &h[(2 * a) as usize] - &h[a as usize]);
            let rhs = Rational::from_integer(alt_sign(a) * binomial_exact(half, a as i64)) * correction;
            lemma_report(id, p, params_from(&[("a", a as i64)]), modulus, &lhs, &rhs)
        }
        LemmaId::HalfHarmonic => {
            let part = get_param(params, "part")?;
            let half = (p - 1) / 2;
            let modulus = Modulus::new(p, 1);
            let (n, coeff) = match part {
                1 => (half, -2),
                2 => (half / 2, -3),
                other => return Err(range_err(format!("HALF_HARMONIC part must be 1 or 2, got {other}"))),
            };
            let lhs = harmonic_eval_exact(n, &HarmonicSignature::plain(vec![1]));
            let rhs = Rational::from_integer(Integer::from(coeff)) * &q;
            lemma_report(id, p, params_from(&[("part", part)]), modulus, &lhs, &rhs)
        }
        LemmaId::BinomPm1 => {
            let j = get_param(params, "j")? as u64;
            if j >= p {
                return Err(range_err(format!("BINOM_PM1 needs j < p, got j = {j}")));
            }
            let modulus = Modulus::new(p, 2);
            let lhs = Rational::from_integer(binomial_exact(p - 1, j as i64));
            let h = harmonic_prefix(j);
            let rhs = Rational::from_integer(alt_sign(j))
                * (Rational::one() - Rational::from_integer(Integer::from(p)) * &h[j as usize]);
            lemma_report(id, p, params_from(&[("j", j as i64)]), modulus, &lhs, &rhs)
        }
        LemmaId::BinomPSign => {
            let r = get_param(params, "r")? as u64;
            if !(1..p).contains(&r) {
                return Err(range_err(format!("BINOM_P_SIGN needs 0 < r < p, got r = {r}")));
            }
            let modulus = Modulus::new(p, 2);
            let lhs = Rational::from_integer(binomial_exact(p, r as i64));
            let rhs = Rational::new(alt_sign(r - 1) * Integer::from(p), Integer::from(r));
            lemma_report(id, p, params_from(&[("r", r as i64)]), modulus, &lhs, &rhs)
        }
        LemmaId::PowerSum => {
            let i = get_param(params, "i")?;
            if i < 1 || (i as u64) % (p - 1) == 0 {
                return Err(range_err(format!("POWER_SUM needs i >= 1 with p-1 not dividing i, got i = {i}")));
            }
            let modulus = Modulus::new(p, 1);
            let lhs: Integer = (1..p).map(|a| Integer::from(a).pow(i as u32)).sum();
            lemma_report(
                id,
                p,
                params_from(&[("i", i)]),
                modulus,
                &Rational::from_integer(lhs),
                &Rational::zero(),
            )
        }
        LemmaId::MidCentral => {
            let c = get_param(params, "c")? as u64;
            let half = (p - 1) / 2;
            if !(c > half && c < p) {
                return Err(range_err(format!("MID_CENTRAL needs (p-1)/2 < c < p, got c = {c}")));
            }
            let modulus = Modulus::new(p, 2);
            // H_{2c} contains the index p once, so p * H_{2c} is p-integral
            let h2c = harmonic_eval_exact(2 * c, &HarmonicSignature::plain(vec![1]));
            let lhs = Rational::from_integer(binomial_exact(2 * c, c as i64))
                * (Rational::one() - Rational::from_integer(Integer::from(p)) * h2c);
            lemma_report(id, p, params_from(&[("c", c as i64)]), modulus, &lhs, &Rational::zero())
        }
        LemmaId::CentralSum => {
            let modulus = Modulus::new(p, 2);
            let lhs: Integer = (0..p).map(|k| binomial_exact(2 * k, k as i64)).sum();
            let rhs = Rational::from_integer(Integer::from(legendre(&Integer::from(p), 3)));
            lemma_report(id, p, Params::new(), modulus, &Rational::from_integer(lhs), &rhs)
        }
    }
}

// --- box-binomial expansions ----------------------------------------------

/// Expansions of binom(k + (i+j)p, m + ip) around the prime grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CcId {
    Cc22,
    Cc2,
    Cc1,
    Cc11,
}

impl CcId {
    pub fn as_str(&self) -> &'static str {
        match self {
            CcId::Cc22 => "CC22",
            CcId::Cc2 => "CC2",
            CcId::Cc1 => "CC1",
            CcId::Cc11 => "CC11",
        }
    }

    pub const ALL: [CcId; 4] = [CcId::Cc22, CcId::Cc2, CcId::Cc1, CcId::Cc11];

    /// Modulus exponent of the congruence.
    pub fn exponent(&self) -> u32 {
        match self {
            CcId::Cc22 | CcId::Cc2 => 3,
            CcId::Cc1 | CcId::Cc11 => 2,
        }
    }
}

impl FromStr for CcId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CcId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

/// Evaluates one box-binomial expansion at (p, i, j) with its extra
/// parameters: r for CC22, (k, m) for CC1, k for CC11, none for CC2.
pub fn check_cc(id: CcId, p: u64, i: u64, j: u64, extra: &Params) -> Result<CheckReport> {
    ensure_min_prime(p, 3, id.as_str())?;
    let modulus = Modulus::new(p, id.exponent());
    let big_p = Integer::from(p);
    let ij = Integer::from(i + j);
    let bij = binomial_exact(i + j, i as i64);
    let mut params = params_from(&[("i", i as i64), ("j", j as i64)]);
    let (lhs, rhs) = match id {
        CcId::Cc22 => {
            let r = get_param(extra, "r")? as u64;
            if !(1..p).contains(&r) {
                return Err(range_err(format!("CC22 needs 0 < r < p, got r = {r}")));
            }
            params.insert("r".into(), r as i64);
            let lhs = Rational::from_integer(binomial_exact((i + j) * p, (r + i * p) as i64));
            let h = harmonic_prefix(r - 1);
            let inner = Rational::from_integer(&ij - 1) * &h[(r - 1) as usize]
                + Rational::new(Integer::from(i), Integer::from(r));
            let rhs = Rational::from_integer(&bij * binomial_exact(p, r as i64) * Integer::from(j))
                * (Rational::one() - Rational::from_integer(big_p) * inner);
            (lhs, rhs)
        }
        CcId::Cc2 => {
            let n = p - 1 + (i + j) * p;
            let lhs: Integer = (0..p).map(|m| binomial_exact(n, (m + i * p) as i64)).sum();
            let q = fermat_quotient_exact(p);
            let rhs = &bij
                * (Integer::one()
                    + (&ij + 1) * &big_p * &q
                    + binomial_exact(i + j + 1, 2) * &big_p * &big_p * &q * &q);
            (Rational::from_integer(lhs), Rational::from_integer(rhs))
        }
        CcId::Cc1 => {
            let k = get_param(extra, "k")? as u64;
            let m = get_param(extra, "m")? as u64;
            if !(m <= k && k < p) {
                return Err(range_err(format!("CC1 needs 0 <= m <= k < p, got ({k}, {m})")));
            }
            params.insert("k".into(), k as i64);
            params.insert("m".into(), m as i64);
            let lhs = Rational::from_integer(binomial_exact(k + (i + j) * p, (m + i * p) as i64));
            let h = harmonic_prefix(k);
            let inner = Rational::from_integer(ij) * &h[k as usize]
                - Rational::from_integer(Integer::from(j)) * &h[(k - m) as usize]
                - Rational::from_integer(Integer::from(i)) * &h[m as usize];
            let rhs = Rational::from_integer(&bij * binomial_exact(k, m as i64))
                * (Rational::one() + Rational::from_integer(big_p) * inner);
            (lhs, rhs)
        }
        CcId::Cc11 => {
            let k = get_param(extra, "k")? as u64;
            if k >= p {
                return Err(range_err(format!("CC11 needs 0 <= k < p, got k = {k}")));
            }
            params.insert("k".into(), k as i64);
            let lhs: Integer = (0..=k)
                .map(|m| binomial_exact(k + (i + j) * p, (m + i * p) as i64))
                .sum();
            let geom: Rational = (1..=k)
                .map(|m| Rational::new(Integer::one(), Integer::from(m) * (Integer::one() << m as usize)))
                .sum();
            let rhs = Rational::from_integer((Integer::one() << k as usize) * &bij)
                * (Rational::one() + Rational::from_integer(&big_p * ij) * geom);
            (Rational::from_integer(lhs), rhs)
        }
    };
    Ok(CheckReport::comparing(
        Suite::Congruences,
        id.as_str(),
        Some(p),
        params,
        Some(modulus),
        Value::Residue(make_residue(&lhs, modulus)?),
        Value::Residue(make_residue(&rhs, modulus)?),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::primes_in;
    use crate::report::Status;

    fn residue_value(report: &CheckReport) -> u64 {
        match &report.lhs {
            Value::Residue(r) => r.to_u64(),
            other => panic!("expected residue, got {other}"),
        }
    }

    #[test]
    fn catalog_examples_pin_values() {
        // H_4 = 25/12 is 0 mod 25
        let r = check_harmonic_congruence(HarmonicCongruenceId::C1, 5).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(residue_value(&r), 0);
        // both sides of C4 at p = 5 reduce to 19 mod 25
        let r = check_harmonic_congruence(HarmonicCongruenceId::C4, 5).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(residue_value(&r), 19);
        let r = check_harmonic_congruence(HarmonicCongruenceId::C2, 7).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(residue_value(&r), 0);
    }

    #[test]
    fn catalog_passes_for_primes_up_to_61() {
        for p in primes_in(5, 61) {
            for id in HarmonicCongruenceId::ALL {
                let r = check_harmonic_congruence(id, p).unwrap();
                assert_eq!(r.status, Status::Pass, "{} at p = {p}: {} vs {}", r.check_id, r.lhs, r.rhs);
            }
        }
    }

    #[test]
    fn catalog_rejects_small_primes() {
        assert!(matches!(
            check_harmonic_congruence(HarmonicCongruenceId::C1, 3),
            Err(Error::PrimeTooSmall { p: 3, min: 5, .. })
        ));
    }

    #[test]
    fn b_lemmas_and_c7_hold_from_their_minimum_primes() {
        for p in primes_in(3, 61) {
            if p >= 5 {
                let r = check_lemma_congruence(LemmaId::B1, p, &Params::new()).unwrap();
                assert_eq!(r.status, Status::Pass, "B1 at {p}");
            }
            let r = check_lemma_congruence(LemmaId::B2, p, &Params::new()).unwrap();
            assert_eq!(r.status, Status::Pass, "B2 at {p}");
            let r = check_lemma_congruence(LemmaId::C7, p, &Params::new()).unwrap();
            assert_eq!(r.status, Status::Pass, "C7 at {p}");
        }
    }

    #[test]
    fn b1_really_fails_at_three() {
        // the raw double sum at p = 3 has the single term (1/8)·2 = 1/4,
        // and 1/4 is 1 mod 3, not 0: the minimum prime must be 5
        assert!(matches!(
            check_lemma_congruence(LemmaId::B1, 3, &Params::new()),
            Err(Error::PrimeTooSmall { .. })
        ));
        let raw = make_residue(&b1_sum(3), Modulus::new(3, 1)).unwrap();
        assert_eq!(raw.to_u64(), 1);
    }

    #[test]
    fn b_sums_recompute_by_nested_loops() {
        for p in [5u64, 13, 29] {
            let mut b1 = Rational::zero();
            let mut b2 = Rational::zero();
            for k in 1..p {
                for j in 1..k {
                    let two_j = Integer::one() << j as usize;
                    let two_k = Integer::one() << k as usize;
                    b1 += Rational::new(two_j.clone(), Integer::from(k) * &two_k * Integer::from(j));
                    b2 += Rational::new(two_k, Integer::from(k) * Integer::from(j) * two_j);
                }
            }
            assert_eq!(b1, b1_sum(p));
            assert_eq!(b2, b2_sum(p));
        }
    }

    #[test]
    fn wolstenholme_example_and_its_boundary() {
        let params = params_from(&[("a", 2), ("b", 1)]);
        let r = check_lemma_congruence(LemmaId::Wolstenholme, 5, &params).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(residue_value(&r), 2);
        // binom(6,3) = 20 differs from binom(2,1) = 2 by 18, not a multiple
        // of 27, so the check refuses p = 3 rather than fail
        assert!(check_lemma_congruence(LemmaId::Wolstenholme, 3, &params).is_err());
        assert_ne!(
            binomial_exact(6, 3) % Integer::from(27),
            Integer::from(2),
        );
    }

    #[test]
    fn binom_lemma_examples() {
        let r = check_lemma_congruence(LemmaId::BinomPR, 5, &params_from(&[("r", 2)])).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(residue_value(&r), 10);
        let r = check_lemma_congruence(LemmaId::PowerSum, 5, &params_from(&[("i", 2)])).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(residue_value(&r), 0);
        // 1 + 2 + 6 + 20 + 70 = 99 is -1 mod 25, matching the symbol for 5 mod 3
        let r = check_lemma_congruence(LemmaId::CentralSum, 5, &Params::new()).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(residue_value(&r), 24);
    }

    #[test]
    fn parameterized_lemmas_sweep_small_primes() {
        for p in primes_in(3, 23) {
            let half = (p - 1) / 2;
            for r in 1..p {
                let ps = params_from(&[("r", r as i64)]);
                assert_eq!(check_lemma_congruence(LemmaId::BinomPR, p, &ps).unwrap().status, Status::Pass, "BINOM_P_R p={p} r={r}");
                assert_eq!(check_lemma_congruence(LemmaId::BinomPSign, p, &ps).unwrap().status, Status::Pass, "BINOM_P_SIGN p={p} r={r}");
            }
            for j in 0..p {
                let ps = params_from(&[("j", j as i64)]);
                assert_eq!(check_lemma_congruence(LemmaId::BinomPm1, p, &ps).unwrap().status, Status::Pass, "BINOM_PM1 p={p} j={j}");
            }
            for k in 0..p {
                for m in (k + 1)..p {
                    let ps = params_from(&[("k", k as i64), ("m", m as i64)]);
                    assert_eq!(check_lemma_congruence(LemmaId::KPlusP, p, &ps).unwrap().status, Status::Pass, "K_PLUS_P p={p} k={k} m={m}");
                }
            }
            for a in 0..=half {
                let ps = params_from(&[("a", a as i64)]);
                assert_eq!(check_lemma_congruence(LemmaId::Zhs, p, &ps).unwrap().status, Status::Pass, "ZHS p={p} a={a}");
            }
            for part in [1, 2] {
                let ps = params_from(&[("part", part)]);
                assert_eq!(check_lemma_congruence(LemmaId::HalfHarmonic, p, &ps).unwrap().status, Status::Pass, "HALF_HARMONIC p={p} part={part}");
            }
            for c in (half + 1)..p {
                let ps = params_from(&[("c", c as i64)]);
                assert_eq!(check_lemma_congruence(LemmaId::MidCentral, p, &ps).unwrap().status, Status::Pass, "MID_CENTRAL p={p} c={c}");
            }
            for i in 1..(2 * p).min(40) {
                if i % (p - 1) == 0 {
                    continue;
                }
                let ps = params_from(&[("i", i as i64)]);
                assert_eq!(check_lemma_congruence(LemmaId::PowerSum, p, &ps).unwrap().status, Status::Pass, "POWER_SUM p={p} i={i}");
            }
            assert_eq!(check_lemma_congruence(LemmaId::CentralSum, p, &Params::new()).unwrap().status, Status::Pass, "CENTRAL_SUM p={p}");
        }
    }

    #[test]
    fn lucas_step_agrees_with_direct_reduction() {
        for p in [3u64, 5, 7] {
            for n1 in 0..4 {
                for n0 in 0..p {
                    for k1 in 0..4 {
                        for k0 in 0..p {
                            let ps = params_from(&[
                                ("n1", n1 as i64),
                                ("n0", n0 as i64),
                                ("k1", k1),
                                ("k0", k0 as i64),
                            ]);
                            let r = check_lemma_congruence(LemmaId::LucasStep, p, &ps).unwrap();
                            assert_eq!(r.status, Status::Pass, "LUCAS_STEP p={p} ({n1},{n0};{k1},{k0})");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lemma_rejects_out_of_range_params() {
        assert!(check_lemma_congruence(LemmaId::KPlusP, 5, &params_from(&[("k", 3), ("m", 2)])).is_err());
        assert!(check_lemma_congruence(LemmaId::Zhs, 5, &params_from(&[("a", 3)])).is_err());
        assert!(check_lemma_congruence(LemmaId::PowerSum, 5, &params_from(&[("i", 4)])).is_err());
        assert!(check_lemma_congruence(LemmaId::PowerSum, 5, &params_from(&[("i", 0)])).is_err());
        assert!(check_lemma_congruence(LemmaId::MidCentral, 5, &params_from(&[("c", 2)])).is_err());
        assert!(check_lemma_congruence(LemmaId::HalfHarmonic, 5, &params_from(&[("part", 3)])).is_err());
        assert!(check_lemma_congruence(LemmaId::BinomPSign, 5, &params_from(&[("r", 0)])).is_err());
        assert!(check_lemma_congruence(LemmaId::LucasStep, 5, &params_from(&[("n1", 1), ("n0", 5), ("k1", 0), ("k0", 1)])).is_err());
    }

    #[test]
    fn cc_examples_from_known_values() {
        // i = j = 0 degenerates to a plain binomial on both sides
        let r = check_cc(CcId::Cc1, 5, 0, 0, &params_from(&[("k", 3), ("m", 1)])).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(residue_value(&r), 3);
        let r = check_cc(CcId::Cc22, 3, 0, 1, &params_from(&[("r", 1)])).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(residue_value(&r), 3);
        // binom(12,5) + binom(12,6) + binom(12,7) = 2508 is 8 mod 25, and the
        // closed form 8·(1 + 10·(1/2 + 1/8)) = 58 reduces to the same 8
        let r = check_cc(CcId::Cc11, 5, 1, 1, &params_from(&[("k", 2)])).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(residue_value(&r), 8);
    }

    #[test]
    fn cc_sweep_small_primes_all_admissible_extras() {
        for p in [3u64, 5, 7] {
            for i in 0..=2u64 {
                for j in 0..=2u64 {
                    for r in 1..p {
                        let e = params_from(&[("r", r as i64)]);
                        let rep = check_cc(CcId::Cc22, p, i, j, &e).unwrap();
                        assert_eq!(rep.status, Status::Pass, "CC22 p={p} i={i} j={j} r={r}");
                    }
                    let rep = check_cc(CcId::Cc2, p, i, j, &Params::new()).unwrap();
                    assert_eq!(rep.status, Status::Pass, "CC2 p={p} i={i} j={j}");
                    for k in 0..p {
                        for m in 0..=k {
                            let e = params_from(&[("k", k as i64), ("m", m as i64)]);
                            let rep = check_cc(CcId::Cc1, p, i, j, &e).unwrap();
                            assert_eq!(rep.status, Status::Pass, "CC1 p={p} i={i} j={j} k={k} m={m}");
                        }
                        let e = params_from(&[("k", k as i64)]);
                        let rep = check_cc(CcId::Cc11, p, i, j, &e).unwrap();
                        assert_eq!(rep.status, Status::Pass, "CC11 p={p} i={i} j={j} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn cc_rejects_out_of_range_extras() {
        assert!(check_cc(CcId::Cc22, 5, 1, 1, &params_from(&[("r", 5)])).is_err());
        assert!(check_cc(CcId::Cc1, 5, 1, 1, &params_from(&[("k", 2), ("m", 3)])).is_err());
        assert!(check_cc(CcId::Cc11, 5, 1, 1, &params_from(&[("k", 5)])).is_err());
        assert!(matches!(check_cc(CcId::Cc22, 5, 1, 1, &Params::new()), Err(Error::MissingParam("r"))));
    }

    #[test]
    fn higher_exponent_checks_reduce_consistently() {
        // a congruence mod p^k also holds mod p^{k'} for k' < k
        for p in primes_in(5, 23) {
            for (id, k) in [(HarmonicCongruenceId::C1, 2u32), (HarmonicCongruenceId::C4, 2)] {
                let r = check_harmonic_congruence(id, p).unwrap();
                let (Value::Residue(lhs), Value::Residue(rhs)) = (&r.lhs, &r.rhs) else {
                    panic!("harmonic congruence reports residues");
                };
                for lower in 1..=k {
                    assert_eq!(lhs.reduced(lower), rhs.reduced(lower));
                }
            }
            let r = check_cc(CcId::Cc2, p, 2, 1, &Params::new()).unwrap();
            let (Value::Residue(lhs), Value::Residue(rhs)) = (&r.lhs, &r.rhs) else {
                panic!("cc reports residues");
            };
            for lower in 1..=3 {
                assert_eq!(lhs.reduced(lower), rhs.reduced(lower));
            }
        }
    }

    #[test]
    fn ids_round_trip() {
        for id in HarmonicCongruenceId::ALL {
            assert_eq!(id.as_str().parse::<HarmonicCongruenceId>().unwrap(), id);
        }
        for id in LemmaId::ALL {
            assert_eq!(id.as_str().parse::<LemmaId>().unwrap(), id);
        }
        for id in CcId::ALL {
            assert_eq!(id.as_str().parse::<CcId>().unwrap(), id);
        }
        assert!("C9".parse::<HarmonicCongruenceId>().is_err());
        assert!("WOLSTENHOLM".parse::<LemmaId>().is_err());
        assert!("CC3".parse::<CcId>().is_err());
    }
}
