//! The two box supercongruences, their proof decomposition, and the
//! surrounding step congruences.
//!
//! The centerpiece claims: the multinomial sum over the box
//! prod [0, r_i p) is congruent to the same sum over prod [0, r_i)
//! mod p³ (plain terms), and mod p² for squared terms. Every claim is
//! checked along two routes where both exist: a naive lattice oracle
//! that enumerates the whole box with incremental exact multinomials,
//! and a hockey-stick-reduced fast evaluator. Division-bearing sums
//! are accumulated as exact rationals and reduced once.

use std::str::FromStr;

use num_integer::lcm;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{
    alt_sign, fermat_quotient_exact, is_prime, legendre, make_residue, mulmod, Integer, Modulus,
    Rational, Residue,
};
use crate::combinat::{binomial_exact, FactorialTable};
use crate::error::{Error, Result};
use crate::harmonic::harmonic_scaled;
use crate::report::{get_param, params_from, CheckReport, Params, Suite, Value};

/// Default lattice-point budget for oracle enumerations.
pub const DEFAULT_TERM_BUDGET: u128 = 100_000_000;

// --- box sums --------------------------------------------------------------

/// One multinomial box sum: radii (r_1,...,r_n), prime, squared flag,
/// and the modulus exponent for reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumSpec {
    pub radii: Vec<u64>,
    pub p: u64,
    pub squared: bool,
    pub k: u32,
}

impl SumSpec {
    pub fn new(radii: Vec<u64>, p: u64, squared: bool, k: u32) -> Result<SumSpec> {
        if radii.is_empty() || radii.iter().any(|&r| r == 0) {
            return Err(Error::ParamOutOfRange(format!(
                "radii must be nonempty positive integers, got {radii:?}"
            )));
        }
        Ok(SumSpec { radii, p, squared, k })
    }
}

/// Walks the box prod [0, dims_i) in odometer order, maintaining the
/// exact multinomial of the current point with one multiplication and
/// one exact division per step. Calls f(multinomial, point, sum).
fn box_odometer<F: FnMut(&Integer, &[u64], u64)>(
    dims: &[u64],
    budget: u128,
    mut f: F,
) -> Result<u128> {
    let total = dims
        .iter()
        .try_fold(1u128, |acc, &d| acc.checked_mul(d as u128))
        .unwrap_or(u128::MAX);
    if total > budget {
        return Err(Error::TermBudgetExceeded { terms: total, budget });
    }
    if dims.iter().any(|&d| d == 0) {
        return Ok(0);
    }
    let n = dims.len();
    let mut m = vec![0u64; n];
    // pref[j] = multinomial(m_1..m_j), sums[j] = m_1 + ... + m_j
    let mut pref = vec![Integer::one(); n + 1];
    let mut sums = vec![0u64; n + 1];
    loop {
        f(&pref[n], &m, sums[n]);
        let mut idx = n;
        while idx > 0 && m[idx - 1] + 1 == dims[idx - 1] {
            idx -= 1;
        }
        if idx == 0 {
            return Ok(total);
        }
        let i = idx - 1;
        m[i] += 1;
        sums[i + 1] += 1;
        // adding one to part m_i multiplies the prefix multinomial by
        // (new prefix sum) / (new part size), always exactly
        pref[i + 1] = &pref[i + 1] * sums[i + 1] / m[i];
        for j in i + 1..n {
            m[j] = 0;
            sums[j + 1] = sums[i + 1];
            pref[j + 1] = pref[i + 1].clone();
        }
    }
}

/// Exact box sum of multinomial^e over prod [0, dims_i).
fn box_sum_exact(dims: &[u64], squared: bool, budget: u128) -> Result<Integer> {
    let mut acc = Integer::zero();
    box_odometer(dims, budget, |mult, _, _| {
        if squared {
            acc += mult * mult;
        } else {
            acc += mult;
        }
    })?;
    Ok(acc)
}

/// Oracle: the box sum over prod [0, r_i p) reduced mod p^k, term by
/// term, with no structural shortcuts.
pub fn multi_sum_lhs(spec: &SumSpec, budget: u128) -> Result<Residue> {
    let modulus = Modulus::new(spec.p, spec.k);
    let pk = modulus.value();
    let pk_big = modulus.big_value();
    let dims: Vec<u64> = spec.radii.iter().map(|r| r * spec.p).collect();
    let mut acc = 0u64;
    box_odometer(&dims, budget, |mult, _, _| {
        let mut v = (mult % &pk_big).to_u64().expect("reduced below u64 modulus");
        if spec.squared {
            v = mulmod(v, v, pk);
        }
        acc = (acc + v) % pk;
    })?;
    Ok(Residue::new(Integer::from(acc), modulus))
}

/// Exact right side: the same sum over the small box prod [0, r_i).
pub fn multi_sum_rhs(radii: &[u64], squared: bool) -> Integer {
    box_sum_exact(radii, squared, u128::MAX).expect("small box is always within budget")
}

/// Fast left side of the plain triple-box sum: the inner box collapses
/// by two hockey-stick applications to tp Σ_m Σ_k binom(k,m)
/// binom(k+tp,k)/(k+1) over m < rp, m <= k < m + sp, accumulated over
/// the common denominator lcm(1..rp+sp) and reduced once.
pub fn theorem1_fast_lhs(p: u64, r: u64, s: u64, t: u64, k: u32) -> Residue {
    let modulus = Modulus::new(p, k);
    let (rp, sp, tp) = (r * p, s * p, t * p);
    let mut l = Integer::one();
    for d in 1..=rp + sp {
        l = lcm(l, Integer::from(d));
    }
    let l_over: Vec<Integer> = (0..=rp + sp).map(|d| if d == 0 { Integer::zero() } else { &l / Integer::from(d) }).collect();
    let mut acc = Integer::zero();
    // base = binom(m + tp, m), advanced in m
    let mut base = Integer::one();
    for m in 0..rp {
        if m > 0 {
            base = base * (m + tp) / m;
        }
        // b1 = binom(kk, m), b2 = binom(kk + tp, kk), advanced in kk
        let mut b1 = Integer::one();
        let mut b2 = base.clone();
        for kk in m..m + sp {
            acc += &b1 * &b2 * &l_over[(kk + 1) as usize];
            b1 = b1 * (kk + 1) / (kk + 1 - m);
            b2 = b2 * (kk + 1 + tp) / (kk + 1);
        }
    }
    let value = Rational::new(acc * Integer::from(tp), l);
    debug_assert!(value.is_integer(), "reduced double sum must be an integer");
    make_residue(&value, modulus).expect("integer value reduces")
}

fn ensure_odd_prime(p: u64, min: u64, check: &str) -> Result<()> {
    if p < min {
        return Err(Error::PrimeTooSmall { p, min, check: check.to_string() });
    }
    if !is_prime(p) {
        return Err(Error::ParamOutOfRange(format!("{check} needs a prime, got p = {p}")));
    }
    Ok(())
}

/// Full two-route check of the plain box congruence mod p³ at (r,s,t):
/// oracle against the small-box value, and fast evaluator against the
/// oracle (exact residue equality). A fast/oracle mismatch is reported
/// as the failing pair.
pub fn verify_theorem1(p: u64, r: u64, s: u64, t: u64, budget: u128) -> Result<CheckReport> {
    ensure_odd_prime(p, 3, "SS")?;
    let spec = SumSpec::new(vec![r, s, t], p, false, 3)?;
    let modulus = Modulus::new(p, 3);
    let oracle = multi_sum_lhs(&spec, budget)?;
    let fast = theorem1_fast_lhs(p, r, s, t, 3);
    let params = params_from(&[("r", r as i64), ("s", s as i64), ("t", t as i64)]);
    if fast != oracle {
        return Ok(CheckReport::comparing(
            Suite::Theorem1,
            "SS",
            Some(p),
            params,
            Some(modulus),
            Value::Residue(fast),
            Value::Residue(oracle),
        ));
    }
    let rhs = make_residue(&Rational::from_integer(multi_sum_rhs(&[r, s, t], false)), modulus)?;
    Ok(CheckReport::comparing(
        Suite::Theorem1,
        "SS",
        Some(p),
        params,
        Some(modulus),
        Value::Residue(oracle),
        Value::Residue(rhs),
    ))
}

/// The squared-term box congruence mod p² at (r,s,t), oracle only.
pub fn verify_theorem_tt(p: u64, r: u64, s: u64, t: u64, budget: u128) -> Result<CheckReport> {
    ensure_odd_prime(p, 3, "TT")?;
    let spec = SumSpec::new(vec![r, s, t], p, true, 2)?;
    let modulus = Modulus::new(p, 2);
    let lhs = multi_sum_lhs(&spec, budget)?;
    let rhs = make_residue(&Rational::from_integer(multi_sum_rhs(&[r, s, t], true)), modulus)?;
    Ok(CheckReport::comparing(
        Suite::TheoremTT,
        "TT",
        Some(p),
        params_from(&[("r", r as i64), ("s", s as i64), ("t", t as i64)]),
        Some(modulus),
        Value::Residue(lhs),
        Value::Residue(rhs),
    ))
}

// --- the block decomposition ------------------------------------------------

/// The three exact rational blocks of one (i,j) cell of the reduced
/// double sum, before any reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionTriple {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub i: u64,
    pub j: u64,
    pub t: u64,
}

fn ensure_p_integral(value: &Rational, p: u64, context: &str) -> Result<()> {
    if (value.denom() % Integer::from(p)).is_zero() {
        return Err(Error::PIntegralityViolation { context: context.to_string(), p });
    }
    Ok(())
}

/// Computes the exact blocks A, B, C at cell (i,j) with thickness t.
///
/// A = tp Σ_{0<=m<=k<p} binom(k+(i+j)p, m+ip) binom(k+(i+j+t)p, k+(i+j)p) / (k+(i+j)p+1),
/// B = tp/((i+j+1)p+1) binom((i+j+t+1)p, (i+j+1)p) Σ_{m=1}^{p-1} binom((i+j+1)p, m+ip),
/// C = tp Σ_{m<p} Σ_{k=1}^{m-1} binom(k+(i+j+1)p, m+ip) binom(k+(i+j+t+1)p, k+(i+j+1)p) / (k+1+(i+j+1)p).
pub fn decomposition_triple(p: u64, i: u64, j: u64, t: u64) -> Result<DecompositionTriple> {
    ensure_odd_prime(p, 3, "DECOMP")?;
    if t == 0 {
        return Err(Error::ParamOutOfRange("decomposition needs t >= 1".to_string()));
    }
    let ij = i + j;
    let tp = Integer::from(t * p);

    let mut a = Rational::zero();
    for m in 0..p {
        // b1 = binom(k + (i+j)p, m + ip), b2 = binom(k + (i+j+t)p, k + (i+j)p)
        let mut b1 = binomial_exact(m + ij * p, (m + i * p) as i64);
        let mut b2 = binomial_exact(m + (ij + t) * p, (m + ij * p) as i64);
        for k in m..p {
            a += Rational::new(&b1 * &b2, Integer::from(k + ij * p + 1));
            b1 = b1 * (k + 1 + ij * p) / (k + 1 + ij * p - (m + i * p));
            b2 = b2 * (k + 1 + (ij + t) * p) / (k + 1 + ij * p);
        }
    }
    a *= Rational::from_integer(tp.clone());

    let big = binomial_exact((ij + t + 1) * p, ((ij + 1) * p) as i64);
    let inner: Integer = (1..p).map(|m| binomial_exact((ij + 1) * p, (m + i * p) as i64)).sum();
    let b = Rational::new(&tp * big * inner, Integer::from((ij + 1) * p + 1));

    let mut c = Rational::zero();
    for m in 2..p {
        let mut b1 = binomial_exact(1 + (ij + 1) * p, (m + i * p) as i64);
        let mut b2 = binomial_exact(1 + (ij + t + 1) * p, (1 + (ij + 1) * p) as i64);
        for k in 1..m {
            c += Rational::new(&b1 * &b2, Integer::from(k + 1 + (ij + 1) * p));
            b1 = b1 * (k + 1 + (ij + 1) * p) / (k + 1 + (ij + 1) * p - (m + i * p));
            b2 = b2 * (k + 1 + (ij + t + 1) * p) / (k + 1 + (ij + 1) * p);
        }
    }
    c *= Rational::from_integer(tp);

    ensure_p_integral(&a, p, "block A")?;
    ensure_p_integral(&b, p, "block B")?;
    ensure_p_integral(&c, p, "block C")?;
    Ok(DecompositionTriple { a, b, c, i, j, t })
}

/// Checks one cell: B + C vanishes mod p³ and A matches the single-cell
/// target t binom(i+j,i) binom(i+j+t,i+j) / (i+j+1) mod p³.
pub fn decomposition_check(p: u64, i: u64, j: u64, t: u64) -> Result<CheckReport> {
    let triple = decomposition_triple(p, i, j, t)?;
    let modulus = Modulus::new(p, 3);
    let params = params_from(&[("i", i as i64), ("j", j as i64), ("t", t as i64)]);
    let bc = make_residue(&(&triple.b + &triple.c), modulus)?;
    let zero = Residue::new(Integer::zero(), modulus);
    if bc != zero {
        return Ok(CheckReport::comparing(
            Suite::Theorem1,
            "DECOMP",
            Some(p),
            params,
            Some(modulus),
            Value::Residue(bc),
            Value::Residue(zero),
        ));
    }
    let ij = i + j;
    let target = Rational::new(
        Integer::from(t) * binomial_exact(ij, i as i64) * binomial_exact(ij + t, ij as i64),
        Integer::from(ij + 1),
    );
    Ok(CheckReport::comparing(
        Suite::Theorem1,
        "DECOMP",
        Some(p),
        params,
        Some(modulus),
        Value::Residue(make_residue(&triple.a, modulus)?),
        Value::Residue(make_residue(&target, modulus)?),
    ))
}

/// Exact completeness: Σ_{i<r, j<s} (A+B+C) equals the plain box sum
/// over prod [0, r_i p) as rationals, before any reduction.
pub fn decomposition_completeness(p: u64, r: u64, s: u64, t: u64, budget: u128) -> Result<CheckReport> {
    ensure_odd_prime(p, 3, "DECOMP_SUM")?;
    let mut total = Rational::zero();
    for i in 0..r {
        for j in 0..s {
            let triple = decomposition_triple(p, i, j, t)?;
            total += triple.a + triple.b + triple.c;
        }
    }
    let exact = box_sum_exact(&[r * p, s * p, t * p], false, budget)?;
    Ok(CheckReport::comparing(
        Suite::Theorem1,
        "DECOMP_SUM",
        Some(p),
        params_from(&[("r", r as i64), ("s", s as i64), ("t", t as i64)]),
        None,
        Value::Exact(total),
        Value::Exact(Rational::from_integer(exact)),
    ))
}

// --- truncated-simplex steps -------------------------------------------------

/// Step congruences for the squared-sum theorem's proof.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Section5Id {
    News1,
    News2,
    S1,
    S2,
    Ch1,
    News22,
}

impl Section5Id {
    pub fn as_str(&self) -> &'static str {
        match self {
            Section5Id::News1 => "NEWS1",
            Section5Id::News2 => "NEWS2",
            Section5Id::S1 => "S1",
            Section5Id::S2 => "S2",
            Section5Id::Ch1 => "CH1",
            Section5Id::News22 => "NEWS2_2",
        }
    }

    pub const ALL: [Section5Id; 6] = [
        Section5Id::News1,
        Section5Id::News2,
        Section5Id::S1,
        Section5Id::S2,
        Section5Id::Ch1,
        Section5Id::News22,
    ];
}

impl FromStr for Section5Id {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Section5Id::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

/// Visits every (m1, m2, m3) with m1+m2+m3 < p, passing the exact
/// trinomial coefficient, m1, and the total.
fn simplex_trinomials<F: FnMut(&Integer, u64, u64)>(p: u64, mut f: F) {
    for m1 in 0..p {
        // b12 = binom(m1+m2, m1), advanced in m2
        let mut b12 = Integer::one();
        for m2 in 0..p - m1 {
            if m2 > 0 {
                b12 = b12 * (m1 + m2) / m2;
            }
            // full = multinomial(m1, m2, m3), advanced in m3
            let mut full = b12.clone();
            for m3 in 0..p - m1 - m2 {
                if m3 > 0 {
                    full = full * (m1 + m2 + m3) / m3;
                }
                f(&full, m1, m1 + m2 + m3);
            }
        }
    }
}

fn residue_report(
    suite: Suite,
    id: &str,
    p: u64,
    params: Params,
    modulus: Modulus,
    lhs: &Rational,
    rhs: &Rational,
) -> Result<CheckReport> {
    Ok(CheckReport::comparing(
        suite,
        id,
        Some(p),
        params,
        Some(modulus),
        Value::Residue(make_residue(lhs, modulus)?),
        Value::Residue(make_residue(rhs, modulus)?),
    ))
}

/// Checks one truncated-simplex step congruence; NEWS2_2 takes its
/// column b, all other ids take no parameter.
pub fn verify_section5_step(id: Section5Id, p: u64, b: Option<u64>) -> Result<CheckReport> {
    ensure_odd_prime(p, 3, id.as_str())?;
    let half = (p - 1) / 2;
    match id {
        Section5Id::News1 => {
            // Σ_{m1+m2+m3<p} multinomial² ≡ 1 mod p²
            let modulus = Modulus::new(p, 2);
            let pk = modulus.value();
            let pk_big = modulus.big_value();
            let mut acc = 0u64;
            simplex_trinomials(p, |mult, _, _| {
                let v = (mult % &pk_big).to_u64().expect("fits");
                acc = (acc + mulmod(v, v, pk)) % pk;
            });
            residue_report(
                Suite::Section5,
                id.as_str(),
                p,
                Params::new(),
                modulus,
                &Rational::from_integer(Integer::from(acc)),
                &Rational::one(),
            )
        }
        Section5Id::News2 => {
            // Σ multinomial² (H_{m1+m2+m3} - H_{m1}) ≡ 0 mod p
            let modulus = Modulus::new(p, 1);
            let (l, hl) = harmonic_scaled(p - 1);
            let mut acc = Integer::zero();
            simplex_trinomials(p, |mult, m1, total| {
                let weight = &hl[total as usize] - &hl[m1 as usize];
                acc += mult * mult * weight;
            });
            residue_report(
                Suite::Section5,
                id.as_str(),
                p,
                Params::new(),
                modulus,
                &Rational::new(acc, l),
                &Rational::zero(),
            )
        }
        Section5Id::S1 => {
            // Σ_{b != p'} binom(2b,b) Σ_{a=b}^{p-1} binom(a,b)² ≡ 0 mod p²
            let modulus = Modulus::new(p, 2);
            let mut acc = Integer::zero();
            for col in 0..p {
                if col == half {
                    continue;
                }
                let mut inner = Integer::zero();
                let mut bin = Integer::one();
                for a in col..p {
                    if a > col {
                        bin = bin * a / (a - col);
                    }
                    inner += &bin * &bin;
                }
                acc += binomial_exact(2 * col, col as i64) * inner;
            }
            residue_report(
                Suite::Section5,
                id.as_str(),
                p,
                Params::new(),
                modulus,
                &Rational::from_integer(acc),
                &Rational::zero(),
            )
        }
        Section5Id::S2 => {
            // binom(p-1, p') Σ_{a=p'}^{p-1} binom(a,p')² ≡ 1 mod p²
            let modulus = Modulus::new(p, 2);
            let mut inner = Integer::zero();
            let mut bin = Integer::one();
            for a in half..p {
                if a > half {
                    bin = bin * a / (a - half);
                }
                inner += &bin * &bin;
            }
            let lhs = binomial_exact(p - 1, half as i64) * inner;
            residue_report(
                Suite::Section5,
                id.as_str(),
                p,
                Params::new(),
                modulus,
                &Rational::from_integer(lhs),
                &Rational::one(),
            )
        }
        Section5Id::Ch1 => {
            // Σ_{a=0}^{p'} (-1)^{p'-a} binom(p',a) binom(p'+a,a)
            //   (2H_{2a} - H_a - H_{p'}) ≡ 0 mod p
            let modulus = Modulus::new(p, 1);
            let (l, hl) = harmonic_scaled(p - 1);
            let mut acc = Integer::zero();
            for a in 0..=half {
                let weight = Integer::from(2) * &hl[(2 * a) as usize] - &hl[a as usize] - &hl[half as usize];
                acc += alt_sign(half - a)
                    * binomial_exact(half, a as i64)
                    * binomial_exact(half + a, a as i64)
                    * weight;
            }
            residue_report(
                Suite::Section5,
                id.as_str(),
                p,
                Params::new(),
                modulus,
                &Rational::new(acc, l),
                &Rational::zero(),
            )
        }
        Section5Id::News22 => {
            // Σ_{a=b}^{p-1} binom(a,b)² (H_a - H_{a-b}) ≡ 0 mod p
            let col = b.ok_or(Error::MissingParam("b"))?;
            if col > half {
                return Err(Error::ParamOutOfRange(format!(
                    "NEWS2_2 needs b <= (p-1)/2, got b = {col}"
                )));
            }
            let modulus = Modulus::new(p, 1);
            let (l, hl) = harmonic_scaled(p - 1);
            let mut acc = Integer::zero();
            let mut bin = Integer::one();
            for a in col..p {
                if a > col {
                    bin = bin * a / (a - col);
                }
                let weight = &hl[a as usize] - &hl[(a - col) as usize];
                acc += &bin * &bin * weight;
            }
            residue_report(
                Suite::Section5,
                id.as_str(),
                p,
                params_from(&[("b", col as i64)]),
                modulus,
                &Rational::new(acc, l),
                &Rational::zero(),
            )
        }
    }
}

// --- double-sum and constant-term checks -------------------------------------

/// Closing congruences: double binomial boxes, the quadratic kernel,
/// the general-dimension box claim, and the constant-term pieces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Section6Id {
    PlainDouble,
    Super5,
    Kernel,
    Prop7,
    CtPiece1,
    CtPiece2,
    CtTotal,
}

impl Section6Id {
    pub fn as_str(&self) -> &'static str {
        match self {
            Section6Id::PlainDouble => "PLAIN_DOUBLE",
            Section6Id::Super5 => "SUPER5",
            Section6Id::Kernel => "KERNEL",
            Section6Id::Prop7 => "PROP7",
            Section6Id::CtPiece1 => "CT_PIECE1",
            Section6Id::CtPiece2 => "CT_PIECE2",
            Section6Id::CtTotal => "CT_TOTAL",
        }
    }

    pub const ALL: [Section6Id; 7] = [
        Section6Id::PlainDouble,
        Section6Id::Super5,
        Section6Id::Kernel,
        Section6Id::Prop7,
        Section6Id::CtPiece1,
        Section6Id::CtPiece2,
        Section6Id::CtTotal,
    ];
}

impl FromStr for Section6Id {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Section6Id::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

/// Σ over the rectangle [0,d1) x [0,d2) of binom(m1+m2, m1)^e mod p^k,
/// via the factorial table.
fn rectangle_binomial_sum(d1: u64, d2: u64, squared: bool, modulus: Modulus) -> Result<u64> {
    let table = FactorialTable::new(modulus.p, modulus.k, d1 + d2);
    let pk = modulus.value();
    let mut acc = 0u64;
    for m1 in 0..d1 {
        for m2 in 0..d2 {
            let mut v = table.binomial_mod(m1 + m2, m1 as i64)?.to_u64();
            if squared {
                v = mulmod(v, v, pk);
            }
            acc = (acc + v) % pk;
        }
    }
    Ok(acc)
}

fn read_radii(params: &Params) -> Result<Vec<u64>> {
    let n = get_param(params, "n")? as u64;
    if !(1..=8).contains(&n) {
        return Err(Error::ParamOutOfRange(format!("PROP7 needs 1 <= n <= 8, got n = {n}")));
    }
    (1..=n)
        .map(|idx| {
            let key = format!("r{idx}");
            let v = params.get(&key).copied().ok_or(Error::MissingParam("r1..rn"))?;
            u64::try_from(v).map_err(|_| Error::ParamOutOfRange(format!("{key} = {v} must be positive")))
        })
        .collect()
}

/// Checks one closing congruence. PLAIN_DOUBLE and SUPER5 take (r, s);
/// PROP7 takes n and r1..rn; the rest take no parameters. Multi-part
/// ids emit one report per part.
pub fn verify_section6(id: Section6Id, p: u64, params: &Params, budget: u128) -> Result<Vec<CheckReport>> {
    // the box double sums inherit the standing p > 3 hypothesis: the
    // plain one is a Wolstenholme statement and 19 is not 1 mod 27
    let min = match id {
        Section6Id::PlainDouble | Section6Id::Super5 | Section6Id::Prop7 => 5,
        _ => 3,
    };
    ensure_odd_prime(p, min, id.as_str())?;
    let suite = Suite::Section6;
    match id {
        Section6Id::PlainDouble => {
            let r = get_param(params, "r")? as u64;
            let s = get_param(params, "s")? as u64;
            let ps = params_from(&[("r", r as i64), ("s", s as i64)]);
            let modulus = Modulus::new(p, 3);
            let big = rectangle_binomial_sum(r * p, s * p, false, modulus)?;
            let closed = binomial_exact(r + s, r as i64) - Integer::one();
            let mut part1_params = ps.clone();
            part1_params.insert("part".into(), 1);
            let part1 = CheckReport::comparing(
                suite,
                id.as_str(),
                Some(p),
                part1_params,
                Some(modulus),
                Value::Residue(Residue::new(Integer::from(big), modulus)),
                Value::Residue(Residue::new(closed.clone(), modulus)),
            );
            // the closed form equals the small rectangle sum exactly
            let small: Integer = (0..r)
                .flat_map(|m1| (0..s).map(move |m2| binomial_exact(m1 + m2, m1 as i64)))
                .sum();
            let mut part2_params = ps;
            part2_params.insert("part".into(), 2);
            let part2 = CheckReport::comparing(
                suite,
                id.as_str(),
                Some(p),
                part2_params,
                None,
                Value::Exact(Rational::from_integer(small)),
                Value::Exact(Rational::from_integer(closed)),
            );
            Ok(vec![part1, part2])
        }
        Section6Id::Super5 => {
            let r = get_param(params, "r")? as u64;
            let s = get_param(params, "s")? as u64;
            let modulus = Modulus::new(p, 2);
            let big = rectangle_binomial_sum(r * p, s * p, true, modulus)?;
            let small: Integer = (0..r)
                .flat_map(|m1| {
                    (0..s).map(move |m2| {
                        let b = binomial_exact(m1 + m2, m1 as i64);
                        &b * &b
                    })
                })
                .sum();
            let rhs = Integer::from(legendre(&Integer::from(p), 3)) * small;
            Ok(vec![CheckReport::comparing(
                suite,
                id.as_str(),
                Some(p),
                params_from(&[("r", r as i64), ("s", s as i64)]),
                Some(modulus),
                Value::Residue(Residue::new(Integer::from(big), modulus)),
                Value::Residue(Residue::new(rhs, modulus)),
            )])
        }
        Section6Id::Kernel => {
            // Σ_{m1+m2<p} binom(m1+m2,m1)² ≡ legendre(p|3) mod p², summed
            // directly without the convolution shortcut
            let modulus = Modulus::new(p, 2);
            let table = FactorialTable::new(p, 2, p);
            let pk = modulus.value();
            let mut acc = 0u64;
            for m1 in 0..p {
                for m2 in 0..p - m1 {
                    let v = table.binomial_mod(m1 + m2, m1 as i64)?.to_u64();
                    acc = (acc + mulmod(v, v, pk)) % pk;
                }
            }
            let rhs = Integer::from(legendre(&Integer::from(p), 3));
            Ok(vec![CheckReport::comparing(
                suite,
                id.as_str(),
                Some(p),
                Params::new(),
                Some(modulus),
                Value::Residue(Residue::new(Integer::from(acc), modulus)),
                Value::Residue(Residue::new(rhs, modulus)),
            )])
        }
        Section6Id::Prop7 => {
            let radii = read_radii(params)?;
            let spec = SumSpec::new(radii.clone(), p, false, 1)?;
            let modulus = Modulus::new(p, 1);
            let lhs = multi_sum_lhs(&spec, budget)?;
            let rhs = Residue::new(multi_sum_rhs(&radii, false), modulus);
            let mut ps = params_from(&[("n", radii.len() as i64)]);
            for (idx, r) in radii.iter().enumerate() {
                ps.insert(format!("r{}", idx + 1), *r as i64);
            }
            Ok(vec![CheckReport::comparing(
                suite,
                id.as_str(),
                Some(p),
                ps,
                Some(modulus),
                Value::Residue(lhs),
                Value::Residue(rhs),
            )])
        }
        Section6Id::CtPiece1 => {
            // Σ_j binom(p-1,j)³ ≡ 1 + 3p q mod p²
            let modulus = Modulus::new(p, 2);
            let mut acc = Integer::zero();
            let mut bin = Integer::one();
            for jj in 0..p {
                if jj > 0 {
                    bin = bin * (p - jj) / jj;
                }
                acc += &bin * &bin * &bin;
            }
            let rhs = Integer::one() + Integer::from(3 * p) * fermat_quotient_exact(p);
            let report = CheckReport::comparing(
                suite,
                id.as_str(),
                Some(p),
                Params::new(),
                Some(modulus),
                Value::Residue(Residue::new(acc, modulus)),
                Value::Residue(Residue::new(rhs, modulus)),
            );
            Ok(vec![report])
        }
        Section6Id::CtPiece2 => {
            let modulus = Modulus::new(p, 2);
            let q = fermat_quotient_exact(p);
            let target = Rational::from_integer(Integer::from(-3) * Integer::from(p as i64) * q);
            // part 1: 3 Σ_{i+j<p-1} binom(p-1,i) binom(p-1,j) binom(p,i+j+1) binom(i+j,i)
            let mut acc = Integer::zero();
            for i in 0..p - 1 {
                for j in 0..p - 1 - i {
                    acc += binomial_exact(p - 1, i as i64)
                        * binomial_exact(p - 1, j as i64)
                        * binomial_exact(p, (i + j + 1) as i64)
                        * binomial_exact(i + j, i as i64);
                }
            }
            let part1 = residue_report(
                suite,
                id.as_str(),
                p,
                params_from(&[("part", 1)]),
                modulus,
                &Rational::from_integer(acc * 3),
                &target,
            )?;
            // part 2: the same target via the exact rational step
            // 3p Σ_{k=0}^{p-2} 2^k/(k+1)
            let mut sum = Rational::zero();
            let mut pow = Integer::one();
            for k in 0..p - 1 {
                sum += Rational::new(pow.clone(), Integer::from(k + 1));
                pow *= 2;
            }
            let lhs2 = Rational::from_integer(Integer::from(3 * p)) * sum;
            let part2 = residue_report(
                suite,
                id.as_str(),
                p,
                params_from(&[("part", 2)]),
                modulus,
                &lhs2,
                &target,
            )?;
            Ok(vec![part1, part2])
        }
        Section6Id::CtTotal => {
            // full box Σ_{m1,m2,m3<p} multinomial ≡ 1 mod p²
            let spec = SumSpec::new(vec![1, 1, 1], p, false, 2)?;
            let modulus = Modulus::new(p, 2);
            let lhs = multi_sum_lhs(&spec, budget)?;
            Ok(vec![CheckReport::comparing(
                suite,
                id.as_str(),
                Some(p),
                Params::new(),
                Some(modulus),
                Value::Residue(lhs),
                Value::Residue(Residue::new(Integer::one(), modulus)),
            )])
        }
    }
}

// --- exploratory scan ---------------------------------------------------------

/// Residues compared by the open n-dimensional question; nothing is
/// asserted about them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpenQuestionScan {
    pub p: u64,
    pub n: u64,
    pub truncated: Residue,
    pub full_box: Residue,
}

/// Reports Σ multinomial² mod p over the simplex m1+...+mn < p and
/// over the full box [0,p)^n, for study.
pub fn explore_open_question(p: u64, n: u64, budget: u128) -> Result<OpenQuestionScan> {
    ensure_odd_prime(p, 3, "OPEN_Q")?;
    if n < 2 {
        return Err(Error::ParamOutOfRange(format!("scan needs dimension >= 2, got {n}")));
    }
    let modulus = Modulus::new(p, 1);
    let p_big = modulus.big_value();
    let dims = vec![p; n as usize];
    let mut trunc = 0u64;
    let mut full = 0u64;
    box_odometer(&dims, budget, |mult, _, total| {
        let v = (mult % &p_big).to_u64().expect("fits");
        let sq = mulmod(v, v, p);
        full = (full + sq) % p;
        if total < p {
            trunc = (trunc + sq) % p;
        }
    })?;
    Ok(OpenQuestionScan {
        p,
        n,
        truncated: Residue::new(Integer::from(trunc), modulus),
        full_box: Residue::new(Integer::from(full), modulus),
    })
}
