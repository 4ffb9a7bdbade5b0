//! WZ-style difference certificates for alternating binomial kernels.
//!
//! Two pairs are checked on exact rationals over a full grid. The pair
//! (F, W) satisfies F(n+2,k) - F(n,k) = W(n,k+1) - W(n,k), which
//! telescopes to the parity evaluation sum_{k<n} F(n,k) = -[n odd].
//! The pair (T, G) satisfies T(n,k) - T(n-1,k) = G(n-1,k+1) - G(n-1,k),
//! which drives the partial-sum recursion used by the harmonic variants
//! of the T-sum identities.

use std::str::FromStr;

use num_traits::One;

use crate::arith::{alt_sign, Integer, Rational};
use crate::combinat::{binomial_exact, t_term};
use crate::error::Error;
use crate::report::{params_from, CheckReport, Suite, Value};

/// The two certified pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WzPairId {
    Fw,
    Tg,
}

impl WzPairId {
    pub fn as_str(&self) -> &'static str {
        match self {
            WzPairId::Fw => "FW",
            WzPairId::Tg => "TG",
        }
    }

    pub const ALL: [WzPairId; 2] = [WzPairId::Fw, WzPairId::Tg];
}

impl FromStr for WzPairId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "FW" => Ok(WzPairId::Fw),
            "TG" => Ok(WzPairId::Tg),
            other => Err(Error::UnknownId(other.to_string())),
        }
    }
}

/// F(n, k) = n (-1)^{n-k} binom(n-1, k) binom(n+k, k) / (2k+1), for n >= 1.
pub fn f_term(n: u64, k: u64) -> Rational {
    assert!(n >= 1, "f_term needs n >= 1");
    let num = alt_sign(n + k)
        * Integer::from(n)
        * binomial_exact(n - 1, k as i64)
        * binomial_exact(n + k, k as i64);
    Rational::new(num, Integer::from(2 * k + 1))
}

/// W(n, k) = 2 (-1)^{n-k-1} binom(n, k-1) binom(n+k, k-1). Zero at k = 0.
pub fn w_term(n: u64, k: u64) -> Integer {
    alt_sign(n + k + 1)
        * Integer::from(2)
        * binomial_exact(n, k as i64 - 1)
        * binomial_exact(n + k, k as i64 - 1)
}

/// G(n, k) = 2 (-1)^{n-k} binom(n, k-1) binom(n+k, k-1). Zero at k = 0.
pub fn g_term(n: u64, k: u64) -> Integer {
    alt_sign(n + k)
        * Integer::from(2)
        * binomial_exact(n, k as i64 - 1)
        * binomial_exact(n + k, k as i64 - 1)
}

/// Parity target -[n odd] as a rational.
fn parity_value(n: u64) -> Rational {
    if n % 2 == 1 {
        Rational::from_integer(-Integer::one())
    } else {
        Rational::from_integer(Integer::from(0))
    }
}

fn count_report(id: &str, n_max: u64, checked: u64) -> CheckReport {
    let count = Value::Exact(Rational::from_integer(Integer::from(checked)));
    CheckReport::comparing(
        Suite::Wz,
        id,
        None,
        params_from(&[("n_max", n_max as i64)]),
        None,
        count.clone(),
        count,
    )
}

fn instance_fail(id: &str, n_max: u64, n: u64, k: i64, lhs: Rational, rhs: Rational) -> CheckReport {
    CheckReport::comparing(
        Suite::Wz,
        id,
        None,
        params_from(&[("n_max", n_max as i64), ("n", n as i64), ("k", k)]),
        None,
        Value::Exact(lhs),
        Value::Exact(rhs),
    )
}

/// Checks one pair on the full grid n <= n_max, plus its telescoped
/// consequences. On pass both sides report the instance count; on fail
/// the first failing instance is reported with n and k in the params.
pub fn verify_wz(pair: WzPairId, n_max: u64) -> CheckReport {
    match pair {
        WzPairId::Fw => verify_fw(n_max),
        WzPairId::Tg => verify_tg(n_max),
    }
}

fn verify_fw(n_max: u64) -> CheckReport {
    let id = WzPairId::Fw.as_str();
    let mut checked = 0u64;
    for n in 1..=n_max {
        for k in 0..=n + 1 {
            let lhs = f_term(n + 2, k) - f_term(n, k);
            let rhs = Rational::from_integer(w_term(n, k + 1) - w_term(n, k));
            if lhs != rhs {
                return instance_fail(id, n_max, n, k as i64, lhs, rhs);
            }
            checked += 1;
        }
    }
    // summing the difference over k = 0..n+1 collapses the W side, so the
    // full F-row sum is invariant under n -> n+2
    for n in 1..=n_max.saturating_sub(2) {
        let near: Rational = (0..=n + 1).map(|k| f_term(n, k)).sum();
        let far: Rational = (0..=n + 1).map(|k| f_term(n + 2, k)).sum();
        if near != far {
            return instance_fail(id, n_max, n, -1, far, near);
        }
        checked += 1;
    }
    // two base cases then propagate: the row sum only depends on parity
    for n in 1..=n_max {
        let row: Rational = (0..n).map(|k| f_term(n, k)).sum();
        let expect = parity_value(n);
        if row != expect {
            return instance_fail(id, n_max, n, -1, row, expect);
        }
        checked += 1;
    }
    count_report(id, n_max, checked)
}

fn verify_tg(n_max: u64) -> CheckReport {
    let id = WzPairId::Tg.as_str();
    let mut checked = 0u64;
    for n in 1..=n_max {
        for k in 0..=n + 1 {
            let lhs = t_term(n, k) - t_term(n - 1, k);
            let rhs = g_term(n - 1, k + 1) - g_term(n - 1, k);
            if lhs != rhs {
                return instance_fail(
                    id,
                    n_max,
                    n,
                    k as i64,
                    Rational::from_integer(lhs),
                    Rational::from_integer(rhs),
                );
            }
            checked += 1;
        }
        // partial sums: sum_{k<=j} T(n,k) = sum_{k<=j} T(n-1,k) + G(n-1,j+1)
        let mut prefix_n = Integer::from(0);
        let mut prefix_prev = Integer::from(0);
        for j in 0..=n {
            prefix_n += t_term(n, j);
            prefix_prev += t_term(n - 1, j);
            let rhs = &prefix_prev + g_term(n - 1, j + 1);
            if prefix_n != rhs {
                return instance_fail(
                    id,
                    n_max,
                    n,
                    j as i64,
                    Rational::from_integer(prefix_n),
                    Rational::from_integer(rhs),
                );
            }
            checked += 1;
        }
    }
    count_report(id, n_max, checked)
}
