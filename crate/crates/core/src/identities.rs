//! Exact identities between binomial sums and harmonic numbers.
//!
//! Every check here is an equality of rationals, evaluated on both
//! sides with exact arithmetic and compared once. Nothing is reduced
//! mod p; these identities feed the congruence machinery elsewhere.

use std::str::FromStr;

use num_traits::{One, Zero};

use crate::arith::{is_prime, Integer, Rational};
use crate::combinat::{binomial_exact, binomial_row, t_term};
use crate::error::{Error, Result};
use crate::harmonic::harmonic_prefix;
use crate::report::{get_param, params_from, CheckReport, Params, Suite, Value};
use crate::wz::f_term;

/// Identity catalog ids, matching the CLI names.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityId {
    H1,
    H2,
    T1,
    T2,
    T4,
    T4A,
    T4B,
    InvBinom,
    DoubleBinom,
    Hockey,
    Vandermonde,
}

impl IdentityId {
    pub fn as_str(&self) -> &'static str {
        match self {
            IdentityId::H1 => "H1",
            IdentityId::H2 => "H2",
            IdentityId::T1 => "T1",
            IdentityId::T2 => "T2",
            IdentityId::T4 => "T4",
            IdentityId::T4A => "T4A",
            IdentityId::T4B => "T4B",
            IdentityId::InvBinom => "INV_BINOM",
            IdentityId::DoubleBinom => "DOUBLE_BINOM",
            IdentityId::Hockey => "HOCKEY",
            IdentityId::Vandermonde => "VANDERMONDE",
        }
    }

    pub const ALL: [IdentityId; 11] = [
        IdentityId::H1,
        IdentityId::H2,
        IdentityId::T1,
        IdentityId::T2,
        IdentityId::T4,
        IdentityId::T4A,
        IdentityId::T4B,
        IdentityId::InvBinom,
        IdentityId::DoubleBinom,
        IdentityId::Hockey,
        IdentityId::Vandermonde,
    ];
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

fn int(v: u64) -> Rational {
    Rational::from_integer(Integer::from(v))
}

fn report(id: IdentityId, prime: Option<u64>, params: Params, lhs: Rational, rhs: Rational) -> CheckReport {
    CheckReport::comparing(
        Suite::Identities,
        id.as_str(),
        prime,
        params,
        None,
        Value::Exact(lhs),
        Value::Exact(rhs),
    )
}

fn nonneg(v: i64, name: &str) -> Result<u64> {
    u64::try_from(v).map_err(|_| Error::ParamOutOfRange(format!("{name} = {v} must be nonnegative")))
}

/// Evaluates one identity at the given parameters.
///
/// Parameter names: `n` for H1, H2, T1, T2, T4, T4A, T4B; `k` for
/// INV_BINOM; `p` for DOUBLE_BINOM; `m`, `n` for HOCKEY; `b` for
/// VANDERMONDE.
pub fn check_identity(id: IdentityId, params: &Params) -> Result<CheckReport> {
    match id {
        IdentityId::H1 => {
            let n = nonneg(get_param(params, "n")?, "n")?;
            let h = harmonic_prefix(n);
            let row = binomial_row(n);
            let lhs: Rational = (1..=n as usize).map(|k| Rational::from_integer(row[k].clone()) * &h[k]).sum();
            let geom: Rational = (1..=n)
                .map(|k| Rational::new(Integer::one(), Integer::from(k) * (Integer::one() << k as usize)))
                .sum();
            let rhs = Rational::from_integer(Integer::one() << n as usize) * (&h[n as usize] - geom);
            Ok(report(id, None, params_from(&[("n", n as i64)]), lhs, rhs))
        }
        IdentityId::H2 => {
            let n = nonneg(get_param(params, "n")?, "n")?;
            let h = harmonic_prefix(2 * n);
            let row = binomial_row(n);
            let lhs: Rational = (1..=n as usize)
                .map(|k| Rational::from_integer(&row[k] * &row[k]) * &h[k])
                .sum();
            let rhs = Rational::from_integer(binomial_exact(2 * n, n as i64))
                * (int(2) * &h[n as usize] - &h[2 * n as usize]);
            Ok(report(id, None, params_from(&[("n", n as i64)]), lhs, rhs))
        }
        IdentityId::T1 => {
            let n = nonneg(get_param(params, "n")?, "n")?;
            let lhs: Integer = (0..=n).map(|k| t_term(n, k)).sum();
            Ok(report(
                id,
                None,
                params_from(&[("n", n as i64)]),
                Rational::from_integer(lhs),
                Rational::one(),
            ))
        }
        IdentityId::T2 => {
            let n = nonneg(get_param(params, "n")?, "n")?;
            let h = harmonic_prefix(n);
            let lhs: Rational = (0..=n).map(|k| Rational::from_integer(t_term(n, k)) * &h[k as usize]).sum();
            let rhs = int(2) * &h[n as usize];
            Ok(report(id, None, params_from(&[("n", n as i64)]), lhs, rhs))
        }
        IdentityId::T4 => {
            let n = nonneg(get_param(params, "n")?, "n")?;
            let h = harmonic_prefix(2 * n);
            let lhs: Rational = (0..=n).map(|k| Rational::from_integer(t_term(n, k)) * &h[2 * k as usize]).sum();
            let rhs = int(3) * &h[n as usize] - &h[(n / 2) as usize];
            Ok(report(id, None, params_from(&[("n", n as i64)]), lhs, rhs))
        }
        IdentityId::T4A => {
            let n = nonneg(get_param(params, "n")?, "n")?;
            let lhs: Rational = if n == 0 { Rational::zero() } else { (0..n).map(|k| f_term(n, k)).sum() };
            let rhs = if n % 2 == 1 { -Rational::one() } else { Rational::zero() };
            Ok(report(id, None, params_from(&[("n", n as i64)]), lhs, rhs))
        }
        IdentityId::T4B => {
            let n = nonneg(get_param(params, "n")?, "n")?;
            let h = harmonic_prefix(2 * n);
            let mut prefix = Integer::zero();
            let mut lhs = Rational::zero();
            for j in 0..n {
                prefix += t_term(n, j);
                lhs += Rational::new(prefix.clone(), Integer::from(2 * j + 1));
            }
            let rhs = &h[2 * n as usize] - Rational::new(Integer::from(5), Integer::from(2)) * &h[n as usize]
                + &h[(n / 2) as usize];
            Ok(report(id, None, params_from(&[("n", n as i64)]), lhs, rhs))
        }
        IdentityId::InvBinom => {
            let k = nonneg(get_param(params, "k")?, "k")?;
            let lhs: Rational = if k == 0 {
                Rational::zero()
            } else {
                (0..k)
                    .map(|m| Rational::new(Integer::one(), binomial_exact(k - 1, m as i64)))
                    .sum()
            };
            let pow: Rational = (1..=k)
                .map(|j| Rational::new(Integer::one() << j as usize, Integer::from(j)))
                .sum();
            let rhs = Rational::new(Integer::from(k), Integer::one() << k as usize) * pow;
            Ok(report(id, None, params_from(&[("k", k as i64)]), lhs, rhs))
        }
        IdentityId::DoubleBinom => {
            let p = nonneg(get_param(params, "p")?, "p")?;
            assert!(p >= 1, "DOUBLE_BINOM needs p >= 1");
            let outer = binomial_row(p - 1);
            let inner = binomial_row(p);
            let mut lhs = Integer::zero();
            let mut partial = Integer::zero();
            for l in 1..p {
                partial += &inner[l as usize];
                lhs += &outer[l as usize] * &partial;
            }
            let half = (Integer::one() << (p - 1) as usize) - Integer::one();
            let rhs = (&half + Integer::one()) * &half;
            let prime = is_prime(p).then_some(p);
            Ok(report(
                id,
                prime,
                params_from(&[("p", p as i64)]),
                Rational::from_integer(lhs),
                Rational::from_integer(rhs),
            ))
        }
        IdentityId::Hockey => {
            let m_top = nonneg(get_param(params, "m")?, "m")?;
            let n_top = nonneg(get_param(params, "n")?, "n")?;
            let lhs: Integer = (0..n_top).map(|j| binomial_exact(m_top + j, j as i64)).sum();
            let rhs = Rational::new(
                Integer::from(n_top) * binomial_exact(m_top + n_top, n_top as i64),
                Integer::from(m_top + 1),
            );
            Ok(report(
                id,
                None,
                params_from(&[("m", m_top as i64), ("n", n_top as i64)]),
                Rational::from_integer(lhs),
                rhs,
            ))
        }
        IdentityId::Vandermonde => {
            let b = nonneg(get_param(params, "b")?, "b")?;
            let row = binomial_row(b);
            let lhs: Integer = row.iter().map(|c| c * c).sum();
            let rhs = binomial_exact(2 * b, b as i64);
            Ok(report(
                id,
                None,
                params_from(&[("b", b as i64)]),
                Rational::from_integer(lhs),
                Rational::from_integer(rhs),
            ))
        }
    }
}
