//! Multiple harmonic sums H_n(s_1,...,s_r; x).
//!
//! H_n(s; x) sums prod_i x_i^{k_i} / k_i^{|s_i|} over 1 <= k_1 < ... < k_r <= n,
//! where x_i = x when s_i < 0 and x_i = 1 otherwise. The exact evaluator rolls
//! one prefix DP over m = 1..n in O(depth * n) rational operations; the modular
//! evaluator runs the same DP in Z/p^kZ with a tabulated inverse table and is
//! contractually equal to the exact value reduced.

use num_traits::{One, Zero};

use crate::arith::{self, make_residue, Integer, Modulus, Rational, Residue};
use crate::error::{Error, Result};

/// Exponent string s and twist x of a multiple harmonic sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarmonicSignature {
    s: Vec<i32>,
    x: Rational,
}

impl HarmonicSignature {
    pub fn new(s: Vec<i32>, x: Rational) -> HarmonicSignature {
        assert!(!s.is_empty(), "signature needs at least one exponent");
        assert!(s.iter().all(|&e| e != 0), "signature exponents must be nonzero");
        HarmonicSignature { s, x }
    }

    /// Untwisted signature (x = 1).
    pub fn plain(s: Vec<i32>) -> HarmonicSignature {
        HarmonicSignature::new(s, Rational::one())
    }

    pub fn exponents(&self) -> &[i32] {
        &self.s
    }

    pub fn twist(&self) -> &Rational {
        &self.x
    }

    pub fn depth(&self) -> usize {
        self.s.len()
    }

    pub fn weight(&self) -> u32 {
        self.s.iter().map(|e| e.unsigned_abs()).sum()
    }
}

/// Exact H_n(s; x) by the prefix DP; zero whenever n < depth.
pub fn harmonic_eval_exact(n: u64, sig: &HarmonicSignature) -> Rational {
    let r = sig.depth();
    let mut a = vec![Rational::zero(); r + 1];
    a[0] = Rational::one();
    let mut x_pow = Rational::one();
    for m in 1..=n {
        x_pow *= &sig.x;
        // a[i] grows by f_i(m) * a[i-1]; descending i keeps a[i-1] at depth m-1
        for i in (1..=r).rev() {
            if a[i - 1].is_zero() {
                continue;
            }
            let e = sig.s[i - 1];
            let mw = Integer::from(m).pow(e.unsigned_abs());
            let f = if e < 0 {
                &x_pow / mw
            } else {
                Rational::new(Integer::one(), mw)
            };
            let add = f * &a[i - 1];
            a[i] += add;
        }
    }
    a.pop().unwrap()
}

/// H_n(s; x) computed directly in Z/p^kZ; requires n < p so every index inverts.
pub fn harmonic_eval_mod(n: u64, sig: &HarmonicSignature, modulus: Modulus) -> Result<Residue> {
    if n >= modulus.p {
        return Err(Error::IndexRangeTooLarge { n, p: modulus.p });
    }
    let pk = modulus.value();
    let x = make_residue(&sig.x, modulus)?.to_u64();
    let inv: Vec<u64> = (0..=n)
        .map(|m| if m == 0 { 0 } else { arith::inv_u64(m % pk, pk) })
        .collect();
    let r = sig.depth();
    let mut a = vec![0u64; r + 1];
    a[0] = 1 % pk;
    let mut x_pow = 1 % pk;
    for m in 1..=n {
        x_pow = arith::mulmod(x_pow, x, pk);
        for i in (1..=r).rev() {
            let e = sig.s[i - 1];
            let mut f = if e < 0 { x_pow } else { 1 % pk };
            for _ in 0..e.unsigned_abs() {
                f = arith::mulmod(f, inv[m as usize], pk);
            }
            a[i] = (a[i] + arith::mulmod(f, a[i - 1], pk)) % pk;
        }
    }
    Ok(Residue::new(Integer::from(a[r]), modulus))
}

/// H_0..H_n as exact rationals.
pub(crate) fn harmonic_prefix(n: u64) -> Vec<Rational> {
    let mut h = Vec::with_capacity(n as usize + 1);
    let mut acc = Rational::zero();
    h.push(acc.clone());
    for m in 1..=n {
        acc += Rational::new(Integer::one(), Integer::from(m));
        h.push(acc.clone());
    }
    h
}

/// (L, [H_0 * L, ..., H_n * L]) with L = lcm(1..=n); every entry is an integer.
pub(crate) fn harmonic_scaled(n: u64) -> (Integer, Vec<Integer>) {
    let mut l = Integer::one();
    for m in 1..=n {
        l = num_integer::lcm(l, Integer::from(m));
    }
    let mut table = Vec::with_capacity(n as usize + 1);
    table.push(Integer::zero());
    for m in 1..=n {
        let step = &l / Integer::from(m);
        table.push(&table[(m - 1) as usize] + step);
    }
    (l, table)
}
