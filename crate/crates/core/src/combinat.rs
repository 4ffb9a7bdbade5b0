//! Binomials and multinomials, exact and mod p^k, and abelian-square counts.
//!
//! The modular path decomposes n! = p^v · u with p ∤ u and tabulates
//! (v, u mod p^k) so that binomials mod p^k cost three lookups and one
//! inversion even when p divides binomial factors. The exact path is the
//! oracle the modular path is tested against.

use num_traits::{One, Zero};

use crate::arith::{self, Integer, Modulus, Residue};
use crate::error::{Error, Result};

/// A vector of nonnegative integers with at least one entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiIndex(Vec<u64>);

impl MultiIndex {
    pub fn new(parts: Vec<u64>) -> MultiIndex {
        assert!(!parts.is_empty(), "multi-index needs at least one entry");
        MultiIndex(parts)
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl From<Vec<u64>> for MultiIndex {
    fn from(parts: Vec<u64>) -> MultiIndex {
        MultiIndex::new(parts)
    }
}

// --- factorial tables -----------------------------------------------------

/// Factorials up to a bound, stored as p-adic valuation plus unit part mod p^k.
#[derive(Debug, Clone)]
pub struct FactorialTable {
    modulus: Modulus,
    val: Vec<u32>,
    unit: Vec<u64>,
}

impl FactorialTable {
    /// Tabulates n! = p^{val[n]} · unit[n] for 0 <= n <= n_max.
    pub fn new(p: u64, k: u32, n_max: u64) -> FactorialTable {
        let modulus = Modulus::new(p, k);
        let pk = modulus.value();
        let len = (n_max + 1) as usize;
        let mut val = Vec::with_capacity(len);
        let mut unit = Vec::with_capacity(len);
        val.push(0u32);
        unit.push(1 % pk);
        for i in 1..=n_max {
            let (mut u, mut a) = (i, 0u32);
            while u % p == 0 {
                u /= p;
                a += 1;
            }
            val.push(val[(i - 1) as usize] + a);
            unit.push(arith::mulmod(unit[(i - 1) as usize], u % pk, pk));
        }
        FactorialTable { modulus, val, unit }
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn n_max(&self) -> u64 {
        (self.val.len() - 1) as u64
    }

    /// (ν_p(n!), n!/p^ν mod p^k).
    pub fn factorial_parts(&self, n: u64) -> Result<(u32, u64)> {
        if n > self.n_max() {
            return Err(Error::IndexOutOfTable { n, n_max: self.n_max() });
        }
        Ok((self.val[n as usize], self.unit[n as usize]))
    }

    /// binom(n, m) mod p^k; m outside [0, n] gives 0.
    pub fn binomial_mod(&self, n: u64, m: i64) -> Result<Residue> {
        if n > self.n_max() {
            return Err(Error::IndexOutOfTable { n, n_max: self.n_max() });
        }
        if m < 0 || m as u64 > n {
            return Ok(Residue::zero(self.modulus));
        }
        let m = m as u64;
        Ok(self.from_parts(n, &[m, n - m]))
    }

    /// multinomial(sum idx; idx) mod p^k.
    pub fn multinomial_mod(&self, idx: &MultiIndex) -> Result<Residue> {
        let n = idx.sum();
        if n > self.n_max() {
            return Err(Error::IndexOutOfTable { n, n_max: self.n_max() });
        }
        Ok(self.from_parts(n, idx.parts()))
    }

    /// n! / (parts_1! ... parts_r!) mod p^k, assuming sum(parts) = n <= n_max.
    fn from_parts(&self, n: u64, parts: &[u64]) -> Residue {
        debug_assert_eq!(parts.iter().sum::<u64>(), n);
        let pk = self.modulus.value();
        let mut v = self.val[n as usize] as i64;
        let mut den_unit = 1 % pk;
        for &m in parts {
            v -= self.val[m as usize] as i64;
            den_unit = arith::mulmod(den_unit, self.unit[m as usize], pk);
        }
        debug_assert!(v >= 0, "negative valuation in a multinomial");
        if v as u32 >= self.modulus.k {
            return Residue::zero(self.modulus);
        }
        let mut r = arith::mulmod(self.unit[n as usize], arith::inv_u64(den_unit, pk), pk);
        for _ in 0..v {
            r = arith::mulmod(r, self.modulus.p % pk, pk);
        }
        Residue::new(Integer::from(r), self.modulus)
    }
}

// --- exact binomials --------------------------------------------------------

/// Exact binom(n, m); m outside [0, n] gives 0.
pub fn binomial_exact(n: u64, m: i64) -> Integer {
    if m < 0 || m as u64 > n {
        return Integer::zero();
    }
    let m = (m as u64).min(n - m as u64);
    let mut b = Integer::one();
    for i in 0..m {
        b = b * Integer::from(n - i) / Integer::from(i + 1);
    }
    b
}

/// Exact multinomial coefficient (sum idx)! / prod(idx_i!).
pub fn multinomial_exact(idx: &MultiIndex) -> Integer {
    let mut b = Integer::one();
    let mut s = 0u64;
    for &m in idx.parts() {
        s += m;
        b *= binomial_exact(s, m as i64);
    }
    b
}

/// The row binom(n, 0..=n) as exact integers.
pub fn binomial_row(n: u64) -> Vec<Integer> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut b = Integer::one();
    row.push(b.clone());
    for i in 0..n {
        b = b * Integer::from(n - i) / Integer::from(i + 1);
        row.push(b.clone());
    }
    row
}

/// T(n, k) = (-1)^{n-k} binom(n, k) binom(n+k, k). Zero for k > n.
pub fn t_term(n: u64, k: u64) -> Integer {
    let b = binomial_exact(n, k as i64) * binomial_exact(n + k, k as i64);
    // parity of n + k equals parity of n - k, and never underflows
    if (n + k) % 2 == 0 {
        b
    } else {
        -b
    }
}

// --- abelian squares --------------------------------------------------------

/// f_alphabet(n): number of abelian squares of length 2n, as the sum of
/// squared multinomials over compositions of n into `alphabet` parts.
pub fn abelian_square_count(alphabet: u64, n: u64) -> Integer {
    assert!(alphabet >= 1, "alphabet must have at least one letter");
    if alphabet == 1 {
        return Integer::one();
    }
    let row = binomial_row(n);
    // odometer over the first alphabet-1 parts (the last part is forced);
    // pref[j] holds the multinomial of parts 0..=j and is updated by one
    // multiply and one exact divide per step
    let free = (alphabet - 1) as usize;
    let mut m = vec![0u64; free];
    let mut pref = vec![Integer::one(); free];
    let mut sum = 0u64;
    let mut total = Integer::zero();
    loop {
        let full = &pref[free - 1] * &row[sum as usize];
        total += &full * &full;
        let mut advanced = false;
        for j in (0..free).rev() {
            if sum < n {
                m[j] += 1;
                sum += 1;
                let prefix_sum: u64 = m[..=j].iter().sum();
                pref[j] = &pref[j] * Integer::from(prefix_sum) / Integer::from(m[j]);
                for i in j + 1..free {
                    pref[i] = pref[j].clone();
                }
                advanced = true;
                break;
            }
            sum -= m[j];
            m[j] = 0;
        }
        if !advanced {
            return total;
        }
    }
}

/// Brute-force referee: enumerates every string of length 2n over the
/// alphabet and counts those whose halves have equal letter multisets.
pub fn abelian_square_oracle(alphabet: u64, n: u64, max_strings: u128) -> Result<Integer> {
    assert!(alphabet >= 1, "alphabet must have at least one letter");
    match (alphabet as u128).checked_pow(2 * n as u32) {
        Some(c) if c <= max_strings => {}
        Some(c) => return Err(Error::EnumerationTooLarge { count: c, bound: max_strings }),
        None => return Err(Error::EnumerationTooLarge { count: u128::MAX, bound: max_strings }),
    }
    let len = (2 * n) as usize;
    let mut digits = vec![0u64; len];
    let mut matches = Integer::zero();
    loop {
        let mut first = vec![0u64; alphabet as usize];
        let mut second = vec![0u64; alphabet as usize];
        for i in 0..len {
            if i < len / 2 {
                first[digits[i] as usize] += 1;
            } else {
                second[digits[i] as usize] += 1;
            }
        }
        if first == second {
            matches += 1;
        }
        let mut advanced = false;
        for j in (0..len).rev() {
            if digits[j] + 1 < alphabet {
                digits[j] += 1;
                digits[j + 1..].fill(0);
                advanced = true;
                break;
            }
        }
        if !advanced {
            return Ok(matches);
        }
    }
}
