//! Exact integers and rationals, and residues in Z/p^kZ.
//!
//! `Integer` and `Rational` are arbitrary precision; rationals are kept
//! normalized (reduced, positive denominator) by construction. `Residue`
//! carries its modulus at runtime so that values reduced at different
//! primes or exponents can never be mixed silently.

use num_integer::Integer as IntegerTrait;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

pub type Integer = num_bigint::BigInt;
pub type Rational = num_rational::BigRational;

// --- modulus ------------------------------------------------------------

/// Prime-power modulus p^k. Desk scale: p^k must fit in a u64.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Modulus {
    pub p: u64,
    pub k: u32,
}

impl Modulus {
    /// Builds p^k; panics on k = 0, composite p, or overflow past u64.
    pub fn new(p: u64, k: u32) -> Modulus {
        assert!(k >= 1, "modulus exponent k must be at least 1");
        assert!(is_prime(p), "modulus base {p} must be prime");
        p.checked_pow(k)
            .unwrap_or_else(|| panic!("p^k overflows u64 for p = {p}, k = {k}"));
        Modulus { p, k }
    }

    /// The modulus p^k as a machine word.
    pub fn value(&self) -> u64 {
        self.p.pow(self.k)
    }

    /// The modulus p^k as an `Integer`.
    pub fn big_value(&self) -> Integer {
        Integer::from(self.value())
    }

    /// Same prime, exponent lowered to k' <= k.
    pub fn reduced(&self, k: u32) -> Modulus {
        assert!(k >= 1 && k <= self.k);
        Modulus { p: self.p, k }
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}^{}", self.p, self.k)
        }
    }
}

// --- residues -----------------------------------------------------------

/// An element of Z/p^kZ, always stored in canonical range [0, p^k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residue {
    value: Integer,
    modulus: Modulus,
}

impl Residue {
    pub fn new(value: Integer, modulus: Modulus) -> Residue {
        let value = value.mod_floor(&modulus.big_value());
        Residue { value, modulus }
    }

    pub fn zero(modulus: Modulus) -> Residue {
        Residue { value: Integer::zero(), modulus }
    }

    pub fn one(modulus: Modulus) -> Residue {
        Residue::new(Integer::one(), modulus)
    }

    pub fn value(&self) -> &Integer {
        &self.value
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// Canonical value as a machine word; p^k fits, so this cannot fail.
    pub fn to_u64(&self) -> u64 {
        self.value.to_u64().expect("canonical residue fits u64")
    }

    /// Multiplicative inverse, when the value is a unit mod p^k.
    pub fn inverse(&self) -> Option<Residue> {
        mod_inverse(&self.value, &self.modulus.big_value())
            .map(|v| Residue { value: v, modulus: self.modulus })
    }

    pub fn pow(&self, e: u64) -> Residue {
        let m = self.modulus.big_value();
        let v = self.value.modpow(&Integer::from(e), &m);
        Residue { value: v, modulus: self.modulus }
    }

    /// Same residue class mod p^k' for k' <= k.
    pub fn reduced(&self, k: u32) -> Residue {
        let modulus = self.modulus.reduced(k);
        Residue::new(self.value.clone(), modulus)
    }

    fn check_same_modulus(&self, other: &Residue) {
        assert_eq!(
            self.modulus, other.modulus,
            "mixing residues mod {} and {}",
            self.modulus, other.modulus
        );
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl Add for &Residue {
    type Output = Residue;
    fn add(self, rhs: &Residue) -> Residue {
        self.check_same_modulus(rhs);
        Residue::new(&self.value + &rhs.value, self.modulus)
    }
}

impl Sub for &Residue {
    type Output = Residue;
    fn sub(self, rhs: &Residue) -> Residue {
        self.check_same_modulus(rhs);
        Residue::new(&self.value - &rhs.value, self.modulus)
    }
}

impl Mul for &Residue {
    type Output = Residue;
    fn mul(self, rhs: &Residue) -> Residue {
        self.check_same_modulus(rhs);
        Residue::new(&self.value * &rhs.value, self.modulus)
    }
}

impl Neg for &Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        Residue::new(-&self.value, self.modulus)
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Residue {
            type Output = Residue;
            fn $method(self, rhs: Residue) -> Residue {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

// --- reduction of exact values ------------------------------------------

/// Reduces a p-integral rational mod p^k: num * den^{-1} in Z/p^kZ.
pub fn make_residue(q: &Rational, modulus: Modulus) -> Result<Residue> {
    let m = modulus.big_value();
    let den = q.denom();
    if den.mod_floor(&Integer::from(modulus.p)).is_zero() {
        return Err(Error::PDividesDenominator { p: modulus.p, value: q.to_string() });
    }
    let den_inv = mod_inverse(&den.mod_floor(&m), &m).expect("denominator coprime to p^k");
    Ok(Residue::new(q.numer().mod_floor(&m) * den_inv, modulus))
}

/// Reduces an exact integer mod p^k.
pub fn residue_of(n: &Integer, modulus: Modulus) -> Residue {
    Residue::new(n.clone(), modulus)
}

/// Fermat quotient q_p(2) = (2^{p-1} - 1)/p, reduced mod p^k. Odd p only.
pub fn fermat_quotient(p: u64, k: u32) -> Residue {
    residue_of(&fermat_quotient_exact(p), Modulus::new(p, k))
}

/// The integer (2^{p-1} - 1)/p itself. Odd p only; the division is exact.
pub fn fermat_quotient_exact(p: u64) -> Integer {
    assert!(p % 2 == 1 && is_prime(p), "Fermat quotient needs an odd prime");
    let numer = (Integer::one() << (p - 1) as usize) - Integer::one();
    let (q, r) = numer.div_rem(&Integer::from(p));
    debug_assert!(r.is_zero());
    q
}

/// Legendre symbol (a|p) in {-1, 0, 1} for an odd prime p, by Euler's criterion.
pub fn legendre(a: &Integer, p: u64) -> i8 {
    assert!(p % 2 == 1 && is_prime(p), "Legendre symbol needs an odd prime");
    let m = Integer::from(p);
    let a = a.mod_floor(&m);
    if a.is_zero() {
        return 0;
    }
    let e = Integer::from((p - 1) / 2);
    let r = a.modpow(&e, &m);
    if r.is_one() {
        1
    } else {
        -1
    }
}

// --- inverses and primes --------------------------------------------------

/// Inverse of a mod m via the extended Euclidean algorithm, if gcd(a, m) = 1.
pub fn mod_inverse(a: &Integer, m: &Integer) -> Option<Integer> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// (-1)^parity as an `Integer`.
pub(crate) fn alt_sign(parity: u64) -> Integer {
    if parity % 2 == 0 {
        Integer::one()
    } else {
        -Integer::one()
    }
}

/// (a * b) mod m without overflow; m must fit in a u64.
pub(crate) fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Inverse of a mod m for machine words; a must be a unit mod m.
pub(crate) fn inv_u64(a: u64, m: u64) -> u64 {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    assert!(r0 == 1, "{a} is not a unit mod {m}");
    t0.rem_euclid(m as i128) as u64
}

/// Deterministic trial-division primality; the scale here never warrants more.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// All primes in the inclusive range [lo, hi].
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&n| is_prime(n)).collect()
}

/// p-adic valuation of a nonzero integer.
pub fn valuation(n: &Integer, p: u64) -> u32 {
    assert!(!n.is_zero(), "valuation of zero is infinite");
    let p = Integer::from(p);
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}
