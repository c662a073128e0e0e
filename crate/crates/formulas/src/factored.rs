use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::real::Real;

/// A positive rational held as prime exponents, or zero.
///
/// Products of factorials and Pochhammer symbols with positive integer
/// arguments stay cheap in this form (Legendre's formula), so large product
/// formulas and their ratios can be evaluated exactly.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factored {
    zero: bool,
    exps: BTreeMap<u64, i64>,
}

pub(crate) fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (0..=n).filter(|&i| sieve[i]).map(|i| i as u64).collect()
}

impl Factored {
    pub fn one() -> Self {
        Factored::default()
    }

    pub fn zero() -> Self {
        Factored { zero: true, exps: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.zero
    }

    fn bump(&mut self, p: u64, e: i64) {
        if e == 0 {
            return;
        }
        let slot = self.exps.entry(p).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.exps.remove(&p);
        }
    }

    /// Multiply by `n^sign`; `n = 0` with positive sign makes the value zero.
    pub fn mul_int(&mut self, n: u64, sign: i64) {
        if n == 0 {
            assert!(sign > 0, "division by zero");
            self.zero = true;
            return;
        }
        let mut m = n;
        let mut p = 2;
        while p * p <= m {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            self.bump(p, e * sign);
            p += 1;
        }
        if m > 1 {
            self.bump(m, sign);
        }
    }

    /// Multiply by `(n!)^sign`.
    pub fn mul_factorial(&mut self, n: u64, sign: i64) {
        for p in primes_up_to(n) {
            let mut e = 0;
            let mut q = n;
            while q >= p {
                q /= p;
                e += q as i64;
            }
            self.bump(p, e * sign);
        }
    }

    /// Multiply by `((q)_n)^sign = ((q + n - 1)! / (q - 1)!)^sign` for `q >= 1`.
    pub fn mul_pochhammer(&mut self, q: u64, n: u64, sign: i64) {
        assert!(q >= 1, "rising factorial from a non-positive start");
        if n == 0 {
            return;
        }
        self.mul_factorial(q + n - 1, sign);
        self.mul_factorial(q - 1, -sign);
    }

    /// Multiply by `p^e` for a prime `p`.
    pub fn mul_prime_power(&mut self, p: u64, e: i64) {
        self.bump(p, e);
    }

    pub fn mul(&mut self, other: &Factored) {
        self.zero |= other.zero;
        for (&p, &e) in &other.exps {
            self.bump(p, e);
        }
    }

    pub fn div(&mut self, other: &Factored) {
        assert!(!other.zero, "division by zero");
        for (&p, &e) in &other.exps {
            self.bump(p, -e);
        }
    }

    pub fn exponents(&self) -> &BTreeMap<u64, i64> {
        &self.exps
    }

    pub fn is_integer(&self) -> bool {
        self.zero || self.exps.values().all(|&e| e >= 0)
    }

    pub fn to_rational(&self) -> BigRational {
        if self.zero {
            return BigRational::zero();
        }
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for (&p, &e) in &self.exps {
            let pe = BigUint::from(p).pow(e.unsigned_abs() as u32);
            if e > 0 {
                num *= pe;
            } else {
                den *= pe;
            }
        }
        BigRational::new_raw(BigInt::from(num), BigInt::from(den))
    }

    /// The value as an integer, if it is one.
    pub fn to_biguint(&self) -> Option<BigUint> {
        if !self.is_integer() {
            return None;
        }
        self.to_rational().to_integer().to_biguint()
    }

    /// Natural logarithm at `bits` bits of precision; `None` for zero.
    pub fn ln(&self, bits: u32) -> Option<Real> {
        if self.zero {
            return None;
        }
        let mut acc = Real::zero(bits);
        for (&p, &e) in &self.exps {
            let lp = Real::from_u64(p, bits).ln();
            acc = acc.add(&lp.mul_int(e));
        }
        Some(acc)
    }
}
