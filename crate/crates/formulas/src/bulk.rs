use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::factored::Factored;
use crate::real::{bits_for_digits, ln_glaisher, Real};

/// `mantissa * pi^pi_exp`, exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiScaledRational {
    pub mantissa: BigRational,
    pub pi_exp: i64,
}

impl PiScaledRational {
    pub fn to_real(&self, bits: u32) -> Real {
        let m = Real::from_rational(&self.mantissa, bits + 16);
        m.mul(&Real::pi(bits + 16).powi(self.pi_exp)).round_to(bits)
    }

    /// Natural logarithm (the mantissa must be positive).
    pub fn ln(&self, bits: u32) -> Real {
        assert!(self.mantissa.is_positive(), "logarithm of a non-positive value");
        let w = bits + 32;
        let num = Real::from_bigint(self.mantissa.numer().clone(), w).ln();
        let den = Real::from_bigint(self.mantissa.denom().clone(), w).ln();
        num.sub(&den).add(&Real::pi(w).ln().mul_int(self.pi_exp)).round_to(bits)
    }
}

impl fmt::Display for PiScaledRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pi_exp {
            0 => write!(f, "{}", self.mantissa),
            e => write!(f, "{}*pi^{}", self.mantissa, e),
        }
    }
}

/// `Gamma(n + 1/2) = (2n)! / (4^n n!) * sqrt(pi)`: multiplies the rational
/// part into `f` and returns the power of `sqrt(pi)` contributed.
fn mul_gamma_half(f: &mut Factored, n: u64, sign: i64) -> i64 {
    f.mul_factorial(2 * n, sign);
    f.mul_factorial(n, -sign);
    f.mul_prime_power(2, -2 * n as i64 * sign);
    sign
}

/// `Gamma(n) = (n-1)!` for `n >= 1`.
fn mul_gamma_int(f: &mut Factored, n: u64, sign: i64) {
    assert!(n >= 1);
    f.mul_factorial(n - 1, sign);
}

/// The bulk correlation of a butterfly hole as a rational part and a
/// power of `pi`:
///
/// `pi^-k Gamma(2k+1) Gamma(k+1/2) / (Gamma(k+1) Gamma(2k+1/2))
///  * [prod_{i<=k} Gamma(i) Gamma(2i-1) / Gamma(k+i-1/2)]^2 * 3^(2k^2) / 2^(6k^2+2k)`.
pub fn bulk_correlation_factored(k: u64) -> (Factored, i64) {
    let mut f = Factored::one();
    // powers of sqrt(pi)
    let mut half_pi = -2 * k as i64;
    mul_gamma_int(&mut f, 2 * k + 1, 1);
    half_pi += mul_gamma_half(&mut f, k, 1);
    mul_gamma_int(&mut f, k + 1, -1);
    half_pi += mul_gamma_half(&mut f, 2 * k, -1);
    for i in 1..=k {
        mul_gamma_int(&mut f, i, 2);
        mul_gamma_int(&mut f, 2 * i - 1, 2);
        half_pi += mul_gamma_half(&mut f, k + i - 1, -2);
    }
    f.mul_prime_power(3, 2 * (k * k) as i64);
    f.mul_prime_power(2, -((6 * k * k + 2 * k) as i64));
    debug_assert_eq!(half_pi % 2, 0);
    (f, half_pi / 2)
}

pub fn bulk_correlation(k: u64) -> PiScaledRational {
    let (f, pi_exp) = bulk_correlation_factored(k);
    PiScaledRational { mantissa: f.to_rational(), pi_exp }
}

/// `ln` of the bulk correlation, without expanding the rational part.
pub fn ln_bulk_correlation(k: u64, bits: u32) -> Real {
    let (f, pi_exp) = bulk_correlation_factored(k);
    let w = bits + 32;
    f.ln(w).expect("positive").add(&Real::pi(w).ln().mul_int(pi_exp)).round_to(bits)
}

/// `ln` of the large-`k` law
/// `e^(1/4) / (A^3 2^(1/6) k^(1/4)) * 3^(2k^2) / 2^(8k^2)`.
pub fn ln_bulk_asymptote(k: u64, bits: u32) -> Real {
    let w = bits + 32;
    let ln2 = Real::ln2(w);
    let ln3 = Real::from_u64(3, w).ln();
    let kk = (k * k) as i64;
    Real::from_u64(1, w)
        .mul_pow2(-2)
        .sub(&ln_glaisher(w).mul_int(3))
        .sub(&ln2.div_int(6))
        .sub(&Real::from_u64(k, w).ln().mul_pow2(-2))
        .add(&ln3.mul_int(2 * kk))
        .sub(&ln2.mul_int(8 * kk))
        .round_to(bits)
}

/// The large-`k` law for the bulk correlation, to `digits` significant
/// digits.
pub fn bulk_asymptote(k: u64, digits: u32) -> Result<Real> {
    if k == 0 {
        return Err(Error::AsymptoteAtZero);
    }
    if digits < 15 {
        return Err(Error::TooFewDigits { digits, min: 15 });
    }
    let bits = bits_for_digits(digits);
    // the exponent is large, so carry extra bits through the logarithm
    let extra = 64 - (k * k).leading_zeros() + 8;
    Ok(ln_bulk_asymptote(k, bits + extra).exp().round_to(bits))
}

/// Relative tolerance `10^-(digits-10)` used when comparing reals computed
/// at `digits` digits.
pub fn tolerance(digits: u32) -> Real {
    let bits = bits_for_digits(digits);
    let e = digits.saturating_sub(10);
    Real::from_u64(1, bits).div(&Real::from_bigint(BigInt::from(10).pow(e), bits))
}
