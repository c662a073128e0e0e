use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::factored::Factored;

/// Bits needed to carry `digits` significant decimal digits, plus guard
/// bits for accumulated rounding.
pub fn bits_for_digits(digits: u32) -> u32 {
    (f64::from(digits) * std::f64::consts::LOG2_10).ceil() as u32 + 40
}

/// A binary floating-point number `mant * 2^exp` whose mantissa carries
/// `bits` significant bits. The exponent is unbounded, so very large and
/// very small magnitudes are represented without overflow.
#[derive(Debug, Clone)]
pub struct Real {
    mant: BigInt,
    exp: i64,
    bits: u32,
}

fn shift(n: &BigInt, by: i64) -> BigInt {
    match by.cmp(&0) {
        Ordering::Greater => n << by as usize,
        Ordering::Less => n >> (-by) as usize,
        Ordering::Equal => n.clone(),
    }
}

impl Real {
    fn normalized(mant: BigInt, exp: i64, bits: u32) -> Real {
        if mant.is_zero() {
            return Real { mant, exp: 0, bits };
        }
        let len = mant.bits() as i64;
        let excess = len - i64::from(bits);
        if excess > 0 {
            // round half away from zero
            let sign = mant.sign();
            let mag = mant.abs();
            let half = BigInt::one() << (excess - 1) as usize;
            let mut m = (mag + half) >> excess as usize;
            if sign == Sign::Minus {
                m = -m;
            }
            Real::normalized_exact(m, exp + excess, bits)
        } else {
            Real { mant: mant << (-excess) as usize, exp: exp + excess, bits }
        }
    }

    // after rounding the mantissa may have grown by one bit
    fn normalized_exact(mant: BigInt, exp: i64, bits: u32) -> Real {
        let len = mant.bits() as i64;
        if len > i64::from(bits) {
            let extra = len - i64::from(bits);
            Real { mant: mant >> extra as usize, exp: exp + extra, bits }
        } else {
            Real { mant, exp, bits }
        }
    }

    pub fn zero(bits: u32) -> Real {
        Real { mant: BigInt::zero(), exp: 0, bits }
    }

    pub fn from_bigint(n: BigInt, bits: u32) -> Real {
        Real::normalized(n, 0, bits)
    }

    pub fn from_u64(n: u64, bits: u32) -> Real {
        Real::from_bigint(BigInt::from(n), bits)
    }

    pub fn from_i64(n: i64, bits: u32) -> Real {
        Real::from_bigint(BigInt::from(n), bits)
    }

    pub fn from_rational(r: &BigRational, bits: u32) -> Real {
        Real::from_bigint(r.numer().clone(), bits + 8)
            .div(&Real::from_bigint(r.denom().clone(), bits + 8))
            .round_to(bits)
    }

    /// Nearest double, for reporting.
    pub fn to_f64(&self) -> f64 {
        if self.mant.is_zero() {
            return 0.0;
        }
        let len = self.mant.bits() as i64;
        let top = shift(&self.mant, 60 - len).to_f64().unwrap_or(0.0);
        let e = self.exp + len - 60;
        if e > 2000 {
            return top.signum() * f64::INFINITY;
        }
        if e < -2000 {
            return 0.0;
        }
        top * 2f64.powi(e as i32)
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn round_to(&self, bits: u32) -> Real {
        Real::normalized(self.mant.clone(), self.exp, bits)
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn neg(&self) -> Real {
        Real { mant: -&self.mant, exp: self.exp, bits: self.bits }
    }

    pub fn abs(&self) -> Real {
        Real { mant: self.mant.abs(), exp: self.exp, bits: self.bits }
    }

    pub fn add(&self, other: &Real) -> Real {
        let bits = self.bits.max(other.bits);
        if self.is_zero() {
            return other.round_to(bits);
        }
        if other.is_zero() {
            return self.round_to(bits);
        }
        let top_a = self.exp + self.mant.bits() as i64;
        let top_b = other.exp + other.mant.bits() as i64;
        let gap = i64::from(bits) + 4;
        if top_a - top_b > gap {
            return self.round_to(bits);
        }
        if top_b - top_a > gap {
            return other.round_to(bits);
        }
        let e = self.exp.min(other.exp);
        let sum = shift(&self.mant, self.exp - e) + shift(&other.mant, other.exp - e);
        Real::normalized(sum, e, bits)
    }

    pub fn sub(&self, other: &Real) -> Real {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Real) -> Real {
        let bits = self.bits.max(other.bits);
        Real::normalized(&self.mant * &other.mant, self.exp + other.exp, bits)
    }

    pub fn div(&self, other: &Real) -> Real {
        assert!(!other.is_zero(), "division by zero");
        let bits = self.bits.max(other.bits);
        let extra = i64::from(bits) + 4 + other.mant.bits() as i64 - self.mant.bits() as i64;
        let extra = extra.max(0);
        let q = shift(&self.mant, extra) / &other.mant;
        Real::normalized(q, self.exp - extra - other.exp, bits)
    }

    pub fn mul_int(&self, n: i64) -> Real {
        Real::normalized(&self.mant * n, self.exp, self.bits)
    }

    pub fn div_int(&self, n: i64) -> Real {
        self.div(&Real::from_i64(n, self.bits))
    }

    pub fn mul_pow2(&self, e: i64) -> Real {
        Real { mant: self.mant.clone(), exp: self.exp + e, bits: self.bits }
    }

    /// Whether `|self - other| <= rel * max(|self|, |other|)`.
    pub fn close_to(&self, other: &Real, rel: &Real) -> bool {
        let diff = self.sub(other).abs();
        let scale = if self.abs().cmp(&other.abs()) == Ordering::Less { other.abs() } else { self.abs() };
        diff.cmp(&scale.mul(rel)) != Ordering::Greater
    }

    pub fn sqrt(&self) -> Real {
        assert!(!self.is_negative(), "square root of a negative number");
        if self.is_zero() {
            return self.clone();
        }
        let mut s = 2 * i64::from(self.bits) + 4 - self.mant.bits() as i64;
        if (self.exp - s).rem_euclid(2) != 0 {
            s += 1;
        }
        let root = shift(&self.mant, s).sqrt();
        Real::normalized(root, (self.exp - s) / 2, self.bits)
    }

    /// The value as a fixed-point integer with `w` fractional bits.
    fn fixed(&self, w: u32) -> BigInt {
        shift(&self.mant, self.exp + i64::from(w))
    }

    fn from_fixed(f: BigInt, w: u32, bits: u32) -> Real {
        Real::normalized(f, -i64::from(w), bits)
    }

    pub fn ln2(bits: u32) -> Real {
        let w = bits + 32;
        let one = BigInt::one() << w as usize;
        let third = &one / 3;
        Real::from_fixed(atanh_fixed(&third, w) << 1usize, w, bits)
    }

    pub fn pi(bits: u32) -> Real {
        let w = bits + 32;
        let a = atan_inv_fixed(5, w) * 16;
        let b = atan_inv_fixed(239, w) * 4;
        Real::from_fixed(a - b, w, bits)
    }

    /// Natural logarithm of a positive number.
    pub fn ln(&self) -> Real {
        assert!(!self.is_zero() && !self.is_negative(), "logarithm of a non-positive number");
        let w = self.bits + 32;
        let len = self.mant.bits() as i64;
        let e2 = self.exp + len - 1;
        // y = mant / 2^(len-1) in [1, 2), as fixed point
        let y = shift(&self.mant, i64::from(w) - (len - 1));
        let one = BigInt::one() << w as usize;
        let u = ((&y - &one) << w as usize) / (&y + &one);
        let ln_y = atanh_fixed(&u, w) << 1usize;
        let ln2 = Real::ln2(w);
        Real::from_fixed(ln_y, w, w).add(&ln2.mul_int(e2)).round_to(self.bits)
    }

    pub fn exp(&self) -> Real {
        let bits = self.bits;
        if self.is_zero() {
            return Real::from_u64(1, bits);
        }
        let w = bits + 64;
        let ln2 = Real::ln2(w + 64);
        let n = (self.to_f64() / std::f64::consts::LN_2).round() as i64;
        let r = self.round_to(w + 64).sub(&ln2.mul_int(n));
        const HALVINGS: u32 = 16;
        let rf = r.fixed(w) >> HALVINGS as usize;
        let one = BigInt::one() << w as usize;
        let mut sum = one.clone();
        let mut term = one;
        let mut j: u64 = 1;
        loop {
            term = ((&term * &rf) >> w as usize) / j;
            if term.is_zero() {
                break;
            }
            sum += &term;
            j += 1;
        }
        for _ in 0..HALVINGS {
            sum = (&sum * &sum) >> w as usize;
        }
        Real::from_fixed(sum, w, bits).mul_pow2(n)
    }

    /// `self^y` for positive `self`.
    pub fn pow(&self, y: &Real) -> Real {
        self.ln().mul(y).exp()
    }

    pub fn powi(&self, mut n: i64) -> Real {
        let mut base = if n < 0 { Real::from_u64(1, self.bits).div(self) } else { self.clone() };
        n = n.abs();
        let mut acc = Real::from_u64(1, self.bits);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        acc
    }

    /// Scientific notation with `digits` significant digits (rounded);
    /// the exponent suffix is omitted when it is zero.
    pub fn to_sig_string(&self, digits: u32) -> String {
        let digits = digits.max(1);
        if self.is_zero() {
            return "0".to_string();
        }
        let sign = if self.is_negative() { "-" } else { "" };
        let mag = self.mant.abs();
        let log10 = (mag.bits() as f64 + self.exp as f64 - 1.0) * std::f64::consts::LOG10_2;
        let mut e10 = log10.floor() as i64;
        let lower = BigInt::from(10).pow(digits - 1);
        let upper = BigInt::from(10).pow(digits);
        for _ in 0..4 {
            let k = i64::from(digits) - 1 - e10;
            let mut num = mag.clone();
            let mut den = BigInt::one();
            if k >= 0 {
                num *= BigInt::from(10).pow(k as u32);
            } else {
                den *= BigInt::from(10).pow((-k) as u32);
            }
            if self.exp >= 0 {
                num <<= self.exp as usize;
            } else {
                den <<= (-self.exp) as usize;
            }
            let (q, r) = num.div_rem(&den);
            let n = if (r << 1usize) >= den { q + 1 } else { q };
            if n >= upper {
                e10 += 1;
                continue;
            }
            if n < lower {
                e10 -= 1;
                continue;
            }
            let s = n.to_string();
            let body = if s.len() > 1 { format!("{}.{}", &s[..1], &s[1..]) } else { s };
            return if e10 == 0 { format!("{sign}{body}") } else { format!("{sign}{body}e{e10}") };
        }
        unreachable!("decimal exponent estimate off by more than four")
    }
}

// Ordering is by value; the working precision plays no part.
impl Ord for Real {
    fn cmp(&self, other: &Real) -> Ordering {
        let d = self.sub(other);
        if d.is_zero() {
            Ordering::Equal
        } else if d.is_negative() {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Real) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Real) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Real {}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = (f64::from(self.bits.saturating_sub(40)) / std::f64::consts::LOG2_10).floor() as u32;
        write!(f, "{}", self.to_sig_string(digits.max(1)))
    }
}

/// `atanh(u)` for fixed-point `u` (|u| <= 1/3) with `w` fractional bits.
fn atanh_fixed(u: &BigInt, w: u32) -> BigInt {
    let u2 = (u * u) >> w as usize;
    let mut power = u.clone();
    let mut sum = BigInt::zero();
    let mut k: u64 = 1;
    while !power.is_zero() {
        sum += &power / k;
        power = (&power * &u2) >> w as usize;
        k += 2;
    }
    sum
}

/// `atan(1/n)` in fixed point with `w` fractional bits.
fn atan_inv_fixed(n: u64, w: u32) -> BigInt {
    let n2 = BigInt::from(n * n);
    let mut power = (BigInt::one() << w as usize) / n;
    let mut sum = BigInt::zero();
    let mut k: u64 = 1;
    let mut positive = true;
    while !power.is_zero() {
        let term = &power / k;
        if positive {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &n2;
        k += 2;
        positive = !positive;
    }
    sum
}

/// Bernoulli numbers `B_0, B_1, ...` (with `B_1 = -1/2`), computed on
/// demand from `sum_{k<=n} C(n+1, k) B_k = 0`.
#[derive(Debug, Default)]
pub(crate) struct Bernoulli {
    values: Vec<BigRational>,
}

impl Bernoulli {
    pub(crate) fn get(&mut self, m: usize) -> &BigRational {
        while self.values.len() <= m {
            let n = self.values.len();
            if n == 0 {
                self.values.push(BigRational::one());
                continue;
            }
            if n > 1 && n % 2 == 1 {
                self.values.push(BigRational::zero());
                continue;
            }
            let mut binom = BigInt::one();
            let mut acc = BigRational::zero();
            for (k, bk) in self.values.iter().enumerate() {
                if !bk.is_zero() {
                    acc += bk * BigRational::from_integer(binom.clone());
                }
                binom = binom * BigInt::from(n + 1 - k) / BigInt::from(k + 1);
            }
            self.values.push(-acc / BigRational::from_integer(BigInt::from(n + 1)));
        }
        &self.values[m]
    }
}

/// `ln A` for the Glaisher–Kinkelin constant `A`, by Euler–Maclaurin
/// summation of `sum k ln k`:
///
/// `ln A = sum_{k<=N} k ln k - (N^2/2 + N/2 + 1/12) ln N + N^2/4
///         + sum_{j>=2} B_{2j} / (2j (2j-1) (2j-2)) N^(2-2j)`.
pub fn ln_glaisher(bits: u32) -> Real {
    let w = bits + 32;
    let n = (u64::from(bits) / 3).max(20);
    let mut hyper = Factored::one();
    for k in 2..=n {
        hyper.mul_int(k, k as i64);
    }
    let sum = hyper.ln(w).expect("positive");
    let nr = BigRational::from_integer(BigInt::from(n));
    let coeff = &nr * &nr / BigRational::from_integer(2.into())
        + &nr / BigRational::from_integer(2.into())
        + BigRational::new(1.into(), 12.into());
    let ln_n = Real::from_u64(n, w).ln();
    let quarter = &nr * &nr / BigRational::from_integer(4.into());
    let mut total = sum.sub(&Real::from_rational(&coeff, w).mul(&ln_n)).add(&Real::from_rational(&quarter, w));

    let tolerance = Real::from_u64(1, w).mul_pow2(-(i64::from(w)) - 8);
    let mut b = Bernoulli::default();
    let mut correction = BigRational::zero();
    let mut n_pow = BigRational::one(); // N^(2-2j)
                                        // the series is asymptotic; its terms shrink until j is about pi N
    for j in 2..=(3 * n) as usize {
        n_pow /= &nr * &nr ;
        let j2 = (2 * j) as i64;
        let den = BigRational::from_integer(BigInt::from(j2 * (j2 - 1) * (j2 - 2)));
        let term = b.get(2 * j) / den * &n_pow;
        correction += &term;
        if Real::from_rational(&term.abs(), w).cmp(&tolerance) == Ordering::Less {
            break;
        }
    }
    total = total.add(&Real::from_rational(&correction, w));
    total.round_to(bits)
}

/// `ln Gamma(x)` for rational `x > 0`: shift up by the recurrence, then
/// Stirling's series with exact Bernoulli coefficients.
pub fn ln_gamma(x: &BigRational, bits: u32) -> Real {
    assert!(x.is_positive(), "ln_gamma needs a positive argument");
    let w = bits + 32;
    let threshold = BigRational::from_integer(BigInt::from(u64::from(bits) / 2 + 10));
    let mut x = x.clone();
    let mut shift_prod = BigRational::one();
    while x < threshold {
        shift_prod *= &x;
        x += BigRational::one();
    }
    let xr = Real::from_rational(&x, w);
    let ln_x = xr.ln();
    let half = Real::from_u64(1, w).mul_pow2(-1);
    let two_pi = Real::pi(w).mul_int(2);
    let mut total = xr.sub(&half).mul(&ln_x).sub(&xr).add(&two_pi.ln().mul(&half));
    let tolerance = Real::from_u64(1, w).mul_pow2(-(i64::from(w)) - 8);
    let max_j = 2 * (u64::from(bits) / 2 + 10) as usize;
    let mut b = Bernoulli::default();
    let x2 = &x * &x;
    let mut x_pow = x.clone(); // x^(2j-1)
    for j in 1..=max_j {
        let j2 = (2 * j) as i64;
        let term = b.get(2 * j) / (BigRational::from_integer(BigInt::from(j2 * (j2 - 1))) * &x_pow);
        let t = Real::from_rational(&term, w);
        total = total.add(&t);
        if t.abs().cmp(&tolerance) == Ordering::Less {
            break;
        }
        x_pow *= &x2;
    }
    total.sub(&Real::from_rational(&shift_prod, w).ln()).round_to(bits)
}

/// The Glaisher–Kinkelin constant `A = 1.2824271291...` to `digits`
/// significant digits.
pub fn glaisher(digits: u32) -> Real {
    let bits = bits_for_digits(digits);
    ln_glaisher(bits + 16).exp().round_to(bits)
}
