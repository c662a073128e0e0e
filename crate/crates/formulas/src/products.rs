use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::factored::Factored;

/// Rising factorial `q (q+1) ... (q+n-1)`; the empty product is 1.
pub fn pochhammer(q: &BigRational, n: u64) -> BigRational {
    let mut acc = BigRational::one();
    let mut t = q.clone();
    for _ in 0..n {
        if t.is_zero() {
            return BigRational::zero();
        }
        acc *= &t;
        t += BigRational::one();
    }
    acc
}

fn integer(f: &Factored) -> BigUint {
    f.to_biguint().expect("counting formula evaluated to a non-integer")
}

/// Plane partitions in an `x * y * z` box:
/// `prod_{i<=x} prod_{j<=y} (i+j+z-1)/(i+j-1)`, which is the telescoped
/// form of the triple product over `k <= z` of `(i+j+k-1)/(i+j+k-2)`.
pub fn macmahon_box_factored(x: u64, y: u64, z: u64) -> Factored {
    let mut f = Factored::one();
    for i in 1..=x {
        for j in 1..=y {
            f.mul_int(i + j + z - 1, 1);
            f.mul_int(i + j - 1, -1);
        }
    }
    f
}

pub fn macmahon_box(x: u64, y: u64, z: u64) -> BigUint {
    integer(&macmahon_box_factored(x, y, z))
}

/// Symmetric plane partitions in an `a * a * b` box:
/// `prod_{i<=a} [ (b+2i-1)/(2i-1) prod_{i<j<=a} (b+i+j-1)/(i+j-1) ]`.
pub fn spp_factored(a: u64, b: u64) -> Factored {
    let mut f = Factored::one();
    for i in 1..=a {
        f.mul_int(b + 2 * i - 1, 1);
        f.mul_int(2 * i - 1, -1);
        for j in i + 1..=a {
            f.mul_int(b + i + j - 1, 1);
            f.mul_int(i + j - 1, -1);
        }
    }
    f
}

pub fn spp(a: u64, b: u64) -> BigUint {
    integer(&spp_factored(a, b))
}

/// Free-boundary tilings of the flashlight region, as a product.
///
/// Vanishes when `x < k + p`. Products whose index limits are out of order
/// are 1; in particular the `(.)_{z-1}` ratio over `i < p` is 1 at `z = 0`.
pub fn flashlight_factored(x: u64, z: u64, k: u64, p: u64) -> Factored {
    if x < k + p {
        return Factored::zero();
    }
    let mut f = Factored::one();
    for i in 1..z {
        f.mul_int(k + i, 1);
        f.mul_int(i, -1);
    }
    if z >= 1 {
        for i in 0..p {
            f.mul_pochhammer(x + z + k + p - 2 * i, z - 1, 1);
            f.mul_pochhammer(x + k + p - 2 * i, z - 1, -1);
        }
    }
    for i in 1..z {
        for j in 2..=i {
            f.mul_int(2 * k + i + j - 1, 1);
            f.mul_int(i + j - 1, -1);
        }
    }
    for j in 1..=k {
        let len = 2 * z + 4 * k + 3 - 4 * j;
        f.mul_pochhammer(x - k - p + 2 * j - 1, len, 1);
        f.mul_pochhammer(2 * j - 1, len, -1);
    }
    for j in 1..=z {
        let len = 2 * z + 1 - 2 * j;
        f.mul_pochhammer(x + k - p + j, len, 1);
        f.mul_pochhammer(2 * k + j, len, -1);
    }
    f
}

pub fn flashlight_formula(x: u64, z: u64, k: u64, p: u64) -> BigUint {
    integer(&flashlight_factored(x, z, k, p))
}

/// Horizontally and vertically symmetric tilings of the hexagon with
/// sides `2x, 2y` and a centred butterfly hole of parameters `2k, p`.
///
/// Written out in terms of `y` rather than delegating to the flashlight
/// product, so the two can be checked against each other. Zero when the
/// hole does not fit (`y < k` or `x < k + p`).
pub fn butterfly_sym_factored(x: u64, y: u64, k: u64, p: u64) -> Factored {
    if y < k || x < k + p {
        return Factored::zero();
    }
    let mut f = Factored::one();
    // i runs 1..=y-k-1
    for i in 1..(y - k) {
        f.mul_int(k + i, 1);
        f.mul_int(i, -1);
    }
    if y > k {
        for i in 0..p {
            f.mul_pochhammer(x + y + p - 2 * i, y - k - 1, 1);
            f.mul_pochhammer(x + k + p - 2 * i, y - k - 1, -1);
        }
    }
    for i in 1..(y - k) {
        for j in 2..=i {
            f.mul_int(2 * k + i + j - 1, 1);
            f.mul_int(i + j - 1, -1);
        }
    }
    for j in 1..=k {
        let len = 2 * y + 2 * k + 3 - 4 * j;
        f.mul_pochhammer(x - k - p + 2 * j - 1, len, 1);
        f.mul_pochhammer(2 * j - 1, len, -1);
    }
    for j in 1..=(y - k) {
        let len = 2 * y - 2 * k + 1 - 2 * j;
        f.mul_pochhammer(x + k - p + j, len, 1);
        f.mul_pochhammer(2 * k + j, len, -1);
    }
    f
}

pub fn butterfly_sym_formula(x: u64, y: u64, k: u64, p: u64) -> BigUint {
    integer(&butterfly_sym_factored(x, y, k, p))
}

/// Limiting correlation of a corner dent: `3^((k-p)(k-p+1)/2) / 2^(2k^2+k+p^2)`.
pub fn corner_correlation_factored(k: u64, p: u64) -> Factored {
    let d = k as i64 - p as i64;
    let mut f = Factored::one();
    f.mul_prime_power(3, d * (d + 1) / 2);
    f.mul_prime_power(2, -((2 * k * k + k + p * p) as i64));
    f
}

pub fn corner_correlation(k: u64, p: u64) -> BigRational {
    corner_correlation_factored(k, p).to_rational()
}
