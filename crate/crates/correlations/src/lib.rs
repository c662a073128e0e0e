//! Finite-size correlations of dents with a corner and in the bulk,
//! compared against their limiting and asymptotic laws.

use std::cmp::Ordering;

use lozenge_formulas::{
    bits_for_digits, bulk_asymptote, corner_correlation_factored, flashlight_factored, ln_bulk_asymptote,
    ln_bulk_correlation, Factored, Real,
};
use num_rational::BigRational;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Formula(#[from] lozenge_formulas::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

/// One grid point of a report.
#[derive(Debug, Clone)]
pub struct ConvergencePoint {
    pub point: u64,
    pub value: Real,
    /// Relative deviation from the target law.
    pub deviation: Real,
}

/// Values and deviations over a parameter grid, at a declared precision.
#[derive(Debug, Clone)]
pub struct ConvergenceReport {
    pub label: String,
    pub digits: u32,
    pub points: Vec<ConvergencePoint>,
}

impl ConvergenceReport {
    /// Whether the deviations never increase along the grid.
    pub fn non_increasing(&self) -> bool {
        self.points.windows(2).all(|w| w[1].deviation.cmp(&w[0].deviation) != Ordering::Greater)
    }

    pub fn final_deviation(&self) -> Option<&Real> {
        self.points.last().map(|p| &p.deviation)
    }

    /// Non-increasing deviations ending below `tolerance`.
    pub fn converges_within(&self, tolerance: f64) -> bool {
        self.non_increasing() && self.final_deviation().is_some_and(|d| d.to_f64() < tolerance)
    }
}

fn check_grid(grid: &[u64], min: u64, what: &str) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::Precondition(format!("empty {what} grid")));
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Precondition(format!("{what} grid {grid:?} is not increasing")));
    }
    if grid[0] < min {
        return Err(Error::Precondition(format!("{what} grid starts at {}, below {min}", grid[0])));
    }
    Ok(())
}

fn corner_ratio_factored(x: u64, k: u64, p: u64) -> Result<Factored> {
    if x < k + p {
        return Err(Error::Precondition(format!("corner ratio needs x >= k + p, got x = {x}, k = {k}, p = {p}")));
    }
    let mut f = flashlight_factored(x, x - k, k, p);
    f.div(&flashlight_factored(x, x, 0, 0));
    Ok(f)
}

/// Tilings of the flashlight with a corner dent over those without, at
/// size `x`; exact at every size (prime exponents keep the products cheap).
pub fn corner_ratio(x: u64, k: u64, p: u64) -> Result<BigRational> {
    corner_ratio_factored(x, k, p).map(|f| f.to_rational())
}

fn abs_minus_one(r: &Real) -> Real {
    r.sub(&Real::from_u64(1, r.bits())).abs()
}

/// `|corner_ratio(x,k,p) / corner_correlation(k,p) - 1|` over the grid.
pub fn corner_convergence(k: u64, p: u64, x_grid: &[u64], digits: u32) -> Result<ConvergenceReport> {
    check_grid(x_grid, k + p, "x")?;
    let bits = bits_for_digits(digits);
    let limit = corner_correlation_factored(k, p);
    let mut points = Vec::with_capacity(x_grid.len());
    for &x in x_grid {
        let ratio = corner_ratio_factored(x, k, p)?;
        let mut rel = ratio.clone();
        rel.div(&limit);
        let value = Real::from_rational(&ratio.to_rational(), bits);
        let deviation = abs_minus_one(&Real::from_rational(&rel.to_rational(), bits));
        points.push(ConvergencePoint { point: x, value, deviation });
    }
    Ok(ConvergenceReport { label: format!("corner k={k} p={p}"), digits, points })
}

/// `|bulk_correlation(k) / bulk_asymptote(k) - 1|` over the grid.
pub fn bulk_ratio_check(k_grid: &[u64], digits: u32) -> Result<ConvergenceReport> {
    check_grid(k_grid, 4, "k")?;
    // validates digits
    bulk_asymptote(k_grid[0], digits)?;
    let bits = bits_for_digits(digits);
    let mut points = Vec::with_capacity(k_grid.len());
    for &k in k_grid {
        // the logarithms are large; carry the extra bits they need
        let w = bits + 64 - (k * k).leading_zeros() + 8;
        let ln_exact = ln_bulk_correlation(k, w);
        let value = ln_exact.exp().round_to(bits);
        let ratio = ln_exact.sub(&ln_bulk_asymptote(k, w)).exp();
        points.push(ConvergencePoint { point: k, value, deviation: abs_minus_one(&ratio).round_to(bits) });
    }
    Ok(ConvergenceReport { label: "bulk".to_string(), digits, points })
}

/// `ln(sqrt(3)/4)`.
fn ln_root3_over_4(bits: u32) -> Real {
    Real::from_u64(3, bits).ln().mul_pow2(-1).sub(&Real::ln2(bits).mul_int(2))
}

/// Log-asymptotic ratios `r1 = ln corner_correlation(k,0) / (k^2 ln(sqrt3/4))`
/// and `r2 = ln bulk_correlation(k) / (4 k^2 ln(sqrt3/4))`, reported as two
/// series whose deviations are `|r - 1|`.
pub fn log_asymptotics_table(k_grid: &[u64], digits: u32) -> Result<[ConvergenceReport; 2]> {
    check_grid(k_grid, 1, "k")?;
    let bits = bits_for_digits(digits);
    let mut r1 = Vec::new();
    let mut r2 = Vec::new();
    for &k in k_grid {
        let w = bits + 64 - (k * k).leading_zeros() + 8;
        let scale = ln_root3_over_4(w).mul_int((k * k) as i64);
        let corner = corner_correlation_factored(k, 0).ln(w).expect("positive");
        let a = corner.div(&scale).round_to(bits);
        let b = ln_bulk_correlation(k, w).div(&scale.mul_int(4)).round_to(bits);
        r1.push(ConvergencePoint { point: k, deviation: abs_minus_one(&a), value: a });
        r2.push(ConvergencePoint { point: k, deviation: abs_minus_one(&b), value: b });
    }
    Ok([
        ConvergenceReport { label: "r1 corner".to_string(), digits, points: r1 },
        ConvergenceReport { label: "r2 bulk".to_string(), digits, points: r2 },
    ])
}

/// `r1(k) = 1 + (ln3/2 - ln2) / (k (ln3/2 - 2 ln2))`, the closed form of
/// the corner log-ratio.
pub fn r1_closed_form(k: u64, bits: u32) -> Real {
    let ln3_half = Real::from_u64(3, bits).ln().mul_pow2(-1);
    let ln2 = Real::ln2(bits);
    let num = ln3_half.sub(&ln2);
    let den = ln3_half.sub(&ln2.mul_int(2)).mul_int(k as i64);
    Real::from_u64(1, bits).add(&num.div(&den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn trivial_dent_has_ratio_one() {
        for x in [0, 1, 5, 40] {
            assert_eq!(corner_ratio(x, 0, 0).unwrap(), BigRational::one());
        }
        assert!(corner_ratio(2, 2, 1).is_err());
    }

    #[test]
    fn zero_dent_report_is_exact() {
        let r = corner_convergence(0, 0, &[4, 8, 16], 30).unwrap();
        assert!(r.points.iter().all(|p| p.deviation.is_zero()));
        assert!(r.non_increasing());
    }

    #[test]
    fn grids_are_validated() {
        assert!(corner_convergence(1, 1, &[8, 4], 30).is_err());
        assert!(corner_convergence(3, 3, &[5, 8], 30).is_err());
        assert!(bulk_ratio_check(&[2, 8], 30).is_err());
        assert!(matches!(bulk_ratio_check(&[8, 16], 10), Err(Error::Formula(_))));
        assert!(log_asymptotics_table(&[0, 4], 30).is_err());
    }

    #[test]
    fn r1_matches_closed_form() {
        let [r1, _] = log_asymptotics_table(&[1, 2, 7, 100], 40).unwrap();
        let bits = bits_for_digits(40);
        for p in &r1.points {
            let closed = r1_closed_form(p.point, bits);
            assert!(p.value.close_to(&closed, &lozenge_formulas::tolerance(40)), "k = {}", p.point);
        }
    }
}
