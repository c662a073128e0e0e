use lozenge_count::{mf_profile_dp, CountValue};
use lozenge_regions::flashlight;
use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};

/// The eight flashlight counts in the condensation recurrence, and whether
/// `M(x,z,k,p) M(x,z-2,k+1,p+1) + M(x-1,z-1,k+1,p) M(x+1,z-1,k,p+1)
///  = M(x+1,z-2,k+1,p) M(x-1,z,k,p+1) + M(x,z-1,k,p) M(x,z-1,k+1,p+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceCheck {
    /// `((x, z, k, p), count)` in the order of the statement above.
    pub terms: Vec<((u32, u32, u32, u32), BigUint)>,
    pub lhs: BigUint,
    pub rhs: BigUint,
}

impl RecurrenceCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Free-boundary tilings of the flashlight region by the transfer-matrix
/// engine; parameters with `x + z < k + p` describe no region and count 0.
pub fn flashlight_count(x: u32, z: u32, k: u32, p: u32) -> Result<BigUint> {
    if x + z < k + p {
        return Ok(BigUint::zero());
    }
    let count: CountValue = mf_profile_dp(&flashlight(x, z, k, p)?);
    Ok(count.to_biguint().expect("tiling counts are non-negative integers"))
}

pub fn verify_flashlight_recurrence(x: u32, z: u32, k: u32, p: u32) -> Result<RecurrenceCheck> {
    if x < 1 || z < 2 {
        return Err(Error::InvalidParameters(format!("the recurrence needs x >= 1 and z >= 2, got x = {x}, z = {z}")));
    }
    let params = [
        (x, z, k, p),
        (x, z - 2, k + 1, p + 1),
        (x - 1, z - 1, k + 1, p),
        (x + 1, z - 1, k, p + 1),
        (x + 1, z - 2, k + 1, p),
        (x - 1, z, k, p + 1),
        (x, z - 1, k, p),
        (x, z - 1, k + 1, p + 1),
    ];
    let mut terms = Vec::with_capacity(8);
    for q in params {
        terms.push((q, flashlight_count(q.0, q.1, q.2, q.3)?));
    }
    let lhs = &terms[0].1 * &terms[1].1 + &terms[2].1 * &terms[3].1;
    let rhs = &terms[4].1 * &terms[5].1 + &terms[6].1 * &terms[7].1;
    Ok(RecurrenceCheck { terms, lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_values() {
        assert!(verify_flashlight_recurrence(3, 2, 0, 0).unwrap().holds());
        let zero = verify_flashlight_recurrence(1, 2, 0, 0).unwrap();
        assert!(zero.holds());
        assert!(verify_flashlight_recurrence(4, 3, 1, 1).unwrap().holds());
        assert!(verify_flashlight_recurrence(0, 2, 0, 0).is_err());
    }
}
