use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact matching count: an integer for unit weights, a rational in
/// general. Displays as `n` or `n/d`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CountValue(BigRational);

impl CountValue {
    pub fn zero() -> Self {
        CountValue(BigRational::zero())
    }

    pub fn one() -> Self {
        CountValue(BigRational::one())
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn into_rational(self) -> BigRational {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.0.is_integer().then(|| self.0.to_integer())
    }

    /// The value as a natural number, if it is one.
    pub fn to_biguint(&self) -> Option<BigUint> {
        self.to_integer().and_then(|n| n.to_biguint())
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

impl From<BigRational> for CountValue {
    fn from(r: BigRational) -> Self {
        CountValue(r)
    }
}

impl From<BigInt> for CountValue {
    fn from(n: BigInt) -> Self {
        CountValue(BigRational::from_integer(n))
    }
}

impl From<BigUint> for CountValue {
    fn from(n: BigUint) -> Self {
        CountValue::from(BigInt::from(n))
    }
}

impl From<u64> for CountValue {
    fn from(n: u64) -> Self {
        CountValue::from(BigInt::from(n))
    }
}

impl fmt::Display for CountValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for CountValue {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("not an exact number: {s:?}");
        match s.split_once('/') {
            None => s.trim().parse::<BigInt>().map(CountValue::from).map_err(|_| bad()),
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(CountValue(BigRational::new(n, d)))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_round_trips() {
        for s in ["0", "17", "-3/4", "123456789012345678901234567890"] {
            let v: CountValue = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
        assert_eq!("6/4".parse::<CountValue>().unwrap().to_string(), "3/2");
        assert!("1/0".parse::<CountValue>().is_err());
    }
}
