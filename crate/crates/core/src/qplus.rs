//! Exact nonnegative rationals.

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A nonnegative rational in lowest terms. Closed under `+` and `×`; there
/// is no subtraction, only [`QPlus::checked_sub`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QPlus(Ratio<BigUint>);

impl QPlus {
    pub fn zero() -> Self {
        QPlus(Ratio::zero())
    }

    pub fn one() -> Self {
        QPlus(Ratio::one())
    }

    pub fn int(n: u64) -> Self {
        QPlus(Ratio::from_integer(BigUint::from(n)))
    }

    pub fn new(numer: u64, denom: u64) -> Result<Self> {
        Self::from_parts(BigUint::from(numer), BigUint::from(denom))
    }

    pub fn from_parts(numer: BigUint, denom: BigUint) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::Parameter("zero denominator".into()));
        }
        Ok(QPlus(Ratio::new(numer, denom)))
    }

    pub fn numer(&self) -> &BigUint {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigUint {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `self - other` when it stays nonnegative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        (self >= other).then(|| QPlus(&self.0 - &other.0))
    }

    pub fn recip(&self) -> Option<Self> {
        (!self.is_zero()).then(|| QPlus(self.0.recip()))
    }

    pub fn as_ratio(&self) -> &Ratio<BigUint> {
        &self.0
    }

    /// Always `p/q`, the serialized form.
    pub fn to_fraction(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }
}

impl Default for QPlus {
    fn default() -> Self {
        QPlus::zero()
    }
}

impl Add for QPlus {
    type Output = QPlus;
    fn add(self, rhs: QPlus) -> QPlus {
        QPlus(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a QPlus> for &'a QPlus {
    type Output = QPlus;
    fn add(self, rhs: &QPlus) -> QPlus {
        QPlus(&self.0 + &rhs.0)
    }
}

impl Mul for QPlus {
    type Output = QPlus;
    fn mul(self, rhs: QPlus) -> QPlus {
        QPlus(self.0 * rhs.0)
    }
}

impl<'a> Mul<&'a QPlus> for &'a QPlus {
    type Output = QPlus;
    fn mul(self, rhs: &QPlus) -> QPlus {
        QPlus(&self.0 * &rhs.0)
    }
}

impl fmt::Display for QPlus {
    /// Integers print bare, everything else as `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for QPlus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for QPlus {
    type Err = Error;

    /// Accepts `p/q` or a bare integer `p`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not a nonnegative fraction: {s:?}"));
        let parse = |t: &str| -> Result<BigUint> {
            let t = t.trim();
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse().map_err(|_| bad())
        };
        match s.split_once('/') {
            Some((p, q)) => {
                let q = parse(q)?;
                if q.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {s:?}")));
                }
                Ok(QPlus(Ratio::new(parse(p)?, q)))
            }
            None => Ok(QPlus(Ratio::from_integer(parse(s)?))),
        }
    }
}

impl Serialize for QPlus {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_fraction())
    }
}

impl<'de> Deserialize<'de> for QPlus {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> QPlus {
        s.parse().unwrap()
    }

    #[test]
    fn parse_reduces_and_prints() {
        assert_eq!(q("4/2"), QPlus::int(2));
        assert_eq!(q("4/2").to_fraction(), "2/1");
        assert_eq!(q("3/6").to_string(), "1/2");
        assert_eq!(q("7").to_string(), "7");
        assert!("1/0".parse::<QPlus>().is_err());
        assert!("-1/2".parse::<QPlus>().is_err());
        assert!("".parse::<QPlus>().is_err());
    }

    #[test]
    fn arithmetic() {
        assert_eq!(q("1/2") + q("1/3"), q("5/6"));
        assert_eq!(q("2/3") * q("3/4"), q("1/2"));
        assert_eq!(q("1/2").checked_sub(&q("1/3")), Some(q("1/6")));
        assert_eq!(q("1/3").checked_sub(&q("1/2")), None);
        assert_eq!(q("2/5").recip(), Some(q("5/2")));
        assert_eq!(QPlus::zero().recip(), None);
    }

    #[test]
    fn json_is_a_fraction_string() {
        assert_eq!(serde_json::to_string(&q("2")).unwrap(), "\"2/1\"");
        assert_eq!(serde_json::from_str::<QPlus>("\"6/4\"").unwrap(), q("3/2"));
    }
}
