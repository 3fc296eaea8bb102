//! 2×2 matrices over [`QPlus`], the left ideal families of `M₂(ℚ⁺)` and a
//! seeded sampler.
//!
//! Entries are named by column: `a, b` form the first column and `c, d` the
//! second, so the matrix reads `[[a, c], [b, d]]` row by row.

use std::fmt;
use std::ops::{Add, Mul};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qplus::QPlus;

#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Mat2 {
    pub a: QPlus,
    pub b: QPlus,
    pub c: QPlus,
    pub d: QPlus,
}

impl Mat2 {
    pub fn zero() -> Self {
        Mat2::default()
    }

    pub fn identity() -> Self {
        Mat2 {
            a: QPlus::one(),
            d: QPlus::one(),
            ..Mat2::default()
        }
    }

    pub fn from_rows(rows: [[QPlus; 2]; 2]) -> Self {
        let [[a, c], [b, d]] = rows;
        Mat2 { a, b, c, d }
    }

    /// Integer entries, row by row.
    pub fn ints(rows: [[u64; 2]; 2]) -> Self {
        Mat2::from_rows(rows.map(|r| r.map(QPlus::int)))
    }

    pub fn rows(&self) -> [[&QPlus; 2]; 2] {
        [[&self.a, &self.c], [&self.b, &self.d]]
    }

    pub fn row(&self, i: usize) -> [QPlus; 2] {
        match i {
            0 => [self.a.clone(), self.c.clone()],
            _ => [self.b.clone(), self.d.clone()],
        }
    }

    pub fn with_row(mut self, i: usize, row: [QPlus; 2]) -> Self {
        let [x, y] = row;
        match i {
            0 => {
                self.a = x;
                self.c = y;
            }
            _ => {
                self.b = x;
                self.d = y;
            }
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        [&self.a, &self.b, &self.c, &self.d].iter().all(|x| x.is_zero())
    }

    /// Entrywise `self - other` when every entry stays nonnegative.
    pub fn checked_sub(&self, other: &Mat2) -> Option<Mat2> {
        Some(Mat2 {
            a: self.a.checked_sub(&other.a)?,
            b: self.b.checked_sub(&other.b)?,
            c: self.c.checked_sub(&other.c)?,
            d: self.d.checked_sub(&other.d)?,
        })
    }
}

impl<'a> Add<&'a Mat2> for &'a Mat2 {
    type Output = Mat2;
    fn add(self, y: &Mat2) -> Mat2 {
        Mat2 {
            a: &self.a + &y.a,
            b: &self.b + &y.b,
            c: &self.c + &y.c,
            d: &self.d + &y.d,
        }
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, y: Mat2) -> Mat2 {
        &self + &y
    }
}

impl<'a> Mul<&'a Mat2> for &'a Mat2 {
    type Output = Mat2;
    fn mul(self, y: &Mat2) -> Mat2 {
        let x = self;
        Mat2 {
            a: &x.a * &y.a + &x.c * &y.b,
            c: &x.a * &y.c + &x.c * &y.d,
            b: &x.b * &y.a + &x.d * &y.b,
            d: &x.b * &y.c + &x.d * &y.d,
        }
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, y: Mat2) -> Mat2 {
        &self * &y
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.c, self.b, self.d)
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Left ideals of `M₂(ℚ⁺)` used in the case study.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "tag", try_from = "RawFamily", into = "RawFamily")]
pub enum IdealFamily {
    Zero,
    /// Second column zero.
    E1,
    /// First column zero.
    E2,
    /// First column is `r` times the second, `r > 0`.
    N(QPlus),
    /// Second column dominates `r` times the first, entrywise.
    NGeq(QPlus),
    Full,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "tag", deny_unknown_fields)]
enum RawFamily {
    Zero,
    E1,
    E2,
    N { r: QPlus },
    NGeq { r: QPlus },
    Full,
}

impl TryFrom<RawFamily> for IdealFamily {
    type Error = Error;
    fn try_from(raw: RawFamily) -> Result<Self> {
        Ok(match raw {
            RawFamily::Zero => IdealFamily::Zero,
            RawFamily::E1 => IdealFamily::E1,
            RawFamily::E2 => IdealFamily::E2,
            RawFamily::N { r } => IdealFamily::n(r)?,
            RawFamily::NGeq { r } => IdealFamily::NGeq(r),
            RawFamily::Full => IdealFamily::Full,
        })
    }
}

impl From<IdealFamily> for RawFamily {
    fn from(f: IdealFamily) -> Self {
        match f {
            IdealFamily::Zero => RawFamily::Zero,
            IdealFamily::E1 => RawFamily::E1,
            IdealFamily::E2 => RawFamily::E2,
            IdealFamily::N(r) => RawFamily::N { r },
            IdealFamily::NGeq(r) => RawFamily::NGeq { r },
            IdealFamily::Full => RawFamily::Full,
        }
    }
}

impl IdealFamily {
    pub fn n(r: QPlus) -> Result<Self> {
        if r.is_zero() {
            return Err(Error::Parameter("N(r) needs r > 0".into()));
        }
        Ok(IdealFamily::N(r))
    }

    pub fn tag(&self) -> &'static str {
        match self {
            IdealFamily::Zero => "Zero",
            IdealFamily::E1 => "E1",
            IdealFamily::E2 => "E2",
            IdealFamily::N(_) => "N",
            IdealFamily::NGeq(_) => "NGeq",
            IdealFamily::Full => "Full",
        }
    }

    pub fn contains(&self, m: &Mat2) -> bool {
        match self {
            IdealFamily::Zero => m.is_zero(),
            IdealFamily::E1 => m.c.is_zero() && m.d.is_zero(),
            IdealFamily::E2 => m.a.is_zero() && m.b.is_zero(),
            IdealFamily::N(r) => m.a == r * &m.c && m.b == r * &m.d,
            IdealFamily::NGeq(r) => m.c >= r * &m.a && m.d >= r * &m.b,
            IdealFamily::Full => true,
        }
    }
}

impl fmt::Display for IdealFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealFamily::N(r) | IdealFamily::NGeq(r) => write!(f, "{}({r})", self.tag()),
            _ => f.write_str(self.tag()),
        }
    }
}

/// Seeded source of rationals and matrices. Trial `t` draws from its own
/// ChaCha stream, so trials are independent of evaluation order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sampler {
    pub seed: u64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { seed }
    }

    pub fn rng(&self, trial: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(trial as u64);
        rng
    }

    /// Zero with probability 1/3, otherwise `p/q` with `1 ≤ p, q ≤ 100`.
    pub fn qplus(rng: &mut impl Rng) -> QPlus {
        if rng.gen_range(0..3) == 0 {
            return QPlus::zero();
        }
        let (p, q) = (rng.gen_range(1..=100u64), rng.gen_range(1..=100u64));
        QPlus::new(p, q).expect("denominator is positive")
    }

    pub fn positive(rng: &mut impl Rng) -> QPlus {
        let (p, q) = (rng.gen_range(1..=100u64), rng.gen_range(1..=100u64));
        QPlus::new(p, q).expect("denominator is positive")
    }

    pub fn mat2(rng: &mut impl Rng) -> Mat2 {
        Mat2 {
            a: Self::qplus(rng),
            b: Self::qplus(rng),
            c: Self::qplus(rng),
            d: Self::qplus(rng),
        }
    }

    /// A random element of the family.
    pub fn member(family: &IdealFamily, rng: &mut impl Rng) -> Mat2 {
        let mut q = || Self::qplus(rng);
        match family {
            IdealFamily::Zero => Mat2::zero(),
            IdealFamily::E1 => Mat2 {
                a: q(),
                b: q(),
                ..Mat2::zero()
            },
            IdealFamily::E2 => Mat2 {
                c: q(),
                d: q(),
                ..Mat2::zero()
            },
            IdealFamily::N(r) => {
                let (c, d) = (q(), q());
                Mat2 {
                    a: r * &c,
                    b: r * &d,
                    c,
                    d,
                }
            }
            IdealFamily::NGeq(r) => {
                let (a, b, s, t) = (q(), q(), q(), q());
                Mat2 {
                    c: &(r * &a) + &s,
                    d: &(r * &b) + &t,
                    a,
                    b,
                }
            }
            IdealFamily::Full => Mat2 {
                a: q(),
                b: q(),
                c: q(),
                d: q(),
            },
        }
    }
}
