//! Exact rational numbers.
//!
//! Every probability, partial sum and bound in this crate is a [`Ratio`]:
//! an arbitrary-precision fraction kept in lowest terms with a positive
//! denominator. There is no floating point anywhere in the computation
//! path; decimal rendering is display-only.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::{BigInt, Sign};
use num::rational::BigRational;
use num::traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Exact rational number: arbitrary-precision numerator over a positive
/// denominator, always reduced. Zero is stored as `0/1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ratio(BigRational);

impl Ratio {
    /// Build `num/den`, normalizing sign and reducing. Fails on `den == 0`.
    pub fn new(num: BigInt, den: BigInt) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::Parse("denominator must be nonzero".into()));
        }
        Ok(Ratio(BigRational::new(num, den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Ratio(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Ratio(BigRational::zero())
    }

    pub fn one() -> Self {
        Ratio(BigRational::one())
    }

    /// Numerator of the reduced fraction (carries the sign).
    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Denominator of the reduced fraction; always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Greatest integer `<= self` (floor toward minus infinity).
    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// Smallest integer `>= self`.
    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    /// Nearest `f64` approximation, for display and statistics only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Ratio {
    /// Canonical text form: `"p/q"`, or just `"n"` when the value is an
    /// integer. Round-trips through [`Ratio::from_str`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ratio({self})")
    }
}

impl FromStr for Ratio {
    type Err = Error;

    /// Accepts `"p/q"`, a plain integer, or a finite decimal such as
    /// `"1.5"` (converted exactly, no rounding).
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty ratio".into()));
        }
        if let Some((num, den)) = s.split_once('/') {
            let num = parse_bigint(num)?;
            let den = parse_bigint(den)?;
            return Ratio::new(num, den);
        }
        if let Some((int_part, frac_part)) = s.split_once('.') {
            // Finite decimal: sign applies to the whole literal.
            let (sign, digits) = match int_part.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, int_part.strip_prefix('+').unwrap_or(int_part)),
            };
            if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Parse(format!("invalid decimal `{s}`")));
            }
            if !digits.is_empty() && !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Parse(format!("invalid decimal `{s}`")));
            }
            let whole = if digits.is_empty() {
                BigInt::zero()
            } else {
                parse_bigint(digits)?
            };
            let frac = parse_bigint(frac_part)?;
            let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
            let num = (whole * &scale + frac) * BigInt::from(sign);
            return Ratio::new(num, scale);
        }
        Ok(Ratio(BigRational::from_integer(parse_bigint(s)?)))
    }
}

fn parse_bigint(s: &str) -> Result<BigInt, Error> {
    let s = s.trim();
    s.parse::<BigInt>()
        .map_err(|_| Error::Parse(format!("invalid integer `{s}`")))
}

impl From<i64> for Ratio {
    fn from(n: i64) -> Self {
        Ratio::from_integer(n)
    }
}

impl From<u64> for Ratio {
    fn from(n: u64) -> Self {
        Ratio::from_integer(n)
    }
}

impl From<BigInt> for Ratio {
    fn from(n: BigInt) -> Self {
        Ratio::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Ratio {
            type Output = Ratio;
            fn $method(self, rhs: Ratio) -> Ratio {
                Ratio((self.0).$method(rhs.0))
            }
        }

        impl<'a> $trait<&'a Ratio> for &'a Ratio {
            type Output = Ratio;
            fn $method(self, rhs: &'a Ratio) -> Ratio {
                Ratio((&self.0).$method(&rhs.0))
            }
        }

        impl<'a> $trait<&'a Ratio> for Ratio {
            type Output = Ratio;
            fn $method(self, rhs: &'a Ratio) -> Ratio {
                Ratio((self.0).$method(&rhs.0))
            }
        }

        impl<'a> $trait<Ratio> for &'a Ratio {
            type Output = Ratio;
            fn $method(self, rhs: Ratio) -> Ratio {
                Ratio((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Ratio {
    type Output = Ratio;
    fn neg(self) -> Ratio {
        Ratio(-self.0)
    }
}

impl Neg for &Ratio {
    type Output = Ratio;
    fn neg(self) -> Ratio {
        Ratio(-&self.0)
    }
}

/// Compare a ratio to an integer without allocating a temporary fraction.
impl PartialEq<i64> for Ratio {
    fn eq(&self, other: &i64) -> bool {
        self.is_integer() && self.numer() == &BigInt::from(*other)
    }
}

impl PartialOrd<i64> for Ratio {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        // self = p/q vs n  <=>  p vs n*q  (q > 0)
        let rhs = BigInt::from(*other) * self.denom();
        Some(self.numer().cmp(&rhs))
    }
}

/// `floor(x)` returns the greatest integer `<= x`; exposed as a free
/// function to mirror the rest of the toolkit's operation set.
pub fn ratio_floor(x: &Ratio) -> BigInt {
    x.floor()
}

pub(crate) fn big_to_u64(n: &BigInt) -> Option<u64> {
    if n.sign() == Sign::Minus {
        None
    } else {
        n.to_u64()
    }
}
