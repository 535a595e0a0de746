//! Exact rational scalars.
//!
//! Every comparison in this crate — is `λ·s` below, at, or above `s′`? — must
//! be decided exactly, so the scalar type is an arbitrary-precision fraction
//! kept in canonical form (positive denominator, fully reduced). There is no
//! floating-point arithmetic anywhere in the core.

use alloc::string::String;
use core::fmt;
use core::ops::{Add, Div, Mul};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An exact rational number in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numerator/denominator`, reduced and with the sign on the numerator.
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Result<Self> {
        let denominator = denominator.into();
        if denominator.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(numerator.into(), denominator)))
    }

    pub fn from_integer(value: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(value.into()))
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    /// Exact midpoint of two rationals.
    pub fn midpoint(a: &Rational, b: &Rational) -> Rational {
        Rational((&a.0 + &b.0) / BigInt::from(2))
    }

    /// Nearest double, for display only; the core never computes with it.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

pub(crate) fn require_above_one(lambda: &Rational) -> Result<()> {
    if *lambda <= Rational::one() {
        return Err(Error::LambdaTooSmall);
    }
    Ok(())
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        Rational(&self.0 + &rhs.0)
    }
}

impl Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        Rational(&self.0 * &rhs.0)
    }
}

/// Exact quotient; panics if `rhs` is zero.
impl Div for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        Rational(&self.0 / &rhs.0)
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        &self + &rhs
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        &self * &rhs
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        &self / &rhs
    }
}

fn is_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

/// Accepts `p`, `p/q` (q without sign or leading zero) and finite decimals
/// like `2.001`, all parsed exactly.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let invalid = || Error::InvalidRationalLiteral(String::from(s));
        let (negative, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let signed = |r: Rational| {
            if negative {
                Rational(-r.0)
            } else {
                r
            }
        };

        if let Some((num, den)) = body.split_once('/') {
            if !is_digits(num) || !is_digits(den) || den.starts_with('0') {
                return Err(invalid());
            }
            let num: BigInt = num.parse().map_err(|_| invalid())?;
            let den: BigInt = den.parse().map_err(|_| invalid())?;
            Ok(signed(Rational::new(num, den)?))
        } else if let Some((int, frac)) = body.split_once('.') {
            if !is_digits(int) || !is_digits(frac) {
                return Err(invalid());
            }
            let mut digits = String::with_capacity(int.len() + frac.len());
            digits.push_str(int);
            digits.push_str(frac);
            let num: BigInt = digits.parse().map_err(|_| invalid())?;
            let den = BigInt::from(10u32).pow(frac.len() as u32);
            Ok(signed(Rational::new(num, den)?))
        } else {
            if !is_digits(body) {
                return Err(invalid());
            }
            let num: BigInt = body.parse().map_err(|_| invalid())?;
            Ok(signed(Rational::from_integer(num)))
        }
    }
}
