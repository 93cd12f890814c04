//! Scalar modes for structure constants: exact big rationals (the default)
//! and `f64` with a fixed tolerance.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// Absolute tolerance used by the float mode for equality and zero tests.
pub const FLOAT_TOL: f64 = 1e-9;

/// Tolerance when rounding a float that is supposed to be an integer.
pub const INT_TOL: f64 = 1e-6;

/// Field operations needed by the algebra and operator layers.
///
/// `EXACT` tells callers whether equality is literal; pivoting and trace
/// rounding adapt accordingly.
pub trait Scalar:
    Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    /// `num/den`; `den` must be nonzero.
    fn from_ratio(num: i64, den: i64) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn recip(&self) -> Option<Self>;
    fn is_zero(&self) -> bool;
    /// Equality up to the mode's tolerance; literal equality in exact mode.
    fn approx_eq(&self, rhs: &Self) -> bool;
    fn to_f64(&self) -> f64;
    /// The value as an integer if it is one (within `INT_TOL` for floats).
    fn to_integer(&self) -> Option<i128>;
    /// Magnitude used for pivot selection; only meaningful for floats.
    fn pivot_size(&self) -> f64 {
        if self.is_zero() {
            0.0
        } else {
            1.0
        }
    }

    fn from_int(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }
}

/// Arbitrary-precision rational scalar.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Rat(pub BigRational);

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Scalar for Rat {
    const EXACT: bool = true;

    fn zero() -> Self {
        Rat(BigRational::zero())
    }
    fn one() -> Self {
        Rat(BigRational::one())
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }
    fn add(&self, rhs: &Self) -> Self {
        Rat(&self.0 + &rhs.0)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Rat(&self.0 - &rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Rat(&self.0 * &rhs.0)
    }
    fn neg(&self) -> Self {
        Rat(-&self.0)
    }
    fn recip(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rat(self.0.recip()))
        }
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn approx_eq(&self, rhs: &Self) -> bool {
        self.0 == rhs.0
    }
    fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
    fn to_integer(&self) -> Option<i128> {
        if self.0.denom().is_one() {
            self.0.numer().to_i128()
        } else {
            None
        }
    }
}

/// Floating-point scalar with `FLOAT_TOL` comparison tolerance.
#[derive(Clone, Copy, PartialEq, Debug, Default)]
pub struct F64(pub f64);

impl fmt::Display for F64 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Scalar for F64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        F64(0.0)
    }
    fn one() -> Self {
        F64(1.0)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        F64(num as f64 / den as f64)
    }
    fn add(&self, rhs: &Self) -> Self {
        F64(self.0 + rhs.0)
    }
    fn sub(&self, rhs: &Self) -> Self {
        F64(self.0 - rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        F64(self.0 * rhs.0)
    }
    fn neg(&self) -> Self {
        F64(-self.0)
    }
    fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(F64(1.0 / self.0))
        }
    }
    fn is_zero(&self) -> bool {
        self.0.abs() <= FLOAT_TOL
    }
    fn approx_eq(&self, rhs: &Self) -> bool {
        (self.0 - rhs.0).abs() <= FLOAT_TOL
    }
    fn to_f64(&self) -> f64 {
        self.0
    }
    fn to_integer(&self) -> Option<i128> {
        let r = self.0.round();
        if (self.0 - r).abs() <= INT_TOL {
            Some(r as i128)
        } else {
            None
        }
    }
    fn pivot_size(&self) -> f64 {
        self.0.abs()
    }
}

/// Componentwise `approx_eq` on coefficient vectors of equal length.
pub fn vec_approx_eq<S: Scalar>(a: &[S], b: &[S]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.approx_eq(y))
}

/// True if every component is (tolerantly) zero.
pub fn vec_is_zero<S: Scalar>(a: &[S]) -> bool {
    a.iter().all(|x| x.is_zero())
}
