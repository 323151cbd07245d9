//! Extended-precision scalar backed by MPFR.
//!
//! Precision is a thread-local ambient setting expressed in decimal digits;
//! wrap any extended computation in [`with_digits`] so constructors pick up
//! the right mantissa width. Values carry their precision with them, so
//! mixing values created under different settings widens to the larger one.

use std::cell::Cell;
use std::fmt;

use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;

use crate::scalar::Real;

const DEFAULT_DIGITS: u32 = 100;
const GUARD_BITS: u32 = 16;
const LOG2_10: f64 = 3.321928094887362;

thread_local! {
    static DIGITS: Cell<u32> = const { Cell::new(DEFAULT_DIGITS) };
}

fn current_bits() -> u32 {
    let d = DIGITS.with(|c| c.get());
    (d as f64 * LOG2_10).ceil() as u32 + GUARD_BITS
}

/// Run `f` with the given ambient decimal precision on this thread.
pub fn with_digits<T>(digits: u32, f: impl FnOnce() -> T) -> T {
    DIGITS.with(|c| {
        let old = c.replace(digits.max(1));
        let out = f();
        c.set(old);
        out
    })
}

/// Ambient decimal precision on this thread.
pub fn current_digits() -> u32 {
    DIGITS.with(|c| c.get())
}

/// Arbitrary-precision real number (MPFR backed).
#[derive(Clone, PartialEq, PartialOrd)]
pub struct BigReal(Float);

impl BigReal {
    pub fn from_float(f: Float) -> Self {
        BigReal(f)
    }
    pub fn inner(&self) -> &Float {
        &self.0
    }
}

impl fmt::Debug for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}", self.0)
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}", self.0)
    }
}

macro_rules! unary {
    ($($name:ident),*) => {
        $(fn $name(&self) -> Self { BigReal(self.0.clone().$name()) })*
    };
}

impl Real for BigReal {
    fn zero() -> Self {
        BigReal(Float::new(current_bits()))
    }
    fn one() -> Self {
        BigReal(Float::with_val(current_bits(), 1))
    }
    fn from_f64(x: f64) -> Self {
        BigReal(Float::with_val(current_bits(), x))
    }
    fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }
    fn pi() -> Self {
        BigReal(Float::with_val(current_bits(), Constant::Pi))
    }
    fn abs(&self) -> Self {
        BigReal(self.0.clone().abs())
    }
    unary!(sqrt, sin, cos, tan, atan, acos, sinh, cosh, exp, ln);
    fn atan2(&self, x: &Self) -> Self {
        BigReal(self.0.clone().atan2(&x.0))
    }
    fn hypot(&self, other: &Self) -> Self {
        BigReal(self.0.clone().hypot(&other.0))
    }
    fn powi(&self, n: i32) -> Self {
        BigReal(self.0.clone().pow(n))
    }
    fn is_finite(&self) -> bool {
        self.0.is_finite()
    }
    fn is_nan(&self) -> bool {
        self.0.is_nan()
    }
    fn eps() -> Self {
        let bits = current_bits();
        BigReal(Float::with_val(bits, 2).pow(1i32 - bits as i32))
    }
    fn working_digits() -> u32 {
        current_digits()
    }
}

impl std::ops::Add for BigReal {
    type Output = BigReal;
    fn add(self, rhs: BigReal) -> BigReal {
        BigReal(self.0 + rhs.0)
    }
}
impl std::ops::Sub for BigReal {
    type Output = BigReal;
    fn sub(self, rhs: BigReal) -> BigReal {
        BigReal(self.0 - rhs.0)
    }
}
impl std::ops::Mul for BigReal {
    type Output = BigReal;
    fn mul(self, rhs: BigReal) -> BigReal {
        BigReal(self.0 * rhs.0)
    }
}
impl std::ops::Div for BigReal {
    type Output = BigReal;
    fn div(self, rhs: BigReal) -> BigReal {
        BigReal(self.0 / rhs.0)
    }
}
impl std::ops::Neg for BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal(-self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precision_scopes_nest() {
        with_digits(40, || {
            assert_eq!(current_digits(), 40);
            with_digits(80, || assert_eq!(current_digits(), 80));
            assert_eq!(current_digits(), 40);
        });
        assert_eq!(current_digits(), DEFAULT_DIGITS);
    }

    #[test]
    fn hundred_digit_sqrt_two() {
        with_digits(100, || {
            let two = BigReal::from_f64(2.0);
            let r = two.clone().sqrt();
            let back = r.clone() * r;
            let err = (back - two).abs();
            assert!(err < BigReal::from_f64(1e-98), "err = {err}");
        });
    }
}
