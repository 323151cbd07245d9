//! Minimal complex arithmetic over a generic [`Real`] scalar.

use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Real;

#[derive(Clone, Debug, PartialEq)]
pub struct Cx<R> {
    pub re: R,
    pub im: R,
}

impl<R: Real> Cx<R> {
    pub fn new(re: R, im: R) -> Self {
        Cx { re, im }
    }
    pub fn zero() -> Self {
        Cx::new(R::zero(), R::zero())
    }
    pub fn one() -> Self {
        Cx::new(R::one(), R::zero())
    }
    pub fn i() -> Self {
        Cx::new(R::zero(), R::one())
    }
    pub fn from_re(re: R) -> Self {
        Cx::new(re, R::zero())
    }
    pub fn from_f64(re: f64, im: f64) -> Self {
        Cx::new(R::from_f64(re), R::from_f64(im))
    }
    pub fn from_polar(r: &R, theta: &R) -> Self {
        Cx::new(r.clone() * theta.cos(), r.clone() * theta.sin())
    }

    pub fn conj(&self) -> Self {
        Cx::new(self.re.clone(), -self.im.clone())
    }
    pub fn abs(&self) -> R {
        self.re.hypot(&self.im)
    }
    pub fn abs_sq(&self) -> R {
        self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()
    }
    pub fn arg(&self) -> R {
        self.im.atan2(&self.re)
    }
    pub fn scale(&self, s: &R) -> Self {
        Cx::new(self.re.clone() * s.clone(), self.im.clone() * s.clone())
    }
    pub fn unscale(&self, s: &R) -> Self {
        Cx::new(self.re.clone() / s.clone(), self.im.clone() / s.clone())
    }
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Principal square root.
    pub fn sqrt(&self) -> Self {
        if self.im.is_zero() {
            if self.re >= R::zero() {
                return Cx::new(self.re.sqrt(), R::zero());
            }
            return Cx::new(R::zero(), (-self.re.clone()).sqrt());
        }
        let r = self.abs().sqrt();
        let half = R::from_f64(0.5);
        let theta = self.arg() * half;
        Cx::from_polar(&r, &theta)
    }

    /// Full complex division.
    pub fn div(&self, rhs: &Self) -> Self {
        let d = rhs.abs_sq();
        let num = self.clone() * rhs.conj();
        num.unscale(&d)
    }

    /// acc += a * b without building intermediates at the call site.
    pub fn mul_acc(&mut self, a: &Self, b: &Self) {
        self.re = self.re.clone() + a.re.clone() * b.re.clone() - a.im.clone() * b.im.clone();
        self.im = self.im.clone() + a.re.clone() * b.im.clone() + a.im.clone() * b.re.clone();
    }

    /// acc += conj(a) * b, the inner-product accumulation step.
    pub fn conj_mul_acc(&mut self, a: &Self, b: &Self) {
        self.re = self.re.clone() + a.re.clone() * b.re.clone() + a.im.clone() * b.im.clone();
        self.im = self.im.clone() + a.re.clone() * b.im.clone() - a.im.clone() * b.re.clone();
    }

    pub fn to_f64(&self) -> Cx<f64> {
        Cx::new(self.re.to_f64(), self.im.to_f64())
    }
}

impl<R: Real> Add for Cx<R> {
    type Output = Cx<R>;
    fn add(self, rhs: Cx<R>) -> Cx<R> {
        Cx::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl<R: Real> Sub for Cx<R> {
    type Output = Cx<R>;
    fn sub(self, rhs: Cx<R>) -> Cx<R> {
        Cx::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl<R: Real> Mul for Cx<R> {
    type Output = Cx<R>;
    fn mul(self, rhs: Cx<R>) -> Cx<R> {
        Cx::new(
            self.re.clone() * rhs.re.clone() - self.im.clone() * rhs.im.clone(),
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl<R: Real> Neg for Cx<R> {
    type Output = Cx<R>;
    fn neg(self) -> Cx<R> {
        Cx::new(-self.re, -self.im)
    }
}
