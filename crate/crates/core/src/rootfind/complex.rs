use std::ops::{Add, Div, Mul, Neg, Sub};

use dashu_float::ops::Abs;
use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use dashu_int::IBig;

/// Binary floating point with per-value precision.
pub type Real = FBig<HalfEven>;

pub fn real_from_int(v: &num_bigint::BigInt, bits: usize) -> Real {
    let i: IBig = v.to_string().parse().expect("decimal integer");
    Real::from(i).with_precision(bits).value()
}

pub fn real_from_f64(v: f64, bits: usize) -> Real {
    Real::try_from(v).expect("finite").with_precision(bits).value()
}

pub fn zero(bits: usize) -> Real {
    Real::ZERO.with_precision(bits).value()
}

/// `2^e`.
pub fn pow2(e: isize, bits: usize) -> Real {
    Real::from_parts(IBig::ONE, e).with_precision(bits).value()
}

pub fn to_f64(x: &Real) -> f64 {
    x.to_f64().value()
}

#[derive(Clone, Debug, PartialEq)]
pub struct Complex {
    pub re: Real,
    pub im: Real,
}

impl Complex {
    pub fn new(re: Real, im: Real) -> Self {
        Complex { re, im }
    }

    pub fn zero(bits: usize) -> Self {
        Complex { re: zero(bits), im: zero(bits) }
    }

    pub fn from_f64(re: f64, im: f64, bits: usize) -> Self {
        Complex { re: real_from_f64(re, bits), im: real_from_f64(im, bits) }
    }

    pub fn norm_sqr(&self) -> Real {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn abs(&self) -> Real {
        self.norm_sqr().sqrt()
    }

    pub fn conj(&self) -> Self {
        Complex { re: self.re.clone(), im: -&self.im }
    }

    pub fn is_zero(&self) -> bool {
        self.re == Real::ZERO && self.im == Real::ZERO
    }

    pub fn scale(&self, k: &Real) -> Self {
        Complex { re: &self.re * k, im: &self.im * k }
    }

    pub fn add_real(&self, k: &Real) -> Self {
        Complex { re: &self.re + k, im: self.im.clone() }
    }

    pub fn recip(&self) -> Self {
        let d = self.norm_sqr();
        Complex { re: &self.re / &d, im: -(&self.im / &d) }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (to_f64(&self.re), to_f64(&self.im))
    }
}

impl Add for &Complex {
    type Output = Complex;
    fn add(self, o: &Complex) -> Complex {
        Complex { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl Sub for &Complex {
    type Output = Complex;
    fn sub(self, o: &Complex) -> Complex {
        Complex { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl Mul for &Complex {
    type Output = Complex;
    fn mul(self, o: &Complex) -> Complex {
        Complex { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }
}

impl Div for &Complex {
    type Output = Complex;
    fn div(self, o: &Complex) -> Complex {
        self * &o.recip()
    }
}

impl Neg for &Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex { re: -&self.re, im: -&self.im }
    }
}

/// `|x|` for a real.
pub fn abs(x: &Real) -> Real {
    x.clone().abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = Complex::from_f64(1.0, 2.0, 128);
        let b = Complex::from_f64(3.0, -1.0, 128);
        assert_eq!((&a * &b).to_f64(), (5.0, 5.0));
        let q = &(&a * &b) / &b;
        let (re, im) = q.to_f64();
        assert!((re - 1.0).abs() < 1e-30 && (im - 2.0).abs() < 1e-30);
        assert_eq!(to_f64(&Complex::from_f64(3.0, 4.0, 64).abs()), 5.0);
        assert_eq!(to_f64(&pow2(-3, 64)), 0.125);
        assert_eq!(to_f64(&real_from_int(&num_bigint::BigInt::from(-12345), 64)), -12345.0);
    }
}
