use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::RatPoly;

/// Dense polynomial with big-integer coefficients, lowest power first.
///
/// Canonical form: no trailing zero coefficients; the zero polynomial has no
/// coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// `x`.
    pub fn x() -> Self {
        IntPoly::monomial(BigInt::one(), 1)
    }

    pub fn monomial(c: BigInt, power: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); power + 1];
        coeffs[power] = c;
        IntPoly::new(coeffs)
    }

    /// `x - r`.
    pub fn linear_root(r: &BigInt) -> Self {
        IntPoly::new(vec![-r.clone(), BigInt::one()])
    }

    /// Falling factorial `x (x-1) ... (x-k+1)`.
    pub fn falling_factorial(k: usize) -> Self {
        (0..k).fold(IntPoly::one(), |acc, i| &acc * &IntPoly::linear_root(&BigInt::from(i)))
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Zero or positive leading coefficient.
    pub fn is_standard(&self) -> bool {
        self.leading().is_none_or(Signed::is_positive)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    pub fn derivative(&self) -> Self {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        IntPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// `f(x + c)`, by repeated synthetic division (Taylor shift).
    pub fn shift(&self, c: &BigInt) -> Self {
        let mut a = self.coeffs.clone();
        let n = a.len();
        if c.is_zero() || n < 2 {
            return self.clone();
        }
        for i in 0..n - 1 {
            for j in (i..n - 1).rev() {
                let t = &a[j + 1] * c;
                a[j] += t;
            }
        }
        IntPoly::new(a)
    }

    /// Splits `f(x) = f_even(x^2) + x f_odd(x^2)`, returning polynomials in `t = x^2`.
    pub fn even_odd_split(&self) -> (IntPoly, IntPoly) {
        let even = self.coeffs.iter().step_by(2).cloned().collect();
        let odd = self.coeffs.iter().skip(1).step_by(2).cloned().collect();
        (IntPoly::new(even), IntPoly::new(odd))
    }

    /// Inverse of [`IntPoly::even_odd_split`].
    pub fn from_even_odd(even: &IntPoly, odd: &IntPoly) -> IntPoly {
        let len = (2 * even.coeffs.len()).max(2 * odd.coeffs.len() + 1);
        let mut coeffs = vec![BigInt::zero(); len];
        for (i, c) in even.coeffs.iter().enumerate() {
            coeffs[2 * i] = c.clone();
        }
        for (i, c) in odd.coeffs.iter().enumerate() {
            coeffs[2 * i + 1] = c.clone();
        }
        IntPoly::new(coeffs)
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content; the sign of the leading coefficient is kept.
    pub fn primitive(&self) -> IntPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        IntPoly::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Quotient and remainder by a monic divisor, exactly over the integers.
    pub fn div_rem_monic(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let d = divisor.degree().unwrap();
        let Some(n) = self.degree() else {
            return (IntPoly::zero(), IntPoly::zero());
        };
        if n < d {
            return (IntPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - d + 1];
        for k in (0..=n - d).rev() {
            let q = rem[k + d].clone();
            if q.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * dc;
            }
            quot[k] = q;
        }
        rem.truncate(d);
        (IntPoly::new(quot), IntPoly::new(rem))
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`, with the
    /// multiplier applied exactly that many times.
    pub fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        let db = b.degree().expect("pseudo-remainder by zero polynomial");
        let Some(da) = self.degree() else {
            return IntPoly::zero();
        };
        if da < db {
            return self.clone();
        }
        let lb = b.leading().unwrap();
        let mut r = self.coeffs.clone();
        for k in (db..=da).rev() {
            let lr = std::mem::take(&mut r[k]);
            for c in r[..k].iter_mut() {
                *c *= lb;
            }
            if !lr.is_zero() {
                let off = k - db;
                for (j, bc) in b.coeffs[..db].iter().enumerate() {
                    r[off + j] -= &lr * bc;
                }
            }
        }
        r.truncate(db);
        IntPoly::new(r)
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::from(self)
    }

    /// Sign-alternation magnitudes `|coefficient of x^i|`.
    pub fn abs_coeffs(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(|c| c.abs()).collect()
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        use num_traits::ToPrimitive;
        self.coeffs.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Serialize for IntPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw: Vec<String> = Vec::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPoly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn canonical_form_trims() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
    }

    #[test]
    fn shift_examples() {
        assert_eq!(p(&[0, 0, 1]).shift(&BigInt::from(1)), p(&[1, 2, 1]));
        let c4 = p(&[0, -3, 6, -4, 1]);
        // (x+3)(x+2)(x^2+3x+3)
        let expected = &(&p(&[3, 1]) * &p(&[2, 1])) * &p(&[3, 3, 1]);
        assert_eq!(c4.shift(&BigInt::from(3)), expected);
        assert_eq!(c4.shift(&BigInt::zero()), c4);
    }

    #[test]
    fn even_odd_examples() {
        assert_eq!(p(&[1, 2, 1]).even_odd_split(), (p(&[1, 1]), p(&[2])));
        assert_eq!(p(&[0, 1, 0, 1]).even_odd_split(), (IntPoly::zero(), p(&[1, 1])));
        assert_eq!(p(&[0, -3, 6, -4, 1]).even_odd_split(), (p(&[0, 6, 1]), p(&[-3, -4])));
    }

    #[test]
    fn monic_division() {
        let f = p(&[0, -3, 6, -4, 1]);
        let (q, r) = f.div_rem_monic(&p(&[0, 1]));
        assert!(r.is_zero());
        assert_eq!(q, p(&[-3, 6, -4, 1]));
        let (q, r) = p(&[5, 0, 1]).div_rem_monic(&p(&[1, 1]));
        assert_eq!((q, r), (p(&[-1, 1]), p(&[6])));
    }

    #[test]
    fn pseudo_remainder_matches_definition() {
        let a = p(&[1, 2, 3, 4]);
        let b = p(&[1, 0, 2]);
        // lc(b)^(3-2+1) * a = 4a; 4a mod b over Q
        let r = a.pseudo_rem(&b);
        let expect = a.scale(&BigInt::from(4)).to_rat().div_rem(&b.to_rat()).1;
        assert_eq!(r.to_rat(), expect);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[0, -3, 6, -4, 1]).to_string(), "x^4 - 4x^3 + 6x^2 - 3x");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_is_decimal_strings() {
        let f = p(&[0, -1, 1]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"["0","-1","1"]"#);
        assert_eq!(serde_json::from_str::<IntPoly>(&s).unwrap(), f);
    }
}
