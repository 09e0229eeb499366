//! The third Sturm member of `π(K_{p,q}, x + p)`'s even (or odd) part.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{split, Part};
use crate::chromatic::{binom, chromatic_polynomial_bipartite, h_bipartite_formula};
use crate::error::{Error, Result};
use crate::poly::{has_all_real_roots, rat, RatPoly, SturmDiagnostic};

fn check(p: usize, q: usize) -> Result<()> {
    if p < 2 || q < 2 {
        return Err(Error::InvalidArgument(format!("need p, q >= 2, got ({p}, {q})")));
    }
    Ok(())
}

/// `(a_{n-2}, a_{n-4})` of `π(K_{p,q}, x + p) = Σ a_i x^i`, built from the
/// closed-form `h` values.
pub fn bipartite_shifted_coeffs(p: usize, q: usize) -> Result<(BigInt, BigInt)> {
    check(p, q)?;
    let h = h_bipartite_formula(p, q)?;
    let n = (p + q) as i64;
    let pb = BigInt::from(p);
    let a2 = binom(n, 2) * pb.pow(2) - BigInt::from(n - 1) * &pb * &h[1] + &h[2];
    let a4 = binom(n, 4) * pb.pow(4) - binom(n - 1, 3) * pb.pow(3) * &h[1] + binom(n - 2, 2) * pb.pow(2) * &h[2]
        - BigInt::from(n - 3) * &pb * &h[3]
        + &h[4];
    Ok((a2, a4))
}

/// `2n a_{n-4} - (n-2) a_{n-2}^2`.
pub fn f2_leading_value(p: usize, q: usize) -> Result<BigRational> {
    let (a2, a4) = bipartite_shifted_coeffs(p, q)?;
    let n = BigInt::from(p + q);
    let v = BigInt::from(2) * &n * a4 - (n - 2) * &a2 * &a2;
    Ok(BigRational::from_integer(v))
}

/// The quartic in `q` with coefficients polynomial in `p`, evaluated as
/// printed.
pub fn quartic_value(p: usize, q: usize) -> Result<BigRational> {
    check(p, q)?;
    let pr = BigRational::from_integer(BigInt::from(p));
    let pw = |k: u32| pr.pow(k as i32);
    let term = |c: (i64, i64), k: u32| rat(c.0, c.1) * pw(k);
    let c4 = term((1, 6), 2) - term((1, 6), 1);
    let c3 = term((1, 2), 4) - term((5, 3), 3) + term((11, 6), 2) - term((2, 3), 1);
    let c2 = -term((5, 6), 5) + term((5, 3), 4) - term((5, 6), 3) - term((1, 3), 2) + term((1, 3), 1);
    let c1 = -term((1, 6), 8) + term((1, 3), 6) + term((1, 2), 5) - term((5, 6), 4) - term((1, 6), 3) + term((1, 3), 2);
    let c0 = -term((1, 6), 9) + term((1, 2), 8) - term((1, 3), 7);
    let qr = BigRational::from_integer(BigInt::from(q));
    Ok([c4, c3, c2, c1].into_iter().fold(BigRational::zero(), |acc, c| (acc + c) * &qr) + c0)
}

/// What the third Sturm member says about the relevant part of
/// `π(K_{p,q}, x + p)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct F2Evidence {
    pub p: usize,
    pub q: usize,
    /// `f^e` for even `n`, `f^o` for odd `n`.
    pub part: Part,
    /// Degree of the part.
    pub degree: usize,
    /// Degree of `f_2`, absent when the sequence stops at `f_1`.
    pub f2_degree: Option<usize>,
    #[serde(with = "option_rational")]
    pub f2_leading: Option<BigRational>,
    /// `f_2` has degree `deg f_0 - 2`.
    pub generic: bool,
    /// Full Sturm diagnostic of the part; decides real-rootedness either way.
    pub real_rooted: bool,
    pub sturm: SturmDiagnostic,
}

impl F2Evidence {
    /// A negative leading coefficient of a non-collapsed `f_2`.
    pub fn certifies_non_real(&self) -> bool {
        self.generic && self.f2_leading.as_ref().is_some_and(Signed::is_negative)
    }
}

pub fn f2_evidence(p: usize, q: usize) -> Result<F2Evidence> {
    check(p, q)?;
    let n = p + q;
    let shifted = chromatic_polynomial_bipartite(p, q)?.to_rat().shift(&BigRational::from_integer(BigInt::from(p)));
    let (fe, fo) = split(&shifted);
    let (part, f0) = if n.is_multiple_of(2) { (Part::Even, fe) } else { (Part::Odd, fo) };
    let degree = f0.degree().unwrap();
    let f1 = f0.derivative();
    let (f2_degree, f2_leading) = if f1.degree().is_some_and(|d| d > 0) {
        let f2: RatPoly = -&f0.rem(&f1);
        (f2.degree(), f2.leading().cloned())
    } else {
        (None, None)
    };
    let generic = degree >= 2 && f2_degree == Some(degree - 2);
    let rr = has_all_real_roots(&f0)?;
    let sturm = rr.square_free.clone().unwrap_or(rr.raw.clone());
    Ok(F2Evidence { p, q, part, degree, f2_degree, f2_leading, generic, real_rooted: rr.all_real, sturm })
}

mod option_rational {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<BigRational>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(r) => s.serialize_some(&r.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigRational>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|x| x.parse().map_err(serde::de::Error::custom))
            .transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn spot_values() {
        assert_eq!(quartic_value(2, 6).unwrap(), r(200));
        assert_eq!(quartic_value(2, 2).unwrap(), r(-56));
        assert_eq!(f2_leading_value(2, 6).unwrap(), r(200));
        assert_eq!(f2_leading_value(2, 2).unwrap(), r(-56));
    }

    #[test]
    fn p2_leading_and_constant() {
        // at p = 2 the quartic is q^4/3 + 2q^3/3 - 22q^2/3 - 56q/3
        let v = |q: i64| {
            let q = BigRational::from_integer(BigInt::from(q));
            rat(1, 3) * q.pow(4) + rat(2, 3) * q.pow(3) - rat(22, 3) * q.pow(2) - rat(56, 3) * q
        };
        for q in 2..20 {
            assert_eq!(quartic_value(2, q as usize).unwrap(), v(q));
        }
    }

    #[test]
    fn literal_f2_matches_value() {
        for (p, q) in [(2, 2), (2, 4), (2, 6), (3, 3), (3, 5), (4, 4), (4, 16)] {
            let e = f2_evidence(p, q).unwrap();
            assert_eq!(e.part, Part::Even);
            let n = BigRational::from_integer(BigInt::from(p + q));
            let expect = -BigRational::from_integer(BigInt::from(2)) / (&n * &n) * f2_leading_value(p, q).unwrap();
            if e.generic {
                assert_eq!(e.f2_leading.clone().unwrap(), expect, "({p},{q})");
            } else {
                assert!(expect.is_zero(), "({p},{q})");
            }
        }
    }

    #[test]
    fn negative_f2_means_not_real_rooted() {
        let e = f2_evidence(2, 6).unwrap();
        assert!(e.certifies_non_real());
        assert!(!e.real_rooted);
    }
}
