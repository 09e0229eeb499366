use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// Largest `p + q` accepted by [`chromatic_polynomial_bipartite`].
pub const MAX_BIPARTITE_ORDER: usize = 400;

/// Row `S(p, 0..=p)` of Stirling numbers of the second kind.
pub fn stirling2_row(p: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for n in 1..=p {
        let mut next = vec![BigInt::zero(); n + 1];
        for k in 1..=n {
            let carry = if k < row.len() { &row[k] * BigInt::from(k) } else { BigInt::zero() };
            next[k] = &row[k - 1] + carry;
        }
        row = next;
    }
    row
}

/// `(x - k)^q` expanded by the binomial theorem.
fn shifted_power(k: usize, q: usize) -> IntPoly {
    let neg_k = -BigInt::from(k);
    let mut coeffs = vec![BigInt::zero(); q + 1];
    let mut binom = BigInt::one();
    for j in 0..=q {
        // C(q, j) (-k)^(q-j)
        coeffs[j] = &binom * neg_k.pow((q - j) as u32);
        binom = binom * BigInt::from(q - j) / BigInt::from(j + 1);
    }
    IntPoly::new(coeffs)
}

/// `π(K_{p,q}, x)` in closed form: colour the `p` side with exactly `k`
/// colours, `S(p,k) (x)_k` ways, then each of the `q` vertices picks among the
/// remaining `x - k`.
pub fn chromatic_polynomial_bipartite(p: usize, q: usize) -> Result<IntPoly> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidArgument(format!("K_{{{p},{q}}} needs p, q >= 1")));
    }
    if p + q > MAX_BIPARTITE_ORDER {
        return Err(Error::TooLarge { what: "bipartite closed form", n: p + q, limit: MAX_BIPARTITE_ORDER });
    }
    let (p, q) = (p.min(q), p.max(q));
    let s = stirling2_row(p);
    let mut falling = IntPoly::one();
    let mut total = IntPoly::zero();
    for k in 1..=p {
        falling = &falling * &IntPoly::linear_root(&BigInt::from(k - 1));
        let term = &falling * &shifted_power(k, q);
        total = &total + &term.scale(&s[k]);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(chromatic_polynomial_bipartite(2, 2).unwrap(), IntPoly::from_i64s(&[0, -3, 6, -4, 1]));
        assert_eq!(chromatic_polynomial_bipartite(2, 3).unwrap(), IntPoly::from_i64s(&[0, 7, -17, 15, -6, 1]));
        assert_eq!(chromatic_polynomial_bipartite(1, 1).unwrap(), IntPoly::from_i64s(&[0, -1, 1]));
        assert_eq!(chromatic_polynomial_bipartite(3, 2).unwrap(), chromatic_polynomial_bipartite(2, 3).unwrap());
    }

    #[test]
    fn star_is_a_tree() {
        // K_{1,q}: x (x-1)^q
        let p = chromatic_polynomial_bipartite(1, 5).unwrap();
        assert_eq!(p, &IntPoly::x() * &shifted_power(1, 5));
    }

    #[test]
    fn stirling_rows() {
        let r: Vec<i64> = stirling2_row(5).iter().map(|b| b.try_into().unwrap()).collect();
        assert_eq!(r, vec![0, 1, 15, 25, 10, 1]);
        assert_eq!(stirling2_row(0), vec![BigInt::one()]);
    }

    #[test]
    fn limits() {
        assert!(chromatic_polynomial_bipartite(0, 3).is_err());
        assert!(chromatic_polynomial_bipartite(200, 201).is_err());
        let big = chromatic_polynomial_bipartite(3, 397).unwrap();
        assert_eq!(big.degree(), Some(400));
        assert!(big.is_monic());
    }
}
