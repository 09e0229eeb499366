use num_bigint::BigInt;
use num_traits::Zero;

use super::IntPoly;

/// Coefficients `a_0..a_d` with `f = Σ a_i (x)_{↓i}`, by synthetic division
/// by `x`, then `x - 1`, then `x - 2`, ...
pub fn to_falling_factorial(f: &IntPoly) -> Vec<BigInt> {
    let mut q = f.coeffs().to_vec();
    let mut out = Vec::with_capacity(q.len());
    let mut root = BigInt::zero();
    while !q.is_empty() {
        // divide q by (x - root): Horner from the top
        let mut carry = BigInt::zero();
        let mut quot = vec![BigInt::zero(); q.len() - 1];
        for k in (0..q.len()).rev() {
            let v = &q[k] + &carry * &root;
            if k == 0 {
                out.push(v);
            } else {
                quot[k - 1] = v.clone();
                carry = v;
            }
        }
        q = quot;
        root += 1;
    }
    out
}

/// `Σ a_i (x)_{↓i}` in the power basis.
pub fn from_falling_factorial(a: &[BigInt]) -> IntPoly {
    let mut acc = IntPoly::zero();
    let mut basis = IntPoly::one();
    for (i, c) in a.iter().enumerate() {
        acc = &acc + &basis.scale(c);
        basis = &basis * &IntPoly::linear_root(&BigInt::from(i));
    }
    acc
}
