//! Coefficient identities: leading `h_i` by subgraph counts, the `K_{p,q}`
//! closed forms, factorial-form coefficients by clique-union counts in the
//! complement, and the shifted quotient used for the `χ >= n-3` argument.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::deletion::{chromatic_number_of, chromatic_polynomial};
use crate::error::{Error, Result};
use crate::graph::motif::count_cliques;
use crate::graph::{count_clique_unions, CountMode, Graph, MotifCatalog, MotifPattern};
use crate::poly::IntPoly;

/// Largest order accepted by [`factorial_coeffs_by_counting`].
pub const MAX_COUNTING_ORDER: usize = 16;

/// `C(n, k)` with `C(n, k) = 0` for `n < 0` or `k > n`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

fn big(v: u64) -> BigInt {
    BigInt::from(v)
}

/// `h_{n-i}` for small `i`, from subgraph counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodegreeCoefficients {
    pub girth: Option<usize>,
    /// `h[i]` is `h_{n-i}`.
    pub h: Vec<BigInt>,
    /// Set when the list stops early because `H` is unknown.
    pub missing: Option<String>,
}

/// `h_{n-3} = C(m,3) - (m-2) η(K_3) - i(C_4) + 2 η(K_4)`.
pub fn h_n3(g: &Graph) -> Result<BigInt> {
    let m = g.size() as i64;
    let e3 = big(count_cliques(g, 3));
    let i4 = big(MotifCatalog::default().count(g, &MotifPattern::C4, CountMode::Induced)?);
    let e4 = big(count_cliques(g, 4));
    Ok(binom(m, 3) - BigInt::from(m - 2) * &e3 - i4 + 2 * e4)
}

/// `h_{n-4}`, given a catalog that pins `H`.
///
/// The `K_4` term enters with coefficient `+(2m - 9)`; with a negative sign
/// the identity already fails on `K_4` itself (it gives `-6` for `h_0 = 0`).
pub fn h_n4(g: &Graph, catalog: &MotifCatalog) -> Result<BigInt> {
    h_n4_signed(g, catalog, 1)
}

/// The same sum with the `K_4` term's sign flipped, kept so reports can show
/// how the alternative reading fares.
pub fn h_n4_negative_k4_term(g: &Graph, catalog: &MotifCatalog) -> Result<BigInt> {
    h_n4_signed(g, catalog, -1)
}

fn h_n4_signed(g: &Graph, catalog: &MotifCatalog, k4_sign: i64) -> Result<BigInt> {
    let m = g.size() as i64;
    let induced = |p: MotifPattern| catalog.count(g, &p, CountMode::Induced).map(big);
    let e3 = count_cliques(g, 3) as i64;
    let e4 = big(count_cliques(g, 4));
    let e5 = big(count_cliques(g, 5));
    let i_c4 = induced(MotifPattern::C4)?;
    let i_c5 = induced(MotifPattern::C5)?;
    let i_k23 = induced(MotifPattern::K23)?;
    let i_h = induced(MotifPattern::H)?;
    let i_w5 = induced(MotifPattern::W5)?;
    Ok(binom(m, 4) - binom(m - 2, 2) * BigInt::from(e3) + binom(e3, 2)
        - BigInt::from(m - 3) * i_c4
        + BigInt::from(k4_sign * (2 * m - 9)) * e4
        - i_c5
        + i_k23
        + 2 * i_h
        + 3 * i_w5
        - 6 * e5)
}

/// `h_n, h_{n-1}, ...` up to `h_{n-4}` (or `h_0` when `n < 4`), each by the
/// girth rule where it applies and by the general formulas otherwise.
pub fn h_formula_small_codegree(g: &Graph, catalog: &MotifCatalog) -> Result<CodegreeCoefficients> {
    let n = g.order();
    let m = g.size() as i64;
    let girth = g.girth();
    let mut h = Vec::new();
    let mut missing = None;
    for i in 0..=n.min(4) {
        let value = match girth {
            None => binom(m, i as i64),
            Some(gi) if i + 2 <= gi => binom(m, i as i64),
            Some(gi) if i + 1 == gi => {
                binom(m, i as i64) - big(catalog.count(g, &MotifPattern::Cycle(gi), CountMode::Subgraph)?)
            }
            Some(_) if i == 3 => h_n3(g)?,
            Some(_) => match h_n4(g, catalog) {
                Ok(v) => v,
                Err(Error::UnsupportedPattern(reason)) if catalog.h().is_none() => {
                    missing = Some(format!("h_(n-4) unavailable: {reason}"));
                    break;
                }
                Err(e) => return Err(e),
            },
        };
        h.push(value);
    }
    Ok(CodegreeCoefficients { girth, h, missing })
}

/// The closed forms for `K_{p,q}`: `[h_n, h_{n-1}, h_{n-2}, h_{n-3}, h_{n-4}]`.
pub fn h_bipartite_formula(p: usize, q: usize) -> Result<[BigInt; 5]> {
    if p < 2 || q < 2 {
        return Err(Error::InvalidArgument(format!("K_{{{p},{q}}} formulas need p, q >= 2")));
    }
    let (p, q) = (p as i64, q as i64);
    let pq = p * q;
    let c2 = binom(p, 2) * binom(q, 2);
    Ok([
        BigInt::one(),
        BigInt::from(pq),
        binom(pq, 2),
        binom(pq, 3) - &c2,
        binom(pq, 4) - BigInt::from(pq - 3) * &c2 + binom(q, 2) * binom(p, 3) + binom(p, 2) * binom(q, 3),
    ])
}

/// `[a_n, a_{n-1}, a_{n-2}, a_{n-3}]` (truncated at `a_0`) from counts of
/// clique unions in the complement.
pub fn factorial_coeffs_by_counting(g: &Graph) -> Result<Vec<BigInt>> {
    let n = g.order();
    if n > MAX_COUNTING_ORDER {
        return Err(Error::TooLarge { what: "factorial coefficients by counting", n, limit: MAX_COUNTING_ORDER });
    }
    let c = g.complement();
    let count = |parts: &[&[usize]]| -> Result<BigInt> {
        parts.iter().try_fold(BigInt::zero(), |acc, p| Ok(acc + big(count_clique_unions(&c, p)?)))
    };
    let all = [
        BigInt::one(),
        count(&[&[1]])?,
        count(&[&[2], &[1, 1]])?,
        count(&[&[3], &[2, 1], &[1, 1, 1]])?,
    ];
    Ok(all.into_iter().take(n.min(3) + 1).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftedQuotient {
    pub chi: usize,
    /// `f(G, x)` with `π(G, x+n-1) = f(G, x) ∏_{i=1}^{χ} (x+n-i)`.
    pub quotient: IntPoly,
}

/// Quotient of `π(x + n - 1)` by `∏_{i=1}^{χ} (x + n - i)` for a known `π` of
/// a graph of order `n >= 1`.
pub fn shifted_quotient_of(poly: &IntPoly, n: usize) -> Result<ShiftedQuotient> {
    if n == 0 || poly.degree() != Some(n) {
        return Err(Error::InvalidArgument(format!("expected a chromatic polynomial of degree {n} >= 1")));
    }
    let chi = chromatic_number_of(poly);
    let shifted = poly.shift(&BigInt::from(n - 1));
    let divisor = (1..=chi).fold(IntPoly::one(), |acc, i| &acc * &IntPoly::linear_root(&-BigInt::from(n - i)));
    let (quotient, rem) = shifted.div_rem_monic(&divisor);
    if !rem.is_zero() {
        return Err(Error::Internal(format!("π(x+{}) is not divisible by the χ-fold product (remainder {rem})", n - 1)));
    }
    Ok(ShiftedQuotient { chi, quotient })
}

pub fn shifted_quotient(g: &Graph) -> Result<ShiftedQuotient> {
    shifted_quotient_of(&chromatic_polynomial(g)?, g.order())
}

/// Both sides of `6 + 9a_{n-1} + a_{n-2} + 3a_{n-1}^2 + a_{n-1}a_{n-2} > a_{n-3}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalitySides {
    #[serde(with = "crate::poly::decimal")]
    pub lhs: BigInt,
    #[serde(with = "crate::poly::decimal")]
    pub rhs: BigInt,
}

impl InequalitySides {
    pub fn holds(&self) -> bool {
        self.lhs > self.rhs
    }

    pub fn from_factorial(a1: &BigInt, a2: &BigInt, a3: &BigInt) -> Self {
        let lhs = BigInt::from(6) + 9 * a1 + a2 + 3 * a1 * a1 + a1 * a2;
        InequalitySides { lhs, rhs: a3.clone() }
    }
}

/// Requires `χ(g) = n - 3`.
pub fn inequality_1_sides(g: &Graph) -> Result<InequalitySides> {
    let n = g.order();
    let chi = chromatic_number_of(&chromatic_polynomial(g)?);
    if n < 4 || chi + 3 != n {
        return Err(Error::InvalidArgument(format!("inequality (1) needs χ = n - 3, got χ = {chi}, n = {n}")));
    }
    let a = factorial_coeffs_by_counting(g)?;
    Ok(InequalitySides::from_factorial(&a[1], &a[2], &a[3]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::to_falling_factorial;

    fn b(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn bipartite_closed_forms() {
        assert_eq!(h_bipartite_formula(2, 3).unwrap().to_vec(), b(&[1, 6, 15, 17, 7]));
        assert_eq!(h_bipartite_formula(2, 2).unwrap().to_vec(), b(&[1, 4, 6, 3, 0]));
        let h33 = h_bipartite_formula(3, 3).unwrap();
        assert_eq!((h33[1].clone(), h33[2].clone()), (BigInt::from(9), BigInt::from(36)));
        assert!(h_bipartite_formula(1, 3).is_err());
    }

    #[test]
    fn girth_rule_and_gating() {
        let c4 = Graph::cycle(4).unwrap();
        let r = h_formula_small_codegree(&c4, &MotifCatalog::default()).unwrap();
        assert_eq!(r.girth, Some(4));
        // i = 3 is the girth rule; i = 4 needs H
        assert_eq!(r.h, b(&[1, 4, 6, 3]));
        assert!(r.missing.is_some());

        let k4 = Graph::complete(4).unwrap();
        let r = h_formula_small_codegree(&k4, &MotifCatalog::default()).unwrap();
        assert_eq!(r.h, b(&[1, 6, 11, 6]));
        assert!(r.missing.is_some());
    }

    #[test]
    fn k4_term_sign() {
        let h = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (1, 3)]).unwrap();
        let cat = MotifCatalog::with_h(h);
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(h_n4(&k4, &cat).unwrap(), BigInt::zero());
        assert_eq!(h_n4_negative_k4_term(&k4, &cat).unwrap(), BigInt::from(-6));
        // K_5: h_1 = 24
        assert_eq!(h_n4(&Graph::complete(5).unwrap(), &cat).unwrap(), BigInt::from(24));
    }

    #[test]
    fn factorial_counts() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(factorial_coeffs_by_counting(&c4).unwrap(), b(&[1, 2, 1, 0]));
        let e4 = Graph::empty(4).unwrap();
        assert_eq!(factorial_coeffs_by_counting(&e4).unwrap(), b(&[1, 6, 7, 1]));
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(factorial_coeffs_by_counting(&k5).unwrap()[1], BigInt::zero());
        let a = to_falling_factorial(&chromatic_polynomial(&c4).unwrap());
        assert_eq!(a, b(&[0, 0, 1, 2, 1]));
    }

    #[test]
    fn quotients() {
        let c4 = Graph::cycle(4).unwrap();
        let q = shifted_quotient(&c4).unwrap();
        assert_eq!((q.chi, q.quotient), (2, IntPoly::from_i64s(&[3, 3, 1])));
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(shifted_quotient(&k5).unwrap().quotient, IntPoly::one());
        let e4 = Graph::empty(4).unwrap();
        assert_eq!(shifted_quotient(&e4).unwrap().quotient, IntPoly::from_i64s(&[27, 27, 9, 1]));
    }

    #[test]
    fn inequality_examples() {
        let s = inequality_1_sides(&Graph::empty(4).unwrap()).unwrap();
        assert_eq!((s.lhs.clone(), s.rhs.clone()), (BigInt::from(217), BigInt::one()));
        assert!(s.holds());
        assert!(inequality_1_sides(&Graph::cycle(4).unwrap()).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), BigInt::from(10));
        assert_eq!(binom(-1, 2), BigInt::zero());
        assert_eq!(binom(3, 5), BigInt::zero());
    }
}
