use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::deletion::{chromatic_number_of, chromatic_polynomial};
use crate::error::Result;
use crate::graph::Graph;
use crate::poly::{to_falling_factorial, IntPoly};

/// A graph with its chromatic polynomial in both bases.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChromaticRecord {
    /// Serialised as graph6.
    pub graph: Graph,
    pub poly: IntPoly,
    /// `h[i] = |coefficient of x^i|`.
    #[serde(with = "crate::poly::decimal::seq")]
    pub h: Vec<BigInt>,
    /// Falling-factorial coefficients, `a[i]` on `(x)_i`.
    #[serde(with = "crate::poly::decimal::seq")]
    pub a: Vec<BigInt>,
    pub chi: usize,
}

impl ChromaticRecord {
    pub fn new(g: &Graph) -> Result<Self> {
        Ok(Self::from_poly(g, chromatic_polynomial(g)?))
    }

    pub fn from_poly(g: &Graph, poly: IntPoly) -> Self {
        let chi = if g.order() == 0 { 0 } else { chromatic_number_of(&poly) };
        ChromaticRecord {
            graph: g.clone(),
            h: poly.abs_coeffs(),
            a: to_falling_factorial(&poly),
            poly,
            chi,
        }
    }

    /// Monic of degree `n`, zero constant term, alternating signs, and
    /// nonnegative factorial coefficients vanishing below `χ`.
    pub fn check_invariants(&self) -> bool {
        let n = self.graph.order();
        let zero = BigInt::from(0);
        let signs = self.poly.coeffs().iter().enumerate().all(|(i, c)| {
            *c == zero || (n - i).is_multiple_of(2) == (*c > zero)
        });
        self.poly.degree() == Some(n)
            && self.poly.is_monic()
            && (n == 0 || self.poly.coeff(0) == zero)
            && signs
            && self.a.iter().all(|x| *x >= zero)
            && self.a.iter().take(self.chi).all(|x| *x == zero)
            && self.a.get(n).is_some_and(|x| *x == BigInt::from(1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let r = ChromaticRecord::new(&Graph::cycle(4).unwrap()).unwrap();
        assert!(r.check_invariants());
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(
            s,
            r#"{"graph":"Cl","poly":["0","-3","6","-4","1"],"h":["0","3","6","4","1"],"a":["0","0","1","2","1"],"chi":2}"#
        );
        let back: ChromaticRecord = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }
}
