use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::small::canonical_rows;
use crate::graph::{Bits, Graph};
use crate::poly::IntPoly;

/// Largest order accepted by the deletion–contraction route.
pub const MAX_DELETION_ORDER: usize = 24;

// At most 7! relabellings are tried when canonicalising a memo key; above
// that the labelled adjacency rows are used as the key, which is exact but
// shares less work.
const CANONICAL_LIMIT: usize = 5040;

/// Deletion–contraction with a memo keyed by adjacency encodings.
///
/// Each key is an adjacency row vector of a graph isomorphic to the one it
/// was computed for, so a hit is always a full encoding match. The memo is
/// owned by the engine; parallel callers use one engine per worker.
#[derive(Default)]
pub struct ChromaticEngine {
    memo: HashMap<Vec<u64>, IntPoly>,
}

impl ChromaticEngine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn polynomial(&mut self, g: &Graph) -> Result<IntPoly> {
        if g.order() > MAX_DELETION_ORDER {
            return Err(Error::TooLarge { what: "deletion-contraction", n: g.order(), limit: MAX_DELETION_ORDER });
        }
        Ok(self.solve(g))
    }

    fn solve(&mut self, g: &Graph) -> IntPoly {
        let n = g.order();
        let m = g.size();
        if m == 0 {
            return IntPoly::monomial(BigInt::one(), n);
        }
        let comps = g.components();
        if comps.len() > 1 {
            return comps.iter().fold(IntPoly::one(), |acc, &c| &acc * &self.solve(&g.induced(c)));
        }
        if 2 * m == n * (n - 1) {
            return IntPoly::falling_factorial(n);
        }
        if m == n - 1 {
            // tree: x (x-1)^(n-1)
            let step = IntPoly::linear_root(&BigInt::one());
            return (1..n).fold(IntPoly::x(), |acc, _| &acc * &step);
        }
        // a simplicial vertex of degree d contributes the factor (x - d)
        if let Some(v) = (0..n).find(|&v| g.is_clique(g.neighbors(v))) {
            let d = BigInt::from(g.degree(v));
            return &self.solve(&g.without_vertex(v)) * &IntPoly::linear_root(&d);
        }

        let key = canonical_rows(g, CANONICAL_LIMIT).unwrap_or_else(|| g.rows().to_vec());
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        let result = if 4 * m > n * (n - 1) {
            // dense: π(G) = π(G + uv) + π(G / uv) on a non-edge
            let (u, v) = dense_pick(g);
            let added = self.solve(&g.with_edge_added(u, v));
            let merged = self.solve(&g.contract(u, v));
            &added + &merged
        } else {
            let (u, v) = sparse_pick(g);
            let deleted = self.solve(&g.with_edge_removed(u, v));
            let merged = self.solve(&g.contract(u, v));
            &deleted - &merged
        };
        self.memo.insert(key, result.clone());
        result
    }
}

/// An edge at a vertex of least positive degree.
fn sparse_pick(g: &Graph) -> (usize, usize) {
    let u = (0..g.order()).filter(|&v| g.degree(v) > 0).min_by_key(|&v| g.degree(v)).unwrap();
    let v = Bits(g.neighbors(u)).max_by_key(|&w| g.degree(w)).unwrap();
    (u, v)
}

/// A non-edge at a vertex of greatest non-full degree.
fn dense_pick(g: &Graph) -> (usize, usize) {
    let n = g.order();
    let u = (0..n).filter(|&v| g.degree(v) + 1 < n).max_by_key(|&v| g.degree(v)).unwrap();
    let missing = g.vertex_mask() & !g.neighbors(u) & !(1u64 << u);
    let v = Bits(missing).max_by_key(|&w| g.degree(w)).unwrap();
    (u, v)
}

/// Exact `π(g, x)` by deletion–contraction (`n <= 24`).
pub fn chromatic_polynomial(g: &Graph) -> Result<IntPoly> {
    ChromaticEngine::new().polynomial(g)
}

/// Smallest positive integer that is not a root of `π`.
pub fn chromatic_number_of(poly: &IntPoly) -> usize {
    let mut k = 1;
    while poly.eval_i64(k as i64) <= BigInt::from(0) {
        k += 1;
    }
    k
}

pub fn chromatic_number(g: &Graph) -> Result<usize> {
    if g.order() == 0 {
        return Ok(0);
    }
    Ok(chromatic_number_of(&chromatic_polynomial(g)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn small_examples() {
        assert_eq!(chromatic_polynomial(&Graph::complete(3).unwrap()).unwrap(), p(&[0, 2, -3, 1]));
        assert_eq!(chromatic_polynomial(&Graph::path(3).unwrap()).unwrap(), p(&[0, 1, -2, 1]));
        assert_eq!(chromatic_polynomial(&Graph::cycle(4).unwrap()).unwrap(), p(&[0, -3, 6, -4, 1]));
        assert_eq!(chromatic_polynomial(&Graph::empty(0).unwrap()).unwrap(), IntPoly::one());
    }

    #[test]
    fn cycle_transfer_identity() {
        // π(C_n) = (x-1)^n + (-1)^n (x-1)
        for n in 3..12 {
            let xm1 = p(&[-1, 1]);
            let mut pow = IntPoly::one();
            for _ in 0..n {
                pow = &pow * &xm1;
            }
            let expect = if n % 2 == 0 { &pow + &xm1 } else { &pow - &xm1 };
            assert_eq!(chromatic_polynomial(&Graph::cycle(n).unwrap()).unwrap(), expect, "C{n}");
        }
    }

    #[test]
    fn wheel_and_chromatic_number() {
        // W_5 = K_1 + C_4: x π(C_4, x-1)
        let w = chromatic_polynomial(&Graph::wheel(5).unwrap()).unwrap();
        let c4 = chromatic_polynomial(&Graph::cycle(4).unwrap()).unwrap().shift(&BigInt::from(-1));
        assert_eq!(w, &IntPoly::x() * &c4);
        assert_eq!(chromatic_number(&Graph::wheel(5).unwrap()).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::cycle(5).unwrap()).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::complete_bipartite(3, 4).unwrap()).unwrap(), 2);
    }

    #[test]
    fn order_cap() {
        let g = Graph::empty(25).unwrap();
        assert!(matches!(chromatic_polynomial(&g), Err(Error::TooLarge { .. })));
    }
}
