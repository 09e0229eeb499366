//! Chromatic polynomials of every labeled graph of a small order, built by
//! deletion–contraction over edge masks.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;

use super::deletion::chromatic_number_of;
use crate::error::{Error, Result};
use crate::graph::{edge_pair, labeled_count, MAX_ENUMERATION_ORDER};
use crate::poly::IntPoly;

/// Coefficients of `π` for all `2^C(n,2)` labeled graphs on `n` vertices,
/// indexed by graph6-order edge mask.
pub struct LabeledTable {
    order: usize,
    // coefficient magnitudes are at most C(21, 10) for n = 7
    coeffs: Vec<i32>,
}

/// Graphs sharing one chromatic polynomial.
#[derive(Clone, Debug)]
pub struct PolyClass {
    pub poly: IntPoly,
    pub chi: usize,
    /// Edge masks of every labeled graph with this polynomial, ascending.
    pub masks: Vec<u64>,
}

impl PolyClass {
    pub fn representative(&self) -> u64 {
        self.masks[0]
    }
}

impl LabeledTable {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.coeffs.len() / (self.order + 1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn raw(&self, mask: u64) -> &[i32] {
        let s = self.order + 1;
        let i = mask as usize * s;
        &self.coeffs[i..i + s]
    }

    pub fn polynomial(&self, mask: u64) -> IntPoly {
        IntPoly::new(self.raw(mask).iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Distinct polynomials with their graphs, sorted by coefficient vector.
    pub fn classes(&self) -> Vec<PolyClass> {
        let mut groups: HashMap<&[i32], Vec<u64>> = HashMap::new();
        for mask in 0..self.len() as u64 {
            groups.entry(self.raw(mask)).or_default().push(mask);
        }
        let mut keyed: Vec<(&[i32], Vec<u64>)> = groups.into_iter().collect();
        keyed.sort();
        keyed
            .into_iter()
            .map(|(raw, masks)| {
                let poly = IntPoly::new(raw.iter().map(|&c| BigInt::from(c)).collect());
                let chi = if self.order == 0 { 0 } else { chromatic_number_of(&poly) };
                PolyClass { poly, chi, masks }
            })
            .collect()
    }

    fn build(n: usize) -> Self {
        let s = n + 1;
        let count = labeled_count(n) as usize;
        let mut coeffs = vec![0i32; count * s];
        coeffs[n] = 1;
        if count == 1 {
            return LabeledTable { order: n, coeffs };
        }
        let sm = labeled_table(n - 1).expect("smaller order is in range");
        for mask in 1..count as u64 {
            let top = 63 - mask.leading_zeros() as usize;
            let deleted = mask & !(1u64 << top);
            let (i, j) = edge_pair(top);
            let merged = contract_mask(n, mask, i, j);
            let (head, tail) = coeffs.split_at_mut(mask as usize * s);
            let out = &mut tail[..s];
            out.copy_from_slice(&head[deleted as usize * s..deleted as usize * s + s]);
            for (t, c) in sm.raw(merged).iter().enumerate() {
                out[t] -= c;
            }
        }
        LabeledTable { order: n, coeffs }
    }
}

fn rows_of(n: usize, mask: u64) -> [u8; 8] {
    let mut rows = [0u8; 8];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> k & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    rows
}

/// Edge mask (order `n - 1`) of the graph with edge `{i, j}`, `i < j`,
/// contracted; `j` merges into `i` and later labels shift down.
fn contract_mask(n: usize, mask: u64, i: usize, j: usize) -> u64 {
    let rows = rows_of(n, mask);
    let merged = (rows[i] | rows[j]) & !(1 << i) & !(1 << j);
    let relabel = |v: usize| if v > j { v - 1 } else { v };
    let mut out = 0u64;
    for b in 1..n {
        if b == j {
            continue;
        }
        for a in 0..b {
            if a == j {
                continue;
            }
            let adjacent = if a == i { merged >> b & 1 == 1 } else if b == i { merged >> a & 1 == 1 } else { rows[a] >> b & 1 == 1 };
            if adjacent {
                let (x, y) = (relabel(a), relabel(b));
                out |= 1u64 << (y * (y - 1) / 2 + x);
            }
        }
    }
    out
}

/// Cached table for order `n <= 7`.
pub fn labeled_table(n: usize) -> Result<Arc<LabeledTable>> {
    static TABLES: [OnceLock<Arc<LabeledTable>>; MAX_ENUMERATION_ORDER + 1] = [const { OnceLock::new() }; MAX_ENUMERATION_ORDER + 1];
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::TooLarge { what: "labeled chromatic table", n, limit: MAX_ENUMERATION_ORDER });
    }
    Ok(TABLES[n].get_or_init(|| Arc::new(LabeledTable::build(n))).clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::chromatic_polynomial;
    use crate::graph::small::edge_mask;
    use crate::graph::{from_edge_mask, Graph};

    #[test]
    fn matches_deletion_contraction() {
        let t = labeled_table(5).unwrap();
        for mask in (0..t.len() as u64).step_by(7) {
            let g = from_edge_mask(5, mask);
            assert_eq!(t.polynomial(mask), chromatic_polynomial(&g).unwrap(), "mask {mask}");
        }
    }

    #[test]
    fn contraction_relabels() {
        // path 0-1-2 with edge {1,2} contracted is K_2
        let g = Graph::path(3).unwrap();
        let m = edge_mask(&g);
        assert_eq!(contract_mask(3, m, 1, 2), 1);
        // K_4 contracted is K_3
        let k4 = edge_mask(&Graph::complete(4).unwrap());
        assert_eq!(contract_mask(4, k4, 0, 3), 0b111);
    }

    #[test]
    fn class_counts() {
        // distinct chromatic polynomials of graphs on n vertices
        let counts: Vec<usize> = (1..=4).map(|n| labeled_table(n).unwrap().classes().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 9]);
    }
}
