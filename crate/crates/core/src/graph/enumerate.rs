use super::{bit, Graph};
use crate::error::{Error, Result};

/// Largest order accepted for exhaustive labeled enumeration (2^21 graphs).
pub const MAX_ENUMERATION_ORDER: usize = 7;

/// Endpoints of edge number `k` in graph6 order: (0,1), (0,2), (1,2), (0,3), ...
pub fn edge_pair(k: usize) -> (usize, usize) {
    let mut j = 1;
    while j * (j + 1) / 2 <= k {
        j += 1;
    }
    (k - j * (j - 1) / 2, j)
}

/// Graph on `n` vertices whose edges are the set bits of `mask`.
pub fn from_edge_mask(n: usize, mask: u64) -> Graph {
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> k & 1 == 1 {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
            k += 1;
        }
    }
    Graph::from_rows(&rows).expect("order checked by caller")
}

pub fn labeled_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// All `2^C(n,2)` labeled graphs on `n` vertices, in edge-mask order.
pub struct LabeledGraphs {
    n: usize,
    next: u64,
    end: u64,
}

impl LabeledGraphs {
    /// Restricts the stream to masks in `start..end`, for partitioning work.
    pub fn range(n: usize, start: u64, end: u64) -> Result<Self> {
        check_order(n)?;
        Ok(LabeledGraphs { n, next: start, end: end.min(labeled_count(n)) })
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let g = from_edge_mask(self.n, self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::TooLarge {
            what: "exhaustive enumeration (supply a graph6 file instead)",
            n,
            limit: MAX_ENUMERATION_ORDER,
        });
    }
    Ok(())
}

pub fn enumerate_labeled(n: usize) -> Result<LabeledGraphs> {
    check_order(n)?;
    Ok(LabeledGraphs { n, next: 0, end: labeled_count(n) })
}
