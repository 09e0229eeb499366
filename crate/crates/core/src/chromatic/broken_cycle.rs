//! Whitney's broken-cycle expansion, by direct enumeration of spanning
//! subgraphs. Exponential in the size; used as an oracle.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_BROKEN_CYCLE_ORDER: usize = 8;
pub const MAX_BROKEN_CYCLE_SIZE: usize = 16;

/// `h_0..=h_n`, where `h_i` counts spanning subgraphs with `n - i` edges that
/// contain no broken cycle. `beta[k]` is the label (`1..=m`) of edge `k` of
/// `g.edges()`.
pub fn broken_cycle_coefficients(g: &Graph, beta: &[usize]) -> Result<Vec<u64>> {
    let n = g.order();
    let edges = g.edges();
    let m = edges.len();
    if n > MAX_BROKEN_CYCLE_ORDER {
        return Err(Error::TooLarge { what: "broken-cycle enumeration", n, limit: MAX_BROKEN_CYCLE_ORDER });
    }
    if m > MAX_BROKEN_CYCLE_SIZE {
        return Err(Error::TooLarge { what: "broken-cycle enumeration (edges)", n: m, limit: MAX_BROKEN_CYCLE_SIZE });
    }
    let mut seen = vec![false; m + 1];
    if beta.len() != m || beta.iter().any(|&b| b == 0 || b > m || std::mem::replace(&mut seen[b], true)) {
        return Err(Error::InvalidArgument("beta must be a bijection from the edges onto 1..=m".into()));
    }

    let broken: Vec<u32> = (1u32..1 << m)
        .filter(|&s| is_cycle(n, &edges, s))
        .map(|c| {
            let top = (0..m).filter(|&k| c >> k & 1 == 1).max_by_key(|&k| beta[k]).unwrap();
            c & !(1 << top)
        })
        .collect();

    let mut h = vec![0u64; n + 1];
    for s in 0u32..1 << m {
        let k = s.count_ones() as usize;
        if k > n {
            continue;
        }
        if broken.iter().all(|&b| s & b != b) {
            h[n - k] += 1;
        }
    }
    Ok(h)
}

/// Edge set forms one cycle: every touched vertex has degree two and the
/// edges are connected.
fn is_cycle(n: usize, edges: &[(usize, usize)], s: u32) -> bool {
    let mut deg = [0u8; 64];
    let mut adj = vec![0u64; n];
    let mut touched = 0u64;
    for (k, &(u, v)) in edges.iter().enumerate() {
        if s >> k & 1 == 1 {
            deg[u] += 1;
            deg[v] += 1;
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
            touched |= 1 << u | 1 << v;
        }
    }
    if (0..n).any(|v| touched >> v & 1 == 1 && deg[v] != 2) {
        return false;
    }
    let start = touched.trailing_zeros() as usize;
    let mut reach = 1u64 << start;
    loop {
        let next = reach | (0..n).filter(|&v| reach >> v & 1 == 1).fold(0, |acc, v| acc | adj[v]);
        if next == reach {
            break;
        }
        reach = next;
    }
    reach == touched
}

/// The ordering `β(e_k) = k + 1`.
pub fn identity_labels(g: &Graph) -> Vec<usize> {
    (1..=g.size()).collect()
}
