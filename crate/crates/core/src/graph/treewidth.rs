use super::{bit, Bits, Graph};
use crate::error::{Error, Result};

pub const MAX_TREEWIDTH_ORDER: usize = 14;

/// Exact tree-width by dynamic programming over elimination prefixes.
///
/// `tw(S) = min_{v in S} max(tw(S - v), |Q(S - v, v)|)`, where `Q(S, v)` is
/// the set of vertices outside `S + v` reachable from `v` through `S`.
pub fn treewidth_exact(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > MAX_TREEWIDTH_ORDER {
        return Err(Error::TooLarge { what: "exact tree-width", n, limit: MAX_TREEWIDTH_ORDER });
    }
    if n == 0 {
        return Ok(0);
    }
    let all = g.vertex_mask();
    let mut best = vec![i32::MAX; 1 << n];
    best[0] = -1;
    for s in 1usize..(1 << n) {
        let set = s as u64;
        let mut value = i32::MAX;
        for v in Bits(set) {
            let rest = set & !bit(v);
            let prev = best[rest as usize];
            if prev >= value {
                continue;
            }
            let reach = g.reach(bit(v), rest | bit(v));
            let mut frontier = 0u64;
            for w in Bits(reach) {
                frontier |= g.neighbors(w);
            }
            let q = (frontier & all & !rest & !bit(v)).count_ones() as i32;
            value = value.min(prev.max(q));
        }
        best[s] = value;
    }
    Ok(best[(1 << n) - 1].max(0) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert_eq!(treewidth_exact(&Graph::complete_bipartite(3, 4).unwrap()).unwrap(), 3);
        assert_eq!(treewidth_exact(&Graph::path(6).unwrap()).unwrap(), 1);
        assert_eq!(treewidth_exact(&Graph::complete_bipartite(1, 6).unwrap()).unwrap(), 1);
        assert_eq!(treewidth_exact(&Graph::complete(5).unwrap()).unwrap(), 4);
        assert_eq!(treewidth_exact(&Graph::cycle(6).unwrap()).unwrap(), 2);
        assert_eq!(treewidth_exact(&Graph::empty(4).unwrap()).unwrap(), 0);
        assert!(treewidth_exact(&Graph::empty(15).unwrap()).is_err());
    }

    #[test]
    fn complete_bipartite_is_min_side() {
        for p in 1..=5 {
            for q in 1..=5 {
                let g = Graph::complete_bipartite(p, q).unwrap();
                assert_eq!(treewidth_exact(&g).unwrap(), p.min(q), "K_{p},{q}");
            }
        }
    }

    #[test]
    fn trees_have_width_one() {
        // a caterpillar and a spider
        let cat = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (1, 4), (2, 5), (2, 6)]).unwrap();
        assert_eq!(treewidth_exact(&cat).unwrap(), 1);
        let spider = Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert_eq!(treewidth_exact(&spider).unwrap(), 1);
    }
}
