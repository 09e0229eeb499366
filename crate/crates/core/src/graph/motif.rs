//! Subgraph (`η`) and induced-subgraph (`i`) counts for the handful of small
//! patterns that appear in the coefficient formulas.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use super::small::{class_table, edge_mask, for_each_subset, induced_mask, MAX_TABLE_ORDER};
use super::{bit, Bits, Graph};
use crate::error::{Error, Result};

/// Longest cycle length counted when the host graph has more than 16 vertices.
pub const MAX_CYCLE_LENGTH: usize = 10;
/// Host order up to which any cycle length may be counted.
pub const MAX_CYCLE_HOST_ORDER: usize = 16;
/// Largest total weight `Σ m_j` accepted by [`count_clique_unions`].
pub const MAX_CLIQUE_UNION_WEIGHT: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CountMode {
    /// Number of subgraphs isomorphic to the pattern.
    Subgraph,
    /// Number of induced subgraphs isomorphic to the pattern.
    Induced,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MotifPattern {
    /// `K_k`.
    Clique(usize),
    C4,
    C5,
    /// `C_g` for a given length.
    Cycle(usize),
    /// `K_{2,3}`.
    K23,
    /// The graph `H` of the `h_{n-4}` formula; usable only once pinned.
    H,
    /// Wheel of order five.
    W5,
    /// Disjoint union of `K_{m_j + 1}` over the given `m_j >= 1`.
    CliqueUnion(Vec<usize>),
    /// Any explicit pattern on at most six vertices.
    Custom(Graph),
}

impl fmt::Display for MotifPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MotifPattern::Clique(k) => write!(f, "K{k}"),
            MotifPattern::C4 => write!(f, "C4"),
            MotifPattern::C5 => write!(f, "C5"),
            MotifPattern::Cycle(g) => write!(f, "C{g}"),
            MotifPattern::K23 => write!(f, "K2,3"),
            MotifPattern::H => write!(f, "H"),
            MotifPattern::W5 => write!(f, "W5"),
            MotifPattern::CliqueUnion(parts) => {
                let names: Vec<String> = parts.iter().map(|m| format!("K{}", m + 1)).collect();
                write!(f, "{}", names.join("+"))
            }
            MotifPattern::Custom(g) => write!(f, "{}", super::write_graph6(g).unwrap_or_default()),
        }
    }
}

/// Pattern context: holds the pinned structure of `H`, if any.
#[derive(Clone, Debug, Default)]
pub struct MotifCatalog {
    h: Option<Graph>,
}

impl MotifCatalog {
    pub fn with_h(h: Graph) -> Self {
        MotifCatalog { h: Some(h) }
    }

    pub fn h(&self) -> Option<&Graph> {
        self.h.as_ref()
    }

    pub fn count(&self, g: &Graph, pattern: &MotifPattern, mode: CountMode) -> Result<u64> {
        match pattern {
            MotifPattern::Clique(k) => Ok(count_cliques(g, *k)),
            MotifPattern::Cycle(len) => count_cycles(g, *len, mode),
            MotifPattern::C4 => count_small(g, &Graph::cycle(4)?, mode),
            MotifPattern::C5 => count_small(g, &Graph::cycle(5)?, mode),
            MotifPattern::K23 => count_small(g, &Graph::complete_bipartite(2, 3)?, mode),
            MotifPattern::W5 => count_small(g, &Graph::wheel(5)?, mode),
            MotifPattern::H => match &self.h {
                Some(h) => count_small(g, h, mode),
                None => Err(Error::UnsupportedPattern(
                    "H has not been pinned; run the H identification first".into(),
                )),
            },
            MotifPattern::CliqueUnion(parts) => match mode {
                CountMode::Subgraph => count_clique_unions(g, parts),
                CountMode::Induced => {
                    let orders: Vec<usize> = parts.iter().map(|m| m + 1).collect();
                    count_small(g, &Graph::clique_union(&orders)?, mode)
                }
            },
            MotifPattern::Custom(p) => count_small(g, p, mode),
        }
    }
}

/// Counts with an empty catalog; `MotifPattern::H` is rejected.
pub fn count_motif(g: &Graph, pattern: &MotifPattern, mode: CountMode) -> Result<u64> {
    MotifCatalog::default().count(g, pattern, mode)
}

/// Number of `k`-cliques.
pub fn count_cliques(g: &Graph, k: usize) -> u64 {
    let mut total = 0;
    for_each_clique(g, k, |_| total += 1);
    total
}

/// Calls `f` with the vertex mask of every `k`-clique.
pub fn for_each_clique(g: &Graph, k: usize, mut f: impl FnMut(u64)) {
    fn rec(g: &Graph, k: usize, set: u64, cand: u64, f: &mut impl FnMut(u64)) {
        if k == 0 {
            f(set);
            return;
        }
        if (cand.count_ones() as usize) < k {
            return;
        }
        for v in Bits(cand) {
            // only extend with higher labels
            let higher = cand & !((bit(v) << 1) - 1);
            rec(g, k - 1, set | bit(v), higher & g.neighbors(v), f);
        }
    }
    if k == 0 {
        f(0);
        return;
    }
    rec(g, k, 0, g.vertex_mask(), &mut f);
}

fn count_cycles(g: &Graph, len: usize, mode: CountMode) -> Result<u64> {
    if len < 3 {
        return Err(Error::UnsupportedPattern(format!("cycle length {len}")));
    }
    if len > MAX_CYCLE_LENGTH && g.order() > MAX_CYCLE_HOST_ORDER {
        return Err(Error::UnsupportedPattern(format!(
            "C{len} counting is capped at length {MAX_CYCLE_LENGTH} for hosts above {MAX_CYCLE_HOST_ORDER} vertices"
        )));
    }
    let induced = mode == CountMode::Induced;
    let mut twice = 0u64;
    for s in 0..g.order() {
        let allowed = g.vertex_mask() & !((bit(s) << 1) - 1);
        walk(g, s, s, len - 1, bit(s), allowed, induced, &mut twice);
    }
    Ok(twice / 2)
}

#[allow(clippy::too_many_arguments)]
fn walk(g: &Graph, start: usize, at: usize, left: usize, used: u64, allowed: u64, induced: bool, count: &mut u64) {
    if left == 0 {
        if g.neighbors(at) & bit(start) != 0 {
            let ok = !induced || Bits(used).map(|v| (g.neighbors(v) & used).count_ones() as usize).sum::<usize>() == 2 * used.count_ones() as usize;
            if ok {
                *count += 1;
            }
        }
        return;
    }
    for w in Bits(g.neighbors(at) & allowed & !used) {
        walk(g, start, w, left - 1, used | bit(w), allowed, induced, count);
    }
}

fn spanning_table(pattern: &Graph) -> Arc<Vec<u32>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, u64), Arc<Vec<u32>>>>> = OnceLock::new();
    let k = pattern.order();
    let table = class_table(k);
    let key = (k, table.canonical(edge_mask(pattern)));
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&key) {
        return t.clone();
    }
    let built = Arc::new(table.spanning_copies(key.1));
    cache.lock().unwrap().entry(key).or_insert(built).clone()
}

/// Generic count for patterns on at most six vertices, by enumerating the
/// vertex subsets of the pattern's order.
fn count_small(g: &Graph, pattern: &Graph, mode: CountMode) -> Result<u64> {
    let k = pattern.order();
    if k > MAX_TABLE_ORDER {
        return Err(Error::UnsupportedPattern(format!("pattern of order {k} exceeds {MAX_TABLE_ORDER}")));
    }
    let table = class_table(k);
    let mut total = 0u64;
    match mode {
        CountMode::Induced => {
            let target = table.canonical(edge_mask(pattern));
            for_each_subset(g.order(), k, |s| {
                if table.canonical(induced_mask(g, s)) == target {
                    total += 1;
                }
            });
        }
        CountMode::Subgraph => {
            if (0..k).any(|v| pattern.degree(v) == 0) {
                return Err(Error::UnsupportedPattern("subgraph counts need a pattern without isolated vertices".into()));
            }
            let spans = spanning_table(pattern);
            for_each_subset(g.order(), k, |s| {
                total += spans[induced_mask(g, s) as usize] as u64;
            });
        }
    }
    Ok(total)
}

/// Number of vertex-disjoint unions `∪ K_{m_j+1}` (unordered) in `g`.
pub fn count_clique_unions(g: &Graph, parts: &[usize]) -> Result<u64> {
    if parts.contains(&0) {
        return Err(Error::InvalidArgument("clique-union parts must be positive".into()));
    }
    let weight: usize = parts.iter().sum();
    if weight > MAX_CLIQUE_UNION_WEIGHT {
        return Err(Error::UnsupportedPattern(format!(
            "clique-union weight {weight} exceeds {MAX_CLIQUE_UNION_WEIGHT}"
        )));
    }
    let mut sizes: Vec<usize> = parts.iter().map(|m| m + 1).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    if sizes.iter().sum::<usize>() > g.order() {
        return Ok(0);
    }
    let mut lists: HashMap<usize, Vec<u64>> = HashMap::new();
    for &s in &sizes {
        lists.entry(s).or_insert_with(|| {
            let mut v = Vec::new();
            for_each_clique(g, s, |c| v.push(c));
            v
        });
    }
    fn rec(sizes: &[usize], lists: &HashMap<usize, Vec<u64>>, used: u64, prev: Option<(usize, usize)>) -> u64 {
        let Some((&s, rest)) = sizes.split_first() else {
            return 1;
        };
        let list = &lists[&s];
        // equal consecutive sizes are chosen in increasing list index
        let from = match prev {
            Some((ps, pi)) if ps == s => pi + 1,
            _ => 0,
        };
        let mut total = 0;
        for (i, &c) in list.iter().enumerate().skip(from) {
            if c & used == 0 {
                total += rec(rest, lists, used | c, Some((s, i)));
            }
        }
        total
    }
    Ok(rec(&sizes, &lists, 0, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_labeled;

    /// The seven-edge graph on five vertices used throughout: a 5-cycle with
    /// two chords at consecutive vertices.
    fn house_with_two_chords() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn documented_counts() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(count_motif(&c4, &MotifPattern::CliqueUnion(vec![1, 1]), CountMode::Subgraph).unwrap(), 2);
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(count_motif(&k4, &MotifPattern::Clique(3), CountMode::Subgraph).unwrap(), 4);

        let h = house_with_two_chords();
        let two_k2 = MotifPattern::CliqueUnion(vec![1, 1]);
        assert_eq!(count_motif(&h, &MotifPattern::Clique(3), CountMode::Subgraph).unwrap(), 2);
        assert_eq!(count_motif(&h, &MotifPattern::Clique(3), CountMode::Induced).unwrap(), 2);
        assert_eq!(count_motif(&h, &two_k2, CountMode::Subgraph).unwrap(), 8);
        assert_eq!(count_motif(&h, &two_k2, CountMode::Induced).unwrap(), 0);
    }

    #[test]
    fn h_requires_pinning() {
        let g = Graph::complete(5).unwrap();
        assert!(matches!(
            count_motif(&g, &MotifPattern::H, CountMode::Induced),
            Err(Error::UnsupportedPattern(_))
        ));
        let cat = MotifCatalog::with_h(house_with_two_chords());
        assert_eq!(cat.count(&house_with_two_chords(), &MotifPattern::H, CountMode::Induced).unwrap(), 1);
    }

    #[test]
    fn clique_unions_in_k4() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(count_clique_unions(&k4, &[1]).unwrap(), 6);
        assert_eq!(count_clique_unions(&k4, &[1, 1]).unwrap(), 3);
        assert_eq!(count_clique_unions(&k4, &[2]).unwrap(), 4);
        assert_eq!(count_clique_unions(&k4, &[3]).unwrap(), 1);
        assert_eq!(count_clique_unions(&k4, &[2, 1]).unwrap(), 0);
        assert!(count_clique_unions(&k4, &[3, 2]).is_err());
    }

    #[test]
    fn clique_unions_in_k6() {
        // 3K2 in K6: 15 perfect matchings; K3+K2 in K6: 20 * 3
        let k6 = Graph::complete(6).unwrap();
        assert_eq!(count_clique_unions(&k6, &[1, 1, 1]).unwrap(), 15);
        assert_eq!(count_clique_unions(&k6, &[2, 1]).unwrap(), 60);
        assert_eq!(count_clique_unions(&k6, &[1, 1]).unwrap(), 45);
    }

    #[test]
    fn cycles() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(count_motif(&k4, &MotifPattern::Cycle(4), CountMode::Subgraph).unwrap(), 3);
        assert_eq!(count_motif(&k4, &MotifPattern::Cycle(4), CountMode::Induced).unwrap(), 0);
        assert_eq!(count_motif(&k4, &MotifPattern::C4, CountMode::Subgraph).unwrap(), 3);
        let k5 = Graph::complete(5).unwrap();
        // (5-1)!/2
        assert_eq!(count_motif(&k5, &MotifPattern::Cycle(5), CountMode::Subgraph).unwrap(), 12);
        assert_eq!(count_motif(&k5, &MotifPattern::C5, CountMode::Subgraph).unwrap(), 12);
        let c7 = Graph::cycle(7).unwrap();
        assert_eq!(count_motif(&c7, &MotifPattern::Cycle(7), CountMode::Induced).unwrap(), 1);
    }

    #[test]
    fn wheel_and_k23() {
        let w5 = Graph::wheel(5).unwrap();
        assert_eq!(count_motif(&w5, &MotifPattern::W5, CountMode::Induced).unwrap(), 1);
        // the rim plus four hub-rim-rim-rim cycles
        assert_eq!(count_motif(&w5, &MotifPattern::C4, CountMode::Subgraph).unwrap(), 5);
        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        // choose the 2-side and the 3-side: 3*1 + 1*3
        assert_eq!(count_motif(&k33, &MotifPattern::K23, CountMode::Subgraph).unwrap(), 6);
    }

    #[test]
    fn induced_never_exceeds_subgraph() {
        let patterns = [
            MotifPattern::Clique(3),
            MotifPattern::C4,
            MotifPattern::C5,
            MotifPattern::K23,
            MotifPattern::W5,
            MotifPattern::CliqueUnion(vec![1, 1]),
            MotifPattern::CliqueUnion(vec![2, 1]),
        ];
        for g in enumerate_labeled(5).unwrap() {
            for p in &patterns {
                let s = count_motif(&g, p, CountMode::Subgraph).unwrap();
                let i = count_motif(&g, p, CountMode::Induced).unwrap();
                assert!(i <= s, "{p} in {g:?}");
            }
        }
    }

    #[test]
    fn generic_and_specialised_cycle_counts_agree() {
        for g in enumerate_labeled(6).unwrap().step_by(37) {
            for mode in [CountMode::Subgraph, CountMode::Induced] {
                assert_eq!(
                    count_motif(&g, &MotifPattern::Cycle(5), mode).unwrap(),
                    count_motif(&g, &MotifPattern::C5, mode).unwrap()
                );
                assert_eq!(
                    count_motif(&g, &MotifPattern::Cycle(4), mode).unwrap(),
                    count_motif(&g, &MotifPattern::C4, mode).unwrap()
                );
            }
            assert_eq!(
                count_clique_unions(&g, &[1, 1]).unwrap(),
                count_small(&g, &Graph::clique_union(&[2, 2]).unwrap(), CountMode::Subgraph).unwrap()
            );
        }
    }
}
