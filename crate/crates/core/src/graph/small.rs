//! Isomorphism classes of graphs on at most six vertices, and a refined
//! exhaustive canonical form for slightly larger graphs.

use std::sync::OnceLock;

use super::{bit, Bits, Graph};

/// Largest order covered by the precomputed class tables.
pub const MAX_TABLE_ORDER: usize = 6;

pub(crate) fn pair_count(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

#[inline]
fn pair_index(i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    j * (j - 1) / 2 + i
}

/// Edge mask of `g` in graph6 order; requires `g.order() <= 11`.
pub fn edge_mask(g: &Graph) -> u64 {
    let mut mask = 0;
    for (u, v) in g.edges() {
        mask |= 1 << pair_index(u, v);
    }
    mask
}

/// Edge mask of the subgraph induced on `verts` (listed in label order).
#[inline]
pub(crate) fn induced_mask(g: &Graph, verts: &[usize]) -> u64 {
    let mut mask = 0;
    let mut k = 0;
    for j in 1..verts.len() {
        let row = g.neighbors(verts[j]);
        for &vi in &verts[..j] {
            if row & bit(vi) != 0 {
                mask |= 1 << k;
            }
            k += 1;
        }
    }
    mask
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: u32, k: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        for v in 0..k {
            if used & (1 << v) == 0 {
                prefix.push(v);
                rec(prefix, used | (1 << v), k, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(k), 0, k, &mut out);
    out
}

/// Class table for one order: canonical (minimal) mask of every labeled mask.
pub struct ClassTable {
    pub order: usize,
    canon: Vec<u16>,
}

impl ClassTable {
    fn build(k: usize) -> Self {
        let pairs = pair_count(k);
        let maps: Vec<Vec<usize>> = permutations(k)
            .into_iter()
            .map(|p| {
                let mut map = vec![0; pairs];
                for j in 1..k {
                    for i in 0..j {
                        map[pair_index(i, j)] = pair_index(p[i], p[j]);
                    }
                }
                map
            })
            .collect();
        let size = 1usize << pairs;
        let mut canon = vec![u16::MAX; size];
        let mut orbit = Vec::with_capacity(maps.len());
        for mask in 0..size {
            if canon[mask] != u16::MAX {
                continue;
            }
            orbit.clear();
            for map in &maps {
                let mut image = 0usize;
                for (e, &to) in map.iter().enumerate() {
                    if mask >> e & 1 == 1 {
                        image |= 1 << to;
                    }
                }
                orbit.push(image);
            }
            // masks are visited in increasing order, so `mask` is the orbit minimum
            for &m in &orbit {
                canon[m] = mask as u16;
            }
        }
        ClassTable { order: k, canon }
    }

    #[inline]
    pub fn canonical(&self, mask: u64) -> u64 {
        self.canon[mask as usize] as u64
    }

    pub fn class_count(&self) -> usize {
        self.canon.iter().enumerate().filter(|&(m, &c)| m == c as usize).count()
    }

    /// For every labeled mask `M`, the number of submasks of `M` in the class
    /// of `pattern_mask`: the count of (not necessarily induced) copies of the
    /// pattern spanning all `order` vertices.
    pub fn spanning_copies(&self, pattern_mask: u64) -> Vec<u32> {
        let target = self.canonical(pattern_mask);
        let mut f: Vec<u32> = self.canon.iter().map(|&c| (c as u64 == target) as u32).collect();
        for e in 0..pair_count(self.order) {
            for m in 0..f.len() {
                if m >> e & 1 == 1 {
                    f[m] += f[m ^ (1 << e)];
                }
            }
        }
        f
    }
}

pub fn class_table(k: usize) -> &'static ClassTable {
    static TABLES: [OnceLock<ClassTable>; MAX_TABLE_ORDER + 1] =
        [const { OnceLock::new() }; MAX_TABLE_ORDER + 1];
    assert!(k <= MAX_TABLE_ORDER, "class tables cover orders up to {MAX_TABLE_ORDER}");
    TABLES[k].get_or_init(|| ClassTable::build(k))
}

/// True when two graphs of order at most six are isomorphic.
pub fn isomorphic_small(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.size() == b.size()
        && {
            let t = class_table(a.order());
            t.canonical(edge_mask(a)) == t.canonical(edge_mask(b))
        }
}

/// Calls `f` with every `k`-subset of `0..n` as a sorted slice.
pub(crate) fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Exhaustive canonical form over relabellings that respect an
/// isomorphism-invariant vertex ordering (degree refinement). Returns `None`
/// when the search space exceeds `limit` permutations.
pub fn canonical_rows(g: &Graph, limit: usize) -> Option<Vec<u64>> {
    let n = g.order();
    // invariant: (degree, sorted neighbour degrees)
    let degs: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut keys: Vec<(usize, Vec<usize>, usize)> = (0..n)
        .map(|v| {
            let mut nd: Vec<usize> = Bits(g.neighbors(v)).map(|w| degs[w]).collect();
            nd.sort_unstable();
            (degs[v], nd, v)
        })
        .collect();
    keys.sort();
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for (i, k) in keys.iter().enumerate() {
        if i > 0 && keys[i - 1].0 == k.0 && keys[i - 1].1 == k.1 {
            cells.last_mut().unwrap().push(k.2);
        } else {
            cells.push(vec![k.2]);
        }
    }
    let mut space = 1usize;
    for c in &cells {
        for f in 1..=c.len() {
            space = space.checked_mul(f)?;
        }
        if space > limit {
            return None;
        }
    }

    let mut best: Option<Vec<u64>> = None;
    let mut order = Vec::with_capacity(n);
    search_cells(g, &cells, 0, &mut order, &mut best);
    best
}

fn search_cells(g: &Graph, cells: &[Vec<usize>], cell: usize, order: &mut Vec<usize>, best: &mut Option<Vec<u64>>) {
    if cell == cells.len() {
        // order[pos] = old vertex placed at position pos
        let n = order.len();
        let mut pos = vec![0; n];
        for (p, &v) in order.iter().enumerate() {
            pos[v] = p;
        }
        let rows: Vec<u64> = order
            .iter()
            .map(|&v| Bits(g.neighbors(v)).fold(0u64, |acc, w| acc | bit(pos[w])))
            .collect();
        if best.as_ref().is_none_or(|b| rows < *b) {
            *best = Some(rows);
        }
        return;
    }
    permute_cell(g, cells, cell, &cells[cell].clone(), order, best);
}

fn permute_cell(
    g: &Graph,
    cells: &[Vec<usize>],
    cell: usize,
    remaining: &[usize],
    order: &mut Vec<usize>,
    best: &mut Option<Vec<u64>>,
) {
    if remaining.is_empty() {
        search_cells(g, cells, cell + 1, order, best);
        return;
    }
    for i in 0..remaining.len() {
        let mut rest = remaining.to_vec();
        let v = rest.remove(i);
        order.push(v);
        permute_cell(g, cells, cell, &rest, order, best);
        order.pop();
    }
}
