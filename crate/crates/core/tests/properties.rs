use num_bigint::BigInt;
use proptest::prelude::*;

use chromroot::chromatic::{broken_cycle_coefficients, chromatic_polynomial, identity_labels, ChromaticRecord};
use chromroot::graph::{parse_graph6, write_graph6};
use chromroot::poly::{from_falling_factorial, real_root_count, to_falling_factorial, Bound};
use chromroot::rootfind::all_roots;
use chromroot::stability::is_quasi_stable;
use chromroot::{Graph, IntPoly};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

/// Proper colourings with `k` colours by brute force.
fn colourings(g: &Graph, k: usize) -> u64 {
    let n = g.order();
    if k == 0 {
        return (n == 0) as u64;
    }
    let edges = g.edges();
    let mut colour = vec![0usize; n];
    let mut count = 0;
    loop {
        if edges.iter().all(|&(u, v)| colour[u] != colour[v]) {
            count += 1;
        }
        let mut i = 0;
        while i < n {
            colour[i] += 1;
            if colour[i] < k {
                break;
            }
            colour[i] = 0;
            i += 1;
        }
        if i == n {
            return count;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn counts_colourings(g in graph(7)) {
        let p = chromatic_polynomial(&g).unwrap();
        for k in 0..=3 {
            prop_assert_eq!(p.eval_i64(k as i64), BigInt::from(colourings(&g, k)));
        }
    }

    #[test]
    fn record_invariants(g in graph(8)) {
        prop_assert!(ChromaticRecord::new(&g).unwrap().check_invariants());
    }

    #[test]
    fn deletion_contraction_identity(g in graph(8), pick in any::<prop::sample::Index>()) {
        let edges = g.edges();
        prop_assume!(!edges.is_empty());
        let (u, v) = edges[pick.index(edges.len())];
        let whole = chromatic_polynomial(&g).unwrap();
        let deleted = chromatic_polynomial(&g.with_edge_removed(u, v)).unwrap();
        let contracted = chromatic_polynomial(&g.contract(u, v)).unwrap();
        prop_assert_eq!(whole, &deleted - &contracted);
    }

    #[test]
    fn relabelling_invariant(g in graph(8), perm in Just((0..8).collect::<Vec<usize>>()).prop_shuffle()) {
        let perm: Vec<usize> = perm.into_iter().filter(|&v| v < g.order()).collect();
        prop_assert_eq!(chromatic_polynomial(&g).unwrap(), chromatic_polynomial(&g.permuted(&perm)).unwrap());
    }

    #[test]
    fn graph6_round_trip(g in graph(12)) {
        prop_assert_eq!(parse_graph6(&write_graph6(&g).unwrap()).unwrap(), g);
    }

    #[test]
    fn falling_factorial_round_trip(c in prop::collection::vec(-50i64..50, 1..10)) {
        let f = IntPoly::from_i64s(&c);
        prop_assert_eq!(from_falling_factorial(&to_falling_factorial(&f)), f);
    }

    #[test]
    fn broken_cycles_ignore_edge_order(g in graph(6), seed in any::<u64>()) {
        prop_assume!(g.size() <= 12);
        let mut labels = identity_labels(&g);
        let base = broken_cycle_coefficients(&g, &labels).unwrap();
        // a seeded rotation and reversal of the labels
        let m = labels.len();
        if m > 0 {
            labels.rotate_left((seed as usize) % m);
            if seed & 1 == 1 {
                labels.reverse();
            }
        }
        prop_assert_eq!(broken_cycle_coefficients(&g, &labels).unwrap(), base);
    }

    #[test]
    fn vieta_sums(c in prop::collection::vec(-9i64..=9, 2..9), lead in 1i64..5) {
        let mut c = c;
        c.push(lead);
        let f = IntPoly::from_i64s(&c);
        let d = f.degree().unwrap();
        let rs = all_roots(&f, 128).unwrap();
        prop_assert_eq!(rs.count_with_multiplicity(), d);
        let sum: f64 = rs.roots.iter().map(|r| r.re() * r.multiplicity as f64).sum();
        let im: f64 = rs.roots.iter().map(|r| r.im() * r.multiplicity as f64).sum();
        let want = -(c[d - 1] as f64) / lead as f64;
        prop_assert!((sum - want).abs() < 1e-6 * (1.0 + want.abs()), "{} vs {}", sum, want);
        prop_assert!(im.abs() < 1e-6);
    }

    #[test]
    fn left_half_plane_products_are_quasi_stable(roots in prop::collection::vec(0i64..6, 1..7), pairs in prop::collection::vec((0i64..4, 1i64..6), 0..3)) {
        let mut f = IntPoly::one();
        for a in &roots {
            f = &f * &IntPoly::from_i64s(&[*a, 1]);
        }
        for (b, c) in &pairs {
            f = &f * &IntPoly::from_i64s(&[*c, *b, 1]);
        }
        let r = is_quasi_stable(&f).unwrap();
        prop_assert!(r.is_quasi_stable());
        let strictly_left = roots.iter().all(|&a| a > 0) && pairs.iter().all(|&(b, _)| b > 0);
        prop_assert_eq!(r.is_stable(), strictly_left);
    }

    #[test]
    fn sturm_counts_distinct_real_roots(roots in prop::collection::btree_set(-20i64..20, 1..8)) {
        let f = roots.iter().fold(IntPoly::one(), |acc, r| &acc * &IntPoly::from_i64s(&[-r, 1]));
        let f = &f * &IntPoly::from_i64s(&[1, 0, 1]);
        prop_assert_eq!(real_root_count(&f.to_rat(), &Bound::NegInf, &Bound::PosInf), roots.len());
    }
}
