//! Pinning the pattern `H` of the `h_{n-4}` formula from its stated motif
//! counts, then validating it against deletion–contraction.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{ExperimentReport, ReportBuilder};
use crate::chromatic::{h_n4, h_n4_negative_k4_term, ChromaticEngine};
use crate::error::Result;
use crate::graph::small::class_table;
use crate::graph::{count_motif, from_edge_mask, write_graph6, CountMode, Graph, MotifCatalog, MotifPattern};
use crate::poly::IntPoly;

/// Seeded random graphs with orders in `n_min..=n_max` and edge densities
/// spread over `[0.15, 0.85)`.
pub fn random_corpus(count: usize, n_min: usize, n_max: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(n_min..=n_max);
            let density: f64 = rng.gen_range(0.15..0.85);
            let mut edges = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    if rng.gen_bool(density) {
                        edges.push((i, j));
                    }
                }
            }
            Graph::from_edges(n, &edges).expect("small order")
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
struct Counts {
    triangles: u64,
    induced_triangles: u64,
    two_k2: u64,
    induced_two_k2: u64,
}

fn counts(g: &Graph) -> Result<Counts> {
    let k3 = MotifPattern::Clique(3);
    let two_k2 = MotifPattern::CliqueUnion(vec![1, 1]);
    Ok(Counts {
        triangles: count_motif(g, &k3, CountMode::Subgraph)?,
        induced_triangles: count_motif(g, &k3, CountMode::Induced)?,
        two_k2: count_motif(g, &two_k2, CountMode::Subgraph)?,
        induced_two_k2: count_motif(g, &two_k2, CountMode::Induced)?,
    })
}

/// Graphs of order 4 to 6, one per isomorphism class, with two triangles
/// (both induced), eight copies of `2K_2` and no induced `2K_2`.
pub fn h_candidates() -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for k in 4..=6 {
        let table = class_table(k);
        let pairs = k * (k - 1) / 2;
        for mask in 0..1u64 << pairs {
            if table.canonical(mask) != mask {
                continue;
            }
            let g = from_edge_mask(k, mask);
            let c = counts(&g)?;
            if c.triangles == 2 && c.induced_triangles == 2 && c.two_k2 == 8 && c.induced_two_k2 == 0 {
                out.push(g);
            }
        }
    }
    Ok(out)
}

#[derive(Serialize)]
struct CandidateItem {
    graph6: String,
    order: usize,
    size: usize,
    edges: Vec<(usize, usize)>,
    counts: Counts,
    tested: usize,
    mismatches: usize,
    /// Mismatches when the `K_4` term enters with a minus sign instead.
    mismatches_negative_k4_term: usize,
    first_mismatch: Option<String>,
    survives: bool,
}

pub struct IdentifyH {
    pub survivors: Vec<Graph>,
    pub report: ExperimentReport,
}

impl IdentifyH {
    /// The pinned `H` when exactly one candidate survives.
    pub fn unique(&self) -> Option<&Graph> {
        match self.survivors.as_slice() {
            [h] => Some(h),
            _ => None,
        }
    }
}

/// Searches the candidates and keeps those whose `h_{n-4}` formula matches
/// deletion–contraction on every graph of a seeded corpus of orders 4 to 9.
pub fn identify_h(corpus_size: usize, seed: u64) -> Result<IdentifyH> {
    let mut b = ReportBuilder::new("identify_h");
    b.param("corpus_size", corpus_size).param("seed", seed).param("orders", (4, 9));
    let corpus = random_corpus(corpus_size, 4, 9, seed);
    let truth: Vec<(usize, BigInt)> = corpus
        .par_iter()
        .map_init(ChromaticEngine::new, |eng, g| -> Result<_> {
            let p: IntPoly = eng.polynomial(g)?;
            Ok((g.order(), p.abs_coeffs()[g.order() - 4].clone()))
        })
        .collect::<Result<_>>()?;
    let candidates = h_candidates()?;
    b.count("candidates", candidates.len() as u64);
    let mut survivors = Vec::new();
    for h in candidates {
        let catalog = MotifCatalog::with_h(h.clone());
        let results: Vec<(bool, bool)> = corpus
            .par_iter()
            .zip(&truth)
            .map(|(g, (_, want))| -> Result<_> {
                Ok((h_n4(g, &catalog)? == *want, h_n4_negative_k4_term(g, &catalog)? == *want))
            })
            .collect::<Result<_>>()?;
        let mismatches = results.iter().filter(|r| !r.0).count();
        let first_mismatch = results.iter().position(|r| !r.0).map(|i| write_graph6(&corpus[i])).transpose()?;
        let survives = mismatches == 0 && !corpus.is_empty();
        let graph6 = write_graph6(&h)?;
        b.item(CandidateItem {
            graph6: graph6.clone(),
            order: h.order(),
            size: h.size(),
            edges: h.edges(),
            counts: counts(&h)?,
            tested: corpus.len(),
            mismatches,
            mismatches_negative_k4_term: results.iter().filter(|r| !r.1).count(),
            first_mismatch,
            survives,
        });
        if survives {
            survivors.push(h);
        }
    }
    b.count("survivors", survivors.len() as u64);
    b.count("corpus_with_k4", corpus.iter().filter(|g| count_motif(g, &MotifPattern::Clique(4), CountMode::Subgraph).unwrap_or(0) > 0).count() as u64);
    let names: Vec<String> = survivors.iter().map(write_graph6).collect::<Result<_>>()?;
    b.extremum("survivors", &names);
    if survivors.is_empty() {
        b.violation("no candidate survives; the h_(n-4) route stays disabled");
    }
    Ok(IdentifyH { survivors, report: b.finish() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::small::edge_mask;

    #[test]
    fn diamond_and_bowtie_rejected() {
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        let bowtie = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(counts(&diamond).unwrap().two_k2, 2);
        assert_eq!(counts(&bowtie).unwrap().two_k2, 5);
        let cands = h_candidates().unwrap();
        assert!(!cands.is_empty());
        for c in &cands {
            assert_ne!(edge_mask(c), edge_mask(&diamond));
        }
    }

    #[test]
    fn corpus_is_seeded() {
        let a = random_corpus(20, 4, 9, 3);
        let b = random_corpus(20, 4, 9, 3);
        assert_eq!(a, b);
        assert!(a.iter().all(|g| (4..=9).contains(&g.order())));
    }

    #[test]
    fn small_identification() {
        let r = identify_h(60, 11).unwrap();
        assert!(r.report.all_passed(), "{:?}", r.report.violations());
        let h = r.unique().expect("one survivor");
        assert_eq!((h.order(), h.size()), (5, 7));
    }
}
