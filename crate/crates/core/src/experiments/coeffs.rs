//! Cross-route agreement of chromatic coefficients.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::identify::random_corpus;
use super::{verify_bipartite, ExperimentReport, ReportBuilder};
use crate::chromatic::{
    broken_cycle_coefficients, factorial_coeffs_by_counting, h_formula_small_codegree, identity_labels, labeled_table,
    ChromaticEngine, MAX_BROKEN_CYCLE_ORDER, MAX_BROKEN_CYCLE_SIZE,
};
use crate::error::{Error, Result};
use crate::graph::{from_edge_mask, labeled_count, write_graph6, Graph, MotifCatalog, MAX_ENUMERATION_ORDER};
use crate::poly::{to_falling_factorial, IntPoly};

pub const MAX_RANDOM_COEFF_ORDER: usize = 10;

/// Orders up to this use the broken-cycle oracle in exhaustive mode.
const BROKEN_CYCLE_EXHAUSTIVE: usize = 5;

#[derive(Clone, Debug, Serialize)]
struct Mismatch {
    key: u64,
    graph6: String,
    check: String,
    expected: String,
    got: String,
}

#[derive(Default)]
struct Tally {
    counts: BTreeMap<&'static str, u64>,
    mismatches: Vec<Mismatch>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        for (k, v) in other.counts {
            *self.counts.entry(k).or_default() += v;
        }
        self.mismatches.extend(other.mismatches);
        self
    }

    fn bump(&mut self, k: &'static str) {
        *self.counts.entry(k).or_default() += 1;
    }

    fn compare(&mut self, key: u64, g: &Graph, check: &str, expected: &[BigInt], got: &[BigInt]) {
        if expected != got {
            let fmt = |v: &[BigInt]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
            self.mismatches.push(Mismatch {
                key,
                graph6: write_graph6(g).unwrap_or_default(),
                check: check.into(),
                expected: fmt(expected),
                got: fmt(got),
            });
        }
    }
}

struct Checks<'a> {
    catalog: &'a MotifCatalog,
    orderings: usize,
    seed: u64,
    broken_cycle_max_order: usize,
}

impl Checks<'_> {
    fn run(&self, key: u64, g: &Graph, poly: &IntPoly, t: &mut Tally) -> Result<()> {
        let n = g.order();
        let m = g.size();
        let abs = poly.abs_coeffs();
        t.bump("graphs");

        if n <= self.broken_cycle_max_order.min(MAX_BROKEN_CYCLE_ORDER) && m <= MAX_BROKEN_CYCLE_SIZE {
            let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ key.wrapping_mul(0x9e37_79b9_7f4a_7c15));
            let mut labels = identity_labels(g);
            for k in 0..=self.orderings {
                if k > 0 {
                    labels.shuffle(&mut rng);
                }
                let h: Vec<BigInt> = broken_cycle_coefficients(g, &labels)?.into_iter().map(BigInt::from).collect();
                t.compare(key, g, "broken_cycle", &abs, &h);
                t.bump("broken_cycle_checks");
            }
        }

        let formula = h_formula_small_codegree(g, self.catalog)?;
        let expect: Vec<BigInt> = (0..formula.h.len()).map(|i| abs[n - i].clone()).collect();
        t.compare(key, g, "h_formulas", &expect, &formula.h);
        t.bump("h_formula_checks");
        if formula.missing.is_some() {
            t.bump("h_n4_unavailable");
        }

        let a = to_falling_factorial(poly);
        let counted = factorial_coeffs_by_counting(g)?;
        let expect: Vec<BigInt> = (0..counted.len()).map(|j| a[n - j].clone()).collect();
        t.compare(key, g, "factorial_counting", &expect, &counted);
        t.bump("factorial_checks");
        Ok(())
    }
}

fn assemble(mut b: ReportBuilder, tally: Tally, bipartite: ExperimentReport) -> ExperimentReport {
    let mut mismatches = tally.mismatches;
    mismatches.sort_by(|a, b| (a.key, &a.check).cmp(&(b.key, &b.check)));
    for (k, v) in tally.counts {
        b.count(k, v);
    }
    b.count("bipartite_pairs", bipartite.count("pairs"));
    for v in bipartite.violations() {
        b.violation(v.clone());
    }
    for mm in mismatches {
        b.count("mismatches", 1);
        b.violation(format!("{} ({}): {} expected [{}], got [{}]", mm.graph6, mm.key, mm.check, mm.expected, mm.got));
        b.item(mm);
    }
    b.finish()
}

/// Every labeled graph of order `n <= 7`: table polynomial (and, for small
/// `n`, deletion–contraction and broken cycles under `orderings` random edge
/// orders) against the `h` formulas and factorial counting. `K_{p,q}` with
/// `p + q <= max(n, 11)` is checked against its closed forms.
pub fn verify_coeffs(n: usize, h: Option<&Graph>, orderings: usize, seed: u64) -> Result<ExperimentReport> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(Error::InvalidArgument(format!(
            "exhaustive verify-coeffs needs 1 <= n <= {MAX_ENUMERATION_ORDER}, use random mode above"
        )));
    }
    let catalog = h.cloned().map(MotifCatalog::with_h).unwrap_or_default();
    let checks = Checks { catalog: &catalog, orderings, seed, broken_cycle_max_order: BROKEN_CYCLE_EXHAUSTIVE };
    let table = labeled_table(n)?;
    let tally = (0..labeled_count(n))
        .into_par_iter()
        .map_init(ChromaticEngine::new, |eng, mask| -> Result<Tally> {
            let g = from_edge_mask(n, mask);
            let poly = table.polynomial(mask);
            let mut t = Tally::default();
            if n <= BROKEN_CYCLE_EXHAUSTIVE {
                let dc = eng.polynomial(&g)?;
                t.compare(mask, &g, "table_vs_deletion", dc.coeffs(), poly.coeffs());
            }
            checks.run(mask, &g, &poly, &mut t)?;
            Ok(t)
        })
        .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))?;
    let mut b = ReportBuilder::new("verify_coeffs");
    b.param("mode", "exhaustive").param("n", n).param("orderings", orderings).param("seed", seed);
    b.param("h", h.map(write_graph6).transpose()?);
    Ok(assemble(b, tally, verify_bipartite(n.max(11))?))
}

/// Seeded random graphs of order at most `n_max <= 10`, polynomials by
/// deletion–contraction.
pub fn verify_coeffs_random(n_max: usize, count: usize, h: Option<&Graph>, orderings: usize, seed: u64) -> Result<ExperimentReport> {
    if !(1..=MAX_RANDOM_COEFF_ORDER).contains(&n_max) {
        return Err(Error::InvalidArgument(format!("random verify-coeffs needs 1 <= n <= {MAX_RANDOM_COEFF_ORDER}")));
    }
    let catalog = h.cloned().map(MotifCatalog::with_h).unwrap_or_default();
    let checks = Checks { catalog: &catalog, orderings, seed, broken_cycle_max_order: MAX_BROKEN_CYCLE_ORDER };
    let corpus = random_corpus(count, 1, n_max, seed);
    let tally = corpus
        .par_iter()
        .enumerate()
        .map_init(ChromaticEngine::new, |eng, (i, g)| -> Result<Tally> {
            let poly = eng.polynomial(g)?;
            let mut t = Tally::default();
            checks.run(i as u64, g, &poly, &mut t)?;
            Ok(t)
        })
        .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))?;
    let mut b = ReportBuilder::new("verify_coeffs");
    b.param("mode", "random").param("n_max", n_max).param("count", count).param("orderings", orderings).param("seed", seed);
    b.param("h", h.map(write_graph6).transpose()?);
    Ok(assemble(b, tally, verify_bipartite(n_max)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn exhaustive_small() {
        let r = verify_coeffs(4, Some(&h()), 2, 1).unwrap();
        assert!(r.all_passed(), "{:?}", r.violations());
        assert_eq!(r.count("graphs"), 64);
        assert_eq!(r.count("broken_cycle_checks"), 64 * 3);
        assert_eq!(r.count("h_n4_unavailable"), 0);
    }

    #[test]
    fn without_h_the_last_coefficient_is_skipped() {
        let r = verify_coeffs(4, None, 0, 1).unwrap();
        assert!(r.all_passed(), "{:?}", r.violations());
        assert!(r.count("h_n4_unavailable") > 0);
    }

    #[test]
    fn random_mode() {
        let r = verify_coeffs_random(8, 40, Some(&h()), 1, 7).unwrap();
        assert!(r.all_passed(), "{:?}", r.violations());
        assert_eq!(r.count("graphs"), 40);
    }
}
