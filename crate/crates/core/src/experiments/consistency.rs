use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::bipartite::{cross_check, CrossCheck};
use super::{ExperimentReport, ReportBuilder, Settings};
use crate::chromatic::chromatic_polynomial;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::IntPoly;
use crate::rootfind::{all_roots_with, max_real_part, RootOptions};
use crate::stability::{is_stable, low_degree_stable, max_re_shift_test, Verdict};

#[derive(Serialize)]
struct KnItem {
    n: usize,
    poly: IntPoly,
    expected_re: f64,
    cross_check: CrossCheck,
    closest_non_real_re: Option<f64>,
    shift_verdict: Verdict,
    /// `(shift, verdict)` for shifts just below `n - 5/2`.
    smaller_shifts: Vec<(String, Verdict)>,
}

/// `K_n` minus a 2-edge matching: a non-real root at real part `n - 5/2`, and
/// `n - 5/2` is the least rational shift making `π` quasi-stable among those
/// tried.
pub fn kn_minus_2k2(n_from: usize, n_to: usize, settings: &Settings) -> Result<ExperimentReport> {
    if !(4 <= n_from && n_from <= n_to && n_to <= 12) {
        return Err(Error::InvalidArgument(format!("kn-minus-2k2 needs 4 <= from <= to <= 12, got {n_from}..{n_to}")));
    }
    let mut b = ReportBuilder::new("kn_minus_2k2");
    b.param("n_from", n_from).param("n_to", n_to).param("precision_bits", settings.precision_bits);
    let items: Vec<KnItem> = (n_from..=n_to)
        .into_par_iter()
        .map(|n| -> Result<KnItem> {
            let poly = chromatic_polynomial(&Graph::complete_minus_matching(n, 2)?)?;
            let shift = BigRational::new(BigInt::from(2 * n - 5), BigInt::from(2));
            let report = max_re_shift_test(&poly, &shift)?;
            let smaller_shifts = [(1, 2), (1, 1000), (1, 1_000_000_000)]
                .into_iter()
                .map(|(a, d)| -> Result<_> {
                    let s = &shift - BigRational::new(BigInt::from(a), BigInt::from(d));
                    Ok((s.to_string(), max_re_shift_test(&poly, &s)?.verdict))
                })
                .collect::<Result<_>>()?;
            let opts = RootOptions { precision_bits: settings.precision_bits, seed: settings.seed, ..RootOptions::default() };
            let rs = all_roots_with(&poly, &opts)?;
            let expected_re = n as f64 - 2.5;
            let closest_non_real_re = rs
                .roots
                .iter()
                .filter(|r| r.im().abs() > settings.tol)
                .map(|r| r.re())
                .min_by(|a, b| (a - expected_re).abs().total_cmp(&(b - expected_re).abs()));
            Ok(KnItem {
                n,
                expected_re,
                cross_check: cross_check(&poly, settings)?,
                closest_non_real_re,
                shift_verdict: report.verdict,
                smaller_shifts,
                poly,
            })
        })
        .collect::<Result<_>>()?;
    for it in items {
        b.count("orders", 1);
        if !it.closest_non_real_re.is_some_and(|re| (re - it.expected_re).abs() <= 1e-9) {
            b.violation(format!("n = {}: no non-real root with re = {} (closest {:?})", it.n, it.expected_re, it.closest_non_real_re));
        }
        if it.shift_verdict == Verdict::NotQuasiStable {
            b.violation(format!("n = {}: not quasi-stable at shift n - 5/2", it.n));
        }
        for (s, v) in &it.smaller_shifts {
            if *v != Verdict::NotQuasiStable {
                b.violation(format!("n = {}: quasi-stable at the smaller shift {s}", it.n));
            }
        }
        b.item(it);
    }
    Ok(b.finish())
}

fn random_poly(rng: &mut ChaCha8Rng) -> IntPoly {
    let degree = rng.gen_range(1..=12);
    if rng.gen_bool(0.5) {
        let mut c: Vec<i64> = (0..degree).map(|_| rng.gen_range(-4..=4)).collect();
        c.push(rng.gen_range(1..=4));
        return IntPoly::from_i64s(&c);
    }
    // products of small factors put roots on both sides and on the axis
    let mut f = IntPoly::one();
    while f.degree().unwrap_or(0) < degree {
        let factor = if degree - f.degree().unwrap_or(0) >= 2 && rng.gen_bool(0.5) {
            IntPoly::from_i64s(&[rng.gen_range(1..=9), rng.gen_range(-2..=5), 1])
        } else {
            IntPoly::from_i64s(&[rng.gen_range(-2..=5), 1])
        };
        f = &f * &factor;
    }
    f
}

#[derive(Serialize)]
struct Disagreement {
    poly: IntPoly,
    verdict: Verdict,
    max_re: f64,
}

/// Exact verdicts against numerical root locations on seeded random
/// polynomials, and the degree-three closed form against the general engine
/// on a coefficient grid.
pub fn stability_consistency(count: usize, settings: &Settings) -> Result<ExperimentReport> {
    let mut b = ReportBuilder::new("stability_consistency");
    b.param("count", count).param("seed", settings.seed).param("precision_bits", settings.precision_bits);
    let mut rng = ChaCha8Rng::seed_from_u64(settings.seed);
    let polys: Vec<IntPoly> = (0..count).map(|_| random_poly(&mut rng)).collect();
    let opts = RootOptions { precision_bits: settings.precision_bits, seed: settings.seed, ..RootOptions::default() };
    let results: Vec<(Verdict, f64)> = polys
        .par_iter()
        .map(|f| -> Result<_> {
            let verdict = is_stable(f)?.verdict;
            let m = max_real_part(&all_roots_with(f, &opts)?).expect("positive degree");
            Ok((verdict, m.value))
        })
        .collect::<Result<_>>()?;
    for (f, (verdict, max_re)) in polys.iter().zip(results) {
        b.count(&format!("verdict_{verdict:?}").to_lowercase(), 1);
        if max_re.abs() < 1e-6 {
            b.count("borderline", 1);
            continue;
        }
        let numeric = if max_re < 0.0 { Verdict::Stable } else { Verdict::NotQuasiStable };
        b.count("compared", 1);
        if numeric != verdict {
            b.violation(format!("{f}: exact {verdict:?}, numeric max re {max_re}"));
            b.item(Disagreement { poly: f.clone(), verdict, max_re });
        }
    }
    // closed form on every polynomial of degree 1..=3 with coefficients in -3..=3
    for degree in 1..=3usize {
        let cells = 7usize.pow(degree as u32);
        for lead in 1..=3 {
            for idx in 0..cells {
                let mut c: Vec<i64> = (0..degree).map(|k| (idx / 7usize.pow(k as u32) % 7) as i64 - 3).collect();
                c.push(lead);
                let f = IntPoly::from_i64s(&c);
                b.count("grid", 1);
                if low_degree_stable(&f)? != is_stable(&f)?.is_stable() {
                    b.violation(format!("{f}: closed-form and general stability disagree"));
                }
            }
        }
    }
    Ok(b.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kn_small() {
        let r = kn_minus_2k2(4, 6, &Settings::default()).unwrap();
        assert!(r.all_passed(), "{:?}", r.violations());
        assert_eq!(r.items[0]["poly"], serde_json::json!(["0", "-3", "6", "-4", "1"]));
        assert!(kn_minus_2k2(3, 5, &Settings::default()).is_err());
    }

    #[test]
    fn consistency_small() {
        let r = stability_consistency(60, &Settings::default()).unwrap();
        assert!(r.all_passed(), "{:?}", r.violations());
        assert!(r.count("compared") > 30);
        assert_eq!(r.count("grid"), 3 * (7 + 49 + 343));
    }
}
