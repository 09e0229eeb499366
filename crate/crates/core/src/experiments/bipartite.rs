use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::{ExperimentReport, ReportBuilder, Settings};
use crate::chromatic::{chromatic_polynomial, chromatic_polynomial_bipartite, h_bipartite_formula};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::IntPoly;
use crate::rootfind::{all_roots_with, classify_real, RootOptions};
use crate::stability::{f2_evidence, f2_leading_value, max_re_shift_test, quartic_value, Verdict};

pub const MAX_SWEEP_P: usize = 6;
pub const MAX_SWEEP_Q: usize = 200;

#[derive(Serialize)]
struct SweepItem {
    q: usize,
    verdict: Verdict,
    quartic_value: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub(crate) struct CrossCheck {
    pub max_non_real_re: Option<f64>,
    pub witness_im: Option<f64>,
    pub max_real_root: Option<f64>,
    pub conjugates_paired: bool,
}

/// Largest real part among non-real roots and the largest real root.
pub(crate) fn cross_check(f: &IntPoly, settings: &Settings) -> Result<CrossCheck> {
    let opts = RootOptions { precision_bits: settings.precision_bits, seed: settings.seed, ..RootOptions::default() };
    let rs = all_roots_with(f, &opts)?;
    let c = classify_real(&rs, settings.tol);
    let best = c
        .non_real
        .iter()
        .map(|&i| &rs.roots[i])
        .max_by(|a, b| a.re().total_cmp(&b.re()).then(a.im().total_cmp(&b.im())));
    Ok(CrossCheck {
        max_non_real_re: best.map(|r| r.re()),
        witness_im: best.map(|r| r.im()),
        max_real_root: c.real.iter().map(|&i| rs.roots[i].re()).max_by(f64::total_cmp),
        conjugates_paired: c.conjugates_paired,
    })
}

/// Smallest `q` for which `π(K_{p,q}, x + p)` is not quasi-stable.
pub fn minq(p: usize, q_max: usize, settings: &Settings) -> Result<ExperimentReport> {
    if !(2..=MAX_SWEEP_P).contains(&p) || !(2..=MAX_SWEEP_Q).contains(&q_max) {
        return Err(Error::InvalidArgument(format!(
            "minq needs 2 <= p <= {MAX_SWEEP_P} and 2 <= q_max <= {MAX_SWEEP_Q}, got p = {p}, q_max = {q_max}"
        )));
    }
    let mut b = ReportBuilder::new("minq");
    b.param("p", p).param("q_max", q_max).param("precision_bits", settings.precision_bits).param("tol", settings.tol);
    let shift = BigRational::from_integer(BigInt::from(p));
    let batch = rayon::current_num_threads().max(1);
    let mut found = None;
    let mut q = 2;
    while q <= q_max && found.is_none() {
        let hi = (q + batch - 1).min(q_max);
        let results: Vec<_> = (q..=hi)
            .into_par_iter()
            .map(|q| -> Result<_> {
                let f = chromatic_polynomial_bipartite(p, q)?;
                Ok((q, f.clone(), max_re_shift_test(&f, &shift)?))
            })
            .collect::<Result<_>>()?;
        for (q, f, report) in results {
            b.item(SweepItem { q, verdict: report.verdict, quartic_value: quartic_value(p, q)?.to_string() });
            b.count("q_tested", 1);
            if !report.is_quasi_stable() {
                found = Some((q, f, report));
                break;
            }
        }
        q = hi + 1;
    }
    match found {
        None => b.extremum("q_star", ()),
        Some((q, f, report)) => {
            b.extremum("q_star", q);
            b.extremum("certificate", &report);
            b.extremum("f2", f2_evidence(p, q)?);
            let check = cross_check(&f, settings)?;
            let pf = p as f64;
            if !check.max_non_real_re.is_some_and(|re| re > pf + 1e-6) {
                b.violation(format!("K_{{{p},{q}}}: no non-real root with re > {p} + 1e-6 ({:?})", check.max_non_real_re));
            }
            if check.max_real_root.is_some_and(|r| r > pf + settings.tol) {
                b.violation(format!("K_{{{p},{q}}}: real root {:?} above {p}", check.max_real_root));
            }
            if !check.conjugates_paired {
                b.violation(format!("K_{{{p},{q}}}: non-real roots not in conjugate pairs"));
            }
            b.extremum("cross_check", check);
        }
    }
    Ok(b.finish())
}

#[derive(Serialize)]
struct QuarticItem {
    p: usize,
    mismatches: usize,
    /// Smallest `q` in the grid from which the value stays positive.
    q0: Option<usize>,
    value_at_q2: String,
    leading: String,
}

/// `2n a_{n-4} - (n-2) a_{n-2}^2` against the quartic on a grid.
pub fn verify_quartic(p_max: usize, q_max: usize) -> Result<ExperimentReport> {
    if !(2..=MAX_SWEEP_P).contains(&p_max) || !(2..=MAX_SWEEP_Q).contains(&q_max) {
        return Err(Error::InvalidArgument(format!(
            "verify-quartic needs 2 <= p_max <= {MAX_SWEEP_P} and 2 <= q_max <= {MAX_SWEEP_Q}"
        )));
    }
    let mut b = ReportBuilder::new("verify_quartic");
    b.param("p_max", p_max).param("q_max", q_max);
    for p in 2..=p_max {
        let mut mismatches = 0;
        let mut q0 = None;
        let mut v2 = BigRational::zero();
        for q in 2..=q_max {
            let lhs = f2_leading_value(p, q)?;
            let rhs = quartic_value(p, q)?;
            if lhs != rhs {
                mismatches += 1;
                b.violation(format!("({p},{q}): coefficient side {lhs} != quartic {rhs}"));
            }
            if rhs.is_positive() {
                q0.get_or_insert(q);
            } else {
                q0 = None;
            }
            if q == 2 {
                v2 = rhs;
            }
        }
        let leading = BigRational::new(BigInt::from(p * (p - 1)), BigInt::from(6));
        if !leading.is_positive() {
            b.violation(format!("p = {p}: leading coefficient {leading} not positive"));
        }
        b.count("grid_points", (q_max - 1) as u64);
        b.item(QuarticItem { p, mismatches, q0, value_at_q2: v2.to_string(), leading: leading.to_string() });
    }
    if q_max >= 6 {
        b.extremum("value_2_6", quartic_value(2, 6)?.to_string());
    }
    b.extremum("value_2_2", quartic_value(2, 2)?.to_string());
    Ok(b.finish())
}

#[derive(Serialize)]
struct BipartiteItem {
    p: usize,
    q: usize,
    closed_form_matches: bool,
    h_formula_matches: bool,
}

/// Closed form and the `h` formulas for `K_{p,q}` against
/// deletion–contraction, `2 <= p <= q`, `p + q <= n_max`.
pub fn verify_bipartite(n_max: usize) -> Result<ExperimentReport> {
    if n_max > 14 {
        return Err(Error::TooLarge { what: "bipartite cross-check", n: n_max, limit: 14 });
    }
    let mut b = ReportBuilder::new("verify_bipartite");
    b.param("n_max", n_max);
    let pairs: Vec<(usize, usize)> =
        (2..=n_max / 2).flat_map(|p| (p..=n_max - p).map(move |q| (p, q))).collect();
    let results: Vec<_> = pairs
        .par_iter()
        .map(|&(p, q)| -> Result<_> {
            let dc = chromatic_polynomial(&Graph::complete_bipartite(p, q)?)?;
            let closed = chromatic_polynomial_bipartite(p, q)?;
            let h = h_bipartite_formula(p, q)?;
            let n = p + q;
            let abs = dc.abs_coeffs();
            let h_ok = (0..5).all(|i| abs[n - i] == h[i]);
            Ok(BipartiteItem { p, q, closed_form_matches: closed == dc, h_formula_matches: h_ok })
        })
        .collect::<Result<_>>()?;
    for it in results {
        b.count("pairs", 1);
        if !it.closed_form_matches {
            b.violation(format!("K_{{{},{}}}: closed form differs from deletion-contraction", it.p, it.q));
        }
        if !it.h_formula_matches {
            b.violation(format!("K_{{{},{}}}: h formulas differ from deletion-contraction", it.p, it.q));
        }
        b.item(it);
    }
    Ok(b.finish())
}
