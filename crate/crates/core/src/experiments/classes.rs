//! Experiments over the distinct chromatic polynomials of a whole order.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use super::{ExperimentReport, ReportBuilder, Settings};
use crate::chromatic::{labeled_table, shifted_quotient_of, ChromaticEngine, InequalitySides};
use crate::error::{Error, Result};
use crate::graph::{from_edge_mask, treewidth_exact, write_graph6, Graph, MAX_ENUMERATION_ORDER};
use crate::poly::{to_falling_factorial, IntPoly};
use crate::rootfind::{all_roots_with, brown_bound_check, classify_real, decimal_string, RootOptions, RootSet};
use crate::stability::{low_degree_stable, max_re_shift_test, Verdict};

#[derive(Serialize)]
struct N3Item {
    graph6: String,
    labeled_graphs: usize,
    chi: usize,
    verdict: Verdict,
    quotient: IntPoly,
    low_degree_stable: Option<bool>,
    inequality: Option<InequalitySides>,
}

/// Every distinct chromatic polynomial of order `n` with `χ >= n - 3`:
/// `π(x + n - 1)` is quasi-stable, stable unless `G = K_n`, and inequality
/// (1) holds strictly when `χ = n - 3`.
pub fn verify_n3(n: usize) -> Result<ExperimentReport> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(Error::InvalidArgument(format!("verify-n3 needs 1 <= n <= {MAX_ENUMERATION_ORDER}, got {n}")));
    }
    let mut b = ReportBuilder::new("verify_n3");
    b.param("n", n);
    let table = labeled_table(n)?;
    let classes: Vec<_> = table.classes().into_iter().filter(|c| c.chi + 3 >= n).collect();
    let shift = BigRational::from_integer(BigInt::from(n - 1));
    let items: Vec<N3Item> = classes
        .par_iter()
        .map(|c| -> Result<N3Item> {
            let g = from_edge_mask(n, c.representative());
            let report = max_re_shift_test(&c.poly, &shift)?;
            let sq = shifted_quotient_of(&c.poly, n)?;
            let low = match sq.quotient.degree() {
                Some(1..=3) => Some(low_degree_stable(&sq.quotient)?),
                _ => None,
            };
            let inequality = (c.chi + 3 == n).then(|| {
                let a = to_falling_factorial(&c.poly);
                InequalitySides::from_factorial(&a[n - 1], &a[n - 2], &a[n - 3])
            });
            Ok(N3Item {
                graph6: write_graph6(&g)?,
                labeled_graphs: c.masks.len(),
                chi: c.chi,
                verdict: report.verdict,
                quotient: sq.quotient,
                low_degree_stable: low,
                inequality,
            })
        })
        .collect::<Result<_>>()?;
    for it in items {
        b.count("polynomials", 1);
        b.count(&format!("chi_{}", it.chi), 1);
        let complete = it.chi == n;
        if it.verdict == Verdict::NotQuasiStable {
            b.violation(format!("{}: π(x+{}) not quasi-stable", it.graph6, n - 1));
        }
        if (it.verdict == Verdict::Stable) == complete {
            b.violation(format!("{}: stable = {} but complete = {complete}", it.graph6, it.verdict == Verdict::Stable));
        }
        if complete {
            b.extremum("equality_case", &it.graph6);
        }
        if let Some(low) = it.low_degree_stable {
            if low != (it.verdict == Verdict::Stable) {
                b.violation(format!("{}: low-degree test disagrees with the general engine", it.graph6));
            }
        }
        if let Some(ineq) = &it.inequality {
            b.count("inequality_instances", 1);
            if !ineq.holds() {
                b.violation(format!("{}: inequality fails, lhs {} <= rhs {}", it.graph6, ineq.lhs, ineq.rhs));
            }
        }
        b.item(it);
    }
    Ok(b.finish())
}

/// One CSV row per root (repeated by multiplicity).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CloudRow {
    pub graph6: String,
    pub re: String,
    pub im: String,
    pub radius: String,
}

pub struct RootCloud {
    pub report: ExperimentReport,
    pub rows: Vec<CloudRow>,
}

impl RootCloud {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("graph6,re,im,radius\n");
        for r in &self.rows {
            out.push_str(&format!("{},{},{},{}\n", r.graph6, r.re, r.im, r.radius));
        }
        out
    }
}

enum Members {
    Masks(usize, Vec<u64>),
    Graphs(Vec<Graph>),
}

impl Members {
    fn graphs(&self) -> Box<dyn Iterator<Item = Graph> + '_> {
        match self {
            Members::Masks(n, masks) => Box::new(masks.iter().map(|&m| from_edge_mask(*n, m))),
            Members::Graphs(gs) => Box::new(gs.iter().cloned()),
        }
    }
}

struct CloudClass {
    poly: IntPoly,
    rep: Graph,
    members: Members,
}

#[derive(Serialize)]
struct CloudItem {
    graph6: String,
    order: usize,
    members: usize,
    max_re: f64,
    max_real_root: Option<f64>,
    /// Smallest tree-width looked at among graphs with this polynomial.
    treewidth: usize,
    brown_bound: i64,
    brown_holds: bool,
}

struct Evaluated {
    item: CloudItem,
    rows: Vec<CloudRow>,
    thomassen_ok: bool,
}

fn evaluate(class: &CloudClass, settings: &Settings) -> Result<Evaluated> {
    let opts = RootOptions { precision_bits: settings.precision_bits, seed: settings.seed, ..RootOptions::default() };
    let rs: RootSet = all_roots_with(&class.poly, &opts)?;
    let graph6 = write_graph6(&class.rep)?;
    let c = classify_real(&rs, settings.tol);
    let max_real_root = c.real.iter().map(|&i| rs.roots[i].re()).max_by(f64::total_cmp);
    let brown = brown_bound_check(&class.rep, &rs);
    // real roots are at most the tree-width of every graph with this polynomial
    let mut tw = treewidth_exact(&class.rep)?;
    let within = |tw: usize| max_real_root.is_none_or(|r| r <= tw as f64 + settings.tol);
    if !within(tw) {
        for g in class.members.graphs() {
            tw = tw.min(treewidth_exact(&g)?);
            if within(tw) {
                break;
            }
        }
    }
    let mut rows = Vec::new();
    for r in &rs.roots {
        let row = CloudRow {
            graph6: graph6.clone(),
            re: decimal_string(&r.z.re, 64),
            im: decimal_string(&r.z.im, 64),
            radius: decimal_string(&r.radius, 24),
        };
        rows.extend(std::iter::repeat_n(row, r.multiplicity));
    }
    let max_re = rs.roots.iter().map(|r| r.re()).fold(f64::NEG_INFINITY, f64::max);
    Ok(Evaluated {
        thomassen_ok: within(tw),
        rows,
        item: CloudItem {
            graph6,
            order: class.rep.order(),
            members: match &class.members {
                Members::Masks(_, m) => m.len(),
                Members::Graphs(g) => g.len(),
            },
            max_re,
            max_real_root,
            treewidth: tw,
            brown_bound: brown.bound,
            brown_holds: brown.holds,
        },
    })
}

fn cloud(classes: Vec<CloudClass>, mut b: ReportBuilder, settings: &Settings) -> Result<RootCloud> {
    b.param("precision_bits", settings.precision_bits).param("tol", settings.tol).param("seed", settings.seed);
    let evaluated: Vec<Evaluated> = classes.par_iter().map(|c| evaluate(c, settings)).collect::<Result<_>>()?;
    let mut rows = Vec::new();
    let mut orders = BTreeMap::new();
    let (mut max_re, mut max_non_real_re) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    let mut brown_violations = 0;
    for e in evaluated {
        let it = &e.item;
        *orders.entry(it.order).or_insert(0u64) += 1;
        max_re = max_re.max(it.max_re);
        for r in &e.rows {
            let (re, im): (f64, f64) = (r.re.parse().unwrap_or(f64::NAN), r.im.parse().unwrap_or(f64::NAN));
            if im.abs() > settings.tol {
                max_non_real_re = max_non_real_re.max(re);
            }
        }
        b.count("polynomials", 1);
        b.count("roots", e.rows.len() as u64);
        if !it.brown_holds {
            brown_violations += 1;
            b.violation(format!("{}: a nonzero root lies outside |z - 1| <= {}", it.graph6, it.brown_bound));
        }
        if !e.thomassen_ok {
            b.violation(format!("{}: real root {:?} above tree-width {}", it.graph6, it.max_real_root, it.treewidth));
        }
        if it.order > 0 && it.max_re > (it.order - 1) as f64 + settings.tol {
            b.violation(format!("{}: root with re {} > n - 1", it.graph6, it.max_re));
        }
        rows.extend(e.rows);
        b.item(e.item);
    }
    b.count("brown_violations", brown_violations);
    b.extremum("max_re", max_re);
    b.extremum("max_non_real_re", if max_non_real_re.is_finite() { Some(max_non_real_re) } else { None });
    b.extremum("mixed_orders", orders.len() > 1);
    b.extremum("orders", orders);
    Ok(RootCloud { report: b.finish(), rows })
}

/// Roots of every distinct chromatic polynomial of order `n <= 7`.
pub fn rootcloud_order(n: usize, settings: &Settings) -> Result<RootCloud> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(Error::InvalidArgument(format!(
            "internal enumeration covers 1 <= n <= {MAX_ENUMERATION_ORDER}; supply a graph6 file for larger orders"
        )));
    }
    let table = labeled_table(n)?;
    let classes = table
        .classes()
        .into_iter()
        .map(|c| CloudClass { rep: from_edge_mask(n, c.representative()), poly: c.poly, members: Members::Masks(n, c.masks) })
        .collect();
    let mut b = ReportBuilder::new("rootcloud");
    b.param("order", n);
    cloud(classes, b, settings)
}

/// Roots of every distinct chromatic polynomial among `graphs`; the first
/// graph with each polynomial names its rows.
pub fn rootcloud_graphs(graphs: &[Graph], settings: &Settings) -> Result<RootCloud> {
    let polys: Vec<IntPoly> = graphs
        .par_iter()
        .map_init(ChromaticEngine::new, |eng, g| eng.polynomial(g))
        .collect::<Result<_>>()?;
    let mut by_poly: BTreeMap<Vec<BigInt>, (usize, Vec<Graph>)> = BTreeMap::new();
    for (i, (g, p)) in graphs.iter().zip(&polys).enumerate() {
        by_poly.entry(p.coeffs().to_vec()).or_insert((i, Vec::new())).1.push(g.clone());
    }
    let mut classes: Vec<(usize, CloudClass)> = by_poly
        .into_values()
        .map(|(i, gs)| (i, CloudClass { poly: polys[i].clone(), rep: graphs[i].clone(), members: Members::Graphs(gs) }))
        .collect();
    classes.sort_by_key(|(i, _)| *i);
    let mut b = ReportBuilder::new("rootcloud");
    b.param("graphs", graphs.len());
    cloud(classes.into_iter().map(|(_, c)| c).collect(), b, settings)
}
