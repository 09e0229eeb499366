//! Hurwitz stability decided exactly: Hermite–Biehler with Sturm counts and
//! interlacing, the closed-form tests for degree at most three, and the
//! leading Sturm coefficient used for `K_{p,q}`.

mod f2;

pub use f2::{bipartite_shifted_coeffs, f2_evidence, f2_leading_value, quartic_value, F2Evidence};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::sturm::rational_string;
use crate::poly::{has_all_real_roots, interlaces, Bound, IntPoly, Interlacing, Interval, RatPoly, RealRootedness, RootCounter};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Stable,
    QuasiStableNotStable,
    NotQuasiStable,
}

/// `f(x) = f^e(x^2) + x f^o(x^2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Part {
    Even,
    Odd,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// The part has a negative leading coefficient.
    NonStandardPart { part: Part },
    NotRealRooted { part: Part, sturm: RealRootedness },
    /// Real roots of the part in `(0, ∞)`.
    PositiveRoots { part: Part, count: usize, intervals: Vec<Interval> },
    /// `f^o ≺ f^e` fails.
    NoInterlacing { interlacing: Interlacing },
    /// Quasi-stable with roots on the imaginary axis: `x = 0` and/or pairs
    /// `±iω` with `-ω^2` a root of `gcd(f^e, f^o)` in `t`.
    AxisRoots { zero_root: bool, pairs: usize, common_factor: RatPoly, pair_intervals: Vec<Interval> },
    /// Stable; the interlacing that proves it.
    Interlacing { interlacing: Interlacing },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityReport {
    pub verdict: Verdict,
    pub certificate: Certificate,
    /// The input was tested as `f(x + shift)`.
    #[serde(with = "rational_string")]
    pub shift: BigRational,
}

impl StabilityReport {
    pub fn is_quasi_stable(&self) -> bool {
        self.verdict != Verdict::NotQuasiStable
    }

    pub fn is_stable(&self) -> bool {
        self.verdict == Verdict::Stable
    }
}

fn split(f: &RatPoly) -> (RatPoly, RatPoly) {
    let c = f.coeffs();
    let even = c.iter().step_by(2).cloned().collect();
    let odd = c.iter().skip(1).step_by(2).cloned().collect();
    (RatPoly::new(even), RatPoly::new(odd))
}

/// Checks that a part is standard with only nonpositive roots.
fn nonpositive_rooted(p: &RatPoly, part: Part) -> Option<Certificate> {
    if !p.is_standard() {
        return Some(Certificate::NonStandardPart { part });
    }
    if p.degree().is_none_or(|d| d == 0) {
        return None;
    }
    let sturm = has_all_real_roots(p).expect("standard, positive degree");
    if !sturm.all_real {
        return Some(Certificate::NotRealRooted { part, sturm });
    }
    let counter = RootCounter::new(p);
    let count = counter.count(&Bound::int(0), &Bound::PosInf);
    if count > 0 {
        let (_, intervals) = split_at_zero(&counter);
        return Some(Certificate::PositiveRoots { part, count, intervals });
    }
    None
}

/// Isolating intervals of the strictly negative and strictly positive roots.
fn split_at_zero(counter: &RootCounter) -> (Vec<Interval>, Vec<Interval>) {
    let zero = BigRational::zero();
    let root_at_zero = counter.square_free().coeff(0).is_zero();
    let (mut neg, mut pos) = (Vec::new(), Vec::new());
    for iv in counter.isolate() {
        if iv.hi <= zero {
            if !(root_at_zero && iv.contains(&zero)) {
                neg.push(iv);
            }
        } else if iv.lo >= zero {
            pos.push(iv);
        } else if counter.count(&Bound::At(iv.lo.clone()), &Bound::int(0)) == 1 {
            if !root_at_zero {
                neg.push(Interval { lo: iv.lo, hi: zero.clone() });
            }
        } else {
            pos.push(Interval { lo: zero.clone(), hi: iv.hi });
        }
    }
    (neg, pos)
}

fn analyze(f: &RatPoly, shift: BigRational) -> Result<StabilityReport> {
    if f.degree().is_none_or(|d| d == 0) {
        return Err(Error::InvalidArgument("stability needs positive degree".into()));
    }
    if !f.is_standard() {
        return Err(Error::NonStandard);
    }
    let (fe, fo) = split(f);
    let fail = |certificate| Ok(StabilityReport { verdict: Verdict::NotQuasiStable, certificate, shift: shift.clone() });
    if let Some(c) = nonpositive_rooted(&fe, Part::Even) {
        return fail(c);
    }
    if let Some(c) = nonpositive_rooted(&fo, Part::Odd) {
        return fail(c);
    }
    let interlacing = interlaces(&fo, &fe)?;
    if !interlacing.holds {
        return fail(Certificate::NoInterlacing { interlacing });
    }

    let zero_root = f.coeff(0).is_zero();
    let common = if fo.is_zero() { fe.monic() } else if fe.is_zero() { fo.monic() } else { fe.gcd(&fo) };
    // x = iω is a root iff t = -ω^2 is a common root of f^e and f^o
    let pair_intervals = if common.degree().is_some_and(|d| d > 0) {
        split_at_zero(&RootCounter::new(&common)).0
    } else {
        Vec::new()
    };
    let pairs = pair_intervals.len();
    let certificate;
    let verdict;
    if zero_root || pairs > 0 {
        verdict = Verdict::QuasiStableNotStable;
        certificate = Certificate::AxisRoots { zero_root, pairs, common_factor: common, pair_intervals };
    } else {
        verdict = Verdict::Stable;
        certificate = Certificate::Interlacing { interlacing };
    }
    Ok(StabilityReport { verdict, certificate, shift })
}

/// Hermite–Biehler test of `Re(z) <= 0` for every root; the report also
/// settles strict stability.
pub fn is_quasi_stable(f: &IntPoly) -> Result<StabilityReport> {
    analyze(&f.to_rat(), BigRational::zero())
}

/// Same analysis as [`is_quasi_stable`]; read [`StabilityReport::is_stable`].
pub fn is_stable(f: &IntPoly) -> Result<StabilityReport> {
    is_quasi_stable(f)
}

/// Tests whether every root of `f` has `Re(z) <= c` via `f(x + c)`.
pub fn max_re_shift_test(f: &IntPoly, c: &BigRational) -> Result<StabilityReport> {
    analyze(&f.to_rat().shift(c), c.clone())
}

/// The closed-form test for degree one to three.
pub fn low_degree_stable(f: &IntPoly) -> Result<bool> {
    let d = f.degree().unwrap_or(0);
    if !(1..=3).contains(&d) {
        return Err(Error::InvalidArgument(format!("low-degree test needs 1 <= deg <= 3, got {d}")));
    }
    let c: Vec<BigInt> = if f.leading().unwrap().is_negative() {
        f.coeffs().iter().map(|x| -x).collect()
    } else {
        f.coeffs().to_vec()
    };
    if d <= 2 {
        return Ok(c.iter().all(Signed::is_positive));
    }
    // a x^3 + b x^2 + c x + d with a > 0: b, c, d > 0 and bc > ad
    let (d0, c1, b2, a3) = (&c[0], &c[1], &c[2], &c[3]);
    Ok(d0.is_positive() && c1.is_positive() && b2.is_positive() && b2 * c1 > a3 * d0)
}
