//! Sturm sequences, real-rootedness, and exact real-root counting/isolation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{IntPoly, RatPoly};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SturmViolation {
    /// `deg f_index < deg f_{index-1} - 1`. An index equal to the sequence
    /// length means the sequence stopped at a member of positive degree.
    DegreeGap { index: usize },
    NegativeLeading { index: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SturmDiagnostic {
    pub degrees: Vec<usize>,
    pub leading_signs: Vec<i8>,
    pub first_violation: Option<SturmViolation>,
}

impl SturmDiagnostic {
    fn from_parts(degrees: Vec<usize>, leading_signs: Vec<i8>) -> Self {
        let mut first = None;
        for j in 0..degrees.len() {
            if j > 0 && degrees[j] + 1 < degrees[j - 1] {
                first = Some(SturmViolation::DegreeGap { index: j });
                break;
            }
            if leading_signs[j] < 0 {
                first = Some(SturmViolation::NegativeLeading { index: j });
                break;
            }
        }
        if first.is_none() && degrees.last().is_some_and(|&d| d > 0) {
            first = Some(SturmViolation::DegreeGap { index: degrees.len() });
        }
        SturmDiagnostic { degrees, leading_signs, first_violation: first }
    }

    pub fn is_clean(&self) -> bool {
        self.first_violation.is_none()
    }
}

fn sign(x: &BigRational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn sign_int(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// The literal sequence `f_0 = f`, `f_1 = f'`, `f_i = -rem(f_{i-1}, f_{i-2})`.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    pub members: Vec<RatPoly>,
    pub diagnostic: SturmDiagnostic,
}

pub fn sturm_sequence(f: &RatPoly) -> SturmSequence {
    assert!(f.degree().is_some_and(|d| d >= 1), "Sturm sequence needs positive degree");
    let mut members = vec![f.clone(), f.derivative()];
    loop {
        let k = members.len();
        let r = members[k - 2].rem(&members[k - 1]);
        if r.is_zero() {
            break;
        }
        members.push(-&r);
    }
    let degrees = members.iter().map(|m| m.degree().unwrap()).collect();
    let signs = members.iter().map(|m| sign(m.leading().unwrap())).collect();
    SturmSequence { members, diagnostic: SturmDiagnostic::from_parts(degrees, signs) }
}

/// Sturm sequence with every member divided by a positive rational so it is
/// a primitive integer polynomial. Degrees and all sign data match the
/// literal sequence.
pub fn sturm_sequence_scaled(f: &IntPoly) -> Vec<IntPoly> {
    assert!(f.degree().is_some_and(|d| d >= 1), "Sturm sequence needs positive degree");
    let mut members = vec![f.primitive(), f.derivative().primitive()];
    loop {
        let k = members.len();
        let (a, b) = (&members[k - 2], &members[k - 1]);
        let r = a.pseudo_rem(b);
        if r.is_zero() {
            break;
        }
        // prem = lc(b)^e * a mod b; -rem has the sign of -prem * sign(lc(b))^e
        let e = a.degree().unwrap() - b.degree().unwrap() + 1;
        let flip = b.leading().unwrap().is_negative() && e % 2 == 1;
        let next = if flip { r.primitive() } else { (-&r).primitive() };
        members.push(next);
    }
    members
}

pub fn diagnose_scaled(members: &[IntPoly]) -> SturmDiagnostic {
    let degrees = members.iter().map(|m| m.degree().unwrap()).collect();
    let signs = members.iter().map(|m| sign_int(m.leading().unwrap())).collect();
    SturmDiagnostic::from_parts(degrees, signs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealRootedness {
    pub all_real: bool,
    /// Diagnostic of the input's own Sturm sequence.
    pub raw: SturmDiagnostic,
    /// Diagnostic of the square-free part, present when the input has
    /// repeated roots; the verdict is read from it.
    pub square_free: Option<SturmDiagnostic>,
}

/// Decides whether `f` (positive degree, positive leading coefficient) has
/// only real roots.
pub fn has_all_real_roots(f: &RatPoly) -> Result<RealRootedness> {
    if f.degree().is_none_or(|d| d == 0) {
        return Err(Error::InvalidArgument("real-rootedness needs positive degree".into()));
    }
    if !f.leading().unwrap().is_positive() {
        return Err(Error::NonStandard);
    }
    let fi = f.to_int_scaled();
    let raw_seq = sturm_sequence_scaled(&fi);
    let raw = diagnose_scaled(&raw_seq);
    let repeated = raw_seq.last().unwrap().degree().unwrap() > 0;
    if !repeated {
        return Ok(RealRootedness { all_real: raw.is_clean(), raw, square_free: None });
    }
    let sqf = f.square_free_part().to_int_scaled();
    if sqf.degree() == Some(0) {
        unreachable!("positive-degree input has a positive-degree square-free part");
    }
    let sf = diagnose_scaled(&sturm_sequence_scaled(&sqf));
    Ok(RealRootedness { all_real: sf.is_clean(), raw, square_free: Some(sf) })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    At(BigRational),
    PosInf,
}

impl Bound {
    pub fn int(v: i64) -> Self {
        Bound::At(BigRational::from_integer(BigInt::from(v)))
    }
}

/// Sign of `p` immediately to the right of `c`.
fn sign_right_of(p: &IntPoly, c: &BigRational) -> i8 {
    let mut q = p.clone();
    loop {
        let s = sign(&q.eval_rational(c));
        if s != 0 || q.degree() == Some(0) {
            return s;
        }
        q = q.derivative();
    }
}

fn sign_at(p: &IntPoly, at: &Bound) -> i8 {
    let lc = sign_int(p.leading().unwrap());
    match at {
        Bound::PosInf => lc,
        Bound::NegInf => {
            if p.degree().unwrap().is_multiple_of(2) {
                lc
            } else {
                -lc
            }
        }
        Bound::At(c) => sign_right_of(p, c),
    }
}

fn variations(seq: &[IntPoly], at: &Bound) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for p in seq {
        let s = sign_at(p, at);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Precomputed Sturm data of a square-free polynomial, for repeated counting.
#[derive(Clone, Debug)]
pub struct RootCounter {
    seq: Vec<IntPoly>,
}

impl RootCounter {
    /// Builds the counter from the square-free part of `f` (nonzero).
    pub fn new(f: &RatPoly) -> Self {
        assert!(!f.is_zero(), "root counting needs a nonzero polynomial");
        let sqf = f.square_free_part().to_int_scaled();
        if sqf.degree() == Some(0) {
            return RootCounter { seq: vec![sqf] };
        }
        RootCounter { seq: sturm_sequence_scaled(&sqf) }
    }

    pub fn square_free(&self) -> &IntPoly {
        &self.seq[0]
    }

    /// Distinct real roots in the half-open interval `(lower, upper]`.
    pub fn count(&self, lower: &Bound, upper: &Bound) -> usize {
        if self.seq[0].degree() == Some(0) {
            return 0;
        }
        let a = variations(&self.seq, lower);
        let b = variations(&self.seq, upper);
        a.saturating_sub(b)
    }
}

/// Number of distinct real roots of `f` in `(lower, upper]`.
pub fn real_root_count(f: &RatPoly, lower: &Bound, upper: &Bound) -> usize {
    RootCounter::new(f).count(lower, upper)
}

/// Half-open rational interval `(lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    #[serde(with = "rational_string")]
    pub lo: BigRational,
    #[serde(with = "rational_string")]
    pub hi: BigRational,
}

impl Interval {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn overlaps(&self, other: &Interval) -> bool {
        self.lo < other.hi && other.lo < self.hi
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo < x && x <= &self.hi
    }
}

pub(crate) mod rational_string {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// `1 + max |a_i / a_d|`: every root lies strictly inside `(-B, B)`.
pub fn cauchy_bound(f: &RatPoly) -> BigRational {
    let lead = f.leading().expect("nonzero polynomial").abs();
    let d = f.degree().unwrap();
    let m = f.coeffs()[..d]
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(BigRational::zero);
    m + BigRational::one()
}

impl RootCounter {
    pub fn count_in(&self, iv: &Interval) -> usize {
        self.count(&Bound::At(iv.lo.clone()), &Bound::At(iv.hi.clone()))
    }

    /// Disjoint intervals, one per distinct real root, in increasing order.
    pub fn isolate(&self) -> Vec<Interval> {
        let f = &self.seq[0];
        if f.degree() == Some(0) {
            return Vec::new();
        }
        let b = cauchy_bound(&f.to_rat());
        let mut out = Vec::new();
        let mut stack = vec![Interval { lo: -b.clone(), hi: b }];
        while let Some(iv) = stack.pop() {
            match self.count_in(&iv) {
                0 => {}
                1 => out.push(iv),
                _ => {
                    let mid = iv.midpoint();
                    // push right half first so the left half is processed first
                    stack.push(Interval { lo: mid.clone(), hi: iv.hi.clone() });
                    stack.push(Interval { lo: iv.lo, hi: mid });
                }
            }
        }
        out.sort_by(|a, b| a.lo.cmp(&b.lo));
        out
    }

    /// Bisects an isolating interval until its width is at most `width`.
    pub fn refine(&self, iv: &Interval, width: &BigRational) -> Interval {
        let mut iv = iv.clone();
        while &iv.width() > width {
            let mid = iv.midpoint();
            let left = Interval { lo: iv.lo.clone(), hi: mid.clone() };
            iv = if self.count_in(&left) == 1 { left } else { Interval { lo: mid, hi: iv.hi } };
        }
        iv
    }

    /// Halves an isolating interval once.
    pub fn bisect(&self, iv: &Interval) -> Interval {
        let mid = iv.midpoint();
        let left = Interval { lo: iv.lo.clone(), hi: mid.clone() };
        if self.count_in(&left) == 1 {
            left
        } else {
            Interval { lo: mid, hi: iv.hi.clone() }
        }
    }
}

/// Isolating intervals for the distinct real roots of `f`.
pub fn isolate_real_roots(f: &RatPoly) -> Vec<Interval> {
    RootCounter::new(f).isolate()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn rp(c: &[i64]) -> RatPoly {
        RatPoly::from_i64s(c)
    }

    #[test]
    fn literal_sequences() {
        let s = sturm_sequence(&rp(&[6, -5, 1]));
        assert_eq!(s.members, vec![rp(&[6, -5, 1]), rp(&[-5, 2]), RatPoly::new(vec![rat(1, 4)])]);
        assert!(s.diagnostic.is_clean());

        let s = sturm_sequence(&rp(&[1, 0, 1]));
        assert_eq!(s.members[2], rp(&[-1]));
        assert_eq!(s.diagnostic.first_violation, Some(SturmViolation::NegativeLeading { index: 2 }));

        let s = sturm_sequence(&rp(&[0, 0, 0, 1]));
        assert_eq!(s.members, vec![rp(&[0, 0, 0, 1]), rp(&[0, 0, 3])]);
        assert_eq!(s.diagnostic.first_violation, Some(SturmViolation::DegreeGap { index: 2 }));
    }

    #[test]
    fn scaled_sequence_keeps_sign_data() {
        for c in [&[6, -5, 1][..], &[1, 0, 1], &[-3, 0, 2, 0, 1], &[1, -7, 0, 3, 5, 1], &[2, 5, 4, 1]] {
            let f = rp(c);
            let lit = sturm_sequence(&f).diagnostic;
            let sc = diagnose_scaled(&sturm_sequence_scaled(&f.to_int_scaled()));
            assert_eq!(lit, sc, "{c:?}");
        }
    }

    #[test]
    fn real_rootedness_examples() {
        // (t-1)(t-2)(t+3)
        assert!(has_all_real_roots(&rp(&[6, -7, 0, 1])).unwrap().all_real);
        assert!(!has_all_real_roots(&rp(&[1, 0, 1])).unwrap().all_real);
        // (t+1)^2 (t+2)
        let r = has_all_real_roots(&rp(&[2, 5, 4, 1])).unwrap();
        assert!(r.all_real);
        assert!(r.square_free.is_some());
        assert!(!r.raw.is_clean());
        assert!(matches!(has_all_real_roots(&rp(&[-1, 1])), Ok(RealRootedness { all_real: true, .. })));
        assert_eq!(has_all_real_roots(&rp(&[1, 0, -1])), Err(Error::NonStandard));
    }

    #[test]
    fn counting_examples() {
        assert_eq!(real_root_count(&rp(&[6, -5, 1]), &Bound::int(0), &Bound::int(10)), 2);
        assert_eq!(real_root_count(&rp(&[1, 0, 1]), &Bound::NegInf, &Bound::PosInf), 0);
        assert_eq!(real_root_count(&rp(&[0, 1, 1]), &Bound::NegInf, &Bound::int(0)), 2);
        // half-open: (-1, 0] contains 0 only; (-2, -1] contains -1
        assert_eq!(real_root_count(&rp(&[0, 1, 1]), &Bound::int(-1), &Bound::int(0)), 1);
        assert_eq!(real_root_count(&rp(&[0, 1, 1]), &Bound::int(-2), &Bound::int(-1)), 1);
        assert_eq!(real_root_count(&rp(&[0, 1, 1]), &Bound::int(0), &Bound::PosInf), 0);
    }

    #[test]
    fn isolation_examples() {
        let f = rp(&[-2, 0, 1]);
        let counter = RootCounter::new(&f);
        let ivs = counter.isolate();
        assert_eq!(ivs.len(), 2);
        let w = BigRational::new(BigInt::one(), BigInt::from(1 << 20));
        let refined: Vec<_> = ivs.iter().map(|iv| counter.refine(iv, &w)).collect();
        let two = BigRational::from_integer(BigInt::from(2));
        for iv in &refined {
            assert!(iv.width() <= w);
            // the root r satisfies lo < r <= hi, so lo^2 and hi^2 bracket 2
            let (lo2, hi2) = (&iv.lo * &iv.lo, &iv.hi * &iv.hi);
            assert!((lo2 < two && two <= hi2) || (hi2 <= two && two < lo2));
        }
        assert!(!refined[0].overlaps(&refined[1]));

        let ivs = isolate_real_roots(&rp(&[5, 1]));
        assert_eq!(ivs.len(), 1);
        assert!(ivs[0].contains(&BigRational::from_integer(BigInt::from(-5))));
        assert!(isolate_real_roots(&rp(&[4, 0, 1])).is_empty());
    }
}
