//! All complex roots of integer polynomials by simultaneous (Aberth–Ehrlich)
//! iteration at configurable binary precision.

mod complex;

pub use complex::{Complex, Real};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{IntPoly, RatPoly};
use complex::{abs, pow2, real_from_f64, real_from_int, to_f64};

pub const DEFAULT_PRECISION_BITS: usize = 256;
pub const MAX_PRECISION_BITS: usize = 4096;
pub const MAX_ROOT_DEGREE: usize = 400;
pub const DEFAULT_REAL_TOL: f64 = 1e-9;
pub const DEFAULT_SEED: u64 = 0x5eed;

const MAX_ITERATIONS: usize = 600;

#[derive(Clone, Copy, Debug)]
pub struct RootOptions {
    pub precision_bits: usize,
    /// Precision doubles on non-convergence up to this many bits.
    pub max_precision_bits: usize,
    pub seed: u64,
}

impl Default for RootOptions {
    fn default() -> Self {
        RootOptions { precision_bits: DEFAULT_PRECISION_BITS, max_precision_bits: MAX_PRECISION_BITS, seed: DEFAULT_SEED }
    }
}

#[derive(Clone, Debug)]
pub struct Root {
    pub z: Complex,
    /// A disk of this radius about `z` contains a root.
    pub radius: Real,
    pub multiplicity: usize,
}

impl Root {
    pub fn re(&self) -> f64 {
        to_f64(&self.z.re)
    }

    pub fn im(&self) -> f64 {
        to_f64(&self.z.im)
    }

    pub fn radius_f64(&self) -> f64 {
        to_f64(&self.radius)
    }
}

/// Distinct roots with multiplicities summing to the degree, sorted by
/// real then imaginary part.
#[derive(Clone, Debug)]
pub struct RootSet {
    pub degree: usize,
    pub precision_bits: usize,
    pub roots: Vec<Root>,
}

impl RootSet {
    pub fn count_with_multiplicity(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }
}

/// Decimal rendering with as many significant digits as the precision carries.
pub fn decimal_string(x: &Real, bits: usize) -> String {
    let digits = (bits as f64 * std::f64::consts::LOG10_2).ceil() as usize;
    if *x == Real::ZERO {
        return "0".into();
    }
    x.to_decimal().value().with_precision(digits).value().to_string()
}

struct RootJson<'a>(&'a Root, usize);

impl Serialize for RootJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Root", 4)?;
        st.serialize_field("re", &decimal_string(&self.0.z.re, self.1))?;
        st.serialize_field("im", &decimal_string(&self.0.z.im, self.1))?;
        st.serialize_field("radius", &decimal_string(&self.0.radius, 64))?;
        st.serialize_field("multiplicity", &self.0.multiplicity)?;
        st.end()
    }
}

impl Serialize for RootSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RootSet", 3)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("precision_bits", &self.precision_bits)?;
        let roots: Vec<RootJson> = self.roots.iter().map(|r| RootJson(r, self.precision_bits)).collect();
        st.serialize_field("roots", &roots)?;
        st.end()
    }
}

fn log2_abs(b: &BigInt) -> f64 {
    let bits = b.bits();
    if bits <= 1000 {
        return b.abs().to_f64().unwrap().log2();
    }
    let shift = bits - 64;
    (b.abs() >> shift).to_f64().unwrap().log2() + shift as f64
}

/// Cauchy's radius: the positive root of `|a_d| x^d = Σ_{i<d} |a_i| x^i`,
/// found in the log domain.
fn cauchy_radius(f: &IntPoly) -> f64 {
    let d = f.degree().unwrap();
    let lead = log2_abs(f.leading().unwrap());
    let terms: Vec<(f64, f64)> = f.coeffs()[..d]
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i as f64, log2_abs(c) - lead))
        .collect();
    // φ(y) = log2 Σ 2^(c_i + i y) - d y is decreasing in y = log2 x
    let phi = |y: f64| {
        let top = terms.iter().map(|(i, c)| c + i * y).fold(f64::NEG_INFINITY, f64::max);
        top + terms.iter().map(|(i, c)| (c + i * y - top).exp2()).sum::<f64>().log2() - d as f64 * y
    };
    let (mut lo, mut hi) = (-1100.0, 1100.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if phi(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    hi.min(1000.0).exp2()
}

struct Work {
    bits: usize,
    coeffs: Vec<Real>,
    abs_coeffs: Vec<Real>,
}

impl Work {
    fn new(f: &IntPoly, bits: usize) -> Self {
        let coeffs: Vec<Real> = f.coeffs().iter().map(|c| real_from_int(c, bits)).collect();
        let abs_coeffs = coeffs.iter().map(abs).collect();
        Work { bits, coeffs, abs_coeffs }
    }

    /// `(f(z), f'(z))` by Horner.
    fn eval(&self, z: &Complex) -> (Complex, Complex) {
        let mut p = Complex::zero(self.bits);
        let mut dp = Complex::zero(self.bits);
        for c in self.coeffs.iter().rev() {
            dp = &(&dp * z) + &p;
            p = (&p * z).add_real(c);
        }
        (p, dp)
    }

    /// Horner rounding-error bound `2 d 2^-bits Σ |a_i| |z|^i`.
    fn eval_error(&self, z: &Complex) -> Real {
        let r = z.abs();
        let mut acc = complex::zero(self.bits);
        for c in self.abs_coeffs.iter().rev() {
            acc = &acc * &r + c;
        }
        let d = self.coeffs.len() as i64;
        acc * Real::from(2 * d) * pow2(-(self.bits as isize), self.bits)
    }
}

/// Aberth iteration on a square-free polynomial of degree at least two.
fn aberth(f: &IntPoly, bits: usize, seed: u64) -> Option<Vec<Complex>> {
    let d = f.degree().unwrap();
    let work = Work::new(f, bits);
    let radius = cauchy_radius(f);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let step = std::f64::consts::TAU / d as f64;
    let mut z: Vec<Complex> = (0..d)
        .map(|k| {
            let theta = 0.4 + step * (k as f64 + rng.gen_range(0.0..0.5));
            Complex::from_f64(radius * theta.cos(), radius * theta.sin(), bits)
        })
        .collect();
    let tol = pow2(-((bits / 2) as isize), bits);
    let tol_sq = &tol * &tol;
    let one = real_from_f64(1.0, bits);
    let mut done = vec![false; d];
    for _ in 0..MAX_ITERATIONS {
        for i in 0..d {
            if done[i] {
                continue;
            }
            let (p, dp) = work.eval(&z[i]);
            if p.is_zero() {
                done[i] = true;
                continue;
            }
            if dp.is_zero() {
                // nudge off a critical point
                z[i] = &z[i] + &Complex::new(tol.clone(), tol.clone());
                continue;
            }
            let ratio = &p / &dp;
            let mut sum = Complex::zero(bits);
            for (j, zj) in z.iter().enumerate() {
                if j != i {
                    sum = &sum + &(&z[i] - zj).recip();
                }
            }
            let denom = (&ratio * &sum).scale(&-&one).add_real(&one);
            let w = if denom.is_zero() { ratio } else { &ratio / &denom };
            z[i] = &z[i] - &w;
            let scale = z[i].norm_sqr().max(one.clone());
            if w.norm_sqr() <= &tol_sq * &scale {
                done[i] = true;
            }
        }
        if done.iter().all(|&x| x) {
            // Newton polish
            for zi in z.iter_mut() {
                for _ in 0..2 {
                    let (p, dp) = work.eval(zi);
                    if p.is_zero() || dp.is_zero() {
                        break;
                    }
                    *zi = &*zi - &(&p / &dp);
                }
            }
            return Some(z);
        }
    }
    None
}

/// Real coefficients: a clearly non-real root and a partner within both
/// radii of its conjugate become exact conjugates about their midpoint.
fn pair_conjugates(roots: &mut [Root]) {
    let zero = Real::ZERO;
    let mut used = vec![false; roots.len()];
    for i in 0..roots.len() {
        if used[i] || roots[i].z.im <= roots[i].radius {
            continue;
        }
        let target = roots[i].z.conj();
        let best = (0..roots.len())
            .filter(|&j| !used[j] && roots[j].z.im < zero)
            .min_by(|&a, &b| (&roots[a].z - &target).norm_sqr().cmp(&(&roots[b].z - &target).norm_sqr()));
        let Some(j) = best else { continue };
        let gap = (&roots[j].z - &target).abs();
        if gap > &roots[i].radius + &roots[j].radius {
            continue;
        }
        used[i] = true;
        used[j] = true;
        let two = Real::from(2);
        let re = (&roots[i].z.re + &roots[j].z.re) / &two;
        let im = (&roots[i].z.im - &roots[j].z.im) / &two;
        let radius = roots[i].radius.clone().max(roots[j].radius.clone()) + gap / &two;
        roots[i] = Root { z: Complex::new(re.clone(), im.clone()), radius: radius.clone(), multiplicity: roots[i].multiplicity };
        roots[j] = Root { z: Complex::new(re, -im), radius, multiplicity: roots[j].multiplicity };
    }
}

fn radius_of(work: &Work, z: &Complex, degree: usize) -> Real {
    let (p, dp) = work.eval(z);
    let residual = p.abs() + work.eval_error(z);
    let floor = pow2(-(work.bits as isize), work.bits) * z.abs().max(real_from_f64(1.0, work.bits));
    if dp.is_zero() {
        return real_from_f64(f64::MAX, work.bits);
    }
    (residual * Real::from(degree as i64) / dp.abs()).max(floor)
}

fn roots_of_factor(g: &IntPoly, bits: usize, seed: u64, multiplicity: usize) -> Option<Vec<Root>> {
    let d = g.degree().unwrap();
    let work = Work::new(g, bits);
    let zs = if d == 1 {
        let re = -(&work.coeffs[0] / &work.coeffs[1]);
        vec![Complex::new(re, complex::zero(bits))]
    } else {
        aberth(g, bits, seed)?
    };
    let mut roots: Vec<Root> = zs.into_iter().map(|z| Root { radius: radius_of(&work, &z, d), z, multiplicity }).collect();
    pair_conjugates(&mut roots);
    Some(roots)
}

/// All roots of `f` at the default options with the given precision.
pub fn all_roots(f: &IntPoly, precision_bits: usize) -> Result<RootSet> {
    all_roots_with(f, &RootOptions { precision_bits, ..RootOptions::default() })
}

pub fn all_roots_with(f: &IntPoly, opts: &RootOptions) -> Result<RootSet> {
    let degree = f.degree().unwrap_or(0);
    if degree == 0 {
        return Err(Error::InvalidArgument("root finding needs positive degree".into()));
    }
    if degree > MAX_ROOT_DEGREE {
        return Err(Error::TooLarge { what: "root finding (degree)", n: degree, limit: MAX_ROOT_DEGREE });
    }
    if opts.precision_bits < 53 {
        return Err(Error::InvalidArgument(format!("precision must be at least 53 bits, got {}", opts.precision_bits)));
    }
    let factors: Vec<(IntPoly, usize)> = f
        .to_rat()
        .square_free_decomposition()
        .into_iter()
        .map(|(g, k): (RatPoly, usize)| (g.to_int_scaled(), k))
        .collect();
    let mut bits = opts.precision_bits;
    loop {
        let mut roots = Vec::with_capacity(degree);
        let mut ok = true;
        for (idx, (g, k)) in factors.iter().enumerate() {
            match roots_of_factor(g, bits, opts.seed.wrapping_add(idx as u64), *k) {
                Some(r) => roots.extend(r),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            roots.sort_by(|a, b| a.z.re.cmp(&b.z.re).then(a.z.im.cmp(&b.z.im)));
            return Ok(RootSet { degree, precision_bits: bits, roots });
        }
        if bits * 2 > opts.max_precision_bits {
            return Err(Error::NoConvergence { precision_bits: bits, iterations: MAX_ITERATIONS });
        }
        bits *= 2;
    }
}

#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct MaxRealPart {
    pub value: f64,
    pub witness: (f64, f64),
    pub radius: f64,
    /// Another root's real-part interval reaches the maximum's interval.
    pub ambiguous: bool,
}

pub fn max_real_part(rs: &RootSet) -> Option<MaxRealPart> {
    let best = rs.roots.iter().max_by(|a, b| a.z.re.cmp(&b.z.re).then(a.z.im.cmp(&b.z.im)))?;
    let lower = &best.z.re - &best.radius;
    let ambiguous = rs.roots.iter().any(|r| {
        let conjugate = r.z.re == best.z.re && r.z.im == -&best.z.im;
        !std::ptr::eq(r, best) && !conjugate && &r.z.re + &r.radius >= lower
    });
    Some(MaxRealPart { value: best.re(), witness: (best.re(), best.im()), radius: best.radius_f64(), ambiguous })
}

#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct RealClassification {
    /// Indices into `roots`.
    pub real: Vec<usize>,
    pub non_real: Vec<usize>,
    /// Every non-real root has a conjugate partner within the radii.
    pub conjugates_paired: bool,
}

impl RealClassification {
    pub fn real_count_with_multiplicity(&self, rs: &RootSet) -> usize {
        self.real.iter().map(|&i| rs.roots[i].multiplicity).sum()
    }
}

pub fn classify_real(rs: &RootSet, tol: f64) -> RealClassification {
    let mut real = Vec::new();
    let mut non_real = Vec::new();
    for (i, r) in rs.roots.iter().enumerate() {
        if r.im().abs() <= tol.max(r.radius_f64()) {
            real.push(i);
        } else {
            non_real.push(i);
        }
    }
    let conjugates_paired = non_real.iter().all(|&i| {
        let a = &rs.roots[i];
        non_real.iter().any(|&j| {
            let b = &rs.roots[j];
            let slack = a.radius_f64() + b.radius_f64() + tol;
            j != i && a.multiplicity == b.multiplicity && (a.re() - b.re()).abs() <= slack && (a.im() + b.im()).abs() <= slack
        })
    });
    RealClassification { real, non_real, conjugates_paired }
}

#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct BrownCheck {
    /// Cyclomatic number `m - n + c`; equals `m - n + 1` for connected graphs.
    pub bound: i64,
    /// Largest `|z - 1| - radius` over the nonzero roots.
    pub max_distance: f64,
    pub holds: bool,
}

/// Nonzero roots satisfy `|z - 1| <= m - n + c`, with slack equal to each
/// root's radius.
pub fn brown_bound_check(g: &Graph, rs: &RootSet) -> BrownCheck {
    let bound = g.size() as i64 - g.order() as i64 + g.components().len() as i64;
    let mut max_distance = f64::NEG_INFINITY;
    let mut holds = true;
    for r in &rs.roots {
        if r.z.abs() <= r.radius {
            continue;
        }
        let shifted = Complex::new(&r.z.re - Real::from(1), r.z.im.clone());
        let slack_dist = shifted.abs() - &r.radius;
        max_distance = max_distance.max(to_f64(&slack_dist));
        if slack_dist > Real::from(bound) {
            holds = false;
        }
    }
    BrownCheck { bound, max_distance, holds }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn triangle_roots() {
        let rs = all_roots(&p(&[0, 2, -3, 1]), 256).unwrap();
        let re: Vec<f64> = rs.roots.iter().map(Root::re).collect();
        assert_eq!(rs.roots.len(), 3);
        for (got, want) in re.iter().zip([0.0, 1.0, 2.0]) {
            assert!(close(*got, want, 1e-12));
        }
        assert!(rs.roots.iter().all(|r| r.radius_f64() <= 1e-12));
    }

    #[test]
    fn c4_roots() {
        let rs = all_roots(&p(&[0, -3, 6, -4, 1]), 256).unwrap();
        let c = classify_real(&rs, DEFAULT_REAL_TOL);
        assert_eq!((c.real.len(), c.non_real.len()), (2, 2));
        assert!(c.conjugates_paired);
        let m = max_real_part(&rs).unwrap();
        assert!(close(m.value, 1.5, 1e-15));
        assert!(close(m.witness.1.abs(), 3f64.sqrt() / 2.0, 1e-15));
        let b = brown_bound_check(&Graph::cycle(4).unwrap(), &rs);
        assert!(b.holds && b.bound == 1);
    }

    #[test]
    fn imaginary_unit_and_multiplicity() {
        let rs = all_roots(&p(&[1, 0, 1]), 128).unwrap();
        let ims: Vec<f64> = rs.roots.iter().map(Root::im).collect();
        assert!(close(ims[0], -1.0, 1e-30) && close(ims[1], 1.0, 1e-30));
        // x (x-1)(x-2)^2
        let rs = all_roots(&p(&[0, -4, 8, -5, 1]), 128).unwrap();
        assert_eq!(rs.count_with_multiplicity(), 4);
        let m = max_real_part(&rs).unwrap();
        assert!(close(m.value, 2.0, 1e-30));
        assert_eq!(rs.roots.last().unwrap().multiplicity, 2);
    }

    #[test]
    fn deterministic_json() {
        let f = p(&[0, -3, 6, -4, 1]);
        let a = serde_json::to_string(&all_roots(&f, 128).unwrap()).unwrap();
        let b = serde_json::to_string(&all_roots(&f, 128).unwrap()).unwrap();
        assert_eq!(a, b);
        assert!(a.contains("\"precision_bits\":128"));
    }

    #[test]
    fn brown_excludes_zero_and_uses_components() {
        let g = Graph::path(4).unwrap();
        let rs = all_roots(&p(&[0, -1, 3, -3, 1]), 128).unwrap();
        assert!(brown_bound_check(&g, &rs).holds);
        let k4 = Graph::complete(4).unwrap();
        let rs = all_roots(&p(&[0, -6, 11, -6, 1]), 128).unwrap();
        let b = brown_bound_check(&k4, &rs);
        assert!(b.holds && b.bound == 3);
    }

    #[test]
    fn argument_checks() {
        assert!(all_roots(&p(&[3]), 256).is_err());
        assert!(all_roots(&p(&[1, 1]), 32).is_err());
    }
}
