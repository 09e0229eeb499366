use serde::{Deserialize, Serialize};

use super::sturm::{has_all_real_roots, Interval, RootCounter};
use super::RatPoly;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InterlaceKind {
    /// `deg g = deg f + 1`, `θ_1 <= ζ_1 <= θ_2 <= ... <= θ_{a+1}`.
    Interlaces,
    /// `deg f = deg g`, `ζ_1 <= θ_1 <= ζ_2 <= ... <= θ_a`.
    AlternatesLeft,
    /// One side is identically zero.
    Trivial,
}

/// Outcome of testing `f ≺ g`, with the isolating intervals that justify it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interlacing {
    pub holds: bool,
    pub kind: Option<InterlaceKind>,
    /// Monic gcd cancelled before comparing roots.
    pub common_factor: RatPoly,
    /// Pairwise-disjoint isolating intervals of the reduced `f` and `g`.
    pub f_intervals: Vec<Interval>,
    pub g_intervals: Vec<Interval>,
    pub reason: Option<String>,
}

impl Interlacing {
    fn fail(common: RatPoly, reason: impl Into<String>) -> Self {
        Interlacing {
            holds: false,
            kind: None,
            common_factor: common,
            f_intervals: Vec::new(),
            g_intervals: Vec::new(),
            reason: Some(reason.into()),
        }
    }
}

fn check_real_rooted(p: &RatPoly, which: &'static str) -> Result<()> {
    if !p.is_standard() {
        return Err(Error::NonStandard);
    }
    if p.degree().is_some_and(|d| d >= 1) && !has_all_real_roots(p)?.all_real {
        return Err(Error::NotRealRooted { which });
    }
    Ok(())
}

/// Separates the isolating intervals of two coprime polynomials.
fn separate(fc: &RootCounter, gc: &RootCounter) -> (Vec<Interval>, Vec<Interval>) {
    let mut fi = fc.isolate();
    let mut gi = gc.isolate();
    loop {
        let mut clash = false;
        for a in fi.iter_mut() {
            for b in gi.iter_mut() {
                if a.overlaps(b) {
                    clash = true;
                    *a = fc.bisect(a);
                    *b = gc.bisect(b);
                }
            }
        }
        if !clash {
            return (fi, gi);
        }
    }
}

/// Decides `f ≺ g` for standard, real-rooted `f` and `g`.
pub fn interlaces(f: &RatPoly, g: &RatPoly) -> Result<Interlacing> {
    check_real_rooted(f, "f")?;
    check_real_rooted(g, "g")?;
    if f.is_zero() || g.is_zero() {
        return Ok(Interlacing {
            holds: true,
            kind: Some(InterlaceKind::Trivial),
            common_factor: RatPoly::one(),
            f_intervals: Vec::new(),
            g_intervals: Vec::new(),
            reason: None,
        });
    }
    let common = f.gcd(g);
    let f1 = f.div_exact(&common);
    let g1 = g.div_exact(&common);
    let (df, dg) = (f1.degree().unwrap(), g1.degree().unwrap());
    let kind = if dg == df + 1 {
        InterlaceKind::Interlaces
    } else if df == dg {
        InterlaceKind::AlternatesLeft
    } else {
        return Ok(Interlacing::fail(common, format!("degree mismatch: deg f = {df}, deg g = {dg}")));
    };
    let fc = RootCounter::new(&f1);
    let gc = RootCounter::new(&g1);
    if fc.square_free().degree() != Some(df) {
        return Ok(Interlacing::fail(common, "f has a repeated root not shared with g"));
    }
    if gc.square_free().degree() != Some(dg) {
        return Ok(Interlacing::fail(common, "g has a repeated root not shared with f"));
    }
    let (fi, gi) = separate(&fc, &gc);
    // merge by position; disjoint intervals order their roots
    let mut merged: Vec<(bool, &Interval)> = fi.iter().map(|iv| (true, iv)).chain(gi.iter().map(|iv| (false, iv))).collect();
    merged.sort_by(|a, b| a.1.lo.cmp(&b.1.lo));
    let pattern_ok = merged.iter().enumerate().all(|(i, &(is_f, _))| match kind {
        // g first: positions 0, 2, 4, ... hold roots of g
        InterlaceKind::Interlaces => is_f == (i % 2 == 1),
        // f first
        _ => is_f == (i % 2 == 0),
    });
    Ok(Interlacing {
        holds: pattern_ok,
        kind: pattern_ok.then_some(kind),
        common_factor: common,
        f_intervals: fi,
        g_intervals: gi,
        reason: (!pattern_ok).then(|| "roots do not alternate".to_string()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn rp(c: &[i64]) -> RatPoly {
        RatPoly::from_i64s(c)
    }

    #[test]
    fn documented_examples() {
        // t+2 vs (t+1)(t+3)
        let r = interlaces(&rp(&[2, 1]), &rp(&[3, 4, 1])).unwrap();
        assert!(r.holds);
        assert_eq!(r.kind, Some(InterlaceKind::Interlaces));
        let r = interlaces(&rp(&[3, 1]), &rp(&[2, 1])).unwrap();
        assert!(r.holds);
        assert_eq!(r.kind, Some(InterlaceKind::AlternatesLeft));
        assert!(!interlaces(&rp(&[1, 1]), &rp(&[2, 1])).unwrap().holds);
    }

    #[test]
    fn shared_roots_are_cancelled() {
        // f = (t+1)(t+2), g = (t+1)(t+3)(t+5): reduced t+2 vs (t+3)(t+5) fails
        let f = &rp(&[1, 1]) * &rp(&[2, 1]);
        let g = &(&rp(&[1, 1]) * &rp(&[3, 1])) * &rp(&[5, 1]);
        assert!(!interlaces(&f, &g).unwrap().holds);
        // f = (t+1)(t+4), g = (t+1)(t+3)(t+5)
        let f = &rp(&[1, 1]) * &rp(&[4, 1]);
        let r = interlaces(&f, &g).unwrap();
        assert!(r.holds);
        assert_eq!(r.common_factor, rp(&[1, 1]));
    }

    #[test]
    fn repeated_unshared_root_fails() {
        let f = &rp(&[2, 1]) * &rp(&[2, 1]);
        let g = &rp(&[1, 1]) * &rp(&[3, 1]);
        assert!(!interlaces(&f, &g).unwrap().holds);
    }

    #[test]
    fn non_real_rooted_input_is_reported() {
        assert_eq!(interlaces(&rp(&[1, 0, 1]), &rp(&[1, 1])).unwrap_err(), Error::NotRealRooted { which: "f" });
        assert_eq!(interlaces(&rp(&[1, 1]), &rp(&[1, 0, 1])).unwrap_err(), Error::NotRealRooted { which: "g" });
    }

    #[test]
    fn invariant_under_positive_scaling() {
        let f = rp(&[2, 1]);
        let g = rp(&[3, 4, 1]);
        let k = BigRational::new(BigInt::from(7), BigInt::from(3));
        assert!(interlaces(&f.scale(&k), &g).unwrap().holds);
        assert!(interlaces(&f, &g.scale(&k)).unwrap().holds);
    }
}
