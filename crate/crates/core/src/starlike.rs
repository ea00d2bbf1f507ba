//! Starlike-univalence testing on the unit disk, by reduction to cone
//! membership.
//!
//! A polynomial P with P(0) = 0 is starlike univalent iff P(z)/z has no
//! roots in the open disk and `Re(z·P′(z)/P(z)) ≥ 0` there, which on the
//! boundary becomes nonnegativity of the trigonometric polynomial
//! `Re(e^{it}·P′(e^{it})·conj(P(e^{it}))) = |P|²·Re(zP′/P)`.
//!
//! That boundary polynomial is the Laurent fold of `z^{1−n}·P′(z)·P*(z)`,
//! the value-conjugate form of the circle product. The coefficient-conjugate
//! variant `P′(z)·conj-P(z)/z` fails on the extremal starlike case
//! P = z + z²/2 (its fold is 1 + (3/2)cos t + (1/2)cos 2t, negative near
//! t = 2π/3), so the value-conjugate reading is the one implemented.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::cone::{self, Classification, ConeVerdict, CIRCLE_TOL};
use crate::poly::ComplexPoly;
use crate::quadmap::TrigPoly;
use crate::roots;
use crate::scalar::{Scalar, C64};
use crate::{Error, Result};

/// Starlikeness verdict with its witnesses: inner roots of P/z and the cone
/// classification of the folded boundary polynomial.
#[derive(Clone, Debug)]
pub struct StarlikeReport<T> {
    pub is_starlike: bool,
    /// Roots of P(z)/z strictly inside the unit disk (each listed once per
    /// multiplicity copy).
    pub inner_roots: Vec<C64>,
    /// The folded boundary polynomial of degree n−1.
    pub trig: TrigPoly<T>,
    pub cone_verdict: ConeVerdict<T>,
}

/// The boundary trigonometric polynomial: the degree-(n−1) fold of
/// `L(z) = z^{1−n}·P′(z)·P*(z)`, with `eval_t(result, t) =
/// Re(e^{it}·P′(e^{it})·conj(P(e^{it})))` for all t.
///
/// Requires P(0) = 0 and effective degree ≥ 1; the fold is taken at the
/// effective degree.
pub fn boundary_trig<T: Scalar>(p: &ComplexPoly<T>) -> Result<TrigPoly<T>> {
    if !p.coeff(0).is_zero() {
        return Err(Error::Domain("starlike test needs P(0) = 0".to_string()));
    }
    let n = match p.effective_degree() {
        Some(n) if n >= 1 => n,
        _ => {
            return Err(Error::Domain(
                "starlike test needs effective degree at least 1".to_string(),
            ))
        }
    };
    let p_eff = p.redeclare(n).expect("trimming above the effective degree");
    // L has Laurent exponents 1−n … n−1; index j in the product ↔ exponent
    // j − (n−1)
    let product = p_eff.derivative().mul(&p_eff.reciprocal());
    let c = |j: i64| -> T {
        if j < 0 {
            T::zero()
        } else {
            product.coeff(j as usize)
        }
    };
    let mid = (n - 1) as i64;
    let two = T::from_int(2);
    let c0 = c(mid);
    let mut y = Vec::with_capacity(n);
    // real part of the center coefficient (it is real up to rounding)
    y.push((c0.clone() + c0.conj()) / two);
    for m in 1..n {
        y.push(c(mid + m as i64) + c(mid - m as i64).conj());
    }
    TrigPoly::new(y)
}

/// Full starlikeness test: no roots of P/z in the open disk, and the
/// boundary polynomial nonnegative (Boundary counts as starlike: the
/// condition is the closed one, Re ≥ 0).
pub fn is_starlike<T: Scalar>(p: &ComplexPoly<T>, tol: f64) -> Result<StarlikeReport<T>> {
    let trig = boundary_trig(p)?;
    let n = p.effective_degree().expect("checked by boundary_trig");
    // roots of P/z
    let q = ComplexPoly::new(p.coeffs()[1..=n].to_vec());
    let mut inner_roots = Vec::new();
    if q.effective_degree().is_some_and(|d| d >= 1) {
        for root in roots::all_roots(&q)?.roots {
            if root.location.norm() < 1.0 - CIRCLE_TOL {
                for _ in 0..root.multiplicity {
                    inner_roots.push(root.location);
                }
            }
        }
    }
    let cone_verdict = cone::classify(&trig, tol)?;
    let is_starlike =
        inner_roots.is_empty() && cone_verdict.classification != Classification::Outside;
    Ok(StarlikeReport {
        is_starlike,
        inner_roots,
        trig,
        cone_verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::DEFAULT_TOL;

    fn cp(cs: &[(f64, f64)]) -> ComplexPoly<C64> {
        ComplexPoly::new(cs.iter().map(|&(a, b)| C64::new(a, b)).collect())
    }

    #[test]
    fn identity_map_is_starlike() {
        let p = cp(&[(0.0, 0.0), (1.0, 0.0)]);
        let report = is_starlike(&p, DEFAULT_TOL).unwrap();
        assert!(report.is_starlike);
        assert!(report.inner_roots.is_empty());
        assert_eq!(report.trig.n(), 0);
        assert!((cone::eval_t(&report.trig, 0.3) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn extremal_half_coefficient() {
        // P = z + z²/2: boundary polynomial 3/2 + (3/2)cos t, zero at t = π
        let p = cp(&[(0.0, 0.0), (1.0, 0.0), (0.5, 0.0)]);
        let trig = boundary_trig(&p).unwrap();
        assert!((trig.y()[0].re - 1.5).abs() < 1e-15);
        assert!((trig.y()[1] - C64::new(1.5, 0.0)).norm() < 1e-15);
        let report = is_starlike(&p, DEFAULT_TOL).unwrap();
        assert!(report.is_starlike);
        assert_eq!(report.cone_verdict.classification, Classification::Boundary);
        assert!((report.cone_verdict.minimizer_t - core::f64::consts::PI).abs() < 1e-6);
    }

    #[test]
    fn beyond_half_is_not_starlike() {
        let p = cp(&[(0.0, 0.0), (1.0, 0.0), (0.6, 0.0)]);
        let report = is_starlike(&p, DEFAULT_TOL).unwrap();
        assert!(!report.is_starlike);
        assert_eq!(report.cone_verdict.classification, Classification::Outside);
        // inner-root criterion alone would pass: root of 1+0.6z is outside
        assert!(report.inner_roots.is_empty());
    }

    #[test]
    fn fold_matches_circle_values() {
        let p = cp(&[(0.0, 0.0), (0.4, -0.3), (0.2, 0.1), (-0.05, 0.3)]);
        let trig = boundary_trig(&p).unwrap();
        for k in 0..128 {
            let t = core::f64::consts::TAU * (k as f64) / 128.0;
            let w = C64::new(t.cos(), t.sin());
            let direct = (w * p.derivative().eval(&w) * p.eval(&w).conj()).re;
            let folded = cone::eval_t(&trig, t);
            assert!(
                (direct - folded).abs() <= 1e-12,
                "t = {t}: {direct} vs {folded}"
            );
        }
    }

    #[test]
    fn rotation_and_scaling_invariance() {
        // e^{-iθ}·P(e^{iθ}z) and c·P (c > 0) have the same verdict as P
        let rotate = |p: &ComplexPoly<C64>, theta: f64| -> ComplexPoly<C64> {
            ComplexPoly::new(
                p.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(k, c)| c * C64::from_polar(1.0, theta * (k as f64 - 1.0)))
                    .collect(),
            )
        };
        for (a, expect) in [(0.3, true), (0.7, false)] {
            let p = cp(&[(0.0, 0.0), (1.0, 0.0), (a, 0.0)]);
            assert_eq!(is_starlike(&p, DEFAULT_TOL).unwrap().is_starlike, expect);
            for theta in [0.9, 2.3] {
                let q = rotate(&p, theta);
                assert_eq!(
                    is_starlike(&q, DEFAULT_TOL).unwrap().is_starlike,
                    expect,
                    "rotation by {theta} changed the verdict at a = {a}"
                );
            }
            let scaled = p.scale(&C64::new(2.5, 0.0));
            assert_eq!(
                is_starlike(&scaled, DEFAULT_TOL).unwrap().is_starlike,
                expect
            );
        }
    }

    #[test]
    fn rejects_nonvanishing_origin() {
        let p = cp(&[(1.0, 0.0), (1.0, 0.0)]);
        assert!(matches!(boundary_trig(&p), Err(Error::Domain(_))));
    }

    #[test]
    fn inner_root_disqualifies() {
        // P = z(z − 0.5)·(−2) = z² ·(−2)... use P = −2z(z−0.5) = z − 2z²
        // P/z has root 0.5 inside the disk
        let p = cp(&[(0.0, 0.0), (1.0, 0.0), (-2.0, 0.0)]);
        let report = is_starlike(&p, DEFAULT_TOL).unwrap();
        assert!(!report.is_starlike);
        assert_eq!(report.inner_roots.len(), 1);
        assert!((report.inner_roots[0] - C64::new(0.5, 0.0)).norm() < 1e-12);
    }
}
