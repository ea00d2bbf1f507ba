//! Membership, boundary certification, and Fejér–Riesz factorization for the
//! cone of nonnegative trigonometric polynomials.
//!
//! Classification is numeric (certified critical-point minimization with a
//! brute-force grid cross-check); certificates are algebraic: the Dis₂ value
//! locates boundary points on the discriminant hypersurface, and the rank
//! certificate `x0·V(X) ≠ 0` witnesses interior points.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::elim;
use crate::poly::ComplexPoly;
use crate::quadmap::{self, SpectralFactor, TrigPoly};
use crate::roots::{self, Root};
use crate::scalar::{Scalar, C64};
use crate::{Error, Result};

/// Relative threshold separating Inside/Boundary/Outside.
pub const DEFAULT_TOL: f64 = 1e-9;
/// Distance from |z| = 1 within which a root counts as a circle root.
pub const CIRCLE_TOL: f64 = 1e-7;
/// Base tolerance for pairing a root with its reflection; scaled by
/// max(1, |z|²) because reflection error grows like |z|².
pub const PAIR_TOL: f64 = 1e-7;
/// Uniform grid size for the cross-check of the certified minimum.
pub const GRID_POINTS: usize = 4096;
/// Allowed discrepancy (relative to the coefficient scale) between the
/// critical-point minimum and the grid minimum.
pub const CONSISTENCY_TOL: f64 = 1e-6;
/// Relative threshold on |V(X)| for the full-rank certificate.
pub const RANK_TOL: f64 = 1e-9;
/// Acceptance band for reflection-split circle multiples: a double root of
/// the lift on the circle splits under coefficient noise into a reflection
/// pair as far as sqrt(noise) apart, well beyond `PAIR_TOL`.
pub const SPLIT_TOL: f64 = 1e-4;

/// Cone membership of a coefficient vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    Inside,
    Boundary,
    Outside,
}

/// Classification outcome with its numeric and algebraic certificates.
#[derive(Clone, Debug)]
pub struct ConeVerdict<T> {
    pub classification: Classification,
    /// Certified global minimum of T.
    pub min_value: f64,
    /// An angle in [0, 2π) attaining the minimum.
    pub minimizer_t: f64,
    /// Dis₂(Y); `None` when y_n = 0 (the form degenerates off its chart).
    pub dis2_value: Option<T>,
    /// True iff x0·V(X) ≠ 0 for the computed factor (full-rank witness;
    /// interior points and only they admit one).
    pub rank_certificate: bool,
    /// Spectral factor, present for Inside/Boundary verdicts.
    pub factor: Option<SpectralFactor<C64>>,
}

/// Critical angles of T with their values; their minimum is the certified
/// global minimum of T.
#[derive(Clone, Debug, PartialEq)]
pub struct CriticalSet {
    pub angles: Vec<f64>,
    pub values: Vec<f64>,
}

impl CriticalSet {
    /// (min value, attaining angle).
    pub fn min(&self) -> (f64, f64) {
        let mut best = (f64::INFINITY, 0.0);
        for (&v, &t) in self.values.iter().zip(self.angles.iter()) {
            if v < best.0 {
                best = (v, t);
            }
        }
        best
    }
}

/// The lift `R = Y* + z^n·Y`: degree 2n, coefficient conj(y_{n−k}) at index
/// k < n, 2·y0 at index n, y_m at index n+m. Self-inversive by construction.
pub fn lift<T: Scalar>(y: &TrigPoly<T>) -> ComplexPoly<T> {
    let n = y.n();
    let ys = y.y();
    let mut coeffs = Vec::with_capacity(2 * n + 1);
    for k in 0..n {
        coeffs.push(ys[n - k].conj());
    }
    coeffs.push(ys[0].clone() * T::from_int(2));
    coeffs.extend(ys[1..].iter().cloned());
    ComplexPoly::new(coeffs)
}

/// `T(t) = y0 + Σ Re(y_m e^{imt})`; satisfies `R(e^{it}) = 2 e^{int} T(t)`
/// for the lift R.
pub fn eval_t<T: Scalar>(y: &TrigPoly<T>, t: f64) -> f64 {
    eval_t_c64(&y.to_c64_trig(), t)
}

fn wrap_angle(t: f64) -> f64 {
    let u = t % core::f64::consts::TAU;
    if u < 0.0 {
        u + core::f64::consts::TAU
    } else {
        u
    }
}

fn eval_t_c64(y: &TrigPoly<C64>, t: f64) -> f64 {
    let w = C64::new(t.cos(), t.sin());
    let mut pw = C64::new(1.0, 0.0);
    let mut acc = y.y()[0].re;
    for ym in &y.y()[1..] {
        pw *= w;
        acc += (ym * pw).re;
    }
    acc
}

/// T′(t) and T″(t).
fn eval_t_derivs(y: &TrigPoly<C64>, t: f64) -> (f64, f64) {
    let w = C64::new(t.cos(), t.sin());
    let mut pw = C64::new(1.0, 0.0);
    let mut d1 = 0.0;
    let mut d2 = 0.0;
    for (m, ym) in y.y().iter().enumerate().skip(1) {
        pw *= w;
        let term = ym * pw;
        d1 -= (m as f64) * term.im;
        d2 -= (m as f64) * (m as f64) * term.re;
    }
    (d1, d2)
}

/// Certified minimization of T.
///
/// Critical points of T are the unit-circle roots of `S(z) = z·R′(z) − n·R(z)`
/// (coefficientwise, `S_k = (k−n)·R_k`), since `dT/dt ∝ e^{−int}·S(e^{it})`
/// on the circle. Each circle root is refined by Newton iteration on T′ and
/// evaluated; the result is cross-checked against a uniform grid, and a
/// critical minimum above the grid minimum beyond tolerance is an error.
pub fn minimize_t<T: Scalar>(y: &TrigPoly<T>) -> Result<CriticalSet> {
    if y.is_zero_poly() {
        return Err(Error::DegenerateInput(
            "zero trigonometric polynomial".to_string(),
        ));
    }
    let yf = y.to_c64_trig();
    let n = yf.n();
    if yf.y()[1..].iter().all(|c| c.norm() == 0.0) {
        // constant T
        return Ok(CriticalSet {
            angles: vec![0.0],
            values: vec![yf.y()[0].re],
        });
    }
    let r = lift(&yf);
    let s = ComplexPoly::new(
        r.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| c * (k as f64 - n as f64))
            .collect(),
    );
    let rs = roots::all_roots(&s)?;
    let deriv_scale: f64 = yf
        .y()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(m, c)| m as f64 * c.norm())
        .sum();
    let mut angles = Vec::new();
    let mut values = Vec::new();
    for root in &rs.roots {
        if (root.location.norm() - 1.0).abs() > CIRCLE_TOL {
            continue;
        }
        let mut t = wrap_angle(root.location.arg());
        for _ in 0..12 {
            let (d1, d2) = eval_t_derivs(&yf, t);
            if d1.abs() <= 1e-15 * deriv_scale || d2.abs() <= 1e-300 {
                break;
            }
            let step = d1 / d2;
            if !step.is_finite() || step.abs() > 0.5 {
                break;
            }
            t -= step;
        }
        t = wrap_angle(t);
        angles.push(t);
        values.push(eval_t_c64(&yf, t));
    }

    // brute-force cross-check on the uniform grid
    let mut grid_min = f64::INFINITY;
    for k in 0..GRID_POINTS {
        let t = core::f64::consts::TAU * (k as f64) / (GRID_POINTS as f64);
        let v = eval_t_c64(&yf, t);
        if v < grid_min {
            grid_min = v;
        }
    }
    let crit_min = values.iter().cloned().fold(f64::INFINITY, f64::min);
    let scale = yf.coeff_scale();
    if crit_min > grid_min + CONSISTENCY_TOL * scale {
        return Err(Error::Inconsistent(format!(
            "critical-point minimum {crit_min} misses the grid minimum {grid_min}"
        )));
    }
    Ok(CriticalSet { angles, values })
}

/// Membership classification with certificates attached.
///
/// Inside iff min T > tol·scale(Y); Outside iff min T < −tol·scale(Y);
/// Boundary otherwise, with scale(Y) the largest coefficient magnitude.
/// Boundary points satisfy Dis₂(Y) = 0 (the boundary lies in that
/// hypersurface); Inside/Outside verdicts make no claim about the sign of
/// Dis₂, whose zero set also meets the cone's exterior.
pub fn classify<T: Scalar>(y: &TrigPoly<T>, tol: f64) -> Result<ConeVerdict<T>> {
    let critical = minimize_t(y)?;
    let (min_value, minimizer_t) = critical.min();
    let scale = y.coeff_scale();
    let classification = if min_value > tol * scale {
        Classification::Inside
    } else if min_value < -tol * scale {
        Classification::Outside
    } else {
        Classification::Boundary
    };
    let n = y.n();
    let dis2_value = if n >= 1 && !y.y()[n].is_zero() {
        Some(elim::dis2(y)?)
    } else {
        None
    };
    let (factor, rank_certificate) = if classification == Classification::Outside {
        (None, false)
    } else {
        let f = spectral_pairing(y, tol)?;
        let rank = rank_certificate(&f);
        (Some(f), rank)
    };
    Ok(ConeVerdict {
        classification,
        min_value,
        minimizer_t,
        dis2_value,
        rank_certificate,
        factor,
    })
}

/// Full-rank witness: x0 > 0 (by construction) and V(X) ≠ 0 numerically,
/// at the homogeneous scale of V.
fn rank_certificate(x: &SpectralFactor<C64>) -> bool {
    let p = x.poly();
    let n = p.formal_degree();
    let v = elim::mobius_discriminant(p);
    let norm_sq: f64 = p.coeffs().iter().map(|c| c.norm_sqr()).sum();
    let vscale = norm_sq.powi(n as i32).max(f64::MIN_POSITIVE);
    v.norm() > RANK_TOL * vscale
}

/// Fejér–Riesz factorization: the outer spectral factor X with
/// `½|X(e^{it})|² = T(t)`, x0 > 0 and no roots in the open unit disk.
///
/// Requires Y to classify Inside or Boundary (checked through the certified
/// minimum before pairing).
pub fn factor<T: Scalar>(y: &TrigPoly<T>, tol: f64) -> Result<SpectralFactor<C64>> {
    if y.is_zero_poly() {
        return Err(Error::DegenerateInput(
            "zero trigonometric polynomial has no spectral factor".to_string(),
        ));
    }
    let critical = minimize_t(y)?;
    let (min_value, _) = critical.min();
    if min_value < -tol * y.coeff_scale() {
        return Err(Error::Precondition(format!(
            "T attains {min_value} < 0; only nonnegative polynomials factor"
        )));
    }
    spectral_pairing(y, tol)
}

/// Root-pairing engine behind [`factor`] and [`classify`].
///
/// Roots of the lift come in reflection pairs (z, 1/conj z); unit-circle
/// roots must have even multiplicity and contribute half. The factor keeps
/// the representative with |z| ≥ 1 from each pair. A vanishing y_n drops
/// the lift's degree; the missing pairs are (0, ∞) and X simply has smaller
/// effective degree.
fn spectral_pairing<T: Scalar>(y: &TrigPoly<T>, _tol: f64) -> Result<SpectralFactor<C64>> {
    let n = y.n();
    let eff_n = y
        .effective_n()
        .ok_or_else(|| Error::DegenerateInput("zero trigonometric polynomial".to_string()))?;
    let yf = y.to_c64_trig();
    let y0 = yf.y()[0].re;
    if eff_n == 0 {
        if y0 <= 0.0 {
            return Err(Error::NotNonnegative(
                "constant polynomial with nonpositive value".to_string(),
            ));
        }
        let mut coeffs = vec![C64::new((2.0 * y0).sqrt(), 0.0)];
        coeffs.resize(n + 1, C64::new(0.0, 0.0));
        return SpectralFactor::new(ComplexPoly::new(coeffs));
    }
    let y_eff = TrigPoly::new(yf.y()[..=eff_n].to_vec()).expect("y0 stays real");
    let r = lift(&y_eff);
    let rs = roots::all_roots(&r)?;

    let mut circle: Vec<Root> = Vec::new();
    let mut outside: Vec<Root> = Vec::new();
    let mut inside: Vec<Root> = Vec::new();
    for root in &rs.roots {
        let d = root.location.norm() - 1.0;
        if d.abs() <= CIRCLE_TOL {
            circle.push(*root);
        } else if d > 0.0 {
            outside.push(*root);
        } else {
            inside.push(*root);
        }
    }

    let mut selected: Vec<C64> = Vec::new();
    let mut odd_circle: Vec<Root> = Vec::new();
    for root in &circle {
        // the true root is unimodular; project the cluster onto the circle
        let loc = root.location / root.location.norm();
        for _ in 0..root.multiplicity / 2 {
            selected.push(loc);
        }
        if root.multiplicity % 2 != 0 {
            odd_circle.push(Root {
                location: loc,
                multiplicity: 1,
            });
        }
    }

    // strict reflection pairing
    let mut unmatched_out: Vec<Root> = Vec::new();
    let mut pool: Vec<Root> = inside;
    for root in &outside {
        let w = roots::reflect(root.location)?;
        let accept = PAIR_TOL * root.location.norm_sqr().max(1.0);
        let best = pool
            .iter()
            .enumerate()
            .min_by(|a, b| {
                (a.1.location - w)
                    .norm()
                    .total_cmp(&(b.1.location - w).norm())
            })
            .map(|(i, r)| (i, (r.location - w).norm(), r.multiplicity));
        match best {
            Some((i, dist, mult)) if dist <= accept && mult == root.multiplicity => {
                pool.swap_remove(i);
                for _ in 0..root.multiplicity {
                    selected.push(root.location);
                }
            }
            _ => unmatched_out.push(*root),
        }
    }

    // Leftovers are reflection-split circle multiples: the lift is exactly
    // self-inversive, so a double root on the circle splits under
    // coefficient noise into a reflection pair as far as sqrt(noise) apart
    // (possibly straddling the circle band, which is where odd-looking
    // circle clusters come from). Resolve them pairwise and project each
    // resolved pair onto the circle.
    let mut leftovers: Vec<Root> = Vec::new();
    leftovers.extend(unmatched_out);
    leftovers.append(&mut pool);
    leftovers.extend(odd_circle.iter().copied());
    leftovers.sort_by(|a, b| {
        (a.location.re, a.location.im)
            .partial_cmp(&(b.location.re, b.location.im))
            .unwrap_or(core::cmp::Ordering::Equal)
    });
    while let Some(current) = leftovers.pop() {
        let target = roots::reflect(current.location)?;
        let best = leftovers
            .iter()
            .enumerate()
            .min_by(|a, b| {
                (a.1.location - target)
                    .norm()
                    .total_cmp(&(b.1.location - target).norm())
            })
            .map(|(i, r)| (i, (r.location - target).norm(), r.multiplicity));
        match best {
            Some((i, dist, mult)) if dist <= SPLIT_TOL && mult == current.multiplicity => {
                let partner = leftovers.swap_remove(i);
                let mid = (current.location + partner.location) / 2.0;
                let loc = if mid.norm() == 0.0 {
                    current.location / current.location.norm()
                } else {
                    mid / mid.norm()
                };
                for _ in 0..current.multiplicity {
                    selected.push(loc);
                }
            }
            _ => {
                return Err(if (current.location.norm() - 1.0).abs() <= CIRCLE_TOL {
                    Error::NotNonnegative(format!(
                        "unit-circle root {} has odd multiplicity",
                        current.location
                    ))
                } else {
                    Error::Pairing(format!(
                        "no reflection partner for root {} within tolerance",
                        current.location
                    ))
                })
            }
        }
    }
    if selected.len() != eff_n {
        return Err(Error::Pairing(format!(
            "selected {} roots for a factor of degree {eff_n}",
            selected.len()
        )));
    }

    // X = c·U with U monic over the selected roots; R = |c|²·U·U* fixes |c|,
    // and x0 > 0 fixes the phase of c.
    let u = ComplexPoly::from_roots(C64::new(1.0, 0.0), &selected);
    let uus = u.mul(&u.reciprocal());
    let k_best = (0..uus.coeffs().len())
        .max_by(|&a, &b| uus.coeff(a).norm().total_cmp(&uus.coeff(b).norm()))
        .expect("nonempty");
    let ratio = r.coeff(k_best) / uus.coeff(k_best);
    let ratio_ok = ratio.re.is_finite() && ratio.re > 0.0 && ratio.im.abs() <= 1e-6 * ratio.re;
    if !ratio_ok {
        return Err(Error::Pairing(format!(
            "lift is not a positive multiple of U·U* (ratio {ratio})"
        )));
    }
    let c_mag = ratio.re.sqrt();
    let u0 = u.coeff(0);
    let u0_norm = u0.norm();
    let c = if u0_norm == 0.0 {
        // unreachable: the lift has nonzero constant coefficient
        C64::new(c_mag, 0.0)
    } else {
        C64::new(c_mag, 0.0) * u0.conj() / u0_norm
    };
    let mut coeffs: Vec<C64> = u.coeffs().iter().map(|a| a * c).collect();
    coeffs[0] = C64::new(c_mag * u0_norm, 0.0);
    coeffs.resize(n + 1, C64::new(0.0, 0.0));
    let x = SpectralFactor::new(ComplexPoly::new(coeffs))?;

    // roundtrip guard: Φ(X) must reproduce Y
    let back = quadmap::phi(&x);
    let scale = y.coeff_scale();
    for (a, b) in back.y().iter().zip(yf.y().iter()) {
        if (a - b).norm() > 1e-6 * scale {
            return Err(Error::Pairing(format!(
                "factor roundtrip residual {} exceeds tolerance",
                (a - b).norm()
            )));
        }
    }
    Ok(x)
}
