//! Simultaneous numerical root finding with multiplicity clustering.
//!
//! The solver runs Aberth–Ehrlich iteration from a fixed, input-determined
//! starting configuration, polishes with Newton steps, and clusters nearby
//! approximations into multiple roots. Identical input yields identical
//! output regardless of threading: the whole pipeline is sequential and free
//! of global state.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::poly::ComplexPoly;
use crate::scalar::{Scalar, C64};
use crate::{Error, Result};

/// Iteration cap; desk-scale degrees settle far earlier.
pub const MAX_ITERS: u32 = 200;
/// Relative simultaneous-correction norm for convergence.
pub const CORRECTION_TOL: f64 = 1e-14;
/// Relative pairwise distance below which approximations merge into one
/// root of higher multiplicity.
pub const CLUSTER_TOL: f64 = 1e-7;

/// A root location with its cluster multiplicity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Root {
    pub location: C64,
    pub multiplicity: usize,
}

/// All finite roots of a polynomial, clustered by multiplicity.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSet {
    pub roots: Vec<Root>,
    /// max |P(root)| / max |coefficient| over the returned locations.
    pub residual_bound: f64,
    /// Leading zero coefficients stripped before iteration (formal-degree
    /// inputs with vanishing top coefficients).
    pub roots_at_infinity: usize,
}

impl RootSet {
    /// Sum of multiplicities (the effective degree of the source).
    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    /// Root locations repeated by multiplicity.
    pub fn expanded(&self) -> Vec<C64> {
        let mut out = Vec::with_capacity(self.total_multiplicity());
        for r in &self.roots {
            for _ in 0..r.multiplicity {
                out.push(r.location);
            }
        }
        out
    }
}

/// Unit-circle reflection `z ↦ 1/conj(z)`; an involution fixing exactly the
/// unit circle.
pub fn reflect(z: C64) -> Result<C64> {
    if z == C64::new(0.0, 0.0) {
        return Err(Error::Domain(
            "cannot reflect 0 in the unit circle".to_string(),
        ));
    }
    Ok(C64::new(1.0, 0.0) / z.conj())
}

/// All roots of `P`, with multiplicities, by Aberth–Ehrlich iteration.
///
/// Requires effective degree ≥ 1. Deterministic: initialization is a fixed
/// circle configuration scaled by a coefficient bound.
pub fn all_roots<T: Scalar>(p: &ComplexPoly<T>) -> Result<RootSet> {
    let coeffs: Vec<C64> = p.coeffs().iter().map(Scalar::to_c64).collect();
    if coeffs
        .iter()
        .any(|c| !c.re.is_finite() || !c.im.is_finite())
    {
        return Err(Error::NonFinite("polynomial coefficient".to_string()));
    }
    all_roots_c64(&coeffs)
}

fn all_roots_c64(coeffs: &[C64]) -> Result<RootSet> {
    let zero = C64::new(0.0, 0.0);
    // strip formal padding above the effective degree
    let eff = match coeffs.iter().rposition(|c| *c != zero) {
        Some(d) => d,
        None => {
            return Err(Error::DegenerateInput(
                "zero polynomial has no well-defined roots".to_string(),
            ))
        }
    };
    let roots_at_infinity = coeffs.len() - 1 - eff;
    if eff == 0 {
        return Err(Error::DegenerateInput(
            "constant polynomial has no roots".to_string(),
        ));
    }
    let work = &coeffs[..=eff];

    // deflate exact zero roots: z^k · Q with Q(0) ≠ 0
    let zero_mult = work.iter().position(|c| *c != zero).unwrap_or(0);
    let deflated = &work[zero_mult..];

    let max_coeff = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut approx: Vec<C64> = Vec::new();
    if deflated.len() > 1 {
        approx = aberth(deflated)?;
        newton_polish(deflated, &mut approx);
    }
    for _ in 0..zero_mult {
        approx.push(zero);
    }

    let mut clusters = cluster(&approx);
    polish_multiple(work, &mut clusters);
    let residual_bound = clusters
        .iter()
        .map(|r| eval_horner(work, r.location).0.norm())
        .fold(0.0, f64::max)
        / max_coeff;

    Ok(RootSet {
        roots: clusters,
        residual_bound,
        roots_at_infinity,
    })
}

/// P(z) and P′(z) in one Horner pass.
fn eval_horner(coeffs: &[C64], z: C64) -> (C64, C64) {
    let mut p = C64::new(0.0, 0.0);
    let mut dp = C64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Magnitude bound Σ|a_k||z|^k on the evaluation, for the rounding noise
/// floor: once |P(z)| is below ~eps times this, iterating further is noise.
fn eval_magnitude(coeffs: &[C64], z: C64) -> f64 {
    let r = z.norm();
    let mut acc = 0.0;
    for c in coeffs.iter().rev() {
        acc = acc * r + c.norm();
    }
    acc
}

#[allow(clippy::needless_range_loop)]
fn aberth(coeffs: &[C64]) -> Result<Vec<C64>> {
    let d = coeffs.len() - 1;
    let lead = coeffs[d];
    // Cauchy-style radius bound, fixed initial configuration on that circle
    let radius = 1.0
        + coeffs[..d]
            .iter()
            .map(|c| (c / lead).norm())
            .fold(0.0, f64::max);
    let mut z: Vec<C64> = (0..d)
        .map(|j| {
            let theta = core::f64::consts::TAU * (j as f64) / (d as f64) + 0.4;
            radius * C64::new(theta.cos(), theta.sin())
        })
        .collect();

    let noise = 4.0 * (d as f64) * f64::EPSILON;
    let mut settled = vec![false; d];
    for iter in 0..MAX_ITERS {
        let mut all_done = true;
        for i in 0..d {
            if settled[i] {
                continue;
            }
            let (p, dp) = eval_horner(coeffs, z[i]);
            if p.norm() <= noise * eval_magnitude(coeffs, z[i]) {
                settled[i] = true;
                continue;
            }
            let newton = if dp.norm() == 0.0 {
                // stationary point hit exactly; nudge off it
                let nudge = C64::new(1e-7, 1e-7) * (1.0 + z[i].norm());
                z[i] += nudge;
                all_done = false;
                continue;
            } else {
                p / dp
            };
            let mut repulsion = C64::new(0.0, 0.0);
            for (j, other) in z.iter().enumerate() {
                if j != i {
                    let diff = z[i] - other;
                    if diff.norm() > 0.0 {
                        repulsion += C64::new(1.0, 0.0) / diff;
                    }
                }
            }
            let denom = C64::new(1.0, 0.0) - newton * repulsion;
            let w = if denom.norm() == 0.0 {
                newton
            } else {
                newton / denom
            };
            if !w.re.is_finite() || !w.im.is_finite() {
                let nudge = C64::new(1e-7, -1e-7) * (1.0 + z[i].norm());
                z[i] += nudge;
                all_done = false;
                continue;
            }
            z[i] -= w;
            if w.norm() <= CORRECTION_TOL * (1.0 + z[i].norm()) {
                settled[i] = true;
            } else {
                all_done = false;
            }
        }
        if all_done {
            return Ok(z);
        }
        let _ = iter;
    }
    // accept anyway if every iterate already sits at the evaluation noise
    // floor (multiple roots stall the correction norm there)
    if z.iter().all(|&zi| {
        let (p, _) = eval_horner(coeffs, zi);
        p.norm() <= 8.0 * noise * eval_magnitude(coeffs, zi)
    }) {
        return Ok(z);
    }
    Err(Error::NonConvergence {
        iterations: MAX_ITERS,
        best: z,
    })
}

/// A cluster centroid of multiplicity m sits ~eps^{1/m} off the true root;
/// the true root is a *simple* root of the (m−1)th derivative, so a few
/// Newton steps there recover full accuracy.
fn polish_multiple(coeffs: &[C64], clusters: &mut [Root]) {
    let scale = clusters
        .iter()
        .map(|r| r.location.norm())
        .fold(1.0, f64::max);
    for root in clusters.iter_mut() {
        if root.multiplicity < 2 || root.location.norm() == 0.0 {
            continue;
        }
        let mut d: Vec<C64> = coeffs.to_vec();
        for _ in 0..root.multiplicity - 1 {
            d = derivative_coeffs(&d);
        }
        let mut best = root.location;
        let mut best_res = eval_horner(&d, best).0.norm();
        for _ in 0..4 {
            let (p, dp) = eval_horner(&d, best);
            if dp.norm() == 0.0 {
                break;
            }
            let cand = best - p / dp;
            let res = eval_horner(&d, cand).0.norm();
            if res < best_res {
                best = cand;
                best_res = res;
            } else {
                break;
            }
        }
        // never leave the cluster's neighborhood
        if (best - root.location).norm() <= 4.0 * CLUSTER_TOL * scale {
            root.location = best;
        }
    }
    clusters.sort_by(|a, b| {
        (a.location.re, a.location.im)
            .partial_cmp(&(b.location.re, b.location.im))
            .unwrap_or(core::cmp::Ordering::Equal)
    });
}

fn derivative_coeffs(coeffs: &[C64]) -> Vec<C64> {
    if coeffs.len() <= 1 {
        return vec![C64::new(0.0, 0.0)];
    }
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * (k as f64))
        .collect()
}

fn newton_polish(coeffs: &[C64], z: &mut [C64]) {
    for zi in z.iter_mut() {
        let mut best = *zi;
        let mut best_res = eval_horner(coeffs, best).0.norm();
        for _ in 0..3 {
            let (p, dp) = eval_horner(coeffs, best);
            if dp.norm() == 0.0 {
                break;
            }
            let cand = best - p / dp;
            let res = eval_horner(coeffs, cand).0.norm();
            if res < best_res {
                best = cand;
                best_res = res;
            } else {
                break;
            }
        }
        *zi = best;
    }
}

/// Merge approximations within `CLUSTER_TOL` times the root magnitude scale
/// (transitively); each cluster becomes one root with its cardinality as
/// multiplicity, located at the cluster mean.
#[allow(clippy::needless_range_loop)]
fn cluster(approx: &[C64]) -> Vec<Root> {
    let n = approx.len();
    let scale = approx.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let tol = CLUSTER_TOL * scale;
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], i: usize) -> usize {
        let mut root = i;
        while parent[root] != root {
            root = parent[root];
        }
        let mut cur = i;
        while parent[cur] != root {
            let next = parent[cur];
            parent[cur] = root;
            cur = next;
        }
        root
    }
    for i in 0..n {
        for j in i + 1..n {
            if (approx[i] - approx[j]).norm() <= tol {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
    }
    let mut groups: Vec<(C64, usize)> = Vec::new();
    let mut group_of = vec![usize::MAX; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if group_of[r] == usize::MAX {
            group_of[r] = groups.len();
            groups.push((C64::new(0.0, 0.0), 0));
        }
        let g = group_of[r];
        groups[g].0 += approx[i];
        groups[g].1 += 1;
    }
    let mut out: Vec<Root> = groups
        .into_iter()
        .map(|(sum, count)| Root {
            location: sum / (count as f64),
            multiplicity: count,
        })
        .collect();
    out.sort_by(|a, b| {
        (a.location.re, a.location.im)
            .partial_cmp(&(b.location.re, b.location.im))
            .unwrap_or(core::cmp::Ordering::Equal)
    });
    out
}
