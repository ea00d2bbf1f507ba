//! The quadratic map Φ from spectral factors to trigonometric coefficients,
//! its Jacobian, and checks of the three identities tying Φ to the
//! elimination forms: the Jacobian determinant identity, the boundary-form
//! factorization, and the reflected-root shadow construction.
//!
//! Normalization (used consistently everywhere): `y0 = ½·Σ|x_j|²`, which is
//! the unique choice making `X·X* = Y* + z^n·Y` an exact polynomial
//! identity. Consequently `T(t) = ½·|X(e^{it})|²` on the circle.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;
use num_traits::{Signed, Zero};

use crate::elim;
use crate::poly::ComplexPoly;
use crate::roots::{self, Root};
use crate::scalar::{GaussRational, Rational, Scalar, C64};
use crate::{Error, Result};

/// An algebraic polynomial X with real positive constant term, the
/// normalized carrier of a Fejér–Riesz factorization.
///
/// Canonical (outer) factors additionally have no roots in the open unit
/// disk; that extra property is established by [`crate::cone::factor`], not
/// by this type.
#[derive(Clone, Debug)]
pub struct SpectralFactor<T> {
    poly: ComplexPoly<T>,
}

impl<T: Scalar> PartialEq for SpectralFactor<T> {
    fn eq(&self, other: &Self) -> bool {
        self.poly == other.poly
    }
}

impl<T: Scalar> SpectralFactor<T> {
    /// Wraps a polynomial after checking that x0 is real and positive.
    pub fn new(poly: ComplexPoly<T>) -> Result<Self> {
        let x0 = poly.coeff(0);
        if !x0.is_real() || x0.to_c64().re <= 0.0 {
            return Err(Error::Precondition(
                "spectral factor needs a real positive constant term".to_string(),
            ));
        }
        Ok(SpectralFactor { poly })
    }

    pub fn poly(&self) -> &ComplexPoly<T> {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.formal_degree()
    }

    pub fn into_poly(self) -> ComplexPoly<T> {
        self.poly
    }
}

/// Coefficient vector y = (y0, y1, …, yn) of a trigonometric polynomial
/// `T(t) = y0 + Σ Re(y_m·e^{imt})`, with y0 real.
#[derive(Clone, Debug, PartialEq)]
pub struct TrigPoly<T> {
    y: Vec<T>,
}

impl<T: Scalar> TrigPoly<T> {
    pub fn new(y: Vec<T>) -> Result<Self> {
        if y.is_empty() {
            return Err(Error::DegenerateInput(
                "empty coefficient vector".to_string(),
            ));
        }
        if !y[0].is_real() {
            return Err(Error::Precondition("y0 must be real".to_string()));
        }
        Ok(TrigPoly { y })
    }

    /// Degree n (the vector has n+1 entries).
    pub fn n(&self) -> usize {
        self.y.len() - 1
    }

    pub fn y(&self) -> &[T] {
        &self.y
    }

    pub fn is_zero_poly(&self) -> bool {
        self.y.iter().all(Zero::is_zero)
    }

    /// Largest index with nonzero coefficient, if any.
    pub fn effective_n(&self) -> Option<usize> {
        self.y.iter().rposition(|c| !c.is_zero())
    }

    /// Max coefficient magnitude, the cone-invariant scale of Y.
    pub fn coeff_scale(&self) -> f64 {
        self.y.iter().map(|c| c.mag_sq().sqrt()).fold(0.0, f64::max)
    }

    pub fn to_c64_trig(&self) -> TrigPoly<C64> {
        TrigPoly {
            y: self.y.iter().map(Scalar::to_c64).collect(),
        }
    }

    /// Coefficientwise sum (cone addition); the degrees may differ.
    pub fn add(&self, rhs: &Self) -> Self {
        let len = self.y.len().max(rhs.y.len());
        let grab = |v: &[T], k: usize| v.get(k).cloned().unwrap_or_else(T::zero);
        TrigPoly {
            y: (0..len)
                .map(|k| grab(&self.y, k) + grab(&rhs.y, k))
                .collect(),
        }
    }

    /// Scaling by a real scalar (cone dilation).
    pub fn scale(&self, c: &T) -> Self {
        TrigPoly {
            y: self.y.iter().map(|v| v.clone() * c.clone()).collect(),
        }
    }
}

/// The quadratic map: `y0 = ½·Σ|x_j|²`, `y_m = Σ conj(x_k)·x_{k+m}`.
pub fn phi<T: Scalar>(x: &SpectralFactor<T>) -> TrigPoly<T> {
    let c = x.poly().coeffs();
    let n = x.degree();
    let mut y = Vec::with_capacity(n + 1);
    let mut y0 = T::zero();
    for xj in c {
        y0 = y0 + xj.conj() * xj.clone();
    }
    y.push(y0 / T::from_int(2));
    for m in 1..=n {
        let mut ym = T::zero();
        for k in 0..=n - m {
            ym = ym + c[k].conj() * c[k + m].clone();
        }
        y.push(ym);
    }
    TrigPoly { y }
}

/// The degree-2n product `X·X*`, identically equal to the lift of Φ(X).
pub fn gram_lift<T: Scalar>(x: &SpectralFactor<T>) -> ComplexPoly<T> {
    x.poly().mul(&x.poly().reciprocal())
}

/// Rows of the derivative matrix of `R = X·X*` with respect to the real
/// coordinates, as coefficient vectors in the basis 1, z, …, z^{2n}:
/// `R0 = X* + z^n·X`, then `R_j = z^j·X*` and `R_{−j} = z^{n−j}·X`
/// interleaved for j = 1..n.
pub fn jacobian_rows<T: Scalar>(x: &SpectralFactor<T>) -> Vec<Vec<T>> {
    let n = x.degree();
    let xs = x.poly().reciprocal();
    let width = 2 * n + 1;
    let pad = |p: &ComplexPoly<T>| -> Vec<T> { (0..width).map(|k| p.coeff(k)).collect() };
    let mut rows = Vec::with_capacity(width);
    rows.push(pad(&xs.add(&x.poly().mul_zpow(n))));
    for j in 1..=n {
        rows.push(pad(&xs.mul_zpow(j)));
        rows.push(pad(&x.poly().mul_zpow(n - j)));
    }
    rows
}

/// Determinant of [`jacobian_rows`] against the closed form `2·x0·V(X)`.
///
/// The two agree up to a sign that depends only on n (the fixed row order
/// differs from a Sylvester layout by a permutation); `ratio` is that sign,
/// `None` when the closed form vanishes (x0·V(X) = 0).
#[derive(Clone, Debug, PartialEq)]
pub struct Lemma1Check {
    pub det: GaussRational,
    pub closed_form: GaussRational,
    pub ratio: Option<GaussRational>,
}

pub fn verify_lemma1(x: &SpectralFactor<GaussRational>) -> Lemma1Check {
    let det = elim::det(&jacobian_rows(x));
    let v = elim::mobius_discriminant(x.poly());
    let closed_form = GaussRational::from_int(2) * x.poly().coeff(0) * v;
    let ratio = if closed_form.is_zero() {
        None
    } else {
        Some(det.clone() / closed_form.clone())
    };
    Lemma1Check {
        det,
        closed_form,
        ratio,
    }
}

/// Both sides of `Dis₂(Φ(X)) = |Dis(X)|²·V(X)²`; equal exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct Lemma2Check {
    pub lhs: GaussRational,
    pub rhs: GaussRational,
}

pub fn verify_lemma2(x: &SpectralFactor<GaussRational>) -> Result<Lemma2Check> {
    let lhs = elim::dis2(&phi(x))?;
    let dis_x = elim::discriminant(x.poly())?;
    let v = elim::mobius_discriminant(x.poly());
    let rhs = dis_x.conj() * dis_x * v.clone() * v;
    Ok(Lemma2Check { lhs, rhs })
}

/// Replaces one copy of a multiple root by its unit-circle reflection and
/// rescales by λ = |root|, yielding Q with `Q·Q* = X·X*`, q0 > 0 and
/// V(Q) = 0.
///
/// `double_root` selects a root of X of multiplicity ≥ 2 (it must match one
/// of the clustered roots); the synthesized Q is rebuilt from the full root
/// multiset for conditioning.
pub fn lemma3_shadow(x: &ComplexPoly<C64>, double_root: C64) -> Result<ComplexPoly<C64>> {
    if double_root == C64::new(0.0, 0.0) {
        return Err(Error::Domain(
            "the doubled root must be nonzero".to_string(),
        ));
    }
    let x0 = x.coeff(0);
    if x0.im != 0.0 || x0.re <= 0.0 {
        return Err(Error::Precondition(
            "lemma3_shadow needs x0 real and positive".to_string(),
        ));
    }
    let rs = roots::all_roots(x)?;
    let scale = rs
        .roots
        .iter()
        .map(|r| r.location.norm())
        .fold(1.0, f64::max);
    let matched: &Root = rs
        .roots
        .iter()
        .min_by(|a, b| {
            (a.location - double_root)
                .norm()
                .total_cmp(&(b.location - double_root).norm())
        })
        .ok_or_else(|| Error::DegenerateInput("X has no roots".to_string()))?;
    if (matched.location - double_root).norm() > 1e-5 * scale {
        return Err(Error::Precondition(format!(
            "{double_root} is not a root of X"
        )));
    }
    if matched.multiplicity < 2 {
        return Err(Error::Precondition(format!(
            "root {} has multiplicity 1, need at least 2",
            matched.location
        )));
    }
    let z_d = matched.location;
    let lambda = z_d.norm();
    let mut new_roots = Vec::new();
    for r in &rs.roots {
        let mult = if r == matched {
            r.multiplicity - 1
        } else {
            r.multiplicity
        };
        for _ in 0..mult {
            new_roots.push(r.location);
        }
    }
    new_roots.push(roots::reflect(z_d)?);
    let eff = x.effective_degree().expect("roots exist, X nonzero");
    let lead = x.coeff(eff) * C64::new(lambda, 0.0);
    let q = ComplexPoly::from_roots(lead, &new_roots);
    q.redeclare(x.formal_degree())
        .ok_or_else(|| Error::Inconsistent("shadow degree exceeded the input degree".to_string()))
}

/// Exact-arithmetic variant of [`lemma3_shadow`] for X given by its root
/// multiset: requires the doubled root to have rational modulus (real
/// rational roots and Pythagorean points qualify), so that λ = |root| stays
/// in the field.
pub fn lemma3_shadow_exact(
    lead: &GaussRational,
    roots: &[GaussRational],
    dup_index: usize,
) -> Result<ComplexPoly<GaussRational>> {
    let z_d = roots
        .get(dup_index)
        .ok_or_else(|| Error::Precondition("dup_index out of range".to_string()))?;
    if z_d.is_zero() {
        return Err(Error::Domain(
            "the doubled root must be nonzero".to_string(),
        ));
    }
    if roots.iter().filter(|r| *r == z_d).count() < 2 {
        return Err(Error::Precondition(
            "the selected root does not repeat".to_string(),
        ));
    }
    let lambda = rational_sqrt(&z_d.norm_sq()).ok_or_else(|| {
        Error::Precondition("the doubled root must have rational modulus".to_string())
    })?;
    let mut new_roots = Vec::with_capacity(roots.len());
    for (i, r) in roots.iter().enumerate() {
        if i == dup_index {
            new_roots.push(z_d.reflect()?);
        } else {
            new_roots.push(r.clone());
        }
    }
    let new_lead = lead.clone() * GaussRational::from_rational(lambda);
    Ok(ComplexPoly::from_roots(new_lead, &new_roots))
}

/// √r when r is the square of a rational, `None` otherwise.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    if r.is_zero() {
        return Some(Rational::zero());
    }
    let num = r.numer().magnitude();
    let den = r.denom().magnitude();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Some(Rational::new(sn.into(), sd.into()))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone;
    use num_traits::One;

    fn gi(a: i64, b: i64) -> GaussRational {
        GaussRational::from_ints(a, b)
    }

    fn factor(cs: &[(i64, i64)]) -> SpectralFactor<GaussRational> {
        SpectralFactor::new(ComplexPoly::new(
            cs.iter().map(|&(a, b)| gi(a, b)).collect(),
        ))
        .unwrap()
    }

    #[test]
    fn phi_examples() {
        // X = 1 padded to degree 3
        let x = factor(&[(1, 0), (0, 0), (0, 0), (0, 0)]);
        let y = phi(&x);
        assert_eq!(y.y()[0], GaussRational::from_ratios(1, 2, 0, 1));
        assert!(y.y()[1..].iter().all(Zero::is_zero));
        // X = 2+(1+i)z → y = (3, 2+2i)
        let x = factor(&[(2, 0), (1, 1)]);
        let y = phi(&x);
        assert_eq!(y.y(), &[gi(3, 0), gi(2, 2)]);
    }

    #[test]
    fn phi_half_example() {
        // X = 1 + z/2 → y = (5/8, 1/2)
        let x = SpectralFactor::new(ComplexPoly::new(vec![
            GaussRational::from_int(1),
            GaussRational::from_ratios(1, 2, 0, 1),
        ]))
        .unwrap();
        let y = phi(&x);
        assert_eq!(y.y()[0], GaussRational::from_ratios(5, 8, 0, 1));
        assert_eq!(y.y()[1], GaussRational::from_ratios(1, 2, 0, 1));
    }

    #[test]
    fn gram_lift_equals_lift_of_phi() {
        let x = factor(&[(2, 0), (1, 1)]);
        let g = gram_lift(&x);
        assert_eq!(g, ComplexPoly::new(vec![gi(2, -2), gi(6, 0), gi(2, 2)]));
        assert_eq!(g, cone::lift(&phi(&x)));
        assert!(g.is_self_inversive(0.0));
    }

    #[test]
    fn jacobian_rows_n1() {
        // X = x0+x1·z → rows (conj x1, 2x0, x1), (0, conj x1, x0), (x0, x1, 0)
        let x = factor(&[(2, 0), (1, 1)]);
        let rows = jacobian_rows(&x);
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0], vec![gi(1, -1), gi(4, 0), gi(1, 1)]);
        assert_eq!(rows[1], vec![gi(0, 0), gi(1, -1), gi(2, 0)]);
        assert_eq!(rows[2], vec![gi(2, 0), gi(1, 1), gi(0, 0)]);
    }

    #[test]
    fn lemma1_example() {
        let x = factor(&[(2, 0), (1, 1)]);
        let check = verify_lemma1(&x);
        assert_eq!(check.closed_form, gi(8, 0));
        assert_eq!(check.det.clone() * check.det.conj(), gi(64, 0));
        assert_eq!(check.ratio, Some(GaussRational::one()));
    }

    #[test]
    fn lemma1_degenerate_flags_ratio() {
        // 1+z has its root on the unit circle: V = 0, det = 0
        let x = factor(&[(1, 0), (1, 0)]);
        let check = verify_lemma1(&x);
        assert!(check.det.is_zero());
        assert!(check.closed_form.is_zero());
        assert!(check.ratio.is_none());
    }

    #[test]
    fn lemma2_example() {
        // X = 2+(1+i)z: Dis = 1, V = 2 → both sides 4
        let x = factor(&[(2, 0), (1, 1)]);
        let check = verify_lemma2(&x).unwrap();
        assert_eq!(check.lhs, check.rhs);
        assert_eq!(check.lhs, gi(4, 0));
    }

    #[test]
    fn lemma2_vanishes_with_discriminant() {
        // X = (z−2)², n=2: Dis(X) = 0 → both sides 0
        let x = factor(&[(4, 0), (-4, 0), (1, 0)]);
        let check = verify_lemma2(&x).unwrap();
        assert!(check.lhs.is_zero() && check.rhs.is_zero());
    }

    #[test]
    fn lemma3_float_example() {
        // X = (z−2)² → Q = 2−5z+2z²
        let x = ComplexPoly::new(vec![
            C64::new(4.0, 0.0),
            C64::new(-4.0, 0.0),
            C64::new(1.0, 0.0),
        ]);
        let q = lemma3_shadow(&x, C64::new(2.0, 0.0)).unwrap();
        let expect = [C64::new(2.0, 0.0), C64::new(-5.0, 0.0), C64::new(2.0, 0.0)];
        for (a, b) in q.coeffs().iter().zip(expect.iter()) {
            assert!((a - b).norm() < 1e-7, "{a} vs {b}");
        }
        // Q·Q* = X·X*
        let lhs = q.mul(&q.reciprocal());
        let rhs = x.mul(&x.reciprocal());
        for (a, b) in lhs.coeffs().iter().zip(rhs.coeffs().iter()) {
            assert!((a - b).norm() < 1e-9 * 16.0);
        }
    }

    #[test]
    fn lemma3_rejects_simple_roots() {
        let x = ComplexPoly::new(vec![
            C64::new(2.0, 0.0),
            C64::new(-3.0, 0.0),
            C64::new(1.0, 0.0),
        ]);
        assert!(matches!(
            lemma3_shadow(&x, C64::new(2.0, 0.0)),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            lemma3_shadow(&x, C64::new(0.0, 0.0)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn lemma3_exact_matches_contract() {
        // roots {2, 2, −3}: x0 = lead·∏(−r) = lead·12, so lead = 1 works
        let lead = gi(1, 0);
        let roots = vec![gi(2, 0), gi(2, 0), gi(-3, 0)];
        let x = ComplexPoly::from_roots(lead.clone(), &roots);
        assert_eq!(x.coeff(0), gi(12, 0));
        let q = lemma3_shadow_exact(&lead, &roots, 0).unwrap();
        assert_eq!(q.mul(&q.reciprocal()), x.mul(&x.reciprocal()));
        let q0 = q.coeff(0);
        assert!(q0.is_real() && q0.to_c64().re > 0.0);
        assert!(elim::mobius_discriminant(&q).is_zero());
    }

    #[test]
    fn trig_poly_requires_real_y0() {
        assert!(matches!(
            TrigPoly::new(vec![gi(1, 1), gi(0, 0)]),
            Err(Error::Precondition(_))
        ));
        assert!(TrigPoly::new(vec![gi(1, 0), gi(2, 3)]).is_ok());
        assert!(matches!(
            TrigPoly::<GaussRational>::new(vec![]),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn rational_sqrt_cases() {
        let r = Rational::new(9.into(), 4.into());
        assert_eq!(rational_sqrt(&r), Some(Rational::new(3.into(), 2.into())));
        let r = Rational::new(2.into(), 1.into());
        assert_eq!(rational_sqrt(&r), None);
    }
}
