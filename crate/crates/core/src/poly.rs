//! Complex polynomials in one variable with the conjugate and reciprocal
//! operators.
//!
//! A polynomial carries an explicit *formal* degree that is never silently
//! trimmed: the reciprocal `P*` and every resultant depend on the declared
//! degree, and coefficient vectors with vanishing leading entries are
//! legitimate points of the forms computed in [`crate::elim`].

use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::scalar::{Scalar, C64};

/// Dense polynomial `c0 + c1·z + … + c_n·z^n` over a [`Scalar`] field.
///
/// `coeffs.len() == formal_degree + 1`; the trailing coefficient may be zero.
/// Equality compares coefficientwise after zero-extending the shorter vector,
/// so the same values at different formal degrees compare equal.
#[derive(Clone, Debug)]
pub struct ComplexPoly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> ComplexPoly<T> {
    /// Polynomial from low-order-first coefficients; an empty vector is the
    /// zero polynomial of formal degree 0.
    pub fn new(coeffs: Vec<T>) -> Self {
        if coeffs.is_empty() {
            ComplexPoly {
                coeffs: vec![T::zero()],
            }
        } else {
            ComplexPoly { coeffs }
        }
    }

    pub fn zero(formal_degree: usize) -> Self {
        ComplexPoly {
            coeffs: vec![T::zero(); formal_degree + 1],
        }
    }

    pub fn constant(c: T) -> Self {
        ComplexPoly { coeffs: vec![c] }
    }

    /// Expansion `lead·∏(z − r)` from a root multiset.
    pub fn from_roots(lead: T, roots: &[T]) -> Self {
        let mut coeffs = vec![lead];
        for r in roots {
            let mut next = vec![T::zero(); coeffs.len() + 1];
            for (j, c) in coeffs.iter().enumerate() {
                next[j + 1] = next[j + 1].clone() + c.clone();
                next[j] = next[j].clone() - r.clone() * c.clone();
            }
            coeffs = next;
        }
        ComplexPoly { coeffs }
    }

    pub fn formal_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient at index `k`, zero beyond the formal degree.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// Largest index with a nonzero coefficient; `None` for the zero
    /// polynomial.
    pub fn effective_degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn is_zero_poly(&self) -> bool {
        self.effective_degree().is_none()
    }

    pub fn leading(&self) -> &T {
        self.coeffs.last().expect("coeffs nonempty")
    }

    /// Entrywise conjugation; formal degree preserved.
    pub fn conjugate(&self) -> Self {
        ComplexPoly {
            coeffs: self.coeffs.iter().map(Scalar::conj).collect(),
        }
    }

    /// Reciprocal `P*(z) = z^n · conj-P(1/z)` at the *formal* degree n:
    /// coefficient k of the result is `conj(c_{n−k})`.
    pub fn reciprocal(&self) -> Self {
        ComplexPoly {
            coeffs: self.coeffs.iter().rev().map(Scalar::conj).collect(),
        }
    }

    /// Convolution product; formal degree is the sum of formal degrees.
    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len();
        let m = rhs.coeffs.len();
        let mut out = vec![T::zero(); n + m - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        ComplexPoly { coeffs: out }
    }

    /// Sum; formal degree is the max of the formal degrees.
    pub fn add(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        ComplexPoly { coeffs: out }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        ComplexPoly { coeffs: out }
    }

    pub fn scale(&self, c: &T) -> Self {
        ComplexPoly {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Multiplication by `z^k`; raises the formal degree by `k`.
    pub fn mul_zpow(&self, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        ComplexPoly { coeffs }
    }

    /// Horner evaluation.
    pub fn eval(&self, z: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * z.clone() + c.clone();
        }
        acc
    }

    /// Formal derivative; the formal degree drops by one (degree-0 input
    /// yields the zero polynomial of formal degree 0).
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return ComplexPoly::zero(0);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.clone() * T::from_int(k as i64))
            .collect();
        ComplexPoly { coeffs }
    }

    /// True iff `P* = P` within `tol` componentwise (`tol = 0` for exact
    /// equality; the only meaningful choice in exact mode).
    pub fn is_self_inversive(&self, tol: f64) -> bool {
        let rec = self.reciprocal();
        if tol == 0.0 {
            return rec == *self;
        }
        self.coeffs
            .iter()
            .zip(rec.coeffs.iter())
            .all(|(a, b)| (a.clone() - b.clone()).mag_sq() <= tol * tol)
    }

    /// Same coefficients re-declared at formal degree `d`: pads with zeros,
    /// or trims only zero coefficients (trimming a nonzero one returns
    /// `None`).
    pub fn redeclare(&self, d: usize) -> Option<Self> {
        if d + 1 >= self.coeffs.len() {
            let mut coeffs = self.coeffs.clone();
            coeffs.resize(d + 1, T::zero());
            Some(ComplexPoly { coeffs })
        } else {
            if self.coeffs[d + 1..].iter().any(|c| !c.is_zero()) {
                return None;
            }
            Some(ComplexPoly {
                coeffs: self.coeffs[..=d].to_vec(),
            })
        }
    }

    /// Trimmed to its effective degree (the zero polynomial keeps formal
    /// degree 0).
    pub fn trim(&self) -> Self {
        let d = self.effective_degree().unwrap_or(0);
        ComplexPoly {
            coeffs: self.coeffs[..=d].to_vec(),
        }
    }

    /// Floating image of the coefficient vector at the same formal degree.
    pub fn to_c64_poly(&self) -> ComplexPoly<C64> {
        ComplexPoly {
            coeffs: self.coeffs.iter().map(Scalar::to_c64).collect(),
        }
    }

    /// Largest coefficient magnitude, as a float.
    pub fn coeff_scale(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|c| c.mag_sq().sqrt())
            .fold(0.0, f64::max)
    }
}

impl<T: Scalar> PartialEq for ComplexPoly<T> {
    fn eq(&self, other: &Self) -> bool {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len).all(|k| self.coeff(k) == other.coeff(k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussRational;
    use num_traits::Zero;

    fn gi(a: i64, b: i64) -> GaussRational {
        GaussRational::from_ints(a, b)
    }

    fn poly(cs: &[(i64, i64)]) -> ComplexPoly<GaussRational> {
        ComplexPoly::new(cs.iter().map(|&(a, b)| gi(a, b)).collect())
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(
            poly(&[(1, 0), (1, 1)]).conjugate(),
            poly(&[(1, 0), (1, -1)])
        );
        let sq = poly(&[(0, 0), (0, 0), (1, 0)]);
        assert_eq!(sq.conjugate(), sq);
        assert_eq!(
            poly(&[(0, 2), (0, 0)]).conjugate(),
            poly(&[(0, -2), (0, 0)])
        );
    }

    #[test]
    fn reciprocal_examples() {
        // X = 2+(1+i)z → X* = (1−i)+2z
        assert_eq!(
            poly(&[(2, 0), (1, 1)]).reciprocal(),
            poly(&[(1, -1), (2, 0)])
        );
        // (z−2)² = 4−4z+z² → 1−4z+4z² = (1−2z)²
        assert_eq!(
            poly(&[(4, 0), (-4, 0), (1, 0)]).reciprocal(),
            poly(&[(1, 0), (-4, 0), (4, 0)])
        );
        let x = poly(&[(3, -2), (0, 5), (7, 1)]);
        assert_eq!(x.reciprocal().reciprocal(), x);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(
            poly(&[(1, 0), (1, 0)]).mul(&poly(&[(1, 0), (-1, 0)])),
            poly(&[(1, 0), (0, 0), (-1, 0)])
        );
        // (2+(1+i)z)·((1−i)+2z) = (2−2i)+6z+(2+2i)z²
        assert_eq!(
            poly(&[(2, 0), (1, 1)]).mul(&poly(&[(1, -1), (2, 0)])),
            poly(&[(2, -2), (6, 0), (2, 2)])
        );
        let p = poly(&[(5, 3), (-1, 2), (0, 7)]);
        assert_eq!(p.mul(&ComplexPoly::constant(gi(1, 0))), p);
    }

    #[test]
    fn eval_examples() {
        assert!(poly(&[(1, 0), (0, 0), (1, 0)]).eval(&gi(0, 1)).is_zero());
        assert!(poly(&[(4, 0), (-4, 0), (1, 0)]).eval(&gi(2, 0)).is_zero());
        assert_eq!(
            poly(&[(1, 0), (1, 0)]).eval(&GaussRational::from_ratios(1, 2, 0, 1)),
            GaussRational::from_ratios(3, 2, 0, 1)
        );
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(
            poly(&[(4, 0), (-4, 0), (1, 0)]).derivative(),
            poly(&[(-4, 0), (2, 0)])
        );
        assert_eq!(poly(&[(5, 0)]).derivative(), ComplexPoly::zero(0));
        assert_eq!(
            poly(&[(0, 0), (0, 0), (0, 0), (1, 0)]).derivative(),
            poly(&[(0, 0), (0, 0), (3, 0)])
        );
    }

    #[test]
    fn self_inversive_examples() {
        assert!(poly(&[(1, -1), (4, 0), (1, 1)]).is_self_inversive(0.0));
        assert!(!poly(&[(1, 0), (2, 0)]).is_self_inversive(0.0));
    }

    #[test]
    fn formal_degree_is_declared_not_inferred() {
        let p = poly(&[(1, 0), (0, 0)]);
        assert_eq!(p.formal_degree(), 1);
        assert_eq!(p.effective_degree(), Some(0));
        // reciprocal depends on the declared degree
        assert_eq!(p.reciprocal(), poly(&[(0, 0), (1, 0)]));
        // zero-extended equality
        assert_eq!(p, poly(&[(1, 0)]));
    }

    #[test]
    fn redeclare_refuses_to_drop_nonzero() {
        let p = poly(&[(1, 0), (2, 0)]);
        assert!(p.redeclare(0).is_none());
        assert_eq!(p.redeclare(3).unwrap().formal_degree(), 3);
    }
}
