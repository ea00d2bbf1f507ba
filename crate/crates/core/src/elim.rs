//! Elimination theory: Sylvester matrices, resultants, discriminants, the
//! Möbius discriminant V, and the boundary form Dis₂.
//!
//! Resultants are always taken at the *formal* degrees of their operands: V
//! and Dis₂ are forms in all coordinates including vanishing ones, and only
//! formal-degree semantics keeps them polynomial in the coordinates. Callers
//! who want effective-degree behavior re-declare the degree first.
//!
//! Exact determinants use fraction-free (Bareiss) elimination; floating ones
//! use partially pivoted elimination.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::cone;
use crate::poly::ComplexPoly;
use crate::quadmap::TrigPoly;
use crate::roots::{self};
use crate::scalar::{Scalar, C64};
use crate::{Error, Result};

/// Sylvester matrix of two polynomials at their formal degrees (n, m):
/// m shifted rows of P's coefficients over n shifted rows of Q's, both in
/// descending power order, size (n+m)².
#[derive(Clone, Debug, PartialEq)]
pub struct SylvesterMatrix<T> {
    entries: Vec<Vec<T>>,
    degrees: (usize, usize),
}

impl<T: Scalar> SylvesterMatrix<T> {
    pub fn new(p: &ComplexPoly<T>, q: &ComplexPoly<T>) -> Self {
        let n = p.formal_degree();
        let m = q.formal_degree();
        let size = n + m;
        let mut entries = vec![vec![T::zero(); size]; size];
        for i in 0..m {
            for j in 0..=n {
                entries[i][i + j] = p.coeff(n - j);
            }
        }
        for i in 0..n {
            for j in 0..=m {
                entries[m + i][i + j] = q.coeff(m - j);
            }
        }
        SylvesterMatrix {
            entries,
            degrees: (n, m),
        }
    }

    pub fn degrees(&self) -> (usize, usize) {
        self.degrees
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<T>] {
        &self.entries
    }

    pub fn determinant(&self) -> T {
        det(&self.entries)
    }
}

/// Determinant of a square matrix; fraction-free elimination in exact mode,
/// partial pivoting in float mode.
pub fn det<T: Scalar>(rows: &[Vec<T>]) -> T {
    if rows.is_empty() {
        return T::one();
    }
    debug_assert!(rows.iter().all(|r| r.len() == rows.len()));
    if T::EXACT {
        det_bareiss(rows.to_vec())
    } else {
        det_partial_pivot(rows.to_vec())
    }
}

#[allow(clippy::needless_range_loop)]
fn det_bareiss<T: Scalar>(mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut sign_flip = false;
    let mut prev_pivot = T::one();
    for k in 0..n - 1 {
        let pivot_row = match (k..n).find(|&i| !m[i][k].is_zero()) {
            Some(r) => r,
            None => return T::zero(),
        };
        if pivot_row != k {
            m.swap(k, pivot_row);
            sign_flip = !sign_flip;
        }
        let pivot = m[k][k].clone();
        #[allow(clippy::needless_range_loop)]
        for i in k + 1..n {
            for j in k + 1..n {
                // exact division by the previous pivot (Bareiss)
                let num = m[i][j].clone() * pivot.clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = num / prev_pivot.clone();
            }
            m[i][k] = T::zero();
        }
        prev_pivot = pivot;
    }
    let d = m[n - 1][n - 1].clone();
    if sign_flip {
        -d
    } else {
        d
    }
}

#[allow(clippy::needless_range_loop)]
fn det_partial_pivot<T: Scalar>(mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    let mut det = T::one();
    for k in 0..n {
        let pivot_row = (k..n)
            .max_by(|&a, &b| {
                m[a][k]
                    .mag_sq()
                    .partial_cmp(&m[b][k].mag_sq())
                    .unwrap_or(core::cmp::Ordering::Equal)
            })
            .expect("nonempty range");
        if m[pivot_row][k].is_zero() {
            return T::zero();
        }
        if pivot_row != k {
            m.swap(k, pivot_row);
            det = -det;
        }
        let pivot = m[k][k].clone();
        det = det * pivot.clone();
        for i in k + 1..n {
            let factor = m[i][k].clone() / pivot.clone();
            for j in k + 1..n {
                m[i][j] = m[i][j].clone() - factor.clone() * m[k][j].clone();
            }
            m[i][k] = T::zero();
        }
    }
    det
}

/// Resultant Res(P, Q) at formal degrees: the Sylvester determinant, with
/// the convention Res(P, c) = c^deg P for degree-0 operands.
pub fn resultant<T: Scalar>(p: &ComplexPoly<T>, q: &ComplexPoly<T>) -> T {
    let n = p.formal_degree();
    let m = q.formal_degree();
    if m == 0 {
        return pow(q.coeff(0), n);
    }
    if n == 0 {
        return pow(p.coeff(0), m);
    }
    SylvesterMatrix::new(p, q).determinant()
}

fn pow<T: Scalar>(base: T, exp: usize) -> T {
    let mut acc = T::one();
    for _ in 0..exp {
        acc = acc * base.clone();
    }
    acc
}

/// Independent resultant oracle: the Cayley product
/// `p_n^m q_m^n ∏∏(a_j − b_k)` over numerically computed roots.
///
/// Requires both effective degrees to equal the formal degrees.
pub fn resultant_root_oracle<T: Scalar>(p: &ComplexPoly<T>, q: &ComplexPoly<T>) -> Result<C64> {
    let n = p.formal_degree();
    let m = q.formal_degree();
    for (poly, name) in [(p, "first"), (q, "second")] {
        if poly.effective_degree() != Some(poly.formal_degree()) && poly.formal_degree() > 0 {
            return Err(Error::Precondition(format!(
                "{name} operand must have effective degree equal to its formal degree"
            )));
        }
    }
    let pa: Vec<C64> = if n == 0 {
        vec![]
    } else {
        roots::all_roots(p)?.expanded()
    };
    let qa: Vec<C64> = if m == 0 {
        vec![]
    } else {
        roots::all_roots(q)?.expanded()
    };
    let mut acc = pow(p.coeff(n).to_c64(), m) * pow(q.coeff(m).to_c64(), n);
    for a in &pa {
        for b in &qa {
            acc *= a - b;
        }
    }
    Ok(acc)
}

/// Discriminant with the root-product normalization
/// `Dis(P) = p_m^{2m−2} ∏_{i>j} (z_i − z_j)²`, computed as
/// `(−1)^{m(m−1)/2}·Res(P, P′)/p_m`.
///
/// The leading coefficient must be nonzero at the formal degree; a vanishing
/// one is a degree-drop error, because the discriminant at a vanishing
/// leading coefficient is not the specialization of the generic form
/// (`Dis(p0,…,p_{m−1},0) = ±p_{m−1}²·Dis(p0,…,p_{m−1})` relates the two —
/// re-declare the degree and apply it explicitly).
pub fn discriminant<T: Scalar>(p: &ComplexPoly<T>) -> Result<T> {
    let m = p.formal_degree();
    if m == 0 {
        return Err(Error::Precondition(
            "discriminant needs degree at least 1".to_string(),
        ));
    }
    let lead = p.coeff(m);
    if lead.is_zero() {
        return Err(Error::DegreeDrop(format!(
            "leading coefficient vanishes at formal degree {m}; \
             Dis(p0,…,p_(m-1),0) = ±p_(m-1)²·Dis(p0,…,p_(m-1)) — \
             re-declare the degree and apply the drop relation explicitly"
        )));
    }
    if m == 1 {
        // empty root-difference product
        return Ok(T::one());
    }
    let r = resultant(p, &p.derivative());
    let signed = if (m * (m - 1) / 2) % 2 == 1 { -r } else { r };
    Ok(signed / lead)
}

/// Independent discriminant oracle: `p_m^{2m−2} ∏_{i>j}(z_i − z_j)²` over
/// numerically computed roots.
pub fn discriminant_root_oracle<T: Scalar>(p: &ComplexPoly<T>) -> Result<C64> {
    let m = p.formal_degree();
    if p.effective_degree() != Some(m) {
        return Err(Error::Precondition(
            "oracle needs effective degree equal to formal degree".to_string(),
        ));
    }
    if m == 1 {
        return Ok(C64::new(1.0, 0.0));
    }
    let zs = roots::all_roots(p)?.expanded();
    let mut acc = pow(p.coeff(m).to_c64(), 2 * m - 2);
    for i in 0..zs.len() {
        for j in 0..i {
            let d = zs[i] - zs[j];
            acc *= d * d;
        }
    }
    Ok(acc)
}

/// Möbius discriminant `V(X) = Res(X*, X)` at formal degrees (n, n).
///
/// This orientation of the resultant is the one under which V is the
/// root-pair form `|x_n|^{2n} ∏ (z_j·conj(z_k) − 1)`: real-valued, vanishing
/// exactly when X has a root pair symmetric in the unit circle, and equal to
/// `x0² − |x1|²` for n = 1.
pub fn mobius_discriminant<T: Scalar>(x: &ComplexPoly<T>) -> T {
    if x.formal_degree() == 0 {
        return T::one();
    }
    resultant(&x.reciprocal(), x)
}

/// Boundary form `Dis₂(Y) = Dis(Y* + z^n·Y)`, the discriminant of the lift,
/// a form of degree 4n−2 in the coordinates of Y.
///
/// Refuses y_n = 0: the discriminant at a vanishing leading coefficient is
/// not the specialization of the generic form (see [`discriminant`]).
pub fn dis2<T: Scalar>(y: &TrigPoly<T>) -> Result<T> {
    let n = y.n();
    if n == 0 {
        return Err(Error::Precondition(
            "dis2 needs degree at least 1".to_string(),
        ));
    }
    if y.y()[n].is_zero() {
        return Err(Error::DegreeDrop(format!(
            "y_{n} = 0: the lift drops degree and Dis₂ is not the specialization \
             of the generic form; Dis(p0,…,p_(m-1),0) = ±p_(m-1)²·Dis(p0,…,p_(m-1))"
        )));
    }
    discriminant(&cone::lift(y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadmap::TrigPoly;
    use crate::scalar::GaussRational;

    fn gi(a: i64, b: i64) -> GaussRational {
        GaussRational::from_ints(a, b)
    }

    fn poly(cs: &[(i64, i64)]) -> ComplexPoly<GaussRational> {
        ComplexPoly::new(cs.iter().map(|&(a, b)| gi(a, b)).collect())
    }

    #[test]
    fn resultant_examples() {
        // Res(z−1, z+1) = 2
        assert_eq!(
            resultant(&poly(&[(-1, 0), (1, 0)]), &poly(&[(1, 0), (1, 0)])),
            gi(2, 0)
        );
        // Res(z²−1, z²−4) = 9
        assert_eq!(
            resultant(
                &poly(&[(-1, 0), (0, 0), (1, 0)]),
                &poly(&[(-4, 0), (0, 0), (1, 0)])
            ),
            gi(9, 0)
        );
        // multiplicativity: Res(z·X*, X) = Res(z, X)·Res(X*, X) with
        // X = 2+(1+i)z: both sides equal 2·(−2) = −4; and V(X) = 2.
        let x = poly(&[(2, 0), (1, 1)]);
        let zxs = x.reciprocal().mul_zpow(1);
        let z = poly(&[(0, 0), (1, 0)]);
        let lhs = resultant(&zxs, &x);
        let rhs = resultant(&z, &x) * resultant(&x.reciprocal(), &x);
        assert_eq!(lhs, rhs);
        assert_eq!(rhs, gi(4, 0));
        assert_eq!(mobius_discriminant(&x), gi(2, 0));
    }

    #[test]
    fn resultant_respects_formal_degrees() {
        // 1+z padded to formal degree 2 against 2+z: the 3×3 Sylvester
        // determinant is −1, not the effective-degree value Res(1+z, 2+z) = 1
        let p = poly(&[(1, 0), (1, 0), (0, 0)]);
        let q = poly(&[(2, 0), (1, 0)]);
        assert_eq!(resultant(&p, &q), gi(-1, 0));
        assert_eq!(resultant(&p.redeclare(1).unwrap(), &q), gi(1, 0));
        let m = SylvesterMatrix::new(&p, &q);
        assert_eq!(m.size(), 3);
        assert_eq!(m.degrees(), (2, 1));
    }

    #[test]
    fn degree_zero_conventions() {
        let c = poly(&[(3, 0)]);
        let p = poly(&[(1, 0), (0, 0), (1, 0)]);
        assert_eq!(resultant(&p, &c), gi(9, 0));
        assert_eq!(resultant(&c, &p), gi(9, 0));
        assert_eq!(resultant(&c, &c), gi(1, 0));
    }

    #[test]
    fn swap_sign() {
        let p = poly(&[(1, 2), (3, 0), (1, 0)]);
        let q = poly(&[(-2, 0), (0, 1), (0, 0), (5, 0)]);
        let pq = resultant(&p, &q);
        let qp = resultant(&q, &p);
        // (−1)^{2·3} = +1
        assert_eq!(pq, qp);
        let lin = poly(&[(1, 1), (2, 0)]);
        let lin_q = resultant(&lin, &q);
        let q_lin = resultant(&q, &lin);
        // (−1)^{1·3} = −1
        assert_eq!(lin_q, -q_lin);
    }

    #[test]
    fn discriminant_examples() {
        // z²−1 → 4
        assert_eq!(
            discriminant(&poly(&[(-1, 0), (0, 0), (1, 0)])).unwrap(),
            gi(4, 0)
        );
        // quadratic b²−4ac
        let a = gi(3, 1);
        let b = gi(-2, 5);
        let c = gi(1, -1);
        let q = ComplexPoly::new(vec![a.clone(), b.clone(), c.clone()]);
        let expect = b.clone() * b - GaussRational::from_int(4) * a * c;
        assert_eq!(discriminant(&q).unwrap(), expect);
        // double root
        assert_eq!(
            discriminant(&poly(&[(4, 0), (-4, 0), (1, 0)])).unwrap(),
            gi(0, 0)
        );
        // linear: empty product
        assert_eq!(discriminant(&poly(&[(7, 0), (2, 0)])).unwrap(), gi(1, 0));
        // quartic: Dis(z⁴−1) = −256
        assert_eq!(
            discriminant(&poly(&[(-1, 0), (0, 0), (0, 0), (0, 0), (1, 0)])).unwrap(),
            gi(-256, 0)
        );
        // degree drop refused
        assert!(matches!(
            discriminant(&poly(&[(1, 0), (1, 0), (0, 0)])),
            Err(Error::DegreeDrop(_))
        ));
    }

    #[test]
    fn mobius_discriminant_examples() {
        // n=1 form x0²−|x1|²
        assert_eq!(mobius_discriminant(&poly(&[(2, 0), (1, 1)])), gi(2, 0));
        // vanishing coordinate keeps the form: V(x0, 0) = x0²
        assert_eq!(mobius_discriminant(&poly(&[(3, 0), (0, 0)])), gi(9, 0));
        // unit-circle root kills V: X = (z−i)(z−2) has root i on the circle
        let x = poly(&[(0, 2), (-2, -1), (1, 0)]);
        assert_eq!(mobius_discriminant(&x), gi(0, 0));
    }

    #[test]
    fn dis2_examples() {
        // Dis₂(y0, y1) = 4(y0²−|y1|²): (1, 2) → −12
        let y = TrigPoly::new(vec![gi(1, 0), gi(2, 0)]).unwrap();
        assert_eq!(dis2(&y).unwrap(), gi(-12, 0));
        // degree drop refused
        let y = TrigPoly::new(vec![gi(1, 0), gi(0, 0)]).unwrap();
        assert!(matches!(dis2(&y), Err(Error::DegreeDrop(_))));
    }

    #[test]
    fn oracle_literal_examples() {
        use crate::scalar::C64;
        let p = poly(&[(-1, 0), (1, 0)]);
        let q = poly(&[(1, 0), (1, 0)]);
        let r = resultant_root_oracle(&p, &q).unwrap();
        assert!((r - C64::new(2.0, 0.0)).norm() < 1e-12);
        let p = poly(&[(-1, 0), (0, 0), (1, 0)]);
        let q = poly(&[(-4, 0), (0, 0), (1, 0)]);
        let r = resultant_root_oracle(&p, &q).unwrap();
        assert!((r - C64::new(9.0, 0.0)).norm() < 1e-10);
        let d = discriminant_root_oracle(&p).unwrap();
        assert!((d - C64::new(4.0, 0.0)).norm() < 1e-10);
        // double root: vanishes after scaling
        let d = discriminant_root_oracle(&poly(&[(4, 0), (-4, 0), (1, 0)])).unwrap();
        assert!(d.norm() < 1e-8 * 16.0);
        // padded operands are rejected
        assert!(matches!(
            resultant_root_oracle(&poly(&[(1, 0), (1, 0), (0, 0)]), &q),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn float_determinant_partial_pivot() {
        use crate::scalar::C64;
        // needs a row swap to avoid the zero pivot
        let rows = vec![
            vec![C64::new(0.0, 0.0), C64::new(2.0, 0.0)],
            vec![C64::new(1.0, 0.0), C64::new(3.0, 0.0)],
        ];
        assert!((det(&rows) - C64::new(-2.0, 0.0)).norm() < 1e-14);
    }
}
