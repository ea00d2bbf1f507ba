//! Verification suites: closed-form references for the degree-1 and
//! degree-2 forms, the three structural identities of the quadratic map on
//! random exact samples, and oracle-equivalence runs for the elimination
//! machinery.
//!
//! All sample points come from the deterministic [`crate::sample`] stream,
//! so a (suite, n, samples, seed) tuple fully determines every report.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;
use num_traits::{One, Zero};

use crate::elim;
use crate::poly::ComplexPoly;
use crate::quadmap::{self, SpectralFactor, TrigPoly};
use crate::sample::SampleRng;
use crate::scalar::{GaussRational, Rational, Scalar, C64};
use crate::Result;

/// Outcome of one suite run; `failures` carries one witness line per failed
/// sample.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: String,
    pub n: Option<usize>,
    pub samples: usize,
    pub passed: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: String, n: Option<usize>, samples: usize) -> Self {
        SuiteReport {
            name,
            n,
            samples,
            passed: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failures.push(witness());
        }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty() && self.passed == self.samples
    }
}

// ---------------------------------------------------------------------------
// Closed-form references for n = 1 and n = 2
// ---------------------------------------------------------------------------

fn real(r: Rational) -> GaussRational {
    GaussRational::from_rational(r)
}

/// Degree-1 Möbius discriminant: `V(x0, x1) = x0² − |x1|²` (x0 real).
pub fn v_n1_reference(x0: &Rational, x1: &GaussRational) -> GaussRational {
    real(x0 * x0 - x1.norm_sq())
}

/// Degree-1 boundary form: `Dis₂(y0, y1) = 4(y0² − |y1|²)` (y0 real).
pub fn dis2_n1_reference(y0: &Rational, y1: &GaussRational) -> GaussRational {
    real(Rational::from_integer(4.into()) * (y0 * y0 - y1.norm_sq()))
}

/// Degree-2 Möbius discriminant (x0 real):
/// `V = (x0²−|x2|²)² − (x0·x1 − conj(x1)·x2)·(x0·conj(x1) − conj(x2)·x1)`.
///
/// Consistency pins this form: squaring it reproduces Dis₂/|Dis|² on the
/// image of Φ, and it agrees with the Sylvester determinant and the
/// root-pair product everywhere.
pub fn v_n2_reference(x0: &Rational, x1: &GaussRational, x2: &GaussRational) -> GaussRational {
    let g0 = real(x0.clone());
    let a = &g0 * &g0 - real(x2.norm_sq());
    let b = &g0 * x1 - &x1.conj() * x2;
    let c = &g0 * &x1.conj() - &x2.conj() * x1;
    &(&a * &a) - &(&b * &c)
}

/// Degree-2 boundary form, as the explicit 16-term expansion in
/// y0, y1, conj(y1), y2, conj(y2).
pub fn dis2_n2_reference(y0: &Rational, y1: &GaussRational, y2: &GaussRational) -> GaussRational {
    // (coefficient, exponents of [y0, y1, conj y1, y2, conj y2])
    const TERMS: [(i64, [u32; 5]); 16] = [
        (36, [1, 3, 1, 0, 1]),
        (-320, [2, 1, 1, 1, 1]),
        (-4, [0, 3, 3, 0, 0]),
        (256, [4, 0, 0, 1, 1]),
        (-32, [3, 0, 2, 1, 0]),
        (-27, [0, 4, 0, 0, 2]),
        (-512, [2, 0, 0, 2, 2]),
        (288, [1, 0, 2, 2, 1]),
        (36, [1, 1, 3, 1, 0]),
        (4, [2, 2, 2, 0, 0]),
        (-32, [3, 2, 0, 0, 1]),
        (-192, [0, 1, 1, 2, 2]),
        (-6, [0, 2, 2, 1, 1]),
        (288, [1, 2, 0, 1, 2]),
        (256, [0, 0, 0, 3, 3]),
        (-27, [0, 0, 4, 2, 0]),
    ];
    let vars = [
        real(y0.clone()),
        y1.clone(),
        y1.conj(),
        y2.clone(),
        y2.conj(),
    ];
    let mut acc = GaussRational::zero();
    for (coeff, exps) in TERMS {
        let mut term = GaussRational::from_int(coeff);
        for (v, &e) in vars.iter().zip(exps.iter()) {
            for _ in 0..e {
                term = &term * v;
            }
        }
        acc = &acc + &term;
    }
    acc
}

// ---------------------------------------------------------------------------
// Random exact instances
// ---------------------------------------------------------------------------

const NUM_BOUND: i64 = 6;
const DEN_BOUND: i64 = 3;

/// Random spectral factor of degree n: x0 a positive rational, higher
/// coefficients Gaussian rationals.
pub fn random_spectral_factor(
    rng: &mut SampleRng,
    n: usize,
    lead_nonzero: bool,
) -> SpectralFactor<GaussRational> {
    let mut coeffs = Vec::with_capacity(n + 1);
    coeffs.push(real(rng.rational_positive(NUM_BOUND, DEN_BOUND)));
    for k in 1..=n {
        if k == n && lead_nonzero {
            coeffs.push(rng.gauss_nonzero(NUM_BOUND, DEN_BOUND));
        } else {
            coeffs.push(rng.gauss(NUM_BOUND, DEN_BOUND));
        }
    }
    SpectralFactor::new(ComplexPoly::new(coeffs)).expect("x0 > 0 by construction")
}

/// Random root multiset for a degree-n factor with a planted double root of
/// rational modulus (real rational or a Pythagorean point), plus a leading
/// coefficient making x0 real positive. Returns (lead, roots).
pub fn random_double_root_instance(
    rng: &mut SampleRng,
    n: usize,
) -> (GaussRational, Vec<GaussRational>) {
    debug_assert!(n >= 2);
    let magnitude = Rational::new(rng.i64_in(1, 5).into(), rng.i64_in(1, 2).into());
    let z_d = if rng.below(2) == 0 {
        let sign = if rng.below(2) == 0 { 1 } else { -1 };
        real(magnitude * Rational::from_integer(sign.into()))
    } else {
        // Pythagorean unit (3+4i)/5 keeps |z| rational
        let unit = GaussRational::from_ratios(3, 5, 4, 5);
        &real(magnitude) * &unit
    };
    let mut roots = Vec::with_capacity(n);
    roots.push(z_d.clone());
    roots.push(z_d);
    for _ in 2..n {
        roots.push(rng.gauss_nonzero(NUM_BOUND, DEN_BOUND));
    }
    let w: GaussRational = roots
        .iter()
        .fold(GaussRational::one(), |acc, r| &acc * &(-r.clone()));
    let s = real(rng.rational_positive(NUM_BOUND, DEN_BOUND));
    let lead = &s * &w.inv().expect("roots are nonzero");
    (lead, roots)
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

/// Example-1 identities at random exact points: generated Dis₂ against
/// `4(y0²−|y1|²)` and generated V against `x0²−|x1|²`.
pub fn example1_suite(samples: usize, seed: u64) -> SuiteReport {
    let mut rng = SampleRng::new(seed);
    let mut report = SuiteReport::new("example1".into(), Some(1), samples);
    for _ in 0..samples {
        let y0 = rng.rational(NUM_BOUND, DEN_BOUND);
        let y1 = rng.gauss_nonzero(NUM_BOUND, DEN_BOUND);
        let x0 = rng.rational_nonzero(NUM_BOUND, DEN_BOUND);
        let x1 = rng.gauss(NUM_BOUND, DEN_BOUND);
        let y = TrigPoly::new(alloc::vec![real(y0.clone()), y1.clone()]).expect("y0 real");
        let dis2_residual = elim::dis2(&y)
            .map(|d| &d - &dis2_n1_reference(&y0, &y1))
            .unwrap_or_else(|_| GaussRational::one());
        let x = ComplexPoly::new(alloc::vec![real(x0.clone()), x1.clone()]);
        let v_residual = &elim::mobius_discriminant(&x) - &v_n1_reference(&x0, &x1);
        report.record(dis2_residual.is_zero() && v_residual.is_zero(), || {
            format!(
                "y = ({y0}, {y1}), x = ({x0}, {x1}): dis2 residual {dis2_residual}, V residual {v_residual}"
            )
        });
    }
    report
}

/// Example-2 identities at random exact points with y2 ≠ 0: generated Dis₂
/// against the 16-term expansion and generated V against the closed n = 2
/// form.
pub fn example2_suite(samples: usize, seed: u64) -> SuiteReport {
    let mut rng = SampleRng::new(seed);
    let mut report = SuiteReport::new("example2".into(), Some(2), samples);
    for _ in 0..samples {
        let y0 = rng.rational(NUM_BOUND, DEN_BOUND);
        let y1 = rng.gauss(NUM_BOUND, DEN_BOUND);
        let y2 = rng.gauss_nonzero(NUM_BOUND, DEN_BOUND);
        let x0 = rng.rational_nonzero(NUM_BOUND, DEN_BOUND);
        let x1 = rng.gauss(NUM_BOUND, DEN_BOUND);
        let x2 = rng.gauss(NUM_BOUND, DEN_BOUND);
        let y =
            TrigPoly::new(alloc::vec![real(y0.clone()), y1.clone(), y2.clone()]).expect("y0 real");
        let dis2_residual = elim::dis2(&y)
            .map(|d| &d - &dis2_n2_reference(&y0, &y1, &y2))
            .unwrap_or_else(|_| GaussRational::one());
        let x = ComplexPoly::new(alloc::vec![real(x0.clone()), x1.clone(), x2.clone()]);
        let v_residual = &elim::mobius_discriminant(&x) - &v_n2_reference(&x0, &x1, &x2);
        report.record(dis2_residual.is_zero() && v_residual.is_zero(), || {
            format!(
                "y = ({y0}, {y1}, {y2}), x = ({x0}, {x1}, {x2}): dis2 residual {dis2_residual}, V residual {v_residual}"
            )
        });
    }
    report
}

/// The determinant identity (suite "lemma1") at degree n:
/// |det dΦ| = |2·x0·V(X)| exactly on every sample, and the sign ratio is
/// ±1 and constant across samples.
pub fn lemma1_suite(n: usize, samples: usize, seed: u64) -> SuiteReport {
    let mut rng = SampleRng::new(seed);
    let mut report = SuiteReport::new("lemma1".into(), Some(n), samples);
    let mut seen_ratio: Option<GaussRational> = None;
    for _ in 0..samples {
        let x = random_spectral_factor(&mut rng, n, false);
        let check = quadmap::verify_lemma1(&x);
        let magnitude_ok = {
            let d2 = &check.det * &check.det.conj();
            let c2 = &check.closed_form * &check.closed_form.conj();
            d2 == c2
        };
        let ratio_ok = match &check.ratio {
            None => check.det.is_zero(),
            Some(r) => {
                let pm_one = *r == GaussRational::one() || *r == -GaussRational::one();
                let constant = match &seen_ratio {
                    None => {
                        seen_ratio = Some(r.clone());
                        true
                    }
                    Some(prev) => prev == r,
                };
                pm_one && constant
            }
        };
        report.record(magnitude_ok && ratio_ok, || {
            format!(
                "X = {:?}: det {}, closed {}",
                x.poly().coeffs(),
                check.det,
                check.closed_form
            )
        });
    }
    report
}

/// The boundary-form factorization identity (suite "lemma2") at degree n:
/// Dis₂(Φ(X)) = |Dis(X)|²·V(X)² exactly on samples with x_n ≠ 0.
pub fn lemma2_suite(n: usize, samples: usize, seed: u64) -> SuiteReport {
    let mut rng = SampleRng::new(seed);
    let mut report = SuiteReport::new("lemma2".into(), Some(n), samples);
    for _ in 0..samples {
        let x = random_spectral_factor(&mut rng, n, true);
        let ok = match quadmap::verify_lemma2(&x) {
            Ok(check) => check.lhs == check.rhs,
            Err(_) => false,
        };
        report.record(ok, || format!("X = {:?}", x.poly().coeffs()));
    }
    report
}

/// The reflected-root shadow identity (suite "lemma3") at degree n:
/// Q satisfies Q·Q* = X·X*, q0 > 0 and V(Q) = 0 — exactly on exact-root
/// instances, and within 1e−9 relative through the floating pipeline.
pub fn lemma3_suite(n: usize, samples: usize, seed: u64) -> SuiteReport {
    let mut rng = SampleRng::new(seed);
    let mut report = SuiteReport::new("lemma3".into(), Some(n), samples);
    for k in 0..samples {
        let (lead, roots) = random_double_root_instance(&mut rng, n);
        let x = ComplexPoly::from_roots(lead.clone(), &roots);
        let ok = if k % 2 == 0 {
            exact_shadow_ok(&lead, &roots, &x)
        } else {
            float_shadow_ok(&x, roots[0].to_c64()).unwrap_or(false)
        };
        report.record(ok, || format!("lead {lead}, roots {roots:?}"));
    }
    report
}

fn exact_shadow_ok(
    lead: &GaussRational,
    roots: &[GaussRational],
    x: &ComplexPoly<GaussRational>,
) -> bool {
    let q = match quadmap::lemma3_shadow_exact(lead, roots, 0) {
        Ok(q) => q,
        Err(_) => return false,
    };
    let products_equal = q.mul(&q.reciprocal()) == x.mul(&x.reciprocal());
    let q0 = q.coeff(0);
    let q0_ok = q0.is_real() && q0.to_c64().re > 0.0;
    let v_ok = elim::mobius_discriminant(&q).is_zero();
    products_equal && q0_ok && v_ok
}

fn float_shadow_ok(x: &ComplexPoly<GaussRational>, z_d: C64) -> Result<bool> {
    let xf = x.to_c64_poly();
    let q = quadmap::lemma3_shadow(&xf, z_d)?;
    let lhs = q.mul(&q.reciprocal());
    let rhs = xf.mul(&xf.reciprocal());
    let scale = rhs.coeff_scale();
    let products_close = lhs
        .coeffs()
        .iter()
        .zip(rhs.coeffs().iter())
        .all(|(a, b)| (a - b).norm() <= 1e-9 * scale);
    let q0 = q.coeff(0);
    let q0_ok = q0.re > 0.0 && q0.im.abs() <= 1e-9 * q0.re.abs();
    let v = elim::mobius_discriminant(&q);
    let n = q.formal_degree();
    let vscale: f64 = q
        .coeffs()
        .iter()
        .map(|c| c.norm())
        .sum::<f64>()
        .powi(2 * n as i32);
    let v_ok = v.norm() <= 1e-9 * vscale;
    Ok(products_close && q0_ok && v_ok)
}

/// Resultant oracle equivalence: Sylvester determinant against the Cayley
/// root product — numerically on random float pairs, exactly on pairs built
/// from chosen rational roots.
pub fn oracle_resultant_suite(
    float_samples: usize,
    exact_samples: usize,
    seed: u64,
) -> SuiteReport {
    let mut rng = SampleRng::new(seed);
    let total = float_samples + exact_samples;
    let mut report = SuiteReport::new("oracle-resultant".into(), None, total);
    for _ in 0..float_samples {
        let dp = rng.i64_in(1, 8) as usize;
        let p = random_float_poly(&mut rng, dp);
        let dq = rng.i64_in(1, 8) as usize;
        let q = random_float_poly(&mut rng, dq);
        let direct = elim::resultant(&p, &q);
        let ok = match elim::resultant_root_oracle(&p, &q) {
            Ok(oracle) => rel_close(direct, oracle, 1e-8),
            Err(_) => false,
        };
        report.record(ok, || format!("P = {:?}, Q = {:?}", p.coeffs(), q.coeffs()));
    }
    for _ in 0..exact_samples {
        let dp = rng.i64_in(1, 4) as usize;
        let (pl, pr) = random_rational_roots(&mut rng, dp);
        let dq = rng.i64_in(1, 4) as usize;
        let (ql, qr) = random_rational_roots(&mut rng, dq);
        let p = ComplexPoly::from_roots(pl.clone(), &pr);
        let q = ComplexPoly::from_roots(ql.clone(), &qr);
        // Cayley product over the chosen roots, in exact arithmetic
        let mut cayley = pow_gauss(&pl, qr.len()) * pow_gauss(&ql, pr.len());
        for a in &pr {
            for b in &qr {
                cayley = &cayley * &(a - b);
            }
        }
        let ok = elim::resultant(&p, &q) == cayley;
        report.record(ok, || format!("roots {pr:?} vs {qr:?}"));
    }
    report
}

/// Discriminant oracle equivalence, same structure as the resultant suite.
pub fn oracle_discriminant_suite(
    float_samples: usize,
    exact_samples: usize,
    seed: u64,
) -> SuiteReport {
    let mut rng = SampleRng::new(seed);
    let total = float_samples + exact_samples;
    let mut report = SuiteReport::new("oracle-discriminant".into(), None, total);
    for _ in 0..float_samples {
        let d = rng.i64_in(2, 8) as usize;
        let p = random_float_poly(&mut rng, d);
        let ok = match (elim::discriminant(&p), elim::discriminant_root_oracle(&p)) {
            (Ok(direct), Ok(oracle)) => rel_close(direct, oracle, 1e-8),
            _ => false,
        };
        report.record(ok, || format!("P = {:?}", p.coeffs()));
    }
    for _ in 0..exact_samples {
        let d = rng.i64_in(2, 5) as usize;
        let (lead, roots) = random_rational_roots(&mut rng, d);
        let p = ComplexPoly::from_roots(lead.clone(), &roots);
        let mut expect = pow_gauss(&lead, 2 * roots.len() - 2);
        for i in 0..roots.len() {
            for j in 0..i {
                let d = &roots[i] - &roots[j];
                expect = &expect * &(&d * &d);
            }
        }
        let ok = elim::discriminant(&p).map(|d| d == expect).unwrap_or(false);
        report.record(ok, || format!("roots {roots:?}"));
    }
    report
}

fn random_float_poly(rng: &mut SampleRng, degree: usize) -> ComplexPoly<C64> {
    let mut coeffs: Vec<C64> = (0..=degree).map(|_| rng.c64_box(1.0)).collect();
    while coeffs[degree].norm() < 0.3 {
        coeffs[degree] = rng.c64_box(1.0);
    }
    ComplexPoly::new(coeffs)
}

fn random_rational_roots(
    rng: &mut SampleRng,
    degree: usize,
) -> (GaussRational, Vec<GaussRational>) {
    let lead = rng.gauss_nonzero(3, 2);
    let roots = (0..degree).map(|_| rng.gauss(3, 2)).collect();
    (lead, roots)
}

fn pow_gauss(base: &GaussRational, exp: usize) -> GaussRational {
    let mut acc = GaussRational::one();
    for _ in 0..exp {
        acc = &acc * base;
    }
    acc
}

fn rel_close(a: C64, b: C64, tol: f64) -> bool {
    let scale = a.norm().max(b.norm());
    if scale == 0.0 {
        return true;
    }
    (a - b).norm() <= tol * scale
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_suites_pass() {
        assert!(example1_suite(25, 11).ok());
        assert!(example2_suite(10, 12).ok());
    }

    #[test]
    fn lemma_suites_pass_small() {
        assert!(lemma1_suite(1, 10, 13).ok());
        assert!(lemma1_suite(2, 10, 14).ok());
        assert!(lemma2_suite(1, 5, 15).ok());
        assert!(lemma2_suite(2, 5, 16).ok());
        assert!(lemma3_suite(2, 6, 17).ok());
    }

    #[test]
    fn oracle_suites_pass_small() {
        assert!(oracle_resultant_suite(10, 10, 18).ok());
        assert!(oracle_discriminant_suite(10, 10, 19).ok());
    }

    #[test]
    fn reference_spot_values() {
        // Dis₂(1, 2) = 4(1−4) = −12
        let y0 = Rational::from_integer(1.into());
        let y1 = GaussRational::from_int(2);
        assert_eq!(dis2_n1_reference(&y0, &y1), GaussRational::from_int(-12));
        // V(2, 1+i) = 4 − 2 = 2
        let x0 = Rational::from_integer(2.into());
        let x1 = GaussRational::from_ints(1, 1);
        assert_eq!(v_n1_reference(&x0, &x1), GaussRational::from_int(2));
        // the 16-term form at y1 = 0 collapses to 256|y2|²(y0²−|y2|²)²
        let y0 = Rational::from_integer(3.into());
        let y2 = GaussRational::from_ints(1, 2);
        let expect = GaussRational::from_int(256 * 5 * (9 - 5) * (9 - 5));
        assert_eq!(dis2_n2_reference(&y0, &GaussRational::zero(), &y2), expect);
    }
}
