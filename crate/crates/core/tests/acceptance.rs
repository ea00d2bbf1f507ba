//! Acceptance suite: every criterion is one test that prints a PASS line
//! (run with `--nocapture` to see them) and panics with a witness on
//! failure. Tolerances are pinned here, in code.

use num_traits::{One, Zero};

use poscone_core::cone::{self, Classification, DEFAULT_TOL};
use poscone_core::elim;
use poscone_core::poly::ComplexPoly;
use poscone_core::quadmap::{self, SpectralFactor, TrigPoly};
use poscone_core::roots;
use poscone_core::sample::SampleRng;
use poscone_core::scalar::{GaussRational, C64};
use poscone_core::starlike;
use poscone_core::verify;

const TAU: f64 = core::f64::consts::TAU;
const PI: f64 = core::f64::consts::PI;

fn pass(line: &str) {
    println!("[PASS] {line}");
}

#[test]
fn criterion_01_example1_golden() {
    let report = verify::example1_suite(100, 0xA1);
    assert!(report.ok(), "[FAIL] criterion 1: {:?}", report.failures);
    pass(
        "criterion 1: Dis2 = 4(y0^2-|y1|^2) and V = x0^2-|x1|^2 exactly at 100 exact points (n=1)",
    );
}

#[test]
fn criterion_02_example2_golden() {
    let report = verify::example2_suite(100, 0xA2);
    assert!(report.ok(), "[FAIL] criterion 2: {:?}", report.failures);
    pass("criterion 2: Dis2 matches the 16-term expansion and V its closed form exactly at 100 exact points (n=2)");
}

#[test]
fn criterion_03_lemma1() {
    for n in 1..=5 {
        let report = verify::lemma1_suite(n, 50, 0xA3_00 + n as u64);
        assert!(
            report.ok(),
            "[FAIL] criterion 3 at n={n}: {:?}",
            report.failures
        );
    }
    pass("criterion 3: |det dPhi| = |2 x0 Res(X,X*)| exactly with constant sign per n, 50 samples each, n=1..5");
}

#[test]
fn criterion_04_lemma2() {
    for n in 1..=4 {
        let report = verify::lemma2_suite(n, 25, 0xA4_00 + n as u64);
        assert!(
            report.ok(),
            "[FAIL] criterion 4 at n={n}: {:?}",
            report.failures
        );
    }
    pass("criterion 4: dis2(phi(X)) = |Dis(X)|^2 V(X)^2 exactly, 25 samples each, n=1..4");
}

#[test]
fn criterion_05_lemma3_shadow() {
    for n in 2..=5 {
        let report = verify::lemma3_suite(n, 20, 0xA5_00 + n as u64);
        assert!(
            report.ok(),
            "[FAIL] criterion 5 at n={n}: {:?}",
            report.failures
        );
    }
    pass("criterion 5: shadow Q has Q Q* = X X* (exact / <=1e-9 rel), q0 > 0, |V(Q)| <= 1e-9 scale, 20 samples each, n=2..5");
}

/// Random outer-normalized float factor of degree n: roots sampled outside
/// the closed disk, x0 made exactly real positive.
fn random_outer_factor(rng: &mut SampleRng, n: usize) -> SpectralFactor<C64> {
    let roots_v: Vec<C64> = (0..n)
        .map(|_| C64::from_polar(rng.f64_in(1.15, 2.8), rng.f64_in(0.0, TAU)))
        .collect();
    let s = rng.f64_in(0.5, 2.0);
    let w: C64 = roots_v.iter().fold(C64::one(), |acc, r| acc * (-r));
    let c = C64::new(s, 0.0) * w.conj() / w.norm();
    let x = ComplexPoly::from_roots(c, &roots_v);
    let mut coeffs = x.coeffs().to_vec();
    coeffs[0] = C64::new(coeffs[0].re, 0.0);
    SpectralFactor::new(ComplexPoly::new(coeffs)).expect("x0 > 0 by construction")
}

#[test]
fn criterion_06_fejer_roundtrip() {
    let mut rng = SampleRng::new(0xA6);
    for i in 0..200usize {
        let n = 1 + (i % 6);
        let x = random_outer_factor(&mut rng, n);
        let y = quadmap::phi(&x);
        let back = cone::factor(&y, DEFAULT_TOL)
            .unwrap_or_else(|e| panic!("[FAIL] criterion 6 sample {i}: factor failed: {e}"));
        let scale = x.poly().coeff_scale();
        for k in 0..=n {
            let diff = (x.poly().coeff(k) - back.poly().coeff(k)).norm();
            assert!(
                diff <= 1e-9 * scale,
                "[FAIL] criterion 6 sample {i}: coefficient {k} off by {diff:e}"
            );
        }
        for j in 0..64 {
            let t = TAU * (j as f64) / 64.0;
            let w = C64::new(t.cos(), t.sin());
            let lhs = x.poly().eval(&w).norm_sqr();
            let rhs = 2.0 * cone::eval_t(&y, t);
            assert!(
                (lhs - rhs).abs() <= 1e-9 * lhs.max(rhs),
                "[FAIL] criterion 6 sample {i}: |X|^2 = 2T off at t = {t}"
            );
        }
    }
    pass("criterion 6: factor(phi(X)) = X within 1e-9 and |X(e^it)|^2 = 2 T(t) at 64 angles, 200 outer factors, n=1..6");
}

const PYTHAGOREAN: [(i64, i64, i64); 4] = [(3, 4, 5), (5, 12, 13), (8, 15, 17), (20, 21, 29)];

/// Exact spectral factor with one planted unit-circle root (a Pythagorean
/// point) and otherwise random nonzero roots.
fn exact_boundary_factor(rng: &mut SampleRng, n: usize) -> SpectralFactor<GaussRational> {
    let (a, b, c) = PYTHAGOREAN[rng.below(PYTHAGOREAN.len() as u64) as usize];
    let sign = if rng.below(2) == 0 { 1 } else { -1 };
    let w = GaussRational::from_ratios(a, c, sign * b, c);
    let mut roots_v = vec![w];
    for _ in 1..n {
        roots_v.push(rng.gauss_nonzero(4, 2));
    }
    let prod: GaussRational = roots_v
        .iter()
        .fold(GaussRational::one(), |acc, r| &acc * &(-r.clone()));
    let s = GaussRational::from_rational(rng.rational_positive(4, 2));
    let lead = &s * &prod.inv().expect("roots nonzero");
    SpectralFactor::new(ComplexPoly::from_roots(lead, &roots_v)).expect("x0 = s > 0")
}

#[test]
fn criterion_07_classification_vs_brute_force() {
    let mut rng = SampleRng::new(0xA7);
    let mut guarded = 0usize;
    for i in 0..500usize {
        let n = 1 + (i % 6);
        let mut ys = vec![C64::new(rng.f64_in(-1.0, 1.0), 0.0)];
        for _ in 0..n {
            ys.push(rng.c64_box(1.0));
        }
        let y = TrigPoly::new(ys).unwrap();
        let scale = y.coeff_scale();
        let mut grid_min = f64::INFINITY;
        for k in 0..4096 {
            let t = TAU * (k as f64) / 4096.0;
            grid_min = grid_min.min(cone::eval_t(&y, t));
        }
        if grid_min.abs() <= 1e-6 * scale {
            guarded += 1;
            continue;
        }
        let verdict = cone::classify(&y, DEFAULT_TOL)
            .unwrap_or_else(|e| panic!("[FAIL] criterion 7 sample {i}: classify failed: {e}"));
        let expect = if grid_min > 0.0 {
            Classification::Inside
        } else {
            Classification::Outside
        };
        assert_eq!(
            verdict.classification, expect,
            "[FAIL] criterion 7 sample {i}: grid min {grid_min} vs {:?}",
            verdict.classification
        );
    }
    assert!(
        guarded <= 5,
        "[FAIL] criterion 7: {guarded} samples fell inside the sign guard band"
    );

    // manufactured boundary instances: float pipeline, all n
    for n in 1..=6usize {
        for _ in 0..3 {
            let theta = rng.f64_in(0.0, TAU);
            let mut roots_v = vec![C64::from_polar(1.0, theta)];
            for _ in 1..n {
                roots_v.push(C64::from_polar(rng.f64_in(1.2, 2.4), rng.f64_in(0.0, TAU)));
            }
            let s = rng.f64_in(0.5, 1.5);
            let w: C64 = roots_v.iter().fold(C64::one(), |acc, r| acc * (-r));
            let c = C64::new(s, 0.0) * w.conj() / w.norm();
            let xp = ComplexPoly::from_roots(c, &roots_v);
            let mut coeffs = xp.coeffs().to_vec();
            coeffs[0] = C64::new(coeffs[0].re, 0.0);
            let x = SpectralFactor::new(ComplexPoly::new(coeffs)).unwrap();
            let y = quadmap::phi(&x);
            let verdict = cone::classify(&y, DEFAULT_TOL).unwrap();
            assert_eq!(
                verdict.classification,
                Classification::Boundary,
                "[FAIL] criterion 7: planted circle root not classified Boundary (n={n})"
            );
            let scale = y.coeff_scale();
            let dis2 = verdict
                .dis2_value
                .expect("y_n nonzero for a degree-n factor");
            let bound = 1e-6 * scale.powi(4 * n as i32 - 2);
            assert!(
                dis2.norm() <= bound,
                "[FAIL] criterion 7: boundary dis2 {} exceeds {bound:e} (n={n})",
                dis2.norm()
            );
        }
        // exact pipeline: dis2 vanishes identically on the boundary
        for _ in 0..2 {
            let x = exact_boundary_factor(&mut rng, n);
            let y = quadmap::phi(&x);
            let verdict = cone::classify(&y, DEFAULT_TOL).unwrap();
            assert_eq!(
                verdict.classification,
                Classification::Boundary,
                "[FAIL] criterion 7: exact circle root not classified Boundary (n={n})"
            );
            let dis2 = verdict.dis2_value.expect("y_n nonzero");
            assert!(
                dis2.is_zero(),
                "[FAIL] criterion 7: exact boundary dis2 = {dis2} is not identically zero (n={n})"
            );
        }
    }
    pass("criterion 7: classify matches the 4096-point grid sign on 500 random Y (n<=6); planted circle roots give Boundary with |dis2| <= 1e-6 scale^(4n-2), exactly 0 in exact mode");
}

#[test]
fn criterion_08_oracle_equivalence() {
    let res = verify::oracle_resultant_suite(100, 50, 0xA8);
    assert!(
        res.ok(),
        "[FAIL] criterion 8 (resultant): {:?}",
        res.failures
    );
    let dis = verify::oracle_discriminant_suite(100, 50, 0xA8_01);
    assert!(
        dis.ok(),
        "[FAIL] criterion 8 (discriminant): {:?}",
        dis.failures
    );
    pass("criterion 8: Sylvester vs Cayley root product within 1e-8 on 100 float pairs, exact on 50 constructed pairs; same for discriminants");
}

#[test]
fn criterion_09_form_degrees() {
    let mut rng = SampleRng::new(0xA9);
    for n in 1..=4usize {
        for _ in 0..20 {
            // V homogeneity and reciprocal symmetry
            let x = ComplexPoly::new((0..=n).map(|_| rng.gauss(5, 3)).collect::<Vec<_>>());
            let t = GaussRational::from_rational(rng.rational_nonzero(5, 3));
            let v = elim::mobius_discriminant(&x);
            let v_scaled = elim::mobius_discriminant(&x.scale(&t));
            let mut tpow = GaussRational::one();
            for _ in 0..2 * n {
                tpow = &tpow * &t;
            }
            assert_eq!(
                v_scaled,
                &tpow * &v,
                "[FAIL] criterion 9: V(tX) != t^(2n) V(X) at n={n}"
            );
            let v_rec = elim::mobius_discriminant(&x.reciprocal());
            let expect = if n % 2 == 1 { -v.clone() } else { v.clone() };
            assert_eq!(
                v_rec, expect,
                "[FAIL] criterion 9: V(X*) != (-1)^n V(X) at n={n}"
            );

            // dis2 homogeneity (real rational scaling)
            let mut ys = vec![GaussRational::from_rational(rng.rational(5, 3))];
            for k in 1..=n {
                ys.push(if k == n {
                    rng.gauss_nonzero(5, 3)
                } else {
                    rng.gauss(5, 3)
                });
            }
            let y = TrigPoly::new(ys).unwrap();
            let d = elim::dis2(&y).unwrap();
            let d_scaled = elim::dis2(&y.scale(&t)).unwrap();
            let mut tpow = GaussRational::one();
            for _ in 0..4 * n - 2 {
                tpow = &tpow * &t;
            }
            assert_eq!(
                d_scaled,
                &tpow * &d,
                "[FAIL] criterion 9: dis2(tY) != t^(4n-2) dis2(Y) at n={n}"
            );
        }
    }
    pass("criterion 9: V(tX) = t^(2n) V(X), dis2(tY) = t^(4n-2) dis2(Y), V(X*) = (-1)^n V(X), exactly, 20 instances each, n=1..4");
}

/// Independent check of starlikeness for P with P(0) = 0: a 2048-point
/// circle sampling of Re(z P'(z) conj(P(z))) with 1e-8 margin, plus the
/// inner-root scan.
fn brute_force_starlike(p: &ComplexPoly<C64>) -> bool {
    let mut min = f64::INFINITY;
    for k in 0..2048 {
        let t = TAU * (k as f64) / 2048.0;
        let w = C64::new(t.cos(), t.sin());
        let v = (w * p.derivative().eval(&w) * p.eval(&w).conj()).re;
        min = min.min(v);
    }
    if min < -1e-8 {
        return false;
    }
    let q = ComplexPoly::new(p.coeffs()[1..].to_vec());
    if q.effective_degree().is_some_and(|d| d >= 1) {
        for root in roots::all_roots(&q).expect("root scan").roots {
            if root.location.norm() < 1.0 - 1e-7 {
                return false;
            }
        }
    }
    true
}

#[test]
fn criterion_10_starlike_family() {
    let cases = [
        (0.3, true),
        (0.49, true),
        (0.5, true),
        (0.51, false),
        (0.7, false),
    ];
    for (mag, expect) in cases {
        for phase in [0.0, 0.7] {
            let a = C64::from_polar(mag, phase);
            let p = ComplexPoly::new(vec![C64::zero(), C64::one(), a]);
            let report = starlike::is_starlike(&p, DEFAULT_TOL).unwrap();
            assert_eq!(
                report.is_starlike, expect,
                "[FAIL] criterion 10: z + a z^2 with |a| = {mag}, phase {phase}"
            );
            assert_eq!(
                brute_force_starlike(&p),
                expect,
                "[FAIL] criterion 10: brute-force sampler disagrees at |a| = {mag}, phase {phase}"
            );
        }
    }
    // boundary case a = 1/2: Boundary verdict with minimizer at pi
    let p = ComplexPoly::new(vec![C64::zero(), C64::one(), C64::new(0.5, 0.0)]);
    let report = starlike::is_starlike(&p, DEFAULT_TOL).unwrap();
    assert_eq!(
        report.cone_verdict.classification,
        Classification::Boundary,
        "[FAIL] criterion 10: a = 0.5 must sit on the cone boundary"
    );
    assert!(
        (report.cone_verdict.minimizer_t - PI).abs() <= 1e-6,
        "[FAIL] criterion 10: boundary minimizer {} is not pi",
        report.cone_verdict.minimizer_t
    );
    pass("criterion 10: z + a z^2 starlike iff |a| <= 1/2 on {0.3,0.49,0.5,0.51,0.7}, confirmed by the 2048-point sampler; a = 0.5 is Boundary with minimizer pi");
}
