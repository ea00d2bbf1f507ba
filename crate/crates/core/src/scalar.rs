//! Exact and floating coefficient arithmetic underlying every other module.
//!
//! Two coefficient fields are supported through the [`Scalar`] trait:
//! [`GaussRational`] (exact complex rationals, the default for identity
//! verification) and [`C64`] (complex doubles, used where roots are needed).

use alloc::string::ToString;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_complex::Complex;
use num_rational::BigRational;
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Exact rational number in canonical form (reduced, positive denominator).
pub type Rational = BigRational;

/// Complex double; the floating coefficient field.
pub type C64 = Complex<f64>;

/// Coefficient field shared by the polynomial and elimination machinery.
///
/// `EXACT` selects the elimination strategy (fraction-free vs partially
/// pivoted) and decides whether identity checks are literal equalities.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    const EXACT: bool;

    fn conj(&self) -> Self;
    fn from_int(v: i64) -> Self;
    fn to_c64(&self) -> C64;
    /// True when the imaginary part is (exactly) zero.
    fn is_real(&self) -> bool;
    /// Squared floating magnitude; used for pivoting and scale estimates.
    fn mag_sq(&self) -> f64 {
        self.to_c64().norm_sqr()
    }
}

// ---------------------------------------------------------------------------
// GaussRational
// ---------------------------------------------------------------------------

/// Complex number with rational real and imaginary parts.
///
/// All arithmetic is exact; results are renormalized eagerly by the
/// underlying rational type, so equality is structural.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GaussRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRational { re, im }
    }

    /// Real integer embedding.
    pub fn from_int(v: i64) -> Self {
        GaussRational {
            re: Rational::from_integer(BigInt::from(v)),
            im: Rational::zero(),
        }
    }

    /// Gaussian integer a + b·i.
    pub fn from_ints(a: i64, b: i64) -> Self {
        GaussRational {
            re: Rational::from_integer(BigInt::from(a)),
            im: Rational::from_integer(BigInt::from(b)),
        }
    }

    /// (p/q) + (r/s)·i from integer parts; panics if a denominator is zero.
    pub fn from_ratios(p: i64, q: i64, r: i64, s: i64) -> Self {
        GaussRational {
            re: Rational::new(BigInt::from(p), BigInt::from(q)),
            im: Rational::new(BigInt::from(r), BigInt::from(s)),
        }
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussRational {
            re,
            im: Rational::zero(),
        }
    }

    /// |w|² = re² + im², an exact nonnegative rational.
    pub fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sq();
        Some(GaussRational {
            re: &self.re / &n,
            im: -(&self.im) / &n,
        })
    }

    /// Unit-circle reflection z ↦ 1/conj(z) = z/|z|², exactly.
    pub fn reflect(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain(
                "cannot reflect 0 in the unit circle".to_string(),
            ));
        }
        let n = self.norm_sq();
        Ok(GaussRational {
            re: &self.re / &n,
            im: &self.im / &n,
        })
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}{}i", self.re, self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl Add<&GaussRational> for &GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: &GaussRational) -> GaussRational {
        GaussRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub<&GaussRational> for &GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: &GaussRational) -> GaussRational {
        GaussRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul<&GaussRational> for &GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: &GaussRational) -> GaussRational {
        GaussRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div<&GaussRational> for &GaussRational {
    type Output = GaussRational;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &GaussRational) -> GaussRational {
        let inv = rhs.inv().expect("division by zero GaussRational");
        self * &inv
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident, $method:ident);*) => {$(
        impl $trait for GaussRational {
            type Output = GaussRational;
            fn $method(self, rhs: GaussRational) -> GaussRational {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_value_ops!(Add, add; Sub, sub; Mul, mul; Div, div);

impl Neg for GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Zero for GaussRational {
    fn zero() -> Self {
        GaussRational::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRational {
    fn one() -> Self {
        GaussRational::from_int(1)
    }
}

impl Scalar for GaussRational {
    const EXACT: bool = true;

    fn conj(&self) -> Self {
        GaussRational {
            re: self.re.clone(),
            im: -(&self.im),
        }
    }

    fn from_int(v: i64) -> Self {
        GaussRational::from_int(v)
    }

    fn to_c64(&self) -> C64 {
        C64::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }

    fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

impl Scalar for C64 {
    const EXACT: bool = false;

    fn conj(&self) -> Self {
        Complex::conj(self)
    }

    fn from_int(v: i64) -> Self {
        C64::new(v as f64, 0.0)
    }

    fn to_c64(&self) -> C64 {
        *self
    }

    fn is_real(&self) -> bool {
        self.im == 0.0
    }
}

// ---------------------------------------------------------------------------
// Conversion to floats
// ---------------------------------------------------------------------------

/// Nearest-double conversion (ties to even), exact for any magnitude that
/// fits; overflows to ±infinity.
pub fn rational_to_f64(r: &Rational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    let negative = r.numer().sign() == Sign::Minus;
    let a = r.numer().magnitude();
    let b = r.denom().magnitude();
    let e = a.bits() as i64 - b.bits() as i64;
    let mag = if e > 1026 {
        f64::INFINITY
    } else if e < -1080 {
        0.0
    } else {
        // First-order estimate from the top 64 bits of each side, then snap
        // to the true nearest double by exact comparison with the neighbors.
        let top = |x: &num_bigint::BigUint| -> (f64, i64) {
            let shift = x.bits().saturating_sub(64);
            let t = (x >> shift).to_f64().unwrap_or(f64::INFINITY);
            (t, shift as i64)
        };
        let (ta, sa) = top(a);
        let (tb, sb) = top(b);
        let est = (ta / tb) * pow2(sa - sb);
        nearest_around(est.abs(), r)
    };
    if negative {
        -mag
    } else {
        mag
    }
}

fn pow2(k: i64) -> f64 {
    if k >= 1024 {
        f64::INFINITY
    } else if k <= -1075 {
        0.0
    } else {
        // split to avoid powi range limits at the boundaries
        let h = k / 2;
        2f64.powi(h as i32) * 2f64.powi((k - h) as i32)
    }
}

/// Pick the nearest double to |r| among a first-order estimate and its
/// immediate neighbors, comparing exactly in rational arithmetic. The
/// estimate is within 2 ulp of the truth, so a ±3 ulp window suffices.
fn nearest_around(est: f64, r: &Rational) -> f64 {
    let target = r.abs();
    let mut candidates = [est; 7];
    for i in 1..=3 {
        candidates[i] = candidates[i - 1].next_up();
    }
    candidates[4] = est.next_down();
    for i in 5..=6 {
        candidates[i] = candidates[i - 1].next_down();
    }
    let mut best = f64::INFINITY;
    let mut best_err: Option<Rational> = None;
    for c in candidates {
        if !c.is_finite() || c < 0.0 {
            continue;
        }
        let exact = Rational::from_float(c).unwrap_or_else(Rational::zero);
        let err = (&target - &exact).abs();
        let better = match &best_err {
            None => true,
            Some(e) => err < *e || (err == *e && (c.to_bits() & 1) < (best.to_bits() & 1)),
        };
        if better {
            best = c;
            best_err = Some(err);
        }
    }
    if best.is_finite() {
        best
    } else {
        f64::INFINITY
    }
}

/// Parses the "p/q" string form (q omitted when 1); rejects zero
/// denominators. The inverse of the `Display` form used in reports.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let bad = |part: &str| Error::Domain(alloc::format!("invalid rational literal {part:?}"));
    let num: BigInt = num.trim().parse().map_err(|_| bad(num))?;
    let den: BigInt = den.trim().parse().map_err(|_| bad(den))?;
    if den.is_zero() {
        return Err(Error::Domain(alloc::format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Nearest-float image of an exact complex value; errors when a component
/// overflows to a non-finite double.
pub fn to_float(a: &GaussRational) -> Result<C64> {
    let z = a.to_c64();
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::NonFinite(alloc::format!(
            "magnitude of {a} exceeds double range"
        )))
    }
}
