//! JSON schemas for the CLI: scalars, polynomials, trigonometric
//! coefficient vectors, verdicts and reports.
//!
//! Exact scalars serialize as strings ("p/q", q omitted when 1) so reports
//! are bit-exact; floats serialize as numbers (shortest round-trip decimal).
//! Exact mode rejects numeric inputs rather than converting them.

use serde_json::{json, Map, Value};

use poscone_core::cone::{Classification, ConeVerdict};
use poscone_core::poly::ComplexPoly;
use poscone_core::quadmap::TrigPoly;
use poscone_core::scalar::{GaussRational, Rational, Scalar, C64};
use poscone_core::starlike::StarlikeReport;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mode {
    Exact,
    Float,
}

/// Scalar serialization for report payloads.
pub trait JsonScalar: Scalar {
    fn scalar_json(&self) -> Value;
    /// Real-valued scalars (dis2 and friends) render as a bare string or
    /// number.
    fn real_json(&self) -> Value;
}

impl JsonScalar for GaussRational {
    fn scalar_json(&self) -> Value {
        json!({ "re": self.re.to_string(), "im": self.im.to_string() })
    }
    fn real_json(&self) -> Value {
        Value::String(self.re.to_string())
    }
}

impl JsonScalar for C64 {
    fn scalar_json(&self) -> Value {
        json!({ "re": self.re, "im": self.im })
    }
    fn real_json(&self) -> Value {
        json!(self.re)
    }
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

fn parse_rational(s: &str) -> Result<Rational, String> {
    poscone_core::scalar::parse_rational(s).map_err(|e| e.to_string())
}

fn scalar_component(v: &Value, mode: Mode, what: &str) -> Result<Value, String> {
    let obj = v
        .as_object()
        .ok_or_else(|| format!("{what}: expected an object with \"re\" and \"im\""))?;
    for key in ["re", "im"] {
        if !obj.contains_key(key) {
            return Err(format!("{what}: missing {key:?}"));
        }
    }
    for (key, val) in obj {
        match (key.as_str(), mode) {
            ("re" | "im", Mode::Exact) if !val.is_string() => {
                return Err(format!(
                    "{what}: exact mode requires rational strings, got {val} \
                     (float inputs are rejected, never converted)"
                ))
            }
            ("re" | "im", Mode::Float) if !val.is_number() => {
                return Err(format!("{what}: float mode requires numbers, got {val}"))
            }
            ("re" | "im", _) => {}
            (other, _) => return Err(format!("{what}: unknown field {other:?}")),
        }
    }
    Ok(v.clone())
}

pub fn parse_gauss(v: &Value, what: &str) -> Result<GaussRational, String> {
    let v = scalar_component(v, Mode::Exact, what)?;
    let re = parse_rational(v["re"].as_str().unwrap())?;
    let im = parse_rational(v["im"].as_str().unwrap())?;
    Ok(GaussRational::new(re, im))
}

pub fn parse_c64(v: &Value, what: &str) -> Result<C64, String> {
    let v = scalar_component(v, Mode::Float, what)?;
    let re = v["re"].as_f64().unwrap();
    let im = v["im"].as_f64().unwrap();
    if !re.is_finite() || !im.is_finite() {
        return Err(format!("{what}: non-finite component"));
    }
    Ok(C64::new(re, im))
}

/// Either coefficient field, selected by `--mode`.
pub enum PolyIn {
    Exact(ComplexPoly<GaussRational>),
    Float(ComplexPoly<C64>),
}

pub enum TrigIn {
    Exact(TrigPoly<GaussRational>),
    Float(TrigPoly<C64>),
}

fn coeff_array<'v>(
    v: &'v Value,
    len_field: &str,
    arr_field: &str,
) -> Result<&'v Vec<Value>, String> {
    let obj = v
        .as_object()
        .ok_or_else(|| format!("expected an object with \"{len_field}\" and \"{arr_field}\""))?;
    let n = obj
        .get(len_field)
        .and_then(Value::as_u64)
        .ok_or_else(|| format!("missing or invalid \"{len_field}\""))?;
    let arr = obj
        .get(arr_field)
        .and_then(Value::as_array)
        .ok_or_else(|| format!("missing or invalid \"{arr_field}\""))?;
    if arr.len() != n as usize + 1 {
        return Err(format!(
            "\"{len_field}\" = {n} does not match {} coefficients (need {})",
            arr.len(),
            n + 1
        ));
    }
    Ok(arr)
}

pub fn parse_poly(v: &Value, mode: Mode) -> Result<PolyIn, String> {
    let arr = coeff_array(v, "degree", "coeffs")?;
    match mode {
        Mode::Exact => {
            let coeffs = arr
                .iter()
                .enumerate()
                .map(|(k, c)| parse_gauss(c, &format!("coefficient {k}")))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(PolyIn::Exact(ComplexPoly::new(coeffs)))
        }
        Mode::Float => {
            let coeffs = arr
                .iter()
                .enumerate()
                .map(|(k, c)| parse_c64(c, &format!("coefficient {k}")))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(PolyIn::Float(ComplexPoly::new(coeffs)))
        }
    }
}

pub fn parse_trig(v: &Value, mode: Mode) -> Result<TrigIn, String> {
    let arr = coeff_array(v, "n", "y")?;
    match mode {
        Mode::Exact => {
            let y = arr
                .iter()
                .enumerate()
                .map(|(k, c)| parse_gauss(c, &format!("y_{k}")))
                .collect::<Result<Vec<_>, _>>()?;
            TrigPoly::new(y)
                .map(TrigIn::Exact)
                .map_err(|e| e.to_string())
        }
        Mode::Float => {
            let y = arr
                .iter()
                .enumerate()
                .map(|(k, c)| parse_c64(c, &format!("y_{k}")))
                .collect::<Result<Vec<_>, _>>()?;
            TrigPoly::new(y)
                .map(TrigIn::Float)
                .map_err(|e| e.to_string())
        }
    }
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

pub fn poly_json<T: JsonScalar>(p: &ComplexPoly<T>) -> Value {
    json!({
        "degree": p.formal_degree(),
        "coeffs": p.coeffs().iter().map(JsonScalar::scalar_json).collect::<Vec<_>>(),
    })
}

pub fn trig_json<T: JsonScalar>(y: &TrigPoly<T>) -> Value {
    json!({
        "n": y.n(),
        "y": y.y().iter().map(JsonScalar::scalar_json).collect::<Vec<_>>(),
    })
}

pub fn classification_str(c: Classification) -> &'static str {
    match c {
        Classification::Inside => "inside",
        Classification::Boundary => "boundary",
        Classification::Outside => "outside",
    }
}

pub fn verdict_fields<T: JsonScalar>(v: &ConeVerdict<T>) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("class".into(), json!(classification_str(v.classification)));
    m.insert("min".into(), json!(v.min_value));
    m.insert("argmin".into(), json!(v.minimizer_t));
    m.insert(
        "dis2".into(),
        match &v.dis2_value {
            Some(d) => d.real_json(),
            None => json!("degree_drop"),
        },
    );
    m.insert("rank_full".into(), json!(v.rank_certificate));
    m.insert(
        "factor".into(),
        match &v.factor {
            Some(f) => poly_json(f.poly()),
            None => Value::Null,
        },
    );
    m
}

pub fn verdict_json<T: JsonScalar>(v: &ConeVerdict<T>) -> Value {
    Value::Object(verdict_fields(v))
}

pub fn starlike_json<T: JsonScalar>(r: &StarlikeReport<T>) -> Value {
    let mut m = verdict_fields(&r.cone_verdict);
    m.insert("starlike".into(), json!(r.is_starlike));
    m.insert(
        "inner_roots".into(),
        Value::Array(r.inner_roots.iter().map(JsonScalar::scalar_json).collect()),
    );
    m.insert("trig".into(), trig_json(&r.trig));
    Value::Object(m)
}
