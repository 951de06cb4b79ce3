//! Float mode: floating-point numbers in an input document are replaced by
//! nearby rationals before the exact parser sees them.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::Value;

use crate::error::{Error, Result};

/// Keys whose floats are legitimate sign shadows, not data.
const FLOAT_KEYS: [&str; 1] = ["symbol_values"];

/// First continued-fraction convergent within `tol` of `x`.
pub fn rational_within(x: f64, tol: f64) -> Result<BigRational> {
    if !x.is_finite() {
        return Err(Error::Invalid(format!("non-finite number {}", x)));
    }
    let (mut h0, mut h1) = (BigInt::from(0), BigInt::from(1));
    let (mut k0, mut k1) = (BigInt::from(1), BigInt::from(0));
    let mut y = x;
    for _ in 0..64 {
        let a = y.floor();
        let ai = BigInt::from(a as i64);
        let h2 = &ai * &h1 + &h0;
        let k2 = &ai * &k1 + &k0;
        (h0, h1) = (h1, h2);
        (k0, k1) = (k1, k2);
        let q = BigRational::new(h1.clone(), k1.clone());
        let err = (x - to_f64(&q)).abs();
        let frac = y - a;
        if err <= tol || frac == 0.0 {
            return Ok(q);
        }
        y = 1.0 / frac;
        if !y.is_finite() || y.abs() > 1e15 {
            return Ok(q);
        }
    }
    Ok(BigRational::new(h1, k1))
}

fn to_f64(q: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

/// Replace every float in `doc` with a rational string; returns how many were replaced.
pub fn rationalize(doc: &mut Value, tol: f64) -> Result<usize> {
    match doc {
        Value::Number(n) if n.is_f64() => {
            let q = rational_within(n.as_f64().expect("f64"), tol)?;
            *doc = Value::String(if q.is_integer() { q.numer().to_string() } else { format!("{}/{}", q.numer(), q.denom()) });
            Ok(1)
        }
        Value::Array(items) => items.iter_mut().map(|v| rationalize(v, tol)).sum(),
        Value::Object(map) => map.iter_mut().filter(|(k, _)| !FLOAT_KEYS.contains(&k.as_str())).map(|(_, v)| rationalize(v, tol)).sum(),
        _ => Ok(0),
    }
}

/// Count floats without changing anything.
pub fn count_floats(doc: &Value) -> usize {
    match doc {
        Value::Number(n) => usize::from(n.is_f64()),
        Value::Array(items) => items.iter().map(count_floats).sum(),
        Value::Object(map) => map.iter().filter(|(k, _)| !FLOAT_KEYS.contains(&k.as_str())).map(|(_, v)| count_floats(v)).sum(),
        _ => 0,
    }
}

/// Read a JSON document, applying float mode when `tol` is set.
/// Returns the exact text and whether any value was approximated.
pub fn prepare(text: &str, tol: Option<f64>) -> Result<(String, bool)> {
    let mut doc: Value = serde_json::from_str(text).map_err(|e| Error::Invalid(format!("input is not JSON: {}", e)))?;
    let floats = count_floats(&doc);
    match tol {
        None if floats > 0 => Err(Error::Invalid(format!("{} floating-point value(s) in input; float mode needs --tol", floats))),
        None => Ok((text.to_string(), false)),
        Some(t) if !(t.is_finite() && t > 0.0) => Err(Error::Invalid("--tol must be positive and finite".into())),
        Some(_) if floats == 0 => Err(Error::Invalid("--tol is only accepted for floating-point input".into())),
        Some(t) => {
            rationalize(&mut doc, t)?;
            Ok((doc.to_string(), true))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn convergents_respect_tolerance() {
        assert_eq!(rational_within(0.25, 1e-12).unwrap(), BigRational::new(1.into(), 4.into()));
        assert_eq!(rational_within(-1.5, 1e-12).unwrap(), BigRational::new((-3).into(), 2.into()));
        let q = rational_within(std::f64::consts::PI, 1e-3).unwrap();
        assert_eq!(q, BigRational::new(333.into(), 106.into()));
        assert!((to_f64(&q) - std::f64::consts::PI).abs() <= 1e-3);
    }

    #[test]
    fn modes_are_exclusive() {
        let exact = json!({"character": [{"angle": ["1/4"]}]}).to_string();
        assert!(prepare(&exact, None).is_ok());
        assert!(prepare(&exact, Some(1e-9)).is_err());
        let float = json!({"character": [{"angle": [0.25]}], "symbol_values": [1.5]}).to_string();
        assert!(prepare(&float, None).is_err());
        let (text, heuristic) = prepare(&float, Some(1e-9)).unwrap();
        assert!(heuristic);
        assert!(text.contains("\"1/4\""));
        assert!(text.contains("1.5"));
    }
}
