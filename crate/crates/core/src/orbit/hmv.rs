//! The invariant (m, v) of characters whose modulus has discrete nontrivial image.
//!
//! With log|α| = m·x for a primitive integer vector x and an angle lift θ,
//! v = m·(x ∧ θ) modulo mℤ. We store v in units of m, reduced into [0, 1)
//! in its rational part.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::arith::real::ExactReal;
use crate::arith::Symbols;
use crate::character::Character;
use crate::error::Result;

use super::closure::discrete_modulus;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hmv {
    pub m: ExactReal,
    /// v / m modulo 1.
    pub v_units: ExactReal,
    /// Primitive integer direction x of the modulus; its entries grow without bound along orbits.
    pub direction: Vec<BigInt>,
}

impl Hmv {
    /// v = m·v_units when the product stays in the symbol span.
    pub fn v(&self) -> Option<ExactReal> {
        if let Some(q) = self.v_units.as_rational() {
            Some(self.m.scale(&q))
        } else {
            self.m.as_rational().map(|q| self.v_units.scale(&q))
        }
    }

    pub fn to_json(&self, syms: &Symbols) -> Value {
        let v = match self.v() {
            Some(v) => v.display(syms),
            None => format!("({})*({})", self.v_units.display(syms), self.m.display(syms)),
        };
        json!({
            "m": self.m.display(syms),
            "v": v,
            "v_units": self.v_units.display(syms),
        })
    }
}

/// Σ_i x(a_i)·θ(b_i) − x(b_i)·θ(a_i).
pub fn wedge(x: &[BigInt], theta: &[ExactReal]) -> ExactReal {
    let int = |k: &BigInt| BigRational::from_integer(k.clone());
    (0..x.len() / 2).fold(ExactReal::zero(), |acc, i| {
        acc.add(&theta[2 * i + 1].scale(&int(&x[2 * i]))).sub(&theta[2 * i].scale(&int(&x[2 * i + 1])))
    })
}

pub fn hmv_invariant(alpha: &Character) -> Result<Hmv> {
    let (m, direction) = discrete_modulus(alpha)?;
    let theta = alpha.angle_vectors()?;
    let v_units = wedge(&direction, &theta).frac_constant();
    Ok(Hmv { m, v_units, direction })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::real::LogValue;
    use crate::error::Error;
    use std::sync::Arc;

    fn chr(logs: Vec<LogValue>, names: &[&str]) -> Character {
        Character::from_logs(logs, Arc::new(Symbols::with_names(names))).unwrap()
    }

    #[test]
    fn three_tenths_example() {
        let mut logs = vec![LogValue::zero(); 4];
        logs[0] = LogValue::new(ExactReal::symbol(1), ExactReal::zero());
        logs[1] = LogValue::new(ExactReal::zero(), ExactReal::ratio(3, 10));
        let h = hmv_invariant(&chr(logs.clone(), &["t"])).unwrap();
        assert_eq!(h.m, ExactReal::symbol(1));
        assert_eq!(h.v_units, ExactReal::ratio(3, 10));
        assert_eq!(h.v(), Some(ExactReal::symbol_times(1, crate::arith::real::rat(3, 10))));
        // shifting the angle lift by an integer vector changes nothing
        logs[1].turns = logs[1].turns.add(&ExactReal::int(2));
        logs[2].turns = ExactReal::int(-5);
        assert_eq!(hmv_invariant(&chr(logs, &["t"])).unwrap(), h);
    }

    #[test]
    fn zero_angles_give_zero() {
        let mut logs = vec![LogValue::zero(); 6];
        logs[3] = LogValue::new(ExactReal::symbol(1).scale_int(3), ExactReal::zero());
        let h = hmv_invariant(&chr(logs, &["t"])).unwrap();
        assert!(h.v_units.is_zero());
    }

    #[test]
    fn huge_directions() {
        // long walks push the modulus direction far past i64
        let big: BigInt = BigInt::from(1u8) << 70usize;
        let mut logs = vec![LogValue::zero(); 4];
        logs[0] = LogValue::new(ExactReal::symbol_times(1, BigRational::from_integer(big.clone())), ExactReal::zero());
        logs[1] = LogValue::new(ExactReal::symbol_times(1, BigRational::from_integer(&big + 1)), ExactReal::ratio(1, 3));
        let h = hmv_invariant(&chr(logs, &["t"])).unwrap();
        assert_eq!(h.m, ExactReal::symbol(1));
        assert_eq!(h.direction, vec![big.clone(), &big + 1, BigInt::from(0), BigInt::from(0)]);
        assert_eq!(h.v_units, ExactReal::ratio(1, 3));
    }

    #[test]
    fn unitary_rejected() {
        let a = Character::roots_of_unity(4, &[1, 0, 0, 0]);
        assert_eq!(hmv_invariant(&a), Err(Error::ModulusNotDiscrete));
    }
}
