//! Which group the Stab(α)-image in PGL(H¹_α) is expected to close up to.

use num_rational::BigRational;
use serde_json::{json, Value};

use crate::character::Character;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PredictedClosure {
    RealForm,
    UnitaryForm,
    FullComplex,
    /// Image ⟨e^{2πi/n}⟩ with n ∈ {1, 2, 3, 4, 6}: an arithmetic, discrete image.
    ExceptionalDiscrete(u32),
}

pub const EXCEPTIONAL_ORDERS: [u32; 5] = [1, 2, 3, 4, 6];

impl PredictedClosure {
    pub fn tag(&self) -> &'static str {
        match self {
            PredictedClosure::RealForm => "real_form",
            PredictedClosure::UnitaryForm => "unitary_form",
            PredictedClosure::FullComplex => "full_complex",
            PredictedClosure::ExceptionalDiscrete(_) => "exceptional_discrete",
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            PredictedClosure::ExceptionalDiscrete(n) => json!({ "tag": self.tag(), "n": n }),
            _ => json!({ "tag": self.tag() }),
        }
    }
}

pub fn predicted_closure(alpha: &Character) -> Result<PredictedClosure> {
    let logs = alpha.require_logs()?;
    if let Some(n) = alpha.finite_order() {
        return Ok(if EXCEPTIONAL_ORDERS.contains(&n) {
            PredictedClosure::ExceptionalDiscrete(n)
        } else {
            PredictedClosure::UnitaryForm
        });
    }
    if alpha.is_unitary() {
        return Ok(PredictedClosure::UnitaryForm);
    }
    let two = BigRational::from_integer(2.into());
    let real = logs.iter().all(|l| l.turns.as_rational().is_some_and(|q| (q * &two).is_integer()));
    Ok(if real { PredictedClosure::RealForm } else { PredictedClosure::FullComplex })
}
