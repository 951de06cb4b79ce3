//! Characters α: Γ → ℂ*, stored by their values on the generators and,
//! when available, by exact logarithms.

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::{Num, Symbols};
use crate::arith::real::{ExactReal, LogValue};
use crate::error::{Error, Result};
use crate::group::{MappingClass, Word};

#[derive(Clone, Debug)]
pub struct Character {
    genus: usize,
    logs: Option<Vec<LogValue>>,
    values: Vec<Num>,
    symbols: Arc<Symbols>,
}

impl PartialEq for Character {
    fn eq(&self, o: &Self) -> bool {
        if self.genus != o.genus {
            return false;
        }
        match (&self.logs, &o.logs) {
            (Some(a), Some(b)) => a.iter().zip(b).all(|(x, y)| x.same_exp(y)),
            _ => self.values == o.values,
        }
    }
}

impl Character {
    pub fn from_logs(logs: Vec<LogValue>, symbols: Arc<Symbols>) -> Result<Self> {
        if logs.is_empty() || !logs.len().is_multiple_of(2) {
            return Err(Error::Invalid(format!("a character needs 2g values, got {}", logs.len())));
        }
        let width = logs.iter().map(LogValue::width).max().unwrap_or(0);
        if width > symbols.len() + 1 {
            return Err(Error::Invalid(format!("character uses {} symbols but {} are declared", width - 1, symbols.len())));
        }
        let values = logs.iter().map(Num::exp).collect();
        Ok(Character { genus: logs.len() / 2, logs: Some(logs), values, symbols })
    }

    /// Character from explicit nonzero values (no logarithms; classification unavailable).
    pub fn from_values(values: Vec<Num>, symbols: Arc<Symbols>) -> Result<Self> {
        if values.is_empty() || !values.len().is_multiple_of(2) {
            return Err(Error::Invalid(format!("a character needs 2g values, got {}", values.len())));
        }
        if values.iter().any(Num::is_zero) {
            return Err(Error::Invalid("character values must be nonzero".into()));
        }
        Ok(Character { genus: values.len() / 2, logs: None, values, symbols })
    }

    pub fn trivial(genus: usize) -> Self {
        Self::from_logs(vec![LogValue::zero(); 2 * genus], Arc::new(Symbols::new())).unwrap()
    }

    /// Unitary character with α(x_k) = exp(2πi·e_k/n).
    pub fn roots_of_unity(n: u32, exponents: &[i64]) -> Self {
        let logs = exponents
            .iter()
            .map(|&e| LogValue::turns(BigRational::new(e.into(), (n as i64).into())))
            .collect();
        Self::from_logs(logs, Arc::new(Symbols::new())).unwrap()
    }

    /// Unitary character with rational angles (turns).
    pub fn from_turns(turns: &[BigRational]) -> Self {
        Self::from_logs(turns.iter().cloned().map(LogValue::turns).collect(), Arc::new(Symbols::new())).unwrap()
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn ngens(&self) -> usize {
        2 * self.genus
    }

    pub fn values(&self) -> &[Num] {
        &self.values
    }

    pub fn value(&self, k: usize) -> &Num {
        &self.values[k]
    }

    pub fn logs(&self) -> Option<&[LogValue]> {
        self.logs.as_deref()
    }

    pub fn require_logs(&self) -> Result<&[LogValue]> {
        self.logs().ok_or(Error::MissingLogarithms)
    }

    pub fn symbols(&self) -> &Arc<Symbols> {
        &self.symbols
    }

    pub fn eval(&self, w: &Word) -> Num {
        let e = w.abelianize(self.ngens());
        e.iter()
            .zip(&self.values)
            .filter(|(k, _)| **k != 0)
            .fold(Num::one(), |acc, (&k, v)| acc.mul(&v.pow(k).expect("nonzero character value")))
    }

    pub fn eval_log(&self, w: &Word) -> Option<LogValue> {
        let logs = self.logs.as_ref()?;
        let e = w.abelianize(self.ngens());
        Some(e.iter().zip(logs).fold(LogValue::zero(), |acc, (&k, l)| acc.add(&l.scale_int(k))))
    }

    pub fn is_trivial(&self) -> bool {
        match &self.logs {
            Some(l) => l.iter().all(|x| x.same_exp(&LogValue::zero())),
            None => self.values.iter().all(Num::is_one),
        }
    }

    /// First generator index with α ≠ 1.
    pub fn first_nontrivial(&self) -> Option<usize> {
        (0..self.ngens()).find(|&k| !self.values[k].is_one())
    }

    pub fn is_unitary(&self) -> bool {
        match &self.logs {
            Some(l) => l.iter().all(LogValue::is_unitary),
            None => self.values.iter().all(|v| v.mul(&v.conj()).is_one()),
        }
    }

    /// Precomposition α∘φ.
    pub fn precompose(&self, phi: &MappingClass) -> Result<Self> {
        if phi.genus() != self.genus {
            return Err(Error::GenusMismatch { expected: self.genus, found: phi.genus() });
        }
        let values = phi.images().iter().map(|w| self.eval(w)).collect();
        let logs = self
            .logs
            .as_ref()
            .map(|_| phi.images().iter().map(|w| self.eval_log(w).unwrap()).collect());
        Ok(Character { genus: self.genus, logs, values, symbols: self.symbols.clone() })
    }

    /// Modulus exponents (real parts of the logarithms).
    pub fn modulus_vectors(&self) -> Result<Vec<ExactReal>> {
        Ok(self.require_logs()?.iter().map(|l| l.re.clone()).collect())
    }

    pub fn angle_vectors(&self) -> Result<Vec<ExactReal>> {
        Ok(self.require_logs()?.iter().map(|l| l.turns.clone()).collect())
    }

    /// If every angle is rational and every modulus is zero, the order of the image.
    pub fn finite_order(&self) -> Option<u32> {
        use num_integer::Integer;
        use num_traits::ToPrimitive;
        let logs = self.logs.as_ref()?;
        let mut n: u64 = 1;
        for l in logs {
            if !l.re.is_zero() || !l.turns.is_rational() {
                return None;
            }
            let q = l.turns.constant();
            let q = &q - q.floor();
            if !q.is_zero() {
                n = n.lcm(&q.denom().to_u64()?);
            }
        }
        u32::try_from(n).ok()
    }

    /// Exponent vector e with α(x_k) = ζ_n^{e_k}, for finite-order unitary characters.
    pub fn root_exponents(&self, n: u32) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        let logs = self.logs.as_ref()?;
        logs.iter()
            .map(|l| {
                let q = l.turns.as_rational()? * BigRational::from_integer(n.into());
                if !l.re.is_zero() || !q.is_integer() {
                    return None;
                }
                Some(q.to_integer().to_i64()?.rem_euclid(n as i64))
            })
            .collect()
    }

    pub fn display(&self) -> Vec<String> {
        match &self.logs {
            Some(l) => l
                .iter()
                .map(|x| format!("exp({} + 2pi*i*({}))", x.re.display(&self.symbols), x.turns.display(&self.symbols)))
                .collect(),
            None => self.values.iter().map(|v| v.display(&self.symbols)).collect(),
        }
    }
}
