//! Period vectors p ∈ H¹(Σ, ℂ), their symplectic volume, and exponentiation
//! to characters.

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::cyclo::Cyclo;
use crate::arith::poly::{Mono, Poly, VAR_PI};
use crate::arith::real::{ExactReal, LogValue};
use crate::arith::{Num, Symbols};
use crate::error::{Error, Result};

use super::character::Character;

#[derive(Clone, Debug, PartialEq)]
pub struct PeriodVector(pub Vec<Num>);

impl PeriodVector {
    pub fn genus(&self) -> usize {
        self.0.len() / 2
    }

    /// Gaussian-integer periods from (re, im) pairs.
    pub fn gaussian(v: &[(i64, i64)]) -> Self {
        PeriodVector(v.iter().map(|&(re, im)| Num::int(re).add(&Num::i().mul(&Num::int(im)))).collect())
    }

    /// Σ_i Re p(a_i)·Im p(b_i) − Re p(b_i)·Im p(a_i).
    pub fn untwisted_volume(&self) -> Num {
        let p = &self.0;
        (0..self.genus()).fold(Num::zero(), |acc, i| {
            let (a, b) = (&p[2 * i], &p[2 * i + 1]);
            acc.add(&a.re().mul(&b.im())).sub(&b.re().mul(&a.im()))
        })
    }

    /// Apply an integer matrix acting on H₁ (columns are images of generators): p ↦ p∘H.
    pub fn precompose_homology(&self, h: &[Vec<i64>]) -> Self {
        let n = self.0.len();
        PeriodVector(
            (0..n)
                .map(|k| (0..n).fold(Num::zero(), |acc, j| acc.add(&self.0[j].mul(&Num::int(h[j][k])))))
                .collect(),
        )
    }
}

pub fn untwisted_volume(p: &PeriodVector) -> Num {
    p.untwisted_volume()
}

/// Read a number of the form r + 2πi·t with r, t in the symbol span.
pub fn as_log_value(x: &Num) -> Result<LogValue> {
    let poly = match x {
        Num::Const(c) => Poly::constant(c.clone()),
        Num::Poly(p) => p.clone(),
        Num::Frac(..) => return Err(Error::InexpressibleExactly(x.to_string())),
    };
    let mut re: Vec<BigRational> = Vec::new();
    let mut turns: Vec<BigRational> = Vec::new();
    let put = |v: &mut Vec<BigRational>, s: usize, q: BigRational| {
        if v.len() <= s {
            v.resize(s + 1, BigRational::zero());
        }
        v[s] += q;
    };
    let bad = || Error::InexpressibleExactly(x.to_string());
    for (mono, coeff) in poly.terms() {
        let (cr, ci) = gaussian_parts(coeff).ok_or_else(bad)?;
        let (has_pi, sym) = mono_shape(mono).ok_or_else(bad)?;
        match (has_pi, sym) {
            (false, s) => {
                if !ci.is_zero() {
                    return Err(bad());
                }
                put(&mut re, s, cr);
            }
            (true, s) => {
                if !cr.is_zero() {
                    return Err(bad());
                }
                put(&mut turns, s, ci / BigRational::from_integer(2.into()));
            }
        }
    }
    Ok(LogValue::new(ExactReal::new(re), ExactReal::new(turns)))
}

/// Split a Gaussian-rational cyclotomic number into real and imaginary parts.
fn gaussian_parts(c: &Cyclo) -> Option<(BigRational, BigRational)> {
    let c4 = c.lift(crate::arith::cyclo::lcm(c.order(), 4)).shrink();
    if c4.order() > 4 {
        return None;
    }
    let c4 = c4.lift(4);
    let d = BigRational::from_integer(c4.den().clone());
    Some((BigRational::from_integer(c4.coeffs()[0].clone()) / &d, BigRational::from_integer(c4.coeffs()[1].clone()) / &d))
}

/// Monomial of the form π^{0|1}·τ_s^{0|1}: returns (has π, s) with s = 0 for no symbol.
fn mono_shape(m: &Mono) -> Option<(bool, usize)> {
    if !m.exps().is_empty() {
        return None;
    }
    let mut has_pi = false;
    let mut sym = 0;
    for &(v, p) in m.vars() {
        if p != 1 {
            return None;
        }
        if v == VAR_PI {
            has_pi = true;
        } else if sym == 0 {
            sym = v as usize;
        } else {
            return None;
        }
    }
    Some((has_pi, sym))
}

/// α = exp(p), exact when every entry is r + 2πi·t with r, t in the symbol span.
pub fn exp_period(p: &PeriodVector, symbols: Arc<Symbols>) -> Result<Character> {
    let logs = p.0.iter().map(as_log_value).collect::<Result<Vec<_>>>()?;
    Character::from_logs(logs, symbols)
}

/// r + 2πi·t as a period entry.
pub fn log_to_period(l: &LogValue) -> Num {
    Num::log_value(l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::real::rat;

    #[test]
    fn volume_examples() {
        assert_eq!(PeriodVector::gaussian(&[(1, 0), (0, 1), (0, 0), (0, 0)]).untwisted_volume(), Num::one());
        assert!(PeriodVector::gaussian(&[(1, 0), (3, 0), (2, 0), (5, 0)]).untwisted_volume().is_zero());
        assert_eq!(PeriodVector::gaussian(&[(1, 0), (0, 1), (1, 0), (0, 1)]).untwisted_volume(), Num::int(2));
    }

    #[test]
    fn exp_examples() {
        let syms = Arc::new(Symbols::with_names(&["t"]));
        let zero = PeriodVector(vec![Num::zero(); 4]);
        assert!(exp_period(&zero, syms.clone()).unwrap().is_trivial());
        let tau = LogValue::new(ExactReal::symbol(1), ExactReal::zero());
        let p = PeriodVector(vec![log_to_period(&tau), Num::zero(), Num::zero(), Num::zero()]);
        let a = exp_period(&p, syms.clone()).unwrap();
        assert_eq!(a.logs().unwrap()[0], tau);
        let quarter = LogValue::turns(rat(1, 4));
        let p = PeriodVector(vec![log_to_period(&quarter), Num::zero(), Num::zero(), Num::zero()]);
        let a = exp_period(&p, syms.clone()).unwrap();
        assert_eq!(a.value(0), &Num::i());
        let bad = PeriodVector(vec![Num::i(), Num::zero(), Num::zero(), Num::zero()]);
        assert!(matches!(exp_period(&bad, syms), Err(Error::InexpressibleExactly(_))));
    }
}
