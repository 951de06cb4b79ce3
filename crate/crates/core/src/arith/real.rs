//! Exact reals as rational combinations of 1 and declared symbols, and
//! logarithms `re + 2πi·turns` built from them.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::symbols::Symbols;

/// Σ_s c_s·τ_s with τ_0 = 1. Trailing zero coefficients are trimmed so that
/// equality is coefficient equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ExactReal(Vec<BigRational>);

impl ExactReal {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ExactReal(coeffs)
    }

    pub fn zero() -> Self {
        ExactReal(Vec::new())
    }

    pub fn rational(q: BigRational) -> Self {
        Self::new(vec![q])
    }

    pub fn int(v: i64) -> Self {
        Self::rational(BigRational::from_integer(v.into()))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Self::rational(BigRational::new(n.into(), d.into()))
    }

    /// The symbol with index `s ≥ 1`.
    pub fn symbol(s: usize) -> Self {
        Self::symbol_times(s, BigRational::one())
    }

    pub fn symbol_times(s: usize, q: BigRational) -> Self {
        let mut v = vec![BigRational::zero(); s + 1];
        v[s] = q;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    pub fn coeff(&self, s: usize) -> BigRational {
        self.0.get(s).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn constant(&self) -> BigRational {
        self.coeff(0)
    }

    /// Number of basis slots in use (1 + highest symbol index present).
    pub fn width(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.0.len() <= 1
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.constant())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        Self::new((0..n).map(|s| self.coeff(s) + o.coeff(s)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        ExactReal(self.0.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self::new(self.0.iter().map(|c| c * q).collect())
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&BigRational::from_integer(k.into()))
    }

    /// Reduce the constant part into [0, 1).
    pub fn frac_constant(&self) -> Self {
        let mut v = self.0.clone();
        if let Some(c) = v.first_mut() {
            *c = &*c - c.floor();
        }
        Self::new(v)
    }

    pub fn eval(&self, syms: &Symbols) -> f64 {
        self.0
            .iter()
            .enumerate()
            .map(|(s, c)| rat_to_f64(c) * syms.value(s))
            .sum()
    }

    pub fn display(&self, syms: &Symbols) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (s, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let name = if s == 0 {
                String::new()
            } else if s <= syms.len() {
                syms.name(s).to_string()
            } else {
                format!("t{}", s)
            };
            let term = match (s, c.is_one()) {
                (0, _) => c.to_string(),
                (_, true) => name,
                _ if *c == -BigRational::one() => format!("-{}", name),
                _ => format!("{}*{}", c, name),
            };
            parts.push(term);
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

impl fmt::Display for ExactReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display(&Symbols::new()))
    }
}

pub fn rat_to_f64(q: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or_else(|| {
        let n = q.numer().to_f64().unwrap_or(f64::NAN);
        let d = q.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `re + 2πi·turns`: the logarithm of a nonzero complex number.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LogValue {
    pub re: ExactReal,
    pub turns: ExactReal,
}

impl LogValue {
    pub fn new(re: ExactReal, turns: ExactReal) -> Self {
        LogValue { re, turns }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn turns(q: BigRational) -> Self {
        LogValue { re: ExactReal::zero(), turns: ExactReal::rational(q) }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.turns.is_zero()
    }

    /// Equal as points of ℂ* (turns compared modulo integers).
    pub fn same_exp(&self, o: &Self) -> bool {
        let d = self.turns.sub(&o.turns);
        self.re == o.re && d.is_rational() && d.constant().is_integer()
    }

    pub fn add(&self, o: &Self) -> Self {
        LogValue { re: self.re.add(&o.re), turns: self.turns.add(&o.turns) }
    }

    pub fn neg(&self) -> Self {
        LogValue { re: self.re.neg(), turns: self.turns.neg() }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        LogValue { re: self.re.scale_int(k), turns: self.turns.scale_int(k) }
    }

    pub fn is_unitary(&self) -> bool {
        self.re.is_zero()
    }

    pub fn width(&self) -> usize {
        self.re.width().max(self.turns.width())
    }
}
