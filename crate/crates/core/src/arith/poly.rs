//! Generalized polynomials with cyclotomic coefficients.
//!
//! A monomial is π^k·∏ τ_s^{e_s} times exponentials e^{q·τ_s} and
//! e^{2πi·q·τ_s} with rational q. Under the independence contract on the
//! symbols these monomials are linearly independent, so the term map is a
//! canonical form and zero testing is exact.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::cyclo::Cyclo;
use super::real::{rat_to_f64, ExactReal, LogValue};
use super::symbols::Symbols;

pub const VAR_PI: u16 = 0;

fn modulus_key(s: usize) -> u16 {
    (2 * s) as u16
}

fn angle_key(s: usize) -> u16 {
    (2 * s + 1) as u16
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Mono {
    vars: Vec<(u16, u32)>,
    exps: Vec<(u16, BigRational)>,
}

impl Mono {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn is_one(&self) -> bool {
        self.vars.is_empty() && self.exps.is_empty()
    }

    pub fn var(v: u16) -> Self {
        Mono { vars: vec![(v, 1)], exps: Vec::new() }
    }

    fn exp(key: u16, q: BigRational) -> Self {
        if q.is_zero() {
            return Self::one();
        }
        Mono { vars: Vec::new(), exps: vec![(key, q)] }
    }

    pub fn vars(&self) -> &[(u16, u32)] {
        &self.vars
    }

    pub fn exps(&self) -> &[(u16, BigRational)] {
        &self.exps
    }

    pub fn is_invertible(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut vars = self.vars.clone();
        for (v, p) in &o.vars {
            match vars.binary_search_by_key(v, |x| x.0) {
                Ok(i) => vars[i].1 += p,
                Err(i) => vars.insert(i, (*v, *p)),
            }
        }
        let mut exps = self.exps.clone();
        for (k, q) in &o.exps {
            match exps.binary_search_by_key(k, |x| x.0) {
                Ok(i) => {
                    let s = &exps[i].1 + q;
                    if s.is_zero() {
                        exps.remove(i);
                    } else {
                        exps[i].1 = s;
                    }
                }
                Err(i) => exps.insert(i, (*k, q.clone())),
            }
        }
        Mono { vars, exps }
    }

    /// Quotient when the variable part divides; exponentials always divide.
    pub fn div(&self, o: &Self) -> Option<Self> {
        let mut vars = self.vars.clone();
        for (v, p) in &o.vars {
            let i = vars.binary_search_by_key(v, |x| x.0).ok()?;
            if vars[i].1 < *p {
                return None;
            }
            vars[i].1 -= p;
            if vars[i].1 == 0 {
                vars.remove(i);
            }
        }
        let inv = Mono { vars: Vec::new(), exps: o.exps.iter().map(|(k, q)| (*k, -q)).collect() };
        Some(Mono { vars, exps: self.exps.clone() }.mul(&inv))
    }

    fn conj(&self) -> Self {
        Mono {
            vars: self.vars.clone(),
            exps: self.exps.iter().map(|(k, q)| (*k, if k % 2 == 1 { -q } else { q.clone() })).collect(),
        }
    }

    fn eval(&self, syms: &Symbols) -> Complex64 {
        let mut z = Complex64::new(1.0, 0.0);
        for (v, p) in &self.vars {
            let x = if *v == VAR_PI { std::f64::consts::PI } else { syms.value(*v as usize) };
            z *= x.powi(*p as i32);
        }
        let mut log = Complex64::new(0.0, 0.0);
        for (k, q) in &self.exps {
            let s = (*k / 2) as usize;
            let t = rat_to_f64(q) * syms.value(s);
            if k % 2 == 0 {
                log.re += t;
            } else {
                log.im += std::f64::consts::TAU * t;
            }
        }
        z * log.exp()
    }

    fn display(&self, syms: &Symbols) -> String {
        let name = |s: usize| if s >= 1 && s <= syms.len() { syms.name(s).to_string() } else { format!("t{}", s) };
        let mut parts = Vec::new();
        for (v, p) in &self.vars {
            let n = if *v == VAR_PI { "pi".to_string() } else { name(*v as usize) };
            parts.push(if *p == 1 { n } else { format!("{}^{}", n, p) });
        }
        for (k, q) in &self.exps {
            let s = (*k / 2) as usize;
            let arg = if s == 0 { q.to_string() } else if q.is_one() { name(s) } else { format!("{}*{}", q, name(s)) };
            parts.push(if k % 2 == 0 { format!("exp({})", arg) } else { format!("exp(2pi*i*{})", arg) });
        }
        parts.join("*")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Mono, Cyclo>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Cyclo) -> Self {
        Self::term(Mono::one(), c)
    }

    pub fn term(m: Mono, c: Cyclo) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn pi() -> Self {
        Self::term(Mono::var(VAR_PI), Cyclo::one())
    }

    pub fn symbol(s: usize) -> Self {
        Self::term(Mono::var(s as u16), Cyclo::one())
    }

    /// Σ_s c_s·τ_s as a polynomial.
    pub fn from_real(x: &ExactReal) -> Self {
        let mut p = Poly::zero();
        for (s, c) in x.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let m = if s == 0 { Mono::one() } else { Mono::var(s as u16) };
            p.add_term(m, Cyclo::from_rational(c));
        }
        p
    }

    /// exp(re + 2πi·turns) as a single monomial with a root-of-unity coefficient.
    pub fn exp_of(l: &LogValue) -> Self {
        let mut m = Mono::one();
        for (s, c) in l.re.coeffs().iter().enumerate() {
            m = m.mul(&Mono::exp(modulus_key(s), c.clone()));
        }
        for (s, c) in l.turns.coeffs().iter().enumerate().skip(1) {
            m = m.mul(&Mono::exp(angle_key(s), c.clone()));
        }
        Self::term(m, Cyclo::exp_2pi_i(&l.turns.constant()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_constant(&self) -> Option<Cyclo> {
        match self.terms.len() {
            0 => Some(Cyclo::zero()),
            1 => self.terms.get(&Mono::one()).cloned(),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Cyclo)> {
        self.terms.iter()
    }

    pub fn leading(&self) -> Option<(&Mono, &Cyclo)> {
        self.terms.iter().next_back()
    }

    pub fn single_term(&self) -> Option<(&Mono, &Cyclo)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    fn add_term(&mut self, m: Mono, c: Cyclo) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                let s = x.add(&c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *x = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                r.add_term(m1.mul(m2), c1.mul(c2));
            }
        }
        r
    }

    pub fn scale(&self, c: &Cyclo) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, x)| (m.clone(), x.mul(c))).collect() }
    }

    pub fn mul_term(&self, m: &Mono, c: &Cyclo) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(k, x)| (k.mul(m), x.mul(c))).collect() }
    }

    pub fn conj(&self) -> Self {
        let mut r = Poly::zero();
        for (m, c) in &self.terms {
            r.add_term(m.conj(), c.conj());
        }
        r
    }

    pub fn eval(&self, syms: &Symbols) -> Complex64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                let (re, im) = c.to_c64();
                Complex64::new(re, im) * m.eval(syms)
            })
            .sum()
    }

    /// Σ |terms|, a scale for rounding-error bounds.
    pub fn magnitude(&self, syms: &Symbols) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                let (re, im) = c.to_c64();
                Complex64::new(re, im).norm() * m.eval(syms).norm()
            })
            .sum()
    }

    pub fn display(&self, syms: &Symbols) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| {
                if m.is_one() {
                    c.to_string()
                } else if c.is_one() {
                    m.display(syms)
                } else {
                    format!("{}*{}", c, m.display(syms))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display(&Symbols::new()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::real::rat;

    #[test]
    fn exponentials_combine() {
        let e = Poly::exp_of(&LogValue::new(ExactReal::symbol(1), ExactReal::zero()));
        let einv = Poly::exp_of(&LogValue::new(ExactReal::symbol(1).neg(), ExactReal::zero()));
        assert_eq!(e.mul(&einv), Poly::constant(Cyclo::one()));
    }

    #[test]
    fn rational_angle_folds_into_coefficient() {
        let p = Poly::exp_of(&LogValue::turns(rat(1, 4)));
        assert_eq!(p.as_constant(), Some(Cyclo::i()));
    }

    #[test]
    fn conj_flips_angles_only() {
        let l = LogValue::new(ExactReal::symbol(1), ExactReal::symbol(2));
        let p = Poly::exp_of(&l);
        let q = p.conj();
        let prod = p.mul(&q);
        // |α|² = e^{2τ₁}
        let expected = Poly::exp_of(&LogValue::new(ExactReal::symbol(1).scale_int(2), ExactReal::zero()));
        assert_eq!(prod, expected);
    }

    #[test]
    fn numeric_eval() {
        let syms = Symbols::with_names(&["t"]);
        let p = Poly::symbol(1).mul(&Poly::pi());
        let v = p.eval(&syms);
        assert!((v.re - syms.value(1) * std::f64::consts::PI).abs() < 1e-12);
    }
}
