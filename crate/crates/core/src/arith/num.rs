//! Exact complex numbers: cyclotomic constants, generalized polynomials, and
//! quotients of those.

use std::cmp::Ordering;
use std::fmt;

use num_complex::Complex64;
use num_rational::BigRational;

use super::cyclo::Cyclo;
use super::poly::{Mono, Poly};
use super::real::{ExactReal, LogValue};
use super::symbols::Symbols;

#[derive(Clone, Debug)]
pub enum Num {
    Const(Cyclo),
    Poly(Poly),
    Frac(Poly, Poly),
}

impl Default for Num {
    fn default() -> Self {
        Num::zero()
    }
}

impl From<Cyclo> for Num {
    fn from(c: Cyclo) -> Self {
        Num::Const(c)
    }
}

impl From<i64> for Num {
    fn from(v: i64) -> Self {
        Num::int(v)
    }
}

impl Num {
    pub fn zero() -> Self {
        Num::Const(Cyclo::zero())
    }

    pub fn one() -> Self {
        Num::Const(Cyclo::one())
    }

    pub fn int(v: i64) -> Self {
        Num::Const(Cyclo::from_int(v))
    }

    pub fn rational(q: &BigRational) -> Self {
        Num::Const(Cyclo::from_rational(q))
    }

    pub fn i() -> Self {
        Num::Const(Cyclo::i())
    }

    /// p + q·i with rational parts.
    pub fn gaussian(re: &BigRational, im: &BigRational) -> Self {
        Num::Const(Cyclo::from_rational(re).add(&Cyclo::i().scale(im)))
    }

    pub fn root_of_unity(n: u32, k: i64) -> Self {
        Num::Const(Cyclo::root_of_unity(n, k))
    }

    pub fn from_poly(p: Poly) -> Self {
        match p.as_constant() {
            Some(c) => Num::Const(c),
            None => Num::Poly(p),
        }
    }

    pub fn exp(l: &LogValue) -> Self {
        Num::from_poly(Poly::exp_of(l))
    }

    pub fn real(x: &ExactReal) -> Self {
        Num::from_poly(Poly::from_real(x))
    }

    /// re + 2πi·turns as a number (not exponentiated).
    pub fn log_value(l: &LogValue) -> Self {
        let two_pi_i = Poly::pi().scale(&Cyclo::i().scale(&BigRational::from_integer(2.into())));
        Num::from_poly(Poly::from_real(&l.re).add(&Poly::from_real(&l.turns).mul(&two_pi_i)))
    }

    pub fn as_cyclo(&self) -> Option<&Cyclo> {
        match self {
            Num::Const(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Num::Const(c) => c.is_zero(),
            Num::Poly(p) => p.is_zero(),
            Num::Frac(n, _) => n.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Num::Const(c) => c.is_one(),
            _ => false,
        }
    }

    fn parts(&self) -> (Poly, Poly) {
        match self {
            Num::Const(c) => (Poly::constant(c.clone()), Poly::constant(Cyclo::one())),
            Num::Poly(p) => (p.clone(), Poly::constant(Cyclo::one())),
            Num::Frac(n, d) => (n.clone(), d.clone()),
        }
    }

    fn numer(&self) -> Poly {
        match self {
            Num::Const(c) => Poly::constant(c.clone()),
            Num::Poly(p) => p.clone(),
            Num::Frac(n, _) => n.clone(),
        }
    }

    fn denom(&self) -> Option<&Poly> {
        match self {
            Num::Frac(_, d) => Some(d),
            _ => None,
        }
    }

    fn frac(n: Poly, d: Poly) -> Self {
        if n.is_zero() {
            return Num::zero();
        }
        if let Some((m, c)) = d.single_term() {
            if m.is_invertible() {
                let minv = Mono::one().div(m).expect("invertible monomial");
                let cinv = c.inv().expect("nonzero coefficient");
                return Num::from_poly(n.mul_term(&minv, &cinv));
            }
        }
        let (lm_d, lc_d) = d.leading().map(|(m, c)| (m.clone(), c.clone())).expect("nonzero denominator");
        let (lm_n, lc_n) = n.leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        if let Some(q) = lm_n.div(&lm_d) {
            let c = lc_n.div(&lc_d).unwrap();
            if d.mul_term(&q, &c) == n {
                return Num::from_poly(Poly::term(q, c));
            }
        }
        let s = lc_d.inv().unwrap();
        Num::Frac(n.scale(&s), d.scale(&s))
    }

    pub fn add(&self, o: &Self) -> Self {
        match (self, o) {
            (Num::Const(a), Num::Const(b)) => Num::Const(a.add(b)),
            _ if self.is_zero() => o.clone(),
            _ if o.is_zero() => self.clone(),
            _ => match (self.denom(), o.denom()) {
                (None, None) => Num::from_poly(self.numer().add(&o.numer())),
                (Some(d), None) => Num::frac(self.numer().add(&o.numer().mul(d)), d.clone()),
                (None, Some(d)) => Num::frac(self.numer().mul(d).add(&o.numer()), d.clone()),
                (Some(d1), Some(d2)) if d1 == d2 => Num::frac(self.numer().add(&o.numer()), d1.clone()),
                (Some(d1), Some(d2)) => Num::frac(self.numer().mul(d2).add(&o.numer().mul(d1)), d1.mul(d2)),
            },
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            Num::Const(c) => Num::Const(c.neg()),
            Num::Poly(p) => Num::Poly(p.neg()),
            Num::Frac(n, d) => Num::Frac(n.neg(), d.clone()),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        match (self, o) {
            (Num::Const(a), Num::Const(b)) => Num::Const(a.mul(b)),
            _ if self.is_zero() || o.is_zero() => Num::zero(),
            (Num::Const(c), x) | (x, Num::Const(c)) => match x {
                Num::Poly(p) => Num::from_poly(p.scale(c)),
                Num::Frac(n, d) => Num::frac(n.scale(c), d.clone()),
                Num::Const(_) => unreachable!(),
            },
            _ => {
                let (n1, d1) = self.parts();
                let (n2, d2) = o.parts();
                if d1 == n2 {
                    return Num::frac(n1, d2);
                }
                if d2 == n1 {
                    return Num::frac(n2, d1);
                }
                Num::frac(n1.mul(&n2), d1.mul(&d2))
            }
        }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Num::Const(c) => Num::Const(c.inv()?),
            Num::Poly(p) => Num::frac(Poly::constant(Cyclo::one()), p.clone()),
            Num::Frac(n, d) => Num::frac(d.clone(), n.clone()),
        })
    }

    pub fn div(&self, o: &Self) -> Option<Self> {
        Some(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Num::one();
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&b);
            }
            k >>= 1;
            if k > 0 {
                b = b.mul(&b);
            }
        }
        Some(acc)
    }

    pub fn conj(&self) -> Self {
        match self {
            Num::Const(c) => Num::Const(c.conj()),
            Num::Poly(p) => Num::Poly(p.conj()),
            Num::Frac(n, d) => Num::frac(n.conj(), d.conj()),
        }
    }

    pub fn re(&self) -> Self {
        self.add(&self.conj()).mul(&Num::rational(&BigRational::new(1.into(), 2.into())))
    }

    pub fn im(&self) -> Self {
        self.sub(&self.conj()).mul(&Num::Const(Cyclo::i().neg().scale(&BigRational::new(1.into(), 2.into()))))
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    pub fn to_c64(&self, syms: &Symbols) -> Complex64 {
        match self {
            Num::Const(c) => {
                let (re, im) = c.to_c64();
                Complex64::new(re, im)
            }
            Num::Poly(p) => p.eval(syms),
            Num::Frac(n, d) => n.eval(syms) / d.eval(syms),
        }
    }

    /// Sign of a real number. Exact for cyclotomic constants; otherwise decided
    /// numerically from the symbol shadows with a relative error bound.
    pub fn real_sign(&self, syms: &Symbols) -> Option<Ordering> {
        if self.is_zero() {
            return Some(Ordering::Equal);
        }
        match self {
            Num::Const(c) => c.real_sign(),
            _ => {
                if !self.is_real() {
                    return None;
                }
                let (n, d) = self.parts();
                let nv = n.eval(syms);
                let dv = d.eval(syms);
                let v = (nv * dv.conj()).re;
                let scale = n.magnitude(syms) * d.magnitude(syms);
                if v.abs() > 1e-9 * scale {
                    Some(if v > 0.0 { Ordering::Greater } else { Ordering::Less })
                } else {
                    None
                }
            }
        }
    }

    pub fn display(&self, syms: &Symbols) -> String {
        match self {
            Num::Const(c) => c.to_string(),
            Num::Poly(p) => p.display(syms),
            Num::Frac(n, d) => format!("({})/({})", n.display(syms), d.display(syms)),
        }
    }
}

impl PartialEq for Num {
    fn eq(&self, o: &Self) -> bool {
        match (self, o) {
            (Num::Const(a), Num::Const(b)) => a == b,
            _ => match (self.denom(), o.denom()) {
                (None, None) => self.numer() == o.numer(),
                (Some(d), None) => self.numer() == o.numer().mul(d),
                (None, Some(d)) => self.numer().mul(d) == o.numer(),
                (Some(d1), Some(d2)) => self.numer().mul(d2) == o.numer().mul(d1),
            },
        }
    }
}

impl Eq for Num {}

impl fmt::Display for Num {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display(&Symbols::new()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::real::rat;

    fn e_tau() -> Num {
        Num::exp(&LogValue::new(ExactReal::symbol(1), ExactReal::zero()))
    }

    #[test]
    fn rational_function_roundtrip() {
        let x = e_tau();
        let f = Num::one().sub(&x);
        let g = f.inv().unwrap();
        assert_eq!(f.mul(&g), Num::one());
        assert!(f.mul(&g).is_one());
        let h = x.div(&f).unwrap().mul(&f);
        assert_eq!(h, x);
    }

    #[test]
    fn fraction_addition_cancels() {
        let x = e_tau();
        let a = Num::one().div(&Num::one().sub(&x)).unwrap();
        let b = x.div(&Num::one().sub(&x)).unwrap();
        assert_eq!(a.sub(&b), Num::one());
    }

    #[test]
    fn sign_of_symbolic_real() {
        let syms = Symbols::with_names(&["t"]);
        let x = e_tau();
        let v = x.sub(&Num::one());
        assert_eq!(v.real_sign(&syms), Some(Ordering::Greater));
        let y = Num::exp(&LogValue::new(ExactReal::zero(), ExactReal::symbol(1)));
        let two_cos = y.add(&y.conj());
        assert!(two_cos.is_real());
        assert!(!y.is_real());
    }

    #[test]
    fn gaussian_parts() {
        let z = Num::gaussian(&rat(1, 2), &rat(-3, 1));
        assert_eq!(z.re(), Num::rational(&rat(1, 2)));
        assert_eq!(z.im(), Num::int(-3));
    }
}
