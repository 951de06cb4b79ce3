//! Elements of cyclotomic fields ℚ(ζ_n) in the power basis, reduced modulo Φ_n.
//!
//! Elements of different fields are compared and combined by lifting to the
//! field of the least common multiple of the orders.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

thread_local! {
    static CYCLOTOMIC: RefCell<HashMap<u32, Rc<Vec<i64>>>> = RefCell::new(HashMap::new());
}

/// Coefficients of Φ_n, lowest degree first.
pub fn cyclotomic_poly(n: u32) -> Rc<Vec<i64>> {
    assert!(n >= 1);
    if let Some(p) = CYCLOTOMIC.with(|c| c.borrow().get(&n).cloned()) {
        return p;
    }
    // x^n - 1 divided by every Φ_d with d | n, d < n.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let div = cyclotomic_poly(d);
            num = poly_div_exact(&num, &div);
        }
    }
    let p = Rc::new(num);
    CYCLOTOMIC.with(|c| c.borrow_mut().insert(n, p.clone()));
    p
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut q = vec![0i64; num.len() - dn];
    for i in (0..q.len()).rev() {
        let c = rem[i + dn];
        q[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

pub fn euler_phi(n: u32) -> usize {
    cyclotomic_poly(n).len() - 1
}

pub fn lcm(a: u32, b: u32) -> u32 {
    a / a.gcd(&b) * b
}

/// Reduce a polynomial in ζ_n (any degree, exponents taken mod n) to the power basis.
fn reduce(n: u32, raw: Vec<BigInt>) -> Vec<BigInt> {
    let phi = euler_phi(n);
    let mut folded = vec![BigInt::zero(); (n as usize).max(phi)];
    for (k, c) in raw.into_iter().enumerate() {
        if !c.is_zero() {
            folded[k % n as usize] += c;
        }
    }
    let cp = cyclotomic_poly(n);
    for d in (phi..folded.len()).rev() {
        if folded[d].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut folded[d]);
        for (j, &pj) in cp.iter().enumerate().take(phi) {
            if pj != 0 {
                folded[d - phi + j] -= &c * pj;
            }
        }
    }
    folded.truncate(phi);
    folded
}

#[derive(Clone, Debug)]
pub struct Cyclo {
    order: u32,
    coeffs: Vec<BigInt>,
    den: BigInt,
}

impl Cyclo {
    fn build(order: u32, coeffs: Vec<BigInt>, den: BigInt) -> Self {
        let mut c = Cyclo { order, coeffs, den };
        c.normalize();
        c
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for c in &mut self.coeffs {
                *c = -std::mem::take(c);
            }
        }
        let mut g = self.den.clone();
        for c in &self.coeffs {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if self.coeffs.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        if !g.is_one() && !g.is_zero() {
            self.den /= &g;
            for c in &mut self.coeffs {
                *c /= &g;
            }
        }
    }

    pub fn zero() -> Self {
        Cyclo { order: 1, coeffs: vec![BigInt::zero()], den: BigInt::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Cyclo { order: 1, coeffs: vec![BigInt::from(v)], den: BigInt::one() }
    }

    pub fn from_rational(q: &BigRational) -> Self {
        Self::build(1, vec![q.numer().clone()], q.denom().clone())
    }

    /// ζ_n^k.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        let e = k.rem_euclid(n as i64) as usize;
        let mut raw = vec![BigInt::zero(); e + 1];
        raw[e] = BigInt::one();
        Self::build(n, reduce(n, raw), BigInt::one())
    }

    /// exp(2πi·q) for rational q.
    pub fn exp_2pi_i(q: &BigRational) -> Self {
        let den = q.denom().to_u32().expect("root of unity order out of range");
        let num = q.numer().mod_floor(&BigInt::from(den)).to_i64().unwrap();
        Self::root_of_unity(den, num)
    }

    pub fn i() -> Self {
        Self::root_of_unity(4, 1)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(BigRational::new(self.coeffs[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// True when the element is an algebraic integer (power-basis coefficients integral).
    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn lift(&self, m: u32) -> Self {
        if m == self.order {
            return self.clone();
        }
        assert!(m.is_multiple_of(self.order), "cannot lift ζ_{} into ζ_{}", self.order, m);
        let step = (m / self.order) as usize;
        let mut raw = vec![BigInt::zero(); step * self.coeffs.len()];
        for (k, c) in self.coeffs.iter().enumerate() {
            raw[k * step] = c.clone();
        }
        Cyclo { order: m, coeffs: reduce(m, raw), den: self.den.clone() }
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        let m = lcm(a.order, b.order);
        (a.lift(m), b.lift(m))
    }

    /// Smallest field (by divisor of the current order) containing the element.
    pub fn shrink(&self) -> Self {
        if self.order == 1 {
            return self.clone();
        }
        if let Some(q) = self.as_rational() {
            return Self::from_rational(&q);
        }
        let n = self.order;
        let mut best = self.clone();
        for d in 2..n {
            if !n.is_multiple_of(d) || euler_phi(d) >= euler_phi(best.order) {
                continue;
            }
            // element lies in ℚ(ζ_d) iff it is fixed by every σ_k with k ≡ 1 mod d
            let fixed = (1..n)
                .filter(|k| k.gcd(&n) == 1 && k % d == 1 % d)
                .all(|k| self.galois(k) == *self);
            if fixed {
                if let Some(c) = self.descend(d) {
                    best = c;
                }
            }
        }
        best
    }

    fn descend(&self, d: u32) -> Option<Self> {
        // Solve for coefficients in ℚ(ζ_d) by lifting the basis and matching.
        let phi_d = euler_phi(d);
        let basis: Vec<Cyclo> = (0..phi_d).map(|k| Cyclo::root_of_unity(d, k as i64).lift(self.order)).collect();
        let phi_n = self.coeffs.len();
        let mut rows: Vec<Vec<BigRational>> = (0..phi_n)
            .map(|r| {
                let mut row: Vec<BigRational> = basis.iter().map(|b| BigRational::from(b.coeffs[r].clone())).collect();
                row.push(BigRational::new(self.coeffs[r].clone(), self.den.clone()));
                row
            })
            .collect();
        let sol = crate::arith::linalg::solve_rational(&mut rows, phi_d)?;
        let den = sol.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let coeffs = sol.iter().map(|q| q.numer() * (&den / q.denom())).collect();
        Some(Cyclo::build(d, coeffs, den))
    }

    pub fn neg(&self) -> Self {
        Cyclo { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect(), den: self.den.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (a, b) = Self::common(self, other);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x * &b.den + y * &a.den).collect();
        Self::build(a.order, coeffs, &a.den * &b.den)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.order == 1 {
            return other.scale_int(&self.coeffs[0], &self.den);
        }
        if other.order == 1 {
            return self.scale_int(&other.coeffs[0], &other.den);
        }
        let (a, b) = Self::common(self, other);
        let mut raw = vec![BigInt::zero(); a.coeffs.len() + b.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] += x * y;
                }
            }
        }
        Self::build(a.order, reduce(a.order, raw), &a.den * &b.den)
    }

    fn scale_int(&self, num: &BigInt, den: &BigInt) -> Self {
        Self::build(self.order, self.coeffs.iter().map(|c| c * num).collect(), &self.den * den)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        self.scale_int(q.numer(), q.denom())
    }

    /// σ_k: ζ ↦ ζ^k for k coprime to the order.
    pub fn galois(&self, k: u32) -> Self {
        let n = self.order as usize;
        let mut raw = vec![BigInt::zero(); n];
        for (j, c) in self.coeffs.iter().enumerate() {
            raw[(j * k as usize) % n] += c;
        }
        Cyclo { order: self.order, coeffs: reduce(self.order, raw), den: self.den.clone() }
    }

    pub fn conj(&self) -> Self {
        if self.order <= 2 {
            return self.clone();
        }
        self.galois(self.order - 1)
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.as_rational() {
            return Some(Self::from_rational(&q.recip()));
        }
        let n = self.order;
        let mut prod = Cyclo::one();
        for k in 2..n {
            if k.gcd(&n) == 1 {
                prod = prod.mul(&self.galois(k));
            }
        }
        let norm = self.mul(&prod).as_rational().expect("field norm is rational");
        Some(prod.scale(&norm.recip()))
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        Some(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Cyclo::one();
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            k >>= 1;
        }
        Some(acc)
    }

    /// If the element is a root of unity, return (order of the field used, exponent).
    pub fn root_of_unity_exponent(&self) -> Option<(u32, u32)> {
        if !self.is_integral() {
            return None;
        }
        let m = lcm(self.order, 2);
        let lifted = self.lift(m);
        (0..m).find(|&k| Cyclo::root_of_unity(m, k as i64).lift(m) == lifted).map(|k| {
            let g = k.gcd(&m).max(1);
            if k == 0 {
                (1, 0)
            } else {
                (m / g, k / g)
            }
        })
    }

    /// Floating value as (mantissa, binary exponent): value ≈ mantissa · 2^exp.
    pub fn to_c64_scaled(&self) -> ((f64, f64), i64) {
        let bits = self.coeffs.iter().map(|c| c.bits()).max().unwrap_or(0) as i64;
        let shift = (bits - 60).max(0);
        let n = self.order as f64;
        let (mut re, mut im) = (0.0, 0.0);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = (c >> shift as usize).to_f64().unwrap_or(0.0);
            let ang = std::f64::consts::TAU * k as f64 / n;
            re += v * ang.cos();
            im += v * ang.sin();
        }
        let dbits = self.den.bits() as i64;
        let dshift = (dbits - 60).max(0);
        let d = (&self.den >> dshift as usize).to_f64().unwrap_or(1.0);
        ((re / d, im / d), shift - dshift)
    }

    pub fn to_c64(&self) -> (f64, f64) {
        let ((re, im), e) = self.to_c64_scaled();
        let s = 2f64.powi(e as i32);
        (re * s, im * s)
    }

    /// Sign of a real element, decided from a floating evaluation with an error bound.
    /// Returns None if the element is not real or the bound does not separate it from zero.
    pub fn real_sign(&self) -> Option<std::cmp::Ordering> {
        use std::cmp::Ordering;
        if self.is_zero() {
            return Some(Ordering::Equal);
        }
        if let Some(q) = self.as_rational() {
            return Some(q.cmp(&BigRational::zero()));
        }
        if *self != self.conj() {
            return None;
        }
        let ((re, _), _) = self.to_c64_scaled();
        let bits = self.coeffs.iter().map(|c| c.bits()).max().unwrap_or(0) as i64;
        let shift = (bits - 60).max(0);
        let mag: f64 = self
            .coeffs
            .iter()
            .map(|c| (c >> shift as usize).to_f64().unwrap_or(0.0).abs())
            .sum::<f64>()
            / (&self.den >> ((self.den.bits() as i64 - 60).max(0) as usize)).to_f64().unwrap_or(1.0);
        if re.abs() > mag * 1e-12 + f64::MIN_POSITIVE {
            Some(if re > 0.0 { Ordering::Greater } else { Ordering::Less })
        } else {
            None
        }
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.den == other.den && self.coeffs == other.coeffs;
        }
        let (a, b) = Self::common(self, other);
        a.den == b.den && a.coeffs == b.coeffs
    }
}

impl Eq for Cyclo {}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{}", q);
        }
        let mut first = true;
        write!(f, "(")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "{}·ζ{}", c, self.order)?,
                _ => write!(f, "{}·ζ{}^{}", c, self.order, k)?,
            }
        }
        write!(f, ")")?;
        if !self.den.is_one() {
            write!(f, "/{}", self.den)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(*cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(euler_phi(7), 6);
    }

    #[test]
    fn i_squared() {
        let i = Cyclo::i();
        assert_eq!(i.mul(&i), Cyclo::from_int(-1));
        assert_eq!(i.inv().unwrap(), i.neg());
        assert_eq!(i.conj(), i.neg());
    }

    #[test]
    fn mixed_orders() {
        // ζ_3 · ζ_4 = ζ_12^7
        let p = Cyclo::root_of_unity(3, 1).mul(&Cyclo::root_of_unity(4, 1));
        assert_eq!(p, Cyclo::root_of_unity(12, 7));
        // ζ_6 = -ζ_3^2
        assert_eq!(Cyclo::root_of_unity(6, 1), Cyclo::root_of_unity(3, 2).neg());
    }

    #[test]
    fn inverse_roundtrip() {
        let z = Cyclo::root_of_unity(7, 1);
        let x = Cyclo::from_int(2).sub(&z).add(&z.mul(&z).mul(&z));
        let y = x.inv().unwrap();
        assert!(x.mul(&y).is_one());
    }

    #[test]
    fn real_sign_of_cosines() {
        let z = Cyclo::root_of_unity(7, 1);
        let two_cos = z.add(&z.conj());
        assert_eq!(two_cos.real_sign(), Some(std::cmp::Ordering::Greater));
        let w = Cyclo::root_of_unity(7, 3);
        assert_eq!(w.add(&w.conj()).real_sign(), Some(std::cmp::Ordering::Less));
    }

    #[test]
    fn shrink_to_subfield() {
        let x = Cyclo::i().lift(12);
        assert_eq!(x.shrink().order(), 4);
        let sqrt3i = Cyclo::root_of_unity(3, 1).sub(&Cyclo::root_of_unity(3, 2));
        assert_eq!(sqrt3i.lift(12).shrink().order(), 3);
    }

    #[test]
    fn roots_detected() {
        assert_eq!(Cyclo::i().root_of_unity_exponent(), Some((4, 1)));
        assert_eq!(Cyclo::from_int(-1).root_of_unity_exponent(), Some((2, 1)));
        assert_eq!(Cyclo::from_int(2).root_of_unity_exponent(), None);
        assert_eq!(Cyclo::root_of_unity(6, 1).root_of_unity_exponent(), Some((6, 1)));
    }
}
