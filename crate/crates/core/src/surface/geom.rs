//! Exact plane geometry: affine maps z ↦ az + b and orientation predicates.

use std::cmp::Ordering;

use crate::arith::{Num, Symbols};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Affine {
    pub a: Num,
    pub b: Num,
}

impl Affine {
    pub fn new(a: Num, b: Num) -> Self {
        Affine { a, b }
    }

    pub fn identity() -> Self {
        Affine { a: Num::one(), b: Num::zero() }
    }

    pub fn translation(b: Num) -> Self {
        Affine { a: Num::one(), b }
    }

    pub fn apply(&self, z: &Num) -> Num {
        self.a.mul(z).add(&self.b)
    }

    /// self ∘ other.
    pub fn compose(&self, other: &Affine) -> Affine {
        Affine { a: self.a.mul(&other.a), b: self.a.mul(&other.b).add(&self.b) }
    }

    pub fn inverse(&self) -> Option<Affine> {
        let ai = self.a.inv()?;
        Some(Affine { b: ai.mul(&self.b).neg(), a: ai })
    }

    /// The unique map with p0 ↦ q0 and p1 ↦ q1.
    pub fn through(p0: &Num, p1: &Num, q0: &Num, q1: &Num) -> Option<Affine> {
        let a = q1.sub(q0).div(&p1.sub(p0))?;
        if a.is_zero() {
            return None;
        }
        let b = q0.sub(&a.mul(p0));
        Some(Affine { a, b })
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_translation(&self) -> bool {
        self.a.is_one()
    }
}

/// Im(ū·v): positive when v is counterclockwise from u.
pub fn cross(u: &Num, v: &Num) -> Num {
    u.conj().mul(v).im()
}

/// Re(ū·v).
pub fn dot(u: &Num, v: &Num) -> Num {
    u.conj().mul(v).re()
}

pub fn sign(x: &Num, syms: &Symbols) -> Result<Ordering> {
    x.real_sign(syms).ok_or_else(|| Error::Numeric(format!("cannot decide the sign of {}", x.display(syms))))
}

/// Twice the signed area of a polygon.
pub fn double_area(poly: &[Num]) -> Num {
    let n = poly.len();
    (0..n).fold(Num::zero(), |acc, k| acc.add(&cross(&poly[k], &poly[(k + 1) % n])))
}

/// Whether `p` lies on the closed segment [u, v].
pub fn on_segment(u: &Num, v: &Num, p: &Num, syms: &Symbols) -> Result<bool> {
    let d = v.sub(u);
    let w = p.sub(u);
    if !cross(&d, &w).is_zero() {
        return Ok(false);
    }
    let t = dot(&d, &w);
    Ok(sign(&t, syms)? != Ordering::Less && sign(&dot(&d, &d).sub(&t), syms)? != Ordering::Less)
}

/// Whether closed segments [p0,p1] and [q0,q1] meet.
pub fn segments_meet(p0: &Num, p1: &Num, q0: &Num, q1: &Num, syms: &Symbols) -> Result<bool> {
    let d = p1.sub(p0);
    let e = q1.sub(q0);
    let s1 = sign(&cross(&d, &q0.sub(p0)), syms)?;
    let s2 = sign(&cross(&d, &q1.sub(p0)), syms)?;
    let s3 = sign(&cross(&e, &p0.sub(q0)), syms)?;
    let s4 = sign(&cross(&e, &p1.sub(q0)), syms)?;
    if s1 != s2 && s3 != s4 && s1 != Ordering::Equal && s2 != Ordering::Equal && s3 != Ordering::Equal && s4 != Ordering::Equal {
        return Ok(true);
    }
    Ok(on_segment(p0, p1, q0, syms)? || on_segment(p0, p1, q1, syms)? || on_segment(q0, q1, p0, syms)? || on_segment(q0, q1, p1, syms)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn affine_algebra() {
        let f = Affine::new(Num::i(), Num::int(2));
        let g = f.inverse().unwrap();
        assert!(f.compose(&g).is_identity());
        let h = Affine::through(&Num::zero(), &Num::one(), &Num::i(), &Num::int(2)).unwrap();
        assert_eq!(h.apply(&Num::one()), Num::int(2));
        assert_eq!(double_area(&[Num::zero(), Num::one(), Num::one().add(&Num::i()), Num::i()]), Num::int(2));
    }

    #[test]
    fn segment_meeting() {
        let s = Symbols::new();
        let z = |re: i64, im: i64| Num::int(re).add(&Num::i().mul(&Num::int(im)));
        assert!(segments_meet(&z(0, 0), &z(2, 2), &z(0, 2), &z(2, 0), &s).unwrap());
        assert!(!segments_meet(&z(0, 0), &z(1, 0), &z(0, 1), &z(1, 1), &s).unwrap());
        assert!(segments_meet(&z(0, 0), &z(2, 0), &z(1, 0), &z(1, 1), &s).unwrap());
    }
}
