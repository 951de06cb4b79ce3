//! Admissibility of period vectors as translation-surface periods.
//!
//! A period vector is admissible when its symplectic volume is positive and,
//! if its image is a lattice, the volume strictly exceeds the lattice covolume.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::arith::cyclo::lcm;
use crate::arith::linalg::{hermite_rows, integerize, solve_columns};
use crate::arith::poly::Mono;
use crate::arith::{Num, Symbols};
use crate::character::period::PeriodVector;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case", tag = "reason")]
pub enum Rejection {
    NonPositiveVolume,
    VolumeNotAboveCovolume,
}

#[derive(Clone, Debug)]
pub struct PeriodLattice {
    /// ℤ-basis of the period image.
    pub basis: [Num; 2],
    pub covolume: Num,
}

#[derive(Clone, Debug)]
pub struct HauptVerdict {
    pub volume: Num,
    pub lattice: Option<PeriodLattice>,
    pub rejection: Option<Rejection>,
}

impl HauptVerdict {
    pub fn accepted(&self) -> bool {
        self.rejection.is_none()
    }
}

pub fn haupt_check(p: &PeriodVector, syms: &Symbols) -> Result<HauptVerdict> {
    if p.0.is_empty() || !p.0.len().is_multiple_of(2) {
        return Err(Error::Invalid(format!("period vector needs an even positive length, got {}", p.0.len())));
    }
    let volume = p.untwisted_volume();
    let sign = |x: &Num| x.real_sign(syms).ok_or_else(|| Error::Numeric(format!("cannot certify the sign of {}", x.display(syms))));
    if sign(&volume)? != Ordering::Greater {
        return Ok(HauptVerdict { volume, lattice: None, rejection: Some(Rejection::NonPositiveVolume) });
    }
    let lattice = period_lattice(&p.0, syms)?;
    let rejection = match &lattice {
        Some(l) if sign(&volume.sub(&l.covolume))? != Ordering::Greater => Some(Rejection::VolumeNotAboveCovolume),
        _ => None,
    };
    Ok(HauptVerdict { volume, lattice, rejection })
}

/// Rational coordinates of numbers in the ℚ-basis of monomials times powers of
/// a common root of unity. Quotients have no such coordinates.
pub(crate) fn rational_coords(xs: &[Num]) -> Result<Vec<Vec<BigRational>>> {
    let polys = xs
        .iter()
        .map(|x| match x {
            Num::Const(c) => Ok(crate::arith::poly::Poly::constant(c.clone())),
            Num::Poly(p) => Ok(p.clone()),
            Num::Frac(..) => Err(Error::InexpressibleExactly(x.to_string())),
        })
        .collect::<Result<Vec<_>>>()?;
    let order = polys.iter().flat_map(|p| p.terms().map(|(_, c)| c.order())).fold(1, lcm);
    let mut index: BTreeMap<(Mono, usize), usize> = BTreeMap::new();
    let mut sparse: Vec<Vec<(usize, BigRational)>> = Vec::new();
    for p in &polys {
        let mut row = Vec::new();
        for (m, c) in p.terms() {
            let c = c.lift(order);
            for (k, a) in c.coeffs().iter().enumerate().filter(|(_, a)| !a.is_zero()) {
                let next = index.len();
                let col = *index.entry((m.clone(), k)).or_insert(next);
                row.push((col, BigRational::new(a.clone(), c.den().clone())));
            }
        }
        sparse.push(row);
    }
    let width = index.len();
    Ok(sparse
        .into_iter()
        .map(|row| {
            let mut v = vec![BigRational::zero(); width];
            for (c, q) in row {
                v[c] += q;
            }
            v
        })
        .collect())
}

/// Im(conj(u)·v): signed area spanned by u and v.
fn wedge(u: &Num, v: &Num) -> Num {
    u.re().mul(&v.im()).sub(&u.im().mul(&v.re()))
}

/// The ℤ-span of the values when it is a lattice in ℂ.
pub fn period_lattice(values: &[Num], syms: &Symbols) -> Result<Option<PeriodLattice>> {
    let coords = rational_coords(values)?;
    // a ℚ-basis of the span, taken from the values themselves
    let mut chosen: Vec<usize> = Vec::new();
    for (k, c) in coords.iter().enumerate() {
        if c.iter().all(Zero::is_zero) {
            continue;
        }
        let cols: Vec<Vec<BigRational>> = chosen.iter().map(|&j| coords[j].clone()).collect();
        if chosen.is_empty() || solve_columns(&cols, c).is_none() {
            chosen.push(k);
            if chosen.len() > 2 {
                return Ok(None);
            }
        }
    }
    if chosen.len() != 2 {
        return Ok(None);
    }
    let (u, v) = (&values[chosen[0]], &values[chosen[1]]);
    let area = wedge(u, v);
    if area.is_zero() {
        // ℚ-rank two inside a real line: dense, not discrete
        return Ok(None);
    }
    let cols = vec![coords[chosen[0]].clone(), coords[chosen[1]].clone()];
    let mut flat: Vec<BigRational> = Vec::new();
    for c in &coords {
        let x = solve_columns(&cols, c).expect("value lies in the chosen span");
        flat.extend(x);
    }
    let (ints, den) = integerize(&flat);
    let rows: Vec<Vec<BigInt>> = ints.chunks(2).map(<[BigInt]>::to_vec).collect();
    let h = hermite_rows(&rows);
    debug_assert_eq!(h.len(), 2);
    let q = |x: &BigInt| Num::rational(&BigRational::new(x.clone(), den.clone()));
    let gen = |r: &[BigInt]| q(&r[0]).mul(u).add(&q(&r[1]).mul(v));
    let basis = [gen(&h[0]), gen(&h[1])];
    let det = &h[0][0] * &h[1][1] - &h[0][1] * &h[1][0];
    let scale = BigRational::new(det.abs(), &den * &den);
    let covolume = Num::rational(&scale).mul(&area);
    let covolume = match covolume.real_sign(syms) {
        Some(Ordering::Less) => covolume.neg(),
        Some(_) => covolume,
        None => return Err(Error::Numeric(format!("cannot certify the sign of {}", covolume.display(syms)))),
    };
    Ok(Some(PeriodLattice { basis, covolume }))
}
