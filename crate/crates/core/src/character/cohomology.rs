//! Z¹_α, the coboundary direction 1 − α, and canonical classes in H¹_α.
//!
//! The relator constraint is always obtained by evaluating λ(R) on unit
//! cocycles, never from a closed formula.

use crate::arith::Num;
use crate::error::{Error, Result};
use crate::group::word::relator;

use super::character::Character;
use super::cocycle::{eval_cocycle_raw, Cocycle};

/// c_k = λ(R) for λ the k-th unit vector; λ ∈ Z¹_α iff Σ c_k λ_k = 0.
pub fn relator_coefficients(alpha: &Character) -> Vec<Num> {
    let r = relator(alpha.genus());
    let n = alpha.ngens();
    (0..n)
        .map(|k| {
            let mut e = vec![Num::zero(); n];
            e[k] = Num::one();
            eval_cocycle_raw(alpha.values(), &e, &r)
        })
        .collect()
}

pub fn coboundary(alpha: &Character) -> Cocycle {
    Cocycle(alpha.values().iter().map(|a| Num::one().sub(a)).collect())
}

/// Pivot data for a nontrivial character: (k₀, j₁, c).
struct Pivots {
    k0: usize,
    j1: usize,
    c: Vec<Num>,
}

fn pivots(alpha: &Character) -> Option<Pivots> {
    let k0 = alpha.first_nontrivial()?;
    let c = relator_coefficients(alpha);
    let j1 = (0..alpha.ngens()).find(|&j| j != k0 && !c[j].is_zero()).expect("nontrivial character has a nonzero relator coefficient");
    Some(Pivots { k0, j1, c })
}

/// Basis of H¹_α: 2g unit cocycles if α ≡ 1, otherwise 2g − 2 canonical cocycles.
pub fn cohomology_basis(alpha: &Character) -> Vec<Cocycle> {
    let n = alpha.ngens();
    let Some(p) = pivots(alpha) else {
        return (0..n)
            .map(|k| {
                let mut e = vec![Num::zero(); n];
                e[k] = Num::one();
                Cocycle(e)
            })
            .collect();
    };
    (0..n)
        .filter(|&k| k != p.k0 && k != p.j1)
        .map(|k| {
            let mut v = vec![Num::zero(); n];
            v[k] = p.c[p.j1].clone();
            v[p.j1] = p.c[k].neg();
            Cocycle(v)
        })
        .collect()
}

/// Basis of Z¹_α: dimension 2g if α ≡ 1, else 2g − 1.
pub fn cocycle_space_basis(alpha: &Character) -> Vec<Cocycle> {
    let mut b = cohomology_basis(alpha);
    if !alpha.is_trivial() {
        b.push(coboundary(alpha));
    }
    b
}

/// Canonical representative of λ modulo the coboundary.
#[derive(Clone, Debug, PartialEq)]
pub struct CohomologyClass {
    representative: Cocycle,
}

impl CohomologyClass {
    pub fn representative(&self) -> &Cocycle {
        &self.representative
    }

    pub fn is_zero(&self) -> bool {
        self.representative.is_zero()
    }
}

/// Subtract the multiple of 1 − α that kills λ at the first index with α ≠ 1.
pub fn reduce_class(alpha: &Character, lambda: &Cocycle) -> Result<CohomologyClass> {
    let k0 = alpha.first_nontrivial().ok_or(Error::TrivialCharacterNoReduction)?;
    let cob = coboundary(alpha);
    let t = lambda.0[k0].div(&cob.0[k0]).expect("pivot with α ≠ 1");
    let mut rep = lambda.sub(&cob.scale(&t));
    rep.0[k0] = Num::zero();
    Ok(CohomologyClass { representative: rep })
}

/// Class of λ, treating α ≡ 1 as the identity reduction.
pub fn class_of(alpha: &Character, lambda: &Cocycle) -> CohomologyClass {
    reduce_class(alpha, lambda).unwrap_or_else(|_| CohomologyClass { representative: lambda.clone() })
}

/// Coordinates of [λ] in `cohomology_basis(alpha)`.
pub fn coordinates(alpha: &Character, lambda: &Cocycle) -> Vec<Num> {
    let Some(p) = pivots(alpha) else { return lambda.0.clone() };
    let rep = class_of(alpha, lambda).representative;
    (0..alpha.ngens())
        .filter(|&k| k != p.k0 && k != p.j1)
        .map(|k| rep.0[k].div(&p.c[p.j1]).unwrap())
        .collect()
}

/// Cocycle with the given coordinates in `cohomology_basis(alpha)`.
pub fn from_coordinates(alpha: &Character, coords: &[Num]) -> Cocycle {
    let basis = cohomology_basis(alpha);
    let n = alpha.ngens();
    basis.iter().zip(coords).fold(Cocycle::zero(n), |acc, (b, c)| acc.add(&b.scale(c)))
}

/// Equality in H¹_α.
pub fn same_class(alpha: &Character, l1: &Cocycle, l2: &Cocycle) -> bool {
    class_of(alpha, l1) == class_of(alpha, l2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::linalg::rank;
    use crate::arith::Symbols;
    use std::sync::Arc;

    fn values_char(v: Vec<Num>) -> Character {
        Character::from_values(v, Arc::new(Symbols::new())).unwrap()
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(cocycle_space_basis(&Character::trivial(2)).len(), 4);
        let mut v = vec![Num::one(); 6];
        v[0] = Num::int(2);
        let alpha = values_char(v);
        let b = cocycle_space_basis(&alpha);
        assert_eq!(b.len(), 5);
        for l in &b {
            assert!(l.is_cocycle_for(&alpha));
        }
        let m: Vec<Vec<Num>> = b.iter().map(|c| c.0.clone()).collect();
        assert_eq!(rank(&m), 5);
    }

    #[test]
    fn coboundary_examples() {
        assert!(coboundary(&Character::trivial(2)).is_zero());
        let alpha = values_char(vec![Num::int(2), Num::one(), Num::one(), Num::one()]);
        let c = coboundary(&alpha);
        assert_eq!(c.0, vec![Num::int(-1), Num::zero(), Num::zero(), Num::zero()]);
        assert!(c.is_cocycle_for(&alpha));
    }

    #[test]
    fn reduction_examples() {
        let alpha = Character::roots_of_unity(5, &[1, 2, 0, 3]);
        let cob = coboundary(&alpha);
        assert!(reduce_class(&alpha, &cob).unwrap().is_zero());
        let b = cohomology_basis(&alpha);
        let lam = b[0].add(&b[1].scale(&Num::int(-2)));
        let shifted = lam.add(&cob.scale(&Num::int(3)));
        assert_eq!(reduce_class(&alpha, &lam).unwrap(), reduce_class(&alpha, &shifted).unwrap());
        assert_eq!(reduce_class(&Character::trivial(2), &lam), Err(Error::TrivialCharacterNoReduction));
    }

    #[test]
    fn coordinates_roundtrip() {
        let alpha = Character::roots_of_unity(7, &[0, 3, 1, 5, 2, 6]);
        let coords: Vec<Num> = (0..4).map(|k| Num::int(k as i64 - 1)).collect();
        let lam = from_coordinates(&alpha, &coords).add(&coboundary(&alpha).scale(&Num::int(5)));
        assert_eq!(coordinates(&alpha, &lam), coords);
    }
}
