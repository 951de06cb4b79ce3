//! Hermitian volume pairing on H¹_α for unitary α.
//!
//! The pairing is the twisted cup product λ ∪ ν̄ evaluated on a 2-chain for
//! the fundamental class built from the prefixes of the relator:
//!
//! vol(λ, ν) = (i/2)·[ Σ_j λ(r_{<j})·ᾱ(r_{<j})·ν̄(x_j) − Σ_k λ(x_k)·ᾱ(x_k)·ν̄(x_k⁻¹) ]
//!
//! where r = x₁x₂… is the relator and ν̄ = conj∘ν is an ᾱ-cocycle. The
//! normalization gives vol = 1 on the square-torus class (1, i, 0, …) for α ≡ 1.

use std::cmp::Ordering;

use serde::Serialize;

use crate::arith::{Num, Symbols};
use crate::error::{Error, Result};
use crate::group::word::{relator, Word};

use super::character::Character;
use super::cocycle::{eval_cocycle_raw, AffineRep, Cocycle};
use super::cohomology::cohomology_basis;

pub fn pairing(alpha: &Character, lambda: &Cocycle, nu: &Cocycle) -> Num {
    let a = alpha.values();
    let abar: Vec<Num> = a.iter().map(Num::conj).collect();
    let nubar: Vec<Num> = nu.values().iter().map(Num::conj).collect();
    let r = relator(alpha.genus());
    let letters = r.letters();
    let mut total = Num::zero();
    // running prefix values λ(r_{<j}) and ᾱ(r_{<j})
    let mut lam_prefix = Num::zero();
    let mut alpha_prefix = Num::one();
    let mut abar_prefix = Num::one();
    for &l in letters {
        let x = Word::letter(l);
        let nux = eval_cocycle_raw(&abar, &nubar, &x);
        if !lam_prefix.is_zero() && !nux.is_zero() {
            total = total.add(&lam_prefix.mul(&abar_prefix).mul(&nux));
        }
        lam_prefix = lam_prefix.add(&alpha_prefix.mul(&eval_cocycle_raw(a, lambda.values(), &x)));
        alpha_prefix = alpha_prefix.mul(&alpha.eval(&x));
        abar_prefix = abar_prefix.mul(&eval_alpha(&abar, &x));
    }
    for k in 0..alpha.ngens() {
        let inv = Word::letter(-((k + 1) as i32));
        let nuinv = eval_cocycle_raw(&abar, &nubar, &inv);
        total = total.sub(&lambda.values()[k].mul(&abar[k]).mul(&nuinv));
    }
    total.mul(&Num::i().mul(&Num::rational(&num_rational::BigRational::new(1.into(), 2.into()))))
}

fn eval_alpha(values: &[Num], w: &Word) -> Num {
    w.letters().iter().fold(Num::one(), |acc, &l| {
        let v = &values[crate::group::word::letter_gen(l)];
        if l > 0 {
            acc.mul(v)
        } else {
            acc.div(v).unwrap()
        }
    })
}

/// Gram matrix of the pairing on a basis of H¹_α.
#[derive(Clone, Debug)]
pub struct VolumeForm {
    pub basis: Vec<Cocycle>,
    pub matrix: Vec<Vec<Num>>,
}

pub fn volume_form(alpha: &Character) -> Result<VolumeForm> {
    volume_form_on(alpha, cohomology_basis(alpha))
}

pub fn volume_form_on(alpha: &Character, basis: Vec<Cocycle>) -> Result<VolumeForm> {
    if !alpha.is_unitary() {
        return Err(Error::NotUnitary);
    }
    let matrix = basis.iter().map(|u| basis.iter().map(|v| pairing(alpha, u, v)).collect()).collect();
    Ok(VolumeForm { basis, matrix })
}

impl VolumeForm {
    pub fn is_hermitian(&self) -> bool {
        let n = self.matrix.len();
        (0..n).all(|i| (0..n).all(|j| self.matrix[i][j] == self.matrix[j][i].conj()))
    }

    pub fn signature(&self, syms: &Symbols) -> Result<Signature> {
        hermitian_signature(&self.matrix, syms)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

/// Signature by exact Hermitian congruence (row op with c, column op with c̄).
pub fn hermitian_signature(m: &[Vec<Num>], syms: &Symbols) -> Result<Signature> {
    let mut h: Vec<Vec<Num>> = m.to_vec();
    let n = h.len();
    let mut sig = Signature { positive: 0, negative: 0, zero: 0 };
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        // pick a nonzero diagonal pivot, or create one
        let pivot = active.iter().copied().find(|&i| !h[i][i].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                let pair = active
                    .iter()
                    .flat_map(|&i| active.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| i != j && !h[i][j].is_zero());
                let Some((i, j)) = pair else {
                    sig.zero += active.len();
                    break;
                };
                // e_i += c·e_j makes the diagonal 2·Re(c̄·h_ij); c = 1 or i keeps it nonzero
                let c = if !h[i][j].re().is_zero() { Num::one() } else { Num::i() };
                add_multiple(&mut h, i, j, &c);
                if h[i][i].is_zero() {
                    return Err(Error::Numeric("failed to create a diagonal pivot".into()));
                }
                i
            }
        };
        let d = h[p][p].clone();
        match d.real_sign(syms) {
            Some(Ordering::Greater) => sig.positive += 1,
            Some(Ordering::Less) => sig.negative += 1,
            _ => return Err(Error::Numeric(format!("cannot decide the sign of {}", d.display(syms)))),
        }
        for &j in active.iter().filter(|&&j| j != p) {
            if h[j][p].is_zero() {
                continue;
            }
            let c = h[j][p].div(&d).unwrap().neg();
            add_multiple(&mut h, j, p, &c);
        }
        active.retain(|&j| j != p);
    }
    Ok(sig)
}

/// e_i ← e_i + c·e_j: row i += c·row j, then column i += c̄·column j.
#[allow(clippy::needless_range_loop)]
fn add_multiple(h: &mut [Vec<Num>], i: usize, j: usize, c: &Num) {
    let n = h.len();
    for k in 0..n {
        let t = h[j][k].mul(c);
        h[i][k] = h[i][k].add(&t);
    }
    let cb = c.conj();
    for k in 0..n {
        let t = h[k][j].mul(&cb);
        h[k][i] = h[k][i].add(&t);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VolSign {
    Positive,
    Null,
    Negative,
}

/// vol(λ, λ) as an exact real number.
pub fn self_volume(rep: &AffineRep) -> Num {
    pairing(rep.character(), rep.cocycle(), rep.cocycle())
}

pub fn vol_sign(rep: &AffineRep) -> Result<VolSign> {
    if !rep.character().is_unitary() {
        return Err(Error::NotEuclidean("linear part is not unitary".into()));
    }
    if rep.is_abelian() {
        return Err(Error::NotEuclidean("representation is abelian".into()));
    }
    let v = self_volume(rep);
    match v.real_sign(rep.character().symbols()) {
        Some(Ordering::Greater) => Ok(VolSign::Positive),
        Some(Ordering::Less) => Ok(VolSign::Negative),
        Some(Ordering::Equal) => Ok(VolSign::Null),
        None => Err(Error::Numeric(format!("cannot decide the sign of {}", v.display(rep.character().symbols())))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::cohomology::coboundary;

    fn p(v: &[(i64, i64)]) -> Cocycle {
        Cocycle(
            v.iter()
                .map(|&(re, im)| Num::int(re).add(&Num::i().mul(&Num::int(im))))
                .collect(),
        )
    }

    #[test]
    fn untwisted_normalization() {
        let alpha = Character::trivial(2);
        assert_eq!(pairing(&alpha, &p(&[(1, 0), (0, 1), (0, 0), (0, 0)]), &p(&[(1, 0), (0, 1), (0, 0), (0, 0)])), Num::one());
        let q = p(&[(1, 0), (0, 1), (1, 0), (0, 1)]);
        assert_eq!(pairing(&alpha, &q, &q), Num::int(2));
    }

    #[test]
    fn signature_genus_two() {
        let alpha = Character::roots_of_unity(4, &[1, 0, 0, 0]);
        let f = volume_form(&alpha).unwrap();
        assert!(f.is_hermitian());
        let s = f.signature(alpha.symbols()).unwrap();
        assert_eq!((s.positive, s.negative, s.zero), (1, 1, 0));
    }

    #[test]
    fn coboundary_is_radical() {
        let alpha = Character::roots_of_unity(5, &[1, 3, 2, 0]);
        let cob = coboundary(&alpha);
        for b in cohomology_basis(&alpha) {
            assert!(pairing(&alpha, &cob, &b).is_zero());
            assert!(pairing(&alpha, &b, &cob).is_zero());
        }
    }

    #[test]
    fn non_unitary_rejected() {
        let alpha = Character::from_values(vec![Num::int(2), Num::one(), Num::one(), Num::one()], Default::default()).unwrap();
        assert!(matches!(volume_form(&alpha), Err(Error::NotUnitary)));
    }
}
