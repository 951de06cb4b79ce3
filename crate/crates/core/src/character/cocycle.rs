//! Twisted cocycles λ ∈ Z¹_α and affine representations ρ(γ) = α(γ)z + λ(γ).

use crate::arith::Num;
use crate::error::{Error, Result};
use crate::group::word::{letter_gen, relator};
use crate::group::{MappingClass, Word};

use super::character::Character;

/// λ(w) from generator values by the rule λ(uv) = λ(u) + α(u)λ(v).
pub fn eval_cocycle_raw(alpha: &[Num], lambda: &[Num], w: &Word) -> Num {
    let mut total = Num::zero();
    let mut prefix = Num::one();
    for &l in w.letters() {
        let k = letter_gen(l);
        if l > 0 {
            if !lambda[k].is_zero() {
                total = total.add(&prefix.mul(&lambda[k]));
            }
            prefix = prefix.mul(&alpha[k]);
        } else {
            prefix = prefix.div(&alpha[k]).expect("nonzero character value");
            if !lambda[k].is_zero() {
                total = total.sub(&prefix.mul(&lambda[k]));
            }
        }
    }
    total
}

/// Values of λ on the generators.
#[derive(Clone, Debug, PartialEq)]
pub struct Cocycle(pub Vec<Num>);

impl Cocycle {
    pub fn zero(n: usize) -> Self {
        Cocycle(vec![Num::zero(); n])
    }

    pub fn values(&self) -> &[Num] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Num::is_zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        Cocycle(self.0.iter().zip(&o.0).map(|(x, y)| x.add(y)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        Cocycle(self.0.iter().zip(&o.0).map(|(x, y)| x.sub(y)).collect())
    }

    pub fn scale(&self, c: &Num) -> Self {
        Cocycle(self.0.iter().map(|x| x.mul(c)).collect())
    }

    pub fn eval(&self, alpha: &Character, w: &Word) -> Num {
        eval_cocycle_raw(alpha.values(), &self.0, w)
    }

    /// Z¹_α membership: λ(R) = 0 computed by evaluation on the relator.
    pub fn is_cocycle_for(&self, alpha: &Character) -> bool {
        self.0.len() == alpha.ngens() && self.eval(alpha, &relator(alpha.genus())).is_zero()
    }

    /// λ∘φ.
    pub fn precompose(&self, alpha: &Character, phi: &MappingClass) -> Self {
        Cocycle(phi.images().iter().map(|w| self.eval(alpha, w)).collect())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AffineRep {
    character: Character,
    cocycle: Cocycle,
}

impl AffineRep {
    pub fn new(character: Character, cocycle: Cocycle) -> Result<Self> {
        if cocycle.len() != character.ngens() {
            return Err(Error::GenusMismatch { expected: character.ngens(), found: cocycle.len() });
        }
        if !cocycle.is_cocycle_for(&character) {
            let v = cocycle.eval(&character, &relator(character.genus()));
            return Err(Error::InvalidCocycle(format!("λ(R) = {}", v.display(character.symbols()))));
        }
        Ok(AffineRep { character, cocycle })
    }

    pub fn character(&self) -> &Character {
        &self.character
    }

    pub fn cocycle(&self) -> &Cocycle {
        &self.cocycle
    }

    pub fn genus(&self) -> usize {
        self.character.genus()
    }

    pub fn eval_linear(&self, w: &Word) -> Num {
        self.character.eval(w)
    }

    pub fn eval_translation(&self, w: &Word) -> Num {
        self.cocycle.eval(&self.character, w)
    }

    /// Abelian image: α ≡ 1, or λ a multiple of the coboundary 1 − α.
    pub fn is_abelian(&self) -> bool {
        let alpha = &self.character;
        let Some(k0) = alpha.first_nontrivial() else { return true };
        let one_minus = |k: usize| Num::one().sub(alpha.value(k));
        let c = self.cocycle.0[k0].div(&one_minus(k0)).unwrap();
        (0..alpha.ngens()).all(|k| self.cocycle.0[k] == c.mul(&one_minus(k)))
    }

    /// Precomposition by a verified automorphism.
    pub fn apply(&self, phi: &MappingClass) -> Result<Self> {
        phi.verify()?;
        Ok(self.apply_unchecked(phi))
    }

    /// Precomposition without re-verifying φ (for catalog moves in long walks).
    pub fn apply_unchecked(&self, phi: &MappingClass) -> Self {
        AffineRep {
            character: self.character.precompose(phi).expect("genus checked"),
            cocycle: self.cocycle.precompose(&self.character, phi),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::real::rat;
    use crate::arith::Symbols;
    use std::sync::Arc;

    #[test]
    fn cocycle_rule_examples() {
        let alpha = vec![Num::int(2), Num::one(), Num::one(), Num::one()];
        let lambda = vec![Num::one(), Num::zero(), Num::zero(), Num::zero()];
        assert_eq!(eval_cocycle_raw(&alpha, &lambda, &Word::new(vec![1, 1])), Num::int(3));
        assert_eq!(eval_cocycle_raw(&alpha, &lambda, &Word::new(vec![-1])), Num::rational(&rat(-1, 2)));
    }

    #[test]
    fn invalid_cocycle_rejected() {
        let alpha = Character::from_values(vec![Num::int(2), Num::one(), Num::one(), Num::one()], Arc::new(Symbols::new()))
            .unwrap();
        let lam = Cocycle(vec![Num::zero(), Num::one(), Num::zero(), Num::zero()]);
        assert!(matches!(AffineRep::new(alpha, lam), Err(Error::InvalidCocycle(_))));
    }

    #[test]
    fn abelian_detection() {
        let alpha = Character::roots_of_unity(4, &[1, 0, 0, 0]);
        let cob = Cocycle(alpha.values().iter().map(|a| Num::one().sub(a).mul(&Num::int(3))).collect());
        assert!(AffineRep::new(alpha, cob).unwrap().is_abelian());
    }
}
