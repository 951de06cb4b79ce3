//! Mapping classes as surface-group automorphisms with stored inverses.

use serde::{Deserialize, Serialize};

use super::word::{relator, Word};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MappingClass {
    pub label: String,
    images: Vec<Word>,
    inverse_images: Vec<Word>,
}

impl MappingClass {
    /// Build and verify.
    pub fn new(label: impl Into<String>, images: Vec<Word>, inverse_images: Vec<Word>) -> Result<Self> {
        let m = MappingClass { label: label.into(), images, inverse_images };
        m.verify()?;
        Ok(m)
    }

    pub(crate) fn unchecked(label: impl Into<String>, images: Vec<Word>, inverse_images: Vec<Word>) -> Self {
        MappingClass { label: label.into(), images, inverse_images }
    }

    pub fn identity(genus: usize) -> Self {
        let ids: Vec<Word> = (0..2 * genus).map(Word::generator).collect();
        MappingClass { label: "id".into(), images: ids.clone(), inverse_images: ids }
    }

    pub fn genus(&self) -> usize {
        self.images.len() / 2
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn inverse_images(&self) -> &[Word] {
        &self.inverse_images
    }

    /// Checks: orientation-preserving action on the relator and the stored inverse.
    pub fn verify(&self) -> Result<()> {
        let n = self.images.len();
        if n == 0 || !n.is_multiple_of(2) || self.inverse_images.len() != n {
            return Err(Error::InvalidAutomorphism(format!("{}: wrong number of images", self.label)));
        }
        if self.images.iter().chain(&self.inverse_images).any(|w| w.max_generator().is_some_and(|k| k >= n)) {
            return Err(Error::InvalidAutomorphism(format!("{}: letter outside the generating set", self.label)));
        }
        let r = relator(n / 2);
        let img = r.substitute(&self.images);
        if !img.is_free_conjugate(&r) {
            let why = if img.is_free_conjugate(&r.inverse()) { "reverses orientation" } else { "does not preserve the relator" };
            return Err(Error::InvalidAutomorphism(format!("{}: {}", self.label, why)));
        }
        for k in 0..n {
            let g = Word::generator(k);
            if self.inverse_images[k].substitute(&self.images) != g || self.images[k].substitute(&self.inverse_images) != g {
                return Err(Error::InvalidAutomorphism(format!("{}: stored inverse does not invert", self.label)));
            }
        }
        Ok(())
    }

    pub fn inverse(&self) -> Self {
        MappingClass {
            label: invert_label(&self.label),
            images: self.inverse_images.clone(),
            inverse_images: self.images.clone(),
        }
    }

    /// Image of a word.
    pub fn apply(&self, w: &Word) -> Word {
        w.substitute(&self.images)
    }

    /// Product whose action on representations is "first `self`, then `o`":
    /// ρ·(φψ) = (ρ·φ)·ψ, i.e. ρ ↦ ρ∘φ∘ψ.
    pub fn then(&self, o: &Self) -> Self {
        let images = o.images.iter().map(|w| w.substitute(&self.images)).collect();
        let inverse_images = self.inverse_images.iter().map(|w| w.substitute(&o.inverse_images)).collect();
        MappingClass { label: format!("{}*{}", self.label, o.label), images, inverse_images }
    }

    /// Product φ·ψ = ψ∘φ on the group, so that matrices of λ ↦ λ∘φ multiply
    /// in the same order: M(φ·ψ) = M(φ)M(ψ).
    pub fn product(&self, o: &Self) -> Self {
        let mut p = o.then(self);
        p.label = format!("{}.{}", self.label, o.label);
        p
    }

    /// Extend to a larger genus by fixing the added handles.
    pub fn embed(&self, genus: usize) -> Self {
        let mut images = self.images.clone();
        let mut inverse_images = self.inverse_images.clone();
        for k in images.len()..2 * genus {
            images.push(Word::generator(k));
            inverse_images.push(Word::generator(k));
        }
        MappingClass { label: self.label.clone(), images, inverse_images }
    }

    /// Integer matrix H of the action on H₁: column k is the class of φ(x_k).
    pub fn homology_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.images.len();
        let cols: Vec<Vec<i64>> = self.images.iter().map(|w| w.abelianize(n)).collect();
        (0..n).map(|j| (0..n).map(|k| cols[k][j]).collect()).collect()
    }

    pub fn is_torelli(&self) -> bool {
        let h = self.homology_matrix();
        h.iter().enumerate().all(|(i, row)| row.iter().enumerate().all(|(j, &x)| x == i64::from(i == j)))
    }
}

fn invert_label(l: &str) -> String {
    match l.strip_suffix("^-1") {
        Some(base) => base.to_string(),
        None => format!("{}^-1", l),
    }
}

/// Standard symplectic form J with J(a_i, b_i) = 1.
pub fn symplectic_form(genus: usize) -> Vec<Vec<i64>> {
    let n = 2 * genus;
    let mut j = vec![vec![0i64; n]; n];
    for i in 0..genus {
        j[2 * i][2 * i + 1] = 1;
        j[2 * i + 1][2 * i] = -1;
    }
    j
}

pub fn is_symplectic(m: &[Vec<i64>]) -> bool {
    let n = m.len();
    let j = symplectic_form(n / 2);
    for r in 0..n {
        for c in 0..n {
            let mut s = 0i64;
            for p in 0..n {
                for q in 0..n {
                    s += m[p][r] * j[p][q] * m[q][c];
                }
            }
            if s != j[r][c] {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_verifies() {
        assert!(MappingClass::identity(2).verify().is_ok());
        assert!(MappingClass::identity(3).is_torelli());
    }

    #[test]
    fn wrong_inverse_rejected() {
        let ids: Vec<Word> = (0..4).map(Word::generator).collect();
        let mut imgs = ids.clone();
        imgs[1] = Word::new(vec![2, 1]);
        let err = MappingClass::new("bad", imgs, ids).unwrap_err();
        assert!(matches!(err, Error::InvalidAutomorphism(_)));
    }

    #[test]
    fn orientation_reversal_rejected() {
        // a1 <-> b1 swap sends [a1,b1] to [b1,a1] = [a1,b1]^-1
        let mut imgs: Vec<Word> = (0..4).map(Word::generator).collect();
        imgs.swap(0, 1);
        let m = MappingClass::new("swap", imgs.clone(), imgs);
        assert!(m.is_err());
    }
}
