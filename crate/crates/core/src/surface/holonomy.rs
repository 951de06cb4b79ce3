//! Holonomy of a polygon surface on a symplectic basis of π₁.

use serde::Serialize;

use crate::arith::Num;
use crate::character::period::{exp_period, PeriodVector};
use crate::character::{AffineRep, Character, Cocycle};
use crate::error::{Error, Result};
use crate::group::word::Letter;

use super::geom::Affine;
use super::polygon::{reduce_path, reverse_path, Crossing, PolygonSurface};
use super::presentation::{certify_marking, fundamental_group, MarkingCertificate, Pi1};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BasisSource {
    Marking,
    Automatic,
}

#[derive(Clone, Debug)]
pub struct HolonomyReport {
    pub rep: AffineRep,
    /// Chart holonomies of the basis curves before any exponentiation.
    pub maps: Vec<Affine>,
    pub source: BasisSource,
    /// Basis curves as dual loops.
    pub paths: Vec<Vec<Crossing>>,
    /// Basis curves as words in the edge-loop generators.
    pub words: Vec<Vec<Letter>>,
    pub certificate: MarkingCertificate,
    pub pi1: Pi1,
}

impl HolonomyReport {
    pub fn periods(&self) -> PeriodVector {
        PeriodVector(self.maps.iter().map(|m| m.b.clone()).collect())
    }
}

/// Dual loop of an edge-loop generator: tree path, the pairing, tree path back.
pub fn edge_loop(s: &PolygonSurface, tree_paths: &[Option<Vec<Crossing>>], pairing: usize) -> Vec<Crossing> {
    let p = &s.pairings[pairing];
    let mut path = tree_paths[p.from.polygon].clone().unwrap_or_default();
    path.push(Crossing { pairing, forward: true });
    path.extend(reverse_path(tree_paths[p.to.polygon].as_deref().unwrap_or(&[])));
    reduce_path(&path)
}

/// Dual loop of a word in the edge-loop generators.
pub fn word_path(s: &PolygonSurface, pi: &Pi1, w: &[Letter]) -> Vec<Crossing> {
    let (tree_paths, _) = s.dual_tree(|_| true);
    let mut path = Vec::new();
    for &l in w {
        let lp = edge_loop(s, &tree_paths, pi.generators[l.unsigned_abs() as usize - 1]);
        if l > 0 {
            path.extend(lp);
        } else {
            path.extend(reverse_path(&lp));
        }
    }
    reduce_path(&path)
}

pub fn holonomy(s: &PolygonSurface) -> Result<HolonomyReport> {
    s.validate()?;
    let pi = fundamental_group(s)?;
    if pi.genus == 0 {
        return Err(Error::InvalidSurface("holonomy needs genus at least 1".into()));
    }
    let (source, paths, words) = match &s.marking {
        Some(m) => {
            if m.len() != 2 * pi.genus {
                return Err(Error::GenusMismatch { expected: 2 * pi.genus, found: m.len() });
            }
            let paths: Vec<Vec<Crossing>> = m.iter().map(|c| c.path.clone()).collect();
            let words = paths.iter().map(|p| pi.path_word(p)).collect();
            (BasisSource::Marking, paths, words)
        }
        None => {
            let paths = pi.basis.iter().map(|w| word_path(s, &pi, w)).collect();
            (BasisSource::Automatic, paths, pi.basis.clone())
        }
    };
    let certificate = certify_marking(&pi, &paths);
    let maps = paths.iter().map(|p| s.loop_holonomy(p)).collect::<Result<Vec<_>>>()?;
    let rep = if s.exp {
        if maps.iter().any(|m| !m.is_translation()) {
            return Err(Error::InvalidSurface("an exp-marked surface must be a translation surface".into()));
        }
        let alpha = exp_period(&PeriodVector(maps.iter().map(|m| m.b.clone()).collect()), s.symbols.clone())?;
        let n = alpha.ngens();
        AffineRep::new(alpha, Cocycle(vec![Num::zero(); n]))?
    } else {
        let alpha = Character::from_values(maps.iter().map(|m| m.a.clone()).collect(), s.symbols.clone())?;
        AffineRep::new(alpha, Cocycle(maps.iter().map(|m| m.b.clone()).collect()))
            .map_err(|e| Error::CertificateFailure(format!("basis holonomy violates the surface relation: {}", e)))?
    };
    Ok(HolonomyReport { rep, maps, source, paths, words, certificate, pi1: pi })
}

/// Exact conjugacy: (a, b) with a·λ₁ + b·(1 − α) = λ₂ on every generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conjugacy {
    pub a: Num,
    pub b: Num,
}

pub fn conjugacy(r1: &AffineRep, r2: &AffineRep) -> Result<Conjugacy> {
    let (c1, c2) = (r1.character(), r2.character());
    if c1.ngens() != c2.ngens() {
        return Err(Error::GenusMismatch { expected: c2.ngens(), found: c1.ngens() });
    }
    if c1.values() != c2.values() {
        return Err(Error::CertificateFailure("linear parts differ".into()));
    }
    let l1 = &r1.cocycle().0;
    let l2 = &r2.cocycle().0;
    let one_minus: Vec<Num> = c1.values().iter().map(|v| Num::one().sub(v)).collect();
    let cols = vec![l1.clone(), one_minus.clone()];
    let sol = crate::arith::linalg::solve_columns(&cols, l2).or_else(|| {
        // λ₁ and 1 − α may be dependent (abelian case): try each column alone
        [(0usize, l1), (1, &one_minus)].iter().find_map(|(k, col)| {
            crate::arith::linalg::solve_columns(&[(*col).clone()], l2).map(|x| if *k == 0 { vec![x[0].clone(), Num::zero()] } else { vec![Num::zero(), x[0].clone()] })
        })
    });
    let sol = sol.ok_or_else(|| Error::CertificateFailure("no conjugacy solves the translation equations".into()))?;
    let (mut a, b) = (sol[0].clone(), sol[1].clone());
    if a.is_zero() {
        // any a works when λ₁ lies in the coboundary line; prefer a = 1 if it fits
        a = Num::one();
    }
    let ok = (0..l1.len()).all(|k| a.mul(&l1[k]).add(&b.mul(&one_minus[k])) == l2[k]);
    if !ok {
        return Err(Error::CertificateFailure("conjugacy check failed".into()));
    }
    Ok(Conjugacy { a, b })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::period::untwisted_volume;
    use crate::surface::polygon::{translation_octagon, unit_square_torus};

    fn z(re: i64, im: i64) -> Num {
        Num::int(re).add(&Num::i().mul(&Num::int(im)))
    }

    #[test]
    fn square_torus_marked_and_automatic() {
        let mut s = unit_square_torus();
        let h = holonomy(&s).unwrap();
        assert_eq!(h.source, BasisSource::Marking);
        assert!(h.certificate.homology_symplectic && h.certificate.relation_holds);
        assert_eq!(h.rep.cocycle().0, vec![Num::one(), Num::i()]);
        s.marking = None;
        let h = holonomy(&s).unwrap();
        assert_eq!(untwisted_volume(&h.periods()), Num::one());
    }

    #[test]
    fn octagon_area_is_volume() {
        let v = vec![z(0, 0), z(2, 0), z(3, 1), z(3, 3), z(2, 4), z(0, 4), z(-1, 3), z(-1, 1)];
        let s = translation_octagon(v).unwrap();
        let h = holonomy(&s).unwrap();
        assert!(h.maps.iter().all(Affine::is_translation));
        assert_eq!(untwisted_volume(&h.periods()), s.area());
        assert!(h.certificate.homology_symplectic && h.certificate.relation_holds);
    }
}
