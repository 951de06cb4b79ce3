//! Moving a finite-order linear part to (ζ_n, 1, …, 1) by catalog twists.

use std::collections::HashMap;
use std::collections::VecDeque;

use crate::arith::Num;
use crate::character::{AffineRep, Character};
use crate::error::{Error, Result};
use crate::group::catalog::twist_catalog;
use crate::group::mapping::MappingClass;

/// Largest exponent-vector space searched exhaustively.
const STATE_CAP: u64 = 2_000_000;

#[derive(Clone, Debug)]
pub struct NormalForm {
    pub order: u32,
    /// Composite move; the normal form is ρ∘φ.
    pub phi: MappingClass,
    /// Catalog labels applied in order.
    pub moves: Vec<String>,
    pub before: Vec<i64>,
    pub after: Vec<i64>,
    pub rep: AffineRep,
}

impl NormalForm {
    /// Integer symplectic matrix of φ on homology.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        self.phi.homology_matrix()
    }
}

/// (n, e) with α(x_k) = ζ_n^{e_k} and n the order of the image.
pub fn exponent_vector(alpha: &Character) -> Result<(u32, Vec<i64>)> {
    if let Some(n) = alpha.finite_order() {
        if n > 1 {
            if let Some(e) = alpha.root_exponents(n) {
                return Ok((n, e));
            }
        }
        return Err(Error::NotFiniteOrder);
    }
    // values given without logarithms: read the root of unity off each value
    let parts = alpha
        .values()
        .iter()
        .map(|v| {
            if v.is_one() {
                return Some((1u32, 0u32));
            }
            v.as_cyclo()?.root_of_unity_exponent()
        })
        .collect::<Option<Vec<_>>>()
        .ok_or(Error::NotFiniteOrder)?;
    let n = parts.iter().map(|&(m, _)| m).fold(1, crate::arith::cyclo::lcm);
    if n <= 1 {
        return Err(Error::NotFiniteOrder);
    }
    Ok((n, parts.iter().map(|&(m, j)| i64::from(j) * i64::from(n / m)).collect()))
}

fn encode(e: &[i64], n: i64) -> u64 {
    e.iter().fold(0u64, |acc, &x| acc * n as u64 + x.rem_euclid(n) as u64)
}

/// e ↦ Hᵀe mod n: exponents of α∘φ.
fn act(h: &[Vec<i64>], e: &[i64], n: i64) -> Vec<i64> {
    (0..e.len()).map(|k| (0..e.len()).map(|j| h[j][k] * e[j]).sum::<i64>().rem_euclid(n)).collect()
}

pub fn normal_form(rho: &AffineRep) -> Result<NormalForm> {
    let alpha = rho.character();
    let (n, before) = exponent_vector(alpha)?;
    if rho.is_abelian() {
        return Err(Error::Invalid("normal form needs a non-abelian representation".into()));
    }
    let g = alpha.genus();
    let ni = i64::from(n);
    let mut target = vec![0; 2 * g];
    target[0] = 1;
    let moves = if before == target {
        Vec::new()
    } else {
        if g < 2 {
            return Err(Error::Unsupported("normal form by catalog twists needs genus at least 2".into()));
        }
        let states = (n as u64).checked_pow(2 * g as u32).unwrap_or(u64::MAX);
        if states > STATE_CAP {
            return Err(Error::Unsupported(format!("exponent space of size {} exceeds the search cap", states)));
        }
        let gens: Vec<(MappingClass, Vec<Vec<i64>>)> = twist_catalog(g)
            .into_iter()
            .filter(|m| !m.is_torelli())
            .flat_map(|m| [m.inverse(), m])
            .map(|m| {
                let h = m.homology_matrix();
                (m, h)
            })
            .collect();
        search(&gens, &before, &target, ni).ok_or_else(|| Error::Unsupported("exponent vector is not primitive".into()))?
    };
    let phi = moves.iter().fold(MappingClass::identity(g), |acc, m| acc.then(m));
    let out = rho.apply(&phi)?;
    let zeta = Num::root_of_unity(n, 1);
    let expected: Vec<Num> = (0..2 * g).map(|k| if k == 0 { zeta.clone() } else { Num::one() }).collect();
    if out.character().values() != expected.as_slice() {
        return Err(Error::CertificateFailure("α∘φ is not (ζ_n, 1, …, 1)".into()));
    }
    Ok(NormalForm {
        order: n,
        moves: moves.iter().map(|m| m.label.clone()).collect(),
        phi,
        before,
        after: target,
        rep: out,
    })
}

/// Breadth-first search for a shortest twist sequence taking `from` to `to`.
fn search(gens: &[(MappingClass, Vec<Vec<i64>>)], from: &[i64], to: &[i64], n: i64) -> Option<Vec<MappingClass>> {
    let goal = encode(to, n);
    let mut parent: HashMap<u64, (u64, usize)> = HashMap::new();
    let mut queue = VecDeque::from([from.to_vec()]);
    let start = encode(from, n);
    parent.insert(start, (start, usize::MAX));
    while let Some(e) = queue.pop_front() {
        let key = encode(&e, n);
        if key == goal {
            let mut path = Vec::new();
            let mut cur = key;
            while cur != start {
                let (prev, gi) = parent[&cur];
                path.push(gens[gi].0.clone());
                cur = prev;
            }
            path.reverse();
            return Some(path);
        }
        for (gi, (_, h)) in gens.iter().enumerate() {
            let next = act(h, &e, n);
            let nk = encode(&next, n);
            if let std::collections::hash_map::Entry::Vacant(slot) = parent.entry(nk) {
                slot.insert((key, gi));
                queue.push_back(next);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::Cocycle;
    use crate::character::cohomology::cocycle_space_basis;

    fn generic_rep(alpha: Character) -> AffineRep {
        let basis = cocycle_space_basis(&alpha);
        let lam = basis.iter().enumerate().fold(Cocycle::zero(alpha.ngens()), |acc, (k, c)| acc.add(&c.scale(&Num::int(k as i64 + 2))));
        AffineRep::new(alpha, lam).unwrap()
    }

    #[test]
    fn reduces_two_nontrivial_entries() {
        let rho = generic_rep(Character::roots_of_unity(4, &[1, 1, 0, 0]));
        let nf = normal_form(&rho).unwrap();
        assert_eq!(nf.rep.character().values(), &[Num::i(), Num::one(), Num::one(), Num::one()]);
        assert!(crate::group::mapping::is_symplectic(&nf.matrix()));
        // λ(b₁) is forced to vanish once α(b₁) = 1 and the other handles are translations
        assert!(nf.rep.cocycle().0[1].is_zero());
    }

    #[test]
    fn normal_form_is_fixed() {
        let rho = generic_rep(Character::roots_of_unity(6, &[1, 0, 0, 0]));
        let nf = normal_form(&rho).unwrap();
        assert!(nf.moves.is_empty());
        assert_eq!(nf.rep, rho);
    }

    #[test]
    fn infinite_order_rejected() {
        let alpha = Character::from_values(vec![Num::int(2), Num::one(), Num::one(), Num::one()], std::sync::Arc::new(crate::arith::Symbols::new())).unwrap();
        assert_eq!(exponent_vector(&alpha).unwrap_err(), Error::NotFiniteOrder);
        assert_eq!(exponent_vector(&Character::trivial(2)).unwrap_err(), Error::NotFiniteOrder);
    }

    #[test]
    fn genus_three_order_three() {
        let rho = generic_rep(Character::roots_of_unity(3, &[0, 2, 1, 0, 2, 2]));
        let nf = normal_form(&rho).unwrap();
        assert_eq!(nf.after, vec![1, 0, 0, 0, 0, 0]);
        assert!(nf.rep.cocycle().0[1].is_zero());
    }
}
