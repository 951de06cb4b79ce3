//! The projective action of Stab(α) on H¹_α, transvection classes μ_δ and
//! the genus-two twist pair.

use serde_json::{json, Value};

use crate::arith::cyclo::{lcm, Cyclo};
use crate::arith::linalg::{mat_mul, rank, solve_columns, Matrix};
use crate::arith::{Num, Symbols};
use crate::character::cohomology::{class_of, coboundary, cohomology_basis, CohomologyClass};
use crate::character::{Character, Cocycle};
use crate::error::{Error, Result};
use crate::group::catalog::{nu_curve, separating_curve, twist_a, twist_d, twist_nu};
use crate::group::{MappingClass, Word};

/// Matrix of λ ↦ λ∘φ on a basis of H¹_α; column j holds the image of basis vector j.
#[derive(Clone, Debug, PartialEq)]
pub struct ChueshevMatrix {
    pub label: String,
    pub matrix: Matrix<Num>,
}

impl ChueshevMatrix {
    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.iter().enumerate().all(|(i, r)| r.iter().enumerate().all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() }))
    }

    pub fn to_json(&self, syms: &Symbols) -> Value {
        let rows: Vec<Vec<Value>> = self
            .matrix
            .iter()
            .map(|r| r.iter().map(|x| crate::character::repjson::num_to_json(x, syms)).collect())
            .collect();
        let text: Vec<Vec<String>> = self.matrix.iter().map(|r| r.iter().map(|x| x.display(syms)).collect()).collect();
        json!({ "label": self.label, "matrix": rows, "text": text })
    }
}

pub fn in_stabilizer(alpha: &Character, phi: &MappingClass) -> Result<bool> {
    Ok(alpha.precompose(phi)? == *alpha)
}

/// Coordinates of [λ] in a basis of H¹_α (solving modulo the coboundary).
pub fn coordinates_in(alpha: &Character, basis: &[Cocycle], lambda: &Cocycle) -> Option<Vec<Num>> {
    let mut cols: Vec<Vec<Num>> = basis.iter().map(|b| b.0.clone()).collect();
    if !alpha.is_trivial() {
        cols.push(coboundary(alpha).0);
    }
    let mut x = solve_columns(&cols, &lambda.0)?;
    x.truncate(basis.len());
    Some(x)
}

/// Whether the cocycles are independent modulo the coboundary.
pub fn is_cohomology_basis(alpha: &Character, basis: &[Cocycle]) -> bool {
    let mut rows: Vec<Vec<Num>> = basis.iter().map(|b| b.0.clone()).collect();
    let expected = cohomology_basis(alpha).len();
    if !alpha.is_trivial() {
        rows.push(coboundary(alpha).0);
        basis.len() == expected && rank(&rows) == expected + 1
    } else {
        basis.len() == expected && rank(&rows) == expected
    }
}

pub fn chueshev_matrix(alpha: &Character, phi: &MappingClass, basis: &[Cocycle]) -> Result<ChueshevMatrix> {
    if !in_stabilizer(alpha, phi)? {
        return Err(Error::NotInStabilizer(phi.label.clone()));
    }
    let n = basis.len();
    let mut matrix = vec![vec![Num::zero(); n]; n];
    for (j, b) in basis.iter().enumerate() {
        let image = b.precompose(alpha, phi);
        let c = coordinates_in(alpha, basis, &image).ok_or_else(|| Error::Invalid("basis does not span H¹_α".into()))?;
        for (i, x) in c.into_iter().enumerate() {
            matrix[i][j] = x;
        }
    }
    Ok(ChueshevMatrix { label: phi.label.clone(), matrix })
}

/// Equality up to a nonzero scalar.
pub fn projectively_equal(a: &Matrix<Num>, b: &Matrix<Num>) -> bool {
    let pivot = a.iter().flatten().zip(b.iter().flatten()).find(|(x, _)| !x.is_zero());
    let Some((x, y)) = pivot else { return b.iter().flatten().all(Num::is_zero) };
    let Some(s) = y.div(x) else { return false };
    if s.is_zero() {
        return false;
    }
    a.iter().flatten().zip(b.iter().flatten()).all(|(x, y)| x.mul(&s) == *y)
}

pub fn matrix_product(a: &ChueshevMatrix, b: &ChueshevMatrix) -> ChueshevMatrix {
    ChueshevMatrix { label: format!("{}.{}", a.label, b.label), matrix: mat_mul(&a.matrix, &b.matrix) }
}

/// Gram matrix of the pulled-back form: vol(φb_k, φb_l) = (Mᵀ H M̄)_kl, since
/// the pairing is linear in its first slot and conjugate-linear in its second.
pub fn pullback_form(m: &Matrix<Num>, h: &Matrix<Num>) -> Matrix<Num> {
    let n = m.len();
    let mt: Matrix<Num> = (0..n).map(|i| (0..n).map(|j| m[j][i].clone()).collect()).collect();
    let mbar: Matrix<Num> = m.iter().map(|r| r.iter().map(Num::conj).collect()).collect();
    mat_mul(&mat_mul(&mt, h), &mbar)
}

/// μ_δ = (λ∘T_δ − λ)/λ(δ), checked on every probe with λ(δ) ≠ 0.
pub fn mu_delta(alpha: &Character, curve: &Word, twist: &MappingClass) -> Result<CohomologyClass> {
    if !alpha.eval(curve).is_one() {
        return Err(Error::Invalid(format!("α({}) ≠ 1", curve)));
    }
    let probes = cohomology_basis(alpha);
    let mut found: Option<CohomologyClass> = None;
    for p in &probes {
        let at = p.eval(alpha, curve);
        if at.is_zero() {
            continue;
        }
        let moved = p.precompose(alpha, twist);
        let mu = moved.sub(p).scale(&at.inv().unwrap());
        let class = class_of(alpha, &mu);
        match &found {
            None => found = Some(class),
            Some(prev) if *prev == class => {}
            Some(_) => return Err(Error::CertificateFailure("μ depends on the probe".into())),
        }
    }
    found.ok_or(Error::DegenerateProbe)
}

/// Predicted off-diagonal entries of the genus-two twist pair:
/// ((1−α(b₁))(1−α(a₂)), (1−α(b₁)⁻¹)(1−α(a₂)⁻¹)).
pub fn predicted_twist_entries(alpha: &Character) -> (Num, Num) {
    let (p, q) = (alpha.value(1), alpha.value(2));
    let one = Num::one();
    let e01 = one.sub(p).mul(&one.sub(q));
    let e10 = one.sub(&p.inv().unwrap()).mul(&one.sub(&q.inv().unwrap()));
    (e01, e10)
}

/// (μ_δ, μ_ν) completed to a basis of H¹_α with canonical basis vectors.
pub fn adapted_basis(alpha: &Character) -> Result<Vec<Cocycle>> {
    let g = alpha.genus();
    if g < 2 {
        return Err(Error::ConfigurationUnavailable("genus below 2".into()));
    }
    let mu_d = mu_delta(alpha, &separating_curve(1), &twist_d(g, 1))?;
    let mu_n = mu_delta(alpha, &nu_curve(), &twist_nu(g))?;
    let mut basis = vec![mu_d.representative().clone(), mu_n.representative().clone()];
    if !is_partial_basis(alpha, &basis) {
        return Err(Error::ConfigurationUnavailable("μ_δ and μ_ν are dependent in H¹_α".into()));
    }
    for b in cohomology_basis(alpha) {
        let mut trial = basis.clone();
        trial.push(b);
        if is_partial_basis(alpha, &trial) {
            basis = trial;
        }
    }
    Ok(basis)
}

fn is_partial_basis(alpha: &Character, v: &[Cocycle]) -> bool {
    let mut rows: Vec<Vec<Num>> = v.iter().map(|b| b.0.clone()).collect();
    if alpha.is_trivial() {
        return rank(&rows) == v.len();
    }
    rows.push(coboundary(alpha).0);
    rank(&rows) == v.len() + 1
}

/// Chueshev matrices of T_δ and T_ν in the adapted basis.
pub fn genus_two_pair(alpha: &Character) -> Result<(ChueshevMatrix, ChueshevMatrix)> {
    let g = alpha.genus();
    let basis = adapted_basis(alpha)?;
    Ok((chueshev_matrix(alpha, &twist_d(g, 1), &basis)?, chueshev_matrix(alpha, &twist_nu(g), &basis)?))
}

/// The two commuting parabolics of the configuration α(a₁) = 1, δ = [a₁, b₁],
/// in the basis (μ_δ, λ) with λ(δ) = 1.
#[derive(Clone, Debug)]
pub struct ParabolicPair {
    pub twist_delta: ChueshevMatrix,
    pub twist_a: ChueshevMatrix,
    pub probe: Cocycle,
}

pub fn parabolic_pair(alpha: &Character) -> Result<ParabolicPair> {
    let g = alpha.genus();
    if g < 2 {
        return Err(Error::ConfigurationUnavailable("genus below 2".into()));
    }
    if !alpha.value(0).is_one() {
        return Err(Error::ConfigurationUnavailable("α(a₁) ≠ 1".into()));
    }
    let delta = separating_curve(1);
    let td = twist_d(g, 1);
    let ta = twist_a(g, 1);
    let mu = mu_delta(alpha, &delta, &td).map_err(|_| Error::ConfigurationUnavailable("no cocycle is nonzero on δ".into()))?;
    if mu.is_zero() {
        return Err(Error::ConfigurationUnavailable("μ_δ vanishes in H¹_α".into()));
    }
    let probe = cohomology_basis(alpha)
        .into_iter()
        .find(|p| !p.eval(alpha, &delta).is_zero())
        .ok_or_else(|| Error::ConfigurationUnavailable("no cocycle is nonzero on δ".into()))?;
    let probe = probe.scale(&probe.eval(alpha, &delta).inv().unwrap());
    let basis = vec![mu.representative().clone(), probe.clone()];
    let restricted = |phi: &MappingClass| -> Result<ChueshevMatrix> {
        if !in_stabilizer(alpha, phi)? {
            return Err(Error::NotInStabilizer(phi.label.clone()));
        }
        let mut m = vec![vec![Num::zero(); 2]; 2];
        for (j, b) in basis.iter().enumerate() {
            let c = coordinates_in(alpha, &basis, &b.precompose(alpha, phi))
                .ok_or_else(|| Error::ConfigurationUnavailable("the plane (μ_δ, λ) is not invariant".into()))?;
            m[0][j] = c[0].clone();
            m[1][j] = c[1].clone();
        }
        Ok(ChueshevMatrix { label: phi.label.clone(), matrix: m })
    };
    Ok(ParabolicPair { twist_delta: restricted(&td)?, twist_a: restricted(&ta)?, probe })
}

/// Entries of matrices accumulated over a ring: ℤ for n ∈ {1, 2}, ℤ[i] for
/// n = 4, ℤ[ω] for n ∈ {3, 6}.
pub fn ring_order(n: u32) -> u32 {
    lcm(n, 2)
}

pub fn in_cyclotomic_integers(x: &Num, order: u32) -> bool {
    let Some(c) = x.as_cyclo() else { return false };
    let c: Cyclo = if order.is_multiple_of(c.order()) { c.lift(order) } else { c.shrink() };
    order.is_multiple_of(c.order()) && c.lift(order).is_integral()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog::twist_catalog;

    fn unit(n: u32, e: &[i64]) -> Character {
        Character::roots_of_unity(n, e)
    }

    #[test]
    fn identity_matrix() {
        let a = unit(5, &[1, 2, 3, 4]);
        let m = chueshev_matrix(&a, &MappingClass::identity(2), &cohomology_basis(&a)).unwrap();
        assert!(m.is_identity());
    }

    #[test]
    fn minus_one_pair_gives_four() {
        let a = unit(2, &[0, 1, 1, 0]);
        let (td, tn) = genus_two_pair(&a).unwrap();
        assert_eq!(td.matrix, vec![vec![Num::one(), Num::int(4)], vec![Num::zero(), Num::one()]]);
        assert_eq!(tn.matrix, vec![vec![Num::one(), Num::zero()], vec![Num::int(4), Num::one()]]);
    }

    #[test]
    fn pair_matches_prediction() {
        let a = unit(7, &[3, 1, 5, 2]);
        let (td, tn) = genus_two_pair(&a).unwrap();
        let (e01, e10) = predicted_twist_entries(&a);
        assert_eq!(td.matrix[0][1], e01);
        assert_eq!(tn.matrix[1][0], e10);
    }

    #[test]
    fn not_in_stabilizer() {
        let a = unit(5, &[1, 2, 3, 4]);
        let ta = twist_catalog(2).into_iter().find(|m| m.label == "Ta1").unwrap();
        assert!(matches!(chueshev_matrix(&a, &ta, &cohomology_basis(&a)), Err(Error::NotInStabilizer(_))));
    }

    #[test]
    fn trivial_side_is_degenerate() {
        // α trivial on the second handle forces λ(δ) = 0 for every cocycle
        let a = unit(5, &[1, 2, 0, 0]);
        assert_eq!(mu_delta(&a, &separating_curve(1), &twist_d(2, 1)), Err(Error::DegenerateProbe));
    }

    #[test]
    fn ring_membership() {
        assert!(in_cyclotomic_integers(&Num::i().mul(&Num::int(3)), 4));
        assert!(!in_cyclotomic_integers(&Num::rational(&crate::arith::real::rat(1, 2)), 4));
        assert!(!in_cyclotomic_integers(&Num::root_of_unity(3, 1), 4));
        assert!(in_cyclotomic_integers(&Num::root_of_unity(3, 1), 6));
    }
}
