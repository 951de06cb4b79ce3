//! Geometrization: polygon surfaces whose holonomy is a given representation.
//!
//! Two constructive branches exist. A Euclidean genus-2 representation with
//! finite linear image and positive volume is put in normal form, realized as a
//! torus carrying the translation handle plus one rotated handle, and remarked
//! back. An abelian representation with non-unitary linear part is realized as
//! the exponential of a translation surface built from parallelogram tori.

use std::sync::Arc;

use num_complex::Complex64;
use serde::Serialize;

use crate::arith::real::rat;
use crate::arith::{Num, Symbols};
use crate::character::period::{log_to_period, PeriodVector};
use crate::character::volume::{vol_sign, VolSign};
use crate::character::AffineRep;
use crate::error::{Error, Result};
use crate::group::mapping::MappingClass;

use super::haupt::haupt_check;
use super::holonomy::{conjugacy, holonomy, Conjugacy, HolonomyReport};
use super::normal_form::{exponent_vector, normal_form};
use super::polygon::{parallelogram_torus, reduce_path, reverse_path, Crossing, MarkedCurve, PolygonSurface};
use super::surgery::{add_handle, connected_sum, curve_name, Slit};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// Torus plus one handle glued by a rotation.
    RotatedHandle,
    /// Exponential of a translation surface.
    ExpTranslation,
}

#[derive(Clone, Debug)]
pub struct Realization {
    pub surface: PolygonSurface,
    pub branch: Branch,
    /// Catalog twists used to reach the normal form.
    pub moves: Vec<String>,
    /// (a, b) with a·λ_surface + b·(1 − α) = λ_input.
    pub conjugacy: Conjugacy,
    /// Whether the loop around the reglued slits has identity holonomy.
    pub handle_loop_trivial: Option<bool>,
    pub holonomy: HolonomyReport,
}

pub fn realize(rho: &AffineRep) -> Result<Realization> {
    let alpha = rho.character();
    if rho.is_abelian() {
        if alpha.is_unitary() {
            return Err(Error::Unsupported("abelian representation with unitary linear part has no translation-surface exponential".into()));
        }
        return realize_abelian(rho);
    }
    if !alpha.is_unitary() {
        return Err(Error::Unsupported("strictly affine non-abelian representations are realized by a non-constructive deformation argument".into()));
    }
    if vol_sign(rho)? != VolSign::Positive {
        return Err(Error::NegativeVolume);
    }
    match exponent_vector(alpha) {
        Ok(_) => {}
        Err(Error::NotFiniteOrder) => {
            return Err(Error::Unsupported("Euclidean representations with infinite linear image are realized by a non-constructive deformation argument".into()))
        }
        Err(e) => return Err(e),
    }
    if rho.genus() != 2 {
        return Err(Error::Unsupported("the rotated-handle construction is implemented for genus 2 only".into()));
    }
    realize_rotated_handle(rho)
}

/// Mark an existing translation surface as the chart data of its exponential.
pub fn exponentiate(s: &PolygonSurface) -> Result<PolygonSurface> {
    s.validate()?;
    if s.pairings.iter().any(|p| !p.map.is_translation()) {
        return Err(Error::InvalidSurface("only translation surfaces can be exponentiated".into()));
    }
    let mut out = s.clone();
    out.exp = true;
    holonomy(&out)?;
    Ok(out)
}

fn c64(x: &Num, syms: &Symbols) -> Complex64 {
    x.to_c64(syms)
}

/// (s, t) with z = s·u + t·v.
fn coords(z: Complex64, u: Complex64, v: Complex64) -> (f64, f64) {
    let det = u.re * v.im - u.im * v.re;
    ((z.re * v.im - z.im * v.re) / det, (u.re * z.im - u.im * z.re) / det)
}

fn at(u: &Num, v: &Num, s: Num, t: Num) -> Num {
    s.mul(u).add(&t.mul(v))
}

fn q(n: i64, d: i64) -> Num {
    Num::rational(&rat(n, d))
}

/// Two slits in the parallelogram (0, u, u+v, v): `a` along u and `b` its image
/// under the rotation by ζ, placed so that neither slit's supporting line meets
/// the other slit.
fn handle_slits(u: &Num, v: &Num, zeta: &Num, syms: &Symbols) -> Vec<(Slit, Slit)> {
    let (uf, vf) = (c64(u, syms), c64(v, syms));
    let rot = coords(c64(zeta, syms) * uf, uf, vf);
    let inside = |s: f64, t: f64| s > 0.02 && s < 0.98 && t > 0.02 && t < 0.98;
    let mut out = Vec::new();
    for len in [(1, 2), (1, 4), (1, 8)] {
        let l = len.0 as f64 / len.1 as f64;
        for (sa, ta) in [(1, 4), (1, 8)].iter().flat_map(|&s| [(s, (1, 8)), (s, (1, 4)), (s, (7, 8))]) {
            let (sa_f, ta_f) = (sa.0 as f64 / sa.1 as f64, ta.0 as f64 / ta.1 as f64);
            if !inside(sa_f + l, ta_f) {
                continue;
            }
            for (i, j) in (1..16).flat_map(|i| (1..16).map(move |j| (i, j))) {
                let (sb, tb) = (i as f64 / 16.0, j as f64 / 16.0);
                let (eb_s, eb_t) = (sb + l * rot.0, tb + l * rot.1);
                if !inside(sb, tb) || !inside(eb_s, eb_t) {
                    continue;
                }
                // the chord of a is the line t = ta; keep b off it
                if (tb - ta_f) * (eb_t - ta_f) <= 0.0 || (tb - ta_f).abs().min((eb_t - ta_f).abs()) < 0.05 {
                    continue;
                }
                // where the line of b meets t = ta, it must miss a
                if rot.1.abs() > 1e-12 {
                    let s_hit = sb + (ta_f - tb) / rot.1 * rot.0;
                    if s_hit > sa_f - 0.05 && s_hit < sa_f + l + 0.05 {
                        continue;
                    }
                }
                let lq = q(len.0, len.1);
                let a0 = at(u, v, q(sa.0, sa.1), q(ta.0, ta.1));
                let b0 = at(u, v, q(i, 16), q(j, 16));
                let a = Slit { polygon: 0, end: a0.add(&lq.mul(u)), start: a0 };
                let b = Slit { polygon: 0, end: b0.add(&lq.mul(&zeta.mul(u))), start: b0 };
                out.push((a, b));
            }
        }
    }
    out
}

/// Curves whose holonomies are ρ given curves realizing ρ∘φ: x_k ↦ φ⁻¹(x_k) in those curves.
fn remark(curves: &[Vec<Crossing>], phi: &MappingClass) -> Vec<MarkedCurve> {
    phi.inverse_images()
        .iter()
        .enumerate()
        .map(|(k, w)| {
            let path: Vec<Crossing> = w
                .letters()
                .iter()
                .flat_map(|&l| {
                    let c = &curves[l.unsigned_abs() as usize - 1];
                    if l > 0 {
                        c.clone()
                    } else {
                        reverse_path(c)
                    }
                })
                .collect();
            MarkedCurve { name: curve_name(k), path: reduce_path(&path) }
        })
        .collect()
}

fn realize_rotated_handle(rho: &AffineRep) -> Result<Realization> {
    let nf = normal_form(rho)?;
    let syms = rho.character().symbols().clone();
    let lam = &nf.rep.cocycle().0;
    let torus = parallelogram_torus(&lam[2], &lam[3], syms.clone())?;
    let zeta = Num::root_of_unity(nf.order, 1);
    let mut last = Error::Unsupported("no slit placement fits the parallelogram".into());
    let mut handled = None;
    for (a, b) in handle_slits(&lam[2], &lam[3], &zeta, &syms) {
        match add_handle(&torus, &a, &b) {
            Ok(s) => {
                handled = Some(s);
                break;
            }
            Err(e) => last = e,
        }
    }
    let mut s = handled.ok_or(last)?;
    let curves: Vec<Vec<Crossing>> = s.marking.take().expect("surgery marks its output").into_iter().map(|c| c.path).collect();
    let handle_loop = s.loop_holonomy(&curves[1])?;
    s.marking = Some(remark(&curves, &nf.phi));
    let report = holonomy(&s)?;
    if !(report.certificate.homology_symplectic && report.certificate.relation_holds) {
        return Err(Error::CertificateFailure("remarked basis is not a symplectic generating set".into()));
    }
    let conj = conjugacy(&report.rep, rho)?;
    Ok(Realization {
        surface: s,
        branch: Branch::RotatedHandle,
        moves: nf.moves,
        conjugacy: conj,
        handle_loop_trivial: Some(handle_loop.is_identity()),
        holonomy: report,
    })
}

fn realize_abelian(rho: &AffineRep) -> Result<Realization> {
    let alpha = rho.character();
    let syms = alpha.symbols().clone();
    let logs = alpha.require_logs()?;
    let p = PeriodVector(logs.iter().map(log_to_period).collect());
    let g = p.genus();
    if g >= 2 && !haupt_check(&p, &syms)?.accepted() {
        return Err(Error::Unsupported("the logarithm periods fail the admissibility conditions; other branches of the logarithm need the general realization".into()));
    }
    let s = exp_surface(&p, syms)?;
    let report = holonomy(&s)?;
    let conj = conjugacy(&report.rep, rho)?;
    Ok(Realization { surface: s, branch: Branch::ExpTranslation, moves: Vec::new(), conjugacy: conj, handle_loop_trivial: None, holonomy: report })
}

/// Connected sum of the parallelogram tori of each handle, exponential charts.
fn exp_surface(p: &PeriodVector, syms: Arc<Symbols>) -> Result<PolygonSurface> {
    let g = p.genus();
    let handles: Vec<(&Num, &Num)> = (0..g).map(|i| (&p.0[2 * i], &p.0[2 * i + 1])).collect();
    let tori = handles
        .iter()
        .map(|(u, v)| {
            let mut t = parallelogram_torus(u, v, syms.clone()).map_err(|_| {
                Error::Unsupported("a handle with non-positive area needs the general realization of admissible periods".into())
            })?;
            t.exp = true;
            Ok(t)
        })
        .collect::<Result<Vec<_>>>()?;
    // one slit vector short enough for every parallelogram
    let base = handles[0].0;
    let mut delta = q(1, 8);
    for _ in 0..40 {
        let d = c64(&delta.mul(base), &syms);
        let fits = handles.iter().all(|(u, v)| {
            let (s, t) = coords(d, c64(u, &syms), c64(v, &syms));
            s.abs() < 0.125 && t.abs() < 0.125
        });
        if fits {
            break;
        }
        delta = delta.mul(&q(1, 2));
    }
    let d = delta.mul(base);
    let half = q(1, 2);
    let centered = |polygon: usize, c: Num| Slit { polygon, start: c.sub(&d.mul(&half)), end: c.add(&d.mul(&half)) };
    // every outgoing slit sits in the first torus on its own line parallel to d,
    // so later cuts never meet earlier ones
    let (u1, v1) = handles[0];
    let df = c64(&d, &syms);
    let v1f = c64(v1, &syms);
    let across_v = (df.re * v1f.im - df.im * v1f.re).abs() > 1e-12;
    let lines = [(3, 4), (1, 4), (1, 2), (5, 8), (3, 8), (7, 8), (1, 8)];
    if g > lines.len() + 1 {
        return Err(Error::Unsupported(format!("exponential surfaces are built up to genus {}", lines.len() + 1)));
    }
    let mut s = tori[0].clone();
    let mut first_pieces = vec![0usize];
    for i in 1..g {
        let (n, m) = lines[i - 1];
        let c = if across_v { at(u1, v1, half.clone(), q(n, m)) } else { at(u1, v1, q(n, m), half.clone()) };
        let poly = first_pieces
            .iter()
            .copied()
            .find(|&k| {
                let sl = centered(k, c.clone());
                s.strictly_inside(k, &sl.start).unwrap_or(false) && s.strictly_inside(k, &sl.end).unwrap_or(false)
            })
            .ok_or(Error::SlitCrossesVertex)?;
        let (u, v) = handles[i];
        // the cut appends its left piece right after the existing polygons
        first_pieces.push(s.polygons.len());
        s = connected_sum(&s, &centered(poly, c), &tori[i], &centered(0, at(u, v, half.clone(), half.clone())))?;
    }
    s.validate()?;
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::real::{ExactReal, LogValue};
    use crate::character::{Character, Cocycle};
    use crate::surface::cone::cone_data;

    fn z(re: i64, im: i64) -> Num {
        Num::int(re).add(&Num::i().mul(&Num::int(im)))
    }

    fn rep(n: u32, e: &[i64], lam: Vec<Num>) -> AffineRep {
        AffineRep::new(Character::roots_of_unity(n, e), Cocycle(lam)).unwrap()
    }

    #[test]
    fn square_lattice_with_quarter_turn_handle() {
        let rho = rep(4, &[1, 0, 0, 0], vec![Num::one(), Num::zero(), Num::one(), Num::i()]);
        let r = realize(&rho).unwrap();
        assert_eq!(r.branch, Branch::RotatedHandle);
        let d = r.surface.validate().unwrap();
        assert_eq!(d.euler_characteristic, -2);
        assert_eq!(r.handle_loop_trivial, Some(true));
        assert_eq!(r.conjugacy.a, Num::one());
        let cones = cone_data(&r.surface).unwrap();
        assert!((cones.curvature_sum() - 2.0).abs() < 1e-9);
    }

    #[test]
    fn twisted_input_is_remarked() {
        use crate::group::catalog::{twist_a, twist_c};
        let base = rep(4, &[1, 0, 0, 0], vec![z(2, 1), Num::zero(), Num::one(), Num::i()]);
        let psi = twist_a(2, 1).then(&twist_c(2, 1)).then(&twist_a(2, 2));
        let rho = base.apply(&psi).unwrap();
        assert_ne!(rho.character(), base.character());
        assert_eq!(vol_sign(&rho).unwrap(), VolSign::Positive);
        let r = realize(&rho).unwrap();
        assert!(!r.moves.is_empty());
        assert_eq!(r.holonomy.rep.character(), rho.character());
        assert_eq!(r.handle_loop_trivial, Some(true));
    }

    #[test]
    fn sixth_and_third_turn_handles() {
        for n in [3, 6] {
            let rho = rep(n, &[1, 0, 0, 0], vec![Num::zero(), Num::zero(), Num::one(), Num::root_of_unity(6, 1)]);
            let r = realize(&rho).unwrap_or_else(|e| panic!("n = {}: {}", n, e));
            assert_eq!(r.surface.genus().unwrap(), 2);
            assert_eq!(r.handle_loop_trivial, Some(true));
        }
    }

    #[test]
    fn negative_volume_rejected() {
        let rho = rep(4, &[1, 0, 0, 0], vec![Num::one(), Num::zero(), Num::i(), Num::one()]);
        assert_eq!(realize(&rho).unwrap_err(), Error::NegativeVolume);
    }

    #[test]
    fn abelian_exp_branch() {
        let syms = Arc::new(Symbols::with_names(&["t"]));
        let tau = LogValue::new(ExactReal::symbol(1), ExactReal::zero());
        let quarter = LogValue::turns(rat(1, 4));
        let alpha = Character::from_logs(vec![tau.clone(), quarter.clone(), tau, quarter], syms).unwrap();
        let lam = crate::character::cohomology::coboundary(&alpha);
        let rho = AffineRep::new(alpha, lam).unwrap();
        let r = realize(&rho).unwrap();
        assert_eq!(r.branch, Branch::ExpTranslation);
        assert!(r.surface.exp);
        assert_eq!(r.surface.genus().unwrap(), 2);
        assert_eq!(r.holonomy.rep.character(), rho.character());
    }

    #[test]
    fn abelian_genus_three() {
        let syms = Arc::new(Symbols::with_names(&["t", "s"]));
        let l = |re: ExactReal, t: (i64, i64)| LogValue::new(re, ExactReal::ratio(t.0, t.1));
        let logs = vec![
            l(ExactReal::symbol(1), (0, 1)),
            l(ExactReal::int(1), (1, 3)),
            l(ExactReal::symbol(2), (1, 8)),
            l(ExactReal::zero(), (1, 2)),
            l(ExactReal::int(2), (0, 1)),
            l(ExactReal::zero(), (1, 5)),
        ];
        let alpha = Character::from_logs(logs, syms).unwrap();
        let rho = AffineRep::new(alpha.clone(), crate::character::cohomology::coboundary(&alpha)).unwrap();
        let r = realize(&rho).unwrap();
        assert_eq!(r.surface.genus().unwrap(), 3);
        assert_eq!(r.holonomy.rep.character(), rho.character());
        let cones = cone_data(&r.surface).unwrap();
        assert_eq!(cones.singular().len(), 4);
    }

    #[test]
    fn unsupported_branches() {
        let unitary_abelian = rep(4, &[1, 0, 0, 0], vec![Num::zero(); 4]);
        assert!(matches!(realize(&unitary_abelian), Err(Error::Unsupported(_))));
    }
}
