//! Fixed Dehn twists with hand-written generator images.
//!
//! * `Ta{i}`, `Tb{i}`: twists along a_i and b_i.
//! * `Tc{i}`: twist along a curve meeting handles i and i+1; with the others
//!   these generate the symplectic action on homology.
//! * `Td{k}`: twist along the separating curve δ_k = [a₁,b₁]…[a_k,b_k].
//! * `Tnu`: twist along a second separating curve of the genus-2 subsurface on
//!   handles 1 and 2, conjugate to `Td1` by `Tc1`.

use super::mapping::MappingClass;
use super::word::{a, b, Letter, Word};

/// Shift 1-based handle-1/handle-2 letters onto handles i, i+1.
fn shift(letters: &[Letter], i: usize) -> Word {
    let off = 2 * (i as Letter - 1);
    Word::new(letters.iter().map(|&l| if l > 0 { l + off } else { l - off }).collect())
}

fn with_images(genus: usize, changes: &[(usize, Word)]) -> Vec<Word> {
    let mut imgs: Vec<Word> = (0..2 * genus).map(Word::generator).collect();
    for (k, w) in changes {
        imgs[*k] = w.clone();
    }
    imgs
}

pub fn twist_a(genus: usize, i: usize) -> MappingClass {
    let k = 2 * i - 1;
    MappingClass::unchecked(
        format!("Ta{}", i),
        with_images(genus, &[(k, Word::new(vec![b(i), a(i)]))]),
        with_images(genus, &[(k, Word::new(vec![b(i), -a(i)]))]),
    )
}

pub fn twist_b(genus: usize, i: usize) -> MappingClass {
    let k = 2 * i - 2;
    MappingClass::unchecked(
        format!("Tb{}", i),
        with_images(genus, &[(k, Word::new(vec![a(i), b(i)]))]),
        with_images(genus, &[(k, Word::new(vec![a(i), -b(i)]))]),
    )
}

const MIX: [&[Letter]; 4] = [&[1, -2, 3], &[-3, 2, 3], &[-3, 2, 3, -2, 3], &[4, -2, 3]];
const MIX_INV: [&[Letter]; 4] = [&[1, -3, 2], &[-2, 3, 2, -3, 2], &[-2, 3, 2], &[4, -3, 2]];

pub fn twist_c(genus: usize, i: usize) -> MappingClass {
    let base = 2 * i - 2;
    let fwd: Vec<(usize, Word)> = (0..4).map(|j| (base + j, shift(MIX[j], i))).collect();
    let inv: Vec<(usize, Word)> = (0..4).map(|j| (base + j, shift(MIX_INV[j], i))).collect();
    MappingClass::unchecked(format!("Tc{}", i), with_images(genus, &fwd), with_images(genus, &inv))
}

/// δ_k = [a₁,b₁]…[a_k,b_k].
pub fn separating_curve(k: usize) -> Word {
    super::word::relator(k)
}

fn conjugate_handles(genus: usize, k: usize, by: &Word) -> Vec<Word> {
    let changes: Vec<(usize, Word)> = (0..2 * k).map(|j| (j, Word::generator(j).conjugate_by(by))).collect();
    with_images(genus, &changes)
}

pub fn twist_d(genus: usize, k: usize) -> MappingClass {
    assert!(k >= 1 && k < genus, "separating curve must split the surface");
    let d = separating_curve(k);
    MappingClass::unchecked(format!("Td{}", k), conjugate_handles(genus, k, &d), conjugate_handles(genus, k, &d.inverse()))
}

/// Lift of the curve of `Tnu`, conjugated by a₂ so that μ computed from it
/// matches the adapted-basis normalization of δ₁.
pub fn nu_curve() -> Word {
    Word::new(vec![-3, 1, 2, -1, -2, 3, -2, -3, 2, 3])
}

pub fn twist_nu(genus: usize) -> MappingClass {
    let c = twist_c(genus, 1);
    let d = twist_d(genus, 1);
    // conjugate of the inverse twist along δ₁, matching the orientation of Td1
    let m = c.inverse().then(&d.inverse()).then(&c);
    MappingClass::unchecked("Tnu", m.images().to_vec(), m.inverse_images().to_vec())
}

/// Full catalog for the given genus (≥ 2).
pub fn twist_catalog(genus: usize) -> Vec<MappingClass> {
    assert!(genus >= 2, "catalog needs genus at least 2");
    let mut out = Vec::new();
    for i in 1..=genus {
        out.push(twist_a(genus, i));
        out.push(twist_b(genus, i));
    }
    for i in 1..genus {
        out.push(twist_c(genus, i));
    }
    for k in 1..genus {
        out.push(twist_d(genus, k));
    }
    out.push(twist_nu(genus));
    out
}

/// Catalog entries acting trivially on homology.
pub fn torelli_catalog(genus: usize) -> Vec<MappingClass> {
    twist_catalog(genus).into_iter().filter(MappingClass::is_torelli).collect()
}

pub fn by_label(genus: usize, label: &str) -> Option<MappingClass> {
    let (base, inverse) = match label.strip_suffix("^-1") {
        Some(b) => (b, true),
        None => (label, false),
    };
    let m = twist_catalog(genus).into_iter().find(|m| m.label == base)?;
    Some(if inverse { m.inverse() } else { m })
}

/// Separating curves with their twists: (curve, twist).
pub fn separating_twists(genus: usize) -> Vec<(Word, MappingClass)> {
    let mut v: Vec<(Word, MappingClass)> = (1..genus).map(|k| (separating_curve(k), twist_d(genus, k))).collect();
    v.push((nu_curve(), twist_nu(genus)));
    v
}
