//! π₁ of a polygon surface: edge-loop generators from a dual spanning tree,
//! Tietze elimination along a primal cotree, and reduction of the remaining
//! one-relator presentation to the standard form ∏[aᵢ, bᵢ].

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::dehn::DehnSolver;
use crate::group::word::{free_reduce, relator, Letter, Word};

use super::polygon::{Crossing, PolygonSurface};

fn inv(w: &[Letter]) -> Vec<Letter> {
    w.iter().rev().map(|x| -x).collect()
}

fn cat(parts: &[&[Letter]]) -> Vec<Letter> {
    free_reduce(&parts.concat())
}

/// Replace each letter ±k by images[k−1]^{±1}.
fn substitute(w: &[Letter], image: impl Fn(usize) -> Vec<Letter>) -> Vec<Letter> {
    let mut out = Vec::new();
    for &l in w {
        let im = image(l.unsigned_abs() as usize);
        if l > 0 {
            out.extend(im);
        } else {
            out.extend(inv(&im));
        }
    }
    free_reduce(&out)
}

#[derive(Clone, Debug, Serialize)]
pub struct Pi1 {
    pub genus: usize,
    /// Pairings whose edge loops generate π₁; letter k+1 is `generators[k]`.
    pub generators: Vec<usize>,
    /// Each pairing's edge loop as a word in the generators (empty for tree pairings).
    pub pairing_words: Vec<Vec<Letter>>,
    /// The surviving relator.
    pub relator: Vec<Letter>,
    /// Standard basis a₁, b₁, … as words in the generators.
    pub basis: Vec<Vec<Letter>>,
    /// Each generator as a word in the standard basis letters.
    pub generator_images: Vec<Vec<Letter>>,
}

impl Pi1 {
    /// A dual loop as a word in the generators.
    pub fn path_word(&self, path: &[Crossing]) -> Vec<Letter> {
        let mut w = Vec::new();
        for c in path {
            let pw = &self.pairing_words[c.pairing];
            if c.forward {
                w.extend_from_slice(pw);
            } else {
                w.extend(inv(pw));
            }
        }
        free_reduce(&w)
    }

    /// A dual loop as a word in the standard basis.
    pub fn standard_word(&self, path: &[Crossing]) -> Word {
        Word::new(substitute(&self.path_word(path), |k| self.generator_images[k - 1].clone()))
    }

    /// Homology coordinates of a dual loop in the standard basis.
    pub fn homology(&self, path: &[Crossing]) -> Vec<i64> {
        self.standard_word(path).abelianize(2 * self.genus)
    }
}

/// Algebraic intersection of homology vectors in a standard basis.
pub fn intersection(x: &[i64], y: &[i64]) -> i64 {
    (0..x.len() / 2).map(|i| x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i]).sum()
}

pub fn fundamental_group(s: &PolygonSurface) -> Result<Pi1> {
    let genus = s.genus()?;
    let (_, tree) = s.dual_tree(|_| true);
    let classes = s.vertex_classes()?;
    let np = s.pairings.len();
    // Non-tree pairings are provisional generators, letters 1..=np indexed by pairing.
    let letter = |c: &Crossing| -> Option<Letter> {
        if tree[c.pairing] {
            None
        } else {
            let l = c.pairing as Letter + 1;
            Some(if c.forward { l } else { -l })
        }
    };
    // The vertex loop runs clockwise; its inverse is the counterclockwise relation.
    let mut relations: Vec<Vec<Letter>> =
        classes.iter().map(|v| inv(&free_reduce(&v.crossings.iter().filter_map(letter).collect::<Vec<_>>()))).collect();
    let class_of: std::collections::HashMap<(usize, usize), usize> =
        classes.iter().enumerate().flat_map(|(k, v)| v.corners.iter().map(move |&c| (c, k))).collect();
    let ends = |k: usize| -> (usize, usize) {
        let e = s.pairings[k].from;
        let n = s.polygons[e.polygon].len();
        (class_of[&(e.polygon, e.edge)], class_of[&(e.polygon, (e.edge + 1) % n)])
    };
    // Primal cotree over non-tree pairings.
    let nv = classes.len();
    let mut parent: Vec<Option<usize>> = vec![None; nv];
    let mut seen = vec![false; nv];
    let mut order = Vec::new();
    if nv > 0 {
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for k in (0..np).filter(|&k| !tree[k]) {
                let (x, y) = ends(k);
                for (p, q) in [(x, y), (y, x)] {
                    if p == v && !seen[q] {
                        seen[q] = true;
                        parent[q] = Some(k);
                        queue.push_back(q);
                    }
                }
            }
        }
    }
    if seen.iter().any(|b| !b) {
        return Err(Error::InvalidSurface("vertex graph is disconnected".into()));
    }
    let mut table: Vec<Option<Vec<Letter>>> = vec![None; np + 1];
    for &v in order.iter().rev() {
        let Some(c) = parent[v] else { continue };
        let cl = c as Letter + 1;
        let r = relations[v].clone();
        let hits: Vec<usize> = (0..r.len()).filter(|&i| r[i].abs() == cl).collect();
        if hits.len() != 1 {
            return Err(Error::CertificateFailure(format!("cotree edge {} occurs {} times in its vertex relation", c, hits.len())));
        }
        let i = hits[0];
        let (x, y) = (&r[..i], &r[i + 1..]);
        // x c y = 1 gives c = x⁻¹y⁻¹; x c⁻¹ y = 1 gives c = y x
        let val = if r[i] > 0 { cat(&[&inv(x), &inv(y)]) } else { cat(&[y, x]) };
        let sub = |w: &[Letter]| substitute(w, |k| if k == c + 1 { val.clone() } else { vec![k as Letter] });
        for (u, rel) in relations.iter_mut().enumerate() {
            if u != v {
                *rel = sub(rel);
            }
        }
        for t in table.iter_mut().flatten() {
            *t = sub(t);
        }
        table[c + 1] = Some(val);
    }
    let root_rel = relations.first().cloned().unwrap_or_default();
    let generators: Vec<usize> = (0..np).filter(|&k| !tree[k] && table[k + 1].is_none()).collect();
    if generators.len() != 2 * genus {
        return Err(Error::CertificateFailure(format!("{} edge-loop generators for genus {}", generators.len(), genus)));
    }
    let renumber = |k: usize| -> Vec<Letter> {
        match generators.iter().position(|&g| g + 1 == k) {
            Some(j) => vec![j as Letter + 1],
            None => panic!("eliminated letter left in a relation"),
        }
    };
    let mut pairing_words = vec![Vec::new(); np];
    for k in 0..np {
        if tree[k] {
            continue;
        }
        pairing_words[k] = match &table[k + 1] {
            Some(w) => substitute(w, renumber),
            None => renumber(k + 1),
        };
    }
    let rel = substitute(&root_rel, renumber);
    let (basis, generator_images) = normalize(&rel, 2 * genus)?;
    Ok(Pi1 { genus, generators, pairing_words, relator: rel, basis, generator_images })
}

/// Words, one per generator.
pub type WordList = Vec<Vec<Letter>>;

/// Bring a one-relator surface presentation to ∏[aᵢ, bᵢ] by Nielsen moves.
/// Returns the new basis as words in the old generators, and the old
/// generators as words in the new basis (standard letters).
pub fn normalize(rel: &[Letter], ngens: usize) -> Result<(WordList, WordList)> {
    let fail = |m: &str| Error::CertificateFailure(format!("relator normalization: {}", m));
    // Current generators are ids 1..=ngens; expr[id] is a word in the old generators.
    let mut expr: Vec<Vec<Letter>> = (0..=ngens).map(|k| vec![k as Letter]).collect();
    let mut back: Vec<Vec<Letter>> = (1..=ngens).map(|k| vec![k as Letter]).collect();
    let mut done: Vec<(usize, usize)> = Vec::new();
    let mut r = free_reduce(rel);
    let expand = |w: &[Letter], expr: &[Vec<Letter>]| substitute(w, |k| expr[k].clone());
    while !r.is_empty() {
        // linked pair: letters u, v with occurrences interleaved
        let pos = |l: usize, r: &[Letter]| -> Vec<usize> { (0..r.len()).filter(|&i| r[i].unsigned_abs() as usize == l).collect() };
        let letters: Vec<usize> = {
            let mut v: Vec<usize> = r.iter().map(|x| x.unsigned_abs() as usize).collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        let mut found = None;
        'search: for &u in &letters {
            let pu = pos(u, &r);
            if pu.len() != 2 || r[pu[0]] != -r[pu[1]] {
                return Err(fail("a generator does not occur exactly twice with opposite signs"));
            }
            for &v in &letters {
                if v == u {
                    continue;
                }
                let pv = pos(v, &r);
                let inside = pv.iter().filter(|&&i| i > pu[0] && i < pu[1]).count();
                if inside == 1 {
                    found = Some((u, v, pu, pv));
                    break 'search;
                }
            }
        }
        let Some((u, v, pu, pv)) = found else { return Err(fail("no linked pair")) };
        // rotate so the earliest of the four occurrences comes first
        let start = pu[0].min(pv[0]);
        let (x, y) = if pu[0] < pv[0] { (u, v) } else { (v, u) };
        if start > 0 {
            let uw = r[..start].to_vec();
            let big_u = expand(&uw, &expr);
            let live: Vec<usize> = (1..=ngens).filter(|id| !done.iter().any(|&(a, b)| a == *id || b == *id)).collect();
            for &id in &live {
                expr[id] = cat(&[&big_u, &expr[id], &inv(&big_u)]);
            }
            let is_live = |k: usize| live.contains(&k);
            for w in back.iter_mut() {
                *w = substitute(w, |k| if is_live(k) { cat(&[&inv(&uw), &[k as Letter], &uw]) } else { vec![k as Letter] });
            }
            r = [&r[start..], &r[..start]].concat();
        }
        // orient x and y so their first occurrences are positive
        for id in [x, y] {
            let first = pos(id, &r)[0];
            if r[first] < 0 {
                expr[id] = inv(&expr[id]);
                let flip = |w: &[Letter]| w.iter().map(|&l| if l.unsigned_abs() as usize == id { -l } else { l }).collect::<Vec<_>>();
                r = flip(&r);
                for w in back.iter_mut() {
                    *w = flip(w);
                }
            }
        }
        let px = pos(x, &r);
        let py = pos(y, &r);
        let (i, k) = (px[0], px[1]);
        let (j, l) = (py[0], py[1]);
        if !(i == 0 && i < j && j < k && k < l) {
            return Err(fail("unexpected letter order"));
        }
        let p = r[1..j].to_vec();
        let q = r[j + 1..k].to_vec();
        let rr = r[k + 1..l].to_vec();
        let s_ = r[l + 1..].to_vec();
        let (xl, yl) = (x as Letter, y as Letter);
        let a_pat = cat(&[&[xl], &inv(&q), &inv(&rr)]);
        let b_pat = cat(&[&rr, &q, &p, &[yl], &inv(&rr)]);
        let a_expr = expand(&a_pat, &expr);
        let b_expr = expand(&b_pat, &expr);
        // x = a R Q, y = P⁻¹Q⁻¹R⁻¹ b R, written with x, y now naming a, b
        let x_back = cat(&[&[xl], &rr, &q]);
        let y_back = cat(&[&inv(&p), &inv(&q), &inv(&rr), &[yl], &rr]);
        for w in back.iter_mut() {
            *w = substitute(w, |m| {
                if m == x {
                    x_back.clone()
                } else if m == y {
                    y_back.clone()
                } else {
                    vec![m as Letter]
                }
            });
        }
        expr[x] = a_expr;
        expr[y] = b_expr;
        done.push((x, y));
        r = cat(&[&rr, &q, &p, &s_]);
    }
    if done.len() * 2 != ngens {
        return Err(fail("generators left over"));
    }
    let mut std_letter = vec![0 as Letter; ngens + 1];
    let mut basis = Vec::new();
    for (t, &(x, y)) in done.iter().enumerate() {
        std_letter[x] = 2 * t as Letter + 1;
        std_letter[y] = 2 * t as Letter + 2;
        basis.push(expr[x].clone());
        basis.push(expr[y].clone());
    }
    let images: Vec<Vec<Letter>> = back.iter().map(|w| substitute(w, |k| vec![std_letter[k]])).collect();
    // certificate: ∏[aᵢ, bᵢ] expands to the input relator exactly
    let g = ngens / 2;
    let expanded = substitute(relator(g).letters(), |k| basis[k - 1].clone());
    if expanded != free_reduce(rel) {
        return Err(fail("product of commutators does not reproduce the relator"));
    }
    // and the inverse substitution recovers each old generator
    for (k, w) in images.iter().enumerate() {
        if substitute(w, |m| basis[m - 1].clone()) != vec![k as Letter + 1] {
            return Err(fail("inverse substitution is wrong"));
        }
    }
    Ok((basis, images))
}

/// Certificate that a marking is a geometric symplectic basis.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct MarkingCertificate {
    /// Intersection matrix of the marked curves.
    pub gram: Vec<Vec<i64>>,
    pub homology_symplectic: bool,
    /// ∏[Aᵢ, Bᵢ] of the marked curves is trivial in π₁.
    pub relation_holds: bool,
}

pub fn certify_marking(pi: &Pi1, paths: &[Vec<Crossing>]) -> MarkingCertificate {
    let h: Vec<Vec<i64>> = paths.iter().map(|p| pi.homology(p)).collect();
    let n = h.len();
    let gram: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| intersection(&h[i], &h[j])).collect()).collect();
    let symplectic = n == 2 * pi.genus
        && (0..n).all(|i| {
            (0..n).all(|j| {
                let expect = if i % 2 == 0 && j == i + 1 {
                    1
                } else if i % 2 == 1 && j + 1 == i {
                    -1
                } else {
                    0
                };
                gram[i][j] == expect
            })
        });
    let relation_holds = symplectic && {
        let words: Vec<Word> = paths.iter().map(|p| pi.standard_word(p)).collect();
        let prod = (0..pi.genus).fold(Word::identity(), |acc, i| acc.concat(&Word::commutator(&words[2 * i], &words[2 * i + 1])));
        DehnSolver::new(pi.genus).is_trivial(&prod)
    };
    MarkingCertificate { gram, homology_symplectic: symplectic, relation_holds }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_standard_and_scrambled() {
        let std2 = relator(2).letters().to_vec();
        let (basis, _) = normalize(&std2, 4).unwrap();
        assert_eq!(basis.len(), 4);
        // a b c a⁻¹ b⁻¹ c⁻¹ d ... : a genus-2 word in non-standard shape
        let w = vec![1, 2, 3, 4, -1, -2, -3, -4];
        let (basis, images) = normalize(&w, 4).unwrap();
        assert_eq!(basis.len(), 4);
        assert_eq!(images.len(), 4);
        let rotated = vec![3, 4, -1, -2, -3, -4, 1, 2];
        assert!(normalize(&rotated, 4).is_ok());
    }

    #[test]
    fn rejects_non_orientable() {
        assert!(normalize(&[1, 1, 2, 2], 2).is_err());
    }
}
