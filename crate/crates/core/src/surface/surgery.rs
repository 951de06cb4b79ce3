//! Slit surgeries: connected sum and handle addition.
//!
//! A slit is cut by extending it to a chord of its (convex) polygon. The two
//! halves of the polygon are re-joined along the chord outside the slit by
//! identity pairings, which leaves the two sides of the slit as free edges
//! ready to be glued crosswise.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};

use crate::arith::Num;
use crate::error::{Error, Result};

use super::geom::{cross, segments_meet, sign, Affine};
use super::polygon::{reduce_path, reverse_path, Crossing, EdgeRef, MarkedCurve, Pairing, PairingKind, PolygonSurface};
use super::holonomy::word_path;
use crate::group::dehn::DehnSolver;
use crate::group::word::Word;

use super::presentation::{fundamental_group, Pi1};

/// Oriented segment strictly inside a polygon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slit {
    pub polygon: usize,
    pub start: Num,
    pub end: Num,
}

/// Outcome of cutting one slit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cut {
    /// Side of the slit on its left, traversed start → end.
    pub plus: EdgeRef,
    /// Side on its right, traversed end → start.
    pub minus: EdgeRef,
    /// Identity pairing across the chord before the slit start.
    pub near: usize,
    /// Identity pairing across the chord after the slit end.
    pub far: usize,
    /// Polygon holding `plus` (new) and polygon holding `minus` (the original index).
    pub left: usize,
    pub right: usize,
}

fn insert_vertex(s: &mut PolygonSurface, p: usize, edge: usize, z: Num) {
    s.polygons[p].insert(edge + 1, z);
    for pr in &mut s.pairings {
        for e in [&mut pr.from, &mut pr.to] {
            if e.polygon == p && e.edge > edge {
                e.edge += 1;
            }
        }
    }
}

/// Subdivide edge `e` at interior point `z`, and its partner at the matching point.
pub fn split_edge(s: &mut PolygonSurface, e: EdgeRef, z: &Num) -> Result<()> {
    // only pairings are consulted: other slits may still be open
    let (k, is_from) = s
        .pairings
        .iter()
        .enumerate()
        .find_map(|(k, p)| if p.from == e { Some((k, true)) } else if p.to == e { Some((k, false)) } else { None })
        .ok_or(Error::SlitCrossesVertex)?;
    let pr = s.pairings[k].clone();
    let f = pr.map.clone();
    let (from_pt, to_pt) = if is_from {
        (z.clone(), f.apply(z))
    } else {
        (f.inverse().expect("invertible").apply(z), z.clone())
    };
    let (mut from, mut to) = (pr.from, pr.to);
    insert_vertex(s, from.polygon, from.edge, from_pt);
    if to.polygon == from.polygon && to.edge > from.edge {
        to.edge += 1;
    }
    insert_vertex(s, to.polygon, to.edge, to_pt);
    if from.polygon == to.polygon && from.edge > to.edge {
        from.edge += 1;
    }
    // u→z pairs with z'→x, z→v with w→z'
    s.pairings[k] = Pairing { from, to: EdgeRef::new(to.polygon, to.edge + 1), map: f.clone(), kind: pr.kind };
    s.pairings.push(Pairing { from: EdgeRef::new(from.polygon, from.edge + 1), to, map: f, kind: pr.kind });
    Ok(())
}

/// Where the ray from interior point `z` in direction `dir` leaves polygon `p`:
/// (edge, point, whether the point is the edge's start vertex).
fn exit_point(s: &PolygonSurface, p: usize, z: &Num, dir: &Num) -> Result<(usize, Num, bool)> {
    let syms = &s.symbols;
    let poly = &s.polygons[p];
    let n = poly.len();
    for k in 0..n {
        let e = poly[(k + 1) % n].sub(&poly[k]);
        let den = cross(dir, &e);
        if sign(&den, syms)? == Ordering::Equal {
            continue;
        }
        let rel = poly[k].sub(z);
        let tau = cross(&rel, &e).div(&den).expect("nonzero");
        let sigma = cross(&rel, dir).div(&den).expect("nonzero");
        if sign(&tau, syms)? != Ordering::Greater {
            continue;
        }
        let lo = sign(&sigma, syms)?;
        let hi = sign(&sigma.sub(&Num::one()), syms)?;
        if lo != Ordering::Less && hi == Ordering::Less {
            return Ok((k, z.add(&tau.mul(dir)), lo == Ordering::Equal));
        }
    }
    Err(Error::SlitCrossesVertex)
}

fn check_slit(s: &PolygonSurface, slit: &Slit) -> Result<()> {
    if slit.polygon >= s.polygons.len() || slit.start == slit.end {
        return Err(Error::SlitCrossesVertex);
    }
    if !s.is_convex(slit.polygon)? || !s.strictly_inside(slit.polygon, &slit.start)? || !s.strictly_inside(slit.polygon, &slit.end)? {
        return Err(Error::SlitCrossesVertex);
    }
    Ok(())
}

/// Cut along `slit`, leaving its two sides unpaired. Marked curves are kept
/// off the slit by crossing the chord only before the slit start.
pub fn cut_slit(s: &mut PolygonSurface, slit: &Slit) -> Result<Cut> {
    check_slit(s, slit)?;
    let p = slit.polygon;
    let (st, en) = (&slit.start, &slit.end);
    let d = en.sub(st);
    let (k, e_pt, at_vertex) = exit_point(s, p, st, &d.neg())?;
    if !at_vertex {
        split_edge(s, EdgeRef::new(p, k), &e_pt)?;
    }
    let (k, x_pt, at_vertex) = exit_point(s, p, en, &d)?;
    if !at_vertex {
        split_edge(s, EdgeRef::new(p, k), &x_pt)?;
    }
    let poly = s.polygons[p].clone();
    let n = poly.len();
    let find = |z: &Num| poly.iter().position(|v| v == z).expect("chord end is a vertex");
    let (ie, ix) = (find(&e_pt), find(&x_pt));
    let ca = (ix + n - ie) % n;
    let cb = (ie + n - ix) % n;
    let mut right: Vec<Num> = (0..=ca).map(|j| poly[(ie + j) % n].clone()).collect();
    right.extend([en.clone(), st.clone()]);
    let mut left: Vec<Num> = (0..=cb).map(|j| poly[(ix + j) % n].clone()).collect();
    left.extend([st.clone(), en.clone()]);
    let li = s.polygons.len();
    for pr in &mut s.pairings {
        for e in [&mut pr.from, &mut pr.to] {
            if e.polygon == p {
                let off = (e.edge + n - ie) % n;
                *e = if off < ca { EdgeRef::new(p, off) } else { EdgeRef::new(li, (e.edge + n - ix) % n) };
            }
        }
    }
    s.polygons[p] = right;
    s.polygons.push(left);
    let near = s.pairings.len();
    s.pairings.push(Pairing { from: EdgeRef::new(p, ca + 2), to: EdgeRef::new(li, cb), map: Affine::identity(), kind: PairingKind::CutNear });
    let far = near + 1;
    s.pairings.push(Pairing { from: EdgeRef::new(p, ca), to: EdgeRef::new(li, cb + 2), map: Affine::identity(), kind: PairingKind::CutFar });
    let cut = Cut { plus: EdgeRef::new(li, cb + 1), minus: EdgeRef::new(p, ca + 1), near, far, left: li, right: p };
    if let Some(m) = s.marking.take() {
        let base = s.base;
        s.marking = Some(m.into_iter().map(|c| MarkedCurve { path: repair_path(s, &cut, base, &c.path), name: c.name }).collect());
    }
    Ok(cut)
}

/// Re-thread a path that was contiguous before `cut` split one polygon in two.
fn repair_path(s: &PolygonSurface, cut: &Cut, start: usize, path: &[Crossing]) -> Vec<Crossing> {
    let hop = |from: usize, to: usize| -> Option<Crossing> {
        (from != to).then_some(Crossing { pairing: cut.near, forward: from == cut.right })
    };
    let mut out = Vec::with_capacity(path.len());
    let mut cur = start;
    for &c in path {
        let (o, into) = s.crossing_ends(c);
        out.extend(hop(cur, o));
        out.push(c);
        cur = into;
    }
    out.extend(hop(cur, start));
    reduce_path(&out)
}

/// The surface's marking, or an automatic symplectic basis when it has none.
pub fn marking_or_basis(s: &PolygonSurface) -> Result<Vec<MarkedCurve>> {
    if let Some(m) = &s.marking {
        return Ok(m.clone());
    }
    let pi = fundamental_group(s)?;
    Ok(pi
        .basis
        .iter()
        .enumerate()
        .map(|(k, w)| MarkedCurve { name: curve_name(k), path: word_path(s, &pi, w) })
        .collect())
}

pub(crate) fn curve_name(k: usize) -> String {
    format!("{}{}", if k.is_multiple_of(2) { "a" } else { "b" }, k / 2 + 1)
}

fn concat(parts: &[&[Crossing]]) -> Vec<Crossing> {
    reduce_path(&parts.concat())
}

fn conjugate(c: &[Crossing], p: &[Crossing]) -> Vec<Crossing> {
    concat(&[c, p, &reverse_path(c)])
}

fn power(p: &[Crossing], k: i64) -> Vec<Crossing> {
    let unit = if k >= 0 { p.to_vec() } else { reverse_path(p) };
    reduce_path(&(0..k.unsigned_abs()).flat_map(|_| unit.clone()).collect::<Vec<_>>())
}

/// Pairings crossed by any of the paths.
fn crossed(paths: &[Vec<Crossing>]) -> HashSet<usize> {
    paths.iter().flatten().map(|c| c.pairing).collect()
}

/// ∏[x₂ᵢ₋₁, x₂ᵢ] as a word in the standard basis.
fn relator_of(pi: &Pi1, curves: &[Vec<Crossing>]) -> Word {
    curves
        .chunks(2)
        .fold(Word::identity(), |acc, p| acc.concat(&Word::commutator(&pi.standard_word(&p[0]), &pi.standard_word(&p[1]))))
}

/// A short tail c and sign e with r = c·tᵉ·c⁻¹ in π₁.
fn find_tail(pi: &Pi1, r: &Word, t: &[Crossing], curves: &[Vec<Crossing>]) -> Option<(Vec<Crossing>, i64)> {
    let ds = DehnSolver::new(pi.genus);
    let tw = pi.standard_word(t);
    Candidates::new(pi, curves).items.into_iter().find_map(|(cp, cw)| {
        [1, -1].into_iter().find(|&e| ds.equal(r, &cw.concat(&tw.pow(e)).concat(&cw.inverse()))).map(|e| (cp, e))
    })
}

/// Dual loop hugging an open slit: around its start from the minus side to
/// the plus side, then around its end back. Based in the minus polygon.
fn slit_loop(s: &PolygonSurface, plus: EdgeRef, minus: EdgeRef) -> Result<Vec<Crossing>> {
    let idx: HashMap<EdgeRef, (usize, bool)> =
        s.pairings.iter().enumerate().flat_map(|(k, p)| [(p.from, (k, true)), (p.to, (k, false))]).collect();
    let mut path = Vec::new();
    for (from, stop) in [(minus, plus), (plus, minus)] {
        let (mut p, mut v) = (from.polygon, (from.edge + 1) % s.polygons[from.polygon].len());
        while EdgeRef::new(p, v) != stop {
            let &(k, is_from) = idx.get(&EdgeRef::new(p, v)).ok_or_else(|| Error::InvalidSurface("slit meets another open edge".into()))?;
            path.push(Crossing { pairing: k, forward: is_from });
            let pr = &s.pairings[k];
            let other = if is_from { pr.to } else { pr.from };
            p = other.polygon;
            v = (other.edge + 1) % s.polygons[p].len();
            if path.len() > s.pairings.len() * 2 {
                return Err(Error::InvalidSurface("slit link does not close".into()));
            }
        }
    }
    Ok(path)
}

/// Find the open sides of a slit after later cuts renumbered them.
fn refresh(s: &PolygonSurface, cut: &Cut, slit: &Slit) -> Cut {
    let paired: HashSet<EdgeRef> = s.pairings.iter().flat_map(|p| [p.from, p.to]).collect();
    let mut out = *cut;
    for (pi, poly) in s.polygons.iter().enumerate() {
        for k in 0..poly.len() {
            let e = EdgeRef::new(pi, k);
            if paired.contains(&e) {
                continue;
            }
            let (u, v) = s.edge_points(e);
            if (u, v) == (&slit.start, &slit.end) {
                out.plus = e;
                out.left = pi;
            } else if (u, v) == (&slit.end, &slit.start) {
                out.minus = e;
                out.right = pi;
            }
        }
    }
    out
}

fn disconnected() -> Error {
    Error::InvalidSurface("cut surface is disconnected".into())
}

fn merge_check(s1: &PolygonSurface, s2: &PolygonSurface) -> Result<()> {
    if s1.symbols != s2.symbols {
        return Err(Error::Invalid("surfaces use different symbol tables".into()));
    }
    if s1.exp != s2.exp {
        return Err(Error::Invalid("cannot mix exp-marked and plain surfaces".into()));
    }
    Ok(())
}

/// Glue `s1` and `s2` along slits: the left side of each slit is glued to the
/// right side of the other by the affine map taking the first slit onto the second.
pub fn connected_sum(s1: &PolygonSurface, slit1: &Slit, s2: &PolygonSurface, slit2: &Slit) -> Result<PolygonSurface> {
    s1.validate()?;
    s2.validate()?;
    merge_check(s1, s2)?;
    let f = Affine::through(&slit1.start, &slit1.end, &slit2.start, &slit2.end).ok_or(Error::SegmentsNotAffinelyRelated)?;
    let (mut a, mut b) = (s1.clone(), s2.clone());
    a.marking = Some(marking_or_basis(s1)?);
    b.marking = Some(marking_or_basis(s2)?);
    let c1 = cut_slit(&mut a, slit1)?;
    let c2 = cut_slit(&mut b, slit2)?;
    let (np, ne) = (a.polygons.len(), a.pairings.len());
    let shift_e = |e: EdgeRef| EdgeRef::new(e.polygon + np, e.edge);
    let shift_path = |p: &[Crossing]| p.iter().map(|c| Crossing { pairing: c.pairing + ne, forward: c.forward }).collect::<Vec<_>>();
    let mut s = a.clone();
    s.polygons.extend(b.polygons.iter().cloned());
    s.pairings.extend(b.pairings.iter().map(|p| Pairing { from: shift_e(p.from), to: shift_e(p.to), ..p.clone() }));
    let g1 = s.pairings.len();
    s.pairings.push(Pairing { from: c1.plus, to: shift_e(c2.minus), map: f.clone(), kind: PairingKind::Slit });
    s.pairings.push(Pairing { from: shift_e(c2.plus), to: c1.minus, map: f.inverse().expect("invertible"), kind: PairingKind::Slit });
    let first: Vec<Vec<Crossing>> = a.marking.as_ref().unwrap().iter().map(|c| c.path.clone()).collect();
    let second: Vec<Vec<Crossing>> = b.marking.as_ref().unwrap().iter().map(|c| shift_path(&c.path)).collect();
    s.marking = None;
    // Each relator is its slit loop seen through a tail; the connecting path
    // runs down one tail, through the neck and up the other.
    let busy: HashSet<usize> = crossed(&first).union(&crossed(&second)).copied().collect();
    let quiet = |k: usize| k < g1 && !busy.contains(&k);
    let any = |k: usize| k < g1;
    let route = |x: usize, y: usize| s.route(x, y, quiet).or_else(|| s.route(x, y, any)).ok_or_else(disconnected);
    let base2 = b.base + np;
    let (right1, right2, left2) = (c1.right, c2.right + np, c2.left + np);
    let tau1 = route(s.base, right1)?;
    let tau2 = route(base2, right2)?;
    let xi = s.route(s.base, base2, |_| true).ok_or_else(disconnected)?;
    let neck = concat(&[&[Crossing { pairing: g1 + 1, forward: false }], &s.route(left2, right2, |k| k == c2.far + ne).ok_or_else(disconnected)?]);
    let pi = fundamental_group(&s)?;
    let ds = DehnSolver::new(pi.genus);
    let no_tail = || Error::CertificateFailure("relator is not conjugate to the slit loop".into());
    let loop1 = conjugate(&tau1, &slit_loop(&s, c1.plus, c1.minus)?);
    let (t1, e1) = find_tail(&pi, &relator_of(&pi, &first), &loop1, &first).ok_or_else(no_tail)?;
    let second_here: Vec<Vec<Crossing>> = second.iter().map(|p| conjugate(&xi, p)).collect();
    let loop2 = conjugate(&xi, &conjugate(&tau2, &slit_loop(&s, shift_e(c2.plus), shift_e(c2.minus))?));
    let (t2, e2) = find_tail(&pi, &relator_of(&pi, &second_here), &loop2, &second_here).ok_or_else(no_tail)?;
    let across = concat(&[&tau1, &neck, &slit_loop(&s, shift_e(c2.plus), shift_e(c2.minus))?, &reverse_path(&neck), &reverse_path(&tau1)]);
    let eps = [1i64, -1]
        .into_iter()
        .find(|&e| ds.equal(&pi.standard_word(&loop1), &pi.standard_word(&power(&across, e))))
        .ok_or_else(|| Error::CertificateFailure("slit loops do not match across the neck".into()))?;
    if e2 != -eps * e1 {
        return Err(Error::CertificateFailure("the two markings induce opposite orientations".into()));
    }
    let gamma = concat(&[&t1, &tau1, &neck, &reverse_path(&tau2), &reverse_path(&xi), &reverse_path(&t2), &xi]);
    let paths: Vec<Vec<Crossing>> = first.into_iter().chain(second.iter().map(|p| conjugate(&gamma, p))).collect();
    s.marking = Some(paths.into_iter().enumerate().map(|(k, path)| MarkedCurve { name: curve_name(k), path }).collect());
    s.validate()?;
    Ok(s)
}

/// Cut `slit` into the surface, choosing the polygon piece that now holds it.
fn relocate(s: &PolygonSurface, cut: &Cut, slit: &Slit) -> Result<Slit> {
    if slit.polygon != cut.right {
        return Ok(slit.clone());
    }
    for p in [cut.right, cut.left] {
        let inside = s.strictly_inside(p, &slit.start)? && s.strictly_inside(p, &slit.end)?;
        if inside {
            return Ok(Slit { polygon: p, ..slit.clone() });
        }
    }
    Err(Error::SlitCrossesVertex)
}

fn cut_pair(s: &PolygonSurface, first: &Slit, second: &Slit) -> Result<(PolygonSurface, Cut, Cut)> {
    let mut t = s.clone();
    let c1 = cut_slit(&mut t, first)?;
    let moved = relocate(&t, &c1, second)?;
    let c2 = cut_slit(&mut t, &moved)?;
    let c1 = refresh(&t, &c1, first);
    Ok((t, c1, c2))
}

/// Add a handle by cutting two disjoint slits and gluing each one's left side
/// to the other's right side. The map taking `slit_a` onto `slit_b` becomes the
/// linear holonomy of the new curve a₁; the loop b₁ around the slits has trivial
/// holonomy. The new handle is first in the marking.
pub fn add_handle(s: &PolygonSurface, slit_a: &Slit, slit_b: &Slit) -> Result<PolygonSurface> {
    s.validate()?;
    check_slit(s, slit_a)?;
    check_slit(s, slit_b)?;
    if slit_a.polygon == slit_b.polygon && segments_meet(&slit_a.start, &slit_a.end, &slit_b.start, &slit_b.end, &s.symbols)? {
        return Err(Error::SlitsOverlap);
    }
    let f = Affine::through(&slit_a.start, &slit_a.end, &slit_b.start, &slit_b.end).ok_or(Error::SegmentsNotAffinelyRelated)?;
    let mut t0 = s.clone();
    t0.marking = Some(marking_or_basis(s)?);
    let (mut t, ca, cb) = match cut_pair(&t0, slit_a, slit_b) {
        Ok(r) => r,
        Err(_) => {
            let (t, cb, ca) = cut_pair(&t0, slit_b, slit_a)
                .map_err(|_| Error::Unsupported("each slit's chord meets the other slit".into()))?;
            (t, ca, cb)
        }
    };
    let ga = t.pairings.len();
    t.pairings.push(Pairing { from: ca.plus, to: cb.minus, map: f.clone(), kind: PairingKind::Slit });
    let gb = ga + 1;
    t.pairings.push(Pairing { from: cb.plus, to: ca.minus, map: f.inverse().expect("invertible"), kind: PairingKind::Slit });
    let old: Vec<Vec<Crossing>> = t.marking.take().unwrap().into_iter().map(|c| c.path).collect();
    let busy = crossed(&old);
    let quiet = |k: usize| k < ga && !busy.contains(&k);
    let route = |x: usize, y: usize| t.route(x, y, quiet).or_else(|| t.route(x, y, |k| k < ga)).ok_or_else(disconnected);
    let base = t.base;
    let around_a = conjugate(&route(base, ca.right)?, &slit_loop(&t, ca.plus, ca.minus)?);
    let around_b = conjugate(&route(base, cb.right)?, &slit_loop(&t, cb.plus, cb.minus)?);
    // through the tube from b to a: crossing b⁺ forward applies f
    let tube = concat(&[&route(base, cb.left)?, &[Crossing { pairing: gb, forward: true }], &route(ca.right, base)?]);
    let pi = fundamental_group(&t)?;
    let ds = DehnSolver::new(pi.genus);
    let word = |p: &[Crossing]| pi.standard_word(p);
    let (wa, wb, wt) = (word(&around_a), word(&around_b), word(&tube));
    if !ds.equal(&wt.concat(&wa).concat(&wt.inverse()), &wb.inverse()) {
        return Err(Error::CertificateFailure("the tube does not carry one slit loop to the other".into()));
    }
    // Then [tube·w⁻¹, w·aᵉ·w⁻¹] = b⁻ᵉ·w·a⁻ᵉ·w⁻¹, so it suffices to write the old
    // relator as c·w·aᵉ·w⁻¹·bᵉ·c⁻¹.
    let r_old = relator_of(&pi, &old);
    let mut gens: Vec<Vec<Crossing>> = old.clone();
    gens.extend([around_a.clone(), around_b.clone()]);
    let tails = Candidates::new(&pi, &gens);
    gens.push(tube.clone());
    let mids = Candidates::new(&pi, &gens);
    let mut found = None;
    'search: for e in [1i64, -1] {
        let (ae, be) = (wa.pow(e), wb.pow(e));
        for (wp, ww) in &mids.items {
            let inner = ww.concat(&ae).concat(&ww.inverse()).concat(&be);
            for (cp, cw) in &tails.items {
                if ds.equal(&r_old, &cw.concat(&inner).concat(&cw.inverse())) {
                    found = Some((cp.clone(), wp.clone(), e));
                    break 'search;
                }
            }
        }
    }
    let (c, w, e) = found.ok_or_else(|| Error::CertificateFailure("no conjugate of the new handle closes the relation".into()))?;
    let new_a = conjugate(&c, &concat(&[&tube, &reverse_path(&w)]));
    let new_b = conjugate(&c, &conjugate(&w, &power(&around_a, e)));
    let paths: Vec<Vec<Crossing>> = [new_a, new_b].into_iter().chain(old).collect();
    t.marking = Some(paths.into_iter().enumerate().map(|(k, path)| MarkedCurve { name: curve_name(k), path }).collect());
    t.validate()?;
    Ok(t)
}

/// Products of at most two letters from a set of loops, with their words.
struct Candidates {
    items: Vec<(Vec<Crossing>, Word)>,
}

impl Candidates {
    fn new(pi: &Pi1, loops: &[Vec<Crossing>]) -> Self {
        let letters: Vec<(Vec<Crossing>, Word)> = loops
            .iter()
            .flat_map(|p| {
                let w = pi.standard_word(p);
                [(p.clone(), w.clone()), (reverse_path(p), w.inverse())]
            })
            .collect();
        let mut items = vec![(Vec::new(), Word::identity())];
        items.extend(letters.iter().cloned());
        for (xp, xw) in &letters {
            for (yp, yw) in &letters {
                items.push((concat(&[xp, yp]), xw.concat(yw)));
            }
        }
        Candidates { items }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::real::rat;
    use crate::surface::cone::cone_data;
    use crate::surface::holonomy::holonomy;
    use crate::surface::polygon::unit_square_torus;

    fn q(n: i64, d: i64) -> Num {
        Num::rational(&rat(n, d))
    }

    fn pt(x: Num, y: Num) -> Num {
        x.add(&Num::i().mul(&y))
    }

    fn horizontal(y: Num) -> Slit {
        Slit { polygon: 0, start: pt(q(1, 4), y.clone()), end: pt(q(3, 4), y) }
    }

    #[test]
    fn cut_keeps_the_surface_closed_after_regluing() {
        let mut s = unit_square_torus();
        let c = cut_slit(&mut s, &horizontal(q(1, 2))).unwrap();
        s.pairings.push(Pairing { from: c.plus, to: c.minus, map: Affine::identity(), kind: PairingKind::Slit });
        let d = s.validate().unwrap();
        assert_eq!(d.genus, 1);
        let h = holonomy(&s).unwrap();
        assert_eq!(h.rep.cocycle().0, vec![Num::one(), Num::i()]);
        assert!(h.certificate.relation_holds);
    }

    #[test]
    fn connected_sum_of_square_tori() {
        let t = unit_square_torus();
        let s = connected_sum(&t, &horizontal(q(1, 2)), &t, &horizontal(q(1, 3))).unwrap();
        assert_eq!(s.genus().unwrap(), 2);
        let cones = cone_data(&s).unwrap();
        let four_pi: Vec<_> = cones.singular().iter().map(|p| p.exact_over_pi.clone()).collect();
        assert_eq!(four_pi, vec![Some(rat(4, 1)), Some(rat(4, 1))]);
        let h = holonomy(&s).unwrap();
        assert!(h.certificate.homology_symplectic && h.certificate.relation_holds);
        assert!(h.rep.character().values().iter().all(Num::is_one));
        assert_eq!(h.rep.cocycle().0, vec![Num::one(), Num::i(), Num::one(), Num::i()]);
    }

    #[test]
    fn handle_at_right_angle() {
        let t = unit_square_torus();
        let a = horizontal(q(1, 4));
        let b = Slit { polygon: 0, start: pt(q(7, 8), q(2, 5)), end: pt(q(7, 8), q(9, 10)) };
        let s = add_handle(&t, &a, &b).unwrap();
        assert_eq!(s.genus().unwrap(), 2);
        let h = holonomy(&s).unwrap();
        assert!(h.certificate.homology_symplectic && h.certificate.relation_holds, "{:?}", h.certificate);
        let vals = h.rep.character().values().to_vec();
        assert_eq!(vals[0], Num::i());
        assert!(vals[1..].iter().all(Num::is_one));
        assert!(h.maps[1].is_identity());
        let cones = cone_data(&s).unwrap();
        assert!((cones.curvature_sum() - 2.0).abs() < 1e-9);
    }

    #[test]
    fn overlapping_slits() {
        let t = unit_square_torus();
        let a = horizontal(q(1, 2));
        let b = Slit { polygon: 0, start: pt(q(1, 2), q(1, 4)), end: pt(q(1, 2), q(3, 4)) };
        assert_eq!(add_handle(&t, &a, &b).unwrap_err(), Error::SlitsOverlap);
        let bad = Slit { polygon: 0, start: pt(q(1, 2), q(1, 2)), end: pt(q(3, 2), q(1, 2)) };
        assert_eq!(add_handle(&t, &bad, &a).unwrap_err(), Error::SlitCrossesVertex);
    }
}
