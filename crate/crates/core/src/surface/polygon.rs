//! Surfaces glued from planar polygons by affine edge pairings.
//!
//! Polygons are counterclockwise vertex lists in their own chart. Edge k of a
//! polygon runs from vertex k to vertex k+1. A pairing z ↦ az + b carries its
//! `from` edge onto its `to` edge with reversed orientation.

use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith::{Num, Symbols};
use crate::error::{Error, Result};

use super::geom::{cross, double_area, sign, Affine};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct EdgeRef {
    pub polygon: usize,
    pub edge: usize,
}

impl EdgeRef {
    pub fn new(polygon: usize, edge: usize) -> Self {
        EdgeRef { polygon, edge }
    }
}

/// What a pairing came from; used for routing curves and for drawing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairingKind {
    Original,
    /// Internal cut between the slit and the boundary on the slit's start side.
    CutNear,
    /// Internal cut on the slit's end side.
    CutFar,
    /// Re-glued slit sides.
    Slit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pairing {
    pub from: EdgeRef,
    pub to: EdgeRef,
    pub map: Affine,
    pub kind: PairingKind,
}

/// Passing through pairing `pairing`; forward means leaving through its `from` edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Crossing {
    pub pairing: usize,
    pub forward: bool,
}

impl Crossing {
    pub fn reversed(self) -> Self {
        Crossing { pairing: self.pairing, forward: !self.forward }
    }
}

/// Closed dual path based at the base polygon.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MarkedCurve {
    pub name: String,
    pub path: Vec<Crossing>,
}

pub fn reverse_path(p: &[Crossing]) -> Vec<Crossing> {
    p.iter().rev().map(|c| c.reversed()).collect()
}

/// Cancel immediate back-and-forth crossings.
pub fn reduce_path(p: &[Crossing]) -> Vec<Crossing> {
    let mut out: Vec<Crossing> = Vec::with_capacity(p.len());
    for &c in p {
        if out.last() == Some(&c.reversed()) {
            out.pop();
        } else {
            out.push(c);
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct PolygonSurface {
    pub polygons: Vec<Vec<Num>>,
    pub pairings: Vec<Pairing>,
    pub base: usize,
    /// Optional symplectic marking a₁, b₁, …, a_g, b_g.
    pub marking: Option<Vec<MarkedCurve>>,
    /// Translation structure whose charts are to be exponentiated.
    pub exp: bool,
    pub symbols: Arc<Symbols>,
}

/// Corners around one identified vertex, in the order met by crossing the
/// outgoing edge of each corner.
#[derive(Clone, Debug)]
pub struct VertexClass {
    pub corners: Vec<(usize, usize)>,
    pub crossings: Vec<Crossing>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub ok: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Diagnostics {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler_characteristic: i64,
    pub genus: usize,
    pub checks: Vec<Check>,
}

impl PolygonSurface {
    pub fn new(polygons: Vec<Vec<Num>>, pairings: Vec<Pairing>) -> Self {
        PolygonSurface { polygons, pairings, base: 0, marking: None, exp: false, symbols: Arc::new(Symbols::new()) }
    }

    pub fn edge_points(&self, e: EdgeRef) -> (&Num, &Num) {
        let p = &self.polygons[e.polygon];
        (&p[e.edge], &p[(e.edge + 1) % p.len()])
    }

    /// Edge → (pairing index, edge is the `from` side).
    pub fn edge_index(&self) -> Result<HashMap<EdgeRef, (usize, bool)>> {
        let mut idx = HashMap::new();
        for (k, p) in self.pairings.iter().enumerate() {
            for (e, is_from) in [(p.from, true), (p.to, false)] {
                if e.polygon >= self.polygons.len() || e.edge >= self.polygons[e.polygon].len() {
                    return Err(Error::InvalidSurface(format!("pairing {} names a missing edge {:?}", k, e)));
                }
                if idx.insert(e, (k, is_from)).is_some() {
                    return Err(Error::InvalidSurface(format!("edge {:?} is paired twice", e)));
                }
            }
        }
        for (pi, poly) in self.polygons.iter().enumerate() {
            for k in 0..poly.len() {
                if !idx.contains_key(&EdgeRef::new(pi, k)) {
                    return Err(Error::InvalidSurface(format!("edge {:?} is unpaired", EdgeRef::new(pi, k))));
                }
            }
        }
        Ok(idx)
    }

    /// Polygon left and entered by a crossing.
    pub fn crossing_ends(&self, c: Crossing) -> (usize, usize) {
        let p = &self.pairings[c.pairing];
        if c.forward {
            (p.from.polygon, p.to.polygon)
        } else {
            (p.to.polygon, p.from.polygon)
        }
    }

    /// Chart change of a crossing: new chart coordinates → old chart coordinates.
    pub fn transition(&self, c: Crossing) -> Affine {
        let m = &self.pairings[c.pairing].map;
        if c.forward {
            m.inverse().expect("pairing maps are invertible")
        } else {
            m.clone()
        }
    }

    /// Holonomy of a dual path from polygon `start`; it must be contiguous.
    pub fn path_holonomy(&self, start: usize, path: &[Crossing]) -> Result<(Affine, usize)> {
        let mut cur = start;
        let mut acc = Affine::identity();
        for &c in path {
            let (out, into) = self.crossing_ends(c);
            if out != cur {
                return Err(Error::InvalidSurface(format!("path leaves polygon {} but is in polygon {}", out, cur)));
            }
            acc = acc.compose(&self.transition(c));
            cur = into;
        }
        Ok((acc, cur))
    }

    pub fn loop_holonomy(&self, path: &[Crossing]) -> Result<Affine> {
        let (h, end) = self.path_holonomy(self.base, path)?;
        if end != self.base {
            return Err(Error::InvalidSurface("marked curve does not return to the base polygon".into()));
        }
        Ok(h)
    }

    pub fn vertex_classes(&self) -> Result<Vec<VertexClass>> {
        let idx = self.edge_index()?;
        let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
        let mut classes = Vec::new();
        for (pi, poly) in self.polygons.iter().enumerate() {
            for vi in 0..poly.len() {
                if seen.contains_key(&(pi, vi)) {
                    continue;
                }
                let id = classes.len();
                let mut class = VertexClass { corners: Vec::new(), crossings: Vec::new() };
                let (mut p, mut v) = (pi, vi);
                loop {
                    if seen.insert((p, v), id).is_some() {
                        return Err(Error::InvalidSurface("vertex link is not a cycle".into()));
                    }
                    class.corners.push((p, v));
                    let (k, is_from) = idx[&EdgeRef::new(p, v)];
                    let pr = &self.pairings[k];
                    class.crossings.push(Crossing { pairing: k, forward: is_from });
                    let other = if is_from { pr.to } else { pr.from };
                    p = other.polygon;
                    v = (other.edge + 1) % self.polygons[p].len();
                    if (p, v) == (pi, vi) {
                        break;
                    }
                }
                classes.push(class);
            }
        }
        Ok(classes)
    }

    pub fn euler_characteristic(&self) -> Result<i64> {
        Ok(self.vertex_classes()?.len() as i64 - self.pairings.len() as i64 + self.polygons.len() as i64)
    }

    pub fn genus(&self) -> Result<usize> {
        let chi = self.euler_characteristic()?;
        if chi > 2 || chi % 2 != 0 {
            return Err(Error::InvalidSurface(format!("Euler characteristic {} is not that of a closed orientable surface", chi)));
        }
        Ok(((2 - chi) / 2) as usize)
    }

    /// Breadth-first dual spanning tree from the base polygon: for each polygon
    /// the path reaching it, and the set of tree pairings.
    pub fn dual_tree(&self, allowed: impl Fn(usize) -> bool) -> (Vec<Option<Vec<Crossing>>>, Vec<bool>) {
        let n = self.polygons.len();
        let mut paths: Vec<Option<Vec<Crossing>>> = vec![None; n];
        let mut tree = vec![false; self.pairings.len()];
        if n == 0 {
            return (paths, tree);
        }
        paths[self.base] = Some(Vec::new());
        let mut queue = VecDeque::from([self.base]);
        while let Some(p) = queue.pop_front() {
            for (k, pr) in self.pairings.iter().enumerate() {
                if !allowed(k) {
                    continue;
                }
                for forward in [true, false] {
                    let c = Crossing { pairing: k, forward };
                    let (out, into) = self.crossing_ends(c);
                    let _ = pr;
                    if out == p && paths[into].is_none() {
                        let mut path = paths[p].clone().unwrap();
                        path.push(c);
                        paths[into] = Some(path);
                        tree[k] = true;
                        queue.push_back(into);
                    }
                }
            }
        }
        (paths, tree)
    }

    /// A dual path from polygon `a` to polygon `b` using only allowed pairings.
    pub fn route(&self, a: usize, b: usize, allowed: impl Fn(usize) -> bool) -> Option<Vec<Crossing>> {
        let mut prev: Vec<Option<(usize, Crossing)>> = vec![None; self.polygons.len()];
        let mut seen = vec![false; self.polygons.len()];
        seen[a] = true;
        let mut queue = VecDeque::from([a]);
        while let Some(p) = queue.pop_front() {
            if p == b {
                break;
            }
            for k in 0..self.pairings.len() {
                if !allowed(k) {
                    continue;
                }
                for forward in [true, false] {
                    let c = Crossing { pairing: k, forward };
                    let (out, into) = self.crossing_ends(c);
                    if out == p && !seen[into] {
                        seen[into] = true;
                        prev[into] = Some((p, c));
                        queue.push_back(into);
                    }
                }
            }
        }
        if !seen[b] {
            return None;
        }
        let mut path = Vec::new();
        let mut cur = b;
        while cur != a {
            let (p, c) = prev[cur].unwrap();
            path.push(c);
            cur = p;
        }
        path.reverse();
        Some(path)
    }

    /// Per-check report; `validate` turns the first failure into an error.
    pub fn diagnose(&self) -> Diagnostics {
        let syms = &self.symbols;
        let mut checks = Vec::new();
        let mut push = |name: &'static str, r: std::result::Result<(), String>| {
            let (ok, detail) = match r {
                Ok(()) => (true, String::new()),
                Err(d) => (false, d),
            };
            checks.push(Check { name, ok, detail });
        };
        push(
            "polygons",
            self.polygons
                .iter()
                .enumerate()
                .try_for_each(|(k, p)| {
                    if p.len() < 3 {
                        return Err(format!("polygon {} has fewer than three vertices", k));
                    }
                    if (0..p.len()).any(|j| p[j] == p[(j + 1) % p.len()]) {
                        return Err(format!("polygon {} has a degenerate edge", k));
                    }
                    match double_area(p).real_sign(syms) {
                        Some(Ordering::Greater) => Ok(()),
                        Some(_) => Err(format!("polygon {} is not counterclockwise", k)),
                        None => Err(format!("orientation of polygon {} is undecidable", k)),
                    }
                }),
        );
        let idx = self.edge_index();
        push("pairing_bijective", idx.as_ref().map(|_| ()).map_err(|e| e.to_string()));
        push(
            "endpoint_equations",
            self.pairings.iter().enumerate().try_for_each(|(k, p)| {
                if p.from.polygon >= self.polygons.len() || p.to.polygon >= self.polygons.len() {
                    return Err(format!("pairing {} names a missing polygon", k));
                }
                if p.from.edge >= self.polygons[p.from.polygon].len() || p.to.edge >= self.polygons[p.to.polygon].len() {
                    return Err(format!("pairing {} names a missing edge", k));
                }
                if p.from == p.to {
                    return Err(format!("pairing {} glues an edge to itself", k));
                }
                let (u, v) = self.edge_points(p.from);
                let (w, x) = self.edge_points(p.to);
                if p.map.a.is_zero() {
                    return Err(format!("pairing {} has a = 0", k));
                }
                if p.map.apply(u) != *x || p.map.apply(v) != *w {
                    return Err(format!("pairing {} does not carry edge {:?} onto edge {:?}", k, p.from, p.to));
                }
                Ok(())
            }),
        );
        let (paths, _) = self.dual_tree(|_| true);
        push(
            "connected",
            if paths.iter().all(Option::is_some) { Ok(()) } else { Err("the glued complex is disconnected".into()) },
        );
        push(
            "base",
            if self.base < self.polygons.len() { Ok(()) } else { Err(format!("base polygon {} does not exist", self.base)) },
        );
        let classes = if idx.is_ok() { self.vertex_classes().ok() } else { None };
        let (vertices, euler) = match &classes {
            Some(c) => (c.len(), c.len() as i64 - self.pairings.len() as i64 + self.polygons.len() as i64),
            None => (0, 0),
        };
        push(
            "euler",
            match &classes {
                Some(_) if euler <= 2 && euler % 2 == 0 => Ok(()),
                Some(_) => Err(format!("Euler characteristic {} is not that of a closed orientable surface", euler)),
                None => Err("vertex classes unavailable".into()),
            },
        );
        Diagnostics {
            vertices,
            edges: self.pairings.len(),
            faces: self.polygons.len(),
            euler_characteristic: euler,
            genus: if euler <= 2 { ((2 - euler) / 2) as usize } else { 0 },
            checks,
        }
    }

    pub fn validate(&self) -> Result<Diagnostics> {
        let d = self.diagnose();
        if let Some(c) = d.checks.iter().find(|c| !c.ok) {
            return Err(match c.name {
                "endpoint_equations" => Error::EdgeMismatch(c.detail.clone()),
                _ => Error::InvalidSurface(c.detail.clone()),
            });
        }
        Ok(d)
    }

    /// Whether polygon `p` is convex (collinear vertices allowed).
    pub fn is_convex(&self, p: usize) -> Result<bool> {
        let poly = &self.polygons[p];
        let n = poly.len();
        for k in 0..n {
            let d1 = poly[(k + 1) % n].sub(&poly[k]);
            let d2 = poly[(k + 2) % n].sub(&poly[(k + 1) % n]);
            if sign(&cross(&d1, &d2), &self.symbols)? == Ordering::Less {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether `z` lies strictly inside convex polygon `p`.
    pub fn strictly_inside(&self, p: usize, z: &Num) -> Result<bool> {
        let poly = &self.polygons[p];
        let n = poly.len();
        for k in 0..n {
            let d = poly[(k + 1) % n].sub(&poly[k]);
            if sign(&cross(&d, &z.sub(&poly[k])), &self.symbols)? != Ordering::Greater {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn area(&self) -> Num {
        let half = Num::rational(&crate::arith::real::rat(1, 2));
        self.polygons.iter().fold(Num::zero(), |acc, p| acc.add(&double_area(p).mul(&half)))
    }
}

/// The parallelogram torus spanned by u and v (Im(ū v) > 0), marked by the
/// horizontal loop a (holonomy z + u) and the vertical loop b (z + v).
pub fn parallelogram_torus(u: &Num, v: &Num, symbols: Arc<Symbols>) -> Result<PolygonSurface> {
    if sign(&cross(u, v), &symbols)? != Ordering::Greater {
        return Err(Error::NegativeVolume);
    }
    let poly = vec![Num::zero(), u.clone(), u.add(v), v.clone()];
    let pairings = vec![
        Pairing { from: EdgeRef::new(0, 0), to: EdgeRef::new(0, 2), map: Affine::translation(v.clone()), kind: PairingKind::Original },
        Pairing { from: EdgeRef::new(0, 3), to: EdgeRef::new(0, 1), map: Affine::translation(u.clone()), kind: PairingKind::Original },
    ];
    let mut s = PolygonSurface::new(vec![poly], pairings);
    s.symbols = symbols;
    s.marking = Some(vec![
        MarkedCurve { name: "a1".into(), path: vec![Crossing { pairing: 1, forward: false }] },
        MarkedCurve { name: "b1".into(), path: vec![Crossing { pairing: 0, forward: false }] },
    ]);
    Ok(s)
}

pub fn unit_square_torus() -> PolygonSurface {
    parallelogram_torus(&Num::one(), &Num::i(), Arc::new(Symbols::new())).expect("positive orientation")
}

/// Octagon with each edge k translated onto edge k+4; opposite sides must be
/// parallel and of equal length.
pub fn translation_octagon(vertices: Vec<Num>) -> Result<PolygonSurface> {
    if vertices.len() != 8 {
        return Err(Error::InvalidSurface("an octagon needs eight vertices".into()));
    }
    let pairings = (0..4)
        .map(|k| Pairing {
            from: EdgeRef::new(0, k),
            to: EdgeRef::new(0, k + 4),
            map: Affine::translation(vertices[(k + 5) % 8].sub(&vertices[k])),
            kind: PairingKind::Original,
        })
        .collect();
    let s = PolygonSurface::new(vec![vertices], pairings);
    s.validate()?;
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn z(re: i64, im: i64) -> Num {
        Num::int(re).add(&Num::i().mul(&Num::int(im)))
    }

    #[test]
    fn square_torus() {
        let s = unit_square_torus();
        let d = s.validate().unwrap();
        assert_eq!((d.vertices, d.edges, d.faces, d.euler_characteristic, d.genus), (1, 2, 1, 0, 1));
        let m = s.marking.as_ref().unwrap();
        assert_eq!(s.loop_holonomy(&m[0].path).unwrap(), Affine::translation(Num::one()));
        assert_eq!(s.loop_holonomy(&m[1].path).unwrap(), Affine::translation(Num::i()));
    }

    #[test]
    fn octagon_genus_two() {
        let v = vec![z(0, 0), z(2, 0), z(3, 1), z(3, 3), z(2, 4), z(0, 4), z(-1, 3), z(-1, 1)];
        let s = translation_octagon(v).unwrap();
        let d = s.validate().unwrap();
        assert_eq!((d.vertices, d.edges, d.faces, d.genus), (1, 4, 1, 2));
    }

    #[test]
    fn mismatched_edges() {
        let mut s = unit_square_torus();
        s.pairings[0].map = Affine::translation(z(0, 2));
        assert!(matches!(s.validate(), Err(Error::EdgeMismatch(_))));
        let mut s = unit_square_torus();
        s.polygons[0][2] = z(2, 1);
        assert!(s.validate().is_err());
    }
}
