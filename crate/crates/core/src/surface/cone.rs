//! Cone angles at identified vertices.

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::Result;

use super::geom::Affine;
use super::polygon::PolygonSurface;

#[derive(Clone, Debug, Serialize)]
pub struct ConePoint {
    pub corners: Vec<(usize, usize)>,
    /// Total angle divided by π, from the polygon geometry.
    pub angle_over_pi: f64,
    /// Exact total angle / π when the linear holonomy around the vertex is a root of unity.
    #[serde(serialize_with = "ser_opt_rat")]
    pub exact_over_pi: Option<BigRational>,
    /// angle / 2π − 1 when the angle is a multiple of 2π.
    pub branching_order: Option<i64>,
}

fn ser_opt_rat<S: serde::Serializer>(q: &Option<BigRational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match q {
        Some(q) => s.serialize_str(&q.to_string()),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConeData {
    pub points: Vec<ConePoint>,
}

impl ConeData {
    /// Points whose angle is not 2π.
    pub fn singular(&self) -> Vec<&ConePoint> {
        self.points.iter().filter(|p| p.exact_over_pi.as_ref().map_or((p.angle_over_pi - 2.0).abs() > 1e-9, |q| *q != BigRational::from_integer(2.into()))).collect()
    }

    /// Σ (angle/2π − 1), which equals 2g − 2 on a closed surface.
    pub fn curvature_sum(&self) -> f64 {
        self.points.iter().map(|p| p.angle_over_pi / 2.0 - 1.0).sum()
    }
}

pub fn cone_data(s: &PolygonSurface) -> Result<ConeData> {
    s.validate()?;
    let syms = &s.symbols;
    let mut points = Vec::new();
    for class in s.vertex_classes()? {
        let mut total = 0.0;
        for &(p, v) in &class.corners {
            let poly = &s.polygons[p];
            let n = poly.len();
            let prev = poly[(v + n - 1) % n].sub(&poly[v]).to_c64(syms);
            let next = poly[(v + 1) % n].sub(&poly[v]).to_c64(syms);
            let mut ang = (prev / next).arg();
            if ang <= 0.0 {
                ang += std::f64::consts::TAU;
            }
            total += ang;
        }
        let over_pi = total / std::f64::consts::PI;
        let hol = class.crossings.iter().fold(Affine::identity(), |acc, &c| acc.compose(&s.transition(c)));
        let exact = hol.a.as_cyclo().and_then(|c| c.root_of_unity_exponent()).and_then(|(m, j)| {
            // angle ≡ ±2πj/m mod 2π; pick the representative nearest the geometry
            let frac = BigRational::new((2 * j as i64).into(), (m as i64).into());
            let f = frac.to_f64().unwrap_or(0.0);
            [f, -f]
                .iter()
                .enumerate()
                .filter_map(|(si, &cand)| {
                    let k = ((over_pi - cand) / 2.0).round();
                    let err = (over_pi - cand - 2.0 * k).abs();
                    (err < 1e-6).then(|| {
                        let base = if si == 0 { frac.clone() } else { -frac.clone() };
                        base + BigRational::from_integer((2 * k as i64).into())
                    })
                })
                .next()
        });
        let branching_order = exact.as_ref().and_then(|q| {
            let half = q / BigRational::from_integer(2.into());
            (half.is_integer() && !q.is_zero()).then(|| half.to_integer().to_i64().unwrap_or(0) - 1)
        });
        points.push(ConePoint { corners: class.corners.clone(), angle_over_pi: over_pi, exact_over_pi: exact, branching_order });
    }
    Ok(ConeData { points })
}
