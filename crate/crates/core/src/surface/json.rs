//! `surface.json`: polygons with affine edge pairings.
//!
//! ```json
//! {"polygons": [[[0,1,0,1], [1,1,0,1], [1,1,1,1], [0,1,1,1]]],
//!  "pairings": [{"from": [0,0], "to": [0,2], "a": [1,0], "b": [0,1]},
//!               {"from": [0,3], "to": [0,1], "a": [1,0], "b": [1,0]}]}
//! ```
//!
//! Vertices are `[x_num, x_den, y_num, y_den]`; `a` and `b` are `[re, im]`.
//! Values outside ℚ(i) use the cyclotomic or polynomial forms of rep.json.
//! Optional fields: `symbols`, `symbol_values`, `base`, `exp`, `markings`,
//! and a `kind` per pairing.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith::{Num, Symbols};
use crate::character::repjson::{symbols_from, RationalJson, ValueJson};
use crate::error::{Error, Result};

use super::geom::Affine;
use super::polygon::{Crossing, EdgeRef, MarkedCurve, Pairing, PairingKind, PolygonSurface};

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(untagged)]
pub enum CoeffJson {
    ReIm([RationalJson; 2]),
    Value(ValueJson),
}

impl CoeffJson {
    fn parse(&self, syms: &Symbols) -> Result<Num> {
        match self {
            CoeffJson::ReIm([re, im]) => Ok(Num::gaussian(&re.parse()?, &im.parse()?)),
            CoeffJson::Value(v) => v.parse_with(syms),
        }
    }

    fn from_num(x: &Num, syms: &Symbols) -> Result<Self> {
        match ValueJson::from_num_with(x, syms)? {
            ValueJson::Gaussian([rn, rd, im_n, im_d]) => {
                let re = rn.parse()? / rd.parse()?;
                let im = im_n.parse()? / im_d.parse()?;
                Ok(CoeffJson::ReIm([RationalJson::from_rational(&re), RationalJson::from_rational(&im)]))
            }
            v => Ok(CoeffJson::Value(v)),
        }
    }
}

fn default_kind() -> PairingKind {
    PairingKind::Original
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct PairingJson {
    pub from: [usize; 2],
    pub to: [usize; 2],
    pub a: CoeffJson,
    pub b: CoeffJson,
    #[serde(default = "default_kind")]
    pub kind: PairingKind,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct CurveJson {
    pub name: String,
    /// (pairing, forward) steps of the dual loop.
    pub path: Vec<(usize, bool)>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct SurfaceJson {
    pub polygons: Vec<Vec<ValueJson>>,
    pub pairings: Vec<PairingJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub symbols: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symbol_values: Option<Vec<f64>>,
    #[serde(default)]
    pub base: usize,
    #[serde(default)]
    pub exp: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub markings: Option<Vec<CurveJson>>,
}

impl SurfaceJson {
    pub fn from_surface(s: &PolygonSurface) -> Result<Self> {
        let syms = &s.symbols;
        let polygons = s
            .polygons
            .iter()
            .map(|p| p.iter().map(|z| ValueJson::from_num_with(z, syms)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let pairings = s
            .pairings
            .iter()
            .map(|p| {
                Ok(PairingJson {
                    from: [p.from.polygon, p.from.edge],
                    to: [p.to.polygon, p.to.edge],
                    a: CoeffJson::from_num(&p.map.a, syms)?,
                    b: CoeffJson::from_num(&p.map.b, syms)?,
                    kind: p.kind,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let names = syms.names().to_vec();
        let values = (1..=names.len()).map(|k| syms.value(k)).collect::<Vec<_>>();
        Ok(SurfaceJson {
            polygons,
            pairings,
            symbol_values: (!names.is_empty()).then_some(values),
            symbols: names,
            base: s.base,
            exp: s.exp,
            markings: s.marking.as_ref().map(|m| {
                m.iter().map(|c| CurveJson { name: c.name.clone(), path: c.path.iter().map(|x| (x.pairing, x.forward)).collect() }).collect()
            }),
        })
    }

    pub fn to_surface(&self) -> Result<PolygonSurface> {
        let syms = symbols_from(&self.symbols, self.symbol_values.as_deref())?;
        let polygons = self
            .polygons
            .iter()
            .map(|p| p.iter().map(|z| z.parse_with(&syms)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let in_range = |[p, e]: [usize; 2]| {
            if p < polygons.len() && e < polygons[p].len() {
                Ok(EdgeRef::new(p, e))
            } else {
                Err(Error::InvalidSurface(format!("edge [{}, {}] does not exist", p, e)))
            }
        };
        let pairings = self
            .pairings
            .iter()
            .map(|p| {
                let a = p.a.parse(&syms)?;
                if a.is_zero() {
                    return Err(Error::InvalidSurface("pairing with zero linear part".into()));
                }
                Ok(Pairing { from: in_range(p.from)?, to: in_range(p.to)?, map: Affine::new(a, p.b.parse(&syms)?), kind: p.kind })
            })
            .collect::<Result<Vec<_>>>()?;
        if self.base >= polygons.len().max(1) {
            return Err(Error::InvalidSurface("base polygon does not exist".into()));
        }
        let marking = self
            .markings
            .as_ref()
            .map(|m| {
                m.iter()
                    .map(|c| {
                        let path = c
                            .path
                            .iter()
                            .map(|&(pairing, forward)| {
                                if pairing < pairings.len() {
                                    Ok(Crossing { pairing, forward })
                                } else {
                                    Err(Error::InvalidSurface(format!("marking {} crosses unknown pairing {}", c.name, pairing)))
                                }
                            })
                            .collect::<Result<Vec<_>>>()?;
                        Ok(MarkedCurve { name: c.name.clone(), path })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .transpose()?;
        Ok(PolygonSurface { polygons, pairings, base: self.base, marking, exp: self.exp, symbols: Arc::new(syms) })
    }
}

pub fn parse_surface(text: &str) -> Result<PolygonSurface> {
    let j: SurfaceJson = serde_json::from_str(text).map_err(|e| Error::Invalid(format!("surface.json: {}", e)))?;
    j.to_surface()
}

pub fn surface_to_json(s: &PolygonSurface) -> Result<serde_json::Value> {
    Ok(serde_json::to_value(SurfaceJson::from_surface(s)?).expect("serializable"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::holonomy::holonomy;
    use crate::surface::polygon::unit_square_torus;

    #[test]
    fn doc_example_parses() {
        let text = r#"{"polygons": [[[0,1,0,1], [1,1,0,1], [1,1,1,1], [0,1,1,1]]],
            "pairings": [{"from": [0,0], "to": [0,2], "a": [1,0], "b": [0,1]},
                         {"from": [0,3], "to": [0,1], "a": [1,0], "b": [1,0]}]}"#;
        let s = parse_surface(text).unwrap();
        assert_eq!(s.validate().unwrap().genus, 1);
    }

    #[test]
    fn roundtrip_keeps_holonomy() {
        let s = unit_square_torus();
        let back = parse_surface(&surface_to_json(&s).unwrap().to_string()).unwrap();
        assert_eq!(holonomy(&back).unwrap().rep, holonomy(&s).unwrap().rep);
    }

    #[test]
    fn bad_edges_rejected() {
        let text = r#"{"polygons": [[[0,1,0,1], [1,1,0,1], [0,1,1,1]]],
            "pairings": [{"from": [0,0], "to": [0,5], "a": [1,0], "b": [0,1]}]}"#;
        assert!(matches!(parse_surface(text), Err(Error::InvalidSurface(_))));
    }
}
