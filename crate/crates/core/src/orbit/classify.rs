//! Orbit closures of the mapping class group acting on characters.
//!
//! The case split follows the modulus lattice:
//! * trivial modulus (Euclidean): finite image or dense in the circle;
//! * discrete nontrivial modulus: a discrete image gives a discrete orbit,
//!   otherwise the closure is the level set H_{m,v};
//! * dense modulus: one-parameter group times roots of unity, or all of ℂ*.

use serde_json::{json, Value};

use crate::arith::real::{ExactReal, LogValue};
use crate::arith::Symbols;
use crate::character::Character;
use crate::error::{Error, Result};

use super::closure::{image_closure, Subgroup};
use super::hmv::{hmv_invariant, Hmv};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrbitClosure {
    DiscreteOrbit,
    Hmv(Hmv),
    OneParamTimesRoots { n: u64, direction: LogValue },
    FullGroup,
    EuclideanFinite { n: u64 },
    EuclideanDense,
}

impl OrbitClosure {
    pub fn tag(&self) -> &'static str {
        match self {
            OrbitClosure::DiscreteOrbit => "discrete_orbit",
            OrbitClosure::Hmv(_) => "H_mv",
            OrbitClosure::OneParamTimesRoots { .. } => "one_param_times_roots",
            OrbitClosure::FullGroup => "full_group",
            OrbitClosure::EuclideanFinite { .. } => "euclidean_finite",
            OrbitClosure::EuclideanDense => "euclidean_dense",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub closure: OrbitClosure,
    pub image: Subgroup,
    pub trace: Vec<String>,
}

impl Classification {
    pub fn to_json(&self, syms: &Symbols) -> Value {
        let mut v = json!({ "tag": self.closure.tag() });
        let o = v.as_object_mut().unwrap();
        match &self.closure {
            OrbitClosure::Hmv(h) => {
                for (k, x) in h.to_json(syms).as_object().unwrap() {
                    o.insert(k.clone(), x.clone());
                }
            }
            OrbitClosure::OneParamTimesRoots { n, direction } => {
                o.insert("n".into(), json!(n));
                o.insert("direction".into(), json!({ "mod": direction.re.display(syms), "angle": direction.turns.display(syms) }));
            }
            OrbitClosure::EuclideanFinite { n } => {
                o.insert("n".into(), json!(n));
            }
            _ => {}
        }
        o.insert("image".into(), self.image.to_json(syms));
        o.insert("trace".into(), json!(self.trace));
        v
    }
}

pub fn classify(alpha: &Character) -> Result<Classification> {
    if alpha.is_trivial() {
        return Err(Error::TrivialCharacter);
    }
    let image = image_closure(alpha)?;
    let syms = alpha.symbols();
    let mut trace = Vec::new();
    let closure = match &image {
        Subgroup::Finite { n } => {
            trace.push(format!("modulus trivial; image is the finite group of order {}", n));
            trace.push("orbit is discrete: characters with the same finite image".into());
            OrbitClosure::EuclideanFinite { n: *n }
        }
        Subgroup::OneParam { direction } if direction.re.is_zero() => {
            trace.push("modulus trivial; an angle is irrational so the image is dense in the circle".into());
            trace.push("closure is the set of unitary characters".into());
            OrbitClosure::EuclideanDense
        }
        Subgroup::DiscreteCyclic { generator } | Subgroup::DiscreteTimesFinite { generator, .. } => {
            trace.push(format!("modulus image generated by exp({})", generator.re.display(syms)));
            trace.push("rotations over the kernel of the modulus are finite, so the image is discrete".into());
            if !generator.turns.is_rational() {
                trace.push("irrational rotation carried by the modulus direction only; still discrete".into());
            }
            OrbitClosure::DiscreteOrbit
        }
        Subgroup::CircleTimesDiscrete { m } => {
            let h = hmv_invariant(alpha)?;
            trace.push(format!("modulus image generated by exp({})", m.display(syms)));
            trace.push("rotations over the kernel of the modulus are dense".into());
            trace.push(format!("closure is the level set of the cup product, v/m = {} mod 1", h.v_units.display(syms)));
            OrbitClosure::Hmv(h)
        }
        Subgroup::OneParam { direction } => {
            trace.push("modulus image dense; angles are a rational multiple of the modulus".into());
            OrbitClosure::OneParamTimesRoots { n: 1, direction: direction.clone() }
        }
        Subgroup::OneParamTimesFinite { direction, n } => {
            trace.push(format!("modulus image dense; angles are a rational multiple of the modulus up to order-{} roots", n));
            OrbitClosure::OneParamTimesRoots { n: *n, direction: direction.clone() }
        }
        Subgroup::Full => {
            trace.push("modulus image dense and rotations independent of it: image dense in C*".into());
            OrbitClosure::FullGroup
        }
    };
    Ok(Classification { closure, image, trace })
}

/// Helper for tests and decks: a character from (modulus, angle) pairs.
pub fn character_from_parts(parts: &[(ExactReal, ExactReal)], symbols: Symbols) -> Result<Character> {
    let logs = parts.iter().map(|(m, t)| LogValue::new(m.clone(), t.clone())).collect();
    Character::from_logs(logs, std::sync::Arc::new(symbols))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts(g: usize, set: &[(usize, ExactReal, ExactReal)]) -> Vec<(ExactReal, ExactReal)> {
        let mut v = vec![(ExactReal::zero(), ExactReal::zero()); 2 * g];
        for (k, m, t) in set {
            v[*k] = (m.clone(), t.clone());
        }
        v
    }

    #[test]
    fn examples() {
        let s = || Symbols::with_names(&["t", "k"]);
        let tau = ExactReal::symbol(1);
        let kappa = ExactReal::symbol(2);
        let a = character_from_parts(&parts(2, &[(0, tau.clone(), kappa.clone())]), s()).unwrap();
        assert_eq!(classify(&a).unwrap().closure, OrbitClosure::DiscreteOrbit);
        let a = character_from_parts(&parts(2, &[(0, tau.clone(), ExactReal::zero()), (1, ExactReal::zero(), kappa.clone())]), s()).unwrap();
        assert_eq!(classify(&a).unwrap().closure.tag(), "H_mv");
        let a = character_from_parts(&parts(2, &[(0, ExactReal::zero(), kappa.clone())]), s()).unwrap();
        assert_eq!(classify(&a).unwrap().closure, OrbitClosure::EuclideanDense);
        let a = character_from_parts(&parts(2, &[(0, ExactReal::zero(), ExactReal::ratio(1, 4))]), s()).unwrap();
        assert_eq!(classify(&a).unwrap().closure, OrbitClosure::EuclideanFinite { n: 4 });
        assert_eq!(classify(&Character::trivial(2)), Err(Error::TrivialCharacter));
    }
}
