//! The closed subgroup of ℂ* generated by the values of a character.
//!
//! Everything is decided by ℚ-linear algebra on the symbol coefficients of
//! the logarithms. Under the independence contract a real with a nonzero
//! symbol coefficient is irrational, and a ℤ-module of ℚ-rank ≥ 2 in ℝ is
//! dense.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::arith::linalg::{rank, rational_gcd, unimodular_completion};
use crate::arith::real::{ExactReal, LogValue};
use crate::arith::Symbols;
use crate::character::Character;
use crate::error::{Error, Result};

/// Closed subgroups of ℂ*. `exp(s·z₀)` subgroups carry z₀ as a logarithm
/// `re + 2πi·turns` with rational parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subgroup {
    Finite { n: u64 },
    DiscreteCyclic { generator: LogValue },
    /// ⟨a⟩ × ⟨ζ_n⟩; the generator angle is reduced modulo 1/n.
    DiscreteTimesFinite { generator: LogValue, n: u64 },
    /// 𝕌 × ⟨e^m⟩.
    CircleTimesDiscrete { m: ExactReal },
    OneParam { direction: LogValue },
    OneParamTimesFinite { direction: LogValue, n: u64 },
    Full,
}

impl Subgroup {
    pub fn tag(&self) -> &'static str {
        match self {
            Subgroup::Finite { .. } => "finite",
            Subgroup::DiscreteCyclic { .. } => "discrete_cyclic",
            Subgroup::DiscreteTimesFinite { .. } => "discrete_times_finite",
            Subgroup::CircleTimesDiscrete { .. } => "circle_times_discrete",
            Subgroup::OneParam { .. } => "one_param",
            Subgroup::OneParamTimesFinite { .. } => "one_param_times_finite",
            Subgroup::Full => "full",
        }
    }

    pub fn is_discrete(&self) -> bool {
        matches!(self, Subgroup::Finite { .. } | Subgroup::DiscreteCyclic { .. } | Subgroup::DiscreteTimesFinite { .. })
    }

    pub fn to_json(&self, syms: &Symbols) -> Value {
        let log = |l: &LogValue| json!({ "mod": l.re.display(syms), "angle": l.turns.display(syms) });
        let mut v = json!({ "tag": self.tag() });
        let o = v.as_object_mut().unwrap();
        match self {
            Subgroup::Finite { n } => {
                o.insert("n".into(), json!(n));
            }
            Subgroup::DiscreteCyclic { generator } => {
                o.insert("generator".into(), log(generator));
            }
            Subgroup::DiscreteTimesFinite { generator, n } => {
                o.insert("generator".into(), log(generator));
                o.insert("n".into(), json!(n));
            }
            Subgroup::CircleTimesDiscrete { m } => {
                o.insert("m".into(), json!(m.display(syms)));
            }
            Subgroup::OneParam { direction } => {
                o.insert("direction".into(), log(direction));
            }
            Subgroup::OneParamTimesFinite { direction, n } => {
                o.insert("direction".into(), log(direction));
                o.insert("n".into(), json!(n));
            }
            Subgroup::Full => {}
        }
        v
    }
}

/// The ℤ-module spanned by the modulus exponents.
#[derive(Clone, Debug)]
pub(crate) enum ModulusLattice {
    Trivial,
    /// m > 0 and integers x with modulus_k = x_k·m, gcd(x) = 1.
    Discrete { m: ExactReal, multiples: Vec<BigInt> },
    Dense,
}

fn coefficient_rows(v: &[ExactReal]) -> Vec<Vec<BigRational>> {
    let w = v.iter().map(ExactReal::width).max().unwrap_or(0);
    v.iter().map(|x| (0..w).map(|s| x.coeff(s)).collect()).collect()
}

/// Sign of an exact real: exact when rational, else from the symbol shadows.
pub(crate) fn real_sign(x: &ExactReal, syms: &Symbols) -> Ordering {
    match x.as_rational() {
        Some(q) => q.cmp(&BigRational::zero()),
        None => x.eval(syms).partial_cmp(&0.0).unwrap_or(Ordering::Equal),
    }
}

pub(crate) fn modulus_lattice(mods: &[ExactReal], syms: &Symbols) -> ModulusLattice {
    let rows = coefficient_rows(mods);
    match rank(&rows) {
        0 => ModulusLattice::Trivial,
        1 => {
            let base = mods.iter().find(|x| !x.is_zero()).unwrap();
            let s = (0..base.width()).find(|&s| !base.coeff(s).is_zero()).unwrap();
            let ratios: Vec<BigRational> = mods.iter().map(|x| x.coeff(s) / base.coeff(s)).collect();
            let mut g = rational_gcd(&ratios);
            if real_sign(base, syms) == Ordering::Less {
                g = -g;
            }
            let multiples = ratios.iter().map(|q| (q / &g).to_integer()).collect();
            ModulusLattice::Discrete { m: base.scale(&g), multiples }
        }
        _ => ModulusLattice::Dense,
    }
}

/// Order of the subgroup of ℚ/ℤ generated by rational numbers.
pub(crate) fn torsion_order(qs: &[BigRational]) -> u64 {
    qs.iter()
        .map(|q| (q - q.floor()).denom().clone())
        .fold(BigInt::one(), |acc, d| acc.lcm(&d))
        .to_u64()
        .expect("order fits in 64 bits")
}

/// Reduce the constant part of an angle modulo 1/n into [0, 1/n).
fn reduce_angle(t: &ExactReal, n: u64) -> ExactReal {
    let nq = BigRational::from_integer(n.into());
    let c = t.constant() * &nq;
    let shift = c.floor() / nq;
    t.sub(&ExactReal::rational(shift))
}

/// Rotations of the modulus-one part of the image, for a discrete modulus:
/// the generator angle θ₀ (x·u = 1) and the angles of the kernel directions.
pub(crate) fn rotation_data(angles: &[ExactReal], multiples: &[BigInt]) -> (ExactReal, Vec<ExactReal>) {
    let (u, kernel) = unimodular_completion(multiples);
    let combo = |c: &[BigInt]| {
        c.iter()
            .zip(angles)
            .fold(ExactReal::zero(), |acc, (k, t)| acc.add(&t.scale(&BigRational::from_integer(k.clone()))))
    };
    (combo(&u), kernel.iter().map(|k| combo(k)).collect())
}

/// For a dense modulus: a rational κ with angle_k − κ·modulus_k ∈ ℚ for all k.
pub(crate) fn spiral_slope(mods: &[ExactReal], angles: &[ExactReal]) -> Option<(BigRational, Vec<BigRational>)> {
    let (k, s) = mods
        .iter()
        .enumerate()
        .find_map(|(k, m)| (1..m.width()).find(|&s| !m.coeff(s).is_zero()).map(|s| (k, s)))?;
    let kappa = angles[k].coeff(s) / mods[k].coeff(s);
    let residuals = mods
        .iter()
        .zip(angles)
        .map(|(m, t)| t.sub(&m.scale(&kappa)).as_rational())
        .collect::<Option<Vec<_>>>()?;
    Some((kappa, residuals))
}

pub fn image_closure(alpha: &Character) -> Result<Subgroup> {
    let logs = alpha.require_logs()?;
    let mods: Vec<ExactReal> = logs.iter().map(|l| l.re.clone()).collect();
    let angles: Vec<ExactReal> = logs.iter().map(|l| l.turns.clone()).collect();
    let syms = alpha.symbols();
    Ok(match modulus_lattice(&mods, syms) {
        ModulusLattice::Trivial => match angles.iter().map(ExactReal::as_rational).collect::<Option<Vec<_>>>() {
            Some(q) => Subgroup::Finite { n: torsion_order(&q) },
            None => Subgroup::OneParam { direction: LogValue::turns(BigRational::one()) },
        },
        ModulusLattice::Discrete { m, multiples } => {
            let (theta, kernel) = rotation_data(&angles, &multiples);
            match kernel.iter().map(ExactReal::as_rational).collect::<Option<Vec<_>>>() {
                Some(q) => {
                    let n = torsion_order(&q);
                    let generator = LogValue::new(m, reduce_angle(&theta, n));
                    if n == 1 {
                        Subgroup::DiscreteCyclic { generator }
                    } else {
                        Subgroup::DiscreteTimesFinite { generator, n }
                    }
                }
                None => Subgroup::CircleTimesDiscrete { m },
            }
        }
        ModulusLattice::Dense => match spiral_slope(&mods, &angles) {
            Some((kappa, residuals)) => {
                let direction = LogValue::new(ExactReal::int(1), ExactReal::rational(kappa));
                match torsion_order(&residuals) {
                    1 => Subgroup::OneParam { direction },
                    n => Subgroup::OneParamTimesFinite { direction, n },
                }
            }
            None => Subgroup::Full,
        },
    })
}

/// Whether every value of β lies in the closed subgroup H.
pub fn contained_in(beta: &Character, h: &Subgroup) -> Result<bool> {
    let logs = beta.require_logs()?;
    let in_h = |l: &LogValue| -> bool {
        match h {
            Subgroup::Full => true,
            Subgroup::Finite { n } => l.re.is_zero() && l.turns.as_rational().is_some_and(|q| (q * BigRational::from_integer((*n).into())).is_integer()),
            Subgroup::OneParam { direction } | Subgroup::OneParamTimesFinite { direction, .. } => {
                let n = match h {
                    Subgroup::OneParamTimesFinite { n, .. } => *n,
                    _ => 1,
                };
                // l = s·z₀ + 2πi·j/n with s real
                let (re0, t0) = (direction.re.constant(), direction.turns.constant());
                if re0.is_zero() {
                    // z₀ ∈ iℝ: the circle
                    return l.re.is_zero();
                }
                let resid = l.turns.sub(&l.re.scale(&(t0 / re0)));
                resid.as_rational().is_some_and(|q| (q * BigRational::from_integer(n.into())).is_integer())
            }
            Subgroup::CircleTimesDiscrete { m } => multiple_of(&l.re, m).is_some(),
            Subgroup::DiscreteCyclic { generator } | Subgroup::DiscreteTimesFinite { generator, .. } => {
                let n = match h {
                    Subgroup::DiscreteTimesFinite { n, .. } => *n,
                    _ => 1,
                };
                let Some(k) = multiple_of(&l.re, &generator.re) else { return false };
                let rest = l.turns.sub(&generator.turns.scale(&BigRational::from_integer(k)));
                rest.as_rational().is_some_and(|q| (q * BigRational::from_integer(n.into())).is_integer())
            }
        }
    };
    Ok(logs.iter().all(in_h))
}

/// k ∈ ℤ with x = k·m.
fn multiple_of(x: &ExactReal, m: &ExactReal) -> Option<BigInt> {
    if x.is_zero() {
        return Some(BigInt::zero());
    }
    let s = (0..m.width()).find(|&s| !m.coeff(s).is_zero())?;
    let k = x.coeff(s) / m.coeff(s);
    (k.is_integer() && m.scale(&k) == *x).then(|| k.to_integer())
}

/// The modulus generator m and integer multiples, or an error when the
/// modulus image is trivial or dense.
pub(crate) fn discrete_modulus(alpha: &Character) -> Result<(ExactReal, Vec<BigInt>)> {
    let mods = alpha.modulus_vectors()?;
    match modulus_lattice(&mods, alpha.symbols()) {
        ModulusLattice::Discrete { m, multiples } => Ok((m, multiples)),
        ModulusLattice::Trivial | ModulusLattice::Dense => Err(Error::ModulusNotDiscrete),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::real::rat;
    use std::sync::Arc;

    fn chr(mods: &[ExactReal], angles: &[ExactReal], names: &[&str]) -> Character {
        let logs = mods.iter().zip(angles).map(|(m, t)| LogValue::new(m.clone(), t.clone())).collect();
        Character::from_logs(logs, Arc::new(Symbols::with_names(names))).unwrap()
    }

    fn zeros(n: usize) -> Vec<ExactReal> {
        vec![ExactReal::zero(); n]
    }

    #[test]
    fn finite_image() {
        let mut t = zeros(4);
        t[0] = ExactReal::ratio(1, 4);
        assert_eq!(image_closure(&chr(&zeros(4), &t, &[])).unwrap(), Subgroup::Finite { n: 4 });
    }

    #[test]
    fn discrete_cyclic_image() {
        let mut m = zeros(4);
        m[0] = ExactReal::symbol(1);
        let got = image_closure(&chr(&m, &zeros(4), &["t"])).unwrap();
        assert_eq!(got, Subgroup::DiscreteCyclic { generator: LogValue::new(ExactReal::symbol(1), ExactReal::zero()) });
    }

    #[test]
    fn dense_modulus_is_full() {
        let mut m = zeros(4);
        m[0] = ExactReal::symbol(1);
        m[1] = ExactReal::symbol(2);
        let mut t = zeros(4);
        t[2] = ExactReal::symbol(3);
        assert_eq!(image_closure(&chr(&m, &t, &["s", "t", "k"])).unwrap(), Subgroup::Full);
    }

    #[test]
    fn negative_and_multiple_moduli_normalize() {
        // moduli (−2τ, 4τ, 0, 0): m = 2τ with multiples (−1, 2, 0, 0)
        let m = vec![ExactReal::symbol(1).scale_int(-2), ExactReal::symbol(1).scale_int(4), ExactReal::zero(), ExactReal::zero()];
        let a = chr(&m, &zeros(4), &["t"]);
        let (g, x) = discrete_modulus(&a).unwrap();
        assert_eq!(g, ExactReal::symbol(1).scale_int(2));
        assert_eq!(x, vec![BigInt::from(-1), BigInt::from(2), BigInt::zero(), BigInt::zero()]);
    }

    #[test]
    fn spiral_with_torsion() {
        let m = vec![ExactReal::symbol(1), ExactReal::symbol(2), ExactReal::zero(), ExactReal::zero()];
        let t = vec![
            ExactReal::symbol_times(1, rat(1, 3)),
            ExactReal::symbol_times(2, rat(1, 3)).add(&ExactReal::ratio(1, 2)),
            ExactReal::zero(),
            ExactReal::zero(),
        ];
        let got = image_closure(&chr(&m, &t, &["s", "t"])).unwrap();
        assert_eq!(
            got,
            Subgroup::OneParamTimesFinite { direction: LogValue::new(ExactReal::int(1), ExactReal::ratio(1, 3)), n: 2 }
        );
    }

    #[test]
    fn torsion_beside_discrete_modulus() {
        let mut m = zeros(4);
        m[0] = ExactReal::symbol(1);
        let mut t = zeros(4);
        t[1] = ExactReal::ratio(1, 4);
        let got = image_closure(&chr(&m, &t, &["t"])).unwrap();
        assert!(matches!(got, Subgroup::DiscreteTimesFinite { n: 4, .. }));
        let a = chr(&m, &t, &["t"]);
        assert!(contained_in(&a, &got).unwrap());
    }
}
