//! `rep.json`: exact characters and cocycles.
//!
//! ```json
//! {"genus": 2,
//!  "symbols": ["t"],
//!  "character": [{"mod": ["0", "1"], "angle": ["1/4"]}, …],
//!  "cocycle": [[1, 1, 0, 1], …]}
//! ```
//!
//! `mod` and `angle` are rational coefficient vectors over (1, symbol₁, …).
//! Cocycle entries are Gaussian rationals `[re_num, re_den, im_num, im_den]`
//! or `{"cyclo": {"order": n, "coeffs": [rationals]}}` in the power basis of ζ_n,
//! or `{"terms": [{"coeff": value, "vars": [["pi", 1], ["t", 2]], "exps": [["mod", "t", "1/2"]]}]}`
//! for polynomials in π and the symbols (`exps` entries are e^{q·s} for "mod"
//! and e^{2πi·q·s} for "angle"; the symbol "1" stands for the constant).
//! Symbols are assumed algebraically independent over ℚ.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::arith::cyclo::Cyclo;
use crate::arith::poly::{Poly, VAR_PI};
use crate::arith::real::{ExactReal, LogValue};
use crate::arith::{Num, Symbols};
use crate::error::{Error, Result};

use super::character::Character;
use super::cocycle::{AffineRep, Cocycle};

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(untagged)]
pub enum RationalJson {
    Int(i64),
    Text(String),
    Pair([i64; 2]),
}

impl RationalJson {
    pub fn parse(&self) -> Result<BigRational> {
        match self {
            RationalJson::Int(v) => Ok(BigRational::from_integer((*v).into())),
            RationalJson::Pair([n, d]) => {
                if *d == 0 {
                    return Err(Error::Invalid("zero denominator".into()));
                }
                Ok(BigRational::new((*n).into(), (*d).into()))
            }
            RationalJson::Text(s) => parse_rational(s),
        }
    }

    pub fn from_rational(q: &BigRational) -> Self {
        RationalJson::Text(if q.is_integer() { q.numer().to_string() } else { format!("{}/{}", q.numer(), q.denom()) })
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Invalid(format!("not a rational: {:?}", s));
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

#[derive(Clone, Debug, Deserialize, Serialize, Default)]
pub struct CharEntryJson {
    #[serde(rename = "mod", default)]
    pub modulus: Vec<RationalJson>,
    #[serde(default)]
    pub angle: Vec<RationalJson>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct CycloJson {
    pub order: u32,
    pub coeffs: Vec<RationalJson>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct TermJson {
    pub coeff: ValueJson,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub vars: Vec<(String, u32)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub exps: Vec<(String, String, RationalJson)>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(untagged)]
pub enum ValueJson {
    Gaussian([RationalJson; 4]),
    Cyclo { cyclo: CycloJson },
    Terms { terms: Vec<TermJson> },
}

fn symbol_index(name: &str, syms: &Symbols) -> Result<usize> {
    if name == "1" {
        return Ok(0);
    }
    syms.index_of(name).ok_or_else(|| Error::Invalid(format!("undeclared symbol {:?}", name)))
}

fn symbol_name(s: usize, syms: &Symbols) -> String {
    if s == 0 {
        "1".to_string()
    } else {
        syms.name(s).to_string()
    }
}

impl ValueJson {
    pub fn parse(&self) -> Result<Num> {
        self.parse_with(&Symbols::new())
    }

    pub fn parse_with(&self, syms: &Symbols) -> Result<Num> {
        match self {
            ValueJson::Terms { terms } => {
                let mut acc = Poly::zero();
                for t in terms {
                    let c = t.coeff.parse_with(syms)?;
                    let c = c.as_cyclo().ok_or_else(|| Error::Invalid("term coefficients must be constants".into()))?.clone();
                    let mut term = Poly::constant(c);
                    for (name, p) in &t.vars {
                        let v = if name == "pi" { Poly::pi() } else { Poly::symbol(symbol_index(name, syms)?) };
                        for _ in 0..*p {
                            term = term.mul(&v);
                        }
                    }
                    for (kind, name, q) in &t.exps {
                        let x = ExactReal::symbol_times(symbol_index(name, syms)?, q.parse()?);
                        let l = match kind.as_str() {
                            "mod" => LogValue::new(x, ExactReal::zero()),
                            "angle" => LogValue::new(ExactReal::zero(), x),
                            _ => return Err(Error::Invalid(format!("unknown exponential kind {:?}", kind))),
                        };
                        term = term.mul(&Poly::exp_of(&l));
                    }
                    acc = acc.add(&term);
                }
                Ok(Num::from_poly(acc))
            }
            ValueJson::Gaussian([rn, rd, im_n, im_d]) => {
                let re = rn.parse()? / nonzero(rd.parse()?)?;
                let im = im_n.parse()? / nonzero(im_d.parse()?)?;
                Ok(Num::gaussian(&re, &im))
            }
            ValueJson::Cyclo { cyclo } => {
                if cyclo.order == 0 {
                    return Err(Error::Invalid("cyclotomic order must be positive".into()));
                }
                let mut acc = Cyclo::zero();
                for (k, c) in cyclo.coeffs.iter().enumerate() {
                    acc = acc.add(&Cyclo::root_of_unity(cyclo.order, k as i64).scale(&c.parse()?));
                }
                Ok(Num::Const(acc))
            }
        }
    }

    /// Exact encoding, using the symbol names for polynomial values.
    pub fn from_num_with(x: &Num, syms: &Symbols) -> Result<Self> {
        let p = match x {
            Num::Const(_) => return Self::from_num(x),
            Num::Poly(p) => p,
            Num::Frac(..) => return Err(Error::InexpressibleExactly(x.display(syms))),
        };
        let terms = p
            .terms()
            .map(|(m, c)| {
                let vars = m
                    .vars()
                    .iter()
                    .map(|&(v, k)| (if v == VAR_PI { "pi".to_string() } else { symbol_name(v as usize, syms) }, k))
                    .collect();
                let exps = m
                    .exps()
                    .iter()
                    .map(|(key, q)| {
                        let (kind, s) = if key % 2 == 0 { ("mod", key / 2) } else { ("angle", (key - 1) / 2) };
                        (kind.to_string(), symbol_name(s as usize, syms), RationalJson::from_rational(q))
                    })
                    .collect();
                Ok(TermJson { coeff: Self::from_num(&Num::Const(c.clone()))?, vars, exps })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ValueJson::Terms { terms })
    }

    pub fn from_num(x: &Num) -> Result<Self> {
        let c = x.as_cyclo().ok_or_else(|| Error::InexpressibleExactly(x.to_string()))?;
        let m = crate::arith::cyclo::lcm(c.order(), 4);
        let s = c.lift(m).shrink();
        if 4 % s.order() == 0 {
            let g = s.lift(4);
            let d = BigRational::from_integer(g.den().clone());
            let re = BigRational::from_integer(g.coeffs()[0].clone()) / &d;
            let im = BigRational::from_integer(g.coeffs()[1].clone()) / &d;
            let part = |q: &BigRational| [RationalJson::Text(q.numer().to_string()), RationalJson::Text(q.denom().to_string())];
            let [a, b] = part(&re);
            let [e, f] = part(&im);
            return Ok(ValueJson::Gaussian([a, b, e, f]));
        }
        let d = BigRational::from_integer(s.den().clone());
        Ok(ValueJson::Cyclo {
            cyclo: CycloJson {
                order: s.order(),
                coeffs: s.coeffs().iter().map(|c| RationalJson::from_rational(&(BigRational::from_integer(c.clone()) / &d))).collect(),
            },
        })
    }
}

fn nonzero(q: BigRational) -> Result<BigRational> {
    if q.is_zero() {
        Err(Error::Invalid("zero denominator".into()))
    } else {
        Ok(q)
    }
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct RepJson {
    pub genus: usize,
    pub character: Vec<CharEntryJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cocycle: Option<Vec<ValueJson>>,
    #[serde(default)]
    pub symbols: Vec<String>,
    /// Optional float shadows for the symbols (used only for sign decisions).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symbol_values: Option<Vec<f64>>,
}

/// Parsed input: a character and, when present, a validated representation.
#[derive(Clone, Debug)]
pub struct ParsedRep {
    pub character: Character,
    pub rep: Option<AffineRep>,
}

fn real_from(v: &[RationalJson]) -> Result<ExactReal> {
    Ok(ExactReal::new(v.iter().map(RationalJson::parse).collect::<Result<Vec<_>>>()?))
}

impl RepJson {
    pub fn from_text(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Invalid(format!("rep.json: {}", e)))
    }

    pub fn symbols(&self) -> Result<Symbols> {
        symbols_from(&self.symbols, self.symbol_values.as_deref())
    }

    pub fn parse(&self) -> Result<ParsedRep> {
        if self.genus < 1 {
            return Err(Error::Invalid("genus must be positive".into()));
        }
        if self.character.len() != 2 * self.genus {
            return Err(Error::GenusMismatch { expected: 2 * self.genus, found: self.character.len() });
        }
        let syms = Arc::new(self.symbols()?);
        let logs = self
            .character
            .iter()
            .map(|e| Ok(LogValue::new(real_from(&e.modulus)?, real_from(&e.angle)?)))
            .collect::<Result<Vec<_>>>()?;
        let character = Character::from_logs(logs, syms.clone())?;
        let rep = match &self.cocycle {
            None => None,
            Some(vals) => {
                let lam = Cocycle(vals.iter().map(|v| v.parse_with(&syms)).collect::<Result<Vec<_>>>()?);
                Some(AffineRep::new(character.clone(), lam)?)
            }
        };
        Ok(ParsedRep { character, rep })
    }

    pub fn from_character(alpha: &Character, cocycle: Option<&Cocycle>) -> Result<Self> {
        let logs = alpha.require_logs()?;
        let syms = alpha.symbols();
        let vec_of = |x: &ExactReal| x.coeffs().iter().map(RationalJson::from_rational).collect::<Vec<_>>();
        Ok(RepJson {
            genus: alpha.genus(),
            character: logs.iter().map(|l| CharEntryJson { modulus: vec_of(&l.re), angle: vec_of(&l.turns) }).collect(),
            cocycle: cocycle.map(|c| c.values().iter().map(|x| ValueJson::from_num_with(x, syms)).collect::<Result<Vec<_>>>()).transpose()?,
            symbols: syms.names().to_vec(),
            symbol_values: None,
        })
    }
}

/// Symbol table from declared names and optional float shadows.
pub fn symbols_from(names: &[String], values: Option<&[f64]>) -> Result<Symbols> {
    let mut syms = Symbols::new();
    for (i, n) in names.iter().enumerate() {
        if syms.index_of(n).is_some() {
            return Err(Error::Invalid(format!("duplicate symbol {:?}", n)));
        }
        match values.and_then(|v| v.get(i)) {
            Some(&x) => syms.add_with_value(n, x),
            None => syms.add(n),
        };
    }
    Ok(syms)
}

pub fn parse_rep(text: &str) -> Result<ParsedRep> {
    RepJson::from_text(text)?.parse()
}

pub fn rep_to_json(rep: &AffineRep) -> Result<Value> {
    let r = RepJson::from_character(rep.character(), Some(rep.cocycle()))?;
    Ok(serde_json::to_value(r).expect("serializable"))
}

/// Exact number rendered for reports: Gaussian/cyclotomic form when possible, else text.
pub fn num_to_json(x: &Num, syms: &Symbols) -> Value {
    match ValueJson::from_num_with(x, syms) {
        Ok(v) => serde_json::to_value(v).expect("serializable"),
        Err(_) => json!({ "expr": x.display(syms) }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_simple_rep() {
        let text = r#"{"genus": 2, "character": [{"angle": ["1/4"]}, {}, {}, {}],
            "cocycle": [[1,1,0,1],[0,1,0,1],[0,1,0,1],[0,1,0,1]]}"#;
        let p = parse_rep(text).unwrap();
        assert_eq!(p.character.value(0), &Num::i());
        assert!(p.rep.is_some());
    }

    #[test]
    fn invalid_cocycle_reported() {
        let text = r#"{"genus": 2, "character": [{"angle": ["1/4"]}, {}, {}, {}],
            "cocycle": [[0,1,0,1],[0,1,0,1],[1,1,0,1],[0,1,0,1]]}"#;
        // λ(a₂) alone is a cocycle only if α(b₂) = 1, which holds here
        assert!(parse_rep(text).is_ok());
        // λ(b₁) contributes (α(a₁) − 1)·λ(b₁) to λ(R)
        let bad = r#"{"genus": 2, "character": [{"angle": ["1/4"]}, {}, {}, {}],
            "cocycle": [[0,1,0,1],[1,1,0,1],[0,1,0,1],[0,1,0,1]]}"#;
        assert!(matches!(parse_rep(bad), Err(Error::InvalidCocycle(_))));
    }

    #[test]
    fn roundtrip_cyclotomic_value() {
        let z = Num::root_of_unity(3, 1);
        let v = ValueJson::from_num(&z).unwrap();
        assert_eq!(v.parse().unwrap(), z);
        let g = Num::gaussian(&BigRational::new(1.into(), 2.into()), &BigRational::from_integer((-3).into()));
        assert_eq!(ValueJson::from_num(&g).unwrap().parse().unwrap(), g);
    }

    #[test]
    fn roundtrip_polynomial_value() {
        let syms = Symbols::with_names(&["t"]);
        let l = LogValue::new(ExactReal::symbol(1), ExactReal::ratio(1, 3));
        for x in [Num::log_value(&l), Num::exp(&l).add(&Num::int(2)), Num::real(&ExactReal::symbol(1)).mul(&Num::real(&ExactReal::symbol(1)))] {
            let v = ValueJson::from_num_with(&x, &syms).unwrap();
            let text = serde_json::to_string(&v).unwrap();
            let back: ValueJson = serde_json::from_str(&text).unwrap();
            assert_eq!(back.parse_with(&syms).unwrap(), x, "{}", text);
        }
    }

    #[test]
    fn symbols_and_moduli() {
        let text = r#"{"genus": 2, "symbols": ["t"], "character": [{"mod": [0, 1]}, {}, {}, {}]}"#;
        let p = parse_rep(text).unwrap();
        assert_eq!(p.character.logs().unwrap()[0].re, ExactReal::symbol(1));
        let undeclared = r#"{"genus": 2, "character": [{"mod": [0, 1]}, {}, {}, {}]}"#;
        assert!(parse_rep(undeclared).is_err());
    }
}
