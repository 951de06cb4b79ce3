//! Jørgensen-type witnesses of non-discreteness.
//!
//! For the two genus-two twist parabolics [[1,x],[0,1]] and [[1,0],[y,1]] the
//! trace of the commutator is 2 + (xy)², and xy = (2 − A − A⁻¹)(2 − B − B⁻¹).
//! A product of modulus < 1 therefore violates Jørgensen's inequality.

use std::cmp::Ordering;

use num_complex::Complex64;
use serde::Serialize;

use crate::arith::linalg::Matrix;
use crate::arith::{Num, Symbols};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    WitnessNondiscrete,
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct ScalarTest {
    pub product: Num,
    /// |product| as a float, for reports.
    pub modulus: f64,
    pub verdict: Verdict,
    /// Set when the product is not real and only its modulus was compared.
    pub heuristic: bool,
}

/// (2 − A − A⁻¹)(2 − B − B⁻¹).
pub fn twist_product(a: &Num, b: &Num) -> Result<Num> {
    let factor = |x: &Num| -> Result<Num> {
        if x.is_one() {
            return Err(Error::Invalid("Jørgensen test needs values different from 1".into()));
        }
        let inv = x.inv().ok_or_else(|| Error::Invalid("zero value".into()))?;
        Ok(Num::int(2).sub(x).sub(&inv))
    };
    Ok(factor(a)?.mul(&factor(b)?))
}

pub fn jorgensen_scalar(a: &Num, b: &Num, syms: &Symbols) -> Result<ScalarTest> {
    let product = twist_product(a, b)?;
    let norm2 = product.mul(&product.conj());
    let sign = Num::one()
        .sub(&norm2)
        .real_sign(syms)
        .ok_or_else(|| Error::Numeric("cannot compare the product with 1".into()))?;
    let verdict = if sign == Ordering::Greater { Verdict::WitnessNondiscrete } else { Verdict::Inconclusive };
    let modulus = product.to_c64(syms).norm();
    Ok(ScalarTest { heuristic: !product.is_real(), product, modulus, verdict })
}

/// Float variant for numeric inputs; always heuristic when the product is not real.
pub fn jorgensen_scalar_f64(a: Complex64, b: Complex64) -> (Complex64, Verdict) {
    let p = (2.0 - a - a.inv()) * (2.0 - b - b.inv());
    (p, if p.norm() < 1.0 { Verdict::WitnessNondiscrete } else { Verdict::Inconclusive })
}

/// Smallest product over pairs of nontrivial n-th roots of unity.
#[derive(Clone, Debug)]
pub struct TableRow {
    pub n: u32,
    pub exponents: Option<(u32, u32)>,
    pub product: Option<Num>,
    pub value: Option<f64>,
    pub verdict: Verdict,
}

pub fn jorgensen_row(n: u32) -> TableRow {
    let syms = Symbols::new();
    let mut best: Option<(u32, u32, Num, f64)> = None;
    for j in 1..n {
        for k in j..n {
            let p = twist_product(&Num::root_of_unity(n, j as i64), &Num::root_of_unity(n, k as i64)).expect("nontrivial roots");
            let v = p.to_c64(&syms).norm();
            if best.as_ref().is_none_or(|b| v < b.3) {
                best = Some((j, k, p, v));
            }
        }
    }
    match best {
        None => TableRow { n, exponents: None, product: None, value: None, verdict: Verdict::Inconclusive },
        Some((j, k, p, v)) => {
            let verdict = jorgensen_scalar(&Num::root_of_unity(n, j as i64), &Num::root_of_unity(n, k as i64), &syms)
                .map(|t| t.verdict)
                .unwrap_or(Verdict::Inconclusive);
            TableRow { n, exponents: Some((j, k)), product: Some(p), value: Some(v), verdict }
        }
    }
}

/// |tr²X/det X − 4| + |tr[X,Y] − 2| for 2×2 matrices, evaluated in floating point.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct MatrixTest {
    pub value: f64,
    pub verdict: Verdict,
}

pub fn jorgensen_matrix(x: &Matrix<Num>, y: &Matrix<Num>, syms: &Symbols) -> Result<MatrixTest> {
    if x.len() != 2 || y.len() != 2 {
        return Err(Error::Invalid("Jørgensen matrix test needs 2×2 matrices".into()));
    }
    let c = |m: &Matrix<Num>| -> [[Complex64; 2]; 2] {
        [[m[0][0].to_c64(syms), m[0][1].to_c64(syms)], [m[1][0].to_c64(syms), m[1][1].to_c64(syms)]]
    };
    let (a, b) = (c(x), c(y));
    let det = |m: &[[Complex64; 2]; 2]| m[0][0] * m[1][1] - m[0][1] * m[1][0];
    let inv = |m: &[[Complex64; 2]; 2]| {
        let d = det(m);
        [[m[1][1] / d, -m[0][1] / d], [-m[1][0] / d, m[0][0] / d]]
    };
    let mul = |p: &[[Complex64; 2]; 2], q: &[[Complex64; 2]; 2]| {
        let mut r = [[Complex64::new(0.0, 0.0); 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                r[i][j] = p[i][0] * q[0][j] + p[i][1] * q[1][j];
            }
        }
        r
    };
    let tr = |m: &[[Complex64; 2]; 2]| m[0][0] + m[1][1];
    if det(&a).norm() == 0.0 || det(&b).norm() == 0.0 {
        return Err(Error::Invalid("singular matrix".into()));
    }
    let comm = mul(&mul(&a, &b), &mul(&inv(&a), &inv(&b)));
    let value = (tr(&a) * tr(&a) / det(&a) - 4.0).norm() + (tr(&comm) - 2.0).norm();
    Ok(MatrixTest { value, verdict: if value < 1.0 { Verdict::WitnessNondiscrete } else { Verdict::Inconclusive } })
}
