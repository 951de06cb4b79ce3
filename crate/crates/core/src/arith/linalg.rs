//! Exact linear algebra over fields (rationals, `Num`) and over ℤ.

#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::num::Num;

pub trait Field: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Field for Num {
    fn zero() -> Self {
        Num::zero()
    }
    fn one() -> Self {
        Num::one()
    }
    fn is_zero(&self) -> bool {
        Num::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        Num::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Num::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Num::mul(self, o)
    }
    fn div(&self, o: &Self) -> Self {
        Num::div(self, o).expect("division by zero")
    }
    fn neg(&self) -> Self {
        Num::neg(self)
    }
}

pub type Matrix<F> = Vec<Vec<F>>;

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref<F: Field>(m: &mut Matrix<F>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row >= m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(row, p);
        let inv = F::one().div(&m[row][col]);
        for x in m[row].iter_mut() {
            *x = x.mul(&inv);
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..m[r].len() {
                    let t = m[row][c].mul(&f);
                    m[r][c] = m[r][c].sub(&t);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    let ncols = m.first().map_or(0, Vec::len);
    let mut a = m.clone();
    rref(&mut a, ncols).len()
}

/// Solve an augmented system (last column is the right-hand side), with free
/// variables set to zero. None if inconsistent.
pub fn solve_augmented<F: Field>(rows: &mut Matrix<F>, nvars: usize) -> Option<Vec<F>> {
    let pivots = rref(rows, nvars);
    for r in pivots.len()..rows.len() {
        if !rows[r][nvars].is_zero() {
            return None;
        }
    }
    let mut x = vec![F::zero(); nvars];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = rows[r][nvars].clone();
    }
    Some(x)
}

pub fn solve_rational(rows: &mut Matrix<BigRational>, nvars: usize) -> Option<Vec<BigRational>> {
    solve_augmented(rows, nvars)
}

/// Solve Σ_j x_j·cols[j] = target.
pub fn solve_columns<F: Field>(cols: &[Vec<F>], target: &[F]) -> Option<Vec<F>> {
    let n = cols.len();
    let mut rows: Matrix<F> = (0..target.len())
        .map(|r| {
            let mut row: Vec<F> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    solve_augmented(&mut rows, n)
}

/// Basis of the right null space {x : m·x = 0}.
pub fn nullspace<F: Field>(m: &Matrix<F>, ncols: usize) -> Vec<Vec<F>> {
    let mut a = m.clone();
    let pivots = rref(&mut a, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); ncols];
            v[f] = F::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = a[r][f].neg();
            }
            v
        })
        .collect()
}

pub fn mat_mul<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(F::zero(), |acc, k| acc.add(&row[k].mul(&b[k][j]))))
                .collect()
        })
        .collect()
}

pub fn identity<F: Field>(n: usize) -> Matrix<F> {
    (0..n).map(|i| (0..n).map(|j| if i == j { F::one() } else { F::zero() }).collect()).collect()
}

pub fn determinant<F: Field>(m: &Matrix<F>) -> F {
    let n = m.len();
    let mut a = m.clone();
    let mut det = F::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else { return F::zero() };
        if p != col {
            a.swap(p, col);
            det = det.neg();
        }
        det = det.mul(&a[col][col]);
        let inv = F::one().div(&a[col][col]);
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].mul(&inv);
            for c in col..n {
                let t = a[col][c].mul(&f);
                a[r][c] = a[r][c].sub(&t);
            }
        }
    }
    det
}

/// Hermite normal form (row style) of an integer matrix; zero rows dropped.
pub fn hermite_rows(m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let ncols = a.first().map_or(0, Vec::len);
    let mut row = 0;
    for col in 0..ncols {
        // Euclid on the column below `row`
        loop {
            let nz: Vec<usize> = (row..a.len()).filter(|&r| !a[r][col].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let p = *nz.iter().min_by_key(|&&r| a[r][col].abs()).unwrap();
            a.swap(row, p);
            let mut done = true;
            for r in row + 1..a.len() {
                if a[r][col].is_zero() {
                    continue;
                }
                let q = a[r][col].div_floor(&a[row][col]);
                for c in 0..ncols {
                    let t = &a[row][c] * &q;
                    a[r][c] -= t;
                }
                if !a[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if row < a.len() && !a[row][col].is_zero() {
            if a[row][col].is_negative() {
                for x in a[row].iter_mut() {
                    *x = -std::mem::take(x);
                }
            }
            for r in 0..row {
                let q = a[r][col].div_floor(&a[row][col]);
                if !q.is_zero() {
                    for c in 0..ncols {
                        let t = &a[row][c] * &q;
                        a[r][c] -= t;
                    }
                }
            }
            row += 1;
        }
    }
    a.truncate(row);
    a
}

/// Clear denominators of a rational vector; returns (integer vector, common denominator).
pub fn integerize(v: &[BigRational]) -> (Vec<BigInt>, BigInt) {
    let den = v.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    (v.iter().map(|q| q.numer() * (&den / q.denom())).collect(), den)
}

/// Greatest common divisor of a list of rationals (the positive generator of the ℤ-module they span).
pub fn rational_gcd(v: &[BigRational]) -> BigRational {
    let (ints, den) = integerize(v);
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    BigRational::new(g, den)
}

/// Integer solution helper: for a primitive integer vector c returns (u, K) with
/// c·u = 1 and K a basis of the integer kernel {k : c·k = 0}.
pub fn unimodular_completion(c: &[BigInt]) -> (Vec<BigInt>, Vec<Vec<BigInt>>) {
    let n = c.len();
    // Column operations on the row vector c tracked in a unimodular matrix U (columns).
    let mut row = c.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect(); // u[col] is column `col` of U
    loop {
        let nz: Vec<usize> = (0..n).filter(|&j| !row[j].is_zero()).collect();
        if nz.len() <= 1 {
            break;
        }
        let p = *nz.iter().min_by_key(|&&j| row[j].abs()).unwrap();
        for &j in &nz {
            if j == p {
                continue;
            }
            let q = row[j].div_floor(&row[p]);
            let rp = row[p].clone();
            row[j] -= &q * rp;
            let colp = u[p].clone();
            for (x, y) in u[j].iter_mut().zip(colp) {
                *x -= &q * y;
            }
        }
    }
    let p = (0..n).find(|&j| !row[j].is_zero()).expect("nonzero vector");
    assert!(row[p].abs().is_one(), "vector is not primitive");
    let mut first = u[p].clone();
    if row[p].is_negative() {
        first = first.into_iter().map(|x| -x).collect();
    }
    let kernel = (0..n).filter(|&j| j != p).map(|j| u[j].clone()).collect();
    (first, kernel)
}
