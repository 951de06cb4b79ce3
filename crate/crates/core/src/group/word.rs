//! Words in the generators a₁, b₁, …, a_g, b_g of the surface group.
//!
//! A letter is a nonzero integer: generator index k (0-based, a_i = 2i−2,
//! b_i = 2i−1 for 1-based i) is written k+1 and its inverse −(k+1).

use std::fmt;

use serde::{Deserialize, Serialize};

pub type Letter = i32;

pub fn gen_letter(k: usize) -> Letter {
    (k + 1) as Letter
}

pub fn letter_gen(l: Letter) -> usize {
    (l.unsigned_abs() - 1) as usize
}

/// Letter of a_i (1-based handle index).
pub fn a(i: usize) -> Letter {
    (2 * i - 1) as Letter
}

/// Letter of b_i (1-based handle index).
pub fn b(i: usize) -> Letter {
    (2 * i) as Letter
}

/// A freely reduced word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<Letter>", into = "Vec<Letter>")]
pub struct Word(Vec<Letter>);

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word::new(v)
    }
}

impl From<Word> for Vec<Letter> {
    fn from(w: Word) -> Self {
        w.0
    }
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(free_reduce(&letters))
    }

    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn generator(k: usize) -> Self {
        Word(vec![gen_letter(k)])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Word(self.0.iter().rev().map(|l| -l).collect())
    }

    pub fn concat(&self, o: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Word::new(v)
    }

    pub fn commutator(x: &Self, y: &Self) -> Self {
        x.concat(y).concat(&x.inverse()).concat(&y.inverse())
    }

    pub fn conjugate_by(&self, w: &Self) -> Self {
        w.concat(self).concat(&w.inverse())
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..e.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// Cyclically reduced core.
    pub fn cyclic_core(&self) -> Self {
        let v = &self.0;
        let mut s = 0;
        let mut e = v.len();
        while e - s >= 2 && v[s] == -v[e - 1] {
            s += 1;
            e -= 1;
        }
        Word(v[s..e].to_vec())
    }

    /// Conjugacy in the free group.
    pub fn is_free_conjugate(&self, o: &Self) -> bool {
        let u = self.cyclic_core();
        let v = o.cyclic_core();
        if u.len() != v.len() {
            return false;
        }
        if u.is_empty() {
            return true;
        }
        let n = u.len();
        (0..n).any(|r| (0..n).all(|j| u.0[(r + j) % n] == v.0[j]))
    }

    /// Exponent sum of each generator (abelianization), length 2g.
    pub fn abelianize(&self, ngens: usize) -> Vec<i64> {
        let mut v = vec![0i64; ngens];
        for &l in &self.0 {
            v[letter_gen(l)] += l.signum() as i64;
        }
        v
    }

    /// Replace every generator k by images[k].
    pub fn substitute(&self, images: &[Word]) -> Self {
        let mut out = Vec::new();
        for &l in &self.0 {
            let w = &images[letter_gen(l)];
            if l > 0 {
                out.extend_from_slice(&w.0);
            } else {
                out.extend(w.0.iter().rev().map(|x| -x));
            }
        }
        Word::new(out)
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|&l| letter_gen(l)).max()
    }
}

pub fn free_reduce(letters: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &x in letters {
        assert!(x != 0, "letter 0 is not a generator");
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (n, &l) in self.0.iter().enumerate() {
            if n > 0 {
                write!(f, " ")?;
            }
            let k = letter_gen(l);
            let name = if k.is_multiple_of(2) { 'a' } else { 'b' };
            write!(f, "{}{}", name, k / 2 + 1)?;
            if l < 0 {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

/// Genus-g one-relator presentation ⟨a₁,b₁,…,a_g,b_g | ∏[a_i,b_i]⟩.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    genus: usize,
    relator: Word,
}

impl Presentation {
    /// Genus 1 is accepted for tori built during surgeries.
    pub fn new(genus: usize) -> Self {
        assert!(genus >= 1, "genus must be positive");
        Presentation { genus, relator: relator(genus) }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn ngens(&self) -> usize {
        2 * self.genus
    }

    pub fn relator(&self) -> &Word {
        &self.relator
    }
}

pub fn relator(genus: usize) -> Word {
    let mut w = Word::identity();
    for i in 1..=genus {
        w = w.concat(&Word::commutator(&Word::letter(a(i)), &Word::letter(b(i))));
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_examples() {
        assert!(Word::new(vec![1, -1]).is_empty());
        assert_eq!(Word::new(vec![1, 2, -2, 1]).letters(), &[1, 1]);
        let r = relator(2);
        assert_eq!(r.len(), 8);
        assert_eq!(Word::new(r.letters().to_vec()), r);
    }

    #[test]
    fn relator_letters() {
        assert_eq!(relator(2).letters(), &[1, 2, -1, -2, 3, 4, -3, -4]);
    }

    #[test]
    fn conjugacy_in_free_group() {
        let r = relator(2);
        let w = Word::new(vec![3, -2]);
        assert!(r.conjugate_by(&w).is_free_conjugate(&r));
        assert!(!r.inverse().is_free_conjugate(&r));
    }

    #[test]
    fn display_names() {
        assert_eq!(Word::new(vec![1, -4]).to_string(), "a1 b2^-1");
    }
}
