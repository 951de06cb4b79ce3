//! Word problem in the surface group.
//!
//! For genus ≥ 2 the relator satisfies C′(1/6), so Dehn's algorithm decides
//! triviality: repeatedly replace any subword longer than half a cyclic
//! conjugate of R^{±1} by the inverse of the complementary part. Genus 1 is
//! ℤ², decided by abelianization.

use super::word::{relator, Letter, Word};

pub struct DehnSolver {
    genus: usize,
    cyclic: Vec<Vec<Letter>>,
}

impl DehnSolver {
    pub fn new(genus: usize) -> Self {
        let r = relator(genus);
        let mut cyclic = Vec::new();
        for base in [r.letters().to_vec(), r.inverse().letters().to_vec()] {
            let n = base.len();
            for s in 0..n {
                cyclic.push((0..n).map(|j| base[(s + j) % n]).collect());
            }
        }
        DehnSolver { genus, cyclic }
    }

    /// Dehn-reduced form: no subword exceeds half of a relator.
    pub fn reduce(&self, w: &Word) -> Word {
        let mut cur: Vec<Letter> = w.letters().to_vec();
        let half = 2 * self.genus;
        'outer: loop {
            for pos in 0..cur.len() {
                for perm in &self.cyclic {
                    let l = cur[pos..].iter().zip(perm).take_while(|(x, y)| x == y).count();
                    if l > half {
                        let replacement: Vec<Letter> = perm[l..].iter().rev().map(|x| -x).collect();
                        let mut next = cur[..pos].to_vec();
                        next.extend(replacement);
                        next.extend_from_slice(&cur[pos + l..]);
                        cur = Word::new(next).letters().to_vec();
                        continue 'outer;
                    }
                }
            }
            break;
        }
        Word::new(cur)
    }

    pub fn is_trivial(&self, w: &Word) -> bool {
        if self.genus == 1 {
            return w.abelianize(2).iter().all(|&x| x == 0);
        }
        self.reduce(w).is_empty()
    }

    pub fn equal(&self, u: &Word, v: &Word) -> bool {
        self.is_trivial(&u.concat(&v.inverse()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relator_conjugates_are_trivial() {
        let d = DehnSolver::new(2);
        let r = relator(2);
        assert!(d.is_trivial(&r));
        let w = Word::new(vec![3, 1, -4]);
        assert!(d.is_trivial(&r.conjugate_by(&w)));
        assert!(d.is_trivial(&r.concat(&r)));
    }

    #[test]
    fn generators_are_nontrivial() {
        let d = DehnSolver::new(2);
        for k in 0..4 {
            assert!(!d.is_trivial(&Word::generator(k)));
        }
        // [a1,b1] is separating but not trivial
        assert!(!d.is_trivial(&relator(1)));
    }

    #[test]
    fn equal_via_relator() {
        let d = DehnSolver::new(2);
        // [a1,b1] = ([a2,b2])^-1 in the group
        let lhs = relator(1);
        let rhs = Word::new(vec![4, 3, -4, -3]);
        assert!(d.equal(&lhs, &rhs));
    }

    #[test]
    fn torus_abelian() {
        let d = DehnSolver::new(1);
        assert!(d.is_trivial(&Word::new(vec![1, 2, -1, -2])));
        assert!(!d.is_trivial(&Word::new(vec![1])));
    }
}
