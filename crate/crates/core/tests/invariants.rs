//! Mapping-class invariance of the quantities the library computes.

use affchar::arith::Symbols;
use affchar::character::cohomology::cocycle_space_basis;
use affchar::character::volume::{self_volume, vol_sign};
use affchar::character::{AffineRep, Character, Cocycle, PeriodVector};
use affchar::arith::Num;
use affchar::group::catalog::twist_catalog;
use affchar::group::mapping::{is_symplectic, MappingClass};
use affchar::orbit::classify;
use affchar::surface::haupt_check;
use proptest::prelude::*;

/// A word in the catalog twists and their inverses.
fn moves(genus: usize, picks: &[(usize, bool)]) -> MappingClass {
    let cat = twist_catalog(genus);
    picks.iter().fold(MappingClass::identity(genus), |acc, &(k, inv)| {
        let t = &cat[k % cat.len()];
        acc.then(&if inv { t.inverse() } else { t.clone() })
    })
}

fn picks() -> impl Strategy<Value = Vec<(usize, bool)>> {
    prop::collection::vec((0usize..64, any::<bool>()), 1..8)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn haupt_verdict_is_symplectic_invariant(
        genus in 2usize..4,
        entries in prop::collection::vec((-2i64..3, -2i64..3), 6),
        word in picks(),
    ) {
        let p = PeriodVector::gaussian(&entries[..2 * genus]);
        let phi = moves(genus, &word);
        let h = phi.homology_matrix();
        prop_assert!(is_symplectic(&h));
        let syms = Symbols::new();
        let before = haupt_check(&p, &syms).unwrap();
        let after = haupt_check(&p.precompose_homology(&h), &syms).unwrap();
        prop_assert_eq!(before.accepted(), after.accepted());
        prop_assert_eq!(&before.volume, &after.volume);
        prop_assert_eq!(before.lattice.map(|l| l.covolume), after.lattice.map(|l| l.covolume));
    }

    #[test]
    fn precomposition_is_an_action(exps in prop::collection::vec(0i64..6, 4), w1 in picks(), w2 in picks()) {
        let alpha = Character::roots_of_unity(6, &exps);
        let (phi, psi) = (moves(2, &w1), moves(2, &w2));
        let stepwise = alpha.precompose(&phi).unwrap().precompose(&psi).unwrap();
        let composed = alpha.precompose(&phi.then(&psi)).unwrap();
        prop_assert_eq!(stepwise.values(), composed.values());
    }

    #[test]
    fn volume_is_mapping_class_invariant(
        exps in prop::collection::vec(0i64..4, 4),
        coeffs in prop::collection::vec((-2i64..3, -2i64..3), 4),
        word in picks(),
    ) {
        let alpha = Character::roots_of_unity(4, &exps);
        prop_assume!(!alpha.is_trivial());
        let lambda = cocycle_space_basis(&alpha)
            .iter()
            .zip(&coeffs)
            .fold(Cocycle::zero(4), |acc, (b, &(re, im))| acc.add(&b.scale(&Num::int(re).add(&Num::i().mul(&Num::int(im))))));
        let rho = AffineRep::new(alpha, lambda).unwrap();
        let moved = rho.apply(&moves(2, &word)).unwrap();
        prop_assert_eq!(self_volume(&rho), self_volume(&moved));
        prop_assert_eq!(vol_sign(&rho).unwrap(), vol_sign(&moved).unwrap());
    }

    #[test]
    fn orbit_tag_is_mapping_class_invariant(n in 2u32..9, exps in prop::collection::vec(0i64..8, 4), word in picks()) {
        let alpha = Character::roots_of_unity(n, &exps);
        prop_assume!(!alpha.is_trivial());
        let moved = alpha.precompose(&moves(2, &word)).unwrap();
        let (c0, c1) = (classify(&alpha).unwrap(), classify(&moved).unwrap());
        prop_assert_eq!(c0.closure, c1.closure);
        prop_assert_eq!(c0.image, c1.image);
    }
}
