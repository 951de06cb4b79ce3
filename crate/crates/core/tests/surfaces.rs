use std::sync::Arc;

use affchar::arith::{Num, Symbols};
use affchar::character::cohomology::coboundary;
use affchar::character::period::untwisted_volume;
use affchar::character::{AffineRep, Character, Cocycle};
use affchar::arith::real::{ExactReal, LogValue};
use affchar::surface::holonomy::conjugacy;
use affchar::surface::polygon::{parallelogram_torus, translation_octagon, PolygonSurface};
use affchar::surface::{cone_data, connected_sum, holonomy, parse_surface, realize, surface_to_json, Slit};
use num_rational::BigRational;
use proptest::prelude::*;

fn z(re: i64, im: i64) -> Num {
    Num::int(re).add(&Num::i().mul(&Num::int(im)))
}

fn q(n: i64, d: i64) -> Num {
    Num::rational(&BigRational::new(n.into(), d.into()))
}

/// Slit along the middle quarter of the diagonal of a parallelogram torus.
fn diagonal_slit(u: &Num, v: &Num) -> Slit {
    let d = u.add(v);
    Slit { polygon: 0, start: d.mul(&q(3, 8)), end: d.mul(&q(5, 8)) }
}

fn swap_handles(rep: &AffineRep) -> AffineRep {
    let swap = |v: &[Num]| vec![v[2].clone(), v[3].clone(), v[0].clone(), v[1].clone()];
    let alpha = Character::from_values(swap(rep.character().values()), rep.character().symbols().clone()).unwrap();
    AffineRep::new(alpha, Cocycle(swap(rep.cocycle().values()))).unwrap()
}

fn roundtrip(s: &PolygonSurface) -> PolygonSurface {
    parse_surface(&surface_to_json(s).unwrap().to_string()).unwrap()
}

#[test]
fn realized_surfaces_survive_json() {
    let alpha = Character::roots_of_unity(4, &[1, 0, 0, 0]);
    let rho = AffineRep::new(alpha, Cocycle(vec![Num::one(), Num::zero(), Num::one(), Num::i()])).unwrap();
    let syms = Arc::new(Symbols::with_names(&["t"]));
    let tau = LogValue::new(ExactReal::symbol(1), ExactReal::zero());
    let quarter = LogValue::turns(BigRational::new(1.into(), 4.into()));
    let beta = Character::from_logs(vec![tau.clone(), quarter.clone(), tau, quarter], syms).unwrap();
    let abelian = AffineRep::new(beta.clone(), coboundary(&beta)).unwrap();
    for input in [rho, abelian] {
        let r = realize(&input).unwrap();
        let back = roundtrip(&r.surface);
        assert_eq!(back.exp, r.surface.exp);
        let h = holonomy(&back).unwrap();
        assert_eq!(h.rep, r.holonomy.rep);
        assert!(conjugacy(&h.rep, &input).is_ok());
        let (c1, c2) = (cone_data(&back).unwrap(), cone_data(&r.surface).unwrap());
        assert_eq!(c1.singular().len(), c2.singular().len());
    }
}

/// Four edge vectors with strictly increasing argument in the upper half plane.
fn half_octagon() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-6i64..=6, 1i64..=6), 4).prop_filter_map("distinct directions", |mut v| {
        v.sort_by(|a, b| (a.1 as f64).atan2(a.0 as f64).total_cmp(&(b.1 as f64).atan2(b.0 as f64)));
        let ok = v.windows(2).all(|w| w[0].0 * w[1].1 - w[0].1 * w[1].0 > 0);
        ok.then_some(v)
    })
}

fn octagon(edges: &[(i64, i64)]) -> Vec<Num> {
    let mut pts = vec![Num::zero()];
    let steps: Vec<Num> = edges.iter().map(|&(x, y)| z(x, y)).chain(edges.iter().map(|&(x, y)| z(-x, -y))).collect();
    for e in &steps[..7] {
        let last = pts.last().unwrap().clone();
        pts.push(last.add(e));
    }
    pts
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn octagon_area_equals_volume(edges in half_octagon()) {
        let s = translation_octagon(octagon(&edges)).unwrap();
        let h = holonomy(&s).unwrap();
        prop_assert!(h.certificate.homology_symplectic && h.certificate.relation_holds);
        prop_assert_eq!(untwisted_volume(&h.periods()), s.area());
    }

    #[test]
    fn connected_sum_is_symmetric_up_to_conjugacy(
        a in (1i64..4, -2i64..3, 0i64..3, 1i64..4),
        b in (1i64..4, -2i64..3, 0i64..3, 1i64..4),
    ) {
        let (u1, v1) = (z(a.0, 0), z(a.1, a.3).add(&z(0, a.2)));
        let (u2, v2) = (z(b.0, b.2), z(b.1, b.3 + b.2));
        prop_assume!(b.0 * (b.3 + b.2) - b.2 * b.1 > 0);
        let syms = Arc::new(Symbols::new());
        let t1 = parallelogram_torus(&u1, &v1, syms.clone()).unwrap();
        let t2 = parallelogram_torus(&u2, &v2, syms).unwrap();
        let (s1, s2) = (diagonal_slit(&u1, &v1), diagonal_slit(&u2, &v2));
        let x = connected_sum(&t1, &s1, &t2, &s2).unwrap();
        let y = connected_sum(&t2, &s2, &t1, &s1).unwrap();
        let (hx, hy) = (holonomy(&x).unwrap(), holonomy(&y).unwrap());
        let c = conjugacy(&swap_handles(&hy.rep), &hx.rep);
        prop_assert!(c.is_ok(), "{:?}", c);
        let fours = |s: &PolygonSurface| cone_data(s).unwrap().singular().iter().filter(|p| p.exact_over_pi == Some(BigRational::from_integer(4.into()))).count();
        prop_assert_eq!(fours(&x), 2);
        prop_assert_eq!(fours(&y), 2);
    }
}
