use num_traits::{Signed, Zero};
use proptest::prelude::*;

use orbicover_core::exact::{
    discriminant_of_roots, rat, ratio, BigRational, CyclotomicScalar, Field, ProjectivePoint, Ring,
};
use orbicover_core::geometry::psi_power;
use orbicover_core::groups::{
    abelianization, enumerate, todd_coxeter, Letter, Outcome, Presentation, Strategy as Definition, Word,
};
use orbicover_core::orbifold::{classify_orbifold, orb_euler_char, OrbifoldSignature, UniformizationType};
use orbicover_core::weight::Weight;

fn point(coords: &[(i64, i64)]) -> Option<ProjectivePoint<BigRational>> {
    ProjectivePoint::new(coords.iter().map(|&(n, d)| ratio(n, d)).collect()).ok()
}

fn fraction() -> impl Strategy<Value = (i64, i64)> {
    (-12i64..=12, 1i64..=6)
}

fn word(ngens: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..ngens, any::<bool>()), 1..=max_len).prop_map(|ls| {
        Word::new(
            ls.into_iter()
                .map(|(g, inv)| if inv { Letter::inv(g) } else { Letter::gen(g) })
                .collect(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn discriminant_is_root_difference_product(pts in prop::collection::vec((fraction(), fraction()), 2..=5)) {
        let points: Option<Vec<_>> = pts.iter().map(|&(u, v)| point(&[u, v])).collect();
        let Some(points) = points else { return Ok(()) };
        let mut product = rat(1);
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                let (p, q) = (points[i].coords(), points[j].coords());
                let d = &p[0] * &q[1] - &p[1] * &q[0];
                product = product * &d * &d;
            }
        }
        prop_assert_eq!(discriminant_of_roots(&points).unwrap(), product);
    }

    #[test]
    fn power_maps_compose(coords in prop::collection::vec(fraction(), 2..=5), a in 1u32..=3, b in 1u32..=3) {
        let Some(p) = point(&coords) else { return Ok(()) };
        let twice = psi_power(&psi_power(&p, a).unwrap(), b).unwrap();
        prop_assert_eq!(twice, psi_power(&p, a * b).unwrap());
    }

    #[test]
    fn cyclotomic_inverse(s in 2u32..=12, coeffs in prop::collection::vec(-5i64..=5, 1..=6)) {
        let x = CyclotomicScalar::from_coeffs(s, coeffs.iter().map(|&c| rat(c)).collect());
        prop_assume!(!x.is_zero());
        let inv = x.inv().unwrap();
        prop_assert!(x.times(&inv).is_one());
        prop_assert!(Ring::pow(&CyclotomicScalar::omega(s), s).is_one());
    }

    #[test]
    fn classification_follows_euler_sign(ws in prop::collection::vec(2u64..=8, 3..=5)) {
        let sig = OrbifoldSignature::new(ws.into_iter().map(Weight::Finite).collect()).unwrap();
        let chi = orb_euler_char(&sig);
        let expected = if chi.is_positive() {
            UniformizationType::Sphere
        } else if Zero::is_zero(&chi) {
            UniformizationType::Euclidean
        } else {
            UniformizationType::Hyperbolic
        };
        prop_assert_eq!(classify_orbifold(&sig), expected);
    }

    #[test]
    fn enumeration_is_sound(rels in prop::collection::vec(word(2, 7), 2..=4), a in 2u64..=6, b in 2u64..=6) {
        let mut relators = rels;
        relators.push(Word::gen(0).pow(a));
        relators.push(Word::gen(1).pow(b));
        let p = Presentation::new(vec!["x".into(), "y".into()], relators).unwrap();
        let hlt = todd_coxeter(&p, 20_000);
        let felsch = enumerate(&p, 20_000, Definition::Felsch);
        if let (Outcome::Closed(h), Outcome::Closed(f)) = (hlt.outcome, felsch.outcome) {
            prop_assert_eq!(h, f);
        }
        if let Outcome::Closed(k) = hlt.outcome {
            let t = hlt.table.unwrap();
            prop_assert!(t.is_permutation_action() && t.satisfies(&p));
            let order = abelianization(&p).order().unwrap();
            prop_assert!(order != 0 && k % order == 0);
        }
    }

    #[test]
    fn presentation_text_round_trip(rels in prop::collection::vec(word(3, 6), 1..=4)) {
        let p = Presentation::new(vec!["s1".into(), "s2".into(), "t0".into()], rels).unwrap();
        let q = Presentation::parse(&p.to_text()).unwrap();
        prop_assert_eq!(q.to_text(), p.to_text());
    }
}
