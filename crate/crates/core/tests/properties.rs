//! Property tests for the structural invariants: reflections are
//! involutions, the invariant form is Weyl-invariant, straightening is
//! idempotent and orbit-constant, dominance is a partial order, and Euler
//! characteristics are dot-equivariant.

use proptest::prelude::*;
use weyl_core::characters::{euler_characteristic, Euler};
use weyl_core::weight_lattice::{
    dominance_le, minuscule_below, minuscule_weights, orbit_summary, same_root_lattice_coset,
    weyl_orbit,
};
use weyl_core::{Family, RootSystem, RootSystemType, Weight};

fn test_types() -> Vec<RootSystemType> {
    vec![
        RootSystemType::new(Family::A, 1).unwrap(),
        RootSystemType::new(Family::A, 3).unwrap(),
        RootSystemType::new(Family::B, 3).unwrap(),
        RootSystemType::new(Family::C, 4).unwrap(),
        RootSystemType::new(Family::D, 4).unwrap(),
        RootSystemType::new(Family::F, 4).unwrap(),
        RootSystemType::new(Family::G, 2).unwrap(),
        RootSystemType::new(Family::E, 6).unwrap(),
    ]
}

prop_compose! {
    fn arb_system()(idx in 0..8usize) -> RootSystemType {
        test_types()[idx]
    }
}

fn arb_coords(rank: usize, lo: i64, hi: i64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(lo..=hi, rank)
}

fn apply_word(rs: &RootSystem, w: &Weight, word: &[usize]) -> Weight {
    let mut out = w.clone();
    for &i in word {
        out = rs.reflect_simple(&out, i % rs.rank());
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflection_is_an_involution(typ in arb_system(), coords in arb_coords(8, -6, 6), root_pick in 0..64usize) {
        let rs = RootSystem::build(typ);
        let w = Weight(coords[..rs.rank()].to_vec());
        let alpha = &rs.positive_roots()[root_pick % rs.num_positive_roots()];
        let once = rs.reflect(&w, alpha).unwrap();
        prop_assert_eq!(rs.reflect(&once, alpha).unwrap(), w);
    }

    #[test]
    fn form_is_weyl_invariant(
        typ in arb_system(),
        x in arb_coords(8, -5, 5),
        y in arb_coords(8, -5, 5),
        word in prop::collection::vec(0..8usize, 0..8),
    ) {
        let rs = RootSystem::build(typ);
        let x = Weight(x[..rs.rank()].to_vec());
        let y = Weight(y[..rs.rank()].to_vec());
        let wx = apply_word(&rs, &x, &word);
        let wy = apply_word(&rs, &y, &word);
        prop_assert_eq!(rs.inner_product(&wx, &wy), rs.inner_product(&x, &y));
    }

    #[test]
    fn straightening_is_orbit_constant(
        typ in arb_system(),
        coords in arb_coords(8, 0, 3),
        word in prop::collection::vec(0..8usize, 0..12),
    ) {
        let rs = RootSystem::build(typ);
        let lam = Weight(coords[..rs.rank()].to_vec());
        let moved = apply_word(&rs, &lam, &word);
        let rep = rs.dominant_representative(&moved);
        prop_assert_eq!(&rep.weight, &lam);
        let again = rs.dominant_representative(&rep.weight);
        prop_assert_eq!(again.reflections, 0);
        prop_assert_eq!(again.weight, lam);
    }

    #[test]
    fn dominance_partial_order_via_root_additions(
        typ in arb_system(),
        base in arb_coords(8, 0, 2),
        step1 in prop::collection::vec(0..3i64, 8),
        step2 in prop::collection::vec(0..3i64, 8),
    ) {
        let rs = RootSystem::build(typ);
        let n = rs.rank();
        let mu = Weight(base[..n].to_vec());
        let add_roots = |w: &Weight, c: &[i64]| {
            let mut out = w.clone();
            for i in 0..n {
                for (k, a) in out.0.iter_mut().zip(&rs.positive_roots()[i].weight_coords.0) {
                    *k += c[i] * a;
                }
            }
            out
        };
        let nu = add_roots(&mu, &step1[..n]);
        let lam = add_roots(&nu, &step2[..n]);
        prop_assert!(dominance_le(&rs, &mu, &nu));
        prop_assert!(dominance_le(&rs, &nu, &lam));
        prop_assert!(dominance_le(&rs, &mu, &lam), "transitivity");
        prop_assert!(dominance_le(&rs, &mu, &mu), "reflexivity");
        if dominance_le(&rs, &nu, &mu) {
            prop_assert_eq!(nu, mu, "antisymmetry");
        }
    }

    #[test]
    fn euler_is_dot_equivariant(
        typ in arb_system(),
        coords in arb_coords(8, -4, 4),
        word in prop::collection::vec(0..8usize, 0..8),
    ) {
        let rs = RootSystem::build(typ);
        let mu = Weight(coords[..rs.rank()].to_vec());
        let base = euler_characteristic(&rs, &mu);
        let mut moved = mu.clone();
        let mut sign = 1i32;
        for &i in &word {
            moved = rs.reflect_simple(&moved.add(rs.rho()), i % rs.rank()).sub(rs.rho());
            sign = -sign;
        }
        match (base, euler_characteristic(&rs, &moved)) {
            (Euler::Zero, Euler::Zero) => {}
            (Euler::Term { sign: s1, weight: w1 }, Euler::Term { sign: s2, weight: w2 }) => {
                prop_assert_eq!(w1, w2);
                prop_assert_eq!(s1 * sign, s2);
            }
            other => prop_assert!(false, "wall status changed under the dot action: {:?}", other),
        }
    }

    #[test]
    fn minuscule_below_lands_in_the_same_coset(
        typ in arb_system(),
        coords in arb_coords(8, 0, 3),
    ) {
        let rs = RootSystem::build(typ);
        let lam = Weight(coords[..rs.rank()].to_vec());
        let m = minuscule_below(&rs, &lam).unwrap();
        prop_assert!(minuscule_weights(&rs).contains(&m));
        prop_assert!(same_root_lattice_coset(&rs, &lam, &m));
    }

    #[test]
    fn orbit_size_matches_enumeration(
        typ in arb_system(),
        coords in arb_coords(8, 0, 1),
    ) {
        let rs = RootSystem::build(typ);
        let lam = Weight(coords[..rs.rank()].to_vec());
        let summary = orbit_summary(&rs, &lam).unwrap();
        if summary.orbit_size <= 5000u32.into() {
            let orbit = weyl_orbit(&rs, &lam, 5000).unwrap();
            prop_assert_eq!(num_bigint::BigUint::from(orbit.len() as u64), summary.orbit_size);
        }
    }
}
