use fingroup::boolean::FiniteBooleanRing;
use fingroup::corpus::bundled;
use fingroup::measure::{commuting_pairs, rho_wedge};
use fingroup::power::BooleanPowerGroup;
use fingroup::{Caps, FiniteGroup};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn group(name: &str) -> FiniteGroup {
    bundled(&Caps::default()).get(name).expect("bundled").clone()
}

/// A bundled group name and some of its element ids.
fn group_and_elements(names: &'static [&'static str]) -> impl Strategy<Value = (FiniteGroup, Vec<usize>)> {
    prop::sample::select(names).prop_flat_map(|name| {
        let g = group(name);
        let n = g.order();
        (Just(g), prop::collection::vec(0..n, 0..4))
    })
}

/// A bundled group with a random relabelling fixing the identity.
fn relabelled(names: &'static [&'static str]) -> impl Strategy<Value = (FiniteGroup, FiniteGroup)> {
    prop::sample::select(names).prop_flat_map(|name| {
        let g = group(name);
        let rest: Vec<usize> = (1..g.order()).collect();
        (Just(g), Just(rest.clone()).prop_shuffle()).prop_map(|(g, rest)| {
            let perm: Vec<usize> = std::iter::once(0).chain(rest).collect();
            let h = g.relabel(&perm).unwrap();
            (g, h)
        })
    })
}

const SMALL: &[&str] = &["Z6", "S3", "D8", "Q8", "A4", "S3xZ2", "S4", "Heis27", "M27"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lagrange((g, gens) in group_and_elements(SMALL)) {
        let h = g.generate(gens.iter().copied());
        prop_assert_eq!(g.order() % h.order(), 0);
        prop_assert!(gens.iter().all(|&x| h.contains(x)));
    }

    #[test]
    fn core_and_closure((g, gens) in group_and_elements(SMALL)) {
        let h = g.generate(gens.iter().copied());
        let core = g.core(&h);
        let closure = g.normal_closure_of(&h);
        prop_assert!(g.is_normal(&core) && g.is_normal(&closure));
        prop_assert!(core.is_subgroup_of(&h) && h.is_subgroup_of(&closure));
    }

    #[test]
    fn quotient_by_normal_closure((g, gens) in group_and_elements(SMALL)) {
        let n = g.normal_closure_of(&g.generate(gens.iter().copied()));
        let (q, proj) = g.quotient(&n).unwrap();
        prop_assert_eq!(q.order() * n.order(), g.order());
        prop_assert!(proj.is_surjective());
        prop_assert_eq!(proj.kernel(&g), n);
    }

    #[test]
    fn invariants_survive_relabelling((g, h) in relabelled(&["D8", "Q8", "E8", "Heis27", "M27", "S3", "A4"])) {
        let caps = Caps::default();
        prop_assert_eq!(commuting_pairs(&g, &caps).unwrap(), commuting_pairs(&h, &caps).unwrap());
        match (rho_wedge(&g), rho_wedge(&h)) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
            (Err(_), Err(_)) => {}
            (a, b) => prop_assert!(false, "{:?} vs {:?}", a, b),
        }
        prop_assert_eq!(g.enumerate_normal_subgroups().len(), h.enumerate_normal_subgroups().len());
        prop_assert_eq!(g.conjugate_spread(&caps).unwrap().m, h.conjugate_spread(&caps).unwrap().m);
    }

    #[test]
    fn boolean_ring_laws(atoms in 1usize..8, a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let r = FiniteBooleanRing::new(atoms).unwrap();
        let (a, b, c) = (a & r.one(), b & r.one(), c & r.one());
        prop_assert_eq!(r.mul(a, a), a);
        prop_assert_eq!(r.add(a, a), r.zero());
        prop_assert_eq!(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c)));
        prop_assert_eq!(r.mul(a, r.one()), a);
    }

    #[test]
    fn normal_form_is_pointwise(
        name in prop::sample::select(&["S3", "Q8", "Z4"][..]),
        atoms in 1usize..5,
        raw in prop::collection::vec((0usize..8, any::<u32>()), 0..6),
    ) {
        let g = group(name);
        let ring = FiniteBooleanRing::new(atoms).unwrap();
        let bp = BooleanPowerGroup::new(&g, ring);
        let raw: Vec<(usize, u32)> = raw.into_iter().map(|(x, s)| (x % g.order(), s & ring.one())).collect();
        let x = bp.normalize(&raw).unwrap();
        let mut want = vec![0usize; atoms];
        for &(h, s) in &raw {
            for (a, v) in want.iter_mut().enumerate() {
                if s >> a & 1 == 1 {
                    *v = g.mul(*v, h);
                }
            }
        }
        prop_assert_eq!(x.evaluate(), want.clone());
        // normalizing a normal form changes nothing
        prop_assert_eq!(bp.normalize(x.terms()).unwrap(), x.clone());
        prop_assert_eq!(bp.from_values(&want), x.clone());
        // supports of a normal form are disjoint and nonempty
        let mut seen = 0u32;
        for &(h, s) in x.terms() {
            prop_assert!(h != 0 && s != 0 && s & seen == 0);
            seen |= s;
        }
        let inv = bp.inverse(&x).unwrap();
        prop_assert!(bp.multiply(&x, &inv).unwrap().is_identity());
    }

    #[test]
    fn disjoint_terms_commute(
        atoms in 2usize..6,
        split in any::<u32>(),
        values in subsequence((0usize..6).collect::<Vec<_>>(), 2),
    ) {
        let g = group("S3");
        let ring = FiniteBooleanRing::new(atoms).unwrap();
        let bp = BooleanPowerGroup::new(&g, ring);
        let a = split & ring.one();
        let b = ring.one() & !a;
        let forward = bp.normalize(&[(values[0], a), (values[1], b)]).unwrap();
        let backward = bp.normalize(&[(values[1], b), (values[0], a)]).unwrap();
        prop_assert_eq!(forward, backward);
    }
}
