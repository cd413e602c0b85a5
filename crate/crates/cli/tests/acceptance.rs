//! The ten acceptance criteria, each run against its time budget. One
//! PASS/FAIL line is printed per criterion; run with `--nocapture` to see
//! them.

mod common;

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use fingroup::algebra::{is_commutative, mr_decompose, nilpotent_free_check, FiniteRing};
use fingroup::boolean::{BooleanIdeal, FiniteBooleanRing};
use fingroup::corpus::{bundled, bundled_tower, bundled_tower_names};
use fingroup::measure::{
    commuting_pairs, epsilon_evidence, neumann_admissible_pairs, neumann_search, rho_wedge, verify_inequalities, Check,
    RhoValue,
};
use fingroup::module_ring::{ring_construct, GModuleAction, RingOutcome};
use fingroup::power::MaterializedPower;
use fingroup::tower::is_non_increasing;
use fingroup::{Caps, FiniteGroup, Subgroup};
use num_rational::Ratio;

use common::{bin, golden, scratch};

fn corpus() -> Vec<(String, FiniteGroup)> {
    bundled(&Caps::default()).sorted()
}

fn get(name: &str) -> FiniteGroup {
    bundled(&Caps::default()).get(name).expect("bundled").clone()
}

fn c1_burnside() {
    let caps = Caps::default();
    let oracle = golden("oracle.json");
    for (name, g) in corpus() {
        assert!(g.order() <= 120);
        let n = g.order();
        let mut pairs = 0u64;
        for x in g.elements() {
            for y in g.elements() {
                pairs += u64::from(g.mul(x, y) == g.mul(y, x));
            }
        }
        let classes = g.conjugacy_classes().len();
        assert_eq!(pairs, (n * classes) as u64, "{name}");
        assert_eq!(commuting_pairs(&g, &caps).unwrap().pairs, pairs, "{name}");
        assert_eq!(oracle[&name]["pairs"], pairs, "{name}");
    }
}

fn is_abelian_section(g: &FiniteGroup, k: &Subgroup, n: &Subgroup) -> bool {
    n.elements().all(|x| n.elements().all(|y| k.contains(g.comm(x, y))))
}

fn c2_neumann() {
    let caps = Caps::default();
    for (name, g) in corpus() {
        let w = neumann_search(&g, &caps).unwrap();
        let n2 = (g.order() * g.order()) as u128;
        assert!(w.bound_holds, "{name}");
        assert!(u128::from(w.pairs) * u128::from(w.value) >= n2, "{name}");
        assert!(g.is_normal(&w.k) && g.is_normal(&w.n) && w.k.is_subgroup_of(&w.n), "{name}");
        assert!(is_abelian_section(&g, &w.k, &w.n), "{name}");
        let all = neumann_admissible_pairs(&g);
        assert_eq!(all.len(), w.admissible_pairs);
        // every normal K ≤ N with N/K abelian appears, and none beats the witness
        let normals = g.enumerate_normal_subgroups();
        let mut expected = 0;
        for n in &normals {
            for k in normals.iter().filter(|k| k.is_subgroup_of(n)) {
                if is_abelian_section(&g, k, n) {
                    expected += 1;
                    let index = (g.order() / n.order()) as u64;
                    let value = k.order() as u64 * index * index;
                    assert!(value >= w.value, "{name}: smaller admissible value {value}");
                    assert!(u128::from(w.pairs) * u128::from(value) >= n2, "{name}");
                }
            }
        }
        assert_eq!(expected, all.len(), "{name}");
    }
}

fn c3_ideal_correspondence() {
    let caps = Caps::default();
    let a5 = get("A5");
    for atoms in 1..=2 {
        let p = MaterializedPower::new(&a5, FiniteBooleanRing::new(atoms).unwrap(), &caps).unwrap();
        let r = p.verify_ideal_correspondence(&a5);
        assert!(r.holds, "A5 with {atoms} atoms");
        assert_eq!(r.ideal_count, 1 << atoms);
        assert_eq!(r.normal_count, 1 << atoms);
        let ideals: BTreeSet<Vec<u32>> = BooleanIdeal::all(&p.ring)
            .iter()
            .map(|i| p.ideal_subgroup(i).element_ids().to_vec())
            .collect();
        let normals: BTreeSet<Vec<u32>> =
            p.group.enumerate_normal_subgroups().iter().map(|s| s.element_ids().to_vec()).collect();
        assert_eq!(ideals, normals);
    }
    let z4 = get("Z4");
    let p = MaterializedPower::new(&z4, FiniteBooleanRing::new(2).unwrap(), &caps).unwrap();
    let r = p.verify_ideal_correspondence(&z4);
    assert!(!r.holds);
    let witness = p.group.subgroup(&r.non_ideal[0]).unwrap();
    assert!(p.group.is_normal(&witness));
    assert!(BooleanIdeal::all(&p.ring).iter().all(|i| p.ideal_subgroup(i) != witness));
}

fn c4_quotients() {
    let caps = Caps::default();
    for (name, max_atoms) in [("Z2", 3), ("S3", 3), ("A5", 2)] {
        let base = get(name);
        for atoms in 1..=max_atoms {
            let p = MaterializedPower::new(&base, FiniteBooleanRing::new(atoms).unwrap(), &caps).unwrap();
            for ideal in BooleanIdeal::all(&p.ring) {
                let q = p.quotient_iso(&base, &ideal, &caps).unwrap();
                let m = atoms - ideal.bound().count_ones() as usize;
                assert_eq!(q.m, m, "{name}, {atoms} atoms");
                assert!(q.iso.is_injective() && q.iso.is_surjective());
                assert_eq!(q.target.order(), base.order().pow(m as u32));
                assert_eq!(q.quotient.order() * p.ideal_subgroup(&ideal).order(), p.group.order());
                for x in q.quotient.elements() {
                    for y in q.quotient.elements() {
                        assert_eq!(q.iso.apply(q.quotient.mul(x, y)), q.target.mul(q.iso.apply(x), q.iso.apply(y)));
                    }
                }
            }
        }
    }
}

fn c5_cp_monotone() {
    let caps = Caps::default();
    for name in bundled_tower_names() {
        let sys = bundled_tower(name, &caps).unwrap();
        let cp = sys.cp_sequence(&caps).unwrap();
        assert!(is_non_increasing(&cp), "{name}: {cp:?}");
    }
    let a5 = get("A5");
    let c = commuting_pairs(&a5, &caps).unwrap().fraction;
    assert_eq!(c, Ratio::new(1, 12));
    let cp = bundled_tower("A5-power", &caps).unwrap().cp_sequence(&caps).unwrap();
    assert_eq!(cp, vec![c, c * c]);
    let a5sq = FiniteGroup::direct_power(&a5, 2, &caps).unwrap();
    let eps = epsilon_evidence(&[("A5".into(), a5), ("A5^2".into(), a5sq)], &caps).unwrap();
    assert!(eps.decays);
    assert_eq!(eps.epsilon, c * c);
}

fn c6_rho_wedge() {
    let caps = Caps::default();
    for (order, names) in [(8, ["D8", "Q8"]), (27, ["Heis27", "M27"])] {
        let mut members = Vec::new();
        for name in names {
            let g = get(name);
            let r = rho_wedge(&g).unwrap();
            assert_eq!((r.u_dim, r.w_dim, r.wedge_dim, r.image_dim, r.kernel_dim), (2, 1, 1, 1, 0), "{name}");
            assert_eq!(r.k, RhoValue::Finite(0));
            members.push((name.to_string(), g));
        }
        for set in [&members[..1], &members[1..], &members[..]] {
            let rep = verify_inequalities(set, None, &caps).unwrap();
            let o = &rep.orders[0];
            assert_eq!(o.order, order);
            assert!(matches!(o.second, Check::Checked { holds: true, .. }), "{:?}", o.second);
            assert!(matches!(o.intermediate, Check::Checked { holds: true, .. }), "{:?}", o.intermediate);
            let d = o.second_detail.as_ref().unwrap();
            // n = 3, k = 0: i^{(2k+1-n)/2} i² = p^3, squared p^6
            assert_eq!(d.doubled_exponent, 6);
            let p = d.p as u64;
            assert_eq!(d.lhs_squared, format!("{}/1", p.pow(6)));
            assert!(p.pow(6) <= o.rho_com * o.rho_com);
            assert!(order as u64 * order as u64 <= o.rho_com * d.max_w_order as u64);
        }
    }
}

fn c7_commutators() {
    let caps = Caps::default();
    for name in bundled_tower_names() {
        let sys = bundled_tower(name, &caps).unwrap();
        let top = sys.top();
        let mut subs = vec![top.whole(), top.derived_subgroup(), top.center()];
        subs.extend(top.generators().iter().map(|&g| top.generate([g as usize])));
        for k in &subs {
            for l in &subs {
                let check = sys.commutator_level_check(k, l);
                assert!(check.holds, "{name}: first failure {:?}", check.first_failure);
                assert_eq!(check.levels.len(), sys.depth());
            }
        }
    }
}

/// Products of exactly `k` elements of `steps`, for k = 0, 1, ...
fn product_layers(g: &FiniteGroup, steps: &[usize], max: usize) -> Vec<BTreeSet<usize>> {
    let mut layers = vec![BTreeSet::from([0usize])];
    for _ in 0..max {
        let next = layers.last().unwrap().iter().flat_map(|&x| steps.iter().map(move |&s| g.mul(x, s))).collect();
        layers.push(next);
    }
    layers
}

fn c8_spread() {
    let caps = Caps::default();
    let oracle = golden("oracle.json");
    for (name, g) in corpus().into_iter().filter(|(_, g)| g.order() <= 60) {
        let s = g.conjugate_spread(&caps).unwrap();
        assert_eq!(oracle[&name]["spread"], s.m, "{name}");
        for w in &s.witnesses {
            let mut steps = g.class_of(w.element);
            steps.extend(g.class_of(g.inv(w.element)));
            let layers = product_layers(&g, &steps, w.depth);
            let within: BTreeSet<usize> = layers.iter().flatten().copied().collect();
            let closure: BTreeSet<usize> = g.normal_closure(w.element).elements().collect();
            assert_eq!(within, closure, "{name}: closure not covered in {} steps", w.depth);
            assert!(!layers[..w.depth].iter().any(|l| l.contains(&w.worst)), "{name}: witness is shorter");
        }
    }
    assert_eq!(get("S3").conjugate_spread(&caps).unwrap().m, 2);
}

fn c9_ring_pipeline() {
    let caps = Caps::default();
    let z2 = FiniteGroup::cyclic(2);
    let swap = |p| GModuleAction::new(&z2, p, 2, &[(1, vec![vec![0, 1], vec![1, 0]])].into_iter().collect()).unwrap();
    let RingOutcome::Ring(r) = ring_construct(&swap(3), &[1, 0], &caps).unwrap() else { panic!("ill-defined") };
    let n = r.size();
    assert!(is_commutative(&r));
    assert!((0..n).all(|a| (0..n).all(|b| (0..n).all(|c| r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c))))));
    let factors = mr_decompose(&r, &caps).unwrap();
    assert_eq!(factors.len(), 2);
    assert!(factors.iter().all(|f| f.order() == 3 && f.characteristic == 3 && f.degree == 1));
    let RingOutcome::Ring(r) = ring_construct(&swap(2), &[1, 0], &caps).unwrap() else { panic!("ill-defined") };
    let check = nilpotent_free_check(&r, &caps).unwrap();
    let w = check.witness.expect("nilpotent witness");
    assert_eq!(r.vector(w), vec![1, 1]);
    assert_eq!(r.mul(w, w), 0);
}

fn suite(dir: &std::path::Path, threads: &str) {
    let runs: &[&[&str]] = &[
        &["analyze-group"],
        &["neumann"],
        &["rho", "--kind", "com"],
        &["rho", "--kind", "r"],
        &["verify-inequalities"],
        &["boolean-power", "--group", "A5"],
        &["boolean-power", "--group", "Z4", "--field", "GF4", "--closed", "0=2"],
        &["inverse-system"],
        &["ring-from-module"],
    ];
    for (i, args) in runs.iter().enumerate() {
        for format in ["json", "csv"] {
            let out = dir.join(format!("{i}.{format}"));
            let status = bin()
                .env("RAYON_NUM_THREADS", threads)
                .args(*args)
                .args(["--format", format, "--out", out.to_str().unwrap()])
                .status()
                .unwrap();
            assert_eq!(status.code(), Some(0), "{args:?}");
        }
    }
}

fn c10_determinism() {
    let dirs: Vec<_> = ["det-a", "det-b", "det-c"].iter().map(|d| scratch(d)).collect();
    suite(&dirs[0], "4");
    suite(&dirs[1], "4");
    suite(&dirs[2], "1");
    let mut names: Vec<_> = std::fs::read_dir(&dirs[0]).unwrap().map(|e| e.unwrap().file_name()).collect();
    names.sort();
    assert_eq!(names.len(), 18);
    for name in names {
        let a = std::fs::read(dirs[0].join(&name)).unwrap();
        for d in &dirs[1..] {
            assert!(a == std::fs::read(d.join(&name)).unwrap(), "{name:?} differs in {}", d.display());
        }
    }
}

#[test]
fn acceptance() {
    let criteria: [(&str, Duration, fn()); 10] = [
        ("1 Burnside identity", Duration::from_secs(10), c1_burnside),
        ("2 Neumann inequality and minimality", Duration::from_secs(60), c2_neumann),
        ("3 ideal correspondence", Duration::from_secs(300), c3_ideal_correspondence),
        ("4 Boolean power quotients", Duration::from_secs(120), c4_quotients),
        ("5 commuting fraction sequences", Duration::from_secs(180), c5_cp_monotone),
        ("6 rho_wedge and inequality (2)", Duration::from_secs(10), c6_rho_wedge),
        ("7 commutator level check", Duration::from_secs(30), c7_commutators),
        ("8 conjugate spread", Duration::from_secs(60), c8_spread),
        ("9 module ring pipeline", Duration::from_secs(10), c9_ring_pipeline),
        ("10 determinism", Duration::from_secs(600), c10_determinism),
    ];
    let mut failed = Vec::new();
    for (name, budget, f) in criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(f));
        let elapsed = start.elapsed();
        let ok = outcome.is_ok() && elapsed <= budget;
        let note = if outcome.is_err() { "assertion failed" } else if !ok { "over time budget" } else { "" };
        println!(
            "criterion {name}: {} ({:.2}s of {}s) {note}",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
        if !ok {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
