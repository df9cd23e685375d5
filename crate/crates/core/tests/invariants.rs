use proptest::prelude::*;

use kanlim::complexes::{kunneth_oracle, tensor_cyclic, CyclicComplex};
use kanlim::diagrams::is_reedy_cofibrant;
use kanlim::franke::roundtrip;
use kanlim::io::{complex_from_json, complex_to_json, diagram_from_json, diagram_to_json, map_from_json, map_to_json};
use kanlim::palgebra::FpModule;
use kanlim::random::*;

fn bounds() -> Bounds {
    Bounds { max_rank: 3, max_exp: 3 }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn generated_complexes_respect_bounds(seed: u64, flat: bool) {
        let c = random_complex(&mut rng(seed), 3, bounds(), flat);
        prop_assert_eq!(c.period(), 4);
        for m in c.modules() {
            prop_assert!(m.ngens() <= 3);
            prop_assert!(m.torsion().iter().all(|&e| (1..=3).contains(&e)));
        }
        if flat {
            prop_assert!(c.is_flat());
        }
    }

    #[test]
    fn generation_is_deterministic(seed: u64) {
        let a = random_complex(&mut rng(seed), 3, bounds(), false);
        let b = random_complex(&mut rng(seed), 3, bounds(), false);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn automorphisms_are_invertible(seed: u64) {
        let mut g = rng(seed);
        let m = random_module(&mut g, 3, bounds(), false);
        let a = random_automorphism(&mut g, &m);
        prop_assert!(a.is_iso());
        prop_assert_eq!(a.inverse().unwrap().compose(&a).unwrap(), kanlim::palgebra::ModuleMap::identity(&m));
    }

    #[test]
    fn scrambling_keeps_cohomology(seed: u64) {
        let mut g = rng(seed);
        let c = random_complex(&mut g, 3, bounds(), false);
        let s = scramble(&mut g, &c);
        prop_assert_eq!(s.cohomology_table(), c.cohomology_table());
    }

    #[test]
    fn json_roundtrip(seed: u64) {
        let mut g = rng(seed);
        let c = random_complex(&mut g, 3, bounds(), false);
        prop_assert_eq!(complex_from_json(&complex_to_json(&c)).unwrap(), c.clone());
        let m = random_module(&mut g, 3, bounds(), false);
        let n = random_module(&mut g, 3, bounds(), false);
        let f = random_map(&mut g, &m, &n);
        prop_assert_eq!(map_from_json(&map_to_json(&f), &m, &n).unwrap(), f);
    }

    #[test]
    fn diagram_json_roundtrip(seed: u64) {
        let mut g = rng(seed);
        let shape = random_poset(&mut g, 4);
        let x = random_cx_diagram(&mut g, &shape, 3, Bounds { max_rank: 2, max_exp: 2 }).unwrap();
        prop_assert_eq!(diagram_from_json(&diagram_to_json(&x)).unwrap(), x);
    }

    #[test]
    fn monotone_maps_are_monotone(seed: u64) {
        let mut g = rng(seed);
        let p = random_poset(&mut g, 8);
        let f = random_monotone(&mut g, &p);
        prop_assert!(f.is_monotone());
    }

    #[test]
    fn reedy_generator(seed: u64) {
        let mut g = rng(seed);
        let shape = random_poset(&mut g, 8);
        let x = random_reedy_diagram(&mut g, &shape, 3, bounds()).unwrap();
        prop_assert!(is_reedy_cofibrant(&x, &FpModule::zero(3)).unwrap());
        prop_assert!(x.objects().iter().all(|m| m.ngens() <= 3));
        let y = random_cofree_diagram(&mut g, &shape, 3, bounds()).unwrap();
        prop_assert!(y.objects().iter().all(|m| m.ngens() <= 3));
        let z = random_cx_diagram(&mut g, &shape, 3, bounds()).unwrap();
        prop_assert!(z.objects().iter().all(|c| c.modules().iter().all(|m| m.ngens() <= 3)));
    }

    #[test]
    fn tensor_laws(seed: u64) {
        let mut g = rng(seed);
        let c = random_complex(&mut g, 3, Bounds { max_rank: 2, max_exp: 2 }, true);
        let d = random_complex(&mut g, 3, Bounds { max_rank: 2, max_exp: 2 }, true);
        prop_assert_eq!(tensor_cyclic(&c, &CyclicComplex::unit(3)).unwrap(), c.clone());
        let cd = tensor_cyclic(&c, &d).unwrap().cohomology_table();
        let dc = tensor_cyclic(&d, &c).unwrap().cohomology_table();
        prop_assert_eq!(&cd, &dc);
        prop_assert_eq!(cd, kunneth_oracle(&c, &d).unwrap());
    }

    #[test]
    fn reconstruction(seed: u64) {
        let c = random_complex(&mut rng(seed), 3, bounds(), false);
        prop_assert!(roundtrip(&c).unwrap().exact());
    }
}

#[test]
fn rejects_bad_json() {
    let v = serde_json::json!({
        "p": 3, "N": 4,
        "modules": [{"rank": 1, "torsion": []}, {"rank": 1, "torsion": []}, {"rank": 1, "torsion": []}, {"rank": 0, "torsion": []}],
        "differentials": [{"entries": [[1, 1]]}, {"entries": [[1, 1]]}, {"entries": []}, {"entries": []}]
    });
    assert!(matches!(complex_from_json(&v), Err(kanlim::Error::InvalidComplex(_))));
    let bad_scalar = serde_json::json!({"entries": [[1, 3]]});
    let z = FpModule::free(3, 1);
    assert!(map_from_json(&bad_scalar, &z, &z).is_err());
    let big = serde_json::json!({"entries": [["123456789012345678901234567890", 1]]});
    let f = map_from_json(&big, &z, &z).unwrap();
    assert_eq!(map_to_json(&f), big);
}
