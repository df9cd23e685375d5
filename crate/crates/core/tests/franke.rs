use kanlim::complexes::{moore_complex, CyclicComplex};
use kanlim::franke::*;
use kanlim::palgebra::FpModule;
use kanlim::random::{random_complex, rng, Bounds};

fn names(ms: &[FpModule]) -> Vec<String> {
    ms.iter().map(|m| m.to_string()).collect()
}

#[test]
fn roundtrip_moore_and_unit() {
    for c in [moore_complex(3).unwrap(), CyclicComplex::unit(3), CyclicComplex::zero(3)] {
        let r = roundtrip(&c).unwrap();
        assert!(r.exact(), "{r:?}");
    }
}

#[test]
fn moore_crown() {
    let m = moore_complex(3).unwrap();
    let a = crown_decompose(&m);
    assert!(a.check().passed());
    // zeta_0 is Z --> 3Z, the coboundaries in degree 1
    let z0 = a.diagram.object(a.zeta(0));
    assert_eq!(z0.module(0), &FpModule::free(3, 1));
    assert_eq!(z0.module(1), &FpModule::free(3, 1));
    assert!(z0.is_acyclic());
    assert_eq!(crown_assemble(&a).unwrap(), m);
}

#[test]
fn moore_smash_moore() {
    let m = moore_complex(3).unwrap();
    let r = smash_pipeline(&m, &m).unwrap();
    assert_eq!(names(&r.q_cohomology), vec!["0", "Z/3", "Z/3", "0"]);
    assert_eq!(r.q_cohomology, r.oracle_cohomology);
    for c in &r.checks {
        // Tor(Z/3, Z/3) sits in degree 2 and makes the zeta-leg non-injective
        if c.anchor == "lobject-membership" {
            assert!(!c.passed);
        } else {
            assert!(c.passed, "{}: {}", c.anchor, c.witness);
        }
    }
    let art = r.artifacts.as_ref().unwrap();
    let bz = verify_bz(art, 2).unwrap();
    assert!(bz.rows_exact() && bz.kernel_is_tor());
    assert_eq!(bz.vertical_kernel.to_string(), "Z/3");
}

#[test]
fn unit_and_zero_laws() {
    let m = moore_complex(3).unwrap();
    let u = CyclicComplex::unit(3);
    let r = smash_pipeline(&m, &u).unwrap();
    assert!(r.passed(), "{:?}", r.checks);
    assert_eq!(r.q_cohomology, m.cohomology_table());
    let z = CyclicComplex::zero(3);
    let r = smash_pipeline(&m, &z).unwrap();
    assert!(r.passed());
    assert!(r.q_cohomology.iter().all(|x| x.is_zero()));
}

#[test]
fn special_case_on_moore() {
    let m = moore_complex(3).unwrap();
    for s in 0..4 {
        for t in 0..4 {
            let r = special_case_differential(&m, s, &m, t).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }
}

#[test]
fn random_pairs() {
    let b = Bounds { max_rank: 3, max_exp: 3 };
    for seed in 0..12 {
        let mut g = rng(seed);
        let c = random_complex(&mut g, 3, b, seed % 2 == 0);
        let ct = random_complex(&mut g, 3, b, seed % 2 == 0);
        let r = smash_pipeline(&c, &ct).unwrap();
        assert_eq!(r.q_cohomology, r.oracle_cohomology);
        for ch in &r.checks {
            if ch.anchor != "lobject-membership" {
                assert!(ch.passed, "seed {seed} {}: {}", ch.anchor, ch.witness);
            }
        }
    }
}
