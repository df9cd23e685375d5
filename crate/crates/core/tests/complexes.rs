use kanlim::complexes::*;
use kanlim::palgebra::{FpModule, ModuleMap, PScalar};

fn z3() -> FpModule {
    FpModule::free(3, 1)
}

fn t(e: u32) -> FpModule {
    FpModule::cyclic(3, e)
}

fn table(ms: &[FpModule]) -> Vec<String> {
    ms.iter().map(|m| m.to_string()).collect()
}

#[test]
fn moore_cohomology() {
    let m = moore_complex(3).unwrap();
    assert_eq!(m.cohomology_table(), vec![FpModule::zero(3), t(1), FpModule::zero(3), FpModule::zero(3)]);
    assert!(CyclicComplex::zero(3).is_acyclic());
    let id = CyclicComplex::two_term(&ModuleMap::identity(&z3()), 2);
    assert!(id.is_acyclic());
    assert!(moore_complex(5).is_err());
}

#[test]
fn rejects_nonzero_square() {
    let one = ModuleMap::identity(&z3());
    let mut diffs = vec![one.clone(), one];
    let zero = ModuleMap::zero(&z3(), &z3());
    diffs.push(zero.clone());
    diffs.push(zero);
    assert!(CyclicComplex::from_diffs(3, diffs).is_err());
}

#[test]
fn shifts() {
    let m = moore_complex(3).unwrap();
    assert_eq!(m.shift(1).cohomology(0), t(1));
    assert_eq!(m.shift(4), m);
    assert_eq!(m.shift(1).shift(-1), m);
}

#[test]
fn cones() {
    let u = CyclicComplex::unit(3);
    let three = ChainMap::identity(&u).scale(&PScalar::from_int(3));
    let c = mapping_cone(&three);
    assert_eq!(table(&c.complex.cohomology_table()), vec!["Z/3", "0", "0", "0"]);
    assert!(mapping_cone(&ChainMap::identity(&u)).complex.is_acyclic());
    let m = moore_complex(3).unwrap();
    let to_zero = ChainMap::zero(&m, &CyclicComplex::zero(3));
    assert_eq!(mapping_cone(&to_zero).complex.cohomology_table(), m.shift(1).cohomology_table());
}

#[test]
fn moore_squared() {
    let m = moore_complex(3).unwrap();
    let mm = tensor_cyclic(&m, &m).unwrap();
    assert_eq!(table(mm.modules()), vec!["Z_(3)", "Z_(3)^2", "Z_(3)", "0"]);
    assert_eq!(table(&mm.cohomology_table()), vec!["0", "Z/3", "Z/3", "0"]);
    assert_eq!(kunneth_oracle(&m, &m).unwrap(), mm.cohomology_table());
    let u = CyclicComplex::unit(3);
    assert_eq!(tensor_cyclic(&m, &u).unwrap(), m);
    assert!(tensor_cyclic(&m, &CyclicComplex::zero(3)).unwrap().is_zero());
}

#[test]
fn quasi_isos() {
    let m = moore_complex(3).unwrap();
    assert!(ChainMap::identity(&m).scale(&PScalar::from_int(2)).is_quasi_iso());
    assert!(!ChainMap::zero(&CyclicComplex::zero(3), &m).is_quasi_iso());
}

#[test]
fn flat_models() {
    let c = CyclicComplex::concentrated(&t(1), 1);
    let r = flat_replacement(&c);
    assert!(r.complex.is_flat() && r.map.is_quasi_iso());
    assert_eq!(r.complex.module(0), &z3());
    assert_eq!(r.complex.module(1), &z3());
    assert_eq!(r.complex.diff(0).matrix().get(0, 0), &PScalar::from_int(3));
    let r2 = flat_replacement_with_disks(&c);
    assert!(r2.complex.is_flat() && r2.map.is_quasi_iso());
    assert!(flat_replacement(&CyclicComplex::zero(3)).complex.is_zero());
}

#[test]
fn derived_z3() {
    let c = CyclicComplex::concentrated(&t(1), 0);
    let h = derived_tensor(&c, &c).unwrap().cohomology_table();
    assert_eq!(table(&h), vec!["Z/3", "0", "0", "Z/3"]);
    assert!(kunneth_oracle(&c, &c).is_err());
}
