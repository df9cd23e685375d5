use kanlim::diagrams::*;
use kanlim::palgebra::{FpModule, Matrix, ModuleMap, PScalar};
use kanlim::posets::{interval, p_v, square, v_poset, FinPoset, PosetMap};
use std::sync::Arc;

fn z() -> FpModule {
    FpModule::free(3, 1)
}

fn span(f: ModuleMap, g: ModuleMap) -> ModDiagram {
    // V elements: (1,0), (0,0), (0,1)
    let v = v_poset();
    let objs = vec![f.target().clone(), f.source().clone(), g.target().clone()];
    Diagram::from_fn(v, objs, |_, b| if b == 0 { f.clone() } else { g.clone() }).unwrap()
}

#[test]
fn pushout_colimit() {
    let x = span(ModuleMap::zero(&z(), &z()), ModuleMap::identity(&z()));
    let c = strict_colim(&x, &z());
    // (Z ⊕ Z) / (0 ⊕ Z)
    assert_eq!(c.object, z());
    let y = span(ModuleMap::zero(&z(), &z()), ModuleMap::zero(&z(), &z()));
    assert_eq!(strict_colim(&y, &z()).object, FpModule::free(3, 2));
}

#[test]
fn constant_with_maximum() {
    let m = FpModule::new(3, 1, vec![2]);
    let x = Diagram::constant(square(), &m);
    assert_eq!(strict_colim(&x, &m).object, m);
}

#[test]
fn functoriality_is_checked() {
    let sq = square();
    let objs = vec![z(); 4];
    let three = ModuleMap::scalar(&z(), &PScalar::from_int(3)).unwrap();
    let bad = Diagram::from_fn(sq.clone(), objs, |a, b| {
        if sq.name(a) == "(0,0)" && sq.name(b) == "(0,1)" {
            three.clone()
        } else {
            ModuleMap::identity(&z())
        }
    });
    assert!(matches!(bad, Err(kanlim::Error::NotFunctorial(_))));
}

#[test]
fn reedy_examples() {
    let epi = ModuleMap::new(z(), FpModule::cyclic(3, 1), Matrix::from_rows(&[vec![1]])).unwrap();
    let x = Diagram::from_fn(interval(), vec![z(), FpModule::cyclic(3, 1)], |_, _| epi.clone()).unwrap();
    assert!(!is_reedy_cofibrant(&x, &z()).unwrap());
    let y = Diagram::from_fn(interval(), vec![FpModule::zero(3), z()], |_, _| ModuleMap::zero(&FpModule::zero(3), &z())).unwrap();
    assert!(is_reedy_cofibrant(&y, &z()).unwrap());
}

#[test]
fn lkan_from_a_point() {
    let i = interval();
    let pt = Arc::new(FinPoset::point());
    let f = PosetMap::constant(&pt, &i, 1);
    let x = Diagram::constant(pt.clone(), &z());
    let l = strict_lkan(&f, &x, &z()).unwrap();
    assert!(l.diagram.object(0).is_zero());
    assert_eq!(l.diagram.object(1), &z());
    let g = PosetMap::constant(&pt, &i, 0);
    let l = strict_lkan(&g, &x, &z()).unwrap();
    assert!(l.diagram.map(0, 1).is_iso());
    assert!(l.unit(&x, &g).is_ok());
    let id = PosetMap::identity(&i);
    let y = Diagram::from_fn(i.clone(), vec![z(), z()], |_, _| ModuleMap::scalar(&z(), &PScalar::from_int(3)).unwrap()).unwrap();
    assert_eq!(strict_lkan(&id, &y, &z()).unwrap().diagram, y);
}

#[test]
fn pushout_product_corner() {
    // square 0 -> Z, Z -> Z: LKan along p_V at 1 is the pushout corner
    let sq = square();
    let objs: Vec<FpModule> = sq.names().iter().map(|n| if n == "(0,0)" { FpModule::zero(3) } else { z() }).collect();
    let x = Diagram::from_fn(sq.clone(), objs.clone(), |a, b| {
        if objs[a].is_zero() {
            ModuleMap::zero(&objs[a], &objs[b])
        } else {
            ModuleMap::identity(&z())
        }
    })
    .unwrap();
    let l = strict_lkan(&p_v(), &x, &z()).unwrap();
    assert_eq!(l.diagram.object(0), &FpModule::free(3, 2));
    assert_eq!(l.diagram.object(1), &z());
}

#[test]
fn tensor_with_unit() {
    let m = FpModule::new(3, 1, vec![1]);
    let x = span(ModuleMap::zero(&m, &m), ModuleMap::identity(&m));
    let pt = Arc::new(FinPoset::point());
    let u = Diagram::constant(pt, &z());
    let t = diagram_tensor(&x, &u).unwrap();
    assert_eq!(t.diagram.objects(), x.objects());
    let zero = Diagram::constant(Arc::new(FinPoset::point()), &FpModule::zero(3));
    assert!(diagram_tensor(&x, &zero).unwrap().diagram.is_zero());
}
