use kanlim::posets::*;
use kanlim::error::Error;
use std::sync::Arc;

#[test]
fn crown_and_butterfly() {
    let c = crown(4);
    assert_eq!((c.len(), c.height(), c.hasse().len()), (8, 1, 8));
    let d = butterfly(4);
    assert_eq!((d.len(), d.hasse().len(), d.height()), (12, 16, 2));
    assert!(matches!(butterfly_literal(4), Err(Error::NotAPoset(_))));
}

#[test]
fn small_posets() {
    let sq = square();
    assert_eq!((sq.len(), sq.height()), (4, 2));
    let v = v_poset();
    assert_eq!(v.names(), &["(1,0)", "(0,0)", "(0,1)"]);
    assert_eq!(v.minimal_elements(), vec![1]);
    assert_eq!(v.hasse().len(), 2);
    let dot = export_dot(&interval());
    assert_eq!(dot.matches("->").count(), 1);
}

#[test]
fn standard_maps_are_monotone() {
    let p = pr(4);
    assert_eq!(p.source().hasse().len(), 128);
    assert!(p.is_monotone());
    assert_eq!(p.slice_to_name("zeta_0").unwrap().elements.len(), 32);
    let i = crown_inclusion(4);
    assert!(i.is_cofinal());
    let pv = p_v();
    assert_eq!(pv.images(), &[0, 0, 0, 1]);
    let (j, pvo) = vo_poset(4, 1);
    assert!(j.is_monotone() && pvo.is_monotone());
    let (_, g, pvy) = vy_poset(4, 1);
    assert!(pvy.compose(&g).unwrap() == pvo);
    assert_eq!(w_poset(4, 0).source().len(), 8);
}

#[test]
fn cofinality() {
    let i = interval();
    let pt = Arc::new(FinPoset::point());
    assert!(!PosetMap::constant(&pt, &i, 0).is_cofinal());
    assert!(PosetMap::constant(&pt, &i, 1).is_cofinal());
    assert!(PosetMap::identity(&crown(4)).is_cofinal());
}

#[test]
fn b_construction() {
    let p = pr(4);
    let d = p.target().index_of("gamma_1").unwrap();
    let d2 = p.target().index_of("zeta_1").unwrap();
    let b = b_poset(&p, d, d2).unwrap();
    assert_eq!(b.poset.len(), b.small.elements.len() + b.big.elements.len());
    let (_, pe) = p_edge(&p, d, d2).unwrap();
    assert!(b.p_b.compose(&b.l_b).unwrap() == pe);
}

#[test]
fn json_round_trip() {
    let d = butterfly(4);
    assert_eq!(FinPoset::from_json(&d.to_json()).unwrap(), *d);
}
