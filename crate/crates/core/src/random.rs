//! Seeded random instances: modules, complexes, chain maps, posets,
//! monotone maps and diagrams.

use std::collections::HashMap;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complexes::{ChainMap, ComplexSum, CyclicComplex};
use crate::diagrams::{strict_colim, CxDiagram, Diagram, ModDiagram};
use crate::error::Result;
use crate::palgebra::{DirectSum, FpModule, Matrix, ModuleMap, PScalar};
use crate::posets::{FinPoset, PosetMap};

pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Size bounds: generators per module and torsion exponents.
#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    pub max_rank: usize,
    pub max_exp: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_rank: 3, max_exp: 3 }
    }
}

fn unit(rng: &mut Rng8, p: u64) -> PScalar {
    let choices: Vec<i64> = (1i64..=4).flat_map(|k| [k, -k]).filter(|k| k.unsigned_abs() % p != 0).collect();
    PScalar::from_int(*choices.choose(rng).unwrap())
}

fn small(rng: &mut Rng8) -> i64 {
    rng.gen_range(-2..=2)
}

pub fn random_module(rng: &mut Rng8, p: u64, b: Bounds, flat: bool) -> FpModule {
    let n = rng.gen_range(0..=b.max_rank);
    let free = if flat { n } else { rng.gen_range(0..=n) };
    let torsion = (free..n).map(|_| rng.gen_range(1..=b.max_exp.max(1))).collect();
    FpModule::new(p, free, torsion)
}

/// A product of unit scalings and elementary operations `g_i += c g_j`
/// allowed by the orders of the generators.
pub fn random_automorphism(rng: &mut Rng8, m: &FpModule) -> ModuleMap {
    let p = m.p();
    let k = m.ngens();
    let mut a = Matrix::identity(k);
    if k == 0 {
        return ModuleMap::identity(m);
    }
    for i in 0..k {
        a.set(i, i, unit(rng, p));
    }
    for _ in 0..2 * k {
        let (i, j) = (rng.gen_range(0..k), rng.gen_range(0..k));
        if i == j {
            continue;
        }
        // entry (i, j) sends generator j to a multiple of generator i
        let c = match (m.order(i), m.order(j)) {
            (None, Some(_)) => continue,
            (Some(ei), Some(ej)) if ei > ej => PScalar::p_power(p, (ei - ej) as i32),
            _ => PScalar::one(),
        };
        let c = &c * &PScalar::from_int(small(rng));
        let mut e = Matrix::identity(k);
        e.set(i, j, c);
        a = e.mul(&a);
    }
    let f = ModuleMap::new(m.clone(), m.clone(), a).expect("elementary operations are well defined");
    debug_assert!(f.is_iso());
    f
}

/// One indecomposable-ish building block of a complex.
fn piece(rng: &mut Rng8, p: u64, b: Bounds, flat: bool, deg: usize) -> CyclicComplex {
    let e = |rng: &mut Rng8| rng.gen_range(1..=b.max_exp.max(1));
    let z = FpModule::free(p, 1);
    let kind = if flat { rng.gen_range(0..2) } else { rng.gen_range(0..5) };
    match kind {
        0 => CyclicComplex::concentrated(&z, deg as i64),
        1 => {
            let c = rng.gen_range(0..=b.max_exp);
            let f = ModuleMap::scalar(&z, &PScalar::p_power(p, c as i32)).unwrap();
            CyclicComplex::two_term(&f, deg as i64)
        }
        2 => CyclicComplex::concentrated(&FpModule::cyclic(p, e(rng)), deg as i64),
        3 => {
            let tb = e(rng);
            let c = rng.gen_range(0..tb);
            let f = ModuleMap::new(z, FpModule::cyclic(p, tb), Matrix::from_vec(1, 1, vec![PScalar::p_power(p, c as i32)])).unwrap();
            CyclicComplex::two_term(&f, deg as i64)
        }
        _ => {
            let (ta, tb) = (e(rng), e(rng));
            // p^c : Z/p^a -> Z/p^b needs a + c >= b
            let c = tb.saturating_sub(ta);
            let f = ModuleMap::new(
                FpModule::cyclic(p, ta),
                FpModule::cyclic(p, tb),
                Matrix::from_vec(1, 1, vec![PScalar::p_power(p, c as i32)]),
            )
            .unwrap();
            CyclicComplex::two_term(&f, deg as i64)
        }
    }
}

/// A random complex: a sum of small pieces with each degree scrambled by
/// a random automorphism.
pub fn random_complex(rng: &mut Rng8, p: u64, b: Bounds, flat: bool) -> CyclicComplex {
    let n = crate::complexes::period(p);
    let mut parts = Vec::new();
    let mut size = vec![0usize; n];
    for _ in 0..rng.gen_range(0..=n * b.max_rank) {
        let deg = rng.gen_range(0..n);
        let c = piece(rng, p, b, flat, deg);
        if (0..n).all(|k| size[k] + c.module(k).ngens() <= b.max_rank) {
            for (k, s) in size.iter_mut().enumerate() {
                *s += c.module(k).ngens();
            }
            parts.push(c);
        }
    }
    if parts.is_empty() {
        return CyclicComplex::zero(p);
    }
    let sum = ComplexSum::new(p, &parts).complex;
    scramble(rng, &sum)
}

/// `g_{n+1} d^n g_n^{-1}` for random automorphisms `g`.
pub fn scramble(rng: &mut Rng8, c: &CyclicComplex) -> CyclicComplex {
    let n = c.period();
    let g: Vec<ModuleMap> = (0..n).map(|k| random_automorphism(rng, c.module(k))).collect();
    let diffs = (0..n)
        .map(|k| g[(k + 1) % n].compose_unchecked(&c.diff(k).compose_unchecked(&g[k].inverse().unwrap())))
        .collect();
    CyclicComplex::new(c.p(), c.modules().to_vec(), diffs).expect("conjugate differentials square to zero")
}

/// A random chain map out of a random complex.
pub fn random_chain_map(rng: &mut Rng8, p: u64, b: Bounds, flat: bool) -> ChainMap {
    let half = Bounds { max_rank: (b.max_rank / 2).max(1), ..b };
    let x = random_complex(rng, p, half, flat);
    match rng.gen_range(0..5) {
        0 => ChainMap::identity(&x).scale(&PScalar::p_power(p, rng.gen_range(0..=b.max_exp) as i32)),
        1 => {
            let y = random_complex(rng, p, half, flat);
            ComplexSum::new(p, &[x, y]).injection(0)
        }
        2 => {
            let y = random_complex(rng, p, half, flat);
            ComplexSum::new(p, &[x, y]).projection(0)
        }
        3 => {
            let y = random_complex(rng, p, half, flat);
            ChainMap::zero(&x, &y)
        }
        _ => {
            let y = random_complex(rng, p, half, flat);
            let s = ComplexSum::new(p, &[x, y]);
            s.injection(0).scale(&PScalar::from_int(p as i64))
        }
    }
}

/// A random poset on at most `max` elements named `x0, x1, ...`.
pub fn random_poset(rng: &mut Rng8, max: usize) -> Arc<FinPoset> {
    let n = rng.gen_range((max / 2).max(1)..=max.max(1));
    let density = rng.gen_range(0.25..0.75);
    let names = (0..n).map(|i| format!("x{i}")).collect();
    let mut rel = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                rel.push((i, j));
            }
        }
    }
    Arc::new(FinPoset::from_relations(names, &rel).expect("relations along a fixed order are acyclic"))
}

/// A random monotone map out of `src`: the identity, a map to a point, a
/// cut of a linear extension onto a chain, or the identity onto a coarser
/// order.
pub fn random_monotone(rng: &mut Rng8, src: &Arc<FinPoset>) -> PosetMap {
    let n = src.len();
    match rng.gen_range(0..4) {
        0 => PosetMap::identity(src),
        1 => PosetMap::constant(src, &Arc::new(FinPoset::point()), 0),
        2 => {
            let k = rng.gen_range(1..=n);
            let mut cuts: Vec<usize> = (0..n).map(|_| rng.gen_range(0..k)).collect();
            cuts.sort_unstable();
            let names: Vec<String> = (0..k).map(|i| i.to_string()).collect();
            let rel: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
            let chain = Arc::new(FinPoset::from_relations(names, &rel).unwrap());
            let mut map = vec![0; n];
            for (pos, &c) in src.topological_order().iter().enumerate() {
                map[c] = cuts[pos];
            }
            PosetMap::new(src.clone(), chain, map).expect("cuts of a linear extension are monotone")
        }
        _ => {
            let topo = src.topological_order();
            let mut rel: Vec<(usize, usize)> = src.hasse().to_vec();
            for i in 0..n {
                for j in i + 1..n {
                    if rng.gen_bool(0.2) {
                        rel.push((topo[i], topo[j]));
                    }
                }
            }
            let coarse = Arc::new(FinPoset::from_relations(src.names().to_vec(), &rel).unwrap());
            PosetMap::new(src.clone(), coarse, (0..n).collect()).expect("a coarser order")
        }
    }
}

/// A Reedy cofibrant module diagram: `X_c = L_c ⊕ M_c` over the latching
/// object `L_c`, entered by `(p^k, ψ)` with `p^k` only on free latching
/// objects. Every object has at most `max_rank` generators.
pub fn random_reedy_diagram(rng: &mut Rng8, shape: &Arc<FinPoset>, p: u64, b: Bounds) -> Result<ModDiagram> {
    // scaled latching maps can create torsion in later pushouts, so resample;
    // without scaling the diagram is free on the M's and always fits
    for _ in 0..8 {
        if let Some(x) = reedy_attempt(rng, shape, p, b, true)? {
            return Ok(x);
        }
    }
    Ok(reedy_attempt(rng, shape, p, b, false)?.expect("free diagrams fit the budget"))
}

fn reedy_attempt(rng: &mut Rng8, shape: &Arc<FinPoset>, p: u64, b: Bounds, scaled: bool) -> Result<Option<ModDiagram>> {
    let n = shape.len();
    let zero = FpModule::zero(p);
    let mut objects: Vec<FpModule> = vec![zero.clone(); n];
    let mut edges: HashMap<(usize, usize), ModuleMap> = HashMap::new();
    let mut gens = vec![0usize; n];
    for &c in shape.topological_order() {
        let below = shape.strict_down_set(c);
        // M_c lands in every X_u with u >= c
        let load = |u: usize| shape.down_set(u).iter().map(|&x| gens[x]).sum::<usize>();
        let used = shape.up_set(c).into_iter().map(load).max().unwrap_or(0);
        let m = random_module(rng, p, Bounds { max_rank: b.max_rank.saturating_sub(used), ..b }, false);
        gens[c] = m.ngens();
        if below.is_empty() {
            objects[c] = m;
            continue;
        }
        let sub = Arc::new(shape.subposet(&below));
        let objs: Vec<FpModule> = below.iter().map(|&x| objects[x].clone()).collect();
        let part = Diagram::from_fn(sub, objs, |a, bb| edges[&(below[a], below[bb])].clone())?;
        let colim = strict_colim(&part, &zero);
        let l = colim.object.clone();
        if l.ngens() + m.ngens() > b.max_rank {
            return Ok(None);
        }
        let sum = DirectSum::new(p, &[l.clone(), m.clone()]);
        let scale =
            if scaled && l.is_free() && rng.gen_bool(0.3) { PScalar::from_int(p as i64) } else { PScalar::one() };
        let psi = random_map(rng, &l, &m);
        let mono = sum.injection(0).scale(&scale).add(&sum.injection(1).compose_unchecked(&psi))?;
        objects[c] = sum.module.clone();
        for &x in shape.covers_down(c) {
            let pos = below.iter().position(|&y| y == x).unwrap();
            edges.insert((x, c), mono.compose_unchecked(&colim.cocone[pos]));
        }
    }
    Ok(Some(Diagram::from_fn(shape.clone(), objects, |a, bb| edges[&(a, bb)].clone())?))
}

/// A random well-defined map: entries scaled by the needed powers of `p`.
pub fn random_map(rng: &mut Rng8, src: &FpModule, tgt: &FpModule) -> ModuleMap {
    let p = src.p();
    let mut a = Matrix::zeros(tgt.ngens(), src.ngens());
    for i in 0..tgt.ngens() {
        for j in 0..src.ngens() {
            let c = match (tgt.order(i), src.order(j)) {
                (None, Some(_)) => continue,
                (Some(ei), Some(ej)) if ei > ej => PScalar::p_power(p, (ei - ej) as i32),
                _ => PScalar::one(),
            };
            a.set(i, j, &c * &PScalar::from_int(small(rng)));
        }
    }
    ModuleMap::new(src.clone(), tgt.clone(), a).expect("entries respect the orders")
}

/// `X_c = ⊕_{c' >= c} M_{c'}` with projections as edges; usually not
/// Reedy cofibrant. Every object has at most `max_rank` generators.
pub fn random_cofree_diagram(rng: &mut Rng8, shape: &Arc<FinPoset>, p: u64, b: Bounds) -> Result<ModDiagram> {
    let n = shape.len();
    let ups: Vec<Vec<usize>> = (0..n).map(|c| shape.up_set(c)).collect();
    let mut ms = vec![FpModule::zero(p); n];
    for &c in shape.topological_order().iter().rev() {
        let load = |u: usize| ups[u].iter().map(|&x| ms[x].ngens()).sum::<usize>();
        let used = shape.down_set(c).into_iter().map(load).max().unwrap_or(0);
        ms[c] = random_module(rng, p, Bounds { max_rank: b.max_rank.saturating_sub(used), ..b }, false);
    }
    let sums: Vec<DirectSum> =
        ups.iter().map(|u| DirectSum::new(p, &u.iter().map(|&c| ms[c].clone()).collect::<Vec<_>>())).collect();
    let objects = sums.iter().map(|s| s.module.clone()).collect();
    Diagram::from_fn(shape.clone(), objects, |a, bb| {
        let mut acc = ModuleMap::zero(&sums[a].module, &sums[bb].module);
        for (ti, &c) in ups[bb].iter().enumerate() {
            let si = ups[a].iter().position(|&x| x == c).unwrap();
            acc = acc.add(&sums[bb].injection(ti).compose_unchecked(&sums[a].projection(si))).unwrap();
        }
        acc
    })
}

/// A complex diagram `(M --p^e--> M)[k] ⊕ M'[k']` built from a Reedy and a
/// cofree module diagram.
pub fn random_cx_diagram(rng: &mut Rng8, shape: &Arc<FinPoset>, p: u64, b: Bounds) -> Result<CxDiagram> {
    let per = crate::complexes::period(p);
    let half = b.max_rank / 2;
    let m = random_reedy_diagram(rng, shape, p, Bounds { max_rank: half, ..b })?;
    let m2 = random_cofree_diagram(rng, shape, p, Bounds { max_rank: b.max_rank - half, ..b })?;
    let (k, k2) = (rng.gen_range(0..per), rng.gen_range(0..per));
    let e = rng.gen_range(0..=b.max_exp);
    let s = PScalar::p_power(p, e as i32);
    let objects: Vec<CyclicComplex> = (0..shape.len())
        .map(|c| {
            let a = CyclicComplex::two_term(&ModuleMap::identity(m.object(c)).scale(&s), k as i64);
            let bb = CyclicComplex::concentrated(m2.object(c), k2 as i64);
            ComplexSum::new(p, &[a, bb]).complex
        })
        .collect();
    Diagram::from_fn(shape.clone(), objects.clone(), |a, bb| {
        let f = m.map(a, bb);
        let g = m2.map(a, bb);
        let src = ComplexSum::new(p, &[
            CyclicComplex::two_term(&ModuleMap::identity(m.object(a)).scale(&s), k as i64),
            CyclicComplex::concentrated(m2.object(a), k2 as i64),
        ]);
        let tgt = ComplexSum::new(p, &[
            CyclicComplex::two_term(&ModuleMap::identity(m.object(bb)).scale(&s), k as i64),
            CyclicComplex::concentrated(m2.object(bb), k2 as i64),
        ]);
        let comps = (0..per)
            .map(|d| {
                let mut acc = ModuleMap::zero(src.complex.module(d), tgt.complex.module(d));
                if d == k || d == (k + 1) % per {
                    let block = tgt.layouts[d].injection(0).compose_unchecked(&f.compose_unchecked(&src.layouts[d].projection(0)));
                    acc = acc.add(&block).unwrap();
                }
                if d == k2 {
                    let block = tgt.layouts[d].injection(1).compose_unchecked(&g.compose_unchecked(&src.layouts[d].projection(1)));
                    acc = acc.add(&block).unwrap();
                }
                acc
            })
            .collect();
        ChainMap::new(src.complex, tgt.complex, comps).expect("vertexwise maps commute with p^e")
    })
}
