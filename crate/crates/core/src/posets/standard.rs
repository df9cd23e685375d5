use std::sync::Arc;

use super::map::{PosetMap, Slice};
use super::poset::FinPoset;
use crate::error::{Error, Result};

pub fn beta(n: usize) -> String {
    format!("beta_{n}")
}

pub fn gamma(n: usize) -> String {
    format!("gamma_{n}")
}

pub fn zeta(n: usize) -> String {
    format!("zeta_{n}")
}

pub fn pair(a: &str, b: &str) -> String {
    format!("({a},{b})")
}

/// `I = {0 < 1}`.
pub fn interval() -> Arc<FinPoset> {
    Arc::new(FinPoset::from_named_relations(vec!["0".into(), "1".into()], &[("0", "1")]).unwrap())
}

/// `V = {(1,0) > (0,0) < (0,1)}` inside `I × I`.
pub fn v_poset() -> Arc<FinPoset> {
    let ii = interval().product(&interval());
    let elems = ["(1,0)", "(0,0)", "(0,1)"].map(|s| ii.index_of(s).unwrap());
    Arc::new(ii.subposet(&elems))
}

pub fn square() -> Arc<FinPoset> {
    Arc::new(interval().product(&interval()))
}

/// Crown `C_N`: `beta_n` at index `n`, `zeta_n` at `N + n`, with
/// `beta_n <= zeta_n` and `beta_{n+1} <= zeta_n`.
pub fn crown(n: usize) -> Arc<FinPoset> {
    let mut names: Vec<String> = (0..n).map(beta).collect();
    names.extend((0..n).map(zeta));
    let mut rel = Vec::new();
    for k in 0..n {
        rel.push((k, n + k));
        rel.push(((k + 1) % n, n + k));
    }
    Arc::new(FinPoset::from_relations(names, &rel).unwrap())
}

fn butterfly_names(n: usize) -> Vec<String> {
    let mut names: Vec<String> = (0..n).map(beta).collect();
    names.extend((0..n).map(gamma));
    names.extend((0..n).map(zeta));
    names
}

/// `D_N`: `beta_n` at `n`, `gamma_n` at `N + n`, `zeta_n` at `2N + n`, with
/// `beta_n, beta_{n+1} <= gamma_n` and `gamma_n, gamma_{n+1} <= zeta_n`.
pub fn butterfly(n: usize) -> Arc<FinPoset> {
    let mut rel = Vec::new();
    for k in 0..n {
        let k1 = (k + 1) % n;
        rel.push((k, n + k));
        rel.push((k1, n + k));
        rel.push((n + k, 2 * n + k));
        rel.push((n + k1, 2 * n + k));
    }
    Arc::new(FinPoset::from_relations(butterfly_names(n), &rel).unwrap())
}

/// The relation set `beta_{n+1} <= gamma_n, beta_n <= gamma_n,
/// gamma_{n+1} <= beta_n, gamma_n <= zeta_n` taken literally; it has a cycle.
pub fn butterfly_literal(n: usize) -> Result<FinPoset> {
    let mut rel = Vec::new();
    for k in 0..n {
        let k1 = (k + 1) % n;
        rel.push((k1, n + k));
        rel.push((k, n + k));
        rel.push((n + k1, k));
        rel.push((n + k, 2 * n + k));
    }
    FinPoset::from_relations(butterfly_names(n), &rel)
}

fn crown_parts(c: &FinPoset, x: usize) -> (bool, usize) {
    let n = c.len() / 2;
    (x >= n, x % n)
}

/// `pr : C_N × C_N -> D_N` adding indices; mixed pairs go to `gamma`.
pub fn pr(n: usize) -> PosetMap {
    let c = crown(n);
    let cc = Arc::new(c.product(&c));
    let d = butterfly(n);
    let m = c.len();
    let map = (0..cc.len())
        .map(|x| {
            let (za, s) = crown_parts(&c, x / m);
            let (zb, t) = crown_parts(&c, x % m);
            let k = (s + t) % n;
            match (za, zb) {
                (false, false) => k,
                (true, true) => 2 * n + k,
                _ => n + k,
            }
        })
        .collect();
    PosetMap::new(cc, d, map).expect("pr is monotone")
}

/// `i : C_N -> D_N`, `beta_n -> gamma_n`, `zeta_n -> zeta_n`.
pub fn crown_inclusion(n: usize) -> PosetMap {
    let c = crown(n);
    let map = (0..2 * n).map(|x| if x < n { n + x } else { 2 * n + (x - n) }).collect();
    PosetMap::new(c, butterfly(n), map).expect("i is monotone")
}

/// `p_V : I × I -> I`, only `(1,1)` goes to 1.
pub fn p_v() -> PosetMap {
    let sq = square();
    let i = interval();
    PosetMap::from_names(sq, i, |s| if s == "(1,1)" { "1".into() } else { "0".into() }).expect("p_V is monotone")
}

/// `p_d^{d'} : (C -> d') -> I`, sending `c` to 0 iff `f(c) <= d`.
pub fn p_edge(f: &PosetMap, d: usize, d2: usize) -> Result<(Slice, PosetMap)> {
    if !f.target().leq(d, d2) {
        return Err(Error::InvalidInput(format!("{} is not <= {}", f.target().name(d), f.target().name(d2))));
    }
    let slice = f.slice_to(d2)?;
    let map = slice.elements.iter().map(|&c| usize::from(!f.target().leq(f.apply(c), d))).collect();
    let p = PosetMap::new(slice.poset.clone(), interval(), map)?;
    Ok((slice, p))
}

/// `B = (C -> d) × I ⊔ (C -> d')` glued along `(C -> d) × {1}`, with its maps.
#[derive(Clone, Debug)]
pub struct BPoset {
    pub poset: Arc<FinPoset>,
    /// `B -> (C -> d')`
    pub r_b: PosetMap,
    /// `(C -> d') -> B`, left adjoint of `r_b`: `C -> d` onto the `× {0}` copy
    pub l_b: PosetMap,
    pub p_b: PosetMap,
    /// `B -> C`
    pub j_b: PosetMap,
    pub small: Slice,
    pub big: Slice,
}

pub fn b_poset(f: &PosetMap, d: usize, d2: usize) -> Result<BPoset> {
    if !f.target().leq(d, d2) {
        return Err(Error::InvalidInput(format!("{} is not <= {}", f.target().name(d), f.target().name(d2))));
    }
    let small = f.slice_to(d)?;
    let big = f.slice_to(d2)?;
    let c = f.source();
    let k = small.elements.len();
    // elements: (c,0) for c in C -> d, then C -> d'
    let mut names: Vec<String> = small.elements.iter().map(|&x| pair(c.name(x), "0")).collect();
    names.extend(big.elements.iter().map(|&x| c.name(x).to_string()));
    let total = names.len();
    let orig = |i: usize| if i < k { small.elements[i] } else { big.elements[i - k] };
    let mut rel = Vec::new();
    for a in 0..total {
        for b in 0..total {
            if a == b {
                continue;
            }
            let ok = match (a < k, b < k) {
                (true, true) | (false, false) | (true, false) => c.leq(orig(a), orig(b)),
                (false, true) => false,
            };
            if ok {
                rel.push((a, b));
            }
        }
    }
    let poset = Arc::new(FinPoset::from_relations(names, &rel)?);
    let big_pos = |x: usize| big.elements.iter().position(|&e| e == x).unwrap();
    let r_b = PosetMap::new(
        poset.clone(),
        big.poset.clone(),
        (0..total).map(|i| big_pos(orig(i))).collect(),
    )?;
    let l_map = big
        .elements
        .iter()
        .enumerate()
        .map(|(i, x)| small.elements.iter().position(|e| e == x).unwrap_or(k + i))
        .collect();
    let l_b = PosetMap::new(big.poset.clone(), poset.clone(), l_map)?;
    let p_b = PosetMap::new(poset.clone(), interval(), (0..total).map(|i| usize::from(i >= k)).collect())?;
    let j_b = big.inclusion.compose(&r_b)?;
    Ok(BPoset { poset, r_b, l_b, p_b, j_b, small, big })
}

/// The slice `C_N × C_N -> zeta_n` along `pr`.
pub fn zeta_slice(n: usize, k: usize) -> Slice {
    let p = pr(n);
    p.slice_to(2 * n + k).unwrap()
}

fn slice_index(slice: &Slice, name: &str) -> usize {
    slice.poset.index_of(name).unwrap()
}

/// `VO_n` inside `C_N × C_N -> zeta_n`: the inclusion `j_VO` and
/// `p_VO = p_{gamma_n}^{zeta_n} ∘ j_VO`.
pub fn vo_poset(n: usize, k: usize) -> (PosetMap, PosetMap) {
    let slice = zeta_slice(n, k);
    let mut elems = Vec::new();
    for s in 0..n {
        let t = (k + n - s) % n;
        for name in [
            pair(&zeta(s), &zeta(t)),
            pair(&zeta(s), &beta(t)),
            pair(&beta(s), &zeta(t)),
            pair(&beta(s), &beta(t)),
            pair(&beta((s + 1) % n), &beta(t)),
        ] {
            let i = slice_index(&slice, &name);
            if !elems.contains(&i) {
                elems.push(i);
            }
        }
    }
    let j = PosetMap::inclusion(&slice.poset, &elems);
    let (_, pe) = p_edge(&pr(n), n + k, 2 * n + k).unwrap();
    let p = pe.compose(&j).unwrap();
    (j, p)
}

pub fn alpha(s: usize, t: usize) -> String {
    format!("alpha_{s}_{t}")
}

/// `VY_n` with `g : VO_n -> VY_n` and `p_VY : VY_n -> I`.
pub fn vy_poset(n: usize, k: usize) -> (Arc<FinPoset>, PosetMap, PosetMap) {
    let mut names = Vec::new();
    let mut rel: Vec<(String, String)> = Vec::new();
    for s in 0..n {
        let t = (k + n - s) % n;
        names.push(alpha(s, t));
        names.push(pair(&zeta(s), &zeta(t)));
        names.push(pair(&beta((s + 1) % n), &beta(t)));
    }
    for s in 0..n {
        let t = (k + n - s) % n;
        rel.push((pair(&beta((s + 1) % n), &beta(t)), alpha(s, t)));
        rel.push((pair(&beta(s), &beta((t + 1) % n)), alpha(s, t)));
        rel.push((alpha(s, t), pair(&zeta(s), &zeta(t))));
    }
    let relr: Vec<(&str, &str)> = rel.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    let vy = Arc::new(FinPoset::from_named_relations(names, &relr).unwrap());
    let (j, _) = vo_poset(n, k);
    let vo = j.source().clone();
    let g = PosetMap::from_names(vo, vy.clone(), |name| {
        let inner = &name[1..name.len() - 1];
        let (a, b) = inner.split_once(',').unwrap();
        let (la, sa) = a.split_once('_').unwrap();
        let (lb, sb) = b.split_once('_').unwrap();
        let (sa, sb): (usize, usize) = (sa.parse().unwrap(), sb.parse().unwrap());
        match (la, lb) {
            ("zeta", "zeta") => name.to_string(),
            ("beta", "beta") if (sa + sb) % n != k => name.to_string(),
            _ => alpha(sa, sb),
        }
    })
    .expect("g is monotone");
    let p = PosetMap::from_names(vy.clone(), interval(), |name| {
        if name.starts_with("(zeta") {
            "1".into()
        } else {
            "0".into()
        }
    })
    .expect("p_VY is monotone");
    (vy, g, p)
}

/// `W_n = {(zeta_s, zeta_t), (beta_{s+1}, beta_t)}` with its inclusion into
/// the `zeta_n` slice.
pub fn w_poset(n: usize, k: usize) -> PosetMap {
    let slice = zeta_slice(n, k);
    let mut elems = Vec::new();
    for s in 0..n {
        let t = (k + n - s) % n;
        elems.push(slice_index(&slice, &pair(&zeta(s), &zeta(t))));
        elems.push(slice_index(&slice, &pair(&beta((s + 1) % n), &beta(t))));
    }
    PosetMap::inclusion(&slice.poset, &elems)
}

/// Look up a standard poset by name: `I`, `V`, `IxI`, `C_N`, `D_N`.
pub fn by_name(name: &str) -> Result<Arc<FinPoset>> {
    match name {
        "I" => Ok(interval()),
        "V" => Ok(v_poset()),
        "IxI" => Ok(square()),
        _ => {
            let (head, n) = name.split_once('_').ok_or_else(|| Error::InvalidInput(format!("unknown poset {name}")))?;
            let n: usize = n.parse().map_err(|_| Error::InvalidInput(format!("bad index in {name}")))?;
            if n == 0 {
                return Err(Error::InvalidInput("period must be positive".into()));
            }
            match head {
                "C" => Ok(crown(n)),
                "D" => Ok(butterfly(n)),
                _ => Err(Error::InvalidInput(format!("unknown poset {name}"))),
            }
        }
    }
}
