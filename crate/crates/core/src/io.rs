//! JSON encoding of modules, maps, complexes, chain maps, diagrams and
//! spectral sequence pages.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::complexes::{period, ChainMap, CyclicComplex};
use crate::diagrams::{CxDiagram, Diagram};
use crate::error::{Error, Result};
use crate::palgebra::{FpModule, Matrix, ModuleMap, PScalar};
use crate::posets::{FinPoset, PosetJson};

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

fn int_json(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

fn int_from(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| bad(format!("{n} is not an integer"))),
        Value::String(s) => s.parse().map_err(|_| bad(format!("{s:?} is not an integer"))),
        _ => Err(bad(format!("expected an integer, got {v}"))),
    }
}

pub fn module_to_json(m: &FpModule) -> Value {
    json!({ "rank": m.rank(), "torsion": m.torsion() })
}

pub fn module_from_json(v: &Value, p: u64) -> Result<FpModule> {
    let rank = v["rank"].as_u64().ok_or_else(|| bad("module needs a \"rank\""))? as usize;
    let torsion = match &v["torsion"] {
        Value::Null => Vec::new(),
        Value::Array(ts) => ts
            .iter()
            .map(|t| t.as_u64().filter(|&e| e > 0).map(|e| e as u32).ok_or_else(|| bad("torsion exponents are positive integers")))
            .collect::<Result<_>>()?,
        _ => return Err(bad("\"torsion\" must be an array")),
    };
    Ok(FpModule::new(p, rank, torsion))
}

/// Row-major `[num, den]` pairs; integers beyond `i64` become strings.
pub fn map_to_json(f: &ModuleMap) -> Value {
    let entries: Vec<Value> =
        f.matrix().entries().iter().map(|c| json!([int_json(&c.numer()), int_json(&c.denom())])).collect();
    json!({ "entries": entries })
}

pub fn map_from_json(v: &Value, src: &FpModule, tgt: &FpModule) -> Result<ModuleMap> {
    let (rows, cols) = (tgt.ngens(), src.ngens());
    let entries = match &v["entries"] {
        Value::Array(es) => es,
        Value::Null if rows * cols == 0 => return Ok(ModuleMap::zero(src, tgt)),
        _ => return Err(bad("map needs \"entries\"")),
    };
    if entries.len() != rows * cols {
        return Err(bad(format!("expected {} entries for a {rows}x{cols} matrix, got {}", rows * cols, entries.len())));
    }
    let data = entries
        .iter()
        .map(|e| match e {
            Value::Array(nd) if nd.len() == 2 => {
                let (n, d) = (int_from(&nd[0])?, int_from(&nd[1])?);
                if d == BigInt::from(0) {
                    return Err(bad("zero denominator"));
                }
                let c = PScalar::from_bigint(n).div(&PScalar::from_bigint(d));
                if !c.is_local(src.p()) {
                    return Err(Error::InvalidScalar(c.to_string(), src.p()));
                }
                Ok(c)
            }
            Value::Number(_) | Value::String(_) => Ok(PScalar::from_bigint(int_from(e)?)),
            _ => Err(bad(format!("bad matrix entry {e}"))),
        })
        .collect::<Result<Vec<_>>>()?;
    ModuleMap::new(src.clone(), tgt.clone(), Matrix::from_vec(rows, cols, data))
}

pub fn complex_to_json(c: &CyclicComplex) -> Value {
    json!({
        "p": c.p(),
        "N": c.period(),
        "modules": c.modules().iter().map(module_to_json).collect::<Vec<_>>(),
        "differentials": (0..c.period()).map(|k| map_to_json(c.diff(k))).collect::<Vec<_>>(),
    })
}

pub fn complex_from_json(v: &Value) -> Result<CyclicComplex> {
    let p = v["p"].as_u64().ok_or_else(|| bad("complex needs \"p\""))?;
    if !crate::palgebra::is_odd_prime(p) {
        return Err(bad(format!("{p} is not an odd prime")));
    }
    let n = period(p);
    if let Some(nn) = v["N"].as_u64() {
        if nn as usize != n {
            return Err(Error::InvalidComplex(format!("N = {nn} but 2p - 2 = {n}")));
        }
    }
    let mods = v["modules"].as_array().ok_or_else(|| bad("complex needs \"modules\""))?;
    let diffs = v["differentials"].as_array().ok_or_else(|| bad("complex needs \"differentials\""))?;
    if mods.len() != n || diffs.len() != n {
        return Err(Error::InvalidComplex(format!("expected {n} modules and differentials")));
    }
    let modules: Vec<FpModule> = mods.iter().map(|m| module_from_json(m, p)).collect::<Result<_>>()?;
    let maps = (0..n).map(|k| map_from_json(&diffs[k], &modules[k], &modules[(k + 1) % n])).collect::<Result<_>>()?;
    CyclicComplex::new(p, modules, maps)
}

pub fn chain_map_to_json(f: &ChainMap) -> Value {
    json!({ "components": (0..f.source().period()).map(|k| map_to_json(f.comp(k))).collect::<Vec<_>>() })
}

pub fn chain_map_from_json(v: &Value, src: &CyclicComplex, tgt: &CyclicComplex) -> Result<ChainMap> {
    let comps = v["components"].as_array().ok_or_else(|| bad("chain map needs \"components\""))?;
    let n = src.period();
    if comps.len() != n {
        return Err(bad(format!("expected {n} components")));
    }
    let maps = (0..n).map(|k| map_from_json(&comps[k], src.module(k), tgt.module(k))).collect::<Result<_>>()?;
    ChainMap::new(src.clone(), tgt.clone(), maps)
}

/// Objects keyed by element name, one map per Hasse edge.
pub fn diagram_to_json(x: &CxDiagram) -> Value {
    let shape = x.shape();
    let mut objects = Map::new();
    for (i, c) in x.objects().iter().enumerate() {
        objects.insert(shape.name(i).to_string(), complex_to_json(c));
    }
    let maps: Vec<Value> = shape
        .hasse()
        .iter()
        .map(|&(a, b)| {
            let mut m = chain_map_to_json(x.map(a, b));
            m["source"] = json!(shape.name(a));
            m["target"] = json!(shape.name(b));
            m
        })
        .collect();
    json!({ "poset": shape.to_json(), "objects": objects, "maps": maps })
}

pub fn diagram_from_json(v: &Value) -> Result<CxDiagram> {
    let pj: PosetJson = serde_json::from_value(v["poset"].clone()).map_err(|e| bad(format!("poset: {e}")))?;
    let shape = Arc::new(FinPoset::from_json(&pj)?);
    let objs = v["objects"].as_object().ok_or_else(|| bad("diagram needs \"objects\""))?;
    let objects: Vec<CyclicComplex> = shape
        .names()
        .iter()
        .map(|n| objs.get(n).ok_or_else(|| Error::ElementNotFound(n.clone())).and_then(complex_from_json))
        .collect::<Result<_>>()?;
    let mut edges = HashMap::new();
    for m in v["maps"].as_array().ok_or_else(|| bad("diagram needs \"maps\""))? {
        let name = |key: &str| m[key].as_str().ok_or_else(|| bad(format!("map needs \"{key}\""))).and_then(|s| shape.index_of(s));
        let (a, b) = (name("source")?, name("target")?);
        edges.insert((a, b), chain_map_from_json(m, &objects[a], &objects[b])?);
    }
    if let Some(&(a, b)) = shape.hasse().iter().find(|e| !edges.contains_key(e)) {
        return Err(bad(format!("no map given for {} -> {}", shape.name(a), shape.name(b))));
    }
    Diagram::from_fn(shape, objects, |a, b| edges[&(a, b)].clone())
}

/// Nonzero cells of a page indexed `[k][n]`, placed at `s = -k`, `t = n`.
pub fn page_to_json(r: usize, page: &[Vec<FpModule>]) -> Value {
    let cells: Vec<Value> = page
        .iter()
        .enumerate()
        .flat_map(|(k, col)| {
            col.iter().enumerate().filter(|(_, m)| !m.is_zero()).map(move |(n, m)| {
                json!({ "s": -(k as i64), "t": n, "module": module_to_json(m) })
            })
        })
        .collect();
    json!({ "r": r, "cells": cells })
}
