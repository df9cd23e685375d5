//! Edges of homotopy Kan extensions, in both slice forms.

use serde::Serialize;

use super::tot::{holkan_cx, pushforward};
use crate::complexes::ChainMap;
use crate::diagrams::CxDiagram;
use crate::error::Result;
use crate::posets::{b_poset, p_edge, PosetMap};

#[derive(Clone, Debug, Serialize)]
pub struct EdgeReport {
    pub source: String,
    pub target: String,
    /// the edge of `holkan_f X` is literally `holkan_{p_d^{d'}}` of the slice restriction
    pub slice_form_equal: bool,
    /// pushforward along `r_B` is a chain map at both ends and commutes with the edges
    pub b_form_natural: bool,
    /// and is a quasi-isomorphism at both ends
    pub b_form_quasi_iso: bool,
}

impl EdgeReport {
    pub fn passed(&self) -> bool {
        self.slice_form_equal && self.b_form_natural && self.b_form_quasi_iso
    }
}

fn is_chain_map(f: &ChainMap) -> bool {
    ChainMap::new(f.source().clone(), f.target().clone(), f.comps().to_vec()).is_ok()
}

pub fn edge_check(f: &PosetMap, x: &CxDiagram, d: usize, d2: usize) -> Result<EdgeReport> {
    let p = x.object(0).p();
    let full = holkan_cx(f, x, p)?;
    let (slice, pe) = p_edge(f, d, d2)?;
    let y = x.restrict(&slice.elements);
    let local = holkan_cx(&pe, &y, p)?;
    let slice_form_equal = local.diagram.object(0) == full.diagram.object(d)
        && local.diagram.object(1) == full.diagram.object(d2)
        && local.diagram.map(0, 1) == full.diagram.map(d, d2);

    let b = b_poset(f, d, d2)?;
    let z = x.pullback(&b.j_b)?;
    let over_b = holkan_cx(&b.p_b, &z, p)?;
    let push: Vec<ChainMap> = (0..2).map(|v| pushforward(&b.r_b, &over_b.tots[v], &local.tots[v])).collect();
    let square_l = local.diagram.map(0, 1).compose_unchecked(&push[0]);
    let square_r = push[1].compose_unchecked(over_b.diagram.map(0, 1));
    let b_form_natural = push.iter().all(is_chain_map) && square_l.equal(&square_r);
    let b_form_quasi_iso = push.iter().all(|m| m.is_quasi_iso());
    Ok(EdgeReport {
        source: f.target().name(d).to_string(),
        target: f.target().name(d2).to_string(),
        slice_form_equal,
        b_form_natural,
        b_form_quasi_iso,
    })
}

/// `edge_check` on every Hasse edge of the target.
pub fn edge_check_all(f: &PosetMap, x: &CxDiagram) -> Result<Vec<EdgeReport>> {
    f.target().hasse().iter().map(|&(d, d2)| edge_check(f, x, d, d2)).collect()
}
