//! The `P̃ / R̃` resolution of module diagrams and derived Kan extensions.

use crate::diagrams::{Diagram, DiagramMap, ModDiagram};
use crate::error::Result;
use crate::palgebra::{DirectSum, FpModule, Matrix, ModuleMap};
use crate::posets::{FinPoset, PosetMap};

/// `Σ_j f_j ∘ π_j` out of a direct sum.
pub(crate) fn copair(sum: &DirectSum, target: &FpModule, maps: &[&ModuleMap]) -> ModuleMap {
    let mut m = Matrix::zeros(target.ngens(), sum.module.ngens());
    for (j, f) in maps.iter().enumerate() {
        for (g, &slot) in sum.pos[j].iter().enumerate() {
            for r in 0..target.ngens() {
                let x = f.matrix().get(r, g);
                if !x.is_zero() {
                    *m.get_mut(r, slot) += x;
                }
            }
        }
    }
    ModuleMap::from_lift(sum.module.clone(), target.clone(), m)
}

/// Summand inclusion between sums indexed by nested lists of labels.
pub(crate) fn summand_inclusion(src: &DirectSum, src_labels: &[usize], tgt: &DirectSum, tgt_labels: &[usize]) -> ModuleMap {
    let mut m = Matrix::zeros(tgt.module.ngens(), src.module.ngens());
    for (i, l) in src_labels.iter().enumerate() {
        let j = tgt_labels.iter().position(|x| x == l).expect("label present in the larger sum");
        for (g, &slot) in src.pos[i].iter().enumerate() {
            m.set(tgt.pos[j][g], slot, crate::palgebra::PScalar::one());
        }
    }
    ModuleMap::from_normalized(src.module.clone(), tgt.module.clone(), m)
}

/// `P̃X` with `(P̃X)_{d'} = ⊕_{d <= d'} X_d` and the counit `P̃X -> X`.
#[derive(Clone, Debug)]
pub struct PTilde {
    pub diagram: ModDiagram,
    pub counit: DiagramMap<FpModule>,
    /// `labels[d']`: the `d <= d'` indexing the summands
    pub labels: Vec<Vec<usize>>,
    pub sums: Vec<DirectSum>,
}

pub fn ptilde(x: &ModDiagram, p: u64) -> Result<PTilde> {
    let shape = x.shape().clone();
    let labels: Vec<Vec<usize>> = (0..shape.len()).map(|d| shape.down_set(d)).collect();
    let sums: Vec<DirectSum> = labels
        .iter()
        .map(|ls| DirectSum::new(p, &ls.iter().map(|&d| x.object(d).clone()).collect::<Vec<_>>()))
        .collect();
    let objects = sums.iter().map(|s| s.module.clone()).collect();
    let diagram = Diagram::from_fn(shape.clone(), objects, |a, b| summand_inclusion(&sums[a], &labels[a], &sums[b], &labels[b]))?;
    let comps = (0..shape.len())
        .map(|d2| {
            let maps: Vec<&ModuleMap> = labels[d2].iter().map(|&d| x.map(d, d2)).collect();
            copair(&sums[d2], x.object(d2), &maps)
        })
        .collect();
    let counit = DiagramMap::new(diagram.clone(), x.clone(), comps)?;
    Ok(PTilde { diagram, counit, labels, sums })
}

/// `R̃X`: the vertexwise kernel of the counit, with its inclusion into `P̃X`.
pub fn rtilde(x: &ModDiagram, p: u64) -> Result<(ModDiagram, DiagramMap<FpModule>)> {
    ptilde(x, p)?.counit.kernel()
}

/// Stages `W_0 = X, W_{k+1} = R̃ W_k` until zero.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub w: Vec<ModDiagram>,
    pub p_tildes: Vec<PTilde>,
    /// `kernels[k] : W_{k+1} -> P̃ W_k`
    pub kernels: Vec<DiagramMap<FpModule>>,
}

impl Resolution {
    pub fn new(x: &ModDiagram, p: u64) -> Result<Resolution> {
        let bound = x.shape().height() + 2;
        let mut w = vec![x.clone()];
        let mut p_tildes = Vec::new();
        let mut kernels = Vec::new();
        while !w.last().unwrap().is_zero() {
            assert!(w.len() <= bound, "resolution longer than the height bound");
            let pt = ptilde(w.last().unwrap(), p)?;
            let (r, mono) = pt.counit.kernel()?;
            p_tildes.push(pt);
            kernels.push(mono);
            w.push(r);
        }
        Ok(Resolution { w, p_tildes, kernels })
    }

    /// Number of nonzero `P̃` stages.
    pub fn length(&self) -> usize {
        self.p_tildes.len()
    }

    /// Vertexwise exactness of `... -> P̃W_1 -> P̃W_0 -> X -> 0`.
    pub fn is_exact(&self, x: &ModDiagram) -> bool {
        for c in 0..x.shape().len() {
            for (k, pt) in self.p_tildes.iter().enumerate() {
                let eps = &pt.counit.comps[c];
                if !eps.is_epi() {
                    return false;
                }
                // kernel of the counit is exactly the image of the next stage
                let (kmod, _) = eps.kernel();
                if kmod != *self.w[k + 1].object(c) {
                    return false;
                }
            }
        }
        true
    }
}

/// Homology `ker(out) / im(inc)` with its structure maps.
#[derive(Clone, Debug)]
pub(crate) struct Homology {
    pub module: FpModule,
    pub kmono: ModuleMap,
    pub epi: ModuleMap,
}

pub(crate) fn homology(out: &ModuleMap, inc: &ModuleMap) -> Homology {
    let (_, kmono) = out.kernel();
    let g = ModuleMap::lift_through_mono(&kmono, inc).expect("consecutive maps compose to zero");
    let (module, epi) = g.cokernel();
    Homology { module, kmono, epi }
}

pub(crate) fn induced_on_homology(h1: &Homology, h2: &Homology, phi: &ModuleMap) -> ModuleMap {
    let lifted = ModuleMap::lift_through_mono(&h2.kmono, &phi.compose_unchecked(&h1.kmono)).expect("chain map preserves cycles");
    ModuleMap::descend_through_epi(&h1.epi, &h2.epi.compose_unchecked(&lifted)).expect("chain map preserves boundaries")
}

/// `(L_s LKan_f) X` for `s = 0 ..= height + 1`, computed from the resolution
/// with `LKan_f(P̃W)_c = ⊕_{f(d) <= c} W_d`.
pub fn derived_lkan_all(f: &PosetMap, x: &ModDiagram, p: u64) -> Result<Vec<ModDiagram>> {
    let res = Resolution::new(x, p)?;
    let source = f.source().clone();
    let target = f.target().clone();
    let smax = source.height() + 1;
    let zero = FpModule::zero(p);
    // L_k(c) for every k and c
    let slices: Vec<Vec<usize>> = (0..target.len()).map(|c| f.slice_elements(c)).collect();
    let stage = |k: usize| -> &ModDiagram { &res.w[k.min(res.w.len() - 1)] };
    let mut sums: Vec<Vec<DirectSum>> = Vec::new();
    for k in 0..=smax + 1 {
        let w = stage(k);
        sums.push(
            slices
                .iter()
                .map(|sl| {
                    let parts: Vec<FpModule> =
                        sl.iter().map(|&d| if k < res.w.len() { w.object(d).clone() } else { zero.clone() }).collect();
                    DirectSum::new(p, &parts)
                })
                .collect(),
        );
    }
    // δ_k : L_k(c) -> L_{k-1}(c)
    let delta = |k: usize, c: usize| -> ModuleMap {
        let src = &sums[k][c];
        let tgt = &sums[k - 1][c];
        if k >= res.w.len() || src.module.is_zero() {
            return ModuleMap::zero(&src.module, &tgt.module);
        }
        let mono = &res.kernels[k - 1];
        let pt = &res.p_tildes[k - 1];
        let sl = &slices[c];
        let mut mats: Vec<(usize, usize, Matrix)> = Vec::new();
        for (j2, &d2) in sl.iter().enumerate() {
            let m = &mono.comps[d2];
            for (li, &d) in pt.labels[d2].iter().enumerate() {
                let proj = pt.sums[d2].projection(li);
                let comp = proj.compose_unchecked(m);
                let j = sl.iter().position(|&e| e == d).expect("slices are down-closed");
                mats.push((j, j2, comp.matrix().clone()));
            }
        }
        let refs: Vec<(usize, usize, &Matrix)> = mats.iter().map(|(a, b, m)| (*a, *b, m)).collect();
        ModuleMap::from_lift(src.module.clone(), tgt.module.clone(), DirectSum::block_matrix(tgt, src, &refs))
    };
    let mut out = Vec::with_capacity(smax + 1);
    for s in 0..=smax {
        let homs: Vec<Homology> = (0..target.len())
            .map(|c| {
                let l = &sums[s][c].module;
                let outm = if s == 0 { ModuleMap::zero(l, &zero) } else { delta(s, c) };
                homology(&outm, &delta(s + 1, c))
            })
            .collect();
        let objects = homs.iter().map(|h| h.module.clone()).collect();
        let diag = Diagram::from_fn(target.clone(), objects, |a, b| {
            let inc = summand_inclusion(&sums[s][a], &slices[a], &sums[s][b], &slices[b]);
            induced_on_homology(&homs[a], &homs[b], &inc)
        })?;
        out.push(diag);
    }
    Ok(out)
}

pub fn derived_lkan(f: &PosetMap, x: &ModDiagram, s: usize, p: u64) -> Result<ModDiagram> {
    let all = derived_lkan_all(f, x, p)?;
    Ok(all.get(s).cloned().unwrap_or_else(|| Diagram::zero(f.target().clone(), &FpModule::zero(p))))
}

/// `L_s colim X`.
pub fn derived_colim(x: &ModDiagram, s: usize, p: u64) -> Result<FpModule> {
    let pt = std::sync::Arc::new(FinPoset::point());
    let f = PosetMap::constant(x.shape(), &pt, 0);
    Ok(derived_lkan(&f, x, s, p)?.object(0).clone())
}
