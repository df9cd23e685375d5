//! Homotopy colimits and left Kan extensions of complex diagrams through the
//! normalized bar construction over strict chains.

use std::collections::HashMap;

use crate::complexes::{ChainMap, CyclicComplex};
use crate::diagrams::{strict_colim, CxDiagram, Diagram};
use crate::error::{Error, Result};
use crate::palgebra::{DirectSum, Matrix, PScalar};
use crate::posets::PosetMap;

fn sign(k: usize) -> PScalar {
    if k.is_multiple_of(2) {
        PScalar::one()
    } else {
        PScalar::from_int(-1)
    }
}

/// All strict chains of a poset, shortest first.
pub fn all_chains(shape: &crate::posets::FinPoset) -> Vec<Vec<usize>> {
    shape.chains().into_iter().flatten().collect()
}

/// `Tot^n = ⊕_σ X_{σ_0}^{n + k(σ)}` with `D = d_X + (-1)^n δ`,
/// `δ = Σ_i (-1)^i ∂_i` and `∂_0` applying `X(σ_0 <= σ_1)`.
#[derive(Clone, Debug)]
pub struct Tot {
    pub complex: CyclicComplex,
    pub chains: Vec<Vec<usize>>,
    /// `layouts[n]` has one part per chain
    pub layouts: Vec<DirectSum>,
    index: HashMap<Vec<usize>, usize>,
}

impl Tot {
    /// Build from a face-closed list of chains.
    pub fn new(x: &CxDiagram, chains: Vec<Vec<usize>>, p: u64) -> Tot {
        let n = crate::complexes::period(p);
        let index: HashMap<Vec<usize>, usize> = chains.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        let layouts: Vec<DirectSum> = (0..n)
            .map(|deg| {
                let parts: Vec<_> =
                    chains.iter().map(|c| x.object(c[0]).module(deg + c.len() - 1).clone()).collect();
                DirectSum::new(p, &parts)
            })
            .collect();
        let mats: Vec<Matrix> = (0..n)
            .map(|deg| {
                let mut owned: Vec<(usize, usize, Matrix)> = Vec::new();
                for (j, c) in chains.iter().enumerate() {
                    let k = c.len() - 1;
                    let xd = x.object(c[0]);
                    owned.push((j, j, xd.diff(deg + k).matrix().clone()));
                    if k == 0 {
                        continue;
                    }
                    for i in 0..=k {
                        let mut face = c.clone();
                        face.remove(i);
                        let t = *index.get(&face).expect("chain lists are closed under faces");
                        let s = &sign(deg) * &sign(i);
                        let m = if i == 0 {
                            x.map(c[0], c[1]).comp((deg + k) % n).matrix().scale(&s)
                        } else {
                            Matrix::identity(xd.module(deg + k).ngens()).scale(&s)
                        };
                        owned.push((t, j, m));
                    }
                }
                let refs: Vec<(usize, usize, &Matrix)> = owned.iter().map(|(a, b, m)| (*a, *b, m)).collect();
                DirectSum::block_matrix(&layouts[(deg + 1) % n], &layouts[deg], &refs)
            })
            .collect();
        let complex = CyclicComplex::from_matrices(p, layouts.iter().map(|l| l.module.clone()).collect(), mats);
        debug_assert!((0..n).all(|k| complex.diff(k + 1).compose_unchecked(complex.diff(k)).is_zero()));
        Tot { complex, chains, layouts, index }
    }

    pub fn position(&self, chain: &[usize]) -> Option<usize> {
        self.index.get(chain).copied()
    }

    /// Chain length minus one of part `j`.
    pub fn stage(&self, j: usize) -> usize {
        self.chains[j].len() - 1
    }

    pub fn max_stage(&self) -> usize {
        self.chains.iter().map(|c| c.len() - 1).max().unwrap_or(0)
    }

    /// Inclusion `Tot_A -> Tot_B` for chain sets `A ⊆ B` over the same diagram.
    pub fn inclusion_into(&self, big: &Tot) -> ChainMap {
        let mats = (0..self.layouts.len())
            .map(|deg| {
                let mut m = Matrix::zeros(big.layouts[deg].module.ngens(), self.layouts[deg].module.ngens());
                for (j, c) in self.chains.iter().enumerate() {
                    let t = big.position(c).expect("chain set is contained in the larger one");
                    for (g, &slot) in self.layouts[deg].pos[j].iter().enumerate() {
                        m.set(big.layouts[deg].pos[t][g], slot, PScalar::one());
                    }
                }
                m
            })
            .collect();
        ChainMap::from_matrices(&self.complex, &big.complex, mats)
    }
}

/// `hocolim X`.
pub fn hocolim_cx(x: &CxDiagram, p: u64) -> Tot {
    Tot::new(x, all_chains(x.shape()), p)
}

/// Vertexwise totalizations of `holkan_f X` with inclusions as edges.
#[derive(Clone, Debug)]
pub struct HoLkan {
    pub diagram: CxDiagram,
    pub tots: Vec<Tot>,
}

/// `(holkan_f X)_c` is the totalization over chains whose top maps to `<= c`.
pub fn holkan_cx(f: &PosetMap, x: &CxDiagram, p: u64) -> Result<HoLkan> {
    if **f.source() != **x.shape() {
        return Err(Error::ShapeMismatch("diagram shape differs from the source of the map".into()));
    }
    let chains = all_chains(x.shape());
    let target = f.target().clone();
    let tots: Vec<Tot> = (0..target.len())
        .map(|c| {
            let sel = chains.iter().filter(|ch| target.leq(f.apply(*ch.last().unwrap()), c)).cloned().collect();
            Tot::new(x, sel, p)
        })
        .collect();
    let objects = tots.iter().map(|t| t.complex.clone()).collect();
    let diagram = Diagram::from_fn(target, objects, |a, b| tots[a].inclusion_into(&tots[b]))?;
    Ok(HoLkan { diagram, tots })
}

/// Chain map of totalizations induced by a natural transformation.
pub fn tot_map(phi: &crate::diagrams::DiagramMap<CyclicComplex>, src: &Tot, tgt: &Tot) -> ChainMap {
    let n = src.layouts.len();
    let mats = (0..n)
        .map(|deg| {
            let mut owned = Vec::new();
            for (j, c) in src.chains.iter().enumerate() {
                let t = tgt.position(c).expect("same chain sets");
                owned.push((t, j, phi.comps[c[0]].comp((deg + c.len() - 1) % n).matrix().clone()));
            }
            let refs: Vec<(usize, usize, &Matrix)> = owned.iter().map(|(a, b, m)| (*a, *b, m)).collect();
            DirectSum::block_matrix(&tgt.layouts[deg], &src.layouts[deg], &refs)
        })
        .collect();
    ChainMap::from_matrices(&src.complex, &tgt.complex, mats)
}

/// Pushforward `Tot_B(r^* Y) -> Tot_C(Y)` along a monotone `r : B -> C`.
/// Chains whose image is degenerate go to zero.
pub fn pushforward(r: &PosetMap, src: &Tot, tgt: &Tot) -> ChainMap {
    let n = src.layouts.len();
    let mats = (0..n)
        .map(|deg| {
            let mut m = Matrix::zeros(tgt.layouts[deg].module.ngens(), src.layouts[deg].module.ngens());
            for (j, c) in src.chains.iter().enumerate() {
                let img: Vec<usize> = c.iter().map(|&b| r.apply(b)).collect();
                if img.windows(2).any(|w| w[0] == w[1]) {
                    continue;
                }
                let t = tgt.position(&img).expect("image chain lies in the target chain set");
                for (g, &slot) in src.layouts[deg].pos[j].iter().enumerate() {
                    m.set(tgt.layouts[deg].pos[t][g], slot, PScalar::one());
                }
            }
            m
        })
        .collect();
    ChainMap::from_matrices(&src.complex, &tgt.complex, mats)
}

/// Augmentation `hocolim X -> colim X`: the cocone on chains of length one,
/// zero elsewhere.
pub fn augmentation(x: &CxDiagram, tot: &Tot, p: u64) -> (crate::diagrams::Colimit<CyclicComplex>, ChainMap) {
    let colim = strict_colim(x, &CyclicComplex::zero(p));
    let n = tot.layouts.len();
    let mats = (0..n)
        .map(|deg| {
            let mut owned = Vec::new();
            for (j, c) in tot.chains.iter().enumerate() {
                if c.len() == 1 {
                    owned.push((0usize, j, colim.cocone[c[0]].comp(deg).matrix().clone()));
                }
            }
            let tl = DirectSum::new(p, &[colim.object.module(deg).clone()]);
            let refs: Vec<(usize, usize, &Matrix)> = owned.iter().map(|(a, b, m)| (*a, *b, m)).collect();
            DirectSum::block_matrix(&tl, &tot.layouts[deg], &refs)
        })
        .collect();
    let eps = ChainMap::from_matrices(&tot.complex, &colim.object, mats);
    (colim, eps)
}
