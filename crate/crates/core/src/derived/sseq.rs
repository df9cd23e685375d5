//! The spectral sequence of the chain-length filtration on a totalization.
//!
//! Part `σ` of `Tot^n` sits in filtration `k = |σ| - 1`. The differential
//! preserves `F_k` and `E_1^k` in total degree `n` is `H^{n+k}` of the
//! stage-`k` complex. Cells are reported as `(s, t) = (-k, n + k mod N)`.

use serde::Serialize;

use super::resolution::derived_lkan_all;
use super::tot::{holkan_cx, Tot};
use crate::complexes::CyclicComplex;
use crate::diagrams::{CxDiagram, Diagram, ModDiagram};
use crate::error::Result;
use crate::palgebra::lattice::{intersect, preimage, subquotient};
use crate::palgebra::{FpModule, Matrix, PScalar};
use crate::posets::PosetMap;

/// Filtration lattices and lifted differentials of one totalization.
#[derive(Clone, Debug)]
pub struct Filtered {
    p: u64,
    period: usize,
    max_stage: usize,
    /// `diffs[n]`: lifted `D^n`
    diffs: Vec<Matrix>,
    rels: Vec<Matrix>,
    /// `stage_of[n][g]`
    stage_of: Vec<Vec<usize>>,
}

impl Filtered {
    pub fn new(tot: &Tot, p: u64) -> Filtered {
        let period = tot.layouts.len();
        let stage_of = (0..period)
            .map(|n| {
                let mut v = vec![0; tot.layouts[n].module.ngens()];
                for (j, pos) in tot.layouts[n].pos.iter().enumerate() {
                    for &g in pos {
                        v[g] = tot.stage(j);
                    }
                }
                v
            })
            .collect();
        Filtered {
            p,
            period,
            max_stage: tot.max_stage(),
            diffs: (0..period).map(|n| tot.complex.diff(n).matrix().clone()).collect(),
            rels: (0..period).map(|n| tot.complex.module(n).relations()).collect(),
            stage_of,
        }
    }

    fn ngens(&self, n: usize) -> usize {
        self.stage_of[n].len()
    }

    /// `F_k` in degree `n`, always containing the relations.
    pub fn f(&self, k: i64, n: usize) -> Matrix {
        let n = n % self.period;
        let gens: Vec<usize> = (0..self.ngens(n)).filter(|&g| (self.stage_of[n][g] as i64) <= k).collect();
        let mut m = Matrix::zeros(self.ngens(n), gens.len());
        for (c, &g) in gens.iter().enumerate() {
            m.set(g, c, PScalar::one());
        }
        m.hstack(&self.rels[n])
    }

    /// `Z_r^k = F_k ∩ D^{-1} F_{k-r}`.
    pub fn z(&self, r: i64, k: i64, n: usize) -> Matrix {
        let n = n % self.period;
        let pre = preimage(&self.diffs[n], &self.f(k - r, n + 1), self.p);
        intersect(&self.f(k, n), &pre, self.p)
    }

    /// `E_r^k = Z_r^k / (Z_{r-1}^{k-1} + D Z_{r-1}^{k+r-1})` in degree `n`.
    pub fn page_cell(&self, r: i64, k: i64, n: usize) -> FpModule {
        let n = n % self.period;
        let prev = (n + self.period - 1) % self.period;
        let g = self.z(r, k, n);
        let b = self.diffs[prev].mul(&self.z(r - 1, k + r - 1, prev));
        let rel = self.z(r - 1, k - 1, n).hstack(&b).hstack(&self.rels[n]);
        subquotient(&g, &rel, self.p).module
    }

    /// `E_∞^k = (Z ∩ F_k + B) / (Z ∩ F_{k-1} + B)` in degree `n`.
    pub fn e_inf_cell(&self, k: i64, n: usize) -> FpModule {
        let n = n % self.period;
        let prev = (n + self.period - 1) % self.period;
        let cyc = preimage(&self.diffs[n], &self.rels[(n + 1) % self.period], self.p);
        let bnd = self.diffs[prev].hstack(&self.rels[n]);
        let top = intersect(&cyc, &self.f(k, n), self.p).hstack(&bnd);
        let bot = intersect(&cyc, &self.f(k - 1, n), self.p).hstack(&bnd);
        subquotient(&top, &bot, self.p).module
    }

    /// `[k][n]` table of `E_r`.
    pub fn page(&self, r: i64) -> Vec<Vec<FpModule>> {
        (0..=self.max_stage).map(|k| (0..self.period).map(|n| self.page_cell(r, k as i64, n)).collect()).collect()
    }

    pub fn e_inf(&self) -> Vec<Vec<FpModule>> {
        (0..=self.max_stage).map(|k| (0..self.period).map(|n| self.e_inf_cell(k as i64, n)).collect()).collect()
    }
}

/// Pages of one totalization, indexed `[k][n]` with `n` the total degree.
#[derive(Clone, Debug, Serialize)]
pub struct Pages {
    pub period: usize,
    pub max_stage: usize,
    pub e1: Vec<Vec<FpModule>>,
    pub e2: Vec<Vec<FpModule>>,
    /// `E_{h+1}` with `h` the largest filtration index
    pub e_last: Vec<Vec<FpModule>>,
    pub e_inf: Vec<Vec<FpModule>>,
    pub abutment: Vec<FpModule>,
}

impl Pages {
    pub fn compute(tot: &Tot, p: u64) -> Pages {
        let f = Filtered::new(tot, p);
        let h = f.max_stage as i64;
        Pages {
            period: f.period,
            max_stage: f.max_stage,
            e1: f.page(1),
            e2: f.page(2),
            e_last: f.page(h + 1),
            e_inf: f.e_inf(),
            abutment: tot.complex.cohomology_table(),
        }
    }

    /// `(s, t)` of filtration `k`, total degree `n`.
    pub fn cell(&self, k: usize, n: usize) -> (i64, usize) {
        (-(k as i64), (n + k) % self.period)
    }

    /// `E_{h+1} = E_∞`, and in each total degree the graded pieces of `E_∞`
    /// have the rank and length of the abutment.
    pub fn converges(&self) -> bool {
        if self.e_last != self.e_inf {
            return false;
        }
        (0..self.period).all(|n| {
            let rank: usize = self.e_inf.iter().map(|row| row[n].rank()).sum();
            let len: u32 = self.e_inf.iter().map(|row| row[n].torsion().iter().sum::<u32>()).sum();
            rank == self.abutment[n].rank() && len == self.abutment[n].torsion().iter().sum::<u32>()
        })
    }
}

/// `H^t X` as a module diagram.
pub fn cohomology_diagram(x: &CxDiagram, t: usize, p: u64) -> Result<ModDiagram> {
    let objects = x.objects().iter().map(|c: &CyclicComplex| c.cohomology(t)).collect();
    let _ = p;
    Diagram::from_fn(x.shape().clone(), objects, |a, b| x.map(a, b).on_cohomology(t))
}

/// Spectral sequence of `holkan_f X` at every target vertex.
#[derive(Clone, Debug, Serialize)]
pub struct SseqReport {
    pub vertices: Vec<String>,
    pub pages: Vec<Pages>,
    /// `E_2^{-k}` in total degree `n` against `L_k LKan_f H^{n+k} X`
    pub e2_matches_derived: bool,
    pub converges: bool,
}

pub fn sseq_pages(f: &PosetMap, x: &CxDiagram, p: u64) -> Result<SseqReport> {
    let hl = holkan_cx(f, x, p)?;
    let pages: Vec<Pages> = hl.tots.iter().map(|t| Pages::compute(t, p)).collect();
    let period = crate::complexes::period(p);
    let derived: Vec<Vec<ModDiagram>> =
        (0..period).map(|t| derived_lkan_all(f, &cohomology_diagram(x, t, p)?, p)).collect::<Result<_>>()?;
    let mut e2_ok = true;
    for (c, pg) in pages.iter().enumerate() {
        for k in 0..=pg.max_stage {
            for n in 0..period {
                let t = (n + k) % period;
                let expect = derived[t].get(k).map(|d| d.object(c).clone()).unwrap_or_else(|| FpModule::zero(p));
                if pg.e2[k][n] != expect {
                    e2_ok = false;
                }
            }
        }
    }
    let converges = pages.iter().all(Pages::converges);
    Ok(SseqReport { vertices: f.target().names().to_vec(), pages, e2_matches_derived: e2_ok, converges })
}
