use std::fmt;

use super::lattice::{kernel_basis, quotient, reduce_rows, solve, subquotient, Subquotient};
use super::matrix::Matrix;
use super::module::FpModule;
use super::scalar::PScalar;
use crate::error::{Error, Result};

/// A homomorphism of canonical modules, as a `target.ngens x source.ngens`
/// matrix on canonical generators. Torsion rows are kept reduced into
/// `[0, p^e)`, so equal maps have equal matrices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModuleMap {
    source: FpModule,
    target: FpModule,
    matrix: Matrix,
}

/// Kernel, image and cokernel of a map with their structure maps.
#[derive(Clone, Debug)]
pub struct Subquotients {
    pub kernel: FpModule,
    pub kernel_mono: ModuleMap,
    pub image: FpModule,
    pub image_mono: ModuleMap,
    pub coimage_epi: ModuleMap,
    pub cokernel: FpModule,
    pub cokernel_epi: ModuleMap,
}

impl ModuleMap {
    /// Checked constructor: shape, locality and well-definedness.
    pub fn new(source: FpModule, target: FpModule, matrix: Matrix) -> Result<Self> {
        source.check_prime(&target)?;
        if matrix.shape() != (target.ngens(), source.ngens()) {
            return Err(Error::ShapeMismatch(format!(
                "matrix {:?} for {} -> {}",
                matrix.shape(),
                source,
                target
            )));
        }
        let p = source.p();
        if let Some(bad) = matrix.entries().iter().find(|x| !x.is_local(p)) {
            return Err(Error::InvalidScalar(bad.to_string(), p));
        }
        let mut matrix = matrix;
        reduce_rows(&mut matrix, &target);
        let f = ModuleMap { source, target, matrix };
        f.check_well_defined()?;
        Ok(f)
    }

    pub(crate) fn from_normalized(source: FpModule, target: FpModule, matrix: Matrix) -> Self {
        debug_assert_eq!(matrix.shape(), (target.ngens(), source.ngens()));
        ModuleMap { source, target, matrix }
    }

    /// Build from a lifted matrix known to be well defined; entries reduced.
    pub(crate) fn from_lift(source: FpModule, target: FpModule, mut matrix: Matrix) -> Self {
        debug_assert_eq!(matrix.shape(), (target.ngens(), source.ngens()));
        reduce_rows(&mut matrix, &target);
        let f = ModuleMap { source, target, matrix };
        debug_assert!(f.check_well_defined().is_ok(), "ill-defined lifted map {f:?}");
        f
    }

    fn check_well_defined(&self) -> Result<()> {
        let p = self.source.p();
        for j in 0..self.source.ngens() {
            let Some(es) = self.source.order(j) else { continue };
            for i in 0..self.target.ngens() {
                let x = self.matrix.get(i, j);
                if x.is_zero() {
                    continue;
                }
                match self.target.order(i) {
                    None => {
                        return Err(Error::MapNotWellDefined(format!(
                            "torsion generator {j} sent to free generator {i}"
                        )))
                    }
                    Some(et) => {
                        let v = x.valuation(p).unwrap();
                        if v + (es as i32) < et as i32 {
                            return Err(Error::MapNotWellDefined(format!(
                                "entry ({i},{j}) = {x} has valuation {v} < {et} - {es}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn zero(source: &FpModule, target: &FpModule) -> Self {
        ModuleMap {
            source: source.clone(),
            target: target.clone(),
            matrix: Matrix::zeros(target.ngens(), source.ngens()),
        }
    }

    pub fn identity(m: &FpModule) -> Self {
        ModuleMap { source: m.clone(), target: m.clone(), matrix: Matrix::identity(m.ngens()) }
    }

    /// Multiplication by a scalar on `m`.
    pub fn scalar(m: &FpModule, c: &PScalar) -> Result<Self> {
        Self::new(m.clone(), m.clone(), Matrix::identity(m.ngens()).scale(c))
    }

    pub fn source(&self) -> &FpModule {
        &self.source
    }

    pub fn target(&self) -> &FpModule {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn p(&self) -> u64 {
        self.source.p()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// `self ∘ first`
    pub fn compose(&self, first: &ModuleMap) -> Result<ModuleMap> {
        if first.target != self.source {
            return Err(Error::CompositionError(format!(
                "target {} of first map differs from source {}",
                first.target, self.source
            )));
        }
        Ok(self.compose_unchecked(first))
    }

    pub(crate) fn compose_unchecked(&self, first: &ModuleMap) -> ModuleMap {
        let mut m = self.matrix.mul(&first.matrix);
        reduce_rows(&mut m, &self.target);
        ModuleMap { source: first.source.clone(), target: self.target.clone(), matrix: m }
    }

    fn check_parallel(&self, other: &ModuleMap) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::CompositionError(format!(
                "maps {} -> {} and {} -> {} are not parallel",
                self.source, self.target, other.source, other.target
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &ModuleMap) -> Result<ModuleMap> {
        self.check_parallel(other)?;
        let mut m = self.matrix.add(&other.matrix);
        reduce_rows(&mut m, &self.target);
        Ok(ModuleMap { source: self.source.clone(), target: self.target.clone(), matrix: m })
    }

    pub fn neg(&self) -> ModuleMap {
        let mut m = self.matrix.neg();
        reduce_rows(&mut m, &self.target);
        ModuleMap { source: self.source.clone(), target: self.target.clone(), matrix: m }
    }

    pub fn sub(&self, other: &ModuleMap) -> Result<ModuleMap> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &PScalar) -> ModuleMap {
        let mut m = self.matrix.scale(c);
        reduce_rows(&mut m, &self.target);
        ModuleMap { source: self.source.clone(), target: self.target.clone(), matrix: m }
    }

    /// Equality modulo the target relations.
    pub fn equal(&self, other: &ModuleMap) -> Result<bool> {
        self.check_parallel(other)?;
        Ok(self.matrix == other.matrix)
    }

    /// Apply to coordinate columns; result reduced.
    pub fn apply(&self, v: &Matrix) -> Matrix {
        let mut m = self.matrix.mul(v);
        reduce_rows(&mut m, &self.target);
        m
    }

    /// Generators of the lifted image lattice `F Z^m + Rel_N`.
    fn image_lattice(&self) -> Matrix {
        self.matrix.hstack(&self.target.relations())
    }

    pub fn kernel(&self) -> (FpModule, ModuleMap) {
        let sq = self.kernel_subquotient();
        let mono = ModuleMap::from_lift(sq.module.clone(), self.source.clone(), sq.reps);
        (sq.module, mono)
    }

    pub(crate) fn kernel_subquotient(&self) -> Subquotient {
        let p = self.p();
        let m = self.source.ngens();
        let k = kernel_basis(&self.image_lattice(), p);
        let top = k.row_range(0, m);
        let rel = self.source.relations();
        subquotient(&top.hstack(&rel), &rel, p)
    }

    pub fn image(&self) -> (FpModule, ModuleMap, ModuleMap) {
        let p = self.p();
        let sq = subquotient(&self.image_lattice(), &self.target.relations(), p);
        let mono = ModuleMap::from_lift(sq.module.clone(), self.target.clone(), sq.reps.clone());
        let epi = ModuleMap::from_lift(self.source.clone(), sq.module.clone(), sq.coords.mul(&self.matrix));
        (sq.module, mono, epi)
    }

    pub fn cokernel(&self) -> (FpModule, ModuleMap) {
        let sq = quotient(self.target.ngens(), &self.image_lattice(), self.p());
        let epi = ModuleMap::from_lift(self.target.clone(), sq.module.clone(), sq.coords);
        (sq.module, epi)
    }

    pub fn subquotients(&self) -> Subquotients {
        let (kernel, kernel_mono) = self.kernel();
        let (image, image_mono, coimage_epi) = self.image();
        let (cokernel, cokernel_epi) = self.cokernel();
        Subquotients { kernel, kernel_mono, image, image_mono, coimage_epi, cokernel, cokernel_epi }
    }

    pub fn is_mono(&self) -> bool {
        self.kernel().0.is_zero()
    }

    pub fn is_epi(&self) -> bool {
        self.cokernel().0.is_zero()
    }

    pub fn is_iso(&self) -> bool {
        self.source == self.target && self.is_mono() && self.is_epi()
    }

    /// Lifted preimages of the columns of `b` (target coordinates), if any.
    pub fn preimage_vectors(&self, b: &Matrix) -> Option<Matrix> {
        let x = solve(&self.image_lattice(), b, self.p())?;
        Some(x.row_range(0, self.source.ngens()))
    }

    pub fn inverse(&self) -> Result<ModuleMap> {
        if !self.is_iso() {
            return Err(Error::InvalidInput(format!("map {} -> {} is not invertible", self.source, self.target)));
        }
        let x = self
            .preimage_vectors(&Matrix::identity(self.target.ngens()))
            .expect("iso has preimages");
        Ok(ModuleMap::from_lift(self.target.clone(), self.source.clone(), x))
    }

    /// The unique `h` with `mono ∘ h = g`.
    pub fn lift_through_mono(mono: &ModuleMap, g: &ModuleMap) -> Result<ModuleMap> {
        if mono.target != g.target {
            return Err(Error::CompositionError("lift: targets differ".into()));
        }
        let x = mono
            .preimage_vectors(&g.matrix)
            .ok_or_else(|| Error::InvalidInput("map does not factor through the monomorphism".into()))?;
        Ok(ModuleMap::from_lift(g.source.clone(), mono.source.clone(), x))
    }

    /// The unique `h` with `h ∘ epi = g`.
    pub fn descend_through_epi(epi: &ModuleMap, g: &ModuleMap) -> Result<ModuleMap> {
        if epi.source != g.source {
            return Err(Error::CompositionError("descend: sources differ".into()));
        }
        let pre = epi
            .preimage_vectors(&Matrix::identity(epi.target.ngens()))
            .ok_or_else(|| Error::InvalidInput("map is not an epimorphism".into()))?;
        let mut m = g.matrix.mul(&pre);
        reduce_rows(&mut m, &g.target);
        let h = ModuleMap { source: epi.target.clone(), target: g.target.clone(), matrix: m };
        if h.check_well_defined().is_err() || h.compose_unchecked(epi) != *g {
            return Err(Error::InvalidInput("map does not vanish on the kernel of the epimorphism".into()));
        }
        Ok(h)
    }
}

impl fmt::Debug for ModuleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}: {:?}", self.source, self.target, self.matrix)
    }
}
