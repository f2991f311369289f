//! Finite-dimensional right modules over a structure-constant algebra.
//!
//! Convention, fixed once: modules are row-vector spaces with the action
//! v . a = v * rho(a), and rho is an algebra homomorphism,
//! rho(a b) = rho(a) rho(b). A wrong convention here silently transposes
//! every hom computation, so the homomorphism law is asserted at
//! construction against all structure constants.

mod covers;

pub use covers::{
    baer_cyclic_check, build_top_complement, free_cover, injective_envelope, is_injective,
    primitive_idempotents, projective_cover, Cover, Envelope, FreeCover,
};

use std::sync::{Arc, OnceLock};

use crate::algebra::{fresh_owner, Algebra, Morphism, OwnerId, Subspace};
use crate::error::{Error, Result};
use crate::fp::{Complement, FpMatrix};

pub(crate) struct ModuleData {
    id: OwnerId,
    algebra: Algebra,
    dim: usize,
    actions: Vec<FpMatrix>,
    series: OnceLock<StructuralSeries>,
    endo: OnceLock<EndoAlgebra>,
}

/// A right module of finite dimension, one action matrix per algebra
/// basis vector. Cheap to clone; equality is identity of the handle.
#[derive(Clone)]
pub struct FdModule(pub(crate) Arc<ModuleData>);

impl PartialEq for FdModule {
    fn eq(&self, other: &Self) -> bool {
        self.0.id == other.0.id
    }
}

impl Eq for FdModule {}

impl std::fmt::Debug for FdModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "FdModule(id={}, dim={}, over={:?})",
            self.0.id.0, self.0.dim, self.0.algebra
        )
    }
}

impl FdModule {
    pub fn new(algebra: Algebra, actions: Vec<FpMatrix>) -> Result<FdModule> {
        let n = algebra.dim();
        if actions.len() != n {
            return Err(Error::DimensionMismatch {
                context: "module action count",
                expected: n,
                got: actions.len(),
            });
        }
        let dim = actions.first().map_or(0, |m| m.rows());
        for m in &actions {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch {
                    context: "module action shape",
                    expected: dim,
                    got: m.rows(),
                });
            }
        }
        let p = algebra.modulus();
        // rho(1) = identity
        let mut rho_one = FpMatrix::zero(p, dim, dim);
        for (i, &u) in algebra.unit_coords().iter().enumerate() {
            if u != 0 {
                rho_one = rho_one.add(&actions[i].scale(u));
            }
        }
        if rho_one != FpMatrix::identity(p, dim) {
            return Err(Error::ActionViolation { i: usize::MAX, j: 0 });
        }
        // rho(b_i) rho(b_j) = sum_k c[i][j][k] rho(b_k)
        for i in 0..n {
            for j in 0..n {
                let lhs = actions[i].mul(&actions[j]);
                let mut rhs = FpMatrix::zero(p, dim, dim);
                for k in 0..n {
                    let c = algebra.c(i, j, k);
                    if c != 0 {
                        rhs = rhs.add(&actions[k].scale(c));
                    }
                }
                if lhs != rhs {
                    return Err(Error::ActionViolation { i, j });
                }
            }
        }
        Ok(FdModule(Arc::new(ModuleData {
            id: fresh_owner(),
            algebra,
            dim,
            actions,
            series: OnceLock::new(),
            endo: OnceLock::new(),
        })))
    }

    /// The right regular module: actions are right multiplications.
    pub fn regular(algebra: &Algebra) -> FdModule {
        let actions = (0..algebra.dim())
            .map(|i| algebra.right_mult(i).clone())
            .collect();
        FdModule::new(algebra.clone(), actions).expect("regular module is valid")
    }

    pub fn zero(algebra: &Algebra) -> FdModule {
        let actions = vec![FpMatrix::zero(algebra.modulus(), 0, 0); algebra.dim()];
        FdModule::new(algebra.clone(), actions).expect("zero module is valid")
    }

    pub fn id(&self) -> OwnerId {
        self.0.id
    }

    pub fn algebra(&self) -> &Algebra {
        &self.0.algebra
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn modulus(&self) -> u64 {
        self.0.algebra.modulus()
    }

    pub fn action(&self, i: usize) -> &FpMatrix {
        &self.0.actions[i]
    }

    /// Action matrix of a general element with the given coordinates.
    pub fn action_of(&self, coords: &[u64]) -> FpMatrix {
        let p = self.modulus();
        let mut m = FpMatrix::zero(p, self.0.dim, self.0.dim);
        for (i, &c) in coords.iter().enumerate() {
            if c != 0 {
                m = m.add(&self.0.actions[i].scale(c));
            }
        }
        m
    }

    pub fn full_subspace(&self) -> Subspace {
        Subspace::from_rows(self.0.id, &FpMatrix::identity(self.modulus(), self.0.dim))
    }

    pub fn zero_subspace(&self) -> Subspace {
        Subspace::zero(self.0.id, self.modulus(), self.0.dim)
    }

    pub fn subspace_from_rows(&self, rows: &FpMatrix) -> Subspace {
        assert_eq!(rows.cols(), self.0.dim, "submodule ambient dimension");
        Subspace::from_rows(self.0.id, rows)
    }

    pub fn is_submodule(&self, u: &Subspace) -> bool {
        if u.owner() != self.0.id {
            return false;
        }
        for r in 0..u.basis().rows() {
            let row = u.basis().row(r);
            for act in &self.0.actions {
                if !u.contains(&act.apply_row(row)) {
                    return false;
                }
            }
        }
        true
    }

    /// Submodule generated by the given row vectors: the span of their
    /// images under all basis actions (the unit is in the basis span).
    pub fn submodule_generated(&self, rows: &FpMatrix) -> Subspace {
        assert_eq!(rows.cols(), self.0.dim);
        let mut all = FpMatrix::zero(self.modulus(), 0, self.0.dim);
        for r in 0..rows.rows() {
            let v = rows.row(r);
            for act in &self.0.actions {
                all.push_row(&act.apply_row(v));
            }
        }
        Subspace::from_rows(self.0.id, &all)
    }

    /// Socle, radical submodule, and semisimple lengths; cached.
    pub fn structural_series(&self) -> Result<&StructuralSeries> {
        if let Some(s) = self.0.series.get() {
            return Ok(s);
        }
        let s = compute_series(self)?;
        let _ = self.0.series.set(s);
        Ok(self.0.series.get().unwrap())
    }

    /// (Goldie dimension, dual Goldie dimension) = (socle length, top length).
    pub fn goldie_dims(&self) -> Result<(usize, usize)> {
        let s = self.structural_series()?;
        Ok((s.socle_length, s.top_length))
    }

    /// Essential / superfluous position of a submodule. At finite length:
    /// essential iff it contains the socle, superfluous iff it lies in
    /// the radical submodule.
    pub fn submodule_position(&self, u: &Subspace) -> Result<Position> {
        if !self.is_submodule(u) {
            return Err(Error::NotASubmodule);
        }
        let s = self.structural_series()?;
        Ok(Position {
            essential: u.contains_subspace(&s.socle),
            superfluous: s.radical_sub.contains_subspace(u),
        })
    }

    /// Basis of the intertwiner space Hom(self, other), in canonical
    /// rref order of the vectorized matrices.
    pub fn hom_basis(&self, other: &FdModule) -> Result<Vec<ModuleHom>> {
        if self.algebra() != other.algebra() {
            return Err(Error::OwnerMismatch("hom over different algebras"));
        }
        let basis = hom_space_basis(self, other);
        let homs = (0..basis.rows())
            .map(|r| ModuleHom {
                domain: self.clone(),
                codomain: other.clone(),
                matrix: unvec(self.modulus(), self.0.dim, other.0.dim, basis.row(r)),
            })
            .collect();
        Ok(homs)
    }

    /// The endomorphism algebra with basis the canonical hom basis and
    /// multiplication given by composition; cached.
    pub fn endo_algebra(&self) -> Result<&EndoAlgebra> {
        if let Some(e) = self.0.endo.get() {
            return Ok(e);
        }
        let e = compute_endo(self)?;
        let _ = self.0.endo.set(e);
        Ok(self.0.endo.get().unwrap())
    }

    /// The hom with the given coordinates in the endomorphism basis.
    pub fn endo_hom(&self, coords: &[u64]) -> Result<ModuleHom> {
        let endo = self.endo_algebra()?;
        Ok(ModuleHom {
            domain: self.clone(),
            codomain: self.clone(),
            matrix: endo.matrix_of(coords),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Position {
    pub essential: bool,
    pub superfluous: bool,
}

/// An intertwiner between modules over the same algebra, acting on row
/// vectors from the right.
#[derive(Clone)]
pub struct ModuleHom {
    domain: FdModule,
    codomain: FdModule,
    matrix: FpMatrix,
}

impl std::fmt::Debug for ModuleHom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "ModuleHom({} -> {}, rank {})",
            self.domain.0.id.0,
            self.codomain.0.id.0,
            self.matrix.rank()
        )
    }
}

impl ModuleHom {
    /// Validated construction: the matrix must commute with every action.
    pub fn new(domain: FdModule, codomain: FdModule, matrix: FpMatrix) -> Result<ModuleHom> {
        if domain.algebra() != codomain.algebra() {
            return Err(Error::OwnerMismatch("hom over different algebras"));
        }
        if matrix.rows() != domain.dim() || matrix.cols() != codomain.dim() {
            return Err(Error::DimensionMismatch {
                context: "hom matrix",
                expected: domain.dim() * codomain.dim(),
                got: matrix.rows() * matrix.cols(),
            });
        }
        for i in 0..domain.algebra().dim() {
            if domain.action(i).mul(&matrix) != matrix.mul(codomain.action(i)) {
                return Err(Error::ActionViolation { i, j: usize::MAX });
            }
        }
        Ok(ModuleHom {
            domain,
            codomain,
            matrix,
        })
    }

    pub fn identity(m: &FdModule) -> ModuleHom {
        ModuleHom {
            domain: m.clone(),
            codomain: m.clone(),
            matrix: FpMatrix::identity(m.modulus(), m.dim()),
        }
    }

    pub fn domain(&self) -> &FdModule {
        &self.domain
    }

    pub fn codomain(&self) -> &FdModule {
        &self.codomain
    }

    pub fn matrix(&self) -> &FpMatrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        self.matrix.apply_row(v)
    }

    /// self then other.
    pub fn compose(&self, other: &ModuleHom) -> Result<ModuleHom> {
        if self.codomain != other.domain {
            return Err(Error::OwnerMismatch("hom composition"));
        }
        Ok(ModuleHom {
            domain: self.domain.clone(),
            codomain: other.codomain.clone(),
            matrix: self.matrix.mul(&other.matrix),
        })
    }

    pub fn kernel(&self) -> Subspace {
        // row-vector convention: the kernel is the left kernel of the matrix
        Subspace::from_rows(self.domain.0.id, &self.matrix.transpose().reduce().kernel)
    }

    pub fn image(&self) -> Subspace {
        Subspace::from_rows(self.codomain.0.id, &self.matrix.row_space())
    }

    pub fn is_mono(&self) -> bool {
        self.matrix.rank() == self.domain.dim()
    }

    pub fn is_epi(&self) -> bool {
        self.matrix.rank() == self.codomain.dim()
    }
}

/// Endomorphism algebra data: structure constants plus the hom basis as
/// vectorized matrices (rref canonical).
pub struct EndoAlgebra {
    pub algebra: Algebra,
    module_dim: usize,
    basis: FpMatrix,
}

impl EndoAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// Hom matrix of the element with the given basis coordinates.
    pub fn matrix_of(&self, coords: &[u64]) -> FpMatrix {
        assert_eq!(coords.len(), self.basis.rows());
        let m = self.module_dim;
        let p = self.algebra.modulus();
        let mut acc = vec![0u64; m * m];
        for (r, &c) in coords.iter().enumerate() {
            if c != 0 {
                for (a, &b) in acc.iter_mut().zip(self.basis.row(r)) {
                    *a = (*a + c * b) % p;
                }
            }
        }
        FpMatrix::new(p, m, m, acc)
    }

    /// Coordinates of an endomorphism matrix in the canonical basis, or
    /// None if it is not an intertwiner in the span.
    pub fn express(&self, mat: &FpMatrix) -> Option<Vec<u64>> {
        let v: Vec<u64> = mat.entries().to_vec();
        let sub = Subspace {
            owner: self.algebra.id(),
            basis: self.basis.clone(),
        };
        sub.express(&v)
    }

    pub fn basis_matrix(&self, r: usize) -> FpMatrix {
        let m = self.module_dim;
        unvec(self.algebra.modulus(), m, m, self.basis.row(r))
    }
}

fn unvec(p: u64, rows: usize, cols: usize, flat: &[u64]) -> FpMatrix {
    FpMatrix::new(p, rows, cols, flat.to_vec())
}

/// Kernel of the intertwining equations rho_M(b_i) X = X rho_N(b_i),
/// unknowns X vectorized row-major.
fn hom_space_basis(m: &FdModule, n: &FdModule) -> FpMatrix {
    let p = m.modulus();
    let (dm, dn) = (m.dim(), n.dim());
    let vars = dm * dn;
    let alg_dim = m.algebra().dim();
    let mut sys = FpMatrix::zero(p, alg_dim * vars, vars);
    let mut row = 0usize;
    for i in 0..alg_dim {
        let a = m.action(i);
        let b = n.action(i);
        for r in 0..dm {
            for s in 0..dn {
                // sum_t a[r][t] X[t][s] - sum_t X[r][t] b[t][s] = 0
                for t in 0..dm {
                    let cur = sys.at(row, t * dn + s);
                    sys.set(row, t * dn + s, (cur + a.at(r, t)) % p);
                }
                for t in 0..dn {
                    let cur = sys.at(row, r * dn + t);
                    sys.set(row, r * dn + t, (cur + p - b.at(t, s) % p) % p);
                }
                row += 1;
            }
        }
    }
    sys.reduce().kernel
}

fn compute_endo(m: &FdModule) -> Result<EndoAlgebra> {
    let p = m.modulus();
    let basis = hom_space_basis(m, m);
    let e = basis.rows();
    let md = m.dim();
    let sub = Subspace {
        owner: m.0.id,
        basis: basis.clone(),
    };
    let express = |mat: &FpMatrix| -> Result<Vec<u64>> {
        sub.express(mat.entries())
            .ok_or_else(|| Error::AssertionFailure("composite not in hom span".into()))
    };
    let mats: Vec<FpMatrix> = (0..e).map(|r| unvec(p, md, md, basis.row(r))).collect();
    let mut consts = vec![0u64; e * e * e];
    for i in 0..e {
        for j in 0..e {
            // ring product = composition: (f g)(v) = f(g(v)), matrix H_g H_f
            let comp = mats[j].mul(&mats[i]);
            let coords = express(&comp)?;
            for (k, &c) in coords.iter().enumerate() {
                consts[(i * e + j) * e + k] = c;
            }
        }
    }
    let unit = express(&FpMatrix::identity(p, md))?;
    let algebra = Algebra::with_cap(p, e, consts, unit, usize::MAX)?;
    Ok(EndoAlgebra {
        algebra,
        module_dim: md,
        basis,
    })
}

#[derive(Clone, Debug)]
pub struct StructuralSeries {
    pub socle: Subspace,
    pub radical_sub: Subspace,
    pub socle_length: usize,
    pub top_length: usize,
    /// Length of the isotypic component per Wedderburn block of A/J.
    pub socle_isotypic: Vec<usize>,
    pub top_isotypic: Vec<usize>,
}

fn compute_series(m: &FdModule) -> Result<StructuralSeries> {
    let a = m.algebra();
    let p = m.modulus();
    let rad = &a.radical()?.radical;
    let md = m.dim();

    // socle = {v : v * rho(j) = 0 for all j in the radical}
    let socle = if rad.is_zero() {
        m.full_subspace()
    } else {
        let mut stacked: Option<FpMatrix> = None;
        for r in 0..rad.basis().rows() {
            let act = m.action_of(rad.basis().row(r));
            stacked = Some(match stacked {
                None => act,
                Some(s) => s.hstack(&act),
            });
        }
        let left_kernel = stacked.unwrap().transpose().reduce().kernel;
        Subspace::from_rows(m.0.id, &left_kernel)
    };

    // radical submodule = span of v * rho(j)
    let radical_sub = if rad.is_zero() {
        m.zero_subspace()
    } else {
        let mut rows = FpMatrix::zero(p, 0, md);
        for r in 0..rad.basis().rows() {
            let act = m.action_of(rad.basis().row(r));
            for i in 0..md {
                rows.push_row(act.row(i));
            }
        }
        Subspace::from_rows(m.0.id, &rows)
    };

    // isotypic lengths against the Wedderburn data of A/J: central block
    // idempotents act through any radical-coset representative
    let wb = a.wedderburn()?;
    let quot = a.semisimple_quotient()?;
    let mut socle_isotypic = Vec::with_capacity(wb.blocks.len());
    let mut top_isotypic = Vec::with_capacity(wb.blocks.len());
    let top_comp = Complement::new(radical_sub.basis().clone());
    let top_dim = top_comp.dim();
    for b in &wb.blocks {
        let rep = quot.section.apply_row(b.idempotent.coords());
        let act = m.action_of(&rep);
        let simple_dim = b.matrix_size * b.field_degree;
        // socle component
        let mut soc_rows = FpMatrix::zero(p, 0, md);
        for r in 0..socle.basis().rows() {
            soc_rows.push_row(&act.apply_row(socle.basis().row(r)));
        }
        let soc_part = soc_rows.row_space().rows();
        if soc_part % simple_dim != 0 {
            return Err(Error::AssertionFailure(
                "socle isotypic dimension not divisible by simple dimension".into(),
            ));
        }
        socle_isotypic.push(soc_part / simple_dim);
        // top component: act on quotient coordinates
        let mut top_rows = FpMatrix::zero(p, 0, top_dim);
        for i in 0..top_dim {
            let mut e = vec![0u64; top_dim];
            e[i] = 1;
            let v = top_comp.embed(&e);
            top_rows.push_row(&top_comp.project(&act.apply_row(&v)));
        }
        let top_part = top_rows.row_space().rows();
        if top_part % simple_dim != 0 {
            return Err(Error::AssertionFailure(
                "top isotypic dimension not divisible by simple dimension".into(),
            ));
        }
        top_isotypic.push(top_part / simple_dim);
    }
    let socle_length: usize = socle_isotypic.iter().sum();
    let top_length: usize = top_isotypic.iter().sum();
    // components exhaust socle and top
    let soc_sum: usize = wb
        .blocks
        .iter()
        .zip(&socle_isotypic)
        .map(|(b, l)| l * b.matrix_size * b.field_degree)
        .sum();
    if soc_sum != socle.dim() {
        return Err(Error::AssertionFailure("socle isotypic parts do not sum".into()));
    }
    let top_sum: usize = wb
        .blocks
        .iter()
        .zip(&top_isotypic)
        .map(|(b, l)| l * b.matrix_size * b.field_degree)
        .sum();
    if top_sum != top_dim {
        return Err(Error::AssertionFailure("top isotypic parts do not sum".into()));
    }
    Ok(StructuralSeries {
        socle,
        radical_sub,
        socle_length,
        top_length,
        socle_isotypic,
        top_isotypic,
    })
}

/// Direct sum with injections and projections.
pub fn direct_sum(parts: &[FdModule]) -> Result<(FdModule, Vec<ModuleHom>, Vec<ModuleHom>)> {
    assert!(!parts.is_empty(), "empty direct sum");
    let a = parts[0].algebra().clone();
    if parts.iter().any(|m| m.algebra() != &a) {
        return Err(Error::OwnerMismatch("direct sum over different algebras"));
    }
    let p = a.modulus();
    let total: usize = parts.iter().map(|m| m.dim()).sum();
    let offsets: Vec<usize> = parts
        .iter()
        .scan(0usize, |acc, m| {
            let o = *acc;
            *acc += m.dim();
            Some(o)
        })
        .collect();
    let mut actions = Vec::with_capacity(a.dim());
    for i in 0..a.dim() {
        let mut act = FpMatrix::zero(p, total, total);
        for (m, &off) in parts.iter().zip(&offsets) {
            for r in 0..m.dim() {
                for c in 0..m.dim() {
                    act.set(off + r, off + c, m.action(i).at(r, c));
                }
            }
        }
        actions.push(act);
    }
    let sum = FdModule::new(a, actions)?;
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    for (m, &off) in parts.iter().zip(&offsets) {
        let mut inj = FpMatrix::zero(p, m.dim(), total);
        let mut proj = FpMatrix::zero(p, total, m.dim());
        for r in 0..m.dim() {
            inj.set(r, off + r, 1);
            proj.set(off + r, r, 1);
        }
        injections.push(ModuleHom::new(m.clone(), sum.clone(), inj)?);
        projections.push(ModuleHom::new(sum.clone(), m.clone(), proj)?);
    }
    Ok((sum, injections, projections))
}

/// Quotient module by a submodule: module on the complement basis, the
/// projection, and a linear section.
pub fn quotient_module(m: &FdModule, u: &Subspace) -> Result<(FdModule, ModuleHom, FpMatrix)> {
    if !m.is_submodule(u) {
        return Err(Error::NotASubmodule);
    }
    let comp = Complement::new(u.basis().clone());
    let q = comp.dim();
    let p = m.modulus();
    let mut actions = Vec::with_capacity(m.algebra().dim());
    for i in 0..m.algebra().dim() {
        let mut act = FpMatrix::zero(p, q, q);
        for r in 0..q {
            let mut e = vec![0u64; q];
            e[r] = 1;
            let v = comp.embed(&e);
            let img = comp.project(&m.action(i).apply_row(&v));
            for (c, &x) in img.iter().enumerate() {
                act.set(r, c, x);
            }
        }
        actions.push(act);
    }
    let quot = FdModule::new(m.algebra().clone(), actions)?;
    let proj = ModuleHom::new(m.clone(), quot.clone(), comp.projector_matrix())?;
    Ok((quot, proj, comp.section_matrix()))
}

/// A submodule as a module in its own right, with the inclusion.
pub fn submodule_module(m: &FdModule, u: &Subspace) -> Result<(FdModule, ModuleHom)> {
    if !m.is_submodule(u) {
        return Err(Error::NotASubmodule);
    }
    let p = m.modulus();
    let d = u.dim();
    let mut actions = Vec::with_capacity(m.algebra().dim());
    for i in 0..m.algebra().dim() {
        let mut act = FpMatrix::zero(p, d, d);
        for r in 0..d {
            let img = m.action(i).apply_row(u.basis().row(r));
            let coords = u
                .express(&img)
                .ok_or(Error::NotASubmodule)?;
            for (c, &x) in coords.iter().enumerate() {
                act.set(r, c, x);
            }
        }
        actions.push(act);
    }
    let sub = FdModule::new(m.algebra().clone(), actions)?;
    let incl = ModuleHom::new(sub.clone(), m.clone(), u.basis().clone())?;
    Ok((sub, incl))
}

/// The module presented by relation columns over A: A^r / sum_j rel_j A,
/// together with the presenting epi from the rank-r free module.
pub struct Presentation {
    pub module: FdModule,
    pub free: FdModule,
    pub epi: ModuleHom,
}

pub fn module_from_presentation(
    a: &Algebra,
    rows: usize,
    relations: &[Vec<crate::algebra::Element>],
) -> Result<Presentation> {
    let free_parts: Vec<FdModule> = (0..rows.max(1))
        .map(|_| FdModule::regular(a))
        .collect();
    let (free, _, _) = if rows == 0 {
        (FdModule::zero(a), vec![], vec![])
    } else {
        direct_sum(&free_parts[..rows])?
    };
    let n = a.dim();
    let p = a.modulus();
    let mut rel_rows = FpMatrix::zero(p, 0, rows * n);
    for rel in relations {
        if rel.len() != rows {
            return Err(Error::DimensionMismatch {
                context: "presentation relation",
                expected: rows,
                got: rel.len(),
            });
        }
        let mut flat = Vec::with_capacity(rows * n);
        for e in rel {
            if e.algebra() != a {
                return Err(Error::OwnerMismatch("presentation entry"));
            }
            flat.extend_from_slice(e.coords());
        }
        rel_rows.push_row(&flat);
    }
    let sub = free.submodule_generated(&rel_rows);
    let (module, epi, _) = quotient_module(&free, &sub)?;
    Ok(Presentation { module, free, epi })
}

/// Restriction of scalars along phi: the same space with b acting as
/// phi(b).
pub fn restrict_scalars(phi: &Morphism, m: &FdModule) -> Result<FdModule> {
    if m.algebra() != phi.codomain() {
        return Err(Error::OwnerMismatch("restriction along a mismatched morphism"));
    }
    let actions = (0..phi.domain().dim())
        .map(|i| m.action_of(phi.matrix().row(i)))
        .collect();
    FdModule::new(phi.domain().clone(), actions)
}

/// GF(p)-linear dual as a module over the opposite algebra; `opp` must
/// be the opposite of m's algebra (structure constants are asserted).
pub fn dual_module(m: &FdModule, opp: &Algebra) -> Result<FdModule> {
    let a = m.algebra();
    if a.modulus() != opp.modulus() || a.dim() != opp.dim() {
        return Err(Error::OwnerMismatch("dual over mismatched algebra"));
    }
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            for k in 0..a.dim() {
                if a.c(i, j, k) != opp.c(j, i, k) {
                    return Err(Error::OwnerMismatch("dual target is not the opposite algebra"));
                }
            }
        }
    }
    let actions = (0..a.dim()).map(|i| m.action(i).transpose()).collect();
    FdModule::new(opp.clone(), actions)
}

/// Dual of a hom: D(f): D(N) -> D(M) with the transposed matrix.
pub fn dual_hom(f: &ModuleHom, dual_codomain: &FdModule, dual_domain: &FdModule) -> Result<ModuleHom> {
    ModuleHom::new(
        dual_codomain.clone(),
        dual_domain.clone(),
        f.matrix().transpose(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{matrix_extension, upper_triangular};

    fn truncated_poly(p: u64, n: usize) -> Algebra {
        let mut consts = vec![0u64; n * n * n];
        for i in 0..n {
            for j in 0..n {
                if i + j < n {
                    consts[(i * n + j) * n + (i + j)] = 1;
                }
            }
        }
        let mut unit = vec![0u64; n];
        unit[0] = 1;
        Algebra::new(p, n, consts, unit).unwrap()
    }

    fn ut2(p: u64) -> Algebra {
        upper_triangular(&Algebra::field(p).unwrap(), 2).unwrap().0
    }

    #[test]
    fn regular_module_validates() {
        let a = truncated_poly(3, 2);
        let m = FdModule::regular(&a);
        assert_eq!(m.dim(), 2);
    }

    #[test]
    fn regular_of_simple_algebra_is_semisimple() {
        // M_2(GF(2)) regular: socle is everything, length 2
        let m2 = matrix_extension(&Algebra::field(2).unwrap(), 2).unwrap();
        let m = FdModule::regular(&m2);
        let s = m.structural_series().unwrap();
        assert_eq!(s.socle.dim(), 4);
        assert_eq!(s.socle_length, 2);
        assert_eq!(s.radical_sub.dim(), 0);
        assert_eq!(s.top_length, 2);
    }

    #[test]
    fn truncated_poly_regular_uniserial() {
        // GF(3)[x]/(x^3): socle (x^2), radical (x), both length 1
        let a = truncated_poly(3, 3);
        let m = FdModule::regular(&a);
        let s = m.structural_series().unwrap();
        assert_eq!(s.socle.dim(), 1);
        assert!(s.socle.contains(&[0, 0, 1]));
        assert_eq!(s.radical_sub.dim(), 2);
        assert_eq!(s.socle_length, 1);
        assert_eq!(s.top_length, 1);
        assert_eq!(m.goldie_dims().unwrap(), (1, 1));
    }

    #[test]
    fn ut2_free_module_lengths() {
        let a = ut2(2);
        let m = FdModule::regular(&a);
        let s = m.structural_series().unwrap();
        assert_eq!(s.top_length, 2);
        assert_eq!(s.socle_length, 2);
    }

    #[test]
    fn hom_identity_and_schur() {
        let a = ut2(2);
        let reg = FdModule::regular(&a);
        let homs = reg.hom_basis(&reg).unwrap();
        assert!(!homs.is_empty());
        // the two non-isomorphic simples of UT2 have no homs between them
        let s = reg.structural_series().unwrap();
        // build the two simples: top of e11*A is S1, and the socle sub
        // e22-part: simpler: S1 = A / rad(A)-part... use quotient by the
        // maximal submodules obtained from radical_sub + one socle line
        let (top, _, _) = quotient_module(&reg, &s.radical_sub).unwrap();
        assert_eq!(top.dim(), 2);
        // top splits as two 1-dim submodules
        let lines: Vec<Subspace> = (0..2)
            .map(|i| {
                let mut row = FpMatrix::zero(2, 1, 2);
                row.set(0, i, 1);
                top.subspace_from_rows(&row)
            })
            .collect();
        let (s1, _) = submodule_module(&top, &lines[0]).unwrap();
        let (s2, _) = submodule_module(&top, &lines[1]).unwrap();
        assert_eq!(s1.hom_basis(&s2).unwrap().len(), 0);
        assert_eq!(s1.hom_basis(&s1).unwrap().len(), 1);
    }

    #[test]
    fn endo_of_commutative_local_regular() {
        // End(GF(3)[x]/(x^2) regular) is the algebra itself
        let a = truncated_poly(3, 2);
        let m = FdModule::regular(&a);
        let endo = m.endo_algebra().unwrap();
        assert_eq!(endo.algebra.dim(), 2);
        assert!(endo.algebra.is_commutative());
        let r = endo.algebra.radical().unwrap();
        assert_eq!(r.radical.dim(), 1);
    }

    #[test]
    fn endo_of_simple_square_is_m2() {
        // S (+) S over GF(2) x GF(2)'s first factor: take A = GF(2),
        // M = A^2: End = M_2(GF(2)) of dim 4
        let a = Algebra::field(2).unwrap();
        let m = FdModule::regular(&a);
        let (sum, _, _) = direct_sum(&[m.clone(), m]).unwrap();
        let endo = sum.endo_algebra().unwrap();
        assert_eq!(endo.algebra.dim(), 4);
        let w = endo.algebra.wedderburn().unwrap();
        assert_eq!(w.block_count(), 1);
        assert_eq!(w.blocks[0].matrix_size, 2);
    }

    #[test]
    fn presentation_of_simple_over_truncated_poly() {
        // A = GF(3)[x]/(x^2), P = [x] presents A/xA = GF(3)
        let a = truncated_poly(3, 2);
        let x = a.basis_element(1);
        let pres = module_from_presentation(&a, 1, &[vec![x]]).unwrap();
        assert_eq!(pres.module.dim(), 1);
        assert!(pres.epi.is_epi());
    }

    #[test]
    fn presentation_empty_is_free() {
        let a = truncated_poly(3, 2);
        let pres = module_from_presentation(&a, 2, &[]).unwrap();
        assert_eq!(pres.module.dim(), 4);
    }

    #[test]
    fn presentation_by_idempotent_over_ut2() {
        // A = UT2(GF(2)), relation e00 presents A / e00 A of dim 1
        let a = ut2(2);
        let e00 = a.basis_element(0);
        let pres = module_from_presentation(&a, 1, &[vec![e00]]).unwrap();
        // e00 A = span{e00, e01} so the quotient has dimension 1
        assert_eq!(pres.module.dim(), 1);
    }

    #[test]
    fn positions_in_truncated_poly() {
        let a = truncated_poly(3, 2);
        let m = FdModule::regular(&a);
        let full = m.full_subspace();
        let zero = m.zero_subspace();
        let x_line = m.subspace_from_rows(&FpMatrix::from_rows(3, 2, &[vec![0, 1]]));
        let pf = m.submodule_position(&full).unwrap();
        assert!(pf.essential && !pf.superfluous);
        let pz = m.submodule_position(&zero).unwrap();
        assert!(!pz.essential && pz.superfluous);
        let px = m.submodule_position(&x_line).unwrap();
        assert!(px.essential && px.superfluous);
    }

    #[test]
    fn restrict_scalars_identity_is_same_actions() {
        let a = truncated_poly(3, 2);
        let m = FdModule::regular(&a);
        let id = Morphism::identity(&a);
        let r = restrict_scalars(&id, &m).unwrap();
        for i in 0..a.dim() {
            assert_eq!(r.action(i), m.action(i));
        }
    }

    #[test]
    fn dual_double_is_original() {
        let a = ut2(2);
        let m = FdModule::regular(&a);
        let aop = a.opposite().clone();
        let d = dual_module(&m, &aop).unwrap();
        let dd = dual_module(&d, &a).unwrap();
        for i in 0..a.dim() {
            assert_eq!(dd.action(i), m.action(i));
        }
    }

    #[test]
    fn goldie_dims_additive_on_sums() {
        let a = ut2(2);
        let m = FdModule::regular(&a);
        let (sum, _, _) = direct_sum(&[m.clone(), m.clone()]).unwrap();
        let (d1, c1) = m.goldie_dims().unwrap();
        let (d2, c2) = sum.goldie_dims().unwrap();
        assert_eq!(d2, 2 * d1);
        assert_eq!(c2, 2 * c1);
    }
}
