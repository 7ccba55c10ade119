//! G-invariant bilinear forms `f(v, w) = v B w^T` on FG-modules.

mod hyperbolic;
mod kernel;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finite_field::FieldElem;
use crate::linalg::Matrix;
use crate::repmod::Representation;

pub use hyperbolic::{check_all_criteria, is_hyperbolic, Certificate, HyperbolicVerdict, Method};
pub use kernel::{construct_self_perpendicular, witt_kernel, WittKernelReport};

/// Derived properties of a Gram matrix relative to its module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormKind {
    pub symmetric: bool,
    pub alternating: bool,
    pub nondegenerate: bool,
    pub g_invariant: bool,
}

#[derive(Clone, Debug)]
pub struct BilinearForm {
    module: Representation,
    gram: Matrix,
    kind: FormKind,
}

impl BilinearForm {
    /// Pairs a Gram matrix with a module; only the shape is required to match.
    pub fn new(module: Representation, gram: Matrix) -> Result<BilinearForm> {
        if gram.rows() != module.dim() || gram.cols() != module.dim() {
            return Err(Error::DimensionMismatch(format!(
                "gram is {}x{}, module has dim {}",
                gram.rows(),
                gram.cols(),
                module.dim()
            )));
        }
        if gram.field() != module.field() {
            return Err(Error::MismatchedContext);
        }
        let symmetric = gram.is_symmetric();
        let kind = FormKind {
            symmetric,
            alternating: symmetric && gram.is_alternating(),
            nondegenerate: gram.rank() == module.dim(),
            g_invariant: is_invariant(&module, &gram),
        };
        Ok(BilinearForm { module, gram, kind })
    }

    pub fn module(&self) -> &Representation {
        &self.module
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    /// Errors unless the form is symmetric, nondegenerate and invariant.
    pub fn require_symmetric_module(&self) -> Result<()> {
        if !self.kind.symmetric {
            return Err(Error::NotSymmetric);
        }
        if !self.kind.nondegenerate {
            return Err(Error::DegenerateForm);
        }
        if !self.kind.g_invariant {
            return Err(Error::NotInvariant);
        }
        Ok(())
    }

    pub fn eval(&self, v: &[FieldElem], w: &[FieldElem]) -> FieldElem {
        self.module.field().dot(&self.gram.vec_mul(v), w)
    }
}

fn is_invariant(m: &Representation, gram: &Matrix) -> bool {
    m.images()
        .iter()
        .all(|r| r.mul_unchecked(gram).mul_unchecked(&r.transpose()) == *gram)
}

/// Basis of the invariant forms `{B : rho(g) B rho(g)^T = B}`.
pub fn invariant_forms_basis(m: &Representation) -> Result<Vec<Matrix>> {
    m.hom_space(&m.dual())
}

/// Basis of the subspace of `span(basis)` cut out by the linear map `cond`
/// (which must be linear in its matrix argument).
fn sub_basis(basis: &[Matrix], cond: impl Fn(&Matrix) -> Vec<FieldElem>) -> Vec<Matrix> {
    if basis.is_empty() {
        return Vec::new();
    }
    let field = basis[0].field().clone();
    let rows: Vec<Vec<FieldElem>> = basis.iter().map(&cond).collect();
    let width = rows[0].len();
    let coeffs = Matrix::from_rows(&field, width, &rows).left_kernel();
    (0..coeffs.rows())
        .map(|r| combine(basis, coeffs.row(r)))
        .collect()
}

pub(crate) fn combine(basis: &[Matrix], coeffs: &[FieldElem]) -> Matrix {
    let mut acc = Matrix::zeros(basis[0].field(), basis[0].rows(), basis[0].cols());
    for (b, &c) in basis.iter().zip(coeffs) {
        if !c.is_zero() {
            acc.add_scaled(c, b);
        }
    }
    acc
}

/// Strictly-lower entries of `X + X^T` together with the diagonal: zero
/// exactly when `X` is alternating.
fn alternating_defect(x: &Matrix) -> Vec<FieldElem> {
    let n = x.rows();
    let mut out = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        for j in 0..i {
            out.push(FieldElem(x.get(i, j).0 ^ x.get(j, i).0));
        }
        out.push(x.get(i, i));
    }
    out
}

/// Basis of the invariant alternating forms.
pub fn invariant_alternating_basis(m: &Representation) -> Result<Vec<Matrix>> {
    Ok(sub_basis(&invariant_forms_basis(m)?, alternating_defect))
}

/// Basis of the invariant symmetric forms.
pub fn invariant_symmetric_basis(m: &Representation) -> Result<Vec<Matrix>> {
    Ok(sub_basis(&invariant_forms_basis(m)?, |x| {
        let n = x.rows();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..i {
                out.push(FieldElem(x.get(i, j).0 ^ x.get(j, i).0));
            }
        }
        out
    }))
}

/// A nondegenerate invariant alternating form, found by seeded random search
/// in the space of invariant alternating forms.
pub fn make_invariant_symplectic(m: &Representation, seed: u64) -> Result<BilinearForm> {
    let basis = invariant_alternating_basis(m)?;
    if basis.is_empty() || m.dim() % 2 == 1 {
        return Err(Error::NoSymplecticForm);
    }
    let q = m.field().q();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..512 {
        let coeffs: Vec<FieldElem> = if attempt < basis.len() {
            (0..basis.len())
                .map(|i| {
                    if i == attempt {
                        FieldElem::ONE
                    } else {
                        FieldElem::ZERO
                    }
                })
                .collect()
        } else {
            (0..basis.len())
                .map(|_| FieldElem(rng.gen_range(0..q) as u16))
                .collect()
        };
        let g = combine(&basis, &coeffs);
        if g.rank() == m.dim() {
            return BilinearForm::new(m.clone(), g);
        }
    }
    Err(Error::NoSymplecticForm)
}

/// `{v : f(w, v) = 0 for all rows w of W}`, as a reduced echelon basis.
pub fn orthocomplement(form: &BilinearForm, w: &Matrix) -> Matrix {
    if w.rows() == 0 {
        return Matrix::identity(form.module.field(), form.dim());
    }
    w.mul_unchecked(&form.gram).kernel()
}

/// Whether the form vanishes on the row space of `w`.
pub fn is_isotropic(form: &BilinearForm, w: &Matrix) -> bool {
    w.rows() == 0
        || w.mul_unchecked(&form.gram)
            .mul_unchecked(&w.transpose())
            .is_zero()
}

/// Orthogonal sum on the direct sum of the modules.
pub fn orthogonal_sum(a: &BilinearForm, b: &BilinearForm) -> Result<BilinearForm> {
    let m = a.module.sum(&b.module)?;
    BilinearForm::new(m, a.gram.block_diag(&b.gram))
}

/// `M + M*` with the hyperbolic pairing `[[0, I], [I, 0]]`.
pub fn hyperbolic_double(m: &Representation) -> Result<BilinearForm> {
    let v = m.sum(&m.dual())?;
    let n = m.dim();
    let f = m.field();
    let mut g = Matrix::zeros(f, 2 * n, 2 * n);
    for i in 0..n {
        g.set(i, n + i, FieldElem::ONE);
        g.set(n + i, i, FieldElem::ONE);
    }
    BilinearForm::new(v, g)
}
