//! Maximal isotropic submodules, Witt kernels, and self-perpendicular submodules.
//!
//! The kernel is reached by repeatedly adjoining an isotropic simple submodule
//! of the current quotient `W^perp / W`. For a simple type `S`, embeddings are
//! the nonzero `phi` in `Hom(S, Q)`, and `phi` is isotropic when the pulled
//! back form `phi B phi^T` vanishes. Its diagonal is `(phi d)^2` entrywise with
//! `d` the square roots of the diagonal of `B`, so `phi d = 0` is a linear
//! condition, and on that subspace the pulled back form is alternating. The
//! remaining condition is a system of quadratic forms, one per dimension of the
//! invariant alternating forms on `S`. By Chevalley-Warning, `a` quadratic
//! forms in more than `2a` variables over a finite field have a nontrivial
//! common zero, so it suffices to search a `2a + 1` dimensional subspace.

use super::{combine, invariant_alternating_basis, is_isotropic, orthocomplement, BilinearForm};
use crate::error::{Error, Result};
use crate::finite_field::FieldElem;
use crate::linalg::{EchelonBasis, Matrix};
use crate::repmod::{composition_factors, Representation};

const SEARCH_LIMIT: u64 = 1 << 24;

#[derive(Clone, Debug)]
pub struct WittKernelReport {
    /// The induced form on `W^perp / W`.
    pub kernel_form: BilinearForm,
    /// Reduced echelon basis of the maximal isotropic submodule `W`.
    pub witness: Matrix,
    /// Representatives in `V` of the basis of `W^perp / W` used by `kernel_form`.
    pub kernel_basis: Matrix,
    pub hyperbolic: bool,
}

impl WittKernelReport {
    pub fn kernel_dim(&self) -> usize {
        self.kernel_form.dim()
    }
}

struct Quotient {
    form: BilinearForm,
    reps: Matrix,
}

/// The form induced on `W^perp / W` for an isotropic submodule `W`.
fn quotient(form: &BilinearForm, w: &Matrix) -> Result<Quotient> {
    let field = form.module().field().clone();
    let n = form.dim();
    let perp = orthocomplement(form, w);
    let mut eb = EchelonBasis::new(&field, n);
    for r in 0..w.rows() {
        eb.insert(w.row(r));
    }
    let mut reps = Vec::new();
    for r in 0..perp.rows() {
        if eb.insert(perp.row(r)).is_some() {
            reps.push(perp.row(r).to_vec());
        }
    }
    let k = reps.len();
    let reps = Matrix::from_rows(&field, n, &reps);
    let t = if w.rows() == 0 {
        reps.clone()
    } else {
        w.vstack(&reps)
    };
    // coordinates of x in the row space of t: restrict to pivot columns
    let (_, pivots) = t.rref();
    let t_p = t.transpose().select_rows(&pivots).transpose();
    let t_p_inv = t_p
        .inverse()
        .ok_or_else(|| Error::ConstructionFailed("quotient basis not independent".into()))?;
    let images = form
        .module()
        .images()
        .iter()
        .map(|g| {
            let moved = reps.mul_unchecked(g);
            let moved_p = moved.transpose().select_rows(&pivots).transpose();
            let coords = moved_p.mul_unchecked(&t_p_inv);
            coords.block(0, w.rows(), k, k)
        })
        .collect();
    let module =
        Representation::from_images_unchecked(form.module().group().clone(), &field, k, images);
    let gram = reps
        .mul_unchecked(form.gram())
        .mul_unchecked(&reps.transpose());
    Ok(Quotient {
        form: BilinearForm::new(module, gram)?,
        reps,
    })
}

/// A nonzero isotropic `phi` in `Hom(S, Q)`, if one exists.
fn isotropic_embedding(
    s: &Representation,
    alt_dim: usize,
    q: &BilinearForm,
) -> Result<Option<Matrix>> {
    let hom = s.hom_space(q.module())?;
    if hom.is_empty() {
        return Ok(None);
    }
    let field = q.module().field().clone();
    let b = q.gram();
    let d: Vec<FieldElem> = (0..b.rows()).map(|i| field.sqrt(b.get(i, i))).collect();
    let rows: Vec<Vec<FieldElem>> = hom
        .iter()
        .map(|phi| (0..phi.rows()).map(|r| field.dot(phi.row(r), &d)).collect())
        .collect();
    let coeffs = Matrix::from_rows(&field, s.dim(), &rows).left_kernel();
    let k: Vec<Matrix> = (0..coeffs.rows())
        .map(|r| combine(&hom, coeffs.row(r)))
        .collect();
    if k.is_empty() {
        return Ok(None);
    }
    let m = k.len().min(2 * alt_dim + 1);
    let qq = field.q() as u64;
    let points = (0..m as u32).try_fold(0u64, |acc, i| {
        qq.checked_pow(i).and_then(|p| acc.checked_add(p))
    });
    match points {
        Some(p) if p <= SEARCH_LIMIT => {}
        _ => return Err(Error::SearchTooLarge(points.unwrap_or(u64::MAX))),
    }
    // pulled back form of sum c_i k_i is sum_{i,j} c_i c_j P_ij
    let bt: Vec<Matrix> = k[..m]
        .iter()
        .map(|h| b.mul_unchecked(&h.transpose()))
        .collect();
    let p: Vec<Vec<Matrix>> = k[..m]
        .iter()
        .map(|h| bt.iter().map(|x| h.mul_unchecked(x)).collect())
        .collect();
    let mut c = vec![FieldElem::ZERO; m];
    for lead in 0..m {
        let tail = m - lead - 1;
        let total = qq.pow(tail as u32);
        for idx in 0..total {
            c.iter_mut().for_each(|x| *x = FieldElem::ZERO);
            c[lead] = FieldElem::ONE;
            let mut rest = idx;
            for x in c[lead + 1..].iter_mut() {
                *x = FieldElem((rest % qq) as u16);
                rest /= qq;
            }
            let mut acc = Matrix::zeros(&field, s.dim(), s.dim());
            for i in lead..m {
                if c[i].is_zero() {
                    continue;
                }
                for j in lead..m {
                    if !c[j].is_zero() {
                        acc.add_scaled(field.mul(c[i], c[j]), &p[i][j]);
                    }
                }
            }
            if acc.is_zero() {
                return Ok(Some(combine(&k[..m], &c)));
            }
        }
    }
    Ok(None)
}

/// Grows a maximal isotropic submodule `W` and reports the form on `W^perp / W`.
pub fn witt_kernel(form: &BilinearForm, seed: u64) -> Result<WittKernelReport> {
    form.require_symmetric_module()?;
    let field = form.module().field().clone();
    let n = form.dim();
    let types: Vec<(Representation, usize)> = composition_factors(form.module(), seed)?
        .entries
        .into_iter()
        .map(|e| {
            let a = invariant_alternating_basis(&e.module).map(|b| b.len());
            a.map(|a| (e.module, a))
        })
        .collect::<Result<_>>()?;
    let mut w = Matrix::zeros(&field, 0, n);
    loop {
        let q = quotient(form, &w)?;
        if q.form.dim() == 0 {
            return Ok(finish(w, q));
        }
        let mut grown = false;
        for (s, a) in &types {
            if let Some(phi) = isotropic_embedding(s, *a, &q.form)? {
                let lifted = phi.mul_unchecked(&q.reps);
                w = w.vstack(&lifted).row_space();
                grown = true;
                break;
            }
        }
        if !grown {
            return Ok(finish(w, q));
        }
    }
}

fn finish(w: Matrix, q: Quotient) -> WittKernelReport {
    WittKernelReport {
        hyperbolic: q.form.dim() == 0,
        kernel_form: q.form,
        witness: w,
        kernel_basis: q.reps,
    }
}

/// A submodule `W` with `W = W^perp`, verified exactly before it is returned.
pub fn construct_self_perpendicular(form: &BilinearForm, seed: u64) -> Result<Matrix> {
    let report = witt_kernel(form, seed)?;
    if !report.hyperbolic {
        return Err(Error::NotHyperbolic);
    }
    verify_self_perpendicular(form, &report.witness)?;
    Ok(report.witness)
}

/// Exact check that `w` is an invariant submodule equal to its orthocomplement.
pub(crate) fn verify_self_perpendicular(form: &BilinearForm, w: &Matrix) -> Result<()> {
    let n = form.dim();
    if 2 * w.rows() != n {
        return Err(Error::ConstructionFailed(format!(
            "dim W = {}, dim V = {n}",
            w.rows()
        )));
    }
    if !is_isotropic(form, w) {
        return Err(Error::ConstructionFailed("W is not isotropic".into()));
    }
    if orthocomplement(form, w) != w.row_space() {
        return Err(Error::ConstructionFailed(
            "W differs from its orthocomplement".into(),
        ));
    }
    if !form.module().is_submodule(w) {
        return Err(Error::ConstructionFailed("W is not invariant".into()));
    }
    Ok(())
}
