use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finite_field::{Field, FieldElem};
use crate::linalg::poly::Poly;

/// Dense row-major matrix over GF(2^k).
///
/// Vectors are rows; a matrix acts on the right (`v -> v * M`).
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
    field: Field,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// Wire form: `{"rows": r, "cols": c, "entries": [...]}`, row-major decimals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixData {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<u32>,
}

impl Matrix {
    pub fn new(field: &Field, rows: usize, cols: usize, data: Vec<FieldElem>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|e| e.0 as u32 >= field.q()) {
            return Err(Error::InvalidArgument(format!(
                "{} is not an element of {field}",
                bad.0
            )));
        }
        Ok(Matrix {
            rows,
            cols,
            data,
            field: field.clone(),
        })
    }

    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![FieldElem::ZERO; rows * cols],
            field: field.clone(),
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = FieldElem::ONE;
        }
        m
    }

    /// Builds from rows; every row must have length `cols`.
    pub fn from_rows(field: &Field, cols: usize, rows: &[Vec<FieldElem>]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend_from_slice(r);
        }
        Matrix {
            rows: rows.len(),
            cols,
            data,
            field: field.clone(),
        }
    }

    /// Convenience constructor from small integers, panicking on bad input.
    pub fn from_u32(field: &Field, rows: &[&[u32]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged rows");
                r.iter().map(|&x| FieldElem(x as u16))
            })
            .collect();
        Matrix::new(field, rows.len(), cols, data).expect("valid entries")
    }

    pub fn from_data(field: &Field, d: &MatrixData) -> Result<Matrix> {
        let mut data = Vec::with_capacity(d.entries.len());
        for &e in &d.entries {
            data.push(field.elem(e)?);
        }
        Matrix::new(field, d.rows, d.cols, data)
    }

    pub fn to_data(&self) -> MatrixData {
        MatrixData {
            rows: self.rows,
            cols: self.cols,
            entries: self.data.iter().map(|e| e.0 as u32).collect(),
        }
    }

    /// Permutation matrix of the right action `e_i -> e_{perm[i]}`.
    pub fn permutation(field: &Field, perm: &[u32]) -> Matrix {
        let n = perm.len();
        let mut m = Matrix::zeros(field, n, n);
        for (i, &j) in perm.iter().enumerate() {
            m.data[i * n + j as usize] = FieldElem::ONE;
        }
        m
    }

    /// Companion matrix of a monic polynomial (row convention): `e_i -> e_{i+1}`,
    /// last row holds the negated low coefficients.
    pub fn companion(p: &Poly) -> Matrix {
        let d = p.degree().expect("nonzero polynomial");
        let field = p.field();
        let mut m = Matrix::zeros(field, d, d);
        for i in 0..d.saturating_sub(1) {
            m.set(i, i + 1, FieldElem::ONE);
        }
        let lead_inv = field.inv_nz(p.lead());
        for j in 0..d {
            m.set(d - 1, j, field.mul(p.coeff(j), lead_inv));
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FieldElem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: FieldElem) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[FieldElem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [FieldElem] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<FieldElem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn entries(&self) -> &[FieldElem] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    self.get(i, j)
                        == if i == j {
                            FieldElem::ONE
                        } else {
                            FieldElem::ZERO
                        }
                })
            })
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Symmetric with zero diagonal.
    pub fn is_alternating(&self) -> bool {
        self.is_symmetric() && (0..self.rows).all(|i| self.get(i, i).is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Matrix) -> Matrix {
        debug_assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(&self.field, self.rows, other.cols);
        let oc = other.cols;
        for r in 0..self.rows {
            let dst = &mut out.data[r * oc..(r + 1) * oc];
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k];
                if !a.is_zero() {
                    self.field.axpy(dst, a, &other.data[k * oc..(k + 1) * oc]);
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[FieldElem]) -> Vec<FieldElem> {
        debug_assert_eq!(v.len(), self.rows);
        let mut out = vec![FieldElem::ZERO; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if !a.is_zero() {
                self.field.axpy(&mut out, a, self.row(k));
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix sum".into()));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| FieldElem(a.0 ^ b.0))
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
            field: self.field.clone(),
        })
    }

    pub fn scaled(&self, c: FieldElem) -> Matrix {
        let mut m = self.clone();
        self.field.scale(&mut m.data, c);
        m
    }

    /// In-place `self += c * other`.
    pub fn add_scaled(&mut self, c: FieldElem, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.field.axpy(&mut self.data, c, &other.data);
    }

    /// Rows selected by index.
    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let rows: Vec<Vec<FieldElem>> = idx.iter().map(|&i| self.row(i).to_vec()).collect();
        Matrix::from_rows(&self.field, self.cols, &rows)
    }

    /// Contiguous block `[r0, r0+nr) x [c0, c0+nc)`.
    pub fn block(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> Matrix {
        let mut m = Matrix::zeros(&self.field, nr, nc);
        for r in 0..nr {
            m.row_mut(r).copy_from_slice(&self.row(r0 + r)[c0..c0 + nc]);
        }
        m
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
            field: self.field.clone(),
        }
    }

    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(&self.field, self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            m.row_mut(r)[..self.cols].copy_from_slice(self.row(r));
        }
        for r in 0..other.rows {
            m.row_mut(self.rows + r)[self.cols..].copy_from_slice(other.row(r));
        }
        m
    }

    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        let (r1, c1, r2, c2) = (self.rows, self.cols, other.rows, other.cols);
        let mut m = Matrix::zeros(&self.field, r1 * r2, c1 * c2);
        for i in 0..r1 {
            for j in 0..c1 {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        m.set(i * r2 + k, j * c2 + l, self.field.mul(a, other.get(k, l)));
                    }
                }
            }
        }
        m
    }

    /// Reduced row echelon form with pivot columns (leftmost first).
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    self.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = f.inv_nz(self.get(r, c));
            f.scale(self.row_mut(r), inv);
            let pivot_row = self.row(r).to_vec();
            for i in 0..self.rows {
                if i != r {
                    let a = self.get(i, c);
                    if !a.is_zero() {
                        f.axpy(self.row_mut(i), a, &pivot_row);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Nonzero rows of the reduced echelon form: canonical basis of the row space.
    pub fn row_space(&self) -> Matrix {
        let (m, p) = self.rref();
        m.block(0, 0, p.len(), self.cols)
    }

    /// Basis (as rows, reduced echelon) of `{v : M v^T = 0}`.
    pub fn kernel(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![FieldElem::ZERO; self.cols];
            v[free] = FieldElem::ONE;
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = r.get(i, free);
            }
            basis.push(v);
        }
        Matrix::from_rows(&self.field, self.cols, &basis).row_space()
    }

    /// Basis (rows) of `{v : v M = 0}`.
    pub fn left_kernel(&self) -> Matrix {
        self.transpose().kernel()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(&self.field, n, 2 * n);
        for r in 0..n {
            aug.row_mut(r)[..n].copy_from_slice(self.row(r));
            aug.set(r, n + r, FieldElem::ONE);
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(aug.block(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        let mut base = self.clone();
        let mut acc = Matrix::identity(&self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Coordinates of `v` in the row space of `self` (rows independent), if it lies there.
    pub fn solve_left(&self, v: &[FieldElem]) -> Option<Vec<FieldElem>> {
        // Solve x * self = v via the kernel of [self; v].
        let stacked = self.vstack(&Matrix::from_rows(&self.field, self.cols, &[v.to_vec()]));
        let k = stacked.left_kernel();
        let n = self.rows;
        for r in 0..k.rows() {
            let c = k.get(r, n);
            if !c.is_zero() {
                let inv = self.field.inv_nz(c);
                return Some((0..n).map(|i| self.field.mul(k.get(r, i), inv)).collect());
            }
        }
        if v.iter().all(|e| e.is_zero()) {
            return Some(vec![FieldElem::ZERO; n]);
        }
        None
    }

    /// det(xI - M), exact, via reduction to Hessenberg form.
    pub fn char_poly(&self) -> Result<Poly> {
        if !self.is_square() {
            return Err(Error::NonSquareMatrix(self.rows, self.cols));
        }
        let f = self.field.clone();
        let n = self.rows;
        let mut h = self.clone();
        // Similarity transforms to upper Hessenberg form.
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !h.get(i, m - 1).is_zero()) else {
                continue;
            };
            if i != m {
                for j in 0..n {
                    h.data.swap(i * n + j, m * n + j);
                }
                for j in 0..n {
                    h.data.swap(j * n + i, j * n + m);
                }
            }
            let t_inv = f.inv_nz(h.get(m, m - 1));
            for i in m + 1..n {
                let u = f.mul(h.get(i, m - 1), t_inv);
                if u.is_zero() {
                    continue;
                }
                // row_i -= u * row_m
                let row_m = h.row(m).to_vec();
                f.axpy(h.row_mut(i), u, &row_m);
                // col_m += u * col_i
                for j in 0..n {
                    let v = f.mul(u, h.get(j, i));
                    let cur = h.get(j, m);
                    h.set(j, m, f.add(cur, v));
                }
            }
        }
        // Recurrence on leading principal minors.
        let x = Poly::x(&f);
        let mut ps: Vec<Poly> = vec![Poly::one(&f)];
        for m in 0..n {
            let lin = x.add(&Poly::constant(&f, h.get(m, m)));
            let mut pm = lin.mul(&ps[m]);
            let mut t = FieldElem::ONE;
            for i in 1..=m {
                t = f.mul(t, h.get(m - i + 1, m - i));
                let c = f.mul(t, h.get(m - i, m));
                if !c.is_zero() {
                    pm = pm.add(&ps[m - i].scale(c));
                }
            }
            ps.push(pm);
        }
        Ok(ps.pop().expect("nonempty"))
    }
}

/// Incrementally maintained echelon basis of a subspace of F^n.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: Field,
    n: usize,
    rows: Vec<Vec<FieldElem>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(field: &Field, n: usize) -> Self {
        EchelonBasis {
            field: field.clone(),
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.n
    }

    /// Reduces `v` against the basis in place; returns true if it became zero.
    pub fn reduce(&self, v: &mut [FieldElem]) -> bool {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if !c.is_zero() {
                self.field.axpy(v, c, row);
            }
        }
        v.iter().all(|e| e.is_zero())
    }

    pub fn contains(&self, v: &[FieldElem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w)
    }

    /// Adds `v` if independent; returns the reduced, normalized vector on success.
    pub fn insert(&mut self, v: &[FieldElem]) -> Option<Vec<FieldElem>> {
        let mut w = v.to_vec();
        if self.reduce(&mut w) {
            return None;
        }
        let p = w.iter().position(|e| !e.is_zero()).expect("nonzero");
        let inv = self.field.inv_nz(w[p]);
        self.field.scale(&mut w, inv);
        // keep earlier rows reduced at the new pivot
        for row in self.rows.iter_mut() {
            let c = row[p];
            if !c.is_zero() {
                self.field.axpy(row, c, &w);
            }
        }
        self.rows.push(w.clone());
        self.pivots.push(p);
        Some(w)
    }

    pub fn vectors(&self) -> &[Vec<FieldElem>] {
        &self.rows
    }

    /// Canonical reduced echelon basis as a matrix.
    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_rows(&self.field, self.n, &self.rows).row_space()
    }
}

/// Closure of the span of `seeds` under right multiplication by `gens`.
pub fn spin(field: &Field, n: usize, seeds: &[Vec<FieldElem>], gens: &[Matrix]) -> EchelonBasis {
    let mut basis = EchelonBasis::new(field, n);
    let mut queue: Vec<Vec<FieldElem>> = Vec::new();
    for s in seeds {
        if let Some(w) = basis.insert(s) {
            queue.push(w);
        }
    }
    let mut i = 0;
    while i < queue.len() && !basis.is_full() {
        for g in gens {
            let w = g.vec_mul(&queue[i]);
            if let Some(w) = basis.insert(&w) {
                queue.push(w);
            }
        }
        i += 1;
    }
    basis
}

/// Basis of `{X : A_i X = X B_i for all i}`, each solution an `m x n` matrix.
///
/// The solutions come back in reduced echelon order of their row-major
/// flattening, so the output is deterministic.
pub fn solve_sylvester_like(
    field: &Field,
    m: usize,
    n: usize,
    constraints: &[(Matrix, Matrix)],
) -> Result<Vec<Matrix>> {
    for (a, b) in constraints {
        if a.rows() != m || a.cols() != m || b.rows() != n || b.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "constraint ({}x{}, {}x{}) for {m}x{n} unknown",
                a.rows(),
                a.cols(),
                b.rows(),
                b.cols()
            )));
        }
    }
    let unknowns = m * n;
    let mut eqs = EchelonBasis::new(field, unknowns);
    'outer: for (a, b) in constraints {
        for r in 0..m {
            for c in 0..n {
                // (A X)_{rc} - (X B)_{rc}
                let mut eq = vec![FieldElem::ZERO; unknowns];
                for k in 0..m {
                    let v = a.get(r, k);
                    if !v.is_zero() {
                        eq[k * n + c].0 ^= v.0;
                    }
                }
                for k in 0..n {
                    let v = b.get(k, c);
                    if !v.is_zero() {
                        eq[r * n + k].0 ^= v.0;
                    }
                }
                eqs.insert(&eq);
                if eqs.is_full() {
                    break 'outer;
                }
            }
        }
    }
    let coeffs = if eqs.dim() == 0 {
        Matrix::zeros(field, 0, unknowns)
    } else {
        Matrix::from_rows(field, unknowns, eqs.vectors())
    };
    let ker = coeffs.kernel();
    Ok((0..ker.rows())
        .map(|i| Matrix::new(field, m, n, ker.row(i).to_vec()).expect("sizes match"))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf2() -> Field {
        Field::new(1).unwrap()
    }

    #[test]
    fn rank_and_kernel_examples() {
        let f = gf2();
        let i3 = Matrix::identity(&f, 3);
        assert_eq!(i3.rank(), 3);
        assert_eq!(i3.kernel().rows(), 0);
        let z = Matrix::zeros(&f, 2, 5);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.kernel().rows(), 5);
        let m = Matrix::from_u32(&f, &[&[1, 1], &[1, 1]]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel();
        assert_eq!(k, Matrix::from_u32(&f, &[&[1, 1]]));
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let f = Field::new(2).unwrap();
        let m = Matrix::from_u32(&f, &[&[1, 2, 3, 0], &[2, 3, 1, 1], &[3, 1, 2, 1]]);
        let k = m.kernel();
        assert_eq!(m.rank() + k.rows(), 4);
        let prod = m.mul(&k.transpose()).unwrap();
        assert!(prod.is_zero());
    }

    #[test]
    fn char_poly_examples() {
        let f = gf2();
        // identity -> (x+1)^3 = x^3 + x^2 + x + 1
        let cp = Matrix::identity(&f, 3).char_poly().unwrap();
        assert_eq!(cp.to_u32(), vec![1, 1, 1, 1]);
        // 3-cycle permutation matrix -> x^3 + 1
        let p = Matrix::permutation(&f, &[1, 2, 0]);
        assert_eq!(p.char_poly().unwrap().to_u32(), vec![1, 0, 0, 1]);
        // companion of x^2 + x + 1
        let c = Matrix::companion(&Poly::from_u32(&f, &[1, 1, 1]));
        assert_eq!(c.char_poly().unwrap().to_u32(), vec![1, 1, 1]);
        assert!(Matrix::zeros(&f, 2, 3).char_poly().is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let f = Field::new(3).unwrap();
        let m = Matrix::from_u32(&f, &[&[1, 2, 0], &[0, 5, 7], &[3, 0, 1]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        let sing = Matrix::from_u32(&f, &[&[1, 2], &[1, 2]]);
        assert!(sing.inverse().is_none());
    }

    #[test]
    fn sylvester_examples() {
        let f = gf2();
        assert_eq!(solve_sylvester_like(&f, 2, 2, &[]).unwrap().len(), 4);
        let c = Matrix::companion(&Poly::from_u32(&f, &[1, 1, 1]));
        let sols = solve_sylvester_like(&f, 2, 2, &[(c.clone(), c.clone())]).unwrap();
        assert_eq!(sols.len(), 2);
        for x in &sols {
            assert_eq!(c.mul(x).unwrap(), x.mul(&c).unwrap());
        }
        let i2 = Matrix::identity(&f, 2);
        assert!(solve_sylvester_like(&f, 2, 2, &[(i2.clone(), c)])
            .unwrap()
            .is_empty());
        assert!(solve_sylvester_like(&f, 3, 2, &[(i2.clone(), i2)]).is_err());
    }

    #[test]
    fn spin_of_fixed_vector() {
        let f = gf2();
        let p = Matrix::permutation(&f, &[1, 2, 0]);
        let ones = vec![FieldElem::ONE; 3];
        assert_eq!(spin(&f, 3, &[ones], &[p.clone()]).dim(), 1);
        let e0 = vec![FieldElem::ONE, FieldElem::ZERO, FieldElem::ZERO];
        assert_eq!(spin(&f, 3, &[e0], &[p]).dim(), 3);
    }

    #[test]
    fn solve_left_finds_coordinates() {
        let f = Field::new(2).unwrap();
        let b = Matrix::from_u32(&f, &[&[1, 0, 2], &[0, 1, 3]]);
        let v = vec![
            FieldElem(2),
            FieldElem(1),
            f.add(f.mul(FieldElem(2), FieldElem(2)), FieldElem(3)),
        ];
        let c = b.solve_left(&v).unwrap();
        assert_eq!(b.vec_mul(&c), v);
        assert!(b
            .solve_left(&[FieldElem(0), FieldElem(0), FieldElem(1)])
            .is_none());
    }
}
