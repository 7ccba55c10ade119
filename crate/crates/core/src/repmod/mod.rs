//! FG-modules as matrix representations of permutation groups.
//!
//! Vectors are rows and group elements act on the right: `v -> v * rho(g)`,
//! with `rho(g h) = rho(g) rho(h)` for the left-to-right permutation product.

mod factors;
mod meataxe;

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::finite_field::{Field, FieldElem};
use crate::group::PermGroup;
use crate::linalg::{solve_sylvester_like, Matrix, Poly};

pub use factors::{
    composition_factors, is_even_multiplicity, simple_iso, simple_modules, Factor, FactorMultiset,
    Fingerprint,
};
pub use meataxe::{meataxe_split, SplitResult};

/// A representation of a permutation group over GF(2^k), one matrix per generator.
#[derive(Clone)]
pub struct Representation {
    group: Arc<PermGroup>,
    field: Field,
    dim: usize,
    images: Vec<Matrix>,
    element_images: Arc<OnceLock<Vec<Matrix>>>,
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Representation(dim {} of {} over {})",
            self.dim,
            self.group.name(),
            self.field
        )
    }
}

impl Representation {
    /// Validates shapes, invertibility and the homomorphism property against
    /// the full multiplication of generators on enumerated elements.
    pub fn new(group: Arc<PermGroup>, field: &Field, images: Vec<Matrix>) -> Result<Self> {
        if images.len() != group.generators().len() {
            return Err(Error::InvalidRepresentation(format!(
                "{} images for {} generators",
                images.len(),
                group.generators().len()
            )));
        }
        let dim = images.first().map_or(0, |m| m.rows());
        for m in &images {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::InvalidRepresentation(
                    "images must be square of equal size".into(),
                ));
            }
            if m.field() != field {
                return Err(Error::InvalidRepresentation(
                    "image over the wrong field".into(),
                ));
            }
            if !m.is_invertible() {
                return Err(Error::InvalidRepresentation("image is singular".into()));
            }
        }
        let rep = Self::from_images_unchecked(group, field, dim, images);
        rep.check_homomorphism()?;
        Ok(rep)
    }

    /// Builds without validation; callers guarantee the images define a representation.
    pub(crate) fn from_images_unchecked(
        group: Arc<PermGroup>,
        field: &Field,
        dim: usize,
        images: Vec<Matrix>,
    ) -> Self {
        Representation {
            group,
            field: field.clone(),
            dim,
            images,
            element_images: Arc::new(OnceLock::new()),
        }
    }

    fn check_homomorphism(&self) -> Result<()> {
        let all = self.all_element_images();
        let g = &self.group;
        for i in 0..g.order() {
            for (s, img) in self.images.iter().enumerate() {
                let j = g.mul(i, g.generator_index(s));
                if all[j] != all[i].mul_unchecked(img) {
                    return Err(Error::InvalidRepresentation(
                        "images do not satisfy the group relations".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Trivial module of the given dimension.
    pub fn trivial(group: Arc<PermGroup>, field: &Field, dim: usize) -> Self {
        let n = group.generators().len();
        let images = vec![Matrix::identity(field, dim); n];
        Self::from_images_unchecked(group, field, dim, images)
    }

    /// Permutation module on the points the group acts on.
    pub fn permutation_module(group: Arc<PermGroup>, field: &Field) -> Self {
        let images = group
            .generators()
            .iter()
            .map(|g| Matrix::permutation(field, &g.0))
            .collect();
        let dim = group.degree();
        Self::from_images_unchecked(group, field, dim, images)
    }

    /// Regular module: basis indexed by group elements, generators act by right multiplication.
    pub fn regular_module(group: Arc<PermGroup>, field: &Field) -> Self {
        let n = group.order();
        let images = (0..group.generators().len())
            .map(|s| {
                let gi = group.generator_index(s);
                let perm: Vec<u32> = (0..n).map(|i| group.mul(i, gi) as u32).collect();
                Matrix::permutation(field, &perm)
            })
            .collect();
        Self::from_images_unchecked(group, field, n, images)
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn images(&self) -> &[Matrix] {
        &self.images
    }

    fn all_element_images(&self) -> &Vec<Matrix> {
        self.element_images.get_or_init(|| {
            let g = &self.group;
            let mut out: Vec<Matrix> = Vec::with_capacity(g.order());
            out.push(Matrix::identity(&self.field, self.dim));
            for i in 1..g.order() {
                let (p, s) = g.parent(i).expect("non-identity has a parent");
                let m = out[p].mul_unchecked(&self.images[s]);
                out.push(m);
            }
            out
        })
    }

    /// rho(g) for element index g.
    pub fn element_image(&self, g: usize) -> &Matrix {
        &self.all_element_images()[g]
    }

    /// Images of the inverses of the generators.
    pub fn inverse_images(&self) -> Vec<Matrix> {
        (0..self.images.len())
            .map(|s| {
                let gi = self.group.generator_index(s);
                self.element_image(self.group.inv(gi)).clone()
            })
            .collect()
    }

    /// Dual module: g -> rho(g^-1)^T.
    pub fn dual(&self) -> Representation {
        let images = self
            .inverse_images()
            .iter()
            .map(|m| m.transpose())
            .collect();
        Self::from_images_unchecked(self.group.clone(), &self.field, self.dim, images)
    }

    /// Same group and field (group compared by identity of its generator list).
    pub fn same_context(&self, other: &Representation) -> bool {
        self.field == other.field
            && (Arc::ptr_eq(&self.group, &other.group)
                || self.group.generators() == other.group.generators())
    }

    fn require_context(&self, other: &Representation) -> Result<()> {
        if self.same_context(other) {
            Ok(())
        } else {
            Err(Error::MismatchedContext)
        }
    }

    /// Restriction to a subgroup whose generators are elements of this group.
    pub fn restrict(&self, sub: Arc<PermGroup>) -> Result<Representation> {
        let mut images = Vec::with_capacity(sub.generators().len());
        for g in sub.generators() {
            let i = self.group.index_of(g).ok_or(Error::NotASubgroupElement)?;
            images.push(self.element_image(i).clone());
        }
        Ok(Self::from_images_unchecked(
            sub,
            &self.field,
            self.dim,
            images,
        ))
    }

    /// Block-diagonal direct sum.
    pub fn sum(&self, other: &Representation) -> Result<Representation> {
        self.require_context(other)?;
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(a, b)| a.block_diag(b))
            .collect();
        Ok(Self::from_images_unchecked(
            self.group.clone(),
            &self.field,
            self.dim + other.dim,
            images,
        ))
    }

    /// Kronecker-product tensor module.
    pub fn tensor(&self, other: &Representation) -> Result<Representation> {
        self.require_context(other)?;
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(a, b)| a.kronecker(b))
            .collect();
        Ok(Self::from_images_unchecked(
            self.group.clone(),
            &self.field,
            self.dim * other.dim,
            images,
        ))
    }

    /// Same module in a new basis: rows of `p` are the new basis vectors,
    /// so the new matrices are `p rho p^-1`.
    pub fn change_basis(&self, p: &Matrix) -> Result<Representation> {
        let pinv = p
            .inverse()
            .ok_or_else(|| Error::InvalidArgument("basis change is singular".into()))?;
        if p.rows() != self.dim {
            return Err(Error::DimensionMismatch("basis change size".into()));
        }
        let images = self
            .images
            .iter()
            .map(|m| p.mul_unchecked(m).mul_unchecked(&pinv))
            .collect();
        Ok(Self::from_images_unchecked(
            self.group.clone(),
            &self.field,
            self.dim,
            images,
        ))
    }

    /// Characteristic polynomial of rho(g).
    pub fn char_poly_on(&self, g: usize) -> Poly {
        self.element_image(g)
            .char_poly()
            .expect("representation matrices are square")
    }

    /// Whether the row space of `basis` is invariant.
    pub fn is_submodule(&self, basis: &Matrix) -> bool {
        let space = basis.row_space();
        let mut eb = crate::linalg::EchelonBasis::new(&self.field, self.dim);
        for r in 0..space.rows() {
            eb.insert(space.row(r));
        }
        self.images
            .iter()
            .all(|m| (0..space.rows()).all(|r| eb.contains(&m.vec_mul(space.row(r)))))
    }

    /// Splits along an invariant subspace: (submodule, quotient, basis change).
    ///
    /// `t` has the (reduced echelon) submodule basis as its first rows followed by
    /// standard basis vectors completing it; quotient coordinates of `v` are the
    /// trailing entries of `v t^-1`.
    pub fn split(&self, sub_basis: &Matrix) -> (Representation, Representation, Matrix) {
        let u = sub_basis.row_space();
        let k = u.rows();
        let (_, pivots) = u.rref();
        let mut rows = u.row_vecs();
        for j in (0..self.dim).filter(|j| !pivots.contains(j)) {
            let mut e = vec![FieldElem::ZERO; self.dim];
            e[j] = FieldElem::ONE;
            rows.push(e);
        }
        let t = Matrix::from_rows(&self.field, self.dim, &rows);
        let tinv = t.inverse().expect("completed basis is invertible");
        let mut sub_imgs = Vec::new();
        let mut quo_imgs = Vec::new();
        for m in &self.images {
            let c = t.mul_unchecked(m).mul_unchecked(&tinv);
            debug_assert!(c.block(0, k, k, self.dim - k).is_zero(), "not invariant");
            sub_imgs.push(c.block(0, 0, k, k));
            quo_imgs.push(c.block(k, k, self.dim - k, self.dim - k));
        }
        (
            Self::from_images_unchecked(self.group.clone(), &self.field, k, sub_imgs),
            Self::from_images_unchecked(self.group.clone(), &self.field, self.dim - k, quo_imgs),
            t,
        )
    }

    /// Basis of Hom_G(self, other) as `dim(self) x dim(other)` matrices X with
    /// `rho_self(g) X = X rho_other(g)`.
    pub fn hom_space(&self, other: &Representation) -> Result<Vec<Matrix>> {
        self.require_context(other)?;
        let constraints: Vec<(Matrix, Matrix)> = self
            .images
            .iter()
            .cloned()
            .zip(other.images.iter().cloned())
            .collect();
        solve_sylvester_like(&self.field, self.dim, other.dim, &constraints)
    }

    /// Applies the group-generator matrices to every row of `v`.
    pub(crate) fn generator_matrices(&self) -> &[Matrix] {
        &self.images
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;

    fn grp(spec: GroupSpec) -> Arc<PermGroup> {
        Arc::new(PermGroup::build(&spec).unwrap())
    }

    #[test]
    fn permutation_and_regular_dims() {
        let f2 = Field::new(1).unwrap();
        let s3 = grp(GroupSpec::Symmetric(3));
        assert_eq!(Representation::permutation_module(s3.clone(), &f2).dim(), 3);
        let c3 = grp(GroupSpec::Cyclic(3));
        let reg = Representation::regular_module(c3.clone(), &f2);
        assert_eq!(reg.dim(), 3);
        assert_eq!(
            reg.char_poly_on(c3.generator_index(0)).to_u32(),
            vec![1, 0, 0, 1]
        );
        let f4 = Field::new(2).unwrap();
        let d12 = grp(GroupSpec::ExtendedDihedral { e: 2, n: 3 });
        assert_eq!(Representation::regular_module(d12, &f4).dim(), 12);
    }

    #[test]
    fn new_validates_relations() {
        let f4 = Field::new(2).unwrap();
        let c3 = grp(GroupSpec::Cyclic(3));
        // omega = 2 has order 3 in GF(4)*
        assert!(Representation::new(c3.clone(), &f4, vec![Matrix::from_u32(&f4, &[&[2]])]).is_ok());
        // x has order 3 but 1 + ... : use a non-order-3 image
        let f8 = Field::new(3).unwrap();
        assert!(
            Representation::new(c3.clone(), &f8, vec![Matrix::from_u32(&f8, &[&[2]])]).is_err()
        );
        assert!(Representation::new(c3, &f4, vec![Matrix::from_u32(&f4, &[&[0]])]).is_err());
    }

    #[test]
    fn dual_examples() {
        let f4 = Field::new(2).unwrap();
        let c3 = grp(GroupSpec::Cyclic(3));
        let m = Representation::new(c3.clone(), &f4, vec![Matrix::from_u32(&f4, &[&[2]])]).unwrap();
        let d = m.dual();
        assert_eq!(d.images()[0], Matrix::from_u32(&f4, &[&[3]]));
        assert_eq!(d.dual().images(), m.images());
        let s3 = grp(GroupSpec::Symmetric(3));
        let p = Representation::permutation_module(s3, &f4);
        assert_eq!(p.dual().images(), p.images());
    }

    #[test]
    fn sum_tensor_restrict() {
        let f2 = Field::new(1).unwrap();
        let s3 = grp(GroupSpec::Symmetric(3));
        let a = Representation::trivial(s3.clone(), &f2, 2);
        let b = Representation::permutation_module(s3.clone(), &f2);
        assert_eq!(a.sum(&b).unwrap().dim(), 5);
        assert_eq!(a.tensor(&b).unwrap().dim(), 6);
        let same = b.restrict(s3.clone()).unwrap();
        assert_eq!(same.images(), b.images());
        let c3 = Arc::new(
            s3.subgroup(&[s3
                .index_of(&crate::group::GroupElement(vec![1, 2, 0]))
                .unwrap()])
                .unwrap(),
        );
        assert_eq!(b.restrict(c3).unwrap().images().len(), 1);
        let foreign = grp(GroupSpec::Cyclic(5));
        assert!(matches!(
            b.restrict(foreign),
            Err(Error::NotASubgroupElement)
        ));
    }

    #[test]
    fn char_poly_of_identity() {
        let f2 = Field::new(1).unwrap();
        let s3 = grp(GroupSpec::Symmetric(3));
        let p = Representation::permutation_module(s3.clone(), &f2);
        assert_eq!(p.char_poly_on(0).to_u32(), vec![1, 1, 1, 1]);
        let c = s3
            .index_of(&crate::group::GroupElement(vec![1, 2, 0]))
            .unwrap();
        assert_eq!(p.char_poly_on(c).to_u32(), vec![1, 0, 0, 1]);
    }
}
