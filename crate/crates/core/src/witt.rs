//! Witt equivalence of symmetric modules.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forms::{witt_kernel, BilinearForm};
use crate::group::f_special_class_reps;
use crate::linalg::is_square_poly;
use crate::repmod::{composition_factors, Fingerprint};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WittCertificate {
    pub element: Vec<u32>,
    /// Product of the two characteristic polynomials; not a square.
    pub char_poly_product: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KernelFactor {
    pub fingerprint: Fingerprint,
    pub multiplicity: usize,
    pub self_dual: bool,
}

/// Isometry-invariant fingerprint of a Witt class: the kernel dimension and
/// the composition factors of the kernel module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WittClassDescriptor {
    pub kernel_dim: usize,
    pub kernel_factors: Vec<KernelFactor>,
}

/// Decides whether `a + b` is hyperbolic from the characteristic polynomials of
/// the F-special elements.
pub fn witt_equivalent(
    a: &BilinearForm,
    b: &BilinearForm,
) -> Result<(bool, Option<WittCertificate>)> {
    a.require_symmetric_module()?;
    b.require_symmetric_module()?;
    if !a.module().same_context(b.module()) {
        return Err(Error::MismatchedContext);
    }
    let group = a.module().group();
    let q = a.module().field().q() as u64;
    for g in f_special_class_reps(group, q)? {
        let c = a.module().char_poly_on(g).mul(&b.module().char_poly_on(g));
        if !is_square_poly(&c).0 {
            return Ok((
                false,
                Some(WittCertificate {
                    element: group.element(g).0.clone(),
                    char_poly_product: c.to_u32(),
                }),
            ));
        }
    }
    Ok((true, None))
}

pub fn witt_descriptor(form: &BilinearForm, seed: u64) -> Result<WittClassDescriptor> {
    let report = witt_kernel(form, seed)?;
    let kernel = report.kernel_form.module();
    let mut kernel_factors: Vec<KernelFactor> = composition_factors(kernel, seed)?
        .entries
        .into_iter()
        .map(|e| KernelFactor {
            fingerprint: e.fingerprint,
            multiplicity: e.multiplicity,
            self_dual: e.self_dual,
        })
        .collect();
    kernel_factors.sort();
    Ok(WittClassDescriptor {
        kernel_dim: report.kernel_dim(),
        kernel_factors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_field::Field;
    use crate::forms::{is_hyperbolic, orthogonal_sum, Method};
    use crate::group::{GroupSpec, PermGroup};
    use crate::linalg::Matrix;
    use crate::repmod::Representation;
    use std::sync::Arc;

    #[test]
    fn self_equivalence_and_descriptor() {
        let f2 = Field::new(1).unwrap();
        let s3 = Arc::new(PermGroup::build(&GroupSpec::Symmetric(3)).unwrap());
        let p = Representation::permutation_module(s3, &f2);
        let f = BilinearForm::new(p, Matrix::identity(&f2, 3)).unwrap();
        assert!(witt_equivalent(&f, &f).unwrap().0);
        let ff = orthogonal_sum(&f, &f).unwrap();
        assert!(is_hyperbolic(&ff, Method::Construct, 0).unwrap().hyperbolic);
        let d = witt_descriptor(&f, 0).unwrap();
        assert_eq!(d.kernel_dim, 3);
        let dims: Vec<usize> = d.kernel_factors.iter().map(|k| k.fingerprint.dim).collect();
        assert_eq!(dims, vec![1, 2]);
        let h = witt_descriptor(&ff, 0).unwrap();
        assert_eq!(h.kernel_dim, 0);
        assert!(h.kernel_factors.is_empty());
    }

    #[test]
    fn inequivalent_to_zero() {
        let f2 = Field::new(1).unwrap();
        let s3 = Arc::new(PermGroup::build(&GroupSpec::Symmetric(3)).unwrap());
        let p = Representation::permutation_module(s3.clone(), &f2);
        let f = BilinearForm::new(p, Matrix::identity(&f2, 3)).unwrap();
        let z = BilinearForm::new(
            Representation::trivial(s3, &f2, 0),
            Matrix::zeros(&f2, 0, 0),
        )
        .unwrap();
        let (eq, cert) = witt_equivalent(&f, &z).unwrap();
        assert!(!eq);
        assert_eq!(cert.unwrap().char_poly_product, vec![1, 1, 1, 1]);
    }
}
