//! Four independent decisions of hyperbolicity for symmetric modules in characteristic 2.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::kernel::{verify_self_perpendicular, witt_kernel};
use super::BilinearForm;
use crate::error::{Error, Result};
use crate::group::{f_special_class_reps, f_special_subgroups};
use crate::linalg::{is_square_poly, MatrixData};
use crate::repmod::{is_even_multiplicity, Factor, Fingerprint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Characteristic polynomials of F-special elements are squares.
    CharPoly,
    /// Self-dual composition factors have even multiplicity.
    Multiplicity,
    /// Restrictions to every F-special subgroup have even multiplicity.
    #[serde(rename = "subgroups")]
    SpecialSubgroups,
    /// A self-perpendicular submodule is built and verified.
    Construct,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::CharPoly,
        Method::Multiplicity,
        Method::SpecialSubgroups,
        Method::Construct,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::CharPoly => "charpoly",
            Method::Multiplicity => "multiplicity",
            Method::SpecialSubgroups => "subgroups",
            Method::Construct => "construct",
        }
    }

    pub fn parse(s: &str) -> Option<Method> {
        Method::ALL.into_iter().find(|m| m.name() == s)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Certificate {
    /// An F-special element whose characteristic polynomial is not a square.
    NonSquareCharPoly {
        element: Vec<u32>,
        char_poly: Vec<u32>,
    },
    /// A self-dual composition factor of odd multiplicity.
    OddFactor {
        dim: usize,
        multiplicity: usize,
        fingerprint: Fingerprint,
    },
    /// An F-special subgroup on which the restriction has an odd self-dual factor.
    SpecialSubgroup {
        generators: Vec<Vec<u32>>,
        order: usize,
        factor_dim: usize,
        multiplicity: usize,
    },
    /// A verified self-perpendicular submodule.
    SelfPerpendicular { basis: MatrixData },
    /// Dimension of the nonzero Witt kernel.
    WittKernel { kernel_dim: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperbolicVerdict {
    pub method: Method,
    pub hyperbolic: bool,
    pub certificate: Option<Certificate>,
}

fn odd_factor(f: &Factor) -> Certificate {
    Certificate::OddFactor {
        dim: f.module.dim(),
        multiplicity: f.multiplicity,
        fingerprint: f.fingerprint.clone(),
    }
}

/// Decides hyperbolicity of a symmetric module with one method.
pub fn is_hyperbolic(form: &BilinearForm, method: Method, seed: u64) -> Result<HyperbolicVerdict> {
    form.require_symmetric_module()?;
    let module = form.module();
    let group = module.group();
    let q = module.field().q() as u64;
    let (hyperbolic, certificate) = match method {
        Method::CharPoly => {
            let mut cert = None;
            for g in f_special_class_reps(group, q)? {
                let c = module.char_poly_on(g);
                if !is_square_poly(&c).0 {
                    cert = Some(Certificate::NonSquareCharPoly {
                        element: group.element(g).0.clone(),
                        char_poly: c.to_u32(),
                    });
                    break;
                }
            }
            (cert.is_none(), cert)
        }
        Method::Multiplicity => {
            let (even, odd) = is_even_multiplicity(module, seed)?;
            (even, odd.as_ref().map(odd_factor))
        }
        Method::SpecialSubgroups => {
            let mut cert = None;
            for d in f_special_subgroups(group, q)? {
                let sub = Arc::new(group.subgroup(&d.generators)?);
                let res = module.restrict(sub)?;
                let (even, odd) = is_even_multiplicity(&res, seed)?;
                if !even {
                    let f = odd.expect("odd factor reported");
                    cert = Some(Certificate::SpecialSubgroup {
                        generators: d
                            .generators
                            .iter()
                            .map(|&g| group.element(g).0.clone())
                            .collect(),
                        order: d.elements.len(),
                        factor_dim: f.module.dim(),
                        multiplicity: f.multiplicity,
                    });
                    break;
                }
            }
            (cert.is_none(), cert)
        }
        Method::Construct => {
            let report = witt_kernel(form, seed)?;
            if report.hyperbolic {
                verify_self_perpendicular(form, &report.witness)?;
                (
                    true,
                    Some(Certificate::SelfPerpendicular {
                        basis: report.witness.to_data(),
                    }),
                )
            } else {
                (
                    false,
                    Some(Certificate::WittKernel {
                        kernel_dim: report.kernel_dim(),
                    }),
                )
            }
        }
    };
    Ok(HyperbolicVerdict {
        method,
        hyperbolic,
        certificate,
    })
}

/// Runs every method and fails with `CriteriaDisagree` unless all agree.
pub fn check_all_criteria(form: &BilinearForm, seed: u64) -> Result<Vec<HyperbolicVerdict>> {
    let verdicts = Method::ALL
        .iter()
        .map(|&m| is_hyperbolic(form, m, seed))
        .collect::<Result<Vec<_>>>()?;
    if verdicts
        .iter()
        .any(|v| v.hyperbolic != verdicts[0].hyperbolic)
    {
        let detail = verdicts
            .iter()
            .map(|v| format!("{}={}", v.method, v.hyperbolic))
            .collect::<Vec<_>>()
            .join(", ");
        return Err(Error::CriteriaDisagree(detail));
    }
    Ok(verdicts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_field::Field;
    use crate::forms::{make_invariant_symplectic, orthogonal_sum};
    use crate::group::{GroupElement, GroupSpec, PermGroup};
    use crate::linalg::Matrix;
    use crate::repmod::Representation;

    fn grp(spec: GroupSpec) -> Arc<PermGroup> {
        Arc::new(PermGroup::build(&spec).unwrap())
    }

    #[test]
    fn natural_s3_not_hyperbolic() {
        let f2 = Field::new(1).unwrap();
        let s3 = grp(GroupSpec::Symmetric(3));
        let p = Representation::permutation_module(s3, &f2);
        let f = BilinearForm::new(p, Matrix::identity(&f2, 3)).unwrap();
        let v = check_all_criteria(&f, 0).unwrap();
        assert!(v.iter().all(|x| !x.hyperbolic));
        assert_eq!(
            v[0].certificate,
            Some(Certificate::NonSquareCharPoly {
                element: vec![0, 1, 2],
                char_poly: vec![1, 1, 1, 1]
            })
        );
    }

    #[test]
    fn s3_two_dim_simple_over_gf4() {
        let f4 = Field::new(2).unwrap();
        let s3 = grp(GroupSpec::Symmetric(3));
        let p = Representation::permutation_module(s3.clone(), &f4);
        let aug = Matrix::from_u32(&f4, &[&[1, 1, 0], &[0, 1, 1]]);
        let (w, _, _) = p.split(&aug);
        let f = make_invariant_symplectic(&w, 0).unwrap();
        assert!(check_all_criteria(&f, 0)
            .unwrap()
            .iter()
            .all(|x| !x.hyperbolic));
        let c = s3.index_of(&GroupElement(vec![1, 2, 0])).unwrap();
        let c3 = Arc::new(s3.subgroup(&[c]).unwrap());
        let wr = BilinearForm::new(w.restrict(c3).unwrap(), f.gram().clone()).unwrap();
        assert!(check_all_criteria(&wr, 0)
            .unwrap()
            .iter()
            .all(|x| x.hyperbolic));
        let ff = orthogonal_sum(&f, &f).unwrap();
        assert!(check_all_criteria(&ff, 0)
            .unwrap()
            .iter()
            .all(|x| x.hyperbolic));
    }

    #[test]
    fn method_names_round_trip() {
        for m in Method::ALL {
            assert_eq!(Method::parse(m.name()), Some(m));
        }
        assert_eq!(Method::parse("all"), None);
    }
}
