//! Worked examples: a simple symplectic module of `C_p x D_2r` whose maximal
//! restrictions are hyperbolic, the module `FG + U` over an extended dihedral
//! group of order `4p`, and the two-dimensional symplectic module of `S_3` over GF(4).

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finite_field::{prime_factors, Field, FieldElem};
use crate::forms::{check_all_criteria, make_invariant_symplectic, orthogonal_sum, BilinearForm};
use crate::group::{GroupSpec, PermGroup};
use crate::linalg::factor::factor;
use crate::linalg::{Matrix, Poly};
use crate::repmod::{meataxe_split, Representation, SplitResult};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionResult {
    pub subgroup: String,
    pub order: usize,
    pub hyperbolic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleProductReport {
    pub q: u64,
    pub p: u64,
    pub r: u64,
    pub group_order: usize,
    pub dim: usize,
    pub simple: bool,
    pub symplectic: bool,
    pub hyperbolic: bool,
    /// B = D_2r, C x N and C x <t>.
    pub maximal_restrictions: Vec<RestrictionResult>,
    pub all_maximal_subgroups_hyperbolic: bool,
    pub all_proper_subgroups_hyperbolic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularPlusSimpleReport {
    pub q: u64,
    pub p: u64,
    pub group_order: usize,
    /// Coefficients of the characteristic polynomial shared by every
    /// nontrivial odd-order element on FG, if they all agree.
    pub odd_char_poly: Option<Vec<u32>>,
    pub odd_char_poly_is_expected: bool,
    pub regular_hyperbolic: bool,
    pub dim: usize,
    pub hyperbolic: bool,
    pub proper_restrictions: Vec<RestrictionResult>,
    pub all_proper_subgroups_hyperbolic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct S3Report {
    pub q: u64,
    pub dim: usize,
    pub simple: bool,
    pub symplectic: bool,
    pub hyperbolic: bool,
    pub c3_hyperbolic: bool,
}

fn smallest_odd_prime(n: u64) -> Option<u64> {
    prime_factors(n).into_iter().find(|&p| p % 2 == 1)
}

fn hyperbolic(form: &BilinearForm, seed: u64) -> Result<bool> {
    Ok(check_all_criteria(form, seed)?[0].hyperbolic)
}

fn restriction(
    form: &BilinearForm,
    group: &PermGroup,
    gens: &[usize],
    seed: u64,
) -> Result<RestrictionResult> {
    let sub = Arc::new(group.subgroup(gens)?);
    let res = BilinearForm::new(form.module().restrict(sub.clone())?, form.gram().clone())?;
    Ok(RestrictionResult {
        subgroup: sub.name().to_string(),
        order: sub.order(),
        hyperbolic: hyperbolic(&res, seed)?,
    })
}

/// Two-dimensional faithful simple of a dihedral quotient: x -> diag(z, z^-1), y -> swap,
/// where z has order r in GF(q)*.
fn dihedral_pair(field: &Field, r: u64) -> Result<(Matrix, Matrix)> {
    let q1 = field.q() as u64 - 1;
    if q1 % r != 0 {
        return Err(Error::InvalidArgument(format!("{r} does not divide q - 1")));
    }
    let z = field.pow(field.primitive(), q1 / r);
    let zi = field.inv(z)?;
    let mut x = Matrix::zeros(field, 2, 2);
    x.set(0, 0, z);
    x.set(1, 1, zi);
    let y = Matrix::from_u32(field, &[&[0, 1], &[1, 0]]);
    Ok((x, y))
}

fn is_simple(m: &Representation, seed: u64) -> Result<bool> {
    Ok(matches!(meataxe_split(m, seed)?, SplitResult::ProofSimple))
}

/// `V = U (x) W` for `G = C_p x D_2r`, with `p | q + 1` and `r | q - 1`.
pub fn simple_product_example(q: u64, seed: u64) -> Result<SimpleProductReport> {
    let field = Field::from_order(q)?;
    if q < 4 {
        return Err(Error::InvalidArgument("needs q >= 4".into()));
    }
    let p = smallest_odd_prime(q + 1)
        .ok_or_else(|| Error::InvalidArgument("q + 1 has no odd prime".into()))?;
    let r = smallest_odd_prime(q - 1)
        .ok_or_else(|| Error::InvalidArgument("q - 1 has no odd prime".into()))?;
    let group = Arc::new(PermGroup::build(&GroupSpec::DirectProduct(vec![
        GroupSpec::Cyclic(p),
        GroupSpec::ExtendedDihedral { e: 1, n: r },
    ]))?);
    // U: companion matrix of an irreducible quadratic factor of x^p - 1
    let quad = factor(&Poly::x_pow_plus_one(&field, p as usize))
        .into_iter()
        .map(|(f, _)| f)
        .find(|f| f.degree() == Some(2))
        .ok_or_else(|| Error::InvalidArgument("no quadratic factor of x^p - 1".into()))?;
    let u = Matrix::companion(&quad);
    let (wx, wy) = dihedral_pair(&field, r)?;
    let i2 = Matrix::identity(&field, 2);
    let v = Representation::new(
        group.clone(),
        &field,
        vec![u.kronecker(&i2), i2.kronecker(&wx), i2.kronecker(&wy)],
    )?;
    let form = make_invariant_symplectic(&v, seed)?;
    let kind = form.kind();
    let (x1, x2, y2) = (
        group.generator_index(0),
        group.generator_index(1),
        group.generator_index(2),
    );
    let maximal_restrictions = vec![
        restriction(&form, &group, &[x2, y2], seed)?,
        restriction(&form, &group, &[x1, x2], seed)?,
        restriction(&form, &group, &[x1, y2], seed)?,
    ];
    let mut all_max = true;
    for (_, gens) in group.maximal_subgroups() {
        all_max &= restriction(&form, &group, &gens, seed)?.hyperbolic;
    }
    let mut all_proper = true;
    for (set, gens) in group.all_subgroups() {
        if set.len() < group.order() {
            all_proper &= restriction(&form, &group, &gens, seed)?.hyperbolic;
        }
    }
    Ok(SimpleProductReport {
        q,
        p,
        r,
        group_order: group.order(),
        dim: v.dim(),
        simple: is_simple(&v, seed)?,
        symplectic: kind.alternating && kind.nondegenerate && kind.g_invariant,
        hyperbolic: hyperbolic(&form, seed)?,
        maximal_restrictions,
        all_maximal_subgroups_hyperbolic: all_max,
        all_proper_subgroups_hyperbolic: all_proper,
    })
}

/// `V = FG + U` for `G` extended dihedral of order `4p`, `p | q - 1`.
pub fn regular_plus_simple_example(q: u64, seed: u64) -> Result<RegularPlusSimpleReport> {
    let field = Field::from_order(q)?;
    if q < 4 {
        return Err(Error::InvalidArgument("needs q >= 4".into()));
    }
    let p = prime_factors(q - 1)[0];
    let group = Arc::new(PermGroup::build(&GroupSpec::ExtendedDihedral {
        e: 2,
        n: p,
    })?);
    let reg = Representation::regular_module(group.clone(), &field);
    let fg = make_invariant_symplectic(&reg, seed)?;
    let (ux, uy) = dihedral_pair(&field, p)?;
    let u = Representation::new(group.clone(), &field, vec![ux, uy])?;
    let uf = make_invariant_symplectic(&u, seed)?;
    let v = orthogonal_sum(&fg, &uf)?;

    let expected = Poly::x_pow_plus_one(&field, p as usize).pow(4);
    let mut polys = (1..group.order())
        .filter(|&g| group.element_order(g) % 2 == 1)
        .map(|g| reg.char_poly_on(g));
    let first = polys.next();
    let odd_char_poly = match &first {
        Some(f) if polys.all(|g| g == *f) => Some(f.to_u32()),
        _ => None,
    };
    let mut proper_restrictions = Vec::new();
    for (set, gens) in group.all_subgroups() {
        if set.len() < group.order() {
            proper_restrictions.push(restriction(&v, &group, &gens, seed)?);
        }
    }
    Ok(RegularPlusSimpleReport {
        q,
        p,
        group_order: group.order(),
        odd_char_poly_is_expected: first.as_ref() == Some(&expected) && odd_char_poly.is_some(),
        odd_char_poly,
        regular_hyperbolic: hyperbolic(&fg, seed)?,
        dim: v.dim(),
        hyperbolic: hyperbolic(&v, seed)?,
        all_proper_subgroups_hyperbolic: proper_restrictions.iter().all(|r| r.hyperbolic),
        proper_restrictions,
    })
}

/// The two-dimensional simple module of `S_3` with an invariant symplectic form.
pub fn s3_example(q: u64, seed: u64) -> Result<S3Report> {
    let field = Field::from_order(q)?;
    let group = Arc::new(PermGroup::build(&GroupSpec::Symmetric(3))?);
    let perm = Representation::permutation_module(group.clone(), &field);
    let one = FieldElem::ONE;
    let zero = FieldElem::ZERO;
    let aug = Matrix::from_rows(&field, 3, &[vec![one, one, zero], vec![zero, one, one]]);
    let (w, _, _) = perm.split(&aug);
    let form = make_invariant_symplectic(&w, seed)?;
    let kind = form.kind();
    let c = group.mul(group.generator_index(0), group.generator_index(1));
    let c = if group.element_order(c) == 3 {
        c
    } else {
        group.generator_index(1)
    };
    Ok(S3Report {
        q,
        dim: w.dim(),
        simple: is_simple(&w, seed)?,
        symplectic: kind.alternating && kind.nondegenerate && kind.g_invariant,
        hyperbolic: hyperbolic(&form, seed)?,
        c3_hyperbolic: restriction(&form, &group, &[c], seed)?.hyperbolic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_product_over_gf4() {
        let r = simple_product_example(4, 1).unwrap();
        assert_eq!((r.p, r.r, r.group_order, r.dim), (5, 3, 30, 4));
        assert!(r.simple && r.symplectic && !r.hyperbolic);
        assert!(r.maximal_restrictions.iter().all(|x| x.hyperbolic));
        let orders: Vec<usize> = r.maximal_restrictions.iter().map(|x| x.order).collect();
        assert_eq!(orders, vec![6, 15, 10]);
        assert!(r.all_maximal_subgroups_hyperbolic && r.all_proper_subgroups_hyperbolic);
    }

    #[test]
    fn regular_plus_simple_over_gf4() {
        let r = regular_plus_simple_example(4, 1).unwrap();
        assert_eq!((r.p, r.group_order, r.dim), (3, 12, 14));
        assert!(r.odd_char_poly_is_expected);
        assert!(r.regular_hyperbolic && !r.hyperbolic);
        assert!(r.all_proper_subgroups_hyperbolic);
    }

    #[test]
    fn s3_over_gf4_and_gf2() {
        let r = s3_example(4, 1).unwrap();
        assert!(r.simple && r.symplectic && !r.hyperbolic && r.c3_hyperbolic);
        let r2 = s3_example(2, 1).unwrap();
        assert!(!r2.hyperbolic && !r2.c3_hyperbolic);
    }
}
