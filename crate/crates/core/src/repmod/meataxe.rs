//! Randomized splitting of modules (Holt-Rees) with Norton's irreducibility test.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Representation;
use crate::error::{Error, Result};
use crate::finite_field::FieldElem;
use crate::linalg::factor::factor;
use crate::linalg::{spin, Matrix};

const MAX_PROBES: usize = 200;
const EXHAUSTIVE_LIMIT: u64 = 1 << 20;

#[derive(Clone, Debug)]
pub enum SplitResult {
    /// Reduced echelon basis of a proper nonzero submodule.
    ProperSubmodule(Matrix),
    /// Norton's criterion certified irreducibility.
    ProofSimple,
}

fn random_algebra_element(m: &Representation, rng: &mut ChaCha8Rng) -> Matrix {
    let f = m.field();
    let n = m.dim();
    let gens = m.generator_matrices();
    let mut a = Matrix::identity(f, n).scaled(FieldElem(rng.gen_range(0..f.q()) as u16));
    if gens.is_empty() {
        return a;
    }
    for _ in 0..3 {
        let len = rng.gen_range(1..=3);
        let mut w = gens[rng.gen_range(0..gens.len())].clone();
        for _ in 1..len {
            w = w.mul_unchecked(&gens[rng.gen_range(0..gens.len())]);
        }
        let c = FieldElem(rng.gen_range(1..f.q()) as u16);
        a.add_scaled(c, &w);
    }
    a
}

/// Spins `v` under `gens`; returns the spanned space if proper.
fn proper_spin(m: &Representation, v: &[FieldElem], gens: &[Matrix]) -> Option<Matrix> {
    let b = spin(m.field(), m.dim(), &[v.to_vec()], gens);
    (!b.is_full()).then(|| b.to_matrix())
}

/// Annihilator `{v : W v^T = 0}` of a space spanned by the rows of `w`.
fn annihilator(w: &Matrix) -> Matrix {
    w.kernel()
}

/// Either finds a proper submodule or proves the module simple.
pub fn meataxe_split(m: &Representation, seed: u64) -> Result<SplitResult> {
    let n = m.dim();
    if n == 0 {
        return Err(Error::ZeroModule);
    }
    if n == 1 {
        return Ok(SplitResult::ProofSimple);
    }
    let gens = m.generator_matrices().to_vec();
    let gens_t: Vec<Matrix> = gens.iter().map(|g| g.transpose()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut smallest: Option<Matrix> = None;
    for _ in 0..MAX_PROBES {
        let a = random_algebra_element(m, &mut rng);
        let cp = a.char_poly()?;
        for (p, _) in factor(&cp) {
            let b = p.eval_matrix(&a);
            let null = b.left_kernel();
            if let Some(u) = proper_spin(m, null.row(0), &gens) {
                return Ok(SplitResult::ProperSubmodule(u));
            }
            let null_t = b.kernel();
            if let Some(w) = proper_spin(m, null_t.row(0), &gens_t) {
                return Ok(SplitResult::ProperSubmodule(annihilator(&w)));
            }
            let deg = p.degree().expect("nonconstant factor");
            if null.rows() == deg {
                return Ok(SplitResult::ProofSimple);
            }
            if smallest.as_ref().map_or(true, |s| null.rows() < s.rows()) {
                smallest = Some(b);
            }
        }
    }
    // Norton's test on the smallest nullspace seen, by enumeration.
    let b = smallest.expect("at least one probe ran");
    let null = b.left_kernel();
    let q = m.field().q() as u64;
    let d = null.rows() as u32;
    let count = q.checked_pow(d).filter(|&c| c <= EXHAUSTIVE_LIMIT);
    let Some(count) = count else {
        return Err(Error::SearchTooLarge(q.saturating_pow(d)));
    };
    for idx in 1..count {
        let v = combo(m, &null, idx);
        if let Some(u) = proper_spin(m, &v, &gens) {
            return Ok(SplitResult::ProperSubmodule(u));
        }
    }
    let null_t = b.kernel();
    match proper_spin(m, null_t.row(0), &gens_t) {
        Some(w) => Ok(SplitResult::ProperSubmodule(annihilator(&w))),
        None => Ok(SplitResult::ProofSimple),
    }
}

/// Linear combination of the rows of `basis` with coefficients read from the
/// base-q digits of `idx`.
fn combo(m: &Representation, basis: &Matrix, mut idx: u64) -> Vec<FieldElem> {
    let f = m.field();
    let q = f.q() as u64;
    let mut v = vec![FieldElem::ZERO; basis.cols()];
    for r in 0..basis.rows() {
        let c = FieldElem((idx % q) as u16);
        idx /= q;
        if !c.is_zero() {
            f.axpy(&mut v, c, basis.row(r));
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_field::Field;
    use crate::group::{GroupSpec, PermGroup};
    use std::sync::Arc;

    #[test]
    fn splits_permutation_module_of_s3() {
        let f2 = Field::new(1).unwrap();
        let s3 = Arc::new(PermGroup::build(&GroupSpec::Symmetric(3)).unwrap());
        let p = Representation::permutation_module(s3, &f2);
        match meataxe_split(&p, 1).unwrap() {
            SplitResult::ProperSubmodule(u) => {
                assert!(u.rows() > 0 && u.rows() < 3);
                assert!(p.is_submodule(&u));
            }
            SplitResult::ProofSimple => panic!("permutation module is reducible"),
        }
    }

    #[test]
    fn two_dim_simple_of_s3() {
        let f2 = Field::new(1).unwrap();
        let s3 = Arc::new(PermGroup::build(&GroupSpec::Symmetric(3)).unwrap());
        let p = Representation::permutation_module(s3, &f2);
        // augmentation submodule {sum = 0} is the 2-dimensional simple
        let aug = Matrix::from_u32(&f2, &[&[1, 1, 0], &[0, 1, 1]]);
        let (sub, _, _) = p.split(&aug);
        assert!(matches!(
            meataxe_split(&sub, 7).unwrap(),
            SplitResult::ProofSimple
        ));
    }

    #[test]
    fn trivial_group_splits_dimension_two() {
        let f2 = Field::new(1).unwrap();
        let c1 = Arc::new(PermGroup::build(&GroupSpec::Cyclic(1)).unwrap());
        let t = Representation::trivial(c1, &f2, 2);
        assert!(matches!(
            meataxe_split(&t, 0).unwrap(),
            SplitResult::ProperSubmodule(_)
        ));
        let z = Representation::trivial(
            Arc::new(PermGroup::build(&GroupSpec::Cyclic(1)).unwrap()),
            &f2,
            0,
        );
        assert!(matches!(meataxe_split(&z, 0), Err(Error::ZeroModule)));
    }
}
