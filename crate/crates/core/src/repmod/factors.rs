//! Composition factors, isomorphism of simple modules, and multiplicities.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::meataxe::{meataxe_split, SplitResult};
use super::Representation;
use crate::error::{Error, Result};
use crate::finite_field::Field;
use crate::group::PermGroup;

/// Basis-independent invariant of a module: its dimension and the
/// characteristic polynomials of the generators and their pairwise products.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Fingerprint {
    pub dim: usize,
    pub char_polys: Vec<Vec<u32>>,
}

impl Fingerprint {
    pub fn of(m: &Representation) -> Fingerprint {
        let g = m.group();
        let gens: Vec<usize> = (0..g.generators().len())
            .map(|s| g.generator_index(s))
            .collect();
        let mut elems = gens.clone();
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                elems.push(g.mul(gens[i], gens[j]));
            }
        }
        Fingerprint {
            dim: m.dim(),
            char_polys: elems.iter().map(|&e| m.char_poly_on(e).to_u32()).collect(),
        }
    }
}

/// One isomorphism type of composition factor.
#[derive(Clone, Debug)]
pub struct Factor {
    pub module: Representation,
    pub multiplicity: usize,
    pub self_dual: bool,
    pub fingerprint: Fingerprint,
}

/// Composition factors grouped by isomorphism type, sorted by (dim, fingerprint).
#[derive(Clone, Debug, Default)]
pub struct FactorMultiset {
    pub entries: Vec<Factor>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorSummary {
    pub dim: usize,
    pub multiplicity: usize,
    pub self_dual: bool,
}

impl FactorMultiset {
    pub fn total_dim(&self) -> usize {
        self.entries
            .iter()
            .map(|e| e.module.dim() * e.multiplicity)
            .sum()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Multiplicity of the simple module `s` (0 if absent).
    pub fn multiplicity_of(&self, s: &Representation) -> Result<usize> {
        let fp = Fingerprint::of(s);
        for e in &self.entries {
            if e.fingerprint == fp && simple_iso(&e.module, s)? {
                return Ok(e.multiplicity);
            }
        }
        Ok(0)
    }

    pub fn summary(&self) -> Vec<FactorSummary> {
        self.entries
            .iter()
            .map(|e| FactorSummary {
                dim: e.module.dim(),
                multiplicity: e.multiplicity,
                self_dual: e.self_dual,
            })
            .collect()
    }
}

/// Whether two simple modules are isomorphic.
///
/// Fails with `NotSimpleInput` when a nonzero homomorphism is singular, which
/// cannot happen between simple modules.
pub fn simple_iso(s: &Representation, t: &Representation) -> Result<bool> {
    if !s.same_context(t) {
        return Err(Error::MismatchedContext);
    }
    if s.dim() != t.dim() {
        return Ok(false);
    }
    let hom = s.hom_space(t)?;
    match hom.first() {
        None => Ok(false),
        Some(x) if x.is_invertible() => Ok(true),
        Some(_) => Err(Error::NotSimpleInput),
    }
}

fn split_to_simples(m: &Representation, seed: u64) -> Result<Vec<Representation>> {
    if m.dim() == 0 {
        return Ok(Vec::new());
    }
    let mut stack = vec![m.clone()];
    let mut simples = Vec::new();
    let mut counter: u64 = 0;
    while let Some(cur) = stack.pop() {
        counter += 1;
        let s = seed ^ counter.wrapping_mul(0x9e37_79b9_7f4a_7c15);
        match meataxe_split(&cur, s)? {
            SplitResult::ProofSimple => simples.push(cur),
            SplitResult::ProperSubmodule(u) => {
                let (sub, quo, _) = cur.split(&u);
                stack.push(quo);
                stack.push(sub);
            }
        }
    }
    Ok(simples)
}

/// Composition factors with multiplicities and self-duality flags.
pub fn composition_factors(m: &Representation, seed: u64) -> Result<FactorMultiset> {
    let simples = split_to_simples(m, seed)?;
    let mut entries: Vec<Factor> = Vec::new();
    'next: for s in simples {
        let fp = Fingerprint::of(&s);
        for e in entries.iter_mut() {
            if e.fingerprint == fp && simple_iso(&e.module, &s)? {
                e.multiplicity += 1;
                continue 'next;
            }
        }
        entries.push(Factor {
            module: s,
            multiplicity: 1,
            self_dual: false,
            fingerprint: fp,
        });
    }
    for e in entries.iter_mut() {
        let d = e.module.dual();
        e.self_dual = Fingerprint::of(&d) == e.fingerprint && simple_iso(&e.module, &d)?;
    }
    entries.sort_by(|a, b| a.fingerprint.cmp(&b.fingerprint));
    Ok(FactorMultiset { entries })
}

/// Whether every self-dual composition factor occurs with even multiplicity;
/// otherwise returns the first self-dual factor of odd multiplicity.
pub fn is_even_multiplicity(m: &Representation, seed: u64) -> Result<(bool, Option<Factor>)> {
    let fs = composition_factors(m, seed)?;
    match fs
        .entries
        .into_iter()
        .find(|e| e.self_dual && e.multiplicity % 2 == 1)
    {
        Some(e) => Ok((false, Some(e))),
        None => Ok((true, None)),
    }
}

/// Representatives of the simple modules of the group over the field, taken
/// from the composition factors of the regular module.
pub fn simple_modules(
    group: Arc<PermGroup>,
    field: &Field,
    seed: u64,
) -> Result<Vec<Representation>> {
    let reg = Representation::regular_module(group, field);
    Ok(composition_factors(&reg, seed)?
        .entries
        .into_iter()
        .map(|e| e.module)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;
    use crate::linalg::Matrix;

    fn grp(spec: GroupSpec) -> Arc<PermGroup> {
        Arc::new(PermGroup::build(&spec).unwrap())
    }

    #[test]
    fn c3_over_gf2_and_gf4() {
        let f2 = Field::new(1).unwrap();
        let c3 = grp(GroupSpec::Cyclic(3));
        let fs = composition_factors(&Representation::regular_module(c3.clone(), &f2), 3).unwrap();
        let dims: Vec<(usize, usize, bool)> = fs
            .entries
            .iter()
            .map(|e| (e.module.dim(), e.multiplicity, e.self_dual))
            .collect();
        assert_eq!(dims, vec![(1, 1, true), (2, 1, true)]);

        let f4 = Field::new(2).unwrap();
        let fs = composition_factors(&Representation::regular_module(c3, &f4), 3).unwrap();
        assert_eq!(fs.len(), 3);
        assert_eq!(fs.entries.iter().filter(|e| e.self_dual).count(), 1);
    }

    #[test]
    fn iso_detects_dual_pair() {
        let f4 = Field::new(2).unwrap();
        let c3 = grp(GroupSpec::Cyclic(3));
        let w = Representation::new(c3.clone(), &f4, vec![Matrix::from_u32(&f4, &[&[2]])]).unwrap();
        assert!(!simple_iso(&w, &w.dual()).unwrap());
        assert!(simple_iso(&w, &w).unwrap());
        let sum = w.sum(&w.dual()).unwrap();
        assert!(matches!(simple_iso(&sum, &sum), Err(Error::NotSimpleInput)));
        // W and W* are not self-dual, so odd multiplicities are allowed
        let (even, _) = is_even_multiplicity(&sum, 0).unwrap();
        assert!(even);
        let f2 = Field::new(1).unwrap();
        let s3 = grp(GroupSpec::Symmetric(3));
        let (even, odd) =
            is_even_multiplicity(&Representation::permutation_module(s3, &f2), 0).unwrap();
        assert!(!even);
        assert_eq!(odd.unwrap().module.dim(), 1);
    }

    #[test]
    fn s4_and_dihedral_simples() {
        let f2 = Field::new(1).unwrap();
        let s4 = simple_modules(grp(GroupSpec::Symmetric(4)), &f2, 1).unwrap();
        let dims: Vec<usize> = s4.iter().map(|s| s.dim()).collect();
        assert_eq!(dims, vec![1, 2]);
        let f4 = Field::new(2).unwrap();
        let d = simple_modules(grp(GroupSpec::ExtendedDihedral { e: 2, n: 3 }), &f4, 1).unwrap();
        let dims: Vec<usize> = d.iter().map(|s| s.dim()).collect();
        assert_eq!(dims, vec![1, 2]);
    }

    #[test]
    fn multiplicities_of_regular_module() {
        // over a splitting field each simple occurs dim(P) times; for C5 over GF(16) all are 1-dim
        let f16 = Field::new(4).unwrap();
        let c5 = grp(GroupSpec::Cyclic(5));
        let fs = composition_factors(&Representation::regular_module(c5, &f16), 9).unwrap();
        assert_eq!(fs.len(), 5);
        assert!(fs
            .entries
            .iter()
            .all(|e| e.multiplicity == 1 && e.module.dim() == 1));
        assert_eq!(fs.total_dim(), 5);
    }
}
