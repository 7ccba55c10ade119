//! Self-dual binary codes invariant under a permutation group.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finite_field::{Field, FieldElem};
use crate::forms::{construct_self_perpendicular, BilinearForm};
use crate::group::{f_special_class_reps, GroupElement, PermGroup};
use crate::linalg::Matrix;
use crate::repmod::Representation;

pub const MAX_ORACLE_LENGTH: usize = 12;

/// Cycle sizes (fixed points included) mapped to how often they occur.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleType(pub BTreeMap<usize, usize>);

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(s, c)| format!("{s}:{c}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub fn cycle_type(sigma: &GroupElement) -> CycleType {
    let mut m = BTreeMap::new();
    for c in sigma.cycles() {
        *m.entry(c.len()).or_insert(0) += 1;
    }
    CycleType(m)
}

/// A binary code of length `n <= 64` given by reduced echelon generator rows;
/// bit `i` of a row is coordinate `i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BinaryCode {
    pub n: usize,
    pub rows: Vec<u64>,
}

/// Reduced echelon form over GF(2) with pivots at the lowest set bit, rows
/// sorted by pivot.
fn rref_bits(rows: &[u64]) -> Vec<u64> {
    let mut basis: Vec<u64> = Vec::new();
    for &r in rows {
        let mut v = r;
        for &b in &basis {
            if v & (b & b.wrapping_neg()) != 0 {
                v ^= b;
            }
        }
        if v == 0 {
            continue;
        }
        let p = v & v.wrapping_neg();
        for b in basis.iter_mut() {
            if *b & p != 0 {
                *b ^= v;
            }
        }
        basis.push(v);
    }
    basis.sort_by_key(|b| b.trailing_zeros());
    basis
}

fn reduce_bits(basis: &[u64], mut v: u64) -> u64 {
    for &b in basis {
        if v & (b & b.wrapping_neg()) != 0 {
            v ^= b;
        }
    }
    v
}

fn dot_bits(a: u64, b: u64) -> bool {
    (a & b).count_ones() % 2 == 1
}

fn permute_bits(v: u64, sigma: &GroupElement) -> u64 {
    let mut out = 0;
    for (i, &j) in sigma.0.iter().enumerate() {
        if v >> i & 1 == 1 {
            out |= 1 << j;
        }
    }
    out
}

impl BinaryCode {
    pub fn new(n: usize, rows: &[u64]) -> BinaryCode {
        BinaryCode {
            n,
            rows: rref_bits(rows),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, v: u64) -> bool {
        reduce_bits(&self.rows, v) == 0
    }

    /// `C = C^perp` for the standard dot product.
    pub fn is_self_dual(&self) -> bool {
        2 * self.dim() == self.n
            && self
                .rows
                .iter()
                .all(|&a| self.rows.iter().all(|&b| !dot_bits(a, b)))
    }

    /// Invariance under each permutation (coordinate `i` moves to `sigma(i)`).
    pub fn is_invariant(&self, perms: &[GroupElement]) -> bool {
        perms
            .iter()
            .all(|s| self.rows.iter().all(|&r| self.contains(permute_bits(r, s))))
    }

    pub fn bitstrings(&self) -> Vec<String> {
        self.rows
            .iter()
            .map(|&r| {
                (0..self.n)
                    .map(|i| if r >> i & 1 == 1 { '1' } else { '0' })
                    .collect()
            })
            .collect()
    }

    pub fn to_matrix(&self) -> Matrix {
        let f = Field::new(1).expect("GF(2)");
        let rows: Vec<Vec<FieldElem>> = self
            .rows
            .iter()
            .map(|&r| {
                (0..self.n)
                    .map(|i| FieldElem((r >> i & 1) as u16))
                    .collect()
            })
            .collect();
        Matrix::from_rows(&f, self.n, &rows)
    }

    pub fn from_matrix(m: &Matrix) -> Result<BinaryCode> {
        if m.field().k() != 1 || m.cols() > 64 {
            return Err(Error::InvalidArgument(
                "binary code needs GF(2) and length <= 64".into(),
            ));
        }
        let rows: Vec<u64> = (0..m.rows())
            .map(|r| {
                m.row(r)
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (i, e)| acc | ((e.0 as u64 & 1) << i))
            })
            .collect();
        Ok(BinaryCode::new(m.cols(), &rows))
    }
}

/// An F_2-special element with an odd number of cycles of some size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeCertificate {
    pub element: Vec<u32>,
    pub cycle_size: usize,
    pub count: usize,
}

/// Whether a self-dual code invariant under the group exists; on failure the
/// certificate names the offending special element and cycle size.
pub fn code_exists(group: &PermGroup) -> Result<(bool, Option<CodeCertificate>)> {
    for g in f_special_class_reps(group, 2)? {
        let sigma = group.element(g);
        if let Some((&size, &count)) = cycle_type(sigma).0.iter().find(|(_, &c)| c % 2 == 1) {
            return Ok((
                false,
                Some(CodeCertificate {
                    element: sigma.0.clone(),
                    cycle_size: size,
                    count,
                }),
            ));
        }
    }
    Ok((true, None))
}

/// The permutation module over GF(2) with the standard dot product.
pub fn standard_form(group: Arc<PermGroup>) -> Result<BilinearForm> {
    let f2 = Field::new(1)?;
    let n = group.degree();
    BilinearForm::new(
        Representation::permutation_module(group, &f2),
        Matrix::identity(&f2, n),
    )
}

/// A self-dual invariant code, built as a self-perpendicular submodule of the
/// permutation module.
pub fn construct_code(group: Arc<PermGroup>, seed: u64) -> Result<BinaryCode> {
    if group.degree() > 64 {
        return Err(Error::LengthTooLarge(group.degree()));
    }
    let perms = group.generators().to_vec();
    let form = standard_form(group)?;
    let w = construct_self_perpendicular(&form, seed)?;
    let code = BinaryCode::from_matrix(&w)?;
    if !code.is_self_dual() || !code.is_invariant(&perms) {
        return Err(Error::ConstructionFailed("code check failed".into()));
    }
    Ok(code)
}

/// Every self-dual binary code of even length `n <= 12`, sorted.
///
/// Self-dual codes contain the all-ones vector (each codeword has even weight),
/// so the search grows totally isotropic subspaces from `span(1...1)`.
pub fn enumerate_selfdual_codes(n: usize) -> Result<Vec<BinaryCode>> {
    if n > MAX_ORACLE_LENGTH {
        return Err(Error::LengthTooLarge(n));
    }
    if n % 2 == 1 {
        return Err(Error::OddLength(n));
    }
    if n == 0 {
        return Ok(vec![BinaryCode::new(0, &[])]);
    }
    let ones = (1u64 << n) - 1;
    let mut level: BTreeSet<Vec<u64>> = BTreeSet::new();
    level.insert(rref_bits(&[ones]));
    for _ in 1..n / 2 {
        let mut next = BTreeSet::new();
        for basis in &level {
            for v in 1..=ones {
                if v.count_ones() % 2 == 1 || reduce_bits(basis, v) == 0 {
                    continue;
                }
                if basis.iter().any(|&b| dot_bits(b, v)) {
                    continue;
                }
                let mut rows = basis.clone();
                rows.push(v);
                next.insert(rref_bits(&rows));
            }
        }
        level = next;
    }
    Ok(level
        .into_iter()
        .map(|rows| BinaryCode { n, rows })
        .collect())
}

/// Product formula for the number of self-dual codes of even length n.
pub fn selfdual_count_formula(n: usize) -> u64 {
    (1..n / 2).map(|i| (1u64 << i) + 1).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;

    fn el(v: &[u32]) -> GroupElement {
        GroupElement(v.to_vec())
    }

    #[test]
    fn cycle_types() {
        assert_eq!(cycle_type(&GroupElement::identity(6)).to_string(), "{1:6}");
        assert_eq!(cycle_type(&el(&[1, 2, 0, 4, 5, 3])).to_string(), "{3:2}");
        assert_eq!(
            cycle_type(&el(&[1, 2, 0, 3, 4, 5])).to_string(),
            "{1:3, 3:1}"
        );
    }

    #[test]
    fn existence_examples() {
        let g = PermGroup::new(6, vec![el(&[1, 2, 0, 4, 5, 3])], 100).unwrap();
        assert!(code_exists(&g).unwrap().0);
        let odd = PermGroup::build(&GroupSpec::Symmetric(3)).unwrap();
        let (ok, cert) = code_exists(&odd).unwrap();
        assert!(!ok);
        assert_eq!(cert.unwrap().cycle_size, 1);
        let s2 = PermGroup::build(&GroupSpec::Symmetric(2)).unwrap();
        assert!(code_exists(&s2).unwrap().0);
        let c = construct_code(Arc::new(s2), 0).unwrap();
        assert_eq!(c.bitstrings(), vec!["11"]);
    }

    #[test]
    fn construct_diagonal_code() {
        let g = Arc::new(PermGroup::new(6, vec![el(&[1, 2, 0, 4, 5, 3])], 100).unwrap());
        let c = construct_code(g.clone(), 0).unwrap();
        assert_eq!(c.dim(), 3);
        assert!(c.is_self_dual() && c.is_invariant(g.generators()));
    }

    #[test]
    fn oracle_counts() {
        let counts: Vec<usize> = [2, 4, 6, 8]
            .iter()
            .map(|&n| enumerate_selfdual_codes(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 3, 15, 135]);
        for n in [2, 4, 6, 8] {
            assert_eq!(
                selfdual_count_formula(n),
                enumerate_selfdual_codes(n).unwrap().len() as u64
            );
        }
        assert!(enumerate_selfdual_codes(6)
            .unwrap()
            .iter()
            .all(|c| c.is_self_dual()));
        assert!(matches!(
            enumerate_selfdual_codes(5),
            Err(Error::OddLength(5))
        ));
        assert!(matches!(
            enumerate_selfdual_codes(14),
            Err(Error::LengthTooLarge(14))
        ));
    }
}
