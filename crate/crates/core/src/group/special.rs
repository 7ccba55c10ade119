//! F-special elements and F-special subgroups relative to a field of order q.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::PermGroup;
use crate::error::{Error, Result};
use crate::finite_field::{gcd, omega_q, pi_number_index, PiClass};

/// Why an element is (or is not) F-special.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum SpecialReason {
    NotOddOrder,
    /// A pi_i(q)-element for this i >= 1.
    Cond1 {
        i: u32,
    },
    /// Real.
    Cond2,
    /// An involutive coset t of C_G(g) in N_G(<g>) whose fixed points in <g>
    /// form a pi_i(q)-group, with the commutator of order n and omega(n) < i.
    Cond3 {
        i: u32,
        n: u64,
    },
    None,
}

/// Isomorphism type of an F-special subgroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum SpecialKind {
    /// C_m with m a pi_i(q)-number, i >= 1 (or m = 1).
    Cyclic { m: u64 },
    /// Extended dihedral of order 2^e n.
    ExtendedDihedral { e: u32, n: u64 },
    /// C_m x extended dihedral of order 2^e n.
    CyclicTimesDihedral { m: u64, i: u32, e: u32, n: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialSubgroup {
    /// Generators as element indices: [] for the trivial group, [g] or [g, t].
    pub generators: Vec<usize>,
    /// Sorted element indices.
    pub elements: Vec<usize>,
    pub kind: SpecialKind,
}

/// Cached F-special data of a group for one field size.
#[derive(Debug)]
pub struct SpecialData {
    pub q: u64,
    pub class_reps: Vec<(usize, SpecialReason)>,
    pub subgroups: Vec<SpecialSubgroup>,
}

fn check_q(q: u64) -> Result<()> {
    if q < 2 || !q.is_power_of_two() {
        return Err(Error::InvalidArgument(format!(
            "q = {q} is not a power of 2"
        )));
    }
    Ok(())
}

/// Decides whether element `g` is F-special over the field with `q` elements.
pub fn is_f_special_element(group: &PermGroup, g: usize, q: u64) -> Result<(bool, SpecialReason)> {
    check_q(q)?;
    let ord = group.element_order(g);
    if ord % 2 == 0 {
        return Ok((false, SpecialReason::NotOddOrder));
    }
    if group.is_real(g) {
        return Ok((true, SpecialReason::Cond2));
    }
    if let PiClass::Index(i) = pi_number_index(ord, q)? {
        if i >= 1 {
            return Ok((true, SpecialReason::Cond1 { i }));
        }
    }
    if let Some(r) = cond3(group, g, q)? {
        return Ok((true, r));
    }
    Ok((false, SpecialReason::None))
}

fn cond3(group: &PermGroup, g: usize, q: u64) -> Result<Option<SpecialReason>> {
    let big_n = group.element_order(g);
    let data = group.cyclic_normalizer_data(g);
    for &(_, a) in &data.actions {
        let a = a % big_n;
        if a == 1 % big_n || (a * a) % big_n != 1 % big_n {
            continue;
        }
        // C_<g>(t) = {g^j : j (a - 1) = 0 mod N} has order gcd(a - 1, N)
        let m = gcd((a + big_n - 1) % big_n, big_n);
        if m == 1 {
            continue;
        }
        if let PiClass::Index(i) = pi_number_index(m, q)? {
            if i >= 1 {
                let n = big_n / m;
                if omega_q(n, q)? < i {
                    return Ok(Some(SpecialReason::Cond3 { i, n }));
                }
            }
        }
    }
    Ok(None)
}

impl PermGroup {
    /// F-special data for field size q, computed once and cached.
    pub fn special_data(&self, q: u64) -> Result<Arc<SpecialData>> {
        check_q(q)?;
        if let Some(d) = self.special_cache().lock().expect("poisoned").get(&q) {
            return Ok(d.clone());
        }
        let mut class_reps = Vec::new();
        for class in self.conjugacy_classes() {
            let rep = class[0];
            let (ok, reason) = is_f_special_element(self, rep, q)?;
            if ok {
                class_reps.push((rep, reason));
            }
        }
        class_reps.sort_by_key(|r| r.0);
        let subgroups = compute_special_subgroups(self, q)?;
        let data = Arc::new(SpecialData {
            q,
            class_reps,
            subgroups,
        });
        self.special_cache()
            .lock()
            .expect("poisoned")
            .insert(q, data.clone());
        Ok(data)
    }
}

/// One representative (least element index) per conjugacy class of
/// F-special elements, identity first.
pub fn f_special_class_reps(group: &PermGroup, q: u64) -> Result<Vec<usize>> {
    Ok(group
        .special_data(q)?
        .class_reps
        .iter()
        .map(|r| r.0)
        .collect())
}

/// F-special subgroups up to conjugacy, ordered by (order, canonical element set).
pub fn f_special_subgroups(group: &PermGroup, q: u64) -> Result<Vec<SpecialSubgroup>> {
    Ok(group.special_data(q)?.subgroups.clone())
}

fn classify_pair(
    group: &PermGroup,
    g: usize,
    t: usize,
    a: u64,
    q: u64,
) -> Result<Option<SpecialKind>> {
    let big_n = group.element_order(g);
    let a = a % big_n;
    let t_ord = group.element_order(t);
    if t == 0 || a == 1 % big_n {
        if t != 0 {
            return Ok(None);
        }
        return Ok(pi_number_index(big_n, q)?
            .is_positive_index()
            .then_some(SpecialKind::Cyclic { m: big_n }));
    }
    let e = t_ord.trailing_zeros();
    let m = gcd((a + big_n - 1) % big_n, big_n);
    let n = big_n / m;
    if n < 3 {
        return Ok(None);
    }
    if m == 1 {
        return Ok(Some(SpecialKind::ExtendedDihedral { e, n }));
    }
    match pi_number_index(m, q)? {
        PiClass::Index(i) if i >= 1 && omega_q(n, q)? < i => {
            Ok(Some(SpecialKind::CyclicTimesDihedral { m, i, e, n }))
        }
        _ => Ok(None),
    }
}

fn compute_special_subgroups(group: &PermGroup, q: u64) -> Result<Vec<SpecialSubgroup>> {
    let order = group.order();
    let two_elements: Vec<usize> = (0..order)
        .filter(|&t| group.element_order(t).is_power_of_two())
        .collect();
    let mut seen_sets: HashSet<Vec<usize>> = HashSet::new();
    let mut by_key: BTreeMap<(usize, Vec<usize>), SpecialSubgroup> = BTreeMap::new();
    for g in (0..order).filter(|&g| group.element_order(g) % 2 == 1) {
        let big_n = group.element_order(g);
        let powers = group.cyclic_powers(g);
        for &t in &two_elements {
            let c = group.conj(g, t);
            let Some(a) = powers.iter().position(|&p| p == c) else {
                continue;
            };
            let a = a as u64;
            // t^2 must centralize g
            if (a * a) % big_n != 1 % big_n {
                continue;
            }
            let Some(kind) = classify_pair(group, g, t, a, q)? else {
                continue;
            };
            let gens: Vec<usize> = [g, t].into_iter().filter(|&x| x != 0).collect();
            let elements = group.closure(&gens);
            if !seen_sets.insert(elements.clone()) {
                continue;
            }
            let key = (elements.len(), group.conjugacy_key(&elements));
            by_key.entry(key).or_insert(SpecialSubgroup {
                generators: gens,
                elements,
                kind,
            });
        }
    }
    Ok(by_key.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{GroupElement, GroupSpec};

    fn c5xd6() -> PermGroup {
        PermGroup::build(&GroupSpec::DirectProduct(vec![
            GroupSpec::Cyclic(5),
            GroupSpec::ExtendedDihedral { e: 1, n: 3 },
        ]))
        .unwrap()
    }

    #[test]
    fn element_examples() {
        let s3 = PermGroup::build(&GroupSpec::Symmetric(3)).unwrap();
        let c = s3.index_of(&GroupElement(vec![1, 2, 0])).unwrap();
        assert_eq!(
            is_f_special_element(&s3, c, 2).unwrap(),
            (true, SpecialReason::Cond2)
        );
        assert_eq!(
            is_f_special_element(&s3, 0, 2).unwrap(),
            (true, SpecialReason::Cond2)
        );
        let t = s3.index_of(&GroupElement(vec![1, 0, 2])).unwrap();
        assert_eq!(
            is_f_special_element(&s3, t, 2).unwrap(),
            (false, SpecialReason::NotOddOrder)
        );

        let c7 = PermGroup::build(&GroupSpec::Cyclic(7)).unwrap();
        assert_eq!(
            is_f_special_element(&c7, c7.generator_index(0), 2).unwrap(),
            (false, SpecialReason::None)
        );

        let g = c5xd6();
        let c15 = g.mul(g.generator_index(0), g.generator_index(1));
        assert_eq!(
            is_f_special_element(&g, c15, 4).unwrap(),
            (true, SpecialReason::Cond3 { i: 1, n: 3 })
        );
    }

    #[test]
    fn class_rep_examples() {
        let s3 = PermGroup::build(&GroupSpec::Symmetric(3)).unwrap();
        let reps = f_special_class_reps(&s3, 2).unwrap();
        assert_eq!(reps.len(), 2);
        assert_eq!(reps[0], 0);
        assert_eq!(s3.element_order(reps[1]), 3);
        let c7 = PermGroup::build(&GroupSpec::Cyclic(7)).unwrap();
        assert_eq!(f_special_class_reps(&c7, 2).unwrap(), vec![0]);
        let c3 = PermGroup::build(&GroupSpec::Cyclic(3)).unwrap();
        assert_eq!(f_special_class_reps(&c3, 2).unwrap().len(), 3);
    }

    #[test]
    fn subgroup_examples() {
        let s3 = PermGroup::build(&GroupSpec::Symmetric(3)).unwrap();
        let subs = f_special_subgroups(&s3, 2).unwrap();
        let orders: Vec<usize> = subs.iter().map(|s| s.elements.len()).collect();
        assert_eq!(orders, vec![1, 3, 6]);

        let g = c5xd6();
        let subs = f_special_subgroups(&g, 4).unwrap();
        let whole = subs.iter().find(|s| s.elements.len() == 30).unwrap();
        assert_eq!(
            whole.kind,
            SpecialKind::CyclicTimesDihedral {
                m: 5,
                i: 1,
                e: 1,
                n: 3
            }
        );

        let c7 = PermGroup::build(&GroupSpec::Cyclic(7)).unwrap();
        let subs = f_special_subgroups(&c7, 2).unwrap();
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0].elements, vec![0]);
    }

    #[test]
    fn rejects_bad_q() {
        let c3 = PermGroup::build(&GroupSpec::Cyclic(3)).unwrap();
        assert!(is_f_special_element(&c3, 0, 3).is_err());
    }
}
