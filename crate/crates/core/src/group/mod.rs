//! Finite groups as permutation groups with full element enumeration.

mod special;

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finite_field::gcd;

pub use special::{
    f_special_class_reps, f_special_subgroups, is_f_special_element, SpecialData, SpecialKind,
    SpecialReason, SpecialSubgroup,
};

/// Default bound on enumerated group order.
pub const DEFAULT_GROUP_CAP: usize = 100_000;

/// A permutation of {0..degree-1} as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElement(pub Vec<u32>);

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_notation())
    }
}

impl GroupElement {
    pub fn identity(degree: usize) -> Self {
        GroupElement((0..degree as u32).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    pub fn is_bijection(&self) -> bool {
        let n = self.0.len();
        let mut seen = vec![false; n];
        for &j in &self.0 {
            let j = j as usize;
            if j >= n || seen[j] {
                return false;
            }
            seen[j] = true;
        }
        true
    }

    /// `self` then `other` (right action: `i -> other[self[i]]`).
    pub fn then(&self, other: &GroupElement) -> GroupElement {
        GroupElement(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> GroupElement {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        GroupElement(inv)
    }

    /// Disjoint cycles of length > 1, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut cyc = vec![s as u32];
            seen[s] = true;
            let mut j = self.0[s] as usize;
            while j != s {
                seen[j] = true;
                cyc.push(j as u32);
                j = self.0[j] as usize;
            }
            out.push(cyc);
        }
        out
    }

    pub fn cycle_notation(&self) -> String {
        let cyc: Vec<String> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                format!("({})", parts.join(" "))
            })
            .collect();
        if cyc.is_empty() {
            "()".into()
        } else {
            cyc.concat()
        }
    }
}

/// Constructors for the families the tool knows by name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GroupSpec {
    Cyclic(u64),
    /// <x, y | x^n = y^(2^e) = 1, y^-1 x y = x^-1>, order 2^e n.
    ExtendedDihedral {
        e: u32,
        n: u64,
    },
    DirectProduct(Vec<GroupSpec>),
    RawPermutation {
        degree: usize,
        generators: Vec<Vec<u32>>,
    },
    Symmetric(usize),
    Alternating(usize),
}

struct Enumeration {
    elems: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
    /// BFS tree: element = parent * generators[gen].
    parent: Vec<Option<(usize, usize)>>,
    inverse: Vec<usize>,
    orders: Vec<u64>,
    table: Option<Vec<u32>>,
}

/// A finite permutation group with its elements enumerated.
///
/// Element indices are stable: index 0 is the identity and the remaining
/// elements follow breadth-first order over the generators.
pub struct PermGroup {
    degree: usize,
    generators: Vec<GroupElement>,
    labels: Vec<String>,
    name: String,
    enumeration: Enumeration,
    special: Mutex<BTreeMap<u64, Arc<SpecialData>>>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (order {}, degree {})",
            self.name,
            self.order(),
            self.degree
        )
    }
}

const TABLE_LIMIT: usize = 4096;

fn enumerate(degree: usize, gens: &[GroupElement], cap: usize) -> Result<Enumeration> {
    let id = GroupElement::identity(degree);
    let mut elems = vec![id.clone()];
    let mut index = HashMap::new();
    index.insert(id, 0usize);
    let mut parent = vec![None];
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for (gi, g) in gens.iter().enumerate() {
            let p = elems[i].then(g);
            if !index.contains_key(&p) {
                if elems.len() >= cap {
                    return Err(Error::GroupTooLarge(cap));
                }
                index.insert(p.clone(), elems.len());
                queue.push_back(elems.len());
                elems.push(p);
                parent.push(Some((i, gi)));
            }
        }
    }
    let inverse = elems.iter().map(|e| index[&e.inverse()]).collect();
    let n = elems.len();
    let table = (n <= TABLE_LIMIT).then(|| {
        let mut t = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                t[i * n + j] = index[&elems[i].then(&elems[j])] as u32;
            }
        }
        t
    });
    let mut orders = vec![0u64; n];
    for i in 0..n {
        let mut o = 1;
        let mut p = elems[i].clone();
        while !p.is_identity() {
            p = p.then(&elems[i]);
            o += 1;
        }
        orders[i] = o;
    }
    Ok(Enumeration {
        elems,
        index,
        parent,
        inverse,
        orders,
        table,
    })
}

fn cycle_perm(degree: usize, points: &[u32]) -> GroupElement {
    let mut p: Vec<u32> = (0..degree as u32).collect();
    for w in 0..points.len() {
        p[points[w] as usize] = points[(w + 1) % points.len()];
    }
    GroupElement(p)
}

impl PermGroup {
    /// Group generated by `generators` on `degree` points.
    pub fn new(degree: usize, generators: Vec<GroupElement>, cap: usize) -> Result<PermGroup> {
        if degree == 0 {
            return Err(Error::InvalidSpec("degree must be positive".into()));
        }
        for g in &generators {
            if g.degree() != degree || !g.is_bijection() {
                return Err(Error::InvalidSpec(format!(
                    "{:?} is not a permutation of {degree} points",
                    g.0
                )));
            }
        }
        let enumeration = enumerate(degree, &generators, cap)?;
        let labels = (0..generators.len()).map(|i| format!("g{i}")).collect();
        Ok(PermGroup {
            degree,
            generators,
            labels,
            name: "G".into(),
            enumeration,
            special: Mutex::new(BTreeMap::new()),
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.generators.len());
        self.labels = labels;
        self
    }

    pub fn build(spec: &GroupSpec) -> Result<PermGroup> {
        Self::build_capped(spec, DEFAULT_GROUP_CAP)
    }

    pub fn build_capped(spec: &GroupSpec, cap: usize) -> Result<PermGroup> {
        let (degree, gens, labels, name) = Self::realize(spec)?;
        let g = PermGroup::new(degree, gens, cap)?
            .with_labels(labels)
            .with_name(name);
        if let GroupSpec::ExtendedDihedral { e, n } = spec {
            g.check_extended_dihedral(*e, *n)?;
        }
        Ok(g)
    }

    fn realize(spec: &GroupSpec) -> Result<(usize, Vec<GroupElement>, Vec<String>, String)> {
        match spec {
            GroupSpec::Cyclic(m) => {
                if *m == 0 {
                    return Err(Error::InvalidSpec("cyclic order must be >= 1".into()));
                }
                let m = *m as usize;
                let gen = GroupElement((0..m as u32).map(|i| (i + 1) % m as u32).collect());
                Ok((m, vec![gen], vec!["x".into()], format!("C{m}")))
            }
            GroupSpec::ExtendedDihedral { e, n } => {
                if *e < 1 || *n < 3 || n % 2 == 0 {
                    return Err(Error::InvalidSpec(format!(
                        "extended dihedral needs e >= 1 and odd n >= 3 (got e={e}, n={n})"
                    )));
                }
                let n = *n as usize;
                let t = 1usize << e;
                // element x^i y^j has index i + n*j; right multiplication
                let idx = |i: usize, j: usize| (i % n + n * (j % t)) as u32;
                let mut x = vec![0u32; n * t];
                let mut y = vec![0u32; n * t];
                for j in 0..t {
                    for i in 0..n {
                        // x^i y^j x = x^(i + (-1)^j) y^j
                        let ni = if j % 2 == 0 { i + 1 } else { i + n - 1 };
                        x[idx(i, j) as usize] = idx(ni, j);
                        y[idx(i, j) as usize] = idx(i, j + 1);
                    }
                }
                let name = if *e == 1 {
                    format!("D{}", 2 * n)
                } else {
                    format!("~D{}", t * n)
                };
                Ok((
                    n * t,
                    vec![GroupElement(x), GroupElement(y)],
                    vec!["x".into(), "y".into()],
                    name,
                ))
            }
            GroupSpec::DirectProduct(factors) => {
                if factors.is_empty() {
                    return Err(Error::InvalidSpec("empty direct product".into()));
                }
                let parts = factors
                    .iter()
                    .map(Self::realize)
                    .collect::<Result<Vec<_>>>()?;
                let degree: usize = parts.iter().map(|p| p.0).sum();
                let mut gens = Vec::new();
                let mut labels = Vec::new();
                let mut names = Vec::new();
                let mut offset = 0usize;
                for (fi, (d, fg, fl, fname)) in parts.into_iter().enumerate() {
                    for (g, l) in fg.into_iter().zip(fl) {
                        let mut p: Vec<u32> = (0..degree as u32).collect();
                        for (i, &j) in g.0.iter().enumerate() {
                            p[offset + i] = offset as u32 + j;
                        }
                        gens.push(GroupElement(p));
                        labels.push(format!("{l}{}", fi + 1));
                    }
                    names.push(fname);
                    offset += d;
                }
                Ok((degree, gens, labels, names.join("x")))
            }
            GroupSpec::RawPermutation { degree, generators } => {
                let gens: Vec<GroupElement> =
                    generators.iter().map(|g| GroupElement(g.clone())).collect();
                let labels = (0..gens.len()).map(|i| format!("g{i}")).collect();
                Ok((*degree, gens, labels, "G".into()))
            }
            GroupSpec::Symmetric(n) => {
                let n = *n;
                if n == 0 {
                    return Err(Error::InvalidSpec("S_0".into()));
                }
                let mut gens = Vec::new();
                if n >= 2 {
                    gens.push(cycle_perm(n, &[0, 1]));
                }
                if n >= 3 {
                    gens.push(cycle_perm(n, &(0..n as u32).collect::<Vec<_>>()));
                }
                let labels = (0..gens.len()).map(|i| format!("s{i}")).collect();
                Ok((n, gens, labels, format!("S{n}")))
            }
            GroupSpec::Alternating(n) => {
                let n = *n;
                if n == 0 {
                    return Err(Error::InvalidSpec("A_0".into()));
                }
                let mut gens = Vec::new();
                if n >= 3 {
                    gens.push(cycle_perm(n, &[0, 1, 2]));
                }
                if n >= 4 {
                    let pts: Vec<u32> = if n % 2 == 1 {
                        (0..n as u32).collect()
                    } else {
                        (1..n as u32).collect()
                    };
                    gens.push(cycle_perm(n, &pts));
                }
                let labels = (0..gens.len()).map(|i| format!("a{i}")).collect();
                Ok((n, gens, labels, format!("A{n}")))
            }
        }
    }

    fn check_extended_dihedral(&self, e: u32, n: u64) -> Result<()> {
        let x = &self.generators[0];
        let y = &self.generators[1];
        let pow = |g: &GroupElement, k: u64| {
            let mut p = GroupElement::identity(self.degree);
            for _ in 0..k {
                p = p.then(g);
            }
            p
        };
        let ok = pow(x, n).is_identity()
            && pow(y, 1 << e).is_identity()
            && y.inverse().then(x).then(y) == x.inverse();
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidSpec("presentation relations fail".into()))
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn order(&self) -> usize {
        self.enumeration.elems.len()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.enumeration.elems
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        &self.enumeration.elems[i]
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.enumeration.index.get(g).copied()
    }

    /// Index of generator `i` in the element list.
    pub fn generator_index(&self, i: usize) -> usize {
        self.enumeration.index[&self.generators[i]]
    }

    /// (parent, generator) in the breadth-first tree, None for the identity.
    pub fn parent(&self, i: usize) -> Option<(usize, usize)> {
        self.enumeration.parent[i]
    }

    /// A word in the generators (indices into `generators`) evaluating to element `i`.
    pub fn word(&self, mut i: usize) -> Vec<usize> {
        let mut w = Vec::new();
        while let Some((p, g)) = self.enumeration.parent[i] {
            w.push(g);
            i = p;
        }
        w.reverse();
        w
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let e = &self.enumeration;
        match &e.table {
            Some(t) => t[a * e.elems.len() + b] as usize,
            None => e.index[&e.elems[a].then(&e.elems[b])],
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.enumeration.inverse[a]
    }

    pub fn pow(&self, a: usize, e: u64) -> usize {
        let e = e % self.element_order(a);
        let mut r = 0;
        for _ in 0..e {
            r = self.mul(r, a);
        }
        r
    }

    /// h^-1 g h.
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(self.inv(h), g), h)
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.enumeration.orders[a]
    }

    /// g^(2^a) where 2^a is the 2-part of the order of g.
    pub fn odd_part(&self, g: usize) -> usize {
        let o = self.element_order(g);
        self.pow(g, 1 << o.trailing_zeros())
    }

    pub fn is_real(&self, g: usize) -> bool {
        let gi = self.inv(g);
        (0..self.order()).any(|h| self.conj(g, h) == gi)
    }

    /// Powers of g, index j holding g^j.
    pub fn cyclic_powers(&self, g: usize) -> Vec<usize> {
        let o = self.element_order(g) as usize;
        let mut out = Vec::with_capacity(o);
        let mut p = 0;
        for _ in 0..o {
            out.push(p);
            p = self.mul(p, g);
        }
        out
    }

    /// Conjugacy classes, each sorted, ordered by least element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let gen_idx: Vec<usize> = (0..self.generators.len())
            .map(|i| self.generator_index(i))
            .collect();
        let mut assigned = vec![false; n];
        let mut classes = Vec::new();
        for g in 0..n {
            if assigned[g] {
                continue;
            }
            let mut class = vec![g];
            assigned[g] = true;
            let mut i = 0;
            while i < class.len() {
                for &s in &gen_idx {
                    let c = self.conj(class[i], s);
                    if !assigned[c] {
                        assigned[c] = true;
                        class.push(c);
                    }
                }
                i += 1;
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    /// N_G(<g>), C_G(g) and one (representative, exponent) per coset of C in N.
    pub fn cyclic_normalizer_data(&self, g: usize) -> NormalizerData {
        let powers = self.cyclic_powers(g);
        let pos: HashMap<usize, u64> = powers
            .iter()
            .enumerate()
            .map(|(j, &p)| (p, j as u64))
            .collect();
        let mut normalizer = Vec::new();
        let mut centralizer = Vec::new();
        let mut cosets: BTreeMap<u64, usize> = BTreeMap::new();
        for h in 0..self.order() {
            let c = self.conj(g, h);
            if let Some(&a) = pos.get(&c) {
                normalizer.push(h);
                if c == g {
                    centralizer.push(h);
                }
                cosets.entry(a).or_insert(h);
            }
        }
        let actions = cosets.into_iter().map(|(a, t)| (t, a)).collect();
        NormalizerData {
            normalizer,
            centralizer,
            actions,
        }
    }

    /// Sorted elements of the subgroup generated by `gens` (element indices).
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut out = vec![0usize];
        let mut i = 0;
        while i < out.len() {
            for &s in gens {
                let p = self.mul(out[i], s);
                if !seen[p] {
                    seen[p] = true;
                    out.push(p);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    /// The subgroup generated by the given elements, as its own permutation group
    /// on the same points.
    pub fn subgroup(&self, gens: &[usize]) -> Result<PermGroup> {
        let perms = gens.iter().map(|&i| self.element(i).clone()).collect();
        let labels = gens
            .iter()
            .map(|&i| self.element(i).cycle_notation())
            .collect();
        Ok(PermGroup::new(self.degree, perms, self.order().max(1))?
            .with_labels(labels)
            .with_name(format!(
                "<{}>",
                gens.iter()
                    .map(|&i| self.element(i).cycle_notation())
                    .collect::<Vec<_>>()
                    .join(", ")
            )))
    }

    /// Least conjugate of a sorted element set (canonical up to G-conjugacy).
    pub fn conjugacy_key(&self, set: &[usize]) -> Vec<usize> {
        let mut best: Option<Vec<usize>> = None;
        for h in 0..self.order() {
            let mut c: Vec<usize> = set.iter().map(|&x| self.conj(x, h)).collect();
            c.sort_unstable();
            if best.as_ref().map_or(true, |b| c < *b) {
                best = Some(c);
            }
        }
        best.unwrap_or_default()
    }

    /// Every subgroup, each with a small generating set, ordered by
    /// (order, element set). Built by joining cyclic subgroups until closed.
    pub fn all_subgroups(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let mut found: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for g in 0..self.order() {
            let set = self.closure(&[g]);
            found
                .entry(set)
                .or_insert_with(|| if g == 0 { vec![] } else { vec![g] });
        }
        let mut frontier: Vec<Vec<usize>> = found.keys().cloned().collect();
        let cyclic: Vec<(Vec<usize>, usize)> = found
            .iter()
            .filter(|(_, gens)| gens.len() == 1)
            .map(|(s, gens)| (s.clone(), gens[0]))
            .collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for set in &frontier {
                let gens = found[set].clone();
                for (cset, c) in &cyclic {
                    if cset.iter().all(|x| set.binary_search(x).is_ok()) {
                        continue;
                    }
                    let mut ng = gens.clone();
                    ng.push(*c);
                    let joined = self.closure(&ng);
                    if !found.contains_key(&joined) {
                        found.insert(joined.clone(), ng);
                        next.push(joined);
                    }
                }
            }
            frontier = next;
        }
        let mut out: Vec<(Vec<usize>, Vec<usize>)> = found.into_iter().collect();
        out.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
        out
    }

    /// Maximal proper subgroups (by inclusion), from `all_subgroups`.
    pub fn maximal_subgroups(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let all = self.all_subgroups();
        let n = self.order();
        let proper: Vec<_> = all.into_iter().filter(|(s, _)| s.len() < n).collect();
        proper
            .iter()
            .filter(|(s, _)| {
                let ss: BTreeSet<usize> = s.iter().copied().collect();
                !proper.iter().any(|(t, _)| {
                    t.len() > s.len() && ss.iter().all(|x| t.binary_search(x).is_ok())
                })
            })
            .cloned()
            .collect()
    }

    pub(crate) fn special_cache(&self) -> &Mutex<BTreeMap<u64, Arc<SpecialData>>> {
        &self.special
    }

    /// Odd part of the group order.
    pub fn odd_order(&self) -> u64 {
        let n = self.order() as u64;
        n >> n.trailing_zeros()
    }

    /// gcd of the group order with q, which must be 1 for the number theory.
    pub fn order_gcd(&self, q: u64) -> u64 {
        gcd(self.odd_order(), q)
    }
}

/// Output of [`PermGroup::cyclic_normalizer_data`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizerData {
    pub normalizer: Vec<usize>,
    pub centralizer: Vec<usize>,
    /// (coset representative t, exponent a with g^t = g^a), sorted by a.
    pub actions: Vec<(usize, u64)>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> PermGroup {
        PermGroup::build(&GroupSpec::Symmetric(3)).unwrap()
    }

    #[test]
    fn builder_orders() {
        assert_eq!(PermGroup::build(&GroupSpec::Cyclic(3)).unwrap().order(), 3);
        assert_eq!(PermGroup::build(&GroupSpec::Cyclic(1)).unwrap().order(), 1);
        let d12 = PermGroup::build(&GroupSpec::ExtendedDihedral { e: 2, n: 3 }).unwrap();
        assert_eq!(d12.order(), 12);
        let g = PermGroup::build(&GroupSpec::DirectProduct(vec![
            GroupSpec::Cyclic(5),
            GroupSpec::ExtendedDihedral { e: 1, n: 3 },
        ]))
        .unwrap();
        assert_eq!(g.order(), 30);
        assert_eq!(
            PermGroup::build(&GroupSpec::Symmetric(4)).unwrap().order(),
            24
        );
        assert_eq!(
            PermGroup::build(&GroupSpec::Alternating(4))
                .unwrap()
                .order(),
            12
        );
        assert_eq!(
            PermGroup::build(&GroupSpec::Alternating(5))
                .unwrap()
                .order(),
            60
        );
    }

    #[test]
    fn invalid_specs() {
        assert!(PermGroup::build(&GroupSpec::Cyclic(0)).is_err());
        assert!(PermGroup::build(&GroupSpec::ExtendedDihedral { e: 0, n: 3 }).is_err());
        assert!(PermGroup::build(&GroupSpec::ExtendedDihedral { e: 1, n: 4 }).is_err());
        assert!(PermGroup::build(&GroupSpec::RawPermutation {
            degree: 3,
            generators: vec![vec![0, 0, 1]]
        })
        .is_err());
        assert!(matches!(
            PermGroup::build_capped(&GroupSpec::Symmetric(5), 50),
            Err(Error::GroupTooLarge(50))
        ));
    }

    #[test]
    fn closure_is_a_group() {
        let g = PermGroup::build(&GroupSpec::Symmetric(4)).unwrap();
        for a in 0..g.order() {
            assert_eq!(g.mul(a, g.inv(a)), 0);
            for b in 0..g.order() {
                assert!(g.mul(a, b) < g.order());
            }
        }
    }

    #[test]
    fn orders_and_odd_parts() {
        let d12 = PermGroup::build(&GroupSpec::ExtendedDihedral { e: 2, n: 3 }).unwrap();
        assert_eq!(d12.element_order(0), 1);
        assert_eq!(d12.element_order(d12.generator_index(0)), 3);
        assert_eq!(d12.element_order(d12.generator_index(1)), 4);
        let c6 = PermGroup::build(&GroupSpec::Cyclic(6)).unwrap();
        let g = c6.generator_index(0);
        assert_eq!(c6.odd_part(g), c6.mul(g, g));
    }

    #[test]
    fn reality() {
        let g = s3();
        assert!(g.is_real(0));
        let c = g.index_of(&GroupElement(vec![1, 2, 0])).unwrap();
        assert!(g.is_real(c));
        let c7 = PermGroup::build(&GroupSpec::Cyclic(7)).unwrap();
        assert!(!c7.is_real(c7.generator_index(0)));
    }

    #[test]
    fn normalizer_examples() {
        let c5 = PermGroup::build(&GroupSpec::Cyclic(5)).unwrap();
        let nd = c5.cyclic_normalizer_data(c5.generator_index(0));
        assert_eq!(nd.normalizer.len(), 5);
        assert_eq!(nd.centralizer.len(), 5);
        assert_eq!(nd.actions.iter().map(|a| a.1).collect::<Vec<_>>(), vec![1]);

        let g = s3();
        let c = g.index_of(&GroupElement(vec![1, 2, 0])).unwrap();
        let nd = g.cyclic_normalizer_data(c);
        assert_eq!(nd.normalizer.len(), 6);
        assert_eq!(nd.centralizer.len(), 3);
        assert_eq!(
            nd.actions.iter().map(|a| a.1).collect::<Vec<_>>(),
            vec![1, 2]
        );

        let g = PermGroup::build(&GroupSpec::DirectProduct(vec![
            GroupSpec::Cyclic(5),
            GroupSpec::ExtendedDihedral { e: 1, n: 3 },
        ]))
        .unwrap();
        let c15 = g.mul(g.generator_index(0), g.generator_index(1));
        assert_eq!(g.element_order(c15), 15);
        let nd = g.cyclic_normalizer_data(c15);
        assert_eq!(nd.normalizer.len() / nd.centralizer.len(), 2);
        assert_eq!(
            nd.actions.iter().map(|a| a.1).collect::<Vec<_>>(),
            vec![1, 11]
        );
    }

    #[test]
    fn classes_of_s4() {
        let g = PermGroup::build(&GroupSpec::Symmetric(4)).unwrap();
        let mut sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
    }

    #[test]
    fn subgroup_lattice_of_s3() {
        let g = s3();
        let subs = g.all_subgroups();
        // 1, three C2, C3, S3
        assert_eq!(subs.len(), 6);
        let max = g.maximal_subgroups();
        assert_eq!(max.len(), 4);
    }

    #[test]
    fn words_evaluate() {
        let g = PermGroup::build(&GroupSpec::Symmetric(4)).unwrap();
        for i in 0..g.order() {
            let mut p = GroupElement::identity(4);
            for gi in g.word(i) {
                p = p.then(&g.generators()[gi]);
            }
            assert_eq!(&p, g.element(i));
        }
    }
}
