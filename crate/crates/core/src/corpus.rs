//! Randomly generated symmetric modules on which the hyperbolicity criteria
//! are compared.
//!
//! Each instance is `M + M*` with the hyperbolic pairing, optionally
//! orthogonally summed with self-dual simples carrying invariant forms, and
//! finally written in a random basis. `M` is a submodule or quotient of a
//! cyclic submodule of the regular module, a sum of simples, or both.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finite_field::{Field, FieldElem};
use crate::forms::{
    hyperbolic_double, invariant_symmetric_basis, is_hyperbolic, make_invariant_symplectic,
    orthogonal_sum, BilinearForm, Method,
};
use crate::group::{f_special_subgroups, GroupSpec, PermGroup};
use crate::linalg::{spin, Matrix};
use crate::repmod::{meataxe_split, simple_modules, Representation, SplitResult};

pub const DEFAULT_SEED: u64 = 20130708;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CorpusConfig {
    pub seed: u64,
    pub instances_per_pair: usize,
    pub max_dim: usize,
    pub groups: Vec<(String, GroupSpec)>,
    /// Extension degrees k of GF(2^k).
    pub fields: Vec<u32>,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            seed: DEFAULT_SEED,
            instances_per_pair: 50,
            max_dim: 24,
            groups: default_groups(),
            fields: vec![1, 2, 3],
        }
    }
}

pub fn default_groups() -> Vec<(String, GroupSpec)> {
    let ed = |e, n| GroupSpec::ExtendedDihedral { e, n };
    vec![
        ("C1".into(), GroupSpec::Cyclic(1)),
        ("C3".into(), GroupSpec::Cyclic(3)),
        ("C5".into(), GroupSpec::Cyclic(5)),
        ("C7".into(), GroupSpec::Cyclic(7)),
        ("C9".into(), GroupSpec::Cyclic(9)),
        ("C15".into(), GroupSpec::Cyclic(15)),
        ("S3".into(), GroupSpec::Symmetric(3)),
        ("S4".into(), GroupSpec::Symmetric(4)),
        ("A4".into(), GroupSpec::Alternating(4)),
        ("D10".into(), ed(1, 5)),
        ("D14".into(), ed(1, 7)),
        ("~D12".into(), ed(2, 3)),
        ("~D20".into(), ed(2, 5)),
        (
            "C5xD6".into(),
            GroupSpec::DirectProduct(vec![GroupSpec::Cyclic(5), ed(1, 3)]),
        ),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceResult {
    pub group: String,
    pub field: String,
    pub index: usize,
    pub dim: usize,
    pub recipe: String,
    pub charpoly: Option<bool>,
    pub multiplicity: Option<bool>,
    pub subgroups: Option<bool>,
    pub construct: Option<bool>,
    pub agree: bool,
    /// Some(true) when a self-perpendicular submodule was built and verified,
    /// Some(false) when construction failed on a module the other criteria call hyperbolic.
    pub construct_verified: Option<bool>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairSummary {
    pub group: String,
    pub field: String,
    pub instances: usize,
    pub hyperbolic: usize,
    pub disagreements: usize,
    pub construction_failures: usize,
    pub errors: usize,
    pub simple_dims: Vec<usize>,
    /// Whether the group is itself F-special for this field.
    pub f_special_group: bool,
    pub all_simples_self_dual: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusReport {
    pub seed: u64,
    pub total: usize,
    pub hyperbolic: usize,
    pub disagreements: usize,
    pub construction_failures: usize,
    pub errors: usize,
    pub pairs: Vec<PairSummary>,
    pub instances: Vec<InstanceResult>,
}

struct PairContext {
    name: String,
    field: Field,
    group: Arc<PermGroup>,
    regular: Representation,
    simples: Vec<Representation>,
    /// Self-dual simples with an invariant nondegenerate symmetric form.
    formed: Vec<BilinearForm>,
    simple_dims: Vec<usize>,
    f_special_group: bool,
    all_simples_self_dual: bool,
}

fn is_trivial(m: &Representation) -> bool {
    m.images().iter().all(|x| x.is_identity())
}

fn pair_context(name: &str, spec: &GroupSpec, k: u32, seed: u64) -> Result<PairContext> {
    let field = Field::new(k)?;
    let group = Arc::new(PermGroup::build(spec)?);
    let simples = simple_modules(group.clone(), &field, seed)?;
    let mut formed = Vec::new();
    let mut all_self_dual = true;
    for s in &simples {
        let d = s.dual();
        let self_dual = crate::repmod::simple_iso(s, &d)?;
        all_self_dual &= self_dual;
        if !self_dual {
            continue;
        }
        let form = if is_trivial(s) {
            BilinearForm::new(s.clone(), Matrix::identity(&field, s.dim()))?
        } else {
            match make_invariant_symplectic(s, seed) {
                Ok(f) => f,
                Err(Error::NoSymplecticForm) => symmetric_form(s, seed)?,
                Err(e) => return Err(e),
            }
        };
        formed.push(form);
    }
    let q = field.q() as u64;
    let f_special_group = f_special_subgroups(&group, q)?
        .iter()
        .any(|d| d.elements.len() == group.order());
    Ok(PairContext {
        name: name.to_string(),
        simple_dims: simples.iter().map(|s| s.dim()).collect(),
        regular: Representation::regular_module(group.clone(), &field),
        field,
        group,
        simples,
        formed,
        f_special_group,
        all_simples_self_dual: all_self_dual,
    })
}

fn symmetric_form(s: &Representation, seed: u64) -> Result<BilinearForm> {
    let basis = invariant_symmetric_basis(s)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = s.field().q();
    for _ in 0..256 {
        let mut g = Matrix::zeros(s.field(), s.dim(), s.dim());
        for b in &basis {
            g.add_scaled(FieldElem(rng.gen_range(0..q) as u16), b);
        }
        if g.rank() == s.dim() {
            return BilinearForm::new(s.clone(), g);
        }
    }
    Err(Error::NoSymplecticForm)
}

fn random_vector(field: &Field, n: usize, rng: &mut ChaCha8Rng) -> Vec<FieldElem> {
    (0..n)
        .map(|_| FieldElem(rng.gen_range(0..field.q()) as u16))
        .collect()
}

fn random_invertible(field: &Field, n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    loop {
        let rows: Vec<Vec<FieldElem>> = (0..n).map(|_| random_vector(field, n, rng)).collect();
        let m = Matrix::from_rows(field, n, &rows);
        if m.is_invertible() {
            return m;
        }
    }
}

/// Random submodule or quotient of a cyclic submodule of the regular module,
/// cut down until its dimension is at most `cap`.
fn random_cyclic_piece(
    ctx: &PairContext,
    cap: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Representation> {
    let reg = &ctx.regular;
    let v = random_vector(&ctx.field, reg.dim(), rng);
    let span = spin(&ctx.field, reg.dim(), &[v], reg.images());
    let mut m = if span.dim() == 0 {
        return Ok(Representation::trivial(ctx.group.clone(), &ctx.field, 0));
    } else {
        reg.split(&span.to_matrix()).0
    };
    while m.dim() > cap {
        match meataxe_split(&m, rng.gen())? {
            SplitResult::ProperSubmodule(u) => {
                let (sub, quo, _) = m.split(&u);
                m = if rng.gen_bool(0.5) { sub } else { quo };
            }
            SplitResult::ProofSimple => {
                return Ok(Representation::trivial(ctx.group.clone(), &ctx.field, 0));
            }
        }
    }
    Ok(m)
}

fn random_simple_sum(
    ctx: &PairContext,
    cap: usize,
    rng: &mut ChaCha8Rng,
) -> Result<(Representation, Vec<usize>)> {
    let mut m = Representation::trivial(ctx.group.clone(), &ctx.field, 0);
    let mut picked = Vec::new();
    for _ in 0..rng.gen_range(1..=3) {
        let i = rng.gen_range(0..ctx.simples.len());
        if m.dim() + ctx.simples[i].dim() <= cap {
            m = m.sum(&ctx.simples[i])?;
            picked.push(ctx.simples[i].dim());
        }
    }
    Ok((m, picked))
}

fn build_instance(ctx: &PairContext, max_dim: usize, seed: u64) -> Result<(BilinearForm, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let half = max_dim / 2;
    loop {
        let kind = rng.gen_range(0..3);
        let (m, mut recipe) = match kind {
            0 => {
                let m = random_cyclic_piece(ctx, half, &mut rng)?;
                let d = m.dim();
                (m, format!("cyclic({d})"))
            }
            1 => {
                let (m, dims) = random_simple_sum(ctx, half, &mut rng)?;
                (m, format!("simples{dims:?}"))
            }
            _ => {
                let c = random_cyclic_piece(ctx, half, &mut rng)?;
                let (s, dims) = random_simple_sum(ctx, half - c.dim(), &mut rng)?;
                let d = c.dim();
                (c.sum(&s)?, format!("cyclic({d})+simples{dims:?}"))
            }
        };
        let mut form = hyperbolic_double(&m)?;
        let mut extras = Vec::new();
        for _ in 0..rng.gen_range(0..=2) {
            if ctx.formed.is_empty() {
                break;
            }
            let f = &ctx.formed[rng.gen_range(0..ctx.formed.len())];
            if form.dim() + f.dim() <= max_dim {
                form = orthogonal_sum(&form, f)?;
                extras.push(f.dim());
            }
        }
        if form.dim() == 0 {
            continue;
        }
        recipe = format!("double[{recipe}]+forms{extras:?}");
        let p = random_invertible(&ctx.field, form.dim(), &mut rng);
        let module = form.module().change_basis(&p)?;
        let gram = p.mul_unchecked(form.gram()).mul_unchecked(&p.transpose());
        return Ok((BilinearForm::new(module, gram)?, recipe));
    }
}

fn evaluate(ctx: &PairContext, index: usize, max_dim: usize, seed: u64) -> InstanceResult {
    let mut res = InstanceResult {
        group: ctx.name.clone(),
        field: ctx.field.name(),
        index,
        dim: 0,
        recipe: String::new(),
        charpoly: None,
        multiplicity: None,
        subgroups: None,
        construct: None,
        agree: false,
        construct_verified: None,
        error: None,
    };
    let (form, recipe) = match build_instance(ctx, max_dim, seed) {
        Ok(x) => x,
        Err(e) => {
            res.error = Some(format!("build: {e}"));
            return res;
        }
    };
    res.dim = form.dim();
    res.recipe = recipe;
    let mut errors = Vec::new();
    let mut run = |m: Method| match is_hyperbolic(&form, m, seed) {
        Ok(v) => Some(v.hyperbolic),
        Err(e) => {
            errors.push(format!("{m}: {e}"));
            None
        }
    };
    res.charpoly = run(Method::CharPoly);
    res.multiplicity = run(Method::Multiplicity);
    res.subgroups = run(Method::SpecialSubgroups);
    res.construct = run(Method::Construct);
    let all = [res.charpoly, res.multiplicity, res.subgroups, res.construct];
    res.agree = all.iter().all(|v| v.is_some() && *v == all[0]);
    let others_hyperbolic =
        res.charpoly == Some(true) && res.multiplicity == Some(true) && res.subgroups == Some(true);
    if others_hyperbolic || res.construct == Some(true) {
        res.construct_verified = Some(res.construct == Some(true));
    }
    if !errors.is_empty() {
        res.error = Some(errors.join("; "));
    }
    res
}

/// Builds and evaluates the whole corpus. Items run in parallel with seeds
/// `seed ^ item`, and results keep item order.
pub fn run_corpus(config: &CorpusConfig) -> Result<CorpusReport> {
    let pairs: Vec<(String, GroupSpec, u32)> = config
        .groups
        .iter()
        .flat_map(|(n, g)| {
            config
                .fields
                .iter()
                .map(move |&k| (n.clone(), g.clone(), k))
        })
        .collect();
    let contexts = pairs
        .par_iter()
        .map(|(n, g, k)| pair_context(n, g, *k, config.seed))
        .collect::<Result<Vec<_>>>()?;
    let per = config.instances_per_pair;
    let items: Vec<(usize, usize)> = (0..contexts.len())
        .flat_map(|c| (0..per).map(move |i| (c, i)))
        .collect();
    let instances: Vec<InstanceResult> = items
        .par_iter()
        .map(|&(c, i)| {
            let item = (c * per + i) as u64;
            evaluate(&contexts[c], i, config.max_dim, config.seed ^ item)
        })
        .collect();
    let pairs = contexts
        .iter()
        .enumerate()
        .map(|(c, ctx)| {
            let mine = &instances[c * per..(c + 1) * per];
            PairSummary {
                group: ctx.name.clone(),
                field: ctx.field.name(),
                instances: mine.len(),
                hyperbolic: mine.iter().filter(|r| r.construct == Some(true)).count(),
                disagreements: mine.iter().filter(|r| !r.agree).count(),
                construction_failures: mine
                    .iter()
                    .filter(|r| r.construct_verified == Some(false))
                    .count(),
                errors: mine.iter().filter(|r| r.error.is_some()).count(),
                simple_dims: ctx.simple_dims.clone(),
                f_special_group: ctx.f_special_group,
                all_simples_self_dual: ctx.all_simples_self_dual,
            }
        })
        .collect::<Vec<_>>();
    Ok(CorpusReport {
        seed: config.seed,
        total: instances.len(),
        hyperbolic: pairs.iter().map(|p| p.hyperbolic).sum(),
        disagreements: pairs.iter().map(|p| p.disagreements).sum(),
        construction_failures: pairs.iter().map(|p| p.construction_failures).sum(),
        errors: pairs.iter().map(|p| p.errors).sum(),
        pairs,
        instances,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_corpus_agrees() {
        let cfg = CorpusConfig {
            instances_per_pair: 4,
            groups: vec![
                ("S3".into(), GroupSpec::Symmetric(3)),
                ("C5".into(), GroupSpec::Cyclic(5)),
            ],
            fields: vec![1, 2],
            ..CorpusConfig::default()
        };
        let r = run_corpus(&cfg).unwrap();
        assert_eq!(r.total, 16);
        assert_eq!(
            r.errors,
            0,
            "{:?}",
            r.instances
                .iter()
                .filter_map(|i| i.error.clone())
                .collect::<Vec<_>>()
        );
        assert_eq!(r.disagreements, 0);
        assert_eq!(r.construction_failures, 0);
        assert!(r.instances.iter().all(|i| i.dim <= 24 && i.dim > 0));
    }
}
