//! Acceptance suite. Prints one PASS/FAIL line per criterion and fails if any
//! criterion fails.

use std::io::Write;
use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hypermod::codes::{code_exists, enumerate_selfdual_codes};
use hypermod::corpus::{run_corpus, CorpusConfig, CorpusReport};
use hypermod::finite_field::{omega_q, ord_mod, Field, FieldElem};
use hypermod::group::{GroupElement, GroupSpec, PermGroup};
use hypermod::linalg::{is_square_poly, Poly};
use hypermod::repmod::{simple_modules, Representation};
use hypermod::repro;

type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

// ---------------------------------------------------------------- corpus

fn corpus_agreement(r: &CorpusReport) -> Check {
    ensure(
        r.pairs.len() == 14 * 3,
        format!("{} group/field pairs", r.pairs.len()),
    )?;
    ensure(
        r.pairs.iter().all(|p| p.instances >= 50),
        "a pair has fewer than 50 instances",
    )?;
    ensure(
        r.instances.iter().all(|i| i.dim <= 24),
        "an instance exceeds dimension 24",
    )?;
    ensure(r.errors == 0, format!("{} instances errored", r.errors))?;
    let bad: Vec<_> = r.instances.iter().filter(|i| !i.agree).collect();
    ensure(
        bad.is_empty() && r.disagreements == 0,
        format!(
            "{} disagreements, first {:?}",
            bad.len(),
            bad.first().map(|i| (&i.group, &i.field, i.index))
        ),
    )?;
    let all_four = r.instances.iter().all(|i| {
        i.charpoly.is_some()
            && i.multiplicity.is_some()
            && i.subgroups.is_some()
            && i.construct.is_some()
    });
    ensure(all_four, "a method did not report")?;
    ensure(
        r.hyperbolic > 0 && r.hyperbolic < r.total,
        "corpus is one-sided",
    )?;
    Ok(format!(
        "{} instances, {} hyperbolic, 0 disagreements",
        r.total, r.hyperbolic
    ))
}

fn constructive_completeness(r: &CorpusReport) -> Check {
    ensure(
        r.construction_failures == 0,
        format!("{} construction failures", r.construction_failures),
    )?;
    let hyper: Vec<_> = r
        .instances
        .iter()
        .filter(|i| i.construct == Some(true))
        .collect();
    ensure(
        hyper.iter().all(|i| i.construct_verified == Some(true)),
        "a hyperbolic instance lacks a verified self-perpendicular submodule",
    )?;
    Ok(format!(
        "{} hyperbolic instances constructed and verified",
        hyper.len()
    ))
}

fn determinism(a: &CorpusReport, cfg: &CorpusConfig) -> Check {
    let b = run_corpus(cfg).map_err(err)?;
    let ja = serde_json::to_string_pretty(a).map_err(err)?;
    let jb = serde_json::to_string_pretty(&b).map_err(err)?;
    ensure(ja == jb, "reports differ")?;
    Ok(format!("{} bytes identical", ja.len()))
}

// ---------------------------------------------------------------- worked examples

fn simple_product() -> Check {
    let t = Instant::now();
    let r = repro::simple_product_example(4, 20130708).map_err(err)?;
    let elapsed = t.elapsed();
    ensure(
        (r.p, r.r, r.group_order, r.dim) == (5, 3, 30, 4),
        format!("p={} r={} |G|={} dim={}", r.p, r.r, r.group_order, r.dim),
    )?;
    ensure(r.simple && r.symplectic, "V not simple symplectic")?;
    ensure(!r.hyperbolic, "V hyperbolic")?;
    let mut orders: Vec<usize> = r.maximal_restrictions.iter().map(|m| m.order).collect();
    orders.sort();
    ensure(
        orders == vec![6, 10, 15],
        format!("maximal subgroup orders {orders:?}"),
    )?;
    ensure(
        r.maximal_restrictions.iter().all(|m| m.hyperbolic),
        "a maximal restriction is not hyperbolic",
    )?;
    ensure(
        r.all_maximal_subgroups_hyperbolic,
        "some maximal subgroup restriction not hyperbolic",
    )?;
    ensure(elapsed.as_secs_f64() < 1.0, format!("took {elapsed:?}"))?;
    Ok(format!(
        "dim 4, not hyperbolic, maximal restrictions hyperbolic ({elapsed:.0?})"
    ))
}

fn regular_plus_simple() -> Check {
    let t = Instant::now();
    // Independent char poly check on the regular module.
    let f4 = Field::new(2).map_err(err)?;
    let g = Arc::new(PermGroup::build(&GroupSpec::ExtendedDihedral { e: 2, n: 3 }).map_err(err)?);
    ensure(g.order() == 12, "group order")?;
    let reg = Representation::regular_module(g.clone(), &f4);
    let expected = Poly::x_pow_plus_one(&f4, 3).pow(4);
    let mut odd = 0;
    for e in 1..g.order() {
        if g.element_order(e) % 2 == 1 {
            odd += 1;
            ensure(
                reg.char_poly_on(e) == expected,
                format!("char poly on element {e}"),
            )?;
        }
    }
    ensure(odd == 2, format!("{odd} nontrivial odd elements"))?;
    let r = repro::regular_plus_simple_example(4, 20130708).map_err(err)?;
    let elapsed = t.elapsed();
    ensure(r.odd_char_poly_is_expected, "report char poly")?;
    ensure(r.regular_hyperbolic, "regular module not hyperbolic")?;
    ensure(!r.hyperbolic, "V hyperbolic")?;
    ensure(
        !r.proper_restrictions.is_empty(),
        "no proper subgroups examined",
    )?;
    ensure(
        r.all_proper_subgroups_hyperbolic,
        "a proper restriction is not hyperbolic",
    )?;
    ensure(elapsed.as_secs_f64() < 1.0, format!("took {elapsed:?}"))?;
    Ok(format!(
        "(x^3+1)^4 on both odd elements, FG hyperbolic, V not, {} proper restrictions hyperbolic ({elapsed:.0?})",
        r.proper_restrictions.len()
    ))
}

fn s3_over_f4() -> Check {
    let r = repro::s3_example(4, 20130708).map_err(err)?;
    ensure(
        r.dim == 2 && r.simple && r.symplectic,
        "W is not a 2-dim simple symplectic module",
    )?;
    ensure(r.c3_hyperbolic, "restriction to C3 not hyperbolic")?;
    ensure(!r.hyperbolic, "W hyperbolic")?;
    Ok("W_C3 hyperbolic, W not".into())
}

// ---------------------------------------------------------------- codes

fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn perm_of_type(n: usize, parts: &[usize]) -> GroupElement {
    let mut img: Vec<u32> = (0..n as u32).collect();
    let mut start = 0;
    for &len in parts {
        for i in 0..len {
            img[start + i] = (start + (i + 1) % len) as u32;
        }
        start += len;
    }
    GroupElement(img)
}

fn codes_vs_oracle() -> Check {
    let t = Instant::now();
    let mut counts = Vec::new();
    let mut classes = 0;
    for n in [2usize, 4, 6, 8] {
        let codes = enumerate_selfdual_codes(n).map_err(err)?;
        counts.push(codes.len());
        for parts in partitions(n, n) {
            let sigma = perm_of_type(n, &parts);
            let g = PermGroup::new(n, vec![sigma.clone()], 1000).map_err(err)?;
            let (exists, _) = code_exists(&g).map_err(err)?;
            let oracle = codes
                .iter()
                .any(|c| c.is_invariant(std::slice::from_ref(&sigma)));
            ensure(
                exists == oracle,
                format!("n={n} cycle type {parts:?}: criterion {exists}, oracle {oracle}"),
            )?;
            classes += 1;
        }
    }
    ensure(
        counts == vec![1, 3, 15, 135],
        format!("oracle counts {counts:?}"),
    )?;
    let elapsed = t.elapsed();
    ensure(elapsed.as_secs() < 120, format!("took {elapsed:?}"))?;
    Ok(format!("{classes} classes agree, counts {counts:?}"))
}

// ---------------------------------------------------------------- properties

/// Carry-less product reduced by the field modulus, independent of the log tables.
fn clmul(f: &Field, a: u32, b: u32) -> u32 {
    let k = f.k();
    let m = f.modulus();
    let mut acc: u32 = 0;
    for i in 0..k {
        if b >> i & 1 == 1 {
            acc ^= a << i;
        }
    }
    for d in (k..2 * k).rev() {
        if acc >> d & 1 == 1 {
            acc ^= m << (d - k);
        }
    }
    acc
}

fn field_axioms() -> std::result::Result<(), String> {
    for k in 1..=8 {
        let f = Field::new(k).map_err(err)?;
        let q = f.q();
        ensure(f.modulus() >> k == 1, format!("k={k}: modulus degree"))?;
        let e = |x: u32| FieldElem(x as u16);
        for a in 0..q {
            ensure(f.add(e(a), e(a)) == FieldElem::ZERO, "a + a != 0")?;
            ensure(f.mul(e(a), FieldElem::ONE) == e(a), "identity")?;
            let s = f.sqrt(e(a));
            ensure(f.mul(s, s) == e(a), format!("k={k}: sqrt({a})"))?;
            ensure(f.pow(e(a), q as u64) == e(a), format!("k={k}: a^q != a"))?;
            if a != 0 {
                let inv = f.inv(e(a)).map_err(err)?;
                ensure(
                    f.mul(e(a), inv) == FieldElem::ONE,
                    format!("k={k}: inverse of {a}"),
                )?;
            }
            for b in 0..q {
                let ab = f.mul(e(a), e(b));
                ensure(ab.0 as u32 == clmul(&f, a, b), format!("k={k}: {a}*{b}"))?;
                ensure(ab == f.mul(e(b), e(a)), "commutativity")?;
                let sum = f.add(e(a), e(b));
                ensure(
                    f.square(sum) == f.add(f.square(e(a)), f.square(e(b))),
                    "Frobenius",
                )?;
            }
        }
        // Associativity and distributivity over all triples.
        for a in 0..q {
            for b in 0..q {
                let ab = f.mul(e(a), e(b));
                let apb = f.add(e(a), e(b));
                for c in 0..q {
                    ensure(
                        f.mul(ab, e(c)) == f.mul(e(a), f.mul(e(b), e(c))),
                        format!("k={k}: associativity"),
                    )?;
                    ensure(
                        f.mul(apb, e(c)) == f.add(f.mul(e(a), e(c)), f.mul(e(b), e(c))),
                        format!("k={k}: distributivity"),
                    )?;
                }
            }
        }
    }
    Ok(())
}

/// Polynomials as ascending coefficient vectors, trimmed.
fn trim(mut p: Vec<u32>) -> Vec<u32> {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn pmul(f: &Field, a: &[u32], b: &[u32]) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] ^= f.mul(FieldElem(x as u16), FieldElem(y as u16)).0 as u32;
        }
    }
    trim(out)
}

/// Quotient of `a` by monic `d` if the division is exact.
fn pdiv_exact(f: &Field, a: &[u32], d: &[u32]) -> Option<Vec<u32>> {
    let mut r = a.to_vec();
    let dd = d.len() - 1;
    if r.len() < d.len() {
        return None;
    }
    let mut q = vec![0u32; r.len() - dd];
    for i in (0..q.len()).rev() {
        let c = r[i + dd];
        if c == 0 {
            continue;
        }
        q[i] = c;
        for (j, &y) in d.iter().enumerate() {
            r[i + j] ^= f.mul(FieldElem(c as u16), FieldElem(y as u16)).0 as u32;
        }
    }
    if r.iter().all(|&x| x == 0) {
        Some(trim(q))
    } else {
        None
    }
}

/// Multiplicities of irreducible factors by trial division over monic
/// polynomials in increasing degree.
fn trial_factor(f: &Field, p: &[u32]) -> Vec<usize> {
    let q = f.q() as u64;
    let mut rest = trim(p.to_vec());
    let mut mults = Vec::new();
    let mut d = 1;
    while rest.len() > 1 && 2 * d <= rest.len() - 1 {
        let count = q.pow(d as u32);
        for idx in 0..count {
            let mut cand: Vec<u32> = (0..d)
                .map(|i| ((idx / q.pow(i as u32)) % q) as u32)
                .collect();
            cand.push(1);
            let mut m = 0;
            while let Some(next) = pdiv_exact(f, &rest, &cand) {
                rest = next;
                m += 1;
            }
            if m > 0 {
                mults.push(m);
            }
            if 2 * d > rest.len().saturating_sub(1) {
                break;
            }
        }
        d += 1;
    }
    if rest.len() > 1 {
        mults.push(1);
    }
    mults
}

fn random_monic(f: &Field, rng: &mut ChaCha8Rng, d: usize) -> Vec<u32> {
    let mut p: Vec<u32> = (0..d).map(|_| rng.gen_range(0..f.q())).collect();
    p.push(1);
    p
}

fn square_poly_oracle() -> std::result::Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(20130708);
    let fields: Vec<Field> = (1..=3).map(|k| Field::new(k).unwrap()).collect();
    let mut squares = 0;
    for case in 0..1000 {
        let f = &fields[case % 3];
        // Half the cases are built as products with chosen multiplicities so
        // that squares occur often.
        let p = if case % 2 == 0 {
            let d = rng.gen_range(0..=12);
            random_monic(f, &mut rng, d)
        } else {
            let mut p = vec![1u32];
            let mut deg = 0;
            while deg < 12 {
                let d = rng.gen_range(1..=3usize);
                let m = rng.gen_range(1..=4usize);
                if deg + d * m > 12 {
                    break;
                }
                let g = random_monic(f, &mut rng, d);
                for _ in 0..m {
                    p = pmul(f, &p, &g);
                }
                deg += d * m;
            }
            if rng.gen_bool(0.5) {
                let c = rng.gen_range(1..f.q());
                p = pmul(f, &p, &[c]);
            }
            p
        };
        let lead = *p.last().unwrap();
        let monic = pmul(f, &p, &[f.inv(FieldElem(lead as u16)).unwrap().0 as u32]);
        // Over a perfect field every constant is a square.
        let oracle = trial_factor(f, &monic).iter().all(|m| m % 2 == 0);
        let poly = Poly::from_u32(f, &p);
        let (is_sq, root) = is_square_poly(&poly);
        ensure(
            is_sq == oracle,
            format!(
                "case {case}: {p:?} over GF({}) library {is_sq}, oracle {oracle}",
                f.q()
            ),
        )?;
        if let Some(r) = root {
            ensure(
                r.mul(&r) == poly,
                format!("case {case}: root does not square back"),
            )?;
        }
        squares += oracle as usize;
    }
    ensure(squares > 100, format!("only {squares} squares generated"))?;
    Ok(squares)
}

fn brute_ord(n: u64, q: u64) -> u64 {
    let mut x = q % n;
    let mut k = 1;
    while x != 1 % n {
        x = x * q % n;
        k += 1;
    }
    k
}

fn brute_omega(n: u64, q: u64) -> u32 {
    brute_ord(n, q).trailing_zeros()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn omega_max_law() -> std::result::Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut done = 0;
    while done < 1000 {
        let m = 2 * rng.gen_range(1..1500u64) + 1;
        let n = 2 * rng.gen_range(1..1500u64) + 1;
        if gcd(m, n) != 1 {
            continue;
        }
        let q = [2u64, 4, 8][done % 3];
        let lib = omega_q(m * n, q).map_err(err)?;
        let want = brute_omega(m, q).max(brute_omega(n, q));
        ensure(
            lib == want,
            format!("omega({m}*{n}) over q={q}: {lib} vs {want}"),
        )?;
        ensure(brute_omega(m * n, q) == want, "brute force max-law")?;
        ensure(ord_mod(m, q).map_err(err)? == brute_ord(m, q), "ord_mod")?;
        done += 1;
    }
    Ok(())
}

fn faithful_simple_dims() -> std::result::Result<usize, String> {
    let mut checked = 0;
    for n in [3u64, 5, 7, 9, 15] {
        let g = Arc::new(PermGroup::build(&GroupSpec::Cyclic(n)).map_err(err)?);
        for k in 1..=3 {
            let f = Field::new(k).map_err(err)?;
            let q = f.q() as u64;
            let simples = simple_modules(g.clone(), &f, 20130708).map_err(err)?;
            let total: usize = simples.iter().map(|s| s.dim()).sum();
            let mut faithful = 0;
            for s in &simples {
                let x = &s.images()[0];
                let is_faithful = (1..n).all(|e| n % e != 0 || !x.pow(e).is_identity());
                if is_faithful {
                    ensure(
                        s.dim() as u64 == brute_ord(n, q),
                        format!("C{n} over GF({q}): faithful simple of dim {}", s.dim()),
                    )?;
                    faithful += 1;
                }
            }
            // Each faithful simple has ord_n(q) conjugate eigenvalues among the
            // phi(n) primitive n-th roots of unity.
            let phi = (1..=n).filter(|&i| gcd(i, n) == 1).count() as u64;
            ensure(
                faithful as u64 * brute_ord(n, q) == phi,
                format!("C{n} over GF({q}): {faithful} faithful simples"),
            )?;
            ensure(total >= simples.len(), "dims")?;
            checked += 1;
        }
    }
    Ok(checked)
}

fn special_groups_self_dual(r: &CorpusReport) -> std::result::Result<usize, String> {
    let special: Vec<_> = r.pairs.iter().filter(|p| p.f_special_group).collect();
    ensure(!special.is_empty(), "no F-special groups in corpus")?;
    for p in &special {
        ensure(
            p.all_simples_self_dual,
            format!("{} over {}: a simple is not self-dual", p.group, p.field),
        )?;
    }
    Ok(special.len())
}

fn properties(r: &CorpusReport) -> Check {
    field_axioms().map_err(|e| format!("field: {e}"))?;
    let squares = square_poly_oracle().map_err(|e| format!("squares: {e}"))?;
    omega_max_law().map_err(|e| format!("omega: {e}"))?;
    let cyc = faithful_simple_dims().map_err(|e| format!("faithful: {e}"))?;
    let special = special_groups_self_dual(r).map_err(|e| format!("self-dual: {e}"))?;
    Ok(format!(
        "fields k<=8 exhaustive; 1000 square tests ({squares} squares); 1000 omega pairs; {cyc} cyclic cases; {special} F-special pairs self-dual"
    ))
}

// ---------------------------------------------------------------- runner

#[test]
fn acceptance() {
    let cfg = CorpusConfig::default();
    let t = Instant::now();
    let report = run_corpus(&cfg).expect("corpus runs");
    let corpus_time = t.elapsed();

    let results: Vec<(u32, &str, Check)> = vec![
        (
            1,
            "criterion agreement on corpus",
            corpus_agreement(&report).map(|s| format!("{s} ({corpus_time:.1?})")),
        ),
        (2, "simple product example", simple_product()),
        (3, "regular plus simple example", regular_plus_simple()),
        (4, "S3 over GF(4)", s3_over_f4()),
        (5, "self-dual codes vs enumeration", codes_vs_oracle()),
        (
            6,
            "constructive completeness",
            constructive_completeness(&report),
        ),
        (7, "property suites", properties(&report)),
        (8, "determinism", determinism(&report, &cfg)),
    ];
    // Written to the raw stderr handle so the lines survive output capture.
    let mut out = std::io::stderr().lock();
    let mut failed = 0;
    for (n, name, r) in &results {
        let line = match r {
            Ok(msg) => format!("PASS {n} {name}: {msg}\n"),
            Err(msg) => {
                failed += 1;
                format!("FAIL {n} {name}: {msg}\n")
            }
        };
        out.write_all(line.as_bytes()).expect("stderr");
    }
    drop(out);
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
