use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hypermod::codes::{
    code_exists, construct_code, cycle_type, enumerate_selfdual_codes, MAX_ORACLE_LENGTH,
};
use hypermod::corpus::{run_corpus, CorpusConfig, DEFAULT_SEED};
use hypermod::finite_field::{ord_mod, pi_number_index, prime_factors, PiClass};
use hypermod::forms::{check_all_criteria, is_hyperbolic, witt_kernel, Method};
use hypermod::group::{f_special_subgroups, DEFAULT_GROUP_CAP};
use hypermod::io::{load_form, load_group};
use hypermod::repmod::composition_factors;
use hypermod::repro;
use hypermod::witt::{witt_descriptor, witt_equivalent};
use hypermod::{Error, Result};

#[derive(Parser)]
#[command(
    name = "hypermod",
    version,
    about = "Hyperbolic symmetric modules over GF(2^k)"
)]
struct Cli {
    /// Seed for every randomized step.
    #[arg(long, global = true, env = "HYPERMOD_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Maximum number of group elements to enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_GROUP_CAP)]
    group_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    All,
    Charpoly,
    Multiplicity,
    Subgroups,
    Construct,
}

#[derive(Clone, Copy, ValueEnum)]
enum Example {
    #[value(name = "thm5.1")]
    SimpleProduct,
    #[value(name = "thm5.2")]
    RegularPlusSimple,
    #[value(name = "intro-f4s3")]
    S3,
}

#[derive(Subcommand)]
enum Command {
    /// Classify an odd number by the 2-adic valuation of its multiplicative order mod q.
    ClassifyPrime {
        n: u64,
        #[arg(long)]
        q: u64,
    },
    /// F-special conjugacy class representatives.
    SpecialElements {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        q: u64,
    },
    /// F-special subgroups up to conjugacy.
    SpecialSubgroups {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        q: u64,
    },
    /// Decide whether a symmetric module is hyperbolic.
    IsHyperbolic {
        #[arg(long)]
        module: Option<PathBuf>,
        #[arg(long)]
        gram: PathBuf,
        #[arg(long, value_enum, default_value = "all")]
        method: MethodArg,
    },
    /// Maximal isotropic submodule and the form it leaves.
    WittKernel {
        #[arg(long)]
        module: Option<PathBuf>,
        #[arg(long)]
        gram: PathBuf,
    },
    /// Decide Witt equivalence of two symmetric modules.
    WittEquiv {
        #[arg(long)]
        module: Option<PathBuf>,
        #[arg(long)]
        gram: PathBuf,
        #[arg(long)]
        module2: Option<PathBuf>,
        #[arg(long)]
        gram2: PathBuf,
    },
    /// Self-dual binary codes invariant under a permutation group.
    SelfdualCode {
        #[arg(long)]
        group: PathBuf,
        /// Build and print an invariant code.
        #[arg(long)]
        construct: bool,
        /// Cross-check against exhaustive enumeration (length <= 12).
        #[arg(long)]
        oracle: bool,
    },
    /// Rebuild one of the worked examples.
    Repro {
        #[arg(value_enum)]
        example: Example,
        #[arg(long, default_value_t = 4)]
        q: u64,
    },
    /// Run the generated corpus and compare all hyperbolicity criteria.
    Corpus {
        #[arg(long, default_value_t = 50)]
        instances: usize,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Outcome of a subcommand: a decision (exit 0 or 1) plus output.
struct Outcome {
    ok: bool,
    text: String,
    json: Value,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&out.json).expect("serializable")
            } else {
                out.text.trim_end().to_string()
            };
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let cap = cli.group_cap;
    let seed = cli.seed;
    match &cli.command {
        Command::ClassifyPrime { n, q } => classify(*n, *q),
        Command::SpecialElements { group, q } => {
            let g = load_group(group, cap)?;
            let data = g.special_data(*q)?;
            let mut text = format!("{} (order {}), q = {q}\n", g.name(), g.order());
            let mut rows = Vec::new();
            for &(rep, reason) in &data.class_reps {
                let e = g.element(rep);
                text += &format!(
                    "  {}  order {}  {:?}\n",
                    e.cycle_notation(),
                    g.element_order(rep),
                    reason
                );
                rows.push(json!({"element": e.0, "order": g.element_order(rep), "reason": reason}));
            }
            Ok(Outcome {
                ok: true,
                text,
                json: json!({"q": q, "order": g.order(), "class_reps": rows}),
            })
        }
        Command::SpecialSubgroups { group, q } => {
            let g = load_group(group, cap)?;
            let subs = f_special_subgroups(&g, *q)?;
            let mut text = format!("{} (order {}), q = {q}\n", g.name(), g.order());
            let mut rows = Vec::new();
            for s in &subs {
                let gens: Vec<String> = s
                    .generators
                    .iter()
                    .map(|&x| g.element(x).cycle_notation())
                    .collect();
                text += &format!(
                    "  order {:>4}  <{}>  {:?}\n",
                    s.elements.len(),
                    gens.join(", "),
                    s.kind
                );
                rows.push(json!({
                    "order": s.elements.len(),
                    "generators": s.generators.iter().map(|&x| g.element(x).0.clone()).collect::<Vec<_>>(),
                    "kind": s.kind,
                }));
            }
            Ok(Outcome {
                ok: true,
                text,
                json: json!({"q": q, "subgroups": rows}),
            })
        }
        Command::IsHyperbolic {
            module,
            gram,
            method,
        } => {
            let form = load_form(module.as_deref(), gram, cap)?;
            let verdicts = match method {
                MethodArg::All => check_all_criteria(&form, seed)?,
                MethodArg::Charpoly => vec![is_hyperbolic(&form, Method::CharPoly, seed)?],
                MethodArg::Multiplicity => vec![is_hyperbolic(&form, Method::Multiplicity, seed)?],
                MethodArg::Subgroups => vec![is_hyperbolic(&form, Method::SpecialSubgroups, seed)?],
                MethodArg::Construct => vec![is_hyperbolic(&form, Method::Construct, seed)?],
            };
            let ok = verdicts[0].hyperbolic;
            let mut text = format!(
                "dim {}: {}\n",
                form.dim(),
                if ok { "hyperbolic" } else { "not hyperbolic" }
            );
            for v in &verdicts {
                text += &format!("  {:<13} {}", v.method.name(), v.hyperbolic);
                if let Some(c) = &v.certificate {
                    if !v.hyperbolic {
                        text += &format!("  {}", serde_json::to_string(c).expect("serializable"));
                    }
                }
                text += "\n";
            }
            Ok(Outcome {
                ok,
                text,
                json: json!({"dim": form.dim(), "hyperbolic": ok, "verdicts": verdicts}),
            })
        }
        Command::WittKernel { module, gram } => {
            let form = load_form(module.as_deref(), gram, cap)?;
            let r = witt_kernel(&form, seed)?;
            let factors = composition_factors(r.kernel_form.module(), seed)?.summary();
            let text = format!(
                "dim V = {}, dim W = {}, kernel dim = {}, hyperbolic = {}\n  kernel factors: {:?}\n",
                form.dim(),
                r.witness.rows(),
                r.kernel_dim(),
                r.hyperbolic,
                factors.iter().map(|f| (f.dim, f.multiplicity)).collect::<Vec<_>>()
            );
            Ok(Outcome {
                ok: true,
                text,
                json: json!({
                    "dim": form.dim(),
                    "kernel_dim": r.kernel_dim(),
                    "hyperbolic": r.hyperbolic,
                    "witness": r.witness.to_data(),
                    "kernel_basis": r.kernel_basis.to_data(),
                    "kernel_gram": r.kernel_form.gram().to_data(),
                    "kernel_factors": factors,
                }),
            })
        }
        Command::WittEquiv {
            module,
            gram,
            module2,
            gram2,
        } => {
            let a = load_form(module.as_deref(), gram, cap)?;
            let b = load_form(module2.as_deref(), gram2, cap)?;
            let (eq, cert) = witt_equivalent(&a, &b)?;
            let da = witt_descriptor(&a, seed)?;
            let db = witt_descriptor(&b, seed)?;
            let mut text = format!(
                "{}\n  first:  kernel dim {}\n  second: kernel dim {}\n",
                if eq {
                    "Witt equivalent"
                } else {
                    "not Witt equivalent"
                },
                da.kernel_dim,
                db.kernel_dim
            );
            if let Some(c) = &cert {
                text += &format!(
                    "  witness {:?}, char poly product {:?}\n",
                    c.element, c.char_poly_product
                );
            }
            Ok(Outcome {
                ok: eq,
                text,
                json: json!({"equivalent": eq, "certificate": cert, "first": da, "second": db}),
            })
        }
        Command::SelfdualCode {
            group,
            construct,
            oracle,
        } => selfdual_code(group, *construct, *oracle, cap, seed),
        Command::Repro { example, q } => repro_cmd(*example, *q, seed),
        Command::Corpus { instances, out } => {
            let cfg = CorpusConfig {
                seed,
                instances_per_pair: *instances,
                ..CorpusConfig::default()
            };
            let report = run_corpus(&cfg)?;
            if let Some(p) = out {
                let body = serde_json::to_string_pretty(&report)?;
                std::fs::write(p, body + "\n").map_err(|e| Error::Io(e.to_string()))?;
            }
            let ok = report.disagreements == 0
                && report.construction_failures == 0
                && report.errors == 0;
            let mut text = format!(
                "{} instances, {} hyperbolic, {} disagreements, {} construction failures, {} errors\n",
                report.total, report.hyperbolic, report.disagreements, report.construction_failures, report.errors
            );
            for p in &report.pairs {
                text += &format!(
                    "  {:<6} {:<9} hyperbolic {:>3}/{:<3} disagree {}  simples {:?}\n",
                    p.group, p.field, p.hyperbolic, p.instances, p.disagreements, p.simple_dims
                );
            }
            let summary = json!({
                "seed": report.seed,
                "total": report.total,
                "hyperbolic": report.hyperbolic,
                "disagreements": report.disagreements,
                "construction_failures": report.construction_failures,
                "errors": report.errors,
                "pairs": report.pairs,
            });
            Ok(Outcome {
                ok,
                text,
                json: summary,
            })
        }
    }
}

fn classify(n: u64, q: u64) -> Result<Outcome> {
    if q < 2 || !q.is_power_of_two() {
        return Err(Error::InvalidArgument(format!(
            "q = {q} is not a power of 2"
        )));
    }
    let ord = ord_mod(n, q)?;
    let class = pi_number_index(n, q)?;
    let prime = n > 1 && prime_factors(n) == vec![n];
    let text = match class {
        PiClass::All => format!("{n} is a π_i({q})-number for every i, ord={ord}"),
        PiClass::Index(i) if prime => format!("{n} ∈ π_{i}({q}), ord={ord}"),
        PiClass::Index(i) => format!("{n} is a π_{i}({q})-number, ord={ord}"),
        PiClass::Mixed => format!("{n} is not a π_i({q})-number for any i, ord={ord}"),
    };
    let index = match class {
        PiClass::Index(i) => json!(i),
        _ => Value::Null,
    };
    let kind = match class {
        PiClass::All => "all",
        PiClass::Index(_) => "index",
        PiClass::Mixed => "mixed",
    };
    Ok(Outcome {
        ok: true,
        text,
        json: json!({"n": n, "q": q, "ord": ord, "class": kind, "index": index}),
    })
}

fn selfdual_code(
    group: &PathBuf,
    construct: bool,
    oracle: bool,
    cap: usize,
    seed: u64,
) -> Result<Outcome> {
    let g = load_group(group, cap)?;
    let (exists, cert) = code_exists(&g)?;
    let mut text = format!(
        "{} on {} points: {}\n",
        g.name(),
        g.degree(),
        if exists {
            "an invariant self-dual code exists"
        } else {
            "no invariant self-dual code"
        }
    );
    if let Some(c) = &cert {
        let e = hypermod::group::GroupElement(c.element.clone());
        text += &format!(
            "  special element {} has cycle type {} ({} cycles of size {})\n",
            e.cycle_notation(),
            cycle_type(&e),
            c.count,
            c.cycle_size
        );
    }
    let mut out = json!({"degree": g.degree(), "exists": exists, "certificate": cert});
    if construct && exists {
        let code = construct_code(Arc::clone(&g), seed)?;
        text += &format!("  code of dimension {}:\n", code.dim());
        for row in code.bitstrings() {
            text += &format!("    {row}\n");
        }
        out["code"] = json!({"n": code.n, "dim": code.dim(), "rows": code.bitstrings()});
    }
    if oracle {
        let n = g.degree();
        if n % 2 == 1 || n > MAX_ORACLE_LENGTH {
            text += &format!("  oracle skipped for length {n}\n");
            out["oracle"] = Value::Null;
        } else {
            let codes = enumerate_selfdual_codes(n)?;
            let invariant = codes
                .iter()
                .filter(|c| c.is_invariant(g.generators()))
                .count();
            let agrees = (invariant > 0) == exists;
            text += &format!(
                "  oracle: {} self-dual codes of length {n}, {invariant} invariant; {}\n",
                codes.len(),
                if agrees { "agrees" } else { "DISAGREES" }
            );
            out["oracle"] = json!({"codes": codes.len(), "invariant": invariant, "agrees": agrees});
            if !agrees {
                return Err(Error::CriteriaDisagree(
                    "code existence vs enumeration".into(),
                ));
            }
        }
    }
    Ok(Outcome {
        ok: exists,
        text,
        json: out,
    })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn repro_cmd(example: Example, q: u64, seed: u64) -> Result<Outcome> {
    match example {
        Example::SimpleProduct => {
            let r = repro::simple_product_example(q, seed)?;
            let ok = r.simple
                && r.symplectic
                && !r.hyperbolic
                && r.maximal_restrictions.iter().all(|x| x.hyperbolic)
                && r.all_maximal_subgroups_hyperbolic;
            let mut text = format!(
                "q={} p={} r={} |G|={} dim V={}\n  V simple: {}\n  V symplectic: {}\n  V hyperbolic: {}\n",
                r.q, r.p, r.r, r.group_order, r.dim, yes(r.simple), yes(r.symplectic), yes(r.hyperbolic)
            );
            for m in &r.maximal_restrictions {
                text += &format!(
                    "  restriction to {} (order {}): hyperbolic {}\n",
                    m.subgroup,
                    m.order,
                    yes(m.hyperbolic)
                );
            }
            text += &format!(
                "  all maximal restrictions hyperbolic: {}\n  all proper restrictions hyperbolic: {}\n",
                yes(r.all_maximal_subgroups_hyperbolic),
                yes(r.all_proper_subgroups_hyperbolic)
            );
            Ok(Outcome {
                ok,
                text,
                json: serde_json::to_value(&r)?,
            })
        }
        Example::RegularPlusSimple => {
            let r = repro::regular_plus_simple_example(q, seed)?;
            let ok = r.odd_char_poly_is_expected
                && r.regular_hyperbolic
                && !r.hyperbolic
                && r.all_proper_subgroups_hyperbolic;
            let text = format!(
                "q={} p={} |G|={}\n  odd elements on FG: char poly {} (expected (x^p+1)^4: {})\n  FG hyperbolic: {}\n  V = FG + U, dim {}, hyperbolic: {}\n  all {} proper restrictions hyperbolic: {}\n",
                r.q,
                r.p,
                r.group_order,
                r.odd_char_poly.as_ref().map_or("none".to_string(), |c| format!("{c:?}")),
                yes(r.odd_char_poly_is_expected),
                yes(r.regular_hyperbolic),
                r.dim,
                yes(r.hyperbolic),
                r.proper_restrictions.len(),
                yes(r.all_proper_subgroups_hyperbolic)
            );
            Ok(Outcome {
                ok,
                text,
                json: serde_json::to_value(&r)?,
            })
        }
        Example::S3 => {
            let r = repro::s3_example(q, seed)?;
            let ok = r.simple && r.symplectic && !r.hyperbolic && r.c3_hyperbolic;
            let text = format!(
                "S3 over GF({}), dim W = {}\n  W simple: {}\n  W symplectic: {}\n  W hyperbolic: {}\n  W restricted to C3 hyperbolic: {}\n",
                r.q, r.dim, yes(r.simple), yes(r.symplectic), yes(r.hyperbolic), yes(r.c3_hyperbolic)
            );
            Ok(Outcome {
                ok,
                text,
                json: serde_json::to_value(&r)?,
            })
        }
    }
}
