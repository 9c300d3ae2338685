use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use cartesian_decomp::atlas::{list_cases, load_case_from, verify_case};
use cartesian_decomp::cartesian::{
    enumerate_cartesian_decompositions, is_invariant, to_decomposition, to_system,
    validate_decomposition, validate_system, EnumerateOptions,
};
use cartesian_decomp::factor::{
    conjugation_transitivity_check, is_factorisation, is_full_factorisation,
    is_strong_multiple_factorisation,
};
use cartesian_decomp::io::{read_decomposition, read_group, read_system, GroupSpec, SystemSpec};
use cartesian_decomp::oracle::{
    brute_force_decompositions, oracle_check, oracle_corpus, MAX_ORACLE_DEGREE,
};
use cartesian_decomp::wreath::{product_action_wreath, WreathSpec};
use cartesian_decomp::{Error, Limits, PermGroup};

#[derive(Parser)]
#[command(
    name = "cartesian",
    version,
    about = "Cartesian decompositions of permutation groups"
)]
struct Cli {
    /// Node budget for backtrack searches.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Render the JSON report as indented text.
    #[arg(long, global = true)]
    pretty: bool,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the single-point intersection property (and invariance, given a group).
    VerifyDecomp {
        #[arg(long)]
        decomp: PathBuf,
        #[arg(long)]
        group: Option<PathBuf>,
    },
    /// Check the defining equations of a system of subgroups.
    VerifySystem {
        #[arg(long)]
        system: PathBuf,
    },
    /// Block stabilisers of a decomposition at a point.
    ToSystem {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        decomp: PathBuf,
        #[arg(long, default_value_t = 0)]
        omega: usize,
    },
    /// The decomposition of orbit translates of a system.
    ToDecomp {
        #[arg(long)]
        system: PathBuf,
    },
    /// All invariant Cartesian decompositions of a group.
    Enumerate {
        #[arg(long)]
        group: PathBuf,
        #[arg(long, default_value_t = 0)]
        omega: usize,
        /// Transitive normal subgroup to search with.
        #[arg(long)]
        plinth: Option<PathBuf>,
        /// Cross-check against exhaustive search over partitions.
        #[arg(long)]
        oracle: bool,
    },
    /// A product-action wreath product, e.g. `wr:3^2`.
    Wreath { spec: String },
    /// Factorisation checks for two subgroups, or a multiple factorisation for three or more.
    Factcheck {
        #[arg(long)]
        group: PathBuf,
        #[arg(long = "subgroup", required = true)]
        subgroups: Vec<PathBuf>,
    },
    /// Bundled cases.
    Atlas {
        #[command(subcommand)]
        action: AtlasCommand,
    },
}

#[derive(Subcommand)]
enum AtlasCommand {
    List,
    Verify {
        name: String,
        /// Directory with replacement case files.
        #[arg(long)]
        cases: Option<PathBuf>,
    },
    /// Every desk-scale case and the small-group oracle suite.
    Corpus {
        #[arg(long)]
        cases: Option<PathBuf>,
    },
}

/// A report plus whether every check in it passed.
struct Outcome {
    report: Value,
    ok: bool,
}

fn outcome<T: Serialize>(report: &T, ok: bool) -> cartesian_decomp::Result<Outcome> {
    Ok(Outcome {
        report: serde_json::to_value(report)?,
        ok,
    })
}

fn read_groups(paths: &[PathBuf]) -> cartesian_decomp::Result<Vec<PermGroup>> {
    paths.iter().map(|p| read_group(p)).collect()
}

fn run(command: Command, limits: &Limits) -> cartesian_decomp::Result<Outcome> {
    match command {
        Command::VerifyDecomp { decomp, group } => {
            let e = read_decomposition(&decomp)?;
            let report = validate_decomposition(&e, limits)?;
            let invariance = group
                .map(|g| is_invariant(&read_group(&g)?, &e))
                .transpose()?;
            let ok = report.compliant && invariance.as_ref().is_none_or(|r| r.invariant);
            outcome(
                &json!({"decomposition": report, "invariance": invariance}),
                ok,
            )
        }
        Command::VerifySystem { system } => {
            let k = read_system(&system)?;
            let report = validate_system(&k, limits)?;
            let ok = report.valid;
            outcome(&report, ok)
        }
        Command::ToSystem {
            group,
            decomp,
            omega,
        } => {
            let m = read_group(&group)?;
            let e = read_decomposition(&decomp)?;
            let k = to_system(&m, &e, omega, limits)?;
            let orders: Vec<String> = k.subgroups.iter().map(|s| s.order().to_string()).collect();
            outcome(
                &json!({"system": SystemSpec::from_system(&k), "orders": orders}),
                true,
            )
        }
        Command::ToDecomp { system } => {
            let k = read_system(&system)?;
            let e = to_decomposition(&k, limits)?;
            outcome(&json!({"decomposition": e, "index": e.index()}), true)
        }
        Command::Enumerate {
            group,
            omega,
            plinth,
            oracle,
        } => {
            let g = read_group(&group)?;
            let options = EnumerateOptions {
                plinth: plinth.map(|p| read_group(&p)).transpose()?,
                limits: limits.clone(),
            };
            let found = enumerate_cartesian_decompositions(&g, omega, &options)?;
            let listed: Vec<Value> = found
                .iter()
                .map(|e| {
                    json!({
                        "index": e.index(),
                        "homogeneous": e.is_homogeneous(),
                        "block_counts": e.block_counts(),
                        "partitions": e,
                    })
                })
                .collect();
            let mut report = json!({
                "degree": g.degree(),
                "group_order": g.order().to_string(),
                "count": found.len(),
                "decompositions": listed,
            });
            let mut ok = true;
            if oracle {
                if g.degree() <= MAX_ORACLE_DEGREE {
                    let slow = brute_force_decompositions(&g)?;
                    ok = slow == found;
                    report["oracle"] = json!({"count": slow.len(), "matches": ok});
                } else {
                    report["oracle"] = json!({"skipped": "degree too large"});
                }
            }
            outcome(&report, ok)
        }
        Command::Wreath { spec } => {
            let spec: WreathSpec = spec.parse()?;
            let (w, e) = product_action_wreath(&spec, limits)?;
            outcome(
                &json!({
                    "spec": spec.to_string(),
                    "degree": w.degree(),
                    "order": w.order().to_string(),
                    "group": GroupSpec::from_group(Some(&spec.to_string()), &w),
                    "decomposition": e,
                }),
                true,
            )
        }
        Command::Factcheck { group, subgroups } => {
            let g = read_group(&group)?;
            let subs = read_groups(&subgroups)?;
            match subs.as_slice() {
                [a, b] => {
                    let plain = is_factorisation(&g, a, b, limits)?;
                    let full = is_full_factorisation(&g, a, b, limits)?.holds;
                    let transitive = if plain.holds {
                        Some([
                            conjugation_transitivity_check(&g, a, b, limits)?,
                            conjugation_transitivity_check(&g, b, a, limits)?,
                        ])
                    } else {
                        None
                    };
                    let ok = plain.holds;
                    outcome(
                        &json!({
                            "factorisation": plain,
                            "full": full,
                            "conjugation_transitive": transitive,
                        }),
                        ok,
                    )
                }
                [_] => Err(Error::InvalidInput(
                    "factcheck needs at least two subgroups".into(),
                )),
                _ => {
                    let r = is_strong_multiple_factorisation(&g, &subs, limits)?;
                    let ok = r.holds;
                    outcome(&json!({"multiple_factorisation": r}), ok)
                }
            }
        }
        Command::Atlas { action } => match action {
            AtlasCommand::List => outcome(&list_cases(), true),
            AtlasCommand::Verify { name, cases } => {
                let case = load_case_from(cases.as_deref(), &name)?;
                let report = verify_case(&case, limits)?;
                let ok = report.passed;
                outcome(&report, ok)
            }
            AtlasCommand::Corpus { cases } => corpus(cases.as_deref(), limits),
        },
    }
}

fn corpus(dir: Option<&Path>, limits: &Limits) -> cartesian_decomp::Result<Outcome> {
    let mut lines = Vec::new();
    for row in list_cases().into_iter().filter(|c| c.desk_scale) {
        let line = match load_case_from(dir, &row.name).and_then(|c| verify_case(&c, limits)) {
            Ok(r) => {
                let failed: Vec<&str> = r
                    .checks
                    .iter()
                    .filter(|c| !c.pass)
                    .map(|c| c.quantity.as_str())
                    .collect();
                json!({"case": row.name, "passed": r.passed, "failed_checks": failed})
            }
            Err(e) => {
                json!({"case": row.name, "passed": false, "error": e.kind(), "message": e.to_string()})
            }
        };
        lines.push(line);
    }
    for case in oracle_corpus() {
        let line = match oracle_check(&case, limits) {
            Ok(r) => json!({"case": format!("oracle: {}", r.name), "passed": r.matches}),
            Err(e) => {
                json!({"case": format!("oracle: {}", case.name), "passed": false, "error": e.kind()})
            }
        };
        lines.push(line);
    }
    let ok = lines.iter().all(|l| l["passed"] == json!(true));
    outcome(&json!({"passed": ok, "cases": lines}), ok)
}

/// Indented `key: value` text for a JSON value.
fn render(value: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                if v.is_object() || (v.is_array() && !is_flat(v)) {
                    out.push_str(&format!("{pad}{k}:\n"));
                    render(v, indent + 1, out);
                } else {
                    out.push_str(&format!("{pad}{k}: {}\n", scalar(v)));
                }
            }
        }
        Value::Array(items) if !is_flat(value) => {
            for item in items {
                out.push_str(&format!("{pad}-\n"));
                render(item, indent + 1, out);
            }
        }
        v => out.push_str(&format!("{pad}{}\n", scalar(v))),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|i| !i.is_object() && is_flat(i)),
        Value::Object(_) => false,
        _ => true,
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn emit(value: &Value, pretty: bool, out: Option<&Path>) -> std::io::Result<()> {
    let text = if pretty {
        let mut s = String::new();
        render(value, 0, &mut s);
        s
    } else {
        serde_json::to_string(value).expect("serialisable") + "\n"
    };
    match out {
        Some(path) => fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let mut limits = Limits::default();
    if let Some(b) = cli.budget {
        limits.search_nodes = b;
    }
    let (value, code) = match run(cli.command, &limits) {
        Ok(o) => (o.report, if o.ok { 0 } else { 1 }),
        Err(e) => (json!({"error": e.kind(), "message": e.to_string()}), 1),
    };
    if let Err(e) = emit(&value, cli.pretty, cli.out.as_deref()) {
        eprintln!("cannot write report: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(code)
}
