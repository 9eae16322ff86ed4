use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use mirror_cs::catalog::{deep_sections, Family};
use mirror_cs::combinatorics::{
    base_change, type_iii_counts, DualComplexData, Topology, SPHERE_RECOUNT_NOTE,
};
use mirror_cs::filtration::{check_subvariety_constraints, hard_lefschetz_check, validate_table};
use mirror_cs::json::{
    parse_document, parse_sequence, table_set_to_json, table_to_value, Document,
};
use mirror_cs::mirror::{mirror_check, stability_check, MirrorPair};
use mirror_cs::render::{render_set, render_table};
use mirror_cs::sequence::{builtin_template, check_sequence_with, solve_unknown, BUILTIN_NAMES};
use mirror_cs::{Error, Execution, Space, TableSet, VerificationReport};

#[derive(Parser)]
#[command(
    name = "mirror-cs",
    version,
    about = "Check trigraded cohomology tables and the sequences relating them"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Grid,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the tables of a catalog family, e.g. `k3-typeIII:k=1`.
    Generate { family: String },
    /// Check a table or sequence JSON file, or a catalog family.
    Check {
        input: Option<PathBuf>,
        /// Builtin template to run against `--family`.
        #[arg(long, requires = "family")]
        template: Option<String>,
        #[arg(long, conflicts_with = "input")]
        family: Option<String>,
        /// Check lanes one at a time.
        #[arg(long)]
        sequential: bool,
    },
    /// Solve for the table marked `"unknown"` in a sequence JSON file.
    Solve {
        input: PathBuf,
        /// Overrides the file's `"unknown"`.
        #[arg(long)]
        unknown: Option<String>,
    },
    /// Compare a fibration family with a degeneration family.
    Mirror {
        #[arg(long)]
        fibration: String,
        #[arg(long)]
        degeneration: String,
        /// Re-embed and base change by this order first.
        #[arg(long)]
        mu: Option<u32>,
    },
    /// Strata counts of a central fibre after base change of order `mu`.
    Basechange {
        #[arg(long, value_enum)]
        topology: TopologyArg,
        #[arg(long)]
        components: Option<u64>,
        #[arg(long)]
        triple_points: Option<u64>,
        #[arg(long)]
        mu: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TopologyArg {
    Chain,
    Sphere,
}

/// Text to emit and whether the run found no violations.
struct Outcome {
    text: String,
    pass: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, pass: true }
    }
}

fn report_text(report: &VerificationReport, format: Format) -> String {
    if format == Format::Json {
        return report.to_json();
    }
    let mut out = format!("{}\n", if report.pass { "PASS" } else { "FAIL" });
    if let Some(note) = &report.note {
        out.push_str(&format!("note: {note}\n"));
    }
    for v in &report.violations {
        out.push_str(&format!("- {}", v.relation));
        if let Some(lane) = v.lane {
            out.push_str(&format!(" [lane l={} q={} p={}", lane.l, lane.q, lane.p));
            if let Some(pos) = v.position {
                out.push_str(&format!(", position {pos}"));
            }
            out.push(']');
        }
        for (i, d) in v.indices.iter().zip(&v.dims) {
            out.push_str(&format!(" {i}={d}"));
        }
        out.push('\n');
    }
    out
}

fn report_outcome(report: VerificationReport, format: Format) -> Outcome {
    Outcome {
        text: report_text(&report, format),
        pass: report.pass,
    }
}

fn load_family(spec: &str) -> anyhow::Result<Family> {
    Ok(spec.parse::<Family>()?)
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn base_dir(path: &Path) -> &Path {
    path.parent().unwrap_or(Path::new("."))
}

/// Validators, hard Lefschetz and (when every section is supplied) the
/// subvariety comparison.
fn check_tables(
    tables: &TableSet,
    extra_sections: &[mirror_cs::TriFilteredTable],
) -> anyhow::Result<VerificationReport> {
    let mut report = VerificationReport::passed();
    for t in tables.tables() {
        report.merge(validate_table(t));
        if !t.space().is_degeneration() {
            report.merge(hard_lefschetz_check(t)?);
        }
    }
    if let (Some(y), Some(m)) = (tables.get(Space::Y), tables.m()) {
        let mut zs: Vec<_> = tables
            .tables()
            .filter(|t| matches!(t.space(), Space::Z(_)))
            .cloned()
            .collect();
        zs.extend(extra_sections.iter().cloned());
        if (1..=m).all(|r| zs.iter().any(|z| z.space() == Space::Z(r))) {
            report.merge(check_subvariety_constraints(y, &zs)?);
        }
    }
    Ok(report)
}

fn cmd_generate(family: &str, format: Format) -> anyhow::Result<Outcome> {
    let tables = load_family(family)?.tables()?;
    Ok(Outcome::ok(match format {
        Format::Json => table_set_to_json(&tables),
        Format::Grid => render_set(&tables),
    }))
}

fn cmd_check(
    input: Option<&Path>,
    template: Option<&str>,
    family: Option<&str>,
    exec: Execution,
    format: Format,
) -> anyhow::Result<Outcome> {
    let report = match (input, family) {
        (Some(path), _) => match parse_document(&read(path)?, base_dir(path))? {
            Document::Tables(list) => check_tables(&TableSet::try_from(list)?, &[])?,
            Document::Sequence(p) => check_sequence_with(&p.template, &p.tables, &p.pins, exec)?,
        },
        (None, Some(spec)) => {
            let family = load_family(spec)?;
            let tables = family.tables()?;
            match template {
                Some(name) => {
                    let tmpl = builtin_template(name).ok_or_else(|| {
                        anyhow!(
                            "unknown template '{name}', expected one of {}",
                            BUILTIN_NAMES.join(", ")
                        )
                    })?;
                    check_sequence_with(&tmpl, &tables, &[], exec)?
                }
                None => {
                    let extra = match family {
                        Family::Fibration(f) => deep_sections(f)?,
                        Family::Degeneration(_) => Vec::new(),
                    };
                    check_tables(&tables, &extra)?
                }
            }
        }
        (None, None) => bail!("nothing to check: give an input file or --family"),
    };
    Ok(report_outcome(report, format))
}

fn cmd_solve(input: &Path, unknown: Option<&str>, format: Format) -> anyhow::Result<Outcome> {
    let problem = parse_sequence(&read(input)?, base_dir(input))?;
    let unknown = match unknown {
        Some(s) => s.parse::<Space>()?,
        None => problem.unknown.ok_or_else(|| {
            anyhow!("no unknown table marked (set \"unknown\" or pass --unknown)")
        })?,
    };
    let sol = solve_unknown(&problem.template, &problem.tables, unknown)?;
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&json!({
            "table": table_to_value(&sol.table),
            "underdetermined": sol.underdetermined,
        }))?,
        Format::Grid => {
            let mut s = render_table(&sol.table);
            if !sol.underdetermined.is_empty() {
                let list: Vec<String> = sol.underdetermined.iter().map(|i| i.to_string()).collect();
                s.push_str(&format!("underdetermined: {}\n", list.join(" ")));
            }
            s
        }
    };
    Ok(Outcome::ok(text))
}

fn cmd_mirror(
    fibration: &str,
    degeneration: &str,
    mu: Option<u32>,
    format: Format,
) -> anyhow::Result<Outcome> {
    let report = match (load_family(fibration)?, load_family(degeneration)?) {
        (Family::Fibration(f), Family::Degeneration(d)) => match mu {
            Some(mu) => stability_check(f, d, mu)?.0,
            None => mirror_check(&MirrorPair::from_families(f, d)?)?,
        },
        _ => bail!(
            "--fibration takes k3-elliptic/k3-finite, --degeneration takes k3-typeII/k3-typeIII"
        ),
    };
    Ok(report_outcome(report, format))
}

fn cmd_basechange(
    topology: TopologyArg,
    components: Option<u64>,
    triple_points: Option<u64>,
    mu: u64,
    format: Format,
) -> anyhow::Result<Outcome> {
    let start = match (topology, components, triple_points) {
        (TopologyArg::Chain, Some(c), None) => DualComplexData::chain(c)?,
        (TopologyArg::Sphere, None, Some(f)) => type_iii_counts(f)?,
        (TopologyArg::Sphere, Some(c), None) => DualComplexData::sphere(c)?,
        (TopologyArg::Chain, _, _) => bail!("chain topology takes --components only"),
        (TopologyArg::Sphere, _, _) => {
            bail!("sphere topology takes exactly one of --triple-points, --components")
        }
    };
    let result = base_change(start, mu)?;
    let note = (result.topology() == Topology::Sphere && mu > 1).then_some(SPHERE_RECOUNT_NOTE);
    let text = match format {
        Format::Json => {
            let mut v = serde_json::to_value(result)?;
            if let Some(note) = note {
                v["note"] = json!(note);
            }
            serde_json::to_string_pretty(&v)?
        }
        Format::Grid => {
            let mut s = format!(
                "components {}\ndouble_curves {}\ntriple_points {}\n",
                result.components(),
                result.double_curves(),
                result.triple_points()
            );
            if let Some(note) = note {
                s.push_str(&format!("note: {note}\n"));
            }
            s
        }
    };
    Ok(Outcome::ok(text))
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let format = cli.format;
    match &cli.command {
        Command::Generate { family } => cmd_generate(family, format),
        Command::Check {
            input,
            template,
            family,
            sequential,
        } => {
            let exec = if *sequential {
                Execution::Sequential
            } else {
                Execution::Parallel
            };
            cmd_check(
                input.as_deref(),
                template.as_deref(),
                family.as_deref(),
                exec,
                format,
            )
        }
        Command::Solve { input, unknown } => cmd_solve(input, unknown.as_deref(), format),
        Command::Mirror {
            fibration,
            degeneration,
            mu,
        } => cmd_mirror(fibration, degeneration, *mu, format),
        Command::Basechange {
            topology,
            components,
            triple_points,
            mu,
        } => cmd_basechange(*topology, *components, *triple_points, *mu, format),
    }
}

fn emit(text: &str, out: Option<&Path>) -> anyhow::Result<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            if let Err(e) = emit(&outcome.text, cli.out.as_deref()) {
                eprintln!("error: {e:#}");
                return ExitCode::from(2);
            }
            ExitCode::from(if outcome.pass { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<Error>() {
                Some(Error::Contradiction(_)) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}
