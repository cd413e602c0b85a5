//! `fingroup`: batch analysis of finite groups, Boolean powers, towers and
//! module rings, with exact JSON or CSV reports.

mod analyze;
mod context;
mod inequalities;
mod power;
mod report;
mod ring;
mod tower;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use context::Context;
use report::{Report, TOOL, VERSION};

/// Largest `--cap-order` accepted.
pub const MAX_CAP_ORDER: usize = 10_000;
/// Largest `--cap-subgroups` accepted.
pub const MAX_CAP_SUBGROUPS: usize = 4096;

#[derive(Debug, Parser)]
#[command(name = "fingroup", version, about = "Exhaustive finite group computations with exact reports")]
struct Cli {
    /// Corpus directory (default: the bundled corpus).
    #[arg(long, global = true)]
    corpus: Option<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Largest group order analysed.
    #[arg(long, global = true)]
    cap_order: Option<usize>,
    /// Largest order whose subgroup lattice is enumerated.
    #[arg(long, global = true)]
    cap_subgroups: Option<usize>,
    /// JSON object mapping rank to β(rank), for the first inequality.
    #[arg(long, global = true)]
    beta_table: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Com,
    R,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Quotients,
    Subgroups,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Structure, commuting counts, Neumann witness and ρ values per group.
    AnalyzeGroup {
        /// Group names (default: the whole corpus).
        groups: Vec<String>,
    },
    /// Neumann witness with exhaustive minimality check per group.
    Neumann { groups: Vec<String> },
    /// ρ_com or ρ_r for every order up to --max-order.
    Rho {
        #[arg(long, value_enum, default_value_t = KindArg::Com)]
        kind: KindArg,
        #[arg(long, default_value_t = 24)]
        max_order: usize,
        #[arg(long, value_enum, default_value_t = FamilyArg::Quotients)]
        family: FamilyArg,
    },
    /// Both ρ inequalities and the intermediate bound, per order.
    VerifyInequalities { groups: Vec<String> },
    /// Boolean power of a group, or a filtered power of a field.
    BooleanPower {
        /// Base group.
        #[arg(long)]
        group: Option<String>,
        #[arg(long, default_value_t = 2)]
        atoms: usize,
        /// Ideal given by the atoms below its bound, e.g. "0,1" or "" (default: all ideals).
        #[arg(long)]
        ideal: Vec<String>,
        /// Field for a filtered power, e.g. GF4.
        #[arg(long)]
        field: Option<String>,
        /// Closed set and its subfield order, e.g. "0,1=2".
        #[arg(long)]
        closed: Vec<String>,
    },
    /// Towers of finite groups: commuting fractions and commutator checks.
    InverseSystem {
        /// Bundled tower name (default: every bundled tower).
        #[arg(long)]
        tower: Vec<String>,
        /// Tower spec file.
        #[arg(long)]
        spec: Vec<PathBuf>,
    },
    /// The ring built on a cyclic module.
    RingFromModule {
        /// Bundled example name (default: every bundled example).
        #[arg(long)]
        example: Vec<String>,
        /// Action spec file.
        #[arg(long)]
        spec: Vec<PathBuf>,
    },
    /// Write the bundled corpus to a directory.
    ExportCorpus { dir: PathBuf },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::AnalyzeGroup { .. } => "analyze-group",
            Command::Neumann { .. } => "neumann",
            Command::Rho { .. } => "rho",
            Command::VerifyInequalities { .. } => "verify-inequalities",
            Command::BooleanPower { .. } => "boolean-power",
            Command::InverseSystem { .. } => "inverse-system",
            Command::RingFromModule { .. } => "ring-from-module",
            Command::ExportCorpus { .. } => "export-corpus",
        }
    }
}

fn run(cli: &Cli) -> Result<(Report, &'static [&'static str]), String> {
    let ctx = Context::new(cli.corpus.as_deref(), cli.cap_order, cli.cap_subgroups, cli.beta_table.as_deref())?;
    let (args, items, columns) = match &cli.command {
        Command::AnalyzeGroup { groups } => (json!({ "groups": groups }), analyze::analyze(&ctx, groups), analyze::COLUMNS),
        Command::Neumann { groups } => (json!({ "groups": groups }), analyze::neumann(&ctx, groups), analyze::NEUMANN_COLUMNS),
        Command::Rho { kind, max_order, family } => {
            let kind = match kind {
                KindArg::Com => fingroup::measure::RhoKind::Com,
                KindArg::R => fingroup::measure::RhoKind::R,
            };
            let family = match family {
                FamilyArg::Quotients => fingroup::measure::FamilyMode::Quotients,
                FamilyArg::Subgroups => fingroup::measure::FamilyMode::Subgroups,
            };
            (
                json!({ "kind": kind, "max_order": max_order, "family": family }),
                inequalities::rho(&ctx, kind, family, *max_order),
                inequalities::RHO_COLUMNS,
            )
        }
        Command::VerifyInequalities { groups } => (
            json!({ "groups": groups, "beta_table": cli.beta_table }),
            inequalities::verify(&ctx, groups),
            inequalities::INEQUALITY_COLUMNS,
        ),
        Command::BooleanPower { group, atoms, ideal, field, closed } => {
            if group.is_none() && field.is_none() {
                return Err("boolean-power needs --group or --field".into());
            }
            let items = power::boolean_power(&ctx, group.as_deref(), *atoms, ideal, field.as_deref(), closed)?;
            (
                json!({ "group": group, "atoms": atoms, "ideals": ideal, "field": field, "closed": closed }),
                items,
                power::COLUMNS,
            )
        }
        Command::InverseSystem { tower, spec } => {
            (json!({ "towers": tower, "specs": spec }), tower::inverse_system(&ctx, tower, spec), tower::COLUMNS)
        }
        Command::RingFromModule { example, spec } => {
            (json!({ "examples": example, "specs": spec }), ring::ring_from_module(&ctx, example, spec), ring::COLUMNS)
        }
        Command::ExportCorpus { dir } => {
            (json!({ "dir": dir }), context::export(dir), context::EXPORT_COLUMNS)
        }
    };
    let job = json!({
        "corpus": ctx.source,
        "caps": { "order": ctx.caps.order, "subgroup_order": ctx.caps.subgroup_order },
        "args": args,
    });
    let report = Report {
        tool: TOOL,
        version: VERSION,
        command: cli.command.name(),
        job,
        warnings: ctx.corpus.warnings.clone(),
        items,
    };
    Ok((report, columns))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (report, columns) = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("fingroup: {e}");
            return ExitCode::from(1);
        }
    };
    let bytes = match cli.format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(columns),
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, &bytes).map_err(|e| format!("{}: {e}", path.display())),
        None => std::io::stdout().write_all(&bytes).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("fingroup: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(report.exit_code() as u8)
}
