//! `geninv`: exact generalized inverses from the command line.
//!
//! Exit status is 0 when the requested property holds, 1 when it does not and
//! 2 on any error.

mod commands;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use geninv::inverses::InverseKind;
use geninv::orders::Relation;

#[derive(Parser)]
#[command(
    name = "geninv",
    version,
    about = "Exact GD1 and 1GD inverses and matrix partial orders"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Index, Fitting spaces, core-nilpotent split and Jordan chains of a matrix.
    Decompose { file: PathBuf },

    /// Parametrized GD1 or 1GD family of a matrix, with optional members.
    Family {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: FamilyKind,
        /// `zero`, `random:SEED`, or a JSON file mapping parameter names to entries.
        #[arg(long)]
        params: Option<String>,
        /// List every member (finite fields only).
        #[arg(long)]
        enumerate: bool,
        /// Largest family `--enumerate` will list.
        #[arg(long, default_value_t = 4096)]
        cap: u128,
    },

    /// Decide whether A is below B in a partial order.
    Check {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_enum)]
        relation: RelationArg,
    },

    /// Test whether X is an inverse of A of the given kind.
    Verify {
        a: PathBuf,
        x: PathBuf,
        #[arg(long, value_enum)]
        kind: KindArg,
    },

    /// Replay the bundled worked examples.
    PaperExamples {
        /// Print the examples and their fixtures without running them.
        #[arg(long)]
        list: bool,
        /// Load fixtures from this directory instead of the built-in copies.
        #[arg(long)]
        fixture_dir: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    Gd1,
    #[value(name = "1gd")]
    OneGd,
}

impl From<FamilyKind> for InverseKind {
    fn from(k: FamilyKind) -> Self {
        match k {
            FamilyKind::Gd1 => InverseKind::GD1,
            FamilyKind::OneGd => InverseKind::OneGD,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    One,
    Reflexive,
    Gd,
    Gd1,
    #[value(name = "1gd")]
    OneGd,
    GdReflexive,
}

impl From<KindArg> for InverseKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::One => InverseKind::One,
            KindArg::Reflexive => InverseKind::Reflexive,
            KindArg::Gd => InverseKind::GDrazin,
            KindArg::Gd1 => InverseKind::GD1,
            KindArg::OneGd => InverseKind::OneGD,
            KindArg::GdReflexive => InverseKind::GDrazinReflexive,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum RelationArg {
    Space,
    Minus,
    Gd,
    Gd1,
    #[value(name = "1gd")]
    OneGd,
    #[value(name = "gd1-1gd")]
    Gd1OneGd,
    #[value(name = "1gd-gd1")]
    OneGdGd1,
}

impl From<RelationArg> for Relation {
    fn from(r: RelationArg) -> Self {
        match r {
            RelationArg::Space => Relation::Space,
            RelationArg::Minus => Relation::Minus,
            RelationArg::Gd => Relation::GDrazin,
            RelationArg::Gd1 => Relation::GD1,
            RelationArg::OneGd => Relation::OneGD,
            RelationArg::Gd1OneGd => Relation::GD1OneGD,
            RelationArg::OneGdGd1 => Relation::OneGDGD1,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Decompose { file } => commands::decompose(&file),
        Command::Family {
            file,
            kind,
            params,
            enumerate,
            cap,
        } => commands::family(&file, kind.into(), params.as_deref(), enumerate, cap),
        Command::Check { a, b, relation } => commands::check(&a, &b, relation.into()),
        Command::Verify { a, x, kind } => commands::verify(&a, &x, kind.into()),
        Command::PaperExamples { list, fixture_dir } => {
            commands::paper_examples(list, fixture_dir.as_deref())
        }
    };
    match result {
        Ok(out) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&out.json).expect("values serialize") + "\n"
            } else {
                out.text
            };
            // A closed pipe is not worth a panic.
            let _ = std::io::stdout().write_all(body.as_bytes());
            ExitCode::from(if out.holds { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
