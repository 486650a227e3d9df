use std::collections::BTreeSet;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use burnside::analysis::{analyze, parse_fields, AnalysisError, GroupSource};
use burnside::catalog::{reference_counts, CatalogId};
use burnside::characters::{
    complex_basis, complex_irreducibles, integer_character_sublattice, integer_real_sublattice,
    rational_irreducible_basis, real_irreducible_basis, FieldTag,
};
use burnside::group::conjugacy_classes;
use burnside::subgroups::marks_for;
use burnside_cli::document::{self, CharacterTableDocument, SCHEMA_VERSION};
use burnside_cli::emit;
use burnside_cli::groupspec::parse_group_spec;
use burnside_cli::verify;
use clap::{Parser, Subcommand, ValueEnum};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_COMPUTATION: u8 = 3;

#[derive(Parser)]
#[command(name = "burnside", version, about = "Burnside ring to representation ring comparison for finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum DataFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableField {
    C,
    R,
    Q,
    Int,
    IntR,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis: subgroups, marks, image basis, character tables, cokernels.
    Analyze {
        /// Catalog name (C6, 2D8, 2T, 2O, 2I, GL2F3, S4, ...) or a group file.
        group: String,
        /// Comma separated subset of q, r, c, int.
        #[arg(long, default_value = "q,r,c,int")]
        fields: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Write to this file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Table of marks.
    Marks {
        group: String,
        #[arg(long, value_enum, default_value = "text")]
        format: DataFormat,
    },
    /// Irreducible characters over one field.
    Chartab {
        group: String,
        #[arg(long, value_enum, default_value = "c")]
        field: TableField,
        #[arg(long, value_enum, default_value = "text")]
        format: DataFormat,
    },
    /// Catalog groups and their reference counts.
    ListGroups,
    /// Runs the reference suite and prints a pass/fail matrix.
    VerifyPaper,
}

enum Failure {
    Usage(String),
    Computation(String),
    Mismatch,
}

impl From<AnalysisError> for Failure {
    fn from(e: AnalysisError) -> Self {
        Failure::Computation(e.to_string())
    }
}

fn resolve(group: &str) -> Result<GroupSource, Failure> {
    if let Ok(id) = group.parse::<CatalogId>() {
        return Ok(GroupSource::Catalog(id));
    }
    let path = Path::new(group);
    if !path.is_file() {
        return Err(Failure::Usage(format!(
            "'{group}' is neither a catalog group nor a readable file (see list-groups)"
        )));
    }
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{group}: {e}")))?;
    let spec = parse_group_spec(&text).map_err(|e| Failure::Usage(format!("{group}: {e}")))?;
    let name = spec.name.unwrap_or_else(|| {
        path.file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| group.to_string())
    });
    Ok(GroupSource::Generators {
        name,
        gens: spec.generators,
    })
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Computation(format!("[output] {}: {e}", p.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| Failure::Computation(format!("[output] {e}")))
        }
    }
}

fn doc_error(e: document::DocumentError) -> Failure {
    Failure::Computation(format!("[report] {e}"))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze {
            group,
            fields,
            format,
            out,
        } => {
            let source = resolve(&group)?;
            let fields: BTreeSet<FieldTag> = parse_fields(&fields).map_err(Failure::Usage)?;
            let report = analyze(&source, &fields)?;
            let doc = document::build(&report).map_err(doc_error)?;
            let text = match format {
                Format::Text => emit::to_text(&doc),
                Format::Json => doc.to_json(),
                Format::Latex => emit::to_latex(&doc),
            };
            emit(&text, out.as_deref())
        }
        Command::Marks { group, format } => {
            let source = resolve(&group)?;
            let g = source.build()?;
            let marks = marks_for(&g).map_err(AnalysisError::from)?;
            let doc = document::marks_document(&source.name(), g.order(), &marks).map_err(doc_error)?;
            let text = match format {
                DataFormat::Json => document::to_json(&doc),
                DataFormat::Text => emit::marks_text(&doc.group, &doc.subgroups, &doc.marks),
            };
            emit(&text, None)
        }
        Command::Chartab { group, field, format } => {
            let source = resolve(&group)?;
            let g = source.build()?;
            let classes = conjugacy_classes(&g);
            let table = complex_irreducibles(&g, &classes).map_err(AnalysisError::from)?;
            let lattice = match field {
                TableField::C => complex_basis(&table),
                TableField::R => real_irreducible_basis(&table).map_err(AnalysisError::from)?,
                TableField::Q => rational_irreducible_basis(&table).map_err(AnalysisError::from)?,
                TableField::Int => integer_character_sublattice(&table),
                TableField::IntR => {
                    let real = real_irreducible_basis(&table).map_err(AnalysisError::from)?;
                    integer_real_sublattice(&real, &integer_character_sublattice(&table), &table)
                }
            };
            let fs = matches!(field, TableField::C).then_some(table.fs_indicators.as_slice());
            let doc = CharacterTableDocument {
                schema_version: SCHEMA_VERSION,
                group: source.name(),
                order: g.order() as u64,
                classes: document::class_entries(&classes),
                table: document::character_table(&lattice, fs),
            };
            let text = match format {
                DataFormat::Json => document::to_json(&doc),
                DataFormat::Text => emit::character_table_text(&doc.classes, &doc.table),
            };
            emit(&text, None)
        }
        Command::ListGroups => {
            let mut rows = vec![["name", "order", "classes", "subgroup classes", "description"]
                .map(String::from)
                .to_vec()];
            for id in CatalogId::examples() {
                let counts = reference_counts(id);
                rows.push(vec![
                    id.name(),
                    id.expected_order().to_string(),
                    counts.element_classes.map_or("-".into(), |c| c.to_string()),
                    counts.subgroup_classes.map_or("-".into(), |c| c.to_string()),
                    id.description(),
                ]);
            }
            let mut text = emit::text_table(&rows);
            text.push_str("\nAlso accepted: C<n> for any n >= 1, 2D<2n> for n >= 2, S<n> for n <= 8,\n");
            text.push_str("or the path of a group file (see the README for the format).\n");
            emit(&text, None)
        }
        Command::VerifyPaper => {
            let (results, checks) = verify::run_all();
            let mut text = verify::matrix_text(&checks);
            text.push('\n');
            for r in &results {
                text.push_str(&r.line());
                text.push('\n');
            }
            emit(&text, None)?;
            if results.iter().all(|r| r.passed) && checks.iter().all(|c| c.passed()) {
                Ok(())
            } else {
                Err(Failure::Mismatch)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Computation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_COMPUTATION)
        }
        Err(Failure::Mismatch) => {
            eprintln!("verification failed");
            ExitCode::from(EXIT_MISMATCH)
        }
    }
}
