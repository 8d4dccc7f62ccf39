//! Command-line driver. `run` is the testable entry point: it writes the
//! report to the given sink and returns the process exit code
//! (0 success, 1 mathematical failure, 2 usage or parse error).

use crate::bialgebra::{cocommutator_from_rmatrix, LieBialgebra, RMatrix};
use crate::catalog::{self, CatalogItem};
use crate::contraction::{
    check_double_preserving, coboundary_constant, contract_double_blocks, classical_limit,
    dual_classical_limit, fundamental_constant, renormalized_dual_contraction, ContractionError,
    ExponentMap,
};
use crate::document::{load_document, AlgebraDocument};
use crate::double::build_double;
use crate::render;
use clap::{Parser, Subcommand};
use std::io::Write;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MATH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "bialg",
    about = "Exact computations with Lie bialgebras, classical doubles, and contractions",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the bialgebra axioms of a catalog entry or document file.
    Validate { source: String },
    /// Print the bracket table of the classical double.
    Double { source: String },
    /// Print the cocommutator; with --rmatrix, derive it from the
    /// document's r-matrix and compare against the declared one.
    Cocommutator {
        source: String,
        #[arg(long)]
        rmatrix: bool,
    },
    /// Contract the algebra along exponent map m; with --n, contract the
    /// blocks of its double along (m, n).
    Contract {
        source: String,
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        m: Vec<i64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        n: Option<Vec<i64>>,
    },
    /// Solve for all dual exponent maps n making the contraction of the
    /// double along (m, n) double-preserving.
    SolveExponents {
        source: String,
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        m: Vec<i64>,
    },
    /// Print the contraction constants f0, c0, t0 for an exponent map.
    Constants {
        source: String,
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        m: Vec<i64>,
    },
    /// Contract the double along the dual block (or, with --dual, along
    /// the primal block).
    ClassicalLimit {
        source: String,
        #[arg(long)]
        dual: bool,
    },
    /// List or show the built-in examples.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Show { key: String },
}

enum Failure {
    Usage(String),
    Math(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Math(_) => EXIT_MATH,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Math(m) => m,
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn math(msg: impl Into<String>) -> Failure {
    Failure::Math(msg.into())
}

impl From<ContractionError> for Failure {
    fn from(e: ContractionError) -> Self {
        match e {
            ContractionError::LengthMismatch { .. } => usage(e.to_string()),
            _ => math(e.to_string()),
        }
    }
}

/// Resolve a catalog key or file path to a loaded document.
fn load_source(source: &str) -> Result<AlgebraDocument, Failure> {
    match catalog::find(source) {
        Some(entry) => match entry.item {
            CatalogItem::Algebra(doc) => Ok(doc),
            CatalogItem::Map(_) => Err(usage(format!(
                "catalog entry `{source}` is an exponent map, not an algebra"
            ))),
        },
        None => {
            let text = std::fs::read_to_string(source)
                .map_err(|e| usage(format!("cannot read `{source}`: {e}")))?;
            load_document(&text).map_err(|e| usage(e.to_string()))
        }
    }
}

fn bialgebra_of(doc: &AlgebraDocument) -> Result<LieBialgebra, Failure> {
    doc.to_bialgebra().map_err(|e| usage(e.to_string()))
}

/// Bialgebra plus axiom check; commands building on the double need a
/// genuine bialgebra.
fn valid_bialgebra_of(doc: &AlgebraDocument) -> Result<LieBialgebra, Failure> {
    let b = bialgebra_of(doc)?;
    if b.is_valid() {
        Ok(b)
    } else {
        let (report, _) = render::validate_report(&b);
        Err(math(report))
    }
}

fn rmatrix_of(doc: &AlgebraDocument) -> Result<Option<RMatrix>, Failure> {
    doc.rmatrix().map_err(|e| usage(e.to_string()))
}

fn exponent_map(values: &[i64], dim: usize) -> Result<ExponentMap, Failure> {
    if values.len() != dim {
        return Err(usage(format!(
            "exponent list has {} entries, algebra has dimension {dim}",
            values.len()
        )));
    }
    Ok(ExponentMap(values.to_vec()))
}

fn dispatch(cli: Cli, out: &mut String) -> Result<i32, Failure> {
    use std::fmt::Write as _;
    match cli.command {
        Command::Validate { source } => {
            let b = bialgebra_of(&load_source(&source)?)?;
            let (report, ok) = render::validate_report(&b);
            out.push_str(&report);
            Ok(if ok { EXIT_OK } else { EXIT_MATH })
        }
        Command::Double { source } => {
            let b = valid_bialgebra_of(&load_source(&source)?)?;
            let d = build_double(&b).expect("validated above");
            out.push_str(&render::double_table_with_header(
                &d,
                &format!("double of {}", b.name),
            ));
            out.push_str("\n\ncanonical cocommutator:\n");
            out.push_str(&render::cocommutator_table(&d.cocommutator(), &d.names));
            out.push_str("\n\ncanonical r-matrix:\n");
            out.push_str(&render::rmatrix_line(&d.canonical_rmatrix(), &d.names));
            Ok(EXIT_OK)
        }
        Command::Cocommutator { source, rmatrix } => {
            let doc = load_source(&source)?;
            let b = bialgebra_of(&doc)?;
            if !rmatrix {
                out.push_str(&render::cocommutator_table(&b.f, &b.names));
                return Ok(EXIT_OK);
            }
            let rho = rmatrix_of(&doc)?
                .ok_or_else(|| usage(format!("`{source}` declares no r-matrix")))?;
            let f = cocommutator_from_rmatrix(&b.c, &rho).map_err(|e| math(e.to_string()))?;
            out.push_str(&render::cocommutator_table(&f, &b.names));
            let verdict = if f == b.f { "yes" } else { "no" };
            write!(out, "\n\nmatches declared cocommutator: {verdict}").unwrap();
            Ok(EXIT_OK)
        }
        Command::Contract { source, m, n } => {
            let b = valid_bialgebra_of(&load_source(&source)?)?;
            let m = exponent_map(&m, b.dim())?;
            match n {
                None => {
                    let result = fundamental_constant(&b, &m)?;
                    writeln!(out, "m = {}", m.render()).unwrap();
                    writeln!(out, "f0 = {}", result.f0).unwrap();
                    out.push_str("\ncontracted brackets:\n");
                    out.push_str(&render::bracket_table(&result.contracted.c, &b.names));
                    out.push_str("\n\ncontracted cocommutator:\n");
                    out.push_str(&render::cocommutator_table(&result.contracted.f, &b.names));
                    Ok(EXIT_OK)
                }
                Some(n) => {
                    let n = exponent_map(&n, b.dim())?;
                    let dc = contract_double_blocks(&b, &m, &n)?;
                    let d = build_double(&b).expect("validated above");
                    writeln!(out, "m = {}", m.render()).unwrap();
                    writeln!(out, "n = {}\n", n.render()).unwrap();
                    out.push_str(&render::double_contraction_report(&dc, &d.names));
                    out.push_str("\n\n");
                    let report = check_double_preserving(&b, &m, &n)?;
                    out.push_str(&render::preservation_report(&report));
                    Ok(if dc.outcome.is_convergent() {
                        EXIT_OK
                    } else {
                        EXIT_MATH
                    })
                }
            }
        }
        Command::SolveExponents { source, m } => {
            let b = valid_bialgebra_of(&load_source(&source)?)?;
            let m = exponent_map(&m, b.dim())?;
            let family = crate::contraction::solve_dual_exponents(&b, &m)?;
            out.push_str(&render::family_report(&family));
            Ok(EXIT_OK)
        }
        Command::Constants { source, m } => {
            let doc = load_source(&source)?;
            let b = valid_bialgebra_of(&doc)?;
            let m = exponent_map(&m, b.dim())?;
            let f0 = fundamental_constant(&b, &m)?.f0;
            let t0 = renormalized_dual_contraction(&b, &m, f0)?.t0;
            writeln!(out, "m = {}", m.render()).unwrap();
            writeln!(out, "f0 = {f0}").unwrap();
            match rmatrix_of(&doc)? {
                Some(rho) => {
                    let c0 = coboundary_constant(&b, &rho, &m)?.c0;
                    writeln!(out, "c0 = {c0}").unwrap();
                }
                None => out.push_str("c0 = n/a (no r-matrix declared)\n"),
            }
            write!(out, "t0 = {t0}").unwrap();
            Ok(EXIT_OK)
        }
        Command::ClassicalLimit { source, dual } => {
            let b = valid_bialgebra_of(&load_source(&source)?)?;
            let d = build_double(&b).expect("validated above");
            let (limit, title) = if dual {
                (
                    dual_classical_limit(&d),
                    format!("dual classical limit of double of {}", b.name),
                )
            } else {
                (
                    classical_limit(&d),
                    format!("classical limit of double of {}", b.name),
                )
            };
            out.push_str(&render::double_table_with_header(&limit, &title));
            Ok(EXIT_OK)
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                for entry in catalog::entries() {
                    writeln!(out, "{:<22} {}", entry.key, entry.summary).unwrap();
                }
                Ok(EXIT_OK)
            }
            CatalogAction::Show { key } => {
                let entry = catalog::find(&key)
                    .ok_or_else(|| usage(format!("no catalog entry `{key}`")))?;
                match entry.item {
                    CatalogItem::Algebra(_) => {
                        out.push_str(catalog::source(&key).expect("algebra entries have source"));
                    }
                    CatalogItem::Map(map) => {
                        writeln!(out, "{}", entry.summary).unwrap();
                        writeln!(out, "m: {}", map.m.describe()).unwrap();
                        write!(out, "n: {}", map.n.describe()).unwrap();
                    }
                }
                Ok(EXIT_OK)
            }
        },
    }
}

/// Run one command. `argv` includes the program name in position zero.
pub fn run<W: Write>(argv: &[String], out: &mut W) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version land here too; they are not failures.
            let success = e.use_stderr();
            let _ = write!(out, "{e}");
            return if success { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let mut text = String::new();
    match dispatch(cli, &mut text) {
        Ok(code) => {
            let _ = writeln!(out, "{text}");
            code
        }
        Err(failure) => {
            let _ = writeln!(out, "error: {}", failure.message());
            failure.code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exec(args: &[&str]) -> (i32, String) {
        let mut argv = vec!["bialg".to_string()];
        argv.extend(args.iter().map(|s| s.to_string()));
        let mut out = Vec::new();
        let code = run(&argv, &mut out);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn validate_e2_passes() {
        let (code, text) = exec(&["validate", "e2"]);
        assert_eq!(code, EXIT_OK);
        assert!(text.contains("all checks passed"));
    }

    #[test]
    fn double_e2_prints_the_corrected_bracket() {
        let (code, text) = exec(&["double", "e2"]);
        assert_eq!(code, EXIT_OK);
        assert!(text.contains("[p2, J12] = p1 + z J12"));
        assert!(text.contains("[p2, P1] = -j12 + z P1"));
    }

    #[test]
    fn solve_exponents_prints_the_family() {
        let (code, text) = exec(&["solve-exponents", "e2", "--m", "1,0,1"]);
        assert_eq!(code, EXIT_OK);
        assert!(text.contains("n = (a, 1 + a, a), a >= 0"), "got: {text}");
    }

    #[test]
    fn constants_for_the_galilei_map() {
        let (code, text) = exec(&["constants", "e2", "--m", "1,0,1"]);
        assert_eq!(code, EXIT_OK);
        assert!(text.contains("f0 = 1"));
        assert!(text.contains("c0 = 1"));
        assert!(text.contains("t0 = 1"));
    }

    #[test]
    fn unknown_subcommand_is_usage_error() {
        let (code, _) = exec(&["frobnicate"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn missing_file_is_usage_error() {
        let (code, text) = exec(&["validate", "/no/such/file.toml"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(text.contains("cannot read"));
    }

    #[test]
    fn map_entry_is_not_an_algebra() {
        let (code, text) = exec(&["double", "nonrel-map"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(text.contains("exponent map"));
    }

    #[test]
    fn invalid_document_fails_validation_with_exit_1() {
        let dir = std::env::temp_dir().join("bialg-cli-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("broken.toml");
        std::fs::write(
            &path,
            r#"
name = "broken"
dimension = 3
generators = ["A", "B", "C"]
parameters = ["z"]
c = [[1, 2, 3, "1"], [2, 3, 1, "1"], [3, 1, 2, "1"]]
f = [[1, 2, 3, "z"]]
"#,
        )
        .unwrap();
        let (code, text) = exec(&["validate", path.to_str().unwrap()]);
        assert_eq!(code, EXIT_MATH);
        assert!(text.contains("validation failed"));
    }

    #[test]
    fn contract_with_divergent_map_exits_1() {
        let (code, text) = exec(&["contract", "e2", "--m", "0,0,1"]);
        assert_eq!(code, EXIT_MATH, "got: {text}");
        assert!(text.contains("error"));
    }

    #[test]
    fn contract_double_blocks_matches_galilei() {
        let (code, text) = exec(&["contract", "e2", "--m", "1,0,1", "--n", "0,1,0"]);
        assert_eq!(code, EXIT_OK);
        assert!(text.contains("[J12, P2] = 0"));
        assert!(text.contains("double-preserving: yes"));
    }

    #[test]
    fn classical_limit_abelianizes_the_dual_block() {
        let (code, text) = exec(&["classical-limit", "e2"]);
        assert_eq!(code, EXIT_OK);
        assert!(text.contains("[j12, p2] = 0"));
        assert!(text.contains("[J12, P1] = P2"));
    }

    #[test]
    fn catalog_list_names_every_entry() {
        let (code, text) = exec(&["catalog", "list"]);
        assert_eq!(code, EXIT_OK);
        for key in [
            "e2",
            "e2-double",
            "galilei-double",
            "nonrel-map",
            "abelianizer",
            "classical-limit",
            "dual-classical-limit",
        ] {
            assert!(text.contains(key), "missing {key}");
        }
    }

    #[test]
    fn catalog_show_prints_document_source() {
        let (code, text) = exec(&["catalog", "show", "e2"]);
        assert_eq!(code, EXIT_OK);
        assert!(text.contains("name = \"e2\""));
    }

    #[test]
    fn cocommutator_from_rmatrix_matches_declared() {
        let (code, text) = exec(&["cocommutator", "e2", "--rmatrix"]);
        assert_eq!(code, EXIT_OK);
        assert!(text.contains("delta(J12) = z J12^P2"));
        assert!(text.contains("matches declared cocommutator: yes"));
    }
}
