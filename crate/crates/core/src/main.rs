//! Command-line driver: ingest algebras (structure-constant JSON or quiver
//! descriptions), compute invariants and fingerprints, build trivial
//! extensions, compare fingerprints, and run the identity verifiers.

use clap::{Parser, Subcommand, ValueEnum};
use kulshammer::algebra::{load_json, Algebra, SymmetrizingForm};
use kulshammer::fingerprint::{compare, compute_fingerprint, Fingerprint, Verdict};
use kulshammer::kulshammer::{codim_sequence, t_n, verify_kulshammer_maps};
use kulshammer::quiver::{build_algebra, parse_quiver};
use kulshammer::report::Report;
use kulshammer::trivext::{
    verify_center, verify_lambda_correspondence, verify_orthogonal_chains, verify_tn_structure,
    TrivialExtension,
};
use serde_json::json;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "kulshammer",
    about = "Exact Reynolds/Külshammer invariants of finite-dimensional algebras over finite fields",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output style for reports and verdicts (artifact outputs are always JSON)
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Load a file and run every structural check; exit 0 iff it is valid
    Validate { file: PathBuf },
    /// Turn a quiver description into structure-constant JSON
    Build {
        file: PathBuf,
        /// Write the algebra JSON here instead of stdout
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Print commutator, center, and T_n chain dimensions
    Invariants {
        file: PathBuf,
        /// Compute the chain up to this index instead of auto-stabilizing
        #[arg(long, conflicts_with = "auto")]
        nmax: Option<u32>,
        /// Run until the chain stabilizes (the default)
        #[arg(long)]
        auto: bool,
    },
    /// Emit the canonical derived-equivalence fingerprint
    Fingerprint {
        file: PathBuf,
        /// Write the fingerprint JSON here instead of stdout
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Compare two fingerprints (or two algebra files); exit 0 when nothing
    /// separates them, 1 when distinguished, 2 when incomparable or on error
    Compare { left: PathBuf, right: PathBuf },
    /// Export the trivial extension with its symmetrizing functional
    Trivext {
        file: PathBuf,
        /// Write the extension JSON here instead of stdout
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Run the identity verifiers; exit 0 iff every identity holds
    Verify {
        file: PathBuf,
        /// Largest chain index to verify
        #[arg(long, default_value_t = 3)]
        nmax: u32,
    },
}

/// An error annotated with the file it came from. Parse errors carry their
/// own line/column information in the message.
struct FileError {
    path: PathBuf,
    message: String,
}

impl fmt::Display for FileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path.display(), self.message)
    }
}

fn file_err(path: &Path, message: impl fmt::Display) -> FileError {
    FileError { path: path.to_path_buf(), message: message.to_string() }
}

fn read_file(path: &Path) -> Result<String, FileError> {
    fs::read_to_string(path).map_err(|e| file_err(path, e))
}

fn looks_like_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

/// Load an algebra from either supported format. Quiver-built algebras carry
/// no symmetrizing form.
fn load_algebra_file(path: &Path) -> Result<(Algebra, Option<SymmetrizingForm>), FileError> {
    let text = read_file(path)?;
    if looks_like_json(&text) {
        let loaded = load_json(&text).map_err(|e| file_err(path, e))?;
        Ok((loaded.algebra, loaded.form))
    } else {
        let quiver = parse_quiver(&text).map_err(|e| file_err(path, e))?;
        Ok((build_algebra(&quiver), None))
    }
}

fn write_output(out: Option<&Path>, content: &str) -> Result<(), FileError> {
    match out {
        Some(path) => fs::write(path, content).map_err(|e| file_err(path, e)),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    };
    std::process::exit(code);
}

fn run(cli: &Cli) -> Result<i32, FileError> {
    match &cli.command {
        Command::Validate { file } => run_validate(file, cli.format),
        Command::Build { file, out } => run_build(file, out.as_deref()),
        Command::Invariants { file, nmax, auto: _ } => run_invariants(file, *nmax, cli.format),
        Command::Fingerprint { file, out } => run_fingerprint(file, out.as_deref()),
        Command::Compare { left, right } => run_compare(left, right, cli.format),
        Command::Trivext { file, out } => run_trivext(file, out.as_deref()),
        Command::Verify { file, nmax } => run_verify(file, *nmax, cli.format),
    }
}

fn run_validate(file: &Path, format: Format) -> Result<i32, FileError> {
    let text = read_file(file)?;
    let outcome = if looks_like_json(&text) {
        load_json(&text).map_err(|e| file_err(file, e)).map(|loaded| {
            (loaded.algebra.dim(), loaded.algebra.field().spec_string(), loaded.form.is_some())
        })
    } else {
        parse_quiver(&text).map_err(|e| file_err(file, e)).map(|quiver| {
            let algebra = build_algebra(&quiver);
            (algebra.dim(), algebra.field().spec_string(), false)
        })
    };
    match outcome {
        Ok((dim, field, has_form)) => {
            match format {
                Format::Text => println!(
                    "ok: {} (dim {dim}, field {field}{})",
                    file.display(),
                    if has_form { ", symmetrizing form" } else { "" }
                ),
                Format::Json => println!(
                    "{}",
                    json!({ "valid": true, "dim": dim, "field": field, "has_form": has_form })
                ),
            }
            Ok(0)
        }
        Err(e) => {
            eprintln!("invalid: {e}");
            Ok(1)
        }
    }
}

fn run_build(file: &Path, out: Option<&Path>) -> Result<i32, FileError> {
    let text = read_file(file)?;
    if looks_like_json(&text) {
        return Err(file_err(file, "expected a quiver description, found JSON"));
    }
    let quiver = parse_quiver(&text).map_err(|e| file_err(file, e))?;
    let algebra = build_algebra(&quiver);
    write_output(out, &kulshammer::algebra::to_json(&algebra, None))?;
    Ok(0)
}

fn run_invariants(file: &Path, nmax: Option<u32>, format: Format) -> Result<i32, FileError> {
    let (algebra, _) = load_algebra_file(file)?;
    let seq = codim_sequence(&algebra, nmax).map_err(|e| file_err(file, e))?;
    let dim = algebra.dim();
    let dim_k = algebra.commutator_space().dim();
    let dim_z = algebra.center().dim();
    let tn_dims: Vec<usize> = seq.codims.iter().map(|c| dim - c).collect();
    match format {
        Format::Text => {
            let codims = seq.codims.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ");
            let marker = if seq.stab.is_some() { " (stable)" } else { " (not stabilized)" };
            println!("field {}, dim A = {dim}", algebra.field().spec_string());
            println!("dim K = {dim_k}, dim Z = {dim_z}, codim T_n: {codims}{marker}");
            let tns = tn_dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ");
            println!("dim T_n: {tns}");
        }
        Format::Json => {
            println!(
                "{}",
                json!({
                    "field": algebra.field().spec_string(),
                    "dim": dim,
                    "dim_k": dim_k,
                    "dim_z": dim_z,
                    "dim_tn": tn_dims,
                    "codim_tn": seq.codims,
                    "stab": seq.stab,
                })
            );
        }
    }
    Ok(0)
}

fn run_fingerprint(file: &Path, out: Option<&Path>) -> Result<i32, FileError> {
    let (algebra, form) = load_algebra_file(file)?;
    let fp = compute_fingerprint(&algebra, form.as_ref()).map_err(|e| file_err(file, e))?;
    write_output(out, &fp.to_canonical_json())?;
    Ok(0)
}

/// A compare operand: a stored fingerprint, or an algebra file to
/// fingerprint on the fly.
fn load_fingerprint_operand(path: &Path) -> Result<Fingerprint, FileError> {
    let text = read_file(path)?;
    if looks_like_json(&text) {
        let value: serde_json::Value =
            serde_json::from_str(&text).map_err(|e| file_err(path, e))?;
        if value.get("version").is_some() {
            return Fingerprint::from_json(&text).map_err(|e| file_err(path, e));
        }
        let loaded = load_json(&text).map_err(|e| file_err(path, e))?;
        return compute_fingerprint(&loaded.algebra, loaded.form.as_ref())
            .map_err(|e| file_err(path, e));
    }
    let quiver = parse_quiver(&text).map_err(|e| file_err(path, e))?;
    compute_fingerprint(&build_algebra(&quiver), None).map_err(|e| file_err(path, e))
}

fn run_compare(left: &Path, right: &Path, format: Format) -> Result<i32, FileError> {
    let lf = load_fingerprint_operand(left)?;
    let rf = load_fingerprint_operand(right)?;
    let verdict = compare(&lf, &rf);
    match format {
        Format::Text => println!("{verdict}"),
        Format::Json => {
            let value = match &verdict {
                Verdict::NotDistinguished => json!({ "verdict": "not_distinguished" }),
                Verdict::Distinguished { invariant, left, right } => json!({
                    "verdict": "distinguished",
                    "invariant": invariant,
                    "left": left,
                    "right": right,
                }),
                Verdict::Incomparable { reason } => {
                    json!({ "verdict": "incomparable", "reason": reason })
                }
            };
            println!("{value}");
        }
    }
    Ok(verdict.exit_code())
}

fn run_trivext(file: &Path, out: Option<&Path>) -> Result<i32, FileError> {
    let (algebra, _) = load_algebra_file(file)?;
    let extension = TrivialExtension::new(algebra).map_err(|e| file_err(file, e))?;
    write_output(out, &extension.to_json())?;
    Ok(0)
}

fn run_verify(file: &Path, nmax: u32, format: Format) -> Result<i32, FileError> {
    let (algebra, form) = load_algebra_file(file)?;
    let mut report = Report::new();
    report.extend(verify_center(&algebra).map_err(|e| file_err(file, e))?);
    report.extend(verify_tn_structure(&algebra, nmax).map_err(|e| file_err(file, e))?);
    report.extend(verify_orthogonal_chains(&algebra, nmax).map_err(|e| file_err(file, e))?);
    if let Some(form) = &form {
        report.extend(
            verify_lambda_correspondence(&algebra, form, nmax).map_err(|e| file_err(file, e))?,
        );
        report.extend(verify_kulshammer_maps(&algebra, form, nmax).map_err(|e| file_err(file, e))?);
        // cross-check the chain the maps are built on
        for n in 0..=nmax {
            let direct = t_n(&algebra, n).map_err(|e| file_err(file, e))?;
            report.push(
                format!("T_{n} is contained in T_{}", n + 1),
                t_n(&algebra, n + 1).map_err(|e| file_err(file, e))?.contains(&direct),
                format!("dim {}", direct.dim()),
            );
        }
    }
    match format {
        Format::Text => print!("{report}"),
        Format::Json => println!("{}", serde_json::to_string_pretty(&report).expect("serializes")),
    }
    Ok(if report.passed() { 0 } else { 1 })
}
