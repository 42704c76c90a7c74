//! The `ubc` command-line front end.
//!
//! Exit codes: 0 pass, 1 conclusion violated with hypotheses met, 2
//! hypotheses not met, 64 usage or input errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde_json::json;

use crate::complex::SimplicialComplex;
use crate::corpus::{generate, standard_corpus, NamedComplexSpec};
use crate::error::{Error, Result};
use crate::homology::{betti_numbers, classify, Verdict};
use crate::io::{format_facet_list, read_facet_file, write_facet_file};
use crate::vectors::{h_from_f, short_h_from_links, FVector};
use crate::verifier::{verify, Outcome, Statement};

pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(
    name = "ubc",
    version,
    about = "Face numbers, homology and upper-bound checks for simplicial complexes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print f-, h- and short h-vectors, reduced Betti numbers and partial Euler characteristics.
    Invariants {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run every classifier (Eulerian, manifold, Cohen-Macaulay, ...).
    Classify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Verify one statement on one complex and print the report.
    Verify {
        /// ubc, ubc-corollary, lemma-hh, sphere-ubc, dehn-sommerville or lower-bounds
        statement: String,
        file: PathBuf,
    },
    /// Generate a named complex, e.g. `gen cyclic 4 9 -o c49.json`.
    Gen {
        #[arg(required = true, num_args = 1..)]
        spec: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Verify a statement on every `.json` file of a directory.
    Sweep { statement: String, dir: PathBuf },
    /// Write the built-in corpus into a directory.
    Corpus { dir: PathBuf },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Io {
        path: "<stdout>".into(),
        message: e.to_string(),
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Invariants { file, json } => {
            let named = read_facet_file(&file)?;
            invariants(&named.name, &named.complex, json, out)?;
            Ok(0)
        }
        Command::Classify { file, json } => {
            let named = read_facet_file(&file)?;
            let report = classify(&named.complex);
            if json {
                let doc = json!({ "name": named.name, "classification": report });
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&doc).expect("serializes")
                )
                .map_err(io_err)?;
            } else {
                writeln!(out, "name: {}", named.name).map_err(io_err)?;
                writeln!(out, "dim: {}", report.dim).map_err(io_err)?;
                writeln!(out, "pure: {}", report.pure).map_err(io_err)?;
                writeln!(out, "betti = {}", report.betti).map_err(io_err)?;
                let rows: [(&str, &Verdict); 9] = [
                    ("eulerian", &report.eulerian),
                    ("semi-eulerian", &report.semi_eulerian),
                    ("homology-sphere", &report.homology_sphere),
                    ("homology-manifold", &report.homology_manifold),
                    ("orientable", &report.orientable),
                    ("pseudomanifold", &report.pseudomanifold),
                    ("oriented-pseudomanifold", &report.oriented_pseudomanifold),
                    ("cohen-macaulay", &report.cohen_macaulay),
                    ("buchsbaum", &report.buchsbaum),
                ];
                for (label, v) in rows {
                    match &v.witness {
                        Some(w) if !v.holds() => writeln!(out, "{label}: {} ({w})", v.flag),
                        _ => writeln!(out, "{label}: {}", v.flag),
                    }
                    .map_err(io_err)?;
                }
            }
            Ok(0)
        }
        Command::Verify { statement, file } => {
            let statement: Statement = statement.parse()?;
            let named = read_facet_file(&file)?;
            let report = verify(statement, &named.complex)?.with_subject(named.name);
            writeln!(out, "{}", report.to_json()).map_err(io_err)?;
            Ok(report.overall.exit_code())
        }
        Command::Gen { spec, output } => {
            let spec = NamedComplexSpec::parse_tokens(&spec)?;
            let complex = generate(&spec)?;
            match output {
                Some(path) => write_facet_file(&path, &spec.name(), &complex)?,
                None => {
                    write!(out, "{}", format_facet_list(&spec.name(), &complex)).map_err(io_err)?
                }
            }
            Ok(0)
        }
        Command::Sweep { statement, dir } => {
            let statement: Statement = statement.parse()?;
            sweep(statement, &dir, out)
        }
        Command::Corpus { dir } => {
            std::fs::create_dir_all(&dir).map_err(|e| Error::Io {
                path: dir.display().to_string(),
                message: e.to_string(),
            })?;
            for (name, complex) in standard_corpus()? {
                let path = dir.join(format!("{}.json", file_stem(&name)));
                write_facet_file(&path, &name, &complex)?;
                writeln!(out, "{}", path.display()).map_err(io_err)?;
            }
            Ok(0)
        }
    }
}

fn file_stem(name: &str) -> String {
    let mut s: String = name
        .chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || c == '-' {
                c
            } else {
                '_'
            }
        })
        .collect();
    while s.ends_with('_') {
        s.pop();
    }
    s
}

fn tuple<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = xs.into_iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn invariants(
    name: &str,
    complex: &SimplicialComplex,
    as_json: bool,
    out: &mut dyn Write,
) -> Result<()> {
    let f = FVector::of(complex);
    let h = h_from_f(&f);
    let short_h = short_h_from_links(complex).ok();
    let betti = betti_numbers(complex);
    let chis: Vec<i64> = (0..=complex.dim())
        .map(|i| complex.chi_partial(i).expect("in range"))
        .collect();
    if as_json {
        let doc = json!({
            "name": name,
            "dim": complex.dim(),
            "pure": complex.is_pure(),
            "f": f,
            "h": h,
            "short_h": short_h,
            "betti": betti,
            "chi_partial": chis,
        });
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&doc).expect("serializes")
        )
        .map_err(io_err)?;
        return Ok(());
    }
    let mut lines = vec![
        format!("name: {name}"),
        format!("dim: {}", complex.dim()),
        format!("pure: {}", complex.is_pure()),
        format!("f = {f}"),
        format!("h = {h}"),
    ];
    lines.push(match &short_h {
        Some(sh) => format!("h~ = {sh}"),
        None => "h~ = n/a (complex is not pure)".into(),
    });
    lines.push(format!("betti = {betti}"));
    lines.push(format!("chi_i = {}", tuple(&chis)));
    for line in lines {
        writeln!(out, "{line}").map_err(io_err)?;
    }
    Ok(())
}

fn sweep(statement: Statement, dir: &Path, out: &mut dyn Write) -> Result<i32> {
    let listing = std::fs::read_dir(dir).map_err(|e| Error::Io {
        path: dir.display().to_string(),
        message: e.to_string(),
    })?;
    let mut files: Vec<PathBuf> = listing
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    let results: Vec<(String, std::result::Result<Outcome, String>)> = files
        .par_iter()
        .map(|path| {
            let label = path
                .file_name()
                .map(|n| n.to_string_lossy().into_owned())
                .unwrap_or_default();
            let outcome = read_facet_file(path)
                .and_then(|nc| verify(statement, &nc.complex))
                .map(|r| r.overall)
                .map_err(|e| e.to_string());
            (label, outcome)
        })
        .collect();
    let width = results
        .iter()
        .map(|(l, _)| l.len())
        .max()
        .unwrap_or(4)
        .max(4);
    let mut counts = [0usize; 4];
    writeln!(out, "{:width$}  outcome", "file").map_err(io_err)?;
    for (label, outcome) in &results {
        let text = match outcome {
            Ok(o) => {
                counts[o.exit_code() as usize] += 1;
                o.to_string()
            }
            Err(e) => {
                counts[3] += 1;
                format!("error: {e}")
            }
        };
        writeln!(out, "{label:width$}  {text}").map_err(io_err)?;
    }
    writeln!(
        out,
        "{statement}: {} file(s), {} pass, {} fail, {} hypotheses-not-met, {} error(s)",
        results.len(),
        counts[0],
        counts[1],
        counts[2],
        counts[3]
    )
    .map_err(io_err)?;
    Ok(if counts[1] > 0 { 1 } else { 0 })
}
