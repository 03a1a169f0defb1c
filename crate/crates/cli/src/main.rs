mod relfile;
mod report;

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use selfdual_core::catalog::Catalog;
use selfdual_core::classify::classify_selfdual;
use selfdual_core::freeoperad::{invariance_violation, koszul_complement, sigma};
use selfdual_core::reptheory::decompose;
use selfdual_core::varieties::{encode, IdentitySpec, PresetName};
use selfdual_core::{RelationSpace, Scalar};

use relfile::{format_rows, RelationFile};
use report::{json, DecompositionReport, Format, Report, SCHEMA_VERSION};

const EXIT_SELF_DUAL: u8 = 0;
const EXIT_NOT_SELF_DUAL: u8 = 1;
const EXIT_INVALID: u8 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "selfdual",
    version,
    about = "Self-duality of binary quadratic operads with one generator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether the operad with relations U is Koszul self-dual.
    Classify {
        #[command(flatten)]
        input: Input,
        /// Classify every file in DIR; reports go next to the inputs or into --out.
        #[arg(long, value_name = "DIR", conflicts_with_all = ["file", "preset"])]
        batch: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Print a canonical basis of U⊥ in the f-basis.
    Dual {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
    /// Isotypic decomposition of U.
    Decompose {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
    /// Encode degree-3 identities as the relation space they generate.
    Encode {
        /// An identity such as "(x1 x2)x3 - x1(x2 x3)"; repeatable.
        #[arg(long = "identity", short = 'i', value_name = "TEXT")]
        identities: Vec<String>,
        /// File with one identity per line.
        #[arg(value_name = "FILE")]
        file: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// List the built-in presets.
    Presets {
        #[command(flatten)]
        output: Output,
    },
    /// Replay the claim catalog and print a scorecard.
    VerifyPaper {
        #[command(flatten)]
        output: Output,
        /// Flip one entry of Σ before running (mutation check).
        #[arg(long, hide = true)]
        corrupt_sigma: bool,
    },
}

#[derive(Args, Debug)]
struct Input {
    /// Relation file: one row of 12 scalars per line, '#' comments.
    #[arg(value_name = "FILE")]
    file: Option<PathBuf>,
    /// Use a built-in preset instead of a file.
    #[arg(long, value_name = "NAME", conflicts_with = "file")]
    preset: Option<String>,
    /// Replace the rows by the S3-submodule they generate.
    #[arg(long)]
    closure: bool,
}

#[derive(Args, Debug)]
struct Output {
    /// Write to PATH instead of stdout (for --batch, a directory).
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INVALID } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            // Every error is an input, file or I/O problem.
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INVALID)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Classify {
            input,
            batch: Some(dir),
            output,
        } => cmd_batch(&dir, input.closure, &output),
        Command::Classify {
            input,
            batch: None,
            output,
        } => {
            let u = load(&input, true)?;
            let (text, code) = classify_text(&u, output.format)?;
            emit(&output, &text)?;
            Ok(code)
        }
        Command::Dual { input, output } => {
            let u = load(&input, false)?;
            let perp = koszul_complement(&u);
            let text = match output.format {
                Format::Text => format_rows(
                    &format!("U⊥ in the f-basis, dim {}", perp.dim()),
                    perp.basis(),
                ),
                Format::Structured => json(&RowsDoc::new(&perp)),
            };
            emit(&output, &text)?;
            Ok(0)
        }
        Command::Decompose { input, output } => {
            let u = load(&input, true)?;
            let d = decompose(&u).map_err(|e| anyhow!("{e}"))?;
            emit(
                &output,
                &DecompositionReport::new(&u, &d).render(output.format),
            )?;
            Ok(0)
        }
        Command::Encode {
            identities,
            file,
            output,
        } => {
            let mut texts = identities;
            if let Some(path) = file {
                let body = read(&path)?;
                texts.extend(
                    body.lines()
                        .map(str::trim)
                        .filter(|l| !l.is_empty() && !l.starts_with('#'))
                        .map(String::from),
                );
            }
            let specs = texts
                .iter()
                .map(|t| t.parse::<IdentitySpec>().map_err(|e| anyhow!("{t:?}: {e}")))
                .collect::<Result<Vec<_>>>()?;
            let u = encode(&specs).map_err(|e| anyhow!("{e}"))?;
            let text = match output.format {
                Format::Text => format_rows(
                    &format!("S3-closure of {} identities, dim {}", specs.len(), u.dim()),
                    u.basis(),
                ),
                Format::Structured => json(&RowsDoc::new(&u)),
            };
            emit(&output, &text)?;
            Ok(0)
        }
        Command::Presets { output } => {
            emit(&output, &presets_text(output.format))?;
            Ok(0)
        }
        Command::VerifyPaper {
            output,
            corrupt_sigma,
        } => {
            let catalog = if corrupt_sigma {
                let mut bad = sigma();
                bad[(0, 0)] = Scalar::from_int(-1);
                Catalog::with_sigma(bad)
            } else {
                Catalog::new()
            };
            let (text, ok) = verify_paper(&catalog, output.format);
            emit(&output, &text)?;
            Ok(if ok { 0 } else { 1 })
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn parse_space(text: &str, closure: bool, check: bool, origin: &str) -> Result<RelationSpace> {
    let file = RelationFile::parse(text).map_err(|e| anyhow!("{origin}: {e}"))?;
    let u = file.space();
    if closure {
        return Ok(u.s3_closure());
    }
    if !check {
        return Ok(u);
    }
    if let Some(g) = invariance_violation(&u) {
        return Err(anyhow!(
            "{origin}: not S3-invariant: fails under {g} (use --closure)"
        ));
    }
    Ok(u)
}

/// Reads `U`; `check` rejects subspaces that are not S3-invariant.
fn load(input: &Input, check: bool) -> Result<RelationSpace> {
    match (&input.preset, &input.file) {
        (Some(name), _) => {
            let p: PresetName = name.parse().map_err(|e| anyhow!("{e}"))?;
            Ok(p.space())
        }
        (None, Some(path)) => parse_space(
            &read(path)?,
            input.closure,
            check,
            &path.display().to_string(),
        ),
        (None, None) => Err(anyhow!(
            "give a relation file, --preset NAME or --batch DIR"
        )),
    }
}

fn classify_text(u: &RelationSpace, format: Format) -> Result<(String, u8)> {
    let cert = classify_selfdual(u).map_err(|e| anyhow!("classification failed: {e}"))?;
    let code = if cert.self_dual {
        EXIT_SELF_DUAL
    } else {
        EXIT_NOT_SELF_DUAL
    };
    Ok((Report::new(u, &cert).render(format), code))
}

/// Writes `contents` to `path` through a temporary file in the same directory.
fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .with_context(|| format!("cannot write into {}", dir.display()))?;
    tmp.write_all(contents.as_bytes())?;
    tmp.persist(path)
        .with_context(|| format!("cannot write {}", path.display()))?;
    Ok(())
}

fn emit(output: &Output, text: &str) -> Result<()> {
    match &output.out {
        Some(path) => write_atomic(path, text),
        None => {
            let mut stdout = std::io::stdout().lock();
            // A closed pipe is not an error worth reporting.
            let _ = stdout.write_all(text.as_bytes());
            let _ = stdout.flush();
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct RowsDoc {
    schema_version: u32,
    dim: usize,
    rows: Vec<Vec<String>>,
}

impl RowsDoc {
    fn new(u: &RelationSpace) -> Self {
        RowsDoc {
            schema_version: SCHEMA_VERSION,
            dim: u.dim(),
            rows: u
                .basis()
                .row_iter()
                .map(|r| r.iter().map(|x| x.to_string()).collect())
                .collect(),
        }
    }
}

// ---- batch ----------------------------------------------------------------

fn is_report(path: &Path) -> bool {
    let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("");
    name.ends_with(".report.json") || name.ends_with(".report.txt")
}

fn cmd_batch(dir: &Path, closure: bool, output: &Output) -> Result<u8> {
    let mut inputs: Vec<PathBuf> = fs::read_dir(dir)
        .with_context(|| format!("cannot read directory {}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && !is_report(p))
        .collect();
    inputs.sort();
    let out_dir = output.out.clone().unwrap_or_else(|| dir.to_path_buf());
    fs::create_dir_all(&out_dir).with_context(|| format!("cannot create {}", out_dir.display()))?;
    let ext = match output.format {
        Format::Text => "report.txt",
        Format::Structured => "report.json",
    };

    let next = AtomicUsize::new(0);
    let workers = std::thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(inputs.len().max(1));
    let mut results: Vec<(usize, Result<u8>)> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                scope.spawn(|| {
                    let mut done = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        let Some(path) = inputs.get(i) else { break };
                        let name = path
                            .file_name()
                            .map(|n| n.to_string_lossy().into_owned())
                            .unwrap_or_default();
                        let outcome = read(path)
                            .and_then(|text| parse_space(&text, closure, true, &name))
                            .and_then(|u| classify_text(&u, output.format))
                            .and_then(|(text, code)| {
                                write_atomic(&out_dir.join(format!("{name}.{ext}")), &text)?;
                                Ok(code)
                            });
                        done.push((i, outcome));
                    }
                    done
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().unwrap_or_default())
            .collect()
    });
    results.sort_by_key(|r| r.0);

    let mut worst = EXIT_SELF_DUAL;
    let mut stdout = std::io::stdout().lock();
    for (i, outcome) in results {
        let name = inputs[i].display();
        let (line, code) = match outcome {
            Ok(EXIT_SELF_DUAL) => (format!("{name}: self-dual"), EXIT_SELF_DUAL),
            Ok(code) => (format!("{name}: not self-dual"), code),
            Err(e) => (format!("{name}: error: {e:#}"), EXIT_INVALID),
        };
        let _ = writeln!(stdout, "{line}");
        worst = worst.max(code);
    }
    Ok(worst)
}

// ---- presets and scorecard ---------------------------------------------------

#[derive(Serialize)]
struct PresetDoc {
    name: &'static str,
    identities: Vec<&'static str>,
    repr_type: String,
    classes: Vec<&'static str>,
    plucker: String,
    segre: Option<String>,
    witness: [String; 2],
}

fn presets_text(format: Format) -> String {
    let docs: Vec<PresetDoc> = PresetName::ALL
        .iter()
        .map(|p| {
            let e = p.expected();
            PresetDoc {
                name: p.name(),
                identities: p.identities_text().to_vec(),
                repr_type: e.repr.to_string(),
                classes: e.classes.iter().map(|c| c.name()).collect(),
                plucker: e.plucker.to_string(),
                segre: e.segre.map(|z| z.to_string()),
                witness: [e.witness.a.to_string(), e.witness.b.to_string()],
            }
        })
        .collect();
    match format {
        Format::Structured => {
            json(&serde_json::json!({ "schema_version": SCHEMA_VERSION, "presets": docs }))
        }
        Format::Text => {
            let mut out = String::new();
            for d in docs {
                out.push_str(&format!("{}\n", d.name));
                for id in &d.identities {
                    out.push_str(&format!("  identity: {id}\n"));
                }
                out.push_str(&format!(
                    "  expected: {} [{}] plucker {} segre {} witness ({}, {})\n",
                    d.repr_type,
                    d.classes.join(", "),
                    d.plucker,
                    d.segre.as_deref().unwrap_or("-"),
                    d.witness[0],
                    d.witness[1]
                ));
            }
            out
        }
    }
}

#[derive(Serialize)]
struct ClaimDoc {
    id: &'static str,
    statement: &'static str,
    passed: bool,
    detail: String,
}

fn verify_paper(catalog: &Catalog, format: Format) -> (String, bool) {
    let start = Instant::now();
    let results = catalog.run();
    let elapsed = start.elapsed();
    let failing: Vec<&str> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    let ok = failing.is_empty();
    let text = match format {
        Format::Structured => {
            let claims: Vec<ClaimDoc> = results
                .iter()
                .map(|r| ClaimDoc {
                    id: r.id,
                    statement: r.statement,
                    passed: r.passed,
                    detail: r.detail.clone(),
                })
                .collect();
            json(&serde_json::json!({
                "schema_version": SCHEMA_VERSION,
                "claims": claims,
                "total": results.len(),
                "passed": results.len() - failing.len(),
                "failing": failing,
            }))
        }
        Format::Text => {
            let mut out = String::new();
            for r in &results {
                let mark = if r.passed { "PASS" } else { "FAIL" };
                out.push_str(&format!("{mark}  {:<24} {}\n", r.id, r.statement));
                if !r.passed {
                    out.push_str(&format!("      {}\n", r.detail));
                }
            }
            out.push_str(&format!(
                "{} claims, {} passed, {} failed ({:.1} s)\n",
                results.len(),
                results.len() - failing.len(),
                failing.len(),
                elapsed.as_secs_f64()
            ));
            if !ok {
                out.push_str(&format!("failing: {}\n", failing.join(", ")));
            }
            out
        }
    };
    (text, ok)
}
