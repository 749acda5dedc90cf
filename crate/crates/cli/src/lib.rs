//! `extremal` command-line tool.
//!
//! Exit codes: 0 means the property holds (or the command succeeded), 1 means
//! it fails, 2 means the input could not be evaluated.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use extremal_core::{
    certify_vd, delta, cascade_rep, extremality, find_shelling, make_complex, parse_facet_list,
    reduced_betti, reisner_cm_check_with_budget, render_facet_list, segment, segment_avoiding,
    shadow, validate_certificate, CmReport, DecompositionTree, Face, FaceFamily, Field,
    Obstruction, SimplicialComplex, Strategy, StrategyUsed, Verdict, DEFAULT_FACET_LIMIT,
    DEFAULT_FACE_BUDGET,
};

pub mod report;

use report::{AnalysisReport, BettiDoc, Certificate, DeltaDoc, ReisnerDoc, ShellDoc, VdDoc};

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "extremal", version, about = "Kruskal-Katona extremality, vertex decomposability and Reisner checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// f-vector, Kruskal-Katona bound, slack and extremality of a complex.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Certify vertex decomposability.
    Vd {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
        strategy: StrategyArg,
        /// Write the certificate here when the complex is decomposable.
        #[arg(long)]
        cert: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Check a certificate against a complex.
    Validate {
        file: PathBuf,
        cert: PathBuf,
    },
    /// The first N K-sets in squashed order, optionally avoiding one vertex.
    Gen {
        k: usize,
        n: u64,
        #[arg(long)]
        avoid: Option<u32>,
    },
    /// Size of the shadow of the first N K-sets.
    Delta {
        k: u64,
        n: u64,
        #[arg(long)]
        json: bool,
    },
    /// All (k-1)-subsets of the faces in a file of k-sets.
    Shadow { file: PathBuf },
    /// Reduced Betti numbers.
    Betti {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = FieldArg::Q)]
        field: FieldArg,
        #[arg(long)]
        json: bool,
    },
    /// Reisner's Cohen-Macaulay criterion. Checks both fields unless --field is given.
    Reisner {
        file: PathBuf,
        #[arg(long, value_enum)]
        field: Option<FieldArg>,
        #[arg(long, default_value_t = DEFAULT_FACE_BUDGET)]
        budget: usize,
        #[arg(long)]
        json: bool,
    },
    /// Brute-force shelling search.
    Shell {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_FACET_LIMIT)]
        facet_limit: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StrategyArg {
    Auto,
    Extremal,
    Exhaustive,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Auto => Strategy::Auto,
            StrategyArg::Extremal => Strategy::Extremal,
            StrategyArg::Exhaustive => Strategy::Exhaustive,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FieldArg {
    Gf2,
    Q,
}

impl From<FieldArg> for Field {
    fn from(f: FieldArg) -> Self {
        match f {
            FieldArg::Gf2 => Field::Gf2,
            FieldArg::Q => Field::Rationals,
        }
    }
}

/// Error that ends a command with exit code 2.
#[derive(Debug)]
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type CmdResult = Result<i32, Failure>;

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Runs the tool on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_HOLDS
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_ERROR
                }
            };
            return code;
        }
    };
    let mut io = Io { out, err };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(io.err, "error: {msg}");
            EXIT_ERROR
        }
    }
}

fn dispatch(cmd: Command, io: &mut Io<'_>) -> CmdResult {
    match cmd {
        Command::Analyze { file, json } => cmd_analyze(&file, json, io),
        Command::Vd {
            file,
            strategy,
            cert,
            json,
        } => cmd_vd(&file, strategy.into(), cert.as_deref(), json, io),
        Command::Validate { file, cert } => cmd_validate(&file, &cert, io),
        Command::Gen { k, n, avoid } => cmd_gen(k, n, avoid, io),
        Command::Delta { k, n, json } => cmd_delta(k, n, json, io),
        Command::Shadow { file } => cmd_shadow(&file, io),
        Command::Betti { file, field, json } => cmd_betti(&file, field.into(), json, io),
        Command::Reisner {
            file,
            field,
            budget,
            json,
        } => {
            let fields = match field {
                Some(f) => vec![f.into()],
                None => Field::ALL.to_vec(),
            };
            cmd_reisner(&file, &fields, budget, json, io)
        }
        Command::Shell {
            file,
            facet_limit,
            json,
        } => cmd_shell(&file, facet_limit, json, io),
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
    }
}

fn read_faces(path: &Path) -> Result<Vec<Face>, Failure> {
    let text = read_input(path)?;
    parse_facet_list(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn read_complex(path: &Path) -> Result<SimplicialComplex, Failure> {
    let faces = read_faces(path)?;
    let c = make_complex(&faces)?;
    if c.is_empty() {
        return Err(Failure(format!("{}: no facets", path.display())));
    }
    Ok(c)
}

fn emit_json<T: Serialize>(io: &mut Io<'_>, doc: &T) -> Result<(), Failure> {
    let s = serde_json::to_string_pretty(doc)?;
    writeln!(io.out, "{s}")?;
    Ok(())
}

fn fmt_face(f: &Face) -> String {
    f.to_string()
}

fn cmd_analyze(path: &Path, json: bool, io: &mut Io<'_>) -> CmdResult {
    let c = read_complex(path)?;
    let f = c.f_vector()?;
    let ext = if c.is_pure() {
        Some(extremality(&c)?)
    } else {
        writeln!(io.err, "warning: complex is not pure; extremality fields are omitted")?;
        None
    };
    let report = AnalysisReport {
        facet_count: c.facet_count(),
        vertex_count: c.vertex_count(),
        dimension: c.dim().unwrap_or(-1),
        f_vector: f.counts().to_vec(),
        is_pure: c.is_pure(),
        kk_bound: ext.map(|e| e.bound),
        slack: ext.map(|e| e.slack()),
        is_extremal: ext.map(|e| e.is_extremal()),
    };
    if json {
        emit_json(io, &report)?;
    } else {
        let opt = |x: Option<String>| x.unwrap_or_else(|| "n/a".into());
        writeln!(io.out, "facets: {}", report.facet_count)?;
        writeln!(io.out, "vertices: {}", report.vertex_count)?;
        writeln!(io.out, "dimension: {}", report.dimension)?;
        writeln!(io.out, "f-vector: {f}")?;
        writeln!(io.out, "pure: {}", report.is_pure)?;
        writeln!(io.out, "kk-bound: {}", opt(report.kk_bound.map(|x| x.to_string())))?;
        writeln!(io.out, "slack: {}", opt(report.slack.map(|x| x.to_string())))?;
        writeln!(io.out, "extremal: {}", opt(report.is_extremal.map(|x| x.to_string())))?;
    }
    Ok(EXIT_HOLDS)
}

fn render_tree(t: &DecompositionTree, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match t {
        DecompositionTree::Empty => out.push_str(&format!("{pad}empty\n")),
        DecompositionTree::EmptyFace => out.push_str(&format!("{pad}{{∅}}\n")),
        DecompositionTree::Point { vertex } => out.push_str(&format!("{pad}point {vertex}\n")),
        DecompositionTree::Split {
            vertex,
            link,
            deletion,
        } => {
            out.push_str(&format!("{pad}split {vertex}\n"));
            out.push_str(&format!("{pad}  link:\n"));
            render_tree(link, depth + 2, out);
            out.push_str(&format!("{pad}  deletion:\n"));
            render_tree(deletion, depth + 2, out);
        }
    }
}

fn describe_obstruction(ob: &Obstruction) -> String {
    let mut s = String::new();
    if ob.steps.is_empty() {
        s.push_str("at root");
    } else {
        s.push_str("at ");
        let steps: Vec<String> = ob.steps.iter().map(|p| p.to_string()).collect();
        s.push_str(&steps.join(" / "));
    }
    let facets: Vec<String> = ob.facets.iter().map(fmt_face).collect();
    s.push_str(&format!(" (facets {})", facets.join(" ")));
    match ob.cause {
        extremal_core::Cause::NonPureLink { vertex } => {
            s.push_str(&format!(": link of {vertex} is not pure"))
        }
        extremal_core::Cause::NonPureDeletion { vertex } => {
            s.push_str(&format!(": deletion of {vertex} is not pure"))
        }
    }
    s
}

fn cmd_vd(
    path: &Path,
    strategy: Strategy,
    cert_path: Option<&Path>,
    json: bool,
    io: &mut Io<'_>,
) -> CmdResult {
    let c = read_complex(path)?;
    let report = certify_vd(&c, strategy)?;
    let strategy_used = report.strategy_used;
    match report.verdict {
        Verdict::Decomposable(tree) => {
            let cert = Certificate::new(strategy_used, c.facets(), tree);
            if let Some(p) = cert_path {
                let s = serde_json::to_string_pretty(&cert)?;
                fs::write(p, format!("{s}\n"))
                    .map_err(|e| Failure(format!("{}: {e}", p.display())))?;
            }
            if json {
                emit_json(
                    io,
                    &VdDoc {
                        decomposable: true,
                        strategy: strategy_used,
                        certificate: Some(cert),
                        obstruction: None,
                    },
                )?;
            } else {
                writeln!(
                    io.out,
                    "vertex decomposable (strategy {}, {} splits, depth {})",
                    strategy_name(strategy_used),
                    cert.tree.split_count(),
                    cert.tree.depth()
                )?;
                let mut s = String::new();
                render_tree(&cert.tree, 0, &mut s);
                write!(io.out, "{s}")?;
            }
            Ok(EXIT_HOLDS)
        }
        Verdict::NotDecomposable(ob) => {
            if json {
                emit_json(
                    io,
                    &VdDoc {
                        decomposable: false,
                        strategy: strategy_used,
                        certificate: None,
                        obstruction: Some(ob),
                    },
                )?;
            } else {
                writeln!(io.out, "not vertex decomposable")?;
                writeln!(io.out, "obstruction {}", describe_obstruction(&ob))?;
            }
            Ok(EXIT_FAILS)
        }
    }
}

fn strategy_name(s: StrategyUsed) -> &'static str {
    match s {
        StrategyUsed::Extremal => "extremal",
        StrategyUsed::Exhaustive => "exhaustive",
    }
}

fn cmd_validate(path: &Path, cert_path: &Path, io: &mut Io<'_>) -> CmdResult {
    let c = read_complex(path)?;
    let text = read_input(cert_path)?;
    let cert: Certificate = serde_json::from_str(&text)
        .map_err(|e| Failure(format!("{}: {e}", cert_path.display())))?;
    if cert.format != report::CERTIFICATE_FORMAT {
        return Err(Failure(format!(
            "unsupported certificate format {:?}",
            cert.format
        )));
    }
    let claimed = make_complex(&cert.facets)?;
    if claimed != c {
        writeln!(io.out, "invalid: certificate was issued for a different complex")?;
        return Ok(EXIT_FAILS);
    }
    match validate_certificate(&c, &cert.tree) {
        Ok(()) => {
            writeln!(io.out, "valid")?;
            Ok(EXIT_HOLDS)
        }
        Err(defect) => {
            writeln!(io.out, "invalid: {defect}")?;
            Ok(EXIT_FAILS)
        }
    }
}

fn cmd_gen(k: usize, n: u64, avoid: Option<u32>, io: &mut Io<'_>) -> CmdResult {
    let fam = match avoid {
        Some(i) => segment_avoiding(k, n, i)?,
        None => segment(k, n)?,
    };
    write!(io.out, "{}", render_facet_list(fam.iter()))?;
    Ok(EXIT_HOLDS)
}

fn cmd_delta(k: u64, n: u64, json: bool, io: &mut Io<'_>) -> CmdResult {
    let value = delta(n, k)?;
    if json {
        let cascade = if n == 0 {
            Vec::new()
        } else {
            cascade_rep(n, k)?.terms().to_vec()
        };
        emit_json(
            io,
            &DeltaDoc {
                k,
                n,
                cascade,
                delta: value,
            },
        )?;
    } else {
        writeln!(io.out, "{value}")?;
    }
    Ok(EXIT_HOLDS)
}

fn cmd_shadow(path: &Path, io: &mut Io<'_>) -> CmdResult {
    let faces = read_faces(path)?;
    let Some(fam) = FaceFamily::try_from_faces(faces)? else {
        return Ok(EXIT_HOLDS);
    };
    let sh = shadow(&fam)?;
    write!(io.out, "{}", render_facet_list(sh.iter()))?;
    Ok(EXIT_HOLDS)
}

fn cmd_betti(path: &Path, field: Field, json: bool, io: &mut Io<'_>) -> CmdResult {
    let c = read_complex(path)?;
    let b = reduced_betti(&c, field)?;
    if json {
        emit_json(
            io,
            &BettiDoc {
                field,
                reduced_betti: b.as_slice().to_vec(),
            },
        )?;
    } else {
        writeln!(io.out, "field: {}", field.name())?;
        for (i, x) in b.iter() {
            writeln!(io.out, "dim {i}: {x}")?;
        }
    }
    Ok(EXIT_HOLDS)
}

fn cmd_reisner(
    path: &Path,
    fields: &[Field],
    budget: usize,
    json: bool,
    io: &mut Io<'_>,
) -> CmdResult {
    let c = read_complex(path)?;
    let reports: Vec<CmReport> = fields
        .iter()
        .map(|&f| reisner_cm_check_with_budget(&c, f, budget))
        .collect::<Result<_, _>>()?;
    let all_cm = reports.iter().all(|r| r.is_cm);
    if json {
        emit_json(
            io,
            &ReisnerDoc {
                fields_checked: fields.to_vec(),
                is_cm: all_cm,
                note: report::REISNER_NOTE,
                reports,
            },
        )?;
    } else {
        for r in &reports {
            let verdict = if r.is_cm {
                "Cohen-Macaulay"
            } else {
                "not Cohen-Macaulay"
            };
            writeln!(
                io.out,
                "{}: {verdict} ({} faces checked)",
                r.field.name(),
                r.faces_checked
            )?;
            for v in &r.violations {
                writeln!(
                    io.out,
                    "  violation: face {} index {} rank {}",
                    fmt_face(&v.face),
                    v.index,
                    v.rank
                )?;
            }
        }
        writeln!(io.out, "note: {}", report::REISNER_NOTE)?;
    }
    Ok(if all_cm { EXIT_HOLDS } else { EXIT_FAILS })
}

fn cmd_shell(path: &Path, facet_limit: usize, json: bool, io: &mut Io<'_>) -> CmdResult {
    let c = read_complex(path)?;
    let order = find_shelling(&c, facet_limit)?;
    if json {
        emit_json(
            io,
            &ShellDoc {
                shellable: order.is_some(),
                order: order.clone(),
            },
        )?;
    } else {
        match &order {
            Some(o) => {
                writeln!(io.out, "shelling:")?;
                write!(io.out, "{}", render_facet_list(o))?;
            }
            None => writeln!(io.out, "no shelling exists")?,
        }
    }
    Ok(if order.is_some() { EXIT_HOLDS } else { EXIT_FAILS })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("extremal").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn delta_text_and_json() {
        assert_eq!(call(&["delta", "4", "2"]), (EXIT_HOLDS, "7\n".into(), String::new()));
        let (code, out, _) = call(&["delta", "2", "10", "--json"]);
        assert_eq!(code, EXIT_HOLDS);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["delta"], 5);
        assert_eq!(v["cascade"], serde_json::json!([[5, 2]]));
    }

    #[test]
    fn gen_rejects_zero_size() {
        let (code, out, err) = call(&["gen", "0", "3"]);
        assert_eq!(code, EXIT_ERROR);
        assert!(out.is_empty());
        assert!(err.starts_with("error: "));
    }

    #[test]
    fn missing_file_is_an_error() {
        let (code, _, err) = call(&["analyze", "/nonexistent/facets.txt"]);
        assert_eq!(code, EXIT_ERROR);
        assert!(err.contains("/nonexistent/facets.txt"));
    }

    #[test]
    fn bad_arguments_exit_two() {
        assert_eq!(call(&["vd", "x", "--strategy", "greedy"]).0, EXIT_ERROR);
        assert_eq!(call(&["gen", "2", "-1"]).0, EXIT_ERROR);
        assert_eq!(call(&["--help"]).0, EXIT_HOLDS);
    }
}
