//! Command-line interface.
//!
//! Exit codes: 0 success, 1 `iso` on non-isomorphic inputs, 2 bad flags,
//! 3 closed form requested for a degenerate pair, 4 order cap exceeded,
//! 5 unreadable or invalid graph file.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use serde_json::json;

use crate::bounds::{self, DegreePair};
use crate::constructions;
use crate::mixedgraph::{self, repeat_multiset, GraphError, MgfError, MixedGraph};
use crate::search::{self, DiameterMode, SearchError, SearchSpec};
use crate::spectral;

/// Name of the environment variable overriding the search order cap.
pub const CAP_ENV: &str = "MOORE_SEARCH_CAP";

#[derive(Debug, Parser)]
#[command(
    name = "mixed-moore",
    version,
    about = "Moore bounds and extremal mixed graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Moore bound M(r, z, k), optionally improved.
    Bound {
        #[arg(short = 'r')]
        r: u32,
        #[arg(short = 'z')]
        z: u32,
        #[arg(short = 'k')]
        k: u32,
        #[arg(long)]
        improved: bool,
        /// Also evaluate the floating-point closed form.
        #[arg(long)]
        closed_form: bool,
        #[arg(long)]
        json: bool,
    },
    /// Table of Moore bounds for 1 <= d <= dmax, 0 <= z <= d, 1 <= k <= kmax.
    Table {
        #[arg(long, default_value_t = 5)]
        dmax: u32,
        #[arg(long, default_value_t = 5)]
        kmax: u32,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Enumerate totally (r, z)-regular mixed graphs of order n and diameter k.
    Search {
        #[arg(short = 'r')]
        r: u32,
        #[arg(short = 'z')]
        z: u32,
        #[arg(short = 'k')]
        k: u32,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
        mode: ModeArg,
        #[arg(long)]
        count_only: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Directory for the MGF files and run_log.jsonl.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Regularity, diameter and repeat report for an MGF file.
    Verify {
        file: PathBuf,
        /// Radius for the repeat count; defaults to the diameter.
        #[arg(short = 'k')]
        k: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Characteristic polynomial coefficients, leading first.
    Spectrum {
        file: PathBuf,
        #[arg(long)]
        factored: bool,
    },
    /// Exit 0 if the two graphs are isomorphic, 1 otherwise.
    Iso { a: PathBuf, b: PathBuf },
    /// Reverse every arc.
    Converse {
        file: PathBuf,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Emit a named construction as MGF.
    Construct {
        #[arg(value_enum)]
        name: Construction,
        n: usize,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFormat {
    Text,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    AtMost,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Construction {
    Cycle,
    DirectedCycle,
    LineDigraphCycle,
    CayleyDihedral,
}

struct Failure {
    code: i32,
    msg: String,
}

impl Failure {
    fn new(code: i32, msg: impl Into<String>) -> Self {
        Failure {
            code,
            msg: msg.into(),
        }
    }
}

impl From<MgfError> for Failure {
    fn from(e: MgfError) -> Self {
        Failure::new(5, e.to_string())
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        let code = match e {
            GraphError::SizeLimitExceeded { .. } => 4,
            _ => 5,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::new(5, e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

/// Run the CLI on `args` (program name first), writing to `out` and `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{text}");
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.msg);
            f.code
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Bound {
            r,
            z,
            k,
            improved,
            closed_form,
            json,
        } => cmd_bound(r, z, k, improved, closed_form, json, out),
        Command::Table { dmax, kmax, format } => cmd_table(dmax, kmax, format, out),
        Command::Search {
            r,
            z,
            k,
            n,
            mode,
            count_only,
            jobs,
            out: dir,
            json,
        } => {
            let mode = match mode {
                ModeArg::Exact => DiameterMode::Exact,
                ModeArg::AtMost => DiameterMode::AtMost,
            };
            let spec = SearchSpec::new(pair(r, z)?, k, n)
                .mode(mode)
                .count_only(count_only)
                .jobs(jobs.max(1))
                .cap(cap_from_env()?);
            cmd_search(&spec, dir.as_deref(), json, out, err)
        }
        Command::Verify { file, k, json } => cmd_verify(&file, k, json, out),
        Command::Spectrum { file, factored } => {
            let g = mixedgraph::read_mgf(&file, true)?;
            let p = spectral::char_poly(&g);
            writeln!(out, "{}", p.to_coefficient_line())?;
            if factored {
                match p.factored() {
                    Some(f) => writeln!(out, "{f}")?,
                    None => writeln!(out, "{p}")?,
                }
            }
            Ok(0)
        }
        Command::Iso { a, b } => {
            let g = mixedgraph::read_mgf(&a, true)?;
            let h = mixedgraph::read_mgf(&b, true)?;
            if mixedgraph::is_isomorphic(&g, &h)? {
                writeln!(out, "isomorphic")?;
                Ok(0)
            } else {
                writeln!(out, "not isomorphic")?;
                Ok(1)
            }
        }
        Command::Converse { file, output } => {
            let g = mixedgraph::read_mgf(&file, true)?;
            emit(&g.converse(), &[], output.as_deref(), out)
        }
        Command::Construct { name, n, output } => {
            let (g, label) = match name {
                Construction::Cycle if n >= 3 => (constructions::cycle(n, false), "cycle"),
                Construction::DirectedCycle if n >= 2 => {
                    (constructions::cycle(n, true), "directed-cycle")
                }
                Construction::LineDigraphCycle if n >= 3 => (
                    constructions::line_digraph_of_cycle_digons(n),
                    "line-digraph-cycle",
                ),
                Construction::CayleyDihedral if n >= 3 => {
                    (constructions::cayley_dihedral(n), "cayley-dihedral")
                }
                _ => {
                    return Err(Failure::new(
                        2,
                        format!("n = {n} is too small for this construction"),
                    ))
                }
            };
            emit(&g, &[format!("{label} {n}")], output.as_deref(), out)
        }
    }
}

fn pair(r: u32, z: u32) -> Result<DegreePair, Failure> {
    DegreePair::new(r, z).map_err(|e| Failure::new(2, e.to_string()))
}

fn cap_from_env() -> Result<usize, Failure> {
    match std::env::var(CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::new(2, format!("{CAP_ENV} must be an integer, got {v:?}"))),
        Err(_) => Ok(search::DEFAULT_ORDER_CAP),
    }
}

fn emit(g: &MixedGraph, comments: &[String], path: Option<&Path>, out: &mut dyn Write) -> Outcome {
    match path {
        Some(p) => mixedgraph::write_mgf(p, g, comments)?,
        None => write!(out, "{}", mixedgraph::to_mgf_with_comments(g, comments))?,
    }
    Ok(0)
}

fn cmd_bound(
    r: u32,
    z: u32,
    k: u32,
    improved: bool,
    closed_form: bool,
    json: bool,
    out: &mut dyn Write,
) -> Outcome {
    let dp = pair(r, z)?;
    let report = bounds::improved_bound(dp, k);
    let cf = if closed_form {
        Some(bounds::moore_bound_closed_form(dp, k).map_err(|e| Failure::new(3, e.to_string()))?)
    } else {
        None
    };
    if json {
        let mut v = json!({ "r": r, "z": z, "k": k, "moore": report.moore.to_string() });
        if improved {
            v["improved"] = json!(report.improved.to_string());
            v["rule_trace"] = json!(report.rule_trace);
            v["parity_applied"] = json!(report.parity_applied);
        }
        if let Some(x) = cf {
            v["closed_form"] = json!(x);
        }
        writeln!(out, "{v}")?;
        return Ok(0);
    }
    let mut line = if improved {
        report.to_string()
    } else {
        format!("M={}", report.moore)
    };
    if let Some(x) = cf {
        line.push_str(&format!(" closed_form={x:.6}"));
    }
    writeln!(out, "{line}")?;
    Ok(0)
}

fn cmd_table(dmax: u32, kmax: u32, format: TableFormat, out: &mut dyn Write) -> Outcome {
    if dmax == 0 || kmax == 0 {
        return Err(Failure::new(2, "--dmax and --kmax must be positive"));
    }
    let table = bounds::moore_table(dmax, kmax);
    match format {
        TableFormat::Text => write!(out, "{}", table.to_text())?,
        TableFormat::Csv => write!(out, "{}", table.to_csv())?,
    }
    Ok(0)
}

fn cmd_search(
    spec: &SearchSpec,
    dir: Option<&Path>,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let res = search::enumerate(spec).map_err(|e| match e {
        SearchError::CapExceeded { .. } => Failure::new(4, e.to_string()),
        other => Failure::new(2, other.to_string()),
    })?;
    let mut written = Vec::new();
    if let Some(dir) = dir {
        std::fs::create_dir_all(dir)?;
        for (i, (g, form)) in res.graphs.iter().zip(&res.classes).enumerate() {
            let path = dir.join(res.file_name(i));
            let comments = vec![
                format!("class {i} of {}", res.class_count()),
                format!("canonical {}", form.hex()),
            ];
            mixedgraph::write_mgf(&path, g, &comments)?;
            written.push(path);
        }
        std::fs::write(dir.join("run_log.jsonl"), res.log_jsonl())?;
    }
    if json {
        let v = json!({
            "classes": res.class_count(),
            "skeletons": res.skeletons,
            "nodes_explored": res.nodes_explored,
            "pruned": res.pruned,
            "obstruction": res.obstruction,
            "canonical": res.classes.iter().map(|c| c.hex()).collect::<Vec<_>>(),
        });
        writeln!(out, "{v}")?;
    } else {
        writeln!(out, "classes={}", res.class_count())?;
        if let Some(reason) = &res.obstruction {
            writeln!(out, "obstruction: {reason}")?;
        }
        writeln!(
            out,
            "skeletons={} nodes={} pruned: degree={} moore_ball={} orbit={} diameter={} isomorph={}",
            res.skeletons,
            res.nodes_explored,
            res.pruned.degree,
            res.pruned.moore_ball,
            res.pruned.orbit,
            res.pruned.diameter,
            res.pruned.isomorph
        )?;
        for path in &written {
            writeln!(out, "wrote {}", path.display())?;
        }
    }
    writeln!(err, "wall time {:.3}s", res.wall_time.as_secs_f64())?;
    Ok(0)
}

fn cmd_verify(file: &Path, k: Option<u32>, json: bool, out: &mut dyn Write) -> Outcome {
    let g = mixedgraph::read_mgf(file, true)?;
    let diameter = g.diameter();
    let k = k.or(diameter).unwrap_or(0);
    let reps: Vec<BigUint> = (0..g.order())
        .map(|u| repeat_multiset(&g, u, k).total)
        .collect();
    let min_rep = reps.iter().min().cloned().unwrap_or_default();
    let regular = g.total_regularity();
    let slack = regular.map(|dp| {
        BigInt::from(bounds::moore_bound(dp, k))
            - BigInt::from(min_rep.clone())
            - BigInt::from(g.order())
    });
    if json {
        let v = json!({
            "order": g.order(),
            "regular": regular.map(|dp| [dp.r(), dp.z()]),
            "diameter": diameter,
            "k": k,
            "repeats": reps.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            "min_rep": min_rep.to_string(),
            "slack": slack.as_ref().map(|s| s.to_string()),
        });
        writeln!(out, "{v}")?;
        return Ok(0);
    }
    writeln!(
        out,
        "regular={} diameter={} min_rep={} slack={}",
        regular.map_or("none".to_string(), |dp| dp.to_string()),
        diameter.map_or("inf".to_string(), |d| d.to_string()),
        min_rep,
        slack.map_or("n/a".to_string(), |s| s.to_string()),
    )?;
    for (u, r) in reps.iter().enumerate() {
        writeln!(out, "vertex {u} rep={r}")?;
    }
    Ok(0)
}
