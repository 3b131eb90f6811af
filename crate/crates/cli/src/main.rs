//! `zf`: zero forcing numbers, family generators and nullity bounds over
//! graph6 streams.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use zfcore::families::Generator;
use zfcore::graph::format_set;
use zfcore::graph6::read_records;
use zfcore::recognizer::{recognize_z3, Certificate};
use zfcore::spantree::{degree_census, spanning_tree};
use zfcore::spectral::{
    bounds_report, find_complete_minor, BoundsOptions, BoundsReport, MinorModel, Upper,
    DEFAULT_TOL, MINOR_SEARCH_MAX_ORDER,
};
use zfcore::{closure, edge_connectivity, write_graph6, Graph, ZeroForcingSolver};

#[derive(Parser)]
#[command(name = "zf", version, about = "Zero forcing and maximum nullity tools")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Derived coloring of a starting set
    Closure {
        #[command(flatten)]
        io: IoArgs,
        /// Starting black vertices, comma separated
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
    },
    /// Exact zero forcing number with a minimum witness
    Zf {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Lower and upper bounds on the maximum nullity
    Bounds {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Print the graphs named by a generator spec as graph6
    Gen {
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        /// e.g. `heawood`, `prism 5 sigma=1,2`, `family --order 10`
        #[arg(required = true, trailing_var_arg = true, allow_hyphen_values = true)]
        spec: Vec<String>,
    },
    /// Decide whether a connected cubic graph has zero forcing number 3
    Recognize {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Layered spanning tree and its degree census
    Spantree {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long, default_value_t = 0)]
        root: usize,
    },
    /// One TSV row of invariants per graph
    Census {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
}

#[derive(Args)]
struct IoArgs {
    /// graph6 file to read; stdin when absent
    #[arg(long = "in", conflicts_with = "gen")]
    input: Option<PathBuf>,
    /// Generator spec to use as input instead of a stream
    #[arg(long)]
    gen: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Graph6,
    Tsv,
}

/// One input graph with its source line (generator output counts from 1).
struct Input {
    line: usize,
    graph: Result<Graph, String>,
}

/// Output for one input: lines for stdout, a message for stderr.
struct Outcome {
    out: Option<String>,
    err: Option<String>,
}

impl Outcome {
    fn ok(out: String) -> Self {
        Outcome {
            out: Some(out),
            err: None,
        }
    }

    fn fail(err: String) -> Self {
        Outcome {
            out: None,
            err: Some(err),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("zf: {e}");
            ExitCode::from(e.code)
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn io_failure(e: io::Error) -> Failure {
    Failure {
        code: 1,
        message: e.to_string(),
    }
}

fn generate(spec: &str) -> Result<Vec<Graph>, Failure> {
    let gen: Generator = spec.parse().map_err(|e| usage(format!("generator: {e}")))?;
    gen.graphs().map_err(|e| Failure {
        code: 1,
        message: e.to_string(),
    })
}

fn read_inputs(io: &IoArgs) -> Result<Vec<Input>, Failure> {
    if let Some(spec) = &io.gen {
        return Ok(generate(spec)?
            .into_iter()
            .enumerate()
            .map(|(i, g)| Input {
                line: i + 1,
                graph: Ok(g),
            })
            .collect());
    }
    let reader: Box<dyn BufRead> = match &io.input {
        Some(path) => Box::new(BufReader::new(File::open(path).map_err(|e| Failure {
            code: 1,
            message: format!("{}: {e}", path.display()),
        })?)),
        None => Box::new(io::stdin().lock()),
    };
    Ok(read_records(reader)
        .map_err(io_failure)?
        .into_iter()
        .map(|r| Input {
            line: r.line,
            graph: r.graph.map_err(|e| e.to_string()),
        })
        .collect())
}

fn writer(out: &Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path).map_err(io_failure)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn g6(g: &Graph) -> String {
    write_graph6(g).unwrap_or_else(|_| "-".into())
}

/// Runs `f` over every input in parallel and writes the results in input
/// order. Returns whether every record succeeded.
fn batch<F>(io: &IoArgs, header: Option<&str>, f: F) -> Result<bool, Failure>
where
    F: Fn(&Graph) -> Outcome + Sync,
{
    let inputs = read_inputs(io)?;
    let outcomes: Vec<Outcome> = inputs
        .par_iter()
        .map(|input| match &input.graph {
            Ok(g) => f(g),
            Err(e) => Outcome::fail(e.clone()),
        })
        .collect();
    let mut w = writer(&io.out)?;
    if let Some(h) = header {
        writeln!(w, "{h}").map_err(io_failure)?;
    }
    let mut all_ok = true;
    for (input, outcome) in inputs.iter().zip(outcomes) {
        if let Some(out) = outcome.out {
            writeln!(w, "{out}").map_err(io_failure)?;
        }
        if let Some(err) = outcome.err {
            all_ok = false;
            eprintln!("line {}: {err}", input.line);
        }
    }
    w.flush().map_err(io_failure)?;
    Ok(all_ok)
}

fn reject_graph6(io: &IoArgs, command: &str) -> Result<(), Failure> {
    if io.format == Format::Graph6 {
        return Err(usage(format!(
            "`{command}` has no graph6 output; use text or tsv"
        )));
    }
    Ok(())
}

fn run(command: Command) -> Result<bool, Failure> {
    match command {
        Command::Closure { io, set } => {
            reject_graph6(&io, "closure")?;
            let format = io.format;
            batch(&io, None, |g| {
                let mask = set
                    .iter()
                    .try_fold(0u64, |m, &v| (v < 64).then(|| m | 1 << v));
                let Some(mask) = mask else {
                    return Outcome::fail("set names a vertex beyond 63".into());
                };
                match closure(g, mask) {
                    Ok(c) => {
                        let complete = c.black == g.vertex_mask();
                        Outcome::ok(match format {
                            Format::Tsv => format!(
                                "{}\t{}\t{}\t{}",
                                g6(g),
                                format_set(c.black),
                                c.trace.len(),
                                complete
                            ),
                            _ => format!(
                                "{}  black={}  forces={}  zfs={}",
                                g6(g),
                                format_set(c.black),
                                c.trace.len(),
                                if complete { "yes" } else { "no" }
                            ),
                        })
                    }
                    Err(e) => Outcome::fail(e.to_string()),
                }
            })
        }
        Command::Zf { io, budget } => {
            reject_graph6(&io, "zf")?;
            let format = io.format;
            batch(&io, None, |g| {
                match ZeroForcingSolver::new().budget(budget).solve(g) {
                    Ok(zf) => Outcome::ok(match format {
                        Format::Tsv => format!("{}\t{}\t{}", g6(g), zf.z, format_set(zf.witness)),
                        _ => format!("{}  Z={}  witness={}", g6(g), zf.z, format_set(zf.witness)),
                    }),
                    Err(e) => Outcome::fail(format!("{}: {e}", g6(g))),
                }
            })
        }
        Command::Bounds { io, budget, tol } => {
            reject_graph6(&io, "bounds")?;
            check_tol(tol)?;
            let format = io.format;
            let opts = BoundsOptions { tol, budget };
            let header = (format == Format::Tsv).then_some("graph6\tn\tL\tsources\tU\tverdict");
            batch(&io, header, |g| match report(g, opts) {
                Ok(r) => {
                    let out = match format {
                        Format::Tsv => {
                            let sources: Vec<String> =
                                r.lower_sources.iter().map(|s| s.to_string()).collect();
                            format!(
                                "{}\t{}\t{}\t{}\t{}\t{}",
                                g6(g),
                                r.order,
                                r.lower,
                                sources.join(","),
                                upper_text(&r.upper),
                                r.verdict
                            )
                        }
                        // blank line between blocks
                        _ => format!("{}\n", r.to_text(g)),
                    };
                    exhausted(out, &r)
                }
                Err(e) => Outcome::fail(format!("{}: {e}", g6(g))),
            })
        }
        Command::Gen { out, format, spec } => {
            let graphs = generate(&spec.join(" "))?;
            let mut w = writer(&out)?;
            for g in &graphs {
                let line = match format {
                    Format::Graph6 => g6(g),
                    Format::Text => format!("{}  n={}  m={}", g6(g), g.order(), g.size()),
                    Format::Tsv => format!("{}\t{}\t{}", g6(g), g.order(), g.size()),
                };
                writeln!(w, "{line}").map_err(io_failure)?;
            }
            w.flush().map_err(io_failure)?;
            Ok(true)
        }
        Command::Recognize { io } => {
            reject_graph6(&io, "recognize")?;
            let format = io.format;
            batch(&io, None, |g| match recognize_z3(g) {
                Ok(r) => Outcome::ok(match format {
                    Format::Tsv => {
                        let detail = match &r.certificate {
                            Certificate::Member { spec, .. } => spec.to_string(),
                            Certificate::LowEdgeConnectivity { cut } => {
                                format!("kappa'={}", cut.len())
                            }
                            Certificate::OutsideFamily { z, .. } => format!("Z={z}"),
                        };
                        format!("{}\t{}\t{detail}", g6(g), r.is_member())
                    }
                    _ => r.to_string(),
                }),
                Err(e) => Outcome::fail(format!("{}: {e}", g6(g))),
            })
        }
        Command::Spantree { io, root } => {
            let format = io.format;
            batch(&io, None, |g| match spanning_tree(g, root) {
                Ok(t) => {
                    let c = degree_census(&t);
                    let deleted: Vec<String> =
                        t.deleted.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                    Outcome::ok(match format {
                        Format::Graph6 => g6(&t.tree),
                        Format::Tsv => format!(
                            "{}\t{}\t{}\t{}\t{}\t{}",
                            g6(g),
                            g6(&t.tree),
                            deleted.join(","),
                            c.n1,
                            c.n2,
                            c.n3
                        ),
                        Format::Text => format!(
                            "{}  root={root}  tree={}  deleted={{{}}}  {c}",
                            g6(g),
                            g6(&t.tree),
                            deleted.join(",")
                        ),
                    })
                }
                Err(e) => Outcome::fail(format!("{}: {e}", g6(g))),
            })
        }
        Command::Census { io, budget, tol } => {
            reject_graph6(&io, "census")?;
            check_tol(tol)?;
            let opts = BoundsOptions { tol, budget };
            let header = "graph6\tn\tcubic\tkappa'\tZ\tL_eig\tL_twin\tL_minor\tverdict";
            batch(&io, Some(header), |g| match report(g, opts) {
                Ok(r) => {
                    let minor = r
                        .minor
                        .as_ref()
                        .map_or("-".to_string(), |(b, _)| b.to_string());
                    let z = match r.upper {
                        Upper::Exact { z, .. } => z.to_string(),
                        Upper::Unknown { at_least } => format!(">={at_least}"),
                    };
                    let row = format!(
                        "{}\t{}\t{}\t{}\t{z}\t{}\t{}\t{minor}\t{}",
                        g6(g),
                        r.order,
                        g.is_cubic(),
                        edge_connectivity(g),
                        r.eigen.0,
                        r.twin,
                        r.verdict
                    );
                    exhausted(row, &r)
                }
                Err(e) => Outcome::fail(format!("{}: {e}", g6(g))),
            })
        }
    }
}

fn check_tol(tol: f64) -> Result<(), Failure> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(usage(format!(
            "--tol must be positive and finite, got {tol}"
        )))
    }
}

fn upper_text(u: &Upper) -> String {
    match u {
        Upper::Exact { z, .. } => z.to_string(),
        Upper::Unknown { at_least } => format!("unknown(>={at_least})"),
    }
}

/// A report whose upper bound ran out of budget still prints, but the
/// record counts as failed.
fn exhausted(out: String, r: &BoundsReport) -> Outcome {
    match r.upper {
        Upper::Exact { .. } => Outcome::ok(out),
        Upper::Unknown { at_least } => Outcome {
            out: Some(out),
            err: Some(format!("zero forcing budget exhausted (Z >= {at_least})")),
        },
    }
}

/// Complete-minor models worth checking: K5 upward, while they exist, on
/// graphs small enough to search.
fn minor_models(g: &Graph) -> Vec<MinorModel> {
    let mut models = Vec::new();
    if g.order() > MINOR_SEARCH_MAX_ORDER {
        return models;
    }
    let mut k = 5;
    while let Some(m) = find_complete_minor(g, k) {
        models.push(m);
        k += 1;
    }
    models
}

fn report(g: &Graph, opts: BoundsOptions) -> Result<BoundsReport, zfcore::spectral::BoundsError> {
    bounds_report(g, &minor_models(g), opts)
}
