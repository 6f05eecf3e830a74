use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use revarc::oracle::{find_seed_orientation, SeedSearch, UndirectedGraph};
use revarc::{
    arc_connectivity, blocking_certificate, dalmazzo_sparsify, fixture, parse_digraph,
    reorientation_pipeline, thresholds, to_dot_labeled, verify_certificate, write_instance, ArcId,
    ArcSet, Certificate, Digraph, Error, Mode, Search, SequenceReport, Status,
};

#[derive(Parser)]
#[command(
    name = "revarc",
    version,
    about = "Arc-connectivity under single arc reversals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Arc-connectivity and a minimum in-cut.
    Lambda(Opts),
    /// One reversal of an arc of F, or a blocking certificate.
    Step(Opts),
    /// Reverse arcs of F one at a time until lambda >= k.
    Sequence(Opts),
    /// Drive the instance to k-arc-connectivity via a sparsified seed orientation.
    Pipeline {
        #[command(flatten)]
        opts: Opts,
        /// k-arc-connected orientation of the same multigraph; searched for if omitted.
        #[arg(long)]
        orientation: Option<String>,
    },
    /// Minimal spanning k-arc-connected subdigraph, printed as an instance.
    Sparsify(Opts),
    /// Blocking certificate for F.
    Certificate(Opts),
    /// Check a certificate against the instance.
    Verify {
        #[command(flatten)]
        opts: Opts,
        /// Certificate file, or fixture:<name> for a fixture's drawn certificate.
        #[arg(long)]
        cert: String,
    },
    /// Print a built-in instance.
    Fixture {
        name: String,
        /// Print the fixture's drawn certificate instead.
        #[arg(long)]
        cert: bool,
    },
    /// Graphviz rendering, F arcs in blue.
    ExportDot {
        #[command(flatten)]
        opts: Opts,
        #[arg(long)]
        cert: Option<String>,
    },
}

#[derive(Args)]
struct Opts {
    /// Instance file, or fixture:<name>.
    #[arg(long)]
    instance: String,
    /// Target connectivity; defaults to the fixture's k.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value_t = ModeArg::First)]
    mode: ModeArg,
    /// Seed for --mode random.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Root vertex for certificates.
    #[arg(long, default_value_t = 0)]
    root: usize,
    /// Also write a DOT rendering here.
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    First,
    Best,
    Random,
}

impl Opts {
    fn mode(&self) -> Mode {
        match self.mode {
            ModeArg::First => Mode::First,
            ModeArg::Best => Mode::Best,
            ModeArg::Random => Mode::Random(self.seed),
        }
    }

    fn search(&self, k: usize) -> Search {
        Search::new(k).with_mode(self.mode()).with_root(self.root)
    }
}

#[derive(Debug)]
struct CliError(String);

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

/// Successful run: text for stdout and whether the answer was negative
/// (blocked, or an invalid certificate).
struct Report {
    out: String,
    negative: bool,
}

struct Instance {
    digraph: Digraph,
    f: ArcSet,
    k: Option<usize>,
    labels: Vec<String>,
}

impl Instance {
    fn load(spec: &str) -> CliResult<Instance> {
        if let Some(name) = spec.strip_prefix("fixture:") {
            let fx = fixture(name)?;
            return Ok(Instance {
                digraph: fx.digraph,
                f: fx.f,
                k: Some(fx.k),
                labels: fx.labels,
            });
        }
        let text = read(spec)?;
        let (digraph, f) = parse_digraph(&text).map_err(|e| CliError(format!("{spec}: {e}")))?;
        let labels = (0..digraph.vertex_count()).map(|v| v.to_string()).collect();
        Ok(Instance {
            digraph,
            f,
            k: None,
            labels,
        })
    }

    fn k(&self, opts: &Opts) -> CliResult<usize> {
        opts.k
            .or(self.k)
            .ok_or_else(|| CliError("--k is required for this instance".into()))
    }
}

fn read(path: &str) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError(format!("{path}: {e}")))
}

fn write_dot(
    opts: &Opts,
    inst: &Instance,
    digraph: &Digraph,
    f: &ArcSet,
    cert: Option<&Certificate>,
) -> CliResult<()> {
    if let Some(path) = &opts.dot {
        let text = to_dot_labeled(digraph, f, cert, &inst.labels);
        std::fs::write(path, text).map_err(|e| CliError(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn load_certificate(spec: &str, n: usize) -> CliResult<Certificate> {
    if let Some(name) = spec.strip_prefix("fixture:") {
        return fixture(name)?
            .certificate
            .ok_or_else(|| CliError(format!("fixture {name} has no drawn certificate")));
    }
    Certificate::parse(&read(spec)?, n).map_err(|e| CliError(format!("{spec}: {e}")))
}

fn describe_arc(d: &Digraph, id: ArcId) -> String {
    let a = d.arcs()[id.0];
    format!("{id} ({} -> {})", a.tail, a.head)
}

fn lambda(opts: &Opts) -> CliResult<Report> {
    let inst = Instance::load(&opts.instance)?;
    let result = arc_connectivity(&inst.digraph)?;
    let w = &result.witness;
    let out = format!(
        "lambda={}\nwitness X={:?} in={} out={}\n",
        result.value, w.side, w.in_degree, w.out_degree
    );
    write_dot(opts, &inst, &inst.digraph, &inst.f, None)?;
    Ok(Report {
        out,
        negative: false,
    })
}

fn step(opts: &Opts) -> CliResult<Report> {
    let inst = Instance::load(&opts.instance)?;
    let k = inst.k(opts)?;
    let t = thresholds(k)?;
    let outcome = opts.search(k).find_reversible_arc(&inst.digraph, &inst.f)?;
    let mut out = format!(
        "lambda={} k={k} floor={} target={}\n",
        outcome.lambda_before, t.guarantee_floor, t.target
    );
    let negative = match (outcome.chosen, outcome.lambda_after, &outcome.certificate) {
        (Some(id), Some(after), _) => {
            let _ = writeln!(
                out,
                "reverse arc {}: lambda {} -> {after}",
                describe_arc(&inst.digraph, id),
                outcome.lambda_before
            );
            false
        }
        (_, _, Some(cert)) => {
            out.push_str("blocked: every arc of F lowers lambda\n");
            out.push_str(&cert.to_text());
            true
        }
        _ => unreachable!("a step either picks an arc or carries a certificate"),
    };
    write_dot(
        opts,
        &inst,
        &inst.digraph,
        &inst.f,
        outcome.certificate.as_ref(),
    )?;
    Ok(Report { out, negative })
}

/// Step log and terminal status. A run stuck below k is explained with a
/// certificate for the arcs still unreversed.
fn sequence_text(
    opts: &Opts,
    inst: &Instance,
    f: &ArcSet,
    k: usize,
    report: &SequenceReport,
    out: &mut String,
) -> CliResult<bool> {
    let _ = writeln!(out, "lambda0={}", report.initial_lambda);
    let mut current = inst.digraph.clone();
    let mut remaining = f.clone();
    for s in &report.steps {
        let _ = writeln!(
            out,
            "step {} lambda={}",
            describe_arc(&current, s.arc),
            s.lambda
        );
        current = current.reverse_arc(s.arc)?;
        remaining.remove(s.arc);
    }
    let trace: Vec<String> = report.lambdas().iter().map(|l| l.to_string()).collect();
    let _ = writeln!(out, "lambda: {}", trace.join(" -> "));
    let _ = writeln!(out, "status={}", report.status.name());
    let cert = match &report.status {
        Status::ReachedK => None,
        Status::Blocked(cert) => Some(cert.clone()),
        Status::ReachedGuarantee => {
            opts.search(k)
                .find_reversible_arc(&current, &remaining)?
                .certificate
        }
    };
    if let Some(cert) = &cert {
        out.push_str(&cert.to_text());
    }
    write_dot(opts, inst, &report.final_digraph, &remaining, cert.as_ref())?;
    Ok(cert.is_some())
}

fn sequence(opts: &Opts) -> CliResult<Report> {
    let inst = Instance::load(&opts.instance)?;
    let k = inst.k(opts)?;
    let report = opts.search(k).monotone_sequence(&inst.digraph, &inst.f)?;
    let mut out = String::new();
    let negative = sequence_text(opts, &inst, &inst.f, k, &report, &mut out)?;
    Ok(Report { out, negative })
}

fn pipeline(opts: &Opts, orientation: Option<&str>) -> CliResult<Report> {
    let inst = Instance::load(&opts.instance)?;
    let k = inst.k(opts)?;
    let (seed, source) = match orientation {
        Some(spec) => (Instance::load(spec)?.digraph, "given"),
        None => {
            let graph = UndirectedGraph::underlying(&inst.digraph);
            let source = if graph.all_degrees_even() {
                "eulerian"
            } else {
                "exhaustive"
            };
            let seed = find_seed_orientation(&graph, k, SeedSearch::Auto).ok_or_else(|| {
                CliError(format!(
                    "no {k}-arc-connected orientation found ({source} search)"
                ))
            })?;
            (seed, source)
        }
    };
    let report = reorientation_pipeline(&inst.digraph, k, &seed, opts.mode())?;
    let n = inst.digraph.vertex_count();
    let ids: Vec<String> = report.f.iter().map(|id| id.to_string()).collect();
    let mut out = format!(
        "seed={source}\nsparsified={} bound={}\nF={} [{}]\n",
        report.sparsified.arc_count,
        report.sparsified.bound(n),
        report.f.len(),
        ids.join(" ")
    );
    let negative = sequence_text(opts, &inst, &report.f, k, &report.sequence, &mut out)?;
    Ok(Report { out, negative })
}

fn sparsify(opts: &Opts) -> CliResult<Report> {
    let inst = Instance::load(&opts.instance)?;
    let k = inst.k(opts)?;
    let result = dalmazzo_sparsify(&inst.digraph, k)?;
    let sparse = inst.digraph.restrict(&result.kept)?;
    let f: ArcSet = result
        .kept
        .iter()
        .enumerate()
        .filter(|(_, id)| inst.f.contains(*id))
        .map(|(i, _)| ArcId(i))
        .collect();
    let n = inst.digraph.vertex_count();
    let out = format!(
        "# kept {} of {} arcs, k={k}, bound={}\n{}",
        result.arc_count,
        inst.digraph.arc_count(),
        result.bound(n),
        write_instance(&sparse, &f)
    );
    write_dot(opts, &inst, &sparse, &f, None)?;
    Ok(Report {
        out,
        negative: false,
    })
}

fn certificate(opts: &Opts) -> CliResult<Report> {
    let inst = Instance::load(&opts.instance)?;
    let k = inst.k(opts)?;
    match blocking_certificate(&inst.digraph, &inst.f, k, opts.root) {
        Ok(cert) => {
            write_dot(opts, &inst, &inst.digraph, &inst.f, Some(&cert))?;
            Ok(Report {
                out: cert.to_text(),
                negative: false,
            })
        }
        Err(Error::ArcNotBlocked(id)) => Ok(Report {
            out: format!(
                "no certificate: arc {} can be reversed without lowering lambda\n",
                describe_arc(&inst.digraph, id)
            ),
            negative: true,
        }),
        Err(e) => Err(e.into()),
    }
}

fn verify(opts: &Opts, cert: &str) -> CliResult<Report> {
    let inst = Instance::load(&opts.instance)?;
    let cert = load_certificate(cert, inst.digraph.vertex_count())?;
    let report = verify_certificate(&inst.digraph, &inst.f, &cert);
    write_dot(opts, &inst, &inst.digraph, &inst.f, Some(&cert))?;
    Ok(Report {
        out: format!("{report}\n"),
        negative: !report.is_valid(),
    })
}

fn show_fixture(name: &str, cert: bool) -> CliResult<Report> {
    let fx = fixture(name)?;
    let out = if cert {
        fx.certificate
            .ok_or_else(|| CliError(format!("fixture {name} has no drawn certificate")))?
            .to_text()
    } else {
        format!(
            "# {}: k={} lambda={} reversed={}\n{}",
            fx.name,
            fx.k,
            fx.expected_lambda,
            fx.expected_lambda_reversed,
            write_instance(&fx.digraph, &fx.f)
        )
    };
    Ok(Report {
        out,
        negative: false,
    })
}

fn export_dot(opts: &Opts, cert: Option<&str>) -> CliResult<Report> {
    let inst = Instance::load(&opts.instance)?;
    let cert = cert
        .map(|c| load_certificate(c, inst.digraph.vertex_count()))
        .transpose()?;
    let text = to_dot_labeled(&inst.digraph, &inst.f, cert.as_ref(), &inst.labels);
    let out = match &opts.dot {
        Some(_) => {
            write_dot(opts, &inst, &inst.digraph, &inst.f, cert.as_ref())?;
            String::new()
        }
        None => text,
    };
    Ok(Report {
        out,
        negative: false,
    })
}

fn run(cli: Cli) -> CliResult<Report> {
    match &cli.command {
        Command::Lambda(opts) => lambda(opts),
        Command::Step(opts) => step(opts),
        Command::Sequence(opts) => sequence(opts),
        Command::Pipeline { opts, orientation } => pipeline(opts, orientation.as_deref()),
        Command::Sparsify(opts) => sparsify(opts),
        Command::Certificate(opts) => certificate(opts),
        Command::Verify { opts, cert } => verify(opts, cert),
        Command::Fixture { name, cert } => show_fixture(name, *cert),
        Command::ExportDot { opts, cert } => export_dot(opts, cert.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(report) => {
            print!("{}", report.out);
            ExitCode::from(u8::from(report.negative))
        }
        Err(CliError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
