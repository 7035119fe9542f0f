use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use thetacolor::certificate::{verify_certificate, Certificate};
use thetacolor::chromatic::{chromatic_polynomial, theta_chromatic_closed_form};
use thetacolor::dpcover::{dp_color_function_exact, theta_dp_closed_form};
use thetacolor::graph::Family;
use thetacolor::listcolor::{list_color_function, ListAssignment};
use thetacolor::verify::{self, CheckReport, Summary, DEFAULT_SEED};
use thetacolor::{Budget, Error, Graph, ThetaGraph, ThetaSpec};

#[derive(Parser)]
#[command(name = "thetacol", version, about = "Chromatic, list color and DP color functions of theta graphs")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Worker threads for parallel search (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Seed for sampled assignments.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Write the report or certificate here.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Most candidates kept per step of the path search.
    #[arg(long, global = true, env = "THETACOL_BUDGET_FRONTIER")]
    budget_frontier: Option<usize>,
    /// Most canonical list assignments visited by exhaustive search.
    #[arg(long, global = true, env = "THETACOL_BUDGET_ASSIGNMENTS")]
    budget_assignments: Option<u64>,
    /// Most gauge-fixed covers visited.
    #[arg(long, global = true, env = "THETACOL_BUDGET_COVERS")]
    budget_covers: Option<u64>,
    /// Most candidates visited by brute-force enumeration.
    #[arg(long, global = true, env = "THETACOL_BUDGET_ENUMERATION")]
    budget_enumeration: Option<u64>,
}

#[derive(Args, Clone)]
struct GraphArgs {
    /// Theta graph as `l1,l2,l3`.
    #[arg(long, group = "source")]
    theta: Option<String>,
    /// Graph JSON file `{"n": .., "edges": [[a,b], ..]}`.
    #[arg(long, group = "source")]
    graph: Option<PathBuf>,
    /// `path:N`, `cycle:N`, `complete:N` or `bipartite:A,B`.
    #[arg(long, group = "source")]
    family: Option<String>,
}

#[derive(Args, Clone)]
struct MArgs {
    #[arg(long, group = "mvalues")]
    m: Option<usize>,
    /// Inclusive range `a..b`.
    #[arg(long, group = "mvalues")]
    m_range: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Chromatic polynomial, and its values at the given m.
    Poly {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        ms: MArgs,
    },
    /// List color function with a witness assignment.
    Plist {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        ms: MArgs,
    },
    /// DP color function with a witness cover.
    Pdp {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        ms: MArgs,
    },
    /// Run a check and print JSON-lines reports.
    Verify {
        #[command(subcommand)]
        check: Check,
    },
    /// Parity rule over all theta graphs with lengths up to --lmax.
    Scan {
        #[arg(long, default_value_t = 4)]
        lmax: usize,
        #[arg(long, default_value_t = 3)]
        mmax: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Re-check a certificate written by plist or pdp.
    VerifyCert { path: PathBuf },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Jsonl,
}

#[derive(Subcommand)]
enum Check {
    /// P_DP <= P_l <= P.
    Sandwich {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        ms: MArgs,
    },
    /// P(G,L) >= P_DP(G,m) + C d for one assignment.
    DpConnection {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        m: usize,
        /// Assignment JSON file; a seeded random one is used otherwise.
        #[arg(long)]
        lists: Option<PathBuf>,
        #[arg(long)]
        c: Option<u64>,
    },
    /// Pinned-edge lower bound on sampled assignments of a theta graph.
    CountBound {
        #[arg(long)]
        theta: String,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Bounds on the count matrix of an even path.
    EvenPathPartition {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// P_l = P on trees, complete graphs, cycles and K_{2,3}; a gap on theta(2,4,2).
    KnownExamples,
    /// Parity rule over all theta graphs with lengths up to --lmax.
    Characterization {
        #[arg(long, default_value_t = 4)]
        lmax: usize,
        #[arg(long, default_value_t = 3)]
        mmax: usize,
    },
    /// Difference bound P(G,L) - P(G,m) on sampled assignments.
    NochordInequality {
        #[arg(long)]
        theta: String,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
}

/// Exit status 2 with a message.
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

type Run<T> = std::result::Result<T, Usage>;

fn parse_theta(s: &str) -> Run<ThetaSpec> {
    let parts: Vec<usize> = s
        .split(',')
        .map(|p| p.trim().parse())
        .collect::<Result<_, _>>()
        .map_err(|_| Usage(format!("theta spec must be `l1,l2,l3`, got `{s}`")))?;
    let [a, b, c] = parts[..] else {
        return Err(Usage(format!("theta spec must have three lengths, got `{s}`")));
    };
    let (spec, reordered) = ThetaSpec::normalize(a, b, c)?;
    if reordered {
        eprintln!("warning: theta({a},{b},{c}) reordered to theta({spec})");
    }
    Ok(spec)
}

struct Source {
    label: String,
    graph: Graph,
    theta: Option<ThetaSpec>,
}

fn load_graph(args: &GraphArgs) -> Run<Source> {
    if let Some(t) = &args.theta {
        let spec = parse_theta(t)?;
        return Ok(Source {
            label: format!("theta({spec})"),
            graph: ThetaGraph::build(spec).graph,
            theta: Some(spec),
        });
    }
    if let Some(f) = &args.family {
        let family: Family = f.parse()?;
        return Ok(Source {
            label: family.to_string(),
            graph: family.build()?,
            theta: None,
        });
    }
    if let Some(path) = &args.graph {
        let text = fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
        let graph: Graph =
            serde_json::from_str(&text).map_err(|e| Usage(format!("malformed graph JSON: {e}")))?;
        return Ok(Source {
            label: verify::describe_graph(&graph),
            graph,
            theta: None,
        });
    }
    Err(Usage("one of --theta, --graph or --family is required".into()))
}

fn m_values(ms: &MArgs) -> Run<Vec<usize>> {
    let values = match (&ms.m, &ms.m_range) {
        (Some(m), _) => vec![*m],
        (None, Some(r)) => {
            let bad = || Usage(format!("m range must be `a..b`, got `{r}`"));
            let (a, b) = r.split_once("..").ok_or_else(bad)?;
            let a: usize = a.trim().parse().map_err(|_| bad())?;
            let b: usize = b.trim().parse().map_err(|_| bad())?;
            (a..=b).collect()
        }
        (None, None) => return Err(Usage("--m or --m-range is required".into())),
    };
    if values.is_empty() || values.contains(&0) {
        return Err(Usage("m values must be at least 1".into()));
    }
    Ok(values)
}

fn budget(g: &Global) -> Run<Budget> {
    let d = Budget::default();
    let b = Budget {
        frontier: g.budget_frontier.unwrap_or(d.frontier),
        assignments: g.budget_assignments.unwrap_or(d.assignments),
        covers: g.budget_covers.unwrap_or(d.covers),
        enumeration: g.budget_enumeration.unwrap_or(d.enumeration),
    };
    b.validate()?;
    Ok(b)
}

fn emit(out: &Option<PathBuf>, text: &str) -> Run<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Usage(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| Usage(format!("stdout: {e}")))
        }
    }
}

fn line(v: Value) -> String {
    format!("{v}\n")
}

/// Writes certificates next to `--out`: the path itself for one value of m,
/// otherwise `<stem>.m<M>.<ext>`.
fn certificate_path(out: &Option<PathBuf>, m: usize, many: bool) -> Option<PathBuf> {
    let path = out.as_ref()?;
    if !many {
        return Some(path.clone());
    }
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let name = match path.extension() {
        Some(ext) => format!("{stem}.m{m}.{}", ext.to_string_lossy()),
        None => format!("{stem}.m{m}"),
    };
    Some(path.with_file_name(name))
}

fn write_certificate(path: Option<PathBuf>, cert: &Certificate) -> Run<()> {
    if let Some(path) = path {
        fs::write(&path, cert.to_json_string() + "\n").map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn run_poly(src: &Source, ms: &MArgs) -> Run<String> {
    let p = chromatic_polynomial(&src.graph);
    let coeffs: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
    let mut out = line(json!({
        "graph": src.label,
        "polynomial": p.to_string(),
        "coeffs": coeffs,
    }));
    if ms.m.is_none() && ms.m_range.is_none() {
        return Ok(out);
    }
    for m in m_values(ms)? {
        let mut row = json!({ "graph": src.label, "m": m, "p": p.eval_u64(m as u64).to_string() });
        if let Some(spec) = &src.theta {
            if m >= 2 {
                row["closed_form"] = json!(theta_chromatic_closed_form(spec, m as u64)?.to_string());
            }
        }
        out.push_str(&line(row));
    }
    Ok(out)
}

fn run_plist(src: &Source, ms: &MArgs, g: &Global) -> Run<String> {
    let b = budget(g)?;
    let values = m_values(ms)?;
    let mut out = String::new();
    for &m in &values {
        let r = list_color_function(&src.graph, m, &b)?;
        let cert = Certificate::for_assignment(&src.graph, &r.witness, &[], None)?;
        out.push_str(&line(json!({
            "graph": src.label,
            "m": m,
            "p_list": r.value.to_string(),
            "p": cert.reference,
            "method": r.method,
            "witness": r.witness,
        })));
        write_certificate(certificate_path(&g.out, m, values.len() > 1), &cert)?;
    }
    Ok(out)
}

fn run_pdp(src: &Source, ms: &MArgs, g: &Global) -> Run<String> {
    let b = budget(g)?;
    let values = m_values(ms)?;
    let mut out = String::new();
    for &m in &values {
        let r = dp_color_function_exact(&src.graph, m, &b)?;
        let cover = r.witness.to_cover(&src.graph)?;
        let cert = Certificate::for_cover(&src.graph, &cover, None)?;
        let mut row = json!({
            "graph": src.label,
            "m": m,
            "p_dp": r.value.to_string(),
            "p": cert.reference,
            "witness": r.witness,
        });
        if let Some(spec) = &src.theta {
            if m >= 2 && spec.l1_l3_match_l2_differs() {
                row["closed_form"] = json!(theta_dp_closed_form(spec, m as u64)?.to_string());
            }
        }
        out.push_str(&line(row));
        write_certificate(certificate_path(&g.out, m, values.len() > 1), &cert)?;
    }
    Ok(out)
}

fn run_check(check: &Check, g: &Global) -> Run<Vec<CheckReport>> {
    let b = budget(g)?;
    let reports = match check {
        Check::Sandwich { graph, ms } => {
            let src = load_graph(graph)?;
            m_values(ms)?
                .into_iter()
                .map(|m| verify::check_sandwich(&src.graph, m, &b))
                .collect::<Result<Vec<_>, _>>()?
        }
        Check::DpConnection { graph, m, lists, c } => {
            let src = load_graph(graph)?;
            let assignment = match lists {
                Some(path) => {
                    let text = fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
                    serde_json::from_str::<ListAssignment>(&text)
                        .map_err(|e| Usage(format!("malformed assignment JSON: {e}")))?
                }
                None => verify::seeded_assignment(src.graph.vertex_count(), *m, g.seed)?,
            };
            let mut r = verify::check_lemma_dp_connection(&src.graph, &assignment, *c, &b)?;
            if lists.is_none() {
                r.seed = Some(g.seed);
            }
            vec![r]
        }
        Check::CountBound { theta, m, samples } => {
            vec![verify::check_lemma_count_bound(&parse_theta(theta)?, *m, *samples, g.seed)?]
        }
        Check::EvenPathPartition { k, m, samples } => {
            vec![verify::check_even_path_partition_sampled(*k, *m, *samples, g.seed)?]
        }
        Check::KnownExamples => verify::check_known_choosable_examples(&b)?,
        Check::Characterization { lmax, mmax } => verify::check_characterization(*lmax, *mmax, &b)?,
        Check::NochordInequality { theta, m, samples } => {
            vec![verify::check_lemma_nochord_inequality(&parse_theta(theta)?, *m, *samples, g.seed)?]
        }
    };
    Ok(reports)
}

fn scan_table(reports: &[CheckReport]) -> String {
    let mut out = format!(
        "{:<8} {:<14} {:>3}  {:<13} {:>9}  {}\n",
        "theta", "predicted", "chi", "status", "witness_m", "detail"
    );
    for r in reports {
        let get = |k: &str| r.values.get(k).cloned().unwrap_or_else(|| "-".into());
        let status = serde_json::to_value(r.status).expect("status serializes");
        out.push_str(&format!(
            "{:<8} {:<14} {:>3}  {:<13} {:>9}  {}\n",
            r.instance["theta"].as_str().unwrap_or("?"),
            get("predicted"),
            get("chromatic_number"),
            status.as_str().unwrap_or("?"),
            get("witness_m"),
            r.detail
        ));
    }
    let s = Summary::of(reports);
    out.push_str(&format!(
        "pass {} fail {} skipped {} inconclusive {}\n",
        s.pass, s.fail, s.skipped, s.inconclusive
    ));
    out
}

fn exit_for(reports: &[CheckReport]) -> ExitCode {
    if Summary::of(reports).fail > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn run(cli: Cli) -> Run<ExitCode> {
    let g = &cli.global;
    match &cli.command {
        Command::Poly { graph, ms } => {
            emit(&None, &run_poly(&load_graph(graph)?, ms)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Plist { graph, ms } => {
            emit(&None, &run_plist(&load_graph(graph)?, ms, g)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Pdp { graph, ms } => {
            emit(&None, &run_pdp(&load_graph(graph)?, ms, g)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { check } => {
            let mut reports = run_check(check, g)?;
            verify::sort_reports(&mut reports);
            emit(&g.out, &verify::to_json_lines(&reports))?;
            Ok(exit_for(&reports))
        }
        Command::Scan { lmax, mmax, format } => {
            let reports = verify::check_characterization(*lmax, *mmax, &budget(g)?)?;
            let text = match format {
                Format::Table => scan_table(&reports),
                Format::Jsonl => verify::to_json_lines(&reports),
            };
            emit(&g.out, &text)?;
            Ok(exit_for(&reports))
        }
        Command::VerifyCert { path } => {
            let text = fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
            let cert = Certificate::from_json_str(&text)?;
            let verdict = verify_certificate(&cert);
            emit(&g.out, &line(serde_json::to_value(&verdict).expect("verdict serializes")))?;
            Ok(if verdict.valid { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
