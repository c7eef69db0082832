//! The `twostab` command-line tool.
//!
//! Exit codes: 0 success; 1 I/O or parse error; 2 invalid representation
//! or class mismatch; 3 matrix violation; 4 property violation (fuzz,
//! `check`, `cliques --verify`).

pub mod checks;
pub mod fuzz;
pub mod report;
pub mod svg;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use twostab::cliques::{
    clique_number, format_cliques, maximal_cliques, maximal_cliques_2siig, maximal_cliques_2suig,
    maximal_cliques_general, CliqueList,
};
use twostab::coloring::{
    chromatic_bounds, color_2sig, color_2siig, color_bridge_triangle_free_2suig, color_triangle_free_2suig,
};
use twostab::matrix::{
    build_issr, format_issr, is_issr, is_psa, is_strict_partition, parse_issr, reconstruct_representation,
};
use twostab::oracle::{
    bruteforce_chromatic, bruteforce_maximal_cliques, generate, named_clique_set, GenClass, GeneratorConfig,
    CHROMATIC_LIMIT,
};
use twostab::partition::find_bridge_triangles;
use twostab::rep::{intersection_graph, parse_representation, to_json};
use twostab::{presets, Instance, Rational, StabPartition, StabRepresentation};

use checks::Fault;
use report::{CommandReport, Style, EXIT_INVALID, EXIT_IO, EXIT_MATRIX, EXIT_OK, EXIT_PROPERTY};

#[derive(Parser, Debug)]
#[command(name = "twostab", version, about = "2-stab interval graphs: analysis, cliques, colorings, ISSR matrices")]
pub struct Cli {
    /// Also write the JSON command report here.
    #[arg(long, global = true, value_name = "PATH")]
    pub report: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Partition, bridges, clique number, coloring bounds and palettes.
    Analyze { file: PathBuf },
    /// Canonical list of maximal cliques.
    Cliques {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Algorithm::Auto)]
        algorithm: Algorithm,
        /// Compare against the brute-force oracle.
        #[arg(long)]
        verify: bool,
    },
    /// ISSR matrices: check a matrix, build one from a representation, or
    /// reconstruct a representation from one.
    Matrix(MatrixArgs),
    /// SVG figure of a representation and its graph.
    Render {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded random representation.
    Generate(GenerateArgs),
    /// Built-in example representation.
    Preset {
        #[arg(value_enum)]
        name: PresetName,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Runs every applicable property check on a representation or a fuzz
    /// reproduction file.
    Check {
        file: PathBuf,
        #[arg(long, value_enum)]
        inject_fault: Option<Fault>,
    },
    /// Generator sweep with oracle cross-checks.
    Fuzz(FuzzArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Auto,
    #[value(name = "2suig")]
    Suig,
    #[value(name = "2siig")]
    Siig,
    General,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PresetName {
    Fig1,
    Fig2,
    Fig3,
    C5,
    K2,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("mode").required(true).args(["check", "build", "reconstruct"])))]
pub struct MatrixArgs {
    /// Matrix file for --check and --reconstruct, representation for --build.
    pub input: PathBuf,
    #[arg(long)]
    pub check: bool,
    #[arg(long)]
    pub build: bool,
    #[arg(long)]
    pub reconstruct: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    #[arg(long, value_parser = parse_class, default_value = "2SIG")]
    pub class: GenClass,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub n_lower: Option<usize>,
    #[arg(long)]
    pub n_upper: Option<usize>,
    /// Draw sizes from the seed with at most this many vertices.
    #[arg(long, conflicts_with_all = ["n_lower", "n_upper"])]
    pub max_n: Option<usize>,
    /// Bridge density as a rational, e.g. 1/2.
    #[arg(long)]
    pub density: Option<Rational>,
    /// 2SUIIG only: require a strict partition.
    #[arg(long)]
    pub strict: bool,
    /// GeneratorConfig as JSON; overrides the other flags.
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct FuzzArgs {
    #[arg(long, value_parser = parse_class, default_value = "2SIG")]
    pub class: GenClass,
    #[arg(long, default_value_t = 100)]
    pub seeds: u64,
    #[arg(long, default_value_t = 12)]
    pub max_n: usize,
    /// First generator seed; instance i uses seed + i.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Where to write the reproduction file on failure.
    #[arg(long, default_value = "twostab-repro.json")]
    pub out: PathBuf,
    #[arg(long, value_enum, hide = true)]
    pub inject_fault: Option<Fault>,
}

fn parse_class(s: &str) -> Result<GenClass, String> {
    s.parse().map_err(|e: twostab::Error| e.to_string())
}

/// Error carrying the exit code it maps to.
struct Failure {
    code: i32,
    msg: String,
}

impl From<twostab::Error> for Failure {
    fn from(e: twostab::Error) -> Self {
        Failure { code: report::exit_code(&e), msg: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: EXIT_IO, msg: e.to_string() }
    }
}

fn failure(code: i32, msg: impl Into<String>) -> Failure {
    Failure { code, msg: msg.into() }
}

type CmdResult = Result<(), Failure>;

/// Primary output: a file when `--out` is given, stdout otherwise.
fn emit(out: Option<&Path>, text: &str, stdout: &mut String) -> CmdResult {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| failure(EXIT_IO, format!("{}: {e}", p.display()))),
        None => {
            stdout.push_str(text);
            Ok(())
        }
    }
}

fn read_input(path: &Path, rep: &mut CommandReport) -> Result<String, Failure> {
    let bytes = std::fs::read(path).map_err(|e| failure(EXIT_IO, format!("{}: {e}", path.display())))?;
    rep.input_digest = Some(report::digest(&bytes));
    String::from_utf8(bytes).map_err(|_| failure(EXIT_IO, format!("{}: not UTF-8", path.display())))
}

fn load(path: &Path, rep: &mut CommandReport) -> Result<StabRepresentation, Failure> {
    let text = read_input(path, rep)?;
    let r = parse_representation(&text).map_err(|e| failure(EXIT_IO, format!("{}: {e}", path.display())))?;
    if let Some(v) = r.validate().first() {
        return Err(failure(EXIT_INVALID, format!("invalid representation: {v:?}")));
    }
    Ok(r)
}

/// Runs the tool; returns the exit code. Human output goes to stdout.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
        }
    };
    let style = Style::detect();
    let start = Instant::now();
    let mut rep = CommandReport::new(command_name(&cli.command));
    let mut stdout = String::new();
    let result = dispatch(&cli.command, &mut rep, &mut stdout, &style);
    print!("{stdout}");
    rep.elapsed = start.elapsed();
    if let Err(f) = result {
        eprintln!("{} {}", style.bad("error:"), f.msg);
        rep.fail(f.code, f.msg);
    }
    if rep.exit_code != EXIT_OK {
        eprintln!("{}", rep.to_json());
    }
    if let Some(path) = &cli.report {
        let body = serde_json::to_string_pretty(&rep.to_json()).expect("serializable") + "\n";
        if let Err(e) = std::fs::write(path, body) {
            eprintln!("cannot write report {}: {e}", path.display());
            return EXIT_IO;
        }
    }
    rep.exit_code
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Analyze { .. } => "analyze",
        Command::Cliques { .. } => "cliques",
        Command::Matrix(_) => "matrix",
        Command::Render { .. } => "render",
        Command::Generate(_) => "generate",
        Command::Preset { .. } => "preset",
        Command::Check { .. } => "check",
        Command::Fuzz(_) => "fuzz",
    }
}

fn dispatch(cmd: &Command, rep: &mut CommandReport, out: &mut String, style: &Style) -> CmdResult {
    match cmd {
        Command::Analyze { file } => analyze(file, rep, out),
        Command::Cliques { file, algorithm, verify } => cliques(file, *algorithm, *verify, rep, out, style),
        Command::Matrix(args) => matrix(args, rep, out, style),
        Command::Render { file, out: path } => {
            let r = load(file, rep)?;
            let svg = svg::render(&r)?;
            rep.set("rects", json!(r.len()));
            emit(path.as_deref(), &svg, out)
        }
        Command::Generate(args) => generate_cmd(args, rep, out),
        Command::Preset { name, out: path } => {
            let r = match name {
                PresetName::Fig1 => presets::fig1(),
                PresetName::Fig2 => presets::fig2(),
                PresetName::Fig3 => presets::fig3(),
                PresetName::C5 => presets::c5_2suiig(),
                PresetName::K2 => presets::k2_bridge(),
            };
            emit(path.as_deref(), &to_json(&r), out)
        }
        Command::Check { file, inject_fault } => check(file, *inject_fault, rep, out, style),
        Command::Fuzz(args) => fuzz_cmd(args, rep, out, style),
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn analyze(file: &Path, rep: &mut CommandReport, out: &mut String) -> CmdResult {
    let r = load(file, rep)?;
    let inst = Instance::new(&r)?;
    let part = StabPartition::from_instance(&inst);
    let g = &inst.graph;
    let unit = inst.is_2suig();
    let independent = inst.is_2siig();
    let triangle_free = g.triangles().is_empty();
    let bridge_triangles = find_bridge_triangles(g, &part);
    let bridge_tf = bridge_triangles.is_empty();
    let cn = clique_number(&inst);
    let (chi_lo, chi_hi) = chromatic_bounds(&inst);

    let mut s = String::new();
    let _ = writeln!(s, "input sha256 {}", rep.input_digest.as_deref().unwrap_or(""));
    let _ = writeln!(s, "vertices {} (lower {}, upper {})", inst.n(), part.lower.len(), part.upper.len());
    let _ = writeln!(s, "edges {}", g.edge_count());
    let _ = writeln!(s, "bridge edges {}", part.bridge_edges.len());
    let _ = writeln!(s, "bridge vertices {}", part.bridge_vertices.len());
    let _ = writeln!(s, "bridge triangles {}", bridge_triangles.len());
    let _ = writeln!(
        s,
        "flags unit_squares={} proper={}",
        yes(r.flags.unit_squares),
        yes(r.flags.proper)
    );
    let _ = writeln!(
        s,
        "classes 2SUIG={} proper={} 2SIIG={} 2SUIIG={} triangle-free={} bridge-triangle-free={}",
        yes(unit),
        yes(r.is_proper()),
        yes(independent),
        yes(unit && independent),
        yes(triangle_free),
        yes(bridge_tf)
    );
    let _ = writeln!(s, "omega {} (side bounds {}..{})", cn.omega, cn.lower_bound, cn.upper_bound);
    let _ = writeln!(s, "chi bounds ({chi_lo}, {chi_hi}) from side colorings");
    let mut class_bound = 2 * cn.omega;
    let mut why = "2 omega";
    if independent || (unit && bridge_tf) {
        class_bound = cn.omega + 1;
        why = "omega + 1";
    }
    if unit && triangle_free && class_bound > 3 {
        class_bound = 3;
        why = "triangle-free";
    }
    let _ = writeln!(s, "chi <= {class_bound} ({why})");
    let mut palettes = serde_json::Map::new();
    let c = color_2sig(&inst);
    palettes.insert("2sig".into(), json!(c.palette()));
    let _ = writeln!(s, "coloring 2sig {} colors", c.palette());
    if independent {
        let c = color_2siig(&inst)?;
        palettes.insert("2siig".into(), json!(c.palette()));
        let _ = writeln!(s, "coloring 2siig {} colors", c.palette());
    }
    if unit && triangle_free {
        let c = color_triangle_free_2suig(&inst)?;
        palettes.insert("triangle-free".into(), json!(c.coloring.palette()));
        let _ = writeln!(s, "coloring triangle-free {} colors ({:?})", c.coloring.palette(), c.path);
    }
    if unit && bridge_tf {
        let p = color_bridge_triangle_free_2suig(&inst)?;
        palettes.insert("bridge-triangle-free".into(), json!(p.coloring.palette()));
        let _ = writeln!(s, "coloring bridge-triangle-free {} colors ({} peeled)", p.coloring.palette(), p.rounds);
    }
    let chi = (inst.n() <= CHROMATIC_LIMIT).then(|| bruteforce_chromatic(g)).transpose()?;
    if let Some(chi) = chi {
        let _ = writeln!(s, "chi {chi} (exact)");
    }
    out.push_str(&s);
    rep.set("vertices", json!(inst.n()));
    rep.set("lower", json!(part.lower.len()));
    rep.set("upper", json!(part.upper.len()));
    rep.set("bridge_edges", json!(part.bridge_edges.len()));
    rep.set("bridge_triangles", json!(bridge_triangles.len()));
    rep.set("omega", json!(cn.omega));
    rep.set("omega_bounds", json!([cn.lower_bound, cn.upper_bound]));
    rep.set("chi_bounds", json!([chi_lo, chi_hi]));
    rep.set("chi", json!(chi));
    rep.set("palettes", Value::Object(palettes));
    Ok(())
}

fn cliques(
    file: &Path,
    algorithm: Algorithm,
    verify: bool,
    rep: &mut CommandReport,
    out: &mut String,
    style: &Style,
) -> CmdResult {
    let r = load(file, rep)?;
    let inst = Instance::new(&r)?;
    let g = &inst.graph;
    let list: CliqueList = match algorithm {
        Algorithm::Auto => maximal_cliques(&inst),
        Algorithm::Suig => maximal_cliques_2suig(&inst)?,
        Algorithm::Siig => maximal_cliques_2siig(&inst)?,
        Algorithm::General => maximal_cliques_general(&inst),
        Algorithm::Oracle => bruteforce_maximal_cliques(g)?,
    };
    out.push_str(&format_cliques(g, &list));
    let omega = list.iter().map(Vec::len).max().unwrap_or(0);
    let _ = writeln!(out, "# {} maximal cliques, omega {omega}", list.len());
    rep.set("cliques", json!(list.len()));
    rep.set("omega", json!(omega));
    if verify {
        let oracle = bruteforce_maximal_cliques(g)?;
        let (got, want) = (named_clique_set(g, &list), named_clique_set(g, &oracle));
        let line = |c: &std::collections::BTreeSet<String>| c.iter().cloned().collect::<Vec<_>>().join(" ");
        let missing: Vec<String> = want.difference(&got).map(line).collect();
        let extra: Vec<String> = got.difference(&want).map(line).collect();
        for m in &missing {
            let _ = writeln!(out, "# - {m}");
        }
        for e in &extra {
            let _ = writeln!(out, "# + {e}");
        }
        rep.set("verify", json!({"missing": missing, "extra": extra}));
        if missing.is_empty() && extra.is_empty() {
            let _ = writeln!(out, "# verify {}: oracle agrees", style.ok("ok"));
        } else {
            let _ = writeln!(out, "# verify {}", style.bad("FAILED"));
            return Err(failure(
                EXIT_PROPERTY,
                format!("{} cliques missing, {} extra against the oracle", missing.len(), extra.len()),
            ));
        }
    }
    Ok(())
}

fn matrix(args: &MatrixArgs, rep: &mut CommandReport, out: &mut String, style: &Style) -> CmdResult {
    if args.build {
        let r = load(&args.input, rep)?;
        let m = build_issr(&r)?;
        let verdict = is_issr(&m);
        rep.set("m", json!(m.m));
        rep.set("n", json!(m.n));
        emit(args.out.as_deref(), &format_issr(&m), out)?;
        if let Err(v) = verdict {
            return Err(failure(EXIT_MATRIX, format!("built matrix fails {v}")));
        }
        return Ok(());
    }
    let text = read_input(&args.input, rep)?;
    let m = parse_issr(&text)?;
    if args.check {
        let psa = is_psa(&m.a_dprime);
        let issr = is_issr(&m);
        let verdict = |r: &Result<(), twostab::matrix::MatrixViolation>| match r {
            Ok(()) => style.ok("ok"),
            Err(v) => style.bad(&format!("violation {v}")),
        };
        let _ = writeln!(out, "psa {}", verdict(&psa));
        let _ = writeln!(out, "issr {}", verdict(&issr));
        rep.set("psa", json!(psa.as_ref().err().map(|v| v.clause)));
        rep.set("issr", json!(issr.as_ref().err().map(|v| v.clause)));
        if let Some(v) = psa.err().or(issr.err()) {
            return Err(failure(EXIT_MATRIX, format!("violated clause {}: {}", v.clause, v.detail)));
        }
        return Ok(());
    }
    let back = reconstruct_representation(&m)?;
    let same = intersection_graph(&back)? == m.graph();
    rep.set("round_trip", json!(same));
    emit(args.out.as_deref(), &to_json(&back), out)?;
    if !same {
        return Err(failure(EXIT_MATRIX, "reconstructed representation does not match the matrix"));
    }
    if args.out.is_some() {
        let _ = writeln!(out, "round trip {}", style.ok("ok"));
    }
    Ok(())
}

fn generate_cmd(args: &GenerateArgs, rep: &mut CommandReport, out: &mut String) -> CmdResult {
    let cfg: GeneratorConfig = match &args.config {
        Some(path) => {
            let text = read_input(path, rep)?;
            serde_json::from_str(&text).map_err(|e| failure(EXIT_IO, format!("{}: {e}", path.display())))?
        }
        None => {
            let mut cfg = match args.max_n {
                Some(max_n) => GeneratorConfig::sweep(args.class, args.seed, max_n),
                None => GeneratorConfig::new(args.class, args.n_lower.unwrap_or(4), args.n_upper.unwrap_or(2), args.seed),
            };
            if let Some(d) = args.density {
                cfg.bridge_density = d;
            }
            cfg.require_strict = args.strict;
            cfg
        }
    };
    let r = generate(&cfg)?;
    rep.set("config", json!(cfg));
    if cfg.require_strict && !is_strict_partition(&r)? {
        return Err(failure(EXIT_INVALID, "generated partition is not strict"));
    }
    emit(args.out.as_deref(), &to_json(&r), out)
}

fn check(file: &Path, fault: Option<Fault>, rep: &mut CommandReport, out: &mut String, style: &Style) -> CmdResult {
    let text = read_input(file, rep)?;
    let value: Value = serde_json::from_str(&text).map_err(|e| failure(EXIT_IO, format!("{}: {e}", file.display())))?;
    let body = value.get("minimized").cloned().unwrap_or(value);
    let r: StabRepresentation =
        serde_json::from_value(body).map_err(|e| failure(EXIT_IO, format!("{}: {e}", file.display())))?;
    let o = checks::check_representation(&r, fault);
    let _ = writeln!(out, "checks {}", o.checks.join(" "));
    if let Some(ce) = &o.label_counterexample {
        let _ = writeln!(out, "label-separation counterexample: {ce}");
    }
    rep.set("outcome", json!(o));
    match o.failure {
        None => {
            let _ = writeln!(out, "result {}", style.ok("ok"));
            Ok(())
        }
        Some(f) => {
            let _ = writeln!(out, "result {} {}: {}", style.bad("FAIL"), f.check, f.detail);
            Err(failure(EXIT_PROPERTY, format!("check {} failed: {}", f.check, f.detail)))
        }
    }
}

fn fuzz_cmd(args: &FuzzArgs, rep: &mut CommandReport, out: &mut String, style: &Style) -> CmdResult {
    let cfg = fuzz::FuzzConfig {
        class: args.class,
        seeds: args.seeds,
        max_n: args.max_n,
        base_seed: args.seed,
        fault: args.inject_fault,
    };
    rep.input_digest = Some(report::digest(cfg.replay_command(cfg.base_seed).as_bytes()));
    let sum = fuzz::run(&cfg);
    out.push_str(&sum.to_text(&cfg));
    rep.set("summary", json!(sum));
    match &sum.failure {
        None => {
            let _ = writeln!(out, "result {}", style.ok("ok"));
            Ok(())
        }
        Some(f) => {
            let repro = json!({
                "seed": f.seed,
                "check": f.finding.check,
                "detail": f.finding.detail,
                "command": f.command,
                "replay": format!("twostab check {}", args.out.display()),
                "representation": f.representation,
                "minimized": f.minimized,
            });
            let body = serde_json::to_string_pretty(&repro).expect("serializable") + "\n";
            std::fs::write(&args.out, body).map_err(|e| failure(EXIT_IO, format!("{}: {e}", args.out.display())))?;
            let _ = writeln!(
                out,
                "result {} seed {} check {}: {}\nrepro {} ({} of {} rectangles kept)",
                style.bad("FAIL"),
                f.seed,
                f.finding.check,
                f.finding.detail,
                args.out.display(),
                f.minimized.len(),
                f.representation.len()
            );
            Err(failure(EXIT_PROPERTY, format!("seed {} failed check {}", f.seed, f.finding.check)))
        }
    }
}
