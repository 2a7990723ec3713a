use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use maxgenus_core::critical::{algorithm_one, algorithm_two, CriticalError, ReductionTrace};
use maxgenus_core::engine::{max_genus_exhaustive, EngineError, GenusReport, SearchConfig};
use maxgenus_core::families::{fig1_fixture, fig3_fixture, generate, validate_family, FamilyError, FamilySpec};
use maxgenus_core::graph::{EdgeId, Multigraph, TreeStrategy};
use maxgenus_core::jointree::{associated_surface, enumerate_rotations, face_trace_genus, RotationSystem};
use maxgenus_core::surface::{parse_word, reduce_to_standard};
use maxgenus_core::verify::{run_suite, VerifyError, SUITES};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "maxgenus", version, about = "Maximum genus of multigraphs via joint-trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a polygon word to standard form.
    Reduce {
        /// Whitespace-separated letters, `a` or `a^-1`.
        word: String,
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Maximum genus of a graph.
    MaxGenus(MaxGenusArgs),
    /// Associated surface of one joint-tree.
    JointTree(JointTreeArgs),
    /// Emit a family graph as an edge list.
    Family {
        spec: String,
        /// Write the label sidecar JSON here.
        #[arg(long)]
        labels: Option<PathBuf>,
        /// Print degree and Betti facts instead of the edge list.
        #[arg(long)]
        report: bool,
    },
    /// Run a property suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        range: Option<String>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Edge-list file.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Family, e.g. `mobius:3`, `spiral:5,6`, `extspiral:5,6:13-14`.
    #[arg(long)]
    family: Option<String>,
}

#[derive(Args)]
struct EngineArgs {
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long)]
    no_early_exit: bool,
    /// Enumerate past the system budget.
    #[arg(long)]
    force: bool,
    #[arg(long)]
    budget: Option<u128>,
    /// Cross-check face tracing against word reduction every k systems.
    #[arg(long, default_value_t = 0)]
    cross_check: u64,
}

impl EngineArgs {
    fn config(&self) -> SearchConfig {
        let mut c = SearchConfig {
            early_exit: !self.no_early_exit,
            jobs: self.jobs,
            force: self.force,
            cross_check_every: self.cross_check,
            ..SearchConfig::default()
        };
        if let Some(b) = self.budget {
            c.budget = b;
        }
        c
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Brute,
    Alg1,
    Alg2,
}

#[derive(Args)]
struct MaxGenusArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long, value_enum, default_value_t = Method::Brute)]
    method: Method,
    /// Also run the exhaustive search and compare totals.
    #[arg(long)]
    check: bool,
    #[command(flatten)]
    engine: EngineArgs,
    #[arg(long)]
    json: bool,
    /// Report `elapsed_ms` as 0.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Fixture {
    Fig1,
    Fig3,
}

#[derive(Args)]
struct JointTreeArgs {
    #[arg(long, conflicts_with_all = ["input", "family"])]
    fixture: Option<Fixture>,
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    family: Option<String>,
    /// Comma-separated tree edge ids; breadth-first tree by default.
    #[arg(long)]
    tree: Option<String>,
    /// Rotation system file (`v: e.s …` lines).
    #[arg(long, conflicts_with = "index")]
    rotation: Option<PathBuf>,
    /// Rotation system by enumeration index.
    #[arg(long)]
    index: Option<u128>,
    #[arg(long)]
    json: bool,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl ToString) -> Self {
        Failure {
            code: 2,
            message: message.to_string(),
        }
    }

    fn violation(message: impl ToString) -> Self {
        Failure {
            code: 4,
            message: message.to_string(),
        }
    }
}

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Self {
        let code = match e {
            EngineError::Budget { .. } => 3,
            EngineError::CrossCheck { .. } | EngineError::EulerBound { .. } => 4,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<CriticalError> for Failure {
    fn from(e: CriticalError) -> Self {
        match e {
            CriticalError::Engine(e) => e.into(),
            other => Failure::input(other),
        }
    }
}

impl From<FamilyError> for Failure {
    fn from(e: FamilyError) -> Self {
        Failure::input(e)
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Engine(e) => e.into(),
            VerifyError::Critical(e) => e.into(),
            other => Failure::input(other),
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Reduce { word, trace, json } => reduce(&word, trace, json),
        Command::MaxGenus(args) => max_genus(&args),
        Command::JointTree(args) => joint_tree(&args),
        Command::Family { spec, labels, report } => family(&spec, labels, report),
        Command::Verify {
            suite,
            range,
            seed,
            engine,
            json,
        } => verify(&suite, range.as_deref(), seed, &engine, json),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json value"));
}

fn reduce(text: &str, trace: bool, json: bool) -> Outcome {
    let word = parse_word(text).map_err(Failure::input)?;
    let form = reduce_to_standard(&word).map_err(Failure::violation)?;
    if json {
        let steps: Vec<String> = form.trace_log().lines().map(str::to_string).collect();
        print_json(&json!({
            "genus": form.genus,
            "standard": form.word.to_string(),
            "trace": if trace { steps } else { Vec::new() },
        }));
    } else {
        println!("genus={}", form.genus);
        println!("standard={}", form.word);
        if trace {
            print!("{}", form.trace_log());
        }
    }
    Ok(())
}

fn load_graph(input: Option<&PathBuf>, family: Option<&str>) -> Result<(Multigraph, Option<FamilySpec>), Failure> {
    match (input, family) {
        (Some(path), None) => {
            let text = fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
            Ok((Multigraph::parse_edge_list(&text).map_err(Failure::input)?, None))
        }
        (None, Some(spec)) => {
            let spec: FamilySpec = spec.parse()?;
            Ok((generate(&spec)?.graph, Some(spec)))
        }
        _ => Err(Failure::input("give exactly one of --input and --family")),
    }
}

fn report_text(r: &GenusReport) {
    println!(
        "vertices={} edges={} betti={} euler_bound={}",
        r.vertices, r.edges, r.betti, r.euler_bound
    );
    println!("max_genus={} upper_embeddable={}", r.max_genus, r.upper_embeddable);
    println!(
        "systems_enumerated={} early_exit={} elapsed_ms={}",
        r.systems_enumerated, r.early_exit, r.elapsed_ms
    );
    for line in r.witness.to_lines() {
        println!("witness {line}");
    }
}

fn trace_text(t: &ReductionTrace) {
    for s in &t.steps {
        let kind = serde_json::to_value(s.kind).expect("kind");
        println!(
            "step {} {}{} -> v={} e={}",
            kind.as_str().unwrap_or("?"),
            s.vertex,
            if s.counted { "" } else { " (uncounted)" },
            s.graph_after.v,
            s.graph_after.e
        );
    }
    println!("base_genus={} total={}", t.base_genus, t.total);
}

fn max_genus(args: &MaxGenusArgs) -> Outcome {
    let (g, spec) = load_graph(args.source.input.as_ref(), args.source.family.as_deref())?;
    let config = args.engine.config();
    let brute = || -> Result<GenusReport, Failure> {
        let mut r = max_genus_exhaustive(&g, &config)?;
        if args.no_timing {
            r.elapsed_ms = 0;
        }
        Ok(r)
    };
    let trace = match args.method {
        Method::Brute => {
            let r = brute()?;
            if args.json {
                print_json(&serde_json::to_value(&r).expect("report"));
            } else {
                report_text(&r);
            }
            return Ok(());
        }
        Method::Alg1 => algorithm_one(&g, &config)?,
        Method::Alg2 => {
            let spec = spec.ok_or_else(|| Failure::input("alg2 needs a labelled --family spiral or extspiral"))?;
            algorithm_two(&generate(&spec)?)?
        }
    };
    let bound = g.betti().map_err(Failure::input)? / 2;
    if trace.total > bound {
        return Err(Failure::violation(format!("total {} exceeds the Euler bound {bound}", trace.total)));
    }
    let oracle = if args.check { Some(brute()?.max_genus) } else { None };
    if args.json {
        let mut v = serde_json::to_value(&trace).expect("trace");
        if let Some(o) = oracle {
            v["check"] = json!({ "oracle": o, "agree": o == trace.total });
        }
        print_json(&v);
    } else {
        trace_text(&trace);
        if let Some(o) = oracle {
            println!("check={} oracle={o}", if o == trace.total { "pass" } else { "fail" });
        }
    }
    match oracle {
        Some(o) if o != trace.total => Err(Failure::violation(format!("total {} but oracle {o}", trace.total))),
        _ => Ok(()),
    }
}

fn joint_tree(args: &JointTreeArgs) -> Outcome {
    let (g, tree, rotation) = match args.fixture {
        Some(which) => {
            let fx = match which {
                Fixture::Fig1 => fig1_fixture()?,
                Fixture::Fig3 => fig3_fixture()?,
            };
            (fx.graph, fx.tree, fx.rotation)
        }
        None => {
            let (g, _) = load_graph(args.input.as_ref(), args.family.as_deref())?;
            let strategy = match &args.tree {
                None => TreeStrategy::Search,
                Some(list) => TreeStrategy::Explicit(
                    list.split(',')
                        .map(|t| t.trim().parse().map(EdgeId))
                        .collect::<Result<_, _>>()
                        .map_err(|_| Failure::input(format!("bad tree list `{list}`")))?,
                ),
            };
            let tree = g.spanning_tree(&strategy).map_err(Failure::input)?;
            let rotation = match (&args.rotation, args.index) {
                (Some(path), _) => {
                    let text = fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
                    RotationSystem::parse(&text).map_err(Failure::input)?
                }
                (None, index) => {
                    let index = index.unwrap_or(0);
                    enumerate_rotations(&g)
                        .nth(index)
                        .ok_or_else(|| Failure::input(format!("rotation index {index} out of range")))?
                }
            };
            (g, tree, rotation)
        }
    };
    let surface = associated_surface(&g, &tree, &rotation).map_err(Failure::input)?;
    let reduced = reduce_to_standard(&surface.word).map_err(Failure::violation)?.genus;
    let traced = face_trace_genus(&g, &rotation).map_err(Failure::input)?;
    if args.json {
        print_json(&json!({
            "word": surface.word.to_string(),
            "word_genus": reduced,
            "face_genus": traced,
            "rotation": rotation.to_lines(),
        }));
    } else {
        println!("word={}", surface.word);
        println!("word_genus={reduced} face_genus={traced}");
        for line in rotation.to_lines() {
            println!("rotation {line}");
        }
    }
    if reduced != traced {
        return Err(Failure::violation("associated surface and face tracing disagree"));
    }
    Ok(())
}

fn family(spec: &str, labels: Option<PathBuf>, report: bool) -> Outcome {
    let spec: FamilySpec = spec.parse()?;
    let f = generate(&spec)?;
    if report {
        print_json(&serde_json::to_value(validate_family(&f.graph)?).expect("report"));
    } else {
        print!("{}", f.graph.to_edge_list());
    }
    if let Some(path) = labels {
        fs::write(&path, f.labels_json() + "\n").map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn verify(suite: &str, range: Option<&str>, seed: u64, engine: &EngineArgs, json: bool) -> Outcome {
    if !SUITES.contains(&suite) {
        return Err(Failure::input(format!("unknown suite `{suite}`; one of {}", SUITES.join(", "))));
    }
    let out = run_suite(suite, range, seed, &engine.config())?;
    if json {
        print_json(&serde_json::to_value(&out).expect("outcome"));
    } else {
        println!(
            "suite={} checked={} failures={} {}",
            out.suite,
            out.checked,
            out.failures.len(),
            if out.passed() { "pass" } else { "FAIL" }
        );
        for note in &out.notes {
            println!("  {note}");
        }
        for failure in &out.failures {
            println!("  counterexample: {failure}");
        }
    }
    if out.passed() {
        Ok(())
    } else {
        Err(Failure::violation(format!("{} counterexamples", out.failures.len())))
    }
}
