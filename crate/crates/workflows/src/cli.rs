//! The `crasp` command line: evaluate, translate, verify, synthesize,
//! minimize, learn, benchmark.  Exit codes: 0 success, 1 property refuted
//! (or no fitting program), 2 usage error, 3 undecided.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use crasp_core::trace::run_trace;
use crasp_core::{ast_size, well_formed, Alphabet, Dataset, Program, RuleRow, Word};
use crasp_text::{parse_dataset, parse_source, print_program};
use crasp2lustre::{
    build_unit, emit_lustre_text, parse_lustre_node, sidecar_json, CheckKind, TranslateOptions,
};
use lustre_core::{bounded_check, lval_run, validate_node, CheckOutcome, Sort};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use synthesis::{
    anneal, log_jsonl, prune_unreachable, sample_initial, Schedule, ScoreWeights, Shape,
};
use verifier::{
    bounded_lustre_verify, bounded_verify, kind2_verify, Query, Verdict, VerifierConfig,
};

use crate::bench::{bench, render_json, render_table, BenchOptions, BenchTasks};
use crate::learn::{learn_constrained, LearnOptions};
use crate::minimize::{minimize, MinimizeOptions};

const EXIT_OK: i32 = 0;
const EXIT_REFUTED: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_UNKNOWN: i32 = 3;

#[derive(Parser)]
#[command(
    name = "crasp",
    version,
    about = "Counting programs: evaluate, translate to Lustre, verify, synthesize."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct VerifierArgs {
    /// TOML file with verifier settings (tool path, bound, budgets).
    #[arg(long)]
    config: Option<PathBuf>,
    /// Word-length bound for the bounded backends.
    #[arg(long)]
    bound: Option<usize>,
    /// External-tool time budget, seconds.
    #[arg(long)]
    timeout: Option<u64>,
}

impl VerifierArgs {
    fn build(&self) -> Result<VerifierConfig, String> {
        let base = match &self.config {
            Some(path) => VerifierConfig::from_file(path).map_err(|e| e.to_string())?,
            None => VerifierConfig::default(),
        };
        let mut cfg = base.with_env();
        if let Some(b) = self.bound {
            cfg.bound = b;
        }
        if let Some(t) = self.timeout {
            cfg.timeout_secs = t;
        }
        Ok(cfg)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a program on a word and print the rule-by-position table.
    Eval {
        /// Program file (.crasp).
        program: PathBuf,
        /// Word over the program's alphabet (per-character, or
        /// comma-separated symbols).
        word: String,
    },
    /// Run a Lustre node on an integer stream and print every stream.
    RunLustre {
        /// Node file (.lus) in the emitted dialect.
        node: PathBuf,
        /// Comma-separated integer inputs, e.g. 0,0,1,2.
        input: String,
    },
    /// Translate a program (optionally a check over two) to a Lustre node.
    Translate {
        program: PathBuf,
        /// Property to encode: inclusion, equality, universality, emptiness.
        #[arg(long, default_value = "universality")]
        check: String,
        /// Second program for the binary checks.
        #[arg(long)]
        against: Option<PathBuf>,
        /// Output file for the node text.
        #[arg(short, long)]
        output: PathBuf,
        /// Also write the variable-map sidecar JSON here.
        #[arg(long)]
        sidecar: Option<PathBuf>,
        /// Largest window offset to unroll.
        #[arg(long, default_value_t = 64)]
        max_window: u32,
    },
    /// Decide a property of one or two programs.
    Verify {
        /// inclusion, equality, universality, or emptiness.
        kind: String,
        program: PathBuf,
        /// Second program for the binary kinds.
        program2: Option<PathBuf>,
        /// internal (bounded enumeration), node (bounded via Lustre), or
        /// kind2 (external tool).
        #[arg(long, default_value = "internal")]
        backend: String,
        #[command(flatten)]
        verifier: VerifierArgs,
        /// Print the verdict as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Synthesize a program for a named language or a .samples file.
    Synth {
        /// Catalog language name, or a dataset file path.
        target: String,
        /// Rule budget as `bools,counts,maxconst`.
        #[arg(long, value_parser = parse_shape_arg)]
        shape: Option<Shape>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Annealing iteration budget.
        #[arg(long)]
        budget: Option<u64>,
        /// Sample count when the target is a language name.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Longest sampled word when the target is a language name.
        #[arg(long, default_value_t = 100)]
        max_len: usize,
        /// Alphabet for dataset files: characters, or comma-separated
        /// symbols.
        #[arg(long)]
        alphabet: Option<String>,
        /// Write the search log as JSON lines.
        #[arg(long)]
        log: Option<PathBuf>,
        /// Write the best program here.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Shrink a program while keeping its language, via counterexamples.
    Minimize {
        program: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Refinement round limit.
        #[arg(long)]
        rounds: Option<usize>,
        /// Overall time limit, seconds.
        #[arg(long, default_value_t = 300)]
        time_limit: u64,
        /// Annealing iteration budget per round.
        #[arg(long)]
        budget: Option<u64>,
        #[command(flatten)]
        verifier: VerifierArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Fit a dataset with a program whose language stays inside a
    /// specification program's.
    Learn {
        /// Labeled samples file.
        dataset: PathBuf,
        /// Specification program (.crasp); its alphabet types the dataset.
        spec: PathBuf,
        /// Rule budget as `bools,counts,maxconst` (defaults to the
        /// specification's own shape).
        #[arg(long, value_parser = parse_shape_arg)]
        shape: Option<Shape>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 300)]
        time_limit: u64,
        #[arg(long)]
        budget: Option<u64>,
        #[command(flatten)]
        verifier: VerifierArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the benchmark suite and print a per-language report.
    Bench {
        /// Only `table1` (the full catalog) is defined.
        #[arg(long, default_value = "table1")]
        suite: String,
        /// Comma-separated language names to restrict the suite.
        #[arg(long)]
        langs: Option<String>,
        /// Synthesis seeds tried per language.
        #[arg(long, default_value_t = 5)]
        seeds: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 100)]
        max_len: usize,
        /// Annealing iteration budget for the synthesis task.
        #[arg(long)]
        budget: Option<u64>,
        /// Per-task time limit, seconds.
        #[arg(long, default_value_t = 300)]
        time_limit: u64,
        /// Worker threads across languages.
        #[arg(long)]
        threads: Option<usize>,
        /// Subset of tasks: synthesis,minimize,learn.
        #[arg(long)]
        tasks: Option<String>,
        /// Shape override for the synthesis task.
        #[arg(long, value_parser = parse_shape_arg)]
        shape: Option<Shape>,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn parse_shape_arg(s: &str) -> Result<Shape, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err("expected `bools,counts,maxconst`".into());
    }
    let b: usize = parts[0].parse().map_err(|_| "bools must be a number".to_string())?;
    let c: usize = parts[1].parse().map_err(|_| "counts must be a number".to_string())?;
    let k: i64 = parts[2].parse().map_err(|_| "maxconst must be a number".to_string())?;
    Shape::new(b, c, k).map_err(|e| e.to_string())
}

/// Run the command line; returns the process exit status.
pub fn cli<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            EXIT_USAGE
        }
    }
}

fn read_program(path: &Path) -> Result<Program, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("{}: {e}", path.display()))?;
    let source = parse_source(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let p = source.program;
    if let Err(violations) = well_formed(&p) {
        let lines: Vec<String> = violations.iter().map(ToString::to_string).collect();
        return Err(format!("{}: {}", path.display(), lines.join("; ")));
    }
    Ok(p)
}

fn parse_cli_word(alphabet: &Alphabet, text: &str) -> Result<Word, String> {
    if alphabet.all_single_char() && !text.contains(',') {
        alphabet.word_from_chars(text).map_err(|e| e.to_string())
    } else {
        alphabet.word(text.split(',').map(str::trim)).map_err(|e| e.to_string())
    }
}

fn parse_alphabet(text: &str) -> Result<Alphabet, String> {
    let a = if text.contains(',') {
        Alphabet::new(text.split(',').map(str::trim))
    } else {
        Alphabet::of_chars(text)
    };
    a.map_err(|e| e.to_string())
}

fn parse_check_kind(s: &str) -> Result<CheckKind, String> {
    match s {
        "inclusion" => Ok(CheckKind::Inclusion),
        "equality" => Ok(CheckKind::Equality),
        "universality" => Ok(CheckKind::Universality),
        "emptiness" => Ok(CheckKind::Emptiness),
        other => Err(format!(
            "unknown check kind `{other}` (expected inclusion, equality, universality, or emptiness)"
        )),
    }
}

/// Aligned table: one row per name, one column per position.
fn print_table(header: &[String], rows: &[(String, Vec<String>)]) {
    let name_w = rows.iter().map(|(n, _)| n.len()).max().unwrap_or(0).max(4);
    let mut col_w = vec![0usize; header.len()];
    for (i, h) in header.iter().enumerate() {
        col_w[i] = h.len();
    }
    for (_, cells) in rows {
        for (i, c) in cells.iter().enumerate() {
            col_w[i] = col_w[i].max(c.len());
        }
    }
    let mut line = format!("{:<name_w$}", "");
    for (i, h) in header.iter().enumerate() {
        line.push_str(&format!("  {:>w$}", h, w = col_w[i]));
    }
    println!("{line}");
    for (name, cells) in rows {
        let mut line = format!("{name:<name_w$}");
        for (i, c) in cells.iter().enumerate() {
            line.push_str(&format!("  {:>w$}", c, w = col_w[i]));
        }
        println!("{line}");
    }
}

fn row_cells(row: &RuleRow) -> Vec<String> {
    match row {
        RuleRow::Bool(v) => v.iter().map(|b| if *b { "T".into() } else { "F".into() }).collect(),
        RuleRow::Int(v) => v.iter().map(ToString::to_string).collect(),
    }
}

fn cmd_eval(program: &Path, word: &str) -> Result<i32, String> {
    let p = read_program(program)?;
    let w = parse_cli_word(&p.alphabet, word)?;
    let trace = run_trace(&p, &w).map_err(|e| e.to_string())?;
    let header: Vec<String> = w.ids().iter().map(|&id| p.alphabet.symbol(id).to_string()).collect();
    let rows: Vec<(String, Vec<String>)> = trace
        .names()
        .iter()
        .zip(trace.rows())
        .map(|(n, r)| (n.clone(), row_cells(r)))
        .collect();
    print_table(&header, &rows);
    let accepted = trace.accepted().map_err(|e| e.to_string())?;
    println!("{}", if accepted { "accepted" } else { "rejected" });
    Ok(if accepted { EXIT_OK } else { EXIT_REFUTED })
}

fn cmd_run_lustre(node_path: &Path, input: &str) -> Result<i32, String> {
    let text = std::fs::read_to_string(node_path)
        .map_err(|e| format!("{}: {e}", node_path.display()))?;
    let node = parse_lustre_node(&text).map_err(|e| e.to_string())?;
    validate_node(&node).map_err(|e| e.to_string())?;
    let stream: Vec<i64> = input
        .split(',')
        .map(|s| s.trim().parse::<i64>().map_err(|_| format!("bad input value `{s}`")))
        .collect::<Result<_, _>>()?;
    let trace = lval_run(&node, &stream).map_err(|e| e.to_string())?;
    let header: Vec<String> = (1..=stream.len()).map(|i| i.to_string()).collect();
    let mut rows = vec![("I".to_string(), stream.iter().map(ToString::to_string).collect())];
    for eq in &node.equations {
        let cells = match node.sort_of(&eq.var) {
            Some(Sort::Bool) => trace
                .bool_values(&eq.var)
                .map(|v| v.iter().map(|b| if *b { "T".into() } else { "F".into() }).collect()),
            Some(Sort::Int) => {
                trace.int_values(&eq.var).map(|v| v.iter().map(ToString::to_string).collect())
            }
            None => None,
        };
        rows.push((eq.var.clone(), cells.unwrap_or_default()));
    }
    print_table(&header, &rows);
    match bounded_check(&node, [stream.as_slice()]).map_err(|e| e.to_string())? {
        CheckOutcome::Ok => {
            println!("check: ok");
            Ok(EXIT_OK)
        }
        CheckOutcome::Violation { position, .. } => {
            println!("check: violated at position {}", position + 1);
            Ok(EXIT_REFUTED)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_translate(
    program: &Path,
    check: &str,
    against: Option<&Path>,
    output: &Path,
    sidecar: Option<&Path>,
    max_window: u32,
) -> Result<i32, String> {
    let p1 = read_program(program)?;
    let p2 = against.map(read_program).transpose()?;
    let kind = parse_check_kind(check)?;
    let unit = build_unit(&p1, p2.as_ref(), kind, &TranslateOptions { max_window })
        .map_err(|e| e.to_string())?;
    std::fs::write(output, emit_lustre_text(&unit))
        .map_err(|e| format!("{}: {e}", output.display()))?;
    if let Some(path) = sidecar {
        std::fs::write(path, sidecar_json(&unit)).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    println!("wrote {}", output.display());
    Ok(EXIT_OK)
}

fn describe_verdict(v: &Verdict, q: &Query) {
    match v {
        Verdict::Valid { source } => println!("valid ({})", source.name()),
        Verdict::Counterexample { word, backend } => {
            println!(
                "counterexample ({}): {}",
                backend.name(),
                q.p1.alphabet.display_word(word)
            );
        }
        Verdict::Unknown { reason } => println!("unknown ({})", reason.label()),
    }
}

fn verdict_exit(v: &Verdict) -> i32 {
    match v {
        Verdict::Valid { .. } => EXIT_OK,
        Verdict::Counterexample { .. } => EXIT_REFUTED,
        Verdict::Unknown { .. } => EXIT_UNKNOWN,
    }
}

fn cmd_verify(
    kind: &str,
    program: &Path,
    program2: Option<&Path>,
    backend: &str,
    verifier: &VerifierArgs,
    json: bool,
) -> Result<i32, String> {
    let kind = parse_check_kind(kind)?;
    let p1 = read_program(program)?;
    let p2 = program2.map(read_program).transpose()?;
    let q = Query::new(kind, p1, p2).map_err(|e| e.to_string())?;
    let cfg = verifier.build()?;
    let verdict = match backend {
        "internal" => bounded_verify(&q, &cfg),
        "node" | "bounded-node" => bounded_lustre_verify(&q, &cfg),
        "kind2" | "external" => kind2_verify(&q, &cfg),
        other => return Err(format!("unknown backend `{other}` (expected internal, node, or kind2)")),
    };
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&verdict.render_json(&q)).map_err(|e| e.to_string())?
        );
    } else {
        describe_verdict(&verdict, &q);
    }
    Ok(verdict_exit(&verdict))
}

#[allow(clippy::too_many_arguments)]
fn cmd_synth(
    target: &str,
    shape: Option<Shape>,
    seed: u64,
    budget: Option<u64>,
    samples: usize,
    max_len: usize,
    alphabet: Option<&str>,
    log: Option<&Path>,
    output: Option<&Path>,
) -> Result<i32, String> {
    let dataset: Dataset = if let Some(lang) = benchlang::find(target) {
        let cfg = benchlang::SamplerConfig {
            count: samples,
            min_len: None,
            max_len,
            seed,
        };
        let sampled = benchlang::sample_dataset(&lang, &cfg).map_err(|e| e.to_string())?;
        for warning in &sampled.warnings {
            eprintln!("warning: {warning}");
        }
        sampled.dataset
    } else if Path::new(target).exists() {
        let a = alphabet
            .ok_or("dataset files need --alphabet to fix the symbol order")
            .map(parse_alphabet)??;
        let text = std::fs::read_to_string(target).map_err(|e| format!("{target}: {e}"))?;
        parse_dataset(&text, &a).map_err(|e| format!("{target}: {e}"))?
    } else {
        return Err(format!("`{target}` is neither a catalog language nor a file"));
    };
    let shape = shape.unwrap_or_else(|| Shape::new(3, 2, 2).expect("static shape"));
    let schedule = Schedule {
        budget: budget.unwrap_or(Schedule::default().budget),
        ..Schedule::default()
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p0 = sample_initial(&shape, dataset.alphabet(), &mut rng);
    let run = anneal(p0, &dataset, &shape, &ScoreWeights::default(), &schedule, &mut rng)
        .map_err(|e| e.to_string())?;
    let best = prune_unreachable(&run.best);
    let text = print_program(&best);
    if let Some(path) = output {
        std::fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    if let Some(path) = log {
        let mut file = std::fs::File::create(path).map_err(|e| format!("{}: {e}", path.display()))?;
        log_jsonl(&run.log, &mut file).map_err(|e| e.to_string())?;
    }
    print!("{text}");
    println!(
        "# misclassified {} of {} after {} iterations (size {})",
        run.best_score.mis,
        dataset.len(),
        run.iterations,
        ast_size(&best),
    );
    Ok(if run.best_score.mis == 0 { EXIT_OK } else { EXIT_REFUTED })
}

fn settled_exit(v: &Verdict) -> i32 {
    if v.is_valid() {
        EXIT_OK
    } else {
        EXIT_UNKNOWN
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_minimize(
    program: &Path,
    seed: u64,
    rounds: Option<usize>,
    time_limit: u64,
    budget: Option<u64>,
    verifier: &VerifierArgs,
    output: Option<&Path>,
) -> Result<i32, String> {
    let p_spec = read_program(program)?;
    let mut opts = MinimizeOptions::new(seed);
    opts.refine.timeout = Duration::from_secs(time_limit);
    if let Some(r) = rounds {
        opts.refine.round_limit = r;
    }
    if let Some(b) = budget {
        opts.refine.schedule.budget = b;
    }
    opts.refine.verifier = verifier.build()?;
    let m = minimize(&p_spec, &opts).map_err(|e| e.to_string())?;
    let text = print_program(&m.program);
    if let Some(path) = output {
        std::fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    print!("{text}");
    println!(
        "# size {} (input {}), {} rounds, {}; equality: {}",
        ast_size(&m.program),
        ast_size(&p_spec),
        m.run.rounds.len(),
        m.run.termination.label(),
        if m.status.is_valid() { "valid" } else { "tentative" },
    );
    if let Some(note) = &m.run.note {
        println!("# note: {note}");
    }
    Ok(settled_exit(&m.status))
}

#[allow(clippy::too_many_arguments)]
fn cmd_learn(
    dataset: &Path,
    spec: &Path,
    shape: Option<Shape>,
    seed: u64,
    time_limit: u64,
    budget: Option<u64>,
    verifier: &VerifierArgs,
    output: Option<&Path>,
) -> Result<i32, String> {
    let p_spec = read_program(spec)?;
    let text = std::fs::read_to_string(dataset).map_err(|e| format!("{}: {e}", dataset.display()))?;
    let d = parse_dataset(&text, &p_spec.alphabet).map_err(|e| format!("{}: {e}", dataset.display()))?;
    let mut opts = LearnOptions::new(seed);
    opts.shape = shape;
    opts.refine.timeout = Duration::from_secs(time_limit);
    if let Some(b) = budget {
        opts.refine.schedule.budget = b;
    }
    opts.refine.verifier = verifier.build()?;
    let learned = learn_constrained(&d, &p_spec, &opts).map_err(|e| e.to_string())?;
    let text = print_program(&learned.program);
    if let Some(path) = output {
        std::fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    print!("{text}");
    println!(
        "# misclassified {} of {}, {} rounds, {}; inclusion: {}",
        learned.mis,
        learned.dataset.len(),
        learned.run.rounds.len(),
        learned.run.termination.label(),
        if learned.status.is_valid() { "valid" } else { "tentative" },
    );
    if learned.mis > 0 {
        return Ok(EXIT_REFUTED);
    }
    Ok(settled_exit(&learned.status))
}

#[allow(clippy::too_many_arguments)]
fn cmd_bench(
    suite: &str,
    langs: Option<&str>,
    seeds: u64,
    seed: u64,
    samples: usize,
    max_len: usize,
    budget: Option<u64>,
    time_limit: u64,
    threads: Option<usize>,
    tasks: Option<&str>,
    shape: Option<Shape>,
    json: Option<&Path>,
) -> Result<i32, String> {
    if suite != "table1" {
        return Err(format!("unknown suite `{suite}` (only table1 is defined)"));
    }
    let mut selected = benchlang::catalog();
    if let Some(names) = langs {
        let mut keep = Vec::new();
        for name in names.split(',').map(str::trim) {
            let lang = benchlang::find(name).ok_or_else(|| format!("unknown language `{name}`"))?;
            keep.push(lang);
        }
        selected = keep;
    }
    let mut opts = BenchOptions {
        base_seed: seed,
        seeds,
        samples,
        max_len,
        timeout: Duration::from_secs(time_limit),
        shape,
        ..BenchOptions::default()
    };
    if let Some(b) = budget {
        opts.schedule.budget = b;
    }
    if let Some(t) = threads {
        opts.threads = t;
    }
    if let Some(list) = tasks {
        let mut t = BenchTasks { synthesis: false, minimize: false, learn: false };
        for item in list.split(',').map(str::trim) {
            match item {
                "synthesis" => t.synthesis = true,
                "minimize" => t.minimize = true,
                "learn" => t.learn = true,
                other => return Err(format!("unknown task `{other}`")),
            }
        }
        opts.tasks = t;
    }
    let rows = bench(&selected, &opts);
    print!("{}", render_table(&rows));
    if let Some(path) = json {
        let report = serde_json::to_string_pretty(&render_json(&rows)).map_err(|e| e.to_string())?;
        std::fs::write(path, report).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(EXIT_OK)
}

fn run(command: Command) -> Result<i32, String> {
    match command {
        Command::Eval { program, word } => cmd_eval(&program, &word),
        Command::RunLustre { node, input } => cmd_run_lustre(&node, &input),
        Command::Translate { program, check, against, output, sidecar, max_window } => {
            cmd_translate(&program, &check, against.as_deref(), &output, sidecar.as_deref(), max_window)
        }
        Command::Verify { kind, program, program2, backend, verifier, json } => {
            cmd_verify(&kind, &program, program2.as_deref(), &backend, &verifier, json)
        }
        Command::Synth { target, shape, seed, budget, samples, max_len, alphabet, log, output } => {
            cmd_synth(
                &target,
                shape,
                seed,
                budget,
                samples,
                max_len,
                alphabet.as_deref(),
                log.as_deref(),
                output.as_deref(),
            )
        }
        Command::Minimize { program, seed, rounds, time_limit, budget, verifier, output } => {
            cmd_minimize(&program, seed, rounds, time_limit, budget, &verifier, output.as_deref())
        }
        Command::Learn { dataset, spec, shape, seed, time_limit, budget, verifier, output } => {
            cmd_learn(
                &dataset,
                &spec,
                shape,
                seed,
                time_limit,
                budget,
                &verifier,
                output.as_deref(),
            )
        }
        Command::Bench {
            suite,
            langs,
            seeds,
            seed,
            samples,
            max_len,
            budget,
            time_limit,
            threads,
            tasks,
            shape,
            json,
        } => cmd_bench(
            &suite,
            langs.as_deref(),
            seeds,
            seed,
            samples,
            max_len,
            budget,
            time_limit,
            threads,
            tasks.as_deref(),
            shape,
            json.as_deref(),
        ),
    }
}
