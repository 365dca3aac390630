mod config;
mod run_dir;

use std::io::{self, BufReader};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use ctt_core::backends::BackendSpec;
use ctt_core::chain::{synthesize, Ablation, CandidateTransform, ChainOutcome};
use ctt_core::corpus::{bundled_seed_dir, lines_of_code, MANIFEST_FILE, generate, generate_corpus, load_corpus, load_seeds, Corpus, CORPUS_VERSION};
use ctt_core::eval::{aggregate, ctt_records, render_markdown, ttc_records, EvalRecord, RunMeta};
use ctt_core::llm::HttpConfig;
use ctt_core::par::{par_map, with_workers, Strategy};
use ctt_core::prompts::PromptSet;
use ctt_core::sandbox::{serve, InProcessSandbox};
use ctt_core::ttc::{rewrite_task, Rewrite};
use ctt_core::TaskId;
use serde::{Deserialize, Serialize};

use config::{parse_backend, parse_tasks, FileConfig, Mode, RunConfig, SandboxSpec};

#[derive(Parser)]
#[command(name = "ctt", version, about = "Synthesize and evaluate Python AST transforms from examples")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Corpus maintenance.
    Corpus {
        #[command(subcommand)]
        command: CorpusCommand,
    },
    /// Synthesize transforms for one or more tasks.
    Synthesize(SynthArgs),
    /// Score a run directory.
    Eval(EvalArgs),
    /// Serve the in-process sandbox over stdin/stdout.
    #[command(hide = true)]
    SandboxShim,
}

#[derive(Subcommand)]
enum CorpusCommand {
    /// Build the example corpus from seed programs.
    Generate {
        /// Comma-separated task ids, or `all`.
        #[arg(long, value_delimiter = ',')]
        tasks: Vec<String>,
        #[arg(long)]
        seeds: Option<PathBuf>,
        #[arg(long, default_value = "corpus")]
        out: PathBuf,
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Args, Clone, Default)]
struct Common {
    /// Task id, comma-separated ids, or `all`.
    #[arg(long = "task", value_delimiter = ',')]
    tasks: Vec<String>,
    /// oracle, echo, http or tape:PATH.
    #[arg(long)]
    backend: Option<String>,
    /// Base URL for the http backend.
    #[arg(long)]
    base_url: Option<String>,
    #[arg(long)]
    model: Option<String>,
    #[arg(long)]
    temperature: Option<f64>,
    #[arg(long)]
    runs: Option<usize>,
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long)]
    config: Option<PathBuf>,
    /// Corpus directory; defaults to regenerating from the bundled seeds.
    #[arg(long)]
    corpus: Option<PathBuf>,
    /// Run transforms in a worker process, e.g. "python3 runner.py".
    #[arg(long)]
    sandbox_cmd: Option<String>,
    #[arg(long, default_value = "runs")]
    runs_root: PathBuf,
    #[arg(long)]
    label: Option<String>,
}

#[derive(Args)]
struct SynthArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    ablation: Option<Ablation>,
    #[arg(long)]
    max_repair: Option<usize>,
    #[arg(long)]
    max_describe: Option<usize>,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long, value_enum)]
    mode: Mode,
    #[arg(long)]
    run_dir: Option<PathBuf>,
    #[command(flatten)]
    common: Common,
}

/// Errors in what the user asked for, as opposed to failures while doing it.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
struct Usage(String);

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Corpus { command: CorpusCommand::Generate { tasks, seeds, out, sequential } } => {
            corpus_generate(&tasks, seeds, &out, sequential)
        }
        Command::Synthesize(args) => cmd_synthesize(args),
        Command::Eval(args) => cmd_eval(args),
        Command::SandboxShim => {
            let stdin = io::stdin();
            serve(&InProcessSandbox::default(), BufReader::new(stdin.lock()), io::stdout().lock())
                .map_err(anyhow::Error::from)
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<Usage>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn strategy_for(workers: Option<usize>) -> Strategy {
    if workers == Some(1) {
        Strategy::Sequential
    } else {
        Strategy::Parallel
    }
}

fn corpus_generate(tasks: &[String], seeds: Option<PathBuf>, out: &Path, sequential: bool) -> anyhow::Result<()> {
    let tasks = parse_tasks(tasks).map_err(usage)?;
    let seeds_dir = seeds.unwrap_or_else(bundled_seed_dir);
    if !seeds_dir.is_dir() {
        return Err(usage(format!("seed directory {} does not exist", seeds_dir.display())));
    }
    let seeds = load_seeds(&seeds_dir)?;
    let strategy = if sequential { Strategy::Sequential } else { Strategy::Parallel };
    let manifest = generate_corpus(&seeds, &tasks, out, strategy)?;
    println!("{} tasks, {} examples", manifest.tasks.len(), manifest.example_count());
    Ok(())
}

fn load_corpus_for(path: Option<&Path>, tasks: &[TaskId]) -> anyhow::Result<Corpus> {
    match path {
        Some(dir) => {
            if !dir.join(MANIFEST_FILE).is_file() {
                return Err(usage(format!("{} is not a corpus directory", dir.display())));
            }
            Ok(load_corpus(dir)?)
        }
        None => Ok(generate(&load_seeds(&bundled_seed_dir())?, tasks, Strategy::Parallel)?),
    }
}

/// Merges defaults, `--config` and flags into a run configuration.
fn build_config(mode: Mode, common: &Common, synth: Option<&SynthArgs>) -> anyhow::Result<RunConfig> {
    let file = match &common.config {
        Some(p) => FileConfig::load(p).map_err(|e| usage(format!("{e:#}")))?,
        None => FileConfig::default(),
    };
    let mut backend = match &common.backend {
        Some(b) => parse_backend(b).map_err(usage)?,
        None => file.backend.clone().unwrap_or(BackendSpec::Oracle),
    };
    if let BackendSpec::Http(http) = &mut backend {
        if let Some(BackendSpec::Http(from_file)) = &file.backend {
            *http = from_file.clone();
        }
        if let Some(url) = &common.base_url {
            http.base_url = url.clone();
        }
    } else if common.base_url.is_some() {
        return Err(usage("--base-url only applies to the http backend"));
    }
    let mut chain = file.chain.clone().unwrap_or_default();
    let mut ttc = file.ttc.clone().unwrap_or_default();
    if let Some(t) = common.temperature {
        if !(0.0..=2.0).contains(&t) {
            return Err(usage(format!("temperature {t} is outside 0..=2")));
        }
        chain.sampling.temperature = t;
        ttc.sampling.temperature = t;
    }
    if let Some(m) = &common.model {
        chain.sampling.model_name = m.clone();
        ttc.sampling.model_name = m.clone();
    }
    if let Some(s) = synth {
        if let Some(a) = s.ablation {
            chain.ablation = a;
        }
        if let Some(n) = s.max_repair {
            chain.max_repair_iters = n;
        }
        if let Some(n) = s.max_describe {
            chain.max_describe_iters = n;
        }
    }
    if chain.max_repair_iters == 0 {
        return Err(usage("--max-repair must be at least 1"));
    }
    let sandbox = match &common.sandbox_cmd {
        Some(cmd) => {
            let command: Vec<String> = cmd.split_whitespace().map(String::from).collect();
            if command.is_empty() {
                return Err(usage("--sandbox-cmd is empty"));
            }
            SandboxSpec::Subprocess { command }
        }
        None => file.sandbox.clone().unwrap_or_default(),
    };
    let runs = common.runs.unwrap_or(1);
    if runs == 0 {
        return Err(usage("--runs must be at least 1"));
    }
    let label = common.label.clone().unwrap_or_else(|| match mode {
        Mode::Ctt => format!("{}-{}", backend.label(), chain.ablation),
        Mode::Ttc => format!("ttc-{}", backend.label()),
    });
    Ok(RunConfig {
        mode,
        label,
        created: chrono::Utc::now().to_rfc3339(),
        tasks: parse_tasks(&common.tasks).map_err(usage)?,
        runs,
        backend,
        chain,
        ttc,
        sandbox,
        corpus: common.corpus.clone().or(file.corpus),
        corpus_version: CORPUS_VERSION.to_string(),
        workers: common.workers.or(file.workers),
    })
}

fn check_backend(spec: &BackendSpec) -> anyhow::Result<()> {
    match spec {
        BackendSpec::Tape { path } if !path.exists() => {
            Err(usage(format!("tape {} does not exist", path.display())))
        }
        BackendSpec::Http(HttpConfig { api_key_env, .. }) if std::env::var(api_key_env).is_err() => {
            Err(usage(format!("the http backend needs an API key in ${api_key_env}")))
        }
        _ => Ok(()),
    }
}

/// One line of `outcomes.jsonl`.
#[derive(Debug, Serialize, Deserialize)]
struct RunOutcome {
    task: TaskId,
    run: usize,
    success: bool,
    attempts: usize,
    llm_calls: usize,
    candidate_loc: Option<usize>,
    reason: Option<String>,
}

fn units(cfg: &RunConfig) -> Vec<(TaskId, usize)> {
    cfg.tasks.iter().flat_map(|&t| (0..cfg.runs).map(move |r| (t, r))).collect()
}

fn cmd_synthesize(args: SynthArgs) -> anyhow::Result<()> {
    let cfg = build_config(Mode::Ctt, &args.common, Some(&args))?;
    check_backend(&cfg.backend)?;
    let corpus = load_corpus_for(cfg.corpus.as_deref(), &cfg.tasks)?;
    let dir = run_dir::create(&args.common.runs_root, &cfg.label)?;
    run_dir::write_json(&dir.join(run_dir::CONFIG), &cfg)?;

    let prompts = PromptSet::default();
    let sandbox = cfg.sandbox.build();
    let strategy = strategy_for(cfg.workers);
    let results = with_workers(cfg.workers, || {
        par_map(strategy, &units(&cfg), |&(task, run)| -> anyhow::Result<RunOutcome> {
            let backend = cfg.backend.build(task)?;
            let t = synthesize(task, &corpus, backend.as_ref(), sandbox.as_ref(), &prompts, &cfg.chain)?;
            let stem = run_dir::stem(task, run);
            run_dir::write(&dir.join(run_dir::TRANSCRIPTS).join(format!("{stem}.jsonl")), &t.to_jsonl())?;
            let (success, reason, loc, llm_calls) = match &t.outcome {
                ChainOutcome::Success { candidate, llm_calls, .. } => {
                    run_dir::write(&dir.join(run_dir::CANDIDATES).join(format!("{stem}.py")), &candidate.source)?;
                    (true, None, Some(candidate.lines_of_code), *llm_calls)
                }
                ChainOutcome::Failure { reason, llm_calls, .. } => (false, Some(reason.clone()), None, *llm_calls),
            };
            Ok(RunOutcome { task, run, success, attempts: t.outcome.attempts(), llm_calls, candidate_loc: loc, reason })
        })
    });
    let outcomes = results.into_iter().collect::<anyhow::Result<Vec<_>>>()?;
    run_dir::write_jsonl(&dir.join(run_dir::OUTCOMES), &outcomes)?;
    for o in &outcomes {
        match &o.reason {
            None => println!("{} run {}: success after {} attempt(s)", o.task, o.run, o.attempts),
            Some(r) => println!("{} run {}: failed after {} attempt(s): {r}", o.task, o.run, o.attempts),
        }
    }
    let ok = outcomes.iter().filter(|o| o.success).count();
    println!("{ok}/{} runs succeeded", outcomes.len());
    println!("run dir: {}", dir.display());
    Ok(())
}

fn cmd_eval(args: EvalArgs) -> anyhow::Result<()> {
    let dir = match (&args.run_dir, args.mode) {
        (Some(d), _) if d.join(run_dir::CONFIG).is_file() => d.clone(),
        (Some(d), Mode::Ctt) => return Err(usage(format!("{} is not a run directory", d.display()))),
        (run_dir_arg, Mode::Ttc) => rewrite_run(run_dir_arg.as_deref(), &args.common)?,
        (None, Mode::Ctt) => return Err(usage("--run-dir is required for ctt mode")),
    };
    let cfg = RunConfig::load(&dir).map_err(|e| usage(format!("{e:#}")))?;
    if cfg.mode != args.mode {
        return Err(usage(format!("{} holds a {:?} run", dir.display(), cfg.mode)));
    }
    let corpus = load_corpus_for(cfg.corpus.as_deref(), &cfg.tasks)?;
    let (records, meta) = match cfg.mode {
        Mode::Ctt => ctt_eval_records(&dir, &cfg, &corpus)?,
        Mode::Ttc => {
            let mut records = Vec::new();
            for (task, run) in units(&cfg) {
                let path = dir.join(run_dir::REWRITES).join(format!("{}.jsonl", run_dir::stem(task, run)));
                let rewrites: Vec<Rewrite> = run_dir::read_jsonl(&path)?;
                records.extend(ttc_records(run, &corpus, &rewrites));
            }
            (records, Vec::new())
        }
    };
    let mode = match cfg.mode {
        Mode::Ctt => "ctt",
        Mode::Ttc => "ttc",
    };
    let report = aggregate(mode, &records, &meta)?;
    let eval_dir = dir.join(run_dir::EVAL);
    run_dir::write_jsonl(&eval_dir.join("records.jsonl"), &records)?;
    run_dir::write_json(&eval_dir.join("report.json"), &report)?;
    let md = render_markdown(&report);
    run_dir::write(&eval_dir.join("report.md"), &md)?;
    print!("{md}");
    Ok(())
}

fn ctt_eval_records(dir: &Path, cfg: &RunConfig, corpus: &Corpus) -> anyhow::Result<(Vec<EvalRecord>, Vec<RunMeta>)> {
    let outcomes: Vec<RunOutcome> = run_dir::read_jsonl(&dir.join(run_dir::OUTCOMES))?;
    let sandbox = cfg.sandbox.build();
    let strategy = strategy_for(cfg.workers);
    let scored = with_workers(cfg.workers, || {
        par_map(strategy, &outcomes, |o| -> anyhow::Result<Vec<EvalRecord>> {
            let candidate = if o.success {
                let path = dir.join(run_dir::CANDIDATES).join(format!("{}.py", run_dir::stem(o.task, o.run)));
                let source = std::fs::read_to_string(&path).with_context(|| format!("cannot read {}", path.display()))?;
                Some(CandidateTransform {
                    lines_of_code: lines_of_code(&source),
                    source,
                    version: o.attempts,
                })
            } else {
                None
            };
            Ok(ctt_records(o.task, o.run, corpus, candidate.as_ref(), sandbox.as_ref(), cfg.chain.timeout_ms)?)
        })
    });
    let mut records = Vec::new();
    for r in scored {
        records.extend(r?);
    }
    let meta = outcomes
        .iter()
        .map(|o| RunMeta { task: o.task, run: o.run, attempts: o.attempts, candidate_loc: o.candidate_loc })
        .collect();
    Ok((records, meta))
}

/// Performs the direct rewrites for a new baseline run and returns its
/// directory.
fn rewrite_run(run_dir_arg: Option<&Path>, common: &Common) -> anyhow::Result<PathBuf> {
    let cfg = build_config(Mode::Ttc, common, None)?;
    check_backend(&cfg.backend)?;
    let corpus = load_corpus_for(cfg.corpus.as_deref(), &cfg.tasks)?;
    let dir = match run_dir_arg {
        Some(d) => {
            std::fs::create_dir_all(d).with_context(|| format!("cannot create {}", d.display()))?;
            d.to_path_buf()
        }
        None => run_dir::create(&common.runs_root, &cfg.label)?,
    };
    run_dir::write_json(&dir.join(run_dir::CONFIG), &cfg)?;
    let prompts = PromptSet::default();
    let strategy = match cfg.backend {
        BackendSpec::Tape { .. } => Strategy::Sequential,
        _ => strategy_for(cfg.workers),
    };
    with_workers(cfg.workers, || -> anyhow::Result<()> {
        for (task, run) in units(&cfg) {
            let backend = cfg.backend.build(task)?;
            let rewrites = rewrite_task(task, &corpus, backend.as_ref(), &prompts, &cfg.ttc, strategy);
            let path = dir.join(run_dir::REWRITES).join(format!("{}.jsonl", run_dir::stem(task, run)));
            run_dir::write_jsonl(&path, &rewrites)?;
        }
        Ok(())
    })?;
    eprintln!("run dir: {}", dir.display());
    Ok(dir)
}
