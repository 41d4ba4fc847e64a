//! `focalforge`: mine test-to-focal-method pairs from Java repositories,
//! render focal-context corpora, and evaluate candidate test cases.

mod schemas;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use focalforge::config::PipelineConfig;
use focalforge::context::ContextLevel;
use focalforge::corpus::{self, DedupMode};
use focalforge::harness::{self, RunnerConfig};
use focalforge::ingredients;
use focalforge::jsonl;
use focalforge::mine::{self, MiningCounts, MiningReport};
use focalforge::pair::MappedPair;
use focalforge::validator::{self, ApiCatalog, Candidate};

#[derive(Parser)]
#[command(
    name = "focalforge",
    version,
    about = "Mine Java test-to-focal-method pairs, build focal-context corpora, and evaluate candidate tests",
    propagate_version = true
)]
struct Cli {
    /// Pipeline config TOML; command-line flags override its values.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Parallel job limit, 0 = one per CPU. FOCALFORGE_JOBS overrides.
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Mine one repository (or a directory of repositories) into mapped pairs
    #[command(after_help = schemas::PAIRS_SCHEMA)]
    Mine(MineArgs),
    /// Attach a focal-context rendering to each pair under a token budget
    #[command(after_help = format!("{}\n\n{}", schemas::LEVELS_HELP, schemas::PAIRS_SCHEMA))]
    Render(RenderArgs),
    /// Deduplicate pairs and build the repo-disjoint train/validation/test split
    #[command(after_help = schemas::PAIRS_SCHEMA)]
    Split(SplitArgs),
    /// Token-overlap statistics between context levels and test cases
    #[command(after_help = format!("{}\n\n{}", schemas::LEVELS_HELP, schemas::PAIRS_SCHEMA))]
    Analyze(AnalyzeArgs),
    /// Check candidate test cases: syntax, repair, annotations, API usage
    #[command(after_help = format!("{}\n\n{}\n\n{}", schemas::CANDIDATES_SCHEMA, schemas::PAIRS_SCHEMA, schemas::VALIDATION_SCHEMA))]
    Validate(ValidateArgs),
    /// Compile, run, and classify candidates into verdict categories
    #[command(after_help = format!("{}\n\n{}", schemas::CANDIDATES_SCHEMA, schemas::VERDICTS_SCHEMA))]
    Evaluate(EvaluateArgs),
    /// Aggregate verdicts into per-category and per-method statistics
    #[command(after_help = schemas::VERDICTS_SCHEMA)]
    Report(ReportArgs),
}

#[derive(Args)]
struct MineArgs {
    /// Repository root (with --multi: a directory whose children are repos)
    root: PathBuf,
    /// Output pairs file
    #[arg(long, value_name = "FILE", default_value = "pairs.jsonl")]
    out: PathBuf,
    /// Mining report (counts, parse failures, discard reasons)
    #[arg(long, value_name = "FILE")]
    report: Option<PathBuf>,
    /// Repository id recorded in pairs (default: root directory name)
    #[arg(long, value_name = "ID", conflicts_with = "multi")]
    repo_id: Option<String>,
    /// Treat each immediate subdirectory of ROOT as one repository
    #[arg(long)]
    multi: bool,
    /// Write pairs to stdout instead of --out
    #[arg(long)]
    stdout: bool,
}

#[derive(Args)]
struct RenderArgs {
    /// Input pairs file
    #[arg(long, value_name = "FILE")]
    pairs: PathBuf,
    /// Output pairs file with contexts attached
    #[arg(long, value_name = "FILE", default_value = "contexts.jsonl")]
    out: PathBuf,
    /// Context level id
    #[arg(long, value_name = "LEVEL", default_value = "fm+fc+c+m+f")]
    level: String,
    /// Token budget (default from config, 1024)
    #[arg(long, value_name = "N")]
    budget: Option<usize>,
    /// Write renderings to stdout instead of --out
    #[arg(long)]
    stdout: bool,
}

#[derive(Args)]
struct SplitArgs {
    /// Input pairs file
    #[arg(long, value_name = "FILE")]
    pairs: PathBuf,
    /// Directory for train.jsonl / validation.jsonl / test.jsonl
    #[arg(long, value_name = "DIR", default_value = ".")]
    out_dir: PathBuf,
    /// Three comma-separated pair fractions, e.g. 0.8,0.1,0.1
    #[arg(long, value_name = "A,B,C")]
    fractions: Option<String>,
    /// Shuffle seed
    #[arg(long, value_name = "N")]
    seed: Option<u64>,
    /// Duplicate handling before the split
    #[arg(long, value_enum, value_name = "MODE")]
    dedup_mode: Option<DedupArg>,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Input pairs file
    #[arg(long, value_name = "FILE")]
    pairs: PathBuf,
    /// `all` or comma-separated level ids
    #[arg(long, value_name = "LEVELS", default_value = "all")]
    levels: String,
    /// Statistics report (JSON)
    #[arg(long, value_name = "FILE", default_value = "stats.json")]
    out: PathBuf,
    /// Plot-ready per-pair counts (CSV)
    #[arg(long, value_name = "FILE")]
    csv: Option<PathBuf>,
    /// Multiset overlap instead of set semantics
    #[arg(long)]
    multiset: bool,
}

#[derive(Args)]
struct ValidateArgs {
    /// Candidate file
    #[arg(long, value_name = "FILE")]
    candidates: PathBuf,
    /// Pairs file for focal-method lookup and the original-test population
    #[arg(long, value_name = "FILE")]
    pairs: Option<PathBuf>,
    /// Output validation records
    #[arg(long, value_name = "FILE", default_value = "validation.jsonl")]
    out: PathBuf,
    /// Testing-API profile comparison (original vs candidates, JSON)
    #[arg(long, value_name = "FILE")]
    profile: Option<PathBuf>,
    /// Extra testing-API lists (JSON: {"framework": ["api", ...]})
    #[arg(long, value_name = "FILE")]
    apis: Option<PathBuf>,
}

#[derive(Args)]
struct EvaluateArgs {
    /// Candidate file
    #[arg(long, value_name = "FILE")]
    candidates: PathBuf,
    /// Project directory, exposed to command templates as {project}
    #[arg(long, value_name = "DIR")]
    project: Option<PathBuf>,
    /// Runner config TOML (compile/test command templates, timeout, scaffold)
    #[arg(long, value_name = "FILE")]
    runner: PathBuf,
    /// Output verdicts
    #[arg(long, value_name = "FILE", default_value = "verdicts.jsonl")]
    out: PathBuf,
    /// Aggregated summary (JSON)
    #[arg(long, value_name = "FILE")]
    summary: Option<PathBuf>,
    /// Pairs file for focal targets (enables coverage-based correctness)
    #[arg(long, value_name = "FILE")]
    pairs: Option<PathBuf>,
    /// Parent directory for per-candidate workdirs (default: temp dir)
    #[arg(long, value_name = "DIR")]
    workdir: Option<PathBuf>,
    /// Label used in the printed summary table
    #[arg(long, value_name = "NAME", default_value = "project")]
    label: String,
}

#[derive(Args)]
struct ReportArgs {
    /// Verdicts file
    #[arg(long, value_name = "FILE")]
    verdicts: PathBuf,
    /// Pairs file; focal methods without candidates are reported
    #[arg(long, value_name = "FILE")]
    pairs: Option<PathBuf>,
    /// Summary output (JSON)
    #[arg(long, value_name = "FILE", default_value = "summary.json")]
    out: PathBuf,
    /// Print the results table to stdout
    #[arg(long)]
    table: bool,
    /// Label used in the table
    #[arg(long, value_name = "NAME", default_value = "project")]
    label: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DedupArg {
    Normalized,
    Raw,
    Off,
}

fn main() {
    let cli = Cli::parse();
    if let Err(err) = run(cli) {
        eprintln!("error: {err:#}");
        std::process::exit(1);
    }
}

fn run(cli: Cli) -> Result<()> {
    let config = match &cli.config {
        Some(path) => PipelineConfig::from_toml_file(path)
            .with_context(|| format!("loading config {}", path.display()))?,
        None => PipelineConfig::default(),
    };

    let jobs = std::env::var("FOCALFORGE_JOBS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .or(cli.jobs)
        .unwrap_or(config.jobs);
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build_global()
        .ok();

    match cli.command {
        Command::Mine(args) => cmd_mine(args),
        Command::Render(args) => cmd_render(args, &config),
        Command::Split(args) => cmd_split(args, &config),
        Command::Analyze(args) => cmd_analyze(args, &config),
        Command::Validate(args) => cmd_validate(args, &config),
        Command::Evaluate(args) => cmd_evaluate(args),
        Command::Report(args) => cmd_report(args),
    }
}

fn write_pairs_output(pairs: &[MappedPair], out: &Path, stdout: bool) -> Result<()> {
    if stdout {
        let mut buf = String::new();
        for pair in pairs {
            buf.push_str(&serde_json::to_string(pair)?);
            buf.push('\n');
        }
        print!("{buf}");
        Ok(())
    } else {
        jsonl::write_jsonl(pairs, out)?;
        Ok(())
    }
}

fn cmd_mine(args: MineArgs) -> Result<()> {
    let (pairs, reports) = if args.multi {
        let mut roots: Vec<(String, PathBuf)> = std::fs::read_dir(&args.root)
            .with_context(|| format!("reading {}", args.root.display()))?
            .filter_map(|e| e.ok())
            .filter(|e| e.path().is_dir())
            .map(|e| (e.file_name().to_string_lossy().into_owned(), e.path()))
            .collect();
        roots.sort();
        let mut pairs = Vec::new();
        let mut reports = Vec::new();
        for result in mine::mine_repositories(&roots) {
            let (mut repo_pairs, report) = result?;
            pairs.append(&mut repo_pairs);
            reports.push(report);
        }
        (pairs, reports)
    } else {
        let (pairs, report) = mine::mine_repository(&args.root, args.repo_id.as_deref())?;
        (pairs, vec![report])
    };

    write_pairs_output(&pairs, &args.out, args.stdout)?;

    let mut totals = MiningCounts::default();
    for r in &reports {
        totals.add(&r.counts);
    }
    if let Some(report_path) = &args.report {
        #[derive(serde::Serialize)]
        struct FullReport<'a> {
            totals: &'a MiningCounts,
            repos: &'a [MiningReport],
        }
        let json = serde_json::to_string_pretty(&FullReport {
            totals: &totals,
            repos: &reports,
        })?;
        std::fs::write(report_path, json)
            .with_context(|| format!("writing {}", report_path.display()))?;
    }

    eprintln!(
        "mined {} pairs from {} test cases in {} files ({} parse failures, {} discards)",
        totals.pairs_mapped,
        totals.test_cases,
        totals.files_scanned,
        totals.parse_failures,
        totals.discards.total()
    );
    Ok(())
}

fn parse_level(id: &str) -> Result<ContextLevel> {
    ContextLevel::parse(id)
        .with_context(|| format!("unknown level {id:?}; expected one of fm, fm+fc, fm+fc+c, fm+fc+c+m, fm+fc+c+m+f"))
}

fn cmd_render(args: RenderArgs, config: &PipelineConfig) -> Result<()> {
    let level = parse_level(&args.level)?;
    let budget = args.budget.unwrap_or(config.budget);
    if budget < 1 {
        bail!("budget must be >= 1");
    }
    let mut pairs = jsonl::read_pairs(&args.pairs)?;
    let renderings: Vec<_> = pairs
        .par_iter()
        .map(|pair| focalforge::context::render_context(pair, level, budget))
        .collect();
    let truncated = renderings.iter().filter(|r| r.truncated).count();
    for (pair, rendering) in pairs.iter_mut().zip(renderings) {
        pair.context = Some(rendering.into());
    }
    write_pairs_output(&pairs, &args.out, args.stdout)?;
    eprintln!(
        "rendered {} contexts at {} (budget {}, {} truncated)",
        pairs.len(),
        level,
        budget,
        truncated
    );
    Ok(())
}

fn cmd_split(args: SplitArgs, config: &PipelineConfig) -> Result<()> {
    let pairs = jsonl::read_pairs(&args.pairs)?;
    let dedup = match args.dedup_mode {
        Some(DedupArg::Normalized) => Some(DedupMode::Normalized),
        Some(DedupArg::Raw) => Some(DedupMode::Raw),
        Some(DedupArg::Off) => None,
        // Config mode applies when the flag is absent.
        None => Some(config.dedup_mode),
    };

    let before = pairs.len();
    let pairs = match dedup {
        Some(mode) => corpus::deduplicate(pairs, mode),
        None => pairs,
    };
    let deduped = before - pairs.len();

    let fractions: Vec<f64> = match &args.fractions {
        Some(raw) => raw
            .split(',')
            .map(|p| p.trim().parse::<f64>())
            .collect::<Result<_, _>>()
            .with_context(|| format!("parsing fractions {raw:?}"))?,
        None => config.fractions.to_vec(),
    };
    let seed = args.seed.unwrap_or(config.seed);

    let split = corpus::split_by_repo(pairs, &fractions, seed)?;

    std::fs::create_dir_all(&args.out_dir)
        .with_context(|| format!("creating {}", args.out_dir.display()))?;
    jsonl::write_jsonl(&split.train, &args.out_dir.join("train.jsonl"))?;
    jsonl::write_jsonl(&split.validation, &args.out_dir.join("validation.jsonl"))?;
    jsonl::write_jsonl(&split.test, &args.out_dir.join("test.jsonl"))?;

    let achieved = split.achieved_fractions();
    eprintln!(
        "split {} pairs ({deduped} duplicates removed) into {}/{}/{} (achieved {:.3}/{:.3}/{:.3}, seed {seed})",
        split.total_pairs(),
        split.train.len(),
        split.validation.len(),
        split.test.len(),
        achieved[0],
        achieved[1],
        achieved[2],
    );
    Ok(())
}

fn cmd_analyze(args: AnalyzeArgs, config: &PipelineConfig) -> Result<()> {
    let pairs = jsonl::read_pairs(&args.pairs)?;
    let levels: Vec<ContextLevel> = if args.levels == "all" {
        config.levels.clone()
    } else {
        args.levels
            .split(',')
            .map(|id| parse_level(id.trim()))
            .collect::<Result<_>>()?
    };

    let stats = ingredients::overlap_distribution(&pairs, &levels, args.multiset);
    std::fs::write(&args.out, serde_json::to_string_pretty(&stats)?)
        .with_context(|| format!("writing {}", args.out.display()))?;
    if let Some(csv_path) = &args.csv {
        std::fs::write(csv_path, ingredients::distribution_csv(&stats))
            .with_context(|| format!("writing {}", csv_path.display()))?;
    }
    for level in &stats.levels {
        eprintln!(
            "{}: median {:.1} mean {:.2} q1 {:.1} q3 {:.1} over {} pairs",
            level.level, level.median, level.mean, level.q1, level.q3, level.pairs
        );
    }
    Ok(())
}

fn cmd_validate(args: ValidateArgs, config: &PipelineConfig) -> Result<()> {
    let candidates: Vec<Candidate> = jsonl::read_jsonl(&args.candidates)?;
    let catalog = match args.apis.as_ref().or(config.api_lists.as_ref()) {
        Some(path) => ApiCatalog::from_json_file(path)?,
        None => ApiCatalog::default(),
    };

    let pairs: Vec<MappedPair> = match &args.pairs {
        Some(path) => jsonl::read_pairs(path)?,
        None => Vec::new(),
    };
    let focal_names: BTreeMap<String, String> = pairs
        .iter()
        .map(|p| (p.pair_id(), p.focal_method.name.clone()))
        .collect();

    let records: Vec<_> = candidates
        .par_iter()
        .map(|c| {
            let focal = c
                .focal_pair_id
                .as_deref()
                .and_then(|id| focal_names.get(id))
                .map(String::as_str);
            validator::validate_candidate(c, focal, &catalog)
        })
        .collect();
    jsonl::write_jsonl(&records, &args.out)?;

    if let Some(profile_path) = &args.profile {
        let original: Vec<_> = pairs
            .par_iter()
            .filter_map(|p| {
                validator::parse_candidate_method(&p.test_case.body)
                    .ok()
                    .map(|m| validator::profile_of_method(&m, &catalog))
            })
            .collect();
        let generated: Vec<_> = records.iter().filter_map(|r| r.api_profile.clone()).collect();
        let comparison =
            validator::compare_profiles("original", &original, "generated", &generated);
        std::fs::write(profile_path, serde_json::to_string_pretty(&comparison)?)
            .with_context(|| format!("writing {}", profile_path.display()))?;
    }

    let valid = records.iter().filter(|r| r.syntactically_valid).count();
    let repaired = records.iter().filter(|r| r.repaired).count();
    eprintln!(
        "validated {} candidates: {} parse ({} after repair)",
        records.len(),
        valid,
        repaired
    );
    Ok(())
}

fn cmd_evaluate(args: EvaluateArgs) -> Result<()> {
    let candidates: Vec<Candidate> = jsonl::read_jsonl(&args.candidates)?;
    let runner = RunnerConfig::from_toml_file(&args.runner)?;

    let pairs: Vec<MappedPair> = match &args.pairs {
        Some(path) => jsonl::read_pairs(path)?,
        None => Vec::new(),
    };
    if pairs.is_empty() && runner.coverage_xml.is_some() {
        eprintln!("warning: no --pairs given; correctness cannot be attributed");
    }
    let targets = harness::focal_index(&pairs);

    let tempdir;
    let base_dir = match &args.workdir {
        Some(dir) => {
            std::fs::create_dir_all(dir)?;
            dir.clone()
        }
        None => {
            tempdir = tempfile::tempdir().context("creating temp workdir")?;
            tempdir.path().to_path_buf()
        }
    };

    let verdicts = harness::evaluate_candidates(
        &candidates,
        &targets,
        &runner,
        &base_dir,
        args.project.as_deref(),
    )?;
    jsonl::write_jsonl(&verdicts, &args.out)?;

    let expected: Vec<String> = targets.keys().cloned().collect();
    let summary = harness::aggregate(&verdicts, (!expected.is_empty()).then_some(&expected[..]));
    if let Some(summary_path) = &args.summary {
        std::fs::write(summary_path, serde_json::to_string_pretty(&summary)?)
            .with_context(|| format!("writing {}", summary_path.display()))?;
    }
    eprint!("{}", harness::render_summary_table(&args.label, &summary));
    Ok(())
}

fn cmd_report(args: ReportArgs) -> Result<()> {
    let verdicts: Vec<harness::Verdict> = jsonl::read_jsonl(&args.verdicts)?;
    let expected: Option<Vec<String>> = match &args.pairs {
        Some(path) => Some(
            jsonl::read_pairs(path)?
                .iter()
                .map(|p| p.pair_id())
                .collect(),
        ),
        None => None,
    };
    let summary = harness::aggregate(&verdicts, expected.as_deref());
    std::fs::write(&args.out, serde_json::to_string_pretty(&summary)?)
        .with_context(|| format!("writing {}", args.out.display()))?;
    for warning in &summary.warnings {
        eprintln!("warning: {warning}");
    }
    if args.table {
        print!("{}", harness::render_summary_table(&args.label, &summary));
    } else {
        eprint!("{}", harness::render_summary_table(&args.label, &summary));
    }
    Ok(())
}
