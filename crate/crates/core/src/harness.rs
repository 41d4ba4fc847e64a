//! Candidate execution pipeline: scaffold, compile, run, read coverage,
//! classify.
//!
//! The external toolchain is injected through command templates, so the
//! pipeline runs unchanged against a real JDK or a scripted stub. Verdicts
//! fall into four mutually exclusive categories; `correct` marks the subset
//! of passing candidates whose coverage reaches the focal method.

use std::collections::BTreeMap;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coverage::{parse_coverage_xml, record_matches_method};
use crate::error::HarnessError;
use crate::pair::MappedPair;
use crate::validator::{check_syntax, repair_truncation, Candidate};

const PLACEHOLDERS: [&str; 6] = [
    "class_file",
    "classpath",
    "workdir",
    "project",
    "test_body",
    "class_name",
];

fn default_scaffold() -> String {
    "import org.junit.Test;\nimport static org.junit.Assert.*;\n\npublic class {class_name} {\n\n{test_body}\n\n}\n"
        .to_string()
}

fn default_scaffold_class() -> String {
    "CandidateTest".to_string()
}

fn default_timeout() -> u64 {
    60
}

/// How to compile and run a scaffolded candidate. Loaded from a TOML file;
/// command templates may use `{class_file}`, `{classpath}`, `{workdir}`, and
/// `{project}`, and run through `sh -c`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunnerConfig {
    pub compile_cmd: String,
    pub test_cmd: String,
    #[serde(default = "default_timeout")]
    pub timeout_secs: u64,
    #[serde(default)]
    pub classpath: String,
    #[serde(default = "default_scaffold_class")]
    pub scaffold_class: String,
    /// Test-class wrapper; must contain `{test_body}`.
    #[serde(default = "default_scaffold")]
    pub scaffold_template: String,
    /// Where the run leaves its coverage XML, typically under `{workdir}`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coverage_xml: Option<String>,
}

impl RunnerConfig {
    pub fn from_toml_file(path: &Path) -> Result<Self, HarnessError> {
        let text = std::fs::read_to_string(path).map_err(|source| HarnessError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let cfg: RunnerConfig =
            toml::from_str(&text).map_err(|e| HarnessError::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    /// Reject unknown placeholders and structurally unusable templates.
    pub fn validate(&self) -> Result<(), HarnessError> {
        for (name, template) in [
            ("compile_cmd", self.compile_cmd.as_str()),
            ("test_cmd", self.test_cmd.as_str()),
            ("scaffold_template", self.scaffold_template.as_str()),
            (
                "coverage_xml",
                self.coverage_xml.as_deref().unwrap_or_default(),
            ),
        ] {
            for found in scan_placeholders(template) {
                if !PLACEHOLDERS.contains(&found.as_str()) {
                    return Err(HarnessError::UnknownPlaceholder {
                        template_name: name.to_string(),
                        placeholder: found,
                    });
                }
            }
        }
        if !self.scaffold_template.contains("{test_body}") {
            return Err(HarnessError::Config(
                "scaffold_template must contain {test_body}".to_string(),
            ));
        }
        if self.timeout_secs == 0 {
            return Err(HarnessError::Config("timeout_secs must be >= 1".to_string()));
        }
        Ok(())
    }
}

/// `{word}` occurrences where `word` is lowercase/underscore.
fn scan_placeholders(template: &str) -> Vec<String> {
    let mut found = Vec::new();
    let bytes = template.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'{' {
            let mut j = i + 1;
            while j < bytes.len() && (bytes[j].is_ascii_lowercase() || bytes[j] == b'_') {
                j += 1;
            }
            if j > i + 1 && j < bytes.len() && bytes[j] == b'}' {
                found.push(template[i + 1..j].to_string());
                i = j + 1;
                continue;
            }
        }
        i += 1;
    }
    found
}

/// The method a candidate is supposed to test, for coverage attribution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FocalTarget {
    pub class_name: String,
    pub method_name: String,
    /// Source-style signature, e.g. `boolean isDigits(String str)`.
    pub signature: String,
}

impl From<&MappedPair> for FocalTarget {
    fn from(pair: &MappedPair) -> Self {
        FocalTarget {
            class_name: pair.focal_class.name.clone(),
            method_name: pair.focal_method.name.clone(),
            signature: pair.focal_method.signature.clone(),
        }
    }
}

/// Build the focal lookup used to attribute candidates to methods.
pub fn focal_index(pairs: &[MappedPair]) -> BTreeMap<String, FocalTarget> {
    pairs
        .iter()
        .map(|p| (p.pair_id(), FocalTarget::from(p)))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictCategory {
    SyntaxError,
    BuildError,
    FailingTest,
    PassingTest,
}

/// Classification of one candidate. Exactly one category applies; `correct`
/// can be true only for passing tests.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub candidate_id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub focal_pair_id: Option<String>,
    pub category: VerdictCategory,
    pub correct: bool,
    pub repaired: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

/// Where one candidate run lives on disk.
#[derive(Debug, Clone)]
pub struct RunContext {
    pub workdir: PathBuf,
    pub project: Option<PathBuf>,
}

/// Embed the (already parseable) candidate into the configured wrapper.
pub fn scaffold(candidate_text: &str, cfg: &RunnerConfig) -> String {
    cfg.scaffold_template
        .replace("{test_body}", candidate_text)
        .replace("{class_name}", &cfg.scaffold_class)
}

struct CmdOutcome {
    success: bool,
    timed_out: bool,
    detail: String,
}

fn substitute(template: &str, cfg: &RunnerConfig, ctx: &RunContext, class_file: &Path) -> String {
    template
        .replace("{class_file}", &class_file.to_string_lossy())
        .replace("{classpath}", &cfg.classpath)
        .replace("{workdir}", &ctx.workdir.to_string_lossy())
        .replace(
            "{project}",
            &ctx.project
                .as_deref()
                .map(|p| p.to_string_lossy().into_owned())
                .unwrap_or_default(),
        )
}

/// Run a shell command with a wall-clock timeout, capturing output to files
/// in the workdir so large outputs cannot deadlock the pipe.
fn run_command(
    cmdline: &str,
    workdir: &Path,
    log_name: &str,
    timeout: Duration,
) -> Result<CmdOutcome, HarnessError> {
    let io_err = |source| HarnessError::Io {
        path: workdir.to_path_buf(),
        source,
    };

    let stdout_path = workdir.join(format!("{log_name}.out"));
    let stderr_path = workdir.join(format!("{log_name}.err"));
    let stdout = std::fs::File::create(&stdout_path).map_err(io_err)?;
    let stderr = std::fs::File::create(&stderr_path).map_err(io_err)?;

    let mut child = std::process::Command::new("sh")
        .arg("-c")
        .arg(cmdline)
        .current_dir(workdir)
        .stdin(std::process::Stdio::null())
        .stdout(stdout)
        .stderr(stderr)
        .spawn()
        .map_err(io_err)?;

    let deadline = Instant::now() + timeout;
    let status = loop {
        match child.try_wait().map_err(io_err)? {
            Some(status) => break Some(status),
            None => {
                if Instant::now() >= deadline {
                    let _ = child.kill();
                    let _ = child.wait();
                    break None;
                }
                std::thread::sleep(Duration::from_millis(15));
            }
        }
    };

    let tail = |p: &Path| -> String {
        let mut buf = String::new();
        if let Ok(mut f) = std::fs::File::open(p) {
            let _ = f.read_to_string(&mut buf);
        }
        let trimmed = buf.trim();
        let start = trimmed.len().saturating_sub(2000);
        trimmed[start..].to_string()
    };

    match status {
        None => Ok(CmdOutcome {
            success: false,
            timed_out: true,
            detail: "timeout".to_string(),
        }),
        Some(status) => {
            let mut detail = tail(&stderr_path);
            if detail.is_empty() {
                detail = tail(&stdout_path);
            }
            Ok(CmdOutcome {
                success: status.success() && !tail(&stdout_path).contains("FAILURES!!!"),
                timed_out: false,
                detail,
            })
        }
    }
}

/// Classify one candidate through the full pipeline. A candidate that fails
/// the syntax check (after repair) never touches the filesystem or any
/// external command.
pub fn classify_candidate(
    candidate: &Candidate,
    focal: Option<&FocalTarget>,
    cfg: &RunnerConfig,
    ctx: &RunContext,
) -> Result<Verdict, HarnessError> {
    let verdict = |category, correct, repaired, reason: Option<String>, warning: Option<String>| Verdict {
        candidate_id: candidate.id.clone(),
        focal_pair_id: candidate.focal_pair_id.clone(),
        category,
        correct,
        repaired,
        reason,
        warning,
    };

    // Syntax gate, with truncation repair.
    let repair = repair_truncation(&candidate.text);
    if let Err(err) = check_syntax(&repair.text) {
        return Ok(verdict(
            VerdictCategory::SyntaxError,
            false,
            false,
            Some(err.to_string()),
            None,
        ));
    }

    std::fs::create_dir_all(&ctx.workdir).map_err(|source| HarnessError::Io {
        path: ctx.workdir.clone(),
        source,
    })?;
    let class_file = ctx.workdir.join(format!("{}.java", cfg.scaffold_class));
    std::fs::write(&class_file, scaffold(&repair.text, cfg)).map_err(|source| {
        HarnessError::Io {
            path: class_file.clone(),
            source,
        }
    })?;

    let timeout = Duration::from_secs(cfg.timeout_secs);

    // Build gate.
    let compile = substitute(&cfg.compile_cmd, cfg, ctx, &class_file);
    let outcome = run_command(&compile, &ctx.workdir, "compile", timeout)?;
    if !outcome.success {
        let reason = if outcome.timed_out {
            "timeout".to_string()
        } else {
            outcome.detail
        };
        return Ok(verdict(
            VerdictCategory::BuildError,
            false,
            repair.repaired,
            Some(reason).filter(|r| !r.is_empty()),
            None,
        ));
    }

    // Execution gate.
    let test = substitute(&cfg.test_cmd, cfg, ctx, &class_file);
    let outcome = run_command(&test, &ctx.workdir, "test", timeout)?;
    if !outcome.success {
        let reason = if outcome.timed_out {
            "timeout".to_string()
        } else {
            outcome.detail
        };
        return Ok(verdict(
            VerdictCategory::FailingTest,
            false,
            repair.repaired,
            Some(reason).filter(|r| !r.is_empty()),
            None,
        ));
    }

    // Passing; decide correctness from coverage.
    let (correct, warning) = match (&cfg.coverage_xml, focal) {
        (Some(template), Some(focal)) => {
            let path = PathBuf::from(substitute(template, cfg, ctx, &class_file));
            if !path.exists() {
                (
                    false,
                    Some(format!("coverage report missing: {}", path.display())),
                )
            } else {
                let records = parse_coverage_xml(&path)?;
                let hit = records.iter().any(|r| {
                    record_matches_method(r, &focal.method_name, &focal.signature)
                        && r.lines_covered > 0
                });
                (hit, None)
            }
        }
        (Some(_), None) => (false, Some("no focal target for candidate".to_string())),
        (None, _) => (false, None),
    };

    Ok(verdict(
        VerdictCategory::PassingTest,
        correct,
        repair.repaired,
        None,
        warning,
    ))
}

/// Classify a batch in parallel, one isolated workdir per candidate. Verdicts
/// come back in candidate order.
pub fn evaluate_candidates(
    candidates: &[Candidate],
    focal_targets: &BTreeMap<String, FocalTarget>,
    cfg: &RunnerConfig,
    base_dir: &Path,
    project: Option<&Path>,
) -> Result<Vec<Verdict>, HarnessError> {
    candidates
        .par_iter()
        .enumerate()
        .map(|(idx, candidate)| {
            let slug: String = candidate
                .id
                .chars()
                .map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '_' { c } else { '_' })
                .take(48)
                .collect();
            let ctx = RunContext {
                workdir: base_dir.join(format!("cand_{idx:05}_{slug}")),
                project: project.map(Path::to_path_buf),
            };
            let focal = candidate
                .focal_pair_id
                .as_deref()
                .and_then(|id| focal_targets.get(id));
            classify_candidate(candidate, focal, cfg, &ctx)
        })
        .collect()
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryCounts {
    pub syntax_error: usize,
    pub build_error: usize,
    pub failing: usize,
    pub passing: usize,
    /// Subset of `passing` whose coverage reaches the focal method.
    pub correct: usize,
    pub total: usize,
}

#[derive(Debug, Clone, Copy, Default, Serialize, Deserialize)]
pub struct CategoryPercentages {
    pub syntax_error: f64,
    pub build_error: f64,
    pub failing: f64,
    pub passing: f64,
    pub correct: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MethodSummary {
    pub focal_pair_id: String,
    pub candidates: usize,
    pub correct: usize,
    /// At least one correct candidate.
    pub tested: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EvalSummary {
    pub counts: CategoryCounts,
    pub percentages: CategoryPercentages,
    pub methods_tested: usize,
    pub methods_total: usize,
    pub methods: Vec<MethodSummary>,
    pub warnings: Vec<String>,
}

/// Roll verdicts up into category counts and per-focal-method statistics.
/// `expected_methods`, when given, flags methods that received no candidates;
/// those are excluded from the method table with a warning.
pub fn aggregate(verdicts: &[Verdict], expected_methods: Option<&[String]>) -> EvalSummary {
    let mut counts = CategoryCounts {
        total: verdicts.len(),
        ..Default::default()
    };
    let mut by_method: BTreeMap<String, (usize, usize)> = BTreeMap::new();

    for v in verdicts {
        match v.category {
            VerdictCategory::SyntaxError => counts.syntax_error += 1,
            VerdictCategory::BuildError => counts.build_error += 1,
            VerdictCategory::FailingTest => counts.failing += 1,
            VerdictCategory::PassingTest => counts.passing += 1,
        }
        if v.correct {
            counts.correct += 1;
        }
        if let Some(id) = &v.focal_pair_id {
            let entry = by_method.entry(id.clone()).or_insert((0, 0));
            entry.0 += 1;
            if v.correct {
                entry.1 += 1;
            }
        }
    }

    let mut warnings = Vec::new();
    if let Some(expected) = expected_methods {
        for id in expected {
            if !by_method.contains_key(id) {
                warnings.push(format!("focal method {id} has no candidates; excluded"));
            }
        }
    }

    let methods: Vec<MethodSummary> = by_method
        .into_iter()
        .map(|(focal_pair_id, (candidates, correct))| MethodSummary {
            focal_pair_id,
            candidates,
            correct,
            tested: correct > 0,
        })
        .collect();

    let pct = |n: usize| {
        if counts.total == 0 {
            0.0
        } else {
            n as f64 * 100.0 / counts.total as f64
        }
    };

    EvalSummary {
        percentages: CategoryPercentages {
            syntax_error: pct(counts.syntax_error),
            build_error: pct(counts.build_error),
            failing: pct(counts.failing),
            passing: pct(counts.passing),
            correct: pct(counts.correct),
        },
        methods_tested: methods.iter().filter(|m| m.tested).count(),
        methods_total: methods.len(),
        methods,
        warnings,
        counts,
    }
}

/// One-row results table: method-level statistics on the left, candidate
/// categories on the right.
pub fn render_summary_table(label: &str, summary: &EvalSummary) -> String {
    let c = &summary.counts;
    let p = &summary.percentages;
    let tested_pct = if summary.methods_total == 0 {
        0.0
    } else {
        summary.methods_tested as f64 * 100.0 / summary.methods_total as f64
    };
    let mut out = String::new();
    out.push_str(
        "Project | Methods Tested | Methods Total | Correct | Passing | Failing | Build Error | Syntax Error | Total\n",
    );
    out.push_str(&format!(
        "{} | {} ({:.2}%) | {} | {} ({:.2}%) | {} ({:.2}%) | {} ({:.2}%) | {} ({:.2}%) | {} ({:.2}%) | {}\n",
        label,
        summary.methods_tested,
        tested_pct,
        summary.methods_total,
        c.correct,
        p.correct,
        c.passing,
        p.passing,
        c.failing,
        p.failing,
        c.build_error,
        p.build_error,
        c.syntax_error,
        p.syntax_error,
        c.total,
    ));
    out
}
