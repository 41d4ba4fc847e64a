//! Error types shared across the toolkit.

use std::path::PathBuf;
use thiserror::Error;

/// A source file the Java grammar rejected. Callers count these and move on;
/// a broken file never aborts a repository-level run.
#[derive(Debug, Clone, Error, serde::Serialize, serde::Deserialize)]
#[error("parse failure in {path}: {reason}")]
pub struct ParseFailure {
    pub path: String,
    pub reason: String,
}

#[derive(Debug, Error)]
pub enum MineError {
    #[error("cannot read repository root {0}")]
    UnreadableRoot(PathBuf),
    #[error("io error at {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Error)]
pub enum SplitError {
    #[error("need at least 3 repositories for a 3-way repo-disjoint split, found {0}")]
    TooFewRepos(usize),
    #[error("fractions must be 3 positive values summing to 1, got {0:?}")]
    BadFractions(Vec<f64>),
}

#[derive(Debug, Error)]
pub enum JsonlError {
    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}: malformed JSON line: {source}")]
    Line {
        path: PathBuf,
        line: usize,
        #[source]
        source: serde_json::Error,
    },
    #[error("{path}:{line}: schema_version {found}, this build reads {expected}")]
    SchemaVersion {
        path: PathBuf,
        line: usize,
        found: u32,
        expected: u32,
    },
    #[error("json encode error: {0}")]
    Encode(#[from] serde_json::Error),
}

/// First diagnostic for a candidate the grammar rejects.
#[derive(Debug, Clone, Error, serde::Serialize, serde::Deserialize)]
#[error("syntax error at line {line}, column {column}: {detail}")]
pub struct SyntaxError {
    pub line: usize,
    pub column: usize,
    pub detail: String,
}

#[derive(Debug, Error)]
pub enum ValidatorError {
    #[error("candidate {id} does not parse even after repair: {source}")]
    Unparseable {
        id: String,
        #[source]
        source: SyntaxError,
    },
    #[error("cannot read API list file {path}: {reason}")]
    ApiCatalog { path: PathBuf, reason: String },
}

#[derive(Debug, Error)]
pub enum CoverageError {
    #[error("cannot read coverage report {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed coverage XML in {path}: {reason}")]
    Xml { path: PathBuf, reason: String },
}

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("runner config: {0}")]
    Config(String),
    #[error("unknown placeholder {{{placeholder}}} in {template_name} template")]
    UnknownPlaceholder {
        template_name: String,
        placeholder: String,
    },
    #[error("io error at {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Coverage(#[from] CoverageError),
}

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {reason}")]
    Unreadable { path: PathBuf, reason: String },
    #[error("invalid config: {0}")]
    Invalid(String),
}
