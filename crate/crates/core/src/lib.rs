//! Static-analysis toolkit for building test-generation corpora from Java
//! repositories and judging candidate test cases.
//!
//! The pipeline walks repositories with a tree-sitter Java parser, maps each
//! test case to the production method it exercises, renders the focal method
//! with increasing amounts of class context under a token budget, assembles a
//! deduplicated repo-disjoint corpus, and classifies externally generated
//! test candidates by syntax, build, execution, and coverage.

pub mod config;
pub mod context;
pub mod corpus;
pub mod coverage;
pub mod error;
pub mod harness;
pub mod ingredients;
pub mod jsonl;
pub mod lexer;
pub mod mine;
pub mod model;
pub mod pair;
pub mod parse;
pub mod validator;

pub use config::PipelineConfig;
pub use context::{level_contents, render_context, ContextLevel, ContextRendering};
pub use corpus::{deduplicate, split_by_repo, CorpusSplit, DedupMode};
pub use coverage::{parse_coverage_xml, CoverageRecord};
pub use error::ParseFailure;
pub use harness::{
    aggregate, classify_candidate, evaluate_candidates, scaffold, EvalSummary, FocalTarget,
    RunnerConfig, Verdict, VerdictCategory,
};
pub use ingredients::{code_tokens, overlap_distribution, shared_token_count, TokenBag};
pub use jsonl::{read_jsonl, read_pairs, write_jsonl};
pub use mine::{
    find_test_classes, match_focal_class, match_focal_method, mine_repositories, mine_repository,
    MiningReport,
};
pub use model::{is_test_method, ClassModel, FieldModel, MethodModel, SourceFile};
pub use pair::{ClassMatch, MappedPair, MethodMatch, SCHEMA_VERSION};
pub use parse::parse_file;
pub use validator::{
    api_profile, check_syntax, compare_profiles, has_test_annotation, invokes_focal_method,
    repair_truncation, validate_candidate, ApiCatalog, ApiProfile, Candidate, ValidationRecord,
};
