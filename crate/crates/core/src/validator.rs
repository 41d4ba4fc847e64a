//! Checks over externally generated candidate test cases: syntactic
//! correctness with truncation repair, `@Test` annotation presence, focal
//! method invocation, and testing-API usage profiles.
//!
//! A candidate is a single method declaration; it is wrapped in a synthetic
//! class for parsing.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{SyntaxError, ValidatorError};
use crate::ingredients::{mean_of, quantile_of};
use crate::lexer::{self, TokenKind};
use crate::model::MethodModel;
use crate::parse;

/// One externally supplied candidate test case.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub id: String,
    /// Pair identifier this candidate targets (`repo_id:test_class_path:test_name`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub focal_pair_id: Option<String>,
    pub text: String,
    /// Free-form label of whatever produced the text.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<String>,
}

fn wrap(text: &str) -> String {
    // The newline keeps diagnostic line numbers one off from candidate lines.
    format!("class __W {{\n{text}\n}}")
}

/// Ok iff the text, wrapped in a synthetic class, parses as valid Java.
pub fn check_syntax(text: &str) -> Result<(), SyntaxError> {
    let wrapped = wrap(text);
    let tree = parse::parse_java(&wrapped).ok_or(SyntaxError {
        line: 1,
        column: 1,
        detail: "parser produced no tree".to_string(),
    })?;
    if !tree.root_node().has_error() {
        return Ok(());
    }
    let mut err = parse::first_syntax_error(&tree, &wrapped).unwrap_or(SyntaxError {
        line: 1,
        column: 1,
        detail: "syntax error".to_string(),
    });
    err.line = err.line.saturating_sub(1).max(1);
    Err(err)
}

/// Parse the candidate and return its method model.
pub fn parse_candidate_method(text: &str) -> Result<MethodModel, SyntaxError> {
    check_syntax(text)?;
    let wrapped = wrap(text);
    let tree = parse::parse_java(&wrapped).ok_or(SyntaxError {
        line: 1,
        column: 1,
        detail: "parser produced no tree".to_string(),
    })?;
    let classes = parse::extract_classes(&tree, &wrapped, "<candidate>");
    classes
        .into_iter()
        .find(|c| c.name == "__W")
        .and_then(|c| c.methods.into_iter().next())
        .ok_or(SyntaxError {
            line: 1,
            column: 1,
            detail: "no method declaration found".to_string(),
        })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepairOutcome {
    pub text: String,
    pub repaired: bool,
}

/// Delete the trailing partial statement of a truncated candidate and
/// rebalance braces. Parseable input comes back unchanged; if the repair
/// does not parse either, the original text comes back.
pub fn repair_truncation(text: &str) -> RepairOutcome {
    if check_syntax(text).is_ok() {
        return RepairOutcome {
            text: text.to_string(),
            repaired: false,
        };
    }

    let Some(repaired) = rebalanced_prefix(text) else {
        return RepairOutcome {
            text: text.to_string(),
            repaired: false,
        };
    };
    if check_syntax(&repaired).is_ok() {
        RepairOutcome {
            text: repaired,
            repaired: true,
        }
    } else {
        RepairOutcome {
            text: text.to_string(),
            repaired: false,
        }
    }
}

/// Cut after the last `;` or `}` inside the method body and close every brace
/// still open at that point. `None` when the body never opens.
fn rebalanced_prefix(text: &str) -> Option<String> {
    let tokens = lexer::lex(text);

    // The method body opens at the first `{` outside any parentheses, so
    // brace-bearing annotation arguments don't fool the scan.
    let mut paren_depth = 0usize;
    let mut body_open = None;
    for (idx, tok) in tokens.iter().enumerate() {
        if tok.kind != TokenKind::Punct {
            continue;
        }
        match tok.text.as_str() {
            "(" => paren_depth += 1,
            ")" => paren_depth = paren_depth.saturating_sub(1),
            "{" if paren_depth == 0 => {
                body_open = Some(idx);
                break;
            }
            _ => {}
        }
    }
    let body_open = body_open?;

    let mut depth = 1usize;
    let mut cut: Option<(usize, usize)> = None; // (byte end, depth after)
    for tok in &tokens[body_open + 1..] {
        if tok.kind != TokenKind::Punct {
            continue;
        }
        match tok.text.as_str() {
            "{" => depth += 1,
            "}" => {
                if depth >= 1 {
                    depth -= 1;
                    cut = Some((tok.end, depth));
                }
            }
            ";" => {
                if depth >= 1 {
                    cut = Some((tok.end, depth));
                }
            }
            _ => {}
        }
    }

    let (end, open_braces) = cut?;
    let mut repaired = text[..end].to_string();
    for _ in 0..open_braces {
        repaired.push_str(" }");
    }
    Some(repaired)
}

/// True iff the candidate declares a `Test` annotation (simple-name match).
pub fn has_test_annotation(candidate: &Candidate) -> Result<bool, ValidatorError> {
    let method = parse_candidate_method(&candidate.text).map_err(|source| {
        ValidatorError::Unparseable {
            id: candidate.id.clone(),
            source,
        }
    })?;
    Ok(method.is_test())
}

/// True iff the focal method's simple name appears among the candidate's
/// invocations, receiver ignored (`foo()`, `obj.foo()`, `Class.foo()` all match).
pub fn invokes_focal_method(
    candidate: &Candidate,
    focal_method_name: &str,
) -> Result<bool, ValidatorError> {
    let method = parse_candidate_method(&candidate.text).map_err(|source| {
        ValidatorError::Unparseable {
            id: candidate.id.clone(),
            source,
        }
    })?;
    let invoked = method.invocation_names().any(|n| n == focal_method_name);
    Ok(invoked)
}

/// Known testing-API names, grouped by framework. Extensible from a JSON file
/// of `{"framework": ["api", ...]}` entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApiCatalog {
    pub frameworks: BTreeMap<String, Vec<String>>,
}

impl Default for ApiCatalog {
    fn default() -> Self {
        let junit = [
            "assertEquals",
            "assertTrue",
            "assertFalse",
            "assertNull",
            "assertNotNull",
            "assertSame",
            "assertNotSame",
            "assertArrayEquals",
            "assertThrows",
            "fail",
        ];
        let mockito = [
            "mock", "verify", "when", "thenReturn", "spy", "doReturn", "doThrow", "any", "eq",
            "times",
        ];
        let mut frameworks = BTreeMap::new();
        frameworks.insert("junit".to_string(), junit.map(String::from).to_vec());
        frameworks.insert("mockito".to_string(), mockito.map(String::from).to_vec());
        ApiCatalog { frameworks }
    }
}

impl ApiCatalog {
    pub fn from_json_file(path: &Path) -> Result<Self, ValidatorError> {
        let text = std::fs::read_to_string(path).map_err(|e| ValidatorError::ApiCatalog {
            path: path.to_path_buf(),
            reason: e.to_string(),
        })?;
        let frameworks: BTreeMap<String, Vec<String>> =
            serde_json::from_str(&text).map_err(|e| ValidatorError::ApiCatalog {
                path: path.to_path_buf(),
                reason: e.to_string(),
            })?;
        Ok(ApiCatalog { frameworks })
    }

    pub fn contains(&self, api: &str) -> bool {
        self.frameworks.values().any(|v| v.iter().any(|a| a == api))
    }
}

/// Per-API call counts within one candidate. `total` is the number of matched
/// call sites.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApiProfile {
    pub counts: BTreeMap<String, usize>,
    pub total: usize,
}

/// Count testing-API invocations in a parsed candidate via an AST walk.
pub fn api_profile(candidate: &Candidate, catalog: &ApiCatalog) -> Result<ApiProfile, ValidatorError> {
    let method = parse_candidate_method(&candidate.text).map_err(|source| {
        ValidatorError::Unparseable {
            id: candidate.id.clone(),
            source,
        }
    })?;
    Ok(profile_of_method(&method, catalog))
}

/// Profile an already-parsed method (used for original mined test cases too).
pub fn profile_of_method(method: &MethodModel, catalog: &ApiCatalog) -> ApiProfile {
    let mut counts = BTreeMap::new();
    for name in method.invocation_names() {
        if catalog.contains(name) {
            *counts.entry(name.to_string()).or_insert(0) += 1;
        }
    }
    let total = counts.values().sum();
    ApiProfile { counts, total }
}

#[derive(Debug, Clone, Serialize)]
pub struct DistributionSummary {
    pub mean: f64,
    pub median: f64,
    pub q1: f64,
    pub q3: f64,
}

/// Aggregate view of one candidate population's testing-API usage.
#[derive(Debug, Clone, Serialize)]
pub struct ProfilePopulation {
    pub label: String,
    pub candidates: usize,
    pub api_totals: BTreeMap<String, usize>,
    pub total_calls: usize,
    pub calls_per_candidate: DistributionSummary,
}

fn summarize_population(label: &str, profiles: &[ApiProfile]) -> ProfilePopulation {
    let mut api_totals: BTreeMap<String, usize> = BTreeMap::new();
    for p in profiles {
        for (api, n) in &p.counts {
            *api_totals.entry(api.clone()).or_insert(0) += n;
        }
    }
    let mut per_candidate: Vec<usize> = profiles.iter().map(|p| p.total).collect();
    per_candidate.sort_unstable();
    ProfilePopulation {
        label: label.to_string(),
        candidates: profiles.len(),
        total_calls: api_totals.values().sum(),
        api_totals,
        calls_per_candidate: DistributionSummary {
            mean: mean_of(&per_candidate),
            median: quantile_of(&per_candidate, 0.5),
            q1: quantile_of(&per_candidate, 0.25),
            q3: quantile_of(&per_candidate, 0.75),
        },
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ProfileComparison {
    pub a: ProfilePopulation,
    pub b: ProfilePopulation,
}

/// Compare two candidate populations, e.g. original test cases vs generated.
pub fn compare_profiles(
    label_a: &str,
    a: &[ApiProfile],
    label_b: &str,
    b: &[ApiProfile],
) -> ProfileComparison {
    ProfileComparison {
        a: summarize_population(label_a, a),
        b: summarize_population(label_b, b),
    }
}

/// Everything the `validate` stage records for one candidate.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ValidationRecord {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub focal_pair_id: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<String>,
    pub syntactically_valid: bool,
    pub repaired: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub has_test_annotation: Option<bool>,
    /// Absent when the candidate has no resolvable focal pair.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invokes_focal_method: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub api_profile: Option<ApiProfile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Run the full property battery for one candidate. `focal_method_name` is
/// the simple name of the method the candidate is supposed to test, when its
/// pair is known.
pub fn validate_candidate(
    candidate: &Candidate,
    focal_method_name: Option<&str>,
    catalog: &ApiCatalog,
) -> ValidationRecord {
    let outcome = repair_truncation(&candidate.text);
    let effective = Candidate {
        text: outcome.text.clone(),
        ..candidate.clone()
    };

    match parse_candidate_method(&effective.text) {
        Ok(method) => ValidationRecord {
            id: candidate.id.clone(),
            focal_pair_id: candidate.focal_pair_id.clone(),
            generator: candidate.generator.clone(),
            syntactically_valid: true,
            repaired: outcome.repaired,
            has_test_annotation: Some(method.is_test()),
            invokes_focal_method: focal_method_name
                .map(|focal| method.invocation_names().any(|n| n == focal)),
            api_profile: Some(profile_of_method(&method, catalog)),
            error: None,
        },
        Err(err) => ValidationRecord {
            id: candidate.id.clone(),
            focal_pair_id: candidate.focal_pair_id.clone(),
            generator: candidate.generator.clone(),
            syntactically_valid: false,
            repaired: false,
            has_test_annotation: None,
            invokes_focal_method: None,
            api_profile: None,
            error: Some(err.to_string()),
        },
    }
}
