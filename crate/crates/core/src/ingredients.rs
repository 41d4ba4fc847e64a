//! Token-overlap analysis between focal-context renderings and their target
//! test cases.
//!
//! A token bag holds the distinct lexical tokens of a code fragment after
//! dropping Java keywords (plus `true`/`false`/`null`) and every
//! operator/separator. Identifiers and literal values stay; composite
//! identifiers are not split.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::context::{render_untruncated, ContextLevel, ContextRendering};
use crate::lexer;
use crate::pair::MappedPair;

/// Distinct filtered tokens of one fragment.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TokenBag(pub BTreeSet<String>);

impl TokenBag {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(&self, other: &TokenBag) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn intersection_count(&self, other: &TokenBag) -> usize {
        self.0.intersection(&other.0).count()
    }
}

/// Lexical tokens of `code` minus keywords and separators/operators.
pub fn code_tokens(code: &str) -> TokenBag {
    TokenBag(
        lexer::lex(code)
            .iter()
            .filter_map(|t| t.bag_value())
            .map(str::to_string)
            .collect(),
    )
}

/// Distinct tokens shared by two fragments (set semantics: each shared token
/// counts once).
pub fn shared_tokens(a: &str, b: &str) -> usize {
    code_tokens(a).intersection_count(&code_tokens(b))
}

/// Shared-token count between a rendering and its target test case.
pub fn shared_token_count(context: &ContextRendering, test_body: &str) -> usize {
    shared_tokens(&context.text, test_body)
}

/// Multiset variant: shared occurrences, each matched at most once per side.
pub fn shared_tokens_multiset(a: &str, b: &str) -> usize {
    let count_map = |code: &str| {
        let mut m = std::collections::BTreeMap::<String, usize>::new();
        for t in lexer::lex(code) {
            if let Some(v) = t.bag_value() {
                *m.entry(v.to_string()).or_insert(0) += 1;
            }
        }
        m
    };
    let ma = count_map(a);
    let mb = count_map(b);
    ma.iter()
        .filter_map(|(k, ca)| mb.get(k).map(|cb| (*ca).min(*cb)))
        .sum()
}

/// Per-level distribution summary of shared-token counts.
#[derive(Debug, Clone, Serialize)]
pub struct LevelStats {
    pub level: ContextLevel,
    pub pairs: usize,
    pub mean: f64,
    pub median: f64,
    pub q1: f64,
    pub q3: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct OverlapStats {
    pub multiset: bool,
    pub levels: Vec<LevelStats>,
    /// Raw per-pair counts per level, in pair order (plot-ready).
    pub counts: Vec<LevelCounts>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LevelCounts {
    pub level: ContextLevel,
    pub shared: Vec<usize>,
}

/// Shared-token distributions between each pair's test case and its
/// untruncated rendering at every requested level.
pub fn overlap_distribution(
    pairs: &[MappedPair],
    levels: &[ContextLevel],
    multiset: bool,
) -> OverlapStats {
    let counts: Vec<LevelCounts> = levels
        .iter()
        .map(|&level| {
            let shared: Vec<usize> = pairs
                .par_iter()
                .map(|pair| {
                    let rendering = render_untruncated(pair, level);
                    if multiset {
                        shared_tokens_multiset(&rendering, &pair.test_case.body)
                    } else {
                        shared_tokens(&rendering, &pair.test_case.body)
                    }
                })
                .collect();
            LevelCounts { level, shared }
        })
        .collect();

    let levels = counts
        .iter()
        .map(|lc| {
            let mut sorted = lc.shared.clone();
            sorted.sort_unstable();
            LevelStats {
                level: lc.level,
                pairs: sorted.len(),
                mean: mean_of(&sorted),
                median: quantile_of(&sorted, 0.5),
                q1: quantile_of(&sorted, 0.25),
                q3: quantile_of(&sorted, 0.75),
            }
        })
        .collect();

    OverlapStats {
        multiset,
        levels,
        counts,
    }
}

/// Rows of `level,shared_tokens`, one per pair per level.
pub fn distribution_csv(stats: &OverlapStats) -> String {
    let mut out = String::from("level,shared_tokens\n");
    for lc in &stats.counts {
        for v in &lc.shared {
            out.push_str(lc.level.id());
            out.push(',');
            out.push_str(&v.to_string());
            out.push('\n');
        }
    }
    out
}

pub(crate) fn mean_of(sorted: &[usize]) -> f64 {
    if sorted.is_empty() {
        return 0.0;
    }
    sorted.iter().sum::<usize>() as f64 / sorted.len() as f64
}

/// Linear-interpolation quantile on a sorted slice.
pub(crate) fn quantile_of(sorted: &[usize], q: f64) -> f64 {
    if sorted.is_empty() {
        return 0.0;
    }
    let pos = q * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    let frac = pos - lo as f64;
    sorted[lo] as f64 * (1.0 - frac) + sorted[hi] as f64 * frac
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keywords_and_separators_dropped() {
        let bag = code_tokens("if (x > 0) return y;");
        let tokens: Vec<_> = bag.0.iter().cloned().collect();
        assert_eq!(tokens, vec!["0", "x", "y"]);
    }

    #[test]
    fn call_names_and_arguments_kept() {
        let bag = code_tokens("assertEquals(expected, actual)");
        let tokens: Vec<_> = bag.0.iter().cloned().collect();
        assert_eq!(tokens, vec!["actual", "assertEquals", "expected"]);
    }

    #[test]
    fn string_literal_values_are_ingredients() {
        let bag = code_tokens(r#"return new Rejection("Discuss related works");"#);
        assert!(bag.0.contains("Discuss related works"));
        assert!(bag.0.contains("Rejection"));
        assert!(!bag.0.contains("new"));
        assert!(!bag.0.contains("return"));
    }

    #[test]
    fn disjoint_and_identical_overlaps() {
        assert_eq!(shared_tokens("int a = b;", "int c = d;"), 0);
        let text = "foo(bar, 1, \"s\")";
        assert_eq!(shared_tokens(text, text), code_tokens(text).len());
    }

    #[test]
    fn overlap_is_symmetric_and_bounded() {
        let a = "calc.add(3); assertEquals(8, r);";
        let b = "int r = calc.add(4); check(r);";
        let ab = shared_tokens(a, b);
        assert_eq!(ab, shared_tokens(b, a));
        assert!(ab <= code_tokens(a).len().min(code_tokens(b).len()));
    }

    #[test]
    fn multiset_counts_repeats() {
        // `x` appears twice on both sides, set semantics counts it once.
        let a = "x = x + y;";
        let b = "x = x * 2;";
        assert_eq!(shared_tokens(a, b), 1);
        assert_eq!(shared_tokens_multiset(a, b), 2);
    }

    #[test]
    fn quantile_conventions() {
        let sorted = vec![1, 2, 3, 4];
        assert_eq!(quantile_of(&sorted, 0.5), 2.5);
        assert_eq!(quantile_of(&sorted, 0.25), 1.75);
        let single = vec![7];
        assert_eq!(quantile_of(&single, 0.5), 7.0);
        assert_eq!(mean_of(&single), 7.0);
    }

    #[test]
    fn single_pair_distribution_degenerates_to_its_count() {
        let pair = test_pair();
        let stats = overlap_distribution(&[pair.clone()], &[ContextLevel::Fm], false);
        let expected = shared_tokens(&pair.focal_method.body, &pair.test_case.body) as f64;
        assert_eq!(stats.levels[0].pairs, 1);
        assert_eq!(stats.levels[0].mean, expected);
        assert_eq!(stats.levels[0].median, expected);
    }

    #[test]
    fn csv_layout() {
        let pair = test_pair();
        let stats = overlap_distribution(&[pair], &[ContextLevel::Fm, ContextLevel::FmFc], false);
        let csv = distribution_csv(&stats);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("level,shared_tokens"));
        assert!(lines.next().unwrap().starts_with("fm,"));
        assert!(lines.next().unwrap().starts_with("fm+fc,"));
    }

    fn test_pair() -> MappedPair {
        use crate::pair::*;
        MappedPair {
            schema_version: SCHEMA_VERSION,
            repo_id: "r".into(),
            test_class_path: "T.java".into(),
            test_case: TestCaseRecord {
                name: "testAdd".into(),
                body: "@Test void testAdd() { assertEquals(8, c.add(3)); }".into(),
            },
            focal_class_path: "C.java".into(),
            focal_method: FocalMethodRecord {
                name: "add".into(),
                signature: "int add(int v)".into(),
                body: "int add(int v) { return total + v; }".into(),
            },
            class_match: ClassMatch::Path,
            method_match: MethodMatch::Name,
            focal_class: FocalClassInfo {
                name: "Calc".into(),
                constructor_signatures: vec![],
                public_method_signatures: vec![],
                public_field_declarations: vec![],
            },
            context: None,
        }
    }
}
