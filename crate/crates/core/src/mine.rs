//! Test-to-focal-method mining over one repository.
//!
//! Heuristics run in sequence. Focal class: mirrored `src/test` → `src/main`
//! path first, then unique repo-global name match on the stripped class name.
//! Focal method: stripped-name match first, then the unique-method-call
//! intersection. Anything unresolved is discarded with a recorded reason;
//! the miner never fabricates a low-confidence pair.

use std::collections::BTreeSet;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{MineError, ParseFailure};
use crate::model::{ClassModel, MethodModel, SourceFile};
use crate::pair::{
    ClassMatch, FocalClassInfo, FocalMethodRecord, MappedPair, MethodMatch, TestCaseRecord,
    SCHEMA_VERSION,
};
use crate::parse;

/// Why a test case produced no pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiscardReason {
    /// Name matching found more than one class with the stripped name.
    AmbiguousFocalClass,
    /// Neither path nor name matching resolved a focal class.
    NoFocalClass,
    NoNameMatchNoUniqueCall,
    /// Unique-call intersection hit overloads no call-site arity disambiguates.
    OverloadAmbiguous,
    /// Unique-call intersection resolved to a constructor.
    ConstructorTarget,
}

/// Discards tallied by category.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscardCounts {
    pub ambiguous_focal_class: usize,
    pub no_focal_class: usize,
    pub no_name_match_no_unique_call: usize,
    pub overload_ambiguous: usize,
    pub constructor_target: usize,
}

impl DiscardCounts {
    fn record(&mut self, reason: DiscardReason) {
        match reason {
            DiscardReason::AmbiguousFocalClass => self.ambiguous_focal_class += 1,
            DiscardReason::NoFocalClass => self.no_focal_class += 1,
            DiscardReason::NoNameMatchNoUniqueCall => self.no_name_match_no_unique_call += 1,
            DiscardReason::OverloadAmbiguous => self.overload_ambiguous += 1,
            DiscardReason::ConstructorTarget => self.constructor_target += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.ambiguous_focal_class
            + self.no_focal_class
            + self.no_name_match_no_unique_call
            + self.overload_ambiguous
            + self.constructor_target
    }

    fn add(&mut self, other: &DiscardCounts) {
        self.ambiguous_focal_class += other.ambiguous_focal_class;
        self.no_focal_class += other.no_focal_class;
        self.no_name_match_no_unique_call += other.no_name_match_no_unique_call;
        self.overload_ambiguous += other.overload_ambiguous;
        self.constructor_target += other.constructor_target;
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MiningCounts {
    pub files_scanned: usize,
    pub files_parsed: usize,
    pub parse_failures: usize,
    pub classes: usize,
    pub test_classes: usize,
    pub test_cases: usize,
    pub pairs_mapped: usize,
    pub discards: DiscardCounts,
}

impl MiningCounts {
    pub fn add(&mut self, other: &MiningCounts) {
        self.files_scanned += other.files_scanned;
        self.files_parsed += other.files_parsed;
        self.parse_failures += other.parse_failures;
        self.classes += other.classes;
        self.test_classes += other.test_classes;
        self.test_cases += other.test_cases;
        self.pairs_mapped += other.pairs_mapped;
        self.discards.add(&other.discards);
    }
}

/// What one repository run did: counts plus every unparseable file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MiningReport {
    pub repo_id: String,
    #[serde(flatten)]
    pub counts: MiningCounts,
    pub parse_failure_files: Vec<ParseFailure>,
}

/// Classes containing at least one test method.
pub fn find_test_classes(repo: &[ClassModel]) -> Vec<&ClassModel> {
    repo.iter().filter(|c| c.is_test_class()).collect()
}

/// Stripped-name candidates for a test class name: suffix first, then prefix.
/// `FooTest` → `Foo`; `TestFoo` → `Foo`; `TestFooTest` → both.
fn stripped_class_names(name: &str) -> Vec<String> {
    let mut out = Vec::new();
    if let Some(s) = name.strip_suffix("Test") {
        if !s.is_empty() {
            out.push(s.to_string());
        }
    }
    if let Some(s) = name.strip_prefix("Test") {
        if !s.is_empty() && !out.contains(&s.to_string()) {
            out.push(s.to_string());
        }
    }
    out
}

/// Map a test directory to its production mirror: swap the `test` path
/// segment to `main` where it sits directly under `src`. Returns `None` for
/// layouts without that shape.
fn mirrored_main_dir(test_dir: &str) -> Option<String> {
    let mut parts: Vec<&str> = test_dir.split('/').collect();
    for i in 0..parts.len().saturating_sub(1) {
        if parts[i] == "src" && parts[i + 1] == "test" {
            parts[i + 1] = "main";
            return Some(parts.join("/"));
        }
    }
    None
}

#[derive(Debug)]
pub enum FocalClassResolution<'a> {
    Matched(&'a ClassModel, ClassMatch),
    /// Name matching found `count` classes named `name`; the pair is discarded.
    Ambiguous { name: String, count: usize },
    NoMatch,
}

/// Resolve the focal class for `test_class`: path matching first, then unique
/// repo-global name matching.
pub fn match_focal_class<'a>(
    test_class: &ClassModel,
    repo: &'a [ClassModel],
) -> FocalClassResolution<'a> {
    let candidates = stripped_class_names(&test_class.name);
    if candidates.is_empty() {
        return FocalClassResolution::NoMatch;
    }

    // Path matching.
    if let Some(main_dir) = mirrored_main_dir(test_class.dir_path()) {
        for stripped in &candidates {
            if let Some(class) = repo
                .iter()
                .find(|c| c.name == *stripped && c.dir_path() == main_dir)
            {
                return FocalClassResolution::Matched(class, ClassMatch::Path);
            }
        }
    }

    // Name matching: unique across the whole repository.
    let mut ambiguous: Option<(String, usize)> = None;
    for stripped in &candidates {
        let matches: Vec<&ClassModel> = repo.iter().filter(|c| c.name == *stripped).collect();
        match matches.len() {
            0 => {}
            1 => return FocalClassResolution::Matched(matches[0], ClassMatch::Name),
            n => {
                if ambiguous.is_none() {
                    ambiguous = Some((stripped.clone(), n));
                }
            }
        }
    }

    match ambiguous {
        Some((name, count)) => FocalClassResolution::Ambiguous { name, count },
        None => FocalClassResolution::NoMatch,
    }
}

/// Stripped-name candidates for a test method name, suffix forms first.
fn stripped_method_names(name: &str) -> Vec<String> {
    let mut out = Vec::new();
    for affix in ["Test", "test"] {
        if let Some(s) = name.strip_suffix(affix) {
            if !s.is_empty() && !out.contains(&s.to_string()) {
                out.push(s.to_string());
            }
        }
    }
    for affix in ["test", "Test"] {
        if let Some(s) = name.strip_prefix(affix) {
            if !s.is_empty() && !out.contains(&s.to_string()) {
                out.push(s.to_string());
            }
        }
    }
    out
}

/// Equality that forgives the case of the first character only, so a stripped
/// `Add` from `testAdd` matches method `add`.
fn loose_name_eq(a: &str, b: &str) -> bool {
    let (mut ac, mut bc) = (a.chars(), b.chars());
    match (ac.next(), bc.next()) {
        (Some(x), Some(y)) => {
            x.to_lowercase().eq(y.to_lowercase()) && ac.as_str() == bc.as_str()
        }
        _ => false,
    }
}

#[derive(Debug)]
pub enum FocalMethodResolution<'a> {
    Matched(&'a MethodModel, MethodMatch),
    Discarded(DiscardReason),
}

/// Resolve the focal method within an already-resolved focal class.
pub fn match_focal_method<'a>(
    test_case: &MethodModel,
    focal_class: &'a ClassModel,
) -> FocalMethodResolution<'a> {
    // Name matching over non-constructor methods.
    let stripped = stripped_method_names(&test_case.name);
    let name_matched: Vec<&MethodModel> = focal_class
        .plain_methods()
        .filter(|m| stripped.iter().any(|s| loose_name_eq(s, &m.name)))
        .collect();
    if name_matched.len() == 1 {
        return FocalMethodResolution::Matched(name_matched[0], MethodMatch::Name);
    }

    // Unique method call: intersect invoked names with the class's method
    // names (constructors included in the name universe).
    let invoked: BTreeSet<&str> = test_case.invocation_names().collect();
    let defined: BTreeSet<&str> = focal_class.methods.iter().map(|m| m.name.as_str()).collect();
    let shared: Vec<&str> = invoked.intersection(&defined).copied().collect();
    if shared.len() != 1 {
        return FocalMethodResolution::Discarded(DiscardReason::NoNameMatchNoUniqueCall);
    }
    let target_name = shared[0];

    let targets: Vec<&MethodModel> = focal_class
        .plain_methods()
        .filter(|m| m.name == target_name)
        .collect();
    if targets.is_empty() {
        // Only constructors carry that name.
        return FocalMethodResolution::Discarded(DiscardReason::ConstructorTarget);
    }
    if targets.len() == 1 {
        return FocalMethodResolution::Matched(targets[0], MethodMatch::UniqueCall);
    }

    // Overloads share the name; pick the one whose arity appears at a call
    // site, and only if exactly one does.
    let call_arities: BTreeSet<usize> = test_case
        .invocations
        .iter()
        .filter(|i| i.name == target_name)
        .map(|i| i.arity)
        .collect();
    let viable: Vec<&MethodModel> = targets
        .into_iter()
        .filter(|m| call_arities.contains(&m.param_types.len()))
        .collect();
    if viable.len() == 1 {
        FocalMethodResolution::Matched(viable[0], MethodMatch::UniqueCall)
    } else {
        FocalMethodResolution::Discarded(DiscardReason::OverloadAmbiguous)
    }
}

/// Parse in-memory sources in parallel, keeping file order. Broken files are
/// returned as failures, never dropped.
pub fn parse_sources(files: &[SourceFile]) -> (Vec<ClassModel>, Vec<ParseFailure>) {
    let results: Vec<Result<Vec<ClassModel>, ParseFailure>> =
        files.par_iter().map(parse::parse_file).collect();
    let mut classes = Vec::new();
    let mut failures = Vec::new();
    for result in results {
        match result {
            Ok(mut c) => classes.append(&mut c),
            Err(f) => failures.push(f),
        }
    }
    (classes, failures)
}

/// Run the heuristics over a parsed repository. Pure; pairs come out ordered
/// by test-class path, then test-case source order.
pub fn map_pairs(repo_id: &str, classes: &[ClassModel]) -> (Vec<MappedPair>, MiningCounts) {
    let mut counts = MiningCounts {
        classes: classes.len(),
        ..Default::default()
    };
    let mut pairs = Vec::new();

    for test_class in find_test_classes(classes) {
        counts.test_classes += 1;

        let resolution = match match_focal_class(test_class, classes) {
            FocalClassResolution::Matched(class, matched_by) => Ok((class, matched_by)),
            FocalClassResolution::Ambiguous { .. } => Err(DiscardReason::AmbiguousFocalClass),
            FocalClassResolution::NoMatch => Err(DiscardReason::NoFocalClass),
        };

        for test_case in test_class.test_methods() {
            counts.test_cases += 1;

            let (focal_class, class_match) = match resolution {
                Ok(found) => found,
                Err(reason) => {
                    counts.discards.record(reason);
                    continue;
                }
            };

            match match_focal_method(test_case, focal_class) {
                FocalMethodResolution::Matched(focal_method, method_match) => {
                    counts.pairs_mapped += 1;
                    pairs.push(MappedPair {
                        schema_version: SCHEMA_VERSION,
                        repo_id: repo_id.to_string(),
                        test_class_path: test_class.rel_path.clone(),
                        test_case: TestCaseRecord {
                            name: test_case.name.clone(),
                            body: test_case.body_text.clone(),
                        },
                        focal_class_path: focal_class.rel_path.clone(),
                        focal_method: FocalMethodRecord {
                            name: focal_method.name.clone(),
                            signature: focal_method.signature.clone(),
                            body: focal_method.body_text.clone(),
                        },
                        class_match,
                        method_match,
                        focal_class: FocalClassInfo::capture(focal_class, focal_method),
                        context: None,
                    });
                }
                FocalMethodResolution::Discarded(reason) => counts.discards.record(reason),
            }
        }
    }

    (pairs, counts)
}

/// Mine one repository directory tree.
pub fn mine_repository(
    root: &Path,
    repo_id: Option<&str>,
) -> Result<(Vec<MappedPair>, MiningReport), MineError> {
    if !root.is_dir() {
        return Err(MineError::UnreadableRoot(root.to_path_buf()));
    }
    let repo_id = repo_id
        .map(str::to_string)
        .or_else(|| root.file_name().map(|n| n.to_string_lossy().into_owned()))
        .unwrap_or_else(|| "repo".to_string());

    let mut rel_paths: Vec<String> = walkdir::WalkDir::new(root)
        .sort_by_file_name()
        .into_iter()
        .filter_map(|entry| entry.ok())
        .filter(|e| e.file_type().is_file())
        .filter(|e| e.path().extension().is_some_and(|ext| ext == "java"))
        .filter_map(|e| {
            e.path()
                .strip_prefix(root)
                .ok()
                .map(|p| p.to_string_lossy().replace('\\', "/"))
        })
        .collect();
    rel_paths.sort();

    let files_scanned = rel_paths.len();

    // IO or parse trouble in one file never aborts the repository.
    let loaded: Vec<Result<SourceFile, ParseFailure>> = rel_paths
        .par_iter()
        .map(|rel| match std::fs::read(root.join(rel)) {
            Ok(bytes) => match String::from_utf8(bytes) {
                Ok(content) => Ok(SourceFile::new(repo_id.clone(), rel.clone(), content)),
                Err(_) => Err(ParseFailure {
                    path: rel.clone(),
                    reason: "not valid UTF-8".to_string(),
                }),
            },
            Err(err) => Err(ParseFailure {
                path: rel.clone(),
                reason: format!("io: {err}"),
            }),
        })
        .collect();

    let mut files = Vec::new();
    let mut failures = Vec::new();
    for item in loaded {
        match item {
            Ok(f) => files.push(f),
            Err(f) => failures.push(f),
        }
    }

    let (classes, parse_failures) = parse_sources(&files);
    failures.extend(parse_failures);
    failures.sort_by(|a, b| a.path.cmp(&b.path));

    let (pairs, mut counts) = map_pairs(&repo_id, &classes);
    counts.files_scanned = files_scanned;
    counts.parse_failures = failures.len();
    counts.files_parsed = files_scanned - failures.len();

    let report = MiningReport {
        repo_id,
        counts,
        parse_failure_files: failures,
    };
    Ok((pairs, report))
}

/// Mine many repositories in parallel; results keep the input order.
pub fn mine_repositories(
    roots: &[(String, std::path::PathBuf)],
) -> Vec<Result<(Vec<MappedPair>, MiningReport), MineError>> {
    roots
        .par_iter()
        .map(|(repo_id, root)| mine_repository(root, Some(repo_id)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn classes_of(files: &[(&str, &str)]) -> Vec<ClassModel> {
        let sources: Vec<SourceFile> = files
            .iter()
            .map(|(path, content)| SourceFile::new("r", *path, *content))
            .collect();
        let (classes, failures) = parse_sources(&sources);
        assert!(failures.is_empty(), "fixture must parse: {failures:?}");
        classes
    }

    #[test]
    fn test_class_detection() {
        let classes = classes_of(&[
            ("A.java", "class A { @Test public void t() {} }"),
            ("B.java", "class B { void helper() {} }"),
        ]);
        let found = find_test_classes(&classes);
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].name, "A");
    }

    #[test]
    fn path_match_on_mirrored_layout() {
        let classes = classes_of(&[
            ("src/main/java/Foo.java", "public class Foo { void run() {} }"),
            (
                "src/test/java/FooTest.java",
                "public class FooTest { @Test public void testRun() { new Foo().run(); } }",
            ),
        ]);
        let test_class = classes.iter().find(|c| c.name == "FooTest").unwrap();
        match match_focal_class(test_class, &classes) {
            FocalClassResolution::Matched(c, ClassMatch::Path) => assert_eq!(c.name, "Foo"),
            other => panic!("expected path match, got {other:?}"),
        }
    }

    #[test]
    fn path_match_takes_precedence_over_name_match() {
        // Both heuristics would succeed; the recorded label must be `path`.
        let classes = classes_of(&[
            ("src/main/java/x/Foo.java", "public class Foo { void f() {} }"),
            (
                "src/test/java/x/FooTest.java",
                "public class FooTest { @Test public void testF() {} }",
            ),
        ]);
        let test_class = classes.iter().find(|c| c.name == "FooTest").unwrap();
        match match_focal_class(test_class, &classes) {
            FocalClassResolution::Matched(_, matched_by) => {
                assert_eq!(matched_by, ClassMatch::Path)
            }
            other => panic!("expected a match, got {other:?}"),
        }
    }

    #[test]
    fn prefix_name_match_when_no_mirrored_path() {
        let classes = classes_of(&[
            ("lib/Foo.java", "public class Foo { void go() {} }"),
            (
                "checks/TestFoo.java",
                "public class TestFoo { @Test public void testGo() {} }",
            ),
        ]);
        let test_class = classes.iter().find(|c| c.name == "TestFoo").unwrap();
        match match_focal_class(test_class, &classes) {
            FocalClassResolution::Matched(c, ClassMatch::Name) => assert_eq!(c.name, "Foo"),
            other => panic!("expected name match, got {other:?}"),
        }
    }

    #[test]
    fn duplicate_names_are_ambiguous() {
        let classes = classes_of(&[
            ("a/Foo.java", "package a; public class Foo {}"),
            ("b/Foo.java", "package b; public class Foo {}"),
            (
                "t/FooTest.java",
                "public class FooTest { @Test public void t() {} }",
            ),
        ]);
        let test_class = classes.iter().find(|c| c.name == "FooTest").unwrap();
        match match_focal_class(test_class, &classes) {
            FocalClassResolution::Ambiguous { name, count } => {
                assert_eq!(name, "Foo");
                assert_eq!(count, 2);
            }
            other => panic!("expected ambiguity, got {other:?}"),
        }
    }

    fn focal_and_test(focal_src: &str, test_src: &str) -> (ClassModel, MethodModel) {
        let classes = classes_of(&[("F.java", focal_src), ("T.java", test_src)]);
        let focal = classes.iter().find(|c| c.rel_path == "F.java").unwrap().clone();
        let test = classes
            .iter()
            .find(|c| c.rel_path == "T.java")
            .unwrap()
            .methods[0]
            .clone();
        (focal, test)
    }

    #[test]
    fn method_name_match_strips_test_prefix() {
        let (focal, test) = focal_and_test(
            "class Calc { int add(int a) { return a; } int mul(int a) { return a; } }",
            "class T { @Test public void testAdd() {} }",
        );
        match match_focal_method(&test, &focal) {
            FocalMethodResolution::Matched(m, MethodMatch::Name) => assert_eq!(m.name, "add"),
            other => panic!("expected name match, got {other:?}"),
        }
    }

    #[test]
    fn unique_call_resolves_when_names_disagree() {
        let (focal, test) = focal_and_test(
            "class Conf { Response review(Sub p) { return null; } void close() {} }",
            "class T { @Test public void checksBehavior() { conf.review(paper); } }",
        );
        match match_focal_method(&test, &focal) {
            FocalMethodResolution::Matched(m, MethodMatch::UniqueCall) => {
                assert_eq!(m.name, "review")
            }
            other => panic!("expected unique call, got {other:?}"),
        }
    }

    #[test]
    fn non_unique_intersection_discards() {
        let (focal, test) = focal_and_test(
            "class C { void add() {} void reset() {} }",
            "class T { @Test public void works() { c.add(); c.reset(); } }",
        );
        match match_focal_method(&test, &focal) {
            FocalMethodResolution::Discarded(DiscardReason::NoNameMatchNoUniqueCall) => {}
            other => panic!("expected discard, got {other:?}"),
        }
    }

    #[test]
    fn overload_resolved_by_call_arity() {
        let (focal, test) = focal_and_test(
            "class M { int sum(int a, int b) { return 0; } int sum(int a, int b, int c) { return 0; } }",
            "class T { @Test public void addsTwo() { m.sum(1, 2); } }",
        );
        match match_focal_method(&test, &focal) {
            FocalMethodResolution::Matched(m, MethodMatch::UniqueCall) => {
                assert_eq!(m.param_types.len(), 2)
            }
            other => panic!("expected arity-resolved overload, got {other:?}"),
        }
    }

    #[test]
    fn overload_with_both_arities_called_is_ambiguous() {
        let (focal, test) = focal_and_test(
            "class M { int sum(int a, int b) { return 0; } int sum(int a, int b, int c) { return 0; } }",
            "class T { @Test public void both() { m.sum(1, 2); m.sum(1, 2, 3); } }",
        );
        match match_focal_method(&test, &focal) {
            FocalMethodResolution::Discarded(DiscardReason::OverloadAmbiguous) => {}
            other => panic!("expected overload ambiguity, got {other:?}"),
        }
    }

    #[test]
    fn name_match_hitting_two_overloads_falls_to_unique_call() {
        // `testSum` name-matches both overloads, so the unique-call heuristic
        // decides using the three-argument call site.
        let (focal, test) = focal_and_test(
            "class M { int sum(int a, int b) { return 0; } int sum(int a, int b, int c) { return 0; } }",
            "class T { @Test public void testSum() { m.sum(1, 2, 3); } }",
        );
        match match_focal_method(&test, &focal) {
            FocalMethodResolution::Matched(m, MethodMatch::UniqueCall) => {
                assert_eq!(m.param_types.len(), 3)
            }
            other => panic!("expected unique-call resolution, got {other:?}"),
        }
    }

    #[test]
    fn constructor_target_discarded() {
        let (focal, test) = focal_and_test(
            "class Chrono { Chrono(int t) {} }",
            "class T { @Test public void makes() { factory.Chrono(1); } }",
        );
        match match_focal_method(&test, &focal) {
            FocalMethodResolution::Discarded(DiscardReason::ConstructorTarget) => {}
            other => panic!("expected constructor discard, got {other:?}"),
        }
    }

    #[test]
    fn instantiation_does_not_pollute_unique_call() {
        // `new Calc(5)` is not a method invocation; only `add` intersects.
        let (focal, test) = focal_and_test(
            "class Calc { Calc(int v) {} int add(int a) { return a; } int mul(int a) { return a; } }",
            "class T { @Test public void accumulates() { new Calc(5).add(3); } }",
        );
        match match_focal_method(&test, &focal) {
            FocalMethodResolution::Matched(m, MethodMatch::UniqueCall) => assert_eq!(m.name, "add"),
            other => panic!("expected unique call, got {other:?}"),
        }
    }

    #[test]
    fn mining_is_deterministic_and_ordered() {
        let files = &[
            (
                "src/main/java/Foo.java",
                "public class Foo { void run() {} void walk() {} }",
            ),
            (
                "src/test/java/FooTest.java",
                "public class FooTest { @Test public void testWalk() {} @Test public void testRun() {} }",
            ),
        ];
        let classes = classes_of(files);
        let (pairs_a, counts_a) = map_pairs("r", &classes);
        let (pairs_b, counts_b) = map_pairs("r", &classes);
        assert_eq!(pairs_a, pairs_b);
        assert_eq!(counts_a, counts_b);
        // Source order within the test class is preserved.
        assert_eq!(pairs_a[0].test_case.name, "testWalk");
        assert_eq!(pairs_a[1].test_case.name, "testRun");
    }

    #[test]
    fn unparseable_file_recorded_not_fatal() {
        let sources = vec![
            SourceFile::new("r", "Bad.java", "class X { void f( { }"),
            SourceFile::new("r", "Ok.java", "class Ok { void g() {} }"),
        ];
        let (classes, failures) = parse_sources(&sources);
        assert_eq!(classes.len(), 1);
        assert_eq!(failures.len(), 1);
        assert_eq!(failures[0].path, "Bad.java");
    }

    #[test]
    fn mirrored_dir_mapping() {
        assert_eq!(
            mirrored_main_dir("src/test/java/com/x").as_deref(),
            Some("src/main/java/com/x")
        );
        assert_eq!(
            mirrored_main_dir("moduleA/src/test/java").as_deref(),
            Some("moduleA/src/main/java")
        );
        // `test` not directly under `src` falls through to name matching.
        assert_eq!(mirrored_main_dir("test/java"), None);
        assert_eq!(mirrored_main_dir("src/x/test"), None);
    }

    #[test]
    fn stripping_rules() {
        assert_eq!(stripped_class_names("FooTest"), vec!["Foo"]);
        assert_eq!(stripped_class_names("TestFoo"), vec!["Foo"]);
        assert_eq!(stripped_class_names("TestFooTest"), vec!["TestFoo", "FooTest"]);
        assert!(stripped_class_names("Test").is_empty());
        assert!(stripped_class_names("Helper").is_empty());
        assert_eq!(stripped_method_names("testAdd"), vec!["Add"]);
        assert_eq!(stripped_method_names("addTest"), vec!["add"]);
        assert!(loose_name_eq("Add", "add"));
        assert!(loose_name_eq("add", "add"));
        assert!(!loose_name_eq("Add", "adD"));
        assert!(!loose_name_eq("", "add"));
    }
}
