//! Parsed Java declarations: the queryable model the mining heuristics run on.
//!
//! Models are immutable after construction and safe to share across threads.

use serde::{Deserialize, Serialize};

/// One `.java` file handed to the parser.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceFile {
    /// Opaque repository identifier, carried through to mapped pairs.
    pub repo_id: String,
    /// Repository-relative path, forward slashes.
    pub rel_path: String,
    pub content: String,
}

impl SourceFile {
    pub fn new(
        repo_id: impl Into<String>,
        rel_path: impl Into<String>,
        content: impl Into<String>,
    ) -> Self {
        SourceFile {
            repo_id: repo_id.into(),
            rel_path: rel_path.into().replace('\\', "/"),
            content: content.into(),
        }
    }
}

/// A class, interface, enum, or record declaration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassModel {
    /// Simple name as written.
    pub name: String,
    /// Package-qualified name including the nesting chain, e.g. `com.x.Outer.Inner`.
    pub qualified_name: String,
    /// Repository-relative source path.
    pub rel_path: String,
    /// Methods and constructors, in source order.
    pub methods: Vec<MethodModel>,
    /// One entry per declarator: `int a, b;` yields two fields.
    pub fields: Vec<FieldModel>,
    pub is_nested: bool,
}

impl ClassModel {
    /// Methods excluding constructors.
    pub fn plain_methods(&self) -> impl Iterator<Item = &MethodModel> {
        self.methods.iter().filter(|m| !m.is_constructor)
    }

    pub fn constructors(&self) -> impl Iterator<Item = &MethodModel> {
        self.methods.iter().filter(|m| m.is_constructor)
    }

    pub fn test_methods(&self) -> impl Iterator<Item = &MethodModel> {
        self.methods.iter().filter(|m| m.is_test())
    }

    pub fn is_test_class(&self) -> bool {
        self.methods.iter().any(|m| m.is_test())
    }

    /// Directory part of `rel_path` ("" for files at the repo root).
    pub fn dir_path(&self) -> &str {
        match self.rel_path.rfind('/') {
            Some(idx) => &self.rel_path[..idx],
            None => "",
        }
    }
}

/// One invoked callee inside a method body. Receiver types are not resolved;
/// only the simple name and the call-site argument count are kept.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invocation {
    pub name: String,
    pub arity: usize,
}

/// A method or constructor declaration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MethodModel {
    pub name: String,
    /// Return type + name + parameters as written, e.g. `int add(int a, int b)`.
    /// Constructors omit the return type: `Calculator(int v)`.
    pub signature: String,
    /// Verbatim source slice of the whole declaration, annotations included.
    pub body_text: String,
    /// Byte range of `body_text` within the enclosing file content.
    pub span: (usize, usize),
    /// Annotation names as written, arguments stripped, source order.
    /// `@Test(timeout = 4000)` is recorded as `Test`; `@org.junit.Test` as `org.junit.Test`.
    pub annotations: Vec<String>,
    /// Invoked callee names in source order, duplicates preserved.
    pub invocations: Vec<Invocation>,
    /// Modifier keywords as written, including visibility.
    pub modifiers: Vec<String>,
    /// Parameter types as written, one per parameter.
    pub param_types: Vec<String>,
    pub is_constructor: bool,
}

impl MethodModel {
    pub fn is_public(&self) -> bool {
        self.modifiers.iter().any(|m| m == "public")
    }

    /// True iff an annotation's simple name is `Test`, ignoring any package
    /// prefix and annotation arguments. Covers both JUnit 4 and JUnit 5 styles.
    pub fn is_test(&self) -> bool {
        self.annotations
            .iter()
            .any(|a| annotation_simple_name(a) == "Test")
    }

    pub fn invocation_names(&self) -> impl Iterator<Item = &str> {
        self.invocations.iter().map(|i| i.name.as_str())
    }
}

/// Simple name of an annotation: drop arguments, then any package prefix.
pub fn annotation_simple_name(annotation: &str) -> &str {
    let head = annotation.split('(').next().unwrap_or(annotation).trim();
    head.rsplit('.').next().unwrap_or(head)
}

/// One declared field (one entry per declarator).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldModel {
    pub name: String,
    /// Type as written, e.g. `List<String>`.
    pub declared_type: String,
    pub modifiers: Vec<String>,
}

impl FieldModel {
    pub fn is_public(&self) -> bool {
        self.modifiers.iter().any(|m| m == "public")
    }
}

/// `true` iff the method carries a `Test` annotation (simple-name match).
pub fn is_test_method(m: &MethodModel) -> bool {
    m.is_test()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn method_with_annotations(annotations: &[&str]) -> MethodModel {
        MethodModel {
            name: "t".into(),
            signature: "void t()".into(),
            body_text: "void t() {}".into(),
            span: (0, 11),
            annotations: annotations.iter().map(|s| s.to_string()).collect(),
            invocations: vec![],
            modifiers: vec![],
            param_types: vec![],
            is_constructor: false,
        }
    }

    #[test]
    fn test_annotation_detected() {
        assert!(is_test_method(&method_with_annotations(&["Test"])));
    }

    #[test]
    fn non_test_annotation_rejected() {
        assert!(!is_test_method(&method_with_annotations(&["Override"])));
        assert!(!is_test_method(&method_with_annotations(&[])));
        // Matching is on the simple name, not a substring.
        assert!(!is_test_method(&method_with_annotations(&["TestFactory"])));
    }

    #[test]
    fn qualified_and_parameterized_forms_detected() {
        assert!(is_test_method(&method_with_annotations(&["org.junit.Test"])));
        assert!(is_test_method(&method_with_annotations(&[
            "org.junit.jupiter.api.Test"
        ])));
        assert!(is_test_method(&method_with_annotations(&[
            "Test(timeout = 4000)"
        ])));
    }

    #[test]
    fn backslash_paths_normalized() {
        let f = SourceFile::new("r", "src\\main\\java\\Foo.java", "");
        assert_eq!(f.rel_path, "src/main/java/Foo.java");
    }
}
