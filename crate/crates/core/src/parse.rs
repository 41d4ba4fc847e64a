//! Java source parsing into [`ClassModel`]s via tree-sitter.
//!
//! Parsing is a pure function of file content and safe to run on many files
//! in parallel; each worker thread keeps its own parser instance.

use std::cell::RefCell;

use tree_sitter::{Node, Parser, Tree};

use crate::error::{ParseFailure, SyntaxError};
use crate::model::{ClassModel, FieldModel, Invocation, MethodModel, SourceFile};

thread_local! {
    static PARSER: RefCell<Parser> = RefCell::new(new_java_parser());
}

fn new_java_parser() -> Parser {
    let mut parser = Parser::new();
    parser
        .set_language(&tree_sitter_java::LANGUAGE.into())
        .expect("java grammar is ABI-compatible with the linked tree-sitter");
    parser
}

/// Parse one file into its class models. Any grammar error rejects the whole
/// file; callers count the failure and skip it.
pub fn parse_file(file: &SourceFile) -> Result<Vec<ClassModel>, ParseFailure> {
    let tree = parse_java(&file.content).ok_or_else(|| ParseFailure {
        path: file.rel_path.clone(),
        reason: "parser produced no tree".to_string(),
    })?;

    if tree.root_node().has_error() {
        let diag = first_syntax_error(&tree, &file.content)
            .map(|e| e.to_string())
            .unwrap_or_else(|| "syntax error".to_string());
        return Err(ParseFailure {
            path: file.rel_path.clone(),
            reason: diag,
        });
    }

    Ok(extract_classes(&tree, &file.content, &file.rel_path))
}

pub(crate) fn parse_java(source: &str) -> Option<Tree> {
    PARSER.with(|p| p.borrow_mut().parse(source, None))
}

/// First ERROR or missing node in document order, as a diagnostic.
pub(crate) fn first_syntax_error(tree: &Tree, source: &str) -> Option<SyntaxError> {
    fn find_error(node: Node) -> Option<Node> {
        if node.is_error() || node.is_missing() {
            return Some(node);
        }
        if !node.has_error() {
            return None;
        }
        for child in node.children(&mut node.walk()) {
            if let Some(found) = find_error(child) {
                return Some(found);
            }
        }
        None
    }

    let node = find_error(tree.root_node())?;
    let pos = node.start_position();
    let detail = if node.is_missing() {
        format!("missing {}", node.kind())
    } else {
        let snippet: String = source[node.byte_range()].chars().take(24).collect();
        if snippet.is_empty() {
            "unexpected end of input".to_string()
        } else {
            format!("unexpected input near {snippet:?}")
        }
    };
    Some(SyntaxError {
        line: pos.row + 1,
        column: pos.column + 1,
        detail,
    })
}

/// Collect every named class/interface/enum/record declaration, nested ones
/// included. Anonymous classes are not modeled; invocations inside them still
/// count toward the enclosing method.
pub(crate) fn extract_classes(tree: &Tree, source: &str, rel_path: &str) -> Vec<ClassModel> {
    let package = find_package(tree.root_node(), source);
    let mut classes = Vec::new();
    collect_classes(
        tree.root_node(),
        source,
        rel_path,
        package.as_deref(),
        &[],
        &mut classes,
    );
    classes
}

fn find_package(root: Node, source: &str) -> Option<String> {
    for child in root.children(&mut root.walk()) {
        if child.kind() == "package_declaration" {
            for part in child.children(&mut child.walk()) {
                if matches!(part.kind(), "scoped_identifier" | "identifier") {
                    return Some(node_text(part, source).to_string());
                }
            }
        }
    }
    None
}

const CLASS_KINDS: [&str; 4] = [
    "class_declaration",
    "interface_declaration",
    "enum_declaration",
    "record_declaration",
];

fn collect_classes(
    node: Node,
    source: &str,
    rel_path: &str,
    package: Option<&str>,
    nesting: &[String],
    out: &mut Vec<ClassModel>,
) {
    for child in node.children(&mut node.walk()) {
        if CLASS_KINDS.contains(&child.kind()) {
            if let Some(name) = child
                .child_by_field_name("name")
                .map(|n| node_text(n, source).to_string())
            {
                let mut chain = nesting.to_vec();
                chain.push(name.clone());

                let body = child.child_by_field_name("body");
                let (methods, fields) = match body {
                    Some(body) => extract_members(body, source),
                    None => (Vec::new(), Vec::new()),
                };

                let qualified_name = match package {
                    Some(pkg) => format!("{}.{}", pkg, chain.join(".")),
                    None => chain.join("."),
                };
                out.push(ClassModel {
                    name,
                    qualified_name,
                    rel_path: rel_path.to_string(),
                    methods,
                    fields,
                    is_nested: !nesting.is_empty(),
                });

                if let Some(body) = body {
                    collect_classes(body, source, rel_path, package, &chain, out);
                }
                continue;
            }
        }
        // Anonymous class bodies are reachable through here but never match
        // CLASS_KINDS (no name field), so they are not modeled.
        collect_classes(child, source, rel_path, package, nesting, out);
    }
}

/// Methods, constructors, and fields of one class body, in source order.
fn extract_members(body: Node, source: &str) -> (Vec<MethodModel>, Vec<FieldModel>) {
    let mut methods = Vec::new();
    let mut fields = Vec::new();
    scan_member_nodes(body, source, &mut methods, &mut fields);
    (methods, fields)
}

fn scan_member_nodes(
    body: Node,
    source: &str,
    methods: &mut Vec<MethodModel>,
    fields: &mut Vec<FieldModel>,
) {
    for child in body.children(&mut body.walk()) {
        match child.kind() {
            "method_declaration" => {
                if let Some(m) = extract_method(child, source, false) {
                    methods.push(m);
                }
            }
            "constructor_declaration" | "compact_constructor_declaration" => {
                if let Some(m) = extract_method(child, source, true) {
                    methods.push(m);
                }
            }
            "field_declaration" | "constant_declaration" => {
                extract_fields(child, source, fields);
            }
            // Enum members sit one level deeper.
            "enum_body_declarations" => {
                scan_member_nodes(child, source, methods, fields);
            }
            _ => {}
        }
    }
}

fn extract_method(node: Node, source: &str, is_constructor: bool) -> Option<MethodModel> {
    let name = node_text(node.child_by_field_name("name")?, source).to_string();

    let (annotations, modifiers) = extract_modifiers(node, source);

    let params_node = node.child_by_field_name("parameters");
    let params_text = params_node
        .map(|p| node_text(p, source).to_string())
        .unwrap_or_else(|| "()".to_string());
    let param_types = params_node
        .map(|p| extract_param_types(p, source))
        .unwrap_or_default();

    let signature = if is_constructor {
        format!("{name}{params_text}")
    } else {
        let ret = node
            .child_by_field_name("type")
            .map(|t| node_text(t, source))
            .unwrap_or("void");
        format!("{ret} {name}{params_text}")
    };

    let span = (node.start_byte(), node.end_byte());
    let mut invocations = Vec::new();
    collect_invocations(node, source, &mut invocations);

    Some(MethodModel {
        name,
        signature,
        body_text: source[span.0..span.1].to_string(),
        span,
        annotations,
        invocations,
        modifiers,
        param_types,
        is_constructor,
    })
}

/// Annotation names (arguments stripped) and modifier keywords, source order.
fn extract_modifiers(node: Node, source: &str) -> (Vec<String>, Vec<String>) {
    let mut annotations = Vec::new();
    let mut modifiers = Vec::new();
    for child in node.children(&mut node.walk()) {
        if child.kind() != "modifiers" {
            continue;
        }
        for item in child.children(&mut child.walk()) {
            match item.kind() {
                "annotation" | "marker_annotation" => {
                    if let Some(name) = annotation_name(item, source) {
                        annotations.push(name);
                    }
                }
                _ => modifiers.push(node_text(item, source).to_string()),
            }
        }
    }
    (annotations, modifiers)
}

fn annotation_name(node: Node, source: &str) -> Option<String> {
    if let Some(name) = node.child_by_field_name("name") {
        return Some(node_text(name, source).to_string());
    }
    node.children(&mut node.walk())
        .find(|c| matches!(c.kind(), "identifier" | "scoped_identifier"))
        .map(|c| node_text(c, source).to_string())
}

fn extract_param_types(params: Node, source: &str) -> Vec<String> {
    let mut types = Vec::new();
    for child in params.children(&mut params.walk()) {
        match child.kind() {
            "formal_parameter" => {
                if let Some(ty) = child.child_by_field_name("type") {
                    let mut text = node_text(ty, source).to_string();
                    if let Some(dims) = child.child_by_field_name("dimensions") {
                        text.push_str(node_text(dims, source).trim());
                    }
                    types.push(text);
                }
            }
            "spread_parameter" => {
                // First type-ish child plus the ellipsis.
                let ty = child
                    .children(&mut child.walk())
                    .find(|c| c.kind().ends_with("_type") || c.kind().ends_with("type_identifier"))
                    .map(|c| node_text(c, source).to_string())
                    .unwrap_or_default();
                types.push(format!("{ty}..."));
            }
            _ => {}
        }
    }
    types
}

/// Preorder walk recording `method_invocation` callees: simple name plus
/// call-site argument count. Duplicates preserved.
fn collect_invocations(node: Node, source: &str, out: &mut Vec<Invocation>) {
    if node.kind() == "method_invocation" {
        if let Some(name) = node.child_by_field_name("name") {
            let arity = node
                .child_by_field_name("arguments")
                .map(|a| a.named_child_count())
                .unwrap_or(0);
            out.push(Invocation {
                name: node_text(name, source).to_string(),
                arity,
            });
        }
    }
    for child in node.children(&mut node.walk()) {
        collect_invocations(child, source, out);
    }
}

fn extract_fields(node: Node, source: &str, out: &mut Vec<FieldModel>) {
    let (_, modifiers) = extract_modifiers(node, source);
    let declared_type = node
        .child_by_field_name("type")
        .map(|t| node_text(t, source).to_string())
        .unwrap_or_default();
    for child in node.children(&mut node.walk()) {
        if child.kind() == "variable_declarator" {
            if let Some(name) = child.child_by_field_name("name") {
                out.push(FieldModel {
                    name: node_text(name, source).to_string(),
                    declared_type: declared_type.clone(),
                    modifiers: modifiers.clone(),
                });
            }
        }
    }
}

fn node_text<'a>(node: Node, source: &'a str) -> &'a str {
    &source[node.byte_range()]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(src: &str) -> Vec<ClassModel> {
        parse_file(&SourceFile::new("r", "Test.java", src)).expect("fixture parses")
    }

    #[test]
    fn minimal_class_with_invocation() {
        let classes = parse("class Foo { void bar(){ baz(); } }");
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].name, "Foo");
        assert_eq!(classes[0].methods.len(), 1);
        let m = &classes[0].methods[0];
        assert_eq!(m.name, "bar");
        assert_eq!(m.invocation_names().collect::<Vec<_>>(), vec!["baz"]);
        assert!(!m.is_constructor);
    }

    #[test]
    fn test_annotation_recorded() {
        let classes = parse("class T { @Test public void t(){} }");
        let m = &classes[0].methods[0];
        assert!(m.annotations.iter().any(|a| a == "Test"));
        assert!(m.is_test());
    }

    #[test]
    fn parameterized_and_qualified_annotations() {
        let classes = parse(
            "class T { @Test(timeout = 4000) public void a(){} @org.junit.Test public void b(){} }",
        );
        assert_eq!(classes[0].methods[0].annotations, vec!["Test"]);
        assert_eq!(classes[0].methods[1].annotations, vec!["org.junit.Test"]);
        assert!(classes[0].methods.iter().all(|m| m.is_test()));
    }

    #[test]
    fn unbalanced_braces_rejected() {
        let file = SourceFile::new("r", "Bad.java", "class X { void f( { }");
        let err = parse_file(&file).unwrap_err();
        assert_eq!(err.path, "Bad.java");
        assert!(!err.reason.is_empty());
    }

    #[test]
    fn body_text_matches_span() {
        let src = "class C {\n    int add(int a, int b) {\n        return a + b;\n    }\n}\n";
        let classes = parse(src);
        let m = &classes[0].methods[0];
        assert_eq!(&src[m.span.0..m.span.1], m.body_text);
        assert!(m.body_text.starts_with("int add"));
        assert!(m.body_text.ends_with('}'));
    }

    #[test]
    fn constructors_flagged_and_signature_built() {
        let src = "class Calculator { Calculator(int v) {} public int add(int a, int b) { return a + b; } }";
        let classes = parse(src);
        let ctor = &classes[0].methods[0];
        assert!(ctor.is_constructor);
        assert_eq!(ctor.signature, "Calculator(int v)");
        let add = &classes[0].methods[1];
        assert_eq!(add.signature, "int add(int a, int b)");
        assert_eq!(add.param_types, vec!["int", "int"]);
        assert!(add.is_public());
    }

    #[test]
    fn multi_declarator_yields_one_field_each() {
        let classes = parse("class F { public int a, b; private String s; }");
        let f = &classes[0];
        assert_eq!(f.fields.len(), 3);
        assert_eq!(f.fields[0].name, "a");
        assert_eq!(f.fields[1].name, "b");
        assert!(f.fields[0].is_public());
        assert!(f.fields[1].is_public());
        assert_eq!(f.fields[2].declared_type, "String");
        assert!(!f.fields[2].is_public());
    }

    #[test]
    fn nested_named_classes_modeled() {
        let src = "package com.x; class Outer { void op(){} static class Inner { void inner(){} } }";
        let classes = parse(src);
        assert_eq!(classes.len(), 2);
        assert_eq!(classes[0].qualified_name, "com.x.Outer");
        assert!(!classes[0].is_nested);
        assert_eq!(classes[1].qualified_name, "com.x.Outer.Inner");
        assert!(classes[1].is_nested);
        // Inner's method belongs to Inner only.
        assert_eq!(classes[0].methods.len(), 1);
        assert_eq!(classes[1].methods.len(), 1);
    }

    #[test]
    fn anonymous_classes_skipped_but_invocations_kept() {
        let src = r#"
class Handler {
    void setup() {
        button.addListener(new Listener() {
            public void onEvent(Event e) { handle(e); }
        });
    }
}
"#;
        let classes = parse(src);
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].methods.len(), 1);
        let names: Vec<_> = classes[0].methods[0].invocation_names().collect();
        assert!(names.contains(&"addListener"));
        assert!(names.contains(&"handle"));
    }

    #[test]
    fn invocations_in_source_order_with_duplicates_and_arity() {
        let src = "class T { void t() { a(); b(1, 2); a(); assertEquals(8, c.add(3)); } }";
        let classes = parse(src);
        let inv = &classes[0].methods[0].invocations;
        let names: Vec<_> = inv.iter().map(|i| i.name.as_str()).collect();
        assert_eq!(names, vec!["a", "b", "a", "assertEquals", "add"]);
        assert_eq!(inv[1].arity, 2);
        assert_eq!(inv[3].arity, 2);
        assert_eq!(inv[4].arity, 1);
    }

    #[test]
    fn enums_and_interfaces_modeled() {
        let src = "enum Status { ACTIVE, DONE; boolean isTerminal() { return this == DONE; } }\ninterface Shape { double area(); }";
        let classes = parse(src);
        assert_eq!(classes.len(), 2);
        assert_eq!(classes[0].name, "Status");
        assert_eq!(classes[0].methods[0].name, "isTerminal");
        assert_eq!(classes[1].name, "Shape");
        assert_eq!(classes[1].methods[0].name, "area");
    }

    #[test]
    fn parsing_is_deterministic() {
        let src = "class A { void m() { x.y(); } int f; }";
        assert_eq!(parse(src), parse(src));
    }

    #[test]
    fn varargs_param_type() {
        let classes = parse("class V { void log(String fmt, Object... args) {} }");
        assert_eq!(
            classes[0].methods[0].param_types,
            vec!["String", "Object..."]
        );
    }
}
