//! Cobertura-style coverage XML parsing and focal-method attribution.
//!
//! Reports nest `packages → package → classes → class → methods → method →
//! lines → line`. A line counts as covered when `hits > 0`; covered
//! conditions come from `condition-coverage="P% (x/y)"` attributes on branch
//! lines, summing the `x` values.

use std::path::Path;

use quick_xml::events::Event;
use quick_xml::Reader;
use serde::{Deserialize, Serialize};

use crate::error::CoverageError;

/// Per-method coverage extracted from one report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverageRecord {
    /// `filename` attribute of the enclosing class element.
    pub file: String,
    pub class_name: String,
    pub method_name: String,
    /// Raw `signature` attribute, JVM descriptor or source style.
    pub signature: String,
    pub lines_covered: u32,
    pub conditions_covered: u32,
}

/// Parse a Cobertura-style XML report into one record per method element.
pub fn parse_coverage_xml(path: &Path) -> Result<Vec<CoverageRecord>, CoverageError> {
    let text = std::fs::read_to_string(path).map_err(|source| CoverageError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_coverage_str(&text).map_err(|reason| CoverageError::Xml {
        path: path.to_path_buf(),
        reason,
    })
}

pub fn parse_coverage_str(text: &str) -> Result<Vec<CoverageRecord>, String> {
    let mut reader = Reader::from_str(text);
    reader.config_mut().trim_text(true);

    let mut records = Vec::new();
    let mut class_file = String::new();
    let mut class_name = String::new();
    let mut current: Option<CoverageRecord> = None;
    let mut in_method_lines = false;

    loop {
        let event = reader.read_event().map_err(|e| e.to_string())?;
        match event {
            Event::Start(ref e) | Event::Empty(ref e) => {
                let self_closing = matches!(event, Event::Empty(_));
                match e.name().as_ref() {
                    b"class" => {
                        class_file = attr(e, "filename")?.unwrap_or_default();
                        class_name = attr(e, "name")?.unwrap_or_default();
                    }
                    b"method" => {
                        let record = CoverageRecord {
                            file: class_file.clone(),
                            class_name: class_name.clone(),
                            method_name: attr(e, "name")?.unwrap_or_default(),
                            signature: attr(e, "signature")?.unwrap_or_default(),
                            lines_covered: 0,
                            conditions_covered: 0,
                        };
                        if self_closing {
                            records.push(record);
                        } else {
                            current = Some(record);
                        }
                    }
                    b"lines" => {
                        if current.is_some() && !self_closing {
                            in_method_lines = true;
                        }
                    }
                    b"line" => {
                        if in_method_lines {
                            if let Some(record) = current.as_mut() {
                                let hits: u64 = attr(e, "hits")?
                                    .and_then(|h| h.parse().ok())
                                    .unwrap_or(0);
                                if hits > 0 {
                                    record.lines_covered += 1;
                                }
                                if let Some(cc) = attr(e, "condition-coverage")? {
                                    record.conditions_covered += covered_conditions(&cc);
                                }
                            }
                        }
                    }
                    _ => {}
                }
            }
            Event::End(e) => match e.name().as_ref() {
                b"method" => {
                    if let Some(record) = current.take() {
                        records.push(record);
                    }
                    in_method_lines = false;
                }
                b"lines" => in_method_lines = false,
                _ => {}
            },
            Event::Eof => break,
            _ => {}
        }
    }

    Ok(records)
}

fn attr(e: &quick_xml::events::BytesStart, name: &str) -> Result<Option<String>, String> {
    match e.try_get_attribute(name) {
        Ok(Some(a)) => {
            let raw = std::str::from_utf8(&a.value).map_err(|err| err.to_string())?;
            quick_xml::escape::unescape(raw)
                .map(|v| Some(v.into_owned()))
                .map_err(|err| err.to_string())
        }
        Ok(None) => Ok(None),
        Err(err) => Err(err.to_string()),
    }
}

/// Covered count out of `condition-coverage="50% (1/2)"`.
fn covered_conditions(value: &str) -> u32 {
    let open = match value.find('(') {
        Some(i) => i,
        None => return 0,
    };
    value[open + 1..]
        .split(['/', ')'])
        .next()
        .and_then(|x| x.trim().parse().ok())
        .unwrap_or(0)
}

/// Normalize a parameter type to its simple form: package qualifiers and
/// generic arguments dropped, varargs as arrays. `java.util.List<String>` and
/// `Ljava/util/List;` both become `List`.
pub fn simple_type(raw: &str) -> String {
    let mut t = raw.trim().to_string();
    // Erase generic arguments, innermost first.
    while let (Some(open), Some(close)) = (t.find('<'), t.rfind('>')) {
        if open < close {
            t.replace_range(open..=close, "");
        } else {
            break;
        }
    }
    let t = t.replace("...", "[]");
    let mut dims = 0;
    let mut base = t.trim().to_string();
    while let Some(stripped) = base.strip_suffix("[]") {
        dims += 1;
        base = stripped.trim().to_string();
    }
    let simple = base
        .rsplit(['.', '/'])
        .next()
        .unwrap_or(base.as_str())
        .trim()
        .to_string();
    format!("{}{}", simple, "[]".repeat(dims))
}

/// Parameter simple types from a coverage-record signature, accepting both
/// JVM descriptors (`(Ljava/lang/String;I)Z`) and source style
/// (`boolean isDigits(String str)`).
pub fn signature_param_types(signature: &str) -> Vec<String> {
    let inner = match (signature.find('('), signature.rfind(')')) {
        (Some(open), Some(close)) if open < close => &signature[open + 1..close],
        _ => return Vec::new(),
    };
    if inner.trim().is_empty() {
        return Vec::new();
    }
    if looks_like_descriptor(inner) {
        parse_descriptor_params(inner)
    } else {
        split_source_params(inner)
            .iter()
            .map(|p| simple_type(&param_type_of(p)))
            .collect()
    }
}

fn looks_like_descriptor(inner: &str) -> bool {
    // Descriptors have no commas or spaces and are built from primitive codes
    // plus L...; class references.
    !inner.contains(',')
        && !inner.contains(' ')
        && inner.chars().all(|c| {
            matches!(c, 'B' | 'C' | 'D' | 'F' | 'I' | 'J' | 'S' | 'Z' | 'V' | 'L' | '[' | ';')
                || c.is_ascii_alphanumeric()
                || c == '/'
                || c == '$'
                || c == '_'
        })
        && (inner.starts_with(['B', 'C', 'D', 'F', 'I', 'J', 'S', 'Z', 'L', '['])
            || inner.is_empty())
}

fn parse_descriptor_params(inner: &str) -> Vec<String> {
    let mut out = Vec::new();
    let bytes = inner.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let mut dims = 0;
        while i < bytes.len() && bytes[i] == b'[' {
            dims += 1;
            i += 1;
        }
        if i >= bytes.len() {
            break;
        }
        let base = match bytes[i] {
            b'B' => "byte".to_string(),
            b'C' => "char".to_string(),
            b'D' => "double".to_string(),
            b'F' => "float".to_string(),
            b'I' => "int".to_string(),
            b'J' => "long".to_string(),
            b'S' => "short".to_string(),
            b'Z' => "boolean".to_string(),
            b'V' => "void".to_string(),
            b'L' => {
                let end = inner[i..].find(';').map(|p| i + p).unwrap_or(inner.len());
                let name = &inner[i + 1..end];
                i = end;
                name.rsplit(['/', '$', '.']).next().unwrap_or(name).to_string()
            }
            other => (other as char).to_string(),
        };
        i += 1;
        out.push(format!("{}{}", base, "[]".repeat(dims)));
    }
    out
}

/// Split `int a, Map<String, Integer> m` on top-level commas only.
fn split_source_params(inner: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in inner.char_indices() {
        match c {
            '<' => depth += 1,
            '>' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(inner[start..i].trim().to_string());
                start = i + 1;
            }
            _ => {}
        }
    }
    let last = inner[start..].trim();
    if !last.is_empty() {
        parts.push(last.to_string());
    }
    parts
}

/// The type portion of one source-style parameter declaration: annotations
/// and `final` dropped, trailing variable name dropped when present, C-style
/// array brackets moved onto the type.
fn param_type_of(param: &str) -> String {
    let mut words: Vec<&str> = param
        .split_whitespace()
        .filter(|w| !w.starts_with('@') && *w != "final")
        .collect();
    if words.len() > 1 {
        let name = words.pop().unwrap_or_default();
        let mut ty = words.join(" ");
        // `int arr[]` puts the brackets on the name.
        let brackets = name.matches("[]").count();
        for _ in 0..brackets {
            ty.push_str("[]");
        }
        ty
    } else {
        words.join(" ")
    }
}

/// Does this record attribute coverage to a method with `name` and the given
/// source signature? Parameter types are compared as simple names; an empty
/// record signature falls back to a name-only match.
pub fn record_matches_method(record: &CoverageRecord, name: &str, source_signature: &str) -> bool {
    if record.method_name != name {
        return false;
    }
    if record.signature.trim().is_empty() {
        return true;
    }
    signature_param_types(&record.signature) == signature_param_types(source_signature)
}
