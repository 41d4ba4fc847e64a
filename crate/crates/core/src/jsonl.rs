//! JSON Lines reading and writing: one object per line, identity round-trip.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::error::JsonlError;
use crate::pair::{MappedPair, SCHEMA_VERSION};

/// Write one JSON object per line. Field order is the struct declaration
/// order, so identical values produce identical bytes.
pub fn write_jsonl<T: Serialize>(items: &[T], path: &Path) -> Result<(), JsonlError> {
    let file = File::create(path).map_err(|source| JsonlError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut writer = BufWriter::new(file);
    for item in items {
        let line = serde_json::to_string(item)?;
        writer
            .write_all(line.as_bytes())
            .and_then(|_| writer.write_all(b"\n"))
            .map_err(|source| JsonlError::Io {
                path: path.to_path_buf(),
                source,
            })?;
    }
    writer.flush().map_err(|source| JsonlError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Read a JSON Lines file. Blank lines are skipped; a malformed line fails
/// with its line number. An empty file reads as an empty list.
pub fn read_jsonl<T: DeserializeOwned>(path: &Path) -> Result<Vec<T>, JsonlError> {
    let file = File::open(path).map_err(|source| JsonlError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let reader = BufReader::new(file);
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line.map_err(|source| JsonlError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        if line.trim().is_empty() {
            continue;
        }
        let item = serde_json::from_str(&line).map_err(|source| JsonlError::Line {
            path: path.to_path_buf(),
            line: idx + 1,
            source,
        })?;
        out.push(item);
    }
    Ok(out)
}

/// Read mapped pairs, rejecting records from another schema version.
pub fn read_pairs(path: &Path) -> Result<Vec<MappedPair>, JsonlError> {
    let pairs: Vec<MappedPair> = read_jsonl(path)?;
    for (idx, pair) in pairs.iter().enumerate() {
        if pair.schema_version != SCHEMA_VERSION {
            return Err(JsonlError::SchemaVersion {
                path: path.to_path_buf(),
                line: idx + 1,
                found: pair.schema_version,
                expected: SCHEMA_VERSION,
            });
        }
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pair::*;

    fn sample_pair(name: &str) -> MappedPair {
        MappedPair {
            schema_version: SCHEMA_VERSION,
            repo_id: "repo".into(),
            test_class_path: "src/test/java/FooTest.java".into(),
            test_case: TestCaseRecord {
                name: name.into(),
                body: format!("@Test public void {name}() {{ foo.run(); }}"),
            },
            focal_class_path: "src/main/java/Foo.java".into(),
            focal_method: FocalMethodRecord {
                name: "run".into(),
                signature: "void run()".into(),
                body: "public void run() {}".into(),
            },
            class_match: ClassMatch::Path,
            method_match: MethodMatch::UniqueCall,
            focal_class: FocalClassInfo {
                name: "Foo".into(),
                constructor_signatures: vec!["Foo()".into()],
                public_method_signatures: vec![],
                public_field_declarations: vec!["int state;".into()],
            },
            context: None,
        }
    }

    #[test]
    fn round_trip_preserves_all_fields() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("pairs.jsonl");
        let pairs = vec![sample_pair("a"), sample_pair("b"), sample_pair("c")];
        write_jsonl(&pairs, &path).unwrap();
        let back = read_pairs(&path).unwrap();
        assert_eq!(pairs, back);
    }

    #[test]
    fn truncated_last_line_errors_with_line_number() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("pairs.jsonl");
        let pairs = vec![sample_pair("a"), sample_pair("b")];
        write_jsonl(&pairs, &path).unwrap();
        let content = std::fs::read_to_string(&path).unwrap();
        let cut = content.len() - 30;
        std::fs::write(&path, &content[..cut]).unwrap();
        match read_pairs(&path) {
            Err(JsonlError::Line { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected line error, got {other:?}"),
        }
    }

    #[test]
    fn empty_file_reads_empty() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("empty.jsonl");
        std::fs::write(&path, "").unwrap();
        let pairs = read_pairs(&path).unwrap();
        assert!(pairs.is_empty());
    }

    #[test]
    fn wrong_schema_version_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("pairs.jsonl");
        let mut pair = sample_pair("a");
        pair.schema_version = SCHEMA_VERSION + 1;
        write_jsonl(&[pair], &path).unwrap();
        match read_pairs(&path) {
            Err(JsonlError::SchemaVersion { found, expected, .. }) => {
                assert_eq!(found, SCHEMA_VERSION + 1);
                assert_eq!(expected, SCHEMA_VERSION);
            }
            other => panic!("expected schema error, got {other:?}"),
        }
    }

    #[test]
    fn writes_are_byte_stable() {
        let dir = tempfile::tempdir().unwrap();
        let a = dir.path().join("a.jsonl");
        let b = dir.path().join("b.jsonl");
        let pairs = vec![sample_pair("x"), sample_pair("y")];
        write_jsonl(&pairs, &a).unwrap();
        write_jsonl(&pairs, &b).unwrap();
        assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    }
}
