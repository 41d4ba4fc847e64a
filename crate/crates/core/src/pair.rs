//! The mapped test-case record: one test case bound to its focal method,
//! with provenance and enough focal-class detail to render context levels.
//!
//! This is the JSON Lines schema written by `mine` and consumed by every
//! downstream stage. Serialized field order is the struct order below;
//! identical inputs serialize to identical bytes.

use serde::{Deserialize, Serialize};

use crate::model::{ClassModel, MethodModel};

/// Bump when the serialized shape changes; readers reject other versions.
pub const SCHEMA_VERSION: u32 = 1;

/// Which heuristic resolved the focal class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassMatch {
    /// Mirrored `src/test` → `src/main` folder structure.
    Path,
    /// Unique repo-global name after stripping the `Test` prefix/suffix.
    Name,
}

/// Which heuristic resolved the focal method.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MethodMatch {
    /// Test name matches a method name after stripping `test`/`Test`.
    Name,
    /// The test invokes exactly one method defined in the focal class.
    UniqueCall,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TestCaseRecord {
    pub name: String,
    /// Verbatim method declaration, annotations included.
    pub body: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FocalMethodRecord {
    pub name: String,
    /// Return type + name + parameter list as written.
    pub signature: String,
    pub body: String,
}

/// Focal-class material needed to render context levels without re-parsing
/// the repository: constructor signatures, the signatures of the other public
/// methods (focal method excluded), and public field declarations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FocalClassInfo {
    pub name: String,
    pub constructor_signatures: Vec<String>,
    pub public_method_signatures: Vec<String>,
    pub public_field_declarations: Vec<String>,
}

impl FocalClassInfo {
    /// Capture context material for `focal_method` within `class`.
    pub fn capture(class: &ClassModel, focal_method: &MethodModel) -> Self {
        let constructor_signatures = class
            .constructors()
            .map(|c| c.signature.clone())
            .collect();
        let public_method_signatures = class
            .plain_methods()
            .filter(|m| m.is_public() && m.span != focal_method.span)
            .map(|m| m.signature.clone())
            .collect();
        let public_field_declarations = class
            .fields
            .iter()
            .filter(|f| f.is_public())
            .map(|f| format!("{} {};", f.declared_type, f.name))
            .collect();
        FocalClassInfo {
            name: class.name.clone(),
            constructor_signatures,
            public_method_signatures,
            public_field_declarations,
        }
    }
}

/// A rendered focal-context attached to a pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContextInfo {
    pub level: crate::context::ContextLevel,
    pub text: String,
    pub token_count: usize,
    pub truncated: bool,
}

/// One mapped (test case, focal method) pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MappedPair {
    pub schema_version: u32,
    pub repo_id: String,
    pub test_class_path: String,
    pub test_case: TestCaseRecord,
    pub focal_class_path: String,
    pub focal_method: FocalMethodRecord,
    pub class_match: ClassMatch,
    pub method_match: MethodMatch,
    /// Context material captured at mining time.
    pub focal_class: FocalClassInfo,
    /// Present once `render` has attached a context level.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub context: Option<ContextInfo>,
}

impl MappedPair {
    /// Stable identifier candidates reference via `focal_pair_id`:
    /// `repo_id:test_class_path:test_case_name`.
    pub fn pair_id(&self) -> String {
        format!(
            "{}:{}:{}",
            self.repo_id, self.test_class_path, self.test_case.name
        )
    }
}
