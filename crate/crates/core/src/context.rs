//! Leveled focal-context renderings under a token budget.
//!
//! Five cumulative levels: the focal method alone, then the focal class name
//! wrapping it, then constructor signatures, other public method signatures,
//! and public field declarations. Content is laid out on one line as
//! `ClassName { <focal method> <ctor sigs> <method sigs> <field decls> }` and
//! truncated from the end at token boundaries, so earlier (higher-priority)
//! content survives.

use serde::{Deserialize, Serialize};

use crate::lexer;
use crate::pair::{ContextInfo, MappedPair};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ContextLevel {
    #[serde(rename = "fm")]
    Fm,
    #[serde(rename = "fm+fc")]
    FmFc,
    #[serde(rename = "fm+fc+c")]
    FmFcC,
    #[serde(rename = "fm+fc+c+m")]
    FmFcCM,
    #[serde(rename = "fm+fc+c+m+f")]
    FmFcCMF,
}

impl ContextLevel {
    pub const ALL: [ContextLevel; 5] = [
        ContextLevel::Fm,
        ContextLevel::FmFc,
        ContextLevel::FmFcC,
        ContextLevel::FmFcCM,
        ContextLevel::FmFcCMF,
    ];

    pub fn id(self) -> &'static str {
        match self {
            ContextLevel::Fm => "fm",
            ContextLevel::FmFc => "fm+fc",
            ContextLevel::FmFcC => "fm+fc+c",
            ContextLevel::FmFcCM => "fm+fc+c+m",
            ContextLevel::FmFcCMF => "fm+fc+c+m+f",
        }
    }

    pub fn parse(id: &str) -> Option<ContextLevel> {
        ContextLevel::ALL.into_iter().find(|l| l.id() == id)
    }
}

impl std::fmt::Display for ContextLevel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.id())
    }
}

/// The kinds of content a level includes, in inclusion (priority) order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ContentKind {
    FocalMethod,
    ClassName,
    ConstructorSignatures,
    PublicMethodSignatures,
    PublicFieldDeclarations,
}

/// Ordered content kinds for a level; each level extends the previous one.
pub fn level_contents(level: ContextLevel) -> Vec<ContentKind> {
    let mut kinds = vec![ContentKind::FocalMethod];
    if level >= ContextLevel::FmFc {
        kinds.push(ContentKind::ClassName);
    }
    if level >= ContextLevel::FmFcC {
        kinds.push(ContentKind::ConstructorSignatures);
    }
    if level >= ContextLevel::FmFcCM {
        kinds.push(ContentKind::PublicMethodSignatures);
    }
    if level >= ContextLevel::FmFcCMF {
        kinds.push(ContentKind::PublicFieldDeclarations);
    }
    kinds
}

/// A rendering plus its token accounting. `token_count` never exceeds the
/// budget; `truncated` is set iff the pre-truncation count did.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContextRendering {
    pub level: ContextLevel,
    pub text: String,
    pub token_count: usize,
    pub truncated: bool,
}

impl From<ContextRendering> for ContextInfo {
    fn from(r: ContextRendering) -> Self {
        ContextInfo {
            level: r.level,
            text: r.text,
            token_count: r.token_count,
            truncated: r.truncated,
        }
    }
}

/// Render `pair` at `level`, truncating to `budget` lexical tokens.
pub fn render_context(pair: &MappedPair, level: ContextLevel, budget: usize) -> ContextRendering {
    assert!(budget >= 1, "token budget must be at least 1");
    let text = render_untruncated(pair, level);
    truncate_to_budget(level, text, budget)
}

/// The full rendering before any budget is applied.
pub fn render_untruncated(pair: &MappedPair, level: ContextLevel) -> String {
    let fm = pair.focal_method.body.as_str();
    if level == ContextLevel::Fm {
        return fm.to_string();
    }

    let info = &pair.focal_class;
    let mut parts: Vec<&str> = vec![fm];
    if level >= ContextLevel::FmFcC {
        parts.extend(info.constructor_signatures.iter().map(String::as_str));
    }
    if level >= ContextLevel::FmFcCM {
        parts.extend(info.public_method_signatures.iter().map(String::as_str));
    }
    if level >= ContextLevel::FmFcCMF {
        parts.extend(info.public_field_declarations.iter().map(String::as_str));
    }
    format!("{} {{ {} }}", info.name, parts.join(" "))
}

/// Cut `text` after its `budget`-th lexical token.
fn truncate_to_budget(level: ContextLevel, text: String, budget: usize) -> ContextRendering {
    let tokens = lexer::lex(&text);
    if tokens.len() <= budget {
        return ContextRendering {
            level,
            token_count: tokens.len(),
            truncated: false,
            text,
        };
    }
    let cut = tokens[budget - 1].end;
    ContextRendering {
        level,
        text: text[..cut].to_string(),
        token_count: budget,
        truncated: true,
    }
}
