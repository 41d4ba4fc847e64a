//! Permissive lexical tokenizer for Java source and fragments.
//!
//! Drives token-budget accounting for context renderings, token-boundary
//! truncation, statement-terminator scanning for truncation repair, and the
//! keyword/separator filtering behind token-overlap analysis. Never fails:
//! unterminated strings and comments are consumed as far as they reach.

/// The 50 reserved words of the Java language.
pub const JAVA_KEYWORDS: [&str; 50] = [
    "abstract",
    "assert",
    "boolean",
    "break",
    "byte",
    "case",
    "catch",
    "char",
    "class",
    "const",
    "continue",
    "default",
    "do",
    "double",
    "else",
    "enum",
    "extends",
    "final",
    "finally",
    "float",
    "for",
    "goto",
    "if",
    "implements",
    "import",
    "instanceof",
    "int",
    "interface",
    "long",
    "native",
    "new",
    "package",
    "private",
    "protected",
    "public",
    "return",
    "short",
    "static",
    "strictfp",
    "super",
    "switch",
    "synchronized",
    "this",
    "throw",
    "throws",
    "transient",
    "try",
    "void",
    "volatile",
    "while",
];

/// Literal words filtered alongside keywords (`true`, `false`, `null`).
pub const JAVA_LITERAL_WORDS: [&str; 3] = ["true", "false", "null"];

pub fn is_java_keyword(word: &str) -> bool {
    JAVA_KEYWORDS.binary_search(&word).is_ok() || JAVA_LITERAL_WORDS.contains(&word)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Identifier,
    /// Reserved word or `true`/`false`/`null`.
    Keyword,
    Number,
    Str,
    Char,
    /// Operator or separator.
    Punct,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub text: String,
    /// Byte range within the lexed text.
    pub start: usize,
    pub end: usize,
}

impl Token {
    /// Value contributed to a token bag: identifiers and numbers verbatim,
    /// string/char literals as their inner value, keywords and punctuation none.
    pub fn bag_value(&self) -> Option<&str> {
        match self.kind {
            TokenKind::Identifier | TokenKind::Number => Some(&self.text),
            TokenKind::Str => Some(strip_string_quotes(&self.text)),
            TokenKind::Char => Some(
                self.text
                    .strip_prefix('\'')
                    .map(|s| s.strip_suffix('\'').unwrap_or(s))
                    .unwrap_or(&self.text),
            ),
            TokenKind::Keyword | TokenKind::Punct => None,
        }
    }
}

fn strip_string_quotes(text: &str) -> &str {
    if let Some(inner) = text.strip_prefix("\"\"\"") {
        return inner.strip_suffix("\"\"\"").unwrap_or(inner);
    }
    if let Some(inner) = text.strip_prefix('"') {
        return inner.strip_suffix('"').unwrap_or(inner);
    }
    text
}

// Longest-first so maximal munch falls out of a linear scan.
const MULTI_PUNCT: [&str; 21] = [
    ">>>=", ">>>", "<<=", ">>=", "...", "==", "!=", "<=", ">=", "&&", "||", "++", "--", "+=",
    "-=", "*=", "/=", "&=", "|=", "^=", "%=",
];

const SHIFT_PUNCT: [&str; 4] = ["<<", ">>", "->", "::"];

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_' || c == '$'
}

fn is_ident_continue(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '$'
}

/// Lex `source` into tokens with byte spans. Comments and whitespace are
/// skipped; anything unrecognized is emitted as a single-character punct.
pub fn lex(source: &str) -> Vec<Token> {
    let mut tokens = Vec::new();
    let mut i = 0;

    while i < source.len() {
        let c = match source[i..].chars().next() {
            Some(c) => c,
            None => break,
        };

        if c.is_whitespace() {
            i += c.len_utf8();
            continue;
        }

        // Comments.
        if c == '/' && source[i..].starts_with("//") {
            i = source[i..]
                .find('\n')
                .map(|off| i + off + 1)
                .unwrap_or(source.len());
            continue;
        }
        if c == '/' && source[i..].starts_with("/*") {
            i = source[i + 2..]
                .find("*/")
                .map(|off| i + 2 + off + 2)
                .unwrap_or(source.len());
            continue;
        }

        let start = i;

        if is_ident_start(c) {
            i += c.len_utf8();
            while let Some(n) = source[i..].chars().next() {
                if is_ident_continue(n) {
                    i += n.len_utf8();
                } else {
                    break;
                }
            }
            let text = &source[start..i];
            let kind = if is_java_keyword(text) {
                TokenKind::Keyword
            } else {
                TokenKind::Identifier
            };
            tokens.push(Token {
                kind,
                text: text.to_string(),
                start,
                end: i,
            });
            continue;
        }

        if c.is_ascii_digit() || (c == '.' && next_is_digit(source, i + 1)) {
            i = lex_number(source, i);
            tokens.push(Token {
                kind: TokenKind::Number,
                text: source[start..i].to_string(),
                start,
                end: i,
            });
            continue;
        }

        if c == '"' {
            i = lex_string(source, i);
            tokens.push(Token {
                kind: TokenKind::Str,
                text: source[start..i].to_string(),
                start,
                end: i,
            });
            continue;
        }

        if c == '\'' {
            i = lex_char(source, i);
            tokens.push(Token {
                kind: TokenKind::Char,
                text: source[start..i].to_string(),
                start,
                end: i,
            });
            continue;
        }

        // Multi-character operators, maximal munch.
        let rest = &source[i..];
        let mut matched = None;
        for op in MULTI_PUNCT.iter().chain(SHIFT_PUNCT.iter()) {
            if rest.starts_with(op) {
                matched = Some(op.len());
                break;
            }
        }
        let len = matched.unwrap_or(c.len_utf8());
        i += len;
        tokens.push(Token {
            kind: TokenKind::Punct,
            text: source[start..i].to_string(),
            start,
            end: i,
        });
    }

    tokens
}

fn next_is_digit(source: &str, at: usize) -> bool {
    source
        .get(at..)
        .and_then(|s| s.chars().next())
        .is_some_and(|c| c.is_ascii_digit())
}

fn lex_number(source: &str, mut i: usize) -> usize {
    let mut prev = '\0';
    for c in source[i..].chars() {
        let take = c.is_ascii_alphanumeric()
            || c == '_'
            || c == '.'
            || ((c == '+' || c == '-') && matches!(prev, 'e' | 'E' | 'p' | 'P'));
        if !take {
            break;
        }
        prev = c;
        i += c.len_utf8();
    }
    i
}

fn lex_string(source: &str, start: usize) -> usize {
    // Text block.
    if source[start..].starts_with("\"\"\"") {
        return source[start + 3..]
            .find("\"\"\"")
            .map(|off| start + 3 + off + 3)
            .unwrap_or(source.len());
    }
    let mut i = start + 1;
    let mut escaped = false;
    for c in source[i..].chars() {
        if escaped {
            escaped = false;
        } else if c == '\\' {
            escaped = true;
        } else if c == '"' {
            return i + 1;
        } else if c == '\n' {
            // Unterminated: end at the line break so lexing resumes after it.
            return i;
        }
        i += c.len_utf8();
    }
    source.len()
}

fn lex_char(source: &str, start: usize) -> usize {
    let mut i = start + 1;
    let mut escaped = false;
    for c in source[i..].chars() {
        if escaped {
            escaped = false;
        } else if c == '\\' {
            escaped = true;
        } else if c == '\'' {
            return i + 1;
        } else if c == '\n' {
            return i;
        }
        i += c.len_utf8();
    }
    source.len()
}

/// Number of lexical tokens in `source`.
pub fn token_count(source: &str) -> usize {
    lex(source).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn texts(src: &str) -> Vec<String> {
        lex(src).into_iter().map(|t| t.text).collect()
    }

    #[test]
    fn keywords_sorted_for_binary_search() {
        let mut sorted = JAVA_KEYWORDS;
        sorted.sort_unstable();
        assert_eq!(sorted, JAVA_KEYWORDS);
    }

    #[test]
    fn simple_statement() {
        assert_eq!(
            texts("if (x > 0) return y;"),
            vec!["if", "(", "x", ">", "0", ")", "return", "y", ";"]
        );
    }

    #[test]
    fn call_with_arguments() {
        assert_eq!(
            texts("assertEquals(expected, actual)"),
            vec!["assertEquals", "(", "expected", ",", "actual", ")"]
        );
    }

    #[test]
    fn comments_skipped() {
        assert_eq!(
            texts("int a = 1; // trailing\n/* block\n */ a++;"),
            vec!["int", "a", "=", "1", ";", "a", "++", ";"]
        );
    }

    #[test]
    fn string_and_char_literals() {
        let tokens = lex(r#"s.equals("a \"b\" c") && c == 'x'"#);
        let strs: Vec<_> = tokens
            .iter()
            .filter(|t| t.kind == TokenKind::Str)
            .map(|t| t.bag_value().unwrap().to_string())
            .collect();
        assert_eq!(strs, vec![r#"a \"b\" c"#]);
        let chars: Vec<_> = tokens
            .iter()
            .filter(|t| t.kind == TokenKind::Char)
            .map(|t| t.bag_value().unwrap().to_string())
            .collect();
        assert_eq!(chars, vec!["x"]);
    }

    #[test]
    fn unterminated_string_is_consumed() {
        let tokens = lex(r#"foo("abc"#);
        assert_eq!(tokens.last().unwrap().kind, TokenKind::Str);
        assert_eq!(tokens.last().unwrap().text, "\"abc");
    }

    #[test]
    fn numbers_with_suffixes_and_exponents() {
        assert_eq!(
            texts("x = 1_000 + 0x1F + 2.5e-3f + 10L;"),
            vec!["x", "=", "1_000", "+", "0x1F", "+", "2.5e-3f", "+", "10L", ";"]
        );
    }

    #[test]
    fn maximal_munch_operators() {
        assert_eq!(texts("a >>>= b >>> c >= d"), vec!["a", ">>>=", "b", ">>>", "c", ">=", "d"]);
        assert_eq!(texts("x -> x::y"), vec!["x", "->", "x", "::", "y"]);
        assert_eq!(texts("f(String... args)"), vec!["f", "(", "String", "...", "args", ")"]);
    }

    #[test]
    fn spans_reconstruct_source() {
        let src = "int a = foo(\"b\");";
        for t in lex(src) {
            assert_eq!(&src[t.start..t.end], t.text);
        }
    }

    #[test]
    fn lexing_is_deterministic() {
        let src = "class A { void m() { x.y(1, \"z\"); } }";
        assert_eq!(lex(src), lex(src));
    }
}
