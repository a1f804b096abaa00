use std::ops::Range;

use super::SyntaxError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TokenKind {
    /// Class-expression keywords (`and`, `some`, ...) and frame keywords
    /// including their trailing colon (`Class:`, `SubClassOf:`, ...).
    Keyword,
    QuotedName,
    SimpleName,
    /// `pre:local`, or a bare `pre:` as written in prefix declarations.
    PrefixedName,
    /// `<...>`; the text excludes the angle brackets.
    FullIri,
    Integer,
    Punctuation,
    StringLiteral,
    Comment,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    /// Token text with quoting removed for quoted names, string literals and IRIs.
    pub text: String,
    pub line: u32,
    pub column: u32,
    /// Byte range of the token in the source, quotes included.
    pub span: Range<usize>,
}

impl Token {
    pub fn is_keyword(&self, kw: &str) -> bool {
        self.kind == TokenKind::Keyword && self.text == kw
    }

    pub fn is_punct(&self, p: &str) -> bool {
        self.kind == TokenKind::Punctuation && self.text == p
    }
}

pub const CONCEPT_KEYWORDS: &[&str] = &[
    "and", "or", "not", "some", "only", "min", "max", "exactly", "value", "inverse", "that",
];

pub const FRAME_KEYWORDS: &[&str] = &[
    "Prefix",
    "Ontology",
    "Import",
    "Annotations",
    "Class",
    "ObjectProperty",
    "DataProperty",
    "AnnotationProperty",
    "Individual",
    "Datatype",
    "SubClassOf",
    "EquivalentTo",
    "DisjointWith",
    "DisjointUnionOf",
    "SubPropertyOf",
    "SubPropertyChain",
    "InverseOf",
    "Characteristics",
    "Domain",
    "Range",
    "Types",
    "Facts",
    "SameAs",
    "DifferentFrom",
    "HasKey",
    "EquivalentClasses",
    "DisjointClasses",
    "EquivalentProperties",
    "DisjointProperties",
    "SameIndividual",
    "DifferentIndividuals",
];

fn is_name_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_name_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '-'
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
    line: u32,
    column: u32,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek_at(&self, n: usize) -> Option<char> {
        self.src[self.pos..].chars().nth(n)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn eat_while(&mut self, pred: impl Fn(char) -> bool) {
        while matches!(self.peek(), Some(c) if pred(c)) {
            self.bump();
        }
    }
}

/// Splits `text` into tokens. Comments are kept as `TokenKind::Comment`.
pub fn tokenize(text: &str) -> Result<Vec<Token>, SyntaxError> {
    let mut cur = Cursor { src: text, pos: 0, line: 1, column: 1 };
    let mut out = Vec::new();

    while let Some(c) = cur.peek() {
        if c.is_whitespace() {
            cur.bump();
            continue;
        }
        let (start, line, column) = (cur.pos, cur.line, cur.column);
        let token = |kind, text: String, cur: &Cursor<'_>| Token {
            kind,
            text,
            line,
            column,
            span: start..cur.pos,
        };

        match c {
            '#' => {
                cur.eat_while(|c| c != '\n');
                out.push(token(TokenKind::Comment, text[start..cur.pos].to_string(), &cur));
            }
            '\'' => {
                cur.bump();
                let body = cur.pos;
                cur.eat_while(|c| c != '\'');
                if cur.peek().is_none() {
                    return Err(SyntaxError::lex("unterminated quoted name", line, column));
                }
                let name = text[body..cur.pos].to_string();
                cur.bump();
                out.push(token(TokenKind::QuotedName, name, &cur));
            }
            '"' => {
                cur.bump();
                let mut value = String::new();
                loop {
                    match cur.bump() {
                        None => {
                            return Err(SyntaxError::lex(
                                "unterminated string literal",
                                line,
                                column,
                            ))
                        }
                        Some('"') => break,
                        Some('\\') => match cur.bump() {
                            Some('n') => value.push('\n'),
                            Some('t') => value.push('\t'),
                            Some(e) => value.push(e),
                            None => {
                                return Err(SyntaxError::lex(
                                    "unterminated string literal",
                                    line,
                                    column,
                                ))
                            }
                        },
                        Some(ch) => value.push(ch),
                    }
                }
                out.push(token(TokenKind::StringLiteral, value, &cur));
            }
            '<' => {
                cur.bump();
                let body = cur.pos;
                cur.eat_while(|c| c != '>' && !c.is_whitespace());
                if cur.peek() != Some('>') {
                    return Err(SyntaxError::lex("unterminated IRI", line, column));
                }
                let iri = text[body..cur.pos].to_string();
                cur.bump();
                out.push(token(TokenKind::FullIri, iri, &cur));
            }
            '(' | ')' | ',' | '[' | ']' | '{' | '}' | '@' => {
                cur.bump();
                out.push(token(TokenKind::Punctuation, c.to_string(), &cur));
            }
            '^' if cur.peek_at(1) == Some('^') => {
                cur.bump();
                cur.bump();
                out.push(token(TokenKind::Punctuation, "^^".to_string(), &cur));
            }
            ':' => {
                cur.bump();
                cur.eat_while(is_name_char);
                out.push(token(TokenKind::PrefixedName, text[start..cur.pos].to_string(), &cur));
            }
            c if c.is_ascii_digit() => {
                cur.eat_while(|c| c.is_ascii_digit());
                if matches!(cur.peek(), Some(c) if is_name_char(c)) {
                    cur.eat_while(is_name_char);
                    out.push(token(TokenKind::SimpleName, text[start..cur.pos].to_string(), &cur));
                } else {
                    out.push(token(TokenKind::Integer, text[start..cur.pos].to_string(), &cur));
                }
            }
            c if is_name_start(c) => {
                cur.eat_while(is_name_char);
                let word = &text[start..cur.pos];
                if cur.peek() == Some(':') {
                    let after = cur.peek_at(1);
                    if matches!(after, Some(c) if is_name_char(c)) {
                        cur.bump();
                        cur.eat_while(is_name_char);
                        out.push(token(
                            TokenKind::PrefixedName,
                            text[start..cur.pos].to_string(),
                            &cur,
                        ));
                    } else {
                        cur.bump();
                        let kind = if FRAME_KEYWORDS.contains(&word) {
                            TokenKind::Keyword
                        } else {
                            TokenKind::PrefixedName
                        };
                        out.push(token(kind, text[start..cur.pos].to_string(), &cur));
                    }
                } else if CONCEPT_KEYWORDS.contains(&word) {
                    out.push(token(TokenKind::Keyword, word.to_string(), &cur));
                } else {
                    out.push(token(TokenKind::SimpleName, word.to_string(), &cur));
                }
            }
            other => {
                return Err(SyntaxError::lex(
                    format!("unexpected character {other:?}"),
                    line,
                    column,
                ))
            }
        }
    }
    Ok(out)
}
