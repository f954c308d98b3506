//! Parser for the textual program format.
//!
//! ```text
//! program := { rule } ;
//! rule    := [ head ] [ ":-" body ] "." ;
//! head    := atom { "|" atom } ;
//! body    := literal { "," literal } ;
//! literal := [ "not" ] atom ;
//! atom    := lowercase letter followed by letters/digits/underscores ;
//! ```
//!
//! `%` starts a line comment. A rule with empty head and empty body is
//! rejected. Duplicate atoms inside a head or body collapse silently (set
//! semantics), as do duplicate rules.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::sets::AtomSet;
use crate::symbols::{SymbolError, Symbols};
use crate::syntax::{Program, Rule};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: u32,
    pub col: u32,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedToken {
        found: String,
        expected: &'static str,
    },
    UnexpectedEnd {
        expected: &'static str,
    },
    EmptyRule,
    Symbol(SymbolError),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: ", self.line, self.col)?;
        match &self.kind {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character `{c}`"),
            ParseErrorKind::UnexpectedToken { found, expected } => {
                write!(f, "unexpected `{found}`, expected {expected}")
            }
            ParseErrorKind::UnexpectedEnd { expected } => {
                write!(f, "unexpected end of input, expected {expected}")
            }
            ParseErrorKind::EmptyRule => write!(f, "rule has no head and no body"),
            ParseErrorKind::Symbol(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Ident(String),
    Not,
    Pipe,
    Comma,
    ImpliedBy,
    Dot,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Ident(s) => s.clone(),
            Token::Not => "not".to_string(),
            Token::Pipe => "|".to_string(),
            Token::Comma => ",".to_string(),
            Token::ImpliedBy => ":-".to_string(),
            Token::Dot => ".".to_string(),
        }
    }
}

struct Lexer<'a> {
    chars: core::iter::Peekable<core::str::Chars<'a>>,
    line: u32,
    col: u32,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Lexer<'a> {
        Lexer {
            chars: text.chars().peekable(),
            line: 1,
            col: 1,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    /// Next token with the position where it starts.
    fn next_token(&mut self) -> Result<Option<(Token, u32, u32)>, ParseError> {
        loop {
            match self.chars.peek() {
                None => return Ok(None),
                Some(c) if c.is_whitespace() => {
                    self.bump();
                }
                Some('%') => {
                    while let Some(c) = self.bump() {
                        if c == '\n' {
                            break;
                        }
                    }
                }
                Some(_) => break,
            }
        }
        let (line, col) = (self.line, self.col);
        let c = self.bump().expect("peeked");
        let token = match c {
            '|' => Token::Pipe,
            ',' => Token::Comma,
            '.' => Token::Dot,
            ':' => match self.chars.peek() {
                Some('-') => {
                    self.bump();
                    Token::ImpliedBy
                }
                _ => {
                    return Err(ParseError {
                        line,
                        col,
                        kind: ParseErrorKind::UnexpectedChar(':'),
                    })
                }
            },
            c if c.is_ascii_lowercase() => {
                let mut name = String::new();
                name.push(c);
                while let Some(&n) = self.chars.peek() {
                    if n.is_ascii_alphanumeric() || n == '_' {
                        name.push(n);
                        self.bump();
                    } else {
                        break;
                    }
                }
                if name == "not" {
                    Token::Not
                } else {
                    Token::Ident(name)
                }
            }
            other => {
                return Err(ParseError {
                    line,
                    col,
                    kind: ParseErrorKind::UnexpectedChar(other),
                })
            }
        };
        Ok(Some((token, line, col)))
    }
}

struct Parser<'a> {
    tokens: Vec<(Token, u32, u32)>,
    pos: usize,
    symbols: &'a mut Symbols,
    end: (u32, u32),
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _, _)| t)
    }

    fn here(&self) -> (u32, u32) {
        self.tokens
            .get(self.pos)
            .map(|&(_, l, c)| (l, c))
            .unwrap_or(self.end)
    }

    fn advance(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(t, _, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &'static str) -> ParseError {
        let (line, col) = self.here();
        match self.peek() {
            Some(t) => ParseError {
                line,
                col,
                kind: ParseErrorKind::UnexpectedToken {
                    found: t.describe(),
                    expected,
                },
            },
            None => ParseError {
                line,
                col,
                kind: ParseErrorKind::UnexpectedEnd { expected },
            },
        }
    }

    fn expect_atom(&mut self, expected: &'static str) -> Result<AtomSet, ParseError> {
        let (line, col) = self.here();
        match self.peek() {
            Some(Token::Ident(_)) => {
                let Some(Token::Ident(name)) = self.advance() else {
                    unreachable!("peeked an identifier");
                };
                let atom = self.symbols.intern(&name).map_err(|e| ParseError {
                    line,
                    col,
                    kind: ParseErrorKind::Symbol(e),
                })?;
                Ok(AtomSet::singleton(atom))
            }
            _ => Err(self.error(expected)),
        }
    }

    fn rule(&mut self) -> Result<Rule, ParseError> {
        let (line, col) = self.here();
        let mut head = AtomSet::EMPTY;
        let mut pos_body = AtomSet::EMPTY;
        let mut neg_body = AtomSet::EMPTY;

        if matches!(self.peek(), Some(Token::Ident(_))) {
            head = head | self.expect_atom("an atom")?;
            while matches!(self.peek(), Some(Token::Pipe)) {
                self.advance();
                head = head | self.expect_atom("an atom after `|`")?;
            }
        }
        if matches!(self.peek(), Some(Token::ImpliedBy)) {
            self.advance();
            loop {
                if matches!(self.peek(), Some(Token::Not)) {
                    self.advance();
                    neg_body = neg_body | self.expect_atom("an atom after `not`")?;
                } else {
                    pos_body = pos_body | self.expect_atom("a body literal")?;
                }
                if matches!(self.peek(), Some(Token::Comma)) {
                    self.advance();
                } else {
                    break;
                }
            }
        }
        match self.peek() {
            Some(Token::Dot) => {
                self.advance();
            }
            _ => return Err(self.error("`.`")),
        }
        Rule::new(head, pos_body, neg_body).map_err(|_| ParseError {
            line,
            col,
            kind: ParseErrorKind::EmptyRule,
        })
    }
}

/// Parse a program text, interning its atoms into `symbols`. The universe
/// of the returned program is exactly the set of atoms it mentions; merge
/// universes explicitly when comparing programs.
pub fn parse_program(text: &str, symbols: &mut Symbols) -> Result<Program, ParseError> {
    let mut lexer = Lexer::new(text);
    let mut tokens = Vec::new();
    while let Some(t) = lexer.next_token()? {
        tokens.push(t);
    }
    let end = (lexer.line, lexer.col);
    let mut parser = Parser {
        tokens,
        pos: 0,
        symbols,
        end,
    };
    let mut rules = Vec::new();
    while parser.peek().is_some() {
        rules.push(parser.rule()?);
    }
    let universe = rules.iter().fold(AtomSet::EMPTY, |u, r| u | r.atoms());
    Ok(Program::new(rules, universe).expect("universe covers parsed rules"))
}
