//! Text formats for programs and forks.
//!
//! Programs (ASP-like):
//!
//! ```text
//! program  ::= rule*
//! rule     ::= [label ":"] head [":-" body] "."
//!            | [label ":"] ":-" body "."
//! head     ::= atom ("|" atom)*
//! body     ::= [literal ("," literal)*]
//! literal  ::= atom | "not" atom | "not" "not" atom
//! ```
//!
//! Forks and formulas, loosest binding first (all binary operators are
//! right-associative):
//!
//! ```text
//! fork  ::= impl (";" fork)?
//! impl  ::= disj ("->" impl)?
//! disj  ::= conj ("v" disj)?
//! conj  ::= unary ("&" conj)?
//! unary ::= "-" unary | "(" fork ")" | atom | "#false" | "#true"
//! ```
//!
//! `%` starts a comment running to the end of the line. Identifiers match
//! `[A-Za-z_][A-Za-z0-9_']*`; `not` and `v` are keywords, and names starting
//! with `__` are reserved for generated atoms unless explicitly allowed.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::syntax::{Atom, Fork, Formula, Program, Rule, RESERVED_PREFIX};

/// 1-based position of the first character of an offending token.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SourceSpan {
    pub line: usize,
    pub column: usize,
    pub len: usize,
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{span}: syntax error: {message}")]
    Syntax { span: SourceSpan, message: String },
    #[error("{span}: duplicate label `{label}`")]
    DuplicateLabel { span: SourceSpan, label: String },
    #[error("{span}: `{name}` can not be used as an atom name")]
    ReservedName { span: SourceSpan, name: String },
    #[error("{span}: {message}")]
    GrammarViolation { span: SourceSpan, message: String },
}

impl ParseError {
    pub fn span(&self) -> SourceSpan {
        match self {
            ParseError::Syntax { span, .. }
            | ParseError::DuplicateLabel { span, .. }
            | ParseError::ReservedName { span, .. }
            | ParseError::GrammarViolation { span, .. } => *span,
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ParseOptions {
    /// Accept atoms starting with `__` (output of the program transformations).
    pub allow_reserved: bool,
}

pub fn parse_program(text: &str) -> Result<Program, ParseError> {
    parse_program_with(text, ParseOptions::default())
}

pub fn parse_program_with(text: &str, opts: ParseOptions) -> Result<Program, ParseError> {
    let tokens = lex(text)?;
    let mut p = Parser { tokens, pos: 0, opts };
    let mut rules = Vec::new();
    let mut labels = BTreeSet::new();
    while !p.at_end() {
        let (rule, label_span) = p.rule()?;
        if let (Some(l), Some(span)) = (rule.label(), label_span) {
            if !labels.insert(l.to_string()) {
                return Err(ParseError::DuplicateLabel {
                    span,
                    label: l.to_string(),
                });
            }
        }
        rules.push(rule);
    }
    Ok(Program::new(rules).expect("labels checked while parsing"))
}

pub fn parse_fork(text: &str) -> Result<Fork, ParseError> {
    parse_fork_with(text, ParseOptions::default())
}

pub fn parse_fork_with(text: &str, opts: ParseOptions) -> Result<Fork, ParseError> {
    let expr = parse_expr(text, opts)?;
    expr.into_fork()
}

pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let expr = parse_expr(text, ParseOptions::default())?;
    expr.into_formula("the fork connective is not allowed in a formula")
}

fn parse_expr(text: &str, opts: ParseOptions) -> Result<Expr, ParseError> {
    let tokens = lex(text)?;
    let mut p = Parser { tokens, pos: 0, opts };
    let e = p.fork()?;
    if !p.at_end() {
        return Err(p.unexpected("end of input"));
    }
    Ok(e)
}

// ---------------------------------------------------------------------------
// Lexer

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Not,
    Vee,
    False,
    True,
    Colon,
    If,
    Pipe,
    Comma,
    Dot,
    Semi,
    Amp,
    Arrow,
    Minus,
    LParen,
    RParen,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Tok::Ident(s) => return write!(f, "`{s}`"),
            Tok::Not => "`not`",
            Tok::Vee => "`v`",
            Tok::False => "`#false`",
            Tok::True => "`#true`",
            Tok::Colon => "`:`",
            Tok::If => "`:-`",
            Tok::Pipe => "`|`",
            Tok::Comma => "`,`",
            Tok::Dot => "`.`",
            Tok::Semi => "`;`",
            Tok::Amp => "`&`",
            Tok::Arrow => "`->`",
            Tok::Minus => "`-`",
            Tok::LParen => "`(`",
            Tok::RParen => "`)`",
        };
        f.write_str(s)
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, SourceSpan)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    while i < chars.len() {
        let c = chars[i];
        let span = |len| SourceSpan { line, column: col, len };
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '%' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        let two = chars.get(i + 1).copied();
        let (tok, len) = match (c, two) {
            (':', Some('-')) => (Tok::If, 2),
            ('-', Some('>')) => (Tok::Arrow, 2),
            (':', _) => (Tok::Colon, 1),
            ('|', _) => (Tok::Pipe, 1),
            (',', _) => (Tok::Comma, 1),
            ('.', _) => (Tok::Dot, 1),
            (';', _) => (Tok::Semi, 1),
            ('&', _) => (Tok::Amp, 1),
            ('-', _) => (Tok::Minus, 1),
            ('(', _) => (Tok::LParen, 1),
            (')', _) => (Tok::RParen, 1),
            ('#', _) => {
                let mut j = i + 1;
                while j < chars.len() && chars[j].is_ascii_alphabetic() {
                    j += 1;
                }
                let word: String = chars[i..j].iter().collect();
                match word.as_str() {
                    "#false" => (Tok::False, j - i),
                    "#true" => (Tok::True, j - i),
                    _ => {
                        return Err(ParseError::Syntax {
                            span: span(j - i),
                            message: format!("unknown directive `{word}`"),
                        })
                    }
                }
            }
            (c, _) if c.is_ascii_alphabetic() || c == '_' => {
                let mut j = i + 1;
                while j < chars.len()
                    && (chars[j].is_ascii_alphanumeric() || chars[j] == '_' || chars[j] == '\'')
                {
                    j += 1;
                }
                let word: String = chars[i..j].iter().collect();
                let tok = match word.as_str() {
                    "not" => Tok::Not,
                    "v" => Tok::Vee,
                    _ => Tok::Ident(word),
                };
                (tok, j - i)
            }
            _ => {
                return Err(ParseError::Syntax {
                    span: span(1),
                    message: format!("unexpected character `{c}`"),
                })
            }
        };
        out.push((tok, span(len)));
        i += len;
        col += len;
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Parser

struct Parser {
    tokens: Vec<(Tok, SourceSpan)>,
    pos: usize,
    opts: ParseOptions,
}

impl Parser {
    fn at_end(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.tokens.get(self.pos + k).map(|(t, _)| t)
    }

    fn span(&self) -> SourceSpan {
        match self.tokens.get(self.pos) {
            Some((_, s)) => *s,
            None => match self.tokens.last() {
                Some((_, s)) => SourceSpan {
                    line: s.line,
                    column: s.column + s.len,
                    len: 1,
                },
                None => SourceSpan { line: 1, column: 1, len: 1 },
            },
        }
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        let found = match self.peek() {
            Some(t) => t.to_string(),
            None => "end of input".to_string(),
        };
        ParseError::Syntax {
            span: self.span(),
            message: format!("expected {expected}, found {found}"),
        }
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: &Tok) -> Result<(), ParseError> {
        if self.eat(t) {
            Ok(())
        } else {
            Err(self.unexpected(&t.to_string()))
        }
    }

    fn atom(&mut self) -> Result<Atom, ParseError> {
        let span = self.span();
        match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                if name.starts_with(RESERVED_PREFIX) && !self.opts.allow_reserved {
                    return Err(ParseError::ReservedName { span, name });
                }
                self.pos += 1;
                Ok(Atom::new(name))
            }
            Some(Tok::Not) => Err(ParseError::ReservedName {
                span,
                name: "not".into(),
            }),
            Some(Tok::Vee) => Err(ParseError::ReservedName {
                span,
                name: "v".into(),
            }),
            _ => Err(self.unexpected("an atom")),
        }
    }

    fn rule(&mut self) -> Result<(Rule, Option<SourceSpan>), ParseError> {
        let mut label = None;
        if let (Some(Tok::Ident(name)), Some(Tok::Colon)) = (self.peek(), self.peek_at(1)) {
            label = Some((name.clone(), self.span()));
            self.pos += 2;
        }
        let mut head = Vec::new();
        if self.peek() != Some(&Tok::If) {
            head.push(self.atom()?);
            while self.eat(&Tok::Pipe) {
                head.push(self.atom()?);
            }
        }
        let (mut pos, mut neg, mut negneg) = (Vec::new(), Vec::new(), Vec::new());
        if self.eat(&Tok::If) {
            if self.peek() != Some(&Tok::Dot) {
                loop {
                    if self.eat(&Tok::Not) {
                        if self.eat(&Tok::Not) {
                            negneg.push(self.atom()?);
                        } else {
                            neg.push(self.atom()?);
                        }
                    } else {
                        pos.push(self.atom()?);
                    }
                    if !self.eat(&Tok::Comma) {
                        break;
                    }
                }
            }
        } else if head.is_empty() {
            return Err(self.unexpected("a rule"));
        }
        if !self.eat(&Tok::Dot) {
            let expected = if head.is_empty() || !pos.is_empty() || !neg.is_empty() {
                "`,` or `.`"
            } else {
                "`|`, `:-` or `.`"
            };
            return Err(self.unexpected(expected));
        }
        let mut rule = Rule::new(head, pos, neg, negneg);
        let mut label_span = None;
        if let Some((l, s)) = label {
            rule = rule.with_label(l);
            label_span = Some(s);
        }
        Ok((rule, label_span))
    }

    fn fork(&mut self) -> Result<Expr, ParseError> {
        let lhs = self.implication()?;
        let span = self.span();
        if self.eat(&Tok::Semi) {
            let rhs = self.fork()?;
            return Ok(Expr::bin(ExprKind::Split, lhs, rhs, span));
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> Result<Expr, ParseError> {
        let lhs = self.disjunction()?;
        let span = self.span();
        if self.eat(&Tok::Arrow) {
            let rhs = self.implication()?;
            return Ok(Expr::bin(ExprKind::Implies, lhs, rhs, span));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Expr, ParseError> {
        let lhs = self.conjunction()?;
        let span = self.span();
        if self.eat(&Tok::Vee) {
            let rhs = self.disjunction()?;
            return Ok(Expr::bin(ExprKind::Or, lhs, rhs, span));
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Expr, ParseError> {
        let lhs = self.unary()?;
        let span = self.span();
        if self.eat(&Tok::Amp) {
            let rhs = self.conjunction()?;
            return Ok(Expr::bin(ExprKind::And, lhs, rhs, span));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        let span = self.span();
        if self.eat(&Tok::Minus) {
            let inner = self.unary()?;
            return Ok(Expr {
                kind: ExprKind::Not,
                children: vec![inner],
                span,
            });
        }
        if self.eat(&Tok::LParen) {
            let e = self.fork()?;
            self.expect(&Tok::RParen)?;
            return Ok(e);
        }
        if self.eat(&Tok::False) {
            return Ok(Expr::leaf(ExprKind::Bot, span));
        }
        if self.eat(&Tok::True) {
            return Ok(Expr::leaf(ExprKind::Top, span));
        }
        match self.peek() {
            Some(Tok::Ident(_) | Tok::Not | Tok::Vee) => {
                let a = self.atom()?;
                Ok(Expr::leaf(ExprKind::Atom(a), span))
            }
            _ => Err(self.unexpected("an atom, `-`, `(`, `#false` or `#true`")),
        }
    }
}

#[derive(Debug, Clone)]
enum ExprKind {
    Bot,
    Top,
    Atom(Atom),
    Not,
    And,
    Or,
    Implies,
    Split,
}

/// Untyped parse tree; the fork grammar is checked when converting.
#[derive(Debug, Clone)]
struct Expr {
    kind: ExprKind,
    children: Vec<Expr>,
    span: SourceSpan,
}

impl Expr {
    fn leaf(kind: ExprKind, span: SourceSpan) -> Self {
        Expr {
            kind,
            children: Vec::new(),
            span,
        }
    }

    fn bin(kind: ExprKind, l: Expr, r: Expr, span: SourceSpan) -> Self {
        Expr {
            kind,
            children: vec![l, r],
            span,
        }
    }

    fn split_span(&self) -> Option<SourceSpan> {
        if let ExprKind::Split = self.kind {
            return Some(self.span);
        }
        self.children.iter().find_map(Expr::split_span)
    }

    fn into_formula(self, context: &str) -> Result<Formula, ParseError> {
        if let Some(span) = self.split_span() {
            return Err(ParseError::GrammarViolation {
                span,
                message: context.to_string(),
            });
        }
        Ok(self.into_formula_unchecked())
    }

    fn into_formula_unchecked(self) -> Formula {
        let mut ch = self.children.into_iter().map(Expr::into_formula_unchecked);
        match self.kind {
            ExprKind::Bot => Formula::Bot,
            ExprKind::Top => Formula::top(),
            ExprKind::Atom(a) => Formula::Atom(a),
            ExprKind::Not => Formula::not(ch.next().unwrap()),
            ExprKind::And => Formula::and(ch.next().unwrap(), ch.next().unwrap()),
            ExprKind::Or => Formula::or(ch.next().unwrap(), ch.next().unwrap()),
            ExprKind::Implies => Formula::implies(ch.next().unwrap(), ch.next().unwrap()),
            ExprKind::Split => unreachable!("checked by into_formula"),
        }
    }

    fn into_fork(self) -> Result<Fork, ParseError> {
        let mut ch = self.children.into_iter();
        Ok(match self.kind {
            ExprKind::Bot => Fork::Bot,
            ExprKind::Top => Fork::from(Formula::top()),
            ExprKind::Atom(a) => Fork::Atom(a),
            ExprKind::Not => {
                let inner = ch
                    .next()
                    .unwrap()
                    .into_formula("fork not allowed in antecedent (negation)")?;
                Fork::implies(inner, Fork::Bot)
            }
            ExprKind::And => Fork::and(ch.next().unwrap().into_fork()?, ch.next().unwrap().into_fork()?),
            ExprKind::Or => Fork::Or(
                ch.next().unwrap().into_formula("fork not allowed in disjunction")?,
                ch.next().unwrap().into_formula("fork not allowed in disjunction")?,
            ),
            ExprKind::Implies => Fork::implies(
                ch.next().unwrap().into_formula("fork not allowed in antecedent")?,
                ch.next().unwrap().into_fork()?,
            ),
            ExprKind::Split => Fork::split(ch.next().unwrap().into_fork()?, ch.next().unwrap().into_fork()?),
        })
    }
}

// ---------------------------------------------------------------------------
// Rendering

pub fn render_program(p: &Program) -> String {
    let mut out = String::new();
    for r in p.rules() {
        out.push_str(&render_rule(r));
        out.push('\n');
    }
    out
}

pub fn render_rule(r: &Rule) -> String {
    let mut s = String::new();
    if let Some(l) = r.label() {
        s.push_str(l);
        s.push_str(": ");
    }
    let head: Vec<&str> = r.head().iter().map(Atom::name).collect();
    s.push_str(&head.join(" | "));
    if !r.body_is_empty() || r.head().is_empty() {
        let body: Vec<String> = r
            .pos()
            .iter()
            .map(|a| a.to_string())
            .chain(r.neg().iter().map(|a| format!("not {a}")))
            .chain(r.negneg().iter().map(|a| format!("not not {a}")))
            .collect();
        if !head.is_empty() {
            s.push(' ');
        }
        s.push_str(":-");
        if !body.is_empty() {
            s.push(' ');
            s.push_str(&body.join(", "));
        } else {
            s.push(' ');
        }
    }
    s.push('.');
    s
}

pub fn render_fork(f: &Fork) -> String {
    match f {
        Fork::Bot => "#false".into(),
        Fork::Atom(a) => a.to_string(),
        Fork::Split(l, r) => format!("{} ; {}", fork_operand(l), fork_operand(r)),
        Fork::And(l, r) => format!("{} & {}", fork_operand(l), fork_operand(r)),
        Fork::Or(l, r) => format!("{} v {}", formula_operand(l), formula_operand(r)),
        Fork::Implies(l, r) => {
            if **r == Fork::Bot {
                render_formula(&Formula::not(l.clone()))
            } else {
                format!("{} -> {}", formula_operand(l), fork_operand(r))
            }
        }
    }
}

fn fork_operand(f: &Fork) -> String {
    match f {
        Fork::Bot | Fork::Atom(_) => render_fork(f),
        Fork::Implies(_, r) if **r == Fork::Bot => render_fork(f),
        _ => format!("({})", render_fork(f)),
    }
}

pub fn render_formula(f: &Formula) -> String {
    match f {
        Formula::Bot => "#false".into(),
        Formula::Atom(a) => a.to_string(),
        _ if f.is_top() => "#true".into(),
        Formula::And(l, r) => format!("{} & {}", formula_operand(l), formula_operand(r)),
        Formula::Or(l, r) => format!("{} v {}", formula_operand(l), formula_operand(r)),
        Formula::Implies(l, r) => {
            if **r == Formula::Bot {
                format!("-{}", formula_operand(l))
            } else {
                format!("{} -> {}", formula_operand(l), formula_operand(r))
            }
        }
    }
}

fn formula_operand(f: &Formula) -> String {
    match f {
        Formula::Bot | Formula::Atom(_) => render_formula(f),
        _ if f.is_top() => render_formula(f),
        Formula::Implies(_, r) if **r == Formula::Bot => render_formula(f),
        _ => format!("({})", render_formula(f)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::atoms;

    #[test]
    fn program_one() {
        let p = parse_program("a | b.  a | c.").unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.rules()[0].head_set(), atoms(["a", "b"]));
        assert_eq!(render_program(&p), "a | b.\na | c.\n");
    }

    #[test]
    fn labelled_program() {
        let p = parse_program("l1: a | b.\nl2: a | c.").unwrap();
        assert_eq!(p.rules()[0].label(), Some("l1"));
        assert_eq!(p.rules()[1].label(), Some("l2"));
        assert_eq!(render_program(&p), "l1: a | b.\nl2: a | c.\n");
    }

    #[test]
    fn double_negation() {
        let p = parse_program("p :- not not q, not r.").unwrap();
        let r = &p.rules()[0];
        assert_eq!(r.negneg(), &atoms(["q"]));
        assert_eq!(r.neg(), &atoms(["r"]));
        assert!(r.pos().is_empty());
        assert_eq!(render_rule(r), "p :- not r, not not q.");
    }

    #[test]
    fn constraints_and_facts() {
        let p = parse_program(":- c.\na.\n:- .").unwrap();
        assert_eq!(render_program(&p), ":- c.\na.\n:- .\n");
        assert!(p.rules()[2].is_constraint() && p.rules()[2].body_is_empty());
    }

    #[test]
    fn comments_and_whitespace() {
        let p = parse_program("% header\n  a|b   . % trailing\n\n").unwrap();
        assert_eq!(p.len(), 1);
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_program("a | b.\nc :- d e.").unwrap_err();
        assert_eq!(e.span().line, 2);
        assert_eq!(e.span().column, 8);
        assert!(e.to_string().starts_with("2:8:"), "{e}");

        let e = parse_program("x: a.\nx: b.").unwrap_err();
        assert!(matches!(e, ParseError::DuplicateLabel { ref label, .. } if label == "x"));
        assert_eq!(e.span().line, 2);

        let e = parse_program("a :- not.").unwrap_err();
        assert!(matches!(e, ParseError::Syntax { .. }));
        let e = parse_program("not :- a.").unwrap_err();
        assert!(matches!(e, ParseError::ReservedName { .. }));
        let e = parse_program("__x.").unwrap_err();
        assert!(matches!(e, ParseError::ReservedName { .. }));
        assert!(parse_program_with("__x.", ParseOptions { allow_reserved: true }).is_ok());
        assert!(parse_program("a").is_err());
        assert!(parse_program(".").is_err());
    }

    #[test]
    fn fork_example_one() {
        let f = parse_fork("(a ; b) & (a ; c)").unwrap();
        let p = parse_program("a | b. a | c.").unwrap();
        assert_eq!(f, p.forked());
    }

    #[test]
    fn fork_grammar_violations() {
        let e = parse_fork("(a ; b) v c").unwrap_err();
        assert!(matches!(e, ParseError::GrammarViolation { .. }), "{e}");
        assert!(e.to_string().contains("disjunction"));
        let e = parse_fork("(a ; b) -> c").unwrap_err();
        assert!(e.to_string().contains("antecedent"));
        let e = parse_fork("-(a ; b)").unwrap_err();
        assert!(matches!(e, ParseError::GrammarViolation { .. }));
        assert!(parse_formula("a ; b").is_err());
    }

    #[test]
    fn negated_implication() {
        let f = parse_fork("-b -> b").unwrap();
        assert_eq!(
            f,
            Fork::implies(Formula::not(Formula::atom("b")), Fork::Atom(Atom::new("b")))
        );
        assert_eq!(render_fork(&f), "-b -> b");
    }

    #[test]
    fn fork_precedence() {
        let f = parse_fork("p -> a ; b").unwrap();
        assert!(matches!(f, Fork::Split(..)));
        let g = parse_fork("a & b v c -> d").unwrap();
        let expected = Formula::implies(
            Formula::or(
                Formula::and(Formula::atom("a"), Formula::atom("b")),
                Formula::atom("c"),
            ),
            Formula::atom("d"),
        );
        assert_eq!(g, Fork::from(expected));
        assert_eq!(parse_formula("#true").unwrap(), Formula::top());
        assert_eq!(parse_formula("--a").unwrap(), Formula::not(Formula::not(Formula::atom("a"))));
    }

    #[test]
    fn fork_render_roundtrip_samples() {
        for src in [
            "(a ; b) & (a ; c)",
            "(a ; b) & a & (-b -> b)",
            "#true -> (a ; (b ; #false))",
            "(a v -b) -> ((c & #true) ; -(-a))",
        ] {
            let f = parse_fork(src).unwrap();
            let again = parse_fork(&render_fork(&f)).unwrap();
            assert_eq!(f, again, "{src} -> {}", render_fork(&f));
        }
    }
}
