//! Lexer and recursive-descent parser for calculator statements.
//!
//! ```text
//! stmt   := expr (("<" | ">" | "==" | "~") expr)?
//! expr   := term (("+" | "-") term)*
//! term   := factor (("*" | "/") factor)*
//! factor := "S(" expr ")" | atom | "(" expr ")"
//! atom   := literal | limit | helper
//! limit  := ("lim" | "xlim") "(" VAR "in" ("L" | "N" | "M") "," seq ")"
//! seq    := ("ones(" VAR ")" | "pow2(" VAR ")" | VAR) ("+" NAT)*
//! helper := "digits(" expr ")" | "dist(" expr "," expr ")"
//!         | "pair(" expr "," expr ")" | "enum(" NAME (":" NAT)? "," NAT ")"
//! ```
//!
//! Literals are decimals, `w`, `w_k`, `w-m`, `o_i`, `o_i+k`, `o_i-k`, `K`,
//! `kappa` (or `κ`) and `|N|`. A `-m` or `+k` suffix binds to `w` / `o_i` only
//! when written without spaces; `w - 2` is ordinary subtraction (with the same
//! value).

use num_bigint::BigUint;

use crate::bijections::Enumerator;
use crate::limits::{IndexDomain, SeqFamily};
use crate::number::{CardValue, MNumber, Value};

use super::CalcError;

/// Byte range `[start, end)` in the source line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    /// 1-based column of the first byte.
    pub fn column(&self) -> usize {
        self.start + 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CmpOp {
    Less,
    Greater,
    Equal,
    Equivalent,
}

impl CmpOp {
    pub fn symbol(&self) -> &'static str {
        match self {
            CmpOp::Less => "<",
            CmpOp::Greater => ">",
            CmpOp::Equal => "==",
            CmpOp::Equivalent => "~",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprKind {
    Lit(Value),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Compare(CmpOp, Box<Expr>, Box<Expr>),
    Succ(Box<Expr>),
    Limit(IndexDomain, SeqFamily),
    XLimit(IndexDomain, SeqFamily),
    Digits(Box<Expr>),
    Dist(Box<Expr>, Box<Expr>),
    Pair(Box<Expr>, Box<Expr>),
    Enum(Enumerator, u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigUint),
    Name(MNumber),
    Ident(String),
    CardK,
    Kappa,
    CardN,
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    Comma,
    Colon,
    Lt,
    Gt,
    EqEq,
    Tilde,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(n) => format!("number {n}"),
            Tok::Name(x) => format!("{x}"),
            Tok::Ident(s) => format!("{s:?}"),
            Tok::CardK => "K".into(),
            Tok::Kappa => "kappa".into(),
            Tok::CardN => "|N|".into(),
            Tok::Plus => "\"+\"".into(),
            Tok::Minus => "\"-\"".into(),
            Tok::Star => "\"*\"".into(),
            Tok::Slash => "\"/\"".into(),
            Tok::LParen => "\"(\"".into(),
            Tok::RParen => "\")\"".into(),
            Tok::Comma => "\",\"".into(),
            Tok::Colon => "\":\"".into(),
            Tok::Lt => "\"<\"".into(),
            Tok::Gt => "\">\"".into(),
            Tok::EqEq => "\"==\"".into(),
            Tok::Tilde => "\"~\"".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn syntax(at: usize, expected: &[&str], found: &str) -> CalcError {
    CalcError::syntax(at + 1, expected.iter().map(|s| s.to_string()).collect(), found.to_string())
}

fn lex(src: &str) -> Result<Vec<(Tok, Span)>, CalcError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = src[i..].chars().next().unwrap();
        if c.is_whitespace() {
            i += c.len_utf8();
            continue;
        }
        let start = i;
        let single = |t: Tok| (t, Span { start, end: start + 1 });
        match c {
            '+' => out.push(single(Tok::Plus)),
            '-' => out.push(single(Tok::Minus)),
            '*' => out.push(single(Tok::Star)),
            '/' => out.push(single(Tok::Slash)),
            '(' => out.push(single(Tok::LParen)),
            ')' => out.push(single(Tok::RParen)),
            ',' => out.push(single(Tok::Comma)),
            ':' => out.push(single(Tok::Colon)),
            '<' => out.push(single(Tok::Lt)),
            '>' => out.push(single(Tok::Gt)),
            '~' => out.push(single(Tok::Tilde)),
            '=' => {
                if bytes.get(i + 1) == Some(&b'=') {
                    out.push((Tok::EqEq, Span { start, end: start + 2 }));
                    i += 2;
                    continue;
                }
                return Err(syntax(i, &["\"==\""], "\"=\""));
            }
            '|' => {
                if src[i..].starts_with("|N|") {
                    out.push((Tok::CardN, Span { start, end: start + 3 }));
                    i += 3;
                    continue;
                }
                return Err(syntax(i, &["|N|"], "\"|\""));
            }
            'κ' => {
                let end = i + c.len_utf8();
                out.push((Tok::Kappa, Span { start, end }));
                i = end;
                continue;
            }
            c if c.is_ascii_digit() => {
                let end = i + bytes[i..].iter().take_while(|b| b.is_ascii_digit()).count();
                let n: BigUint = src[i..end].parse().expect("digits");
                out.push((Tok::Num(n), Span { start, end }));
                i = end;
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut end = i + bytes[i..]
                    .iter()
                    .take_while(|b| b.is_ascii_alphanumeric() || **b == b'_')
                    .count();
                let word = &src[i..end];
                let is_w = word == "w";
                let is_lmk = word.starts_with("o_");
                // Glue an unspaced signed offset onto w / o_i when the result is a valid name.
                if (is_w || is_lmk) && end + 1 < bytes.len() {
                    let sign_ok = bytes[end] == b'-' || (is_lmk && bytes[end] == b'+');
                    if sign_ok && bytes[end + 1].is_ascii_digit() {
                        let glued = end + 1 + bytes[end + 1..].iter().take_while(|b| b.is_ascii_digit()).count();
                        if src[i..glued].parse::<MNumber>().is_ok() {
                            end = glued;
                        }
                    }
                }
                let word = &src[i..end];
                let tok = match word {
                    "K" => Tok::CardK,
                    "kappa" => Tok::Kappa,
                    w if w == "w" || w.starts_with("w_") || w.starts_with("w-") || w.starts_with("o_") => {
                        match w.parse::<MNumber>() {
                            Ok(x) => Tok::Name(x),
                            Err(_) => return Err(syntax(i, &["a literal such as w_1, w-2, o_1+3"], w)),
                        }
                    }
                    _ => Tok::Ident(word.to_string()),
                };
                out.push((tok, Span { start, end }));
                i = end;
                continue;
            }
            other => return Err(syntax(i, &["an expression"], &format!("{other:?}"))),
        }
        i += 1;
    }
    out.push((Tok::End, Span { start: src.len(), end: src.len() }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
}

const ATOM_START: &[&str] = &["a number", "w", "o_i", "K", "kappa", "|N|", "\"(\"", "S(", "lim(", "xlim(", "a helper call"];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn span(&self) -> Span {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, Span) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> CalcError {
        syntax(self.span().start, expected, &self.peek().describe())
    }

    fn expect(&mut self, tok: Tok, label: &str) -> Result<Span, CalcError> {
        if *self.peek() == tok {
            Ok(self.bump().1)
        } else {
            Err(self.error(&[label]))
        }
    }

    fn expect_ident(&mut self, word: &str) -> Result<Span, CalcError> {
        match self.peek() {
            Tok::Ident(w) if w == word => Ok(self.bump().1),
            _ => Err(self.error(&[&format!("{word:?}")])),
        }
    }

    fn stmt(&mut self) -> Result<Expr, CalcError> {
        let lhs = self.expr()?;
        let op = match self.peek() {
            Tok::Lt => CmpOp::Less,
            Tok::Gt => CmpOp::Greater,
            Tok::EqEq => CmpOp::Equal,
            Tok::Tilde => CmpOp::Equivalent,
            Tok::End => return Ok(lhs),
            _ => return Err(self.error(&["an operator", "end of input"])),
        };
        self.bump();
        let rhs = self.expr()?;
        if *self.peek() != Tok::End {
            return Err(self.error(&["an operator", "end of input"]));
        }
        let span = Span { start: lhs.span.start, end: rhs.span.end };
        Ok(Expr {
            kind: ExprKind::Compare(op, Box::new(lhs), Box::new(rhs)),
            span,
        })
    }

    fn expr(&mut self) -> Result<Expr, CalcError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            lhs = binary(op, lhs, rhs);
        }
    }

    fn term(&mut self) -> Result<Expr, CalcError> {
        let mut lhs = self.factor()?;
        loop {
            let op = match self.peek() {
                Tok::Star => BinOp::Mul,
                Tok::Slash => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.factor()?;
            lhs = binary(op, lhs, rhs);
        }
    }

    fn factor(&mut self) -> Result<Expr, CalcError> {
        let (tok, span) = (self.peek().clone(), self.span());
        let lit = |v: Value| Expr { kind: ExprKind::Lit(v), span };
        match tok {
            Tok::Num(n) => {
                self.bump();
                Ok(lit(Value::Elem(MNumber::Fin(n))))
            }
            Tok::Name(x) => {
                self.bump();
                Ok(lit(Value::Elem(x)))
            }
            Tok::CardK | Tok::CardN => {
                self.bump();
                Ok(lit(Value::Card(CardValue::K)))
            }
            Tok::Kappa => {
                self.bump();
                Ok(lit(Value::Card(CardValue::Kappa)))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                let close = self.expect(Tok::RParen, "\")\"")?;
                Ok(Expr {
                    kind: inner.kind,
                    span: Span { start: span.start, end: close.end },
                })
            }
            Tok::Ident(word) => self.call(&word, span),
            _ => Err(self.error(ATOM_START)),
        }
    }

    fn call(&mut self, word: &str, span: Span) -> Result<Expr, CalcError> {
        if !matches!(word, "S" | "lim" | "xlim" | "digits" | "dist" | "pair" | "enum") {
            return Err(self.error(ATOM_START));
        }
        self.bump();
        self.expect(Tok::LParen, "\"(\"")?;
        let kind = match word {
            "S" => ExprKind::Succ(Box::new(self.expr()?)),
            "digits" => ExprKind::Digits(Box::new(self.expr()?)),
            "dist" | "pair" => {
                let a = self.expr()?;
                self.expect(Tok::Comma, "\",\"")?;
                let b = self.expr()?;
                if word == "dist" {
                    ExprKind::Dist(Box::new(a), Box::new(b))
                } else {
                    ExprKind::Pair(Box::new(a), Box::new(b))
                }
            }
            "enum" => self.enum_args()?,
            _ => self.limit_args(word == "xlim")?,
        };
        let close = self.expect(Tok::RParen, "\")\"")?;
        Ok(Expr {
            kind,
            span: Span { start: span.start, end: close.end },
        })
    }

    fn enum_args(&mut self) -> Result<ExprKind, CalcError> {
        let name_span = self.span();
        let mut name = match self.bump().0 {
            Tok::Ident(w) => w,
            _ => return Err(syntax(name_span.start, &["an enumerator name"], "something else")),
        };
        if *self.peek() == Tok::Colon {
            self.bump();
            match self.bump().0 {
                Tok::Num(n) => name = format!("{name}:{n}"),
                other => return Err(syntax(self.toks[self.pos - 1].1.start, &["a number"], &other.describe())),
            }
        }
        let which: Enumerator = name
            .parse()
            .map_err(|e: crate::Error| CalcError::eval(name_span.column(), e))?;
        self.expect(Tok::Comma, "\",\"")?;
        let count_span = self.span();
        let count = match self.bump().0 {
            Tok::Num(n) => u64::try_from(n).map_err(|_| syntax(count_span.start, &["a row count"], "a huge number"))?,
            other => return Err(syntax(count_span.start, &["a row count"], &other.describe())),
        };
        Ok(ExprKind::Enum(which, count))
    }

    fn limit_args(&mut self, xtr: bool) -> Result<ExprKind, CalcError> {
        let var_span = self.span();
        let var = match self.bump().0 {
            Tok::Ident(v) => v,
            other => return Err(syntax(var_span.start, &["a variable"], &other.describe())),
        };
        self.expect_ident("in")?;
        let dom_span = self.span();
        let domain = match self.bump().0 {
            Tok::Ident(d) if d == "L" => IndexDomain::L,
            Tok::Ident(d) if d == "N" => IndexDomain::N,
            Tok::Ident(d) if d == "M" => IndexDomain::M,
            other => return Err(syntax(dom_span.start, &["L", "N", "M"], &other.describe())),
        };
        self.expect(Tok::Comma, "\",\"")?;
        let family = self.seq(&var)?;
        Ok(if xtr {
            ExprKind::XLimit(domain, family)
        } else {
            ExprKind::Limit(domain, family)
        })
    }

    fn seq(&mut self, var: &str) -> Result<SeqFamily, CalcError> {
        let head_span = self.span();
        let mut family = match self.bump().0 {
            Tok::Ident(f) if f == var => SeqFamily::Identity,
            Tok::Ident(f) if f == "ones" || f == "pow2" => {
                self.expect(Tok::LParen, "\"(\"")?;
                self.expect_ident(var)?;
                self.expect(Tok::RParen, "\")\"")?;
                if f == "ones" {
                    SeqFamily::OnesRun
                } else {
                    SeqFamily::Pow2
                }
            }
            other => {
                let wanted = format!("{var:?}");
                return Err(syntax(head_span.start, &[&wanted, "ones(..)", "pow2(..)"], &other.describe()));
            }
        };
        while *self.peek() == Tok::Plus {
            self.bump();
            let at = self.span();
            match self.bump().0 {
                Tok::Num(c) => family = family.shifted(c),
                other => return Err(syntax(at.start, &["a number"], &other.describe())),
            }
        }
        Ok(family)
    }
}

fn binary(op: BinOp, lhs: Expr, rhs: Expr) -> Expr {
    let span = Span { start: lhs.span.start, end: rhs.span.end };
    Expr {
        kind: ExprKind::Binary(op, Box::new(lhs), Box::new(rhs)),
        span,
    }
}

/// Parses one statement.
pub fn parse_expr(input: &str) -> Result<Expr, CalcError> {
    let toks = lex(input)?;
    let mut p = Parser { toks, pos: 0 };
    if *p.peek() == Tok::End {
        return Err(p.error(ATOM_START));
    }
    p.stmt()
}
