//! Calculator front end: parse a statement, evaluate it, print the outcome.
//!
//! Expressions mentioning `K`, `kappa` or `|N|` are evaluated in the cardinal
//! stratum: element operands are coerced (`n ↦ n`, infinite ↦ `K`) at the
//! operator where they meet a cardinal. Everything else is element arithmetic,
//! which may itself escalate.

mod cli;
mod format;
mod parse;
mod repl;

use std::fmt;

use crate::bijections::{self, PairIndex};
use crate::card;
use crate::digits::{self, DigitForm};
use crate::element;
use crate::error::Error;
use crate::limits::{self, LimitResult};
use crate::number::{CardValue, MNumber, Value};
use crate::order::{self, Comparison, Distance};

pub use cli::{run_cli, EXIT_BAD_FLAGS, EXIT_EVAL_ERROR, EXIT_IO_ERROR, EXIT_OK, EXIT_SYNTAX_ERROR};
pub use format::{format_error, format_outcome, FormatOptions, OutputMode};
pub use parse::{parse_expr, BinOp, CmpOp, Expr, ExprKind, Span};
pub use repl::run_repl;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalOutcome {
    Number(MNumber),
    Card(CardValue),
    Cmp { op: CmpOp, relation: Comparison },
    Dist(Distance),
    Lim(LimitResult),
    Digits(DigitForm),
    Table(Vec<(String, u64)>),
}

impl EvalOutcome {
    fn kind_name(&self) -> &'static str {
        match self {
            EvalOutcome::Number(_) => "number",
            EvalOutcome::Card(_) => "cardinal",
            EvalOutcome::Cmp { .. } => "comparison",
            EvalOutcome::Dist(_) => "distance",
            EvalOutcome::Lim(_) => "limit",
            EvalOutcome::Digits(_) => "digit pattern",
            EvalOutcome::Table(_) => "table",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CalcErrorKind {
    Syntax { expected: Vec<String>, found: String },
    Eval(Error),
    Type(String),
}

/// A failure tied to a 1-based column of the input line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CalcError {
    pub column: usize,
    pub kind: CalcErrorKind,
}

impl CalcError {
    pub(crate) fn syntax(column: usize, expected: Vec<String>, found: String) -> Self {
        CalcError {
            column,
            kind: CalcErrorKind::Syntax { expected, found },
        }
    }

    pub(crate) fn eval(column: usize, err: Error) -> Self {
        CalcError {
            column,
            kind: CalcErrorKind::Eval(err),
        }
    }

    fn type_error(span: Span, msg: impl Into<String>) -> Self {
        CalcError {
            column: span.column(),
            kind: CalcErrorKind::Type(msg.into()),
        }
    }

    pub fn is_syntax(&self) -> bool {
        matches!(self.kind, CalcErrorKind::Syntax { .. })
    }
}

impl fmt::Display for CalcError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            CalcErrorKind::Syntax { expected, found } => {
                write!(f, "syntax error: expected {}, found {found}", expected.join(" or "))
            }
            CalcErrorKind::Eval(e) => e.fmt(f),
            CalcErrorKind::Type(msg) => f.write_str(msg),
        }
    }
}

impl std::error::Error for CalcError {}

fn at(span: Span) -> impl Fn(Error) -> CalcError {
    move |e| CalcError::eval(span.column(), e)
}

/// Evaluates a parsed statement.
pub fn eval(e: &Expr) -> Result<EvalOutcome, CalcError> {
    Ok(match &e.kind {
        ExprKind::Lit(Value::Elem(x)) => EvalOutcome::Number(x.clone()),
        ExprKind::Lit(Value::Card(c)) => EvalOutcome::Card(c.clone()),
        ExprKind::Binary(op, lhs, rhs) => {
            let a = value(lhs)?;
            let b = value(rhs)?;
            into_outcome(arith(*op, &a, &b).map_err(at(e.span))?)
        }
        ExprKind::Succ(inner) => match value(inner)? {
            Value::Elem(x) => EvalOutcome::Number(element::succ(&x)),
            Value::Card(c) => EvalOutcome::Card(card::card_add(&c, &CardValue::fin(1u32))),
        },
        ExprKind::Compare(op, lhs, rhs) => {
            let a = element_operand(lhs)?;
            let b = element_operand(rhs)?;
            let relation = match op {
                CmpOp::Equivalent => order::cardinal_compare(&a, &b),
                _ => order::structural_compare(&a, &b),
            };
            EvalOutcome::Cmp { op: *op, relation }
        }
        ExprKind::Digits(inner) => {
            let x = element_operand(inner)?;
            EvalOutcome::Digits(digits::to_digits(&x).map_err(at(inner.span))?)
        }
        ExprKind::Dist(a, b) => {
            let x = element_operand(a)?;
            let y = element_operand(b)?;
            EvalOutcome::Dist(order::distance(&x, &y))
        }
        ExprKind::Pair(a, b) => {
            let i = grid_coordinate(a)?;
            let j = grid_coordinate(b)?;
            let p = PairIndex::new(i, j).map_err(at(e.span))?;
            EvalOutcome::Number(MNumber::fin(bijections::pair_index(p)))
        }
        ExprKind::Enum(which, count) => EvalOutcome::Table(which.rows(*count).map_err(at(e.span))?),
        ExprKind::Limit(d, f) => EvalOutcome::Lim(limits::eval_limit(f, *d).map_err(at(e.span))?),
        ExprKind::XLimit(d, f) => EvalOutcome::Lim(limits::eval_xtr_limit(f, *d).map_err(at(e.span))?),
    })
}

/// Parses and evaluates one line.
pub fn eval_str(input: &str) -> Result<EvalOutcome, CalcError> {
    eval(&parse_expr(input)?)
}

fn into_outcome(v: Value) -> EvalOutcome {
    match v {
        Value::Elem(x) => EvalOutcome::Number(x),
        Value::Card(c) => EvalOutcome::Card(c),
    }
}

fn arith(op: BinOp, a: &Value, b: &Value) -> Result<Value, Error> {
    match (a, b) {
        (Value::Elem(x), Value::Elem(y)) => match op {
            BinOp::Add => Ok(element::add(x, y)),
            BinOp::Sub => element::sub(x, y),
            BinOp::Mul => Ok(element::mul(x, y)),
            BinOp::Div => element::div(x, y),
        },
        _ => {
            let (x, y) = (a.card_image(), b.card_image());
            match op {
                BinOp::Add => Ok(card::card_add(&x, &y)),
                BinOp::Sub => card::card_sub(&x, &y),
                BinOp::Mul => Ok(card::card_mul(&x, &y)),
                BinOp::Div => card::card_div(&x, &y),
            }
            .map(Value::Card)
        }
    }
}

/// An arithmetic operand: a number, a cardinal, or a limit that is one of those.
fn value(e: &Expr) -> Result<Value, CalcError> {
    match eval(e)? {
        EvalOutcome::Number(x) | EvalOutcome::Lim(LimitResult::Value(x)) => Ok(Value::Elem(x)),
        EvalOutcome::Card(c) => Ok(Value::Card(c)),
        EvalOutcome::Lim(LimitResult::CardK) => Ok(Value::Card(CardValue::K)),
        EvalOutcome::Lim(LimitResult::NoLimit) => Err(CalcError::type_error(e.span, "no limit exists, so there is no value to use")),
        EvalOutcome::Lim(LimitResult::Apeiron) => Err(CalcError::type_error(e.span, "apeiron is not a number")),
        other => Err(CalcError::type_error(e.span, format!("a {} is not a number", other.kind_name()))),
    }
}

fn element_operand(e: &Expr) -> Result<MNumber, CalcError> {
    match value(e)? {
        Value::Elem(x) => Ok(x),
        Value::Card(c) => Err(CalcError::type_error(
            e.span,
            format!("{} is a cardinal; this operation needs an element of M", c.ascii_name()),
        )),
    }
}

fn grid_coordinate(e: &Expr) -> Result<u64, CalcError> {
    match element_operand(e)? {
        MNumber::Fin(n) => u64::try_from(n).map_err(|_| CalcError::type_error(e.span, "grid coordinate too large")),
        x => Err(CalcError::type_error(e.span, format!("grid coordinate must be finite, got {x}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_examples() {
        assert_eq!(eval_str("K - K").unwrap(), EvalOutcome::Card(CardValue::Kappa));
        assert_eq!(eval_str("S(w)").unwrap(), EvalOutcome::Number(MNumber::w(1)));
        assert_eq!(
            eval_str("w ~ o_1").unwrap(),
            EvalOutcome::Cmp {
                op: CmpOp::Equivalent,
                relation: Comparison::EquivalentNotEqual
            }
        );
        assert_eq!(eval_str("2 + 3").unwrap(), EvalOutcome::Number(MNumber::fin(5u32)));
        assert_eq!(eval_str("|N|").unwrap(), EvalOutcome::Card(CardValue::K));
    }

    #[test]
    fn cardinal_coercion() {
        assert_eq!(eval_str("w + K").unwrap(), EvalOutcome::Card(CardValue::K));
        assert_eq!(eval_str("3 - K").unwrap_err().column, 1);
        assert_eq!(eval_str("K * 0").unwrap(), EvalOutcome::Card(CardValue::fin(0u32)));
        assert_eq!(eval_str("S(K)").unwrap(), EvalOutcome::Card(CardValue::K));
        assert_eq!(eval_str("kappa + 2").unwrap(), EvalOutcome::Card(CardValue::Kappa));
    }

    #[test]
    fn limits_feed_arithmetic() {
        assert_eq!(eval_str("lim(n in L, ones(n)) + 1").unwrap(), EvalOutcome::Number(MNumber::w(1)));
        assert!(eval_str("lim(n in N, n) + 1").is_err());
        assert!(eval_str("xlim(n in M, n) + 1").is_err());
        assert_eq!(eval_str("xlim(n in N, n) + 1").unwrap(), EvalOutcome::Card(CardValue::K));
    }

    #[test]
    fn type_errors_are_positioned() {
        let err = eval_str("1 + digits(5)").unwrap_err();
        assert_eq!(err.column, 5);
        let err = eval_str("K < 3").unwrap_err();
        assert_eq!(err.column, 1);
        let err = eval_str("pair(w, 1)").unwrap_err();
        assert_eq!(err.column, 6);
        let err = eval_str("digits(w_1)").unwrap_err();
        assert_eq!(err.column, 8);
    }

    #[test]
    fn helpers() {
        assert_eq!(eval_str("pair(2, 2)").unwrap(), EvalOutcome::Number(MNumber::fin(4u32)));
        assert_eq!(
            eval_str("dist(o_2+3, o_2-4)").unwrap(),
            EvalOutcome::Dist(Distance::FiniteDist(7u32.into()))
        );
        assert!(matches!(eval_str("pair(0, 1)"), Err(CalcError { kind: CalcErrorKind::Eval(_), .. })));
        match eval_str("enum(pairs, 3)").unwrap() {
            EvalOutcome::Table(rows) => assert_eq!(rows[2], ("(2,1)".to_string(), 2)),
            other => panic!("{other:?}"),
        }
    }
}
