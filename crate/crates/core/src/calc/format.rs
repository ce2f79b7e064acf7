use serde_json::{json, Value as Json};

use crate::digits::Support;
use crate::limits::LimitResult;
use crate::number::CardValue;
use crate::order::{Comparison, Distance};

use super::{CalcError, CalcErrorKind, CmpOp, EvalOutcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputMode {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FormatOptions {
    pub mode: OutputMode,
    /// Minimum number of digits shown for digit patterns.
    pub digits_width: usize,
    /// Spell `κ` as `kappa` in text output.
    pub ascii: bool,
}

impl Default for FormatOptions {
    fn default() -> Self {
        FormatOptions {
            mode: OutputMode::Text,
            digits_width: 16,
            ascii: false,
        }
    }
}

fn relation_name(c: Comparison) -> &'static str {
    match c {
        Comparison::Less => "less",
        Comparison::Greater => "greater",
        Comparison::Equal => "equal",
        Comparison::EquivalentNotEqual => "equivalent",
    }
}

fn holds(op: CmpOp, c: Comparison) -> bool {
    match op {
        CmpOp::Less => c == Comparison::Less,
        CmpOp::Greater => c == Comparison::Greater,
        CmpOp::Equal => c == Comparison::Equal,
        CmpOp::Equivalent => matches!(c, Comparison::Equal | Comparison::EquivalentNotEqual),
    }
}

fn limit_name(l: &LimitResult) -> String {
    match l {
        LimitResult::Value(x) => x.to_string(),
        LimitResult::CardK => "K".into(),
        LimitResult::NoLimit => "no-limit".into(),
        LimitResult::Apeiron => "apeiron".into(),
    }
}

fn card_name(c: &CardValue, ascii: bool) -> String {
    if ascii {
        c.ascii_name()
    } else {
        c.to_string()
    }
}

pub fn format_outcome(o: &EvalOutcome, opts: &FormatOptions) -> String {
    match opts.mode {
        OutputMode::Text => text(o, opts),
        OutputMode::Json => json_record(o, opts).to_string(),
    }
}

fn text(o: &EvalOutcome, opts: &FormatOptions) -> String {
    match o {
        EvalOutcome::Number(x) => x.to_string(),
        EvalOutcome::Card(c) => card_name(c, opts.ascii),
        EvalOutcome::Cmp { relation, .. } => relation_name(*relation).into(),
        EvalOutcome::Dist(Distance::FiniteDist(d)) => format!("finite({d})"),
        EvalOutcome::Dist(Distance::InfiniteDist) => "infinite".into(),
        EvalOutcome::Lim(l) => limit_name(l),
        EvalOutcome::Digits(d) => d.render(opts.digits_width),
        EvalOutcome::Table(rows) => {
            let width = rows.iter().map(|(name, _)| name.chars().count()).max().unwrap_or(0);
            rows.iter()
                .map(|(name, idx)| {
                    let pad = width - name.chars().count();
                    format!("{name}{}  {idx}", " ".repeat(pad))
                })
                .collect::<Vec<_>>()
                .join("\n")
        }
    }
}

fn json_record(o: &EvalOutcome, opts: &FormatOptions) -> Json {
    match o {
        EvalOutcome::Number(x) => json!({"kind": "number", "value": x.to_string()}),
        EvalOutcome::Card(c) => json!({"kind": "card", "value": c.ascii_name()}),
        EvalOutcome::Cmp { op, relation } => json!({
            "kind": "comparison",
            "value": relation_name(*relation),
            "op": op.symbol(),
            "holds": holds(*op, *relation),
        }),
        EvalOutcome::Dist(Distance::FiniteDist(d)) => {
            json!({"kind": "distance", "value": "finite", "steps": d.to_string()})
        }
        EvalOutcome::Dist(Distance::InfiniteDist) => json!({"kind": "distance", "value": "infinite"}),
        EvalOutcome::Lim(l) => json!({"kind": "limit", "value": limit_name(l)}),
        EvalOutcome::Digits(d) => json!({
            "kind": "digits",
            "value": d.render(opts.digits_width),
            "support": match d.kind() {
                Support::Finite => "finite",
                Support::CoFinite => "co-finite",
            },
            "positions": d.positions().iter().collect::<Vec<_>>(),
        }),
        EvalOutcome::Table(rows) => json!({
            "kind": "table",
            "rows": rows.iter().map(|(name, idx)| json!({"token": name, "index": idx})).collect::<Vec<_>>(),
        }),
    }
}

pub fn format_error(e: &CalcError, opts: &FormatOptions) -> String {
    match opts.mode {
        OutputMode::Text => format!("error at column {}: {e}", e.column),
        OutputMode::Json => {
            let class = match e.kind {
                CalcErrorKind::Syntax { .. } => "syntax",
                CalcErrorKind::Eval(_) | CalcErrorKind::Type(_) => "evaluation",
            };
            json!({"kind": "error", "class": class, "column": e.column, "message": e.to_string()}).to_string()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::MNumber;

    fn json_opts() -> FormatOptions {
        FormatOptions {
            mode: OutputMode::Json,
            ..FormatOptions::default()
        }
    }

    #[test]
    fn text_examples() {
        let opts = FormatOptions::default();
        assert_eq!(format_outcome(&EvalOutcome::Card(CardValue::Kappa), &opts), "κ");
        assert_eq!(format_outcome(&EvalOutcome::Number(MNumber::w(-2)), &opts), "w-2");
        assert_eq!(format_outcome(&EvalOutcome::Lim(LimitResult::NoLimit), &opts), "no-limit");
        let ascii = FormatOptions { ascii: true, ..opts };
        assert_eq!(format_outcome(&EvalOutcome::Card(CardValue::Kappa), &ascii), "kappa");
    }

    #[test]
    fn json_examples() {
        assert_eq!(
            format_outcome(&EvalOutcome::Lim(LimitResult::Apeiron), &json_opts()),
            r#"{"kind":"limit","value":"apeiron"}"#
        );
        assert_eq!(
            format_outcome(&EvalOutcome::Number(MNumber::lmk(3, 1)), &json_opts()),
            r#"{"kind":"number","value":"o_3+1"}"#
        );
        assert_eq!(
            format_outcome(
                &EvalOutcome::Cmp {
                    op: CmpOp::Equivalent,
                    relation: Comparison::EquivalentNotEqual
                },
                &json_opts()
            ),
            r#"{"holds":true,"kind":"comparison","op":"~","value":"equivalent"}"#
        );
    }

    #[test]
    fn table_alignment() {
        let rows = vec![("K".to_string(), 0), ("b_K-1".to_string(), 6)];
        assert_eq!(
            format_outcome(&EvalOutcome::Table(rows), &FormatOptions::default()),
            "K      0\nb_K-1  6"
        );
    }
}
