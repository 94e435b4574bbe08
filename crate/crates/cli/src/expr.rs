//! Expression language for `csg eval`.
//!
//! ```text
//! expr  := call | perm | braid
//! call  := op "(" expr ("," expr)* ")"
//! op    := mul | inv | d_<k> | s_<k> | sL | sR | boxplus | circ_<k>
//! perm  := "[" n ("," n)* "]"
//! braid := (letter+ | "e") "@" n        letter := s<k> | s<k>^-1
//! ```

use std::fmt;

use csg_core::operad::circ_set;
use csg_core::{boxplus, braids_equal, BraidWord, CsgElement, CsgError, Perm};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExprError {
    pub position: usize,
    pub message: String,
}

impl ExprError {
    fn new(position: usize, message: impl Into<String>) -> Self {
        ExprError {
            position,
            message: message.into(),
        }
    }

    /// The message with a caret under the offending column.
    pub fn render(&self, source: &str) -> String {
        format!("{source}\n{}^\n{self}", " ".repeat(self.position))
    }
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ExprError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Op {
    Mul,
    Inv,
    Face(usize),
    Degeneracy(usize),
    SLeft,
    SRight,
    Boxplus,
    Circ(usize),
}

impl Op {
    fn arity(&self) -> usize {
        match self {
            Op::Mul | Op::Boxplus | Op::Circ(_) => 2,
            _ => 1,
        }
    }

    fn name(&self) -> String {
        match self {
            Op::Mul => "mul".into(),
            Op::Inv => "inv".into(),
            Op::Face(i) => format!("d_{i}"),
            Op::Degeneracy(i) => format!("s_{i}"),
            Op::SLeft => "sL".into(),
            Op::SRight => "sR".into(),
            Op::Boxplus => "boxplus".into(),
            Op::Circ(i) => format!("circ_{i}"),
        }
    }
}

#[derive(Debug, Clone)]
enum Expr {
    Perm(Perm),
    Braid(BraidWord),
    Call {
        op: Op,
        position: usize,
        args: Vec<(usize, Expr)>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Perm(Perm),
    Braid(BraidWord),
}

/// Printable result of an evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Evaluation {
    pub instance: &'static str,
    pub value: String,
    pub level: usize,
    pub perm: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hash: Option<String>,
    pub identity: bool,
}

impl Value {
    pub fn describe(&self) -> Result<Evaluation, CsgError> {
        Ok(match self {
            Value::Perm(p) => Evaluation {
                instance: Perm::INSTANCE,
                value: p.to_string(),
                level: p.level(),
                perm: p.to_string(),
                hash: None,
                identity: p.is_identity(),
            },
            Value::Braid(b) => Evaluation {
                instance: BraidWord::INSTANCE,
                value: b.to_string(),
                level: b.level(),
                perm: b.permutation().to_string(),
                hash: Some(format!("{:016x}", b.braid_hash())),
                identity: braids_equal(b, &BraidWord::identity(b.level()))?,
            },
        })
    }
}

impl Evaluation {
    pub fn to_text(&self) -> String {
        match self.hash {
            None => format!("{}\n", self.value),
            Some(ref hash) => format!(
                "{}\nperm: {}\nhash: {hash}\nidentity: {}\n",
                self.value, self.perm, self.identity
            ),
        }
    }
}

pub fn evaluate(source: &str) -> Result<Value, ExprError> {
    let mut parser = Parser {
        src: source,
        pos: 0,
    };
    let expr = parser.expr()?;
    parser.skip_ws();
    if parser.pos < source.len() {
        return Err(ExprError::new(parser.pos, "unexpected trailing input"));
    }
    eval(&expr)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn expect(&mut self, c: char) -> Result<(), ExprError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(ExprError::new(self.pos, format!("expected `{c}`")))
        }
    }

    fn number(&mut self) -> Result<usize, ExprError> {
        let digits: String = self
            .rest()
            .chars()
            .take_while(char::is_ascii_digit)
            .collect();
        if digits.is_empty() {
            return Err(ExprError::new(self.pos, "expected a number"));
        }
        let start = self.pos;
        self.pos += digits.len();
        digits
            .parse()
            .map_err(|_| ExprError::new(start, "number too large"))
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            None => Err(ExprError::new(start, "expected an expression")),
            Some('[') => self.perm(),
            Some(_) if self.is_braid_start() => self.braid(),
            Some(_) => self.call(),
        }
    }

    fn is_braid_start(&self) -> bool {
        let mut chars = self.rest().chars();
        match chars.next() {
            Some('s') => chars.next().is_some_and(|c| c.is_ascii_digit()),
            Some('e') => self.rest()[1..].trim_start().starts_with('@'),
            _ => false,
        }
    }

    fn perm(&mut self) -> Result<Expr, ExprError> {
        let start = self.pos;
        let len = self
            .rest()
            .find(']')
            .ok_or_else(|| ExprError::new(start, "unclosed `[`"))?;
        let text = &self.rest()[..=len];
        let perm = text.parse::<Perm>().map_err(|e| shift(e, start))?;
        self.pos += len + 1;
        Ok(Expr::Perm(perm))
    }

    fn braid(&mut self) -> Result<Expr, ExprError> {
        let start = self.pos;
        let at = self
            .rest()
            .find('@')
            .ok_or_else(|| ExprError::new(start, "braid word needs `@level`"))?;
        let src = self.src;
        let word = &src[start..start + at];
        self.pos += at + 1;
        let level = self.number()?;
        BraidWord::parse(word, level)
            .map(Expr::Braid)
            .map_err(|e| shift(e, start))
    }

    fn call(&mut self) -> Result<Expr, ExprError> {
        let position = self.pos;
        let name: String = self
            .rest()
            .chars()
            .take_while(|c| c.is_ascii_alphanumeric() || *c == '_')
            .collect();
        if name.is_empty() {
            return Err(ExprError::new(
                position,
                "expected an operator, `[` or a braid word",
            ));
        }
        let indexed = |prefix: &str| -> Result<Option<usize>, ExprError> {
            match name.strip_prefix(prefix) {
                None => Ok(None),
                Some(k) => k
                    .parse()
                    .map(Some)
                    .map_err(|_| ExprError::new(position + prefix.len(), "expected an index")),
            }
        };
        let op = match name.as_str() {
            "mul" => Op::Mul,
            "inv" => Op::Inv,
            "sL" => Op::SLeft,
            "sR" => Op::SRight,
            "boxplus" => Op::Boxplus,
            _ => {
                if let Some(i) = indexed("d_")? {
                    Op::Face(i)
                } else if let Some(i) = indexed("s_")? {
                    Op::Degeneracy(i)
                } else if let Some(i) = indexed("circ_")? {
                    Op::Circ(i)
                } else {
                    return Err(ExprError::new(
                        position,
                        format!("unknown operator `{name}`"),
                    ));
                }
            }
        };
        self.pos += name.len();
        self.expect('(')?;
        let mut args = Vec::new();
        loop {
            self.skip_ws();
            let at = self.pos;
            args.push((at, self.expr()?));
            self.skip_ws();
            match self.peek() {
                Some(',') => self.pos += 1,
                Some(')') => {
                    self.pos += 1;
                    break;
                }
                _ => return Err(ExprError::new(self.pos, "expected `,` or `)`")),
            }
        }
        if args.len() != op.arity() {
            return Err(ExprError::new(
                position,
                format!(
                    "`{}` takes {} argument(s), got {}",
                    op.name(),
                    op.arity(),
                    args.len()
                ),
            ));
        }
        Ok(Expr::Call { op, position, args })
    }
}

fn shift(e: CsgError, offset: usize) -> ExprError {
    match e {
        CsgError::Parse { position, message } => ExprError::new(offset + position, message),
        other => ExprError::new(offset, other.to_string()),
    }
}

fn eval(expr: &Expr) -> Result<Value, ExprError> {
    match expr {
        Expr::Perm(p) => Ok(Value::Perm(p.clone())),
        Expr::Braid(b) => Ok(Value::Braid(b.clone())),
        Expr::Call { op, position, args } => {
            let values = args
                .iter()
                .map(|(_, e)| eval(e))
                .collect::<Result<Vec<_>, _>>()?;
            let fail = |e: CsgError| ExprError::new(*position, format!("{}: {e}", op.name()));
            match values.as_slice() {
                [Value::Perm(a)] => apply(op, a, None).map(Value::Perm).map_err(fail),
                [Value::Braid(a)] => apply(op, a, None).map(Value::Braid).map_err(fail),
                [Value::Perm(a), Value::Perm(b)] => {
                    apply(op, a, Some(b)).map(Value::Perm).map_err(fail)
                }
                [Value::Braid(a), Value::Braid(b)] => {
                    apply(op, a, Some(b)).map(Value::Braid).map_err(fail)
                }
                _ => Err(ExprError::new(
                    args.get(1).map_or(*position, |a| a.0),
                    format!("`{}` mixes a permutation and a braid", op.name()),
                )),
            }
        }
    }
}

fn apply<G: CsgElement>(op: &Op, a: &G, b: Option<&G>) -> Result<G, CsgError> {
    let b = || b.expect("arity checked by the parser");
    match op {
        Op::Mul => a.mul(b()),
        Op::Inv => Ok(a.inv()),
        Op::Face(i) => a.face(*i),
        Op::Degeneracy(i) => a.degeneracy(*i),
        Op::SLeft => Ok(a.s_left()),
        Op::SRight => Ok(a.s_right()),
        Op::Boxplus => Ok(boxplus(a, b())),
        Op::Circ(i) => circ_set(a, *i, b()),
    }
}
