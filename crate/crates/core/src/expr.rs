//! Closed-form expressions in `x`, parsed by recursive descent and expanded
//! into truncated series.
//!
//! Grammar, whitespace-insensitive:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' uint)?
//! atom   := uint | 'x' | '(' expr ')' | func '(' expr ')'
//! func   := 'exp' | 'sin' | 'cos' | 'log'
//! ```
//!
//! Unary minus is `0 - operand`. Binary operations on two constants fold
//! immediately, so `3/2` is a single rational constant.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::factorial_q;
use crate::rational::{display_rational, Rational};
use crate::series::{Series, SeriesError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Func {
    Exp,
    Sin,
    Cos,
    Log,
}

impl Func {
    pub fn name(self) -> &'static str {
        match self {
            Func::Exp => "exp",
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Log => "log",
        }
    }

    fn from_name(name: &str) -> Option<Func> {
        match name {
            "exp" => Some(Func::Exp),
            "sin" => Some(Func::Sin),
            "cos" => Some(Func::Cos),
            "log" => Some(Func::Log),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprNode {
    Const(Rational),
    Var,
    Add(Box<ExprNode>, Box<ExprNode>),
    Sub(Box<ExprNode>, Box<ExprNode>),
    Mul(Box<ExprNode>, Box<ExprNode>),
    Div(Box<ExprNode>, Box<ExprNode>),
    Pow(Box<ExprNode>, u32),
    Apply(Func, Box<ExprNode>),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExprError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("division by a series with zero constant term")]
    DivisionByNonUnit,
    #[error("{0}() applied where its argument has the wrong constant term")]
    TranscendentalAtNonzeroConstant(&'static str),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Num(text[start..i].parse().unwrap())));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                return Err(ExprError::Syntax {
                    offset: start,
                    message: format!("unexpected character {:?}", text[start..].chars().next().unwrap()),
                })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Syntax {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &Tok, what: &str) -> Result<(), ExprError> {
        if self.eat(tok) {
            Ok(())
        } else {
            self.error(format!("expected {what}"))
        }
    }

    fn expr(&mut self) -> Result<ExprNode, ExprError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                lhs = fold(ExprNode::Add(Box::new(lhs), Box::new(self.term()?)));
            } else if self.eat(&Tok::Minus) {
                lhs = fold(ExprNode::Sub(Box::new(lhs), Box::new(self.term()?)));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<ExprNode, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat(&Tok::Star) {
                lhs = fold(ExprNode::Mul(Box::new(lhs), Box::new(self.unary()?)));
            } else if self.eat(&Tok::Slash) {
                lhs = fold(ExprNode::Div(Box::new(lhs), Box::new(self.unary()?)));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<ExprNode, ExprError> {
        if self.eat(&Tok::Minus) {
            let operand = self.unary()?;
            return Ok(fold(ExprNode::Sub(
                Box::new(ExprNode::Const(Rational::zero())),
                Box::new(operand),
            )));
        }
        self.power()
    }

    fn power(&mut self) -> Result<ExprNode, ExprError> {
        let base = self.atom()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                let exp = u32::try_from(&n).or_else(|_| self.error("exponent too large"))?;
                self.pos += 1;
                Ok(fold(ExprNode::Pow(Box::new(base), exp)))
            }
            _ => self.error("expected a non-negative integer exponent"),
        }
    }

    fn atom(&mut self) -> Result<ExprNode, ExprError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(ExprNode::Const(Rational::from_integer(n)))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(&Tok::RParen, "')'")?;
                Ok(inner)
            }
            Some(Tok::Ident(name)) if name == "x" => {
                self.pos += 1;
                Ok(ExprNode::Var)
            }
            Some(Tok::Ident(name)) => {
                let Some(func) = Func::from_name(&name) else {
                    return self.error(format!("unknown identifier {name:?}"));
                };
                self.pos += 1;
                self.expect(&Tok::LParen, "'(' after function name")?;
                let arg = self.expr()?;
                self.expect(&Tok::RParen, "')'")?;
                Ok(ExprNode::Apply(func, Box::new(arg)))
            }
            Some(_) => self.error("expected a number, 'x', '(' or a function"),
            None => self.error("unexpected end of input"),
        }
    }
}

// Collapse an operation whose operands are all constants.
fn fold(node: ExprNode) -> ExprNode {
    use ExprNode::*;
    match &node {
        Add(a, b) | Sub(a, b) | Mul(a, b) | Div(a, b) => {
            let (Const(x), Const(y)) = (a.as_ref(), b.as_ref()) else {
                return node;
            };
            match node {
                Add(..) => Const(x + y),
                Sub(..) => Const(x - y),
                Mul(..) => Const(x * y),
                Div(..) if !y.is_zero() => Const(x / y),
                _ => node,
            }
        }
        Pow(a, e) => match a.as_ref() {
            Const(x) => Const(num_traits::pow(x.clone(), *e as usize)),
            _ => node,
        },
        _ => node,
    }
}

pub fn parse(text: &str) -> Result<ExprNode, ExprError> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
        end: text.len(),
    };
    let node = p.expr()?;
    if p.pos != p.toks.len() {
        return p.error("unexpected trailing input");
    }
    Ok(node)
}

impl fmt::Display for ExprNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ExprNode::*;
        match self {
            Const(c) if !c.is_negative() && c.denom().is_one() => write!(f, "{}", c.numer()),
            Const(c) => write!(f, "({})", display_rational(c)),
            Var => f.write_str("x"),
            Add(a, b) => write!(f, "({a} + {b})"),
            Sub(a, b) => write!(f, "({a} - {b})"),
            Mul(a, b) => write!(f, "({a} * {b})"),
            Div(a, b) => write!(f, "({a} / {b})"),
            Pow(a, e) if matches!(**a, Pow(..)) => write!(f, "({a})^{e}"),
            Pow(a, e) => write!(f, "{a}^{e}"),
            Apply(func, a) => write!(f, "{}({a})", func.name()),
        }
    }
}

/// Taylor coefficients (exponential convention) of the elementary functions
/// at 0; `log` is expanded as `log(1 + u)`.
fn taylor(func: Func, order: usize) -> Series {
    let coeffs = (0..=order)
        .map(|n| match func {
            Func::Exp => Rational::one(),
            Func::Sin if n % 2 == 1 => alternating(n / 2),
            Func::Cos if n % 2 == 0 => alternating(n / 2),
            Func::Log if n >= 1 => alternating(n - 1) * factorial_q(n - 1),
            _ => Rational::zero(),
        })
        .collect();
    Series::from_coeffs(coeffs)
}

fn alternating(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Expand `e` as a series of the given order.
pub fn eval_series(e: &ExprNode, order: usize) -> Result<Series, ExprError> {
    use ExprNode::*;
    Ok(match e {
        Const(c) => Series::constant(c.clone(), order),
        Var => Series::identity(order),
        Add(a, b) => eval_series(a, order)?.add(&eval_series(b, order)?)?,
        Sub(a, b) => eval_series(a, order)?.sub(&eval_series(b, order)?)?,
        Mul(a, b) => eval_series(a, order)?.mul(&eval_series(b, order)?)?,
        Div(a, b) => {
            let den = eval_series(b, order)?
                .reciprocal()
                .map_err(|_| ExprError::DivisionByNonUnit)?;
            eval_series(a, order)?.mul(&den)?
        }
        Pow(a, exp) => {
            let base = eval_series(a, order)?;
            let mut acc = Series::one(order);
            for _ in 0..*exp {
                acc = acc.mul(&base)?;
            }
            acc
        }
        Apply(func, a) => {
            let arg = eval_series(a, order)?;
            let inner = match func {
                Func::Log => {
                    if arg.coeff(0) != Rational::one() {
                        return Err(ExprError::TranscendentalAtNonzeroConstant(func.name()));
                    }
                    arg.sub(&Series::one(order))?
                }
                _ => {
                    if !arg.coeff(0).is_zero() {
                        return Err(ExprError::TranscendentalAtNonzeroConstant(func.name()));
                    }
                    arg
                }
            };
            taylor(*func, order).compose(&inner)?
        }
    })
}

/// `parse` followed by `eval_series`.
pub fn series_from_text(text: &str, order: usize) -> Result<Series, ExprError> {
    eval_series(&parse(text)?, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use ExprNode::*;

    fn b(e: ExprNode) -> Box<ExprNode> {
        Box::new(e)
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            parse("exp(x)-1").unwrap(),
            Sub(b(Apply(Func::Exp, b(Var))), b(Const(int(1))))
        );
        assert_eq!(
            parse("-x/(1+x)").unwrap(),
            Div(
                b(Sub(b(Const(int(0))), b(Var))),
                b(Add(b(Const(int(1))), b(Var)))
            )
        );
        assert_eq!(
            parse("exp(sin(x))-1").unwrap(),
            Sub(b(Apply(Func::Exp, b(Apply(Func::Sin, b(Var))))), b(Const(int(1))))
        );
    }

    #[test]
    fn constants_fold() {
        assert_eq!(parse("3/2").unwrap(), Const(rat(3, 2)));
        assert_eq!(parse(" - 3 / 2 ").unwrap(), Const(rat(-3, 2)));
        assert_eq!(parse("2^3*x").unwrap(), Mul(b(Const(int(8))), b(Var)));
        // division by a literal zero is left for evaluation to reject
        assert!(matches!(parse("1/0").unwrap(), Div(..)));
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(
            parse("x-x-x").unwrap(),
            Sub(b(Sub(b(Var), b(Var))), b(Var))
        );
        assert_eq!(
            parse("x+x*x^2").unwrap(),
            Add(b(Var), b(Mul(b(Var), b(Pow(b(Var), 2)))))
        );
        assert_eq!(
            parse("-x^2").unwrap(),
            Sub(b(Const(int(0))), b(Pow(b(Var), 2)))
        );
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        let err = |t: &str| match parse(t) {
            Err(ExprError::Syntax { offset, .. }) => offset,
            other => panic!("expected syntax error for {t:?}, got {other:?}"),
        };
        assert_eq!(err("x +"), 3);
        assert_eq!(err("tan(x)"), 0);
        assert_eq!(err("x ^ y"), 4);
        assert_eq!(err("(x"), 2);
        assert_eq!(err("x $"), 2);
        assert_eq!(err("x x"), 2);
    }

    #[test]
    fn eval_examples() {
        let e = series_from_text("exp(x)-1", 6).unwrap();
        assert_eq!(e, Series::exp_minus_one(6));
        let f = series_from_text("-x/(1+x)", 5).unwrap();
        let want: Vec<_> = [0, -1, 2, -6, 24, -120].iter().map(|&v| int(v)).collect();
        assert_eq!(f.coeffs(), &want[..]);
        let es = series_from_text("exp(sin(x))-1", 10).unwrap();
        let want: Vec<_> = [0, 1, 1, 0, -3, -8, -3, 56, 217, 64, -2951]
            .iter()
            .map(|&v| int(v))
            .collect();
        assert_eq!(es.coeffs(), &want[..]);
    }

    #[test]
    fn eval_errors() {
        assert_eq!(series_from_text("1/x", 4), Err(ExprError::DivisionByNonUnit));
        assert_eq!(series_from_text("1/0", 4), Err(ExprError::DivisionByNonUnit));
        assert_eq!(
            series_from_text("exp(1+x)", 4),
            Err(ExprError::TranscendentalAtNonzeroConstant("exp"))
        );
        assert_eq!(
            series_from_text("log(x)", 4),
            Err(ExprError::TranscendentalAtNonzeroConstant("log"))
        );
    }

    #[test]
    fn cos_and_log() {
        let c = series_from_text("cos(x)", 6).unwrap();
        assert_eq!(c.coeffs(), &[int(1), int(0), int(-1), int(0), int(1), int(0), int(-1)][..]);
        let l = series_from_text("log(1+x)", 5).unwrap();
        assert_eq!(l.coeffs(), &[int(0), int(1), int(-1), int(2), int(-6), int(24)][..]);
        let sq = series_from_text("sin(x)^2 + cos(x)^2", 8).unwrap();
        assert_eq!(sq, Series::one(8));
    }

    #[test]
    fn display_reparses() {
        for t in ["(x^2)^3", "-x/(1+x)", "exp(sin(x))-1", "3/2*x^2 - (-1/3)", "log(1 + x^2)"] {
            let ast = parse(t).unwrap();
            assert_eq!(parse(&ast.to_string()).unwrap(), ast, "{t}");
        }
    }
}
