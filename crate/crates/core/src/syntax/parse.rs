use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::chebyshev::{s_poly, Basis, PolyX};
use crate::exactcoeff::{LaurentT, Rational};
use crate::quantum_torus::{e_monomial, QTorusPoly};
use crate::torus_skein::{jw_to_t, TorusSkein};
use crate::trefoil_module::ModuleElt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Lex,
    Syntax,
    Type,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ErrorKind,
    pub pos: Pos,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ErrorKind::Lex => "lexical error",
            ErrorKind::Syntax => "syntax error",
            ErrorKind::Type => "type error",
        };
        write!(f, "{}: {kind}: {}", self.pos, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(kind: ErrorKind, pos: Pos, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        kind,
        pos,
        message: message.into(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(Rational),
    Name(String),
    Caret,
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Star,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(r) => format!("number '{r}'"),
        Tok::Name(n) => format!("'{n}'"),
        Tok::Caret => "'^'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::Comma => "','".into(),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::End => "end of input".into(),
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
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
        let single = match c {
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, pos));
            i += 1;
            col += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let num: BigInt = chars[start..i].iter().collect::<String>().parse().unwrap();
            let mut value = Rational::from_integer(num);
            if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                let s2 = i + 1;
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let den: BigInt = chars[s2..i].iter().collect::<String>().parse().unwrap();
                if den.is_zero() {
                    return err(ErrorKind::Lex, pos, "zero denominator in rational literal");
                }
                value /= Rational::from_integer(den);
            }
            col += i - start;
            out.push((Tok::Num(value), pos));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            col += i - start;
            out.push((Tok::Name(chars[start..i].iter().collect()), pos));
            continue;
        }
        return err(ErrorKind::Lex, pos, format!("unexpected character '{c}'"));
    }
    out.push((Tok::End, Pos { line, col }));
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Atom {
    T(i64, i64),
    JW(i64, i64),
    E(i64, i64),
    /// `S(n)`, a Chebyshev polynomial in `x`.
    S(i64),
    L(i64),
    M(i64),
    X(i64),
    Y,
    TPow(i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(Rational),
    Atom(Atom, Pos),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>, Pos),
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    i: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.i].0
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.i].clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok) -> Result<(), ParseError> {
        let (got, pos) = self.bump();
        if got == t {
            Ok(())
        } else {
            err(
                ErrorKind::Syntax,
                pos,
                format!("expected {}, found {}", describe(&t), describe(&got)),
            )
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        while *self.peek() == Tok::Star {
            let (_, pos) = self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?), pos);
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.primary()?)));
        }
        self.primary()
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        let neg = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let (t, pos) = self.bump();
        match t {
            Tok::Num(r) if r.is_integer() => {
                let v = r.to_integer().to_i64();
                match v {
                    Some(v) => Ok(if neg { -v } else { v }),
                    None => err(ErrorKind::Syntax, pos, "integer out of range"),
                }
            }
            other => err(
                ErrorKind::Syntax,
                pos,
                format!("expected an integer, found {}", describe(&other)),
            ),
        }
    }

    fn pair(&mut self) -> Result<(i64, i64), ParseError> {
        self.expect(Tok::LParen)?;
        let a = self.int()?;
        self.expect(Tok::Comma)?;
        let b = self.int()?;
        self.expect(Tok::RParen)?;
        Ok((a, b))
    }

    fn power(&mut self) -> Result<i64, ParseError> {
        if *self.peek() == Tok::Caret {
            self.bump();
            self.int()
        } else {
            Ok(1)
        }
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let (t, pos) = self.bump();
        match t {
            Tok::Num(r) => Ok(Expr::Num(r)),
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Name(name) => {
                let atom = match name.as_str() {
                    "T" => {
                        let (p, q) = self.pair()?;
                        Atom::T(p, q)
                    }
                    "JW" => {
                        let (p, q) = self.pair()?;
                        Atom::JW(p, q)
                    }
                    "e" => {
                        let (p, q) = self.pair()?;
                        Atom::E(p, q)
                    }
                    "S" => {
                        self.expect(Tok::LParen)?;
                        let n = self.int()?;
                        self.expect(Tok::RParen)?;
                        Atom::S(n)
                    }
                    "t" => Atom::TPow(self.power()?),
                    "l" => Atom::L(self.power()?),
                    "m" => Atom::M(self.power()?),
                    "x" => Atom::X(self.power()?),
                    "y" => Atom::Y,
                    other => {
                        return err(ErrorKind::Syntax, pos, format!("unknown name '{other}'"));
                    }
                };
                Ok(Expr::Atom(atom, pos))
            }
            other => err(
                ErrorKind::Syntax,
                pos,
                format!("expected a term, found {}", describe(&other)),
            ),
        }
    }
}

/// Parses an expression. Multiplication keeps the written order.
pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, i: 0 };
    let e = p.expr()?;
    let (t, pos) = p.bump();
    if t != Tok::End {
        return err(
            ErrorKind::Syntax,
            pos,
            format!("unexpected {} after expression", describe(&t)),
        );
    }
    Ok(e)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Skein,
    Torus,
    Module,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Skein => "torus-skein (T, JW)",
            Family::Torus => "quantum-torus (l, m, e)",
            Family::Module => "skein-module (x, y, S)",
        }
    }
}

/// A lowered expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Skein(TorusSkein),
    Torus(QTorusPoly),
    Module(ModuleElt),
}

impl Value {
    pub fn family(&self) -> Family {
        match self {
            Value::Skein(_) => Family::Skein,
            Value::Torus(_) => Family::Torus,
            Value::Module(_) => Family::Module,
        }
    }
}

#[derive(Clone, Debug)]
enum Val {
    Scalar(LaurentT),
    Skein(TorusSkein),
    Torus(QTorusPoly),
    /// `a(x) + b(x) y`, power basis.
    Module(PolyX, PolyX),
}

impl Val {
    fn family(&self) -> Option<Family> {
        match self {
            Val::Scalar(_) => None,
            Val::Skein(_) => Some(Family::Skein),
            Val::Torus(_) => Some(Family::Torus),
            Val::Module(..) => Some(Family::Module),
        }
    }

    fn promote(self, f: Family) -> Val {
        match (self, f) {
            (Val::Scalar(c), Family::Skein) => Val::Skein(TorusSkein::scalar(c)),
            (Val::Scalar(c), Family::Torus) => Val::Torus(QTorusPoly::constant(c)),
            (Val::Scalar(c), Family::Module) => Val::Module(
                PolyX::from_coeffs(Basis::Power, [(0, c)]),
                PolyX::zero(Basis::Power),
            ),
            (v, _) => v,
        }
    }
}

fn first_pos(e: &Expr) -> Pos {
    match e {
        Expr::Num(_) => Pos { line: 0, col: 0 },
        Expr::Atom(_, p) | Expr::Mul(_, _, p) => *p,
        Expr::Neg(a) | Expr::Add(a, _) | Expr::Sub(a, _) => first_pos(a),
    }
}

fn unify(a: Val, b: Val, pos: Pos) -> Result<(Val, Val), ParseError> {
    match (a.family(), b.family()) {
        (Some(x), Some(y)) if x != y => err(
            ErrorKind::Type,
            pos,
            format!("cannot combine {} with {}", x.name(), y.name()),
        ),
        (Some(x), None) => Ok((a, b.promote(x))),
        (None, Some(y)) => Ok((a.promote(y), b)),
        _ => Ok((a, b)),
    }
}

fn scale_val(v: Val, c: &LaurentT) -> Val {
    match v {
        Val::Scalar(a) => Val::Scalar(&a * c),
        Val::Skein(s) => Val::Skein(s.scale(c)),
        Val::Torus(f) => Val::Torus(f.scale(c)),
        Val::Module(a, b) => Val::Module(a.scale(c), b.scale(c)),
    }
}

fn atom_val(a: Atom, pos: Pos) -> Result<Val, ParseError> {
    let power = |p: PolyX| Val::Module(p, PolyX::zero(Basis::Power));
    Ok(match a {
        Atom::T(p, q) => Val::Skein(TorusSkein::t(p, q)),
        Atom::JW(p, q) => Val::Skein(jw_to_t(p, q)),
        Atom::E(p, q) => Val::Torus(e_monomial(p, q)),
        Atom::L(k) => Val::Torus(QTorusPoly::monomial(k, 0, LaurentT::one())),
        Atom::M(k) => Val::Torus(QTorusPoly::monomial(0, k, LaurentT::one())),
        Atom::TPow(k) => Val::Scalar(LaurentT::t_pow(k)),
        Atom::S(n) => power(s_poly(n)),
        Atom::X(k) => {
            if k < 0 {
                return err(ErrorKind::Type, pos, "x has no negative powers in the skein module");
            }
            power(PolyX::from_coeffs(Basis::Power, [(k as usize, LaurentT::one())]))
        }
        Atom::Y => Val::Module(
            PolyX::zero(Basis::Power),
            PolyX::from_coeffs(Basis::Power, [(0, LaurentT::one())]),
        ),
    })
}

fn eval(e: &Expr) -> Result<Val, ParseError> {
    match e {
        Expr::Num(r) => Ok(Val::Scalar(LaurentT::constant(r.clone()))),
        Expr::Atom(a, pos) => atom_val(*a, *pos),
        Expr::Neg(a) => Ok(scale_val(eval(a)?, &LaurentT::from_int(-1))),
        Expr::Add(a, b) | Expr::Sub(a, b) => {
            let pos = first_pos(b);
            let (x, y) = unify(eval(a)?, eval(b)?, pos)?;
            let y = if matches!(e, Expr::Sub(..)) {
                scale_val(y, &LaurentT::from_int(-1))
            } else {
                y
            };
            Ok(match (x, y) {
                (Val::Scalar(x), Val::Scalar(y)) => Val::Scalar(&x + &y),
                (Val::Skein(x), Val::Skein(y)) => Val::Skein(x.add(&y)),
                (Val::Torus(x), Val::Torus(y)) => Val::Torus(x.add(&y)),
                (Val::Module(a, b), Val::Module(c, d)) => Val::Module(a.add(&c), b.add(&d)),
                _ => unreachable!(),
            })
        }
        Expr::Mul(a, b, pos) => {
            let x = eval(a)?;
            let y = eval(b)?;
            if let Val::Scalar(c) = &x {
                return Ok(scale_val(y, c));
            }
            if let Val::Scalar(c) = &y {
                return Ok(scale_val(x, c));
            }
            let (x, y) = unify(x, y, *pos)?;
            match (x, y) {
                (Val::Skein(x), Val::Skein(y)) => Ok(Val::Skein(x.mul(&y))),
                (Val::Torus(x), Val::Torus(y)) => Ok(Val::Torus(x.mul(&y))),
                (Val::Module(a, b), Val::Module(c, d)) => {
                    if !b.is_zero() && !d.is_zero() {
                        return err(
                            ErrorKind::Type,
                            *pos,
                            "y*y is not a basis element; only a(x) + b(x)*y is representable",
                        );
                    }
                    Ok(Val::Module(a.mul(&c), a.mul(&d).add(&b.mul(&c))))
                }
                _ => unreachable!(),
            }
        }
    }
}

fn finish(v: Val) -> Value {
    match v {
        Val::Scalar(c) => Value::Skein(TorusSkein::scalar(c)),
        Val::Skein(s) => Value::Skein(s),
        Val::Torus(f) => Value::Torus(f),
        Val::Module(a, b) => Value::Module(ModuleElt::from_polys(&a, &b)),
    }
}

/// Lowers to a value; pure scalars become multiples of the skein unit.
pub fn lower(e: &Expr) -> Result<Value, ParseError> {
    Ok(finish(eval(e)?))
}

/// Lowers into a given family; pure scalars are promoted into it.
pub fn lower_as(e: &Expr, family: Family) -> Result<Value, ParseError> {
    let v = eval(e)?;
    match v.family() {
        Some(f) if f != family => err(
            ErrorKind::Type,
            first_pos(e),
            format!("expected a {} expression, found {}", family.name(), f.name()),
        ),
        _ => Ok(finish(v.promote(family))),
    }
}

pub fn parse_value(src: &str) -> Result<Value, ParseError> {
    lower(&parse(src)?)
}

pub fn parse_as(src: &str, family: Family) -> Result<Value, ParseError> {
    lower_as(&parse(src)?, family)
}

pub fn parse_skein(src: &str) -> Result<TorusSkein, ParseError> {
    match parse_as(src, Family::Skein)? {
        Value::Skein(s) => Ok(s),
        _ => unreachable!(),
    }
}

pub fn parse_torus(src: &str) -> Result<QTorusPoly, ParseError> {
    match parse_as(src, Family::Torus)? {
        Value::Torus(f) => Ok(f),
        _ => unreachable!(),
    }
}

pub fn parse_module(src: &str) -> Result<ModuleElt, ParseError> {
    match parse_as(src, Family::Module)? {
        Value::Module(m) => Ok(m),
        _ => unreachable!(),
    }
}
