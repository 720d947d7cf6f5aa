//! Function-spec DSL.
//!
//! ```text
//! rational: num=[1,1] den=[2]             (1+z)/2, no poles on the closed disk
//! quotient: num=[1,1] den=[1,-1]          boundary poles allowed
//! coefficients: [1, 0.5i, -0.25+1e-3i]    Taylor coefficients from z⁰
//! generator: gevrey c=2 alpha=0.5         exp(-c·n^α)
//! generator: powerlaw s=2                 (n+1)^{-s}
//! generator: outerpower base=[0.5,-0.5] theta=3
//! blaschke: zeros=[0.5, -0.2+0.3i] rotation=1
//! ```
//!
//! Pythagorean pairs are written `b => SPEC`, `a => SPEC` or
//! `h => SPEC [; inner => blaschke: ...]`.

use std::fmt;

use hardy_core::factorization::{
    outer_power, pythagorean_factorize_sampled, pythagorean_mate, BlaschkeSpec, PythagoreanPair,
};
use hardy_core::spectral::synthesize;
use hardy_core::{BoundaryGrid, FourierSeries, Rational, Resolution, C64};

use crate::error::{LabError, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum Generator {
    Gevrey { c: f64, alpha: f64 },
    PowerLaw { s: f64 },
    OuterPower { base: Vec<C64>, theta: f64 },
}

#[derive(Clone, Debug, PartialEq)]
pub enum FunctionSpec {
    Rational {
        num: Vec<C64>,
        den: Vec<C64>,
    },
    /// Rational function whose poles may sit on the unit circle.
    Quotient {
        num: Vec<C64>,
        den: Vec<C64>,
    },
    Coefficients(Vec<C64>),
    Generator(Generator),
    Blaschke {
        zeros: Vec<C64>,
        rotation: C64,
    },
}

impl FunctionSpec {
    /// Taylor series truncated at `order`.
    pub fn series(&self, order: usize) -> Result<FourierSeries> {
        Ok(match self {
            Self::Rational { num, den } | Self::Quotient { num, den } => {
                Rational::new(num.clone(), den.clone())?.taylor(order)
            }
            Self::Coefficients(c) => FourierSeries::from_taylor(order, c),
            Self::Generator(Generator::Gevrey { c, alpha }) => {
                FourierSeries::from_fn(order, |n| real(if n < 0 { 0.0 } else { (-c * (n as f64).powf(*alpha)).exp() }))
            }
            Self::Generator(Generator::PowerLaw { s }) => {
                FourierSeries::from_fn(order, |n| real(if n < 0 { 0.0 } else { (n as f64 + 1.0).powf(-s) }))
            }
            Self::Generator(Generator::OuterPower { base, theta }) => {
                outer_power(&FourierSeries::from_taylor(order, base), *theta)?
            }
            Self::Blaschke { zeros, rotation } => BlaschkeSpec::new(zeros.clone(), *rotation)?.taylor(order),
        })
    }

    /// Boundary values on `samples` points. Closed forms are sampled
    /// exactly (infinite at boundary poles); the rest go through the series.
    pub fn boundary(&self, samples: usize, order: usize) -> Result<BoundaryGrid> {
        match self {
            Self::Rational { num, den } | Self::Quotient { num, den } => {
                Ok(Rational::new(num.clone(), den.clone())?.sample(samples)?)
            }
            Self::Blaschke { zeros, rotation } => {
                Ok(BoundaryGrid::new(BlaschkeSpec::new(zeros.clone(), *rotation)?.sample(samples))?)
            }
            _ => Ok(synthesize(&self.series(order)?, samples)?),
        }
    }

    /// Load-time checks at `samples` boundary points.
    pub fn validate(&self, samples: usize) -> Result<()> {
        match self {
            Self::Rational { num, den } => Rational::new(num.clone(), den.clone())?.check_closed_disk(samples)?,
            Self::Quotient { num, den } => Rational::new(num.clone(), den.clone())?.check_open_disk(samples)?,
            Self::Blaschke { zeros, rotation } => {
                BlaschkeSpec::new(zeros.clone(), *rotation)?;
            }
            _ => {}
        }
        Ok(())
    }
}

/// How a Pythagorean pair is specified.
#[derive(Clone, Debug, PartialEq)]
pub enum PairSpec {
    /// `b` given; `a` is its outer mate.
    B(FunctionSpec),
    /// `a` given; `b` is the outer mate of `a`.
    A(FunctionSpec),
    /// Quotient `h = I·g` with `g` given and `I` the optional Blaschke factor.
    H { h: FunctionSpec, inner: Option<FunctionSpec> },
}

impl PairSpec {
    pub fn pair(&self, res: Resolution, tol: f64) -> Result<PythagoreanPair> {
        match self {
            Self::B(b) => Ok(pythagorean_mate(&b.series(res.order)?, tol)?),
            Self::A(a) => {
                let a = a.series(res.order)?;
                let b = pythagorean_mate(&a, tol)?.a;
                Ok(PythagoreanPair::new(b, a, tol)?)
            }
            Self::H { h, inner } => {
                let inner = match inner {
                    Some(FunctionSpec::Blaschke { zeros, rotation }) => BlaschkeSpec::new(zeros.clone(), *rotation)?,
                    Some(_) => return Err(LabError::Config("inner factor must be a blaschke spec".into())),
                    None => BlaschkeSpec::default(),
                };
                let g = h.boundary(res.samples, res.order)?;
                let iv = inner.sample(res.samples);
                let hv = BoundaryGrid::new(
                    g.values().iter().zip(&iv).map(|(x, y)| if x.is_finite() { x * y } else { *x }).collect(),
                )?;
                Ok(pythagorean_factorize_sampled(&hv, &inner, res.order, tol)?.pair)
            }
        }
    }

    pub fn validate(&self, samples: usize) -> Result<()> {
        match self {
            Self::B(f) | Self::A(f) => f.validate(samples),
            Self::H { h, inner } => {
                h.validate(samples)?;
                inner.as_ref().map_or(Ok(()), |f| f.validate(samples))
            }
        }
    }
}

fn real(x: f64) -> C64 {
    C64::new(x, 0.0)
}

/// Parses and validates a function spec; pole checks use the default grid.
pub fn parse_function_spec(text: &str) -> Result<FunctionSpec> {
    let mut p = Parser::new(text)?;
    let spec = p.spec()?;
    p.end()?;
    Ok(spec)
}

pub fn parse_pair_spec(text: &str) -> Result<PairSpec> {
    let mut p = Parser::new(text)?;
    let (role, pos) = p.ident()?;
    p.expect(&Tok::Arrow)?;
    let spec = p.spec()?;
    let pair = match role.as_str() {
        "b" => PairSpec::B(spec),
        "a" => PairSpec::A(spec),
        "h" => {
            let inner = if p.eat(&Tok::Semi) {
                let (key, kpos) = p.ident()?;
                if key != "inner" {
                    return Err(kpos.error(format!("expected `inner`, found `{key}`")));
                }
                p.expect(&Tok::Arrow)?;
                let spos = p.pos();
                let inner = p.spec()?;
                if !matches!(inner, FunctionSpec::Blaschke { .. }) {
                    return Err(spos.error("inner factor must be a blaschke spec"));
                }
                Some(inner)
            } else {
                None
            };
            PairSpec::H { h: spec, inner }
        }
        other => return Err(pos.error(format!("unknown pair role `{other}`, expected b, a or h"))),
    };
    p.end()?;
    Ok(pair)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pos {
    line: usize,
    column: usize,
}

impl Pos {
    fn error(self, message: impl Into<String>) -> LabError {
        LabError::Parse { line: self.line, column: self.column, message: message.into() }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Num(f64),
    Imag(f64),
    LBracket,
    RBracket,
    Comma,
    Colon,
    Eq,
    Plus,
    Minus,
    Arrow,
    Semi,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Num(x) => write!(f, "number {x}"),
            Tok::Imag(x) => write!(f, "number {x}i"),
            Tok::LBracket => f.write_str("`[`"),
            Tok::RBracket => f.write_str("`]`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Colon => f.write_str("`:`"),
            Tok::Eq => f.write_str("`=`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Arrow => f.write_str("`=>`"),
            Tok::Semi => f.write_str("`;`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let ch = chars[i];
        let pos = Pos { line, column: col };
        let start = i;
        if ch == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if ch.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let tok = match ch {
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            ':' => Tok::Colon,
            ';' => Tok::Semi,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '=' if chars.get(i + 1) == Some(&'>') => {
                i += 1;
                Tok::Arrow
            }
            '=' => Tok::Eq,
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i + 1 < chars.len() && (chars[i + 1].is_ascii_alphanumeric() || chars[i + 1] == '_') {
                    i += 1;
                }
                Tok::Ident(chars[start..=i].iter().collect())
            }
            c if c.is_ascii_digit() || c == '.' => {
                let mut j = i;
                while j < chars.len() && (chars[j].is_ascii_digit() || chars[j] == '.') {
                    j += 1;
                }
                if j < chars.len() && (chars[j] == 'e' || chars[j] == 'E') {
                    let mut k = j + 1;
                    if k < chars.len() && (chars[k] == '+' || chars[k] == '-') {
                        k += 1;
                    }
                    if k < chars.len() && chars[k].is_ascii_digit() {
                        while k < chars.len() && chars[k].is_ascii_digit() {
                            k += 1;
                        }
                        j = k;
                    }
                }
                let literal: String = chars[i..j].iter().collect();
                let value: f64 = literal.parse().map_err(|_| pos.error(format!("malformed number `{literal}`")))?;
                i = j - 1;
                if chars.get(j) == Some(&'i') && !chars.get(j + 1).is_some_and(|c| c.is_ascii_alphanumeric()) {
                    i = j;
                    Tok::Imag(value)
                } else {
                    Tok::Num(value)
                }
            }
            other => return Err(pos.error(format!("unexpected character `{other}`"))),
        };
        i += 1;
        col += i - start;
        out.push((tok, pos));
    }
    out.push((Tok::End, Pos { line, column: col }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self> {
        Ok(Self { toks: lex(text)?, at: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &Tok) -> Result<()> {
        let (found, pos) = self.bump();
        if &found == tok {
            Ok(())
        } else {
            Err(pos.error(format!("expected {tok}, found {found}")))
        }
    }

    fn end(&mut self) -> Result<()> {
        let (found, pos) = self.bump();
        if found == Tok::End {
            Ok(())
        } else {
            Err(pos.error(format!("unexpected {found}")))
        }
    }

    fn ident(&mut self) -> Result<(String, Pos)> {
        match self.bump() {
            (Tok::Ident(s), pos) => Ok((s, pos)),
            (found, pos) => Err(pos.error(format!("expected a name, found {found}"))),
        }
    }

    /// `x`, `yi`, `x+yi` or `x-yi`, each with an optional leading sign.
    fn complex(&mut self) -> Result<C64> {
        let neg = self.eat(&Tok::Minus);
        if !neg {
            self.eat(&Tok::Plus);
        }
        let sign = if neg { -1.0 } else { 1.0 };
        match self.bump() {
            (Tok::Imag(y), _) => Ok(C64::new(0.0, sign * y)),
            (Tok::Num(x), _) => {
                let im_sign = match self.peek() {
                    Tok::Plus => 1.0,
                    Tok::Minus => -1.0,
                    _ => return Ok(C64::new(sign * x, 0.0)),
                };
                self.bump();
                match self.bump() {
                    (Tok::Imag(y), _) => Ok(C64::new(sign * x, im_sign * y)),
                    (found, pos) => Err(pos.error(format!("expected an imaginary part like `2i`, found {found}"))),
                }
            }
            (found, pos) => Err(pos.error(format!("expected a number, found {found}"))),
        }
    }

    fn list(&mut self) -> Result<Vec<C64>> {
        self.expect(&Tok::LBracket)?;
        let mut out = Vec::new();
        if self.eat(&Tok::RBracket) {
            return Ok(out);
        }
        loop {
            out.push(self.complex()?);
            if self.eat(&Tok::RBracket) {
                return Ok(out);
            }
            self.expect(&Tok::Comma)?;
        }
    }

    /// `key=value` pairs until the end of the spec.
    fn fields(&mut self, allowed: &[&str]) -> Result<Vec<(String, Pos, Value)>> {
        let mut out: Vec<(String, Pos, Value)> = Vec::new();
        while let Tok::Ident(_) = self.peek() {
            let (key, pos) = self.ident()?;
            if !allowed.contains(&key.as_str()) {
                return Err(pos.error(format!("unknown field `{key}`, expected one of {}", allowed.join(", "))));
            }
            if out.iter().any(|(k, _, _)| *k == key) {
                return Err(pos.error(format!("duplicate field `{key}`")));
            }
            self.expect(&Tok::Eq)?;
            let value =
                if *self.peek() == Tok::LBracket { Value::List(self.list()?) } else { Value::Scalar(self.complex()?) };
            out.push((key, pos, value));
        }
        Ok(out)
    }

    fn spec(&mut self) -> Result<FunctionSpec> {
        let (kind, kpos) = self.ident()?;
        self.expect(&Tok::Colon)?;
        let spec = match kind.as_str() {
            "rational" | "quotient" => {
                let fields = self.fields(&["num", "den"])?;
                let num = take_list(&fields, "num")?.unwrap_or_else(|| vec![real(1.0)]);
                let den = take_list(&fields, "den")?.unwrap_or_else(|| vec![real(1.0)]);
                let den_pos = fields.iter().find(|f| f.0 == "den").map_or(kpos, |f| f.1);
                let rational = Rational::new(num.clone(), den.clone()).map_err(|e| den_pos.error(e.to_string()))?;
                let samples = Resolution::default().samples;
                let check = if kind == "rational" {
                    rational.check_closed_disk(samples)
                } else {
                    rational.check_open_disk(samples)
                };
                check.map_err(|e| den_pos.error(e.to_string()))?;
                if kind == "rational" {
                    FunctionSpec::Rational { num, den }
                } else {
                    FunctionSpec::Quotient { num, den }
                }
            }
            "coefficients" => FunctionSpec::Coefficients(self.list()?),
            "generator" => {
                let (name, npos) = self.ident()?;
                match name.as_str() {
                    "gevrey" => {
                        let f = self.fields(&["c", "alpha"])?;
                        let c = require_real(&f, "c", npos)?;
                        let alpha = require_real(&f, "alpha", npos)?;
                        if !(c > 0.0) || !(alpha > 0.0 && alpha < 1.0) {
                            return Err(npos.error("gevrey needs c > 0 and 0 < alpha < 1"));
                        }
                        FunctionSpec::Generator(Generator::Gevrey { c, alpha })
                    }
                    "powerlaw" => {
                        let f = self.fields(&["s"])?;
                        let s = require_real(&f, "s", npos)?;
                        if !(s > 0.0) {
                            return Err(npos.error("powerlaw needs s > 0"));
                        }
                        FunctionSpec::Generator(Generator::PowerLaw { s })
                    }
                    "outerpower" => {
                        let f = self.fields(&["base", "theta"])?;
                        let base = take_list(&f, "base")?.ok_or_else(|| npos.error("missing field `base`"))?;
                        let theta = require_real(&f, "theta", npos)?;
                        if base.is_empty() || !(theta > 0.0) {
                            return Err(npos.error("outerpower needs a non-empty base and theta > 0"));
                        }
                        FunctionSpec::Generator(Generator::OuterPower { base, theta })
                    }
                    other => {
                        return Err(
                            npos.error(format!("unknown generator `{other}`, expected gevrey, powerlaw or outerpower"))
                        )
                    }
                }
            }
            "blaschke" => {
                let f = self.fields(&["zeros", "rotation"])?;
                let zeros = take_list(&f, "zeros")?.unwrap_or_default();
                let rotation = match f.iter().find(|x| x.0 == "rotation") {
                    Some((_, _, Value::Scalar(z))) => *z,
                    Some((_, pos, _)) => return Err(pos.error("`rotation` takes a single number")),
                    None => real(1.0),
                };
                BlaschkeSpec::new(zeros.clone(), rotation).map_err(|e| kpos.error(e.to_string()))?;
                FunctionSpec::Blaschke { zeros, rotation }
            }
            other => {
                return Err(kpos.error(format!(
                    "unknown spec kind `{other}`, expected rational, quotient, coefficients, generator or blaschke"
                )))
            }
        };
        Ok(spec)
    }
}

enum Value {
    Scalar(C64),
    List(Vec<C64>),
}

fn take_list(fields: &[(String, Pos, Value)], key: &str) -> Result<Option<Vec<C64>>> {
    match fields.iter().find(|f| f.0 == key) {
        Some((_, _, Value::List(v))) => Ok(Some(v.clone())),
        Some((_, pos, Value::Scalar(_))) => Err(pos.error(format!("`{key}` takes a list like [1, 2]"))),
        None => Ok(None),
    }
}

fn require_real(fields: &[(String, Pos, Value)], key: &str, at: Pos) -> Result<f64> {
    match fields.iter().find(|f| f.0 == key) {
        Some((_, _, Value::Scalar(z))) if z.im == 0.0 => Ok(z.re),
        Some((_, pos, _)) => Err(pos.error(format!("`{key}` takes a real number"))),
        None => Err(at.error(format!("missing field `{key}`"))),
    }
}
