//! Exact coefficient arithmetic: multivariate polynomials over the
//! rationals in named formal parameters.
//!
//! Every structure constant in the engine is a [`Scalar`]. The deformation
//! parameter (conventionally `z`) lives here as an ordinary polynomial
//! variable; arithmetic is exact and canonical forms are unique, so
//! equality is structural.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Exact rational coefficient, always in lowest terms with a positive
/// denominator (maintained by `num`).
pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// A product of parameter powers, sorted by parameter name. Exponents are
/// strictly positive; the empty monomial is the constant term.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Debug)]
pub struct Monomial(Vec<(String, u32)>);

impl Monomial {
    pub fn constant() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(name: &str, exp: u32) -> Self {
        if exp == 0 {
            Monomial::constant()
        } else {
            Monomial(vec![(name.to_owned(), exp)])
        }
    }

    pub fn is_constant(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(String, u32)] {
        &self.0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps: BTreeMap<&str, u32> = BTreeMap::new();
        for (name, e) in self.0.iter().chain(other.0.iter()) {
            *exps.entry(name).or_insert(0) += *e;
        }
        Monomial(exps.into_iter().map(|(n, e)| (n.to_owned(), e)).collect())
    }
}

/// Sparse multivariate polynomial with rational coefficients. No stored
/// coefficient is zero, so canonical forms compare structurally.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct Scalar {
    terms: BTreeMap<Monomial, Rational>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rational(Rational::from(BigInt::from(n)))
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(Monomial::constant(), r);
        }
        Scalar { terms }
    }

    /// The polynomial `name^exp` with coefficient one.
    pub fn param_pow(name: &str, exp: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(name, exp), Rational::one());
        Scalar { terms }
    }

    pub fn param(name: &str) -> Self {
        Scalar::param_pow(name, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::constant())
                .is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True if the polynomial is a single monomial (one term).
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    fn insert(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }
}

impl std::ops::Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert(m.clone(), -c.clone());
        }
        out
    }
}

impl std::ops::Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.insert(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl std::ops::Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl std::ops::Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl std::ops::Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn fmt_monomial(m: &Monomial) -> String {
    m.factors()
        .iter()
        .map(|(name, e)| {
            if *e == 1 {
                name.clone()
            } else {
                format!("{name}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for Scalar {
    /// Canonical rendering: terms in monomial order, joined with signed
    /// separators. Round-trips through [`parse`].
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let negative = c.is_negative();
            let abs = c.abs();
            let body = if m.is_constant() {
                fmt_rational(&abs)
            } else if abs.is_one() {
                fmt_monomial(m)
            } else {
                format!("{}*{}", fmt_rational(&abs), fmt_monomial(m))
            };
            if first {
                if negative {
                    write!(out, "-{body}")?;
                } else {
                    write!(out, "{body}")?;
                }
                first = false;
            } else if negative {
                write!(out, " - {body}")?;
            } else {
                write!(out, " + {body}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScalarParseError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown parameter `{name}` at position {pos}")]
    UnknownParameter { pos: usize, name: String },
}

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
    params: &'a [String],
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.input.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ScalarParseError> {
        Err(ScalarParseError::Syntax {
            pos: self.pos,
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<Scalar, ScalarParseError> {
        let mut negate = false;
        match self.peek() {
            Some(b'-') => {
                self.bump();
                negate = true;
            }
            Some(b'+') => {
                self.bump();
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc + t;
                }
                Some(b'-') => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc - t;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Scalar, ScalarParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.bump();
            let f = self.factor()?;
            acc = acc * f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Scalar, ScalarParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let numer = self.integer()?;
                if self.peek() == Some(b'/') {
                    self.bump();
                    let start = self.pos;
                    let denom = self.integer()?;
                    if denom.is_zero() {
                        return Err(ScalarParseError::Syntax {
                            pos: start,
                            message: "zero denominator".into(),
                        });
                    }
                    Ok(Scalar::from_rational(Rational::new(numer, denom)))
                } else {
                    Ok(Scalar::from_rational(Rational::from(numer)))
                }
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                let name = self.identifier();
                if !self.params.iter().any(|p| p == &name) {
                    return Err(ScalarParseError::UnknownParameter { pos: start, name });
                }
                let exp = if self.peek() == Some(b'^') {
                    self.bump();
                    let e = self.integer()?;
                    u32::try_from(&e).map_err(|_| ScalarParseError::Syntax {
                        pos: self.pos,
                        message: "exponent out of range".into(),
                    })?
                } else {
                    1
                };
                Ok(Scalar::param_pow(&name, exp))
            }
            Some(c) => self.error(format!("unexpected character `{}`", c as char)),
            None => self.error("unexpected end of input"),
        }
    }

    fn integer(&mut self) -> Result<BigInt, ScalarParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.error("expected an integer");
        }
        let text = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }

    fn identifier(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.input.len()
            && (self.input[self.pos].is_ascii_alphanumeric() || self.input[self.pos] == b'_')
        {
            self.pos += 1;
        }
        std::str::from_utf8(&self.input[start..self.pos])
            .unwrap()
            .to_owned()
    }
}

/// Parse a coefficient expression. Grammar: signed rational literals
/// (`-3/2`), parameter powers (`z^2`), products with `*`, sums with
/// `+`/`-`. Whitespace is insignificant. Parameters must be declared.
pub fn parse(text: &str, params: &[String]) -> Result<Scalar, ScalarParseError> {
    let mut p = Parser {
        input: text.as_bytes(),
        pos: 0,
        params,
    };
    let value = p.expr()?;
    if p.peek().is_some() {
        return p.error("trailing input");
    }
    Ok(value)
}
