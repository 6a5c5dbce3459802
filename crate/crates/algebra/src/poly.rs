//! Sparse polynomials with exact rational coefficients, terms kept in
//! strictly descending order under a [`MonomialOrder`].

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};

pub type Coeff = BigRational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Coeff,
    pub mono: Monomial,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    terms: Vec<Term>,
}

pub fn int(c: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(c))
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn constant(c: Coeff) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn term(c: Coeff, mono: Monomial) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly {
                terms: vec![Term { coeff: c, mono }],
            }
        }
    }

    pub fn var(index: usize) -> Self {
        Self::term(Coeff::one(), Monomial::var(index))
    }

    /// Collects like terms, drops zeros and sorts.
    pub fn from_terms(terms: impl IntoIterator<Item = (Coeff, Monomial)>, order: &MonomialOrder) -> Self {
        let mut ts: Vec<Term> = terms.into_iter().map(|(coeff, mono)| Term { coeff, mono }).collect();
        ts.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(ts.len());
        for t in ts {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => last.coeff += t.coeff,
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        Poly { terms: out }
    }

    /// Terms must already be nonzero and strictly descending.
    pub(crate) fn from_sorted(terms: Vec<Term>) -> Self {
        Poly { terms }
    }

    pub(crate) fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.mono)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Re-sorts under another order.
    pub fn reorder(&self, order: &MonomialOrder) -> Poly {
        Poly::from_terms(self.terms.iter().map(|t| (t.coeff.clone(), t.mono)), order)
    }

    pub fn scale(&self, c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff * c,
                    mono: t.mono,
                })
                .collect(),
        }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff * c,
                    mono: t.mono.mul(m),
                })
                .collect(),
        }
    }

    /// `self - c * m * g`, merging sorted term lists.
    pub fn sub_mul(&self, c: &Coeff, m: &Monomial, g: &Poly, order: &MonomialOrder) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|t| Term {
            coeff: -(&t.coeff * c),
            mono: t.mono.mul(m),
        });
        let mut next_b = b.next();
        loop {
            match (a.peek(), next_b.as_ref()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => {
                    out.push(next_b.take().unwrap());
                    next_b = b.next();
                }
                (Some(x), Some(y)) => match order.cmp(&x.mono, &y.mono) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => {
                        out.push(next_b.take().unwrap());
                        next_b = b.next();
                    }
                    Ordering::Equal => {
                        let x = a.next().unwrap();
                        let y = next_b.take().unwrap();
                        let coeff = &x.coeff + y.coeff;
                        if !coeff.is_zero() {
                            out.push(Term { coeff, mono: x.mono });
                        }
                        next_b = b.next();
                    }
                },
            }
        }
        Poly { terms: out }
    }

    pub fn add(&self, g: &Poly, order: &MonomialOrder) -> Poly {
        self.sub_mul(&int(-1), &Monomial::ONE, g, order)
    }

    pub fn sub(&self, g: &Poly, order: &MonomialOrder) -> Poly {
        self.sub_mul(&Coeff::one(), &Monomial::ONE, g, order)
    }

    pub fn mul(&self, g: &Poly, order: &MonomialOrder) -> Poly {
        let mut acc = Poly::zero();
        for t in &self.terms {
            acc = acc.sub_mul(&-t.coeff.clone(), &t.mono, g, order);
        }
        acc
    }

    /// Largest variable index used, plus one.
    pub fn var_span(&self) -> usize {
        self.terms
            .iter()
            .map(|t| 32 - t.mono.support().leading_zeros() as usize)
            .max()
            .unwrap_or(0)
    }
}

/// Names for the variables of an `m x n` matrix, with `t` for index `m * n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Variables {
    pub m: usize,
    pub n: usize,
}

impl Variables {
    pub fn new(m: usize, n: usize) -> Self {
        Variables { m, n }
    }

    pub fn count(&self) -> usize {
        self.m * self.n
    }

    /// 0-based index of `x[i,j]`.
    pub fn index(&self, i: usize, j: usize) -> usize {
        (i - 1) * self.n + (j - 1)
    }

    /// `(i, j)` of a matrix variable.
    pub fn position(&self, index: usize) -> (usize, usize) {
        (index / self.n + 1, index % self.n + 1)
    }

    pub fn name(&self, index: usize) -> String {
        if index == self.count() {
            "t".to_string()
        } else {
            let (i, j) = self.position(index);
            format!("x[{i},{j}]")
        }
    }

    pub fn monomial_text(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for v in 0..=self.count() {
            match m.exponent(v) {
                0 => {}
                1 => parts.push(self.name(v)),
                e => parts.push(format!("{}^{e}", self.name(v))),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// One line of the ideal text format, e.g. `+1*x[1,1]*x[2,2] -1*x[1,2]*x[2,1]`.
    pub fn poly_text(&self, p: &Poly) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        p.terms()
            .iter()
            .map(|t| {
                let sign = if t.coeff.is_negative() { '-' } else { '+' };
                let c = t.coeff.abs();
                if t.mono.is_one() {
                    format!("{sign}{c}")
                } else {
                    format!("{sign}{c}*{}", self.monomial_text(&t.mono))
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn parse_poly(&self, line: &str, order: &MonomialOrder) -> Result<Poly> {
        let line = line.trim();
        if line == "0" {
            return Ok(Poly::zero());
        }
        let mut terms = Vec::new();
        for tok in line.split_whitespace() {
            let (neg, body) = match tok.as_bytes().first() {
                Some(b'+') => (false, &tok[1..]),
                Some(b'-') => (true, &tok[1..]),
                _ => (false, tok),
            };
            let mut coeff = Coeff::one();
            let mut mono = Monomial::ONE;
            for (k, factor) in body.split('*').enumerate() {
                if k == 0 && factor.starts_with(|c: char| c.is_ascii_digit()) {
                    coeff = parse_rational(factor)?;
                    continue;
                }
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => (n, e.parse::<u8>().map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?),
                    None => (factor, 1),
                };
                let v = self.parse_var(name)?;
                for _ in 0..exp {
                    mono = mono.mul(&Monomial::var(v));
                }
            }
            if neg {
                coeff = -coeff;
            }
            terms.push((coeff, mono));
        }
        Ok(Poly::from_terms(terms, order))
    }

    fn parse_var(&self, name: &str) -> Result<usize> {
        if name == "t" {
            return Ok(self.count());
        }
        let inner = name
            .strip_prefix("x[")
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("bad variable {name:?}")))?;
        let (i, j) = inner
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("bad variable {name:?}")))?;
        let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad index in {name:?}")));
        let (i, j) = (parse(i)?, parse(j)?);
        if i == 0 || j == 0 || i > self.m || j > self.n {
            return Err(Error::Parse(format!("{name} outside the {}x{} matrix", self.m, self.n)));
        }
        Ok(self.index(i, j))
    }
}

fn parse_rational(s: &str) -> Result<Coeff> {
    let bad = || Error::Parse(format!("bad coefficient {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.parse().map_err(|_| bad())?;
            let q: BigInt = q.parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}
