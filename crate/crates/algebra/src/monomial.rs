//! Monomials over at most [`MAX_VARS`] variables and the lex / degrevlex term orders.
//!
//! Variable `x[i,j]` of an `m x n` matrix has index `(i - 1) * n + (j - 1)`
//! (row-major); index `m * n` is reserved for an elimination variable.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_VARS: usize = 32;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u8; MAX_VARS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0; MAX_VARS] };

    pub fn var(index: usize) -> Self {
        let mut m = Self::ONE;
        m.exps[index] = 1;
        m
    }

    pub fn from_exponents(exps: &[u8]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Self::ONE;
        m.exps[..exps.len()].copy_from_slice(exps);
        m
    }

    pub fn exponent(&self, index: usize) -> u8 {
        self.exps[index]
    }

    pub fn exponents(&self, nvars: usize) -> &[u8] {
        &self.exps[..nvars]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps == [0; MAX_VARS]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (a, b) in out.exps.iter_mut().zip(other.exps) {
            *a = a.checked_add(b).expect("exponent overflow");
        }
        out
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut out = *other;
        for (a, b) in out.exps.iter_mut().zip(self.exps) {
            *a -= b;
        }
        Some(out)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (a, b) in out.exps.iter_mut().zip(other.exps) {
            *a = (*a).max(b);
        }
        out
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Bitmask of the variables present.
    pub fn support(&self) -> u32 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { format!("v{i}") } else { format!("v{i}^{e}") })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    Degrevlex,
}

/// A term order: `ranking[0]` is the largest variable. With `eliminate = Some(t)`
/// the exponent of `t` is compared first and the ranked variables break ties.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub ranking: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub eliminate: Option<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, ranking: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; ranking.len()];
        for &v in &ranking {
            if v >= ranking.len() || seen[v] {
                return Err(Error::Parse(format!("ranking {ranking:?} is not a permutation")));
            }
            seen[v] = true;
        }
        if ranking.len() >= MAX_VARS {
            return Err(Error::CapExceeded {
                what: "variable count",
                value: ranking.len(),
                cap: MAX_VARS - 1,
            });
        }
        Ok(MonomialOrder {
            kind,
            ranking,
            eliminate: None,
        })
    }

    /// Row-major ranking `x[1,1] > x[1,2] > .. > x[m,n]`.
    pub fn row_major(kind: OrderKind, nvars: usize) -> Self {
        Self::new(kind, (0..nvars).collect()).expect("identity ranking")
    }

    /// Lex with row-major ranking: the diagonal term of every 2-minor leads.
    pub fn default_for(nvars: usize) -> Self {
        Self::row_major(OrderKind::Lex, nvars)
    }

    pub fn nvars(&self) -> usize {
        self.ranking.len()
    }

    /// Block order with the extra variable `nvars()` above everything else.
    pub fn eliminating_next(&self) -> Self {
        MonomialOrder {
            kind: self.kind,
            ranking: self.ranking.clone(),
            eliminate: Some(self.nvars()),
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if let Some(t) = self.eliminate {
            let o = a.exps[t].cmp(&b.exps[t]);
            if o != Ordering::Equal {
                return o;
            }
        }
        match self.kind {
            OrderKind::Lex => {
                for &v in &self.ranking {
                    let o = a.exps[v].cmp(&b.exps[v]);
                    if o != Ordering::Equal {
                        return o;
                    }
                }
                Ordering::Equal
            }
            OrderKind::Degrevlex => {
                let deg = |m: &Monomial| self.ranking.iter().map(|&v| m.exps[v] as u32).sum::<u32>();
                let o = deg(a).cmp(&deg(b));
                if o != Ordering::Equal {
                    return o;
                }
                for &v in self.ranking.iter().rev() {
                    let o = b.exps[v].cmp(&a.exps[v]);
                    if o != Ordering::Equal {
                        return o;
                    }
                }
                Ordering::Equal
            }
        }
    }

    /// Short label such as `lex(row-major)`.
    pub fn describe(&self) -> String {
        let kind = match self.kind {
            OrderKind::Lex => "lex",
            OrderKind::Degrevlex => "degrevlex",
        };
        let identity = self.ranking.iter().enumerate().all(|(i, &v)| i == v);
        if identity {
            format!("{kind}(row-major)")
        } else {
            format!("{kind}{:?}", self.ranking)
        }
    }
}
