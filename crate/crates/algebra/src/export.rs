//! Macaulay2 and Singular scripts that recompute depth, projective dimension and
//! the minimal primes of an ideal.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::ideal::BinomialIdeal;
use crate::poly::{Poly, Variables};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Dialect {
    Macaulay2,
    Singular,
}

impl FromStr for Dialect {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "macaulay2" | "m2" => Ok(Dialect::Macaulay2),
            "singular" => Ok(Dialect::Singular),
            other => Err(Error::Parse(format!("unknown dialect {other:?} (macaulay2, singular)"))),
        }
    }
}

impl fmt::Display for Dialect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Dialect::Macaulay2 => "macaulay2",
            Dialect::Singular => "singular",
        })
    }
}

fn poly_in(vars: Variables, p: &Poly, var: impl Fn(usize, usize) -> String) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, t) in p.terms().iter().enumerate() {
        let neg = t.coeff.is_negative();
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let c = t.coeff.abs();
        let mut factors = Vec::new();
        if !c.is_one() || t.mono.is_one() {
            factors.push(if c.is_integer() { c.to_string() } else { format!("({c})") });
        }
        for v in 0..vars.count() {
            let (i, j) = vars.position(v);
            match t.mono.exponent(v) {
                0 => {}
                1 => factors.push(var(i, j)),
                e => factors.push(format!("{}^{e}", var(i, j))),
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

/// Self-contained script; byte-stable for a given ideal.
pub fn export_cas(ideal: &BinomialIdeal, dialect: Dialect) -> String {
    let (m, n) = (ideal.vars.m, ideal.vars.n);
    let gens: Vec<&Poly> = ideal.generators.iter().filter(|g| !g.is_zero()).collect();
    match dialect {
        Dialect::Macaulay2 => {
            let var = |i, j| format!("x_({i},{j})");
            let body = if gens.is_empty() {
                "0_R".to_string()
            } else {
                gens.iter()
                    .map(|g| poly_in(ideal.vars, g, var))
                    .collect::<Vec<_>>()
                    .join(",\n  ")
            };
            format!(
                "-- m = {m}, n = {n}, {count} generators\n\
                 needsPackage \"Depth\";\n\
                 R = QQ[x_(1,1)..x_({m},{n})];\n\
                 I = ideal(\n  {body}\n);\n\
                 print depth(R/I);\n\
                 print pdim(comodule I);\n\
                 print minimalPrimes I;\n",
                count = gens.len()
            )
        }
        Dialect::Singular => {
            let var = |i, j| format!("x({i})({j})");
            let body = if gens.is_empty() {
                "0".to_string()
            } else {
                gens.iter()
                    .map(|g| poly_in(ideal.vars, g, var))
                    .collect::<Vec<_>>()
                    .join(",\n  ")
            };
            format!(
                "// m = {m}, n = {n}, {count} generators\n\
                 LIB \"homolog.lib\";\n\
                 LIB \"primdec.lib\";\n\
                 ring R = 0, (x(1..{m})(1..{n})), dp;\n\
                 ideal I =\n  {body};\n\
                 int d = depth(module(I));\n\
                 print(d);\n\
                 print(nvars(R) - d);\n\
                 print(minAssGTZ(I));\n\
                 quit;\n",
                count = gens.len()
            )
        }
    }
}
