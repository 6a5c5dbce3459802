//! Generators of `J_{K_m,G}` and of the prime components `P_T`, ideal
//! membership and equality through reduced bases, and intersection by
//! elimination.

use serde::{Deserialize, Serialize};

use gbei_core::cutsets::prime_component_support;
use gbei_core::{SimpleGraph, VertexSet};

use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, normal_form, GbLimits};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{int, Poly, Variables};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Provenance {
    #[serde(rename = "J(K_m,G)")]
    BinomialEdge,
    #[serde(rename = "P_T")]
    PrimeComponent,
    #[serde(rename = "derived")]
    Derived,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialIdeal {
    pub vars: Variables,
    pub order: MonomialOrder,
    pub generators: Vec<Poly>,
    pub provenance: Provenance,
}

impl BinomialIdeal {
    pub fn new(vars: Variables, order: MonomialOrder, generators: Vec<Poly>, provenance: Provenance) -> Self {
        let generators = generators.iter().map(|g| g.reorder(&order)).collect();
        BinomialIdeal {
            vars,
            order,
            generators,
            provenance,
        }
    }

    /// One generator per line.
    pub fn to_text(&self) -> String {
        self.generators
            .iter()
            .map(|g| self.vars.poly_text(g) + "\n")
            .collect()
    }

    /// Inverse of [`to_text`](Self::to_text); blank lines and `#` comments are skipped.
    pub fn from_text(text: &str, vars: Variables, order: MonomialOrder) -> Result<Self> {
        let generators = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| vars.parse_poly(l, &order))
            .collect::<Result<Vec<_>>>()?;
        Ok(BinomialIdeal {
            vars,
            order,
            generators,
            provenance: Provenance::Derived,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.generators.iter().all(Poly::is_zero)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Self {
        BinomialIdeal::new(self.vars, order, self.generators.clone(), self.provenance)
    }

    /// Reduced Gröbner basis under the ideal's own order.
    pub fn groebner_basis(&self, limits: &GbLimits) -> Result<BinomialIdeal> {
        Ok(BinomialIdeal {
            vars: self.vars,
            order: self.order.clone(),
            generators: groebner_basis(&self.generators, &self.order, limits)?,
            provenance: Provenance::Derived,
        })
    }

    pub fn contains(&self, f: &Poly, limits: &GbLimits) -> Result<bool> {
        let gb = self.groebner_basis(limits)?;
        Ok(normal_form(&f.reorder(&self.order), &gb.generators, &self.order).is_zero())
    }

    /// Equal reduced bases under `self.order`.
    pub fn same_ideal(&self, other: &BinomialIdeal, limits: &GbLimits) -> Result<bool> {
        let a = self.groebner_basis(limits)?;
        let b = other.with_order(self.order.clone()).groebner_basis(limits)?;
        Ok(a.generators == b.generators)
    }
}

/// `x_{ik} x_{jl} - x_{il} x_{jk}`, scaled so the leading coefficient is `+1`.
pub fn minor(vars: Variables, i: usize, j: usize, k: usize, l: usize, order: &MonomialOrder) -> Poly {
    let x = |r, c| Monomial::var(vars.index(r, c));
    Poly::from_terms(
        [(int(1), x(i, k).mul(&x(j, l))), (int(-1), x(i, l).mul(&x(j, k)))],
        order,
    )
    .monic()
}

fn check_m(m: usize) -> Result<()> {
    if m < 2 {
        Err(gbei_core::Error::InvalidM(m).into())
    } else {
        Ok(())
    }
}

/// `J_{K_m,G}`: one 2-minor per row pair `i < j` and edge `k < l`.
pub fn build_ideal(m: usize, g: &SimpleGraph, order: &MonomialOrder) -> Result<BinomialIdeal> {
    check_m(m)?;
    let vars = Variables::new(m, g.n());
    check_order(vars, order)?;
    let mut generators = Vec::with_capacity(m * (m - 1) / 2 * g.edge_count());
    for i in 1..=m {
        for j in i + 1..=m {
            for &(k, l) in g.edges() {
                generators.push(minor(vars, i, j, k, l, order));
            }
        }
    }
    Ok(BinomialIdeal {
        vars,
        order: order.clone(),
        generators,
        provenance: Provenance::BinomialEdge,
    })
}

fn check_order(vars: Variables, order: &MonomialOrder) -> Result<()> {
    if order.nvars() != vars.count() {
        return Err(Error::Parse(format!(
            "order ranks {} variables, the ring has {}",
            order.nvars(),
            vars.count()
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorBlock {
    pub columns: VertexSet,
    pub minors: Vec<Poly>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeComponent {
    pub t: VertexSet,
    pub vars: Variables,
    pub order: MonomialOrder,
    /// The variables `x_{iv}` with `v` in `T`.
    pub linear_generators: Vec<Poly>,
    /// All 2-minors on the column set of each component of `G - T`.
    pub minor_blocks: Vec<MinorBlock>,
}

impl PrimeComponent {
    pub fn generator_count(&self) -> usize {
        self.linear_generators.len() + self.minor_blocks.iter().map(|b| b.minors.len()).sum::<usize>()
    }

    pub fn to_ideal(&self) -> BinomialIdeal {
        let generators = self
            .linear_generators
            .iter()
            .chain(self.minor_blocks.iter().flat_map(|b| &b.minors))
            .cloned()
            .collect();
        BinomialIdeal {
            vars: self.vars,
            order: self.order.clone(),
            generators,
            provenance: Provenance::PrimeComponent,
        }
    }
}

pub fn build_prime_component(
    m: usize,
    g: &SimpleGraph,
    t: VertexSet,
    order: &MonomialOrder,
) -> Result<PrimeComponent> {
    check_m(m)?;
    let vars = Variables::new(m, g.n());
    check_order(vars, order)?;
    let support = prime_component_support(g, t)?;
    let mut linear_generators = Vec::new();
    for i in 1..=m {
        for v in t.iter() {
            linear_generators.push(Poly::var(vars.index(i, v)).reorder(order));
        }
    }
    linear_generators.sort_by(|a, b| order.cmp(&b.leading_monomial().unwrap(), &a.leading_monomial().unwrap()));
    let minor_blocks = support
        .into_iter()
        .map(|columns| {
            let cols = columns.to_vec();
            let mut minors = Vec::new();
            for i in 1..=m {
                for j in i + 1..=m {
                    for (a, &k) in cols.iter().enumerate() {
                        for &l in &cols[a + 1..] {
                            minors.push(minor(vars, i, j, k, l, order));
                        }
                    }
                }
            }
            MinorBlock { columns, minors }
        })
        .collect();
    Ok(PrimeComponent {
        t,
        vars,
        order: order.clone(),
        linear_generators,
        minor_blocks,
    })
}

/// `a ∩ b` from the `t`-free part of a basis of `t a + (1 - t) b` under an order
/// that ranks `t` above every matrix variable.
pub fn intersect(a: &BinomialIdeal, b: &BinomialIdeal, limits: &GbLimits) -> Result<BinomialIdeal> {
    let order = a.order.clone();
    let t_index = order.nvars();
    let elim = order.eliminating_next();
    let t = Poly::var(t_index);
    let one_minus_t = Poly::constant(int(1)).sub(&t, &elim);
    let mut gens: Vec<Poly> = a.generators.iter().map(|f| f.reorder(&elim).mul(&t, &elim)).collect();
    gens.extend(
        b.generators
            .iter()
            .map(|f| f.reorder(&elim).mul(&one_minus_t, &elim)),
    );
    let gb = groebner_basis(&gens, &elim, limits)?;
    let free: Vec<Poly> = gb
        .into_iter()
        .filter(|p| p.terms().iter().all(|term| term.mono.exponent(t_index) == 0))
        .collect();
    let generators = groebner_basis(&free, &order, limits)?;
    Ok(BinomialIdeal {
        vars: a.vars,
        order,
        generators,
        provenance: Provenance::Derived,
    })
}

/// Intersection of a non-empty list of ideals, folded left to right.
pub fn intersect_all(ideals: &[BinomialIdeal], limits: &GbLimits) -> Result<BinomialIdeal> {
    let (first, rest) = ideals.split_first().expect("at least one ideal");
    let mut acc = first.groebner_basis(limits)?;
    for next in rest {
        acc = intersect(&acc, next, limits)?;
    }
    Ok(acc)
}
