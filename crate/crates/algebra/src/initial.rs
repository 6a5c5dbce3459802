//! Initial ideals: leading monomials of a reduced Gröbner basis.

use crate::error::Result;
use crate::groebner::GbLimits;
use crate::ideal::BinomialIdeal;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Variables;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InitialIdeal {
    pub vars: Variables,
    pub order: MonomialOrder,
    /// Minimal generators, largest first under `order`.
    pub generators: Vec<Monomial>,
    /// Every exponent is at most one.
    pub squarefree: bool,
}

impl InitialIdeal {
    pub fn from_monomials(vars: Variables, order: MonomialOrder, generators: Vec<Monomial>) -> Self {
        let squarefree = generators.iter().all(Monomial::is_squarefree);
        InitialIdeal {
            vars,
            order,
            generators,
            squarefree,
        }
    }

    pub fn to_text(&self) -> Vec<String> {
        self.generators.iter().map(|m| self.vars.monomial_text(m)).collect()
    }
}

/// Leading monomials of an ideal already in reduced-basis form.
pub fn initial_ideal_of_basis(basis: &BinomialIdeal) -> InitialIdeal {
    let generators = basis
        .generators
        .iter()
        .filter_map(|p| p.leading_monomial())
        .collect();
    InitialIdeal::from_monomials(basis.vars, basis.order.clone(), generators)
}

pub fn initial_ideal(ideal: &BinomialIdeal, limits: &GbLimits) -> Result<InitialIdeal> {
    Ok(initial_ideal_of_basis(&ideal.groebner_basis(limits)?))
}
