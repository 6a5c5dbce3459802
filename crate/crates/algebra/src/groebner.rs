//! Buchberger's algorithm with the coprime and chain criteria, normal pair
//! selection, and reduced bases.

use std::time::{Duration, Instant};

use gbei_core::Caps;

use crate::error::{check_cap, Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Poly, Term};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GbLimits {
    pub max_vars: usize,
    pub max_generators: usize,
    pub timeout: Duration,
}

impl GbLimits {
    pub fn from_caps(caps: &Caps) -> Self {
        GbLimits {
            max_vars: caps.gb_vars,
            max_generators: caps.gb_generators,
            timeout: caps.gb_timeout(),
        }
    }
}

impl Default for GbLimits {
    fn default() -> Self {
        Self::from_caps(&Caps::default())
    }
}

/// Fully reduced remainder of `f` modulo `basis`.
pub fn normal_form(f: &Poly, basis: &[Poly], order: &MonomialOrder) -> Poly {
    let mut p = f.clone();
    let mut rem: Vec<Term> = Vec::new();
    while let Some(lt) = p.leading_term().cloned() {
        match basis
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(&lt.mono)))
        {
            Some(g) => {
                let q = g.leading_monomial().unwrap().quotient_of(&lt.mono).unwrap();
                let c = &lt.coeff / g.leading_coeff().unwrap();
                p = p.sub_mul(&c, &q, g, order);
            }
            None => {
                let mut terms = p.into_terms();
                rem.push(terms.remove(0));
                p = Poly::from_sorted(terms);
            }
        }
    }
    Poly::from_sorted(rem)
}

fn s_polynomial(f: &Poly, g: &Poly, order: &MonomialOrder) -> Poly {
    let (a, b) = (f.leading_monomial().unwrap(), g.leading_monomial().unwrap());
    let l = a.lcm(&b);
    let fa = f.mul_term(&(f.leading_coeff().unwrap().recip()), &a.quotient_of(&l).unwrap());
    fa.sub_mul(&g.leading_coeff().unwrap().recip(), &b.quotient_of(&l).unwrap(), g, order)
}

/// The reduced Gröbner basis of the ideal generated by `gens`, monic and sorted
/// by leading monomial, largest first.
pub fn groebner_basis(gens: &[Poly], order: &MonomialOrder, limits: &GbLimits) -> Result<Vec<Poly>> {
    check_cap("variable count (Gröbner basis)", order.nvars(), limits.max_vars)?;
    check_cap("generator count (Gröbner basis)", gens.len(), limits.max_generators)?;
    let start = Instant::now();
    let mut basis: Vec<Poly> = gens
        .iter()
        .map(|g| g.reorder(order))
        .filter(|g| !g.is_zero())
        .map(|g| g.monic())
        .collect();
    let mut lms: Vec<Monomial> = basis.iter().map(|g| g.leading_monomial().unwrap()).collect();
    let mut pairs: Vec<(usize, usize, Monomial)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j, lms[i].lcm(&lms[j])));
        }
    }
    while !pairs.is_empty() {
        if start.elapsed() > limits.timeout {
            return Err(Error::Timeout {
                secs: limits.timeout.as_secs(),
            });
        }
        let pick = (0..pairs.len())
            .min_by(|&x, &y| {
                let (a, b) = (&pairs[x], &pairs[y]);
                a.2.degree()
                    .cmp(&b.2.degree())
                    .then_with(|| order.cmp(&a.2, &b.2))
                    .then_with(|| (a.0, a.1).cmp(&(b.0, b.1)))
            })
            .unwrap();
        let (i, j, l) = pairs.swap_remove(pick);
        if lms[i].is_coprime(&lms[j]) {
            continue;
        }
        let pending = |a: usize, b: usize| {
            let (a, b) = (a.min(b), a.max(b));
            pairs.iter().any(|p| p.0 == a && p.1 == b)
        };
        let chain = (0..basis.len())
            .any(|k| k != i && k != j && lms[k].divides(&l) && !pending(i, k) && !pending(j, k));
        if chain {
            continue;
        }
        let r = normal_form(&s_polynomial(&basis[i], &basis[j], order), &basis, order);
        if r.is_zero() {
            continue;
        }
        let r = r.monic();
        let lm = r.leading_monomial().unwrap();
        let new = basis.len();
        pairs.extend(lms.iter().enumerate().map(|(k, l)| (k, new, l.lcm(&lm))));
        basis.push(r);
        lms.push(lm);
    }
    Ok(reduce_basis(basis, order))
}

/// Minimalizes and inter-reduces a Gröbner basis.
pub fn reduce_basis(basis: Vec<Poly>, order: &MonomialOrder) -> Vec<Poly> {
    let lms: Vec<Monomial> = basis.iter().map(|g| g.leading_monomial().unwrap()).collect();
    let keep: Vec<usize> = (0..basis.len())
        .filter(|&i| {
            !(0..basis.len()).any(|j| j != i && lms[j].divides(&lms[i]) && (lms[j] != lms[i] || j < i))
        })
        .collect();
    let minimal: Vec<Poly> = keep.iter().map(|&i| basis[i].clone()).collect();
    let mut reduced: Vec<Poly> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Poly> = minimal
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, p)| p.clone())
                .collect();
            normal_form(&minimal[i], &others, order).monic()
        })
        .collect();
    reduced.sort_by(|a, b| order.cmp(&b.leading_monomial().unwrap(), &a.leading_monomial().unwrap()));
    reduced
}

/// Every S-polynomial reduces to zero.
pub fn is_groebner_basis(basis: &[Poly], order: &MonomialOrder) -> bool {
    (0..basis.len()).all(|j| {
        (0..j).all(|i| normal_form(&s_polynomial(&basis[i], &basis[j], order), basis, order).is_zero())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::OrderKind;
    use crate::poly::{int, Variables};
    use proptest::prelude::*;

    fn parse(lines: &[&str], v: Variables, ord: &MonomialOrder) -> Vec<Poly> {
        lines.iter().map(|l| v.parse_poly(l, ord).unwrap()).collect()
    }

    #[test]
    fn generic_2x3_minors_form_a_basis() {
        let v = Variables::new(2, 3);
        let ord = MonomialOrder::row_major(OrderKind::Degrevlex, 6);
        let minors = parse(
            &[
                "+1*x[1,1]*x[2,2] -1*x[1,2]*x[2,1]",
                "+1*x[1,1]*x[2,3] -1*x[1,3]*x[2,1]",
                "+1*x[1,2]*x[2,3] -1*x[1,3]*x[2,2]",
            ],
            v,
            &ord,
        );
        assert!(is_groebner_basis(&minors, &ord));
        let gb = groebner_basis(&minors, &ord, &GbLimits::default()).unwrap();
        assert_eq!(gb.len(), 3);
        let mut expect: Vec<Poly> = minors.iter().map(Poly::monic).collect();
        expect.sort_by(|a, b| ord.cmp(&b.leading_monomial().unwrap(), &a.leading_monomial().unwrap()));
        assert_eq!(gb, expect);
    }

    #[test]
    fn principal_ideal_is_monic_generator() {
        let v = Variables::new(1, 2);
        let ord = MonomialOrder::default_for(2);
        let f = v.parse_poly("+3*x[1,1]^2 -6*x[1,2]", &ord).unwrap();
        let gb = groebner_basis(std::slice::from_ref(&f), &ord, &GbLimits::default()).unwrap();
        assert_eq!(gb, vec![f.monic()]);
    }

    #[test]
    fn path_ideal_is_a_fixed_point() {
        let v = Variables::new(2, 3);
        for ord in [MonomialOrder::default_for(6), MonomialOrder::row_major(OrderKind::Degrevlex, 6)] {
            let gens = parse(
                &["+1*x[1,1]*x[2,2] -1*x[1,2]*x[2,1]", "+1*x[1,2]*x[2,3] -1*x[1,3]*x[2,2]"],
                v,
                &ord,
            );
            let gb = groebner_basis(&gens, &ord, &GbLimits::default()).unwrap();
            // coprime leading terms: the two minors already form the basis
            assert_eq!(gb.len(), 2);
            assert!(is_groebner_basis(&gb, &ord));
            assert_eq!(groebner_basis(&gb, &ord, &GbLimits::default()).unwrap(), gb);
            let mut rev = gens.clone();
            rev.reverse();
            assert_eq!(groebner_basis(&rev, &ord, &GbLimits::default()).unwrap(), gb);
        }
    }

    #[test]
    fn textbook_example() {
        // <x^2 - y, x^3 - x> over lex x > y: reduced basis {x^2 - y, xy - x, y^2 - y}
        let v = Variables::new(1, 2);
        let ord = MonomialOrder::default_for(2);
        let gens = parse(&["+1*x[1,1]^2 -1*x[1,2]", "+1*x[1,1]^3 -1*x[1,1]"], v, &ord);
        let gb = groebner_basis(&gens, &ord, &GbLimits::default()).unwrap();
        let text: Vec<String> = gb.iter().map(|p| v.poly_text(p)).collect();
        assert_eq!(
            text,
            vec!["+1*x[1,1]^2 -1*x[1,2]", "+1*x[1,1]*x[1,2] -1*x[1,1]", "+1*x[1,2]^2 -1*x[1,2]"]
        );
    }

    #[test]
    fn caps_and_timeout() {
        let ord = MonomialOrder::default_for(20);
        let limits = GbLimits::default();
        assert!(matches!(groebner_basis(&[], &ord, &limits), Err(Error::CapExceeded { .. })));
        let ord = MonomialOrder::default_for(2);
        let gens = vec![Poly::var(0); 61];
        assert!(matches!(groebner_basis(&gens, &ord, &limits), Err(Error::CapExceeded { .. })));
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        proptest::collection::vec((-2i64..3, proptest::collection::vec(0u8..3, 3)), 0..4).prop_map(|ts| {
            let ord = MonomialOrder::default_for(3);
            Poly::from_terms(ts.into_iter().map(|(c, e)| (int(c), Monomial::from_exponents(&e))), &ord)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn normal_form_is_linear(f in arb_poly(), g in arb_poly(), a in arb_poly(), b in arb_poly()) {
            let ord = MonomialOrder::default_for(3);
            let gb = groebner_basis(&[a, b], &ord, &GbLimits::default()).unwrap();
            let lhs = normal_form(&f.add(&g, &ord), &gb, &ord);
            let rhs = normal_form(&normal_form(&f, &gb, &ord).add(&normal_form(&g, &gb, &ord), &ord), &gb, &ord);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn reduced_basis_ignores_generator_order(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            let ord = MonomialOrder::row_major(OrderKind::Degrevlex, 3);
            let l = GbLimits::default();
            let x = groebner_basis(&[a.clone(), b.clone(), c.clone()], &ord, &l).unwrap();
            let y = groebner_basis(&[c, a, b], &ord, &l).unwrap();
            prop_assert!(is_groebner_basis(&x, &ord));
            prop_assert_eq!(x, y);
        }
    }
}
