//! Exact polynomial arithmetic over the rationals, Buchberger bases and a
//! Stanley-Reisner depth oracle for generalized binomial edge ideals.

pub mod complex;
pub mod error;
pub mod export;
pub mod groebner;
pub mod ideal;
pub mod initial;
pub mod linalg;
pub mod monomial;
pub mod oracle;
pub mod poly;

pub use error::{Error, Result};
pub use export::{export_cas, Dialect};
pub use groebner::{groebner_basis, normal_form, GbLimits};
pub use ideal::{build_ideal, build_prime_component, intersect, BinomialIdeal, PrimeComponent, Provenance};
pub use initial::{initial_ideal, InitialIdeal};
pub use monomial::{Monomial, MonomialOrder, OrderKind};
pub use oracle::{depth_oracle, DepthCertificate};
pub use poly::{Poly, Variables};
