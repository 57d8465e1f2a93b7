//! Exact engines for ideals generated by minors of a generic matrix.
//!
//! The crate decides, for a selection of minors, whether the quotient ring
//! has a linear resolution, whether the selection is a full `2 x l` block,
//! whether the product on Koszul homology is trivial, and whether the ring
//! attains the Golod bound on its Poincare series up to a fixed degree.
//!
//! Everything is exact and runs on `core` + `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod betti;
pub mod error;
pub mod field;
pub mod golod;
pub mod grading;
pub mod groebner;
pub mod ideal;
pub mod koszul;
pub mod linalg;
pub mod module;
pub mod monomial;
pub mod poly;
pub mod ring;
pub mod series;
pub mod subdet;

pub use betti::{hilbert_certificate, linear_resolution_check, minimal_resolution, BettiTable};
pub use error::{Error, Result};
pub use field::{Field, Fp, Rational, F32003, QQ};
pub use golod::{golod_check, GolodHints, GolodOptions, GolodReport, GolodVerdict, Reduction};
pub use grading::{multidegree, DegreeVector, Grading, GradingMode, Multidegree};
pub use groebner::{buchberger, normal_form, GroebnerBasis};
pub use ideal::Ideal;
pub use koszul::{trivial_product_check, KoszulChain, KoszulComplex, ProductVerdict, ProductWitness};
pub use monomial::{monomial_compare, ExponentVector, Monomial, MonomialOrder, VariableIndex};
pub use poly::{Polynomial, VarLabels};
pub use ring::QuotientRing;
pub use series::BigradedSeries;
pub use subdet::{GenericMatrix, Minor, MinorSelection, ShapeVerdict};
