//! Exact computations in the extended affine Hecke algebra and a point-scale
//! model of linear Koszul duality for dg-modules.

pub mod laurent;
pub mod rootdata;
pub mod hecke;
pub mod linalg;
pub mod dg;
pub mod koszul;
pub mod random;
pub mod convolution;
pub mod expr;
pub mod report;
pub mod suites;

pub use laurent::LaurentPoly;
pub use hecke::{AlgebraMorphismSpec, HeckeAlgebra, HeckeElt};
pub use rootdata::{RootDatum, Weight, WeylElt};
