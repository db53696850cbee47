//! Local ℤ-coefficient systems on finite Δ-complexes.
//!
//! A system assigns a sign to every edge so that each 2-simplex commutes; from
//! that data the crate builds twisted chain complexes and their homology,
//! classifies systems by their twist in H¹(X; ℤ/2), transports them along
//! simplicial maps and homotopies, verifies twisted Poincaré duality on
//! manifold triangulations, and computes the action of conjugation on the
//! twisted homology of finite groups through the normalized bar complex.

pub mod cli;
pub mod coefficients;
pub mod complex;
pub mod corpus;
pub mod error;
pub mod homotopy;
pub mod io;
pub mod linalg;
pub mod segal;
pub mod sign;
pub mod twisted;

pub use error::{Error, Result};
pub use sign::Sign;
