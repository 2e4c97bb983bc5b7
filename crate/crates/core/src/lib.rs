//! Restrictions of Schubert structure-sheaf classes to torus fixed points in
//! the equivariant K-theory of Grassmannians and maximal isotropic
//! Grassmannians, with Hilbert series and multiplicities at those points.
//!
//! Three independent backends compute the same class: excited Young
//! diagrams, set-valued tableaux and 0-Hecke subsequences.

pub mod diagrams;
pub mod error;
pub mod hecke;
pub mod restriction;
pub mod ring;
pub mod shapes;
pub mod tableaux;
pub mod weyl;

pub use error::{Error, Result};
