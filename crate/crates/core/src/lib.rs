//! Exact computation of q-chromatic quasisymmetric functions through the
//! Hopf algebra of ordered graphs, and of graded Frobenius characteristics of
//! the combinatorial (GKM) model of regular semisimple Hessenberg varieties.
//!
//! The two sides meet in [`symfun`]: ordered graphs map to quasisymmetric
//! functions via [`chromatic::psi`], and Hessenberg functions map to symmetric
//! functions via [`gkm::frobenius`].

pub mod cancel;
pub mod chromatic;
pub mod error;
pub mod exact;
pub mod gkm;
pub mod graphs;
pub mod oghopf;
pub mod symfun;

pub use error::{Error, Result};
