//! Exact symbolic engine for the quantum group SU_q(2), finite-dimensional
//! Hopf algebras with their Drinfeld codoubles, and the integer linear
//! algebra behind six-term K-theory computations.

pub mod error;
pub mod findimhopf;
pub mod ktheory;
pub mod linalg;
pub mod ncalg;
pub mod podles;
pub mod qaut;
pub mod qgroup;
pub mod scalars;

pub use error::{Error, Result};
