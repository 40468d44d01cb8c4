//! Exact linear-algebra tools for finitely generated matrix algebras:
//! growth filtrations, word reduction certificates, standard identities and
//! monomial algebra growth.

pub mod cli;
pub mod error;
pub mod growth;
pub mod linalg;
pub mod monomial;
pub mod pi;
pub mod reduction;
pub mod words;

pub use error::{Error, Result};
