//! Monomial ideals, lex and lex-plus-powers ideals, linkage, and graded Betti
//! tables computed by several independent routes.

pub mod betti;
pub mod bounds;
pub mod degseq;
pub mod enumerate;
pub mod error;
pub mod hilbert;
pub mod ideal;
pub mod lexmac;
pub mod linkage;
pub mod lpp;
pub mod monomial;
pub mod random;
pub mod reproduce;
pub mod suites;
pub mod text;

pub use error::{Error, Result};
