pub mod bs_check;
pub mod cone_gf;
pub mod corpus;
pub mod dd;
pub mod error;
pub mod fan;
pub mod linalg;
pub mod parse;
pub mod polyhedra;
pub mod ring;
pub mod zeta;

pub use error::{Error, Result};
