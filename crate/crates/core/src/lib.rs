pub mod affine;
pub mod arrangement;
pub mod bs;
pub mod cli;
pub mod error;
pub mod form;
pub mod io;
pub mod linalg;
pub mod support;
pub mod torus;
pub mod zeta;

pub use error::{Error, Result};
