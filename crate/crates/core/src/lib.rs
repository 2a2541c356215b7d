pub mod applications;
pub mod catalog;
pub mod error;
pub mod quadrature;
pub mod reducer;
pub mod specfun;

pub use error::{Error, Result};
