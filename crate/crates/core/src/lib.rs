pub mod altgroup;
pub mod continuous;
pub mod error;
pub mod expcore;
pub mod finite;

pub use error::{Error, Result};
pub use num_complex::Complex64;
