pub mod complexes;
pub mod derived;
pub mod diagrams;
pub mod error;
pub mod franke;
pub mod io;
pub mod palgebra;
pub mod posets;
pub mod random;
pub mod suites;

pub use error::{Error, Result};
