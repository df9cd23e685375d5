//! Exact linear algebra over Z_(p) and finitely generated modules.

pub mod lattice;
pub mod map;
pub mod matrix;
pub mod module;
pub mod scalar;
pub mod snf;
pub mod tensor;

pub use map::{ModuleMap, Subquotients};
pub use matrix::Matrix;
pub use module::{is_odd_prime, DirectSum, FpModule};
pub use scalar::PScalar;
pub use snf::{plocal_snf, snf, Snf, SnfFlags};
pub use tensor::{tensor_and_tor, tensor_maps, tensor_modules, tor, Tensor};
