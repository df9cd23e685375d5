//! N-cyclic cochain complexes of Z_(p)-modules.

pub mod chain;
pub mod complex;
pub mod constructions;
pub mod flat;

pub use chain::ChainMap;
pub use complex::{moore_complex, period, Cohomology, CyclicComplex};
pub use constructions::{
    crown_data, direct_sum, mapping_cone, mapping_cylinder, tensor_chain_maps, tensor_cyclic, ComplexSum, Cone, CrownData,
    Cylinder, TensorComplex,
};
pub use flat::{
    derived_tensor, flat_replacement, flat_replacement_with_disks, kunneth_from_cohomology, kunneth_oracle,
    FlatReplacement,
};
