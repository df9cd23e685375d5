//! Poset-indexed diagrams of modules and complexes, strict colimits and
//! left Kan extensions, Reedy cofibrancy and the diagram tensor product.

pub mod colim;
pub mod diagram;
pub mod object;

pub use colim::{is_reedy_cofibrant, latching_map, strict_colim, strict_lkan, Colimit, Lkan};
pub use diagram::{diagram_tensor, CxDiagram, Diagram, DiagramMap, ModDiagram, TensorDiagram};
pub use object::{Object, TensorObject};
