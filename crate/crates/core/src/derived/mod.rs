//! Derived colimits and Kan extensions: module diagrams through the `P̃`
//! resolution, complex diagrams through totalization over chains.

pub mod cones;
pub mod edges;
pub mod resolution;
pub mod sseq;
pub mod tot;

pub use cones::{
    box_cone_check, cone_diagram, cone_map, derived_box, diagram_cone, equatorial_check, BoxProduct, ConeMap,
    DiagramCone, EquatorialReport, Cone_map,
};
pub use edges::{edge_check, edge_check_all, EdgeReport};
pub use resolution::{derived_colim, derived_lkan, derived_lkan_all, ptilde, rtilde, PTilde, Resolution};
pub use sseq::{cohomology_diagram, sseq_pages, Filtered, Pages, SseqReport};
pub use tot::{all_chains, augmentation, hocolim_cx, holkan_cx, pushforward, tot_map, HoLkan, Tot};
