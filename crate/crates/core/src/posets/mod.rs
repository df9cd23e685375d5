//! Finite posets, monotone maps and the specific posets of the crown and
//! butterfly constructions.

pub mod map;
pub mod poset;
pub mod standard;

pub use map::{is_cofinal, PosetMap, Slice};
pub use poset::{export_dot, FinPoset, PosetJson};
pub use standard::{
    b_poset, butterfly, butterfly_literal, by_name, crown, crown_inclusion, interval, p_edge, p_v, pr, square, v_poset,
    vo_poset, vy_poset, w_poset, BPoset,
};
