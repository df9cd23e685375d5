//! Reconstruction of complexes from crown diagrams and the smash product
//! through the butterfly.

pub mod crown;
pub mod pipeline;
pub mod special;

pub use crown::{crown_assemble, crown_decompose, q_unvalidated, roundtrip, LObject, LReport, QResult, RoundTrip, Q};
pub use pipeline::{
    build, butterfly_e2, cylinder_crown, restriction_check, smash_pipeline, smash_pipeline_with, verify_bz, Artifacts,
    BzReport, ButterflyE2, Check, PipelineOptions, PipelineReport, RestrictionReport,
};
pub use special::{moore_example, special_case_differential, two_term_model, SpecialCaseReport};
