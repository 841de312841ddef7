//! Graph surgeries that raise the chromatic number while keeping the
//! homology of `Hom(T, -)` fixed, and the pipeline that assembles them.

mod cylinder;
mod paths;
mod pipeline;
mod search;
mod subdivision;

pub use cylinder::{covering_split, glue_cylinder, CoveringReport, Cylinder};
pub use paths::{replace_edges_with_paths, PathReplacement};
pub use pipeline::{
    chromatic_pipeline, uniformly_small_m, verify_certificate, Checks, CoveringEntry, Embedding, FamilyMember,
    PipelineCertificate, ProfilePair, Status, Verdict, VerifyReport, Z2Member, Z2Summary, CLAIM,
};
pub use search::{
    find_high_girth_high_chromatic, random_connected_girth, random_graph, random_search, random_tree,
    remove_short_cycles, rng, HighGirthGraph, Provenance, SEARCH_ATTEMPTS,
};
pub use subdivision::{
    fiber_certificate, fiber_certificate_with, subdivision_hypothesis, subdivide_edge, FiberReport, SubdivisionStep,
};
