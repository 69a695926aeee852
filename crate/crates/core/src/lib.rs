//! Intersection norms of filling curve collections on closed oriented
//! surfaces.
//!
//! Collections are given as 4-valent ribbon graphs ([`ribbon`]). From one the
//! crate builds an integer homology model ([`homology`]), enumerates closed
//! coorientations to obtain the dual unit ball of the intersection norm
//! ([`norm`]), and reports whether that ball is realized by a Thurston norm
//! ([`thurston`]). Polytopes are handled exactly ([`polytope`]). The
//! `internorm` binary wraps these steps ([`cli`]) and ships a small example
//! corpus ([`corpus`]).

pub mod cli;
pub mod corpus;
pub mod error;
pub mod homology;
mod lp;
pub mod norm;
pub mod polytope;
pub mod ribbon;
pub mod snf;
pub mod thurston;

pub use error::{Error, Result};
pub use homology::{build_model, nontriviality_certificate, HomologyModel};
pub use norm::{
    coorientation_class, dual_unit_ball, eulerian_coorientations, norm, norm_oracle, Coorientation,
    IntersectionNorm, OracleResult,
};
pub use polytope::{convex_hull, LatticePolytope, ZonotopeGenerator};
pub use ribbon::{
    attach, attach_crossed, attach_with_map, parse_collection, Attachment, Component, RibbonGraph,
    Sign,
};
pub use thurston::{
    certify, realize_torus_polygon, torus_ball, vertical_surface_report, CertificateReport,
    GeodesicCollection, Verdict,
};
