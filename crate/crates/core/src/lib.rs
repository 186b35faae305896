//! Graph-minor and delta-wye toolkit with a combinatorial 2-complex
//! rewriting calculus.
//!
//! The crate is organised around six subsystems:
//!
//! * [`graphcore`] — multigraph data model, elementary surgeries,
//!   canonical forms, isomorphism and automorphism machinery.
//! * [`planarity`] — left-right planarity test with embedding witness,
//!   outerplanarity, and the apex-pair certificate search.
//! * [`minors`] — one-step minor enumeration, minor containment,
//!   linklessness via the Petersen family, induced-cycle decomposition.
//! * [`families`] — delta-wye / wye-delta closure enumeration with
//!   canonical dedup (Heawood and Petersen families).
//! * [`complexes`] — combinatorial CW 2-complexes and the rewriting
//!   operations on them (joining, cloning, rerouting, collapsing,
//!   stellification, edge cloning and merging).
//! * [`verify`] — the excluded-minor verification pipeline, hand-proof
//!   cross-checks, and report emission.

pub mod complexes;
pub mod families;
pub mod graphcore;
pub mod minors;
pub mod planarity;
pub mod verify;

#[cfg(test)]
pub(crate) mod testutil;

pub use graphcore::{CanonicalCert, EdgeId, MultiGraph, VertexId};
