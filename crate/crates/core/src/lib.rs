//! Saturation and semisaturation of colored complete graphs, posets, number
//! sequences and planar point sets: constructions, exact verifiers and small
//! exhaustive searches.

pub mod error;
pub mod geometry;
pub mod graphs;
pub mod model;
pub mod par;
pub mod posets;
pub mod report;
pub mod search;
pub mod sequences;

pub use error::{Error, Result};
pub use model::{
    canonical_parse, canonical_serialize, ColoredCompleteGraph, FinitePoset, NumberSequence, PlanarPointSet, Point,
    PositionMode, Rational, Structure,
};
pub use report::{Mode, Stats, Verdict, VerificationReport, Witness};
