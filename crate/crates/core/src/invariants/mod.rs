//! Region colorings of diagrams and the invariants built from them.

mod coloring;
mod homset;

pub use coloring::{counting_invariant, enumerate_colorings, enumerate_colorings_with, Coloring};
pub use homset::{
    batch_report, link_homset_tribracket, link_invariant_report, BatchLine, InvariantReport, LinkHomset,
};
