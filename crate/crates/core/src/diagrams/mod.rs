//! Oriented link diagrams, their regions, and crossing relations.

mod faces;
mod pd;
mod relations;

pub use faces::{extract_faces, RegionGraph, Side};
pub use pd::{parse_pd, parse_pd_file, Diagram, Sign};
pub use relations::{crossing_relations, ConventionTable, CrossingRelation, Position};
