//! Finite Niebrzydowski tribrackets and the knot invariants they define.
//!
//! * [`algebra`]: operation 3-tensors, axiom checks, Alexander and Dehn
//!   families, idempotents.
//! * [`morphisms`]: homomorphisms, homset tribrackets, canonical forms.
//! * [`enumeration`]: exhaustive search for all tribrackets of an order.
//! * [`diagrams`]: PD codes, region extraction, crossing relations.
//! * [`invariants`]: region colorings and link homset tribrackets.

pub mod algebra;
pub mod diagrams;
pub mod enumeration;
pub mod error;
pub mod invariants;
pub mod morphisms;

pub use algebra::{Elem, GroupTable, TribracketTable};
pub use error::{Error, PdError, Result};
