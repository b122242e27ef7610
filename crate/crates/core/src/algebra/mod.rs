//! Finite tribrackets as operation 3-tensors: axioms, standard families,
//! and idempotent structure.

pub mod axioms;
pub mod construct;
pub mod group;
pub mod idempotent;
pub mod table;

pub use axioms::{
    divide, ensure_entropic, ensure_tribracket, entropic_sides, entropic_violation, is_entropic,
    is_tribracket, validate, AxiomReport, Divisions, LatinViolation, MixedViolation, Slot,
};
pub use construct::{make_alexander, make_dehn};
pub use group::GroupTable;
pub use idempotent::{
    closure, idem_subtribracket, idempotent_elements, idempotent_number, subtribracket_closure,
    Subtribracket,
};
pub use table::{Elem, TribracketTable};
