//! Homomorphisms, homset tribrackets, and isomorphism testing.

pub mod hom;
pub mod homset;
pub mod iso;

pub use hom::{enumerate_homs, is_hom, Homomorphism};
pub use homset::{homset_tribracket, parse_tensor_with_legend, HomsetTribracket};
pub use iso::{
    are_isomorphic, canonical_form, canonical_form_bounded, canonical_labeling, IsoCertificate,
    DEFAULT_CANON_BOUND,
};
