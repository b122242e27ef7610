//! Exhaustive enumeration of tribrackets and classification up to
//! isomorphism.

pub mod catalog;
pub mod classify;
pub mod product;
pub mod search;

pub use catalog::{reference_classes, reference_registry, t4_1};
pub use classify::{classify, parse_census, Census};
pub use product::{product_table, ClassEntry, ClassRegistry, ProductTable};
pub use search::{enumerate_tribrackets, for_each_tribracket, Filter, SearchState};
