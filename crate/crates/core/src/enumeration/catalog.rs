//! The bundled list of small entropic classes, in their customary order.

use super::classify::parse_census;
use super::product::ClassRegistry;
use crate::algebra::TribracketTable;

const CLASSES: &str = include_str!("../../../../data/tensors/classes.census");
const T4_1: &str = include_str!("../../../../data/tensors/t4-1.tensor");

/// `T0^1, T1^1, T2^1, T2^2, T3^1, ..., T3^7`, each named by its label.
pub fn reference_classes() -> Vec<TribracketTable> {
    let census = parse_census(CLASSES).expect("bundled census parses");
    let mut out = Vec::new();
    for section in census {
        for (k, t) in section.tables.into_iter().enumerate() {
            out.push(t.with_name(format!("T{}^{}", section.order, k + 1)));
        }
    }
    out
}

/// The four-element class `T4^1`, isomorphic to `Hom(T2^1, T2^1)`.
pub fn t4_1() -> TribracketTable {
    T4_1.parse::<TribracketTable>()
        .expect("bundled tensor parses")
        .with_name("T4^1")
}

/// A registry seeded with [`reference_classes`] followed by [`t4_1`], so
/// that those classes keep their customary labels.
pub fn reference_registry() -> ClassRegistry {
    let mut tables = reference_classes();
    tables.push(t4_1());
    ClassRegistry::from_tables(&tables)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{is_entropic, is_tribracket};

    #[test]
    fn labels_match_registry() {
        let reg = reference_registry();
        let labels: Vec<&str> = reg.classes().iter().map(|c| c.label.as_str()).collect();
        assert_eq!(
            labels,
            ["T0^1", "T1^1", "T2^1", "T2^2", "T3^1", "T3^2", "T3^3", "T3^4", "T3^5", "T3^6", "T3^7", "T4^1"]
        );
        for c in reg.classes() {
            assert_eq!(c.table.name(), Some(c.label.as_str()));
            assert!(is_tribracket(&c.table) && is_entropic(&c.table));
        }
    }
}
