use std::fmt;

use rayon::prelude::*;

use super::coloring::{enumerate_colorings, Coloring};
use crate::algebra::{ensure_entropic, ensure_tribracket, idempotent_number, TribracketTable};
use crate::diagrams::Diagram;
use crate::enumeration::ClassRegistry;
use crate::error::Result;
use crate::morphisms::homset::{pointwise_table, write_legend};
use crate::morphisms::{canonical_form, DEFAULT_CANON_BOUND};

/// The colorings of a diagram by an entropic `X`, with the pointwise bracket.
/// `colorings[i]` is element `i` of `table`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkHomset {
    pub table: TribracketTable,
    pub colorings: Vec<Coloring>,
    pub diagram: String,
    pub tribracket: Option<String>,
}

/// Same layout as a homset file: tensor, blank line, legend of region colors.
impl fmt::Display for LinkHomset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.table)?;
        writeln!(f)?;
        let rows: Vec<Vec<usize>> = self.colorings.iter().map(|c| c.assignment.clone()).collect();
        write_legend(f, &rows)
    }
}

pub fn link_homset_tribracket(d: &Diagram, x: &TribracketTable) -> Result<LinkHomset> {
    ensure_tribracket(x)?;
    ensure_entropic(x)?;
    let colorings = enumerate_colorings(d, x)?;
    let rows: Vec<Vec<usize>> = colorings.iter().map(|c| c.assignment.clone()).collect();
    let table = pointwise_table(x, &rows)?;
    Ok(LinkHomset {
        table,
        colorings,
        diagram: d.name().to_string(),
        tribracket: x.name().map(str::to_string),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub count: usize,
    pub idempotent_number: usize,
    /// Absent when the homset is larger than the canonical-form bound.
    pub canonical_form: Option<TribracketTable>,
}

pub fn link_invariant_report(d: &Diagram, x: &TribracketTable) -> Result<InvariantReport> {
    let h = link_homset_tribracket(d, x)?;
    let canonical_form = if h.table.order() <= DEFAULT_CANON_BOUND {
        Some(canonical_form(&h.table)?)
    } else {
        None
    };
    Ok(InvariantReport {
        count: h.table.order(),
        idempotent_number: idempotent_number(&h.table),
        canonical_form,
    })
}

/// One `name |X| count idem_no class_label` line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BatchLine {
    pub name: String,
    pub order: usize,
    pub count: usize,
    pub idempotent_number: usize,
    pub class_label: String,
}

impl fmt::Display for BatchLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} {} {}",
            self.name, self.order, self.count, self.idempotent_number, self.class_label
        )
    }
}

/// Link homsets of every diagram by `x`, sorted by diagram name. Class
/// labels come from `registry`, which gains any class not seen before.
pub fn batch_report(diagrams: &[Diagram], x: &TribracketTable, registry: &mut ClassRegistry) -> Result<Vec<BatchLine>> {
    ensure_tribracket(x)?;
    ensure_entropic(x)?;
    let mut sorted: Vec<&Diagram> = diagrams.iter().collect();
    sorted.sort_by(|a, b| a.name().cmp(b.name()));
    let homsets = sorted
        .par_iter()
        .map(|d| link_homset_tribracket(d, x).map(|h| h.table))
        .collect::<Result<Vec<_>>>()?;
    Ok(sorted
        .iter()
        .zip(homsets)
        .map(|(d, table)| BatchLine {
            name: d.name().to_string(),
            order: x.order(),
            count: table.order(),
            idempotent_number: idempotent_number(&table),
            class_label: registry.label_of(&table),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{is_entropic, is_tribracket, make_dehn, GroupTable};
    use crate::diagrams::parse_pd;
    use crate::enumeration::{reference_registry, t4_1};
    use crate::error::Error;
    use crate::morphisms::are_isomorphic;

    fn t21() -> TribracketTable {
        "2\n1 2\n2 1\n\n2 1\n1 2\n".parse().unwrap()
    }

    fn t22() -> TribracketTable {
        "2\n2 1\n1 2\n\n1 2\n2 1\n".parse().unwrap()
    }

    #[test]
    fn trefoil_homset_is_t4_1() {
        let d = parse_pd("X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3").unwrap();
        let h = link_homset_tribracket(&d, &t21()).unwrap();
        assert!(is_tribracket(&h.table) && is_entropic(&h.table));
        assert!(are_isomorphic(&h.table, &t4_1()).is_some());
        let r = link_invariant_report(&d, &t21()).unwrap();
        assert_eq!((r.count, r.idempotent_number), (4, 4));
    }

    #[test]
    fn unknot_with_t22() {
        let r = link_invariant_report(&Diagram::unknot("u"), &t22()).unwrap();
        assert_eq!((r.count, r.idempotent_number), (4, 0));
    }

    #[test]
    fn refuses_non_entropic() {
        let x = make_dehn(&GroupTable::symmetric(3).unwrap()).unwrap();
        let e = link_homset_tribracket(&Diagram::unknot("u"), &x).unwrap_err();
        assert!(matches!(e, Error::NotEntropic { .. }));
    }

    #[test]
    fn batch_lines_are_sorted_and_labeled() {
        let a = parse_pd("name b\nX 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3\n").unwrap();
        let b = parse_pd("name a\nX 1 2 2 1\n").unwrap();
        let mut reg = reference_registry();
        let lines = batch_report(&[a, b], &t21(), &mut reg).unwrap();
        let text: Vec<String> = lines.iter().map(ToString::to_string).collect();
        assert_eq!(text, ["a 2 4 4 T4^1", "b 2 4 4 T4^1"]);
    }
}
