use std::fmt;

use rayon::prelude::*;

use crate::algebra::TribracketTable;
use crate::error::Result;
use crate::morphisms::{are_isomorphic, homset_tribracket};

/// A class representative with its stable label `T<order>^<index>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassEntry {
    pub label: String,
    pub table: TribracketTable,
}

/// Isomorphism classes in discovery order. Labels carry the cardinality and
/// the 1-based discovery index among classes of that cardinality.
#[derive(Debug, Clone, Default)]
pub struct ClassRegistry {
    classes: Vec<ClassEntry>,
}

impl ClassRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registers `tables` in order, each as its own class.
    pub fn from_tables(tables: &[TribracketTable]) -> Self {
        let mut reg = Self::new();
        for t in tables {
            reg.push(t.clone());
        }
        reg
    }

    fn push(&mut self, table: TribracketTable) -> &str {
        let index = 1 + self
            .classes
            .iter()
            .filter(|c| c.table.order() == table.order())
            .count();
        let label = format!("T{}^{}", table.order(), index);
        self.classes.push(ClassEntry { label, table });
        &self.classes.last().unwrap().label
    }

    pub fn classes(&self) -> &[ClassEntry] {
        &self.classes
    }

    /// Label of the first registered class isomorphic to `t`.
    pub fn lookup(&self, t: &TribracketTable) -> Option<&str> {
        self.classes
            .iter()
            .find(|c| are_isomorphic(&c.table, t).is_some())
            .map(|c| c.label.as_str())
    }

    /// Label of `t`'s class, registering it as a new class if unseen.
    pub fn label_of(&mut self, t: &TribracketTable) -> String {
        if let Some(l) = self.lookup(t) {
            return l.to_string();
        }
        self.push(t.unnamed()).to_string()
    }
}

/// The homset product table `X ∗ Y = Hom(X, Y)` over a list of classes.
#[derive(Debug, Clone)]
pub struct ProductTable {
    /// Labels of the input classes, in input order.
    pub labels: Vec<String>,
    /// `entries[i][j]` labels the class of `Hom(classes[i], classes[j])`.
    pub entries: Vec<Vec<String>>,
    /// The inputs followed by classes first seen as products.
    pub registry: ClassRegistry,
    inputs: usize,
}

impl ProductTable {
    /// Classes that were not among the inputs, in discovery order.
    pub fn discovered(&self) -> &[ClassEntry] {
        &self.registry.classes()[self.inputs..]
    }
}

/// Computes every `Hom(classes[i], classes[j])` and labels it against the
/// inputs, extending the label set with new classes in row-major order.
pub fn product_table(classes: &[TribracketTable]) -> Result<ProductTable> {
    let mut registry = ClassRegistry::from_tables(classes);
    let labels: Vec<String> = registry.classes().iter().map(|c| c.label.clone()).collect();
    let pairs: Vec<(usize, usize)> = (0..classes.len())
        .flat_map(|i| (0..classes.len()).map(move |j| (i, j)))
        .collect();
    let homsets = pairs
        .par_iter()
        .map(|&(i, j)| homset_tribracket(&classes[i], &classes[j]).map(|h| h.table))
        .collect::<Result<Vec<_>>>()?;
    let mut entries = vec![Vec::with_capacity(classes.len()); classes.len()];
    for (&(i, _), table) in pairs.iter().zip(&homsets) {
        entries[i].push(registry.label_of(table));
    }
    Ok(ProductTable {
        labels,
        entries,
        registry,
        inputs: classes.len(),
    })
}

/// Header row `* <labels>`, then one row per input class.
impl fmt::Display for ProductTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .registry
            .classes()
            .iter()
            .map(|c| c.label.len())
            .max()
            .unwrap_or(1);
        write!(f, "{:>width$}", "*")?;
        for l in &self.labels {
            write!(f, " {l:>width$}")?;
        }
        writeln!(f)?;
        for (l, row) in self.labels.iter().zip(&self.entries) {
            write!(f, "{l:>width$}")?;
            for e in row {
                write!(f, " {e:>width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::make_alexander;

    #[test]
    fn labels_follow_cardinality_and_discovery() {
        let t21: TribracketTable = "2\n1 2\n2 1\n\n2 1\n1 2\n".parse().unwrap();
        let classes = vec![TribracketTable::empty(), TribracketTable::singleton(), t21];
        let p = product_table(&classes).unwrap();
        assert_eq!(p.labels, vec!["T0^1", "T1^1", "T2^1"]);
        assert_eq!(p.entries[0], vec!["T0^1", "T1^1", "T1^1"]);
        assert_eq!(p.entries[2][2], "T4^1");
        assert_eq!(p.discovered().len(), 1);
        assert_eq!(p.discovered()[0].table.order(), 4);
    }

    #[test]
    fn registry_reuses_isomorphic_classes() {
        let mut reg = ClassRegistry::new();
        let a = make_alexander(3, 1, 1).unwrap();
        let b = a.relabel(&[2, 0, 1]).unwrap();
        assert_eq!(reg.label_of(&a), "T3^1");
        assert_eq!(reg.label_of(&b), "T3^1");
        assert_eq!(reg.label_of(&make_alexander(3, 2, 2).unwrap()), "T3^2");
    }
}
