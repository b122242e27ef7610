use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Storage type for one tensor entry (a 0-based element index).
pub type Elem = u16;

/// Largest order a [`TribracketTable`] can hold.
pub const MAX_ORDER: usize = 1 << 10;

/// A finite ternary operation stored as an order-n operation 3-tensor.
///
/// `entries[(x * n + y) * n + z]` holds `[x, y, z]`, 0-based. Text I/O is
/// 1-based: block `i` of the tensor file is the matrix for first argument
/// `i`, row `j` column `k` of that block is `[i, j, k]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TribracketTable {
    order: usize,
    entries: Vec<Elem>,
    name: Option<String>,
}

impl TribracketTable {
    /// Builds a table from a flat row-major entry list, checking shape and range.
    pub fn new(order: usize, entries: Vec<Elem>) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::Shape(format!("order {order} exceeds {MAX_ORDER}")));
        }
        if entries.len() != order * order * order {
            return Err(Error::Shape(format!(
                "order {order} needs {} entries, got {}",
                order * order * order,
                entries.len()
            )));
        }
        if let Some(&bad) = entries.iter().find(|&&v| v as usize >= order) {
            return Err(Error::OutOfRange {
                element: bad as usize,
                order,
            });
        }
        Ok(TribracketTable {
            order,
            entries,
            name: None,
        })
    }

    /// Builds a table by evaluating `f` on every triple. Values are reduced
    /// by nothing: `f` must return elements below `order`.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize, usize) -> usize) -> Result<Self> {
        let mut entries = Vec::with_capacity(order * order * order);
        for x in 0..order {
            for y in 0..order {
                for z in 0..order {
                    let v = f(x, y, z);
                    entries.push(Elem::try_from(v).map_err(|_| Error::OutOfRange {
                        element: v,
                        order,
                    })?);
                }
            }
        }
        Self::new(order, entries)
    }

    /// The empty tribracket T₀¹.
    pub fn empty() -> Self {
        TribracketTable {
            order: 0,
            entries: Vec::new(),
            name: None,
        }
    }

    /// The one-element tribracket T₁¹.
    pub fn singleton() -> Self {
        TribracketTable {
            order: 1,
            entries: vec![0],
            name: None,
        }
    }

    /// Builds a table from nested 1-based matrices, as printed in tables.
    pub fn from_one_based(blocks: &[Vec<Vec<usize>>]) -> Result<Self> {
        let n = blocks.len();
        let mut entries = Vec::with_capacity(n * n * n);
        for (i, block) in blocks.iter().enumerate() {
            if block.len() != n {
                return Err(Error::Shape(format!("block {} has {} rows", i + 1, block.len())));
            }
            for (j, row) in block.iter().enumerate() {
                if row.len() != n {
                    return Err(Error::Shape(format!(
                        "block {} row {} has {} entries",
                        i + 1,
                        j + 1,
                        row.len()
                    )));
                }
                for &v in row {
                    if v == 0 || v > n {
                        return Err(Error::OutOfRange { element: v, order: n });
                    }
                    entries.push((v - 1) as Elem);
                }
            }
        }
        Self::new(n, entries)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_empty(&self) -> bool {
        self.order == 0
    }

    pub fn entries(&self) -> &[Elem] {
        &self.entries
    }

    #[inline]
    pub(crate) fn index(&self, x: usize, y: usize, z: usize) -> usize {
        (x * self.order + y) * self.order + z
    }

    /// `[x, y, z]` without bounds checks beyond the slice index.
    #[inline]
    pub fn get(&self, x: usize, y: usize, z: usize) -> usize {
        self.entries[self.index(x, y, z)] as usize
    }

    /// Checked evaluation of `[x, y, z]`.
    pub fn bracket(&self, x: usize, y: usize, z: usize) -> Result<usize> {
        for e in [x, y, z] {
            if e >= self.order {
                return Err(Error::OutOfRange {
                    element: e,
                    order: self.order,
                });
            }
        }
        Ok(self.get(x, y, z))
    }

    /// Relabels by the bijection `perm` (old element `e` becomes `perm[e]`),
    /// so that `[perm x, perm y, perm z]_new = perm [x, y, z]_old`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order;
        if perm.len() != n {
            return Err(Error::Shape(format!(
                "permutation of length {} for order {n}",
                perm.len()
            )));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Shape("relabeling is not a bijection".into()));
            }
        }
        let mut entries = vec![0; n * n * n];
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    entries[(perm[x] * n + perm[y]) * n + perm[z]] = perm[self.get(x, y, z)] as Elem;
                }
            }
        }
        Ok(TribracketTable {
            order: n,
            entries,
            name: self.name.clone(),
        })
    }

    /// Returns the same tensor without its name label.
    pub fn unnamed(&self) -> Self {
        TribracketTable {
            order: self.order,
            entries: self.entries.clone(),
            name: None,
        }
    }

    /// Parses one tensor from the front of `lines`; returns the table and the
    /// number of lines consumed. `first_line` is the 1-based line number of
    /// `lines[0]`, used in error messages.
    pub fn parse_lines(lines: &[&str], first_line: usize) -> Result<(Self, usize)> {
        let err = |offset: usize, msg: String| Error::Parse {
            line: first_line + offset,
            msg,
        };
        let header = lines
            .first()
            .ok_or_else(|| err(0, "missing order line".into()))?
            .trim();
        let n: usize = header
            .parse()
            .map_err(|_| err(0, format!("expected the order, found {header:?}")))?;
        if n > MAX_ORDER {
            return Err(err(0, format!("order {n} exceeds {MAX_ORDER}")));
        }
        let mut entries = Vec::with_capacity(n * n * n);
        let mut pos = 1;
        for block in 0..n {
            if block > 0 {
                match lines.get(pos) {
                    Some(l) if l.trim().is_empty() => pos += 1,
                    _ => return Err(err(pos, format!("expected a blank line before block {}", block + 1))),
                }
            }
            for row in 0..n {
                let line = lines
                    .get(pos)
                    .ok_or_else(|| err(pos, format!("block {} ends after {row} rows", block + 1)))?;
                let mut count = 0;
                for tok in line.split_whitespace() {
                    let v: usize = tok
                        .parse()
                        .map_err(|_| err(pos, format!("not an integer: {tok:?}")))?;
                    if v == 0 || v > n {
                        return Err(err(pos, format!("entry {v} outside 1..={n}")));
                    }
                    entries.push((v - 1) as Elem);
                    count += 1;
                }
                if count != n {
                    return Err(err(pos, format!("expected {n} entries, found {count}")));
                }
                pos += 1;
            }
        }
        Ok((Self::new(n, entries)?, pos))
    }
}

impl fmt::Debug for TribracketTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(name) = &self.name {
            write!(f, "{name} ")?;
        }
        write!(f, "{:?}", self.entries)
    }
}

/// Tensor text format: the order, then one 1-based block per first argument.
impl fmt::Display for TribracketTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.order;
        writeln!(f, "{n}")?;
        for x in 0..n {
            if x > 0 {
                writeln!(f)?;
            }
            for y in 0..n {
                let row = (0..n)
                    .map(|z| (self.get(x, y, z) + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                writeln!(f, "{row}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for TribracketTable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lines: Vec<&str> = s.lines().collect();
        let (table, used) = Self::parse_lines(&lines, 1)?;
        if let Some(extra) = lines[used..].iter().position(|l| !l.trim().is_empty()) {
            return Err(Error::Parse {
                line: used + extra + 1,
                msg: "unexpected content after the tensor".into(),
            });
        }
        Ok(table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t21() -> TribracketTable {
        "2\n1 2\n2 1\n\n2 1\n1 2\n".parse().unwrap()
    }

    #[test]
    fn reads_block_layout() {
        let t = t21();
        // [1,1,2] = 2 in 1-based terms
        assert_eq!(t.bracket(0, 0, 1).unwrap(), 1);
        assert_eq!(t.get(1, 0, 0), 1);
    }

    #[test]
    fn display_round_trips() {
        let t = t21();
        let text = t.to_string();
        assert_eq!(text, "2\n1 2\n2 1\n\n2 1\n1 2\n");
        assert_eq!(text.parse::<TribracketTable>().unwrap(), t);
    }

    #[test]
    fn empty_table_is_single_zero_line() {
        let t = TribracketTable::empty();
        assert_eq!(t.to_string(), "0\n");
        assert_eq!("0\n".parse::<TribracketTable>().unwrap(), t);
    }

    #[test]
    fn bracket_out_of_range() {
        let t = t21();
        assert_eq!(
            t.bracket(0, 2, 0),
            Err(Error::OutOfRange { element: 2, order: 2 })
        );
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let e = "2\n1 2\n2 1\n2 1\n1 2\n".parse::<TribracketTable>().unwrap_err();
        assert_eq!(e, Error::Parse { line: 4, msg: "expected a blank line before block 2".into() });
        let e = "2\n1 3\n2 1\n\n2 1\n1 2\n".parse::<TribracketTable>().unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        let e = "2\n1 2\n2 1\n\n2 1\n".parse::<TribracketTable>().unwrap_err();
        assert!(matches!(e, Error::Parse { line: 6, .. }));
    }

    #[test]
    fn relabel_swaps_elements() {
        let t = t21();
        let r = t.relabel(&[1, 0]).unwrap();
        // x + y + z mod 2 is fixed by the swap x -> x + 1
        assert_eq!(r, t);
        assert!(t.relabel(&[0, 0]).is_err());
    }
}
