use std::collections::HashMap;
use std::fmt;

use super::hom::{enumerate_homs, Homomorphism};
use crate::algebra::{ensure_entropic, ensure_tribracket, TribracketTable};
use crate::error::{Error, Result};

/// `Hom(T, X)` with its pointwise tribracket structure. `legend[i]` is the
/// map that element `i` of `table` stands for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomsetTribracket {
    pub table: TribracketTable,
    pub legend: Vec<Homomorphism>,
}

/// Tabulates the pointwise bracket `[f, g, h](t) = [f(t), g(t), h(t)]` over
/// a list of functions into `target`. Every pointwise bracket must itself be
/// in the list.
pub(crate) fn pointwise_table(target: &TribracketTable, legend: &[Vec<usize>]) -> Result<TribracketTable> {
    let m = legend.len();
    let index: HashMap<&[usize], usize> = legend
        .iter()
        .enumerate()
        .map(|(i, f)| (f.as_slice(), i))
        .collect();
    let width = legend.first().map_or(0, Vec::len);
    let mut entries = Vec::with_capacity(m * m * m);
    let mut buf = vec![0usize; width];
    for f in legend {
        for g in legend {
            for h in legend {
                for (t, slot) in buf.iter_mut().enumerate() {
                    *slot = target.get(f[t], g[t], h[t]);
                }
                let k = index.get(buf.as_slice()).ok_or_else(|| {
                    Error::Internal(format!(
                        "pointwise bracket {buf:?} is not in the homset; \
                         the homset is not closed under the pointwise operation"
                    ))
                })?;
                entries.push(*k as _);
            }
        }
    }
    TribracketTable::new(m, entries)
}

/// Builds the homset tribracket `Hom(source, target)`. The target must be
/// entropic.
pub fn homset_tribracket(source: &TribracketTable, target: &TribracketTable) -> Result<HomsetTribracket> {
    ensure_tribracket(source)?;
    ensure_tribracket(target)?;
    ensure_entropic(target)?;
    let legend = enumerate_homs(source, target);
    let images: Vec<Vec<usize>> = legend.iter().map(|h| h.image.clone()).collect();
    let table = pointwise_table(target, &images)?;
    Ok(HomsetTribracket { table, legend })
}

/// Writes a legend section: one line `index: v1 v2 ...` per element, all
/// 1-based.
pub fn write_legend<W: fmt::Write>(out: &mut W, rows: &[Vec<usize>]) -> fmt::Result {
    for (i, row) in rows.iter().enumerate() {
        write!(out, "{}:", i + 1)?;
        for v in row {
            write!(out, " {}", v + 1)?;
        }
        writeln!(out)?;
    }
    Ok(())
}

/// Homset format: the tensor, a blank line, then the legend.
impl fmt::Display for HomsetTribracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.table)?;
        writeln!(f)?;
        let rows: Vec<Vec<usize>> = self.legend.iter().map(|h| h.image.clone()).collect();
        write_legend(f, &rows)
    }
}

/// Parses a legend section (`index: v1 ... vm`, 1-based) of `count` lines.
pub fn parse_legend(lines: &[&str], first_line: usize, count: usize) -> Result<Vec<Vec<usize>>> {
    let mut rows = Vec::with_capacity(count);
    let body: Vec<(usize, &str)> = lines
        .iter()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (first_line + i, *l))
        .collect();
    if body.len() != count {
        return Err(Error::Parse {
            line: first_line,
            msg: format!("expected {count} legend lines, found {}", body.len()),
        });
    }
    for (k, (line, text)) in body.into_iter().enumerate() {
        let err = |msg: String| Error::Parse { line, msg };
        let (idx, rest) = text
            .split_once(':')
            .ok_or_else(|| err("legend line lacks ':'".into()))?;
        if idx.trim().parse::<usize>().ok() != Some(k + 1) {
            return Err(err(format!("expected legend index {}", k + 1)));
        }
        let row = rest
            .split_whitespace()
            .map(|tok| match tok.parse::<usize>() {
                Ok(v) if v >= 1 => Ok(v - 1),
                _ => Err(err(format!("bad legend value {tok:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    Ok(rows)
}

/// Parses a tensor optionally followed by a blank line and a legend.
pub fn parse_tensor_with_legend(text: &str) -> Result<(TribracketTable, Option<Vec<Vec<usize>>>)> {
    let lines: Vec<&str> = text.lines().collect();
    let (table, used) = TribracketTable::parse_lines(&lines, 1)?;
    let rest = &lines[used..];
    if rest.iter().all(|l| l.trim().is_empty()) {
        return Ok((table, None));
    }
    let legend = parse_legend(rest, used + 1, table.order())?;
    Ok((table, Some(legend)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{is_entropic, is_tribracket, make_dehn, GroupTable};

    fn t21() -> TribracketTable {
        "2\n1 2\n2 1\n\n2 1\n1 2\n".parse().unwrap()
    }

    #[test]
    fn homset_of_t21_has_four_elements() {
        let h = homset_tribracket(&t21(), &t21()).unwrap();
        assert_eq!(h.table.order(), 4);
        assert!(is_tribracket(&h.table) && is_entropic(&h.table));
    }

    #[test]
    fn into_singleton_is_singleton() {
        let h = homset_tribracket(&t21(), &TribracketTable::singleton()).unwrap();
        assert_eq!(h.table, TribracketTable::singleton());
        assert_eq!(h.legend, vec![Homomorphism::new(vec![0, 0])]);
    }

    #[test]
    fn refuses_non_entropic_target() {
        let s3 = make_dehn(&GroupTable::symmetric(3).unwrap()).unwrap();
        let e = homset_tribracket(&t21(), &s3).unwrap_err();
        assert!(matches!(e, Error::NotEntropic { .. }));
        assert!(!e.is_usage());
    }

    #[test]
    fn legend_parses_back() {
        let h = homset_tribracket(&t21(), &t21()).unwrap();
        let text = h.to_string();
        assert!(text.ends_with("\n\n1: 1 1\n2: 1 2\n3: 2 1\n4: 2 2\n"));
        let (table, legend) = parse_tensor_with_legend(&text).unwrap();
        assert_eq!(table, h.table);
        assert_eq!(legend.unwrap(), vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }
}
