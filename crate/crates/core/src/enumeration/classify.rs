use std::collections::BTreeSet;
use std::fmt::Write as _;

use super::search::{par_subtrees, Filter};
use crate::algebra::TribracketTable;
use crate::error::{Error, Result};
use crate::morphisms::{canonical_form, DEFAULT_CANON_BOUND};

/// Canonical forms of all isomorphism classes of order `n`, sorted.
pub fn classify(n: usize, filter: Filter) -> Result<Vec<TribracketTable>> {
    if n > DEFAULT_CANON_BOUND {
        return Err(Error::OrderAboveBound {
            order: n,
            bound: DEFAULT_CANON_BOUND,
        });
    }
    let sets = par_subtrees(n, filter, |mut state| {
        let mut classes = BTreeSet::new();
        state.complete(&mut |t| {
            classes.insert(canonical_form(t).expect("order checked above"));
        });
        classes
    });
    let mut all = BTreeSet::new();
    for s in sets {
        all.extend(s);
    }
    Ok(all.into_iter().collect())
}

/// One `order=<n> classes=<k> filter=<f>` section of a census file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub order: usize,
    pub filter: Filter,
    pub tables: Vec<TribracketTable>,
}

impl Census {
    pub fn new(order: usize, filter: Filter, tables: Vec<TribracketTable>) -> Self {
        Census { order, filter, tables }
    }

    /// Header line, then the tensors separated by `---` lines.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "order={} classes={} filter={}",
            self.order,
            self.tables.len(),
            self.filter
        )
        .unwrap();
        for (i, t) in self.tables.iter().enumerate() {
            if i > 0 {
                out.push_str("---\n");
            }
            write!(out, "{t}").unwrap();
        }
        out
    }
}

fn parse_header(line: &str, lineno: usize) -> Result<(usize, usize, Filter)> {
    let err = |msg: String| Error::Parse { line: lineno, msg };
    let mut order = None;
    let mut classes = None;
    let mut filter = None;
    for field in line.split_whitespace() {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| err(format!("malformed header field {field:?}")))?;
        match key {
            "order" => order = value.parse().ok(),
            "classes" => classes = value.parse().ok(),
            "filter" => filter = Some(value.parse::<Filter>().map_err(err)?),
            _ => return Err(err(format!("unknown header field {key:?}"))),
        }
    }
    match (order, classes, filter) {
        (Some(o), Some(c), Some(f)) => Ok((o, c, f)),
        _ => Err(err("census header needs order=, classes= and filter=".into())),
    }
}

/// Parses one or more concatenated census sections.
pub fn parse_census(text: &str) -> Result<Vec<Census>> {
    let lines: Vec<&str> = text.lines().collect();
    let mut pos = 0;
    let mut out = Vec::new();
    let skip_blank = |pos: &mut usize| {
        while *pos < lines.len() && lines[*pos].trim().is_empty() {
            *pos += 1;
        }
    };
    skip_blank(&mut pos);
    if pos == lines.len() {
        return Err(Error::Parse { line: 1, msg: "empty census".into() });
    }
    while pos < lines.len() {
        let (order, count, filter) = parse_header(lines[pos], pos + 1)?;
        pos += 1;
        let mut tables = Vec::with_capacity(count);
        for i in 0..count {
            if i > 0 {
                match lines.get(pos) {
                    Some(l) if l.trim() == "---" => pos += 1,
                    _ => {
                        return Err(Error::Parse {
                            line: pos + 1,
                            msg: "expected a --- separator".into(),
                        })
                    }
                }
            }
            let (t, used) = TribracketTable::parse_lines(&lines[pos..], pos + 1)?;
            if t.order() != order {
                return Err(Error::Parse {
                    line: pos + 1,
                    msg: format!("tensor of order {} in an order-{order} census", t.order()),
                });
            }
            tables.push(t);
            pos += used;
        }
        out.push(Census { order, filter, tables });
        skip_blank(&mut pos);
    }
    Ok(out)
}
