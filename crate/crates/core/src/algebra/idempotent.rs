use super::table::TribracketTable;
use crate::error::{Error, Result};

/// Elements with `[x, x, x] = x`, ascending.
pub fn idempotent_elements(t: &TribracketTable) -> Vec<usize> {
    (0..t.order()).filter(|&x| t.get(x, x, x) == x).collect()
}

pub fn idempotent_number(t: &TribracketTable) -> usize {
    idempotent_elements(t).len()
}

/// Smallest subset containing `seeds` and closed under the bracket,
/// ascending. In a finite tribracket this subset is closed under the three
/// divisions as well.
pub fn closure(t: &TribracketTable, seeds: &[usize]) -> Result<Vec<usize>> {
    let n = t.order();
    let mut member = vec![false; n];
    let mut elems = Vec::new();
    for &s in seeds {
        if s >= n {
            return Err(Error::OutOfRange { element: s, order: n });
        }
        if !member[s] {
            member[s] = true;
            elems.push(s);
        }
    }
    // semi-naive: every round only visits triples touching a new element
    let mut done = 0;
    while done < elems.len() {
        let frontier = elems.len();
        for i in 0..frontier {
            for j in 0..frontier {
                for k in 0..frontier {
                    if i < done && j < done && k < done {
                        continue;
                    }
                    let v = t.get(elems[i], elems[j], elems[k]);
                    if !member[v] {
                        member[v] = true;
                        elems.push(v);
                    }
                }
            }
        }
        done = frontier;
    }
    elems.sort_unstable();
    Ok(elems)
}

/// A subtribracket relabeled onto `0..k`; `legend[i]` is the original
/// element that became `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subtribracket {
    pub table: TribracketTable,
    pub legend: Vec<usize>,
}

/// Restricts `t` to an element subset that is already closed.
pub fn restrict(t: &TribracketTable, elems: &[usize]) -> Result<Subtribracket> {
    let mut back = vec![usize::MAX; t.order()];
    for (i, &e) in elems.iter().enumerate() {
        back[e] = i;
    }
    let k = elems.len();
    let mut entries = Vec::with_capacity(k * k * k);
    for &x in elems {
        for &y in elems {
            for &z in elems {
                let v = back[t.get(x, y, z)];
                if v == usize::MAX {
                    return Err(Error::Internal(format!(
                        "subset is not closed: [{x},{y},{z}] leaves it"
                    )));
                }
                entries.push(v as _);
            }
        }
    }
    Ok(Subtribracket {
        table: TribracketTable::new(k, entries)?,
        legend: elems.to_vec(),
    })
}

/// The subtribracket generated by `seeds`. An empty seed set yields T₀¹.
pub fn subtribracket_closure(t: &TribracketTable, seeds: &[usize]) -> Result<Subtribracket> {
    let elems = closure(t, seeds)?;
    restrict(t, &elems)
}

/// `Idem(T)`: the subtribracket generated by the idempotent elements.
pub fn idem_subtribracket(t: &TribracketTable) -> Subtribracket {
    subtribracket_closure(t, &idempotent_elements(t)).expect("idempotents are in range")
}
