//! Depth-first construction of every tribracket of a fixed order.
//!
//! Cells are filled layer by layer (first argument), row-major inside a
//! layer. Three families of position tables keep every line of the cube a
//! partial permutation, and each axiom (ii) instance is re-checked whenever
//! one of the cells it reads is filled, so a partial cube never contains a
//! fully evaluable violation.

use std::fmt;

use rayon::prelude::*;

use crate::algebra::{Elem, TribracketTable};

const UNSET: u8 = u8::MAX;

/// Which tables the search reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Filter {
    All,
    EntropicOnly,
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Filter::All => "all",
            Filter::EntropicOnly => "entropic",
        })
    }
}

impl std::str::FromStr for Filter {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "all" => Ok(Filter::All),
            "entropic" | "entropic_only" | "entropic-only" => Ok(Filter::EntropicOnly),
            _ => Err(format!("unknown filter {s:?}")),
        }
    }
}

/// A partially filled cube plus the line-position indices.
#[derive(Clone)]
pub struct SearchState {
    n: usize,
    cells: Vec<u8>,
    /// `along_z[(x*n + y)*n + v]`: the z with `[x,y,z] = v`.
    along_z: Vec<u8>,
    /// `along_y[(x*n + z)*n + v]`: the y with `[x,y,z] = v`.
    along_y: Vec<u8>,
    /// `along_x[(y*n + z)*n + v]`: the x with `[x,y,z] = v`.
    along_x: Vec<u8>,
    filled: usize,
    entropic: bool,
}

impl SearchState {
    pub fn new(n: usize, filter: Filter) -> Self {
        assert!(n < UNSET as usize, "order {n} too large for the search");
        let n3 = n * n * n;
        SearchState {
            n,
            cells: vec![UNSET; n3],
            along_z: vec![UNSET; n3],
            along_y: vec![UNSET; n3],
            along_x: vec![UNSET; n3],
            filled: 0,
            entropic: filter == Filter::EntropicOnly,
        }
    }

    pub fn filled(&self) -> usize {
        self.filled
    }

    #[inline]
    fn get(&self, x: usize, y: usize, z: usize) -> Option<usize> {
        match self.cells[(x * self.n + y) * self.n + z] {
            UNSET => None,
            v => Some(v as usize),
        }
    }

    #[inline]
    fn fits(&self, cell: usize, v: usize) -> bool {
        let n = self.n;
        let (x, y, z) = (cell / (n * n), (cell / n) % n, cell % n);
        self.along_z[(x * n + y) * n + v] == UNSET
            && self.along_y[(x * n + z) * n + v] == UNSET
            && self.along_x[(y * n + z) * n + v] == UNSET
    }

    fn set(&mut self, cell: usize, v: usize) {
        let n = self.n;
        let (x, y, z) = (cell / (n * n), (cell / n) % n, cell % n);
        self.cells[cell] = v as u8;
        self.along_z[(x * n + y) * n + v] = z as u8;
        self.along_y[(x * n + z) * n + v] = y as u8;
        self.along_x[(y * n + z) * n + v] = x as u8;
        self.filled += 1;
    }

    fn unset(&mut self, cell: usize) {
        let n = self.n;
        let (x, y, z) = (cell / (n * n), (cell / n) % n, cell % n);
        let v = self.cells[cell] as usize;
        self.cells[cell] = UNSET;
        self.along_z[(x * n + y) * n + v] = UNSET;
        self.along_y[(x * n + z) * n + v] = UNSET;
        self.along_x[(y * n + z) * n + v] = UNSET;
        self.filled -= 1;
    }

    /// Whatever sides of axiom (ii) at `(x,y,z,w)` are evaluable must agree.
    #[inline]
    fn mixed_ok(&self, x: usize, y: usize, z: usize, w: usize) -> bool {
        let xyz = self.get(x, y, z);
        let xyw = self.get(x, y, w);
        let xzw = self.get(x, z, w);
        let a = xyz.zip(xyw).and_then(|(p, q)| self.get(y, p, q));
        let b = xyz.zip(xzw).and_then(|(p, r)| self.get(z, p, r));
        let c = xyw.zip(xzw).and_then(|(q, r)| self.get(w, q, r));
        let agree = |s: Option<usize>, t: Option<usize>| match (s, t) {
            (Some(s), Some(t)) => s == t,
            _ => true,
        };
        agree(a, b) && agree(a, c) && agree(b, c)
    }

    #[inline]
    fn pos(table: &[u8], i: usize) -> Option<usize> {
        match table[i] {
            UNSET => None,
            v => Some(v as usize),
        }
    }

    /// Re-checks every axiom (ii) instance that reads the cell `(i,j,k)`.
    fn mixed_ok_around(&self, i: usize, j: usize, k: usize) -> bool {
        let n = self.n;
        for t in 0..n {
            // the cell as [x,y,z], [x,y,w], [x,z,w]
            if !self.mixed_ok(i, j, k, t) || !self.mixed_ok(i, j, t, k) || !self.mixed_ok(i, t, j, k) {
                return false;
            }
        }
        for x in 0..n {
            // as [y, [x,y,z], [x,y,w]] with y = i
            if let (Some(z), Some(w)) = (
                Self::pos(&self.along_z, (x * n + i) * n + j),
                Self::pos(&self.along_z, (x * n + i) * n + k),
            ) {
                if !self.mixed_ok(x, i, z, w) {
                    return false;
                }
            }
            // as [z, [x,y,z], [x,z,w]] with z = i
            if let (Some(y), Some(w)) = (
                Self::pos(&self.along_y, (x * n + i) * n + j),
                Self::pos(&self.along_z, (x * n + i) * n + k),
            ) {
                if !self.mixed_ok(x, y, i, w) {
                    return false;
                }
            }
            // as [w, [x,y,w], [x,z,w]] with w = i
            if let (Some(y), Some(z)) = (
                Self::pos(&self.along_y, (x * n + i) * n + j),
                Self::pos(&self.along_y, (x * n + i) * n + k),
            ) {
                if !self.mixed_ok(x, y, z, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Checks the entropic instances that became evaluable when layer
    /// `layer` was completed: all operands' first arguments lie in filled
    /// layers and at least one of them equals `layer`.
    fn entropic_ok_layer(&self, layer: usize) -> bool {
        let n = self.n;
        let c = &self.cells;
        let at = |x: usize, y: usize, z: usize| c[(x * n + y) * n + z] as usize;
        for x in 0..=layer {
            for y in 0..=layer {
                for z in 0..=layer {
                    let p = at(x, y, z);
                    if p > layer {
                        continue;
                    }
                    for u in 0..=layer {
                        for a in 0..=layer {
                            let s = at(x, u, a);
                            if s > layer || x.max(y).max(z).max(u).max(a).max(p).max(s) < layer {
                                continue;
                            }
                            for v in 0..n {
                                for b in 0..n {
                                    let t2 = at(y, v, b);
                                    for w in 0..n {
                                        let q = at(u, v, w);
                                        for cc in 0..n {
                                            let lhs = at(p, q, at(a, b, cc));
                                            let rhs = at(s, t2, at(z, w, cc));
                                            if lhs != rhs {
                                                return false;
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        true
    }

    /// Tries value `v` in the next cell; on success the cell stays filled.
    fn push(&mut self, v: usize) -> bool {
        let cell = self.filled;
        if !self.fits(cell, v) {
            return false;
        }
        self.set(cell, v);
        let n = self.n;
        let (i, j, k) = (cell / (n * n), (cell / n) % n, cell % n);
        let mut ok = self.mixed_ok_around(i, j, k);
        if ok && self.entropic && j == n - 1 && k == n - 1 {
            ok = self.entropic_ok_layer(i);
        }
        if !ok {
            self.unset(cell);
        }
        ok
    }

    fn pop(&mut self) {
        self.unset(self.filled - 1);
    }

    fn to_table(&self) -> TribracketTable {
        TribracketTable::new(self.n, self.cells.iter().map(|&v| v as Elem).collect())
            .expect("complete cube is in range")
    }

    /// Visits every completion of this state in depth-first order.
    pub fn complete(&mut self, visit: &mut dyn FnMut(&TribracketTable)) {
        let n = self.n;
        if self.filled == n * n * n {
            visit(&self.to_table());
            return;
        }
        for v in 0..n {
            if self.push(v) {
                self.complete(visit);
                self.pop();
            }
        }
    }

    /// All consistent states with exactly `depth` cells filled, in
    /// depth-first order.
    pub fn prefixes(&self, depth: usize) -> Vec<SearchState> {
        let mut out = Vec::new();
        let mut s = self.clone();
        s.collect_prefixes(depth, &mut out);
        out
    }

    fn collect_prefixes(&mut self, depth: usize, out: &mut Vec<SearchState>) {
        if self.filled >= depth || self.filled == self.n * self.n * self.n {
            out.push(self.clone());
            return;
        }
        for v in 0..self.n {
            if self.push(v) {
                self.collect_prefixes(depth, out);
                self.pop();
            }
        }
    }
}

/// Visits every tribracket of order `n` (raw tensors, not up to
/// isomorphism) in a fixed order, single-threaded.
pub fn for_each_tribracket(n: usize, filter: Filter, mut visit: impl FnMut(&TribracketTable)) {
    SearchState::new(n, filter).complete(&mut visit);
}

/// Number of leading cells fixed before the search is split across workers.
fn split_depth(n: usize) -> usize {
    // the first row of layer 0 has n! fillings
    n.min(6)
}

/// Runs `work` on each search subtree in parallel (on the current rayon
/// pool) and returns the per-subtree results in sequential order.
pub fn par_subtrees<R: Send>(n: usize, filter: Filter, work: impl Fn(SearchState) -> R + Sync) -> Vec<R> {
    let roots = SearchState::new(n, filter).prefixes(split_depth(n));
    roots.into_par_iter().map(&work).collect()
}

/// Every tribracket of order `n`, in the same order as the sequential
/// search regardless of the number of workers.
pub fn enumerate_tribrackets(n: usize, filter: Filter) -> Vec<TribracketTable> {
    par_subtrees(n, filter, |mut state| {
        let mut found = Vec::new();
        state.complete(&mut |t| found.push(t.clone()));
        found
    })
    .into_iter()
    .flatten()
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{is_entropic, validate};

    /// Every order-n tensor, checked directly against the axioms.
    fn brute_force(n: usize, filter: Filter) -> Vec<TribracketTable> {
        let cells = n * n * n;
        let total = n.pow(cells as u32);
        let mut out = Vec::new();
        for code in 0..total {
            let entries: Vec<Elem> = (0..cells)
                .map(|i| (code / n.pow((cells - 1 - i) as u32) % n) as Elem)
                .collect();
            let t = TribracketTable::new(n, entries).unwrap();
            let r = validate(&t);
            if r.is_tribracket() && (filter == Filter::All || r.entropic_ok) {
                out.push(t);
            }
        }
        out
    }

    #[test]
    fn trivial_orders() {
        assert_eq!(enumerate_tribrackets(0, Filter::All), vec![TribracketTable::empty()]);
        assert_eq!(enumerate_tribrackets(1, Filter::All), vec![TribracketTable::singleton()]);
    }

    #[test]
    fn order_two_matches_brute_force() {
        for filter in [Filter::All, Filter::EntropicOnly] {
            let mut fast = enumerate_tribrackets(2, filter);
            let mut slow = brute_force(2, filter);
            fast.sort();
            slow.sort();
            assert_eq!(fast, slow);
            assert_eq!(fast.len(), 2);
        }
    }

    #[test]
    fn order_three_raw_tables_are_valid() {
        let all = enumerate_tribrackets(3, Filter::All);
        assert_eq!(all.len(), 12);
        for t in &all {
            assert!(validate(t).is_tribracket());
            assert!(is_entropic(t));
        }
        assert_eq!(enumerate_tribrackets(3, Filter::EntropicOnly), all);
    }

    #[test]
    fn parallel_order_equals_sequential_order() {
        let mut seq = Vec::new();
        for_each_tribracket(4, Filter::All, |t| seq.push(t.clone()));
        assert_eq!(enumerate_tribrackets(4, Filter::All), seq);
    }
}
