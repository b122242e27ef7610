//! Canonical forms and isomorphism certificates.

use crate::algebra::{closure, idempotent_number, Elem, TribracketTable};
use crate::error::{Error, Result};

/// Default largest order accepted by [`canonical_form`].
pub const DEFAULT_CANON_BOUND: usize = 10;

/// A bijection `permutation[a] = b` from the first table onto the second
/// such that relabeling the first tensor by it yields the second.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoCertificate {
    pub permutation: Vec<usize>,
}

const UNSET: usize = usize::MAX;

/// Branch-and-bound search for the lexicographically smallest relabeled
/// tensor. New labels are handed out in order; a branch happens only when a
/// coordinate needs a label that has not been assigned yet, and an entry
/// whose value has no label yet must take the next free one.
struct Canonizer<'a> {
    table: &'a TribracketTable,
    n: usize,
    old_of_new: Vec<usize>,
    new_of_old: Vec<usize>,
    current: Vec<Elem>,
    best: Option<Vec<Elem>>,
    best_perm: Vec<usize>,
    /// Automorphisms found as pairs of labelings giving equal tensors.
    autos: Vec<Vec<usize>>,
}

const MAX_AUTOS: usize = 64;

impl Canonizer<'_> {
    fn push_label(&mut self, old: usize) -> usize {
        let label = self.old_of_new.len();
        self.old_of_new.push(old);
        self.new_of_old[old] = label;
        label
    }

    fn undo_to(&mut self, mark: usize) {
        while self.old_of_new.len() > mark {
            let old = self.old_of_new.pop().unwrap();
            self.new_of_old[old] = UNSET;
        }
    }

    /// `a` and `b` lie in one orbit of the known automorphisms that fix
    /// every labeled element.
    fn same_orbit(&self, a: usize, b: usize) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for g in &self.autos {
            if self.old_of_new.iter().any(|&o| g[o] != o) {
                continue;
            }
            for (x, &y) in g.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                parent[rx] = ry;
            }
        }
        find(&mut parent, a) == find(&mut parent, b)
    }

    fn search(&mut self, start: usize, mut less: bool) {
        let n = self.n;
        let total = n * n * n;
        let mark = self.old_of_new.len();
        let mut p = start;
        while p < total {
            let (x, y, z) = (p / (n * n), (p / n) % n, p % n);
            if x.max(y).max(z) == self.old_of_new.len() {
                let branch_mark = self.old_of_new.len();
                let mut tried: Vec<usize> = Vec::new();
                for old in 0..n {
                    if self.new_of_old[old] == UNSET {
                        if tried.iter().any(|&t| self.same_orbit(t, old)) {
                            continue;
                        }
                        tried.push(old);
                        // an earlier sibling may have lowered `best` to share this prefix
                        let still_less = less && self.best.as_ref().is_none_or(|b| b[..p] != self.current[..p]);
                        self.push_label(old);
                        self.search(p, still_less);
                        self.undo_to(branch_mark);
                    }
                }
                self.undo_to(mark);
                return;
            }
            let v_old = self
                .table
                .get(self.old_of_new[x], self.old_of_new[y], self.old_of_new[z]);
            let v_new = match self.new_of_old[v_old] {
                UNSET => self.push_label(v_old),
                l => l,
            } as Elem;
            if !less {
                match &self.best {
                    Some(best) if v_new > best[p] => {
                        self.undo_to(mark);
                        return;
                    }
                    Some(best) if v_new == best[p] => {}
                    _ => less = true,
                }
            }
            self.current[p] = v_new;
            p += 1;
        }
        if less || self.best.is_none() {
            self.best = Some(self.current.clone());
            self.best_perm = self.new_of_old.clone();
        } else if self.autos.len() < MAX_AUTOS {
            let mut best_old_of_new = vec![0; n];
            for (old, &new) in self.best_perm.iter().enumerate() {
                best_old_of_new[new] = old;
            }
            let g: Vec<usize> = self.new_of_old.iter().map(|&new| best_old_of_new[new]).collect();
            if g.iter().enumerate().any(|(x, &y)| x != y) {
                self.autos.push(g);
            }
        }
        self.undo_to(mark);
    }
}

/// The canonical relabeling of `t` (a permutation `old ↦ new`) and the
/// resulting tensor, without an order bound.
pub fn canonical_labeling(t: &TribracketTable) -> (Vec<usize>, TribracketTable) {
    let n = t.order();
    let mut c = Canonizer {
        table: t,
        n,
        old_of_new: Vec::with_capacity(n),
        new_of_old: vec![UNSET; n],
        current: vec![0; n * n * n],
        best: None,
        best_perm: Vec::new(),
        autos: Vec::new(),
    };
    c.search(0, false);
    let entries = c.best.expect("search visits at least one leaf");
    let table = TribracketTable::new(n, entries).expect("relabeling stays in range");
    (c.best_perm, table)
}

/// Lexicographically smallest flattened tensor over all relabelings, with
/// the default order bound.
pub fn canonical_form(t: &TribracketTable) -> Result<TribracketTable> {
    canonical_form_bounded(t, DEFAULT_CANON_BOUND)
}

pub fn canonical_form_bounded(t: &TribracketTable, bound: usize) -> Result<TribracketTable> {
    if t.order() > bound {
        return Err(Error::OrderAboveBound {
            order: t.order(),
            bound,
        });
    }
    Ok(canonical_labeling(t).1)
}

/// Per-element isomorphism invariants: idempotence and a few counts of
/// one-variable identities.
fn element_profile(t: &TribracketTable, x: usize) -> [usize; 6] {
    let n = t.order();
    let mut p = [usize::from(t.get(x, x, x) == x), 0, 0, 0, 0, 0];
    for y in 0..n {
        p[1] += usize::from(t.get(x, y, y) == x);
        p[2] += usize::from(t.get(y, x, y) == x);
        p[3] += usize::from(t.get(y, y, x) == x);
        p[4] += usize::from(t.get(x, x, y) == y);
        p[5] += usize::from(t.get(y, y, y) == x);
    }
    p
}

fn profiles(t: &TribracketTable) -> Vec<[usize; 6]> {
    (0..t.order()).map(|x| element_profile(t, x)).collect()
}

/// Greedy generating sequence, preferring elements whose profile is rare in
/// the other table so that few candidate images exist.
fn generators(t: &TribracketTable, rarity: impl Fn(usize) -> usize) -> Vec<usize> {
    let n = t.order();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (rarity(x), x));
    let mut gens = Vec::new();
    let mut covered = vec![false; n];
    let mut count = 0;
    for x in order {
        if count == n {
            break;
        }
        if covered[x] {
            continue;
        }
        gens.push(x);
        let span = closure(t, &gens).expect("generators are in range");
        count = span.len();
        covered.fill(false);
        for e in span {
            covered[e] = true;
        }
    }
    gens
}

struct IsoSearch<'a> {
    a: &'a TribracketTable,
    b: &'a TribracketTable,
    pa: Vec<[usize; 6]>,
    pb: Vec<[usize; 6]>,
    gens: Vec<usize>,
}

impl IsoSearch<'_> {
    /// Extends the partial map through the bracket until closed. Returns
    /// false if it stops being a well-defined injective homomorphism.
    fn propagate(&self, f: &mut [usize], g: &mut [usize], known: &mut Vec<usize>, mut done: usize) -> bool {
        while done < known.len() {
            let frontier = known.len();
            for i in 0..frontier {
                for j in 0..frontier {
                    for k in 0..frontier {
                        if i < done && j < done && k < done {
                            continue;
                        }
                        let (x, y, z) = (known[i], known[j], known[k]);
                        let w = self.a.get(x, y, z);
                        let fw = self.b.get(f[x], f[y], f[z]);
                        if f[w] == UNSET {
                            if g[fw] != UNSET || self.pa[w] != self.pb[fw] {
                                return false;
                            }
                            f[w] = fw;
                            g[fw] = w;
                            known.push(w);
                        } else if f[w] != fw {
                            return false;
                        }
                    }
                }
            }
            done = frontier;
        }
        true
    }

    fn run(&self, depth: usize, f: &[usize], g: &[usize], known: &[usize]) -> Option<Vec<usize>> {
        if depth == self.gens.len() {
            return Some(f.to_vec());
        }
        let x = self.gens[depth];
        if f[x] != UNSET {
            return self.run(depth + 1, f, g, known);
        }
        for y in 0..self.b.order() {
            if g[y] != UNSET || self.pa[x] != self.pb[y] {
                continue;
            }
            let (mut f2, mut g2, mut known2) = (f.to_vec(), g.to_vec(), known.to_vec());
            f2[x] = y;
            g2[y] = x;
            let done = known2.len();
            known2.push(x);
            if self.propagate(&mut f2, &mut g2, &mut known2, done) {
                if let Some(found) = self.run(depth + 1, &f2, &g2, &known2) {
                    return Some(found);
                }
            }
        }
        None
    }
}

/// Finds an isomorphism `a → b` if one exists.
///
/// Cheap invariants (order, idempotent number, sorted element profiles) are
/// compared first; the search then maps a generating sequence of `a` and
/// extends each choice through the bracket.
pub fn are_isomorphic(a: &TribracketTable, b: &TribracketTable) -> Option<IsoCertificate> {
    if a.order() != b.order() || idempotent_number(a) != idempotent_number(b) {
        return None;
    }
    let n = a.order();
    let pa = profiles(a);
    let pb = profiles(b);
    let (mut sa, mut sb) = (pa.clone(), pb.clone());
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    let gens = generators(a, |x| pb.iter().filter(|&&p| p == pa[x]).count());
    let search = IsoSearch { a, b, pa, pb, gens };
    let f = vec![UNSET; n];
    let g = vec![UNSET; n];
    let perm = search.run(0, &f, &g, &[])?;
    debug_assert_eq!(a.unnamed().relabel(&perm).ok().as_ref(), Some(&b.unnamed()));
    Some(IsoCertificate { permutation: perm })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::make_alexander;
    use crate::enumeration::{enumerate_tribrackets, Filter};

    fn t21() -> TribracketTable {
        "2\n1 2\n2 1\n\n2 1\n1 2\n".parse().unwrap()
    }

    fn t22() -> TribracketTable {
        "2\n2 1\n1 2\n\n1 2\n2 1\n".parse().unwrap()
    }

    #[test]
    fn distinct_order_two_classes() {
        assert_ne!(canonical_form(&t21()).unwrap(), canonical_form(&t22()).unwrap());
        assert!(are_isomorphic(&t21(), &t22()).is_none());
    }

    #[test]
    fn self_isomorphism() {
        let t = make_alexander(5, 2, 3).unwrap();
        let cert = are_isomorphic(&t, &t).unwrap();
        assert_eq!(t.relabel(&cert.permutation).unwrap(), t);
    }

    #[test]
    fn bound_is_enforced() {
        let t = make_alexander(11, 2, 3).unwrap();
        assert_eq!(
            canonical_form(&t).unwrap_err(),
            Error::OrderAboveBound { order: 11, bound: 10 }
        );
        assert_eq!(
            canonical_form_bounded(&t21(), 1).unwrap_err(),
            Error::OrderAboveBound { order: 2, bound: 1 }
        );
        assert!(canonical_form_bounded(&t, 11).is_ok());
    }

    /// Smallest relabeled tensor, by Heap's algorithm over all relabelings.
    fn exhaustive_minimum(t: &TribracketTable) -> Vec<Elem> {
        fn heap(k: usize, p: &mut Vec<usize>, t: &TribracketTable, best: &mut Option<Vec<Elem>>) {
            if k <= 1 {
                let e = t.relabel(p).unwrap().entries().to_vec();
                if best.as_ref().is_none_or(|b| e < *b) {
                    *best = Some(e);
                }
                return;
            }
            for i in 0..k {
                heap(k - 1, p, t, best);
                let j = if k.is_multiple_of(2) { i } else { 0 };
                p.swap(j, k - 1);
            }
        }
        let mut best = None;
        let mut perm: Vec<usize> = (0..t.order()).collect();
        heap(t.order(), &mut perm, t, &mut best);
        best.unwrap()
    }

    #[test]
    fn canonical_form_matches_exhaustive_minimum() {
        let t = make_alexander(4, 3, 1).unwrap();
        assert_eq!(canonical_form(&t).unwrap().entries(), exhaustive_minimum(&t).as_slice());
    }

    #[test]
    fn canonical_form_is_minimal_on_every_small_tribracket() {
        for n in 1..=4 {
            for t in enumerate_tribrackets(n, Filter::All) {
                assert_eq!(
                    canonical_form(&t).unwrap().entries(),
                    exhaustive_minimum(&t).as_slice(),
                    "{:?}",
                    t.entries()
                );
            }
        }
    }

    #[test]
    fn empty_and_singleton() {
        assert_eq!(canonical_form(&TribracketTable::empty()).unwrap(), TribracketTable::empty());
        assert!(are_isomorphic(&TribracketTable::empty(), &TribracketTable::empty()).is_some());
        assert_eq!(
            canonical_form(&TribracketTable::singleton()).unwrap(),
            TribracketTable::singleton()
        );
    }
}
