use crate::algebra::TribracketTable;
use crate::error::{Error, Result};

/// A map between two tables, stored as its image array: element `i` of the
/// source goes to `image[i]` in the target.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Homomorphism {
    pub image: Vec<usize>,
}

impl Homomorphism {
    pub fn new(image: Vec<usize>) -> Self {
        Homomorphism { image }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    /// Precomposition `self ∘ phi`, where `phi` maps into this map's source.
    pub fn pull_back(&self, phi: &[usize]) -> Homomorphism {
        Homomorphism {
            image: phi.iter().map(|&t| self.image[t]).collect(),
        }
    }
}

/// True when `f` satisfies `f([x,y,z]) = [f x, f y, f z]` for all triples.
pub fn is_hom(f: &[usize], source: &TribracketTable, target: &TribracketTable) -> Result<bool> {
    if f.len() != source.order() {
        return Err(Error::Shape(format!(
            "image array has length {}, source has order {}",
            f.len(),
            source.order()
        )));
    }
    if let Some(&v) = f.iter().find(|&&v| v >= target.order()) {
        return Err(Error::OutOfRange {
            element: v,
            order: target.order(),
        });
    }
    let n = source.order();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if f[source.get(x, y, z)] != target.get(f[x], f[y], f[z]) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

const UNSET: usize = usize::MAX;

struct HomSearch<'a> {
    source: &'a TribracketTable,
    target: &'a TribracketTable,
    image: Vec<usize>,
    assigned: Vec<usize>,
    found: Vec<Homomorphism>,
}

impl HomSearch<'_> {
    /// Assigns `e ↦ v` and everything it forces. Returns false on a conflict;
    /// `assigned` then still lists every element set so far, for undo.
    fn assign(&mut self, e: usize, v: usize) -> bool {
        self.image[e] = v;
        self.assigned.push(e);
        let mut cursor = self.assigned.len() - 1;
        while cursor < self.assigned.len() {
            let fresh = self.assigned[cursor];
            cursor += 1;
            // every triple containing `fresh` whose operands are all known
            let known = self.assigned.clone();
            for &a in &known {
                for &b in &known {
                    for (x, y, z) in [(fresh, a, b), (a, fresh, b), (a, b, fresh)] {
                        let w = self.source.get(x, y, z);
                        let fw = self.target.get(self.image[x], self.image[y], self.image[z]);
                        if self.image[w] == UNSET {
                            self.image[w] = fw;
                            self.assigned.push(w);
                        } else if self.image[w] != fw {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        for e in self.assigned.drain(mark..) {
            self.image[e] = UNSET;
        }
    }

    fn run(&mut self, next: usize) {
        let n = self.source.order();
        let Some(e) = (next..n).find(|&e| self.image[e] == UNSET) else {
            self.found.push(Homomorphism::new(self.image.clone()));
            return;
        };
        for v in 0..self.target.order() {
            let mark = self.assigned.len();
            if self.assign(e, v) {
                self.run(e + 1);
            }
            self.undo_to(mark);
        }
    }
}

/// All homomorphisms `source → target`, sorted lexicographically by image.
///
/// The homset into the empty tribracket is taken to be empty for every
/// source, the empty one included; from the empty source into a nonempty
/// target there is exactly one map, the empty map.
pub fn enumerate_homs(source: &TribracketTable, target: &TribracketTable) -> Vec<Homomorphism> {
    if target.is_empty() {
        return Vec::new();
    }
    let mut search = HomSearch {
        source,
        target,
        image: vec![UNSET; source.order()],
        assigned: Vec::new(),
        found: Vec::new(),
    };
    search.run(0);
    search.found.sort();
    search.found
}
