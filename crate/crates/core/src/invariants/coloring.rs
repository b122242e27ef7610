use crate::algebra::{Divisions, Slot, TribracketTable};
use crate::diagrams::{crossing_relations, extract_faces, ConventionTable, CrossingRelation, Diagram};
use crate::error::Result;

const UNSET: usize = usize::MAX;

/// An assignment of tribracket elements to the regions of a diagram that
/// satisfies every crossing relation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coloring {
    pub assignment: Vec<usize>,
}

struct Search<'a> {
    x: &'a TribracketTable,
    div: Divisions,
    relations: Vec<CrossingRelation>,
    touching: Vec<Vec<usize>>,
    colors: Vec<usize>,
    trail: Vec<usize>,
    found: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn set(&mut self, region: usize, value: usize) {
        self.colors[region] = value;
        self.trail.push(region);
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let r = self.trail.pop().unwrap();
            self.colors[r] = UNSET;
        }
    }

    /// Applies every relation with at most one unknown role until nothing
    /// changes. Returns false on a contradiction.
    fn propagate(&mut self, mut queue: Vec<usize>) -> bool {
        while let Some(region) = queue.pop() {
            for k in 0..self.touching[region].len() {
                let rel = self.relations[self.touching[region][k]];
                let c = rel.roles.map(|r| self.colors[r]);
                let unknown: Vec<usize> = (0..4).filter(|&i| c[i] == UNSET).collect();
                match unknown.as_slice() {
                    [] => {
                        if self.x.get(c[0], c[1], c[2]) != c[3] {
                            return false;
                        }
                    }
                    &[i] => {
                        let v = match i {
                            0 => self.div.solve(Slot::Left, c[1], c[2], c[3]),
                            1 => self.div.solve(Slot::Middle, c[0], c[2], c[3]),
                            2 => self.div.solve(Slot::Right, c[0], c[1], c[3]),
                            _ => self.x.get(c[0], c[1], c[2]),
                        };
                        let r = rel.roles[i];
                        self.set(r, v);
                        queue.push(r);
                    }
                    _ => {}
                }
            }
        }
        true
    }

    /// The unset region sharing a relation with the most known roles.
    fn pick(&self) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        for r in (0..self.colors.len()).filter(|&r| self.colors[r] == UNSET) {
            let score = self.touching[r]
                .iter()
                .map(|&k| {
                    self.relations[k]
                        .roles
                        .iter()
                        .filter(|&&q| self.colors[q] != UNSET)
                        .count()
                })
                .max()
                .unwrap_or(0);
            if best.is_none_or(|(s, _)| score > s) {
                best = Some((score, r));
            }
        }
        best.map(|(_, r)| r)
    }

    fn run(&mut self) {
        let Some(region) = self.pick() else {
            self.found.push(self.colors.clone());
            return;
        };
        let mark = self.trail.len();
        for v in 0..self.x.order() {
            self.set(region, v);
            if self.propagate(vec![region]) {
                self.run();
            }
            self.undo_to(mark);
        }
    }
}

/// All colorings of `d` by `x` under the given crossing convention, sorted
/// by assignment.
pub fn enumerate_colorings_with(d: &Diagram, x: &TribracketTable, convention: &ConventionTable) -> Result<Vec<Coloring>> {
    let regions = extract_faces(d)?;
    let relations = crossing_relations(d, &regions, convention)?;
    let div = Divisions::new(x)?;
    let mut touching = vec![Vec::new(); regions.region_count()];
    for (k, rel) in relations.iter().enumerate() {
        let mut rs = rel.roles.to_vec();
        rs.sort_unstable();
        rs.dedup();
        for r in rs {
            touching[r].push(k);
        }
    }
    let mut search = Search {
        x,
        div,
        relations,
        touching,
        colors: vec![UNSET; regions.region_count()],
        trail: Vec::new(),
        found: Vec::new(),
    };
    search.run();
    let mut out: Vec<Coloring> = search
        .found
        .into_iter()
        .map(|assignment| Coloring { assignment })
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// All colorings of `d` by `x` under the default crossing convention.
pub fn enumerate_colorings(d: &Diagram, x: &TribracketTable) -> Result<Vec<Coloring>> {
    enumerate_colorings_with(d, x, &ConventionTable::default())
}

/// The number of colorings of `d` by `x`.
pub fn counting_invariant(d: &Diagram, x: &TribracketTable) -> Result<usize> {
    Ok(enumerate_colorings(d, x)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::make_alexander;
    use crate::diagrams::parse_pd;

    const TREFOIL: &str = "X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3";

    fn t21() -> TribracketTable {
        "2\n1 2\n2 1\n\n2 1\n1 2\n".parse().unwrap()
    }

    fn brute_force(d: &Diagram, x: &TribracketTable) -> Vec<Coloring> {
        let regions = extract_faces(d).unwrap();
        let rels = crossing_relations(d, &regions, &ConventionTable::default()).unwrap();
        let (n, m) = (x.order(), regions.region_count());
        let mut out = Vec::new();
        let mut a = vec![0; m];
        'outer: loop {
            if rels.iter().all(|r| r.holds(|p, q, s| x.get(p, q, s), &a)) {
                out.push(Coloring { assignment: a.clone() });
            }
            for i in (0..m).rev() {
                a[i] += 1;
                if a[i] < n {
                    continue 'outer;
                }
                a[i] = 0;
            }
            break;
        }
        out
    }

    #[test]
    fn trefoil_counts() {
        let d = parse_pd(TREFOIL).unwrap();
        assert_eq!(counting_invariant(&d, &t21()).unwrap(), 4);
        assert_eq!(counting_invariant(&d, &make_alexander(3, 1, 1).unwrap()).unwrap(), 9);
    }

    #[test]
    fn kink_matches_brute_force() {
        let d = parse_pd("X 1 2 2 1").unwrap();
        for x in [t21(), make_alexander(3, 2, 2).unwrap(), make_alexander(3, 1, 2).unwrap()] {
            let got = enumerate_colorings(&d, &x).unwrap();
            assert_eq!(got.len(), x.order() * x.order());
            assert_eq!(got, brute_force(&d, &x));
        }
    }

    #[test]
    fn crossingless_unknot() {
        let x = make_alexander(3, 1, 1).unwrap();
        assert_eq!(counting_invariant(&Diagram::unknot("u"), &x).unwrap(), 9);
    }

    #[test]
    fn output_is_sorted_and_valid() {
        let d = parse_pd("X 4 2 5 1 / X 8 6 1 5 / X 6 3 7 4 / X 2 7 3 8").unwrap();
        let x = make_alexander(3, 2, 1).unwrap();
        let got = enumerate_colorings(&d, &x).unwrap();
        assert!(got.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(got, brute_force(&d, &x));
    }
}
