//! Complementary regions of a diagram.
//!
//! Quadrant `i` of a crossing lies between slots `i` and `i + 1`
//! (counterclockwise), so quadrants 0..4 are south-east, north-east,
//! north-west, south-west when the incoming under-strand enters from the
//! south.

use std::fmt;

use super::pd::Diagram;
use crate::error::{Error, Result};

/// Side of an oriented edge, looking along its orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "L",
            Side::Right => "R",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionGraph {
    /// Each region as the cyclic sequence of `(edge, side)` incidences met
    /// while walking its boundary. Edges are 0-based.
    pub regions: Vec<Vec<(usize, Side)>>,
    /// `quadrants[x][i]` is the region containing quadrant `i` of crossing `x`.
    pub quadrants: Vec<[usize; 4]>,
}

impl RegionGraph {
    pub fn region_count(&self) -> usize {
        self.regions.len()
    }
}

/// Traces the faces of the diagram's planar embedding.
///
/// Leaving quadrant `(x, i)` along the edge in slot `i + 1` with the face on
/// the right, the walk arrives at the far end `(y, j)` of that edge inside
/// quadrant `(y, j)`.
pub fn extract_faces(d: &Diagram) -> Result<RegionGraph> {
    let c = d.crossing_count();
    if c == 0 {
        return Ok(RegionGraph {
            regions: vec![Vec::new(), Vec::new()],
            quadrants: Vec::new(),
        });
    }
    let xs = d.crossings();
    let mut places = vec![Vec::with_capacity(2); d.edge_count()];
    for (x, slots) in xs.iter().enumerate() {
        for (s, &e) in slots.iter().enumerate() {
            places[e].push((x, s));
        }
    }
    let far_end = |x: usize, s: usize| {
        let p = &places[xs[x][s]];
        if p[0] == (x, s) {
            p[1]
        } else {
            p[0]
        }
    };

    let mut face_of = vec![[usize::MAX; 4]; c];
    let mut faces: Vec<Vec<(usize, Side)>> = Vec::new();
    for x0 in 0..c {
        for i0 in 0..4 {
            if face_of[x0][i0] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut boundary = Vec::new();
            let (mut x, mut i) = (x0, i0);
            loop {
                face_of[x][i] = id;
                let s = (i + 1) % 4;
                let side = if d.is_incoming(x, s) { Side::Left } else { Side::Right };
                boundary.push((xs[x][s], side));
                (x, i) = far_end(x, s);
                if (x, i) == (x0, i0) {
                    break;
                }
                if face_of[x][i] != usize::MAX {
                    return Err(Error::MalformedEmbedding(format!(
                        "diagram {}: face walk from crossing {} re-entered another face",
                        d.name(),
                        x0 + 1
                    )));
                }
            }
            faces.push(boundary);
        }
    }
    if faces.len() != c + 2 {
        return Err(Error::MalformedEmbedding(format!(
            "diagram {}: {} faces for {} crossings, expected {} (not planar)",
            d.name(),
            faces.len(),
            c,
            c + 2
        )));
    }

    // number regions by their least incidence
    let mut order: Vec<usize> = (0..faces.len()).collect();
    order.sort_by_key(|&f| faces[f].iter().min().copied());
    let mut renumber = vec![0; faces.len()];
    for (new, &old) in order.iter().enumerate() {
        renumber[old] = new;
    }
    let regions = order.iter().map(|&f| faces[f].clone()).collect();
    let quadrants = face_of.iter().map(|q| q.map(|f| renumber[f])).collect();
    Ok(RegionGraph { regions, quadrants })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::parse_pd;
    use std::collections::BTreeSet;

    #[test]
    fn kink_has_three_regions() {
        let d = parse_pd("X 1 2 2 1").unwrap();
        let r = extract_faces(&d).unwrap();
        assert_eq!(r.region_count(), 3);
        let q = r.quadrants[0];
        assert_eq!(q[0], q[2]);
        assert_eq!(BTreeSet::from(q).len(), 3);
    }

    #[test]
    fn euler_counts() {
        let trefoil = parse_pd("X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3").unwrap();
        assert_eq!(extract_faces(&trefoil).unwrap().region_count(), 5);
        let eight = parse_pd("X 4 2 5 1 / X 8 6 1 5 / X 6 3 7 4 / X 2 7 3 8").unwrap();
        assert_eq!(extract_faces(&eight).unwrap().region_count(), 6);
        assert_eq!(extract_faces(&Diagram::unknot("u")).unwrap().region_count(), 2);
    }

    #[test]
    fn every_incidence_once() {
        let d = parse_pd("X 4 2 5 1 / X 8 6 1 5 / X 6 3 7 4 / X 2 7 3 8").unwrap();
        let r = extract_faces(&d).unwrap();
        let all: Vec<_> = r.regions.iter().flatten().copied().collect();
        let set: BTreeSet<_> = all.iter().copied().collect();
        assert_eq!(all.len(), set.len());
        assert_eq!(set.len(), 2 * d.edge_count());
    }

    #[test]
    fn crossing_order_does_not_matter() {
        let d = parse_pd("X 4 2 5 1 / X 8 6 1 5 / X 6 3 7 4 / X 2 7 3 8").unwrap();
        let r = extract_faces(&d).unwrap();
        let order = [2, 0, 3, 1];
        let r2 = extract_faces(&d.reorder_crossings(&order)).unwrap();
        let sets = |g: &RegionGraph| -> Vec<BTreeSet<(usize, Side)>> {
            g.regions.iter().map(|f| f.iter().copied().collect()).collect()
        };
        assert_eq!(sets(&r), sets(&r2));
        for (i, &o) in order.iter().enumerate() {
            assert_eq!(r2.quadrants[i], r.quadrants[o]);
        }
    }

    #[test]
    fn nonplanar_code_is_rejected() {
        // labels valid and orientable, but the cyclic order is not planar
        let d = parse_pd("X 1 2 3 1 / X 4 2 4 3").unwrap();
        assert!(matches!(extract_faces(&d), Err(Error::MalformedEmbedding(_))));
    }
}
