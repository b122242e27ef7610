//! Crossing relations `d = [a, b, c]` between the regions around a crossing.

use std::fmt;
use std::str::FromStr;

use super::faces::RegionGraph;
use super::pd::{Diagram, Sign};
use crate::error::{Error, Result};

/// A region around a crossing, located relative to both strand orientations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Position {
    /// Left of both strands.
    Left,
    /// Right of both strands.
    Right,
    /// Between the two incoming half-strands.
    Behind,
    /// Between the two outgoing half-strands.
    Ahead,
}

impl Position {
    pub const ALL: [Position; 4] = [Position::Left, Position::Behind, Position::Ahead, Position::Right];

    /// The quadrant holding this position at a crossing of the given sign.
    pub fn quadrant(self, sign: Sign) -> usize {
        match (sign, self) {
            (Sign::Positive, Position::Right) => 0,
            (Sign::Positive, Position::Ahead) => 1,
            (Sign::Positive, Position::Left) => 2,
            (Sign::Positive, Position::Behind) => 3,
            (Sign::Negative, Position::Behind) => 0,
            (Sign::Negative, Position::Right) => 1,
            (Sign::Negative, Position::Ahead) => 2,
            (Sign::Negative, Position::Left) => 3,
        }
    }

    fn letter(self) -> char {
        match self {
            Position::Left => 'L',
            Position::Right => 'R',
            Position::Behind => 'B',
            Position::Ahead => 'A',
        }
    }
}

/// Which position fills each role `a, b, c, d`, per crossing sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ConventionTable {
    pub positive: Option<[Position; 4]>,
    pub negative: Option<[Position; 4]>,
}

impl ConventionTable {
    pub fn uniform(roles: [Position; 4]) -> Self {
        ConventionTable {
            positive: Some(roles),
            negative: Some(roles),
        }
    }

    pub fn roles(&self, sign: Sign) -> Result<[Position; 4]> {
        match sign {
            Sign::Positive => self.positive.ok_or(Error::MissingConvention("positive crossings")),
            Sign::Negative => self.negative.ok_or(Error::MissingConvention("negative crossings")),
        }
    }
}

/// `a` left of both strands, `d` right of both, `b` left of the
/// under-strand and right of the over-strand, `c` the remaining region.
/// Written `+:LBAR -:LABR`.
impl Default for ConventionTable {
    fn default() -> Self {
        ConventionTable {
            positive: Some([Position::Left, Position::Behind, Position::Ahead, Position::Right]),
            negative: Some([Position::Left, Position::Ahead, Position::Behind, Position::Right]),
        }
    }
}

/// Written as `+:<roles> -:<roles>`, each a word over `L B A R` giving
/// the positions of `a b c d` in order.
impl fmt::Display for ConventionTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = |r: Option<[Position; 4]>| match r {
            Some(r) => r.iter().map(|p| p.letter()).collect(),
            None => String::from("-"),
        };
        write!(f, "+:{} -:{}", word(self.positive), word(self.negative))
    }
}

impl FromStr for ConventionTable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: String| Error::Parse { line: 1, msg };
        let mut table = ConventionTable {
            positive: None,
            negative: None,
        };
        for field in s.split_whitespace() {
            let (sign, word) = field
                .split_once(':')
                .ok_or_else(|| bad(format!("convention field {field:?} needs a sign prefix")))?;
            let roles: Vec<Position> = word
                .chars()
                .map(|ch| match ch {
                    'L' => Ok(Position::Left),
                    'R' => Ok(Position::Right),
                    'B' => Ok(Position::Behind),
                    'A' => Ok(Position::Ahead),
                    _ => Err(bad(format!("unknown position {ch:?}"))),
                })
                .collect::<Result<_>>()?;
            let roles: [Position; 4] = roles
                .try_into()
                .map_err(|_| bad(format!("convention {word:?} needs four positions")))?;
            if Position::ALL.iter().any(|p| !roles.contains(p)) {
                return Err(bad(format!("convention {word:?} must use each of L, B, A, R once")));
            }
            match sign {
                "+" => table.positive = Some(roles),
                "-" => table.negative = Some(roles),
                _ => return Err(bad(format!("unknown crossing sign {sign:?}"))),
            }
        }
        Ok(table)
    }
}

/// The relation `d = [a, b, c]` at one crossing, with regions indexed as in
/// the region graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingRelation {
    pub crossing: usize,
    pub roles: [usize; 4],
}

impl CrossingRelation {
    pub fn holds(&self, bracket: impl Fn(usize, usize, usize) -> usize, colors: &[usize]) -> bool {
        let [a, b, c, d] = self.roles.map(|r| colors[r]);
        bracket(a, b, c) == d
    }
}

pub fn crossing_relations(
    d: &Diagram,
    regions: &RegionGraph,
    convention: &ConventionTable,
) -> Result<Vec<CrossingRelation>> {
    d.signs()
        .iter()
        .enumerate()
        .map(|(x, &sign)| {
            let roles = convention.roles(sign)?;
            Ok(CrossingRelation {
                crossing: x,
                roles: roles.map(|p| regions.quadrants[x][p.quadrant(sign)]),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::{extract_faces, parse_pd};

    #[test]
    fn kink_relation_repeats_a_region() {
        let d = parse_pd("X 1 2 2 1").unwrap();
        let r = extract_faces(&d).unwrap();
        let rel = crossing_relations(&d, &r, &ConventionTable::default()).unwrap();
        assert_eq!(rel.len(), 1);
        let mut roles = rel[0].roles;
        roles.sort_unstable();
        let mut quads = r.quadrants[0];
        quads.sort_unstable();
        assert_eq!(roles, quads);
        assert_eq!(roles.iter().collect::<std::collections::BTreeSet<_>>().len(), 3);
    }

    #[test]
    fn trefoil_relations() {
        let d = parse_pd("X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3").unwrap();
        let r = extract_faces(&d).unwrap();
        let rel = crossing_relations(&d, &r, &ConventionTable::default()).unwrap();
        assert_eq!(rel.len(), 3);
        for (x, rel) in rel.iter().enumerate() {
            let mut a = rel.roles;
            let mut b = r.quadrants[x];
            a.sort_unstable();
            b.sort_unstable();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn missing_sign_is_an_error() {
        let d = parse_pd("X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3").unwrap();
        let r = extract_faces(&d).unwrap();
        let half: ConventionTable = "+:LBAR".parse().unwrap();
        assert_eq!(
            crossing_relations(&d, &r, &half).unwrap_err(),
            Error::MissingConvention("negative crossings")
        );
    }

    #[test]
    fn convention_text_round_trip() {
        let c = ConventionTable::default();
        assert_eq!(c.to_string(), "+:LBAR -:LABR");
        assert_eq!(c.to_string().parse::<ConventionTable>().unwrap(), c);
        assert!("+:LLAR".parse::<ConventionTable>().is_err());
        assert!("*:LBAR".parse::<ConventionTable>().is_err());
        assert!("+:LBA".parse::<ConventionTable>().is_err());
    }
}
