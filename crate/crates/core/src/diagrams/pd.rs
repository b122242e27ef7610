//! Oriented diagrams from planar-diagram (PD) codes.
//!
//! Each crossing lists its four edge labels counterclockwise, starting at
//! the incoming under-strand. Slot 0 is the incoming under-strand, slot 2 the
//! outgoing under-strand, slots 1 and 3 the over-strand.

use std::fmt;

use crate::error::{Error, PdError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

/// An oriented link diagram. Edge labels are stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    name: String,
    crossings: Vec<[usize; 4]>,
    /// `incoming[x][s]`: the strand enters crossing `x` through slot `s`.
    incoming: Vec<[bool; 4]>,
    signs: Vec<Sign>,
    components: usize,
}

impl Diagram {
    /// The crossingless diagram of the unknot.
    pub fn unknot(name: impl Into<String>) -> Self {
        Diagram {
            name: name.into(),
            crossings: Vec::new(),
            incoming: Vec::new(),
            signs: Vec::new(),
            components: 1,
        }
    }

    /// Validates a crossing list (1-based labels) and derives orientations,
    /// signs, and components.
    pub fn from_crossings(name: impl Into<String>, crossings: &[[usize; 4]]) -> std::result::Result<Self, PdError> {
        let name = name.into();
        if crossings.is_empty() {
            return Ok(Self::unknot(name));
        }
        let c = crossings.len();
        let edges = 2 * c;

        let mut count = std::collections::BTreeMap::<usize, usize>::new();
        for x in crossings {
            for &e in x {
                *count.entry(e).or_default() += 1;
            }
        }
        if let Some((&edge, &k)) = count.iter().find(|(_, &k)| k != 2) {
            return Err(PdError::Multiplicity { name, edge, count: k });
        }
        if let Some(&edge) = count.keys().find(|&&e| e == 0 || e > edges) {
            return Err(PdError::LabelRange { name, edge, max: edges });
        }
        let crossings: Vec<[usize; 4]> = crossings.iter().map(|x| x.map(|e| e - 1)).collect();

        // occurrences[e] = the two (crossing, slot) places edge e attaches
        let mut occurrences = vec![Vec::with_capacity(2); edges];
        for (xi, x) in crossings.iter().enumerate() {
            for (s, &e) in x.iter().enumerate() {
                occurrences[e].push((xi, s));
            }
        }
        let other_end = |e: usize, here: (usize, usize)| {
            let occ = &occurrences[e];
            if occ[0] == here {
                occ[1]
            } else {
                occ[0]
            }
        };

        // walk each component, starting where possible at an incoming under-strand
        let mut visited = vec![[false; 4]; c];
        let mut incoming = vec![[false; 4]; c];
        let mut walks: Vec<Vec<usize>> = Vec::new();
        let starts = (0..c)
            .map(|x| (x, 0))
            .chain((0..c).flat_map(|x| [(x, 1), (x, 3)]))
            .collect::<Vec<_>>();
        for start in starts {
            if visited[start.0][start.1] {
                continue;
            }
            let mut walk = Vec::new();
            let mut at = start;
            loop {
                let (x, s) = at;
                if s == 2 {
                    return Err(PdError::Orientation { name, crossing: x + 1 });
                }
                let out = (s + 2) % 4;
                if visited[x][s] || visited[x][out] {
                    return Err(PdError::Orientation { name, crossing: x + 1 });
                }
                visited[x][s] = true;
                visited[x][out] = true;
                incoming[x][s] = true;
                let e = crossings[x][out];
                walk.push(e);
                at = other_end(e, (x, out));
                if at == start {
                    break;
                }
            }
            walks.push(walk);
        }

        for walk in &walks {
            check_consecutive(&name, walk)?;
        }

        // connectivity of the 4-valent graph
        let mut reached = vec![false; c];
        let mut stack = vec![0];
        reached[0] = true;
        while let Some(x) = stack.pop() {
            for &e in &crossings[x] {
                for &(y, _) in &occurrences[e] {
                    if !reached[y] {
                        reached[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        if let Some(x) = reached.iter().position(|r| !r) {
            return Err(PdError::Disconnected { name, crossing: x + 1 });
        }

        let signs = incoming
            .iter()
            .map(|inc| if inc[3] { Sign::Positive } else { Sign::Negative })
            .collect();
        Ok(Diagram {
            name,
            crossings,
            incoming,
            signs,
            components: walks.len(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        2 * self.crossings.len()
    }

    /// 0-based edge labels at each crossing, counterclockwise from the
    /// incoming under-strand.
    pub fn crossings(&self) -> &[[usize; 4]] {
        &self.crossings
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn components(&self) -> usize {
        self.components
    }

    /// The strand enters crossing `x` through slot `s`.
    pub fn is_incoming(&self, x: usize, s: usize) -> bool {
        self.incoming[x][s]
    }

    /// The same diagram with its crossings listed in a different order:
    /// crossing `i` of the result is crossing `order[i]` of `self`.
    pub fn reorder_crossings(&self, order: &[usize]) -> Diagram {
        Diagram {
            name: self.name.clone(),
            crossings: order.iter().map(|&i| self.crossings[i]).collect(),
            incoming: order.iter().map(|&i| self.incoming[i]).collect(),
            signs: order.iter().map(|&i| self.signs[i]).collect(),
            components: self.components,
        }
    }
}

/// Labels along a component must run through a contiguous range in
/// steps of +1 (or all −1), wrapping once.
fn check_consecutive(name: &str, walk: &[usize]) -> std::result::Result<(), PdError> {
    let len = walk.len();
    if len <= 2 {
        let lo = *walk.iter().min().unwrap();
        let hi = *walk.iter().max().unwrap();
        if hi - lo + 1 == len {
            return Ok(());
        }
    }
    let lo = *walk.iter().min().unwrap();
    let hi = *walk.iter().max().unwrap();
    let bad = || PdError::NonConsecutive {
        name: name.to_string(),
        detail: format!(
            "component through edges {}",
            walk.iter().map(|e| (e + 1).to_string()).collect::<Vec<_>>().join(",")
        ),
    };
    if hi - lo + 1 != len {
        return Err(bad());
    }
    let step = |a: usize, b: usize| -> Option<i8> {
        let up = if a == hi { lo } else { a + 1 };
        let down = if a == lo { hi } else { a - 1 };
        if b == up {
            Some(1)
        } else if b == down {
            Some(-1)
        } else {
            None
        }
    };
    let first = step(walk[0], walk[1 % len]).ok_or_else(bad)?;
    for i in 0..len {
        if step(walk[i], walk[(i + 1) % len]) != Some(first) {
            return Err(bad());
        }
    }
    Ok(())
}

fn parse_crossing_line(line: &str, lineno: usize) -> std::result::Result<[usize; 4], PdError> {
    let mut toks = line.split_whitespace();
    let syntax = |msg: String| PdError::Syntax { line: lineno, msg };
    match toks.next() {
        Some("X") => {}
        other => return Err(syntax(format!("expected `X a b c d`, found {:?}", other.unwrap_or("")))),
    }
    let labels: Vec<usize> = toks
        .map(|t| t.parse::<usize>().map_err(|_| syntax(format!("bad edge label {t:?}"))))
        .collect::<std::result::Result<_, _>>()?;
    labels
        .try_into()
        .map_err(|v: Vec<usize>| syntax(format!("crossing needs 4 labels, found {}", v.len())))
}

/// Parses a PD file: records separated by blank lines, each a `name <id>`
/// header followed by `X a b c d` lines. `#` starts a comment line.
pub fn parse_pd_file(text: &str) -> Result<Vec<Diagram>> {
    let mut diagrams = Vec::new();
    let mut current: Option<(String, usize, Vec<[usize; 4]>)> = None;
    let mut finish = |rec: Option<(String, usize, Vec<[usize; 4]>)>| -> Result<()> {
        if let Some((name, _, xs)) = rec {
            diagrams.push(Diagram::from_crossings(name, &xs)?);
        }
        Ok(())
    };
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            finish(current.take())?;
            continue;
        }
        if let Some(rest) = line.strip_prefix("name") {
            if !rest.starts_with(char::is_whitespace) || rest.trim().is_empty() || rest.split_whitespace().count() != 1 {
                return Err(PdError::Syntax { line: lineno, msg: "expected `name <identifier>`".into() }.into());
            }
            if current.is_some() {
                return Err(PdError::Syntax {
                    line: lineno,
                    msg: "a new record must be preceded by a blank line".into(),
                }
                .into());
            }
            current = Some((rest.trim().to_string(), lineno, Vec::new()));
            continue;
        }
        match current.as_mut() {
            Some((_, _, xs)) => xs.push(parse_crossing_line(line, lineno)?),
            None => {
                return Err(PdError::Syntax {
                    line: lineno,
                    msg: "crossing line outside a record (missing `name <identifier>`)".into(),
                }
                .into())
            }
        }
    }
    finish(current.take())?;
    if diagrams.is_empty() {
        return Err(PdError::Empty.into());
    }
    Ok(diagrams)
}

/// Parses a single diagram. Accepts either one PD record or a bare list of
/// crossings, with `/` allowed as a crossing separator.
pub fn parse_pd(text: &str) -> Result<Diagram> {
    let normalized = text.replace('/', "\n");
    let body: Vec<&str> = normalized
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    if body.is_empty() {
        return Err(PdError::Empty.into());
    }
    if body[0].starts_with("name") {
        let mut diagrams = parse_pd_file(&body.join("\n"))?;
        if diagrams.len() != 1 {
            return Err(Error::Pd(PdError::Syntax { line: 1, msg: "expected a single record".into() }));
        }
        return Ok(diagrams.remove(0));
    }
    let xs = body
        .iter()
        .enumerate()
        .map(|(i, l)| parse_crossing_line(l, i + 1))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(Diagram::from_crossings("unnamed", &xs)?)
}

/// PD record format: `name <id>` then one `X a b c d` line per crossing.
impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "name {}", self.name)?;
        for x in &self.crossings {
            writeln!(f, "X {} {} {} {}", x[0] + 1, x[1] + 1, x[2] + 1, x[3] + 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3";

    #[test]
    fn trefoil() {
        let d = parse_pd(TREFOIL).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.components(), 1);
        // over-strand runs 4 -> 5, i.e. from slot 1 to slot 3: all negative
        assert!(d.signs().iter().all(|&s| s == Sign::Negative));
    }

    #[test]
    fn kink() {
        let d = parse_pd("X 1 2 2 1").unwrap();
        assert_eq!(d.crossing_count(), 1);
        assert_eq!(d.components(), 1);
        // edge 2 leaves through slot 2 and comes back through slot 1
        assert!(d.is_incoming(0, 1));
        assert_eq!(d.signs(), &[Sign::Negative]);
    }

    #[test]
    fn multiplicity_error() {
        let e = parse_pd("X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 8 / X 8 7 8 3").unwrap_err();
        assert_eq!(
            e,
            Error::Pd(PdError::Multiplicity { name: "unnamed".into(), edge: 7, count: 1 })
        );
        let e = parse_pd("X 1 2 3 4 / X 5 6 7 8 / X 1 2 3 4 / X 5 6 7 7").unwrap_err();
        assert_eq!(e.to_string(), "diagram unnamed: edge 7 multiplicity 3");
        let e = parse_pd("X 1 2 3 4 / X 5 6 8 4 / X 1 2 3 6 / X 5 8 8 7").unwrap_err();
        assert_eq!(e.to_string(), "diagram unnamed: edge 7 multiplicity 1");
    }

    #[test]
    fn range_error() {
        let e = parse_pd("X 1 2 2 9 / X 9 1 0 0").unwrap_err();
        assert!(matches!(e, Error::Pd(PdError::LabelRange { .. })));
    }

    #[test]
    fn disconnected_error() {
        // two separate kinks
        let e = parse_pd("X 1 2 2 1 / X 3 4 4 3").unwrap_err();
        assert_eq!(
            e,
            Error::Pd(PdError::Disconnected { name: "unnamed".into(), crossing: 2 })
        );
    }

    #[test]
    fn non_consecutive_error() {
        // trefoil with labels 2 and 3 swapped
        let e = parse_pd("X 1 4 3 5 / X 2 6 4 1 / X 5 3 6 2").unwrap_err();
        assert!(matches!(e, Error::Pd(PdError::NonConsecutive { .. })), "{e}");
    }

    #[test]
    fn empty_input() {
        assert_eq!(parse_pd("  \n# nothing\n").unwrap_err(), Error::Pd(PdError::Empty));
        assert_eq!(parse_pd_file("").unwrap_err(), Error::Pd(PdError::Empty));
    }

    #[test]
    fn file_records() {
        let text = "# test\nname 3_1\nX 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3\n\nname unknot\n\nname kink\nX 1 2 2 1\n";
        let ds = parse_pd_file(text).unwrap();
        let names: Vec<&str> = ds.iter().map(|d| d.name()).collect();
        assert_eq!(names, ["3_1", "unknot", "kink"]);
        assert_eq!(ds[1].crossing_count(), 0);
        let again = parse_pd_file(&ds.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("\n")).unwrap();
        assert_eq!(again, ds);
    }

    #[test]
    fn syntax_errors_name_the_line() {
        let e = parse_pd_file("name a\nX 1 2 2\n").unwrap_err();
        assert!(matches!(e, Error::Pd(PdError::Syntax { line: 2, .. })));
        let e = parse_pd_file("X 1 2 2 1\n").unwrap_err();
        assert!(matches!(e, Error::Pd(PdError::Syntax { line: 1, .. })));
    }

    #[test]
    fn decreasing_link_labels_are_accepted() {
        // Hopf link with the under-strand of one component running 4 -> 3
        let d = parse_pd("X 4 1 3 2 / X 2 3 1 4").unwrap();
        assert_eq!(d.components(), 2);
    }
}
