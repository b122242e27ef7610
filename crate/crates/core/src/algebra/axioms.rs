use std::fmt;

use super::table::{Elem, TribracketTable};
use crate::error::{Error, Result};

/// Which argument of `[a, b, c]` is being solved for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Slot {
    Left,
    Middle,
    Right,
}

impl Slot {
    pub const ALL: [Slot; 3] = [Slot::Left, Slot::Middle, Slot::Right];

    /// Places `free` in this slot and the two fixed arguments, in order, in
    /// the remaining slots.
    #[inline]
    pub fn arrange(self, k1: usize, k2: usize, free: usize) -> (usize, usize, usize) {
        match self {
            Slot::Left => (free, k1, k2),
            Slot::Middle => (k1, free, k2),
            Slot::Right => (k1, k2, free),
        }
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Slot::Left => "left",
            Slot::Middle => "middle",
            Slot::Right => "right",
        })
    }
}

/// Solves `[a, k1, k2] = target` (left), `[k1, b, k2] = target` (middle) or
/// `[k1, k2, c] = target` (right) by scanning the line.
pub fn divide(t: &TribracketTable, slot: Slot, k1: usize, k2: usize, target: usize) -> Result<usize> {
    let n = t.order();
    for e in [k1, k2, target] {
        if e >= n {
            return Err(Error::OutOfRange { element: e, order: n });
        }
    }
    let mut found = None;
    for free in 0..n {
        let (a, b, c) = slot.arrange(k1, k2, free);
        if t.get(a, b, c) == target {
            if found.is_some() {
                found = None;
                break;
            }
            found = Some(free);
        }
    }
    found.ok_or(Error::NotQuasigroupLine {
        slot,
        fixed: (k1, k2),
        target,
    })
}

/// Precomputed solutions of the three division problems, for tables that
/// satisfy axiom (i).
#[derive(Debug, Clone)]
pub struct Divisions {
    order: usize,
    left: Vec<Elem>,
    middle: Vec<Elem>,
    right: Vec<Elem>,
}

impl Divisions {
    pub fn new(t: &TribracketTable) -> Result<Self> {
        if let Some(v) = latin_violation(t) {
            return Err(Error::NotQuasigroupLine {
                slot: v.slot,
                fixed: v.fixed,
                target: v.value,
            });
        }
        let n = t.order();
        let mut left = vec![0; n * n * n];
        let mut middle = vec![0; n * n * n];
        let mut right = vec![0; n * n * n];
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let v = t.get(x, y, z);
                    left[(y * n + z) * n + v] = x as Elem;
                    middle[(x * n + z) * n + v] = y as Elem;
                    right[(x * n + y) * n + v] = z as Elem;
                }
            }
        }
        Ok(Divisions {
            order: n,
            left,
            middle,
            right,
        })
    }

    #[inline]
    pub fn solve(&self, slot: Slot, k1: usize, k2: usize, target: usize) -> usize {
        let n = self.order;
        let i = (k1 * n + k2) * n + target;
        (match slot {
            Slot::Left => self.left[i],
            Slot::Middle => self.middle[i],
            Slot::Right => self.right[i],
        }) as usize
    }
}

/// A line of the tensor on which the free argument repeats a value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatinViolation {
    pub slot: Slot,
    pub fixed: (usize, usize),
    pub value: usize,
    /// Two distinct free-argument values producing `value`.
    pub positions: (usize, usize),
}

/// A tuple `(x, y, z, w)` for which the three sides of axiom (ii) disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedViolation {
    pub tuple: [usize; 4],
    pub sides: [usize; 3],
}

/// Result of [`validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub axiom_i_ok: bool,
    pub axiom_ii_ok: bool,
    pub entropic_ok: bool,
    pub axiom_i_witness: Option<LatinViolation>,
    pub axiom_ii_witness: Option<MixedViolation>,
    pub entropic_witness: Option<[usize; 9]>,
}

impl AxiomReport {
    /// Both tribracket axioms hold.
    pub fn is_tribracket(&self) -> bool {
        self.axiom_i_ok && self.axiom_ii_ok
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ok = |b: bool| if b { "ok" } else { "fail" };
        write!(
            f,
            "axiom (i): {}, axiom (ii): {}, entropic: {}",
            ok(self.axiom_i_ok),
            ok(self.axiom_ii_ok),
            if self.entropic_ok { "yes" } else { "no" }
        )?;
        if let Some(v) = &self.axiom_i_witness {
            write!(
                f,
                "\naxiom (i) witness: {} slot, fixed ({}, {}): value {} at {} and {}",
                v.slot,
                v.fixed.0 + 1,
                v.fixed.1 + 1,
                v.value + 1,
                v.positions.0 + 1,
                v.positions.1 + 1
            )?;
        }
        if let Some(v) = &self.axiom_ii_witness {
            write!(
                f,
                "\naxiom (ii) witness: (x,y,z,w) = {}: sides {}",
                one_based(&v.tuple),
                one_based(&v.sides)
            )?;
        }
        if let Some(w) = &self.entropic_witness {
            write!(f, "\nentropic witness: {}", one_based(w))?;
        }
        Ok(())
    }
}

fn one_based(xs: &[usize]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| (x + 1).to_string()).collect();
    format!("({})", parts.join(","))
}

/// First line (in left, middle, right order) on which the tensor is not a
/// bijection, if any.
pub fn latin_violation(t: &TribracketTable) -> Option<LatinViolation> {
    let n = t.order();
    let mut seen = vec![usize::MAX; n];
    for slot in Slot::ALL {
        for k1 in 0..n {
            for k2 in 0..n {
                seen.fill(usize::MAX);
                for free in 0..n {
                    let (a, b, c) = slot.arrange(k1, k2, free);
                    let v = t.get(a, b, c);
                    if seen[v] != usize::MAX {
                        return Some(LatinViolation {
                            slot,
                            fixed: (k1, k2),
                            value: v,
                            positions: (seen[v], free),
                        });
                    }
                    seen[v] = free;
                }
            }
        }
    }
    None
}

/// Evaluates the three sides of axiom (ii) at `(x, y, z, w)`.
#[inline]
pub fn mixed_sides(t: &TribracketTable, x: usize, y: usize, z: usize, w: usize) -> [usize; 3] {
    let xyz = t.get(x, y, z);
    let xyw = t.get(x, y, w);
    let xzw = t.get(x, z, w);
    [t.get(y, xyz, xyw), t.get(z, xyz, xzw), t.get(w, xyw, xzw)]
}

pub fn mixed_violation(t: &TribracketTable) -> Option<MixedViolation> {
    let n = t.order();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for w in 0..n {
                    let sides = mixed_sides(t, x, y, z, w);
                    if sides[0] != sides[1] || sides[1] != sides[2] {
                        return Some(MixedViolation {
                            tuple: [x, y, z, w],
                            sides,
                        });
                    }
                }
            }
        }
    }
    None
}

/// Both sides of the entropic identity at the 9-tuple
/// `(x, y, z, u, v, w, a, b, c)`.
pub fn entropic_sides(t: &TribracketTable, v9: [usize; 9]) -> (usize, usize) {
    let [x, y, z, u, v, w, a, b, c] = v9;
    let lhs = t.get(t.get(x, y, z), t.get(u, v, w), t.get(a, b, c));
    let rhs = t.get(t.get(x, u, a), t.get(y, v, b), t.get(z, w, c));
    (lhs, rhs)
}

/// Scans all n⁹ tuples for a failure of the entropic identity, returning the
/// first one found.
pub fn entropic_violation(t: &TribracketTable) -> Option<[usize; 9]> {
    let n = t.order();
    let e = t.entries();
    let n2 = n * n;
    for x in 0..n {
        for u in 0..n {
            for a in 0..n {
                // [x,u,a] is the first argument on the right-hand side
                let s = e[x * n2 + u * n + a] as usize;
                for y in 0..n {
                    for v in 0..n {
                        for b in 0..n {
                            let r2 = e[y * n2 + v * n + b] as usize;
                            for z in 0..n {
                                let p = e[x * n2 + y * n + z] as usize;
                                for w in 0..n {
                                    let q = e[u * n2 + v * n + w] as usize;
                                    for c in 0..n {
                                        let r3 = e[z * n2 + w * n + c] as usize;
                                        let rhs = e[s * n2 + r2 * n + r3];
                                        let inner = e[a * n2 + b * n + c] as usize;
                                        let lhs = e[p * n2 + q * n + inner];
                                        if lhs != rhs {
                                            return Some([x, y, z, u, v, w, a, b, c]);
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
    None
}

/// True when the entropic identity holds for every 9-tuple.
pub fn is_entropic(t: &TribracketTable) -> bool {
    entropic_violation(t).is_none()
}

/// Checks axiom (i), axiom (ii), and the entropic condition.
pub fn validate(t: &TribracketTable) -> AxiomReport {
    let axiom_i_witness = latin_violation(t);
    let axiom_ii_witness = mixed_violation(t);
    let entropic_witness = entropic_violation(t);
    AxiomReport {
        axiom_i_ok: axiom_i_witness.is_none(),
        axiom_ii_ok: axiom_ii_witness.is_none(),
        entropic_ok: entropic_witness.is_none(),
        axiom_i_witness,
        axiom_ii_witness,
        entropic_witness,
    }
}

/// Checks the two tribracket axioms only.
pub fn is_tribracket(t: &TribracketTable) -> bool {
    latin_violation(t).is_none() && mixed_violation(t).is_none()
}

/// Errors unless `t` satisfies both axioms.
pub fn ensure_tribracket(t: &TribracketTable) -> Result<()> {
    if let Some(v) = latin_violation(t) {
        return Err(Error::InvalidTable(format!(
            "axiom (i) fails on the {} slot with fixed arguments ({}, {})",
            v.slot,
            v.fixed.0 + 1,
            v.fixed.1 + 1
        )));
    }
    if let Some(v) = mixed_violation(t) {
        return Err(Error::InvalidTable(format!(
            "axiom (ii) fails at (x,y,z,w) = {}",
            one_based(&v.tuple)
        )));
    }
    Ok(())
}

/// Errors with a witness unless `t` is entropic.
pub fn ensure_entropic(t: &TribracketTable) -> Result<()> {
    match entropic_violation(t) {
        None => Ok(()),
        Some(witness) => Err(Error::NotEntropic { witness }),
    }
}
