use crate::error::{Error, Result};

/// A finite group given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    name: String,
}

impl GroupTable {
    /// Validates closure, associativity, identity, and inverses of the
    /// row-major table `mul` (`mul[a * n + b] = a·b`).
    pub fn new(order: usize, mul: Vec<usize>) -> Result<Self> {
        let n = order;
        if n == 0 {
            return Err(Error::InvalidGroup("a group has at least one element".into()));
        }
        if mul.len() != n * n {
            return Err(Error::InvalidGroup(format!(
                "table of order {n} needs {} entries, got {}",
                n * n,
                mul.len()
            )));
        }
        if let Some(&v) = mul.iter().find(|&&v| v >= n) {
            return Err(Error::InvalidGroup(format!("entry {v} outside 0..{n}")));
        }
        let m = |a: usize, b: usize| mul[a * n + b];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(Error::InvalidGroup(format!(
                            "not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| m(e, a) == a && m(a, e) == a))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let inverse = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| m(a, b) == identity && m(b, a) == identity)
                    .ok_or_else(|| Error::InvalidGroup(format!("element {a} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupTable {
            order,
            mul,
            identity,
            inverse,
            name: format!("G{order}"),
        })
    }

    fn named(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Builds a group from a set of permutations closed under composition.
    fn from_permutations(perms: Vec<Vec<usize>>) -> Result<Self> {
        let n = perms.len();
        let index = |p: &[usize]| perms.iter().position(|q| q == p);
        let mut mul = Vec::with_capacity(n * n);
        for p in &perms {
            for q in &perms {
                // (p·q)(i) = p(q(i))
                let pq: Vec<usize> = q.iter().map(|&i| p[i]).collect();
                mul.push(index(&pq).ok_or_else(|| {
                    Error::InvalidGroup("permutation set not closed".into())
                })?);
            }
        }
        Self::new(n, mul)
    }

    /// The cyclic group ℤₙ.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("ℤ₀ is not finite".into()));
        }
        let mul = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        Ok(Self::new(n, mul)?.named(format!("Z{n}")))
    }

    /// The symmetric group Sₙ for n ≤ 4, elements in lexicographic order of
    /// their one-line notation.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 || n > 4 {
            return Err(Error::InvalidGroup(format!("S{n} not supported (1 ≤ n ≤ 4)")));
        }
        let mut perms = Vec::new();
        permutations(&mut (0..n).collect::<Vec<_>>(), 0, &mut perms);
        perms.sort();
        Ok(Self::from_permutations(perms)?.named(format!("S{n}")))
    }

    /// The dihedral group of the regular m-gon (order 2m), as permutations
    /// of the vertices.
    pub fn dihedral(m: usize) -> Result<Self> {
        if m < 3 {
            return Err(Error::InvalidGroup(format!("D{m} needs m ≥ 3")));
        }
        let mut perms: Vec<Vec<usize>> = Vec::new();
        for k in 0..m {
            perms.push((0..m).map(|i| (i + k) % m).collect());
            perms.push((0..m).map(|i| (k + m - i) % m).collect());
        }
        perms.sort();
        Ok(Self::from_permutations(perms)?.named(format!("D{m}")))
    }

    /// The direct product G × H, pairs (g, h) encoded as g·|H| + h.
    pub fn direct_product(g: &GroupTable, h: &GroupTable) -> Self {
        let (ng, nh) = (g.order, h.order);
        let n = ng * nh;
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                mul.push(g.mul(a / nh, b / nh) * nh + h.mul(a % nh, b % nh));
            }
        }
        GroupTable {
            order: n,
            mul,
            identity: g.identity * nh + h.identity,
            inverse: (0..n)
                .map(|a| g.inverse[a / nh] * nh + h.inverse[a % nh])
                .collect(),
            name: format!("{}x{}", g.name, h.name),
        }
    }

    /// Parses a group description such as `Z4`, `S3`, `D4`, or `Z2xZ2`.
    pub fn from_spec(spec: &str) -> Result<Self> {
        let mut acc: Option<GroupTable> = None;
        for part in spec.split(['x', '*']) {
            let part = part.trim();
            let bad = || Error::Parse {
                line: 1,
                msg: format!("unknown group factor {part:?} (expected Zn, Sn, or Dn)"),
            };
            let (kind, num) = part.split_at(part.char_indices().nth(1).map_or(part.len(), |(i, _)| i));
            let n: usize = num.parse().map_err(|_| bad())?;
            let factor = match kind {
                "Z" | "C" => Self::cyclic(n)?,
                "S" => Self::symmetric(n)?,
                "D" => Self::dihedral(n)?,
                _ => return Err(bad()),
            };
            acc = Some(match acc {
                None => factor,
                Some(g) => Self::direct_product(&g, &factor),
            });
        }
        acc.ok_or_else(|| Error::Parse {
            line: 1,
            msg: "empty group description".into(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

fn permutations(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, out);
        items.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_groups() {
        assert_eq!(GroupTable::cyclic(4).unwrap().order(), 4);
        let s3 = GroupTable::symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        let d4 = GroupTable::dihedral(4).unwrap();
        assert_eq!(d4.order(), 8);
        assert!(!d4.is_abelian());
        assert_eq!(GroupTable::symmetric(4).unwrap().order(), 24);
        let v = GroupTable::from_spec("Z2xZ2").unwrap();
        assert_eq!(v.order(), 4);
        assert!(v.is_abelian());
        assert!((0..4).all(|a| v.mul(a, a) == v.identity()));
    }

    #[test]
    fn rejects_non_groups() {
        // constant table: no identity
        assert!(GroupTable::new(2, vec![0, 0, 0, 0]).is_err());
        // x - y mod 3 is not associative
        let sub = (0..9).map(|i| (i / 3 + 3 - i % 3) % 3).collect();
        assert!(matches!(GroupTable::new(3, sub), Err(Error::InvalidGroup(_))));
        assert!(GroupTable::from_spec("Q8").is_err());
    }
}
