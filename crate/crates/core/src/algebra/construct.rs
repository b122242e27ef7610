//! Standard tribracket families.

use super::group::GroupTable;
use super::table::TribracketTable;
use crate::error::{Error, Result};

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Alexander tribracket on ℤₙ: `[x, y, z] = t·y + s·z − t·s·x (mod n)`.
///
/// `s` and `t` may be given as any integers; they must be units mod `n`.
pub fn make_alexander(n: usize, s: i64, t: i64) -> Result<TribracketTable> {
    if n == 0 {
        return Err(Error::InvalidTable("Alexander tribracket needs n ≥ 1".into()));
    }
    let m = n as i64;
    let s_r = s.rem_euclid(m) as usize;
    let t_r = t.rem_euclid(m) as usize;
    if gcd(s_r, n) != 1 {
        return Err(Error::NonUnit { param: "s", value: s, modulus: n });
    }
    if gcd(t_r, n) != 1 {
        return Err(Error::NonUnit { param: "t", value: t, modulus: n });
    }
    let ts = (t_r * s_r) % n;
    let table = TribracketTable::from_fn(n, |x, y, z| (t_r * y + s_r * z + (n - ts) * x) % n)?;
    Ok(table.with_name(format!("Alexander(Z{n},s={s_r},t={t_r})")))
}

/// Dehn tribracket of a group: `[x, y, z] = y·x⁻¹·z`.
pub fn make_dehn(g: &GroupTable) -> Result<TribracketTable> {
    let table = TribracketTable::from_fn(g.order(), |x, y, z| g.mul(g.mul(y, g.inv(x)), z))?;
    Ok(table.with_name(format!("Dehn({})", g.name())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::axioms::{is_entropic, is_tribracket, validate};

    #[test]
    fn alexander_z6_sample_entry() {
        let t = make_alexander(6, 5, 5).unwrap();
        // 5*0 + 5*3 - 25*0 = 15 = 3 mod 6
        assert_eq!(t.get(0, 0, 3), 3);
    }

    #[test]
    fn alexander_rejects_non_units() {
        assert_eq!(
            make_alexander(4, 1, 2).unwrap_err(),
            Error::NonUnit { param: "t", value: 2, modulus: 4 }
        );
        assert_eq!(
            make_alexander(4, 2, 1).unwrap_err(),
            Error::NonUnit { param: "s", value: 2, modulus: 4 }
        );
    }

    #[test]
    fn every_unit_pair_gives_an_entropic_tribracket() {
        for n in 1..=7usize {
            for s in 0..n as i64 {
                for t in 0..n as i64 {
                    match make_alexander(n, s, t) {
                        Ok(table) => {
                            let r = validate(&table);
                            assert!(r.is_tribracket() && r.entropic_ok, "n={n} s={s} t={t}");
                        }
                        Err(Error::NonUnit { .. }) => {}
                        Err(e) => panic!("{e}"),
                    }
                }
            }
        }
    }

    #[test]
    fn dehn_trivial_group_is_singleton() {
        let g = GroupTable::cyclic(1).unwrap();
        assert_eq!(make_dehn(&g).unwrap().unnamed(), TribracketTable::singleton());
    }

    #[test]
    fn dehn_entropic_iff_abelian() {
        for spec in ["Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4"] {
            let g = GroupTable::from_spec(spec).unwrap();
            let t = make_dehn(&g).unwrap();
            assert!(is_tribracket(&t), "{spec}");
            assert_eq!(is_entropic(&t), g.is_abelian(), "{spec}");
        }
    }
}
