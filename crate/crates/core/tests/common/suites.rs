//! Exhaustive property checks shared by the `properties` and `acceptance`
//! targets. Each panics on the first violation.

use std::collections::BTreeSet;

use tribracket::algebra::idempotent::restrict;
use tribracket::algebra::{idem_subtribracket, idempotent_elements, is_entropic, is_tribracket, validate, TribracketTable};
use tribracket::diagrams::{crossing_relations, extract_faces, ConventionTable, Diagram};
use tribracket::enumeration::{enumerate_tribrackets, Filter};
use tribracket::invariants::{enumerate_colorings, link_homset_tribracket};
use tribracket::morphisms::{are_isomorphic, enumerate_homs, homset_tribracket, is_hom};

/// Every tribracket of order 0 through 3, without deduplication.
pub fn small_tribrackets() -> Vec<TribracketTable> {
    (0..=3).flat_map(|n| enumerate_tribrackets(n, Filter::All)).collect()
}

pub fn reidemeister_invariance() {
    let groups = super::move_groups();
    for x in small_tribrackets().iter().filter(|x| is_entropic(x)) {
        for (name, group) in &groups {
            let homs: Vec<TribracketTable> = group
                .iter()
                .map(|d| link_homset_tribracket(d, x).unwrap().table)
                .collect();
            for h in &homs[1..] {
                assert_eq!(h.order(), homs[0].order(), "{name}");
                assert!(are_isomorphic(h, &homs[0]).is_some(), "{name}");
            }
        }
    }
}

pub fn constant_map_criterion() {
    let xs = small_tribrackets();
    for t in xs.iter().filter(|t| !t.is_empty()) {
        for x in &xs {
            let idem = idempotent_elements(x);
            for y in 0..x.order() {
                let constant = vec![y; t.order()];
                assert_eq!(is_hom(&constant, t, x).unwrap(), idem.contains(&y));
            }
        }
    }
}

pub fn idem_embeds_in_homset() {
    let xs: Vec<TribracketTable> = small_tribrackets().into_iter().filter(is_entropic).collect();
    for x in xs.iter().filter(|x| !x.is_empty()) {
        for y in &xs {
            let h = homset_tribracket(x, y).unwrap();
            let constants: Vec<usize> = h
                .legend
                .iter()
                .enumerate()
                .filter(|(_, f)| f.image.iter().all(|&v| v == f.image[0]))
                .map(|(i, _)| i)
                .collect();
            let sub = restrict(&h.table, &constants).unwrap();
            assert!(are_isomorphic(&sub.table, &idem_subtribracket(y).table).is_some());
        }
    }
}

pub fn homsets_are_entropic_tribrackets() {
    let xs: Vec<TribracketTable> = small_tribrackets().into_iter().filter(is_entropic).collect();
    for a in &xs {
        for b in &xs {
            let h = homset_tribracket(a, b).unwrap();
            let r = validate(&h.table);
            assert!(r.is_tribracket() && r.entropic_ok);
            assert_eq!(h.legend.len(), enumerate_homs(a, b).len());
        }
    }
}

fn brute_force_colorings(d: &Diagram, x: &TribracketTable) -> Vec<Vec<usize>> {
    let regions = extract_faces(d).unwrap();
    let rels = crossing_relations(d, &regions, &ConventionTable::default()).unwrap();
    let (n, m) = (x.order(), regions.region_count());
    let total = n.pow(m as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut a = vec![0; m];
        let mut c = code;
        for slot in a.iter_mut().rev() {
            *slot = c % n;
            c /= n;
        }
        if rels.iter().all(|r| r.holds(|p, q, s| x.get(p, q, s), &a)) {
            out.push(a);
        }
    }
    out
}

pub fn coloring_oracle() {
    let mut diagrams = super::diagrams("knots.pd");
    diagrams.extend(super::diagrams("links.pd"));
    diagrams.extend(super::diagrams("reidemeister.pd"));
    diagrams.retain(|d| d.crossing_count() <= 4);
    assert!(diagrams.len() >= 10);
    for x in small_tribrackets().iter().filter(|x| x.order() >= 1) {
        for d in &diagrams {
            let fast: Vec<Vec<usize>> = enumerate_colorings(d, x)
                .unwrap()
                .into_iter()
                .map(|c| c.assignment)
                .collect();
            assert_eq!(fast, brute_force_colorings(d, x), "{}", d.name());
        }
    }
}

pub fn enumeration_oracle() {
    for n in 0..=2usize {
        let cells = n * n * n;
        let mut brute = BTreeSet::new();
        for code in 0..n.pow(cells as u32).max(1) {
            let mut c = code;
            let entries: Vec<u16> = (0..cells)
                .map(|_| {
                    let v = c % n;
                    c /= n;
                    v as u16
                })
                .collect();
            let t = TribracketTable::new(n, entries).unwrap();
            if is_tribracket(&t) {
                brute.insert(t);
            }
        }
        let found: BTreeSet<TribracketTable> = enumerate_tribrackets(n, Filter::All).into_iter().collect();
        assert_eq!(found, brute, "order {n}");
    }
}

pub fn run_all() {
    reidemeister_invariance();
    constant_map_criterion();
    idem_embeds_in_homset();
    homsets_are_entropic_tribrackets();
    coloring_oracle();
    enumeration_oracle();
}
