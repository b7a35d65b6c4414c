//! Brute-force oracles, kept independent of the library's own
//! implementation paths: plain path search for the order, quantifier
//! expansion for the coloring properties, and subset enumeration for
//! ideal counts.

use heaplab::classify::{exhaustive_instances, random_instances};
use heaplab::poset::FinitePoset;
use heaplab::properties::{check_property, Property};
use heaplab::splits::SplitLattice;

/// Reachability in the cover digraph by depth-first search; nothing is
/// shared with the library's precomputed closure.
fn oracle_le(p: &FinitePoset, x: usize, y: usize) -> bool {
    if x == y {
        return true;
    }
    let mut stack = vec![x];
    let mut seen = vec![false; p.len()];
    seen[x] = true;
    while let Some(v) = stack.pop() {
        for &(a, b) in p.covers() {
            if a == v && !seen[b] {
                if b == y {
                    return true;
                }
                seen[b] = true;
                stack.push(b);
            }
        }
    }
    false
}

fn oracle_comparable(p: &FinitePoset, x: usize, y: usize) -> bool {
    oracle_le(p, x, y) || oracle_le(p, y, x)
}

fn oracle_lt(p: &FinitePoset, x: usize, y: usize) -> bool {
    x != y && oracle_le(p, x, y)
}

/// Direct quantifier expansion of one property definition.
fn oracle_property(p: &FinitePoset, prop: Property) -> bool {
    let n = p.len();
    let g = p.graph();
    match prop {
        Property::Ec => {
            (0..n).all(|x| (0..n).all(|y| p.color(x) != p.color(y) || oracle_comparable(p, x, y)))
        }
        Property::Ac => (0..n).all(|x| {
            (0..n).all(|y| !g.adjacent(p.color(x), p.color(y)) || oracle_comparable(p, x, y))
        }),
        Property::Nd => p.covers().iter().all(|&(x, y)| p.color(x) != p.color(y)),
        Property::Na => p
            .covers()
            .iter()
            .all(|&(x, y)| g.adjacent(p.color(x), p.color(y))),
        Property::I3nd => p.covers().iter().all(|&(x, y)| {
            p.covers().iter().all(|&(y2, z)| {
                if y2 != y {
                    return true;
                }
                // Is [x, z] exactly {x, y, z}?
                let interval = (0..n).all(|w| {
                    !(oracle_le(p, x, w) && oracle_le(p, w, z)) || w == x || w == y || w == z
                });
                !interval || p.color(x) != p.color(z)
            })
        }),
        Property::I2a => (0..g.len()).all(|a| {
            (0..n).all(|x| {
                (0..n).all(|y| {
                    if p.color(x) != a || p.color(y) != a || !oracle_lt(p, x, y) {
                        return true;
                    }
                    let consecutive = !(0..n)
                        .any(|z| p.color(z) == a && oracle_lt(p, x, z) && oracle_lt(p, z, y));
                    if !consecutive {
                        return true;
                    }
                    let census = (0..n)
                        .filter(|&z| {
                            oracle_lt(p, x, z) && oracle_lt(p, z, y) && g.adjacent(p.color(z), a)
                        })
                        .count();
                    census == 2
                })
            })
        }),
        Property::MxGa(k) => (0..n).all(|x| {
            let a = p.color(x);
            let maximal = !(0..n).any(|z| p.color(z) == a && oracle_lt(p, x, z));
            if !maximal {
                return true;
            }
            let beyond = (0..n)
                .filter(|&z| oracle_lt(p, x, z) && g.adjacent(p.color(z), a))
                .count();
            beyond <= k as usize
        }),
        Property::MnLa(k) => (0..n).all(|x| {
            let a = p.color(x);
            let minimal = !(0..n).any(|z| p.color(z) == a && oracle_lt(p, z, x));
            if !minimal {
                return true;
            }
            let beyond = (0..n)
                .filter(|&z| oracle_lt(p, z, x) && g.adjacent(p.color(z), a))
                .count();
            beyond <= k as usize
        }),
    }
}

/// Count antichains by subset enumeration; ideals of a finite poset
/// biject with antichains (the maximal elements of the ideal).
fn oracle_antichain_count(p: &FinitePoset) -> usize {
    let n = p.len();
    assert!(n <= 15);
    (0u64..1 << n)
        .filter(|s| {
            (0..n).all(|x| {
                (0..n).all(|y| {
                    x >= y || s >> x & 1 == 0 || s >> y & 1 == 0 || !oracle_comparable(p, x, y)
                })
            })
        })
        .count()
}

fn survey() -> Vec<FinitePoset> {
    let mut all = Vec::new();
    for n in 1..=4 {
        for m in 1..=2.min(n) {
            all.extend(exhaustive_instances(n, m).unwrap());
        }
    }
    all.extend(random_instances(6, 3, 300, 0xabcdef));
    all
}

#[test]
fn order_closure_matches_path_search() {
    for p in survey() {
        for x in 0..p.len() {
            for y in 0..p.len() {
                assert_eq!(
                    p.le(x, y),
                    oracle_le(&p, x, y),
                    "le({x},{y}) on {:?}",
                    p.covers()
                );
                assert_eq!(p.comparable(x, y), oracle_comparable(&p, x, y));
            }
        }
    }
}

#[test]
fn property_checks_match_quantifier_expansion() {
    let props = [
        Property::Ec,
        Property::Nd,
        Property::Na,
        Property::I3nd,
        Property::Ac,
        Property::I2a,
        Property::MxGa(1),
        Property::MnLa(1),
        Property::MxGa(2),
        Property::MnLa(2),
    ];
    for p in survey() {
        for prop in props {
            assert_eq!(
                check_property(&p, prop).holds,
                oracle_property(&p, prop),
                "{} on covers {:?} colors {:?} edges {:?}",
                prop.name(),
                p.covers(),
                (0..p.len()).map(|x| p.color(x)).collect::<Vec<_>>(),
                p.graph().edges()
            );
        }
    }
}

#[test]
fn witnesses_reevaluate_as_violations() {
    use heaplab::properties::Witness;
    for p in survey() {
        for prop in Property::all_eight(1) {
            let r = check_property(&p, prop);
            if r.holds {
                continue;
            }
            match r.witness.expect("failing checks carry a witness") {
                Witness::Pair(x, y) => assert!(!oracle_comparable(&p, x, y)),
                Witness::Cover(x, y) => assert!(p.covers().contains(&(x, y))),
                Witness::Chain(x, y, z) => {
                    assert!(p.covers().contains(&(x, y)));
                    assert!(p.covers().contains(&(y, z)));
                    assert_eq!(p.color(x), p.color(z));
                }
                Witness::Interval {
                    pair: (x, y),
                    adjacent_members,
                } => {
                    assert!(oracle_lt(&p, x, y));
                    assert_ne!(adjacent_members.len(), 2);
                }
                Witness::Frontier { offenders, .. } => {
                    assert!(offenders.len() > 1);
                }
            }
        }
    }
}

#[test]
fn ideal_count_matches_antichain_count() {
    for p in survey() {
        let l = SplitLattice::enumerate(&p, 1_000_000).unwrap();
        assert_eq!(
            l.len(),
            oracle_antichain_count(&p),
            "covers {:?}",
            p.covers()
        );
    }
}

#[test]
fn census_monotone_in_k() {
    for p in survey() {
        for k in 1..=3 {
            if check_property(&p, Property::MxGa(k)).holds {
                assert!(check_property(&p, Property::MxGa(k + 1)).holds);
            }
            if check_property(&p, Property::MnLa(k)).holds {
                assert!(check_property(&p, Property::MnLa(k + 1)).holds);
            }
        }
    }
}
