//! Deciders for the eight coloring properties, with explicit witnesses
//! on failure.
//!
//! Finite posets are checked exactly. Periodic heaps are checked on a
//! materialized window with witnesses restricted to interior elements;
//! the certified variant re-runs on a one-period-larger window and
//! reports whether the verdicts agree.

use crate::error::Result;
use crate::heap::{PeriodicHeap, WindowPoset};
use crate::poset::{ElemId, FinitePoset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Property {
    Ec,
    Nd,
    Na,
    I3nd,
    Ac,
    I2a,
    MxGa(u32),
    MnLa(u32),
}

impl Property {
    pub fn name(self) -> String {
        match self {
            Property::Ec => "EC".into(),
            Property::Nd => "ND".into(),
            Property::Na => "NA".into(),
            Property::I3nd => "I3ND".into(),
            Property::Ac => "AC".into(),
            Property::I2a => "I2A".into(),
            Property::MxGa(k) => format!("Mx{k}GA"),
            Property::MnLa(k) => format!("Mn{k}LA"),
        }
    }

    pub fn parse(s: &str) -> Option<Property> {
        match s {
            "EC" => return Some(Property::Ec),
            "ND" => return Some(Property::Nd),
            "NA" => return Some(Property::Na),
            "I3ND" => return Some(Property::I3nd),
            "AC" => return Some(Property::Ac),
            "I2A" => return Some(Property::I2a),
            _ => {}
        }
        if let Some(k) = s.strip_prefix("Mx").and_then(|r| r.strip_suffix("GA")) {
            return k.parse().ok().map(Property::MxGa);
        }
        if let Some(k) = s.strip_prefix("Mn").and_then(|r| r.strip_suffix("LA")) {
            return k.parse().ok().map(Property::MnLa);
        }
        None
    }

    /// The eight properties of the classification, at census bound k.
    pub fn all_eight(k: u32) -> [Property; 8] {
        [
            Property::Ec,
            Property::Nd,
            Property::Na,
            Property::I3nd,
            Property::Ac,
            Property::I2a,
            Property::MxGa(k),
            Property::MnLa(k),
        ]
    }

    /// The dual property: census bounds swap, everything else is
    /// self-dual.
    pub fn dual(self) -> Property {
        match self {
            Property::MxGa(k) => Property::MnLa(k),
            Property::MnLa(k) => Property::MxGa(k),
            p => p,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Incomparable pair (EC, AC).
    Pair(ElemId, ElemId),
    /// Offending cover (ND, NA).
    Cover(ElemId, ElemId),
    /// Three-element interval chain (I3ND).
    Chain(ElemId, ElemId, ElemId),
    /// Consecutive same-color pair whose adjacent-color census is not 2
    /// (I2A); members listed.
    Interval {
        pair: (ElemId, ElemId),
        adjacent_members: Vec<ElemId>,
    },
    /// Color-extreme element with more than k adjacent-colored elements
    /// beyond it (MxkGA, MnkLA).
    Frontier {
        extreme: ElemId,
        offenders: Vec<ElemId>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub property: Property,
    pub holds: bool,
    pub witness: Option<Witness>,
}

/// Check one property on a finite poset.
pub fn check_property(p: &FinitePoset, prop: Property) -> PropertyReport {
    check_property_masked(p, prop, None)
}

/// Check all eight properties (census bound k).
pub fn check_all(p: &FinitePoset, k: u32) -> Vec<PropertyReport> {
    Property::all_eight(k)
        .into_iter()
        .map(|prop| check_property(p, prop))
        .collect()
}

/// Check with quantified tuples restricted to `allowed` elements;
/// derived sets (intervals, offender counts) still range over the whole
/// poset. This is the window protocol's interior restriction.
pub fn check_property_masked(
    p: &FinitePoset,
    prop: Property,
    allowed: Option<&[bool]>,
) -> PropertyReport {
    let ok = |x: ElemId| allowed.is_none_or(|m| m[x]);
    let witness = match prop {
        Property::Ec => find_incomparable(p, &ok, |a, b| a == b),
        Property::Ac => find_incomparable(p, &ok, |a, b| p.graph().adjacent(a, b)),
        Property::Nd => p
            .covers()
            .iter()
            .find(|&&(x, y)| ok(x) && ok(y) && p.color(x) == p.color(y))
            .map(|&(x, y)| Witness::Cover(x, y)),
        Property::Na => p
            .covers()
            .iter()
            .find(|&&(x, y)| ok(x) && ok(y) && !p.graph().adjacent(p.color(x), p.color(y)))
            .map(|&(x, y)| Witness::Cover(x, y)),
        Property::I3nd => find_i3nd(p, &ok),
        Property::I2a => find_i2a(p, &ok),
        Property::MxGa(k) => find_census(p, &ok, k, true),
        Property::MnLa(k) => find_census(p, &ok, k, false),
    };
    PropertyReport {
        property: prop,
        holds: witness.is_none(),
        witness,
    }
}

fn find_incomparable(
    p: &FinitePoset,
    ok: &dyn Fn(ElemId) -> bool,
    related: impl Fn(usize, usize) -> bool,
) -> Option<Witness> {
    for x in 0..p.len() {
        if !ok(x) {
            continue;
        }
        for y in x + 1..p.len() {
            if ok(y) && related(p.color(x), p.color(y)) && !p.comparable(x, y) {
                return Some(Witness::Pair(x, y));
            }
        }
    }
    None
}

fn find_i3nd(p: &FinitePoset, ok: &dyn Fn(ElemId) -> bool) -> Option<Witness> {
    for &(x, y) in p.covers() {
        if !ok(x) || !ok(y) {
            continue;
        }
        for &z in p.up_covers(y) {
            if !ok(z) {
                continue;
            }
            // x -> y -> z must be a whole interval: (x, z) = {y}.
            if p.open_interval(x, z).ok()? == vec![y] && p.color(x) == p.color(z) {
                return Some(Witness::Chain(x, y, z));
            }
        }
    }
    None
}

fn find_i2a(p: &FinitePoset, ok: &dyn Fn(ElemId) -> bool) -> Option<Witness> {
    for a in 0..p.graph().len() {
        for (x, y) in p.consecutive_pairs(a) {
            if !ok(x) || !ok(y) {
                continue;
            }
            let members: Vec<ElemId> = p
                .open_interval(x, y)
                .expect("consecutive pairs are strictly ordered")
                .into_iter()
                .filter(|&z| p.graph().adjacent(p.color(z), a))
                .collect();
            if members.len() != 2 {
                return Some(Witness::Interval {
                    pair: (x, y),
                    adjacent_members: members,
                });
            }
        }
    }
    None
}

fn find_census(
    p: &FinitePoset,
    ok: &dyn Fn(ElemId) -> bool,
    k: u32,
    greater: bool,
) -> Option<Witness> {
    for a in 0..p.graph().len() {
        let of_color = p.elements_of_color(a);
        for &x in &of_color {
            if !ok(x) {
                continue;
            }
            // Extremality within the color class is judged over the
            // whole poset, so window boundaries can disqualify interior
            // candidates but never invent extreme ones.
            let extreme = if greater {
                !of_color.iter().any(|&z| p.lt(x, z))
            } else {
                !of_color.iter().any(|&z| p.lt(z, x))
            };
            if !extreme {
                continue;
            }
            let offenders: Vec<ElemId> = (0..p.len())
                .filter(|&z| {
                    let beyond = if greater { p.lt(x, z) } else { p.lt(z, x) };
                    beyond && p.graph().adjacent(p.color(z), a)
                })
                .collect();
            if offenders.len() > k as usize {
                return Some(Witness::Frontier {
                    extreme: x,
                    offenders,
                });
            }
        }
    }
    None
}

/// Confirm the unconditional implications between properties on one
/// instance; a contradiction means an implementation bug and is
/// surfaced loudly.
#[derive(Debug, Clone)]
pub struct ImplicationReport {
    pub i2a_implies_nd_i3nd: bool,
    pub na_implies_nd: bool,
    pub contradictions: Vec<String>,
}

pub fn implication_checks(p: &FinitePoset) -> ImplicationReport {
    let i2a = check_property(p, Property::I2a).holds;
    let nd = check_property(p, Property::Nd).holds;
    let i3nd = check_property(p, Property::I3nd).holds;
    let na = check_property(p, Property::Na).holds;
    let mut contradictions = Vec::new();
    if i2a && !(nd && i3nd) {
        contradictions.push("I2A holds but ND or I3ND fails".to_string());
    }
    if na && !nd {
        contradictions.push("NA holds but ND fails".to_string());
    }
    ImplicationReport {
        i2a_implies_nd_i3nd: !i2a || (nd && i3nd),
        na_implies_nd: !na || nd,
        contradictions,
    }
}

/// A property verdict for a periodic heap, evaluated on a window of `w`
/// periods with interior-only witnesses.
pub fn check_property_heap(
    h: &PeriodicHeap,
    prop: Property,
    w: i64,
) -> Result<(PropertyReport, WindowPoset)> {
    let span = h.max_abs_shift().max(1);
    let window = h.materialize_window(0, w * span - 1)?;
    let report = check_property_masked(&window.poset, prop, Some(&window.interior));
    Ok((report, window))
}

#[derive(Debug, Clone)]
pub struct CertifiedHeapReport {
    pub report: PropertyReport,
    /// Verdict of the re-run on a window one period larger.
    pub windows_agree: bool,
    pub window_periods: i64,
}

/// The window-escalation protocol: evaluate at `w` and `w + 1` periods
/// and record whether the verdicts agree.
pub fn check_property_heap_certified(
    h: &PeriodicHeap,
    prop: Property,
    w: i64,
) -> Result<CertifiedHeapReport> {
    let (report, _) = check_property_heap(h, prop, w)?;
    let (again, _) = check_property_heap(h, prop, w + 1)?;
    Ok(CertifiedHeapReport {
        windows_agree: report.holds == again.holds,
        report,
        window_periods: w,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::ColorGraph;
    use crate::poset::ColorPolicy;

    #[test]
    fn fig2_property_profile() {
        let p = fixtures::fig2_poset();
        for prop in [
            Property::Ec,
            Property::Nd,
            Property::Na,
            Property::I3nd,
            Property::Ac,
            Property::I2a,
            Property::MxGa(1),
        ] {
            assert!(
                check_property(&p, prop).holds,
                "{} should hold",
                prop.name()
            );
        }
        let mn = check_property(&p, Property::MnLa(1));
        assert!(!mn.holds);
        let z = p.elem_id("z").unwrap();
        let expect: Vec<ElemId> = ["u", "v", "q"]
            .iter()
            .map(|n| p.elem_id(n).unwrap())
            .collect();
        match mn.witness.unwrap() {
            Witness::Frontier {
                extreme,
                mut offenders,
            } => {
                offenders.sort_unstable();
                let mut e = expect;
                e.sort_unstable();
                assert_eq!(extreme, z);
                assert_eq!(offenders, e);
            }
            w => panic!("unexpected witness {w:?}"),
        }
    }

    #[test]
    fn two_element_antichain_fails_ec() {
        let g = ColorGraph::new(&["a"], &[]).unwrap();
        let p = FinitePoset::build(
            g,
            &[("x", "a"), ("y", "a")],
            &[],
            ColorPolicy::RequireSurjective,
        )
        .unwrap();
        let r = check_property(&p, Property::Ec);
        assert!(!r.holds);
        assert_eq!(r.witness, Some(Witness::Pair(0, 1)));
    }

    #[test]
    fn two_chain_same_color_i2a_and_nd_fail_consistently() {
        let g = ColorGraph::new(&["a"], &[]).unwrap();
        let p = FinitePoset::build(
            g,
            &[("x", "a"), ("y", "a")],
            &[("x", "y")],
            ColorPolicy::RequireSurjective,
        )
        .unwrap();
        assert!(!check_property(&p, Property::I2a).holds);
        assert!(!check_property(&p, Property::Nd).holds);
        assert!(implication_checks(&p).contradictions.is_empty());
    }

    #[test]
    fn single_element_all_vacuous() {
        let g = ColorGraph::new(&["a"], &[]).unwrap();
        let p = FinitePoset::build(g, &[("x", "a")], &[], ColorPolicy::RequireSurjective).unwrap();
        for prop in [
            Property::Ec,
            Property::Nd,
            Property::Na,
            Property::I3nd,
            Property::Ac,
            Property::I2a,
        ] {
            assert!(check_property(&p, prop).holds);
        }
    }

    #[test]
    fn census_monotone_in_k() {
        let p = fixtures::fig2_poset();
        // Mn1LA fails but Mn3LA holds (three offenders).
        assert!(!check_property(&p, Property::MnLa(1)).holds);
        assert!(!check_property(&p, Property::MnLa(2)).holds);
        assert!(check_property(&p, Property::MnLa(3)).holds);
    }

    #[test]
    fn fig2_no_contradictions() {
        let p = fixtures::fig2_poset();
        assert!(implication_checks(&p).contradictions.is_empty());
    }

    #[test]
    fn fig1_all_eight_certified() {
        let h = fixtures::fig1_heap();
        for prop in Property::all_eight(1) {
            let c = check_property_heap_certified(&h, prop, 3).unwrap();
            assert!(
                c.report.holds,
                "{} should hold on the full heap",
                prop.name()
            );
            assert!(c.windows_agree, "{} window verdicts disagree", prop.name());
        }
    }

    #[test]
    fn duality_on_fig2() {
        let p = fixtures::fig2_poset();
        let d = p.dual();
        for prop in [Property::Ec, Property::I3nd, Property::I2a] {
            assert_eq!(
                check_property(&p, prop).holds,
                check_property(&d, prop).holds
            );
        }
        assert_eq!(
            check_property(&p, Property::MxGa(1)).holds,
            check_property(&d, Property::MnLa(1)).holds
        );
        assert_eq!(
            check_property(&p, Property::MnLa(1)).holds,
            check_property(&d, Property::MxGa(1)).holds
        );
    }
}
