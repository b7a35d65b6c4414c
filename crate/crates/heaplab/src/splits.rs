//! Enumeration of the distributive lattice of filter-ideal splits of a
//! finite poset, with colored Hasse edges and components.
//!
//! Ideals are bitmasks over the canonical element order, so split
//! enumeration is limited to posets with at most 64 elements (periodic
//! heaps never build a global lattice; they navigate lazily).

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::ColorId;
use crate::heap::{Layer, PeriodicHeap, PeriodicSplit};
use crate::poset::{ElemId, FinitePoset};

pub const DEFAULT_SPLIT_CAP: usize = 1_000_000;

/// Read the split cap from `HEAPLAB_SPLIT_CAP`, falling back to the
/// default.
pub fn split_cap_from_env() -> usize {
    std::env::var("HEAPLAB_SPLIT_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_SPLIT_CAP)
}

/// The lattice of all splits of a finite poset.
///
/// Splits are interned and referenced by index; the order is by ideal
/// size then by ideal bitmask, so index 0 is always `(P, empty)` and the
/// last index is `(empty, P)`.
#[derive(Debug, Clone)]
pub struct SplitLattice {
    ideals: Vec<u64>,
    index: HashMap<u64, usize>,
    up_edges: Vec<(usize, usize, ColorId)>,
    up_adj: Vec<Vec<(usize, ColorId)>>,
    down_adj: Vec<Vec<(usize, ColorId)>>,
}

/// Minimal elements of the filter of the split with the given ideal.
pub fn filter_minimal(p: &FinitePoset, ideal: u64) -> Vec<ElemId> {
    (0..p.len())
        .filter(|&x| ideal >> x & 1 == 0 && p.down_covers(x).iter().all(|&w| ideal >> w & 1 == 1))
        .collect()
}

/// Maximal elements of the ideal.
pub fn ideal_maximal(p: &FinitePoset, ideal: u64) -> Vec<ElemId> {
    (0..p.len())
        .filter(|&x| ideal >> x & 1 == 1 && p.up_covers(x).iter().all(|&y| ideal >> y & 1 == 0))
        .collect()
}

/// The ideal containing every element (safe for all supported sizes).
pub fn full_mask(n: usize) -> u64 {
    assert!(n <= 64);
    if n == 0 {
        0
    } else {
        u64::MAX >> (64 - n)
    }
}

/// Bitmask of the elements of one color.
pub fn color_mask(p: &FinitePoset, a: ColorId) -> u64 {
    let mut m = 0;
    for x in 0..p.len() {
        if p.color(x) == a {
            m |= 1 << x;
        }
    }
    m
}

impl SplitLattice {
    /// Enumerate every ideal of the poset by breadth-first growth from
    /// the empty ideal, adding minimal filter elements one at a time.
    pub fn enumerate(p: &FinitePoset, cap: usize) -> Result<SplitLattice> {
        if p.len() > 64 {
            return Err(Error::TooManyElements(p.len()));
        }
        if cap == 0 {
            return Err(Error::InvalidInput("split cap must be at least 1".into()));
        }
        let mut seen: HashMap<u64, ()> = HashMap::new();
        let mut queue = VecDeque::new();
        seen.insert(0, ());
        queue.push_back(0u64);
        while let Some(ideal) = queue.pop_front() {
            for x in filter_minimal(p, ideal) {
                let next = ideal | 1 << x;
                if seen.insert(next, ()).is_none() {
                    if seen.len() > cap {
                        return Err(Error::SplitCapExceeded { cap });
                    }
                    queue.push_back(next);
                }
            }
        }
        let mut ideals: Vec<u64> = seen.into_keys().collect();
        ideals.sort_unstable_by_key(|&m| (m.count_ones(), m));
        let index: HashMap<u64, usize> = ideals.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let mut up_edges = Vec::new();
        let mut up_adj = vec![Vec::new(); ideals.len()];
        let mut down_adj = vec![Vec::new(); ideals.len()];
        for (i, &ideal) in ideals.iter().enumerate() {
            for x in filter_minimal(p, ideal) {
                let j = index[&(ideal | 1 << x)];
                let c = p.color(x);
                up_edges.push((i, j, c));
                up_adj[i].push((j, c));
                down_adj[j].push((i, c));
            }
        }
        up_edges.sort_unstable();
        Ok(SplitLattice {
            ideals,
            index,
            up_edges,
            up_adj,
            down_adj,
        })
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideal(&self, i: usize) -> u64 {
        self.ideals[i]
    }

    pub fn ideals(&self) -> &[u64] {
        &self.ideals
    }

    pub fn index_of(&self, ideal: u64) -> Option<usize> {
        self.index.get(&ideal).copied()
    }

    /// Colored covering edges, (lower split, upper split, color).
    pub fn up_edges(&self) -> &[(usize, usize, ColorId)] {
        &self.up_edges
    }

    pub fn up_adj(&self, i: usize) -> &[(usize, ColorId)] {
        &self.up_adj[i]
    }

    pub fn down_adj(&self, i: usize) -> &[(usize, ColorId)] {
        &self.down_adj[i]
    }

    /// Index of the split `(P, empty)`.
    pub fn bottom(&self) -> usize {
        0
    }

    /// Index of the split `(empty, P)`.
    pub fn top(&self) -> usize {
        self.ideals.len() - 1
    }

    /// Connected components of the Hasse graph.
    pub fn components(&self) -> ComponentPartition {
        let n = self.len();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = count;
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for &(j, _) in self.up_adj[i].iter().chain(self.down_adj[i].iter()) {
                    if comp[j] == usize::MAX {
                        comp[j] = count;
                        stack.push(j);
                    }
                }
            }
            count += 1;
        }
        ComponentPartition { comp, count }
    }
}

#[derive(Debug, Clone)]
pub struct ComponentPartition {
    pub comp: Vec<usize>,
    pub count: usize,
}

/// Signed net count of color-`b` elements between two ideals:
/// `|P_b ∩ (I' - I)| - |P_b ∩ (I - I')|`.
pub fn delta(p: &FinitePoset, b: ColorId, ideal_prime: u64, ideal: u64) -> i64 {
    let mask = color_mask(p, b);
    let gained = (ideal_prime & !ideal & mask).count_ones() as i64;
    let lost = (ideal & !ideal_prime & mask).count_ones() as i64;
    gained - lost
}

/// The periodic counterpart of [`delta`]. Errors when the two splits
/// carry different sentinel patterns (then they sit in different
/// components and the symmetric difference is infinite).
pub fn delta_periodic(
    h: &PeriodicHeap,
    b: ColorId,
    s_prime: &PeriodicSplit,
    s: &PeriodicSplit,
) -> Result<i64> {
    let mut total = 0;
    for u in 0..h.n_cells() {
        if h.color(u) != b {
            continue;
        }
        match (s_prime.frontier[u], s.frontier[u]) {
            (Layer::Fin(a), Layer::Fin(c)) => total += a - c,
            (x, y) if x == y => {}
            _ => {
                return Err(Error::Refused(
                    "splits are not in the same component (sentinel patterns differ)".into(),
                ))
            }
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::ColorGraph;
    use crate::poset::ColorPolicy;

    fn two_chain() -> FinitePoset {
        let g = ColorGraph::new(&["a", "b"], &[("a", "b")]).unwrap();
        FinitePoset::build(
            g,
            &[("x", "a"), ("y", "b")],
            &[("x", "y")],
            ColorPolicy::RequireSurjective,
        )
        .unwrap()
    }

    fn two_antichain() -> FinitePoset {
        let g = ColorGraph::new(&["a"], &[]).unwrap();
        FinitePoset::build(
            g,
            &[("x", "a"), ("y", "a")],
            &[],
            ColorPolicy::RequireSurjective,
        )
        .unwrap()
    }

    #[test]
    fn fig2_has_thirteen_splits() {
        let p = fixtures::fig2_poset();
        let l = SplitLattice::enumerate(&p, DEFAULT_SPLIT_CAP).unwrap();
        assert_eq!(l.len(), 13);
        assert_eq!(l.components().count, 1);
    }

    #[test]
    fn small_lattices() {
        let l = SplitLattice::enumerate(&two_chain(), 100).unwrap();
        assert_eq!(l.len(), 3);
        let l = SplitLattice::enumerate(&two_antichain(), 100).unwrap();
        assert_eq!(l.len(), 4);
    }

    #[test]
    fn cap_is_enforced() {
        let p = fixtures::fig2_poset();
        let r = SplitLattice::enumerate(&p, 5);
        assert!(matches!(r, Err(Error::SplitCapExceeded { cap: 5 })));
    }

    #[test]
    fn empty_poset_single_component() {
        let g = ColorGraph::new(&["a"], &[]).unwrap();
        let p = FinitePoset::build(g, &[] as &[(&str, &str)], &[], ColorPolicy::RestrictColors)
            .unwrap();
        let l = SplitLattice::enumerate(&p, 10).unwrap();
        assert_eq!(l.len(), 1);
        assert_eq!(l.components().count, 1);
    }

    #[test]
    fn fig2_lowest_edge_is_colored_a() {
        let p = fixtures::fig2_poset();
        let l = SplitLattice::enumerate(&p, DEFAULT_SPLIT_CAP).unwrap();
        let a = p.graph().color_id("a").unwrap();
        let g = p.graph().color_id("g").unwrap();
        let u = p.elem_id("u").unwrap();
        let q = p.elem_id("q").unwrap();
        // The minimal elements of P are u (color a) and q (color g).
        let mut from_bottom: Vec<_> = l
            .up_adj(l.bottom())
            .iter()
            .map(|&(j, c)| (l.ideal(j), c))
            .collect();
        from_bottom.sort_unstable();
        let mut expect = vec![(1 << u, a), (1 << q, g)];
        expect.sort_unstable();
        assert_eq!(from_bottom, expect);
    }

    #[test]
    fn two_chain_edge_colors_in_order() {
        let p = two_chain();
        let l = SplitLattice::enumerate(&p, 100).unwrap();
        let colors: Vec<ColorId> = l.up_edges().iter().map(|&(_, _, c)| c).collect();
        assert_eq!(colors, vec![0, 1]);
    }

    #[test]
    fn lattice_is_closed_under_meet_and_join() {
        let p = fixtures::fig2_poset();
        let l = SplitLattice::enumerate(&p, DEFAULT_SPLIT_CAP).unwrap();
        for i in 0..l.len() {
            for j in 0..l.len() {
                assert!(l.index_of(l.ideal(i) & l.ideal(j)).is_some());
                assert!(l.index_of(l.ideal(i) | l.ideal(j)).is_some());
            }
        }
    }

    #[test]
    fn delta_on_fig2() {
        let p = fixtures::fig2_poset();
        let u = p.elem_id("u").unwrap();
        let g = p.graph();
        // From (P, empty) to the ideal {u}: one element of color a moved.
        for name in ["a", "b", "c", "d", "g"] {
            let c = g.color_id(name).unwrap();
            let expect = if name == "a" { 1 } else { 0 };
            assert_eq!(delta(&p, c, 1 << u, 0), expect);
        }
        // Antisymmetry.
        let a = g.color_id("a").unwrap();
        assert_eq!(delta(&p, a, 0, 1 << u), -1);
    }

    #[test]
    fn delta_additivity_on_fig2() {
        let p = fixtures::fig2_poset();
        let l = SplitLattice::enumerate(&p, DEFAULT_SPLIT_CAP).unwrap();
        for b in 0..p.graph().len() {
            for i in (0..l.len()).step_by(3) {
                for j in (0..l.len()).step_by(2) {
                    for k in 0..l.len() {
                        let lhs = delta(&p, b, l.ideal(k), l.ideal(i));
                        let rhs = delta(&p, b, l.ideal(k), l.ideal(j))
                            + delta(&p, b, l.ideal(j), l.ideal(i));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn delta_periodic_zchain() {
        let z = fixtures::zchain_heap();
        let s0 = PeriodicSplit::uniform(1, Layer::Fin(0));
        let s3 = PeriodicSplit::uniform(1, Layer::Fin(3));
        assert_eq!(delta_periodic(&z, 0, &s3, &s0).unwrap(), 3);
        let all = PeriodicSplit::uniform(1, Layer::PosInf);
        assert!(delta_periodic(&z, 0, &all, &s0).is_err());
    }
}
