//! The worked examples shipped with the toolkit, as in-code constructors.
//!
//! The same data ships as JSON files under `fixtures/` at the repository
//! root; round-trip tests keep the two in sync.

use crate::graph::ColorGraph;
use crate::heap::{Layer, PeriodicHeap, PeriodicSplit};
use crate::poset::{ColorPolicy, FinitePoset};
use crate::tailed::{TailSide, TailedPoset, TailedSplit};

/// The D5 color graph: edges b-a, c-a, a-d, d-g.
pub fn fig2_graph() -> ColorGraph {
    ColorGraph::new(
        &["a", "b", "c", "d", "g"],
        &[("b", "a"), ("c", "a"), ("a", "d"), ("d", "g")],
    )
    .unwrap()
}

/// The six-element poset over D5: u_a, x_b, y_c, v_a, z_d, q_g with
/// covers u->x, u->y, x->v, y->v, v->z, q->z.
pub fn fig2_poset() -> FinitePoset {
    FinitePoset::build(
        fig2_graph(),
        &[
            ("u", "a"),
            ("x", "b"),
            ("y", "c"),
            ("v", "a"),
            ("z", "d"),
            ("q", "g"),
        ],
        &[
            ("u", "x"),
            ("u", "y"),
            ("x", "v"),
            ("y", "v"),
            ("v", "z"),
            ("q", "z"),
        ],
        ColorPolicy::RequireSurjective,
    )
    .unwrap()
}

/// The affine E6-type color graph: a central color g with three legs
/// a-b, c-d, e-f.
pub fn fig1_graph() -> ColorGraph {
    ColorGraph::new(
        &["a", "b", "c", "d", "e", "f", "g"],
        &[
            ("b", "a"),
            ("a", "g"),
            ("g", "c"),
            ("c", "d"),
            ("g", "e"),
            ("e", "f"),
        ],
    )
    .unwrap()
}

/// The full heap over the affine E6 graph, on a 12-cell fundamental
/// domain (color multiplicities g:3, a:2, c:2, e:2, b:1, d:1, f:1).
pub fn fig1_heap() -> PeriodicHeap {
    PeriodicHeap::build(
        fig1_graph(),
        &[
            ("i", "f"),
            ("j", "g"),
            ("k", "e"),
            ("l", "c"),
            ("m", "g"),
            ("n", "d"),
            ("o", "a"),
            ("p", "c"),
            ("q", "b"),
            ("r", "g"),
            ("s", "a"),
            ("t", "e"),
        ],
        &[
            ("i", "k", 0),
            ("j", "k", 0),
            ("j", "l", 0),
            ("k", "m", 0),
            ("l", "m", 0),
            ("l", "n", 0),
            ("m", "o", 0),
            ("m", "p", 0),
            ("n", "p", 0),
            ("o", "q", 0),
            ("o", "r", 0),
            ("p", "r", 0),
            ("q", "s", 0),
            ("r", "s", 0),
            ("r", "t", 0),
            ("s", "j", 1),
            ("t", "j", 1),
            ("t", "i", 1),
        ],
    )
    .unwrap()
}

/// A proper split of the full heap: ideal cut at layer 0 in every cell.
pub fn fig1_seed_split() -> PeriodicSplit {
    PeriodicSplit::uniform(12, Layer::Fin(0))
}

/// The integer chain as a one-cell heap over a single color.
pub fn zchain_heap() -> PeriodicHeap {
    let g = ColorGraph::new(&["a"], &[]).unwrap();
    PeriodicHeap::build(g, &[("c0", "a")], &[("c0", "c0", 1)]).unwrap()
}

/// Color graph for the upsilon worked example: two triangles a-b-c and
/// d-e-f joined through a central color g (edges a-g and g-d).
pub fn fig3_graph() -> ColorGraph {
    ColorGraph::new(
        &["a", "b", "c", "d", "e", "f", "g"],
        &[
            ("a", "b"),
            ("b", "c"),
            ("c", "a"),
            ("a", "g"),
            ("g", "d"),
            ("d", "e"),
            ("e", "f"),
            ("f", "d"),
        ],
    )
    .unwrap()
}

/// The upsilon worked example: a bottom element of color g with two
/// infinite ascending legs cycling a,b,c and d,e,f. Truncated to six
/// elements per leg, with periodic tails carrying the rest.
pub fn fig3_fixture() -> TailedPoset {
    let graph = fig3_graph();
    let poset = FinitePoset::build(
        graph,
        &[
            ("g0", "g"),
            ("a1", "a"),
            ("b1", "b"),
            ("c1", "c"),
            ("a2", "a"),
            ("b2", "b"),
            ("c2", "c"),
            ("d1", "d"),
            ("e1", "e"),
            ("f1", "f"),
            ("d2", "d"),
            ("e2", "e"),
            ("f2", "f"),
        ],
        &[
            ("g0", "a1"),
            ("a1", "b1"),
            ("b1", "c1"),
            ("c1", "a2"),
            ("a2", "b2"),
            ("b2", "c2"),
            ("g0", "d1"),
            ("d1", "e1"),
            ("e1", "f1"),
            ("f1", "d2"),
            ("d2", "e2"),
            ("e2", "f2"),
        ],
        ColorPolicy::RequireSurjective,
    )
    .unwrap();
    TailedPoset::new(
        poset,
        &[
            ("left", "c2", &["a", "b", "c"]),
            ("right", "f2", &["d", "e", "f"]),
        ],
    )
    .unwrap()
}

/// The split drawn in the upsilon example: the ideal holds the bottom g,
/// the first a of the left leg, and the entire right leg.
pub fn fig3_split(fixture: &TailedPoset) -> TailedSplit {
    fixture
        .split(
            &["g0", "a1", "d1", "e1", "f1", "d2", "e2", "f2"],
            &[("left", TailSide::Filter), ("right", TailSide::Ideal)],
        )
        .unwrap()
}
