//! Z-periodic colored posets (the encoding used for full heaps), with
//! window materialization and lazy split navigation.
//!
//! A heap is a quiver on a finite set of cells; a cover `(u, v, k)` means
//! element `(u, n)` is covered by `(v, n + k)` for every integer layer `n`.
//! An ideal is encoded by a frontier: per cell, the topmost layer still
//! inside the ideal, with -inf / +inf sentinels for columns entirely in
//! the filter or entirely in the ideal.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{ColorGraph, ColorId};
use crate::poset::{ColorPolicy, FinitePoset};

pub type CellId = usize;

/// An element of the infinite poset: (cell, layer).
pub type HeapElem = (CellId, i64);

/// A per-cell frontier entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Layer {
    NegInf,
    Fin(i64),
    PosInf,
}

impl Layer {
    fn minus(self, k: i64) -> Layer {
        match self {
            Layer::Fin(n) => Layer::Fin(n - k),
            s => s,
        }
    }
}

/// A split of the infinite poset, encoded by its ideal frontier.
///
/// The ideal is `{ (u, n) : n <= frontier(u) }`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PeriodicSplit {
    pub frontier: Vec<Layer>,
}

impl PeriodicSplit {
    pub fn uniform(n_cells: usize, layer: Layer) -> Self {
        PeriodicSplit {
            frontier: vec![layer; n_cells],
        }
    }

    /// Translate every finite frontier entry by `d` layers.
    pub fn translate(&self, d: i64) -> Self {
        PeriodicSplit {
            frontier: self
                .frontier
                .iter()
                .map(|&l| match l {
                    Layer::Fin(n) => Layer::Fin(n + d),
                    s => s,
                })
                .collect(),
        }
    }
}

/// Direction of a Hasse step in the split space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Direction {
    /// The ideal grows: a minimal element of F moves down into I.
    Up,
    /// The ideal shrinks: a maximal element of I moves up into F.
    Down,
}

#[derive(Debug, Clone)]
pub struct PeriodicHeap {
    graph: ColorGraph,
    names: Vec<String>,
    color: Vec<ColorId>,
    covers: Vec<(CellId, CellId, i64)>,
    up: Vec<Vec<(CellId, i64)>>,
    down: Vec<Vec<(CellId, i64)>>,
    /// Minimum total shift over nonempty quiver paths u -> v.
    sigma: Vec<Vec<Option<i64>>>,
    max_abs_shift: i64,
}

impl PeriodicHeap {
    pub fn build<S: AsRef<str>>(
        graph: ColorGraph,
        cells: &[(S, S)],
        covers: &[(S, S, i64)],
    ) -> Result<PeriodicHeap> {
        let mut names = Vec::with_capacity(cells.len());
        let mut color = Vec::with_capacity(cells.len());
        for (id, c) in cells {
            let id = id.as_ref();
            if names.iter().any(|n| n == id) {
                return Err(Error::DuplicateElement(id.to_string()));
            }
            names.push(id.to_string());
            color.push(graph.color_id(c.as_ref())?);
        }
        let n = names.len();
        let find = |id: &str| -> Result<CellId> {
            names
                .iter()
                .position(|x| x == id)
                .ok_or_else(|| Error::UnknownCell(id.to_string()))
        };
        let mut cover_ids: Vec<(CellId, CellId, i64)> = Vec::new();
        for (u, v, k) in covers {
            let t = (find(u.as_ref())?, find(v.as_ref())?, *k);
            if cover_ids.contains(&t) {
                return Err(Error::DuplicateCover(
                    names[t.0].clone(),
                    names[t.1].clone(),
                ));
            }
            cover_ids.push(t);
        }
        cover_ids.sort_unstable();

        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(u, v, k) in &cover_ids {
            up[u].push((v, k));
            down[v].push((u, k));
        }
        for u in 0..n {
            if up[u].is_empty() {
                return Err(Error::MissingCover(names[u].clone(), "up"));
            }
            if down[u].is_empty() {
                return Err(Error::MissingCover(names[u].clone(), "down"));
            }
        }

        // Every quiver cycle must have strictly positive total shift;
        // otherwise the induced relation is cyclic or an interval is
        // infinite. Scale shifts so that "total <= 0" becomes a strictly
        // negative cycle, then run Bellman-Ford.
        let scale = cover_ids.len() as i64 + 1;
        let mut dist = vec![0i64; n];
        let mut pred: Vec<Option<(CellId, i64)>> = vec![None; n];
        let mut relaxed_vertex = None;
        for round in 0..=n {
            let mut changed = false;
            for &(u, v, k) in &cover_ids {
                let w = scale * k - 1;
                if dist[u] + w < dist[v] {
                    dist[v] = dist[u] + w;
                    pred[v] = Some((u, k));
                    changed = true;
                    if round == n {
                        relaxed_vertex = Some(v);
                    }
                }
            }
            if !changed {
                break;
            }
        }
        if let Some(mut x) = relaxed_vertex {
            // Walk predecessors onto the cycle, then sum its shifts.
            for _ in 0..n {
                x = pred[x].unwrap().0;
            }
            let start = x;
            let mut shift = 0;
            let mut cur = x;
            loop {
                let (p, k) = pred[cur].unwrap();
                shift += k;
                cur = p;
                if cur == start {
                    break;
                }
            }
            return Err(Error::NonpositiveShiftCycle { shift });
        }

        // All-pairs minimum shift over nonempty paths (Floyd-Warshall;
        // safe since all cycles are positive).
        let mut sigma: Vec<Vec<Option<i64>>> = vec![vec![None; n]; n];
        for &(u, v, k) in &cover_ids {
            sigma[u][v] = Some(sigma[u][v].map_or(k, |s: i64| s.min(k)));
        }
        for w in 0..n {
            for u in 0..n {
                if let Some(a) = sigma[u][w] {
                    for v in 0..n {
                        if let Some(b) = sigma[w][v] {
                            let c = a + b;
                            sigma[u][v] = Some(sigma[u][v].map_or(c, |s| s.min(c)));
                        }
                    }
                }
            }
        }

        let max_abs_shift = cover_ids
            .iter()
            .map(|&(_, _, k)| k.abs())
            .max()
            .unwrap_or(1);
        let heap = PeriodicHeap {
            graph,
            names,
            color,
            covers: cover_ids,
            up,
            down,
            sigma,
            max_abs_shift,
        };

        // The quiver must present the covers of the induced poset: no
        // cover may have another element strictly between its endpoints.
        let oracle = heap.order_oracle();
        for &(u, v, k) in &heap.covers {
            if !heap
                .open_interval_elems(&oracle, (u, 0), (v, k))?
                .is_empty()
            {
                return Err(Error::RedundantCover(
                    heap.names[u].clone(),
                    heap.names[v].clone(),
                ));
            }
        }
        Ok(heap)
    }

    pub fn graph(&self) -> &ColorGraph {
        &self.graph
    }

    pub fn n_cells(&self) -> usize {
        self.names.len()
    }

    pub fn cell_name(&self, u: CellId) -> &str {
        &self.names[u]
    }

    pub fn cell_id(&self, name: &str) -> Result<CellId> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownCell(name.to_string()))
    }

    pub fn color(&self, u: CellId) -> ColorId {
        self.color[u]
    }

    pub fn covers(&self) -> &[(CellId, CellId, i64)] {
        &self.covers
    }

    pub fn max_abs_shift(&self) -> i64 {
        self.max_abs_shift
    }

    /// True iff every color of the graph appears on some cell; by
    /// periodicity its appearances are then unbounded in both directions.
    pub fn is_full_heap(&self) -> bool {
        (0..self.graph.len()).all(|c| self.color.contains(&c))
    }

    pub fn quiver_reachable(&self, u: CellId, v: CellId) -> bool {
        self.sigma[u][v].is_some()
    }

    /// Minimum total shift over nonempty quiver paths u -> v, when any.
    pub fn min_shift(&self, u: CellId, v: CellId) -> Option<i64> {
        self.sigma[u][v]
    }

    /// Fresh order oracle (memoized exact comparability queries).
    pub fn order_oracle(&self) -> OrderOracle<'_> {
        OrderOracle {
            heap: self,
            memo: RefCell::new(HashMap::new()),
        }
    }

    fn open_interval_elems(
        &self,
        oracle: &OrderOracle<'_>,
        x: HeapElem,
        y: HeapElem,
    ) -> Result<Vec<HeapElem>> {
        if !oracle.lt(x, y) {
            return Err(Error::Refused(format!(
                "open interval requires ({},{}) < ({},{})",
                self.names[x.0], x.1, self.names[y.0], y.1
            )));
        }
        let mut out = Vec::new();
        for w in 0..self.n_cells() {
            let (Some(lo), Some(hi)) = (self.sigma[x.0][w], self.sigma[w][y.0]) else {
                continue;
            };
            for j in (x.1 + lo)..=(y.1 - hi) {
                let z = (w, j);
                if z != x && z != y && oracle.lt(x, z) && oracle.lt(z, y) {
                    out.push(z);
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Downward-closure check for a frontier.
    pub fn validate_split(&self, s: &PeriodicSplit) -> Result<()> {
        if s.frontier.len() != self.n_cells() {
            return Err(Error::InvalidInput(format!(
                "frontier has {} entries, heap has {} cells",
                s.frontier.len(),
                self.n_cells()
            )));
        }
        for &(u, v, k) in &self.covers {
            if s.frontier[u] < s.frontier[v].minus(k) {
                return Err(Error::FrontierNotClosed(
                    self.names[u].clone(),
                    self.names[v].clone(),
                ));
            }
        }
        Ok(())
    }

    /// Maximal elements of the ideal, at most one per cell.
    ///
    /// Errors when a sentinel column would contribute infinitely many
    /// maximal elements (which forces EC to fail).
    pub fn ideal_maximal(&self, s: &PeriodicSplit) -> Result<Vec<HeapElem>> {
        let mut out = Vec::new();
        for u in 0..self.n_cells() {
            match s.frontier[u] {
                Layer::NegInf => {}
                Layer::Fin(n) => {
                    if self.up[u]
                        .iter()
                        .all(|&(v, k)| s.frontier[v] < Layer::Fin(n + k))
                    {
                        out.push((u, n));
                    }
                }
                Layer::PosInf => {
                    if self.up[u]
                        .iter()
                        .all(|&(v, _)| s.frontier[v] != Layer::PosInf)
                    {
                        return Err(Error::EcViolation(format!(
                            "cell `{}` contributes infinitely many maximal ideal elements",
                            self.names[u]
                        )));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Minimal elements of the filter, at most one per cell.
    pub fn filter_minimal(&self, s: &PeriodicSplit) -> Result<Vec<HeapElem>> {
        let mut out = Vec::new();
        for u in 0..self.n_cells() {
            match s.frontier[u] {
                Layer::PosInf => {}
                Layer::Fin(n) => {
                    if self.down[u]
                        .iter()
                        .all(|&(w, k)| s.frontier[w] >= Layer::Fin(n + 1 - k))
                    {
                        out.push((u, n + 1));
                    }
                }
                Layer::NegInf => {
                    if self.down[u]
                        .iter()
                        .all(|&(w, _)| s.frontier[w] != Layer::NegInf)
                    {
                        return Err(Error::EcViolation(format!(
                            "cell `{}` contributes infinitely many minimal filter elements",
                            self.names[u]
                        )));
                    }
                }
            }
        }
        Ok(out)
    }

    /// All splits one Hasse step away, with the transferred color.
    pub fn split_neighbors(
        &self,
        s: &PeriodicSplit,
    ) -> Result<Vec<(ColorId, Direction, PeriodicSplit)>> {
        self.validate_split(s)?;
        let mut out = Vec::new();
        for (u, layer) in self.filter_minimal(s)? {
            let mut t = s.clone();
            t.frontier[u] = Layer::Fin(layer);
            out.push((self.color[u], Direction::Up, t));
        }
        for (u, layer) in self.ideal_maximal(s)? {
            let mut t = s.clone();
            t.frontier[u] = Layer::Fin(layer - 1);
            out.push((self.color[u], Direction::Down, t));
        }
        Ok(out)
    }

    /// All splits within `radius` Hasse steps of `seed`, with distances.
    pub fn ball(
        &self,
        seed: &PeriodicSplit,
        radius: usize,
    ) -> Result<BTreeMap<PeriodicSplit, usize>> {
        self.validate_split(seed)?;
        let mut dist: BTreeMap<PeriodicSplit, usize> = BTreeMap::new();
        dist.insert(seed.clone(), 0);
        let mut queue = VecDeque::new();
        queue.push_back(seed.clone());
        while let Some(s) = queue.pop_front() {
            let d = dist[&s];
            if d == radius {
                continue;
            }
            for (_, _, t) in self.split_neighbors(&s)? {
                if !dist.contains_key(&t) {
                    dist.insert(t.clone(), d + 1);
                    queue.push_back(t);
                }
            }
        }
        Ok(dist)
    }

    /// Materialize the finite induced poset on layers `n_min..=n_max`.
    ///
    /// Elements are named `cell@layer`. Boundary elements sit within the
    /// maximum cover shift of either end of the window.
    pub fn materialize_window(&self, n_min: i64, n_max: i64) -> Result<WindowPoset> {
        if n_min > n_max {
            return Err(Error::EmptyWindow(n_min, n_max));
        }
        let mut elements = Vec::new();
        let mut which = Vec::new();
        for n in n_min..=n_max {
            for u in 0..self.n_cells() {
                elements.push((
                    format!("{}@{}", self.names[u], n),
                    self.graph.name(self.color[u]).to_string(),
                ));
                which.push((u, n));
            }
        }
        let mut covers = Vec::new();
        for &(u, v, k) in &self.covers {
            for n in n_min..=n_max {
                let m = n + k;
                if m >= n_min && m <= n_max {
                    covers.push((
                        format!("{}@{}", self.names[u], n),
                        format!("{}@{}", self.names[v], m),
                    ));
                }
            }
        }
        let poset = FinitePoset::build(
            self.graph.clone(),
            &elements,
            &covers,
            ColorPolicy::RestrictColors,
        )?;
        let margin = self.max_abs_shift;
        let interior = which
            .iter()
            .map(|&(_, n)| n >= n_min + margin && n <= n_max - margin)
            .collect();
        Ok(WindowPoset {
            poset,
            interior,
            element: which,
        })
    }

    /// Count the components of the split space.
    ///
    /// Two splits connect by a finite Hasse path iff their frontiers carry
    /// the same sentinel pattern, so components correspond to valid
    /// pattern pairs (cells entirely ideal, cells entirely filter). The
    /// ideal part must be closed under quiver ancestors and the filter
    /// part under quiver descendants.
    pub fn component_census(&self) -> Result<ComponentCensus> {
        let sccs = self.sccs();
        let n_scc = sccs.comp_count;
        if n_scc > 20 {
            return Err(Error::SizeGuard(format!(
                "component census supports at most 20 quiver SCCs, got {n_scc}"
            )));
        }
        // DAG reachability between SCCs.
        let mut reach = vec![vec![false; n_scc]; n_scc];
        for u in 0..self.n_cells() {
            for v in 0..self.n_cells() {
                if self.sigma[u][v].is_some() {
                    reach[sccs.comp[u]][sccs.comp[v]] = true;
                }
            }
        }
        let closed_down: Vec<u32> = (0..1u32 << n_scc)
            .filter(|&mask| {
                // ancestor-closed: c in mask and reach[d][c] => d in mask
                (0..n_scc).all(|c| {
                    mask >> c & 1 == 0 || (0..n_scc).all(|d| !reach[d][c] || mask >> d & 1 == 1)
                })
            })
            .collect();
        let mut reps = Vec::new();
        for &dmask in &closed_down {
            for umask in 0..1u32 << n_scc {
                if dmask & umask != 0 {
                    continue;
                }
                // descendant-closed filter part
                let ok = (0..n_scc).all(|c| {
                    umask >> c & 1 == 0 || (0..n_scc).all(|d| !reach[c][d] || umask >> d & 1 == 1)
                });
                if !ok {
                    continue;
                }
                let mut frontier = vec![Layer::Fin(0); self.n_cells()];
                for u in 0..self.n_cells() {
                    if dmask >> sccs.comp[u] & 1 == 1 {
                        frontier[u] = Layer::PosInf;
                    } else if umask >> sccs.comp[u] & 1 == 1 {
                        frontier[u] = Layer::NegInf;
                    }
                }
                let mut split = PeriodicSplit { frontier };
                self.solve_finite_frontier(&mut split);
                self.validate_split(&split)?;
                reps.push(split);
            }
        }
        reps.sort();
        Ok(ComponentCensus {
            representatives: reps,
        })
    }

    /// Adjust the finite entries of a frontier so the downward-closure
    /// constraints hold (difference constraints, Bellman-Ford).
    fn solve_finite_frontier(&self, s: &mut PeriodicSplit) {
        let n = self.n_cells();
        for _ in 0..=n {
            let mut changed = false;
            for &(u, v, k) in &self.covers {
                if let (Layer::Fin(fu), Layer::Fin(fv)) = (s.frontier[u], s.frontier[v]) {
                    // need fu >= fv - k
                    if fu < fv - k {
                        s.frontier[v] = Layer::Fin(fu + k);
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
    }

    fn sccs(&self) -> SccInfo {
        // Kosaraju.
        let n = self.n_cells();
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        for s in 0..n {
            if seen[s] {
                continue;
            }
            // Iterative DFS with explicit post-order.
            let mut stack = vec![(s, 0usize)];
            seen[s] = true;
            while let Some(&mut (u, ref mut i)) = stack.last_mut() {
                if *i < self.up[u].len() {
                    let (v, _) = self.up[u][*i];
                    *i += 1;
                    if !seen[v] {
                        seen[v] = true;
                        stack.push((v, 0));
                    }
                } else {
                    order.push(u);
                    stack.pop();
                }
            }
        }
        let mut comp = vec![usize::MAX; n];
        let mut comp_count = 0;
        for &s in order.iter().rev() {
            if comp[s] != usize::MAX {
                continue;
            }
            let mut stack = vec![s];
            comp[s] = comp_count;
            while let Some(u) = stack.pop() {
                for &(w, _) in &self.down[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = comp_count;
                        stack.push(w);
                    }
                }
            }
            comp_count += 1;
        }
        SccInfo { comp, comp_count }
    }
}

struct SccInfo {
    comp: Vec<usize>,
    comp_count: usize,
}

/// Result of [`PeriodicHeap::component_census`].
#[derive(Debug, Clone)]
pub struct ComponentCensus {
    /// One representative split per component, canonically ordered.
    pub representatives: Vec<PeriodicSplit>,
}

impl ComponentCensus {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }
}

/// A materialized window of a periodic heap.
#[derive(Debug, Clone)]
pub struct WindowPoset {
    pub poset: FinitePoset,
    /// Per element: away from both window ends by the maximum cover shift.
    pub interior: Vec<bool>,
    /// Per element: the (cell, layer) it came from.
    pub element: Vec<HeapElem>,
}

/// Memoized exact comparability queries on the infinite poset.
///
/// Soundness of the pruning: any path from x into an element z <= y must
/// keep `layer(z) + sigma(cell(z), cell(y)) <= layer(y)`, since sigma is
/// the minimum achievable remaining shift.
pub struct OrderOracle<'h> {
    heap: &'h PeriodicHeap,
    memo: RefCell<HashMap<(CellId, CellId, i64), bool>>,
}

impl<'h> OrderOracle<'h> {
    pub fn le(&self, x: HeapElem, y: HeapElem) -> bool {
        if x == y {
            return true;
        }
        let key = (x.0, y.0, y.1 - x.1);
        if let Some(&v) = self.memo.borrow().get(&key) {
            return v;
        }
        let result = self.search(x.0, y.0, y.1 - x.1);
        self.memo.borrow_mut().insert(key, result);
        result
    }

    pub fn lt(&self, x: HeapElem, y: HeapElem) -> bool {
        x != y && self.le(x, y)
    }

    pub fn comparable(&self, x: HeapElem, y: HeapElem) -> bool {
        self.le(x, y) || self.le(y, x)
    }

    /// Is there a nonempty cover path from (u, 0) to (v, d)?
    fn search(&self, u: CellId, v: CellId, d: i64) -> bool {
        let heap = self.heap;
        let mut seen: HashSet<(CellId, i64)> = HashSet::new();
        let mut stack = vec![(u, 0i64)];
        seen.insert((u, 0));
        while let Some((w, j)) = stack.pop() {
            for &(w2, k) in &heap.up[w] {
                let j2 = j + k;
                if (w2, j2) == (v, d) {
                    return true;
                }
                match heap.sigma[w2][v] {
                    Some(s) if j2 + s <= d && seen.insert((w2, j2)) => {
                        stack.push((w2, j2));
                    }
                    _ => {}
                }
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn zchain_builds_and_fig1_builds() {
        let z = fixtures::zchain_heap();
        assert_eq!(z.n_cells(), 1);
        assert!(z.is_full_heap());
        let h = fixtures::fig1_heap();
        assert_eq!(h.n_cells(), 12);
        assert!(h.is_full_heap());
    }

    #[test]
    fn zero_shift_self_cover_rejected() {
        let g = ColorGraph::new(&["a"], &[]).unwrap();
        let r = PeriodicHeap::build(g, &[("c", "a")], &[("c", "c", 0)]);
        assert!(matches!(r, Err(Error::NonpositiveShiftCycle { shift: 0 })));
    }

    #[test]
    fn missing_color_not_full() {
        let g = ColorGraph::new(&["a", "b"], &[("a", "b")]).unwrap();
        let h = PeriodicHeap::build(g, &[("c", "a")], &[("c", "c", 1)]).unwrap();
        assert!(!h.is_full_heap());
    }

    #[test]
    fn zchain_neighbors() {
        let z = fixtures::zchain_heap();
        let s = PeriodicSplit::uniform(1, Layer::Fin(0));
        let nbrs = z.split_neighbors(&s).unwrap();
        assert_eq!(nbrs.len(), 2);
        assert!(nbrs.iter().any(|(c, d, t)| {
            *c == 0 && *d == Direction::Up && t.frontier == vec![Layer::Fin(1)]
        }));
        assert!(nbrs.iter().any(|(c, d, t)| {
            *c == 0 && *d == Direction::Down && t.frontier == vec![Layer::Fin(-1)]
        }));
    }

    #[test]
    fn all_ideal_split_has_no_neighbors() {
        let h = fixtures::fig1_heap();
        let s = PeriodicSplit::uniform(12, Layer::PosInf);
        assert_eq!(h.split_neighbors(&s).unwrap().len(), 0);
        let s = PeriodicSplit::uniform(12, Layer::NegInf);
        assert_eq!(h.split_neighbors(&s).unwrap().len(), 0);
    }

    #[test]
    fn fig1_proper_seed_has_two_up_neighbors() {
        let h = fixtures::fig1_heap();
        let s = PeriodicSplit::uniform(12, Layer::Fin(0));
        let nbrs = h.split_neighbors(&s).unwrap();
        let ups: Vec<_> = nbrs
            .iter()
            .filter(|(_, d, _)| *d == Direction::Up)
            .map(|(c, _, _)| h.graph().name(*c).to_string())
            .collect();
        let downs: Vec<_> = nbrs
            .iter()
            .filter(|(_, d, _)| *d == Direction::Down)
            .map(|(c, _, _)| h.graph().name(*c).to_string())
            .collect();
        assert_eq!(ups, vec!["f", "g"]);
        assert_eq!(downs, vec!["a", "e"]);
    }

    #[test]
    fn zchain_ball_radius_two() {
        let z = fixtures::zchain_heap();
        let s = PeriodicSplit::uniform(1, Layer::Fin(0));
        let ball = z.ball(&s, 2).unwrap();
        assert_eq!(ball.len(), 5);
        for d in -2..=2 {
            assert!(ball.contains_key(&PeriodicSplit {
                frontier: vec![Layer::Fin(d)]
            }));
        }
    }

    #[test]
    fn ball_radius_zero() {
        let h = fixtures::fig1_heap();
        let s = PeriodicSplit::uniform(12, Layer::Fin(0));
        assert_eq!(h.ball(&s, 0).unwrap().len(), 1);
    }

    #[test]
    fn zchain_window_is_chain() {
        let z = fixtures::zchain_heap();
        let w = z.materialize_window(0, 4).unwrap();
        assert_eq!(w.poset.len(), 5);
        assert_eq!(w.poset.covers().len(), 4);
        assert!(!w.interior[0]);
        assert!(w.interior[2]);
        assert!(!w.interior[4]);
        assert!(z.materialize_window(3, 2).is_err());
    }

    #[test]
    fn fig1_window_three_layers() {
        let h = fixtures::fig1_heap();
        let w = h.materialize_window(0, 2).unwrap();
        assert_eq!(w.poset.len(), 36);
        // Spot-check a known cover: s@0 -> j@1.
        let s0 = w.poset.elem_id("s@0").unwrap();
        let j1 = w.poset.elem_id("j@1").unwrap();
        assert!(w.poset.covers().contains(&(s0.min(j1), s0.max(j1))) || w.poset.lt(s0, j1));
    }

    #[test]
    fn zchain_component_census_is_three() {
        let z = fixtures::zchain_heap();
        assert_eq!(z.component_census().unwrap().count(), 3);
    }

    #[test]
    fn fig1_component_census_is_three() {
        let h = fixtures::fig1_heap();
        assert_eq!(h.component_census().unwrap().count(), 3);
    }

    #[test]
    fn translation_invariance_of_neighbors() {
        let h = fixtures::fig1_heap();
        let s = PeriodicSplit::uniform(12, Layer::Fin(0));
        let n0 = h.split_neighbors(&s).unwrap();
        let n1 = h.split_neighbors(&s.translate(1)).unwrap();
        let shifted: Vec<_> = n0
            .iter()
            .map(|(c, d, t)| (*c, *d, t.translate(1)))
            .collect();
        assert_eq!(n1, shifted);
    }
}
