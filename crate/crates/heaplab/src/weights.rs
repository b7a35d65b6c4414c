//! Weight functions on splits: the census sets and their sizes, the
//! combinatorial weight function mu and its filter-emphasizing variant,
//! edge and component weight laws, construction from base values,
//! eigenvalue sets, the minuscule-condition predicates, and the
//! uniqueness probe.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{ColorGraph, ColorId};
use crate::heap::{HeapElem, Layer, OrderOracle, PeriodicHeap, PeriodicSplit};
use crate::operators::WeightSource;
use crate::poset::{ElemId, FinitePoset};
use crate::properties::{check_property, Property};
use crate::splits::{self, SplitLattice};
use crate::tailed::{self, TElem, TailedPoset, TailedSplit};
use crate::vector::{int, Scalar};

/// Status of a color class on one side of a split.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Extremum<E> {
    /// The color is absent from this side.
    Empty,
    /// Present but with no extreme element (only possible on infinite
    /// posets).
    NoExtremum,
    At(E),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Count<E> {
    Finite(Vec<E>),
    Infinite,
}

/// The split-side queries the census definitions need. Implemented for
/// finite posets, periodic heaps, and tailed windows.
pub trait CensusContext {
    type Elem: Clone + Ord + std::fmt::Debug;
    fn graph(&self) -> &ColorGraph;
    fn ideal_color_max(&self, b: ColorId) -> Result<Extremum<Self::Elem>>;
    fn filter_color_min(&self, b: ColorId) -> Result<Extremum<Self::Elem>>;
    /// Elements of color `c` in the ideal strictly above `y`.
    fn ideal_count_above(&self, y: &Self::Elem, c: ColorId) -> Result<Count<Self::Elem>>;
    fn filter_count_below(&self, y: &Self::Elem, c: ColorId) -> Result<Count<Self::Elem>>;
    fn ideal_nonempty(&self, b: ColorId) -> bool;
    fn filter_nonempty(&self, b: ColorId) -> bool;
}

/// One side's census set and the resulting function value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census<E> {
    pub members: Vec<E>,
    /// Some adjacent color has infinitely many elements beyond the
    /// color extremum (adds one to the value).
    pub infinite_adjacent: bool,
    /// The color class has no extreme element on this side (the value
    /// is then 1 by definition).
    pub no_extremum: bool,
    pub value: u64,
}

/// The ideal-side census for color `b`.
pub fn upsilon_census<C: CensusContext>(ctx: &C, b: ColorId) -> Result<Census<C::Elem>> {
    match ctx.ideal_color_max(b)? {
        Extremum::Empty | Extremum::NoExtremum => Ok(Census {
            members: Vec::new(),
            infinite_adjacent: false,
            no_extremum: true,
            value: 1,
        }),
        Extremum::At(y) => {
            let mut members = Vec::new();
            let mut infinite = false;
            for c in ctx.graph().neighbors(b) {
                match ctx.ideal_count_above(&y, c)? {
                    Count::Infinite => infinite = true,
                    Count::Finite(v) => members.extend(v),
                }
            }
            members.sort();
            let value = members.len() as u64 + infinite as u64;
            Ok(Census {
                members,
                infinite_adjacent: infinite,
                no_extremum: false,
                value,
            })
        }
    }
}

/// The filter-side census for color `b` (dual stages).
pub fn psi_census<C: CensusContext>(ctx: &C, b: ColorId) -> Result<Census<C::Elem>> {
    match ctx.filter_color_min(b)? {
        Extremum::Empty | Extremum::NoExtremum => Ok(Census {
            members: Vec::new(),
            infinite_adjacent: false,
            no_extremum: true,
            value: 1,
        }),
        Extremum::At(y) => {
            let mut members = Vec::new();
            let mut infinite = false;
            for c in ctx.graph().neighbors(b) {
                match ctx.filter_count_below(&y, c)? {
                    Count::Infinite => infinite = true,
                    Count::Finite(v) => members.extend(v),
                }
            }
            members.sort();
            let value = members.len() as u64 + infinite as u64;
            Ok(Census {
                members,
                infinite_adjacent: infinite,
                no_extremum: false,
                value,
            })
        }
    }
}

/// mu: 1 - upsilon when the color meets the ideal, else -1 + psi.
pub fn mu_value<C: CensusContext>(ctx: &C, b: ColorId) -> Result<i64> {
    if ctx.ideal_nonempty(b) {
        Ok(1 - upsilon_census(ctx, b)?.value as i64)
    } else {
        Ok(-1 + psi_census(ctx, b)?.value as i64)
    }
}

/// The filter-emphasizing variant: 1 - upsilon when the color misses the
/// filter, else -1 + psi.
pub fn mu_prime_value<C: CensusContext>(ctx: &C, b: ColorId) -> Result<i64> {
    if !ctx.filter_nonempty(b) {
        Ok(1 - upsilon_census(ctx, b)?.value as i64)
    } else {
        Ok(-1 + psi_census(ctx, b)?.value as i64)
    }
}

// ---------------------------------------------------------------------
// Finite context

pub struct FiniteCtx<'a> {
    pub poset: &'a FinitePoset,
    pub ideal: u64,
}

impl FiniteCtx<'_> {
    fn in_ideal(&self, x: ElemId) -> bool {
        self.ideal >> x & 1 == 1
    }

    fn color_extremum(&self, b: ColorId, ideal_side: bool, max: bool) -> Result<Extremum<ElemId>> {
        let members: Vec<ElemId> = (0..self.poset.len())
            .filter(|&x| self.poset.color(x) == b && self.in_ideal(x) == ideal_side)
            .collect();
        if members.is_empty() {
            return Ok(Extremum::Empty);
        }
        let extremes: Vec<ElemId> = members
            .iter()
            .copied()
            .filter(|&x| {
                !members.iter().any(|&z| {
                    if max {
                        self.poset.lt(x, z)
                    } else {
                        self.poset.lt(z, x)
                    }
                })
            })
            .collect();
        if extremes.len() > 1 {
            return Err(Error::EcViolation(format!(
                "color `{}` has {} extreme elements on one side of the split",
                self.poset.graph().name(b),
                extremes.len()
            )));
        }
        Ok(Extremum::At(extremes[0]))
    }
}

impl CensusContext for FiniteCtx<'_> {
    type Elem = ElemId;

    fn graph(&self) -> &ColorGraph {
        self.poset.graph()
    }

    fn ideal_color_max(&self, b: ColorId) -> Result<Extremum<ElemId>> {
        self.color_extremum(b, true, true)
    }

    fn filter_color_min(&self, b: ColorId) -> Result<Extremum<ElemId>> {
        self.color_extremum(b, false, false)
    }

    fn ideal_count_above(&self, y: &ElemId, c: ColorId) -> Result<Count<ElemId>> {
        Ok(Count::Finite(
            (0..self.poset.len())
                .filter(|&z| self.in_ideal(z) && self.poset.color(z) == c && self.poset.lt(*y, z))
                .collect(),
        ))
    }

    fn filter_count_below(&self, y: &ElemId, c: ColorId) -> Result<Count<ElemId>> {
        Ok(Count::Finite(
            (0..self.poset.len())
                .filter(|&z| !self.in_ideal(z) && self.poset.color(z) == c && self.poset.lt(z, *y))
                .collect(),
        ))
    }

    fn ideal_nonempty(&self, b: ColorId) -> bool {
        (0..self.poset.len()).any(|x| self.in_ideal(x) && self.poset.color(x) == b)
    }

    fn filter_nonempty(&self, b: ColorId) -> bool {
        (0..self.poset.len()).any(|x| !self.in_ideal(x) && self.poset.color(x) == b)
    }
}

fn require_ec(p: &FinitePoset) -> Result<()> {
    if !check_property(p, Property::Ec).holds {
        return Err(Error::Refused(
            "census functions need EC (unique color extrema), which fails here".into(),
        ));
    }
    Ok(())
}

pub fn compute_upsilon(p: &FinitePoset, ideal: u64, b: ColorId) -> Result<Census<ElemId>> {
    require_ec(p)?;
    upsilon_census(&FiniteCtx { poset: p, ideal }, b)
}

pub fn compute_psi(p: &FinitePoset, ideal: u64, b: ColorId) -> Result<Census<ElemId>> {
    require_ec(p)?;
    psi_census(&FiniteCtx { poset: p, ideal }, b)
}

pub fn compute_mu(p: &FinitePoset, ideal: u64, b: ColorId) -> Result<i64> {
    require_ec(p)?;
    mu_value(&FiniteCtx { poset: p, ideal }, b)
}

pub fn compute_mu_prime(p: &FinitePoset, ideal: u64, b: ColorId) -> Result<i64> {
    require_ec(p)?;
    mu_prime_value(&FiniteCtx { poset: p, ideal }, b)
}

// ---------------------------------------------------------------------
// Periodic context

pub struct PeriodicCtx<'h> {
    pub heap: &'h PeriodicHeap,
    pub oracle: &'h OrderOracle<'h>,
    pub split: &'h PeriodicSplit,
}

impl PeriodicCtx<'_> {
    fn cells_of_color(&self, c: ColorId) -> impl Iterator<Item = usize> + '_ {
        (0..self.heap.n_cells()).filter(move |&u| self.heap.color(u) == c)
    }
}

impl CensusContext for PeriodicCtx<'_> {
    type Elem = HeapElem;

    fn graph(&self) -> &ColorGraph {
        self.heap.graph()
    }

    fn ideal_color_max(&self, b: ColorId) -> Result<Extremum<HeapElem>> {
        let mut candidates = Vec::new();
        for u in self.cells_of_color(b) {
            match self.split.frontier[u] {
                Layer::PosInf => return Ok(Extremum::NoExtremum),
                Layer::Fin(n) => candidates.push((u, n)),
                Layer::NegInf => {}
            }
        }
        if candidates.is_empty() {
            return Ok(Extremum::Empty);
        }
        let max = candidates
            .iter()
            .copied()
            .find(|&cand| candidates.iter().all(|&o| self.oracle.le(o, cand)));
        let Some(max) = max else {
            return Err(Error::EcViolation(format!(
                "color `{}` has incomparable column tops in the ideal",
                self.heap.graph().name(b)
            )));
        };
        // Nothing of the color may sit above the chosen top.
        match self.ideal_count_above(&max, b)? {
            Count::Finite(v) if v.is_empty() => Ok(Extremum::At(max)),
            _ => Err(Error::EcViolation(format!(
                "color `{}` has ideal elements above every column top",
                self.heap.graph().name(b)
            ))),
        }
    }

    fn filter_color_min(&self, b: ColorId) -> Result<Extremum<HeapElem>> {
        let mut candidates = Vec::new();
        for u in self.cells_of_color(b) {
            match self.split.frontier[u] {
                Layer::NegInf => return Ok(Extremum::NoExtremum),
                Layer::Fin(n) => candidates.push((u, n + 1)),
                Layer::PosInf => {}
            }
        }
        if candidates.is_empty() {
            return Ok(Extremum::Empty);
        }
        let min = candidates
            .iter()
            .copied()
            .find(|&cand| candidates.iter().all(|&o| self.oracle.le(cand, o)));
        let Some(min) = min else {
            return Err(Error::EcViolation(format!(
                "color `{}` has incomparable column bottoms in the filter",
                self.heap.graph().name(b)
            )));
        };
        match self.filter_count_below(&min, b)? {
            Count::Finite(v) if v.is_empty() => Ok(Extremum::At(min)),
            _ => Err(Error::EcViolation(format!(
                "color `{}` has filter elements below every column bottom",
                self.heap.graph().name(b)
            ))),
        }
    }

    fn ideal_count_above(&self, y: &HeapElem, c: ColorId) -> Result<Count<HeapElem>> {
        let mut members = Vec::new();
        for w in self.cells_of_color(c) {
            match self.split.frontier[w] {
                Layer::NegInf => {}
                Layer::PosInf => {
                    if self.heap.quiver_reachable(y.0, w) {
                        return Ok(Count::Infinite);
                    }
                }
                Layer::Fin(m) => {
                    if let Some(s) = self.heap.min_shift(y.0, w) {
                        for j in (y.1 + s)..=m {
                            if self.oracle.lt(*y, (w, j)) {
                                members.push((w, j));
                            }
                        }
                    }
                }
            }
        }
        members.sort_unstable();
        Ok(Count::Finite(members))
    }

    fn filter_count_below(&self, y: &HeapElem, c: ColorId) -> Result<Count<HeapElem>> {
        let mut members = Vec::new();
        for w in self.cells_of_color(c) {
            match self.split.frontier[w] {
                Layer::PosInf => {}
                Layer::NegInf => {
                    if self.heap.quiver_reachable(w, y.0) {
                        return Ok(Count::Infinite);
                    }
                }
                Layer::Fin(m) => {
                    if let Some(s) = self.heap.min_shift(w, y.0) {
                        for j in (m + 1)..=(y.1 - s) {
                            if self.oracle.lt((w, j), *y) {
                                members.push((w, j));
                            }
                        }
                    }
                }
            }
        }
        members.sort_unstable();
        Ok(Count::Finite(members))
    }

    fn ideal_nonempty(&self, b: ColorId) -> bool {
        self.cells_of_color(b)
            .any(|u| self.split.frontier[u] != Layer::NegInf)
    }

    fn filter_nonempty(&self, b: ColorId) -> bool {
        self.cells_of_color(b)
            .any(|u| self.split.frontier[u] != Layer::PosInf)
    }
}

pub fn compute_mu_heap(h: &PeriodicHeap, s: &PeriodicSplit, b: ColorId) -> Result<i64> {
    h.validate_split(s)?;
    let oracle = h.order_oracle();
    mu_value(
        &PeriodicCtx {
            heap: h,
            oracle: &oracle,
            split: s,
        },
        b,
    )
}

/// Lazy mu evaluation for heap splits, usable as diagonal-operator
/// eigenvalues.
pub struct HeapMu<'h> {
    heap: &'h PeriodicHeap,
    oracle: OrderOracle<'h>,
}

impl<'h> HeapMu<'h> {
    pub fn new(heap: &'h PeriodicHeap) -> Self {
        HeapMu {
            heap,
            oracle: heap.order_oracle(),
        }
    }
}

impl WeightSource<PeriodicSplit> for HeapMu<'_> {
    fn value(&self, b: ColorId, s: &PeriodicSplit) -> Result<Scalar> {
        let ctx = PeriodicCtx {
            heap: self.heap,
            oracle: &self.oracle,
            split: s,
        };
        Ok(int(mu_value(&ctx, b)?))
    }
}

// ---------------------------------------------------------------------
// Tailed context

pub struct TailedCtx<'a> {
    pub tp: &'a TailedPoset,
    pub split: &'a TailedSplit,
}

fn convert_extremum(e: tailed::Extremum) -> Extremum<TElem> {
    match e {
        tailed::Extremum::Empty => Extremum::Empty,
        tailed::Extremum::NoExtremum => Extremum::NoExtremum,
        tailed::Extremum::At(x) => Extremum::At(x),
    }
}

fn convert_count(c: tailed::Count) -> Count<TElem> {
    match c {
        tailed::Count::Finite(v) => Count::Finite(v),
        tailed::Count::Infinite => Count::Infinite,
    }
}

impl CensusContext for TailedCtx<'_> {
    type Elem = TElem;

    fn graph(&self) -> &ColorGraph {
        self.tp.window().graph()
    }

    fn ideal_color_max(&self, b: ColorId) -> Result<Extremum<TElem>> {
        Ok(convert_extremum(self.tp.ideal_color_max(self.split, b)?))
    }

    fn filter_color_min(&self, b: ColorId) -> Result<Extremum<TElem>> {
        Ok(convert_extremum(self.tp.filter_color_min(self.split, b)?))
    }

    fn ideal_count_above(&self, y: &TElem, c: ColorId) -> Result<Count<TElem>> {
        Ok(convert_count(self.tp.ideal_count_above(self.split, *y, c)))
    }

    fn filter_count_below(&self, y: &TElem, c: ColorId) -> Result<Count<TElem>> {
        Ok(convert_count(self.tp.filter_count_below(self.split, *y, c)))
    }

    fn ideal_nonempty(&self, b: ColorId) -> bool {
        self.tp.ideal_nonempty(self.split, b)
    }

    fn filter_nonempty(&self, b: ColorId) -> bool {
        self.tp.filter_nonempty(self.split, b)
    }
}

pub fn compute_upsilon_tailed(
    tp: &TailedPoset,
    s: &TailedSplit,
    b: ColorId,
) -> Result<Census<TElem>> {
    upsilon_census(&TailedCtx { tp, split: s }, b)
}

pub fn compute_psi_tailed(tp: &TailedPoset, s: &TailedSplit, b: ColorId) -> Result<Census<TElem>> {
    psi_census(&TailedCtx { tp, split: s }, b)
}

pub fn compute_mu_tailed(tp: &TailedPoset, s: &TailedSplit, b: ColorId) -> Result<i64> {
    mu_value(&TailedCtx { tp, split: s }, b)
}

// ---------------------------------------------------------------------
// Weight functions on a finite lattice

/// A total assignment of rational values to (color, split) pairs over a
/// finite split lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightFunction {
    /// values[color][split index]
    pub values: Vec<Vec<Scalar>>,
}

impl WeightFunction {
    pub fn zero(n_colors: usize, n_splits: usize) -> Self {
        WeightFunction {
            values: vec![vec![int(0); n_splits]; n_colors],
        }
    }

    pub fn value(&self, b: ColorId, split: usize) -> Scalar {
        self.values[b][split]
    }

    pub fn eigenvalue_set(&self) -> BTreeSet<Scalar> {
        self.values.iter().flatten().copied().collect()
    }
}

/// Weight lookup keyed by ideal bitmask, for operator application.
pub struct LatticeWeights<'a> {
    pub lattice: &'a SplitLattice,
    pub wf: &'a WeightFunction,
}

impl WeightSource<u64> for LatticeWeights<'_> {
    fn value(&self, b: ColorId, s: &u64) -> Result<Scalar> {
        match self.lattice.index_of(*s) {
            Some(i) => Ok(self.wf.value(b, i)),
            None => Err(Error::WeightUndefined(format!("{b}"), format!("{s:b}"))),
        }
    }
}

/// The mu weight function tabulated over a whole lattice.
pub fn mu_table(p: &FinitePoset, lattice: &SplitLattice) -> Result<WeightFunction> {
    require_ec(p)?;
    let n_colors = p.graph().len();
    let mut wf = WeightFunction::zero(n_colors, lattice.len());
    for b in 0..n_colors {
        for (i, &ideal) in lattice.ideals().iter().enumerate() {
            wf.values[b][i] = int(mu_value(&FiniteCtx { poset: p, ideal }, b)?);
        }
    }
    Ok(wf)
}

/// Same for the filter-emphasizing variant.
pub fn mu_prime_table(p: &FinitePoset, lattice: &SplitLattice) -> Result<WeightFunction> {
    require_ec(p)?;
    let n_colors = p.graph().len();
    let mut wf = WeightFunction::zero(n_colors, lattice.len());
    for b in 0..n_colors {
        for (i, &ideal) in lattice.ideals().iter().enumerate() {
            wf.values[b][i] = int(mu_prime_value(&FiniteCtx { poset: p, ideal }, b)?);
        }
    }
    Ok(wf)
}

#[derive(Debug, Clone)]
pub struct LawWitness {
    pub b: ColorId,
    /// Split indices (from, to) for the edge law; any same-component
    /// pair for the component law.
    pub splits: (usize, usize),
    pub lhs: Scalar,
    pub rhs: Scalar,
}

#[derive(Debug, Clone)]
pub struct LawReport {
    pub holds: bool,
    pub witness: Option<LawWitness>,
}

/// The edge law: along every colored edge, the weight of each color
/// changes by exactly the Cartan pairing with the transferred color.
pub fn is_edge_weight(p: &FinitePoset, lattice: &SplitLattice, wf: &WeightFunction) -> LawReport {
    for &(i, j, x_color) in lattice.up_edges() {
        for b in 0..p.graph().len() {
            let lhs = wf.value(b, j) - wf.value(b, i);
            let rhs = int(p.graph().theta(x_color, b));
            if lhs != rhs {
                return LawReport {
                    holds: false,
                    witness: Some(LawWitness {
                        b,
                        splits: (i, j),
                        lhs,
                        rhs,
                    }),
                };
            }
        }
    }
    LawReport {
        holds: true,
        witness: None,
    }
}

/// The component law: across every same-component pair of splits, the
/// weight difference equals the signed census combination.
pub fn is_component_weight(
    p: &FinitePoset,
    lattice: &SplitLattice,
    wf: &WeightFunction,
) -> LawReport {
    let comp = lattice.components();
    for i in 0..lattice.len() {
        for j in 0..lattice.len() {
            if comp.comp[i] != comp.comp[j] {
                continue;
            }
            for b in 0..p.graph().len() {
                let lhs = wf.value(b, j) - wf.value(b, i);
                let mut rhs = int(2 * splits::delta(p, b, lattice.ideal(j), lattice.ideal(i)));
                for c in p.graph().neighbors(b) {
                    rhs -= int(splits::delta(p, c, lattice.ideal(j), lattice.ideal(i)));
                }
                if lhs != rhs {
                    return LawReport {
                        holds: false,
                        witness: Some(LawWitness {
                            b,
                            splits: (i, j),
                            lhs,
                            rhs,
                        }),
                    };
                }
            }
        }
    }
    LawReport {
        holds: true,
        witness: None,
    }
}

/// Build the unique component weight function with the given base values
/// (one base split with a full color tuple per component).
pub fn construct_weight(
    p: &FinitePoset,
    lattice: &SplitLattice,
    base: &[(usize, Vec<Scalar>)],
) -> Result<WeightFunction> {
    let comp = lattice.components();
    let mut base_of_component: Vec<Option<usize>> = vec![None; comp.count];
    for (bi, (split, values)) in base.iter().enumerate() {
        if values.len() != p.graph().len() {
            return Err(Error::InvalidInput(format!(
                "base value tuple {bi} has {} entries, expected {}",
                values.len(),
                p.graph().len()
            )));
        }
        let c = comp.comp[*split];
        if base_of_component[c].is_some() {
            return Err(Error::InvalidInput(format!(
                "component {c} has more than one base split"
            )));
        }
        base_of_component[c] = Some(bi);
    }
    for (c, b) in base_of_component.iter().enumerate() {
        if b.is_none() {
            return Err(Error::MissingBase(c));
        }
    }
    let mut wf = WeightFunction::zero(p.graph().len(), lattice.len());
    for i in 0..lattice.len() {
        let bi = base_of_component[comp.comp[i]].unwrap();
        let (base_split, base_values) = &base[bi];
        for b in 0..p.graph().len() {
            let mut v = base_values[b]
                + int(2 * splits::delta(p, b, lattice.ideal(i), lattice.ideal(*base_split)));
            for c in p.graph().neighbors(b) {
                v -= int(splits::delta(
                    p,
                    c,
                    lattice.ideal(i),
                    lattice.ideal(*base_split),
                ));
            }
            wf.values[b][i] = v;
        }
    }
    Ok(wf)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinusculeMode {
    Upper,
    Lower,
    Full,
}

#[derive(Debug, Clone)]
pub struct MinusculeReport {
    pub mode: MinusculeMode,
    pub eigenvalues_ok: bool,
    /// The sign biconditional of the definition; always true in full
    /// mode, where only the eigenvalue window is required.
    pub biconditional_ok: bool,
    pub holds: bool,
    pub witness: Option<(ColorId, usize)>,
}

/// Check the minuscule eigenvalue conditions of a weight function.
///
/// Upper mode: every value is an integer >= -1, and value -1 occurs at a
/// split exactly when the filter has a minimal element of that color.
/// Lower mode is the dual; full mode requires values within {-1, 0, 1}.
pub fn check_minuscule_conditions(
    p: &FinitePoset,
    lattice: &SplitLattice,
    wf: &WeightFunction,
    mode: MinusculeMode,
) -> MinusculeReport {
    let mut eigenvalues_ok = true;
    let mut biconditional_ok = true;
    let mut witness = None;
    'outer: for b in 0..p.graph().len() {
        for i in 0..lattice.len() {
            let v = wf.value(b, i);
            let in_window = match mode {
                MinusculeMode::Upper => v.is_integer() && v >= int(-1),
                MinusculeMode::Lower => v.is_integer() && v <= int(1),
                MinusculeMode::Full => v == int(-1) || v == int(0) || v == int(1),
            };
            if !in_window {
                eigenvalues_ok = false;
                witness = Some((b, i));
                break 'outer;
            }
            let bicond = match mode {
                MinusculeMode::Upper => {
                    let f_min = splits::filter_minimal(p, lattice.ideal(i))
                        .iter()
                        .any(|&x| p.color(x) == b);
                    (v == int(-1)) == f_min
                }
                MinusculeMode::Lower => {
                    let i_max = splits::ideal_maximal(p, lattice.ideal(i))
                        .iter()
                        .any(|&x| p.color(x) == b);
                    (v == int(1)) == i_max
                }
                MinusculeMode::Full => true,
            };
            if !bicond {
                biconditional_ok = false;
                witness = Some((b, i));
                break 'outer;
            }
        }
    }
    MinusculeReport {
        mode,
        eigenvalues_ok,
        biconditional_ok,
        holds: eigenvalues_ok && biconditional_ok,
        witness,
    }
}

#[derive(Debug, Clone)]
pub struct ProbeReport {
    /// True when the candidate agrees with mu everywhere.
    pub equals_mu: bool,
    pub first_difference: Option<(ColorId, usize)>,
}

/// When EC, AC, I2A hold and the (single, finite) component has an edge
/// of every color, any edge weight function pinned to -1 on minimal
/// filter colors (or +1 on maximal ideal colors) must be mu. Refuses
/// when the hypotheses fail.
pub fn uniqueness_probe(
    p: &FinitePoset,
    lattice: &SplitLattice,
    wf: &WeightFunction,
) -> Result<ProbeReport> {
    for prop in [Property::Ec, Property::Ac, Property::I2a] {
        if !check_property(p, prop).holds {
            return Err(Error::Refused(format!(
                "uniqueness probe needs {}, which fails here",
                prop.name()
            )));
        }
    }
    for b in 0..p.graph().len() {
        if !lattice.up_edges().iter().any(|&(_, _, c)| c == b) {
            return Err(Error::Refused(format!(
                "no edge of color `{}` in the lattice; that weight is unconstrained",
                p.graph().name(b)
            )));
        }
    }
    if !is_edge_weight(p, lattice, wf).holds {
        return Err(Error::Refused(
            "candidate is not an edge weight function".into(),
        ));
    }
    let cond_i = (0..lattice.len()).all(|i| {
        (0..p.graph().len()).all(|b| {
            let f_min = splits::filter_minimal(p, lattice.ideal(i))
                .iter()
                .any(|&x| p.color(x) == b);
            !f_min || wf.value(b, i) == int(-1)
        })
    });
    let cond_iii = (0..lattice.len()).all(|i| {
        (0..p.graph().len()).all(|b| {
            let i_max = splits::ideal_maximal(p, lattice.ideal(i))
                .iter()
                .any(|&x| p.color(x) == b);
            !i_max || wf.value(b, i) == int(1)
        })
    });
    if !cond_i && !cond_iii {
        return Err(Error::Refused(
            "candidate satisfies neither pinning condition".into(),
        ));
    }
    let mu = mu_table(p, lattice)?;
    let mut first_difference = None;
    'outer: for b in 0..p.graph().len() {
        for i in 0..lattice.len() {
            if mu.value(b, i) != wf.value(b, i) {
                first_difference = Some((b, i));
                break 'outer;
            }
        }
    }
    Ok(ProbeReport {
        equals_mu: first_difference.is_none(),
        first_difference,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::splits::SplitLattice;

    fn fig2() -> (FinitePoset, SplitLattice) {
        let p = fixtures::fig2_poset();
        let l = SplitLattice::enumerate(&p, 10_000).unwrap();
        (p, l)
    }

    #[test]
    fn psi_on_fig2_bottom_split() {
        let (p, _) = fig2();
        let d = p.graph().color_id("d").unwrap();
        let a = p.graph().color_id("a").unwrap();
        let census = compute_psi(&p, 0, d).unwrap();
        assert_eq!(census.value, 3);
        let names: Vec<&str> = census.members.iter().map(|&x| p.name(x)).collect();
        assert_eq!(names, vec!["u", "v", "q"]);
        assert_eq!(compute_psi(&p, 0, a).unwrap().value, 0);
    }

    #[test]
    fn mu_at_bottom_split_of_fig2() {
        let (p, _) = fig2();
        let expect = [("a", -1), ("b", 0), ("c", 0), ("d", 2), ("g", -1)];
        for (name, v) in expect {
            let b = p.graph().color_id(name).unwrap();
            assert_eq!(compute_mu(&p, 0, b).unwrap(), v, "mu_{name}");
        }
    }

    #[test]
    fn mu_at_top_split_of_fig2() {
        let (p, _) = fig2();
        let full = (1u64 << p.len()) - 1;
        let d = p.graph().color_id("d").unwrap();
        assert_eq!(compute_mu(&p, full, d).unwrap(), 1);
        assert_eq!(compute_mu_prime(&p, full, d).unwrap(), 1);
    }

    #[test]
    fn maximal_ideal_color_gives_plus_one() {
        let (p, l) = fig2();
        // Whenever the ideal has a maximal element of color b, mu_b = +1.
        for &ideal in l.ideals() {
            for &x in &splits::ideal_maximal(&p, ideal) {
                assert_eq!(compute_mu(&p, ideal, p.color(x)).unwrap(), 1);
            }
        }
    }

    #[test]
    fn mu_census_refused_without_ec() {
        let g = crate::graph::ColorGraph::new(&["a"], &[]).unwrap();
        let p = FinitePoset::build(
            g,
            &[("x", "a"), ("y", "a")],
            &[],
            crate::poset::ColorPolicy::RequireSurjective,
        )
        .unwrap();
        assert!(compute_mu(&p, 0, 0).is_err());
        assert!(compute_upsilon(&p, 0, 0).is_err());
    }

    #[test]
    fn eigenvalue_set_of_mu_on_fig2() {
        let (p, l) = fig2();
        let mu = mu_table(&p, &l).unwrap();
        let set: Vec<Scalar> = mu.eigenvalue_set().into_iter().collect();
        assert_eq!(set, vec![int(-1), int(0), int(1), int(2)]);
    }

    #[test]
    fn mu_is_an_edge_and_component_weight_on_fig2() {
        let (p, l) = fig2();
        let mu = mu_table(&p, &l).unwrap();
        assert!(is_edge_weight(&p, &l, &mu).holds);
        assert!(is_component_weight(&p, &l, &mu).holds);
        // The zero function is not: theta on an edge is never 0 for the
        // transferred color itself.
        let zero = WeightFunction::zero(p.graph().len(), l.len());
        assert!(!is_edge_weight(&p, &l, &zero).holds);
    }

    #[test]
    fn mu_prime_equals_mu_on_fig2() {
        let (p, l) = fig2();
        assert_eq!(mu_table(&p, &l).unwrap(), mu_prime_table(&p, &l).unwrap());
    }

    #[test]
    fn mu_prime_differs_without_i2a() {
        // Chain x(a) -> m(b) -> y(a) with a ~ b: EC and AC hold, I2A
        // fails; at the ideal {x} the two variants disagree on color a.
        let g = crate::graph::ColorGraph::new(&["a", "b"], &[("a", "b")]).unwrap();
        let p = FinitePoset::build(
            g,
            &[("x", "a"), ("m", "b"), ("y", "a")],
            &[("x", "m"), ("m", "y")],
            crate::poset::ColorPolicy::RequireSurjective,
        )
        .unwrap();
        assert!(check_property(&p, Property::Ec).holds);
        assert!(check_property(&p, Property::Ac).holds);
        assert!(!check_property(&p, Property::I2a).holds);
        let a = 0;
        let ideal = 0b001; // {x}
        assert_eq!(compute_mu(&p, ideal, a).unwrap(), 1);
        assert_eq!(compute_mu_prime(&p, ideal, a).unwrap(), 0);
        // And mu stops being an edge weight function on this poset.
        let l = SplitLattice::enumerate(&p, 100).unwrap();
        let mu = mu_table(&p, &l).unwrap();
        assert!(!is_edge_weight(&p, &l, &mu).holds);
    }

    #[test]
    fn construct_weight_reconstructs_mu() {
        let (p, l) = fig2();
        let mu = mu_table(&p, &l).unwrap();
        let base_values: Vec<Scalar> = (0..p.graph().len()).map(|b| mu.value(b, 0)).collect();
        let built = construct_weight(&p, &l, &[(0, base_values)]).unwrap();
        assert_eq!(built, mu);
        assert!(is_edge_weight(&p, &l, &built).holds);
    }

    #[test]
    fn construct_weight_on_one_element_poset() {
        let g = crate::graph::ColorGraph::new(&["a"], &[]).unwrap();
        let p = FinitePoset::build(
            g,
            &[("x", "a")],
            &[],
            crate::poset::ColorPolicy::RequireSurjective,
        )
        .unwrap();
        let l = SplitLattice::enumerate(&p, 100).unwrap();
        let wf = construct_weight(&p, &l, &[(0, vec![int(0)])]).unwrap();
        // One edge colored a: the weight climbs by theta_aa = 2.
        assert_eq!(wf.value(0, l.top()) - wf.value(0, l.bottom()), int(2));
    }

    #[test]
    fn constructed_weights_differ_by_constant() {
        let (p, l) = fig2();
        let zeros = vec![int(0); p.graph().len()];
        let mut shifted = zeros.clone();
        shifted[2] = int(5);
        let w0 = construct_weight(&p, &l, &[(0, zeros)]).unwrap();
        let w1 = construct_weight(&p, &l, &[(0, shifted)]).unwrap();
        for b in 0..p.graph().len() {
            let d = w1.value(b, 0) - w0.value(b, 0);
            for i in 0..l.len() {
                assert_eq!(w1.value(b, i) - w0.value(b, i), d);
            }
        }
    }

    #[test]
    fn minuscule_conditions_on_fig2() {
        let (p, l) = fig2();
        let mu = mu_table(&p, &l).unwrap();
        assert!(check_minuscule_conditions(&p, &l, &mu, MinusculeMode::Upper).holds);
        // Eigenvalue 2 breaks the lower and full windows.
        assert!(!check_minuscule_conditions(&p, &l, &mu, MinusculeMode::Lower).holds);
        assert!(!check_minuscule_conditions(&p, &l, &mu, MinusculeMode::Full).holds);
    }

    #[test]
    fn uniqueness_probe_confirms_mu() {
        let (p, l) = fig2();
        let mu = mu_table(&p, &l).unwrap();
        assert!(uniqueness_probe(&p, &l, &mu).unwrap().equals_mu);
        // A constant shift is still an edge weight but fails both
        // pinning conditions, so the probe refuses it.
        let base: Vec<Scalar> = (0..p.graph().len())
            .map(|b| mu.value(b, 0) + int(1))
            .collect();
        let shifted = construct_weight(&p, &l, &[(0, base)]).unwrap();
        assert!(is_edge_weight(&p, &l, &shifted).holds);
        assert!(uniqueness_probe(&p, &l, &shifted).is_err());
    }

    #[test]
    fn fig3_upsilon_values() {
        let tp = fixtures::fig3_fixture();
        let s = fixtures::fig3_split(&tp);
        let g = tp.window().graph();
        let d = g.color_id("d").unwrap();
        let gg = g.color_id("g").unwrap();
        let a = g.color_id("a").unwrap();
        let ud = compute_upsilon_tailed(&tp, &s, d).unwrap();
        assert!(ud.no_extremum);
        assert_eq!(ud.value, 1);
        let ug = compute_upsilon_tailed(&tp, &s, gg).unwrap();
        assert_eq!(ug.value, 2);
        assert!(ug.infinite_adjacent);
        assert_eq!(ug.members.len(), 1);
        let ua = compute_upsilon_tailed(&tp, &s, a).unwrap();
        assert_eq!(ua.value, 0);
        assert!(ua.members.is_empty());
        assert!(!ua.infinite_adjacent);
    }

    #[test]
    fn zchain_mu_values() {
        let z = fixtures::zchain_heap();
        let s = PeriodicSplit::uniform(1, Layer::Fin(0));
        // Top of the ideal is color a, so mu_a = 1.
        assert_eq!(compute_mu_heap(&z, &s, 0).unwrap(), 1);
        // Sentinel splits sit in trivial components: mu = 0.
        assert_eq!(
            compute_mu_heap(&z, &PeriodicSplit::uniform(1, Layer::PosInf), 0).unwrap(),
            0
        );
        assert_eq!(
            compute_mu_heap(&z, &PeriodicSplit::uniform(1, Layer::NegInf), 0).unwrap(),
            0
        );
    }
}
