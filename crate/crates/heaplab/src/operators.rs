//! Color raising/lowering/diagonal operators and the defining relation
//! sets of the derived Kac-Moody algebra and its subalgebras.
//!
//! Operators are kept in functional sparse form: an operator is its
//! action on basis splits, extended linearly. Nothing is ever
//! materialized as a matrix.

use crate::error::{Error, Result};
use crate::graph::{ColorGraph, ColorId};
use crate::heap::{PeriodicHeap, PeriodicSplit};
use crate::poset::FinitePoset;
use crate::splits;
use crate::vector::{int, Scalar, SplitVector};

/// A basis-indexed split space on which the operators act.
pub trait SplitSpace {
    type Key: Ord + Clone + std::fmt::Debug;
    fn graph(&self) -> &ColorGraph;
    /// Targets of the raising operator on one basis split: transfer a
    /// minimal element of the filter, one target per such element.
    fn raise_targets(&self, a: ColorId, s: &Self::Key) -> Result<Vec<Self::Key>>;
    /// Targets of the lowering operator: transfer a maximal element of
    /// the ideal.
    fn lower_targets(&self, a: ColorId, s: &Self::Key) -> Result<Vec<Self::Key>>;
}

/// Finite posets act on ideal bitmasks.
pub struct FiniteSplits<'a> {
    pub poset: &'a FinitePoset,
}

impl SplitSpace for FiniteSplits<'_> {
    type Key = u64;

    fn graph(&self) -> &ColorGraph {
        self.poset.graph()
    }

    fn raise_targets(&self, a: ColorId, s: &u64) -> Result<Vec<u64>> {
        Ok(splits::filter_minimal(self.poset, *s)
            .into_iter()
            .filter(|&x| self.poset.color(x) == a)
            .map(|x| s | 1 << x)
            .collect())
    }

    fn lower_targets(&self, a: ColorId, s: &u64) -> Result<Vec<u64>> {
        Ok(splits::ideal_maximal(self.poset, *s)
            .into_iter()
            .filter(|&x| self.poset.color(x) == a)
            .map(|x| s & !(1 << x))
            .collect())
    }
}

/// Periodic heaps act on frontier splits; actions are frontier-local and
/// exact. Sentinel columns that would yield infinitely many transfer
/// candidates are refused (they certify an EC failure).
pub struct HeapSplits<'a> {
    pub heap: &'a PeriodicHeap,
}

impl SplitSpace for HeapSplits<'_> {
    type Key = PeriodicSplit;

    fn graph(&self) -> &ColorGraph {
        self.heap.graph()
    }

    fn raise_targets(&self, a: ColorId, s: &PeriodicSplit) -> Result<Vec<PeriodicSplit>> {
        Ok(self
            .heap
            .filter_minimal(s)?
            .into_iter()
            .filter(|&(u, _)| self.heap.color(u) == a)
            .map(|(u, layer)| {
                let mut t = s.clone();
                t.frontier[u] = crate::heap::Layer::Fin(layer);
                t
            })
            .collect())
    }

    fn lower_targets(&self, a: ColorId, s: &PeriodicSplit) -> Result<Vec<PeriodicSplit>> {
        Ok(self
            .heap
            .ideal_maximal(s)?
            .into_iter()
            .filter(|&(u, _)| self.heap.color(u) == a)
            .map(|(u, layer)| {
                let mut t = s.clone();
                t.frontier[u] = crate::heap::Layer::Fin(layer - 1);
                t
            })
            .collect())
    }
}

/// Eigenvalue source for the diagonal operators.
pub trait WeightSource<K> {
    fn value(&self, b: ColorId, s: &K) -> Result<Scalar>;
}

/// Apply the color raising operator linearly.
pub fn apply_x<S: SplitSpace>(
    space: &S,
    a: ColorId,
    v: &SplitVector<S::Key>,
) -> Result<SplitVector<S::Key>> {
    let mut out = SplitVector::zero();
    for (k, c) in v.iter() {
        for t in space.raise_targets(a, k)? {
            out.add_term(t, *c);
        }
    }
    Ok(out)
}

/// Apply the color lowering operator linearly.
pub fn apply_y<S: SplitSpace>(
    space: &S,
    a: ColorId,
    v: &SplitVector<S::Key>,
) -> Result<SplitVector<S::Key>> {
    let mut out = SplitVector::zero();
    for (k, c) in v.iter() {
        for t in space.lower_targets(a, k)? {
            out.add_term(t, *c);
        }
    }
    Ok(out)
}

/// Apply a diagonal operator linearly.
pub fn apply_h<K: Ord + Clone, W: WeightSource<K> + ?Sized>(
    weights: &W,
    b: ColorId,
    v: &SplitVector<K>,
) -> Result<SplitVector<K>> {
    let mut out = SplitVector::zero();
    for (k, c) in v.iter() {
        out.add_term(k.clone(), *c * weights.value(b, k)?);
    }
    Ok(out)
}

/// One defining relation of the presentation (grouped by relation set
/// and adjacency case).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Relation {
    /// [x_b, x_a] = 0 for distant a, b
    XxDistant,
    /// [x_a, [x_a, x_b]] = 0 for all a, b
    XxSerre,
    YyDistant,
    YySerre,
    /// [h_b, h_a] = 0
    Hh,
    /// [h_a, x_a] = 2 x_a
    HxSame,
    /// [h_b, x_a] = -x_a for a ~ b
    HxAdjacent,
    /// [h_b, x_a] = 0 for distant a, b
    HxDistant,
    HySame,
    HyAdjacent,
    HyDistant,
    /// [x_a, y_a] = h_a
    XyCartan,
    /// [x_b, y_a] = 0 for distinct a, b
    XyCross,
}

pub const ALL_RELATIONS: [Relation; 13] = [
    Relation::XxDistant,
    Relation::XxSerre,
    Relation::YyDistant,
    Relation::YySerre,
    Relation::Hh,
    Relation::HxSame,
    Relation::HxAdjacent,
    Relation::HxDistant,
    Relation::HySame,
    Relation::HyAdjacent,
    Relation::HyDistant,
    Relation::XyCartan,
    Relation::XyCross,
];

impl Relation {
    pub fn code(self) -> &'static str {
        match self {
            Relation::XxDistant => "XX.i",
            Relation::XxSerre => "XX.ii",
            Relation::YyDistant => "YY.i",
            Relation::YySerre => "YY.ii",
            Relation::Hh => "HH",
            Relation::HxSame => "HX.i",
            Relation::HxAdjacent => "HX.ii",
            Relation::HxDistant => "HX.iii",
            Relation::HySame => "HY.i",
            Relation::HyAdjacent => "HY.ii",
            Relation::HyDistant => "HY.iii",
            Relation::XyCartan => "XY.i",
            Relation::XyCross => "XY.ii",
        }
    }

    pub fn needs_weights(self) -> bool {
        matches!(
            self,
            Relation::Hh
                | Relation::HxSame
                | Relation::HxAdjacent
                | Relation::HxDistant
                | Relation::HySame
                | Relation::HyAdjacent
                | Relation::HyDistant
                | Relation::XyCartan
        )
    }

    /// The color pairs the relation quantifies over, in canonical order.
    pub fn pairs(self, g: &ColorGraph) -> Vec<(ColorId, ColorId)> {
        let n = g.len();
        let mut out = Vec::new();
        match self {
            Relation::XxDistant | Relation::YyDistant | Relation::Hh => {
                for a in 0..n {
                    for b in a + 1..n {
                        if self == Relation::Hh || g.distant(a, b) {
                            out.push((a, b));
                        }
                    }
                }
            }
            Relation::XxSerre | Relation::YySerre => {
                for a in 0..n {
                    for b in 0..n {
                        out.push((a, b));
                    }
                }
            }
            Relation::HxSame | Relation::HySame | Relation::XyCartan => {
                for a in 0..n {
                    out.push((a, a));
                }
            }
            Relation::HxAdjacent | Relation::HyAdjacent => {
                for a in 0..n {
                    for b in 0..n {
                        if g.adjacent(a, b) {
                            out.push((a, b));
                        }
                    }
                }
            }
            Relation::HxDistant | Relation::HyDistant => {
                for a in 0..n {
                    for b in 0..n {
                        if g.distant(a, b) {
                            out.push((a, b));
                        }
                    }
                }
            }
            Relation::XyCross => {
                for a in 0..n {
                    for b in 0..n {
                        if a != b {
                            out.push((a, b));
                        }
                    }
                }
            }
        }
        out
    }
}

struct NoWeights;

impl<K> WeightSource<K> for NoWeights {
    fn value(&self, _: ColorId, _: &K) -> Result<Scalar> {
        Err(Error::Refused(
            "relation needs diagonal operators but no weight function was supplied".into(),
        ))
    }
}

/// The defect vector of a relation instance at one basis split; the
/// relation holds at the split iff the defect vanishes.
pub fn relation_defect<S: SplitSpace>(
    space: &S,
    weights: Option<&dyn WeightSource<S::Key>>,
    rel: Relation,
    a: ColorId,
    b: ColorId,
    s: &S::Key,
) -> Result<SplitVector<S::Key>> {
    let v = SplitVector::basis(s.clone());
    let no_weights = NoWeights;
    let w: &dyn WeightSource<S::Key> = match weights {
        Some(w) => w,
        None => &no_weights,
    };
    let x = |c: ColorId, v: &SplitVector<S::Key>| apply_x(space, c, v);
    let y = |c: ColorId, v: &SplitVector<S::Key>| apply_y(space, c, v);
    let h = |c: ColorId, v: &SplitVector<S::Key>| apply_h(w, c, v);
    let mut defect;
    match rel {
        Relation::XxDistant => {
            // [x_b, x_a]
            defect = x(b, &x(a, &v)?)?;
            defect.sub(&x(a, &x(b, &v)?)?);
        }
        Relation::YyDistant => {
            defect = y(b, &y(a, &v)?)?;
            defect.sub(&y(a, &y(b, &v)?)?);
        }
        Relation::XxSerre => {
            // [x_a, [x_a, x_b]] = x_a x_a x_b - 2 x_a x_b x_a + x_b x_a x_a
            defect = x(a, &x(a, &x(b, &v)?)?)?;
            defect.sub(&x(a, &x(b, &x(a, &v)?)?)?.scaled(int(2)));
            defect.add(&x(b, &x(a, &x(a, &v)?)?)?);
        }
        Relation::YySerre => {
            defect = y(a, &y(a, &y(b, &v)?)?)?;
            defect.sub(&y(a, &y(b, &y(a, &v)?)?)?.scaled(int(2)));
            defect.add(&y(b, &y(a, &y(a, &v)?)?)?);
        }
        Relation::Hh => {
            defect = h(b, &h(a, &v)?)?;
            defect.sub(&h(a, &h(b, &v)?)?);
        }
        Relation::HxSame => {
            defect = h(a, &x(a, &v)?)?;
            defect.sub(&x(a, &h(a, &v)?)?);
            defect.sub(&x(a, &v)?.scaled(int(2)));
        }
        Relation::HxAdjacent => {
            defect = h(b, &x(a, &v)?)?;
            defect.sub(&x(a, &h(b, &v)?)?);
            defect.add(&x(a, &v)?);
        }
        Relation::HxDistant => {
            defect = h(b, &x(a, &v)?)?;
            defect.sub(&x(a, &h(b, &v)?)?);
        }
        Relation::HySame => {
            defect = h(a, &y(a, &v)?)?;
            defect.sub(&y(a, &h(a, &v)?)?);
            defect.add(&y(a, &v)?.scaled(int(2)));
        }
        Relation::HyAdjacent => {
            defect = h(b, &y(a, &v)?)?;
            defect.sub(&y(a, &h(b, &v)?)?);
            defect.sub(&y(a, &v)?);
        }
        Relation::HyDistant => {
            defect = h(b, &y(a, &v)?)?;
            defect.sub(&y(a, &h(b, &v)?)?);
        }
        Relation::XyCartan => {
            defect = x(a, &y(a, &v)?)?;
            defect.sub(&y(a, &x(a, &v)?)?);
            defect.sub(&h(a, &v)?);
        }
        Relation::XyCross => {
            // [x_b, y_a]
            defect = x(b, &y(a, &v)?)?;
            defect.sub(&y(a, &x(b, &v)?)?);
        }
    }
    Ok(defect)
}

#[derive(Debug, Clone)]
pub struct RelationWitness<K> {
    pub colors: (ColorId, ColorId),
    pub split: K,
    pub defect_terms: usize,
}

#[derive(Debug, Clone)]
pub struct RelationReport<K> {
    pub relation: Relation,
    pub holds: bool,
    /// First failing instance in canonical order, if any.
    pub witness: Option<RelationWitness<K>>,
    /// Number of failing (pair, split) instances found; 0 or 1 unless
    /// scanning exhaustively.
    pub defects: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanMode {
    FirstWitness,
    Exhaustive,
}

/// Evaluate each requested relation on every admissible color pair and
/// every basis split.
pub fn verify_relations<S: SplitSpace>(
    space: &S,
    weights: Option<&dyn WeightSource<S::Key>>,
    basis: &[S::Key],
    relations: &[Relation],
    mode: ScanMode,
) -> Result<Vec<RelationReport<S::Key>>> {
    let mut out = Vec::with_capacity(relations.len());
    for &rel in relations {
        let mut report = RelationReport {
            relation: rel,
            holds: true,
            witness: None,
            defects: 0,
        };
        'scan: for (a, b) in rel.pairs(space.graph()) {
            for s in basis {
                let defect = relation_defect(space, weights, rel, a, b, s)?;
                if !defect.is_zero() {
                    report.defects += 1;
                    if report.holds {
                        report.holds = false;
                        report.witness = Some(RelationWitness {
                            colors: (a, b),
                            split: s.clone(),
                            defect_terms: defect.len(),
                        });
                    }
                    if mode == ScanMode::FirstWitness {
                        break 'scan;
                    }
                }
            }
        }
        out.push(report);
    }
    Ok(out)
}

/// One verdict per (relation, color pair), the granularity of the
/// reported interface.
#[derive(Debug, Clone)]
pub struct PairReport<K> {
    pub relation: Relation,
    pub colors: (ColorId, ColorId),
    pub holds: bool,
    /// First basis split with a nonzero defect.
    pub witness_split: Option<K>,
}

/// Evaluate each relation on each admissible color pair separately.
pub fn verify_relations_per_pair<S: SplitSpace>(
    space: &S,
    weights: Option<&dyn WeightSource<S::Key>>,
    basis: &[S::Key],
    relations: &[Relation],
) -> Result<Vec<PairReport<S::Key>>> {
    let mut out = Vec::new();
    for &rel in relations {
        for (a, b) in rel.pairs(space.graph()) {
            let mut report = PairReport {
                relation: rel,
                colors: (a, b),
                holds: true,
                witness_split: None,
            };
            for s in basis {
                if !relation_defect(space, weights, rel, a, b, s)?.is_zero() {
                    report.holds = false;
                    report.witness_split = Some(s.clone());
                    break;
                }
            }
            out.push(report);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorFamily {
    Raising,
    Lowering,
}

#[derive(Debug, Clone)]
pub struct NilpotencyReport<K> {
    pub family: OperatorFamily,
    pub holds: bool,
    /// (color, split, coefficient count) of the first nonzero square.
    pub witness: Option<(ColorId, K, usize)>,
}

/// Square nilpotency of the whole raising (or lowering) family.
pub fn check_square_nilpotent<S: SplitSpace>(
    space: &S,
    basis: &[S::Key],
    family: OperatorFamily,
) -> Result<NilpotencyReport<S::Key>> {
    for a in 0..space.graph().len() {
        for s in basis {
            let v = SplitVector::basis(s.clone());
            let sq = match family {
                OperatorFamily::Raising => apply_x(space, a, &apply_x(space, a, &v)?)?,
                OperatorFamily::Lowering => apply_y(space, a, &apply_y(space, a, &v)?)?,
            };
            if !sq.is_zero() {
                return Ok(NilpotencyReport {
                    family,
                    holds: false,
                    witness: Some((a, s.clone(), sq.len())),
                });
            }
        }
    }
    Ok(NilpotencyReport {
        family,
        holds: true,
        witness: None,
    })
}

/// Verify `[X_b, Y_a] = 0` for all distinct colors; the hypothesis EC
/// must be certified by the caller.
pub fn check_xy_cross<S: SplitSpace>(
    space: &S,
    basis: &[S::Key],
    ec_holds: bool,
) -> Result<RelationReport<S::Key>> {
    if !ec_holds {
        return Err(Error::Refused(
            "the cross commutation check assumes EC, which fails here".into(),
        ));
    }
    Ok(verify_relations(
        space,
        None,
        basis,
        &[Relation::XyCross],
        ScanMode::FirstWitness,
    )?
    .pop()
    .unwrap())
}
