//! Top-level classification, representation builders per algebra, the
//! equivalence verification harness, and the instance generator that
//! powers the exhaustive and randomized suites.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::ColorGraph;
use crate::heap::{PeriodicHeap, PeriodicSplit};
use crate::operators::{
    check_square_nilpotent, relation_defect, verify_relations, verify_relations_per_pair,
    FiniteSplits, HeapSplits, NilpotencyReport, OperatorFamily, PairReport, Relation,
    RelationReport, ScanMode, SplitSpace, WeightSource,
};
use crate::poset::{ColorPolicy, FinitePoset};
use crate::properties::{check_property, check_property_heap_certified, Property, PropertyReport};
use crate::splits::{self, SplitLattice};
use crate::vector::{int, Scalar};
use crate::weights::{
    self, check_minuscule_conditions, construct_weight, is_component_weight, is_edge_weight,
    mu_prime_table, mu_table, HeapMu, LatticeWeights, MinusculeMode, WeightFunction,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraKind {
    NPlus,
    NMinus,
    BPlusDerived,
    BMinusDerived,
    GDerived,
}

impl AlgebraKind {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::NPlus => "n+",
            AlgebraKind::NMinus => "n-",
            AlgebraKind::BPlusDerived => "b'+",
            AlgebraKind::BMinusDerived => "b'-",
            AlgebraKind::GDerived => "g'",
        }
    }

    pub fn parse(s: &str) -> Option<AlgebraKind> {
        match s {
            "n-plus" | "n+" => Some(AlgebraKind::NPlus),
            "n-minus" | "n-" => Some(AlgebraKind::NMinus),
            "b-plus" | "b'+" | "b+" => Some(AlgebraKind::BPlusDerived),
            "b-minus" | "b'-" | "b-" => Some(AlgebraKind::BMinusDerived),
            "g-prime" | "g'" | "g" => Some(AlgebraKind::GDerived),
            _ => None,
        }
    }

    /// The defining relation sets of the presentation.
    pub fn relations(self) -> Vec<Relation> {
        use Relation::*;
        match self {
            AlgebraKind::NPlus => vec![XxDistant, XxSerre],
            AlgebraKind::NMinus => vec![YyDistant, YySerre],
            AlgebraKind::BPlusDerived => {
                vec![XxDistant, XxSerre, Hh, HxSame, HxAdjacent, HxDistant]
            }
            AlgebraKind::BMinusDerived => {
                vec![YyDistant, YySerre, Hh, HySame, HyAdjacent, HyDistant]
            }
            AlgebraKind::GDerived => ALL.to_vec(),
        }
    }

    pub fn uses_raising(self) -> bool {
        !matches!(self, AlgebraKind::NMinus | AlgebraKind::BMinusDerived)
    }

    pub fn uses_lowering(self) -> bool {
        !matches!(self, AlgebraKind::NPlus | AlgebraKind::BPlusDerived)
    }

    pub fn uses_diagonal(self) -> bool {
        !matches!(self, AlgebraKind::NPlus | AlgebraKind::NMinus)
    }
}

const ALL: [Relation; 13] = crate::operators::ALL_RELATIONS;

/// Classification flags with the per-property evidence.
#[derive(Debug, Clone)]
pub struct ClassificationReport {
    pub d_complete: bool,
    pub minuscule: bool,
    pub property_reports: Vec<PropertyReport>,
}

/// Decide the colored d-complete and colored minuscule flags for a
/// finite poset.
pub fn classify_poset(p: &FinitePoset) -> ClassificationReport {
    let reports: Vec<PropertyReport> = Property::all_eight(1)
        .into_iter()
        .map(|prop| check_property(p, prop))
        .collect();
    let holds = |prop: Property| reports.iter().find(|r| r.property == prop).unwrap().holds;
    let d_complete = holds(Property::Ec)
        && holds(Property::Na)
        && holds(Property::Ac)
        && holds(Property::I2a)
        && holds(Property::MxGa(1));
    let minuscule = d_complete && holds(Property::MnLa(1));
    ClassificationReport {
        d_complete,
        minuscule,
        property_reports: reports,
    }
}

/// The heap variant runs the window protocol per property.
pub fn classify_heap(h: &PeriodicHeap, w: i64) -> Result<(ClassificationReport, bool)> {
    let mut reports = Vec::new();
    let mut all_agree = true;
    for prop in Property::all_eight(1) {
        let c = check_property_heap_certified(h, prop, w)?;
        all_agree &= c.windows_agree;
        reports.push(c.report);
    }
    let holds = |prop: Property| reports.iter().find(|r| r.property == prop).unwrap().holds;
    let d_complete = holds(Property::Ec)
        && holds(Property::Na)
        && holds(Property::Ac)
        && holds(Property::I2a)
        && holds(Property::MxGa(1));
    let minuscule = d_complete && holds(Property::MnLa(1));
    Ok((
        ClassificationReport {
            d_complete,
            minuscule,
            property_reports: reports,
        },
        all_agree,
    ))
}

#[derive(Debug, Clone)]
pub struct RepresentationReport {
    pub kind: AlgebraKind,
    pub x_nilpotent: Option<NilpotencyReport<u64>>,
    pub y_nilpotent: Option<NilpotencyReport<u64>>,
    /// EC holds, so the mu-diagonal operators exist.
    pub mu_available: bool,
    pub relation_reports: Vec<PairReport<u64>>,
    pub minuscule: Option<crate::weights::MinusculeReport>,
    pub eigenvalues: Option<BTreeSet<Scalar>>,
    pub success: bool,
}

/// Assemble the operators an algebra kind requires (with mu-diagonal
/// actions for the coroots), verify its relation sets, and evaluate the
/// minuscule conditions where the kind calls for them.
pub fn build_representation(
    p: &FinitePoset,
    lattice: &SplitLattice,
    kind: AlgebraKind,
) -> Result<RepresentationReport> {
    let space = FiniteSplits { poset: p };
    let basis: Vec<u64> = lattice.ideals().to_vec();
    let x_nilpotent = kind
        .uses_raising()
        .then(|| check_square_nilpotent(&space, &basis, OperatorFamily::Raising))
        .transpose()?;
    let y_nilpotent = kind
        .uses_lowering()
        .then(|| check_square_nilpotent(&space, &basis, OperatorFamily::Lowering))
        .transpose()?;
    let ec = check_property(p, Property::Ec).holds;
    let mu = if kind.uses_diagonal() && ec {
        Some(mu_table(p, lattice)?)
    } else {
        None
    };
    let mu_available = mu.is_some();
    let weights_src = mu.as_ref().map(|wf| LatticeWeights { lattice, wf });
    let relation_reports = if kind.uses_diagonal() && !mu_available {
        // Without EC there are no mu-diagonal operators; only the
        // weight-free relation sets can be evaluated.
        let rels: Vec<Relation> = kind
            .relations()
            .into_iter()
            .filter(|r| !r.needs_weights())
            .collect();
        verify_relations_per_pair(&space, None, &basis, &rels)?
    } else {
        let w: Option<&dyn WeightSource<u64>> =
            weights_src.as_ref().map(|w| w as &dyn WeightSource<u64>);
        verify_relations_per_pair(&space, w, &basis, &kind.relations())?
    };
    let relations_hold =
        relation_reports.iter().all(|r| r.holds) && (!kind.uses_diagonal() || mu_available);
    let minuscule = match (kind, mu.as_ref()) {
        (AlgebraKind::BPlusDerived, Some(wf)) => Some(check_minuscule_conditions(
            p,
            lattice,
            wf,
            MinusculeMode::Upper,
        )),
        (AlgebraKind::BMinusDerived, Some(wf)) => Some(check_minuscule_conditions(
            p,
            lattice,
            wf,
            MinusculeMode::Lower,
        )),
        (AlgebraKind::GDerived, Some(wf)) => Some(check_minuscule_conditions(
            p,
            lattice,
            wf,
            MinusculeMode::Full,
        )),
        _ => None,
    };
    let eigenvalues = mu.as_ref().map(|wf| wf.eigenvalue_set());
    let nilp_ok = x_nilpotent.as_ref().is_none_or(|r| r.holds)
        && y_nilpotent.as_ref().is_none_or(|r| r.holds);
    let success = match kind {
        AlgebraKind::NPlus | AlgebraKind::NMinus => relations_hold && nilp_ok,
        AlgebraKind::BPlusDerived | AlgebraKind::BMinusDerived => {
            relations_hold && nilp_ok && minuscule.as_ref().is_some_and(|m| m.holds)
        }
        AlgebraKind::GDerived => relations_hold && minuscule.as_ref().is_some_and(|m| m.holds),
    };
    Ok(RepresentationReport {
        kind,
        x_nilpotent,
        y_nilpotent,
        mu_available,
        relation_reports,
        minuscule,
        eigenvalues,
        success,
    })
}

#[derive(Debug, Clone)]
pub struct HeapRepresentationReport {
    pub kind: AlgebraKind,
    pub ball_size: usize,
    pub interior_size: usize,
    pub relation_reports: Vec<PairReport<PeriodicSplit>>,
    pub x_nilpotent: Option<NilpotencyReport<PeriodicSplit>>,
    pub y_nilpotent: Option<NilpotencyReport<PeriodicSplit>>,
    /// mu values over the whole ball.
    pub eigenvalues: BTreeSet<Scalar>,
    pub eigenvalues_within_pm1: bool,
    /// The verdict is certified on interior splits only.
    pub success_on_interior: bool,
}

/// Relation verification for a periodic heap: relations are checked at
/// every split of the ball whose distance to the seed leaves room for a
/// length-3 operator word, and mu eigenvalues are collected over the
/// whole ball.
pub fn build_representation_heap(
    h: &PeriodicHeap,
    seed: &PeriodicSplit,
    radius: usize,
    kind: AlgebraKind,
    window: i64,
) -> Result<HeapRepresentationReport> {
    if radius < 3 {
        return Err(Error::Refused(format!(
            "ball radius {radius} is smaller than the deepest relation word (3); cannot certify"
        )));
    }
    let ec = check_property_heap_certified(h, Property::Ec, window)?;
    if !ec.report.holds {
        return Err(Error::Refused(
            "EC fails on the window protocol; raising/lowering sums may be infinite".into(),
        ));
    }
    let ball = h.ball(seed, radius)?;
    let interior: Vec<PeriodicSplit> = ball
        .iter()
        .filter(|&(_, &d)| d + 3 <= radius)
        .map(|(s, _)| s.clone())
        .collect();
    let space = HeapSplits { heap: h };
    let mu = HeapMu::new(h);
    let relation_reports =
        verify_relations_per_pair(&space, Some(&mu), &interior, &kind.relations())?;
    let x_nilpotent = kind
        .uses_raising()
        .then(|| check_square_nilpotent(&space, &interior, OperatorFamily::Raising))
        .transpose()?;
    let y_nilpotent = kind
        .uses_lowering()
        .then(|| check_square_nilpotent(&space, &interior, OperatorFamily::Lowering))
        .transpose()?;
    let mut eigenvalues = BTreeSet::new();
    for s in ball.keys() {
        for b in 0..h.graph().len() {
            eigenvalues.insert(mu.value(b, s)?);
        }
    }
    let eigenvalues_within_pm1 = eigenvalues
        .iter()
        .all(|v| *v == int(-1) || *v == int(0) || *v == int(1));
    let nilp_ok = x_nilpotent.as_ref().is_none_or(|r| r.holds)
        && y_nilpotent.as_ref().is_none_or(|r| r.holds);
    let relations_hold = relation_reports.iter().all(|r| r.holds);
    let success_on_interior = match kind {
        AlgebraKind::NPlus | AlgebraKind::NMinus => relations_hold && nilp_ok,
        AlgebraKind::BPlusDerived | AlgebraKind::BMinusDerived => relations_hold && nilp_ok,
        AlgebraKind::GDerived => relations_hold && eigenvalues_within_pm1,
    };
    Ok(HeapRepresentationReport {
        kind,
        ball_size: ball.len(),
        interior_size: interior.len(),
        relation_reports,
        x_nilpotent,
        y_nilpotent,
        eigenvalues,
        eigenvalues_within_pm1,
        success_on_interior,
    })
}

/// One two-or-more-sided agreement check of the harness.
#[derive(Debug, Clone)]
pub struct EquivalenceCheck {
    pub name: String,
    /// False when the statement's hypotheses fail on this instance (the
    /// check is then skipped, not failed).
    pub applicable: bool,
    pub agree: bool,
    pub sides: Vec<(String, bool)>,
}

impl EquivalenceCheck {
    fn sided(name: &str, applicable: bool, sides: Vec<(&str, bool)>) -> Self {
        let sides: Vec<(String, bool)> =
            sides.into_iter().map(|(n, v)| (n.to_string(), v)).collect();
        let agree = !applicable || sides.windows(2).all(|w| w[0].1 == w[1].1);
        EquivalenceCheck {
            name: name.to_string(),
            applicable,
            agree,
            sides,
        }
    }

    fn implication(name: &str, hypothesis: bool, conclusion: bool) -> Self {
        EquivalenceCheck {
            name: name.to_string(),
            applicable: hypothesis,
            agree: !hypothesis || conclusion,
            sides: vec![
                ("hypothesis".into(), hypothesis),
                ("conclusion".into(), conclusion),
            ],
        }
    }
}

fn all_hold(reports: &[RelationReport<u64>]) -> bool {
    reports.iter().all(|r| r.holds)
}

/// Verify, on one finite instance, every equivalence theorem by
/// computing both sides independently: the combinatorial side from the
/// property deciders and the algebraic side from the operators and
/// weight functions. A disagreement is an implementation bug, never a
/// mathematical discovery.
pub fn verify_equivalences(p: &FinitePoset) -> Result<Vec<EquivalenceCheck>> {
    let lattice = SplitLattice::enumerate(p, splits::split_cap_from_env())?;
    let space = FiniteSplits { poset: p };
    let basis: Vec<u64> = lattice.ideals().to_vec();
    let g = p.graph();

    let hp = |prop: Property| check_property(p, prop).holds;
    let (ec, nd, na, i3nd, ac, i2a) = (
        hp(Property::Ec),
        hp(Property::Nd),
        hp(Property::Na),
        hp(Property::I3nd),
        hp(Property::Ac),
        hp(Property::I2a),
    );
    let mx1 = hp(Property::MxGa(1));
    let mn1 = hp(Property::MnLa(1));
    let six = ec && na && ac && i2a && mx1 && mn1;

    let x_nilp = check_square_nilpotent(&space, &basis, OperatorFamily::Raising)?.holds;
    let y_nilp = check_square_nilpotent(&space, &basis, OperatorFamily::Lowering)?.holds;

    let rel1 = |r: Relation, w: Option<&dyn WeightSource<u64>>| -> Result<bool> {
        Ok(all_hold(&verify_relations(
            &space,
            w,
            &basis,
            &[r],
            ScanMode::FirstWitness,
        )?))
    };
    let xx_i = rel1(Relation::XxDistant, None)?;
    let xx_ii = rel1(Relation::XxSerre, None)?;
    let yy_i = rel1(Relation::YyDistant, None)?;
    let yy_ii = rel1(Relation::YySerre, None)?;
    let xy_cross = rel1(Relation::XyCross, None)?;
    let xx = xx_i && xx_ii;
    let yy = yy_i && yy_ii;

    // mu-instantiated algebra data (exists exactly under EC).
    let mu = if ec {
        Some(mu_table(p, &lattice)?)
    } else {
        None
    };
    struct MuData {
        hx: bool,
        hy: bool,
        hh: bool,
        xy_i: bool,
        edge: bool,
        component: bool,
        pinned_i: bool,
        pinned_iii: bool,
        upper: bool,
        lower: bool,
        full_window: bool,
    }
    let mu_data = match mu.as_ref() {
        None => None,
        Some(wf) => {
            let src = LatticeWeights {
                lattice: &lattice,
                wf,
            };
            let w: Option<&dyn WeightSource<u64>> = Some(&src);
            let hx = rel1(Relation::HxSame, w)?
                && rel1(Relation::HxAdjacent, w)?
                && rel1(Relation::HxDistant, w)?;
            let hy = rel1(Relation::HySame, w)?
                && rel1(Relation::HyAdjacent, w)?
                && rel1(Relation::HyDistant, w)?;
            let hh = rel1(Relation::Hh, w)?;
            let xy_i = rel1(Relation::XyCartan, w)?;
            let edge = is_edge_weight(p, &lattice, wf).holds;
            let component = is_component_weight(p, &lattice, wf).holds;
            let pinned_i = (0..lattice.len()).all(|i| {
                (0..g.len()).all(|b| {
                    let f_min = splits::filter_minimal(p, lattice.ideal(i))
                        .iter()
                        .any(|&x| p.color(x) == b);
                    !f_min || wf.value(b, i) == int(-1)
                })
            });
            let pinned_iii = (0..lattice.len()).all(|i| {
                (0..g.len()).all(|b| {
                    let i_max = splits::ideal_maximal(p, lattice.ideal(i))
                        .iter()
                        .any(|&x| p.color(x) == b);
                    !i_max || wf.value(b, i) == int(1)
                })
            });
            let upper = check_minuscule_conditions(p, &lattice, wf, MinusculeMode::Upper).holds;
            let lower = check_minuscule_conditions(p, &lattice, wf, MinusculeMode::Lower).holds;
            let full_window =
                check_minuscule_conditions(p, &lattice, wf, MinusculeMode::Full).eigenvalues_ok;
            Some(MuData {
                hx,
                hy,
                hh,
                xy_i,
                edge,
                component,
                pinned_i,
                pinned_iii,
                upper,
                lower,
                full_window,
            })
        }
    };

    // A component weight function constructed from zero base values; it
    // exists for every poset and witnesses the extension theorems.
    let eta = construct_weight(
        p,
        &lattice,
        &build_bases(&lattice, |_| vec![int(0); g.len()]),
    )?;
    let eta_src = LatticeWeights {
        lattice: &lattice,
        wf: &eta,
    };
    let eta_w: Option<&dyn WeightSource<u64>> = Some(&eta_src);
    let eta_hx = rel1(Relation::HxSame, eta_w)?
        && rel1(Relation::HxAdjacent, eta_w)?
        && rel1(Relation::HxDistant, eta_w)?;
    let eta_hy = rel1(Relation::HySame, eta_w)?
        && rel1(Relation::HyAdjacent, eta_w)?
        && rel1(Relation::HyDistant, eta_w)?;
    let eta_hh = rel1(Relation::Hh, eta_w)?;
    let eta_edge = is_edge_weight(p, &lattice, &eta).holds;
    let eta_component = is_component_weight(p, &lattice, &eta).holds;

    // The three-case diagonal operators of the double-minuscule
    // characterization: -1 on minimal filter colors, +1 on maximal ideal
    // colors, 0 otherwise. Overlapping demands make them impossible.
    let three_case = three_case_weights(p, &lattice);
    let (tc_welldef, tc_rep) = match three_case.as_ref() {
        None => (false, false),
        Some(wf) => {
            let src = LatticeWeights {
                lattice: &lattice,
                wf,
            };
            let w: Option<&dyn WeightSource<u64>> = Some(&src);
            let rep = xx
                && yy
                && rel1(Relation::Hh, w)?
                && rel1(Relation::HxSame, w)?
                && rel1(Relation::HxAdjacent, w)?
                && rel1(Relation::HxDistant, w)?
                && rel1(Relation::HySame, w)?
                && rel1(Relation::HyAdjacent, w)?
                && rel1(Relation::HyDistant, w)?;
            (true, rep)
        }
    };

    let d = mu_data.as_ref();
    let upper_rep_mu = ec && x_nilp && xx && d.is_some_and(|d| d.hh && d.hx && d.upper);
    let lower_rep_mu = ec && y_nilp && yy && d.is_some_and(|d| d.hh && d.hy && d.lower);
    let iv_side = x_nilp && y_nilp && xx && yy && d.is_some_and(|d| d.hh && d.hx && d.hy && d.xy_i);
    let g_side =
        xx && yy && xy_cross && d.is_some_and(|d| d.hh && d.hx && d.hy && d.xy_i && d.full_window);

    let classification = classify_poset(p);

    let mut checks = vec![
        EquivalenceCheck::sided(
            "square nilpotency <=> EC+ND",
            true,
            vec![
                ("EC and ND", ec && nd),
                ("X-square nilpotent", x_nilp),
                ("Y-square nilpotent", y_nilp),
            ],
        ),
        EquivalenceCheck::sided(
            "distant commutation <=> NA",
            ec && nd,
            vec![("NA", na), ("XX.i", xx_i), ("YY.i", yy_i)],
        ),
        EquivalenceCheck::sided(
            "Serre relation <=> I3ND",
            ec && nd,
            vec![("I3ND", i3nd), ("XX.ii", xx_ii), ("YY.ii", yy_ii)],
        ),
        EquivalenceCheck::sided(
            "nilpotent n+/n- representations <=> EC+NA+I3ND",
            true,
            vec![
                ("EC, NA, I3ND", ec && na && i3nd),
                ("nilpotent rep of n+", x_nilp && xx),
                ("nilpotent rep of n-", y_nilp && yy),
            ],
        ),
        EquivalenceCheck::sided(
            "edge law <=> component law (constructed)",
            true,
            vec![("edge law", eta_edge), ("component law", eta_component)],
        ),
        EquivalenceCheck::sided(
            "edge law <=> component law (mu)",
            ec,
            vec![
                ("edge law", d.is_some_and(|d| d.edge)),
                ("component law", d.is_some_and(|d| d.component)),
            ],
        ),
        EquivalenceCheck::sided(
            "HX <=> edge law <=> HY (constructed)",
            ec,
            vec![("HX", eta_hx), ("edge law", eta_edge), ("HY", eta_hy)],
        ),
        EquivalenceCheck::sided(
            "extension to b'+/b'- <=> EC+NA+I3ND",
            true,
            vec![
                ("EC, NA, I3ND", ec && na && i3nd),
                ("nilpotent rep of n+", x_nilp && xx),
                ("nilpotent rep of b'+", x_nilp && xx && eta_hh && eta_hx),
                ("nilpotent rep of b'-", y_nilp && yy && eta_hh && eta_hy),
                ("nilpotent rep of n-", y_nilp && yy),
            ],
        ),
        EquivalenceCheck::implication("I2A implies ND+I3ND", i2a, nd && i3nd),
        EquivalenceCheck::implication(
            "mu edge law under EC+AC+I2A",
            ec && ac && i2a,
            d.is_some_and(|d| d.edge),
        ),
        EquivalenceCheck::sided(
            "pinned edge weight <=> EC+AC+I2A",
            true,
            vec![
                ("EC, AC, I2A", ec && ac && i2a),
                (
                    "edge weight pinned to -1 on minimal filter colors",
                    ec && d.is_some_and(|d| d.edge && d.pinned_i),
                ),
                (
                    "edge weight pinned to +1 on maximal ideal colors",
                    ec && d.is_some_and(|d| d.edge && d.pinned_iii),
                ),
            ],
        ),
        EquivalenceCheck::implication(
            "mu pinned under EC+AC+I2A",
            ec && ac && i2a,
            d.is_some_and(|d| d.pinned_i && d.pinned_iii),
        ),
        EquivalenceCheck::sided(
            "upper minuscule b'+ <=> d-complete properties",
            true,
            vec![
                ("EC, NA, AC, I2A, Mx1GA", ec && na && ac && i2a && mx1),
                ("upper minuscule rep of b'+ via mu", upper_rep_mu),
            ],
        ),
        EquivalenceCheck::sided(
            "lower minuscule b'- <=> dual d-complete properties",
            true,
            vec![
                ("EC, NA, AC, I2A, Mn1LA", ec && na && ac && i2a && mn1),
                ("lower minuscule rep of b'- via mu", lower_rep_mu),
            ],
        ),
        EquivalenceCheck::sided(
            "double minuscule <=> three-case diagonals <=> six properties",
            true,
            vec![
                ("six properties", six),
                ("three-case diagonal reps of b'+/b'-", tc_welldef && tc_rep),
                (
                    "upper and lower minuscule via mu",
                    upper_rep_mu && lower_rep_mu,
                ),
            ],
        ),
        EquivalenceCheck::implication(
            "three-case diagonals equal mu",
            six && tc_welldef,
            three_case.as_ref() == mu.as_ref(),
        ),
        EquivalenceCheck::sided(
            "minuscule g' representation <=> six properties",
            true,
            vec![
                ("six properties", six),
                ("nilpotent b'+/b'- reps with [X,Y]=H", iv_side),
                ("minuscule rep of g'", g_side),
            ],
        ),
        EquivalenceCheck::sided(
            "d-complete flag matches b'+ representation",
            true,
            vec![
                ("colored d-complete", classification.d_complete),
                ("upper minuscule rep of b'+", upper_rep_mu),
            ],
        ),
        EquivalenceCheck::sided(
            "minuscule flag matches g' representation",
            true,
            vec![
                ("colored minuscule", classification.minuscule),
                ("minuscule rep of g'", g_side),
            ],
        ),
        EquivalenceCheck::sided(
            "finite split space connected",
            true,
            vec![("one component", lattice.components().count == 1)],
        ),
        EquivalenceCheck::implication("cross commutation under EC", ec, xy_cross),
        EquivalenceCheck::implication(
            "nilpotency guard (mu, X)",
            d.is_some_and(|d| d.hx && d.full_window),
            x_nilp,
        ),
        EquivalenceCheck::implication(
            "nilpotency guard (mu, Y)",
            d.is_some_and(|d| d.hy && d.full_window),
            y_nilp,
        ),
        EquivalenceCheck::implication(
            "mu' agreement",
            ec && ac && i2a,
            match mu.as_ref() {
                Some(wf) => mu_prime_table(p, &lattice)? == *wf,
                None => false,
            },
        ),
    ];

    // Nilpotency guard for the constructed weight function.
    let eta_window = eta
        .eigenvalue_set()
        .iter()
        .all(|v| *v == int(-1) || *v == int(0) || *v == int(1));
    checks.push(EquivalenceCheck::implication(
        "nilpotency guard (constructed, X)",
        eta_hx && eta_window,
        x_nilp,
    ));
    checks.push(EquivalenceCheck::implication(
        "nilpotency guard (constructed, Y)",
        eta_hy && eta_window,
        y_nilp,
    ));

    // For adjacent colors the raising operators
    // commute exactly when no cover uses the two colors.
    if p.len() <= 6 {
        let mut agree = true;
        for a in 0..g.len() {
            for b in a + 1..g.len() {
                if !g.adjacent(a, b) {
                    continue;
                }
                let mut nonzero = false;
                for s in &basis {
                    if !relation_defect(&space, None, Relation::XxDistant, a, b, s)?.is_zero() {
                        nonzero = true;
                        break;
                    }
                }
                let neighbors_colored = p.covers().iter().any(|&(x, y)| {
                    (p.color(x) == a && p.color(y) == b) || (p.color(x) == b && p.color(y) == a)
                });
                agree &= nonzero == neighbors_colored;
            }
        }
        checks.push(EquivalenceCheck::sided(
            "adjacent commutator remark",
            true,
            vec![("commutator/neighbor agreement", agree)],
        ));
    }

    Ok(checks)
}

fn build_bases(
    lattice: &SplitLattice,
    mut values: impl FnMut(usize) -> Vec<Scalar>,
) -> Vec<(usize, Vec<Scalar>)> {
    let comp = lattice.components();
    let mut bases = Vec::new();
    let mut seen = vec![false; comp.count];
    for i in 0..lattice.len() {
        let c = comp.comp[i];
        if !seen[c] {
            seen[c] = true;
            bases.push((i, values(c)));
        }
    }
    bases
}

/// The diagonal eigenvalues demanded by the double-minuscule condition;
/// `None` when the minimal-filter and maximal-ideal cases collide.
fn three_case_weights(p: &FinitePoset, lattice: &SplitLattice) -> Option<WeightFunction> {
    let g = p.graph();
    let mut wf = WeightFunction::zero(g.len(), lattice.len());
    for i in 0..lattice.len() {
        let f_min = splits::filter_minimal(p, lattice.ideal(i));
        let i_max = splits::ideal_maximal(p, lattice.ideal(i));
        for b in 0..g.len() {
            let minus = f_min.iter().any(|&x| p.color(x) == b);
            let plus = i_max.iter().any(|&x| p.color(x) == b);
            wf.values[b][i] = match (minus, plus) {
                (true, true) => return None,
                (true, false) => int(-1),
                (false, true) => int(1),
                (false, false) => int(0),
            };
        }
    }
    Some(wf)
}

/// The metamorphic duality suite: properties, operators, and
/// representations must transport across the order dual.
pub fn duality_suite(p: &FinitePoset) -> Result<Vec<EquivalenceCheck>> {
    let dual = p.dual();
    let lattice = SplitLattice::enumerate(p, splits::split_cap_from_env())?;
    let dual_lattice = SplitLattice::enumerate(&dual, splits::split_cap_from_env())?;
    let mut checks = Vec::new();

    let mut props_agree = true;
    for prop in Property::all_eight(1) {
        props_agree &= check_property(p, prop).holds == check_property(&dual, prop.dual()).holds;
    }
    checks.push(EquivalenceCheck::sided(
        "duality: properties",
        true,
        vec![("all eight transport", props_agree)],
    ));

    // Lowering on P is raising on the dual, transported through ideal
    // complementation.
    let space = FiniteSplits { poset: p };
    let dual_space = FiniteSplits { poset: &dual };
    let full = splits::full_mask(p.len());
    let mut ops_agree = true;
    'outer: for &ideal in lattice.ideals() {
        for a in 0..p.graph().len() {
            let mut lowered: Vec<u64> = space.lower_targets(a, &ideal)?;
            let mut raised_dual: Vec<u64> = dual_space
                .raise_targets(a, &(full & !ideal))?
                .into_iter()
                .map(|m| full & !m)
                .collect();
            lowered.sort_unstable();
            raised_dual.sort_unstable();
            if lowered != raised_dual {
                ops_agree = false;
                break 'outer;
            }
        }
    }
    checks.push(EquivalenceCheck::sided(
        "duality: operators",
        true,
        vec![("Y on P is X on the dual", ops_agree)],
    ));

    let pairs = [
        (AlgebraKind::NPlus, AlgebraKind::NMinus),
        (AlgebraKind::BPlusDerived, AlgebraKind::BMinusDerived),
        (AlgebraKind::GDerived, AlgebraKind::GDerived),
    ];
    let mut reps_agree = true;
    for (k1, k2) in pairs {
        let r1 = build_representation(p, &lattice, k1)?;
        let r2 = build_representation(&dual, &dual_lattice, k2)?;
        reps_agree &= r1.success == r2.success;
    }
    checks.push(EquivalenceCheck::sided(
        "duality: representations",
        true,
        vec![("success transports", reps_agree)],
    ));

    // Census duality: psi of P is upsilon of the dual, and mu on the
    // dual is the negated filter-emphasizing variant.
    if check_property(p, Property::Ec).holds {
        let mut census_agree = true;
        'census: for &ideal in lattice.ideals() {
            let dual_ideal = full & !ideal;
            for b in 0..p.graph().len() {
                let psi = weights::compute_psi(p, ideal, b)?.value;
                let ups = weights::compute_upsilon(&dual, dual_ideal, b)?.value;
                if psi != ups {
                    census_agree = false;
                    break 'census;
                }
                let mu_dual = weights::compute_mu(&dual, dual_ideal, b)?;
                let mu_prime = weights::compute_mu_prime(p, ideal, b)?;
                if mu_dual != -mu_prime {
                    census_agree = false;
                    break 'census;
                }
            }
        }
        checks.push(EquivalenceCheck::sided(
            "duality: census",
            true,
            vec![("psi/upsilon and mu/mu' transport", census_agree)],
        ));
    }

    Ok(checks)
}

/// Seeded weight-function laws: the edge/component equivalence on
/// constructed and perturbed functions, census additivity on random
/// split triples, and the uniqueness probe.
pub fn weight_function_suite(
    p: &FinitePoset,
    seed: u64,
    functions: usize,
) -> Result<Vec<EquivalenceCheck>> {
    let lattice = SplitLattice::enumerate(p, splits::split_cap_from_env())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = p.graph();
    let mut law_agree = true;
    let mut constructed_ok = true;
    let mut guard_ok = true;
    let space = FiniteSplits { poset: p };
    let basis: Vec<u64> = lattice.ideals().to_vec();
    let x_nilp = check_square_nilpotent(&space, &basis, OperatorFamily::Raising)?.holds;
    for _ in 0..functions {
        let bases = build_bases(&lattice, |_| {
            (0..g.len())
                .map(|_| Scalar::new(rng.gen_range(-4..=4), rng.gen_range(1..=3)))
                .collect()
        });
        let eta = construct_weight(p, &lattice, &bases)?;
        let e = is_edge_weight(p, &lattice, &eta).holds;
        let c = is_component_weight(p, &lattice, &eta).holds;
        constructed_ok &= e && c;
        law_agree &= e == c;
        // Perturb one value; the two laws must still agree on the verdict.
        let mut eta2 = eta.clone();
        let b = rng.gen_range(0..g.len());
        let i = rng.gen_range(0..lattice.len());
        eta2.values[b][i] += int(1);
        law_agree &= is_edge_weight(p, &lattice, &eta2).holds
            == is_component_weight(p, &lattice, &eta2).holds;
        // Nilpotency guard on the constructed function.
        let src = LatticeWeights {
            lattice: &lattice,
            wf: &eta,
        };
        let w: Option<&dyn WeightSource<u64>> = Some(&src);
        let hx = all_hold(&verify_relations(
            &space,
            w,
            &basis,
            &[Relation::HxSame, Relation::HxAdjacent, Relation::HxDistant],
            ScanMode::FirstWitness,
        )?);
        let windowed = eta
            .eigenvalue_set()
            .iter()
            .all(|v| *v == int(-1) || *v == int(0) || *v == int(1));
        if hx && windowed {
            guard_ok &= x_nilp;
        }
    }
    let mut checks = vec![
        EquivalenceCheck::sided(
            "edge/component metamorphic",
            true,
            vec![("edge and component verdicts agree", law_agree)],
        ),
        EquivalenceCheck::sided(
            "construction satisfies both laws",
            true,
            vec![("constructed functions satisfy both laws", constructed_ok)],
        ),
        EquivalenceCheck::sided(
            "nilpotency guard (sampled)",
            true,
            vec![("nilpotency under windowed HX", guard_ok)],
        ),
    ];

    // Census additivity on random split triples.
    let mut additive = true;
    for _ in 0..functions.max(32) {
        let i = rng.gen_range(0..lattice.len());
        let j = rng.gen_range(0..lattice.len());
        let k = rng.gen_range(0..lattice.len());
        for b in 0..g.len() {
            let lhs = splits::delta(p, b, lattice.ideal(k), lattice.ideal(i));
            let rhs = splits::delta(p, b, lattice.ideal(k), lattice.ideal(j))
                + splits::delta(p, b, lattice.ideal(j), lattice.ideal(i));
            additive &= lhs == rhs;
        }
    }
    checks.push(EquivalenceCheck::sided(
        "census additivity",
        true,
        vec![("census additivity", additive)],
    ));

    // Whenever the probe's hypotheses hold, candidates built from mu's
    // base values must come back equal to mu.
    let ec = check_property(p, Property::Ec).holds;
    if ec {
        if let Ok(mu) = mu_table(p, &lattice) {
            let bases = build_bases(&lattice, |_| vec![int(0); g.len()]);
            let bases: Vec<(usize, Vec<Scalar>)> = bases
                .iter()
                .map(|(i, _)| (*i, (0..g.len()).map(|b| mu.value(b, *i)).collect()))
                .collect();
            let candidate = construct_weight(p, &lattice, &bases)?;
            match weights::uniqueness_probe(p, &lattice, &candidate) {
                Ok(r) => checks.push(EquivalenceCheck::sided(
                    "uniqueness probe",
                    true,
                    vec![("probe confirms mu", r.equals_mu)],
                )),
                Err(Error::Refused(_)) => checks.push(EquivalenceCheck::sided(
                    "uniqueness probe",
                    false,
                    vec![("hypotheses fail; probe refused", true)],
                )),
                Err(e) => return Err(e),
            }
        }
    }

    Ok(checks)
}

// ---------------------------------------------------------------------
// Instance generation

fn pair_index(i: usize, j: usize, n: usize) -> usize {
    // i < j
    let before: usize = (0..i).map(|r| n - r - 1).sum();
    before + (j - i - 1)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    permute(&mut items, 0, &mut out);
    out
}

fn permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}

/// All posets on exactly `n` elements, one canonically labeled
/// representative per isomorphism class, as cover lists.
pub fn exhaustive_cover_lists(n: usize) -> Vec<Vec<(usize, usize)>> {
    assert!(n >= 1);
    let n_pairs = n * (n - 1) / 2;
    let perms = permutations(n);
    let mut out = Vec::new();
    'mask: for mask in 0u32..(1 << n_pairs) {
        let lt = |i: usize, j: usize| i < j && mask >> pair_index(i, j, n) & 1 == 1;
        // Transitivity of the strict order.
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if lt(i, j) && lt(j, k) && !lt(i, k) {
                        continue 'mask;
                    }
                }
            }
        }
        // Keep only the lexicographically smallest naturally-labeled
        // relabeling across all isomorphisms.
        let mut is_canonical = true;
        'perm: for perm in &perms {
            let mut inv = vec![0; n];
            for (i, &pi) in perm.iter().enumerate() {
                inv[pi] = i;
            }
            // The relabeling must keep the order upper-triangular.
            for i in 0..n {
                for j in i + 1..n {
                    if lt(i, j) && perm[i] > perm[j] {
                        continue 'perm;
                    }
                }
            }
            let mut relabeled = 0u32;
            for i2 in 0..n {
                for j2 in i2 + 1..n {
                    if lt(inv[i2], inv[j2]) {
                        relabeled |= 1 << pair_index(i2, j2, n);
                    }
                }
            }
            if relabeled < mask {
                is_canonical = false;
                break;
            }
        }
        if !is_canonical {
            continue;
        }
        // Cover pairs: strict relations with nothing in between.
        let mut covers = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if lt(i, j) && !(0..n).any(|k| lt(i, k) && lt(k, j)) {
                    covers.push((i, j));
                }
            }
        }
        out.push(covers);
    }
    out
}

const COLOR_NAMES: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

fn instance_from_parts(
    n: usize,
    covers: &[(usize, usize)],
    coloring: &[usize],
    m: usize,
    graph_mask: u32,
) -> FinitePoset {
    let colors: Vec<&str> = COLOR_NAMES[..m].to_vec();
    let mut edges = Vec::new();
    let mut bit = 0;
    for a in 0..m {
        for b in a + 1..m {
            if graph_mask >> bit & 1 == 1 {
                edges.push((colors[a], colors[b]));
            }
            bit += 1;
        }
    }
    let graph = ColorGraph::new(&colors, &edges).expect("generated graph is valid");
    let elements: Vec<(String, String)> = (0..n)
        .map(|i| (format!("x{i}"), colors[coloring[i]].to_string()))
        .collect();
    let cover_names: Vec<(String, String)> = covers
        .iter()
        .map(|&(i, j)| (format!("x{i}"), format!("x{j}")))
        .collect();
    FinitePoset::build(
        graph,
        &elements,
        &cover_names,
        ColorPolicy::RequireSurjective,
    )
    .expect("generated poset is valid")
}

/// Enumerate every instance with exactly `n_elements` elements and
/// exactly `n_colors` colors: all poset isomorphism classes, all
/// surjective colorings, all simple graphs on the color set.
pub fn exhaustive_instances(n_elements: usize, n_colors: usize) -> Result<Vec<FinitePoset>> {
    if n_elements == 0 || n_elements > 6 {
        return Err(Error::SizeGuard(format!(
            "exhaustive mode supports 1..=6 elements, got {n_elements}"
        )));
    }
    if n_colors == 0 || n_colors > 3 || n_colors > n_elements {
        return Err(Error::SizeGuard(format!(
            "exhaustive mode supports 1..=3 colors (at most one per element), got {n_colors}"
        )));
    }
    let n = n_elements;
    let m = n_colors;
    let shapes = exhaustive_cover_lists(n);
    let graph_bits = m * (m - 1) / 2;
    let mut out = Vec::new();
    for covers in &shapes {
        let mut coloring = vec![0usize; n];
        loop {
            let surjective = (0..m).all(|c| coloring.contains(&c));
            if surjective {
                for graph_mask in 0u32..(1 << graph_bits) {
                    out.push(instance_from_parts(n, covers, &coloring, m, graph_mask));
                }
            }
            // Odometer over colorings.
            let mut pos = 0;
            loop {
                if pos == n {
                    break;
                }
                coloring[pos] += 1;
                if coloring[pos] < m {
                    break;
                }
                coloring[pos] = 0;
                pos += 1;
            }
            if pos == n {
                break;
            }
        }
    }
    Ok(out)
}

/// One seeded random instance with at most the given sizes.
pub fn random_instance(
    rng: &mut ChaCha8Rng,
    max_elements: usize,
    max_colors: usize,
) -> FinitePoset {
    let n = rng.gen_range(1..=max_elements);
    let m = rng.gen_range(1..=max_colors.min(n));
    let p_edge: f64 = rng.gen_range(0.15..0.6);
    let mut lt = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            lt[i][j] = rng.gen_bool(p_edge);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if lt[i][k] && lt[k][j] {
                    lt[i][j] = true;
                }
            }
        }
    }
    let mut covers = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if lt[i][j] && !(0..n).any(|k| lt[i][k] && lt[k][j]) {
                covers.push((i, j));
            }
        }
    }
    let mut coloring: Vec<usize> = (0..n).map(|_| rng.gen_range(0..m)).collect();
    let mut slots: Vec<usize> = (0..n).collect();
    for c in 0..m {
        let pick = rng.gen_range(0..slots.len());
        coloring[slots.remove(pick)] = c;
    }
    let graph_bits = m * (m - 1) / 2;
    let graph_mask: u32 = if graph_bits == 0 {
        0
    } else {
        rng.gen_range(0..(1u32 << graph_bits))
    };
    instance_from_parts(n, &covers, &coloring, m, graph_mask)
}

/// A reproducible stream of random instances.
pub fn random_instances(
    max_elements: usize,
    max_colors: usize,
    count: usize,
    seed: u64,
) -> Vec<FinitePoset> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_instance(&mut rng, max_elements, max_colors))
        .collect()
}

// ---------------------------------------------------------------------
// Harness driver

#[derive(Debug, Clone, Copy, Default)]
pub struct CheckTally {
    /// Instances on which the statement's hypotheses held.
    pub applicable: usize,
    pub agreed: usize,
}

#[derive(Debug, Clone, Default)]
pub struct HarnessSummary {
    pub instances: usize,
    pub failed_instances: usize,
    pub failures: Vec<String>,
    /// Check-name -> agreement tallies over all instances.
    pub per_check: std::collections::BTreeMap<String, CheckTally>,
}

impl HarnessSummary {
    pub fn per_check_failures(&self) -> std::collections::BTreeMap<String, usize> {
        self.per_check
            .iter()
            .filter(|(_, t)| t.agreed < t.applicable)
            .map(|(k, t)| (k.clone(), t.applicable - t.agreed))
            .collect()
    }
}

fn describe_instance(p: &FinitePoset) -> String {
    let colors: Vec<String> = (0..p.len())
        .map(|x| p.graph().name(p.color(x)).to_string())
        .collect();
    format!(
        "n={} covers={:?} colors={:?} edges={:?}",
        p.len(),
        p.covers(),
        colors,
        p.graph().edges(),
    )
}

/// Evaluate the equivalence, duality, and (lightly) the weight suites on
/// one instance.
pub fn evaluate_instance(
    p: &FinitePoset,
    weight_functions: usize,
) -> Result<Vec<EquivalenceCheck>> {
    let mut checks = verify_equivalences(p)?;
    checks.extend(duality_suite(p)?);
    if weight_functions > 0 {
        checks.extend(weight_function_suite(p, 0x5eed, weight_functions)?);
    }
    Ok(checks)
}

/// Names of the checks that disagreed on this instance.
pub fn failing_checks(checks: &[EquivalenceCheck]) -> Vec<String> {
    checks
        .iter()
        .filter(|c| c.applicable && !c.agree)
        .map(|c| c.name.clone())
        .collect()
}

/// Run the harness over many instances in parallel with a deterministic
/// merge in instance order.
pub fn run_harness(instances: &[FinitePoset], weight_functions: usize) -> HarnessSummary {
    let results: Vec<(usize, Vec<EquivalenceCheck>)> = instances
        .par_iter()
        .enumerate()
        .map(|(i, p)| {
            let checks = evaluate_instance(p, weight_functions).unwrap_or_else(|e| {
                vec![EquivalenceCheck {
                    name: format!("harness error: {e}"),
                    applicable: true,
                    agree: false,
                    sides: Vec::new(),
                }]
            });
            (i, checks)
        })
        .collect();
    let mut summary = HarnessSummary {
        instances: instances.len(),
        ..Default::default()
    };
    for (i, checks) in results {
        for c in &checks {
            let tally = summary.per_check.entry(c.name.clone()).or_default();
            if c.applicable {
                tally.applicable += 1;
                tally.agreed += c.agree as usize;
            }
        }
        let failing = failing_checks(&checks);
        if failing.is_empty() {
            continue;
        }
        summary.failed_instances += 1;
        if summary.failures.len() < 10 {
            summary.failures.push(format!(
                "{}: {:?}",
                describe_instance(&instances[i]),
                failing
            ));
        }
    }
    summary
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fig2_classification() {
        let c = classify_poset(&fixtures::fig2_poset());
        assert!(c.d_complete);
        assert!(!c.minuscule);
    }

    #[test]
    fn fig1_classification() {
        let (c, agree) = classify_heap(&fixtures::fig1_heap(), 3).unwrap();
        assert!(c.d_complete);
        assert!(c.minuscule);
        assert!(agree);
    }

    #[test]
    fn fig2_b_plus_representation() {
        let p = fixtures::fig2_poset();
        let l = SplitLattice::enumerate(&p, 10_000).unwrap();
        let rep = build_representation(&p, &l, AlgebraKind::BPlusDerived).unwrap();
        assert!(rep.success);
        assert!(rep.relation_reports.iter().all(|r| r.holds));
        assert!(rep.minuscule.unwrap().holds);
    }

    #[test]
    fn fig2_g_prime_fails_with_witness() {
        let p = fixtures::fig2_poset();
        let l = SplitLattice::enumerate(&p, 10_000).unwrap();
        let rep = build_representation(&p, &l, AlgebraKind::GDerived).unwrap();
        assert!(!rep.success);
        // The concrete defect: the Cartan pairing relation [X,Y]=H fails
        // (mu_d is 2 at the bottom split where both sides of the
        // commutator vanish), and the eigenvalue window is violated.
        let failing: Vec<_> = rep
            .relation_reports
            .iter()
            .filter(|r| r.relation == Relation::XyCartan && !r.holds)
            .collect();
        assert!(!failing.is_empty());
        assert!(failing[0].witness_split.is_some());
        assert!(!rep.minuscule.unwrap().holds);
    }

    #[test]
    fn exhaustive_counts() {
        assert_eq!(exhaustive_cover_lists(1).len(), 1);
        assert_eq!(exhaustive_cover_lists(2).len(), 2);
        assert_eq!(exhaustive_cover_lists(3).len(), 5);
        assert_eq!(exhaustive_cover_lists(4).len(), 16);
        assert_eq!(exhaustive_cover_lists(5).len(), 63);
        assert_eq!(exhaustive_cover_lists(6).len(), 318);
        assert_eq!(exhaustive_instances(1, 1).unwrap().len(), 1);
        assert_eq!(exhaustive_instances(2, 1).unwrap().len(), 2);
        assert!(exhaustive_instances(7, 1).is_err());
    }

    #[test]
    fn random_stream_reproducible() {
        let a = random_instances(5, 3, 20, 7);
        let b = random_instances(5, 3, 20, 7);
        for (p, q) in a.iter().zip(&b) {
            assert_eq!(p.covers(), q.covers());
            assert_eq!(p.names(), q.names());
            assert_eq!(
                (0..p.len()).map(|x| p.color(x)).collect::<Vec<_>>(),
                (0..q.len()).map(|x| q.color(x)).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn fig2_equivalences_agree() {
        let checks = verify_equivalences(&fixtures::fig2_poset()).unwrap();
        for c in &checks {
            assert!(
                !c.applicable || c.agree,
                "{} disagreed: {:?}",
                c.name,
                c.sides
            );
        }
        // The upper characterization holds with both sides true; the full one with both false.
        let upper = checks
            .iter()
            .find(|c| c.name == "upper minuscule b'+ <=> d-complete properties")
            .unwrap();
        assert!(upper.sides.iter().all(|(_, v)| *v));
        let full = checks
            .iter()
            .find(|c| c.name == "minuscule g' representation <=> six properties")
            .unwrap();
        assert!(full.sides.iter().all(|(_, v)| !*v));
    }

    #[test]
    fn two_chain_adjacent_colors_equivalences() {
        let g = ColorGraph::new(&["a", "b"], &[("a", "b")]).unwrap();
        let p = FinitePoset::build(
            g,
            &[("x", "a"), ("y", "b")],
            &[("x", "y")],
            ColorPolicy::RequireSurjective,
        )
        .unwrap();
        let checks = verify_equivalences(&p).unwrap();
        for c in &checks {
            assert!(
                !c.applicable || c.agree,
                "{} disagreed: {:?}",
                c.name,
                c.sides
            );
        }
        let nplus = checks
            .iter()
            .find(|c| c.name == "nilpotent n+/n- representations <=> EC+NA+I3ND")
            .unwrap();
        assert!(nplus.sides.iter().all(|(_, v)| *v));
    }

    #[test]
    fn two_chain_same_color_prop323_both_false() {
        let g = ColorGraph::new(&["a"], &[]).unwrap();
        let p = FinitePoset::build(
            g,
            &[("x", "a"), ("y", "a")],
            &[("x", "y")],
            ColorPolicy::RequireSurjective,
        )
        .unwrap();
        let checks = verify_equivalences(&p).unwrap();
        let nilp = checks
            .iter()
            .find(|c| c.name == "square nilpotency <=> EC+ND")
            .unwrap();
        assert!(nilp.agree);
        assert!(nilp.sides.iter().all(|(_, v)| !*v));
    }

    #[test]
    fn fig2_duality_and_weight_suites() {
        let p = fixtures::fig2_poset();
        for c in duality_suite(&p).unwrap() {
            assert!(c.agree, "{} disagreed", c.name);
        }
        for c in weight_function_suite(&p, 42, 8).unwrap() {
            assert!(!c.applicable || c.agree, "{} disagreed", c.name);
        }
    }

    #[test]
    fn fig1_g_prime_on_interior_ball() {
        let h = fixtures::fig1_heap();
        let seed = fixtures::fig1_seed_split();
        let rep = build_representation_heap(&h, &seed, 3, AlgebraKind::GDerived, 3).unwrap();
        assert!(rep.success_on_interior);
        assert!(rep.eigenvalues_within_pm1);
        assert!(build_representation_heap(&h, &seed, 2, AlgebraKind::GDerived, 3).is_err());
    }
}
