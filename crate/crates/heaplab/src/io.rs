//! JSON input schema and report/export serialization.
//!
//! Input files carry a color graph plus either a finite poset, a
//! periodic heap, or a poset with periodic tails; splits serialize as
//! ideal element lists (finite) or frontier maps with "inf"/"-inf"
//! sentinels (periodic).

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::classify::{ClassificationReport, HeapRepresentationReport, RepresentationReport};
use crate::error::{Error, Result};
use crate::graph::ColorGraph;
use crate::heap::{Layer, PeriodicHeap, PeriodicSplit};
use crate::operators::PairReport;
use crate::poset::{ColorPolicy, FinitePoset};
use crate::properties::{Property, PropertyReport, Witness};
use crate::splits::SplitLattice;
use crate::tailed::{TailSide, TailedPoset, TailedSplit};
use crate::vector::Scalar;
use crate::weights::WeightFunction;

#[derive(Debug, Deserialize, Serialize)]
pub struct GraphDoc {
    pub colors: Vec<String>,
    #[serde(default)]
    pub edges: Vec<(String, String)>,
}

#[derive(Debug, Deserialize, Serialize)]
pub struct ElementDoc {
    pub id: String,
    pub color: String,
}

#[derive(Debug, Deserialize, Serialize)]
pub struct PosetDoc {
    pub elements: Vec<ElementDoc>,
    #[serde(default)]
    pub covers: Vec<(String, String)>,
}

#[derive(Debug, Deserialize, Serialize)]
pub struct HeapCoverDoc {
    pub from: String,
    pub to: String,
    pub shift: i64,
}

#[derive(Debug, Deserialize, Serialize)]
pub struct HeapDoc {
    pub cells: Vec<ElementDoc>,
    pub covers: Vec<HeapCoverDoc>,
}

#[derive(Debug, Deserialize, Serialize)]
pub struct TailDoc {
    pub name: String,
    pub attach: String,
    pub cycle: Vec<String>,
}

#[derive(Debug, Deserialize, Serialize)]
pub struct SplitDoc {
    #[serde(default)]
    pub ideal: Vec<String>,
    #[serde(default)]
    pub tails_in_ideal: Vec<String>,
}

#[derive(Debug, Deserialize, Serialize)]
pub struct InputDoc {
    pub graph: GraphDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poset: Option<PosetDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub heap: Option<HeapDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tails: Option<Vec<TailDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub split: Option<SplitDoc>,
}

/// A parsed input file.
pub enum LoadedInput {
    Finite(FinitePoset),
    Heap(PeriodicHeap),
    Tailed(TailedPoset, Option<TailedSplit>),
}

pub fn parse_input(text: &str, policy: ColorPolicy) -> Result<LoadedInput> {
    let doc: InputDoc =
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("json: {e}")))?;
    let graph = ColorGraph::new(
        &doc.graph.colors,
        &doc.graph
            .edges
            .iter()
            .map(|(a, b)| (a.clone(), b.clone()))
            .collect::<Vec<_>>(),
    )?;
    match (doc.poset, doc.heap) {
        (Some(p), None) => {
            let elements: Vec<(String, String)> = p
                .elements
                .iter()
                .map(|e| (e.id.clone(), e.color.clone()))
                .collect();
            let poset = FinitePoset::build(graph, &elements, &p.covers, policy)?;
            match doc.tails {
                None => Ok(LoadedInput::Finite(poset)),
                Some(tails) => {
                    let tail_specs: Vec<(&str, &str, Vec<&str>)> = tails
                        .iter()
                        .map(|t| {
                            (
                                t.name.as_str(),
                                t.attach.as_str(),
                                t.cycle.iter().map(|c| c.as_str()).collect(),
                            )
                        })
                        .collect();
                    let tail_refs: Vec<(&str, &str, &[&str])> = tail_specs
                        .iter()
                        .map(|(n, a, c)| (*n, *a, c.as_slice()))
                        .collect();
                    let tp = TailedPoset::new(poset, &tail_refs)?;
                    let split = match doc.split {
                        None => None,
                        Some(s) => {
                            let ideal: Vec<&str> = s.ideal.iter().map(|x| x.as_str()).collect();
                            let sides: Vec<(&str, TailSide)> = s
                                .tails_in_ideal
                                .iter()
                                .map(|n| (n.as_str(), TailSide::Ideal))
                                .collect();
                            Some(tp.split(&ideal, &sides)?)
                        }
                    };
                    Ok(LoadedInput::Tailed(tp, split))
                }
            }
        }
        (None, Some(h)) => {
            let cells: Vec<(String, String)> = h
                .cells
                .iter()
                .map(|c| (c.id.clone(), c.color.clone()))
                .collect();
            let covers: Vec<(String, String, i64)> = h
                .covers
                .iter()
                .map(|c| (c.from.clone(), c.to.clone(), c.shift))
                .collect();
            Ok(LoadedInput::Heap(PeriodicHeap::build(
                graph, &cells, &covers,
            )?))
        }
        (Some(_), Some(_)) => Err(Error::InvalidInput(
            "input has both a poset and a heap".into(),
        )),
        (None, None) => Err(Error::InvalidInput("input needs a poset or a heap".into())),
    }
}

/// Parse a frontier document like `{"frontier":{"c0":0,"c1":"inf"}}`.
pub fn parse_frontier(h: &PeriodicHeap, value: &Value) -> Result<PeriodicSplit> {
    let map = value
        .get("frontier")
        .and_then(|f| f.as_object())
        .ok_or_else(|| Error::InvalidInput("expected a frontier object".into()))?;
    let mut frontier = vec![Layer::Fin(0); h.n_cells()];
    let mut seen = vec![false; h.n_cells()];
    for (name, v) in map {
        let cell = h.cell_id(name)?;
        seen[cell] = true;
        frontier[cell] = match v {
            Value::Number(n) => Layer::Fin(
                n.as_i64()
                    .ok_or_else(|| Error::InvalidInput(format!("bad layer for `{name}`")))?,
            ),
            Value::String(s) if s == "inf" => Layer::PosInf,
            Value::String(s) if s == "-inf" => Layer::NegInf,
            _ => return Err(Error::InvalidInput(format!("bad layer for `{name}`"))),
        };
    }
    if let Some(missing) = seen.iter().position(|&s| !s) {
        return Err(Error::InvalidInput(format!(
            "frontier is missing cell `{}`",
            h.cell_name(missing)
        )));
    }
    let split = PeriodicSplit { frontier };
    h.validate_split(&split)?;
    Ok(split)
}

pub fn frontier_json(h: &PeriodicHeap, s: &PeriodicSplit) -> Value {
    let mut map = serde_json::Map::new();
    for (u, layer) in s.frontier.iter().enumerate() {
        let v = match layer {
            Layer::Fin(n) => json!(n),
            Layer::PosInf => json!("inf"),
            Layer::NegInf => json!("-inf"),
        };
        map.insert(h.cell_name(u).to_string(), v);
    }
    json!({ "frontier": map })
}

/// Exact rational rendering: integers plainly, otherwise `p/q`.
pub fn scalar_string(s: Scalar) -> String {
    if s.is_integer() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

pub fn property_report_json(p: &FinitePoset, r: &PropertyReport) -> Value {
    let name = |x: usize| p.name(x).to_string();
    let witness = r.witness.as_ref().map(|w| match w {
        Witness::Pair(x, y) => json!({ "pair": [name(*x), name(*y)] }),
        Witness::Cover(x, y) => json!({ "cover": [name(*x), name(*y)] }),
        Witness::Chain(x, y, z) => json!({ "chain": [name(*x), name(*y), name(*z)] }),
        Witness::Interval {
            pair,
            adjacent_members,
        } => json!({
            "pair": [name(pair.0), name(pair.1)],
            "adjacent_members": adjacent_members.iter().map(|&z| name(z)).collect::<Vec<_>>(),
        }),
        Witness::Frontier { extreme, offenders } => json!({
            "extreme": name(*extreme),
            "offenders": offenders.iter().map(|&z| name(z)).collect::<Vec<_>>(),
        }),
    });
    let mut out = json!({
        "property": r.property.name(),
        "holds": r.holds,
    });
    if let Property::MxGa(k) | Property::MnLa(k) = r.property {
        out["k"] = json!(k);
    }
    if let Some(w) = witness {
        out["witness"] = w;
    }
    out
}

pub fn lattice_json(p: &FinitePoset, l: &SplitLattice) -> Value {
    let splits: Vec<Value> = l
        .ideals()
        .iter()
        .map(|&ideal| {
            let members: Vec<String> = (0..p.len())
                .filter(|&x| ideal >> x & 1 == 1)
                .map(|x| p.name(x).to_string())
                .collect();
            json!({ "ideal": members })
        })
        .collect();
    let edges: Vec<Value> = l
        .up_edges()
        .iter()
        .map(|&(i, j, c)| json!({ "from": i, "to": j, "color": p.graph().name(c) }))
        .collect();
    json!({ "splits": splits, "edges": edges })
}

/// Rebuild a lattice from its JSON export, for round-trip checks.
pub fn lattice_from_json(p: &FinitePoset, v: &Value) -> Result<Vec<u64>> {
    let splits = v
        .get("splits")
        .and_then(|s| s.as_array())
        .ok_or_else(|| Error::InvalidInput("expected splits array".into()))?;
    let mut ideals = Vec::new();
    for s in splits {
        let members = s
            .get("ideal")
            .and_then(|m| m.as_array())
            .ok_or_else(|| Error::InvalidInput("expected ideal array".into()))?;
        let mut mask = 0u64;
        for m in members {
            let name = m
                .as_str()
                .ok_or_else(|| Error::InvalidInput("ideal member must be a string".into()))?;
            mask |= 1 << p.elem_id(name)?;
        }
        ideals.push(mask);
    }
    Ok(ideals)
}

pub fn lattice_dot(p: &FinitePoset, l: &SplitLattice) -> String {
    let mut out = String::from("digraph FI {\n  rankdir=BT;\n");
    for (i, &ideal) in l.ideals().iter().enumerate() {
        let members: Vec<&str> = (0..p.len())
            .filter(|&x| ideal >> x & 1 == 1)
            .map(|x| p.name(x))
            .collect();
        out.push_str(&format!("  {} [label=\"{{{}}}\"];\n", i, members.join(",")));
    }
    for &(i, j, c) in l.up_edges() {
        out.push_str(&format!(
            "  {} -> {} [label=\"{}\"];\n",
            i,
            j,
            p.graph().name(c)
        ));
    }
    out.push_str("}\n");
    out
}

pub fn relation_report_json<K>(
    g: &ColorGraph,
    r: &PairReport<K>,
    split_desc: impl Fn(&K) -> Value,
) -> Value {
    let mut out = json!({
        "relation": r.relation.code(),
        "colors": [g.name(r.colors.0), g.name(r.colors.1)],
        "holds": r.holds,
    });
    if let Some(w) = &r.witness_split {
        out["witness_split"] = split_desc(w);
    }
    out
}

pub fn weight_rows_json(p: &FinitePoset, wf: &WeightFunction) -> Vec<Value> {
    let mut rows = Vec::new();
    for b in 0..p.graph().len() {
        for (i, v) in wf.values[b].iter().enumerate() {
            rows.push(json!({
                "color": p.graph().name(b),
                "split": i,
                "value": scalar_string(*v),
            }));
        }
    }
    rows
}

pub fn classification_json(p: &FinitePoset, c: &ClassificationReport) -> Value {
    json!({
        "d_complete": c.d_complete,
        "minuscule": c.minuscule,
        "properties": c
            .property_reports
            .iter()
            .map(|r| property_report_json(p, r))
            .collect::<Vec<_>>(),
    })
}

pub fn representation_json(p: &FinitePoset, r: &RepresentationReport) -> Value {
    json!({
        "algebra": r.kind.name(),
        "success": r.success,
        "mu_available": r.mu_available,
        "x_square_nilpotent": r.x_nilpotent.as_ref().map(|n| n.holds),
        "y_square_nilpotent": r.y_nilpotent.as_ref().map(|n| n.holds),
        "relations": r
            .relation_reports
            .iter()
            .map(|rr| relation_report_json(p.graph(), rr, |s| json!(format!("{s:b}"))))
            .collect::<Vec<_>>(),
        "minuscule_conditions": r.minuscule.as_ref().map(|m| m.holds),
        "eigenvalues": r.eigenvalues.as_ref().map(|e| {
            e.iter().map(|v| scalar_string(*v)).collect::<Vec<_>>()
        }),
    })
}

pub fn heap_representation_json(h: &PeriodicHeap, r: &HeapRepresentationReport) -> Value {
    json!({
        "algebra": r.kind.name(),
        "certified": "interior splits of the explored ball",
        "ball_size": r.ball_size,
        "interior_size": r.interior_size,
        "success_on_interior": r.success_on_interior,
        "relations": r
            .relation_reports
            .iter()
            .map(|rr| relation_report_json(h.graph(), rr, |s| frontier_json(h, s)))
            .collect::<Vec<_>>(),
        "eigenvalues": r.eigenvalues.iter().map(|v| scalar_string(*v)).collect::<Vec<_>>(),
        "eigenvalues_within_pm1": r.eigenvalues_within_pm1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn parse_finite_input() {
        let text = r#"{
            "graph": {"colors": ["a", "b"], "edges": [["a", "b"]]},
            "poset": {"elements": [{"id": "x", "color": "a"}, {"id": "y", "color": "b"}],
                      "covers": [["x", "y"]]}
        }"#;
        match parse_input(text, ColorPolicy::RequireSurjective).unwrap() {
            LoadedInput::Finite(p) => {
                assert_eq!(p.len(), 2);
                assert_eq!(p.covers(), &[(0, 1)]);
            }
            _ => panic!("expected a finite poset"),
        }
    }

    #[test]
    fn parse_heap_input_and_frontier() {
        let text = r#"{
            "graph": {"colors": ["a"], "edges": []},
            "heap": {"cells": [{"id": "c0", "color": "a"}],
                     "covers": [{"from": "c0", "to": "c0", "shift": 1}]}
        }"#;
        let LoadedInput::Heap(h) = parse_input(text, ColorPolicy::RequireSurjective).unwrap()
        else {
            panic!("expected a heap");
        };
        let f = parse_frontier(&h, &json!({"frontier": {"c0": 3}})).unwrap();
        assert_eq!(f.frontier, vec![Layer::Fin(3)]);
        let f = parse_frontier(&h, &json!({"frontier": {"c0": "inf"}})).unwrap();
        assert_eq!(f.frontier, vec![Layer::PosInf]);
        assert!(parse_frontier(&h, &json!({"frontier": {}})).is_err());
    }

    #[test]
    fn lattice_round_trip() {
        let p = fixtures::fig2_poset();
        let l = SplitLattice::enumerate(&p, 10_000).unwrap();
        let v = lattice_json(&p, &l);
        let ideals = lattice_from_json(&p, &v).unwrap();
        assert_eq!(ideals, l.ideals());
    }

    #[test]
    fn dot_output_labels_edges() {
        let p = fixtures::fig2_poset();
        let l = SplitLattice::enumerate(&p, 10_000).unwrap();
        let dot = lattice_dot(&p, &l);
        assert!(dot.contains("label=\"a\""));
        assert!(dot.starts_with("digraph FI {"));
    }

    #[test]
    fn scalar_rendering() {
        assert_eq!(scalar_string(Scalar::new(4, 2)), "2");
        assert_eq!(scalar_string(Scalar::new(1, 2)), "1/2");
        assert_eq!(scalar_string(Scalar::new(-3, 1)), "-3");
    }
}
