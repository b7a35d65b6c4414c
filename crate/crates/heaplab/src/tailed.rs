//! A finite poset window extended by periodic ascending tails.
//!
//! This is the encoding committed to for the upsilon worked example: the
//! drawn poset has a finite bottom with two infinite ascending legs, so
//! it is neither finite nor Z-periodic. A tail attaches above one window
//! element and repeats a color cycle upward forever; a split places each
//! whole tail on the filter side or the ideal side.

use crate::error::{Error, Result};
use crate::graph::ColorId;
use crate::poset::{ElemId, FinitePoset};

#[derive(Debug, Clone)]
pub struct Tail {
    pub name: String,
    pub attach: ElemId,
    pub cycle: Vec<ColorId>,
}

#[derive(Debug, Clone)]
pub struct TailedPoset {
    window: FinitePoset,
    tails: Vec<Tail>,
}

/// Element of the infinite poset: a window element or the k-th element
/// of a tail (k counts upward from the attach point).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum TElem {
    Window(ElemId),
    Tail(usize, u64),
}

/// Which side of a split an entire tail lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailSide {
    Filter,
    Ideal,
}

#[derive(Debug, Clone)]
pub struct TailedSplit {
    pub in_ideal: Vec<bool>,
    pub tail_side: Vec<TailSide>,
}

impl TailedPoset {
    pub fn new(window: FinitePoset, tails: &[(&str, &str, &[&str])]) -> Result<TailedPoset> {
        let mut ts = Vec::new();
        for (name, attach, cycle) in tails {
            let attach = window.elem_id(attach)?;
            let cycle = cycle
                .iter()
                .map(|c| window.graph().color_id(c))
                .collect::<Result<Vec<_>>>()?;
            if cycle.is_empty() {
                return Err(Error::InvalidInput(format!(
                    "tail `{name}` has an empty cycle"
                )));
            }
            ts.push(Tail {
                name: name.to_string(),
                attach,
                cycle,
            });
        }
        Ok(TailedPoset { window, tails: ts })
    }

    pub fn window(&self) -> &FinitePoset {
        &self.window
    }

    pub fn tails(&self) -> &[Tail] {
        &self.tails
    }

    pub fn tail_index(&self, name: &str) -> Result<usize> {
        self.tails
            .iter()
            .position(|t| t.name == name)
            .ok_or_else(|| Error::InvalidInput(format!("unknown tail `{name}`")))
    }

    pub fn color_of(&self, e: TElem) -> ColorId {
        match e {
            TElem::Window(x) => self.window.color(x),
            TElem::Tail(t, k) => {
                let cycle = &self.tails[t].cycle;
                cycle[(k as usize) % cycle.len()]
            }
        }
    }

    /// Exact order on the infinite poset. Tail elements sit above their
    /// attach point and are comparable to nothing else outside their own
    /// tail.
    pub fn le(&self, x: TElem, y: TElem) -> bool {
        match (x, y) {
            (TElem::Window(a), TElem::Window(b)) => self.window.le(a, b),
            (TElem::Window(a), TElem::Tail(t, _)) => self.window.le(a, self.tails[t].attach),
            (TElem::Tail(_, _), TElem::Window(_)) => false,
            (TElem::Tail(t, j), TElem::Tail(s, k)) => t == s && j <= k,
        }
    }

    pub fn lt(&self, x: TElem, y: TElem) -> bool {
        x != y && self.le(x, y)
    }

    /// Build and validate a split from ideal element names and per-tail
    /// sides.
    pub fn split(&self, ideal: &[&str], sides: &[(&str, TailSide)]) -> Result<TailedSplit> {
        let mut in_ideal = vec![false; self.window.len()];
        for name in ideal {
            in_ideal[self.window.elem_id(name)?] = true;
        }
        let mut tail_side = vec![TailSide::Filter; self.tails.len()];
        for (name, side) in sides {
            tail_side[self.tail_index(name)?] = *side;
        }
        let s = TailedSplit {
            in_ideal,
            tail_side,
        };
        self.validate_split(&s)?;
        Ok(s)
    }

    pub fn validate_split(&self, s: &TailedSplit) -> Result<()> {
        for &(x, y) in self.window.covers() {
            if s.in_ideal[y] && !s.in_ideal[x] {
                return Err(Error::FrontierNotClosed(
                    self.window.name(x).to_string(),
                    self.window.name(y).to_string(),
                ));
            }
        }
        for (t, tail) in self.tails.iter().enumerate() {
            if s.tail_side[t] == TailSide::Ideal && !s.in_ideal[tail.attach] {
                return Err(Error::FrontierNotClosed(
                    self.window.name(tail.attach).to_string(),
                    tail.name.clone(),
                ));
            }
        }
        Ok(())
    }

    pub fn in_ideal(&self, s: &TailedSplit, e: TElem) -> bool {
        match e {
            TElem::Window(x) => s.in_ideal[x],
            TElem::Tail(t, _) => s.tail_side[t] == TailSide::Ideal,
        }
    }

    pub fn ideal_nonempty(&self, s: &TailedSplit, b: ColorId) -> bool {
        (0..self.window.len()).any(|x| s.in_ideal[x] && self.window.color(x) == b)
            || self
                .tails
                .iter()
                .enumerate()
                .any(|(t, tail)| s.tail_side[t] == TailSide::Ideal && tail.cycle.contains(&b))
    }

    pub fn filter_nonempty(&self, s: &TailedSplit, b: ColorId) -> bool {
        (0..self.window.len()).any(|x| !s.in_ideal[x] && self.window.color(x) == b)
            || self
                .tails
                .iter()
                .enumerate()
                .any(|(t, tail)| s.tail_side[t] == TailSide::Filter && tail.cycle.contains(&b))
    }

    /// The maximal element of color `b` inside the ideal, if any.
    pub fn ideal_color_max(&self, s: &TailedSplit, b: ColorId) -> Result<Extremum> {
        for (t, tail) in self.tails.iter().enumerate() {
            if s.tail_side[t] == TailSide::Ideal && tail.cycle.contains(&b) {
                return Ok(Extremum::NoExtremum);
            }
        }
        let members: Vec<ElemId> = (0..self.window.len())
            .filter(|&x| s.in_ideal[x] && self.window.color(x) == b)
            .collect();
        if members.is_empty() {
            return Ok(Extremum::Empty);
        }
        let maxima: Vec<ElemId> = members
            .iter()
            .copied()
            .filter(|&x| !members.iter().any(|&y| self.window.lt(x, y)))
            .collect();
        if maxima.len() > 1 {
            return Err(Error::EcViolation(format!(
                "color `{}` has {} maximal elements in the ideal",
                self.window.graph().name(b),
                maxima.len()
            )));
        }
        Ok(Extremum::At(TElem::Window(maxima[0])))
    }

    /// The minimal element of color `b` inside the filter, if any.
    pub fn filter_color_min(&self, s: &TailedSplit, b: ColorId) -> Result<Extremum> {
        let mut candidates: Vec<TElem> = (0..self.window.len())
            .filter(|&x| !s.in_ideal[x] && self.window.color(x) == b)
            .map(TElem::Window)
            .collect();
        for (t, tail) in self.tails.iter().enumerate() {
            if s.tail_side[t] == TailSide::Filter {
                if let Some(k) = tail.cycle.iter().position(|&c| c == b) {
                    candidates.push(TElem::Tail(t, k as u64));
                }
            }
        }
        if candidates.is_empty() {
            return Ok(Extremum::Empty);
        }
        let minima: Vec<TElem> = candidates
            .iter()
            .copied()
            .filter(|&x| !candidates.iter().any(|&y| self.lt(y, x)))
            .collect();
        if minima.len() > 1 {
            return Err(Error::EcViolation(format!(
                "color `{}` has {} minimal elements in the filter",
                self.window.graph().name(b),
                minima.len()
            )));
        }
        Ok(Extremum::At(minima[0]))
    }

    /// Elements of color `c` in the ideal strictly above `y`.
    pub fn ideal_count_above(&self, s: &TailedSplit, y: TElem, c: ColorId) -> Count {
        for (t, tail) in self.tails.iter().enumerate() {
            if s.tail_side[t] != TailSide::Ideal || !tail.cycle.contains(&c) {
                continue;
            }
            let above = match y {
                TElem::Window(x) => self.window.le(x, tail.attach),
                TElem::Tail(u, _) => u == t,
            };
            if above {
                return Count::Infinite;
            }
        }
        let members: Vec<TElem> = (0..self.window.len())
            .map(TElem::Window)
            .filter(|&z| self.in_ideal(s, z) && self.color_of(z) == c && self.lt(y, z))
            .collect();
        Count::Finite(members)
    }

    /// Elements of color `c` in the filter strictly below `y`.
    pub fn filter_count_below(&self, s: &TailedSplit, y: TElem, c: ColorId) -> Count {
        let mut members: Vec<TElem> = (0..self.window.len())
            .map(TElem::Window)
            .filter(|&z| !self.in_ideal(s, z) && self.color_of(z) == c && self.lt(z, y))
            .collect();
        if let TElem::Tail(t, k) = y {
            if s.tail_side[t] == TailSide::Filter {
                let cycle = &self.tails[t].cycle;
                for j in 0..k {
                    if cycle[(j as usize) % cycle.len()] == c {
                        members.push(TElem::Tail(t, j));
                    }
                }
            }
        }
        members.sort_unstable();
        Count::Finite(members)
    }
}

/// Status of `P_b` intersected with one side of a split.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extremum {
    /// The color does not appear on this side.
    Empty,
    /// The color appears but has no extreme element on this side.
    NoExtremum,
    At(TElem),
}

#[derive(Debug, Clone)]
pub enum Count {
    Finite(Vec<TElem>),
    Infinite,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fig3_split_validates() {
        let tp = fixtures::fig3_fixture();
        let s = fixtures::fig3_split(&tp);
        assert!(tp.validate_split(&s).is_ok());
    }

    #[test]
    fn tail_in_ideal_requires_attach() {
        let tp = fixtures::fig3_fixture();
        // Right tail in the ideal but f2 missing from it.
        let r = tp.split(
            &["g0", "d1", "e1", "f1", "d2", "e2"],
            &[("right", TailSide::Ideal)],
        );
        assert!(r.is_err());
    }

    #[test]
    fn order_rules() {
        let tp = fixtures::fig3_fixture();
        let g0 = TElem::Window(tp.window().elem_id("g0").unwrap());
        let a1 = TElem::Window(tp.window().elem_id("a1").unwrap());
        let d1 = TElem::Window(tp.window().elem_id("d1").unwrap());
        let left = tp.tail_index("left").unwrap();
        let right = tp.tail_index("right").unwrap();
        assert!(tp.lt(g0, a1));
        assert!(!tp.le(a1, d1) && !tp.le(d1, a1));
        assert!(tp.lt(g0, TElem::Tail(right, 5)));
        assert!(tp.lt(a1, TElem::Tail(left, 0)));
        assert!(!tp.le(a1, TElem::Tail(right, 0)));
        assert!(tp.lt(TElem::Tail(left, 1), TElem::Tail(left, 4)));
        assert!(!tp.le(TElem::Tail(left, 1), TElem::Tail(right, 4)));
        assert!(!tp.le(TElem::Tail(left, 0), a1));
    }
}
