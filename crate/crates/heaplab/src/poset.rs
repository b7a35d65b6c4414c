//! Finite colored posets: construction, validation, and order queries.

use crate::error::{Error, Result};
use crate::graph::{ColorGraph, ColorId};

/// Index of an element in its poset, following input order.
pub type ElemId = usize;

/// Row-major bit matrix used for the reflexive-transitive closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BitMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        BitMatrix {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    /// row(i) |= row(j)
    pub fn or_row(&mut self, i: usize, j: usize) {
        for w in 0..self.words {
            let v = self.bits[j * self.words + w];
            self.bits[i * self.words + w] |= v;
        }
    }
}

/// A finite poset colored by a [`ColorGraph`].
///
/// Covers are stored transitively reduced (the Hasse diagram); the
/// reflexive-transitive closure is precomputed at build time and the
/// structure is immutable afterwards.
#[derive(Debug, Clone)]
pub struct FinitePoset {
    graph: ColorGraph,
    names: Vec<String>,
    color: Vec<ColorId>,
    covers: Vec<(ElemId, ElemId)>,
    up_covers: Vec<Vec<ElemId>>,
    down_covers: Vec<Vec<ElemId>>,
    le: BitMatrix,
}

/// What to do when the coloring misses some colors of the graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColorPolicy {
    /// Reject non-surjective colorings (the default; the theory assumes
    /// kappa is onto).
    RequireSurjective,
    /// Shrink the graph to the image of kappa.
    RestrictColors,
}

impl FinitePoset {
    /// Build and validate a poset from named elements and cover pairs.
    ///
    /// Covers `(x, y)` mean `x` is covered by `y`. The cover list must be
    /// acyclic and transitively reduced; redundant covers are rejected
    /// rather than silently dropped so that data errors surface.
    pub fn build<S: AsRef<str>>(
        graph: ColorGraph,
        elements: &[(S, S)],
        covers: &[(S, S)],
        policy: ColorPolicy,
    ) -> Result<FinitePoset> {
        let mut names: Vec<String> = Vec::with_capacity(elements.len());
        let mut color: Vec<ColorId> = Vec::with_capacity(elements.len());
        for (id, c) in elements {
            let id = id.as_ref();
            if names.iter().any(|n| n == id) {
                return Err(Error::DuplicateElement(id.to_string()));
            }
            names.push(id.to_string());
            color.push(graph.color_id(c.as_ref())?);
        }
        let n = names.len();
        let find = |id: &str| -> Result<ElemId> {
            names
                .iter()
                .position(|x| x == id)
                .ok_or_else(|| Error::UnknownElement(id.to_string()))
        };
        let mut cover_ids = Vec::with_capacity(covers.len());
        for (x, y) in covers {
            let (x, y) = (find(x.as_ref())?, find(y.as_ref())?);
            if cover_ids.contains(&(x, y)) {
                return Err(Error::DuplicateCover(names[x].clone(), names[y].clone()));
            }
            if x == y {
                return Err(Error::CoverCycle(names[x].clone()));
            }
            cover_ids.push((x, y));
        }
        cover_ids.sort_unstable();

        let mut up_covers = vec![Vec::new(); n];
        let mut down_covers = vec![Vec::new(); n];
        for &(x, y) in &cover_ids {
            up_covers[x].push(y);
            down_covers[y].push(x);
        }

        // Topological order; a leftover node means a cycle.
        let mut indeg: Vec<usize> = down_covers.iter().map(|d| d.len()).collect();
        let mut queue: Vec<ElemId> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            topo.push(x);
            for &y in &up_covers[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    queue.push(y);
                }
            }
        }
        if topo.len() != n {
            let stuck = (0..n).find(|&i| indeg[i] > 0).unwrap();
            return Err(Error::CoverCycle(names[stuck].clone()));
        }

        // Reflexive-transitive closure in reverse topological order.
        let mut le = BitMatrix::new(n);
        for &x in topo.iter().rev() {
            le.set(x, x);
            let ups = up_covers[x].clone();
            for y in ups {
                le.or_row(x, y);
            }
        }

        // Every cover must be irredundant: nothing strictly between.
        for &(x, y) in &cover_ids {
            for z in 0..n {
                if z != x && z != y && le.get(x, z) && le.get(z, y) {
                    return Err(Error::RedundantCover(names[x].clone(), names[y].clone()));
                }
            }
        }

        let mut graph = graph;
        let used: Vec<bool> = {
            let mut u = vec![false; graph.len()];
            for &c in &color {
                u[c] = true;
            }
            u
        };
        if used.iter().any(|&u| !u) {
            match policy {
                ColorPolicy::RequireSurjective => {
                    let missing = used.iter().position(|&u| !u).unwrap();
                    return Err(Error::NonSurjectiveColoring(
                        graph.name(missing).to_string(),
                    ));
                }
                ColorPolicy::RestrictColors => {
                    let (g2, remap) = graph.restrict(&used);
                    color = color.iter().map(|&c| remap[c].unwrap()).collect();
                    graph = g2;
                }
            }
        }

        Ok(FinitePoset {
            graph,
            names,
            color,
            covers: cover_ids,
            up_covers,
            down_covers,
            le,
        })
    }

    pub fn graph(&self) -> &ColorGraph {
        &self.graph
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, x: ElemId) -> &str {
        &self.names[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn elem_id(&self, name: &str) -> Result<ElemId> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn color(&self, x: ElemId) -> ColorId {
        self.color[x]
    }

    pub fn covers(&self) -> &[(ElemId, ElemId)] {
        &self.covers
    }

    pub fn up_covers(&self, x: ElemId) -> &[ElemId] {
        &self.up_covers[x]
    }

    pub fn down_covers(&self, x: ElemId) -> &[ElemId] {
        &self.down_covers[x]
    }

    /// x <= y in the reflexive-transitive closure of the covers.
    pub fn le(&self, x: ElemId, y: ElemId) -> bool {
        self.le.get(x, y)
    }

    pub fn lt(&self, x: ElemId, y: ElemId) -> bool {
        x != y && self.le.get(x, y)
    }

    pub fn comparable(&self, x: ElemId, y: ElemId) -> bool {
        self.le(x, y) || self.le(y, x)
    }

    /// Elements strictly between x and y. Errors unless x < y.
    pub fn open_interval(&self, x: ElemId, y: ElemId) -> Result<Vec<ElemId>> {
        if !self.lt(x, y) {
            return Err(Error::Refused(format!(
                "open interval requires {} < {}",
                self.names[x], self.names[y]
            )));
        }
        Ok((0..self.len())
            .filter(|&z| z != x && z != y && self.le(x, z) && self.le(z, y))
            .collect())
    }

    /// Elements of the given color, in canonical order.
    pub fn elements_of_color(&self, a: ColorId) -> Vec<ElemId> {
        (0..self.len()).filter(|&x| self.color[x] == a).collect()
    }

    /// All pairs x < y of color `a` with no element of color `a` strictly
    /// between them.
    pub fn consecutive_pairs(&self, a: ColorId) -> Vec<(ElemId, ElemId)> {
        let of_color = self.elements_of_color(a);
        let mut out = Vec::new();
        for &x in &of_color {
            for &y in &of_color {
                if !self.lt(x, y) {
                    continue;
                }
                let blocked = of_color
                    .iter()
                    .any(|&z| z != x && z != y && self.lt(x, z) && self.lt(z, y));
                if !blocked {
                    out.push((x, y));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// The order dual: all covers reversed, same elements and colors.
    pub fn dual(&self) -> FinitePoset {
        let elements: Vec<(String, String)> = self
            .names
            .iter()
            .zip(&self.color)
            .map(|(n, &c)| (n.clone(), self.graph.name(c).to_string()))
            .collect();
        let covers: Vec<(String, String)> = self
            .covers
            .iter()
            .map(|&(x, y)| (self.names[y].clone(), self.names[x].clone()))
            .collect();
        FinitePoset::build(
            self.graph.clone(),
            &elements,
            &covers,
            ColorPolicy::RequireSurjective,
        )
        .expect("dual of a valid poset is valid")
    }
}
