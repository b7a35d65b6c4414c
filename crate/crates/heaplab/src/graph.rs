//! The fixed finite simple graph of colors and its generalized Cartan values.

use crate::error::{Error, Result};

/// Index of a color in its [`ColorGraph`], following input order.
pub type ColorId = usize;

/// A finite simple graph whose vertices are the colors.
///
/// Colors keep their declared order, so every enumeration over them is
/// deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorGraph {
    names: Vec<String>,
    adj: Vec<Vec<bool>>,
    edges: Vec<(ColorId, ColorId)>,
}

impl ColorGraph {
    /// Build a color graph from names and undirected edges.
    ///
    /// Rejects loops, duplicate edges, duplicate names, and edges on
    /// undeclared colors.
    pub fn new<S: AsRef<str>>(colors: &[S], edges: &[(S, S)]) -> Result<Self> {
        let mut names = Vec::with_capacity(colors.len());
        for c in colors {
            let c = c.as_ref();
            if names.iter().any(|n| n == c) {
                return Err(Error::DuplicateColor(c.to_string()));
            }
            names.push(c.to_string());
        }
        let n = names.len();
        let mut adj = vec![vec![false; n]; n];
        let mut edge_list = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let ia = names
                .iter()
                .position(|x| x == a)
                .ok_or_else(|| Error::UnknownColor(a.to_string()))?;
            let ib = names
                .iter()
                .position(|x| x == b)
                .ok_or_else(|| Error::UnknownColor(b.to_string()))?;
            if ia == ib {
                return Err(Error::LoopEdge(a.to_string()));
            }
            if adj[ia][ib] {
                return Err(Error::DuplicateEdge(a.to_string(), b.to_string()));
            }
            adj[ia][ib] = true;
            adj[ib][ia] = true;
            edge_list.push((ia.min(ib), ia.max(ib)));
        }
        edge_list.sort_unstable();
        Ok(ColorGraph {
            names,
            adj,
            edges: edge_list,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, c: ColorId) -> &str {
        &self.names[c]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn edges(&self) -> &[(ColorId, ColorId)] {
        &self.edges
    }

    pub fn color_id(&self, name: &str) -> Result<ColorId> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownColor(name.to_string()))
    }

    /// `a ~ b`: the two colors are joined by an edge.
    pub fn adjacent(&self, a: ColorId, b: ColorId) -> bool {
        self.adj[a][b]
    }

    /// `a` and `b` are distant: distinct and not adjacent.
    pub fn distant(&self, a: ColorId, b: ColorId) -> bool {
        a != b && !self.adj[a][b]
    }

    /// Neighbors of `b` in declared color order.
    pub fn neighbors(&self, b: ColorId) -> impl Iterator<Item = ColorId> + '_ {
        (0..self.len()).filter(move |&c| self.adj[b][c])
    }

    pub fn degree(&self, b: ColorId) -> usize {
        self.neighbors(b).count()
    }

    /// Generalized Cartan matrix entry: 2 on the diagonal, -1 for
    /// adjacent colors, 0 for distant ones.
    pub fn theta(&self, a: ColorId, b: ColorId) -> i64 {
        if a == b {
            2
        } else if self.adj[a][b] {
            -1
        } else {
            0
        }
    }

    /// Restrict the graph to the given colors, reindexing them in
    /// declared order. Used by the restrict-colors escape hatch.
    pub fn restrict(&self, keep: &[bool]) -> (ColorGraph, Vec<Option<ColorId>>) {
        let mut remap = vec![None; self.len()];
        let mut names = Vec::new();
        for (c, &k) in keep.iter().enumerate() {
            if k {
                remap[c] = Some(names.len());
                names.push(self.names[c].clone());
            }
        }
        let n = names.len();
        let mut adj = vec![vec![false; n]; n];
        let mut edges = Vec::new();
        for &(a, b) in &self.edges {
            if let (Some(a2), Some(b2)) = (remap[a], remap[b]) {
                adj[a2][b2] = true;
                adj[b2][a2] = true;
                edges.push((a2.min(b2), a2.max(b2)));
            }
        }
        edges.sort_unstable();
        (ColorGraph { names, adj, edges }, remap)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d5() -> ColorGraph {
        // D5: b-a, c-a, a-d, d-g
        ColorGraph::new(
            &["a", "b", "c", "d", "g"],
            &[("b", "a"), ("c", "a"), ("a", "d"), ("d", "g")],
        )
        .unwrap()
    }

    #[test]
    fn theta_values() {
        let g = d5();
        let a = g.color_id("a").unwrap();
        let b = g.color_id("b").unwrap();
        let d = g.color_id("d").unwrap();
        let gg = g.color_id("g").unwrap();
        assert_eq!(g.theta(a, a), 2);
        assert_eq!(g.theta(a, d), -1);
        assert_eq!(g.theta(b, gg), 0);
    }

    #[test]
    fn theta_symmetric_and_row_sums() {
        let g = d5();
        for a in 0..g.len() {
            for b in 0..g.len() {
                assert_eq!(g.theta(a, b), g.theta(b, a));
            }
        }
        // Column sum of [theta_ab] over a is 2 - deg(b).
        for b in 0..g.len() {
            let sum: i64 = (0..g.len()).map(|a| g.theta(a, b)).sum();
            assert_eq!(sum, 2 - g.degree(b) as i64);
        }
    }

    #[test]
    fn rejects_bad_graphs() {
        assert!(ColorGraph::new(&["a"], &[("a", "a")]).is_err());
        assert!(ColorGraph::new(&["a", "b"], &[("a", "b"), ("b", "a")]).is_err());
        assert!(ColorGraph::new(&["a", "a"], &[]).is_err());
        assert!(ColorGraph::new(&["a"], &[("a", "z")]).is_err());
    }
}
