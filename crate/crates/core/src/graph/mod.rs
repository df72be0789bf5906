//! Finite undirected graphs, vertex permutations and vertex colorings.
//!
//! The automorphism machinery lives in [`search`] (partition refinement with
//! backtracking) and is exposed through [`automorphism_group`], [`orbits`]
//! and [`is_distinguishing`].

mod group;
mod parse;
pub(crate) mod search;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

pub use group::{
    automorphism_group, colored_automorphism, group_order, is_distinguishing, orbits,
    Distinction, DEFAULT_GROUP_CAP,
};
pub use parse::{parse_coloring, parse_graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<GraphError>,
    },
    #[error("endpoint {vertex} out of range for {vertex_count} vertices")]
    EndpointOutOfRange { vertex: usize, vertex_count: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("automorphism group exceeds cap of {cap}")]
    GroupTooLarge { cap: usize },
    #[error("size mismatch: expected {expected} entries, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("images do not form a permutation of 0..{len}")]
    NotAPermutation { len: usize },
}

impl GraphError {
    fn at_line(self, line: usize) -> GraphError {
        GraphError::AtLine {
            line,
            source: Box::new(self),
        }
    }
}

/// Undirected simple graph on vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGraph {
    vertex_count: usize,
    adjacency: Vec<Vec<usize>>,
    matrix: Vec<bool>,
}

impl FiniteGraph {
    /// Builds a graph, rejecting self-loops, out-of-range endpoints and
    /// edges listed twice (in either orientation).
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut graph = FiniteGraph::empty(vertex_count);
        for (u, v) in edges {
            graph.add_edge(u, v)?;
        }
        Ok(graph)
    }

    pub fn empty(vertex_count: usize) -> Self {
        FiniteGraph {
            vertex_count,
            adjacency: vec![Vec::new(); vertex_count],
            matrix: vec![false; vertex_count * vertex_count],
        }
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.vertex_count;
        for vertex in [u, v] {
            if vertex >= n {
                return Err(GraphError::EndpointOutOfRange {
                    vertex,
                    vertex_count: n,
                });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        if self.matrix[u * n + v] {
            return Err(GraphError::DuplicateEdge {
                u: u.min(v),
                v: u.max(v),
            });
        }
        self.matrix[u * n + v] = true;
        self.matrix[v * n + u] = true;
        insert_sorted(&mut self.adjacency[u], v);
        insert_sorted(&mut self.adjacency[v], u);
        Ok(())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        FiniteGraph::new(n, edges).expect("complete graph edges are valid")
    }

    pub fn path(n: usize) -> Self {
        FiniteGraph::new(n, (1..n).map(|v| (v - 1, v))).expect("path edges are valid")
    }

    /// Cycle on `n >= 3` vertices; smaller `n` degrades to a path.
    pub fn cycle(n: usize) -> Self {
        if n < 3 {
            return FiniteGraph::path(n);
        }
        FiniteGraph::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are valid")
    }

    /// Disjoint union; the vertices of `parts[i]` follow those of `parts[i-1]`.
    pub fn disjoint_union(parts: &[FiniteGraph]) -> Self {
        let total = parts.iter().map(FiniteGraph::vertex_count).sum();
        let mut graph = FiniteGraph::empty(total);
        let mut offset = 0;
        for part in parts {
            for (u, v) in part.edges() {
                graph
                    .add_edge(u + offset, v + offset)
                    .expect("disjoint parts cannot collide");
            }
            offset += part.vertex_count();
        }
        graph
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count && v < self.vertex_count && self.matrix[u * self.vertex_count + v]
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// True iff `perm` maps edges onto edges (and hence non-edges onto non-edges).
    pub fn preserves(&self, perm: &Permutation) -> bool {
        perm.len() == self.vertex_count
            && self
                .edges()
                .all(|(u, v)| self.has_edge(perm.apply(u), perm.apply(v)))
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertex_count];
        let mut out = Vec::new();
        for root in 0..self.vertex_count {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut stack = vec![root];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &u in &self.adjacency[v] {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Renders the graph in the line-oriented graph file format.
    pub fn to_text(&self) -> String {
        let mut out = format!("p {}\n", self.vertex_count);
        for (u, v) in self.edges() {
            out.push_str(&format!("e {u} {v}\n"));
        }
        out
    }
}

fn insert_sorted(list: &mut Vec<usize>, value: usize) {
    let pos = list.partition_point(|&x| x < value);
    list.insert(pos, value);
}

/// Bijection on `0..len`, stored by images. Ordering is lexicographic on
/// the image sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, GraphError> {
        let len = images.len();
        let mut seen = vec![false; len];
        for &x in &images {
            if x >= len || seen[x] {
                return Err(GraphError::NotAPermutation { len });
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn identity(len: usize) -> Self {
        Permutation {
            images: (0..len).collect(),
        }
    }

    /// Transposition of `a` and `b` on `0..len`.
    pub fn transposition(len: usize, a: usize, b: usize) -> Result<Self, GraphError> {
        if a >= len || b >= len {
            return Err(GraphError::NotAPermutation { len });
        }
        let mut images: Vec<usize> = (0..len).collect();
        images.swap(a, b);
        Ok(Permutation { images })
    }

    /// Builds a permutation from disjoint cycles; points not mentioned are fixed.
    pub fn from_cycles(len: usize, cycles: &[Vec<usize>]) -> Result<Self, GraphError> {
        let mut images: Vec<usize> = (0..len).collect();
        let mut touched = vec![false; len];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= len || touched[x] {
                    return Err(GraphError::NotAPermutation { len });
                }
                touched[x] = true;
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    pub fn is_involution(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| self.images[x] == i)
    }

    /// Points moved by the permutation.
    pub fn support(&self) -> BTreeSet<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, x)| i != *x)
            .map(|(i, _)| i)
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in &self.images {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Assignment of a color id to every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexColoring {
    colors: Vec<usize>,
}

impl VertexColoring {
    pub fn new(colors: Vec<usize>) -> Self {
        VertexColoring { colors }
    }

    pub fn constant(vertex_count: usize) -> Self {
        VertexColoring {
            colors: vec![0; vertex_count],
        }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Smallest `k` such that all ids lie in `0..k`.
    pub fn palette_size(&self) -> usize {
        self.colors.iter().max().map_or(0, |&m| m + 1)
    }

    pub fn distinct_colors(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }

    pub fn is_preserved_by(&self, perm: &Permutation) -> bool {
        (0..self.colors.len()).all(|x| self.colors[x] == self.colors[perm.apply(x)])
    }

    /// Renders as `v <vertex> <color>` lines.
    pub fn to_text(&self) -> String {
        self.colors
            .iter()
            .enumerate()
            .map(|(v, c)| format!("v {v} {c}\n"))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            FiniteGraph::new(2, [(0, 0)]),
            Err(GraphError::SelfLoop { vertex: 0 })
        );
        assert_eq!(
            FiniteGraph::new(2, [(0, 2)]),
            Err(GraphError::EndpointOutOfRange {
                vertex: 2,
                vertex_count: 2
            })
        );
        assert_eq!(
            FiniteGraph::new(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge { u: 0, v: 1 })
        );
    }

    #[test]
    fn standard_families() {
        assert_eq!(FiniteGraph::complete(4).edge_count(), 6);
        assert_eq!(FiniteGraph::cycle(5).edge_count(), 5);
        assert_eq!(FiniteGraph::path(4).edge_count(), 3);
        let u = FiniteGraph::disjoint_union(&[FiniteGraph::complete(2), FiniteGraph::complete(3)]);
        assert_eq!(u.vertex_count(), 5);
        assert_eq!(u.components(), vec![vec![0, 1], vec![2, 3, 4]]);
    }

    #[test]
    fn permutation_algebra() {
        let p = Permutation::new(vec![1, 2, 0]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(p.compose(&p).images(), &[2, 0, 1]);
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        let c = Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        assert!(c.is_involution());
        assert_eq!(c.images(), &[1, 0, 3, 2]);
        assert!(Permutation::from_cycles(3, &[vec![0, 1], vec![1, 2]]).is_err());
    }
}
