//! Exact distinguishing numbers of finite graphs.
//!
//! Colorings are enumerated vertex by vertex as restricted-growth strings
//! (vertex `i` may use a color at most one above the largest color used so
//! far), which picks one representative per color relabeling. A partial
//! coloring is abandoned as soon as some nontrivial automorphism fixes
//! every uncolored vertex and preserves the colored ones: such an
//! automorphism survives every completion.

use thiserror::Error;

use crate::graph::search::AutomorphismSearch;
use crate::graph::{group_order, FiniteGraph, GraphError, VertexColoring, DEFAULT_GROUP_CAP};

pub const DEFAULT_COLORING_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DistinguishError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("search examined more than {budget} partial colorings")]
    BudgetExceeded { budget: u64 },
    #[error("palette size must be positive")]
    EmptyPalette,
    #[error("m and q must both be positive (got m={m}, q={q})")]
    ZeroParameter { m: u64, q: u64 },
    #[error("binomial coefficient overflowed while solving m={m}, q={q}")]
    Overflow { m: u64, q: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub group_cap: usize,
    /// Ceiling on search nodes (partial colorings) visited per palette size.
    pub coloring_budget: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            group_cap: DEFAULT_GROUP_CAP,
            coloring_budget: DEFAULT_COLORING_BUDGET,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinguishingResult {
    pub number: usize,
    pub witness: VertexColoring,
}

struct PaletteSearch<'g> {
    graph: &'g FiniteGraph,
    palette: usize,
    budget: u64,
    visited: u64,
    colors: Vec<usize>,
}

impl PaletteSearch<'_> {
    fn prefix_is_viable(&self) -> bool {
        let colored = self.colors.len();
        let keys: Vec<u64> = (0..self.graph.vertex_count())
            .map(|v| {
                if v < colored {
                    self.colors[v] as u64
                } else {
                    (self.palette + v) as u64
                }
            })
            .collect();
        AutomorphismSearch::new(self.graph, Some(&keys))
            .nontrivial()
            .is_none()
    }

    fn extend(&mut self, used: usize) -> Result<bool, DistinguishError> {
        if self.colors.len() == self.graph.vertex_count() {
            return Ok(true);
        }
        for color in 0..self.palette.min(used + 1) {
            self.visited += 1;
            if self.visited > self.budget {
                return Err(DistinguishError::BudgetExceeded {
                    budget: self.budget,
                });
            }
            self.colors.push(color);
            if self.prefix_is_viable() && self.extend(used.max(color + 1))? {
                return Ok(true);
            }
            self.colors.pop();
        }
        Ok(false)
    }
}

/// A distinguishing coloring using at most `palette` colors, or `None` if
/// the exhaustive search finds none.
pub fn find_distinguishing_coloring(
    graph: &FiniteGraph,
    palette: usize,
    limits: SearchLimits,
) -> Result<Option<VertexColoring>, DistinguishError> {
    if palette == 0 {
        return Err(DistinguishError::EmptyPalette);
    }
    group_order(graph, limits.group_cap)?;
    search_palette(graph, palette, limits.coloring_budget)
}

fn search_palette(
    graph: &FiniteGraph,
    palette: usize,
    budget: u64,
) -> Result<Option<VertexColoring>, DistinguishError> {
    let mut search = PaletteSearch {
        graph,
        palette,
        budget,
        visited: 0,
        colors: Vec::with_capacity(graph.vertex_count()),
    };
    Ok(search
        .extend(0)?
        .then(|| VertexColoring::new(search.colors)))
}

/// D(G): the least palette size admitting a distinguishing coloring,
/// tried in ascending order up to `vertex_count`.
pub fn distinguishing_number(
    graph: &FiniteGraph,
    limits: SearchLimits,
) -> Result<DistinguishingResult, DistinguishError> {
    group_order(graph, limits.group_cap)?;
    for palette in 1..=graph.vertex_count() {
        if let Some(witness) = search_palette(graph, palette, limits.coloring_budget)? {
            return Ok(DistinguishingResult {
                number: palette,
                witness,
            });
        }
    }
    unreachable!("the all-distinct coloring distinguishes every graph")
}

/// C(n, k), or `None` on overflow.
pub fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = acc.checked_mul(u128::from(n - i))? / u128::from(i + 1);
    }
    Some(acc)
}

/// Distinguishing number of `m` disjoint copies of `K_q`: the least `k >= q`
/// with `C(k, q) >= m`, so that each copy receives its own `q`-subset.
pub fn union_complete_distinguishing(m: u64, q: u64) -> Result<u64, DistinguishError> {
    if m == 0 || q == 0 {
        return Err(DistinguishError::ZeroParameter { m, q });
    }
    let mut k = q;
    loop {
        let count = binomial(k, q).ok_or(DistinguishError::Overflow { m, q })?;
        if count >= u128::from(m) {
            return Ok(k);
        }
        k = k.checked_add(1).ok_or(DistinguishError::Overflow { m, q })?;
    }
}

/// `m` disjoint copies of `K_q`, copy `i` on vertices `i*q..(i+1)*q`.
pub fn union_of_complete(m: usize, q: usize) -> FiniteGraph {
    FiniteGraph::disjoint_union(&vec![FiniteGraph::complete(q); m])
}
