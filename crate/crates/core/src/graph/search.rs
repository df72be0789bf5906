//! Automorphism search by equitable partition refinement and backtracking.
//!
//! A node of the search tree is a pair of ordered partitions: the source
//! side individualizes vertices along a fixed path (the least vertex of the
//! first non-singleton cell), the target side tries every vertex of the
//! matching cell. Both sides are refined together; a mismatch in the split
//! signatures prunes the branch. At a discrete leaf the cell-by-cell
//! correspondence is a candidate bijection, kept if it preserves edges.

use super::{FiniteGraph, GraphError, Permutation};

type Partition = Vec<Vec<usize>>;

pub(crate) struct AutomorphismSearch<'g> {
    graph: &'g FiniteGraph,
    initial: Partition,
}

impl<'g> AutomorphismSearch<'g> {
    /// Search over automorphisms preserving `keys` (vertex invariants such
    /// as colors); `None` means the plain graph.
    pub(crate) fn new(graph: &'g FiniteGraph, keys: Option<&[u64]>) -> Self {
        let n = graph.vertex_count();
        let mut order: Vec<usize> = (0..n).collect();
        let initial = match keys {
            None => vec![order],
            Some(keys) => {
                order.sort_by_key(|&v| (keys[v], v));
                let mut cells: Partition = Vec::new();
                let mut last = None;
                for v in order {
                    if last != Some(keys[v]) {
                        cells.push(Vec::new());
                        last = Some(keys[v]);
                    }
                    cells.last_mut().expect("cell pushed").push(v);
                }
                cells
            }
        };
        AutomorphismSearch { graph, initial }
    }

    fn root(&self) -> Partition {
        let mut src = self.initial.clone();
        let mut tgt = self.initial.clone();
        let ok = self.refine_pair(&mut src, &mut tgt);
        debug_assert!(ok && src == tgt);
        src
    }

    fn neighbor_counts(&self, cell: &[usize], counts: &mut [u32]) {
        counts.iter_mut().for_each(|c| *c = 0);
        for &v in cell {
            for &u in self.graph.neighbors(v) {
                counts[u] += 1;
            }
        }
    }

    /// Refines both partitions to equitability with identical operations.
    /// Returns false as soon as the two sides split differently.
    fn refine_pair(&self, src: &mut Partition, tgt: &mut Partition) -> bool {
        let n = self.graph.vertex_count();
        let mut src_counts = vec![0u32; n];
        let mut tgt_counts = vec![0u32; n];
        let mut splitter = 0;
        while splitter < src.len() {
            self.neighbor_counts(&src[splitter], &mut src_counts);
            self.neighbor_counts(&tgt[splitter], &mut tgt_counts);
            let mut next_src = Vec::with_capacity(src.len());
            let mut next_tgt = Vec::with_capacity(tgt.len());
            let mut split = false;
            for (s_cell, t_cell) in src.iter().zip(tgt.iter()) {
                let s_parts = split_cell(s_cell, &src_counts);
                let t_parts = split_cell(t_cell, &tgt_counts);
                if s_parts.len() != t_parts.len()
                    || s_parts
                        .iter()
                        .zip(&t_parts)
                        .any(|(a, b)| a.0 != b.0 || a.1.len() != b.1.len())
                {
                    return false;
                }
                split |= s_parts.len() > 1;
                next_src.extend(s_parts.into_iter().map(|p| p.1));
                next_tgt.extend(t_parts.into_iter().map(|p| p.1));
            }
            if split {
                *src = next_src;
                *tgt = next_tgt;
                splitter = 0;
            } else {
                splitter += 1;
            }
        }
        true
    }

    fn leaf(&self, src: &Partition, tgt: &Partition) -> Option<Permutation> {
        let mut images = vec![0; self.graph.vertex_count()];
        for (s, t) in src.iter().zip(tgt) {
            images[s[0]] = t[0];
        }
        let perm = Permutation::from_images_unchecked(images);
        self.graph.preserves(&perm).then_some(perm)
    }

    /// Children of a node: for each target candidate, the refined pair.
    fn children<'a>(
        &'a self,
        src: &'a Partition,
        tgt: &'a Partition,
        cell: usize,
    ) -> impl Iterator<Item = (Partition, Partition)> + 'a {
        let v = *src[cell].iter().min().expect("nonempty cell");
        let mut candidates = tgt[cell].clone();
        candidates.sort_unstable();
        candidates.into_iter().filter_map(move |w| {
            let mut s = individualize(src, cell, v);
            let mut t = individualize(tgt, cell, w);
            self.refine_pair(&mut s, &mut t).then_some((s, t))
        })
    }

    fn collect_all(
        &self,
        src: &Partition,
        tgt: &Partition,
        cap: usize,
        out: &mut Vec<Permutation>,
    ) -> Result<(), GraphError> {
        match first_nonsingleton(src) {
            None => {
                if let Some(perm) = self.leaf(src, tgt) {
                    out.push(perm);
                    if out.len() > cap {
                        return Err(GraphError::GroupTooLarge { cap });
                    }
                }
                Ok(())
            }
            Some(cell) => {
                for (s, t) in self.children(src, tgt, cell) {
                    self.collect_all(&s, &t, cap, out)?;
                }
                Ok(())
            }
        }
    }

    fn find_one(&self, src: &Partition, tgt: &Partition) -> Option<Permutation> {
        match first_nonsingleton(src) {
            None => self.leaf(src, tgt),
            Some(cell) => self
                .children(src, tgt, cell)
                .find_map(|(s, t)| self.find_one(&s, &t)),
        }
    }

    /// Every automorphism, unsorted; errors once more than `cap` are found.
    pub(crate) fn enumerate(&self, cap: usize) -> Result<Vec<Permutation>, GraphError> {
        let root = self.root();
        let mut out = Vec::new();
        self.collect_all(&root, &root, cap, &mut out)?;
        Ok(out)
    }

    /// Walks the first path; at each level reports, for every target
    /// candidate `w` of the individualized vertex, one automorphism fixing
    /// the earlier path vertices and sending it to `w`, if any exists.
    fn walk_stabilizer_chain<F>(&self, mut visit: F) -> bool
    where
        F: FnMut(usize, usize, Option<Permutation>) -> bool,
    {
        let mut node = self.root();
        while let Some(cell) = first_nonsingleton(&node) {
            let v = *node[cell].iter().min().expect("nonempty cell");
            let mut candidates = node[cell].clone();
            candidates.sort_unstable();
            for w in candidates {
                let found = if w == v {
                    None
                } else {
                    let mut s = individualize(&node, cell, v);
                    let mut t = individualize(&node, cell, w);
                    if self.refine_pair(&mut s, &mut t) {
                        self.find_one(&s, &t)
                    } else {
                        None
                    }
                };
                if !visit(v, w, found) {
                    return false;
                }
            }
            let mut s = individualize(&node, cell, v);
            let mut t = s.clone();
            let ok = self.refine_pair(&mut s, &mut t);
            debug_assert!(ok);
            node = s;
        }
        true
    }

    /// Group order via orbit sizes along the stabilizer chain of the first
    /// path; errors once the running product exceeds `cap`.
    pub(crate) fn order(&self, cap: usize) -> Result<u128, GraphError> {
        let mut order: u128 = 1;
        let mut orbit: u128 = 0;
        let mut current = None;
        let mut exceeded = false;
        let finished = self.walk_stabilizer_chain(|v, w, found| {
            if current != Some(v) {
                order *= orbit.max(1);
                orbit = 0;
                current = Some(v);
            }
            if v == w || found.is_some() {
                orbit += 1;
            }
            if order * orbit.max(1) > cap as u128 {
                exceeded = true;
                return false;
            }
            true
        });
        if exceeded || !finished {
            return Err(GraphError::GroupTooLarge { cap });
        }
        Ok(order * orbit.max(1))
    }

    /// Some non-identity automorphism, if the group is nontrivial.
    pub(crate) fn nontrivial(&self) -> Option<Permutation> {
        let mut witness = None;
        self.walk_stabilizer_chain(|_, _, found| {
            if found.is_some() {
                witness = found;
                return false;
            }
            true
        });
        witness
    }
}

fn first_nonsingleton(partition: &Partition) -> Option<usize> {
    partition.iter().position(|cell| cell.len() > 1)
}

fn individualize(partition: &Partition, cell: usize, v: usize) -> Partition {
    let mut out = Vec::with_capacity(partition.len() + 1);
    out.extend_from_slice(&partition[..cell]);
    out.push(vec![v]);
    out.push(partition[cell].iter().copied().filter(|&x| x != v).collect());
    out.extend_from_slice(&partition[cell + 1..]);
    out
}

/// Splits a cell by neighbor count, groups in ascending count order,
/// keeping the relative order of vertices.
fn split_cell(cell: &[usize], counts: &[u32]) -> Vec<(u32, Vec<usize>)> {
    let mut keys: Vec<u32> = cell.iter().map(|&v| counts[v]).collect();
    keys.sort_unstable();
    keys.dedup();
    keys.into_iter()
        .map(|k| (k, cell.iter().copied().filter(|&v| counts[v] == k).collect()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equitable_refinement_of_path() {
        let g = FiniteGraph::path(5);
        let search = AutomorphismSearch::new(&g, None);
        // endpoints, then next-to-endpoints, then center
        let root = search.root();
        let mut cells: Vec<Vec<usize>> = root
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        cells.sort();
        assert_eq!(cells, vec![vec![0, 4], vec![1, 3], vec![2]]);
    }

    #[test]
    fn orders_of_small_groups() {
        let cases = [
            (FiniteGraph::complete(4), 24),
            (FiniteGraph::cycle(6), 12),
            (FiniteGraph::path(3), 2),
            (FiniteGraph::empty(4), 24),
        ];
        for (g, expected) in cases {
            let search = AutomorphismSearch::new(&g, None);
            assert_eq!(search.order(usize::MAX).unwrap(), expected);
            assert_eq!(search.enumerate(usize::MAX).unwrap().len() as u128, expected);
        }
    }

    #[test]
    fn colored_search_respects_keys() {
        let g = FiniteGraph::complete(3);
        let search = AutomorphismSearch::new(&g, Some(&[0, 0, 1]));
        let found = search.nontrivial().unwrap();
        assert_eq!(found.images(), &[1, 0, 2]);
        let rigid = AutomorphismSearch::new(&g, Some(&[0, 1, 2]));
        assert!(rigid.nontrivial().is_none());
    }

    #[test]
    fn order_respects_cap() {
        let g = FiniteGraph::complete(6);
        let search = AutomorphismSearch::new(&g, None);
        assert_eq!(
            search.order(100),
            Err(GraphError::GroupTooLarge { cap: 100 })
        );
        assert_eq!(search.order(720).unwrap(), 720);
    }
}
