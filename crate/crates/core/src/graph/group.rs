use super::search::AutomorphismSearch;
use super::{FiniteGraph, GraphError, Permutation, VertexColoring};

pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

/// Every automorphism of `graph`, identity included, sorted
/// lexicographically by images. Fails instead of truncating when the
/// group has more than `cap` elements.
pub fn automorphism_group(graph: &FiniteGraph, cap: usize) -> Result<Vec<Permutation>, GraphError> {
    if graph.vertex_count() == 0 {
        return Err(GraphError::EmptyGraph);
    }
    let search = AutomorphismSearch::new(graph, None);
    search.order(cap)?;
    let mut auts = search.enumerate(cap)?;
    auts.sort_unstable();
    Ok(auts)
}

/// |Aut(graph)| without materializing the group.
pub fn group_order(graph: &FiniteGraph, cap: usize) -> Result<u128, GraphError> {
    if graph.vertex_count() == 0 {
        return Err(GraphError::EmptyGraph);
    }
    AutomorphismSearch::new(graph, None).order(cap)
}

/// A non-identity automorphism preserving `coloring`, if one exists.
pub fn colored_automorphism(
    graph: &FiniteGraph,
    coloring: &VertexColoring,
) -> Result<Option<Permutation>, GraphError> {
    check_size(graph, coloring)?;
    let keys: Vec<u64> = coloring.colors().iter().map(|&c| c as u64).collect();
    Ok(AutomorphismSearch::new(graph, Some(&keys)).nontrivial())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Distinction {
    Distinguishing,
    /// A nontrivial automorphism preserving every color.
    Preserved(Permutation),
}

impl Distinction {
    pub fn holds(&self) -> bool {
        matches!(self, Distinction::Distinguishing)
    }
}

/// Checks the coloring against an explicit automorphism list; the first
/// non-identity color-preserving element is returned as witness.
pub fn is_distinguishing(
    graph: &FiniteGraph,
    coloring: &VertexColoring,
    auts: &[Permutation],
) -> Result<Distinction, GraphError> {
    check_size(graph, coloring)?;
    for perm in auts {
        if perm.len() != graph.vertex_count() {
            return Err(GraphError::SizeMismatch {
                expected: graph.vertex_count(),
                got: perm.len(),
            });
        }
        if !perm.is_identity() && coloring.is_preserved_by(perm) {
            return Ok(Distinction::Preserved(perm.clone()));
        }
    }
    Ok(Distinction::Distinguishing)
}

/// Orbits of the group generated by `auts`, each sorted, ordered by least
/// vertex (the orbit representative).
pub fn orbits(graph: &FiniteGraph, auts: &[Permutation]) -> Result<Vec<Vec<usize>>, GraphError> {
    let n = graph.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for perm in auts {
        if perm.len() != n {
            return Err(GraphError::SizeMismatch {
                expected: n,
                got: perm.len(),
            });
        }
        for x in 0..n {
            let (a, b) = (find(&mut parent, x), find(&mut parent, perm.apply(x)));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for x in 0..n {
        let root = find(&mut parent, x);
        if slot[root] == usize::MAX {
            slot[root] = out.len();
            out.push(Vec::new());
        }
        out[slot[root]].push(x);
    }
    Ok(out)
}

fn check_size(graph: &FiniteGraph, coloring: &VertexColoring) -> Result<(), GraphError> {
    if coloring.len() != graph.vertex_count() {
        return Err(GraphError::SizeMismatch {
            expected: graph.vertex_count(),
            got: coloring.len(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Path 0-1-2-3-4 with a vertex 5 joined to both 1 and 2.
    fn rigid6() -> FiniteGraph {
        FiniteGraph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 5)]).unwrap()
    }

    #[test]
    fn pendant_pair_is_not_rigid() {
        // leaves 0 and 5 both hang off vertex 1
        let g = FiniteGraph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5)]).unwrap();
        let oracle = brute_force_auts(&g);
        assert_eq!(oracle.len(), 2);
        assert_eq!(automorphism_group(&g, DEFAULT_GROUP_CAP).unwrap(), oracle);
        assert_eq!(oracle[1].images(), &[5, 1, 2, 3, 4, 0]);
    }

    fn brute_force_auts(g: &FiniteGraph) -> Vec<Permutation> {
        fn rec(g: &FiniteGraph, prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            let n = g.vertex_count();
            if prefix.len() == n {
                let p = Permutation::new(prefix.clone()).unwrap();
                let ok = (0..n).all(|u| (0..n).all(|v| g.has_edge(u, v) == g.has_edge(p.apply(u), p.apply(v))));
                if ok {
                    out.push(p);
                }
                return;
            }
            for x in 0..n {
                if !used[x] {
                    used[x] = true;
                    prefix.push(x);
                    rec(g, prefix, used, out);
                    prefix.pop();
                    used[x] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(g, &mut Vec::new(), &mut vec![false; g.vertex_count()], &mut out);
        out
    }

    #[test]
    fn triangle_has_all_six() {
        let auts = automorphism_group(&FiniteGraph::complete(3), DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(auts.len(), 6);
        assert!(auts[0].is_identity());
        assert!(auts.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn path_has_reversal_only() {
        let auts = automorphism_group(&FiniteGraph::path(3), DEFAULT_GROUP_CAP).unwrap();
        let images: Vec<&[usize]> = auts.iter().map(Permutation::images).collect();
        assert_eq!(images, vec![&[0, 1, 2][..], &[2, 1, 0][..]]);
    }

    #[test]
    fn four_cycle_matches_brute_force() {
        let g = FiniteGraph::cycle(4);
        let auts = automorphism_group(&g, DEFAULT_GROUP_CAP).unwrap();
        let oracle = brute_force_auts(&g);
        assert_eq!(oracle.len(), 8);
        assert_eq!(auts, oracle);
    }

    #[test]
    fn cap_is_an_error() {
        assert_eq!(
            automorphism_group(&FiniteGraph::complete(5), 100),
            Err(GraphError::GroupTooLarge { cap: 100 })
        );
        assert_eq!(
            automorphism_group(&FiniteGraph::empty(0), 10),
            Err(GraphError::EmptyGraph)
        );
    }

    #[test]
    fn distinguishing_checks() {
        let k3 = FiniteGraph::complete(3);
        let auts = automorphism_group(&k3, DEFAULT_GROUP_CAP).unwrap();
        let all_distinct = VertexColoring::new(vec![0, 1, 2]);
        assert!(is_distinguishing(&k3, &all_distinct, &auts).unwrap().holds());
        let twin = VertexColoring::new(vec![0, 0, 1]);
        assert_eq!(
            is_distinguishing(&k3, &twin, &auts).unwrap(),
            Distinction::Preserved(Permutation::new(vec![1, 0, 2]).unwrap())
        );
        assert!(matches!(
            is_distinguishing(&k3, &VertexColoring::new(vec![0, 1]), &auts),
            Err(GraphError::SizeMismatch { expected: 3, got: 2 })
        ));
    }

    #[test]
    fn six_cycle_coloring_against_all_dihedral_elements() {
        let c6 = FiniteGraph::cycle(6);
        let oracle = brute_force_auts(&c6);
        assert_eq!(oracle.len(), 12);
        let coloring = VertexColoring::new(vec![0, 0, 1, 0, 1, 1]);
        let preserved = oracle
            .iter()
            .filter(|p| !p.is_identity() && coloring.is_preserved_by(p))
            .count();
        assert_eq!(preserved, 0);
        let auts = automorphism_group(&c6, DEFAULT_GROUP_CAP).unwrap();
        assert!(is_distinguishing(&c6, &coloring, &auts).unwrap().holds());
        assert_eq!(colored_automorphism(&c6, &coloring).unwrap(), None);
    }

    #[test]
    fn orbit_examples() {
        let c4 = FiniteGraph::cycle(4);
        let auts = automorphism_group(&c4, DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(orbits(&c4, &auts).unwrap(), vec![vec![0, 1, 2, 3]]);

        let p3 = FiniteGraph::path(3);
        let auts = automorphism_group(&p3, DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(orbits(&p3, &auts).unwrap(), vec![vec![0, 2], vec![1]]);

        let rigid = rigid6();
        assert_eq!(brute_force_auts(&rigid).len(), 1);
        let auts = automorphism_group(&rigid, DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(auts.len(), 1);
        assert_eq!(
            orbits(&rigid, &auts).unwrap(),
            (0..6).map(|v| vec![v]).collect::<Vec<_>>()
        );
    }

    #[test]
    fn disconnected_graph_group() {
        // K2 + K2 + isolated vertex: 2 * 2 * 2 = 8
        let g = FiniteGraph::disjoint_union(&[
            FiniteGraph::complete(2),
            FiniteGraph::complete(2),
            FiniteGraph::empty(1),
        ]);
        let auts = automorphism_group(&g, DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(auts, brute_force_auts(&g));
        assert_eq!(group_order(&g, DEFAULT_GROUP_CAP).unwrap(), 8);
    }
}
