//! Brute-force oracles shared by the integration suites. Nothing here
//! calls into the search code under test.

#![allow(dead_code)]

use distinguishing::graph::FiniteGraph;

/// Every vertex permutation preserving adjacency, by trying all `n!`.
pub fn naive_automorphisms(graph: &FiniteGraph) -> Vec<Vec<usize>> {
    let n = graph.vertex_count();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |p| {
        let ok = (0..n).all(|u| (0..n).all(|v| graph.has_edge(u, v) == graph.has_edge(p[u], p[v])));
        if ok {
            out.push(p.to_vec());
        }
    });
    out.sort();
    out
}

fn permute(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

/// Least `k` such that some coloring in `k^n` is fixed by no nontrivial
/// automorphism, trying every coloring.
pub fn naive_distinguishing_number(graph: &FiniteGraph) -> usize {
    let n = graph.vertex_count();
    let auts: Vec<Vec<usize>> = naive_automorphisms(graph)
        .into_iter()
        .filter(|p| p.iter().enumerate().any(|(i, &x)| i != x))
        .collect();
    for k in 1..=n {
        let mut colors = vec![0usize; n];
        loop {
            if auts.iter().all(|p| (0..n).any(|v| colors[p[v]] != colors[v])) {
                return k;
            }
            let mut i = 0;
            while i < n && colors[i] == k - 1 {
                colors[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            colors[i] += 1;
        }
    }
    n
}
