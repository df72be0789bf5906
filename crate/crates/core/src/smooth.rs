//! Finite simulation of the smooth-case coloring: each class of an
//! equivalence relation generated by involutions gets its own infinite
//! color set (an arithmetic progression), and points of a class receive
//! its elements in the order given by the first involution that carries
//! them into a transversal.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use crate::graph::{FiniteGraph, GraphError, Permutation, VertexColoring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SmoothError {
    #[error("generator {index} is not an involution")]
    NotInvolution { index: usize },
    #[error("generator {index} acts on {got} points, expected {expected}")]
    WrongSize {
        index: usize,
        expected: usize,
        got: usize,
    },
    #[error("transversal meets class {class} in {hits} points")]
    NotATransversal { class: usize, hits: usize },
    #[error("point {point} out of range")]
    PointOutOfRange { point: usize },
    #[error("no generator sends point {point} into the transversal")]
    Unreachable { point: usize },
    #[error("points {a} and {b} share index {index} within one class")]
    IndexCollision { a: usize, b: usize, index: usize },
    #[error("class assignment: {0}")]
    BadAssignment(String),
    #[error("coloring has {got} entries, expected {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Points `0..point_count` with involutive generators; classes are the
/// orbits of the group they generate, numbered by least point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSystem {
    point_count: usize,
    involutions: Vec<Permutation>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl ComponentSystem {
    pub fn derive_classes(
        point_count: usize,
        involutions: Vec<Permutation>,
    ) -> Result<Self, SmoothError> {
        for (index, g) in involutions.iter().enumerate() {
            if g.len() != point_count {
                return Err(SmoothError::WrongSize {
                    index,
                    expected: point_count,
                    got: g.len(),
                });
            }
            if !g.is_involution() {
                return Err(SmoothError::NotInvolution { index });
            }
        }
        let mut class_of = vec![usize::MAX; point_count];
        let mut classes = Vec::new();
        for root in 0..point_count {
            if class_of[root] != usize::MAX {
                continue;
            }
            let id = classes.len();
            class_of[root] = id;
            let mut members = vec![root];
            let mut frontier = vec![root];
            while let Some(x) = frontier.pop() {
                for g in &involutions {
                    let y = g.apply(x);
                    if class_of[y] == usize::MAX {
                        class_of[y] = id;
                        members.push(y);
                        frontier.push(y);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        Ok(ComponentSystem {
            point_count,
            involutions,
            classes,
            class_of,
        })
    }

    /// Random system: `point_count` points, `generators` random involutions
    /// each made of a random partial matching.
    pub fn random<R: Rng>(rng: &mut R, point_count: usize, generators: usize) -> Self {
        let involutions = (0..generators)
            .map(|_| {
                let mut points: Vec<usize> = (0..point_count).collect();
                points.shuffle(rng);
                let pairs = rng.gen_range(0..=point_count / 2);
                let cycles: Vec<Vec<usize>> =
                    points.chunks(2).take(pairs).map(<[usize]>::to_vec).collect();
                Permutation::from_cycles(point_count, &cycles).expect("disjoint pairs")
            })
            .collect();
        ComponentSystem::derive_classes(point_count, involutions).expect("matchings are involutions")
    }

    pub fn point_count(&self) -> usize {
        self.point_count
    }

    pub fn involutions(&self) -> &[Permutation] {
        &self.involutions
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, point: usize) -> usize {
        self.class_of[point]
    }

    /// Least point of every class.
    pub fn least_transversal(&self) -> Transversal {
        Transversal {
            points: self.classes.iter().map(|c| c[0]).collect(),
        }
    }

    /// Appends the transposition `(x t)` for every point `x` that no
    /// listed generator sends into `transversal` in one step, so that the
    /// transversal index is defined everywhere. Classes are unchanged.
    pub fn close_for(&self, transversal: &Transversal) -> Result<ComponentSystem, SmoothError> {
        self.check_transversal(transversal)?;
        let mut involutions = self.involutions.clone();
        for x in 0..self.point_count {
            if transversal.contains(x) {
                continue;
            }
            if involutions.iter().any(|g| transversal.contains(g.apply(x))) {
                continue;
            }
            let target = transversal.member_of(self, self.class_of[x]);
            involutions.push(Permutation::transposition(self.point_count, x, target)?);
        }
        ComponentSystem::derive_classes(self.point_count, involutions)
    }

    fn check_transversal(&self, transversal: &Transversal) -> Result<(), SmoothError> {
        let mut hits = vec![0; self.classes.len()];
        for &p in &transversal.points {
            if p >= self.point_count {
                return Err(SmoothError::PointOutOfRange { point: p });
            }
            hits[self.class_of[p]] += 1;
        }
        match hits.iter().position(|&h| h != 1) {
            Some(class) => Err(SmoothError::NotATransversal {
                class,
                hits: hits[class],
            }),
            None => Ok(()),
        }
    }

    /// Union of paths, one per class, visiting the class in the order
    /// induced by the transversal index.
    pub fn path_union_graph(&self, transversal: &Transversal) -> Result<FiniteGraph, SmoothError> {
        let mut edges = Vec::new();
        for class in &self.classes {
            let ordered = self.ordered_class(class, transversal)?;
            edges.extend(ordered.windows(2).map(|w| (w[0], w[1])));
        }
        Ok(FiniteGraph::new(self.point_count, edges)?)
    }

    fn ordered_class(&self, class: &[usize], transversal: &Transversal) -> Result<Vec<usize>, SmoothError> {
        let mut indexed = class
            .iter()
            .map(|&x| fm_index(x, self, transversal).map(|i| (i, x)))
            .collect::<Result<Vec<_>, _>>()?;
        indexed.sort_unstable();
        if let Some(w) = indexed.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(SmoothError::IndexCollision {
                a: w[0].1,
                b: w[1].1,
                index: w[0].0,
            });
        }
        Ok(indexed.into_iter().map(|(_, x)| x).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transversal {
    points: BTreeSet<usize>,
}

impl Transversal {
    pub fn new(points: impl IntoIterator<Item = usize>) -> Self {
        Transversal {
            points: points.into_iter().collect(),
        }
    }

    pub fn contains(&self, point: usize) -> bool {
        self.points.contains(&point)
    }

    pub fn points(&self) -> &BTreeSet<usize> {
        &self.points
    }

    fn member_of(&self, system: &ComponentSystem, class: usize) -> usize {
        *self
            .points
            .iter()
            .find(|&&p| system.class_of(p) == class)
            .expect("validated transversal meets every class")
    }
}

/// Class `c` owns the colors `{class_index[c] + t * modulus : t >= 0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetAssignment {
    modulus: usize,
    class_index: Vec<usize>,
}

impl SubsetAssignment {
    pub fn new(modulus: usize, class_index: Vec<usize>) -> Result<Self, SmoothError> {
        if modulus == 0 || modulus < class_index.len() {
            return Err(SmoothError::BadAssignment(format!(
                "modulus {modulus} below class count {}",
                class_index.len()
            )));
        }
        let distinct: BTreeSet<usize> = class_index.iter().copied().collect();
        if distinct.len() != class_index.len() {
            return Err(SmoothError::BadAssignment("residues repeat".into()));
        }
        if let Some(&r) = class_index.iter().find(|&&r| r >= modulus) {
            return Err(SmoothError::BadAssignment(format!(
                "residue {r} not below modulus {modulus}"
            )));
        }
        Ok(SubsetAssignment {
            modulus,
            class_index,
        })
    }

    /// Class `c` gets residue `c` modulo the class count.
    pub fn identity(system: &ComponentSystem) -> Self {
        let count = system.classes().len().max(1);
        SubsetAssignment {
            modulus: count,
            class_index: (0..system.classes().len()).collect(),
        }
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    /// The `k`-th (0-based) color owned by `class`.
    pub fn color(&self, class: usize, k: usize) -> usize {
        self.class_index[class] + k * self.modulus
    }
}

/// 1 on the transversal; otherwise 2 plus the least generator index
/// carrying `x` into the transversal.
pub fn fm_index(
    x: usize,
    system: &ComponentSystem,
    transversal: &Transversal,
) -> Result<usize, SmoothError> {
    if x >= system.point_count() {
        return Err(SmoothError::PointOutOfRange { point: x });
    }
    if transversal.contains(x) {
        return Ok(1);
    }
    system
        .involutions()
        .iter()
        .position(|g| transversal.contains(g.apply(x)))
        .map(|n| n + 2)
        .ok_or(SmoothError::Unreachable { point: x })
}

/// Colors each class with its own progression, in transversal-index order.
pub fn smooth_coloring(
    system: &ComponentSystem,
    transversal: &Transversal,
    assignment: &SubsetAssignment,
) -> Result<VertexColoring, SmoothError> {
    system.check_transversal(transversal)?;
    if assignment.class_index.len() != system.classes().len() {
        return Err(SmoothError::BadAssignment(format!(
            "{} residues for {} classes",
            assignment.class_index.len(),
            system.classes().len()
        )));
    }
    let mut colors = vec![0; system.point_count()];
    for (c, class) in system.classes().iter().enumerate() {
        for (k, x) in system.ordered_class(class, transversal)?.into_iter().enumerate() {
            colors[x] = assignment.color(c, k);
        }
    }
    Ok(VertexColoring::new(colors))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransversalReport {
    /// Points taking the least color of their class.
    pub points: BTreeSet<usize>,
    /// Classes where the least color is taken more than once.
    pub tied_classes: Vec<usize>,
}

impl TransversalReport {
    pub fn is_exact(&self) -> bool {
        self.tied_classes.is_empty()
    }
}

/// Points whose color is minimal within their class.
pub fn min_color_transversal(
    system: &ComponentSystem,
    coloring: &VertexColoring,
) -> Result<TransversalReport, SmoothError> {
    if coloring.len() != system.point_count() {
        return Err(SmoothError::SizeMismatch {
            expected: system.point_count(),
            got: coloring.len(),
        });
    }
    let mut points = BTreeSet::new();
    let mut tied_classes = Vec::new();
    for (c, class) in system.classes().iter().enumerate() {
        let least = class.iter().map(|&x| coloring.color(x)).min().expect("nonempty class");
        let minima: Vec<usize> = class.iter().copied().filter(|&x| coloring.color(x) == least).collect();
        if minima.len() > 1 {
            tied_classes.push(c);
        }
        points.extend(minima);
    }
    Ok(TransversalReport {
        points,
        tied_classes,
    })
}

/// Parses `points <N>` followed by `inv <cycles>` lines, e.g.
/// `inv (0 1)(2 3)`; `inv ()` is the identity.
pub fn parse_system(text: &str) -> Result<ComponentSystem, SmoothError> {
    let syntax = |line, message: &str| SmoothError::Syntax {
        line,
        message: message.to_string(),
    };
    let mut lines = text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    });
    let (line, header) = lines.next().ok_or_else(|| syntax(1, "missing `points <N>`"))?;
    let point_count: usize = header
        .strip_prefix("points")
        .and_then(|r| r.trim().parse().ok())
        .ok_or_else(|| syntax(line, "expected `points <N>`"))?;
    let mut involutions = Vec::new();
    for (line, body) in lines {
        let rest = body
            .strip_prefix("inv")
            .ok_or_else(|| syntax(line, "expected `inv <cycles>`"))?
            .trim();
        let mut cycles = Vec::new();
        for chunk in rest.split(')') {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                continue;
            }
            let inner = chunk
                .strip_prefix('(')
                .ok_or_else(|| syntax(line, "cycles look like (a b)"))?;
            let cycle = inner
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| syntax(line, "bad point id")))
                .collect::<Result<Vec<_>, _>>()?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
        }
        let perm = Permutation::from_cycles(point_count, &cycles)
            .map_err(|e| syntax(line, &e.to_string()))?;
        involutions.push(perm);
    }
    ComponentSystem::derive_classes(point_count, involutions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{automorphism_group, is_distinguishing, DEFAULT_GROUP_CAP};

    fn swap(n: usize, pairs: &[(usize, usize)]) -> Permutation {
        let cycles: Vec<Vec<usize>> = pairs.iter().map(|&(a, b)| vec![a, b]).collect();
        Permutation::from_cycles(n, &cycles).unwrap()
    }

    #[test]
    fn class_derivation() {
        let s = ComponentSystem::derive_classes(2, vec![swap(2, &[(0, 1)])]).unwrap();
        assert_eq!(s.classes(), &[vec![0, 1]]);
        let s = ComponentSystem::derive_classes(3, vec![]).unwrap();
        assert_eq!(s.classes(), &[vec![0], vec![1], vec![2]]);
        let s = ComponentSystem::derive_classes(4, vec![swap(4, &[(0, 1), (2, 3)]), swap(4, &[(1, 2)])])
            .unwrap();
        assert_eq!(s.classes(), &[vec![0, 1, 2, 3]]);
        let cyc = Permutation::new(vec![1, 2, 0]).unwrap();
        assert_eq!(
            ComponentSystem::derive_classes(3, vec![cyc]),
            Err(SmoothError::NotInvolution { index: 0 })
        );
    }

    #[test]
    fn index_values() {
        // g0 = (1 2), g1 = (0 3), g2 = (0 2); T = {0}
        let s = ComponentSystem::derive_classes(
            4,
            vec![swap(4, &[(1, 2)]), swap(4, &[(0, 3)]), swap(4, &[(0, 2)])],
        )
        .unwrap();
        let t = Transversal::new([0]);
        assert_eq!(fm_index(0, &s, &t).unwrap(), 1);
        assert_eq!(fm_index(3, &s, &t).unwrap(), 3);
        assert_eq!(fm_index(2, &s, &t).unwrap(), 4);
        assert_eq!(fm_index(1, &s, &t), Err(SmoothError::Unreachable { point: 1 }));
        let closed = s.close_for(&t).unwrap();
        assert_eq!(fm_index(1, &closed, &t).unwrap(), 5);
        assert_eq!(closed.classes(), s.classes());
    }

    #[test]
    fn index_two_for_first_generator() {
        let s = ComponentSystem::derive_classes(2, vec![swap(2, &[(0, 1)])]).unwrap();
        assert_eq!(fm_index(1, &s, &Transversal::new([0])).unwrap(), 2);
    }

    #[test]
    fn single_class_progression() {
        let s = ComponentSystem::derive_classes(3, vec![swap(3, &[(0, 1)]), swap(3, &[(0, 2)])]).unwrap();
        let t = s.least_transversal();
        let assign = SubsetAssignment::new(2, vec![0]).unwrap();
        let c = smooth_coloring(&s, &t, &assign).unwrap();
        assert_eq!(c.colors(), &[0, 2, 4]);
    }

    #[test]
    fn two_classes_split_by_parity() {
        let s = ComponentSystem::derive_classes(4, vec![swap(4, &[(0, 1), (2, 3)])]).unwrap();
        let c = smooth_coloring(&s, &s.least_transversal(), &SubsetAssignment::identity(&s)).unwrap();
        assert_eq!(c.colors(), &[0, 2, 1, 3]);
    }

    #[test]
    fn singleton_gets_its_residue() {
        let s = ComponentSystem::derive_classes(2, vec![]).unwrap();
        let assign = SubsetAssignment::new(3, vec![2, 1]).unwrap();
        let c = smooth_coloring(&s, &s.least_transversal(), &assign).unwrap();
        assert_eq!(c.color(1), 1);
        assert!(SubsetAssignment::new(3, vec![1, 1]).is_err());
        assert!(SubsetAssignment::new(1, vec![0, 1]).is_err());
    }

    #[test]
    fn transversal_must_meet_each_class_once() {
        let s = ComponentSystem::derive_classes(2, vec![swap(2, &[(0, 1)])]).unwrap();
        assert_eq!(
            smooth_coloring(&s, &Transversal::new([0, 1]), &SubsetAssignment::identity(&s)),
            Err(SmoothError::NotATransversal { class: 0, hits: 2 })
        );
    }

    #[test]
    fn min_color_examples() {
        // classes {0,1}, {2}
        let s = ComponentSystem::derive_classes(3, vec![swap(3, &[(0, 1)])]).unwrap();
        let r = min_color_transversal(&s, &VertexColoring::new(vec![0, 1, 5])).unwrap();
        assert_eq!(r.points, BTreeSet::from([0, 2]));
        assert!(r.is_exact());
        let tie = min_color_transversal(&s, &VertexColoring::new(vec![0, 0, 5])).unwrap();
        assert_eq!(tie.points, BTreeSet::from([0, 1, 2]));
        assert_eq!(tie.tied_classes, vec![0]);
    }

    #[test]
    fn smooth_output_is_distinguishing_on_paths() {
        let s = ComponentSystem::derive_classes(
            5,
            vec![swap(5, &[(0, 1), (3, 4)]), swap(5, &[(1, 2)])],
        )
        .unwrap();
        let t = s.least_transversal();
        let closed = s.close_for(&t).unwrap();
        let c = smooth_coloring(&closed, &t, &SubsetAssignment::identity(&closed)).unwrap();
        let g = closed.path_union_graph(&t).unwrap();
        let auts = automorphism_group(&g, DEFAULT_GROUP_CAP).unwrap();
        assert!(auts.len() > 1);
        assert!(is_distinguishing(&g, &c, &auts).unwrap().holds());
        assert!(min_color_transversal(&closed, &c).unwrap().is_exact());
    }

    #[test]
    fn system_file() {
        let s = parse_system("# demo\npoints 4\ninv (0 1)(2 3)\ninv (1 2)\ninv ()\n").unwrap();
        assert_eq!(s.classes(), &[vec![0, 1, 2, 3]]);
        assert_eq!(s.involutions().len(), 3);
        assert!(matches!(
            parse_system("points 3\ninv (0 1 2)\n"),
            Err(SmoothError::NotInvolution { index: 0 })
        ));
        assert!(matches!(
            parse_system("inv (0 1)\n"),
            Err(SmoothError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_system("points 2\ninv (0 5)\n"),
            Err(SmoothError::Syntax { line: 2, .. })
        ));
    }
}
