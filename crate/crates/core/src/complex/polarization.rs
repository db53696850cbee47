use std::collections::VecDeque;

use super::{DeltaComplex, Direction, EdgePath, Step};
use crate::error::{Error, Result};

/// A spanning forest with one root per component. `parent[v]` is the step
/// from `v` toward its root; roots have `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polarization {
    bases: Vec<usize>,
    parent: Vec<Option<Step>>,
    component: Vec<usize>,
    depth: Vec<usize>,
}

impl Polarization {
    /// Base vertex of each component, in component order.
    pub fn bases(&self) -> &[usize] {
        &self.bases
    }

    pub fn parent(&self, v: usize) -> Option<Step> {
        self.parent[v]
    }

    pub fn component_of(&self, v: usize) -> usize {
        self.component[v]
    }

    pub fn component_index(&self) -> &[usize] {
        &self.component
    }

    pub fn base_of(&self, v: usize) -> usize {
        self.bases[self.component[v]]
    }

    pub fn vertex_count(&self) -> usize {
        self.parent.len()
    }

    pub fn is_forest_edge(&self, e: usize) -> bool {
        self.parent.iter().any(|p| p.is_some_and(|s| s.edge == e))
    }

    /// Forest edges, ascending.
    pub fn forest_edges(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.parent.iter().filter_map(|p| p.map(|s| s.edge)).collect();
        v.sort_unstable();
        v
    }

    /// Path from `v` to its base along parent edges; constant at a base.
    pub fn forest_path(&self, x: &DeltaComplex, v: usize) -> EdgePath {
        let mut steps = Vec::with_capacity(self.depth[v]);
        let mut at = v;
        while let Some(s) = self.parent[at] {
            steps.push(s);
            at = s.target(x);
        }
        EdgePath { start: v, end: at, steps }
    }

    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    /// Orients a given spanning forest toward the supplied bases.
    pub fn from_forest(x: &DeltaComplex, bases: &[usize], forest: &[usize]) -> Result<Polarization> {
        let component = x.component_index();
        check_bases(x, &component, bases)?;
        let mut in_forest = vec![false; x.edge_count()];
        for &e in forest {
            in_forest[e] = true;
        }
        let p = bfs(x, &component, bases, |e| in_forest[e]);
        if p.parent.iter().enumerate().any(|(v, s)| s.is_none() && !bases.contains(&v)) {
            return Err(Error::InvalidInput("forest does not span every component".into()));
        }
        if p.forest_edges().len() != forest.len() {
            return Err(Error::InvalidInput("edge set is not a forest".into()));
        }
        Ok(p)
    }
}

fn check_bases(x: &DeltaComplex, component: &[usize], bases: &[usize]) -> Result<()> {
    let ncomp = x.component_count();
    if bases.len() != ncomp {
        return Err(Error::BadBase(format!("{} bases for {} components", bases.len(), ncomp)));
    }
    let mut seen = vec![false; ncomp];
    for &b in bases {
        if b >= x.vertex_count() {
            return Err(Error::BadBase(format!("vertex {b} does not exist")));
        }
        let c = component[b];
        if seen[c] {
            return Err(Error::BadBase(format!("two bases lie in component {c}")));
        }
        seen[c] = true;
    }
    Ok(())
}

fn bfs(x: &DeltaComplex, component: &[usize], bases: &[usize], allowed: impl Fn(usize) -> bool) -> Polarization {
    let n = x.vertex_count();
    let ncomp = bases.len();
    // bases reordered into component order
    let mut ordered = vec![0; ncomp];
    for &b in bases {
        ordered[component[b]] = b;
    }
    let mut parent = vec![None; n];
    let mut depth = vec![0; n];
    let mut seen = vec![false; n];
    for &b in &ordered {
        seen[b] = true;
        let mut queue = VecDeque::from([b]);
        while let Some(u) = queue.pop_front() {
            for &e in x.incident_edges(u) {
                if !allowed(e) {
                    continue;
                }
                let (s, t) = x.edge_endpoints(e);
                let (w, dir) = if s == u { (t, Direction::Backward) } else { (s, Direction::Forward) };
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(Step { edge: e, direction: dir });
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    Polarization { bases: ordered, parent, component: component.to_vec(), depth }
}

/// Breadth-first spanning forest from the given bases (default: the smallest
/// vertex of each component), scanning incident edges in id order.
pub fn polarize(x: &DeltaComplex, bases: Option<&[usize]>) -> Result<Polarization> {
    let component = x.component_index();
    let default: Vec<usize>;
    let bases = match bases {
        Some(b) => {
            check_bases(x, &component, b)?;
            b
        }
        None => {
            default = x.components().iter().map(|c| c[0]).collect();
            &default
        }
    };
    Ok(bfs(x, &component, bases, |_| true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::fixtures::*;

    #[test]
    fn circle3_bfs() {
        let c = circle3();
        let p = polarize(&c, Some(&[0])).unwrap();
        assert_eq!(p.parent(1), Some(Step { edge: 0, direction: Direction::Backward }));
        assert_eq!(p.parent(2), Some(Step { edge: 1, direction: Direction::Backward }));
        assert_eq!(p.forest_edges(), vec![0, 1]);
        let path = p.forest_path(&c, 2);
        assert_eq!(path.steps, vec![Step { edge: 1, direction: Direction::Backward }]);
        assert_eq!((path.start, path.end), (2, 0));
        assert!(p.forest_path(&c, 0).is_constant());
    }

    #[test]
    fn point_and_rp2() {
        let p = polarize(&point(), None).unwrap();
        assert_eq!(p.bases(), &[0]);
        assert!(p.forest_edges().is_empty());
        let r = rp2_min();
        let p = polarize(&r, Some(&[0])).unwrap();
        assert_eq!(p.forest_edges(), vec![0]);
    }

    #[test]
    fn path_graph_depth_two() {
        let x = DeltaComplex::new(vec![3, 2], vec![vec![], vec![vec![1, 0], vec![2, 1]]]).unwrap();
        let p = polarize(&x, Some(&[0])).unwrap();
        assert_eq!(p.forest_path(&x, 2).len(), 2);
    }

    #[test]
    fn bad_bases() {
        let two = circle3().disjoint_union(&circle3());
        assert!(matches!(polarize(&two, Some(&[0, 1])), Err(Error::BadBase(_))));
        assert!(matches!(polarize(&two, Some(&[0])), Err(Error::BadBase(_))));
        assert!(polarize(&two, Some(&[4, 1])).is_ok());
    }
}
