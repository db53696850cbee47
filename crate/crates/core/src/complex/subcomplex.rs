use std::sync::Arc;

use super::{DeltaComplex, SimplexImage, SimplicialMap};
use crate::error::{Error, Result};

/// A face-closed subset of the simplices of a parent complex.
///
/// The subcomplex is also a complex in its own right: local ids are assigned
/// in increasing parent-id order.
#[derive(Clone, Debug)]
pub struct Subcomplex {
    parent: Arc<DeltaComplex>,
    members: Vec<Vec<bool>>,
    local: Arc<DeltaComplex>,
    to_parent: Vec<Vec<usize>>,
    to_local: Vec<Vec<Option<usize>>>,
}

impl Subcomplex {
    pub fn new(parent: Arc<DeltaComplex>, members: Vec<Vec<bool>>) -> Result<Subcomplex> {
        let mut members = members;
        members.resize(parent.dim() + 1, Vec::new());
        for (n, m) in members.iter_mut().enumerate() {
            if m.is_empty() {
                m.resize(parent.count(n), false);
            }
            if m.len() != parent.count(n) {
                return Err(Error::InvalidInput(format!("membership list for dimension {n} has wrong length")));
            }
        }
        for n in 1..members.len() {
            for k in 0..parent.count(n) {
                if members[n][k] {
                    if let Some(&f) = parent.faces(n, k).iter().find(|&&f| !members[n - 1][f]) {
                        return Err(Error::InvalidInput(format!(
                            "subcomplex not closed under faces: {n}-simplex {k} lacks face {f}"
                        )));
                    }
                }
            }
        }
        let top = (0..members.len()).rev().find(|&n| members[n].iter().any(|&b| b));
        let mut to_parent: Vec<Vec<usize>> = Vec::new();
        let mut to_local: Vec<Vec<Option<usize>>> = Vec::new();
        for m in &members {
            let mut loc = vec![None; m.len()];
            let mut par = Vec::new();
            for (k, &b) in m.iter().enumerate() {
                if b {
                    loc[k] = Some(par.len());
                    par.push(k);
                }
            }
            to_parent.push(par);
            to_local.push(loc);
        }
        let dims = top.map_or(1, |t| t + 1);
        let counts: Vec<usize> = (0..dims).map(|n| to_parent[n].len()).collect();
        let mut faces = vec![Vec::new(); dims];
        for n in 1..dims {
            faces[n] = to_parent[n]
                .iter()
                .map(|&k| parent.faces(n, k).iter().map(|&f| to_local[n - 1][f].expect("closed")).collect())
                .collect();
        }
        let local = Arc::new(DeltaComplex::new(counts, faces)?);
        Ok(Subcomplex { parent, members, local, to_parent, to_local })
    }

    /// The smallest subcomplex containing the listed simplices `(dim, id)`.
    pub fn generated_by(parent: Arc<DeltaComplex>, simplices: &[(usize, usize)]) -> Result<Subcomplex> {
        let mut members: Vec<Vec<bool>> = (0..=parent.dim()).map(|n| vec![false; parent.count(n)]).collect();
        let mut stack: Vec<(usize, usize)> = simplices.to_vec();
        while let Some((n, k)) = stack.pop() {
            if n > parent.dim() || k >= parent.count(n) {
                return Err(Error::InvalidInput(format!("{n}-simplex {k} does not exist")));
            }
            if !members[n][k] {
                members[n][k] = true;
                if n > 0 {
                    stack.extend(parent.faces(n, k).iter().map(|&f| (n - 1, f)));
                }
            }
        }
        Subcomplex::new(parent, members)
    }

    pub fn whole(parent: Arc<DeltaComplex>) -> Subcomplex {
        let members = (0..=parent.dim()).map(|n| vec![true; parent.count(n)]).collect();
        Subcomplex::new(parent, members).expect("whole complex is closed")
    }

    pub fn empty(parent: Arc<DeltaComplex>) -> Subcomplex {
        let members = (0..=parent.dim()).map(|n| vec![false; parent.count(n)]).collect();
        Subcomplex::new(parent, members).expect("empty subcomplex is closed")
    }

    pub fn parent(&self) -> &Arc<DeltaComplex> {
        &self.parent
    }

    /// The subcomplex as a complex with local ids.
    pub fn complex(&self) -> &Arc<DeltaComplex> {
        &self.local
    }

    pub fn contains(&self, n: usize, k: usize) -> bool {
        self.members.get(n).and_then(|m| m.get(k)).copied().unwrap_or(false)
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.contains(0, v)
    }

    pub fn contains_edge(&self, e: usize) -> bool {
        self.contains(1, e)
    }

    pub fn is_empty(&self) -> bool {
        self.to_parent[0].is_empty()
    }

    pub fn members(&self) -> &[Vec<bool>] {
        &self.members
    }

    pub fn to_parent(&self, n: usize, local: usize) -> usize {
        self.to_parent[n][local]
    }

    pub fn to_local(&self, n: usize, parent: usize) -> Option<usize> {
        self.to_local.get(n).and_then(|m| m.get(parent)).copied().flatten()
    }

    /// Parent ids of the members in dimension n, ascending.
    pub fn parent_ids(&self, n: usize) -> &[usize] {
        self.to_parent.get(n).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn inclusion(&self) -> SimplicialMap {
        let images = (0..=self.local.dim())
            .map(|n| {
                self.to_parent[n]
                    .iter()
                    .map(|&k| SimplexImage { dim: n, simplex: k, positions: (0..=n).collect() })
                    .collect()
            })
            .collect();
        SimplicialMap::new(self.local.clone(), self.parent.clone(), images).expect("inclusion is simplicial")
    }
}
