//! Finite Δ-complexes (semi-simplicial sets) and the combinatorics built on
//! them: edge paths, spanning-forest polarizations, simplicial maps,
//! subcomplexes and shuffle products.

mod map;
mod path;
mod polarization;
mod product;
mod subcomplex;

pub use map::{SimplexImage, SimplicialMap};
pub use path::{Direction, EdgePath, Step};
pub use polarization::{polarize, Polarization};
pub use product::{cylinder, product, Cylinder, FactorStep, Product, ProductCell};
pub use subcomplex::Subcomplex;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A violated invariant of a face table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub dim: usize,
    pub simplex: usize,
    pub message: String,
}

/// Face data as it appears on disk: per-dimension counts and, for each
/// n ≥ 1, the list `faces[n][k][i]` = id of the i-th face of n-simplex k.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexData {
    pub dim: usize,
    pub simplices: Vec<usize>,
    pub faces: BTreeMap<String, Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Checks both structural invariants of a face table: every referenced face
/// exists, and `∂_i ∂_j σ = ∂_{j-1} ∂_i σ` for all `i < j`.
pub fn validate(counts: &[usize], faces: &[Vec<Vec<usize>>]) -> Vec<Violation> {
    let mut out = Vec::new();
    for n in 1..counts.len() {
        let table = faces.get(n).map(Vec::as_slice).unwrap_or(&[]);
        if table.len() != counts[n] {
            out.push(Violation {
                dim: n,
                simplex: table.len().min(counts[n]),
                message: format!("face table has {} rows, expected {}", table.len(), counts[n]),
            });
            continue;
        }
        for (k, row) in table.iter().enumerate() {
            if row.len() != n + 1 {
                out.push(Violation { dim: n, simplex: k, message: format!("expected {} faces, found {}", n + 1, row.len()) });
                continue;
            }
            for (i, &f) in row.iter().enumerate() {
                if f >= counts[n - 1] {
                    out.push(Violation {
                        dim: n,
                        simplex: k,
                        message: format!("face {i} refers to missing {}-simplex {f}", n - 1),
                    });
                }
            }
        }
    }
    if !out.is_empty() {
        return out;
    }
    for n in 2..counts.len() {
        for (k, row) in faces[n].iter().enumerate() {
            let mut bad = Vec::new();
            for j in 1..=n {
                for i in 0..j {
                    let lhs = faces[n - 1][row[j]][i];
                    let rhs = faces[n - 1][row[i]][j - 1];
                    if lhs != rhs {
                        bad.push(format!("∂{i}∂{j} = {lhs} but ∂{}∂{i} = {rhs}", j - 1));
                    }
                }
            }
            if !bad.is_empty() {
                out.push(Violation { dim: n, simplex: k, message: bad.join("; ") });
            }
        }
    }
    out
}

/// A finite Δ-complex. Ids are dense per dimension; all iteration is in id
/// order. Values are immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaComplex {
    counts: Vec<usize>,
    faces: Vec<Vec<Vec<usize>>>,
    vertices: Vec<Vec<Vec<usize>>>,
    incident: Vec<Vec<usize>>,
}

impl DeltaComplex {
    /// `faces[n]` for n ≥ 1; `faces[0]` is ignored and may be empty.
    pub fn new(counts: Vec<usize>, mut faces: Vec<Vec<Vec<usize>>>) -> Result<DeltaComplex> {
        if counts.is_empty() {
            return Err(Error::InvalidComplex("no dimensions".into()));
        }
        faces.resize(counts.len(), Vec::new());
        faces[0] = vec![Vec::new(); counts[0]];
        let violations = validate(&counts, &faces);
        if !violations.is_empty() {
            let msg = violations
                .iter()
                .map(|v| format!("{}-simplex {}: {}", v.dim, v.simplex, v.message))
                .collect::<Vec<_>>()
                .join(", ");
            return Err(Error::InvalidComplex(msg));
        }
        let mut vertices: Vec<Vec<Vec<usize>>> = vec![(0..counts[0]).map(|v| vec![v]).collect()];
        for n in 1..counts.len() {
            let lists = faces[n]
                .iter()
                .map(|row| {
                    // [v0..v_{n-1}] from ∂_n, then v_n as the last vertex of ∂_0
                    let mut vs = vertices[n - 1][row[n]].clone();
                    vs.push(*vertices[n - 1][row[0]].last().expect("nonempty"));
                    vs
                })
                .collect();
            vertices.push(lists);
        }
        let mut incident = vec![Vec::new(); counts[0]];
        if counts.len() > 1 {
            for (e, row) in faces[1].iter().enumerate() {
                incident[row[1]].push(e);
                if row[0] != row[1] {
                    incident[row[0]].push(e);
                }
            }
        }
        Ok(DeltaComplex { counts, faces, vertices, incident })
    }

    pub fn from_data(data: &ComplexData) -> Result<DeltaComplex> {
        let (counts, faces) = data_tables(data)?;
        DeltaComplex::new(counts, faces)
    }

    pub fn to_data(&self) -> ComplexData {
        let mut faces = BTreeMap::new();
        for n in 1..self.counts.len() {
            faces.insert(n.to_string(), self.faces[n].clone());
        }
        ComplexData { dim: self.dim(), simplices: self.counts.clone(), faces, note: None }
    }

    /// Disjoint union; ids of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &DeltaComplex) -> DeltaComplex {
        let dims = self.counts.len().max(other.counts.len());
        let count = |c: &DeltaComplex, n: usize| c.counts.get(n).copied().unwrap_or(0);
        let counts: Vec<usize> = (0..dims).map(|n| count(self, n) + count(other, n)).collect();
        let mut faces = vec![Vec::new(); dims];
        for n in 1..dims {
            faces[n].extend(self.faces.get(n).cloned().unwrap_or_default());
            let shift = count(self, n - 1);
            for row in other.faces.get(n).map(Vec::as_slice).unwrap_or(&[]) {
                faces[n].push(row.iter().map(|f| f + shift).collect());
            }
        }
        DeltaComplex::new(counts, faces).expect("disjoint union of valid complexes is valid")
    }

    pub fn dim(&self) -> usize {
        self.counts.len() - 1
    }

    /// Number of n-simplices (0 above the top dimension).
    pub fn count(&self, n: usize) -> usize {
        self.counts.get(n).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn vertex_count(&self) -> usize {
        self.counts[0]
    }

    pub fn edge_count(&self) -> usize {
        self.count(1)
    }

    pub fn faces(&self, n: usize, k: usize) -> &[usize] {
        &self.faces[n][k]
    }

    pub fn face(&self, n: usize, k: usize, i: usize) -> usize {
        self.faces[n][k][i]
    }

    /// Ordered vertex list `[v0, …, vn]` of an n-simplex.
    pub fn vertices(&self, n: usize, k: usize) -> &[usize] {
        &self.vertices[n][k]
    }

    /// `(start, end)` of an edge: `start = ∂₁e`, `end = ∂₀e`.
    pub fn edge_endpoints(&self, e: usize) -> (usize, usize) {
        (self.faces[1][e][1], self.faces[1][e][0])
    }

    /// Edges touching `v`, ascending.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    /// The face of n-simplex `k` spanned by the vertex positions `keep`
    /// (strictly increasing, nonempty). Returns its id in dimension `keep.len() - 1`.
    pub fn subface(&self, n: usize, k: usize, keep: &[usize]) -> usize {
        debug_assert!(keep.windows(2).all(|w| w[0] < w[1]));
        let mut dim = n;
        let mut id = k;
        // delete the unwanted positions from the top down so lower positions stay put
        for p in (0..=n).rev() {
            if !keep.contains(&p) {
                id = self.faces[dim][id][p];
                dim -= 1;
            }
        }
        id
    }

    /// The edge of n-simplex `k` joining vertex positions `a < b`.
    pub fn edge_of(&self, n: usize, k: usize, a: usize, b: usize) -> usize {
        self.subface(n, k, &[a, b])
    }

    /// Path components as blocks of vertex ids. Blocks are sorted by their
    /// smallest vertex and each block is ascending.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let comp = self.component_index();
        let n = comp.iter().copied().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); n];
        for (v, &c) in comp.iter().enumerate() {
            blocks[c].push(v);
        }
        blocks
    }

    /// Component index of every vertex, numbering components by smallest vertex.
    pub fn component_index(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in 0..self.edge_count() {
            let (u, v) = self.edge_endpoints(e);
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        let mut out = vec![0; n];
        for v in 0..n {
            let r = find(&mut parent, v);
            if label[r] == usize::MAX {
                label[r] = next;
                next += 1;
            }
            out[v] = label[r];
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.counts.iter().enumerate().map(|(n, &c)| if n % 2 == 0 { c as i64 } else { -(c as i64) }).sum()
    }
}

fn data_tables(data: &ComplexData) -> Result<(Vec<usize>, Vec<Vec<Vec<usize>>>)> {
    if data.simplices.len() != data.dim + 1 {
        return Err(Error::InvalidComplex(format!(
            "dim {} but {} simplex counts",
            data.dim,
            data.simplices.len()
        )));
    }
    let mut faces = vec![Vec::new(); data.dim + 1];
    for (key, table) in &data.faces {
        let n: usize = key.parse().map_err(|_| Error::InvalidComplex(format!("bad face key `{key}`")))?;
        if n == 0 || n > data.dim {
            return Err(Error::InvalidComplex(format!("face table for dimension {n} outside 1..={}", data.dim)));
        }
        faces[n] = table.clone();
    }
    Ok((data.simplices.clone(), faces))
}

/// Validates on-disk face data without building a complex.
pub fn validate_data(data: &ComplexData) -> Result<Vec<Violation>> {
    let (counts, mut faces) = data_tables(data)?;
    faces[0] = vec![Vec::new(); counts[0]];
    Ok(validate(&counts, &faces))
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn circle3() -> DeltaComplex {
        DeltaComplex::new(vec![3, 3], vec![vec![], vec![vec![1, 0], vec![2, 0], vec![2, 1]]]).unwrap()
    }

    pub fn interval() -> DeltaComplex {
        DeltaComplex::new(vec![2, 1], vec![vec![], vec![vec![1, 0]]]).unwrap()
    }

    pub fn point() -> DeltaComplex {
        DeltaComplex::new(vec![1], vec![]).unwrap()
    }

    /// 2 vertices, edges a=(0,1), b=(0,1), c=(1,1); triangles
    /// T0 = (∂0 c, ∂1 b, ∂2 a), T1 = (∂0 c, ∂1 a, ∂2 b).
    pub fn rp2_min() -> DeltaComplex {
        DeltaComplex::new(
            vec![2, 3, 2],
            vec![vec![], vec![vec![1, 0], vec![1, 0], vec![1, 1]], vec![vec![2, 1, 0], vec![2, 0, 1]]],
        )
        .unwrap()
    }

    pub fn triangle() -> DeltaComplex {
        DeltaComplex::new(vec![3, 3, 1], vec![vec![], vec![vec![1, 0], vec![2, 0], vec![2, 1]], vec![vec![2, 1, 0]]])
            .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn circle_is_valid() {
        let c = circle3();
        assert!(validate(&c.counts, &c.faces).is_empty());
        assert_eq!(c.components(), vec![vec![0, 1, 2]]);
        assert_eq!(c.vertices(1, 2), &[1, 2]);
    }

    #[test]
    fn rp2_min_identities_hold() {
        let c = rp2_min();
        assert!(validate(&c.counts, &c.faces).is_empty());
        assert_eq!(c.vertices(2, 0), &[0, 1, 1]);
        assert_eq!(c.components(), vec![vec![0, 1]]);
        assert_eq!(c.euler_characteristic(), 1);
    }

    #[test]
    fn inconsistent_triangle_is_named() {
        // ∂0∂2 should equal ∂1∂0 (the shared vertex v1); break it
        let counts = vec![3, 3, 1];
        let faces = vec![vec![vec![]; 3], vec![vec![1, 0], vec![2, 0], vec![2, 1]], vec![vec![2, 1, 1]]];
        let v = validate(&counts, &faces);
        assert_eq!(v.len(), 1);
        assert_eq!((v[0].dim, v[0].simplex), (2, 0));
    }

    #[test]
    fn missing_face_reported() {
        let counts = vec![2, 1];
        let faces = vec![vec![vec![]; 2], vec![vec![5, 0]]];
        let v = validate(&counts, &faces);
        assert_eq!(v.len(), 1);
        assert!(v[0].message.contains("missing"));
    }

    #[test]
    fn components_of_disjoint_union() {
        let two = circle3().disjoint_union(&circle3());
        assert_eq!(two.components(), vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert_eq!(point().components(), vec![vec![0]]);
    }

    #[test]
    fn subface_lookup() {
        let t = triangle();
        assert_eq!(t.edge_of(2, 0, 0, 1), 0);
        assert_eq!(t.edge_of(2, 0, 0, 2), 1);
        assert_eq!(t.edge_of(2, 0, 1, 2), 2);
        assert_eq!(t.subface(2, 0, &[2]), 2);
        assert_eq!(t.subface(2, 0, &[0, 1, 2]), 0);
    }
}
