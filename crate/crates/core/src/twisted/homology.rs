use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{cadd, cmul, smith, IntMatrix, SparseMatrix};
use crate::sign::Sign;

/// Isomorphism type `ℤ^rank ⊕ ⊕ ℤ/t_i`, with `t_1 | t_2 | …` and every `t_i ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub rank: usize,
    pub torsion: Vec<i64>,
}

impl Invariants {
    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn generators(&self) -> usize {
        self.rank + self.torsion.len()
    }

    /// Order of coordinate `i`: 0 for a free coordinate.
    pub fn order(&self, i: usize) -> i64 {
        if i < self.rank {
            0
        } else {
            self.torsion[i - self.rank]
        }
    }
}

impl std::fmt::Display for Invariants {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// The subquotient `ker(out) / im(inc)` of a chain (or cochain) complex at
/// one degree, with a reproducible generating set and a coordinate map.
#[derive(Clone, Debug)]
pub struct HomologyGroup {
    invariants: Invariants,
    basis: Vec<Vec<i64>>,
    /// `V⁻¹` from the Smith form of `out`.
    v_inv: IntMatrix,
    /// Rank of `out`.
    rho: usize,
    /// Left transform of the Smith form of the boundary lattice in kernel coordinates.
    p: IntMatrix,
    positions: Vec<usize>,
}

#[derive(Serialize)]
struct Summary<'a> {
    rank: usize,
    torsion: &'a [i64],
    basis: &'a [Vec<i64>],
}

impl Serialize for HomologyGroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Summary { rank: self.invariants.rank, torsion: &self.invariants.torsion, basis: &self.basis }.serialize(s)
    }
}

impl HomologyGroup {
    /// `out: C → C_prev` and `inc: C_next → C` with `out·inc = 0`.
    pub fn subquotient(out: &SparseMatrix, inc: &SparseMatrix) -> Result<HomologyGroup> {
        let c = out.cols();
        if inc.rows() != c {
            return Err(Error::InvalidInput(format!("boundary shapes {}x{} and {}x{} do not compose", out.rows(), c, inc.rows(), inc.cols())));
        }
        let s_out = smith(&out.to_dense(), false, true)?;
        let rho = s_out.rank();
        let right = s_out.right.expect("requested");
        let kernel_dim = c - rho;
        // boundaries expressed in kernel coordinates
        let mut b = IntMatrix::zeros(kernel_dim, inc.cols());
        for j in 0..inc.cols() {
            let col = inc.column(j);
            for i in 0..c {
                let row = right.inverse.row(i);
                let mut acc = 0i64;
                for &(r, v) in col {
                    if row[r] != 0 {
                        acc = cadd(acc, cmul(row[r], v)?)?;
                    }
                }
                if i < rho {
                    if acc != 0 {
                        return Err(Error::InvalidInput("consecutive boundaries do not compose to zero".into()));
                    }
                } else {
                    b.set(i - rho, j, acc);
                }
            }
        }
        let s_b = smith(&b, true, false)?;
        let k = s_b.rank();
        let diagonal = s_b.diagonal;
        let left = s_b.left.expect("requested");
        let torsion_positions: Vec<usize> = (0..k).filter(|&i| diagonal[i] > 1).collect();
        let positions: Vec<usize> = (k..kernel_dim).chain(torsion_positions.iter().copied()).collect();
        let invariants = Invariants {
            rank: kernel_dim - k,
            torsion: torsion_positions.iter().map(|&i| diagonal[i]).collect(),
        };
        let mut basis = Vec::with_capacity(positions.len());
        for &q in &positions {
            let mut v = vec![0i64; c];
            for j in 0..kernel_dim {
                let coef = left.inverse.get(j, q);
                if coef != 0 {
                    for (i, slot) in v.iter_mut().enumerate() {
                        let x = right.forward.get(i, rho + j);
                        if x != 0 {
                            *slot = cadd(*slot, cmul(coef, x)?)?;
                        }
                    }
                }
            }
            basis.push(v);
        }
        Ok(HomologyGroup { invariants, basis, v_inv: right.inverse, rho, p: left.forward, positions })
    }

    pub fn invariants(&self) -> &Invariants {
        &self.invariants
    }

    pub fn rank(&self) -> usize {
        self.invariants.rank
    }

    pub fn torsion(&self) -> &[i64] {
        &self.invariants.torsion
    }

    pub fn is_zero(&self) -> bool {
        self.invariants.is_zero()
    }

    /// Cycle representatives: free generators first, then torsion generators.
    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    /// Dimension of the ambient chain group.
    pub fn ambient(&self) -> usize {
        self.v_inv.rows()
    }

    pub fn is_cycle(&self, z: &[i64]) -> Result<bool> {
        let y = self.v_inv.mul_vec(z)?;
        Ok(y[..self.rho].iter().all(|&v| v == 0))
    }

    /// Coordinates of the class of a cycle in [`basis`](Self::basis); torsion
    /// coordinates are reduced into `0..t`.
    pub fn coordinates(&self, z: &[i64]) -> Result<Vec<i64>> {
        if z.len() != self.ambient() {
            return Err(Error::InvalidInput(format!("vector of length {} in a chain group of rank {}", z.len(), self.ambient())));
        }
        let y = self.v_inv.mul_vec(z)?;
        if y[..self.rho].iter().any(|&v| v != 0) {
            return Err(Error::InvalidInput("vector is not a cycle".into()));
        }
        let w = self.p.mul_vec(&y[self.rho..])?;
        Ok(self
            .positions
            .iter()
            .enumerate()
            .map(|(i, &q)| match self.invariants.order(i) {
                0 => w[q],
                t => w[q].rem_euclid(t),
            })
            .collect())
    }

    pub fn is_boundary(&self, z: &[i64]) -> Result<bool> {
        Ok(self.coordinates(z)?.iter().all(|&c| c == 0))
    }
}

/// A homomorphism between finitely generated abelian groups, written in
/// their [`HomologyGroup`] coordinates. Rows landing in `ℤ/t` are reduced mod `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyMap {
    pub source: Invariants,
    pub target: Invariants,
    #[serde(serialize_with = "serialize_rows")]
    pub matrix: IntMatrix,
}

fn serialize_rows<S: serde::Serializer>(m: &IntMatrix, s: S) -> std::result::Result<S::Ok, S::Error> {
    m.to_rows().serialize(s)
}

impl HomologyMap {
    pub fn new(source: Invariants, target: Invariants, matrix: IntMatrix) -> Result<HomologyMap> {
        if matrix.rows() != target.generators() || matrix.cols() != source.generators() {
            return Err(Error::InvalidInput("matrix shape does not match the groups".into()));
        }
        let mut m = HomologyMap { source, target, matrix };
        m.normalize();
        Ok(m)
    }

    /// The map sending generator `j` of `source` to the class of `image(basis_j)` in `target`.
    pub fn from_images(
        source: &HomologyGroup,
        target: &HomologyGroup,
        mut image: impl FnMut(&[i64]) -> Result<Vec<i64>>,
    ) -> Result<HomologyMap> {
        let columns = source
            .basis()
            .iter()
            .map(|z| target.coordinates(&image(z)?))
            .collect::<Result<Vec<_>>>()?;
        let matrix = IntMatrix::from_columns(&columns, target.invariants.generators());
        HomologyMap::new(source.invariants.clone(), target.invariants.clone(), matrix)
    }

    /// Map induced on homology by a chain map in one degree.
    pub fn from_chain_map(source: &HomologyGroup, target: &HomologyGroup, f: &SparseMatrix) -> Result<HomologyMap> {
        if f.cols() != source.ambient() || f.rows() != target.ambient() {
            return Err(Error::InvalidInput("chain map shape does not match the chain groups".into()));
        }
        HomologyMap::from_images(source, target, |z| f.mul_vec(z))
    }

    fn normalize(&mut self) {
        for i in 0..self.matrix.rows() {
            let t = self.target.order(i);
            if t != 0 {
                for v in self.matrix.row_mut(i) {
                    *v = v.rem_euclid(t);
                }
            }
        }
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &HomologyMap) -> Result<HomologyMap> {
        if self.target != next.source {
            return Err(Error::InvalidInput("homology maps are not composable".into()));
        }
        HomologyMap::new(self.source.clone(), next.target.clone(), next.matrix.mul(&self.matrix)?)
    }

    pub fn neg(&self) -> HomologyMap {
        let mut m = HomologyMap { matrix: self.matrix.neg(), ..self.clone() };
        m.normalize();
        m
    }

    /// True when the map equals `ε·id`.
    pub fn is_scalar(&self, epsilon: i64) -> bool {
        if self.source != self.target {
            return false;
        }
        let n = self.matrix.rows();
        (0..n).all(|i| {
            let t = self.target.order(i);
            (0..n).all(|j| {
                let d = self.matrix.get(i, j) - if i == j { epsilon } else { 0 };
                if t == 0 {
                    d == 0
                } else {
                    d.rem_euclid(t) == 0
                }
            })
        })
    }

    /// The signs `ε` with `map = ε·id`; both when they cannot be told apart.
    pub fn scalar_signs(&self) -> Vec<Sign> {
        [Sign::Plus, Sign::Minus].into_iter().filter(|s| self.is_scalar(s.to_i64())).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.is_scalar(1)
    }

    /// Bijectivity. Between groups of the same isomorphism type a surjection
    /// is an isomorphism, so it suffices that the columns together with the
    /// torsion relations span the whole lattice.
    pub fn is_isomorphism(&self) -> Result<bool> {
        if self.source != self.target {
            return Ok(false);
        }
        let n = self.matrix.rows();
        let rel: Vec<Vec<i64>> = (self.target.rank..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = self.target.order(i);
                v
            })
            .collect();
        let full = self.matrix.hconcat(&IntMatrix::from_columns(&rel, n));
        let s = smith(&full, false, false)?;
        Ok(s.rank() == n && s.diagonal.iter().all(|&d| d == 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sparse(rows: Vec<Vec<i64>>, cols: usize) -> SparseMatrix {
        SparseMatrix::from_dense(&IntMatrix::from_rows(rows, cols))
    }

    #[test]
    fn multiplication_by_two() {
        // 0 → ℤ --2--> ℤ → 0 at the target: ℤ/2
        let out = SparseMatrix::zeros(0, 1);
        let inc = sparse(vec![vec![2]], 1);
        let h = HomologyGroup::subquotient(&out, &inc).unwrap();
        assert_eq!(h.invariants(), &Invariants { rank: 0, torsion: vec![2] });
        assert_eq!(h.coordinates(&[3]).unwrap(), vec![1]);
        assert!(h.is_boundary(&[4]).unwrap());
    }

    #[test]
    fn kernel_of_sum() {
        // ℤ² → ℤ, (a,b) ↦ a + b; kernel generated by (1,-1)
        let out = sparse(vec![vec![1, 1]], 2);
        let inc = SparseMatrix::zeros(2, 0);
        let h = HomologyGroup::subquotient(&out, &inc).unwrap();
        assert_eq!(h.rank(), 1);
        let g = &h.basis()[0];
        assert_eq!(g[0], -g[1]);
        assert_eq!(h.coordinates(&[-3, 3]).unwrap()[0].abs(), 3);
        assert!(h.coordinates(&[1, 0]).is_err());
    }

    #[test]
    fn map_isomorphism_checks() {
        let z2 = Invariants { rank: 1, torsion: vec![2] };
        let swap = HomologyMap::new(z2.clone(), z2.clone(), IntMatrix::from_rows(vec![vec![-1, 0], vec![1, 3]], 2)).unwrap();
        assert_eq!(swap.matrix.get(1, 1), 1);
        assert!(swap.is_isomorphism().unwrap());
        let doubling = HomologyMap::new(z2.clone(), z2.clone(), IntMatrix::from_rows(vec![vec![2, 0], vec![0, 1]], 2)).unwrap();
        assert!(!doubling.is_isomorphism().unwrap());
        let t = Invariants { rank: 0, torsion: vec![2] };
        let id = HomologyMap::new(t.clone(), t, IntMatrix::identity(1)).unwrap();
        assert_eq!(id.scalar_signs(), vec![Sign::Plus, Sign::Minus]);
        assert_eq!(format!("{z2}"), "Z + Z/2");
    }
}
