//! Shuffle (staircase) triangulation of products.
//!
//! An n-simplex of `X × Y` is a pair of simplices `σ^p ∈ X`, `τ^q ∈ Y`
//! together with a strictly increasing chain of `n + 1` lattice points in
//! `[0..p] × [0..q]` from `(0,0)` to `(p,q)`. Every step raises one or both
//! coordinates, so `max(p,q) ≤ n ≤ p + q`. Cells are numbered in
//! lexicographic order of `(p, σ, q, τ, chain)`.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use super::{DeltaComplex, SimplexImage, SimplicialMap};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ProductCell {
    /// `(dim, id)` in the left factor.
    pub left: (usize, usize),
    /// `(dim, id)` in the right factor.
    pub right: (usize, usize),
    pub chain: Vec<(usize, usize)>,
}

/// Projection of a product edge to one factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "kind", content = "id")]
pub enum FactorStep {
    Constant(usize),
    Edge(usize),
}

#[derive(Clone, Debug)]
pub struct Product {
    complex: Arc<DeltaComplex>,
    left: Arc<DeltaComplex>,
    right: Arc<DeltaComplex>,
    cells: Vec<Vec<ProductCell>>,
    index: HashMap<ProductCell, usize>,
    proj_left: SimplicialMap,
    proj_right: SimplicialMap,
}

fn chains(p: usize, q: usize, n: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(p: usize, q: usize, left: usize, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let (a, b) = *cur.last().expect("chain starts at origin");
        if left == 0 {
            if (a, b) == (p, q) {
                out.push(cur.clone());
            }
            return;
        }
        for (da, db) in [(0, 1), (1, 0), (1, 1)] {
            let (na, nb) = (a + da, b + db);
            if na > p || nb > q {
                continue;
            }
            let (ra, rb) = (p - na, q - nb);
            let r = left - 1;
            if ra.max(rb) <= r && r <= ra + rb {
                cur.push((na, nb));
                go(p, q, r, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if p.max(q) <= n && n <= p + q {
        go(p, q, n, &mut vec![(0, 0)], &mut out);
    }
    out
}

/// Drops the factor coordinate that vanished after removing a chain point.
fn factor_face(x: &DeltaComplex, (dim, id): (usize, usize), coords: &mut [usize]) -> (usize, usize) {
    match (0..=dim).find(|c| !coords.contains(c)) {
        None => (dim, id),
        Some(missing) => {
            for c in coords.iter_mut() {
                if *c > missing {
                    *c -= 1;
                }
            }
            (dim - 1, x.face(dim, id, missing))
        }
    }
}

impl Product {
    pub fn complex(&self) -> &Arc<DeltaComplex> {
        &self.complex
    }

    pub fn left(&self) -> &Arc<DeltaComplex> {
        &self.left
    }

    pub fn right(&self) -> &Arc<DeltaComplex> {
        &self.right
    }

    pub fn cell(&self, n: usize, k: usize) -> &ProductCell {
        &self.cells[n][k]
    }

    pub fn find(&self, cell: &ProductCell) -> Option<usize> {
        self.index.get(cell).copied()
    }

    /// Id of the product vertex `(x, y)`.
    pub fn vertex(&self, x: usize, y: usize) -> usize {
        x * self.right.vertex_count() + y
    }

    /// The two projected steps of a product edge.
    pub fn edge_steps(&self, e: usize) -> (FactorStep, FactorStep) {
        let c = &self.cells[1][e];
        let step = |(d, id): (usize, usize)| if d == 1 { FactorStep::Edge(id) } else { FactorStep::Constant(id) };
        (step(c.left), step(c.right))
    }

    pub fn projection_left(&self) -> &SimplicialMap {
        &self.proj_left
    }

    pub fn projection_right(&self) -> &SimplicialMap {
        &self.proj_right
    }
}

pub fn product(left: &Arc<DeltaComplex>, right: &Arc<DeltaComplex>) -> Product {
    let top = left.dim() + right.dim();
    let mut cells: Vec<Vec<ProductCell>> = vec![Vec::new(); top + 1];
    for (n, slot) in cells.iter_mut().enumerate() {
        for p in 0..=left.dim().min(n) {
            for s in 0..left.count(p) {
                for q in 0..=right.dim().min(n) {
                    for t in 0..right.count(q) {
                        for chain in chains(p, q, n) {
                            slot.push(ProductCell { left: (p, s), right: (q, t), chain });
                        }
                    }
                }
            }
        }
    }
    let mut index = HashMap::new();
    for dim_cells in &cells {
        for (k, c) in dim_cells.iter().enumerate() {
            index.insert(c.clone(), k);
        }
    }
    let counts: Vec<usize> = cells.iter().map(Vec::len).collect();
    let mut faces = vec![Vec::new(); top + 1];
    for n in 1..=top {
        faces[n] = cells[n]
            .iter()
            .map(|c| {
                (0..=n)
                    .map(|i| {
                        let mut chain = c.chain.clone();
                        chain.remove(i);
                        let mut xs: Vec<usize> = chain.iter().map(|&(a, _)| a).collect();
                        let mut ys: Vec<usize> = chain.iter().map(|&(_, b)| b).collect();
                        let l = factor_face(left, c.left, &mut xs);
                        let r = factor_face(right, c.right, &mut ys);
                        let face = ProductCell { left: l, right: r, chain: xs.into_iter().zip(ys).collect() };
                        index[&face]
                    })
                    .collect()
            })
            .collect();
    }
    let complex = Arc::new(DeltaComplex::new(counts, faces).expect("shuffle product is a Δ-complex"));
    let proj = |which_left: bool| {
        let images = cells
            .iter()
            .map(|dim_cells| {
                dim_cells
                    .iter()
                    .map(|c| {
                        let ((dim, simplex), positions) = if which_left {
                            (c.left, c.chain.iter().map(|&(a, _)| a).collect())
                        } else {
                            (c.right, c.chain.iter().map(|&(_, b)| b).collect())
                        };
                        SimplexImage { dim, simplex, positions }
                    })
                    .collect()
            })
            .collect();
        let target = if which_left { left.clone() } else { right.clone() };
        SimplicialMap::new(complex.clone(), target, images).expect("projection is simplicial")
    };
    let proj_left = proj(true);
    let proj_right = proj(false);
    Product { complex, left: left.clone(), right: right.clone(), cells, index, proj_left, proj_right }
}

/// `X × [0,1]` with its end inclusions and the projection back to `X`.
#[derive(Clone, Debug)]
pub struct Cylinder {
    pub product: Product,
    pub iota0: SimplicialMap,
    pub iota1: SimplicialMap,
    pub retraction: SimplicialMap,
}

pub(crate) fn interval() -> DeltaComplex {
    DeltaComplex::new(vec![2, 1], vec![vec![], vec![vec![1, 0]]]).expect("interval")
}

impl Cylinder {
    pub fn base(&self) -> &Arc<DeltaComplex> {
        self.product.left()
    }

    pub fn complex(&self) -> &Arc<DeltaComplex> {
        self.product.complex()
    }

    /// Vertex `(v, t)` for `t ∈ {0, 1}`.
    pub fn vertex(&self, v: usize, t: usize) -> usize {
        self.product.vertex(v, t)
    }

    /// The edge `v × [0,1]`, directed from `(v,0)` to `(v,1)`.
    pub fn vertical_edge(&self, v: usize) -> usize {
        self.product
            .find(&ProductCell { left: (0, v), right: (1, 0), chain: vec![(0, 0), (0, 1)] })
            .expect("vertical edge exists")
    }
}

pub fn cylinder(x: &Arc<DeltaComplex>) -> Result<Cylinder> {
    let product = product(x, &Arc::new(interval()));
    let end = |t: usize| -> Result<SimplicialMap> {
        let images = (0..=x.dim())
            .map(|n| {
                (0..x.count(n))
                    .map(|k| {
                        let cell = ProductCell { left: (n, k), right: (0, t), chain: (0..=n).map(|i| (i, 0)).collect() };
                        SimplexImage { dim: n, simplex: product.find(&cell).expect("end cell"), positions: (0..=n).collect() }
                    })
                    .collect()
            })
            .collect();
        SimplicialMap::new(x.clone(), product.complex().clone(), images)
    };
    let iota0 = end(0)?;
    let iota1 = end(1)?;
    let retraction = product.projection_left().clone();
    Ok(Cylinder { product, iota0, iota1, retraction })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::fixtures::{circle3, point, rp2_min, triangle};
    use crate::complex::validate;

    fn counts(x: &DeltaComplex) -> Vec<usize> {
        x.counts().to_vec()
    }

    #[test]
    fn chain_counts() {
        assert_eq!(chains(1, 1, 2).len(), 2);
        assert_eq!(chains(1, 1, 1), vec![vec![(0, 0), (1, 1)]]);
        assert_eq!(chains(2, 1, 3).len(), 3);
        assert_eq!(chains(2, 2, 4).len(), 6);
    }

    #[test]
    fn point_times_point() {
        let p = Arc::new(point());
        assert_eq!(counts(product(&p, &p).complex()), vec![1]);
    }

    #[test]
    fn square() {
        let i = Arc::new(interval());
        let sq = product(&i, &i);
        assert_eq!(counts(sq.complex()), vec![4, 5, 2]);
        assert_eq!(sq.edge_steps(4), (FactorStep::Edge(0), FactorStep::Edge(0)));
    }

    #[test]
    fn cylinder_over_circle() {
        let c = Arc::new(circle3());
        let cyl = cylinder(&c).unwrap();
        // χ(S¹ × I) = 0
        assert_eq!(counts(cyl.complex()), vec![6, 12, 6]);
        let v = cyl.vertical_edge(1);
        assert_eq!(cyl.complex().edge_endpoints(v), (cyl.vertex(1, 0), cyl.vertex(1, 1)));
        assert!(cyl.retraction.image(1, v).is_degenerate());
        assert!(cyl.iota0.then(&cyl.retraction).unwrap().is_identity());
        assert!(cyl.iota1.then(&cyl.retraction).unwrap().is_identity());
    }

    #[test]
    fn cylinder_over_point() {
        let p = Arc::new(point());
        let cyl = cylinder(&p).unwrap();
        assert_eq!(counts(cyl.complex()), vec![2, 1]);
        assert_eq!(cyl.iota0.vertex(0), 0);
        assert_eq!(cyl.iota1.vertex(0), 1);
    }

    #[test]
    fn products_of_one_vertex_complexes_validate() {
        let r = Arc::new(rp2_min());
        let t = Arc::new(triangle());
        let pr = product(&r, &t);
        let x = pr.complex();
        let faces: Vec<Vec<Vec<usize>>> =
            (0..=x.dim()).map(|n| (0..x.count(n)).map(|k| if n == 0 { vec![] } else { x.faces(n, k).to_vec() }).collect()).collect();
        assert!(validate(x.counts(), &faces).is_empty());
        assert_eq!(x.euler_characteristic(), r.euler_characteristic() * t.euler_characteristic());
    }

    #[test]
    fn product_counts_symmetric() {
        let a = Arc::new(rp2_min());
        let b = Arc::new(circle3());
        assert_eq!(counts(product(&a, &b).complex()), counts(product(&b, &a).complex()));
    }
}
