use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::DeltaComplex;
use crate::error::{Error, Result};
use crate::sign::Sign;

/// Image of one n-simplex: the target simplex `(dim, simplex)` together with
/// `positions[i]`, the vertex position in the target simplex that vertex `i`
/// of the source lands on. `positions` is onto `0..=dim`; the image is
/// degenerate exactly when `dim < n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplexImage {
    pub dim: usize,
    pub simplex: usize,
    pub positions: Vec<usize>,
}

impl SimplexImage {
    pub fn is_degenerate(&self) -> bool {
        self.dim + 1 < self.positions.len()
    }

    /// Parity of the vertex reordering; `None` for degenerate images.
    pub fn permutation_sign(&self) -> Option<Sign> {
        if self.is_degenerate() {
            return None;
        }
        let mut inversions = 0;
        for i in 0..self.positions.len() {
            for j in i + 1..self.positions.len() {
                if self.positions[i] > self.positions[j] {
                    inversions += 1;
                }
            }
        }
        Some(Sign::parity(inversions))
    }

    /// Image of the i-th face, given the target complex.
    fn face(&self, y: &DeltaComplex, i: usize) -> SimplexImage {
        let mut pos = self.positions.clone();
        pos.remove(i);
        match (0..=self.dim).find(|p| !pos.contains(p)) {
            None => SimplexImage { dim: self.dim, simplex: self.simplex, positions: pos },
            Some(missing) => {
                for p in &mut pos {
                    if *p > missing {
                        *p -= 1;
                    }
                }
                SimplexImage { dim: self.dim - 1, simplex: y.face(self.dim, self.simplex, missing), positions: pos }
            }
        }
    }
}

/// A simplicial map between Δ-complexes that may reorder or collapse vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    source: Arc<DeltaComplex>,
    target: Arc<DeltaComplex>,
    images: Vec<Vec<SimplexImage>>,
}

impl SimplicialMap {
    /// Checks image shapes and face compatibility in every dimension.
    pub fn new(source: Arc<DeltaComplex>, target: Arc<DeltaComplex>, images: Vec<Vec<SimplexImage>>) -> Result<SimplicialMap> {
        if images.len() != source.dim() + 1 {
            return Err(Error::NotASimplicialMap(format!(
                "images given for {} dimensions, source has {}",
                images.len(),
                source.dim() + 1
            )));
        }
        for (n, imgs) in images.iter().enumerate() {
            if imgs.len() != source.count(n) {
                return Err(Error::NotASimplicialMap(format!("{} images for {} {n}-simplices", imgs.len(), source.count(n))));
            }
            for (k, img) in imgs.iter().enumerate() {
                let onto = img.positions.len() == n + 1
                    && img.dim <= n
                    && img.simplex < target.count(img.dim)
                    && (0..=img.dim).all(|p| img.positions.contains(&p))
                    && img.positions.iter().all(|&p| p <= img.dim);
                if !onto {
                    return Err(Error::NotASimplicialMap(format!("malformed image of {n}-simplex {k}: {img:?}")));
                }
            }
        }
        let map = SimplicialMap { source, target, images };
        for n in 1..map.images.len() {
            for k in 0..map.source.count(n) {
                for i in 0..=n {
                    let expect = map.images[n][k].face(&map.target, i);
                    let f = map.source.face(n, k, i);
                    if map.images[n - 1][f] != expect {
                        return Err(Error::NotASimplicialMap(format!(
                            "face {i} of {n}-simplex {k} maps to {:?}, expected {expect:?}",
                            map.images[n - 1][f]
                        )));
                    }
                }
            }
        }
        Ok(map)
    }

    /// Builds the map determined by a vertex assignment. Every image vertex
    /// set must span exactly one simplex of the target.
    pub fn from_vertex_map(source: Arc<DeltaComplex>, target: Arc<DeltaComplex>, vertex_map: &[usize]) -> Result<SimplicialMap> {
        if vertex_map.len() != source.vertex_count() {
            return Err(Error::NotASimplicialMap("vertex map length differs from vertex count".into()));
        }
        if let Some(&v) = vertex_map.iter().find(|&&v| v >= target.vertex_count()) {
            return Err(Error::NotASimplicialMap(format!("vertex {v} not in target")));
        }
        let mut lookup: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        for d in 0..=target.dim() {
            for t in 0..target.count(d) {
                let mut vs = target.vertices(d, t).to_vec();
                vs.sort_unstable();
                if vs.windows(2).all(|w| w[0] < w[1]) {
                    lookup.entry(vs).or_default().push(t);
                }
            }
        }
        let mut images = Vec::with_capacity(source.dim() + 1);
        for n in 0..=source.dim() {
            let mut imgs = Vec::with_capacity(source.count(n));
            for k in 0..source.count(n) {
                let w: Vec<usize> = source.vertices(n, k).iter().map(|&v| vertex_map[v]).collect();
                let mut set = w.clone();
                set.sort_unstable();
                set.dedup();
                let hits = lookup.get(&set).map(Vec::as_slice).unwrap_or(&[]);
                let t = match hits {
                    [t] => *t,
                    [] => {
                        return Err(Error::NotASimplicialMap(format!("vertices {set:?} span no simplex of the target")));
                    }
                    _ => {
                        return Err(Error::NotASimplicialMap(format!("vertices {set:?} span several target simplices")));
                    }
                };
                let tv = target.vertices(set.len() - 1, t);
                let positions = w.iter().map(|v| tv.iter().position(|u| u == v).expect("vertex present")).collect();
                imgs.push(SimplexImage { dim: set.len() - 1, simplex: t, positions });
            }
            images.push(imgs);
        }
        SimplicialMap::new(source, target, images)
    }

    /// Builds a map from the images of a set of simplices whose faces cover
    /// the source; face images are derived and must agree where they meet.
    pub fn generated(source: Arc<DeltaComplex>, target: Arc<DeltaComplex>, given: &[((usize, usize), SimplexImage)]) -> Result<SimplicialMap> {
        let mut images: Vec<Vec<Option<SimplexImage>>> = (0..=source.dim()).map(|n| vec![None; source.count(n)]).collect();
        let assign = |images: &mut Vec<Vec<Option<SimplexImage>>>, n: usize, k: usize, img: SimplexImage| -> Result<()> {
            match &images[n][k] {
                Some(old) if *old != img => Err(Error::NotASimplicialMap(format!("{n}-simplex {k} receives images {old:?} and {img:?}"))),
                _ => {
                    images[n][k] = Some(img);
                    Ok(())
                }
            }
        };
        for ((n, k), img) in given {
            if *n > source.dim() || *k >= source.count(*n) || img.positions.len() != n + 1 || img.dim > *n || img.simplex >= target.count(img.dim) {
                return Err(Error::NotASimplicialMap(format!("malformed image of {n}-simplex {k}")));
            }
            assign(&mut images, *n, *k, img.clone())?;
        }
        for n in (1..=source.dim()).rev() {
            for k in 0..source.count(n) {
                if let Some(img) = images[n][k].clone() {
                    for i in 0..=n {
                        let f = source.face(n, k, i);
                        assign(&mut images, n - 1, f, img.face(&target, i))?;
                    }
                }
            }
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(n, imgs)| {
                imgs.into_iter()
                    .enumerate()
                    .map(|(k, i)| i.ok_or_else(|| Error::NotASimplicialMap(format!("no image for {n}-simplex {k}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        SimplicialMap::new(source, target, images)
    }

    pub fn identity(x: Arc<DeltaComplex>) -> SimplicialMap {
        let images = (0..=x.dim())
            .map(|n| (0..x.count(n)).map(|k| SimplexImage { dim: n, simplex: k, positions: (0..=n).collect() }).collect())
            .collect();
        SimplicialMap { source: x.clone(), target: x, images }
    }

    /// Map sending everything to vertex `v`.
    pub fn constant(source: Arc<DeltaComplex>, target: Arc<DeltaComplex>, v: usize) -> Result<SimplicialMap> {
        let images = (0..=source.dim())
            .map(|n| (0..source.count(n)).map(|_| SimplexImage { dim: 0, simplex: v, positions: vec![0; n + 1] }).collect())
            .collect();
        SimplicialMap::new(source, target, images)
    }

    pub fn source(&self) -> &Arc<DeltaComplex> {
        &self.source
    }

    pub fn target(&self) -> &Arc<DeltaComplex> {
        &self.target
    }

    pub fn image(&self, n: usize, k: usize) -> &SimplexImage {
        &self.images[n][k]
    }

    pub fn images(&self) -> &[Vec<SimplexImage>] {
        &self.images
    }

    pub fn vertex(&self, v: usize) -> usize {
        self.images[0][v].simplex
    }

    pub fn vertex_map(&self) -> Vec<usize> {
        self.images[0].iter().map(|i| i.simplex).collect()
    }

    /// Image of an edge as a target edge, or `None` if it collapses.
    pub fn edge(&self, e: usize) -> Option<usize> {
        let img = &self.images[1][e];
        (img.dim == 1).then_some(img.simplex)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SimplicialMap) -> Result<SimplicialMap> {
        if *self.target != *other.source {
            return Err(Error::NotASimplicialMap("composition of non-composable maps".into()));
        }
        let images = self
            .images
            .iter()
            .map(|imgs| {
                imgs.iter()
                    .map(|a| {
                        let b = &other.images[a.dim][a.simplex];
                        SimplexImage { dim: b.dim, simplex: b.simplex, positions: a.positions.iter().map(|&p| b.positions[p]).collect() }
                    })
                    .collect()
            })
            .collect();
        SimplicialMap::new(self.source.clone(), other.target.clone(), images)
    }

    pub fn is_identity(&self) -> bool {
        *self.source == *self.target
            && self.images.iter().enumerate().all(|(n, imgs)| {
                imgs.iter().enumerate().all(|(k, i)| i.dim == n && i.simplex == k && i.positions.iter().enumerate().all(|(a, &b)| a == b))
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::fixtures::*;

    #[test]
    fn rotation_of_triangle_boundary() {
        let c = Arc::new(circle3());
        let rot = SimplicialMap::from_vertex_map(c.clone(), c.clone(), &[1, 2, 0]).unwrap();
        // edge [0,2] ↦ [1,0] = edge 0 reversed
        assert_eq!(rot.image(1, 1), &SimplexImage { dim: 1, simplex: 0, positions: vec![1, 0] });
        assert_eq!(rot.image(1, 1).permutation_sign(), Some(Sign::Minus));
        let thrice = rot.then(&rot).unwrap().then(&rot).unwrap();
        assert!(thrice.is_identity());
    }

    #[test]
    fn collapse_is_degenerate() {
        let i = Arc::new(interval());
        let p = Arc::new(point());
        let c = SimplicialMap::constant(i, p, 0).unwrap();
        assert!(c.image(1, 0).is_degenerate());
        assert_eq!(c.edge(0), None);
        assert_eq!(c.image(1, 0).permutation_sign(), None);
    }

    #[test]
    fn fold_triangle_onto_edge() {
        let t = Arc::new(triangle());
        let i = Arc::new(interval());
        let f = SimplicialMap::from_vertex_map(t, i, &[0, 1, 1]).unwrap();
        assert_eq!(f.image(2, 0), &SimplexImage { dim: 1, simplex: 0, positions: vec![0, 1, 1] });
        assert_eq!(f.edge(2), None);
    }

    #[test]
    fn face_incompatible_images_rejected() {
        let i = Arc::new(interval());
        let images = vec![
            vec![SimplexImage { dim: 0, simplex: 0, positions: vec![0] }, SimplexImage { dim: 0, simplex: 0, positions: vec![0] }],
            vec![SimplexImage { dim: 1, simplex: 0, positions: vec![0, 1] }],
        ];
        assert!(matches!(SimplicialMap::new(i.clone(), i, images), Err(Error::NotASimplicialMap(_))));
    }

    #[test]
    fn ambiguous_vertex_map_rejected() {
        let r = Arc::new(rp2_min());
        let i = Arc::new(interval());
        assert!(SimplicialMap::from_vertex_map(i, r, &[0, 1]).is_err());
    }

    #[test]
    fn generated_from_top_simplices() {
        let x = Arc::new(rp2_min());
        let given: Vec<((usize, usize), SimplexImage)> =
            (0..2).map(|k| ((2, k), SimplexImage { dim: 2, simplex: k, positions: vec![0, 1, 2] })).collect();
        assert!(SimplicialMap::generated(x.clone(), x.clone(), &given).unwrap().is_identity());
        let clash = vec![given[0].clone(), ((2, 1), SimplexImage { dim: 2, simplex: 0, positions: vec![0, 1, 2] })];
        assert!(SimplicialMap::generated(x.clone(), x.clone(), &clash).is_err());
        assert!(SimplicialMap::generated(x.clone(), x, &given[..1]).is_err());
    }
}
