//! Simplicial homotopies on the shuffle cylinder `X × [0,1]`, the forced
//! lift `ζ_F` of a morphism along a homotopy, and the correction class
//! `c_F ∈ H⁰(X; ℤ/2)` relating the two ends.

use std::sync::Arc;

use crate::coefficients::{bullet, pullback, CoefficientSystem, Morphism, PairMorphism, ZeroClass};
use crate::complex::{cylinder, Cylinder, DeltaComplex, SimplicialMap};
use crate::error::{Error, Result};
use crate::sign::Sign;
use crate::twisted::induced_map;

/// A simplicial map `F: X × [0,1] → Y` together with its ends.
#[derive(Clone, Debug)]
pub struct Homotopy {
    cylinder: Arc<Cylinder>,
    map: SimplicialMap,
    ends: (SimplicialMap, SimplicialMap),
}

impl Homotopy {
    pub fn new(cylinder: Arc<Cylinder>, map: SimplicialMap) -> Result<Homotopy> {
        if **map.source() != **cylinder.complex() {
            return Err(Error::NotASimplicialMap("homotopy source is not the cylinder".into()));
        }
        let f0 = cylinder.iota0.then(&map)?;
        let f1 = cylinder.iota1.then(&map)?;
        Ok(Homotopy { cylinder, map, ends: (f0, f1) })
    }

    /// `F = f∘r`.
    pub fn constant(f: &SimplicialMap) -> Result<Homotopy> {
        let cyl = Arc::new(cylinder(f.source())?);
        let map = cyl.retraction.then(f)?;
        Homotopy::new(cyl, map)
    }

    pub fn cylinder(&self) -> &Cylinder {
        &self.cylinder
    }

    pub fn map(&self) -> &SimplicialMap {
        &self.map
    }

    pub fn base(&self) -> &Arc<DeltaComplex> {
        self.cylinder.base()
    }

    pub fn start(&self) -> &SimplicialMap {
        &self.ends.0
    }

    pub fn end(&self) -> &SimplicialMap {
        &self.ends.1
    }

    /// `F(v × [0,1])` as an edge of `Y`, `None` if the track is constant.
    pub fn track(&self, v: usize) -> Option<usize> {
        self.map.edge(self.cylinder.vertical_edge(v))
    }

    /// `Λ_Y(F(v × [0,1]))`.
    pub fn track_sign(&self, ly: &CoefficientSystem, v: usize) -> Sign {
        self.track(v).map_or(Sign::Plus, |e| ly.sign(e))
    }
}

/// The unique `ζ_F: Λ_X•θ → F*Λ_Y` restricting to `ζ₀` at the bottom.
pub fn lift_zeta(h: &Homotopy, lx: &CoefficientSystem, ly: &CoefficientSystem, zeta0: &[Sign]) -> Result<Morphism> {
    PairMorphism::new(h.start().clone(), lx.clone(), ly.clone(), zeta0.to_vec())?;
    let cyl = h.cylinder();
    let theta = CoefficientSystem::trivial(cyl.product.right().clone());
    let source = bullet(lx, &theta, &cyl.product)?;
    let target = pullback(h.map(), ly)?;
    let mut signs = vec![Sign::Plus; cyl.complex().vertex_count()];
    for v in 0..h.base().vertex_count() {
        signs[cyl.vertex(v, 0)] = zeta0[v];
        signs[cyl.vertex(v, 1)] = zeta0[v] * h.track_sign(ly, v);
    }
    Morphism::new(source, target, signs)
}

/// `c_F(x) = Λ_Y(F(x × t))·ζ₀(x)·ζ₁(x)`, checked to be constant on components.
pub fn correction_class(h: &Homotopy, lx: &CoefficientSystem, ly: &CoefficientSystem, zeta0: &[Sign], zeta1: &[Sign]) -> Result<ZeroClass> {
    PairMorphism::new(h.start().clone(), lx.clone(), ly.clone(), zeta0.to_vec())?;
    PairMorphism::new(h.end().clone(), lx.clone(), ly.clone(), zeta1.to_vec())?;
    let x = h.base();
    let signs: Vec<Sign> = (0..x.vertex_count()).map(|v| h.track_sign(ly, v) * zeta0[v] * zeta1[v]).collect();
    ZeroClass::from_vertex_signs(x, &signs)
}

/// Checks `(f₀,ζ₀)_* = (f₁,ζ₁)_* ∘ (1, c_F•1)_*` on `H_n`.
pub fn ends_agree_in_homology(
    h: &Homotopy,
    lx: &CoefficientSystem,
    ly: &CoefficientSystem,
    zeta0: &[Sign],
    zeta1: &[Sign],
    n: usize,
) -> Result<bool> {
    let c = correction_class(h, lx, ly, zeta0, zeta1)?;
    let p0 = PairMorphism::new(h.start().clone(), lx.clone(), ly.clone(), zeta0.to_vec())?;
    let p1 = PairMorphism::new(h.end().clone(), lx.clone(), ly.clone(), zeta1.to_vec())?;
    let correction = PairMorphism::identity(lx).act(&c);
    let lhs = induced_map(&p0, n)?;
    let rhs = induced_map(&correction, n)?.then(&induced_map(&p1, n)?)?;
    Ok(lhs == rhs)
}
