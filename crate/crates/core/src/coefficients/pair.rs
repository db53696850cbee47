use super::{morphism_violation, pullback, same_complex, CoefficientSystem, ZeroClass};
use crate::complex::SimplicialMap;
use crate::error::{Error, Result};
use crate::sign::Sign;

/// A map of pairs `(f, ζ): (X, Λ_X) → (Y, Λ_Y)`, with `ζ: Λ_X → f*Λ_Y`.
#[derive(Clone, Debug)]
pub struct PairMorphism {
    map: SimplicialMap,
    source: CoefficientSystem,
    target: CoefficientSystem,
    zeta: Vec<Sign>,
}

impl PairMorphism {
    pub fn new(map: SimplicialMap, source: CoefficientSystem, target: CoefficientSystem, zeta: Vec<Sign>) -> Result<PairMorphism> {
        if !same_complex(map.source(), source.complex()) || !same_complex(map.target(), target.complex()) {
            return Err(Error::InvalidInput("systems do not live on the map's source and target".into()));
        }
        if zeta.len() != source.complex().vertex_count() {
            return Err(Error::InvalidInput("vertex signs do not match the source".into()));
        }
        let pulled = pullback(&map, &target)?;
        if let Some(e) = morphism_violation(source.complex(), source.signs(), pulled.signs(), &zeta) {
            return Err(Error::NotAMorphism(e));
        }
        Ok(PairMorphism { map, source, target, zeta })
    }

    /// `(id, 1)` on `(X, Λ)`.
    pub fn identity(system: &CoefficientSystem) -> PairMorphism {
        let x = system.complex();
        PairMorphism {
            map: SimplicialMap::identity(x.clone()),
            source: system.clone(),
            target: system.clone(),
            zeta: vec![Sign::Plus; x.vertex_count()],
        }
    }

    pub fn map(&self) -> &SimplicialMap {
        &self.map
    }

    pub fn source(&self) -> &CoefficientSystem {
        &self.source
    }

    pub fn target(&self) -> &CoefficientSystem {
        &self.target
    }

    pub fn zeta(&self) -> &[Sign] {
        &self.zeta
    }

    /// `(g, ψ) ∘ (f, ζ) = (g∘f, ζ·(ψ∘f))`.
    pub fn then(&self, next: &PairMorphism) -> Result<PairMorphism> {
        if self.target != next.source {
            return Err(Error::InvalidInput("pair morphisms are not composable".into()));
        }
        let map = self.map.then(&next.map)?;
        let zeta = (0..self.zeta.len()).map(|v| self.zeta[v] * next.zeta[self.map.vertex(v)]).collect();
        Ok(PairMorphism { map, source: self.source.clone(), target: next.target.clone(), zeta })
    }

    /// `(f, −ζ)`.
    pub fn negate(&self) -> PairMorphism {
        PairMorphism { zeta: self.zeta.iter().map(|&s| -s).collect(), ..self.clone() }
    }

    /// `(f, c•ζ)`.
    pub fn act(&self, c: &ZeroClass) -> PairMorphism {
        let zeta = self.zeta.iter().enumerate().map(|(v, &s)| s * c.at(v)).collect();
        PairMorphism { zeta, ..self.clone() }
    }
}
