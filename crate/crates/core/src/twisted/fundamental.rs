use std::sync::Arc;

use serde::Serialize;

use super::{cap, chain_pushforward, cohomology, homology, HomologyMap};
use crate::coefficients::{from_twist, is_equivalent, pullback, twist, twist_classes, CoefficientSystem, PairMorphism, TwistClass};
use crate::complex::{polarize, DeltaComplex, SimplicialMap};
use crate::error::{Error, Result};
use crate::sign::Sign;

/// The unique twist `ω` with `H_m(M; ℤ^ω) ≅ ℤ`, its system (trivial along
/// the polarization forest) and a generating cycle `[M]`.
#[derive(Clone, Debug)]
pub struct FundamentalData {
    pub dimension: usize,
    pub twist: TwistClass,
    pub system: CoefficientSystem,
    /// Generator, normalized to be positive on its lowest-id nonzero simplex.
    pub cycle: Vec<i64>,
    /// Position of the twist among the enumerated classes.
    pub class_index: usize,
}

#[derive(Serialize)]
struct Summary<'a> {
    dimension: usize,
    class_index: usize,
    twist_support: Vec<usize>,
    edge_signs: &'a [Sign],
    cycle: &'a [i64],
}

impl Serialize for FundamentalData {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Summary {
            dimension: self.dimension,
            class_index: self.class_index,
            twist_support: self.twist.support(),
            edge_signs: self.system.signs(),
            cycle: &self.cycle,
        }
        .serialize(s)
    }
}

/// Searches every class in `H¹(M; ℤ/2)` for the one with `H_m ≅ ℤ`.
pub fn fundamental_twist(m: &Arc<DeltaComplex>, dimension: usize) -> Result<Option<FundamentalData>> {
    if m.component_count() != 1 {
        return Err(Error::InvalidInput("fundamental classes need a connected complex".into()));
    }
    if dimension > m.dim() {
        return Ok(None);
    }
    let p = polarize(m, None)?;
    let ones = vec![Sign::Plus; m.vertex_count()];
    let mut found = Vec::new();
    for (i, omega) in twist_classes(m, &p).into_iter().enumerate() {
        let system = from_twist(&p, &omega, &ones)?;
        let h = homology(&system, dimension)?;
        if h.rank() == 1 && h.torsion().is_empty() {
            found.push((i, omega, system, h.basis()[0].clone()));
        }
    }
    if found.len() > 1 {
        return Err(Error::NotUnique(found.iter().map(|f| f.0).collect()));
    }
    Ok(found.pop().map(|(class_index, twist, system, mut cycle)| {
        if cycle.iter().find(|&&c| c != 0).is_some_and(|&c| c < 0) {
            cycle.iter_mut().for_each(|c| *c = -*c);
        }
        FundamentalData { dimension, twist, system, cycle, class_index }
    }))
}

/// `∩[M]: H^r(M; ℤ^{Λ′}) → H_{m−r}(M; ℤ^{Λ′Λ})`.
pub fn duality_map(fd: &FundamentalData, other: &CoefficientSystem, r: usize) -> Result<HomologyMap> {
    let m = fd.dimension;
    if r > m {
        return Err(Error::DegreeMismatch(format!("degree {r} exceeds the dimension {m}")));
    }
    let source = cohomology(other, r)?;
    let target = homology(&other.edgewise_product(&fd.system)?, m - r)?;
    HomologyMap::from_images(&source, &target, |phi| cap(other, &fd.system, phi, r, &fd.cycle, m))
}

pub fn duality_check(fd: &FundamentalData, other: &CoefficientSystem, r: usize) -> Result<bool> {
    duality_map(fd, other, r)?.is_isomorphism()
}

/// The integer `d` with `(f, ζ)_*[M] = d·[N]`. Without `ζ`, the morphism
/// found by [`is_equivalent`] is used.
pub fn degree(f: &SimplicialMap, zeta: Option<&[Sign]>, fm: &FundamentalData, fn_: &FundamentalData) -> Result<i64> {
    let m = fm.dimension;
    if fn_.dimension != m {
        return Err(Error::DegreeMismatch(format!("dimensions {m} and {} differ", fn_.dimension)));
    }
    let pulled = pullback(f, &fn_.system)?;
    if twist(&pulled, fm.twist.polarization()) != fm.twist {
        return Err(Error::TwistNotPreserved);
    }
    let zeta = match zeta {
        Some(z) => z.to_vec(),
        None => is_equivalent(&fm.system, &pulled).ok_or(Error::TwistNotPreserved)?.signs().to_vec(),
    };
    let pair = PairMorphism::new(f.clone(), fm.system.clone(), fn_.system.clone(), zeta)?;
    let image = chain_pushforward(&pair)?[m].mul_vec(&fm.cycle)?;
    let h = homology(&fn_.system, m)?;
    let generator = h.coordinates(&fn_.cycle)?[0];
    Ok(h.coordinates(&image)?[0] * generator)
}
