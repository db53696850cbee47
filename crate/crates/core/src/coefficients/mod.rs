//! ℤᵗ-systems ("sign per edge, every triangle commutes"), morphisms between
//! them, their twist classes in H¹(X; ℤ/2), and the constructions that build,
//! extend and transport systems.

mod extend;
mod pair;
mod twist;

pub use extend::{extend_from_subcomplex, extend_morphism, extend_system_and_map, ExtensionRoute, MorphismExtension};
pub use pair::PairMorphism;
pub use twist::{from_twist, is_equivalent, regauge, restrict_twist, twist, twist_classes, TwistClass};

use std::sync::Arc;

use crate::complex::{DeltaComplex, EdgePath, FactorStep, Product, SimplicialMap, Subcomplex};
use crate::error::{Error, Result};
use crate::sign::Sign;

pub(crate) fn same_complex(a: &Arc<DeltaComplex>, b: &Arc<DeltaComplex>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A groupoid homomorphism from the edge-path groupoid to {±1}, stored on
/// edges. Every 2-simplex σ satisfies `Λ(∂₂σ)·Λ(∂₀σ) = Λ(∂₁σ)`.
#[derive(Clone, Debug)]
pub struct CoefficientSystem {
    complex: Arc<DeltaComplex>,
    edge_sign: Vec<Sign>,
}

impl PartialEq for CoefficientSystem {
    fn eq(&self, other: &Self) -> bool {
        self.edge_sign == other.edge_sign && same_complex(&self.complex, &other.complex)
    }
}

impl Eq for CoefficientSystem {}

/// First 2-simplex violating the triangle condition, if any.
pub fn triangle_violation(x: &DeltaComplex, signs: &[Sign]) -> Option<usize> {
    (0..x.count(2)).find(|&t| {
        let f = x.faces(2, t);
        signs[f[2]] * signs[f[0]] != signs[f[1]]
    })
}

impl CoefficientSystem {
    pub fn new(complex: Arc<DeltaComplex>, edge_sign: Vec<Sign>) -> Result<CoefficientSystem> {
        if edge_sign.len() != complex.edge_count() {
            return Err(Error::InvalidInput(format!(
                "{} edge signs for {} edges",
                edge_sign.len(),
                complex.edge_count()
            )));
        }
        if let Some(t) = triangle_violation(&complex, &edge_sign) {
            return Err(Error::TriangleCondition(t));
        }
        Ok(CoefficientSystem { complex, edge_sign })
    }

    /// The system assigning +1 to every path.
    pub fn trivial(complex: Arc<DeltaComplex>) -> CoefficientSystem {
        let n = complex.edge_count();
        CoefficientSystem { complex, edge_sign: vec![Sign::Plus; n] }
    }

    /// Every system on `x`, in increasing order of the edge-sign bit pattern
    /// (edge 0 is the least significant bit). Intended for small complexes.
    pub fn enumerate(x: &Arc<DeltaComplex>) -> Vec<CoefficientSystem> {
        let e = x.edge_count();
        assert!(e < 24, "exhaustive enumeration over {e} edges");
        (0u32..1 << e)
            .filter_map(|bits| {
                let signs: Vec<Sign> = (0..e).map(|i| Sign::from_bit(bits >> i & 1 == 1)).collect();
                triangle_violation(x, &signs).is_none().then(|| CoefficientSystem { complex: x.clone(), edge_sign: signs })
            })
            .collect()
    }

    pub fn complex(&self) -> &Arc<DeltaComplex> {
        &self.complex
    }

    pub fn sign(&self, e: usize) -> Sign {
        self.edge_sign[e]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.edge_sign
    }

    pub fn is_trivial(&self) -> bool {
        self.edge_sign.iter().all(|s| s.is_plus())
    }

    /// Product of edge signs along the path; the constant path gives +1.
    pub fn evaluate(&self, path: &EdgePath) -> Sign {
        path.steps.iter().map(|s| self.edge_sign[s.edge]).product()
    }

    /// Transport along the edge joining vertex positions `a` and `b` of a simplex.
    pub fn within_simplex(&self, n: usize, k: usize, a: usize, b: usize) -> Sign {
        if a == b {
            Sign::Plus
        } else {
            self.edge_sign[self.complex.edge_of(n, k, a.min(b), a.max(b))]
        }
    }

    /// Edgewise product `Λ·Λ'` on the same complex (the diagonal pullback of `Λ • Λ'`).
    pub fn edgewise_product(&self, other: &CoefficientSystem) -> Result<CoefficientSystem> {
        if !same_complex(&self.complex, &other.complex) {
            return Err(Error::InvalidInput("systems live on different complexes".into()));
        }
        let signs = self.edge_sign.iter().zip(&other.edge_sign).map(|(&a, &b)| a * b).collect();
        Ok(CoefficientSystem { complex: self.complex.clone(), edge_sign: signs })
    }

    /// Restriction to a subcomplex, as a system on the subcomplex's own complex.
    pub fn restrict(&self, sub: &Subcomplex) -> Result<CoefficientSystem> {
        if !same_complex(&self.complex, sub.parent()) {
            return Err(Error::InvalidInput("subcomplex of a different complex".into()));
        }
        let signs = sub.parent_ids(1).iter().map(|&e| self.edge_sign[e]).collect();
        Ok(CoefficientSystem { complex: sub.complex().clone(), edge_sign: signs })
    }
}

/// A natural transformation `Λ₀ → Λ₁`: a sign per vertex with
/// `Λ₀(e)·Λ₁(e) = ζ(start)·ζ(end)` on every edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    source: CoefficientSystem,
    target: CoefficientSystem,
    vertex_sign: Vec<Sign>,
}

/// First edge on which `signs` fails to intertwine the two edge-sign lists.
pub(crate) fn morphism_violation(x: &DeltaComplex, source: &[Sign], target: &[Sign], signs: &[Sign]) -> Option<usize> {
    (0..x.edge_count()).find(|&e| {
        let (u, v) = x.edge_endpoints(e);
        source[e] * target[e] != signs[u] * signs[v]
    })
}

impl Morphism {
    pub fn new(source: CoefficientSystem, target: CoefficientSystem, vertex_sign: Vec<Sign>) -> Result<Morphism> {
        if !same_complex(&source.complex, &target.complex) {
            return Err(Error::InvalidInput("morphism between systems on different complexes".into()));
        }
        if vertex_sign.len() != source.complex.vertex_count() {
            return Err(Error::InvalidInput(format!(
                "{} vertex signs for {} vertices",
                vertex_sign.len(),
                source.complex.vertex_count()
            )));
        }
        if let Some(e) = morphism_violation(&source.complex, &source.edge_sign, &target.edge_sign, &vertex_sign) {
            return Err(Error::NotAMorphism(e));
        }
        Ok(Morphism { source, target, vertex_sign })
    }

    pub fn identity(system: &CoefficientSystem) -> Morphism {
        let n = system.complex.vertex_count();
        Morphism { source: system.clone(), target: system.clone(), vertex_sign: vec![Sign::Plus; n] }
    }

    /// All morphisms `Λ₀ → Λ₁` by exhaustive search over vertex signs.
    pub fn enumerate(source: &CoefficientSystem, target: &CoefficientSystem) -> Vec<Morphism> {
        let n = source.complex.vertex_count();
        assert!(n < 24, "exhaustive enumeration over {n} vertices");
        (0u32..1 << n)
            .filter_map(|bits| {
                let signs = (0..n).map(|i| Sign::from_bit(bits >> i & 1 == 1)).collect();
                Morphism::new(source.clone(), target.clone(), signs).ok()
            })
            .collect()
    }

    pub fn source(&self) -> &CoefficientSystem {
        &self.source
    }

    pub fn target(&self) -> &CoefficientSystem {
        &self.target
    }

    pub fn signs(&self) -> &[Sign] {
        &self.vertex_sign
    }

    pub fn at(&self, v: usize) -> Sign {
        self.vertex_sign[v]
    }

    /// `next ∘ self` for `self: Λ₀ → Λ₁`, `next: Λ₁ → Λ₂`.
    pub fn then(&self, next: &Morphism) -> Result<Morphism> {
        if self.target != next.source {
            return Err(Error::InvalidInput("morphisms are not composable".into()));
        }
        let signs = self.vertex_sign.iter().zip(&next.vertex_sign).map(|(&a, &b)| a * b).collect();
        Ok(Morphism { source: self.source.clone(), target: next.target.clone(), vertex_sign: signs })
    }

    /// The same signs read as a morphism `Λ₁ → Λ₀`.
    pub fn inverse(&self) -> Morphism {
        Morphism { source: self.target.clone(), target: self.source.clone(), vertex_sign: self.vertex_sign.clone() }
    }

    /// Restriction to a subcomplex.
    pub fn restrict(&self, sub: &Subcomplex) -> Result<Morphism> {
        let signs = sub.parent_ids(0).iter().map(|&v| self.vertex_sign[v]).collect();
        Morphism::new(self.source.restrict(sub)?, self.target.restrict(sub)?, signs)
    }
}

/// An element of H⁰(X; ℤ/2): a sign per path component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroClass {
    component: Vec<usize>,
    component_sign: Vec<Sign>,
}

impl ZeroClass {
    pub fn new(x: &DeltaComplex, component_sign: Vec<Sign>) -> Result<ZeroClass> {
        let component = x.component_index();
        let n = x.component_count();
        if component_sign.len() != n {
            return Err(Error::InvalidInput(format!("{} signs for {n} components", component_sign.len())));
        }
        Ok(ZeroClass { component, component_sign })
    }

    pub fn constant(x: &DeltaComplex, s: Sign) -> ZeroClass {
        ZeroClass { component: x.component_index(), component_sign: vec![s; x.component_count()] }
    }

    /// Reads a vertex function that must be constant on components.
    pub fn from_vertex_signs(x: &DeltaComplex, signs: &[Sign]) -> Result<ZeroClass> {
        let component = x.component_index();
        let mut out: Vec<Option<Sign>> = vec![None; x.component_count()];
        for (v, &s) in signs.iter().enumerate() {
            let c = component[v];
            match out[c] {
                None => out[c] = Some(s),
                Some(t) if t != s => return Err(Error::NotConstantOnComponent(c)),
                _ => {}
            }
        }
        Ok(ZeroClass { component, component_sign: out.into_iter().map(|s| s.unwrap_or(Sign::Plus)).collect() })
    }

    pub fn component_signs(&self) -> &[Sign] {
        &self.component_sign
    }

    pub fn at(&self, v: usize) -> Sign {
        self.component_sign[self.component[v]]
    }

    pub fn is_trivial(&self) -> bool {
        self.component_sign.iter().all(|s| s.is_plus())
    }

    pub fn vertex_signs(&self) -> Vec<Sign> {
        self.component.iter().map(|&c| self.component_sign[c]).collect()
    }

    /// `c•1_Λ` as a morphism `Λ → Λ`.
    pub fn as_morphism(&self, system: &CoefficientSystem) -> Result<Morphism> {
        Morphism::new(system.clone(), system.clone(), self.vertex_signs())
    }
}

/// `c•ζ(x) = c(x)·ζ(x)`.
pub fn torsor_act(c: &ZeroClass, zeta: &Morphism) -> Morphism {
    let signs = zeta.vertex_sign.iter().enumerate().map(|(v, &s)| s * c.at(v)).collect();
    Morphism { source: zeta.source.clone(), target: zeta.target.clone(), vertex_sign: signs }
}

/// `ζ ↦ −ζ`.
pub fn involve(zeta: &Morphism) -> Morphism {
    let signs = zeta.vertex_sign.iter().map(|&s| -s).collect();
    Morphism { source: zeta.source.clone(), target: zeta.target.clone(), vertex_sign: signs }
}

/// `f*Λ_Y`: an edge takes the sign of its image edge, +1 if it collapses.
pub fn pullback(f: &SimplicialMap, system: &CoefficientSystem) -> Result<CoefficientSystem> {
    if !same_complex(f.target(), &system.complex) {
        return Err(Error::InvalidInput("system does not live on the map's target".into()));
    }
    let signs = (0..f.source().edge_count()).map(|e| f.edge(e).map_or(Sign::Plus, |t| system.sign(t))).collect();
    CoefficientSystem::new(f.source().clone(), signs)
}

/// `Λ₀ • Λ₁` on the shuffle product.
pub fn bullet(left: &CoefficientSystem, right: &CoefficientSystem, prod: &Product) -> Result<CoefficientSystem> {
    if !same_complex(&left.complex, prod.left()) || !same_complex(&right.complex, prod.right()) {
        return Err(Error::InvalidInput("systems do not live on the product's factors".into()));
    }
    let step = |s: FactorStep, sys: &CoefficientSystem| match s {
        FactorStep::Constant(_) => Sign::Plus,
        FactorStep::Edge(e) => sys.sign(e),
    };
    let signs = (0..prod.complex().edge_count())
        .map(|e| {
            let (a, b) = prod.edge_steps(e);
            step(a, left) * step(b, right)
        })
        .collect();
    CoefficientSystem::new(prod.complex().clone(), signs)
}
