use std::sync::Arc;

use super::{same_complex, triangle_violation, CoefficientSystem, Morphism};
use crate::complex::{polarize, DeltaComplex, Polarization, Subcomplex};
use crate::error::{Error, Result};
use crate::linalg::gf2_nullspace;
use crate::sign::Sign;

/// A ℤ/2 1-cocycle vanishing on the forest edges of its polarization. For a
/// fixed polarization each class in H¹(X; ℤ/2) has exactly one such
/// representative, so equality of classes is equality of bit vectors.
#[derive(Clone, Debug)]
pub struct TwistClass {
    complex: Arc<DeltaComplex>,
    polarization: Polarization,
    bits: Vec<bool>,
}

impl PartialEq for TwistClass {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits && self.polarization == other.polarization && same_complex(&self.complex, &other.complex)
    }
}

impl Eq for TwistClass {}

fn cocycle_violation(x: &DeltaComplex, bits: &[bool]) -> Option<usize> {
    (0..x.count(2)).find(|&t| {
        let f = x.faces(2, t);
        bits[f[0]] ^ bits[f[1]] ^ bits[f[2]]
    })
}

impl TwistClass {
    pub fn new(complex: Arc<DeltaComplex>, polarization: Polarization, bits: Vec<bool>) -> Result<TwistClass> {
        if bits.len() != complex.edge_count() || polarization.vertex_count() != complex.vertex_count() {
            return Err(Error::InvalidInput("twist data does not match the complex".into()));
        }
        if let Some(e) = polarization.forest_edges().into_iter().find(|&e| bits[e]) {
            return Err(Error::InvalidInput(format!("twist bit set on forest edge {e}")));
        }
        if let Some(t) = cocycle_violation(&complex, &bits) {
            return Err(Error::TriangleCondition(t));
        }
        Ok(TwistClass { complex, polarization, bits })
    }

    pub fn zero(complex: Arc<DeltaComplex>, polarization: Polarization) -> TwistClass {
        let n = complex.edge_count();
        TwistClass { complex, polarization, bits: vec![false; n] }
    }

    pub fn complex(&self) -> &Arc<DeltaComplex> {
        &self.complex
    }

    pub fn polarization(&self) -> &Polarization {
        &self.polarization
    }

    /// One bit per edge; always clear on forest edges.
    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Edges whose bit is set.
    pub fn support(&self) -> Vec<usize> {
        (0..self.bits.len()).filter(|&e| self.bits[e]).collect()
    }

    pub fn is_zero(&self) -> bool {
        !self.bits.iter().any(|&b| b)
    }

    /// Sum of two classes over the same polarization.
    pub fn add(&self, other: &TwistClass) -> Result<TwistClass> {
        if *self.polarization() != *other.polarization() || !same_complex(&self.complex, &other.complex) {
            return Err(Error::InvalidInput("twist classes over different polarizations".into()));
        }
        let bits = self.bits.iter().zip(&other.bits).map(|(&a, &b)| a ^ b).collect();
        Ok(TwistClass { complex: self.complex.clone(), polarization: self.polarization.clone(), bits })
    }
}

/// The forest-gauged twist of `Λ`.
pub fn twist(system: &CoefficientSystem, p: &Polarization) -> TwistClass {
    let x = system.complex();
    let gauge: Vec<bool> = (0..x.vertex_count()).map(|v| system.evaluate(&p.forest_path(x, v)).bit()).collect();
    let bits = (0..x.edge_count())
        .map(|e| {
            let (u, v) = x.edge_endpoints(e);
            system.sign(e).bit() ^ gauge[u] ^ gauge[v]
        })
        .collect();
    TwistClass { complex: x.clone(), polarization: p.clone(), bits }
}

/// Every class in H¹(X; ℤ/2) over `p`. Class `k` is the sum of the nullspace
/// basis vectors selected by the bits of `k`; class 0 is zero.
pub fn twist_classes(x: &Arc<DeltaComplex>, p: &Polarization) -> Vec<TwistClass> {
    let free: Vec<usize> = (0..x.edge_count()).filter(|&e| !p.is_forest_edge(e)).collect();
    let mut column = vec![usize::MAX; x.edge_count()];
    for (i, &e) in free.iter().enumerate() {
        column[e] = i;
    }
    let rows: Vec<Vec<bool>> = (0..x.count(2))
        .map(|t| {
            let mut row = vec![false; free.len()];
            for &e in x.faces(2, t) {
                if column[e] != usize::MAX {
                    row[column[e]] ^= true;
                }
            }
            row
        })
        .collect();
    let basis = gf2_nullspace(&rows, free.len());
    assert!(basis.len() < 24, "H¹ too large to enumerate");
    (0u32..1 << basis.len())
        .map(|k| {
            let mut bits = vec![false; x.edge_count()];
            for (i, b) in basis.iter().enumerate() {
                if k >> i & 1 == 1 {
                    for (j, &set) in b.iter().enumerate() {
                        bits[free[j]] ^= set;
                    }
                }
            }
            TwistClass { complex: x.clone(), polarization: p.clone(), bits }
        })
        .collect()
}

/// The system of the main lemma: `Λ(e) = f(u)·(−1)^{ω(e)}·f(v)`. If `p`
/// differs from the polarization `ω` was gauged over, `ω` is regauged first.
pub fn from_twist(p: &Polarization, omega: &TwistClass, f: &[Sign]) -> Result<CoefficientSystem> {
    let x = omega.complex();
    if f.len() != x.vertex_count() || p.vertex_count() != x.vertex_count() {
        return Err(Error::InvalidInput("vertex function does not match the complex".into()));
    }
    if let Some(&b) = p.bases().iter().find(|&&b| !f[b].is_plus()) {
        return Err(Error::BadBaseValue(b));
    }
    let owned;
    let omega = if omega.polarization() == p {
        omega
    } else {
        owned = regauge(omega, p)?;
        &owned
    };
    let signs: Vec<Sign> = (0..x.edge_count())
        .map(|e| {
            let (u, v) = x.edge_endpoints(e);
            f[u] * Sign::from_bit(omega.bits[e]) * f[v]
        })
        .collect();
    debug_assert!(triangle_violation(x, &signs).is_none());
    CoefficientSystem::new(x.clone(), signs)
}

/// The same class gauged over another polarization.
pub fn regauge(omega: &TwistClass, p: &Polarization) -> Result<TwistClass> {
    if omega.polarization() == p {
        return Ok(omega.clone());
    }
    let ones = vec![Sign::Plus; omega.complex.vertex_count()];
    let system = from_twist(omega.polarization(), omega, &ones)?;
    Ok(twist(&system, p))
}

/// The restriction of a class to a subcomplex, gauged over the
/// subcomplex's default polarization.
pub fn restrict_twist(omega: &TwistClass, sub: &Subcomplex) -> Result<TwistClass> {
    let ones = vec![Sign::Plus; omega.complex.vertex_count()];
    let system = from_twist(omega.polarization(), omega, &ones)?.restrict(sub)?;
    let p = polarize(sub.complex(), None)?;
    Ok(twist(&system, &p))
}

/// A morphism `Λ₀ → Λ₁` when the twists agree.
pub fn is_equivalent(l0: &CoefficientSystem, l1: &CoefficientSystem) -> Option<Morphism> {
    let x = l0.complex();
    if !same_complex(x, l1.complex()) {
        return None;
    }
    let p = polarize(x, None).expect("default polarization");
    if twist(l0, &p) != twist(l1, &p) {
        return None;
    }
    let zeta = (0..x.vertex_count())
        .map(|v| {
            let path = p.forest_path(x, v);
            l0.evaluate(&path) * l1.evaluate(&path)
        })
        .collect();
    Some(Morphism::new(l0.clone(), l1.clone(), zeta).expect("equal twists give a morphism"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::fixtures::*;

    fn klein() -> DeltaComplex {
        // one vertex, edges a, b, c; T0 = (c, a, b), T1 = (b, c, a) by (∂0, ∂1, ∂2)
        DeltaComplex::new(vec![1, 3, 2], vec![vec![], vec![vec![0, 0]; 3], vec![vec![2, 0, 1], vec![1, 2, 0]]]).unwrap()
    }

    #[test]
    fn trivial_system_has_zero_twist() {
        let x = Arc::new(rp2_min());
        let p = polarize(&x, None).unwrap();
        assert!(twist(&CoefficientSystem::trivial(x), &p).is_zero());
    }

    #[test]
    fn single_negative_edge_on_circle() {
        let x = Arc::new(circle3());
        let p = polarize(&x, None).unwrap();
        for e in 0..3 {
            let mut s = vec![Sign::Plus; 3];
            s[e] = Sign::Minus;
            let w = twist(&CoefficientSystem::new(x.clone(), s).unwrap(), &p);
            assert_eq!(w.support(), vec![2]);
        }
    }

    #[test]
    fn klein_has_four_classes() {
        let x = Arc::new(klein());
        let p = polarize(&x, None).unwrap();
        let systems = CoefficientSystem::enumerate(&x);
        assert_eq!(systems.len(), 4);
        let twists: Vec<TwistClass> = systems.iter().map(|s| twist(s, &p)).collect();
        for i in 0..4 {
            for j in 0..i {
                assert_ne!(twists[i], twists[j]);
            }
        }
        let classes = twist_classes(&x, &p);
        assert_eq!(classes.len(), 4);
        assert!(classes[0].is_zero());
        for w in &twists {
            assert!(classes.contains(w));
        }
    }

    #[test]
    fn equivalence_on_circle() {
        let x = Arc::new(circle3());
        let a = CoefficientSystem::new(x.clone(), vec![Sign::Minus, Sign::Plus, Sign::Plus]).unwrap();
        let b = CoefficientSystem::new(x.clone(), vec![Sign::Plus, Sign::Plus, Sign::Minus]).unwrap();
        let m = is_equivalent(&a, &a).unwrap();
        assert!(m.signs().iter().all(|s| s.is_plus()));
        assert!(is_equivalent(&a, &b).is_some());
        assert!(is_equivalent(&CoefficientSystem::trivial(x), &a).is_none());
    }

    #[test]
    fn main_lemma_examples() {
        let x = Arc::new(circle3());
        let p = polarize(&x, None).unwrap();
        let ones = vec![Sign::Plus; 3];
        let classes = twist_classes(&x, &p);
        assert!(from_twist(&p, &classes[0], &ones).unwrap().is_trivial());
        let l = from_twist(&p, &classes[1], &ones).unwrap();
        assert_eq!(l.signs(), &[Sign::Plus, Sign::Plus, Sign::Minus]);
        assert_eq!(twist(&l, &p), classes[1]);
        let f = vec![Sign::Plus, Sign::Minus, Sign::Plus];
        let l = from_twist(&p, &classes[0], &f).unwrap();
        // forest edges are 0 = (0,1) and 1 = (0,2); only edges touching v1 flip
        assert_eq!(l.signs(), &[Sign::Minus, Sign::Plus, Sign::Minus]);
        for v in 0..3 {
            assert_eq!(l.evaluate(&p.forest_path(&x, v)), f[v]);
        }
        assert_eq!(from_twist(&p, &classes[0], &[Sign::Minus, Sign::Plus, Sign::Plus]), Err(Error::BadBaseValue(0)));
    }

    #[test]
    fn regauge_preserves_class() {
        let x = Arc::new(circle3());
        let p = polarize(&x, None).unwrap();
        let q = polarize(&x, Some(&[2])).unwrap();
        let w = &twist_classes(&x, &p)[1];
        let w2 = regauge(w, &q).unwrap();
        assert_eq!(w2.polarization(), &q);
        assert_eq!(regauge(&w2, &p).unwrap(), *w);
        assert!(!w2.is_zero());
    }
}
