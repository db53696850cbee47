use std::sync::Arc;

use super::twist::{from_twist, is_equivalent, regauge, restrict_twist, twist};
use super::{same_complex, CoefficientSystem, Morphism, TwistClass};
use crate::complex::{polarize, DeltaComplex, EdgePath, Polarization, Subcomplex};
use crate::error::{Error, Result};
use crate::sign::Sign;

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut a: usize) -> usize {
        while self.0[a] != a {
            self.0[a] = self.0[self.0[a]];
            a = self.0[a];
        }
        a
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// Polarization of `X` that restricts to `p_a` on `A`: the forest of `A` is
/// grown to a spanning forest of `X`, and each component of `X` meeting `A`
/// is based at the smallest base of `A` it contains.
fn extended_polarization(x: &DeltaComplex, a: &Subcomplex, p_a: &Polarization) -> Result<Polarization> {
    let mut uf = UnionFind((0..x.vertex_count()).collect());
    let mut forest = Vec::new();
    let a_forest = p_a.forest_edges().into_iter().map(|e| a.to_parent(1, e));
    for e in a_forest.chain(0..x.edge_count()) {
        let (u, v) = x.edge_endpoints(e);
        if uf.union(u, v) {
            forest.push(e);
        }
    }
    let component = x.component_index();
    let mut bases: Vec<Option<usize>> = vec![None; x.component_count()];
    for &b in p_a.bases() {
        let b = a.to_parent(0, b);
        let slot = &mut bases[component[b]];
        if slot.is_none_or(|c| b < c) {
            *slot = Some(b);
        }
    }
    let bases: Vec<usize> = x
        .components()
        .iter()
        .zip(bases)
        .map(|(members, b)| b.unwrap_or(members[0]))
        .collect();
    Polarization::from_forest(x, &bases, &forest)
}

/// A system on `X` with twist `ω_X` restricting to `Λ_A` on `A`.
pub fn extend_from_subcomplex(a: &Subcomplex, l_a: &CoefficientSystem, omega: &TwistClass) -> Result<CoefficientSystem> {
    let x = a.parent();
    if !same_complex(l_a.complex(), a.complex()) || !same_complex(omega.complex(), x) {
        return Err(Error::InvalidInput("systems do not live on the subcomplex and its parent".into()));
    }
    let p_a = polarize(a.complex(), None)?;
    if restrict_twist(omega, a)? != twist(l_a, &p_a) {
        return Err(Error::TwistMismatch("the class does not restrict to the twist of the subcomplex system".into()));
    }
    let p = extended_polarization(x, a, &p_a)?;
    let mut f = vec![Sign::Plus; x.vertex_count()];
    for (local, &parent) in a.parent_ids(0).iter().enumerate() {
        f[parent] = l_a.evaluate(&p_a.forest_path(a.complex(), local));
    }
    let system = from_twist(&p, &regauge(omega, &p)?, &f)?;
    if system.restrict(a)? != *l_a {
        return Err(Error::TwistMismatch("extension does not restrict to the subcomplex system".into()));
    }
    Ok(system)
}

/// Which hypothesis certified an extension of a morphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtensionRoute {
    /// The mismatch between `ζ_A` and a global morphism is constant on each component of `X`.
    ComponentSigns,
    /// Every supplied anchor path satisfies `Λ₀(λ)·Λ₁(λ) = ζ_A(λ(0))·ζ_A(λ(1))`.
    AnchorPaths,
}

#[derive(Clone, Debug)]
pub struct MorphismExtension {
    pub morphism: Morphism,
    pub route: ExtensionRoute,
}

/// Extends `ζ_A: Λ₀|_A → Λ₁|_A` to all of `X`. Anchor paths, when given,
/// join vertices of `A` through `X` and are checked individually.
pub fn extend_morphism(
    a: &Subcomplex,
    l0: &CoefficientSystem,
    l1: &CoefficientSystem,
    zeta_a: &Morphism,
    anchors: &[EdgePath],
) -> Result<MorphismExtension> {
    let x = a.parent();
    if !same_complex(l0.complex(), x) || !same_complex(l1.complex(), x) {
        return Err(Error::InvalidInput("systems do not live on the parent complex".into()));
    }
    if *zeta_a.source() != l0.restrict(a)? || *zeta_a.target() != l1.restrict(a)? {
        return Err(Error::InvalidInput("morphism is not between the restricted systems".into()));
    }
    let global = is_equivalent(l0, l1).ok_or_else(|| Error::TwistMismatch("the two systems have different twists".into()))?;
    let a_component = a.complex().component_index();
    let local_vertex = |v: usize| {
        a.to_local(0, v).ok_or_else(|| Error::InvalidInput(format!("anchor endpoint {v} is not in the subcomplex")))
    };
    for path in anchors {
        let (s, t) = (local_vertex(path.start)?, local_vertex(path.end)?);
        EdgePath::new(x, path.start, path.steps.clone())?;
        let lhs = l0.evaluate(path) * l1.evaluate(path);
        if lhs != zeta_a.at(s) * zeta_a.at(t) {
            let mut pair = vec![a_component[s], a_component[t]];
            pair.dedup();
            return Err(Error::NotExtendable(pair));
        }
    }
    // c(A_i) = ζ_A·ζ' on each component of A; it must be constant along X-components.
    let mut c_a: Vec<Option<Sign>> = vec![None; a.complex().component_count()];
    for (local, &v) in a.parent_ids(0).iter().enumerate() {
        c_a[a_component[local]] = Some(zeta_a.at(local) * global.at(v));
    }
    let x_component = x.component_index();
    let mut c_x: Vec<Option<(Sign, usize)>> = vec![None; x.component_count()];
    let mut conflicts = Vec::new();
    for (local, &v) in a.parent_ids(0).iter().enumerate() {
        let i = a_component[local];
        let s = c_a[i].expect("set above");
        match c_x[x_component[v]] {
            None => c_x[x_component[v]] = Some((s, i)),
            Some((t, j)) if t != s => conflicts.extend([j, i]),
            _ => {}
        }
    }
    if !conflicts.is_empty() {
        conflicts.sort_unstable();
        conflicts.dedup();
        return Err(Error::NotExtendable(conflicts));
    }
    let signs = (0..x.vertex_count())
        .map(|v| global.at(v) * c_x[x_component[v]].map_or(Sign::Plus, |(s, _)| s))
        .collect();
    let morphism = Morphism::new(l0.clone(), l1.clone(), signs)?;
    let route = if anchors.is_empty() { ExtensionRoute::ComponentSigns } else { ExtensionRoute::AnchorPaths };
    Ok(MorphismExtension { morphism, route })
}

/// Given `ζ: Λ_A → Λ₀|_A`, builds `Λ₁` on `X` with `Λ₁|_A = Λ_A` and an
/// extension `Λ₁ → Λ₀` of `ζ`.
pub fn extend_system_and_map(
    l0: &CoefficientSystem,
    a: &Subcomplex,
    l_a: &CoefficientSystem,
    zeta: &Morphism,
) -> Result<(CoefficientSystem, Morphism)> {
    let x: &Arc<DeltaComplex> = a.parent();
    if !same_complex(l0.complex(), x) || !same_complex(l_a.complex(), a.complex()) {
        return Err(Error::InvalidInput("systems do not live on the subcomplex and its parent".into()));
    }
    if zeta.source() != l_a || *zeta.target() != l0.restrict(a)? {
        return Err(Error::InvalidInput("morphism is not Λ_A → Λ₀|_A".into()));
    }
    let p = polarize(x, None)?;
    let f0: Vec<Sign> = (0..x.vertex_count()).map(|v| l0.evaluate(&p.forest_path(x, v))).collect();
    // k normalizes f1 to +1 at bases lying in A
    let k: Vec<Sign> = p.bases().iter().map(|&b| a.to_local(0, b).map_or(Sign::Plus, |l| zeta.at(l))).collect();
    let mut f1 = vec![Sign::Plus; x.vertex_count()];
    for (local, &v) in a.parent_ids(0).iter().enumerate() {
        f1[v] = f0[v] * zeta.at(local) * k[p.component_of(v)];
    }
    let l1 = from_twist(&p, &twist(l0, &p), &f1)?;
    let signs = (0..x.vertex_count()).map(|v| f1[v] * f0[v] * k[p.component_of(v)]).collect();
    let morphism = Morphism::new(l1.clone(), l0.clone(), signs)?;
    if l1.restrict(a)? != *l_a || morphism.restrict(a)?.signs() != zeta.signs() {
        return Err(Error::TwistMismatch("Λ_A is not equivalent to the restriction of Λ₀".into()));
    }
    Ok((l1, morphism))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::{pullback, twist_classes};
    use crate::complex::fixtures::*;
    use crate::complex::{cylinder, Direction, Step};

    fn endpoints() -> (Arc<DeltaComplex>, Subcomplex) {
        let x = Arc::new(interval());
        let a = Subcomplex::generated_by(x.clone(), &[(0, 0), (0, 1)]).unwrap();
        (x, a)
    }

    #[test]
    fn extend_system_from_whole_complex() {
        let x = Arc::new(circle3());
        let l = CoefficientSystem::new(x.clone(), vec![Sign::Minus, Sign::Plus, Sign::Plus]).unwrap();
        let p = polarize(&x, None).unwrap();
        let a = Subcomplex::whole(x.clone());
        let la = l.restrict(&a).unwrap();
        assert_eq!(extend_from_subcomplex(&a, &la, &twist(&l, &p)).unwrap(), l);
    }

    #[test]
    fn extend_one_negative_edge_untwisted() {
        let x = Arc::new(circle3());
        let p = polarize(&x, None).unwrap();
        for e in 0..3 {
            let a = Subcomplex::generated_by(x.clone(), &[(1, e)]).unwrap();
            let la = CoefficientSystem::new(a.complex().clone(), vec![Sign::Minus]).unwrap();
            let zero = &twist_classes(&x, &p)[0];
            let l = extend_from_subcomplex(&a, &la, zero).unwrap();
            assert_eq!(l.sign(e), Sign::Minus);
            assert!(twist(&l, &p).is_zero());
        }
    }

    #[test]
    fn extend_from_cylinder_end() {
        let base = Arc::new(circle3());
        let cyl = cylinder(&base).unwrap();
        let x = cyl.complex().clone();
        let ends: Vec<(usize, usize)> = (0..3).map(|e| (1, cyl.iota0.edge(e).unwrap())).collect();
        let a = Subcomplex::generated_by(x.clone(), &ends).unwrap();
        let twisted = CoefficientSystem::new(base.clone(), vec![Sign::Plus, Sign::Minus, Sign::Plus]).unwrap();
        let global = pullback(&cyl.retraction, &twisted).unwrap();
        let la = global.restrict(&a).unwrap();
        let p = polarize(&x, None).unwrap();
        let l = extend_from_subcomplex(&a, &la, &twist(&global, &p)).unwrap();
        assert_eq!(l.restrict(&a).unwrap(), la);
        assert_eq!(twist(&l, &p), twist(&global, &p));
        let zero = TwistClass::zero(x.clone(), p);
        assert!(matches!(extend_from_subcomplex(&a, &la, &zero), Err(Error::TwistMismatch(_))));
    }

    #[test]
    fn interval_endpoint_parity() {
        let (x, a) = endpoints();
        let t = CoefficientSystem::trivial(x.clone());
        let ta = t.restrict(&a).unwrap();
        let bad = Morphism::new(ta.clone(), ta.clone(), vec![Sign::Plus, Sign::Minus]).unwrap();
        assert_eq!(extend_morphism(&a, &t, &t, &bad, &[]).unwrap_err(), Error::NotExtendable(vec![0, 1]));
        let anchor = EdgePath::new(&x, 0, vec![Step { edge: 0, direction: Direction::Forward }]).unwrap();
        assert_eq!(extend_morphism(&a, &t, &t, &bad, &[anchor.clone()]).unwrap_err(), Error::NotExtendable(vec![0, 1]));
        let good = Morphism::identity(&ta);
        let ext = extend_morphism(&a, &t, &t, &good, &[]).unwrap();
        assert!(ext.morphism.signs().iter().all(|s| s.is_plus()));
        assert_eq!(ext.route, ExtensionRoute::ComponentSigns);
        assert_eq!(extend_morphism(&a, &t, &t, &good, &[anchor]).unwrap().route, ExtensionRoute::AnchorPaths);
    }

    #[test]
    fn extend_morphism_whole() {
        let x = Arc::new(circle3());
        let l = CoefficientSystem::new(x.clone(), vec![Sign::Minus, Sign::Plus, Sign::Plus]).unwrap();
        let a = Subcomplex::whole(x.clone());
        let z = crate::coefficients::involve(&Morphism::identity(&l.restrict(&a).unwrap()));
        let ext = extend_morphism(&a, &l, &l, &z, &[]).unwrap();
        assert_eq!(ext.morphism.signs(), z.signs());
    }

    #[test]
    fn system_and_map_with_empty_subcomplex() {
        let x = Arc::new(rp2_min());
        let l0 = CoefficientSystem::new(x.clone(), vec![Sign::Plus, Sign::Minus, Sign::Minus]).unwrap();
        let a = Subcomplex::empty(x.clone());
        let la = l0.restrict(&a).unwrap();
        let (l1, m) = extend_system_and_map(&l0, &a, &la, &Morphism::identity(&la)).unwrap();
        let p = polarize(&x, None).unwrap();
        assert_eq!(twist(&l1, &p), twist(&l0, &p));
        assert_eq!(m.source(), &l1);
    }

    #[test]
    fn system_and_map_on_cylinder_ends() {
        let base = Arc::new(circle3());
        let cyl = cylinder(&base).unwrap();
        let x = cyl.complex().clone();
        let l_base = CoefficientSystem::new(base.clone(), vec![Sign::Minus, Sign::Plus, Sign::Plus]).unwrap();
        let l0 = pullback(&cyl.retraction, &l_base).unwrap();
        let ends: Vec<(usize, usize)> =
            (0..3).flat_map(|e| [(1, cyl.iota0.edge(e).unwrap()), (1, cyl.iota1.edge(e).unwrap())]).collect();
        let a = Subcomplex::generated_by(x.clone(), &ends).unwrap();
        let la = l0.restrict(&a).unwrap();
        let signs: Vec<Sign> = a
            .parent_ids(0)
            .iter()
            .map(|&v| if (0..3).any(|b| cyl.vertex(b, 1) == v) { Sign::Minus } else { Sign::Plus })
            .collect();
        let zeta = Morphism::new(la.clone(), la.clone(), signs).unwrap();
        let (l1, m) = extend_system_and_map(&l0, &a, &la, &zeta).unwrap();
        assert_eq!(l1.restrict(&a).unwrap(), la);
        for (local, &v) in a.parent_ids(0).iter().enumerate() {
            assert_eq!(m.at(v), zeta.at(local));
        }
        // the two ends are joined through the cylinder with opposite signs, so Λ₁ ≠ Λ₀
        assert_ne!(l1, l0);
    }
}
