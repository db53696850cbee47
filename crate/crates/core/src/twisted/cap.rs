use crate::coefficients::CoefficientSystem;
use crate::error::{Error, Result};
use crate::linalg::{cadd, cmul};
use crate::sign::Sign;

use super::TwistedChainComplex;

/// `δφ = φ ∘ ∂^Λ`.
pub fn coboundary(system: &CoefficientSystem, phi: &[i64], r: usize) -> Result<Vec<i64>> {
    let x = system.complex();
    if phi.len() != x.count(r) {
        return Err(Error::DegreeMismatch(format!("cochain of length {} in degree {r}", phi.len())));
    }
    TwistedChainComplex::new(system).boundary(r + 1).transpose().mul_vec(phi)
}

/// `φ ∩ c` for an r-cochain over `Λ₀` and an n-chain over `Λ₁`, landing in
/// (n−r)-chains over the edgewise product `Λ₀Λ₁`:
///
/// `φ ∩ [v0,…,vn] = (−1)^{rs} · Λ₀Λ₁(v0v_r) · φ[v0,…,v_r] · [v_r,…,v_n]`.
///
/// With these signs `∂(φ∩c) = φ∩∂c + (−1)^s (δφ)∩c`.
pub fn cap(l0: &CoefficientSystem, l1: &CoefficientSystem, phi: &[i64], r: usize, c: &[i64], n: usize) -> Result<Vec<i64>> {
    let x = l0.complex();
    let product = l0.edgewise_product(l1)?;
    if r > n || n > x.dim() {
        return Err(Error::DegreeMismatch(format!("cannot cap a degree-{r} cochain with a degree-{n} chain")));
    }
    if phi.len() != x.count(r) || c.len() != x.count(n) {
        return Err(Error::DegreeMismatch("cochain or chain length does not match its degree".into()));
    }
    let s = n - r;
    let sign = Sign::parity(r * s);
    let front: Vec<usize> = (0..=r).collect();
    let back: Vec<usize> = (r..=n).collect();
    let mut out = vec![0i64; x.count(s)];
    for (k, &coef) in c.iter().enumerate() {
        if coef == 0 {
            continue;
        }
        let value = phi[x.subface(n, k, &front)];
        if value == 0 {
            continue;
        }
        let t = sign * product.within_simplex(n, k, 0, r);
        let b = x.subface(n, k, &back);
        out[b] = cadd(out[b], cmul(t.to_i64(), cmul(value, coef)?)?)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::fixtures::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::sync::Arc;

    fn random_systems(x: &Arc<crate::complex::DeltaComplex>) -> Vec<CoefficientSystem> {
        CoefficientSystem::enumerate(x)
    }

    #[test]
    fn zero_cochain_one_is_identity_on_trivial() {
        let x = Arc::new(triangle());
        let t = CoefficientSystem::trivial(x.clone());
        let c = vec![3];
        assert_eq!(cap(&t, &t, &[1, 1, 1], 0, &c, 2).unwrap(), c);
        assert!(matches!(cap(&t, &t, &[1, 1, 1], 2, &[1, 1, 1], 1), Err(Error::DegreeMismatch(_))));
    }

    #[test]
    fn leibniz_on_small_complexes() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for x in [Arc::new(rp2_min()), Arc::new(triangle()), Arc::new(circle3())] {
            let systems = random_systems(&x);
            for l0 in &systems {
                for l1 in &systems {
                    let prod = l0.edgewise_product(l1).unwrap();
                    let c1 = TwistedChainComplex::new(l1);
                    let cp = TwistedChainComplex::new(&prod);
                    for n in 1..=x.dim() {
                        for r in 0..n {
                            let s = n - r;
                            for _ in 0..5 {
                                let phi: Vec<i64> = (0..x.count(r)).map(|_| rng.gen_range(-3..=3)).collect();
                                let c: Vec<i64> = (0..x.count(n)).map(|_| rng.gen_range(-3..=3)).collect();
                                let lhs = cp.boundary(s).mul_vec(&cap(l0, l1, &phi, r, &c, n).unwrap()).unwrap();
                                let dc = c1.boundary(n).mul_vec(&c).unwrap();
                                let a = cap(l0, l1, &phi, r, &dc, n - 1).unwrap();
                                let dphi = coboundary(l0, &phi, r).unwrap();
                                let b = cap(l0, l1, &dphi, r + 1, &c, n).unwrap();
                                let sign = Sign::parity(s).to_i64();
                                let rhs: Vec<i64> = a.iter().zip(&b).map(|(p, q)| p + sign * q).collect();
                                assert_eq!(lhs, rhs, "n={n} r={r}");
                            }
                        }
                    }
                }
            }
        }
    }
}
