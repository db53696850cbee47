//! Chain and cochain complexes with twisted integer coefficients, their
//! homology, induced maps, cap products, fundamental classes and degrees.

mod cap;
mod fundamental;
mod homology;

pub use cap::{cap, coboundary};
pub use fundamental::{degree, duality_check, duality_map, fundamental_twist, FundamentalData};
pub use homology::{HomologyGroup, HomologyMap, Invariants};

use std::sync::Arc;

use crate::coefficients::{CoefficientSystem, Morphism, PairMorphism};
use crate::complex::DeltaComplex;
use crate::error::{Error, Result};
use crate::linalg::SparseMatrix;
use crate::sign::Sign;

/// `S^Λ_*(X)`. Face `∂₀` of `[v0,…,vn]` is carried back to `v0` along the
/// edge `v0v1`, so its coefficient is `Λ(v0v1)`; the other faces keep `v0`
/// and take the usual `(−1)^i`.
#[derive(Clone, Debug)]
pub struct TwistedChainComplex {
    system: CoefficientSystem,
    /// `boundary[n]: C_n → C_{n−1}` for `n = 0..=dim+1`.
    boundary: Vec<SparseMatrix>,
}

impl TwistedChainComplex {
    pub fn new(system: &CoefficientSystem) -> TwistedChainComplex {
        let x = system.complex();
        let dim = x.dim();
        let mut boundary = vec![SparseMatrix::zeros(0, x.count(0))];
        for n in 1..=dim {
            let cols = (0..x.count(n))
                .map(|k| {
                    x.faces(n, k)
                        .iter()
                        .enumerate()
                        .map(|(i, &f)| {
                            let s = if i == 0 { system.within_simplex(n, k, 0, 1) } else { Sign::parity(i) };
                            (f, s.to_i64())
                        })
                        .collect()
                })
                .collect();
            boundary.push(SparseMatrix::from_column_entries(x.count(n - 1), cols).expect("small coefficients"));
        }
        boundary.push(SparseMatrix::zeros(x.count(dim), 0));
        TwistedChainComplex { system: system.clone(), boundary }
    }

    pub fn system(&self) -> &CoefficientSystem {
        &self.system
    }

    pub fn complex(&self) -> &Arc<DeltaComplex> {
        self.system.complex()
    }

    pub fn dim(&self) -> usize {
        self.boundary.len() - 2
    }

    pub fn rank(&self, n: usize) -> usize {
        if n <= self.dim() {
            self.boundary[n].cols()
        } else {
            0
        }
    }

    /// `∂_n`, zero beyond the top dimension.
    pub fn boundary(&self, n: usize) -> SparseMatrix {
        if n < self.boundary.len() {
            self.boundary[n].clone()
        } else {
            SparseMatrix::zeros(self.rank(n - 1), 0)
        }
    }

    /// First `n` with `∂_{n−1}∂_n ≠ 0`.
    pub fn square_zero_violation(&self) -> Option<usize> {
        (2..=self.dim()).find(|&n| !self.boundary[n - 1].mul(&self.boundary[n]).is_ok_and(|m| m.is_zero()))
    }

    pub fn homology(&self, n: usize) -> Result<HomologyGroup> {
        self.check_degree(n)?;
        HomologyGroup::subquotient(&self.boundary[n], &self.boundary[n + 1])
    }

    /// `H^n` of `Hom(S^Λ_*, ℤ)`, cochains indexed like chains.
    pub fn cohomology(&self, n: usize) -> Result<HomologyGroup> {
        self.check_degree(n)?;
        HomologyGroup::subquotient(&self.boundary[n + 1].transpose(), &self.boundary[n].transpose())
    }

    fn check_degree(&self, n: usize) -> Result<()> {
        if n > self.dim() {
            return Err(Error::InvalidInput(format!("degree {n} exceeds dimension {}", self.dim())));
        }
        Ok(())
    }
}

pub fn twisted_boundary(system: &CoefficientSystem) -> TwistedChainComplex {
    TwistedChainComplex::new(system)
}

pub fn homology(system: &CoefficientSystem, n: usize) -> Result<HomologyGroup> {
    TwistedChainComplex::new(system).homology(n)
}

pub fn cohomology(system: &CoefficientSystem, n: usize) -> Result<HomologyGroup> {
    TwistedChainComplex::new(system).cohomology(n)
}

/// `S(ζ)`: the diagonal sign `ζ(v0(σ))` in each degree.
pub fn zeta_chain_map(zeta: &Morphism) -> Vec<Vec<Sign>> {
    let x = zeta.source().complex();
    (0..=x.dim()).map(|n| (0..x.count(n)).map(|k| zeta.at(x.vertices(n, k)[0])).collect()).collect()
}

pub(crate) fn diagonal(signs: &[Sign]) -> SparseMatrix {
    let cols = signs.iter().enumerate().map(|(i, s)| vec![(i, s.to_i64())]).collect();
    SparseMatrix::from_column_entries(signs.len(), cols).expect("unit entries")
}

/// First degree in which `f` fails to commute with the boundaries.
pub fn chain_map_violation(source: &TwistedChainComplex, target: &TwistedChainComplex, f: &[SparseMatrix]) -> Result<Option<usize>> {
    for n in 1..f.len() {
        let lhs = target.boundary(n).mul(&f[n])?;
        let rhs = f[n - 1].mul(&source.boundary(n))?;
        if lhs != rhs {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// Chain map of a pair morphism `(f, ζ)`: an n-simplex `σ` goes to
/// `ζ(v0σ)·sgn(π)·Λ_Y(f(v0σ) → v0τ)·τ` when `f` maps it onto `τ` with
/// vertex permutation `π`, and to zero when it collapses.
pub fn chain_pushforward(pair: &PairMorphism) -> Result<Vec<SparseMatrix>> {
    let f = pair.map();
    let (x, y) = (f.source(), f.target());
    let ly = pair.target();
    let maps: Vec<SparseMatrix> = (0..=x.dim())
        .map(|n| {
            let cols = (0..x.count(n))
                .map(|k| {
                    let img = f.image(n, k);
                    match img.permutation_sign() {
                        None => vec![],
                        Some(perm) => {
                            let transport = ly.within_simplex(n, img.simplex, 0, img.positions[0]);
                            let s = pair.zeta()[x.vertices(n, k)[0]] * perm * transport;
                            vec![(img.simplex, s.to_i64())]
                        }
                    }
                })
                .collect();
            SparseMatrix::from_column_entries(if n <= y.dim() { y.count(n) } else { 0 }, cols)
        })
        .collect::<Result<_>>()?;
    let source = TwistedChainComplex::new(pair.source());
    let target = TwistedChainComplex::new(ly);
    if let Some(n) = chain_map_violation(&source, &target, &maps)? {
        return Err(Error::NotAChainMap(n));
    }
    Ok(maps)
}

/// `(f, ζ)_*` on `H_n`.
pub fn induced_map(pair: &PairMorphism, n: usize) -> Result<HomologyMap> {
    let maps = chain_pushforward(pair)?;
    let hx = homology(pair.source(), n)?;
    let y = pair.target();
    let hy = if n <= y.complex().dim() {
        homology(y, n)?
    } else {
        HomologyGroup::subquotient(&SparseMatrix::zeros(0, 0), &SparseMatrix::zeros(0, 0))?
    };
    HomologyMap::from_chain_map(&hx, &hy, &maps[n])
}

/// `S(ζ)_*` on `H_n`.
pub fn zeta_induced_map(zeta: &Morphism, n: usize) -> Result<HomologyMap> {
    let h0 = homology(zeta.source(), n)?;
    let h1 = homology(zeta.target(), n)?;
    HomologyMap::from_chain_map(&h0, &h1, &diagonal(&zeta_chain_map(zeta)[n]))
}
