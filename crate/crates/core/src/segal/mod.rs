//! The classifying space of a finite group through its normalized bar
//! complex twisted by an orientation character, induced chain maps, and the
//! action of conjugation on twisted homology.

mod group;

pub use group::{conjugation, FiniteGroup, GroupData, GroupHom, OrientationChar};

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::SparseMatrix;
use crate::sign::Sign;
use crate::twisted::{HomologyGroup, HomologyMap};

/// Normalized chains of `B G` with coefficients twisted by `ω`, through
/// dimension `depth`. Degree k has basis the k-tuples of non-identity
/// elements, ordered lexicographically by element index.
#[derive(Clone, Debug)]
pub struct BarComplex {
    group: Arc<FiniteGroup>,
    character: OrientationChar,
    depth: usize,
    non_identity: Vec<usize>,
    /// Position of each element in `non_identity`; `None` for the identity.
    slot: Vec<Option<usize>>,
    /// `boundary[k]: C_k → C_{k−1}` for `k = 1..=depth`; entry 0 is `0 × 1`.
    boundary: Vec<SparseMatrix>,
}

impl BarComplex {
    pub fn new(group: &Arc<FiniteGroup>, character: &OrientationChar, depth: usize) -> Result<BarComplex> {
        if depth < 1 {
            return Err(Error::DepthTooSmall(depth));
        }
        let non_identity = group.non_identity();
        let mut slot = vec![None; group.order()];
        for (i, &g) in non_identity.iter().enumerate() {
            slot[g] = Some(i);
        }
        let mut bar = BarComplex { group: group.clone(), character: character.clone(), depth, non_identity, slot, boundary: Vec::new() };
        bar.boundary.push(SparseMatrix::zeros(0, 1));
        for k in 1..=depth {
            let d = bar.build_boundary(k)?;
            bar.boundary.push(d);
        }
        Ok(bar)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn character(&self) -> &OrientationChar {
        &self.character
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Rank of `C_k`: `(|G| − 1)^k`.
    pub fn rank(&self, k: usize) -> usize {
        self.non_identity.len().pow(k as u32)
    }

    /// Index of a tuple, or `None` if it contains the identity.
    pub fn index(&self, tuple: &[usize]) -> Option<usize> {
        let m = self.non_identity.len();
        tuple.iter().try_fold(0usize, |acc, &g| self.slot[g].map(|s| acc * m + s))
    }

    pub fn tuple(&self, k: usize, mut index: usize) -> Vec<usize> {
        let m = self.non_identity.len();
        let mut out = vec![0; k];
        for slot in out.iter_mut().rev() {
            *slot = self.non_identity[index % m];
            index /= m;
        }
        out
    }

    fn build_boundary(&self, k: usize) -> Result<SparseMatrix> {
        let g = &self.group;
        let cols = (0..self.rank(k))
            .map(|j| {
                let t = self.tuple(k, j);
                let mut entries = Vec::with_capacity(k + 1);
                if let Some(i) = self.index(&t[1..]) {
                    entries.push((i, self.character.at(t[0]).to_i64()));
                }
                for i in 1..k {
                    let mut merged = t[..i - 1].to_vec();
                    merged.push(g.mul(t[i - 1], t[i]));
                    merged.extend_from_slice(&t[i + 1..]);
                    if let Some(r) = self.index(&merged) {
                        entries.push((r, Sign::parity(i).to_i64()));
                    }
                }
                if let Some(i) = self.index(&t[..k - 1]) {
                    entries.push((i, Sign::parity(k).to_i64()));
                }
                entries
            })
            .collect();
        SparseMatrix::from_column_entries(self.rank(k - 1), cols)
    }

    /// `∂_k` for `1 ≤ k ≤ depth`.
    pub fn boundary(&self, k: usize) -> &SparseMatrix {
        &self.boundary[k]
    }

    pub fn square_zero_violation(&self) -> Option<usize> {
        (2..=self.depth).find(|&k| !self.boundary[k - 1].mul(&self.boundary[k]).is_ok_and(|m| m.is_zero()))
    }

    fn check_degree(&self, n: usize) -> Result<()> {
        if n >= self.depth {
            return Err(Error::OutOfValidRange { degree: n, depth: self.depth });
        }
        Ok(())
    }

    /// `H_n`, valid for `n < depth`.
    pub fn homology(&self, n: usize) -> Result<HomologyGroup> {
        self.check_degree(n)?;
        HomologyGroup::subquotient(&self.boundary[n], &self.boundary[n + 1])
    }
}

/// Default truncation depth for computing `H_n`.
pub fn default_depth(n: usize) -> usize {
    n + 2
}

pub fn bar(group: &Arc<FiniteGroup>, character: &OrientationChar, depth: usize) -> Result<BarComplex> {
    BarComplex::new(group, character, depth)
}

pub fn bar_homology(group: &Arc<FiniteGroup>, character: &OrientationChar, n: usize, depth: usize) -> Result<HomologyGroup> {
    if depth < 1 {
        return Err(Error::DepthTooSmall(depth));
    }
    if n >= depth {
        return Err(Error::OutOfValidRange { degree: n, depth });
    }
    // only ∂_n and ∂_{n+1} matter
    BarComplex::new(group, character, n + 1)?.homology(n)
}

fn tuple_map(source: &BarComplex, target: &BarComplex, k: usize, f: impl Fn(usize) -> usize) -> Result<SparseMatrix> {
    let cols = (0..source.rank(k))
        .map(|j| {
            let t: Vec<usize> = source.tuple(k, j).into_iter().map(&f).collect();
            target.index(&t).map(|i| vec![(i, 1)]).unwrap_or_default()
        })
        .collect();
    SparseMatrix::from_column_entries(target.rank(k), cols)
}

/// `B(ψ)` from the `(ω∘ψ)`-twisted complex of `H` to the `ω`-twisted complex
/// of `G`, in degrees `0..=depth`, verified to commute with the boundaries.
pub fn bmap(psi: &GroupHom, character: &OrientationChar, depth: usize) -> Result<(BarComplex, BarComplex, Vec<SparseMatrix>)> {
    let source = BarComplex::new(psi.source(), &character.pull_back(psi), depth)?;
    let target = BarComplex::new(psi.target(), character, depth)?;
    let maps = (0..=depth).map(|k| tuple_map(&source, &target, k, |h| psi.apply(h))).collect::<Result<Vec<_>>>()?;
    for k in 1..=depth {
        if target.boundary(k).mul(&maps[k])? != maps[k - 1].mul(source.boundary(k))? {
            return Err(Error::NotAChainMap(k));
        }
    }
    Ok((source, target, maps))
}

/// The chain homotopy `P` from the conjugation by `g`, in degrees
/// `0..depth`: `P(g1…gk) = Σ_i (−1)^i (g1…g_i, g, c(g_{i+1})…c(g_k))`.
pub fn conjugation_homotopy(bar: &BarComplex, g: usize) -> Result<Vec<SparseMatrix>> {
    let c = conjugation(bar.group(), g);
    (0..bar.depth)
        .map(|k| {
            let cols = (0..bar.rank(k))
                .map(|j| {
                    let t = bar.tuple(k, j);
                    (0..=k)
                        .filter_map(|i| {
                            let mut u = t[..i].to_vec();
                            u.push(g);
                            u.extend(t[i..].iter().map(|&h| c.apply(h)));
                            bar.index(&u).map(|r| (r, Sign::parity(i).to_i64()))
                        })
                        .collect()
                })
                .collect();
            SparseMatrix::from_column_entries(bar.rank(k + 1), cols)
        })
        .collect()
}

/// Checks `∂P + P∂ = ω(g)·c_# − id` in degrees `0..depth`.
pub fn verify_conjugation_homotopy(bar: &BarComplex, g: usize) -> Result<bool> {
    let p = conjugation_homotopy(bar, g)?;
    for k in 0..bar.depth {
        if !homotopy_holds_at(bar, g, &p, k)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn homotopy_holds_at(bar: &BarComplex, g: usize, p: &[SparseMatrix], k: usize) -> Result<bool> {
    let c = conjugation(bar.group(), g);
    let w = bar.character().at(g).to_i64();
    let cg = tuple_map(bar, bar, k, |h| c.apply(h))?;
    let expect = cg.scale(w)?.sub(&SparseMatrix::identity(bar.rank(k)))?;
    let mut lhs = bar.boundary(k + 1).mul(&p[k])?;
    if k > 0 {
        lhs = lhs.add(&p[k - 1].mul(bar.boundary(k))?)?;
    }
    Ok(lhs == expect)
}

/// Outcome of [`conjugation_sign`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugationAction {
    pub sign: Sign,
    /// False when `H_n` has only 2-torsion, so `+1` and `−1` act alike and the
    /// sign rests on the chain homotopy alone.
    pub homology_distinguishes: bool,
    pub homotopy_verified: bool,
    pub homology: crate::twisted::Invariants,
}

/// The scalar by which `B(c_g)` acts on `H_n` of the `ω`-twisted complex.
pub fn conjugation_sign(group: &Arc<FiniteGroup>, character: &OrientationChar, g: usize, n: usize, depth: usize) -> Result<ConjugationAction> {
    if n >= depth {
        return Err(Error::OutOfValidRange { degree: n, depth });
    }
    let bar = BarComplex::new(group, character, depth)?;
    let h = bar.homology(n)?;
    conjugation_sign_on(&bar, &h, g, n)
}

/// [`conjugation_sign`] on a prebuilt complex and its `H_n`, for sweeps over
/// many elements. Since `ω∘c_g = ω`, `c_g` maps the complex to itself.
pub fn conjugation_sign_on(bar: &BarComplex, h: &HomologyGroup, g: usize, n: usize) -> Result<ConjugationAction> {
    if n >= bar.depth {
        return Err(Error::OutOfValidRange { degree: n, depth: bar.depth });
    }
    if h.is_zero() {
        return Err(Error::VacuousSign(n));
    }
    let c = conjugation(bar.group(), g);
    let map = tuple_map(bar, bar, n, |x| c.apply(x))?;
    let action = HomologyMap::from_chain_map(h, h, &map)?;
    let signs = action.scalar_signs();
    let p = conjugation_homotopy(bar, g)?;
    let homotopy_verified = homotopy_holds_at(bar, g, &p, n)?;
    let sign = match signs.as_slice() {
        [] => return Err(Error::NotScalar(n)),
        [s] => *s,
        _ if homotopy_verified => bar.character().at(g),
        _ => return Err(Error::NotScalar(n)),
    };
    Ok(ConjugationAction { sign, homology_distinguishes: signs.len() == 1, homotopy_verified, homology: h.invariants().clone() })
}
