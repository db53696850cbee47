use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sign::Sign;

/// A finite group given by its multiplication table; `mul[a][b] = a·b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    mul: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    names: Vec<String>,
}

/// On-disk form: `{"order": n, "mul": [[...]], "names": [...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupData {
    pub order: usize,
    pub mul: Vec<Vec<usize>>,
    #[serde(default)]
    pub names: Vec<String>,
}

impl FiniteGroup {
    /// Validates closure, identity, inverses and associativity.
    pub fn new(mul: Vec<Vec<usize>>, names: Vec<String>) -> Result<FiniteGroup> {
        let n = mul.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        if mul.iter().any(|row| row.len() != n || row.iter().any(|&v| v >= n)) {
            return Err(Error::InvalidGroup("table is not an n×n table of element indices".into()));
        }
        let names = if names.is_empty() { (0..n).map(|i| i.to_string()).collect() } else { names };
        if names.len() != n {
            return Err(Error::InvalidGroup(format!("{} names for {n} elements", names.len())));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| mul[e][x] == x && mul[x][e] == x))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let inverse = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| mul[x][y] == identity && mul[y][x] == identity)
                    .ok_or_else(|| Error::InvalidGroup(format!("element {x} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(Error::InvalidGroup(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(FiniteGroup { mul, identity, inverse, names })
    }

    pub fn from_data(data: &GroupData) -> Result<FiniteGroup> {
        if data.mul.len() != data.order {
            return Err(Error::InvalidGroup(format!("order {} but {} table rows", data.order, data.mul.len())));
        }
        FiniteGroup::new(data.mul.clone(), data.names.clone())
    }

    pub fn to_data(&self) -> GroupData {
        GroupData { order: self.order(), mul: self.mul.clone(), names: self.names.clone() }
    }

    /// `ℤ/n` with elements named `0..n`.
    pub fn cyclic(n: usize) -> FiniteGroup {
        let mul = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::new(mul, Vec::new()).expect("cyclic group")
    }

    /// `G × H`, element `(g, h)` stored at `g·|H| + h`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
        let (n, m) = (g.order(), h.order());
        let mul = (0..n * m)
            .map(|a| (0..n * m).map(|b| g.mul(a / m, b / m) * m + h.mul(a % m, b % m)).collect())
            .collect();
        let names = (0..n * m).map(|a| format!("({},{})", g.names[a / m], h.names[a % m])).collect();
        FiniteGroup::new(mul, names).expect("product of groups")
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn element(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::InvalidInput(format!("no element named `{name}`")))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Non-identity elements in index order.
    pub fn non_identity(&self) -> Vec<usize> {
        (0..self.order()).filter(|&a| a != self.identity).collect()
    }
}

/// A homomorphism `ω: G → {±1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientationChar {
    signs: Vec<Sign>,
}

impl OrientationChar {
    pub fn new(group: &FiniteGroup, signs: Vec<Sign>) -> Result<OrientationChar> {
        if signs.len() != group.order() {
            return Err(Error::InvalidInput(format!("{} signs for a group of order {}", signs.len(), group.order())));
        }
        for a in 0..group.order() {
            for b in 0..group.order() {
                if signs[group.mul(a, b)] != signs[a] * signs[b] {
                    return Err(Error::NotAHomomorphism(format!(
                        "ω({}·{}) ≠ ω({})·ω({})",
                        group.name(a),
                        group.name(b),
                        group.name(a),
                        group.name(b)
                    )));
                }
            }
        }
        Ok(OrientationChar { signs })
    }

    pub fn trivial(group: &FiniteGroup) -> OrientationChar {
        OrientationChar { signs: vec![Sign::Plus; group.order()] }
    }

    /// Every character of `G`, trivial first, ordered by the bit pattern of
    /// the non-identity elements sent to −1.
    pub fn all(group: &FiniteGroup) -> Vec<OrientationChar> {
        // ω is determined by its kernel, an index-≤2 subgroup; search over sign patterns
        let n = group.order();
        assert!(n <= 20, "character search over a group of order {n}");
        (0u32..1 << n)
            .filter(|bits| bits >> group.identity() & 1 == 0)
            .filter_map(|bits| {
                let signs = (0..n).map(|i| Sign::from_bit(bits >> i & 1 == 1)).collect();
                OrientationChar::new(group, signs).ok()
            })
            .collect()
    }

    pub fn at(&self, g: usize) -> Sign {
        self.signs[g]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn is_trivial(&self) -> bool {
        self.signs.iter().all(|s| s.is_plus())
    }

    /// `ω∘ψ`.
    pub fn pull_back(&self, psi: &GroupHom) -> OrientationChar {
        OrientationChar { signs: psi.map.iter().map(|&g| self.signs[g]).collect() }
    }
}

/// A verified group homomorphism `H → G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    map: Vec<usize>,
}

impl GroupHom {
    pub fn new(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>, map: Vec<usize>) -> Result<GroupHom> {
        if map.len() != source.order() || map.iter().any(|&g| g >= target.order()) {
            return Err(Error::NotAHomomorphism("map does not send elements to elements".into()));
        }
        for a in 0..source.order() {
            for b in 0..source.order() {
                if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(Error::NotAHomomorphism(format!("ψ({}·{}) ≠ ψ({})·ψ({})", source.name(a), source.name(b), source.name(a), source.name(b))));
                }
            }
        }
        Ok(GroupHom { source, target, map })
    }

    pub fn identity(g: &Arc<FiniteGroup>) -> GroupHom {
        GroupHom { source: g.clone(), target: g.clone(), map: (0..g.order()).collect() }
    }

    pub fn trivial(source: &Arc<FiniteGroup>, target: &Arc<FiniteGroup>) -> GroupHom {
        GroupHom { source: source.clone(), target: target.clone(), map: vec![target.identity(); source.order()] }
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn apply(&self, h: usize) -> usize {
        self.map[h]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &GroupHom) -> Result<GroupHom> {
        if *self.target != *next.source {
            return Err(Error::NotAHomomorphism("homomorphisms are not composable".into()));
        }
        Ok(GroupHom { source: self.source.clone(), target: next.target.clone(), map: self.map.iter().map(|&h| next.map[h]).collect() })
    }
}

/// `c_g(h) = g⁻¹hg`.
pub fn conjugation(group: &Arc<FiniteGroup>, g: usize) -> GroupHom {
    let gi = group.inverse(g);
    let map = (0..group.order()).map(|h| group.mul(group.mul(gi, h), g)).collect();
    GroupHom { source: group.clone(), target: group.clone(), map }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// Permutations of {0,1,2}; `a·b` applies `b` first.
    pub fn s3() -> FiniteGroup {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
        let names = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"].iter().map(|s| s.to_string()).collect();
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let mul = perms
            .iter()
            .map(|a| perms.iter().map(|b| index([a[b[0]], a[b[1]], a[b[2]]])).collect())
            .collect();
        FiniteGroup::new(mul, names).unwrap()
    }

    #[test]
    fn validation_rejects_bad_tables() {
        assert!(FiniteGroup::new(vec![vec![0, 1], vec![1, 1]], vec![]).is_err());
        assert!(FiniteGroup::new(vec![vec![0, 1], vec![1, 0], vec![0, 0]], vec![]).is_err());
        assert!(FiniteGroup::new(vec![vec![0, 5], vec![1, 0]], vec![]).is_err());
    }

    #[test]
    fn s3_structure() {
        let g = Arc::new(s3());
        assert!(!g.is_abelian());
        let chars = OrientationChar::all(&g);
        assert_eq!(chars.len(), 2);
        let sign = &chars[1];
        assert_eq!(sign.at(g.element("(12)").unwrap()), Sign::Minus);
        assert_eq!(sign.at(g.element("(123)").unwrap()), Sign::Plus);
        let t = g.element("(12)").unwrap();
        let c = conjugation(&g, t);
        assert_eq!(g.name(c.apply(g.element("(123)").unwrap())), "(132)");
        let r = g.element("(123)").unwrap();
        let back = conjugation(&g, r).then(&conjugation(&g, g.inverse(r))).unwrap();
        assert_eq!(back, GroupHom::identity(&g));
    }

    #[test]
    fn abelian_conjugation_is_identity() {
        let g = Arc::new(FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)));
        assert_eq!(OrientationChar::all(&g).len(), 4);
        for x in 0..4 {
            assert_eq!(conjugation(&g, x), GroupHom::identity(&g));
        }
    }

    #[test]
    fn homomorphism_checks() {
        let z2 = Arc::new(FiniteGroup::cyclic(2));
        let z4 = Arc::new(FiniteGroup::cyclic(4));
        assert!(GroupHom::new(z2.clone(), z4.clone(), vec![0, 2]).is_ok());
        assert!(matches!(GroupHom::new(z2.clone(), z4.clone(), vec![0, 1]), Err(Error::NotAHomomorphism(_))));
        assert!(OrientationChar::new(&z4, vec![Sign::Plus, Sign::Minus, Sign::Minus, Sign::Minus]).is_err());
    }
}
