//! Independent reference computations. Nothing here calls the library's
//! linear algebra: boundaries are rebuilt from face tables, ranks come from
//! fraction-free elimination and torsion from local elimination mod p^K.
#![allow(dead_code)]

use twistkit::coefficients::CoefficientSystem;
use twistkit::complex::DeltaComplex;

pub type Dense = Vec<Vec<i64>>;

pub const PRIMES: [i128; 4] = [2, 3, 5, 7];

/// The edge from vertex 0 to vertex 1 of an n-simplex, by dropping the last
/// vertex until one edge remains.
pub fn first_edge(x: &DeltaComplex, mut n: usize, mut k: usize) -> usize {
    while n > 1 {
        k = x.faces(n, k)[n];
        n -= 1;
    }
    k
}

/// Rows index (n−1)-simplices, columns n-simplices.
pub fn boundary(system: &CoefficientSystem, n: usize) -> Dense {
    let x = system.complex();
    let rows = if n == 0 { 0 } else { x.count(n - 1) };
    let cols = if n <= x.dim() { x.count(n) } else { 0 };
    let mut m = vec![vec![0; cols]; rows];
    if n == 0 {
        return m;
    }
    for k in 0..cols {
        let lambda = system.sign(first_edge(x, n, k)).to_i64();
        for (i, &f) in x.faces(n, k).iter().enumerate() {
            let c = if i == 0 { lambda } else if i % 2 == 0 { 1 } else { -1 };
            m[f][k] += c;
        }
    }
    m
}

pub fn chain_rank(x: &DeltaComplex, n: usize) -> usize {
    if n <= x.dim() {
        x.count(n)
    } else {
        0
    }
}

pub fn transpose(m: &Dense, rows: usize, cols: usize) -> Dense {
    (0..cols).map(|j| (0..rows).map(|i| m[i][j]).collect()).collect()
}

/// Rank over ℚ by Bareiss elimination in checked i128.
pub fn rank(m: &Dense) -> usize {
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut r = 0;
    let mut prev: i128 = 1;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = a[r][c].checked_mul(a[i][j]).and_then(|x| x.checked_sub(a[i][c].checked_mul(a[r][j])?)).expect("overflow");
                a[i][j] = v / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

fn valuation(mut v: i128, p: i128) -> u32 {
    let mut e = 0;
    while v != 0 && v % p == 0 {
        v /= p;
        e += 1;
    }
    e
}

fn inverse_mod(a: i128, m: i128) -> i128 {
    let (mut t, mut nt, mut r, mut nr) = (0i128, 1i128, m, a.rem_euclid(m));
    while nr != 0 {
        let q = r / nr;
        (t, nt) = (nt, t - q * nt);
        (r, nr) = (nr, r - q * nr);
    }
    assert_eq!(r, 1, "not a unit");
    t.rem_euclid(m)
}

/// p-adic valuations of the nonzero elementary divisors, by elimination over
/// ℤ/p^K with a pivot of least valuation at each step. `None` if some divisor
/// had valuation ≥ K and vanished.
pub fn local_exponents(m: &Dense, p: i128, rational_rank: usize) -> Option<Vec<u32>> {
    let mut k = 1u32;
    let mut modulus = p;
    while modulus < (1i128 << 40) {
        modulus *= p;
        k += 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&v| (v as i128).rem_euclid(modulus)).collect()).collect();
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut out = Vec::new();
    let mut active_r: Vec<usize> = (0..rows).collect();
    let mut active_c: Vec<usize> = (0..cols).collect();
    loop {
        let mut best: Option<(u32, usize, usize)> = None;
        for (ri, &i) in active_r.iter().enumerate() {
            for (ci, &j) in active_c.iter().enumerate() {
                if a[i][j] != 0 {
                    let v = valuation(a[i][j], p);
                    if best.is_none_or(|(bv, _, _)| v < bv) {
                        best = Some((v, ri, ci));
                    }
                }
            }
        }
        let Some((v, ri, ci)) = best else { break };
        let (pi, pj) = (active_r[ri], active_c[ci]);
        let unit = a[pi][pj] / p.pow(v);
        let inv = inverse_mod(unit, modulus);
        // scale the pivot row so the pivot is p^v, then clear its column and row
        for j in 0..cols {
            a[pi][j] = (a[pi][j] * inv).rem_euclid(modulus);
        }
        let pv = p.pow(v);
        for &i in &active_r {
            if i != pi && a[i][pj] != 0 {
                let f = a[i][pj] / pv;
                for j in 0..cols {
                    a[i][j] = (a[i][j] - f * a[pi][j]).rem_euclid(modulus);
                }
            }
        }
        for &j in &active_c {
            if j != pj && a[pi][j] != 0 {
                let f = a[pi][j] / pv;
                for i in 0..rows {
                    a[i][j] = (a[i][j] - f * a[i][pj]).rem_euclid(modulus);
                }
            }
        }
        out.push(v);
        active_r.remove(ri);
        active_c.remove(ci);
    }
    (out.len() == rational_rank && out.iter().all(|&v| v < k)).then_some(out)
}

/// All elementary divisors ≥ 2 supported on [`PRIMES`], as invariant factors
/// in increasing divisibility order.
pub fn torsion(m: &Dense) -> Vec<i64> {
    let r = rank(m);
    let mut per_prime: Vec<Vec<u32>> = Vec::new();
    for p in PRIMES {
        let mut e: Vec<u32> = local_exponents(m, p, r).expect("valuations fit").into_iter().filter(|&v| v > 0).collect();
        e.sort_unstable_by(|a, b| b.cmp(a));
        per_prime.push(e);
    }
    let count = per_prime.iter().map(Vec::len).max().unwrap_or(0);
    let mut factors: Vec<i64> = (0..count)
        .map(|i| PRIMES.iter().zip(&per_prime).map(|(&p, e)| (p as i64).pow(*e.get(i).unwrap_or(&0))).product())
        .collect();
    factors.sort_unstable();
    factors
}

/// `(rank, torsion)` of `ker(out)/im(inc)` on a free module of rank `dim`.
pub fn subquotient(dim: usize, out: &Dense, inc: &Dense) -> (usize, Vec<i64>) {
    (dim - rank(out) - rank(inc), torsion(inc))
}

pub fn homology(system: &CoefficientSystem, n: usize) -> (usize, Vec<i64>) {
    let x = system.complex();
    subquotient(chain_rank(x, n), &boundary(system, n), &boundary(system, n + 1))
}

pub fn cohomology(system: &CoefficientSystem, n: usize) -> (usize, Vec<i64>) {
    let x = system.complex();
    let up = boundary(system, n + 1);
    let down = boundary(system, n);
    let delta_n = transpose(&up, chain_rank(x, n), chain_rank(x, n + 1));
    let delta_prev = if n == 0 { vec![] } else { transpose(&down, chain_rank(x, n - 1), chain_rank(x, n)) };
    subquotient(chain_rank(x, n), &delta_n, &delta_prev)
}

/// Group homology of ℤ/2 with coefficients ℤ^ε from the periodic resolution
/// `… → ℤ[C2] −(1−t)→ ℤ[C2] −(1+t)→ ℤ[C2] −(1−t)→ ℤ[C2]`, tensored down:
/// `d_k = 1 − ε` for odd `k`, `1 + ε` for even `k`.
pub fn cyclic2_homology(epsilon: i64, n: usize) -> (usize, Vec<i64>) {
    let d = |k: usize| -> Dense {
        if k == 0 {
            vec![]
        } else if k % 2 == 1 {
            vec![vec![1 - epsilon]]
        } else {
            vec![vec![1 + epsilon]]
        }
    };
    let out = if n == 0 { vec![] } else { d(n) };
    subquotient(1, &out, &d(n + 1))
}

/// Brute-force morphisms: vertex sign vectors with `ζ(a)·Λ0(e)·ζ(b) = Λ1(e)`.
pub fn morphism_count(l0: &CoefficientSystem, l1: &CoefficientSystem) -> usize {
    let x = l0.complex();
    let v = x.vertex_count();
    (0u32..1 << v)
        .filter(|mask| {
            let z = |i: usize| if mask >> i & 1 == 1 { -1 } else { 1 };
            (0..x.edge_count()).all(|e| {
                let (a, b) = x.edge_endpoints(e);
                z(a) * l0.sign(e).to_i64() * z(b) == l1.sign(e).to_i64()
            })
        })
        .count()
}
