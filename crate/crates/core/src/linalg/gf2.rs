//! Linear algebra over ℤ/2 for twist-class enumeration.

/// Row-reduces `rows` (each of length `ncols`) in place and returns the
/// pivot columns in increasing order.
fn reduce(rows: &mut [Vec<bool>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c]) else { continue };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && rows[i][c] {
                let (src, dst) = if i < r {
                    let (lo, hi) = rows.split_at_mut(r);
                    (&hi[0], &mut lo[i])
                } else {
                    let (lo, hi) = rows.split_at_mut(i);
                    (&lo[r], &mut hi[0])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    *d ^= *s;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn gf2_rank(rows: &[Vec<bool>], ncols: usize) -> usize {
    let mut rows = rows.to_vec();
    reduce(&mut rows, ncols).len()
}

/// Basis of `{x : A x = 0}` over ℤ/2. One vector per free column, in
/// increasing column order; the vector has a 1 at its own free column and 0 at
/// every other free column.
pub fn gf2_nullspace(rows: &[Vec<bool>], ncols: usize) -> Vec<Vec<bool>> {
    let mut rows = rows.to_vec();
    let pivots = reduce(&mut rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![false; ncols];
            v[f] = true;
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = rows[r][f];
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nullspace_of_single_relation() {
        // x0 + x1 + x2 = 0
        let a = vec![vec![true, true, true]];
        let ns = gf2_nullspace(&a, 3);
        assert_eq!(ns, vec![vec![true, true, false], vec![true, false, true]]);
        assert_eq!(gf2_rank(&a, 3), 1);
    }

    #[test]
    fn nullspace_vectors_solve_system() {
        let a = vec![vec![true, false, true, true], vec![false, true, true, false], vec![true, true, false, true]];
        for v in gf2_nullspace(&a, 4) {
            for row in &a {
                let s = row.iter().zip(&v).filter(|(x, y)| **x && **y).count();
                assert_eq!(s % 2, 0);
            }
        }
        assert_eq!(gf2_nullspace(&a, 4).len(), 4 - gf2_rank(&a, 4));
    }
}
