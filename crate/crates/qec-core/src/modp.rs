//! Linear algebra over `F_p` used by the character table construction.

use alloc::vec::Vec;

pub fn add(p: u64, a: u64, b: u64) -> u64 {
    (a + b) % p
}

pub fn sub(p: u64, a: u64, b: u64) -> u64 {
    (a + p - b % p) % p
}

pub fn mul(p: u64, a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow(p: u64, mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(p, acc, base);
        }
        base = mul(p, base, base);
        exp >>= 1;
    }
    acc
}

pub fn inv(p: u64, a: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow(p, a, p - 2)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Reduced row echelon form in place; returns pivot columns.
fn rref(p: u64, m: &mut [Vec<u64>]) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(r) = (row..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(row, r);
        let scale = inv(p, m[row][col]);
        for c in col..cols {
            m[row][c] = mul(p, m[row][c], scale);
        }
        for r2 in 0..rows {
            if r2 != row && m[r2][col] != 0 {
                let f = m[r2][col];
                for c in col..cols {
                    let t = mul(p, f, m[row][c]);
                    m[r2][c] = sub(p, m[r2][c], t);
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    pivots
}

/// Basis of the right nullspace of a square matrix.
pub fn nullspace(p: u64, m: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let n = m.len();
    let mut work: Vec<Vec<u64>> = m.to_vec();
    let pivots = rref(p, &mut work);
    let mut is_pivot = alloc::vec![false; n];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in 0..n {
        if is_pivot[free] {
            continue;
        }
        let mut v = alloc::vec![0u64; n];
        v[free] = 1;
        for (prow, &pc) in pivots.iter().enumerate() {
            v[pc] = sub(p, 0, work[prow][free]);
        }
        basis.push(v);
    }
    basis
}

/// Coordinates of each target vector in the span of `basis` (column
/// vectors). Panics if a target is outside the span; the caller only uses
/// invariant subspaces.
pub fn coords_in_span(p: u64, basis: &[Vec<u64>], targets: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let n = basis[0].len();
    let k = basis.len();
    let t = targets.len();
    let mut aug: Vec<Vec<u64>> = (0..n)
        .map(|r| {
            let mut row: Vec<u64> = basis.iter().map(|b| b[r]).collect();
            row.extend(targets.iter().map(|v| v[r]));
            row
        })
        .collect();
    let pivots = rref(p, &mut aug);
    assert!(pivots.len() == k && pivots.iter().all(|&c| c < k), "targets outside span");
    let mut out = alloc::vec![alloc::vec![0u64; k]; t];
    for (prow, &pc) in pivots.iter().enumerate() {
        for j in 0..t {
            out[j][pc] = aug[prow][k + j];
        }
    }
    // Consistency: rows below the pivots must be zero.
    for r in pivots.len()..n {
        for j in 0..t {
            assert!(aug[r][k + j] == 0, "targets outside span");
        }
    }
    out
}

pub fn determinant(p: u64, m: &[Vec<u64>]) -> u64 {
    let n = m.len();
    let mut work = m.to_vec();
    let mut det = 1u64;
    for col in 0..n {
        let Some(r) = (col..n).find(|&r| work[r][col] != 0) else {
            return 0;
        };
        if r != col {
            work.swap(r, col);
            det = sub(p, 0, det);
        }
        det = mul(p, det, work[col][col]);
        let scale = inv(p, work[col][col]);
        for r2 in col + 1..n {
            if work[r2][col] != 0 {
                let f = mul(p, work[r2][col], scale);
                for c in col..n {
                    let t = mul(p, f, work[col][c]);
                    work[r2][c] = sub(p, work[r2][c], t);
                }
            }
        }
    }
    det
}

/// All eigenvalues in `F_p` of a square matrix: the characteristic
/// polynomial is interpolated from determinant evaluations, then every
/// field element is tested as a root.
pub fn eigenvalues(p: u64, m: &[Vec<u64>]) -> Vec<u64> {
    let n = m.len();
    debug_assert!((n as u64) < p);
    // Evaluate q(x) = det(M - xI) at x = 0..n.
    let mut evals = Vec::with_capacity(n + 1);
    for x in 0..=n as u64 {
        let shifted: Vec<Vec<u64>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        if r == c {
                            sub(p, m[r][c], x)
                        } else {
                            m[r][c]
                        }
                    })
                    .collect()
            })
            .collect();
        evals.push(determinant(p, &shifted));
    }
    // Lagrange interpolation on nodes 0..n.
    let mut coeffs = alloc::vec![0u64; n + 1];
    for (i, &yi) in evals.iter().enumerate() {
        if yi == 0 {
            continue;
        }
        // Build the numerator polynomial Π_{j≠i} (x - j) incrementally.
        let mut num = alloc::vec![0u64; n + 1];
        num[0] = 1;
        let mut deg = 0;
        let mut denom = 1u64;
        for j in 0..=n {
            if j == i {
                continue;
            }
            denom = mul(p, denom, sub(p, i as u64, j as u64));
            for k in (0..=deg).rev() {
                let c = num[k];
                num[k + 1] = add(p, num[k + 1], c);
                num[k] = mul(p, c, sub(p, 0, j as u64));
            }
            deg += 1;
        }
        let scale = mul(p, yi, inv(p, denom));
        for k in 0..=n {
            coeffs[k] = add(p, coeffs[k], mul(p, num[k], scale));
        }
    }
    // Root sweep by Horner evaluation.
    let mut roots = Vec::new();
    for x in 0..p {
        let mut acc = 0u64;
        for &c in coeffs.iter().rev() {
            acc = add(p, mul(p, acc, x), c);
        }
        if acc == 0 {
            roots.push(x);
        }
    }
    roots
}
