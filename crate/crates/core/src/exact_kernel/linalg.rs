use std::cmp::Ordering;

use super::rational::{is_zero, zero, Rat};
use super::KernelError;

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    let mut s = zero();
    for (x, y) in a.iter().zip(b) {
        if !is_zero(x) && !is_zero(y) {
            s += x * y;
        }
    }
    s
}

pub fn add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: &Rat, a: &[Rat]) -> Vec<Rat> {
    a.iter().map(|x| c * x).collect()
}

/// a + c*b
pub fn axpy(a: &[Rat], c: &Rat, b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + c * y).collect()
}

pub fn neg(a: &[Rat]) -> Vec<Rat> {
    a.iter().map(|x| -x).collect()
}

pub fn is_zero_vec(a: &[Rat]) -> bool {
    a.iter().all(is_zero)
}

pub fn combination(weights: &[Rat], points: &[Vec<Rat>], dim: usize) -> Vec<Rat> {
    let mut out = vec![zero(); dim];
    for (w, p) in weights.iter().zip(points) {
        if is_zero(w) {
            continue;
        }
        for (o, x) in out.iter_mut().zip(p) {
            *o += w * x;
        }
    }
    out
}

pub fn cmp_lex(a: &[Rat], b: &[Rat]) -> Ordering {
    a.cmp(b)
}

/// Reduced row echelon form in place. Returns pivot columns, one per nonzero row;
/// zero rows are removed.
pub fn rref(rows: &mut Vec<Vec<Rat>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rat::from(1) / &rows[r][c];
        for x in rows[r].iter_mut() {
            if !is_zero(x) {
                *x *= &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || is_zero(&row[c]) {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !is_zero(y) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vec<Rat>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// Basis of {x : row·x = 0 for all rows}.
pub fn nullspace(rows: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let mut basis = Vec::new();
    for f in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![zero(); ncols];
        v[f] = Rat::from(1);
        for (row, &pc) in m.iter().zip(&pivots) {
            v[pc] = -&row[f];
        }
        basis.push(v);
    }
    basis
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanMembership {
    pub member: bool,
    /// Present iff `member`; reproduces the target exactly.
    pub coefficients: Option<Vec<Rat>>,
}

pub fn span_membership(target: &[Rat], generators: &[Vec<Rat>]) -> Result<SpanMembership, KernelError> {
    let n = target.len();
    for g in generators {
        if g.len() != n {
            return Err(KernelError::DimensionMismatch { expected: n, found: g.len() });
        }
    }
    let k = generators.len();
    // Rows: one per coordinate, columns: generators then the target.
    let mut m: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rat> = generators.iter().map(|g| g[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let pivots = rref(&mut m, k + 1);
    if pivots.last() == Some(&k) {
        return Ok(SpanMembership { member: false, coefficients: None });
    }
    let mut coeffs = vec![zero(); k];
    for (row, &pc) in m.iter().zip(&pivots) {
        coeffs[pc] = row[k].clone();
    }
    Ok(SpanMembership { member: true, coefficients: Some(coeffs) })
}
