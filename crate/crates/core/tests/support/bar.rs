//! Cohomology of `Z/m` with coefficients in `Z^r` straight from the
//! normalized bar complex. Group elements are residues `0..m`; the generator
//! acts on column vectors by `t`.

use jacobi_mcg::abgrp::{lattice_homology, FgAbelianGroup, IntMatrix};
use num_bigint::BigInt;

fn mat_pow(t: &[Vec<i64>], e: usize) -> Vec<Vec<i64>> {
    let r = t.len();
    let mut acc: Vec<Vec<i64>> = (0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect();
    for _ in 0..e {
        acc = (0..r).map(|i| (0..r).map(|j| (0..r).map(|k| acc[i][k] * t[k][j]).sum()).collect()).collect();
    }
    acc
}

/// Normalized `n`-tuples of nonidentity elements, in lexicographic order.
fn tuples(m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out.into_iter().flat_map(|p| (1..m).map(move |g| [p.clone(), vec![g]].concat())).collect();
    }
    out
}

/// Matrix of `d^n: C^n -> C^(n+1)` on normalized cochains.
pub fn coboundary(m: usize, t: &[Vec<i64>], n: usize) -> IntMatrix {
    let r = t.len();
    let src = tuples(m, n);
    let dst = tuples(m, n + 1);
    let index = |tuple: &[usize]| -> Option<usize> {
        if tuple.contains(&0) {
            return None;
        }
        Some(tuple.iter().fold(0, |acc, &g| acc * (m - 1) + (g - 1)))
    };
    let powers: Vec<Vec<Vec<i64>>> = (0..m).map(|e| mat_pow(t, e)).collect();
    let mut d = vec![vec![0i64; src.len() * r]; dst.len() * r];
    for (row, g) in dst.iter().enumerate() {
        // g1 . f(g2, ..., g_{n+1})
        if let Some(c) = index(&g[1..]) {
            for i in 0..r {
                for j in 0..r {
                    d[row * r + i][c * r + j] += powers[g[0]][i][j];
                }
            }
        }
        for k in 0..n {
            let mut merged: Vec<usize> = g[..k].to_vec();
            merged.push((g[k] + g[k + 1]) % m);
            merged.extend_from_slice(&g[k + 2..]);
            if let Some(c) = index(&merged) {
                let sign = if (k + 1).is_multiple_of(2) { 1 } else { -1 };
                for i in 0..r {
                    d[row * r + i][c * r + i] += sign;
                }
            }
        }
        if let Some(c) = index(&g[..n]) {
            let sign = if (n + 1).is_multiple_of(2) { 1 } else { -1 };
            for i in 0..r {
                d[row * r + i][c * r + i] += sign;
            }
        }
    }
    let cols = src.len() * r;
    let rows = d.into_iter().map(|row| row.into_iter().map(BigInt::from).collect()).collect();
    IntMatrix::from_big_rows(rows, cols).expect("rectangular")
}

/// `H^n(Z/m, Z^r)`; `t` must satisfy `t^m = 1`.
pub fn bar_cohomology(m: usize, t: &[Vec<i64>], n: usize) -> FgAbelianGroup {
    let outgoing = coboundary(m, t, n);
    let incoming = if n == 0 { IntMatrix::zeros(t.len(), 0) } else { coboundary(m, t, n - 1) };
    lattice_homology(&incoming, &outgoing).expect("d^2 = 0")
}
