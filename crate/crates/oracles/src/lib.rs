//! Slow, independent reference computations for tests. Nothing here depends
//! on `grsod-core`; partitions are plain `Vec<usize>` without trailing zeros.

use std::collections::BTreeMap;

/// Signed Schur expansion: partition → coefficient.
pub type Expansion = BTreeMap<Vec<usize>, i64>;

/// All partitions of `total`, largest parts first.
pub fn partitions_of(total: usize) -> Vec<Vec<usize>> {
    fn fill(prefix: &mut Vec<usize>, remaining: usize, cap: usize, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in (1..=cap.min(remaining)).rev() {
            prefix.push(p);
            fill(prefix, remaining - p, p, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    fill(&mut Vec::new(), total, total, &mut out);
    out
}

/// Multiplies every Schur function in `input` by `h_r` (Pieri: add a
/// horizontal strip of `r` boxes).
pub fn pieri(input: &Expansion, r: usize) -> Expansion {
    fn strips(
        lambda: &[usize],
        row: usize,
        left: usize,
        mu: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if row == lambda.len() + 1 {
            if left == 0 {
                let mut m = mu.clone();
                while m.last() == Some(&0) {
                    m.pop();
                }
                out.push(m);
            }
            return;
        }
        let base = lambda.get(row).copied().unwrap_or(0);
        // interlacing: λ_row ≤ μ_row ≤ λ_{row-1}
        let cap = if row == 0 {
            base + left
        } else {
            lambda[row - 1]
        };
        for part in base..=cap.min(base + left) {
            mu.push(part);
            strips(lambda, row + 1, left - (part - base), mu, out);
            mu.pop();
        }
    }
    let mut out = Expansion::new();
    for (lambda, &coeff) in input {
        let mut found = Vec::new();
        strips(lambda, 0, r, &mut Vec::new(), &mut found);
        for mu in found {
            *out.entry(mu).or_insert(0) += coeff;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn signed_permutations(len: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, i64)>) {
        if prefix.len() == used.len() {
            let inversions = (0..prefix.len())
                .flat_map(|i| (i + 1..prefix.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| prefix[i] > prefix[j])
                .count();
            out.push((prefix.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; len], &mut out);
    out
}

/// `s_a · s_b` via Jacobi–Trudi `s_b = det(h_{b_i − i + j})` and iterated Pieri.
pub fn schur_product(a: &[usize], b: &[usize]) -> Expansion {
    let a: Vec<usize> = a.iter().copied().filter(|&x| x > 0).collect();
    let b: Vec<usize> = b.iter().copied().filter(|&x| x > 0).collect();
    let len = b.len();
    // group the determinant expansion by the multiset of h-indices
    let mut h_terms: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
    for (sigma, sign) in signed_permutations(len) {
        let indices: Option<Vec<usize>> = sigma
            .iter()
            .enumerate()
            .map(|(i, &s)| usize::try_from(b[i] as i64 - i as i64 + s as i64).ok())
            .collect();
        if let Some(mut indices) = indices {
            indices.sort_unstable();
            *h_terms.entry(indices).or_insert(0) += sign;
        }
    }

    let mut total = Expansion::new();
    for (indices, sign) in h_terms.into_iter().filter(|(_, s)| *s != 0) {
        let mut current = Expansion::new();
        current.insert(a.clone(), sign);
        for &r in &indices {
            current = pieri(&current, r);
        }
        for (mu, c) in current {
            *total.entry(mu).or_insert(0) += c;
        }
    }
    total.retain(|_, c| *c != 0);
    total
}

/// Number of semistandard tableaux of `shape` with entries in `1..=rank`.
pub fn ssyt_count(shape: &[usize], rank: usize) -> u64 {
    let shape: Vec<usize> = shape.iter().copied().filter(|&x| x > 0).collect();
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid = vec![vec![0usize; shape.first().copied().unwrap_or(0)]; shape.len()];
    fn go(idx: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, rank: usize) -> u64 {
        if idx == cells.len() {
            return 1;
        }
        let (r, c) = cells[idx];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        let mut total = 0;
        for v in lo_row.max(lo_col)..=rank {
            grid[r][c] = v;
            total += go(idx + 1, cells, grid, rank);
        }
        grid[r][c] = 0;
        total
    }
    go(0, &cells, &mut grid, rank)
}
