//! Brute-force oracles that share no code with the library algorithms.

#![allow(dead_code)]

/// Standard Young tableaux of shape `parts`, each as a grid of rows.
pub fn syt(parts: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let n: usize = parts.iter().sum();
    let mut out = Vec::new();
    let mut grid: Vec<Vec<usize>> = parts.iter().map(|_| Vec::new()).collect();
    fill(parts, &mut grid, 1, n, &mut out);
    out
}

fn fill(parts: &[usize], grid: &mut Vec<Vec<usize>>, next: usize, n: usize, out: &mut Vec<Vec<Vec<usize>>>) {
    if next > n {
        out.push(grid.clone());
        return;
    }
    for r in 0..parts.len() {
        let len = grid[r].len();
        let fits = len < parts[r] && (r == 0 || grid[r - 1].len() > len);
        if fits {
            grid[r].push(next);
            fill(parts, grid, next + 1, n, out);
            grid[r].pop();
        }
    }
}

pub fn inversions(word: &[usize]) -> usize {
    (0..word.len()).map(|i| word[i + 1..].iter().filter(|&&b| b < word[i]).count()).sum()
}

pub fn major_index(word: &[usize]) -> usize {
    (1..word.len()).filter(|&i| word[i - 1] > word[i]).sum()
}

/// `Σ_T q^{inv}` over SYT, where the word lists the reading position (rows
/// top to bottom, left to right) of the cells holding `1, 2, ..., n`.
pub fn syt_inv_coeffs(parts: &[usize]) -> Vec<i64> {
    let n: usize = parts.iter().sum();
    let mut coeffs = vec![0i64; n * n.saturating_sub(1) / 2 + 1];
    for t in syt(parts) {
        let mut word = vec![0; n];
        let mut pos = 1;
        for row in &t {
            for &v in row {
                word[v - 1] = pos;
                pos += 1;
            }
        }
        coeffs[inversions(&word)] += 1;
    }
    while coeffs.len() > 1 && coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    if coeffs == [0] {
        coeffs.clear();
    }
    coeffs
}

pub fn syt_imbalance(parts: &[usize]) -> i64 {
    syt_inv_coeffs(parts).iter().enumerate().map(|(i, c)| if i % 2 == 0 { *c } else { -c }).sum()
}

/// Fillings of the shifted diagram of a strict partition increasing along
/// rows and columns. Row `r` starts in column `r`.
pub fn shifted_syt_count(strict: &[usize]) -> u64 {
    let n: usize = strict.iter().sum();
    let mut lens = vec![0usize; strict.len()];
    fn go(strict: &[usize], lens: &mut Vec<usize>, left: usize) -> u64 {
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        for r in 0..strict.len() {
            // Next cell of row r sits in column r + lens[r]; the row above
            // must already reach that column.
            let col = r + lens[r];
            let fits = lens[r] < strict[r] && (r == 0 || (r - 1) + lens[r - 1] > col);
            if fits {
                lens[r] += 1;
                total += go(strict, lens, left - 1);
                lens[r] -= 1;
            }
        }
        total
    }
    go(strict, &mut lens, n)
}

/// 2-core via beta numbers on a two-runner abacus.
pub fn abacus_core(parts: &[usize]) -> Vec<usize> {
    let k = parts.len();
    let beta: Vec<usize> = parts.iter().enumerate().map(|(i, &p)| p + (k - 1 - i)).collect();
    let even = beta.iter().filter(|b| *b % 2 == 0).count();
    let odd = k - even;
    // Slide beads to the top of each runner.
    let mut pushed: Vec<usize> = (0..even).map(|j| 2 * j).chain((0..odd).map(|j| 2 * j + 1)).collect();
    pushed.sort_unstable_by(|a, b| b.cmp(a));
    let core: Vec<usize> = pushed.iter().enumerate().map(|(i, &b)| b - (k - 1 - i)).filter(|&p| p > 0).collect();
    core
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { return out };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

/// Orders `f^{-1}(1), ..., f^{-1}(n)` of linear extensions of the relation
/// `lt`, by filtering all permutations.
pub fn extensions_by_filter(n: usize, lt: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    permutations(n)
        .into_iter()
        .filter(|order| (0..n).all(|i| (i + 1..n).all(|j| !lt(order[j], order[i]))))
        .collect()
}

/// Cover pairs of a strict order: `s < t` with nothing strictly between.
pub fn transitive_reduction(n: usize, lt: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for s in 0..n {
        for t in 0..n {
            if lt(s, t) && !(0..n).any(|u| lt(s, u) && lt(u, t)) {
                out.push((s, t));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Partitions of `n` as part lists.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in 1..=max.min(n) {
            prefix.push(p);
            go(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn content_sum(parts: &[usize]) -> i64 {
    parts.iter().enumerate().map(|(i, &p)| (0..p as i64).map(|j| j - i as i64).sum::<i64>()).sum()
}
