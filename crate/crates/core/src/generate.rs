//! Poset generators: every naturally labelled poset of a given size, seeded
//! random posets, and forests up to isomorphism.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poset::{bit, bits, full_mask, Poset};

/// Default edge probability for [`random_poset`].
pub const DEFAULT_EDGE_PROBABILITY: f64 = 0.3;

/// Every poset on `0..n` in which `s < t` implies `s < t` as integers, each
/// once. Element `t` may sit above any order ideal of `{0, ..., t-1}`.
pub fn natural_posets(n: usize) -> Vec<Poset> {
    let mut out = Vec::new();
    extend_natural(n, &mut Vec::with_capacity(n), &mut out);
    out
}

fn extend_natural(n: usize, lower: &mut Vec<u64>, out: &mut Vec<Poset>) {
    let t = lower.len();
    if t == n {
        out.push(Poset::from_lower_sets(lower.clone()));
        return;
    }
    // Subsets of 0..t, in increasing order, that are closed downward.
    for down in 0..=full_mask(t) {
        if bits(down).all(|s| lower[s] & !down == 0) {
            lower.push(down);
            extend_natural(n, lower, out);
            lower.pop();
        }
    }
}

/// A random naturally labelled poset: each pair `i < j` is related with
/// probability `p`, then the relation is transitively closed.
pub fn random_poset<R: Rng>(n: usize, p: f64, rng: &mut R) -> Poset {
    let mut lower = vec![0u64; n];
    for j in 0..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                lower[j] |= bit(i) | lower[i];
            }
        }
    }
    Poset::from_lower_sets(lower)
}

/// `count` random posets with sizes drawn uniformly from `1..=n_max`, from a
/// fixed seed.
pub fn random_posets(count: usize, n_max: usize, seed: u64) -> Vec<Poset> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=n_max);
            random_poset(n, DEFAULT_EDGE_PROBABILITY, &mut rng)
        })
        .collect()
}

/// Rooted trees with `k` nodes in canonical parenthesised form, for
/// `k = 0..=n`, together with the forests built from them.
struct ForestTable {
    trees: Vec<Vec<String>>,
    forests: Vec<Vec<Vec<String>>>,
}

impl ForestTable {
    fn new(n: usize) -> Self {
        let mut table = ForestTable { trees: vec![Vec::new()], forests: vec![vec![Vec::new()]] };
        for k in 1..=n {
            let mut trees: Vec<String> =
                table.forests[k - 1].iter().map(|f| format!("({})", f.concat())).collect();
            trees.sort();
            table.trees.push(trees);
            let forests = table.multisets(k);
            table.forests.push(forests);
        }
        table
    }

    /// Forests on `k` nodes as nonincreasing lists of canonical trees.
    fn multisets(&self, k: usize) -> Vec<Vec<String>> {
        let all: Vec<&String> = (1..=k).flat_map(|s| self.trees[s].iter()).collect();
        let mut out = Vec::new();
        fn go<'a>(all: &[&'a String], start: usize, left: usize, acc: &mut Vec<&'a String>, out: &mut Vec<Vec<String>>) {
            if left == 0 {
                let mut f: Vec<String> = acc.iter().map(|s| s.to_string()).collect();
                f.sort_by(|a, b| b.cmp(a));
                out.push(f);
                return;
            }
            for i in start..all.len() {
                let size = all[i].len() / 2;
                if size <= left {
                    acc.push(all[i]);
                    go(all, i, left - size, acc, out);
                    acc.pop();
                }
            }
        }
        go(&all, 0, k, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

/// Every forest on `n` nodes up to isomorphism, as posets in which each
/// root is maximal. Nodes are numbered in preorder, so every element's
/// index is smaller than the indices below it.
pub fn forests(n: usize) -> Vec<Poset> {
    ForestTable::new(n).forests[n].iter().map(|f| forest_poset(&f.concat())).collect()
}

/// Canonical form of a forest poset: its trees as sorted parenthesised
/// strings, largest first.
pub fn forest_canonical_form(p: &Poset) -> String {
    fn encode(p: &Poset, t: usize) -> String {
        let mut children: Vec<String> = p.lower_covers(t).map(|s| encode(p, s)).collect();
        children.sort_by(|a, b| b.cmp(a));
        format!("({})", children.concat())
    }
    let mut roots: Vec<String> = bits(p.maximal_mask()).map(|r| encode(p, r)).collect();
    roots.sort_by(|a, b| b.cmp(a));
    roots.concat()
}

fn forest_poset(code: &str) -> Poset {
    let mut parent: Vec<Option<usize>> = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    for ch in code.chars() {
        if ch == '(' {
            parent.push(stack.last().copied());
            stack.push(parent.len() - 1);
        } else {
            stack.pop();
        }
    }
    let covers: Vec<(usize, usize)> = parent.iter().enumerate().filter_map(|(c, p)| p.map(|p| (c, p))).collect();
    Poset::new(parent.len(), &covers).expect("a forest is acyclic")
}

/// Number of forests per size, `0..=n`.
pub fn forest_counts(n: usize) -> BTreeMap<usize, usize> {
    let table = ForestTable::new(n);
    (0..=n).map(|k| (k, table.forests[k].len())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::balance::is_forest;

    #[test]
    fn natural_poset_counts() {
        let counts: Vec<usize> = (0..=5).map(|n| natural_posets(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 7, 40, 357]);
        assert!(natural_posets(4).iter().all(|p| p.covers().iter().all(|&(s, t)| s < t)));
    }

    #[test]
    fn forest_enumeration() {
        let counts: Vec<usize> = forest_counts(8).into_values().collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 20, 48, 115, 286]);
        let fs = forests(5);
        assert!(fs.iter().all(is_forest));
        let mut codes: Vec<String> = fs.iter().map(forest_canonical_form).collect();
        codes.dedup();
        assert_eq!(codes.len(), 20);
    }

    #[test]
    fn random_is_reproducible() {
        let a = random_posets(5, 6, 7);
        let b = random_posets(5, 6, 7);
        assert_eq!(a, b);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let p = random_poset(6, 1.0, &mut rng);
        assert_eq!(p, Poset::chain(6));
        assert_eq!(random_poset(4, 0.0, &mut rng), Poset::antichain(4));
    }
}
