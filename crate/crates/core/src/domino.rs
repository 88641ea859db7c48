//! Standard domino tableaux of shapes, `P`-domino tableaux of posets,
//! tilability, and chains of order ideals with prescribed block sizes.

use std::collections::HashMap;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::QPolynomial;
use crate::poset::{bit, bits, extension_stats, Labeling, Poset, DEFAULT_CAP};
use crate::shapes::{Domino, Partition};

/// A chain `∅ = λ⁰ ⊂ λ¹ ⊂ ... ⊂ λᵐ = λ` whose steps are dominos.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominoTableau {
    chain: Vec<Partition>,
    dominoes: Vec<Domino>,
}

impl DominoTableau {
    pub fn shape(&self) -> &Partition {
        self.chain.last().expect("chain starts at the empty partition")
    }

    pub fn chain(&self) -> &[Partition] {
        &self.chain
    }

    /// `dominoes()[i]` is `λ^{i+1} / λ^i`.
    pub fn dominoes(&self) -> &[Domino] {
        &self.dominoes
    }

    /// Vertical dominos in even columns.
    pub fn ev(&self) -> usize {
        self.dominoes.iter().filter(|d| d.is_vertical() && d.column() % 2 == 0).count()
    }

    /// All vertical dominos.
    pub fn vdom(&self) -> usize {
        self.dominoes.iter().filter(|d| d.is_vertical()).count()
    }
}

fn check_even(lambda: &Partition) -> Result<()> {
    if lambda.size() % 2 == 1 {
        return Err(Error::OddSize(lambda.size()));
    }
    Ok(())
}

/// Every standard domino tableau of shape `λ`.
pub fn enumerate_sdt(lambda: &Partition) -> Result<Vec<DominoTableau>> {
    check_even(lambda)?;
    fn go(l: &Partition, suffix: &mut Vec<(Partition, Domino)>, out: &mut Vec<DominoTableau>) {
        if l.is_empty() {
            let mut chain = vec![Partition::empty()];
            let mut dominoes = Vec::with_capacity(suffix.len());
            for (p, d) in suffix.iter().rev() {
                chain.push(p.clone());
                dominoes.push(*d);
            }
            out.push(DominoTableau { chain, dominoes });
            return;
        }
        for d in l.removable_dominos() {
            suffix.push((l.clone(), d));
            go(&l.remove_domino(&d), suffix, out);
            suffix.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda, &mut Vec::new(), &mut out);
    Ok(out)
}

fn ev_weight(d: &Domino) -> usize {
    usize::from(d.is_vertical() && d.column().is_multiple_of(2))
}

/// `Σ_D (-1)^{ev(D)}` over standard domino tableaux of shape `λ`, by a
/// recursion on the last domino.
pub fn imbalance_domino(lambda: &Partition) -> Result<i64> {
    check_even(lambda)?;
    fn go(l: &Partition, memo: &mut HashMap<Partition, i64>) -> i64 {
        if l.is_empty() {
            return 1;
        }
        if let Some(&v) = memo.get(l) {
            return v;
        }
        let v = l
            .removable_dominos()
            .iter()
            .map(|d| if ev_weight(d) == 1 { -go(&l.remove_domino(d), memo) } else { go(&l.remove_domino(d), memo) })
            .sum();
        memo.insert(l.clone(), v);
        v
    }
    Ok(go(lambda, &mut HashMap::new()))
}

/// Largest `ev(D)` over domino tableaux of shape `λ`, or `None` if there are
/// none.
pub fn max_ev(lambda: &Partition) -> Option<usize> {
    fn go(l: &Partition, memo: &mut HashMap<Partition, Option<usize>>) -> Option<usize> {
        if l.is_empty() {
            return Some(0);
        }
        if let Some(&v) = memo.get(l) {
            return v;
        }
        let v = l
            .removable_dominos()
            .iter()
            .filter_map(|d| go(&l.remove_domino(d), memo).map(|m| m + ev_weight(d)))
            .max();
        memo.insert(l.clone(), v);
        v
    }
    if lambda.size() % 2 == 1 {
        return None;
    }
    go(lambda, &mut HashMap::new())
}

/// `∅ = K_0 ⊂ K_1 ⊂ ... ⊂ K_k = P`, stored as element masks `K_1..K_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdealChain {
    ideals: Vec<u64>,
}

impl IdealChain {
    pub fn new(p: &Poset, ideals: Vec<u64>) -> Result<Self> {
        let mut prev = 0u64;
        for &k in &ideals {
            if k & prev != prev || k == prev || !p.is_order_ideal(k) {
                return Err(Error::Parse(format!("{ideals:?} is not a strict chain of order ideals")));
            }
            prev = k;
        }
        if prev != p.all() {
            return Err(Error::Parse("chain does not end at the whole poset".into()));
        }
        Ok(Self { ideals })
    }

    pub fn ideals(&self) -> &[u64] {
        &self.ideals
    }

    /// The blocks `K_i - K_{i-1}` as masks.
    pub fn blocks(&self) -> Vec<u64> {
        let mut prev = 0;
        self.ideals
            .iter()
            .map(|&k| {
                let b = k & !prev;
                prev = k;
                b
            })
            .collect()
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks().iter().map(|b| b.count_ones() as usize).collect()
    }
}

impl Serialize for IdealChain {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let blocks: Vec<Vec<usize>> = self.blocks().into_iter().map(|b| bits(b).collect()).collect();
        blocks.serialize(s)
    }
}

/// A composition of `n`: positive parts in order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse(format!("composition {parts:?} has a zero part")));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }
}

/// All compositions of `n` with parts at most `max_part`.
pub fn compositions(n: usize, max_part: usize) -> Vec<Composition> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if n == 0 {
            out.push(Composition { parts: prefix.clone() });
            return;
        }
        for p in 1..=max.min(n) {
            prefix.push(p);
            go(n - p, max, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_part, &mut Vec::new(), &mut out);
    out
}

/// Pairs `{s < t}` that can be added to the ideal `k` as a 2-element chain
/// block, as masks.
fn chain_blocks(p: &Poset, k: u64) -> impl Iterator<Item = u64> + '_ {
    bits(p.available(k)).flat_map(move |s| {
        let with_s = k | bit(s);
        bits(p.above(s)).filter(move |&t| p.below(t) & !with_s == 0).map(move |t| bit(s) | bit(t))
    })
}

/// Every `P`-domino tableau: for even `n` all blocks are 2-element chains;
/// for odd `n` the last block is a single element.
pub fn p_domino_tableaux(p: &Poset) -> Vec<IdealChain> {
    fn go(p: &Poset, k: u64, stack: &mut Vec<u64>, out: &mut Vec<IdealChain>) {
        let remaining = p.len() - k.count_ones() as usize;
        if remaining == 0 {
            out.push(IdealChain { ideals: stack.clone() });
            return;
        }
        if remaining == 1 {
            stack.push(p.all());
            out.push(IdealChain { ideals: stack.clone() });
            stack.pop();
            return;
        }
        for b in chain_blocks(p, k).collect::<Vec<_>>() {
            stack.push(k | b);
            go(p, k | b, stack, out);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    go(p, 0, &mut Vec::new(), &mut out);
    out
}

/// Number of `P`-domino tableaux, memoized on the current ideal.
pub fn count_p_domino(p: &Poset) -> u64 {
    fn go(p: &Poset, k: u64, memo: &mut HashMap<u64, u64>) -> u64 {
        let remaining = p.len() - k.count_ones() as usize;
        if remaining <= 1 {
            return 1;
        }
        if let Some(&v) = memo.get(&k) {
            return v;
        }
        let v = chain_blocks(p, k).collect::<Vec<_>>().into_iter().map(|b| go(p, k | b, memo)).sum();
        memo.insert(k, v);
        v
    }
    go(p, 0, &mut HashMap::new())
}

/// Whether a chain of order ideals with 2-element chain blocks reaches `P`.
pub fn is_tilable(p: &Poset) -> Result<bool> {
    if p.len() % 2 == 1 {
        return Err(Error::ParityMismatch(format!("tilability needs an even poset, got {}", p.len())));
    }
    Ok(count_p_domino(p) > 0)
}

/// Odd `n = 2m + 1`: whether some chain of ideals has a single-element
/// block at position `j` and 2-element chain blocks elsewhere.
pub fn is_j_tilable(p: &Poset, j: usize) -> Result<bool> {
    let n = p.len();
    if n.is_multiple_of(2) || n < 3 {
        return Err(Error::ParityMismatch(format!("j-tilability needs an odd poset of size at least 3, got {n}")));
    }
    let m = n / 2;
    if j == 0 || j > m + 1 {
        return Err(Error::ParityMismatch(format!("position {j} outside 1..={}", m + 1)));
    }
    fn go(p: &Poset, k: u64, j: usize, memo: &mut HashMap<u64, bool>) -> bool {
        if k == p.all() {
            return true;
        }
        if let Some(&v) = memo.get(&k) {
            return v;
        }
        let size = k.count_ones() as usize;
        // Blocks placed so far; the singleton is placed iff `size` is odd.
        let placed = size.div_ceil(2);
        let v = if size.is_multiple_of(2) && placed + 1 == j {
            bits(p.available(k)).any(|s| go(p, k | bit(s), j, memo))
        } else {
            chain_blocks(p, k).collect::<Vec<_>>().into_iter().any(|b| go(p, k | b, j, memo))
        };
        memo.insert(k, v);
        v
    }
    Ok(go(p, 0, j, &mut HashMap::new()))
}

/// Every chain of order ideals whose block sizes are the parts of `alpha`.
pub fn alpha_chains(p: &Poset, alpha: &Composition) -> Result<Vec<IdealChain>> {
    if alpha.total() != p.len() {
        return Err(Error::CompositionMismatch { parts: alpha.parts().to_vec(), n: p.len() });
    }
    fn go(p: &Poset, alpha: &[usize], k: u64, stack: &mut Vec<u64>, out: &mut Vec<IdealChain>) {
        let Some((&size, rest)) = alpha.split_first() else {
            out.push(IdealChain { ideals: stack.clone() });
            return;
        };
        for b in subsets_of_size(p.all() & !k, size) {
            if p.is_order_ideal(k | b) {
                stack.push(k | b);
                go(p, rest, k | b, stack, out);
                stack.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(p, alpha.parts(), 0, &mut Vec::new(), &mut out);
    Ok(out)
}

fn subsets_of_size(pool: u64, size: usize) -> Vec<u64> {
    let elems: Vec<usize> = bits(pool).collect();
    let mut out = Vec::new();
    fn go(elems: &[usize], size: usize, acc: u64, out: &mut Vec<u64>) {
        if size == 0 {
            out.push(acc);
            return;
        }
        if elems.len() < size {
            return;
        }
        go(&elems[1..], size - 1, acc | bit(elems[0]), out);
        go(&elems[1..], size, acc, out);
    }
    go(&elems, size, 0, &mut out);
    out
}

/// `I(q)` of the subposet on `block`, labelled by the order-isomorphic
/// relabeling of `ω` to `1..#block`.
pub fn block_inv_poly(p: &Poset, block: u64, omega: &Labeling) -> Result<QPolynomial> {
    let (sub, keep) = p.induced(block);
    let mut by_label: Vec<usize> = (0..keep.len()).collect();
    by_label.sort_by_key(|&i| omega.label(keep[i]));
    let mut labels = vec![0; keep.len()];
    for (rank, &i) in by_label.iter().enumerate() {
        labels[i] = rank + 1;
    }
    Ok(extension_stats(&sub, &Labeling::new(labels)?, DEFAULT_CAP)?.inv)
}

/// Minimum inversion count over linear extensions compatible with the
/// chain: inversions between blocks plus each block's own minimum.
pub fn chain_inv(p: &Poset, chain: &IdealChain, omega: &Labeling) -> Result<usize> {
    let blocks = chain.blocks();
    let mut inv = 0;
    for (i, &a) in blocks.iter().enumerate() {
        for &b in &blocks[i + 1..] {
            for s in bits(a) {
                inv += bits(b).filter(|&t| omega.label(s) > omega.label(t)).count();
            }
        }
        inv += block_inv_poly(p, a, omega)?.valuation().unwrap_or(0);
    }
    Ok(inv)
}

/// `Σ_C q^{inv(C)} Π_i Ĩ_i(q)` over `α`-chains `C`, where `Ĩ_i` is the block
/// polynomial with its lowest power of `q` divided out. This equals
/// `I_{P,ω}(q)`.
pub fn factorized_inv_poly(p: &Poset, omega: &Labeling, alpha: &Composition) -> Result<QPolynomial> {
    let mut acc = QPolynomial::zero();
    for chain in alpha_chains(p, alpha)? {
        let mut term = QPolynomial::one().shift(chain_inv(p, &chain, omega)?);
        for b in chain.blocks() {
            let poly = block_inv_poly(p, b, omega)?;
            let low = poly.valuation().unwrap_or(0);
            term = &term * &poly.unshift(low)?;
        }
        acc += &term;
    }
    Ok(acc)
}
