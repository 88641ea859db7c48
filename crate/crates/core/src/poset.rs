//! Finite posets, labelings, linear extensions, and the two imbalance
//! generating functions `I_{P,ω}(q)` (by inversions) and `W_{P,ω}(q)` (by
//! major index).
//!
//! Elements are indexed `0..n` and sets of elements are `u64` bitmasks, so a
//! poset has at most 64 elements. Every poset stores its strict down-set and
//! up-set per element; the cover relation is kept transitively reduced.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poly::QPolynomial;

/// Default number of linear extensions an enumeration may visit before it
/// refuses.
pub const DEFAULT_CAP: u64 = 10_000_000;

/// Environment variable that overrides [`DEFAULT_CAP`] for the CLI.
pub const CAP_ENV: &str = "IMBALANCE_CAP";

/// Reads the extension cap from `IMBALANCE_CAP`, falling back to the default.
pub fn cap_from_env() -> u64 {
    std::env::var(CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_CAP)
}

#[inline]
pub(crate) fn bit(i: usize) -> u64 {
    1u64 << i
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    /// Cover pairs `(s, t)` with `t` covering `s`, sorted.
    covers: Vec<(usize, usize)>,
    lower: Vec<u64>,
    upper: Vec<u64>,
}

impl Poset {
    /// Builds a poset from cover pairs `(s, t)` meaning `s < t`. Redundant
    /// (transitively implied) pairs are dropped.
    pub fn new(n: usize, covers: &[(usize, usize)]) -> Result<Self> {
        if n > 64 {
            return Err(Error::TooLarge(n));
        }
        let mut succ = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for &(s, t) in covers {
            for i in [s, t] {
                if i >= n {
                    return Err(Error::IndexOutOfRange { index: i, n });
                }
            }
            if s == t {
                return Err(Error::SelfLoop(s));
            }
            succ[s].push(t);
            indeg[t] += 1;
        }
        // Kahn's algorithm; leftover vertices sit on a cycle.
        let mut queue: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(s) = queue.pop() {
            topo.push(s);
            for &t in &succ[s] {
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    queue.push(t);
                }
            }
        }
        if topo.len() != n {
            return Err(Error::Cycle);
        }
        let mut lower = vec![0u64; n];
        for &s in &topo {
            for &t in &succ[s] {
                lower[t] |= lower[s] | bit(s);
            }
        }
        Ok(Self::from_lower_sets(lower))
    }

    /// Builds a poset from a relation `le(s, t)`, which must be a partial
    /// order.
    pub fn from_relation(n: usize, le: impl Fn(usize, usize) -> bool) -> Result<Self> {
        if n > 64 {
            return Err(Error::TooLarge(n));
        }
        let mut lower = vec![0u64; n];
        for t in 0..n {
            if !le(t, t) {
                return Err(Error::Parse(format!("relation is not reflexive at {t}")));
            }
            for s in 0..n {
                if s != t && le(s, t) {
                    if le(t, s) {
                        return Err(Error::Cycle);
                    }
                    lower[t] |= bit(s);
                }
            }
        }
        for t in 0..n {
            for s in bits(lower[t]) {
                if lower[s] & !lower[t] != 0 {
                    return Err(Error::Parse("relation is not transitive".into()));
                }
            }
        }
        Ok(Self::from_lower_sets(lower))
    }

    /// `lower[t]` is the strict down-set of `t`; it must already be
    /// transitively closed and acyclic.
    pub(crate) fn from_lower_sets(lower: Vec<u64>) -> Self {
        let n = lower.len();
        let mut upper = vec![0u64; n];
        for t in 0..n {
            for s in bits(lower[t]) {
                upper[s] |= bit(t);
            }
        }
        let mut covers = Vec::new();
        for s in 0..n {
            for t in bits(upper[s]) {
                if lower[t] & upper[s] == 0 {
                    covers.push((s, t));
                }
            }
        }
        Self { n, covers, lower, upper }
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_lower_sets(vec![0; n])
    }

    /// The chain `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Self {
        Self::from_lower_sets((0..n).map(full_mask).collect())
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn all(&self) -> u64 {
        full_mask(self.n)
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn leq(&self, s: usize, t: usize) -> bool {
        s == t || self.lower[t] & bit(s) != 0
    }

    pub fn lt(&self, s: usize, t: usize) -> bool {
        self.lower[t] & bit(s) != 0
    }

    pub fn comparable(&self, s: usize, t: usize) -> bool {
        self.leq(s, t) || self.leq(t, s)
    }

    /// Strict down-set `{s : s < t}` as a mask.
    pub fn below(&self, t: usize) -> u64 {
        self.lower[t]
    }

    /// Strict up-set `{s : s > t}` as a mask.
    pub fn above(&self, t: usize) -> u64 {
        self.upper[t]
    }

    /// The full order relation as a matrix, `leq[s][t]`.
    pub fn leq_matrix(&self) -> Vec<Vec<bool>> {
        (0..self.n).map(|s| (0..self.n).map(|t| self.leq(s, t)).collect()).collect()
    }

    pub fn lower_covers(&self, t: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.lower[t]).filter(move |&s| self.lower[t] & self.upper[s] == 0)
    }

    pub fn upper_covers(&self, s: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.upper[s]).filter(move |&t| self.lower[t] & self.upper[s] == 0)
    }

    pub fn is_cover(&self, s: usize, t: usize) -> bool {
        self.lt(s, t) && self.lower[t] & self.upper[s] == 0
    }

    pub fn minimal_mask(&self) -> u64 {
        (0..self.n).filter(|&t| self.lower[t] == 0).fold(0, |m, t| m | bit(t))
    }

    pub fn maximal_mask(&self) -> u64 {
        (0..self.n).filter(|&t| self.upper[t] == 0).fold(0, |m, t| m | bit(t))
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        bits(self.minimal_mask()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        bits(self.maximal_mask()).collect()
    }

    pub fn is_order_ideal(&self, mask: u64) -> bool {
        bits(mask).all(|t| self.lower[t] & !mask == 0)
    }

    /// The dual poset `P*`, with every relation reversed.
    pub fn dual(&self) -> Poset {
        Self::from_lower_sets(self.upper.clone())
    }

    /// The subposet induced on `mask`, with elements renumbered in increasing
    /// index order. Returns the subposet and the original index of each of
    /// its elements.
    pub fn induced(&self, mask: u64) -> (Poset, Vec<usize>) {
        let keep: Vec<usize> = bits(mask & self.all()).collect();
        let lower = keep
            .iter()
            .map(|&t| {
                keep.iter()
                    .enumerate()
                    .filter(|(_, &s)| self.lt(s, t))
                    .fold(0u64, |m, (i, _)| m | bit(i))
            })
            .collect();
        (Self::from_lower_sets(lower), keep)
    }

    /// Elements available to be placed next after `placed`.
    #[inline]
    pub(crate) fn available(&self, placed: u64) -> u64 {
        let mut avail = 0u64;
        for t in bits(self.all() & !placed) {
            if self.lower[t] & !placed == 0 {
                avail |= bit(t);
            }
        }
        avail
    }

    /// Iterates over all linear extensions in lexicographic order of the
    /// sequence `f^{-1}(1), ..., f^{-1}(n)`. The iterator is unbounded; use
    /// [`extensions_capped`] for a guarded collection.
    pub fn linear_extensions(&self) -> LinearExtensions<'_> {
        LinearExtensions { poset: self, order: Vec::with_capacity(self.n), placed: 0, state: IterState::Fresh }
    }

    /// Every maximal chain length ℓ (number of cover steps) as a bitset:
    /// bit ℓ of `chain_lengths()[t]` is set iff some saturated chain from a
    /// minimal element of `P` up to `t` has length ℓ.
    pub fn chain_lengths(&self) -> Vec<u64> {
        let mut lens = vec![0u64; self.n];
        for t in self.topological_order() {
            lens[t] = if self.lower[t] == 0 {
                1
            } else {
                self.lower_covers(t).fold(0, |acc, s| acc | (lens[s] << 1))
            };
        }
        lens
    }

    /// Elements sorted so that every element follows all elements below it;
    /// ties broken by smaller index.
    pub fn topological_order(&self) -> Vec<usize> {
        let mut placed = 0u64;
        let mut out = Vec::with_capacity(self.n);
        while out.len() < self.n {
            let t = self.available(placed).trailing_zeros() as usize;
            placed |= bit(t);
            out.push(t);
        }
        out
    }

    /// Parses the text format: `n <count>`, then one `<s> <t>` cover per
    /// line, then optionally `omega <labels...>`. `#` starts a comment.
    pub fn parse_text(text: &str) -> Result<PosetFile> {
        let mut n = None;
        let mut pairs = Vec::new();
        let mut omega = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            let num = |s: &str| -> Result<usize> {
                s.parse().map_err(|_| Error::Parse(format!("line {}: bad integer `{s}`", lineno + 1)))
            };
            match toks[0] {
                "n" => {
                    if toks.len() != 2 || n.is_some() {
                        return Err(Error::Parse(format!("line {}: expected `n <count>` once", lineno + 1)));
                    }
                    n = Some(num(toks[1])?);
                }
                "omega" => {
                    let labels = toks[1..].iter().map(|t| num(t)).collect::<Result<Vec<_>>>()?;
                    omega = Some(labels);
                }
                _ => {
                    if n.is_none() {
                        return Err(Error::Parse("first line must be `n <count>`".into()));
                    }
                    if toks.len() != 2 {
                        return Err(Error::Parse(format!("line {}: expected `<s> <t>`", lineno + 1)));
                    }
                    pairs.push((num(toks[0])?, num(toks[1])?));
                }
            }
        }
        let n = n.ok_or_else(|| Error::Parse("missing `n <count>` line".into()))?;
        let poset = Poset::new(n, &pairs)?;
        let omega = match omega {
            Some(labels) => {
                if labels.len() != n {
                    return Err(Error::InvalidLabeling(format!("expected {n} labels, got {}", labels.len())));
                }
                Some(Labeling::new(labels)?)
            }
            None => None,
        };
        Ok(PosetFile { poset, omega })
    }

    pub fn to_text(&self, omega: Option<&Labeling>) -> String {
        let mut s = format!("n {}\n", self.n);
        for (a, b) in &self.covers {
            s.push_str(&format!("{a} {b}\n"));
        }
        if let Some(w) = omega {
            let labels: Vec<String> = w.labels().iter().map(ToString::to_string).collect();
            s.push_str(&format!("omega {}\n", labels.join(" ")));
        }
        s
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poset(n={}, covers={:?})", self.n, self.covers)
    }
}

/// A poset read from text, with its optional labeling.
#[derive(Debug, Clone)]
pub struct PosetFile {
    pub poset: Poset,
    pub omega: Option<Labeling>,
}

impl FromStr for PosetFile {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Poset::parse_text(s)
    }
}

/// Bijection `ω` from elements to `{1..n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Labeling {
    labels: Vec<usize>,
}

impl Labeling {
    pub fn new(labels: Vec<usize>) -> Result<Self> {
        let n = labels.len();
        let mut seen = vec![false; n + 1];
        for &l in &labels {
            if l == 0 || l > n || seen[l] {
                return Err(Error::InvalidLabeling(format!("{labels:?} is not a bijection onto 1..{n}")));
            }
            seen[l] = true;
        }
        Ok(Self { labels })
    }

    /// Element `i` gets label `i + 1`.
    pub fn identity(n: usize) -> Self {
        Self { labels: (1..=n).collect() }
    }

    /// Labels elements in the given order, `order[k]` receiving `k + 1`.
    pub fn from_order(order: &[usize]) -> Result<Self> {
        let mut labels = vec![0; order.len()];
        for (k, &e) in order.iter().enumerate() {
            if e >= order.len() || labels[e] != 0 {
                return Err(Error::InvalidLabeling(format!("{order:?} is not an ordering")));
            }
            labels[e] = k + 1;
        }
        Ok(Self { labels })
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, e: usize) -> usize {
        self.labels[e]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// `s < t ⟹ ω(s) < ω(t)`.
    pub fn is_natural(&self, p: &Poset) -> bool {
        p.covers().iter().all(|&(s, t)| self.labels[s] < self.labels[t])
    }
}

/// The natural labeling read off the lexicographically smallest linear
/// extension (smallest available index first).
pub fn natural_labeling(p: &Poset) -> Labeling {
    Labeling::from_order(&p.topological_order()).expect("topological order is a bijection")
}

/// Order-preserving bijection `f: P → {1..n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearExtension {
    /// `order[i] = f^{-1}(i + 1)`.
    order: Vec<usize>,
}

impl LinearExtension {
    /// Validates `order` as the sequence `f^{-1}(1), ..., f^{-1}(n)`.
    pub fn from_order(p: &Poset, order: Vec<usize>) -> Result<Self> {
        if order.len() != p.len() {
            return Err(Error::InvalidExtension(format!("expected {} elements", p.len())));
        }
        let mut placed = 0u64;
        for &e in &order {
            if e >= p.len() || placed & bit(e) != 0 {
                return Err(Error::InvalidExtension(format!("{order:?} is not a bijection")));
            }
            if p.below(e) & !placed != 0 {
                return Err(Error::InvalidExtension(format!("{order:?} is not order preserving")));
            }
            placed |= bit(e);
        }
        Ok(Self { order })
    }

    /// Validates `values[e] = f(e)` (1-based).
    pub fn from_values(p: &Poset, values: &[usize]) -> Result<Self> {
        let mut order = vec![usize::MAX; values.len()];
        for (e, &v) in values.iter().enumerate() {
            if v == 0 || v > values.len() || order[v - 1] != usize::MAX {
                return Err(Error::InvalidExtension(format!("{values:?} is not a bijection")));
            }
            order[v - 1] = e;
        }
        Self::from_order(p, order)
    }

    pub(crate) fn from_order_unchecked(order: Vec<usize>) -> Self {
        Self { order }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// `values()[e] = f(e)`, 1-based.
    pub fn values(&self) -> Vec<usize> {
        let mut v = vec![0; self.order.len()];
        for (i, &e) in self.order.iter().enumerate() {
            v[e] = i + 1;
        }
        v
    }

    pub fn value(&self, e: usize) -> usize {
        self.order.iter().position(|&x| x == e).expect("element in extension") + 1
    }
}

/// The permutation `π(f)` with `a_i = ω(f^{-1}(i))`.
pub fn perm_of(f: &LinearExtension, omega: &Labeling) -> Permutation {
    Permutation::new_unchecked(f.order().iter().map(|&e| omega.label(e)).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum IterState {
    Fresh,
    Running,
    Done,
}

/// Lexicographic linear-extension iterator; see [`Poset::linear_extensions`].
pub struct LinearExtensions<'a> {
    poset: &'a Poset,
    order: Vec<usize>,
    placed: u64,
    state: IterState,
}

impl LinearExtensions<'_> {
    fn complete_greedily(&mut self) {
        while self.order.len() < self.poset.len() {
            let t = self.poset.available(self.placed).trailing_zeros() as usize;
            self.order.push(t);
            self.placed |= bit(t);
        }
    }
}

impl Iterator for LinearExtensions<'_> {
    type Item = LinearExtension;

    fn next(&mut self) -> Option<LinearExtension> {
        match self.state {
            IterState::Done => return None,
            IterState::Fresh => {
                self.state = IterState::Running;
                self.complete_greedily();
                return Some(LinearExtension::from_order_unchecked(self.order.clone()));
            }
            IterState::Running => {}
        }
        // Backtrack to the deepest position that has a larger alternative.
        while let Some(last) = self.order.pop() {
            self.placed &= !bit(last);
            let avail = self.poset.available(self.placed);
            let larger = avail & !full_mask(last + 1);
            if larger != 0 {
                let t = larger.trailing_zeros() as usize;
                self.order.push(t);
                self.placed |= bit(t);
                self.complete_greedily();
                return Some(LinearExtension::from_order_unchecked(self.order.clone()));
            }
        }
        self.state = IterState::Done;
        None
    }
}

/// Collects every linear extension, failing once more than `cap` would be
/// produced.
pub fn extensions_capped(p: &Poset, cap: u64) -> Result<Vec<LinearExtension>> {
    let mut out = Vec::new();
    for f in p.linear_extensions() {
        if out.len() as u64 >= cap {
            return Err(Error::CapExceeded { cap });
        }
        out.push(f);
    }
    Ok(out)
}

/// Histograms of `inv` and `maj` over all linear extensions.
#[derive(Debug, Clone)]
pub struct ExtensionStats {
    pub count: u64,
    pub inv: QPolynomial,
    pub maj: QPolynomial,
}

struct StatsWalk<'a> {
    poset: &'a Poset,
    labels: &'a [usize],
    cap: u64,
    count: u64,
    inv: Vec<u64>,
    maj: Vec<u64>,
}

impl StatsWalk<'_> {
    fn walk(&mut self, placed: u64, placed_labels: u64, prev_label: usize, inv: usize, maj: usize) -> Result<()> {
        let depth = placed.count_ones() as usize;
        if depth == self.poset.len() {
            if self.count >= self.cap {
                return Err(Error::CapExceeded { cap: self.cap });
            }
            self.count += 1;
            self.inv[inv] += 1;
            self.maj[maj] += 1;
            return Ok(());
        }
        for t in bits(self.poset.available(placed)) {
            let l = self.labels[t];
            let greater = placed_labels.checked_shr(l as u32).unwrap_or(0).count_ones() as usize;
            let descent = if depth > 0 && prev_label > l { depth } else { 0 };
            self.walk(placed | bit(t), placed_labels | bit(l - 1), l, inv + greater, maj + descent)?;
        }
        Ok(())
    }
}

/// Single pass computing `I_{P,ω}(q)`, `W_{P,ω}(q)` and `e(P)`.
pub fn extension_stats(p: &Poset, omega: &Labeling, cap: u64) -> Result<ExtensionStats> {
    if omega.len() != p.len() {
        return Err(Error::InvalidLabeling(format!("labeling has {} entries for {} elements", omega.len(), p.len())));
    }
    let n = p.len();
    let top = n * n.saturating_sub(1) / 2;
    let mut walk = StatsWalk {
        poset: p,
        labels: omega.labels(),
        cap,
        count: 0,
        inv: vec![0; top + 1],
        maj: vec![0; top + 1],
    };
    walk.walk(0, 0, 0, 0, 0)?;
    Ok(ExtensionStats {
        count: walk.count,
        inv: QPolynomial::from_counts(&walk.inv),
        maj: QPolynomial::from_counts(&walk.maj),
    })
}

/// `I_{P,ω}(q) = Σ_f q^{inv(π(f))}`.
pub fn inv_poly(p: &Poset, omega: &Labeling) -> Result<QPolynomial> {
    Ok(extension_stats(p, omega, DEFAULT_CAP)?.inv)
}

/// `W_{P,ω}(q) = Σ_f q^{maj(π(f))}`.
pub fn maj_poly(p: &Poset, omega: &Labeling) -> Result<QPolynomial> {
    Ok(extension_stats(p, omega, DEFAULT_CAP)?.maj)
}

pub fn count_extensions(p: &Poset, cap: u64) -> Result<u64> {
    Ok(extension_stats(p, &Labeling::identity(p.len()), cap)?.count)
}

/// Sign balance does not depend on the labeling, so the identity labeling is
/// used.
pub fn is_sign_balanced(p: &Poset) -> Result<bool> {
    Ok(inv_poly(p, &Labeling::identity(p.len()))?.at_minus_one() == 0.into())
}

pub fn is_maj_balanced(p: &Poset, omega: &Labeling) -> Result<bool> {
    Ok(maj_poly(p, omega)?.at_minus_one() == 0.into())
}

/// Every nonminimal element lies above at least two minimal elements (and
/// the poset has at least two elements).
pub fn ruskey_hypothesis(p: &Poset) -> bool {
    if p.len() < 2 {
        return false;
    }
    let minimal = p.minimal_mask();
    (0..p.len()).all(|t| p.below(t) == 0 || (p.below(t) & minimal).count_ones() >= 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v_poset() -> Poset {
        Poset::new(3, &[(0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn construction_and_closure() {
        let a = Poset::new(2, &[]).unwrap();
        assert_eq!(a.leq_matrix(), vec![vec![true, false], vec![false, true]]);

        let v = v_poset();
        assert!(v.leq(0, 2) && v.leq(1, 2) && !v.comparable(0, 1));

        let c = Poset::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(c.covers(), &[(0, 1), (1, 2)]);
        assert!(c.lt(0, 2));
        assert_eq!(c, Poset::chain(3));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Poset::new(2, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(Poset::new(2, &[(0, 1), (1, 0)]), Err(Error::Cycle));
        assert_eq!(Poset::new(3, &[(0, 1), (1, 2), (2, 0)]), Err(Error::Cycle));
        assert_eq!(Poset::new(2, &[(0, 5)]), Err(Error::IndexOutOfRange { index: 5, n: 2 }));
        assert_eq!(Poset::new(65, &[]), Err(Error::TooLarge(65)));
    }

    #[test]
    fn extension_counts() {
        assert_eq!(Poset::chain(3).linear_extensions().count(), 1);
        assert_eq!(Poset::antichain(4).linear_extensions().count(), 24);
        let exts: Vec<_> = v_poset().linear_extensions().map(|f| f.order().to_vec()).collect();
        assert_eq!(exts, vec![vec![0, 1, 2], vec![1, 0, 2]]);
        assert_eq!(Poset::antichain(0).linear_extensions().count(), 1);
    }

    #[test]
    fn lexicographic_order() {
        let exts: Vec<_> = Poset::antichain(3).linear_extensions().map(|f| f.order().to_vec()).collect();
        let mut sorted = exts.clone();
        sorted.sort();
        assert_eq!(exts, sorted);
        assert_eq!(exts.len(), 6);
    }

    #[test]
    fn cap_is_an_error() {
        let p = Poset::antichain(5);
        assert_eq!(extensions_capped(&p, 100), Err(Error::CapExceeded { cap: 100 }));
        assert_eq!(extensions_capped(&p, 120).unwrap().len(), 120);
        assert!(matches!(extension_stats(&p, &Labeling::identity(5), 119), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn perm_of_examples() {
        let v = v_poset();
        let w = Labeling::identity(3);
        let f = LinearExtension::from_values(&v, &[1, 2, 3]).unwrap();
        assert_eq!(perm_of(&f, &w).word(), &[1, 2, 3]);

        let a = Poset::antichain(2);
        let f = LinearExtension::from_values(&a, &[2, 1]).unwrap();
        assert_eq!(perm_of(&f, &Labeling::identity(2)).word(), &[2, 1]);

        // f = ω gives the identity word for any poset.
        let c = Poset::chain(4);
        let f = c.linear_extensions().next().unwrap();
        let w = Labeling::new(f.values()).unwrap();
        assert_eq!(perm_of(&f, &w), Permutation::identity(4));
    }

    #[test]
    fn polynomial_examples() {
        let a = Poset::antichain(2);
        let id = Labeling::identity(2);
        assert_eq!(inv_poly(&a, &id).unwrap(), QPolynomial::from_i64s(&[1, 1]));
        assert_eq!(maj_poly(&a, &id).unwrap(), QPolynomial::from_i64s(&[1, 1]));
        assert_eq!(inv_poly(&Poset::chain(3), &Labeling::identity(3)).unwrap(), QPolynomial::one());
        assert_eq!(maj_poly(&Poset::chain(3), &Labeling::identity(3)).unwrap(), QPolynomial::one());
        assert_eq!(maj_poly(&v_poset(), &Labeling::identity(3)).unwrap(), QPolynomial::from_i64s(&[1, 1]));
        // P_(2,2) with reading-order labels: cells (1,1),(1,2),(2,1),(2,2).
        let square = Poset::new(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(inv_poly(&square, &Labeling::identity(4)).unwrap(), QPolynomial::from_i64s(&[1, 1]));
    }

    #[test]
    fn balance_predicates() {
        assert!(is_sign_balanced(&Poset::antichain(2)).unwrap());
        let one = Poset::antichain(1);
        assert!(!is_sign_balanced(&one).unwrap());
        assert!(!is_maj_balanced(&one, &Labeling::identity(1)).unwrap());
        let square = Poset::new(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert!(is_sign_balanced(&square).unwrap());
    }

    #[test]
    fn natural_labeling_and_dual() {
        let c = Poset::chain(4);
        assert_eq!(natural_labeling(&c).labels(), &[1, 2, 3, 4]);
        let v = v_poset();
        let w = natural_labeling(&v);
        assert!(w.is_natural(&v));
        assert_eq!(w.label(2), 3);
        assert_eq!(v.dual().dual(), v);
        assert_eq!(v.dual().covers(), &[(2, 0), (2, 1)]);
    }

    #[test]
    fn ruskey() {
        assert!(ruskey_hypothesis(&Poset::antichain(2)));
        assert!(ruskey_hypothesis(&v_poset()));
        assert!(!ruskey_hypothesis(&Poset::chain(2)));
        assert!(!ruskey_hypothesis(&Poset::antichain(1)));
    }

    #[test]
    fn induced_subposet() {
        let c = Poset::chain(4);
        let (sub, keep) = c.induced(0b1010);
        assert_eq!(keep, vec![1, 3]);
        assert_eq!(sub, Poset::chain(2));
    }

    #[test]
    fn chain_lengths_bitsets() {
        // 0<1<3 and 0<2<3 plus 4<3 directly: lengths into 3 are {1, 2}.
        let p = Poset::new(5, &[(0, 1), (1, 3), (0, 2), (2, 3), (4, 3)]).unwrap();
        let lens = p.chain_lengths();
        assert_eq!(lens[0], 0b1);
        assert_eq!(lens[3], 0b110);
    }

    #[test]
    fn text_format() {
        let text = "# V poset\nn 3\n0 2\n 1   2 # cover\nomega 2 1 3\n";
        let file: PosetFile = text.parse().unwrap();
        assert_eq!(file.poset, v_poset());
        assert_eq!(file.omega.as_ref().unwrap().labels(), &[2, 1, 3]);
        let again = Poset::parse_text(&file.poset.to_text(file.omega.as_ref())).unwrap();
        assert_eq!(again.poset, file.poset);
        assert!(Poset::parse_text("0 1\n").is_err());
        assert!(Poset::parse_text("n 2\nomega 1 1\n").is_err());
        assert!(Poset::parse_text("n 2\n0 x\n").is_err());
    }
}
