//! Promotion and evacuation of linear extensions, chain-length statistics,
//! and the parity classes they induce.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::{bit, bits, LinearExtension, Poset};

/// The maximal chain `u_0 < u_1 < ... < u_ℓ` traced by promotion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PromotionChain {
    pub elements: Vec<usize>,
}

impl PromotionChain {
    pub fn length(&self) -> usize {
        self.elements.len().saturating_sub(1)
    }

    pub fn top(&self) -> usize {
        *self.elements.last().expect("promotion chain is nonempty")
    }
}

/// Chain inside the order ideal `mask`, where `val[t]` ranks `t` among the
/// elements of `mask`.
fn chain_within(p: &Poset, mask: u64, val: &[usize]) -> Vec<usize> {
    let mut u = bits(mask).find(|&t| val[t] == 1).expect("value 1 present");
    let mut chain = vec![u];
    loop {
        let next = p.upper_covers(u).filter(|&t| mask & bit(t) != 0).min_by_key(|&t| val[t]);
        match next {
            Some(t) => {
                chain.push(t);
                u = t;
            }
            None => return chain,
        }
    }
}

/// Promotes the values on `mask` in place and returns the chain used.
fn promote_within(p: &Poset, mask: u64, val: &mut [usize]) -> Vec<usize> {
    let chain = chain_within(p, mask, val);
    let m = mask.count_ones() as usize;
    let next: Vec<usize> = chain.iter().skip(1).map(|&u| val[u] - 1).collect();
    for t in bits(mask) {
        val[t] -= 1;
    }
    for (u, v) in chain.iter().zip(next) {
        val[*u] = v;
    }
    val[*chain.last().unwrap()] = m;
    chain
}

pub fn promotion_chain(p: &Poset, f: &LinearExtension) -> PromotionChain {
    if p.is_empty() {
        return PromotionChain { elements: Vec::new() };
    }
    PromotionChain { elements: chain_within(p, p.all(), &f.values()) }
}

/// The promotion `∂f`.
pub fn promote(p: &Poset, f: &LinearExtension) -> LinearExtension {
    if p.is_empty() {
        return f.clone();
    }
    let mut val = f.values();
    promote_within(p, p.all(), &mut val);
    values_to_extension(&val)
}

/// Evacuation: promote, freeze the top of the promotion chain at the
/// largest remaining value, and repeat on the remaining order ideal.
pub fn evacuate(p: &Poset, f: &LinearExtension) -> LinearExtension {
    let n = p.len();
    let mut val = f.values();
    let mut out = vec![0; n];
    let mut mask = p.all();
    for i in 1..=n {
        let chain = promote_within(p, mask, &mut val);
        let top = *chain.last().unwrap();
        out[top] = n - i + 1;
        mask &= !bit(top);
    }
    values_to_extension(&out)
}

fn values_to_extension(val: &[usize]) -> LinearExtension {
    let mut order = vec![0; val.len()];
    for (t, &v) in val.iter().enumerate() {
        order[v - 1] = t;
    }
    LinearExtension::from_order_unchecked(order)
}

/// `ν(t)`: length of the longest chain of `{s : s ≤ t}`.
pub fn nu(p: &Poset, t: usize) -> usize {
    63 - p.chain_lengths()[t].leading_zeros() as usize
}

/// Longest-chain lengths `ν(t)` for every element.
pub fn nu_all(p: &Poset) -> Vec<usize> {
    p.chain_lengths().iter().map(|&m| 63 - m.leading_zeros() as usize).collect()
}

/// `Γ(P) = Σ_t ν(t)`.
pub fn gamma(p: &Poset) -> usize {
    nu_all(p).iter().sum()
}

/// `Δ(P) = Γ(P*)`.
pub fn delta_stat(p: &Poset) -> usize {
    gamma(&p.dual())
}

const EVEN_BITS: u64 = 0x5555_5555_5555_5555;

fn single_parity(lengths: u64) -> bool {
    lengths & EVEN_BITS == 0 || lengths & !EVEN_BITS == 0
}

/// All maximal chains of every principal order ideal have lengths of one
/// parity.
pub fn is_consistent(p: &Poset) -> bool {
    p.chain_lengths().into_iter().all(single_parity)
}

pub fn is_dual_consistent(p: &Poset) -> bool {
    is_consistent(&p.dual())
}

/// Lengths of all maximal chains of `P`, as a bitset.
pub fn maximal_chain_lengths(p: &Poset) -> u64 {
    let lens = p.chain_lengths();
    bits(p.maximal_mask()).fold(0, |acc, t| acc | lens[t])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ParityClass {
    Reversing,
    Preserving,
    Neither,
}

/// Whether promotion always flips or always keeps the sign of `π(f)`:
/// reversing iff every maximal chain length ℓ has `n ≡ ℓ`, preserving iff
/// every ℓ has `n ≡ ℓ + 1` (mod 2).
pub fn promotion_parity_class(p: &Poset) -> ParityClass {
    let lens = maximal_chain_lengths(p);
    let same_as_n = if p.len().is_multiple_of(2) { EVEN_BITS } else { !EVEN_BITS };
    if lens & !same_as_n == 0 {
        ParityClass::Reversing
    } else if lens & same_as_n == 0 {
        ParityClass::Preserving
    } else {
        ParityClass::Neither
    }
}

/// For consistent `P`, evacuation is preserving iff `C(n,2) − Γ(P)` is even.
pub fn evac_parity(p: &Poset) -> Result<ParityClass> {
    if !is_consistent(p) {
        return Err(Error::Inconsistent);
    }
    let n = p.len();
    let diff = n * n.saturating_sub(1) / 2 - gamma(p);
    Ok(if diff.is_multiple_of(2) { ParityClass::Preserving } else { ParityClass::Reversing })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{perm_of, Labeling};

    fn v_poset() -> Poset {
        Poset::new(3, &[(0, 2), (1, 2)]).unwrap()
    }

    fn p31() -> Poset {
        // Cells (1,1),(1,2),(1,3),(2,1) in reading order.
        Poset::new(4, &[(0, 1), (1, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn chains() {
        let c = Poset::chain(4);
        let f = c.linear_extensions().next().unwrap();
        assert_eq!(promotion_chain(&c, &f).elements, vec![0, 1, 2, 3]);
        assert_eq!(promotion_chain(&c, &f).length(), 3);

        let v = v_poset();
        let f = LinearExtension::from_values(&v, &[1, 2, 3]).unwrap();
        assert_eq!(promotion_chain(&v, &f).elements, vec![0, 2]);

        let one = Poset::antichain(1);
        let f = one.linear_extensions().next().unwrap();
        assert_eq!(promotion_chain(&one, &f).length(), 0);
    }

    #[test]
    fn promote_examples() {
        let c = Poset::chain(5);
        let f = c.linear_extensions().next().unwrap();
        assert_eq!(promote(&c, &f), f);
        assert_eq!(evacuate(&c, &f), f);

        let v = v_poset();
        let f = LinearExtension::from_values(&v, &[1, 2, 3]).unwrap();
        assert_eq!(promote(&v, &f).values(), vec![2, 1, 3]);
    }

    #[test]
    fn evacuation_of_v() {
        // Promote (1,2,3) to (2,1,3) and freeze c at 3; on {a,b} promotion
        // swaps to (1,2) and freezes b at 2; a gets 1.
        let v = v_poset();
        let f = LinearExtension::from_values(&v, &[1, 2, 3]).unwrap();
        let e = evacuate(&v, &f);
        assert_eq!(e.values(), vec![1, 2, 3]);
        assert_eq!(evacuate(&v, &e), f);
    }

    #[test]
    fn promotion_is_a_bijection_and_evacuation_an_involution() {
        let p = Poset::new(6, &[(0, 2), (1, 2), (1, 3), (2, 4), (3, 5)]).unwrap();
        let exts: Vec<_> = p.linear_extensions().collect();
        let mut images: Vec<_> = exts.iter().map(|f| promote(&p, f)).collect();
        images.sort();
        assert_eq!(images, exts);
        for f in &exts {
            assert_eq!(&evacuate(&p, &evacuate(&p, f)), f);
        }
    }

    #[test]
    fn gamma_values() {
        assert_eq!(nu_all(&Poset::chain(3)), vec![0, 1, 2]);
        assert_eq!(gamma(&Poset::chain(3)), 3);
        assert_eq!(gamma(&Poset::antichain(4)), 0);
        assert_eq!(nu_all(&p31()), vec![0, 1, 2, 1]);
        assert_eq!(gamma(&p31()), 4);
        assert_eq!(delta_stat(&Poset::antichain(2)), 0);
        assert_eq!(nu(&v_poset(), 2), 1);
    }

    #[test]
    fn consistency() {
        assert!(is_consistent(&p31()));
        assert!(is_consistent(&Poset::antichain(2)));
        // a < b < d and c < d: chains into d of lengths 2 and 1.
        let bad = Poset::new(4, &[(0, 1), (1, 3), (2, 3)]).unwrap();
        assert!(!is_consistent(&bad));
        assert_eq!(evac_parity(&bad), Err(Error::Inconsistent));
    }

    #[test]
    fn parity_classes() {
        assert_eq!(promotion_parity_class(&Poset::chain(3)), ParityClass::Preserving);
        assert_eq!(promotion_parity_class(&v_poset()), ParityClass::Reversing);
        // Maximal chains of lengths 1 and 2.
        let mixed = Poset::new(5, &[(0, 1), (2, 3), (3, 4)]).unwrap();
        assert_eq!(promotion_parity_class(&mixed), ParityClass::Neither);

        assert_eq!(evac_parity(&Poset::antichain(2)), Ok(ParityClass::Reversing));
        assert_eq!(evac_parity(&Poset::chain(3)), Ok(ParityClass::Preserving));
        assert_eq!(evac_parity(&p31()), Ok(ParityClass::Preserving));
    }

    #[test]
    fn lemma_signs_on_v() {
        let v = v_poset();
        let w = Labeling::identity(3);
        for f in v.linear_extensions() {
            let s = perm_of(&f, &w).sign();
            assert_eq!(perm_of(&promote(&v, &f), &w).sign(), -s);
        }
    }
}
