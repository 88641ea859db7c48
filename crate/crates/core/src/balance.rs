//! Maj-balance: `W_P(-1)` against `P`-domino tableaux, dual consistency,
//! Schur-labelled regions, hook-length posets and postorder-labelled
//! forests.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::domino::count_p_domino;
use crate::error::{Error, Result};
use crate::poly::QPolynomial;
use crate::poset::{bits, extension_stats, natural_labeling, Labeling, Poset, DEFAULT_CAP};
use crate::promotion::{delta_stat, is_dual_consistent};
use crate::region::Region;
use crate::shapes::Partition;

/// One theorem instance: both sides and whether they agree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BalanceReport {
    pub theorem: String,
    pub instance: String,
    pub lhs: i64,
    pub rhs: i64,
    pub pass: bool,
}

fn to_i64(v: &BigInt) -> i64 {
    i64::try_from(v).expect("value fits in 64 bits")
}

/// `(W_P(-1), #P-domino tableaux)` under a natural labeling.
pub fn majdom_check(p: &Poset) -> Result<(i64, u64)> {
    majdom_check_capped(p, DEFAULT_CAP)
}

pub fn majdom_check_capped(p: &Poset, cap: u64) -> Result<(i64, u64)> {
    let w = extension_stats(p, &natural_labeling(p), cap)?.maj;
    Ok((to_i64(&w.at_minus_one()), count_p_domino(p)))
}

/// For dual-consistent `P` with `C(n,2) - Δ(P)` odd, `W_P(-1) = 0`. Returns
/// whether the statement holds for `P` (vacuously when the parity is even).
pub fn dcmb_check(p: &Poset) -> Result<bool> {
    if !is_dual_consistent(p) {
        return Err(Error::NotDualConsistent);
    }
    let n = p.len();
    if (n * n.saturating_sub(1) / 2 - delta_stat(p)).is_multiple_of(2) {
        return Ok(true);
    }
    let w = extension_stats(p, &natural_labeling(p), DEFAULT_CAP)?.maj;
    Ok(w.at_minus_one().is_zero())
}

/// For every `t`, all maximal chains of `{s : s ≥ t}` have one length.
pub fn upper_chains_equal_length(p: &Poset) -> bool {
    p.dual().chain_lengths().iter().all(|m| m.count_ones() == 1)
}

/// `q^{C(n,2) - Δ(P)} W_P(1/q) = W_P(q)`.
pub fn maj_poly_is_symmetric(p: &Poset) -> Result<bool> {
    let n = p.len();
    let w = extension_stats(p, &natural_labeling(p), DEFAULT_CAP)?.maj;
    let d = n * n.saturating_sub(1) / 2 - delta_stat(p);
    Ok(w.reflect(d).as_ref() == Some(&w))
}

/// Outcome of comparing `sgn(S) W_{P_S}(-1)` with the number of
/// `P_S`-domino tableaux.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SlabpsOutcome {
    /// `None` when the region has no tiling.
    pub sign: Option<i8>,
    pub w_at_minus_one: i64,
    pub lhs: i64,
    pub tableaux: u64,
    pub pass: bool,
}

/// Evaluates both sides for an even region under its Schur labeling. An
/// untilable region passes only if both sides vanish.
pub fn slabps_check(s: &Region) -> Result<SlabpsOutcome> {
    if s.len() % 2 == 1 {
        return Err(Error::OddSize(s.len()));
    }
    let p = s.poset()?;
    let w = to_i64(&extension_stats(&p, &s.schur_labeling(), DEFAULT_CAP)?.maj.at_minus_one());
    let sign = match s.sign() {
        Ok(v) => Some(v),
        Err(Error::Untilable) => None,
        Err(e) => return Err(e),
    };
    let tableaux = count_p_domino(&p);
    let lhs = sign.map_or(w, |g| i64::from(g) * w);
    let pass = lhs == tableaux as i64 && (sign.is_some() || tableaux == 0);
    Ok(SlabpsOutcome { sign, w_at_minus_one: w, lhs, tableaux, pass })
}

/// Every element is covered by at most one element.
pub fn is_forest(p: &Poset) -> bool {
    (0..p.len()).all(|t| p.upper_covers(t).count() <= 1)
}

/// Forest hook lengths `h_t = #{s : s ≤ t}`.
pub fn forest_hooks(p: &Poset) -> Result<Vec<usize>> {
    if !is_forest(p) {
        return Err(Error::NotForest);
    }
    Ok((0..p.len()).map(|t| p.below(t).count_ones() as usize + 1).collect())
}

/// Ordinary hook lengths of the cells of `λ`, in reading order.
pub fn cell_hooks(lambda: &Partition) -> Vec<usize> {
    let conj = lambda.conjugate();
    lambda.cells().iter().map(|c| (lambda.part(c.row) - c.col) + (conj.part(c.col) - c.row) + 1).collect()
}

/// `Π_{i=1}^n (1 - q^i) / Π_h (1 - q^h)`, which must divide exactly.
pub fn hook_product_poly(n: usize, hooks: &[usize]) -> Result<QPolynomial> {
    let one_minus = |k: usize| &QPolynomial::one() - &QPolynomial::monomial(k, 1);
    let num = (1..=n).fold(QPolynomial::one(), |acc, i| &acc * &one_minus(i));
    let den = hooks.iter().fold(QPolynomial::one(), |acc, &h| &acc * &one_minus(h));
    num.div_exact(&den)
}

/// `W_P(-1)` predicted from the hooks: zero when fewer than `⌊n/2⌋` hooks
/// are even, otherwise `⌊n/2⌋! / Π_{h even} (h/2)`.
pub fn hlsb_imbalance(n: usize, hooks: &[usize]) -> Result<BigRational> {
    let even: Vec<usize> = hooks.iter().copied().filter(|h| h % 2 == 0).collect();
    let half = n / 2;
    if even.len() > half {
        return Err(Error::ParityMismatch(format!("{} even hooks exceed ⌊n/2⌋ = {half}", even.len())));
    }
    if even.len() < half {
        return Ok(BigRational::zero());
    }
    let num: BigInt = (1..=half).fold(BigInt::one(), |acc, i| acc * BigInt::from(i));
    let den: BigInt = even.iter().fold(BigInt::one(), |acc, &h| acc * BigInt::from(h / 2));
    Ok(BigRational::new(num, den))
}

/// Postorder labeling of a forest: trees by increasing root index, within a
/// node its lower covers by increasing index, then the node itself.
pub fn postorder_labeling(p: &Poset) -> Result<Labeling> {
    if !is_forest(p) {
        return Err(Error::NotForest);
    }
    fn visit(p: &Poset, t: usize, order: &mut Vec<usize>) {
        for s in p.lower_covers(t).collect::<Vec<_>>() {
            visit(p, s, order);
        }
        order.push(t);
    }
    let mut order = Vec::with_capacity(p.len());
    for r in bits(p.maximal_mask()) {
        visit(p, r, &mut order);
    }
    Labeling::from_order(&order)
}

/// `I_{P,ω}(q) = W_{P,ω}(q)` for the postorder labeling of a forest.
pub fn bw_check(p: &Poset) -> Result<bool> {
    let w = postorder_labeling(p)?;
    let stats = extension_stats(p, &w, DEFAULT_CAP)?;
    Ok(stats.inv == stats.maj)
}
