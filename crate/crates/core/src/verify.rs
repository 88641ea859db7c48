//! Named verification suites. Each suite recomputes one family of
//! identities over a bounded range and reports per-parameter records.
//! Sweeps over many posets or regions are folded into one record per size,
//! whose expected value is the number of instances and whose actual value
//! is the number that passed.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::balance::{
    bw_check, cell_hooks, dcmb_check, forest_hooks, hlsb_imbalance, hook_product_poly, majdom_check,
    maj_poly_is_symmetric, slabps_check, upper_chains_equal_length,
};
use crate::domino::{
    compositions, count_p_domino, factorized_inv_poly, imbalance_domino, is_j_tilable, is_tilable,
};
use crate::error::{Error, Result};
use crate::generate::{forests, natural_posets, random_posets};
use crate::identities::{
    du_commutator_check, eg_check, hooksum_by_survivors, hooksum_identity, kcor_a_sum, kcor_b_sum,
    q_plus_x_power, rectangle_imbalance, sytimb_b_sum, sytimb_sum, u_power_expansion, EgFamily,
};
use crate::poly::{QPolynomial, Var};
use crate::poset::{
    extension_stats, inv_poly, is_sign_balanced, maj_poly, natural_labeling, perm_of, ruskey_hypothesis, Labeling,
    Poset, DEFAULT_CAP,
};
use crate::promotion::{
    evacuate, evac_parity, gamma, is_consistent, promote, promotion_parity_class, ParityClass,
};
use crate::region::{regions_in_frame, tiling_sign};
use crate::shapes::{
    a_lambda_quadruple, count_series, inv_poly_shape, partitions, shape_poset, two_core, Partition, SeriesKind,
};

/// Every suite name accepted by [`verify_suite`], in battery order.
pub const SUITES: &[&str] = &[
    "oracle",
    "domino",
    "kcor-a",
    "kcor-b",
    "sytimb-a",
    "sytimb-b",
    "hooksum",
    "white",
    "eg",
    "promotion",
    "sbmc",
    "cons",
    "ruskey",
    "majdom",
    "dcmb",
    "slabps",
    "hooks",
    "bw",
    "operators",
    "series",
    "quadruple",
];

/// Stated with every three-row and four-row record.
pub const EXTENDED_G_CONVENTION: &str =
    "g of an integer sequence: drop trailing zeros; 0 if any entry is negative or repeated; \
     otherwise the sign of the sorting permutation times g of the decreasing rearrangement";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Record {
    pub identity: String,
    pub parameter: String,
    pub expected: Value,
    pub actual: Value,
    pub pass: bool,
    pub millis: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Size limits for one run. Unset limits fall back to the suite defaults,
/// which are smaller when `small` is set.
#[derive(Debug, Clone, PartialEq)]
pub struct Bounds {
    pub n: Option<usize>,
    pub max_m: Option<usize>,
    pub samples: Option<usize>,
    pub seed: u64,
    pub small: bool,
    /// When false every `millis` is reported as 0, so reports are
    /// byte-identical across runs.
    pub timing: bool,
}

impl Default for Bounds {
    fn default() -> Self {
        Self { n: None, max_m: None, samples: None, seed: 0, small: true, timing: true }
    }
}

impl Bounds {
    fn n(&self, small: usize, large: usize) -> usize {
        self.n.unwrap_or(if self.small { small } else { large })
    }

    fn m(&self, small: usize, large: usize) -> usize {
        self.max_m.unwrap_or(if self.small { small } else { large })
    }

    fn samples(&self, small: usize, large: usize) -> usize {
        self.samples.unwrap_or(if self.small { small } else { large })
    }
}

struct Recorder<'a> {
    bounds: &'a Bounds,
    records: Vec<Record>,
}

impl<'a> Recorder<'a> {
    fn new(bounds: &'a Bounds) -> Self {
        Self { bounds, records: Vec::new() }
    }

    /// Runs `f`, which returns `(expected, actual)`, and records equality.
    fn check<E: Serialize, A: Serialize>(
        &mut self,
        identity: &str,
        parameter: impl Into<String>,
        f: impl FnOnce() -> Result<(E, A)>,
    ) -> Result<()> {
        let start = Instant::now();
        let (e, a) = f()?;
        let (expected, actual) = (to_json(&e), to_json(&a));
        self.push(identity, parameter.into(), expected.clone(), actual.clone(), expected == actual, start, None);
        Ok(())
    }

    /// Runs `test` on every item; records instance count against passes,
    /// noting the first failure.
    fn sweep<T>(
        &mut self,
        identity: &str,
        parameter: impl Into<String>,
        items: &[T],
        describe: impl Fn(&T) -> String,
        mut test: impl FnMut(&T) -> Result<bool>,
    ) -> Result<()> {
        let start = Instant::now();
        let mut passed = 0usize;
        let mut note = None;
        for item in items {
            if test(item)? {
                passed += 1;
            } else if note.is_none() {
                note = Some(format!("first failure: {}", describe(item)));
            }
        }
        self.push(identity, parameter.into(), json!(items.len()), json!(passed), passed == items.len(), start, note);
        Ok(())
    }

    #[allow(clippy::too_many_arguments)]
    fn push(
        &mut self,
        identity: &str,
        parameter: String,
        expected: Value,
        actual: Value,
        pass: bool,
        start: Instant,
        note: Option<String>,
    ) {
        let millis = if self.bounds.timing { start.elapsed().as_millis() as u64 } else { 0 };
        self.records.push(Record { identity: identity.to_string(), parameter, expected, actual, pass, millis, note });
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}

fn describe_poset(p: &Poset) -> String {
    format!("n={} covers={:?}", p.len(), p.covers())
}

fn posets_up_to(n: usize) -> Vec<(String, Vec<Poset>)> {
    (1..=n).map(|k| (format!("all n={k}"), natural_posets(k))).collect()
}

fn random_by_size(count: usize, n_max: usize, seed: u64) -> Vec<(String, Vec<Poset>)> {
    let all = random_posets(count, n_max, seed);
    (1..=n_max)
        .map(|k| (format!("random n={k} seed={seed}"), all.iter().filter(|p| p.len() == k).cloned().collect()))
        .filter(|(_, v): &(String, Vec<Poset>)| !v.is_empty())
        .collect()
}

fn sign_of(f: &crate::poset::LinearExtension, w: &Labeling) -> i8 {
    perm_of(f, w).sign()
}

/// Runs the named suite.
pub fn verify_suite(name: &str, bounds: &Bounds) -> Result<Vec<Record>> {
    let mut r = Recorder::new(bounds);
    match name {
        "oracle" => {
            for n in 0..=bounds.n(9, 10) {
                r.sweep("corner recursion = SYT enumeration", format!("n={n}"), &partitions(n), |l| l.to_string(), |l| {
                    let (p, w) = shape_poset(&l.clone().into())?;
                    Ok(inv_poly(&p, &w)? == inv_poly_shape(l))
                })?;
            }
        }
        "domino" => {
            for n in (0..=bounds.n(10, 14)).step_by(2) {
                r.sweep("signed domino count = I(-1)", format!("n={n}"), &partitions(n), |l| l.to_string(), |l| {
                    Ok(imbalance_domino(l)? == crate::shapes::imbalance(l))
                })?;
            }
            for (label, posets) in random_by_size(bounds.samples(100, 300), 8, bounds.seed) {
                r.sweep("alpha-chain factorization", label.clone(), &posets, describe_poset, |p| {
                    let w = natural_labeling(p);
                    let target = inv_poly(p, &w)?;
                    for alpha in compositions(p.len(), 3) {
                        if factorized_inv_poly(p, &w, &alpha)? != target {
                            return Ok(false);
                        }
                    }
                    Ok(true)
                })?;
                r.sweep("untilable implies sign-balanced", label, &posets, describe_poset, |p| {
                    let n = p.len();
                    let untilable = if n % 2 == 0 {
                        !is_tilable(p)?
                    } else {
                        (1..=n).step_by(2).any(|j| !is_j_tilable(p, j).unwrap_or(true))
                    };
                    Ok(!untilable || is_sign_balanced(p)?)
                })?;
            }
        }
        "kcor-a" => {
            for m in 1..=bounds.m(6, 8) {
                r.check("sum of I over doubled shapes", format!("m={m}"), || Ok((1, kcor_a_sum(m))))?;
            }
        }
        "kcor-b" => {
            for m in 1..=bounds.m(5, 7) {
                r.check("signed sum of I squared", format!("m={m}"), || Ok((0, kcor_b_sum(m))))?;
            }
        }
        "sytimb-a" => {
            for n in 0..=bounds.n(10, 14) {
                r.check("four-variable sum = (q+x)^(n/2)", format!("n={n}"), || {
                    Ok((q_plus_x_power(n / 2), sytimb_sum(n)))
                })?;
                r.check("y is superfluous", format!("n={n}"), || {
                    let f = sytimb_sum(n);
                    let both = f.set_zero(Var::T).set_zero(Var::Y);
                    Ok(([true, true], [f.set_zero(Var::T).set_zero(Var::Y) == both, f.set_zero(Var::Y) == both]))
                })?;
            }
        }
        "sytimb-b" => {
            for n in (1..=bounds.n(10, 14)).filter(|n| n % 4 != 1) {
                r.check("signed sum of I squared in t", format!("n={n}"), || Ok((QPolynomial::zero(), sytimb_b_sum(n))))?;
            }
        }
        "hooksum" => {
            for n in 0..=bounds.n(12, 20) {
                r.check("hook sum via q-binomials", format!("n={n}"), || Ok((q_plus_x_power(n / 2), hooksum_identity(n))))?;
                r.check("hook sum via survivors", format!("n={n}"), || {
                    Ok((q_plus_x_power(n / 2), hooksum_by_survivors(n)))
                })?;
            }
        }
        "white" => {
            let area = bounds.n(12, 20);
            for m in 1..=area {
                for n in 1..=area / m {
                    r.check("rectangle |I|", format!("{m}x{n}"), || {
                        let res = rectangle_imbalance(m, n);
                        let brute = {
                            let (p, w) = shape_poset(&Partition::rectangle(m, n).into())?;
                            i64::try_from(&extension_stats(&p, &w, DEFAULT_CAP)?.inv.at_minus_one())
                                .expect("small value")
                        };
                        Ok((json!({"abs": res.predicted_abs, "sign": res.sign}), json!({"abs": brute.abs(), "sign": brute.signum()})))
                    })?;
                }
            }
        }
        "eg" => {
            let max = bounds.n(18, 24);
            for family in EgFamily::ALL {
                let limit = if family.rows() == 4 { max.saturating_sub(2) } else { max };
                for params in family.instances(limit) {
                    let start = Instant::now();
                    let c = eg_check(family, &params)?;
                    let pass = c.pass();
                    r.push(
                        &format!("I = g-combination ({family})"),
                        format!("params={:?} lambda={}", params, c.lambda),
                        json!(c.rhs),
                        json!(c.lhs),
                        pass,
                        start,
                        Some(EXTENDED_G_CONVENTION.to_string()),
                    );
                }
            }
        }
        "promotion" => {
            let mut groups = posets_up_to(bounds.n(6, 6));
            groups.extend(random_by_size(bounds.samples(100, 300), 7, bounds.seed));
            for (label, posets) in groups {
                r.sweep("promotion is a bijection", label.clone(), &posets, describe_poset, |p| {
                    let exts: Vec<_> = crate::poset::extensions_capped(p, DEFAULT_CAP)?;
                    let mut images: Vec<_> = exts.iter().map(|f| promote(p, f)).collect();
                    images.sort();
                    Ok(images == exts)
                })?;
                r.sweep("evacuation is an involution", label.clone(), &posets, describe_poset, |p| {
                    Ok(p.linear_extensions().all(|f| evacuate(p, &evacuate(p, &f)) == f))
                })?;
                r.sweep("promotion parity class", label.clone(), &posets, describe_poset, |p| {
                    let w = natural_labeling(p);
                    let class = promotion_parity_class(p);
                    Ok(p.linear_extensions().all(|f| {
                        let flip = sign_of(&promote(p, &f), &w) * sign_of(&f, &w);
                        match class {
                            ParityClass::Reversing => flip == -1,
                            ParityClass::Preserving => flip == 1,
                            ParityClass::Neither => true,
                        }
                    }))
                })?;
                r.sweep("evacuation parity", label, &posets, describe_poset, |p| {
                    let Ok(class) = evac_parity(p) else { return Ok(true) };
                    let w = natural_labeling(p);
                    let want = if class == ParityClass::Preserving { 1 } else { -1 };
                    Ok(p.linear_extensions().all(|f| sign_of(&evacuate(p, &f), &w) * sign_of(&f, &w) == want))
                })?;
            }
        }
        "sbmc" => {
            for (label, posets) in random_by_size(bounds.samples(500, 1000), 8, bounds.seed) {
                let qualifying: Vec<Poset> =
                    posets.into_iter().filter(|p| promotion_parity_class(p) == ParityClass::Reversing).collect();
                r.sweep("chains of length n mod 2 imply sign-balanced", label, &qualifying, describe_poset, |p| {
                    is_sign_balanced(p)
                })?;
            }
        }
        "cons" => {
            for (label, posets) in random_by_size(bounds.samples(500, 1000), 8, bounds.seed) {
                let qualifying: Vec<Poset> = posets
                    .into_iter()
                    .filter(|p| is_consistent(p) && (p.len() * p.len().saturating_sub(1) / 2 - gamma(p)) % 2 == 1)
                    .collect();
                r.sweep("consistent with odd C(n,2)-Gamma implies sign-balanced", label, &qualifying, describe_poset, |p| {
                    is_sign_balanced(p)
                })?;
            }
        }
        "ruskey" => {
            for (label, posets) in random_by_size(bounds.samples(500, 1000), 8, bounds.seed) {
                let qualifying: Vec<Poset> = posets.into_iter().filter(ruskey_hypothesis).collect();
                r.sweep("two minimal elements below each nonminimal", label, &qualifying, describe_poset, |p| {
                    is_sign_balanced(p)
                })?;
            }
        }
        "majdom" => {
            let mut groups = posets_up_to(bounds.n(5, 6));
            groups.extend(random_by_size(bounds.samples(200, 500), 8, bounds.seed));
            let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
            for (label, posets) in groups {
                r.sweep("W(-1) = number of domino tableaux", label.clone(), &posets, describe_poset, |p| {
                    let (w, count) = majdom_check(p)?;
                    Ok(w == count as i64)
                })?;
                let none: Vec<Poset> = posets.into_iter().filter(|p| count_p_domino(p) == 0).collect();
                r.sweep("no domino tableau implies maj-balanced", label, &none, describe_poset, |p| {
                    for _ in 0..50 {
                        let mut order: Vec<usize> = (0..p.len()).collect();
                        order.shuffle(&mut rng);
                        let w = Labeling::from_order(&order)?;
                        if !maj_poly(p, &w)?.at_minus_one().eq(&0.into()) {
                            return Ok(false);
                        }
                    }
                    Ok(true)
                })?;
            }
        }
        "dcmb" => {
            for (label, posets) in random_by_size(bounds.samples(200, 500), 7, bounds.seed) {
                let dual: Vec<Poset> = posets.iter().filter(|p| crate::promotion::is_dual_consistent(p)).cloned().collect();
                r.sweep("dual consistent with odd C(n,2)-Delta implies maj-balanced", label.clone(), &dual, describe_poset, dcmb_check)?;
                r.sweep("equal upper chains iff W is palindromic", label, &posets, describe_poset, |p| {
                    Ok(upper_chains_equal_length(p) == maj_poly_is_symmetric(p)?)
                })?;
            }
        }
        "slabps" => {
            let max = bounds.n(10, 12);
            let regions: Vec<_> = regions_in_frame(4, 4, max).into_iter().filter(|s| s.len() % 2 == 0).collect();
            for size in (2..=max).step_by(2) {
                let these: Vec<_> = regions.iter().filter(|s| s.len() == size).cloned().collect();
                let describe = |s: &crate::region::Region| format!("{:?}", s.cells());
                r.sweep("sgn * W(-1) = number of domino tableaux", format!("4x4 frame size={size}"), &these, describe, |s| {
                    Ok(slabps_check(s)?.pass)
                })?;
                r.sweep("sign independent of tiling", format!("4x4 frame size={size}"), &these, describe, |s| {
                    let signs: Vec<i8> = s.tilings().iter().map(tiling_sign).collect();
                    Ok(signs.windows(2).all(|w| w[0] == w[1]))
                })?;
            }
        }
        "hooks" => {
            let max = bounds.n(8, 9);
            for n in 1..=max {
                let fs = forests(n);
                r.sweep("forest hook product = W", format!("forests n={n}"), &fs, describe_poset, |p| {
                    let hooks = forest_hooks(p)?;
                    Ok(hook_product_poly(n, &hooks)? == maj_poly(p, &natural_labeling(p))?)
                })?;
                r.sweep("forest W(-1) from even hooks", format!("forests n={n}"), &fs, describe_poset, |p| {
                    hlsb_matches(p, &forest_hooks(p)?)
                })?;
                let shapes = partitions(n);
                r.sweep("cell hook product = W of the dual shape", format!("shapes n={n}"), &shapes, |l| l.to_string(), |l| {
                    let p = shape_poset(&l.clone().into())?.0.dual();
                    Ok(hook_product_poly(n, &cell_hooks(l))? == maj_poly(&p, &natural_labeling(&p))?)
                })?;
                r.sweep("dual shape W(-1) from even hooks", format!("shapes n={n}"), &shapes, |l| l.to_string(), |l| {
                    let p = shape_poset(&l.clone().into())?.0.dual();
                    hlsb_matches(&p, &cell_hooks(l))
                })?;
            }
        }
        "bw" => {
            for n in 1..=bounds.n(8, 9) {
                r.sweep("postorder I = W", format!("forests n={n}"), &forests(n), describe_poset, bw_check)?;
            }
        }
        "operators" => {
            let n = bounds.n(6, 8);
            r.check("(DU+UD) = A at q=-1", format!("m<={n}"), || Ok((true, du_commutator_check(n))))?;
            for k in 0..=bounds.n(8, 9) {
                r.check("U^n 1 coefficients = I(q)", format!("n={k}"), || {
                    let v = u_power_expansion(k);
                    let expected: BTreeMap<String, QPolynomial> =
                        partitions(k).iter().map(|l| (l.to_string(), inv_poly_shape(l))).collect();
                    let actual: BTreeMap<String, QPolynomial> =
                        v.terms().map(|(l, c)| (l.to_string(), c.clone())).collect();
                    Ok((expected, actual))
                })?;
            }
        }
        "series" => {
            let nf = bounds.n(20, 30);
            r.check("2-core at most 1", format!("n<={nf}"), || {
                let direct: Vec<i64> =
                    (0..=nf).map(|n| partitions(n).iter().filter(|l| two_core(l).size() <= 1).count() as i64).collect();
                Ok((direct, count_series(SeriesKind::CoreLe1, nf)?))
            })?;
            let nt = nf.min(bounds.n(16, 24));
            r.check("even parity quadruple", format!("n<={nt}"), || {
                let direct: Vec<i64> = (0..=nt)
                    .map(|n| partitions(n).iter().filter(|l| a_lambda_quadruple(l).gamma % 2 == 0).count() as i64)
                    .collect();
                Ok((direct, count_series(SeriesKind::TN, nt)?))
            })?;
            let ng = nf.min(bounds.n(8, 9));
            r.check("evacuation reverses parity", format!("n<={ng}"), || {
                let mut direct = Vec::new();
                for n in 0..=ng {
                    let mut count = 0i64;
                    for l in partitions(n) {
                        let (p, w) = shape_poset(&l.into())?;
                        if p.linear_extensions().all(|f| sign_of(&evacuate(&p, &f), &w) != sign_of(&f, &w)) {
                            count += 1;
                        }
                    }
                    direct.push(count);
                }
                Ok((direct, count_series(SeriesKind::GN, ng)?))
            })?;
        }
        "quadruple" => {
            for n in 0..=bounds.n(12, 16) {
                r.sweep("parity quadruple agrees", format!("n={n}"), &partitions(n), |l| l.to_string(), |l| {
                    Ok(a_lambda_quadruple(l).parities_agree())
                })?;
            }
        }
        other => return Err(Error::UnknownSuite(other.to_string())),
    }
    Ok(r.records)
}

fn hlsb_matches(p: &Poset, hooks: &[usize]) -> Result<bool> {
    let w = maj_poly(p, &natural_labeling(p))?.at_minus_one();
    Ok(match hlsb_imbalance(p.len(), hooks) {
        Ok(v) => v.is_integer() && v.to_integer() == w,
        Err(_) => false,
    })
}

/// Every suite in [`SUITES`] order.
pub fn verify_all(bounds: &Bounds) -> Result<Vec<Record>> {
    let mut out = Vec::new();
    for name in SUITES {
        out.extend(verify_suite(name, bounds)?);
    }
    Ok(out)
}

pub fn all_pass(records: &[Record]) -> bool {
    records.iter().all(|r| r.pass)
}
