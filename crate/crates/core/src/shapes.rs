//! Partitions, skew shapes and their posets, 2-cores, the statistics
//! `v`, `d`, `r`, the corner recursion for `I_λ(q)`, and the partition
//! counting series.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::QPolynomial;
use crate::poset::{Labeling, Poset};

/// A diagram cell, 1-based `(row, col)` in English notation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }

    /// `c(i, j) = j - i`.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Horizontal,
    Vertical,
}

/// Two edge-adjacent cells, the first above or left of the second.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Domino {
    pub cells: [Cell; 2],
}

impl Domino {
    pub fn orientation(&self) -> Orientation {
        if self.cells[0].row == self.cells[1].row {
            Orientation::Horizontal
        } else {
            Orientation::Vertical
        }
    }

    pub fn is_vertical(&self) -> bool {
        self.orientation() == Orientation::Vertical
    }

    /// A vertical domino occupies a single column; this is it.
    pub fn column(&self) -> usize {
        self.cells[0].col
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates a weakly decreasing sequence; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The hook `(n - k, 1^k)`.
    pub fn hook(n: usize, k: usize) -> Result<Self> {
        if n == 0 || k >= n {
            return Err(Error::InvalidPartition(format!("no hook ({n}-{k},1^{k})")));
        }
        let mut parts = vec![n - k];
        parts.extend(std::iter::repeat_n(1, k));
        Ok(Self { parts })
    }

    /// `m` rows of length `n`.
    pub fn rectangle(m: usize, n: usize) -> Self {
        if n == 0 {
            return Self::empty();
        }
        Self { parts: vec![n; m] }
    }

    /// `δ_k = (k-1, ..., 1)`.
    pub fn staircase(k: usize) -> Self {
        Self { parts: (1..k).rev().collect() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` for 1-based `i ≥ 1`, zero past the last part.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        Self { parts: (1..=width).map(|j| self.parts.iter().filter(|&&p| p >= j).count()).collect() }
    }

    /// Each part doubled.
    pub fn double(&self) -> Partition {
        Self { parts: self.parts.iter().map(|p| 2 * p).collect() }
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && c.col <= self.part(c.row)
    }

    /// Cells in reading order: row 1 left to right, then row 2, and so on.
    pub fn cells(&self) -> Vec<Cell> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
            .collect()
    }

    pub fn content_sum(&self) -> i64 {
        self.cells().iter().map(Cell::content).sum()
    }

    /// Number of odd parts.
    pub fn odd_parts(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 1).count()
    }

    pub fn is_hook(&self) -> bool {
        self.part(2) <= 1
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn is_staircase(&self) -> bool {
        self.parts.iter().rev().enumerate().all(|(i, &p)| p == i + 1)
    }

    /// Cells whose removal leaves a partition, top row first.
    pub fn corners(&self) -> Vec<Cell> {
        (1..=self.num_rows())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| Cell::new(i, self.part(i)))
            .collect()
    }

    /// Cells that can be added to give a partition, top row first.
    pub fn addable(&self) -> Vec<Cell> {
        (1..=self.num_rows() + 1)
            .filter(|&i| i == 1 || self.part(i - 1) > self.part(i))
            .map(|i| Cell::new(i, self.part(i) + 1))
            .collect()
    }

    pub fn remove_corner(&self, c: Cell) -> Result<Partition> {
        if !self.corners().contains(&c) {
            return Err(Error::NotACorner(c.row, c.col));
        }
        let mut parts = self.parts.clone();
        parts[c.row - 1] -= 1;
        Partition::new(parts)
    }

    pub fn add_cell(&self, c: Cell) -> Result<Partition> {
        if !self.addable().contains(&c) {
            return Err(Error::InvalidPartition(format!("cannot add {c} to {self}")));
        }
        let mut parts = self.parts.clone();
        if c.row > parts.len() {
            parts.push(1);
        } else {
            parts[c.row - 1] += 1;
        }
        Ok(Self { parts })
    }

    /// Dominos whose removal leaves a partition, top row first, horizontal
    /// before vertical within a row.
    pub fn removable_dominos(&self) -> Vec<Domino> {
        let mut out = Vec::new();
        for i in 1..=self.num_rows() {
            let (a, b, c) = (self.part(i), self.part(i + 1), self.part(i + 2));
            if a >= b + 2 {
                out.push(Domino { cells: [Cell::new(i, a - 1), Cell::new(i, a)] });
            }
            if a == b && b > c {
                out.push(Domino { cells: [Cell::new(i, a), Cell::new(i + 1, a)] });
            }
        }
        out
    }

    pub fn remove_domino(&self, d: &Domino) -> Partition {
        let mut parts = self.parts.clone();
        for c in d.cells {
            parts[c.row - 1] -= 1;
        }
        Partition::new(parts).expect("removable domino leaves a partition")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts such as `4,3,1`; `∅`, `0` or an empty string
    /// give the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() || s == "∅" {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

/// `λ/μ` with `μ ⊆ λ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if (1..=inner.num_rows()).any(|i| inner.part(i) > outer.part(i)) {
            return Err(Error::InvalidPartition(format!("{inner} is not contained in {outer}")));
        }
        Ok(Self { outer, inner })
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Cells in reading order.
    pub fn cells(&self) -> Vec<Cell> {
        self.outer.cells().into_iter().filter(|c| !self.inner.contains(*c)).collect()
    }
}

impl From<Partition> for SkewShape {
    fn from(outer: Partition) -> Self {
        Self { outer, inner: Partition::empty() }
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    /// `4,3,1` or `4,3,1/2,1`.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            Some((a, b)) => SkewShape::new(a.parse()?, b.parse()?),
            None => Ok(SkewShape::from(s.parse::<Partition>()?)),
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// The poset of a shape's cells under the coordinatewise order, with
/// elements indexed in reading order. The returned labeling is the reading
/// order labeling, which is therefore the identity.
pub fn shape_poset(shape: &SkewShape) -> Result<(Poset, Labeling)> {
    let cells = shape.cells();
    let poset = cells_poset(&cells)?;
    Ok((poset, Labeling::identity(cells.len())))
}

pub(crate) fn cells_poset(cells: &[Cell]) -> Result<Poset> {
    Poset::from_relation(cells.len(), |s, t| cells[s].row <= cells[t].row && cells[s].col <= cells[t].col)
}

/// Removes border dominos, letting `choose(k)` pick which of the `k`
/// currently removable dominos goes next.
pub fn two_core_with(lambda: &Partition, mut choose: impl FnMut(usize) -> usize) -> Partition {
    let mut cur = lambda.clone();
    loop {
        let dominos = cur.removable_dominos();
        if dominos.is_empty() {
            return cur;
        }
        let i = choose(dominos.len()).min(dominos.len() - 1);
        cur = cur.remove_domino(&dominos[i]);
    }
}

/// The 2-core: what is left after removing border dominos until none
/// remain. It is always a staircase.
pub fn two_core(lambda: &Partition) -> Partition {
    two_core_with(lambda, |_| 0)
}

/// `v(λ) = Σ ⌊λ'_i / 2⌋`.
pub fn v_stat(lambda: &Partition) -> usize {
    lambda.conjugate().parts().iter().map(|c| c / 2).sum()
}

/// `d(λ) = Σ ⌊λ'_{2i} / 2⌋`, summing over even columns.
pub fn d_stat(lambda: &Partition) -> usize {
    lambda.conjugate().parts().iter().skip(1).step_by(2).map(|c| c / 2).sum()
}

/// Maximum number of vertical dominos in even columns over all domino
/// tableaux of shape `λ`; defined only for an empty 2-core.
pub fn r_stat(lambda: &Partition) -> Result<usize> {
    let core = two_core(lambda);
    if !core.is_empty() {
        return Err(Error::NonEmptyCore(lambda.to_string()));
    }
    Ok(crate::domino::max_ev(lambda).expect("empty 2-core admits a domino tableau"))
}

/// Number of cells of `λ` in rows strictly below the corner `t`.
pub fn b_stat(lambda: &Partition, t: Cell) -> Result<usize> {
    if !lambda.corners().contains(&t) {
        return Err(Error::NotACorner(t.row, t.col));
    }
    Ok(lambda.parts()[t.row..].iter().sum())
}

pub(crate) fn b_unchecked(lambda: &Partition, t: Cell) -> usize {
    lambda.parts()[t.row..].iter().sum()
}

type Memo<V> = OnceLock<Mutex<HashMap<Vec<usize>, V>>>;

static INV_MEMO: Memo<QPolynomial> = OnceLock::new();
static IMB_MEMO: Memo<i64> = OnceLock::new();

fn memo_get<V: Clone>(memo: &'static Memo<V>, key: &[usize]) -> Option<V> {
    memo.get_or_init(Default::default).lock().expect("memo lock").get(key).cloned()
}

fn memo_put<V>(memo: &'static Memo<V>, key: Vec<usize>, v: V) {
    memo.get_or_init(Default::default).lock().expect("memo lock").insert(key, v);
}

/// `I_λ(q)` for the reading-order labeling, by the corner recursion
/// `I_λ = Σ_{t corner} q^{b_λ(t)} I_{λ - t}`. Results are cached for the
/// life of the process.
pub fn inv_poly_shape(lambda: &Partition) -> QPolynomial {
    if lambda.size() <= 1 {
        return QPolynomial::one();
    }
    if let Some(p) = memo_get(&INV_MEMO, lambda.parts()) {
        return p;
    }
    let mut acc = QPolynomial::zero();
    for t in lambda.corners() {
        let rest = lambda.remove_corner(t).expect("corner");
        acc += &inv_poly_shape(&rest).shift(b_unchecked(lambda, t));
    }
    memo_put(&INV_MEMO, lambda.parts().to_vec(), acc.clone());
    acc
}

/// The imbalance `I_λ = I_λ(-1)`, by the same recursion specialized to
/// `q = -1`.
pub fn imbalance(lambda: &Partition) -> i64 {
    if lambda.size() <= 1 {
        return 1;
    }
    if let Some(v) = memo_get(&IMB_MEMO, lambda.parts()) {
        return v;
    }
    let mut acc = 0i64;
    for t in lambda.corners() {
        let rest = lambda.remove_corner(t).expect("corner");
        let sign = if b_unchecked(lambda, t).is_multiple_of(2) { 1 } else { -1 };
        acc += sign * imbalance(&rest);
    }
    memo_put(&IMB_MEMO, lambda.parts().to_vec(), acc);
    acc
}

/// Number of standard Young tableaux, `f^λ = Σ_t f^{λ - t}`.
pub fn syt_count(lambda: &Partition) -> u64 {
    fn go(l: &Partition, memo: &mut HashMap<Vec<usize>, u64>) -> u64 {
        if l.size() <= 1 {
            return 1;
        }
        if let Some(&v) = memo.get(l.parts()) {
            return v;
        }
        let v = l.corners().into_iter().map(|t| go(&l.remove_corner(t).unwrap(), memo)).sum();
        memo.insert(l.parts().to_vec(), v);
        v
    }
    go(lambda, &mut HashMap::new())
}

/// The Gaussian binomial `[n choose k]_q`.
pub fn q_binomial(n: i64, k: i64) -> Result<QPolynomial> {
    if n < 0 || k < 0 || k > n {
        return Err(Error::BinomialRange { n, k });
    }
    let (n, k) = (n as usize, k as usize);
    // row[j] = [i choose j], built with [i,j] = [i-1,j-1] + q^j [i-1,j].
    let mut row = vec![QPolynomial::one()];
    for i in 1..=n {
        let mut next = vec![QPolynomial::one(); i + 1];
        for j in 1..i {
            next[j] = &row[j - 1] + &row[j].shift(j);
        }
        row = next;
    }
    Ok(row.swap_remove(k))
}

/// The four numbers that share a parity for every partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParityQuadruple {
    /// `Γ(P_λ)`.
    pub gamma: i64,
    pub content_sum: i64,
    /// Half the difference of odd-part counts of `λ` and `λ'`.
    pub odd_parts_half: i64,
    /// Half the number of cells outside the 2-core.
    pub core_half: i64,
}

impl ParityQuadruple {
    pub fn as_array(&self) -> [i64; 4] {
        [self.gamma, self.content_sum, self.odd_parts_half, self.core_half]
    }

    pub fn parities_agree(&self) -> bool {
        let a = self.as_array();
        a.iter().all(|x| x.rem_euclid(2) == a[0].rem_euclid(2))
    }
}

pub fn a_lambda_quadruple(lambda: &Partition) -> ParityQuadruple {
    let (poset, _) = shape_poset(&lambda.clone().into()).expect("shape poset");
    let odd_diff = lambda.odd_parts() as i64 - lambda.conjugate().odd_parts() as i64;
    let core = two_core(lambda).size() as i64;
    ParityQuadruple {
        gamma: crate::promotion::gamma(&poset) as i64,
        content_sum: lambda.content_sum(),
        odd_parts_half: odd_diff / 2,
        core_half: (lambda.size() as i64 - core) / 2,
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=max.min(n)).rev() {
            prefix.push(p);
            go(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` with strictly decreasing parts.
pub fn strict_partitions(n: usize) -> Vec<Partition> {
    partitions(n).into_iter().filter(Partition::is_strict).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    /// Partitions whose 2-core has at most one cell:
    /// `(1+x) / Π (1-x^{2i})^2`.
    CoreLe1,
    /// `Π (1+x^{2i-1}) / ((1-x^{4i})(1+x^{4i-2})^2)`.
    AEvenF,
    /// Partitions whose parity quadruple is even: `(p(n) + F(n)) / 2`.
    TN,
    /// Partitions on which evacuation reverses parity.
    GN,
    /// All partitions, `p(n)`.
    P,
}

impl FromStr for SeriesKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.replace('-', "_").as_str() {
            "core_le_1" => Ok(Self::CoreLe1),
            "a_even_f" => Ok(Self::AEvenF),
            "t_n" | "t" => Ok(Self::TN),
            "g_n" | "g" => Ok(Self::GN),
            "p" | "p_n" => Ok(Self::P),
            _ => Err(Error::Parse(format!("unknown series `{s}`"))),
        }
    }
}

/// Truncated power series arithmetic on coefficient vectors.
struct Series(Vec<i64>);

impl Series {
    fn one(len: usize) -> Self {
        let mut v = vec![0; len];
        v[0] = 1;
        Series(v)
    }

    /// Multiplies by `1 + c x^k`.
    fn mul_binomial(&mut self, k: usize, c: i64) {
        for i in (k..self.0.len()).rev() {
            self.0[i] += c * self.0[i - k];
        }
    }

    /// Divides by `1 - c x^k`, i.e. multiplies by `Σ c^j x^{jk}`.
    fn div_binomial(&mut self, k: usize, c: i64) {
        for i in k..self.0.len() {
            self.0[i] += c * self.0[i - k];
        }
    }
}

/// Coefficients `0..=n_max` of the chosen counting series.
pub fn count_series(kind: SeriesKind, n_max: usize) -> Result<Vec<i64>> {
    if n_max > 64 {
        return Err(Error::SeriesTooLong(n_max));
    }
    let len = n_max + 1;
    let p = || {
        let mut s = Series::one(len);
        for i in 1..len {
            s.div_binomial(i, 1);
        }
        s.0
    };
    let a_even_f = || {
        let mut s = Series::one(len);
        for i in 1.. {
            if 2 * i > len {
                break;
            }
            s.mul_binomial(2 * i - 1, 1);
            if 4 * i - 2 < len {
                s.div_binomial(4 * i - 2, -1);
                s.div_binomial(4 * i - 2, -1);
            }
            if 4 * i < len {
                s.div_binomial(4 * i, 1);
            }
        }
        s.0
    };
    let halve = |a: i64, n: usize| -> Result<i64> {
        if a % 2 != 0 {
            return Err(Error::ParityMismatch(format!("odd numerator at n={n}")));
        }
        Ok(a / 2)
    };
    Ok(match kind {
        SeriesKind::P => p(),
        SeriesKind::CoreLe1 => {
            let mut s = Series::one(len);
            s.mul_binomial(1, 1);
            for i in 1.. {
                if 2 * i >= len {
                    break;
                }
                s.div_binomial(2 * i, 1);
                s.div_binomial(2 * i, 1);
            }
            s.0
        }
        SeriesKind::AEvenF => a_even_f(),
        SeriesKind::TN => {
            let (p, f) = (p(), a_even_f());
            (0..len).map(|n| halve(p[n] + f[n], n)).collect::<Result<_>>()?
        }
        SeriesKind::GN => {
            let (p, f) = (p(), a_even_f());
            (0..len)
                .map(|n| {
                    let binom_odd = (n * n.saturating_sub(1) / 2) % 2 == 1;
                    halve(if binom_odd { p[n] + f[n] } else { p[n] - f[n] }, n)
                })
                .collect::<Result<_>>()?
        }
    })
}
