//! Simply connected regions of unit squares, their posets, Schur
//! labelings, and domino tilings.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::{Labeling, Poset};

/// A square `(row, col)`; rows grow downward, columns to the right.
pub type Square = (i64, i64);

/// A finite, edge-connected, simply connected set of squares. Squares are
/// kept sorted by row, then column, and that order indexes the poset.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Region {
    cells: Vec<Square>,
}

const NEIGHBOURS: [(i64, i64); 4] = [(0, 1), (1, 0), (0, -1), (-1, 0)];

impl Region {
    pub fn new(cells: impl IntoIterator<Item = Square>) -> Result<Self> {
        let set: BTreeSet<Square> = cells.into_iter().collect();
        if set.is_empty() {
            return Err(Error::EmptyRegion);
        }
        if !connected(&set) {
            return Err(Error::NotConnected);
        }
        if !complement_connected(&set) {
            return Err(Error::NotSimplyConnected);
        }
        Ok(Self { cells: set.into_iter().collect() })
    }

    /// One `row col` pair per line; `#` starts a comment.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut cells = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let nums: Vec<i64> = line
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| Error::Parse(format!("line {}: bad integer `{t}`", i + 1))))
                .collect::<Result<_>>()?;
            if nums.len() != 2 {
                return Err(Error::Parse(format!("line {}: expected `row col`", i + 1)));
            }
            cells.push((nums[0], nums[1]));
        }
        Self::new(cells)
    }

    pub fn cells(&self) -> &[Square] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    fn index(&self, sq: Square) -> Option<usize> {
        self.cells.binary_search(&sq).ok()
    }

    /// The poset generated by `(i,j) < (i,j+1)` and `(i,j) < (i+1,j)` for
    /// squares inside the region.
    pub fn poset(&self) -> Result<Poset> {
        let mut covers = Vec::new();
        for (s, &(r, c)) in self.cells.iter().enumerate() {
            for next in [(r, c + 1), (r + 1, c)] {
                if let Some(t) = self.index(next) {
                    covers.push((s, t));
                }
            }
        }
        Poset::new(self.len(), &covers)
    }

    /// Labels rows from the bottom row up, each row left to right, so
    /// labels increase along rows and decrease down columns.
    pub fn schur_labeling(&self) -> Labeling {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(self.cells[i].0), self.cells[i].1));
        Labeling::from_order(&order).expect("ordering of all squares")
    }

    /// Every domino tiling, found by covering the first uncovered square
    /// (row-major) horizontally, then vertically.
    pub fn tilings(&self) -> Vec<Tiling> {
        let mut out = Vec::new();
        self.search(&mut vec![false; self.len()], &mut Vec::new(), &mut |t| {
            out.push(t.clone());
            true
        });
        out
    }

    pub fn first_tiling(&self) -> Option<Tiling> {
        let mut found = None;
        self.search(&mut vec![false; self.len()], &mut Vec::new(), &mut |t| {
            found = Some(t.clone());
            false
        });
        found
    }

    /// Returns `false` once `visit` asks to stop.
    fn search(&self, covered: &mut Vec<bool>, acc: &mut Tiling, visit: &mut impl FnMut(&Tiling) -> bool) -> bool {
        let Some(s) = covered.iter().position(|&c| !c) else {
            return visit(acc);
        };
        let (r, c) = self.cells[s];
        for (partner, vertical) in [((r, c + 1), false), ((r + 1, c), true)] {
            if let Some(t) = self.index(partner).filter(|&t| !covered[t]) {
                covered[s] = true;
                covered[t] = true;
                acc.push(PlacedDomino { cells: [self.cells[s], partner], vertical });
                let go_on = self.search(covered, acc, visit);
                acc.pop();
                covered[s] = false;
                covered[t] = false;
                if !go_on {
                    return false;
                }
            }
        }
        true
    }

    /// `(-1)^{#vertical}` of the first tiling found.
    pub fn sign(&self) -> Result<i8> {
        if self.len() % 2 == 1 {
            return Err(Error::OddSize(self.len()));
        }
        let tiling = self.first_tiling().ok_or(Error::Untilable)?;
        Ok(tiling_sign(&tiling))
    }
}

impl FromStr for Region {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse_text(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PlacedDomino {
    pub cells: [Square; 2],
    pub vertical: bool,
}

pub type Tiling = Vec<PlacedDomino>;

pub fn tiling_sign(t: &Tiling) -> i8 {
    if t.iter().filter(|d| d.vertical).count() % 2 == 0 {
        1
    } else {
        -1
    }
}

fn flood(start: Square, inside: impl Fn(Square) -> bool) -> HashSet<Square> {
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some((r, c)) = queue.pop_front() {
        for (dr, dc) in NEIGHBOURS {
            let n = (r + dr, c + dc);
            if inside(n) && seen.insert(n) {
                queue.push_back(n);
            }
        }
    }
    seen
}

fn connected(set: &BTreeSet<Square>) -> bool {
    let start = *set.iter().next().expect("nonempty");
    flood(start, |sq| set.contains(&sq)).len() == set.len()
}

/// The complement inside the bounding box padded by one square must be a
/// single component.
fn complement_connected(set: &BTreeSet<Square>) -> bool {
    let (r0, r1) = (set.iter().map(|s| s.0).min().unwrap() - 1, set.iter().map(|s| s.0).max().unwrap() + 1);
    let (c0, c1) = (set.iter().map(|s| s.1).min().unwrap() - 1, set.iter().map(|s| s.1).max().unwrap() + 1);
    let inside = |(r, c): Square| r >= r0 && r <= r1 && c >= c0 && c <= c1 && !set.contains(&(r, c));
    let total = ((r1 - r0 + 1) * (c1 - c0 + 1)) as usize - set.len();
    flood((r0, c0), inside).len() == total
}

/// Every valid region inside a `rows × cols` frame with at most `max_size`
/// squares, in increasing order of the bitmask of the frame squares.
pub fn regions_in_frame(rows: usize, cols: usize, max_size: usize) -> Vec<Region> {
    let n = rows * cols;
    assert!(n <= 24, "frame too large to scan exhaustively");
    (1u32..(1 << n))
        .filter(|m| m.count_ones() as usize <= max_size)
        .filter_map(|m| {
            let cells = (0..n).filter(|i| m & (1 << i) != 0).map(|i| ((i / cols) as i64, (i % cols) as i64));
            Region::new(cells).ok()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::shape_poset;

    fn region(cells: &[Square]) -> Region {
        Region::new(cells.iter().copied()).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(Region::new([]), Err(Error::EmptyRegion));
        assert_eq!(Region::new([(0, 0), (1, 1)]), Err(Error::NotConnected));
        let ring: Vec<Square> = (0..3).flat_map(|r| (0..3).map(move |c| (r, c))).filter(|&s| s != (1, 1)).collect();
        assert_eq!(Region::new(ring), Err(Error::NotSimplyConnected));
        assert!("0 0\n0 1 # pair\n".parse::<Region>().is_ok());
        assert!("0 0 0\n".parse::<Region>().is_err());
    }

    #[test]
    fn posets() {
        assert_eq!(region(&[(5, 5)]).poset().unwrap().len(), 1);
        let sq = region(&[(1, 1), (1, 2), (2, 1), (2, 2)]);
        assert_eq!(sq.poset().unwrap(), shape_poset(&"2,2".parse().unwrap()).unwrap().0);
        // An L of three squares: (0,0) below both others.
        let l = region(&[(0, 0), (0, 1), (1, 0)]).poset().unwrap();
        assert_eq!(l.covers(), &[(0, 1), (0, 2)]);
        // Rotated: a chain (0,0) < (0,1) < (1,1).
        let c = region(&[(0, 0), (0, 1), (1, 1)]).poset().unwrap();
        assert_eq!(c, Poset::chain(3));
    }

    #[test]
    fn schur_labelings() {
        let sq = region(&[(1, 1), (1, 2), (2, 1), (2, 2)]);
        assert_eq!(sq.schur_labeling().labels(), &[3, 4, 1, 2]);
        assert_eq!(region(&[(0, 0), (0, 1), (0, 2)]).schur_labeling().labels(), &[1, 2, 3]);
        assert_eq!(region(&[(0, 0), (1, 0), (2, 0)]).schur_labeling().labels(), &[3, 2, 1]);
    }

    #[test]
    fn signs() {
        assert_eq!(region(&[(0, 0), (0, 1), (1, 0), (1, 1)]).sign(), Ok(1));
        assert_eq!(region(&[(0, 0), (0, 1)]).sign(), Ok(1));
        assert_eq!(region(&[(0, 0), (1, 0)]).sign(), Ok(-1));
        assert_eq!(region(&[(0, 0)]).sign(), Err(Error::OddSize(1)));
        // A T-tetromino cannot be tiled.
        assert_eq!(region(&[(0, 0), (0, 1), (0, 2), (1, 1)]).sign(), Err(Error::Untilable));
        assert_eq!(region(&[(0, 0), (0, 1), (1, 0), (1, 1)]).tilings().len(), 2);
    }

    #[test]
    fn frame_scan() {
        // Connected, simply connected subsets of a 2×2 frame: 4 + 4 + 4 + 1.
        assert_eq!(regions_in_frame(2, 2, 4).len(), 13);
    }
}
