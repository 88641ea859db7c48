//! Permutations as words and their classical statistics.

use serde::Serialize;

use crate::error::{Error, Result};

/// A permutation of `{1..n}` written as the word `a_1 a_2 ... a_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &a in &word {
            if a == 0 || a > n || seen[a] {
                return Err(Error::Parse(format!("{word:?} is not a permutation of 1..{n}")));
            }
            seen[a] = true;
        }
        Ok(Self { word })
    }

    pub(crate) fn new_unchecked(word: Vec<usize>) -> Self {
        Self { word }
    }

    pub fn identity(n: usize) -> Self {
        Self { word: (1..=n).collect() }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Number of pairs `i < j` with `a_i > a_j`.
    pub fn inv(&self) -> usize {
        let w = &self.word;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&b| b < w[i]).count())
            .sum()
    }

    /// Positions `i` (1-based) with `a_i > a_{i+1}`.
    pub fn descent_set(&self) -> Vec<usize> {
        self.word
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn maj(&self) -> usize {
        self.descent_set().iter().sum()
    }

    /// `+1` for even permutations, `-1` for odd.
    pub fn sign(&self) -> i8 {
        if self.inv().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let sep = if self.word.len() > 9 { " " } else { "" };
        let parts: Vec<String> = self.word.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(sep))
    }
}
