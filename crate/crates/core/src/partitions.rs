//! Integer partitions read as Young diagrams or as cycle types.
//!
//! A [`Partition`] is stored densely as its weakly decreasing list of
//! positive parts, so two equal partitions always hash and compare equal.
//! The same value labels an irreducible representation of `S_n` (as a
//! diagram) and a conjugacy class of `S_n` (as a cycle type).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// The ordering is the canonical enumeration order: lexicographically
/// *decreasing* on parts, so `(4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1)`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
    n: usize,
}

/// One way of removing a border strip from a diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StripRemoval {
    pub remainder: Partition,
    /// Number of rows the strip occupies, minus one.
    pub height: usize,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition {
                parts,
                reason: "parts must be positive",
            });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition {
                parts,
                reason: "parts must be weakly decreasing",
            });
        }
        let n = parts.iter().sum();
        Ok(Partition { parts, n })
    }

    /// The partition of zero.
    pub fn empty() -> Self {
        Partition {
            parts: Vec::new(),
            n: 0,
        }
    }

    /// Builds a partition from `(part, repeat)` blocks, e.g. `[(3, 1), (2, 1), (1, 3)]`
    /// for `(3,2,1^3)`. Blocks with zero repeats are skipped.
    pub fn from_blocks(blocks: &[(usize, usize)]) -> Result<Self> {
        let parts = blocks
            .iter()
            .flat_map(|&(part, reps)| std::iter::repeat_n(part, reps))
            .collect();
        Partition::new(parts)
    }

    /// The hook `(n-m, 1^m)`.
    pub fn hook(n: usize, m: usize) -> Result<Self> {
        if n == 0 || m >= n {
            return Err(Error::InvalidPartition {
                parts: vec![n, m],
                reason: "hook needs 0 <= m < n",
            });
        }
        Partition::from_blocks(&[(n - m, 1), (1, m)])
    }

    /// Cycle type `(k, 1^{n-k})` of a single `k`-cycle in `S_n`.
    pub fn cycle_class(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::CycleLengthOutOfRange { n, k });
        }
        Partition::from_blocks(&[(k, 1), (1, n - k)])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.n
    }

    /// Number of parts, `ℓ(γ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row length, zero past the last row.
    pub fn row(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> Option<usize> {
        self.parts.first().copied()
    }

    /// Drops the first (largest) part.
    pub fn without_first(&self) -> Partition {
        match self.parts.split_first() {
            Some((&head, rest)) => Partition {
                parts: rest.to_vec(),
                n: self.n - head,
            },
            None => Partition::empty(),
        }
    }

    /// `Some(m)` if this is the hook `(n-m, 1^m)`.
    pub fn hook_leg(&self) -> Option<usize> {
        match self.parts.split_first() {
            Some((_, rest)) if rest.iter().all(|&p| p == 1) => Some(rest.len()),
            _ => None,
        }
    }

    /// Whether every box of `self` is a box of `other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// Map `i -> c_i(γ)` over the part sizes that occur.
    pub fn part_counts(&self) -> BTreeMap<usize, usize> {
        let mut counts = BTreeMap::new();
        for &p in &self.parts {
            *counts.entry(p).or_insert(0) += 1;
        }
        counts
    }

    /// Transpose of the diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.first().unwrap_or(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts, n: self.n }
    }

    /// Sign of a permutation with this cycle type: `(-1)^(n - ℓ(γ))`.
    pub fn sign_of_class(&self) -> i32 {
        if (self.n - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Hook lengths row by row; entry `[i][j]` is the hook of box `(i, j)`, zero-based.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row)| {
                (0..row)
                    .map(|j| (row - j) + (conj.parts[j] - i) - 1)
                    .collect()
            })
            .collect()
    }

    /// Dimension of the Specht module, `n! / ∏ hooks`.
    ///
    /// Panics if the division is not exact, which can only mean a bug in
    /// the hook computation.
    pub fn dimension(&self) -> BigUint {
        let numerator = factorial(self.n);
        let denominator = self
            .hook_lengths()
            .iter()
            .flatten()
            .fold(BigUint::one(), |acc, &h| acc * BigUint::from(h));
        assert!(
            (&numerator % &denominator).is_zero(),
            "hook product does not divide n! for {self}"
        );
        numerator / denominator
    }

    /// Every `μ ⊆ ζ` with `ζ/μ` a border strip of `m` boxes.
    ///
    /// For each top row `i` the strip starts at the end of row `i` and runs
    /// down the rim; rows strictly between the top and bottom are fixed by
    /// the rim, so the bottom row `r` and its starting column are forced by
    /// the size. Results are ordered by top row, then bottom row.
    pub fn border_strip_removals(&self, m: usize) -> Vec<StripRemoval> {
        let rows = self.len();
        let mut out = Vec::new();
        if m == 0 || m > self.n {
            return out;
        }
        for top in 0..rows {
            // boxes taken by rows top..r-1 of the rim
            let mut above = 0usize;
            for bottom in top..rows {
                let remaining = m - above;
                let row_len = self.parts[bottom];
                let below = self.row(bottom + 1);
                // the bottom row contributes between 1 and row_len - below boxes
                if remaining <= row_len - below {
                    let mut parts = self.parts.clone();
                    for t in top..bottom {
                        parts[t] = self.parts[t + 1] - 1;
                    }
                    parts[bottom] = row_len - remaining;
                    while parts.last() == Some(&0) {
                        parts.pop();
                    }
                    out.push(StripRemoval {
                        remainder: Partition {
                            parts,
                            n: self.n - m,
                        },
                        height: bottom - top,
                    });
                    break;
                }
                // the rim continues below: row `bottom` gives row_len - below + 1 boxes
                if below == 0 {
                    break;
                }
                above += row_len - below + 1;
                if above >= m {
                    break;
                }
            }
        }
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// Exponent notation, e.g. `(3,2,1^3)`; the empty partition prints as `()`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        let mut first = true;
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&q| q == p).count();
            if !first {
                write!(f, ",")?;
            }
            first = false;
            if run == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{run}")?;
            }
            i += run;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts comma-separated parts with optional exponents: `5,2,1`, `3,2,1^3`,
/// and tolerates surrounding parentheses. The empty string is the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let bad = || Error::InvalidPartition {
            parts: Vec::new(),
            reason: "unparseable partition syntax",
        };
        let mut blocks = Vec::new();
        for token in body.split(',') {
            let token = token.trim();
            let (part, reps) = match token.split_once('^') {
                Some((p, e)) => (p.trim(), e.trim()),
                None => (token, "1"),
            };
            let part: usize = part.parse().map_err(|_| bad())?;
            let reps: usize = reps.parse().map_err(|_| bad())?;
            blocks.push((part, reps));
        }
        Partition::from_blocks(&blocks)
    }
}

/// All partitions of `n` in lexicographically decreasing order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    if n == 0 {
        out.push(Partition::empty());
        return out;
    }
    let mut current = vec![n];
    loop {
        out.push(Partition {
            parts: current.clone(),
            n,
        });
        // rightmost part larger than one
        let Some(pos) = current.iter().rposition(|&p| p > 1) else {
            break;
        };
        let ones = current.len() - pos - 1;
        let cap = current[pos] - 1;
        current.truncate(pos);
        current.push(cap);
        let mut rest = ones + 1;
        while rest > 0 {
            let take = rest.min(cap);
            current.push(take);
            rest -= take;
        }
    }
    out
}

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| {
        acc * BigUint::from(n - i) / BigUint::from(i + 1)
    })
}
