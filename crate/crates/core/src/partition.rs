//! Integer partitions in canonical form.
//!
//! A [`Partition`] stores its parts weakly decreasing with no trailing
//! zeros, so structural equality is partition equality. Padding with zeros
//! is implicit: [`Partition::part`] reads any index past the length as 0.
//!
//! Enumeration order everywhere in this crate is *decreasing
//! lexicographic*: `(4) > (3,1) > (2,2) > (2,1,1) > (1,1,1,1)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Parse {
                input: format!("{parts:?}"),
                reason: "parts must be weakly decreasing".into(),
            });
        }
        Ok(Self { parts })
    }

    /// Sorts arbitrary parts into canonical order.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The rectangle `(d^n)`: `n` rows of length `d`.
    pub fn rectangle(d: usize, n: usize) -> Self {
        if d == 0 {
            return Self::empty();
        }
        Self { parts: vec![d; n] }
    }

    /// `(m)`, the trivial representation.
    pub fn row(m: usize) -> Self {
        Self::rectangle(m, 1)
    }

    /// `(1^m)`, the sign representation.
    pub fn column(m: usize) -> Self {
        Self::rectangle(1, m)
    }

    /// `(first, rho_1, rho_2, ...)`, or `None` if `first < rho_1`.
    pub fn with_first_row(first: usize, rho: &Partition) -> Option<Self> {
        if first < rho.part(0) {
            return None;
        }
        let mut parts = Vec::with_capacity(rho.len() + 1);
        parts.push(first);
        parts.extend_from_slice(&rho.parts);
        Some(Self::from_parts_trusted(parts))
    }

    pub(crate) fn from_parts_trusted(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|λ|`
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `ℓ(λ)`, the number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Self {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Self { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    /// Part-wise sum `λ + λ'`.
    pub fn add(&self, other: &Partition) -> Self {
        let len = self.len().max(other.len());
        Self {
            parts: (0..len).map(|i| self.part(i) + other.part(i)).collect(),
        }
    }

    /// `self ↦ theta`: `self_i ≥ theta_i ≥ self_{i+1}` for every `i`.
    pub fn interlaces(&self, theta: &Partition) -> bool {
        let len = self.len().max(theta.len());
        (0..len).all(|i| self.part(i) >= theta.part(i) && theta.part(i) >= self.part(i + 1))
    }

    /// All `θ` with `self ↦ θ`, in decreasing lexicographic order.
    ///
    /// These are the partitions obtained by deleting a horizontal strip.
    pub fn pieri_down(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(self.len());
        pieri_down_rec(self, 0, &mut current, &mut out);
        out
    }

    /// All `ν` with `|ν| = target_size` and `ν ↦ self`, in decreasing
    /// lexicographic order. Empty when `target_size < |self|`.
    pub fn pieri_up(&self, target_size: usize) -> Vec<Partition> {
        let size = self.size();
        if target_size < size {
            return Vec::new();
        }
        if self.is_empty() {
            return vec![Partition::row(target_size)];
        }
        // ν_1 ≥ θ_1 is free; ν_{i+1} ∈ [θ_{i+1}, θ_i] for i = 1..=ℓ(θ).
        let mut tails: Vec<Vec<usize>> = vec![Vec::new()];
        for i in 0..self.len() {
            let (lo, hi) = (self.part(i + 1), self.part(i));
            tails = tails
                .into_iter()
                .flat_map(|t| {
                    (lo..=hi).rev().map(move |v| {
                        let mut t = t.clone();
                        t.push(v);
                        t
                    })
                })
                .collect();
        }
        let mut out: Vec<Partition> = tails
            .into_iter()
            .filter_map(|tail| {
                let rest: usize = tail.iter().sum();
                let first = target_size.checked_sub(rest)?;
                if first < self.part(0) {
                    return None;
                }
                let mut parts = vec![first];
                parts.extend(tail);
                Some(Partition::from_parts_trusted(parts))
            })
            .collect();
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    /// The complement of `self` in the `d × n` rectangle (`n` rows of length
    /// `d`): `β_i = d − self_{n−i+1}`. `None` if `self` does not fit.
    pub fn complement_in_rectangle(&self, d: usize, n: usize) -> Option<Partition> {
        if self.len() > n || self.part(0) > d {
            return None;
        }
        let parts = (0..n).map(|i| d - self.part(n - 1 - i)).collect();
        Some(Partition::from_parts_trusted(parts))
    }
}

fn pieri_down_rec(nu: &Partition, i: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if i == nu.len() {
        out.push(Partition::from_parts_trusted(current.clone()));
        return;
    }
    for v in (nu.part(i + 1)..=nu.part(i)).rev() {
        current.push(v);
        pieri_down_rec(nu, i + 1, current, out);
        current.pop();
    }
}

impl fmt::Display for Partition {
    /// Comma separated parts, `""` for the empty partition.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.parse::<usize>().map_err(|e| Error::Parse {
                    input: s.to_string(),
                    reason: format!("part {tok:?}: {e}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|_| Error::Parse {
            input: s.to_string(),
            reason: "parts must be weakly decreasing".into(),
        })
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Constraints accepted by [`enumerate_partitions`]. All default to "none".
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PartitionFilter {
    pub max_length: Option<usize>,
    pub min_part: Option<usize>,
    pub max_part: Option<usize>,
    pub distinct: bool,
    pub odd_only: bool,
}

impl PartitionFilter {
    pub fn max_length(mut self, n: usize) -> Self {
        self.max_length = Some(n);
        self
    }

    pub fn min_part(mut self, p: usize) -> Self {
        self.min_part = Some(p);
        self
    }

    pub fn max_part(mut self, p: usize) -> Self {
        self.max_part = Some(p);
        self
    }

    pub fn distinct(mut self) -> Self {
        self.distinct = true;
        self
    }

    pub fn odd_only(mut self) -> Self {
        self.odd_only = true;
        self
    }

    fn admits(&self, p: usize) -> bool {
        !(self.odd_only && p.is_multiple_of(2))
    }
}

/// All partitions of `m` satisfying `filter`, in decreasing lexicographic order.
pub fn enumerate_partitions(m: usize, filter: &PartitionFilter) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    let min = filter.min_part.unwrap_or(1).max(1);
    let max = filter.max_part.unwrap_or(m).min(m);
    enumerate_rec(m, max, min, filter, &mut current, &mut out);
    out
}

/// All partitions of `m`, decreasing lexicographic.
pub fn partitions_of(m: usize) -> Vec<Partition> {
    enumerate_partitions(m, &PartitionFilter::default())
}

fn enumerate_rec(
    remaining: usize,
    max: usize,
    min: usize,
    filter: &PartitionFilter,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition::from_parts_trusted(current.clone()));
        return;
    }
    if filter.max_length.is_some_and(|l| current.len() >= l) {
        return;
    }
    let top = max.min(remaining);
    if top < min {
        return;
    }
    for p in (min..=top).rev() {
        if !filter.admits(p) {
            continue;
        }
        current.push(p);
        let next_max = if filter.distinct { p - 1 } else { p };
        enumerate_rec(remaining - p, next_max, min, filter, current, out);
        current.pop();
    }
}

/// Number of partitions of `m` into distinct odd parts `p` with
/// `lo ≤ p ≤ hi`. Even bounds simply narrow the admissible range; an empty
/// range admits only the empty partition.
pub fn count_distinct_odd_in_range(m: usize, lo: usize, hi: usize) -> u64 {
    // 0/1 knapsack over the admissible parts
    let mut ways = vec![0u64; m + 1];
    ways[0] = 1;
    for p in (lo.max(1)..=hi.min(m)).filter(|p| p % 2 == 1) {
        for s in (p..=m).rev() {
            ways[s] += ways[s - p];
        }
    }
    ways[m]
}

/// `#{λ ⊢ m : λ' = λ}`.
pub fn self_conjugate_count(m: usize) -> u64 {
    partitions_of(m)
        .iter()
        .filter(|p| p.is_self_conjugate())
        .count() as u64
}
