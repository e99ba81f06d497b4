//! Murnaghan–Nakayama evaluation of irreducible characters of `S_m`.
//!
//! Border strips are handled through beta-sets: a strip of length `r` in `λ`
//! corresponds to moving one bead of the beta-set `{λ_i + ℓ − i}` down by
//! `r` onto an empty position, and the strip height is the number of beads
//! jumped over.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::scalar::{self, ExactInt};

/// Shapes obtained by removing a border strip of length `r`, paired with
/// `true` when the strip height is odd.
pub fn border_strips(shape: &Partition, r: usize) -> Vec<(Partition, bool)> {
    let len = shape.len();
    let beta: Vec<usize> = (0..len).map(|i| shape.part(i) + (len - 1 - i)).collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < r {
            continue;
        }
        let target = b - r;
        if beta.contains(&target) {
            continue;
        }
        let jumped = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts = moved
            .iter()
            .enumerate()
            .map(|(k, &x)| x - (len - 1 - k))
            .collect();
        out.push((Partition::from_parts_trusted(parts), jumped % 2 == 1));
    }
    out
}

/// Memo keyed by the remaining shape and the number of class parts still to
/// be removed (which identifies the suffix of a fixed cycle type).
pub(crate) type ColumnMemo<T> = HashMap<(Partition, usize), T>;

/// `χ_shape` evaluated on the cycle type whose remaining parts are `rest`
/// (sorted decreasingly). Strips are removed largest part first.
pub(crate) fn mn_rec<T: ExactInt>(
    shape: &Partition,
    rest: &[usize],
    memo: &mut ColumnMemo<T>,
) -> Result<T> {
    let Some((&r, tail)) = rest.split_first() else {
        return Ok(if shape.is_empty() { T::one() } else { T::zero() });
    };
    let key = (shape.clone(), rest.len());
    if let Some(v) = memo.get(&key) {
        return Ok(v.clone());
    }
    let mut acc = T::zero();
    for (smaller, odd) in border_strips(shape, r) {
        let v = mn_rec(&smaller, tail, memo)?;
        acc = if odd {
            scalar::sub(&acc, &v)?
        } else {
            scalar::add(&acc, &v)?
        };
    }
    memo.insert(key, acc.clone());
    Ok(acc)
}

/// `χ_λ(μ)` computed from scratch.
pub fn mn_character<T: ExactInt>(lambda: &Partition, mu: &Partition) -> Result<T> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(format!(
            "|{lambda:?}| = {} but |{mu:?}| = {}",
            lambda.size(),
            mu.size()
        )));
    }
    mn_rec(lambda, mu.parts(), &mut ColumnMemo::new())
}
