//! Kronecker and Littlewood–Richardson coefficients.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::scalar::{self, ExactInt};

/// How a coefficient was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    CharacterSum,
    SkewTableaux,
    RectangleComplement,
    PieriInversion,
    FixedPointFree,
    PartitionCount,
    ClosedForm,
}

/// An exact coefficient together with the route that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientResult<T> {
    pub value: T,
    pub method: Method,
}

/// `k_{λ,μ,ν}` with all three partitions of the same size.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KroneckerQuery {
    lambda: Partition,
    mu: Partition,
    nu: Partition,
}

impl KroneckerQuery {
    pub fn new(lambda: Partition, mu: Partition, nu: Partition) -> Result<Self> {
        if lambda.size() != mu.size() || mu.size() != nu.size() {
            return Err(Error::SizeMismatch(format!(
                "kronecker arguments have sizes {}, {}, {}",
                lambda.size(),
                mu.size(),
                nu.size()
            )));
        }
        Ok(Self { lambda, mu, nu })
    }

    pub fn size(&self) -> usize {
        self.lambda.size()
    }
}

/// `k_ρ(d, n) = k_{(dn−|ρ|, ρ), (d^n), (d^n)}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RectangularQuery {
    rho: Partition,
    d: usize,
    n: usize,
    lambda: Partition,
}

impl RectangularQuery {
    pub fn new(rho: Partition, d: usize, n: usize) -> Result<Self> {
        let total = d * n;
        let first = total as i64 - rho.size() as i64;
        let lambda = usize::try_from(first)
            .ok()
            .and_then(|f| Partition::with_first_row(f, &rho))
            .ok_or_else(|| Error::FirstRowTooShort {
                first,
                rho: rho.to_string(),
            })?;
        Ok(Self { rho, d, n, lambda })
    }

    pub fn rho(&self) -> &Partition {
        &self.rho
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `(dn − |ρ|, ρ)`
    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }
}

impl<T: ExactInt> Engine<T> {
    /// `k_{λ,μ,ν} = (1/m!) Σ_μ' |C_μ'| χ_λ χ_μ χ_ν`.
    pub fn kronecker(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<T> {
        let q = KroneckerQuery::new(lambda.clone(), mu.clone(), nu.clone())?;
        self.kronecker_query(&q)
    }

    pub fn kronecker_query(&self, q: &KroneckerQuery) -> Result<T> {
        let m = q.size();
        let table = self.character_table(m)?;
        let sum = table.class_weighted_sum(&[table.row(&q.lambda)?, table.row(&q.mu)?, table.row(&q.nu)?])?;
        let k = scalar::exact_div(&sum, &scalar::factorial(m)?, "kronecker character sum")?;
        if k.is_negative() {
            return Err(Error::Inconsistent(format!(
                "negative kronecker coefficient {k} for {:?},{:?},{:?}",
                q.lambda, q.mu, q.nu
            )));
        }
        Ok(k)
    }

    /// `k_ρ(d, n)` by a direct character sum over partitions of `dn`.
    pub fn rectangular_kron(&self, q: &RectangularQuery) -> Result<T> {
        let rect = Partition::rectangle(q.d, q.n);
        self.kronecker(&q.lambda, &rect, &rect)
    }

    /// `ν ↦ k_{λ,λ,ν}` for every `ν ⊢ |λ|`, in decreasing lexicographic order.
    pub fn tensor_square_decomposition(&self, lambda: &Partition) -> Result<Vec<(Partition, T)>> {
        let m = lambda.size();
        let table = self.character_table(m)?;
        let row = table.row(lambda)?;
        let fact: T = scalar::factorial(m)?;
        let out = table
            .irreps()
            .par_iter()
            .map(|nu| {
                let s = table.class_weighted_sum(&[row, row, table.row(nu)?])?;
                Ok((nu.clone(), scalar::exact_div(&s, &fact, "tensor square")?))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut total = T::zero();
        for (nu, k) in &out {
            total = scalar::add(&total, &scalar::mul(k, table.dim(nu)?)?)?;
        }
        let dim = table.dim(lambda)?;
        if total != scalar::mul(dim, dim)? {
            return Err(Error::Inconsistent(format!(
                "tensor square of {lambda:?} has dimension {total}"
            )));
        }
        Ok(out)
    }

    /// [`lr`] with a per-engine memo.
    pub fn lr_cached(&self, lambda: &Partition, alpha: &Partition, beta: &Partition) -> u64 {
        let key = (lambda.clone(), alpha.clone(), beta.clone());
        if let Some(&v) = self.lr_memo.lock().expect("lr memo poisoned").get(&key) {
            return v;
        }
        let v = lr(lambda, alpha, beta);
        self.lr_memo.lock().expect("lr memo poisoned").insert(key, v);
        v
    }

    /// `c_λ^{α,β}` as the multiplicity of `χ_α × χ_β` in the restriction of
    /// `χ_λ` to `S_a × S_b`, computed from character tables.
    pub fn lr_by_characters(&self, lambda: &Partition, alpha: &Partition, beta: &Partition) -> Result<T> {
        let (a, b) = (alpha.size(), beta.size());
        if a + b != lambda.size() {
            return Ok(T::zero());
        }
        let (tl, ta, tb) = (
            self.character_table(lambda.size())?,
            self.character_table(a)?,
            self.character_table(b)?,
        );
        let mut acc = T::zero();
        for (i, ca) in ta.classes().iter().enumerate() {
            let xa = &ta.row(alpha)?[i];
            if xa.is_zero() {
                continue;
            }
            for (j, cb) in tb.classes().iter().enumerate() {
                let xb = &tb.row(beta)?[j];
                if xb.is_zero() {
                    continue;
                }
                let mut joined = ca.cycle_type.parts().to_vec();
                joined.extend_from_slice(cb.cycle_type.parts());
                let xl = tl.value(lambda, &Partition::from_unsorted(joined))?;
                let mut term = scalar::mul(&ca.class_size, &cb.class_size)?;
                for x in [xa, xb, xl] {
                    term = scalar::mul(&term, x)?;
                }
                acc = scalar::add(&acc, &term)?;
            }
        }
        let order = scalar::mul(&scalar::factorial::<T>(a)?, &scalar::factorial::<T>(b)?)?;
        scalar::exact_div(&acc, &order, "restricted character inner product")
    }
}

/// Littlewood–Richardson coefficient `c_λ^{α,β}`: the number of skew
/// semistandard tableaux of shape `λ/α` and content `β` whose reverse
/// reading word is a lattice word.
pub fn lr(lambda: &Partition, alpha: &Partition, beta: &Partition) -> u64 {
    if alpha.size() + beta.size() != lambda.size() || !lambda.contains(alpha) {
        return 0;
    }
    if !lambda.contains(beta) {
        return 0;
    }
    // reading order: rows top to bottom, each row right to left
    let cells: Vec<(usize, usize)> = (0..lambda.len())
        .flat_map(|i| (alpha.part(i)..lambda.part(i)).rev().map(move |j| (i, j)))
        .collect();
    let mut grid: Vec<Vec<usize>> = (0..lambda.len()).map(|i| vec![0; lambda.part(i)]).collect();
    let mut counts = vec![0usize; beta.len() + 1];
    let mut ctx = LrSearch {
        lambda,
        alpha,
        beta,
        cells: &cells,
        grid: &mut grid,
        counts: &mut counts,
    };
    ctx.count(0)
}

struct LrSearch<'a> {
    lambda: &'a Partition,
    alpha: &'a Partition,
    beta: &'a Partition,
    cells: &'a [(usize, usize)],
    grid: &'a mut Vec<Vec<usize>>,
    counts: &'a mut Vec<usize>,
}

impl LrSearch<'_> {
    fn count(&mut self, idx: usize) -> u64 {
        let Some(&(i, j)) = self.cells.get(idx) else {
            return 1;
        };
        // entries are 1-based; 0 marks "no constraint"
        let max_row = if j + 1 < self.lambda.part(i) {
            self.grid[i][j + 1]
        } else {
            self.beta.len()
        };
        let min_col = if i > 0 && j >= self.alpha.part(i - 1) {
            self.grid[i - 1][j] + 1
        } else {
            1
        };
        let mut total = 0;
        for v in min_col..=max_row {
            if self.counts[v] >= self.beta.part(v - 1) {
                continue;
            }
            if v > 1 && self.counts[v] + 1 > self.counts[v - 1] {
                continue;
            }
            self.counts[v] += 1;
            self.grid[i][j] = v;
            total += self.count(idx + 1);
            self.counts[v] -= 1;
        }
        self.grid[i][j] = 0;
        total
    }
}

/// `c_{(d^n)}^{α,β}` by the rectangle rule: 1 exactly when `β` is the
/// complement of `α` in the `d × n` rectangle.
pub fn lr_rectangle(d: usize, n: usize, alpha: &Partition, beta: &Partition) -> u64 {
    u64::from(alpha.complement_in_rectangle(d, n).as_ref() == Some(beta))
}

/// All `α ⊢ m` contained in the `d × n` rectangle.
pub fn partitions_in_rectangle(m: usize, d: usize, n: usize) -> Vec<Partition> {
    partitions_of(m)
        .into_iter()
        .filter(|a| a.len() <= n && a.part(0) <= d)
        .collect()
}
