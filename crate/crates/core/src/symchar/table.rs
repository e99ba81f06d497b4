use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::class::ConjClass;
use super::hook::hook_dimension;
use super::mn::{mn_rec, ColumnMemo};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::scalar::{self, ExactInt};

pub const CACHE_SCHEMA_VERSION: u32 = 1;

/// The full character table of `S_m`.
///
/// Rows are irreducibles in decreasing lexicographic order, columns are
/// conjugacy classes in increasing lexicographic order (identity first).
#[derive(Debug, Clone)]
pub struct CharacterTable<T> {
    m: usize,
    irreps: Vec<Partition>,
    classes: Vec<ConjClass<T>>,
    values: Vec<Vec<T>>,
    irrep_index: HashMap<Partition, usize>,
    class_index: HashMap<Partition, usize>,
}

impl<T: ExactInt> CharacterTable<T> {
    /// Builds the table column by column; columns are independent.
    pub fn build(m: usize) -> Result<Self> {
        let irreps = partitions_of(m);
        let mut class_types = irreps.clone();
        class_types.reverse();
        let columns = class_types
            .par_iter()
            .map(|mu| {
                let mut memo = ColumnMemo::new();
                irreps
                    .iter()
                    .map(|lambda| mn_rec::<T>(lambda, mu.parts(), &mut memo))
                    .collect::<Result<Vec<T>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let values = (0..irreps.len())
            .map(|i| columns.iter().map(|col| col[i].clone()).collect())
            .collect();
        let classes = class_types
            .into_iter()
            .map(ConjClass::new)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::assemble(m, irreps, classes, values))
    }

    fn assemble(
        m: usize,
        irreps: Vec<Partition>,
        classes: Vec<ConjClass<T>>,
        values: Vec<Vec<T>>,
    ) -> Self {
        let irrep_index = irreps.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let class_index = classes
            .iter()
            .enumerate()
            .map(|(i, c)| (c.cycle_type.clone(), i))
            .collect();
        Self {
            m,
            irreps,
            classes,
            values,
            irrep_index,
            class_index,
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn irreps(&self) -> &[Partition] {
        &self.irreps
    }

    pub fn classes(&self) -> &[ConjClass<T>] {
        &self.classes
    }

    pub fn values(&self) -> &[Vec<T>] {
        &self.values
    }

    fn irrep_row(&self, lambda: &Partition) -> Result<usize> {
        self.irrep_index.get(lambda).copied().ok_or_else(|| {
            Error::SizeMismatch(format!("{lambda:?} is not a partition of {}", self.m))
        })
    }

    /// The row `μ ↦ χ_λ(μ)`, in class order.
    pub fn row(&self, lambda: &Partition) -> Result<&[T]> {
        Ok(&self.values[self.irrep_row(lambda)?])
    }

    pub fn value(&self, lambda: &Partition, mu: &Partition) -> Result<&T> {
        let i = self.irrep_row(lambda)?;
        let j = self.class_index.get(mu).copied().ok_or_else(|| {
            Error::SizeMismatch(format!("{mu:?} is not a partition of {}", self.m))
        })?;
        Ok(&self.values[i][j])
    }

    /// `χ_λ(1^m)`.
    pub fn dim(&self, lambda: &Partition) -> Result<&T> {
        Ok(&self.row(lambda)?[0])
    }

    /// `Σ_μ |C_μ| · Π_rows χ(μ)` over the given rows.
    pub fn class_weighted_sum(&self, rows: &[&[T]]) -> Result<T> {
        let mut acc = T::zero();
        for (j, class) in self.classes.iter().enumerate() {
            let mut term = class.class_size.clone();
            for row in rows {
                if row[j].is_zero() {
                    term = T::zero();
                    break;
                }
                term = scalar::mul(&term, &row[j])?;
            }
            acc = scalar::add(&acc, &term)?;
        }
        Ok(acc)
    }

    /// Full row and column orthogonality. Quadratic in the table size.
    pub fn check_orthogonality(&self) -> Result<()> {
        let fact: T = scalar::factorial(self.m)?;
        let k = self.irreps.len();
        for a in 0..k {
            for b in a..k {
                let s = self.class_weighted_sum(&[&self.values[a], &self.values[b]])?;
                let expected = if a == b { fact.clone() } else { T::zero() };
                if s != expected {
                    return Err(Error::Inconsistent(format!(
                        "row orthogonality fails for {:?}, {:?}: {s}",
                        self.irreps[a], self.irreps[b]
                    )));
                }
            }
        }
        for a in 0..k {
            let z = scalar::exact_div(&fact, &self.classes[a].class_size, "centralizer")?;
            for b in a..k {
                let mut s = T::zero();
                for row in &self.values {
                    s = scalar::add(&s, &scalar::mul(&row[a], &row[b])?)?;
                }
                let expected = if a == b { z.clone() } else { T::zero() };
                if s != expected {
                    return Err(Error::Inconsistent(format!(
                        "column orthogonality fails for {:?}, {:?}: {s}",
                        self.classes[a].cycle_type, self.classes[b].cycle_type
                    )));
                }
            }
        }
        Ok(())
    }

    /// Checks every row norm and every column against the identity column,
    /// plus hook-length dimensions. Linear in the number of entries, so it
    /// is cheap enough to run on every cache load.
    pub fn validate(&self) -> Result<()> {
        let fact: T = scalar::factorial(self.m)?;
        let k = self.irreps.len();
        if self.values.len() != k || self.values.iter().any(|r| r.len() != k) {
            return Err(Error::Inconsistent("table is not square".into()));
        }
        for (lambda, row) in self.irreps.iter().zip(&self.values) {
            if row[0] != hook_dimension::<T>(lambda)? {
                return Err(Error::Inconsistent(format!("dimension of {lambda:?} disagrees")));
            }
            if self.class_weighted_sum(&[row, row])? != fact {
                return Err(Error::Inconsistent(format!("row norm of {lambda:?} is not m!")));
            }
        }
        for j in 1..k {
            let mut s = T::zero();
            for row in &self.values {
                s = scalar::add(&s, &scalar::mul(&row[0], &row[j])?)?;
            }
            if !s.is_zero() {
                return Err(Error::Inconsistent(format!(
                    "column {:?} is not orthogonal to the identity column",
                    self.classes[j].cycle_type
                )));
            }
        }
        Ok(())
    }

    pub fn to_cache(&self) -> CacheFile {
        CacheFile {
            schema_version: CACHE_SCHEMA_VERSION,
            m: self.m,
            irreps: self.irreps.clone(),
            classes: self
                .classes
                .iter()
                .map(|c| CacheClass {
                    cycle_type: c.cycle_type.clone(),
                    class_size: c.class_size.to_string(),
                })
                .collect(),
            values: self
                .values
                .iter()
                .map(|row| row.iter().map(|v| v.to_string()).collect())
                .collect(),
        }
    }

    /// Rebuilds a table from its cache form, rejecting anything that is not
    /// exactly the canonical table for `m`.
    pub fn from_cache(file: &CacheFile, m: usize) -> Result<Self> {
        let bad = |why: &str| Error::Inconsistent(format!("cache entry for m={m}: {why}"));
        if file.schema_version != CACHE_SCHEMA_VERSION {
            return Err(bad("schema version mismatch"));
        }
        if file.m != m {
            return Err(bad("wrong m"));
        }
        let irreps = partitions_of(m);
        if file.irreps != irreps {
            return Err(bad("irreducibles out of canonical order"));
        }
        let mut class_types = irreps.clone();
        class_types.reverse();
        if file.classes.len() != class_types.len() {
            return Err(bad("class count"));
        }
        let mut classes = Vec::with_capacity(class_types.len());
        for (entry, mu) in file.classes.iter().zip(class_types) {
            if entry.cycle_type != mu {
                return Err(bad("classes out of canonical order"));
            }
            let class = ConjClass::<T>::new(mu)?;
            if entry.class_size != class.class_size.to_string() {
                return Err(bad("class size"));
            }
            classes.push(class);
        }
        let parse = |s: &String| s.parse::<T>().map_err(|_| bad("unparseable value"));
        let values = file
            .values
            .iter()
            .map(|row| row.iter().map(parse).collect::<Result<Vec<T>>>())
            .collect::<Result<Vec<_>>>()?;
        let table = Self::assemble(m, irreps, classes, values);
        table.validate().map_err(|e| bad(&e.to_string()))?;
        Ok(table)
    }
}

/// On-disk form of a character table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheFile {
    pub schema_version: u32,
    pub m: usize,
    pub irreps: Vec<Partition>,
    pub classes: Vec<CacheClass>,
    pub values: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheClass {
    pub cycle_type: Partition,
    pub class_size: String,
}

pub fn cache_path(dir: &Path, m: usize) -> PathBuf {
    dir.join(format!("chartable-v{CACHE_SCHEMA_VERSION}-m{m}.json"))
}

/// Reads a cached table. `Ok(None)` means absent; a present but invalid entry
/// is an error so the caller can warn and rebuild.
pub fn read_cached<T: ExactInt>(dir: &Path, m: usize) -> Result<Option<CharacterTable<T>>> {
    let path = cache_path(dir, m);
    let bytes = match fs::read(&path) {
        Ok(b) => b,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let file: CacheFile = serde_json::from_slice(&bytes)?;
    CharacterTable::from_cache(&file, m).map(Some)
}

/// Writes the whole table to a temporary file and renames it into place, so
/// readers never observe a partial entry.
pub fn write_cached<T: ExactInt>(dir: &Path, table: &CharacterTable<T>) -> Result<()> {
    fs::create_dir_all(dir)?;
    let path = cache_path(dir, table.m());
    let tmp = dir.join(format!(
        ".chartable-m{}.{}.tmp",
        table.m(),
        std::process::id()
    ));
    {
        let mut f = fs::File::create(&tmp)?;
        serde_json::to_writer(&mut f, &table.to_cache())?;
        f.write_all(b"\n")?;
        f.sync_all()?;
    }
    fs::rename(&tmp, &path)?;
    Ok(())
}
