//! Shared state for coefficient computations: resource ceilings, the
//! character table store and compute-once memo tables.

use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{Arc, Mutex};

use once_cell::sync::OnceCell;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::scalar::ExactInt;
use crate::symchar::{self, CharacterTable};

pub const DEFAULT_MAX_TABLE_M: usize = 30;
pub const DEFAULT_MAX_BRUTE_M: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngineConfig {
    /// Largest `m` for which a full character table of `S_m` is built.
    pub max_table_m: usize,
    /// Largest `m` for brute-force iteration over `S_m`.
    pub max_brute_m: usize,
    /// Persistent table cache; `None` keeps tables in memory only.
    pub cache_dir: Option<PathBuf>,
}

impl Default for EngineConfig {
    fn default() -> Self {
        Self {
            max_table_m: DEFAULT_MAX_TABLE_M,
            max_brute_m: DEFAULT_MAX_BRUTE_M,
            cache_dir: None,
        }
    }
}

type TableSlot<T> = Arc<OnceCell<Arc<CharacterTable<T>>>>;

/// Computation context. Cheap to share across threads; every table and
/// memoized value is computed at most once per key.
pub struct Engine<T> {
    config: EngineConfig,
    tables: Mutex<HashMap<usize, TableSlot<T>>>,
    pub(crate) sl_memo: Mutex<HashMap<(Partition, usize), T>>,
    pub(crate) fpf_memo: Mutex<HashMap<Partition, u64>>,
    pub(crate) lr_memo: Mutex<HashMap<(Partition, Partition, Partition), u64>>,
}

impl<T: ExactInt> Default for Engine<T> {
    fn default() -> Self {
        Self::new(EngineConfig::default())
    }
}

impl<T: ExactInt> Engine<T> {
    pub fn new(config: EngineConfig) -> Self {
        Self {
            config,
            tables: Mutex::default(),
            sl_memo: Mutex::default(),
            fpf_memo: Mutex::default(),
            lr_memo: Mutex::default(),
        }
    }

    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    pub(crate) fn check_table_m(&self, m: usize) -> Result<()> {
        if m > self.config.max_table_m {
            return Err(Error::ResourceLimit {
                what: "character table m",
                value: m,
                ceiling: self.config.max_table_m,
            });
        }
        Ok(())
    }

    pub(crate) fn check_brute_m(&self, m: usize) -> Result<()> {
        if m > self.config.max_brute_m {
            return Err(Error::ResourceLimit {
                what: "brute-force m",
                value: m,
                ceiling: self.config.max_brute_m,
            });
        }
        Ok(())
    }

    /// The character table of `S_m`: from memory, else from the persistent
    /// cache, else built (and persisted). Concurrent callers for the same `m`
    /// wait for a single builder.
    pub fn character_table(&self, m: usize) -> Result<Arc<CharacterTable<T>>> {
        self.check_table_m(m)?;
        let slot = {
            let mut tables = self.tables.lock().expect("table store poisoned");
            tables.entry(m).or_default().clone()
        };
        slot.get_or_try_init(|| self.load_or_build(m).map(Arc::new))
            .cloned()
    }

    fn load_or_build(&self, m: usize) -> Result<CharacterTable<T>> {
        let Some(dir) = &self.config.cache_dir else {
            log::info!("building character table of S_{m}");
            return CharacterTable::build(m);
        };
        match symchar::read_cached::<T>(dir, m) {
            Ok(Some(table)) => {
                log::debug!("loaded character table of S_{m} from {}", dir.display());
                return Ok(table);
            }
            Ok(None) => {}
            Err(e) => log::warn!("discarding cached character table for m={m}: {e}; rebuilding"),
        }
        log::info!("building character table of S_{m}");
        let table = CharacterTable::build(m)?;
        if let Err(e) = symchar::write_cached(dir, &table) {
            log::warn!("could not persist character table for m={m}: {e}");
        }
        Ok(table)
    }

    /// `dim [λ]`, read from the character table at the identity class.
    pub fn dim_irrep(&self, lambda: &Partition) -> Result<T> {
        let table = self.character_table(lambda.size())?;
        Ok(table.dim(lambda)?.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn ceiling_is_enforced() {
        let engine = Engine::<BigInt>::new(EngineConfig {
            max_table_m: 4,
            ..Default::default()
        });
        assert!(engine.character_table(4).is_ok());
        assert!(matches!(
            engine.character_table(5),
            Err(Error::ResourceLimit { value: 5, ceiling: 4, .. })
        ));
    }

    #[test]
    fn tables_are_shared() {
        let engine = Engine::<i64>::default();
        let a = engine.character_table(6).unwrap();
        let b = engine.character_table(6).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
    }

    #[test]
    fn concurrent_requests_get_one_table() {
        let engine = Engine::<BigInt>::default();
        let tables: Vec<_> = std::thread::scope(|s| {
            let handles: Vec<_> = (0..4).map(|_| s.spawn(|| engine.character_table(9).unwrap())).collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        assert!(tables.windows(2).all(|w| Arc::ptr_eq(&w[0], &w[1])));
    }

    #[test]
    fn persistent_cache_is_used_and_repaired() {
        let dir = tempfile::tempdir().unwrap();
        let config = EngineConfig {
            cache_dir: Some(dir.path().to_path_buf()),
            ..Default::default()
        };
        let first = Engine::<BigInt>::new(config.clone()).character_table(7).unwrap();
        let path = symchar::cache_path(dir.path(), 7);
        assert!(path.exists());

        std::fs::write(&path, b"garbage").unwrap();
        let rebuilt = Engine::<BigInt>::new(config.clone()).character_table(7).unwrap();
        assert_eq!(rebuilt.values(), first.values());
        // the repaired entry is valid again
        assert!(symchar::read_cached::<BigInt>(dir.path(), 7).unwrap().is_some());

        let narrow = Engine::<i64>::new(config).character_table(7).unwrap();
        assert_eq!(narrow.values()[1][0], 6);
    }

    #[test]
    fn dims() {
        let engine = Engine::<i64>::default();
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(engine.dim_irrep(&p(&[5])).unwrap(), 1);
        assert_eq!(engine.dim_irrep(&p(&[2, 1])).unwrap(), 2);
        assert_eq!(engine.dim_irrep(&p(&[3, 2, 1])).unwrap(), 16);
    }
}
