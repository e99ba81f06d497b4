//! Characters of the symmetric group.

mod class;
mod hook;
mod mn;
mod table;

pub use class::{centralizer_order, class_size, ConjClass};
pub use hook::{hook_dimension, hook_lengths};
pub use mn::{border_strips, mn_character};
pub use table::{
    cache_path, read_cached, write_cached, CacheClass, CacheFile, CharacterTable,
    CACHE_SCHEMA_VERSION,
};
