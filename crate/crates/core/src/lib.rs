//! Exact computation of Kronecker coefficients of the symmetric group,
//! Littlewood–Richardson coefficients, and the stable limits of
//! rectangular Kronecker coefficients `k_{(dn−|ρ|,ρ),(d^n),(d^n)}`.
//!
//! The engines are generic over an exact integer type ([`ExactInt`]); the
//! aliases below fix it to [`BigInt`], which never overflows.

pub mod coeffs;
pub mod engine;
pub mod error;
pub mod partition;
pub mod scalar;
pub mod stable;
pub mod symchar;
pub mod verify;

pub use num_bigint::BigInt;

pub use coeffs::{lr, lr_rectangle, CoefficientResult, KroneckerQuery, Method, RectangularQuery};
pub use engine::EngineConfig;
pub use error::{Error, Result};
pub use partition::{
    count_distinct_odd_in_range, enumerate_partitions, partitions_of, self_conjugate_count,
    Partition, PartitionFilter,
};
pub use scalar::ExactInt;
pub use stable::{derangement_count, n2_closed_form, stable_sign, stable_trivial};
pub use verify::{ReportKind, SuiteConfig, VerificationReport};

/// Arbitrary-precision engine.
pub type Engine = engine::Engine<BigInt>;
/// Fixed-width engine; overflow is reported as [`Error::Overflow`].
pub type Engine64 = engine::Engine<i64>;
pub type Engine128 = engine::Engine<i128>;

pub type CharacterTable = symchar::CharacterTable<BigInt>;
pub type ConjClass = symchar::ConjClass<BigInt>;
pub type StableTableRow = stable::StableTableRow<BigInt>;
