use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::partition::Partition;
use crate::scalar::{self, ExactInt};

/// A conjugacy class of `S_m`, identified by its cycle type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjClass<T> {
    pub cycle_type: Partition,
    pub class_size: T,
}

impl<T: ExactInt> ConjClass<T> {
    pub fn new(cycle_type: Partition) -> Result<Self> {
        let class_size = class_size(&cycle_type)?;
        Ok(Self {
            cycle_type,
            class_size,
        })
    }
}

/// `z_μ = Π_i i^{m_i} · m_i!`, the order of the centralizer of a
/// permutation of cycle type `μ`.
pub fn centralizer_order<T: ExactInt>(mu: &Partition) -> Result<T> {
    let mut z = T::one();
    let parts = mu.parts();
    let mut i = 0;
    while i < parts.len() {
        let part = parts[i];
        let mult = parts[i..].iter().take_while(|&&p| p == part).count();
        let base = scalar::from_u64::<T>(part as u64)?;
        for _ in 0..mult {
            z = scalar::mul(&z, &base)?;
        }
        z = scalar::mul(&z, &scalar::factorial::<T>(mult)?)?;
        i += mult;
    }
    Ok(z)
}

/// Number of permutations of cycle type `μ`, `m!/z_μ`.
pub fn class_size<T: ExactInt>(mu: &Partition) -> Result<T> {
    let fact = scalar::factorial::<T>(mu.size())?;
    scalar::exact_div(&fact, &centralizer_order(mu)?, "class size")
}
