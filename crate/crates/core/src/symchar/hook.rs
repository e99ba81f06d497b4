use crate::error::Result;
use crate::partition::Partition;
use crate::scalar::{self, ExactInt};

/// Hook lengths of every cell, row by row.
pub fn hook_lengths(lambda: &Partition) -> Vec<usize> {
    let conj = lambda.conjugate();
    let mut hooks = Vec::with_capacity(lambda.size());
    for i in 0..lambda.len() {
        for j in 0..lambda.part(i) {
            let arm = lambda.part(i) - j - 1;
            let leg = conj.part(j) - i - 1;
            hooks.push(arm + leg + 1);
        }
    }
    hooks
}

/// `dim [λ] = m! / Π hooks`.
pub fn hook_dimension<T: ExactInt>(lambda: &Partition) -> Result<T> {
    let mut prod = T::one();
    for h in hook_lengths(lambda) {
        prod = scalar::mul(&prod, &scalar::from_u64::<T>(h as u64)?)?;
    }
    scalar::exact_div(&scalar::factorial(lambda.size())?, &prod, "hook length formula")
}
