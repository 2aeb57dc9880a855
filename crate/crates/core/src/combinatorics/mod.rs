//! Partitions, multipartitions and standard tableaux.
//!
//! Both [`Partition`] and [`Multipartition`] carry the canonical total order
//! used everywhere a representative or an output order is needed: larger
//! sizes first, then reverse-lexicographic on part sequences. Enumerations
//! return their results sorted in this order.

mod multipartition;
mod partition;
mod tableau;

pub use multipartition::{block_tuples, enumerate_multipartitions, syt_count, Multipartition};
pub use partition::{enumerate_partitions, Partition};
pub use tableau::{enumerate_standard_tableaux, StandardTableau, DEFAULT_TABLEAU_CAP};

/// `n!` as an exact integer. Panics on overflow (n > 34).
pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).fold(1u128, |acc, k| {
        acc.checked_mul(k).expect("factorial overflows u128")
    })
}
