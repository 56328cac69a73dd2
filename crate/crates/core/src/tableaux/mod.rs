//! Partitions, tableaux, flags of partitions, leg polynomials, and the
//! combinatorial encodings built on them.

mod dyck;
mod gt;
mod partition;
mod symmetric;
mod tableau;

pub use dyck::{bracket_factorial, dyck_word, phantom_factor, DyckWord};
pub use gt::{flags_with_top, patterns_with_top, GtPattern};
pub use partition::{Partition, StripGeometry, StripPair};
pub use symmetric::{hall_littlewood, monomial_symmetric, schur};
pub(crate) use symmetric::next_permutation;
pub use tableau::{
    bounded_tableaux, bracket_product, elements, full_set, gale_leq, pair_legs, reduced_tableaux, schubert_dim,
    subset_of, subset_string, subsets_in_order, z_monomial, Subset, Tableau,
};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum TableauError {
    #[error("{0:?} is not weakly decreasing")]
    NotAPartition(Vec<usize>),
    #[error("pair is not a horizontal strip in host_n")]
    NotAHostPair,
    #[error("column is empty, unsorted, or outside [n]")]
    BadColumn,
    #[error("adjacent columns violate the tableau condition")]
    NotSemistandard,
    #[error("sequence of partitions is not a flag of horizontal strips")]
    BadFlag,
    #[error("array is not an interlacing Gelfand-Tsetlin pattern")]
    BadPattern,
    #[error("word is not a Dyck word")]
    NotDyck,
    #[error("partition has more parts than variables")]
    TooManyParts,
}
