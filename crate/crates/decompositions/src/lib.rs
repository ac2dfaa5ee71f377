//! Finders and validators for the three decompositions (2-join, M-join,
//! balanced skew partition) and the decomposition verdict for a Berge graph:
//! basic, or decomposable, with a certificate either way.

mod balance;
mod mjoin;
mod skew;
mod twojoin;
mod verdict;

pub use balance::{is_balanced_pair, BalanceViolation};
pub use mjoin::{find_m_join, validate_m_join, MJoinCert};
pub use skew::{
    find_balanced_skew, find_skew_partitions, first_skew_partition, validate_skew_cert,
    visit_skew_partitions, SkewPartitionCert,
};
pub use twojoin::{find_two_join, validate_two_join, TwoJoinCert};
pub use verdict::{decompose, DecomposeError, Verdict};
