//! The decomposition verdict for a Berge graph: basic, or one of the three
//! decompositions, tried in a fixed order for determinism. A Berge graph
//! reaching `CounterexampleToTheorem` would contradict the decomposition
//! theorem, so the variant exists to be tested for, never returned in
//! practice.

use graphcore::Graph;
use recognizers::{berge_witness, classify_basic, BasicCert, BergeWitness, Side};
use thiserror::Error;

use crate::mjoin::{find_m_join, MJoinCert};
use crate::skew::{find_balanced_skew, SkewPartitionCert};
use crate::twojoin::{find_two_join, TwoJoinCert};

#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Verdict {
    Basic(BasicCert),
    TwoJoin { side: Side, cert: TwoJoinCert },
    MJoin(MJoinCert),
    BalancedSkew(SkewPartitionCert),
    CounterexampleToTheorem,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DecomposeError {
    #[error("decompose requires a Berge graph; found an odd {}hole of length {}",
        if .0.side == Side::Complement { "anti" } else { "" }, .0.hole.length())]
    NotBerge(BergeWitness),
}

/// Tries classify_basic, a 2-join in G, a 2-join in the complement, an
/// M-join, and a balanced skew partition, in that order.
pub fn decompose(g: &Graph) -> Result<Verdict, DecomposeError> {
    if let Some(w) = berge_witness(g) {
        return Err(DecomposeError::NotBerge(w));
    }
    if let Some(cert) = classify_basic(g) {
        return Ok(Verdict::Basic(cert));
    }
    if let Some(cert) = find_two_join(g) {
        return Ok(Verdict::TwoJoin { side: Side::G, cert });
    }
    if let Some(cert) = find_two_join(&g.complement()) {
        return Ok(Verdict::TwoJoin { side: Side::Complement, cert });
    }
    if let Some(cert) = find_m_join(g) {
        return Ok(Verdict::MJoin(cert));
    }
    if let Some(cert) = find_balanced_skew(g) {
        return Ok(Verdict::BalancedSkew(cert));
    }
    Ok(Verdict::CounterexampleToTheorem)
}
