//! Exact combinatorics of finite root systems, extended Dynkin diagrams,
//! the Borel-de Siebenthal enumeration of maximal-rank subgroups, and a
//! certificate-producing engine that decides rationality of homogeneous
//! varieties `G/H` from type-level data.
//!
//! Everything is computed over the integers (squared root lengths use exact
//! rationals); there is no floating point anywhere in the crate.

pub mod bds;
pub mod certify;
pub mod rootsys;

pub use bds::{
    enumerate_maximal_rank, extended_diagram, levi_moves, semisimple_moves, BdsMove,
    ExtendedDiagram, MaxRankSubgroup, MoveKind,
};
pub use certify::{
    certify, compute_invariants, tha_proof_trace, validate_certificate, CertificateNode,
    CertifyOptions, Characteristic, GeneralSubgroup, GroupSpec, Premise, PremiseValue,
    QuotientInvariants, RuleOrder, Status, SubgroupSpec, TriState, ValidationReport, Verdict,
};
pub use rootsys::{
    cartan_matrix, generate_roots, group_invariants, parse_type, Family, GroupInvariants,
    RootSystem, RootVector, SemisimpleType, SimpleType,
};

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A spec string did not match the grammar. `offset` is a byte offset
    /// into the original input and `token` is the offending slice.
    #[error("parse error at byte {offset} near {token:?}: {message}")]
    Parse {
        offset: usize,
        token: String,
        message: String,
    },
    /// A group/subgroup description is internally inconsistent.
    #[error("inconsistent specification: {0}")]
    Spec(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, token: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            token: token.into(),
            message: message.into(),
        }
    }

    pub(crate) fn spec(message: impl Into<String>) -> Self {
        Error::Spec(message.into())
    }
}
