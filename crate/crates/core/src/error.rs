//! Error types shared across the crate.

use thiserror::Error;

use crate::multipartition::Multipartition;

#[derive(Debug, Error)]
pub enum CombinatoricsError {
    #[error("parts are not weakly decreasing: {parts:?}")]
    NotWeaklyDecreasing { parts: Vec<u32> },
    #[error("zero part in partition: {parts:?}")]
    ZeroPart { parts: Vec<u32> },
    #[error("cell ({row},{col}) is not addable")]
    NotAddable { row: u32, col: u32 },
    #[error("cell ({row},{col}) is not removable")]
    NotRemovable { row: u32, col: u32 },
    #[error("component index {component} out of range for m={m}")]
    ComponentOutOfRange { component: usize, m: usize },
    #[error("dominance undefined: sizes {left} vs {right} differ")]
    SizeMismatch { left: u32, right: u32 },
    #[error("dominance undefined: component counts {left} vs {right} differ")]
    ComponentCountMismatch { left: usize, right: usize },
    #[error("multicharge needs e >= 2, got {e}")]
    QuantumCharacteristicTooSmall { e: usize },
    #[error("multicharge needs at least one charge entry")]
    EmptyCharge,
    #[error("multipartition {mp} has {found} components, charge expects {expected}")]
    WrongComponentCount {
        mp: Multipartition,
        found: usize,
        expected: usize,
    },
}

#[derive(Debug, Error)]
pub enum LaurentError {
    #[error("division of Laurent polynomials is not exact")]
    InexactDivision,
    #[error("division by zero Laurent polynomial")]
    DivisionByZero,
}

#[derive(Debug, Error)]
pub enum CrystalError {
    #[error("crystal generation exceeded the vertex cap of {cap}")]
    VertexCapExceeded { cap: usize },
    #[error("multipartition {mp} is not a vertex of the generated crystal")]
    NotAVertex { mp: Multipartition },
}

#[derive(Debug, Error)]
pub enum FreudenthalError {
    #[error("weight depth {depth} exceeds the cap of {cap}")]
    DepthCapExceeded { depth: u64, cap: u64 },
    #[error("weight does not lie in Lambda minus the root cone of this charge")]
    ForeignWeight,
    #[error("Freudenthal recursion hit a zero denominator with nonzero numerator at {beta:?}")]
    SingularStep { beta: Vec<i64> },
    #[error("Freudenthal numerator not divisible by denominator at {beta:?}")]
    InexactStep { beta: Vec<i64> },
}

#[derive(Debug, Error)]
pub enum FockError {
    #[error("multipartition {mp} has the wrong component count for this charge")]
    InvalidBasisLabel { mp: Multipartition },
    #[error("vectors live over different multicharges")]
    ChargeMismatch,
    #[error("divided power is not integral: coefficient of {mp} not divisible by [{k}]!")]
    InexactDividedPower { mp: Multipartition, k: u32 },
}

#[derive(Debug, Error)]
pub enum CanonicalError {
    #[error("{mp} is not a Kleshchev multipartition for this charge")]
    NotKleshchev { mp: Multipartition },
    #[error("monomial vector for {mp} has leading coefficient {found}, expected 1")]
    LeadingCoefficient { mp: Multipartition, found: String },
    #[error("elimination for {label} needs a correction at {offender}, which is not in the crystal")]
    OffenderOutsideCrystal {
        label: Multipartition,
        offender: Multipartition,
    },
    #[error(
        "elimination for {label} needs {offender}, whose basis element is not yet available \
         in the dominance-descending pass"
    )]
    OffenderNotComputed {
        label: Multipartition,
        offender: Multipartition,
    },
    #[error("elimination for {label} exceeded the iteration cap of {cap}")]
    NonTermination { label: Multipartition, cap: usize },
    #[error("vector is not in the span of the canonical basis; residual starts at {at}")]
    Residual { at: Multipartition },
    #[error("no canonical basis available for size {n}")]
    MissingRank { n: u32 },
    #[error("vector is not homogeneous; expansion needs a single size")]
    Inhomogeneous,
    #[error(transparent)]
    Fock(#[from] FockError),
}

#[derive(Debug, Error)]
pub enum BranchError {
    #[error("{mp} is not a column of the decomposition matrix")]
    UnknownSimple { mp: Multipartition },
    #[error("composition multiplicity of {factor} in e_{i}[D^{lambda}] is negative: {value}")]
    NegativeMultiplicity {
        lambda: Multipartition,
        i: usize,
        factor: Multipartition,
        value: i64,
    },
    #[error("dim D^{mp} came out nonpositive")]
    NonpositiveDimension { mp: Multipartition },
    #[error(transparent)]
    Canonical(#[from] CanonicalError),
}
