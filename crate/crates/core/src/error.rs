use thiserror::Error;

use crate::dual_graph::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{a} is not invertible modulo {n}")]
    NotCoprime { a: u64, n: u64 },

    #[error("bad input: {0}")]
    BadInput(String),

    #[error("{what} is not an integer ({numerator}/{denominator})")]
    NotInteger {
        what: String,
        numerator: i128,
        denominator: i128,
    },

    #[error("resolution chain of ({m1}, {m2}, {n}) is not shape-regular; increase n")]
    ShapeNotRegular { m1: u64, m2: u64, n: u64 },

    #[error("index {index} out of range {min}..={max}")]
    IndexOutOfRange { index: usize, min: usize, max: usize },

    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("zeta^{j} is not a primitive {n}-th root of unity")]
    NotPrimitive { j: u64, n: u64 },

    #[error("character has negative coefficient {coeff} at exponent {exponent}")]
    NegativeCoefficient { exponent: u64, coeff: String },

    #[error("character has degree {found}, expected genus {expected}")]
    WrongDegree { expected: u64, found: String },

    #[error("affine fit failed for rank {rank}: {detail}")]
    FitFailed { rank: usize, detail: String },

    #[error("jump {jump} does not have denominator dividing {denominator}")]
    DenominatorViolation { jump: String, denominator: u64 },

    #[error("unknown fiber type `{0}`")]
    UnknownType(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid graph: {}", join_violations(.0))]
    InvalidGraph(Vec<Violation>),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

fn join_violations(v: &[Violation]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}
