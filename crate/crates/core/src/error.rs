use thiserror::Error;

use crate::complex::Face;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("face list is empty; the void complex is not representable (use [[]] for the empty complex)")]
    VoidComplex,

    #[error("face #{index} {face:?} repeats vertex {vertex}")]
    DuplicateVertex {
        index: usize,
        face: Vec<u32>,
        vertex: u32,
    },

    #[error("{face} is not a face of the complex")]
    NotAFace { face: Face },

    #[error("dimension {requested} out of range {min}..={max}")]
    DimensionOutOfRange { requested: i64, min: i64, max: i64 },

    #[error("index {index} out of range {min}..={max}")]
    IndexOutOfRange { index: i64, min: i64, max: i64 },

    #[error("complex is not pure")]
    NotPure,

    #[error("{0}")]
    Precondition(String),

    #[error("short h-vector {entries:?} is not realised by any pure complex: f_{j} = {numerator}/{denominator}")]
    NonIntegralFace {
        entries: Vec<String>,
        j: usize,
        numerator: String,
        denominator: usize,
    },

    #[error("cyclic polytope needs n > d >= 2, got d = {d}, n = {n}")]
    InvalidCyclic { d: usize, n: usize },

    #[error("relabelling is not injective: two vertices map to {0}")]
    NonInjectiveRelabel(u32),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("generator spec: {0}")]
    BadSpec(String),

    #[error("embedded triangulation `{name}` failed validation: {reason}")]
    CorruptEmbedded { name: &'static str, reason: String },

    #[error("unknown statement `{0}`")]
    UnknownStatement(String),

    #[error("{path}: {message}")]
    Parse { path: String, message: String },

    #[error("{path}: {message}")]
    Io { path: String, message: String },
}
