use thiserror::Error;

/// Errors produced by input validation across the crate.
///
/// All numerical routines are total on their validated domains, so every
/// failure mode is a precondition violation of one of the forms below.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("qubit count must be at least 1")]
    EmptySystem,
    #[error("system needs at least {min} qubits, got n={got}")]
    SystemTooSmall { min: u32, got: u32 },
    #[error("excitation count k={k} exceeds qubit count n={n}")]
    ExcitationOutOfRange { n: u32, k: u32 },
    #[error("cut size j={j} exceeds qubit count n={n}")]
    CutOutOfRange { n: u32, j: u32 },
    #[error("Schmidt index q={q} lies outside [{q_min}, {q_max}]")]
    SchmidtIndexOutOfRange { q: u32, q_min: u32, q_max: u32 },
    #[error("base-2 logarithm is defined for positive integers only")]
    LogOfNonPositive,
    #[error("{what} requires an even qubit count, got n={got}")]
    OddQubitCount { what: &'static str, got: u32 },
    #[error("fit over [{lo}, {hi}] has {got} sample points, need at least {need}")]
    FitRangeTooSmall {
        lo: u32,
        hi: u32,
        got: usize,
        need: usize,
    },
    #[error("witness is undefined for the separable Dicke state k={k} of n={n}")]
    SeparableWitness { n: u32, k: u32 },
    #[error("asymmetry amplitude a={0} lies outside [0, 1]")]
    AsymmetryOutOfRange(f64),
    #[error("noise fraction p={0} lies outside [0, 1]")]
    NoiseFractionOutOfRange(f64),
    #[error("n={n} exceeds the state-vector cap n <= {cap}")]
    VectorCapExceeded { n: u32, cap: u32 },
    #[error("block size j={j} exceeds the density-matrix cap j <= {cap}")]
    DensityCapExceeded { j: u32, cap: u32 },
    #[error("qubit subset {reason}")]
    BadQubitSubset { reason: &'static str },
}
