//! Exact entanglement analysis of Dicke states.
//!
//! A Dicke state of `n` qubits with `k` excitations is the equal-amplitude
//! superposition of every computational basis state with exactly `k` ones.
//! Its permutation symmetry makes the Schmidt decomposition of *every*
//! bipartition available in closed form, and this crate works those forms
//! out in exact rational arithmetic:
//!
//! - [`analysis`]: Schmidt spectra, entanglement entropies, the maximal
//!   entropy at fixed system size, balanced-cut purities and the potential
//!   of multipartite entanglement, and the classical (fully decohered)
//!   comparison.
//! - [`witness`]: projector witnesses, their tolerance to white noise and
//!   systematic asymmetry, the detection boundary in the (a, p) plane, and
//!   the expectation left after discarding a qubit.
//! - [`oracle`]: a brute-force engine that rebuilds everything from dense
//!   2^n state vectors and a self-contained Jacobi eigensolver, used to
//!   cross-check every closed form at small n.
//! - [`exact`]: the underlying big-integer combinatorics, including base-2
//!   logarithms of integers with thousands of bits.
//!
//! Exact quantities are [`BigRational`]s; entropies are `f64` bits paired
//! with a bound on the conversion error ([`EntropyValue`]).
//!
//! ```
//! use dicke_core::{analysis, Cut, DickeIndex};
//!
//! let state = DickeIndex::new(4, 2)?;
//! let spectrum = analysis::schmidt_spectrum(state, Cut(2))?;
//! let probs: Vec<String> = spectrum.probs().iter().map(|p| p.to_string()).collect();
//! assert_eq!(probs, ["1/6", "2/3", "1/6"]);
//!
//! let s = analysis::entropy(state, Cut(2))?;
//! assert!((s.bits - 1.2516291673878228).abs() < 1e-12);
//! # Ok::<(), dicke_core::Error>(())
//! ```

pub mod analysis;
pub mod exact;
pub mod oracle;
pub mod witness;

mod error;

pub use analysis::{Cut, DickeIndex, EntropyValue, SchmidtSpectrum};
pub use error::Error;
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use oracle::{CoefficientMatrix, DickeVector, SquareMatrix};
pub use witness::{SeparatrixFlag, SeparatrixPoint, WitnessScenario};
