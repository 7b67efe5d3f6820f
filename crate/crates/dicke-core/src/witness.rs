//! Projector-based entanglement witnesses for Dicke states and their
//! robustness against white noise and systematic asymmetry.
//!
//! The witness for the n-qubit Dicke state with k excitations (k taken
//! canonical, 1 <= k <= n/2) is
//!
//! ```text
//! W = ((n-k)/n) 1 - |D><D|,
//! ```
//!
//! where (n-k)/n is the Schmidt probability of the single-qubit cut. For
//! every k < n/2 that is also the largest Schmidt probability over all
//! bipartitions; for balanced states (k = n/2, n >= 4) the (2 | n-2) cut
//! exceeds it, reaching k/(n-1) — see the exhaustive test in this module.
//! A negative expectation value certifies entanglement. Two imperfection channels are modelled: admixture of the
//! maximally mixed state with fraction `p`, and an energy-preserving
//! asymmetry that steers the state toward the product ket |0..01..1> with
//! amplitude `a`. Both appear in closed form, so the detection boundary in
//! the (a, p) plane and its peak are exact up to `f64` rounding.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::analysis::DickeIndex;
use crate::exact::{big_to_f64, binomial};
use crate::Error;

/// One imperfect-preparation configuration: a Dicke index (canonicalized to
/// k <= n/2 on construction), an asymmetry amplitude, and a white-noise
/// fraction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WitnessScenario {
    index: DickeIndex,
    a: f64,
    p: f64,
}

impl WitnessScenario {
    pub fn new(index: DickeIndex, a: f64, p: f64) -> Result<Self, Error> {
        let index = canonical_witness_index(index)?;
        if !(0.0..=1.0).contains(&a) {
            return Err(Error::AsymmetryOutOfRange(a));
        }
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::NoiseFractionOutOfRange(p));
        }
        Ok(Self { index, a, p })
    }

    pub fn index(&self) -> DickeIndex {
        self.index
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn p(&self) -> f64 {
        self.p
    }
}

/// How a separatrix sample was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeparatrixFlag {
    /// The zero-expectation noise fraction lies inside [0, 1].
    Root,
    /// The root is negative; clamped to 0 (no tolerable noise at this a).
    ClampedLow,
    /// The root exceeds 1; clamped to 1.
    ClampedHigh,
    /// The state overlap never exceeds the fully mixed floor, so no noise
    /// fraction yields a zero crossing.
    NoRoot,
}

impl std::fmt::Display for SeparatrixFlag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SeparatrixFlag::Root => "root",
            SeparatrixFlag::ClampedLow => "clamped-low",
            SeparatrixFlag::ClampedHigh => "clamped-high",
            SeparatrixFlag::NoRoot => "no-root",
        })
    }
}

/// One point of the detection boundary: at asymmetry `a`, expectation of the
/// witness crosses zero at noise fraction `p` (clamped to [0, 1]).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeparatrixPoint {
    pub a: f64,
    pub p: f64,
    pub flag: SeparatrixFlag,
}

fn canonical_witness_index(d: DickeIndex) -> Result<DickeIndex, Error> {
    if d.k() == 0 || d.k() == d.n() {
        return Err(Error::SeparableWitness { n: d.n(), k: d.k() });
    }
    Ok(d.canonical())
}

fn pow2_neg(n: u32) -> f64 {
    (-(n as f64)).exp2()
}

/// Squared overlap of the asymmetric state with the Dicke state:
/// B(a) = (sqrt(1 - a^2) + a C(n,k)^{-1/2})^2.
fn dicke_overlap_sq(d: DickeIndex, a: f64) -> f64 {
    let c = big_to_f64(&binomial(d.n() as u64, d.k() as i64));
    let f = (1.0 - a * a).sqrt() + a / c.sqrt();
    f * f
}

/// Witness offset alpha = (n-k)/n: the Schmidt probability of the
/// single-qubit cut (k canonical), which defines this witness family.
/// Exact rational.
///
/// Rejects k = 0 and k = n, whose Dicke states are product states.
pub fn witness_alpha(d: DickeIndex) -> Result<BigRational, Error> {
    let c = canonical_witness_index(d)?;
    Ok(BigRational::new(
        BigInt::from(c.n() - c.k()),
        BigInt::from(c.n()),
    ))
}

/// Largest white-noise fraction at which the witness still detects the pure
/// Dicke state: p_max = k / (n (1 - 2^-n)).
pub fn p_max_white_noise(d: DickeIndex) -> Result<f64, Error> {
    let c = canonical_witness_index(d)?;
    Ok(c.k() as f64 / (c.n() as f64 * (1.0 - pow2_neg(c.n()))))
}

/// Expectation of the witness on the pure asymmetric state:
/// (n-k)/n - B(a). Negative values certify entanglement.
pub fn expectation_asymmetric(d: DickeIndex, a: f64) -> Result<f64, Error> {
    let c = canonical_witness_index(d)?;
    if !(0.0..=1.0).contains(&a) {
        return Err(Error::AsymmetryOutOfRange(a));
    }
    let alpha = (c.n() - c.k()) as f64 / c.n() as f64;
    Ok(alpha - dicke_overlap_sq(c, a))
}

/// Expectation of the witness on the asymmetric state mixed with white
/// noise: (n-k)/n - p 2^-n - (1-p) B(a). Affine in p at fixed a.
pub fn expectation_combined(s: &WitnessScenario) -> f64 {
    let d = s.index();
    let alpha = (d.n() - d.k()) as f64 / d.n() as f64;
    alpha - s.p() * pow2_neg(d.n()) - (1.0 - s.p()) * dicke_overlap_sq(d, s.a())
}

fn separatrix_point(c: DickeIndex, a: f64) -> Result<SeparatrixPoint, Error> {
    if !(0.0..=1.0).contains(&a) {
        return Err(Error::AsymmetryOutOfRange(a));
    }
    let alpha = (c.n() - c.k()) as f64 / c.n() as f64;
    let floor = pow2_neg(c.n());
    let b = dicke_overlap_sq(c, a);
    if b <= floor {
        // cannot happen for a valid index (B(a) >= 1/C(n,k) > 2^-n); kept as
        // a flagged outcome so sweep output stays total
        return Ok(SeparatrixPoint {
            a,
            p: 0.0,
            flag: SeparatrixFlag::NoRoot,
        });
    }
    let p = (b - alpha) / (b - floor);
    let (p, flag) = if p < 0.0 {
        (0.0, SeparatrixFlag::ClampedLow)
    } else if p > 1.0 {
        (1.0, SeparatrixFlag::ClampedHigh)
    } else {
        (p, SeparatrixFlag::Root)
    };
    Ok(SeparatrixPoint { a, p, flag })
}

/// Detection boundary p(a) sampled on the given asymmetry grid. Entanglement
/// is detected below the curve: expectation < 0 exactly when p < p(a).
pub fn separatrix(d: DickeIndex, a_grid: &[f64]) -> Result<Vec<SeparatrixPoint>, Error> {
    let c = canonical_witness_index(d)?;
    a_grid.iter().map(|&a| separatrix_point(c, a)).collect()
}

/// Peak of the detection boundary, in closed form.
///
/// p(a) increases with the overlap B(a), and B is maximized at
/// a* = 1/sqrt(C(n,k) + 1), where B = 1 + 1/C(n,k); substituting gives
/// p* = (1/C(n,k) + k/n) / (1 + 1/C(n,k) - 2^-n). Returns (a*, p*).
pub fn separatrix_peak(d: DickeIndex) -> Result<(f64, f64), Error> {
    let c = canonical_witness_index(d)?;
    let cnk = big_to_f64(&binomial(c.n() as u64, c.k() as i64));
    let a_star = 1.0 / (cnk + 1.0).sqrt();
    let p_star = (1.0 / cnk + c.k() as f64 / c.n() as f64) / (1.0 + 1.0 / cnk - pow2_neg(c.n()));
    Ok((a_star, p_star))
}

/// Exact witness expectation after discarding one qubit of the Dicke state.
///
/// Tracing one qubit of |D(n, k)> leaves the mixture
/// ((n-k)/n) |D(n-1, k)>< | + (k/n) |D(n-1, k-1)>< |; against the
/// (n-1)-qubit witness of the surviving k-excitation component this gives
/// -k/(n(n-1)) (k canonical), which is negative for every 1 <= k <= n-1:
/// one lost qubit never hides the remaining entanglement from the witness.
pub fn traced_witness_value(d: DickeIndex) -> Result<BigRational, Error> {
    if d.n() < 3 {
        return Err(Error::SystemTooSmall { min: 3, got: d.n() });
    }
    let c = canonical_witness_index(d)?;
    let n = c.n() as i64;
    let k = c.k() as i64;
    // witness offset of the (n-1)-qubit witness, then the weight of the
    // projected component of the traced mixture
    let alpha = BigRational::new(BigInt::from(n - 1 - k), BigInt::from(n - 1));
    let projected_weight = BigRational::new(BigInt::from(n - k), BigInt::from(n));
    Ok(alpha - projected_weight)
}
