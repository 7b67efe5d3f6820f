//! Closed-form Schmidt spectra, entanglement entropies, and purities of
//! Dicke-state bipartitions.
//!
//! A Dicke state of `n` qubits with `k` excitations, cut into blocks of `j`
//! and `n - j` qubits, has the exact Schmidt spectrum
//!
//! ```text
//! lambda_q = C(j, q) C(n-j, k-q) / C(n, k),   q = max(0, j+k-n) ..= min(j, k),
//! ```
//!
//! a hypergeometric distribution over the excitation count `q` of the
//! `j`-block. Every quantity in this module is derived from that spectrum:
//! the entropy of entanglement is its Shannon entropy in bits, the purity is
//! the exact rational sum of its squares, and the potential of multipartite
//! entanglement is the purity of the balanced cut. Floats enter only through
//! the documented `f64` projections; each entropy carries a first-order bound
//! on the conversion error it absorbed.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exact::{big_ratio_to_f64, binomial, binomial_row, log2_big};
use crate::Error;

/// The pair (n, k) identifying the Dicke state of n qubits with k
/// excitations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DickeIndex {
    n: u32,
    k: u32,
}

impl DickeIndex {
    /// Requires n >= 1 and 0 <= k <= n.
    pub fn new(n: u32, k: u32) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::EmptySystem);
        }
        if k > n {
            return Err(Error::ExcitationOutOfRange { n, k });
        }
        Ok(Self { n, k })
    }

    pub fn n(self) -> u32 {
        self.n
    }

    pub fn k(self) -> u32 {
        self.k
    }

    /// LOCC-equivalent index with k <= n/2 (k and n-k states are related by
    /// flipping every qubit plus classical communication).
    pub fn canonical(self) -> Self {
        if 2 * self.k > self.n {
            Self {
                n: self.n,
                k: self.n - self.k,
            }
        } else {
            self
        }
    }
}

impl std::fmt::Display for DickeIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "D({}, {})", self.n, self.k)
    }
}

/// A bipartition (j | n-j); by permutation symmetry only the block size
/// matters, never which qubits are in it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cut(pub u32);

impl Cut {
    pub fn j(self) -> u32 {
        self.0
    }
}

/// Exact Schmidt probabilities of one cut, with an `f64` view.
#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtSpectrum {
    q_min: u32,
    q_max: u32,
    probs: Vec<BigRational>,
    probs_f64: Vec<f64>,
}

impl SchmidtSpectrum {
    /// Smallest valid excitation count of the j-block, q' = max(0, j+k-n).
    pub fn q_min(&self) -> u32 {
        self.q_min
    }

    /// Largest valid excitation count of the j-block, q'' = min(j, k).
    pub fn q_max(&self) -> u32 {
        self.q_max
    }

    /// Exact probabilities for q = q' ..= q''; each entry is positive and the
    /// exact sum is 1.
    pub fn probs(&self) -> &[BigRational] {
        &self.probs
    }

    /// Per-term float view of [`Self::probs`].
    pub fn probs_f64(&self) -> &[f64] {
        &self.probs_f64
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Iterate (q, lambda_q).
    pub fn iter(&self) -> impl Iterator<Item = (u32, &BigRational)> {
        (self.q_min..=self.q_max).zip(self.probs.iter())
    }
}

/// An entropy in bits together with a conservative absolute bound on the
/// error absorbed by rational-to-float conversion and summation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyValue {
    pub bits: f64,
    pub abs_error_bound: f64,
}

/// Error bound of one `log2_big` result of magnitude `v`: two ulp.
fn eps_log(v: f64) -> f64 {
    2.0 * f64::EPSILON * v.abs().max(1.0)
}

/// Relative error bound of one rational-to-f64 conversion.
const CONV_EPS: f64 = 4.0 * f64::EPSILON;

/// Exact Schmidt spectrum of the cut (j | n-j).
///
/// Total in k and j: the edge cases j = 0, j = n, k = 0, k = n all come out
/// of the same formula as the single-term spectrum {1}.
pub fn schmidt_spectrum(d: DickeIndex, c: Cut) -> Result<SchmidtSpectrum, Error> {
    let (n, k, j) = (d.n(), d.k(), c.j());
    if j > n {
        return Err(Error::CutOutOfRange { n, j });
    }
    let q_min = (j + k).saturating_sub(n);
    let q_max = j.min(k);
    let c_nk = binomial(n as u64, k as i64);
    let left = binomial_row(j as u64);
    let right = binomial_row((n - j) as u64);
    let len = (q_max - q_min + 1) as usize;
    let mut probs = Vec::with_capacity(len);
    let mut probs_f64 = Vec::with_capacity(len);
    for q in q_min..=q_max {
        let num = &left[q as usize] * &right[(k - q) as usize];
        let lambda = BigRational::new(num, c_nk.clone());
        probs_f64.push(big_ratio_to_f64(lambda.numer(), lambda.denom()));
        probs.push(lambda);
    }
    Ok(SchmidtSpectrum {
        q_min,
        q_max,
        probs,
        probs_f64,
    })
}

/// Shannon entropy in bits of an exact spectrum, with per-term float
/// conversion. log2 of each rational is taken through `log2_big` on its
/// numerator and denominator, so terms keep full accuracy even when the
/// probability itself underflows `f64`.
fn entropy_of_spectrum(spectrum: &SchmidtSpectrum) -> EntropyValue {
    let mut bits = 0.0;
    let mut bound = 0.0;
    for lambda in spectrum.probs() {
        if lambda.is_one() {
            continue;
        }
        let lf = big_ratio_to_f64(lambda.numer(), lambda.denom());
        let log_num = log2_big(lambda.numer()).expect("positive numerator");
        let log_den = log2_big(lambda.denom()).expect("positive denominator");
        let log_lambda = log_num - log_den;
        bits -= lf * log_lambda;
        bound +=
            (log_lambda.abs() + 1.5) * lf * CONV_EPS + lf * (eps_log(log_num) + eps_log(log_den));
    }
    bound += spectrum.len() as f64 * f64::EPSILON * bits.abs();
    EntropyValue {
        bits,
        abs_error_bound: bound,
    }
}

/// Entropy of entanglement S(n, k, j) in bits for the cut (j | n-j).
pub fn entropy(d: DickeIndex, c: Cut) -> Result<EntropyValue, Error> {
    Ok(entropy_of_spectrum(&schmidt_spectrum(d, c)?))
}

/// Entropy of the (1 | n-1) cut, straight from the binary-entropy closed
/// form H(k/n). Agrees with `entropy(d, Cut(1))` to better than 1e-12.
pub fn entropy_single_qubit(d: DickeIndex) -> Result<EntropyValue, Error> {
    if d.n() < 2 {
        return Err(Error::SystemTooSmall { min: 2, got: d.n() });
    }
    let r = d.k() as f64 / d.n() as f64;
    let mut bits = 0.0;
    if r > 0.0 {
        bits -= r * r.log2();
    }
    if r < 1.0 {
        bits -= (1.0 - r) * (1.0 - r).log2();
    }
    Ok(EntropyValue {
        bits,
        abs_error_bound: 8.0 * f64::EPSILON,
    })
}

/// Generic dimension bound: no bipartition of n qubits can carry more than
/// n/2 bits of entanglement.
pub fn entropy_upper_bound(n: u32) -> f64 {
    n as f64 / 2.0
}

/// Maximal entropy over all cuts and excitation numbers at fixed even n,
/// attained at k = j = n/2:
///
/// ```text
/// S_max(n) = log2 C(n, n/2) - (2 / C(n, n/2)) sum_q C(n/2, q)^2 log2 C(n/2, q).
/// ```
///
/// Evaluated with exact binomials and `log2_big`, so it is usable far past
/// the range where C(n, n/2) fits any machine type. This is an independent
/// route from `entropy`; the two agree within their combined error bounds.
pub fn s_max(n: u32) -> Result<EntropyValue, Error> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(Error::OddQubitCount {
            what: "s_max",
            got: n,
        });
    }
    let m = n / 2;
    let c_nm = binomial(n as u64, m as i64);
    let log_c = log2_big(&c_nm).expect("positive binomial");
    let row = binomial_row(m as u64);
    let mut correction = 0.0;
    let mut bound = eps_log(log_c);
    for c in &row {
        if c.is_one() {
            continue; // log2 C = 0
        }
        let weight = big_ratio_to_f64(&(c * c), &c_nm);
        let log_term = log2_big(c).expect("positive binomial");
        correction += weight * 2.0 * log_term;
        bound += (2.0 * log_term + 1.5) * weight * CONV_EPS + 2.0 * weight * eps_log(log_term);
    }
    let bits = log_c - correction;
    bound += row.len() as f64 * f64::EPSILON * bits.abs();
    Ok(EntropyValue {
        bits,
        abs_error_bound: bound,
    })
}

/// Ordinary least squares of s_max(n) against log2(n/2) over even n in
/// [n_lo, n_hi]. Returns (slope, intercept); needs at least five sample
/// points.
pub fn s_max_fit(n_lo: u32, n_hi: u32) -> Result<(f64, f64), Error> {
    const MIN_POINTS: usize = 5;
    if n_lo == 0 || !n_lo.is_multiple_of(2) {
        return Err(Error::OddQubitCount {
            what: "s_max_fit lower bound",
            got: n_lo,
        });
    }
    if !n_hi.is_multiple_of(2) {
        return Err(Error::OddQubitCount {
            what: "s_max_fit upper bound",
            got: n_hi,
        });
    }
    let points: Vec<u32> = if n_hi >= n_lo {
        (n_lo..=n_hi).step_by(2).collect()
    } else {
        Vec::new()
    };
    if points.len() < MIN_POINTS {
        return Err(Error::FitRangeTooSmall {
            lo: n_lo,
            hi: n_hi,
            got: points.len(),
            need: MIN_POINTS,
        });
    }
    let mut sx = 0.0;
    let mut sy = 0.0;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for &n in &points {
        let x = (n as f64 / 2.0).log2();
        let y = s_max(n)?.bits;
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    let len = points.len() as f64;
    let slope = (len * sxy - sx * sy) / (len * sxx - sx * sx);
    let intercept = (sy - slope * sx) / len;
    Ok((slope, intercept))
}

/// Exact purity Tr sigma^2 = sum_q lambda_q^2 of the reduced state of the
/// cut (j | n-j).
///
/// Every probability divides C(n, k), so the squares are summed over the
/// common denominator C(n, k)^2 and reduced once at the end; one gcd per
/// addition would dominate sweeps up to n = 2000.
pub fn purity(d: DickeIndex, c: Cut) -> Result<BigRational, Error> {
    let spectrum = schmidt_spectrum(d, c)?;
    let c_nk = binomial(d.n() as u64, d.k() as i64);
    let common = &c_nk * &c_nk;
    let mut total = num_bigint::BigInt::zero();
    for lambda in spectrum.probs() {
        let scale = &common / (lambda.denom() * lambda.denom());
        total += lambda.numer() * lambda.numer() * scale;
    }
    Ok(BigRational::new(total, common))
}

/// Potential of multipartite entanglement: the average purity over all
/// balanced bipartitions. Every balanced cut of a Dicke state has the same
/// purity by permutation symmetry, so this is the purity of the single cut
/// j = floor(n/2). Lower values mean more multipartite entanglement.
pub fn potential_me(d: DickeIndex) -> Result<BigRational, Error> {
    if d.n() < 2 {
        return Err(Error::SystemTooSmall { min: 2, got: d.n() });
    }
    purity(d, Cut(d.n() / 2))
}

/// Large-n behaviour of the balanced-cut potential at k = n/2:
/// (2/sqrt(pi)) n^(-1/2).
pub fn potential_me_asymptote(n: u32) -> Result<f64, Error> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(Error::OddQubitCount {
            what: "potential_me_asymptote",
            got: n,
        });
    }
    Ok(std::f64::consts::FRAC_2_SQRT_PI / (n as f64).sqrt())
}

/// Entropy log2 C(n, k) of the fully decohered Dicke state: the uniform
/// classical mixture over all microstates with k excitations (Boltzmann
/// entropy with k_B = 1 and base-2 logarithms).
pub fn classical_entropy(d: DickeIndex) -> f64 {
    log2_big(&binomial(d.n() as u64, d.k() as i64)).expect("binomial >= 1")
}
