//! Brute-force verification engine.
//!
//! Builds full 2^n state vectors of Dicke states, reduces them by direct
//! dense linear algebra, and re-derives every closed form of the crate from
//! nothing but the definition of the state: an equal-amplitude superposition
//! over all fixed-weight bitstrings. Spectra come out of a hand-rolled
//! Jacobi eigensolver so that no code is shared with the analytic side.
//!
//! Scope is deliberately desk-sized: vectors are capped (default n <= 14,
//! 128K amplitudes) and explicit reduced density matrices at j <= 12.
//! Amplitudes are real; Dicke states have non-negative real coefficients.
//!
//! Bit convention: qubit 0 is the most significant bit of the basis index,
//! so "the first j qubits" are the top j bits and the coefficient matrix of
//! a cut is just the amplitude vector reshaped row-major.

mod jacobi;

pub use jacobi::{jacobi_eigh, SquareMatrix};

use crate::analysis::DickeIndex;
use crate::exact::{big_to_f64, binomial};
use crate::Error;

/// Default cap on state-vector size (2^14 amplitudes, about 128 KiB).
pub const DEFAULT_VECTOR_CAP: u32 = 14;
/// Default cap on explicit reduced density matrices (2^12 x 2^12).
pub const DEFAULT_DENSITY_CAP: u32 = 12;
/// verify_block_irrelevance enumerates qubit subsets; costs grow fast.
pub const BLOCK_CHECK_CAP: u32 = 10;
/// Eigenvalues below this are treated as numerical zeros of a Gram matrix.
/// The smallest genuine Schmidt probability at the vector cap is
/// 1/C(14,7), about 2.9e-4, so the gap is enormous.
pub const SPECTRUM_CUTOFF: f64 = 1e-13;
/// Elementwise tolerance for state-vector identity checks.
pub const RECONSTRUCTION_TOL: f64 = 1e-12;

/// Dense 2^n real amplitude vector of a Dicke state.
#[derive(Debug, Clone, PartialEq)]
pub struct DickeVector {
    n: u32,
    amps: Vec<f64>,
}

impl DickeVector {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Amplitudes indexed by basis bitstring (qubit 0 = most significant).
    pub fn amps(&self) -> &[f64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a * a).sum::<f64>().sqrt()
    }

    fn from_amps(n: u32, amps: Vec<f64>) -> Self {
        debug_assert_eq!(amps.len(), 1 << n);
        Self { n, amps }
    }
}

/// The amplitude vector reshaped for a cut (j | n-j): 2^j rows, one per
/// left-block bitstring, 2^(n-j) columns.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl CoefficientMatrix {
    pub fn from_vector(v: &DickeVector, j: u32) -> Result<Self, Error> {
        if j > v.n() {
            return Err(Error::CutOutOfRange { n: v.n(), j });
        }
        Ok(Self {
            rows: 1 << j,
            cols: 1 << (v.n() - j),
            data: v.amps().to_vec(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.cols + col]
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// M M^T: the reduced density matrix of the left block.
    pub fn left_gram(&self) -> SquareMatrix {
        let mut g = SquareMatrix::zeros(self.rows);
        for r in 0..self.rows {
            for s in r..self.rows {
                let mut acc = 0.0;
                for c in 0..self.cols {
                    acc += self.at(r, c) * self.at(s, c);
                }
                g.set(r, s, acc);
                g.set(s, r, acc);
            }
        }
        g
    }

    /// M^T M: the reduced density matrix of the right block.
    pub fn right_gram(&self) -> SquareMatrix {
        let mut g = SquareMatrix::zeros(self.cols);
        for r in 0..self.cols {
            for s in r..self.cols {
                let mut acc = 0.0;
                for row in 0..self.rows {
                    acc += self.at(row, r) * self.at(row, s);
                }
                g.set(r, s, acc);
                g.set(s, r, acc);
            }
        }
        g
    }
}

/// Build the normalized equal-superposition vector over weight-k bitstrings.
pub fn build_dicke(d: DickeIndex, cap: u32) -> Result<DickeVector, Error> {
    if d.n() > cap {
        return Err(Error::VectorCapExceeded { n: d.n(), cap });
    }
    let dim = 1usize << d.n();
    let amp = 1.0 / big_to_f64(&binomial(d.n() as u64, d.k() as i64)).sqrt();
    let mut amps = vec![0.0; dim];
    for (x, slot) in amps.iter_mut().enumerate() {
        if (x as u64).count_ones() == d.k() {
            *slot = amp;
        }
    }
    Ok(DickeVector::from_amps(d.n(), amps))
}

/// Nonzero reduced spectrum of the cut (j | n-j), by direct diagonalization.
///
/// M M^T and M^T M share their nonzero eigenvalues, so the Gram matrix is
/// formed on the smaller side of the cut; this keeps j > n/2 affordable
/// without changing the spectrum. Eigenvalues below [`SPECTRUM_CUTOFF`] are
/// dropped; the rest are sorted descending.
pub fn oracle_spectrum(v: &DickeVector, j: u32) -> Result<Vec<f64>, Error> {
    let m = CoefficientMatrix::from_vector(v, j)?;
    let gram = if m.rows() <= m.cols() {
        m.left_gram()
    } else {
        m.right_gram()
    };
    let (mut vals, _) = jacobi_eigh(&gram);
    vals.retain(|&l| l >= SPECTRUM_CUTOFF);
    vals.sort_by(|a, b| b.partial_cmp(a).unwrap());
    Ok(vals)
}

/// Explicit reduced density matrix M M^T of the first j qubits.
pub fn oracle_reduced_density(v: &DickeVector, j: u32, cap: u32) -> Result<SquareMatrix, Error> {
    if j > v.n() {
        return Err(Error::CutOutOfRange { n: v.n(), j });
    }
    if j > cap {
        return Err(Error::DensityCapExceeded { j, cap });
    }
    Ok(CoefficientMatrix::from_vector(v, j)?.left_gram())
}

/// Check the one-qubit splitting identity elementwise:
///
/// ```text
/// |D(n,k)> = sqrt((n-k)/n) |0>|D(n-1,k)> + sqrt(k/n) |1>|D(n-1,k-1)>,
/// ```
///
/// with components of invalid excitation count absent.
pub fn verify_recurrence(d: DickeIndex, cap: u32) -> Result<bool, Error> {
    if d.n() < 2 {
        return Err(Error::SystemTooSmall { min: 2, got: d.n() });
    }
    let v = build_dicke(d, cap)?;
    let (n, k) = (d.n(), d.k());
    let half = 1usize << (n - 1);
    let w0 = ((n - k) as f64 / n as f64).sqrt();
    let w1 = (k as f64 / n as f64).sqrt();
    let upper = if k < n {
        Some(build_dicke(DickeIndex::new(n - 1, k)?, cap)?)
    } else {
        None
    };
    let lower = if k >= 1 {
        Some(build_dicke(DickeIndex::new(n - 1, k - 1)?, cap)?)
    } else {
        None
    };
    for x in 0..half {
        let expect0 = upper.as_ref().map_or(0.0, |u| w0 * u.amps()[x]);
        let expect1 = lower.as_ref().map_or(0.0, |l| w1 * l.amps()[x]);
        if (v.amps()[x] - expect0).abs() > RECONSTRUCTION_TOL
            || (v.amps()[half + x] - expect1).abs() > RECONSTRUCTION_TOL
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// f64 factorial, exact for n <= 14.
fn fact_f64(n: u32) -> f64 {
    (2..=n as u64).map(|i| i as f64).product()
}

/// Rebuild the state from the general Schmidt decomposition of the cut
/// (j | n-j) and compare elementwise against the direct construction. The
/// coefficients are evaluated from their factorial closed form
///
/// ```text
/// sqrt(n!) [C(n,k) C(n,j)]^{-1/2} / sqrt(q! (j-q)! (k-q)! (n-k-j+q)!)
/// ```
///
/// independently of the crate's exact-rational path. A passing run over all
/// (n, k, j) is the numerical counterpart of the inductive proof of the
/// decomposition, covering all four of its case splits.
pub fn verify_general_decomposition(d: DickeIndex, j: u32, cap: u32) -> Result<bool, Error> {
    let v = build_dicke(d, cap)?;
    let (n, k) = (d.n(), d.k());
    if j > n {
        return Err(Error::CutOutOfRange { n, j });
    }
    let q_min = (j + k).saturating_sub(n);
    let q_max = j.min(k);
    let right_bits = n - j;
    let mut rebuilt = vec![0.0; 1 << n];
    for q in q_min..=q_max {
        let mut lambda = fact_f64(n);
        for divisor in [
            big_to_f64(&binomial(n as u64, k as i64)),
            big_to_f64(&binomial(n as u64, j as i64)),
            fact_f64(q),
            fact_f64(j - q),
            fact_f64(k - q),
            fact_f64(n + q - k - j),
        ] {
            lambda /= divisor;
        }
        let coeff = lambda.sqrt();
        let left_amp = 1.0 / big_to_f64(&binomial(j as u64, q as i64)).sqrt();
        let right_amp = 1.0 / big_to_f64(&binomial(right_bits as u64, (k - q) as i64)).sqrt();
        for left in 0..(1u32 << j) {
            if left.count_ones() != q {
                continue;
            }
            for right in 0..(1u32 << right_bits) {
                if right.count_ones() != k - q {
                    continue;
                }
                let index = ((left as usize) << right_bits) | right as usize;
                rebuilt[index] += coeff * left_amp * right_amp;
            }
        }
    }
    Ok(v.amps()
        .iter()
        .zip(&rebuilt)
        .all(|(a, b)| (a - b).abs() <= RECONSTRUCTION_TOL))
}

/// Check that the reduced spectrum over an arbitrary (possibly
/// non-contiguous) qubit subset matches the spectrum of the first
/// |subset| qubits: which qubits form a block never matters.
///
/// The subset is moved to the front by explicitly permuting the raw
/// amplitude vector, then both sides go through the same Gram route.
pub fn verify_block_irrelevance(d: DickeIndex, subset: &[u32]) -> Result<bool, Error> {
    if d.n() > BLOCK_CHECK_CAP {
        return Err(Error::VectorCapExceeded {
            n: d.n(),
            cap: BLOCK_CHECK_CAP,
        });
    }
    let n = d.n();
    if subset.iter().any(|&q| q >= n) {
        return Err(Error::BadQubitSubset {
            reason: "contains an index outside the system",
        });
    }
    let mut seen = vec![false; n as usize];
    for &q in subset {
        if seen[q as usize] {
            return Err(Error::BadQubitSubset {
                reason: "contains a repeated index",
            });
        }
        seen[q as usize] = true;
    }
    let v = build_dicke(d, BLOCK_CHECK_CAP)?;
    // permutation: subset first (in given order), the rest in ascending order
    let mut order: Vec<u32> = subset.to_vec();
    order.extend((0..n).filter(|q| !seen[*q as usize]));
    let mut permuted = vec![0.0; 1 << n];
    for (x, &amp) in v.amps().iter().enumerate() {
        let mut y = 0usize;
        for (new_pos, &old_pos) in order.iter().enumerate() {
            let bit = (x >> (n - 1 - old_pos)) & 1;
            y |= bit << (n as usize - 1 - new_pos);
        }
        permuted[y] = amp;
    }
    let permuted = DickeVector::from_amps(n, permuted);
    let j = subset.len() as u32;
    let moved = oracle_spectrum(&permuted, j)?;
    let front = oracle_spectrum(&v, j)?;
    Ok(moved.len() == front.len()
        && moved
            .iter()
            .zip(&front)
            .all(|(a, b)| (a - b).abs() <= 1e-10))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{entropy, purity, schmidt_spectrum, Cut};
    use crate::exact::rational_to_f64;
    use rand::rngs::StdRng;
    use rand::{seq::SliceRandom, Rng, SeedableRng};

    fn di(n: u32, k: u32) -> DickeIndex {
        DickeIndex::new(n, k).unwrap()
    }

    fn assert_close(got: &[f64], want: &[f64]) {
        assert_eq!(got.len(), want.len());
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() < 1e-14, "{got:?} vs {want:?}");
        }
    }

    #[test]
    fn known_small_vectors() {
        let bell = build_dicke(di(2, 1), DEFAULT_VECTOR_CAP).unwrap();
        let r = 0.5f64.sqrt();
        assert_close(bell.amps(), &[0.0, r, r, 0.0]);

        let w3 = build_dicke(di(3, 1), DEFAULT_VECTOR_CAP).unwrap();
        let t = (1.0 / 3.0f64).sqrt();
        assert_close(w3.amps(), &[0.0, t, t, 0.0, t, 0.0, 0.0, 0.0]);

        let ground = build_dicke(di(1, 0), DEFAULT_VECTOR_CAP).unwrap();
        assert_eq!(ground.amps(), &[1.0, 0.0]);
    }

    #[test]
    fn vectors_are_normalized() {
        for n in 1..=12u32 {
            for k in 0..=n {
                let v = build_dicke(di(n, k), DEFAULT_VECTOR_CAP).unwrap();
                assert!((v.norm() - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            build_dicke(di(15, 2), 14),
            Err(Error::VectorCapExceeded { n: 15, cap: 14 })
        );
        assert!(build_dicke(di(15, 2), 15).is_ok());
    }

    #[test]
    fn coefficient_matrix_shape_and_norm() {
        let v = build_dicke(di(6, 2), DEFAULT_VECTOR_CAP).unwrap();
        let m = CoefficientMatrix::from_vector(&v, 2).unwrap();
        assert_eq!((m.rows(), m.cols()), (4, 16));
        assert!((m.frobenius_norm() - 1.0).abs() < 1e-12);
        assert!(matches!(
            CoefficientMatrix::from_vector(&v, 7),
            Err(Error::CutOutOfRange { .. })
        ));
    }

    #[test]
    fn bell_state_oracle_spectrum() {
        let v = build_dicke(di(2, 1), DEFAULT_VECTOR_CAP).unwrap();
        let eigs = oracle_spectrum(&v, 1).unwrap();
        assert_eq!(eigs.len(), 2);
        assert!((eigs[0] - 0.5).abs() < 1e-12);
        assert!((eigs[1] - 0.5).abs() < 1e-12);
    }

    #[test]
    fn empty_block_spectrum_is_trivial() {
        let v = build_dicke(di(5, 2), DEFAULT_VECTOR_CAP).unwrap();
        let eigs = oracle_spectrum(&v, 0).unwrap();
        assert_eq!(eigs.len(), 1);
        assert!((eigs[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn four_qubit_balanced_oracle_spectrum() {
        let v = build_dicke(di(4, 2), DEFAULT_VECTOR_CAP).unwrap();
        let eigs = oracle_spectrum(&v, 2).unwrap();
        let expected = [2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0];
        assert_eq!(eigs.len(), 3);
        for (got, want) in eigs.iter().zip(expected) {
            assert!((got - want).abs() < 1e-10);
        }
    }

    #[test]
    fn oracle_agrees_with_closed_form_spectra() {
        for n in 1..=10u32 {
            for k in 0..=n {
                let v = build_dicke(di(n, k), DEFAULT_VECTOR_CAP).unwrap();
                for j in 0..=n {
                    let oracle = oracle_spectrum(&v, j).unwrap();
                    let analytic = schmidt_spectrum(di(n, k), Cut(j)).unwrap();
                    let mut closed: Vec<f64> = analytic.probs_f64().to_vec();
                    closed.sort_by(|a, b| b.partial_cmp(a).unwrap());
                    assert_eq!(oracle.len(), closed.len(), "n={n} k={k} j={j}");
                    for (o, c) in oracle.iter().zip(&closed) {
                        assert!((o - c).abs() < 1e-10, "n={n} k={k} j={j}");
                    }
                    // purity and entropy along the same sweep
                    let oracle_purity: f64 = oracle.iter().map(|l| l * l).sum();
                    let exact_purity = rational_to_f64(&purity(di(n, k), Cut(j)).unwrap());
                    assert!((oracle_purity - exact_purity).abs() < 1e-10);
                    let oracle_entropy: f64 = -oracle.iter().map(|l| l * l.log2()).sum::<f64>();
                    let e = entropy(di(n, k), Cut(j)).unwrap();
                    assert!(
                        (oracle_entropy - e.bits).abs() < e.abs_error_bound + 1e-9,
                        "n={n} k={k} j={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn recurrence_holds_through_the_cap() {
        for n in 2..=12u32 {
            for k in 0..=n {
                assert!(
                    verify_recurrence(di(n, k), DEFAULT_VECTOR_CAP).unwrap(),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn general_decomposition_holds_through_the_cap() {
        let mut splits = [false; 4];
        for n in 1..=12u32 {
            for k in 0..=n {
                for j in 0..=n {
                    assert!(
                        verify_general_decomposition(di(n, k), j, DEFAULT_VECTOR_CAP).unwrap(),
                        "n={n} k={k} j={j}"
                    );
                    let split = ((j <= k) as usize) | ((((j + k) >= n) as usize) << 1);
                    splits[split] = true;
                }
            }
        }
        assert_eq!(splits, [true; 4], "all four case splits exercised");
    }

    #[test]
    fn block_choice_is_irrelevant() {
        assert!(verify_block_irrelevance(di(4, 2), &[0, 3]).unwrap());
        assert!(verify_block_irrelevance(di(6, 2), &[1, 3, 5]).unwrap());
        assert!(verify_block_irrelevance(di(5, 3), &[0, 1]).unwrap());
        let mut rng = StdRng::seed_from_u64(1234);
        for n in 2..=9u32 {
            let k = rng.gen_range(0..=n);
            let size = rng.gen_range(1..n) as usize;
            let mut qubits: Vec<u32> = (0..n).collect();
            qubits.shuffle(&mut rng);
            qubits.truncate(size);
            assert!(
                verify_block_irrelevance(di(n, k), &qubits).unwrap(),
                "n={n} k={k} subset={qubits:?}"
            );
        }
    }

    #[test]
    fn block_irrelevance_rejects_bad_subsets() {
        assert!(matches!(
            verify_block_irrelevance(di(4, 2), &[0, 4]),
            Err(Error::BadQubitSubset { .. })
        ));
        assert!(matches!(
            verify_block_irrelevance(di(4, 2), &[1, 1]),
            Err(Error::BadQubitSubset { .. })
        ));
        assert!(matches!(
            verify_block_irrelevance(di(11, 2), &[0]),
            Err(Error::VectorCapExceeded { .. })
        ));
    }

    #[test]
    fn reduced_density_of_bell_state_is_maximally_mixed() {
        let v = build_dicke(di(2, 1), DEFAULT_VECTOR_CAP).unwrap();
        let rho = oracle_reduced_density(&v, 1, DEFAULT_DENSITY_CAP).unwrap();
        assert!((rho.at(0, 0) - 0.5).abs() < 1e-14);
        assert!((rho.at(1, 1) - 0.5).abs() < 1e-14);
        assert!(rho.at(0, 1).abs() < 1e-14);
    }

    #[test]
    fn reduced_density_eigenvector_is_a_dicke_state() {
        // the 2/3 eigenvalue of the (4,2) balanced cut carries |D(2,1)>:
        // equal weight on bitstrings 01 and 10
        let v = build_dicke(di(4, 2), DEFAULT_VECTOR_CAP).unwrap();
        let rho = oracle_reduced_density(&v, 2, DEFAULT_DENSITY_CAP).unwrap();
        assert!((rho.trace() - 1.0).abs() < 1e-12);
        let (vals, vecs) = jacobi_eigh(&rho);
        let top = vals
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.partial_cmp(b.1).unwrap())
            .map(|(i, _)| i)
            .unwrap();
        assert!((vals[top] - 2.0 / 3.0).abs() < 1e-12);
        let col: Vec<f64> = (0..4).map(|r| vecs.at(r, top)).collect();
        assert!(col[0].abs() < 1e-10 && col[3].abs() < 1e-10);
        assert!((col[1].abs() - 0.5f64.sqrt()).abs() < 1e-10);
        assert!((col[1] - col[2]).abs() < 1e-10);
    }

    #[test]
    fn reduced_density_weights_match_the_balanced_mixture() {
        // sigma_R of an even split is diagonal in the Dicke basis of the
        // half-system with weights C(n/2,k-q) C(n/2,q) / C(n,k)
        for (n, k) in [(6u32, 2u32), (8, 3), (8, 4)] {
            let m = n / 2;
            let v = build_dicke(di(n, k), DEFAULT_VECTOR_CAP).unwrap();
            let rho = oracle_reduced_density(&v, m, DEFAULT_DENSITY_CAP).unwrap();
            assert!((rho.trace() - 1.0).abs() < 1e-12);
            let c_nk = big_to_f64(&binomial(n as u64, k as i64));
            for q in 0..=k.min(m) {
                let w = build_dicke(di(m, q), DEFAULT_VECTOR_CAP).unwrap();
                let mut quad = 0.0;
                for r in 0..(1usize << m) {
                    for s in 0..(1usize << m) {
                        quad += w.amps()[r] * rho.at(r, s) * w.amps()[s];
                    }
                }
                let expected = big_to_f64(&binomial(m as u64, (k - q) as i64))
                    * big_to_f64(&binomial(m as u64, q as i64))
                    / c_nk;
                assert!((quad - expected).abs() < 1e-12, "n={n} k={k} q={q}");
            }
        }
    }

    #[test]
    fn density_cap_is_enforced() {
        let v = build_dicke(di(14, 7), DEFAULT_VECTOR_CAP).unwrap();
        assert!(matches!(
            oracle_reduced_density(&v, 13, 12),
            Err(Error::DensityCapExceeded { j: 13, cap: 12 })
        ));
    }

    #[test]
    fn eigenvalue_count_matches_the_schmidt_rank() {
        for n in 1..=10u32 {
            for k in 0..=n {
                let v = build_dicke(di(n, k), DEFAULT_VECTOR_CAP).unwrap();
                for j in 0..=n {
                    let q_min = (j + k).saturating_sub(n);
                    let q_max = j.min(k);
                    let rank = (q_max - q_min + 1) as usize;
                    assert_eq!(
                        oracle_spectrum(&v, j).unwrap().len(),
                        rank,
                        "n={n} k={k} j={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn traced_witness_cross_check() {
        // discard the last qubit, take the expectation of the surviving
        // witness numerically, compare with the exact closed form; the
        // traced operation works on the canonical excitation, which is how
        // traced_witness_value treats every input (k and n-k states are
        // unitarily related by a global bit flip)
        use crate::witness::traced_witness_value;
        for n in 3..=10u32 {
            for k in 1..n {
                let kc = k.min(n - k);
                let v = build_dicke(di(n, kc), DEFAULT_VECTOR_CAP).unwrap();
                let rho = oracle_reduced_density(&v, n - 1, DEFAULT_DENSITY_CAP).unwrap();
                let witness_state = build_dicke(di(n - 1, kc), DEFAULT_VECTOR_CAP).unwrap();
                let alpha = (n - 1 - kc) as f64 / (n - 1) as f64;
                let mut quad = 0.0;
                for r in 0..(1usize << (n - 1)) {
                    if witness_state.amps()[r] == 0.0 {
                        continue;
                    }
                    for s in 0..(1usize << (n - 1)) {
                        quad += witness_state.amps()[r] * rho.at(r, s) * witness_state.amps()[s];
                    }
                }
                let numeric = alpha * rho.trace() - quad;
                let exact = rational_to_f64(&traced_witness_value(di(n, k)).unwrap());
                assert!(
                    (numeric - exact).abs() < 1e-12,
                    "n={n} k={k}: {numeric} vs {exact}"
                );
                assert!(numeric < 0.0);
            }
        }
    }
}
