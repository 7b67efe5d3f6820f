//! Arbitrary-precision combinatorial primitives.
//!
//! Everything downstream reduces to three ingredients: exact binomial
//! coefficients, exact rationals built from them, and accurate base-2
//! logarithms of integers far too large for `f64`. All arithmetic here is
//! exact; floats only appear at the very end, when a `BigInt` or
//! `BigRational` is projected down to `f64` for display or for entropy
//! evaluation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Error;

/// Exact factorial n!.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Exact binomial coefficient C(n, k).
///
/// Total function: returns 0 for k < 0 or k > n. Uses the multiplicative
/// formula with stepwise exact division (every partial product is itself a
/// binomial coefficient), which keeps intermediates near the size of the
/// result even for n around 2000.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}

/// Full Pascal row [C(m, 0), C(m, 1), ..., C(m, m)].
///
/// Built by the exact recurrence C(m, q+1) = C(m, q) (m-q)/(q+1); one row
/// costs O(m) big-integer steps, which matters in sweeps up to m = 1000.
pub fn binomial_row(m: u64) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(m as usize + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for q in 0..m {
        c = c * BigInt::from(m - q) / BigInt::from(q + 1);
        row.push(c.clone());
    }
    row
}

/// Base-2 logarithm of a positive big integer.
///
/// Computed from the bit length and the leading 53 mantissa bits, never by
/// down-converting the whole integer, so it stays accurate for inputs with
/// thousands of bits. The result is within a couple of ulp of log2(x); note
/// that for magnitudes around 2000 one ulp of the *result* is about 2^-42,
/// which is the representable limit of `f64` itself. Exact on powers of two.
pub fn log2_big(x: &BigInt) -> Result<f64, Error> {
    if !x.is_positive() {
        return Err(Error::LogOfNonPositive);
    }
    let bits = x.bits(); // index of the highest set bit, plus one
    let mantissa_bits = bits.min(53);
    let top = if bits > 53 {
        x >> (bits - 53)
    } else {
        x.clone()
    };
    let m = top.to_f64().expect("at most 53 bits");
    // normalize the kept bits into [1, 2) so the libm log2 call works where
    // its absolute error is smallest
    let f = m / 2f64.powi(mantissa_bits as i32 - 1);
    Ok((bits - 1) as f64 + f.log2())
}

/// Round num/den (den > 0) to the nearest representable `f64`.
///
/// Works for operands of any size: the quotient is formed with roughly 80
/// significant bits by exact shifted integer division and only then rounded,
/// so ratios like C(1000,500)^4 / C(2000,1000)^2 come out correct to the last
/// ulp. Values below the `f64` range round to zero, values above it to
/// infinity.
pub fn big_ratio_to_f64(num: &BigInt, den: &BigInt) -> f64 {
    debug_assert!(den.is_positive());
    if num.is_zero() {
        return 0.0;
    }
    let negative = num.is_negative();
    let num = num.abs();
    let nb = num.bits() as i64;
    let db = den.bits() as i64;
    let shift = 80 - (nb - db);
    let q = if shift >= 0 {
        (num << shift as u64) / den
    } else {
        num / (den << (-shift) as u64)
    };
    let q = q.to_f64().expect("quotient has about 80 bits");
    let v = ldexp(q, -shift);
    if negative {
        -v
    } else {
        v
    }
}

/// `f64` view of an exact rational; see [`big_ratio_to_f64`].
pub fn rational_to_f64(r: &BigRational) -> f64 {
    big_ratio_to_f64(r.numer(), r.denom())
}

/// `f64` view of a big integer (infinity when out of range).
pub fn big_to_f64(x: &BigInt) -> f64 {
    big_ratio_to_f64(x, &BigInt::one())
}

/// x * 2^e with clamping to the `f64` range.
fn ldexp(x: f64, e: i64) -> f64 {
    let mut v = x;
    let mut e = e;
    while e > 1023 {
        v *= 2f64.powi(1023);
        e -= 1023;
        if v.is_infinite() {
            return v;
        }
    }
    while e < -1023 {
        v *= 2f64.powi(-1023);
        e += 1023;
        if v == 0.0 {
            return v;
        }
    }
    v * 2f64.powi(e as i32)
}

/// Exact Schmidt probability of a Dicke-state cut.
///
/// For the state of n qubits with k excitations split as (j | n-j), the
/// weight of the component with q excitations in the j-block is the
/// hypergeometric mass
///
/// ```text
/// lambda_q = C(j, q) C(n-j, k-q) / C(n, k),
/// ```
///
/// equal to the factorial form (n-j)!(n-k)! q! / ((n-k-j+q)! n!) C(j,q) C(k,q);
/// the identity is pinned by tests. Valid q run over
/// [max(0, j+k-n), min(j, k)]; anything outside is rejected.
pub fn hypergeom_weight(n: u32, k: u32, j: u32, q: u32) -> Result<BigRational, Error> {
    if k > n {
        return Err(Error::ExcitationOutOfRange { n, k });
    }
    if j > n {
        return Err(Error::CutOutOfRange { n, j });
    }
    let q_min = (j + k).saturating_sub(n);
    let q_max = j.min(k);
    if q < q_min || q > q_max {
        return Err(Error::SchmidtIndexOutOfRange { q, q_min, q_max });
    }
    let num = binomial(j as u64, q as i64) * binomial((n - j) as u64, (k - q) as i64);
    Ok(BigRational::new(num, binomial(n as u64, k as i64)))
}
