//! Certified sign of `Σ c_k cos(2πk/N)` by rational interval enclosure.
//!
//! Every bound here is an exact rational; endpoints are rounded outward to
//! dyadic grids so numerators stay bounded as precision grows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Rational, Sign};

#[derive(Clone, Debug)]
struct Interval {
    lo: Rational,
    hi: Rational,
}

fn pow2(bits: u32) -> BigInt {
    BigInt::one() << bits as usize
}

fn round_down(x: &Rational, bits: u32) -> Rational {
    let scale = pow2(bits);
    let scaled = x * Rational::from_integer(scale.clone());
    let num = scaled.numer().div_floor(scaled.denom());
    Rational::new(num, scale)
}

fn round_up(x: &Rational, bits: u32) -> Rational {
    let scale = pow2(bits);
    let scaled = x * Rational::from_integer(scale.clone());
    let num = scaled.numer().div_ceil(scaled.denom());
    Rational::new(num, scale)
}

fn widen(iv: Interval, bits: u32) -> Interval {
    Interval {
        lo: round_down(&iv.lo, bits),
        hi: round_up(&iv.hi, bits),
    }
}

/// Enclosure of `atan(1/x)` from the alternating Taylor series.
fn atan_inv(x: u32, bits: u32) -> Interval {
    let x = Rational::from_integer(BigInt::from(x));
    let x2 = &x * &x;
    let eps = Rational::new(BigInt::one(), pow2(bits + 4));
    let mut power = Rational::one() / &x; // x^{-(2k+1)}
    let mut sum = Rational::zero();
    let mut k: u64 = 0;
    loop {
        let term = &power / Rational::from_integer(BigInt::from(2 * k + 1));
        let next = if k % 2 == 0 { &sum + &term } else { &sum - &term };
        if term < eps {
            // Consecutive partial sums bracket the limit.
            let (lo, hi) = if sum < next { (sum, next) } else { (next, sum) };
            return Interval { lo, hi };
        }
        sum = next;
        power = power / &x2;
        k += 1;
    }
}

/// Machin: π = 16·atan(1/5) − 4·atan(1/239).
fn pi_enclosure(bits: u32) -> Interval {
    let a = atan_inv(5, bits + 6);
    let b = atan_inv(239, bits + 6);
    let sixteen = Rational::from_integer(BigInt::from(16));
    let four = Rational::from_integer(BigInt::from(4));
    widen(
        Interval {
            lo: &sixteen * &a.lo - &four * &b.hi,
            hi: &sixteen * &a.hi - &four * &b.lo,
        },
        bits + 4,
    )
}

/// Enclosure of cos(2πj/n) for `0 <= j <= n/2`, so the angle lies in [0, π].
fn cos_enclosure(j: u32, n: u32, pi: &Interval, bits: u32) -> Interval {
    let scale = Rational::new(BigInt::from(2 * j), BigInt::from(n));
    let theta_lo = &scale * &pi.lo;
    let theta_hi = &scale * &pi.hi;
    let mid = round_down(&((&theta_lo + &theta_hi) / Rational::from_integer(BigInt::from(2))), bits + 8);
    let rad = std::cmp::max((&theta_hi - &mid).abs(), (&mid - &theta_lo).abs());

    let eps = Rational::new(BigInt::one(), pow2(bits + 8));
    let mid2 = &mid * &mid;
    let mut term = Rational::one();
    let mut sum = Rational::zero();
    let mut n_term: u64 = 0;
    // Terms decrease from index 1 onward since mid <= π < sqrt(12).
    let tail = loop {
        if n_term >= 2 && term.abs() < eps {
            break term.abs();
        }
        sum += &term;
        let denom = Rational::from_integer(BigInt::from((2 * n_term + 1) * (2 * n_term + 2)));
        term = -(&term * &mid2) / denom;
        n_term += 1;
        // Keep the running term on a dyadic grid; the rounding is absorbed
        // by bumping the tail bound.
        if n_term % 4 == 0 {
            term = round_down(&term, bits + 16);
        }
    };
    // Each rounding perturbs the remaining tail by at most a geometric
    // factor (< 6 for ratio <= π²/12) of the rounding step.
    let slack = tail + rad + Rational::new(BigInt::from(16 * n_term), pow2(bits + 16));
    widen(
        Interval {
            lo: &sum - &slack,
            hi: &sum + &slack,
        },
        bits + 4,
    )
}

/// Sign from a double-precision evaluation, accepted only when the value
/// clears a conservative error bound.
fn float_sign(coeffs: &[Rational], conductor: u32) -> Option<Sign> {
    let mut value = 0.0f64;
    let mut mass = 0.0f64;
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let cf = c.to_f64()?;
        if !cf.is_finite() {
            return None;
        }
        let angle = 2.0 * std::f64::consts::PI * (k as f64) / f64::from(conductor);
        value += cf * angle.cos();
        mass += cf.abs();
    }
    let bound = mass * 1e-12 + 1e-300;
    if value > bound {
        Some(Sign::Positive)
    } else if value < -bound {
        Some(Sign::Negative)
    } else {
        None
    }
}

/// Sign by interval refinement alone. `coeffs` must not represent zero,
/// otherwise this does not terminate.
pub(crate) fn interval_sign(coeffs: &[Rational], conductor: u32) -> Sign {
    let mut bits = 64;
    loop {
        let pi = pi_enclosure(bits);
        let mut lo = Rational::zero();
        let mut hi = Rational::zero();
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let j = (k as u32) % conductor;
            let j = j.min(conductor - j);
            let cos = cos_enclosure(j, conductor, &pi, bits);
            if c.is_positive() {
                lo += c * &cos.lo;
                hi += c * &cos.hi;
            } else {
                lo += c * &cos.hi;
                hi += c * &cos.lo;
            }
        }
        if lo.is_positive() {
            return Sign::Positive;
        }
        if hi.is_negative() {
            return Sign::Negative;
        }
        bits *= 2;
    }
}

/// Sign of a nonzero real cyclotomic value given by its coefficients in the
/// power basis of conductor `conductor`.
pub(crate) fn certified_sign(coeffs: &[Rational], conductor: u32) -> Sign {
    float_sign(coeffs, conductor).unwrap_or_else(|| interval_sign(coeffs, conductor))
}
