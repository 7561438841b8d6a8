//! Dense univariate polynomials over the rationals, just enough for
//! cyclotomic reduction and inversion.

use num_traits::{One, Zero};

use super::Rational;

/// Coefficient of `x^k` lives at index `k`. Trailing zeros are trimmed.
pub(crate) type Poly = Vec<Rational>;

pub(crate) fn trim(p: &mut Poly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn degree(p: &Poly) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

pub(crate) fn sub(a: &Poly, b: &Poly) -> Poly {
    let n = a.len().max(b.len());
    let mut out: Poly = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            let y = b.get(i).cloned().unwrap_or_else(Rational::zero);
            x - y
        })
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

/// Euclidean division; `b` must be nonzero.
pub(crate) fn divrem(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let db = degree(b).expect("polynomial division by zero");
    let lead = b[db].clone();
    let mut rem = a.clone();
    trim(&mut rem);
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let c = &rem[dr] / &lead;
        let shift = dr - db;
        for (k, bk) in b.iter().enumerate() {
            if !bk.is_zero() {
                rem[shift + k] -= &c * bk;
            }
        }
        quot[shift] = c;
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// Inverse of `a` modulo `m`, or `None` when they share a factor.
pub(crate) fn inverse_mod(a: &Poly, m: &Poly) -> Option<Poly> {
    // Extended Euclid tracking only the coefficient of `a`.
    let (mut r0, mut r1) = (m.clone(), divrem(a, m).1);
    let (mut s0, mut s1): (Poly, Poly) = (Vec::new(), vec![Rational::one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s2 = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if degree(&r0) != Some(0) {
        return None;
    }
    let c = r0[0].clone();
    let inv: Poly = s0.iter().map(|x| x / &c).collect();
    Some(divrem(&inv, m).1)
}

/// Integer cyclotomic polynomial `Φ_n`, built from `x^n - 1` by dividing out
/// `Φ_d` for every proper divisor `d`.
pub(crate) fn cyclotomic(n: u32) -> Poly {
    let mut p: Poly = vec![Rational::zero(); n as usize + 1];
    p[0] = -Rational::one();
    p[n as usize] = Rational::one();
    for d in 1..n {
        if n % d == 0 {
            let (q, r) = divrem(&p, &cyclotomic(d));
            debug_assert!(r.is_empty());
            p = q;
        }
    }
    p
}
