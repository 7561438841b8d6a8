//! Real elements of cyclotomic fields `ℚ[x]/Φ_N(x)`.
//!
//! Values are stored in the power basis `1, x, …, x^{φ(N)-1}` of their
//! conductor. A value whose only nonzero coefficient is the constant term is
//! always moved to conductor 1, so rationals have a single representation;
//! binary operations between different conductors lift both sides to the
//! least common conductor first.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::{self, Poly};
use super::{interval, parse_rational, Rational, ScalarError, Sign};

/// `ℚ[x]/Φ_N` with precomputed reductions of `x^k`, `0 <= k < max(N, 2φ(N))`.
#[derive(Debug)]
pub struct CyclotomicField {
    conductor: u32,
    degree: usize,
    modulus: Poly,
    powers: Vec<Vec<Rational>>,
}

impl CyclotomicField {
    fn new(conductor: u32) -> Self {
        let modulus = poly::cyclotomic(conductor);
        let degree = modulus.len() - 1;
        let count = (conductor as usize).max(2 * degree);
        let mut powers = Vec::with_capacity(count);
        let mut cur: Poly = vec![Rational::one()];
        for _ in 0..count {
            let mut dense = cur.clone();
            dense.resize(degree, Rational::zero());
            powers.push(dense);
            let mut shifted = vec![Rational::zero()];
            shifted.extend(cur.iter().cloned());
            cur = poly::divrem(&shifted, &modulus).1;
        }
        Self {
            conductor,
            degree,
            modulus,
            powers,
        }
    }

    /// Shared instance for the given conductor.
    pub fn get(conductor: u32) -> Arc<CyclotomicField> {
        assert!(conductor >= 1, "conductor must be positive");
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CyclotomicField>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(f) = cache.lock().unwrap().get(&conductor) {
            return Arc::clone(f);
        }
        // Built outside the lock; a racing thread just builds a duplicate.
        let field = Arc::new(CyclotomicField::new(conductor));
        Arc::clone(cache.lock().unwrap().entry(conductor).or_insert(field))
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    fn power(&self, k: usize) -> &[Rational] {
        &self.powers[k % self.conductor as usize]
    }

    /// Reduce a dense product of length up to `2·degree - 1`.
    fn reduce(&self, prod: Vec<Rational>) -> Vec<Rational> {
        let mut out: Vec<Rational> = vec![Rational::zero(); self.degree];
        for (k, c) in prod.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < self.degree {
                out[k] += c;
            } else {
                for (o, p) in out.iter_mut().zip(self.powers[k].iter()) {
                    if !p.is_zero() {
                        *o += &c * p;
                    }
                }
            }
        }
        out
    }
}

/// A real number in some cyclotomic field.
#[derive(Clone)]
pub struct CycloReal {
    field: Arc<CyclotomicField>,
    coeffs: Vec<Rational>,
}

impl CycloReal {
    pub fn from_rational(r: Rational) -> Self {
        Self {
            field: CyclotomicField::get(1),
            coeffs: vec![r],
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// Build from power-basis coefficients in the given conductor, reducing
    /// modulo `Φ_N`. Fails if the resulting value is not real.
    pub fn from_coefficients(conductor: u32, coeffs: &[Rational]) -> Result<Self, ScalarError> {
        if conductor == 0 {
            return Err(ScalarError::Parse("conductor must be positive".into()));
        }
        let field = CyclotomicField::get(conductor);
        let mut out = vec![Rational::zero(); field.degree];
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(field.power(k)) {
                if !p.is_zero() {
                    *o += c * p;
                }
            }
        }
        let value = Self::normalized(field, out);
        if value.is_real() {
            Ok(value)
        } else {
            Err(ScalarError::NotReal)
        }
    }

    /// `cos(π/m)`, in conductor `2m` unless it is rational.
    pub fn cos_pi_over(m: u32) -> Self {
        assert!(m >= 1, "cos(π/m) needs m >= 1");
        match m {
            1 => return Self::from_integer(-1),
            2 => return Self::zero(),
            3 => return Self::from_rational(Rational::new(BigInt::one(), BigInt::from(2))),
            _ => {}
        }
        let n = 2 * m;
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        let mut coeffs = vec![Rational::zero(); n as usize];
        coeffs[1] = half.clone();
        coeffs[n as usize - 1] = half;
        Self::from_coefficients(n, &coeffs).expect("ζ + ζ⁻¹ is real")
    }

    fn normalized(field: Arc<CyclotomicField>, coeffs: Vec<Rational>) -> Self {
        if field.conductor != 1 && coeffs.iter().skip(1).all(Zero::is_zero) {
            let c = coeffs.into_iter().next().unwrap_or_else(Rational::zero);
            return Self::from_rational(c);
        }
        Self { field, coeffs }
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor
    }

    /// Power-basis coefficients in the current conductor.
    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        if self.field.conductor == 1 {
            self.coeffs.first()
        } else {
            None
        }
    }

    /// Coefficients after lifting into conductor `target`, which must be a
    /// multiple of the current conductor.
    pub fn coefficients_in(&self, target: u32) -> Vec<Rational> {
        self.lift(&CyclotomicField::get(target)).coeffs
    }

    fn lift(&self, target: &Arc<CyclotomicField>) -> Self {
        let from = self.field.conductor;
        if from == target.conductor {
            return self.clone();
        }
        assert!(
            target.conductor % from == 0,
            "cannot lift conductor {from} into {}",
            target.conductor
        );
        let step = (target.conductor / from) as usize;
        let mut out = vec![Rational::zero(); target.degree];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(target.power(k * step)) {
                if !p.is_zero() {
                    *o += c * p;
                }
            }
        }
        Self {
            field: Arc::clone(target),
            coeffs: out,
        }
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        let n = a.field.conductor.lcm(&b.field.conductor);
        let field = CyclotomicField::get(n);
        (a.lift(&field), b.lift(&field))
    }

    /// Complex conjugate, `x ↦ x^{N-1}`.
    pub fn conjugate(&self) -> Self {
        let n = self.field.conductor as usize;
        let mut out = vec![Rational::zero(); self.field.degree];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(self.field.power((n - k) % n)) {
                if !p.is_zero() {
                    *o += c * p;
                }
            }
        }
        Self::normalized(Arc::clone(&self.field), out)
    }

    pub fn is_real(&self) -> bool {
        self.conjugate() == *self
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(r.recip()));
        }
        let mut a = self.coeffs.clone();
        poly::trim(&mut a);
        let inv = poly::inverse_mod(&a, &self.field.modulus).expect("Φ_N is irreducible");
        let mut dense = inv;
        dense.resize(self.field.degree, Rational::zero());
        Ok(Self::normalized(Arc::clone(&self.field), dense))
    }

    /// Exact zero test, then certified sign of the distinguished real
    /// embedding `x ↦ e^{2πi/N}`.
    pub fn sign(&self) -> Sign {
        if let Some(r) = self.as_rational() {
            return Sign::of_rational(r);
        }
        if self.coeffs.iter().all(Zero::is_zero) {
            return Sign::Zero;
        }
        interval::certified_sign(&self.coeffs, self.field.conductor)
    }

    /// Sign computed by interval refinement only, skipping the
    /// double-precision shortcut.
    pub fn sign_by_intervals(&self) -> Sign {
        if let Some(r) = self.as_rational() {
            return Sign::of_rational(r);
        }
        if self.coeffs.iter().all(Zero::is_zero) {
            return Sign::Zero;
        }
        interval::interval_sign(&self.coeffs, self.field.conductor)
    }

    pub fn to_f64(&self) -> f64 {
        let n = f64::from(self.field.conductor);
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let angle = 2.0 * std::f64::consts::PI * (k as f64) / n;
                c.to_f64().unwrap_or(f64::NAN) * angle.cos()
            })
            .sum()
    }

    fn zip_with(a: &Self, b: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        let (a, b) = if a.field.conductor == b.field.conductor {
            (a.clone(), b.clone())
        } else {
            Self::common(a, b)
        };
        let coeffs = a.coeffs.iter().zip(b.coeffs.iter()).map(|(x, y)| f(x, y)).collect();
        Self::normalized(a.field, coeffs)
    }

    fn scale(&self, r: &Rational) -> Self {
        let coeffs = self.coeffs.iter().map(|c| c * r).collect();
        Self::normalized(Arc::clone(&self.field), coeffs)
    }
}

impl PartialEq for CycloReal {
    fn eq(&self, other: &Self) -> bool {
        if self.field.conductor == other.field.conductor {
            return self.coeffs == other.coeffs;
        }
        // A normalized rational never equals a value with a nonconstant
        // representative.
        if self.field.conductor == 1 || other.field.conductor == 1 {
            return false;
        }
        let (a, b) = Self::common(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycloReal {}

impl Zero for CycloReal {
    fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.as_rational().is_some_and(Zero::is_zero)
    }
}

impl One for CycloReal {
    fn one() -> Self {
        Self::from_rational(Rational::one())
    }
}

impl Add for CycloReal {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        if let Some(r) = rhs.as_rational() {
            let mut out = self.clone();
            out.coeffs[0] += r;
            return Self::normalized(out.field, out.coeffs);
        }
        if let Some(r) = self.as_rational() {
            let mut out = rhs.clone();
            out.coeffs[0] += r;
            return Self::normalized(out.field, out.coeffs);
        }
        Self::zip_with(&self, &rhs, |x, y| x + y)
    }
}

impl Sub for CycloReal {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for CycloReal {
    type Output = Self;

    fn neg(self) -> Self {
        let coeffs = self.coeffs.into_iter().map(|c| -c).collect();
        Self {
            field: self.field,
            coeffs,
        }
    }
}

impl Mul for CycloReal {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        if let Some(r) = rhs.as_rational() {
            return self.scale(r);
        }
        if let Some(r) = self.as_rational() {
            return rhs.scale(r);
        }
        let (a, b) = if self.field.conductor == rhs.field.conductor {
            (self, rhs)
        } else {
            Self::common(&self, &rhs)
        };
        let d = a.field.degree;
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        let coeffs = a.field.reduce(prod);
        Self::normalized(a.field, coeffs)
    }
}

impl Div for CycloReal {
    type Output = Self;

    /// Panics on division by zero, like the rational division it extends.
    fn div(self, rhs: Self) -> Self {
        let inv = rhs.inv().expect("division by zero");
        self * inv
    }
}

impl fmt::Debug for CycloReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Text form: a sum of terms `q` (constant) and `q*c(k,N)` with
/// `c(k,N) = cos(2πk/N)`. The printed coefficients are the power-basis
/// coefficients: for a real value `v = Σ c_k x^k` also `v = Σ c_k cos(2πk/N)`.
/// Zero prints as `0`.
impl fmt::Display for CycloReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.field.conductor;
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { "-" } else { "+" })?;
            }
            first = false;
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "c({k},{n})")?;
            } else {
                write!(f, "{mag}*c({k},{n})")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl FromStr for CycloReal {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(ScalarError::Parse("empty value".into()));
        }
        // Split into signed terms without breaking inside c(…).
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut negative = false;
        let mut depth = 0usize;
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '(' => depth += 1,
                ')' => depth = depth.saturating_sub(1),
                '+' | '-' if depth == 0 => {
                    if i > 0 {
                        terms.push((negative, std::mem::take(&mut cur)));
                    }
                    negative = ch == '-';
                    continue;
                }
                _ => {}
            }
            cur.push(ch);
        }
        terms.push((negative, cur));

        let mut conductor = 1u32;
        let mut parsed: Vec<(Rational, u32, u32)> = Vec::new();
        for (negative, term) in terms {
            if term.is_empty() {
                return Err(ScalarError::Parse(format!("dangling sign in {s:?}")));
            }
            let (coeff, mono) = match term.find("c(") {
                Some(0) => (Rational::one(), Some(&term[..])),
                Some(pos) => {
                    let head = term[..pos]
                        .strip_suffix('*')
                        .ok_or_else(|| ScalarError::Parse(format!("bad term {term:?}")))?;
                    (parse_rational(head)?, Some(&term[pos..]))
                }
                None => (parse_rational(&term)?, None),
            };
            let coeff = if negative { -coeff } else { coeff };
            let (k, n) = match mono {
                None => (0, 1),
                Some(m) => {
                    let inner = m
                        .strip_prefix("c(")
                        .and_then(|r| r.strip_suffix(')'))
                        .ok_or_else(|| ScalarError::Parse(format!("bad monomial {m:?}")))?;
                    let (k, n) = inner
                        .split_once(',')
                        .ok_or_else(|| ScalarError::Parse(format!("bad monomial {m:?}")))?;
                    let k: u32 = k.parse().map_err(|_| ScalarError::Parse(format!("bad exponent {k:?}")))?;
                    let n: u32 = n.parse().map_err(|_| ScalarError::Parse(format!("bad conductor {n:?}")))?;
                    if n == 0 {
                        return Err(ScalarError::Parse("conductor must be positive".into()));
                    }
                    (k, n)
                }
            };
            conductor = conductor.lcm(&n);
            parsed.push((coeff, k, n));
        }
        // cos(2πk/N) = (x^k + x^{-k}) / 2
        let n = conductor as usize;
        let mut coeffs = vec![Rational::zero(); n];
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        for (c, k, m) in parsed {
            let idx = (k as usize * (conductor / m) as usize) % n;
            let c = c * &half;
            coeffs[idx] += &c;
            coeffs[(n - idx) % n] += c;
        }
        Self::from_coefficients(conductor, &coeffs)
    }
}

impl ToPrimitive for CycloReal {
    fn to_i64(&self) -> Option<i64> {
        self.as_rational().and_then(|r| r.to_i64())
    }

    fn to_u64(&self) -> Option<u64> {
        self.as_rational().and_then(|r| r.to_u64())
    }

    fn to_f64(&self) -> Option<f64> {
        Some(CycloReal::to_f64(self))
    }
}
