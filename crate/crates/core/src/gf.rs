//! Exact arithmetic in finite fields GF(p^e).
//!
//! A [`FiniteField`] is either a prime field GF(p) or an extension
//! GF(p)[t]/(m(t)) for a monic irreducible modulus m. Elements are coefficient
//! vectors over GF(p); all operations are exact. Fields are handed around as
//! `Arc<FiniteField>` and every [`Scalar`] knows which field it lives in, so
//! accidental cross-field arithmetic is caught rather than silently computed.

use smallvec::SmallVec;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    BadDegree,
    #[error("field order p^e does not fit in 64 bits")]
    OrderTooLarge,
    #[error("modulus must be monic of degree {expected}, got degree {got}")]
    BadModulusDegree { expected: usize, got: usize },
    #[error("an extension of degree {0} needs an explicit modulus")]
    MissingModulus(usize),
    #[error("modulus is reducible: divisible by {divisor}")]
    ReducibleModulus { divisor: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields ({left} vs {right})")]
    FieldMismatch { left: String, right: String },
    #[error("bad field spec `{input}`: {reason}")]
    BadSpec { input: String, reason: String },
    #[error("scalar has {got} coefficients but the field has degree {expected}")]
    BadCoefficientCount { expected: usize, got: usize },
}

/// A finite field GF(p^e), p prime.
///
/// For e = 1 the modulus is the trivial polynomial t and plays no role.
/// For e > 1 the modulus is monic irreducible of degree e, stored as
/// little-endian coefficients `[c0, c1, ..., 1]` over GF(p).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u64,
    e: usize,
    modulus: Vec<u64>,
}

impl FiniteField {
    /// The prime field GF(p).
    pub fn prime(p: u64) -> Result<Arc<FiniteField>, GfError> {
        if !is_prime(p) {
            return Err(GfError::NotPrime(p));
        }
        Ok(Arc::new(FiniteField { p, e: 1, modulus: vec![0, 1] }))
    }

    /// The extension field GF(p)[t]/(m(t)).
    ///
    /// `modulus` is little-endian; its entries are reduced mod p, after which
    /// it must be monic of degree e >= 2 and irreducible. Irreducibility is
    /// checked by trial division against every monic polynomial of degree at
    /// most e/2.
    pub fn extension(p: u64, e: usize, modulus: &[u64]) -> Result<Arc<FiniteField>, GfError> {
        if !is_prime(p) {
            return Err(GfError::NotPrime(p));
        }
        if e == 0 {
            return Err(GfError::BadDegree);
        }
        if e == 1 {
            return FiniteField::prime(p);
        }
        // Refuse fields whose order cannot be represented; inversion uses
        // exponent p^e - 2 and element enumeration counts to p^e.
        let mut order: u64 = 1;
        for _ in 0..e {
            order = order.checked_mul(p).ok_or(GfError::OrderTooLarge)?;
        }
        let mut m: Vec<u64> = modulus.iter().map(|&c| c % p).collect();
        while m.last() == Some(&0) {
            m.pop();
        }
        if m.len() != e + 1 || m[e] != 1 {
            return Err(GfError::BadModulusDegree { expected: e, got: m.len().saturating_sub(1) });
        }
        // Trial factorization: a reducible polynomial of degree e has a monic
        // factor of degree <= e/2.
        for deg in 1..=e / 2 {
            let mut count = 1u64;
            for _ in 0..deg {
                count = count.saturating_mul(p);
            }
            for idx in 0..count {
                let mut div = digits_base_p(idx, p, deg);
                div.push(1); // monic
                let (_, rem) = poly_divmod(&m, &div, p);
                if rem.is_empty() {
                    return Err(GfError::ReducibleModulus { divisor: poly_string(&div) });
                }
            }
        }
        Ok(Arc::new(FiniteField { p, e, modulus: m }))
    }

    /// Parse a field description: `p=<prime>` or `p=<prime>,e=<deg>,mod=<c0,c1,...,1>`.
    pub fn parse_spec(input: &str) -> Result<Arc<FiniteField>, GfError> {
        let bad = |reason: &str| GfError::BadSpec {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let mut parts = input.split(',').map(str::trim);
        let first = parts.next().ok_or_else(|| bad("empty"))?;
        let p: u64 = first
            .strip_prefix("p=")
            .ok_or_else(|| bad("expected `p=<prime>` first"))?
            .parse()
            .map_err(|_| bad("p is not an integer"))?;
        let second = match parts.next() {
            None => return FiniteField::prime(p),
            Some(s) => s,
        };
        let e: usize = second
            .strip_prefix("e=")
            .ok_or_else(|| bad("expected `e=<degree>` after p"))?
            .parse()
            .map_err(|_| bad("e is not an integer"))?;
        let third = parts.next().ok_or(GfError::MissingModulus(e))?;
        let c0 = third.strip_prefix("mod=").ok_or_else(|| bad("expected `mod=<coeffs>`"))?;
        let mut coeffs: Vec<u64> = vec![c0.parse().map_err(|_| bad("bad modulus coefficient"))?];
        for tok in parts {
            coeffs.push(tok.parse().map_err(|_| bad("bad modulus coefficient"))?);
        }
        if e == 1 {
            // The modulus is redundant for prime fields; accept and ignore it.
            return FiniteField::prime(p);
        }
        FiniteField::extension(p, e, &coeffs)
    }

    /// Canonical spec string; `parse_spec` round-trips it.
    pub fn spec_string(&self) -> String {
        if self.e == 1 {
            format!("p={}", self.p)
        } else {
            let coeffs: Vec<String> = self.modulus.iter().map(|c| c.to_string()).collect();
            format!("p={},e={},mod={}", self.p, self.e, coeffs.join(","))
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.e
    }

    /// Number of elements, p^e.
    pub fn order(&self) -> u64 {
        let mut n = 1u64;
        for _ in 0..self.e {
            n *= self.p;
        }
        n
    }

    pub fn zero(self: &Arc<Self>) -> Scalar {
        Scalar { field: self.clone(), coeffs: SmallVec::from_elem(0, self.e) }
    }

    pub fn one(self: &Arc<Self>) -> Scalar {
        self.from_int(1)
    }

    /// Embed an integer via reduction mod p.
    pub fn from_int(self: &Arc<Self>, v: i64) -> Scalar {
        let p = self.p as i64;
        let r = ((v % p) + p) % p;
        let mut coeffs = SmallVec::from_elem(0, self.e);
        coeffs[0] = r as u64;
        Scalar { field: self.clone(), coeffs }
    }

    /// Build a scalar from little-endian coefficients over GF(p).
    ///
    /// Up to e coefficients are accepted (missing ones are zero); entries are
    /// reduced mod p.
    pub fn from_coeffs(self: &Arc<Self>, coeffs: &[i64]) -> Result<Scalar, GfError> {
        if coeffs.len() > self.e {
            return Err(GfError::BadCoefficientCount { expected: self.e, got: coeffs.len() });
        }
        let p = self.p as i64;
        let mut out = SmallVec::from_elem(0, self.e);
        for (i, &c) in coeffs.iter().enumerate() {
            out[i] = (((c % p) + p) % p) as u64;
        }
        Ok(Scalar { field: self.clone(), coeffs: out })
    }

    /// The class of t, a generator of the extension over GF(p). For e = 1 this
    /// is just 0 (the polynomial t reduces to 0 only formally); callers that
    /// need a multiplicative generator should not use this on prime fields.
    pub fn gen_t(self: &Arc<Self>) -> Scalar {
        let mut coeffs = SmallVec::from_elem(0, self.e);
        if self.e > 1 {
            coeffs[1] = 1;
        }
        Scalar { field: self.clone(), coeffs }
    }

    /// Iterate over all p^e elements in a fixed order (coefficientwise,
    /// low digit fastest). Intended for small fields.
    pub fn elements(self: &Arc<Self>) -> impl Iterator<Item = Scalar> + '_ {
        let field = self.clone();
        (0..self.order()).map(move |idx| {
            let digits = digits_base_p(idx, field.p, field.e);
            Scalar { field: field.clone(), coeffs: SmallVec::from_vec(digits) }
        })
    }
}

impl fmt::Display for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec_string())
    }
}

/// An element of a [`FiniteField`]: e coefficients over GF(p), little-endian
/// in the generator t.
#[derive(Debug, Clone)]
pub struct Scalar {
    field: Arc<FiniteField>,
    coeffs: SmallVec<[u64; 4]>,
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other) && self.coeffs == other.coeffs
    }
}

impl Eq for Scalar {}

impl Scalar {
    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// The residue for prime-field scalars.
    pub fn residue(&self) -> u64 {
        self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn same_field(&self, other: &Scalar) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || self.field == other.field
    }

    fn mismatch(&self, other: &Scalar) -> GfError {
        GfError::FieldMismatch { left: self.field.spec_string(), right: other.field.spec_string() }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, GfError> {
        if !self.same_field(other) {
            return Err(self.mismatch(other));
        }
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, GfError> {
        if !self.same_field(other) {
            return Err(self.mismatch(other));
        }
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, GfError> {
        if !self.same_field(other) {
            return Err(self.mismatch(other));
        }
        Ok(self * other)
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, GfError> {
        if !self.same_field(other) {
            return Err(self.mismatch(other));
        }
        Ok(self * &other.inverse()?)
    }

    /// Multiplicative inverse, by Fermat: a^(p^e - 2).
    pub fn inverse(&self) -> Result<Scalar, GfError> {
        if self.is_zero() {
            return Err(GfError::DivisionByZero);
        }
        Ok(self.pow(self.field.order() - 2))
    }

    /// a^k by square and multiply; a^0 = 1.
    pub fn pow(&self, mut k: u64) -> Scalar {
        let mut acc = self.field.one();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Apply the Frobenius x -> x^p, n times.
    pub fn frobenius(&self, n: u32) -> Scalar {
        let mut x = self.clone();
        for _ in 0..n {
            x = x.pow(self.field.p);
        }
        x
    }

    /// Apply the inverse Frobenius n times. One inverse step is x -> x^(p^(e-1)),
    /// since the Frobenius has order e on GF(p^e).
    pub fn frobenius_inv(&self, n: u32) -> Scalar {
        let e = self.field.e as u32;
        let mut x = self.clone();
        for _ in 0..n {
            x = x.frobenius(e - 1);
        }
        x
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.e == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for d in (0..self.field.e).rev() {
            let c = self.coeffs[d];
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match d {
                0 => write!(f, "{c}")?,
                1 => {
                    if c != 1 {
                        write!(f, "{c}*")?;
                    }
                    write!(f, "t")?;
                }
                _ => {
                    if c != 1 {
                        write!(f, "{c}*")?;
                    }
                    write!(f, "t^{d}")?;
                }
            }
        }
        Ok(())
    }
}

macro_rules! require_same_field {
    ($a:expr, $b:expr) => {
        assert!(
            $a.same_field($b),
            "scalars from different fields: {} vs {}",
            $a.field.spec_string(),
            $b.field.spec_string()
        )
    };
}

// coefficientwise arithmetic modulo p is the field operation, not a typo
#[allow(clippy::suspicious_arithmetic_impl)]
impl std::ops::Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        require_same_field!(self, rhs);
        let p = self.field.p;
        let coeffs =
            self.coeffs.iter().zip(rhs.coeffs.iter()).map(|(&a, &b)| (a + b) % p).collect();
        Scalar { field: self.field.clone(), coeffs }
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl std::ops::Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        require_same_field!(self, rhs);
        let p = self.field.p;
        let coeffs =
            self.coeffs.iter().zip(rhs.coeffs.iter()).map(|(&a, &b)| (a + p - b) % p).collect();
        Scalar { field: self.field.clone(), coeffs }
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        let p = self.field.p;
        let coeffs = self.coeffs.iter().map(|&a| (p - a) % p).collect();
        Scalar { field: self.field.clone(), coeffs }
    }
}

impl std::ops::Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        require_same_field!(self, rhs);
        let p = self.field.p;
        let e = self.field.e;
        if e == 1 {
            let c = (self.coeffs[0] * rhs.coeffs[0]) % p;
            return Scalar { field: self.field.clone(), coeffs: SmallVec::from_elem(c, 1) };
        }
        // Schoolbook product, then reduction by the monic modulus.
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a * b) % p;
            }
        }
        for d in (e..2 * e - 1).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            // t^d = t^(d-e) * (t^e) = -t^(d-e) * (modulus - t^e)
            for k in 0..e {
                let m = self.field.modulus[k];
                if m != 0 {
                    let idx = d - e + k;
                    prod[idx] = (prod[idx] + p * p - (c * m) % p + p) % p;
                }
            }
        }
        let coeffs = prod[..e].iter().copied().collect();
        Scalar { field: self.field.clone(), coeffs }
    }
}

impl std::ops::Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        require_same_field!(self, rhs);
        self * &rhs.inverse().expect("division by zero")
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn digits_base_p(mut idx: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = vec![0u64; len];
    for slot in out.iter_mut() {
        *slot = idx % p;
        idx /= p;
    }
    out
}

/// Divide polynomials over GF(p) (little-endian, divisor monic-led after
/// normalization); returns (quotient, remainder) with trailing zeros stripped.
fn poly_divmod(num: &[u64], den: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let mut rem: Vec<u64> = num.to_vec();
    strip(&mut rem);
    let mut den = den.to_vec();
    strip(&mut den);
    assert!(!den.is_empty(), "division by the zero polynomial");
    let dd = den.len() - 1;
    let lead_inv = mod_inverse(den[dd], p);
    let mut quot = vec![0u64; rem.len().saturating_sub(dd).max(1)];
    while rem.len() > dd || (rem.len() == dd + 1 && dd == 0) {
        if rem.is_empty() || rem.len() - 1 < dd {
            break;
        }
        let shift = rem.len() - 1 - dd;
        let coef = (rem[rem.len() - 1] * lead_inv) % p;
        quot[shift] = coef;
        for k in 0..=dd {
            let idx = shift + k;
            rem[idx] = (rem[idx] + p * p - (coef * den[k]) % p) % p;
        }
        strip(&mut rem);
        if shift == 0 {
            break;
        }
    }
    strip(&mut quot);
    (quot, rem)
}

fn strip(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p is prime and a != 0 mod p; Fermat again.
    let mut acc = 1u64;
    let mut base = a % p;
    let mut k = p - 2;
    while k > 0 {
        if k & 1 == 1 {
            acc = (acc * base) % p;
        }
        base = (base * base) % p;
        k >>= 1;
    }
    acc
}

fn poly_string(poly: &[u64]) -> String {
    let terms: Vec<String> = poly
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(d, &c)| match d {
            0 => format!("{c}"),
            1 => {
                if c == 1 {
                    "t".to_string()
                } else {
                    format!("{c}*t")
                }
            }
            _ => {
                if c == 1 {
                    format!("t^{d}")
                } else {
                    format!("{c}*t^{d}")
                }
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf4() -> Arc<FiniteField> {
        FiniteField::extension(2, 2, &[1, 1, 1]).unwrap()
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = FiniteField::prime(5).unwrap();
        let a = f.from_int(3);
        let b = f.from_int(4);
        assert_eq!(&a + &b, f.from_int(2));
        assert_eq!(&a * &b, f.from_int(2));
        assert_eq!(&a - &b, f.from_int(4));
        assert_eq!((&a / &b).checked_mul(&b).unwrap(), a);
    }

    #[test]
    fn rejects_non_prime() {
        assert_eq!(FiniteField::prime(6).unwrap_err(), GfError::NotPrime(6));
        assert_eq!(FiniteField::prime(1).unwrap_err(), GfError::NotPrime(1));
        assert!(matches!(
            FiniteField::extension(4, 2, &[1, 1, 1]).unwrap_err(),
            GfError::NotPrime(4)
        ));
    }

    #[test]
    fn rejects_reducible_modulus() {
        // t^2 + 1 = (t+1)^2 over GF(2)
        let err = FiniteField::extension(2, 2, &[1, 0, 1]).unwrap_err();
        assert!(matches!(err, GfError::ReducibleModulus { .. }));
        // t^4 + t^2 + 1 = (t^2+t+1)^2 over GF(2): caught by a degree-2 divisor
        let err = FiniteField::extension(2, 4, &[1, 0, 1, 0, 1]).unwrap_err();
        match err {
            GfError::ReducibleModulus { divisor } => assert_eq!(divisor, "1+t+t^2"),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn accepts_known_irreducibles() {
        assert!(FiniteField::extension(2, 2, &[1, 1, 1]).is_ok()); // t^2+t+1
        assert!(FiniteField::extension(2, 3, &[1, 1, 0, 1]).is_ok()); // t^3+t+1
        assert!(FiniteField::extension(2, 4, &[1, 1, 0, 0, 1]).is_ok()); // t^4+t+1
        assert!(FiniteField::extension(3, 2, &[1, 0, 1]).is_ok()); // t^2+1 over GF(3)
    }

    #[test]
    fn gf4_multiplication_table() {
        let f = gf4();
        let t = f.gen_t();
        let one = f.one();
        // t * t = t + 1
        assert_eq!(&t * &t, f.from_coeffs(&[1, 1]).unwrap());
        // t * (t + 1) = t^2 + t = 1
        assert_eq!(&t * &(&t + &one), one);
    }

    #[test]
    fn frobenius_on_gf4() {
        let f = gf4();
        let t = f.gen_t();
        let t1 = f.from_coeffs(&[1, 1]).unwrap();
        assert_eq!(t.frobenius(1), t1);
        assert_eq!(t1.frobenius_inv(1), t);
        assert_eq!(t.frobenius(0), t);
        assert_eq!(t.frobenius(2), t); // sigma^e = identity
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        let fields = [
            FiniteField::prime(2).unwrap(),
            FiniteField::prime(3).unwrap(),
            FiniteField::prime(7).unwrap(),
            gf4(),
            FiniteField::extension(2, 3, &[1, 1, 0, 1]).unwrap(),
            FiniteField::extension(3, 2, &[1, 0, 1]).unwrap(),
        ];
        for f in &fields {
            let elems: Vec<Scalar> = f.elements().collect();
            assert_eq!(elems.len(), f.order() as usize);
            for a in &elems {
                // inverses
                if !a.is_zero() {
                    assert_eq!(&a.inverse().unwrap() * a, f.one(), "inverse in {f}");
                }
                assert_eq!(&(-a) + a, f.zero());
                for b in &elems {
                    assert_eq!(a + b, b + a);
                    assert_eq!(a * b, b * a);
                    for c in &elems {
                        assert_eq!(&(a + b) * c, &(a * c) + &(b * c), "distributivity in {f}");
                        assert_eq!(&(a * b) * c, a * &(b * c), "associativity in {f}");
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_is_additive_and_multiplicative() {
        let f = FiniteField::extension(2, 3, &[1, 1, 0, 1]).unwrap();
        let elems: Vec<Scalar> = f.elements().collect();
        for a in &elems {
            assert_eq!(a.frobenius(3), *a); // order divides e
            assert_eq!(a.frobenius(1).frobenius_inv(1), *a);
            for b in &elems {
                assert_eq!((a + b).frobenius(1), &a.frobenius(1) + &b.frobenius(1));
                assert_eq!((a * b).frobenius(1), &a.frobenius(1) * &b.frobenius(1));
            }
        }
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let f = FiniteField::prime(3).unwrap();
        assert_eq!(f.one().checked_div(&f.zero()).unwrap_err(), GfError::DivisionByZero);
        assert_eq!(f.zero().inverse().unwrap_err(), GfError::DivisionByZero);
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let f2 = FiniteField::prime(2).unwrap();
        let f3 = FiniteField::prime(3).unwrap();
        let err = f2.one().checked_add(&f3.one()).unwrap_err();
        assert!(matches!(err, GfError::FieldMismatch { .. }));
        // Same (p, e) but different modulus is still a different field.
        let a = FiniteField::extension(2, 3, &[1, 1, 0, 1]).unwrap(); // t^3+t+1
        let b = FiniteField::extension(2, 3, &[1, 0, 1, 1]).unwrap(); // t^3+t^2+1
        assert!(a.one().checked_mul(&b.one()).is_err());
    }

    #[test]
    fn spec_strings_round_trip() {
        for spec in ["p=2", "p=3", "p=2,e=2,mod=1,1,1", "p=3,e=2,mod=1,0,1"] {
            let f = FiniteField::parse_spec(spec).unwrap();
            assert_eq!(f.spec_string(), spec);
            assert_eq!(FiniteField::parse_spec(&f.spec_string()).unwrap(), f);
        }
    }

    #[test]
    fn spec_parse_errors() {
        assert!(matches!(FiniteField::parse_spec("p=4"), Err(GfError::NotPrime(4))));
        assert!(matches!(FiniteField::parse_spec("q=2"), Err(GfError::BadSpec { .. })));
        assert!(matches!(FiniteField::parse_spec("p=2,e=2"), Err(GfError::MissingModulus(2))));
        assert!(matches!(
            FiniteField::parse_spec("p=2,e=2,mod=1,0,1"),
            Err(GfError::ReducibleModulus { .. })
        ));
    }

    #[test]
    fn display_forms() {
        let f = gf4();
        assert_eq!(f.zero().to_string(), "0");
        assert_eq!(f.one().to_string(), "1");
        assert_eq!(f.gen_t().to_string(), "t");
        assert_eq!(f.from_coeffs(&[1, 1]).unwrap().to_string(), "t+1");
        let f9 = FiniteField::extension(3, 2, &[1, 0, 1]).unwrap();
        assert_eq!(f9.from_coeffs(&[1, 2]).unwrap().to_string(), "2*t+1");
    }

    #[test]
    fn coefficient_reduction_and_bounds() {
        let f = FiniteField::prime(3).unwrap();
        assert_eq!(f.from_int(-1), f.from_int(2));
        assert_eq!(f.from_coeffs(&[5]).unwrap(), f.from_int(2));
        assert!(matches!(
            f.from_coeffs(&[1, 2]),
            Err(GfError::BadCoefficientCount { expected: 1, got: 2 })
        ));
    }
}
