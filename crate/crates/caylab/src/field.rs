//! Exact coefficient arithmetic: arbitrary-precision rationals, prime
//! fields, roots of unity, and seeded random sampling.
//!
//! Every value is immutable after construction and all arithmetic is
//! exact. Prime-field elements are residues in `[0, p)` for a modulus
//! that has passed a deterministic Miller-Rabin test.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Largest modulus for which the fixed Miller-Rabin base set is a
/// deterministic primality proof.
pub const MAX_MODULUS: u64 = 330_000_000_000_000;

/// Search ceiling for [`find_prime_with_root`].
pub const PRIME_SEARCH_CAP: u64 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("cannot invert zero")]
    ZeroInversion,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} exceeds the deterministic primality bound")]
    ModulusTooLarge(u64),
    #[error("no {n}-th root of unity in F_{p}: p is not congruent to 1 mod n")]
    NoRoot { p: u64, n: u64 },
    #[error("no prime p = 1 mod {0} found below the search cap")]
    SearchExhausted(u64),
    #[error("operands belong to different fields")]
    MismatchedFields,
    #[error("rational coefficient has denominator divisible by {0}")]
    BadReduction(u64),
}

/// Deterministic Miller-Rabin for `n < 3.3e14` (base set 2..17).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn trial_factor(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// A prime field F_p, primality certified at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    modulus: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p > MAX_MODULUS {
            return Err(FieldError::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(PrimeField { modulus: p })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Smallest generator of the multiplicative group, found by trial:
    /// g = 2, 3, ... testing g^((p-1)/q) != 1 for each prime q | p-1.
    pub fn generator(&self) -> u64 {
        let p = self.modulus;
        if p == 2 {
            return 1;
        }
        let factors = trial_factor(p - 1);
        let mut g = 2u64;
        loop {
            if factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1) {
                return g;
            }
            g += 1;
        }
    }
}

/// Coefficient domain tag: either the rationals or a certified prime field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(PrimeField),
}

impl Field {
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        Ok(Field::Prime(PrimeField::new(p)?))
    }

    /// Characteristic: 0 for the rationals, p otherwise.
    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(f) => f.modulus(),
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.element_from_i64(0)
    }

    pub fn one(&self) -> FieldElement {
        self.element_from_i64(1)
    }

    pub fn element_from_i64(&self, v: i64) -> FieldElement {
        match self {
            Field::Rationals => FieldElement::Rational(Rational::from_integer(BigInt::from(v))),
            Field::Prime(f) => {
                let p = f.modulus() as i64;
                FieldElement::Modular {
                    value: v.rem_euclid(p) as u64,
                    modulus: f.modulus(),
                }
            }
        }
    }

    /// Residue constructor for prime fields; reduces mod p.
    pub fn element_from_u64(&self, v: u64) -> FieldElement {
        match self {
            Field::Rationals => FieldElement::Rational(Rational::from_integer(BigInt::from(v))),
            Field::Prime(f) => FieldElement::Modular {
                value: v % f.modulus(),
                modulus: f.modulus(),
            },
        }
    }

    /// Exact fraction constructor. Fails in F_p when p | den.
    pub fn element_from_ratio(&self, num: i64, den: i64) -> Result<FieldElement, FieldError> {
        assert!(den != 0, "zero denominator in field constant");
        match self {
            Field::Rationals => Ok(FieldElement::Rational(Rational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
            Field::Prime(_) => {
                let d = self.element_from_i64(den);
                Ok(self.element_from_i64(num).mul(&d.inverse()?))
            }
        }
    }
}

/// An exact scalar: a reduced rational or a residue in `[0, p)`.
///
/// Arithmetic is closed within one field; mixing fields is a caller bug
/// and panics. Boundary APIs that accept user data check fields first
/// and surface [`FieldError::MismatchedFields`] / `PolyError::FieldMismatch`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(Rational),
    Modular { value: u64, modulus: u64 },
}

impl FieldElement {
    pub fn field(&self) -> Field {
        match self {
            FieldElement::Rational(_) => Field::Rationals,
            FieldElement::Modular { modulus, .. } => {
                Field::Prime(PrimeField { modulus: *modulus })
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_zero(),
            FieldElement::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_one(),
            FieldElement::Modular { value, .. } => *value == 1,
        }
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => {
                FieldElement::Rational(a + b)
            }
            (
                FieldElement::Modular { value: a, modulus: p },
                FieldElement::Modular { value: b, modulus: q },
            ) => {
                assert_eq!(p, q, "mixed prime fields");
                FieldElement::Modular {
                    value: (a + b) % p,
                    modulus: *p,
                }
            }
            _ => panic!("mixed field arithmetic"),
        }
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => {
                FieldElement::Rational(a * b)
            }
            (
                FieldElement::Modular { value: a, modulus: p },
                FieldElement::Modular { value: b, modulus: q },
            ) => {
                assert_eq!(p, q, "mixed prime fields");
                FieldElement::Modular {
                    value: mul_mod(*a, *b, *p),
                    modulus: *p,
                }
            }
            _ => panic!("mixed field arithmetic"),
        }
    }

    pub fn neg(&self) -> FieldElement {
        match self {
            FieldElement::Rational(a) => FieldElement::Rational(-a),
            FieldElement::Modular { value, modulus } => FieldElement::Modular {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    /// Multiplicative inverse; `ZeroInversion` on zero.
    pub fn inverse(&self) -> Result<FieldElement, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroInversion);
        }
        Ok(match self {
            FieldElement::Rational(a) => FieldElement::Rational(a.recip()),
            FieldElement::Modular { value, modulus } => FieldElement::Modular {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.mul(&other.inverse()?))
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, exp: i64) -> Result<FieldElement, FieldError> {
        let base = if exp < 0 { self.inverse()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = self.field().one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b.clone());
            e >>= 1;
        }
        Ok(acc)
    }

    /// The residue value for prime-field elements.
    pub fn residue(&self) -> Option<u64> {
        match self {
            FieldElement::Modular { value, .. } => Some(*value),
            FieldElement::Rational(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            FieldElement::Rational(r) => Some(r),
            FieldElement::Modular { .. } => None,
        }
    }

    /// Reduce a rational scalar into F_p. Fails when p divides the
    /// denominator; prime-field inputs must already live in F_p.
    pub fn to_prime_field(&self, target: PrimeField) -> Result<FieldElement, FieldError> {
        let p = target.modulus();
        match self {
            FieldElement::Modular { modulus, .. } => {
                if *modulus == p {
                    Ok(self.clone())
                } else {
                    Err(FieldError::MismatchedFields)
                }
            }
            FieldElement::Rational(r) => {
                let pb = BigInt::from(p);
                let den = r.denom().mod_floor(&pb);
                if den.is_zero() {
                    return Err(FieldError::BadReduction(p));
                }
                use num_traits::ToPrimitive;
                let num = r.numer().mod_floor(&pb);
                let num_u = num.to_u64().expect("reduced residue fits u64");
                let den_u = den.to_u64().expect("reduced residue fits u64");
                let inv = pow_mod(den_u, p - 2, p);
                Ok(FieldElement::Modular {
                    value: mul_mod(num_u, inv, p),
                    modulus: p,
                })
            }
        }
    }
}

impl std::fmt::Display for FieldElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldElement::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            FieldElement::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

/// Primitive n-th root of unity in F_p, obtained as g^((p-1)/n) for a
/// generator g. Requires p = 1 mod n.
pub fn nth_root_of_unity(p: u64, n: u64) -> Result<FieldElement, FieldError> {
    assert!(n >= 1, "n must be positive");
    let field = PrimeField::new(p)?;
    if (p - 1) % n != 0 {
        return Err(FieldError::NoRoot { p, n });
    }
    let g = field.generator();
    let zeta = pow_mod(g, (p - 1) / n, p);
    debug_assert!(pow_mod(zeta, n, p) == 1);
    Ok(FieldElement::Modular {
        value: zeta,
        modulus: p,
    })
}

/// Smallest prime p >= min with p = 1 mod n. The search is capped at
/// 2^31; beyond that `SearchExhausted` is raised.
pub fn find_prime_with_root(n: u64, min: u64) -> Result<u64, FieldError> {
    assert!(n >= 1 && min >= 2, "need n >= 1 and min >= 2");
    let mut p = min;
    while p <= PRIME_SEARCH_CAP {
        if p % n == 1 % n && is_prime(p) {
            return Ok(p);
        }
        p += 1;
    }
    Err(FieldError::SearchExhausted(n))
}

/// Deterministic sample source. Child streams derived from
/// (seed, worker index) let parallel consumers stay reproducible.
#[derive(Debug, Clone)]
pub struct SampleStream {
    rng: ChaCha8Rng,
    seed: u64,
}

/// Numerators and denominators of sampled rationals stay within this bound.
pub const RATIONAL_BOX: i64 = 16;

impl SampleStream {
    pub fn new(seed: u64) -> Self {
        SampleStream {
            rng: ChaCha8Rng::seed_from_u64(seed),
            seed,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Independent stream for worker `index`.
    pub fn child(&self, index: u64) -> Self {
        let derived = self
            .seed
            .wrapping_mul(0x9e37_79b9_7f4a_7c15)
            .wrapping_add(index.wrapping_add(1).wrapping_mul(0xbf58_476d_1ce4_e5b9));
        SampleStream::new(derived)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.gen()
    }

    /// Uniform residue in a prime field; bounded-height rational over Q
    /// (numerator in [-16, 16], denominator in [1, 16]).
    pub fn element(&mut self, field: &Field) -> FieldElement {
        match field {
            Field::Prime(f) => FieldElement::Modular {
                value: self.rng.gen_range(0..f.modulus()),
                modulus: f.modulus(),
            },
            Field::Rationals => {
                let num = self.rng.gen_range(-RATIONAL_BOX..=RATIONAL_BOX);
                let den = self.rng.gen_range(1..=RATIONAL_BOX);
                FieldElement::Rational(Rational::new(BigInt::from(num), BigInt::from(den)))
            }
        }
    }

    pub fn nonzero_element(&mut self, field: &Field) -> FieldElement {
        loop {
            let e = self.element(field);
            if !e.is_zero() {
                return e;
            }
        }
    }

    pub fn point(&mut self, field: &Field, len: usize) -> Vec<FieldElement> {
        (0..len).map(|_| self.element(field)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn miller_rabin_known_values() {
        assert!(is_prime(2));
        assert!(is_prime(211));
        assert!(is_prime(1009));
        assert!(is_prime(10009));
        assert!(!is_prime(1));
        assert!(!is_prime(221)); // 13 * 17
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2,3,5,7
    }

    #[test]
    fn inverse_in_f13() {
        let f = Field::prime(13).unwrap();
        let two = f.element_from_i64(2);
        assert_eq!(two.inverse().unwrap(), f.element_from_i64(7));
        assert!(f.one().inverse().unwrap().is_one());
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.zero().inverse(), Err(FieldError::ZeroInversion));
    }

    #[test]
    fn rational_inverse_is_identity() {
        let q = Field::Rationals;
        let x = q.element_from_ratio(-3, 7).unwrap();
        assert!(x.mul(&x.inverse().unwrap()).is_one());
        assert!(q.one().inverse().unwrap().is_one());
        assert_eq!(q.zero().inverse(), Err(FieldError::ZeroInversion));
    }

    #[test]
    fn primitive_cube_root_mod_13() {
        let zeta = nth_root_of_unity(13, 3).unwrap();
        assert_eq!(zeta.residue(), Some(3));
        // primitive: every proper-divisor power differs from 1
        assert!(!zeta.pow(1).unwrap().is_one());
        assert!(zeta.pow(3).unwrap().is_one());
    }

    #[test]
    fn root_of_unity_edge_cases() {
        assert!(nth_root_of_unity(11, 1).unwrap().is_one());
        assert_eq!(
            nth_root_of_unity(7, 4),
            Err(FieldError::NoRoot { p: 7, n: 4 })
        );
    }

    #[test]
    fn primitivity_over_divisors() {
        // 12th roots mod 13: zeta^d != 1 for every proper divisor d of 12
        let zeta = nth_root_of_unity(13, 12).unwrap();
        for d in [1i64, 2, 3, 4, 6] {
            assert!(!zeta.pow(d).unwrap().is_one(), "zeta^{d} = 1");
        }
        assert!(zeta.pow(12).unwrap().is_one());
    }

    #[test]
    fn prime_search() {
        assert_eq!(find_prime_with_root(3, 10).unwrap(), 13);
        assert_eq!(find_prime_with_root(1, 2).unwrap(), 2);
        assert_eq!(find_prime_with_root(4, 10000).unwrap(), 10009);
        assert_eq!(find_prime_with_root(5, 211).unwrap(), 211);
        assert_eq!(find_prime_with_root(8, 211).unwrap(), 233);
    }

    #[test]
    fn streams_are_reproducible() {
        let mut a = SampleStream::new(42);
        let mut b = SampleStream::new(42);
        let fa: Vec<u64> = (0..32).map(|_| a.next_u64()).collect();
        let fb: Vec<u64> = (0..32).map(|_| b.next_u64()).collect();
        assert_eq!(fa, fb);
    }

    #[test]
    fn distinct_seeds_diverge() {
        let mut a = SampleStream::new(1);
        let mut b = SampleStream::new(2);
        let fa: Vec<u64> = (0..16).map(|_| a.next_u64()).collect();
        let fb: Vec<u64> = (0..16).map(|_| b.next_u64()).collect();
        assert_ne!(fa, fb);
    }

    #[test]
    fn rational_reduction_to_prime_field() {
        let p = PrimeField::new(13).unwrap();
        let third = Field::Rationals.element_from_ratio(1, 3).unwrap();
        let r = third.to_prime_field(p).unwrap();
        assert!(r.mul(&FieldElement::Modular { value: 3, modulus: 13 }).is_one());
        let bad = Field::Rationals.element_from_ratio(1, 13).unwrap();
        assert_eq!(bad.to_prime_field(p), Err(FieldError::BadReduction(13)));
    }

    #[test]
    fn field_axioms_on_random_triples() {
        for field in [Field::Rationals, Field::prime(211).unwrap()] {
            let mut stream = SampleStream::new(7);
            for _ in 0..10_000 {
                let x = stream.element(&field);
                let y = stream.element(&field);
                let z = stream.element(&field);
                assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
                assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
                assert_eq!(x.add(&y), y.add(&x));
                assert_eq!(x.mul(&y), y.mul(&x));
                assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
                assert!(x.add(&x.neg()).is_zero());
                if !x.is_zero() {
                    assert!(x.mul(&x.inverse().unwrap()).is_one());
                }
            }
        }
    }

    #[test]
    fn rationals_stay_reduced() {
        use num_traits::Signed;
        let mut stream = SampleStream::new(11);
        let q = Field::Rationals;
        for _ in 0..2_000 {
            let x = stream.element(&q);
            let y = stream.element(&q);
            for v in [x.add(&y), x.mul(&y), x.sub(&y)] {
                let r = v.as_rational().unwrap();
                assert!(r.denom().is_positive() || r.numer().is_zero());
                assert!(r.numer().gcd(r.denom()).is_one() || r.numer().is_zero());
            }
        }
    }
}
