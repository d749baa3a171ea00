//! Exact coefficient arithmetic: arbitrary-precision rationals and prime fields GF(p).
//!
//! Rationals are stored fully reduced with a positive denominator, prime-field
//! residues in the canonical range `0..p`, so equal values are structurally equal.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

use crate::error::Error;

/// The coefficient field: the rationals or a prime field of word-sized modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField { modulus: u64 },
}

impl FieldSpec {
    /// Builds a prime-field spec, rejecting composite or trivial moduli.
    pub fn prime_field(modulus: u64) -> Result<Self, Error> {
        if is_prime_u64(modulus) {
            Ok(FieldSpec::PrimeField { modulus })
        } else {
            Err(Error::NonPrimeModulus(modulus))
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField { modulus } => write!(f, "GF {}", modulus),
        }
    }
}

/// An exact field element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

/// The four field operations accepted by [`Scalar::arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl Scalar {
    pub fn zero(field: FieldSpec) -> Self {
        match field {
            FieldSpec::Rationals => Scalar::Rational(BigRational::zero()),
            FieldSpec::PrimeField { modulus } => Scalar::Residue { value: 0, modulus },
        }
    }

    pub fn one(field: FieldSpec) -> Self {
        match field {
            FieldSpec::Rationals => Scalar::Rational(BigRational::one()),
            FieldSpec::PrimeField { modulus } => Scalar::Residue {
                value: 1 % modulus,
                modulus,
            },
        }
    }

    pub fn from_integer(field: FieldSpec, n: i64) -> Self {
        match field {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::PrimeField { modulus } => {
                let m = modulus as i128;
                let v = ((n as i128 % m) + m) % m;
                Scalar::Residue {
                    value: v as u64,
                    modulus,
                }
            }
        }
    }

    /// Reduces an arbitrary-precision integer into the field.
    pub fn from_bigint(field: FieldSpec, n: &BigInt) -> Self {
        match field {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(n.clone())),
            FieldSpec::PrimeField { modulus } => {
                let m = BigInt::from(modulus);
                let mut r = n % &m;
                if r.is_negative() {
                    r += &m;
                }
                let (_, digits) = r.to_u64_digits();
                Scalar::Residue {
                    value: digits.first().copied().unwrap_or(0),
                    modulus,
                }
            }
        }
    }

    /// Builds num/den in the field. For GF(p) this is `num * den^-1`.
    pub fn from_ratio(field: FieldSpec, num: &BigInt, den: &BigInt) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match field {
            FieldSpec::Rationals => Ok(Scalar::Rational(BigRational::new(num.clone(), den.clone()))),
            FieldSpec::PrimeField { .. } => {
                let n = Scalar::from_bigint(field, num);
                let d = Scalar::from_bigint(field, den);
                Scalar::arith(&n, &d, ArithOp::Div)
            }
        }
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Residue { modulus, .. } => FieldSpec::PrimeField { modulus: *modulus },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    /// True for rationals with negative numerator; residues are never negative.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_negative(),
            Scalar::Residue { .. } => false,
        }
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(r.abs()),
            s => s.clone(),
        }
    }

    /// Exact field arithmetic; rejects mixed fields and division by zero.
    pub fn arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar, Error> {
        if a.field() != b.field() {
            return Err(Error::FieldMismatch);
        }
        if op == ArithOp::Div && b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match (a, b) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(match op {
                ArithOp::Add => x + y,
                ArithOp::Sub => x - y,
                ArithOp::Mul => x * y,
                ArithOp::Div => x / y,
            }),
            (
                Scalar::Residue { value: x, modulus },
                Scalar::Residue { value: y, .. },
            ) => {
                let p = *modulus;
                let value = match op {
                    ArithOp::Add => add_mod(*x, *y, p),
                    ArithOp::Sub => add_mod(*x, p - *y % p, p),
                    ArithOp::Mul => mul_mod(*x, *y, p),
                    ArithOp::Div => mul_mod(*x, inv_mod(*y, p), p),
                };
                Scalar::Residue { value, modulus: p }
            }
            _ => unreachable!("field tags already matched"),
        })
    }

    /// Multiplicative inverse; zero has none.
    pub fn inverse(&self) -> Result<Scalar, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: inv_mod(*value, *modulus),
                modulus: *modulus,
            },
        })
    }

    /// Division by a known-nonzero scalar of the same field.
    ///
    /// Panics on zero divisors or mixed fields; use [`Scalar::arith`] for
    /// checked division.
    pub fn div(&self, other: &Scalar) -> Scalar {
        Scalar::arith(self, other, ArithOp::Div).expect("scalar division")
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $op:expr) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar::arith(self, rhs, $op).expect("mixed-field scalar arithmetic")
            }
        }
    };
}

scalar_binop!(Add, add, ArithOp::Add);
scalar_binop!(Sub, sub, ArithOp::Sub);
scalar_binop!(Mul, mul, ArithOp::Mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{}", value),
        }
    }
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0, "inverse of zero residue");
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // This witness set decides primality for every u64.
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::from_ratio(FieldSpec::Rationals, &BigInt::from(n), &BigInt::from(d)).unwrap()
    }

    fn gf7(n: i64) -> Scalar {
        Scalar::from_integer(FieldSpec::prime_field(7).unwrap(), n)
    }

    #[test]
    fn rational_addition() {
        let s = Scalar::arith(&q(1, 2), &q(1, 3), ArithOp::Add).unwrap();
        assert_eq!(s, q(5, 6));
    }

    #[test]
    fn prime_field_multiplication() {
        let s = Scalar::arith(&gf7(3), &gf7(5), ArithOp::Mul).unwrap();
        assert_eq!(s, gf7(1));
    }

    #[test]
    fn rationals_normalize() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(-2, -4), q(1, 2));
        assert_eq!(q(2, -4), q(-1, 2));
    }

    #[test]
    fn inverses() {
        assert_eq!(q(3, 5).inverse().unwrap(), q(5, 3));
        assert_eq!(gf7(3).inverse().unwrap(), gf7(5));
        assert_eq!(q(1, 1).inverse().unwrap(), q(1, 1));
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(q(0, 1).inverse(), Err(Error::DivisionByZero));
        assert_eq!(
            Scalar::arith(&gf7(3), &gf7(0), ArithOp::Div),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn mixed_fields_rejected() {
        assert_eq!(
            Scalar::arith(&q(1, 1), &gf7(1), ArithOp::Add),
            Err(Error::FieldMismatch)
        );
    }

    #[test]
    fn non_prime_modulus_rejected() {
        assert_eq!(FieldSpec::prime_field(6), Err(Error::NonPrimeModulus(6)));
        assert_eq!(FieldSpec::prime_field(1), Err(Error::NonPrimeModulus(1)));
        assert!(FieldSpec::prime_field(2).is_ok());
        assert!(FieldSpec::prime_field(1_000_000_007).is_ok());
    }

    #[test]
    fn primality_checker() {
        let primes = [2u64, 3, 5, 7, 97, 561 + 2, 2147483647];
        for p in primes {
            assert!(is_prime_u64(p), "{p}");
        }
        let composites = [0u64, 1, 4, 561, 1105, 6601, 2147483647 * 2];
        for c in composites {
            assert!(!is_prime_u64(c), "{c}");
        }
    }

    #[test]
    fn field_axioms_hold_on_random_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let gf = FieldSpec::prime_field(101).unwrap();
        for _ in 0..200 {
            for field in [FieldSpec::Rationals, gf] {
                let rand_scalar = |rng: &mut ChaCha8Rng| match field {
                    FieldSpec::Rationals => q(rng.gen_range(-50..50), rng.gen_range(1..20)),
                    _ => Scalar::from_integer(field, rng.gen_range(-200..200)),
                };
                let a = rand_scalar(&mut rng);
                let b = rand_scalar(&mut rng);
                let c = rand_scalar(&mut rng);
                assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
                assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                if !a.is_zero() {
                    assert!((&a * &a.inverse().unwrap()).is_one());
                }
            }
        }
    }
}
