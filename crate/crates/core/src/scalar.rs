//! Exact field arithmetic: arbitrary-precision rationals and prime fields.
//!
//! Every scalar carries its field tag so that mixing fields is a checked
//! runtime error, matching the per-file field declaration of the JSON
//! schema. Rationals are kept in lowest terms with positive denominator,
//! prime-field residues reduced into `[0, p)`, so equality is structural.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

use crate::error::{Error, Result};

/// The field a computation runs over: Q or F_p for a prime p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    /// Builds a prime-field spec, rejecting composite moduli.
    pub fn prime_field(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// Characteristic of the field (0 for Q).
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        Scalar::from_i64(0, *self)
    }

    pub fn one(&self) -> Scalar {
        Scalar::from_i64(1, *self)
    }

    /// An element of multiplicative order exactly `n`, when one exists.
    ///
    /// Only prime fields carry roots of unity here; over Q the only
    /// torsion is ±1 and the cyclotomic extension is out of scope. The
    /// search is exhaustive, which is fine at the moduli this library
    /// meets in practice.
    pub fn root_of_unity(&self, n: u64) -> Result<Scalar> {
        let p = match self {
            FieldSpec::Rationals => {
                return match n {
                    1 => Ok(self.one()),
                    2 => Ok(self.one().neg()),
                    _ => Err(Error::NoSuchRoot { n, p: 0 }),
                }
            }
            FieldSpec::PrimeField(p) => *p,
        };
        if n == 0 || (p - 1) % n != 0 {
            return Err(Error::NoSuchRoot { n, p });
        }
        for candidate in 1..p {
            if mul_order(candidate, p) == n {
                return Ok(Scalar::Fp {
                    value: candidate,
                    modulus: p,
                });
            }
        }
        Err(Error::NoSuchRoot { n, p })
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "F_{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.checked_mul(d).is_some_and(|sq| sq <= p) {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn mul_order(a: u64, p: u64) -> u64 {
    let mut acc = a % p;
    let mut k = 1;
    while acc != 1 {
        acc = mulmod(acc, a, p);
        k += 1;
    }
    k
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Extended Euclid inverse of `a` mod `p`.
fn invmod(a: u64, p: u64) -> Result<u64> {
    if a.is_multiple_of(p) {
        return Err(Error::DivisionByZero);
    }
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    Ok(t0.rem_euclid(p as i128) as u64)
}

/// An exact field element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Fp { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Fp { modulus, .. } => FieldSpec::PrimeField(*modulus),
        }
    }

    pub fn from_i64(n: i64, field: FieldSpec) -> Scalar {
        match field {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::PrimeField(p) => Scalar::Fp {
                value: (n as i128).rem_euclid(p as i128) as u64,
                modulus: p,
            },
        }
    }

    /// `num/den` in the given field; in F_p this is `num * den^{-1}`.
    pub fn ratio(num: i64, den: i64, field: FieldSpec) -> Result<Scalar> {
        Scalar::from_i64(num, field).div(&Scalar::from_i64(den, field))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Fp { value, .. } => *value == 1,
        }
    }

    fn check_same_field(&self, other: &Scalar) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Fp { value: a, modulus }, Scalar::Fp { value: b, .. }) => Scalar::Fp {
                value: (a + b) % modulus,
                modulus: *modulus,
            },
            _ => unreachable!(),
        })
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Fp { value: a, modulus }, Scalar::Fp { value: b, .. }) => Scalar::Fp {
                value: mulmod(*a, *b, *modulus),
                modulus: *modulus,
            },
            _ => unreachable!(),
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        self.mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Rational(r) => {
                if r.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(Scalar::Rational(r.recip()))
                }
            }
            Scalar::Fp { value, modulus } => Ok(Scalar::Fp {
                value: invmod(*value, *modulus)?,
                modulus: *modulus,
            }),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Fp { value, modulus } => Scalar::Fp {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }

    /// acc + a*b, the accumulation step every structure-constant loop uses.
    pub fn fma(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        self.add(&a.mul(b)?)
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
            Scalar::Fp { value, .. } => write!(f, "{value}"),
        }
    }
}

/// Parses "a/b" or "a" into a rational scalar.
pub fn parse_rational(s: &str) -> Result<Scalar> {
    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim().parse::<BigInt>().map_err(|_| Error::Parse {
            path: "scalar".into(),
            msg: format!("invalid integer `{t}`"),
        })
    };
    let r = match s.split_once('/') {
        Some((num, den)) => {
            let d = parse_int(den)?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            BigRational::new(parse_int(num)?, d)
        }
        None => BigRational::from_integer(parse_int(s)?),
    };
    Ok(Scalar::Rational(r))
}

impl Scalar {
    /// Rational canonical form as (numerator, denominator) strings.
    pub fn rational_parts(&self) -> Option<(String, String)> {
        match self {
            Scalar::Rational(r) => Some((r.numer().to_string(), r.denom().to_string())),
            Scalar::Fp { .. } => None,
        }
    }

    pub fn fp_value(&self) -> Option<u64> {
        match self {
            Scalar::Fp { value, .. } => Some(*value),
            Scalar::Rational(_) => None,
        }
    }
}
