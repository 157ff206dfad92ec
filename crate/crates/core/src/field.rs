//! Exact field arithmetic: arbitrary-precision rationals and prime fields.
//!
//! Every computation in this crate is exact; there is no floating point
//! anywhere, so equality of scalars, vectors and structure tables is decidable
//! by direct comparison.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// The ground field: the rationals or a prime field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    /// 0 for the rationals, `p` for `F_p`.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn is_prime_field(&self) -> bool {
        matches!(self, FieldSpec::Prime(_))
    }

    pub fn validate(&self) -> Result<(), FieldError> {
        match self {
            FieldSpec::Rationals => Ok(()),
            FieldSpec::Prime(p) => {
                if is_prime(*p) {
                    Ok(())
                } else {
                    Err(FieldError::NotPrime(*p))
                }
            }
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::zero()),
            FieldSpec::Prime(p) => Scalar::Fp { v: 0, p: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::one()),
            FieldSpec::Prime(p) => Scalar::Fp { v: 1 % p, p: *p },
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime(p) => {
                let r = n.rem_euclid(*p as i64) as u64;
                Scalar::Fp { v: r, p: *p }
            }
        }
    }

    /// Parse "a", "-a" or "a/b"; in `F_p` also accepts any integer residue.
    pub fn parse(&self, s: &str) -> Result<Scalar, FieldError> {
        let s = s.trim();
        match self {
            FieldSpec::Rationals => {
                let (num, den) = match s.split_once('/') {
                    Some((a, b)) => (a, b),
                    None => (s, "1"),
                };
                let n: BigInt = num
                    .parse()
                    .map_err(|_| FieldError::Parse(s.to_string()))?;
                let d: BigInt = den
                    .parse()
                    .map_err(|_| FieldError::Parse(s.to_string()))?;
                if d.is_zero() {
                    return Err(FieldError::Parse(s.to_string()));
                }
                Ok(Scalar::Rat(BigRational::new(n, d)))
            }
            FieldSpec::Prime(p) => {
                if let Some((a, b)) = s.split_once('/') {
                    let n: i64 = a.parse().map_err(|_| FieldError::Parse(s.to_string()))?;
                    let d: i64 = b.parse().map_err(|_| FieldError::Parse(s.to_string()))?;
                    let dv = self.from_i64(d);
                    let inv = dv.inv().map_err(|_| FieldError::Parse(s.to_string()))?;
                    Ok(self.from_i64(n).mul(&inv))
                } else {
                    let n: i64 = s.parse().map_err(|_| FieldError::Parse(s.to_string()))?;
                    let _ = p;
                    Ok(self.from_i64(n))
                }
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse scalar `{0}`")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalars from different fields")]
    FieldMismatch,
}

/// An exact field element. `F_p` residues are kept canonical in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Rat(BigRational),
    Fp { v: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rat(_) => FieldSpec::Rationals,
            Scalar::Fp { p, .. } => FieldSpec::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp { v, p } => *v == 1 % p,
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) => {
                assert_eq!(p, q, "prime field mismatch");
                Scalar::Fp {
                    v: (a + b) % p,
                    p: *p,
                }
            }
            _ => panic!("field mismatch in scalar addition"),
        }
    }

    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp { v, p } => Scalar::Fp {
                v: (p - v) % p,
                p: *p,
            },
        }
    }

    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) => {
                assert_eq!(p, q, "prime field mismatch");
                Scalar::Fp {
                    v: mulmod(*a, *b, *p),
                    p: *p,
                }
            }
            _ => panic!("field mismatch in scalar multiplication"),
        }
    }

    pub fn inv(&self) -> Result<Scalar, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        match self {
            Scalar::Rat(a) => Ok(Scalar::Rat(a.recip())),
            Scalar::Fp { v, p } => {
                // Fermat: v^(p-2) mod p
                Ok(Scalar::Fp {
                    v: powmod(*v, *p - 2, *p),
                    p: *p,
                })
            }
        }
    }

    pub fn div(&self, rhs: &Scalar) -> Result<Scalar, FieldError> {
        Ok(self.mul(&rhs.inv()?))
    }

    pub fn pow(&self, e: u64) -> Scalar {
        let mut acc = self.field().one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Serialized form: integer, "a/b" rational, or residue.
    pub fn to_coeff_string(&self) -> String {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { v, .. } => v.to_string(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else if r.is_negative() {
                    write!(f, "{}/{}", r.numer(), r.denom())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse() {
        let f = FieldSpec::Prime(7);
        for v in 1..7 {
            let x = f.from_i64(v);
            assert!(x.mul(&x.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn rational_parse_roundtrip() {
        let f = FieldSpec::Rationals;
        let x = f.parse("-3/4").unwrap();
        assert_eq!(x.to_coeff_string(), "-3/4");
        assert_eq!(f.parse("6/-8").unwrap(), x);
    }

    #[test]
    fn field_spec_validation() {
        assert!(FieldSpec::Prime(7).validate().is_ok());
        assert!(FieldSpec::Prime(6).validate().is_err());
        assert!(FieldSpec::Rationals.validate().is_ok());
    }

    #[test]
    fn residues_stay_canonical() {
        let f = FieldSpec::Prime(5);
        assert_eq!(f.from_i64(-3), f.from_i64(2));
        assert_eq!(f.from_i64(7).sub(&f.from_i64(9)), f.from_i64(3));
    }
}
