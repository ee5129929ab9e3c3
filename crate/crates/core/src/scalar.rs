//! Exact base-field scalars: arbitrary-precision rationals and odd prime fields.
//!
//! Every scalar carries its field. Mixing scalars from different fields is a
//! programming error and panics; fallible operations (inversion of zero)
//! return `Option`/`Result` instead. No floating point anywhere.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Base field descriptor: the rationals or a prime field of odd order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Field {
    Q,
    Fp(u64),
}

impl Field {
    /// Odd prime fields only; `p` must also be small enough that products of
    /// residues fit in a `u128`.
    pub fn prime(p: u64) -> Result<Field> {
        if p < 3 || p % 2 == 0 || p >= (1 << 32) {
            return Err(Error::InvalidInput(format!(
                "prime field order must be an odd prime < 2^32, got {p}"
            )));
        }
        if !crate::intutil::is_prime_u64(p) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        Ok(Field::Fp(p))
    }

    pub fn is_q(&self) -> bool {
        matches!(self, Field::Q)
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Q => 0,
            Field::Fp(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Q => Scalar::Rat(BigRational::zero()),
            Field::Fp(p) => Scalar::Fp { p: *p, val: 0 },
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Q => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            Field::Fp(p) => {
                let m = n.rem_euclid(*p as i64) as u64;
                Scalar::Fp { p: *p, val: m }
            }
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            Field::Q => Scalar::Rat(BigRational::from_integer(n.clone())),
            Field::Fp(p) => {
                let m = n.mod_floor_u64(*p);
                Scalar::Fp { p: *p, val: m }
            }
        }
    }

    /// All field elements, ascending; only for prime fields.
    pub fn elements(&self) -> Vec<Scalar> {
        match self {
            Field::Q => panic!("cannot enumerate the rationals"),
            Field::Fp(p) => (0..*p).map(|v| Scalar::Fp { p: *p, val: v }).collect(),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Q => write!(f, "Q"),
            Field::Fp(p) => write!(f, "F{p}"),
        }
    }
}

trait ModFloorU64 {
    fn mod_floor_u64(&self, p: u64) -> u64;
}

impl ModFloorU64 for BigInt {
    fn mod_floor_u64(&self, p: u64) -> u64 {
        use num_integer::Integer;
        let m = self.mod_floor(&BigInt::from(p));
        let (_, digits) = m.to_u64_digits();
        *digits.first().unwrap_or(&0)
    }
}

/// An exact element of the base field.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Scalar {
    Rat(BigRational),
    Fp { p: u64, val: u64 },
}

impl Scalar {
    pub fn from_rational(r: BigRational) -> Scalar {
        Scalar::Rat(r)
    }

    pub fn from_ratio(field: Field, n: i64, d: i64) -> Result<Scalar> {
        if d == 0 {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        let num = field.from_i64(n);
        let den = field.from_i64(d);
        den.inv()
            .map(|di| &num * &di)
            .ok_or_else(|| Error::InvalidInput(format!("{d} is not invertible in {field}")))
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Q,
            Scalar::Fp { p, .. } => Field::Fp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { val, .. } => *val == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp { val, .. } => *val == 1,
        }
    }

    pub fn as_rational(&self) -> &BigRational {
        match self {
            Scalar::Rat(r) => r,
            Scalar::Fp { .. } => panic!("expected a rational scalar"),
        }
    }

    pub fn fp_val(&self) -> u64 {
        match self {
            Scalar::Fp { val, .. } => *val,
            Scalar::Rat(_) => panic!("expected a prime-field scalar"),
        }
    }

    /// Integer value when the scalar is a rational integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        match self {
            Scalar::Rat(r) => r.is_integer().then(|| r.to_integer()),
            Scalar::Fp { val, .. } => Some(BigInt::from(*val)),
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rat(r) => (!r.is_zero()).then(|| Scalar::Rat(r.recip())),
            Scalar::Fp { p, val } => {
                (*val != 0).then(|| Scalar::Fp { p: *p, val: inv_mod(*val, *p) })
            }
        }
    }

    pub fn pow(&self, e: i64) -> Scalar {
        if e < 0 {
            return self.inv().expect("negative power of zero").pow(-e);
        }
        let mut result = self.field().one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        result
    }

    /// Legendre-symbol square test (prime fields) or exact rational square test.
    pub fn is_square(&self) -> bool {
        match self {
            Scalar::Rat(r) => {
                !r.is_negative()
                    && crate::intutil::perfect_sqrt(r.numer()).is_some()
                    && crate::intutil::perfect_sqrt(r.denom()).is_some()
            }
            Scalar::Fp { p, val } => {
                if *val == 0 {
                    return true;
                }
                pow_mod(*val, (*p - 1) / 2, *p) == 1
            }
        }
    }

    fn check_same_field(&self, other: &Scalar) {
        if self.field() != other.field() {
            panic!("field mismatch: {} vs {}", self.field(), other.field());
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r: u64 = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime
    pow_mod(a, p - 2, p)
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl std::ops::$trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.check_same_field(rhs);
                match (self, rhs) {
                    (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a $op b),
                    (Scalar::Fp { p, val: a }, Scalar::Fp { val: b, .. }) => {
                        scalar_binop!(@fp $method, *p, *a, *b)
                    }
                    _ => unreachable!(),
                }
            }
        }
    };
    (@fp add, $p:expr, $a:expr, $b:expr) => {
        Scalar::Fp { p: $p, val: ($a + $b) % $p }
    };
    (@fp sub, $p:expr, $a:expr, $b:expr) => {
        Scalar::Fp { p: $p, val: ($a + $p - $b) % $p }
    };
    (@fp mul, $p:expr, $a:expr, $b:expr) => {
        Scalar::Fp { p: $p, val: (($a as u128 * $b as u128) % $p as u128) as u64 }
    };
}

scalar_binop!(Add, add, +);
scalar_binop!(Sub, sub, -);
scalar_binop!(Mul, mul, *);

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Fp { p, val } => Scalar::Fp { p: *p, val: (*p - *val) % *p },
        }
    }
}

impl std::ops::Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero scalar")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { val, .. } => write!(f, "{val}"),
        }
    }
}

/// Parses "n" or "n/d" in the given field.
pub fn parse_scalar(field: Field, s: &str) -> Result<Scalar> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("bad integer: {t:?}")))
    };
    if let Some((n, d)) = s.split_once('/') {
        let n = parse_int(n)?;
        let d = parse_int(d)?;
        if d.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        let num = field.from_bigint(&n);
        let den = field.from_bigint(&d);
        den.inv()
            .map(|di| &num * &di)
            .ok_or_else(|| Error::Parse(format!("{d} not invertible in {field}")))
    } else {
        Ok(field.from_bigint(&parse_int(s)?))
    }
}

/// Canonical rational from a signed numerator/denominator pair of big integers.
pub fn rat(n: i64, d: i64) -> Scalar {
    Scalar::Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
}

/// Sign of a rational scalar: -1, 0, +1.
pub fn rat_sign(s: &Scalar) -> i32 {
    let r = s.as_rational();
    match r.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_is_reduced() {
        let a = rat(2, 4);
        let b = rat(1, 2);
        assert_eq!(a, b);
        assert_eq!(&a + &b, rat(1, 1));
        assert_eq!((&a * &b).to_string(), "1/4");
        assert_eq!((&a - &b), Field::Q.zero());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(7).unwrap();
        let a = f.from_i64(5);
        let b = f.from_i64(4);
        assert_eq!(&a * &b, f.from_i64(6));
        assert_eq!(&a + &b, f.from_i64(2));
        assert_eq!(a.inv().unwrap(), f.from_i64(3));
        assert_eq!(f.from_i64(-1), f.from_i64(6));
    }

    #[test]
    fn rejects_bad_moduli() {
        assert!(Field::prime(2).is_err());
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(15).is_err());
        assert!(Field::prime(10007).is_ok());
    }

    #[test]
    fn squares_in_f5() {
        let f = Field::prime(5).unwrap();
        let squares: Vec<u64> = (0..5)
            .filter(|&v| Scalar::Fp { p: 5, val: v }.is_square())
            .collect();
        assert_eq!(squares, vec![0, 1, 4]);
        let _ = f;
    }

    #[test]
    fn rational_square_test() {
        assert!(rat(4, 9).is_square());
        assert!(!rat(-4, 9).is_square());
        assert!(!rat(2, 1).is_square());
    }

    #[test]
    fn parse_round_trip() {
        let s = parse_scalar(Field::Q, "-3/4").unwrap();
        assert_eq!(s, rat(-3, 4));
        let t = parse_scalar(Field::prime(5).unwrap(), "7").unwrap();
        assert_eq!(t.fp_val(), 2);
        let u = parse_scalar(Field::prime(5).unwrap(), "1/2").unwrap();
        assert_eq!(u.fp_val(), 3);
    }
}
