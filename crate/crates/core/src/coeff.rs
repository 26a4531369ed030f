//! Coefficient rings.
//!
//! Everything algebraic in this crate is generic over [`Coeff`]. The two
//! implementations are exact rationals ([`Rational`]) and prime fields
//! ([`Fp`]). The modulus of `Fp` is a const parameter, so mixing rings is a
//! type error.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

pub use num_rational::BigRational as Rational;

/// The ring a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Ring {
    Integers,
    Rationals,
    PrimeField(u64),
}

impl Ring {
    /// Short label used in JSON output: `Z`, `Q`, `F2`, ...
    pub fn label(&self) -> String {
        match self {
            Ring::Integers => "Z".into(),
            Ring::Rationals => "Q".into(),
            Ring::PrimeField(p) => format!("F{p}"),
        }
    }

    pub fn parse_label(s: &str) -> Option<Ring> {
        match s {
            "Z" => Some(Ring::Integers),
            "Q" => Some(Ring::Rationals),
            _ => {
                let p: u64 = s.strip_prefix('F')?.parse().ok()?;
                is_prime_u64(p).then_some(Ring::PrimeField(p))
            }
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoeffParseError {
    #[error("malformed coefficient `{0}`")]
    Malformed(String),
    #[error("coefficient `{0}` is over a different ring than {1}")]
    RingMismatch(String, Ring),
    #[error("denominator of `{0}` is not invertible in {1}")]
    NotInvertible(String, Ring),
}

/// A commutative coefficient field with exact arithmetic.
pub trait Coeff:
    Clone
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn ring() -> Ring;
    fn from_i64(v: i64) -> Self;
    fn from_rational(q: &Rational) -> Option<Self>;
    fn inv(&self) -> Option<Self>;
    /// Parses `"p/q"`, `"k"` or `"k mod p"`.
    fn parse_coeff(s: &str) -> Result<Self, CoeffParseError>;
    /// Serialised form accepted by [`Coeff::parse_coeff`].
    fn to_coeff_string(&self) -> String;
}

fn parse_rational(s: &str) -> Result<Rational, CoeffParseError> {
    let t = s.trim();
    let bad = || CoeffParseError::Malformed(s.to_string());
    match t.split_once('/') {
        Some((a, b)) => {
            let n = BigInt::from_str(a.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(b.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(
            BigInt::from_str(t).map_err(|_| bad())?,
        )),
    }
}

fn split_mod(s: &str) -> Option<(&str, &str)> {
    s.split_once(" mod ")
}

impl Coeff for Rational {
    fn ring() -> Ring {
        Ring::Rationals
    }
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }
    fn from_rational(q: &Rational) -> Option<Self> {
        Some(q.clone())
    }
    fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
    fn parse_coeff(s: &str) -> Result<Self, CoeffParseError> {
        if split_mod(s).is_some() {
            return Err(CoeffParseError::RingMismatch(
                s.to_string(),
                Ring::Rationals,
            ));
        }
        parse_rational(s)
    }
    fn to_coeff_string(&self) -> String {
        self.to_string()
    }
}

/// Element of the prime field with `P` elements, stored reduced in `0..P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: u64) -> Self {
        Fp(v % P)
    }
    pub fn value(self) -> u64 {
        self.0
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.0, P)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Fp(((self.0 as u128 + o.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        if self.0 == 0 {
            self
        } else {
            Fp(P - self.0)
        }
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Fp(mul_mod(self.0, o.0, P))
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Coeff for Fp<P> {
    fn ring() -> Ring {
        Ring::PrimeField(P)
    }
    fn from_i64(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }
    fn from_rational(q: &Rational) -> Option<Self> {
        let n = reduce_bigint(q.numer(), P);
        let d = reduce_bigint(q.denom(), P);
        Fp::<P>(d).inv().map(|di| Fp::<P>(n) * di)
    }
    fn inv(&self) -> Option<Self> {
        (self.0 != 0).then(|| Fp(inv_mod(self.0, P).expect("nonzero residue mod a prime")))
    }
    fn parse_coeff(s: &str) -> Result<Self, CoeffParseError> {
        if let Some((k, p)) = split_mod(s) {
            let p: u64 = p
                .trim()
                .parse()
                .map_err(|_| CoeffParseError::Malformed(s.to_string()))?;
            if p != P {
                return Err(CoeffParseError::RingMismatch(s.to_string(), Self::ring()));
            }
            let k = BigInt::from_str(k.trim())
                .map_err(|_| CoeffParseError::Malformed(s.to_string()))?;
            return Ok(Fp(reduce_bigint(&k, P)));
        }
        let q = parse_rational(s)?;
        Self::from_rational(&q)
            .ok_or_else(|| CoeffParseError::NotInvertible(s.to_string(), Self::ring()))
    }
    fn to_coeff_string(&self) -> String {
        format!("{} mod {}", self.0, P)
    }
}

/// The field with two elements.
pub type F2 = Fp<2>;

pub(crate) fn reduce_bigint(v: &BigInt, p: u64) -> u64 {
    v.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits in u64")
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

pub(crate) fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let e = (a as i128).extended_gcd(&(p as i128));
    (e.gcd == 1).then(|| e.x.rem_euclid(p as i128) as u64)
}

/// Deterministic Miller-Rabin, exact for all `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
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

/// Renders a rational as `p/q` or `k`; used by JSON writers.
pub fn rational_string(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        let q = Rational::parse_coeff("-3/6").unwrap();
        assert_eq!(q, Rational::new(BigInt::from(-1), BigInt::from(2)));
        assert_eq!(
            Rational::parse_coeff("1 mod 2").unwrap_err(),
            CoeffParseError::RingMismatch("1 mod 2".into(), Ring::Rationals)
        );
        let a = Fp::<7>::parse_coeff("1/3").unwrap();
        assert_eq!(a * Fp::<7>::from_i64(3), Fp::<7>::one());
        assert_eq!(Fp::<7>::parse_coeff("3 mod 7").unwrap().value(), 3);
        assert!(Fp::<7>::parse_coeff("3 mod 5").is_err());
        assert!(Fp::<2>::parse_coeff("1/2").is_err());
    }

    #[test]
    fn field_axioms_small() {
        for a in 0..11u64 {
            let x = Fp::<11>::new(a);
            if a != 0 {
                assert_eq!(x * x.inv().unwrap(), Fp::one());
            }
            assert_eq!(x + (-x), Fp::zero());
        }
        assert_eq!(F2::one() + F2::one(), F2::zero());
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(is_prime_u64(1_000_000_007));
        assert!(!is_prime_u64(1_000_000_007 * 3));
        assert_eq!(Ring::parse_label("F2"), Some(Ring::PrimeField(2)));
        assert_eq!(Ring::parse_label("F4"), None);
    }
}
