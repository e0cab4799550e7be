//! Small exact-arithmetic helpers shared across modules.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn parse_rational(s: &str) -> crate::Result<BigRational> {
    s.trim()
        .parse::<BigRational>()
        .map_err(|_| crate::Error::Parse(format!("bad rational literal {s:?}")))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Integer binomial coefficient C(n, k) for n >= 0.
pub fn binom_int(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Generalized binomial x(x-1)...(x-k+1)/k! for rational x.
pub fn binom_rat(x: &BigRational, k: u64) -> BigRational {
    let mut acc = BigRational::one();
    for i in 0..k {
        acc = acc * (x - rat(i as i64)) / rat(i as i64 + 1);
    }
    acc
}

pub fn rat_pow(x: &BigRational, e: i64) -> BigRational {
    if e >= 0 {
        num::pow::pow(x.clone(), e as usize)
    } else {
        num::pow::pow(x.recip(), (-e) as usize)
    }
}

pub fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // Fallback for huge numerators and denominators.
        let n = x.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = x.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

pub fn from_f64(x: f64) -> BigRational {
    BigRational::from_float(x).unwrap_or_else(BigRational::zero)
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    num::integer::gcd(a, b)
}

pub fn abs_rat(x: &BigRational) -> BigRational {
    x.abs()
}
