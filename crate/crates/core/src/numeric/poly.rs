//! Dense univariate polynomials over the rationals (ascending coefficients).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

pub type QPoly = Vec<BigRational>;

pub fn trim(mut p: QPoly) -> QPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn degree(p: &QPoly) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn derivative(p: &QPoly) -> QPoly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
            .collect(),
    )
}

fn sub(a: &QPoly, b: &QPoly) -> QPoly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| {
                let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
                let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
                x - y
            })
            .collect(),
    )
}

/// Quotient and remainder; `b` must be nonzero.
pub fn divrem(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    let b = trim(b.clone());
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut r = trim(a.clone());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let coef = r.last().unwrap() / &lead;
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &coef * bc;
        }
        q[shift] = coef;
        r.pop();
        r = trim(r);
    }
    (trim(q), r)
}

fn monic(p: QPoly) -> QPoly {
    match p.last() {
        Some(l) => {
            let l = l.clone();
            p.into_iter().map(|c| c / &l).collect()
        }
        None => p,
    }
}

pub fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
    let mut x = trim(a.clone());
    let mut y = trim(b.clone());
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    monic(x)
}

/// Square-free decomposition `p = c · ∏ f_i^i` (Yun). Returns `(f_i, i)`
/// for nonconstant factors only.
pub fn squarefree(p: &QPoly) -> Vec<(QPoly, usize)> {
    let p = monic(trim(p.clone()));
    let mut out = Vec::new();
    if degree(&p).unwrap_or(0) == 0 {
        return out;
    }
    let dp = derivative(&p);
    let a0 = gcd(&p, &dp);
    let mut b = divrem(&p, &a0).0;
    let c = divrem(&dp, &a0).0;
    let mut d = sub(&c, &derivative(&b));
    let mut i = 1;
    while degree(&b).unwrap_or(0) > 0 {
        let a = gcd(&b, &d);
        let nb = divrem(&b, &a).0;
        let nc = divrem(&d, &a).0;
        if degree(&a).unwrap_or(0) > 0 {
            out.push((a, i));
        }
        d = sub(&nc, &derivative(&nb));
        b = nb;
        i += 1;
    }
    out
}

/// Clears denominators and content, giving a primitive integer polynomial.
pub fn primitive_integer(p: &QPoly) -> Vec<BigInt> {
    let l = p
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .iter()
        .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return ints;
    }
    let sign = if ints.last().is_some_and(|c| c.is_negative()) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    ints.into_iter().map(|c| c / &g * &sign).collect()
}
