//! Evaluation of Weil-invariant Laurent polynomials at the Frobenius
//! eigenvalues of a curve.

use super::LaurentPoly;
use crate::error::{Error, Result};
use crate::numeric::ball::Ball;
use crate::numeric::poly::{primitive_integer, squarefree, QPoly};
use crate::numeric::roots::{aberth_f64, isolate};
use crate::series::Ring;
use num::bigint::BigInt;
use num::complex::Complex64;
use num::rational::BigRational;
use num::{Integer, One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// Evaluation gives up once this many bits do not suffice.
pub const MAX_PRECISION_BITS: u32 = 16384;
const START_PRECISION_BITS: u32 = 128;

/// Genus, field size and zeta numerator `P(z) = Σ b_j z^j = ∏ (1 − α_i z)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveInput {
    pub g: usize,
    pub q: i64,
    pub numerator: Vec<i64>,
}

fn is_prime_power(mut q: i64) -> bool {
    if q < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            while q % p == 0 {
                q /= p;
            }
            return q == 1;
        }
        p += 1;
    }
    true
}

impl CurveInput {
    pub fn new(g: usize, q: i64, numerator: Vec<i64>) -> Result<Self> {
        let c = CurveInput { g, q, numerator };
        c.validate()?;
        Ok(c)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let c: CurveInput = serde_json::from_str(s)?;
        c.validate()?;
        Ok(c)
    }

    /// Checks shape, `b_0 = 1` and `b_{2g−k} = q^{g−k} b_k`.
    pub fn validate(&self) -> Result<()> {
        if self.g == 0 {
            return Err(Error::Argument("genus must be at least 1".into()));
        }
        if !is_prime_power(self.q) {
            return Err(Error::Argument(format!("q={} is not a prime power", self.q)));
        }
        if self.numerator.len() != 2 * self.g + 1 {
            return Err(Error::Argument(format!(
                "numerator needs {} coefficients for g={}, got {}",
                2 * self.g + 1,
                self.g,
                self.numerator.len()
            )));
        }
        if self.numerator[0] != 1 {
            return Err(Error::Argument("numerator must have constant term 1".into()));
        }
        let q = BigInt::from(self.q);
        let b = self.numerator_big();
        for k in 0..=self.g {
            let lhs = &b[2 * self.g - k];
            let rhs = num::pow::pow(q.clone(), self.g - k) * &b[k];
            if *lhs != rhs {
                return Err(Error::Argument(format!(
                    "functional equation fails at k={k}: b_{} = {lhs}, expected {rhs}",
                    2 * self.g - k
                )));
            }
        }
        Ok(())
    }

    pub fn numerator_big(&self) -> Vec<BigInt> {
        self.numerator.iter().map(|&c| BigInt::from(c)).collect()
    }

    /// Coefficients of `∏ (1 − α_i^k z)`.
    pub fn frobenius_numerator(&self, k: u32) -> Result<Vec<BigInt>> {
        graeffe_power(&self.numerator_big(), k)
    }

    /// Human-readable notes for reciprocal roots off the circle `|α| = √q`.
    pub fn weil_warnings(&self) -> Vec<String> {
        let n = 2 * self.g;
        let rev: Vec<Complex64> = (0..=n)
            .map(|i| Complex64::new(self.numerator[n - i] as f64, 0.0))
            .collect();
        let target = (self.q as f64).sqrt();
        aberth_f64(&rev)
            .into_iter()
            .filter(|a| (a.norm() - target).abs() > 1e-6 * target)
            .map(|a| {
                format!(
                    "reciprocal root {:.6}{:+.6}i has modulus {:.6}, expected {:.6}",
                    a.re,
                    a.im,
                    a.norm(),
                    target
                )
            })
            .collect()
    }
}

/// Maps `∏ (1 − α_i z)` to `∏ (1 − α_i^k z)` using Newton's identities
/// over the integers; every division is checked to be exact.
pub fn graeffe_power(coeffs: &[BigInt], k: u32) -> Result<Vec<BigInt>> {
    if k == 0 {
        return Err(Error::Argument("Frobenius power must be positive".into()));
    }
    let Some(n) = coeffs.iter().rposition(|c| !c.is_zero()) else {
        return Err(Error::Argument("zero polynomial".into()));
    };
    if !coeffs[0].is_one() {
        return Err(Error::Argument("constant term must be 1".into()));
    }
    let sign = |j: usize| if j.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    let e: Vec<BigInt> = (0..=n).map(|j| &coeffs[j] * sign(j)).collect();
    let k = k as usize;
    let top = n * k;
    let mut p = vec![BigInt::zero(); top + 1];
    for m in 1..=top {
        let mut acc = BigInt::zero();
        for i in 1..m.min(n + 1) {
            acc += sign(i - 1) * &e[i] * &p[m - i];
        }
        if m <= n {
            acc += sign(m - 1) * BigInt::from(m) * &e[m];
        }
        p[m] = acc;
    }
    let pk: Vec<BigInt> = (0..=n).map(|m| p[m * k].clone()).collect();
    let mut ek = vec![BigInt::one()];
    for m in 1..=n {
        let mut acc = BigInt::zero();
        for i in 1..=m {
            acc += sign(i - 1) * &ek[m - i] * &pk[i];
        }
        let (quo, rem) = acc.div_rem(&BigInt::from(m));
        if !rem.is_zero() {
            return Err(Error::Internal(format!(
                "Newton reconstruction not integral at degree {m}"
            )));
        }
        ek.push(quo);
    }
    Ok(ek.into_iter().enumerate().map(|(j, c)| c * sign(j)).collect())
}

/// Roots of the reciprocal polynomial grouped into `g` Weil pairs
/// `(α, q/α)`, all at a common precision.
fn weil_pairs(curve: &CurveInput, prec: u32) -> Result<Option<Vec<(Ball, Ball)>>> {
    let n = 2 * curve.g;
    let rev: QPoly = (0..=n)
        .map(|i| BigRational::from_integer(BigInt::from(curve.numerator[n - i])))
        .collect();
    let mut classes: Vec<(Ball, usize)> = Vec::new();
    for (factor, mult) in squarefree(&rev) {
        let ints = primitive_integer(&factor);
        let Some(balls) = isolate(&ints, prec) else {
            return Ok(None);
        };
        classes.extend(balls.into_iter().map(|b| (b, mult)));
    }
    let q = BigInt::from(curve.q);
    let mut partner = vec![usize::MAX; classes.len()];
    for i in 0..classes.len() {
        let hits: Vec<usize> = (0..classes.len())
            .filter(|&j| classes[i].0.mul(&classes[j].0).contains_int(&q))
            .collect();
        if hits.len() != 1 {
            return Ok(None);
        }
        partner[i] = hits[0];
    }
    let mut pairs = Vec::with_capacity(curve.g);
    for i in 0..classes.len() {
        let j = partner[i];
        if partner[j] != i || classes[i].1 != classes[j].1 {
            return Ok(None);
        }
        let m = classes[i].1;
        if i == j {
            if m % 2 == 1 {
                return Err(Error::Argument(
                    "self-paired Weil root with odd multiplicity".into(),
                ));
            }
            for _ in 0..m / 2 {
                pairs.push((classes[i].0.clone(), classes[i].0.clone()));
            }
        } else if i < j {
            for _ in 0..m {
                pairs.push((classes[i].0.clone(), classes[j].0.clone()));
            }
        }
    }
    if pairs.len() != curve.g {
        return Err(Error::Argument(format!(
            "found {} Weil pairs, expected {}",
            pairs.len(),
            curve.g
        )));
    }
    Ok(Some(pairs))
}

/// Ball enclosing `p(t = q^k, z_i = α_i^k)`, with `z_i^{-1} = (q/α_i)^k / q^k`.
fn enclose(p: &LaurentPoly, pairs: &[(Ball, Ball)], q: i64, k: u32) -> Ball {
    let prec = pairs[0].0.prec;
    let up: Vec<Ball> = pairs.iter().map(|(a, _)| a.pow(k)).collect();
    let down: Vec<Ball> = pairs.iter().map(|(_, b)| b.pow(k)).collect();
    let mut cache: HashMap<(usize, bool, u32), Ball> = HashMap::new();
    let mut power = |i: usize, neg: bool, e: u32| -> Ball {
        cache
            .entry((i, neg, e))
            .or_insert_with(|| if neg { down[i].pow(e) } else { up[i].pow(e) })
            .clone()
    };
    let qk = num::pow::pow(BigRational::from_integer(BigInt::from(q)), k as usize);
    let mut total = Ball::zero(prec);
    for (m, c) in p.terms() {
        let mut shift = m.t;
        let mut b = Ball::one(prec);
        for (i, &e) in m.z.iter().enumerate() {
            if e > 0 {
                b = b.mul(&power(i, false, e as u32));
            } else if e < 0 {
                b = b.mul(&power(i, true, (-e) as u32));
                shift += e;
            }
        }
        let scale = c * crate::util::rat_pow(&qk, shift);
        total = total.add(&b.scale(&scale));
    }
    total
}

fn evaluate_inner(
    p: &LaurentPoly,
    curve: &CurveInput,
    k: u32,
    gamma_value: i64,
    flips: &[bool],
) -> Result<BigInt> {
    curve.validate()?;
    if k == 0 {
        return Err(Error::Argument("Frobenius power must be positive".into()));
    }
    if p.g() != curve.g {
        return Err(Error::Dimension(format!(
            "polynomial has g={}, curve has g={}",
            p.g(),
            curve.g
        )));
    }
    if !p.is_weil_invariant() {
        return Err(Error::Invariance);
    }
    let p0 = p.substitute_gamma(&BigRational::from_integer(BigInt::from(gamma_value)));
    let den = p0
        .terms()
        .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let scaled = p0.scale(&BigRational::from_integer(den.clone()));
    if scaled.vanishes() {
        return Ok(BigInt::zero());
    }
    let mut prec = START_PRECISION_BITS;
    let mut last_width = f64::INFINITY;
    loop {
        if let Some(mut pairs) = weil_pairs(curve, prec)? {
            for (pair, &f) in pairs.iter_mut().zip(flips) {
                if f {
                    std::mem::swap(&mut pair.0, &mut pair.1);
                }
            }
            let ball = enclose(&scaled, &pairs, curve.q, k);
            last_width = ball.width();
            if let Some(v) = ball.unique_integer() {
                let (quo, rem) = v.div_rem(&den);
                if !rem.is_zero() {
                    return Err(Error::Integrality(format!(
                        "value {v}/{den} is not an integer"
                    )));
                }
                return Ok(quo);
            }
        }
        if prec >= MAX_PRECISION_BITS {
            return Err(Error::Precision {
                bits: prec as u64,
                detail: format!("enclosure width {last_width:e} still at least 0.5"),
            });
        }
        prec *= 2;
    }
}

/// Exact value of `p` at `t = q^k`, `z_i = σ_i^k`, with `γ = gamma_value`.
///
/// Uses ball arithmetic with doubling precision and rounds once the
/// enclosure pins down a single integer.
pub fn evaluate_at_curve(
    p: &LaurentPoly,
    curve: &CurveInput,
    k: u32,
    gamma_value: i64,
) -> Result<BigInt> {
    evaluate_inner(p, curve, k, gamma_value, &[])
}

/// Value of the integer polynomial `coeffs` at `x`.
pub fn eval_int_poly(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    coeffs
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| acc * x + c)
}
