//! Truncated formal power series in one variable `z` over an exact
//! commutative ring containing the rationals.
//!
//! The coefficient ring is abstracted by [`Ring`]. Elements carry enough
//! context to build their own zero and one (a Laurent polynomial needs
//! its number of variables), so the trait has `zero_like`/`one_like`
//! rather than associated constants.

use crate::error::{Error, Result};
use crate::util::rat;
use num::rational::BigRational;
use num::{One, Zero};
use std::fmt::Debug;

/// Exact commutative ring with a rational scalar action.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn vanishes(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    fn scale(&self, c: &BigRational) -> Self;

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negate())
    }

    fn from_rational_like(&self, c: &BigRational) -> Self {
        self.one_like().scale(c)
    }

    fn pow_u(&self, e: u32) -> Self {
        let mut acc = self.one_like();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        acc
    }
}

/// A ring that also carries the auxiliary genus variable `γ = g − 1`.
pub trait GammaRing: Ring {
    fn gamma_like(&self) -> Self;
    /// Exact division by `γ`; fails if some term has no `γ` factor.
    fn div_gamma(&self) -> Result<Self>;
}

impl Ring for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn scale(&self, c: &BigRational) -> Self {
        self * c
    }
}

/// Power series `c_0 + c_1 z + … + c_N z^N`, truncated at `cap = N`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> TruncatedSeries<R> {
    /// Builds a series from coefficients, padding or truncating to `cap + 1`.
    pub fn from_coeffs(mut coeffs: Vec<R>, cap: usize, template: &R) -> Self {
        coeffs.resize(cap + 1, template.zero_like());
        coeffs.truncate(cap + 1);
        TruncatedSeries { coeffs }
    }

    pub fn zero(cap: usize, template: &R) -> Self {
        TruncatedSeries {
            coeffs: vec![template.zero_like(); cap + 1],
        }
    }

    pub fn one(cap: usize, template: &R) -> Self {
        let mut s = Self::zero(cap, template);
        s.coeffs[0] = template.one_like();
        s
    }

    pub fn cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, v: usize) -> Result<&R> {
        self.coeffs.get(v).ok_or(Error::Range {
            index: v,
            cap: self.cap(),
        })
    }

    pub fn set_coeff(&mut self, v: usize, c: R) -> Result<()> {
        let cap = self.cap();
        let slot = self
            .coeffs
            .get_mut(v)
            .ok_or(Error::Range { index: v, cap })?;
        *slot = c;
        Ok(())
    }

    fn template(&self) -> &R {
        &self.coeffs[0]
    }

    pub fn plus(&self, other: &Self) -> Self {
        let cap = self.cap().min(other.cap());
        let coeffs = (0..=cap)
            .map(|i| self.coeffs[i].plus(&other.coeffs[i]))
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|x| x.scale(c)).collect(),
        }
    }

    /// Multiplies every coefficient by a ring element.
    pub fn scale_ring(&self, a: &R) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|x| x.times(a)).collect(),
        }
    }

    /// Cauchy product, truncated at the smaller cap.
    pub fn times(&self, other: &Self) -> Self {
        let cap = self.cap().min(other.cap());
        let zero = self.template().zero_like();
        let mut coeffs = vec![zero; cap + 1];
        for i in 0..=cap {
            if self.coeffs[i].vanishes() {
                continue;
            }
            for j in 0..=(cap - i) {
                if other.coeffs[j].vanishes() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].plus(&self.coeffs[i].times(&other.coeffs[j]));
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Formal exponential via `n e_n = Σ_{k=1}^n k s_k e_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].vanishes() {
            return Err(Error::Argument(
                "exp needs a series with zero constant term".into(),
            ));
        }
        let cap = self.cap();
        let t = self.template().clone();
        let mut e = vec![t.one_like()];
        for n in 1..=cap {
            let mut acc = t.zero_like();
            for k in 1..=n {
                if self.coeffs[k].vanishes() || e[n - k].vanishes() {
                    continue;
                }
                acc = acc.plus(&self.coeffs[k].scale(&rat(k as i64)).times(&e[n - k]));
            }
            e.push(acc.scale(&BigRational::new(1.into(), (n as i64).into())));
        }
        Ok(TruncatedSeries { coeffs: e })
    }

    /// Formal logarithm via `n l_n = n s_n − Σ_{k=1}^{n−1} k l_k s_{n−k}`.
    pub fn log(&self) -> Result<Self> {
        let one = self.template().one_like();
        if self.coeffs[0] != one {
            return Err(Error::Argument(
                "log needs a series with constant term 1".into(),
            ));
        }
        let cap = self.cap();
        let mut l = vec![one.zero_like()];
        for n in 1..=cap {
            let mut acc = self.coeffs[n].scale(&rat(n as i64));
            for k in 1..n {
                if l[k].vanishes() || self.coeffs[n - k].vanishes() {
                    continue;
                }
                acc = acc.minus(&l[k].scale(&rat(k as i64)).times(&self.coeffs[n - k]));
            }
            l.push(acc.scale(&BigRational::new(1.into(), (n as i64).into())));
        }
        Ok(TruncatedSeries { coeffs: l })
    }

    /// `exp(α · log s)` for a ring element `α`.
    pub fn pow_scalar(&self, alpha: &R) -> Result<Self> {
        self.log()?.scale_ring(alpha).exp()
    }

    /// Substitutes `z ↦ z^l`, keeping the cap.
    pub fn stretch(&self, l: usize) -> Result<Self> {
        if l == 0 {
            return Err(Error::Argument("stretch factor must be >= 1".into()));
        }
        let cap = self.cap();
        let mut out = Self::zero(cap, self.template());
        for (i, c) in self.coeffs.iter().enumerate() {
            if i * l > cap {
                break;
            }
            out.coeffs[i * l] = c.clone();
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::ratio;

    fn q(coeffs: &[(i64, i64)], cap: usize) -> TruncatedSeries<BigRational> {
        TruncatedSeries::from_coeffs(
            coeffs.iter().map(|&(n, d)| ratio(n, d)).collect(),
            cap,
            &rat(0),
        )
    }

    #[test]
    fn exp_of_z() {
        let s = q(&[(0, 1), (1, 1)], 3);
        assert_eq!(s.exp().unwrap(), q(&[(1, 1), (1, 1), (1, 2), (1, 6)], 3));
        assert_eq!(q(&[], 4).exp().unwrap(), TruncatedSeries::one(4, &rat(0)));
    }

    #[test]
    fn exp_rejects_constant() {
        assert!(matches!(q(&[(1, 1)], 2).exp(), Err(Error::Argument(_))));
    }

    #[test]
    fn log_exp_roundtrip() {
        let s = q(&[(1, 1), (1, 1)], 6);
        assert_eq!(s.log().unwrap().exp().unwrap(), s);
        assert!(TruncatedSeries::one(3, &rat(0)).log().unwrap().coeffs().iter().all(|c| c.is_zero()));
        assert!(matches!(q(&[(2, 1)], 2).log(), Err(Error::Argument(_))));
    }

    #[test]
    fn log_of_square_doubles() {
        let s = q(&[(1, 1), (1, 1)], 7);
        let lhs = s.times(&s).log().unwrap();
        let rhs = s.log().unwrap().scale(&rat(2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn scalar_powers() {
        let s = q(&[(1, 1), (1, 1)], 2);
        assert_eq!(s.pow_scalar(&rat(2)).unwrap(), q(&[(1, 1), (2, 1), (1, 1)], 2));
        assert_eq!(s.pow_scalar(&rat(0)).unwrap(), TruncatedSeries::one(2, &rat(0)));
        let h = q(&[(1, 1), (1, 1)], 8).pow_scalar(&ratio(1, 2)).unwrap();
        assert_eq!(h.times(&h), q(&[(1, 1), (1, 1)], 8));
    }

    #[test]
    fn stretch_and_coeff() {
        let s = q(&[(1, 1), (1, 1)], 4);
        assert_eq!(s.stretch(2).unwrap(), q(&[(1, 1), (0, 1), (1, 1)], 4));
        assert_eq!(s.stretch(1).unwrap(), s);
        let e = q(&[(0, 1), (1, 1)], 5).exp().unwrap().stretch(2).unwrap();
        assert!(e.coeff(3).unwrap().is_zero());
        assert_eq!(*q(&[(0, 1), (1, 1)], 3).exp().unwrap().coeff(2).unwrap(), ratio(1, 2));
        assert!(TruncatedSeries::one(5, &rat(0)).coeff(5).unwrap().is_zero());
        assert!(matches!(s.coeff(9), Err(Error::Range { index: 9, cap: 4 })));
    }
}
