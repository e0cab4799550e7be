//! `(G,M)`-families built from one function per root, their limits at 1,
//! and the zero/pole count obtained by integrating them.
//!
//! Chambers of a Levi with `r` blocks are the `r!` orderings `σ`; the
//! simple coroots of `σ` pair with `μ` as `μ_{σ(i)} − μ_{σ(i+1)}`.

use super::permutations;
use super::trees::spanning_tree_sum;
use crate::error::{Error, Result};
use crate::numeric::roots::count_inside_unit_disc;
use crate::series::TruncatedSeries;
use crate::util::{rat, ratio, to_f64};
use num::complex::Complex64;
use num::rational::BigRational;
use num::{One, Zero};
use rand::Rng;
use serde::Serialize;
use std::collections::BTreeMap;

/// Polynomial `Σ c_i z^i` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly(pub Vec<BigRational>);

impl Serialize for UniPoly {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_seq(self.0.iter().map(|c| c.to_string()))
    }
}

impl UniPoly {
    pub fn from_ints(c: &[i64]) -> Self {
        UniPoly(c.iter().map(|&x| rat(x)).collect())
    }

    /// `z^a`.
    pub fn monomial(a: usize) -> Self {
        let mut c = vec![BigRational::zero(); a + 1];
        c[a] = BigRational::one();
        UniPoly(c)
    }

    pub fn eval(&self, z: &BigRational) -> BigRational {
        self.0.iter().rev().fold(BigRational::zero(), |acc, c| acc * z + c)
    }

    pub fn eval_c(&self, z: Complex64) -> Complex64 {
        self.0.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + to_f64(c))
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    /// `c(z(t))` for a series `z(t)`.
    pub fn compose(&self, z: &TruncatedSeries<BigRational>) -> TruncatedSeries<BigRational> {
        let zero = BigRational::zero();
        let mut acc = TruncatedSeries::zero(z.cap(), &zero);
        for c in self.0.iter().rev() {
            acc = acc.times(z);
            let mut constant = TruncatedSeries::one(z.cap(), &zero);
            constant = constant.scale(c);
            acc = acc.plus(&constant);
        }
        acc
    }

    pub fn complex_coeffs(&self) -> Vec<Complex64> {
        self.0.iter().map(|c| Complex64::new(to_f64(c), 0.0)).collect()
    }
}

/// One function `c_β` per ordered pair `(a, b)`, `β∨ = ψ_a − ψ_b`.
#[derive(Clone, Debug, PartialEq)]
pub struct GmFamily {
    pub r: usize,
    pub c: BTreeMap<(usize, usize), UniPoly>,
}

impl GmFamily {
    pub fn new(r: usize, c: BTreeMap<(usize, usize), UniPoly>) -> Result<Self> {
        if r == 0 {
            return Err(Error::Argument("r must be positive".into()));
        }
        for a in 0..r {
            for b in 0..r {
                if a == b {
                    continue;
                }
                let p = c
                    .get(&(a, b))
                    .ok_or_else(|| Error::Argument(format!("missing c for root ({a},{b})")))?;
                if p.eval(&BigRational::one()) != BigRational::one() {
                    return Err(Error::Argument(format!("c for root ({a},{b}) is not 1 at 1")));
                }
            }
        }
        Ok(GmFamily { r, c })
    }

    /// `{"r": r, "c": [[a, b, [coefficients]], …]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let c: Vec<serde_json::Value> = self
            .c
            .iter()
            .map(|(&(a, b), p)| serde_json::json!([a, b, p]))
            .collect();
        serde_json::json!({ "r": self.r, "c": c })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let bad = || Error::Parse("malformed (G,M) family".into());
        let r = v["r"].as_u64().ok_or_else(bad)? as usize;
        let mut c = BTreeMap::new();
        for entry in v["c"].as_array().ok_or_else(bad)? {
            let a = entry[0].as_u64().ok_or_else(bad)? as usize;
            let b = entry[1].as_u64().ok_or_else(bad)? as usize;
            let coeffs = entry[2]
                .as_array()
                .ok_or_else(bad)?
                .iter()
                .map(|x| x.as_str().ok_or_else(bad).and_then(crate::util::parse_rational))
                .collect::<Result<Vec<_>>>()?;
            c.insert((a, b), UniPoly(coeffs));
        }
        GmFamily::new(r, c)
    }

    fn get(&self, a: usize, b: usize) -> &UniPoly {
        &self.c[&(a, b)]
    }

    /// `Σ_T ∏_{{a,b}∈T} (c'_{ab}(1) + c'_{ba}(1))`: the sum over bases made of roots.
    pub fn tree_sum(&self) -> Result<BigRational> {
        let one = BigRational::one();
        spanning_tree_sum(
            self.r,
            |a, b| self.get(a, b).derivative().eval(&one) + self.get(b, a).derivative().eval(&one),
            &one,
        )
    }

    /// Exact `[t^{r−1}] Σ_σ c_σ(1 + ξt)/θ_σ(ξ)`, the limit at `μ = 1`.
    pub fn series_limit(&self, xi: &[BigRational]) -> Result<BigRational> {
        self.check_direction(xi)?;
        let cap = self.r - 1;
        let zero = BigRational::zero();
        let mut ratio_series = BTreeMap::new();
        for (&(a, b), p) in &self.c {
            // (1 + ξ_a t)/(1 + ξ_b t)
            let mut num = vec![BigRational::one(), xi[a].clone()];
            num.resize(cap + 1, zero.clone());
            let num = TruncatedSeries::from_coeffs(num, cap, &zero);
            let den: Vec<BigRational> = (0..=cap).map(|k| crate::util::rat_pow(&-xi[b].clone(), k as i64)).collect();
            let z = num.times(&TruncatedSeries::from_coeffs(den, cap, &zero));
            ratio_series.insert((a, b), p.compose(&z));
        }
        let mut total = BigRational::zero();
        for sigma in permutations(self.r) {
            let mut prod = TruncatedSeries::one(cap, &zero);
            for i in 0..self.r {
                for j in i + 1..self.r {
                    prod = prod.times(&ratio_series[&(sigma[i], sigma[j])]);
                }
            }
            let theta: BigRational = (0..self.r - 1).map(|i| &xi[sigma[i]] - &xi[sigma[i + 1]]).product();
            total += prod.coeff(cap)? / theta;
        }
        Ok(total)
    }

    /// `Σ_σ c_σ(μ)/θ_σ(μ)` at `μ = 1 + ξt`, exactly.
    pub fn singular_sum(&self, xi: &[BigRational], t: &BigRational) -> Result<BigRational> {
        self.check_direction(xi)?;
        let mu: Vec<BigRational> = xi.iter().map(|x| BigRational::one() + x * t).collect();
        let mut values = BTreeMap::new();
        for (&(a, b), p) in &self.c {
            values.insert((a, b), p.eval(&(&mu[a] / &mu[b])));
        }
        let mut total = BigRational::zero();
        for sigma in permutations(self.r) {
            let mut c = BigRational::one();
            for i in 0..self.r {
                for j in i + 1..self.r {
                    c *= &values[&(sigma[i], sigma[j])];
                }
            }
            let theta: BigRational = (0..self.r - 1).map(|i| &mu[sigma[i]] - &mu[sigma[i + 1]]).product();
            total += c / theta;
        }
        Ok(total)
    }

    /// Neville–Richardson extrapolation of [`Self::singular_sum`] to `t = 0`
    /// from `t = h, h/2, …, h/2^{levels−1}`; returns the estimate and the gap
    /// between the last two tableau diagonals.
    pub fn extrapolated_limit(&self, xi: &[BigRational], h: &BigRational, levels: usize) -> Result<(f64, f64)> {
        if levels < 2 {
            return Err(Error::Argument("extrapolation needs at least two levels".into()));
        }
        let ts: Vec<BigRational> = (0..levels).map(|k| h / rat(1i64 << k)).collect();
        let mut p: Vec<BigRational> = ts.iter().map(|t| self.singular_sum(xi, t)).collect::<Result<_>>()?;
        let mut prev_best = p[0].clone();
        let mut best = p[0].clone();
        for m in 1..levels {
            for i in 0..levels - m {
                // value at 0 of the interpolant through t_i..t_{i+m}
                let v = (&ts[i + m] * &p[i] - &ts[i] * &p[i + 1]) / (&ts[i + m] - &ts[i]);
                p[i] = v;
            }
            prev_best = best;
            best = p[0].clone();
        }
        Ok((to_f64(&best), (to_f64(&best) - to_f64(&prev_best)).abs()))
    }

    fn check_direction(&self, xi: &[BigRational]) -> Result<()> {
        if xi.len() != self.r {
            return Err(Error::Dimension(format!("direction has {} entries, need {}", xi.len(), self.r)));
        }
        for i in 0..self.r {
            for j in i + 1..self.r {
                if xi[i] == xi[j] {
                    return Err(Error::Argument("direction must be regular (distinct entries)".into()));
                }
            }
        }
        Ok(())
    }
}

/// The paths compared by [`gm_family_limit`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GmLimit {
    pub tree_sum: String,
    pub series_limit: String,
    pub extrapolated: f64,
    pub residual: f64,
}

impl GmLimit {
    pub fn agrees(&self, tol: f64) -> bool {
        self.tree_sum == self.series_limit
            && (self.extrapolated - self.tree_sum.parse::<BigRational>().map(|x| to_f64(&x)).unwrap_or(f64::NAN)).abs()
                <= tol
    }
}

/// A fixed regular direction `ξ_i = (i+1)²/7 − i/3`.
pub fn generic_direction(r: usize) -> Vec<BigRational> {
    (0..r).map(|i| ratio(((i + 1) * (i + 1)) as i64, 7) - ratio(i as i64, 3)).collect()
}

/// Tree sum, exact series limit and numeric extrapolation of the family.
pub fn gm_family_limit(fam: &GmFamily, tol: f64) -> Result<GmLimit> {
    if fam.r > 5 {
        return Err(Error::Argument("(G,M) limits are evaluated for r <= 5".into()));
    }
    let xi = generic_direction(fam.r);
    let tree = fam.tree_sum()?;
    let series = fam.series_limit(&xi)?;
    let (extrapolated, residual) = if fam.r == 1 {
        (to_f64(&series), 0.0)
    } else {
        fam.extrapolated_limit(&xi, &ratio(1, 32), 10)?
    };
    if residual > tol {
        return Err(Error::Numeric(format!("extrapolation residual {residual:e} above {tol:e}")));
    }
    Ok(GmLimit {
        tree_sum: tree.to_string(),
        series_limit: series.to_string(),
        extrapolated,
        residual,
    })
}

/// Random family of polynomials of degree ≤ `deg` normalized by `c(1) = 1`.
pub fn random_family<G: Rng>(r: usize, deg: usize, rng: &mut G) -> GmFamily {
    let mut c = BTreeMap::new();
    for a in 0..r {
        for b in 0..r {
            if a == b {
                continue;
            }
            let mut coeffs: Vec<BigRational> = (0..=deg)
                .map(|_| ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3)))
                .collect();
            let at_one: BigRational = coeffs.iter().sum();
            coeffs[0] += BigRational::one() - at_one;
            c.insert((a, b), UniPoly(coeffs));
        }
    }
    GmFamily::new(r, c).expect("normalized by construction")
}

/// A rational function `num/den` with no zeros or poles on `|z| = 1`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RationalFn {
    pub num: UniPoly,
    pub den: UniPoly,
}

impl RationalFn {
    pub fn one() -> Self {
        RationalFn {
            num: UniPoly::from_ints(&[1]),
            den: UniPoly::from_ints(&[1]),
        }
    }

    /// `∏ (1 − z/ρ)` over `zeros` divided by the same over `poles`.
    pub fn from_roots(zeros: &[BigRational], poles: &[BigRational]) -> Self {
        fn build(roots: &[BigRational]) -> UniPoly {
            let mut c = vec![BigRational::one()];
            for rho in roots {
                let mut next = vec![BigRational::zero(); c.len() + 1];
                for (i, x) in c.iter().enumerate() {
                    next[i] += x;
                    next[i + 1] -= x / rho;
                }
                c = next;
            }
            UniPoly(c)
        }
        RationalFn {
            num: build(zeros),
            den: build(poles),
        }
    }

    /// `z c'(z)/c(z)`.
    fn log_derivative(&self, z: Complex64) -> Complex64 {
        let n = self.num.eval_c(z);
        let d = self.den.eval_c(z);
        z * (self.num.derivative().eval_c(z) / n - self.den.derivative().eval_c(z) / d)
    }

    /// `N − P` inside the unit disc by polynomial root counting.
    pub fn zeros_minus_poles(&self) -> Result<i64> {
        let count = |p: &UniPoly| {
            let mut c = p.complex_coeffs();
            while c.last().is_some_and(|x| x.norm() == 0.0) {
                c.pop();
            }
            if c.len() <= 1 {
                return Ok(0);
            }
            count_inside_unit_disc(&c)
                .map(|k| k as i64)
                .ok_or_else(|| Error::Numeric("root too close to the unit circle".into()))
        };
        Ok(count(&self.num)? - count(&self.den)?)
    }
}

/// Result of [`residue_count_integral_check`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResidueCheck {
    pub integral_re: f64,
    pub integral_im: f64,
    pub count: i64,
    pub ok: bool,
}

/// For `r = 2`: the unit-circle mean of the limit integrand
/// `x c'_β(x)/c_β(x) + x⁻¹ c'_{−β}(x⁻¹)/c_{−β}(x⁻¹)` against
/// `N(c_β) − P(c_β) + N(c_{−β}) − P(c_{−β})`.
pub fn residue_count_integral_check(c_beta: &RationalFn, c_minus: &RationalFn, points: usize) -> Result<ResidueCheck> {
    if points < 8 {
        return Err(Error::Argument("quadrature needs at least 8 points".into()));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..points {
        let x = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / points as f64);
        acc += c_beta.log_derivative(x) + c_minus.log_derivative(x.inv());
    }
    let mean = acc / points as f64;
    if !mean.re.is_finite() || !mean.im.is_finite() {
        return Err(Error::Numeric("quadrature hit a zero or pole".into()));
    }
    let count = c_beta.zeros_minus_poles()? + c_minus.zeros_minus_poles()?;
    let ok = (mean.re - count as f64).abs() < 1e-6 && mean.im.abs() < 1e-6 && mean.re.round() as i64 == count;
    Ok(ResidueCheck {
        integral_re: mean.re,
        integral_im: mean.im,
        count,
        ok,
    })
}

/// Random rational function with roots of modulus in `{1/3, 1/2, 2, 3}` up to sign.
pub fn random_rational_fn<G: Rng>(rng: &mut G) -> RationalFn {
    let pick = |rng: &mut G| {
        let choices = [ratio(1, 3), ratio(1, 2), rat(2), rat(3)];
        let v = choices[rng.gen_range(0..choices.len())].clone();
        if rng.gen_bool(0.5) {
            -v
        } else {
            v
        }
    };
    let nz = rng.gen_range(0..=3);
    let np = rng.gen_range(0..=2);
    let zeros: Vec<BigRational> = (0..nz).map(|_| pick(rng)).collect();
    let poles: Vec<BigRational> = (0..np).map(|_| pick(rng)).collect();
    RationalFn::from_roots(&zeros, &poles)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn monomial_family(a: usize, b: usize) -> GmFamily {
        let mut c = BTreeMap::new();
        c.insert((0, 1), UniPoly::monomial(a));
        c.insert((1, 0), UniPoly::monomial(b));
        GmFamily::new(2, c).unwrap()
    }

    #[test]
    fn rank_two_monomials() {
        let lim = gm_family_limit(&monomial_family(3, 5), 1e-6).unwrap();
        assert_eq!(lim.tree_sum, "8");
        assert_eq!(lim.series_limit, "8");
        assert!(lim.agrees(1e-6), "{lim:?}");
    }

    #[test]
    fn constant_family_vanishes() {
        for r in 2..=4 {
            let mut c = BTreeMap::new();
            for a in 0..r {
                for b in 0..r {
                    if a != b {
                        c.insert((a, b), UniPoly::from_ints(&[1]));
                    }
                }
            }
            let lim = gm_family_limit(&GmFamily::new(r, c).unwrap(), 1e-6).unwrap();
            assert_eq!(lim.tree_sum, "0");
            assert!(lim.agrees(1e-6));
        }
    }

    #[test]
    fn random_families_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for r in 2..=4 {
            for _ in 0..3 {
                let fam = random_family(r, 2, &mut rng);
                let lim = gm_family_limit(&fam, 1e-6).unwrap();
                assert!(lim.agrees(1e-6), "r={r} {lim:?}");
            }
        }
    }

    #[test]
    fn residue_examples() {
        let inside_zero = RationalFn::from_roots(&[ratio(1, 2)], &[]);
        let inside_pole = RationalFn::from_roots(&[], &[ratio(1, 3)]);
        let outside = RationalFn::from_roots(&[rat(2)], &[rat(3)]);
        assert_eq!(inside_zero.zeros_minus_poles().unwrap(), 1);
        assert_eq!(inside_pole.zeros_minus_poles().unwrap(), -1);
        assert_eq!(outside.zeros_minus_poles().unwrap(), 0);
        let chk = residue_count_integral_check(&inside_zero, &RationalFn::one(), 256).unwrap();
        assert!(chk.ok && chk.count == 1, "{chk:?}");
        let chk = residue_count_integral_check(&RationalFn::one(), &inside_pole, 256).unwrap();
        assert!(chk.ok && chk.count == -1, "{chk:?}");
        let chk = residue_count_integral_check(&RationalFn::one(), &RationalFn::one(), 64).unwrap();
        assert!(chk.ok && chk.count == 0);
    }
}
