//! Sparse Laurent polynomials in `t, z_1, …, z_g` with exact rational
//! coefficients, plus a nonnegative power of the auxiliary genus
//! variable `γ = g − 1`.
//!
//! The symmetry group acting on these is generated by permutations of
//! the `z_i` and the flips `z_i ↦ t·z_i⁻¹`.

mod curve;

pub use curve::{eval_int_poly, evaluate_at_curve, graeffe_power, CurveInput, MAX_PRECISION_BITS};

use crate::error::{Error, Result};
use crate::series::{GammaRing, Ring};
use crate::util::rat;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// Exponent vector `(e_t, e_z, e_γ)`; the derived order is the canonical
/// lexicographic order used for serialization.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub t: i64,
    pub z: Vec<i64>,
    pub gamma: u32,
}

impl Monomial {
    pub fn one(g: usize) -> Self {
        Monomial {
            t: 0,
            z: vec![0; g],
            gamma: 0,
        }
    }

    fn mul(&self, o: &Monomial) -> Monomial {
        Monomial {
            t: self.t + o.t,
            z: self.z.iter().zip(&o.z).map(|(a, b)| a + b).collect(),
            gamma: self.gamma + o.gamma,
        }
    }

    /// Weight with `deg t = 2`, `deg z_i = 1`.
    pub fn weight(&self) -> i64 {
        2 * self.t + self.z.iter().sum::<i64>()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    g: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl LaurentPoly {
    pub fn zero(g: usize) -> Self {
        LaurentPoly {
            g,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(g: usize, c: BigRational) -> Self {
        Self::monomial(g, c, 0, &vec![0; g], 0)
    }

    pub fn one(g: usize) -> Self {
        Self::constant(g, BigRational::one())
    }

    /// `c · t^t · ∏ z_i^{z_i} · γ^gamma`; panics if `z.len() != g`.
    pub fn monomial(g: usize, c: BigRational, t: i64, z: &[i64], gamma: u32) -> Self {
        assert_eq!(z.len(), g, "exponent vector length must equal g");
        let mut p = Self::zero(g);
        if !c.is_zero() {
            p.terms.insert(
                Monomial {
                    t,
                    z: z.to_vec(),
                    gamma,
                },
                c,
            );
        }
        p
    }

    pub fn t(g: usize) -> Self {
        Self::monomial(g, BigRational::one(), 1, &vec![0; g], 0)
    }

    pub fn z(g: usize, i: usize) -> Self {
        let mut e = vec![0; g];
        e[i] = 1;
        Self::monomial(g, BigRational::one(), 0, &e, 0)
    }

    pub fn gamma(g: usize) -> Self {
        Self::monomial(g, BigRational::one(), 0, &vec![0; g], 1)
    }

    /// Builds from raw terms, dropping zeros and merging duplicates.
    pub fn from_terms<I>(g: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut p = Self::zero(g);
        for (m, c) in terms {
            if m.z.len() != g {
                return Err(Error::Dimension(format!(
                    "exponent vector of length {} in a g={} polynomial",
                    m.z.len(),
                    g
                )));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// `∏_{i=1}^g (1 − z_i)(1 − t z_i⁻¹)`, the point count of `Pic⁰`.
    pub fn pic0(g: usize) -> Self {
        let mut acc = Self::one(g);
        for i in 0..g {
            let f = Self::one(g).minus(&Self::z(g, i));
            let mut e = vec![0; g];
            e[i] = -1;
            let h = Self::one(g).minus(&Self::monomial(g, BigRational::one(), 1, &e, 0));
            acc = acc.times(&f).times(&h);
        }
        acc
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    fn check_g(&self, o: &Self) -> Result<()> {
        if self.g != o.g {
            Err(Error::Dimension(format!(
                "operands have g={} and g={}",
                self.g, o.g
            )))
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        self.check_g(o)?;
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        self.check_g(o)?;
        if self.is_empty() || o.is_empty() {
            return Ok(Self::zero(self.g));
        }
        let mut acc: HashMap<Monomial, BigRational> =
            HashMap::with_capacity(self.len() * o.len() / 2 + 1);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let m = m1.mul(m2);
                let c = c1 * c2;
                match acc.get_mut(&m) {
                    Some(v) => *v += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Ok(LaurentPoly {
            g: self.g,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn scalar_mul(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.g);
        }
        LaurentPoly {
            g: self.g,
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v * c))
                .collect(),
        }
    }

    /// `t ↦ t^k`, `z_i ↦ z_i^k`; the `γ` exponent is unchanged.
    pub fn frobenius_substitute(&self, k: i64) -> Result<Self> {
        if k <= 0 {
            return Err(Error::Argument(format!(
                "Frobenius power must be positive, got {k}"
            )));
        }
        Ok(LaurentPoly {
            g: self.g,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    (
                        Monomial {
                            t: m.t * k,
                            z: m.z.iter().map(|e| e * k).collect(),
                            gamma: m.gamma,
                        },
                        c.clone(),
                    )
                })
                .collect(),
        })
    }

    fn map_monomials(&self, f: impl Fn(&Monomial) -> Monomial) -> Self {
        let mut out = Self::zero(self.g);
        for (m, c) in &self.terms {
            out.add_term(f(m), c.clone());
        }
        out
    }

    /// Image under `z_i ↔ z_j`.
    pub fn swap_z(&self, i: usize, j: usize) -> Self {
        self.map_monomials(|m| {
            let mut m = m.clone();
            m.z.swap(i, j);
            m
        })
    }

    /// Image under `z_i ↦ t·z_i⁻¹`.
    pub fn flip_z(&self, i: usize) -> Self {
        self.map_monomials(|m| {
            let mut m = m.clone();
            m.t += m.z[i];
            m.z[i] = -m.z[i];
            m
        })
    }

    pub fn is_weil_invariant(&self) -> bool {
        for i in 0..self.g {
            if self.flip_z(i) != *self {
                return false;
            }
            for j in (i + 1)..self.g {
                if self.swap_z(i, j) != *self {
                    return false;
                }
            }
        }
        true
    }

    /// Every monomial `t^m z^n` has `m + Σ min(n_i, 0) ≥ 0`.
    pub fn satisfies_positivity(&self) -> bool {
        self.terms
            .keys()
            .all(|m| m.t + m.z.iter().map(|&e| e.min(0)).sum::<i64>() >= 0)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Replaces `γ` by a rational number.
    pub fn substitute_gamma(&self, v: &BigRational) -> Self {
        let mut out = Self::zero(self.g);
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            m2.gamma = 0;
            out.add_term(m2, c * num::pow::pow(v.clone(), m.gamma as usize));
        }
        out
    }

    /// Value at a rational point; fails on a zero base with negative exponent.
    pub fn eval_rational(
        &self,
        t: &BigRational,
        z: &[BigRational],
        gamma: &BigRational,
    ) -> Result<BigRational> {
        if z.len() != self.g {
            return Err(Error::Dimension(format!(
                "{} z-values for g={}",
                z.len(),
                self.g
            )));
        }
        let pw = |x: &BigRational, e: i64| -> Result<BigRational> {
            if e < 0 && x.is_zero() {
                return Err(Error::Argument("negative power of zero".into()));
            }
            Ok(crate::util::rat_pow(x, e))
        };
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut v = c * pw(t, m.t)? * pw(gamma, m.gamma as i64)?;
            for (x, &e) in z.iter().zip(&m.z) {
                v *= pw(x, e)?;
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Terms of maximal weight (`deg t = 2`, `deg z_i = 1`).
    pub fn dominant_terms(&self) -> Self {
        let Some(w) = self.terms.keys().map(Monomial::weight).max() else {
            return Self::zero(self.g);
        };
        LaurentPoly {
            g: self.g,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weight() == w)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    /// Per-variable exponent ranges: `(lo, hi)` for `t`, each `z_i`, `γ`.
    fn exponent_box(&self) -> Vec<(i64, i64)> {
        let mut b = vec![(i64::MAX, i64::MIN); self.g + 2];
        for m in self.terms.keys() {
            let vals = std::iter::once(m.t)
                .chain(m.z.iter().copied())
                .chain(std::iter::once(m.gamma as i64));
            for (slot, v) in b.iter_mut().zip(vals) {
                slot.0 = slot.0.min(v);
                slot.1 = slot.1.max(v);
            }
        }
        b
    }

    /// Exact quotient `p / d`, or a divisibility error carrying the remainder.
    pub fn exact_divide(&self, d: &Self) -> Result<Self> {
        self.check_g(d)?;
        if d.is_empty() {
            return Err(Error::Argument("division by the zero polynomial".into()));
        }
        let mut quotient = Self::zero(self.g);
        if self.is_empty() {
            return Ok(quotient);
        }
        let pb = self.exponent_box();
        let db = d.exponent_box();
        let qbox: Vec<(i64, i64)> = pb
            .iter()
            .zip(&db)
            .map(|(p, d)| (p.0 - d.0, p.1 - d.1))
            .collect();
        let (lm, lc) = d.leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let fail = |rem: &LaurentPoly| Error::Divisibility {
            remainder: rem.to_json_string(),
            terms: rem.len(),
        };
        while let Some((rm, rc)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
            if rm.gamma < lm.gamma {
                return Err(fail(&rem));
            }
            let qm = Monomial {
                t: rm.t - lm.t,
                z: rm.z.iter().zip(&lm.z).map(|(a, b)| a - b).collect(),
                gamma: rm.gamma - lm.gamma,
            };
            let vals = std::iter::once(qm.t)
                .chain(qm.z.iter().copied())
                .chain(std::iter::once(qm.gamma as i64));
            if qbox
                .iter()
                .zip(vals)
                .any(|(&(lo, hi), v)| v < lo || v > hi)
            {
                return Err(fail(&rem));
            }
            let qc = rc / &lc;
            for (m, c) in &d.terms {
                rem.add_term(m.mul(&qm), -(c * &qc));
            }
            quotient.add_term(qm, qc);
        }
        Ok(quotient)
    }

    /// Integer power.
    pub fn pow(&self, e: u32) -> Self {
        Ring::pow_u(self, e)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(LaurentJson::from(self)).expect("serializable")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&LaurentJson::from(self)).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let j: LaurentJson = serde_json::from_value(v.clone())?;
        j.try_into()
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: LaurentJson = serde_json::from_str(s)?;
        j.try_into()
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    c: String,
    t: i64,
    z: Vec<i64>,
    gamma: u32,
}

/// Wire format `{"g": int, "terms": [{"c", "t", "z", "gamma"}]}`.
#[derive(Serialize, Deserialize)]
pub struct LaurentJson {
    g: usize,
    terms: Vec<TermJson>,
}

impl From<&LaurentPoly> for LaurentJson {
    fn from(p: &LaurentPoly) -> Self {
        LaurentJson {
            g: p.g,
            terms: p
                .terms
                .iter()
                .map(|(m, c)| TermJson {
                    c: c.to_string(),
                    t: m.t,
                    z: m.z.clone(),
                    gamma: m.gamma,
                })
                .collect(),
        }
    }
}

impl TryFrom<LaurentJson> for LaurentPoly {
    type Error = Error;
    fn try_from(j: LaurentJson) -> Result<Self> {
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in j.terms {
            terms.push((
                Monomial {
                    t: t.t,
                    z: t.z,
                    gamma: t.gamma,
                },
                crate::util::parse_rational(&t.c)?,
            ));
        }
        LaurentPoly::from_terms(j.g, terms)
    }
}

impl Ring for LaurentPoly {
    fn zero_like(&self) -> Self {
        Self::zero(self.g)
    }
    fn one_like(&self) -> Self {
        Self::one(self.g)
    }
    fn vanishes(&self) -> bool {
        self.terms.is_empty()
    }
    /// Panics on mismatched `g`; use [`LaurentPoly::checked_add`] for a `Result`.
    fn plus(&self, o: &Self) -> Self {
        self.checked_add(o).expect("matching g")
    }
    fn times(&self, o: &Self) -> Self {
        self.checked_mul(o).expect("matching g")
    }
    fn negate(&self) -> Self {
        self.scalar_mul(&rat(-1))
    }
    fn scale(&self, c: &BigRational) -> Self {
        self.scalar_mul(c)
    }
}

impl GammaRing for LaurentPoly {
    fn gamma_like(&self) -> Self {
        Self::gamma(self.g)
    }
    fn div_gamma(&self) -> Result<Self> {
        let mut out = Self::zero(self.g);
        for (m, c) in &self.terms {
            if m.gamma == 0 {
                return Err(Error::Internal("term without a γ factor".into()));
            }
            let mut m2 = m.clone();
            m2.gamma -= 1;
            out.terms.insert(m2, c.clone());
        }
        Ok(out)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let mut factors = Vec::new();
            let push = |v: &mut Vec<String>, name: &str, e: i64| match e {
                0 => {}
                1 => v.push(name.to_string()),
                _ => v.push(format!("{name}^{e}")),
            };
            push(&mut factors, "t", m.t);
            for (i, &e) in m.z.iter().enumerate() {
                push(&mut factors, &format!("z{}", i + 1), e);
            }
            push(&mut factors, "(g−1)", m.gamma as i64);
            if factors.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", factors.join("·"))?;
            } else {
                write!(f, "{a}·{}", factors.join("·"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(g: usize, terms: &[(i64, i64, &[i64])]) -> LaurentPoly {
        LaurentPoly::from_terms(
            g,
            terms.iter().map(|&(c, t, z)| {
                (
                    Monomial {
                        t,
                        z: z.to_vec(),
                        gamma: 0,
                    },
                    rat(c),
                )
            }),
        )
        .unwrap()
    }

    #[test]
    fn distributivity_example() {
        let a = lp(1, &[(1, 0, &[0]), (1, 1, &[-1])]);
        let b = lp(1, &[(1, 0, &[0]), (-1, 0, &[1])]);
        let want = lp(1, &[(1, 0, &[0]), (-1, 0, &[1]), (1, 1, &[-1]), (-1, 1, &[0])]);
        assert_eq!(a.times(&b), want);
        assert_eq!(a.plus(&LaurentPoly::zero(1)), a);
        let z = LaurentPoly::z(1, 0);
        assert!(z.minus(&z).is_empty());
    }

    #[test]
    fn mismatched_g_is_dimension_error() {
        let a = LaurentPoly::one(1);
        let b = LaurentPoly::one(2);
        assert!(matches!(a.checked_add(&b), Err(Error::Dimension(_))));
        assert!(matches!(a.checked_mul(&b), Err(Error::Dimension(_))));
    }

    #[test]
    fn frobenius_examples() {
        let p = LaurentPoly::pic0(1);
        let p2 = p.frobenius_substitute(2).unwrap();
        let want = lp(1, &[(1, 0, &[0]), (-1, 0, &[2]), (-1, 2, &[-2]), (1, 2, &[0])]);
        assert_eq!(p2, want);
        let c = LaurentPoly::constant(1, rat(5));
        assert_eq!(c.frobenius_substitute(3).unwrap(), c);
        let tz = lp(1, &[(1, 1, &[1])]);
        assert_eq!(tz.frobenius_substitute(2).unwrap(), lp(1, &[(1, 2, &[2])]));
        assert!(matches!(p.frobenius_substitute(0), Err(Error::Argument(_))));
    }

    #[test]
    fn weil_invariance_examples() {
        assert!(LaurentPoly::pic0(3).is_weil_invariant());
        assert!(!LaurentPoly::z(2, 0).is_weil_invariant());
        assert!(LaurentPoly::t(2).is_weil_invariant());
    }

    #[test]
    fn positivity_examples() {
        assert!(lp(1, &[(1, 1, &[-1])]).satisfies_positivity());
        assert!(!lp(1, &[(1, 0, &[-1])]).satisfies_positivity());
        assert!(lp(2, &[(1, 2, &[-1, -1])]).satisfies_positivity());
    }

    #[test]
    fn division_examples() {
        let p = LaurentPoly::pic0(1);
        let d = lp(1, &[(1, 0, &[0]), (-1, 0, &[1])]);
        assert_eq!(p.exact_divide(&d).unwrap(), lp(1, &[(1, 0, &[0]), (-1, 1, &[-1])]));
        assert!(matches!(
            LaurentPoly::one(1).exact_divide(&d),
            Err(Error::Divisibility { .. })
        ));
        assert!(LaurentPoly::zero(1).exact_divide(&d).unwrap().is_empty());
    }

    #[test]
    fn json_roundtrip_is_sorted() {
        let p = LaurentPoly::pic0(2).plus(&LaurentPoly::gamma(2).scale(&crate::util::ratio(3, 2)));
        let s = p.to_json_string();
        assert_eq!(LaurentPoly::from_json_str(&s).unwrap(), p);
        assert!(s.contains("\"c\":\"3/2\""));
    }

    #[test]
    fn gamma_division() {
        let p = LaurentPoly::gamma(1).times(&LaurentPoly::t(1));
        assert_eq!(p.div_gamma().unwrap(), LaurentPoly::t(1));
        assert!(LaurentPoly::t(1).div_gamma().is_err());
    }
}
