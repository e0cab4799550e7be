//! Free commutative polynomial ring over ℚ in the symbols `C[s,k]` and `γ`.

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::series::{GammaRing, Ring};
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// The count `C_s(X_k)` as a formal symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CSymbol {
    pub s: u32,
    pub k: u32,
}

impl CSymbol {
    pub fn new(s: u32, k: u32) -> Self {
        CSymbol { s, k }
    }

    /// Total weight `s·k`, the power of `z` it carries in `aut`.
    pub fn weight(&self) -> u64 {
        self.s as u64 * self.k as u64
    }
}

impl fmt::Display for CSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C[{},{}]", self.s, self.k)
    }
}

/// Monomial `∏ C[s,k]^e · γ^gamma`; `syms` is sorted with positive exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymMonomial {
    pub syms: Vec<(CSymbol, u32)>,
    pub gamma: u32,
}

impl SymMonomial {
    fn mul(&self, o: &SymMonomial) -> SymMonomial {
        let mut syms = Vec::with_capacity(self.syms.len() + o.syms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.syms.len() && j < o.syms.len() {
            match self.syms[i].0.cmp(&o.syms[j].0) {
                Ordering::Less => {
                    syms.push(self.syms[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    syms.push(o.syms[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    syms.push((self.syms[i].0, self.syms[i].1 + o.syms[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        syms.extend_from_slice(&self.syms[i..]);
        syms.extend_from_slice(&o.syms[j..]);
        SymMonomial {
            syms,
            gamma: self.gamma + o.gamma,
        }
    }

    /// Number of symbol factors counted with multiplicity.
    pub fn degree(&self) -> u32 {
        self.syms.iter().map(|(_, e)| e).sum()
    }

    pub fn weight(&self) -> u64 {
        self.syms.iter().map(|(c, e)| c.weight() * *e as u64).sum()
    }

    pub fn exponent_of(&self, c: CSymbol) -> u32 {
        self.syms
            .iter()
            .find(|(x, _)| *x == c)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    /// Display order: heavier first, then fewer factors, then larger symbols, then higher γ.
    fn display_cmp(&self, o: &SymMonomial) -> Ordering {
        let desc = |m: &SymMonomial| {
            let mut v: Vec<CSymbol> = m
                .syms
                .iter()
                .flat_map(|(c, e)| std::iter::repeat_n(*c, *e as usize))
                .collect();
            v.reverse();
            v
        };
        o.weight()
            .cmp(&self.weight())
            .then(self.degree().cmp(&o.degree()))
            .then_with(|| desc(o).cmp(&desc(self)))
            .then(o.gamma.cmp(&self.gamma))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SymPoly {
    terms: BTreeMap<SymMonomial, BigRational>,
}

impl SymPoly {
    pub fn zero() -> Self {
        SymPoly::default()
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = SymPoly::zero();
        p.add_term(
            SymMonomial {
                syms: Vec::new(),
                gamma: 0,
            },
            c,
        );
        p
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn symbol(s: u32, k: u32) -> Self {
        let mut p = SymPoly::zero();
        p.terms.insert(
            SymMonomial {
                syms: vec![(CSymbol::new(s, k), 1)],
                gamma: 0,
            },
            BigRational::one(),
        );
        p
    }

    pub fn gamma() -> Self {
        let mut p = SymPoly::zero();
        p.terms.insert(
            SymMonomial {
                syms: Vec::new(),
                gamma: 1,
            },
            BigRational::one(),
        );
        p
    }

    fn add_term(&mut self, m: SymMonomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SymMonomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &SymMonomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Terms whose symbol degree equals `d`.
    pub fn homogeneous_part(&self, d: u32) -> SymPoly {
        SymPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Replaces `γ` by a rational number.
    pub fn substitute_gamma(&self, v: &BigRational) -> SymPoly {
        let mut out = SymPoly::zero();
        for (m, c) in &self.terms {
            let w = c * num::pow::pow(v.clone(), m.gamma as usize);
            out.add_term(
                SymMonomial {
                    syms: m.syms.clone(),
                    gamma: 0,
                },
                w,
            );
        }
        out
    }

    /// Every symbol occurring in the polynomial.
    pub fn symbols(&self) -> Vec<CSymbol> {
        let mut v: Vec<CSymbol> = self
            .terms
            .keys()
            .flat_map(|m| m.syms.iter().map(|(c, _)| *c))
            .collect();
        v.sort();
        v.dedup();
        v
    }

    /// Ring homomorphism `C[s,k] ↦ value(s,k)`; `γ` goes to the number
    /// `gamma` when given, otherwise to the Laurent variable `γ`.
    pub fn specialize<F>(&self, g: usize, gamma: Option<&BigRational>, value: F) -> Result<LaurentPoly>
    where
        F: Fn(CSymbol) -> Result<LaurentPoly>,
    {
        let mut base: HashMap<CSymbol, LaurentPoly> = HashMap::new();
        for c in self.symbols() {
            let v = value(c)?;
            if v.g() != g {
                return Err(Error::Dimension(format!(
                    "value of {c} has g={}, expected {g}",
                    v.g()
                )));
            }
            base.insert(c, v);
        }
        let mut powers: HashMap<(CSymbol, u32), LaurentPoly> = HashMap::new();
        let mut total = LaurentPoly::zero(g);
        for (m, coef) in &self.terms {
            let mut term = match gamma {
                Some(v) => LaurentPoly::constant(g, coef * num::pow::pow(v.clone(), m.gamma as usize)),
                None => LaurentPoly::gamma(g).pow(m.gamma).scale(coef),
            };
            for &(c, e) in &m.syms {
                let pw = powers
                    .entry((c, e))
                    .or_insert_with(|| base[&c].pow(e))
                    .clone();
                term = term.times(&pw);
            }
            total = total.plus(&term);
        }
        Ok(total)
    }

    fn render_coefficient(c: &BigRational) -> String {
        if c.is_integer() {
            c.to_string()
        } else {
            format!("({c})")
        }
    }
}

impl Ring for SymPoly {
    fn zero_like(&self) -> Self {
        SymPoly::zero()
    }
    fn one_like(&self) -> Self {
        SymPoly::one()
    }
    fn vanishes(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
    fn times(&self, o: &Self) -> Self {
        let mut acc: HashMap<SymMonomial, BigRational> = HashMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let c = c1 * c2;
                match acc.entry(m1.mul(m2)) {
                    std::collections::hash_map::Entry::Occupied(mut e) => *e.get_mut() += c,
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        SymPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
    fn negate(&self) -> Self {
        SymPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
    fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return SymPoly::zero();
        }
        SymPoly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }
}

impl GammaRing for SymPoly {
    fn gamma_like(&self) -> Self {
        SymPoly::gamma()
    }
    fn div_gamma(&self) -> Result<Self> {
        let mut out = SymPoly::zero();
        for (m, c) in &self.terms {
            if m.gamma == 0 {
                return Err(Error::Internal(format!(
                    "term {c} without a γ factor cannot be divided by γ"
                )));
            }
            out.terms.insert(
                SymMonomial {
                    syms: m.syms.clone(),
                    gamma: m.gamma - 1,
                },
                c.clone(),
            );
        }
        Ok(out)
    }
}

/// Renders like `C[2,1] + (g−1)·C[1,1]^2 + C[1,1]`.
impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut items: Vec<(&SymMonomial, &BigRational)> = self.terms.iter().collect();
        items.sort_by(|a, b| a.0.display_cmp(b.0));
        for (idx, (m, c)) in items.into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut head = String::new();
            let bare = m.syms.is_empty() && m.gamma == 0;
            if !a.is_one() || bare {
                head.push_str(&Self::render_coefficient(&a));
            }
            match m.gamma {
                0 => {}
                1 => head.push_str("(g−1)"),
                e => head.push_str(&format!("(g−1)^{e}")),
            }
            let syms: Vec<String> = m
                .syms
                .iter()
                .map(|(c, e)| if *e == 1 { c.to_string() } else { format!("{c}^{e}") })
                .collect();
            let body = syms.join("·");
            match (head.is_empty(), body.is_empty()) {
                (true, _) => write!(f, "{body}")?,
                (false, true) => write!(f, "{head}")?,
                (false, false) => write!(f, "{head}·{body}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::rat;

    #[test]
    fn arithmetic_and_rendering() {
        let c11 = SymPoly::symbol(1, 1);
        let c21 = SymPoly::symbol(2, 1);
        let p = c21
            .plus(&SymPoly::gamma().times(&c11).times(&c11))
            .plus(&c11);
        assert_eq!(p.to_string(), "C[2,1] + (g−1)·C[1,1]^2 + C[1,1]");
        let q = p.minus(&c21).minus(&c11);
        assert_eq!(q.to_string(), "(g−1)·C[1,1]^2");
        assert_eq!(SymPoly::constant(rat(-3)).to_string(), "-3");
        assert!(c11.minus(&c11).vanishes());
    }

    #[test]
    fn gamma_division() {
        let p = SymPoly::gamma().times(&SymPoly::symbol(1, 1)).scale(&rat(4));
        assert_eq!(p.div_gamma().unwrap(), SymPoly::symbol(1, 1).scale(&rat(4)));
        assert!(SymPoly::one().div_gamma().is_err());
    }

    #[test]
    fn specialization_is_a_homomorphism() {
        let a = SymPoly::symbol(1, 1).plus(&SymPoly::gamma());
        let b = SymPoly::symbol(1, 2).times(&SymPoly::symbol(1, 1));
        let val = |c: CSymbol| LaurentPoly::pic0(1).frobenius_substitute(c.k as i64);
        let g = rat(1);
        let lhs = a.times(&b).specialize(1, Some(&g), val).unwrap();
        let rhs = a
            .specialize(1, Some(&g), val)
            .unwrap()
            .times(&b.specialize(1, Some(&g), val).unwrap());
        assert_eq!(lhs, rhs);
    }
}
