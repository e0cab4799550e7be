//! The counting engine: `aut` series, the master formula for `A_{n,e}`,
//! the recursion recovering `C_n(X_1)` from `A`, and the derived
//! polynomials `P_{g,n}`, `Q_{g,n}`.

mod symbolic;
mod tables;

pub use symbolic::{CSymbol, SymMonomial, SymPoly};
pub use tables::{ATable, CTable};

use crate::combinat::{divisors, mobius, partitions};
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Monomial};
use crate::series::{GammaRing, Ring, TruncatedSeries};
use crate::util::{rat, ratio};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use rand::Rng;
use serde_json::{json, Value};
use std::collections::{BTreeMap, BTreeSet, HashMap};

/// How `2g − 2` enters the formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenusMode {
    /// `g − 1` stays the formal variable `γ`.
    Symbolic,
    /// A fixed genus.
    Numeric(u32),
}

/// Supplier of the values `C_s(X_k)` in some coefficient ring.
pub trait CSource {
    type Value: Ring;
    fn template(&self) -> Self::Value;
    fn c(&self, s: u32, k: u32) -> Result<Self::Value>;
}

/// Free symbols `C[s,k]`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Symbolic;

impl CSource for Symbolic {
    type Value = SymPoly;
    fn template(&self) -> SymPoly {
        SymPoly::zero()
    }
    fn c(&self, s: u32, k: u32) -> Result<SymPoly> {
        Ok(SymPoly::symbol(s, k))
    }
}

impl CSource for CTable {
    type Value = LaurentPoly;
    fn template(&self) -> LaurentPoly {
        LaurentPoly::zero(self.g())
    }
    fn c(&self, s: u32, k: u32) -> Result<LaurentPoly> {
        self.get(s, k)
    }
}

/// Rational values keyed by `(s, k)`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct RationalTable(pub BTreeMap<(u32, u32), BigRational>);

impl CSource for RationalTable {
    type Value = BigRational;
    fn template(&self) -> BigRational {
        BigRational::zero()
    }
    fn c(&self, s: u32, k: u32) -> Result<BigRational> {
        self.0.get(&(s, k)).cloned().ok_or(Error::Lookup { s, k })
    }
}

/// `Σ_{s,k} (s/k) C_s(X_{kl}) z^{skl}` truncated at `cap`.
pub fn aut_log_series<S: CSource>(src: &S, l: u32, cap: usize) -> Result<TruncatedSeries<S::Value>> {
    if l == 0 {
        return Err(Error::Argument("l must be positive".into()));
    }
    let t = src.template();
    let mut coeffs = vec![t.zero_like(); cap + 1];
    let l = l as usize;
    for s in 1..=cap / l {
        for k in 1..=cap / (l * s) {
            let c = src.c(s as u32, (k * l) as u32)?;
            let idx = s * k * l;
            coeffs[idx] = coeffs[idx].plus(&c.scale(&ratio(s as i64, k as i64)));
        }
    }
    Ok(TruncatedSeries::from_coeffs(coeffs, cap, &t))
}

/// `aut_{X_l}(z^l)` truncated at `cap`.
pub fn aut_series<S: CSource>(src: &S, l: u32, cap: usize) -> Result<TruncatedSeries<S::Value>> {
    aut_log_series(src, l, cap)?.exp()
}

fn two_g_minus_two<R: GammaRing>(mode: GenusMode, t: &R) -> R {
    match mode {
        GenusMode::Symbolic => t.gamma_like().scale(&rat(2)),
        GenusMode::Numeric(g) => t.from_rational_like(&rat(2 * g as i64 - 2)),
    }
}

/// The master formula
/// `Σ_{l|n} μ(l)/(n(2g−2)) Σ_{λ⊢n} 1/Σa_j ∏_j [z^{a_j}] aut_{X_l}(z^l)^{(2g−2)S_j(λ)/l}`.
///
/// Each coefficient is `Σ_m α^m [z^a] L^m/m!` with `L` the log of the `aut`
/// series, which is `[z^a] exp(α L)` expanded once per `l`.
pub fn der_value<S>(n: u32, mode: GenusMode, src: &S) -> Result<S::Value>
where
    S: CSource,
    S::Value: GammaRing,
{
    if n == 0 {
        return Err(Error::Argument("n must be positive".into()));
    }
    if let GenusMode::Numeric(g) = mode {
        match g {
            1 if n == 1 => return src.c(1, 1),
            0 | 1 => {
                return Err(Error::Domain(format!(
                    "the formula needs g ≠ 1 (and g ≥ 2 here), got g={g}, n={n}"
                )))
            }
            _ => {}
        }
    }
    let t = src.template();
    let factor = two_g_minus_two(mode, &t);
    let cap = n as usize;
    let all = partitions(n);
    let mut total = t.zero_like();
    for l in divisors(n as u64) {
        let mu = mobius(l);
        if mu == 0 {
            continue;
        }
        let l = l as u32;
        let log = aut_log_series(src, l, cap)?;
        let max_m = cap / l as usize;
        let mut powers = vec![TruncatedSeries::one(cap, &t)];
        for m in 1..=max_m {
            let next = powers[m - 1]
                .times(&log)
                .scale(&BigRational::new(BigInt::one(), BigInt::from(m)));
            powers.push(next);
        }
        let mut memo: HashMap<(u64, u32), S::Value> = HashMap::new();
        for lam in &all {
            if lam.multiplicities().any(|(_, a)| a % l != 0) {
                continue;
            }
            let mut prod = t.one_like();
            for (j, a) in lam.multiplicities() {
                let sj = lam.s_weight(j);
                let coeff = memo.entry((sj, a)).or_insert_with(|| {
                    let alpha = factor.scale(&ratio(sj as i64, l as i64));
                    let mut acc = t.zero_like();
                    let mut apow = t.one_like();
                    for m in 0..=(a / l) as usize {
                        let c = &powers[m].coeffs()[a as usize];
                        if !c.vanishes() {
                            acc = acc.plus(&apow.times(c));
                        }
                        apow = apow.times(&alpha);
                    }
                    acc
                });
                prod = prod.times(coeff);
                if prod.vanishes() {
                    break;
                }
            }
            let w = ratio(mu, n as i64 * lam.num_parts() as i64);
            total = total.plus(&prod.scale(&w));
        }
    }
    match mode {
        GenusMode::Symbolic => total.scale(&ratio(1, 2)).div_gamma(),
        GenusMode::Numeric(g) => Ok(total.scale(&ratio(1, 2 * g as i64 - 2))),
    }
}

/// Checks that `C[n,1]` enters `der` only through the monomial `C[n,1]`
/// itself, with coefficient exactly 1.
pub fn check_unknown_coefficient(der: &SymPoly, n: u32) -> Result<()> {
    let unknown = CSymbol::new(n, 1);
    for (m, c) in der.terms() {
        let e = m.exponent_of(unknown);
        if e == 0 {
            continue;
        }
        let lone = m.syms.len() == 1 && e == 1 && m.gamma == 0;
        if !lone || !c.is_one() {
            return Err(Error::Internal(format!(
                "C[{n},1] appears with coefficient {c} in a term of degree {}",
                m.degree()
            )));
        }
    }
    let lone = SymMonomial {
        syms: vec![(unknown, 1)],
        gamma: 0,
    };
    if !der.coeff(&lone).is_one() {
        return Err(Error::Internal(format!("C[{n},1] is missing from the formula")));
    }
    Ok(())
}

/// `A_{n,e}` for the given `C` values: the symbolic formula, specialized.
pub fn a_from_c(n: u32, g: u32, ctable: &CTable) -> Result<LaurentPoly> {
    let sym = der_value(n, GenusMode::Symbolic, &Symbolic)?;
    sym.specialize(ctable.g(), Some(&rat(g as i64 - 1)), |c| ctable.get(c.s, c.k))
}

/// Extends `base` (which must hold `C_1`) through rank `n` by solving
/// `A_s = C_s(X_1) + (rest of the formula)` for `s = 2..n`.
///
/// The formula is evaluated once symbolically and then specialized; the
/// specialization is a ring map, so this agrees with running the formula
/// in the Laurent ring directly.
pub fn c_from_a(n: u32, g: u32, atable: &ATable, base: &CTable) -> Result<CTable> {
    if g < 2 {
        return Err(Error::Domain(format!("need g ≥ 2, got {g}")));
    }
    if base.g() != g as usize || (n >= 2 && atable.g() != g as usize) {
        return Err(Error::Dimension(format!(
            "tables have g={} and g={}, expected {g}",
            base.g(),
            atable.g()
        )));
    }
    if !base.contains(1) {
        return Err(Error::Lookup { s: 1, k: 1 });
    }
    let mut table = base.clone();
    let gamma = rat(g as i64 - 1);
    for s in 2..=n {
        let sym = der_value(s, GenusMode::Symbolic, &Symbolic)?;
        check_unknown_coefficient(&sym, s)?;
        let rest = sym.minus(&SymPoly::symbol(s, 1));
        let known = rest.specialize(table.g(), Some(&gamma), |c| table.get(c.s, c.k))?;
        let cs = atable.get(s)?.minus(&known);
        if !cs.is_integral() {
            return Err(Error::Integrality(format!(
                "recovered C_{s}(X_1) has non-integral coefficients"
            )));
        }
        table.insert(s, 1, cs)?;
    }
    Ok(table)
}

/// `Q_{g,n} = P_{g,n} / ∏ (1 − z_i)(1 − t z_i⁻¹)`.
pub fn q_poly(p: &LaurentPoly) -> Result<LaurentPoly> {
    p.exact_divide(&LaurentPoly::pic0(p.g()))
}

/// `Σ_{l|n} μ(l) μ(n/l) l^{2g−3}`.
pub fn euler_char(n: u32, g: u32) -> Result<BigInt> {
    if g < 2 || n == 0 {
        return Err(Error::Domain(format!("need g ≥ 2 and n ≥ 1, got g={g}, n={n}")));
    }
    Ok(divisors(n as u64)
        .into_iter()
        .map(|l| {
            BigInt::from(mobius(l) * mobius(n as u64 / l))
                * num::pow::pow(BigInt::from(l), 2 * g as usize - 3)
        })
        .sum())
}

/// The symbol-linear part of the formula equals `Σ_{d|n} C[d,1]`.
pub fn linear_part_check(n: u32, g: u32) -> Result<bool> {
    let sym = der_value(n, GenusMode::Numeric(g), &Symbolic)?;
    let expected = divisors(n as u64)
        .into_iter()
        .fold(SymPoly::zero(), |acc, d| acc.plus(&SymPoly::symbol(d as u32, 1)));
    Ok(sym.homogeneous_part(1) == expected)
}

/// `D_n(d) = (1/d) Σ_{l|d} μ(l) C_{n/d}(X_{d/l})`.
pub fn d_count<S: CSource>(n: u32, d: u32, src: &S) -> Result<S::Value> {
    if d == 0 || !n.is_multiple_of(d) {
        return Err(Error::Argument(format!("d={d} does not divide n={n}")));
    }
    let t = src.template();
    let mut acc = t.zero_like();
    for l in divisors(d as u64) {
        let mu = mobius(l);
        if mu == 0 {
            continue;
        }
        let c = src.c(n / d, d / l as u32)?;
        acc = acc.plus(&c.scale(&rat(mu)));
    }
    Ok(acc.scale(&ratio(1, d as i64)))
}

/// Builds `C_r(X_d) = Σ_{l|d} l·O_r(l)` from orbit counts `O_r(l)` (missing
/// entries are zero) and checks `D_n(d) = O_{n/d}(d)` for all `d | n ≤ nmax`.
pub fn orbit_inversion_check(orbits: &BTreeMap<(u32, u32), BigRational>, nmax: u32) -> Result<bool> {
    let o = |r: u32, l: u32| orbits.get(&(r, l)).cloned().unwrap_or_else(BigRational::zero);
    let mut c = BTreeMap::new();
    for r in 1..=nmax {
        for d in 1..=nmax / r {
            let v: BigRational = divisors(d as u64)
                .into_iter()
                .map(|l| o(r, l as u32) * rat(l as i64))
                .sum();
            c.insert((r, d), v);
        }
    }
    let table = RationalTable(c);
    for n in 1..=nmax {
        for d in divisors(n as u64) {
            let d = d as u32;
            if d_count(n, d, &table)? != o(n / d, d) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Result of the `P_{g,n}` pipeline with every theorem-level check.
#[derive(Clone, Debug)]
pub struct PgnReport {
    pub n: u32,
    pub g: u32,
    pub p: LaurentPoly,
    pub q: Option<LaurentPoly>,
    pub weil_invariant: bool,
    pub positivity: bool,
    pub integral: bool,
    pub dominant: LaurentPoly,
    pub dominant_ok: bool,
    pub euler_value: Option<BigRational>,
    pub euler_expected: BigInt,
}

impl PgnReport {
    pub fn divisible(&self) -> bool {
        self.q.is_some()
    }

    pub fn euler_ok(&self) -> bool {
        self.euler_value.as_ref() == Some(&BigRational::from_integer(self.euler_expected.clone()))
    }

    pub fn passed(&self) -> bool {
        self.weil_invariant
            && self.positivity
            && self.integral
            && self.dominant_ok
            && self.divisible()
            && self.euler_ok()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "g": self.g,
            "p": self.p.to_json(),
            "q": self.q.as_ref().map(LaurentPoly::to_json),
            "checks": {
                "weil_invariant": self.weil_invariant,
                "positivity": self.positivity,
                "integral": self.integral,
                "dominant_term": self.dominant.to_string(),
                "dominant_ok": self.dominant_ok,
                "pic0_divisible": self.divisible(),
                "euler_value": self.euler_value.as_ref().map(|v| v.to_string()),
                "euler_expected": self.euler_expected.to_string(),
                "euler_ok": self.euler_ok(),
            },
            "passed": self.passed(),
        })
    }
}

/// Runs the theorem-level checks on a candidate `P_{g,n}`.
pub fn pgn_report(n: u32, g: u32, p: LaurentPoly) -> Result<PgnReport> {
    let gu = g as usize;
    let top = (g as i64 - 1) * (n as i64) * (n as i64) + 1;
    let expected_dom = LaurentPoly::monomial(gu, BigRational::one(), top, &vec![0; gu], 0);
    let dominant = p.dominant_terms();
    let q = q_poly(&p).ok();
    let ones = vec![BigRational::one(); gu];
    let euler_value = match &q {
        Some(q) => Some(q.eval_rational(&BigRational::one(), &ones, &rat(g as i64 - 1))?),
        None => None,
    };
    Ok(PgnReport {
        n,
        g,
        weil_invariant: p.is_weil_invariant(),
        positivity: p.satisfies_positivity(),
        integral: p.is_integral(),
        dominant_ok: dominant == expected_dom,
        dominant,
        q,
        euler_value,
        euler_expected: euler_char(n, g)?,
        p,
    })
}

/// Builds `P_{g,n} = C_n(X_1)` from an `A` table and checks it.
pub fn build_pgn(n: u32, g: u32, atable: Option<&ATable>) -> Result<PgnReport> {
    if n == 0 {
        return Err(Error::Argument("n must be positive".into()));
    }
    let base = CTable::with_pic0(g as usize);
    let table = if n == 1 {
        base
    } else {
        let a = atable.ok_or_else(|| {
            Error::Argument(format!("n={n} needs an A table covering 2..={n}"))
        })?;
        c_from_a(n, g, a, &base)?
    };
    pgn_report(n, g, table.get(n, 1)?)
}

/// Weil-orbit sum of a single monomial.
pub fn orbit_sum(g: usize, m: &Monomial) -> LaurentPoly {
    let mut seen: BTreeSet<Monomial> = BTreeSet::new();
    let mut stack = vec![m.clone()];
    while let Some(x) = stack.pop() {
        if !seen.insert(x.clone()) {
            continue;
        }
        for i in 0..g {
            let mut f = x.clone();
            f.t += f.z[i];
            f.z[i] = -f.z[i];
            stack.push(f);
            if i + 1 < g {
                let mut s = x.clone();
                s.z.swap(i, i + 1);
                stack.push(s);
            }
        }
    }
    LaurentPoly::from_terms(g, seen.into_iter().map(|x| (x, BigRational::one())))
        .expect("orbit monomials share g")
}

/// Random Weil-invariant polynomial with integer coefficients built from
/// `orbits` orbit sums of monomials with exponents in `[-e, e]`.
pub fn random_weil_invariant<G: Rng>(g: usize, orbits: usize, e: i64, rng: &mut G) -> LaurentPoly {
    let mut p = LaurentPoly::zero(g);
    for _ in 0..orbits {
        let m = Monomial {
            t: rng.gen_range(0..=e),
            z: (0..g).map(|_| rng.gen_range(-e..=e)).collect(),
            gamma: 0,
        };
        let mut c = rng.gen_range(-3i64..=3);
        if c == 0 {
            c = 1;
        }
        p = p.plus(&orbit_sum(g, &m).scale(&rat(c)));
    }
    p
}

/// Table with `C_1` the Pic⁰ polynomial and, for `2 ≤ s ≤ n`,
/// `C_s = Pic⁰ · (t^{(g−1)s²+1−g} + χ_s − 1)`, which passes every check of
/// [`pgn_report`]. Useful as a synthetic fixture.
pub fn synthetic_ctable(g: u32, n: u32) -> Result<CTable> {
    let gu = g as usize;
    let mut table = CTable::with_pic0(gu);
    for s in 2..=n {
        let top = (g as i64 - 1) * (s as i64) * (s as i64) + 1 - g as i64;
        let chi = euler_char(s, g)?;
        let q = LaurentPoly::monomial(gu, BigRational::one(), top, &vec![0; gu], 0)
            .plus(&LaurentPoly::constant(gu, BigRational::from_integer(chi - 1)));
        table.insert(s, 1, LaurentPoly::pic0(gu).times(&q))?;
    }
    Ok(table)
}

/// `A` table produced from a `C` table by the forward formula.
pub fn atable_from_ctable(n: u32, g: u32, ctable: &CTable) -> Result<ATable> {
    let mut a = ATable::new(ctable.g());
    for s in 2..=n {
        a.insert(s, a_from_c(s, g, ctable)?)?;
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sym(n: u32) -> SymPoly {
        der_value(n, GenusMode::Symbolic, &Symbolic).unwrap()
    }

    #[test]
    fn aut_series_examples() {
        let a = aut_series(&Symbolic, 1, 1).unwrap();
        assert_eq!(a.coeffs()[1], SymPoly::symbol(1, 1));
        let a = aut_series(&Symbolic, 2, 2).unwrap();
        assert!(a.coeffs()[1].vanishes());
        assert_eq!(a.coeffs()[2], SymPoly::symbol(1, 2));
        let a = aut_series(&Symbolic, 1, 2).unwrap();
        let c11 = SymPoly::symbol(1, 1);
        let want = SymPoly::symbol(1, 2)
            .scale(&ratio(1, 2))
            .plus(&SymPoly::symbol(2, 1).scale(&rat(2)))
            .plus(&c11.times(&c11).scale(&ratio(1, 2)));
        assert_eq!(a.coeffs()[2], want);
    }

    #[test]
    fn aut_series_brute_force() {
        // exp of a series with only C[1,1]: coefficient of z^v is C^v / v!.
        let mut t = RationalTable::default();
        for s in 1..=6 {
            for k in 1..=6 {
                let v = if (s, k) == (1, 1) { rat(3) } else { rat(0) };
                t.0.insert((s, k), v);
            }
        }
        let a = aut_series(&t, 1, 6).unwrap();
        for v in 0..=6u64 {
            let want = BigRational::new(num::pow::pow(BigInt::from(3), v as usize), crate::util::factorial(v));
            assert_eq!(a.coeffs()[v as usize], want);
        }
    }

    #[test]
    fn lookup_error_names_entry() {
        let t = RationalTable::default();
        assert_eq!(aut_series(&t, 2, 2).unwrap_err(), Error::Lookup { s: 1, k: 2 });
    }

    #[test]
    fn worked_examples() {
        assert_eq!(sym(1).to_string(), "C[1,1]");
        assert_eq!(sym(2).to_string(), "C[2,1] + (g−1)·C[1,1]^2 + C[1,1]");
        assert_eq!(
            sym(3).to_string(),
            "C[3,1] + 4(g−1)·C[1,1]·C[2,1] + (g−1)·C[1,1]·C[1,2] + 2(g−1)^2·C[1,1]^3 + 2(g−1)·C[1,1]^2 + C[1,1]"
        );
    }

    #[test]
    fn agrees_with_pow_scalar_route() {
        // Direct transcription of the formula through pow_scalar.
        let n = 4u32;
        let mut direct = SymPoly::zero();
        let two_gamma = SymPoly::gamma().scale(&rat(2));
        for l in divisors(n as u64) {
            let mu = mobius(l);
            if mu == 0 {
                continue;
            }
            for lam in partitions(n) {
                let mut prod = SymPoly::one();
                for (j, a) in lam.multiplicities() {
                    let aut = aut_series(&Symbolic, l as u32, a as usize).unwrap();
                    let alpha = two_gamma.scale(&ratio(lam.s_weight(j) as i64, l as i64));
                    let c = aut.pow_scalar(&alpha).unwrap().coeff(a as usize).unwrap().clone();
                    prod = prod.times(&c);
                }
                direct = direct.plus(&prod.scale(&ratio(mu, n as i64 * lam.num_parts() as i64)));
            }
        }
        let direct = direct.scale(&ratio(1, 2)).div_gamma().unwrap();
        assert_eq!(direct, sym(4));
    }

    #[test]
    fn numeric_modes() {
        assert!(matches!(
            der_value(2, GenusMode::Numeric(1), &Symbolic),
            Err(Error::Domain(_))
        ));
        assert_eq!(der_value(1, GenusMode::Numeric(1), &Symbolic).unwrap(), SymPoly::symbol(1, 1));
        let g3 = der_value(3, GenusMode::Numeric(3), &Symbolic).unwrap();
        assert_eq!(g3, sym(3).substitute_gamma(&rat(2)));
    }

    #[test]
    fn unknown_enters_linearly() {
        for n in 1..=6 {
            check_unknown_coefficient(&sym(n), n).unwrap();
        }
    }

    #[test]
    fn specialization_matches_laurent_ring() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut table = CTable::with_pic0(2);
        table.insert(2, 1, random_weil_invariant(2, 2, 1, &mut rng)).unwrap();
        table.insert(3, 1, random_weil_invariant(2, 1, 1, &mut rng)).unwrap();
        for n in 1..=3 {
            let via_sym = a_from_c(n, 2, &table).unwrap();
            let direct = der_value(n, GenusMode::Numeric(2), &table).unwrap();
            assert_eq!(via_sym, direct, "n={n}");
            let with_gamma = der_value(n, GenusMode::Symbolic, &table).unwrap();
            assert_eq!(with_gamma.substitute_gamma(&rat(1)), direct);
        }
    }

    #[test]
    fn round_trip_recovers_planted_values() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for g in [2u32, 3] {
            let mut planted = CTable::with_pic0(g as usize);
            for s in 2..=3 {
                planted
                    .insert(s, 1, random_weil_invariant(g as usize, 2, 1, &mut rng))
                    .unwrap();
            }
            let a = atable_from_ctable(3, g, &planted).unwrap();
            let back = c_from_a(3, g, &a, &CTable::with_pic0(g as usize)).unwrap();
            for s in 1..=3 {
                assert_eq!(back.get(s, 1).unwrap(), planted.get(s, 1).unwrap());
            }
        }
    }

    #[test]
    fn pgn_for_rank_one() {
        let r = build_pgn(1, 2, None).unwrap();
        assert_eq!(r.p, LaurentPoly::pic0(2));
        assert_eq!(r.q, Some(LaurentPoly::one(2)));
        assert!(r.passed());
    }

    #[test]
    fn synthetic_fixture_passes_checks() {
        let planted = synthetic_ctable(2, 3).unwrap();
        let a = atable_from_ctable(3, 2, &planted).unwrap();
        for n in 2..=3 {
            let r = build_pgn(n, 2, Some(&a)).unwrap();
            assert!(r.passed(), "{}", r.to_json());
            assert_eq!(r.p, planted.get(n, 1).unwrap());
        }
    }

    #[test]
    fn q_poly_examples() {
        let p = LaurentPoly::pic0(2);
        assert_eq!(q_poly(&p).unwrap(), LaurentPoly::one(2));
        assert!(q_poly(&LaurentPoly::zero(2)).unwrap().is_empty());
        assert_eq!(q_poly(&p.times(&p)).unwrap(), p);
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_char(1, 2).unwrap(), BigInt::from(1));
        assert_eq!(euler_char(2, 2).unwrap(), BigInt::from(-3));
        assert_eq!(euler_char(4, 2).unwrap(), BigInt::from(2));
        assert!(euler_char(2, 1).is_err());
    }

    #[test]
    fn linear_parts() {
        for n in 2..=4 {
            assert!(linear_part_check(n, 2).unwrap());
        }
    }

    #[test]
    fn d_count_examples() {
        for n in 1..=4 {
            assert_eq!(d_count(n, 1, &Symbolic).unwrap(), SymPoly::symbol(n, 1));
        }
        let want = SymPoly::symbol(2, 2).minus(&SymPoly::symbol(2, 1)).scale(&ratio(1, 2));
        assert_eq!(d_count(4, 2, &Symbolic).unwrap(), want);
        let want = SymPoly::symbol(1, 2).minus(&SymPoly::symbol(1, 1)).scale(&ratio(1, 2));
        assert_eq!(d_count(2, 2, &Symbolic).unwrap(), want);
        assert!(d_count(3, 2, &Symbolic).is_err());
    }

    #[test]
    fn orbit_inversion() {
        assert!(orbit_inversion_check(&BTreeMap::new(), 8).unwrap());
        let mut single = BTreeMap::new();
        single.insert((1, 1), rat(1));
        assert!(orbit_inversion_check(&single, 8).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut o = BTreeMap::new();
        for r in 1..=12 {
            for l in 1..=12 / r {
                o.insert((r, l), rat(rng.gen_range(-20..=20)));
            }
        }
        assert!(orbit_inversion_check(&o, 12).unwrap());
    }
}
