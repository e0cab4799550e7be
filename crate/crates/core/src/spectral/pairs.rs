//! Discrete pairs `(P, π̃)` with a Weyl element `w`, modeled by block data,
//! and the closed forms attached to them.

use super::matrix::{kappa, QMatrix};
use super::trees::spanning_tree_sum;
use crate::combinat::{divisors, mobius, multinomial, one_minus_power, partitions, partitions_restricted};
use crate::counting::{aut_log_series, RationalTable};
use crate::error::{Error, Result};
use crate::series::TruncatedSeries;
use crate::util::{binom_rat, factorial, gcd_u64, rat};
use num::rational::BigRational;
use num::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// One inertial class `Π = π ⊠ ν` appearing with multiplicity `m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairBlock {
    /// Rank `r(π)` of the cuspidal part.
    pub d: u32,
    /// Speh parameter.
    pub nu: u32,
    /// `|Fix(Π)|`, a divisor of `d`.
    pub fix: u32,
    pub m: u32,
    /// Orbit lengths of `w` on the `m` copies.
    pub orbits: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscretePairDatum {
    pub g: u32,
    pub blocks: Vec<PairBlock>,
}

impl DiscretePairDatum {
    pub fn validate(&self) -> Result<()> {
        if self.g < 2 {
            return Err(Error::Argument(format!("genus must be >= 2, got {}", self.g)));
        }
        if self.blocks.is_empty() {
            return Err(Error::Argument("a discrete pair needs at least one block".into()));
        }
        for (i, b) in self.blocks.iter().enumerate() {
            if b.d == 0 || b.nu == 0 || b.fix == 0 || b.m == 0 {
                return Err(Error::Argument(format!("block {i}: d, nu, fix, m must be positive")));
            }
            if b.d % b.fix != 0 {
                return Err(Error::Argument(format!("block {i}: fix={} does not divide d={}", b.fix, b.d)));
            }
            if b.orbits.contains(&0) || b.orbits.iter().sum::<u32>() != b.m {
                return Err(Error::Argument(format!("block {i}: orbit lengths must be positive and sum to m")));
            }
        }
        Ok(())
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let d: DiscretePairDatum = serde_json::from_str(s)?;
        d.validate()?;
        Ok(d)
    }

    /// Total rank `Σ m·d·ν`.
    pub fn n(&self) -> u64 {
        self.blocks.iter().map(|b| (b.m * b.d * b.nu) as u64).sum()
    }

    /// `a_ν = Σ_{Π ∈ I_ν} m_Π d_Π`.
    pub fn a_nu(&self) -> BTreeMap<u32, u64> {
        let mut a = BTreeMap::new();
        for b in &self.blocks {
            *a.entry(b.nu).or_insert(0) += (b.m * b.d) as u64;
        }
        a
    }

    /// The set `N_π̃` of Speh parameters present.
    pub fn nu_set(&self) -> BTreeSet<u32> {
        self.blocks.iter().map(|b| b.nu).collect()
    }

    /// `|w|`, the product of all orbit lengths.
    pub fn w_order(&self) -> u64 {
        self.blocks.iter().flat_map(|b| &b.orbits).map(|&l| l as u64).product()
    }

    /// Number of `(block, orbit)` vertices.
    pub fn vertex_count(&self) -> usize {
        self.blocks.iter().map(|b| b.orbits.len()).sum()
    }

    fn vertices(&self) -> Vec<(usize, u32)> {
        self.blocks
            .iter()
            .enumerate()
            .flat_map(|(i, b)| b.orbits.iter().map(move |&l| (i, l)))
            .collect()
    }

    /// `Σ_ν a_ν min(μ, ν)`.
    fn truncated_weight(&self, mu: u32) -> u64 {
        self.a_nu().iter().map(|(&nu, &a)| a * nu.min(mu) as u64).sum()
    }

    /// `y_Π = |Fix(Π)| m_Π + (2g−2) d_Π Σ_ν a_ν min(ν_Π, ν)`.
    fn y(&self, b: &PairBlock) -> i64 {
        (b.fix * b.m) as i64 + (2 * self.g as i64 - 2) * b.d as i64 * self.truncated_weight(b.nu) as i64
    }
}

/// `N − P` for the normalized intertwining factor attached to the root between
/// `Π₁` and `Π₂`: `min(ν)(2g−2)d₁d₂`, plus `|Fix|` when `Π₁ = Π₂`.
pub fn n_minus_p(p1: &PairBlock, p2: &PairBlock, g: u32, same_inertial: bool) -> Result<i64> {
    if g < 2 {
        return Err(Error::Argument(format!("genus must be >= 2, got {g}")));
    }
    if same_inertial && (p1.d, p1.nu, p1.fix) != (p2.d, p2.nu, p2.fix) {
        return Err(Error::Argument("equal inertial classes must share d, nu and fix".into()));
    }
    let base = p1.nu.min(p2.nu) as i64 * (2 * g as i64 - 2) * p1.d as i64 * p2.d as i64;
    Ok(if same_inertial { base + p1.fix as i64 } else { base })
}

/// Edge weight between vertices `(i, l_s)` and `(j, l_t)`.
fn edge_weight(datum: &DiscretePairDatum, (i, ls): (usize, u32), (j, lt): (usize, u32)) -> Result<BigRational> {
    let x = n_minus_p(&datum.blocks[i], &datum.blocks[j], datum.g, i == j)?;
    Ok(rat(x * ls as i64 * lt as i64))
}

/// `M_{π̃,w}`: rows and columns indexed by `(block, orbit)`.
pub fn build_pair_matrix(datum: &DiscretePairDatum) -> Result<QMatrix> {
    datum.validate()?;
    let verts = datum.vertices();
    let r = verts.len();
    let mut m = QMatrix::zeros(r);
    for (p, &(i, ls)) in verts.iter().enumerate() {
        for (q, &vq) in verts.iter().enumerate() {
            m.set(p, q, -edge_weight(datum, (i, ls), vq)?);
        }
        let diag = m.get(p, p) + rat(datum.y(&datum.blocks[i]) * ls as i64);
        m.set(p, p, diag);
    }
    if !m.is_symmetric() || !m.row_sums_vanish() || !m.col_sums_vanish() {
        return Err(Error::Internal("pair matrix is not a symmetric zero-sum matrix".into()));
    }
    Ok(m)
}

/// Tree sum over `K_r` with edge weights `l_s l_t (N − P)`.
pub fn pair_tree_sum(datum: &DiscretePairDatum) -> Result<BigRational> {
    datum.validate()?;
    let verts = datum.vertices();
    let mut w = vec![vec![BigRational::zero(); verts.len()]; verts.len()];
    for (p, &vp) in verts.iter().enumerate() {
        for (q, &vq) in verts.iter().enumerate().skip(p + 1) {
            w[p][q] = edge_weight(datum, vp, vq)?;
        }
    }
    spanning_tree_sum(verts.len(), |p, q| w[p][q].clone(), &BigRational::one())
}

/// The product formula for `κ(M_{π̃,w})`:
/// `|w| ∏d (2g−2)^{|I|−1} ∏_μ (Σ a_ν min(μ,ν))^{|I_μ|} / (n Σ a_ν) · ∏_Π y_Π^{α_Π − 1}`.
pub fn matr_closed_form(datum: &DiscretePairDatum) -> Result<BigRational> {
    datum.validate()?;
    let two_g = rat(2 * datum.g as i64 - 2);
    let mut num = rat(datum.w_order() as i64);
    for b in &datum.blocks {
        num *= rat(b.d as i64);
        num *= rat(datum.truncated_weight(b.nu) as i64);
        num *= num::pow::pow(rat(datum.y(b)), b.orbits.len() - 1);
    }
    num *= num::pow::pow(two_g, datum.blocks.len() - 1);
    let sum_a: u64 = datum.a_nu().values().sum();
    Ok(num / rat((datum.n() * sum_a) as i64))
}

/// The same product with the extra factor `|N_π̃|`.
pub fn matr_closed_form_with_nu_count(datum: &DiscretePairDatum) -> Result<BigRational> {
    Ok(matr_closed_form(datum)? * rat(datum.nu_set().len() as i64))
}

/// The three computations of the basis sum for one datum.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MatrTriple {
    pub tree_sum: String,
    pub kappa: String,
    pub closed_form: String,
    pub closed_form_with_nu_count: String,
    pub agree: bool,
    pub nu_count_variant_agrees: bool,
}

pub fn matr_triple(datum: &DiscretePairDatum) -> Result<MatrTriple> {
    let tree = pair_tree_sum(datum)?;
    let k = kappa(&build_pair_matrix(datum)?)?;
    let closed = matr_closed_form(datum)?;
    let with_n = matr_closed_form_with_nu_count(datum)?;
    Ok(MatrTriple {
        agree: tree == k && k == closed,
        nu_count_variant_agrees: with_n == tree,
        tree_sum: tree.to_string(),
        kappa: k.to_string(),
        closed_form: closed.to_string(),
        closed_form_with_nu_count: with_n.to_string(),
    })
}

/// Random valid datum with at most `max_vertices` orbits in total.
pub fn random_datum<G: Rng>(max_vertices: usize, rng: &mut G) -> DiscretePairDatum {
    let g = rng.gen_range(2..=4);
    let mut blocks = Vec::new();
    let mut budget = max_vertices.max(1);
    let nblocks = rng.gen_range(1..=3.min(budget));
    for _ in 0..nblocks {
        if budget == 0 {
            break;
        }
        let d = rng.gen_range(1..=4u32);
        let divs = divisors(d as u64);
        let fix = divs[rng.gen_range(0..divs.len())] as u32;
        let nu = rng.gen_range(1..=3);
        let norbits = rng.gen_range(1..=budget.min(3));
        budget -= norbits;
        let orbits: Vec<u32> = (0..norbits).map(|_| rng.gen_range(1..=3)).collect();
        let m = orbits.iter().sum();
        blocks.push(PairBlock { d, nu, fix, m, orbits });
    }
    DiscretePairDatum { g, blocks }
}

/// `δ(π̃, L)` as a character sum over a cyclic group of order
/// `d = gcd(l_i·fix_i)`: `d` if `d` divides `1 − Σ l_i(l_i−1)fix_i/2`, else 0.
pub fn delta_character_sum(ls: &[u64], fixes: &[u64]) -> Result<i64> {
    check_delta_args(ls, fixes)?;
    let d = ls.iter().zip(fixes).fold(0, |acc, (&l, &f)| gcd_u64(acc, l * f)) as i64;
    let e: i64 = 1 - ls.iter().zip(fixes).map(|(&l, &f)| (l * (l - 1) / 2 * f) as i64).sum::<i64>();
    Ok(if e.rem_euclid(d) == 0 { d } else { 0 })
}

/// `Σ_{l | gcd(l_i fix_i)} μ(l) (−1)^{Σ_j (l_j + l_j/(l/(l, fix_j)))}`.
pub fn delta_mobius_sum(ls: &[u64], fixes: &[u64]) -> Result<i64> {
    check_delta_args(ls, fixes)?;
    let d = ls.iter().zip(fixes).fold(0, |acc, (&l, &f)| gcd_u64(acc, l * f));
    let mut total = 0;
    for l in divisors(d) {
        let mu = mobius(l);
        if mu == 0 {
            continue;
        }
        let e: u64 = ls
            .iter()
            .zip(fixes)
            .map(|(&lj, &f)| lj + lj / (l / gcd_u64(l, f)))
            .sum();
        total += if e.is_multiple_of(2) { mu } else { -mu };
    }
    Ok(total)
}

fn check_delta_args(ls: &[u64], fixes: &[u64]) -> Result<()> {
    if ls.len() != fixes.len() || ls.is_empty() {
        return Err(Error::Argument("orbit and fix lists must be nonempty and of equal length".into()));
    }
    if ls.iter().chain(fixes).any(|&x| x == 0) {
        return Err(Error::Argument("orbit lengths and fixes must be positive".into()));
    }
    Ok(())
}

/// Both evaluations of `δ`; disagreement is a theorem violation.
pub fn delta_pair(ls: &[u64], fixes: &[u64]) -> Result<i64> {
    let a = delta_character_sum(ls, fixes)?;
    let b = delta_mobius_sum(ls, fixes)?;
    if a != b {
        return Err(Error::Violation(format!(
            "delta methods disagree on l={ls:?}, fix={fixes:?}: {a} vs {b}"
        )));
    }
    Ok(a)
}

/// `ξ_Π = l/(l, |Fix(Π)|)`.
pub fn xi(l: u32, fix: u32) -> u32 {
    l / gcd_u64(l as u64, fix as u64) as u32
}

/// `∏_Π binom(S_Π/ξ_Π, m_Π/ξ_Π) |Fix(Π)|^{m_Π} (−1)^{m_Π/ξ_Π} m_Π!`, with
/// `S_Π = −(2g−2) d_Π Σ_ν a_ν min(ν_Π, ν)/|Fix(Π)|`; zero unless `ξ_Π | m_Π`.
///
/// Orbit data of the datum is ignored: the summand already aggregates over `w`.
pub fn pair_contribution(datum: &DiscretePairDatum, l: u32) -> Result<BigRational> {
    datum.validate()?;
    if l == 0 || !datum.n().is_multiple_of(l as u64) {
        return Err(Error::Argument(format!("l={l} must divide n={}", datum.n())));
    }
    let two_g = rat(2 * datum.g as i64 - 2);
    let mut acc = BigRational::one();
    for b in &datum.blocks {
        let x = xi(l, b.fix);
        if b.m % x != 0 {
            return Ok(BigRational::zero());
        }
        let s = -(&two_g) * rat(b.d as i64) * rat(datum.truncated_weight(b.nu) as i64) / rat(b.fix as i64);
        let k = (b.m / x) as u64;
        acc *= binom_rat(&(s / rat(x as i64)), k);
        acc *= num::pow::pow(rat(b.fix as i64), b.m as usize);
        acc *= BigRational::from_integer(factorial(b.m as u64));
        if k % 2 == 1 {
            acc = -acc;
        }
    }
    Ok(acc)
}

/// `1/((2g−2) n Σ_ν a_ν)`, the scalar in front of [`pair_contribution`].
pub fn pair_prefactor(datum: &DiscretePairDatum) -> Result<BigRational> {
    datum.validate()?;
    let sum_a: u64 = datum.a_nu().values().sum();
    Ok(rat(1) / rat((2 * datum.g as i64 - 2) * datum.n() as i64 * sum_a as i64))
}

/// Values `D_j(d)` for `d | j`, keyed by `(j, d)`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct DTable(pub BTreeMap<(u32, u32), BigRational>);

impl DTable {
    pub fn get(&self, j: u32, d: u32) -> Result<&BigRational> {
        self.0
            .get(&(j, d))
            .ok_or_else(|| Error::Argument(format!("D table has no entry D_{j}({d})")))
    }

    /// `C_s(X_t) = Σ_{d | t} d·D_{sd}(d)` for `s·t ≤ max`.
    pub fn to_c_values(&self, max: u32) -> Result<RationalTable> {
        let mut out = BTreeMap::new();
        for s in 1..=max {
            for t in 1..=max / s {
                let mut c = BigRational::zero();
                for d in divisors(t as u64) {
                    let d = d as u32;
                    c += rat(d as i64) * self.get(s * d, d)?;
                }
                out.insert((s, t), c);
            }
        }
        Ok(RationalTable(out))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let m: serde_json::Map<String, serde_json::Value> = self
            .0
            .iter()
            .map(|(&(j, d), v)| (format!("{j},{d}"), serde_json::Value::String(v.to_string())))
            .collect();
        serde_json::Value::Object(m)
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let obj = v.as_object().ok_or_else(|| Error::Parse("D table must be an object".into()))?;
        let mut t = BTreeMap::new();
        for (key, val) in obj {
            let (j, d) = key
                .split_once(',')
                .and_then(|(j, d)| Some((j.trim().parse().ok()?, d.trim().parse().ok()?)))
                .ok_or_else(|| Error::Parse(format!("bad D table key {key:?}")))?;
            let text = val.as_str().ok_or_else(|| Error::Parse(format!("D_{j}({d}) must be a string")))?;
            t.insert((j, d), crate::util::parse_rational(text)?);
        }
        Ok(DTable(t))
    }
}

pub fn random_dtable<G: Rng>(max_j: u32, rng: &mut G) -> DTable {
    let mut t = BTreeMap::new();
    for j in 1..=max_j {
        for d in divisors(j as u64) {
            let v = BigRational::new(rng.gen_range(-6i64..=6).into(), rng.gen_range(1i64..=3).into());
            t.insert((j, d as u32), v);
        }
    }
    DTable(t)
}

/// The three evaluations compared by [`aggregation_check`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AggregationValues {
    pub brute_force: String,
    pub product_series: String,
    pub aut_power: String,
}

/// All ways to write `total` as an ordered sum of `parts` nonnegative integers.
fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Sum over classes of pairs with `k` cuspidal factors of rank `j` and
/// `|Fix| = d`: `Σ_{(i^{b_i}) ⊢_ξ k} binom(D, Σb) multinomial(b) ∏ ((−1)^{i/ξ} binom(Y, i/ξ))^{b_i}`.
fn class_sum(k: u32, xi: u32, dval: &BigRational, y: &BigRational) -> BigRational {
    if k == 0 {
        return BigRational::one();
    }
    if !k.is_multiple_of(xi) {
        return BigRational::zero();
    }
    let mut total = BigRational::zero();
    for lam in partitions_restricted(k, xi) {
        let counts: Vec<u32> = lam.multiplicities().map(|(_, b)| b).collect();
        let mut term = binom_rat(dval, lam.num_parts() as u64) * BigRational::from_integer(multinomial(&counts));
        for (i, b) in lam.multiplicities() {
            let mut f = binom_rat(y, (i / xi) as u64);
            if (i / xi) % 2 == 1 {
                f = -f;
            }
            term *= num::pow::pow(f, b as usize);
        }
        total += term;
    }
    total
}

/// The cuspidal-pair sum of rank `a` against `[z^a]` of
/// `∏_{j,d} (1 − z^{jξ_d})^{−(2g−2) S D_j(d) j/(d ξ_d)}` and against
/// `[z^a] aut_{X_l}(z^l)^{(2g−2)S/l}` with `C` recovered from `D`.
pub fn aggregation_check(a: u32, l: u32, g: u32, s: &BigRational, table: &DTable) -> Result<(bool, AggregationValues)> {
    if a == 0 || l == 0 {
        return Err(Error::Argument("a and l must be positive".into()));
    }
    let two_g = rat(2 * g as i64 - 2);
    let y = |j: u32, d: u32| -(&two_g) * s * rat(j as i64) / rat((d * xi(l, d)) as i64);

    let mut brute = BigRational::zero();
    for lam in partitions(a) {
        let mut per_j: Vec<Vec<BigRational>> = Vec::new();
        for (j, c) in lam.multiplicities() {
            let divs: Vec<u32> = divisors(j as u64).into_iter().map(|d| d as u32).collect();
            let mut options = Vec::new();
            for split in compositions(c, divs.len()) {
                let mut term = BigRational::one();
                for (&d, &k) in divs.iter().zip(&split) {
                    term *= class_sum(k, xi(l, d), table.get(j, d)?, &y(j, d));
                    if term.is_zero() {
                        break;
                    }
                }
                options.push(term);
            }
            per_j.push(options);
        }
        brute += per_j.iter().map(|o| o.iter().sum::<BigRational>()).product::<BigRational>();
    }

    let cap = a as usize;
    let mut series = TruncatedSeries::one(cap, &BigRational::zero());
    for j in 1..=a {
        for d in divisors(j as u64) {
            let d = d as u32;
            let x = y(j, d) * table.get(j, d)?;
            series = series.times(&one_minus_power(&x, (j * xi(l, d)) as usize, cap));
        }
    }
    let product = series.coeff(cap)?.clone();

    let ctab = table.to_c_values(a)?;
    let log = aut_log_series(&ctab, l, cap)?;
    let aut = log.scale(&(two_g * s / rat(l as i64))).exp()?.coeff(cap)?.clone();

    let ok = brute == product && product == aut;
    Ok((
        ok,
        AggregationValues {
            brute_force: brute.to_string(),
            product_series: product.to_string(),
            aut_power: aut.to_string(),
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::ratio;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn block(d: u32, nu: u32, fix: u32, orbits: &[u32]) -> PairBlock {
        PairBlock {
            d,
            nu,
            fix,
            m: orbits.iter().sum(),
            orbits: orbits.to_vec(),
        }
    }

    #[test]
    fn n_minus_p_examples() {
        let p = block(1, 1, 1, &[1]);
        assert_eq!(n_minus_p(&p, &p, 2, false).unwrap(), 2);
        let q = block(2, 1, 2, &[1]);
        assert_eq!(n_minus_p(&q, &q, 2, true).unwrap(), 10);
        let a = block(1, 3, 1, &[1]);
        let b = block(1, 1, 1, &[1]);
        assert_eq!(n_minus_p(&a, &b, 3, false).unwrap(), 4);
        assert!(n_minus_p(&a, &b, 3, true).is_err());
    }

    #[test]
    fn pair_matrix_shapes() {
        let one = DiscretePairDatum {
            g: 2,
            blocks: vec![block(1, 1, 1, &[1])],
        };
        assert_eq!(build_pair_matrix(&one).unwrap(), QMatrix::zeros(1));
        let two = DiscretePairDatum {
            g: 3,
            blocks: vec![block(2, 1, 1, &[1, 1])],
        };
        let m = build_pair_matrix(&two).unwrap();
        assert_eq!(m.get(0, 0), &-m.get(0, 1));
        assert_eq!(m.get(0, 0), &rat(4 * 4 + 1));
    }

    #[test]
    fn closed_form_hand_cases() {
        let single = DiscretePairDatum {
            g: 2,
            blocks: vec![block(3, 2, 1, &[1])],
        };
        assert_eq!(matr_closed_form(&single).unwrap(), rat(1));
        // one Π, two orbits: the single edge l1 l2 (fix + (2g−2)d²ν)
        let two = DiscretePairDatum {
            g: 3,
            blocks: vec![block(2, 2, 2, &[1, 2])],
        };
        assert_eq!(matr_closed_form(&two).unwrap(), rat(2 * (2 + 4 * 4 * 2)));
        // two blocks with different ν, one orbit each: (2g−2)d1 d2 min ν
        let split = DiscretePairDatum {
            g: 2,
            blocks: vec![block(1, 1, 1, &[1]), block(2, 3, 1, &[1])],
        };
        assert_eq!(matr_closed_form(&split).unwrap(), rat(2 * 2));
        assert_eq!(matr_closed_form_with_nu_count(&split).unwrap(), rat(8));
    }

    #[test]
    fn triple_oracle_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let d = random_datum(5, &mut rng);
            let t = matr_triple(&d).unwrap();
            assert!(t.agree, "{d:?} {t:?}");
        }
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta_pair(&[1], &[1]).unwrap(), 1);
        assert_eq!(delta_pair(&[3, 5], &[1, 1]).unwrap(), 1);
        assert_eq!(delta_character_sum(&[2], &[1]).unwrap(), 2);
        assert_eq!(delta_mobius_sum(&[2], &[1]).unwrap(), 2);
        assert_eq!(delta_pair(&[2, 2], &[1, 1]).unwrap(), 0);
        for a in 1..=6u64 {
            for b in 1..=6u64 {
                for f in 1..=4u64 {
                    assert!(delta_pair(&[a, b], &[f, 1]).is_ok());
                }
            }
        }
    }

    #[test]
    fn contribution_examples() {
        let d = DiscretePairDatum {
            g: 2,
            blocks: vec![block(2, 1, 2, &[1])],
        };
        // S = −2·2·2/2 = −4, contribution −S·fix = 8
        assert_eq!(pair_contribution(&d, 1).unwrap(), rat(8));
        let odd = DiscretePairDatum {
            g: 2,
            blocks: vec![block(1, 2, 1, &[1])],
        };
        assert_eq!(pair_contribution(&odd, 2).unwrap(), rat(0));
        assert_eq!(pair_prefactor(&d).unwrap(), ratio(1, 2 * 2 * 2));
    }

    #[test]
    fn aggregation_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for a in 1..=4 {
            for l in 1..=2 {
                let t = random_dtable(a, &mut rng);
                let (ok, v) = aggregation_check(a, l, 3, &ratio(3, 2), &t).unwrap();
                assert!(ok, "a={a} l={l} {v:?}");
            }
        }
    }

    #[test]
    fn datum_json() {
        let s = r#"{"g":2,"blocks":[{"d":2,"nu":1,"fix":1,"m":2,"orbits":[1,1]}]}"#;
        let d = DiscretePairDatum::from_json_str(s).unwrap();
        assert_eq!(d.n(), 4);
        let bad = r#"{"g":2,"blocks":[{"d":2,"nu":1,"fix":3,"m":1,"orbits":[1]}]}"#;
        assert!(DiscretePairDatum::from_json_str(bad).is_err());
    }
}
