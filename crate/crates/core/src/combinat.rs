//! Partitions, Möbius function, divisors and generalized binomials, with
//! brute-force checks of the generating-function identities used by the
//! master formula.

use crate::error::{Error, Result};
use crate::series::{Ring, TruncatedSeries};
use crate::util::{binom_rat, factorial, rat};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub fn mobius(n: u64) -> i64 {
    assert!(n >= 1, "mobius is defined for n >= 1");
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Positive divisors in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Multiset of parts stored as multiplicities `j ↦ a_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    mult: BTreeMap<u32, u32>,
    n: u32,
}

impl Partition {
    pub fn from_parts(parts: &[u32]) -> Self {
        let mut mult = BTreeMap::new();
        for &p in parts {
            assert!(p > 0, "parts must be positive");
            *mult.entry(p).or_insert(0) += 1;
        }
        let n = parts.iter().sum();
        Partition { mult, n }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Multiplicity `a_j`.
    pub fn a(&self, j: u32) -> u32 {
        self.mult.get(&j).copied().unwrap_or(0)
    }

    /// Pairs `(j, a_j)` with `a_j > 0`, increasing in `j`.
    pub fn multiplicities(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.mult.iter().map(|(&j, &a)| (j, a))
    }

    /// Parts in nonincreasing order.
    pub fn parts(&self) -> Vec<u32> {
        let mut v = Vec::new();
        for (&j, &a) in self.mult.iter().rev() {
            v.extend(std::iter::repeat_n(j, a as usize));
        }
        v
    }

    /// `Σ_j a_j`.
    pub fn num_parts(&self) -> u32 {
        self.mult.values().sum()
    }

    /// `S_j(λ) = Σ_ν a_ν min(ν, j)`.
    pub fn s_weight(&self, j: u32) -> u64 {
        self.mult
            .iter()
            .map(|(&nu, &a)| a as u64 * nu.min(j) as u64)
            .sum()
    }
}

fn extend_partitions(rest: u32, max: u32, step: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition::from_parts(cur));
        return;
    }
    let mut p = max.min(rest) / step * step;
    while p >= step {
        cur.push(p);
        extend_partitions(rest - p, p, step, cur, out);
        cur.pop();
        p -= step;
    }
}

/// All partitions of `n`, largest parts first in reverse lexicographic order.
pub fn partitions(n: u32) -> Vec<Partition> {
    partitions_restricted(n, 1)
}

/// Partitions of `m` all of whose parts are divisible by `xi`.
pub fn partitions_restricted(m: u32, xi: u32) -> Vec<Partition> {
    assert!(xi >= 1, "xi must be positive");
    let mut out = Vec::new();
    if !m.is_multiple_of(xi) {
        return out;
    }
    extend_partitions(m, m, xi, &mut Vec::new(), &mut out);
    out
}

/// Partition numbers `p(0..=n)` by Euler's pentagonal recurrence.
pub fn partition_numbers(n: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); n + 1];
    p[0] = BigInt::one();
    for m in 1..=n {
        let mut acc = BigInt::zero();
        let mut k: i64 = 1;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += &p[m - g1] * sign;
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= m {
                acc += &p[m - g2] * sign;
            }
            k += 1;
        }
        p[m] = acc;
    }
    p
}

/// `x(x−1)⋯(x−k+1)/k!` in any ring containing the rationals.
pub fn binom_ring<R: Ring>(x: &R, k: u64) -> R {
    let mut acc = x.one_like();
    for i in 0..k {
        acc = acc.times(&x.minus(&x.from_rational_like(&rat(i as i64))));
    }
    acc.scale(&BigRational::new(BigInt::one(), factorial(k)))
}

pub fn multinomial(counts: &[u32]) -> BigInt {
    let total: u64 = counts.iter().map(|&c| c as u64).sum();
    counts
        .iter()
        .fold(factorial(total), |acc, &c| acc / factorial(c as u64))
}

/// `m! Σ_{(j^{c_j}) ⊢_ξ m} S^{Σc_j − 1} / (∏ c_j! j^{c_j})` against
/// `(m−1)! · binom(S/ξ + m/ξ − 1, m/ξ − 1)`.
pub fn cycle_sum_identity_check(m: u32, xi: u32, s: &BigRational) -> Result<bool> {
    if m == 0 || xi == 0 || !m.is_multiple_of(xi) {
        return Err(Error::Argument(format!("need xi | m with m, xi >= 1, got m={m}, xi={xi}")));
    }
    let mut lhs = BigRational::zero();
    for lam in partitions_restricted(m, xi) {
        let mut den = BigInt::one();
        for (j, c) in lam.multiplicities() {
            den *= factorial(c as u64) * num::pow::pow(BigInt::from(j), c as usize);
        }
        let pw = crate::util::rat_pow(s, lam.num_parts() as i64 - 1);
        lhs += pw / BigRational::from_integer(den);
    }
    lhs *= BigRational::from_integer(factorial(m as u64));
    let top = s / rat(xi as i64) + rat((m / xi) as i64 - 1);
    let rhs = BigRational::from_integer(factorial(m as u64 - 1)) * binom_rat(&top, (m / xi - 1) as u64);
    Ok(lhs == rhs)
}

/// `Σ_{(i^{b_i}) ⊢_ξ k} binom(D, Σb) · multinomial(b) · ∏ binom(S, i/ξ)^{b_i}`
/// against `binom(DS, k/ξ)`.
pub fn binomial_convolution_check(k: u32, xi: u32, d: &BigRational, s: &BigRational) -> Result<bool> {
    if k == 0 || xi == 0 || !k.is_multiple_of(xi) {
        return Err(Error::Argument(format!("need xi | k with k, xi >= 1, got k={k}, xi={xi}")));
    }
    let mut lhs = BigRational::zero();
    for lam in partitions_restricted(k, xi) {
        let counts: Vec<u32> = lam.multiplicities().map(|(_, b)| b).collect();
        let mut term = binom_rat(d, lam.num_parts() as u64)
            * BigRational::from_integer(multinomial(&counts));
        for (i, b) in lam.multiplicities() {
            term *= num::pow::pow(binom_rat(s, (i / xi) as u64), b as usize);
        }
        lhs += term;
    }
    Ok(lhs == binom_rat(&(d * s), (k / xi) as u64))
}

/// `Σ_{m : ml/(l,mt) | L} μ(m)`, summing over squarefree `m` built from
/// the primes of `t·l·L` (no other `m` can satisfy the condition).
pub fn mobius_divisor_sum(t: u64, l: u64, big_l: u64) -> i64 {
    let mut primes = prime_factors(t);
    for p in prime_factors(l).into_iter().chain(prime_factors(big_l)) {
        if !primes.contains(&p) {
            primes.push(p);
        }
    }
    let mut total = 0;
    for mask in 0u32..(1 << primes.len()) {
        let mut m = 1u64;
        let mut mu = 1;
        for (i, &p) in primes.iter().enumerate() {
            if mask & (1 << i) != 0 {
                m *= p;
                mu = -mu;
            }
        }
        let v = m * l / num::integer::gcd(l, m * t);
        if big_l.is_multiple_of(v) {
            total += mu;
        }
    }
    total
}

pub fn mobius_divisor_lemma_check(t: u64, l: u64, big_l: u64) -> bool {
    let expected = i64::from(big_l == 1 && t.is_multiple_of(l));
    mobius_divisor_sum(t, l, big_l) == expected
}

/// `Σ_{i ≥ 0} binom(x, i) (−z^step)^i` truncated at `cap`, i.e. `(1 − z^step)^x`.
pub fn one_minus_power<R: Ring>(x: &R, step: usize, cap: usize) -> TruncatedSeries<R> {
    assert!(step >= 1, "step must be positive");
    let mut coeffs = vec![x.zero_like(); cap + 1];
    let mut i = 0;
    while i * step <= cap {
        let b = binom_ring(x, i as u64);
        coeffs[i * step] = if i % 2 == 0 { b } else { b.negate() };
        i += 1;
    }
    TruncatedSeries::from_coeffs(coeffs, cap, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPoly;
    use crate::util::ratio;

    #[test]
    fn mobius_values() {
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(12), 0);
        assert_eq!(mobius(30), -1);
        for n in 1..=2000u64 {
            let s: i64 = divisors(n).into_iter().map(mobius).sum();
            assert_eq!(s, i64::from(n == 1), "n={n}");
        }
    }

    #[test]
    fn partition_examples() {
        let p2 = partitions(2);
        assert_eq!(p2.len(), 2);
        assert!(p2.contains(&Partition::from_parts(&[1, 1])));
        assert!(p2.contains(&Partition::from_parts(&[2])));
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(10).len(), 42);
        let pn = partition_numbers(40);
        for n in 1..=25u32 {
            assert_eq!(BigInt::from(partitions(n).len()), pn[n as usize]);
        }
        assert_eq!(pn[40], BigInt::from(37338));
    }

    #[test]
    fn s_weight_examples() {
        assert_eq!(Partition::from_parts(&[1, 1, 1]).s_weight(5), 3);
        assert_eq!(Partition::from_parts(&[2]).s_weight(1), 1);
        assert_eq!(Partition::from_parts(&[1, 2]).s_weight(2), 3);
    }

    #[test]
    fn restricted_examples() {
        let r = partitions_restricted(4, 2);
        assert_eq!(r, vec![Partition::from_parts(&[4]), Partition::from_parts(&[2, 2])]);
        assert!(partitions_restricted(3, 2).is_empty());
        assert_eq!(partitions_restricted(6, 1).len(), 11);
    }

    #[test]
    fn binomials() {
        assert_eq!(binom_ring(&rat(5), 2), rat(10));
        for k in 0..6 {
            assert_eq!(binom_ring(&rat(-1), k), rat(if k % 2 == 0 { 1 } else { -1 }));
        }
        let g = LaurentPoly::gamma(0);
        let want = g.times(&g.minus(&LaurentPoly::one(0))).scale(&ratio(1, 2));
        assert_eq!(binom_ring(&g, 2), want);
    }

    #[test]
    fn generating_function_lemmas() {
        for s in [rat(1), rat(3), rat(-2), ratio(5, 7)] {
            assert!(cycle_sum_identity_check(1, 1, &s).unwrap());
        }
        assert!(cycle_sum_identity_check(4, 2, &rat(3)).unwrap());
        assert!(cycle_sum_identity_check(6, 1, &rat(-2)).unwrap());
        assert!(cycle_sum_identity_check(3, 2, &rat(1)).is_err());
        assert!(binomial_convolution_check(2, 2, &ratio(3, 4), &rat(5)).unwrap());
        assert!(binomial_convolution_check(4, 2, &rat(2), &rat(3)).unwrap());
        assert!(binomial_convolution_check(6, 3, &rat(-1), &ratio(1, 2)).unwrap());
        assert!(binomial_convolution_check(5, 2, &rat(1), &rat(1)).is_err());
    }

    #[test]
    fn mobius_lemma_examples() {
        assert!(mobius_divisor_lemma_check(1, 1, 1));
        assert_eq!(mobius_divisor_sum(2, 4, 1), 0);
        assert_eq!(mobius_divisor_sum(6, 3, 1), 1);
        for t in 1..=12 {
            for l in 1..=12 {
                for big_l in 1..=12 {
                    assert!(mobius_divisor_lemma_check(t, l, big_l));
                }
            }
        }
    }

    #[test]
    fn one_minus_power_matches_product() {
        let s = one_minus_power(&rat(3), 2, 8);
        let base = TruncatedSeries::from_coeffs(vec![rat(1), rat(0), rat(-1)], 8, &rat(0));
        assert_eq!(s, base.times(&base).times(&base));
    }
}
