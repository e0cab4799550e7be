//! Lattice sums of characteristic functions over a standard Levi of `GL_n`
//! with blocks `n_1, …, n_r`, their closed forms, and the averaging over
//! `n`-th roots of unity.
//!
//! A point `λ` of `(C^×)^r` with `∏ λ_i^{n_i} = 1` stands for a character of
//! the center. `s` is a permutation of the blocks given as `s[i] = s(i)`;
//! the parabolic `Q_s` has simple coroots `λ_{s⁻¹(i)}/λ_{s⁻¹(i+1)}`.

use crate::error::{Error, Result};
use num::complex::Complex64;
use num::integer::Integer;
use rand::Rng;
use serde::Serialize;

fn validate(ns: &[u32], s: &[usize]) -> Result<()> {
    if ns.is_empty() || ns.contains(&0) {
        return Err(Error::Argument("block sizes must be positive".into()));
    }
    if s.len() != ns.len() {
        return Err(Error::Dimension(format!("permutation has {} entries, need {}", s.len(), ns.len())));
    }
    let mut seen = vec![false; s.len()];
    for &v in s {
        if v >= s.len() || seen[v] {
            return Err(Error::Argument("not a permutation".into()));
        }
        seen[v] = true;
    }
    Ok(())
}

/// `s⁻¹` as a list: `inv[j] = s⁻¹(j)`.
pub fn inverse(s: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; s.len()];
    for (i, &v) in s.iter().enumerate() {
        inv[v] = i;
    }
    inv
}

/// Number of `i` with `s⁻¹(i) > s⁻¹(i+1)`.
pub fn descents(s: &[usize]) -> usize {
    let inv = inverse(s);
    inv.windows(2).filter(|w| w[0] > w[1]).count()
}

/// `H̃^e_{Q_s}`: `H̃_{s⁻¹(j)} = ⌊e r^{j−1}/n⌋ − ⌊e r^j/n⌋` with partial sums
/// `r^j = n_{s⁻¹(1)} + … + n_{s⁻¹(j)}`.
pub fn h_tilde_vector(ns: &[u32], s: &[usize], e: i64) -> Result<Vec<i64>> {
    validate(ns, s)?;
    let inv = inverse(s);
    let n: i64 = ns.iter().map(|&x| x as i64).sum();
    let mut h = vec![0i64; ns.len()];
    let mut partial = 0i64;
    let mut prev = 0i64;
    for &b in &inv {
        partial += ns[b] as i64;
        let f = Integer::div_floor(&(e * partial), &n);
        h[b] = prev - f;
        prev = f;
    }
    Ok(h)
}

/// `H^e_{Q_s} = H̃^e_{Q_s} + s⁻¹(0, 1, …, 1)`.
pub fn h_vector(ns: &[u32], s: &[usize], e: i64) -> Result<Vec<i64>> {
    let mut h = h_tilde_vector(ns, s, e)?;
    let inv = inverse(s);
    for &b in inv.iter().skip(1) {
        h[b] += 1;
    }
    Ok(h)
}

fn monomial(lambda: &[Complex64], h: &[i64]) -> Complex64 {
    lambda
        .iter()
        .zip(h)
        .map(|(l, &k)| l.powi(k as i32))
        .product()
}

/// `λ^{H̃} ∏_{i<r} (1 − λ_{s⁻¹(i)}/λ_{s⁻¹(i+1)})⁻¹`.
pub fn closed_form(ns: &[u32], s: &[usize], e: i64, lambda: &[Complex64]) -> Result<Complex64> {
    let h = h_tilde_vector(ns, s, e)?;
    check_point(ns, lambda)?;
    let inv = inverse(s);
    let mut v = monomial(lambda, &h);
    for w in inv.windows(2) {
        v /= Complex64::new(1.0, 0.0) - lambda[w[0]] / lambda[w[1]];
    }
    Ok(v)
}

/// `(−1)^{r−1} λ^H / ∏_{i<r} (λ_{s⁻¹(i)} − λ_{s⁻¹(i+1)})`.
pub fn closed_form_theta(ns: &[u32], s: &[usize], e: i64, lambda: &[Complex64]) -> Result<Complex64> {
    let h = h_vector(ns, s, e)?;
    check_point(ns, lambda)?;
    let inv = inverse(s);
    let mut v = monomial(lambda, &h);
    for w in inv.windows(2) {
        v /= lambda[w[0]] - lambda[w[1]];
    }
    if ns.len().is_multiple_of(2) {
        v = -v;
    }
    Ok(v)
}

/// `Σ_{e'=0}^{n−1} 1̂^{e'}_{Q_s}(λ)`.
pub fn closed_form_total(ns: &[u32], s: &[usize], lambda: &[Complex64]) -> Result<Complex64> {
    let n: i64 = ns.iter().map(|&x| x as i64).sum();
    (0..n).map(|e| closed_form(ns, s, e, lambda)).sum()
}

fn check_point(ns: &[u32], lambda: &[Complex64]) -> Result<()> {
    if lambda.len() != ns.len() {
        return Err(Error::Dimension(format!("point has {} entries, need {}", lambda.len(), ns.len())));
    }
    let p: Complex64 = lambda.iter().zip(ns).map(|(l, &k)| l.powi(k as i32)).product();
    if (p - 1.0).norm() > 1e-9 {
        return Err(Error::Argument("point is off the torus: prod lambda_i^{n_i} != 1".into()));
    }
    Ok(())
}

/// Truncated lattice sum with its tail bound.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DirectSum {
    pub re: f64,
    pub im: f64,
    pub tail_bound: f64,
    pub terms: usize,
}

impl DirectSum {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// `(−1)^{ε(Q)} Σ_H φ(H) λ^{−H}` over `H = s⁻¹(e, 0, …, 0) + Σ m_i (ε_{s⁻¹(i)} − ε_{s⁻¹(i+1)})`,
/// `|m_i| ≤ bound + |e| + 1`. The indicator `φ` asks
/// `ϖ_i = e(n − r^i)/n + m_i` to be `≤ 0` at ascents and `> 0` at descents.
/// Needs `|λ_1| < … < |λ_r|`.
pub fn direct_sum(ns: &[u32], s: &[usize], e: i64, lambda: &[Complex64], bound: u32) -> Result<DirectSum> {
    validate(ns, s)?;
    check_point(ns, lambda)?;
    let r = ns.len();
    for i in 0..r.saturating_sub(1) {
        if lambda[i].norm() >= lambda[i + 1].norm() {
            return Err(Error::Argument("lattice sum needs |lambda_1| < ... < |lambda_r|".into()));
        }
    }
    let inv = inverse(s);
    let n: i64 = ns.iter().map(|&x| x as i64).sum();
    let mut partial = vec![0i64; r];
    let mut acc = 0i64;
    for (j, &b) in inv.iter().enumerate() {
        acc += ns[b] as i64;
        partial[j] = acc;
    }
    let ascending: Vec<bool> = inv.windows(2).map(|w| w[0] < w[1]).collect();
    let big_b = bound as i64 + e.abs() + 1;
    let dims = r - 1;
    let width = (2 * big_b + 1) as usize;
    let total = width.pow(dims as u32);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut terms = 0usize;
    let mut m = vec![0i64; dims];
    for mut code in 0..total {
        for mi in m.iter_mut() {
            *mi = (code % width) as i64 - big_b;
            code /= width;
        }
        let keep = (0..dims).all(|i| {
            // n ϖ_i = e (n − r^i) + n m_i
            let scaled = e * (n - partial[i]) + n * m[i];
            if ascending[i] {
                scaled <= 0
            } else {
                scaled > 0
            }
        });
        if !keep {
            continue;
        }
        let mut h = vec![0i64; r];
        h[inv[0]] = e;
        for i in 0..dims {
            h[inv[i]] += m[i];
            h[inv[i + 1]] -= m[i];
        }
        let neg: Vec<i64> = h.iter().map(|x| -x).collect();
        sum += monomial(lambda, &neg);
        terms += 1;
    }
    if descents(s) % 2 == 1 {
        sum = -sum;
    }
    // geometric tails of the omitted m_i, per coroot x_i
    let base = lambda[inv[0]].norm().powi(-e as i32);
    let mut full = 1.0;
    let mut kept = 1.0;
    for i in 0..dims {
        let x = (lambda[inv[i]] / lambda[inv[i + 1]]).norm();
        let q = if ascending[i] { x } else { 1.0 / x };
        // allowed m_i run from the threshold outward; the factor |x|^{−m}
        let floor = Integer::div_floor(&(-e * (n - partial[i])), &n);
        let threshold = if ascending[i] { floor } else { floor + 1 };
        let start = x.powi(-threshold as i32);
        let whole = start / (1.0 - q);
        let steps = if ascending[i] { threshold + big_b + 1 } else { big_b - threshold + 1 };
        let tail = start * q.powi(steps as i32) / (1.0 - q);
        full *= whole;
        kept *= whole - tail;
    }
    Ok(DirectSum {
        re: sum.re,
        im: sum.im,
        tail_bound: base * (full - kept).abs() + 1e-12 * base * full,
        terms,
    })
}

/// Averaging over `η^{ek}`, `ζ = e^{2πi/n}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Averaging {
    pub e: i64,
    pub e_inverse: i64,
    pub average: [f64; 2],
    pub at_e_inverse: [f64; 2],
    pub at_e: [f64; 2],
    pub inverse_ok: bool,
    pub literal_ok: bool,
}

/// `(1/n) Σ_{k=1}^n ζ^k 1̂_{Q_s}(λ η^{ek})` against `1̂^{e*}` (with `e e* ≡ 1 mod n`)
/// and against `1̂^{e}`. The two coincide when `e² ≡ 1 mod n`.
pub fn averaging_check(ns: &[u32], s: &[usize], e: i64, lambda: &[Complex64]) -> Result<Averaging> {
    let n: i64 = ns.iter().map(|&x| x as i64).sum();
    let ext = e.rem_euclid(n).extended_gcd(&n);
    if ext.gcd != 1 {
        return Err(Error::Argument(format!("e={e} is not prime to n={n}")));
    }
    let e_inv = ext.x.rem_euclid(n);
    let mut avg = Complex64::new(0.0, 0.0);
    for k in 1..=n {
        let zeta_k = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / n as f64);
        let shift = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * (e * k) as f64 / n as f64);
        let moved: Vec<Complex64> = lambda.iter().map(|l| l * shift).collect();
        avg += zeta_k * closed_form_total(ns, s, &moved)?;
    }
    avg /= n as f64;
    let at_inv = closed_form(ns, s, e_inv, lambda)?;
    let at_e = closed_form(ns, s, e, lambda)?;
    let close = |a: Complex64, b: Complex64| (a - b).norm() <= 1e-9 * (1.0 + b.norm());
    Ok(Averaging {
        e,
        e_inverse: e_inv,
        average: [avg.re, avg.im],
        at_e_inverse: [at_inv.re, at_inv.im],
        at_e: [at_e.re, at_e.im],
        inverse_ok: close(avg, at_inv),
        literal_ok: close(avg, at_e),
    })
}

/// A point with `|λ_1| < … < |λ_r|` and `∏ λ_i^{n_i} = 1`.
pub fn random_point<G: Rng>(ns: &[u32], rng: &mut G) -> Vec<Complex64> {
    let r = ns.len();
    let n: f64 = ns.iter().map(|&x| x as f64).sum();
    let mut logs: Vec<f64> = Vec::with_capacity(r);
    let mut c = 0.0;
    for _ in 0..r {
        logs.push(c);
        c += rng.gen_range(0.4..1.2);
    }
    let shift: f64 = logs.iter().zip(ns).map(|(c, &k)| c * k as f64).sum::<f64>() / n;
    let mut phases: Vec<f64> = (0..r).map(|_| rng.gen_range(-3.0..3.0)).collect();
    let pshift: f64 = phases.iter().zip(ns).map(|(p, &k)| p * k as f64).sum::<f64>() / n;
    for p in phases.iter_mut() {
        *p -= pshift;
    }
    logs.iter()
        .zip(&phases)
        .map(|(c, p)| Complex64::from_polar((c - shift).exp(), *p))
        .collect()
}

/// Degree `−1`: `H = (1, …, 1)` and `1̂^{−1} = (−1)^{r−1} ∏ λ_i / θ`.
pub fn degree_minus_one_check(ns: &[u32], s: &[usize], lambda: &[Complex64]) -> Result<bool> {
    let h = h_vector(ns, s, -1)?;
    if h.iter().any(|&x| x != 1) {
        return Ok(false);
    }
    let inv = inverse(s);
    let mut expected: Complex64 = lambda.iter().product();
    for w in inv.windows(2) {
        expected /= lambda[w[0]] - lambda[w[1]];
    }
    if ns.len().is_multiple_of(2) {
        expected = -expected;
    }
    let got = closed_form(ns, s, -1, lambda)?;
    Ok((got - expected).norm() <= 1e-9 * (1.0 + expected.norm()))
}

#[cfg(test)]
mod tests {
    use super::super::permutations;
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn h_vectors() {
        assert_eq!(h_tilde_vector(&[1, 1], &[0, 1], -1).unwrap(), vec![1, 0]);
        assert_eq!(h_vector(&[1, 1], &[0, 1], -1).unwrap(), vec![1, 1]);
        assert_eq!(h_tilde_vector(&[2, 3], &[1, 0], 5).unwrap(), vec![-2, -3]);
        assert_eq!(h_tilde_vector(&[2, 1, 2], &[0, 1, 2], 0).unwrap(), vec![0, 0, 0]);
        for s in permutations(3) {
            assert_eq!(h_vector(&[2, 1, 3], &s, -1).unwrap(), vec![1, 1, 1]);
            let h = h_tilde_vector(&[2, 1, 3], &s, 4).unwrap();
            assert_eq!(h.iter().sum::<i64>(), -4);
        }
        assert!(h_tilde_vector(&[1, 1], &[0, 0], 1).is_err());
    }

    #[test]
    fn closed_forms_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for ns in [vec![1u32, 1], vec![2, 1, 1], vec![1, 2, 1, 1]] {
            let lambda = random_point(&ns, &mut rng);
            for s in permutations(ns.len()) {
                for e in -3..=5 {
                    let a = closed_form(&ns, &s, e, &lambda).unwrap();
                    let b = closed_form_theta(&ns, &s, e, &lambda).unwrap();
                    assert!((a - b).norm() < 1e-9 * (1.0 + a.norm()), "{ns:?} {s:?} {e}");
                }
                assert!(degree_minus_one_check(&ns, &s, &lambda).unwrap());
            }
        }
    }

    #[test]
    fn direct_sums_converge() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for ns in [vec![1u32, 1], vec![2, 1], vec![1, 1, 2]] {
            let lambda = random_point(&ns, &mut rng);
            for s in permutations(ns.len()) {
                for e in [-2i64, -1, 0, 1, 3] {
                    let d = direct_sum(&ns, &s, e, &lambda, 40).unwrap();
                    let c = closed_form(&ns, &s, e, &lambda).unwrap();
                    let err = (d.value() - c).norm();
                    assert!(err <= d.tail_bound + 1e-9 * (1.0 + c.norm()), "{ns:?} {s:?} {e}: {err} > {}", d.tail_bound);
                    assert!(err < 1e-6 * (1.0 + c.norm()));
                }
            }
        }
    }

    #[test]
    fn direct_sum_needs_ordered_moduli() {
        let lambda = [Complex64::new(2.0, 0.0), Complex64::new(0.5, 0.0)];
        assert!(direct_sum(&[1, 1], &[0, 1], 0, &lambda, 5).is_err());
    }

    #[test]
    fn averaging() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let ns = [2u32, 1, 2];
        let lambda = random_point(&ns, &mut rng);
        for s in permutations(3) {
            for e in 1..5 {
                let a = averaging_check(&ns, &s, e, &lambda).unwrap();
                assert!(a.inverse_ok, "{a:?}");
                let sq = (e * e) % 5 == 1;
                assert_eq!(a.literal_ok, sq, "{a:?}");
            }
        }
        assert!(averaging_check(&[2, 2], &[0, 1], 2, &random_point(&[2, 2], &mut rng)).is_err());
    }
}
