//! Polynomial root finding: Aberth iteration in `f64`, refinement in
//! fixed point, and certified isolation of simple roots.

use super::ball::{Ball, Fx};
use num::bigint::BigInt;
use num::complex::Complex64;
use num::{ToPrimitive, Zero};

/// Approximate roots of `Σ c_i x^i` by Aberth–Ehrlich iteration.
pub fn aberth_f64(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = match coeffs.iter().rposition(|c| c.norm() != 0.0) {
        Some(n) if n > 0 => n,
        _ => return Vec::new(),
    };
    let c = &coeffs[..=n];
    let lead = c[n];
    let radius = (c[0] / lead).norm().powf(1.0 / n as f64).max(1e-3);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let ang = 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64 + 0.4;
            Complex64::from_polar(radius, ang)
        })
        .collect();
    let eval = |x: Complex64| {
        let mut p = Complex64::zero();
        let mut dp = Complex64::zero();
        for a in c.iter().rev() {
            dp = dp * x + p;
            p = p * x + a;
        }
        (p, dp)
    };
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (p, dp) = eval(z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let mut s = Complex64::zero();
            for j in 0..n {
                if j != i {
                    s += 1.0 / (z[i] - z[j]);
                }
            }
            let w = ratio / (1.0 - ratio * s);
            if w.is_finite() {
                z[i] -= w;
                moved = moved.max(w.norm() / z[i].norm().max(1.0));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

fn horner_fx(coeffs: &[BigInt], x: &Fx, prec: u32) -> (Fx, Fx) {
    let mut p = Fx::zero();
    let mut dp = Fx::zero();
    for a in coeffs.iter().rev() {
        dp = dp.mul(x, prec).add(&p);
        p = p.mul(x, prec).add(&Fx::from_int(a, prec));
    }
    (p, dp)
}

/// Fixed-point Aberth refinement of approximate roots of an integer polynomial.
pub fn refine(coeffs: &[BigInt], start: &[Complex64], prec: u32) -> Vec<Fx> {
    let n = start.len();
    let mut z: Vec<Fx> = start
        .iter()
        .map(|s| Fx::from_f64(s.re, s.im, prec))
        .collect();
    let tiny = BigInt::from(1u32) << 8usize;
    for _ in 0..(prec as usize / 8 + 40) {
        let mut worst = BigInt::zero();
        for i in 0..n {
            let (p, dp) = horner_fx(coeffs, &z[i], prec);
            if p.re.is_zero() && p.im.is_zero() {
                continue;
            }
            let Some(ratio) = p.div(&dp, prec) else {
                continue;
            };
            let mut s = Fx::zero();
            for j in 0..n {
                if j != i {
                    let one = Fx::from_int(&BigInt::from(1), prec);
                    if let Some(inv) = one.div(&z[i].sub(&z[j]), prec) {
                        s = s.add(&inv);
                    }
                }
            }
            let one = Fx::from_int(&BigInt::from(1), prec);
            let den = one.sub(&ratio.mul(&s, prec));
            let Some(w) = ratio.div(&den, prec) else {
                continue;
            };
            let m = w.mag_upper();
            if m > worst {
                worst = m;
            }
            z[i] = z[i].sub(&w);
        }
        if worst <= tiny {
            break;
        }
    }
    z
}

fn horner_ball(coeffs: &[BigInt], x: &Ball) -> Ball {
    let mut acc = Ball::zero(x.prec);
    for a in coeffs.iter().rev() {
        acc = acc.mul(x).add(&Ball::from_int(a, x.prec));
    }
    acc
}

/// Encloses every root of a square-free integer polynomial in pairwise
/// disjoint discs, using the inclusion radius
/// `N·|f(z_i)| / |lc · ∏_{j≠i}(z_i − z_j)|`.
///
/// Returns `None` when the discs are not yet provably disjoint at `prec`.
pub fn isolate(coeffs: &[BigInt], prec: u32) -> Option<Vec<Ball>> {
    let n = coeffs.iter().rposition(|c| !c.is_zero())?;
    if n == 0 {
        return Some(Vec::new());
    }
    let coeffs = &coeffs[..=n];
    let cf: Vec<Complex64> = coeffs
        .iter()
        .map(|c| Complex64::new(c.to_f64().unwrap_or(f64::MAX), 0.0))
        .collect();
    let approx = aberth_f64(&cf);
    let z = refine(coeffs, &approx, prec);
    let lead = Ball::from_int(&coeffs[n], prec);
    let scale = BigInt::from(1u32) << prec as usize;
    let mut radii = Vec::with_capacity(n);
    for i in 0..n {
        let zi = Ball::exact(z[i].clone(), prec);
        let f = horner_ball(coeffs, &zi);
        let mut d = lead.clone();
        for j in 0..n {
            if j != i {
                d = d.mul(&Ball::exact(z[i].sub(&z[j]), prec));
            }
        }
        let lower = d.mag_lower();
        if lower.is_zero() {
            return None;
        }
        let num = f.mag_upper() * BigInt::from(n) * &scale;
        radii.push(&num / &lower + 1);
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let gap = z[i].sub(&z[j]).mag_lower();
            if gap <= &radii[i] + &radii[j] {
                return None;
            }
        }
    }
    Some(
        z.into_iter()
            .zip(radii)
            .map(|(c, rad)| Ball { c, rad, prec })
            .collect(),
    )
}

/// Number of roots of `Σ c_i x^i` with modulus below 1, counted with
/// multiplicity. Roots within `1e-9` of the unit circle make this `None`.
pub fn count_inside_unit_disc(coeffs: &[Complex64]) -> Option<usize> {
    let roots = aberth_f64(coeffs);
    let mut count = 0;
    for r in roots {
        let m = r.norm();
        if (m - 1.0).abs() < 1e-9 {
            return None;
        }
        if m < 1.0 {
            count += 1;
        }
    }
    Some(count)
}
