//! Cone characteristic functions on `GL_n` root data: `τ_P^Q`, `τ̂_P^Q`,
//! Arthur's `Γ_P` and `Γ′_P`, and checks of the alternating identities
//! relating them.
//!
//! Standard parabolics are ordered compositions of `n`; `P ⊆ Q` when the
//! parts of `Q` are consecutive sums of parts of `P`. A point of `a_P` is
//! given in the basis `ψ_{M_P,i}`, so `det_i(H) = H_i`.

use crate::error::{Error, Result};
use crate::util::{rat, ratio};
use num::rational::BigRational;
use num::{Signed, Zero};
use rand::Rng;
use serde::Serialize;
use std::collections::BTreeSet;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::Argument(format!("not a composition: {parts:?}")));
        }
        Ok(Composition(parts))
    }

    /// The Borel: `n` parts equal to 1.
    pub fn borel(n: u32) -> Self {
        Composition(vec![1; n as usize])
    }

    /// `G` itself: a single part.
    pub fn whole(n: u32) -> Self {
        Composition(vec![n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    /// Partial sums strictly between 0 and `n`.
    pub fn cuts(&self) -> BTreeSet<u32> {
        let mut acc = 0;
        let mut out = BTreeSet::new();
        for &p in &self.0[..self.0.len() - 1] {
            acc += p;
            out.insert(acc);
        }
        out
    }

    fn from_cuts(n: u32, cuts: &BTreeSet<u32>) -> Self {
        let mut parts = Vec::with_capacity(cuts.len() + 1);
        let mut prev = 0;
        for &c in cuts.iter().chain(std::iter::once(&n)) {
            parts.push(c - prev);
            prev = c;
        }
        Composition(parts)
    }

    /// `self ⊆ q`: `q` is a coarsening of `self`.
    pub fn refines(&self, q: &Composition) -> bool {
        self.n() == q.n() && q.cuts().is_subset(&self.cuts())
    }

    /// For each part of `self`, the index of the part of `q` containing it.
    fn block_map(&self, q: &Composition) -> Result<Vec<usize>> {
        if !self.refines(q) {
            return Err(Error::Argument(format!("{:?} does not refine {:?}", self.0, q.0)));
        }
        let qcuts = q.cuts();
        let mut out = Vec::with_capacity(self.r());
        let mut block = 0;
        let mut acc = 0;
        for &p in &self.0 {
            out.push(block);
            acc += p;
            if qcuts.contains(&acc) {
                block += 1;
            }
        }
        Ok(out)
    }

    /// All compositions of `n`.
    pub fn all(n: u32) -> Vec<Composition> {
        (0u64..1 << (n - 1))
            .map(|mask| {
                let cuts = (1..n).filter(|c| mask >> (c - 1) & 1 == 1).collect();
                Composition::from_cuts(n, &cuts)
            })
            .collect()
    }

    /// All `R` with `self ⊆ R ⊆ q`.
    pub fn between(&self, q: &Composition) -> Result<Vec<Composition>> {
        self.block_map(q)?;
        let fixed = q.cuts();
        let free: Vec<u32> = self.cuts().difference(&fixed).copied().collect();
        Ok((0u64..1 << free.len())
            .map(|mask| {
                let mut cuts = fixed.clone();
                for (i, c) in free.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        cuts.insert(*c);
                    }
                }
                Composition::from_cuts(self.n(), &cuts)
            })
            .collect())
    }

    /// All `Q ⊇ self`.
    pub fn coarsenings(&self) -> Vec<Composition> {
        self.between(&Composition::whole(self.n())).expect("every composition refines G")
    }
}

/// A point of `a_P` in the `ψ_{M_P,i}` coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConePoint {
    pub comp: Composition,
    #[serde(serialize_with = "ser_rats")]
    pub coords: Vec<BigRational>,
}

fn ser_rats<S: serde::Serializer>(v: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

impl ConePoint {
    pub fn new(comp: Composition, coords: Vec<BigRational>) -> Result<Self> {
        if coords.len() != comp.r() {
            return Err(Error::Dimension(format!(
                "{} coordinates for a composition with {} parts",
                coords.len(),
                comp.r()
            )));
        }
        Ok(ConePoint { comp, coords })
    }

    pub fn from_ints(parts: &[u32], coords: &[i64]) -> Result<Self> {
        ConePoint::new(Composition::new(parts.to_vec())?, coords.iter().map(|&x| rat(x)).collect())
    }

    pub fn zero(comp: Composition) -> Self {
        let r = comp.r();
        ConePoint { comp, coords: vec![BigRational::zero(); r] }
    }

    pub fn minus(&self, other: &ConePoint) -> Result<ConePoint> {
        if self.comp != other.comp {
            return Err(Error::Argument("points live on different compositions".into()));
        }
        Ok(ConePoint {
            comp: self.comp.clone(),
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        })
    }
}

/// Block sums onto a coarsening `q`.
pub fn project(h: &ConePoint, q: &Composition) -> Result<ConePoint> {
    let map = h.comp.block_map(q)?;
    let mut coords = vec![BigRational::zero(); q.r()];
    for (x, &b) in h.coords.iter().zip(&map) {
        coords[b] += x;
    }
    Ok(ConePoint { comp: q.clone(), coords })
}

/// `α(H) = H_i/n_i − H_{i+1}/n_{i+1}` for adjacent `P`-blocks inside one `Q`-block.
pub fn alpha_values(p: &Composition, q: &Composition, h: &ConePoint) -> Result<Vec<BigRational>> {
    let hp = project(h, p)?;
    let map = p.block_map(q)?;
    let n = p.parts();
    Ok((0..p.r().saturating_sub(1))
        .filter(|&i| map[i] == map[i + 1])
        .map(|i| &hp.coords[i] / rat(n[i] as i64) - &hp.coords[i + 1] / rat(n[i + 1] as i64))
        .collect())
}

/// The `ϖ_i` of `Δ̂_P^Q`, computed inside each `Q`-block.
pub fn varpi_values(p: &Composition, q: &Composition, h: &ConePoint) -> Result<Vec<BigRational>> {
    let hp = project(h, p)?;
    let map = p.block_map(q)?;
    let n = p.parts();
    let mut out = Vec::new();
    let mut start = 0;
    while start < p.r() {
        let mut end = start;
        while end + 1 < p.r() && map[end + 1] == map[start] {
            end += 1;
        }
        let m: i64 = n[start..=end].iter().map(|&x| x as i64).sum();
        for i in start..end {
            let below: i64 = n[start..=i].iter().map(|&x| x as i64).sum();
            let left: BigRational = hp.coords[start..=i].iter().sum();
            let right: BigRational = hp.coords[i + 1..=end].iter().sum();
            out.push(left * ratio(m - below, m) - right * ratio(below, m));
        }
        start = end + 1;
    }
    Ok(out)
}

/// `τ_P^Q(H)`.
pub fn tau(p: &Composition, q: &Composition, h: &ConePoint) -> Result<bool> {
    Ok(alpha_values(p, q, h)?.iter().all(|a| a.is_positive()))
}

/// `τ̂_P^Q(H)`.
pub fn tau_hat(p: &Composition, q: &Composition, h: &ConePoint) -> Result<bool> {
    Ok(varpi_values(p, q, h)?.iter().all(|a| a.is_positive()))
}

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `Σ_{P⊆R⊆Q} (−1)^{dim a_P^R} τ_P^R(H) τ̂_R^Q(H) = [P = Q]`.
pub fn langlands_identity_check(p: &Composition, q: &Composition, h: &ConePoint) -> Result<bool> {
    let mut total = 0i64;
    for r in p.between(q)? {
        if tau(p, &r, h)? && tau_hat(&r, q, h)? {
            total += sign(p.r() - r.r());
        }
    }
    Ok(total == i64::from(p == q))
}

/// `Γ_P(H, T)`: `α(H) > 0` on `Δ_P` and `ϖ(H) ≤ ϖ(T)` on `Δ̂_P`.
pub fn gamma(p: &Composition, h: &ConePoint, t: &ConePoint) -> Result<bool> {
    let g = Composition::whole(p.n());
    if !alpha_values(p, &g, h)?.iter().all(|a| a.is_positive()) {
        return Ok(false);
    }
    let wh = varpi_values(p, &g, h)?;
    let wt = varpi_values(p, &g, t)?;
    Ok(wh.iter().zip(&wt).all(|(a, b)| a <= b))
}

/// `Γ′_P(H, T) = Σ_{Q⊇P} (−1)^{dim a_Q^G} τ_P^Q(H) τ̂_Q(H − T)`; `H`, `T` on `P` or finer.
pub fn gamma_prime(p: &Composition, h: &ConePoint, t: &ConePoint) -> Result<i64> {
    let g = Composition::whole(p.n());
    let hp = project(h, p)?;
    let diff = hp.minus(&project(t, p)?)?;
    let mut total = 0;
    for q in p.coarsenings() {
        if tau(p, &q, &hp)? && tau_hat(&q, &g, &diff)? {
            total += sign(q.r() - 1);
        }
    }
    Ok(total)
}

/// `τ̂_P(H − T) = Σ_{Q⊇P} (−1)^{dim a_Q^G} Γ′_Q(H, T) τ̂_P^Q(H)`, with `H`, `T` on the Borel.
pub fn gamma_inversion_check(p: &Composition, h: &ConePoint, t: &ConePoint) -> Result<bool> {
    let g = Composition::whole(p.n());
    let lhs = i64::from(tau_hat(p, &g, &h.minus(t)?)?);
    let mut rhs = 0;
    for q in p.coarsenings() {
        if tau_hat(p, &q, h)? {
            rhs += sign(q.r() - 1) * gamma_prime(&q, h, t)?;
        }
    }
    Ok(lhs == rhs)
}

/// `H − (ΣH/n)(n_1, …, n_r)`: the component in `a_P^G`.
fn normalized(h: &ConePoint) -> Vec<BigRational> {
    let total: BigRational = h.coords.iter().sum();
    let n = rat(h.comp.n() as i64);
    h.coords
        .iter()
        .zip(h.comp.parts())
        .map(|(x, &k)| x - &total * rat(k as i64) / &n)
        .collect()
}

fn sup_norm(v: &[BigRational]) -> BigRational {
    v.iter().map(|x| x.abs()).max().unwrap_or_else(BigRational::zero)
}

/// Integer points of `a_P` with coordinate sum `e`, `|H_i| ≤ radius` except the last.
fn lattice_box(p: &Composition, e: i64, radius: i64, mut visit: impl FnMut(&ConePoint) -> Result<()>) -> Result<()> {
    let r = p.r();
    let width = (2 * radius + 1) as u64;
    for mut code in 0..width.pow(r as u32 - 1) {
        let mut coords = Vec::with_capacity(r);
        let mut acc = 0;
        for _ in 0..r - 1 {
            let v = (code % width) as i64 - radius;
            code /= width;
            acc += v;
            coords.push(rat(v));
        }
        coords.push(rat(e - acc));
        visit(&ConePoint { comp: p.clone(), coords })?;
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SupportReport {
    pub radius_bound: String,
    pub max_support_radius: String,
    pub grid_radius: i64,
    pub points_in_support: usize,
    pub ok: bool,
}

/// Scans integer `H` on a grid around the origin and checks that
/// `{H : Γ′_P(H, T) ≠ 0}` lies within `2(r−1) · max_T ‖T_P‖₁` of `a_G`
/// (sup norm on `a_P^G`) for every `T` in `ts`.
pub fn gamma_support_bound_check(p: &Composition, ts: &[ConePoint]) -> Result<SupportReport> {
    let r = p.r();
    let t_bound = ts
        .iter()
        .map(|t| project(t, p).map(|tp| tp.coords.iter().map(|x| x.abs()).sum::<BigRational>()))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max()
        .unwrap_or_else(BigRational::zero);
    let radius_bound = rat(2 * (r as i64 - 1).max(1)) * &t_bound + rat(1);
    let grid_radius = 2 * radius_bound.ceil().to_integer().try_into().unwrap_or(i64::MAX / 4) + 2;
    if r == 1 {
        return Ok(SupportReport {
            radius_bound: radius_bound.to_string(),
            max_support_radius: "0".into(),
            grid_radius: 0,
            points_in_support: 0,
            ok: true,
        });
    }
    let mut max_radius = BigRational::zero();
    let mut count = 0;
    for t in ts {
        lattice_box(p, 0, grid_radius, |h| {
            if gamma_prime(p, h, t)? != 0 {
                count += 1;
                let rad = sup_norm(&normalized(h));
                if rad > max_radius {
                    max_radius = rad;
                }
            }
            Ok(())
        })?;
    }
    Ok(SupportReport {
        ok: max_radius <= radius_bound,
        radius_bound: radius_bound.to_string(),
        max_support_radius: max_radius.to_string(),
        grid_radius,
        points_in_support: count,
    })
}

/// `Γ_P(H, 0) = 0` for all integer `H` in a box, `P ≠ G`.
pub fn gamma_zero_grid_check(p: &Composition, radius: i64) -> Result<bool> {
    if p.r() == 1 {
        return Ok(true);
    }
    let zero = ConePoint::zero(p.clone());
    let mut ok = true;
    for e in 0..p.n() as i64 {
        lattice_box(p, e, radius, |h| {
            ok &= !gamma(p, h, &zero)?;
            Ok(())
        })?;
    }
    Ok(ok)
}

/// `Σ_{H∈𝔥} Γ′_P(H, T)` over `𝔥 = {d ∈ ℤ^r : Σd = e, d_i ≡ e_i mod n_i}`.
///
/// The box is doubled until the support stays off its boundary twice in a row.
pub fn gamma_hat_lattice_sum(p: &Composition, e: i64, residues: &[i64], t: &ConePoint) -> Result<i64> {
    if residues.len() != p.r() {
        return Err(Error::Dimension(format!("{} residues for {} blocks", residues.len(), p.r())));
    }
    let parts = p.parts();
    let mut radius = 4;
    let mut clear_rounds = 0;
    let mut last = None;
    loop {
        let mut total = 0;
        let mut touches = false;
        lattice_box(p, e, radius, |h| {
            let ok = h
                .coords
                .iter()
                .zip(parts.iter().zip(residues))
                .all(|(d, (&k, &res))| (d.to_integer() - res) % (k as i64) == 0.into());
            if ok {
                let v = gamma_prime(p, h, t)?;
                if v != 0 {
                    total += v;
                    let last_coord = h.coords[p.r() - 1].abs();
                    touches |= h.coords[..p.r() - 1].iter().any(|x| x.abs() == rat(radius))
                        || last_coord >= rat(radius * (p.r() as i64 - 1));
                }
            }
            Ok(())
        })?;
        if !touches && last == Some(total) {
            clear_rounds += 1;
            if clear_rounds >= 2 || p.r() == 1 {
                return Ok(total);
            }
        } else {
            clear_rounds = 0;
        }
        last = Some(total);
        if radius > 1 << 12 {
            return Err(Error::Numeric("support did not close inside the search box".into()));
        }
        radius *= 2;
    }
}

/// Rational coordinates with denominator 97: no ties with small-denominator data.
pub fn random_generic_point<G: Rng>(comp: &Composition, scale: i64, rng: &mut G) -> ConePoint {
    let coords = (0..comp.r()).map(|_| ratio(rng.gen_range(-97 * scale..=97 * scale), 97)).collect();
    ConePoint { comp: comp.clone(), coords }
}

/// A point of the closed positive chamber of `a_B`: `T_1 ≥ … ≥ T_n`.
pub fn random_positive_chamber<G: Rng>(n: u32, scale: i64, rng: &mut G) -> ConePoint {
    let mut coords: Vec<BigRational> = (0..n).map(|_| rat(rng.gen_range(-scale..=scale))).collect();
    coords.sort_by(|a, b| b.cmp(a));
    ConePoint { comp: Composition::borel(n), coords }
}

pub fn random_composition<G: Rng>(n: u32, rng: &mut G) -> Composition {
    let all = Composition::all(n);
    all[rng.gen_range(0..all.len())].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(p: &[u32]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn compositions() {
        assert_eq!(Composition::all(4).len(), 8);
        assert!(c(&[1, 1, 1]).refines(&c(&[2, 1])));
        assert!(!c(&[2, 1]).refines(&c(&[1, 2])));
        assert_eq!(c(&[1, 1, 1]).between(&c(&[3])).unwrap().len(), 4);
        assert!(c(&[2, 1]).between(&c(&[1, 2])).is_err());
    }

    #[test]
    fn projection() {
        let h = ConePoint::from_ints(&[1, 1, 1], &[1, 2, 3]).unwrap();
        assert_eq!(project(&h, &c(&[1, 1, 1])).unwrap(), h);
        assert_eq!(project(&h, &c(&[3])).unwrap().coords, vec![rat(6)]);
        assert_eq!(project(&h, &c(&[2, 1])).unwrap().coords, vec![rat(3), rat(3)]);
        assert!(project(&h, &c(&[2])).is_err());
    }

    #[test]
    fn gl2_taus() {
        let b = Composition::borel(2);
        let g = Composition::whole(2);
        let h = ConePoint::from_ints(&[1, 1], &[1, -1]).unwrap();
        assert_eq!(alpha_values(&b, &g, &h).unwrap(), vec![rat(2)]);
        assert_eq!(varpi_values(&b, &g, &h).unwrap(), vec![rat(1)]);
        assert!(tau(&b, &g, &h).unwrap() && tau_hat(&b, &g, &h).unwrap());
        let zero = ConePoint::zero(b.clone());
        assert!(!tau(&b, &g, &zero).unwrap() && !tau_hat(&b, &g, &zero).unwrap());
        assert!(tau(&b, &b, &zero).unwrap() && tau_hat(&g, &g, &zero).unwrap());
    }

    #[test]
    fn langlands_identity_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.gen_range(1..=5);
            let p = random_composition(n, &mut rng);
            let q = {
                let qs = p.coarsenings();
                qs[rng.gen_range(0..qs.len())].clone()
            };
            let h = random_generic_point(&Composition::borel(n), 5, &mut rng);
            assert!(langlands_identity_check(&p, &q, &h).unwrap(), "{p:?} {q:?} {h:?}");
        }
    }

    #[test]
    fn gamma_remarks() {
        let g = Composition::whole(3);
        let h = ConePoint::from_ints(&[3], &[7]).unwrap();
        assert!(gamma(&g, &h, &ConePoint::zero(g.clone())).unwrap());
        for p in Composition::all(3) {
            assert!(gamma_zero_grid_check(&p, 4).unwrap(), "{p:?}");
        }
    }

    #[test]
    fn other_gamma_reading_is_refuted() {
        // {α(H) > 0, ϖ(H) ≥ ϖ(T)} is not identically zero at T = 0
        let b = Composition::borel(2);
        let g = Composition::whole(2);
        let h = ConePoint::from_ints(&[1, 1], &[1, -1]).unwrap();
        let zero = ConePoint::zero(b.clone());
        let alt = tau(&b, &g, &h).unwrap()
            && varpi_values(&b, &g, &h)
                .unwrap()
                .iter()
                .zip(varpi_values(&b, &g, &zero).unwrap())
                .all(|(a, t)| *a >= t);
        assert!(alt);
        assert!(!gamma(&b, &h, &zero).unwrap());
    }

    #[test]
    fn gamma_equals_gamma_prime() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..300 {
            let n = rng.gen_range(2..=5);
            let p = random_composition(n, &mut rng);
            let h = random_generic_point(&p, 6, &mut rng);
            let t = random_positive_chamber(n, 4, &mut rng);
            let gp = gamma_prime(&p, &h, &t).unwrap();
            assert_eq!(gp, i64::from(gamma(&p, &h, &project(&t, &p).unwrap()).unwrap()), "{p:?} {h:?} {t:?}");
        }
    }

    #[test]
    fn inversion() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..200 {
            let n = rng.gen_range(1..=4);
            let p = random_composition(n, &mut rng);
            let h = random_generic_point(&Composition::borel(n), 5, &mut rng);
            let t = random_generic_point(&Composition::borel(n), 3, &mut rng);
            assert!(gamma_inversion_check(&p, &h, &t).unwrap());
        }
    }

    #[test]
    fn inversion_over_smaller_parabolics_fails() {
        // the sum over Q ⊆ P (with τ̂_Q^P) misses GL2 at P = B
        let b = Composition::borel(2);
        let g = Composition::whole(2);
        let h = ConePoint::from_ints(&[1, 1], &[1, -1]).unwrap();
        let t = ConePoint::from_ints(&[1, 1], &[3, -3]).unwrap();
        let lhs = i64::from(tau_hat(&b, &g, &h.minus(&t).unwrap()).unwrap());
        let rhs = -gamma_prime(&b, &h, &t).unwrap();
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn support() {
        let b = Composition::borel(2);
        let t = ConePoint::from_ints(&[1, 1], &[1, -1]).unwrap();
        let rep = gamma_support_bound_check(&b, &[t]).unwrap();
        assert!(rep.ok, "{rep:?}");
        // H = (h, −h) with 0 < h ≤ 1
        assert_eq!(rep.points_in_support, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        let ts: Vec<ConePoint> = (0..3).map(|_| random_generic_point(&Composition::borel(3), 1, &mut rng)).collect();
        for p in Composition::all(3) {
            assert!(gamma_support_bound_check(&p, &ts).unwrap().ok, "{p:?}");
        }
    }

    #[test]
    fn gl2_lattice_sum_is_linear() {
        let b = Composition::borel(2);
        for t in 0..=20 {
            let tt = ConePoint::from_ints(&[1, 1], &[t, -t]).unwrap();
            for e in [-1, 0, 3] {
                assert_eq!(gamma_hat_lattice_sum(&b, e, &[0, 0], &tt).unwrap(), t);
            }
        }
        let p = c(&[1, 2]);
        assert_eq!(gamma_hat_lattice_sum(&p, 1, &[0, 1], &ConePoint::zero(Composition::borel(3))).unwrap(), 0);
    }
}
