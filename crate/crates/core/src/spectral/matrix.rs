//! Dense exact matrices, `κ(A)` and the cofactor identities around it.

use crate::error::{Error, Result};
use crate::util::rat;
use num::rational::BigRational;
use num::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

/// Square matrix over the rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QMatrix {
    n: usize,
    #[serde(with = "rat_rows")]
    data: Vec<BigRational>,
}

impl QMatrix {
    pub fn zeros(n: usize) -> Self {
        QMatrix {
            n,
            data: vec![BigRational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("matrix rows must all have length equal to the row count".into()));
        }
        Ok(QMatrix {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.n + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<BigRational>> {
        self.data.chunks(self.n.max(1)).map(<[_]>::to_vec).collect()
    }

    pub fn plus(&self, o: &QMatrix) -> QMatrix {
        assert_eq!(self.n, o.n);
        QMatrix {
            n: self.n,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn times(&self, o: &QMatrix) -> QMatrix {
        assert_eq!(self.n, o.n);
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = out.get(i, j) + a * o.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn plus_scalar_identity(&self, lambda: &BigRational) -> QMatrix {
        let mut m = self.clone();
        for i in 0..self.n {
            let v = m.get(i, i) + lambda;
            m.set(i, i, v);
        }
        m
    }

    pub fn transpose(&self) -> QMatrix {
        let mut m = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn row_sums_vanish(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).map(|j| self.get(i, j)).sum::<BigRational>().is_zero())
    }

    pub fn col_sums_vanish(&self) -> bool {
        (0..self.n).all(|j| (0..self.n).map(|i| self.get(i, j)).sum::<BigRational>().is_zero())
    }

    /// Determinant by fraction-exact Gaussian elimination.
    pub fn det(&self) -> BigRational {
        let n = self.n;
        let mut a = self.data.clone();
        let mut det = BigRational::one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return BigRational::zero();
            };
            if piv != col {
                for j in 0..n {
                    a.swap(piv * n + j, col * n + j);
                }
                det = -det;
            }
            let p = a[col * n + col].clone();
            det *= &p;
            for r in col + 1..n {
                let f = &a[r * n + col] / &p;
                if f.is_zero() {
                    continue;
                }
                for j in col..n {
                    let v = &a[r * n + j] - &f * &a[col * n + j];
                    a[r * n + j] = v;
                }
            }
        }
        det
    }

    /// The matrix with row and column `i` removed.
    pub fn minor(&self, i: usize) -> QMatrix {
        let keep: Vec<usize> = (0..self.n).filter(|&k| k != i).collect();
        let mut m = Self::zeros(self.n - 1);
        for (a, &r) in keep.iter().enumerate() {
            for (b, &c) in keep.iter().enumerate() {
                m.set(a, b, self.get(r, c).clone());
            }
        }
        m
    }

    pub fn principal_cofactor(&self, i: usize) -> BigRational {
        self.minor(i).det()
    }
}

mod rat_rows {
    use num::rational::BigRational;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(ToString::to_string).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|x| x.parse::<BigRational>().map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Coefficients of the polynomial through `(i, values[i])`, `i = 0..len`.
fn interpolate_at_integers(values: &[BigRational]) -> Vec<BigRational> {
    let m = values.len();
    let mut out = vec![BigRational::zero(); m];
    for (i, yi) in values.iter().enumerate() {
        // basis polynomial ∏_{j≠i} (x − j)/(i − j)
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for j in 0..m {
            if j == i {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * rat(j as i64);
            }
            basis = next;
            denom *= rat(i as i64 - j as i64);
        }
        let f = yi / denom;
        for (k, c) in basis.iter().enumerate() {
            out[k] += c * &f;
        }
    }
    out
}

/// `κ(A) = (1/n)·[λ¹] det(A + λ·Id)` for a singular `A`.
///
/// The characteristic coefficient is recovered by exact interpolation of
/// `det(A + λ·Id)` at `λ = 0..n`.
pub fn kappa(a: &QMatrix) -> Result<BigRational> {
    let n = a.size();
    if n == 0 {
        return Err(Error::Argument("κ needs a nonempty matrix".into()));
    }
    let d0 = a.det();
    if !d0.is_zero() {
        return Err(Error::Argument(format!("κ needs a singular matrix, det = {d0}")));
    }
    let values: Vec<BigRational> = (0..=n).map(|l| a.plus_scalar_identity(&rat(l as i64)).det()).collect();
    let coeffs = interpolate_at_integers(&values);
    Ok(&coeffs[1] / rat(n as i64))
}

/// The values compared by [`kappa_lemma_check`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KappaLemmaValues {
    pub kappa: String,
    pub cofactor_mean: String,
    pub j_diag: Option<String>,
    pub rank_one: Option<String>,
}

fn all_one_times_diag(n: usize, u: &[BigRational]) -> QMatrix {
    let mut m = QMatrix::zeros(n);
    for i in 0..n {
        for (j, uj) in u.iter().enumerate() {
            m.set(i, j, uj.clone());
        }
    }
    m
}

fn outer(u: &[BigRational], v: &[BigRational]) -> QMatrix {
    let n = u.len();
    let mut m = QMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, &u[i] * &v[j]);
        }
    }
    m
}

/// Checks `κ(A)` against the mean principal cofactor, and when `A` has zero
/// row sums against `det(A + J·diag(u))/(n·Σu)`; when the column sums vanish
/// too, against `det(A + (u_i v_j))/(Σu·Σv)`.
pub fn kappa_lemma_check(a: &QMatrix, u: &[BigRational], v: &[BigRational]) -> Result<(bool, KappaLemmaValues)> {
    let n = a.size();
    if u.len() != n || v.len() != n {
        return Err(Error::Dimension("u and v must match the matrix size".into()));
    }
    let su: BigRational = u.iter().sum();
    let sv: BigRational = v.iter().sum();
    if su.is_zero() || sv.is_zero() {
        return Err(Error::Argument("Σu and Σv must be nonzero".into()));
    }
    if !a.row_sums_vanish() {
        return Err(Error::Argument("row sums of A must vanish".into()));
    }
    let k = kappa(a)?;
    let mean = (0..n).map(|i| a.principal_cofactor(i)).sum::<BigRational>() / rat(n as i64);
    let d = a.plus(&all_one_times_diag(n, u)).det() / (rat(n as i64) * &su);
    let mut ok = k == mean && k == d;
    let e = if a.col_sums_vanish() {
        let e = a.plus(&outer(u, v)).det() / (&su * &sv);
        ok &= k == e;
        Some(e)
    } else {
        None
    };
    Ok((
        ok,
        KappaLemmaValues {
            kappa: k.to_string(),
            cofactor_mean: mean.to_string(),
            j_diag: Some(d.to_string()),
            rank_one: e.map(|x| x.to_string()),
        },
    ))
}

/// `det(Id_N − (a_ij J_{n_i×n_j})·diag(U)) = det(Id_k − (a_ij Σ_l u^j_l))`.
pub fn block_det_lemma_check(a: &QMatrix, us: &[Vec<BigRational>]) -> Result<bool> {
    let k = a.size();
    if us.len() != k {
        return Err(Error::Dimension(format!("{} U-vectors for a {k}×{k} block matrix", us.len())));
    }
    let sizes: Vec<usize> = us.iter().map(Vec::len).collect();
    let big_n: usize = sizes.iter().sum();
    let flat_u: Vec<&BigRational> = us.iter().flatten().collect();
    let mut block_of = Vec::with_capacity(big_n);
    for (b, &s) in sizes.iter().enumerate() {
        block_of.extend(std::iter::repeat_n(b, s));
    }
    let mut big = QMatrix::identity(big_n);
    for r in 0..big_n {
        for c in 0..big_n {
            let v = big.get(r, c) - a.get(block_of[r], block_of[c]) * flat_u[c];
            big.set(r, c, v);
        }
    }
    let mut small = QMatrix::identity(k);
    for i in 0..k {
        for j in 0..k {
            let s: BigRational = us[j].iter().sum();
            let v = small.get(i, j) - a.get(i, j) * s;
            small.set(i, j, v);
        }
    }
    Ok(big.det() == small.det())
}

fn small_rational<G: Rng>(rng: &mut G) -> BigRational {
    let num = rng.gen_range(-9i64..=9);
    let den = rng.gen_range(1i64..=4);
    BigRational::new(num.into(), den.into())
}

/// Random matrix with zero row sums.
pub fn random_zero_row_sum<G: Rng>(n: usize, rng: &mut G) -> QMatrix {
    let mut m = QMatrix::zeros(n);
    for i in 0..n {
        let mut s = BigRational::zero();
        for j in 0..n {
            if i != j {
                let x = small_rational(rng);
                s += &x;
                m.set(i, j, x);
            }
        }
        m.set(i, i, -s);
    }
    m
}

/// Random matrix with zero row and column sums: a free `(n−1)×(n−1)` block
/// completed by its negated row and column sums.
pub fn random_zero_row_col_sum<G: Rng>(n: usize, rng: &mut G) -> QMatrix {
    let mut m = QMatrix::zeros(n);
    if n == 0 {
        return m;
    }
    let k = n - 1;
    let mut total = BigRational::zero();
    for i in 0..k {
        for j in 0..k {
            let x = small_rational(rng);
            total += &x;
            m.set(i, j, x);
        }
    }
    for i in 0..k {
        let s: BigRational = (0..k).map(|j| m.get(i, j)).sum();
        m.set(i, k, -s);
        let s: BigRational = (0..k).map(|j| m.get(j, i)).sum();
        m.set(k, i, -s);
    }
    m.set(k, k, total);
    m
}

/// Random vector with nonzero sum.
pub fn random_weights<G: Rng>(n: usize, rng: &mut G) -> Vec<BigRational> {
    loop {
        let v: Vec<BigRational> = (0..n).map(|_| small_rational(rng)).collect();
        if !v.iter().sum::<BigRational>().is_zero() {
            return v;
        }
    }
}

pub fn random_matrix<G: Rng>(n: usize, rng: &mut G) -> QMatrix {
    let mut m = QMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, small_rational(rng));
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::ratio;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn kappa_examples() {
        assert_eq!(kappa(&QMatrix::zeros(3)).unwrap(), rat(0));
        let a = QMatrix::from_ints(&[&[1, -1], &[-1, 1]]).unwrap();
        assert_eq!(kappa(&a).unwrap(), rat(1));
        let tri = QMatrix::from_ints(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]]).unwrap();
        assert_eq!(kappa(&tri).unwrap(), rat(3));
        assert!(matches!(kappa(&QMatrix::identity(2)), Err(Error::Argument(_))));
    }

    #[test]
    fn det_small() {
        let m = QMatrix::from_ints(&[&[2, 1], &[7, 4]]).unwrap();
        assert_eq!(m.det(), rat(1));
        let m = QMatrix::from_ints(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 5]]).unwrap();
        assert_eq!(m.det(), rat(-5));
    }

    #[test]
    fn interpolation_recovers_coefficients() {
        // 3 - x + 2x^2 at 0,1,2
        let c = interpolate_at_integers(&[rat(3), rat(4), rat(9)]);
        assert_eq!(c, vec![rat(3), rat(-1), rat(2)]);
    }

    #[test]
    fn lemma_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=5 {
            let a = random_zero_row_col_sum(n, &mut rng);
            let u = random_weights(n, &mut rng);
            let v = random_weights(n, &mut rng);
            let (ok, vals) = kappa_lemma_check(&a, &u, &v).unwrap();
            assert!(ok, "{vals:?}");
            assert!(vals.rank_one.is_some());
            let a = random_zero_row_sum(n, &mut rng);
            assert!(kappa_lemma_check(&a, &u, &v).unwrap().0);
        }
        let zero = QMatrix::zeros(3);
        let one = vec![rat(1); 3];
        let (ok, vals) = kappa_lemma_check(&zero, &one, &one).unwrap();
        assert!(ok);
        assert_eq!(vals.kappa, "0");
    }

    #[test]
    fn block_det_examples() {
        let a = QMatrix::from_rows(vec![vec![ratio(2, 3)]]).unwrap();
        assert!(block_det_lemma_check(&a, &[vec![rat(5)]]).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for k in 1..=3 {
            let a = random_matrix(k, &mut rng);
            let us: Vec<Vec<BigRational>> = (0..k)
                .map(|i| (0..=i % 3).map(|_| small_rational(&mut rng)).collect())
                .collect();
            assert!(block_det_lemma_check(&a, &us).unwrap());
            let zeros: Vec<Vec<BigRational>> = (0..k).map(|_| vec![rat(0); 2]).collect();
            assert!(block_det_lemma_check(&a, &zeros).unwrap());
        }
    }
}
