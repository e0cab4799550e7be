//! Spanning trees of the complete graph and the Kirchhoff matrix.

use super::matrix::QMatrix;
use crate::error::{Error, Result};
use crate::series::Ring;
use num::rational::BigRational;
use num::Zero;

/// Largest vertex count accepted by [`spanning_tree_sum`].
pub const MAX_TREE_VERTICES: usize = 7;

/// Decodes a Prüfer sequence over `0..r` into the edge list of its tree.
pub fn prufer_edges(seq: &[usize], r: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; r];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(r.saturating_sub(1));
    for &v in seq {
        let leaf = (0..r).find(|&u| degree[u] == 1).expect("a leaf always exists");
        edges.push((leaf.min(v), leaf.max(v)));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..r).filter(|&u| degree[u] == 1).collect();
    if rest.len() == 2 {
        edges.push((rest[0], rest[1]));
    }
    edges
}

/// All `r^{r−2}` spanning trees of `K_r` as edge lists.
pub fn spanning_trees(r: usize) -> Vec<Vec<(usize, usize)>> {
    match r {
        0 => vec![],
        1 => vec![vec![]],
        _ => {
            let len = r - 2;
            let total = r.pow(len as u32);
            let mut out = Vec::with_capacity(total);
            let mut seq = vec![0usize; len];
            for mut code in 0..total {
                for s in seq.iter_mut() {
                    *s = code % r;
                    code /= r;
                }
                out.push(prufer_edges(&seq, r));
            }
            out
        }
    }
}

/// `Σ_T ∏_{{i,j}∈T} y_ij` over spanning trees of `K_r`.
pub fn spanning_tree_sum<R: Ring>(r: usize, weight: impl Fn(usize, usize) -> R, one: &R) -> Result<R> {
    if r == 0 || r > MAX_TREE_VERTICES {
        return Err(Error::Argument(format!(
            "spanning tree enumeration needs 1 <= r <= {MAX_TREE_VERTICES}, got {r}"
        )));
    }
    let mut w = vec![vec![one.zero_like(); r]; r];
    for i in 0..r {
        for j in i + 1..r {
            w[i][j] = weight(i, j);
        }
    }
    let mut total = one.zero_like();
    for tree in spanning_trees(r) {
        let mut p = one.one_like();
        for (i, j) in tree {
            p = p.times(&w[i][j]);
            if p.vanishes() {
                break;
            }
        }
        total = total.plus(&p);
    }
    Ok(total)
}

/// Kirchhoff matrix: `−y_ij` off the diagonal, zero row sums.
pub fn kirchhoff(r: usize, weight: impl Fn(usize, usize) -> BigRational) -> QMatrix {
    let mut m = QMatrix::zeros(r);
    for i in 0..r {
        for j in i + 1..r {
            let y = weight(i, j);
            m.set(i, j, -y.clone());
            m.set(j, i, -y);
        }
    }
    for i in 0..r {
        let s: BigRational = (0..r).filter(|&j| j != i).map(|j| m.get(i, j).clone()).sum();
        m.set(i, i, -s);
    }
    debug_assert!((0..r).all(|i| (0..r).map(|j| m.get(i, j)).sum::<BigRational>().is_zero()));
    m
}

#[cfg(test)]
mod tests {
    use super::super::matrix::kappa;
    use super::*;
    use crate::util::rat;
    use std::collections::BTreeSet;

    #[test]
    fn cayley_counts() {
        for r in 1..=6 {
            let trees = spanning_trees(r);
            assert_eq!(trees.len(), r.pow(r.saturating_sub(2) as u32).max(1));
            let distinct: BTreeSet<Vec<(usize, usize)>> = trees
                .into_iter()
                .map(|mut t| {
                    t.sort();
                    t
                })
                .collect();
            assert_eq!(distinct.len(), r.pow(r.saturating_sub(2) as u32).max(1));
        }
    }

    #[test]
    fn small_sums() {
        let y = |i: usize, j: usize| rat((i * 10 + j) as i64 + 1);
        assert_eq!(spanning_tree_sum(2, y, &rat(1)).unwrap(), rat(2));
        assert_eq!(spanning_tree_sum(3, |_, _| rat(1), &rat(1)).unwrap(), rat(3));
        assert_eq!(spanning_tree_sum(1, |_, _| rat(5), &rat(1)).unwrap(), rat(1));
        assert!(spanning_tree_sum(8, |_, _| rat(1), &rat(1)).is_err());
    }

    #[test]
    fn matches_kappa_of_kirchhoff() {
        for r in 1..=6 {
            let y = |i: usize, j: usize| rat(((i * 7 + j * 3) % 5) as i64 - 1);
            let lhs = spanning_tree_sum(r, y, &rat(1)).unwrap();
            assert_eq!(lhs, kappa(&kirchhoff(r, y)).unwrap(), "r={r}");
        }
    }
}
