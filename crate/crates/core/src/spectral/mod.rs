//! Determinants, spanning trees, pair matrices, `(G,M)`-families and
//! lattice sums over Levi subgroups.

pub mod gm;
pub mod lattice;
pub mod matrix;
pub mod pairs;
pub mod trees;

pub use gm::{gm_family_limit, residue_count_integral_check, GmFamily, GmLimit, RationalFn, UniPoly};
pub use lattice::{averaging_check, closed_form, direct_sum, h_tilde_vector, h_vector};
pub use matrix::{kappa, kappa_lemma_check, QMatrix};
pub use pairs::{aggregation_check, build_pair_matrix, delta_pair, matr_triple, DiscretePairDatum, PairBlock};
pub use trees::{kirchhoff, spanning_tree_sum};

/// All permutations of `0..r` in lexicographic order.
pub fn permutations(r: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (0..r).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..r).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..r).rev().find(|&j| cur[j] > cur[i - 1]).expect("pivot has a successor");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}
