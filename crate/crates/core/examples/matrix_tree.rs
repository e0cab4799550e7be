//! κ(A) against spanning tree sums and the cofactor forms of the lemma.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use weilcount::spectral::matrix::{random_weights, random_zero_row_col_sum};
use weilcount::spectral::{kappa, kappa_lemma_check, kirchhoff, spanning_tree_sum};
use weilcount::util::rat;

fn main() -> weilcount::Result<()> {
    for r in 2..=5 {
        let y = |i: usize, j: usize| rat((i + 2 * j) as i64 % 4 + 1);
        let trees = spanning_tree_sum(r, y, &rat(1))?;
        let k = kappa(&kirchhoff(r, y))?;
        println!("r = {r}: tree sum {trees}, kappa {k}");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let a = random_zero_row_col_sum(4, &mut rng);
    let (ok, vals) = kappa_lemma_check(&a, &random_weights(4, &mut rng), &random_weights(4, &mut rng))?;
    println!("\nlemma on a random 4x4 matrix: {ok}");
    println!("{}", serde_json::to_string_pretty(&vals).expect("serializable"));
    Ok(())
}
