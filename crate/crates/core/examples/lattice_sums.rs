//! Truncated lattice sums against their closed form, and the averaging
//! lemma over n-th roots of unity.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use weilcount::spectral::lattice::{averaging_check, closed_form, direct_sum, h_tilde_vector, random_point};

fn main() -> weilcount::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let ns = [1u32, 2];
    let s = [1usize, 0];
    let lambda = random_point(&ns, &mut rng);
    println!("H~ for e = 1: {:?}", h_tilde_vector(&ns, &s, 1)?);
    let exact = closed_form(&ns, &s, 1, &lambda)?;
    for bound in [5, 10, 20, 40] {
        let d = direct_sum(&ns, &s, 1, &lambda, bound)?;
        println!("bound {bound:>2}: error {:.2e} (tail bound {:.2e})", (d.value() - exact).norm(), d.tail_bound);
    }
    let a = averaging_check(&[2, 1, 2], &[0, 2, 1], 2, &random_point(&[2, 1, 2], &mut rng))?;
    println!("\naveraging at e = 2: matches e* = {}: {}, literal e: {}", a.e_inverse, a.inverse_ok, a.literal_ok);
    Ok(())
}
