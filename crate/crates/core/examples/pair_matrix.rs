//! Discrete pair data: the pair matrix, its κ, the tree sum and the
//! closed form, with and without the extra |N| factor.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use weilcount::spectral::pairs::random_datum;
use weilcount::spectral::{build_pair_matrix, matr_triple};

fn main() -> weilcount::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..4 {
        let datum = random_datum(4, &mut rng);
        let m = build_pair_matrix(&datum)?;
        let t = matr_triple(&datum)?;
        println!("g = {}, {} blocks, matrix {}x{}", datum.g, datum.blocks.len(), m.size(), m.size());
        println!("  tree {} | kappa {} | closed {} | agree {}", t.tree_sum, t.kappa, t.closed_form, t.agree);
        println!("  with |N| factor: {} (agrees: {})", t.closed_form_with_nu_count, t.nu_count_variant_agrees);
    }
    Ok(())
}
