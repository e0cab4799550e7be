//! The integers f_p(n), the star congruences, and divisibility of wala
//! sums on random instances.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use weilcount::integrality::{f_p, random_wala_instance, star_congruence_check, wala_check};

fn main() -> weilcount::Result<()> {
    for p in [2, 3, 5] {
        let vals: Vec<String> = (0..8).map(|n| f_p(p, n).map(|x| x.to_string())).collect::<Result<_, _>>()?;
        println!("f_{p}: {}", vals.join(", "));
    }
    let all = (1..=30).all(|n| star_congruence_check(3, 2, n).unwrap_or(false));
    println!("star congruence p = 3, alpha = 2, n <= 30: {all}\n");

    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..5 {
        let inst = random_wala_instance(&mut rng);
        let rep = wala_check(&inst)?;
        println!("chi = {}, {} blocks: sum {:?}, divisor {}, divisible {}", inst.chi, inst.blocks.len(), rep.sum, rep.divisor, rep.divisible);
    }
    Ok(())
}
