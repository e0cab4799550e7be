//! P_{g,n} from an A table and the inverse problem C from A.
//!
//! The C values planted here are random Weil-invariant polynomials, not real
//! counts, so only the round trip is meaningful.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use weilcount::counting::{atable_from_ctable, build_pgn, c_from_a, random_weil_invariant, CTable};

fn main() -> weilcount::Result<()> {
    let rep = build_pgn(1, 2, None)?;
    println!("P_{{2,1}} = {}", rep.p);
    println!("Q_{{2,1}} = {}", rep.q.as_ref().expect("Pic0 divides itself"));
    println!("checks pass: {}\n", rep.passed());

    let (g, n) = (2u32, 4u32);
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut planted = CTable::with_pic0(g as usize);
    for s in 2..=n {
        planted.insert(s, 1, random_weil_invariant(g as usize, 2, 1, &mut rng))?;
    }
    let a = atable_from_ctable(n, g, &planted)?;
    let back = c_from_a(n, g, &a, &CTable::with_pic0(g as usize))?;
    for s in 1..=n {
        let same = back.get(s, 1)? == planted.get(s, 1)?;
        println!("C[{s},1] recovered: {same}");
    }
    Ok(())
}
