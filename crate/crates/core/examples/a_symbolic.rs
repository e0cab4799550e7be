//! Symbolic A_{n,1} in the unknowns C[s,k], with g − 1 kept formal and
//! specialized to a fixed genus.

use weilcount::counting::{der_value, GenusMode, Symbolic};

fn main() -> weilcount::Result<()> {
    for n in 1..=4 {
        println!("A_{{{n},1}} = {}", der_value(n, GenusMode::Symbolic, &Symbolic)?);
    }
    println!();
    for g in 2..=3 {
        println!("g = {g}: A_{{3,1}} = {}", der_value(3, GenusMode::Numeric(g), &Symbolic)?);
    }
    Ok(())
}
