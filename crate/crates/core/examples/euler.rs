//! Euler characteristics and the symbolic D_n(d).

use weilcount::counting::{d_count, euler_char, Symbolic};

fn main() -> weilcount::Result<()> {
    println!("{:>3} {:>10} {:>10} {:>10}", "n", "g=2", "g=3", "g=4");
    for n in 1..=8 {
        let row: Vec<String> = (2..=4).map(|g| euler_char(n, g).map(|x| format!("{x:>10}"))).collect::<Result<_, _>>()?;
        println!("{n:>3} {}", row.join(" "));
    }
    println!();
    for d in [1, 2, 4] {
        println!("D_4({d}) = {}", d_count(4, d, &Symbolic)?);
    }
    Ok(())
}
