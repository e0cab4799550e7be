//! Parabolic compositions, the combinatorial identity for τ and τ̂, and
//! the lattice count of Γ̂ for GL2.

use weilcount::cones::{self, Composition, ConePoint};

fn main() -> weilcount::Result<()> {
    let p = Composition::borel(3);
    println!("standard parabolics of GL3 containing B:");
    for q in p.coarsenings() {
        println!("  {:?}", q.parts());
    }
    let h = ConePoint::new(p.clone(), vec![
        weilcount::util::ratio(5, 7),
        weilcount::util::ratio(-2, 11),
        weilcount::util::ratio(-1, 13),
    ])?;
    for q in p.coarsenings() {
        println!("identity for Q = {:?}: {}", q.parts(), cones::langlands_identity_check(&p, &q, &h)?);
    }
    let gl2 = Composition::borel(2);
    for t in 1..=4 {
        let tp = ConePoint::from_ints(&[1, 1], &[t, -t])?;
        println!("GL2, T = ({t}, -{t}): lattice count {}", cones::gamma_hat_lattice_sum(&gl2, 0, &[0, 0], &tp)?);
    }
    Ok(())
}
