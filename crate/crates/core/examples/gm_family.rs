//! Limits of (G,M)-families and the residue count of zeros minus poles.

use std::collections::BTreeMap;
use weilcount::spectral::gm::{RationalFn, UniPoly};
use weilcount::spectral::{gm_family_limit, residue_count_integral_check, GmFamily};
use weilcount::util::{rat, ratio};

fn main() -> weilcount::Result<()> {
    let mut c = BTreeMap::new();
    c.insert((0, 1), UniPoly::monomial(3));
    c.insert((1, 0), UniPoly::monomial(5));
    let fam = GmFamily::new(2, c)?;
    let lim = gm_family_limit(&fam, 1e-8)?;
    println!("rank 2, x^3 and x^5: tree {} series {} numeric {:.10}", lim.tree_sum, lim.series_limit, lim.extrapolated);

    let f = RationalFn::from_roots(&[ratio(1, 2), rat(3)], &[rat(-3)]);
    let res = residue_count_integral_check(&f, &RationalFn::one(), 1024)?;
    println!("zeros minus poles inside |z| < 1: integral {:.6}, count {}", res.integral_re, res.count);
    Ok(())
}
