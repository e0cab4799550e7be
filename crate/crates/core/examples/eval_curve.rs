//! Exact counts on a concrete genus-2 curve over F_2 with
//! L-polynomial numerator 1 + 3T² + 4T⁴.

use weilcount::laurent::{evaluate_at_curve, CurveInput, LaurentPoly};

fn main() -> weilcount::Result<()> {
    let curve = CurveInput::from_json_str(r#"{"g": 2, "q": 2, "numerator": [1, 0, 3, 0, 4]}"#)?;
    for w in curve.weil_warnings() {
        println!("warning: {w}");
    }
    let pic0 = LaurentPoly::pic0(curve.g);
    for k in 1..=4 {
        let count = evaluate_at_curve(&pic0, &curve, k, 1)?;
        println!("|Pic0(F_{{2^{k}}})| = {count}");
    }
    Ok(())
}
