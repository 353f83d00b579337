//! dim X_w(b) against the virtual dimension d_w(b) for all short w in SL3.

use weylcalc::{AffineWeyl, DimEngine};

fn main() -> weylcalc::Result<()> {
    let engine = DimEngine::new(AffineWeyl::preset("SL3")?);
    let g = engine.group();
    let classes = g.enumerate_straight_classes(2)?;
    let (mut equal, mut below, mut empty) = (0, 0, 0);
    for w in g.elements_by_length(5)?.into_iter().flatten() {
        for c in &classes {
            match engine.dim_x_flag(&w, c)?.finite() {
                None => empty += 1,
                Some(d) if 2 * d as i64 == engine.virtual_dimension(&w, c)?.twice => equal += 1,
                Some(_) => below += 1,
            }
        }
    }
    println!("ℓ(w) ≤ 5 against {} classes: {equal} at d_w(b), {below} below it, {empty} empty", classes.len());
    println!("memo: {:?}", engine.stats());
    Ok(())
}
