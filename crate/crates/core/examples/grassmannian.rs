//! dim X_μ(b) in the affine Grassmannian, by the closed formula and by
//! fibering the affine flag variety over it.

use weylcalc::{oracle, AffineWeyl, DimEngine};

fn main() -> weylcalc::Result<()> {
    let engine = DimEngine::new(AffineWeyl::preset("SL3")?);
    let classes = engine.group().enumerate_straight_classes(4)?;
    for mu in [[1, 1], [2, 1], [2, 2]] {
        for c in &classes {
            let closed = engine.dim_x_grass(&mu, c)?;
            let fibred = oracle::grass_by_fibration(&engine, &mu, c)?;
            assert_eq!(closed, fibred);
            if let Some(d) = closed.finite() {
                println!("μ = {mu:?}, {c}: dim {d}");
            }
        }
    }
    Ok(())
}
