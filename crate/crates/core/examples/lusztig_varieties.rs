//! Affine Lusztig varieties: dim Y_w(γ) and dim Y_μ(γ) from the class of
//! γ and the dimension of its affine Springer fiber.

use weylcalc::{AffineWeyl, DimEngine, GammaDescriptor, Kappa, QVec};

fn main() -> weylcalc::Result<()> {
    let engine = DimEngine::new(AffineWeyl::preset("PGL2")?);
    let g = engine.group();
    let elliptic = g.resolve_class(&Kappa(vec![1]), &QVec::zero(1))?;
    // d(γ) = 1, c(γ) = 0 gives dim Y_γ = 1.
    let gd = GammaDescriptor::with_invariants(elliptic, 1, 0);
    println!("dim Y_γ = {}", gd.resolve_springer_dim()?);
    for w in g.elements_by_length(3)?.into_iter().flatten() {
        println!("  w = {:?}: dim Y_w(γ) = {:?}", g.to_spec(&w), engine.dim_y_flag(&w, &gd)?);
    }
    for mu in [[1], [3], [5]] {
        println!("  μ = {mu:?}: dim Y_μ(γ) = {:?}", engine.dim_y_grass(&mu, &gd)?);
    }

    let sl2 = DimEngine::new(AffineWeyl::preset("SL2")?);
    let basic = sl2.group().resolve_class(&Kappa(vec![0]), &QVec::zero(1))?;
    let gd = GammaDescriptor::with_springer_dim(basic, 2);
    let s = sl2.group().datum().fw_simple(0);
    let one = sl2.group().datum().fw_identity();
    let v = sl2.dim_y_superregular(&one, &[2], &s, &gd)?;
    println!("SL2 superregular t^(2) s1: dim Y = {v:?}");
    Ok(())
}
