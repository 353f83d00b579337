//! Length, Newton point, κ, defect and the η decomposition for a few
//! elements of the extended affine Weyl group of PGL3.

use weylcalc::AffineWeyl;

fn main() -> weylcalc::Result<()> {
    let g = AffineWeyl::preset("PGL3")?;
    let tau = g.omega_elements()?[1].clone();
    let samples = [
        ("τ", tau.clone()),
        ("s0 s1 s2", g.from_affine_word(&[0, 1, 2])?),
        ("t^(1,1)", g.translation(&[1, 1])?),
        ("s1 τ s2", g.mul(&g.mul(&g.from_affine_word(&[1])?, &tau), &g.from_affine_word(&[2])?)),
    ];
    for (name, w) in samples {
        let (nu, nu_bar) = g.newton_point(&w);
        let eta = g.eta_decomposition(&w)?;
        println!(
            "{name:>9}: ℓ = {}, ν = {nu}, ν̄ = {nu_bar}, κ = {:?}, straight = {}, def = {}, η has length {}",
            g.length(&w),
            g.kappa_w(&w).0,
            g.is_straight(&w),
            g.defect_of(&w),
            g.datum().fw_length(&eta.eta),
        );
    }
    Ok(())
}
