//! Reduces an element to a minimal length element of its conjugacy class
//! and splits the result as u·x with x straight.

use weylcalc::AffineWeyl;

fn main() -> weylcalc::Result<()> {
    let g = AffineWeyl::preset("SL3")?;
    // The first length-6 element that needs at least two conjugations.
    let mut found = None;
    for w in g.elements_by_length(6)?.pop().unwrap_or_default() {
        let (m, path) = g.reduce_to_min(&w)?;
        if path.len() >= 2 && g.length(&m) > 0 {
            found = Some((w, m, path));
            break;
        }
    }
    let (w, m, path) = found.expect("some element reduces");
    println!("w = {:?}, ℓ(w) = {}", g.to_spec(&w), g.length(&w));
    for step in &path {
        println!(
            "  conjugate by s{}: ℓ {} -> {}",
            g.simple_reflections()[step.generator].label,
            g.length(&step.before),
            g.length(&step.after)
        );
    }
    let d = g.ux_decompose(&m)?;
    println!("w_min = {:?}, ℓ = {}", g.to_spec(&m), g.length(&m));
    println!("  ≈ witness {:?}", g.to_spec(&d.witness));
    println!("  u = {:?}, x = {:?}, K = {:?}", g.to_spec(&d.u), g.to_spec(&d.x), d.k);
    println!("  straight class {}", d.class);
    Ok(())
}
