//! Builds the shipped root data and prints their basic invariants.

use weylcalc::{AffineWeyl, RootDatum};

fn main() -> weylcalc::Result<()> {
    for name in ["SL2", "PGL2", "GL2", "SL3", "PGL3", "Sp4", "SL4", "A2-twisted"] {
        let d = RootDatum::preset(name)?;
        let g = AffineWeyl::new(d.clone());
        let omega = g.omega_elements().map(|o| o.len().to_string()).unwrap_or_else(|_| "infinite".into());
        println!(
            "{name:>10}: rank {}, |Φ+| = {}, |W0| = {}, π1 = {}, |S̃| = {}, |Ω| = {omega}",
            d.rank(),
            d.positive_roots().len(),
            d.enumerate_w0()?.len(),
            d.pi1_description(),
            g.simple_reflections().len(),
        );
    }
    Ok(())
}
