//! Lists the straight conjugacy classes met by short elements.

use weylcalc::AffineWeyl;

fn main() -> weylcalc::Result<()> {
    for (name, max_len) in [("PGL2", 2), ("SL3", 4), ("Sp4", 4)] {
        let g = AffineWeyl::preset(name)?;
        let classes = g.enumerate_straight_classes(max_len)?;
        println!("{name}, ℓ(C) ≤ {max_len}: {} classes", classes.len());
        for c in classes {
            println!("  {c}");
        }
    }
    Ok(())
}
