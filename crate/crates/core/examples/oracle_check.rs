//! Cross-checks the length formula, straightness and class minima against
//! brute force on a Cayley ball.

use weylcalc::{oracle, AffineWeyl, Error};

fn main() -> weylcalc::Result<()> {
    let g = AffineWeyl::preset("Sp4")?;
    let ball = oracle::cayley_ball(&g, 5)?;
    let mut mismatches = 0;
    let (mut conclusive, mut inconclusive) = (0, 0);
    for (w, &d) in &ball.distances {
        mismatches += usize::from(g.length(w) != d || g.is_straight(w) != oracle::brute_straight_check(&g, w, 12));
        let (m, _) = g.reduce_to_min(w)?;
        match oracle::brute_min_length_in(&g, w, &ball) {
            Ok(l) => {
                mismatches += usize::from(l != g.length(&m));
                conclusive += 1;
            }
            Err(Error::Inconclusive { .. }) => inconclusive += 1,
            Err(e) => return Err(e),
        }
    }
    println!("{} elements, {mismatches} mismatches, {conclusive} conclusive minima, {inconclusive} inconclusive", ball.len());
    Ok(())
}
