//! Reduces every element of W(A3) to minimal length in its δ-twisted
//! class, for δ trivial and for the diagram flip.

use std::collections::BTreeMap;

use weylcalc::RootDatum;

fn main() -> weylcalc::Result<()> {
    for name in ["SL4", "A3-twisted"] {
        let d = RootDatum::preset(name)?;
        let mut minima: BTreeMap<usize, usize> = BTreeMap::new();
        let mut elliptic = 0;
        for w in d.enumerate_w0()? {
            let (m, _) = d.delta_reduce_to_min(&w);
            *minima.entry(d.fw_length(&m)).or_default() += 1;
            elliptic += usize::from(d.is_elliptic_delta(&m));
        }
        println!("{name}: minimal lengths reached {minima:?}; {elliptic} elements reduce to elliptic ones");
    }
    let d = RootDatum::preset("A2-twisted")?;
    let w = d.fw_from_word(&[0])?;
    let supp: Vec<usize> = d.supp_delta(&w).into_iter().map(|i| i + 1).collect();
    println!("A2 with flip: supp_δ(s1) = {supp:?}, elliptic = {}", d.is_elliptic_delta(&w));
    Ok(())
}
