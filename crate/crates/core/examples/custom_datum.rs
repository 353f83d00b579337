//! Loads a root datum from a JSON config instead of a preset.

use weylcalc::{build_root_datum, AffineWeyl};

const G2: &str = r#"{
    "name": "G2",
    "rank": 2,
    "cartan": [[2, -1], [-3, 2]],
    "coroots": [[1, 0], [0, 1]],
    "roots": [[2, -1], [-3, 2]]
}"#;

fn main() -> weylcalc::Result<()> {
    let d = build_root_datum(G2)?;
    println!("{}: |Φ+| = {}, |W0| = {}, hash {}", d.name(), d.positive_roots().len(), d.enumerate_w0()?.len(), &d.hash()[..16]);
    let g = AffineWeyl::new(d);
    for s in g.simple_reflections() {
        println!("  s{} = {:?}", s.label, g.to_spec(&s.element));
    }
    match build_root_datum(r#"{"name":"bad","rank":2,"cartan":[[2,-2],[-2,2]],"coroots":[[1,0],[0,1]],"roots":[[2,-2],[-2,2]]}"#) {
        Err(e) => println!("affine Cartan matrix rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
