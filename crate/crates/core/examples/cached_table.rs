//! Emits a dimension table twice, the second time from the on-disk memo.

use weylcalc::cli::{emit_table, TableFormat, TableSpec};
use weylcalc::{AffineWeyl, DimEngine};

fn main() -> weylcalc::Result<()> {
    let dir = std::env::temp_dir().join("weylcalc-example-cache");
    std::fs::create_dir_all(&dir)?;
    let mut outputs = Vec::new();
    for run in ["cold", "warm"] {
        let engine = DimEngine::new(AffineWeyl::preset("PGL2")?);
        let loaded = engine.load_cache(&dir)?;
        let spec = TableSpec { max_length: 4, classes: engine.group().enumerate_straight_classes(2)? };
        let (csv, rows) = emit_table(&engine, &spec, TableFormat::Csv)?;
        let path = engine.save_cache(&dir)?;
        println!("{run}: {rows} rows, {loaded} profiles loaded, cache at {}", path.display());
        outputs.push(csv);
    }
    assert_eq!(outputs[0], outputs[1]);
    print!("{}", outputs[1]);
    Ok(())
}
