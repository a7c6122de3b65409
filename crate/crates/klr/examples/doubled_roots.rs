//! Type B and C cuspidal modules for roots with coefficients 2.
use klr::cuspidal::Catalog;
use klr::{CartanDatum, CartanType};

fn main() -> klr::Result<()> {
    for ty in [CartanType::B, CartanType::C] {
        let cat = Catalog::new(&CartanDatum::new(ty, 3)?)?;
        println!("{}", cat.datum().name());
        for r in cat.validate_all() {
            println!("  {r}");
        }
    }
    let c3 = Catalog::new(&CartanDatum::new(CartanType::C, 3)?)?;
    let beta = klr::RootVector(vec![1, 2, 2]);
    println!("ch L_{beta} = {}", c3.character(&beta)?.display(c3.datum()));
    Ok(())
}
