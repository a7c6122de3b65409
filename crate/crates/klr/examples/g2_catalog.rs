//! Every G2 cuspidal module, checked against the known characters.
use klr::cuspidal::Catalog;
use klr::{CartanDatum, CartanType};

fn main() -> klr::Result<()> {
    let cat = Catalog::new(&CartanDatum::new(CartanType::G, 2)?)?;
    for r in cat.validate_all() {
        println!("{r}");
    }
    for e in cat.entries() {
        println!("ch L_{} = {}", e.root, cat.character(&e.root)?.display(cat.datum()));
    }
    Ok(())
}
