//! Cuspidal modules for a non-natural letter order, and the F4 roots reduced to one.
use klr::cuspidal::Catalog;
use klr::{CartanDatum, CartanType};

fn main() -> klr::Result<()> {
    let b3 = CartanDatum::with_order(CartanType::B, 3, Some(vec![3, 2, 1]))?;
    let cat = Catalog::new(&b3)?;
    println!("{} with order 3 < 2 < 1", b3.name());
    for r in cat.validate_all() {
        println!("  {r}");
    }
    let f4 = Catalog::new(&CartanDatum::new(CartanType::F, 4)?)?;
    println!("F4");
    for r in f4.validate_all() {
        println!("  {r}");
    }
    Ok(())
}
