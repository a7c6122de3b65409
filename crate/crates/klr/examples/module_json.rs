//! Export a module, read it back, and let the relation checker find a planted error.
use klr::cuspidal::Catalog;
use klr::json::{module_from_str, module_to_string};
use klr::klr::poly::coeff;
use klr::klr::verify_relations;
use klr::{CartanDatum, CartanType, RootVector};

fn main() -> klr::Result<()> {
    let cat = Catalog::new(&CartanDatum::new(CartanType::B, 2)?)?;
    let m = cat.module(&RootVector(vec![2, 1]))?;
    let text = module_to_string(&m);
    println!("{text}");
    let back = module_from_str(&text)?;
    println!("read back: relations pass = {}", verify_relations(&back).passed());

    let mut broken = back.clone();
    broken.y[0].set(0, 1, coeff(5));
    match verify_relations(&broken).first_failure() {
        Some(w) => println!("planted error found: {w}"),
        None => println!("planted error missed"),
    }
    Ok(())
}
