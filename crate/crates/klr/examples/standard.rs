//! Characters of standard modules and their leading terms.
use klr::cuspidal::Catalog;
use klr::{CartanDatum, CartanType, RootVector};

fn main() -> klr::Result<()> {
    let cat = Catalog::new(&CartanDatum::new(CartanType::G, 2)?)?;
    let alpha = RootVector(vec![3, 2]);
    for gw in cat.table().good_words(&alpha) {
        let ch = cat.standard_character(&gw)?;
        let (top, k) = ch.max_word(cat.datum())?;
        println!("Delta{}: {} terms, leading ({k}){top}", gw.word, ch.len());
    }
    Ok(())
}
