//! Induction products of cuspidal modules; their characters are shuffle products.
use klr::cuspidal::Catalog;
use klr::klr::{induction_product, verify_relations, DEFAULT_INDUCE_GUARD};
use klr::{CartanDatum, CartanType, RootVector};

fn main() -> klr::Result<()> {
    let cat = Catalog::new(&CartanDatum::new(CartanType::G, 2)?)?;
    let d = cat.datum();
    for (a, b) in [(vec![1, 0], vec![0, 1]), (vec![2, 1], vec![1, 1]), (vec![1, 1], vec![2, 1])] {
        let (ma, mb) = (cat.module(&RootVector(a))?, cat.module(&RootVector(b))?);
        let m = induction_product(&ma, &mb, DEFAULT_INDUCE_GUARD)?;
        let same = m.q_character() == ma.q_character().shuffle(&mb.q_character(), d);
        println!(
            "L{} o L{}: dim {}, relations {}, character = shuffle: {same}",
            ma.blocks[0],
            mb.blocks[0],
            m.dim(),
            verify_relations(&m).passed()
        );
    }
    Ok(())
}
