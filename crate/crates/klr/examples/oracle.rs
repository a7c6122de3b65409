//! Good words from Kostant partitions against the span of letter shuffles.
use klr::goodlyndon::{weights_up_to, LyndonTable};
use klr::shuffle::good_words_oracle;
use klr::{CartanDatum, CartanType};

fn main() -> klr::Result<()> {
    let g2 = CartanDatum::new(CartanType::G, 2)?;
    let table = LyndonTable::new(&g2);
    for alpha in weights_up_to(2, 5) {
        let mut fast: Vec<_> = table.good_words(&alpha).into_iter().map(|g| g.word).collect();
        fast.sort();
        let mut slow = good_words_oracle(&g2, &alpha, 8)?;
        slow.sort();
        println!("{:<10} {:>3} good words, agree: {}", alpha.to_string(), fast.len(), fast == slow);
    }
    Ok(())
}
