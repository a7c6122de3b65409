//! Positive roots, their good Lyndon words, and the good words of a weight.
use klr::goodlyndon::{kostant_count, LyndonTable};
use klr::{CartanDatum, CartanType, RootVector};

fn main() -> klr::Result<()> {
    let b3 = CartanDatum::new(CartanType::B, 3)?;
    let table = LyndonTable::new(&b3);
    for (root, word) in table.entries() {
        println!("{:<16} {}", root.to_string(), word);
    }
    let alpha = RootVector(vec![2, 2, 1]);
    println!("\ngood words of {alpha} ({} Kostant partitions):", kostant_count(&b3, &alpha));
    for gw in table.good_words(&alpha) {
        let fs: Vec<String> = gw.factors.iter().map(|f| format!("{}^{}", f.word, f.mult)).collect();
        println!("  {:<16} {}  s={}", gw.word.to_string(), fs.join(" "), gw.s);
    }
    Ok(())
}
