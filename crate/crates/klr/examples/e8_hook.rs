//! The strongly homogeneous E8 component of dimension 33592.
use std::time::Instant;

use klr::homog::{component, hook_dimension, DEFAULT_COMPONENT_GUARD};
use klr::{CartanDatum, CartanType, Word};

fn main() -> klr::Result<()> {
    let e8 = CartanDatum::new(CartanType::E, 8)?;
    let word = Word(vec![1, 3, 4, 5, 6, 7, 8, 2, 4, 5, 6, 7, 3, 4, 5, 6, 2, 4, 5, 3, 4, 2]);
    let t = Instant::now();
    let c = component(&e8, &word, DEFAULT_COMPONENT_GUARD)?;
    println!("breadth-first search: {} words in {:.2?}", c.size(), t.elapsed());
    let heights: Vec<u32> = c.phi.iter().map(|b| b.height()).collect();
    println!("inversion root heights: {heights:?}");
    println!("hook formula: {}", hook_dimension(&c)?);
    Ok(())
}
