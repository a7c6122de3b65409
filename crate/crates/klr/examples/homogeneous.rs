//! A homogeneous module built from a weight-graph component: the D5 highest root.
use klr::homog::{build_s, component, hook_dimension, DEFAULT_COMPONENT_GUARD};
use klr::klr::verify_relations;
use klr::{CartanDatum, CartanType, Word};

fn main() -> klr::Result<()> {
    let d5 = CartanDatum::new(CartanType::D, 5)?;
    let c = component(&d5, &Word(vec![1, 3, 4, 5, 2, 3, 4]), DEFAULT_COMPONENT_GUARD)?;
    println!("weight {}, {} words, strongly homogeneous: {}", c.weight, c.size(), c.strongly_homogeneous);
    for w in &c.members {
        println!("  {w}");
    }
    println!("hook formula: {}", hook_dimension(&c)?);
    let s = build_s(&d5, &c)?;
    println!("{}", verify_relations(&s));
    Ok(())
}
