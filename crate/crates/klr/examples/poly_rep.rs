//! The polynomial representation of the nil Hecke algebra on i^n, truncated by degree.
use klr::klr::module::{unit, ModGen};
use klr::klr::{poly_rep, verify_relations};
use klr::{CartanDatum, CartanType};

fn main() -> klr::Result<()> {
    let a2 = CartanDatum::new(CartanType::A, 2)?;
    let m = poly_rep(&a2, 1, 2, 3)?;
    println!("dimension {} (monomials of degree at most 3)", m.dim());
    println!("graded dimension {}", m.graded_dim());
    let y1 = m.apply(ModGen::Y(0), &unit(0))?;
    let v = m.apply(ModGen::Psi(0), &y1)?;
    let terms: Vec<String> = v.iter().map(|(k, c)| format!("{c} * (vector of degree {})", m.basis[*k].degree)).collect();
    println!("psi1 y1 . 1 = {}", terms.join(" + "));
    println!("{}", verify_relations(&m));
    Ok(())
}
