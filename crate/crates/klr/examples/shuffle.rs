//! Quantum shuffle products and the operators theta*_i.
use klr::{CartanDatum, CartanType, Word, WordSum};

fn main() -> klr::Result<()> {
    let a2 = CartanDatum::new(CartanType::A, 2)?;
    let one = WordSum::word(Word(vec![1]));
    let two = WordSum::word(Word(vec![2]));
    println!("(1) o (2) = {}", one.shuffle(&two, &a2).display(&a2));
    println!("(1) o (1) = {}", one.shuffle(&one, &a2).display(&a2));

    let g2 = CartanDatum::new(CartanType::G, 2)?;
    let x = klr::shuffle::letter_shuffle(&g2, &[1, 1, 2]);
    println!("G2 (1)o(1)o(2) = {}", x.display(&g2));
    println!("theta*_2 of it = {}", x.theta_star(2).display(&g2));
    println!("theta*_1^(2) theta*_2 = {}", x.theta_star(2).divided_theta_star(1, 2, &g2)?.display(&g2));
    Ok(())
}
