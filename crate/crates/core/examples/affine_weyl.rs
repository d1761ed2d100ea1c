//! Length, reduced words and Bruhat order in the extended affine Weyl
//! group of adjoint A2.
use fle_comb::{AffineWeylGroup, CartanType, RootDatum};

fn main() {
    let d = RootDatum::build(CartanType::A(2));
    let g = AffineWeylGroup::new(&d);
    let ball = g.enumerate_ball(4).unwrap();
    println!(
        "{} elements of length at most 4 (|Ω| = {})",
        ball.len(),
        g.omega().len()
    );

    let x = g.from_word(&[0, 1, 2, 0], &g.identity());
    let (word, om) = g.reduced_word(&x);
    println!(
        "s0 s1 s2 s0 = {} has length {} and reduced word {word:?}",
        x.to_text(&d),
        g.length(&x)
    );
    assert!(om.is_identity());

    let below = g.subword_products(&x);
    println!("{} elements lie below it in Bruhat order", below.len());
    let y = g.from_word(&[1, 0], &g.identity());
    println!("s1 s0 <= x: {}", g.bruhat_leq(&y, &x));
    println!(
        "minimal representative of x W_f: {}",
        g.min_coset_rep_right(&x).to_text(&d)
    );
}
