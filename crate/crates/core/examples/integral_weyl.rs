//! The integral Weyl group at a rational level: its simple affine
//! coroots and a generation check against the translation lattice.
use fle_comb::intweyl::{generation_check, integral_weyl_group};
use fle_comb::{CartanType, Level, RootDatum};

fn main() {
    let b2 = RootDatum::build(CartanType::B(2));
    for text in ["-h-1/2", "-h-1/3", "irr"] {
        let level: Level = text.parse().unwrap();
        let w = integral_weyl_group(&b2, &level).unwrap();
        let coroots: Vec<_> = w.simple_coroots.iter().map(|a| a.to_json()).collect();
        println!(
            "B2 at {level}: simple coroots {}",
            serde_json::Value::from(coroots)
        );
        let (words, lattice, agree) = generation_check(&w, 4, 100_000).unwrap();
        println!("  words up to length 4: {words}, lattice members among them: {lattice}, agree: {agree}");
    }
}
