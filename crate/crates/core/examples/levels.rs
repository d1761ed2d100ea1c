//! Parse levels, compute dual levels and translation lattices.
use fle_comb::levels::{dual_level, translation_lattice};
use fle_comb::{CartanType, Level, RootDatum};

fn main() {
    let g2 = RootDatum::build(CartanType::G2);
    for text in ["-h-2/5", "-h+3/7", "-h-6", "irr"] {
        let level: Level = text.parse().unwrap();
        let dual = dual_level(&level, &g2).unwrap();
        let back = dual_level(&dual, &g2.langlands_dual()).unwrap();
        println!(
            "G2 at {level} ({:?}) has dual level {dual}; dualizing again gives {back}",
            level.sign()
        );
    }
    let b2 = RootDatum::build(CartanType::B(2));
    let lattice = translation_lattice(&"-h-1/2".parse().unwrap(), &b2);
    println!("B2 translations at -h-1/2: {}", lattice.to_json());
}
