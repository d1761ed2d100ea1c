//! Blocks at a negative level and their matching with the dual side.
use fle_comb::blockmatch::{enumerate_blocks, match_blocks};
use fle_comb::{CartanType, Level, RootDatum};

fn main() {
    let a2 = RootDatum::build(CartanType::A(2));
    let level: Level = "-h-1/3".parse().unwrap();
    for b in enumerate_blocks(&a2, &level, 5).unwrap() {
        println!(
            "y = {:<16} weight {:?} stabilizer {:?}",
            b.minimal.to_text(&a2),
            b.weight,
            b.stabilizer
        );
    }
    let report = match_blocks(&a2, &level, 8).unwrap();
    println!(
        "bound 8: {} blocks, verdict {}",
        report.blocks.len(),
        report.verdict().as_str()
    );

    let b2 = RootDatum::build(CartanType::B(2));
    let report = match_blocks(&b2, &Level::irrational(), 6).unwrap();
    println!("B2 at irr: {}", report.to_json(&b2)["summary"]);
}
