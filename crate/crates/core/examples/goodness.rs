//! Good and bad levels: the bad-prime table against the alcove search.
use fle_comb::goodness::{bad_prime_product, is_good_alcove_oracle, is_good_table};
use fle_comb::{CartanType, Level, RootDatum};

fn main() {
    for t in [
        CartanType::A(2),
        CartanType::C(3),
        CartanType::G2,
        CartanType::E(8),
    ] {
        println!("{t}: bad prime product {}", bad_prime_product(t));
    }
    let g2 = RootDatum::build(CartanType::G2);
    for q in 1..=7 {
        let level = Level::from_offset(-1, q);
        let table = is_good_table(&level, &g2).unwrap();
        let oracle = is_good_alcove_oracle(&level, &g2, None).unwrap();
        println!(
            "G2 at {level}: table says {table}, alcove search says {}",
            oracle.verdict.as_str()
        );
    }
}
