//! The three descriptions of parahoric cosets, and the appendix weight
//! duality.
use fle_comb::blockmatch::{appendix_dual_weight, appendix_shift, parahoric_subset_check};
use fle_comb::{CartanType, RootDatum};

fn main() {
    let b2 = RootDatum::build(CartanType::B(2));
    for subset in [vec![], vec![0], vec![1]] {
        let r = parahoric_subset_check(&b2, &subset, 5).unwrap();
        println!(
            "B2 subset {subset:?}: {} of {} elements qualify, descriptions agree: {}",
            r.whittaker.len(),
            r.core,
            r.equal()
        );
    }
    for t in [CartanType::A(3), CartanType::E(6)] {
        let d = RootDatum::build(t);
        println!("{t}: shift 2<ρ̌,ρ> = {}", appendix_shift(&d));
    }
    println!("-μ-2 on (3, -1): {:?}", appendix_dual_weight(&[3, -1]));
}
