//! Build a few root data and print their invariants.
use fle_comb::{CartanType, RootDatum};

fn main() {
    for t in [
        CartanType::A(3),
        CartanType::B(3),
        CartanType::G2,
        CartanType::E(8),
    ] {
        let d = RootDatum::build(t);
        let f = d.require_simple().expect("simple type");
        println!(
            "{t}: {} positive roots, h^v = {}, r = {}, |π1| = {}",
            d.num_positive_roots(),
            f.dual_coxeter_number,
            f.lacing_number,
            d.fundamental_group_order()
        );
    }
    let b3 = RootDatum::build(CartanType::B(3));
    println!("B3 cartan matrix {:?}", b3.cartan());
    println!("its Langlands dual is {}", b3.langlands_dual().label());
    println!(
        "highest root of B3: {:?}",
        b3.positive_roots().last().unwrap()
    );
}
