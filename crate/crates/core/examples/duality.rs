//! The integral Weyl group at a level against the one at its dual level
//! on the Langlands dual side.
use fle_comb::duality::{verify_coxeter_iso, DualityMap};
use fle_comb::intweyl::integral_weyl_group;
use fle_comb::{CartanType, Level, RootDatum};

fn main() {
    let g2 = RootDatum::build(CartanType::G2);
    let level: Level = "-h-2/3".parse().unwrap();
    let report = verify_coxeter_iso(&level, &g2, 3).unwrap();
    println!(
        "G2 at {level} against {} at {}",
        report.type_label, report.dual_level
    );
    println!(
        "coxeter matrix {:?}, isomorphism verified: {}",
        report.coxeter_matrix,
        report.success()
    );

    let map = DualityMap::new(&g2, &level).unwrap();
    let w = integral_weyl_group(&g2, &level).unwrap();
    for x in &w.simple_reflections {
        let y = map.map(x).unwrap();
        println!(
            "{:<22} maps to {}",
            x.to_text(&g2),
            y.to_text(&map.dual_datum)
        );
    }
}
