use fle_comb::affweyl::{AffineWeylGroup, ExtAffineWeylElement};
use fle_comb::blockmatch;
use fle_comb::levels::{self, Level};
use fle_comb::{CartanType, RootDatum};
use proptest::prelude::*;

fn cartan() -> impl Strategy<Value = CartanType> {
    prop_oneof![
        (1usize..=4).prop_map(CartanType::A),
        (2usize..=4).prop_map(CartanType::B),
        (2usize..=4).prop_map(CartanType::C),
        Just(CartanType::D(4)),
        Just(CartanType::G2),
        Just(CartanType::F4),
    ]
}

fn small_rank() -> impl Strategy<Value = CartanType> {
    prop_oneof![
        Just(CartanType::A(1)),
        Just(CartanType::A(2)),
        Just(CartanType::B(2)),
        Just(CartanType::G2),
    ]
}

/// A random element given as a word in the affine generators times an
/// element of `Ω`.
fn element(g: &AffineWeylGroup, word: &[usize], omega: usize) -> ExtAffineWeylElement {
    let n = g.generators().len();
    let word: Vec<usize> = word.iter().map(|i| i % n).collect();
    let om = &g.omega()[omega % g.omega().len()];
    g.from_word(&word, om)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_axioms(t in small_rank(), a in prop::collection::vec(0usize..8, 0..8), b in prop::collection::vec(0usize..8, 0..8), c in prop::collection::vec(0usize..8, 0..8), oa in 0usize..4, ob in 0usize..4) {
        let g = AffineWeylGroup::new(&RootDatum::build(t));
        let (x, y, z) = (element(&g, &a, oa), element(&g, &b, ob), element(&g, &c, 0));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert!(x.mul(&x.inverse()).is_identity());
        prop_assert_eq!(g.length(&x), g.length(&x.inverse()));
        prop_assert!(g.length(&x.mul(&y)) <= g.length(&x) + g.length(&y));
    }

    #[test]
    fn reduced_words_rebuild_the_element(t in small_rank(), a in prop::collection::vec(0usize..8, 0..10), oa in 0usize..4) {
        let g = AffineWeylGroup::new(&RootDatum::build(t));
        let x = element(&g, &a, oa);
        let (word, om) = g.reduced_word(&x);
        prop_assert_eq!(word.len(), g.length(&x));
        prop_assert_eq!(g.from_word(&word, &om), x);
    }

    #[test]
    fn dual_level_is_an_involution(t in cartan(), p in -60i64..60, q in 1i64..40) {
        prop_assume!(p != 0);
        let d = RootDatum::build(t);
        let level = Level::from_offset(p, q);
        let dual = levels::dual_level(&level, &d).unwrap();
        prop_assert_eq!(dual.sign(), level.sign());
        prop_assert_eq!(levels::dual_level(&dual, &d.langlands_dual()).unwrap(), level);
    }

    #[test]
    fn level_text_round_trips(p in -60i64..60, q in 1i64..40) {
        let level = Level::from_offset(p, q);
        prop_assert_eq!(level.to_string().parse::<Level>().unwrap(), level);
    }

    #[test]
    fn appendix_map_is_an_involution(mu in prop::collection::vec(-20i64..20, 1..8)) {
        let once = blockmatch::appendix_dual_weight(&mu);
        prop_assert_eq!(blockmatch::appendix_dual_weight(&once), mu);
    }

    #[test]
    fn weight_of_is_constant_on_right_cosets(t in small_rank(), a in prop::collection::vec(0usize..8, 0..8), oa in 0usize..4, i in 0usize..2) {
        let d = RootDatum::build(t);
        let g = AffineWeylGroup::new(&d);
        let x = element(&g, &a, oa);
        let s = fle_comb::affweyl::FiniteWeyl::simple(&d, i % d.rank());
        let xs = x.mul(&ExtAffineWeylElement::finite(s));
        prop_assert_eq!(blockmatch::weight_of(&x), blockmatch::weight_of(&xs));
    }
}
