use cusplevi::rootsys::{diagram_twist, recognize_type, RootDatum, Series, TwistedElement, WeylElement};
use cusplevi::splitlevi::{is_split_levi, split_levi_cover};
use proptest::prelude::*;

const TYPES: [(Series, usize, u8); 10] = [
    (Series::A, 3, 1),
    (Series::A, 4, 2),
    (Series::B, 3, 1),
    (Series::C, 4, 1),
    (Series::D, 4, 1),
    (Series::D, 4, 3),
    (Series::D, 5, 2),
    (Series::F, 4, 1),
    (Series::G, 2, 1),
    (Series::E, 6, 2),
];

fn setup(ty: usize, word: &[usize]) -> (RootDatum, TwistedElement) {
    let (series, n, order) = TYPES[ty];
    let d = RootDatum::build(series, n).unwrap();
    let word: Vec<usize> = word.iter().map(|i| i % n).collect();
    let w = WeylElement::from_word(&d, &word).unwrap();
    let t = TwistedElement::new(&d, w, diagram_twist(series, n, order).unwrap()).unwrap();
    (d, t)
}

fn roots_of(d: &RootDatum, raw: &[usize]) -> Vec<usize> {
    raw.iter().map(|r| r % d.num_roots()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cover_contains_input_and_is_fixed(
        ty in 0..TYPES.len(),
        word in prop::collection::vec(0usize..8, 0..12),
        raw in prop::collection::vec(0usize..1000, 0..4),
    ) {
        let (d, t) = setup(ty, &word);
        let sigma = roots_of(&d, &raw);
        let cover = split_levi_cover(&d, &sigma, &t).unwrap();
        prop_assert!(sigma.iter().all(|&r| cover.contains(r)));
        prop_assert!(is_split_levi(&d, &cover, &t).unwrap());
        let stable = cover.roots().iter().all(|&r| cover.contains(t.apply_root(r)));
        prop_assert!(stable);
    }

    #[test]
    fn cover_is_monotone(
        ty in 0..TYPES.len(),
        word in prop::collection::vec(0usize..8, 0..12),
        raw in prop::collection::vec(0usize..1000, 0..4),
        more in prop::collection::vec(0usize..1000, 0..3),
    ) {
        let (d, t) = setup(ty, &word);
        let small = roots_of(&d, &raw);
        let mut big = small.clone();
        big.extend(roots_of(&d, &more));
        let a = split_levi_cover(&d, &small, &t).unwrap();
        let b = split_levi_cover(&d, &big, &t).unwrap();
        prop_assert!(a.as_set().is_subset(&b.as_set()));
    }

    #[test]
    fn recognized_type_has_full_rank(
        ty in 0..TYPES.len(),
        word in prop::collection::vec(0usize..8, 0..12),
        raw in prop::collection::vec(0usize..1000, 0..4),
    ) {
        let (d, t) = setup(ty, &word);
        let cover = split_levi_cover(&d, &roots_of(&d, &raw), &t).unwrap();
        let lt = recognize_type(&d, &cover, &t).unwrap();
        prop_assert_eq!(lt.total_rank(), d.rank());
    }

    #[test]
    fn weyl_inverse(ty in 0..TYPES.len(), word in prop::collection::vec(0usize..8, 0..16)) {
        let (d, t) = setup(ty, &word);
        let w = t.weyl();
        prop_assert!(w.compose(&d, &w.inverse(&d)).is_identity());
        prop_assert!(t.pow(&d, t.order()).weyl().is_identity());
    }
}
