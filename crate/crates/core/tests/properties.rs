use proptest::prelude::*;

use shadowstates::bijection::{varphi, varphi_inv};
use shadowstates::families::{build, Family, FamilySpec};
use shadowstates::words::{in_tau2, is_bitonic, Word};

fn word_strategy(max_len: usize) -> impl Strategy<Value = Vec<bool>> {
    prop::collection::vec(any::<bool>(), 0..max_len)
}

/// A bitonic word `a^x b^y a^z` of length `n >= 1`, built from run lengths.
fn region_code(n: usize, first: bool, cuts: (usize, usize)) -> Word {
    let (mut i, mut j) = (cuts.0 % (n + 1), cuts.1 % (n + 1));
    if i > j {
        std::mem::swap(&mut i, &mut j);
    }
    Word::run(first, i)
        .concat(&Word::run(!first, j - i))
        .concat(&Word::run(first, n - j))
}

fn text(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

fn family() -> impl Strategy<Value = FamilySpec> {
    prop_oneof![
        (1..12usize).prop_map(|n| FamilySpec::new(Family::TwistLoop, n)),
        (2..12usize).prop_map(|n| FamilySpec::new(Family::Foil, n)),
        (1..12usize).prop_map(|n| FamilySpec::new(Family::TwistKnot, n)),
    ]
}

proptest! {
    #[test]
    fn word_order_matches_string_order(a in word_strategy(200), b in word_strategy(200)) {
        let (wa, wb) = (Word::from_bits(a.clone()), Word::from_bits(b.clone()));
        prop_assert_eq!(wa.cmp(&wb), text(&a).cmp(&text(&b)));
        prop_assert_eq!(wa == wb, a == b);
    }

    #[test]
    fn slices_compare_by_content(a in word_strategy(300), s in 0usize..300, e in 0usize..300) {
        let (s, e) = (s.min(a.len()), e.min(a.len()));
        let (s, e) = (s.min(e), s.max(e));
        let word = Word::from_bits(a.clone());
        let piece = word.slice(s, e);
        prop_assert_eq!(&piece, &Word::from_bits(a[s..e].iter().copied()));
        prop_assert_eq!(piece.to_string(), text(&a[s..e]));
    }

    #[test]
    fn find_and_runs_agree_with_bits(a in word_strategy(300), start in 0usize..320, bit: bool) {
        let word = Word::from_bits(a.clone());
        let naive = (start..a.len()).find(|&i| a[i] == bit);
        prop_assert_eq!(word.find(bit, start), naive);
        let runs = word.runs();
        prop_assert_eq!(runs.iter().map(|r| r.1).sum::<usize>(), a.len());
        prop_assert!(runs.windows(2).all(|p| p[0].0 != p[1].0));
        let changes = a.windows(2).filter(|p| p[0] != p[1]).count();
        prop_assert_eq!(word.transitions(), changes);
    }

    #[test]
    fn concat_and_complement(a in word_strategy(150), b in word_strategy(150)) {
        let (wa, wb) = (Word::from_bits(a.clone()), Word::from_bits(b.clone()));
        let joined = wa.concat(&wb);
        prop_assert_eq!(joined.len(), a.len() + b.len());
        prop_assert_eq!(joined.slice(0, a.len()), wa.clone());
        prop_assert_eq!(joined.slice(a.len(), joined.len()), wb);
        prop_assert_eq!(wa.complement().complement(), wa.clone());
        prop_assert_eq!(wa.complement().count_zeros(), wa.count_ones());
    }

    #[test]
    fn bijection_round_trips(n in 0usize..2000, first: bool, cuts in (0usize..4000, 0usize..4000)) {
        let code = region_code(n + 1, first, cuts);
        prop_assert!(is_bitonic(&code));
        let image = varphi(&code).unwrap();
        prop_assert_eq!(image.len(), n + 2);
        prop_assert!(in_tau2(&image));
        prop_assert_eq!(varphi_inv(&image).unwrap(), code);
    }

    #[test]
    fn non_bitonic_codes_are_rejected(a in word_strategy(100)) {
        let word = Word::from_bits(a);
        prop_assert_eq!(varphi(&word).is_ok(), !word.is_empty() && is_bitonic(&word));
    }

    #[test]
    fn single_flip_changes_components_by_one(spec in family(), mask: u64, at in 0usize..64) {
        let diagram = build(spec);
        let c = diagram.crossing_count();
        prop_assume!(c > 0);
        let mask = mask & (u64::MAX >> (64 - c));
        let flipped = mask ^ (1 << (at % c));
        let (k, k2) = (diagram.resolve_mask(mask), diagram.resolve_mask(flipped));
        prop_assert_eq!(k.abs_diff(k2), 1);
    }
}
