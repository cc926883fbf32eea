mod oracle;

use popwilf::bijections::{decode, encode, Theorem13Pair, Variant};
use popwilf::ferrers::boards;
use popwilf::permutation::{avoiders, contains_pop, count_avoiders_of_length};
use popwilf::{LabelSet, LabeledPoset, Permutation, Transversal};
use proptest::prelude::*;

/// A random POP on up to `max` labels: edges drawn along a random linear
/// order, so the relation is acyclic by construction.
fn arb_pop(max: usize) -> impl Strategy<Value = LabeledPoset> {
    (1..=max)
        .prop_flat_map(|k| {
            (Just((1..=k).collect::<Vec<usize>>()).prop_shuffle(), proptest::collection::vec(any::<bool>(), k * k))
        })
        .prop_map(|(order, bits)| {
            let k = order.len();
            let mut rels = Vec::new();
            for i in 0..k {
                for j in i + 1..k {
                    if bits[i * k + j] {
                        rels.push((order[i], order[j]));
                    }
                }
            }
            LabeledPoset::new(k, rels).unwrap()
        })
}

fn arb_perm(max: usize) -> impl Strategy<Value = Permutation> {
    (0..=max)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn first_occurrence(w: &[usize], p: &LabeledPoset) -> Option<Vec<usize>> {
    let rels = oracle::relations(p);
    let mut found = None;
    oracle::any_combination(w.len(), p.size(), &mut |pos| {
        if rels.iter().all(|&(a, b)| w[pos[a - 1]] < w[pos[b - 1]]) {
            found = Some(pos.iter().map(|i| i + 1).collect());
            true
        } else {
            false
        }
    });
    found
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn display_parse_round_trip(p in arb_pop(8)) {
        let back: LabeledPoset = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn matcher_finds_the_least_occurrence(p in arb_pop(5), w in arb_perm(9)) {
        prop_assert_eq!(contains_pop(&w, &p), first_occurrence(w.values(), &p));
    }

    #[test]
    fn counts_are_symmetry_invariant(p in arb_pop(5), n in 0usize..=6) {
        let c = count_avoiders_of_length(&p, n);
        prop_assert_eq!(count_avoiders_of_length(&p.reverse(), n), c);
        prop_assert_eq!(count_avoiders_of_length(&p.complement(), n), c);
        prop_assert_eq!(count_avoiders_of_length(&p.reverse().complement(), n), c);
    }

    #[test]
    fn avoiders_are_sorted_and_complete(p in arb_pop(4), n in 0usize..=6) {
        let listed: Vec<Vec<usize>> = avoiders(&p, n).map(Permutation::into_values).collect();
        prop_assert_eq!(listed.len() as u64, count_avoiders_of_length(&p, n));
        let mut expected = oracle::avoiders(&p, n);
        if n == 0 {
            expected = if p.size() == 0 { vec![] } else { vec![vec![]] };
        }
        prop_assert_eq!(listed, expected);
    }

    #[test]
    fn permutation_symmetries_are_involutions(w in arb_perm(10)) {
        prop_assert_eq!(w.inverse().inverse(), w.clone());
        prop_assert_eq!(w.reverse().reverse(), w.clone());
        prop_assert_eq!(w.complement().complement(), w);
    }

    #[test]
    fn block_reversal_is_an_involution(p in arb_pop(5), q in arb_pop(3)) {
        let sum = p.disjoint_sum(&q).unwrap();
        let block = LabelSet::range(1, p.size());
        let once = sum.block_reversal(block).unwrap();
        prop_assert_eq!(once.block_reversal(block).unwrap(), sum);
    }

    #[test]
    fn encoding_round_trips(n in 1usize..=7, pick in any::<prop::sample::Index>(), t in any::<prop::sample::Index>()) {
        let all = boards(n);
        let board = pick.get(&all).clone();
        let avoiders = popwilf::ferrers::board_avoiders(&board, &Variant::Ascending.pop());
        let t = t.get(&avoiders);
        let word = encode(t, Variant::Ascending).unwrap();
        let image = decode(&word, &board, Variant::Descending).unwrap();
        prop_assert!(!popwilf::ferrers::contains_pop_in_board(&image, &Variant::Descending.pop()));
        prop_assert_eq!(encode(&image, Variant::Descending).unwrap(), word.clone());
        prop_assert_eq!(&decode(&word, &board, Variant::Ascending).unwrap(), t);
    }

    #[test]
    fn top_swap_round_trips(w in arb_perm(9)) {
        let pair = Theorem13Pair::new(
            "pop 5: c[3>5>1>2], i[4]".parse().unwrap(),
            "pop 5: c[5>3>1>2], i[4]".parse().unwrap(),
        ).unwrap();
        prop_assume!(contains_pop(&w, pair.p()).is_none());
        let v = pair.forward(&w).unwrap();
        prop_assert!(contains_pop(&v, pair.p_prime()).is_none());
        prop_assert_eq!(pair.inverse(&v).unwrap(), w);
    }

    #[test]
    fn transversal_permutation_round_trip(w in arb_perm(10)) {
        prop_assert_eq!(Transversal::from_permutation(&w).to_permutation(), w);
    }
}
