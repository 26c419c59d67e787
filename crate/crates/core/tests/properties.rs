//! Invariant suites: exhaustive checks over the small address ranges the
//! contracts quantify over, plus randomized laws driven by proptest.

use proptest::prelude::*;

use cantor_swaps::address::{enumerate_addresses, Address, AddressRelation, Letter, SwapPair};
use cantor_swaps::element::VElement;
use cantor_swaps::presentations::{
    genset_abc, genset_cfp, genset_swaps, genset_uv, SwapTable,
};
use cantor_swaps::words::{free_reduce, parse, GenName, Word, WordExpr};

mod oracle;
use oracle::{random_element, Rng};

fn nonempty_upto(n: usize) -> Vec<Address> {
    enumerate_addresses(n).unwrap().into_iter().filter(|a| !a.is_empty()).collect()
}

#[test]
fn compare_is_antisymmetric_exhaustively_to_length_6() {
    let pool = enumerate_addresses(6).unwrap();
    for a in &pool {
        for b in &pool {
            let ab = a.compare(b);
            let ba = b.compare(a);
            assert_eq!(ab == AddressRelation::PrefixOf, ba == AddressRelation::ExtensionOf);
            assert_eq!(ab == AddressRelation::Equal, ba == AddressRelation::Equal);
            assert_eq!(ab == AddressRelation::Incomparable, ba == AddressRelation::Incomparable);
        }
    }
}

#[test]
fn swaps_are_involutions_exhaustively_to_length_4() {
    let pool = nonempty_upto(4);
    for (i, a) in pool.iter().enumerate() {
        for b in &pool[i + 1..] {
            if !a.is_incomparable_with(b) {
                continue;
            }
            let t = VElement::from_swap(a, b).unwrap();
            assert!(t.compose(&t).is_identity(), "<{a} {b}>^2");
        }
    }
}

#[test]
fn conjugation_law_exhaustively_to_length_3() {
    let pool = nonempty_upto(3);
    let pairs: Vec<SwapPair> = pool
        .iter()
        .enumerate()
        .flat_map(|(i, a)| {
            pool[i + 1..]
                .iter()
                .filter_map(|b| SwapPair::new(a.clone(), b.clone()).ok())
                .collect::<Vec<_>>()
        })
        .collect();
    for inner in &pairs {
        for outer in &pairs {
            let Some(transported) = outer.transport(inner) else {
                continue;
            };
            let t = VElement::from_swap_pair(inner);
            let s = VElement::from_swap_pair(outer);
            let conjugated = s.inverse().compose(&t).compose(&s);
            assert_eq!(
                conjugated,
                VElement::from_swap_pair(&transported),
                "{inner} ^ {outer}"
            );
        }
    }
}

#[test]
fn split_law_exhaustively_to_length_3() {
    let pool = nonempty_upto(3);
    for (i, a) in pool.iter().enumerate() {
        for b in &pool[i + 1..] {
            let Ok(pair) = SwapPair::new(a.clone(), b.clone()) else {
                continue;
            };
            let (h0, h1) = pair.split();
            assert_eq!(
                VElement::from_swap_pair(&pair),
                VElement::from_swap_pair(&h0).compose(&VElement::from_swap_pair(&h1)),
                "split of {pair}"
            );
        }
    }
}

#[test]
fn action_compatibility_on_random_instances() {
    let mut rng = Rng::new(0x5eed_0010);
    let mut checked = 0;
    for _ in 0..300 {
        let f = random_element(&mut rng);
        let g = random_element(&mut rng);
        let h = f.compose(&g);
        let gamma = oracle::random_address(&mut rng, 0, 14);
        if let Some(expect) = f.act(&gamma).and_then(|m| g.act(&m)) {
            assert_eq!(h.act(&gamma), Some(expect));
            checked += 1;
        }
    }
    assert!(checked > 100);
}

#[test]
fn cross_generating_set_consistency() {
    // the abc word for a swap and the literal itself land on one element,
    // whichever set evaluates them
    let table = SwapTable::build().unwrap();
    let abc = genset_abc();
    for (pair, word) in table.iter() {
        let via_word = abc.eval(word).unwrap();
        let literal = WordExpr::swap(pair.clone());
        for set in [genset_abc(), genset_uv(), genset_cfp(), genset_swaps()] {
            assert_eq!(set.eval(&literal).unwrap(), via_word, "{pair} in {}", set.name());
        }
    }
}

fn arb_address(max_len: usize) -> impl Strategy<Value = Address> {
    prop::collection::vec(prop::bool::ANY, 0..=max_len).prop_map(|bits| {
        Address::from_letters(
            bits.into_iter().map(|b| if b { Letter::One } else { Letter::Zero }).collect(),
        )
    })
}

fn arb_swap() -> impl Strategy<Value = SwapPair> {
    (arb_address(4), arb_address(4)).prop_filter_map("incomparable pairs only", |(a, b)| {
        SwapPair::new(a, b).ok()
    })
}

fn arb_genname() -> impl Strategy<Value = GenName> {
    prop_oneof![
        prop::sample::select(vec!["a", "b", "c", "u", "v", "pi0"])
            .prop_map(|s| GenName::Symbol(s.to_string())),
        arb_swap().prop_map(GenName::Swap),
    ]
}

fn arb_expr() -> impl Strategy<Value = WordExpr> {
    let leaf = prop_oneof![
        Just(WordExpr::Empty),
        arb_genname().prop_map(WordExpr::Gen),
    ];
    leaf.prop_recursive(4, 48, 6, |inner| {
        prop_oneof![
            inner.clone().prop_map(WordExpr::inverse),
            (inner.clone(), -4i32..=4).prop_map(|(e, n)| e.power(n)),
            (inner.clone(), inner.clone()).prop_map(|(x, g)| x.conjugate(g)),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| x.commutator(y)),
            prop::collection::vec(inner, 0..4).prop_map(WordExpr::product),
        ]
    })
}

fn arb_word() -> impl Strategy<Value = Word> {
    prop::collection::vec((arb_genname(), prop::bool::ANY), 0..32).prop_map(|letters| {
        Word::from_letters(
            letters.into_iter().map(|(g, s)| (g, if s { 1 } else { -1 })).collect(),
        )
    })
}

fn reduce_right_to_left(w: &Word) -> Word {
    let mut stack: Vec<(GenName, i8)> = Vec::new();
    for (g, e) in w.letters().iter().rev() {
        match stack.last() {
            Some((tg, te)) if tg == g && *te == -e => {
                stack.pop();
            }
            _ => stack.push((g.clone(), *e)),
        }
    }
    stack.reverse();
    Word::from_letters(stack)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    // parse . format . parse = parse, at the flattened-word level
    #[test]
    fn format_parse_round_trip(e in arb_expr()) {
        let word = e.flatten();
        let reparsed = parse(&word.to_string()).expect("formatted words parse");
        prop_assert_eq!(reparsed.flatten(), word);
    }

    #[test]
    fn display_of_expression_reparses_to_same_word(e in arb_expr()) {
        let reparsed = parse(&e.to_string()).expect("displayed expressions parse");
        prop_assert_eq!(reparsed.flatten(), e.flatten());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    // free reduction is confluent: scans from either end agree
    #[test]
    fn free_reduce_is_confluent(w in arb_word()) {
        let left = free_reduce(w.clone());
        let right = reduce_right_to_left(&w);
        prop_assert_eq!(left.clone(), right);
        // and idempotent
        prop_assert_eq!(free_reduce(left.clone()), left);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    // expansion of conjugation commutes with evaluation
    #[test]
    fn conjugation_evaluates_as_expanded(x in arb_swap(), g in prop::collection::vec(arb_swap(), 0..5)) {
        let set = genset_swaps();
        let conjugator = WordExpr::product(g.iter().cloned().map(WordExpr::swap).collect());
        let expr = WordExpr::swap(x.clone()).conjugate(conjugator.clone());
        let lhs = set.eval(&expr).unwrap();
        let ge = set.eval(&conjugator).unwrap();
        let xe = set.eval(&WordExpr::swap(x)).unwrap();
        prop_assert_eq!(lhs, ge.inverse().compose(&xe).compose(&ge));
    }

    // evaluation is a homomorphism on random splits of random swap words
    #[test]
    fn eval_splits_multiplicatively(
        swaps in prop::collection::vec(arb_swap(), 0..10),
        cut in 0usize..10,
    ) {
        let cut = cut.min(swaps.len());
        let set = genset_swaps();
        let to_word = |part: &[SwapPair]| {
            WordExpr::product(part.iter().cloned().map(WordExpr::swap).collect())
        };
        let whole = set.eval(&to_word(&swaps)).unwrap();
        let left = set.eval(&to_word(&swaps[..cut])).unwrap();
        let right = set.eval(&to_word(&swaps[cut..])).unwrap();
        prop_assert_eq!(whole, left.compose(&right));
    }

    // inverse reverses products
    #[test]
    fn inverse_of_product_reverses(swaps in prop::collection::vec(arb_swap(), 0..8)) {
        let f = swaps.iter().fold(VElement::identity(), |acc, p| {
            acc.compose(&VElement::from_swap_pair(p))
        });
        let g = swaps.iter().rev().fold(VElement::identity(), |acc, p| {
            acc.compose(&VElement::from_swap_pair(p))
        });
        prop_assert_eq!(f.inverse(), g);
        prop_assert!(f.compose(&f.inverse()).is_identity());
    }

    // dump round-trips through the parser for arbitrary elements
    #[test]
    fn dump_round_trips(swaps in prop::collection::vec(arb_swap(), 0..6)) {
        let e = swaps.iter().fold(VElement::identity(), |acc, p| {
            acc.compose(&VElement::from_swap_pair(p))
        });
        let back = VElement::from_dump(&e.dump()).unwrap();
        prop_assert_eq!(back, e);
    }
}

#[test]
fn decompose_handles_deep_targets() {
    let mut rng = Rng::new(0x5eed_0042);
    let mut checked = 0;
    while checked < 40 {
        let a = oracle::random_address(&mut rng, 5, 8);
        let b = oracle::random_address(&mut rng, 5, 8);
        let Ok(pair) = SwapPair::new(a.clone(), b.clone()) else {
            continue;
        };
        let word = cantor_swaps::algorithms::decompose_swap(&a, &b).unwrap();
        assert_eq!(
            genset_swaps().eval_word(&word).unwrap(),
            VElement::from_swap_pair(&pair),
            "<{a} {b}>"
        );
        checked += 1;
    }
}
