use std::collections::BTreeSet;

use infnat::card::{card_add, card_div, card_mul, card_sub};
use infnat::digits::{from_digits, to_digits, DigitForm, Support};
use infnat::element::{self, pred, succ};
use infnat::limits::{eval_limit, prefix_table, IndexDomain, LimitResult, SeqFamily};
use infnat::order::{cardinal_compare, distance, structural_compare, z_project, Comparison, Distance};
use infnat::{CardValue, Error, MNumber, Value};
use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

fn any_mnumber() -> impl Strategy<Value = MNumber> {
    prop_oneof![
        any::<u64>().prop_map(MNumber::fin),
        (1u64..=50, -1_000_000i64..=1_000_000).prop_map(|(i, k)| MNumber::lmk(i, k)),
        (-1_000_000i64..=1_000_000).prop_map(MNumber::w),
    ]
}

fn any_infinite() -> impl Strategy<Value = MNumber> {
    any_mnumber().prop_filter("infinite", |x| x.is_infinite())
}

fn any_card() -> impl Strategy<Value = CardValue> {
    prop_oneof![
        (0u32..=100).prop_map(CardValue::fin),
        Just(CardValue::K),
        Just(CardValue::Kappa),
    ]
}

proptest! {
    #[test]
    fn name_round_trip(x in any_mnumber()) {
        prop_assert_eq!(MNumber::parse_name(&x.canonical_name()).unwrap(), x);
    }

    #[test]
    fn succ_pred_inverse(x in any_mnumber()) {
        prop_assert_eq!(pred(&succ(&x)).unwrap(), x.clone());
        if x != MNumber::zero() {
            prop_assert_eq!(succ(&pred(&x).unwrap()), x);
        }
    }

    #[test]
    fn successor_is_never_zero(x in any_mnumber()) {
        prop_assert_ne!(succ(&x), MNumber::zero());
    }

    #[test]
    fn successor_is_injective(x in any_mnumber(), y in any_mnumber()) {
        prop_assert_eq!(succ(&x) == succ(&y), x == y);
    }

    #[test]
    fn digit_round_trip(n in any::<u128>(), k in 0u64..=u64::MAX) {
        let x = MNumber::fin(n);
        prop_assert_eq!(from_digits(&to_digits(&x).unwrap()), x);
        let w = MNumber::W(-BigInt::from(k));
        prop_assert_eq!(from_digits(&to_digits(&w).unwrap()), w);
    }

    #[test]
    fn digit_forms_decode(ones in proptest::collection::btree_set(1u64..200, 0..20)) {
        let d = DigitForm::finite(ones.iter().copied()).unwrap();
        prop_assert_eq!(to_digits(&from_digits(&d)).unwrap(), d);
        let d = DigitForm::co_finite(ones).unwrap();
        prop_assert_eq!(to_digits(&from_digits(&d)).unwrap(), d);
    }

    #[test]
    fn structural_order_is_antisymmetric(x in any_mnumber(), y in any_mnumber()) {
        let xy = structural_compare(&x, &y);
        let yx = structural_compare(&y, &x);
        prop_assert_ne!(xy, Comparison::EquivalentNotEqual);
        match xy {
            Comparison::Less => prop_assert_eq!(yx, Comparison::Greater),
            Comparison::Greater => prop_assert_eq!(yx, Comparison::Less),
            _ => { prop_assert_eq!(yx, Comparison::Equal); prop_assert_eq!(&x, &y); }
        }
    }

    #[test]
    fn structural_order_is_transitive(x in any_mnumber(), y in any_mnumber(), z in any_mnumber()) {
        if x < y && y < z {
            prop_assert_eq!(structural_compare(&x, &z), Comparison::Less);
        }
    }

    #[test]
    fn successor_is_strictly_monotone(x in any_mnumber()) {
        prop_assert_eq!(structural_compare(&x, &succ(&x)), Comparison::Less);
    }

    #[test]
    fn cardinal_compare_strata(x in any_mnumber(), y in any_mnumber()) {
        let c = cardinal_compare(&x, &y);
        if x.is_finite() || y.is_finite() {
            prop_assert_ne!(c, Comparison::EquivalentNotEqual);
            prop_assert_eq!(c, structural_compare(&x, &y));
        } else {
            prop_assert!(matches!(c, Comparison::Equal | Comparison::EquivalentNotEqual));
            prop_assert_eq!(c == Comparison::Equal, x == y);
        }
    }

    #[test]
    fn distance_counts_successor_steps(x in any_mnumber(), steps in 0u64..500) {
        let mut y = x.clone();
        for _ in 0..steps {
            y = succ(&y);
        }
        prop_assert_eq!(distance(&x, &y), Distance::FiniteDist(BigUint::from(steps)));
    }

    #[test]
    fn distance_triangle(
        i in 1u64..5,
        a in -1000i64..1000,
        b in -1000i64..1000,
        c in -1000i64..1000,
    ) {
        let (x, y, z) = (MNumber::lmk(i, a), MNumber::lmk(i, b), MNumber::lmk(i, c));
        let (Distance::FiniteDist(xy), Distance::FiniteDist(xz), Distance::FiniteDist(zy)) =
            (distance(&x, &y), distance(&x, &z), distance(&z, &y)) else {
            panic!("same class is finite distance");
        };
        prop_assert!(xy <= xz + zy);
    }

    #[test]
    fn different_blocks_are_infinitely_far(x in any_infinite(), y in any_mnumber()) {
        let same_block = match (&x, &y) {
            (MNumber::W(_), MNumber::W(_)) => true,
            (MNumber::Lmk { index: a, .. }, MNumber::Lmk { index: b, .. }) => a == b,
            _ => false,
        };
        prop_assert_eq!(distance(&x, &y) == Distance::InfiniteDist, !same_block);
    }

    #[test]
    fn projection_commutes_with_successor(i in 1u64..100, k in any::<i64>()) {
        let x = MNumber::lmk(i, k);
        prop_assert_eq!(z_project(i, &succ(&x)).unwrap(), z_project(i, &x).unwrap() + 1);
    }

    #[test]
    fn card_add_mul_commute(a in any_card(), b in any_card()) {
        prop_assert_eq!(card_add(&a, &b), card_add(&b, &a));
        prop_assert_eq!(card_mul(&a, &b), card_mul(&b, &a));
    }

    #[test]
    fn finite_card_add_matches_machine_integers(a in any::<u64>(), b in any::<u64>()) {
        let got = card_add(&CardValue::fin(a), &CardValue::fin(b));
        let want = (a as u128) + (b as u128);
        prop_assert_eq!(got, CardValue::fin(want));
    }

    #[test]
    fn escalation_agrees_with_cardinal_table(x in any_mnumber(), y in any_mnumber()) {
        let (cx, cy) = (x.card_image(), y.card_image());
        if let Value::Card(c) = element::add(&x, &y) {
            prop_assert_eq!(c, card_add(&cx, &cy));
        }
        if let Value::Card(c) = element::mul(&x, &y) {
            prop_assert_eq!(c, card_mul(&cx, &cy));
        }
        if let Ok(Value::Card(c)) = element::sub(&x, &y) {
            prop_assert_eq!(Ok(c), card_sub(&cx, &cy));
        }
        if let Ok(Value::Card(c)) = element::div(&x, &y) {
            prop_assert_eq!(Ok(c), card_div(&cx, &cy));
        }
    }

    #[test]
    fn limit_exceeds_every_finite(j in any::<u128>()) {
        let Ok(LimitResult::Value(lim)) = eval_limit(&SeqFamily::Pow2, IndexDomain::L) else {
            panic!("pow2 has a limit over L");
        };
        prop_assert_eq!(cardinal_compare(&MNumber::fin(j), &lim), Comparison::Less);
    }
}

#[test]
fn element_add_cross_checked_over_a_thousand_pairs() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1000);
    for _ in 0..1_000 {
        let (a, b): (u64, u64) = (rng.gen(), rng.gen());
        let got = card_add(&CardValue::fin(a), &CardValue::fin(b));
        assert_eq!(got, CardValue::fin(a as u128 + b as u128));
    }
}

/// Operands of the case-split oracle: `κ` is replaced by `K` and by each of `0..=20`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Known {
    K,
    N(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Outcome {
    K,
    Kappa,
    N(u64),
}

/// The operation table restricted to `K` and finite operands, one rule per theorem.
fn base(op: char, a: Known, b: Known) -> Option<Outcome> {
    use Known as Kn;
    match (op, a, b) {
        ('+', Kn::N(x), Kn::N(y)) => Some(Outcome::N(x + y)),
        ('+', _, _) => Some(Outcome::K),
        ('-', Kn::N(x), Kn::N(y)) => x.checked_sub(y).map(Outcome::N),
        ('-', Kn::N(_), Kn::K) => None,
        ('-', Kn::K, Kn::N(_)) => Some(Outcome::K),
        ('-', Kn::K, Kn::K) => Some(Outcome::Kappa),
        ('*', Kn::N(x), Kn::N(y)) => Some(Outcome::N(x * y)),
        ('*', Kn::N(0), Kn::K) | ('*', Kn::K, Kn::N(0)) => Some(Outcome::N(0)),
        ('*', _, _) => Some(Outcome::K),
        ('/', _, Kn::N(0)) => None,
        ('/', Kn::N(x), Kn::N(y)) => Some(Outcome::N(x / y)),
        ('/', Kn::N(_), Kn::K) => None,
        ('/', Kn::K, Kn::N(_)) => Some(Outcome::K),
        ('/', Kn::K, Kn::K) => Some(Outcome::Kappa),
        _ => unreachable!(),
    }
}

fn instantiations(c: &CardValue) -> Vec<Known> {
    match c {
        CardValue::Fin(n) => vec![Known::N(u64::try_from(n).unwrap())],
        CardValue::K => vec![Known::K],
        CardValue::Kappa => std::iter::once(Known::K).chain((0..=20).map(Known::N)).collect(),
    }
}

/// Joins the results of every instantiation of the `κ` operands.
///
/// Defined only if the all-`K` instantiation is defined and at least one
/// all-finite instantiation is defined; instantiations that fail elsewhere
/// are dropped.
fn case_split(op: char, a: &CardValue, b: &CardValue) -> Option<CardValue> {
    let as_k = |c: &CardValue| if *c == CardValue::Kappa { Known::K } else { instantiations(c)[0] };
    base(op, as_k(a), as_k(b))?;
    let finite_only = |c: &CardValue| -> Vec<Known> {
        instantiations(c).into_iter().filter(|k| *k != Known::K || *c == CardValue::K).collect()
    };
    let some_finite_defined = finite_only(a)
        .iter()
        .any(|&x| finite_only(b).iter().any(|&y| base(op, x, y).is_some()));
    if !some_finite_defined {
        return None;
    }
    let mut results = BTreeSet::new();
    for x in instantiations(a) {
        for y in instantiations(b) {
            if let Some(r) = base(op, x, y) {
                results.insert(r);
            }
        }
    }
    let all_k = results.iter().all(|r| *r == Outcome::K);
    Some(match results.iter().collect::<Vec<_>>().as_slice() {
        _ if all_k => CardValue::K,
        [Outcome::N(v)] => CardValue::fin(*v),
        _ => CardValue::Kappa,
    })
}

fn implemented(op: char, a: &CardValue, b: &CardValue) -> Option<CardValue> {
    match op {
        '+' => Some(card_add(a, b)),
        '-' => card_sub(a, b).ok(),
        '*' => Some(card_mul(a, b)),
        '/' => card_div(a, b).ok(),
        _ => unreachable!(),
    }
}

#[test]
fn kappa_results_match_the_case_split() {
    let mut operands: Vec<CardValue> = (0u32..=20).map(CardValue::fin).collect();
    operands.extend([CardValue::K, CardValue::Kappa]);
    for op in ['+', '-', '*', '/'] {
        for a in &operands {
            for b in &operands {
                if *a != CardValue::Kappa && *b != CardValue::Kappa {
                    continue;
                }
                let want = case_split(op, a, b);
                let got = implemented(op, a, b);
                let k_times_kappa = op == '*'
                    && matches!((a, b), (CardValue::K, CardValue::Kappa) | (CardValue::Kappa, CardValue::K));
                if k_times_kappa {
                    // K × κ = K is kept as stated; the κ = 0 case alone would give 0.
                    assert_eq!(want, Some(CardValue::Kappa));
                    assert_eq!(got, Some(CardValue::K));
                } else {
                    assert_eq!(got, want, "{a} {op} {b}");
                }
            }
        }
    }
}

#[test]
fn undefined_cases_raise_declared_errors() {
    use CardValue::{Kappa, K};
    let three = CardValue::fin(3u32);
    let zero = CardValue::fin(0u32);
    assert!(matches!(card_sub(&three, &K), Err(Error::UndefinedDifference { .. })));
    assert!(matches!(card_sub(&Kappa, &K), Err(Error::UndefinedDifference { .. })));
    assert!(matches!(card_div(&Kappa, &zero), Err(Error::DivisionByZero { .. })));
    assert!(matches!(card_div(&Kappa, &K), Err(Error::UndefinedQuotient { .. })));
    assert!(matches!(card_div(&zero, &Kappa), Err(Error::UndefinedQuotient { .. })));
}

#[test]
fn ones_run_digits_stabilise_to_all_ones() {
    let terms = prefix_table(&SeqFamily::OnesRun, 10_000).unwrap();
    let limit = to_digits(&MNumber::w(0)).unwrap();
    for (k, term) in terms.iter().enumerate() {
        let n = k as u64 + 1;
        let d = to_digits(term).unwrap();
        // n distinct positions between 1 and n: exactly {1..n}.
        assert_eq!(d.kind(), Support::Finite);
        assert_eq!(d.positions().len() as u64, n, "term {n}");
        assert_eq!(d.positions().first(), Some(&1));
        assert_eq!(d.positions().last(), Some(&n));
        // Every digit position up to n already agrees with the limit pattern.
        if n.is_multiple_of(997) {
            assert!((1..=n).all(|i| d.digit(i) == limit.digit(i)));
            assert!(!d.digit(n + 1));
        }
    }
}

#[test]
fn shifted_limits_match_iterated_successor() {
    let LimitResult::Value(w) = eval_limit(&SeqFamily::OnesRun, IndexDomain::L).unwrap() else {
        panic!();
    };
    let mut expected = w;
    for c in 0u32..50 {
        let got = eval_limit(&SeqFamily::OnesRun.shifted(c), IndexDomain::L).unwrap();
        assert_eq!(got, LimitResult::Value(expected.clone()));
        expected = succ(&expected);
    }
}
