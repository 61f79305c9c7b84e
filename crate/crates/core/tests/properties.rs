use num_bigint::BigUint;
use proptest::prelude::*;
use resemblance::incompressible::{complete_index_set, IndexedSet};
use resemblance::oracle::{check_axioms, extract_pattern};
use resemblance::rho::{certify_covering, check_embedding, Certification, ClosedSet, CoveringMap};
use resemblance::sample::Sampler;
use resemblance::{
    build_from_index_set, incompressible_cover, verify_incompressible, Budget, Calculus, Error,
    ExtOrdinal, Ordinal, Rho, Verdict, Verification,
};

/// Ordinals below `ε₁` with exponents nested `depth` levels deep, with `e0`
/// allowed as an atom.
fn ordinal(depth: u32) -> BoxedStrategy<Ordinal> {
    let exponent = if depth == 0 {
        prop_oneof![4 => (0u64..5).prop_map(Ordinal::nat), 1 => Just(Ordinal::epsilon(0))].boxed()
    } else {
        ordinal(depth - 1)
    };
    prop::collection::vec((exponent, 1u64..5), 0..4)
        .prop_map(|mut pairs| {
            pairs.sort_by(|a, b| b.0.cmp(&a.0));
            pairs.dedup_by(|a, b| a.0 == b.0);
            Ordinal::from_terms(
                pairs
                    .into_iter()
                    .map(|(e, c)| (e, BigUint::from(c)))
                    .collect(),
            )
            .unwrap()
        })
        .boxed()
}

fn small() -> BoxedStrategy<Ordinal> {
    ordinal(1)
}

/// Ordinals below `ω^ω`.
fn below_omega_omega() -> impl Strategy<Value = Ordinal> {
    prop::collection::vec((0u64..5, 1u64..5), 0..4).prop_map(|mut pairs| {
        pairs.sort_by_key(|&(e, _)| std::cmp::Reverse(e));
        pairs.dedup_by(|a, b| a.0 == b.0);
        Ordinal::from_terms(
            pairs
                .into_iter()
                .map(|(e, c)| (Ordinal::nat(e), BigUint::from(c)))
                .collect(),
        )
        .unwrap()
    })
}

fn rho() -> impl Strategy<Value = Rho> {
    prop_oneof![Just("1"), Just("w"), Just("w^2"), Just("w^w")]
        .prop_map(|s| Rho::new(Ordinal::parse(s).unwrap()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn parse_format_round_trip(a in ordinal(2)) {
        prop_assert_eq!(Ordinal::parse(&a.to_string()).unwrap(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn addition_is_associative(a in small(), b in small(), c in small()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
    }

    #[test]
    fn multiplication_is_associative(a in small(), b in small(), c in small()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn identities(a in ordinal(2)) {
        prop_assert_eq!(a.add(&Ordinal::zero()), a.clone());
        prop_assert_eq!(Ordinal::zero().add(&a), a.clone());
        prop_assert_eq!(a.mul(&Ordinal::one()), a.clone());
        prop_assert_eq!(Ordinal::one().mul(&a), a.clone());
        prop_assert!(a.mul(&Ordinal::zero()).is_zero());
    }

    #[test]
    fn left_distributive(a in small(), b in small(), c in small()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn addition_is_monotone(a in small(), b in small(), c in small()) {
        let (lo, hi) = if b <= c { (b, c) } else { (c, b) };
        if lo < hi {
            prop_assert!(a.add(&lo) < a.add(&hi));
        }
        prop_assert!(lo.add(&a) <= hi.add(&a));
        prop_assert!(a <= a.add(&lo) && lo <= a.add(&lo));
    }

    #[test]
    fn left_subtraction_reassembles(a in small(), b in small()) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let d = lo.left_sub(&hi).unwrap();
        prop_assert_eq!(lo.add(&d), hi.clone());
        if lo < hi {
            prop_assert!(hi.left_sub(&lo).is_none());
        }
    }

    #[test]
    fn splits_reassemble(a in ordinal(2), r in rho()) {
        let (lam, n) = a.split_finite();
        prop_assert_eq!(lam.add(&Ordinal::from_big(n)), a.clone());
        prop_assert!(lam.is_zero() || lam.is_limit());
        let (base, e) = r.split(&a);
        prop_assert_eq!(base.add(&e), a.clone());
        prop_assert!(e < *r.value());
        prop_assert_eq!(r.rem(&a), e);
        prop_assert!(r.divides(&base));
        prop_assert_eq!(r.times(&r.quotient(&a)), base);
    }

    #[test]
    fn omega_powers(a in small()) {
        let w = Ordinal::omega_pow(&a);
        prop_assert!(w.is_indecomposable());
        prop_assert!(w >= a);
        prop_assert_eq!(w == a, a.is_epsilon());
        prop_assert_eq!(w.add(&w), w.mul_nat(2));
    }
}

#[test]
fn epsilon_is_a_fixed_point() {
    let e0 = Ordinal::epsilon(0);
    assert_eq!(Ordinal::omega_pow(&e0), e0);
    assert_eq!(Ordinal::omega_pow(&e0.succ()), e0.mul(&Ordinal::omega()));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn closure_is_idempotent_and_monotone(
        xs in prop::collection::vec(below_omega_omega(), 0..6),
        ys in prop::collection::vec(below_omega_omega(), 0..4),
        r in rho(),
    ) {
        let cx = ClosedSet::closure(xs.clone(), &r);
        prop_assert_eq!(ClosedSet::closure(cx.members().to_vec(), &r), cx.clone());
        prop_assert!(xs.iter().all(|x| cx.contains(x)));
        let cxy = ClosedSet::closure(xs.iter().chain(&ys).cloned(), &r);
        prop_assert!(cx.members().iter().all(|m| cxy.contains(m)));
        prop_assert_eq!(cx.union(&ClosedSet::closure(ys, &r)), cxy);
    }

    #[test]
    fn identity_is_a_covering(xs in prop::collection::vec(below_omega_omega(), 1..6), r in rho()) {
        let calc = Calculus::new(r.clone());
        let x = ClosedSet::closure(xs, &r);
        let e = check_embedding(x.members(), x.members(), &r).unwrap().unwrap();
        let refuted = matches!(certify_covering(&e, &calc), Certification::NotCovering { .. });
        prop_assert!(!refuted);
    }

    #[test]
    fn translations_by_multiples_are_embeddings(
        xs in prop::collection::vec(below_omega_omega(), 1..6),
        t in below_omega_omega(),
        r in rho(),
    ) {
        let x = ClosedSet::closure(xs, &r);
        let shift = r.times(&t);
        let image: Vec<Ordinal> = x.members().iter().map(|m| shift.add(m)).collect();
        prop_assert!(check_embedding(x.members(), &image, &r).unwrap().is_ok());
    }

    #[test]
    fn relations_refine_each_other(a in below_omega_omega(), b in below_omega_omega(), r in rho()) {
        let calc = Calculus::new(r);
        let le1 = calc.le1(&a, &b).verdict;
        let le2 = calc.le2(&a, &b).verdict;
        if le2 == Verdict::True {
            prop_assert_eq!(le1, Verdict::True);
        }
        if le1 == Verdict::True {
            prop_assert!(a <= b);
        }
        if let ExtOrdinal::Ord(m) = calc.max1(&a) {
            prop_assert_eq!(le1 == Verdict::True, a <= b && b <= m);
        }
    }

    #[test]
    fn patterns_satisfy_axioms(xs in prop::collection::vec(below_omega_omega(), 1..6), r in rho()) {
        let calc = Calculus::new(r.clone());
        let x = ClosedSet::closure(xs, &r);
        let v = check_axioms(&extract_pattern(&calc, x.members()));
        prop_assert!(v.is_empty(), "{:?}", v);
    }
}

fn cover(calc: &Calculus, seed: u64) -> Option<CoveringMap> {
    let mut s = Sampler::new(seed);
    match incompressible_cover(calc, &s.clustered_set(calc.rho(), 5)) {
        Ok(h) => Some(h),
        Err(Error::Undetermined(_)) => None,
        Err(e) => panic!("seed {seed}: {e}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn unions_of_incompressible_sets(s1 in any::<u64>(), s2 in any::<u64>(), r in rho()) {
        let calc = Calculus::new(r);
        let (Some(a), Some(b)) = (cover(&calc, s1), cover(&calc, s2)) else { return Ok(()) };
        let budget = Budget::default();
        let (a, b) = (a.image_set(), b.image_set());
        prop_assert_eq!(verify_incompressible(&calc, &a, &budget).verdict, Verification::Confirmed);
        prop_assert_eq!(verify_incompressible(&calc, &b, &budget).verdict, Verification::Confirmed);
        let u = a.union(&b);
        let v = verify_incompressible(&calc, &u, &budget).verdict;
        prop_assert!(!matches!(v, Verification::Counterexample(_)), "{} gives {:?}", u, v);
    }

    #[test]
    fn incompressible_sets_contain_component_maxima(seed in any::<u64>(), r in rho()) {
        let calc = Calculus::new(r);
        let Some(h) = cover(&calc, seed) else { return Ok(()) };
        let x = h.image_set();
        let indexed = IndexedSet::new(&calc, x.clone()).unwrap();
        for a in indexed.index_set() {
            if let ExtOrdinal::Ord(m) = calc.max1_kappa(&a) {
                prop_assert!(x.contains(&m), "{} meets I_{} but lacks {}", x, a, m);
            }
        }
    }

    #[test]
    fn covers_agree_on_indices(seed in any::<u64>(), r in rho()) {
        let calc = Calculus::new(r.clone());
        let Some(h) = cover(&calc, seed) else { return Ok(()) };
        let again = cover(&Calculus::new(r), seed).unwrap();
        let idx = |m: &CoveringMap| IndexedSet::new(&calc, m.image_set()).unwrap().indices;
        prop_assert_eq!(idx(&h), idx(&again));
    }

    #[test]
    fn built_sets_realise_their_index_set(ks in prop::collection::vec(below_omega_omega(), 1..4), r in rho()) {
        let calc = Calculus::new(r.clone());
        let ks: Vec<Ordinal> = ks.into_iter().filter(|k| !k.is_zero()).collect();
        let k = match complete_index_set(&ks, &r) {
            Ok(k) => k,
            Err(_) => return Ok(()),
        };
        match build_from_index_set(&calc, &k) {
            Ok(built) => prop_assert_eq!(built.index_set(), k),
            Err(Error::Undetermined(_)) => {}
            Err(e) => prop_assert!(false, "{:?}: {}", k, e),
        }
    }
}
