use proptest::prelude::*;
use tl_seminormal::arith::{reduce_mod_p, Rational};
use tl_seminormal::combin::{all_tableaux, block_decomposition, StdTableau};
use tl_seminormal::klr::{left_operator_of, operator_to_element, right_operator_of, FVector};
use tl_seminormal::par::Exec;
use tl_seminormal::tlcore::{enumerate_matchings, CellRep, PlanarMatching, Ring, TLElement};
use tl_seminormal::wenzl::JwCache;

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..30).prop_map(|(a, b)| Rational::new(a, b))
}

/// Rationals whose denominators avoid 3 and 5.
fn integral_rational() -> impl Strategy<Value = Rational> {
    (-60i64..60, prop::sample::select(vec![1i64, 2, 4, 7, 8, 11, 14])).prop_map(|(a, b)| Rational::new(a, b))
}

fn matching(n: usize) -> impl Strategy<Value = PlanarMatching> {
    prop::sample::select(enumerate_matchings(n, n))
}

fn element(n: usize) -> impl Strategy<Value = TLElement> {
    prop::collection::vec((matching(n), -3i64..4, 1i64..3), 1..5).prop_map(move |terms| {
        TLElement::from_terms(n, Ring::Q, terms.into_iter().map(|(d, a, b)| (d, Rational::new(a, b)))).unwrap()
    })
}

fn sized_element(max: usize) -> impl Strategy<Value = TLElement> {
    (1..=max).prop_flat_map(element)
}

fn element_triple(max: usize) -> impl Strategy<Value = (TLElement, TLElement, TLElement)> {
    (1..=max).prop_flat_map(|n| (element(n), element(n), element(n)))
}

fn element_pair(max: usize) -> impl Strategy<Value = (TLElement, TLElement)> {
    (1..=max).prop_flat_map(|n| (element(n), element(n)))
}

fn tableau(max: usize) -> impl Strategy<Value = StdTableau> {
    (1..=max).prop_flat_map(|n| prop::sample::select(all_tableaux(n)))
}

proptest! {
    #[test]
    fn rationals_form_a_field(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
        if let Some(i) = a.inv() {
            prop_assert!((&a * &i).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
        let back: Rational = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn reduction_is_a_ring_map(a in integral_rational(), b in integral_rational(), p in prop::sample::select(vec![3u64, 5])) {
        let (ra, rb) = (reduce_mod_p(&a, p).unwrap(), reduce_mod_p(&b, p).unwrap());
        prop_assert_eq!(reduce_mod_p(&(&a + &b), p).unwrap(), ra + rb);
        prop_assert_eq!(reduce_mod_p(&(&a * &b), p).unwrap(), ra * rb);
        prop_assert_eq!(reduce_mod_p(&(-a.clone()), p).unwrap(), -ra);
    }

    #[test]
    fn blocks_rebuild_the_tableau(t in tableau(14)) {
        let b = block_decomposition(&t);
        prop_assert_eq!(b.to_tableau(), t.clone());
        prop_assert_eq!(b.d_sizes().iter().sum::<usize>() + b.m_sizes().iter().sum::<usize>(), t.n());
        prop_assert!(b.n_sizes().iter().all(|&x| x > 0));
    }

    #[test]
    fn first_residue_is_zero(t in tableau(14), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        prop_assert_eq!(t.residues(p)[0], 0);
        prop_assert_eq!(t.contents()[0], 0);
    }

    #[test]
    fn matchings_compose_associatively(
        (a, b, c) in (1usize..=6).prop_flat_map(|n| (matching(n), matching(n), matching(n)))
    ) {
        let (ab, l1) = PlanarMatching::compose(&a, &b).unwrap();
        let (abc, l2) = PlanarMatching::compose(&ab, &c).unwrap();
        let (bc, m1) = PlanarMatching::compose(&b, &c).unwrap();
        let (abc2, m2) = PlanarMatching::compose(&a, &bc).unwrap();
        prop_assert_eq!(abc, abc2);
        prop_assert_eq!(l1 + l2, m1 + m2);
        prop_assert_eq!(a.star().star(), a);
        prop_assert!(a.through_count() <= a.n());
    }

    #[test]
    fn multiplication_is_associative((x, y, z) in element_triple(5)) {
        prop_assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
        prop_assert_eq!(x.mul(&y.add(&z).unwrap()).unwrap(), x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap());
    }

    #[test]
    fn star_reverses_products((x, y) in element_pair(6)) {
        prop_assert_eq!(x.mul(&y).unwrap().star(), y.star().mul(&x.star()).unwrap());
        prop_assert_eq!(x.star().star(), x.clone());
    }

    #[test]
    fn sequential_and_parallel_products_agree((x, y) in element_pair(7)) {
        prop_assert_eq!(x.mul_with(&y, Exec::Sequential).unwrap(), x.mul_with(&y, Exec::Parallel).unwrap());
    }

    #[test]
    fn json_round_trip(x in sized_element(6)) {
        prop_assert_eq!(TLElement::from_json_str(&x.to_json_string()).unwrap(), x);
    }

    #[test]
    fn reduction_commutes_with_products((x, y) in element_pair(5)) {
        let p = 5;
        let fp = Ring::Fp(p);
        let (xp, yp) = (x.to_ring(fp).unwrap(), y.to_ring(fp).unwrap());
        prop_assert_eq!(x.mul(&y).unwrap().to_ring(fp).unwrap(), xp.mul(&yp).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cell_representation_is_multiplicative((x, y) in element_pair(6)) {
        let xy = x.mul(&y).unwrap();
        prop_assert_eq!(CellRep::of(&xy), CellRep::of(&x).mul(&CellRep::of(&y)));
        prop_assert_eq!(CellRep::of(&x.add(&y).unwrap()), CellRep::of(&x).add(&CellRep::of(&y)));
    }

    #[test]
    fn operators_respect_products((x, y) in element_pair(5)) {
        let cache = JwCache::new();
        let xy = x.mul(&y).unwrap();
        let (lx, ly) = (left_operator_of(&x, &cache).unwrap(), left_operator_of(&y, &cache).unwrap());
        prop_assert_eq!(left_operator_of(&xy, &cache).unwrap(), lx.mul(&ly));
        let (rx, ry) = (right_operator_of(&x, &cache).unwrap(), right_operator_of(&y, &cache).unwrap());
        prop_assert_eq!(right_operator_of(&xy, &cache).unwrap(), rx.mul(&ry));
    }

    #[test]
    fn left_and_right_actions_commute((x, y) in element_pair(5)) {
        let cache = JwCache::new();
        let l = left_operator_of(&x, &cache).unwrap();
        let r = right_operator_of(&y, &cache).unwrap();
        let basis = l.basis().clone();
        for (i, j) in basis.pairs() {
            let v = FVector::basis(basis.tableau(i), basis.tableau(j)).unwrap();
            prop_assert_eq!(l.apply(&r.apply(&v).unwrap()).unwrap(), r.apply(&l.apply(&v).unwrap()).unwrap());
        }
    }

    #[test]
    fn operators_return_their_element(x in sized_element(5)) {
        let cache = JwCache::new();
        prop_assert_eq!(operator_to_element(&left_operator_of(&x, &cache).unwrap(), &cache).unwrap(), x.clone());
        prop_assert_eq!(operator_to_element(&right_operator_of(&x, &cache).unwrap(), &cache).unwrap(), x);
    }
}
