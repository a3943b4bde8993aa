mod common;

use std::collections::BTreeMap;

use common::{q, solve_unique};
use tl_seminormal::arith::Rational;
use tl_seminormal::combin::{all_tableaux, dominance_compare, p_class, Dominance, StdTableau};
use tl_seminormal::tlcore::{enumerate_matchings, CellVector, PlanarMatching, Ring, TLElement};
use tl_seminormal::wenzl::*;

fn tab(s: &str) -> StdTableau {
    StdTableau::parse(s).unwrap()
}

/// JW_n from scratch: the unique element with unit coefficient 1 killed by
/// every generator on the left, found by solving the linear system on the
/// diagram basis.
fn jw_by_linear_solve(n: usize) -> TLElement {
    let id = PlanarMatching::identity(n);
    let basis: Vec<PlanarMatching> = enumerate_matchings(n, n).into_iter().filter(|d| *d != id).collect();
    let index: BTreeMap<PlanarMatching, usize> =
        enumerate_matchings(n, n).into_iter().enumerate().map(|(i, d)| (d, i)).collect();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for i in 1..n {
        let g = PlanarMatching::generator(i, n).unwrap();
        let mut eqs = vec![vec![Rational::zero(); basis.len()]; index.len()];
        let mut consts = vec![Rational::zero(); index.len()];
        let (gd, loops) = PlanarMatching::compose(&g, &id).unwrap();
        consts[index[&gd]] -= Rational::one().mul_pow2(loops);
        for (k, d) in basis.iter().enumerate() {
            let (e, loops) = PlanarMatching::compose(&g, d).unwrap();
            eqs[index[&e]][k] += Rational::one().mul_pow2(loops);
        }
        rows.extend(eqs);
        rhs.extend(consts);
    }
    let sol = solve_unique(rows, rhs, basis.len()).expect("unique projector");
    TLElement::from_terms(n, Ring::Q, basis.into_iter().zip(sol).chain([(id, Rational::one())])).unwrap()
}

#[test]
fn jw_agrees_with_linear_solve() {
    let cache = JwCache::new();
    for n in 2..=5 {
        assert_eq!(*jones_wenzl(n, &cache), jw_by_linear_solve(n), "n = {n}");
    }
}

#[test]
fn jw_small_expansions() {
    let cache = JwCache::new();
    assert_eq!(jones_wenzl(1, &cache).to_string(), "1");
    assert_eq!(jones_wenzl(2, &cache).to_string(), "1 - 1/2 u1");
    assert_eq!(jones_wenzl(3, &cache).to_string(), "1 - 2/3 u1 - 2/3 u2 + 1/3 u1u2 + 1/3 u2u1");
}

#[test]
fn clasp_and_sandwich_recursions_agree() {
    let cache = JwCache::new();
    for n in 0..=7 {
        assert_eq!(*jones_wenzl(n, &cache), jones_wenzl_sandwich(n), "n = {n}");
    }
}

#[test]
fn partial_closure_scalars() {
    let cache = JwCache::new();
    assert_eq!(partial_close(3, 2).unwrap(), q(2, 1));
    assert_eq!(partial_close(4, 3).unwrap(), q(5, 2));
    assert!(partial_close(3, 3).is_err());
    for n in 2..=6 {
        for k in 1..n {
            let closed = close_right(&jones_wenzl(n, &cache), k).unwrap();
            let expect = jones_wenzl(n - k, &cache).scale(&partial_close(n, k).unwrap());
            assert_eq!(closed, expect, "n = {n}, k = {k}");
        }
    }
}

#[test]
fn gamma_examples() {
    assert_eq!(gamma(&StdTableau::one_column(5)), Rational::one());
    assert_eq!(gamma(&tab("1,1,2")), q(3, 2));
    assert_eq!(gamma(&tab("1,1,2,1,1")), q(3, 2));
}

#[test]
fn seminormal_vector_examples() {
    let cache = JwCache::new();
    let f = seminormal_vector(&tab("1,1,2"), &cache);
    let mut expect = CellVector::basis(&tab("1,1,2"));
    expect.add_term(tab("1,2,1"), q(-1, 2));
    assert_eq!(f, expect);
    let f = seminormal_vector(&StdTableau::one_column(4), &cache);
    assert_eq!(f, CellVector::basis(&StdTableau::one_column(4)));
}

#[test]
fn seminormal_vector_is_unitriangular() {
    let cache = JwCache::new();
    for n in 1..=6 {
        for t in all_tableaux(n) {
            let f = seminormal_vector(&t, &cache);
            assert!(f.coeff(&t).is_one(), "{t}");
            for u in f.coords.keys() {
                let d = dominance_compare(u, &t).unwrap();
                assert!(matches!(d, Dominance::Equal | Dominance::Greater), "{u} in support of f_{t}");
            }
        }
    }
}

#[test]
fn seminormal_idempotent_examples() {
    let cache = JwCache::new();
    let e = seminormal_idempotent(&tab("1,1,2"), &cache);
    assert_eq!(e.to_string(), "1/6 u1 + 2/3 u2 - 1/3 u1u2 - 1/3 u2u1");
    for n in 1..=6 {
        assert_eq!(seminormal_idempotent(&StdTableau::one_column(n), &cache), *jones_wenzl(n, &cache));
    }
    let e3 = seminormal_idempotent(&StdTableau::one_column(3), &cache);
    assert!(e3.mul(&e).unwrap().is_zero());
}

#[test]
fn f_tt_matches_direct_product() {
    let cache = JwCache::new();
    for n in 1..=5 {
        for t in all_tableaux(n) {
            let f = seminormal_morphism(&t, &cache);
            let direct = tl_seminormal::tlcore::Tangle::compose(&f.star(), &f, Default::default())
                .unwrap()
                .into_element()
                .unwrap();
            assert_eq!(f_tt(&t, &cache), direct, "{t}");
        }
    }
}

#[test]
fn product_formula_examples() {
    assert_eq!(idempotent_by_products(&tab("1,2")).unwrap().to_string(), "1/2 u1");
    assert_eq!(idempotent_by_products(&tab("1,1")).unwrap().to_string(), "1 - 1/2 u1");
    assert_eq!(idempotent_by_products(&tab("1")).unwrap().to_string(), "1");
}

#[test]
fn product_formula_matches_construction() {
    let cache = JwCache::new();
    for n in 1..=5 {
        for t in all_tableaux(n) {
            assert_eq!(idempotent_by_products(&t).unwrap(), seminormal_idempotent(&t, &cache), "{t}");
        }
    }
}

#[test]
fn class_and_pjw_examples() {
    let cache = JwCache::new();
    let t3 = StdTableau::one_column(3);
    let cls = p_class(&t3, 3).unwrap();
    assert_eq!(class_idempotent(&cls, 3, &cache).unwrap().to_string(), "1 - 1/2 u1");
    let pjw = p_jones_wenzl_direct(3, 3, &cache).unwrap();
    assert_eq!(pjw.to_string(), "1 - 1/2 u1");
    let red = pjw.to_ring(Ring::Fp(3)).unwrap();
    assert_eq!(red.to_string(), "1 + u1");
    assert_eq!(red.mul(&red).unwrap(), red);
    // p > n + 1: the index set is {n} and pJW_n = JW_n.
    assert_eq!(p_jones_wenzl_direct(4, 7, &cache).unwrap(), *jones_wenzl(4, &cache));
    assert!(class_idempotent(&[t3], 3, &cache).is_err());
}

#[test]
fn index_tableaux_at_twelve() {
    let ts = index_tableaux(12, 3).unwrap();
    let ms: Vec<usize> = tl_seminormal::combin::index_set_in(12, 3).unwrap().iter().map(|e| e.m).collect();
    assert_eq!(ms, vec![12, 10, 6, 4]);
    assert_eq!(ts[0], StdTableau::one_column(12));
}

#[test]
fn disk_cache_round_trip() {
    let path = std::env::temp_dir().join(format!("jw-cache-{}.json", std::process::id()));
    let _ = std::fs::remove_file(&path);
    let cache = JwCache::open(&path).unwrap();
    let x = jones_wenzl(4, &cache);
    cache.save().unwrap();
    let reopened = JwCache::open(&path).unwrap();
    assert_eq!(reopened.cached_sizes(), vec![1, 2, 3, 4]);
    assert_eq!(*reopened.get(4).unwrap(), *x);
    std::fs::remove_file(&path).unwrap();
}
