mod common;

use common::q;
use tl_seminormal::combin::{all_tableaux, two_column_partitions, StdTableau, TwoColPartition};
use tl_seminormal::tlcore::*;

fn tab(s: &str) -> StdTableau {
    StdTableau::parse(s).unwrap()
}

fn u(i: usize, n: usize) -> TLElement {
    TLElement::generator(i, n).unwrap()
}

fn catalan(n: u64) -> u64 {
    (0..n).fold(1u64, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

/// Independent stacking oracle: points `0..n` are the top of `a`, `n..2n`
/// the glued middle row, `2n..3n` the bottom of `b`. Middle points have two
/// neighbours, outer points one; walk the resulting graph.
fn stack(a: &PlanarMatching, b: &PlanarMatching) -> (PlanarMatching, u32) {
    let n = a.n();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); 3 * n];
    let id = |e: End, shift: usize| match e {
        End::Top(k) => shift + k,
        End::Bottom(k) => shift + n + k,
    };
    for (m, shift) in [(a, 0), (b, n)] {
        for (x, y) in m.pairs() {
            let (x, y) = (id(x, shift), id(y, shift));
            adj[x].push(y);
            adj[y].push(x);
        }
    }
    let mut seen = vec![false; 3 * n];
    let walk = |start: usize, seen: &mut Vec<bool>| -> usize {
        let (mut prev, mut cur) = (start, adj[start][0]);
        seen[start] = true;
        loop {
            seen[cur] = true;
            if adj[cur].len() == 1 {
                return cur;
            }
            let nxt = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
            (prev, cur) = (cur, nxt);
            if cur == start {
                return start;
            }
        }
    };
    let outer = |v: usize| if v < n { End::Top(v) } else { End::Bottom(v - 2 * n) };
    let mut pairs = Vec::new();
    for s in (0..n).chain(2 * n..3 * n) {
        if !seen[s] {
            let e = walk(s, &mut seen);
            pairs.push((outer(s), outer(e)));
        }
    }
    let mut loops = 0;
    for s in n..2 * n {
        if !seen[s] {
            walk(s, &mut seen);
            loops += 1;
        }
    }
    (PlanarMatching::from_pairs(n, n, &pairs).unwrap(), loops)
}

#[test]
fn matching_products() {
    let u1 = PlanarMatching::generator(1, 2).unwrap();
    assert_eq!(PlanarMatching::compose(&u1, &u1).unwrap(), (u1, 1));
    let d = PlanarMatching::generator(2, 4).unwrap();
    assert_eq!(PlanarMatching::compose(&PlanarMatching::identity(4), &d).unwrap(), (d, 0));
    let (m, loops) =
        PlanarMatching::compose(&PlanarMatching::generator(1, 3).unwrap(), &PlanarMatching::generator(2, 3).unwrap())
            .unwrap();
    assert_eq!(loops, 0);
    let want = PlanarMatching::from_pairs(
        3,
        3,
        &[(End::Top(0), End::Top(1)), (End::Bottom(1), End::Bottom(2)), (End::Top(2), End::Bottom(0))],
    )
    .unwrap();
    assert_eq!(m, want);
    assert!(PlanarMatching::compose(&PlanarMatching::identity(2), &PlanarMatching::identity(3)).is_err());
}

#[test]
fn stacking_matches_tracer() {
    for n in 1..=5 {
        let all = enumerate_matchings(n, n);
        for a in &all {
            for b in &all {
                assert_eq!(PlanarMatching::compose(a, b).unwrap(), stack(a, b), "{a:?} {b:?}");
            }
        }
    }
}

#[test]
fn crossing_pairs_are_rejected() {
    let r = PlanarMatching::from_pairs(2, 2, &[(End::Top(0), End::Bottom(1)), (End::Top(1), End::Bottom(0))]);
    assert!(r.is_err());
}

#[test]
fn dimension_is_catalan() {
    for n in 0..=10 {
        let total: usize = two_column_partitions(n)
            .into_iter()
            .map(|l| tl_seminormal::combin::standard_tableaux(l).len().pow(2))
            .sum();
        assert_eq!(enumerate_matchings(n, n).len() as u64, catalan(n as u64), "n={n}");
        assert_eq!(total as u64, catalan(n as u64));
        assert_eq!(cellular_dimension(n) as u64, catalan(n as u64));
    }
}

#[test]
fn element_examples() {
    let u121 = u(1, 3).mul(&u(2, 3)).unwrap().mul(&u(1, 3)).unwrap();
    assert_eq!(u121, u(1, 3));
    assert_eq!(u(2, 4).star(), u(2, 4));
    let jw2 = TLElement::one(2).sub(&u(1, 2).scale(&q(1, 2))).unwrap();
    assert_eq!(jw2.mul(&jw2).unwrap(), jw2);
    assert_eq!(format_element(&jw2), "1 - 1/2 u1");
    assert!(TLElement::generator(3, 3).is_err());
    assert!(u(1, 2).add(&u(1, 3)).is_err());
}

#[test]
fn temperley_lieb_relations() {
    for n in 2..=8 {
        for i in 1..n {
            assert_eq!(u(i, n).mul(&u(i, n)).unwrap(), u(i, n).scale(&q(2, 1)));
            for j in 1..n {
                let (a, b) = (u(i, n), u(j, n));
                if i.abs_diff(j) == 1 {
                    assert_eq!(a.mul(&b).unwrap().mul(&a).unwrap(), a);
                } else if i.abs_diff(j) > 1 {
                    assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
                }
            }
        }
    }
}

#[test]
fn phi_examples() {
    let one = q(1, 1);
    assert_eq!(phi(&[(one.clone(), vec![1])], 2).unwrap(), u(1, 2).sub(&TLElement::one(2)).unwrap());
    assert_eq!(phi(&[(one.clone(), vec![])], 3).unwrap(), TLElement::one(3));
    let kernel: Vec<_> = [vec![1, 2, 1], vec![1, 2], vec![2, 1], vec![1], vec![2], vec![]]
        .into_iter()
        .map(|w| (one.clone(), w))
        .collect();
    assert!(phi(&kernel, 3).unwrap().is_zero());
    assert!(phi(&[(one, vec![3])], 3).is_err());
}

#[test]
fn jucys_murphy_elements() {
    assert!(jm_element(1, 4).unwrap().is_zero());
    assert_eq!(jm_element(2, 2).unwrap(), u(1, 2).sub(&TLElement::one(2)).unwrap());
    assert_eq!(transposition_word(1, 3), vec![1, 2, 1]);
    // The other reduced word for (1,3) gives the same image.
    let one = q(1, 1);
    assert_eq!(phi(&[(one.clone(), vec![1, 2, 1])], 3).unwrap(), phi(&[(one, vec![2, 1, 2])], 3).unwrap());
    for n in 1..=6 {
        let ls: Vec<TLElement> = (1..=n).map(|i| jm_element(i, n).unwrap()).collect();
        for a in &ls {
            assert_eq!(&a.star(), a);
            for b in &ls {
                assert_eq!(a.mul(b).unwrap(), b.mul(a).unwrap());
            }
        }
    }
}

#[test]
fn half_diagrams() {
    let h = half_diagram(&StdTableau::one_column(4));
    assert_eq!(h.through_count(), 4);
    let h = half_diagram(&tab("1,1,2"));
    assert_eq!(h.partner(End::Bottom(1)), End::Bottom(2));
    assert_eq!(h.partner(End::Bottom(0)), End::Top(0));
    let h = half_diagram(&tab("1,2,1"));
    assert_eq!(h.partner(End::Bottom(0)), End::Bottom(1));
    assert_eq!(h.partner(End::Bottom(2)), End::Top(0));
    for n in 0..=8 {
        for t in all_tableaux(n) {
            let h = half_diagram(&t);
            assert_eq!(h.top(), t.shape().through());
            assert_eq!(tableau_of_half(&h).unwrap(), t);
        }
    }
}

#[test]
fn cell_action_examples() {
    let (td, tu) = (tab("1,1,2"), tab("1,2,1"));
    let v = CellVector::basis(&td);
    let mut twice = CellVector::zero(TwoColPartition::new(2, 1).unwrap());
    twice.add_term(td.clone(), q(2, 1));
    assert_eq!(cell_action(&v, &u(2, 3)).unwrap(), twice);
    assert_eq!(cell_action(&v, &u(1, 3)).unwrap(), CellVector::basis(&tu));
    assert_eq!(cell_action(&v, &TLElement::one(3)).unwrap(), v);
    assert!(cell_action(&v, &TLElement::one(4)).is_err());
}

#[test]
fn cell_modules_are_faithful() {
    // Over Q the direct sum of cell modules separates elements.
    for n in 1..=6 {
        let ds = enumerate_matchings(n, n);
        for (k, d) in ds.iter().enumerate() {
            let other = &ds[(k + 1) % ds.len()];
            let x = TLElement::from_matching(*d).sub(&TLElement::from_matching(*other).scale(&q(1, 3))).unwrap();
            assert!(!CellRep::of(&x).is_zero(), "n={n}");
        }
        assert!(CellRep::of(&TLElement::zero(n, Ring::Q)).is_zero());
    }
}

#[test]
fn json_schema() {
    let x = TLElement::one(2).sub(&u(1, 2).scale(&q(1, 2))).unwrap();
    let s = x.to_json_string();
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v["n"], 2);
    assert_eq!(v["ring"], "Q");
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
    assert!(v["terms"][0]["coeff"].is_string());
    assert_eq!(TLElement::from_json_str(&s).unwrap(), x);
    let fp = x.to_ring(Ring::Fp(3)).unwrap();
    let back = TLElement::from_json_str(&fp.to_json_string()).unwrap();
    assert_eq!(back, fp);
    assert_eq!(back.ring(), Ring::Fp(3));
}
