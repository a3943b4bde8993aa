mod common;

use common::q;
use tl_seminormal::arith::{is_p_integral, reduce_mod_p, PrimeFieldScalar, Rational};
use tl_seminormal::combin::*;
use tl_seminormal::error::Error;

fn tab(s: &str) -> StdTableau {
    StdTableau::parse(s).unwrap()
}

fn inverse_mod(a: i64, p: i64) -> i64 {
    // Extended Euclid.
    let (mut r0, mut r1, mut s0, mut s1) = (a.rem_euclid(p), p, 1i64, 0i64);
    while r1 != 0 {
        let qt = r0 / r1;
        (r0, r1) = (r1, r0 - qt * r1);
        (s0, s1) = (s1, s0 - qt * s1);
    }
    assert_eq!(r0, 1);
    s0.rem_euclid(p)
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Shape of the restriction to `1..=m`, as the number of column-2 entries.
fn prefix_twos(t: &StdTableau, m: usize) -> usize {
    t.columns()[..m].iter().filter(|&&c| c == 2).count()
}

#[test]
fn integrality_examples() {
    assert!(is_p_integral(&q(1, 2), 3).unwrap());
    assert!(is_p_integral(&q(0, 1), 5).unwrap());
    assert!(!is_p_integral(&q(-2, 3), 3).unwrap());
    assert_eq!(is_p_integral(&q(1, 2), 2), Err(Error::InvalidPrime(2)));
    assert_eq!(is_p_integral(&q(1, 2), 9), Err(Error::InvalidPrime(9)));
}

#[test]
fn reduction_examples() {
    assert_eq!(reduce_mod_p(&q(-1, 2), 3).unwrap().value, 1);
    assert_eq!(reduce_mod_p(&q(0, 1), 5).unwrap().value, 0);
    assert_eq!(reduce_mod_p(&q(3, 4), 5).unwrap().value, 2);
    assert!(matches!(reduce_mod_p(&q(1, 3), 3), Err(Error::NotIntegral { .. })));
    for p in [3i64, 5, 7, 11] {
        for a in -20i64..20 {
            for b in 1i64..20 {
                if b % p == 0 {
                    continue;
                }
                let want = (a.rem_euclid(p) * inverse_mod(b, p)).rem_euclid(p);
                assert_eq!(reduce_mod_p(&q(a, b), p as u64).unwrap().value as i64, want, "{a}/{b} mod {p}");
            }
        }
    }
}

#[test]
fn prime_field_scalars() {
    let a = PrimeFieldScalar::new(-1, 5).unwrap();
    assert_eq!(a.value, 4);
    assert_eq!(a.inv().unwrap().value, 4);
    assert!(PrimeFieldScalar::new(0, 5).unwrap().inv().is_none());
    assert!(PrimeFieldScalar::new(1, 4).is_err());
    assert_eq!(a.to_rational(), q(4, 1));
}

#[test]
fn rationals_are_canonical() {
    assert_eq!(q(2, -4).to_string(), "-1/2");
    assert_eq!(q(0, 7).denom().to_string(), "1");
    assert_eq!(q(6, 3).to_string(), "2");
    assert_eq!(serde_json::to_string(&q(3, 4)).unwrap(), "\"3/4\"");
    let back: Rational = serde_json::from_str("\"-5/10\"").unwrap();
    assert_eq!(back, q(-1, 2));
}

#[test]
fn partitions() {
    let three: Vec<[usize; 2]> = two_column_partitions(3).into_iter().map(Into::into).collect();
    assert_eq!(three, vec![[2, 1], [3, 0]]);
    assert_eq!(two_column_partitions(0).len(), 1);
    let four: Vec<[usize; 2]> = two_column_partitions(4).into_iter().map(Into::into).collect();
    assert_eq!(four, vec![[2, 2], [3, 1], [4, 0]]);
    assert!(TwoColPartition::new(1, 2).is_err());
    assert_eq!(serde_json::to_string(&TwoColPartition::new(3, 1).unwrap()).unwrap(), "[3,1]");
}

#[test]
fn standard_tableaux_examples() {
    let l = TwoColPartition::new(2, 1).unwrap();
    assert_eq!(standard_tableaux(l), vec![tab("1,1,2"), tab("1,2,1")]);
    assert_eq!(standard_tableaux(TwoColPartition::new(5, 0).unwrap()), vec![StdTableau::one_column(5)]);
    assert_eq!(all_tableaux(3).len(), 3);
    for n in 0..=10u64 {
        assert_eq!(all_tableaux(n as usize).len() as u64, binomial(n, n / 2), "n={n}");
    }
    assert_eq!(serde_json::to_string(&tab("1,2,1")).unwrap(), "[1,2,1]");
}

#[test]
fn contents_examples() {
    assert_eq!(tab("1,1,2").contents(), vec![0, -1, 1]);
    let t5 = StdTableau::one_column(5);
    for i in 1..=5 {
        assert_eq!(t5.content(i).unwrap(), 1 - i as i64);
    }
    assert_eq!(tab("1,2,1,2").contents(), vec![0, 1, -1, 0]);
    assert!(t5.content(6).is_err());
}

#[test]
fn dominance_examples() {
    assert_eq!(dominance_compare(&tab("1,1,2"), &tab("1,2,1")).unwrap(), Dominance::Less);
    assert_eq!(dominance_compare(&tab("1,2,1"), &tab("1,2,1")).unwrap(), Dominance::Equal);
    assert_eq!(dominance_compare(&tab("1,1,2,1,2"), &tab("1,2,1,1,2")).unwrap(), Dominance::Less);
    assert!(dominance_compare(&tab("1,2"), &tab("1,2,1")).is_err());
    // Two columns: s below t iff s has no more 2s than t in every prefix.
    for n in 1..=8 {
        let ts = all_tableaux(n);
        for s in &ts {
            for t in &ts {
                let le = (1..=n).all(|m| prefix_twos(s, m) <= prefix_twos(t, m));
                let ge = (1..=n).all(|m| prefix_twos(s, m) >= prefix_twos(t, m));
                let want = match (le, ge) {
                    (true, true) => Dominance::Equal,
                    (true, false) => Dominance::Less,
                    (false, true) => Dominance::Greater,
                    (false, false) => Dominance::Incomparable,
                };
                assert_eq!(dominance_compare(s, t).unwrap(), want, "{s} {t}");
            }
        }
    }
}

#[test]
fn residue_examples() {
    assert_eq!(residue_sequence(&StdTableau::one_column(3), 3).unwrap().residues, vec![0, 2, 1]);
    assert_eq!(residue_sequence(&tab("1,1,2"), 3).unwrap().residues, vec![0, 2, 1]);
    assert!(residue_sequence(&tab("1,1,2"), 4).is_err());
}

#[test]
fn p_class_examples() {
    let t3 = StdTableau::one_column(3);
    assert_eq!(p_class(&t3, 3).unwrap(), vec![tab("1,1,2"), tab("1,1,1")]);
    assert_eq!(p_class(&StdTableau::one_column(12), 3).unwrap().len(), 6);
    for t in all_tableaux(4) {
        assert_eq!(p_class(&t, 5).unwrap(), vec![t.clone()]);
    }
    for n in 1..=9 {
        let total: usize = p_classes(n, 3).unwrap().iter().map(|(_, c)| c.len()).sum();
        assert_eq!(total, all_tableaux(n).len());
    }
}

#[test]
fn block_examples() {
    let b = block_decomposition(&tab("1,1,2"));
    assert_eq!((b.d.clone(), b.m.clone()), (vec![(1, 2)], vec![(3, 1)]));
    assert_eq!(b.n_sizes(), vec![2]);
    let b = block_decomposition(&StdTableau::one_column(6));
    assert_eq!((b.k(), b.m_sizes()), (1, vec![0]));
    let b = block_decomposition(&tab("1,1,2,1,1"));
    assert_eq!(b.d, vec![(1, 2), (4, 2)]);
    assert_eq!(b.m, vec![(3, 1), (6, 0)]);
    assert_eq!(b.n_sizes(), vec![2, 3]);
}

#[test]
fn index_set_examples() {
    let ms = |n, p| index_set_in(n, p).unwrap().into_iter().map(|e| e.m).collect::<Vec<_>>();
    assert_eq!(ms(12, 3), vec![12, 10, 6, 4]);
    assert_eq!(ms(3, 3), vec![3, 1]);
    assert_eq!(ms(3, 5), vec![3]);
    assert_eq!(tableau_from_index(3, 3, 3).unwrap(), StdTableau::one_column(3));
    assert_eq!(tableau_from_index(1, 3, 3).unwrap(), tab("1,1,2"));
    assert_eq!(tableau_from_index(12, 12, 3).unwrap(), StdTableau::one_column(12));
    assert_eq!(tableau_from_index(5, 12, 3), Err(Error::NotInIndexSet { m: 5, n: 12, p: 3 }));
    for p in [3u64, 5] {
        for n in 1..=14 {
            let tn = StdTableau::one_column(n);
            let cls = p_class(&tn, p).unwrap();
            for e in index_set_in(n, p).unwrap() {
                assert!(cls.contains(&tableau_from_index(e.m, n, p).unwrap()), "n={n} p={p} m={}", e.m);
            }
        }
    }
}

#[test]
fn collapse_examples() {
    let (s, tag) = collapse_map(&StdTableau::one_column(12), 3).unwrap();
    assert_eq!((s, tag), (StdTableau::one_column(3), Some(1)));
    let (s, tag) = collapse_map(&StdTableau::one_column(5), 5).unwrap();
    assert_eq!((s.n(), tag), (0, Some(1)));
    let (s, tag) = collapse_map(&StdTableau::one_column(8), 3).unwrap();
    assert_eq!((s, tag), (StdTableau::one_column(2), None));
    assert_eq!(collapse_map(&tab("1,2,1"), 3), Err(Error::NotInClass));
}

#[test]
fn collapse_is_bijective() {
    for p in [3u64, 5] {
        for n in p as usize..=12 {
            let lv = RadixLevel::of(n, p).unwrap();
            let cls = p_class(&StdTableau::one_column(n), p).unwrap();
            let mut images: Vec<(StdTableau, Option<u8>)> = cls.iter().map(|t| collapse_map(t, p).unwrap()).collect();
            images.sort();
            images.dedup();
            assert_eq!(images.len(), cls.len(), "injective at n={n} p={p}");
            let copies = if lv.r > 0 { 2 } else { 1 };
            assert_eq!(images.len(), copies * all_tableaux(lv.n2).len(), "onto at n={n} p={p}");
        }
    }
}

#[test]
fn radix_examples() {
    let c = radix_chain(12, 3).unwrap();
    assert_eq!(c.digits, vec![1, 1, 1]);
    assert_eq!(c.levels.iter().map(|l| (l.n, l.n2, l.r)).collect::<Vec<_>>(), vec![(12, 3, 1), (3, 0, 1)]);
    let c = radix_chain(14, 3).unwrap();
    assert_eq!(c.digits, vec![1, 2, 0]);
    assert_eq!(c.levels.iter().map(|l| (l.n2, l.r)).collect::<Vec<_>>(), vec![(4, 0), (0, 2)]);
    let c = radix_chain(3, 3).unwrap();
    assert_eq!((c.digits.clone(), c.levels.len()), (vec![1, 1], 1));
    assert!(radix_chain(2, 5).unwrap().levels.is_empty());
    // Every level: n = n1 + p - 1, n1 = p n2 + r, r = a_i, and n2 + 1 is
    // the number formed by the higher digits.
    for p in [3u64, 5, 7] {
        for n in p as usize..200 {
            let c = radix_chain(n, p).unwrap();
            let k = c.digits.len() - 1;
            for (i, lv) in c.levels.iter().enumerate() {
                assert_eq!(lv.n, lv.n1 + p as usize - 1);
                assert_eq!(lv.n1, p as usize * lv.n2 + lv.r);
                assert_eq!(lv.r as u64, c.digits[k - i]);
                let higher = c.digits[..k - i].iter().fold(0u64, |a, &d| a * p + d);
                assert_eq!(lv.n2 as u64 + 1, higher);
            }
            assert_eq!(c.levels.last().unwrap().n2 as u64, c.digits[0] - 1);
        }
    }
}
