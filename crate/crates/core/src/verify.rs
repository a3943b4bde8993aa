//! The verification suites behind `verify-all` and the acceptance tests,
//! one per criterion. Every suite returns reports instead of panicking so
//! that a failure names its counterexample.

use std::collections::BTreeMap;

use serde_json::json;

use crate::arith::{is_p_integral, reduce_mod_p, Rational};
use crate::combin::{
    all_tableaux, dominance_compare, index_set_in, p_classes, tableau_from_index, Dominance, StdTableau,
};
use crate::error::Result;
use crate::klr::{
    diamond_formula_check, diamond_tl_check, final_theorem_check, iota_image_rank, klr_relations_check, plus_p_cases,
    small_jm_check, x_factor, DiamondFamily, KlrContext, Orientation, Side,
};
use crate::report::Report;
use crate::tlcore::{cell_action, jm_element, CellRep, CellVector, Ring, TLElement};
use crate::wenzl::{
    class_idempotent, close_right, idempotent_by_products_rep, jones_wenzl, p_jones_wenzl_direct, partial_close,
    seminormal_idempotent, seminormal_vector, JwCache,
};

/// Criterion names, indexed from 1.
pub const CRITERIA: [&str; 8] = [
    "Jones-Wenzl projectors",
    "seminormal idempotents",
    "seminormal action of generators",
    "p-integrality",
    "KLR relations",
    "diamonds",
    "small Jucys-Murphy elements",
    "recursive p-Jones-Wenzl",
];

/// Runs criterion `k` (1-based) at its documented sizes, capped by `max_n`.
pub fn criterion(k: usize, max_n: usize, cache: &JwCache) -> Result<Vec<Report>> {
    match k {
        1 => jw_suite(max_n.min(8), cache),
        2 => seminormal_suite(max_n.min(7), cache),
        3 => ysf_suite(max_n.min(7), cache),
        4 => integrality_suite(max_n.min(8), cache),
        5 => klr_suite(max_n.min(6), max_n.min(5)),
        6 => diamond_suite(8..=max_n.min(12)),
        7 => small_jm_suite(8..=max_n.min(11)),
        8 => final_suite(max_n, cache),
        _ => Ok(Vec::new()),
    }
}

/// Annihilation, idempotence, star symmetry, absorption of smaller
/// projectors and partial closures, for `1 <= n <= max_n`.
pub fn jw_suite(max_n: usize, cache: &JwCache) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let jw = jones_wenzl(n, cache);
        let mut ann = Report::new("jw_killed_by_generators", n, 0);
        ann.require(jw.identity_coeff().is_one(), || json!({ "unit_coefficient": jw.identity_coeff().to_string() }));
        for i in 1..n {
            let u = TLElement::generator(i, n)?;
            ann.require(u.mul(&jw)?.is_zero() && jw.mul(&u)?.is_zero(), || json!({ "generator": i }));
        }
        let mut idem = Report::new("jw_idempotent", n, 0);
        idem.require(jw.mul_with(&jw, cache.exec())? == *jw, || json!({}));
        let mut star = Report::new("jw_star_invariant", n, 0);
        star.require(jw.star() == *jw, || json!({}));
        let mut absorb = Report::new("jw_absorbs_smaller", n, 0);
        let mut close = Report::new("jw_partial_closure", n, 0);
        for m in 1..n {
            let small = jones_wenzl(m, cache).tensor_id(n - m);
            absorb.require(small.mul(&jw)? == *jw && jw.mul(&small)? == *jw, || json!({ "m": m }));
            let k = n - m;
            let scalar = Rational::new(n as i64 + 1, m as i64 + 1);
            let closed = close_right(&jw, k)?;
            close.require(
                partial_close(n, k)? == scalar && closed == jones_wenzl(m, cache).scale(&scalar),
                || json!({ "k": k, "expected": scalar.to_string() }),
            );
        }
        out.extend([ann, idem, star, absorb, close]);
    }
    Ok(out)
}

/// Orthogonality, completeness, the product formula and the Jucys-Murphy
/// eigenvalues of `E'_t`, in the faithful cell representation.
pub fn seminormal_suite(max_n: usize, cache: &JwCache) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let tabs = all_tableaux(n);
        let reps: Vec<CellRep> =
            tabs.iter().map(|t| CellRep::of_with(&seminormal_idempotent(t, cache), cache.exec())).collect();
        let mut orth = Report::new("idempotents_orthogonal", n, 0);
        let mut total = CellRep::identity(n).scale(&Rational::zero());
        for (a, ra) in tabs.iter().zip(&reps) {
            total = total.add(ra);
            for (b, rb) in tabs.iter().zip(&reps) {
                let want = if a == b { ra.clone() } else { CellRep::identity(n).scale(&Rational::zero()) };
                orth.require(ra.mul(rb) == want, || json!({ "s": a.to_string(), "t": b.to_string() }));
            }
        }
        let mut complete = Report::new("idempotents_sum_to_one", n, 0);
        complete.require(total == CellRep::identity(n), || json!({}));
        let mut oracle = Report::new("idempotent_equals_product_formula", n, 0);
        let mut eig = Report::new("jm_eigenvalues", n, 0);
        let jms: Vec<CellRep> = (1..=n).map(|i| jm_element(i, n).map(|x| CellRep::of(&x))).collect::<Result<_>>()?;
        for (t, r) in tabs.iter().zip(&reps) {
            oracle.require(idempotent_by_products_rep(t)? == *r, || json!({ "t": t.to_string() }));
            for (i, c) in t.contents().into_iter().enumerate() {
                let want = r.scale(&Rational::from_int(c));
                eig.require(
                    jms[i].mul(r) == want && r.mul(&jms[i]) == want,
                    || json!({ "t": t.to_string(), "i": i + 1 }),
                );
            }
        }
        out.extend([orth, complete, oracle, eig]);
    }
    Ok(out)
}

/// `f_t u_i` on the seminormal vectors of the cell modules: zero when `i`,
/// `i+1` share a column, `2 f_t` when they share a row, and otherwise, with
/// `t_d` below `t_u = t_d s_i` and `r = c_{t_u}(i) - c_{t_d}(i)`,
///
/// ```text
/// f_{t_d} u_i = (r+1)/r f_{t_d} + (r^2-1)/r^2 f_{t_u},   f_{t_u} u_i = (r-1)/r f_{t_u} + f_{t_d}
/// ```
pub fn ysf_suite(max_n: usize, cache: &JwCache) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        let mut rep = Report::new("seminormal_generator_action", n, 0);
        let vecs: BTreeMap<StdTableau, CellVector> =
            all_tableaux(n).into_iter().map(|t| (t.clone(), seminormal_vector(&t, cache))).collect();
        for (t, f) in &vecs {
            for i in 1..n {
                let got = cell_action(f, &TLElement::generator(i, n)?)?;
                let c = t.contents();
                let want = if t.column(i) == t.column(i + 1) {
                    CellVector::zero(t.shape())
                } else if t.column(i) == 1 && c[i] == c[i - 1] + 1 {
                    f.scale(&Rational::from_int(2))
                } else {
                    let u = t.swap_adjacent(i).expect("entries in different rows and columns");
                    let (down, up) = match dominance_compare(t, &u)? {
                        Dominance::Less => (t.clone(), u.clone()),
                        _ => (u.clone(), t.clone()),
                    };
                    let r = Rational::from_int(up.contents()[i - 1] - down.contents()[i - 1]);
                    let r2 = &r * &r;
                    let (fd, fu) = (&vecs[&down], &vecs[&up]);
                    if *t == down {
                        fd.scale(&((&r + &Rational::one()) / r.clone()))
                            .add(&fu.scale(&((&r2 - &Rational::one()) / r2.clone())))
                    } else {
                        fu.scale(&((&r - &Rational::one()) / r.clone())).add(fd)
                    }
                };
                rep.require(got == want, || json!({ "t": t.to_string(), "i": i }));
            }
        }
        out.push(rep);
    }
    Ok(out)
}

/// Every class idempotent is `p`-integral for `p = 3, 5`; `3JW_3` reduces to
/// `1 + u1` and stays idempotent over `F_3`; the index set at `(12, 3)`.
pub fn integrality_suite(max_n: usize, cache: &JwCache) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for p in [3u64, 5] {
        for n in 1..=max_n {
            let mut rep = Report::new("class_idempotents_p_integral", n, p);
            for (seq, cls) in p_classes(n, p)? {
                match class_idempotent(&cls, p, cache) {
                    Ok(e) => {
                        let bad = e.terms().find(|(_, c)| !is_p_integral(c, p).unwrap_or(false));
                        rep.require(bad.is_none(), || json!({ "class": seq.residues }));
                    }
                    Err(err) => rep.fail(json!({ "class": seq.residues, "error": err.to_string() })),
                }
            }
            out.push(rep);
        }
    }
    let mut f3 = Report::new("pjw_3_mod_3", 3, 3);
    let x = p_jones_wenzl_direct(3, 3, cache)?.to_ring(Ring::Fp(3))?;
    f3.require(x.to_string() == "1 + u1" && x.mul(&x)? == x, || json!({ "got": x.to_string() }));
    let coeff = reduce_mod_p(&Rational::new(-1, 2), 3)?;
    f3.require(coeff.to_rational() == Rational::one(), || json!({ "minus_half_mod_3": coeff.to_string() }));
    out.push(f3);
    let mut idx = Report::new("index_set", 12, 3);
    let mut ms: Vec<usize> = index_set_in(12, 3)?.iter().map(|e| e.m).collect();
    ms.sort_unstable();
    idx.require(ms == [4, 6, 10, 12], || json!({ "got": ms }));
    out.push(idx);
    Ok(out)
}

/// All relations on both sides for `n <= max3` at `p = 3` and `n <= max5` at
/// `p = 5`; the descending orientation must fail somewhere, and the `+p`
/// forms of the quadratic relation must be reached.
pub fn klr_suite(max3: usize, max5: usize) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    let mut hits = 0;
    for (p, max) in [(3u64, max3), (5, max5)] {
        for n in 1..=max {
            out.extend(klr_relations_check(n, p)?);
            hits += plus_p_cases(&KlrContext::new(n, p)?, Orientation::Ascending);
        }
    }
    let mut plus = Report::new("psi_squared_plus_p_exercised", max3, 3);
    plus.require(hits > 0, || json!({ "hits": hits }));
    out.push(plus);
    Ok(out)
}

/// Closed forms, blocks, truncation and TL relations of the diamonds at
/// `p = 3`, with the tabulated values of `X`.
pub fn diamond_suite(ns: std::ops::RangeInclusive<usize>) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    let mut xs = Report::new("x_factor_values", 0, 3);
    for (rho, p, want) in
        [(1, 3, Rational::from_int(10)), (2, 3, Rational::new(14, 5)), (1, 5, Rational::from_int(126))]
    {
        let got = x_factor(rho, p)?;
        xs.require(got == want, || json!({ "rho": rho, "p": p, "got": got.to_string() }));
    }
    out.push(xs);
    for n in ns {
        out.extend(diamond_formula_check(n, 3)?);
        out.push(diamond_tl_check(n, 3)?);
    }
    Ok(out)
}

/// The small Jucys-Murphy checks at `p = 3`, with injectivity of the
/// embedding by rank.
pub fn small_jm_suite(ns: std::ops::RangeInclusive<usize>) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for n in ns {
        out.extend(small_jm_check(n, 3)?);
        let fam = DiamondFamily::new(&KlrContext::new(n, 3)?, Side::Left)?;
        let (rank, dim) = iota_image_rank(&fam)?;
        let mut inj = Report::new("iota_injective", n, 3);
        inj.require(rank == dim, || json!({ "rank": rank, "dim": dim }));
        out.push(inj);
    }
    Ok(out)
}

/// Recursive against direct at the six documented sizes (those `<= max_n`),
/// with diagram expansions for `n <= 9` and the explicit summands at `(12, 3)`.
pub fn final_suite(max_n: usize, cache: &JwCache) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, p) in [(3usize, 3u64), (5, 3), (8, 3), (12, 3), (5, 5), (9, 5)] {
        if n > max_n {
            continue;
        }
        out.extend(final_theorem_check(n, p, 9, cache)?);
        if (n, p) == (12, 3) {
            let mut rep = Report::new("summands_at_12", 12, 3);
            let rec = crate::klr::p_jones_wenzl_recursive(12, 3, cache)?;
            let mut want: Vec<StdTableau> =
                [12, 10, 6, 4].iter().map(|&m| tableau_from_index(m, 12, 3)).collect::<Result<_>>()?;
            want.sort();
            let mut got = rec.as_projection().unwrap_or_default();
            got.sort();
            rep.require(got == want, || json!({ "got": got.iter().map(ToString::to_string).collect::<Vec<_>>() }));
            out.push(rep);
        }
    }
    Ok(out)
}
