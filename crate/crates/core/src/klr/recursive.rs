//! `pJW_n` by lifting along the base-`p` ladder.
//!
//! Write `n + 1 = a_k p^k + ... + a_0`. The ladder `n = n^0, n^1 = n2^0, ...`
//! ends at `n2^{k-1} = a_k - 1 < p`, where the projector is `JW_{a_k - 1}`.
//! Each step applies the diamond embedding of `TL_{n2^i}` into `TL_{n^i}`;
//! intermediate results are turned back into elements, the last one stays an
//! operator on `TL_n`.

use serde_json::json;

use super::action::KlrContext;
use super::diamond::{main_class, DiamondFamily};
use super::elements::operator_to_element;
use super::operator::{SeminormalOperator, Side};
use crate::combin::radix_chain;
use crate::error::{Error, Result};
use crate::report::Report;
use crate::tlcore::TLElement;
use crate::wenzl::{index_tableaux, jones_wenzl, p_jones_wenzl_direct, JwCache};

/// Lifts `x` in `TL_{n^j}` to an operator on `TL_n` through the levels
/// `j-1, ..., 0` of the ladder (`x` itself when `j = 0`).
fn lift(x: SeminormalOperator, j: usize, n: usize, p: u64, cache: &JwCache) -> Result<SeminormalOperator> {
    let chain = radix_chain(n, p)?;
    let mut op = x;
    for i in (0..j).rev() {
        let el = operator_to_element(&op, cache)?;
        let ctx = KlrContext::with_exec(chain.levels[i].n, p, cache.exec())?;
        op = DiamondFamily::new(&ctx, Side::Left)?.iota_klr(&el)?;
    }
    Ok(op)
}

/// `pJW_n` as a left operator on `TL_n`.
pub fn p_jones_wenzl_recursive(n: usize, p: u64, cache: &JwCache) -> Result<SeminormalOperator> {
    if n < p as usize {
        return Err(Error::TooSmall { n, p });
    }
    let chain = radix_chain(n, p)?;
    let ak = chain.digits[0] as usize;
    let mut x: TLElement = (*jones_wenzl(ak - 1, cache)).clone();
    for i in (0..chain.levels.len()).rev() {
        let lv = chain.levels[i];
        log::debug!("lifting TL_{} into TL_{}", lv.n2, lv.n);
        let ctx = KlrContext::with_exec(lv.n, p, cache.exec())?;
        let op = DiamondFamily::new(&ctx, Side::Left)?.iota_klr(&x)?;
        if i == 0 {
            return Ok(op);
        }
        x = operator_to_element(&op, cache)?;
    }
    unreachable!("n >= p gives at least one level")
}

/// `pJW_n` as an element of `TL_n`.
pub fn p_jones_wenzl_recursive_element(n: usize, p: u64, cache: &JwCache) -> Result<TLElement> {
    operator_to_element(&p_jones_wenzl_recursive(n, p, cache)?, cache)
}

/// The direct `pJW_n` as an operator: projection onto the index tableaux.
pub fn p_jones_wenzl_direct_operator(n: usize, p: u64) -> Result<SeminormalOperator> {
    let ctx = KlrContext::new(n, p)?;
    SeminormalOperator::projection(Side::Left, ctx.basis.clone(), &index_tableaux(n, p)?)
}

/// The class idempotents of every level of the ladder, lifted to `TL_n`.
pub fn lifted_class_idempotents(n: usize, p: u64, cache: &JwCache) -> Result<Vec<SeminormalOperator>> {
    let chain = radix_chain(n, p)?;
    let mut out = Vec::new();
    for (j, lv) in chain.levels.iter().enumerate() {
        let ctx = KlrContext::with_exec(lv.n, p, cache.exec())?;
        out.push(lift(ctx.e_class(Side::Left), j, n, p, cache)?);
    }
    Ok(out)
}

/// Recursive against direct, the summand set, the complement of `pJW_n` in
/// the class idempotent, and absorption by the lifted class idempotents.
/// Diagram expansions are compared as well when `n <= diagram_limit`.
pub fn final_theorem_check(n: usize, p: u64, diagram_limit: usize, cache: &JwCache) -> Result<Vec<Report>> {
    let rec = p_jones_wenzl_recursive(n, p, cache)?;
    let direct = p_jones_wenzl_direct_operator(n, p)?;
    let ctx = KlrContext::new(n, p)?;

    let mut eq = Report::new("recursive_equals_direct", n, p);
    if let Some((s, t)) = rec.counterexample(&direct) {
        eq.fail(json!({ "s": s.to_string(), "t": t.to_string() }));
    }

    let mut summands = Report::new("summands_are_index_tableaux", n, p);
    let want: Vec<String> = index_tableaux(n, p)?.iter().map(ToString::to_string).collect();
    match rec.as_projection() {
        Some(ts) => {
            let mut got: Vec<String> = ts.iter().map(ToString::to_string).collect();
            let mut w = want.clone();
            got.sort();
            w.sort();
            if got != w {
                summands.fail(json!({ "got": got, "want": want }));
            }
        }
        None => summands.fail(json!({ "reason": "not a sum of seminormal idempotents" })),
    }

    let mut excess = Report::new("class_idempotent_minus_pjw", n, p);
    let e = ctx.e_class(Side::Left);
    let rest = e.sub(&rec);
    let class_size = main_class(n, p)?.len();
    let expect_nonzero = class_size > want.len();
    if rest.is_zero() == expect_nonzero
        || rest.mul(&rest) != rest
        || !rest.mul(&rec).is_zero()
        || !rec.mul(&rest).is_zero()
    {
        excess.fail(json!({ "class_size": class_size, "summands": want.len(), "rest_zero": rest.is_zero() }));
    }

    let mut absorb = Report::new("lifted_class_idempotents_absorb", n, p);
    let lifted = lifted_class_idempotents(n, p, cache)?;
    let mut prod = ctx.identity(Side::Left);
    for (j, l) in lifted.iter().enumerate() {
        if l.mul(&rec) != rec || rec.mul(l) != rec {
            absorb.fail(json!({ "level": j }));
        }
        prod = prod.mul(l);
    }
    if lifted.len() > 1 && prod != lifted[lifted.len() - 1] {
        absorb.fail(json!({ "reason": "product of lifted idempotents is not the deepest one" }));
    }

    let mut reports = vec![eq, summands, excess, absorb];
    if n <= diagram_limit {
        let mut diag = Report::new("recursive_equals_direct_diagrams", n, p);
        let a = operator_to_element(&rec, cache)?;
        let b = p_jones_wenzl_direct(n, p, cache)?;
        if a != b {
            diag.fail(json!({ "difference_terms": a.sub(&b)?.len() }));
        }
        reports.push(diag);
    }
    Ok(reports)
}
