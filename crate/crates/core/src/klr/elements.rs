//! Passage between elements of `TL_n` and operators on the basis `{f_st}`,
//! where `f_st = E'_s C_st E'_t`.
//!
//! Left multiplication by `x` moves the first index: `x f_sa = sum_v R_sv f_va`
//! where `R` is the matrix of `x^*` acting on the vectors `f_s` of the cell
//! module. Conversely `1 = sum_t f_tt / g_t` with `f_tt^2 = g_t f_tt`, so an
//! operator `X` is left multiplication by `sum_{t,u} X_ut f_ut / g_t`.

use std::collections::HashMap;

use super::basis::FBasis;
use super::operator::{Column, SeminormalOperator, Side};
use crate::arith::Rational;
use crate::combin::{standard_tableaux, two_column_partitions, StdTableau};
use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::tlcore::{bilinear, cell_matrix, cellular_basis_element, Ring, TLElement};
use crate::wenzl::{seminormal_idempotent, seminormal_vector, JwCache};

/// `f_st = E'_s C_st E'_t`.
pub fn f_basis_element(s: &StdTableau, t: &StdTableau, cache: &JwCache) -> Result<TLElement> {
    let c = TLElement::from_matching(cellular_basis_element(s, t)?);
    let es = seminormal_idempotent(s, cache);
    let et = if s == t { es.clone() } else { seminormal_idempotent(t, cache) };
    es.mul_with(&c, cache.exec())?.mul_with(&et, cache.exec())
}

/// The scalar `g_t` with `f_tt^2 = g_t f_tt`, read off the cell module as
/// `<f_t, f_t>`.
pub fn f_norm(t: &StdTableau, cache: &JwCache) -> Rational {
    let v = seminormal_vector(t, cache);
    bilinear(&v, &v)
}

/// The same scalar by squaring `f_tt` in the diagram basis.
pub fn f_norm_by_square(t: &StdTableau, cache: &JwCache) -> Result<Rational> {
    let f = f_basis_element(t, t, cache)?;
    let sq = f.mul_with(&f, cache.exec())?;
    let (d, c) = f.terms().next().ok_or(Error::DivisionByZero)?;
    let g = sq.coeff(d) / c.clone();
    if sq != f.scale(&g) {
        return Err(Error::InvalidTableau(format!("f_tt^2 is not a multiple of f_tt for {t}")));
    }
    Ok(g)
}

/// Rows are the vectors `f_s`, `s` in `standard_tableaux(lambda)`, in the
/// half-diagram basis.
fn transition(tabs: &[StdTableau], cache: &JwCache) -> QMatrix {
    let mut m = QMatrix::zeros(tabs.len(), tabs.len());
    for (i, s) in tabs.iter().enumerate() {
        let v = seminormal_vector(s, cache);
        for (j, u) in tabs.iter().enumerate() {
            m.set(i, j, v.coeff(u));
        }
    }
    m
}

fn operator_of(x: &TLElement, side: Side, cache: &JwCache) -> Result<SeminormalOperator> {
    if x.ring() != Ring::Q {
        return Err(Error::RingMismatch);
    }
    let n = x.n();
    let basis = FBasis::of(n);
    let acting = match side {
        Side::Left => x.star(),
        Side::Right => x.clone(),
    };
    let mut cols: Vec<Column> = vec![Vec::new(); basis.len()];
    for lambda in two_column_partitions(n) {
        let tabs = standard_tableaux(lambda);
        let t = transition(&tabs, cache);
        let tinv = t.inverse().expect("f_s are unitriangular in the half-diagram basis");
        let r = t.mul(&cell_matrix(&acting, lambda)).mul(&tinv);
        for (i, s) in tabs.iter().enumerate() {
            let col = &mut cols[basis.index_of(s).expect("in basis")];
            for (j, v) in tabs.iter().enumerate() {
                let c = r.get(i, j);
                if !c.is_zero() {
                    col.push((basis.index_of(v).expect("in basis"), c.clone()));
                }
            }
        }
    }
    Ok(SeminormalOperator::from_columns(side, basis, cols))
}

/// The operator `f_sa -> x f_sa`.
pub fn left_operator_of(x: &TLElement, cache: &JwCache) -> Result<SeminormalOperator> {
    operator_of(x, Side::Left, cache)
}

/// The operator `f_as -> f_as x`.
pub fn right_operator_of(x: &TLElement, cache: &JwCache) -> Result<SeminormalOperator> {
    operator_of(x, Side::Right, cache)
}

/// The element whose multiplication on the operator's side is the operator.
pub fn operator_to_element(x: &SeminormalOperator, cache: &JwCache) -> Result<TLElement> {
    let basis = x.basis();
    let mut idem: HashMap<usize, TLElement> = HashMap::new();
    let mut get = |j: usize| -> TLElement {
        idem.entry(j).or_insert_with(|| seminormal_idempotent(basis.tableau(j), cache)).clone()
    };
    let exec = cache.exec();
    let mut acc = TLElement::zero(x.n(), Ring::Q);
    for t in 0..x.dim() {
        if x.column(t).is_empty() {
            continue;
        }
        let tt = basis.tableau(t);
        let et = get(t);
        for (u, c) in x.column(t) {
            if *u == t {
                // f_tt = g_t E'_t because E'_t is primitive.
                acc = acc.add(&et.scale(c))?;
                continue;
            }
            let uu = basis.tableau(*u);
            // Left: X f_tt contributes f_ut; right: f_tt X contributes f_tu.
            let (a, b, ea, eb) = match x.side() {
                Side::Left => (uu, tt, get(*u), et.clone()),
                Side::Right => (tt, uu, et.clone(), get(*u)),
            };
            let cst = TLElement::from_matching(cellular_basis_element(a, b)?);
            let f = ea.mul_with(&cst, exec)?.mul_with(&eb, exec)?;
            let g = f_norm(tt, cache).inv().ok_or(Error::DivisionByZero)?;
            acc = acc.add(&f.scale(&(c * &g)))?;
        }
    }
    Ok(acc)
}
