//! Jones-Wenzl projectors and the seminormal idempotents built from them.
//!
//! `JW_n` is computed from `JW_{n-1}` by the single-clasp expansion
//!
//! ```text
//! JW_n = J - sum_{i=1}^{n-1} (-1)^{n-1-i} (i/n) J u_{n-1} u_{n-2} ... u_i,   J = JW_{n-1} (x) 1,
//! ```
//!
//! which is what the two-sided recursion `J - ((n-1)/n) J u_{n-1} J` reduces
//! to once `J u_{n-1} J` is expanded by absorbing `J` into itself. It needs
//! `n - 1` products of `J` with a single diagram instead of a product of `J`
//! with itself. [`jones_wenzl_sandwich`] keeps the two-sided form as a
//! cross-check.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::arith::{is_p_integral, Rational};
use crate::combin::{all_tableaux, block_decomposition, index_set_in, p_class, tableau_from_index, StdTableau};
use crate::error::{Error, Result};
use crate::par::{self, Exec};
use crate::tlcore::{
    compose_unchecked, jm_element, tableau_of_half, CellRep, CellVector, ElementJson, End, PlanarMatching, Ring,
    TLElement, Tangle,
};

/// Memoized Jones-Wenzl projectors, optionally backed by a JSON file.
pub struct JwCache {
    memo: Mutex<BTreeMap<usize, Arc<TLElement>>>,
    path: Option<PathBuf>,
    exec: Exec,
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    n: usize,
    element: ElementJson,
}

impl Default for JwCache {
    fn default() -> Self {
        JwCache::new()
    }
}

impl JwCache {
    pub fn new() -> JwCache {
        JwCache { memo: Mutex::new(BTreeMap::new()), path: None, exec: Exec::default() }
    }

    pub fn with_exec(exec: Exec) -> JwCache {
        JwCache { exec, ..JwCache::new() }
    }

    pub fn exec(&self) -> Exec {
        self.exec
    }

    /// Opens a disk-backed cache; a missing file starts empty. Loaded entries
    /// are checked for size, ring and unit coefficient.
    pub fn open(path: impl AsRef<Path>) -> Result<JwCache> {
        let path = path.as_ref().to_path_buf();
        let mut memo = BTreeMap::new();
        if path.exists() {
            let text = fs::read_to_string(&path).map_err(|e| Error::Io(e.to_string()))?;
            let entries: Vec<CacheEntry> = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
            for e in entries {
                let x = TLElement::from_json(&e.element)?;
                if x.n() != e.n || x.ring() != Ring::Q || !x.identity_coeff().is_one() {
                    return Err(Error::Parse(format!("cache entry for n = {} is not a projector", e.n)));
                }
                memo.insert(e.n, Arc::new(x));
            }
        }
        Ok(JwCache { memo: Mutex::new(memo), path: Some(path), exec: Exec::default() })
    }

    pub fn get(&self, n: usize) -> Option<Arc<TLElement>> {
        self.memo.lock().expect("jw cache").get(&n).cloned()
    }

    fn insert(&self, n: usize, x: Arc<TLElement>) {
        self.memo.lock().expect("jw cache").insert(n, x);
    }

    pub fn cached_sizes(&self) -> Vec<usize> {
        self.memo.lock().expect("jw cache").keys().copied().collect()
    }

    /// Writes every cached projector to the backing file, if there is one.
    pub fn save(&self) -> Result<()> {
        let Some(path) = &self.path else { return Ok(()) };
        let entries: Vec<CacheEntry> =
            self.memo.lock().expect("jw cache").iter().map(|(&n, x)| CacheEntry { n, element: x.to_json() }).collect();
        let text = serde_json::to_string(&entries).map_err(|e| Error::Parse(e.to_string()))?;
        fs::write(path, text).map_err(|e| Error::Io(e.to_string()))
    }
}

/// `u_{n-1} u_{n-2} ... u_i` as a single diagram.
fn descending_word(n: usize, i: usize) -> PlanarMatching {
    let mut w = PlanarMatching::identity(n);
    for k in (i..n).rev() {
        let g = PlanarMatching::generator(k, n).expect("generator in range");
        w = compose_unchecked(&w, &g).0;
    }
    w
}

fn clasp_step(prev: &TLElement, exec: Exec) -> TLElement {
    let n = prev.n() + 1;
    let j: Vec<(PlanarMatching, Rational)> = prev.tensor_id(1).terms().map(|(d, c)| (*d, c.clone())).collect();
    let nr = Rational::from_int(n as i64);
    let parts = par::map_range(exec, 1..n, |i| {
        let w = descending_word(n, i);
        let sign = if (n - 1 - i).is_multiple_of(2) { -1 } else { 1 };
        let coeff = &Rational::from_int(sign * i as i64) / &nr;
        let mut acc: HashMap<PlanarMatching, Rational> = HashMap::with_capacity(j.len());
        for (d, c) in &j {
            let (e, loops) = compose_unchecked(d, &w);
            *acc.entry(e).or_insert_with(Rational::zero) += (c * &coeff).mul_pow2(loops);
        }
        acc
    });
    let mut total: HashMap<PlanarMatching, Rational> = j.into_iter().collect();
    for part in parts {
        for (d, c) in part {
            *total.entry(d).or_insert_with(Rational::zero) += c;
        }
    }
    TLElement::from_terms(n, Ring::Q, total).expect("square diagrams over Q")
}

/// `JW_n` over `Q`; `JW_0` and `JW_1` are the unit.
pub fn jones_wenzl(n: usize, cache: &JwCache) -> Arc<TLElement> {
    if let Some(x) = cache.get(n) {
        return x;
    }
    let x = if n <= 1 {
        TLElement::one(n)
    } else {
        let prev = jones_wenzl(n - 1, cache);
        log::debug!("computing JW_{n}");
        clasp_step(&prev, cache.exec)
    };
    let x = Arc::new(x);
    cache.insert(n, x.clone());
    x
}

/// The two-sided recursion `JW_n = J - ((n-1)/n) J u_{n-1} J`, without caching.
pub fn jones_wenzl_sandwich(n: usize) -> TLElement {
    let mut x = TLElement::one(n.min(1));
    for m in 2..=n {
        let j = x.tensor_id(1);
        let u = TLElement::generator(m - 1, m).expect("generator in range");
        let jaj = j.mul(&u).and_then(|y| y.mul(&j)).expect("same size");
        x = j.sub(&jaj.scale(&Rational::new(m as i64 - 1, m as i64))).expect("same size");
    }
    if n == 0 {
        TLElement::one(0)
    } else {
        x
    }
}

/// The defining property: unit coefficient 1 and `u_i x = x u_i = 0`.
pub fn is_jones_wenzl(x: &TLElement) -> bool {
    if !x.identity_coeff().is_one() {
        return false;
    }
    (1..x.n()).all(|i| {
        let u = TLElement::generator(i, x.n()).expect("generator in range");
        u.mul(x).map(|y| y.is_zero()).unwrap_or(false) && x.mul(&u).map(|y| y.is_zero()).unwrap_or(false)
    })
}

/// Closing the `k` rightmost strands of `JW_n` gives this multiple of `JW_{n-k}`.
pub fn partial_close(n: usize, k: usize) -> Result<Rational> {
    if k == 0 || k >= n {
        return Err(Error::IndexRange { index: k, lo: 1, hi: n.saturating_sub(1) });
    }
    Ok(Rational::new(n as i64 + 1, (n - k) as i64 + 1))
}

/// `keep` through strands followed by `m` nested cups on the upper side:
/// upper points `keep + m - 1 - q` and `keep + m + q` are joined.
pub fn nested_cups(keep: usize, m: usize) -> PlanarMatching {
    let mut pairs: Vec<(End, End)> = (0..keep).map(|i| (End::Top(i), End::Bottom(i))).collect();
    pairs.extend((0..m).map(|q| (End::Top(keep + m - 1 - q), End::Top(keep + m + q))));
    PlanarMatching::from_pairs(keep + 2 * m, keep, &pairs).expect("nested cups are planar")
}

/// Closes the `k` rightmost strands of `x` around the right-hand side.
pub fn close_right(x: &TLElement, k: usize) -> Result<TLElement> {
    let n = x.n();
    if k > n {
        return Err(Error::IndexRange { index: k, lo: 0, hi: n });
    }
    let cup = nested_cups(n - k, k);
    let body = Tangle::compose(
        &x.as_tangle().tensor(&PlanarMatching::identity(k)),
        &Tangle::from_matching(cup),
        Exec::default(),
    )?;
    Tangle::compose(&Tangle::from_matching(cup.star()), &body, Exec::default())?.into_element()
}

/// `gamma_t = prod_i (n_i + 1) / (n_i - m_i + 1)` over the blocks of `t`.
pub fn gamma(t: &StdTableau) -> Rational {
    let b = block_decomposition(t);
    b.n_sizes()
        .iter()
        .zip(b.m_sizes())
        .map(|(&ni, mi)| Rational::new(ni as i64 + 1, (ni - mi) as i64 + 1))
        .fold(Rational::one(), |a, x| a * x)
}

/// Last step of the construction: `G` (the previous state with `d_k` new
/// strands) and `H = JW_{n_k} G`, together with `m_k`.
struct FinalStep {
    g: Tangle,
    h: Tangle,
    m: usize,
}

fn construct(t: &StdTableau, cache: &JwCache) -> FinalStep {
    let exec = cache.exec;
    let b = block_decomposition(t);
    let (ds, ms, ns) = (b.d_sizes(), b.m_sizes(), b.n_sizes());
    let mut state = Tangle::from_matching(PlanarMatching::identity(0));
    let k = b.k();
    for i in 0..k {
        let g = state.tensor(&PlanarMatching::identity(ds[i]));
        let jw = jones_wenzl(ns[i], cache);
        let h = Tangle::compose(&jw.as_tangle(), &g, exec).expect("sizes agree");
        if i + 1 == k {
            return FinalStep { g, h, m: ms[i] };
        }
        let cap = Tangle::from_matching(nested_cups(ns[i] - ms[i], ms[i]).star());
        state = Tangle::compose(&cap, &h.tensor(&PlanarMatching::identity(ms[i])), exec).expect("sizes agree");
        // Caps among the remaining upper points die under the next projector.
        state.retain(|d| !d.has_top_cap());
    }
    // The empty tableau: a single empty diagram.
    let id = Tangle::from_matching(PlanarMatching::identity(0));
    FinalStep { g: id.clone(), h: id, m: 0 }
}

/// The half construction `F_t`: nested projectors with bends, a morphism from
/// `n` points to `l1 - l2` points. Terms of the last stage are kept in full.
pub fn seminormal_morphism(t: &StdTableau, cache: &JwCache) -> Tangle {
    let f = construct(t, cache);
    if f.m == 0 {
        return f.h;
    }
    let keep = f.h.top() - f.m;
    let cap = Tangle::from_matching(nested_cups(keep, f.m).star());
    Tangle::compose(&cap, &f.h.tensor(&PlanarMatching::identity(f.m)), cache.exec).expect("sizes agree")
}

/// `f_t` in the half-diagram basis of the cell module.
pub fn seminormal_vector(t: &StdTableau, cache: &JwCache) -> CellVector {
    let mut v = CellVector::zero(t.shape());
    for (d, c) in seminormal_morphism(t, cache).terms() {
        if let Some(u) = tableau_of_half(d) {
            v.add_term(u, c.clone());
        }
    }
    v
}

/// `f_tt = F_t^* F_t` as an element of `TL_n`.
pub fn f_tt(t: &StdTableau, cache: &JwCache) -> TLElement {
    let exec = cache.exec;
    let f = construct(t, cache);
    let out = if f.m == 0 {
        // F = JW G, and JW is a star-invariant idempotent.
        Tangle::compose(&f.g.star(), &f.h, exec)
    } else {
        let keep = f.h.top() - f.m;
        let cap = nested_cups(keep, f.m).star();
        let u = Tangle::from_matching(compose_unchecked(&cap.star(), &cap).0);
        let hh = f.h.tensor(&PlanarMatching::identity(f.m));
        Tangle::compose(&u, &hh, exec).and_then(|x| Tangle::compose(&hh.star(), &x, exec))
    };
    out.expect("sizes agree").into_element().expect("square")
}

/// `E'_t = f_tt / gamma_t`.
pub fn seminormal_idempotent(t: &StdTableau, cache: &JwCache) -> TLElement {
    let g = gamma(t).inv().expect("gamma is positive");
    f_tt(t, cache).scale(&g)
}

/// The content set: every content of every two-column tableau of size `n`.
pub fn content_set(n: usize) -> Vec<i64> {
    let mut cs: Vec<i64> = all_tableaux(n).iter().flat_map(|t| t.contents()).collect();
    cs.sort_unstable();
    cs.dedup();
    cs
}

/// The factors `(c_t(i) - c)^{-1} (L_i - c)` of the product formula, as
/// `(i, c, 1 / (c_t(i) - c))`.
fn product_factors(t: &StdTableau) -> Vec<(usize, i64, Rational)> {
    let cs = content_set(t.n());
    let mut out = Vec::new();
    for (i, &ct) in t.contents().iter().enumerate() {
        for &c in &cs {
            if c != ct {
                out.push((i + 1, c, Rational::new(1, ct - c)));
            }
        }
    }
    out
}

/// `E_t` by the Jucys-Murphy product formula, as an element of `TL_n`.
pub fn idempotent_by_products(t: &StdTableau) -> Result<TLElement> {
    let n = t.n();
    let jm: Vec<TLElement> = (1..=n).map(|i| jm_element(i, n)).collect::<Result<_>>()?;
    let mut acc = TLElement::one(n);
    for (i, c, s) in product_factors(t) {
        let f = jm[i - 1].add_scalar(&Rational::from_int(-c)).scale(&s);
        acc = acc.mul(&f)?;
    }
    Ok(acc)
}

/// `E_t` by the product formula, evaluated in the faithful cell representation.
pub fn idempotent_by_products_rep(t: &StdTableau) -> Result<CellRep> {
    let n = t.n();
    let jm: Vec<CellRep> = (1..=n).map(|i| jm_element(i, n).map(|x| CellRep::of(&x))).collect::<Result<_>>()?;
    let mut acc = CellRep::identity(n);
    for (i, c, s) in product_factors(t) {
        acc = acc.mul(&jm[i - 1].add_scalar(&Rational::from_int(-c)).scale(&s));
    }
    Ok(acc)
}

fn check_integral(x: &TLElement, p: u64) -> Result<()> {
    for (d, c) in x.terms() {
        if !is_p_integral(c, p)? {
            return Err(Error::IntegralityViolation { coeff: c.to_string(), context: d.to_string(), p });
        }
    }
    Ok(())
}

/// `sum_{s in cls} E'_s` over `Q`, after checking `p`-integrality.
pub fn class_idempotent(cls: &[StdTableau], p: u64, cache: &JwCache) -> Result<TLElement> {
    let first = cls.first().ok_or_else(|| Error::InvalidTableau("empty class".into()))?;
    let mut full = p_class(first, p)?;
    let mut given = cls.to_vec();
    full.sort();
    given.sort();
    if full != given {
        return Err(Error::InvalidTableau(format!("{first} and its companions do not form a full {p}-class")));
    }
    let mut acc = TLElement::zero(first.n(), Ring::Q);
    for s in cls {
        acc = acc.add(&seminormal_idempotent(s, cache))?;
    }
    check_integral(&acc, p)?;
    Ok(acc)
}

/// The tableaux `t_m` for `m` in the index set, in descending order of `m`.
pub fn index_tableaux(n: usize, p: u64) -> Result<Vec<StdTableau>> {
    index_set_in(n, p)?.iter().map(|e| tableau_from_index(e.m, n, p)).collect()
}

/// `pJW_n = sum_{m in I_n} E'_{t_m}` over `Q`, after checking `p`-integrality.
pub fn p_jones_wenzl_direct(n: usize, p: u64, cache: &JwCache) -> Result<TLElement> {
    let mut acc = TLElement::zero(n, Ring::Q);
    for t in index_tableaux(n, p)? {
        acc = acc.add(&seminormal_idempotent(&t, cache))?;
    }
    check_integral(&acc, p)?;
    Ok(acc)
}
