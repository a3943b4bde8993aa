//! Diamonds, the embedding of the small algebra they generate, and its
//! Jucys-Murphy elements.
//!
//! With `n = (p-1) + p n2 + r` the class of the one-column tableau consists
//! of tableaux constant on the blocks `B_i = [ip, (i+1)p - 1]`, and the
//! collapse map `f` records the column of each block. The diamond `U_i`
//! exchanges `B_i` and `B_{i+1}`; it is `e psi_{S_i} e` where `S_i` is the
//! diamond-shaped reduced word of that block swap.

use serde_json::json;

use super::action::KlrContext;
use super::operator::{Column, SeminormalOperator, Side};
use crate::arith::Rational;
use crate::combin::{all_tableaux, collapse_map, dominance_compare, p_class, Dominance, RadixLevel, StdTableau};
use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::par;
use crate::report::Report;
use crate::tlcore::{generator_words, jm_element, transposition_word, word_element, TLElement};
use crate::wenzl::{content_set, JwCache};

/// The reduced word `S_i`: rows `I-j, I-j+2, ..., I+j` for `j` rising to
/// `p-1` and falling back, with `I = (i+1)p - 1`.
pub fn diamond_word(i: usize, p: u64) -> Vec<usize> {
    let p = p as usize;
    let centre = (i + 1) * p - 1;
    let rows = (0..p).chain((0..p - 1).rev());
    rows.flat_map(|j| (0..=j).map(move |q| centre - j + 2 * q)).collect()
}

/// `prod_{j=1}^{p-1} ((rho+1)p - j) / (rho p - j)`.
pub fn x_factor(rho: i64, p: u64) -> Result<Rational> {
    if rho < 1 {
        return Err(Error::IndexRange { index: rho.max(0) as usize, lo: 1, hi: usize::MAX });
    }
    let p = p as i64;
    let mut x = Rational::one();
    for j in 1..p {
        x *= Rational::new((rho + 1) * p - j, rho * p - j);
    }
    Ok(x)
}

/// The cabled image of `u_i`: `S_i` read as a word in the generators of `TL_n`.
pub fn iota_cab(i: usize, n: usize, p: u64) -> Result<TLElement> {
    let n2 = RadixLevel::of(n, p)?.n2;
    if i == 0 || i >= n2 {
        return Err(Error::IndexRange { index: i, lo: 1, hi: n2.saturating_sub(1) });
    }
    word_element(&diamond_word(i, p), n)
}

/// The diamonds `U_1, ..., U_{n2-1}` and the truncating idempotent `e` on
/// one side.
#[derive(Clone, Debug)]
pub struct DiamondFamily {
    pub ctx: KlrContext,
    pub side: Side,
    pub level: RadixLevel,
    pub e: SeminormalOperator,
    diamonds: Vec<SeminormalOperator>,
}

impl DiamondFamily {
    pub fn new(ctx: &KlrContext, side: Side) -> Result<DiamondFamily> {
        let level = RadixLevel::of(ctx.n, ctx.p)?;
        let e = ctx.e_class(side);
        let idx: Vec<usize> = (1..level.n2.max(1)).collect();
        let diamonds = par::map(ctx.exec, &idx, |&i| {
            let w = ctx.psi_word(&diamond_word(i, ctx.p), side)?;
            Ok(e.mul(&w).mul(&e))
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
        Ok(DiamondFamily { ctx: ctx.clone(), side, level, e, diamonds })
    }

    pub fn n2(&self) -> usize {
        self.level.n2
    }

    pub fn diamond(&self, i: usize) -> Result<&SeminormalOperator> {
        if i == 0 || i >= self.n2() {
            return Err(Error::IndexRange { index: i, lo: 1, hi: self.n2().saturating_sub(1) });
        }
        Ok(&self.diamonds[i - 1])
    }

    /// `U_i - e`, the image of `s_i - 1`.
    fn reflection(&self, i: usize) -> Result<SeminormalOperator> {
        Ok(self.diamond(i)?.sub(&self.e))
    }

    /// The image of `x` in `TL_{n2}`: every diagram goes to the product of
    /// diamonds along its shortest word, the unit to `e`.
    pub fn iota_klr(&self, x: &TLElement) -> Result<SeminormalOperator> {
        if x.n() != self.n2() {
            return Err(Error::SizeMismatch(x.n(), self.n2()));
        }
        let words = generator_words(self.n2());
        let mut acc = self.ctx.zero(self.side);
        for (d, c) in x.terms() {
            let mut term = self.e.clone();
            for &k in &words[d] {
                term = term.mul(self.diamond(k)?);
            }
            acc = acc.add(&term.scale(c));
        }
        Ok(acc)
    }

    /// `L_i = sum_{j<i} prod over the word of (j, i) of (U_k - e)`.
    pub fn small_jm(&self, i: usize) -> Result<SeminormalOperator> {
        if i == 0 || i > self.n2() {
            return Err(Error::IndexRange { index: i, lo: 1, hi: self.n2() });
        }
        let mut acc = self.ctx.zero(self.side);
        for j in 1..i {
            let mut term = self.e.clone();
            for k in transposition_word(j, i) {
                term = term.mul(&self.reflection(k)?);
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// The image of `E_s`, `s` of size `n2`, by the product formula in the
    /// small Jucys-Murphy elements.
    pub fn iota_idempotent_by_products(&self, s: &StdTableau) -> Result<SeminormalOperator> {
        if s.n() != self.n2() {
            return Err(Error::SizeMismatch(s.n(), self.n2()));
        }
        let cs = content_set(self.n2());
        let jm: Vec<SeminormalOperator> = (1..=self.n2()).map(|i| self.small_jm(i)).collect::<Result<_>>()?;
        let mut acc = self.e.clone();
        for (i, &ci) in s.contents().iter().enumerate() {
            for &c in &cs {
                if c != ci {
                    let f = jm[i].sub(&self.e.scale(&Rational::from_int(c))).scale(&Rational::new(1, ci - c));
                    acc = acc.mul(&f);
                }
            }
        }
        Ok(acc)
    }
}

/// The class of the one-column tableau of size `n`.
pub fn main_class(n: usize, p: u64) -> Result<Vec<StdTableau>> {
    p_class(&StdTableau::one_column(n), p)
}

/// `{t in class : f(t) = s}`.
pub fn iota_on_idempotents(s: &StdTableau, n: usize, p: u64) -> Result<Vec<StdTableau>> {
    let mut out = Vec::new();
    for t in main_class(n, p)? {
        if &collapse_map(&t, p)?.0 == s {
            out.push(t);
        }
    }
    Ok(out)
}

/// How `U_i` acts on the line of a class tableau.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DiamondCase {
    /// `i` and `i+1` share a column of `f(s)`: `U_i` kills it.
    SameColumn,
    /// `i` and `i+1` share a row of `f(s)`: eigenvalue 2.
    SameRow,
    /// The blocks can be exchanged; `up` dominates `down`.
    Pair { down: StdTableau, up: StdTableau, rho: i64 },
}

/// `s` with the columns of blocks `B_i` and `B_{i+1}` exchanged.
fn swap_blocks(s: &StdTableau, i: usize, p: usize) -> Result<StdTableau> {
    let mut cols = s.columns().to_vec();
    for q in 0..p {
        cols.swap(i * p + q - 1, (i + 1) * p + q - 1);
    }
    StdTableau::new(cols)
}

pub fn diamond_case(s: &StdTableau, i: usize, p: u64) -> Result<DiamondCase> {
    let f = collapse_map(s, p)?.0;
    if f.column(i) == f.column(i + 1) {
        return Ok(DiamondCase::SameColumn);
    }
    let c = f.contents();
    if f.column(i) == 1 && c[i - 1] + 1 == c[i] {
        return Ok(DiamondCase::SameRow);
    }
    let t = swap_blocks(s, i, p as usize)?;
    let (up, down) = match dominance_compare(s, &t)? {
        Dominance::Greater => (s.clone(), t),
        Dominance::Less => (t, s.clone()),
        _ => return Err(Error::InvalidTableau(format!("{s} and its block swap are not comparable"))),
    };
    let fu = collapse_map(&up, p)?.0.contents();
    Ok(DiamondCase::Pair { down, up, rho: fu[i - 1] - fu[i] })
}

/// `U_i` from the closed forms: 0 off the class, 0 or 2 on a single line,
/// and on a pair `(down, up)`
///
/// ```text
/// left:  U f_down = (rho+1)/rho f_down + (rho^2-1)/(X rho^2) f_up,  U f_up = (rho-1)/rho f_up + X f_down
/// right: f_down U = (rho+1)/rho f_down + X (rho^2-1)/rho^2 f_up,    f_up U = (rho-1)/rho f_up + 1/X f_down
/// ```
pub fn diamond_closed_form(ctx: &KlrContext, i: usize, side: Side) -> Result<SeminormalOperator> {
    let basis = ctx.basis.clone();
    let mut cols: Vec<Column> = vec![Vec::new(); basis.len()];
    for s in main_class(ctx.n, ctx.p)? {
        let j = basis.index_of(&s).expect("class inside basis");
        match diamond_case(&s, i, ctx.p)? {
            DiamondCase::SameColumn => {}
            DiamondCase::SameRow => cols[j].push((j, Rational::from_int(2))),
            DiamondCase::Pair { down, up, rho } => {
                let x = x_factor(rho, ctx.p)?;
                let r = Rational::from_int(rho);
                let r2 = &r * &r;
                let (d, u) = (basis.index_of(&down).expect("in basis"), basis.index_of(&up).expect("in basis"));
                if j == d {
                    let off = match side {
                        Side::Left => (&r2 - &Rational::one()) / (&x * &r2),
                        Side::Right => &x * &(&r2 - &Rational::one()) / r2.clone(),
                    };
                    cols[j].push((d, (&r + &Rational::one()) / r.clone()));
                    cols[j].push((u, off));
                } else {
                    let off = match side {
                        Side::Left => x,
                        Side::Right => x.inv().expect("X is positive"),
                    };
                    cols[j].push((u, (&r - &Rational::one()) / r.clone()));
                    cols[j].push((d, off));
                }
            }
        }
    }
    Ok(SeminormalOperator::from_columns(side, basis, cols))
}

fn compare(report: &mut Report, got: &SeminormalOperator, want: &SeminormalOperator, what: String) {
    if let Some((s, t)) = got.counterexample(want) {
        report.fail(json!({
            "what": what,
            "s": s.to_string(),
            "t": t.to_string(),
            "got": format!("{:?}", got.eval_pair(&s, &t).expect("basis pair")),
            "want": format!("{:?}", want.eval_pair(&s, &t).expect("basis pair")),
        }));
    }
}

/// Composed diamonds against the closed forms on both sides, `M^2 = 2M` on
/// every block, and truncation to the class.
pub fn diamond_formula_check(n: usize, p: u64) -> Result<Vec<Report>> {
    let ctx = KlrContext::new(n, p)?;
    let mut forms = Report::new("diamond_closed_forms", n, p);
    let mut blocks = Report::new("diamond_blocks_square_to_twice", n, p);
    let mut outside = Report::new("diamond_vanishes_off_class", n, p);
    for side in [Side::Left, Side::Right] {
        let fam = DiamondFamily::new(&ctx, side)?;
        let class: Vec<usize> = fam.e.support().iter().map(|t| ctx.basis.index_of(t).expect("in basis")).collect();
        for i in 1..fam.n2() {
            let u = fam.diamond(i)?;
            compare(&mut forms, u, &diamond_closed_form(&ctx, i, side)?, format!("U{i} {side:?}"));
            for j in 0..ctx.basis.len() {
                let leaks = if class.contains(&j) {
                    u.column(j).iter().any(|(k, _)| !class.contains(k))
                } else {
                    !u.column(j).is_empty()
                };
                if leaks {
                    outside.fail(json!({ "diamond": i, "s": ctx.basis.tableau(j).to_string() }));
                }
            }
            for s in main_class(n, p)? {
                let idx: Vec<usize> = match diamond_case(&s, i, p)? {
                    DiamondCase::Pair { down, up, .. } => {
                        vec![ctx.basis.index_of(&down).unwrap(), ctx.basis.index_of(&up).unwrap()]
                    }
                    _ => vec![ctx.basis.index_of(&s).unwrap()],
                };
                let mut m = QMatrix::zeros(idx.len(), idx.len());
                for (a, &ja) in idx.iter().enumerate() {
                    for (b, &jb) in idx.iter().enumerate() {
                        m.set(a, b, u.entry(ja, jb));
                    }
                }
                if m.mul(&m) != m.scale(&Rational::from_int(2)) {
                    blocks.fail(json!({ "diamond": i, "s": s.to_string(), "block": format!("{m:?}") }));
                }
            }
        }
    }
    Ok(vec![forms, blocks, outside])
}

/// `U_i^2 = 2 U_i`, `U_i U_j U_i = U_i` for `|i-j| = 1`, far commutation.
pub fn diamond_tl_check(n: usize, p: u64) -> Result<Report> {
    let ctx = KlrContext::new(n, p)?;
    let mut rep = Report::new("diamond_tl_relations", n, p);
    for side in [Side::Left, Side::Right] {
        let fam = DiamondFamily::new(&ctx, side)?;
        let two = Rational::from_int(2);
        for i in 1..fam.n2() {
            let u = fam.diamond(i)?;
            compare(&mut rep, &u.mul(u), &u.scale(&two), format!("U{i}^2 {side:?}"));
            for j in 1..fam.n2() {
                let v = fam.diamond(j)?;
                if i.abs_diff(j) == 1 {
                    compare(&mut rep, &u.mul(v).mul(u), u, format!("U{i}U{j}U{i} {side:?}"));
                } else if i.abs_diff(j) > 1 {
                    compare(&mut rep, &u.mul(v), &v.mul(u), format!("U{i}U{j} {side:?}"));
                }
            }
        }
    }
    Ok(rep)
}

/// Rank of the images of all diagrams of `TL_{n2}`, restricted to the class
/// block where they live.
pub fn iota_image_rank(fam: &DiamondFamily) -> Result<(usize, usize)> {
    let words = generator_words(fam.n2());
    let class: Vec<usize> = fam.e.support().iter().map(|t| fam.ctx.basis.index_of(t).expect("in basis")).collect();
    let mut m = QMatrix::zeros(words.len(), class.len() * class.len());
    for (row, d) in words.keys().enumerate() {
        let op = fam.iota_klr(&TLElement::from_matching(*d))?;
        for (a, &ja) in class.iter().enumerate() {
            for (b, &jb) in class.iter().enumerate() {
                m.set(row, a * class.len() + b, op.entry(ja, jb));
            }
        }
    }
    Ok((m.rank(), words.len()))
}

/// Small Jucys-Murphy elements: content eigenvalues on the class, agreement
/// with the image of `L_i`, commutation, side symmetry, and the images of the
/// seminormal idempotents.
pub fn small_jm_check(n: usize, p: u64) -> Result<Vec<Report>> {
    let ctx = KlrContext::new(n, p)?;
    let left = DiamondFamily::new(&ctx, Side::Left)?;
    let right = DiamondFamily::new(&ctx, Side::Right)?;
    let n2 = left.n2();
    let class = main_class(n, p)?;
    let mut eig = Report::new("small_jm_eigenvalues", n, p);
    let mut dual = Report::new("small_jm_equals_image_of_jm", n, p);
    let mut comm = Report::new("small_jm_commute", n, p);
    let mut sym = Report::new("small_jm_side_symmetric", n, p);
    let mut idem = Report::new("small_jm_idempotents", n, p);
    let mut family = Report::new("small_jm_idempotent_family", n, p);

    for fam in [&left, &right] {
        let jms: Vec<SeminormalOperator> = (1..=n2).map(|i| fam.small_jm(i)).collect::<Result<_>>()?;
        for i in 1..=n2 {
            let l = &jms[i - 1];
            let diag = ctx
                .basis
                .tableaux()
                .iter()
                .map(|t| -> Result<Rational> {
                    if class.contains(t) {
                        Ok(Rational::from_int(collapse_map(t, p)?.0.contents()[i - 1]))
                    } else {
                        Ok(Rational::zero())
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            let want = SeminormalOperator::diagonal(fam.side, ctx.basis.clone(), diag);
            compare(&mut eig, l, &want, format!("L{i} {:?}", fam.side));
            for t in &class {
                let pt = SeminormalOperator::projection(fam.side, ctx.basis.clone(), std::slice::from_ref(t))?;
                let c = Rational::from_int(collapse_map(t, p)?.0.contents()[i - 1]);
                compare(&mut eig, &l.mul(&pt), &pt.scale(&c), format!("L{i} P_{t}"));
                compare(&mut eig, &pt.mul(l), &pt.scale(&c), format!("P_{t} L{i}"));
            }
            compare(&mut dual, l, &fam.iota_klr(&jm_element(i, n2)?)?, format!("L{i} {:?}", fam.side));
            for j in 1..=n2 {
                compare(&mut comm, &l.mul(&jms[j - 1]), &jms[j - 1].mul(l), format!("L{i} L{j}"));
            }
        }
        let mut total = ctx.zero(fam.side);
        for s in all_tableaux(n2) {
            let img = fam.iota_idempotent_by_products(&s)?;
            let fiber = iota_on_idempotents(&s, n, p)?;
            compare(
                &mut idem,
                &img,
                &SeminormalOperator::projection(fam.side, ctx.basis.clone(), &fiber)?,
                format!("E_{s}"),
            );
            compare(&mut family, &img.mul(&img), &img, format!("E_{s} squared"));
            total = total.add(&img);
        }
        compare(&mut family, &total, &fam.e, "sum of images".into());
    }
    for i in 1..=n2 {
        compare(&mut sym, &left.small_jm(i)?.transpose_side(), &right.small_jm(i)?, format!("L{i}"));
    }
    Ok(vec![eig, dual, comm, sym, idem, family])
}

/// Whether `E U_i E` and the cabled `E iota_cab(u_i) E` agree modulo `p`,
/// `E` the class idempotent. Reported, never asserted.
pub fn cab_agreement(n: usize, p: u64, cache: &JwCache) -> Result<Vec<Report>> {
    use super::elements::operator_to_element;
    use crate::tlcore::Ring;
    use crate::wenzl::class_idempotent;

    let ctx = KlrContext::new(n, p)?;
    let fam = DiamondFamily::new(&ctx, Side::Left)?;
    let e = class_idempotent(&main_class(n, p)?, p, cache)?;
    let mut out = Vec::new();
    for i in 1..fam.n2() {
        let mut rep = Report::new(format!("iota_cab_agrees_mod_p_U{i}"), n, p);
        let klr = operator_to_element(fam.diamond(i)?, cache)?;
        let cab = e.mul(&iota_cab(i, n, p)?)?.mul(&e)?;
        let ring = Ring::Fp(p);
        match (klr.to_ring(ring), cab.to_ring(ring)) {
            (Ok(a), Ok(b)) if a == b => {}
            (Ok(a), Ok(b)) => {
                rep.fail(json!({ "klr_terms": a.len(), "cab_terms": b.len(), "difference_terms": a.sub(&b)?.len() }))
            }
            (a, b) => rep.fail(json!({ "klr_integral": a.is_ok(), "cab_integral": b.is_ok() })),
        }
        out.push(rep);
    }
    Ok(out)
}
