//! Checks the defining relations of the integral KLR algebra on the
//! seminormal representation, as exact operator identities on both sides.
//!
//! The quiver is the cyclic one on `Z/p`; [`Orientation::Ascending`] has an
//! arrow `i -> i+1`, which is what the seminormal coefficients realize. The
//! other orientation is kept so tests can confirm it fails.

use serde_json::json;

use super::action::KlrContext;
use super::operator::{SeminormalOperator, Side};
use crate::arith::Rational;
use crate::combin::ResidueSeq;
use crate::error::Result;
use crate::report::Report;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Orientation {
    Ascending,
    Descending,
}

impl Orientation {
    /// Whether the quiver has an arrow `a -> b`.
    fn arrow(self, a: u64, b: u64, p: u64) -> bool {
        match self {
            Orientation::Ascending => b == (a + 1) % p,
            Orientation::Descending => a == (b + 1) % p,
        }
    }
}

fn side_name(side: Side) -> &'static str {
    match side {
        Side::Left => "left",
        Side::Right => "right",
    }
}

/// Compares two operators and records the first differing basis pair.
fn expect_eq(report: &mut Report, lhs: &SeminormalOperator, rhs: &SeminormalOperator, what: String) {
    if let Some((s, t)) = lhs.counterexample(rhs) {
        let got = lhs.eval_pair(&s, &t).expect("basis pair");
        let want = rhs.eval_pair(&s, &t).expect("basis pair");
        report.fail(json!({
            "relation": what,
            "side": side_name(lhs.side()),
            "s": s.to_string(),
            "t": t.to_string(),
            "got": format!("{got:?}"),
            "want": format!("{want:?}"),
        }));
    }
}

struct Gens {
    side: Side,
    e: Vec<(ResidueSeq, SeminormalOperator)>,
    y: Vec<SeminormalOperator>,
    psi: Vec<SeminormalOperator>,
}

impl Gens {
    fn new(ctx: &KlrContext, side: Side) -> Result<Gens> {
        let e =
            ctx.residue_sequences().into_iter().map(|i| ctx.act_e(&i, side).map(|o| (i, o))).collect::<Result<_>>()?;
        let y = (1..=ctx.n).map(|l| ctx.act_y(l, side)).collect::<Result<_>>()?;
        let psi = (1..ctx.n).map(|k| ctx.act_psi(k, side)).collect::<Result<_>>()?;
        Ok(Gens { side, e, y, psi })
    }

    fn y(&self, l: usize) -> &SeminormalOperator {
        &self.y[l - 1]
    }

    fn psi(&self, k: usize) -> &SeminormalOperator {
        &self.psi[k - 1]
    }

    fn e_of(&self, ctx: &KlrContext, i: &ResidueSeq) -> SeminormalOperator {
        match self.e.iter().find(|(j, _)| j == i) {
            Some((_, o)) => o.clone(),
            None => ctx.zero(self.side),
        }
    }
}

/// Number of pairs `(k, i)` with `e(i)` nonzero where the `psi_k^2`
/// relation takes one of its `+p` forms.
pub fn plus_p_cases(ctx: &KlrContext, orientation: Orientation) -> usize {
    let p = ctx.p;
    let mut count = 0;
    for i in ctx.residue_sequences() {
        for k in 1..ctx.n {
            let (a, b) = (i.residues[k - 1], i.residues[k]);
            if (orientation.arrow(a, b, p) && b == 0) || (orientation.arrow(b, a, p) && a == 0) {
                count += 1;
            }
        }
    }
    count
}

/// Every relation, on both sides, for the canonical orientation.
pub fn klr_relations_check(n: usize, p: u64) -> Result<Vec<Report>> {
    klr_relations_check_oriented(n, p, Orientation::Ascending)
}

pub fn klr_relations_check_oriented(n: usize, p: u64, orientation: Orientation) -> Result<Vec<Report>> {
    let ctx = KlrContext::new(n, p)?;
    let left = Gens::new(&ctx, Side::Left)?;
    let right = Gens::new(&ctx, Side::Right)?;
    let mut reports = Vec::new();
    let r = |name: &str| Report::new(name, n, p);

    let mut idem = r("idempotents_orthogonal");
    let mut unit = r("idempotents_sum_to_one");
    let mut first = r("e_vanishes_unless_i1_is_0");
    let mut y1 = r("y1_e_is_zero");
    let mut ye = r("y_commutes_with_e");
    let mut yy = r("y_commute");
    let mut psi_e = r("psi_e_exchange");
    let mut psi_y = r("psi_y_exchange");
    let mut psi_y_far = r("psi_y_far_commute");
    let mut psi_far = r("psi_far_commute");
    let mut square = r("psi_squared");
    let mut braid = r("braid");

    for g in [&left, &right] {
        let side = g.side;
        let mut total = ctx.zero(side);
        for (i, ei) in &g.e {
            total = total.add(ei);
            for (j, ej) in &g.e {
                let want = if i == j { ei.clone() } else { ctx.zero(side) };
                expect_eq(&mut idem, &ei.mul(ej), &want, format!("e({i:?}) e({j:?})"));
            }
            let mut shifted = i.clone();
            shifted.residues[0] = (shifted.residues[0] + 1) % p;
            expect_eq(&mut first, &ctx.act_e(&shifted, side)?, &ctx.zero(side), format!("e({shifted:?})"));
            expect_eq(&mut y1, &g.y(1).mul(ei), &ctx.zero(side), format!("y1 e({i:?})"));
            for l in 1..=n {
                expect_eq(&mut ye, &g.y(l).mul(ei), &ei.mul(g.y(l)), format!("y{l} e({i:?})"));
            }
        }
        expect_eq(&mut unit, &total, &ctx.identity(side), "sum of e(i)".into());
        for l in 1..=n {
            for m in 1..=n {
                expect_eq(&mut yy, &g.y(l).mul(g.y(m)), &g.y(m).mul(g.y(l)), format!("y{l} y{m}"));
            }
        }
        for k in 1..n {
            for l in 1..=n {
                if l != k && l != k + 1 {
                    expect_eq(&mut psi_y_far, &g.psi(k).mul(g.y(l)), &g.y(l).mul(g.psi(k)), format!("psi{k} y{l}"));
                }
            }
            for m in 1..n {
                if k.abs_diff(m) > 1 {
                    expect_eq(&mut psi_far, &g.psi(k).mul(g.psi(m)), &g.psi(m).mul(g.psi(k)), format!("psi{k} psi{m}"));
                }
            }
            for (i, ei) in &g.e {
                let (a, b) = (i.residues[k - 1], i.residues[k]);
                let swapped = g.e_of(&ctx, &i.swap(k));
                expect_eq(&mut psi_e, &g.psi(k).mul(ei), &swapped.mul(g.psi(k)), format!("psi{k} e({i:?})"));

                let delta = if a == b { ei.clone() } else { ctx.zero(side) };
                expect_eq(
                    &mut psi_y,
                    &g.psi(k).mul(g.y(k + 1)).mul(ei),
                    &g.y(k).mul(g.psi(k)).mul(ei).add(&delta),
                    format!("psi{k} y{} e({i:?})", k + 1),
                );
                expect_eq(
                    &mut psi_y,
                    &g.y(k + 1).mul(g.psi(k)).mul(ei),
                    &g.psi(k).mul(g.y(k)).mul(ei).add(&delta),
                    format!("y{} psi{k} e({i:?})", k + 1),
                );

                let pp = Rational::from_int(p as i64);
                let rhs = if a == b {
                    ctx.zero(side)
                } else if orientation.arrow(a, b, p) && b != 0 {
                    g.y(k).sub(g.y(k + 1)).mul(ei)
                } else if orientation.arrow(a, b, p) {
                    g.y(k).sub(g.y(k + 1)).add_scalar(&pp).mul(ei)
                } else if orientation.arrow(b, a, p) && a != 0 {
                    g.y(k + 1).sub(g.y(k)).mul(ei)
                } else if orientation.arrow(b, a, p) {
                    g.y(k + 1).sub(g.y(k)).add_scalar(&pp).mul(ei)
                } else {
                    ei.clone()
                };
                expect_eq(&mut square, &g.psi(k).mul(g.psi(k)).mul(ei), &rhs, format!("psi{k}^2 e({i:?})"));

                if k + 1 < n {
                    let c = i.residues[k + 1];
                    let lhs = g
                        .psi(k)
                        .mul(g.psi(k + 1))
                        .mul(g.psi(k))
                        .sub(&g.psi(k + 1).mul(g.psi(k)).mul(g.psi(k + 1)))
                        .mul(ei);
                    let rhs = if c == a && orientation.arrow(a, b, p) {
                        ei.scale(&-Rational::one())
                    } else if c == a && orientation.arrow(b, a, p) {
                        ei.clone()
                    } else {
                        ctx.zero(side)
                    };
                    expect_eq(&mut braid, &lhs, &rhs, format!("braid at {k} e({i:?})"));
                }
            }
        }
    }
    reports.extend([idem, unit, first, y1, ye, yy, psi_e, psi_y, psi_y_far, psi_far, square, braid]);
    Ok(reports)
}

/// A report that the `+p` forms of the `psi_k^2` relation were reached.
pub fn plus_p_report(n: usize, p: u64) -> Result<Report> {
    let ctx = KlrContext::new(n, p)?;
    let hits = plus_p_cases(&ctx, Orientation::Ascending);
    let mut rep = Report::new("psi_squared_plus_p_exercised", n, p);
    if hits == 0 {
        rep.fail(json!({ "hits": 0 }));
    }
    Ok(rep)
}
