//! Cell modules `Delta(lambda)` spanned by half diagrams.
//!
//! The half diagram `C_t` has `n` lower points and `l1 - l2` upper points,
//! all of them ends of through strands. Elements act on the right: `C_t * D`
//! is `C_t` stacked on top of `D`; if the result acquires a cap among its
//! upper points it is zero in the cell module.

use std::collections::BTreeMap;

use super::element::TLElement;
use super::matching::{compose_unchecked, End, PlanarMatching};
use crate::arith::Rational;
use crate::combin::{all_tableaux, standard_tableaux, two_column_partitions, StdTableau, TwoColPartition};
use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::par::{self, Exec};

/// A half diagram is a matching with `n` lower points and its through
/// strands ending on the upper side.
pub type HalfDiagram = PlanarMatching;

/// Column-1 entries raise a through line, column-2 entries cup to the
/// nearest vacant line on their left.
pub fn half_diagram(t: &StdTableau) -> HalfDiagram {
    let mut stack = Vec::new();
    let mut pairs = Vec::new();
    for (i, &c) in t.columns().iter().enumerate() {
        if c == 1 {
            stack.push(i);
        } else {
            let j = stack.pop().expect("ballot sequence");
            pairs.push((End::Bottom(j), End::Bottom(i)));
        }
    }
    for (k, &j) in stack.iter().enumerate() {
        pairs.push((End::Bottom(j), End::Top(k)));
    }
    PlanarMatching::from_pairs(stack.len(), t.n(), &pairs).expect("half diagram is planar")
}

/// Inverse of [`half_diagram`]; `None` when two upper points are joined.
pub fn tableau_of_half(d: &HalfDiagram) -> Option<StdTableau> {
    if d.has_top_cap() {
        return None;
    }
    let mut cols = vec![1u8; d.bottom()];
    for (a, b) in d.pairs() {
        if let (End::Bottom(x), End::Bottom(y)) = (a, b) {
            cols[x.max(y)] = 2;
        }
    }
    Some(StdTableau::from_columns_unchecked(cols))
}

/// `C_t * D` as `(tableau, loops)`, or `None` when it leaves the cell module.
pub fn act_on_half(t_half: &HalfDiagram, d: &PlanarMatching) -> Option<(StdTableau, u32)> {
    let (m, loops) = compose_unchecked(t_half, d);
    tableau_of_half(&m).map(|u| (u, loops))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CellVector {
    pub shape: TwoColPartition,
    pub coords: BTreeMap<StdTableau, Rational>,
}

impl CellVector {
    pub fn zero(shape: TwoColPartition) -> CellVector {
        CellVector { shape, coords: BTreeMap::new() }
    }

    pub fn basis(t: &StdTableau) -> CellVector {
        let mut v = CellVector::zero(t.shape());
        v.coords.insert(t.clone(), Rational::one());
        v
    }

    pub fn coeff(&self, t: &StdTableau) -> Rational {
        self.coords.get(t).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, t: StdTableau, c: Rational) {
        let e = self.coords.entry(t).or_insert_with(Rational::zero);
        *e += c;
        self.coords.retain(|_, c| !c.is_zero());
    }

    pub fn add(&self, o: &CellVector) -> CellVector {
        let mut out = self.clone();
        for (t, c) in &o.coords {
            out.add_term(t.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> CellVector {
        let coords = self.coords.iter().map(|(t, c)| (t.clone(), c * s)).filter(|(_, c)| !c.is_zero()).collect();
        CellVector { shape: self.shape, coords }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }
}

/// Right action of an element on a cell vector.
pub fn cell_action(v: &CellVector, a: &TLElement) -> Result<CellVector> {
    if v.shape.n() != a.n() {
        return Err(Error::SizeMismatch(v.shape.n(), a.n()));
    }
    let mut out = CellVector::zero(v.shape);
    for (t, c) in &v.coords {
        let h = half_diagram(t);
        for (d, x) in a.terms() {
            if let Some((u, loops)) = act_on_half(&h, d) {
                out.add_term(u, (c * x).mul_pow2(loops));
            }
        }
    }
    Ok(out)
}

/// Matrix of the right action on `Delta(lambda)` in the half-diagram basis,
/// rows indexed by `standard_tableaux(lambda)`: row `t` holds `C_t * a`.
pub fn cell_matrix(a: &TLElement, lambda: TwoColPartition) -> QMatrix {
    let basis = standard_tableaux(lambda);
    let index: BTreeMap<&StdTableau, usize> = basis.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut m = QMatrix::zeros(basis.len(), basis.len());
    for (i, t) in basis.iter().enumerate() {
        let h = half_diagram(t);
        for (d, x) in a.terms() {
            if let Some((u, loops)) = act_on_half(&h, d) {
                m.add_at(i, index[&u], &x.mul_pow2(loops));
            }
        }
    }
    m
}

/// Direct sum of all cell representations; faithful over `Q`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CellRep {
    pub n: usize,
    pub blocks: Vec<(TwoColPartition, QMatrix)>,
}

impl CellRep {
    pub fn of(a: &TLElement) -> CellRep {
        CellRep::of_with(a, Exec::default())
    }

    pub fn of_with(a: &TLElement, exec: Exec) -> CellRep {
        let shapes = two_column_partitions(a.n());
        let blocks = par::map(exec, &shapes, |&l| (l, cell_matrix(a, l)));
        CellRep { n: a.n(), blocks }
    }

    pub fn identity(n: usize) -> CellRep {
        let blocks =
            two_column_partitions(n).into_iter().map(|l| (l, QMatrix::identity(standard_tableaux(l).len()))).collect();
        CellRep { n, blocks }
    }

    fn zip(&self, o: &CellRep, f: impl Fn(&QMatrix, &QMatrix) -> QMatrix) -> CellRep {
        assert_eq!(self.n, o.n);
        CellRep { n: self.n, blocks: self.blocks.iter().zip(&o.blocks).map(|((l, a), (_, b))| (*l, f(a, b))).collect() }
    }

    /// Representation of the product `self * o`.
    pub fn mul(&self, o: &CellRep) -> CellRep {
        self.zip(o, QMatrix::mul)
    }

    pub fn add(&self, o: &CellRep) -> CellRep {
        self.zip(o, QMatrix::add)
    }

    pub fn sub(&self, o: &CellRep) -> CellRep {
        self.zip(o, QMatrix::sub)
    }

    pub fn scale(&self, s: &Rational) -> CellRep {
        CellRep { n: self.n, blocks: self.blocks.iter().map(|(l, m)| (*l, m.scale(s))).collect() }
    }

    pub fn add_scalar(&self, s: &Rational) -> CellRep {
        CellRep { n: self.n, blocks: self.blocks.iter().map(|(l, m)| (*l, m.add_scalar(s))).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|(_, m)| m.is_zero())
    }

    pub fn block(&self, lambda: TwoColPartition) -> &QMatrix {
        &self.blocks.iter().find(|(l, _)| *l == lambda).expect("shape present").1
    }
}

/// The bilinear form `<C_s, C_t>`: `2^loops` when `C_s` stacked on the
/// reflection of `C_t` is the identity on the through strands, else 0.
pub fn gram_entry(s: &StdTableau, t: &StdTableau) -> Rational {
    let (m, loops) = compose_unchecked(&half_diagram(s), &half_diagram(t).star());
    if m == PlanarMatching::identity(m.top()) {
        Rational::one().mul_pow2(loops)
    } else {
        Rational::zero()
    }
}

pub fn gram_matrix(lambda: TwoColPartition) -> QMatrix {
    let basis = standard_tableaux(lambda);
    let mut g = QMatrix::zeros(basis.len(), basis.len());
    for (i, s) in basis.iter().enumerate() {
        for (j, t) in basis.iter().enumerate() {
            g.set(i, j, gram_entry(s, t));
        }
    }
    g
}

pub fn bilinear(u: &CellVector, v: &CellVector) -> Rational {
    let mut acc = Rational::zero();
    for (s, a) in &u.coords {
        for (t, b) in &v.coords {
            let g = gram_entry(s, t);
            if !g.is_zero() {
                acc += a * b * g;
            }
        }
    }
    acc
}

/// `C_{st}`: the reflection of `C_s` stacked on `C_t`.
pub fn cellular_basis_element(s: &StdTableau, t: &StdTableau) -> Result<PlanarMatching> {
    if s.shape() != t.shape() {
        return Err(Error::ShapeMismatch);
    }
    let (m, loops) = compose_unchecked(&half_diagram(s).star(), &half_diagram(t));
    debug_assert_eq!(loops, 0);
    Ok(m)
}

/// Number of diagrams of `TL_n`, counted through the cellular basis.
pub fn cellular_dimension(n: usize) -> usize {
    let tabs = all_tableaux(n);
    two_column_partitions(n)
        .into_iter()
        .map(|l| {
            let k = tabs.iter().filter(|t| t.shape() == l).count();
            k * k
        })
        .sum()
}
