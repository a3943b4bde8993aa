//! Linear operators on `TL_n` over `Q`, given by their action on the basis
//! `{f_st}` from one side.
//!
//! A left operator `X` satisfies `X f_sa = sum_u x_us f_ua` with coefficients
//! independent of `a`; a right operator acts on the second index in the same
//! way. Either kind is therefore a sparse square matrix over the tableaux,
//! stored by columns: column `s` lists the image of `f_s?` (left) or `f_?s`
//! (right). Evaluating on a basis pair reads one column, so comparing columns
//! is the same as comparing the two operators on every basis pair.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::basis::{FBasis, FVector};
use crate::arith::Rational;
use crate::combin::StdTableau;
use crate::error::{Error, Result};
use crate::par::{self, Exec};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Side {
    Left,
    Right,
}

pub type Column = Vec<(usize, Rational)>;

#[derive(Clone)]
pub struct SeminormalOperator {
    side: Side,
    basis: Arc<FBasis>,
    cols: Vec<Column>,
}

fn normalize(mut col: Column) -> Column {
    col.sort_by_key(|e| e.0);
    let mut out: Column = Vec::with_capacity(col.len());
    for (i, c) in col {
        match out.last_mut() {
            Some(last) if last.0 == i => last.1 += c,
            _ => out.push((i, c)),
        }
    }
    out.retain(|e| !e.1.is_zero());
    out
}

impl SeminormalOperator {
    pub fn from_columns(side: Side, basis: Arc<FBasis>, cols: Vec<Column>) -> SeminormalOperator {
        assert_eq!(cols.len(), basis.len(), "one column per tableau");
        SeminormalOperator { side, basis, cols: cols.into_iter().map(normalize).collect() }
    }

    /// Builds column `j` as `f(j)` for every tableau index.
    pub fn from_fn(
        side: Side,
        basis: Arc<FBasis>,
        exec: Exec,
        f: impl Fn(usize) -> Column + Sync,
    ) -> SeminormalOperator {
        let cols = par::map_range(exec, 0..basis.len(), |j| normalize(f(j)));
        SeminormalOperator { side, basis, cols }
    }

    pub fn zero(side: Side, basis: Arc<FBasis>) -> SeminormalOperator {
        let cols = vec![Vec::new(); basis.len()];
        SeminormalOperator { side, basis, cols }
    }

    pub fn identity(side: Side, basis: Arc<FBasis>) -> SeminormalOperator {
        let cols = (0..basis.len()).map(|j| vec![(j, Rational::one())]).collect();
        SeminormalOperator { side, basis, cols }
    }

    pub fn diagonal(side: Side, basis: Arc<FBasis>, diag: Vec<Rational>) -> SeminormalOperator {
        let cols = diag.into_iter().enumerate().map(|(j, c)| vec![(j, c)]).collect();
        SeminormalOperator::from_columns(side, basis, cols)
    }

    /// Projection onto the span of the given tableaux.
    pub fn projection(side: Side, basis: Arc<FBasis>, support: &[StdTableau]) -> Result<SeminormalOperator> {
        let mut diag = vec![Rational::zero(); basis.len()];
        for t in support {
            let j = basis.index_of(t).ok_or_else(|| Error::InvalidTableau(format!("{t} has size {}", t.n())))?;
            diag[j] = Rational::one();
        }
        Ok(SeminormalOperator::diagonal(side, basis, diag))
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn basis(&self) -> &Arc<FBasis> {
        &self.basis
    }

    pub fn n(&self) -> usize {
        self.basis.n()
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &[(usize, Rational)] {
        &self.cols[j]
    }

    pub fn entry(&self, i: usize, j: usize) -> Rational {
        self.cols[j].iter().find(|e| e.0 == i).map(|e| e.1.clone()).unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    /// Tableaux whose column is nonzero.
    pub fn support(&self) -> Vec<StdTableau> {
        (0..self.dim()).filter(|&j| !self.cols[j].is_empty()).map(|j| self.basis.tableau(j).clone()).collect()
    }

    /// The diagonal projection onto some set of tableaux, if that is what
    /// this operator is.
    pub fn as_projection(&self) -> Option<Vec<StdTableau>> {
        let mut out = Vec::new();
        for (j, col) in self.cols.iter().enumerate() {
            match col.as_slice() {
                [] => {}
                [(i, c)] if *i == j && c.is_one() => out.push(self.basis.tableau(j).clone()),
                _ => return None,
            }
        }
        Some(out)
    }

    fn check(&self, o: &SeminormalOperator) {
        assert_eq!(self.side, o.side, "operators act on different sides");
        assert_eq!(self.n(), o.n(), "operators act on different algebras");
    }

    fn zip(&self, o: &SeminormalOperator, sign: &Rational) -> SeminormalOperator {
        self.check(o);
        let cols = self
            .cols
            .iter()
            .zip(&o.cols)
            .map(|(a, b)| normalize(a.iter().cloned().chain(b.iter().map(|(i, c)| (*i, c * sign))).collect()))
            .collect();
        SeminormalOperator { side: self.side, basis: self.basis.clone(), cols }
    }

    pub fn add(&self, o: &SeminormalOperator) -> SeminormalOperator {
        self.zip(o, &Rational::one())
    }

    pub fn sub(&self, o: &SeminormalOperator) -> SeminormalOperator {
        self.zip(o, &-Rational::one())
    }

    pub fn scale(&self, k: &Rational) -> SeminormalOperator {
        let cols = self.cols.iter().map(|c| normalize(c.iter().map(|(i, x)| (*i, x * k)).collect())).collect();
        SeminormalOperator { side: self.side, basis: self.basis.clone(), cols }
    }

    /// `self + k * 1`.
    pub fn add_scalar(&self, k: &Rational) -> SeminormalOperator {
        self.add(&SeminormalOperator::identity(self.side, self.basis.clone()).scale(k))
    }

    /// The operator of the algebra product `self * o`. On the left `o` acts
    /// first, on the right `self` acts first.
    pub fn mul(&self, o: &SeminormalOperator) -> SeminormalOperator {
        self.mul_with(o, Exec::default())
    }

    pub fn mul_with(&self, o: &SeminormalOperator, exec: Exec) -> SeminormalOperator {
        self.check(o);
        let (first, second) = match self.side {
            Side::Left => (o, self),
            Side::Right => (self, o),
        };
        // Thread fan-out costs more than it saves on small bases.
        let exec = if self.dim() < 128 { Exec::Sequential } else { exec };
        let cols = par::map_range(exec, 0..self.dim(), |j| {
            let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
            for (k, c) in &first.cols[j] {
                for (i, d) in &second.cols[*k] {
                    *acc.entry(*i).or_insert_with(Rational::zero) += c * d;
                }
            }
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
        });
        SeminormalOperator { side: self.side, basis: self.basis.clone(), cols }
    }

    /// Applies the operator to a vector: `X v` on the left, `v X` on the right.
    pub fn apply(&self, v: &FVector) -> Result<FVector> {
        let mut out = FVector::zero();
        for ((s, t), c) in &v.coords {
            let moving = if self.side == Side::Left { s } else { t };
            let j = self.basis.index_of(moving).ok_or(Error::SizeMismatch(moving.n(), self.n()))?;
            for (i, x) in &self.cols[j] {
                let u = self.basis.tableau(*i).clone();
                let (a, b) = if self.side == Side::Left { (u, t.clone()) } else { (s.clone(), u) };
                out.add_term(a, b, c * x);
            }
        }
        Ok(out)
    }

    /// The image of the basis vector `f_st`.
    pub fn eval_pair(&self, s: &StdTableau, t: &StdTableau) -> Result<FVector> {
        self.apply(&FVector::basis(s, t)?)
    }

    /// A basis pair on which the two operators differ, if any.
    pub fn counterexample(&self, o: &SeminormalOperator) -> Option<(StdTableau, StdTableau)> {
        self.check(o);
        let j = (0..self.dim()).find(|&j| self.cols[j] != o.cols[j])?;
        let moving = self.basis.tableau(j).clone();
        let other =
            self.basis.tableaux().iter().find(|a| a.shape() == moving.shape()).expect("moving is in the basis").clone();
        Some(match self.side {
            Side::Left => (moving, other),
            Side::Right => (other, moving),
        })
    }

    /// The same coefficients acting from the other side.
    pub fn transpose_side(&self) -> SeminormalOperator {
        let side = match self.side {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        };
        SeminormalOperator { side, basis: self.basis.clone(), cols: self.cols.clone() }
    }
}

impl PartialEq for SeminormalOperator {
    fn eq(&self, o: &SeminormalOperator) -> bool {
        self.side == o.side && self.n() == o.n() && self.cols == o.cols
    }
}

impl Eq for SeminormalOperator {}

impl fmt::Debug for SeminormalOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:?} operator on TL_{}", self.side, self.n())?;
        for (j, col) in self.cols.iter().enumerate() {
            if col.is_empty() {
                continue;
            }
            let terms: Vec<String> = col.iter().map(|(i, c)| format!("{c} {}", self.basis.tableau(*i))).collect();
            writeln!(f, "  {} -> {}", self.basis.tableau(j), terms.join(" + "))?;
        }
        Ok(())
    }
}
