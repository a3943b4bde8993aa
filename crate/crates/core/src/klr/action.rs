//! Seminormal actions of `e(i)`, `y_l` and `psi_k` on the basis `{f_st}`.
//!
//! For `t = s s_k` and `r = c_s(k) - c_s(k+1)` the coefficient `alpha` is 1
//! when `t` is standard and below `s` in dominance, `(r^2 - 1) / r^2` when it
//! is above, and 0 when `t` is not standard. With residues `i = i^s`,
//!
//! ```text
//! psi_k f_sa = beta_s(k) f_ta - delta(i_k, i_{k+1}) (1/r) f_sa
//! f_as psi_k = beta~_s(k) f_at - delta(i_k, i_{k+1}) (1/r) f_as
//! ```
//!
//! where `beta` and `beta~` depend on how `i_k` and `i_{k+1}` sit on the
//! cyclic quiver.

use std::sync::Arc;

use super::basis::FBasis;
use super::operator::{Column, SeminormalOperator, Side};
use crate::arith::{check_prime, Rational};
use crate::combin::{dominance_compare, Dominance, ResidueSeq, StdTableau};
use crate::error::{Error, Result};
use crate::par::Exec;

/// The coefficients `alpha`, `beta`, `beta~` for residues modulo `p`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CoeffSystem {
    pub p: u64,
}

impl CoeffSystem {
    pub fn new(p: u64) -> Result<CoeffSystem> {
        check_prime(p)?;
        Ok(CoeffSystem { p })
    }

    /// `r = c_s(k) - c_s(k+1)`; never zero for a standard tableau.
    pub fn r(&self, s: &StdTableau, k: usize) -> i64 {
        let c = s.contents();
        c[k - 1] - c[k]
    }

    /// `s s_k` when it is standard and differs from `s`.
    pub fn swapped(s: &StdTableau, k: usize) -> Option<StdTableau> {
        if s.column(k) == s.column(k + 1) {
            return None;
        }
        s.swap_adjacent(k)
    }

    pub fn alpha(&self, s: &StdTableau, k: usize) -> Rational {
        let Some(t) = CoeffSystem::swapped(s, k) else { return Rational::zero() };
        let r = self.r(s, k);
        match dominance_compare(&t, s).expect("same size") {
            Dominance::Less => Rational::one(),
            Dominance::Greater => Rational::new(r * r - 1, r * r),
            _ => unreachable!("an adjacent swap is comparable"),
        }
    }

    fn residue_gap(&self, s: &StdTableau, k: usize) -> i64 {
        let c = s.contents();
        (c[k - 1] - c[k]).rem_euclid(self.p as i64)
    }

    pub fn beta(&self, s: &StdTableau, k: usize) -> Rational {
        let a = self.alpha(s, k);
        if a.is_zero() {
            return a;
        }
        let r = self.r(s, k);
        let gap = self.residue_gap(s, k);
        if gap == 0 {
            a / Rational::from_int(1 - r)
        } else if gap == 1 {
            a * Rational::from_int(r)
        } else {
            a * Rational::new(r, 1 - r)
        }
    }

    pub fn beta_tilde(&self, s: &StdTableau, k: usize) -> Rational {
        let a = self.alpha(s, k);
        if a.is_zero() {
            return a;
        }
        let r = self.r(s, k);
        let gap = self.residue_gap(s, k);
        if gap == 0 {
            a / Rational::from_int(1 + r)
        } else if gap == self.p as i64 - 1 {
            -(a * Rational::from_int(r))
        } else {
            -(a * Rational::new(r, 1 + r))
        }
    }
}

/// The seminormal representation of the KLR generators on `TL_n` for a
/// fixed prime.
#[derive(Clone, Debug)]
pub struct KlrContext {
    pub n: usize,
    pub p: u64,
    pub coeffs: CoeffSystem,
    pub basis: Arc<FBasis>,
    pub exec: Exec,
}

impl KlrContext {
    pub fn new(n: usize, p: u64) -> Result<KlrContext> {
        KlrContext::with_exec(n, p, Exec::default())
    }

    pub fn with_exec(n: usize, p: u64, exec: Exec) -> Result<KlrContext> {
        let coeffs = CoeffSystem::new(p)?;
        Ok(KlrContext { n, p, coeffs, basis: FBasis::of(n), exec })
    }

    fn index_check(&self, l: usize, lo: usize, hi: usize) -> Result<()> {
        if l < lo || l > hi {
            return Err(Error::IndexRange { index: l, lo, hi });
        }
        Ok(())
    }

    pub fn identity(&self, side: Side) -> SeminormalOperator {
        SeminormalOperator::identity(side, self.basis.clone())
    }

    pub fn zero(&self, side: Side) -> SeminormalOperator {
        SeminormalOperator::zero(side, self.basis.clone())
    }

    /// Residue sequences of the basis tableaux, without repeats.
    pub fn residue_sequences(&self) -> Vec<ResidueSeq> {
        let mut v: Vec<ResidueSeq> =
            self.basis.tableaux().iter().map(|t| ResidueSeq { p: self.p, residues: t.residues(self.p) }).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn act_e(&self, i: &ResidueSeq, side: Side) -> Result<SeminormalOperator> {
        if i.len() != self.n {
            return Err(Error::SizeMismatch(i.len(), self.n));
        }
        let diag = self
            .basis
            .tableaux()
            .iter()
            .map(|t| if t.residues(self.p) == i.residues { Rational::one() } else { Rational::zero() })
            .collect();
        Ok(SeminormalOperator::diagonal(side, self.basis.clone(), diag))
    }

    /// `e(i)` for the residues of the one-column tableau.
    pub fn e_class(&self, side: Side) -> SeminormalOperator {
        self.act_e(&ResidueSeq::decreasing(self.n, self.p), side).expect("length n")
    }

    pub fn act_y(&self, l: usize, side: Side) -> Result<SeminormalOperator> {
        self.index_check(l, 1, self.n)?;
        let p = self.p as i64;
        let diag = (0..self.basis.len())
            .map(|j| {
                let c = self.basis.content(j, l);
                Rational::from_int(c - c.rem_euclid(p))
            })
            .collect();
        Ok(SeminormalOperator::diagonal(side, self.basis.clone(), diag))
    }

    pub fn act_psi(&self, k: usize, side: Side) -> Result<SeminormalOperator> {
        self.index_check(k, 1, self.n.saturating_sub(1))?;
        let basis = self.basis.clone();
        let cs = self.coeffs;
        Ok(SeminormalOperator::from_fn(side, basis.clone(), self.exec, |j| {
            let s = basis.tableau(j);
            let mut col: Column = Vec::new();
            if let Some(t) = CoeffSystem::swapped(s, k) {
                let b = match side {
                    Side::Left => cs.beta(s, k),
                    Side::Right => cs.beta_tilde(s, k),
                };
                col.push((basis.index_of(&t).expect("same size"), b));
            }
            let r = cs.r(s, k);
            if r.rem_euclid(cs.p as i64) == 0 {
                col.push((j, -Rational::new(1, r)));
            }
            col
        }))
    }

    /// `psi_{w_1} psi_{w_2} ...` as an algebra product.
    pub fn psi_word(&self, word: &[usize], side: Side) -> Result<SeminormalOperator> {
        let mut acc = self.identity(side);
        for &k in word {
            acc = acc.mul_with(&self.act_psi(k, side)?, self.exec);
        }
        Ok(acc)
    }
}
