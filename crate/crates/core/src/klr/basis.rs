//! Indexing of the seminormal basis `{f_st}` and vectors expanded in it.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::arith::Rational;
use crate::combin::{all_tableaux, StdTableau};
use crate::error::{Error, Result};

/// All two-column tableaux of size `n` in the order of [`all_tableaux`],
/// with their contents precomputed.
#[derive(Debug)]
pub struct FBasis {
    n: usize,
    tableaux: Vec<StdTableau>,
    index: HashMap<StdTableau, usize>,
    contents: Vec<Vec<i64>>,
}

impl FBasis {
    /// Shared basis for `n`, built once per process.
    pub fn of(n: usize) -> Arc<FBasis> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<FBasis>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        cache
            .lock()
            .expect("basis cache")
            .entry(n)
            .or_insert_with(|| {
                let tableaux = all_tableaux(n);
                let index = tableaux.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
                let contents = tableaux.iter().map(StdTableau::contents).collect();
                Arc::new(FBasis { n, tableaux, index, contents })
            })
            .clone()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.tableaux.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tableaux.is_empty()
    }

    pub fn tableau(&self, i: usize) -> &StdTableau {
        &self.tableaux[i]
    }

    pub fn tableaux(&self) -> &[StdTableau] {
        &self.tableaux
    }

    pub fn index_of(&self, t: &StdTableau) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// Content of entry `l` (1-based) of tableau number `i`.
    pub fn content(&self, i: usize, l: usize) -> i64 {
        self.contents[i][l - 1]
    }

    /// Every index pair `(s, t)` of equal shape.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, s) in self.tableaux.iter().enumerate() {
            for (j, t) in self.tableaux.iter().enumerate() {
                if s.shape() == t.shape() {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// A vector in the basis `{f_st}`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FVector {
    pub coords: BTreeMap<(StdTableau, StdTableau), Rational>,
}

impl FVector {
    pub fn zero() -> FVector {
        FVector::default()
    }

    pub fn basis(s: &StdTableau, t: &StdTableau) -> Result<FVector> {
        if s.shape() != t.shape() {
            return Err(Error::ShapeMismatch);
        }
        let mut v = FVector::zero();
        v.coords.insert((s.clone(), t.clone()), Rational::one());
        Ok(v)
    }

    pub fn coeff(&self, s: &StdTableau, t: &StdTableau) -> Rational {
        self.coords.get(&(s.clone(), t.clone())).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, s: StdTableau, t: StdTableau, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = (s, t);
        let e = self.coords.entry(key.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.coords.remove(&key);
        }
    }

    pub fn add(&self, o: &FVector) -> FVector {
        let mut out = self.clone();
        for ((s, t), c) in &o.coords {
            out.add_term(s.clone(), t.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &Rational) -> FVector {
        let mut out = FVector::zero();
        for ((s, t), c) in &self.coords {
            out.add_term(s.clone(), t.clone(), c * k);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }
}
