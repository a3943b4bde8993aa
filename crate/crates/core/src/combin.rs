//! Two-column partitions and standard tableaux.
//!
//! A tableau is stored as its ballot sequence of column indices: entry `i`
//! sits in column `columns[i-1]`. The r-th entry (1-based) of column `c` has
//! content `c - r`.
//!
//! Enumeration order: tableaux of a fixed shape are sorted lexicographically
//! by column sequence. This is a linear extension of dominance (at the first
//! position where two comparable tableaux differ, the higher one has a 2), so
//! the first tableau is the column-reading tableau and the last is the
//! row-reading one.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::check_prime;
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", try_from = "[usize; 2]")]
pub struct TwoColPartition {
    pub l1: usize,
    pub l2: usize,
}

impl TwoColPartition {
    pub fn new(l1: usize, l2: usize) -> Result<TwoColPartition> {
        if l1 < l2 {
            return Err(Error::InvalidTableau(format!("({l1},{l2}) has l1 < l2")));
        }
        Ok(TwoColPartition { l1, l2 })
    }

    pub fn n(&self) -> usize {
        self.l1 + self.l2
    }

    /// Number of through strands of the half diagrams in the cell module.
    pub fn through(&self) -> usize {
        self.l1 - self.l2
    }

    /// `self` dominates `other` (more second-column boxes is higher).
    pub fn dominates(&self, other: &TwoColPartition) -> bool {
        self.l2 >= other.l2
    }
}

impl From<TwoColPartition> for [usize; 2] {
    fn from(p: TwoColPartition) -> Self {
        [p.l1, p.l2]
    }
}

impl TryFrom<[usize; 2]> for TwoColPartition {
    type Error = Error;
    fn try_from(v: [usize; 2]) -> Result<Self> {
        TwoColPartition::new(v[0], v[1])
    }
}

impl fmt::Display for TwoColPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.l1, self.l2)
    }
}

/// All two-column partitions of `n`, `l2` descending.
pub fn two_column_partitions(n: usize) -> Vec<TwoColPartition> {
    (0..=n / 2).rev().map(|l2| TwoColPartition { l1: n - l2, l2 }).collect()
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<u8>", try_from = "Vec<u8>")]
pub struct StdTableau {
    columns: Vec<u8>,
}

impl StdTableau {
    pub fn new(columns: Vec<u8>) -> Result<StdTableau> {
        let mut bal = 0i64;
        for (i, &c) in columns.iter().enumerate() {
            match c {
                1 => bal += 1,
                2 => bal -= 1,
                _ => return Err(Error::InvalidTableau(format!("entry {} has column {c}", i + 1))),
            }
            if bal < 0 {
                return Err(Error::InvalidTableau(format!("ballot condition fails at entry {}", i + 1)));
            }
        }
        Ok(StdTableau { columns })
    }

    pub(crate) fn from_columns_unchecked(columns: Vec<u8>) -> StdTableau {
        StdTableau { columns }
    }

    /// The one-column tableau of size `n`.
    pub fn one_column(n: usize) -> StdTableau {
        StdTableau { columns: vec![1; n] }
    }

    pub fn empty() -> StdTableau {
        StdTableau { columns: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[u8] {
        &self.columns
    }

    pub fn shape(&self) -> TwoColPartition {
        let l2 = self.columns.iter().filter(|&&c| c == 2).count();
        TwoColPartition { l1: self.n() - l2, l2 }
    }

    /// Column of entry `i` (1-based).
    pub fn column(&self, i: usize) -> u8 {
        self.columns[i - 1]
    }

    pub fn content(&self, i: usize) -> Result<i64> {
        if i == 0 || i > self.n() {
            return Err(Error::IndexRange { index: i, lo: 1, hi: self.n() });
        }
        Ok(self.contents()[i - 1])
    }

    pub fn contents(&self) -> Vec<i64> {
        let mut rows = [0i64; 2];
        self.columns
            .iter()
            .map(|&c| {
                rows[c as usize - 1] += 1;
                c as i64 - rows[c as usize - 1]
            })
            .collect()
    }

    pub fn residues(&self, p: u64) -> Vec<u64> {
        self.contents().iter().map(|&c| c.rem_euclid(p as i64) as u64).collect()
    }

    /// `self * s_k`: entries `k` and `k+1` exchanged; `None` if the result is
    /// not standard.
    pub fn swap_adjacent(&self, k: usize) -> Option<StdTableau> {
        let mut cols = self.columns.clone();
        cols.swap(k - 1, k);
        StdTableau::new(cols).ok()
    }

    /// The sub-tableau on entries `1..=m`.
    pub fn restrict(&self, m: usize) -> StdTableau {
        StdTableau { columns: self.columns[..m].to_vec() }
    }

    /// Parses a comma-separated column sequence such as `1,1,2`.
    pub fn parse(text: &str) -> Result<StdTableau> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(StdTableau::empty());
        }
        let cols = text
            .split(',')
            .map(|s| s.trim().parse::<u8>().map_err(|_| Error::Parse(format!("bad column index {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        StdTableau::new(cols)
    }
}

impl From<StdTableau> for Vec<u8> {
    fn from(t: StdTableau) -> Self {
        t.columns
    }
}

impl TryFrom<Vec<u8>> for StdTableau {
    type Error = Error;
    fn try_from(v: Vec<u8>) -> Result<Self> {
        StdTableau::new(v)
    }
}

impl fmt::Display for StdTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.columns.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

impl fmt::Debug for StdTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn ballot_sequences(n: usize, l2: Option<usize>) -> Vec<StdTableau> {
    fn rec(n: usize, ones: usize, twos: usize, l2: Option<usize>, cur: &mut Vec<u8>, out: &mut Vec<StdTableau>) {
        if cur.len() == n {
            if l2.is_none_or(|l| l == twos) {
                out.push(StdTableau { columns: cur.clone() });
            }
            return;
        }
        cur.push(1);
        rec(n, ones + 1, twos, l2, cur, out);
        cur.pop();
        if twos < ones && l2.is_none_or(|l| twos < l) {
            cur.push(2);
            rec(n, ones, twos + 1, l2, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 0, 0, l2, &mut Vec::with_capacity(n), &mut out);
    out
}

/// `Std(lambda)` in ascending dominance, lexicographic tie-break.
pub fn standard_tableaux(lambda: TwoColPartition) -> Vec<StdTableau> {
    let mut v = ballot_sequences(lambda.n(), Some(lambda.l2));
    v.sort();
    v
}

/// All two-column standard tableaux of size `n`: shapes in the order of
/// [`two_column_partitions`], each shape in the order of [`standard_tableaux`].
pub fn all_tableaux(n: usize) -> Vec<StdTableau> {
    two_column_partitions(n).into_iter().flat_map(standard_tableaux).collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Dominance {
    Less,
    Equal,
    Greater,
    Incomparable,
}

/// Dominance of tableaux via the shapes of all restrictions `t|<=m`.
pub fn dominance_compare(s: &StdTableau, t: &StdTableau) -> Result<Dominance> {
    if s.n() != t.n() {
        return Err(Error::SizeMismatch(s.n(), t.n()));
    }
    let (mut a, mut b) = (0usize, 0usize);
    let (mut le, mut ge) = (true, true);
    for (&x, &y) in s.columns.iter().zip(&t.columns) {
        a += (x == 2) as usize;
        b += (y == 2) as usize;
        match a.cmp(&b) {
            Ordering::Less => ge = false,
            Ordering::Greater => le = false,
            Ordering::Equal => {}
        }
    }
    Ok(match (le, ge) {
        (true, true) => Dominance::Equal,
        (true, false) => Dominance::Less,
        (false, true) => Dominance::Greater,
        (false, false) => Dominance::Incomparable,
    })
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ResidueSeq {
    pub p: u64,
    pub residues: Vec<u64>,
}

impl ResidueSeq {
    /// The residues of the one-column tableau: `(0, -1, ..., -n+1) mod p`.
    pub fn decreasing(n: usize, p: u64) -> ResidueSeq {
        ResidueSeq { p, residues: (0..n).map(|i| (-(i as i64)).rem_euclid(p as i64) as u64).collect() }
    }

    pub fn len(&self) -> usize {
        self.residues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty()
    }

    /// The sequence with positions `k` and `k+1` exchanged (1-based `k`).
    pub fn swap(&self, k: usize) -> ResidueSeq {
        let mut r = self.residues.clone();
        r.swap(k - 1, k);
        ResidueSeq { p: self.p, residues: r }
    }
}

pub fn residue_sequence(t: &StdTableau, p: u64) -> Result<ResidueSeq> {
    check_prime(p)?;
    Ok(ResidueSeq { p, residues: t.residues(p) })
}

/// All tableaux of the same size whose residue sequence equals that of `t`.
pub fn p_class(t: &StdTableau, p: u64) -> Result<Vec<StdTableau>> {
    check_prime(p)?;
    let target = t.residues(p);
    let mut v: Vec<StdTableau> =
        ballot_sequences(t.n(), None).into_iter().filter(|s| s.residues(p) == target).collect();
    v.sort_by(|a, b| a.shape().l2.cmp(&b.shape().l2).reverse().then_with(|| a.cmp(b)));
    Ok(v)
}

/// Residue classes partitioning `Std(Par_n)`, each sorted as in [`all_tableaux`].
pub fn p_classes(n: usize, p: u64) -> Result<Vec<(ResidueSeq, Vec<StdTableau>)>> {
    check_prime(p)?;
    let mut map: std::collections::BTreeMap<Vec<u64>, Vec<StdTableau>> = Default::default();
    for t in all_tableaux(n) {
        map.entry(t.residues(p)).or_default().push(t);
    }
    Ok(map.into_iter().map(|(r, ts)| (ResidueSeq { p, residues: r }, ts)).collect())
}

/// Alternating runs `D_1, M_1, ..., D_k, M_k` of a tableau, as `(start, len)`
/// with 1-based starts. `M_k` may have length zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlockDecomposition {
    pub d: Vec<(usize, usize)>,
    pub m: Vec<(usize, usize)>,
}

impl BlockDecomposition {
    pub fn k(&self) -> usize {
        self.d.len()
    }

    pub fn d_sizes(&self) -> Vec<usize> {
        self.d.iter().map(|b| b.1).collect()
    }

    pub fn m_sizes(&self) -> Vec<usize> {
        self.m.iter().map(|b| b.1).collect()
    }

    /// `n_1 = d_1`, `n_i = (d_1 + ... + d_i) - (m_1 + ... + m_{i-1})`.
    pub fn n_sizes(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.k());
        let (mut ds, mut ms) = (0usize, 0usize);
        for i in 0..self.k() {
            ds += self.d[i].1;
            out.push(ds - ms);
            ms += self.m[i].1;
        }
        out
    }

    pub fn to_tableau(&self) -> StdTableau {
        let mut cols = Vec::new();
        for (d, m) in self.d.iter().zip(&self.m) {
            cols.extend(std::iter::repeat_n(1, d.1));
            cols.extend(std::iter::repeat_n(2, m.1));
        }
        StdTableau::from_columns_unchecked(cols)
    }
}

pub fn block_decomposition(t: &StdTableau) -> BlockDecomposition {
    let mut d = Vec::new();
    let mut m = Vec::new();
    let cols = t.columns();
    let mut i = 0;
    while i < cols.len() {
        let start = i;
        while i < cols.len() && cols[i] == 1 {
            i += 1;
        }
        d.push((start + 1, i - start));
        let start = i;
        while i < cols.len() && cols[i] == 2 {
            i += 1;
        }
        m.push((start + 1, i - start));
    }
    BlockDecomposition { d, m }
}

/// Base-`p` digits of `v`, least significant first.
pub fn base_p_digits(mut v: u64, p: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while v > 0 {
        out.push(v % p);
        v /= p;
    }
    out
}

/// An element of the index set together with its signs; `signs[i]` belongs
/// to digit `a_i` (`+1`, `-1`, or `0` for a zero digit). The leading digit
/// always has sign `+1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IndexEntry {
    pub m: usize,
    pub signs: Vec<i8>,
}

/// `{a_k p^k +- a_{k-1} p^{k-1} +- ... +- a_0} - 1`, sorted descending.
pub fn index_set_in(n: usize, p: u64) -> Result<Vec<IndexEntry>> {
    check_prime(p)?;
    let digits = base_p_digits(n as u64 + 1, p);
    let k = digits.len() - 1;
    let free: Vec<usize> = (0..k).filter(|&i| digits[i] != 0).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << free.len()) {
        let mut signs = vec![0i8; k + 1];
        signs[k] = 1;
        for (j, &i) in free.iter().enumerate() {
            signs[i] = if mask >> j & 1 == 0 { 1 } else { -1 };
        }
        let v: i64 = (0..=k).map(|i| signs[i] as i64 * digits[i] as i64 * (p as i64).pow(i as u32)).sum();
        out.push(IndexEntry { m: (v - 1) as usize, signs });
    }
    out.sort_by_key(|e| std::cmp::Reverse(e.m));
    Ok(out)
}

/// The tableau `t_m`: runs of equal sign (zero digits join either run) give
/// the block sizes; only `D_1` carries the `-1`.
pub fn tableau_from_index(m: usize, n: usize, p: u64) -> Result<StdTableau> {
    let entry = index_set_in(n, p)?.into_iter().find(|e| e.m == m).ok_or(Error::NotInIndexSet { m, n, p })?;
    let digits = base_p_digits(n as u64 + 1, p);
    let mut runs: Vec<(i8, u64)> = Vec::new();
    for i in (0..digits.len()).rev() {
        let val = digits[i] * p.pow(i as u32);
        let s = entry.signs[i];
        match runs.last_mut() {
            Some(last) if s == 0 || s == last.0 => last.1 += val,
            _ => runs.push((s, val)),
        }
    }
    let mut cols = Vec::with_capacity(n);
    for (j, &(s, val)) in runs.iter().enumerate() {
        let len = if j == 0 { val - 1 } else { val } as usize;
        let c = if s > 0 { 1 } else { 2 };
        cols.extend(std::iter::repeat_n(c, len));
    }
    StdTableau::new(cols)
}

/// One level of the base-`p` ladder: `n = (p-1) + n1`, `n1 = p*n2 + r`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct RadixLevel {
    pub n: usize,
    pub n1: usize,
    pub n2: usize,
    pub r: usize,
}

impl RadixLevel {
    pub fn of(n: usize, p: u64) -> Result<RadixLevel> {
        let p = p as usize;
        if n + 1 < p {
            return Err(Error::TooSmall { n, p: p as u64 });
        }
        let n1 = n + 1 - p;
        Ok(RadixLevel { n, n1, n2: n1 / p, r: n1 % p })
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RadixChain {
    /// `a_k, ..., a_0`.
    pub digits: Vec<u64>,
    pub levels: Vec<RadixLevel>,
}

/// Digits of `n+1` and the ladder `n^{i+1} = n2^i`; there are as many
/// levels as digits minus one, ending with `n2^{k-1} = a_k - 1`.
pub fn radix_chain(n: usize, p: u64) -> Result<RadixChain> {
    check_prime(p)?;
    let mut digits = base_p_digits(n as u64 + 1, p);
    let k = digits.len() - 1;
    let mut levels = Vec::with_capacity(k);
    let mut cur = n;
    for _ in 0..k {
        let lv = RadixLevel::of(cur, p)?;
        cur = lv.n2;
        levels.push(lv);
    }
    digits.reverse();
    Ok(RadixChain { digits, levels })
}

/// The collapse bijection on the class of the one-column tableau: entry `i`
/// of the image sits in the column shared by block `B_i = [ip, (i+1)p - 1]`;
/// a trailing block of length `r > 0` yields its column as the tag.
pub fn collapse_map(t: &StdTableau, p: u64) -> Result<(StdTableau, Option<u8>)> {
    check_prime(p)?;
    let n = t.n();
    if t.residues(p) != ResidueSeq::decreasing(n, p).residues {
        return Err(Error::NotInClass);
    }
    let lv = RadixLevel::of(n, p)?;
    let p = p as usize;
    let block_col = |start: usize, len: usize| -> Result<u8> {
        let c = t.column(start);
        if (start..start + len).any(|j| t.column(j) != c) {
            return Err(Error::NotInClass);
        }
        Ok(c)
    };
    let mut cols = Vec::with_capacity(lv.n2);
    for i in 1..=lv.n2 {
        cols.push(block_col(i * p, p)?);
    }
    let tag = if lv.r > 0 { Some(block_col((lv.n2 + 1) * p, lv.r)?) } else { None };
    Ok((StdTableau::new(cols)?, tag))
}
